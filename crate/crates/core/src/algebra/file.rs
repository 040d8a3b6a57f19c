//! JSON presentation files.

use serde::{Deserialize, Serialize};

use super::poly::{NCPoly, Word};
use super::presentation::{Generator, Presentation, RewriteRule};
use super::symbol::Symbol;
use super::AlgebraError;
use crate::scalar::LaurentScalar;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PresentationFile {
    pub name: String,
    pub generators: Vec<GeneratorEntry>,
    pub rules: Vec<RuleEntry>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct GeneratorEntry {
    pub id: String,
    pub grade: u8,
    pub rank: i32,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RuleEntry {
    pub lhs: Vec<String>,
    pub rhs: Vec<TermEntry>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermEntry {
    pub word: Vec<String>,
    pub coeff: String,
}

impl PresentationFile {
    pub fn from_presentation(p: &Presentation<LaurentScalar>) -> PresentationFile {
        let generators = p
            .generators()
            .iter()
            .map(|g| GeneratorEntry { id: g.id.as_str().to_string(), grade: g.grade, rank: g.rank })
            .collect();
        let rules = p
            .rules()
            .iter()
            .map(|r| RuleEntry {
                lhs: vec![r.lhs.0.as_str().to_string(), r.lhs.1.as_str().to_string()],
                rhs: r
                    .rhs
                    .terms()
                    .map(|(w, c)| TermEntry {
                        word: w.iter().map(|s| s.as_str().to_string()).collect(),
                        coeff: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        PresentationFile { name: p.name.clone(), generators, rules }
    }

    pub fn to_presentation(&self) -> Result<Presentation<LaurentScalar>, AlgebraError> {
        let generators = self.generators.iter().map(|g| Generator::new(&g.id, g.grade, g.rank)).collect();
        let mut rules = Vec::new();
        for r in &self.rules {
            if r.lhs.len() != 2 {
                return Err(AlgebraError::File(format!("rule lhs {:?} must have length 2", r.lhs)));
            }
            let mut rhs = NCPoly::zero();
            for t in &r.rhs {
                let c: LaurentScalar =
                    t.coeff.parse().map_err(|e| AlgebraError::File(format!("coefficient '{}': {e}", t.coeff)))?;
                rhs.add_term(Word::from_symbols(t.word.iter().map(|s| Symbol::new(s))), c);
            }
            rules.push(RewriteRule::new(&r.lhs[0], &r.lhs[1], rhs));
        }
        Presentation::new(&self.name, generators, rules)
    }
}

/// Canonical JSON text, newline-terminated.
pub fn dump_presentation(p: &Presentation<LaurentScalar>) -> String {
    let mut s = serde_json::to_string_pretty(&PresentationFile::from_presentation(p)).expect("serializable");
    s.push('\n');
    s
}

pub fn load_presentation(text: &str) -> Result<Presentation<LaurentScalar>, AlgebraError> {
    let file: PresentationFile = serde_json::from_str(text).map_err(|e| AlgebraError::File(e.to_string()))?;
    file.to_presentation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational;

    #[test]
    fn roundtrip_is_byte_identical() {
        let gens = vec![Generator::new("x", 0, 0), Generator::new("y", 0, 1)];
        let c = (LaurentScalar::q() + LaurentScalar::q_pow(-1)).scale(&GaussRational::from_ratio(1, 2));
        let rhs = NCPoly::term(Word::parse(&["y", "x"]), c) + NCPoly::term(Word::parse(&["y", "y"]), LaurentScalar::i());
        let p = Presentation::new("demo", gens, vec![RewriteRule::new("x", "y", rhs)]).unwrap();
        let text = dump_presentation(&p);
        assert!(text.contains("\"coeff\": \"(1/2)*q + (1/2)*q^-1\""));
        let back = load_presentation(&text).unwrap();
        assert_eq!(dump_presentation(&back), text);
    }

    #[test]
    fn bad_files_are_rejected() {
        assert!(load_presentation("{").is_err());
        let bad = r#"{"name":"b","generators":[{"id":"x","grade":0,"rank":0}],"rules":[{"lhs":["x"],"rhs":[]}]}"#;
        assert!(load_presentation(bad).is_err());
        let bad_coeff = r#"{"name":"b","generators":[{"id":"x","grade":0,"rank":0},{"id":"y","grade":0,"rank":1}],
            "rules":[{"lhs":["x","y"],"rhs":[{"word":["y","x"],"coeff":"1/"}]}]}"#;
        assert!(load_presentation(bad_coeff).is_err());
    }
}
