use std::collections::HashMap;

use super::poly::{NCPoly, Word};
use super::symbol::Symbol;
use super::AlgebraError;
use crate::scalar::Coefficient;

pub const DEFAULT_STEP_LIMIT: usize = 100_000;

/// Reads `QCALC_STEP_LIMIT`, falling back to the default.
pub fn step_limit_from_env() -> usize {
    std::env::var("QCALC_STEP_LIMIT")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_STEP_LIMIT)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: Symbol,
    /// 0 for functions, 1 for forms.
    pub grade: u8,
    /// Position in the normal order; higher ranks sort to the left.
    pub rank: i32,
}

impl Generator {
    pub fn new(id: &str, grade: u8, rank: i32) -> Generator {
        Generator { id: Symbol::new(id), grade, rank }
    }
}

/// `lhs[0]·lhs[1] ↦ rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule<C> {
    pub lhs: (Symbol, Symbol),
    pub rhs: NCPoly<C>,
}

impl<C: Coefficient> RewriteRule<C> {
    pub fn new(x: &str, y: &str, rhs: NCPoly<C>) -> Self {
        RewriteRule { lhs: (Symbol::new(x), Symbol::new(y)), rhs }
    }

    pub fn lhs_word(&self) -> Word {
        Word::from_symbols([self.lhs.0, self.lhs.1])
    }

    /// `lhs − rhs`, the relation this rule encodes.
    pub fn relation(&self) -> NCPoly<C> {
        NCPoly::word(self.lhs_word()) - self.rhs.clone()
    }

    pub fn label(&self) -> String {
        format!("{}*{}", self.lhs.0, self.lhs.1)
    }
}

/// Total grade of a polynomial: common to every term, or mixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grade {
    Pure(u32),
    Mixed,
}

/// A generator list and a quadratic rewriting system over it.
#[derive(Clone, Debug)]
pub struct Presentation<C> {
    pub name: String,
    pub description: String,
    generators: Vec<Generator>,
    rules: Vec<RewriteRule<C>>,
    gen_index: HashMap<Symbol, usize>,
    rule_index: HashMap<(Symbol, Symbol), usize>,
    step_limit: usize,
}

struct Memo<C> {
    words: HashMap<Word, NCPoly<C>>,
    steps: usize,
}

/// An overlap word whose two reduction orders disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct OverlapFailure<C> {
    pub word: Word,
    pub left_first: NCPoly<C>,
    pub right_first: NCPoly<C>,
    pub residual: NCPoly<C>,
}

impl<C: Coefficient> Presentation<C> {
    /// Validates and indexes a presentation.
    pub fn new(
        name: &str,
        generators: Vec<Generator>,
        rules: Vec<RewriteRule<C>>,
    ) -> Result<Self, AlgebraError> {
        let mut gen_index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if g.grade > 1 {
                return Err(AlgebraError::InvalidPresentation(format!("generator {} has grade {}", g.id, g.grade)));
            }
            if gen_index.insert(g.id, i).is_some() {
                return Err(AlgebraError::InvalidPresentation(format!("duplicate generator {}", g.id)));
            }
        }
        let mut pres = Presentation {
            name: name.to_string(),
            description: String::new(),
            generators,
            rules: Vec::new(),
            gen_index,
            rule_index: HashMap::new(),
            step_limit: step_limit_from_env(),
        };
        for r in rules {
            pres.push_rule(r)?;
        }
        Ok(pres)
    }

    fn push_rule(&mut self, r: RewriteRule<C>) -> Result<(), AlgebraError> {
        let invalid = |m: String| Err(AlgebraError::InvalidPresentation(m));
        for s in [r.lhs.0, r.lhs.1] {
            if !self.gen_index.contains_key(&s) {
                return invalid(format!("rule {} uses undeclared generator {s}", r.label()));
            }
        }
        let lhs_grade = self.word_grade(&r.lhs_word());
        for (w, _) in r.rhs.terms() {
            if let Some(s) = w.iter().find(|s| !self.gen_index.contains_key(s)) {
                return invalid(format!("rule {} uses undeclared generator {s}", r.label()));
            }
            if w.degree() > 2 {
                return invalid(format!("rule {} raises degree", r.label()));
            }
            if self.word_grade(w) != lhs_grade {
                return invalid(format!("rule {} does not preserve grade", r.label()));
            }
            if w == &r.lhs_word() {
                return invalid(format!("rule {} reproduces its own left-hand side", r.label()));
            }
        }
        if self.rule_index.insert(r.lhs, self.rules.len()).is_some() {
            return invalid(format!("two rules for {}", r.label()));
        }
        self.rules.push(r);
        Ok(())
    }

    pub fn with_description(mut self, d: &str) -> Self {
        self.description = d.to_string();
        self
    }

    pub fn with_step_limit(mut self, limit: usize) -> Self {
        self.step_limit = limit;
        self
    }

    pub fn step_limit(&self) -> usize {
        self.step_limit
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn rules(&self) -> &[RewriteRule<C>] {
        &self.rules
    }

    pub fn generator(&self, s: Symbol) -> Option<&Generator> {
        self.gen_index.get(&s).map(|&i| &self.generators[i])
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.gen_index.contains_key(&Symbol::new(name))
    }

    pub fn rule(&self, x: &str, y: &str) -> Option<&RewriteRule<C>> {
        self.rule_index.get(&(Symbol::new(x), Symbol::new(y))).map(|&i| &self.rules[i])
    }

    pub fn rank(&self, s: Symbol) -> i32 {
        self.generator(s).map(|g| g.rank).unwrap_or(i32::MIN)
    }

    pub fn word_grade(&self, w: &Word) -> u32 {
        w.iter().map(|s| self.generator(*s).map(|g| g.grade as u32).unwrap_or(0)).sum()
    }

    pub fn grade_of(&self, p: &NCPoly<C>) -> Grade {
        let mut grade = None;
        for (w, _) in p.terms() {
            let g = self.word_grade(w);
            match grade {
                None => grade = Some(g),
                Some(h) if h != g => return Grade::Mixed,
                _ => {}
            }
        }
        Grade::Pure(grade.unwrap_or(0))
    }

    /// Adds further rules after construction (used to assemble combined
    /// universes).
    pub fn extend(
        &self,
        name: &str,
        generators: Vec<Generator>,
        rules: Vec<RewriteRule<C>>,
    ) -> Result<Self, AlgebraError> {
        let mut gens = self.generators.clone();
        gens.extend(generators);
        let mut all = self.rules.clone();
        all.extend(rules);
        Ok(Presentation::new(name, gens, all)?.with_step_limit(self.step_limit))
    }

    /// Replaces the rule for an lhs pair, keeping its position.
    pub fn replace_rule(&mut self, rule: RewriteRule<C>) -> Result<(), AlgebraError> {
        match self.rule_index.get(&rule.lhs) {
            Some(&i) => {
                self.rules[i] = rule;
                Ok(())
            }
            None => Err(AlgebraError::InvalidPresentation(format!("no rule for {}", rule.label()))),
        }
    }

    /// Every generator occurring in `p` must be declared.
    pub fn check_universe(&self, p: &NCPoly<C>) -> Result<(), AlgebraError> {
        for s in p.symbols() {
            if !self.gen_index.contains_key(&s) {
                return Err(AlgebraError::UnknownSymbol { symbol: s.display_name(), universe: self.name.clone() });
            }
        }
        Ok(())
    }

    /// The leftmost adjacent pair that some rule rewrites.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        (0..w.degree().saturating_sub(1)).find_map(|i| self.rule_index.get(&(w[i], w[i + 1])).map(|&r| (i, r)))
    }

    /// Reduces `p` until no word contains a rule lhs. A word `x·w` is
    /// reduced by first bringing `w` to normal form and then moving `x` in
    /// from the left; results for words are memoized within the call. A
    /// step is one rule application to a distinct word.
    pub fn normal_form(&self, p: &NCPoly<C>) -> Result<NCPoly<C>, AlgebraError> {
        let mut memo = Memo { words: HashMap::new(), steps: 0 };
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let nf = self.reduce_word(w, &mut memo)?;
            out.add_scaled(&nf, c);
        }
        Ok(out)
    }

    fn reduce_word(&self, w: &Word, memo: &mut Memo<C>) -> Result<NCPoly<C>, AlgebraError> {
        if w.degree() < 2 {
            return Ok(NCPoly::word(w.clone()));
        }
        if let Some(p) = memo.words.get(w) {
            return Ok(p.clone());
        }
        let tail = self.reduce_word(&w.slice(1, w.degree()), memo)?;
        let mut out = NCPoly::zero();
        for (v, c) in tail.terms() {
            let p = self.insert_letter(w[0], v, memo)?;
            out.add_scaled(&p, c);
        }
        memo.words.insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Normal form of `x·v` for a normal word `v`.
    fn insert_letter(&self, x: Symbol, v: &Word, memo: &mut Memo<C>) -> Result<NCPoly<C>, AlgebraError> {
        let xv = Word::from_symbols([x]).concat(v);
        let Some(&r) = v.first().and_then(|&y| self.rule_index.get(&(x, y))) else {
            return Ok(NCPoly::word(xv));
        };
        if let Some(p) = memo.words.get(&xv) {
            return Ok(p.clone());
        }
        memo.steps += 1;
        if memo.steps > self.step_limit {
            return Err(AlgebraError::StepLimit { limit: self.step_limit, universe: self.name.clone() });
        }
        let rest = v.slice(1, v.degree());
        let mut out = NCPoly::zero();
        for (u, c) in self.rules[r].rhs.terms() {
            let p = self.reduce_word(&u.concat(&rest), memo)?;
            out.add_scaled(&p, c);
        }
        memo.words.insert(xv, out.clone());
        Ok(out)
    }

    pub fn normal_form_word(&self, w: &Word) -> Result<NCPoly<C>, AlgebraError> {
        self.normal_form(&NCPoly::word(w.clone()))
    }

    /// Normal form of a formal product.
    pub fn mul(&self, a: &NCPoly<C>, b: &NCPoly<C>) -> Result<NCPoly<C>, AlgebraError> {
        self.normal_form(&a.nc_mul(b))
    }

    pub fn is_normal(&self, p: &NCPoly<C>) -> bool {
        p.terms().all(|(w, _)| self.find_redex(w).is_none())
    }

    pub fn nc_equal(&self, a: &NCPoly<C>, b: &NCPoly<C>) -> Result<bool, AlgebraError> {
        Ok(self.normal_form(&(a - b))?.is_zero())
    }

    /// One rewrite at a chosen position, followed by full reduction.
    fn reduce_at(&self, w: &Word, pos: usize) -> Result<NCPoly<C>, AlgebraError> {
        let r = self.rule_index[&(w[pos], w[pos + 1])];
        let mut p = NCPoly::zero();
        for (rw, rc) in self.rules[r].rhs.terms() {
            p.add_term(w.splice(pos, pos + 2, rw), rc.clone());
        }
        self.normal_form(&p)
    }

    /// Resolves every overlap `x·y·z` with `(x,y)` and `(y,z)` both rule
    /// left-hand sides, in both orders; returns those that disagree.
    pub fn check_local_confluence(&self) -> Result<Vec<OverlapFailure<C>>, AlgebraError> {
        let mut failures = Vec::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                if r1.lhs.1 != r2.lhs.0 {
                    continue;
                }
                let w = Word::from_symbols([r1.lhs.0, r1.lhs.1, r2.lhs.1]);
                let left_first = self.reduce_at(&w, 0)?;
                let right_first = self.reduce_at(&w, 1)?;
                let residual = &left_first - &right_first;
                if !residual.is_zero() {
                    failures.push(OverlapFailure { word: w, left_first, right_first, residual });
                }
            }
        }
        failures.sort_by(|a, b| a.word.cmp(&b.word));
        Ok(failures)
    }

    /// Number of overlap words the confluence check examines.
    pub fn overlap_count(&self) -> usize {
        self.rules.iter().map(|r1| self.rules.iter().filter(|r2| r1.lhs.1 == r2.lhs.0).count()).sum()
    }

    /// Applies `f` to every rule coefficient.
    pub fn map_coeffs<D: Coefficient>(&self, name: &str, f: impl Fn(&C) -> D) -> Result<Presentation<D>, AlgebraError> {
        let rules = self
            .rules
            .iter()
            .map(|r| RewriteRule { lhs: r.lhs, rhs: r.rhs.map_coeffs(&f) })
            .collect();
        Ok(Presentation::new(name, self.generators.clone(), rules)?
            .with_step_limit(self.step_limit)
            .with_description(&self.description))
    }

    /// Sort key used when printing: degree, then ranks from the left,
    /// highest first.
    pub fn display_key(&self, w: &Word) -> (usize, Vec<i32>) {
        (w.degree(), w.iter().map(|s| self.rank(*s)).collect())
    }

    pub fn render(&self, p: &NCPoly<C>, unicode: bool) -> String {
        p.render_by(unicode, |w| self.display_key(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentScalar;

    type P = NCPoly<LaurentScalar>;

    fn commutative(n: usize) -> Presentation<LaurentScalar> {
        let gens = (0..n).map(|k| Generator::new(&format!("x{k}"), 0, k as i32)).collect();
        let mut rules = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (xi, xj) = (format!("x{i}"), format!("x{j}"));
                rules.push(RewriteRule::new(&xi, &xj, P::word(Word::parse(&[&xj, &xi]))));
            }
        }
        Presentation::new("comm", gens, rules).unwrap()
    }

    #[test]
    fn sorts_commutative_words() {
        let p = commutative(3);
        let nf = p.normal_form(&P::word(Word::parse(&["x0", "x1", "x2", "x0"]))).unwrap();
        assert_eq!(nf, P::word(Word::parse(&["x2", "x1", "x0", "x0"])));
        assert!(p.check_local_confluence().unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_rules() {
        let gens = vec![Generator::new("x", 0, 0), Generator::new("y", 1, 1)];
        let bad = RewriteRule::new("x", "y", P::word(Word::parse(&["x", "x"])));
        assert!(Presentation::new("bad", gens.clone(), vec![bad]).is_err());
        let undeclared = RewriteRule::new("x", "z", P::word(Word::parse(&["x", "x"])));
        assert!(Presentation::new("bad", gens.clone(), vec![undeclared]).is_err());
        let r = RewriteRule::new("x", "y", P::word(Word::parse(&["y", "x"])));
        assert!(Presentation::new("dup", gens, vec![r.clone(), r]).is_err());
    }

    #[test]
    fn step_limit_fires_on_loops() {
        let gens = vec![Generator::new("x", 0, 0), Generator::new("y", 0, 1)];
        let rules = vec![
            RewriteRule::new("x", "y", P::word(Word::parse(&["y", "x"]))),
            RewriteRule::new("y", "x", P::word(Word::parse(&["x", "y"]))),
        ];
        let p = Presentation::new("loop", gens, rules).unwrap().with_step_limit(50);
        let err = p.normal_form(&P::word(Word::parse(&["x", "y"]))).unwrap_err();
        assert!(matches!(err, AlgebraError::StepLimit { limit: 50, .. }));
    }

    #[test]
    fn grades() {
        let gens = vec![Generator::new("a0", 0, 0), Generator::new("da0", 1, 4)];
        let p: Presentation<LaurentScalar> = Presentation::new("g", gens, vec![]).unwrap();
        assert_eq!(p.grade_of(&P::word(Word::parse(&["a0", "a0"]))), Grade::Pure(0));
        assert_eq!(p.grade_of(&P::word(Word::parse(&["da0", "a0"]))), Grade::Pure(1));
        assert_eq!(p.grade_of(&(P::var("a0") + P::var("da0"))), Grade::Mixed);
    }
}
