use std::collections::HashSet;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// An interned generator name. Cheap to copy; ordered by name.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(&'static str);

fn interner() -> &'static Mutex<HashSet<&'static str>> {
    static TABLE: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashSet::new()))
}

impl Symbol {
    pub fn new(name: &str) -> Symbol {
        let mut table = interner().lock().expect("symbol table poisoned");
        if let Some(s) = table.get(name) {
            return Symbol(s);
        }
        let leaked: &'static str = Box::leak(name.to_string().into_boxed_str());
        table.insert(leaked);
        Symbol(leaked)
    }

    pub fn as_str(&self) -> &'static str {
        self.0
    }

    /// The name used when printing: `da2` prints as `d(a2)`, the
    /// localization symbol as `Ninv`.
    pub fn display_name(&self) -> String {
        let s = self.0;
        if let Some(rest) = s.strip_prefix('d') {
            if rest.starts_with('a') {
                return format!("d({rest})");
            }
        }
        if s == "ninv" {
            return "Ninv".to_string();
        }
        s.to_string()
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// Shorthand for `Symbol::new`.
pub fn sym(name: &str) -> Symbol {
    Symbol::new(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let a = Symbol::new("a0");
        let b = Symbol::new(&String::from("a0"));
        assert_eq!(a, b);
        assert!(std::ptr::eq(a.as_str(), b.as_str()));
        assert!(Symbol::new("a0") < Symbol::new("a1"));
    }

    #[test]
    fn display_names() {
        assert_eq!(sym("da3").display_name(), "d(a3)");
        assert_eq!(sym("ninv").display_name(), "Ninv");
        assert_eq!(sym("w0").display_name(), "w0");
    }
}
