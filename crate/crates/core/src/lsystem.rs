//! Parallel string rewriting (L-systems) and the plain-text spec format.
//!
//! Spec files are line-oriented:
//!
//! ```text
//! # 3D Hilbert curve
//! axiom: A
//! rule: A -> B-F+CFC+F-D&F^D-F+&&CFC+F+B//
//! angle: 90
//! iterations: 2
//! ```
//!
//! `rule:` may repeat; `angle:`, `iterations:` and `alphabet:` are optional.
//! Everything after `#` on a line is ignored.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::turtle::COMMANDS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `axiom:` line")]
    MissingAxiom,
    #[error("unsupported angle {0}: only 90 degree turns are available")]
    UnsupportedAngle(String),
    #[error("symbol `{0}` is neither in the alphabet nor a turtle command")]
    UnknownSymbol(char),
    #[error("expansion exceeds {limit} symbols")]
    TooLong { limit: usize },
}

/// An L-system with 90 degree turtle turns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSystem {
    axiom: String,
    rules: BTreeMap<char, String>,
    alphabet: BTreeSet<char>,
    /// Iteration count suggested by the spec file, if any.
    pub iterations: Option<usize>,
}

impl LSystem {
    /// Builds a system whose alphabet is every non-command symbol used.
    pub fn new(axiom: &str, rules: impl IntoIterator<Item = (char, String)>) -> Self {
        let rules: BTreeMap<char, String> = rules.into_iter().collect();
        let alphabet = rules
            .keys()
            .copied()
            .chain(axiom.chars())
            .chain(rules.values().flat_map(|s| s.chars()))
            .filter(|c| !COMMANDS.contains(c))
            .collect();
        LSystem {
            axiom: axiom.to_string(),
            rules,
            alphabet,
            iterations: None,
        }
    }

    pub fn axiom(&self) -> &str {
        &self.axiom
    }

    pub fn rules(&self) -> &BTreeMap<char, String> {
        &self.rules
    }

    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    /// Rewrites every symbol simultaneously, `iterations` times. Symbols
    /// without a rule are copied unchanged.
    pub fn expand(&self, iterations: usize) -> String {
        self.expand_limited(iterations, usize::MAX)
            .expect("unbounded expansion cannot exceed its limit")
    }

    /// [`expand`](Self::expand), giving up once the string would grow past
    /// `limit` symbols.
    pub fn expand_limited(&self, iterations: usize, limit: usize) -> Result<String, SpecError> {
        let mut cur: Vec<char> = self.axiom.chars().collect();
        for _ in 0..iterations {
            let mut next = Vec::with_capacity(cur.len().saturating_mul(2).min(limit));
            for c in &cur {
                match self.rules.get(c) {
                    Some(body) => next.extend(body.chars()),
                    None => next.push(*c),
                }
                if next.len() > limit {
                    return Err(SpecError::TooLong { limit });
                }
            }
            cur = next;
        }
        if cur.len() > limit {
            return Err(SpecError::TooLong { limit });
        }
        Ok(cur.into_iter().collect())
    }

    /// Parses the line-oriented spec format described in the module docs.
    pub fn parse_spec(text: &str) -> Result<Self, SpecError> {
        let mut axiom = None;
        let mut rules = Vec::new();
        let mut iterations = None;
        let mut declared: Option<BTreeSet<char>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |message: String| SpecError::Syntax { line, message };
            let Some((key, value)) = content.split_once(':') else {
                return Err(syntax(format!("expected `key: value`, found `{content}`")));
            };
            let value = value.trim();
            match key.trim() {
                "axiom" => {
                    if axiom.is_some() {
                        return Err(syntax("duplicate axiom".into()));
                    }
                    axiom = Some(value.to_string());
                }
                "rule" => {
                    let Some((head, body)) = value.split_once("->") else {
                        return Err(syntax("rule must look like `A -> body`".into()));
                    };
                    let head = head.trim();
                    let mut chars = head.chars();
                    let (Some(sym), None) = (chars.next(), chars.next()) else {
                        return Err(syntax(format!("rule head `{head}` must be one symbol")));
                    };
                    if rules.iter().any(|(s, _)| *s == sym) {
                        return Err(syntax(format!("duplicate rule for `{sym}`")));
                    }
                    let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
                    rules.push((sym, body));
                }
                "angle" => {
                    let ok = value.parse::<f64>().map(|a| a == 90.0).unwrap_or(false);
                    if !ok {
                        return Err(SpecError::UnsupportedAngle(value.to_string()));
                    }
                }
                "iterations" => {
                    let k = value
                        .parse()
                        .map_err(|_| syntax(format!("bad iteration count `{value}`")))?;
                    iterations = Some(k);
                }
                "alphabet" => {
                    declared = Some(value.chars().filter(|c| !c.is_whitespace() && *c != ',').collect());
                }
                other => return Err(syntax(format!("unknown key `{other}`"))),
            }
        }
        let axiom = axiom.ok_or(SpecError::MissingAxiom)?;
        let axiom: String = axiom.chars().filter(|c| !c.is_whitespace()).collect();
        let mut sys = LSystem::new(&axiom, rules);
        sys.iterations = iterations;
        if let Some(declared) = declared {
            if let Some(&bad) = sys.alphabet.iter().find(|c| !declared.contains(c)) {
                return Err(SpecError::UnknownSymbol(bad));
            }
            sys.alphabet = declared;
        }
        Ok(sys)
    }
}

/// The 3D Hilbert curve productions; `A` is the axiom.
pub fn hilbert_3d() -> LSystem {
    LSystem::new(
        "A",
        [
            ('A', "B-F+CFC+F-D&F^D-F+&&CFC+F+B//"),
            ('B', "A&F^CFB^F^D^^-F-D^|F^B|FC^F^A//"),
            ('C', "|D^|F^B-F+C^F^A&&FA&F^C+F+B^F^D//"),
            ('D', "|CFB-F+B|FA&F^A&&FB-F+B|FC//"),
        ]
        .map(|(c, s)| (c, s.to_string())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_by_hand() {
        let sys = LSystem::new("F", [('F', "F+F".to_string())]);
        assert_eq!(sys.expand(0), "F");
        assert_eq!(sys.expand(1), "F+F");
        assert_eq!(sys.expand(2), "F+F+F+F");
    }

    #[test]
    fn unmapped_symbols_copy_through() {
        let sys = LSystem::new("AB", [('A', "AB".to_string())]);
        assert_eq!(sys.expand(2), "ABBB");
    }

    #[test]
    fn expansion_limit() {
        let sys = LSystem::new("F", [('F', "FF".to_string())]);
        assert_eq!(sys.expand_limited(3, 8).unwrap().len(), 8);
        assert_eq!(sys.expand_limited(4, 8), Err(SpecError::TooLong { limit: 8 }));
        assert!(LSystem::new("FFF", []).expand_limited(0, 2).is_err());
    }

    #[test]
    fn hilbert_segment_counts() {
        let sys = hilbert_3d();
        for (k, segments) in [(1, 7), (2, 63), (3, 511)] {
            let s = sys.expand(k);
            assert_eq!(s.chars().filter(|&c| c == 'F').count(), segments);
        }
    }

    #[test]
    fn expansion_never_shrinks() {
        let sys = hilbert_3d();
        let mut prev = 0;
        for k in 0..4 {
            let len = sys.expand(k).len();
            assert!(len >= prev);
            prev = len;
        }
    }

    #[test]
    fn parse_spec_file() {
        let text = "# demo\naxiom: F X\nrule: X -> +F  # turn\nangle: 90\niterations: 3\n";
        let sys = LSystem::parse_spec(text).unwrap();
        assert_eq!(sys.axiom(), "FX");
        assert_eq!(sys.rules()[&'X'], "+F");
        assert_eq!(sys.iterations, Some(3));
        assert_eq!(sys.alphabet().iter().collect::<String>(), "X");
    }

    #[test]
    fn parse_spec_errors() {
        assert_eq!(LSystem::parse_spec("rule: A -> B"), Err(SpecError::MissingAxiom));
        assert!(matches!(
            LSystem::parse_spec("axiom: F\nangle: 45"),
            Err(SpecError::UnsupportedAngle(_))
        ));
        assert!(matches!(
            LSystem::parse_spec("axiom: F\nrule: AB -> F"),
            Err(SpecError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            LSystem::parse_spec("axiom: F\nbogus"),
            Err(SpecError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            LSystem::parse_spec("alphabet: A\naxiom: AB"),
            Err(SpecError::UnknownSymbol('B'))
        ));
        assert!(matches!(
            LSystem::parse_spec("axiom: F\niterations: -1"),
            Err(SpecError::Syntax { .. })
        ));
    }
}
