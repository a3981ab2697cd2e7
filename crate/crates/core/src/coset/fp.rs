//! Finitely presented groups and their text format:
//!
//! ```text
//! gens: x1..x3
//! rels: x1^2 / x2^2 / x1*x2*x1^-1*x2^-1
//! ```

use std::collections::BTreeSet;
use std::fmt;

use super::word::Word;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpGroup {
    ngens: usize,
    relators: Vec<Word>,
}

impl FpGroup {
    pub fn new(ngens: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            r.validate(ngens)?;
        }
        Ok(FpGroup { ngens, relators })
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Cyclically reduced, nonempty relators with duplicates removed. Two
    /// relators count as duplicates when one is a cyclic rotation of the
    /// other or of its inverse.
    pub fn reduced_relators(&self) -> Vec<Word> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for r in &self.relators {
            let w = r.cyclic_reduce();
            if w.is_empty() {
                continue;
            }
            if seen.insert(canonical_rotation(&w)) {
                out.push(w);
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<FpGroup> {
        let mut ngens = None;
        let mut rels_text = String::new();
        let mut in_rels = false;
        for line in text.lines() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix("gens:") {
                let rest = rest.trim();
                ngens = Some(if rest.is_empty() {
                    0
                } else {
                    rest.strip_prefix("x1..x")
                        .and_then(|n| n.parse::<usize>().ok())
                        .or_else(|| (rest == "x1").then_some(1))
                        .ok_or_else(|| Error::Presentation(format!("bad generator line `{line}`")))?
                });
                in_rels = false;
            } else if let Some(rest) = line.strip_prefix("rels:") {
                rels_text.push_str(rest);
                in_rels = true;
            } else if in_rels {
                rels_text.push(' ');
                rels_text.push_str(line);
            } else if !line.is_empty() {
                return Err(Error::Presentation(format!("unexpected line `{line}`")));
            }
        }
        let ngens = ngens.ok_or_else(|| Error::Presentation("missing `gens:` line".into()))?;
        let relators = rels_text
            .split('/')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Word::parse)
            .collect::<Result<Vec<_>>>()?;
        FpGroup::new(ngens, relators)
    }
}

fn canonical_rotation(w: &Word) -> Vec<i32> {
    let mut best: Option<Vec<i32>> = None;
    for v in [w.letters().to_vec(), w.inverse().letters().to_vec()] {
        for i in 0..v.len() {
            let mut rot = v[i..].to_vec();
            rot.extend_from_slice(&v[..i]);
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

impl fmt::Display for FpGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ngens {
            0 => writeln!(f, "gens:")?,
            1 => writeln!(f, "gens: x1")?,
            n => writeln!(f, "gens: x1..x{n}")?,
        }
        write!(f, "rels:")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, " /")?;
            }
            write!(f, " {r}")?;
        }
        writeln!(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = FpGroup::new(
            2,
            vec![Word::parse("x1^2").unwrap(), Word::parse("x2^2").unwrap(), Word::parse("x1*x2").unwrap().pow(3)],
        )
        .unwrap();
        let text = g.to_text();
        assert_eq!(text, "gens: x1..x2\nrels: x1^2 / x2^2 / x1*x2*x1*x2*x1*x2\n");
        assert_eq!(FpGroup::parse(&text).unwrap(), g);
    }

    #[test]
    fn out_of_range_relator() {
        assert!(FpGroup::new(1, vec![Word::new(vec![2])]).is_err());
    }

    #[test]
    fn dedupes_rotations_and_inverses() {
        let g = FpGroup::new(
            2,
            vec![
                Word::new(vec![1, 2]),
                Word::new(vec![2, 1]),
                Word::new(vec![-1, -2]),
                Word::new(vec![1, -1]),
                Word::new(vec![-2, 1, 2, 2]),
            ],
        )
        .unwrap();
        let r = g.reduced_relators();
        assert_eq!(r, vec![Word::new(vec![1, 2])]);
    }
}
