use std::fmt;

use crate::error::{Error, Result};

/// A word in free generators, stored as signed letters: `g + 1` for the
/// generator with index `g`, `-(g + 1)` for its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<i32>);

impl Word {
    pub fn new(letters: Vec<i32>) -> Self {
        Word(letters)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![g as i32 + 1])
    }

    pub fn generator_inverse(g: usize) -> Self {
        Word(vec![-(g as i32 + 1)])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used, plus one.
    pub fn generator_bound(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn validate(&self, ngens: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > ngens) {
            Some(l) => Err(Error::Presentation(format!(
                "letter {l} out of range for {ngens} generators"
            ))),
            None => Ok(()),
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Word(v)
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free reduction followed by cancelling inverse letters at the two ends.
    pub fn cyclic_reduce(&self) -> Word {
        let w = self.free_reduce().0;
        let (mut i, mut j) = (0, w.len());
        while j - i >= 2 && w[i] == -w[j - 1] {
            i += 1;
            j -= 1;
        }
        Word(w[i..j].to_vec())
    }

    /// Parses `x1*x2^-1*x3^2`; `1` or the empty string is the identity.
    pub fn parse(text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (
                    b.trim(),
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Presentation(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            if base == "1" {
                continue;
            }
            let g: usize = base
                .strip_prefix('x')
                .and_then(|n| n.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::Presentation(format!("bad generator `{base}`")))?;
            let l = i32::try_from(g).map_err(|_| Error::Presentation(format!("generator `{base}` too large")))?;
            let letter = if exp < 0 { -l } else { l };
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    /// Runs of equal letters are written as powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let exp = if l < 0 { -(run as i64) } else { run as i64 };
            if exp == 1 {
                write!(f, "x{}", l.abs())?;
            } else {
                write!(f, "x{}^{}", l.abs(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reductions() {
        let w = Word::new(vec![1, 2, -2, -1, 3]);
        assert_eq!(w.free_reduce(), Word::new(vec![3]));
        let c = Word::new(vec![-1, 2, 3, 1]);
        assert_eq!(c.cyclic_reduce(), Word::new(vec![2, 3]));
        assert_eq!(Word::new(vec![1, -1]).cyclic_reduce(), Word::identity());
    }

    #[test]
    fn text_round_trip() {
        let w = Word::new(vec![1, 1, -2, 3, 3, 3]);
        assert_eq!(w.to_string(), "x1^2*x2^-1*x3^3");
        assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        assert_eq!(Word::parse("1").unwrap(), Word::identity());
        assert!(Word::parse("y1").is_err());
        assert!(Word::parse("x0").is_err());
    }

    proptest! {
        #[test]
        fn parse_inverts_display(letters in proptest::collection::vec((1i32..6, any::<bool>()), 0..20)) {
            let w = Word::new(letters.into_iter().map(|(g, neg)| if neg { -g } else { g }).collect());
            prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        }

        #[test]
        fn reduced_word_times_inverse_reduces_to_identity(letters in proptest::collection::vec((1i32..4, any::<bool>()), 0..20)) {
            let w = Word::new(letters.into_iter().map(|(g, neg)| if neg { -g } else { g }).collect());
            prop_assert!(w.mul(&w.inverse()).free_reduce().is_empty());
            let r = w.free_reduce();
            prop_assert_eq!(r.free_reduce(), r);
        }
    }
}
