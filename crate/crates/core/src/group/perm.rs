//! Permutations of `{0, .., n-1}`.
//!
//! Products are read left to right: `a.mul(&b)` applies `a` first and then
//! `b`, so permutations act on points from the right. This matches the way
//! a coset table acts on cosets and keeps word evaluation a homomorphism.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Parses cycle notation over 1-based points, e.g. `(1,2,3)(4,5)` or
    /// `(1 2 3)`. The empty string and `()` denote the identity.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let points = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={degree} in {text:?}"
                    )));
                }
            }
            // Cycles compose left to right, each applied after the previous.
            let mut cycle_map: Vec<u32> = (0..degree as u32).collect();
            let mut seen = vec![false; degree];
            for (i, &p) in points.iter().enumerate() {
                let q = points[(i + 1) % points.len()];
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::InvalidPermutation(format!("repeated point {p} in {text:?}")));
                }
                cycle_map[p - 1] = (q - 1) as u32;
            }
            let cycle = Perm::from_images(cycle_map)?;
            images = images.iter().map(|&x| cycle.images[x as usize]).collect();
            rest = open[close + 1..].trim_start();
        }
        Ok(Perm { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, mut e: i64) -> Perm {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        e = e.abs();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `self * other * self^-1`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.mul(self).mul(&g.inverse())
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    /// Disjoint cycles of length at least two, 0-based.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Perm { images }
    }

    /// Shifts the support by `offset` inside a permutation of `degree` points.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = x + offset as u32;
        }
        Perm { images }
    }
}

impl fmt::Display for Perm {
    /// Cycle notation with 1-based points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}
