//! Groups given by a complete coset table over the trivial subgroup. Cosets
//! are the group elements: coset `c` is `0 · u_c` for the spanning-tree word
//! `u_c`, and `a · b` is `a` traced along `u_b`.

use std::collections::HashMap;

use super::enumerate::CosetTable;
use super::word::Word;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Perm};

#[derive(Clone, Debug)]
pub struct RegularGroup {
    table: CosetTable,
    /// Columns of the spanning-tree word of each element, flattened.
    words: Vec<u32>,
    word_start: Vec<u32>,
    inverses: Vec<u32>,
}

impl RegularGroup {
    pub fn new(table: CosetTable) -> Result<Self> {
        if !table.is_regular() {
            return Err(Error::InvalidAction("coset table is over a nontrivial subgroup".into()));
        }
        let n = table.len();
        let ncols = table.columns();
        // Breadth-first spanning tree; standardized tables number cosets in
        // exactly this order.
        let mut parent: Vec<(u32, u32)> = vec![(u32::MAX, 0); n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut order = vec![0u32];
        let mut i = 0;
        while i < order.len() {
            let a = order[i];
            for col in 0..ncols {
                let b = table.entry(a, col);
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    parent[b as usize] = (a, col as u32);
                    order.push(b);
                }
            }
            i += 1;
        }
        if order.len() != n {
            return Err(Error::IncompleteTable("coset table is not connected".into()));
        }
        let mut word_start = vec![0u32; n + 1];
        let mut words: Vec<u32> = Vec::new();
        let mut scratch = Vec::new();
        for c in 0..n {
            scratch.clear();
            let mut x = c as u32;
            while x != 0 {
                let (p, col) = parent[x as usize];
                scratch.push(col);
                x = p;
            }
            words.extend(scratch.iter().rev());
            word_start[c + 1] = words.len() as u32;
        }
        let mut g = RegularGroup {
            table,
            words,
            word_start,
            inverses: Vec::new(),
        };
        g.inverses = (0..n as u32)
            .map(|c| {
                g.word_cols(c)
                    .iter()
                    .rev()
                    .fold(0u32, |x, &col| g.table.entry(x, (col ^ 1) as usize))
            })
            .collect();
        Ok(g)
    }

    /// Table columns along the spanning-tree path from the identity to `c`.
    pub fn word_cols(&self, c: u32) -> &[u32] {
        &self.words[self.word_start[c as usize] as usize..self.word_start[c as usize + 1] as usize]
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn ngens(&self) -> usize {
        self.table.ngens()
    }

    /// The element represented by generator `g`.
    pub fn generator(&self, g: usize) -> u32 {
        self.table.image(0, g)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.word_cols(b)
            .iter()
            .fold(a, |x, &col| self.table.entry(x, col as usize))
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn pow(&self, a: u32, e: i64) -> u32 {
        let base = if e < 0 { self.inv(a) } else { a };
        (0..e.unsigned_abs()).fold(0, |x, _| self.mul(x, base))
    }

    pub fn element_order(&self, a: u32) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `a b a⁻¹`
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// The element represented by a word in the generators.
    pub fn evaluate(&self, w: &Word) -> u32 {
        self.table.trace(0, w)
    }

    /// The subgroup generated by `gens`, as a sorted list of elements.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut i = 0;
        while i < out.len() {
            for &g in gens {
                let x = self.mul(out[i], g);
                if !seen[x as usize] {
                    seen[x as usize] = true;
                    out.push(x);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// The smallest normal subgroup containing `gens`, sorted.
    pub fn normal_closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut conj_by: Vec<u32> = (0..self.ngens()).map(|g| self.generator(g)).filter(|&x| x != 0).collect();
        conj_by.sort_unstable();
        conj_by.dedup();
        let mut gens: Vec<u32> = gens.to_vec();
        let mut set = self.closure(&gens);
        let mut i = 0;
        while i < gens.len() {
            let x = gens[i];
            for &t in &conj_by {
                let y = self.conj(t, x);
                if set.binary_search(&y).is_err() {
                    gens.push(y);
                    set = self.closure(&gens);
                }
            }
            i += 1;
        }
        set
    }
}

/// Evaluates words in the presentation generators as permutations of the
/// regular representation.
#[derive(Clone, Debug)]
pub struct WordEvaluator {
    degree: usize,
    /// Distinct generator permutations.
    perms: Vec<Perm>,
    /// Presentation generator to index in `perms`.
    generator_perm: Vec<usize>,
}

impl WordEvaluator {
    pub fn generator(&self, g: usize) -> &Perm {
        &self.perms[self.generator_perm[g]]
    }

    pub fn evaluate(&self, w: &Word) -> Perm {
        w.letters().iter().fold(Perm::identity(self.degree), |acc, &l| {
            let p = self.generator((l.unsigned_abs() - 1) as usize);
            if l > 0 {
                acc.mul(p)
            } else {
                acc.mul(&p.inverse())
            }
        })
    }
}

/// The permutation group generated by the columns of a complete table over
/// the trivial subgroup, with the map from words to permutations.
pub fn regular_permutation_rep(table: &CosetTable) -> Result<(FiniteGroup, WordEvaluator)> {
    if !table.is_regular() {
        return Err(Error::InvalidAction("coset table is over a nontrivial subgroup".into()));
    }
    let degree = table.len();
    let mut perms: Vec<Perm> = Vec::new();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut generator_perm = Vec::with_capacity(table.ngens());
    for g in 0..table.ngens() {
        let col = table.column(g);
        let next = perms.len();
        let k = *index.entry(col.clone()).or_insert(next);
        if k == next {
            perms.push(Perm::from_images(col)?);
        }
        generator_perm.push(k);
    }
    let gens: Vec<Perm> = perms.iter().filter(|p| !p.is_identity()).cloned().collect();
    let group = FiniteGroup::from_regular_action(degree, gens);
    if group.order() != degree as u64 {
        return Err(Error::Internal(format!(
            "regular representation has order {} on {degree} points",
            group.order()
        )));
    }
    Ok((
        group,
        WordEvaluator {
            degree,
            perms,
            generator_perm,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{todd_coxeter, EnumerationOptions, FpGroup};

    fn s3_table() -> CosetTable {
        let f = FpGroup::new(
            2,
            ["x1^2", "x2^2", "x1*x2*x1*x2*x1*x2"]
                .iter()
                .map(|r| Word::parse(r).unwrap())
                .collect(),
        )
        .unwrap();
        todd_coxeter(&f, &[], &EnumerationOptions::new(100)).unwrap()
    }

    #[test]
    fn s3_regular() {
        let t = s3_table();
        let (g, eval) = regular_permutation_rep(&t).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let w = Word::parse("x1*x2").unwrap();
        assert_eq!(eval.evaluate(&w).order(), 3);
        assert!(eval.evaluate(&w.pow(3)).is_identity());

        let r = RegularGroup::new(t).unwrap();
        let ab = r.evaluate(&w);
        assert_eq!(r.element_order(ab), 3);
        assert_eq!(r.mul(ab, r.inv(ab)), 0);
        let (a, b) = (r.generator(0), r.generator(1));
        assert_eq!(r.mul(a, b), ab);
        assert_ne!(r.mul(b, a), ab);
        assert_eq!(r.closure(&[ab]).len(), 3);
    }

    #[test]
    fn trivial_table() {
        let f = FpGroup::new(1, vec![Word::generator(0)]).unwrap();
        let t = todd_coxeter(&f, &[], &EnumerationOptions::new(10)).unwrap();
        let (g, _) = regular_permutation_rep(&t).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn nontrivial_subgroup_rejected() {
        let f = FpGroup::new(1, vec![Word::parse("x1^4").unwrap()]).unwrap();
        let t = todd_coxeter(&f, &[Word::parse("x1^2").unwrap()], &EnumerationOptions::new(10)).unwrap();
        assert_eq!(t.len(), 2);
        assert!(regular_permutation_rep(&t).is_err());
    }
}
