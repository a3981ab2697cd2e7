//! The presentation of `G ⊗ G`: one generator `g ⊗ h` per ordered pair of
//! elements and, for all `g, g', h` (resp. `g, h, h'`), the relators
//!
//! ```text
//! gg' ⊗ h = (ᵍg' ⊗ ᵍh)(g ⊗ h)
//! g ⊗ hh' = (g ⊗ h)(ʰg ⊗ ʰh')
//! ```
//!
//! with `ᵍx = g x g⁻¹`.

use crate::coset::{FpGroup, Word};
use crate::error::{Error, Result};
use crate::group::{CayleyTable, FiniteGroup};

/// Largest `|G|` accepted by default.
pub const DEFAULT_ORDER_CAP: u64 = 24;

/// Numbering of the symbols `g ⊗ h`: generator `g * n + h` over the Cayley
/// indices of `G` (identity first, then stabilizer-chain order).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolIndex {
    n: usize,
}

impl SymbolIndex {
    pub fn new(n: usize) -> Self {
        SymbolIndex { n }
    }

    /// Order of `G`.
    pub fn group_order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn index(&self, g: u32, h: u32) -> usize {
        g as usize * self.n + h as usize
    }

    #[inline]
    pub fn pair(&self, s: usize) -> (u32, u32) {
        ((s / self.n) as u32, (s % self.n) as u32)
    }

    fn letter(&self, g: u32, h: u32) -> i32 {
        self.index(g, h) as i32 + 1
    }
}

/// Relators for all triples, in the order: first the `(g, g', h)` family,
/// then the `(g, h, h')` family, each with the triple in lexicographic order.
pub fn relators_from_table(table: &CayleyTable) -> Vec<Word> {
    let n = table.len() as u32;
    let idx = SymbolIndex::new(n as usize);
    let mut rels = Vec::with_capacity(2 * (n as usize).pow(3));
    for g in 0..n {
        for g2 in 0..n {
            let gg2 = table.mul(g, g2);
            let conj_g2 = table.conj(g, g2);
            for h in 0..n {
                rels.push(Word::new(vec![
                    idx.letter(conj_g2, table.conj(g, h)),
                    idx.letter(g, h),
                    -idx.letter(gg2, h),
                ]));
            }
        }
    }
    for g in 0..n {
        for h in 0..n {
            let conj_g = table.conj(h, g);
            for h2 in 0..n {
                rels.push(Word::new(vec![
                    idx.letter(g, h),
                    idx.letter(conj_g, table.conj(h, h2)),
                    -idx.letter(g, table.mul(h, h2)),
                ]));
            }
        }
    }
    rels
}

pub fn tensor_square_presentation(g: &FiniteGroup) -> Result<(FpGroup, SymbolIndex)> {
    tensor_square_presentation_capped(g, DEFAULT_ORDER_CAP)
}

pub fn tensor_square_presentation_capped(g: &FiniteGroup, cap: u64) -> Result<(FpGroup, SymbolIndex)> {
    if g.order() > cap {
        return Err(Error::BoundExceeded {
            what: "tensor square presentation".into(),
            order: g.order(),
            bound: cap,
        });
    }
    let table = g.cayley()?;
    let idx = SymbolIndex::new(table.len());
    let fp = FpGroup::new(idx.len(), relators_from_table(&table))?;
    Ok((fp, idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_named_group;

    #[test]
    fn counts() {
        let (fp, idx) = tensor_square_presentation(&make_named_group("C2").unwrap()).unwrap();
        assert_eq!((fp.ngens(), fp.relators().len()), (4, 16));
        assert_eq!(idx.len(), 4);
        let (fp, _) = tensor_square_presentation(&make_named_group("S3").unwrap()).unwrap();
        assert_eq!((fp.ngens(), fp.relators().len()), (36, 432));
    }

    #[test]
    fn c2_substitution() {
        // g = g' = h = x: xx ⊗ x = (ˣx ⊗ ˣx)(x ⊗ x), i.e. 1⊗x = (x⊗x)(x⊗x).
        let g = make_named_group("C2").unwrap();
        let (fp, idx) = tensor_square_presentation(&g).unwrap();
        // Triple (g, g', h) = (x, x, x) is number 1·4 + 1·2 + 1 of the first family.
        let r = &fp.relators()[7];
        let xx = idx.index(1, 1) as i32 + 1;
        let ex = idx.index(0, 1) as i32 + 1;
        assert_eq!(r.letters(), &[xx, xx, -ex]);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            tensor_square_presentation(&make_named_group("S5").unwrap()),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
