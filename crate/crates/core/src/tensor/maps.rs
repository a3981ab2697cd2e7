use super::square::{element_map, ElementSet, TensorSquare};
use crate::error::{Error, Result};
use crate::group::GroupHomomorphism;

/// `f ⊗ f : G ⊗ G → H ⊗ H`, `g ⊗ g' ↦ f(g) ⊗ f(g')`, tabulated on every
/// element and checked to be a well-defined homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    images: Vec<u32>,
}

impl InducedMap {
    /// `f` maps Cayley indices of the source group to those of the target.
    pub fn new(src: &TensorSquare, dst: &TensorSquare, f: &[u32]) -> Result<InducedMap> {
        let (gs, hs) = (src.cayley(), dst.cayley());
        if f.len() != gs.len() {
            return Err(Error::NotHomomorphism(format!(
                "{} images for a group of order {}",
                f.len(),
                gs.len()
            )));
        }
        for a in 0..gs.len() as u32 {
            for b in 0..gs.len() as u32 {
                if f[gs.mul(a, b) as usize] != hs.mul(f[a as usize], f[b as usize]) {
                    return Err(Error::NotHomomorphism(format!("f(ab) ≠ f(a)f(b) at ({a}, {b})")));
                }
            }
        }
        let symbols = src.symbols();
        let tt = dst.t();
        let images = element_map(
            src.t(),
            |col| {
                let (a, b) = symbols.pair(col / 2);
                let y = dst.lambda(f[a as usize], f[b as usize]);
                if col % 2 == 0 {
                    y
                } else {
                    tt.inv(y)
                }
            },
            0,
            |a, b| tt.mul(a, b),
        )?;
        Ok(InducedMap { images })
    }

    pub fn from_homomorphism(src: &TensorSquare, dst: &TensorSquare, f: &GroupHomomorphism) -> Result<InducedMap> {
        let (gs, hs) = (src.cayley(), dst.cayley());
        let table = gs
            .elements()
            .iter()
            .map(|g| {
                let y = f.apply(g)?;
                hs.index_of(&y)
                    .ok_or_else(|| Error::NotMember(format!("{y} is not in the target group")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::new(src, dst, &table)
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn kernel(&self) -> ElementSet {
        self.preimage(&ElementSet::from_sorted(vec![0]))
    }

    pub fn image(&self) -> ElementSet {
        ElementSet::from_unsorted(self.images.clone())
    }

    pub fn image_of(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_unsorted(set.elements().iter().map(|&x| self.apply(x)).collect())
    }

    pub fn preimage(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_sorted(
            (0..self.images.len() as u32)
                .filter(|&x| set.contains(self.apply(x)))
                .collect(),
        )
    }

    /// `other ∘ self`
    pub fn then(&self, other: &InducedMap) -> Vec<u32> {
        self.images.iter().map(|&y| other.apply(y)).collect()
    }
}
