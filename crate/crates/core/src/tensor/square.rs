//! `G ⊗ G` realized as the regular representation of its enumerated
//! presentation, with the symbol map `λ`, the commutator map `κ`, and the
//! central subgroups `Δ ⊆ ∇ ⊆ J = ker κ`.

use std::sync::Arc;

use super::presentation::{tensor_square_presentation_capped, SymbolIndex, DEFAULT_ORDER_CAP};
use crate::abelian::{AbelianCoordinates, AbelianInvariants};
use crate::coset::{todd_coxeter, EnumerationOptions, FpGroup, RegularGroup, Strategy, DEFAULT_MAX_CELLS};
use crate::error::{Error, Result};
use crate::group::{CayleyTable, FiniteGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorOptions {
    /// Largest `|G|` accepted.
    pub order_cap: u64,
    /// Coset table budget in cells (cosets times columns).
    pub max_cells: usize,
    pub strategy: Strategy,
}

impl Default for TensorOptions {
    fn default() -> Self {
        TensorOptions {
            order_cap: DEFAULT_ORDER_CAP,
            max_cells: DEFAULT_MAX_CELLS,
            strategy: Strategy::default(),
        }
    }
}

/// A sorted set of elements of `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet(Vec<u32>);

impl ElementSet {
    pub fn from_sorted(v: Vec<u32>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        ElementSet(v)
    }

    pub fn from_unsorted(mut v: Vec<u32>) -> Self {
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn intersection_len(&self, other: &ElementSet) -> usize {
        self.0.iter().filter(|&&x| other.contains(x)).count()
    }
}

/// Builds the images of all elements of `t` under the map given on table
/// columns, then checks that the map respects every table entry. `mul` is the
/// target multiplication. Fails if the column images do not define a
/// homomorphism.
pub(crate) fn element_map(
    t: &RegularGroup,
    column_image: impl Fn(usize) -> u32,
    identity: u32,
    mul: impl Fn(u32, u32) -> u32,
) -> Result<Vec<u32>> {
    let ncols = t.table().columns();
    let col_images: Vec<u32> = (0..ncols).map(&column_image).collect();
    let images: Vec<u32> = (0..t.order() as u32)
        .map(|c| {
            t.word_cols(c)
                .iter()
                .fold(identity, |x, &col| mul(x, col_images[col as usize]))
        })
        .collect();
    for c in 0..t.order() as u32 {
        for (col, &img) in col_images.iter().enumerate() {
            let d = t.table().entry(c, col);
            if images[d as usize] != mul(images[c as usize], img) {
                return Err(Error::NotHomomorphism(format!(
                    "image of element {c} times column {col} disagrees with element {d}"
                )));
            }
        }
    }
    Ok(images)
}

#[derive(Clone, Debug)]
pub struct TensorSquare {
    group: FiniteGroup,
    cayley: Arc<CayleyTable>,
    symbols: SymbolIndex,
    fp: FpGroup,
    t: RegularGroup,
    kappa: Vec<u32>,
    derived: Vec<u32>,
    j: ElementSet,
    j_coords: AbelianCoordinates<u32>,
    nabla_gens: Vec<u32>,
    delta_gens: Vec<u32>,
    nabla: ElementSet,
    delta: ElementSet,
}

pub fn tensor_square(g: &FiniteGroup) -> Result<TensorSquare> {
    TensorSquare::new(g, &TensorOptions::default())
}

impl TensorSquare {
    pub fn new(g: &FiniteGroup, options: &TensorOptions) -> Result<TensorSquare> {
        let (fp, symbols) = tensor_square_presentation_capped(g, options.order_cap)?;
        let enumeration =
            EnumerationOptions::with_max_cells(fp.ngens(), options.max_cells).strategy(options.strategy);
        let table = todd_coxeter(&fp, &[], &enumeration)?;
        Self::from_table(g, fp, symbols, table)
    }

    fn from_table(
        g: &FiniteGroup,
        fp: FpGroup,
        symbols: SymbolIndex,
        table: crate::coset::CosetTable,
    ) -> Result<TensorSquare> {
        let cayley = g.cayley()?;
        let t = RegularGroup::new(table)?;

        let kappa = element_map(
            &t,
            |col| {
                let (a, b) = symbols.pair(col / 2);
                let c = cayley.commutator(a, b);
                if col % 2 == 0 {
                    c
                } else {
                    cayley.inv(c)
                }
            },
            0,
            |a, b| cayley.mul(a, b),
        )
        .map_err(|e| Error::Internal(format!("commutator map: {e}")))?;

        let derived = cayley.indices_of(g.derived_subgroup().group());
        let mut image: Vec<u32> = kappa.clone();
        image.sort_unstable();
        image.dedup();
        if image != derived {
            return Err(Error::Internal("image of the commutator map is not the derived subgroup".into()));
        }

        let j = ElementSet::from_sorted((0..t.order() as u32).filter(|&c| kappa[c as usize] == 0).collect());
        let j_coords = AbelianCoordinates::new(j.elements().iter().copied(), 0, |&a, &b| t.mul(a, b));
        let t_gens = distinct_generators(&t);
        for &z in j_coords.generators() {
            if t_gens.iter().any(|&s| t.mul(z, s) != t.mul(s, z)) {
                return Err(Error::Internal("ker κ is not central".into()));
            }
        }

        let n = symbols.group_order() as u32;
        let lambda = |a: u32, b: u32| t.generator(symbols.index(a, b));
        let nabla_gens = dedup((0..n).map(|x| lambda(x, x)).collect());
        let delta_gens = dedup(
            (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .map(|(x, y)| t.mul(lambda(x, y), lambda(y, x)))
                .collect(),
        );
        let nabla = ElementSet::from_sorted(t.closure(&nabla_gens));
        let delta = ElementSet::from_sorted(t.closure(&delta_gens));
        if !nabla.is_subset(&j) || !delta.is_subset(&nabla) {
            return Err(Error::Internal("expected Δ ⊆ ∇ ⊆ ker κ".into()));
        }

        Ok(TensorSquare {
            group: g.clone(),
            cayley,
            symbols,
            fp,
            t,
            kappa,
            derived,
            j,
            j_coords,
            nabla_gens,
            delta_gens,
            nabla,
            delta,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn cayley(&self) -> &CayleyTable {
        &self.cayley
    }

    pub fn symbols(&self) -> SymbolIndex {
        self.symbols
    }

    pub fn presentation(&self) -> &FpGroup {
        &self.fp
    }

    /// The concrete group; elements are coset numbers, `0` is the identity.
    pub fn t(&self) -> &RegularGroup {
        &self.t
    }

    pub fn order(&self) -> u64 {
        self.t.order() as u64
    }

    /// `λ(g, h) = g ⊗ h` for Cayley indices `g, h`.
    pub fn lambda(&self, g: u32, h: u32) -> u32 {
        self.t.generator(self.symbols.index(g, h))
    }

    /// `κ(x)` as a Cayley index of `G`.
    pub fn kappa(&self, x: u32) -> u32 {
        self.kappa[x as usize]
    }

    pub fn kappa_images(&self) -> &[u32] {
        &self.kappa
    }

    /// Cayley indices of `G′`.
    pub fn derived(&self) -> &[u32] {
        &self.derived
    }

    pub fn j(&self) -> &ElementSet {
        &self.j
    }

    pub fn j_generators(&self) -> &[u32] {
        self.j_coords.generators()
    }

    pub fn nabla(&self) -> &ElementSet {
        &self.nabla
    }

    pub fn delta(&self) -> &ElementSet {
        &self.delta
    }

    /// Distinct values of `x ⊗ x`.
    pub fn nabla_generators(&self) -> &[u32] {
        &self.nabla_gens
    }

    /// Distinct values of `(x ⊗ y)(y ⊗ x)`.
    pub fn delta_generators(&self) -> &[u32] {
        &self.delta_gens
    }

    pub fn pi3(&self) -> AbelianInvariants {
        self.j_coords.invariants()
    }

    /// `J / ∇`
    pub fn h2(&self) -> AbelianInvariants {
        self.j_coords.quotient_invariants(&self.nabla_gens)
    }

    /// `J / Δ`
    pub fn pi2s(&self) -> AbelianInvariants {
        self.j_coords.quotient_invariants(&self.delta_gens)
    }

    pub fn nabla_invariants(&self) -> AbelianInvariants {
        self.j_coords.subgroup_invariants(&self.nabla_gens)
    }

    pub fn delta_invariants(&self) -> AbelianInvariants {
        self.j_coords.subgroup_invariants(&self.delta_gens)
    }

    /// Invariants of `J / <killed>`; `killed` must lie in `J`.
    pub fn j_quotient_invariants(&self, killed: &[u32]) -> AbelianInvariants {
        self.j_coords.quotient_invariants(killed)
    }

    /// `|G ∧ G| = |T / ∇|`
    pub fn exterior_order(&self) -> u64 {
        self.order() / self.nabla.len() as u64
    }

    /// `|G ⊗̃ G| = |T / Δ|`
    pub fn symmetric_order(&self) -> u64 {
        self.order() / self.delta.len() as u64
    }

    /// Evaluates a word in the symbols after substituting each symbol.
    pub(crate) fn map_symbols(&self, cols: &[u32], f: impl Fn(u32, u32) -> (u32, u32)) -> u32 {
        cols.iter().fold(0, |x, &col| {
            let (a, b) = self.symbols.pair(col as usize / 2);
            let (a, b) = f(a, b);
            let y = self.lambda(a, b);
            self.t.mul(x, if col % 2 == 0 { y } else { self.t.inv(y) })
        })
    }
}

fn distinct_generators(t: &RegularGroup) -> Vec<u32> {
    dedup((0..t.ngens()).map(|g| t.generator(g)).filter(|&x| x != 0).collect())
}

fn dedup(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `κ` as a list of images (Cayley indices of `G`) and its kernel `J`.
pub fn commutator_map(t: &TensorSquare) -> (&[u32], &ElementSet) {
    (t.kappa_images(), t.j())
}

/// `(∇, Δ)`
pub fn canonical_subgroups(t: &TensorSquare) -> (&ElementSet, &ElementSet) {
    (t.nabla(), t.delta())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_named_group;

    fn ts(spec: &str) -> TensorSquare {
        tensor_square(&make_named_group(spec).unwrap()).unwrap()
    }

    #[test]
    fn c2_and_c3() {
        let t = ts("C2");
        assert_eq!(t.order(), 2);
        let t = ts("C3");
        assert_eq!((t.order(), t.j().len()), (3, 3));
        assert_eq!((t.nabla().len(), t.delta().len()), (3, 3));
    }

    #[test]
    fn s3() {
        let t = ts("S3");
        assert_eq!((t.order(), t.j().len()), (6, 2));
        assert_eq!((t.nabla().len(), t.delta().len()), (2, 1));
        assert_eq!(t.pi3(), AbelianInvariants::finite(&[2]));
        assert_eq!(t.h2(), AbelianInvariants::trivial());
        assert_eq!(t.pi2s(), AbelianInvariants::finite(&[2]));
    }

    #[test]
    fn c4_subgroups() {
        let t = ts("C4");
        assert_eq!((t.nabla().len(), t.delta().len()), (4, 2));
        assert_eq!(t.exterior_order(), 1);
        assert_eq!(t.symmetric_order(), 2);
    }

    #[test]
    fn lambda_is_bilinear_on_c2xc2() {
        let t = ts("C2xC2");
        assert_eq!(t.order(), 16);
        let c = t.cayley();
        for a in 0..4 {
            for b in 0..4 {
                for x in 0..4 {
                    assert_eq!(t.lambda(c.mul(a, b), x), t.t().mul(t.lambda(a, x), t.lambda(b, x)));
                }
            }
        }
    }

    #[test]
    fn cell_budget_enforced() {
        let g = make_named_group("S3").unwrap();
        let opts = TensorOptions {
            max_cells: 72 * 2,
            ..TensorOptions::default()
        };
        assert!(matches!(TensorSquare::new(&g, &opts), Err(Error::EnumerationExceeded { .. })));
    }
}
