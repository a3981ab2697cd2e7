//! Coordinates for a finite abelian group given by its elements and a
//! multiplication.
//!
//! Generators are chosen greedily in candidate order. Each new generator `x`
//! gets the power relation `m x = (coordinates of m x)` where `m` is the
//! least exponent landing in the span of the earlier generators; these
//! relations present the group completely.

use std::collections::HashMap;
use std::hash::Hash;

use super::invariants::AbelianInvariants;
use super::matrix::IntegerMatrix;
use super::snf::{cokernel_invariants, subquotient_invariants};

#[derive(Clone, Debug)]
pub struct AbelianCoordinates<E: Eq + Hash + Clone> {
    generators: Vec<E>,
    /// One power relation per generator, each of length `generators.len()`.
    relations: Vec<Vec<i64>>,
    coords: HashMap<E, Vec<i64>>,
}

impl<E: Eq + Hash + Clone> AbelianCoordinates<E> {
    /// Builds coordinates for the group whose elements are exactly
    /// `elements`. `mul` must be commutative on them.
    pub fn new(elements: impl IntoIterator<Item = E>, identity: E, mul: impl Fn(&E, &E) -> E) -> Self {
        let mut generators: Vec<E> = Vec::new();
        let mut relations: Vec<Vec<i64>> = Vec::new();
        let mut coords: HashMap<E, Vec<i64>> = HashMap::new();
        coords.insert(identity.clone(), Vec::new());
        let mut members: Vec<E> = vec![identity];

        for x in elements {
            if coords.contains_key(&x) {
                continue;
            }
            let k = generators.len();
            // Smallest m with x^m in the current span.
            let mut power = x.clone();
            let mut m = 1i64;
            while !coords.contains_key(&power) {
                power = mul(&power, &x);
                m += 1;
            }
            let mut rel = coords[&power].clone();
            rel.resize(k, 0);
            let mut rel: Vec<i64> = rel.into_iter().map(|c| -c).collect();
            rel.push(m);
            relations.push(rel);
            generators.push(x.clone());

            let old = members.clone();
            let mut step = x.clone();
            for i in 1..m {
                for y in &old {
                    let z = mul(y, &step);
                    let mut c = coords[y].clone();
                    c.resize(k, 0);
                    c.push(i);
                    coords.insert(z.clone(), c);
                    members.push(z);
                }
                step = mul(&step, &x);
            }
        }

        let n = generators.len();
        for rel in relations.iter_mut() {
            rel.resize(n, 0);
        }
        for c in coords.values_mut() {
            c.resize(n, 0);
        }
        AbelianCoordinates {
            generators,
            relations,
            coords,
        }
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.coords.len()
    }

    pub fn coordinates(&self, x: &E) -> Option<&[i64]> {
        self.coords.get(x).map(Vec::as_slice)
    }

    pub fn contains(&self, x: &E) -> bool {
        self.coords.contains_key(x)
    }

    pub fn relation_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_rows(self.generators.len(), &self.relations)
    }

    fn rows_for(&self, elements: &[E]) -> IntegerMatrix {
        let rows: Vec<Vec<i64>> = elements
            .iter()
            .map(|e| self.coords.get(e).expect("element of the group").clone())
            .collect();
        IntegerMatrix::from_rows(self.generators.len(), &rows)
    }

    pub fn invariants(&self) -> AbelianInvariants {
        cokernel_invariants(&self.relation_matrix())
    }

    /// Invariants of the subgroup generated by `gens`.
    pub fn subgroup_invariants(&self, gens: &[E]) -> AbelianInvariants {
        subquotient_invariants(&self.rows_for(gens), &self.relation_matrix())
    }

    /// Invariants of the quotient by the subgroup generated by `killed`.
    pub fn quotient_invariants(&self, killed: &[E]) -> AbelianInvariants {
        cokernel_invariants(&self.relation_matrix().vstack(&self.rows_for(killed)))
    }

    /// Invariants of `<gens> / (<gens> ∩ <killed>)`, i.e. the image of
    /// `<gens>` in the quotient by `<killed>`.
    pub fn subquotient_invariants(&self, gens: &[E], killed: &[E]) -> AbelianInvariants {
        let killed = self.relation_matrix().vstack(&self.rows_for(killed));
        subquotient_invariants(&self.rows_for(gens), &killed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_product_groups() {
        // Z/12 written additively.
        let c = AbelianCoordinates::new(0u64..12, 0u64, |a, b| (a + b) % 12);
        assert_eq!(c.invariants(), AbelianInvariants::finite(&[12]));
        assert_eq!(c.subgroup_invariants(&[4]), AbelianInvariants::finite(&[3]));
        assert_eq!(c.quotient_invariants(&[4]), AbelianInvariants::finite(&[4]));

        // Z/2 x Z/4 as pairs.
        let elems: Vec<(u8, u8)> = (0..2).flat_map(|a| (0..4).map(move |b| (a, b))).collect();
        let g = AbelianCoordinates::new(elems, (0, 0), |x, y| ((x.0 + y.0) % 2, (x.1 + y.1) % 4));
        assert_eq!(g.order(), 8);
        assert_eq!(g.invariants(), AbelianInvariants::finite(&[2, 4]));
        assert_eq!(g.quotient_invariants(&[(1, 2)]), AbelianInvariants::finite(&[4]));
        assert_eq!(
            g.subquotient_invariants(&[(0, 1)], &[(0, 2)]),
            AbelianInvariants::finite(&[2])
        );
    }
}
