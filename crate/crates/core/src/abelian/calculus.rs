//! Tensor, exterior and symmetric squares of finitely generated abelian
//! groups, computed in the basis `e_ij = x_i ⊗ x_j` of the cyclic factors.

use serde::{Deserialize, Serialize};

use super::invariants::AbelianInvariants;
use super::matrix::IntegerMatrix;
use super::snf::{cokernel_invariants, subquotient_invariants};

/// An abelian group given by labelled generators and a relation matrix whose
/// rows are relations among the labels.
#[derive(Clone, Debug)]
pub struct BasedAbelianGroup {
    /// Label `(i, j)` stands for `x_i ⊗ x_j`.
    pub labels: Vec<(usize, usize)>,
    /// Relation rows over the labels.
    pub relations: IntegerMatrix,
    /// Cyclic order per factor of the underlying group; `None` for `Z`.
    pub factor_orders: Vec<Option<u64>>,
}

impl BasedAbelianGroup {
    pub fn invariants(&self) -> AbelianInvariants {
        cokernel_invariants(&self.relations)
    }

    pub fn label_index(&self, i: usize, j: usize) -> usize {
        i * self.factor_orders.len() + j
    }

    fn generator_rows(&self, vectors: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(self.labels.len(), vectors)
    }

    /// Generators of `∇`: `e_ii` and `e_ij + e_ji` for `i < j`.
    pub fn nabla_generators(&self) -> IntegerMatrix {
        let n = self.factor_orders.len();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut v = vec![0i64; self.labels.len()];
                v[self.label_index(i, j)] += 1;
                if i != j {
                    v[self.label_index(j, i)] += 1;
                }
                rows.push(v);
            }
        }
        self.generator_rows(&rows)
    }

    /// Generators of `Δ`: `e_ij + e_ji` for all `i, j`, so `2 e_ii` is included.
    pub fn delta_generators(&self) -> IntegerMatrix {
        let n = self.factor_orders.len();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut v = vec![0i64; self.labels.len()];
                v[self.label_index(i, j)] += 1;
                v[self.label_index(j, i)] += 1;
                rows.push(v);
            }
        }
        self.generator_rows(&rows)
    }
}

/// `A ⊗ A` for `A = Z^r + Z/d1 + ... + Z/dm`, with basis `e_ij` and relations
/// `d_i e_ij = 0`, `d_j e_ij = 0` (none for free factors).
pub fn abelian_tensor_square(a: &AbelianInvariants) -> BasedAbelianGroup {
    let factor_orders: Vec<Option<u64>> = std::iter::repeat_n(None, a.rank())
        .chain(a.factors().iter().map(|&d| Some(d)))
        .collect();
    let n = factor_orders.len();
    let labels: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut rows = Vec::new();
    for (idx, &(i, j)) in labels.iter().enumerate() {
        for d in [factor_orders[i], factor_orders[j]].into_iter().flatten() {
            let mut v = vec![0i64; labels.len()];
            v[idx] = d as i64;
            rows.push(v);
        }
    }
    BasedAbelianGroup {
        relations: IntegerMatrix::from_rows(labels.len(), &rows),
        labels,
        factor_orders,
    }
}

/// The subgroups and quotients of `A ⊗ A` that feed the homotopy invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianSubquotients {
    pub tensor: AbelianInvariants,
    pub nabla: AbelianInvariants,
    pub delta: AbelianInvariants,
    pub nabla_mod_delta: AbelianInvariants,
    pub exterior: AbelianInvariants,
    pub symmetric_tensor: AbelianInvariants,
    pub r: usize,
    pub k: usize,
}

pub fn abelian_subquotients(a: &AbelianInvariants) -> AbelianSubquotients {
    let sq = abelian_tensor_square(a);
    let rel = &sq.relations;
    let nabla = sq.nabla_generators();
    let delta = sq.delta_generators();
    let all = IntegerMatrix::identity(sq.labels.len());

    let out = AbelianSubquotients {
        tensor: sq.invariants(),
        nabla: subquotient_invariants(&nabla, rel),
        delta: subquotient_invariants(&delta, rel),
        nabla_mod_delta: subquotient_invariants(&nabla, &rel.vstack(&delta)),
        exterior: subquotient_invariants(&all, &rel.vstack(&nabla)),
        symmetric_tensor: subquotient_invariants(&all, &rel.vstack(&delta)),
        r: a.rank(),
        k: a.even_factor_count(),
    };
    debug_assert_eq!(
        out.nabla_mod_delta,
        AbelianInvariants::elementary_two(out.r + out.k),
        "∇/Δ must be elementary abelian of rank r + k"
    );
    out
}

/// Whether `Δ ⊆ ∇` holds in the based group.
pub fn delta_in_nabla(a: &AbelianInvariants) -> bool {
    let sq = abelian_tensor_square(a);
    let killed = sq.relations.vstack(&sq.nabla_generators());
    subquotient_invariants(&sq.delta_generators(), &killed).is_trivial()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(f: &[u64]) -> AbelianInvariants {
        AbelianInvariants::finite(f)
    }

    #[test]
    fn tensor_square_examples() {
        assert_eq!(abelian_tensor_square(&fin(&[2])).invariants(), fin(&[2]));
        assert_eq!(abelian_tensor_square(&fin(&[6])).invariants(), fin(&[6]));
        assert_eq!(abelian_tensor_square(&fin(&[2, 2])).invariants(), fin(&[2, 2, 2, 2]));
        assert_eq!(abelian_tensor_square(&fin(&[2, 4])).invariants(), fin(&[2, 2, 2, 4]));
        let sq = abelian_tensor_square(&fin(&[2, 2]));
        assert_eq!(sq.labels.len(), 4);
    }

    #[test]
    fn cyclic_four() {
        let s = abelian_subquotients(&fin(&[4]));
        assert_eq!(s.tensor, fin(&[4]));
        assert_eq!(s.nabla, fin(&[4]));
        assert_eq!(s.delta, fin(&[2]));
        assert_eq!(s.nabla_mod_delta, fin(&[2]));
        assert_eq!(s.exterior, AbelianInvariants::trivial());
        assert_eq!(s.symmetric_tensor, fin(&[2]));
    }

    #[test]
    fn klein_four() {
        let s = abelian_subquotients(&fin(&[2, 2]));
        assert_eq!(s.nabla, fin(&[2, 2, 2]));
        assert_eq!(s.delta, fin(&[2]));
        assert_eq!(s.nabla_mod_delta, fin(&[2, 2]));
        assert_eq!(s.exterior, fin(&[2]));
        assert_eq!((s.r, s.k), (0, 2));
    }

    #[test]
    fn infinite_cyclic() {
        let z = AbelianInvariants::new(1, vec![]).unwrap();
        let s = abelian_subquotients(&z);
        assert_eq!(s.nabla, z);
        assert_eq!(s.delta, z);
        assert_eq!(s.nabla_mod_delta, fin(&[2]));
        assert_eq!(s.exterior, AbelianInvariants::trivial());
        assert!(delta_in_nabla(&z));
    }

    #[test]
    fn odd_order_has_nabla_equal_delta() {
        let s = abelian_subquotients(&fin(&[3, 3]));
        assert_eq!(s.nabla, s.delta);
        assert_eq!(s.tensor, fin(&[3, 3, 3, 3]));
        assert_eq!(s.exterior, fin(&[3]));
    }
}
