//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::invariants::AbelianInvariants;
use super::matrix::IntegerMatrix;

/// `u * m * v == d` with `u`, `v` unimodular and `d` diagonal, nonnegative,
/// with each nonzero diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub d: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Rows of `u` spanning the left kernel of the input matrix.
    pub fn left_kernel(&self) -> IntegerMatrix {
        let r = self.rank();
        let rows: Vec<usize> = (r..self.u.rows()).collect();
        self.u.submatrix(&rows, self.u.cols())
    }

    /// Checks every postcondition against the original matrix.
    pub fn verify(&self, m: &IntegerMatrix) -> bool {
        if self.u.mul(m).mul(&self.v) != self.d || !self.d.is_diagonal() {
            return false;
        }
        if !self.u.is_unimodular() || !self.v.is_unimodular() {
            return false;
        }
        let diag = self.diagonal();
        let mut seen_zero = false;
        for (i, x) in diag.iter().enumerate() {
            if x.is_negative() {
                return false;
            }
            if x.is_zero() {
                seen_zero = true;
                continue;
            }
            if seen_zero {
                return false;
            }
            if i > 0 && !(&diag[i] % &diag[i - 1]).is_zero() {
                return false;
            }
        }
        true
    }
}

fn smallest_nonzero(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some(b) if d[b].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form with the smallest-|entry| pivot rule and
/// row-then-column elimination.
pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Row elimination below the pivot.
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
            }
            // Column elimination right of the pivot.
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
            }

            // Remainders left in the pivot row or column: move the smallest
            // one into the pivot and repeat.
            let mut best: Option<(usize, usize)> = None;
            let mut best_abs = d[(t, t)].abs();
            for i in t + 1..rows {
                let x = d[(i, t)].abs();
                if !x.is_zero() && x < best_abs {
                    best_abs = x;
                    best = Some((i, t));
                }
            }
            for j in t + 1..cols {
                let x = d[(t, j)].abs();
                if !x.is_zero() && x < best_abs {
                    best_abs = x;
                    best = Some((t, j));
                }
            }
            if let Some((i, j)) = best {
                d.swap_rows(t, i);
                u.swap_rows(t, i);
                d.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }
            let row_clear = (t + 1..rows).all(|i| d[(i, t)].is_zero());
            let col_clear = (t + 1..cols).all(|j| d[(t, j)].is_zero());
            if !(row_clear && col_clear) {
                continue;
            }

            // Divisibility: fold an offending row into the pivot row.
            let pivot = d[(t, t)].clone();
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(&d[(i, j)] % &pivot).is_zero()));
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let result = SnfResult { d, u, v };
    debug_assert!(result.verify(m), "SNF postconditions violated for {m:?}");
    result
}

/// Invariants of `Z^cols / rowspace(m)`.
pub fn cokernel_invariants(m: &IntegerMatrix) -> AbelianInvariants {
    let snf = smith_normal_form(m);
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let rank = m.cols() - nonzero;
    let factors: Vec<u64> = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d| u64::try_from(d.clone()).expect("invariant factor fits in u64"))
        .collect();
    AbelianInvariants::new(rank, factors).expect("SNF diagonal is a divisibility chain")
}

/// Invariants of `(<gens> + L(killed)) / L(killed)` inside `Z^n / L(killed)`,
/// where `gens` and `killed` are row matrices over the same `n` columns.
pub fn subquotient_invariants(gens: &IntegerMatrix, killed: &IntegerMatrix) -> AbelianInvariants {
    let k = gens.rows();
    if k == 0 {
        return AbelianInvariants::trivial();
    }
    let stacked = gens.vstack(killed);
    let snf = smith_normal_form(&stacked);
    let kernel = snf.left_kernel();
    let rows: Vec<usize> = (0..kernel.rows()).collect();
    let relations = kernel.submatrix(&rows, k);
    cokernel_invariants(&relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn diag_2_3() {
        let m = IntegerMatrix::diagonal(&[2i64, 3]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        assert!(snf.verify(&m));
    }

    #[test]
    fn identity_and_zero() {
        let i = IntegerMatrix::identity(3);
        let snf = smith_normal_form(&i);
        assert_eq!(snf.d, i);
        let z = IntegerMatrix::zeros(1, 1);
        let snf = smith_normal_form(&z);
        assert!(snf.d[(0, 0)].is_zero());
        assert_eq!(cokernel_invariants(&z).rank(), 1);
    }

    #[test]
    fn cokernel_examples() {
        // Z^2 / <(2,4),(6,8)> = Z2 x Z4
        let m = IntegerMatrix::from_rows(2, &[vec![2i64, 4], vec![6, 8]]);
        assert_eq!(cokernel_invariants(&m), AbelianInvariants::finite(&[2, 4]));
        // No relations at all.
        let empty = IntegerMatrix::zeros(0, 3);
        assert_eq!(cokernel_invariants(&empty).rank(), 3);
    }

    #[test]
    fn subquotient_of_z4() {
        // <2> in Z/4 is Z/2; Z/4 mod <2> is Z/2.
        let killed = IntegerMatrix::from_rows(1, &[vec![4i64]]);
        let gens = IntegerMatrix::from_rows(1, &[vec![2i64]]);
        assert_eq!(subquotient_invariants(&gens, &killed), AbelianInvariants::finite(&[2]));
        assert_eq!(cokernel_invariants(&killed.vstack(&gens)), AbelianInvariants::finite(&[2]));
    }

    proptest! {
        #[test]
        fn snf_postconditions(rows in 1usize..5, cols in 1usize..5,
                              seed in proptest::collection::vec(-30i64..30, 16)) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[(i * 4 + j) % 16]).collect())
                .collect();
            let m = IntegerMatrix::from_rows(cols, &data);
            let snf = smith_normal_form(&m);
            prop_assert!(snf.verify(&m));
        }

        #[test]
        fn cokernel_order_matches_determinant(seed in proptest::collection::vec(-9i64..9, 9)) {
            let data: Vec<Vec<i64>> = (0..3).map(|i| seed[i * 3..i * 3 + 3].to_vec()).collect();
            let m = IntegerMatrix::from_rows(3, &data);
            let det = m.determinant();
            let inv = cokernel_invariants(&m);
            if det.is_zero() {
                prop_assert!(inv.rank() > 0);
            } else {
                prop_assert_eq!(BigInt::from(inv.torsion_order()), det.abs());
            }
        }
    }
}
