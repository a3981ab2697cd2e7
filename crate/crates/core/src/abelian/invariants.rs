use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^rank + Z/d1 + ... + Z/dm` in
/// invariant-factor form: every `di >= 2` and `d1 | d2 | ... | dm`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawInvariants", into = "RawInvariants")]
pub struct AbelianInvariants {
    rank: usize,
    factors: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawInvariants {
    rank: usize,
    factors: Vec<u64>,
}

impl TryFrom<RawInvariants> for AbelianInvariants {
    type Error = Error;
    fn try_from(raw: RawInvariants) -> Result<Self> {
        AbelianInvariants::new(raw.rank, raw.factors)
    }
}

impl From<AbelianInvariants> for RawInvariants {
    fn from(a: AbelianInvariants) -> Self {
        RawInvariants {
            rank: a.rank,
            factors: a.factors,
        }
    }
}

impl AbelianInvariants {
    /// Validates an invariant-factor chain.
    pub fn new(rank: usize, factors: Vec<u64>) -> Result<Self> {
        for (i, &d) in factors.iter().enumerate() {
            if d < 2 {
                return Err(Error::OutOfRange {
                    what: "invariant factor".into(),
                    detail: format!("{d} < 2 in {factors:?}"),
                });
            }
            if i > 0 && d % factors[i - 1] != 0 {
                return Err(Error::OutOfRange {
                    what: "invariant factor chain".into(),
                    detail: format!("{} does not divide {d}", factors[i - 1]),
                });
            }
        }
        Ok(AbelianInvariants { rank, factors })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    /// Torsion-only shorthand; panics on an invalid chain.
    pub fn finite(factors: &[u64]) -> Self {
        Self::new(0, factors.to_vec()).expect("valid invariant-factor chain")
    }

    /// Canonical form of `Z^rank + sum of Z/c` for arbitrary cyclic orders
    /// `c`. Orders `1` are dropped; an order of `0` counts as a free factor.
    pub fn from_cyclic_factors(rank: usize, cyclic: impl IntoIterator<Item = u64>) -> Self {
        let mut rank = rank;
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for c in cyclic {
            if c == 0 {
                rank += 1;
                continue;
            }
            for (p, e) in factorize(c) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let m = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; m];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in exps.into_iter().enumerate() {
                // Largest exponents go to the last invariant factor.
                factors[m - 1 - i] *= p.pow(e);
            }
        }
        AbelianInvariants { rank, factors }
    }

    /// `2^k` for `k` copies of `Z/2`.
    pub fn elementary_two(k: usize) -> Self {
        Self::finite(&vec![2; k])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn torsion_order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Group order, or `None` when the group is infinite.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion_order())
    }

    /// Number of even invariant factors; equals the number of even-order
    /// cyclic factors in any cyclic decomposition.
    pub fn even_factor_count(&self) -> usize {
        self.factors.iter().filter(|d| *d % 2 == 0).count()
    }

    pub fn direct_sum(&self, other: &AbelianInvariants) -> AbelianInvariants {
        Self::from_cyclic_factors(
            self.rank + other.rank,
            self.factors.iter().chain(&other.factors).copied(),
        )
    }

    pub fn exponent(&self) -> Option<u64> {
        self.is_finite().then(|| self.factors.last().copied().unwrap_or(1))
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.factors.iter().map(|d| format!("Z{d}")));
        write!(f, "{}", parts.join(" x "))
    }
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_chain() {
        let a = AbelianInvariants::from_cyclic_factors(0, [2, 3]);
        assert_eq!(a.factors(), &[6]);
        let b = AbelianInvariants::from_cyclic_factors(1, [4, 6, 1]);
        assert_eq!(b.factors(), &[2, 12]);
        assert_eq!(b.rank(), 1);
        assert_eq!(b.even_factor_count(), 2);
        assert_eq!(AbelianInvariants::from_cyclic_factors(0, [1, 1]), AbelianInvariants::trivial());
    }

    #[test]
    fn rejects_broken_chain() {
        assert!(AbelianInvariants::new(0, vec![4, 6]).is_err());
        assert!(AbelianInvariants::new(0, vec![1]).is_err());
        assert!(AbelianInvariants::new(2, vec![2, 4]).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(AbelianInvariants::trivial().to_string(), "0");
        assert_eq!(AbelianInvariants::new(1, vec![2, 2]).unwrap().to_string(), "Z x Z2 x Z2");
    }

    #[test]
    fn json_shape() {
        let a = AbelianInvariants::finite(&[2, 4]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"rank":0,"factors":[2,4]}"#);
        assert!(serde_json::from_str::<AbelianInvariants>(r#"{"rank":0,"factors":[3,4]}"#).is_err());
    }

    proptest! {
        #[test]
        fn canonical_form_preserves_order_and_chain(cs in proptest::collection::vec(1u64..40, 0..6)) {
            let a = AbelianInvariants::from_cyclic_factors(0, cs.iter().copied());
            prop_assert_eq!(a.torsion_order(), cs.iter().product::<u64>());
            prop_assert!(AbelianInvariants::new(0, a.factors().to_vec()).is_ok());
            // The even-factor count is the dimension of A/2A, so it does not
            // depend on the chosen cyclic decomposition.
            let evens = cs.iter().filter(|c| *c % 2 == 0).count();
            prop_assert_eq!(a.even_factor_count(), evens);
        }

        #[test]
        fn direct_sum_is_commutative(a in proptest::collection::vec(1u64..30, 0..4),
                                     b in proptest::collection::vec(1u64..30, 0..4)) {
            let x = AbelianInvariants::from_cyclic_factors(0, a);
            let y = AbelianInvariants::from_cyclic_factors(1, b);
            prop_assert_eq!(x.direct_sum(&y), y.direct_sum(&x));
        }
    }
}
