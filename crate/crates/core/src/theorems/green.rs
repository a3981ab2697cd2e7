//! `π₂^S = H₂ ⊕ (Z/2)^{r+k}` and the bound
//! `|π₂^S| ≤ 2^{r+k} ∏ pᵢ^{aᵢ(aᵢ-1)/2}` for `|G| = ∏ pᵢ^{aᵢ}`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use super::Status;
use crate::abelian::{factorize, AbelianInvariants};
use crate::group::{abelianization, FiniteGroup};

/// `h2 ⊕ (Z/2)^{r+k}` where `r` is the rank of `G_ab` and `k` the number of
/// its even invariant factors.
pub fn pi2s_closed_form(g_ab: &AbelianInvariants, h2: &AbelianInvariants) -> AbelianInvariants {
    h2.direct_sum(&AbelianInvariants::elementary_two(g_ab.rank() + g_ab.even_factor_count()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub group_order: u64,
    /// `(p, a)` with `p` ascending.
    pub factorization: Vec<(u64, u32)>,
    pub r: usize,
    pub k: usize,
    #[serde(serialize_with = "decimal", deserialize_with = "from_decimal")]
    pub bound: BigUint,
    pub measured: u64,
    pub status: Status,
}

fn decimal<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

fn from_decimal<'de, D: serde::Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    let text = String::deserialize(d)?;
    BigUint::parse_bytes(text.as_bytes(), 10).ok_or_else(|| serde::de::Error::custom("not a decimal integer"))
}

pub fn green_bound(order: u64, r: usize, k: usize) -> BigUint {
    factorize(order)
        .into_iter()
        .fold(BigUint::from(2u32).pow((r + k) as u32), |acc, (p, a)| {
            acc * BigUint::from(p).pow(a * (a - 1) / 2)
        })
}

pub fn green_bound_check(g: &FiniteGroup, measured_pi2s: &AbelianInvariants) -> BoundReport {
    let ab = abelianization(g);
    let (r, k) = (ab.rank(), ab.even_factor_count());
    let bound = green_bound(g.order(), r, k);
    let measured = measured_pi2s.torsion_order();
    BoundReport {
        group_order: g.order(),
        factorization: factorize(g.order()),
        r,
        k,
        status: Status::from_bool(measured_pi2s.is_finite() && BigUint::from(measured) <= bound),
        bound,
        measured,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_named_group;

    fn fin(f: &[u64]) -> AbelianInvariants {
        AbelianInvariants::finite(f)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(pi2s_closed_form(&fin(&[2]), &fin(&[2])), fin(&[2, 2]));
        assert_eq!(pi2s_closed_form(&fin(&[2, 2]), &fin(&[])), fin(&[2, 2]));
        assert_eq!(pi2s_closed_form(&fin(&[]), &fin(&[2])), fin(&[2]));
        assert_eq!(pi2s_closed_form(&fin(&[3]), &fin(&[])), fin(&[]));
    }

    #[test]
    fn bounds() {
        // Q8: 2^2 · 2^3; C2: 2^1; S4: 2 · 2^3.
        let q8 = green_bound_check(&make_named_group("Q8").unwrap(), &fin(&[2, 2]));
        assert_eq!((q8.bound.clone(), q8.status), (BigUint::from(32u32), Status::Pass));
        assert_eq!(green_bound(2, 0, 1), BigUint::from(2u32));
        assert_eq!(green_bound(24, 0, 1), BigUint::from(16u32));
        let c2 = green_bound_check(&make_named_group("C2").unwrap(), &fin(&[2, 2]));
        assert_eq!(c2.status, Status::Fail);
    }

    #[test]
    fn json_round_trip() {
        let r = green_bound_check(&make_named_group("S4").unwrap(), &fin(&[2, 2]));
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"bound\":\"16\""));
        assert_eq!(serde_json::from_str::<BoundReport>(&text).unwrap(), r);
    }
}
