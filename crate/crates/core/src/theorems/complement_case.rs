//! Groups whose derived subgroup has a complement: `∇(G) ≅ ∇(G_ab)`,
//! `Δ(G) ≅ Δ(G_ab)` and `G ⊗ G ≅ ∇(G) × (G ∧ G)`.

use serde::{Deserialize, Serialize};

use super::{Checks, Status};
use crate::abelian::{abelian_subquotients, AbelianInvariants};
use crate::error::Result;
use crate::group::{abelianization, find_complement, FiniteGroup};
use crate::tensor::{TensorOptions, TensorSquare};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementReport {
    pub complement_order: Option<u64>,
    pub abelianization: AbelianInvariants,
    pub nabla: Option<AbelianInvariants>,
    pub nabla_abelianization: AbelianInvariants,
    pub delta: Option<AbelianInvariants>,
    pub delta_abelianization: AbelianInvariants,
    pub checks: Checks,
    pub status: Status,
}

pub fn verify_complement_case(g: &FiniteGroup) -> Result<ComplementReport> {
    verify_complement_case_with(g, None, &TensorOptions::default())
}

/// Reuses `t` when given; it must be the tensor square of `g`.
pub fn verify_complement_case_with(
    g: &FiniteGroup,
    t: Option<&TensorSquare>,
    options: &TensorOptions,
) -> Result<ComplementReport> {
    let ab = abelianization(g);
    let closed = abelian_subquotients(&ab);
    let mut report = ComplementReport {
        complement_order: None,
        abelianization: ab,
        nabla: None,
        nabla_abelianization: closed.nabla,
        delta: None,
        delta_abelianization: closed.delta,
        checks: Checks::default(),
        status: Status::NotApplicable,
    };
    let Some(b) = find_complement(g, &g.derived_subgroup())? else {
        return Ok(report);
    };
    report.complement_order = Some(b.order());
    let owned;
    let t = match t {
        Some(t) => t,
        None => {
            owned = TensorSquare::new(g, options)?;
            &owned
        }
    };
    let nabla = t.nabla_invariants();
    let delta = t.delta_invariants();
    let c = &mut report.checks;
    c.record("nabla_matches_abelianization", nabla == report.nabla_abelianization);
    c.record("delta_matches_abelianization", delta == report.delta_abelianization);
    c.record("order_identity", t.order() == t.nabla().len() as u64 * t.exterior_order());
    c.record("pi3_is_h2_plus_nabla", t.pi3() == t.h2().direct_sum(&nabla));
    report.nabla = Some(nabla);
    report.delta = Some(delta);
    report.status = report.checks.status();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_named_group;

    #[test]
    fn s3() {
        let r = verify_complement_case(&make_named_group("S3").unwrap()).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.nabla, Some(AbelianInvariants::finite(&[2])));
        assert_eq!(r.delta, Some(AbelianInvariants::trivial()));
    }

    #[test]
    fn q8_not_applicable() {
        let r = verify_complement_case(&make_named_group("Q8").unwrap()).unwrap();
        assert_eq!(r.status, Status::NotApplicable);
        assert_eq!(r.complement_order, None);
    }
}
