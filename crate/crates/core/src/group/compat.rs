//! Compatibility of mutual actions: for all `g, g' ∈ G` and `h, h' ∈ H`,
//! `^(ʰg) h' = ^(h g h⁻¹) h'` and `^(ᵍh) g' = ^(g h g⁻¹) g'`, where the right
//! sides are composites of the given action with conjugation.

use serde::Serialize;

use super::action::ActionTable;
use super::finite::FiniteGroup;
use super::perm::Perm;
use crate::error::{Error, Result};

pub const COMPAT_ORDER_LIMIT: u64 = 1000;

/// `G` acting on `H` and `H` acting on `G`.
#[derive(Clone, Debug)]
pub struct ActionPair {
    pub g_on_h: ActionTable,
    pub h_on_g: ActionTable,
}

impl ActionPair {
    pub fn new(g_on_h: ActionTable, h_on_g: ActionTable) -> Result<Self> {
        if !g_on_h.acting().same_group(h_on_g.target()) || !g_on_h.target().same_group(h_on_g.acting()) {
            return Err(Error::InvalidAction("the two actions do not involve the same pair of groups".into()));
        }
        Ok(ActionPair { g_on_h, h_on_g })
    }

    /// Both groups inside a common group, acting on each other by conjugation.
    pub fn conjugation(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        Self::new(ActionTable::conjugation(g, h)?, ActionTable::conjugation(h, g)?)
    }

    /// A group acting on itself by conjugation from both sides.
    pub fn self_conjugation(g: &FiniteGroup) -> Result<Self> {
        Self::conjugation(g, g)
    }

    pub fn trivial(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        Self::new(ActionTable::trivial(g, h)?, ActionTable::trivial(h, g)?)
    }
}

/// Which of the two compatibility equations failed, with the elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// `^(ʰg) h' ≠ ^(h g h⁻¹) h'`
    ActionOnH { g: String, h: String, h_prime: String },
    /// `^(ᵍh) g' ≠ ^(g h g⁻¹) g'`
    ActionOnG { g: String, h: String, g_prime: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatibilityReport {
    pub compatible: bool,
    pub witness: Option<Violation>,
}

pub fn check_compatible_actions(pair: &ActionPair) -> Result<CompatibilityReport> {
    check_compatible_actions_bounded(pair, COMPAT_ORDER_LIMIT)
}

pub fn check_compatible_actions_bounded(pair: &ActionPair, bound: u64) -> Result<CompatibilityReport> {
    let gh = &pair.g_on_h;
    let hg = &pair.h_on_g;
    let gt = gh.acting_table();
    let ht = gh.target_table();
    for (what, order) in [("G", gt.len() as u64), ("H", ht.len() as u64)] {
        if order > bound {
            return Err(Error::BoundExceeded {
                what: format!("compatibility check on {what}"),
                order,
                bound,
            });
        }
    }
    // The two tables use the same Cayley indexing for each group.
    let name_g = |i: u32| gt.element(i).to_string();
    let name_h = |i: u32| ht.element(i).to_string();
    let (ng, nh) = (gt.len() as u32, ht.len() as u32);

    for g in 0..ng {
        for h in 0..nh {
            let hg_g = hg.apply_index(h, g);
            let h_inv = ht.inv(h);
            for hp in 0..nh {
                let lhs = gh.apply_index(hg_g, hp);
                let rhs = ht.conj(h, gh.apply_index(g, ht.conj(h_inv, hp)));
                if lhs != rhs {
                    return Ok(CompatibilityReport {
                        compatible: false,
                        witness: Some(Violation::ActionOnH {
                            g: name_g(g),
                            h: name_h(h),
                            h_prime: name_h(hp),
                        }),
                    });
                }
            }
            let gh_h = gh.apply_index(g, h);
            let g_inv = gt.inv(g);
            for gp in 0..ng {
                let lhs = hg.apply_index(gh_h, gp);
                let rhs = gt.conj(g, hg.apply_index(h, gt.conj(g_inv, gp)));
                if lhs != rhs {
                    return Ok(CompatibilityReport {
                        compatible: false,
                        witness: Some(Violation::ActionOnG {
                            g: name_g(g),
                            h: name_h(h),
                            g_prime: name_g(gp),
                        }),
                    });
                }
            }
        }
    }
    Ok(CompatibilityReport {
        compatible: true,
        witness: None,
    })
}

/// `C2` acting on `S3` by conjugation with `(1 2)`, `S3` acting trivially on
/// `C2`. These actions are not compatible.
pub fn incompatible_c2_s3_pair() -> Result<ActionPair> {
    let c2 = FiniteGroup::new(2, vec![Perm::from_cycles(2, "(1,2)")?])?;
    let s3 = FiniteGroup::new(
        3,
        vec![Perm::from_cycles(3, "(1,2)")?, Perm::from_cycles(3, "(1,2,3)")?],
    )?;
    let t = Perm::from_cycles(3, "(1,2)")?;
    let images = vec![s3.generators().iter().map(|x| x.conjugate_by(&t)).collect()];
    let c2_on_s3 = ActionTable::new(&c2, &s3, &images)?;
    let s3_on_c2 = ActionTable::trivial(&s3, &c2)?;
    ActionPair::new(c2_on_s3, s3_on_c2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::new(
            3,
            vec![Perm::from_cycles(3, "(1,2)").unwrap(), Perm::from_cycles(3, "(1,2,3)").unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn conjugation_is_compatible() {
        let pair = ActionPair::self_conjugation(&s3()).unwrap();
        assert!(check_compatible_actions(&pair).unwrap().compatible);
    }

    #[test]
    fn trivial_actions_are_compatible() {
        let c2 = FiniteGroup::new(2, vec![Perm::from_cycles(2, "(1,2)").unwrap()]).unwrap();
        let pair = ActionPair::trivial(&c2, &s3()).unwrap();
        assert!(check_compatible_actions(&pair).unwrap().compatible);
    }

    #[test]
    fn c2_on_s3_is_incompatible() {
        let report = check_compatible_actions(&incompatible_c2_s3_pair().unwrap()).unwrap();
        assert!(!report.compatible);
        assert!(matches!(report.witness, Some(Violation::ActionOnH { .. })));
    }

    #[test]
    fn bound_is_enforced() {
        let pair = ActionPair::self_conjugation(&s3()).unwrap();
        assert!(matches!(
            check_compatible_actions_bounded(&pair, 5),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
