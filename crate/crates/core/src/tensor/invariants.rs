use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::square::{TensorOptions, TensorSquare};
use crate::abelian::{abelian_subquotients, AbelianInvariants};
use crate::error::{Error, Result};
use crate::group::quotient::abelian_group_invariants;
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Closed form for abelian groups, presentation otherwise.
    #[default]
    Auto,
    Presentation,
    ClosedForm,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "presentation" => Ok(Method::Presentation),
            "closed-form" => Ok(Method::ClosedForm),
            _ => Err(Error::OutOfRange {
                what: "method".into(),
                detail: format!("`{s}` is not one of auto, presentation, closed-form"),
            }),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Presentation => "presentation",
            Method::ClosedForm => "closed-form",
        })
    }
}

/// `π₃(SK(G,1)) = J`, `π₂^S(K(G,1)) = J/Δ`, `H₂(G) = J/∇`, and the orders of
/// `G ⊗ G`, `G ∧ G`, `G ⊗̃ G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyInvariants {
    pub pi3: AbelianInvariants,
    pub pi2s: AbelianInvariants,
    pub h2: AbelianInvariants,
    pub tensor_order: u64,
    pub exterior_order: u64,
    pub symmetric_order: u64,
}

impl HomotopyInvariants {
    pub fn from_tensor_square(t: &TensorSquare) -> Self {
        HomotopyInvariants {
            pi3: t.pi3(),
            pi2s: t.pi2s(),
            h2: t.h2(),
            tensor_order: t.order(),
            exterior_order: t.exterior_order(),
            symmetric_order: t.symmetric_order(),
        }
    }

    /// For abelian `A`: `J = A ⊗ A`, `J/∇ = A ∧ A`, `J/Δ = A ⊗̃ A`.
    pub fn closed_form(a: &AbelianInvariants) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::OutOfRange {
                what: "closed form".into(),
                detail: format!("{a} is infinite; orders are not finite"),
            });
        }
        let s = abelian_subquotients(a);
        let order = |x: &AbelianInvariants| x.torsion_order();
        Ok(HomotopyInvariants {
            tensor_order: order(&s.tensor),
            exterior_order: order(&s.exterior),
            symmetric_order: order(&s.symmetric_tensor),
            pi3: s.tensor,
            pi2s: s.symmetric_tensor,
            h2: s.exterior,
        })
    }
}

/// Invariants by the requested method, with the method actually used.
pub fn homotopy_invariants(g: &FiniteGroup, method: Method) -> Result<(HomotopyInvariants, Method)> {
    homotopy_invariants_with(g, method, &TensorOptions::default())
}

pub fn homotopy_invariants_with(
    g: &FiniteGroup,
    method: Method,
    options: &TensorOptions,
) -> Result<(HomotopyInvariants, Method)> {
    let method = match method {
        Method::Auto if g.is_abelian() => Method::ClosedForm,
        Method::Auto => Method::Presentation,
        m => m,
    };
    let inv = match method {
        Method::ClosedForm => {
            let a = abelian_group_invariants(g).map_err(|_| Error::InfeasibleMethod {
                method: method.to_string(),
                reason: "the group is not abelian".into(),
            })?;
            HomotopyInvariants::closed_form(&a)?
        }
        _ => HomotopyInvariants::from_tensor_square(&TensorSquare::new(g, options)?),
    };
    Ok((inv, method))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_named_group;

    fn fin(f: &[u64]) -> AbelianInvariants {
        AbelianInvariants::finite(f)
    }

    #[test]
    fn c2_closed_form() {
        let (inv, m) = homotopy_invariants(&make_named_group("C2").unwrap(), Method::Auto).unwrap();
        assert_eq!(m, Method::ClosedForm);
        assert_eq!((inv.pi3, inv.pi2s, inv.h2), (fin(&[2]), fin(&[2]), fin(&[])));
        assert_eq!((inv.tensor_order, inv.exterior_order, inv.symmetric_order), (2, 1, 2));
    }

    #[test]
    fn closed_form_matches_presentation_on_c2xc4() {
        let g = make_named_group("C2xC4").unwrap();
        let (a, _) = homotopy_invariants(&g, Method::ClosedForm).unwrap();
        let (b, _) = homotopy_invariants(&g, Method::Presentation).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn closed_form_needs_abelian() {
        let g = make_named_group("S3").unwrap();
        assert!(matches!(
            homotopy_invariants(&g, Method::ClosedForm),
            Err(Error::InfeasibleMethod { .. })
        ));
        let (inv, m) = homotopy_invariants(&g, Method::Auto).unwrap();
        assert_eq!(m, Method::Presentation);
        assert_eq!(inv.pi3, fin(&[2]));
    }

    #[test]
    fn method_text() {
        for m in [Method::Auto, Method::Presentation, Method::ClosedForm] {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("fast".parse::<Method>().is_err());
    }
}
