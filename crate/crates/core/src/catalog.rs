//! Expected values for named groups, transcribed from published statements.
//! Nothing here is computed.

use serde::{Deserialize, Serialize};

use crate::abelian::AbelianInvariants;
use crate::error::{Error, Result};
use crate::tensor::HomotopyInvariants;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRecord {
    pub name: String,
    pub pi3: Option<AbelianInvariants>,
    pub pi2s: Option<AbelianInvariants>,
    pub h2: Option<AbelianInvariants>,
    /// False when the tensor square is beyond desk-scale limits.
    pub computable: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub field: String,
    pub expected: AbelianInvariants,
    pub computed: AbelianInvariants,
}

impl ExpectedRecord {
    /// Fields the record states that disagree with `inv`.
    pub fn compare(&self, inv: &HomotopyInvariants) -> Vec<Mismatch> {
        [("pi3", &self.pi3, &inv.pi3), ("pi2s", &self.pi2s, &inv.pi2s), ("h2", &self.h2, &inv.h2)]
            .into_iter()
            .filter_map(|(field, expected, computed)| match expected {
                Some(e) if e != computed => Some(Mismatch {
                    field: field.into(),
                    expected: e.clone(),
                    computed: computed.clone(),
                }),
                _ => None,
            })
            .collect()
    }

    /// All three values, when the record states all three.
    pub fn complete(&self) -> Option<(&AbelianInvariants, &AbelianInvariants, &AbelianInvariants)> {
        Some((self.pi3.as_ref()?, self.pi2s.as_ref()?, self.h2.as_ref()?))
    }

    /// Invariants from the stored values alone; orders follow from
    /// `|G ⊗ G| = |J|·|G′|`, `|∇| = |J|/|H₂|` and `|Δ| = |J|/|π₂^S|`.
    pub fn homotopy_invariants(&self, derived_order: u64) -> Option<HomotopyInvariants> {
        let (pi3, pi2s, h2) = self.complete()?;
        let tensor_order = pi3.torsion_order() * derived_order;
        Some(HomotopyInvariants {
            tensor_order,
            exterior_order: derived_order * h2.torsion_order(),
            symmetric_order: derived_order * pi2s.torsion_order(),
            pi3: pi3.clone(),
            pi2s: pi2s.clone(),
            h2: h2.clone(),
        })
    }
}

fn z(factors: &[u64]) -> Option<AbelianInvariants> {
    Some(AbelianInvariants::finite(factors))
}

fn record(
    name: &str,
    pi3: Option<AbelianInvariants>,
    pi2s: Option<AbelianInvariants>,
    h2: Option<AbelianInvariants>,
    computable: bool,
    note: &str,
) -> ExpectedRecord {
    ExpectedRecord {
        name: name.into(),
        pi3,
        pi2s,
        h2,
        computable,
        note: note.into(),
    }
}

pub fn catalog() -> Vec<ExpectedRecord> {
    let small_sym = "symmetric groups, n < 4: pi3 = pi2s = Z/2 and H2 = 0";
    let big_sym = "symmetric groups, n >= 4: pi3 = pi2s = Z/2 x Z/2 and H2 = Z/2";
    let mut out = vec![
        record("S2", z(&[2]), z(&[2]), z(&[]), true, small_sym),
        record("S3", z(&[2]), z(&[2]), z(&[]), true, small_sym),
        record("S4", z(&[2, 2]), z(&[2, 2]), z(&[2]), true, big_sym),
        record("S5", z(&[2, 2]), z(&[2, 2]), z(&[2]), false, big_sym),
        record(
            "A5",
            z(&[2]),
            z(&[2]),
            z(&[2]),
            true,
            "alternating groups, n >= 5 and n != 6, 7: pi3 = pi2s = Z/2 (perfect, so both equal H2)",
        ),
    ];
    for n in [6, 7] {
        out.push(record(
            &format!("A{n}"),
            z(&[6]),
            z(&[6]),
            z(&[6]),
            false,
            "alternating groups, n = 6, 7: pi3 = pi2s = Z/6 (perfect, so both equal H2)",
        ));
    }
    for order in (6..=16).step_by(2) {
        let n = order / 2;
        let (pi2s, note) = if n % 2 == 1 {
            (z(&[2]), format!("dihedral group of order {order} (n = {n} odd): pi2s = Z/2"))
        } else {
            (z(&[2, 2, 2]), format!("dihedral group of order {order} (n = {n} even): pi2s = (Z/2)^3"))
        };
        out.push(record(&format!("D{order}"), None, pi2s, None, true, &note));
    }
    out.push(record("Q8", None, z(&[2, 2]), None, true, "quaternion group: pi2s = (Z/2)^2"));

    let gl_big_p = "GL(n,p), p > 3: pi3 = Z/(p-1), pi2s = Z/2, H2 = 0";
    out.push(record("GL(1,5)", z(&[4]), z(&[2]), z(&[]), true, gl_big_p));
    out.push(record("GL(1,7)", z(&[6]), z(&[2]), z(&[]), true, gl_big_p));
    out.push(record("GL(2,5)", z(&[4]), z(&[2]), z(&[]), false, gl_big_p));
    let gl3 = "GL(n,3), n != 2: pi3 = pi2s = Z/2, H2 = 0";
    out.push(record("GL(1,3)", z(&[2]), z(&[2]), z(&[]), true, gl3));
    out.push(record("GL(3,3)", z(&[2]), z(&[2]), z(&[]), false, gl3));
    let gl2 = "GL(n,2), n in {3, 4}: pi3 = pi2s = H2 = Z/2";
    out.push(record("GL(3,2)", z(&[2]), z(&[2]), z(&[2]), false, gl2));
    out.push(record("GL(4,2)", z(&[2]), z(&[2]), z(&[2]), false, gl2));
    out.push(record(
        "GL(5,2)",
        z(&[]),
        z(&[]),
        None,
        false,
        "GL(n,2), n > 4: pi3 and pi2s trivial",
    ));
    out
}

/// Names are matched after removing whitespace.
pub fn catalog_lookup(name: &str) -> Result<ExpectedRecord> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    catalog()
        .into_iter()
        .find(|r| r.name == key)
        .ok_or(Error::UnknownGroup(key))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let s4 = catalog_lookup("S4").unwrap();
        assert_eq!(s4.pi3, z(&[2, 2]));
        assert_eq!(s4.pi2s, z(&[2, 2]));
        let a6 = catalog_lookup("A6").unwrap();
        assert_eq!((a6.pi3.clone(), a6.pi2s.clone(), a6.computable), (z(&[6]), z(&[6]), false));
        assert_eq!(catalog_lookup("D12").unwrap().pi2s, z(&[2, 2, 2]));
        assert_eq!(catalog_lookup("GL(3, 2)").unwrap().computable, false);
        assert!(matches!(catalog_lookup("C5"), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn names_unique() {
        let c = catalog();
        let mut names: Vec<_> = c.iter().map(|r| r.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }

    #[test]
    fn orders_from_record() {
        // S3: |G′| = 3, so |G ⊗ G| = 6, |G ∧ G| = 3, |G ⊗̃ G| = 6.
        let inv = catalog_lookup("S3").unwrap().homotopy_invariants(3).unwrap();
        assert_eq!((inv.tensor_order, inv.exterior_order, inv.symmetric_order), (6, 3, 6));
        assert!(catalog_lookup("Q8").unwrap().homotopy_invariants(2).is_none());
    }
}
