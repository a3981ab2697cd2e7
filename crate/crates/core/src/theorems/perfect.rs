//! For a perfect normal subgroup `N`: `ker(p ⊗ p) = j(N ⊗ N)`, split when
//! `N` has a complement, and the right-exact sequences
//! `X(N) → X(G) → X(G/N) → 0` for `X = π₃, H₂, π₂^S`.

use serde::{Deserialize, Serialize};

use super::{Checks, Status};
use crate::abelian::AbelianInvariants;
use crate::error::{Error, Result};
use crate::group::{find_complement, quotient_group, FiniteGroup, Subgroup};
use crate::tensor::{ElementSet, InducedMap, TensorOptions, TensorSquare};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    /// `pi3`, `h2` or `pi2s`.
    pub level: String,
    pub n: AbelianInvariants,
    pub g: AbelianInvariants,
    pub quotient: AbelianInvariants,
    /// `X(G)` modulo the image of `X(N)`.
    pub cokernel: AbelianInvariants,
    pub checks: Checks,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectNormalReport {
    pub g_order: u64,
    pub n_order: u64,
    pub complement_order: Option<u64>,
    /// Checks on `N ⊗ N → G ⊗ G → G/N ⊗ G/N`.
    pub tensor_checks: Checks,
    pub sequences: Vec<SequenceReport>,
    pub status: Status,
}

pub fn verify_perfect_normal_sequences(
    g: &FiniteGroup,
    n: &Subgroup,
    options: &TensorOptions,
) -> Result<PerfectNormalReport> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    if !n.group().is_perfect() {
        return Err(Error::NotPerfect);
    }
    let q = quotient_group(g, n)?;
    let tg = TensorSquare::new(g, options)?;
    let tn = if n.order() == g.order() {
        tg.clone()
    } else {
        TensorSquare::new(n.group(), options)?
    };
    let tq = TensorSquare::new(&q.group, options)?;
    let cg = tg.cayley();
    let inclusion: Vec<u32> = tn
        .cayley()
        .elements()
        .iter()
        .map(|x| cg.index_of(x).expect("N is a subgroup of G"))
        .collect();
    let ii = InducedMap::new(&tn, &tg, &inclusion)?;
    let pp = InducedMap::from_homomorphism(&tg, &tq, &q.projection)?;

    let mut tensor_checks = Checks::default();
    tensor_checks.record("kernel_is_image", pp.kernel() == ii.image());
    tensor_checks.record("surjective", pp.image().len() as u64 == tq.order());

    let complement = match find_complement(g, n) {
        Ok(b) => b,
        Err(e) if e.is_resource_cap() => None,
        Err(e) => return Err(e),
    };
    if let Some(b) = &complement {
        let cq = tq.cayley();
        let mut alpha = vec![u32::MAX; cq.len()];
        for x in b.group().elements() {
            let img = q.projection.apply(x)?;
            alpha[cq.index_of(&img).expect("quotient element") as usize] = cg.index_of(x).expect("element of G");
        }
        let splits = InducedMap::new(&tq, &tg, &alpha)
            .map(|aa| aa.then(&pp).iter().enumerate().all(|(i, &y)| y == i as u32))
            .unwrap_or(false);
        tensor_checks.record("section_splits", splits);
    }

    let t = tg.t();
    let levels: [(&str, Box<dyn Fn(&TensorSquare) -> (AbelianInvariants, Vec<u32>)>); 3] = [
        ("pi3", Box::new(|s: &TensorSquare| (s.pi3(), vec![]))),
        ("h2", Box::new(|s: &TensorSquare| (s.h2(), s.nabla_generators().to_vec()))),
        ("pi2s", Box::new(|s: &TensorSquare| (s.pi2s(), s.delta_generators().to_vec()))),
    ];
    let mut sequences = Vec::new();
    for (level, read) in levels {
        let (inv_n, _) = read(&tn);
        let (inv_g, killed_g) = read(&tg);
        let (inv_q, killed_q) = read(&tq);
        let killed_q = ElementSet::from_sorted(tq.t().closure(&killed_q));
        let image_n = ii.image_of(tn.j());

        let mut gens = image_n.elements().to_vec();
        gens.extend_from_slice(&killed_g);
        let image = ElementSet::from_sorted(t.closure(&gens));
        let kernel = ElementSet::from_sorted(
            tg.j()
                .elements()
                .iter()
                .copied()
                .filter(|&x| killed_q.contains(pp.apply(x)))
                .collect(),
        );
        let mut onto = pp.image_of(tg.j()).elements().to_vec();
        onto.extend_from_slice(killed_q.elements());
        let cokernel = tg.j_quotient_invariants(&gens);

        let mut checks = Checks::default();
        checks.record("maps_into_j", image_n.is_subset(tg.j()));
        checks.record("exact_middle", image == kernel);
        checks.record("exact_right", ElementSet::from_sorted(tq.t().closure(&onto)) == *tq.j());
        checks.record("cokernel_is_quotient_value", cokernel == inv_q);
        sequences.push(SequenceReport {
            level: level.to_string(),
            n: inv_n,
            g: inv_g,
            quotient: inv_q,
            cokernel,
            status: checks.status(),
            checks,
        });
    }

    let status = Status::from_bool(tensor_checks.all_pass() && sequences.iter().all(|s| s.status == Status::Pass));
    Ok(PerfectNormalReport {
        g_order: g.order(),
        n_order: n.order(),
        complement_order: complement.map(|b| b.order()),
        tensor_checks,
        sequences,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_named_group;

    #[test]
    fn trivial_normal_subgroup() {
        let g = make_named_group("S3").unwrap();
        let n = g.subgroup(&[]).unwrap();
        let r = verify_perfect_normal_sequences(&g, &n, &TensorOptions::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.sequences[0].cokernel, AbelianInvariants::finite(&[2]));
    }

    #[test]
    fn non_perfect_rejected() {
        let g = make_named_group("S3").unwrap();
        let n = g.derived_subgroup();
        assert!(matches!(
            verify_perfect_normal_sequences(&g, &n, &TensorOptions::default()),
            Err(Error::NotPerfect)
        ));
    }
}
