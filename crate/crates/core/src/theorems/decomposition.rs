//! `G = N ⋊ H` with projection `p` and section `α`: the kernels of `p ⊗ p`
//! on `G ⊗ G`, `G ∧ G`, `∇(G)`, `Δ(G)`, `G ⊗̃ G`, and the splitting by
//! `α ⊗ α`.

use serde::{Deserialize, Serialize};

use super::{Checks, Status};
use crate::error::{Error, Result};
use crate::group::{semidirect_product, ActionTable, FiniteGroup, Subgroup};
use crate::tensor::{ElementSet, InducedMap, TensorOptions, TensorSquare};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionOrders {
    pub tensor_g: u64,
    pub tensor_h: u64,
    pub exterior_g: u64,
    pub exterior_h: u64,
    pub symmetric_g: u64,
    pub symmetric_h: u64,
    pub nabla_g: u64,
    pub nabla_h: u64,
    pub delta_g: u64,
    pub delta_h: u64,
    pub k1: u64,
    pub k2: u64,
    pub k3: u64,
    pub k4: u64,
    pub k5: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartReport {
    /// `tensor`, `exterior`, `nabla`, `delta` or `symmetric`.
    pub part: String,
    pub status: Status,
    pub checks: Checks,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub g_order: u64,
    pub n_order: u64,
    pub h_order: u64,
    pub orders: DecompositionOrders,
    /// `α ⊗ α` is a well-defined homomorphism `H ⊗ H → G ⊗ G`.
    pub section_homomorphism: bool,
    pub parts: Vec<PartReport>,
    pub status: Status,
}

impl DecompositionReport {
    pub fn part(&self, name: &str) -> Option<&PartReport> {
        self.parts.iter().find(|p| p.part == name)
    }
}

/// Builds `N ⋊ H` from the action and verifies the decomposition.
pub fn verify_semidirect_decomposition(action: &ActionTable, options: &TensorOptions) -> Result<DecompositionReport> {
    let sdp = semidirect_product(action)?;
    let n = sdp.normal_subgroup()?;
    let h = sdp.complement()?;
    verify_decomposition(&sdp.group, &n, &h, options)
}

/// `G = N ⋊ B` for a normal subgroup `N` and a complement `B`, with `p` the
/// projection onto `B` and `α` the inclusion.
pub fn verify_decomposition(
    g: &FiniteGroup,
    n: &Subgroup,
    b: &Subgroup,
    options: &TensorOptions,
) -> Result<DecompositionReport> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    if n.order() * b.order() != g.order() || n.intersection_order(b.group()) != 1 {
        return Err(Error::InvalidAction("the subgroups do not form a semidirect decomposition".into()));
    }
    let tg = TensorSquare::new(g, options)?;
    let th = TensorSquare::new(b.group(), options)?;
    let (cg, ch) = (tg.cayley(), th.cayley());
    let n_idx = cg.indices_of(n.group());
    let in_n = |x: u32| n_idx.binary_search(&x).is_ok();
    let b_pairs: Vec<(u32, u32)> = ch
        .elements()
        .iter()
        .enumerate()
        .map(|(i, e)| (cg.index_of(e).expect("complement element"), i as u32))
        .collect();
    let p: Vec<u32> = (0..cg.len() as u32)
        .map(|x| {
            b_pairs
                .iter()
                .find(|&&(bg, _)| in_n(cg.mul(x, cg.inv(bg))))
                .map(|&(_, bh)| bh)
                .expect("every coset of N meets the complement")
        })
        .collect();
    let alpha: Vec<u32> = b_pairs.iter().map(|&(bg, _)| bg).collect();

    let pp = InducedMap::new(&tg, &th, &p)?;
    let aa = InducedMap::new(&th, &tg, &alpha);
    let section_homomorphism = aa.is_ok();

    let t = tg.t();
    let (nabla_g, delta_g) = (tg.nabla(), tg.delta());
    let (nabla_h, delta_h) = (th.nabla(), th.delta());
    let trivial = ElementSet::from_sorted(vec![0]);
    let close = |gens: &[u32]| ElementSet::from_sorted(t.normal_closure(gens));
    let with = |mut gens: Vec<u32>, extra: &[u32]| {
        gens.extend_from_slice(extra);
        gens
    };

    let all_g = 0..cg.len() as u32;
    let g_tensor_n: Vec<u32> = all_g.clone().flat_map(|x| n_idx.iter().map(move |&m| (x, m))).map(|(x, m)| tg.lambda(x, m)).collect();
    let n_tensor_g: Vec<u32> = all_g.clone().flat_map(|x| n_idx.iter().map(move |&m| (m, x))).map(|(m, x)| tg.lambda(m, x)).collect();

    let k1 = pp.kernel();
    let p2 = pp.preimage(nabla_h);
    let p5 = pp.preimage(delta_h);
    let k3 = ElementSet::from_unsorted(k1.elements().iter().copied().filter(|&x| nabla_g.contains(x)).collect());
    let k4 = ElementSet::from_unsorted(k1.elements().iter().copied().filter(|&x| delta_g.contains(x)).collect());

    let orders = DecompositionOrders {
        tensor_g: tg.order(),
        tensor_h: th.order(),
        exterior_g: tg.exterior_order(),
        exterior_h: th.exterior_order(),
        symmetric_g: tg.symmetric_order(),
        symmetric_h: th.symmetric_order(),
        nabla_g: nabla_g.len() as u64,
        nabla_h: nabla_h.len() as u64,
        delta_g: delta_g.len() as u64,
        delta_h: delta_h.len() as u64,
        k1: k1.len() as u64,
        k2: (p2.len() / nabla_g.len()) as u64,
        k3: k3.len() as u64,
        k4: k4.len() as u64,
        k5: (p5.len() / delta_g.len()) as u64,
    };

    // Section checks, all false when α ⊗ α is not a homomorphism.
    let splits = aa
        .as_ref()
        .map(|a| a.then(&pp).iter().enumerate().all(|(i, &y)| y == i as u32))
        .unwrap_or(false);
    let section_image = aa.as_ref().map(|a| a.image()).unwrap_or_else(|_| trivial.clone());
    let maps_into = |src: &ElementSet, dst: &ElementSet| {
        aa.as_ref().map(|a| a.image_of(src).is_subset(dst)).unwrap_or(false)
    };
    // In the quotient by `m`, the image of the section meets the kernel `pre`
    // only in the identity.
    let meets_trivially_mod = |pre: &ElementSet, m: &ElementSet| {
        let mut gens = section_image.elements().to_vec();
        gens.extend_from_slice(m.elements());
        ElementSet::from_sorted(t.closure(&gens)).intersection_len(pre) == m.len()
    };

    let mut parts = Vec::new();

    let mut c = Checks::default();
    let mut gens = g_tensor_n.clone();
    gens.extend_from_slice(&n_tensor_g);
    c.record("kernel_generated", close(&gens) == k1);
    c.record("order_identity", orders.tensor_g == orders.k1 * orders.tensor_h);
    c.record("surjective", pp.image().len() as u64 == orders.tensor_h);
    c.record("section_homomorphism", section_homomorphism);
    c.record("section_splits", splits);
    c.record("complement_meets_kernel_trivially", section_homomorphism && meets_trivially_mod(&k1, &trivial));
    parts.push(PartReport { part: "tensor".into(), status: c.status(), checks: c });

    let mut c = Checks::default();
    c.record("kernel_generated", close(&with(g_tensor_n.clone(), tg.nabla_generators())) == p2);
    c.record("order_identity", orders.exterior_g == orders.k2 * orders.exterior_h);
    c.record("nabla_maps_onto", pp.image_of(nabla_g) == *nabla_h);
    c.record("section_preserves_nabla", maps_into(nabla_h, nabla_g));
    c.record("section_splits", splits);
    c.record("complement_meets_kernel_trivially", section_homomorphism && meets_trivially_mod(&p2, nabla_g));
    parts.push(PartReport { part: "exterior".into(), status: c.status(), checks: c });

    let mut c = Checks::default();
    let mut k3_gens: Vec<u32> = all_g
        .clone()
        .flat_map(|x| n_idx.iter().map(move |&m| (x, m)))
        .map(|(x, m)| t.mul(tg.lambda(x, m), tg.lambda(m, x)))
        .collect();
    k3_gens.extend(n_idx.iter().map(|&m| tg.lambda(m, m)));
    c.record("kernel_generated", ElementSet::from_sorted(t.closure(&k3_gens)) == k3);
    c.record("maps_onto", pp.image_of(nabla_g) == *nabla_h);
    c.record("order_identity", orders.nabla_g == orders.k3 * orders.nabla_h);
    c.record("section_into_nabla", maps_into(nabla_h, nabla_g));
    c.record(
        "direct",
        aa.as_ref().map(|a| a.image_of(nabla_h).intersection_len(&k3) == 1).unwrap_or(false),
    );
    parts.push(PartReport { part: "nabla".into(), status: c.status(), checks: c });

    let mut c = Checks::default();
    c.record("maps_onto", pp.image_of(delta_g) == *delta_h);
    c.record("order_identity", orders.delta_g == orders.k4 * orders.delta_h);
    c.record("section_into_delta", maps_into(delta_h, delta_g));
    c.record(
        "direct",
        aa.as_ref().map(|a| a.image_of(delta_h).intersection_len(&k4) == 1).unwrap_or(false),
    );
    parts.push(PartReport { part: "delta".into(), status: c.status(), checks: c });

    let mut c = Checks::default();
    c.record("kernel_generated", close(&with(g_tensor_n, tg.delta_generators())) == p5);
    c.record("order_identity", orders.symmetric_g == orders.k5 * orders.symmetric_h);
    c.record("delta_maps_onto", pp.image_of(delta_g) == *delta_h);
    c.record("section_preserves_delta", maps_into(delta_h, delta_g));
    c.record("section_splits", splits);
    c.record("complement_meets_kernel_trivially", section_homomorphism && meets_trivially_mod(&p5, delta_g));
    parts.push(PartReport { part: "symmetric".into(), status: c.status(), checks: c });

    let status = Status::from_bool(parts.iter().all(|p| p.status == Status::Pass));
    Ok(DecompositionReport {
        g_order: g.order(),
        n_order: n.order(),
        h_order: b.order(),
        orders,
        section_homomorphism,
        parts,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_semidirect;

    fn report(spec: &str) -> DecompositionReport {
        let s = make_semidirect(spec).unwrap();
        verify_semidirect_decomposition(&s.action, &TensorOptions::default()).unwrap()
    }

    #[test]
    fn s3() {
        let r = report("sdp(C3,C2,inversion)");
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!((r.orders.tensor_g, r.orders.tensor_h, r.orders.k1), (6, 2, 3));
    }

    #[test]
    fn c6_trivial_action() {
        let r = report("sdp(C3,C2,trivial)");
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.orders.k1, 3);
    }
}
