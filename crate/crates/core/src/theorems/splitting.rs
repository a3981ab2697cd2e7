//! The splitting `G ⊗ G ≅ ∇(G) × (G ∧ G)` when every `g ⊗ g` has odd order
//! `m = 2n + 1`, by `α′(g ⊗ h) = [(g ⊗ h)(h ⊗ g)]^{-n}`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{Checks, Status};
use crate::tensor::{element_map, TensorSquare};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingWitness {
    /// lcm of the orders of `g ⊗ g`.
    pub m: u64,
    /// `(m - 1) / 2`, when `m` is odd.
    pub n: Option<u64>,
    pub relators_checked: u64,
    pub relator_violations: u64,
    /// `|ker α′|`, which should be `|G ∧ G|`.
    pub kernel_order: Option<u64>,
    pub checks: Checks,
    pub status: Status,
}

pub fn odd_splitting(t: &TensorSquare) -> SplittingWitness {
    let tg = t.t();
    let size = t.symbols().group_order() as u32;
    let m = (0..size).map(|x| tg.element_order(t.lambda(x, x))).fold(1u64, |a, b| a.lcm(&b));
    if m % 2 == 0 {
        return SplittingWitness {
            m,
            n: None,
            relators_checked: 0,
            relator_violations: 0,
            kernel_order: None,
            checks: Checks::default(),
            status: Status::NotApplicable,
        };
    }
    let n = (m - 1) / 2;
    let symbols = t.symbols();
    // α′ on each symbol.
    let on_symbol: Vec<u32> = (0..symbols.len())
        .map(|s| {
            let (a, b) = symbols.pair(s);
            tg.pow(tg.mul(t.lambda(a, b), t.lambda(b, a)), -(n as i64))
        })
        .collect();
    let on_col = |col: usize| {
        let y = on_symbol[col / 2];
        if col % 2 == 0 {
            y
        } else {
            tg.inv(y)
        }
    };

    let mut relators_checked = 0u64;
    let mut relator_violations = 0u64;
    for r in t.presentation().relators() {
        let v = r.letters().iter().fold(0u32, |x, &l| {
            let col = if l > 0 { 2 * (l as usize - 1) } else { 2 * (-l as usize - 1) + 1 };
            tg.mul(x, on_col(col))
        });
        relators_checked += 1;
        if v != 0 {
            relator_violations += 1;
        }
    }

    let mut checks = Checks::default();
    checks.record("respects_relators", relator_violations == 0);
    let map = element_map(tg, on_col, 0, |a, b| tg.mul(a, b));
    checks.record("homomorphism", map.is_ok());
    checks.record(
        "identity_on_nabla_generators",
        (0..size).all(|x| on_symbol[symbols.index(x, x)] == t.lambda(x, x)),
    );
    let kernel_order = match &map {
        Ok(images) => {
            checks.record("identity_on_nabla", t.nabla().elements().iter().all(|&v| images[v as usize] == v));
            checks.record("image_in_nabla", images.iter().all(|&y| t.nabla().contains(y)));
            let kernel: Vec<u32> = (0..images.len() as u32).filter(|&x| images[x as usize] == 0).collect();
            let meets = kernel.iter().filter(|&&x| t.nabla().contains(x)).count();
            checks.record(
                "product_decomposition",
                meets == 1 && t.order() == t.nabla().len() as u64 * kernel.len() as u64,
            );
            checks.record("kernel_is_exterior_square", kernel.len() as u64 == t.exterior_order());
            Some(kernel.len() as u64)
        }
        Err(_) => None,
    };
    checks.record("nabla_equals_delta", t.nabla() == t.delta());
    let h2 = t.h2();
    checks.record("pi2s_equals_h2", t.pi2s() == h2);
    checks.record("pi3_is_h2_plus_nabla", t.pi3() == h2.direct_sum(&t.nabla_invariants()));
    let status = checks.status();
    SplittingWitness {
        m,
        n: Some(n),
        relators_checked,
        relator_violations,
        kernel_order,
        checks,
        status,
    }
}
