//! Left actions of one finite group on another by automorphisms, tabulated
//! over Cayley indices.

use std::sync::Arc;

use super::finite::{CayleyTable, FiniteGroup};
use super::perm::Perm;
use crate::error::{Error, Result};

/// `maps[a][t]` is the index of `ᵃt` for acting element `a` and target
/// element `t`, both as Cayley indices.
#[derive(Clone, Debug)]
pub struct ActionTable {
    acting: FiniteGroup,
    target: FiniteGroup,
    acting_table: Arc<CayleyTable>,
    target_table: Arc<CayleyTable>,
    maps: Vec<Vec<u32>>,
}

/// Extends images of the target generators to a map on all target elements,
/// checking it is a bijective homomorphism.
fn automorphism_from_images(target: &FiniteGroup, tt: &CayleyTable, images: &[Perm]) -> Result<Vec<u32>> {
    let gens = target.generators();
    if images.len() != gens.len() {
        return Err(Error::InvalidAction(format!(
            "expected {} generator images, got {}",
            gens.len(),
            images.len()
        )));
    }
    let gen_idx: Vec<u32> = gens.iter().map(|g| tt.index_of(g).expect("generator is a member")).collect();
    let img_idx: Vec<u32> = images
        .iter()
        .map(|g| {
            tt.index_of(g)
                .ok_or_else(|| Error::InvalidAction(format!("image {g} is not in the target group")))
        })
        .collect::<Result<_>>()?;
    let n = tt.len();
    let mut f = vec![u32::MAX; n];
    let id = tt.index_of(&target.identity()).expect("identity");
    f[id as usize] = id;
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let t = queue[head];
        head += 1;
        for (j, &u) in gen_idx.iter().enumerate() {
            let next = tt.mul(t, u);
            let value = tt.mul(f[t as usize], img_idx[j]);
            if f[next as usize] == u32::MAX {
                f[next as usize] = value;
                queue.push(next);
            } else if f[next as usize] != value {
                return Err(Error::InvalidAction(
                    "generator images do not define a homomorphism".into(),
                ));
            }
        }
    }
    let mut seen = vec![false; n];
    for &v in &f {
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::InvalidAction("generator images do not define an automorphism".into()));
        }
    }
    Ok(f)
}

impl ActionTable {
    /// `images[i]` lists the images of the target generators under the
    /// `i`-th acting generator.
    pub fn new(acting: &FiniteGroup, target: &FiniteGroup, images: &[Vec<Perm>]) -> Result<Self> {
        let at = acting.cayley()?;
        let tt = target.cayley()?;
        if images.len() != acting.generators().len() {
            return Err(Error::InvalidAction(format!(
                "expected images for {} acting generators, got {}",
                acting.generators().len(),
                images.len()
            )));
        }
        let gen_maps: Vec<Vec<u32>> = images
            .iter()
            .map(|imgs| automorphism_from_images(target, &tt, imgs))
            .collect::<Result<_>>()?;
        let gen_idx: Vec<u32> = acting
            .generators()
            .iter()
            .map(|g| at.index_of(g).expect("generator is a member"))
            .collect();

        // ^{a s} t = ^a (^s t)
        let mut maps: Vec<Vec<u32>> = vec![Vec::new(); at.len()];
        let id = at.index_of(&acting.identity()).expect("identity");
        maps[id as usize] = (0..tt.len() as u32).collect();
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            for (j, &s) in gen_idx.iter().enumerate() {
                let next = at.mul(a, s);
                let composed: Vec<u32> = gen_maps[j].iter().map(|&t| maps[a as usize][t as usize]).collect();
                if maps[next as usize].is_empty() {
                    maps[next as usize] = composed;
                    queue.push(next);
                } else if maps[next as usize] != composed {
                    return Err(Error::InvalidAction(
                        "generator automorphisms do not define an action of the group".into(),
                    ));
                }
            }
        }
        Ok(ActionTable {
            acting: acting.clone(),
            target: target.clone(),
            acting_table: at,
            target_table: tt,
            maps,
        })
    }

    /// Action by conjugation `ᵍx = g x g⁻¹` of `acting` on a group it normalizes.
    pub fn conjugation(acting: &FiniteGroup, target: &FiniteGroup) -> Result<Self> {
        let images: Vec<Vec<Perm>> = acting
            .generators()
            .iter()
            .map(|g| target.generators().iter().map(|x| x.conjugate_by(g)).collect())
            .collect();
        Self::new(acting, target, &images)
    }

    pub fn trivial(acting: &FiniteGroup, target: &FiniteGroup) -> Result<Self> {
        let images = vec![target.generators().to_vec(); acting.generators().len()];
        Self::new(acting, target, &images)
    }

    pub fn acting(&self) -> &FiniteGroup {
        &self.acting
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn acting_table(&self) -> &Arc<CayleyTable> {
        &self.acting_table
    }

    pub fn target_table(&self) -> &Arc<CayleyTable> {
        &self.target_table
    }

    /// `ᵃt` on Cayley indices.
    pub fn apply_index(&self, a: u32, t: u32) -> u32 {
        self.maps[a as usize][t as usize]
    }

    pub fn apply(&self, a: &Perm, t: &Perm) -> Result<Perm> {
        let ai = self
            .acting_table
            .index_of(a)
            .ok_or_else(|| Error::NotMember(a.to_string()))?;
        let ti = self
            .target_table
            .index_of(t)
            .ok_or_else(|| Error::NotMember(t.to_string()))?;
        Ok(self.target_table.element(self.apply_index(ai, ti)).clone())
    }

    pub fn is_trivial(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.iter().enumerate().all(|(i, &v)| i as u32 == v))
    }
}
