//! Semidirect products `N ⋊ H`, realized by the right regular action on the
//! pairs `(n, h)` with `(n₁, h₁)(n₂, h₂) = (n₁ · ^{h₁}n₂, h₁h₂)`.

use std::fmt;
use std::str::FromStr;

use super::action::ActionTable;
use super::finite::{FiniteGroup, Subgroup};
use super::hom::GroupHomomorphism;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Built-in actions of `H` on `N`, each defined on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltinAction {
    /// Every generator of `H` inverts `N` (which must be abelian).
    Inversion,
    Trivial,
    /// Every generator of `H` sends `n_i ↦ n_{i+1}` and the last generator
    /// of `N` to the product of all of them. On `C2 x C2` this is the
    /// 3-cycle of the involutions.
    Cycle,
    /// Every generator of `H` raises the generators of `N` to the `k`-th power.
    Power(i64),
}

impl FromStr for BuiltinAction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inversion" | "inv" => Ok(BuiltinAction::Inversion),
            "trivial" => Ok(BuiltinAction::Trivial),
            "cycle" => Ok(BuiltinAction::Cycle),
            other => other
                .strip_prefix("pow")
                .and_then(|k| k.parse::<i64>().ok())
                .map(BuiltinAction::Power)
                .ok_or_else(|| Error::InvalidAction(format!("unknown action `{other}`"))),
        }
    }
}

impl fmt::Display for BuiltinAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinAction::Inversion => write!(f, "inversion"),
            BuiltinAction::Trivial => write!(f, "trivial"),
            BuiltinAction::Cycle => write!(f, "cycle"),
            BuiltinAction::Power(k) => write!(f, "pow{k}"),
        }
    }
}

impl BuiltinAction {
    /// Images of the generators of `n` under each generator of `h`.
    pub fn generator_images(&self, n: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<Vec<Perm>>> {
        let ng = n.generators();
        let per_gen: Vec<Perm> = match self {
            BuiltinAction::Inversion => {
                if !n.is_abelian() {
                    return Err(Error::InvalidAction("inversion needs an abelian normal factor".into()));
                }
                ng.iter().map(Perm::inverse).collect()
            }
            BuiltinAction::Trivial => ng.to_vec(),
            BuiltinAction::Cycle => {
                if ng.is_empty() {
                    Vec::new()
                } else {
                    let product = ng.iter().skip(1).fold(ng[0].clone(), |acc, x| acc.mul(x));
                    let mut v: Vec<Perm> = ng[1..].to_vec();
                    v.push(if ng.len() == 1 { ng[0].clone() } else { product });
                    v
                }
            }
            BuiltinAction::Power(k) => ng.iter().map(|x| x.pow(*k)).collect(),
        };
        Ok(vec![per_gen; h.generators().len()])
    }

    pub fn table(&self, n: &FiniteGroup, h: &FiniteGroup) -> Result<ActionTable> {
        ActionTable::new(h, n, &self.generator_images(n, h)?)
    }
}

#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: FiniteGroup,
    pub n: FiniteGroup,
    pub h: FiniteGroup,
    pub n_embed: GroupHomomorphism,
    pub h_embed: GroupHomomorphism,
    /// `G → H`, with kernel the image of `N`.
    pub projection: GroupHomomorphism,
    pub action: ActionTable,
}

impl SemidirectProduct {
    /// The image of `N`, normal in the product.
    pub fn normal_subgroup(&self) -> Result<Subgroup> {
        self.group.normal_closure(self.n_embed.generator_images())
    }

    /// The image of `H`.
    pub fn complement(&self) -> Result<Subgroup> {
        self.group.subgroup(self.h_embed.generator_images())
    }
}

/// `N ⋊ H` for an action of `H` on `N` by automorphisms.
pub fn semidirect_product(action: &ActionTable) -> Result<SemidirectProduct> {
    let h = action.acting().clone();
    let n = action.target().clone();
    let nt = action.target_table().clone();
    let ht = action.acting_table().clone();
    let (nn, nh) = (nt.len(), ht.len());
    let degree = nn * nh;
    let point = |i: u32, j: u32| j as usize * nn + i as usize;

    // (n', h')·(n, 1) = (n' · ^{h'}n, h')
    let n_gens: Vec<Perm> = n
        .generators()
        .iter()
        .map(|g| {
            let gi = nt.index_of(g).expect("generator");
            let mut images = vec![0u32; degree];
            for j in 0..nh as u32 {
                for i in 0..nn as u32 {
                    images[point(i, j)] = point(nt.mul(i, action.apply_index(j, gi)), j) as u32;
                }
            }
            Perm::from_images(images)
        })
        .collect::<Result<_>>()?;
    // (n', h')·(1, h) = (n', h'h)
    let h_gens: Vec<Perm> = h
        .generators()
        .iter()
        .map(|g| {
            let gi = ht.index_of(g).expect("generator");
            let mut images = vec![0u32; degree];
            for j in 0..nh as u32 {
                for i in 0..nn as u32 {
                    images[point(i, j)] = point(i, ht.mul(j, gi)) as u32;
                }
            }
            Perm::from_images(images)
        })
        .collect::<Result<_>>()?;

    let mut gens = n_gens.clone();
    gens.extend(h_gens.iter().cloned());
    let group = FiniteGroup::new(degree.max(1), gens)?;
    if group.order() != (nn * nh) as u64 {
        return Err(Error::Internal(format!(
            "semidirect product has order {}, expected {}",
            group.order(),
            nn * nh
        )));
    }
    let n_embed = GroupHomomorphism::new(n.clone(), group.clone(), n_gens)?;
    let h_embed = GroupHomomorphism::new(h.clone(), group.clone(), h_gens)?;
    let mut proj_images = vec![h.identity(); n.generators().len()];
    proj_images.extend(h.generators().iter().cloned());
    let projection = GroupHomomorphism::new(group.clone(), h.clone(), proj_images)?;
    Ok(SemidirectProduct {
        group,
        n,
        h,
        n_embed,
        h_embed,
        projection,
        action: action.clone(),
    })
}
