use std::collections::{HashMap, VecDeque};

use super::finite::{FiniteGroup, Subgroup};
use super::hom::GroupHomomorphism;
use super::perm::Perm;
use crate::abelian::{AbelianCoordinates, AbelianInvariants};
use crate::error::{Error, Result};

/// `G/N` as a permutation group on the right cosets of `N`, with the
/// projection from `G`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: GroupHomomorphism,
}

fn check_normal(g: &FiniteGroup, n: &Subgroup) -> Result<()> {
    if !n.group().is_subgroup_of(g) {
        return Err(Error::NotMember("subgroup generators".into()));
    }
    if !g.normalizes(n.group()) {
        return Err(Error::NotNormal);
    }
    Ok(())
}

pub fn quotient_group(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    check_normal(g, n)?;
    let n_elems = n.group().elements();
    // Canonical coset representative: least element of N x.
    let key = |x: &Perm| -> Perm {
        n_elems
            .iter()
            .map(|m| m.mul(x))
            .min()
            .expect("N contains the identity")
    };
    let mut reps: Vec<Perm> = vec![g.identity()];
    let mut index: HashMap<Perm, u32> = HashMap::from([(key(&g.identity()), 0)]);
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); g.generators().len()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (gi, s) in g.generators().iter().enumerate() {
            let k = key(&reps[i].mul(s));
            let j = match index.get(&k) {
                Some(&j) => j,
                None => {
                    let j = reps.len() as u32;
                    index.insert(k.clone(), j);
                    reps.push(k);
                    queue.push_back(j as usize);
                    j
                }
            };
            images[gi].resize(reps.len().max(i + 1), u32::MAX);
            images[gi][i] = j;
        }
    }
    let degree = reps.len();
    let gens: Vec<Perm> = images
        .into_iter()
        .map(|mut im| {
            im.resize(degree, u32::MAX);
            Perm::from_images(im)
        })
        .collect::<Result<_>>()?;
    let group = FiniteGroup::new(degree, gens.clone())?;
    if group.order() * n.order() != g.order() {
        return Err(Error::Internal(format!(
            "quotient order {} times {} differs from {}",
            group.order(),
            n.order(),
            g.order()
        )));
    }
    let projection = GroupHomomorphism::new(g.clone(), group.clone(), gens)?;
    Ok(Quotient { group, projection })
}

/// Abelian invariants of an abelian permutation group.
pub fn abelian_group_invariants(a: &FiniteGroup) -> Result<AbelianInvariants> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let coords = AbelianCoordinates::new(a.elements().iter().cloned(), a.identity(), |x, y| x.mul(y));
    Ok(coords.invariants())
}

/// Canonical invariant factors of the abelian quotient `G/N`.
pub fn abelian_invariants_of_quotient(g: &FiniteGroup, n: &Subgroup) -> Result<AbelianInvariants> {
    check_normal(g, n)?;
    let gens = g.generators();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if !n.contains(&Perm::commutator(a, b)) {
                return Err(Error::NotAbelian);
            }
        }
    }
    let q = quotient_group(g, n)?;
    abelian_group_invariants(&q.group)
}

/// `G_ab`.
pub fn abelianization(g: &FiniteGroup) -> AbelianInvariants {
    abelian_invariants_of_quotient(g, &g.derived_subgroup()).expect("G/G' is abelian")
}
