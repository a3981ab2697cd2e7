//! Complements of normal subgroups by exhaustive subgroup search.

use std::collections::HashSet;

use super::finite::{FiniteGroup, Subgroup};
use super::perm::Perm;
use crate::error::{Error, Result};

pub const COMPLEMENT_ORDER_LIMIT: u64 = 1000;

/// A subgroup `B` with `B ∩ N = 1` and `|B|·|N| = |G|`, or `None` if there
/// is no such subgroup.
pub fn find_complement(g: &FiniteGroup, n: &Subgroup) -> Result<Option<Subgroup>> {
    find_complement_bounded(g, n, COMPLEMENT_ORDER_LIMIT)
}

pub fn find_complement_bounded(g: &FiniteGroup, n: &Subgroup, bound: u64) -> Result<Option<Subgroup>> {
    if g.order() > bound {
        return Err(Error::BoundExceeded {
            what: "complement search".into(),
            order: g.order(),
            bound,
        });
    }
    if !n.group().is_subgroup_of(g) {
        return Err(Error::NotMember("normal subgroup generators".into()));
    }
    if !g.normalizes(n.group()) {
        return Err(Error::NotNormal);
    }
    let target = (g.order() / n.order()) as usize;
    let table = g.cayley()?;
    let in_n: Vec<bool> = table.elements().iter().map(|x| n.contains(x)).collect();
    // Elements outside N whose order divides the target are the only
    // possible nonidentity members of a complement.
    let candidates: Vec<u32> = (1..table.len() as u32)
        .filter(|&x| !in_n[x as usize] && target as u64 % table.element(x).order() == 0)
        .collect();

    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    let mut stack: Vec<(Vec<u32>, Vec<u32>)> = vec![(Vec::new(), vec![0])];
    while let Some((gens, elems)) = stack.pop() {
        if elems.len() == target {
            let perms: Vec<Perm> = gens.iter().map(|&i| table.element(i).clone()).collect();
            let b = g.subgroup(&perms)?;
            debug_assert_eq!(b.intersection_order(n.group()), 1);
            debug_assert_eq!(b.order() * n.order(), g.order());
            return Ok(Some(b));
        }
        let members: HashSet<u32> = elems.iter().copied().collect();
        for &x in candidates.iter().rev() {
            if members.contains(&x) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(x);
            let closure = table.closure(&next_gens);
            if target % closure.len() != 0 || closure.iter().any(|&y| y != 0 && in_n[y as usize]) {
                continue;
            }
            if visited.insert(closure.clone()) {
                stack.push((next_gens, closure));
            }
        }
    }
    Ok(None)
}
