use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::chain::StabChain;
use super::perm::Perm;
use crate::error::{Error, Result};

/// Largest order for which [`FiniteGroup::cayley`] builds a full table.
pub const CAYLEY_LIMIT: u64 = 2048;
/// Largest order for which element lists are materialized.
pub const ELEMENT_LIMIT: u64 = 1 << 20;

/// A finite permutation group with a stabilizer chain built at construction.
///
/// Cloning is cheap; the group data is shared.
#[derive(Clone)]
pub struct FiniteGroup(Arc<Inner>);

struct Inner {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
    order: u64,
    elements: OnceLock<Vec<Perm>>,
    cayley: OnceLock<Arc<CayleyTable>>,
}

impl FiniteGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let chain = StabChain::build(degree, &gens);
        Ok(Self::from_parts(degree, gens, chain))
    }

    /// The group generated by `gens`, which must act regularly on
    /// `0..degree` (for example the generator columns of a complete coset
    /// table over the trivial subgroup).
    pub(crate) fn from_regular_action(degree: usize, gens: Vec<Perm>) -> Self {
        let chain = StabChain::regular(degree, &gens);
        Self::from_parts(degree, gens, chain)
    }

    fn from_parts(degree: usize, gens: Vec<Perm>, chain: StabChain) -> Self {
        let order = chain.order();
        FiniteGroup(Arc::new(Inner {
            degree,
            gens,
            chain,
            order,
            elements: OnceLock::new(),
            cayley: OnceLock::new(),
        }))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("empty generator list")
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.gens
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.0.degree)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.0.chain.contains(g)
    }

    pub fn base(&self) -> Vec<u32> {
        self.0.chain.base()
    }

    pub fn same_group(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.degree() == other.degree()
                && self.order() == other.order()
                && other.generators().iter().all(|g| self.contains(g)))
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Elements in the canonical stabilizer-chain order, identity first.
    pub fn elements(&self) -> &[Perm] {
        assert!(
            self.order() <= ELEMENT_LIMIT,
            "refusing to list {} elements",
            self.order()
        );
        self.0.elements.get_or_init(|| self.0.chain.elements())
    }

    /// Multiplication table over [`Self::elements`].
    pub fn cayley(&self) -> Result<Arc<CayleyTable>> {
        if self.order() > CAYLEY_LIMIT {
            return Err(Error::BoundExceeded {
                what: "multiplication table".into(),
                order: self.order(),
                bound: CAYLEY_LIMIT,
            });
        }
        Ok(self
            .0
            .cayley
            .get_or_init(|| Arc::new(CayleyTable::new(self.elements().to_vec())))
            .clone())
    }

    /// Subgroup generated by `gens`; every generator must be a member.
    pub fn subgroup(&self, gens: &[Perm]) -> Result<Subgroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(Error::NotMember(g.to_string()));
            }
        }
        let group = FiniteGroup::new(self.degree(), gens.to_vec())?;
        let normal = self.normalizes(&group);
        Ok(Subgroup {
            parent: self.clone(),
            group,
            normal,
        })
    }

    /// Normal closure of `gens` in this group.
    pub fn normal_closure(&self, gens: &[Perm]) -> Result<Subgroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(Error::NotMember(g.to_string()));
            }
        }
        let mut current: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut group = FiniteGroup::new(self.degree(), current.clone())?;
        loop {
            let mut added = false;
            let mut i = 0;
            while i < current.len() {
                for x in self.generators() {
                    let c = current[i].conjugate_by(x);
                    if !group.contains(&c) {
                        current.push(c);
                        group = FiniteGroup::new(self.degree(), current.clone())?;
                        added = true;
                    }
                }
                i += 1;
            }
            if !added {
                break;
            }
        }
        Ok(Subgroup {
            parent: self.clone(),
            group,
            normal: true,
        })
    }

    /// Whether this group normalizes `sub` (conjugates of its generators by
    /// our generators stay inside).
    pub fn normalizes(&self, sub: &FiniteGroup) -> bool {
        sub.generators()
            .iter()
            .all(|n| self.generators().iter().all(|g| sub.contains(&n.conjugate_by(g))))
    }

    /// Normal closure of the commutators of all generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = self.generators();
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                let c = Perm::commutator(a, b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms).expect("commutators are members")
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Subgroup {
        let z: Vec<Perm> = self
            .elements()
            .iter()
            .filter(|z| self.generators().iter().all(|g| g.mul(z) == z.mul(g)))
            .cloned()
            .collect();
        self.subgroup(&z).expect("central elements are members")
    }

    /// Internal direct product on the disjoint union of the point sets.
    pub fn direct_product(factors: &[FiniteGroup]) -> Result<FiniteGroup> {
        let degree: usize = factors.iter().map(|f| f.degree()).sum::<usize>().max(1);
        let mut gens = Vec::new();
        let mut offset = 0;
        for f in factors {
            for g in f.generators() {
                gens.push(g.shifted(offset, degree));
            }
            offset += f.degree();
        }
        FiniteGroup::new(degree, gens)
    }

    /// Breadth-first walk of the Cayley graph (right multiplication by
    /// generators), visiting every element once.
    pub(crate) fn bfs_tree(&self) -> Vec<(Perm, Option<(usize, usize)>)> {
        let mut seen: HashMap<Perm, usize> = HashMap::new();
        let mut out: Vec<(Perm, Option<(usize, usize)>)> = vec![(self.identity(), None)];
        seen.insert(self.identity(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (gi, g) in self.generators().iter().enumerate() {
                let next = out[i].0.mul(g);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), out.len());
                    queue.push_back(out.len());
                    out.push((next, Some((i, gi))));
                }
            }
        }
        out
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators())
            .finish()
    }
}

/// A subgroup together with the group it lives in.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: FiniteGroup,
    group: FiniteGroup,
    normal: bool,
}

impl Subgroup {
    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn generators(&self) -> &[Perm] {
        self.group.generators()
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.group.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.group.is_trivial()
    }

    /// Elements of the intersection with `other` (both inside the same parent).
    pub fn intersection_order(&self, other: &FiniteGroup) -> u64 {
        let (small, big) = if self.order() <= other.order() {
            (&self.group, other)
        } else {
            (other, &self.group)
        };
        small.elements().iter().filter(|g| big.contains(g)).count() as u64
    }
}

/// Multiplication table of a small group over its canonical element order.
#[derive(Debug)]
pub struct CayleyTable {
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl CayleyTable {
    fn new(elements: Vec<Perm>) -> Self {
        let n = elements.len();
        let index: HashMap<Perm, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        let mut mul = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * n + j] = index[&a.mul(b)];
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let j = (0..n).find(|&j| mul[i * n + j] == 0).expect("inverse exists");
            inv[i] = j as u32;
        }
        CayleyTable {
            elements,
            index,
            mul,
            inv,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.elements.len() + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `a b a^-1`.
    #[inline]
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// `a b a^-1 b^-1`.
    #[inline]
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, g: &Perm) -> Option<u32> {
        self.index.get(g).copied()
    }

    /// Indices of the elements of `sub`.
    pub fn indices_of(&self, sub: &FiniteGroup) -> Vec<u32> {
        let mut v: Vec<u32> = sub
            .elements()
            .iter()
            .map(|g| self.index_of(g).expect("subgroup element"))
            .collect();
        v.sort_unstable();
        v
    }

    /// Closure of the given element indices under multiplication.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen: HashSet<u32> = HashSet::from([0]);
        let mut out = vec![0u32];
        let mut i = 0;
        while i < out.len() {
            for &g in gens {
                let x = self.mul(out[i], g);
                if seen.insert(x) {
                    out.push(x);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Perm {
        Perm::from_cycles(n, s).unwrap()
    }

    fn s4() -> FiniteGroup {
        FiniteGroup::new(4, vec![p(4, "(1,2)"), p(4, "(1,2,3,4)")]).unwrap()
    }

    #[test]
    fn derived_subgroup_of_s4_is_a4() {
        let d = s4().derived_subgroup();
        assert_eq!(d.order(), 12);
        assert!(d.is_normal());
        assert_eq!(d.group().derived_subgroup().order(), 4);
    }

    #[test]
    fn subgroup_rejects_non_members() {
        let a4 = s4().derived_subgroup().group().clone();
        assert!(matches!(a4.subgroup(&[p(4, "(1,2)")]), Err(Error::NotMember(_))));
    }

    #[test]
    fn normal_closure_of_double_transposition_in_a4() {
        let a4 = FiniteGroup::new(4, vec![p(4, "(1,2,3)"), p(4, "(2,3,4)")]).unwrap();
        let v4 = a4.normal_closure(&[p(4, "(1,2)(3,4)")]).unwrap();
        assert_eq!(v4.order(), 4);
        let triv = a4.subgroup(&[]).unwrap();
        assert_eq!(triv.order(), 1);
    }

    #[test]
    fn cayley_table_is_consistent() {
        let g = s4();
        let t = g.cayley().unwrap();
        assert!(t.element(0).is_identity());
        for a in 0..24 {
            assert_eq!(t.mul(a, t.inv(a)), 0);
            for b in 0..24 {
                assert_eq!(t.element(t.mul(a, b)), &t.element(a).mul(t.element(b)));
            }
        }
    }

    #[test]
    fn center_and_direct_product() {
        let c2 = FiniteGroup::new(2, vec![p(2, "(1,2)")]).unwrap();
        let c4 = FiniteGroup::new(4, vec![p(4, "(1,2,3,4)")]).unwrap();
        let g = FiniteGroup::direct_product(&[c2, c4]).unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(g.center().order(), 8);
        assert_eq!(s4().center().order(), 1);
    }
}
