//! Deterministic Schreier–Sims stabilizer chains with Schreier vectors.

use super::perm::Perm;

const NOT_IN_ORBIT: i32 = -1;
const BASE_POINT: i32 = -2;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: u32,
    /// Strong generators fixing all earlier base points.
    pub gens: Vec<Perm>,
    /// Orbit of `base` in discovery order; `orbit[0] == base`.
    pub orbit: Vec<u32>,
    /// Per point: index into `gens` of the edge that reached it, or a marker.
    schreier: Vec<i32>,
    inv_gens: Vec<Perm>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            schreier: vec![NOT_IN_ORBIT; degree],
            inv_gens: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        self.inv_gens = self.gens.iter().map(Perm::inverse).collect();
        self.schreier.iter_mut().for_each(|s| *s = NOT_IN_ORBIT);
        self.orbit.clear();
        self.schreier[self.base as usize] = BASE_POINT;
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.apply(p);
                if self.schreier[q as usize] == NOT_IN_ORBIT {
                    self.schreier[q as usize] = gi as i32;
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }

    #[inline]
    pub fn contains_point(&self, p: u32) -> bool {
        self.schreier[p as usize] != NOT_IN_ORBIT
    }

    /// Transversal element mapping the base point to `p`.
    pub fn transversal(&self, p: u32) -> Perm {
        let degree = self.schreier.len();
        let mut path = Vec::new();
        let mut q = p;
        loop {
            let s = self.schreier[q as usize];
            assert_ne!(s, NOT_IN_ORBIT, "point outside orbit");
            if s == BASE_POINT {
                break;
            }
            path.push(s as usize);
            q = self.inv_gens[s as usize].apply(q);
        }
        let mut u = Perm::identity(degree);
        for &gi in path.iter().rev() {
            u = u.mul(&self.gens[gi]);
        }
        u
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    pub fn build(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        let base = gens[0].first_moved_point().expect("nontrivial");
        chain.levels.push(Level::new(base, degree));
        for g in gens {
            // Only add generators not already represented at the top.
            let (h, j) = chain.sift(&g, 0);
            if h.is_identity() && j == chain.levels.len() {
                continue;
            }
            chain.levels[0].gens.push(g);
        }
        chain.levels[0].rebuild_orbit();
        chain.complete();
        chain
    }

    /// Builds a one-level chain for a group known to act regularly.
    pub fn regular(degree: usize, gens: &[Perm]) -> Self {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return StabChain {
                degree,
                levels: Vec::new(),
            };
        }
        let mut level = Level::new(0, degree);
        level.gens = gens;
        level.rebuild_orbit();
        assert_eq!(level.orbit.len(), degree, "regular action must be transitive");
        StabChain {
            degree,
            levels: vec![level],
        }
    }

    /// Sifts `g` starting at level `from`. Returns the residue and the level
    /// at which sifting stopped (`levels.len()` when it passed every level).
    pub fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for j in from..self.levels.len() {
            let level = &self.levels[j];
            let beta = h.apply(level.base);
            if !level.contains_point(beta) {
                return (h, j);
            }
            h = h.mul(&level.transversal(beta).inverse());
        }
        (h, self.levels.len())
    }

    /// Runs the Schreier–Sims completion from the bottom level upward.
    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut restarted = false;
            'scan: for pi in 0..self.levels[lvl].orbit.len() {
                let beta = self.levels[lvl].orbit[pi];
                let u_beta = self.levels[lvl].transversal(beta);
                for si in 0..self.levels[lvl].gens.len() {
                    let s = self.levels[lvl].gens[si].clone();
                    let gamma = s.apply(beta);
                    let u_gamma = self.levels[lvl].transversal(gamma);
                    let y = u_beta.mul(&s).mul(&u_gamma.inverse());
                    if y.is_identity() {
                        continue;
                    }
                    let (h, j) = self.sift(&y, lvl + 1);
                    if h.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let b = h.first_moved_point().expect("nontrivial residue");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].rebuild_orbit();
                    }
                    i = j as isize;
                    restarted = true;
                    break 'scan;
                }
            }
            if !restarted {
                i -= 1;
            }
        }
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// All elements in canonical order: identity first, then lexicographic in
    /// the orbit positions of the base images, top level varying slowest.
    pub fn elements(&self) -> Vec<Perm> {
        // g = v_k * ... * v_1 with v_1 from the top-level transversal.
        let mut current = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let transversal: Vec<Perm> = level.orbit.iter().map(|&p| level.transversal(p)).collect();
            let mut next = Vec::with_capacity(current.len() * transversal.len());
            for v in &transversal {
                for s in &current {
                    next.push(s.mul(v));
                }
            }
            current = next;
        }
        current
    }
}
