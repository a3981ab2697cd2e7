//! Reference computations written independently of the library engine: a
//! naive coset enumerator over freshly built tensor relators, and abelian
//! invariants read off element-order counts instead of Smith normal form.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use tensorsq::group::{FiniteGroup, Perm};

const NONE: u32 = u32::MAX;

/// Plain HLT enumeration with union-find coincidences and no compaction.
struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    limit: usize,
}

impl Enumerator {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.cols + x] = v;
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) {
        let n = self.parent.len() as u32;
        assert!((n as usize) < self.limit, "oracle enumeration exceeded {} cosets", self.limit);
        self.parent.push(n);
        self.table.extend(std::iter::repeat(NONE).take(self.cols));
        self.set(c, x, n);
        self.set(n, x ^ 1, c);
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.set(f, x ^ 1, NONE);
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.get(e1, x) != NONE {
                    let t = self.get(e1, x);
                    self.merge(f1, t, &mut queue);
                } else if self.get(f1, x ^ 1) != NONE {
                    let t = self.get(f1, x ^ 1);
                    self.merge(e1, t, &mut queue);
                } else {
                    self.set(e1, x, f1);
                    self.set(f1, x ^ 1, e1);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[usize]) {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i as isize > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return;
            }
            while j >= i as isize && self.get(b, w[j as usize] ^ 1) != NONE {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            } else if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return;
            }
            self.define(f, w[i]);
        }
    }
}

/// Regular coset table (row = element, column `2s`/`2s+1` = symbol `s` and
/// its inverse) of the group with `ngens` generators and the given relators.
pub fn enumerate(ngens: usize, relators: &[Vec<usize>], limit: usize) -> Vec<Vec<u32>> {
    let cols = 2 * ngens;
    let mut e = Enumerator {
        cols,
        table: vec![NONE; cols],
        parent: vec![0],
        limit,
    };
    let mut c = 0u32;
    while (c as usize) < e.parent.len() {
        for r in relators {
            if !e.alive(c) {
                break;
            }
            e.scan_and_fill(c, r);
        }
        for x in 0..cols {
            if !e.alive(c) {
                break;
            }
            if e.get(c, x) == NONE {
                e.define(c, x);
            }
        }
        c += 1;
    }
    let live: Vec<u32> = (0..e.parent.len() as u32).filter(|&c| e.alive(c)).collect();
    let index: HashMap<u32, u32> = live.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
    live.iter()
        .map(|&c| (0..cols).map(|x| index[&e.rep(e.get(c, x))]).collect())
        .collect()
}

/// A finite group given by a regular coset table, identity at row 0.
pub struct TableGroup {
    pub table: Vec<Vec<u32>>,
    words: Vec<Vec<usize>>,
}

impl TableGroup {
    pub fn new(table: Vec<Vec<u32>>) -> Self {
        let mut words = vec![None; table.len()];
        words[0] = Some(vec![]);
        let mut queue = VecDeque::from([0u32]);
        while let Some(c) = queue.pop_front() {
            for (x, &d) in table[c as usize].iter().enumerate() {
                if words[d as usize].is_none() {
                    let mut w: Vec<usize> = words[c as usize].clone().unwrap();
                    w.push(x);
                    words[d as usize] = Some(w);
                    queue.push_back(d);
                }
            }
        }
        TableGroup {
            words: words.into_iter().map(|w| w.expect("table is connected")).collect(),
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn word(&self, c: u32) -> &[usize] {
        &self.words[c as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.words[b as usize].iter().fold(a, |c, &x| self.table[c as usize][x])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut i = 0;
        while i < out.len() {
            let a = out[i];
            i += 1;
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    out.push(b);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of the finite abelian group `elements / killed`, read off
/// from how many cosets are killed by each prime power.
pub fn invariants_by_counting<F>(elements: &[u32], killed: &[u32], pow: F) -> Vec<u64>
where
    F: Fn(u32, u64) -> u32,
{
    let in_killed = |x: u32| killed.binary_search(&x).is_ok();
    let order = (elements.len() / killed.len()) as u64;
    let mut primary: Vec<Vec<u32>> = Vec::new();
    for p in prime_factors(order) {
        // a[k] = log_p |Q[p^k]|
        let mut a = vec![0u32];
        let mut q = 1u64;
        loop {
            q *= p;
            let count = (elements.iter().filter(|&&x| in_killed(pow(x, q))).count() / killed.len()) as u64;
            let mut log = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                log += 1;
            }
            a.push(log);
            if a[a.len() - 1] == a[a.len() - 2] {
                break;
            }
        }
        // #{i : e_i >= k} = a[k] - a[k-1]
        let at_least = |k: usize| if k < a.len() { a[k] - a[k - 1] } else { 0 };
        let mut exps = Vec::new();
        for k in 1..a.len() {
            for _ in 0..(at_least(k) - at_least(k + 1)) {
                exps.push(p.pow(k as u32) as u32);
            }
        }
        exps.sort_unstable_by(|x, y| y.cmp(x));
        primary.push(exps);
    }
    let width = primary.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..width)
        .map(|i| primary.iter().map(|e| e.get(i).copied().unwrap_or(1) as u64).product())
        .collect();
    factors.reverse();
    factors
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleValues {
    pub tensor_order: usize,
    pub j_order: usize,
    pub nabla_order: usize,
    pub delta_order: usize,
    pub pi3: Vec<u64>,
    pub h2: Vec<u64>,
    pub pi2s: Vec<u64>,
}

/// Tensor square of `g` from scratch: symbols `g⊗h`, relators
/// `gh⊗k = (ghg⁻¹ ⊗ gkg⁻¹)(g⊗k)` and `g⊗hk = (g⊗h)(hgh⁻¹ ⊗ hkh⁻¹)`.
pub fn oracle(g: &FiniteGroup, limit: usize) -> OracleValues {
    let el: Vec<Perm> = g.elements().to_vec();
    let n = el.len();
    let index: HashMap<&Perm, usize> = el.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mul = |a: usize, b: usize| index[&el[a].mul(&el[b])];
    let inv = |a: usize| index[&el[a].inverse()];
    let conj = |a: usize, b: usize| mul(mul(a, b), inv(a));
    let sym = |a: usize, b: usize| a * n + b;
    let mut relators = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                relators.push(vec![2 * sym(conj(a, b), conj(a, c)), 2 * sym(a, c), 2 * sym(mul(a, b), c) + 1]);
                relators.push(vec![2 * sym(a, b), 2 * sym(conj(b, a), conj(b, c)), 2 * sym(a, mul(b, c)) + 1]);
            }
        }
    }
    let t = TableGroup::new(enumerate(n * n, &relators, limit));
    let commutator = |a: usize, b: usize| mul(mul(a, b), mul(inv(a), inv(b)));
    let kappa: Vec<usize> = (0..t.order() as u32)
        .map(|c| {
            t.word(c).iter().fold(index[&g.identity()], |acc, &x| {
                let (a, b) = (x / 2 / n, x / 2 % n);
                let k = commutator(a, b);
                mul(acc, if x % 2 == 0 { k } else { inv(k) })
            })
        })
        .collect();
    let e = index[&g.identity()];
    let j: Vec<u32> = (0..t.order() as u32).filter(|&c| kappa[c as usize] == e).collect();
    let symbol = |a: usize, b: usize| t.table[0][2 * sym(a, b)];
    let nabla = t.closure(&(0..n).map(|a| symbol(a, a)).collect::<Vec<_>>());
    let delta_gens: Vec<u32> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| t.mul(symbol(a, b), symbol(b, a)))
        .collect();
    let delta = t.closure(&delta_gens);
    let pow = |x: u32, k: u64| t.pow(x, k);
    OracleValues {
        tensor_order: t.order(),
        j_order: j.len(),
        nabla_order: nabla.len(),
        delta_order: delta.len(),
        pi3: invariants_by_counting(&j, &[0], pow),
        h2: invariants_by_counting(&j, &nabla, pow),
        pi2s: invariants_by_counting(&j, &delta, pow),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianOracle {
    pub tensor: Vec<u64>,
    pub nabla: Vec<u64>,
    pub delta: Vec<u64>,
    pub nabla_mod_delta: Vec<u64>,
    pub exterior: Vec<u64>,
    pub symmetric: Vec<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `A ⊗ A` for `A = ⊕ Z/dᵢ` in coordinates `e_i ⊗ e_j` modulo `gcd(dᵢ, dⱼ)`,
/// with `∇` and `Δ` generated by brute force over all of `A`.
pub fn abelian_oracle(d: &[u64]) -> AbelianOracle {
    let k = d.len();
    let moduli: Vec<u64> = (0..k * k).map(|ij| gcd(d[ij / k], d[ij % k])).collect();
    let size: u64 = moduli.iter().product();
    let encode = |v: &[u64]| v.iter().zip(&moduli).rev().fold(0u64, |acc, (&x, &m)| acc * m + x % m) as u32;
    let decode = |mut x: u64| {
        moduli
            .iter()
            .map(|&m| {
                let c = x % m;
                x /= m;
                c
            })
            .collect::<Vec<u64>>()
    };
    let add = |a: u32, b: u32| {
        let (va, vb) = (decode(a as u64), decode(b as u64));
        encode(&va.iter().zip(&vb).map(|(x, y)| x + y).collect::<Vec<_>>())
    };
    let times = |a: u32, e: u64| encode(&decode(a as u64).iter().map(|x| x * e).collect::<Vec<_>>());
    let tensor = |x: &[u64], y: &[u64]| encode(&(0..k * k).map(|ij| x[ij / k] * y[ij % k]).collect::<Vec<_>>());

    let mut a_elements: Vec<Vec<u64>> = vec![vec![]];
    for &di in d {
        a_elements = a_elements
            .into_iter()
            .flat_map(|v| {
                (0..di).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    let closure = |gens: &[u32]| {
        let mut seen = vec![false; size as usize];
        seen[0] = true;
        let mut out = vec![0u32];
        let mut i = 0;
        while i < out.len() {
            let a = out[i];
            i += 1;
            for &g in gens {
                let b = add(a, g);
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    out.push(b);
                }
            }
        }
        out.sort_unstable();
        out
    };
    let all: Vec<u32> = (0..size as u32).collect();
    let nabla = closure(&a_elements.iter().map(|x| tensor(x, x)).collect::<Vec<_>>());
    let delta_gens: Vec<u32> = a_elements
        .iter()
        .flat_map(|x| a_elements.iter().map(move |y| (x, y)))
        .map(|(x, y)| add(tensor(x, y), tensor(y, x)))
        .collect();
    let delta = closure(&delta_gens);
    AbelianOracle {
        tensor: invariants_by_counting(&all, &[0], times),
        nabla: invariants_by_counting(&nabla, &[0], times),
        delta: invariants_by_counting(&delta, &[0], times),
        nabla_mod_delta: invariants_by_counting(&nabla, &delta, times),
        exterior: invariants_by_counting(&all, &nabla, times),
        symmetric: invariants_by_counting(&all, &delta, times),
    }
}
