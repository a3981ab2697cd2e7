//! Todd–Coxeter coset enumeration.
//!
//! The table has two columns per generator, `2g` for `x_g` and `2g + 1` for
//! its inverse, so the inverse of column `c` is `c ^ 1`. Coincidences are
//! processed immediately with a union-find forwarding array; every new table
//! entry is pushed as a deduction and scanned through all cyclic conjugates
//! of the relators that start with its letter.

use std::fmt::Write as _;

use super::fp::FpGroup;
use super::word::Word;
use crate::error::{Error, Result};

pub const UNDEF: u32 = u32::MAX;

/// Default budget in table cells (cosets times columns).
pub const DEFAULT_MAX_CELLS: usize = 2_000_000;

const DEDUCTION_STACK_LIMIT: usize = 1 << 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Scan-and-fill every relator at every coset in order, processing
    /// deductions as they arise.
    #[default]
    Hlt,
    /// Define only the first undefined entry, deducing everything else.
    Felsch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub strategy: Strategy,
    /// Largest number of coset rows held at once.
    pub max_cosets: usize,
}

impl EnumerationOptions {
    pub fn new(max_cosets: usize) -> Self {
        EnumerationOptions {
            strategy: Strategy::default(),
            max_cosets,
        }
    }

    /// Budget expressed in cells for a presentation with `ngens` generators.
    pub fn with_max_cells(ngens: usize, max_cells: usize) -> Self {
        Self::new((max_cells / (2 * ngens).max(1)).max(1))
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub defined: u64,
    pub coincidences: u64,
    pub deductions: u64,
    pub max_active: usize,
    pub compactions: u32,
}

/// A complete, standardized coset table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    rows: usize,
    table: Vec<u32>,
    trivial_subgroup: bool,
    stats: EnumerationStats,
}

impl CosetTable {
    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn columns(&self) -> usize {
        2 * self.ngens
    }

    /// Number of cosets, the index of the subgroup.
    pub fn len(&self) -> usize {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    /// Whether the enumeration was over the trivial subgroup.
    pub fn is_regular(&self) -> bool {
        self.trivial_subgroup
    }

    pub fn stats(&self) -> &EnumerationStats {
        &self.stats
    }

    /// Entry in column `col` (`2g` for `x_g`, `2g + 1` for its inverse).
    #[inline]
    pub fn entry(&self, coset: u32, col: usize) -> u32 {
        self.table[coset as usize * 2 * self.ngens + col]
    }

    /// `coset · x_g`
    #[inline]
    pub fn image(&self, coset: u32, g: usize) -> u32 {
        self.entry(coset, 2 * g)
    }

    /// The action of generator `g` on the cosets.
    pub fn column(&self, g: usize) -> Vec<u32> {
        (0..self.rows as u32).map(|c| self.image(c, g)).collect()
    }

    /// `coset · w`
    pub fn trace(&self, coset: u32, w: &Word) -> u32 {
        w.letters()
            .iter()
            .fold(coset, |c, &l| self.entry(c, letter_col(l) as usize))
    }

    /// Checks completeness, mutual inverse columns, and that every relator
    /// traces to the identity at every coset.
    pub fn verify(&self, fp: &FpGroup) -> Result<()> {
        let ncols = self.columns();
        for c in 0..self.rows as u32 {
            for col in 0..ncols {
                let d = self.entry(c, col);
                if d == UNDEF || d as usize >= self.rows {
                    return Err(Error::IncompleteTable(format!("entry ({c}, {col}) undefined")));
                }
                if self.entry(d, col ^ 1) != c {
                    return Err(Error::IncompleteTable(format!("columns {col} and {} disagree at {c}", col ^ 1)));
                }
            }
        }
        for r in fp.relators() {
            for c in 0..self.rows as u32 {
                if self.trace(c, r) != c {
                    return Err(Error::IncompleteTable(format!("relator {r} does not close at coset {c}")));
                }
            }
        }
        Ok(())
    }

    /// CSV with one row per coset and one column per generator image.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("coset");
        for g in 0..self.ngens {
            let _ = write!(out, ",x{}", g + 1);
        }
        out.push('\n');
        for c in 0..self.rows as u32 {
            let _ = write!(out, "{c}");
            for g in 0..self.ngens {
                let _ = write!(out, ",{}", self.image(c, g));
            }
            out.push('\n');
        }
        out
    }
}

#[inline]
fn letter_col(l: i32) -> u32 {
    if l > 0 {
        2 * (l as u32 - 1)
    } else {
        2 * ((-l) as u32 - 1) + 1
    }
}

fn word_cols(w: &Word) -> Vec<u32> {
    w.letters().iter().map(|&l| letter_col(l)).collect()
}

/// Outcome of scanning one relator at one coset.
#[derive(PartialEq, Eq)]
enum Scan {
    Done,
    /// A definition was needed and the table is full.
    NeedSpace,
}

#[derive(Default)]
struct Conjugates {
    words: Vec<u32>,
    ends: Vec<usize>,
}

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    /// `p[a] == a` iff `a` is live; otherwise points towards its replacement.
    p: Vec<u32>,
    live: usize,
    max_cosets: usize,
    relators: Vec<Vec<u32>>,
    /// Cyclic conjugates of relators and their inverses, grouped by first
    /// column. Built on first use; plain HLT rarely needs them.
    conj_by_col: Option<Vec<Conjugates>>,
    deductions: Vec<(u32, u32)>,
    queue: Vec<u32>,
    defer_deductions: bool,
    stats: EnumerationStats,
}

impl Enumerator {
    fn new(ngens: usize, relators: Vec<Vec<u32>>, max_cosets: usize) -> Self {
        let ncols = 2 * ngens;
        let mut e = Enumerator {
            ncols,
            table: Vec::new(),
            p: Vec::new(),
            live: 0,
            max_cosets,
            relators,
            conj_by_col: None,
            deductions: Vec::new(),
            queue: Vec::new(),
            defer_deductions: false,
            stats: EnumerationStats::default(),
        };
        e.new_coset().expect("room for the first coset");
        e
    }

    #[inline]
    fn get(&self, a: u32, col: u32) -> u32 {
        self.table[a as usize * self.ncols + col as usize]
    }

    #[inline]
    fn set(&mut self, a: u32, col: u32, b: u32) {
        self.table[a as usize * self.ncols + col as usize] = b;
    }

    fn rows(&self) -> usize {
        self.p.len()
    }

    fn new_coset(&mut self) -> Option<u32> {
        if self.rows() >= self.max_cosets {
            return None;
        }
        let c = self.rows() as u32;
        self.p.push(c);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.live += 1;
        self.stats.defined += 1;
        self.stats.max_active = self.stats.max_active.max(self.live);
        Some(c)
    }

    fn define(&mut self, a: u32, col: u32) -> Option<u32> {
        let c = self.new_coset()?;
        self.set(a, col, c);
        self.set(c, col ^ 1, a);
        self.deductions.push((a, col));
        Some(c)
    }

    fn rep(&mut self, k: u32) -> u32 {
        let mut r = k;
        while self.p[r as usize] != r {
            r = self.p[r as usize];
        }
        let mut k = k;
        while self.p[k as usize] != r {
            let next = self.p[k as usize];
            self.p[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, k: u32, l: u32) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (mu, nu) = if k < l { (k, l) } else { (l, k) };
        self.p[nu as usize] = mu;
        self.queue.push(nu);
        self.live -= 1;
        self.stats.coincidences += 1;
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        if a == b {
            return;
        }
        self.merge(a, b);
        let mut qi = 0;
        while qi < self.queue.len() {
            let g = self.queue[qi];
            qi += 1;
            for x in 0..self.ncols as u32 {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                self.set(d, x ^ 1, UNDEF);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let m_x = self.get(mu, x);
                if m_x != UNDEF {
                    self.merge(nu, m_x);
                    continue;
                }
                let n_xi = self.get(nu, x ^ 1);
                if n_xi != UNDEF {
                    self.merge(mu, n_xi);
                    continue;
                }
                self.set(mu, x, nu);
                self.set(nu, x ^ 1, mu);
                self.deductions.push((mu, x));
            }
        }
        self.queue.clear();
    }

    /// Scans `w` at `a` in both directions; fills at most one gap and
    /// handles a closing coincidence. With `fill`, defines new cosets to
    /// complete the scan.
    fn scan(&mut self, a: u32, w: &[u32], fill: bool) -> Scan {
        let (mut f, mut i) = (a, 0usize);
        let (mut b, mut j) = (a, w.len());
        loop {
            while i < j {
                let nx = self.get(f, w[i]);
                if nx == UNDEF {
                    break;
                }
                f = nx;
                i += 1;
            }
            if i == j {
                self.coincidence(f, b);
                return Scan::Done;
            }
            while j > i {
                let nx = self.get(b, w[j - 1] ^ 1);
                if nx == UNDEF {
                    break;
                }
                b = nx;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Scan::Done;
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                self.deductions.push((f, w[i]));
                return Scan::Done;
            }
            if !fill {
                return Scan::Done;
            }
            match self.define(f, w[i]) {
                Some(_) => {}
                None => return Scan::NeedSpace,
            }
        }
    }

    /// Felsch processes deductions as they arise. HLT defers them until the
    /// table is full and drops the stack when it overflows; the relator scans
    /// rediscover anything lost.
    fn process_deductions(&mut self) {
        if self.defer_deductions {
            if self.deductions.len() > DEDUCTION_STACK_LIMIT {
                self.deductions.clear();
            }
            return;
        }
        self.drain_deductions();
    }

    fn conjugates(&self) -> Vec<Conjugates> {
        let mut by_col: Vec<Vec<Vec<u32>>> = vec![Vec::new(); self.ncols];
        for r in &self.relators {
            let inv: Vec<u32> = r.iter().rev().map(|&c| c ^ 1).collect();
            for w in [r, &inv] {
                for i in 0..w.len() {
                    let mut rot = w[i..].to_vec();
                    rot.extend_from_slice(&w[..i]);
                    by_col[rot[0] as usize].push(rot);
                }
            }
        }
        by_col
            .into_iter()
            .map(|mut words| {
                words.sort_unstable();
                words.dedup();
                let mut c = Conjugates::default();
                for w in words {
                    c.words.extend_from_slice(&w);
                    c.ends.push(c.words.len());
                }
                c
            })
            .collect()
    }

    /// Scans every conjugate starting with `col` at `a`; false if `a` died.
    fn scan_conjugates(&mut self, conj: &[Conjugates], a: u32, col: u32) -> bool {
        let c = &conj[col as usize];
        let mut start = 0;
        for &end in &c.ends {
            self.scan(a, &c.words[start..end], false);
            if self.p[a as usize] != a {
                return false;
            }
            start = end;
        }
        true
    }

    fn drain_deductions(&mut self) {
        if self.deductions.is_empty() {
            return;
        }
        let conj = match self.conj_by_col.take() {
            Some(c) => c,
            None => self.conjugates(),
        };
        while let Some((a, x)) = self.deductions.pop() {
            self.stats.deductions += 1;
            if self.p[a as usize] != a || !self.scan_conjugates(&conj, a, x) {
                continue;
            }
            let b = self.get(a, x);
            if b != UNDEF {
                self.scan_conjugates(&conj, b, x ^ 1);
            }
        }
        self.conj_by_col = Some(conj);
    }

    /// Removes dead rows, renumbering in order. Returns the new index of
    /// `keep` (a live coset), or `None` if nothing could be freed.
    fn compact(&mut self, keep: u32) -> Option<u32> {
        if self.live == self.rows() {
            return None;
        }
        let rows = self.rows();
        let mut new_index = vec![UNDEF; rows];
        let mut n = 0u32;
        for a in 0..rows {
            if self.p[a] == a as u32 {
                new_index[a] = n;
                n += 1;
            }
        }
        let ncols = self.ncols;
        let mut table = Vec::with_capacity(n as usize * ncols);
        for a in 0..rows {
            if new_index[a] == UNDEF {
                continue;
            }
            for &v in &self.table[a * ncols..(a + 1) * ncols] {
                table.push(if v == UNDEF {
                    UNDEF
                } else {
                    debug_assert_ne!(new_index[v as usize], UNDEF, "live row points at a dead coset");
                    new_index[v as usize]
                });
            }
        }
        let deductions: Vec<(u32, u32)> = self
            .deductions
            .iter()
            .filter(|&&(a, _)| new_index[a as usize] != UNDEF)
            .map(|&(a, x)| (new_index[a as usize], x))
            .collect();
        self.table = table;
        self.deductions = deductions;
        self.p = (0..n).collect();
        self.stats.compactions += 1;
        Some(new_index[keep as usize])
    }

    fn exceeded(&self) -> Error {
        Error::EnumerationExceeded {
            max_cosets: self.max_cosets,
            columns: self.ncols,
            max_cells: self.max_cosets.saturating_mul(self.ncols),
        }
    }

    /// Scan-and-fill `w` at `a`, compacting when the table is full. Returns
    /// the (possibly renumbered) index of `a`.
    fn scan_and_fill(&mut self, mut a: u32, w: &[u32]) -> Result<u32> {
        loop {
            match self.scan(a, w, true) {
                Scan::Done => return Ok(a),
                Scan::NeedSpace => {
                    self.drain_deductions();
                    if self.p[a as usize] != a {
                        // `a` died; the caller moves on.
                        return Ok(a);
                    }
                    a = self.compact(a).ok_or_else(|| self.exceeded())?;
                }
            }
        }
    }

    fn define_with_room(&mut self, mut a: u32, col: u32) -> Result<u32> {
        loop {
            if self.define(a, col).is_some() {
                return Ok(a);
            }
            self.drain_deductions();
            if self.p[a as usize] != a || self.get(a, col) != UNDEF {
                return Ok(a);
            }
            a = self.compact(a).ok_or_else(|| self.exceeded())?;
        }
    }

    /// One full pass of scan-and-fill over every live coset.
    fn hlt_pass(&mut self) -> Result<()> {
        let mut a = 0u32;
        while (a as usize) < self.rows() {
            if self.p[a as usize] == a {
                for r in 0..self.relators.len() {
                    let w = std::mem::take(&mut self.relators[r]);
                    let res = self.scan_and_fill(a, &w);
                    self.relators[r] = w;
                    a = res?;
                    self.process_deductions();
                    if self.p[a as usize] != a {
                        break;
                    }
                }
                if self.p[a as usize] == a {
                    for col in 0..self.ncols as u32 {
                        if self.get(a, col) == UNDEF {
                            a = self.define_with_room(a, col)?;
                            self.process_deductions();
                            if self.p[a as usize] != a {
                                break;
                            }
                        }
                    }
                }
            }
            a += 1;
        }
        Ok(())
    }

    fn felsch(&mut self) -> Result<()> {
        let (mut a, mut col) = (0u32, 0u32);
        loop {
            self.process_deductions();
            // Next undefined entry of a live coset, in coset-then-column order.
            loop {
                if a as usize >= self.rows() {
                    break;
                }
                if self.p[a as usize] == a && self.get(a, col) == UNDEF {
                    break;
                }
                col += 1;
                if col as usize == self.ncols {
                    col = 0;
                    a += 1;
                }
            }
            if a as usize >= self.rows() {
                // Coincidences may have cleared entries behind the cursor.
                match (0..self.rows() as u32)
                    .find(|&b| self.p[b as usize] == b && (0..self.ncols as u32).any(|c| self.get(b, c) == UNDEF))
                {
                    Some(b) => {
                        a = b;
                        col = 0;
                        continue;
                    }
                    None => return Ok(()),
                }
            }
            a = self.define_with_room(a, col)?;
        }
    }

    fn standardize(self, ngens: usize, trivial_subgroup: bool) -> CosetTable {
        let rows = self.rows();
        let mut order: Vec<u32> = Vec::with_capacity(self.live);
        let mut new_index = vec![UNDEF; rows];
        new_index[0] = 0;
        order.push(0);
        let mut i = 0;
        while i < order.len() {
            let a = order[i];
            for col in 0..self.ncols as u32 {
                let b = self.get(a, col);
                if new_index[b as usize] == UNDEF {
                    new_index[b as usize] = order.len() as u32;
                    order.push(b);
                }
            }
            i += 1;
        }
        let mut table = Vec::with_capacity(order.len() * self.ncols);
        for &a in &order {
            for col in 0..self.ncols as u32 {
                table.push(new_index[self.get(a, col) as usize]);
            }
        }
        CosetTable {
            ngens,
            rows: order.len(),
            table,
            trivial_subgroup,
            stats: self.stats,
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the
/// group presented by `fp`.
pub fn todd_coxeter(fp: &FpGroup, subgroup: &[Word], options: &EnumerationOptions) -> Result<CosetTable> {
    if options.max_cosets == 0 {
        return Err(Error::OutOfRange {
            what: "max_cosets".into(),
            detail: "must be at least 1".into(),
        });
    }
    for w in subgroup {
        w.validate(fp.ngens())?;
    }
    // Relators in their given order: for tensor presentations this order
    // defines far fewer cosets than a deduplicated, cyclically reduced set.
    let relators: Vec<Vec<u32>> = fp
        .relators()
        .iter()
        .map(|w| word_cols(&w.free_reduce()))
        .filter(|w| !w.is_empty())
        .collect();
    let subgroup: Vec<Vec<u32>> = subgroup
        .iter()
        .map(|w| word_cols(&w.free_reduce()))
        .filter(|w| !w.is_empty())
        .collect();
    let trivial_subgroup = subgroup.is_empty();

    let mut e = Enumerator::new(fp.ngens(), relators, options.max_cosets);
    for h in &subgroup {
        e.scan_and_fill(0, h)?;
        e.process_deductions();
    }
    match options.strategy {
        Strategy::Hlt => {
            e.defer_deductions = true;
            e.hlt_pass()?;
        }
        Strategy::Felsch => e.felsch()?,
    }
    // A completed HLT pass or Felsch run leaves every relator closing at
    // every live coset.
    let table = e.standardize(fp.ngens(), trivial_subgroup);
    debug_assert!(table.verify(fp).is_ok());
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(ngens: usize, rels: &[&str]) -> FpGroup {
        FpGroup::new(ngens, rels.iter().map(|r| Word::parse(r).unwrap()).collect()).unwrap()
    }

    fn both(f: &FpGroup, sub: &[Word], max: usize) -> Vec<Result<CosetTable>> {
        [Strategy::Hlt, Strategy::Felsch]
            .into_iter()
            .map(|s| todd_coxeter(f, sub, &EnumerationOptions::new(max).strategy(s)))
            .collect()
    }

    #[test]
    fn cyclic_five() {
        let f = fp(1, &["x1^5"]);
        for t in both(&f, &[], 100) {
            let t = t.unwrap();
            assert_eq!(t.len(), 5);
            t.verify(&f).unwrap();
        }
    }

    #[test]
    fn s3_over_c2() {
        let f = fp(2, &["x1^2", "x2^2", "x1*x2*x1*x2*x1*x2"]);
        for t in both(&f, &[Word::generator(0)], 100) {
            assert_eq!(t.unwrap().len(), 3);
        }
        for t in both(&f, &[], 100) {
            let t = t.unwrap();
            assert_eq!(t.len(), 6);
            assert!(t.is_regular());
        }
    }

    #[test]
    fn cap_of_one_is_exceeded() {
        let f = fp(1, &["x1^5"]);
        for t in both(&f, &[], 1) {
            assert!(matches!(t, Err(Error::EnumerationExceeded { max_cosets: 1, .. })));
        }
        // Index 1 fits in a single row.
        let g = fp(1, &["x1"]);
        assert_eq!(todd_coxeter(&g, &[], &EnumerationOptions::new(1)).unwrap().len(), 1);
    }

    #[test]
    fn larger_groups() {
        // S4 = <a, b | a^2, b^3, (ab)^4>
        let s4 = fp(2, &["x1^2", "x2^3", "x1*x2*x1*x2*x1*x2*x1*x2"]);
        for t in both(&s4, &[], 1000) {
            assert_eq!(t.unwrap().len(), 24);
        }
        // A5 = <a, b | a^2, b^3, (ab)^5>
        let a5 = fp(2, &["x1^2", "x2^3", "x1*x2*x1*x2*x1*x2*x1*x2*x1*x2"]);
        for t in both(&a5, &[], 1000) {
            assert_eq!(t.unwrap().len(), 60);
        }
        // Q8 = <i, j | i^4, i^2 j^-2, j^-1 i j i>
        let q8 = fp(2, &["x1^4", "x1^2*x2^-2", "x2^-1*x1*x2*x1"]);
        for t in both(&q8, &[], 1000) {
            assert_eq!(t.unwrap().len(), 8);
        }
        // Z2 x Z2 x Z2 with redundant generator x4 = x1 x2
        let e8 = fp(
            4,
            &["x1^2", "x2^2", "x3^2", "x1*x2*x1^-1*x2^-1", "x1*x3*x1^-1*x3^-1", "x2*x3*x2^-1*x3^-1", "x4^-1*x1*x2"],
        );
        for t in both(&e8, &[], 1000) {
            assert_eq!(t.unwrap().len(), 8);
        }
    }

    #[test]
    fn tight_cap_forces_compaction() {
        let a5 = fp(2, &["x1^2", "x2^3", "x1*x2*x1*x2*x1*x2*x1*x2*x1*x2"]);
        let roomy = todd_coxeter(&a5, &[], &EnumerationOptions::new(10_000)).unwrap();
        let mut cap = 60;
        let tight = loop {
            match todd_coxeter(&a5, &[], &EnumerationOptions::new(cap)) {
                Ok(t) => break t,
                Err(Error::EnumerationExceeded { .. }) => cap += 5,
                Err(e) => panic!("{e}"),
            }
        };
        assert_eq!(tight.len(), 60);
        assert_eq!(tight.to_csv(), roomy.to_csv());
    }

    #[test]
    fn deterministic_and_standardized() {
        let f = fp(2, &["x1^2", "x2^3", "x1*x2*x1*x2*x1*x2*x1*x2"]);
        let a = todd_coxeter(&f, &[], &EnumerationOptions::new(1000)).unwrap();
        let b = todd_coxeter(&f, &[], &EnumerationOptions::new(1000)).unwrap();
        assert_eq!(a, b);
        let felsch = todd_coxeter(&f, &[], &EnumerationOptions::new(1000).strategy(Strategy::Felsch)).unwrap();
        // Standardized tables of the same regular action coincide.
        assert_eq!(a.to_csv(), felsch.to_csv());
        assert!(a.to_csv().starts_with("coset,x1,x2\n0,"));
    }
}
