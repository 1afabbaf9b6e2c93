//! Depth-first exploration of truncated, trimmed subtrees `T_m`.
//!
//! Each node is stored as a decomposition-count array `d`, where `d[n]` is
//! the number of pairs `x <= y` of elements with `x + y = n`. Then `n` is an
//! element iff `d[n] > 0` and a primitive iff `d[n] == 1`, and removing a big
//! primitive `p` is the single pass `d'[n] = d[n] - [d[n - p] > 0]`. Next to
//! the array every node carries a small header (conductor, genus, number of
//! left elements, embedding dimension, left primitives and their gcd) that is
//! updated along the edge rather than recomputed.

use std::cmp::Ordering;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::counting::{CountMatrix, Provenance};
use crate::properties::{cutting_from_lefts, density_ok, depth_ok, gcd_lefts, is_cutting, truncated_rule};
use crate::{Error, InvariantRecord, PropertySpec, Ratio, Result, Semigroup};

/// What the exploration looks for at each visited node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    /// No predicate; only counts.
    CountAll,
    /// `W(S) < 0`.
    WilfNegative,
    /// `E(S) < 0`.
    EliahouNegative,
    /// `W(S) = 0` with `e > 2` and `S` not quasi-superficial.
    ZeroWilfNontrivial,
    /// `k e < m`.
    LittleDensity(Ratio),
    /// `c > l m`.
    NonGeneric(Ratio),
}

impl Target {
    /// Properties whose cutting semigroups cannot contain a hit below them.
    pub fn trim(&self) -> Vec<PropertySpec> {
        let h3 = PropertySpec::generic();
        match *self {
            Target::CountAll => vec![],
            Target::WilfNegative => vec![PropertySpec::LargeDensity(Ratio::integer(3)), h3],
            Target::EliahouNegative | Target::ZeroWilfNontrivial => vec![h3],
            Target::LittleDensity(k) => PropertySpec::large_density(k).into_iter().collect(),
            Target::NonGeneric(l) => vec![PropertySpec::SmallDepth(l)],
        }
    }

    fn matches(&self, n: &NodeStats) -> bool {
        match *self {
            Target::CountAll => false,
            Target::WilfNegative => n.wilf() < 0,
            Target::EliahouNegative => n.eliahou() < 0,
            // quasi-superficial needs the primitive list; checked on the hit
            Target::ZeroWilfNontrivial => n.wilf() == 0 && n.e > 2,
            Target::LittleDensity(k) => !density_ok(k, n.m, n.e),
            Target::NonGeneric(l) => !depth_ok(l, n.m, n.c),
        }
    }

    fn confirm(&self, s: &Semigroup) -> bool {
        match self {
            Target::ZeroWilfNontrivial => !s.is_quasi_superficial(),
            _ => true,
        }
    }
}

/// A semigroup matching the target, in its canonical description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hit {
    pub generators: Vec<u32>,
    pub truncation: Option<u32>,
    pub multiplicity: u32,
    pub genus: u32,
    pub conductor: u32,
    pub edim: u32,
    pub invariants: InvariantRecord,
}

impl Hit {
    fn new(s: &Semigroup) -> Self {
        let (generators, truncation) = s.canonical_description();
        Hit {
            generators,
            truncation,
            multiplicity: s.multiplicity(),
            genus: s.genus(),
            conductor: s.conductor(),
            edim: s.edim(),
            invariants: s.invariants(),
        }
    }

    pub fn semigroup(&self) -> Semigroup {
        Semigroup::from_generators(&self.generators, self.truncation).expect("hit describes a semigroup")
    }

    fn key(&self) -> (u32, u32, &[u32], Option<u32>) {
        (self.genus, self.multiplicity, &self.generators, self.truncation)
    }
}

impl PartialOrd for Hit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

#[derive(Debug, Clone)]
pub struct ExplorationTask {
    pub roots: Vec<Semigroup>,
    pub max_genus: u32,
    /// Subtrees of semigroups cutting for any of these are not entered.
    pub trim: Vec<PropertySpec>,
    pub target: Target,
    pub workers: usize,
    /// Also cut with the genus-bounded rules of
    /// [`truncated_cut_sufficient`](crate::properties::truncated_cut_sufficient).
    pub truncated_cuts: bool,
    /// Replace superficial roots by their chain semigroups `S_{m,i}`. `None`
    /// splits when there are fewer than four roots per worker.
    pub split_chains: Option<bool>,
    /// Recompute every `n`-th visited node from scratch and compare (0: off).
    pub audit_every: u64,
}

impl ExplorationTask {
    /// Plain exploration: no trimming, one worker.
    pub fn new(roots: Vec<Semigroup>, max_genus: u32, target: Target) -> Self {
        ExplorationTask {
            roots,
            max_genus,
            trim: vec![],
            target,
            workers: 1,
            truncated_cuts: false,
            split_chains: None,
            audit_every: 0,
        }
    }

    /// Roots from [`plan_roots`], trimmed with the target's own properties.
    pub fn trimmed(max_genus: u32, target: Target) -> Self {
        ExplorationTask {
            trim: target.trim(),
            truncated_cuts: true,
            ..ExplorationTask::new(plan_roots(max_genus, target), max_genus, target)
        }
    }

    /// All roots `O_2, ..., O_{gamma+1}`, no trimming.
    pub fn full(max_genus: u32, target: Target) -> Self {
        ExplorationTask::new(plan_roots(max_genus, Target::CountAll), max_genus, target)
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

#[derive(Debug, Clone)]
pub struct ExplorationResult {
    /// Visited semigroups by multiplicity and genus.
    pub counts: CountMatrix,
    /// Cut nodes by multiplicity and genus, counted at the cut only.
    pub pruned: CountMatrix,
    /// Sorted by genus, multiplicity, generators, truncation.
    pub hits: Vec<Hit>,
}

impl ExplorationResult {
    /// Number of hits of each genus `0..=max_genus`.
    pub fn hits_by_genus(&self) -> Vec<u64> {
        let mut out = vec![0; self.counts.max_genus() as usize + 1];
        for h in &self.hits {
            out[h.genus as usize] += 1;
        }
        out
    }
}

/// Superficial roots `O_m` for a search of genus up to `gamma`, without the
/// multiplicities that provably contain no hit.
pub fn plan_roots(gamma: u32, target: Target) -> Vec<Semigroup> {
    let g = gamma as u64;
    let keep = |m: u64| match target {
        Target::CountAll => true,
        // m <= 18 is Wilf; O_m is D(3)-cutting up to genus gamma when 5m >= 3(gamma+1)
        Target::WilfNegative => m > 18 && 5 * m < 3 * (g + 1),
        Target::EliahouNegative | Target::ZeroWilfNontrivial => m <= (2 * g).div_ceil(3),
        // m >= 2 gamma / l forces c <= l m below genus gamma
        Target::NonGeneric(l) => m <= (2 * g * l.den()).div_ceil(l.num()),
        Target::LittleDensity(k) => {
            k.num() <= k.den() || (2 * k.num() - k.den()) * m < k.num() * (g + 1)
        }
    };
    (2..=gamma + 1)
        .filter(|&m| keep(m as u64))
        .map(|m| Semigroup::superficial(m).expect("m >= 2"))
        .collect()
}

/// Chain semigroups `S_{m,0}, ..., S_{m,gamma-m+1}` that split `T_m`, up to
/// the first one the target's truncated cut removes.
pub fn split_chain(m: u32, gamma: u32, target: Target) -> Vec<Semigroup> {
    let trim = target.trim();
    let mut out = Vec::new();
    if m < 2 || m > gamma + 1 {
        return out;
    }
    for i in 0..=gamma + 1 - m {
        let s = Semigroup::chain(m, i).expect("m >= 2");
        if trim.iter().any(|p| is_cutting(&s, p) || truncated_rule(p, m, i == 0, Some(i), gamma)) {
            break;
        }
        out.push(s);
    }
    out
}

/// Explores every root's subtree and merges the per-worker results.
pub fn explore(task: &ExplorationTask) -> Result<ExplorationResult> {
    run(task, false).map(|(r, _)| r)
}

/// Every semigroup visited by `task`, sorted by genus then primitives. For
/// small genus only: each node is materialized.
pub fn visited_semigroups(task: &ExplorationTask) -> Result<Vec<Semigroup>> {
    let (_, mut nodes) = run(task, true)?;
    nodes.sort_by(|a, b| (a.genus(), a.primitives()).cmp(&(b.genus(), b.primitives())));
    Ok(nodes)
}

/// A unit of work: a root, and whether its chain successor is handled as a
/// separate root.
#[derive(Debug, Clone)]
struct Item {
    root: Semigroup,
    reserve_chain: bool,
}

fn run(task: &ExplorationTask, collect: bool) -> Result<(ExplorationResult, Vec<Semigroup>)> {
    let gamma = task.max_genus;
    if gamma == 0 {
        return Err(Error::InvalidParameter("max genus must be positive".into()));
    }
    if task.workers == 0 {
        return Err(Error::InvalidParameter("need at least one worker".into()));
    }
    for r in &task.roots {
        if r.genus() > gamma {
            return Err(Error::InvalidParameter(format!("root {r} has genus above {gamma}")));
        }
        if r.is_naturals() {
            return Err(Error::InvalidParameter("N is not a root of any T_m".into()));
        }
        if width(r.multiplicity(), gamma) > MAX_WIDTH {
            return Err(Error::InvalidParameter(format!("genus {gamma} with multiplicity {} is too large", r.multiplicity())));
        }
    }
    let split = task.split_chains.unwrap_or(task.workers > 1 && task.roots.len() < 4 * task.workers);
    let rows = gamma as usize + 2;
    let cols = gamma as usize + 1;
    let mut pruned = vec![0u64; rows * cols];
    let mut items = Vec::new();
    for r in &task.roots {
        if split && r.is_superficial() {
            // A cut chain semigroup cuts its chain successors too.
            let m = r.multiplicity();
            for i in 0..=gamma + 1 - m {
                let root = Semigroup::chain(m, i)?;
                if task.trim.iter().any(|p| {
                    is_cutting(&root, p) || (task.truncated_cuts && truncated_rule(p, m, i == 0, Some(i), gamma))
                }) {
                    pruned[m as usize * cols + root.genus() as usize] += 1;
                    break;
                }
                items.push(Item { root, reserve_chain: i < gamma + 1 - m });
            }
        } else {
            items.push(Item { root: r.clone(), reserve_chain: false });
        }
    }

    let workers = task.workers.min(items.len()).max(1);
    let outs: Vec<Result<WorkerOut>> = if workers == 1 {
        vec![work(task, &items, 0, 1, collect)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let items = &items;
                    scope.spawn(move || work(task, items, w, workers, collect))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };

    let mut counts = vec![0u64; rows * cols];
    let mut hits = Vec::new();
    let mut nodes = Vec::new();
    for out in outs {
        let out = out?;
        for (i, (&c, &p)) in out.counts.iter().zip(&out.pruned).enumerate() {
            let overflow = || Error::CapacityExceeded { m: (i / cols) as u32, g: (i % cols) as u32 };
            counts[i] = counts[i].checked_add(c).ok_or_else(overflow)?;
            pruned[i] = pruned[i].checked_add(p).ok_or_else(overflow)?;
        }
        hits.extend(out.hits);
        nodes.extend(out.nodes);
    }
    hits.sort();

    let explored: Vec<u32> = task.roots.iter().map(|r| r.multiplicity()).collect();
    let to_matrix = |cells: &[u64]| {
        let mut mat = CountMatrix::new(gamma + 1, gamma);
        for &m in &explored {
            for g in 0..=gamma {
                let v = cells[m as usize * cols + g as usize] as u128;
                let prov = if m > g + 1 { Provenance::StructuralZero } else { Provenance::Explored };
                mat.set(m, g, v, prov);
            }
        }
        mat
    };
    Ok((ExplorationResult { counts: to_matrix(&counts), pruned: to_matrix(&pruned), hits }, nodes))
}

/// `d` values stay below 256 while the array is shorter than this.
const MAX_WIDTH: usize = 510;

/// Array length for `T_m` up to genus `gamma`: a node of genus `g < gamma`
/// has a conductor at most `2g`, and its children look at most `m` past
/// their own conductor.
fn width(m: u32, gamma: u32) -> usize {
    2 * gamma as usize + m as usize + 1
}

struct WorkerOut {
    counts: Vec<u64>,
    pruned: Vec<u64>,
    hits: Vec<Hit>,
    nodes: Vec<Semigroup>,
}

fn work(task: &ExplorationTask, items: &[Item], w: usize, stride: usize, collect: bool) -> Result<WorkerOut> {
    let gamma = task.max_genus;
    let cols = gamma as usize + 1;
    let mut out = WorkerOut {
        counts: vec![0; (gamma as usize + 2) * cols],
        pruned: vec![0; (gamma as usize + 2) * cols],
        hits: Vec::new(),
        nodes: Vec::new(),
    };
    let mut walker = Walker {
        gamma,
        trim: &task.trim,
        target: task.target,
        truncated: task.truncated_cuts,
        collect,
        audit_every: task.audit_every,
        audit_tick: 0,
        shortcut: !collect && task.audit_every == 0 && task.target == Target::CountAll,
        m: 0,
        w: 0,
        counts: vec![0; cols],
        pruned: vec![0; cols],
        arena: Vec::new(),
        stack: Vec::new(),
        scratch: Vec::new(),
        lefts: Vec::new(),
        hits: Vec::new(),
        nodes: Vec::new(),
    };
    for item in items.iter().skip(w).step_by(stride) {
        let m = item.root.multiplicity();
        walker.counts.iter_mut().for_each(|c| *c = 0);
        walker.pruned.iter_mut().for_each(|c| *c = 0);
        walker.walk(&item.root, item.reserve_chain)?;
        let base = m as usize * cols;
        for g in 0..cols {
            let overflow = || Error::CapacityExceeded { m, g: g as u32 };
            out.counts[base + g] = out.counts[base + g].checked_add(walker.counts[g]).ok_or_else(overflow)?;
            out.pruned[base + g] = out.pruned[base + g].checked_add(walker.pruned[g]).ok_or_else(overflow)?;
        }
    }
    out.hits = walker.hits;
    out.nodes = walker.nodes;
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
struct Header {
    c: u32,
    g: u32,
    /// Elements below the conductor, 0 included.
    l: u32,
    e: u32,
    le: u32,
    gcd: u32,
    /// The node is the chain semigroup `S_{m, g-m+1}`.
    chain: bool,
    /// Skip the chain child (it is explored as its own root).
    reserve: bool,
}

struct NodeStats {
    m: u32,
    c: u32,
    e: u32,
    le: u32,
    l: u32,
}

impl NodeStats {
    fn wilf(&self) -> i64 {
        self.e as i64 * self.l as i64 - self.c as i64
    }

    fn eliahou(&self) -> i64 {
        let (m, c) = (self.m as i64, self.c as i64);
        let q = (c + m - 1) / m;
        let rho = q * m - c;
        let dq = m - (self.e - self.le) as i64;
        self.le as i64 * self.l as i64 - q * dq + rho
    }
}

struct Walker<'a> {
    gamma: u32,
    trim: &'a [PropertySpec],
    target: Target,
    truncated: bool,
    collect: bool,
    audit_every: u64,
    audit_tick: u64,
    /// Count the children of genus `gamma` without building them.
    shortcut: bool,
    m: u32,
    w: usize,
    counts: Vec<u64>,
    pruned: Vec<u64>,
    arena: Vec<u8>,
    stack: Vec<Header>,
    scratch: Vec<u8>,
    lefts: Vec<u32>,
    hits: Vec<Hit>,
    nodes: Vec<Semigroup>,
}

impl Walker<'_> {
    fn bump(cells: &mut [u64], m: u32, g: u32) -> Result<()> {
        let cell = &mut cells[g as usize];
        *cell = cell.checked_add(1).ok_or(Error::CapacityExceeded { m, g })?;
        Ok(())
    }

    fn walk(&mut self, root: &Semigroup, reserve: bool) -> Result<()> {
        let m = root.multiplicity();
        let chain = root.chain_index();
        if self.trim.iter().any(|p| {
            is_cutting(root, p) || (self.truncated && truncated_rule(p, m, root.is_superficial(), chain, self.gamma))
        }) {
            return Self::bump(&mut self.pruned, m, root.genus());
        }
        self.m = m;
        self.w = width(m, self.gamma);
        let w = self.w;
        self.scratch.resize(w, 0);
        self.arena.clear();
        self.stack.clear();
        self.arena.resize(w, 0);
        for n in 0..w as u32 {
            self.arena[n as usize] = (0..=n / 2).filter(|&x| root.contains(x) && root.contains(n - x)).count() as u8;
        }
        self.stack.push(Header {
            c: root.conductor(),
            g: root.genus(),
            l: root.left_count(),
            e: root.edim(),
            le: root.left_prim_count(),
            gcd: gcd_lefts(root),
            chain: chain.is_some(),
            reserve,
        });
        while let Some(h) = self.stack.pop() {
            let start = self.stack.len() * w;
            self.scratch.copy_from_slice(&self.arena[start..start + w]);
            self.arena.truncate(start);
            self.visit(&h)?;
            if h.g < self.gamma {
                self.expand(&h)?;
            }
        }
        Ok(())
    }

    fn materialize(&self, h: &Header) -> Semigroup {
        let window = self.scratch[..(h.c + self.m) as usize].iter().map(|&d| d > 0).collect();
        Semigroup::from_window(window)
    }

    fn visit(&mut self, h: &Header) -> Result<()> {
        let m = self.m;
        Self::bump(&mut self.counts, m, h.g)?;
        let stats = NodeStats { m, c: h.c, e: h.e, le: h.le, l: h.l };
        if self.target.matches(&stats) {
            let s = self.materialize(h);
            if self.target.confirm(&s) {
                self.hits.push(Hit::new(&s));
            }
        }
        if self.collect {
            let s = self.materialize(h);
            self.nodes.push(s);
        }
        if self.audit_every > 0 {
            self.audit_tick += 1;
            if self.audit_tick % self.audit_every == 0 {
                self.audit(h);
            }
        }
        Ok(())
    }

    fn audit(&self, h: &Header) {
        let s = self.materialize(h);
        let got = (h.c, h.g, h.l, h.e, h.le, h.gcd);
        let want = (s.conductor(), s.genus(), s.left_count(), s.edim(), s.left_prim_count(), gcd_lefts(&s));
        assert_eq!(got, want, "incremental state diverged at {s}");
    }

    /// Left primitives of the node held in `scratch`.
    fn collect_lefts(&mut self, h: &Header) {
        self.lefts.clear();
        self.lefts.extend((1..h.c).filter(|&n| self.scratch[n as usize] == 1));
    }

    fn expand(&mut self, h: &Header) -> Result<()> {
        let m = self.m;
        let child_g = h.g + 1;
        let leaf = self.shortcut && child_g == self.gamma;
        if leaf && self.trim.is_empty() {
            let eligible = h.e - h.le - u32::from(h.c <= m) - u32::from(h.reserve);
            let cell = &mut self.counts[child_g as usize];
            *cell = cell.checked_add(eligible as u64).ok_or(Error::CapacityExceeded { m, g: child_g })?;
            return Ok(());
        }
        let needs_lefts = self.trim.iter().any(|p| !matches!(p, PropertySpec::LargeDensity(_)));
        if needs_lefts {
            self.collect_lefts(h);
        }
        let mut idx = h.le;
        let mut gcd = h.gcd;
        let mut first = true;
        for p in h.c..h.c + m {
            if self.scratch[p as usize] != 1 {
                continue;
            }
            // Removing m leaves T_m; the first other big primitive leads
            // along the chain.
            let chain_step = p > m && std::mem::replace(&mut first, false);
            if p > m && !(chain_step && h.reserve) {
                self.child(h, p, idx, gcd, h.chain && chain_step, leaf)?;
            }
            idx += 1;
            gcd = gcd.gcd(&p);
            if needs_lefts {
                self.lefts.push(p);
            }
        }
        Ok(())
    }

    /// Prunes, counts or pushes the child removing `p`, which keeps `le`
    /// left primitives of gcd `gcd`.
    fn child(&mut self, h: &Header, p: u32, le: u32, gcd: u32, chain: bool, leaf: bool) -> Result<()> {
        let (m, w, g) = (self.m, self.w, h.g + 1);
        let cut = self.trim.iter().any(|prop| {
            self.child_cutting(prop, g, p, le, gcd)
                || (self.truncated && chain && truncated_rule(prop, m, false, Some(g + 1 - m), self.gamma))
        });
        if cut {
            return Self::bump(&mut self.pruned, m, g);
        }
        if leaf {
            return Self::bump(&mut self.counts, m, g);
        }
        let start = self.arena.len();
        self.arena.resize(start + w, 0);
        let dst = &mut self.arena[start..];
        let pu = p as usize;
        dst[..pu].copy_from_slice(&self.scratch[..pu]);
        for ((o, &a), &b) in dst[pu..].iter_mut().zip(&self.scratch[pu..]).zip(&self.scratch[..w - pu]) {
            *o = a - u8::from(b != 0);
        }
        let gains = dst[pu + m as usize] == 1;
        self.stack.push(Header {
            c: p + 1,
            g,
            l: h.l + p - h.c,
            e: h.e - 1 + u32::from(gains),
            le,
            gcd,
            chain,
            reserve: false,
        });
        Ok(())
    }

    /// Cutting test for the child removing `p`; `self.lefts` holds the
    /// primitives below `p` when a non-density property is trimmed.
    fn child_cutting(&self, prop: &PropertySpec, child_g: u32, p: u32, le: u32, gcd: u32) -> bool {
        match *prop {
            PropertySpec::LargeDensity(k) => density_ok(k, self.m, if gcd == 1 { le } else { le + 1 }),
            PropertySpec::GenusBound(g) if child_g > g => false,
            PropertySpec::SmallDepth(l) if !depth_ok(l, self.m, p + 1) => false,
            _ => gcd == 1 && cutting_from_lefts(prop, self.m, &self.lefts, gcd),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_roots_examples() {
        let ms = |v: Vec<Semigroup>| v.iter().map(|s| s.multiplicity()).collect::<Vec<_>>();
        assert_eq!(ms(plan_roots(100, Target::WilfNegative)), (19..=60).collect::<Vec<_>>());
        assert_eq!(ms(plan_roots(10, Target::CountAll)), (2..=11).collect::<Vec<_>>());
        assert_eq!(ms(plan_roots(30, Target::EliahouNegative)), (2..=20).collect::<Vec<_>>());
        assert_eq!(ms(plan_roots(30, Target::NonGeneric(Ratio::integer(3)))), (2..=20).collect::<Vec<_>>());
        assert!(plan_roots(30, Target::WilfNegative).is_empty());
    }

    #[test]
    fn split_chain_examples() {
        let idx = |v: Vec<Semigroup>| v.iter().map(|s| s.chain_index().unwrap()).collect::<Vec<_>>();
        assert_eq!(idx(split_chain(30, 100, Target::WilfNegative)), (0..=50).collect::<Vec<_>>());
        // 3 (2*40 - 101 + i) >= 40 first holds at i = 35
        assert_eq!(idx(split_chain(40, 100, Target::WilfNegative)), (0..=34).collect::<Vec<_>>());
        assert_eq!(split_chain(5, 10, Target::CountAll).len(), 7);
        assert_eq!(split_chain(5, 10, Target::CountAll)[0], Semigroup::superficial(5).unwrap());
    }

    #[test]
    fn small_counts_with_audit() {
        let mut task = ExplorationTask::full(10, Target::CountAll);
        task.audit_every = 1;
        let r = explore(&task).unwrap();
        let by_genus: Vec<u128> = (0..=10).map(|g| (2..=11).map(|m| r.counts.get(m, g).unwrap()).sum()).collect();
        assert_eq!(by_genus, vec![0, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204]);
    }

    #[test]
    fn eliahou_from_header_matches_semigroup() {
        let task = ExplorationTask::new(plan_roots(9, Target::CountAll), 9, Target::CountAll);
        for s in visited_semigroups(&task).unwrap() {
            let n = NodeStats { m: s.multiplicity(), c: s.conductor(), e: s.edim(), le: s.left_prim_count(), l: s.left_count() };
            assert_eq!(n.eliahou(), s.eliahou_number(), "{s}");
            assert_eq!(n.wilf(), s.wilf_number(), "{s}");
        }
    }
}
