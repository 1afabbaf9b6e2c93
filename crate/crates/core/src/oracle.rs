//! Slow reference implementations, written from the definitions only.
//!
//! Nothing here goes through the tree code, the closure module or the
//! invariant formulas of [`Semigroup`]; semigroups are handled as plain gap
//! sets and only converted at the boundary.

use std::collections::{BTreeSet, HashSet};

use crate::{Error, InvariantRecord, Result, Semigroup};

/// Membership table of the complement of `gaps`, long enough to hold every
/// gap and a full period after it.
fn table(gaps: &BTreeSet<u32>, extra: u32) -> Vec<bool> {
    let top = gaps.iter().next_back().map_or(0, |&f| f + 1) + extra;
    (0..top as usize).map(|n| !gaps.contains(&(n as u32))).collect()
}

fn is_closed(gaps: &BTreeSet<u32>) -> bool {
    let member = table(gaps, 0);
    gaps.iter().all(|&x| (1..x).all(|a| !(member[a as usize] && member[(x - a) as usize])))
}

/// All numerical semigroups of genus exactly `g`, found by testing every
/// `g`-subset of `[1, 2g - 1]` as a gap set. Sorted by primitives.
pub fn enumerate_all_by_subsets(g: u32) -> Result<Vec<Semigroup>> {
    if g > 12 {
        return Err(Error::InvalidParameter(format!("subset enumeration is capped at genus 12, got {g}")));
    }
    if g == 0 {
        return Ok(vec![Semigroup::naturals()]);
    }
    let width = 2 * g - 1;
    let mut out = Vec::new();
    for mask in 0u32..1 << width {
        if mask.count_ones() != g {
            continue;
        }
        let gaps: BTreeSet<u32> = (0..width).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        if is_closed(&gaps) {
            out.push(Semigroup::from_gaps(&gaps.into_iter().collect::<Vec<_>>())?);
        }
    }
    out.sort_by(|a, b| a.primitives().cmp(b.primitives()));
    Ok(out)
}

struct Naive {
    gaps: BTreeSet<u32>,
}

impl Naive {
    fn of(s: &Semigroup) -> Self {
        Naive { gaps: s.gaps().collect() }
    }

    fn conductor(&self) -> u32 {
        self.gaps.iter().next_back().map_or(0, |&f| f + 1)
    }

    fn multiplicity(&self) -> u32 {
        (1..).find(|n| !self.gaps.contains(n)).expect("cofinite")
    }

    /// Elements that are not a sum of two nonzero elements. All of them lie
    /// in `[1, c + m]`; the right end only matters for `N`.
    fn primitives(&self) -> Vec<u32> {
        let m = self.multiplicity();
        let member = table(&self.gaps, 2 * m + 1);
        (1..=self.conductor() + m)
            .filter(|&n| member[n as usize])
            .filter(|&n| (1..n).all(|a| !(member[a as usize] && member[(n - a) as usize])))
            .collect()
    }

    fn lefts_gcd(&self) -> u32 {
        let mut g = 0;
        for n in 1..self.conductor() {
            if !self.gaps.contains(&n) {
                let (mut a, mut b) = (g, n);
                while b != 0 {
                    (a, b) = (b, a % b);
                }
                g = a;
            }
        }
        g
    }

    fn to_semigroup(&self) -> Semigroup {
        Semigroup::from_gaps(&self.gaps.iter().copied().collect::<Vec<_>>()).expect("closed gap set")
    }

    fn children(&self) -> Vec<Naive> {
        let c = self.conductor();
        self.primitives()
            .into_iter()
            .filter(|&p| p >= c)
            .map(|p| {
                let mut gaps = self.gaps.clone();
                gaps.insert(p);
                Naive { gaps }
            })
            .collect()
    }
}

/// `s` and all its descendants, by exhaustive child recursion.
pub fn naive_descendants(s: &Semigroup) -> Result<Vec<Semigroup>> {
    let mut out = Vec::new();
    walk_descendants(s, &mut |t| {
        out.push(t.to_semigroup());
        true
    })?;
    Ok(out)
}

/// Whether `pred` holds on `s` and all its descendants, stopping at the first
/// failure.
pub fn all_descendants_satisfy(s: &Semigroup, pred: impl Fn(&Semigroup) -> bool) -> Result<bool> {
    walk_descendants(s, &mut |t| pred(&t.to_semigroup()))
}

fn walk_descendants(s: &Semigroup, f: &mut dyn FnMut(&Naive) -> bool) -> Result<bool> {
    let root = Naive::of(s);
    let gcd = root.lefts_gcd();
    if gcd != 1 {
        return Err(Error::InfiniteDescent(gcd));
    }
    let mut seen = HashSet::new();
    let mut stack = vec![root];
    while let Some(t) = stack.pop() {
        if !seen.insert(t.gaps.clone()) {
            continue;
        }
        if !f(&t) {
            return Ok(false);
        }
        stack.extend(t.children());
    }
    Ok(true)
}

/// `S = <m, 2m+1, ..., 2m+k, 3m+k+1, ..., 3m+2k>` with `m = 2k + 1`, and
/// the removals `3m+k+1, ..., 3m+2k`, each of which lowers the embedding
/// dimension by one.
pub fn edim_drop_family(k: u32) -> Result<(Semigroup, Vec<u32>)> {
    if k == 0 {
        return Err(Error::NonPositive(0));
    }
    let m = 2 * k + 1;
    let removals: Vec<u32> = (3 * m + k + 1..=3 * m + 2 * k).collect();
    let mut gens = vec![m];
    gens.extend(2 * m + 1..=2 * m + k);
    gens.extend(&removals);
    Ok((Semigroup::from_generators(&gens, None)?, removals))
}

/// Wilf and Eliahou numbers and the quantities behind them, from a fresh
/// membership table.
pub fn naive_invariants(s: &Semigroup) -> InvariantRecord {
    let t = Naive::of(s);
    let (m, c) = (t.multiplicity() as i64, t.conductor() as i64);
    let prims = t.primitives();
    let member = table(&t.gaps, 2 * m as u32 + 1);
    let left = (0..c).filter(|&n| member[n as usize]).count() as i64;
    let le = prims.iter().filter(|&&p| (p as i64) < c).count() as i64;
    let e = prims.len() as i64;
    let q = (0..).find(|&q| q * m >= c).expect("finite depth");
    let rho = q * m - c;
    let dq = (c..c + m).filter(|n| !prims.contains(&(*n as u32))).count() as i64;
    InvariantRecord {
        wilf: e * left - c,
        eliahou: le * left - q * dq + rho,
        depth: q as u32,
        density: (0..).find(|&d| d * e >= m).expect("e >= 1") as u32,
        edim: e as u32,
        rho: rho as u32,
        dq_count: dq as u32,
    }
}
