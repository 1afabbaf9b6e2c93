//! Canonical representation of a numerical semigroup.
//!
//! A [`Semigroup`] stores its membership over the window `[0, c + m)`; every
//! integer at or beyond `c + m` is implicitly a member. The minimal generating
//! set (the primitives) and a few counts that are cheap to carry along are
//! cached at construction time, so every value is immutable and complete.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::closure::truncated_closure;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    multiplicity: u32,
    conductor: u32,
    genus: u32,
    /// `membership[n]` for `n` in `[0, c + m)`.
    membership: Vec<bool>,
    primitives: Vec<u32>,
    left_count: u32,
    left_prim_count: u32,
}

/// Derived per-semigroup quantities used for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub wilf: i64,
    pub eliahou: i64,
    pub depth: u32,
    pub density: u32,
    pub edim: u32,
    pub rho: u32,
    pub dq_count: u32,
}

impl Semigroup {
    /// The full semigroup `N`.
    pub fn naturals() -> Self {
        Semigroup {
            multiplicity: 1,
            conductor: 0,
            genus: 0,
            membership: vec![true],
            primitives: vec![1],
            left_count: 0,
            left_prim_count: 0,
        }
    }

    /// The superficial (ordinary) semigroup `O_m = <m, m+1, ..., 2m-1>`.
    /// `O_1` is `N`.
    pub fn superficial(m: u32) -> Result<Self> {
        match m {
            0 => Err(Error::NonPositive(0)),
            1 => Ok(Self::naturals()),
            _ => {
                let mut membership = vec![true; 2 * m as usize];
                membership[1..m as usize].fill(false);
                Ok(Semigroup {
                    multiplicity: m,
                    conductor: m,
                    genus: m - 1,
                    membership,
                    primitives: (m..2 * m).collect(),
                    left_count: 1,
                    left_prim_count: 0,
                })
            }
        }
    }

    /// The `i`-th semigroup of the chain hanging from `O_m` along the
    /// removal of the smallest big primitive other than `m`: the multiples
    /// of `m` together with everything from the conductor on, where the gaps
    /// are the first `m - 1 + i` positive non-multiples of `m`.
    pub fn chain(m: u32, i: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("chain needs m >= 2, got {m}")));
        }
        let gaps = m - 1 + i;
        // the (gaps)-th non-multiple of m
        let frobenius = gaps + (gaps - 1) / (m - 1);
        let window = (0..=frobenius).map(|n| n % m == 0).collect();
        Ok(Self::from_window(window))
    }

    /// `Some(i)` when `self` is [`Semigroup::chain`]`(m, i)`.
    pub fn chain_index(&self) -> Option<u32> {
        let m = self.multiplicity;
        if m < 2 || self.left_elements().any(|x| x % m != 0) {
            return None;
        }
        Some(self.genus + 1 - m)
    }

    /// `<gens>`, or `<gens>_t` when a truncation is given. Redundant
    /// generators are allowed; the minimal generating set is recomputed.
    pub fn from_generators(gens: &[u32], truncation: Option<u32>) -> Result<Self> {
        if gens.is_empty() && truncation.is_none() {
            return Err(Error::EmptyInput);
        }
        if let Some(&z) = gens.iter().find(|&&g| g == 0) {
            return Err(Error::NonPositive(z));
        }
        match truncation {
            Some(t) => {
                if t == 0 {
                    return Ok(Self::naturals());
                }
                let window = truncated_closure(gens, t);
                Ok(Self::from_window(window.membership().to_vec()))
            }
            None => {
                let d = gens.iter().fold(0u32, |acc, &g| acc.gcd(&g));
                if d != 1 {
                    return Err(Error::NotNumerical(gens.to_vec(), d));
                }
                Ok(Self::from_window(closure_until_conductor(gens)))
            }
        }
    }

    /// The semigroup `N \ gaps`. Fails if the complement is not closed under
    /// addition.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self> {
        if gaps.contains(&0) {
            return Err(Error::InvalidParameter("0 cannot be a gap".into()));
        }
        let len = gaps.iter().max().map_or(1, |&f| f as usize + 1);
        let mut window = vec![true; len];
        for &gap in gaps {
            window[gap as usize] = false;
        }
        for x in 1..len {
            if !window[x] {
                continue;
            }
            for y in x..len - x {
                if window[y] && !window[x + y] {
                    return Err(Error::InvalidParameter(format!(
                        "{x} + {y} = {} is listed as a gap",
                        x + y
                    )));
                }
            }
        }
        Ok(Self::from_window(window))
    }

    /// Builds the semigroup from a membership prefix; integers beyond the
    /// prefix are members. The prefix must be closed under addition.
    pub(crate) fn from_window(mut window: Vec<bool>) -> Self {
        debug_assert!(window.first().copied().unwrap_or(true));
        let conductor = window.iter().rposition(|&b| !b).map_or(0, |f| f + 1);
        if conductor == 0 {
            return Self::naturals();
        }
        let m = (1..conductor).find(|&n| window[n]).unwrap_or(conductor);
        window.resize(conductor + m, true);
        window.truncate(conductor + m);
        window[0] = true;

        let genus = window[1..conductor].iter().filter(|&&b| !b).count() as u32;
        let primitives: Vec<u32> = (m..conductor + m)
            .filter(|&n| window[n] && !decomposable(&window, m, n))
            .map(|n| n as u32)
            .collect();
        let left_prim_count = primitives.iter().filter(|&&p| (p as usize) < conductor).count();
        Semigroup {
            multiplicity: m as u32,
            conductor: conductor as u32,
            genus,
            membership: window,
            left_count: conductor as u32 - genus,
            left_prim_count: left_prim_count as u32,
            primitives,
        }
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `c - 1`; `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn edim(&self) -> u32 {
        self.primitives.len() as u32
    }

    pub fn left_count(&self) -> u32 {
        self.left_count
    }

    /// Left embedding dimension: number of primitives below the conductor.
    pub fn left_prim_count(&self) -> u32 {
        self.left_prim_count
    }

    /// Membership over `[0, c + m)`.
    pub fn membership(&self) -> &[bool] {
        &self.membership
    }

    pub fn contains(&self, n: u32) -> bool {
        self.membership.get(n as usize).copied().unwrap_or(true)
    }

    pub fn primitives(&self) -> &[u32] {
        &self.primitives
    }

    pub fn left_primitives(&self) -> &[u32] {
        &self.primitives[..self.left_prim_count as usize]
    }

    pub fn big_primitives(&self) -> &[u32] {
        &self.primitives[self.left_prim_count as usize..]
    }

    /// Elements strictly below the conductor, `0` included.
    pub fn left_elements(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.conductor).filter(move |&n| self.membership[n as usize])
    }

    pub fn gaps(&self) -> impl Iterator<Item = u32> + '_ {
        (1..self.conductor).filter(move |&n| !self.membership[n as usize])
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }

    /// Depth at most one: `N` or some `O_m`.
    pub fn is_superficial(&self) -> bool {
        self.conductor <= self.multiplicity
    }

    pub fn is_leaf(&self) -> bool {
        self.big_primitives().is_empty()
    }

    /// `S \ {p}` for a big primitive `p`.
    pub fn child(&self, p: u32) -> Result<Semigroup> {
        if p < self.conductor || self.primitives.binary_search(&p).is_err() {
            return Err(Error::NotBigPrimitive(p));
        }
        if p == self.multiplicity {
            // Only N and the O_m have their multiplicity as a big primitive.
            return Semigroup::superficial(self.multiplicity + 1);
        }
        let m = self.multiplicity as usize;
        let c = p as usize + 1;
        let mut membership = self.membership.clone();
        membership.resize(c + m, true);
        membership[p as usize] = false;

        let mut primitives: Vec<u32> = self.primitives.iter().copied().filter(|&q| q != p).collect();
        let candidate = p as usize + m;
        if !decomposable(&membership, m, candidate) {
            primitives.push(candidate as u32);
        }
        let left_prim_count = self.primitives.iter().filter(|&&q| q < p).count() as u32;
        Ok(Semigroup {
            multiplicity: self.multiplicity,
            conductor: p + 1,
            genus: self.genus + 1,
            membership,
            primitives,
            left_count: p - self.genus,
            left_prim_count,
        })
    }

    /// Children obtained by removing each big primitive `p >= min_removable`,
    /// in increasing order of `p`. Use `m + 1` to stay inside the tree of
    /// fixed multiplicity and `m` to also follow the edge `O_m -> O_{m+1}`.
    pub fn children(&self, min_removable: u32) -> Vec<Semigroup> {
        self.big_primitives()
            .iter()
            .filter(|&&p| p >= min_removable)
            .map(|&p| self.child(p).expect("big primitive"))
            .collect()
    }

    /// `S ∪ {F(S)}`.
    pub fn parent(&self) -> Result<Semigroup> {
        if self.is_naturals() {
            return Err(Error::IsRoot);
        }
        let mut window = self.membership.clone();
        window[self.conductor as usize - 1] = true;
        Ok(Semigroup::from_window(window))
    }

    /// `|P| * |L| - c`.
    pub fn wilf_number(&self) -> i64 {
        self.edim() as i64 * self.left_count as i64 - self.conductor as i64
    }

    /// `|P ∩ L| * |L| - q * |D_q| + rho`.
    pub fn eliahou_number(&self) -> i64 {
        let inv = self.depth_data();
        self.left_prim_count as i64 * self.left_count as i64 - inv.depth as i64 * inv.dq_count as i64
            + inv.rho as i64
    }

    pub fn invariants(&self) -> InvariantRecord {
        let d = self.depth_data();
        let e = self.edim();
        InvariantRecord {
            wilf: self.wilf_number(),
            eliahou: self.eliahou_number(),
            depth: d.depth,
            density: self.multiplicity.div_ceil(e),
            edim: e,
            rho: d.rho,
            dq_count: d.dq_count,
        }
    }

    fn depth_data(&self) -> DepthData {
        let m = self.multiplicity;
        let c = self.conductor;
        let depth = c.div_ceil(m);
        // Every primitive lies below c + m, so the big ones are exactly the
        // primitives inside the threshold interval [c, c + m).
        let in_threshold = self.big_primitives().iter().filter(|&&p| p < c + m).count() as u32;
        DepthData { depth, rho: depth * m - c, dq_count: m - in_threshold }
    }

    /// `<m, km+1, ..., (k+1)m-1>` for some `k >= 1`.
    pub fn is_quasi_superficial(&self) -> bool {
        let m = self.multiplicity;
        let p = &self.primitives;
        if m == 1 {
            return true;
        }
        if p.len() != m as usize || p[1] % m != 1 {
            return false;
        }
        p.windows(2).skip(1).all(|w| w[1] == w[0] + 1)
    }

    /// Minimal description `<left primitives>_c`. Returns `None` as the
    /// truncation when the left primitives alone generate the semigroup.
    pub fn canonical_description(&self) -> (Vec<u32>, Option<u32>) {
        let gens = self.left_primitives().to_vec();
        if self.is_leaf() && !gens.is_empty() {
            (gens, None)
        } else {
            (gens, Some(self.conductor))
        }
    }
}

struct DepthData {
    depth: u32,
    rho: u32,
    dq_count: u32,
}

/// Whether `n` is a sum of two positive members of the window. Positive
/// members start at `m`.
fn decomposable(window: &[bool], m: usize, n: usize) -> bool {
    let member = |x: usize| window.get(x).copied().unwrap_or(true);
    (m..=n / 2).any(|x| member(x) && member(n - x))
}

/// Closure of a coprime generator set, grown until `min(gens)` consecutive
/// members appear. Returned prefix ends at that run.
fn closure_until_conductor(gens: &[u32]) -> Vec<bool> {
    let m = *gens.iter().min().expect("nonempty") as usize;
    let mut bound = 4 * gens.iter().copied().max().unwrap_or(1) as usize + m;
    loop {
        let window = truncated_closure(gens, bound as u32);
        let bits = window.membership();
        let mut run = 0;
        for (n, &b) in bits.iter().enumerate() {
            run = if b { run + 1 } else { 0 };
            if run == m {
                return bits[..=n].to_vec();
            }
        }
        bound *= 2;
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, p) in self.primitives.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> Semigroup {
        Semigroup::from_generators(gens, None).unwrap()
    }

    /// Brute-force minimal generators from a membership window.
    fn naive_primitives(s: &Semigroup) -> Vec<u32> {
        let lim = s.conductor() + s.multiplicity();
        (1..lim)
            .filter(|&n| s.contains(n))
            .filter(|&n| !(1..n).any(|x| s.contains(x) && s.contains(n - x)))
            .collect()
    }

    #[test]
    fn genus_of_five_generator_example() {
        let s = sg(&[5, 8, 11, 12, 14]);
        assert_eq!(s.genus(), 7);
        assert_eq!(s.conductor(), 10);
        assert_eq!(s.primitives(), &[5, 8, 11, 12, 14]);
        assert_eq!(s.left_elements().collect::<Vec<_>>(), vec![0, 5, 8]);
    }

    #[test]
    fn naturals_from_one() {
        let s = sg(&[1]);
        assert!(s.is_naturals());
        assert_eq!((s.multiplicity(), s.conductor(), s.genus()), (1, 0, 0));
        assert_eq!(s.primitives(), &[1]);
        assert_eq!(s, Semigroup::naturals());
    }

    #[test]
    fn truncated_generators() {
        let s = Semigroup::from_generators(&[14, 22, 23], Some(56)).unwrap();
        assert_eq!(s.conductor(), 56);
        assert_eq!(s.multiplicity(), 14);
        // naive closure of {14,22,23} below 56, gaps counted directly
        let mut member = vec![false; 56];
        for a in 0..5 {
            for b in 0..3 {
                for c in 0..3 {
                    let n = 14 * a + 22 * b + 23 * c;
                    if n < 56 {
                        member[n] = true;
                    }
                }
            }
        }
        let gaps = member.iter().skip(1).filter(|&&b| !b).count() as u32;
        assert_eq!(s.genus(), gaps);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let s = sg(&[6, 4, 9, 10, 8]);
        assert_eq!(s.primitives(), &[4, 6, 9]);
        assert_eq!(s, sg(&[4, 6, 9]));
    }

    #[test]
    fn generator_errors() {
        assert_eq!(Semigroup::from_generators(&[], None), Err(Error::EmptyInput));
        assert!(matches!(Semigroup::from_generators(&[4, 6], None), Err(Error::NotNumerical(_, 2))));
        assert!(Semigroup::from_generators(&[4, 6], Some(9)).is_ok());
        assert!(matches!(Semigroup::from_generators(&[0, 3], None), Err(Error::NonPositive(0))));
    }

    #[test]
    fn children_of_five_generator_example() {
        let s = sg(&[5, 8, 11, 12, 14]);
        let kids = s.children(6);
        assert_eq!(kids.len(), 3);
        // 16 = 8 + 8 stays decomposable
        assert_eq!(kids[0].primitives(), &[5, 8, 12, 14]);
        assert_eq!(kids[0].primitives(), naive_primitives(&kids[0]).as_slice());
        assert_eq!(kids[1], sg(&[5, 8, 11, 14, 17]));
        for k in &kids {
            assert_eq!(k.primitives(), naive_primitives(k).as_slice());
            assert_eq!(k.parent().unwrap(), s);
        }
    }

    #[test]
    fn superficial_edge() {
        let o4 = Semigroup::superficial(4).unwrap();
        let kids = o4.children(4);
        assert_eq!(kids.len(), 4);
        assert_eq!(kids[0], Semigroup::superficial(5).unwrap());
        assert_eq!(o4.children(5).len(), 3);
        assert_eq!(Semigroup::superficial(5).unwrap().parent().unwrap(), o4);
        assert_eq!(Semigroup::naturals().children(1), vec![Semigroup::superficial(2).unwrap()]);
    }

    #[test]
    fn parent_errors() {
        assert_eq!(Semigroup::naturals().parent(), Err(Error::IsRoot));
        let s = sg(&[5, 8, 11, 12, 14]);
        assert_eq!(s.child(8), Err(Error::NotBigPrimitive(8)));
        assert_eq!(s.child(13), Err(Error::NotBigPrimitive(13)));
        let removed = s.child(14).unwrap();
        assert_eq!(removed.parent().unwrap(), s);
    }

    #[test]
    fn wilf_numbers() {
        assert_eq!(Semigroup::naturals().wilf_number(), 0);
        for m in 2..10 {
            let o = Semigroup::superficial(m).unwrap();
            assert_eq!(o.wilf_number(), 0);
            assert_eq!(o.eliahou_number(), 0);
        }
        assert_eq!(sg(&[5, 8, 11, 12, 14]).wilf_number(), 5);
    }

    #[test]
    fn eliahou_number_small_example() {
        // P∩L = {5,8}, L = {0,5,8}, c = 10, q = 2, rho = 0,
        // [10,15) \ P = {10,13} (10 = 5+5, 13 = 5+8).
        let s = sg(&[5, 8, 11, 12, 14]);
        assert_eq!(s.eliahou_number(), 2 * 3 - 2 * 2);
    }

    #[test]
    fn invariant_records() {
        let s = sg(&[7, 11, 37, 38, 41]);
        assert_eq!(s.invariants().depth, 5);
        let n = Semigroup::naturals().invariants();
        assert_eq!((n.depth, n.density, n.wilf, n.eliahou), (0, 1, 0, 0));
        let f = Semigroup::from_generators(&[14, 22, 23], Some(56)).unwrap().invariants();
        assert_eq!((f.depth, f.rho), (4, 0));
        assert_eq!(f.eliahou, -1);
    }

    #[test]
    fn quasi_superficial() {
        assert!(Semigroup::superficial(6).unwrap().is_quasi_superficial());
        let s = sg(&[3, 7, 8]);
        assert!(s.is_quasi_superficial());
        assert_eq!(s.wilf_number(), 0);
        assert!(!sg(&[5, 8, 11, 12, 14]).is_quasi_superficial());
        assert!(sg(&[2, 7]).is_quasi_superficial());
        assert!(!sg(&[3, 7]).is_quasi_superficial());
    }

    #[test]
    fn chain_follows_smallest_big_primitive() {
        for m in 2..9 {
            let mut s = Semigroup::superficial(m).unwrap();
            assert_eq!(Semigroup::chain(m, 0).unwrap(), s);
            for i in 1..3 * m {
                let next = *s.big_primitives().iter().find(|&&p| p > m).unwrap();
                s = s.child(next).unwrap();
                let chain = Semigroup::chain(m, i).unwrap();
                assert_eq!(chain, s, "m={m} i={i}");
                assert_eq!(chain.genus(), m - 1 + i);
                assert_eq!(chain.edim(), m);
                assert_eq!(chain.chain_index(), Some(i));
            }
        }
        assert_eq!(sg(&[5, 8, 11, 12, 14]).chain_index(), None);
    }

    #[test]
    fn from_gaps_validates() {
        assert_eq!(Semigroup::from_gaps(&[1, 2, 3, 4, 6, 7, 9]).unwrap(), sg(&[5, 8, 11, 12, 14]));
        assert_eq!(Semigroup::from_gaps(&[1, 3]).unwrap(), sg(&[2, 5]));
        assert!(Semigroup::from_gaps(&[2]).is_err());
        assert_eq!(Semigroup::from_gaps(&[]).unwrap(), Semigroup::naturals());
    }

    #[test]
    fn canonical_description_round_trips() {
        let s = sg(&[5, 8, 11, 12, 14]);
        assert_eq!(s.canonical_description(), (vec![5, 8], Some(10)));
        let leaf = sg(&[5, 8, 17]);
        assert!(leaf.is_leaf());
        assert_eq!(leaf.canonical_description(), (vec![5, 8, 17], None));
    }
}
