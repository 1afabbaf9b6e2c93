//! Truncated monoid generation and bounded conductor/genus tests.
//!
//! All questions are answered from a window `[0, B)` of the monoid generated
//! by a set of positive integers. A generator set with gcd other than 1 needs
//! no special handling: its windows never contain `m` consecutive members,
//! so the bounded tests simply come out false.

/// Membership of `<gens>` restricted to `[0, bound)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureWindow {
    bound: u32,
    membership: Vec<bool>,
}

impl ClosureWindow {
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn membership(&self) -> &[bool] {
        &self.membership
    }

    pub fn contains(&self, n: u32) -> bool {
        self.membership.get(n as usize).copied().unwrap_or(false)
    }

    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.bound).filter(move |&n| self.membership[n as usize])
    }
}

/// Fixed-length bitset over `[0, len)`, used for the shift-or closure.
struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    fn new(len: usize) -> Self {
        Bits { words: vec![0; len.div_ceil(64)], len }
    }

    fn get(&self, n: usize) -> bool {
        n < self.len && self.words[n / 64] >> (n % 64) & 1 == 1
    }

    fn set(&mut self, n: usize) {
        self.words[n / 64] |= 1 << (n % 64);
    }

    /// `self |= self << shift`, truncated to `len`.
    fn or_shifted(&mut self, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        for i in (ws..self.words.len()).rev() {
            let lo = self.words[i - ws] << bs;
            let hi = if bs > 0 && i > ws { self.words[i - ws - 1] >> (64 - bs) } else { 0 };
            self.words[i] |= lo | hi;
        }
        let tail = self.len % 64;
        if tail != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << tail) - 1;
        }
    }

    fn all_in(&self, lo: usize, hi: usize) -> bool {
        (lo..hi).all(|n| self.get(n))
    }
}

/// Closure of `gens` in `[0, bound)`. For each generator `g` the shifts by
/// `g, 2g, 4g, ...` make the set closed under adding `g`.
fn closure_bits(gens: &[u32], bound: usize) -> Bits {
    let mut bits = Bits::new(bound);
    if bound == 0 {
        return bits;
    }
    bits.set(0);
    for &g in gens {
        let mut shift = g as usize;
        while shift > 0 && shift < bound {
            bits.or_shifted(shift);
            shift *= 2;
        }
    }
    bits
}

/// `<gens> ∩ [0, bound)`, in `O(bound * |gens|)`.
pub fn truncated_closure(gens: &[u32], bound: u32) -> ClosureWindow {
    let bits = closure_bits(gens, bound as usize);
    ClosureWindow { bound, membership: (0..bound as usize).map(|n| bits.get(n)).collect() }
}

fn min_gen(gens: &[u32]) -> usize {
    gens.iter().copied().min().expect("nonempty generator set") as usize
}

/// Whether `c(<gens>) <= k`: true iff `[k, k + m)` lies inside the closure,
/// where `m = min(gens)`.
pub fn bounded_conductor_leq(gens: &[u32], k: u32) -> bool {
    let m = min_gen(gens);
    let k = k as usize;
    closure_bits(gens, k + m).all_in(k, k + m)
}

/// The conductor of `<gens>` when it is at most `k`, read from the window
/// `[0, k + m)`.
pub fn conductor_if_leq(gens: &[u32], k: u32) -> Option<u32> {
    let m = min_gen(gens);
    let k = k as usize;
    let bits = closure_bits(gens, k + m);
    if !bits.all_in(k, k + m) {
        return None;
    }
    Some((0..k).rev().find(|&n| !bits.get(n)).map_or(0, |f| f + 1) as u32)
}

/// Whether `genus(<gens>) <= g`, decided from the window `[0, 2g + m)`.
pub fn bounded_genus_leq(gens: &[u32], g: u32) -> bool {
    let m = min_gen(gens);
    let bound = 2 * g as usize + m;
    let bits = closure_bits(gens, bound);
    (1..bound).filter(|&n| !bits.get(n)).take(g as usize + 1).count() <= g as usize
}

/// Generic test `c(<gens>) <= 3m` by short factorizations: every integer of
/// `[3m, 4m)` must be a sum of at most four generators.
pub fn generic_by_short_sums(gens: &[u32]) -> bool {
    let m = min_gen(gens);
    let bound = 4 * m;
    let mut reach = vec![false; bound];
    reach[0] = true;
    for _ in 0..4 {
        let prev = reach.clone();
        for (n, _) in prev.iter().enumerate().filter(|(_, &b)| b) {
            for &g in gens {
                if let Some(slot) = reach.get_mut(n + g as usize) {
                    *slot = true;
                }
            }
        }
    }
    reach[3 * m..].iter().all(|&b| b)
}
