//! Sparse index over a set of target positions, answering "does `x` have a
//! move into the set" without enumerating the successors of `x`.
//!
//! A target `y` is stored once per way of splitting it into an untouched
//! sub-multiset `U` (the key) and `j` reduced values `T`. A query from `x`
//! picks `j` piles `S` to reduce, looks up `U = x \ S`, and accepts any entry
//! whose sorted `T` sits strictly below the sorted `S` componentwise.

use crate::position::{Position, MAX_PILES};
use crate::rank::RankedIndex;
use crate::rules::{for_each_value_distinct_combination, GameRule};

#[derive(Clone, Copy, Debug)]
struct Entry {
    remoteness: u16,
    vals: [u16; MAX_PILES],
}

#[derive(Debug)]
struct ArityIndex {
    arity: usize,
    keys: RankedIndex,
    buckets: Vec<Vec<Entry>>,
}

/// Index of target positions keyed by every sub-multiset a move can leave
/// untouched.
#[derive(Debug)]
pub struct PSetIndex {
    rule: GameRule,
    parts: Vec<ArityIndex>,
    len: usize,
}

impl PSetIndex {
    pub fn new(rule: GameRule, bound: u32) -> Self {
        let n = rule.n();
        let parts = rule
            .arities()
            .map(|arity| {
                let keys = RankedIndex::new(n - arity, bound).expect("key space fits");
                let buckets = vec![Vec::new(); keys.total() as usize];
                ArityIndex {
                    arity,
                    keys,
                    buckets,
                }
            })
            .collect();
        Self {
            rule,
            parts,
            len: 0,
        }
    }

    /// Number of target positions inserted.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Adds a target; buckets stay ordered by remoteness.
    pub fn insert(&mut self, y: &Position, remoteness: u16) {
        let piles = y.piles();
        let mut sel = [0usize; MAX_PILES];
        let mut key = [0u32; MAX_PILES];
        for part in &mut self.parts {
            let j = part.arity;
            for_each_value_distinct_combination(piles, j, &mut sel, &mut |chosen| {
                let mut entry = Entry {
                    remoteness,
                    vals: [0; MAX_PILES],
                };
                let (mut kl, mut s) = (0, 0);
                for (i, &p) in piles.iter().enumerate() {
                    if s < chosen.len() && chosen[s] == i {
                        entry.vals[s] = p as u16;
                        s += 1;
                    } else {
                        key[kl] = p;
                        kl += 1;
                    }
                }
                let bucket = &mut part.buckets[part.keys.rank_unchecked(&key[..kl]) as usize];
                let at = bucket.partition_point(|e| e.remoteness <= remoteness);
                bucket.insert(at, entry);
            });
        }
        self.len += 1;
    }

    /// Smallest remoteness among targets reachable from `x` in one move.
    pub fn min_reachable(&self, x: &Position) -> Option<u16> {
        let mut best: Option<u16> = None;
        self.scan(x, |r| {
            best = Some(best.map_or(r, |b| b.min(r)));
            // entries are remoteness-ordered, so the first hit per bucket is its minimum
            true
        });
        best
    }

    /// Whether some target is reachable from `x` in one move.
    pub fn any_reachable(&self, x: &Position) -> bool {
        let mut hit = false;
        self.scan(x, |_| {
            hit = true;
            false
        });
        hit
    }

    /// Calls `on_hit` with the remoteness of the first matching entry in each
    /// probed bucket; stops everything once `on_hit` returns false.
    fn scan(&self, x: &Position, mut on_hit: impl FnMut(u16) -> bool) {
        debug_assert_eq!(x.len(), self.rule.n());
        let piles = x.piles();
        let mut sel = [0usize; MAX_PILES];
        let mut key = [0u32; MAX_PILES];
        let mut go = true;
        for part in &self.parts {
            let j = part.arity;
            for_each_value_distinct_combination(piles, j, &mut sel, &mut |chosen| {
                if !go {
                    return;
                }
                let mut reduced = [0u16; MAX_PILES];
                let (mut kl, mut s) = (0, 0);
                for (i, &p) in piles.iter().enumerate() {
                    if s < chosen.len() && chosen[s] == i {
                        reduced[s] = p as u16;
                        s += 1;
                    } else {
                        key[kl] = p;
                        kl += 1;
                    }
                }
                if reduced[0] == 0 {
                    return;
                }
                let bucket = &part.buckets[part.keys.rank_unchecked(&key[..kl]) as usize];
                if let Some(e) = bucket
                    .iter()
                    .find(|e| (0..j).all(|m| e.vals[m] < reduced[m]))
                {
                    go = on_hit(e.remoteness);
                }
            });
            if !go {
                return;
            }
        }
    }
}
