//! Dense indexing of sorted tuples through the combinatorial number system.
//!
//! A sorted tuple `x_0 <= .. <= x_{n-1}` maps to the strictly increasing
//! `c_i = x_i + i`, whose colexicographic rank is `sum C(c_i, i + 1)`.

use crate::error::{Error, Result};
use crate::position::Position;

/// Bijection between sorted `n`-tuples over `0..=bound` and `0..total`.
#[derive(Clone, Debug)]
pub struct RankedIndex {
    n: usize,
    bound: u32,
    total: u64,
    // binom[r * stride + m] = C(m, r), r in 0..=n, m in 0..stride
    binom: Vec<u64>,
    stride: usize,
}

/// `C(m, r)` in u128, or `None` on overflow.
pub fn binomial(m: u64, r: u64) -> Option<u128> {
    if r > m {
        return Some(0);
    }
    let r = r.min(m - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul((m - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Number of sorted `n`-tuples with entries in `0..=bound`.
pub fn tuple_count(n: usize, bound: u32) -> Option<u128> {
    binomial(bound as u64 + n as u64, n as u64)
}

impl RankedIndex {
    pub fn new(n: usize, bound: u32) -> Result<Self> {
        let total = tuple_count(n, bound)
            .and_then(|t| u64::try_from(t).ok())
            .ok_or(Error::BoundTooLarge(bound as u64))?;
        let stride = bound as usize + n + 1;
        let mut binom = vec![0u64; (n + 1) * stride];
        for m in 0..stride {
            binom[m] = 1;
        }
        for r in 1..=n {
            for m in 1..stride {
                binom[r * stride + m] = binom[(r - 1) * stride + m - 1] + binom[r * stride + m - 1];
            }
        }
        Ok(Self {
            n,
            bound,
            total,
            binom,
            stride,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    #[inline]
    fn c(&self, m: usize, r: usize) -> u64 {
        self.binom[r * self.stride + m]
    }

    /// Rank of a sorted slice; the caller guarantees length and bounds.
    #[inline]
    pub(crate) fn rank_unchecked(&self, sorted: &[u32]) -> u64 {
        debug_assert_eq!(sorted.len(), self.n);
        sorted
            .iter()
            .enumerate()
            .map(|(i, &x)| self.c(x as usize + i, i + 1))
            .sum()
    }

    pub fn rank(&self, x: &Position) -> Result<u64> {
        if x.len() != self.n {
            return Err(Error::PileCount {
                expected: self.n,
                got: x.len(),
            });
        }
        if let Some(&p) = x.piles().iter().find(|&&p| p > self.bound) {
            return Err(Error::OutOfBound {
                pile: p,
                bound: self.bound,
            });
        }
        Ok(self.rank_unchecked(x.piles()))
    }

    pub fn unrank(&self, r: u64) -> Result<Position> {
        if r >= self.total {
            return Err(Error::RankOutOfRange {
                rank: r,
                total: self.total,
            });
        }
        let mut piles = [0u32; crate::position::MAX_PILES];
        self.unrank_into(r, &mut piles[..self.n]);
        Ok(Position::from_sorted(&piles[..self.n]))
    }

    pub(crate) fn unrank_into(&self, mut r: u64, out: &mut [u32]) {
        let mut hi = (self.bound as usize + self.n).saturating_sub(1);
        for i in (0..self.n).rev() {
            // largest c in [i, hi] with C(c, i+1) <= r
            let (mut lo, mut top) = (i, hi);
            while lo < top {
                let mid = (lo + top + 1) / 2;
                if self.c(mid, i + 1) <= r {
                    lo = mid;
                } else {
                    top = mid - 1;
                }
            }
            r -= self.c(lo, i + 1);
            out[i] = (lo - i) as u32;
            hi = lo.saturating_sub(1);
        }
    }

    /// Iterates all positions in rank order.
    pub fn iter(&self) -> ColexIter {
        ColexIter {
            bound: self.bound,
            next: Some(Position::zeros(self.n)),
        }
    }

    /// Positions with ranks in `start..end`, in rank order.
    pub fn iter_range(&self, start: u64, end: u64) -> impl Iterator<Item = Position> {
        let end = end.min(self.total);
        let first = (start < end).then(|| self.unrank(start).expect("rank in range"));
        ColexIter {
            bound: self.bound,
            next: first,
        }
        .take((end.saturating_sub(start)) as usize)
    }
}

/// Steps through sorted tuples in colexicographic (= rank) order.
#[derive(Clone, Debug)]
pub struct ColexIter {
    bound: u32,
    next: Option<Position>,
}

impl Iterator for ColexIter {
    type Item = Position;

    fn next(&mut self) -> Option<Position> {
        let cur = self.next?;
        let p = cur.piles();
        let n = p.len();
        // bump the lowest entry that can grow, zero everything below it
        let step = (0..n).find(|&i| {
            let cap = if i + 1 < n { p[i + 1] } else { self.bound };
            p[i] < cap
        });
        self.next = step.map(|i| {
            let mut v = [0u32; crate::position::MAX_PILES];
            v[..n].copy_from_slice(p);
            v[i] += 1;
            v[..i].fill(0);
            Position::from_sorted(&v[..n])
        });
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals() {
        assert_eq!(RankedIndex::new(5, 1).unwrap().total(), 6);
        assert_eq!(RankedIndex::new(5, 85).unwrap().total(), 43_949_268);
        assert_eq!(RankedIndex::new(5, 30).unwrap().total(), 324_632);
        assert_eq!(RankedIndex::new(4, 85).unwrap().total(), 2_441_626);
        assert_eq!(RankedIndex::new(5, 0).unwrap().total(), 1);
    }

    #[test]
    fn least_tuple_is_zero() {
        let idx = RankedIndex::new(5, 10).unwrap();
        assert_eq!(idx.rank(&Position::zeros(5)).unwrap(), 0);
        assert_eq!(idx.unrank(0).unwrap(), Position::zeros(5));
    }

    #[test]
    fn full_round_trip_small() {
        let idx = RankedIndex::new(4, 9).unwrap();
        let mut prev: Option<Position> = None;
        let mut walk = idx.iter();
        for r in 0..idx.total() {
            let p = idx.unrank(r).unwrap();
            assert_eq!(walk.next(), Some(p));
            assert_eq!(idx.rank(&p).unwrap(), r);
            if let Some(q) = prev {
                // colex: compare from the largest entry down
                let a: Vec<_> = q.piles().iter().rev().collect();
                let b: Vec<_> = p.piles().iter().rev().collect();
                assert!(a < b);
            }
            prev = Some(p);
        }
        assert_eq!(walk.next(), None);
        let mid: Vec<_> = idx.iter_range(100, 110).collect();
        assert_eq!(mid[0], idx.unrank(100).unwrap());
        assert_eq!(mid.len(), 10);
    }

    #[test]
    fn errors_on_bad_input() {
        let idx = RankedIndex::new(3, 4).unwrap();
        assert!(matches!(
            idx.rank(&Position::from([1, 2, 5])),
            Err(Error::OutOfBound { pile: 5, bound: 4 })
        ));
        assert!(matches!(idx.unrank(idx.total()), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(idx.rank(&Position::from([1, 2])), Err(Error::PileCount { .. })));
    }
}
