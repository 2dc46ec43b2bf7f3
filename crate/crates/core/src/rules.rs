//! Move semantics of nim, Moore's nim and exact nim, plus the closed-form
//! P-position criteria that are known for them.

use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::position::{bit_length, column_sums_mod_zero, Position, MAX_PILES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Reduce exactly one pile.
    Nim,
    /// Reduce between 1 and `k` piles.
    Moore,
    /// Reduce exactly `k` piles.
    Exact,
}

impl Family {
    pub fn code(self) -> u8 {
        match self {
            Family::Nim => 0,
            Family::Moore => 1,
            Family::Exact => 2,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        match code {
            0 => Some(Family::Nim),
            1 => Some(Family::Moore),
            2 => Some(Family::Exact),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Nim => "nim",
            Family::Moore => "moore",
            Family::Exact => "exact",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameRule {
    family: Family,
    n: u8,
    k: u8,
}

impl GameRule {
    pub fn new(family: Family, n: usize, k: usize) -> Result<Self> {
        if n == 0 || n > MAX_PILES {
            return Err(Error::InvalidRule(format!("pile count {n} not in 1..={MAX_PILES}")));
        }
        if k == 0 || k > n {
            return Err(Error::InvalidRule(format!("k = {k} must satisfy 0 < k <= n = {n}")));
        }
        if family == Family::Nim && k != 1 {
            return Err(Error::InvalidRule("nim always has k = 1".into()));
        }
        Ok(Self {
            family,
            n: n as u8,
            k: k as u8,
        })
    }

    pub fn nim(n: usize) -> Self {
        Self::new(Family::Nim, n, 1).expect("valid nim rule")
    }

    pub fn moore(n: usize, k: usize) -> Self {
        Self::new(Family::Moore, n, k).expect("valid Moore rule")
    }

    pub fn exact(n: usize, k: usize) -> Self {
        Self::new(Family::Exact, n, k).expect("valid exact rule")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    /// How many piles a single move may reduce.
    pub fn arities(&self) -> RangeInclusive<usize> {
        match self.family {
            Family::Nim => 1..=1,
            Family::Moore => 1..=self.k(),
            Family::Exact => self.k()..=self.k(),
        }
    }

    pub fn is_terminal(&self, x: &Position) -> bool {
        let live = x.nonempty_piles();
        match self.family {
            Family::Exact => live < self.k(),
            Family::Nim | Family::Moore => live == 0,
        }
    }

    /// Distinct successors of `x` as canonical positions, in generation order.
    pub fn successors(&self, x: &Position) -> Vec<Position> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        self.for_each_successor(x, |s| {
            let p = Position::from_sorted(s);
            if seen.insert(p) {
                out.push(p);
            }
        });
        out
    }

    /// Visits every successor tuple (sorted) produced by every legal move.
    ///
    /// Moves that differ only by which of several equal piles they touch are
    /// visited once; moves that lead to the same multiset by different
    /// reductions are visited once each.
    pub fn for_each_successor(&self, x: &Position, mut visit: impl FnMut(&[u32])) {
        let piles = x.piles();
        let n = piles.len();
        let mut chosen = [0usize; MAX_PILES];
        let mut newv = [0u32; MAX_PILES];
        let mut buf = [0u32; MAX_PILES];
        for j in self.arities() {
            for_each_value_distinct_combination(piles, j, &mut chosen, &mut |sel| {
                if sel.iter().any(|&i| piles[i] == 0) {
                    return;
                }
                // odometer over new values, taking the most stones first
                newv[..j].fill(0);
                loop {
                    let mut len = 0;
                    let mut s = 0;
                    for (i, &p) in piles.iter().enumerate() {
                        if s < j && sel[s] == i {
                            s += 1;
                        } else {
                            buf[len] = p;
                            len += 1;
                        }
                    }
                    for &v in &newv[..j] {
                        insert_sorted(&mut buf, len, v);
                        len += 1;
                    }
                    debug_assert_eq!(len, n);
                    visit(&buf[..n]);

                    let mut d = 0;
                    loop {
                        if d == j {
                            return;
                        }
                        newv[d] += 1;
                        if newv[d] < piles[sel[d]] {
                            break;
                        }
                        newv[d] = 0;
                        d += 1;
                    }
                }
            });
        }
    }

    /// Visits every legal move as `(chosen pile indices, new values, successor)`.
    /// Unlike [`Self::for_each_successor`], moves on different but equal piles
    /// are reported separately.
    pub fn for_each_move(&self, x: &Position, mut visit: impl FnMut(&[usize], &[u32], &[u32])) {
        let piles = x.piles();
        let n = piles.len();
        let mut chosen = [0usize; MAX_PILES];
        let mut newv = [0u32; MAX_PILES];
        let mut buf = [0u32; MAX_PILES];
        for j in self.arities() {
            for_each_combination(n, j, &mut chosen, &mut |sel| {
                if sel.iter().any(|&i| piles[i] == 0) {
                    return;
                }
                newv[..j].fill(0);
                loop {
                    buf[..n].copy_from_slice(piles);
                    for (s, &i) in sel.iter().enumerate() {
                        buf[i] = newv[s];
                    }
                    let mut sorted = buf;
                    sorted[..n].sort_unstable();
                    visit(sel, &newv[..j], &sorted[..n]);
                    let mut d = 0;
                    loop {
                        if d == j {
                            return;
                        }
                        newv[d] += 1;
                        if newv[d] < piles[sel[d]] {
                            break;
                        }
                        newv[d] = 0;
                        d += 1;
                    }
                }
            });
        }
    }

    /// Whether `y` is reachable from `x` in one move.
    pub fn move_exists_between(&self, x: &Position, y: &Position) -> bool {
        if x.len() != y.len() || x.len() != self.n() {
            return false;
        }
        let xp = x.piles();
        let yp = y.piles();
        let mut chosen = [0usize; MAX_PILES];
        let mut found = false;
        for j in self.arities() {
            for_each_value_distinct_combination(xp, j, &mut chosen, &mut |sel| {
                if found {
                    return;
                }
                let mut untouched = Vec::with_capacity(xp.len());
                let mut removed = Vec::with_capacity(j);
                let mut s = 0;
                for (i, &p) in xp.iter().enumerate() {
                    if s < sel.len() && sel[s] == i {
                        removed.push(p);
                        s += 1;
                    } else {
                        untouched.push(p);
                    }
                }
                if let Some(rest) = multiset_difference(yp, &untouched) {
                    // both sorted: the sorted pairing is feasible iff any pairing is
                    if rest.iter().zip(&removed).all(|(r, o)| r < o) {
                        found = true;
                    }
                }
            });
        }
        found
    }
}

impl fmt::Display for GameRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Nim => write!(f, "nim({})", self.n),
            Family::Moore => write!(f, "moore({},<={})", self.n, self.k),
            Family::Exact => write!(f, "exact({},={})", self.n, self.k),
        }
    }
}

#[inline]
fn insert_sorted(buf: &mut [u32], len: usize, v: u32) {
    let mut i = len;
    while i > 0 && buf[i - 1] > v {
        buf[i] = buf[i - 1];
        i -= 1;
    }
    buf[i] = v;
}

/// Lexicographic `j`-subsets of `0..n`.
pub(crate) fn for_each_combination(
    n: usize,
    j: usize,
    idx: &mut [usize; MAX_PILES],
    f: &mut impl FnMut(&[usize]),
) {
    if j > n {
        return;
    }
    for (i, v) in idx.iter_mut().enumerate().take(j) {
        *v = i;
    }
    loop {
        f(&idx[..j]);
        let Some(i) = (0..j).rev().find(|&i| idx[i] < n - j + i) else {
            return;
        };
        idx[i] += 1;
        for t in i + 1..j {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Like [`for_each_combination`] over a sorted slice, but skips subsets whose
/// chosen values repeat an earlier subset's values.
pub(crate) fn for_each_value_distinct_combination(
    sorted: &[u32],
    j: usize,
    idx: &mut [usize; MAX_PILES],
    f: &mut impl FnMut(&[usize]),
) {
    for_each_combination(sorted.len(), j, idx, &mut |sel| {
        // canonical representative: among equal values pick the leftmost run
        let canonical = sel.iter().enumerate().all(|(s, &i)| {
            i == 0 || sorted[i - 1] != sorted[i] || (s > 0 && sel[s - 1] == i - 1)
        });
        if canonical {
            f(sel);
        }
    });
}

/// `a \ b` as sorted multisets, or `None` if `b` is not contained in `a`.
fn multiset_difference(a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for &v in a {
        if j < b.len() && b[j] == v {
            j += 1;
        } else if j < b.len() && b[j] < v {
            return None;
        } else {
            out.push(v);
        }
    }
    (j == b.len()).then_some(out)
}

/// Bouton: P iff the piles XOR to zero.
pub fn bouton_is_p(x: &Position) -> bool {
    x.piles().iter().fold(0, |a, &p| a ^ p) == 0
}

/// Moore: P iff every bit column sums to a multiple of `k + 1`.
pub fn moore_is_p(x: &Position, k: usize) -> bool {
    column_sums_mod_zero(x.piles(), k as u32 + 1)
}

/// A winning Moore(<= k) move, built by balancing columns from the highest
/// unbalanced one downwards.
///
/// Rows already decreased ("changed") may take any lower bits; an unchanged
/// row may only drop a one, which then marks it changed. At most `k` rows
/// change. Ties go to the lowest row index.
pub fn moore_winning_move(x: &Position, k: usize) -> Result<Position> {
    if moore_is_p(x, k) {
        return Err(Error::NoWinningMove);
    }
    let modulus = k + 1;
    let mut rows: Vec<u32> = x.piles().to_vec();
    let mut changed = vec![false; rows.len()];
    let width = rows.iter().copied().map(bit_length).max().unwrap_or(1);
    let col_sum = |rows: &[u32], c: u32| rows.iter().filter(|&&r| (r >> c) & 1 == 1).count();
    let top = (0..width)
        .rev()
        .find(|&c| col_sum(&rows, c) % modulus != 0)
        .expect("an unbalanced column exists");

    for c in (0..=top).rev() {
        let bit = 1u32 << c;
        let a = col_sum(&rows, c) % modulus;
        if a == 0 {
            continue;
        }
        let t = changed.iter().filter(|&&ch| ch).count();
        let u = (0..rows.len())
            .filter(|&i| changed[i] && rows[i] & bit != 0)
            .count();
        if a <= u {
            let mut left = a;
            for i in 0..rows.len() {
                if left > 0 && changed[i] && rows[i] & bit != 0 {
                    rows[i] &= !bit;
                    left -= 1;
                }
            }
        } else if t + a - u <= k {
            for i in 0..rows.len() {
                if changed[i] {
                    rows[i] &= !bit;
                }
            }
            let mut extra = a - u;
            for i in 0..rows.len() {
                if extra > 0 && !changed[i] && rows[i] & bit != 0 {
                    rows[i] &= !bit;
                    changed[i] = true;
                    extra -= 1;
                }
            }
            debug_assert_eq!(extra, 0);
        } else {
            let mut raise = modulus - a;
            for i in 0..rows.len() {
                if raise > 0 && changed[i] && rows[i] & bit == 0 {
                    rows[i] |= bit;
                    raise -= 1;
                }
            }
            debug_assert_eq!(raise, 0);
        }
    }
    debug_assert!(changed.iter().filter(|&&c| c).count() <= k);
    Ok(Position::canonical(&rows))
}

/// Closed form for exact(5,=2) positions with an empty pile: P iff the
/// three central piles are equal.
pub fn thm10_is_p(x: &Position) -> Result<bool> {
    if x.len() != 5 {
        return Err(Error::PileCount {
            expected: 5,
            got: x.len(),
        });
    }
    let p = x.piles();
    if p[0] != 0 {
        return Err(Error::ClosedFormDomain);
    }
    Ok(p[1] == p[2] && p[2] == p[3])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos<const N: usize>(a: [u32; N]) -> Position {
        Position::from(a)
    }

    #[test]
    fn terminal_rules() {
        let e = GameRule::exact(5, 2);
        assert!(e.is_terminal(&pos([0, 0, 0, 0, 7])));
        assert!(!e.is_terminal(&pos([0, 0, 0, 1, 1])));
        assert!(GameRule::moore(4, 2).is_terminal(&Position::zeros(4)));
        assert!(!GameRule::moore(4, 2).is_terminal(&pos([0, 0, 0, 1])));
    }

    #[test]
    fn exact_successor_examples() {
        let e = GameRule::exact(5, 2);
        assert_eq!(e.successors(&pos([0, 0, 0, 1, 1])), vec![Position::zeros(5)]);
        let mut s = e.successors(&pos([0, 0, 0, 2, 2]));
        s.sort();
        assert_eq!(
            s,
            vec![pos([0, 0, 0, 0, 0]), pos([0, 0, 0, 0, 1]), pos([0, 0, 0, 1, 1])]
        );
        let s = e.successors(&pos([10, 19, 24, 26, 26]));
        assert!(s.contains(&pos([9, 19, 24, 25, 26])));
    }

    #[test]
    fn successors_are_distinct_and_sorted() {
        let m = GameRule::moore(4, 2);
        let x = pos([2, 2, 3, 3]);
        let s = m.successors(&x);
        let set: HashSet<_> = s.iter().collect();
        assert_eq!(set.len(), s.len());
        for y in &s {
            assert!(y.piles().windows(2).all(|w| w[0] <= w[1]));
            assert!(y.total() < x.total());
            assert!(m.move_exists_between(&x, y));
        }
    }

    #[test]
    fn move_existence() {
        let e = GameRule::exact(5, 2);
        assert!(e.move_exists_between(&pos([10, 19, 24, 26, 26]), &pos([9, 19, 24, 25, 26])));
        assert!(e.move_exists_between(&pos([14, 16, 25, 25, 25]), &pos([7, 8, 25, 25, 25])));
        assert!(!e.move_exists_between(&pos([0, 0, 0, 1, 1]), &pos([0, 0, 0, 0, 1])));
        assert!(!e.move_exists_between(&pos([6, 9, 10, 11, 59]), &pos([12, 18, 20, 22, 22])));
    }

    #[test]
    fn move_existence_matches_successor_set() {
        let e = GameRule::exact(5, 2);
        let m = GameRule::moore(4, 2);
        for (rule, x) in [(e, pos([1, 2, 2, 3, 4])), (m, pos([1, 2, 3, 3]))] {
            let succ: HashSet<_> = rule.successors(&x).into_iter().collect();
            let idx = crate::rank::RankedIndex::new(rule.n(), x.leader()).unwrap();
            for y in idx.iter() {
                assert_eq!(rule.move_exists_between(&x, &y), succ.contains(&y), "{x:?} -> {y:?}");
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert!(bouton_is_p(&pos([0, 0, 0])));
        assert!(bouton_is_p(&pos([5, 5])));
        assert!(bouton_is_p(&pos([1, 2, 3])));
        assert!(moore_is_p(&Position::zeros(4), 2));
        assert!(moore_is_p(&pos([3, 5, 6, 7]), 2));
        assert!(!moore_is_p(&pos([10, 19, 24, 26]), 2));
        assert!(thm10_is_p(&pos([0, 3, 3, 3, 7])).unwrap());
        assert!(thm10_is_p(&pos([0, 0, 0, 0, 9])).unwrap());
        assert!(!thm10_is_p(&pos([0, 1, 2, 3, 4])).unwrap());
        assert!(matches!(thm10_is_p(&pos([1, 1, 1, 1, 1])), Err(Error::ClosedFormDomain)));
    }

    #[test]
    fn winning_move_examples() {
        assert_eq!(moore_winning_move(&pos([1, 1, 1, 1]), 2).unwrap(), pos([0, 1, 1, 1]));
        assert_eq!(moore_winning_move(&pos([0, 0, 1]), 1).unwrap(), pos([0, 0, 0]));
        let x = pos([1, 2, 3, 4]);
        let y = moore_winning_move(&x, 2).unwrap();
        assert!(moore_is_p(&y, 2));
        assert!(GameRule::moore(4, 2).move_exists_between(&x, &y));
        assert!(matches!(
            moore_winning_move(&pos([3, 5, 6, 7]), 2),
            Err(Error::NoWinningMove)
        ));
    }

    #[test]
    fn rule_validation() {
        assert!(GameRule::new(Family::Exact, 5, 0).is_err());
        assert!(GameRule::new(Family::Exact, 5, 6).is_err());
        assert!(GameRule::new(Family::Nim, 3, 2).is_err());
        assert!(GameRule::new(Family::Moore, 9, 2).is_err());
    }
}
