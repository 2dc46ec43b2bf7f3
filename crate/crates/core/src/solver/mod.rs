//! Layered backward induction over every position with piles `<= bound`.
//!
//! Moves only remove stones, so every successor of a position lies in a
//! strictly lower stone-total layer. Layers are processed in increasing
//! order; positions inside a layer are independent and evaluated in
//! parallel against the finished lower layers.
//!
//! A position is N iff one move reaches a P-position. Rather than walk all
//! successors, the solver keeps a [`PSetIndex`] of the (sparse) P-positions
//! found so far; absence of any hit proves P.

pub mod index;
pub mod layers;
pub mod oracle;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::position::Position;
use crate::rank::{tuple_count, RankedIndex};
use crate::rules::GameRule;

pub use index::PSetIndex;
pub use layers::layer_positions;
pub use oracle::{brute_force_outcome, brute_force_remoteness, peeling_remoteness, BruteForce};

/// Largest supported pile bound.
pub const MAX_BOUND: u32 = u16::MAX as u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// The previous mover wins.
    P,
    /// The next mover wins.
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Upper limit on table memory, checked before allocating.
    pub memory_budget: u64,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            memory_budget: 3 << 30,
            threads: None,
        }
    }
}

impl SolveOptions {
    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            Some(t) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(t.max(1))
                    .build()
                    .map_err(|e| Error::InvalidRule(e.to_string()))?;
                Ok(pool.install(f))
            }
            None => Ok(f()),
        }
    }
}

/// Outcomes (one bit per rank, set = P) and optional remoteness for every
/// position of one rule within one bound.
#[derive(Clone, Debug)]
pub struct SolveTable {
    rule: GameRule,
    index: RankedIndex,
    outcomes: Vec<u64>,
    remoteness: Option<Vec<u16>>,
}

impl PartialEq for SolveTable {
    fn eq(&self, other: &Self) -> bool {
        self.rule == other.rule
            && self.bound() == other.bound()
            && self.outcomes == other.outcomes
            && self.remoteness == other.remoteness
    }
}

impl Eq for SolveTable {}

impl SolveTable {
    pub(crate) fn from_parts(
        rule: GameRule,
        bound: u32,
        outcomes: Vec<u64>,
        remoteness: Option<Vec<u16>>,
    ) -> Result<Self> {
        let index = RankedIndex::new(rule.n(), bound)?;
        let total = index.total() as usize;
        if outcomes.len() != total.div_ceil(64) {
            return Err(Error::Corrupt("outcome bitmap has wrong length".into()));
        }
        if remoteness.as_ref().is_some_and(|r| r.len() != total) {
            return Err(Error::Corrupt("remoteness array has wrong length".into()));
        }
        Ok(Self {
            rule,
            index,
            outcomes,
            remoteness,
        })
    }

    pub fn rule(&self) -> GameRule {
        self.rule
    }

    pub fn bound(&self) -> u32 {
        self.index.bound()
    }

    pub fn index(&self) -> &RankedIndex {
        &self.index
    }

    /// Number of positions in the table.
    pub fn len(&self) -> u64 {
        self.index.total()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn has_remoteness(&self) -> bool {
        self.remoteness.is_some()
    }

    pub(crate) fn outcome_words(&self) -> &[u64] {
        &self.outcomes
    }

    pub(crate) fn remoteness_slice(&self) -> Option<&[u16]> {
        self.remoteness.as_deref()
    }

    #[inline]
    pub fn is_p_at(&self, rank: u64) -> bool {
        self.outcomes[(rank / 64) as usize] >> (rank % 64) & 1 == 1
    }

    pub fn outcome_at(&self, rank: u64) -> Outcome {
        if self.is_p_at(rank) {
            Outcome::P
        } else {
            Outcome::N
        }
    }

    pub fn rank(&self, x: &Position) -> Result<u64> {
        self.index.rank(x)
    }

    #[inline]
    pub(crate) fn rank_unchecked(&self, sorted: &[u32]) -> u64 {
        self.index.rank_unchecked(sorted)
    }

    pub fn outcome(&self, x: &Position) -> Result<Outcome> {
        Ok(self.outcome_at(self.rank(x)?))
    }

    pub fn remoteness_at(&self, rank: u64) -> Option<u16> {
        self.remoteness.as_ref().map(|r| r[rank as usize])
    }

    pub fn remoteness(&self, x: &Position) -> Result<u16> {
        let r = self.rank(x)?;
        self.remoteness_at(r).ok_or(Error::MissingRemoteness)
    }

    /// Number of P-positions.
    pub fn p_count(&self) -> u64 {
        self.outcomes.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// All P-positions in rank order.
    pub fn p_positions(&self) -> Vec<Position> {
        let mut out = Vec::new();
        for (w, &word) in self.outcomes.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let r = w as u64 * 64 + bits.trailing_zeros() as u64;
                out.push(self.index.unrank(r).expect("set bit is in range"));
                bits &= bits - 1;
            }
        }
        out
    }
}

fn check_budget(rule: GameRule, bound: u32, with_remoteness: bool, opts: &SolveOptions) -> Result<()> {
    if bound > MAX_BOUND {
        return Err(Error::BoundTooLarge(bound as u64));
    }
    let total = tuple_count(rule.n(), bound).ok_or(Error::BoundTooLarge(bound as u64))?;
    let mut needed = total.div_ceil(8);
    if with_remoteness {
        needed += total * 2;
    }
    for j in rule.arities() {
        let keys = tuple_count(rule.n() - j, bound).ok_or(Error::BoundTooLarge(bound as u64))?;
        needed += keys * std::mem::size_of::<Vec<u8>>() as u128;
    }
    if needed > opts.memory_budget as u128 {
        return Err(Error::Resource {
            needed,
            budget: opts.memory_budget as u128,
        });
    }
    Ok(())
}

fn max_layer(rule: GameRule, bound: u32) -> u64 {
    rule.n() as u64 * bound as u64
}

/// P/N for every position of `rule` with piles `<= bound`.
pub fn solve_outcomes(rule: GameRule, bound: u32) -> Result<SolveTable> {
    solve_outcomes_with(rule, bound, &SolveOptions::default())
}

pub fn solve_outcomes_with(rule: GameRule, bound: u32, opts: &SolveOptions) -> Result<SolveTable> {
    check_budget(rule, bound, false, opts)?;
    let index = RankedIndex::new(rule.n(), bound)?;
    let mut outcomes = vec![0u64; (index.total() as usize).div_ceil(64)];
    let mut pset = PSetIndex::new(rule, bound);
    opts.run(|| {
        for s in 0..=max_layer(rule, bound) {
            let layer = layer_positions(rule.n(), bound, s);
            let is_p: Vec<bool> = layer.par_iter().map(|x| !pset.any_reachable(x)).collect();
            for (x, p) in layer.iter().zip(is_p) {
                if p {
                    let r = index.rank_unchecked(x.piles());
                    outcomes[(r / 64) as usize] |= 1 << (r % 64);
                    pset.insert(x, 0);
                }
            }
        }
    })?;
    Ok(SolveTable {
        rule,
        index,
        outcomes,
        remoteness: None,
    })
}

/// Fills in remoteness: 0 at terminals, `1 + min` over P successors for N,
/// `1 + max` over all successors for P.
pub fn solve_remoteness(table: SolveTable) -> Result<SolveTable> {
    solve_remoteness_with(table, &SolveOptions::default())
}

pub fn solve_remoteness_with(mut table: SolveTable, opts: &SolveOptions) -> Result<SolveTable> {
    let rule = table.rule;
    let bound = table.bound();
    check_budget(rule, bound, true, opts)?;
    let mut rem = vec![0u16; table.len() as usize];
    let mut pset = PSetIndex::new(rule, bound);
    let t = &table;
    opts.run(|| -> Result<()> {
        for s in 0..=max_layer(rule, bound) {
            let layer = layer_positions(rule.n(), bound, s);
            let rem_ref = &rem;
            let pset_ref = &pset;
            let vals: Vec<Result<u16>> = layer
                .par_iter()
                .map(|x| {
                    let r = t.rank_unchecked(x.piles());
                    let below = if t.is_p_at(r) {
                        let mut worst: Option<u16> = None;
                        rule.for_each_successor(x, |y| {
                            let ry = rem_ref[t.rank_unchecked(y) as usize];
                            worst = Some(worst.map_or(ry, |w| w.max(ry)));
                        });
                        worst
                    } else {
                        Some(pset_ref.min_reachable(x).ok_or_else(|| {
                            Error::TableMismatch(format!("N-position {x:?} has no P successor"))
                        })?)
                    };
                    match below {
                        None => Ok(0),
                        Some(v) if v < u16::MAX - 1 => Ok(v + 1),
                        Some(_) => Err(Error::RemotenessOverflow(format!("{x:?}"))),
                    }
                })
                .collect();
            for (x, v) in layer.iter().zip(vals) {
                let v = v?;
                let r = t.rank_unchecked(x.piles());
                rem[r as usize] = v;
                if t.is_p_at(r) {
                    pset.insert(x, v);
                }
            }
        }
        Ok(())
    })??;
    table.remoteness = Some(rem);
    Ok(table)
}

/// Outcomes and remoteness in one call.
pub fn solve_full(rule: GameRule, bound: u32, opts: &SolveOptions) -> Result<SolveTable> {
    check_budget(rule, bound, true, opts)?;
    let t = solve_outcomes_with(rule, bound, opts)?;
    solve_remoteness_with(t, opts)
}

/// The engine's move: from N the P successor of least remoteness, from P the
/// successor of greatest remoteness. Ties keep the first successor in
/// generation order.
pub fn best_move(table: &SolveTable, x: &Position) -> Result<Position> {
    let rank = table.rank(x)?;
    if table.rule.is_terminal(x) {
        return Err(Error::Terminal);
    }
    if !table.has_remoteness() {
        return Err(Error::MissingRemoteness);
    }
    let scored: Vec<(Position, bool, u16)> = table
        .rule
        .successors(x)
        .into_iter()
        .map(|y| {
            let r = table.rank_unchecked(y.piles());
            (y, table.is_p_at(r), table.remoteness_at(r).unwrap())
        })
        .collect();
    let pick = if table.is_p_at(rank) {
        scored
            .iter()
            .fold(None::<&(Position, bool, u16)>, |best, c| match best {
                Some(b) if b.2 >= c.2 => Some(b),
                _ => Some(c),
            })
    } else {
        scored.iter().filter(|c| c.1).min_by_key(|c| c.2)
    };
    pick.map(|c| c.0)
        .ok_or_else(|| Error::TableMismatch(format!("no move found from {x:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact52(bound: u32) -> SolveTable {
        solve_full(GameRule::exact(5, 2), bound, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn small_exact_values() {
        let t = exact52(6);
        let o = |a: [u32; 5]| t.outcome(&Position::from(a)).unwrap();
        let r = |a: [u32; 5]| t.remoteness(&Position::from(a)).unwrap();
        assert_eq!(o([0, 0, 0, 0, 0]), Outcome::P);
        assert_eq!(o([0, 0, 0, 1, 1]), Outcome::N);
        assert_eq!(o([0, 1, 1, 1, 1]), Outcome::P);
        assert_eq!(r([0, 0, 0, 0, 6]), 0);
        assert_eq!(r([0, 0, 0, 1, 1]), 1);
        assert_eq!(r([0, 1, 1, 1, 1]), 2);
    }

    #[test]
    fn best_move_examples() {
        let t = exact52(4);
        let bm = |a: [u32; 5]| best_move(&t, &Position::from(a)).unwrap();
        assert_eq!(bm([0, 0, 0, 1, 1]), Position::zeros(5));
        assert_eq!(bm([0, 1, 2, 3, 4]), Position::from([0, 1, 1, 1, 4]));
        assert!(matches!(best_move(&t, &Position::zeros(5)), Err(Error::Terminal)));

        let nim = solve_full(GameRule::nim(2), 3, &SolveOptions::default()).unwrap();
        assert_eq!(best_move(&nim, &Position::from([2, 3])).unwrap(), Position::from([2, 2]));
    }

    #[test]
    fn zero_bound_is_single_p() {
        let t = solve_outcomes(GameRule::exact(5, 2), 0).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.outcome_at(0), Outcome::P);
    }

    #[test]
    fn budget_is_checked_before_allocation() {
        let opts = SolveOptions {
            memory_budget: 1 << 10,
            threads: None,
        };
        assert!(matches!(
            solve_outcomes_with(GameRule::exact(5, 2), 40, &opts),
            Err(Error::Resource { .. })
        ));
        assert!(matches!(
            solve_outcomes(GameRule::exact(5, 2), MAX_BOUND + 1),
            Err(Error::BoundTooLarge(_))
        ));
    }

    #[test]
    fn best_move_needs_remoteness() {
        let t = solve_outcomes(GameRule::exact(5, 2), 3).unwrap();
        assert!(matches!(
            best_move(&t, &Position::from([0, 0, 0, 1, 1])),
            Err(Error::MissingRemoteness)
        ));
    }
}
