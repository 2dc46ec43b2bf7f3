//! Reference solvers that share no code with the table solver: plain
//! memoized recursion over the game tree, and the level-by-level peeling
//! construction of remoteness.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::Outcome;
use crate::error::{Error, Result};
use crate::position::Position;
use crate::rules::GameRule;

/// Largest total stone count the recursive oracle accepts.
pub const BRUTE_FORCE_GUARD: u64 = 60;

/// Every position reachable in one move, by subset bitmask and direct
/// enumeration of the new pile values.
fn naive_successors(rule: &GameRule, piles: &[u32]) -> BTreeSet<Vec<u32>> {
    let n = piles.len();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if !rule.arities().contains(&size) {
            continue;
        }
        let chosen: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if chosen.iter().any(|&i| piles[i] == 0) {
            continue;
        }
        let mut cur = piles.to_vec();
        expand(&chosen, 0, piles, &mut cur, &mut out);
    }
    out
}

fn expand(
    chosen: &[usize],
    at: usize,
    orig: &[u32],
    cur: &mut Vec<u32>,
    out: &mut BTreeSet<Vec<u32>>,
) {
    if at == chosen.len() {
        let mut s = cur.clone();
        s.sort_unstable();
        out.insert(s);
        return;
    }
    let i = chosen[at];
    for v in 0..orig[i] {
        cur[i] = v;
        expand(chosen, at + 1, orig, cur, out);
    }
    cur[i] = orig[i];
}

/// Memoized recursive solver for one rule.
#[derive(Debug)]
pub struct BruteForce {
    rule: GameRule,
    memo: HashMap<Vec<u32>, (Outcome, u32)>,
}

impl BruteForce {
    pub fn new(rule: GameRule) -> Self {
        Self {
            rule,
            memo: HashMap::new(),
        }
    }

    fn guard(&self, x: &Position) -> Result<Vec<u32>> {
        if x.len() != self.rule.n() {
            return Err(Error::PileCount {
                expected: self.rule.n(),
                got: x.len(),
            });
        }
        if x.total() > BRUTE_FORCE_GUARD {
            return Err(Error::GuardExceeded {
                total: x.total(),
                guard: BRUTE_FORCE_GUARD,
            });
        }
        let mut v = x.piles().to_vec();
        v.sort_unstable();
        Ok(v)
    }

    pub fn outcome(&mut self, x: &Position) -> Result<Outcome> {
        let v = self.guard(x)?;
        Ok(self.eval(v).0)
    }

    pub fn remoteness(&mut self, x: &Position) -> Result<u32> {
        let v = self.guard(x)?;
        Ok(self.eval(v).1)
    }

    fn eval(&mut self, piles: Vec<u32>) -> (Outcome, u32) {
        if let Some(&hit) = self.memo.get(&piles) {
            return hit;
        }
        let succ = naive_successors(&self.rule, &piles);
        let vals: Vec<(Outcome, u32)> = succ.into_iter().map(|s| self.eval(s)).collect();
        let res = if vals.is_empty() {
            (Outcome::P, 0)
        } else if let Some(r) = vals
            .iter()
            .filter(|(o, _)| *o == Outcome::P)
            .map(|&(_, r)| r)
            .min()
        {
            (Outcome::N, r + 1)
        } else {
            (Outcome::P, vals.iter().map(|&(_, r)| r).max().unwrap() + 1)
        };
        self.memo.insert(piles, res);
        res
    }
}

pub fn brute_force_outcome(rule: GameRule, x: &Position) -> Result<Outcome> {
    BruteForce::new(rule).outcome(x)
}

pub fn brute_force_remoteness(rule: GameRule, x: &Position) -> Result<u32> {
    BruteForce::new(rule).remoteness(x)
}

fn all_sorted_tuples(n: usize, bound: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, lo: u32, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in lo..=bound {
            cur.push(v);
            rec(n, v, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, bound, &mut Vec::new(), &mut out);
    out
}

/// Remoteness by repeated peeling of the game graph on `0..=bound`: at level
/// `s` the sinks of what remains get `s`, positions with a move into those
/// sinks get `s + 1`, both groups are removed, and `s` advances by 2.
pub fn peeling_remoteness(rule: GameRule, bound: u32) -> HashMap<Position, u32> {
    let nodes = all_sorted_tuples(rule.n(), bound);
    let succ: HashMap<Vec<u32>, Vec<Vec<u32>>> = nodes
        .iter()
        .map(|x| (x.clone(), naive_successors(&rule, x).into_iter().collect()))
        .collect();
    let mut remaining: HashSet<Vec<u32>> = nodes.iter().cloned().collect();
    let mut out = HashMap::new();
    let mut s = 0u32;
    while !remaining.is_empty() {
        let sinks: HashSet<Vec<u32>> = remaining
            .iter()
            .filter(|x| succ[*x].iter().all(|y| !remaining.contains(y)))
            .cloned()
            .collect();
        assert!(!sinks.is_empty(), "finite acyclic graph always has a sink");
        let next: Vec<Vec<u32>> = remaining
            .iter()
            .filter(|x| !sinks.contains(*x) && succ[*x].iter().any(|y| sinks.contains(y)))
            .cloned()
            .collect();
        for x in &sinks {
            out.insert(Position::canonical(x), s);
            remaining.remove(x);
        }
        for x in &next {
            out.insert(Position::canonical(x), s + 1);
            remaining.remove(x);
        }
        s += 2;
    }
    out
}
