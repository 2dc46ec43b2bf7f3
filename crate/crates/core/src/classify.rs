//! Pair classes and the good/bad, regular/exceptional taxonomy of exact
//! nim(5, =2) positions measured against Moore's nim(4, <=2) on the reduced
//! position.
//!
//! Write `*P` for "reduced position is Moore-P" and `*N` otherwise.
//!
//! | class | quality                                    |
//! |-------|--------------------------------------------|
//! | PP    | good                                       |
//! | NP    | bad                                        |
//! | NN    | good iff some move reaches a `*P` position |
//! | PN    | bad iff some move reaches a `*P` position  |
//!
//! A bad exact-N position is regular iff it has a move to a good exact-P
//! position; a bad exact-P position is regular iff no move reaches a bad
//! exact-N position. Everything else that is bad is exceptional.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::position::Position;
use crate::rules::GameRule;
use crate::solver::{Outcome, PSetIndex, SolveTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PairClass {
    PP,
    PN,
    NP,
    NN,
}

impl PairClass {
    pub const ALL: [PairClass; 4] = [PairClass::PP, PairClass::PN, PairClass::NP, PairClass::NN];

    pub fn new(exact: Outcome, moore: Outcome) -> Self {
        match (exact, moore) {
            (Outcome::P, Outcome::P) => PairClass::PP,
            (Outcome::P, Outcome::N) => PairClass::PN,
            (Outcome::N, Outcome::P) => PairClass::NP,
            (Outcome::N, Outcome::N) => PairClass::NN,
        }
    }

    pub fn exact(self) -> Outcome {
        match self {
            PairClass::PP | PairClass::PN => Outcome::P,
            PairClass::NP | PairClass::NN => Outcome::N,
        }
    }

    pub fn moore(self) -> Outcome {
        match self {
            PairClass::PP | PairClass::NP => Outcome::P,
            PairClass::PN | PairClass::NN => Outcome::N,
        }
    }

    fn code(self) -> u8 {
        self as u8
    }

    fn from_code(c: u8) -> Self {
        Self::ALL[(c & 3) as usize]
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.exact(), self.moore())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quality {
    Good,
    Bad,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regularity {
    Regular,
    Exceptional,
}

impl fmt::Display for Quality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quality::Good => "good",
            Quality::Bad => "bad",
        })
    }
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regularity::Regular => "regular",
            Regularity::Exceptional => "exceptional",
        })
    }
}

// label byte layout
const CLASS_MASK: u8 = 0b11;
const BAD: u8 = 1 << 2;
const EXCEPTIONAL: u8 = 1 << 3;
const TO_STAR_P: u8 = 1 << 4;
const DEADENDER: u8 = 1 << 5;

/// Per-rank labels over the exact(5, =2) table's position space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable {
    bound: u32,
    labels: Vec<u8>,
}

impl ClassTable {
    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> u64 {
        self.labels.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn class_at(&self, rank: u64) -> PairClass {
        PairClass::from_code(self.labels[rank as usize] & CLASS_MASK)
    }

    #[inline]
    pub fn quality_at(&self, rank: u64) -> Quality {
        if self.labels[rank as usize] & BAD != 0 {
            Quality::Bad
        } else {
            Quality::Good
        }
    }

    /// `None` for good positions.
    #[inline]
    pub fn regularity_at(&self, rank: u64) -> Option<Regularity> {
        let l = self.labels[rank as usize];
        match (l & BAD != 0, l & EXCEPTIONAL != 0) {
            (false, _) => None,
            (true, false) => Some(Regularity::Regular),
            (true, true) => Some(Regularity::Exceptional),
        }
    }

    #[inline]
    pub fn is_exceptional_at(&self, rank: u64) -> bool {
        self.labels[rank as usize] & EXCEPTIONAL != 0
    }

    /// Some exact move reaches a position whose reduction is Moore-P.
    #[inline]
    pub fn reaches_star_p_at(&self, rank: u64) -> bool {
        self.labels[rank as usize] & TO_STAR_P != 0
    }

    #[inline]
    pub fn is_deadender_at(&self, rank: u64) -> bool {
        self.labels[rank as usize] & DEADENDER != 0
    }

    pub fn count_exceptional(&self) -> u64 {
        self.labels.iter().filter(|&&l| l & EXCEPTIONAL != 0).count() as u64
    }

    pub fn count_deadenders(&self) -> u64 {
        self.labels.iter().filter(|&&l| l & DEADENDER != 0).count() as u64
    }
}

fn check_tables(exact: &SolveTable, moore: &SolveTable) -> Result<()> {
    if exact.rule() != GameRule::exact(5, 2) {
        return Err(Error::TableMismatch(format!("expected exact(5,=2), got {}", exact.rule())));
    }
    if moore.rule() != GameRule::moore(4, 2) {
        return Err(Error::TableMismatch(format!("expected moore(4,<=2), got {}", moore.rule())));
    }
    if moore.bound() < exact.bound() {
        return Err(Error::TableMismatch(format!(
            "Moore bound {} below exact bound {}",
            moore.bound(),
            exact.bound()
        )));
    }
    Ok(())
}

#[inline]
fn reduced_is_moore_p(moore: &SolveTable, x: &Position) -> bool {
    let p = x.piles();
    moore.is_p_at(moore.rank_unchecked(&p[..p.len() - 1]))
}

pub fn pair_class(exact: &SolveTable, moore: &SolveTable, x: &Position) -> Result<PairClass> {
    check_tables(exact, moore)?;
    let e = exact.outcome(x)?;
    let m = moore.outcome(x.reduce().as_position())?;
    Ok(PairClass::new(e, m))
}

const CHUNK: u64 = 1 << 16;

fn chunks(total: u64) -> Vec<(u64, u64)> {
    (0..total.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(total)))
        .collect()
}

/// Pair class, quality, regularity and deadender flag for every position of
/// the exact table.
pub fn classify(exact: &SolveTable, moore: &SolveTable) -> Result<ClassTable> {
    check_tables(exact, moore)?;
    let rule = exact.rule();
    let bound = exact.bound();
    let idx = exact.index();
    let parts = chunks(idx.total());

    // pass 1: pair classes, and the *P target set
    let mut labels: Vec<u8> = parts
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            idx.iter_range(a, b).enumerate().map(move |(off, x)| {
                let e = exact.outcome_at(a + off as u64);
                let m = if reduced_is_moore_p(moore, &x) { Outcome::P } else { Outcome::N };
                PairClass::new(e, m).code()
            })
        })
        .collect();

    let mut star_p = PSetIndex::new(rule, bound);
    for (r, x) in idx.iter().enumerate() {
        if PairClass::from_code(labels[r]).moore() == Outcome::P {
            star_p.insert(&x, 0);
        }
    }

    // pass 2: quality and deadenders
    let flags: Vec<u8> = parts
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            let labels = &labels;
            let star_p = &star_p;
            idx.iter_range(a, b).enumerate().map(move |(off, x)| {
                let l = labels[(a + off as u64) as usize];
                let class = PairClass::from_code(l);
                let reach = star_p.any_reachable(&x);
                let bad = match class {
                    PairClass::PP => false,
                    PairClass::NP => true,
                    PairClass::NN => !reach,
                    PairClass::PN => reach,
                };
                let mut f = 0;
                if reach {
                    f |= TO_STAR_P;
                }
                if bad {
                    f |= BAD;
                }
                if class.moore() == Outcome::N && !reach {
                    f |= DEADENDER;
                }
                f
            })
        })
        .collect();
    for (l, f) in labels.iter_mut().zip(flags) {
        *l |= f;
    }
    drop(star_p);

    // pass 3: regularity of bad positions
    let mut good_p = PSetIndex::new(rule, bound);
    for (r, x) in idx.iter().enumerate() {
        let l = labels[r];
        if l & BAD == 0 && PairClass::from_code(l).exact() == Outcome::P {
            good_p.insert(&x, 0);
        }
    }
    let exceptional: Vec<u64> = parts
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            let labels = &labels;
            let good_p = &good_p;
            idx.iter_range(a, b).enumerate().filter_map(move |(off, x)| {
                let r = a + off as u64;
                let l = labels[r as usize];
                if l & BAD == 0 {
                    return None;
                }
                let exc = match PairClass::from_code(l).exact() {
                    Outcome::N => !good_p.any_reachable(&x),
                    Outcome::P => {
                        let mut hit = false;
                        rule.for_each_successor(&x, |y| {
                            if !hit {
                                let ly = labels[exact.rank_unchecked(y) as usize];
                                hit = ly & BAD != 0 && PairClass::from_code(ly).exact() == Outcome::N;
                            }
                        });
                        hit
                    }
                };
                exc.then_some(r)
            })
        })
        .collect();
    for r in exceptional {
        labels[r as usize] |= EXCEPTIONAL;
    }
    Ok(ClassTable { bound, labels })
}

/// Positions with a Moore-N reduction from which no exact move reaches a
/// Moore-P reduction.
pub fn deadenders(exact: &SolveTable, classes: &ClassTable) -> Vec<Position> {
    let idx = exact.index();
    idx.iter()
        .enumerate()
        .filter(|(r, _)| classes.is_deadender_at(*r as u64))
        .map(|(_, x)| x)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphNode {
    pub position: Position,
    pub outcome: Outcome,
    pub class: PairClass,
    /// Distinct exceptional successor positions.
    pub out_degree: u32,
    /// Moves (pile pair and amounts) landing on exceptional positions.
    pub move_out_degree: u32,
    pub in_degree: u32,
}

impl GraphNode {
    pub fn is_isolated(&self) -> bool {
        self.out_degree == 0 && self.in_degree == 0
    }
}

/// Exact moves restricted to exceptional positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExceptionalGraph {
    pub nodes: Vec<GraphNode>,
    /// `(from, to)` node indices, one per distinct successor position,
    /// sorted.
    pub edges: Vec<(u32, u32)>,
}

impl ExceptionalGraph {
    pub fn isolated_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_isolated()).count()
    }
}

pub fn exceptional_graph(exact: &SolveTable, classes: &ClassTable) -> ExceptionalGraph {
    let idx = exact.index();
    let rule = exact.rule();
    let members: Vec<(u64, Position)> = idx
        .iter()
        .enumerate()
        .filter(|(r, _)| classes.is_exceptional_at(*r as u64))
        .map(|(r, x)| (r as u64, x))
        .collect();
    let lookup: HashMap<u64, u32> = members
        .iter()
        .enumerate()
        .map(|(i, &(r, _))| (r, i as u32))
        .collect();

    let adjacency: Vec<(BTreeSet<u32>, u32)> = members
        .par_iter()
        .map(|(_, x)| {
            let mut targets = BTreeSet::new();
            let mut moves = 0u32;
            rule.for_each_move(x, |_, _, y| {
                if let Some(&j) = lookup.get(&exact.rank_unchecked(y)) {
                    targets.insert(j);
                    moves += 1;
                }
            });
            (targets, moves)
        })
        .collect();

    let mut nodes: Vec<GraphNode> = members
        .iter()
        .zip(&adjacency)
        .map(|(&(r, x), (t, m))| GraphNode {
            position: x,
            outcome: exact.outcome_at(r),
            class: classes.class_at(r),
            out_degree: t.len() as u32,
            move_out_degree: *m,
            in_degree: 0,
        })
        .collect();
    let mut edges = Vec::new();
    for (i, (t, _)) in adjacency.iter().enumerate() {
        for &j in t {
            edges.push((i as u32, j));
            nodes[j as usize].in_degree += 1;
        }
    }
    ExceptionalGraph { nodes, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve_outcomes, layer_positions};

    fn tables(bound: u32) -> (SolveTable, SolveTable) {
        (
            solve_outcomes(GameRule::exact(5, 2), bound).unwrap(),
            solve_outcomes(GameRule::moore(4, 2), bound).unwrap(),
        )
    }

    #[test]
    fn pair_class_examples() {
        let (e, m) = tables(26);
        let pc = |a: [u32; 5]| pair_class(&e, &m, &Position::from(a)).unwrap();
        assert_eq!(pc([10, 19, 24, 26, 26]), PairClass::PN);
        assert_eq!(pc([9, 19, 24, 25, 26]), PairClass::NN);
        assert_eq!(pc([0, 1, 1, 1, 1]), PairClass::PP);
        assert!(pair_class(&e, &m, &Position::from([0, 0, 0, 0, 27])).is_err());
        assert!(pair_class(&m, &e, &Position::from([0, 0, 0, 0, 1])).is_err());
    }

    #[test]
    fn quality_examples() {
        let (e, m) = tables(6);
        let c = classify(&e, &m).unwrap();
        let r = |a: [u32; 5]| e.rank(&Position::from(a)).unwrap();
        assert_eq!(c.quality_at(r([0, 1, 1, 1, 1])), Quality::Good);
        assert_eq!(c.regularity_at(r([0, 1, 1, 1, 1])), None);
        assert_eq!(c.class_at(r([0, 0, 0, 1, 1])), PairClass::NN);
        assert_eq!(c.quality_at(r([0, 0, 0, 1, 1])), Quality::Good);
        assert!(!c.is_deadender_at(r([0, 0, 0, 1, 1])));
        assert!(!c.is_deadender_at(r([0, 0, 0, 0, 1])));
        assert_eq!(c.class_at(r([0, 0, 0, 0, 2])), PairClass::PP);
        for rank in 0..c.len() {
            if c.class_at(rank) == PairClass::NP {
                assert_eq!(c.quality_at(rank), Quality::Bad);
            }
        }
    }

    /// Recomputes every label by direct successor enumeration.
    #[test]
    fn labels_match_direct_definition() {
        let bound = 12;
        let (e, m) = tables(bound);
        let c = classify(&e, &m).unwrap();
        let rule = GameRule::exact(5, 2);
        let class_of = |x: &Position| pair_class(&e, &m, x).unwrap();
        for s in 0..=5 * bound as u64 {
            for x in layer_positions(5, bound, s) {
                let r = e.rank(&x).unwrap();
                let succ = rule.successors(&x);
                let reach = succ.iter().any(|y| class_of(y).moore() == Outcome::P);
                let class = class_of(&x);
                assert_eq!(c.class_at(r), class);
                let bad = match class {
                    PairClass::PP => false,
                    PairClass::NP => true,
                    PairClass::NN => !reach,
                    PairClass::PN => reach,
                };
                assert_eq!(c.quality_at(r) == Quality::Bad, bad, "{x:?}");
                assert_eq!(c.is_deadender_at(r), class.moore() == Outcome::N && !reach);
                if class == PairClass::PN {
                    assert!(succ.iter().all(|y| class_of(y) != PairClass::PP));
                }
                let q = |y: &Position| c.quality_at(e.rank(y).unwrap());
                let want = if !bad {
                    None
                } else if class.exact() == Outcome::N {
                    let ok = succ.iter().any(|y| class_of(y).exact() == Outcome::P && q(y) == Quality::Good);
                    Some(if ok { Regularity::Regular } else { Regularity::Exceptional })
                } else {
                    let ok = succ.iter().all(|y| q(y) == Quality::Good);
                    Some(if ok { Regularity::Regular } else { Regularity::Exceptional })
                };
                assert_eq!(c.regularity_at(r), want, "{x:?}");
            }
        }
    }

    #[test]
    fn graph_edges_are_legal_moves_between_exceptional_nodes() {
        let (e, m) = tables(20);
        let c = classify(&e, &m).unwrap();
        let g = exceptional_graph(&e, &c);
        assert_eq!(g.nodes.len() as u64, c.count_exceptional());
        let rule = GameRule::exact(5, 2);
        for &(a, b) in &g.edges {
            let (x, y) = (&g.nodes[a as usize], &g.nodes[b as usize]);
            assert!(rule.move_exists_between(&x.position, &y.position));
        }
        for n in &g.nodes {
            assert!(n.move_out_degree >= n.out_degree);
        }
    }
}
