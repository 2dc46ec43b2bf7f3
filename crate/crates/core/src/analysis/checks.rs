use rayon::prelude::*;
use serde_json::json;

use super::columns::{column_relation, padded_permutation, ColumnRelation};
use super::CheckReport;
use crate::classify::{ExceptionalGraph, PairClass};
use crate::error::{Error, Result};
use crate::position::Position;
use crate::rank::RankedIndex;
use crate::rules::{bouton_is_p, moore_is_p, moore_winning_move, thm10_is_p, Family, GameRule};
use crate::solver::{Outcome, SolveTable};
use crate::universe::Universe;

fn reduced_moore_p(u: &Universe, piles: &[u32]) -> bool {
    let m = u.moore();
    m.is_p_at(m.rank_unchecked(&piles[..piles.len() - 1]))
}

/// Over every position whose reduction has all columns balanced (sums 0 or
/// 3): NP iff ξ₃ of the reduced matrix exceeds the largest pile, PP
/// otherwise. Also checks the Moore table against the balance criterion.
pub fn check_obs8_and_conjecture(u: &Universe) -> CheckReport {
    let mut rep = CheckReport::new("obs8", u.bound());
    let (mut scanned, mut balanced, mut np, mut pp) = (0u64, 0u64, 0u64, 0u64);
    for (r, x) in u.positions() {
        scanned += 1;
        let class = u.class_at(r);
        let mv = x.reduce().as_position().moore_vector();
        let is_balanced = mv.all_divisible_by(3);
        if is_balanced != (class.moore() == Outcome::P) {
            rep.fail(json!({
                "position": x,
                "class": class.to_string(),
                "reason": "Moore table disagrees with the balance criterion",
            }));
            continue;
        }
        if !is_balanced {
            continue;
        }
        balanced += 1;
        let xi3 = mv.xi(3);
        let predicted = if xi3 > x.leader() as u64 { PairClass::NP } else { PairClass::PP };
        match class {
            PairClass::NP => np += 1,
            _ => pp += 1,
        }
        if class != predicted {
            rep.fail(json!({
                "position": x,
                "class": class.to_string(),
                "predicted": predicted.to_string(),
                "xi3": xi3,
            }));
        }
    }
    rep.stat("scanned", scanned);
    rep.stat("star_p", balanced);
    rep.stat("np", np);
    rep.stat("pp", pp);
    rep
}

/// No exact move leads from a `*P` position to a `*P` position. Violations
/// are split by whether the largest pile changes. Successors are enumerated
/// directly and compared with the flag stored by the classifier.
pub fn check_no_pp_moves(u: &Universe) -> CheckReport {
    let mut rep = CheckReport::new("lemma11", u.bound());
    let rule = u.exact().rule();
    let star_p: Vec<(u64, Position)> = u
        .positions()
        .filter(|(r, _)| u.class_at(*r).moore() == Outcome::P)
        .collect();
    let found: Vec<(Vec<(Position, bool)>, bool)> = star_p
        .par_iter()
        .map(|(r, x)| {
            let mut hits = Vec::new();
            rule.for_each_successor(x, |y| {
                if reduced_moore_p(u, y) {
                    let y = Position::canonical(y);
                    hits.push((y, y.leader() != x.leader()));
                }
            });
            let flag_ok = u.classes().reaches_star_p_at(*r) == !hits.is_empty();
            (hits, flag_ok)
        })
        .collect();
    let (mut changing, mut preserving) = (0u64, 0u64);
    for ((_, x), (hits, flag_ok)) in star_p.iter().zip(found) {
        if !flag_ok {
            rep.fail(json!({"position": x, "reason": "classifier flag disagrees"}));
        }
        for (y, leader_changed) in hits {
            if leader_changed {
                changing += 1;
            } else {
                preserving += 1;
            }
            rep.fail(json!({"from": x, "to": y, "leader_changed": leader_changed}));
        }
    }
    rep.stat("scanned", u.len());
    rep.stat("star_p", star_p.len() as u64);
    rep.stat("leader_changing", changing);
    rep.stat("leader_preserving", preserving);
    rep
}

/// From every position of class `source`, no exact move yields a reduced
/// matrix that is a nontrivial column permutation of the original one.
pub fn check_obs5_column_permutation(u: &Universe, source: PairClass) -> CheckReport {
    let mut rep = CheckReport::new(format!("obs5[{source}]"), u.bound());
    let rule = u.exact().rule();
    let sources: Vec<Position> = u
        .positions()
        .filter(|(r, _)| u.class_at(*r) == source)
        .map(|(_, x)| x)
        .collect();
    let results: Vec<(u64, Vec<(Position, u32)>)> = sources
        .par_iter()
        .map(|x| {
            let xr = x.reduce().into_position();
            let mut pairs = 0u64;
            let mut hits = Vec::new();
            for y in rule.successors(x) {
                pairs += 1;
                if let Some(moved) = padded_permutation(&xr, y.reduce().as_position()) {
                    hits.push((y, moved));
                }
            }
            (pairs, hits)
        })
        .collect();
    let mut pairs = 0u64;
    for (x, (n, hits)) in sources.iter().zip(results) {
        pairs += n;
        for (y, moved) in hits {
            rep.fail(json!({"from": x, "to": y, "moved_columns": moved}));
        }
    }
    rep.stat("scanned", u.len());
    rep.stat("sources", sources.len() as u64);
    rep.stat("moves_examined", pairs);
    rep
}

#[derive(Clone, Copy)]
enum Relation {
    Permutation(Option<u32>),
    ZeroColumn(Option<u32>),
}

struct PropItem {
    name: &'static str,
    a: [u32; 5],
    class_a: PairClass,
    b: [u32; 5],
    class_b: PairClass,
    relation: Relation,
    move_exists: bool,
}

const PROPS: [PropItem; 7] = [
    PropItem {
        name: "prop3",
        a: [10, 19, 24, 26, 26],
        class_a: PairClass::PN,
        b: [9, 19, 24, 25, 26],
        class_b: PairClass::NN,
        relation: Relation::Permutation(Some(2)),
        move_exists: true,
    },
    PropItem {
        name: "prop4",
        a: [14, 16, 25, 25, 25],
        class_a: PairClass::PN,
        b: [7, 8, 25, 25, 25],
        class_b: PairClass::NN,
        relation: Relation::Permutation(Some(3)),
        move_exists: true,
    },
    PropItem {
        name: "prop5",
        a: [12, 17, 20, 21, 21],
        class_a: PairClass::PN,
        b: [12, 18, 20, 22, 22],
        class_b: PairClass::PN,
        relation: Relation::Permutation(Some(2)),
        move_exists: false,
    },
    PropItem {
        name: "prop6",
        a: [6, 9, 10, 11, 11],
        class_a: PairClass::PN,
        b: [12, 17, 20, 21, 21],
        class_b: PairClass::PN,
        relation: Relation::ZeroColumn(None),
        move_exists: false,
    },
    PropItem {
        name: "prop7",
        a: [12, 17, 20, 21, 21],
        class_a: PairClass::PN,
        b: [10, 17, 18, 19, 30],
        class_b: PairClass::NN,
        relation: Relation::Permutation(None),
        move_exists: false,
    },
    // The second position has more stones in four piles, so no move joins
    // them; the pair is related by doubling the reduced rows.
    PropItem {
        name: "prop8",
        a: [6, 9, 10, 11, 59],
        class_a: PairClass::NN,
        b: [12, 18, 20, 22, 22],
        class_b: PairClass::PN,
        relation: Relation::ZeroColumn(Some(0)),
        move_exists: false,
    },
    PropItem {
        name: "prop9",
        a: [20, 33, 36, 37, 37],
        class_a: PairClass::PN,
        b: [40, 66, 72, 74, 74],
        class_b: PairClass::PN,
        relation: Relation::ZeroColumn(Some(0)),
        move_exists: false,
    },
];

/// Smallest bound at which every labelled item can be checked.
pub const PROPOSITION_BOUND: u32 = 74;

fn item_bound(p: &PropItem) -> u32 {
    p.a.iter().chain(&p.b).copied().max().unwrap_or(0)
}

/// Named class-pair items that do not fit in `bound`, with the bound each needs.
pub fn missing_proposition_items(bound: u32) -> Vec<String> {
    PROPS
        .iter()
        .filter(|p| item_bound(p) > bound)
        .map(|p| format!("{} (needs bound {})", p.name, item_bound(p)))
        .collect()
}

/// Checks the class labels, moves and column relations of the named
/// example positions. Errors if the universe is too small for any item.
pub fn verify_propositions(u: &Universe) -> Result<CheckReport> {
    let missing = missing_proposition_items(u.bound());
    if !missing.is_empty() {
        return Err(Error::InsufficientBound { bound: u.bound(), missing });
    }
    let mut rep = CheckReport::new("props", u.bound());
    let rule = u.exact().rule();
    let mut labels = std::collections::BTreeSet::new();
    for p in &PROPS {
        let a = Position::from(p.a);
        let b = Position::from(p.b);
        for (x, want) in [(a, p.class_a), (b, p.class_b)] {
            labels.insert(x);
            let got = u.class(&x)?;
            if got != want {
                rep.fail(json!({
                    "item": p.name,
                    "position": x,
                    "expected": want.to_string(),
                    "got": got.to_string(),
                }));
            }
        }
        let moves = rule.move_exists_between(&a, &b);
        if moves != p.move_exists {
            rep.fail(json!({"item": p.name, "move_exists": moves, "expected": p.move_exists}));
        }
        let rel = column_relation(a.reduce().as_position(), b.reduce().as_position());
        let ok = match (p.relation, rel) {
            (Relation::Permutation(want), ColumnRelation::Permutation { moved }) => {
                want.map_or(true, |w| w == moved)
            }
            (Relation::ZeroColumn(want), ColumnRelation::ZeroColumnInserted { at }) => {
                want.map_or(true, |w| w == at)
            }
            _ => false,
        };
        if !ok {
            rep.fail(json!({"item": p.name, "relation": format!("{rel:?}")}));
        }
        rep.stat(&format!("{}_relation", p.name), format!("{rel:?}"));
    }
    rep.stat("items", PROPS.len() as u64);
    rep.stat("labels", labels.len() as u64);
    Ok(rep)
}

/// Every exceptional N-position is NP, and its out-degree in the
/// exceptional graph is a multiple of 3 under distinct-successor counting
/// or, failing that, under move counting. Both results are reported.
pub fn check_exceptional_observations(graph: &ExceptionalGraph, bound: u32) -> CheckReport {
    let mut rep = CheckReport::new("obs67", bound);
    let n_nodes: Vec<_> = graph.nodes.iter().filter(|n| n.outcome == Outcome::N).collect();
    let mut obs7 = true;
    for n in &n_nodes {
        if n.class != PairClass::NP {
            obs7 = false;
            rep.fail(json!({"position": n.position, "class": n.class.to_string()}));
        }
    }
    let distinct = n_nodes.iter().all(|n| n.out_degree % 3 == 0);
    let moves = n_nodes.iter().all(|n| n.move_out_degree % 3 == 0);
    if !distinct && !moves {
        for n in n_nodes.iter().filter(|n| n.out_degree % 3 != 0) {
            rep.fail(json!({"position": n.position, "out_degree": n.out_degree}));
        }
    }
    let semantics: Vec<&str> = [(distinct, "distinct_successors"), (moves, "moves")]
        .iter()
        .filter(|(ok, _)| *ok)
        .map(|&(_, s)| s)
        .collect();
    let degrees: Vec<_> = n_nodes
        .iter()
        .map(|n| json!([n.position, n.out_degree, n.move_out_degree]))
        .collect();
    rep.stat("nodes", graph.nodes.len() as u64);
    rep.stat("edges", graph.edges.len() as u64);
    rep.stat("isolated", graph.isolated_count() as u64);
    rep.stat("n_nodes", n_nodes.len() as u64);
    rep.stat("obs7_holds", obs7);
    rep.stat("obs6_distinct_holds", distinct);
    rep.stat("obs6_moves_holds", moves);
    rep.stat("obs6_semantics", semantics);
    rep.stat("degrees", degrees);
    rep
}

fn closed_form_check(
    name: &str,
    table: &SolveTable,
    expect: Family,
    mut predict: impl FnMut(&Position) -> Option<bool>,
) -> Result<CheckReport> {
    if table.rule().family() != expect {
        return Err(Error::TableMismatch(format!("{name} needs a {expect} table")));
    }
    let mut rep = CheckReport::new(name, table.bound());
    let mut compared = 0u64;
    for (r, x) in table.index().iter().enumerate() {
        let Some(p) = predict(&x) else { continue };
        compared += 1;
        if p != table.is_p_at(r as u64) {
            rep.fail(json!({"position": x, "table": table.outcome_at(r as u64), "predicted_p": p}));
        }
    }
    rep.stat("scanned", table.len());
    rep.stat("compared", compared);
    Ok(rep)
}

/// Table outcomes equal the XOR criterion.
pub fn check_bouton_table(table: &SolveTable) -> Result<CheckReport> {
    closed_form_check("bouton", table, Family::Nim, |x| Some(bouton_is_p(x)))
}

/// Table outcomes equal the column-sum criterion.
pub fn check_moore_table(table: &SolveTable) -> Result<CheckReport> {
    let k = table.rule().k();
    closed_form_check("moore", table, Family::Moore, |x| Some(moore_is_p(x, k)))
}

/// exact(5,=2) positions with an empty pile follow the equal-centre rule.
pub fn check_thm10(table: &SolveTable) -> Result<CheckReport> {
    if table.rule() != GameRule::exact(5, 2) {
        return Err(Error::TableMismatch("thm10 needs an exact(5,=2) table".into()));
    }
    closed_form_check("thm10", table, Family::Exact, |x| thm10_is_p(x).ok())
}

/// For every Moore(n, <=k) N-position with piles up to `bound`, the
/// constructive move is legal and lands on a criterion-P position.
pub fn check_winning_moves(n: usize, k: usize, bound: u32) -> Result<CheckReport> {
    let rule = GameRule::new(Family::Moore, n, k)?;
    let idx = RankedIndex::new(n, bound)?;
    let mut rep = CheckReport::new(format!("winning_move[{rule}]"), bound);
    let mut n_positions = 0u64;
    for x in idx.iter() {
        if moore_is_p(&x, k) {
            continue;
        }
        n_positions += 1;
        let y = moore_winning_move(&x, k)?;
        if !rule.move_exists_between(&x, &y) || !moore_is_p(&y, k) {
            rep.fail(json!({"from": x, "to": y}));
        }
    }
    rep.stat("scanned", idx.total());
    rep.stat("n_positions", n_positions);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::exceptional_graph;
    use crate::solver::solve_outcomes;
    use crate::universe::UniverseOptions;

    fn universe(bound: u32) -> Universe {
        Universe::build(bound, &UniverseOptions { remoteness: false, ..Default::default() })
            .unwrap()
    }

    #[test]
    fn obs8_examples() {
        let u = universe(14);
        let x = Position::from([3, 5, 6, 7, 7]);
        let mv = x.reduce().as_position().moore_vector();
        assert!(mv.all_divisible_by(3));
        assert_eq!(mv.xi(3), 7);
        assert_eq!(u.class(&x).unwrap(), PairClass::PP);
        let y = Position::from([7, 11, 13, 14, 14]);
        assert_eq!(y.reduce().as_position().moore_vector().xi(3), 15);
        assert_eq!(u.class(&y).unwrap(), PairClass::NP);
        let rep = check_obs8_and_conjecture(&u);
        assert!(rep.passed, "{:?}", rep.counterexamples);
        assert_eq!(rep.stat_u64("scanned"), u.len());
    }

    #[test]
    fn no_pp_moves_small() {
        let u = universe(12);
        let rep = check_no_pp_moves(&u);
        assert!(rep.passed, "{:?}", rep.counterexamples);
        assert_eq!(rep.stat_u64("scanned"), u.len());
        // every successor of (3,5,6,7,7) has an unbalanced reduction
        let rule = GameRule::exact(5, 2);
        for y in rule.successors(&Position::from([3, 5, 6, 7, 7])) {
            assert!(!moore_is_p(y.reduce().as_position(), 2));
        }
    }

    #[test]
    fn obs5_flags_pn_control() {
        let u = universe(26);
        assert!(check_obs5_column_permutation(&u, PairClass::NP).passed);
        let rep = check_obs5_column_permutation(&u, PairClass::PN);
        let control = json!({
            "from": Position::from([10, 19, 24, 26, 26]),
            "to": Position::from([9, 19, 24, 25, 26]),
            "moved_columns": 2,
        });
        assert!(rep.counterexamples.contains(&control));
    }

    #[test]
    fn props_need_bound() {
        match verify_propositions(&universe(30)) {
            Err(Error::InsufficientBound { missing, .. }) => {
                assert_eq!(missing.len(), 2);
                assert!(missing[0].starts_with("prop8"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_graph_passes() {
        let rep = check_exceptional_observations(&ExceptionalGraph::default(), 0);
        assert!(rep.passed);
        let u = universe(16);
        let g = exceptional_graph(u.exact(), u.classes());
        assert!(check_exceptional_observations(&g, 16).passed);
    }

    #[test]
    fn closed_forms_small() {
        assert!(check_bouton_table(&solve_outcomes(GameRule::nim(3), 10).unwrap()).unwrap().passed);
        assert!(check_moore_table(&solve_outcomes(GameRule::moore(4, 2), 8).unwrap()).unwrap().passed);
        let e = solve_outcomes(GameRule::exact(5, 2), 10).unwrap();
        let rep = check_thm10(&e).unwrap();
        assert!(rep.passed);
        assert!(rep.stat_u64("compared") < rep.stat_u64("scanned"));
        assert!(check_bouton_table(&e).is_err());
        assert!(check_winning_moves(4, 2, 6).unwrap().passed);
    }
}
