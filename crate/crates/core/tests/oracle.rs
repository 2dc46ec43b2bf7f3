use xnim::solver::oracle::{peeling_remoteness, BruteForce, BRUTE_FORCE_GUARD};
use xnim::solver::{solve_full, SolveOptions};
use xnim::{Error, GameRule, Position};

fn agree(rule: GameRule, bound: u32) {
    let t = solve_full(rule, bound, &SolveOptions::default()).unwrap();
    let mut oracle = BruteForce::new(rule);
    for x in t.index().iter() {
        assert_eq!(oracle.outcome(&x).unwrap(), t.outcome(&x).unwrap(), "{rule} {x}");
        assert_eq!(
            oracle.remoteness(&x).unwrap(),
            t.remoteness(&x).unwrap() as u32,
            "{rule} {x}"
        );
    }
}

#[test]
fn other_games_match_oracle() {
    agree(GameRule::nim(3), 10);
    agree(GameRule::nim(4), 6);
    agree(GameRule::moore(3, 2), 7);
    agree(GameRule::moore(5, 3), 4);
    agree(GameRule::exact(4, 2), 7);
    agree(GameRule::exact(5, 3), 5);
    agree(GameRule::exact(3, 3), 8);
}

#[test]
fn peeling_matches_table_on_other_games() {
    for (rule, bound) in [(GameRule::moore(4, 2), 6), (GameRule::exact(4, 2), 7), (GameRule::nim(3), 7)] {
        let t = solve_full(rule, bound, &SolveOptions::default()).unwrap();
        let peeled = peeling_remoteness(rule, bound);
        assert_eq!(peeled.len() as u64, t.len());
        for (x, r) in peeled {
            assert_eq!(t.remoteness(&x).unwrap() as u32, r, "{rule} {x}");
        }
    }
}

#[test]
fn oracle_refuses_large_positions() {
    let mut o = BruteForce::new(GameRule::exact(5, 2));
    let big = Position::from([20, 20, 20, 20, 20]);
    assert!(big.total() > BRUTE_FORCE_GUARD);
    assert!(matches!(o.outcome(&big), Err(Error::GuardExceeded { .. })));
}
