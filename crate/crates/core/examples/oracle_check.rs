//! Cross-checks the layered solver against the brute-force recursive oracle
//! on every small position.

use xnim::solver::oracle::BruteForce;
use xnim::solver::{solve_full, SolveOptions};
use xnim::GameRule;

fn main() -> xnim::Result<()> {
    for (rule, max_total) in [(GameRule::exact(5, 2), 16u64), (GameRule::moore(4, 2), 12)] {
        let table = solve_full(rule, max_total as u32, &SolveOptions::default())?;
        let mut oracle = BruteForce::new(rule);
        let mut checked = 0;
        for x in table.index().iter().filter(|x| x.total() <= max_total) {
            assert_eq!(oracle.outcome(&x)?, table.outcome(&x)?, "{x}");
            assert_eq!(oracle.remoteness(&x)? as u16, table.remoteness(&x)?, "{x}");
            checked += 1;
        }
        println!("{rule}: {checked} positions agree");
    }
    Ok(())
}
