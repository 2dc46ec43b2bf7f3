//! Runs every checker that fits in the given bound.
//!
//! cargo run --release --example verify_observations -- 40

use xnim::analysis::{self, PROPOSITION_BOUND};
use xnim::classify::{exceptional_graph, PairClass};
use xnim::universe::UniverseOptions;
use xnim::Universe;

fn main() -> xnim::Result<()> {
    let bound: u32 = std::env::args().nth(1).map_or(30, |s| s.parse().expect("bound"));
    let opts = UniverseOptions { remoteness: false, ..Default::default() };
    let u = Universe::build(bound, &opts)?;
    let g = exceptional_graph(u.exact(), u.classes());

    let mut reports = vec![
        analysis::check_thm10(u.exact())?,
        analysis::check_no_pp_moves(&u),
        analysis::check_obs8_and_conjecture(&u),
        analysis::check_obs5_column_permutation(&u, PairClass::NP),
        analysis::check_exceptional_observations(&g, bound),
    ];
    if bound >= PROPOSITION_BOUND {
        reports.push(analysis::verify_propositions(&u)?);
    } else {
        println!("propositions skipped, need bound {PROPOSITION_BOUND}");
    }
    for r in &reports {
        println!("{}", r.summary());
    }
    // the zero-column permutation absent from NP sources does occur from PN
    let pn = analysis::check_obs5_column_permutation(&u, PairClass::PN);
    println!("from PN sources: {} permuting moves", pn.stat_u64("counterexample_count"));
    Ok(())
}
