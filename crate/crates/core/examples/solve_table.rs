//! Solve exact nim(5, =2) up to a pile bound and summarise the table.
//!
//! cargo run --release --example solve_table -- 30

use xnim::solver::{solve_full, SolveOptions};
use xnim::GameRule;

fn main() -> xnim::Result<()> {
    let bound: u32 = std::env::args().nth(1).map_or(20, |s| s.parse().expect("bound"));
    let rule = GameRule::exact(5, 2);
    let table = solve_full(rule, bound, &SolveOptions::default())?;

    println!("{rule}, piles <= {bound}");
    println!("positions   {}", table.len());
    println!("P-positions {}", table.p_count());

    let (rank, rem) = (0..table.len())
        .map(|r| (r, table.remoteness_at(r).unwrap()))
        .max_by_key(|&(r, rem)| (rem, std::cmp::Reverse(r)))
        .unwrap();
    let longest = table.index().unrank(rank)?;
    println!("longest game from {longest}: {rem} moves");

    println!("first P-positions with a nonempty smallest pile:");
    for x in table.p_positions().iter().filter(|x| x.piles()[0] > 0).take(8) {
        println!("  {x}  remoteness {}", table.remoteness(x)?);
    }
    Ok(())
}
