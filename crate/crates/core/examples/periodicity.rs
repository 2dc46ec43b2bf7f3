//! Difference vectors of PN positions with a fixed smallest pile, and their
//! periods.
//!
//! cargo run --release --example periodicity -- 60

use xnim::analysis::{detect_periodicity, SequenceMode};
use xnim::universe::UniverseOptions;
use xnim::Universe;

fn main() -> xnim::Result<()> {
    let bound: u32 = std::env::args().nth(1).map_or(60, |s| s.parse().expect("bound"));
    let opts = UniverseOptions { remoteness: false, ..Default::default() };
    let u = Universe::build(bound, &opts)?;
    for x1 in 0..=bound.min(15) {
        let rep = detect_periodicity(&u, x1, SequenceMode::Lexicographic);
        println!("{rep}");
        if let Some(p) = rep.period.filter(|&p| p <= 12) {
            let pre = rep.preperiod.unwrap();
            println!("  one period: {:?}", &rep.differences[pre..pre + p]);
        }
    }
    Ok(())
}
