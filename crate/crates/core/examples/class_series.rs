//! PP/PN/NP/NN counts per number of stones, written as CSV to stdout.
//!
//! cargo run --release --example class_series -- 40 > series.csv

use xnim::analysis::{check_nonmonotonicity, check_pn_share, class_counts};
use xnim::persist::write_csv_series;
use xnim::universe::UniverseOptions;
use xnim::Universe;

fn main() -> xnim::Result<()> {
    let bound: u32 = std::env::args().nth(1).map_or(30, |s| s.parse().expect("bound"));
    let opts = UniverseOptions { remoteness: false, ..Default::default() };
    let u = Universe::build(bound, &opts)?;
    let series = class_counts(&u);

    write_csv_series(&series, &mut std::io::stdout().lock())?;

    eprintln!("{}", check_pn_share(&series).summary());
    eprintln!("|PN|/(|PN|+|PP|) = {:.4}", series.pn_share_of_p());
    eprintln!("{}", check_nonmonotonicity("pp/pn", bound, &series.pp_pn_series()).summary());
    eprintln!("{}", check_nonmonotonicity("mixed", bound, &series.mixed_series()).summary());
    Ok(())
}
