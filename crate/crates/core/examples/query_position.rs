//! Everything the classified universe knows about a few positions.
//!
//! cargo run --release --example query_position -- 10,19,24,26,26

use xnim::solver::best_move;
use xnim::universe::UniverseOptions;
use xnim::{Position, Universe};

fn main() -> xnim::Result<()> {
    let positions: Vec<Position> = match std::env::args().nth(1) {
        Some(s) => vec![s.parse().expect("comma separated piles")],
        None => vec![
            Position::from([10, 19, 24, 26, 26]),
            Position::from([9, 19, 24, 25, 26]),
            Position::from([7, 11, 13, 14, 14]),
            Position::from([0, 3, 3, 3, 7]),
        ],
    };
    let bound = positions.iter().map(Position::leader).max().unwrap();
    let u = Universe::build(bound, &UniverseOptions::default())?;

    for x in positions {
        let i = u.info(&x)?;
        print!(
            "{x:<16} {} quality={} remoteness={:?}/{:?}",
            i.class,
            i.quality,
            i.remoteness.unwrap(),
            i.remoteness_reduced.unwrap()
        );
        if let Some(r) = i.regularity {
            print!(" {r}");
        }
        match best_move(u.exact(), &x) {
            Ok(y) => println!(" -> {y}"),
            Err(_) => println!(" (terminal)"),
        }
    }
    Ok(())
}
