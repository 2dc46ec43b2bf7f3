//! Compares exact(5,=2) remoteness with Moore(4,<=2) remoteness of the
//! reduction, and plays one game out with the engine on both sides.

use xnim::analysis::remoteness_comparison;
use xnim::solver::best_move;
use xnim::universe::UniverseOptions;
use xnim::{Position, Universe};

fn main() -> xnim::Result<()> {
    let u = Universe::build(40, &UniverseOptions::default())?;
    let (rep, h) = remoteness_comparison(&u)?;
    println!("{}", rep.summary());
    println!("difference  overall  exceptional");
    for (d, n) in &h.overall {
        println!("{d:>10} {n:>8} {:>12}", h.exceptional.get(d).unwrap_or(&0));
    }

    let mut x = Position::from([3, 7, 12, 18, 40]);
    print!("{x}");
    while let Ok(y) = best_move(u.exact(), &x) {
        print!(" -> {y}");
        x = y;
    }
    println!();
    Ok(())
}
