//! The exceptional positions and the exact moves between them, as DOT.
//!
//! cargo run --release --example exceptional_graph -- 40 | dot -Tsvg > g.svg

use xnim::analysis::check_exceptional_observations;
use xnim::classify::exceptional_graph;
use xnim::persist::write_dot;
use xnim::universe::UniverseOptions;
use xnim::{Outcome, Universe};

fn main() -> xnim::Result<()> {
    let bound: u32 = std::env::args().nth(1).map_or(40, |s| s.parse().expect("bound"));
    let opts = UniverseOptions { remoteness: false, ..Default::default() };
    let u = Universe::build(bound, &opts)?;
    let g = exceptional_graph(u.exact(), u.classes());

    write_dot(&g, false, &mut std::io::stdout().lock())?;

    for n in g.nodes.iter().filter(|n| n.outcome == Outcome::N) {
        eprintln!(
            "{} {} out-degree {} ({} moves)",
            n.position, n.class, n.out_degree, n.move_out_degree
        );
    }
    eprintln!(
        "{} exceptional, {} edges, {} isolated, {} deadenders",
        g.nodes.len(),
        g.edges.len(),
        g.isolated_count(),
        u.classes().count_deadenders()
    );
    eprintln!("{}", check_exceptional_observations(&g, bound).summary());
    Ok(())
}
