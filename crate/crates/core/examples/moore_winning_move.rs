//! Bouton matrices, Moore vectors and the constructive winning move of
//! Moore's nim(n, <=k).

use xnim::rules::{moore_is_p, moore_winning_move};
use xnim::{GameRule, Position};

fn main() -> xnim::Result<()> {
    let k = 2;
    let rule = GameRule::moore(4, k);
    for piles in [[1, 1, 1, 1], [10, 19, 24, 26], [3, 5, 6, 7], [13, 13, 17, 20]] {
        let x = Position::from(piles);
        let m = x.bouton_matrix();
        println!("{x}");
        println!("  matrix (LSB first):\n{}", indent(&m.to_string()));
        println!("  column sums {:?}", m.moore_vector().sums());
        if moore_is_p(&x, k) {
            println!("  P-position, every column sum divisible by {}", k + 1);
            continue;
        }
        let y = moore_winning_move(&x, k)?;
        assert!(rule.move_exists_between(&x, &y));
        println!("  winning move to {y}, sums {:?}", y.moore_vector().sums());
    }
    Ok(())
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}
