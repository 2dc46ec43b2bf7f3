use crate::position::{Position, MAX_PILES};

/// All sorted `n`-tuples over `0..=bound` whose entries sum to `total`.
pub fn layer_positions(n: usize, bound: u32, total: u64) -> Vec<Position> {
    let mut out = Vec::new();
    let mut buf = [0u32; MAX_PILES];
    if n == 0 {
        if total == 0 {
            out.push(Position::zeros(0));
        }
        return out;
    }
    fill(n, n, bound, total, &mut buf, &mut out);
    out
}

// Chooses buf[slot - 1] (the largest of the first `slot` entries), then recurses.
fn fill(n: usize, slot: usize, cap: u32, rest: u64, buf: &mut [u32; MAX_PILES], out: &mut Vec<Position>) {
    if slot == 1 {
        if rest <= cap as u64 {
            buf[0] = rest as u32;
            out.push(Position::from_sorted(&buf[..n]));
        }
        return;
    }
    // largest entry must hold at least ceil(rest / slot)
    let lo = rest.div_ceil(slot as u64);
    let hi = rest.min(cap as u64);
    for v in lo..=hi {
        buf[slot - 1] = v as u32;
        fill(n, slot - 1, v as u32, rest - v, buf, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::RankedIndex;

    #[test]
    fn layers_partition_the_space() {
        let (n, bound) = (5, 6);
        let idx = RankedIndex::new(n, bound).unwrap();
        let mut seen = vec![false; idx.total() as usize];
        for s in 0..=(n as u64 * bound as u64) {
            for p in layer_positions(n, bound, s) {
                assert_eq!(p.total(), s);
                let r = idx.rank(&p).unwrap() as usize;
                assert!(!seen[r]);
                seen[r] = true;
            }
        }
        assert!(seen.into_iter().all(|b| b));
    }

    #[test]
    fn two_stone_layer() {
        let l = layer_positions(5, 2, 2);
        assert_eq!(l.len(), 2);
        assert!(l.contains(&Position::from([0, 0, 0, 1, 1])));
        assert!(l.contains(&Position::from([0, 0, 0, 0, 2])));
    }
}
