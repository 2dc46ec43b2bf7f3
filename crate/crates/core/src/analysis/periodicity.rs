use std::fmt;

use serde::Serialize;

use crate::classify::PairClass;
use crate::universe::Universe;

/// Minimum number of complete periods before a period is reported.
pub const MIN_REPETITIONS: usize = 3;

/// Which PN positions with the given first pile form the sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceMode {
    /// All of them, ordered lexicographically by the remaining piles.
    Lexicographic,
    /// Only those whose second pile equals the given value.
    FixedX2(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityReport {
    pub x1: u32,
    pub mode: SequenceMode,
    pub length: usize,
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    pub repetitions: usize,
    /// Positions dropped near the bound, where the sequence is incomplete.
    pub trimmed: usize,
    /// The difference vectors themselves, in sequence order.
    pub differences: Vec<[u32; 3]>,
}

impl fmt::Display for PeriodicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x1={} length={} trimmed={} ", self.x1, self.length, self.trimmed)?;
        match (self.preperiod, self.period) {
            (Some(pre), Some(p)) => write!(
                f,
                "preperiod={pre} period={p} repetitions={}",
                self.repetitions
            ),
            _ => f.write_str("none found"),
        }
    }
}

/// Smallest `(preperiod, period)`, preperiod first, such that
/// `seq[i] == seq[i + period]` for every `i >= preperiod` inside the data
/// and the periodic tail holds at least `min_reps` full periods.
pub fn find_period<T: Eq>(seq: &[T], min_reps: usize) -> Option<(usize, usize)> {
    let min_reps = min_reps.max(1);
    let n = seq.len();
    for pre in 0..n {
        let tail = n - pre;
        for p in 1..=tail / min_reps {
            if (pre..n - p).all(|i| seq[i] == seq[i + p]) {
                return Some((pre, p));
            }
        }
    }
    None
}

pub fn detect_periodicity(u: &Universe, x1: u32, mode: SequenceMode) -> PeriodicityReport {
    let mut seq: Vec<[u32; 4]> = u
        .positions()
        .filter(|(r, x)| x.piles()[0] == x1 && u.class_at(*r) == PairClass::PN)
        .map(|(_, x)| {
            let p = x.piles();
            [p[1], p[2], p[3], p[4]]
        })
        .filter(|t| match mode {
            SequenceMode::Lexicographic => true,
            SequenceMode::FixedX2(v) => t[0] == v,
        })
        .collect();
    seq.sort_unstable();
    // Positions with a pile above the bound are missing and would sort among
    // the last second-pile values. Keep second piles x2 with x2 + w <= bound,
    // where w is the widest observed spread x5 - x2.
    let spread = seq.iter().map(|t| t[3] - t[0]).max().unwrap_or(0);
    let before = seq.len();
    seq.retain(|t| t[0] + spread <= u.bound().saturating_sub(1));
    let trimmed = before - seq.len();
    let differences: Vec<[u32; 3]> = seq.iter().map(|t| [t[1] - t[0], t[2] - t[1], t[3] - t[2]]).collect();
    let found = find_period(&differences, MIN_REPETITIONS);
    PeriodicityReport {
        x1,
        mode,
        length: differences.len(),
        preperiod: found.map(|f| f.0),
        period: found.map(|f| f.1),
        repetitions: found.map_or(0, |(pre, p)| (differences.len() - pre) / p),
        trimmed,
        differences,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_sequences() {
        assert_eq!(find_period(b"ababab", 3), Some((0, 2)));
        assert_eq!(find_period(b"cababab", 3), Some((1, 2)));
        assert_eq!(find_period(b"abab", 3), None);
        assert_eq!(find_period(b"ab", 3), None);
        assert_eq!(find_period(b"aaa", 3), Some((0, 1)));
        assert_eq!(find_period::<u8>(&[], 3), None);
    }

    #[test]
    fn period_holds_over_tail() {
        let s = [5, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1];
        let (pre, p) = find_period(&s, 3).unwrap();
        assert_eq!((pre, p), (1, 3));
        assert!((pre..s.len() - p).all(|i| s[i] == s[i + p]));
    }
}
