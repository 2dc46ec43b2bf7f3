use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use super::CheckReport;
use crate::error::{Error, Result};
use crate::universe::Universe;

/// Counts of `R(x) - R(x̂)`: exact(5,=2) remoteness minus Moore(4,<=2)
/// remoteness of the reduction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RemotenessHistogram {
    pub overall: BTreeMap<i32, u64>,
    pub exceptional: BTreeMap<i32, u64>,
}

impl RemotenessHistogram {
    pub fn equal_fraction(&self) -> f64 {
        let total: u64 = self.overall.values().sum();
        *self.overall.get(&0).unwrap_or(&0) as f64 / total.max(1) as f64
    }

    pub fn exceptional_max_abs(&self) -> u32 {
        self.exceptional.keys().map(|d| d.unsigned_abs()).max().unwrap_or(0)
    }
}

/// Soft check: equal remoteness is the majority overall, and some
/// exceptional position differs by at least 2.
pub fn remoteness_comparison(u: &Universe) -> Result<(CheckReport, RemotenessHistogram)> {
    if !u.has_remoteness() {
        return Err(Error::MissingRemoteness);
    }
    let mut h = RemotenessHistogram::default();
    for (r, x) in u.positions() {
        let a = u.exact().remoteness_at(r).expect("remoteness present") as i32;
        let b = u.reduced_remoteness(&x).expect("remoteness present") as i32;
        *h.overall.entry(a - b).or_default() += 1;
        if u.classes().is_exceptional_at(r) {
            *h.exceptional.entry(a - b).or_default() += 1;
        }
    }
    let mut rep = CheckReport::new("remoteness", u.bound());
    let eq = h.equal_fraction();
    if eq <= 0.5 {
        rep.fail(json!(format!("equal remoteness fraction {eq} does not dominate")));
    }
    if h.exceptional_max_abs() < 2 {
        rep.fail(json!("no exceptional position differs by 2 or more"));
    }
    rep.stat("scanned", u.len());
    rep.stat("equal_fraction", eq);
    rep.stat("exceptional_max_abs_difference", h.exceptional_max_abs());
    rep.stat("soft", true);
    Ok((rep, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::position::Position;
    use crate::universe::UniverseOptions;

    #[test]
    fn terminal_difference_is_zero() {
        let u = Universe::build(6, &UniverseOptions::default()).unwrap();
        let x = Position::zeros(5);
        assert_eq!(u.exact().remoteness(&x).unwrap(), 0);
        assert_eq!(u.reduced_remoteness(&x), Some(0));
        let (_, h) = remoteness_comparison(&u).unwrap();
        assert_eq!(h.overall.values().sum::<u64>(), u.len());
        assert!(h.overall[&0] > 0);
    }
}
