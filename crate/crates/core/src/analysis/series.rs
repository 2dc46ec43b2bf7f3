use std::fmt;

use serde_json::json;

use super::CheckReport;
use crate::classify::PairClass;
use crate::universe::Universe;

/// A ratio that may have a zero denominator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Ratio {
    Finite(f64),
    Inf,
    NaN,
}

impl Ratio {
    pub fn of(num: u64, den: u64) -> Self {
        match (num, den) {
            (0, 0) => Ratio::NaN,
            (_, 0) => Ratio::Inf,
            _ => Ratio::Finite(num as f64 / den as f64),
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Ratio::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Finite(v) => write!(f, "{v}"),
            Ratio::Inf => f.write_str("inf"),
            Ratio::NaN => f.write_str("nan"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassCountRow {
    pub stones: u64,
    pub pp: u64,
    pub pn: u64,
    pub np: u64,
    pub nn: u64,
}

impl ClassCountRow {
    pub fn total(&self) -> u64 {
        self.pp + self.pn + self.np + self.nn
    }

    /// |PP| / |PN|
    pub fn ratio_pp_pn(&self) -> Ratio {
        Ratio::of(self.pp, self.pn)
    }

    /// (|NP| + |PN|) / (|NN| + |PP|)
    pub fn ratio_mixed(&self) -> Ratio {
        Ratio::of(self.np + self.pn, self.nn + self.pp)
    }

    fn add(&mut self, c: PairClass) {
        match c {
            PairClass::PP => self.pp += 1,
            PairClass::PN => self.pn += 1,
            PairClass::NP => self.np += 1,
            PairClass::NN => self.nn += 1,
        }
    }
}

/// Class counts per total stone count, rows `0..=5B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCountSeries {
    pub bound: u32,
    pub rows: Vec<ClassCountRow>,
}

impl ClassCountSeries {
    pub fn totals(&self) -> ClassCountRow {
        let mut t = ClassCountRow::default();
        for r in &self.rows {
            t.pp += r.pp;
            t.pn += r.pn;
            t.np += r.np;
            t.nn += r.nn;
        }
        t.stones = u64::MAX;
        t
    }

    /// |PN| / (|PN| + |PP|): the share of exact-P positions that Moore's
    /// criterion on the reduction gets wrong.
    pub fn pn_share_of_p(&self) -> f64 {
        let t = self.totals();
        t.pn as f64 / (t.pn + t.pp) as f64
    }

    /// |PN| / all positions.
    pub fn pn_share_of_all(&self) -> f64 {
        let t = self.totals();
        t.pn as f64 / t.total() as f64
    }

    pub fn pp_pn_series(&self) -> Vec<Ratio> {
        self.rows.iter().map(ClassCountRow::ratio_pp_pn).collect()
    }

    pub fn mixed_series(&self) -> Vec<Ratio> {
        self.rows.iter().map(ClassCountRow::ratio_mixed).collect()
    }
}

pub fn class_counts(universe: &Universe) -> ClassCountSeries {
    let bound = universe.bound();
    let mut rows: Vec<ClassCountRow> = (0..=5 * bound as u64)
        .map(|stones| ClassCountRow {
            stones,
            ..Default::default()
        })
        .collect();
    for (r, x) in universe.positions() {
        rows[x.total() as usize].add(universe.class_at(r));
    }
    ClassCountSeries { bound, rows }
}

/// Expected share of PN among exact-P positions at full scale.
pub const PN_SHARE_TARGET: f64 = 0.20;
pub const PN_SHARE_TOLERANCE: f64 = 0.02;
/// Below this bound the share is reported but not asserted.
pub const PN_SHARE_MIN_BOUND: u32 = 85;

/// Reports |PN|/(|PN|+|PP|) and |PN|/all; asserts the first is within
/// tolerance of the target once the bound reaches [`PN_SHARE_MIN_BOUND`].
pub fn check_pn_share(series: &ClassCountSeries) -> CheckReport {
    let mut rep = CheckReport::new("obs1", series.bound);
    let share = series.pn_share_of_p();
    let asserted = series.bound >= PN_SHARE_MIN_BOUND;
    let t = series.totals();
    rep.stat("pp", t.pp);
    rep.stat("pn", t.pn);
    rep.stat("np", t.np);
    rep.stat("nn", t.nn);
    rep.stat("pn_share_of_p", share);
    rep.stat("pn_share_of_all", series.pn_share_of_all());
    rep.stat("asserted", asserted);
    if asserted && (share - PN_SHARE_TARGET).abs() > PN_SHARE_TOLERANCE {
        rep.fail(json!(format!(
            "share {share:.4} outside {PN_SHARE_TARGET} +- {PN_SHARE_TOLERANCE}"
        )));
    }
    rep
}

/// Passes iff the finite entries of `series`, in order, rise strictly at
/// least once and fall strictly at least once. Non-finite entries are skipped.
pub fn check_nonmonotonicity(name: &str, bound: u32, series: &[Ratio]) -> CheckReport {
    let mut rep = CheckReport::new(name, bound);
    let values: Vec<f64> = series.iter().filter_map(|r| r.finite()).collect();
    let (mut rises, mut falls) = (0u64, 0u64);
    for w in values.windows(2) {
        if w[1] > w[0] {
            rises += 1;
        } else if w[1] < w[0] {
            falls += 1;
        }
    }
    rep.stat("finite_points", values.len() as u64);
    rep.stat("skipped_points", (series.len() - values.len()) as u64);
    rep.stat("rises", rises);
    rep.stat("falls", falls);
    if values.len() < 3 {
        rep.fail(json!("fewer than 3 finite points"));
    } else if rises == 0 {
        rep.fail(json!("series never rises"));
    } else if falls == 0 {
        rep.fail(json!("series never falls"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::position::Position;
    use crate::universe::UniverseOptions;

    fn fin(v: &[f64]) -> Vec<Ratio> {
        v.iter().map(|&x| Ratio::Finite(x)).collect()
    }

    #[test]
    fn monotonicity_examples() {
        assert!(check_nonmonotonicity("t", 0, &fin(&[1.0, 2.0, 1.0])).passed);
        assert!(!check_nonmonotonicity("t", 0, &fin(&[1.0, 2.0, 3.0])).passed);
        assert!(!check_nonmonotonicity("t", 0, &fin(&[1.0, 2.0])).passed);
        let mut s = fin(&[1.0, 2.0]);
        s.push(Ratio::Inf);
        s.push(Ratio::Finite(0.5));
        assert!(check_nonmonotonicity("t", 0, &s).passed);
    }

    #[test]
    fn ratio_display() {
        assert_eq!(Ratio::of(1, 0).to_string(), "inf");
        assert_eq!(Ratio::of(0, 0).to_string(), "nan");
        assert_eq!(Ratio::of(0, 1).to_string(), "0");
        assert_eq!(Ratio::of(3, 2).to_string(), "1.5");
    }

    #[test]
    fn small_layers() {
        let u = Universe::build(6, &UniverseOptions { remoteness: false, ..Default::default() })
            .unwrap();
        let s = class_counts(&u);
        assert_eq!(s.rows.len(), 31);
        assert_eq!(s.rows[0], ClassCountRow { stones: 0, pp: 1, ..Default::default() });
        // row sums match the layer sizes
        for row in &s.rows {
            let n = u.positions().filter(|(_, x)| x.total() == row.stones).count() as u64;
            assert_eq!(row.total(), n);
        }
        assert_eq!(u.class(&Position::from([0, 0, 0, 1, 1])).unwrap(), PairClass::NN);
        assert_eq!(u.class(&Position::from([0, 0, 0, 0, 2])).unwrap(), PairClass::PP);
        assert_eq!(s.totals().total(), u.len());
    }
}
