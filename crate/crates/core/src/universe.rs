//! The solved and classified position space for exact(5, =2) next to
//! Moore(4, <=2), which every analysis runs over.

use crate::classify::{classify, ClassTable, PairClass, Quality, Regularity};
use crate::error::{Error, Result};
use crate::position::Position;
use crate::rules::GameRule;
use crate::solver::{solve_full, solve_outcomes_with, Outcome, SolveOptions, SolveTable};

#[derive(Clone, Debug)]
pub struct UniverseOptions {
    /// Also compute remoteness for both tables.
    pub remoteness: bool,
    pub solve: SolveOptions,
}

impl Default for UniverseOptions {
    fn default() -> Self {
        Self {
            remoteness: true,
            solve: SolveOptions::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Universe {
    exact: SolveTable,
    moore: SolveTable,
    classes: ClassTable,
}

/// Everything known about one position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionInfo {
    pub position: Position,
    pub outcome: Outcome,
    pub moore: Outcome,
    pub class: PairClass,
    pub quality: Quality,
    pub regularity: Option<Regularity>,
    pub deadender: bool,
    pub remoteness: Option<u16>,
    pub remoteness_reduced: Option<u16>,
}

impl Universe {
    pub fn build(bound: u32, opts: &UniverseOptions) -> Result<Self> {
        let solve = |rule| {
            if opts.remoteness {
                solve_full(rule, bound, &opts.solve)
            } else {
                solve_outcomes_with(rule, bound, &opts.solve)
            }
        };
        let exact = solve(GameRule::exact(5, 2))?;
        let moore = solve(GameRule::moore(4, 2))?;
        Self::from_tables(exact, moore)
    }

    pub fn from_tables(exact: SolveTable, moore: SolveTable) -> Result<Self> {
        let classes = opts_classify(&exact, &moore)?;
        Ok(Self {
            exact,
            moore,
            classes,
        })
    }

    pub fn bound(&self) -> u32 {
        self.exact.bound()
    }

    pub fn exact(&self) -> &SolveTable {
        &self.exact
    }

    pub fn moore(&self) -> &SolveTable {
        &self.moore
    }

    pub fn classes(&self) -> &ClassTable {
        &self.classes
    }

    pub fn len(&self) -> u64 {
        self.exact.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exact.is_empty()
    }

    pub fn has_remoteness(&self) -> bool {
        self.exact.has_remoteness() && self.moore.has_remoteness()
    }

    pub fn rank(&self, x: &Position) -> Result<u64> {
        self.exact.rank(x)
    }

    /// Iterates `(rank, position)` over the whole space.
    pub fn positions(&self) -> impl Iterator<Item = (u64, Position)> + '_ {
        self.exact.index().iter().enumerate().map(|(r, x)| (r as u64, x))
    }

    pub fn class_at(&self, rank: u64) -> PairClass {
        self.classes.class_at(rank)
    }

    pub fn class(&self, x: &Position) -> Result<PairClass> {
        Ok(self.classes.class_at(self.rank(x)?))
    }

    pub fn reduced_remoteness(&self, x: &Position) -> Option<u16> {
        let p = x.piles();
        let r = self.moore.rank_unchecked(&p[..p.len() - 1]);
        self.moore.remoteness_at(r)
    }

    pub fn info_at(&self, rank: u64, x: Position) -> PositionInfo {
        let class = self.classes.class_at(rank);
        PositionInfo {
            position: x,
            outcome: class.exact(),
            moore: class.moore(),
            class,
            quality: self.classes.quality_at(rank),
            regularity: self.classes.regularity_at(rank),
            deadender: self.classes.is_deadender_at(rank),
            remoteness: self.exact.remoteness_at(rank),
            remoteness_reduced: self.reduced_remoteness(&x),
        }
    }

    pub fn info(&self, x: &Position) -> Result<PositionInfo> {
        let r = self.rank(x)?;
        Ok(self.info_at(r, *x))
    }
}

fn opts_classify(exact: &SolveTable, moore: &SolveTable) -> Result<ClassTable> {
    if exact.has_remoteness() != moore.has_remoteness() {
        return Err(Error::TableMismatch(
            "both tables must agree on whether remoteness is present".into(),
        ));
    }
    classify(exact, moore)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info_for_small_positions() {
        let u = Universe::build(4, &UniverseOptions::default()).unwrap();
        let i = u.info(&Position::zeros(5)).unwrap();
        assert_eq!(i.class, PairClass::PP);
        assert_eq!(i.remoteness, Some(0));
        assert_eq!(i.remoteness_reduced, Some(0));
        let i = u.info(&Position::from([0, 0, 0, 1, 1])).unwrap();
        assert_eq!((i.outcome, i.remoteness), (Outcome::N, Some(1)));
        assert!(u.info(&Position::from([0, 0, 0, 0, 5])).is_err());
    }
}
