//! Retrograde solving and analysis of nim, Moore's nim(n, <=k) and exact
//! nim(n, =k) over bounded pile spaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`position`]: sorted pile tuples, Bouton matrices, Moore vectors, `xi`.
//! - [`rank`]: dense multiset ranking used to index every table.
//! - [`rules`]: move generation and the closed-form P-position criteria.
//! - [`solver`]: layered backward induction for outcomes and remoteness,
//!   plus a brute-force recursive oracle.
//! - [`classify`]: the PP/PN/NP/NN pair classes of exact(5,=2) against
//!   Moore(4,<=2), good/bad and regular/exceptional labels, and the
//!   exceptional graph.
//! - [`analysis`]: checkers and data series over a classified universe.
//! - [`persist`]: the binary table format and JSONL/CSV/DOT exports.
//! - [`cli`]: the `xnim` command line front end.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod analysis;
pub mod classify;
pub mod cli;
pub mod error;
pub mod persist;
pub mod position;
pub mod rank;
pub mod rules;
pub mod solver;
pub mod universe;

pub use error::{Error, Result};
pub use position::{BoutonMatrix, MooreVector, Position, ReducedPosition};
pub use rank::RankedIndex;
pub use rules::{Family, GameRule};
pub use solver::{Outcome, SolveOptions, SolveTable};
pub use universe::Universe;
