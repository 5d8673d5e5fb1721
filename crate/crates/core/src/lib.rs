//! Exact enumeration of the nondominated set of a discrete multicriteria
//! minimization problem.
//!
//! The nondominated points `N` generate a monomial max-tropical cone; the
//! closure of its complement is a min-tropical cone whose extremal generators
//! are the local upper bounds of `N`. [`pareto::solve`] grows both cones one
//! point at a time, asking a [`scalarization::ProblemOracle`] for a new
//! nondominated point below each pending apex, and finishes after exactly
//! `n + m` oracle calls (`m` = number of nontrivial apices).
//!
//! ```
//! use monocone::{pareto::solve, scalarization::ExplicitSetOracle, tropical::outcome};
//!
//! let z = ExplicitSetOracle::from_ints(2, &[&[0, 0], &[1, 1], &[-3, 2], &[2, 2]]).unwrap();
//! let sol = solve(&z).unwrap();
//! assert_eq!(sol.nondominated.len(), 2);
//! assert!(sol.nondominated.contains(&outcome(&[-3, 2])));
//! assert_eq!(sol.stats.scalarization_calls, (sol.stats.n + sol.stats.m) as u64);
//! ```

pub mod bounds;
pub mod cone;
pub mod error;
pub mod pareto;
pub mod scalarization;
pub mod tropical;
pub mod verify;

pub use error::{Error, Result};
pub use tropical::{ExtendedScalar, Outcome, Rational, TropicalPoint};
