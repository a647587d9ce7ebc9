//! Exact rational arithmetic and sparse multivariate polynomials, with
//! localization at declared-nonzero polynomials.
//!
//! All values are immutable after construction and every operation is pure.

mod monomial;
mod multiset;
pub mod parse;
mod poly;
mod rational;
mod solve;
pub mod span;
mod var;

pub use monomial::Monomial;
pub use multiset::{MultiplicativeSet, UnitCertificate};
pub use parse::{parse_poly, ParseError};
pub use poly::{PolyError, Polynomial};
pub use rational::{ParseRationalError, Rational};
pub use solve::{solve_linear, Fraction, LinearSolution, SolveError};
pub use span::linear_span_member;
pub use var::VarId;
