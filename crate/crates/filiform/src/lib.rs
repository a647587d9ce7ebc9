//! Exact-arithmetic engine for filiform Lie algebra varieties, their linear
//! deformations, and machine-checked non-rigidity certificates.
//!
//! The library constructs the Vergne parametrization of filiform brackets,
//! derives the variety equations from the Jacobi identity, builds the
//! linear deformations `mu_t = mu + t*phi_D`, and replays elimination
//! scripts certifying that in dimensions 9, 10 and 11 an isomorphism
//! between `mu_t` and `mu` forces `t = 0` on explicit dense open sets.
//! Everything is computed over the rationals with exact sparse polynomial
//! arithmetic; no floating point, no ideal-membership oracles.
//!
//! Entry points:
//! * [`vergne`] — the parameter sets `Delta_n`, the basis cocycles and the
//!   generic filiform bracket;
//! * [`variety`] — derived and published equation systems, components,
//!   open sets, witness points;
//! * [`deform`] — the shift derivations `D3`/`D4` and the deformation
//!   construction with its hypothesis checks;
//! * [`isokit`] — isomorphism defect equations, the matrix normal form,
//!   and the certified proof scripts;
//! * [`report`] — aggregated verification used by `verify all`.
//!
//! The `examples/` directory demonstrates each capability end to end; the
//! thin `filiform` binary exposes the same functionality as subcommands.

pub mod cli;
pub mod deform;
pub mod exactalg;
pub mod isokit;
pub mod liecore;
pub mod report;
pub mod variety;
pub mod vergne;
