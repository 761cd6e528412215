//! Exact Schubert calculus on generalized flag varieties `G/P` and tensor
//! invariants of Levi subgroups.
//!
//! The crate computes, with exact arithmetic throughout:
//!
//! * root systems of types A–D and G2 and their Weyl groups ([`root_system`], [`weyl`]);
//! * cup-product structure constants of `H*(G/P, ℤ)` in the Schubert basis via
//!   divided differences ([`schubert`]);
//! * the characters `χ_w`, the deformed product `⊙₀`, stabilizer parabolics and
//!   tangent-level statistics ([`deformed`]);
//! * tensor-product multiplicities and invariant dimensions for Levi
//!   subgroups ([`levi_rep`]);
//! * an independent Littlewood–Richardson oracle ([`lr_oracle`]);
//! * the verification sweeps and JSON reports behind the `flagcalc` CLI
//!   ([`verify`], [`cache`], [`cli`]).

pub mod cache;
pub mod cli;
pub mod deformed;
pub mod error;
pub mod flag;
pub mod json;
pub mod levi_rep;
pub mod lr_oracle;
pub mod poly;
pub mod root_system;
pub mod schubert;
pub mod verify;
pub mod weyl;

pub use flag::{FlagVariety, GroupData};
pub use error::{Error, Result};

pub use root_system::{GroupType, ParabolicData, Rat, RootSystem, TypeLetter, Weight};
pub use weyl::{CosetTable, Cover, WeylElement, WeylGroup};
