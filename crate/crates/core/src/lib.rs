//! Exact-arithmetic workbench for the algebra of functions on quotients of
//! the 3-sphere by finite subgroups of SU(2).
//!
//! Everything is computed over the cyclotomic field Q(zeta_120); there is no
//! floating point in any decision path. The main pieces:
//!
//! - [`cyclo`]: the coefficient field and exact linear algebra;
//! - [`binform`]: homogeneous binary forms and their transvectants;
//! - [`sphere`]: polynomials on the unit 3-sphere, SU(2) generator actions,
//!   and multiplets built from highest weights;
//! - [`groups`]: the finite subgroups of SU(2) with exact certification and
//!   a Molien dimension oracle;
//! - [`invariants`]: the fundamental (semi-)invariant systems and their
//!   syzygies;
//! - [`algebra`]: product decomposition into spin components, relation
//!   scanning, and the per-group verification batteries;
//! - [`cli`]: the command-line front end.

pub mod algebra;
pub mod binform;
pub mod cli;
pub mod cyclo;
mod error;
pub mod groups;
pub mod invariants;
pub mod report;
pub mod sphere;

pub use error::Error;
