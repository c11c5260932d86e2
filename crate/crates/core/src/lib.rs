//! Exact construction and verification of Hopf algebras, comodule algebras
//! and Hopf Galois extensions.

pub mod catalog;
pub mod comod;
pub mod error;
pub mod findim;
pub mod galoisobj;
pub mod generic;
pub mod hopf;
pub mod linalg;
pub mod ncalg;
pub mod report;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
pub use report::{Check, Report, Status};
