//! Exact Schubert calculus on complex and quaternionic Grassmannians, the
//! Lefschetz intersection form, and degree obstructions for maps
//! `G_{n,k} → G_{m,l}` of equal dimension, with the supporting Pell and
//! norm-equation machinery.

pub mod chern;
pub mod cli;
pub mod diophantine;
pub mod error;
pub mod exact;
pub mod grassmann;
pub mod lefschetz;
pub mod linalg;
pub mod maps;
pub mod poly;
pub mod schubert;

pub use error::{Error, Result};
pub use grassmann::{Field, GrassContext, IndexSet, Partition, Shape};
pub use schubert::{CohElement, SpecialClass};
