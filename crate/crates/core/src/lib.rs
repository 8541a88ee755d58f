//! Exact Schubert calculus on even and odd orthogonal Grassmannians.

pub mod cli;
pub mod error;
pub mod eta;
pub mod index_sets;
pub mod linalg;
pub mod partition;
pub mod pieri;
pub mod raising;
pub mod rational;
pub mod ring;
pub mod symfunc;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
