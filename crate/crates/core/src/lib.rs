//! Finite-rank Coxeter groups, their root systems, and the excess-zero graph
//! on involutions.

pub mod coxeter;
pub mod dn;
pub mod error;
pub mod export;
pub mod finite;
pub mod graph;
pub mod infinite;
pub mod matrix;
pub mod pendant;
pub mod roots;
pub mod spec;
pub mod symn;
pub mod verify;
pub mod word;

pub use coxeter::CoxeterSystem;
pub use error::{Error, Result};
pub use finite::{Element, FiniteGroup, Side};
pub use graph::{excess, is_adjacent, E0Graph, InvolutionSet, ValencyDistribution};
pub use matrix::CoxeterMatrix;
pub use roots::RootSystem;
pub use spec::GroupSpec;
pub use word::Word;
