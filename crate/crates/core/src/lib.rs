//! Exact enumeration engine for k-bonacci words, their bargraph polyominoes
//! and grid graphs, with generating-function expansion and brute-force
//! cross-checks.

pub mod error;
pub mod formulas;
pub mod graph;
pub mod par;
pub mod polyomino;
pub mod series;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, GridGraph};
pub use par::Exec;
pub use polyomino::Polyomino;
pub use series::{MultiPoly, RationalGF, Vars};
pub use words::Word;
