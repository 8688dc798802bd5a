//! Exact sparse polynomials, rational generating functions and their
//! expansion, plus constructors for every k-bonacci family.

mod families;
mod poly;
mod rational;

pub use families::{
    gf_deg4_total_alt_denominator, gf_degree, gf_graph, gf_hamiltonian, gf_named_total,
    gf_polyomino, total_source, Total,
};
pub use poly::{Monomial, MultiPoly, TermJson, Vars};
pub use rational::{total_weight_series, RationalGF};

use crate::error::Result;

/// `a + b`, failing on mismatched variables.
pub fn poly_add(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    a.try_add(b)
}

/// `a · b`, failing on mismatched variables.
pub fn poly_mul(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    a.try_mul(b)
}
