//! Closed forms, recurrences, integer identities, telescoping certificates and
//! asymptotic constants for the Fibonacci (`k = 2`) families.

mod asymptotics;
mod certificates;
mod identities;
mod sequences;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use asymptotics::{
    degree_proportion_limit, empirical_degree_ratio, format_decimal, gap_enclosure, DegreeTotals,
    QuadraticSurd, RatioReport,
};
pub use certificates::{
    certificate_sweep, verify_certificate, CertificateOutcome, CertificateSweep, Relation,
};
pub use identities::{
    count_polyominoes_by_area, fib, fib_convolution, narayana, total_area_binomial,
    total_area_closed,
};
pub use sequences::{
    d2_poly, d2_poly_closed, d3_poly, d3_poly_closed, d4_poly, d4_poly_closed, t_poly,
    t_poly_closed, v_poly, v_poly_closed, FibSeq, SecondOrder,
};

use crate::error::{Error, Result};
use crate::series::MultiPoly;

/// `C(m, r)`, zero whenever `m < 0`, `r < 0` or `r > m`.
pub fn binomial(m: i64, r: i64) -> BigInt {
    if m < 0 || r < 0 || r > m {
        return BigInt::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigInt::one();
    for j in 0..r {
        acc = acc * (m - j) / (j + 1);
    }
    acc
}

/// Named sequences exposed to the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceName {
    Poly(FibSeq),
    Area,
    Narayana,
}

impl SequenceName {
    pub const ALL: [SequenceName; 7] = [
        SequenceName::Poly(FibSeq::T),
        SequenceName::Poly(FibSeq::V),
        SequenceName::Poly(FibSeq::D2),
        SequenceName::Poly(FibSeq::D3),
        SequenceName::Poly(FibSeq::D4),
        SequenceName::Area,
        SequenceName::Narayana,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceName::Poly(s) => s.name(),
            SequenceName::Area => "area",
            SequenceName::Narayana => "narayana",
        }
    }

    pub fn value(self, n: usize) -> Result<SequenceValue> {
        match self {
            SequenceName::Poly(s) => s.value(n).map(SequenceValue::Poly),
            SequenceName::Area => total_area_closed(n).map(SequenceValue::Int),
            SequenceName::Narayana => narayana(n).map(SequenceValue::Int),
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceName::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown sequence {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceValue {
    Poly(MultiPoly),
    Int(BigInt),
}

impl fmt::Display for SequenceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceValue::Poly(p) => p.fmt(f),
            SequenceValue::Int(v) => v.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(0, 0), 1.into());
        assert_eq!(binomial(-1, -1), 0.into());
        assert_eq!(binomial(-3, 1), 0.into());
        assert_eq!(binomial(3, 4), 0.into());
        assert_eq!(binomial(3, -1), 0.into());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn sequence_names() {
        for s in SequenceName::ALL {
            assert_eq!(s.name().parse::<SequenceName>().unwrap(), s);
        }
        assert!("fib".parse::<SequenceName>().is_err());
        assert_eq!(SequenceName::Narayana.value(6).unwrap().to_string(), "6");
        assert_eq!(SequenceName::Area.value(2).unwrap().to_string(), "8");
        assert_eq!(
            SequenceName::Poly(FibSeq::T).value(1).unwrap().to_string(),
            "p^2*q + p^3*q^2"
        );
    }
}
