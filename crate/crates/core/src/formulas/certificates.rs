//! Exact verification of the telescoping certificates behind the `t_n` and
//! `d_{n,3}` recurrences.
//!
//! With `G(n, i) = R(n, i)·F(n, i)` and `R = A / B`, the identity
//! `L(n, i) = G(n, i+1) − G(n, i)` is checked after multiplying through by
//! `B(n, i)·B(n, i+1)`, so both sides are integer polynomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::binomial;
use crate::error::{Error, Result};
use crate::series::{MultiPoly, Vars};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `F(n+2,i) − pq·F(n+1,i) − p³q³·F(n,i)` with `F = C(n+1−i, i) p^{n+i+1} q^{n+i}`.
    Rel1,
    /// `F(n+2,i) − F(n+1,i) − q²·F(n,i)` for the degree-3 summand.
    Rel2,
}

impl Relation {
    pub const ALL: [Relation; 2] = [Relation::Rel1, Relation::Rel2];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Rel1 => "rel1",
            Relation::Rel2 => "rel2",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown relation {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateOutcome {
    Holds,
    Fails,
    /// A certificate denominator vanishes at `i` or `i + 1`.
    Skipped,
}

struct Parts {
    vars: Vars,
}

impl Parts {
    fn new(rel: Relation) -> Self {
        let vars = match rel {
            Relation::Rel1 => Vars::new(&["p", "q"]),
            Relation::Rel2 => Vars::new(&["q"]),
        };
        Parts { vars }
    }

    fn mono(&self, c: BigInt, exps: &[i64]) -> MultiPoly {
        if exps.iter().any(|&e| e < 0) {
            assert!(
                c == BigInt::from(0),
                "negative exponent with a nonzero coefficient"
            );
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly::monomial(&self.vars, c, exps.iter().map(|&e| e as u32).collect())
    }

    fn c(&self, v: i64) -> MultiPoly {
        MultiPoly::constant(&self.vars, v)
    }

    fn q(&self) -> MultiPoly {
        MultiPoly::var(&self.vars, "q").expect("q is always present")
    }

    fn f(&self, rel: Relation, n: i64, i: i64) -> MultiPoly {
        match rel {
            Relation::Rel1 => self.mono(binomial(n + 1 - i, i), &[n + i + 1, n + i]),
            Relation::Rel2 => {
                self.mono(binomial(n - i - 1, i - 1) * 2, &[2 * i + 3])
                    + self.mono(binomial(n - i, i - 1), &[2 * i + 2])
                    + self.mono(binomial(n - i - 1, i - 2), &[2 * i + 2])
            }
        }
    }

    fn a(&self, rel: Relation, n: i64, i: i64) -> MultiPoly {
        match rel {
            Relation::Rel1 => self.mono((-i * (2 - i + n)).into(), &[2, 2]),
            Relation::Rel2 => {
                let q = self.q();
                let inner = &q * (4 * i - 6) - (&q * 2 + self.c(1)) * n + self.c(1);
                inner * ((n - i) * (i - 1))
            }
        }
    }

    fn b(&self, rel: Relation, n: i64, i: i64) -> MultiPoly {
        let lead = (2 - 2 * i + n) * (3 - 2 * i + n);
        match rel {
            Relation::Rel1 => self.c(lead),
            Relation::Rel2 => {
                let q = self.q();
                let last = &q * (2 * n - 4 * i + 2) + self.c(n - 1);
                last * lead
            }
        }
    }
}

/// Checks the certificate identity at `(n, i)` exactly.
pub fn verify_certificate(rel: Relation, n: i64, i: i64) -> Result<CertificateOutcome> {
    if n < 0 || i < 0 {
        return Err(Error::Parameter(format!(
            "certificate needs n, i ≥ 0, got ({n}, {i})"
        )));
    }
    let parts = Parts::new(rel);
    let (b0, b1) = (parts.b(rel, n, i), parts.b(rel, n, i + 1));
    if b0.is_zero() || b1.is_zero() {
        return Ok(CertificateOutcome::Skipped);
    }
    let shift = match rel {
        Relation::Rel1 => (parts.mono(1.into(), &[1, 1]), parts.mono(1.into(), &[3, 3])),
        Relation::Rel2 => (parts.c(1), parts.mono(1.into(), &[2])),
    };
    let lhs =
        parts.f(rel, n + 2, i) - shift.0 * parts.f(rel, n + 1, i) - shift.1 * parts.f(rel, n, i);
    let left = lhs * &b0 * &b1;
    let right = parts.a(rel, n, i + 1) * &b0 * parts.f(rel, n, i + 1)
        - parts.a(rel, n, i) * &b1 * parts.f(rel, n, i);
    Ok(if left == right {
        CertificateOutcome::Holds
    } else {
        CertificateOutcome::Fails
    })
}

/// Outcome counts over `0 ≤ n ≤ n_max`, `0 ≤ i ≤ n + 3`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CertificateSweep {
    pub holds: usize,
    pub skipped: usize,
    pub failures: Vec<(i64, i64)>,
}

pub fn certificate_sweep(rel: Relation, n_max: i64) -> Result<CertificateSweep> {
    let mut out = CertificateSweep::default();
    for n in 0..=n_max {
        for i in 0..=n + 3 {
            match verify_certificate(rel, n, i)? {
                CertificateOutcome::Holds => out.holds += 1,
                CertificateOutcome::Skipped => out.skipped += 1,
                CertificateOutcome::Fails => out.failures.push((n, i)),
            }
        }
    }
    Ok(out)
}
