//! Limiting degree proportions of Fibonacci grid graphs, as exact quadratic
//! surds, and the exact finite-`n` ratios that approach them.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::sequences::FibSeq;
use crate::error::{Error, Result};
use crate::series::{gf_named_total, Total};

/// `(a + b√5) / c` with `c > 0` and `gcd(a, b, c) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl QuadraticSurd {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let (mut a, mut b, mut c) = (a.into(), b.into(), c.into());
        if c.is_zero() {
            return Err(Error::Parameter("surd denominator is zero".into()));
        }
        if c.is_negative() {
            (a, b, c) = (-a, -b, -c);
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() && !g.is_zero() {
            (a, b, c) = (a / &g, b / &g, c / &g);
        }
        Ok(QuadraticSurd { a, b, c })
    }

    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact value when the √5 part vanishes.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.a.clone(), self.c.clone()))
    }

    pub fn add(&self, other: &QuadraticSurd) -> QuadraticSurd {
        QuadraticSurd::new(
            &self.a * &other.c + &other.a * &self.c,
            &self.b * &other.c + &other.b * &self.c,
            &self.c * &other.c,
        )
        .expect("product of nonzero denominators")
    }

    /// Exact comparison of this surd against a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        // (a + b√5)/c ? r  ⇔  b√5 ? u  with u = r·c − a
        let u = r * BigRational::from_integer(self.c.clone())
            - BigRational::from_integer(self.a.clone());
        let b = &self.b;
        if b.is_zero() {
            return BigRational::zero().cmp(&u);
        }
        let five_b2 = BigRational::from_integer(b * b * 5);
        let u2 = &u * &u;
        if b.is_positive() {
            if !u.is_positive() {
                Ordering::Greater
            } else {
                five_b2.cmp(&u2)
            }
        } else if !u.is_negative() {
            Ordering::Less
        } else {
            u2.cmp(&five_b2)
        }
    }

    /// True when `|r − self| < eps`, decided exactly.
    pub fn within(&self, r: &BigRational, eps: &BigRational) -> bool {
        self.cmp_rational(&(r - eps)) == Ordering::Greater
            && self.cmp_rational(&(r + eps)) == Ordering::Less
    }

    /// A rational within `10⁻³⁰` of this value, by bisection on exact
    /// comparisons.
    pub fn approximation(&self) -> BigRational {
        let tol = BigRational::new(1.into(), BigInt::from(10).pow(30));
        let bound = BigRational::new(self.a.abs() + self.b.abs() * 3, self.c.clone());
        let (mut lo, mut hi) = (-bound.clone(), bound);
        let two = BigRational::from_integer(2.into());
        while &hi - &lo > tol {
            let mid = (&lo + &hi) / &two;
            if self.cmp_rational(&mid) == Ordering::Less {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        lo
    }

    /// Display-only floating-point value.
    pub fn to_f64(&self) -> f64 {
        let f = |x: &BigInt| x.to_f64().unwrap_or(f64::NAN);
        (f(&self.a) + f(&self.b) * 5f64.sqrt()) / f(&self.c)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numerator = match (self.a.is_zero(), self.b.sign()) {
            (_, num_bigint::Sign::NoSign) => self.a.to_string(),
            (true, _) => surd_term(&self.b, true),
            (false, _) => format!("{} {}", self.a, surd_term(&self.b, false)),
        };
        if self.c.is_one() {
            f.write_str(&numerator)
        } else if self.is_rational() {
            write!(f, "{numerator}/{}", self.c)
        } else {
            write!(f, "({numerator})/{}", self.c)
        }
    }
}

fn surd_term(b: &BigInt, leading: bool) -> String {
    let mag = b.abs();
    let body = if mag.is_one() {
        "√5".to_string()
    } else {
        format!("{mag}√5")
    };
    match (leading, b.is_negative()) {
        (true, true) => format!("-{body}"),
        (true, false) => body,
        (false, true) => format!("- {body}"),
        (false, false) => format!("+ {body}"),
    }
}

fn check_degree(i: usize) -> Result<()> {
    if (2..=4).contains(&i) {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "degree must be 2, 3 or 4, got {i}"
        )))
    }
}

/// `lim d_{n,i} / d_n` for Fibonacci grid graphs.
pub fn degree_proportion_limit(i: usize) -> Result<QuadraticSurd> {
    check_degree(i)?;
    match i {
        3 => QuadraticSurd::new(4, 1, 11),
        _ => QuadraticSurd::new(7, -1, 22),
    }
}

/// Exact totals for lengths `1 ..= n_max`: all vertices, and vertices of
/// degree 2, 3, 4.
#[derive(Debug, Clone)]
pub struct DegreeTotals {
    vertices: Vec<BigInt>,
    by_degree: [Vec<BigInt>; 3],
}

impl DegreeTotals {
    pub fn new(n_max: usize) -> Result<Self> {
        let vertices = gf_named_total(Total::Vertices, 2)?
            .expand(n_max)
            .iter()
            .map(|c| c.constant_term())
            .collect();
        let totals = |s: FibSeq| {
            s.recurrence()
                .jets_at_one(n_max)
                .into_iter()
                .map(|(_, d)| d)
                .collect()
        };
        Ok(DegreeTotals {
            vertices,
            by_degree: [totals(FibSeq::D2), totals(FibSeq::D3), totals(FibSeq::D4)],
        })
    }

    pub fn n_max(&self) -> usize {
        self.vertices.len()
    }

    fn index(&self, n: usize) -> Result<usize> {
        if n < 1 || n > self.n_max() {
            return Err(Error::Parameter(format!(
                "length {n} outside 1..={}",
                self.n_max()
            )));
        }
        Ok(n - 1)
    }

    /// `d_n`: total vertex count over all Fibonacci graphs of length `n`.
    pub fn vertices(&self, n: usize) -> Result<&BigInt> {
        Ok(&self.vertices[self.index(n)?])
    }

    /// `d_{n,i}`: total number of degree-`i` vertices at length `n`.
    pub fn degree(&self, i: usize, n: usize) -> Result<&BigInt> {
        check_degree(i)?;
        Ok(&self.by_degree[i - 2][self.index(n)?])
    }

    pub fn ratio(&self, i: usize, n: usize) -> Result<BigRational> {
        Ok(BigRational::new(
            self.degree(i, n)?.clone(),
            self.vertices(n)?.clone(),
        ))
    }

    /// True when `d_{n,2} + d_{n,3} + d_{n,4} = d_n` for every stored `n`.
    pub fn partitions_vertices(&self) -> bool {
        (0..self.n_max()).all(|j| {
            let sum: BigInt = self.by_degree.iter().map(|v| &v[j]).sum();
            sum == self.vertices[j]
        })
    }
}

/// `d_{n,i} / d_n` as an exact rational.
pub fn empirical_degree_ratio(i: usize, n: usize) -> Result<BigRational> {
    check_degree(i)?;
    DegreeTotals::new(n)?.ratio(i, n)
}

/// Decimal rendering of an exact rational with `sig` significant digits,
/// rounded half away from zero.
pub fn format_decimal(r: &BigRational, sig: usize) -> String {
    assert!(sig >= 1, "at least one significant digit");
    if r.is_zero() {
        return "0".to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let x = r.abs();
    let ten = BigRational::from_integer(10.into());
    // 10^e ≤ x < 10^{e+1}
    let mut e: i64 = 0;
    let mut scaled = x.clone();
    while scaled >= ten {
        scaled /= &ten;
        e += 1;
    }
    while scaled < BigRational::one() {
        scaled *= &ten;
        e -= 1;
    }
    let shift = sig as i64 - 1 - e;
    let factor = BigRational::from_integer(BigInt::from(10).pow(shift.unsigned_abs() as u32));
    let y = if shift >= 0 {
        &x * &factor
    } else {
        &x / &factor
    };
    let half = BigRational::new(1.into(), 2.into());
    let mut digits = (y + half).floor().to_integer();
    if digits == BigInt::from(10).pow(sig as u32) {
        digits /= 10;
        e += 1;
    }
    let d = digits.to_string();
    let body = if e >= 0 {
        let int_len = e as usize + 1;
        if int_len >= d.len() {
            format!("{d}{}", "0".repeat(int_len - d.len()))
        } else {
            format!("{}.{}", &d[..int_len], &d[int_len..])
        }
    } else {
        format!("0.{}{d}", "0".repeat((-e - 1) as usize))
    };
    format!("{sign}{body}")
}

/// A convergence snapshot for one degree at one length.
#[derive(Debug, Clone, Serialize)]
pub struct RatioReport {
    pub degree: usize,
    pub n: usize,
    pub ratio: String,
    pub ratio_decimal: String,
    pub limit: String,
    pub limit_decimal: String,
    pub gap_decimal: String,
}

impl RatioReport {
    pub fn new(totals: &DegreeTotals, i: usize, n: usize) -> Result<Self> {
        let ratio = totals.ratio(i, n)?;
        let limit = degree_proportion_limit(i)?;
        Ok(RatioReport {
            degree: i,
            n,
            ratio: ratio.to_string(),
            ratio_decimal: format_decimal(&ratio, 10),
            limit: limit.to_string(),
            limit_decimal: format_decimal(&limit.approximation(), 10),
            gap_decimal: format_decimal(&gap_enclosure(&limit, &ratio), 10),
        })
    }
}

/// A rational within `10⁻³⁰` of `|ratio − limit|`.
pub fn gap_enclosure(limit: &QuadraticSurd, ratio: &BigRational) -> BigRational {
    (limit.approximation() - ratio).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn surd_arithmetic() {
        let l2 = degree_proportion_limit(2).unwrap();
        let l3 = degree_proportion_limit(3).unwrap();
        let l4 = degree_proportion_limit(4).unwrap();
        assert_eq!(l2.to_string(), "(7 - √5)/22");
        assert_eq!(l3.to_string(), "(4 + √5)/11");
        let sum = l2.add(&l3).add(&l4);
        assert_eq!(sum.to_rational(), Some(BigRational::one()));
        assert!((l2.to_f64() - 0.21654236).abs() < 1e-8);
        assert!((l3.to_f64() - 0.56691527).abs() < 1e-8);
        assert!(degree_proportion_limit(5).is_err());
        assert!(QuadraticSurd::new(1, 1, 0).is_err());
    }

    #[test]
    fn surd_comparison() {
        let l2 = degree_proportion_limit(2).unwrap();
        assert_eq!(l2.cmp_rational(&rat(21654, 100000)), Ordering::Greater);
        assert_eq!(l2.cmp_rational(&rat(21655, 100000)), Ordering::Less);
        let l3 = degree_proportion_limit(3).unwrap();
        assert_eq!(l3.cmp_rational(&rat(56691, 100000)), Ordering::Greater);
        assert_eq!(l3.cmp_rational(&rat(56692, 100000)), Ordering::Less);
        assert_eq!(l3.cmp_rational(&rat(-1, 1)), Ordering::Greater);
        let rational = QuadraticSurd::new(3, 0, 4).unwrap();
        assert_eq!(rational.cmp_rational(&rat(3, 4)), Ordering::Equal);
        assert_eq!(rational.to_string(), "3/4");
        let neg = QuadraticSurd::new(0, -2, 1).unwrap();
        assert_eq!(neg.to_string(), "-2√5");
        assert_eq!(neg.cmp_rational(&rat(-4, 1)), Ordering::Less);
        assert_eq!(neg.cmp_rational(&rat(-5, 1)), Ordering::Greater);
        assert!(l2.within(&rat(2165, 10000), &rat(1, 10000)));
        assert!(!l2.within(&rat(2, 10), &rat(1, 100)));
    }

    #[test]
    fn decimals() {
        assert_eq!(format_decimal(&rat(1, 3), 10), "0.3333333333");
        assert_eq!(format_decimal(&rat(2, 3), 4), "0.6667");
        assert_eq!(format_decimal(&rat(-1, 8), 2), "-0.13");
        assert_eq!(format_decimal(&rat(9999, 1000), 3), "10.0");
        assert_eq!(format_decimal(&rat(123456, 1), 3), "123000");
        assert_eq!(format_decimal(&rat(1, 1000), 2), "0.0010");
        assert_eq!(format_decimal(&BigRational::zero(), 5), "0");
    }

    #[test]
    fn totals_partition_and_converge() {
        let t = DegreeTotals::new(400).unwrap();
        assert!(t.partitions_vertices());
        assert_eq!(t.vertices(1).unwrap(), &BigInt::from(10));
        assert_eq!(t.degree(2, 1).unwrap(), &BigInt::from(8));
        assert_eq!(t.degree(3, 1).unwrap(), &BigInt::from(2));
        assert!(t.ratio(2, 0).is_err() && t.ratio(2, 401).is_err() && t.ratio(5, 3).is_err());
        let eps = rat(1, 100);
        for i in 2..=4 {
            let limit = degree_proportion_limit(i).unwrap();
            assert!(limit.within(&t.ratio(i, 400).unwrap(), &eps), "degree {i}");
        }
    }

    #[test]
    fn approximations() {
        let l2 = degree_proportion_limit(2).unwrap();
        assert_eq!(format_decimal(&l2.approximation(), 10), "0.2165423647");
        let l3 = degree_proportion_limit(3).unwrap();
        assert_eq!(format_decimal(&l3.approximation(), 8), "0.56691527");
        let neg = QuadraticSurd::new(-1, -1, 2).unwrap();
        assert_eq!(format_decimal(&neg.approximation(), 6), "-1.61803");
    }

    #[test]
    fn gap_is_tight() {
        let l2 = degree_proportion_limit(2).unwrap();
        let g = gap_enclosure(&l2, &rat(1, 5));
        assert!((g.to_f64().unwrap() - (l2.to_f64() - 0.2)).abs() < 1e-12);
    }
}
