//! Closed-form generating functions of the k-bonacci families.
//!
//! `x` marks word length throughout. The trivariate families mark
//! semiperimeter/area (`p`, `q`) of polyominoes and edges/vertices (`p`, `q`)
//! of graphs; the degree family marks degree-2/3/4 vertex counts
//! (`q2`, `q3`, `q4`); the Hamiltonian family marks `Ham(G)` with `q`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::{MultiPoly, Vars};
use super::rational::RationalGF;
use crate::error::{check_k, Error, Result};

fn vars3(names: [&str; 3]) -> (MultiPoly, MultiPoly, MultiPoly, MultiPoly) {
    let vars = Vars::new(&names);
    let g = vars.generators();
    (
        MultiPoly::constant(&vars, 1),
        g[0].clone(),
        g[1].clone(),
        g[2].clone(),
    )
}

/// Univariate polynomial `Σ c·x^e` in the single variable `x`.
fn univariate(terms: &[(i64, u32)]) -> MultiPoly {
    let vars = Vars::new(&["x"]);
    terms.iter().fold(MultiPoly::zero(&vars), |acc, &(c, e)| {
        acc + MultiPoly::monomial(&vars, BigInt::from(c), vec![e])
    })
}

/// Polyominoes by length, semiperimeter and area, in `(x, p, q)`.
pub fn gf_polyomino(k: usize) -> Result<RationalGF> {
    check_k(k)?;
    let (one, x, p, q) = vars3(["x", "p", "q"]);
    let k = k as u32;
    let num = p.pow(2)
        * ((&q + &p * q.pow(2)) * &x
            - (&p * q.pow(3) - p.pow(2) * q.pow(3)) * x.pow(2)
            - p.pow(k) * q.pow(2 * k) * x.pow(k)
            - p.pow(k + 1) * q.pow(2 * k + 1) * x.pow(k + 1));
    let den = &one - (&p * &q + &p * q.pow(2)) * &x
        + (p.pow(2) * q.pow(3) - p.pow(3) * q.pow(3)) * x.pow(2)
        + p.pow(k + 2) * q.pow(2 * k + 1) * x.pow(k + 1);
    RationalGF::new(num, den)
}

/// Graphs by length, edge count and vertex count, in `(x, p, q)`.
pub fn gf_graph(k: usize) -> Result<RationalGF> {
    check_k(k)?;
    let (one, x, p, q) = vars3(["x", "p", "q"]);
    let k = k as u32;
    let num = p.pow(2)
        * q.pow(3)
        * ((p.pow(2) * &q + p.pow(5) * q.pow(3)) * &x
            - (p.pow(7) * q.pow(4) - p.pow(8) * q.pow(5)) * x.pow(2)
            - p.pow(5 * k) * q.pow(3 * k) * x.pow(k)
            - p.pow(5 * k + 3) * q.pow(3 * k + 2) * x.pow(k + 1));
    let den = &one - (p.pow(3) * q.pow(2) + p.pow(5) * q.pow(3)) * &x
        + (p.pow(8) * q.pow(5) - p.pow(9) * q.pow(6)) * x.pow(2)
        + p.pow(5 * k + 4) * q.pow(3 * k + 3) * x.pow(k + 1);
    RationalGF::new(num, den)
}

/// Graphs by length and degree profile, in `(x, q2, q3, q4)`.
///
/// The closed form carries an overall `1/q4`; every numerator term has a
/// factor `q4`, so it is divided out here and no negative exponents arise.
pub fn gf_degree(k: usize) -> Result<RationalGF> {
    check_k(k)?;
    let vars = Vars::new(&["x", "q2", "q3", "q4"]);
    let g = vars.generators();
    let one = MultiPoly::constant(&vars, 1);
    let (x, q2, q3, q4) = (&g[0], &g[1], &g[2], &g[3]);
    let k = k as u32;
    let num = q2.pow(4)
        * ((q3.pow(2) * q4 + q4) * x
            - (q3.pow(2) * q4.pow(2) - q2 * q3.pow(2) * q4.pow(2) * 2 + q3.pow(4) * q4) * x.pow(2)
            - q3.pow(2 * k) * q4.pow(k) * x.pow(k)
            + (q3.pow(2 * k + 2) * q4.pow(k) - q2 * q3.pow(2 * k) * q4.pow(k + 1) * 2)
                * x.pow(k + 1));
    let den = &one - (q3.pow(2) + q4 * q3.pow(2)) * x
        + (q4 * q3.pow(4) - q2.pow(2) * q4.pow(2) * q3.pow(2)) * x.pow(2)
        + q2.pow(2) * q4.pow(k + 1) * q3.pow(2 * k) * x.pow(k + 1);
    RationalGF::new(num.div_var_power(3, 1)?, den)
}

/// Graphs by length and Hamiltonicity indicator, in `(x, q)`.
pub fn gf_hamiltonian(k: usize) -> Result<RationalGF> {
    check_k(k)?;
    let vars = Vars::new(&["x", "q"]);
    let g = vars.generators();
    let one = MultiPoly::constant(&vars, 1);
    let (x, q) = (&g[0], &g[1]);
    let half = (k / 2) as u32;
    let half_below = ((k - 1) / 2) as u32;
    let k = k as u32;
    let words_den = &one - x * 2 + x.pow(k + 1);
    let num = x
        * ((&one - x) * x * (&one - x.pow(2 * half_below))
            - q * (&one + x) * &words_den * (-&one * 2 + x + x.pow(2 * half)));
    let den = words_den * (&one - x - x.pow(2) * 2 + x.pow(3) + x.pow(2 * half + 2));
    RationalGF::new(num, den)
}

/// Univariate totals: the sum of one statistic over all objects of each length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Total {
    Area,
    Perimeter,
    Vertices,
    Edges,
    Deg2,
    Deg3,
    Deg4,
    Ham,
}

impl Total {
    pub const ALL: [Total; 8] = [
        Total::Area,
        Total::Perimeter,
        Total::Vertices,
        Total::Edges,
        Total::Deg2,
        Total::Deg3,
        Total::Deg4,
        Total::Ham,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Total::Area => "area",
            Total::Perimeter => "perimeter",
            Total::Vertices => "vertices",
            Total::Edges => "edges",
            Total::Deg2 => "deg2",
            Total::Deg3 => "deg3",
            Total::Deg4 => "deg4",
            Total::Ham => "ham",
        }
    }
}

impl fmt::Display for Total {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Total {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Total::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown total {s:?}")))
    }
}

/// `(1 − 2x + x^{k+1})²`, the squared word-count denominator.
fn squared_word_den(k: i64, two: i64) -> MultiPoly {
    let base = univariate(&[(1, 0), (-2, 1), (two, k as u32 + 1)]);
    &base * &base
}

/// The closed-form univariate generating function of a total.
pub fn gf_named_total(total: Total, k: usize) -> Result<RationalGF> {
    check_k(k)?;
    let kk = k as i64;
    let e = k as u32;
    let den = squared_word_den(kk, 1);
    let num = match total {
        Total::Area => univariate(&[(3, 1), (-2 * kk, e), (-2 * (2 - kk), e + 1), (1, 2 * e + 1)]),
        Total::Perimeter => univariate(&[
            (5, 1),
            (-5, 2),
            (-(2 + kk), e),
            (-(1 - kk), e + 1),
            (4, e + 2),
            (-1, 2 * e + 2),
        ]),
        Total::Vertices => univariate(&[
            (10, 1),
            (-9, 2),
            (-3 * (1 + kk), e),
            (-(4 - 3 * kk), e + 1),
            (8, e + 2),
            (-2, 2 * e + 2),
        ]),
        Total::Edges => univariate(&[
            (11, 1),
            (-5, 2),
            (-(2 + 5 * kk), e),
            (-(9 - 5 * kk), e + 1),
            (4, e + 2),
            (2, 2 * e + 1),
            (-1, 2 * e + 2),
        ]),
        Total::Deg2 => {
            univariate(&[
                (4, 1),
                (-7, 2),
                (-2, e),
                (1, e + 1),
                (7, e + 2),
                (-1, 2 * e + 1),
                (-2, 2 * e + 2),
            ]) * 2
        }
        Total::Deg3 => {
            univariate(&[
                (1, 1),
                (1, 2),
                (-kk, e),
                (-(1 - kk), e + 1),
                (-2, e + 2),
                (1, 2 * e + 2),
            ]) * 2
        }
        Total::Deg4 => deg4_numerator(kk),
        Total::Ham => {
            let half = 2 * (k / 2) as u32;
            let num = univariate(&[(1, 1), (1, 2)]) * univariate(&[(2, 0), (-1, 1), (-1, half)]);
            let den = univariate(&[(1, 0), (-1, 1), (-2, 2), (1, 3), (1, half + 2)]);
            return RationalGF::new(num, den);
        }
    };
    RationalGF::new(num, den)
}

fn deg4_numerator(k: i64) -> MultiPoly {
    let e = k as u32;
    univariate(&[
        (3, 2),
        (1 - k, e),
        (-(4 - k), e + 1),
        (-2, e + 2),
        (2, 2 * e + 1),
    ])
}

/// The degree-4 total over the alternative denominator `(1 − 2x + 2x^{k+1})²`.
/// The brute-force oracle rejects it; it is kept so the adjudication stays
/// reproducible.
pub fn gf_deg4_total_alt_denominator(k: usize) -> Result<RationalGF> {
    check_k(k)?;
    RationalGF::new(deg4_numerator(k as i64), squared_word_den(k as i64, 2))
}

/// The trivariate family a total is derived from, and the marker variable
/// whose coefficientwise derivative at 1 gives the total.
pub fn total_source(total: Total, k: usize) -> Result<(RationalGF, &'static str)> {
    Ok(match total {
        Total::Area => (gf_polyomino(k)?, "q"),
        Total::Perimeter => (gf_polyomino(k)?, "p"),
        Total::Vertices => (gf_graph(k)?, "q"),
        Total::Edges => (gf_graph(k)?, "p"),
        Total::Deg2 => (gf_degree(k)?, "q2"),
        Total::Deg3 => (gf_degree(k)?, "q3"),
        Total::Deg4 => (gf_degree(k)?, "q4"),
        Total::Ham => (gf_hamiltonian(k)?, "q"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::total_weight_series;

    fn coeff(gf: &RationalGF, n: usize) -> String {
        gf.expand(n)[n - 1].to_string()
    }

    #[test]
    fn polyomino_coefficients() {
        let f3 = gf_polyomino(3).unwrap();
        assert_eq!(coeff(&f3, 1), "p^2*q + p^3*q^2");
        assert_eq!(coeff(&f3, 3), "p^4*q^3 + 3*p^5*q^4 + 2*p^5*q^5 + p^6*q^5");
        assert_eq!(
            coeff(&f3, 4),
            "p^5*q^4 + 4*p^6*q^5 + 3*p^6*q^6 + 3*p^7*q^6 + 2*p^7*q^7"
        );
        assert_eq!(coeff(&gf_polyomino(2).unwrap(), 2), "p^3*q^2 + 2*p^4*q^3");
        assert!(gf_polyomino(1).is_err());
    }

    #[test]
    fn graph_coefficients() {
        let g3 = gf_graph(3).unwrap();
        assert_eq!(coeff(&g3, 1), "p^4*q^4 + p^7*q^6");
        assert_eq!(coeff(&g3, 2), "p^7*q^6 + 2*p^10*q^8 + p^12*q^9");
        assert_eq!(
            coeff(&g3, 3),
            "p^10*q^8 + 3*p^13*q^10 + 2*p^15*q^11 + p^16*q^12"
        );
    }

    #[test]
    fn degree_coefficients() {
        let d3 = gf_degree(3).unwrap();
        assert_eq!(coeff(&d3, 1), "q2^4 + q2^4*q3^2");
        assert_eq!(coeff(&d3, 2), "q2^4*q3^2 + 2*q2^5*q3^2*q4 + q2^4*q3^4*q4");
        assert_eq!(
            coeff(&d3, 3),
            "q2^4*q3^4 + 2*q2^5*q3^4*q4 + q2^6*q3^2*q4^2 + 2*q2^5*q3^4*q4^2 + q2^6*q3^4*q4^2"
        );
        for k in 2..=6 {
            let first = &gf_degree(k).unwrap().expand(1)[0];
            assert_eq!(first.value_at_one(), BigInt::from(2));
        }
    }

    #[test]
    fn hamiltonian_coefficients() {
        let h3 = gf_hamiltonian(3).unwrap();
        // only 11 fails among 00, 01, 10, 11
        assert_eq!(coeff(&h3, 2), "1 + 3*q");
        let h2 = gf_hamiltonian(2).unwrap();
        for (n, c) in h2.expand(8).iter().enumerate() {
            let count = crate::words::count_words(n + 1, 2).unwrap();
            assert_eq!(c.to_string(), format!("{count}*q"));
        }
    }

    #[test]
    fn numerators_start_at_x1() {
        for k in 2..=6 {
            let mut gfs = vec![
                gf_polyomino(k).unwrap(),
                gf_graph(k).unwrap(),
                gf_degree(k).unwrap(),
                gf_hamiltonian(k).unwrap(),
            ];
            gfs.extend(Total::ALL.iter().map(|&t| gf_named_total(t, k).unwrap()));
            for gf in gfs {
                assert!(gf.numerator().slices(0)[0].is_zero());
                assert!(gf.nonnegative_up_to(12));
            }
        }
    }

    #[test]
    fn named_totals() {
        let first = |t: Total, k: usize, n: usize| -> Vec<BigInt> {
            gf_named_total(t, k)
                .unwrap()
                .expand(n)
                .iter()
                .map(|c| c.constant_term())
                .collect()
        };
        assert_eq!(first(Total::Area, 2, 2), [3.into(), 8.into()]);
        assert_eq!(
            first(Total::Ham, 2, 4),
            [2.into(), 3.into(), 5.into(), 8.into()]
        );
        assert_eq!(first(Total::Deg3, 2, 1), [BigInt::from(2)]);
        assert_eq!("deg4".parse::<Total>().unwrap(), Total::Deg4);
        assert!("volume".parse::<Total>().is_err());
    }

    #[test]
    fn total_weights_of_polyomino_family() {
        let f2 = gf_polyomino(2).unwrap();
        assert_eq!(
            total_weight_series(&f2, "q", 2).unwrap(),
            [3.into(), 8.into()]
        );
        assert_eq!(total_weight_series(&f2, "p", 1).unwrap(), [BigInt::from(5)]);
    }
}
