//! Coefficient sequences of the Fibonacci (`k = 2`) families: second-order
//! recurrences and binomial closed forms.

use num_bigint::BigInt;
use num_traits::Zero;

use super::binomial;
use crate::error::{Error, Result};
use crate::series::{MultiPoly, Vars};

/// `a_n = c1·a_{n−1} + c2·a_{n−2}` for `n ≥ 3`, from `a_1` and `a_2`.
#[derive(Debug, Clone)]
pub struct SecondOrder {
    pub c1: MultiPoly,
    pub c2: MultiPoly,
    pub first: MultiPoly,
    pub second: MultiPoly,
}

impl SecondOrder {
    /// `a_1 ..= a_n`.
    pub fn terms(&self, n: usize) -> Vec<MultiPoly> {
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let next = match i {
                0 => self.first.clone(),
                1 => self.second.clone(),
                _ => &self.c1 * &out[i - 1] + &self.c2 * &out[i - 2],
            };
            out.push(next);
        }
        out
    }

    pub fn term(&self, n: usize) -> Result<MultiPoly> {
        if n < 1 {
            return Err(Error::Parameter(format!(
                "sequence index must be ≥ 1, got {n}"
            )));
        }
        Ok(self.terms(n).pop().expect("n ≥ 1"))
    }

    /// `(a_n(1), a_n'(1))` for `n = 1 ..= n_max`, for a sequence in one
    /// variable: the recurrence is run on first-order jets at 1, so the degree
    /// of `a_n` never matters.
    pub fn jets_at_one(&self, n_max: usize) -> Vec<(BigInt, BigInt)> {
        assert_eq!(self.c1.vars().len(), 1, "jets need a univariate sequence");
        let jet = |p: &MultiPoly| (p.value_at_one(), p.weight_at_one(0));
        let mul =
            |a: &(BigInt, BigInt), b: &(BigInt, BigInt)| (&a.0 * &b.0, &a.0 * &b.1 + &a.1 * &b.0);
        let (c1, c2) = (jet(&self.c1), jet(&self.c2));
        let mut out: Vec<(BigInt, BigInt)> = Vec::with_capacity(n_max);
        for i in 0..n_max {
            let next = match i {
                0 => jet(&self.first),
                1 => jet(&self.second),
                _ => {
                    let (a, b) = (mul(&c1, &out[i - 1]), mul(&c2, &out[i - 2]));
                    (a.0 + b.0, a.1 + b.1)
                }
            };
            out.push(next);
        }
        out
    }
}

fn pq() -> Vars {
    Vars::new(&["p", "q"])
}

fn q_only() -> Vars {
    Vars::new(&["q"])
}

fn mono(vars: &Vars, c: impl Into<BigInt>, exps: &[u32]) -> MultiPoly {
    MultiPoly::monomial(vars, c.into(), exps.to_vec())
}

/// Fibonacci sequences with both a recurrence and a binomial closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FibSeq {
    /// `t_n(p, q)`: semiperimeter/area of polyominoes.
    T,
    /// `v_n(p, q)`: edges/vertices of graphs.
    V,
    /// `d_{n,2}(q)`: degree-2 vertex counts.
    D2,
    /// `d_{n,3}(q)`.
    D3,
    /// `d_{n,4}(q)`.
    D4,
}

impl FibSeq {
    pub const ALL: [FibSeq; 5] = [FibSeq::T, FibSeq::V, FibSeq::D2, FibSeq::D3, FibSeq::D4];

    pub fn name(self) -> &'static str {
        match self {
            FibSeq::T => "t",
            FibSeq::V => "v",
            FibSeq::D2 => "d2",
            FibSeq::D3 => "d3",
            FibSeq::D4 => "d4",
        }
    }

    /// The recurrence with brute-force-confirmed initial values.
    pub fn recurrence(self) -> SecondOrder {
        match self {
            FibSeq::T => {
                let v = pq();
                SecondOrder {
                    c1: mono(&v, 1, &[1, 1]),
                    c2: mono(&v, 1, &[3, 3]),
                    first: mono(&v, 1, &[2, 1]) + mono(&v, 1, &[3, 2]),
                    second: mono(&v, 1, &[3, 2]) + mono(&v, 2, &[4, 3]),
                }
            }
            FibSeq::V => {
                let v = pq();
                SecondOrder {
                    c1: mono(&v, 1, &[3, 2]),
                    c2: mono(&v, 1, &[9, 6]),
                    first: mono(&v, 1, &[4, 4]) + mono(&v, 1, &[7, 6]),
                    second: mono(&v, 1, &[7, 6]) + mono(&v, 2, &[10, 8]),
                }
            }
            FibSeq::D2 => {
                let v = q_only();
                SecondOrder {
                    c1: mono(&v, 1, &[0]),
                    c2: mono(&v, 1, &[2]),
                    first: mono(&v, 2, &[4]),
                    second: mono(&v, 1, &[4]) + mono(&v, 2, &[5]),
                }
            }
            FibSeq::D3 => {
                let v = q_only();
                SecondOrder {
                    c1: mono(&v, 1, &[2]),
                    c2: mono(&v, 1, &[2]),
                    first: mono(&v, 1, &[2]) + mono(&v, 1, &[0]),
                    second: mono(&v, 3, &[2]),
                }
            }
            FibSeq::D4 => {
                let v = q_only();
                SecondOrder {
                    c1: mono(&v, 1, &[0]),
                    c2: mono(&v, 1, &[2]),
                    first: mono(&v, 2, &[0]),
                    second: mono(&v, 1, &[0]) + mono(&v, 2, &[1]),
                }
            }
        }
    }

    pub fn value(self, n: usize) -> Result<MultiPoly> {
        self.recurrence().term(n)
    }

    pub fn closed(self, n: usize) -> Result<MultiPoly> {
        if n < 1 {
            return Err(Error::Parameter(format!(
                "sequence index must be ≥ 1, got {n}"
            )));
        }
        let n = n as i64;
        match self {
            FibSeq::T => Ok(fib_binomial_sum(n, |i| [n + i + 1, n + i])),
            FibSeq::V => Ok(fib_binomial_sum(n, |i| {
                [3 * n + 1 + 3 * i, 2 * n + 2 + 2 * i]
            })),
            FibSeq::D2 => {
                let v = q_only();
                let mut out = MultiPoly::zero(&v);
                for i in 1..=n {
                    let c = binomial(n - 1 - i.div_euclid(2), (i - 1).div_euclid(2))
                        + binomial(n - 2 - (i - 1).div_euclid(2), (i - 2).div_euclid(2));
                    out = out + MultiPoly::monomial(&v, c, vec![(i + 3) as u32]);
                }
                Ok(out)
            }
            FibSeq::D3 => {
                let v = q_only();
                let mut out = MultiPoly::zero(&v);
                for i in 0..=n {
                    let a = binomial(n - i - 1, i);
                    if !a.is_zero() {
                        let e = (2 * (n - 1 - i)) as u32;
                        out = out + mono(&v, a.clone(), &[e]) + mono(&v, a, &[e + 2]);
                    }
                    // the (2q² − q⁴) part shifts by q^{2(n−2−i)}
                    let b = binomial(n - i - 2, i);
                    if !b.is_zero() {
                        let e = (2 * (n - 2 - i)) as u32;
                        out = out + mono(&v, b.clone() * 2, &[e + 2]) - mono(&v, b, &[e + 4]);
                    }
                }
                Ok(out)
            }
            FibSeq::D4 => {
                let v = q_only();
                let mut out = MultiPoly::zero(&v);
                for i in 0..=n + 2 {
                    let c = binomial(n - 1 - (i - 2).div_euclid(2), (i - 3).div_euclid(2))
                        + binomial(n - 2 - (i - 3).div_euclid(2), (i - 4).div_euclid(2));
                    if c.is_zero() {
                        continue;
                    }
                    if i < 3 {
                        return Err(Error::Invariant(format!(
                            "d4 closed form has a surviving q^{} term at n = {n}",
                            i - 3
                        )));
                    }
                    out = out + MultiPoly::monomial(&v, c, vec![(i - 3) as u32]);
                }
                Ok(out)
            }
        }
    }
}

/// `Σ_{i=0}^{⌊(n+1)/2⌋} C(n+1−i, i) p^a q^b` with `[a, b] = exps(i)`.
fn fib_binomial_sum(n: i64, exps: impl Fn(i64) -> [i64; 2]) -> MultiPoly {
    let v = pq();
    let mut out = MultiPoly::zero(&v);
    for i in 0..=(n + 1) / 2 {
        let [a, b] = exps(i);
        out = out + MultiPoly::monomial(&v, binomial(n + 1 - i, i), vec![a as u32, b as u32]);
    }
    out
}

pub fn t_poly(n: usize) -> Result<MultiPoly> {
    FibSeq::T.value(n)
}

pub fn t_poly_closed(n: usize) -> Result<MultiPoly> {
    FibSeq::T.closed(n)
}

pub fn v_poly(n: usize) -> Result<MultiPoly> {
    FibSeq::V.value(n)
}

pub fn v_poly_closed(n: usize) -> Result<MultiPoly> {
    FibSeq::V.closed(n)
}

pub fn d2_poly(n: usize) -> Result<MultiPoly> {
    FibSeq::D2.value(n)
}

/// Valid for `n ≥ 2`; at `n = 1` the sum yields `q^4` instead of `2q^4`.
pub fn d2_poly_closed(n: usize) -> Result<MultiPoly> {
    FibSeq::D2.closed(n)
}

pub fn d3_poly(n: usize) -> Result<MultiPoly> {
    FibSeq::D3.value(n)
}

pub fn d3_poly_closed(n: usize) -> Result<MultiPoly> {
    FibSeq::D3.closed(n)
}

pub fn d4_poly(n: usize) -> Result<MultiPoly> {
    FibSeq::D4.value(n)
}

/// Valid for `n ≥ 2`; at `n = 1` the sum yields `1` instead of `2`.
pub fn d4_poly_closed(n: usize) -> Result<MultiPoly> {
    FibSeq::D4.closed(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GridGraph;
    use crate::polyomino::Polyomino;
    use crate::words::enumerate_words;

    /// Σ over Fibonacci words of length n of `weight(w)` as a monomial.
    fn brute(n: usize, vars: &Vars, weight: impl Fn(&crate::Word) -> Vec<u32>) -> MultiPoly {
        enumerate_words(n, 2)
            .unwrap()
            .iter()
            .fold(MultiPoly::zero(vars), |acc, w| {
                acc + MultiPoly::monomial(vars, 1.into(), weight(w))
            })
    }

    fn graph(w: &crate::Word) -> GridGraph {
        GridGraph::from_word(w).unwrap()
    }

    #[test]
    fn pinned_values() {
        assert_eq!(t_poly(1).unwrap().to_string(), "p^2*q + p^3*q^2");
        assert_eq!(t_poly(2).unwrap().to_string(), "p^3*q^2 + 2*p^4*q^3");
        assert_eq!(v_poly(1).unwrap().to_string(), "p^4*q^4 + p^7*q^6");
        assert_eq!(v_poly(2).unwrap().to_string(), "p^7*q^6 + 2*p^10*q^8");
        assert_eq!(d2_poly(1).unwrap().to_string(), "2*q^4");
        assert_eq!(d3_poly(1).unwrap().to_string(), "1 + q^2");
        assert_eq!(d4_poly(1).unwrap().to_string(), "2");
        assert!(t_poly(0).is_err());
        assert!(d3_poly_closed(0).is_err());
    }

    #[test]
    fn recurrences_match_brute_force() {
        for n in 1..=12 {
            let pqv = pq();
            let qv = q_only();
            let t = brute(n, &pqv, |w| {
                let p = Polyomino::from_word(w).unwrap();
                vec![p.semiperimeter() as u32, p.area() as u32]
            });
            assert_eq!(t_poly(n).unwrap(), t);
            let v = brute(n, &pqv, |w| {
                let g = graph(w);
                vec![g.edge_count() as u32, g.vertex_count() as u32]
            });
            assert_eq!(v_poly(n).unwrap(), v);
            let profile = |w: &crate::Word| graph(w).degree_profile().unwrap().as_array();
            assert_eq!(
                d2_poly(n).unwrap(),
                brute(n, &qv, |w| vec![profile(w)[0] as u32])
            );
            assert_eq!(
                d3_poly(n).unwrap(),
                brute(n, &qv, |w| vec![profile(w)[1] as u32])
            );
            assert_eq!(
                d4_poly(n).unwrap(),
                brute(n, &qv, |w| vec![profile(w)[2] as u32])
            );
        }
    }

    #[test]
    fn closed_forms_agree() {
        for n in 1..=30 {
            assert_eq!(t_poly_closed(n).unwrap(), t_poly(n).unwrap(), "t {n}");
            assert_eq!(v_poly_closed(n).unwrap(), v_poly(n).unwrap(), "v {n}");
            assert_eq!(d3_poly_closed(n).unwrap(), d3_poly(n).unwrap(), "d3 {n}");
            if n >= 2 {
                assert_eq!(d2_poly_closed(n).unwrap(), d2_poly(n).unwrap(), "d2 {n}");
                assert_eq!(d4_poly_closed(n).unwrap(), d4_poly(n).unwrap(), "d4 {n}");
            }
        }
        assert_eq!(d2_poly_closed(1).unwrap().to_string(), "q^4");
        assert_eq!(d4_poly_closed(1).unwrap().to_string(), "1");
    }

    #[test]
    fn jets_match_full_polynomials() {
        for seq in [FibSeq::D2, FibSeq::D3, FibSeq::D4] {
            let rec = seq.recurrence();
            let polys = rec.terms(40);
            let jets = rec.jets_at_one(40);
            for (p, j) in polys.iter().zip(&jets) {
                assert_eq!((p.value_at_one(), p.weight_at_one(0)), j.clone());
            }
        }
    }
}
