//! Brute-force aggregation of word statistics, and the matching series
//! coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{check_k, Error, Result};
use crate::graph::GridGraph;
use crate::par::Exec;
use crate::polyomino::Polyomino;
use crate::series::{
    gf_degree, gf_graph, gf_hamiltonian, gf_named_total, gf_polyomino, MultiPoly, Total, Vars,
};
use crate::words::enumerate_words;

/// A weighted sum over all words of one length, compared against a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `Σ p^sper q^area`.
    Poly,
    /// `Σ p^edges q^vertices`.
    Graph,
    /// `Σ q2^deg2 q3^deg3 q4^deg4`.
    Degree,
    /// `Σ q^[Hamiltonian]`.
    Ham,
    /// `Σ (sper·p + area·q)`.
    PolyTotals,
    /// `Σ (edges·p + vertices·q)`.
    GraphTotals,
    /// `Σ (deg2·q2 + deg3·q3 + deg4·q4)`.
    DegreeTotals,
    /// `Σ [Hamiltonian]·q`.
    HamTotals,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Poly,
        Family::Graph,
        Family::Degree,
        Family::Ham,
        Family::PolyTotals,
        Family::GraphTotals,
        Family::DegreeTotals,
        Family::HamTotals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Poly => "poly",
            Family::Graph => "graph",
            Family::Degree => "degree",
            Family::Ham => "ham",
            Family::PolyTotals => "poly-totals",
            Family::GraphTotals => "graph-totals",
            Family::DegreeTotals => "degree-totals",
            Family::HamTotals => "ham-totals",
        }
    }

    /// Variables of the aggregated polynomial.
    pub fn vars(self) -> Vars {
        match self {
            Family::Poly | Family::Graph | Family::PolyTotals | Family::GraphTotals => {
                Vars::new(&["p", "q"])
            }
            Family::Degree | Family::DegreeTotals => Vars::new(&["q2", "q3", "q4"]),
            Family::Ham | Family::HamTotals => Vars::new(&["q"]),
        }
    }

    pub fn needs_hamiltonicity(self) -> bool {
        matches!(self, Family::Ham | Family::HamTotals)
    }

    /// Coefficients of `x^1 ..= x^n_max` from the closed-form series.
    pub fn expected(self, k: usize, n_max: usize) -> Result<Vec<MultiPoly>> {
        let vars = self.vars();
        let linear = |parts: &[(Total, usize)]| -> Result<Vec<MultiPoly>> {
            let gens = vars.generators();
            let mut out = vec![MultiPoly::zero(&vars); n_max];
            for &(total, var) in parts {
                let coeffs = gf_named_total(total, k)?.expand(n_max);
                for (slot, c) in out.iter_mut().zip(&coeffs) {
                    *slot = &*slot + gens[var].scale(&c.constant_term());
                }
            }
            Ok(out)
        };
        match self {
            Family::Poly => Ok(gf_polyomino(k)?.expand(n_max)),
            Family::Graph => Ok(gf_graph(k)?.expand(n_max)),
            Family::Degree => Ok(gf_degree(k)?.expand(n_max)),
            Family::Ham => Ok(gf_hamiltonian(k)?.expand(n_max)),
            Family::PolyTotals => linear(&[(Total::Perimeter, 0), (Total::Area, 1)]),
            Family::GraphTotals => linear(&[(Total::Edges, 0), (Total::Vertices, 1)]),
            Family::DegreeTotals => linear(&[(Total::Deg2, 0), (Total::Deg3, 1), (Total::Deg4, 2)]),
            Family::HamTotals => linear(&[(Total::Ham, 0)]),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown family {s:?}")))
    }
}

/// Every statistic of one word's polyomino and graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordStats {
    pub word: String,
    pub area: usize,
    pub sper: usize,
    pub ver: usize,
    pub edg: usize,
    pub deg: [usize; 3],
    /// `None` when the Hamiltonicity search was not requested.
    pub ham: Option<bool>,
}

impl WordStats {
    pub fn new(w: &crate::Word, with_ham: bool) -> Result<Self> {
        let p = Polyomino::from_word(w)?;
        let g = GridGraph::from_polyomino(&p);
        let ham = if with_ham {
            Some(g.is_hamiltonian()?)
        } else {
            None
        };
        Ok(WordStats {
            word: w.to_ascii(),
            area: p.area(),
            sper: p.semiperimeter(),
            ver: g.vertex_count(),
            edg: g.edge_count(),
            deg: g.degree_profile()?.as_array(),
            ham,
        })
    }

    /// This word's contribution to the family's sum.
    pub fn weight(&self, family: Family) -> MultiPoly {
        let vars = family.vars();
        let e = |x: usize| x as u32;
        let one = BigInt::from(1);
        let mono = |exps: Vec<u32>| MultiPoly::monomial(&vars, one.clone(), exps);
        let lin = |ws: &[usize]| {
            let mut acc = MultiPoly::zero(&vars);
            for (g, &w) in vars.generators().iter().zip(ws) {
                acc = acc + g * (w as i64);
            }
            acc
        };
        let ham = || self.ham.expect("Hamiltonicity computed for ham families") as usize;
        match family {
            Family::Poly => mono(vec![e(self.sper), e(self.area)]),
            Family::Graph => mono(vec![e(self.edg), e(self.ver)]),
            Family::Degree => mono(self.deg.iter().map(|&d| e(d)).collect()),
            Family::Ham => mono(vec![e(ham())]),
            Family::PolyTotals => lin(&[self.sper, self.area]),
            Family::GraphTotals => lin(&[self.edg, self.ver]),
            Family::DegreeTotals => lin(&self.deg),
            Family::HamTotals => lin(&[ham()]),
        }
    }
}

/// Statistics of every word of length `n`, in lexicographic word order.
pub fn brute_stats(n: usize, k: usize, with_ham: bool, exec: Exec) -> Result<Vec<WordStats>> {
    let words = enumerate_words(n, k)?;
    exec.map(&words, |w| WordStats::new(w, with_ham))
        .into_iter()
        .collect()
}

/// The family's weighted sum over all words of length `n`, or `None` when
/// the family needs Hamiltonicity and `n` exceeds `ham_cap`.
pub fn brute_stats_poly(
    n: usize,
    k: usize,
    family: Family,
    ham_cap: usize,
    exec: Exec,
) -> Result<Option<MultiPoly>> {
    check_k(k)?;
    if n < 1 {
        return Err(Error::Parameter(format!("length must be ≥ 1, got {n}")));
    }
    if family.needs_hamiltonicity() && n > ham_cap {
        return Ok(None);
    }
    let stats = brute_stats(n, k, family.needs_hamiltonicity(), exec)?;
    let vars = family.vars();
    Ok(Some(stats.iter().fold(MultiPoly::zero(&vars), |acc, s| {
        acc + s.weight(family)
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: usize, k: usize, family: Family) -> String {
        brute_stats_poly(n, k, family, 14, Exec::default())
            .unwrap()
            .unwrap()
            .to_string()
    }

    #[test]
    fn pinned_terms() {
        assert_eq!(
            brute(3, 3, Family::Poly),
            "p^4*q^3 + 3*p^5*q^4 + 2*p^5*q^5 + p^6*q^5"
        );
        assert_eq!(brute(1, 2, Family::Graph), "p^4*q^4 + p^7*q^6");
        assert_eq!(
            brute(2, 3, Family::Degree),
            "q2^4*q3^2 + 2*q2^5*q3^2*q4 + q2^4*q3^4*q4"
        );
        assert_eq!(brute(2, 2, Family::PolyTotals), "8*q + 11*p");
    }

    #[test]
    fn ham_cap_skips() {
        assert!(brute_stats_poly(5, 2, Family::Ham, 4, Exec::Sequential)
            .unwrap()
            .is_none());
        assert!(brute_stats_poly(5, 2, Family::Poly, 4, Exec::Sequential)
            .unwrap()
            .is_some());
        assert!(brute_stats_poly(0, 2, Family::Poly, 4, Exec::Sequential).is_err());
        assert!(brute_stats_poly(3, 1, Family::Poly, 4, Exec::Sequential).is_err());
    }

    #[test]
    fn every_family_matches_its_series() {
        for family in Family::ALL {
            for k in 2..=4 {
                let expected = family.expected(k, 7).unwrap();
                for n in 1..=7 {
                    let got = brute_stats_poly(n, k, family, 14, Exec::default())
                        .unwrap()
                        .unwrap();
                    assert_eq!(got, expected[n - 1], "{family} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("cubes".parse::<Family>().is_err());
    }
}
