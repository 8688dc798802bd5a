//! The individual checks, grouped into suites. Each check is an independent
//! cell; a run evaluates all cells with one [`Exec`] and keeps cell order.

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::oracle::{brute_stats_poly, Family};
use super::{CheckReport, Status, Suite, VerifyOptions};
use crate::error::Result;
use crate::formulas::{
    certificate_sweep, count_polyominoes_by_area, degree_proportion_limit, fib_convolution,
    narayana, total_area_closed, DegreeTotals, FibSeq, Relation,
};
use crate::graph::GridGraph;
use crate::par::Exec;
use crate::polyomino::Polyomino;
use crate::series::{
    gf_degree, gf_graph, gf_hamiltonian, gf_named_total, gf_polyomino, total_source,
    total_weight_series, MultiPoly, Total, Vars,
};
use crate::words::enumerate_words;

/// `(status, expected, actual)`.
type Outcome = (Status, String, String);

type Job = Box<dyn Fn(Exec) -> Result<Outcome> + Send + Sync>;

pub(super) struct Cell {
    family: String,
    k: usize,
    n: usize,
    job: Job,
}

impl Cell {
    fn new(
        family: impl Into<String>,
        k: usize,
        n: usize,
        job: impl Fn(Exec) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Cell {
            family: family.into(),
            k,
            n,
            job: Box::new(job),
        }
    }

    fn run(&self, exec: Exec, timings: bool) -> CheckReport {
        let start = Instant::now();
        let (status, expected, actual) = match (self.job)(exec) {
            Ok(outcome) => outcome,
            Err(e) => (Status::Fail, "no error".to_string(), format!("error: {e}")),
        };
        let elapsed_ms = if timings {
            (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
        } else {
            0.0
        };
        CheckReport {
            family: self.family.clone(),
            k: self.k,
            n: self.n,
            status,
            expected,
            actual,
            elapsed_ms,
        }
    }
}

/// Runs the cells and returns reports in cell order.
pub(super) fn run_cells(cells: &[Cell], opts: &VerifyOptions) -> Vec<CheckReport> {
    // cells are the parallel unit; work inside a cell stays sequential
    opts.exec
        .map(cells, |c| c.run(Exec::Sequential, opts.timings))
}

fn compare<T: PartialEq + ToString>(expected: T, actual: T) -> Outcome {
    let status = if expected == actual {
        Status::Pass
    } else {
        Status::Fail
    };
    (status, expected.to_string(), actual.to_string())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

pub(super) fn cells_for(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Cell>> {
    let mut cells = Vec::new();
    let families: &[Family] = match suite {
        Suite::All => &Family::ALL,
        Suite::Poly => &[Family::Poly, Family::PolyTotals],
        Suite::Graph => &[Family::Graph, Family::GraphTotals],
        Suite::Degree => &[Family::Degree, Family::DegreeTotals],
        Suite::Ham => &[Family::Ham, Family::HamTotals],
        Suite::Formulas | Suite::Reversal => &[],
    };
    cells.extend(family_cells(families, opts)?);
    if matches!(suite, Suite::All | Suite::Ham) {
        cells.extend(ham_parity_cells(opts));
    }
    if matches!(suite, Suite::All | Suite::Formulas) {
        cells.extend(formula_cells(opts));
    }
    if matches!(suite, Suite::All | Suite::Reversal) {
        cells.extend(reversal_cells(opts));
    }
    Ok(cells)
}

fn family_cells(families: &[Family], opts: &VerifyOptions) -> Result<Vec<Cell>> {
    let pairs: Vec<(Family, usize)> = families
        .iter()
        .flat_map(|&f| (2..=opts.max_k).map(move |k| (f, k)))
        .collect();
    pair_cells(&pairs, opts)
}

pub(super) fn family_cells_for(
    family: Family,
    k: usize,
    opts: &VerifyOptions,
) -> Result<Vec<Cell>> {
    pair_cells(&[(family, k)], opts)
}

fn pair_cells(pairs: &[(Family, usize)], opts: &VerifyOptions) -> Result<Vec<Cell>> {
    let expansions = opts.exec.map(pairs, |&(f, k)| f.expected(k, opts.max_n));
    let mut cells = Vec::new();
    for (&(family, k), expected) in pairs.iter().zip(expansions) {
        let expected = Arc::new(expected?);
        for n in 1..=opts.max_n {
            let expected = Arc::clone(&expected);
            let cap = opts.ham_cap;
            cells.push(Cell::new(family.name(), k, n, move |exec| {
                let want = &expected[n - 1];
                Ok(match brute_stats_poly(n, k, family, cap, exec)? {
                    Some(got) => compare(want, &got),
                    None => (
                        Status::Skip,
                        want.to_string(),
                        format!("skipped: n > ham cap {cap}"),
                    ),
                })
            }));
        }
    }
    Ok(cells)
}

/// `H_{2j}(x) = H_{2j+1}(x)` termwise for every pair within `max_k`, both
/// from the closed form and from the `q¹` part of the bivariate series.
fn ham_parity_cells(opts: &VerifyOptions) -> Vec<Cell> {
    let n = opts.max_n;
    (1..)
        .map(|j| 2 * j)
        .take_while(|&k| k < opts.max_k)
        .map(|k| {
            Cell::new("ham-parity", k, n, move |_| {
                let named = |k| -> Result<Vec<BigInt>> {
                    Ok(gf_named_total(Total::Ham, k)?
                        .expand(n)
                        .iter()
                        .map(MultiPoly::constant_term)
                        .collect())
                };
                let from_q = |k| -> Result<Vec<BigInt>> {
                    Ok(gf_hamiltonian(k)?
                        .expand(n)
                        .iter()
                        .map(|c| c.coefficient(&[1]))
                        .collect())
                };
                let (even, odd) = (named(k)?, named(k + 1)?);
                let status = if even == odd && from_q(k)? == even && from_q(k + 1)? == odd {
                    Status::Pass
                } else {
                    Status::Fail
                };
                Ok((status, join(&even), join(&odd)))
            })
        })
        .collect()
}

fn q_vars() -> Vars {
    Vars::new(&["q"])
}

fn formula_cells(opts: &VerifyOptions) -> Vec<Cell> {
    let mut cells = Vec::new();
    let max_n = opts.max_n;

    // t and v: recurrence, closed form and series coefficient all agree
    for (seq, family) in [(FibSeq::T, "t"), (FibSeq::V, "v")] {
        cells.push(Cell::new(family, 2, max_n, move |_| {
            let gf = match seq {
                FibSeq::T => gf_polyomino(2)?,
                _ => gf_graph(2)?,
            };
            let series = gf.expand(max_n);
            let rec = seq.recurrence().terms(max_n);
            let closed = (1..=max_n)
                .map(|n| seq.closed(n))
                .collect::<Result<Vec<_>>>()?;
            let status = if rec == series && closed == series {
                Status::Pass
            } else {
                Status::Fail
            };
            Ok((status, join(&series), join(&closed)))
        }));
    }

    // d2, d3, d4: recurrence against the degree series with the other markers at 1
    for (i, seq) in [FibSeq::D2, FibSeq::D3, FibSeq::D4].into_iter().enumerate() {
        cells.push(Cell::new(seq.name(), 2, max_n, move |_| {
            let names = ["q2", "q3", "q4"];
            let others: Vec<&str> = (0..3).filter(|&j| j != i).map(|j| names[j]).collect();
            let series = gf_degree(2)?
                .specialize_at_one(&others)?
                .expand(max_n)
                .into_iter()
                .map(|c| c.with_vars(&q_vars()))
                .collect::<Result<Vec<_>>>()?;
            Ok(compare(join(&series), join(&seq.recurrence().terms(max_n))))
        }));
        cells.push(Cell::new(
            format!("{}-closed", seq.name()),
            2,
            max_n,
            move |_| {
                // the binomial sums for d2 and d4 start at n = 2
                let from = if seq == FibSeq::D3 { 1 } else { 2 };
                let rec: Vec<MultiPoly> = seq.recurrence().terms(max_n).split_off(from - 1);
                let closed = (from..=max_n)
                    .map(|n| seq.closed(n))
                    .collect::<Result<Vec<_>>>()?;
                Ok(compare(join(&rec), join(&closed)))
            },
        ));
    }

    cells.push(Cell::new("area-closed", 2, max_n, move |_| {
        let series: Vec<BigInt> = gf_named_total(Total::Area, 2)?
            .expand(max_n)
            .iter()
            .map(MultiPoly::constant_term)
            .collect();
        let closed = (1..=max_n)
            .map(total_area_closed)
            .collect::<Result<Vec<_>>>()?;
        Ok(compare(join(&series), join(&closed)))
    }));

    cells.push(Cell::new("convolution", 2, max_n, move |_| {
        let values = (0..=max_n)
            .map(fib_convolution)
            .collect::<Result<Vec<_>>>()?;
        Ok((Status::Pass, "closed form".into(), join(&values)))
    }));

    let max_area = max_n.min(18);
    cells.push(Cell::new("narayana", 2, max_area, move |exec| {
        let counted = (1..=max_area)
            .map(|a| count_polyominoes_by_area(a, exec))
            .collect::<Result<Vec<_>>>()?;
        let cows = (2..=max_area + 1)
            .map(narayana)
            .collect::<Result<Vec<_>>>()?;
        Ok(compare(join(&cows), join(&counted)))
    }));

    for rel in Relation::ALL {
        let n_max = max_n.min(20);
        cells.push(Cell::new(
            format!("certificate-{rel}"),
            2,
            n_max,
            move |_| {
                let sweep = certificate_sweep(rel, n_max as i64)?;
                let status = if sweep.failures.is_empty() {
                    Status::Pass
                } else {
                    Status::Fail
                };
                let actual = format!(
                    "holds {} skipped {} fails {:?}",
                    sweep.holds, sweep.skipped, sweep.failures
                );
                Ok((status, "no failures".into(), actual))
            },
        ));
    }

    // totals from the trivariate series agree with the univariate closed forms
    for k in 2..=opts.max_k {
        for total in Total::ALL {
            cells.push(Cell::new(format!("total-{total}"), k, max_n, move |_| {
                let (gf, var) = total_source(total, k)?;
                let by_weight = total_weight_series(&gf, var, max_n)?;
                let named: Vec<BigInt> = gf_named_total(total, k)?
                    .expand(max_n)
                    .iter()
                    .map(MultiPoly::constant_term)
                    .collect();
                Ok(compare(join(&named), join(&by_weight)))
            }));
        }
    }

    const ASYMPTOTIC_N: usize = 2000;
    for i in 2..=4 {
        cells.push(Cell::new(
            format!("limit-deg{i}"),
            2,
            ASYMPTOTIC_N,
            move |_| {
                let totals = DegreeTotals::new(ASYMPTOTIC_N)?;
                let ratio = totals.ratio(i, ASYMPTOTIC_N)?;
                let limit = degree_proportion_limit(i)?;
                let eps = BigRational::new(5.into(), 1000.into());
                let ok = limit.within(&ratio, &eps) && totals.partitions_vertices();
                let status = if ok { Status::Pass } else { Status::Fail };
                Ok((
                    status,
                    format!("{limit} ± 0.005"),
                    crate::formulas::format_decimal(&ratio, 10),
                ))
            },
        ));
    }
    cells
}

/// Reversing a word mirrors its graph and preserves every statistic.
fn reversal_cells(opts: &VerifyOptions) -> Vec<Cell> {
    let mut cells = Vec::new();
    for k in 2..=opts.max_k {
        for n in 1..=opts.max_n {
            cells.push(Cell::new("reversal", k, n, move |_| {
                let mut bad = Vec::new();
                for w in enumerate_words(n, k)? {
                    let r = w.reverse();
                    let (p, pr) = (Polyomino::from_word(&w)?, Polyomino::from_word(&r)?);
                    let g = GridGraph::from_polyomino(&p);
                    let gr = GridGraph::from_polyomino(&pr);
                    let same = p.area() == pr.area()
                        && p.semiperimeter() == pr.semiperimeter()
                        && g.mirrored() == gr;
                    if !same {
                        bad.push(w.to_ascii());
                    }
                }
                let status = if bad.is_empty() {
                    Status::Pass
                } else {
                    Status::Fail
                };
                Ok((status, "[]".into(), format!("{bad:?}")))
            }));
        }
    }
    cells
}
