//! Subcommand bodies. Each returns the full rendered output so the process
//! writes stdout once.

use std::fmt::Write as _;

use clap::ValueEnum;
use kbonacci::formulas::{
    degree_proportion_limit, DegreeTotals, FibSeq, RatioReport, SequenceName,
};
use kbonacci::graph::GridGraph;
use kbonacci::polyomino::Polyomino;
use kbonacci::series::{
    gf_degree, gf_graph, gf_hamiltonian, gf_named_total, gf_polyomino, RationalGF, Total,
};
use kbonacci::verify::{
    brute_stats, render_csv, render_json, render_text, run_suite, Suite, VerifyOptions, WordStats,
};
use kbonacci::words::{count_words, enumerate_words};
use kbonacci::Exec;
use serde_json::{json, Value};

use crate::{
    AsymptoticsArgs, CliError, CountArgs, EnumerateArgs, Format, Output, SequenceArg, SequenceArgs,
    SeriesArgs, SeriesFamily, SuiteArg, VerifyArgs,
};

type Result<T> = std::result::Result<T, CliError>;

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

pub fn count(a: &CountArgs, fmt: Format) -> Result<String> {
    let c = count_words(a.n, a.k)?;
    Ok(match fmt {
        Format::Text => format!("{c}\n"),
        Format::Json => pretty(&json!({ "n": a.n, "k": a.k, "count": c.to_string() })),
        Format::Csv => format!("n,k,count\n{},{},{c}\n", a.n, a.k),
    })
}

fn ham_cell(s: &WordStats) -> String {
    s.ham.map_or_else(|| "-".to_string(), |h| h.to_string())
}

pub fn enumerate(a: &EnumerateArgs, fmt: Format, ham_cap: usize) -> Result<String> {
    if fmt == Format::Csv && (a.draw || a.dot) {
        return Err(CliError::Usage(
            "--draw and --dot need text or json output".into(),
        ));
    }
    let words = enumerate_words(a.n, a.k)?;
    let stats = if a.with_stats {
        Some(brute_stats(a.n, a.k, a.n <= ham_cap, Exec::default())?)
    } else {
        None
    };
    let drawing = |w: &kbonacci::Word| -> Result<(String, String)> {
        let p = Polyomino::from_word(w)?;
        let g = GridGraph::from_polyomino(&p);
        Ok((p.render(), g.to_dot(&format!("w{}", w.to_ascii()))))
    };
    let mut out = String::new();
    match fmt {
        Format::Text => {
            let width = a.n.max(4);
            if stats.is_some() {
                let _ = writeln!(
                    out,
                    "{:<width$}  area  sper  ver  edg  d2  d3  d4  ham",
                    "word"
                );
            }
            for (i, w) in words.iter().enumerate() {
                match &stats {
                    Some(s) => {
                        let s = &s[i];
                        let _ = writeln!(
                            out,
                            "{:<width$}  {:>4}  {:>4}  {:>3}  {:>3}  {:>2}  {:>2}  {:>2}  {}",
                            w.to_string(),
                            s.area,
                            s.sper,
                            s.ver,
                            s.edg,
                            s.deg[0],
                            s.deg[1],
                            s.deg[2],
                            ham_cell(s)
                        );
                    }
                    None => {
                        let _ = writeln!(out, "{w}");
                    }
                }
                if a.draw || a.dot {
                    let (picture, dot) = drawing(w)?;
                    if a.draw {
                        out.push_str(&picture);
                        out.push('\n');
                    }
                    if a.dot {
                        out.push_str(&dot);
                    }
                }
            }
        }
        Format::Json => {
            let mut rows = Vec::with_capacity(words.len());
            for (i, w) in words.iter().enumerate() {
                let mut row = json!({ "word": w.to_ascii() });
                if let Some(s) = &stats {
                    let s = &s[i];
                    row["area"] = json!(s.area);
                    row["sper"] = json!(s.sper);
                    row["ver"] = json!(s.ver);
                    row["edg"] = json!(s.edg);
                    row["deg"] = json!(s.deg);
                    row["ham"] = json!(s.ham);
                }
                if a.draw || a.dot {
                    let (picture, dot) = drawing(w)?;
                    if a.draw {
                        row["drawing"] = json!(picture);
                    }
                    if a.dot {
                        row["dot"] = json!(dot);
                    }
                }
                rows.push(row);
            }
            out = pretty(&Value::Array(rows));
        }
        Format::Csv => {
            out.push_str(if stats.is_some() {
                "word,area,sper,ver,edg,d2,d3,d4,ham\n"
            } else {
                "word\n"
            });
            for (i, w) in words.iter().enumerate() {
                match &stats {
                    Some(s) => {
                        let s = &s[i];
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{},{},{},{},{}",
                            w.to_ascii(),
                            s.area,
                            s.sper,
                            s.ver,
                            s.edg,
                            s.deg[0],
                            s.deg[1],
                            s.deg[2],
                            ham_cell(s)
                        );
                    }
                    None => {
                        let _ = writeln!(out, "{}", w.to_ascii());
                    }
                }
            }
        }
    }
    Ok(out)
}

fn series_gf(family: SeriesFamily, k: usize) -> Result<RationalGF> {
    let total = |t| gf_named_total(t, k);
    Ok(match family {
        SeriesFamily::Poly => gf_polyomino(k)?,
        SeriesFamily::Graph => gf_graph(k)?,
        SeriesFamily::Degree => gf_degree(k)?,
        SeriesFamily::Ham => gf_hamiltonian(k)?,
        SeriesFamily::Area => total(Total::Area)?,
        SeriesFamily::Perimeter => total(Total::Perimeter)?,
        SeriesFamily::Vertices => total(Total::Vertices)?,
        SeriesFamily::Edges => total(Total::Edges)?,
        SeriesFamily::Deg2 => total(Total::Deg2)?,
        SeriesFamily::Deg3 => total(Total::Deg3)?,
        SeriesFamily::Deg4 => total(Total::Deg4)?,
        SeriesFamily::HamTotal => total(Total::Ham)?,
    })
}

pub fn series(a: &SeriesArgs, fmt: Format) -> Result<String> {
    if a.terms < 1 {
        return Err(CliError::Usage("--terms must be at least 1".into()));
    }
    let mut gf = series_gf(a.family, a.k)?;
    if !a.vars_at_1.is_empty() {
        gf = gf.specialize_at_one(&a.vars_at_1)?;
    }
    let coeffs = gf.expand(a.terms);
    Ok(match fmt {
        Format::Text => coeffs.iter().map(|c| format!("{c}\n")).collect(),
        Format::Json => {
            let rows: Vec<Value> = coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| json!({ "n": i + 1, "text": c.to_string(), "terms": c.to_json_terms() }))
                .collect();
            pretty(&json!({
                "family": value_name(&a.family),
                "k": a.k,
                "vars": gf.aux_vars(),
                "coefficients": rows,
            }))
        }
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for (i, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{},{c}", i + 1);
            }
            out
        }
    })
}

pub fn verify(a: &VerifyArgs, fmt: Format, ham_cap: usize) -> Result<Output> {
    let suite = match a.suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Poly => Suite::Poly,
        SuiteArg::Graph => Suite::Graph,
        SuiteArg::Degree => Suite::Degree,
        SuiteArg::Ham => Suite::Ham,
        SuiteArg::Formulas => Suite::Formulas,
        SuiteArg::Reversal => Suite::Reversal,
    };
    let opts = VerifyOptions {
        ham_cap,
        exec: if a.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        },
        timings: !a.no_timings,
        ..VerifyOptions::new(a.max_n, a.max_k)
    };
    let summary = run_suite(suite, &opts)?;
    let text = match fmt {
        Format::Text => render_text(&summary),
        Format::Json => render_json(&summary),
        Format::Csv => render_csv(&summary),
    };
    Ok(Output {
        text,
        ok: summary.is_success(),
    })
}

pub fn asymptotics(a: &AsymptoticsArgs, fmt: Format) -> Result<String> {
    let degrees: Vec<usize> = match a.degree {
        Some(i) => {
            degree_proportion_limit(i)?;
            vec![i]
        }
        None => vec![2, 3, 4],
    };
    let totals = DegreeTotals::new(a.n)?;
    let mut reports = Vec::new();
    for &i in &degrees {
        reports.push(RatioReport::new(&totals, i, a.n)?);
    }
    let sum = if degrees.len() == 3 {
        let mut s = totals.ratio(2, a.n)?;
        s += totals.ratio(3, a.n)?;
        s += totals.ratio(4, a.n)?;
        Some(s.to_string())
    } else {
        None
    };
    Ok(match fmt {
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(out, "degree: {}", r.degree);
                let _ = writeln!(out, "n: {}", r.n);
                let _ = writeln!(out, "ratio: {}", r.ratio);
                let _ = writeln!(out, "ratio_decimal: {}", r.ratio_decimal);
                let _ = writeln!(out, "limit: {}", r.limit);
                let _ = writeln!(out, "limit_decimal: {}", r.limit_decimal);
                let _ = writeln!(out, "gap: {}", r.gap_decimal);
                out.push('\n');
            }
            if let Some(s) = &sum {
                let _ = writeln!(out, "sum_of_ratios: {s}");
            }
            out
        }
        Format::Json => {
            let mut v = json!({ "n": a.n, "reports": reports });
            if let Some(s) = sum {
                v["sum_of_ratios"] = json!(s);
            }
            pretty(&v)
        }
        Format::Csv => {
            let mut out = String::from("degree,n,ratio_decimal,limit,limit_decimal,gap\n");
            for r in &reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.degree, r.n, r.ratio_decimal, r.limit, r.limit_decimal, r.gap_decimal
                );
            }
            out
        }
    })
}

pub fn sequence(a: &SequenceArgs, fmt: Format) -> Result<String> {
    let name = match a.name {
        SequenceArg::T => SequenceName::Poly(FibSeq::T),
        SequenceArg::V => SequenceName::Poly(FibSeq::V),
        SequenceArg::D2 => SequenceName::Poly(FibSeq::D2),
        SequenceArg::D3 => SequenceName::Poly(FibSeq::D3),
        SequenceArg::D4 => SequenceName::Poly(FibSeq::D4),
        SequenceArg::Area => SequenceName::Area,
        SequenceArg::Narayana => SequenceName::Narayana,
    };
    let value = name.value(a.n)?.to_string();
    Ok(match fmt {
        Format::Text => format!("{value}\n"),
        Format::Json => pretty(&json!({ "sequence": name.name(), "n": a.n, "value": value })),
        Format::Csv => format!("sequence,n,value\n{},{},{value}\n", name.name(), a.n),
    })
}
