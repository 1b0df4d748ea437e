use std::fmt::Write as _;
use std::ops::RangeInclusive;

use chowcalc_core::dsl::{evaluate, parse, render, Mode, ValueKind};
use chowcalc_core::theorems::{
    abc_csv, abc_table, generic_identities, lambda_classes, nodal_presentation, smooth_presentation, verify_degree,
    AbcRow, DegreeRecord, GenericRecord, NodalRegime, SmoothRegime, TautologicalReport,
};
use chowcalc_core::{PresentationReport, Rational};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::Format;

/// Rendered output and whether every check passed.
pub struct Report {
    pub body: String,
    pub pass: bool,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit status 2.
    Usage(String),
    /// Parse or evaluation failure; exit status 1.
    Failure(String),
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn no_csv(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage(format!(
            "csv output is only available for table, not {command}"
        )));
    }
    Ok(())
}

fn run_pool<T: Send>(jobs: usize, ds: RangeInclusive<u64>, f: impl Fn(u64) -> T + Sync + Send) -> Vec<(u64, T)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let ds: Vec<u64> = ds.collect();
    let mut out: Vec<(u64, T)> = pool.install(|| ds.par_iter().map(|&d| (d, f(d))).collect());
    out.sort_by_key(|(d, _)| *d);
    out
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn opt_mark(v: Option<bool>) -> &'static str {
    v.map_or("-", mark)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    generic: &'a GenericRecord,
    records: Vec<&'a DegreeRecord>,
    pass: bool,
}

pub fn verify(ds: RangeInclusive<u64>, jobs: usize, format: Format) -> Result<Report, CliError> {
    no_csv(format, "verify")?;
    let generic = generic_identities();
    let records: Vec<DegreeRecord> = run_pool(jobs, ds, |d| verify_degree(d).expect("d >= 1"))
        .into_iter()
        .map(|(_, r)| r)
        .collect();
    let pass = generic.pass && records.iter().all(|r| r.pass);
    let body = match format {
        Format::Json => json(&VerifyJson {
            generic: &generic,
            records: records.iter().collect(),
            pass,
        }),
        _ => {
            let mut s = String::new();
            let g = &generic;
            writeln!(
                s,
                "generic: smooth_formulas={} nodal_formulas={} syzygy={} delta={}",
                mark(g.smooth_formulas),
                mark(g.nodal_formulas),
                mark(g.syzygy),
                mark(g.delta)
            )
            .unwrap();
            for r in &records {
                writeln!(
                    s,
                    "d={:<3} coherence={} syzygy={} smooth={} nodal={} truncation={} lambda={} => {}",
                    r.d,
                    mark(r.coherence),
                    mark(r.syzygy),
                    mark(r.smooth.pass),
                    mark(r.nodal.pass),
                    opt_mark(r.truncation.map(|t| t.pass())),
                    mark(r.lambda.pass()),
                    if r.pass { "PASS" } else { "FAIL" }
                )
                .unwrap();
            }
            let passed = records.iter().filter(|r| r.pass).count();
            writeln!(s, "{passed}/{} degrees pass", records.len()).unwrap();
            s
        }
    };
    Ok(Report { body, pass })
}

#[derive(Serialize)]
struct PresentRecord {
    d: u64,
    smooth_quotient: &'static str,
    smooth: PresentationReport,
    nodal_quotient: &'static str,
    nodal: PresentationReport,
    pass: bool,
}

pub fn present(ds: RangeInclusive<u64>, jobs: usize, format: Format) -> Result<Report, CliError> {
    no_csv(format, "present")?;
    let records: Vec<PresentRecord> = run_pool(jobs, ds, |d| {
        let smooth = smooth_presentation(d).expect("d >= 1");
        let nodal = nodal_presentation(d).expect("d >= 1");
        PresentRecord {
            d,
            smooth_quotient: SmoothRegime::of(d).quotient(),
            nodal_quotient: NodalRegime::of(d).quotient(),
            pass: smooth.pass && nodal.pass,
            smooth,
            nodal,
        }
    })
    .into_iter()
    .map(|(_, r)| r)
    .collect();
    let pass = records.iter().all(|r| r.pass);
    let body = match format {
        Format::Json => json(&serde_json::json!({ "records": records, "pass": pass })),
        _ => {
            let mut s = String::new();
            for r in &records {
                for (name, quotient, rep) in [
                    ("smooth", r.smooth_quotient, &r.smooth),
                    ("nodal", r.nodal_quotient, &r.nodal),
                ] {
                    writeln!(
                        s,
                        "d={:<3} {name:<6} {quotient:<32} ideal={} dims={:?} => {}",
                        r.d,
                        mark(rep.ideal_equal),
                        rep.graded_dims,
                        if rep.pass { "PASS" } else { "FAIL" }
                    )
                    .unwrap();
                }
            }
            s
        }
    };
    Ok(Report { body, pass })
}

pub fn table(ds: RangeInclusive<u64>, jobs: usize, format: Format) -> Result<Report, CliError> {
    let (from, to) = (*ds.start(), *ds.end());
    abc_table(from, to).map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<AbcRow> = run_pool(jobs, ds, |d| abc_table(d, d).expect("checked range").remove(0))
        .into_iter()
        .map(|(_, r)| r)
        .collect();
    let body = match format {
        Format::Csv => abc_csv(&rows),
        Format::Json => json(&rows),
        Format::Text => {
            let mut s = format!("{:>4} {:>16} {:>16} {:>16}\n", "d", "A", "B", "C");
            for r in &rows {
                writeln!(
                    s,
                    "{:>4} {:>16} {:>16} {:>16}",
                    r.d,
                    r.a.to_string(),
                    r.b.to_string(),
                    r.c.to_string()
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Report { body, pass: true })
}

fn text_lambda(r: &TautologicalReport) -> String {
    let mut s = String::new();
    writeln!(s, "d = {}  genus = {}", r.d, r.genus).unwrap();
    writeln!(s, "delta   = {}", r.delta).unwrap();
    for (i, (raw, red)) in [
        (&r.lambda1, &r.lambda1_reduced),
        (&r.lambda2, &r.lambda2_reduced),
        (&r.lambda3, &r.lambda3_reduced),
    ]
    .into_iter()
    .enumerate()
    {
        writeln!(s, "lambda{} = {raw}", i + 1).unwrap();
        writeln!(s, "        = {red}  (mod nodal relations)").unwrap();
    }
    if let Some([a, b, c]) = &r.abc {
        writeln!(s, "A, B, C = {a}, {b}, {c}").unwrap();
    }
    let c = &r.checks;
    writeln!(
        s,
        "checks: delta={} lambda1={} lambda2={} lambda3={} cross_multiplied={} mumford={}",
        mark(c.delta),
        mark(c.lambda1),
        mark(c.lambda2),
        mark(c.lambda3),
        opt_mark(c.lambda3_cross_multiplied),
        opt_mark(c.mumford)
    )
    .unwrap();
    s
}

pub fn lambda(d: u64, format: Format) -> Result<Report, CliError> {
    no_csv(format, "lambda")?;
    let r = lambda_classes(d).map_err(|e| CliError::Usage(e.to_string()))?;
    let body = match format {
        Format::Json => json(&r),
        _ => text_lambda(&r),
    };
    Ok(Report { body, pass: r.pass })
}

pub fn eval(src: &str, d: Option<&str>, format: Format) -> Result<Report, CliError> {
    no_csv(format, "eval")?;
    let mode = match d {
        None => Mode::Generic,
        Some(s) => Mode::At(
            s.trim()
                .parse::<Rational>()
                .map_err(|_| CliError::Usage(format!("invalid value for --d: '{s}'")))?,
        ),
    };
    let expr = parse(src).map_err(|e| CliError::Failure(e.to_string()))?;
    let value = evaluate(&expr, &mode).map_err(|e| CliError::Failure(e.to_string()))?;
    let body = match format {
        Format::Json => json(&serde_json::json!({
            "expr": render(&expr),
            "mode": match &mode {
                Mode::Generic => "generic".to_string(),
                Mode::At(d) => format!("d={d}"),
            },
            "kind": match value.kind() {
                ValueKind::Class => "class",
                ValueKind::Base => "base",
            },
            "value": value.to_string(),
        })),
        _ => format!("{value}\n"),
    };
    Ok(Report { body, pass: true })
}
