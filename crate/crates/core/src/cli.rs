//! Command-line front end.
//!
//! [`run`] takes the argument list and the two output streams so the whole
//! thing can be driven from tests; `main` only forwards to it.

use std::ffi::OsString;
use std::f64::consts::SQRT_2;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bound_table, compute_bound, BoundResult, Mode, TableFamily, TableRow};
use crate::catalog::{Catalog, ConstantsClass, SymmetricSpaceSpec};
use crate::constants::{
    c1_from_restricted_roots, classify_real_form, parse_roots, shipped_roots, verify_classification,
    EXCEPTIONAL_REAL_FORMS, SHIPPED_ROOT_IDS, VERIFY_TOLERANCE,
};
use crate::curvature::{max_curvature_poly, CurvatureBound};
use crate::error::Error;
use crate::wang::solve_wang_radius;

pub const EXIT_OK: i32 = 0;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Significant digits when `--digits` is not given.
pub const DEFAULT_DIGITS: u8 = 6;

#[derive(Debug, Parser)]
#[command(name = "orbivol", version, about = "Lower bounds for volumes of locally symmetric orbifolds")]
pub struct Cli {
    /// Extra spaces to register before running the command (TOML).
    #[arg(long, global = true, value_name = "PATH")]
    pub spaces_file: Option<PathBuf>,
    /// Suppress banner lines in text output.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckGroup {
    Wang,
    Curvature,
    Constants,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the catalog.
    List {
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Bound for a single space.
    Bound {
        id: String,
        #[arg(long, default_value = "paper")]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_DIGITS, value_parser = clap::value_parser!(u8).range(1..=15))]
        digits: u8,
    },
    /// Bounds for a family over a range of n, or for the fixed spaces.
    Table {
        /// H or CH
        #[arg(long, required_unless_present = "fixed", conflicts_with = "fixed")]
        family: Option<String>,
        /// Range `a..b` (inclusive) or a single `n`.
        #[arg(long, value_parser = parse_n_range, required_unless_present = "fixed")]
        n: Option<RangeInclusive<u32>>,
        #[arg(long)]
        fixed: bool,
        #[arg(long, default_value = "paper")]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_DIGITS, value_parser = clap::value_parser!(u8).range(1..=15))]
        digits: u8,
    },
    /// Least positive zero of the Wang function.
    SolveWang {
        #[arg(long)]
        c1: f64,
        #[arg(long)]
        c2: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_DIGITS, value_parser = clap::value_parser!(u8).range(1..=15))]
        digits: u8,
    },
    /// Maximum of the curvature polynomial and the resulting bound `k`.
    Curvature {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        c1: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_DIGITS, value_parser = clap::value_parser!(u8).range(1..=15))]
        digits: u8,
    },
    /// Regression checks against the known values.
    Verify {
        #[arg(long, value_enum)]
        only: Option<CheckGroup>,
        /// Restricted-root data to check in addition to the shipped data.
        #[arg(long, value_name = "PATH")]
        roots_file: Option<PathBuf>,
    },
}

fn parse_n_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let bad = || format!("expected `a..b` or `n`, got `{s}`");
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// One bound row as emitted in JSON and CSV.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub space_id: String,
    #[serde(rename = "N")]
    pub n: u32,
    pub d: u32,
    #[serde(rename = "alpha_G")]
    pub alpha_g: u32,
    #[serde(rename = "C1")]
    pub c1: f64,
    #[serde(rename = "C2")]
    pub c2: f64,
    pub r: f64,
    pub k: f64,
    pub integration_limit: f64,
    pub bound_log10: f64,
    pub bound_scientific: String,
    pub mode: Mode,
}

impl OutputRecord {
    pub fn from_result(b: &BoundResult, digits: u8) -> Self {
        OutputRecord {
            space_id: b.space_id.clone(),
            n: b.dim_space,
            d: b.dim_group,
            alpha_g: b.alpha_g,
            c1: b.profile.c1,
            c2: b.profile.c2,
            r: b.r_used,
            k: b.k_used,
            integration_limit: b.limit_used,
            bound_log10: b.bound.log10_mag(),
            bound_scientific: b.bound.to_scientific(usize::from(digits)),
            mode: b.mode,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum OutputRow {
    Ok(OutputRecord),
    Err { space_id: String, error: String },
}

const RECORD_FIELDS: [&str; 12] = [
    "space_id",
    "N",
    "d",
    "alpha_G",
    "C1",
    "C2",
    "r",
    "k",
    "integration_limit",
    "bound_log10",
    "bound_scientific",
    "mode",
];

/// `x` to `digits` significant digits, fixed notation for moderate
/// magnitudes and scientific otherwise.
pub fn format_sig(x: f64, digits: u8) -> String {
    if x == 0.0 || !x.is_finite() {
        return x.to_string();
    }
    let digits = i32::from(digits.max(1));
    let sci = format!("{:.*e}", (digits - 1) as usize, x);
    let exp: i32 = sci.rsplit_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
    if exp < -4 || exp >= digits {
        let (m, _) = sci.split_once('e').unwrap();
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{m}e{sign}{:02}", exp.unsigned_abs());
    }
    format!("{:.*}", (digits - 1 - exp) as usize, x)
}

fn render_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let width = |c: &str| c.chars().count();
    let mut widths: Vec<usize> = header.iter().map(|h| width(h)).collect();
    // short rows (errors) run past the columns and only size the first one
    for row in rows {
        let full = row.len() == header.len();
        for (i, cell) in row.iter().enumerate().take(if full { header.len() } else { 1 }) {
            widths[i] = widths[i].max(width(cell));
        }
    }
    let line = |cells: &[&str]| -> String {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let pad = " ".repeat(widths[i].saturating_sub(width(c)));
                match i {
                    0 => format!("{c}{pad}"),
                    _ if cells.len() < header.len() => c.to_string(),
                    _ => format!("{pad}{c}"),
                }
            })
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header))?;
    for row in rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        writeln!(out, "{}", line(&cells))?;
    }
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()
}

fn emit_rows(out: &mut dyn Write, rows: &[OutputRow], format: Format, digits: u8) -> std::io::Result<()> {
    match format {
        Format::Json => write_json(out, &rows),
        Format::Csv => {
            let any_error = rows.iter().any(|r| matches!(r, OutputRow::Err { .. }));
            let mut header = RECORD_FIELDS.to_vec();
            if any_error {
                header.push("error");
            }
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|row| match row {
                    OutputRow::Ok(r) => {
                        let mut v = vec![
                            r.space_id.clone(),
                            r.n.to_string(),
                            r.d.to_string(),
                            r.alpha_g.to_string(),
                            r.c1.to_string(),
                            r.c2.to_string(),
                            r.r.to_string(),
                            r.k.to_string(),
                            r.integration_limit.to_string(),
                            r.bound_log10.to_string(),
                            r.bound_scientific.clone(),
                            r.mode.to_string(),
                        ];
                        if any_error {
                            v.push(String::new());
                        }
                        v
                    }
                    OutputRow::Err { space_id, error } => {
                        let mut v = vec![space_id.clone()];
                        v.extend(std::iter::repeat_n(String::new(), RECORD_FIELDS.len() - 1));
                        v.push(error.clone());
                        v
                    }
                })
                .collect();
            write_csv(out, &header, &cells)
        }
        Format::Table => {
            let header = ["space", "N", "d", "alpha_G", "C1", "C2", "r", "k", "limit", "bound", "mode"];
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|row| match row {
                    OutputRow::Ok(r) => vec![
                        r.space_id.clone(),
                        r.n.to_string(),
                        r.d.to_string(),
                        r.alpha_g.to_string(),
                        format_sig(r.c1, digits),
                        format_sig(r.c2, digits),
                        format_sig(r.r, digits),
                        format_sig(r.k, digits),
                        format_sig(r.integration_limit, digits),
                        r.bound_scientific.clone(),
                        r.mode.to_string(),
                    ],
                    OutputRow::Err { space_id, error } => vec![space_id.clone(), format!("error: {error}")],
                })
                .collect();
            render_table(out, &header, &cells)
        }
    }
}

#[derive(Debug, Serialize)]
struct ListEntry {
    id: String,
    cartan_label: String,
    #[serde(rename = "N")]
    n: u32,
    d: u32,
    #[serde(rename = "alpha_G")]
    alpha_g: u32,
    real_rank: u32,
    constants_class: ConstantsClass,
}

impl From<&SymmetricSpaceSpec> for ListEntry {
    fn from(s: &SymmetricSpaceSpec) -> Self {
        ListEntry {
            id: s.id.clone(),
            cartan_label: s.cartan_label.to_string(),
            n: s.dim_space,
            d: s.dim_group,
            alpha_g: s.alpha_g,
            real_rank: s.real_rank,
            constants_class: s.constants_class,
        }
    }
}

#[derive(Debug, Serialize)]
struct WangRecord {
    c1: f64,
    c2: f64,
    r_g: f64,
    r_half: f64,
    residual: f64,
}

#[derive(Debug, Serialize)]
struct CurvatureRecord {
    alpha: f64,
    c1: f64,
    poly_max: f64,
    argmax_a: f64,
    argmax_b: f64,
    k: f64,
    gradient_norm: f64,
}

impl CurvatureRecord {
    fn new(b: &CurvatureBound, c1: f64) -> Self {
        CurvatureRecord {
            alpha: b.alpha,
            c1,
            poly_max: b.poly_max,
            argmax_a: b.argmax.0,
            argmax_b: b.argmax.1,
            k: b.poly_max / 4.0 * c1 * c1,
            gradient_norm: b.gradient_norm,
        }
    }
}

/// Emits a list of flat records: JSON array, CSV with header, or an
/// aligned table with `text` cells.
fn emit_records<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    header: &[&str],
    records: &[T],
    text: impl Fn(&T) -> Vec<String>,
) -> std::io::Result<()> {
    match format {
        Format::Json => write_json(out, &records),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r)?;
            }
            w.flush()
        }
        Format::Table => render_table(out, header, &records.iter().map(text).collect::<Vec<_>>()),
    }
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

fn wang_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for (label, c1, c2, scale, want) in [("(1,√2)", 1.0, SQRT_2, 1.0, 0.228), ("(√2,√2)", SQRT_2, SQRT_2, SQRT_2, 0.277)] {
        let name = format!("wang {label}");
        match solve_wang_radius(c1, c2) {
            Ok(w) => {
                let got = w.r_g * scale;
                let what = if scale == 1.0 { "r_g" } else { "r_g·C1" };
                checks.push(Check::new(
                    name,
                    (got - want).abs() <= 1e-3,
                    format!("{what} = {} (expected {want} ± 0.001)", format_sig(got, 6)),
                ));
            }
            Err(e) => checks.push(Check::new(name, false, e.to_string())),
        }
    }
    checks
}

fn curvature_checks() -> Vec<Check> {
    let one = max_curvature_poly(1.0);
    let x = (7.0f64 / 13.0).sqrt();
    let argmax_ok = (one.argmax.0 - x).abs() <= 1e-6 && (one.argmax.1 - x).abs() <= 1e-6;
    let root2 = max_curvature_poly(SQRT_2);
    vec![
        Check::new(
            "poly α=1",
            (one.poly_max - 49.0 / 13.0).abs() <= 1e-9,
            format!("max = {} (expected 49/13 within 1e-9)", format_sig(one.poly_max, 12)),
        ),
        Check::new(
            "poly α=1 argmax",
            argmax_ok,
            format!(
                "at ({}, {}) (expected √(7/13) within 1e-6)",
                format_sig(one.argmax.0, 9),
                format_sig(one.argmax.1, 9)
            ),
        ),
        Check::new(
            "poly α=√2",
            (root2.poly_max - 4.69036).abs() <= 1e-5,
            format!("max = {} (expected 4.69036 ± 1e-5)", format_sig(root2.poly_max, 9)),
        ),
    ]
}

fn dual_norm_check(catalog: &Catalog, id: &str, rrs: &crate::constants::RestrictedRootSystem) -> Check {
    let name = format!("{id} dual-norm");
    let space = match catalog.find(id) {
        Ok(s) => s,
        Err(e) => return Check::new(name, false, e.to_string()),
    };
    match (c1_from_restricted_roots(rrs), verify_classification(&space, rrs)) {
        (Ok(c1), Ok(agrees)) => Check::new(
            name,
            agrees,
            format!(
                "C1 = {} vs class {} (tolerance {VERIFY_TOLERANCE:e})",
                format_sig(c1, 12),
                space.constants_class
            ),
        ),
        (Err(e), _) | (_, Err(e)) => Check::new(name, false, e.to_string()),
    }
}

fn constants_checks(catalog: &Catalog, roots_file: Option<&PathBuf>) -> Result<Vec<Check>, Error> {
    let mut checks: Vec<Check> = SHIPPED_ROOT_IDS
        .iter()
        .map(|id| match shipped_roots(id) {
            Some(rrs) => dual_norm_check(catalog, id, &rrs),
            None => Check::new(format!("{id} dual-norm"), false, Error::NoRootData(id.to_string()).to_string()),
        })
        .collect();

    let mismatches: Vec<&str> = EXCEPTIONAL_REAL_FORMS
        .iter()
        .filter(|f| {
            let expected = if matches!(f.name, "F4(-20)/Spin(9)" | "E6(-26)/F4") {
                ConstantsClass::OneSqrt2
            } else {
                ConstantsClass::EqualSqrt2
            };
            classify_real_form(f) != expected
        })
        .map(|f| f.name)
        .collect();
    checks.push(Check::new(
        "exceptional classification",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{} real forms, C1 = 1 only for FII and EIV", EXCEPTIONAL_REAL_FORMS.len())
        } else {
            format!("mismatch for {}", mismatches.join(", "))
        },
    ));

    if let Some(path) = roots_file {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        let entries = parse_roots(&text).map_err(|e| match e {
            Error::Parse { reason, .. } => Error::Parse {
                path: path.display().to_string(),
                reason,
            },
            other => other,
        })?;
        for entry in entries {
            checks.push(match entry {
                Ok((id, rrs)) => dual_norm_check(catalog, &id, &rrs),
                Err(bad) => Check::new(format!("{} dual-norm", bad.id), false, bad.error.to_string()),
            });
        }
    }
    Ok(checks)
}

struct Context<'a> {
    catalog: Catalog,
    quiet: bool,
    out: &'a mut dyn Write,
}

fn report(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    EXIT_BAD_INPUT
}

fn banner(ctx: &mut Context<'_>, format: Format, what: &str) -> std::io::Result<()> {
    if format == Format::Table && !ctx.quiet {
        writeln!(ctx.out, "# orbivol {}: {what}", env!("CARGO_PKG_VERSION"))?;
    }
    Ok(())
}

fn rows_from_table(rows: Vec<TableRow>, digits: u8) -> Vec<OutputRow> {
    rows.into_iter()
        .map(|row| match row.result {
            Ok(b) => OutputRow::Ok(OutputRecord::from_result(&b, digits)),
            Err(e) => OutputRow::Err {
                space_id: row.space_id,
                error: e.to_string(),
            },
        })
        .collect()
}

fn execute(command: Command, ctx: &mut Context<'_>, err: &mut dyn Write) -> std::io::Result<i32> {
    match command {
        Command::List { max_n, format } => {
            let spaces = match ctx.catalog.list(max_n) {
                Ok(s) => s,
                Err(e) => return Ok(report(err, &e)),
            };
            let entries: Vec<ListEntry> = spaces.iter().map(ListEntry::from).collect();
            banner(ctx, format, &format!("{} spaces", entries.len()))?;
            emit_records(
                ctx.out,
                format,
                &["id", "label", "N", "d", "alpha_G", "rank", "constants"],
                &entries,
                |e| {
                    vec![
                        e.id.clone(),
                        e.cartan_label.clone(),
                        e.n.to_string(),
                        e.d.to_string(),
                        e.alpha_g.to_string(),
                        e.real_rank.to_string(),
                        e.constants_class.to_string(),
                    ]
                },
            )?;
            Ok(EXIT_OK)
        }
        Command::Bound { id, mode, format, digits } => {
            let result = ctx.catalog.find(&id).and_then(|s| compute_bound(&s, mode));
            match result {
                Ok(b) => {
                    banner(ctx, format, &format!("mode {mode}"))?;
                    emit_rows(ctx.out, &[OutputRow::Ok(OutputRecord::from_result(&b, digits))], format, digits)?;
                    Ok(EXIT_OK)
                }
                Err(e) => Ok(report(err, &e)),
            }
        }
        Command::Table { family, n, fixed, mode, format, digits } => {
            let fam = if fixed {
                TableFamily::AllFixed
            } else {
                match family.as_deref().unwrap_or_default().parse::<TableFamily>() {
                    Ok(TableFamily::AllFixed) => TableFamily::AllFixed,
                    Ok(f) => f,
                    Err(e) => return Ok(report(err, &e)),
                }
            };
            let range = n.unwrap_or(1..=1);
            let rows = match bound_table(&ctx.catalog, fam, range, mode) {
                Ok(rows) => rows_from_table(rows, digits),
                Err(e) => return Ok(report(err, &e)),
            };
            banner(ctx, format, &format!("mode {mode}"))?;
            emit_rows(ctx.out, &rows, format, digits)?;
            let failed: Vec<&str> = rows
                .iter()
                .filter_map(|r| match r {
                    OutputRow::Err { space_id, .. } => Some(space_id.as_str()),
                    OutputRow::Ok(_) => None,
                })
                .collect();
            if failed.is_empty() {
                Ok(EXIT_OK)
            } else {
                writeln!(err, "error: no bound for {}", failed.join(", "))?;
                Ok(EXIT_BAD_INPUT)
            }
        }
        Command::SolveWang { c1, c2, format, digits } => match solve_wang_radius(c1, c2) {
            Ok(w) => {
                let rec = WangRecord {
                    c1,
                    c2,
                    r_g: w.r_g,
                    r_half: w.r_half,
                    residual: w.residual,
                };
                emit_records(ctx.out, format, &["C1", "C2", "r_g", "r_half", "residual"], &[rec], |r| {
                    vec![
                        format_sig(r.c1, digits),
                        format_sig(r.c2, digits),
                        format_sig(r.r_g, digits),
                        format_sig(r.r_half, digits),
                        format!("{:.1e}", r.residual),
                    ]
                })?;
                Ok(EXIT_OK)
            }
            Err(e) => Ok(report(err, &e)),
        },
        Command::Curvature { alpha, c1, format, digits } => {
            if !(alpha > 0.0 && alpha.is_finite() && c1 > 0.0 && c1.is_finite()) {
                let e = Error::InvalidArgument(format!("alpha and C1 must be positive, got {alpha} and {c1}"));
                return Ok(report(err, &e));
            }
            let rec = CurvatureRecord::new(&max_curvature_poly(alpha), c1);
            emit_records(ctx.out, format, &["alpha", "C1", "poly_max", "a", "b", "k"], &[rec], |r| {
                vec![
                    format_sig(r.alpha, digits),
                    format_sig(r.c1, digits),
                    format_sig(r.poly_max, digits),
                    format_sig(r.argmax_a, digits),
                    format_sig(r.argmax_b, digits),
                    format_sig(r.k, digits),
                ]
            })?;
            Ok(EXIT_OK)
        }
        Command::Verify { only, roots_file } => {
            let wanted = |g: CheckGroup| only.is_none_or(|o| o == g);
            let mut checks = Vec::new();
            if wanted(CheckGroup::Wang) {
                checks.extend(wang_checks());
            }
            if wanted(CheckGroup::Curvature) {
                checks.extend(curvature_checks());
            }
            if wanted(CheckGroup::Constants) || roots_file.is_some() {
                match constants_checks(&ctx.catalog, roots_file.as_ref()) {
                    Ok(c) => checks.extend(if wanted(CheckGroup::Constants) {
                        c
                    } else {
                        // only the file entries were asked for
                        c.into_iter().skip(SHIPPED_ROOT_IDS.len() + 1).collect()
                    }),
                    Err(e) => return Ok(report(err, &e)),
                }
            }
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(ctx.out, "{tag}  {}: {}", c.name, c.detail)?;
            }
            let passed = checks.iter().filter(|c| c.passed).count();
            writeln!(ctx.out, "{passed}/{} checks passed", checks.len())?;
            if passed == checks.len() {
                Ok(EXIT_OK)
            } else {
                let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                writeln!(err, "verification failed: {}", failed.join(", "))?;
                Ok(EXIT_VERIFY_FAILED)
            }
        }
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let mut catalog = Catalog::builtin();
    if let Some(path) = &cli.spaces_file {
        if let Err(e) = catalog.load_file(path) {
            return report(err, &e);
        }
    }
    let mut ctx = Context {
        catalog,
        quiet: cli.quiet,
        out,
    };
    match execute(cli.command, &mut ctx, err) {
        Ok(code) => code,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_BAD_INPUT
        }
    }
}
