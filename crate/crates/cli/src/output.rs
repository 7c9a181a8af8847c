//! CSV and SVG writers.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use tridm::experiments::{Quantity, SweepTable, ValidationReport};
use tridm::model::PartitionId;

use crate::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Column suffixes in output order.
pub const COLUMNS: [(&str, Quantity); 5] = [
    ("C", Quantity::Concurrence),
    ("N", Quantity::Negativity),
    ("EF", Quantity::Eof),
    ("purity", Quantity::Purity),
    ("Inon", Quantity::InfoNonlocal),
];

/// 12 significant digits.
pub fn format_value(v: f64) -> String {
    format!("{v:.11e}")
}

fn format_cell(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), format_value)
}

pub fn header_line(table: &SweepTable) -> String {
    let cfg = &table.config;
    let p = &cfg.params;
    format!(
        "# tri-dm v{VERSION}; propagator={}; info_mode={}; params: alpha={},gamma={},kappa={},omega={},dz={}",
        cfg.propagator,
        cfg.info_mode,
        p.alpha(),
        p.gamma(),
        p.kappa(),
        p.omega(),
        p.dz()
    )
}

pub fn csv_string(table: &SweepTable) -> String {
    let mut out = String::new();
    out.push_str(&header_line(table));
    out.push('\n');
    out.push_str(table.config.axis.name());
    for part in &table.config.partitions {
        for (suffix, _) in COLUMNS {
            let _ = write!(out, ",{part}_{suffix}");
        }
    }
    out.push('\n');
    for row in &table.rows {
        out.push_str(&format_value(row.x));
        for &part in &table.config.partitions {
            let m = row.get(part);
            for (_, q) in COLUMNS {
                out.push(',');
                out.push_str(&format_cell(m.and_then(|m| q.of(m))));
            }
        }
        out.push('\n');
    }
    out
}

fn io_error(path: &Path, source: io::Error) -> CliError {
    CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| io_error(path, e))
}

/// Writes the table as CSV to `path`, or to standard output for `None`.
pub fn emit_csv(table: &SweepTable, path: Option<&Path>) -> Result<(), CliError> {
    let text = csv_string(table);
    match path {
        Some(path) => write_file(path, &text),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| io_error(Path::new("<stdout>"), e)),
    }
}

/// A parsed CSV: axis name, column names, and rows with `None` for NA.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedCsv {
    pub header: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
}

pub fn parse_csv(text: &str) -> Result<ParsedCsv, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty file")?.to_string();
    if !header.starts_with("# tri-dm v") {
        return Err(format!("unexpected header line: {header}"));
    }
    let columns: Vec<String> = lines
        .next()
        .ok_or("missing column header")?
        .split(',')
        .map(str::to_string)
        .collect();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let row = line
            .split(',')
            .map(|cell| match cell {
                "NA" => Ok(None),
                _ => cell
                    .parse()
                    .map(Some)
                    .map_err(|_| format!("row {i}: bad cell '{cell}'")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != columns.len() {
            return Err(format!(
                "row {i}: {} cells for {} columns",
                row.len(),
                columns.len()
            ));
        }
        rows.push(row);
    }
    Ok(ParsedCsv {
        header,
        columns,
        rows,
    })
}

pub fn validation_csv_string(report: &ValidationReport) -> String {
    let mut out = format!("# tri-dm v{VERSION}; closed-form validation\n");
    out.push_str(
        "kappa,dz,t,pair,trace_deviation,hermiticity_deviation,min_eigenvalue,\
         distance_exact,distance_factorized,factorized_vs_exact,convention_matches\n",
    );
    for r in &report.records {
        let rep = &r.report;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            format_value(r.kappa),
            format_value(r.dz),
            format_value(r.t),
            r.pair,
            format_value(rep.trace_deviation),
            format_value(rep.hermiticity_deviation),
            format_value(rep.min_eigenvalue),
            format_value(rep.distance_exact),
            format_value(rep.distance_factorized),
            format_value(r.factorized_vs_exact),
            rep.convention_matches,
        );
    }
    out
}

pub fn validation_summary(report: &ValidationReport) -> String {
    let g = &report.grids;
    let mut out = format!(
        "closed-form validation: {} records ({} kappa x {} dz x {} t x 3 pairs)\n",
        report.records.len(),
        g.kappas.len(),
        g.dzs.len(),
        g.ts.len()
    );
    let _ = writeln!(
        out,
        "{:<4} {:>12} {:>12} {:>12} {:>14} {:>14} {:>14} {:>14}",
        "pair",
        "max|tr-1|",
        "max herm",
        "min eig",
        "max d(exact)",
        "mean d(exact)",
        "max d(fact)",
        "max fact-exact"
    );
    for s in &report.summaries {
        let _ = writeln!(
            out,
            "{:<4} {:>12.4e} {:>12.4e} {:>12.4e} {:>14.4e} {:>14.4e} {:>14.4e} {:>14.4e}",
            s.pair.label(),
            s.trace_deviation.max,
            s.hermiticity_deviation.max,
            s.min_eigenvalue,
            s.distance_exact.max,
            s.distance_exact.mean,
            s.distance_factorized.max,
            s.factorized_vs_exact.max
        );
    }
    let verdict = if report.oracle_consistent() {
        "oracle-consistent"
    } else {
        "NOT oracle-consistent"
    };
    let _ = writeln!(
        out,
        "commuting limit (dz = 0): {} records, max factorized-vs-exact distance {:.3e}: {verdict}",
        report.commuting_limit_records, report.commuting_limit_max
    );
    out
}

pub fn emit_validation(report: &ValidationReport, path: &Path) -> Result<(), CliError> {
    write_file(path, &validation_csv_string(report))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotGroup {
    Entanglement,
    Information,
}

impl PlotGroup {
    fn label(self) -> &'static str {
        match self {
            PlotGroup::Entanglement => "entanglement",
            PlotGroup::Information => "information",
        }
    }

    fn series(self) -> &'static [(&'static str, Quantity, &'static str)] {
        match self {
            PlotGroup::Entanglement => &[
                ("C", Quantity::Concurrence, "#1f77b4"),
                ("N", Quantity::Negativity, "#d62728"),
                ("E_F", Quantity::Eof, "#2ca02c"),
            ],
            PlotGroup::Information => &[("I_non", Quantity::InfoNonlocal, "#9467bd")],
        }
    }

    pub fn for_partition(part: PartitionId) -> &'static [PlotGroup] {
        if part.is_pair() {
            &[PlotGroup::Entanglement, PlotGroup::Information]
        } else {
            &[PlotGroup::Information]
        }
    }
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 36.0;
const BOTTOM: f64 = 52.0;
const X_TICKS: usize = 5;
const Y_TICKS: usize = 4;

/// One line chart of a partition's quantifiers against the swept variable.
pub fn render_svg(table: &SweepTable, part: PartitionId, group: PlotGroup) -> String {
    let xs = table.xs();
    let (x0, x1) = match (xs.first(), xs.last()) {
        (Some(&a), Some(&b)) if b > a => (a, b),
        (Some(&a), _) => (a, a + 1.0),
        _ => (0.0, 1.0),
    };
    let y1 = match group {
        PlotGroup::Entanglement => 1.0,
        PlotGroup::Information => part.n_qubits() as f64,
    };
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + (x - x0) / (x1 - x0) * plot_w;
    let py = |y: f64| TOP + plot_h - (y.clamp(0.0, y1) / y1) * plot_h;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="22" font-family="sans-serif" font-size="14" text-anchor="middle">{} {}</text>"#,
        WIDTH / 2.0,
        part,
        group.label()
    );

    // Axes.
    let (bx, by) = (LEFT, TOP + plot_h);
    let _ = writeln!(
        s,
        r#"<g id="axes" stroke="black" stroke-width="1"><line x1="{bx}" y1="{by}" x2="{}" y2="{by}"/><line x1="{bx}" y1="{by}" x2="{bx}" y2="{TOP}"/></g>"#,
        LEFT + plot_w
    );
    let _ = writeln!(
        s,
        r#"<g id="ticks" font-family="sans-serif" font-size="11">"#
    );
    for k in 0..=X_TICKS {
        let v = x0 + (x1 - x0) * k as f64 / X_TICKS as f64;
        let x = px(v);
        let _ = writeln!(
            s,
            r#"<line x1="{x:.3}" y1="{by}" x2="{x:.3}" y2="{}" stroke="black"/><text x="{x:.3}" y="{}" text-anchor="middle">{v:.2}</text>"#,
            by + 5.0,
            by + 18.0
        );
    }
    for k in 0..=Y_TICKS {
        let v = y1 * k as f64 / Y_TICKS as f64;
        let y = py(v);
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{y:.3}" x2="{bx}" y2="{y:.3}" stroke="black"/><text x="{}" y="{:.3}" text-anchor="end">{v:.2}</text>"#,
            bx - 5.0,
            bx - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 10.0,
        table.config.axis.name()
    );

    for &(_, q, color) in group.series() {
        let ys = table.series(part, q);
        let points: Vec<String> = xs
            .iter()
            .zip(&ys)
            .map(|(&x, &y)| {
                format!(
                    "{:.3},{:.3}",
                    px(x),
                    py(if y.is_finite() { y } else { 0.0 })
                )
            })
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            points.join(" ")
        );
    }

    let _ = writeln!(
        s,
        r#"<g id="legend" font-family="sans-serif" font-size="12">"#
    );
    for (k, &(name, _, color)) in group.series().iter().enumerate() {
        let y = TOP + 12.0 + 16.0 * k as f64;
        let x = LEFT + plot_w - 70.0;
        let _ = writeln!(
            s,
            r#"<line x1="{x}" y1="{y}" x2="{}" y2="{y}" stroke="{color}" stroke-width="2"/><text x="{}" y="{}">{name}</text>"#,
            x + 20.0,
            x + 26.0,
            y + 4.0
        );
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

/// Path of the SVG for one partition and group, next to the CSV.
pub fn svg_path(csv_path: &Path, part: PartitionId, group: PlotGroup) -> PathBuf {
    let stem = csv_path
        .file_stem()
        .map_or_else(|| "plot".into(), |s| s.to_string_lossy().into_owned());
    csv_path.with_file_name(format!("{stem}_{part}_{}.svg", group.label()))
}

/// Writes one SVG per partition and group; returns the paths written.
pub fn emit_svg(table: &SweepTable, csv_path: &Path) -> Result<Vec<PathBuf>, CliError> {
    if table.rows.is_empty() {
        return Err(CliError::Usage("cannot plot an empty table".into()));
    }
    let mut written = Vec::new();
    for &part in &table.config.partitions {
        for &group in PlotGroup::for_partition(part) {
            let path = svg_path(csv_path, part, group);
            write_file(&path, &render_svg(table, part, group))?;
            written.push(path);
        }
    }
    Ok(written)
}
