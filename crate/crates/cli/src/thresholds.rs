use std::fmt::Write as _;

use kinteg::thresholds::{threshold_table, ThresholdTable};
use serde::Serialize;

use crate::output::{self, csv_row, Format, SCHEMA_VERSION};
use crate::{exit, ThresholdsArgs};

#[derive(Serialize)]
struct ThresholdsReport {
    schema_version: u32,
    command: &'static str,
    r: u64,
    n: u64,
    rows: Vec<ThresholdTable>,
}

pub fn run(args: &ThresholdsArgs) -> anyhow::Result<u8> {
    let rows = (1..=args.kmax)
        .map(|k| threshold_table(args.r, args.n, k))
        .collect::<Result<Vec<_>, _>>()?;
    let report = ThresholdsReport {
        schema_version: SCHEMA_VERSION,
        command: "thresholds",
        r: args.r,
        n: args.n,
        rows,
    };
    let text = match args.format {
        Format::Json => output::json(&report)?,
        Format::Csv => csv(&report),
        Format::Text => text(&report),
    };
    output::emit(&text, None)?;
    Ok(exit::OK)
}

fn csv(report: &ThresholdsReport) -> String {
    let mut out = csv_row(["k", "bridges_lower", "bridges_upper", "exact", "central"]);
    for row in &report.rows {
        out.push_str(&csv_row([
            row.k.to_string(),
            row.bridges.lower().to_string(),
            row.bridges.upper().to_string(),
            row.bridges.is_exact().to_string(),
            row.central.to_string(),
        ]));
    }
    out
}

fn text(report: &ThresholdsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "r = {}, n = {}", report.r, report.n);
    for row in &report.rows {
        let _ = writeln!(out, "k={}  B {}  C {}", row.k, row.bridges, row.central);
    }
    out
}
