use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{bail, Context};
use kinteg::metrics::{self, Certificate, Distance};
use kinteg::thresholds::{self, SegregationVerdict, Threshold};
use kinteg::LabeledGraph;
use serde::Serialize;

use crate::output::{self, csv_row, Format, SCHEMA_VERSION};
use crate::{exit, AnalyzeArgs};

const LISTED: usize = 10;

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub certificate: Certificate,
    pub community_sizes: BTreeMap<String, usize>,
    pub localized: bool,
    pub verdicts: Vec<VerdictOut>,
    pub reach: Option<ReachOut>,
    pub thresholds: Option<Vec<ThresholdRow>>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct VerdictOut {
    pub k: u32,
    pub integrated: bool,
    pub witness: Option<WitnessOut>,
}

#[derive(Serialize)]
pub struct WitnessOut {
    pub a: String,
    pub b: String,
    pub distance: Distance,
    pub unreachable: bool,
}

/// How many nodes each node reaches within `k` steps, itself included.
#[derive(Serialize)]
pub struct ReachOut {
    pub k: u32,
    pub min: usize,
    pub max: usize,
    pub per_node: BTreeMap<String, usize>,
}

#[derive(Serialize)]
pub struct ThresholdRow {
    pub k: u32,
    pub bridges: Threshold,
    pub central: u64,
    pub counts: SegregationVerdict,
}

pub fn run(args: &AnalyzeArgs) -> anyhow::Result<u8> {
    let labeled = LabeledGraph::read(&args.edges, &args.communities).context("reading network")?;
    let report = build(&labeled, &args.ks, args.localize, args.strict_model)?;
    let text = match args.format {
        Format::Json => output::json(&report)?,
        Format::Csv => csv(&report),
        Format::Text => text(&report),
    };
    output::emit(&text, args.out.as_deref())?;
    Ok(exit::OK)
}

pub fn build(labeled: &LabeledGraph, ks: &[u32], localize: bool, strict: bool) -> anyhow::Result<AnalyzeReport> {
    if ks.is_empty() || ks.contains(&0) {
        bail!("--k needs at least one bound, each at least 1");
    }
    let mut notes = Vec::new();
    let localized;
    let labeled = if localize {
        localized = labeled.localized();
        &localized
    } else {
        labeled
    };
    let g = &labeled.graph;

    let isolated = g.isolated_nodes();
    if !isolated.is_empty() {
        let names: Vec<&str> = isolated.iter().take(LISTED).map(|&v| labeled.node_token(v)).collect();
        notes.push(format!(
            "{} isolated node(s): {}{}",
            isolated.len(),
            names.join(", "),
            if isolated.len() > LISTED { ", ..." } else { "" }
        ));
    }
    let completeness = g.local_completeness(3);
    if !completeness.complete {
        let pairs: Vec<String> = completeness
            .missing
            .iter()
            .map(|&(u, v)| format!("({}, {})", labeled.node_token(u), labeled.node_token(v)))
            .collect();
        notes.push(format!(
            "communities are not complete: {} missing local pair(s), e.g. {}; see --localize",
            completeness.missing_count,
            pairs.join(", ")
        ));
    }

    let r = g.community_count();
    let model = match g.uniform_community_size() {
        None => Err(format!("community sizes differ: {:?}", g.community_sizes())),
        Some(n) if n < r => Err(format!("communities have n = {n} nodes but r = {r}; the thresholds need n >= r")),
        Some(n) => Ok(n),
    };
    let threshold_rows = match model {
        Ok(n) => {
            if r == 1 {
                notes.push("one community: every threshold is 0 and a complete community is integrated at k = 1".into());
            }
            let mut rows = Vec::new();
            for &k in ks {
                let table = thresholds::threshold_table(r as u64, n as u64, k)?;
                rows.push(ThresholdRow {
                    k,
                    bridges: table.bridges,
                    central: table.central,
                    counts: thresholds::segregation_verdict(g, k)?,
                });
            }
            Some(rows)
        }
        Err(reason) if strict => bail!("model violation: {reason}"),
        Err(reason) => {
            notes.push(format!("thresholds skipped: {reason}"));
            None
        }
    };

    let report = metrics::build_report(g, ks);
    let verdicts = report
        .verdicts
        .iter()
        .map(|v| VerdictOut {
            k: v.k,
            integrated: v.integrated,
            witness: v.witness.map(|w| WitnessOut {
                a: labeled.node_token(w.a).to_owned(),
                b: labeled.node_token(w.b).to_owned(),
                distance: w.distance,
                unreachable: w.distance == Distance::Unreachable,
            }),
        })
        .collect();
    let reach = report.reach_k.map(|k| ReachOut {
        k,
        min: report.reach_profile.iter().copied().min().unwrap_or(0),
        max: report.reach_profile.iter().copied().max().unwrap_or(0),
        per_node: report
            .reach_profile
            .iter()
            .enumerate()
            .map(|(v, &count)| (labeled.node_tokens()[v].clone(), count))
            .collect(),
    });
    let community_sizes = labeled
        .community_tokens()
        .iter()
        .cloned()
        .zip(g.community_sizes().iter().copied())
        .collect();

    Ok(AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        command: "analyze",
        certificate: report.certificate(),
        community_sizes,
        localized: localize,
        verdicts,
        reach,
        thresholds: threshold_rows,
        notes,
    })
}

fn distance_text(d: Distance) -> String {
    match d {
        Distance::Finite(x) => x.to_string(),
        Distance::Unreachable => "unreachable".into(),
    }
}

fn counts_text(v: &SegregationVerdict) -> &'static str {
    match v {
        SegregationVerdict::ProvablySegregated { .. } => "provably_segregated",
        SegregationVerdict::NotDetermined => "not_determined",
    }
}

fn csv(report: &AnalyzeReport) -> String {
    let c = &report.certificate;
    let mut out = csv_row([
        "k",
        "integrated",
        "witness_a",
        "witness_b",
        "witness_distance",
        "nodes",
        "communities",
        "bridges",
        "central_nodes",
        "k_star",
        "bridge_threshold_lower",
        "bridge_threshold_upper",
        "central_threshold",
        "counts",
    ]);
    for v in &report.verdicts {
        let row = report
            .thresholds
            .as_ref()
            .and_then(|rows| rows.iter().find(|row| row.k == v.k));
        let (a, b, d) = match &v.witness {
            Some(w) => (w.a.clone(), w.b.clone(), distance_text(w.distance)),
            None => Default::default(),
        };
        out.push_str(&csv_row([
            v.k.to_string(),
            v.integrated.to_string(),
            a,
            b,
            d,
            c.node_count.to_string(),
            c.communities.to_string(),
            c.bridges.to_string(),
            c.central_nodes.to_string(),
            distance_text(c.k_star),
            row.map(|r| r.bridges.lower().to_string()).unwrap_or_default(),
            row.map(|r| r.bridges.upper().to_string()).unwrap_or_default(),
            row.map(|r| r.central.to_string()).unwrap_or_default(),
            row.map(|r| counts_text(&r.counts).to_owned()).unwrap_or_default(),
        ]));
    }
    out
}

fn text(report: &AnalyzeReport) -> String {
    let c = &report.certificate;
    let mut out = String::new();
    let _ = writeln!(out, "nodes: {}  communities: {}", c.node_count, c.communities);
    let _ = writeln!(out, "bridges (B): {}  central nodes (C): {}", c.bridges, c.central_nodes);
    let _ = writeln!(out, "integration level k*: {}", distance_text(c.k_star));
    for v in &report.verdicts {
        match &v.witness {
            None => {
                let _ = writeln!(out, "k={}: integrated", v.k);
            }
            Some(w) => {
                let _ = writeln!(
                    out,
                    "k={}: not integrated ({} to {}: {})",
                    v.k,
                    w.a,
                    w.b,
                    distance_text(w.distance)
                );
            }
        }
    }
    if let Some(rows) = &report.thresholds {
        for row in rows {
            let _ = writeln!(
                out,
                "k={}: needs B >= {} and C >= {}; counts {}",
                row.k,
                row.bridges.lower(),
                row.central,
                counts_text(&row.counts).replace('_', " ")
            );
        }
    }
    if let Some(reach) = &report.reach {
        let _ = writeln!(out, "reach within {}: min {}, max {}", reach.k, reach.min, reach.max);
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}
