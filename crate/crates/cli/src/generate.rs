use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use kinteg::constructors::{self, figure1_quotient, Construction, Family, QuotientGraph};
use kinteg::metrics::{Certificate, Distance};
use kinteg::LabeledGraph;
use serde::Serialize;

use crate::output::{self, csv_row, Format, SCHEMA_VERSION};
use crate::{exit, FamilyArg, GenerateArgs};

#[derive(Serialize)]
struct Claimed {
    bridges: u64,
    central_nodes: u64,
    k: u32,
}

#[derive(Serialize)]
struct GenerateReport {
    schema_version: u32,
    command: &'static str,
    family: Family,
    r: usize,
    n: usize,
    claimed: Claimed,
    certificate: Certificate,
    files: Vec<String>,
}

pub fn parse_quotient(spec: &str, r: usize) -> anyhow::Result<QuotientGraph> {
    let q = match spec {
        "complete" => QuotientGraph::complete(r),
        "star" => QuotientGraph::star(r),
        "path" => QuotientGraph::path(r),
        "cycle" => QuotientGraph::cycle(r),
        other => {
            let k = other
                .strip_prefix("figure1:")
                .and_then(|k| k.parse::<u32>().ok())
                .ok_or_else(|| anyhow!("unknown quotient `{other}` (expected complete, star, path, cycle or figure1:K)"))?;
            figure1_quotient(r, k)
        }
    };
    Ok(q?)
}

pub fn construct(family: FamilyArg, r: usize, n: usize, quotient: &str) -> anyhow::Result<Construction> {
    let c = match family {
        FamilyArg::CompleteJoin => constructors::complete_join(r, n)?,
        FamilyArg::TwoStar => constructors::two_star(r, n)?,
        FamilyArg::ExtendedStar => constructors::extended_star(r, n, &parse_quotient(quotient, r)?)?,
    };
    Ok(c)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

pub fn run(args: &GenerateArgs) -> anyhow::Result<u8> {
    if args.family != FamilyArg::ExtendedStar && args.quotient != "complete" {
        bail!("--quotient applies only to --family extended-star");
    }
    let c = construct(args.family, args.r, args.n, &args.quotient)?;
    let labeled = LabeledGraph::with_generated_tokens(c.graph.clone());

    let mut files = Vec::new();
    if let Some(prefix) = &args.out {
        let mut outputs = vec![
            (with_suffix(prefix, ".edges"), labeled.edge_list_text()),
            (with_suffix(prefix, ".communities"), labeled.communities_text()),
        ];
        if args.dot {
            outputs.push((with_suffix(prefix, ".dot"), labeled.to_dot()));
        }
        for (path, contents) in outputs {
            fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
            files.push(path.display().to_string());
        }
    }

    let certificate = Certificate::measure(&c.graph);
    if !c.verify().holds() {
        log::warn!("construction does not meet its claims: {certificate:?}");
    }
    let report = GenerateReport {
        schema_version: SCHEMA_VERSION,
        command: "generate",
        family: c.family,
        r: args.r,
        n: args.n,
        claimed: Claimed {
            bridges: c.claimed_bridges,
            central_nodes: c.claimed_central,
            k: c.claimed_k,
        },
        certificate,
        files,
    };
    let text = match args.format {
        Format::Json => output::json(&report)?,
        Format::Csv => csv(&report),
        Format::Text => text(&report),
    };
    output::emit(&text, None)?;
    Ok(exit::OK)
}

fn k_star(d: Distance) -> String {
    d.finite().map_or_else(|| "unreachable".into(), |k| k.to_string())
}

fn csv(report: &GenerateReport) -> String {
    let c = &report.certificate;
    let mut out = csv_row([
        "family",
        "r",
        "n",
        "claimed_bridges",
        "claimed_central_nodes",
        "claimed_k",
        "bridges",
        "central_nodes",
        "k_star",
    ]);
    out.push_str(&csv_row([
        report.family.to_string(),
        report.r.to_string(),
        report.n.to_string(),
        report.claimed.bridges.to_string(),
        report.claimed.central_nodes.to_string(),
        report.claimed.k.to_string(),
        c.bridges.to_string(),
        c.central_nodes.to_string(),
        k_star(c.k_star),
    ]));
    out
}

fn text(report: &GenerateReport) -> String {
    let c = &report.certificate;
    let mut out = String::new();
    let _ = writeln!(out, "{} with r = {}, n = {}", report.family, report.r, report.n);
    let _ = writeln!(
        out,
        "claimed:  B = {}, C = {}, k = {}",
        report.claimed.bridges, report.claimed.central_nodes, report.claimed.k
    );
    let _ = writeln!(
        out,
        "measured: B = {}, C = {}, k* = {}",
        c.bridges,
        c.central_nodes,
        k_star(c.k_star)
    );
    for file in &report.files {
        let _ = writeln!(out, "wrote {file}");
    }
    out
}
