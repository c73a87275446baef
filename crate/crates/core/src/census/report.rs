use std::fmt::Write as _;
use std::str::FromStr;

use super::{CensusReport, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?}; expected json, csv or text")),
        }
    }
}

pub fn render(report: &CensusReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => csv_rows(report),
        Format::Text => text(report),
    }
}

fn csv_rows(report: &CensusReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "id",
        "graph6",
        "n",
        "reg_ideal",
        "check",
        "status",
        "detail",
    ])
    .expect("in-memory write");
    for r in &report.reports {
        let reg = r
            .invariants
            .as_ref()
            .map(|i| i.reg_ideal.to_string())
            .unwrap_or_default();
        for c in &r.checks {
            w.write_record([
                &r.id.to_string(),
                &r.graph6,
                &r.n.to_string(),
                &reg,
                c.name,
                c.status.name(),
                &c.detail,
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 fields")
}

fn text(report: &CensusReport) -> String {
    let mut s = String::new();
    for r in &report.reports {
        let inv = match (&r.invariants, &r.invariants_error) {
            (Some(i), _) => format!(
                "reg {} pd {} c {} dim {:?}",
                i.reg_ideal, i.pd_quotient, i.cliques, i.dim
            ),
            (None, e) => format!("invariants unavailable: {}", e.as_deref().unwrap_or("")),
        };
        let _ = writeln!(s, "#{} {} n={} {}", r.id, r.graph6, r.n, inv);
        for c in &r.checks {
            let _ = writeln!(s, "  {:<44} {:<14} {}", c.name, c.status.name(), c.detail);
        }
    }
    let m = &report.summary;
    let _ = writeln!(
        s,
        "graphs {}  pass {}  fail {}  skipped {}  resource_error {}",
        m.graphs, m.pass, m.fail, m.skipped, m.resource_error
    );
    let failed: Vec<String> = report
        .reports
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| c.status == Status::Fail)
                .map(move |c| format!("#{} {}", r.id, c.name))
        })
        .collect();
    if !failed.is_empty() {
        let _ = writeln!(s, "failed: {}", failed.join(", "));
    }
    s
}
