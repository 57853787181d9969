//! Rendering of reports, tables, and check summaries in the three output
//! formats. Every number is serialized as a decimal string, JSON included,
//! since the counts routinely exceed what 64-bit JSON numbers guarantee.

use std::io::IsTerminal;

use serde::{Deserialize, Serialize};

use dmu_adjacency::catalog::CatalogEntry;
use dmu_adjacency::formula::AdjacencyReport;
use dmu_adjacency::types::DGerm;

use crate::verify::{CheckStats, ClosedFormsSummary, VerifySummary};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

impl OutputFormat {
    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "json" => Some(OutputFormat::Json),
            "csv" => Some(OutputFormat::Csv),
            "markdown" => Some(OutputFormat::Markdown),
            _ => None,
        }
    }

    /// Markdown when talking to a terminal, JSON when stdout is redirected.
    pub fn resolve(explicit: Option<Self>) -> Self {
        explicit.unwrap_or_else(|| {
            if std::io::stdout().is_terminal() {
                OutputFormat::Markdown
            } else {
                OutputFormat::Json
            }
        })
    }
}

/// A full single-pair report; field order is the serialization order.
#[derive(Serialize, Deserialize)]
pub struct ReportDto {
    pub germ: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub codim: String,
    #[serde(rename = "J")]
    pub j: String,
    #[serde(rename = "I0")]
    pub i0: String,
    #[serde(rename = "I1")]
    pub i1: String,
    #[serde(rename = "I2term")]
    pub i2_term: String,
    #[serde(rename = "I3term")]
    pub i3_term: String,
    #[serde(rename = "C0")]
    pub c0: String,
    #[serde(rename = "C1")]
    pub c1: String,
    #[serde(rename = "N")]
    pub n: String,
}

impl ReportDto {
    pub fn new(report: &AdjacencyReport) -> Self {
        Self {
            germ: report.germ.to_string(),
            ty: report.ty.to_string(),
            codim: report.ty.codim().to_string(),
            j: report.j.to_string(),
            i0: report.i0.to_string(),
            i1: report.i1.to_string(),
            i2_term: report.i2_term.to_string(),
            i3_term: report.i3_term.to_string(),
            c0: report.c0.to_string(),
            c1: report.c1.to_string(),
            n: report.n.to_string(),
        }
    }
}

/// One table row; the column set matches the CSV contract.
#[derive(Serialize, Deserialize)]
pub struct TableRowDto {
    #[serde(rename = "type")]
    pub ty: String,
    pub codim: String,
    #[serde(rename = "J")]
    pub j: String,
    #[serde(rename = "I0")]
    pub i0: String,
    #[serde(rename = "I1")]
    pub i1: String,
    #[serde(rename = "I2term")]
    pub i2_term: String,
    #[serde(rename = "I3term")]
    pub i3_term: String,
    #[serde(rename = "N")]
    pub n: String,
}

#[derive(Serialize, Deserialize)]
pub struct TableDto {
    pub germ: String,
    pub entries: Vec<TableRowDto>,
}

impl TableDto {
    pub fn new(germ: DGerm, entries: &[CatalogEntry]) -> Self {
        Self {
            germ: germ.to_string(),
            entries: entries
                .iter()
                .map(|entry| TableRowDto {
                    ty: entry.ty.to_string(),
                    codim: entry.ty.codim().to_string(),
                    j: entry.report.j.to_string(),
                    i0: entry.report.i0.to_string(),
                    i1: entry.report.i1.to_string(),
                    i2_term: entry.report.i2_term.to_string(),
                    i3_term: entry.report.i3_term.to_string(),
                    n: entry.report.n.to_string(),
                })
                .collect(),
        }
    }
}

const TABLE_COLUMNS: &str = "type,codim,J,I0,I1,I2term,I3term,N";

pub fn render_report(report: &AdjacencyReport, format: OutputFormat) -> String {
    let dto = ReportDto::new(report);
    match format {
        OutputFormat::Json => json_line(&dto),
        OutputFormat::Csv => {
            let mut out = String::from("germ,");
            out.push_str(TABLE_COLUMNS);
            out.push_str(",C0,C1\n");
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                dto.germ,
                dto.ty,
                dto.codim,
                dto.j,
                dto.i0,
                dto.i1,
                dto.i2_term,
                dto.i3_term,
                dto.n,
                dto.c0,
                dto.c1,
            ));
            out
        }
        OutputFormat::Markdown => {
            let rows = [
                ("germ", dto.germ.as_str()),
                ("type", dto.ty.as_str()),
                ("codim", dto.codim.as_str()),
                ("J", dto.j.as_str()),
                ("I0", dto.i0.as_str()),
                ("I1", dto.i1.as_str()),
                ("I2term", dto.i2_term.as_str()),
                ("I3term", dto.i3_term.as_str()),
                ("C0", dto.c0.as_str()),
                ("C1", dto.c1.as_str()),
                ("N", dto.n.as_str()),
            ];
            let mut out = String::from("| quantity | value |\n|---|---|\n");
            for (name, value) in rows {
                out.push_str(&format!("| {name} | {value} |\n"));
            }
            out
        }
    }
}

pub fn render_table(germ: DGerm, entries: &[CatalogEntry], format: OutputFormat) -> String {
    let dto = TableDto::new(germ, entries);
    match format {
        OutputFormat::Json => json_line(&dto),
        OutputFormat::Csv => {
            let mut out = String::from(TABLE_COLUMNS);
            out.push('\n');
            for row in &dto.entries {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    row.ty, row.codim, row.j, row.i0, row.i1, row.i2_term, row.i3_term, row.n
                ));
            }
            out
        }
        OutputFormat::Markdown => {
            let mut out = format!("Adjacency table for {}\n\n", dto.germ);
            out.push_str("| type | codim | J | I0 | I1 | I2term | I3term | N |\n");
            out.push_str("|---|---:|---:|---:|---:|---:|---:|---:|\n");
            for row in &dto.entries {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
                    row.ty, row.codim, row.j, row.i0, row.i1, row.i2_term, row.i3_term, row.n
                ));
            }
            out
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct CheckDto {
    pub check: String,
    pub pass: String,
    pub fail: String,
}

#[derive(Serialize, Deserialize)]
pub struct VerifyDto {
    #[serde(rename = "maxMu")]
    pub max_mu: String,
    pub cap: String,
    pub germs: String,
    pub candidates: String,
    pub checks: Vec<CheckDto>,
    pub failures: Vec<String>,
    pub result: String,
}

pub fn render_verify(summary: &VerifySummary, format: OutputFormat) -> String {
    let result = if summary.all_passed() { "pass" } else { "fail" };
    match format {
        OutputFormat::Json => json_line(&VerifyDto {
            max_mu: summary.max_mu.to_string(),
            cap: summary.cap.to_string(),
            germs: summary.germs.to_string(),
            candidates: summary.candidates.to_string(),
            checks: summary.checks.iter().map(check_dto).collect(),
            failures: summary.failures.clone(),
            result: result.to_string(),
        }),
        OutputFormat::Csv => checks_csv(&summary.checks),
        OutputFormat::Markdown => {
            let mut out = format!(
                "Verification up to mu = {} ({} germs, {} candidate evaluations, word cap {})\n\n",
                summary.max_mu, summary.germs, summary.candidates, summary.cap
            );
            out.push_str(&checks_markdown(&summary.checks));
            out.push_str(&failures_markdown(&summary.failures));
            out.push_str(&format!("\nresult: {}\n", result.to_uppercase()));
            out
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct ClosedFormsDto {
    #[serde(rename = "maxK")]
    pub max_k: String,
    pub checks: Vec<CheckDto>,
    pub failures: Vec<String>,
    pub result: String,
}

pub fn render_closed_forms(summary: &ClosedFormsSummary, format: OutputFormat) -> String {
    let result = if summary.all_passed() { "pass" } else { "fail" };
    match format {
        OutputFormat::Json => json_line(&ClosedFormsDto {
            max_k: summary.max_k.to_string(),
            checks: summary.checks.iter().map(check_dto).collect(),
            failures: summary.failures.clone(),
            result: result.to_string(),
        }),
        OutputFormat::Csv => checks_csv(&summary.checks),
        OutputFormat::Markdown => {
            let mut out = format!("Closed-form check for k = 2..={}\n\n", summary.max_k);
            out.push_str(&checks_markdown(&summary.checks));
            out.push_str(&failures_markdown(&summary.failures));
            out.push_str(&format!("\nresult: {}\n", result.to_uppercase()));
            out
        }
    }
}

fn check_dto(stats: &CheckStats) -> CheckDto {
    CheckDto {
        check: stats.name.to_string(),
        pass: stats.pass.to_string(),
        fail: stats.fail.to_string(),
    }
}

fn checks_markdown(checks: &[CheckStats]) -> String {
    let mut out = String::from("| check | pass | fail |\n|---|---:|---:|\n");
    for stats in checks {
        out.push_str(&format!(
            "| {} | {} | {} |\n",
            stats.name, stats.pass, stats.fail
        ));
    }
    out
}

fn checks_csv(checks: &[CheckStats]) -> String {
    let mut out = String::from("check,pass,fail\n");
    let mut pass = 0;
    let mut fail = 0;
    for stats in checks {
        pass += stats.pass;
        fail += stats.fail;
        out.push_str(&format!("{},{},{}\n", stats.name, stats.pass, stats.fail));
    }
    out.push_str(&format!("total,{pass},{fail}\n"));
    out
}

fn failures_markdown(failures: &[String]) -> String {
    let mut out = String::new();
    if !failures.is_empty() {
        out.push('\n');
        for failure in failures {
            out.push_str(&format!("- {failure}\n"));
        }
    }
    out
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("serialization cannot fail");
    out.push('\n');
    out
}
