use std::io::{self, Write};

use bellpoly::identities::{Certification, IdentityReport};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// What a command produced: JSON records (one per output line), the same
/// content flattened into a table, and whether every check passed.
pub struct Output {
    records: Vec<Value>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    pub pass: bool,
}

impl Output {
    pub fn table(header: &[&str]) -> Self {
        Self {
            records: Vec::new(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            pass: true,
        }
    }

    pub fn record(&mut self, value: impl Serialize) {
        self.records
            .push(serde_json::to_value(value).expect("records serialize"));
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn reports(reports: &[IdentityReport]) -> Self {
        let mut out = Self::table(&["identity", "params", "lhs", "rhs", "pass"]);
        for r in reports {
            out.add_report(r);
        }
        out
    }

    fn add_report(&mut self, r: &IdentityReport) {
        self.record(r);
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        self.row(vec![
            r.identity.clone(),
            params.join(";"),
            bellpoly::arith::format_rational(&r.lhs),
            bellpoly::arith::format_rational(&r.rhs),
            r.pass.to_string(),
        ]);
        self.pass &= r.pass;
    }

    /// One record per sample, then the summary.
    pub fn certification(c: &Certification) -> Self {
        let mut out = Self::reports(&c.samples);
        out.record(c.summary());
        out.pass = c.certified();
        out
    }

    pub fn write(&self, format: Format) -> io::Result<()> {
        let stdout = io::stdout();
        let mut lock = stdout.lock();
        match format {
            Format::Json => {
                for r in &self.records {
                    writeln!(lock, "{r}")?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(lock);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}
