//! Report data model shared by every verification driver.
//!
//! A report is a flat list of rows plus run metadata. Rows carry everything
//! needed to re-derive the verdict: the graph identity and provenance, its
//! matching invariants, the power `s`, the field characteristic, the computed
//! regularities, the predicted value `2s + ind_match - 1`, and a status.
//!
//! Rendering contracts:
//! - CSV holds only the header and rows (no metadata), so two runs over the
//!   same inputs differ at most in the `elapsed_ms` column.
//! - JSON wraps `{ "metadata": ..., "rows": [...] }`; the timestamp lives in
//!   the metadata only.
//! - No cell ever contains a comma: free-text fields pass through
//!   [`csv_safe`].

use cwreg_core::Graph;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// CSV column order; `to_csv` and the CLI schema help text both use this.
pub const CSV_HEADER: &str =
    "graph_id,provenance,n,m,match,ind_match,s,field_char,reg_symbolic,reg_ordinary,formula_value,status,elapsed_ms";

/// Run-level metadata. `config` is a normalized, result-affecting flag
/// summary: it deliberately excludes scheduling knobs (`--jobs`) so that
/// serial and parallel runs of the same work are byte-identical.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Metadata {
    pub tool_version: String,
    pub config: String,
    /// Seconds since the Unix epoch at report creation.
    pub timestamp: u64,
}

impl Metadata {
    pub fn new(config: String) -> Self {
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Metadata { tool_version: env!("CARGO_PKG_VERSION").to_string(), config, timestamp }
    }
}

/// One verification outcome.
///
/// `status` is `"ok"`, `"violated"`, or `"skipped:<reason>"`; skipped rows
/// name the cap or precondition that stopped the computation. Violated rows
/// are always kept. `reg_symbolic` / `reg_ordinary` are empty when the row's
/// check did not compute them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub graph_id: String,
    pub provenance: String,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "match")]
    pub matching: usize,
    pub ind_match: usize,
    pub s: i64,
    pub field_char: u64,
    pub reg_symbolic: Option<usize>,
    pub reg_ordinary: Option<usize>,
    pub formula_value: i64,
    pub status: String,
    pub elapsed_ms: u128,
}

impl ReportRow {
    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }

    pub fn is_violated(&self) -> bool {
        self.status == "violated"
    }

    pub fn is_skipped(&self) -> bool {
        self.status.starts_with("skipped")
    }

    fn csv_line(&self) -> String {
        fn opt(v: Option<usize>) -> String {
            v.map(|x| x.to_string()).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            csv_safe(&self.graph_id),
            csv_safe(&self.provenance),
            self.n,
            self.m,
            self.matching,
            self.ind_match,
            self.s,
            self.field_char,
            opt(self.reg_symbolic),
            opt(self.reg_ordinary),
            self.formula_value,
            csv_safe(&self.status),
            self.elapsed_ms,
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub metadata: Metadata,
    pub rows: Vec<ReportRow>,
}

impl VerificationReport {
    pub fn new(config: String, rows: Vec<ReportRow>) -> Self {
        let mut report = VerificationReport { metadata: Metadata::new(config), rows };
        report.sort_rows();
        report
    }

    /// Canonical row order: `(graph_id, s, provenance)`. Drivers produce rows
    /// in this order already; sorting again makes parallel runs reproducible
    /// by construction.
    pub fn sort_rows(&mut self) {
        self.rows.sort_by(|a, b| {
            (&a.graph_id, a.s, &a.provenance).cmp(&(&b.graph_id, b.s, &b.provenance))
        });
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.csv_line());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn render(&self, format: &str) -> String {
        match format {
            "json" => self.to_json(),
            _ => self.to_csv(),
        }
    }

    pub fn num_ok(&self) -> usize {
        self.rows.iter().filter(|r| r.is_ok()).count()
    }

    pub fn num_violated(&self) -> usize {
        self.rows.iter().filter(|r| r.is_violated()).count()
    }

    pub fn num_skipped(&self) -> usize {
        self.rows.iter().filter(|r| r.is_skipped()).count()
    }

    /// Process exit code: 0 all ok, 1 any violated, 3 nothing but skips.
    pub fn exit_code(&self) -> i32 {
        if self.num_violated() > 0 {
            1
        } else if !self.rows.is_empty() && self.num_skipped() == self.rows.len() {
            3
        } else {
            0
        }
    }

    /// One-line human summary for stderr.
    pub fn summary(&self) -> String {
        format!(
            "{} rows: {} ok, {} violated, {} skipped",
            self.rows.len(),
            self.num_ok(),
            self.num_violated(),
            self.num_skipped()
        )
    }
}

/// Replaces CSV-hostile characters so every value stays single-cell.
pub fn csv_safe(s: &str) -> String {
    s.replace(',', ";").replace(['\n', '\r'], " ")
}

/// Content hash of a graph: SHA-256 of its canonical edge-list string.
pub fn graph_hash(g: &Graph) -> String {
    let digest = Sha256::digest(g.edge_list_string().as_bytes());
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

/// Stable per-report graph identifier: enumeration ordinal plus a content
/// hash prefix, e.g. `0017-3fa9c2d41b07`.
pub fn make_graph_id(ordinal: usize, hash: &str) -> String {
    format!("{:04}-{}", ordinal, &hash[..12])
}

/// `skipped:<reason>` status from an error, CSV-sanitized.
pub fn skip_status(e: &cwreg_core::Error) -> String {
    format!("skipped:{}", csv_safe(&e.to_string()))
}
