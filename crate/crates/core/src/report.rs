//! Type distributions over typed M2 records.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::corpus_io::M2Record;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TypeDistribution {
    pub counts: BTreeMap<String, u64>,
    pub total: u64,
}

impl TypeDistribution {
    /// Entries by descending count, ties in lexicographic order.
    pub fn ranked(&self) -> Vec<(&str, u64)> {
        let mut rows: Vec<(&str, u64)> =
            self.counts.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        rows.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        rows
    }

    pub fn fraction(&self, count: u64) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            count as f64 / self.total as f64
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ReportFormat {
    #[default]
    Tsv,
    Json,
}

/// Counts every non-noop edit, optionally for one annotator only.
pub fn type_distribution(records: &[M2Record], annotator: Option<u32>) -> TypeDistribution {
    let mut dist = TypeDistribution::default();
    for edit in records.iter().flat_map(|r| &r.edits) {
        if edit.span.is_noop() || annotator.is_some_and(|a| a != edit.annotator) {
            continue;
        }
        *dist.counts.entry(edit.type_label.clone()).or_default() += 1;
        dist.total += 1;
    }
    dist
}

#[derive(Serialize)]
struct JsonRow<'a> {
    count: u64,
    fraction: f64,
    #[serde(rename = "type")]
    label: &'a str,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    total: u64,
    types: Vec<JsonRow<'a>>,
}

pub fn emit_report(dist: &TypeDistribution, format: ReportFormat) -> String {
    match format {
        ReportFormat::Tsv => {
            let mut out = String::from("type\tcount\tfraction\n");
            for (label, count) in dist.ranked() {
                out.push_str(&format!("{label}\t{count}\t{:.4}\n", dist.fraction(count)));
            }
            out
        }
        ReportFormat::Json => {
            let report = JsonReport {
                total: dist.total,
                types: dist
                    .ranked()
                    .into_iter()
                    .map(|(label, count)| JsonRow {
                        count,
                        // rounded like the TSV output
                        fraction: (dist.fraction(count) * 1e4).round() / 1e4,
                        label,
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}
