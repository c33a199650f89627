//! M2 files and parallel plain-text corpora.
//!
//! The M2 dialect is token-offset based:
//!
//! ```text
//! S I werk for pen .
//! A 1 2|||R:Spell|||work|||REQUIRED|||-NONE-|||0
//! ```
//!
//! Deletions are written with an empty correction field and noop
//! annotations (`A -1 -1|||noop|||-NONE-|||...`) with `-NONE-`.

use std::ops::Range;

use crate::{Error, Result};

const SEP: &str = "|||";
const NONE: &str = "-NONE-";

/// A token span in the source sentence and the tokens that replace it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EditSpan {
    /// Start token index, or -1 for a noop.
    pub start: isize,
    /// Exclusive end token index, or -1 for a noop.
    pub end: isize,
    /// Replacement tokens; empty for a deletion.
    pub correction: Vec<String>,
}

impl EditSpan {
    pub fn new(range: Range<usize>, correction: Vec<String>) -> Self {
        EditSpan {
            start: range.start as isize,
            end: range.end as isize,
            correction,
        }
    }

    pub fn noop() -> Self {
        EditSpan {
            start: -1,
            end: -1,
            correction: Vec::new(),
        }
    }

    pub fn is_noop(&self) -> bool {
        self.start == -1 && self.end == -1
    }

    /// The source range, `None` for noops and malformed spans.
    pub fn range(&self) -> Option<Range<usize>> {
        (self.start >= 0 && self.start <= self.end).then_some(self.start as usize..self.end as usize)
    }

    pub fn is_insertion(&self) -> bool {
        !self.is_noop() && self.start == self.end
    }

    pub fn is_deletion(&self) -> bool {
        self.start < self.end && self.correction.is_empty()
    }

    fn check(&self, len: usize) -> std::result::Result<(), String> {
        if self.is_noop() {
            return if self.correction.is_empty() {
                Ok(())
            } else {
                Err("noop edit has a correction".into())
            };
        }
        if self.start < 0 || self.start > self.end || self.end as usize > len {
            return Err(format!(
                "span {}..{} outside a {len}-token sentence",
                self.start, self.end
            ));
        }
        Ok(())
    }
}

/// One `A` line.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct M2Edit {
    pub span: EditSpan,
    pub type_label: String,
    pub annotator: u32,
}

/// One `S` line with its annotations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct M2Record {
    pub source_tokens: Vec<String>,
    pub edits: Vec<M2Edit>,
}

fn split_tokens(s: &str) -> Vec<String> {
    s.split(' ')
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

pub fn parse_m2(text: &str) -> Result<Vec<M2Record>> {
    let mut records = Vec::new();
    let mut current: Option<M2Record> = None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let syntax = |message: String| Error::M2Syntax {
            line: line_no,
            message,
        };
        if line.trim().is_empty() {
            records.extend(current.take());
        } else if line == "S" || line.starts_with("S ") {
            records.extend(current.take());
            current = Some(M2Record {
                source_tokens: split_tokens(&line[1..]),
                edits: Vec::new(),
            });
        } else if let Some(body) = line.strip_prefix("A ") {
            let record = current
                .as_mut()
                .ok_or(Error::M2Structure { line: line_no })?;
            let edit = parse_annotation(body).map_err(syntax)?;
            edit.span
                .check(record.source_tokens.len())
                .map_err(syntax)?;
            record.edits.push(edit);
        } else {
            return Err(syntax(format!("unrecognised line {line:?}")));
        }
    }
    records.extend(current);
    Ok(records)
}

fn parse_annotation(body: &str) -> std::result::Result<M2Edit, String> {
    let fields: Vec<&str> = body.split(SEP).collect();
    if fields.len() != 6 {
        return Err(format!(
            "expected 6 |||-separated fields, found {}",
            fields.len()
        ));
    }
    let mut offsets = fields[0].split_whitespace();
    let mut offset = |what: &str| -> std::result::Result<isize, String> {
        let raw = offsets
            .next()
            .ok_or_else(|| format!("missing {what} offset"))?;
        raw.parse()
            .map_err(|_| format!("non-integer {what} offset {raw:?}"))
    };
    let start = offset("start")?;
    let end = offset("end")?;
    if offsets.next().is_some() {
        return Err("trailing data after offsets".into());
    }
    let correction = match fields[2] {
        NONE => Vec::new(),
        c => split_tokens(c),
    };
    let annotator = fields[5]
        .trim()
        .parse()
        .map_err(|_| format!("bad annotator id {:?}", fields[5]))?;
    Ok(M2Edit {
        span: EditSpan {
            start,
            end,
            correction,
        },
        type_label: fields[1].to_string(),
        annotator,
    })
}

fn check_token(tok: &str) -> std::result::Result<(), String> {
    if tok.is_empty() || tok.chars().any(|c| c.is_whitespace() || c == '|') {
        Err(format!("token {tok:?} cannot be written to M2"))
    } else {
        Ok(())
    }
}

fn check_record(record: &M2Record) -> std::result::Result<(), String> {
    record
        .source_tokens
        .iter()
        .try_for_each(|t| check_token(t))?;
    for edit in &record.edits {
        edit.span.check(record.source_tokens.len())?;
        edit.span
            .correction
            .iter()
            .try_for_each(|t| check_token(t))?;
        if edit.span.correction == [NONE] {
            return Err("a correction of exactly -NONE- is ambiguous".into());
        }
        if edit.type_label.contains(['|', '\n', '\r']) {
            return Err(format!(
                "type label {:?} cannot be written to M2",
                edit.type_label
            ));
        }
    }
    Ok(())
}

/// Writes records in canonical M2 form: one blank line between records and
/// a single trailing newline.
pub fn emit_m2(records: &[M2Record]) -> Result<String> {
    let mut out = String::new();
    for (index, record) in records.iter().enumerate() {
        check_record(record).map_err(|message| Error::M2Invalid { index, message })?;
        if index > 0 {
            out.push('\n');
        }
        out.push_str("S ");
        out.push_str(&record.source_tokens.join(" "));
        out.push('\n');
        for edit in &record.edits {
            let correction = if edit.span.is_noop() {
                NONE.to_string()
            } else {
                edit.span.correction.join(" ")
            };
            out.push_str(&format!(
                "A {} {}{SEP}{}{SEP}{}{SEP}REQUIRED{SEP}{NONE}{SEP}{}\n",
                edit.span.start, edit.span.end, edit.type_label, correction, edit.annotator
            ));
        }
    }
    Ok(out)
}

/// Applies non-overlapping spans to a source sentence. Noops are ignored;
/// spans are applied in `(start, end)` order, insertions at the same
/// position keep their given order.
pub fn apply_edits<S: AsRef<str>>(source: &[S], spans: &[&EditSpan]) -> Result<Vec<String>> {
    let mut ordered: Vec<(Range<usize>, &EditSpan)> = Vec::with_capacity(spans.len());
    for span in spans.iter().filter(|s| !s.is_noop()) {
        span.check(source.len()).map_err(Error::EditConflict)?;
        ordered.push((span.range().expect("checked"), span));
    }
    ordered.sort_by_key(|(r, _)| (r.start, r.end));
    let mut out = Vec::with_capacity(source.len());
    let mut cursor = 0;
    for (range, span) in ordered {
        if range.start < cursor {
            return Err(Error::EditConflict(format!(
                "span {}..{} overlaps a previous edit",
                range.start, range.end
            )));
        }
        out.extend(
            source[cursor..range.start]
                .iter()
                .map(|s| s.as_ref().to_string()),
        );
        out.extend(span.correction.iter().cloned());
        cursor = range.end;
    }
    out.extend(source[cursor..].iter().map(|s| s.as_ref().to_string()));
    Ok(out)
}

/// Pairs line `i` of the original text with line `i` of the corrected text,
/// tokenizing on runs of whitespace.
pub fn read_parallel(
    original_text: &str,
    corrected_text: &str,
) -> Result<Vec<(Vec<String>, Vec<String>)>> {
    let original: Vec<&str> = original_text.lines().collect();
    let corrected: Vec<&str> = corrected_text.lines().collect();
    if original.len() != corrected.len() {
        return Err(Error::LineCount {
            original: original.len(),
            corrected: corrected.len(),
        });
    }
    let tokens = |l: &str| l.split_whitespace().map(str::to_string).collect();
    Ok(original
        .into_iter()
        .zip(corrected)
        .map(|(o, c)| (tokens(o), tokens(c)))
        .collect())
}
