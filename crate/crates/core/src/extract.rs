//! Token alignment of a sentence pair and merging into edits.
//!
//! Alignment is a Damerau-style edit distance over tokens. Costs: match 0,
//! insert/delete 1, substitution 1 when the tokens agree case-insensitively
//! or share a lemma and 2 otherwise, adjacent transposition 1. Among
//! optimal alignments the one chosen prefers, at each position,
//! match > substitute > transpose > delete > insert.

use std::borrow::Cow;
use std::ops::Range;

use crate::corpus_io::EditSpan;
use crate::ud::{AnnotatedSentence, Token};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlignKind {
    Match,
    Substitute,
    Transpose,
    Delete,
    Insert,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlignmentOp {
    pub kind: AlignKind,
    pub src: Range<usize>,
    pub trg: Range<usize>,
}

/// Aligns two token sequences using surface costs only.
pub fn align<S: AsRef<str>, T: AsRef<str>>(src: &[S], trg: &[T]) -> Vec<AlignmentOp> {
    let src_lower: Vec<Cow<'_, str>> = src.iter().map(|s| lowercase(s.as_ref())).collect();
    let trg_lower: Vec<Cow<'_, str>> = trg.iter().map(|s| lowercase(s.as_ref())).collect();
    align_by(src.len(), trg.len(), |i, j| {
        if src[i].as_ref() == trg[j].as_ref() {
            0
        } else if src_lower[i] == trg_lower[j] {
            1
        } else {
            2
        }
    })
}

/// Aligns two annotated sentences; shared lemmas make substitutions cheap.
pub fn align_annotated(src: &AnnotatedSentence, trg: &AnnotatedSentence) -> Vec<AlignmentOp> {
    let (s, t) = (src.tokens(), trg.tokens());
    let src_lower: Vec<Cow<'_, str>> = s.iter().map(|t| lowercase(&t.form)).collect();
    let trg_lower: Vec<Cow<'_, str>> = t.iter().map(|t| lowercase(&t.form)).collect();
    align_by(s.len(), t.len(), |i, j| {
        if s[i].form == t[j].form {
            0
        } else if src_lower[i] == trg_lower[j] || s[i].lemma == t[j].lemma {
            1
        } else {
            2
        }
    })
}

fn lowercase(s: &str) -> Cow<'_, str> {
    if s.chars().any(char::is_uppercase) {
        Cow::Owned(s.to_lowercase())
    } else {
        Cow::Borrowed(s)
    }
}

/// `pair_cost(i, j)` is 0 for identical tokens, else the substitution cost.
///
/// Suffix-table DP followed by a forward walk that picks, at each cell,
/// the most preferred operation consistent with the optimal cost.
fn align_by(n: usize, m: usize, pair_cost: impl Fn(usize, usize) -> u32) -> Vec<AlignmentOp> {
    let mut pair = vec![0u32; n * m];
    for i in 0..n {
        for j in 0..m {
            pair[i * m + j] = pair_cost(i, j);
        }
    }
    let same = |i: usize, j: usize| pair[i * m + j] == 0;
    // src[i] != src[i + 1] follows from the two cross matches and !same(i, j)
    let swapped = |i: usize, j: usize| {
        i + 1 < n && j + 1 < m && same(i, j + 1) && same(i + 1, j) && !same(i, j)
    };

    let w = m + 1;
    let at = |i: usize, j: usize| i * w + j;
    let mut cost = vec![0u32; (n + 1) * w];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            if i == n && j == m {
                continue;
            }
            let mut best = u32::MAX;
            if i < n && j < m {
                best = best.min(pair[i * m + j] + cost[at(i + 1, j + 1)]);
            }
            if swapped(i, j) {
                best = best.min(1 + cost[at(i + 2, j + 2)]);
            }
            if i < n {
                best = best.min(1 + cost[at(i + 1, j)]);
            }
            if j < m {
                best = best.min(1 + cost[at(i, j + 1)]);
            }
            cost[at(i, j)] = best;
        }
    }

    let mut ops = Vec::with_capacity(n.max(m));
    let (mut i, mut j) = (0, 0);
    while i < n || j < m {
        let here = cost[at(i, j)];
        let diagonal = i < n && j < m && pair[i * m + j] + cost[at(i + 1, j + 1)] == here;
        let (kind, di, dj) = if diagonal && same(i, j) {
            (AlignKind::Match, 1, 1)
        } else if diagonal {
            (AlignKind::Substitute, 1, 1)
        } else if swapped(i, j) && 1 + cost[at(i + 2, j + 2)] == here {
            (AlignKind::Transpose, 2, 2)
        } else if i < n && 1 + cost[at(i + 1, j)] == here {
            (AlignKind::Delete, 1, 0)
        } else {
            (AlignKind::Insert, 0, 1)
        };
        ops.push(AlignmentOp {
            kind,
            src: i..i + di,
            trg: j..j + dj,
        });
        i += di;
        j += dj;
    }
    ops
}

/// An extracted edit together with where its correction sits in the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edit {
    pub span: EditSpan,
    pub src_tokens: Vec<String>,
    pub trg_start: usize,
}

impl Edit {
    pub fn src_range(&self) -> Range<usize> {
        self.span.range().expect("extracted edits are never noops")
    }

    pub fn trg_range(&self) -> Range<usize> {
        self.trg_start..self.trg_start + self.span.correction.len()
    }
}

/// Collapses every maximal run of non-match operations into one edit.
pub fn merge<S: AsRef<str>, T: AsRef<str>>(ops: &[AlignmentOp], src: &[S], trg: &[T]) -> Vec<Edit> {
    let mut edits = Vec::new();
    let mut run: Option<(Range<usize>, Range<usize>)> = None;
    for op in ops {
        if op.kind == AlignKind::Match {
            if let Some((s, t)) = run.take() {
                edits.push((s, t));
            }
            continue;
        }
        run = Some(match run {
            Some((s, t)) => (s.start..op.src.end, t.start..op.trg.end),
            None => (op.src.clone(), op.trg.clone()),
        });
    }
    edits.extend(run);
    edits
        .into_iter()
        .map(|(s, t)| Edit {
            span: EditSpan::new(s.clone(), owned(trg, t.clone())),
            src_tokens: owned(src, s),
            trg_start: t.start,
        })
        .collect()
}

fn owned<S: AsRef<str>>(toks: &[S], r: Range<usize>) -> Vec<String> {
    toks[r].iter().map(|t| t.as_ref().to_string()).collect()
}

/// Target-side start positions for a set of edits of one source sentence,
/// listed in application order.
pub fn target_starts(spans: &[&EditSpan]) -> Vec<usize> {
    let mut shift: isize = 0;
    spans
        .iter()
        .map(|s| {
            let start = (s.start + shift) as usize;
            shift += s.correction.len() as isize - (s.end - s.start);
            start
        })
        .collect()
}

/// Which sides of an edit are non-empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EditKind {
    Insertion,
    Deletion,
    Replacement,
}

/// An edit located inside annotated source and corrected sentences.
#[derive(Debug, Clone, Copy)]
pub struct EditView<'a> {
    pub src_sentence: &'a AnnotatedSentence,
    pub trg_sentence: &'a AnnotatedSentence,
    pub src_range: (usize, usize),
    pub trg_range: (usize, usize),
}

impl<'a> EditView<'a> {
    pub fn new(
        src_sentence: &'a AnnotatedSentence,
        trg_sentence: &'a AnnotatedSentence,
        src_range: Range<usize>,
        trg_range: Range<usize>,
    ) -> Result<Self> {
        if src_range.is_empty() && trg_range.is_empty() {
            return Err(Error::EditConflict(
                "edit has neither source nor correction tokens".into(),
            ));
        }
        for (what, r, s) in [
            ("source", &src_range, src_sentence),
            ("corrected", &trg_range, trg_sentence),
        ] {
            if r.start > r.end || r.end > s.len() {
                return Err(Error::AnnotationMissing(format!(
                    "{what} span {}..{} not covered by a {}-token annotation",
                    r.start,
                    r.end,
                    s.len()
                )));
            }
        }
        Ok(EditView {
            src_sentence,
            trg_sentence,
            src_range: (src_range.start, src_range.end),
            trg_range: (trg_range.start, trg_range.end),
        })
    }

    pub fn kind(&self) -> EditKind {
        match (self.src_tokens().is_empty(), self.trg_tokens().is_empty()) {
            (true, _) => EditKind::Insertion,
            (_, true) => EditKind::Deletion,
            _ => EditKind::Replacement,
        }
    }

    pub fn src_tokens(&self) -> &'a [Token] {
        &self.src_sentence.tokens()[self.src_range.0..self.src_range.1]
    }

    pub fn trg_tokens(&self) -> &'a [Token] {
        &self.trg_sentence.tokens()[self.trg_range.0..self.trg_range.1]
    }

    pub fn src_head(&self) -> Option<&'a Token> {
        let (s, e) = self.src_range;
        self.src_sentence.span_head(s, e).ok()
    }

    pub fn trg_head(&self) -> Option<&'a Token> {
        let (s, e) = self.trg_range;
        self.trg_sentence.span_head(s, e).ok()
    }
}
