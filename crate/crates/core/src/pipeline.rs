//! End-to-end classification of corpora.
//!
//! Two modes:
//!
//! * classify: parallel original/corrected sentences; edits are extracted
//!   by alignment and typed.
//! * retype: an existing M2 file; spans and corrections are kept and only
//!   the type labels are recomputed. Noop annotations are left untouched.
//!
//! Annotations come from CoNLL-U paired positionally with the sentences, or
//! from [`fallback_annotate`] when none are given. In retype mode the
//! corrected-side CoNLL-U holds one sentence per (record, annotator) group
//! that has at least one non-noop edit, ordered by record and then by
//! ascending annotator id.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::base::{classify_base, Wordlist};
use crate::combine::{combine, EditContext, SerrantType};
use crate::corpus_io::{apply_edits, parse_m2, read_parallel, EditSpan, M2Edit, M2Record};
use crate::extract::{align_annotated, merge, target_starts, EditView};
use crate::sercl::{classify_sercl, Granularity};
use crate::ud::{attach, fallback_annotate, parse_conllu, AnnotatedSentence, Lexicon};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Arrow {
    #[default]
    Ascii,
    Unicode,
}

impl Arrow {
    pub fn as_str(self) -> &'static str {
        match self {
            Arrow::Ascii => "->",
            Arrow::Unicode => "→",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub granularity: Granularity,
    pub arrow: Arrow,
    /// Annotator id written on extracted edits.
    pub annotator_id: u32,
    pub wordlist: Option<Wordlist>,
    /// Used by the fallback annotator when no CoNLL-U is supplied.
    pub lexicon: Lexicon,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            granularity: Granularity::default(),
            arrow: Arrow::default(),
            annotator_id: 0,
            wordlist: None,
            lexicon: Lexicon::builtin(),
        }
    }
}

pub type SentencePair = (Vec<String>, Vec<String>);

#[derive(Debug, Clone)]
pub enum Inputs {
    Parallel {
        pairs: Vec<SentencePair>,
        orig_annotations: Option<Vec<AnnotatedSentence>>,
        cor_annotations: Option<Vec<AnnotatedSentence>>,
    },
    M2 {
        records: Vec<M2Record>,
        orig_annotations: Option<Vec<AnnotatedSentence>>,
        cor_annotations: Option<Vec<AnnotatedSentence>>,
    },
}

impl Inputs {
    pub fn parallel_text(original: &str, corrected: &str) -> Result<Self> {
        Ok(Inputs::Parallel {
            pairs: read_parallel(original, corrected)?,
            orig_annotations: None,
            cor_annotations: None,
        })
    }

    pub fn m2_text(text: &str) -> Result<Self> {
        Ok(Inputs::M2 {
            records: parse_m2(text)?,
            orig_annotations: None,
            cor_annotations: None,
        })
    }

    /// Attaches CoNLL-U annotations for either side.
    pub fn with_conllu(mut self, original: Option<&str>, corrected: Option<&str>) -> Result<Self> {
        let (orig, cor) = match &mut self {
            Inputs::Parallel {
                orig_annotations,
                cor_annotations,
                ..
            }
            | Inputs::M2 {
                orig_annotations,
                cor_annotations,
                ..
            } => (orig_annotations, cor_annotations),
        };
        if let Some(text) = original {
            *orig = Some(parse_conllu(text)?);
        }
        if let Some(text) = corrected {
            *cor = Some(parse_conllu(text)?);
        }
        Ok(self)
    }
}

/// Classifies one edit: base type, SErCl type, then the combination rules.
pub fn classify_edit(config: &PipelineConfig, edit: &EditView<'_>) -> Result<SerrantType> {
    let base = classify_base(edit, config.wordlist.as_ref())?;
    let sercl = classify_sercl(edit, config.granularity)?;
    Ok(combine(base, &sercl, &EditContext::from_view(edit)))
}

enum Job<'a> {
    Pair {
        pair: &'a SentencePair,
        src_ann: Option<&'a AnnotatedSentence>,
        trg_ann: Option<&'a AnnotatedSentence>,
    },
    Record {
        record: &'a M2Record,
        src_ann: Option<&'a AnnotatedSentence>,
        cor_anns: Option<&'a [AnnotatedSentence]>,
    },
}

fn check_count(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::CountMismatch {
            what,
            expected,
            found,
        }
        .at_sentence(expected.min(found)))
    }
}

/// Annotator groups of a record: non-noop, non-empty edit indices keyed
/// by annotator id.
fn groups(record: &M2Record) -> BTreeMap<u32, Vec<usize>> {
    let mut out: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, e) in record.edits.iter().enumerate() {
        if !is_inert(&e.span) {
            out.entry(e.annotator).or_default().push(i);
        }
    }
    out
}

/// Noops and edits with no tokens on either side keep their labels.
fn is_inert(span: &EditSpan) -> bool {
    span.is_noop() || (span.start == span.end && span.correction.is_empty())
}

fn jobs(inputs: &Inputs) -> Result<Vec<Job<'_>>> {
    match inputs {
        Inputs::Parallel {
            pairs,
            orig_annotations,
            cor_annotations,
        } => {
            if let Some(a) = orig_annotations {
                check_count("original CoNLL-U sentence", pairs.len(), a.len())?;
            }
            if let Some(a) = cor_annotations {
                check_count("corrected CoNLL-U sentence", pairs.len(), a.len())?;
            }
            Ok(pairs
                .iter()
                .enumerate()
                .map(|(i, pair)| Job::Pair {
                    pair,
                    src_ann: orig_annotations.as_ref().map(|a| &a[i]),
                    trg_ann: cor_annotations.as_ref().map(|a| &a[i]),
                })
                .collect())
        }
        Inputs::M2 {
            records,
            orig_annotations,
            cor_annotations,
        } => {
            if let Some(a) = orig_annotations {
                check_count("original CoNLL-U sentence", records.len(), a.len())?;
            }
            let mut offset = 0;
            let mut out = Vec::with_capacity(records.len());
            for (i, record) in records.iter().enumerate() {
                let n = groups(record).len();
                let cor_anns = match cor_annotations {
                    Some(a) if offset + n > a.len() => {
                        return Err(Error::CountMismatch {
                            what: "corrected CoNLL-U sentence",
                            expected: offset + n,
                            found: a.len(),
                        }
                        .at_sentence(i))
                    }
                    Some(a) => Some(&a[offset..offset + n]),
                    None => None,
                };
                offset += n;
                out.push(Job::Record {
                    record,
                    src_ann: orig_annotations.as_ref().map(|a| &a[i]),
                    cor_anns,
                });
            }
            if let Some(a) = cor_annotations {
                check_count("corrected CoNLL-U sentence", offset, a.len())?;
            }
            Ok(out)
        }
    }
}

fn annotate<S: AsRef<str>>(
    config: &PipelineConfig,
    given: Option<&AnnotatedSentence>,
    tokens: &[S],
) -> Result<AnnotatedSentence> {
    match given {
        Some(a) => attach(a.clone(), tokens),
        None => Ok(fallback_annotate(tokens, &config.lexicon)),
    }
}

fn classify_pair(
    config: &PipelineConfig,
    (src_tokens, trg_tokens): &SentencePair,
    src_ann: Option<&AnnotatedSentence>,
    trg_ann: Option<&AnnotatedSentence>,
) -> Result<M2Record> {
    let src = annotate(config, src_ann, src_tokens)?;
    let trg = annotate(config, trg_ann, trg_tokens)?;
    let ops = align_annotated(&src, &trg);
    let edits = merge(&ops, src_tokens, trg_tokens)
        .into_iter()
        .map(|e| {
            let view = EditView::new(&src, &trg, e.src_range(), e.trg_range())?;
            let ty = classify_edit(config, &view)?;
            Ok(M2Edit {
                span: e.span,
                type_label: ty.render(config.arrow.as_str()),
                annotator: config.annotator_id,
            })
        })
        .collect::<Result<_>>()?;
    Ok(M2Record {
        source_tokens: src_tokens.clone(),
        edits,
    })
}

fn retype_record(
    config: &PipelineConfig,
    record: &M2Record,
    src_ann: Option<&AnnotatedSentence>,
    cor_anns: Option<&[AnnotatedSentence]>,
) -> Result<M2Record> {
    let src = annotate(config, src_ann, &record.source_tokens)?;
    let mut out = record.clone();
    for (g, (_, mut idxs)) in groups(record).into_iter().enumerate() {
        idxs.sort_by_key(|&i| (record.edits[i].span.start, record.edits[i].span.end));
        let spans: Vec<&EditSpan> = idxs.iter().map(|&i| &record.edits[i].span).collect();
        let corrected = apply_edits(&record.source_tokens, &spans)?;
        let trg = annotate(config, cor_anns.map(|a| &a[g]), &corrected)?;
        for (&i, trg_start) in idxs.iter().zip(target_starts(&spans)) {
            let span = &record.edits[i].span;
            let src_range = span.range().expect("inert edits are excluded");
            let view = EditView::new(
                &src,
                &trg,
                src_range,
                trg_start..trg_start + span.correction.len(),
            )?;
            out.edits[i].type_label = classify_edit(config, &view)?.render(config.arrow.as_str());
        }
    }
    Ok(out)
}

fn run_job(config: &PipelineConfig, index: usize, job: &Job<'_>) -> Result<M2Record> {
    match *job {
        Job::Pair {
            pair,
            src_ann,
            trg_ann,
        } => classify_pair(config, pair, src_ann, trg_ann),
        Job::Record {
            record,
            src_ann,
            cor_anns,
        } => retype_record(config, record, src_ann, cor_anns),
    }
    .map_err(|e| e.at_sentence(index))
}

/// Runs the pipeline on the current thread. Output order follows input order.
pub fn run(config: &PipelineConfig, inputs: &Inputs) -> Result<Vec<M2Record>> {
    jobs(inputs)?
        .iter()
        .enumerate()
        .map(|(i, job)| run_job(config, i, job))
        .collect()
}

/// Same output as [`run`], computed on `worker_count` threads.
pub fn classify_corpus_parallel(
    config: &PipelineConfig,
    inputs: &Inputs,
    worker_count: usize,
) -> Result<Vec<M2Record>> {
    if worker_count == 0 {
        return Err(Error::Config("worker count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let jobs = jobs(inputs)?;
    // Collect every result first so the reported error is the earliest one.
    let results: Vec<Result<M2Record>> = pool.install(|| {
        jobs.par_iter()
            .enumerate()
            .map(|(i, job)| run_job(config, i, job))
            .collect()
    });
    results.into_iter().collect()
}
