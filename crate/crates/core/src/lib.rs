//! Classification of grammatical error correction edits.
//!
//! Edits between a learner sentence and its correction receive an
//! ERRANT-style base type and a SErCl morphosyntactic type (`UD_l -> UD_c`
//! over Universal Dependencies annotations). The two are merged into a
//! single label such as `R:Spell`, `U:Det`, `R:Verb:WC` or `R:Noun->Propn`.
//!
//! The usual entry points are [`pipeline::run`] for whole corpora and
//! [`classify_edit`] for a single annotated edit.
//!
//! ```
//! use serrant::{pipeline, Lexicon, PipelineConfig, Wordlist};
//!
//! let config = PipelineConfig {
//!     wordlist: Some(Wordlist::parse("i\nwork\n").unwrap()),
//!     lexicon: Lexicon::builtin(),
//!     ..PipelineConfig::default()
//! };
//! let inputs = pipeline::Inputs::parallel_text("I werk\n", "I work\n").unwrap();
//! let records = pipeline::run(&config, &inputs).unwrap();
//! assert_eq!(records[0].edits[0].type_label, "R:Spell");
//! ```

pub mod base;
pub mod combine;
pub mod corpus_io;
mod error;
pub mod extract;
pub mod pipeline;
pub mod report;
pub mod sercl;
pub mod ud;

pub use base::{classify_base, BaseType, Wordlist};
pub use combine::{combine, Body, EditContext, Named, Operation, SerrantType, Suffix};
pub use corpus_io::{emit_m2, parse_m2, read_parallel, EditSpan, M2Edit, M2Record};
pub use error::{Error, Result};
pub use extract::{align, align_annotated, merge, AlignKind, AlignmentOp, Edit, EditView};
pub use pipeline::{classify_corpus_parallel, classify_edit, run, Arrow, PipelineConfig};
pub use report::{emit_report, type_distribution, ReportFormat, TypeDistribution};
pub use sercl::{classify_sercl, Granularity, SerclSide, SerclType};
pub use ud::{
    attach, fallback_annotate, parse_conllu, AnnotatedSentence, Features, Lexicon, Token, Upos,
};
