use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A malformed line in an M2 file. Line numbers are 1-based.
    #[error("M2 line {line}: {message}")]
    M2Syntax { line: usize, message: String },

    #[error("M2 line {line}: annotation line appears before any sentence line")]
    M2Structure { line: usize },

    /// A record that cannot be written out as M2.
    #[error("M2 record {index}: {message}")]
    M2Invalid { index: usize, message: String },

    #[error("parallel input line counts differ: {original} original vs {corrected} corrected")]
    LineCount { original: usize, corrected: usize },

    #[error("CoNLL-U line {line}: {message}")]
    Conllu { line: usize, message: String },

    #[error("lexicon line {line}: {message}")]
    Lexicon { line: usize, message: String },

    #[error("invalid annotated sentence: {0}")]
    InvalidSentence(String),

    #[error("annotation has {annotated} tokens but sentence has {surface}")]
    AttachLength { annotated: usize, surface: usize },

    #[error("annotation diverges from sentence at token {index}: {annotated:?} vs {surface:?}")]
    AttachForm {
        index: usize,
        annotated: String,
        surface: String,
    },

    #[error("span {start}..{end} is not a non-empty span of a {len}-token sentence")]
    BadSpan {
        start: usize,
        end: usize,
        len: usize,
    },

    #[error("missing annotation: {0}")]
    AnnotationMissing(String),

    #[error("edits cannot be applied: {0}")]
    EditConflict(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("{what} count mismatch: expected {expected}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("sentence {index}: {source}")]
    Sentence {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn at_sentence(self, index: usize) -> Error {
        Error::Sentence {
            index,
            source: Box::new(self),
        }
    }

    /// True for errors caused by the caller's setup rather than by input data.
    pub fn is_config(&self) -> bool {
        match self {
            Error::Config(_) => true,
            Error::Sentence { source, .. } => source.is_config(),
            _ => false,
        }
    }
}
