//! Universal Dependencies annotations: tokens, sentences and span heads.

mod conllu;
mod lexicon;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

pub use conllu::parse_conllu;
pub use lexicon::{fallback_annotate, LexEntry, Lexicon};

/// Morphological features, `Name=Value`, ordered by name.
pub type Features = BTreeMap<String, String>;

/// The 17 universal part-of-speech tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Upos {
    Adj,
    Adp,
    Adv,
    Aux,
    Cconj,
    Det,
    Intj,
    Noun,
    Num,
    Part,
    Pron,
    Propn,
    Punct,
    Sconj,
    Sym,
    Verb,
    X,
}

impl Upos {
    pub const ALL: [Upos; 17] = [
        Upos::Adj,
        Upos::Adp,
        Upos::Adv,
        Upos::Aux,
        Upos::Cconj,
        Upos::Det,
        Upos::Intj,
        Upos::Noun,
        Upos::Num,
        Upos::Part,
        Upos::Pron,
        Upos::Propn,
        Upos::Punct,
        Upos::Sconj,
        Upos::Sym,
        Upos::Verb,
        Upos::X,
    ];

    /// The tag as written in CoNLL-U, e.g. `PROPN`.
    pub fn as_str(self) -> &'static str {
        match self {
            Upos::Adj => "ADJ",
            Upos::Adp => "ADP",
            Upos::Adv => "ADV",
            Upos::Aux => "AUX",
            Upos::Cconj => "CCONJ",
            Upos::Det => "DET",
            Upos::Intj => "INTJ",
            Upos::Noun => "NOUN",
            Upos::Num => "NUM",
            Upos::Part => "PART",
            Upos::Pron => "PRON",
            Upos::Propn => "PROPN",
            Upos::Punct => "PUNCT",
            Upos::Sconj => "SCONJ",
            Upos::Sym => "SYM",
            Upos::Verb => "VERB",
            Upos::X => "X",
        }
    }

    /// The tag in type-label capitalization, e.g. `Propn`.
    pub fn label(self) -> &'static str {
        match self {
            Upos::Adj => "Adj",
            Upos::Adp => "Adp",
            Upos::Adv => "Adv",
            Upos::Aux => "Aux",
            Upos::Cconj => "Cconj",
            Upos::Det => "Det",
            Upos::Intj => "Intj",
            Upos::Noun => "Noun",
            Upos::Num => "Num",
            Upos::Part => "Part",
            Upos::Pron => "Pron",
            Upos::Propn => "Propn",
            Upos::Punct => "Punct",
            Upos::Sconj => "Sconj",
            Upos::Sym => "Sym",
            Upos::Verb => "Verb",
            Upos::X => "X",
        }
    }

    pub fn is_verbal(self) -> bool {
        matches!(self, Upos::Verb | Upos::Aux)
    }
}

impl fmt::Display for Upos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseUposError(pub String);

impl fmt::Display for ParseUposError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown UPOS tag {:?}", self.0)
    }
}

impl std::error::Error for ParseUposError {}

impl FromStr for Upos {
    type Err = ParseUposError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Upos::ALL
            .iter()
            .copied()
            .find(|u| u.as_str() == s)
            .ok_or_else(|| ParseUposError(s.to_string()))
    }
}

/// One annotated word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// 0-based position in the sentence.
    pub index: usize,
    pub form: String,
    /// Always lowercase.
    pub lemma: String,
    pub upos: Upos,
    pub feats: Features,
    /// 0-based index of the syntactic head, `None` for the root.
    pub head: Option<usize>,
    pub deprel: String,
}

impl Token {
    pub fn feat(&self, name: &str) -> Option<&str> {
        self.feats.get(name).map(String::as_str)
    }
}

/// A sentence whose tokens form a single rooted dependency tree.
///
/// Construction validates the tree, so every value of this type has
/// exactly one root (unless empty) and no head cycles.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AnnotatedSentence {
    tokens: Vec<Token>,
}

impl AnnotatedSentence {
    pub fn new(mut tokens: Vec<Token>) -> Result<Self> {
        let n = tokens.len();
        let mut roots = 0;
        for (i, tok) in tokens.iter_mut().enumerate() {
            if tok.index != i {
                return Err(Error::InvalidSentence(format!(
                    "token at position {i} carries index {}",
                    tok.index
                )));
            }
            match tok.head {
                None => roots += 1,
                Some(h) if h == i => {
                    return Err(Error::InvalidSentence(format!("token {i} heads itself")))
                }
                Some(h) if h >= n => {
                    return Err(Error::InvalidSentence(format!(
                        "token {i} has head {h} outside the sentence"
                    )))
                }
                Some(_) => {}
            }
            if tok.lemma.chars().any(char::is_uppercase) {
                tok.lemma = tok.lemma.to_lowercase();
            }
        }
        if n > 0 && roots != 1 {
            return Err(Error::InvalidSentence(format!(
                "expected exactly one root, found {roots}"
            )));
        }
        // With a single root, a walk of more than n steps means a cycle.
        for start in 0..n {
            let mut cur = start;
            let mut steps = 0;
            while let Some(h) = tokens[cur].head {
                cur = h;
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidSentence(format!(
                        "head cycle through token {start}"
                    )));
                }
            }
        }
        Ok(AnnotatedSentence { tokens })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Token> {
        self.tokens.get(index)
    }

    pub fn forms(&self) -> impl Iterator<Item = &str> {
        self.tokens.iter().map(|t| t.form.as_str())
    }

    /// The head of the subtree covering `start..end`: the leftmost token in
    /// the span whose own head is the root or lies outside the span.
    pub fn span_head(&self, start: usize, end: usize) -> Result<&Token> {
        if start >= end || end > self.tokens.len() {
            return Err(Error::BadSpan {
                start,
                end,
                len: self.tokens.len(),
            });
        }
        let span = start..end;
        self.tokens[span.clone()]
            .iter()
            .find(|t| t.head.is_none_or(|h| !span.contains(&h)))
            .ok_or_else(|| Error::InvalidSentence("span has no external head".into()))
    }
}

impl std::ops::Index<usize> for AnnotatedSentence {
    type Output = Token;

    fn index(&self, index: usize) -> &Token {
        &self.tokens[index]
    }
}

/// Binds an annotation to a tokenized sentence, requiring identical forms.
pub fn attach<S: AsRef<str>>(
    annotated: AnnotatedSentence,
    surface: &[S],
) -> Result<AnnotatedSentence> {
    if let Some((index, (tok, word))) = annotated
        .tokens
        .iter()
        .zip(surface)
        .enumerate()
        .find(|(_, (tok, word))| tok.form != word.as_ref())
    {
        return Err(Error::AttachForm {
            index,
            annotated: tok.form.clone(),
            surface: word.as_ref().to_string(),
        });
    }
    if annotated.len() != surface.len() {
        return Err(Error::AttachLength {
            annotated: annotated.len(),
            surface: surface.len(),
        });
    }
    Ok(annotated)
}

/// Parses a `Name=Value|Name=Value` feature column; `_` is empty.
pub fn parse_feats(column: &str) -> std::result::Result<Features, String> {
    let mut feats = Features::new();
    if column == "_" || column.is_empty() {
        return Ok(feats);
    }
    for pair in column.split('|') {
        match pair.split_once('=') {
            Some((name, value)) if !name.is_empty() && !value.is_empty() => {
                feats.insert(name.to_string(), value.to_string());
            }
            _ => return Err(format!("malformed feature {pair:?}")),
        }
    }
    Ok(feats)
}
