use std::collections::HashMap;

use super::{parse_feats, AnnotatedSentence, Features, Token, Upos};
use crate::{Error, Result};

static BUILTIN: &str = include_str!("../../data/lexicon.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub lemma: String,
    pub upos: Upos,
    pub feats: Features,
}

/// Word form to annotation table used by [`fallback_annotate`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: HashMap<String, LexEntry>,
}

impl Lexicon {
    /// Parses a TSV lexicon: `form<TAB>lemma<TAB>upos<TAB>feats`.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Lexicon {
                line: i + 1,
                message,
            };
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 4 {
                return Err(err(format!("expected 4 columns, found {}", cols.len())));
            }
            if cols[0].is_empty() {
                return Err(err("empty form".into()));
            }
            let upos = cols[2].parse().map_err(|e| err(format!("{e}")))?;
            let feats = parse_feats(cols[3]).map_err(err)?;
            entries.insert(
                cols[0].to_string(),
                LexEntry {
                    lemma: cols[1].to_lowercase(),
                    upos,
                    feats,
                },
            );
        }
        Ok(Lexicon { entries })
    }

    /// A small English function-word lexicon bundled with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("bundled lexicon is well-formed")
    }

    pub fn get(&self, form: &str) -> Option<&LexEntry> {
        self.entries.get(form)
    }

    pub fn insert(&mut self, form: impl Into<String>, entry: LexEntry) {
        self.entries.insert(form.into(), entry);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn feats(pairs: &[(&str, &str)]) -> Features {
    pairs
        .iter()
        .map(|&(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn strip<'a>(word: &'a str, suffix: &str) -> Option<&'a str> {
    word.strip_suffix(suffix)
        .filter(|stem| stem.chars().count() >= 2)
}

fn guess(form: &str, position: usize) -> LexEntry {
    let lower = form.to_lowercase();
    let entry = |lemma: &str, upos, f: &[(&str, &str)]| LexEntry {
        lemma: lemma.to_string(),
        upos,
        feats: feats(f),
    };
    if !form.chars().any(char::is_alphanumeric) {
        return entry(&lower, Upos::Punct, &[]);
    }
    if form.chars().any(|c| c.is_ascii_digit())
        && form
            .chars()
            .all(|c| c.is_ascii_digit() || c == '.' || c == ',')
    {
        return entry(&lower, Upos::Num, &[]);
    }
    if let Some(stem) = strip(&lower, "ing") {
        return entry(stem, Upos::Verb, &[("VerbForm", "Ger")]);
    }
    if let Some(stem) = strip(&lower, "ed") {
        return entry(stem, Upos::Verb, &[("Tense", "Past")]);
    }
    if strip(&lower, "ly").is_some() {
        return entry(&lower, Upos::Adv, &[]);
    }
    if let Some(stem) = strip(&lower, "s").filter(|s| !s.ends_with('s')) {
        return entry(stem, Upos::Noun, &[("Number", "Plur")]);
    }
    if position > 0 && form.chars().next().is_some_and(char::is_uppercase) {
        return entry(&lower, Upos::Propn, &[("Number", "Sing")]);
    }
    entry(&lower, Upos::Noun, &[("Number", "Sing")])
}

/// Annotates tokens from a lexicon plus suffix heuristics.
///
/// Not a tagger: every token heads to the last non-punctuation token, so
/// only single-token span heads are meaningful.
pub fn fallback_annotate<S: AsRef<str>>(tokens: &[S], lexicon: &Lexicon) -> AnnotatedSentence {
    let entries: Vec<LexEntry> = tokens
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let form = t.as_ref();
            lexicon
                .get(form)
                .or_else(|| {
                    (i == 0)
                        .then(|| lexicon.get(&form.to_lowercase()))
                        .flatten()
                })
                .cloned()
                .unwrap_or_else(|| guess(form, i))
        })
        .collect();
    let root = entries
        .iter()
        .rposition(|e| e.upos != Upos::Punct)
        .unwrap_or(entries.len().saturating_sub(1));
    let tokens = tokens
        .iter()
        .zip(entries)
        .enumerate()
        .map(|(i, (form, e))| Token {
            index: i,
            form: form.as_ref().to_string(),
            deprel: match (i == root, e.upos) {
                (true, _) => "root",
                (false, Upos::Punct) => "punct",
                _ => "dep",
            }
            .to_string(),
            lemma: e.lemma,
            upos: e.upos,
            feats: e.feats,
            head: (i != root).then_some(root),
        })
        .collect();
    AnnotatedSentence::new(tokens).expect("flat tree is always valid")
}
