//! ERRANT-style base classification.
//!
//! A fixed cascade where the first matching step decides the type:
//!
//! 1. insertions and deletions take the POS of the inserted/deleted span;
//! 2. case or whitespace changes are orthography;
//! 3. a non-word corrected to a nearby word is a spelling error;
//! 4. single-token pairs sharing lemma and POS get an inflectional subtype;
//!    two auxiliaries with different lemmas are a tense change;
//! 5. a shared lemma with different POS is morphology;
//! 6. different lemmas with the same POS give that POS;
//! 7. multi-token replacements get a POS when all tokens share one;
//! 8. anything else is OTHER.

use std::collections::HashSet;
use std::fmt;

use crate::extract::{EditKind, EditView};
use crate::ud::{Token, Upos};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseType {
    Spell,
    Orth,
    Morph,
    VerbTense,
    VerbForm,
    VerbInfl,
    VerbSva,
    NounNum,
    AdjForm,
    /// A part-of-speech category. `AUX` is always folded into `VERB`.
    Pos(Upos),
    Other,
}

impl BaseType {
    pub fn pos(upos: Upos) -> Self {
        BaseType::Pos(if upos == Upos::Aux { Upos::Verb } else { upos })
    }

    pub fn pos_payload(self) -> Option<Upos> {
        match self {
            BaseType::Pos(u) => Some(u),
            _ => None,
        }
    }

    /// The category in type-label style, e.g. `Verb:Tense` or `Prep`.
    pub fn label(self) -> &'static str {
        match self {
            BaseType::Spell => "Spell",
            BaseType::Orth => "Orth",
            BaseType::Morph => "Morph",
            BaseType::VerbTense => "Verb:Tense",
            BaseType::VerbForm => "Verb:Form",
            BaseType::VerbInfl => "Verb:Infl",
            BaseType::VerbSva => "Verb:SVA",
            BaseType::NounNum => "Noun:Num",
            BaseType::AdjForm => "Adj:Form",
            BaseType::Pos(u) => pos_label(u),
            BaseType::Other => "Other",
        }
    }
}

impl fmt::Display for BaseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// ERRANT's names for POS categories.
pub fn pos_label(upos: Upos) -> &'static str {
    match upos {
        Upos::Adp => "Prep",
        Upos::Cconj | Upos::Sconj => "Conj",
        Upos::Aux => "Verb",
        u => u.label(),
    }
}

/// Lowercased valid word forms used by spelling detection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wordlist {
    entries: HashSet<String>,
}

impl Wordlist {
    /// One word per line; blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_words(text.lines())
    }

    pub fn from_words<I, S>(words: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let entries: HashSet<String> = words
            .into_iter()
            .map(|w| w.as_ref().trim().to_lowercase())
            .filter(|w| !w.is_empty())
            .collect();
        if entries.is_empty() {
            return Err(Error::Config("wordlist is empty".into()));
        }
        Ok(Wordlist { entries })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains(&word.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Case or whitespace-only difference between the two sides.
pub fn detect_orthography<S: AsRef<str>, T: AsRef<str>>(source: &[S], correction: &[T]) -> bool {
    fn squash<S: AsRef<str>>(toks: &[S]) -> String {
        toks.iter()
            .flat_map(|t| t.as_ref().chars())
            .filter(|c| !c.is_whitespace())
            .flat_map(char::to_lowercase)
            .collect()
    }
    squash(source) == squash(correction)
}

/// A non-word corrected to a word within `max(1, ceil(len/4))` character edits.
pub fn detect_spelling(source: &str, correction: &str, wordlist: &Wordlist) -> bool {
    let (src, cor) = (source.to_lowercase(), correction.to_lowercase());
    if wordlist.contains(&src) || !wordlist.contains(&cor) {
        return false;
    }
    let limit = cor.chars().count().div_ceil(4).max(1);
    strsim::levenshtein(&src, &cor) <= limit
}

fn differs(a: &Token, b: &Token, feat: &str) -> bool {
    a.feat(feat) != b.feat(feat)
}

fn shared_upos(tokens: &[Token]) -> Option<Upos> {
    let first = tokens.first()?.upos;
    tokens.iter().all(|t| t.upos == first).then_some(first)
}

fn missing(side: &str) -> Error {
    Error::AnnotationMissing(format!("no head token for the {side} span"))
}

pub fn classify_base(edit: &EditView<'_>, wordlist: Option<&Wordlist>) -> Result<BaseType> {
    let (src, trg) = (edit.src_tokens(), edit.trg_tokens());

    if edit.kind() != EditKind::Replacement {
        let (side, head) = if src.is_empty() {
            (trg, edit.trg_head().ok_or_else(|| missing("corrected"))?)
        } else {
            (src, edit.src_head().ok_or_else(|| missing("source"))?)
        };
        return Ok(match shared_upos(side) {
            Some(_) => BaseType::pos(head.upos),
            None => BaseType::Other,
        });
    }

    let src_forms: Vec<&str> = src.iter().map(|t| t.form.as_str()).collect();
    let trg_forms: Vec<&str> = trg.iter().map(|t| t.form.as_str()).collect();
    if detect_orthography(&src_forms, &trg_forms) {
        return Ok(BaseType::Orth);
    }

    if let ([s], [t]) = (src, trg) {
        let wordlist =
            wordlist.ok_or_else(|| Error::Config("spelling detection needs a wordlist".into()))?;
        if detect_spelling(&s.form, &t.form, wordlist) {
            return Ok(BaseType::Spell);
        }
        let same_lemma = s.lemma == t.lemma;
        let same_upos = s.upos == t.upos;
        return Ok(match (same_lemma, same_upos) {
            (true, true) => inflection(s, t),
            (false, true) if s.upos == Upos::Aux => BaseType::VerbTense,
            (true, false) => BaseType::Morph,
            (false, true) => BaseType::pos(s.upos),
            (false, false) => BaseType::Other,
        });
    }

    let sh = edit.src_head().ok_or_else(|| missing("source"))?;
    let th = edit.trg_head().ok_or_else(|| missing("corrected"))?;
    if sh.upos.is_verbal() && th.upos.is_verbal() && differs(sh, th, "Tense") {
        return Ok(BaseType::VerbTense);
    }
    match (shared_upos(src), shared_upos(trg)) {
        (Some(a), Some(b)) if a == b => Ok(BaseType::pos(a)),
        _ => Ok(BaseType::Other),
    }
}

/// Same lemma, same POS, single tokens.
fn inflection(s: &Token, t: &Token) -> BaseType {
    match s.upos {
        Upos::Noun if differs(s, t, "Number") => BaseType::NounNum,
        u if u.is_verbal() => {
            if differs(s, t, "Tense") {
                BaseType::VerbTense
            } else if differs(s, t, "VerbForm") {
                BaseType::VerbForm
            } else if differs(s, t, "Person") || differs(s, t, "Number") {
                BaseType::VerbSva
            } else if s.feats == t.feats {
                BaseType::VerbInfl
            } else {
                BaseType::pos(u)
            }
        }
        Upos::Adj if differs(s, t, "Degree") => BaseType::AdjForm,
        u => BaseType::pos(u),
    }
}
