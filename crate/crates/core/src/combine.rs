//! Merging the base type and the SErCl type into the final label.
//!
//! The base type is kept unless one of the following applies:
//!
//! * OTHER: replaced by the SErCl type, except for unreliable tags
//!   (INTJ, NUM, SYM, X, PUNCT) and PROPN paired with anything but PROPN.
//! * MORPH: replaced by the SErCl type, with the same screen, but ADJ/PROPN
//!   pairs are kept.
//! * ORTH: a mid-sentence change into a proper noun becomes `Tag->Propn`.
//! * VERB: auxiliaries are split out as `Aux`.
//! * VERB:Form: a noun corrected to a verb becomes `Noun->Verb`.
//! * PRON/DET: a pronoun/determiner swap becomes `Pron->Det` or `Det->Pron`.
//! * VERB:Tense: kept for be/have/will, `Modal` for two modals, otherwise
//!   the SErCl type.
//!
//! Then `WC` marks a same-tag replacement with different lemmas and `MW` a
//! multi-token edit with an unnamed type.

use std::fmt;

use crate::base::{pos_label, BaseType};
use crate::extract::{EditKind, EditView};
use crate::sercl::SerclType;
use crate::ud::{Token, Upos};

const MODALS: [&str; 9] = [
    "can", "could", "may", "might", "shall", "should", "will", "would", "must",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    Replace,
    Missing,
    Unnecessary,
}

impl Operation {
    pub fn initial(self) -> &'static str {
        match self {
            Operation::Replace => "R",
            Operation::Missing => "M",
            Operation::Unnecessary => "U",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Named {
    Spell,
    Orth,
    Morph,
    VerbTense,
    VerbForm,
    VerbInfl,
    VerbSva,
    NounNum,
    AdjForm,
    Modal,
    Other,
}

impl Named {
    pub fn label(self) -> &'static str {
        match self {
            Named::Spell => "Spell",
            Named::Orth => "Orth",
            Named::Morph => "Morph",
            Named::VerbTense => "Verb:Tense",
            Named::VerbForm => "Verb:Form",
            Named::VerbInfl => "Verb:Infl",
            Named::VerbSva => "Verb:SVA",
            Named::NounNum => "Noun:Num",
            Named::AdjForm => "Adj:Form",
            Named::Modal => "Modal",
            Named::Other => "Other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Body {
    Named(Named),
    /// A base POS category, rendered with ERRANT names (`Prep`, `Conj`).
    Pos(Upos),
    /// A single UD tag chosen by a rule (`Aux`, `Propn`).
    Tag(Upos),
    Sercl(SerclType),
}

impl Body {
    /// A single tag with no feature qualifiers.
    pub fn is_single_tag(&self) -> bool {
        match self {
            Body::Pos(_) | Body::Tag(_) => true,
            Body::Sercl(s) => s.collapsed && !s.has_qualifiers(),
            Body::Named(_) => false,
        }
    }

    /// A tag or tag pair with no feature qualifiers.
    pub fn is_plain_tags(&self) -> bool {
        match self {
            Body::Pos(_) | Body::Tag(_) => true,
            Body::Sercl(s) => !s.has_qualifiers(),
            Body::Named(_) => false,
        }
    }

    pub fn render(&self, arrow: &str) -> String {
        match self {
            Body::Named(n) => n.label().to_string(),
            Body::Pos(u) => pos_label(*u).to_string(),
            Body::Tag(u) => u.label().to_string(),
            Body::Sercl(s) => s.render(arrow),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suffix {
    WC,
    MW,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SerrantType {
    pub op: Operation,
    pub body: Body,
    pub suffixes: Vec<Suffix>,
}

impl SerrantType {
    pub fn render(&self, arrow: &str) -> String {
        let mut out = format!("{}:{}", self.op.initial(), self.body.render(arrow));
        for s in &self.suffixes {
            out.push_str(match s {
                Suffix::WC => ":WC",
                Suffix::MW => ":MW",
            });
        }
        out
    }
}

impl fmt::Display for SerrantType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("->"))
    }
}

/// Head token summary for one side of an edit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadInfo {
    pub upos: Upos,
    pub lemma: String,
}

impl From<&Token> for HeadInfo {
    fn from(t: &Token) -> Self {
        HeadInfo {
            upos: t.upos,
            lemma: t.lemma.clone(),
        }
    }
}

/// Everything about an edit the combination rules look at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditContext {
    pub sentence_initial: bool,
    pub src_lemmas: Vec<String>,
    pub trg_lemmas: Vec<String>,
    pub src_forms: Vec<String>,
    pub trg_forms: Vec<String>,
    pub src_head: Option<HeadInfo>,
    pub trg_head: Option<HeadInfo>,
    pub multi_word: bool,
}

impl EditContext {
    pub fn from_view(edit: &EditView<'_>) -> Self {
        let (src, trg) = (edit.src_tokens(), edit.trg_tokens());
        let lemmas = |t: &[Token]| t.iter().map(|t| t.lemma.clone()).collect();
        let forms = |t: &[Token]| t.iter().map(|t| t.form.clone()).collect();
        EditContext {
            sentence_initial: edit.src_range.0 == 0,
            src_lemmas: lemmas(src),
            trg_lemmas: lemmas(trg),
            src_forms: forms(src),
            trg_forms: forms(trg),
            src_head: edit.src_head().map(HeadInfo::from),
            trg_head: edit.trg_head().map(HeadInfo::from),
            multi_word: src.len() > 1 || trg.len() > 1,
        }
    }

    pub fn kind(&self) -> EditKind {
        match (self.src_forms.is_empty(), self.trg_forms.is_empty()) {
            (true, _) => EditKind::Insertion,
            (_, true) => EditKind::Deletion,
            _ => EditKind::Replacement,
        }
    }

    fn heads(&self) -> (Option<Upos>, Option<Upos>) {
        (
            self.src_head.as_ref().map(|h| h.upos),
            self.trg_head.as_ref().map(|h| h.upos),
        )
    }
}

fn unreliable(u: Option<Upos>) -> bool {
    matches!(
        u,
        Some(Upos::Intj | Upos::Num | Upos::Sym | Upos::X | Upos::Punct)
    )
}

fn is(u: Option<Upos>, tag: Upos) -> bool {
    u == Some(tag)
}

/// A SErCl body; a one-sided type keeps only its present tag since the
/// operation prefix already says what is missing.
fn sercl_body(sercl: &SerclType) -> Body {
    match (sercl.left.tag, sercl.right.tag) {
        (Some(u), None) | (None, Some(u)) => Body::Tag(u),
        _ => Body::Sercl(sercl.clone()),
    }
}

fn tense_side(lemmas: &[String], forms: &[String]) -> bool {
    lemmas.iter().any(|l| l == "be" || l == "have")
        || forms.iter().any(|f| f.eq_ignore_ascii_case("will"))
}

fn modal(forms: &[String]) -> bool {
    matches!(forms, [f] if MODALS.contains(&f.to_lowercase().as_str()))
}

pub fn combine(base: BaseType, sercl: &SerclType, ctx: &EditContext) -> SerrantType {
    let (src, trg) = ctx.heads();
    let body = match base {
        BaseType::Other => {
            if unreliable(src) || unreliable(trg) {
                Body::Named(Named::Other)
            } else if is(src, Upos::Propn) && is(trg, Upos::Propn) {
                Body::Tag(Upos::Propn)
            } else if is(src, Upos::Propn) || is(trg, Upos::Propn) {
                Body::Named(Named::Other)
            } else {
                sercl_body(sercl)
            }
        }
        BaseType::Morph => {
            let adj_propn = matches!(
                (src, trg),
                (Some(Upos::Adj), Some(Upos::Propn)) | (Some(Upos::Propn), Some(Upos::Adj))
            );
            let propn_mismatch = is(src, Upos::Propn) != is(trg, Upos::Propn);
            if adj_propn {
                sercl_body(sercl)
            } else if unreliable(src) || unreliable(trg) || propn_mismatch {
                Body::Named(Named::Other)
            } else {
                sercl_body(sercl)
            }
        }
        BaseType::Orth => {
            if !ctx.sentence_initial
                && is(trg, Upos::Propn)
                && src.is_some()
                && !is(src, Upos::Propn)
            {
                sercl_body(sercl)
            } else {
                Body::Named(Named::Orth)
            }
        }
        BaseType::Pos(Upos::Verb) => {
            let present: Vec<Upos> = [src, trg].into_iter().flatten().collect();
            let aux = present.iter().filter(|&&u| u == Upos::Aux).count();
            if !present.is_empty() && aux == present.len() {
                Body::Tag(Upos::Aux)
            } else if present.len() == 2 && aux == 1 {
                sercl_body(sercl)
            } else {
                Body::Pos(Upos::Verb)
            }
        }
        BaseType::VerbForm => {
            if is(src, Upos::Noun) && is(trg, Upos::Verb) {
                Body::Sercl(SerclType::pair(Upos::Noun, Upos::Verb))
            } else {
                Body::Named(Named::VerbForm)
            }
        }
        BaseType::Pos(u @ (Upos::Pron | Upos::Det)) => {
            if matches!(
                (src, trg),
                (Some(Upos::Pron), Some(Upos::Det)) | (Some(Upos::Det), Some(Upos::Pron))
            ) {
                sercl_body(sercl)
            } else {
                Body::Pos(u)
            }
        }
        BaseType::VerbTense => {
            if tense_side(&ctx.src_lemmas, &ctx.src_forms)
                && tense_side(&ctx.trg_lemmas, &ctx.trg_forms)
            {
                Body::Named(Named::VerbTense)
            } else if modal(&ctx.src_forms) && modal(&ctx.trg_forms) {
                Body::Named(Named::Modal)
            } else {
                sercl_body(sercl)
            }
        }
        BaseType::Pos(u) => Body::Pos(u),
        BaseType::Spell => Body::Named(Named::Spell),
        BaseType::VerbInfl => Body::Named(Named::VerbInfl),
        BaseType::VerbSva => Body::Named(Named::VerbSva),
        BaseType::NounNum => Body::Named(Named::NounNum),
        BaseType::AdjForm => Body::Named(Named::AdjForm),
    };

    let kind = ctx.kind();
    let mut suffixes = Vec::new();
    let lemmas_differ = match (&ctx.src_head, &ctx.trg_head) {
        (Some(s), Some(t)) => s.lemma != t.lemma,
        _ => false,
    };
    if kind == EditKind::Replacement && body.is_single_tag() && lemmas_differ {
        suffixes.push(Suffix::WC);
    }
    if ctx.multi_word && body.is_plain_tags() {
        suffixes.push(Suffix::MW);
    }
    let op = match kind {
        EditKind::Insertion => Operation::Missing,
        EditKind::Deletion => Operation::Unnecessary,
        EditKind::Replacement => Operation::Replace,
    };
    SerrantType { op, body, suffixes }
}
