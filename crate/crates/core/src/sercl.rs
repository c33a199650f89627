//! SErCl types: the UD description of the source span head, an arrow, and
//! the UD description of the correction span head.

use std::fmt;

use crate::extract::EditView;
use crate::ud::{AnnotatedSentence, Token, Upos};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Granularity {
    /// Tags only.
    #[default]
    Upos,
    /// Tags qualified by the features whose values differ across the edit.
    UposFeats,
}

/// One side of a SErCl type. `tag` is `None` for an empty span.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SerclSide {
    pub tag: Option<Upos>,
    pub qualifiers: Vec<String>,
}

impl SerclSide {
    pub fn tag(upos: Upos) -> Self {
        SerclSide {
            tag: Some(upos),
            qualifiers: Vec::new(),
        }
    }

    pub fn none() -> Self {
        SerclSide::default()
    }

    pub fn render(&self) -> String {
        match self.tag {
            None => "None".to_string(),
            Some(u) => std::iter::once(u.label())
                .chain(self.qualifiers.iter().map(String::as_str))
                .collect::<Vec<_>>()
                .join(":"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SerclType {
    pub left: SerclSide,
    pub right: SerclSide,
    pub collapsed: bool,
}

impl SerclType {
    pub fn new(left: SerclSide, right: SerclSide) -> Result<Self> {
        if left.tag.is_none() && right.tag.is_none() {
            return Err(Error::EditConflict(
                "a SErCl type needs at least one side".into(),
            ));
        }
        let collapsed = left == right;
        Ok(SerclType {
            left,
            right,
            collapsed,
        })
    }

    pub fn pair(left: Upos, right: Upos) -> Self {
        Self::new(SerclSide::tag(left), SerclSide::tag(right)).expect("both sides present")
    }

    pub fn has_qualifiers(&self) -> bool {
        !self.left.qualifiers.is_empty() || !self.right.qualifiers.is_empty()
    }

    pub fn render(&self, arrow: &str) -> String {
        if self.collapsed {
            self.left.render()
        } else {
            format!("{}{arrow}{}", self.left.render(), self.right.render())
        }
    }
}

impl fmt::Display for SerclType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("->"))
    }
}

/// Readable name for a UD feature value.
fn qualifier(value: &str) -> String {
    match value {
        "Sing" => "singular",
        "Plur" => "plural",
        "Past" => "past",
        "Pres" => "present",
        "Fut" => "future",
        "Inf" => "infinitive",
        "Fin" => "finite",
        "Ger" => "gerund",
        "Part" => "participle",
        "Pos" => "positive",
        "Cmp" => "comparative",
        "Sup" => "superlative",
        "Nom" => "nominative",
        "Acc" => "accusative",
        "Ind" => "indicative",
        "Imp" => "imperative",
        "Sub" => "subjunctive",
        other => return other.to_lowercase(),
    }
    .to_string()
}

fn sides(
    src: Option<&Token>,
    trg: Option<&Token>,
    granularity: Granularity,
) -> (SerclSide, SerclSide) {
    let mut left = src.map_or_else(SerclSide::none, |t| SerclSide::tag(t.upos));
    let mut right = trg.map_or_else(SerclSide::none, |t| SerclSide::tag(t.upos));
    if let (Granularity::UposFeats, Some(s), Some(t)) = (granularity, src, trg) {
        for (name, sv) in &s.feats {
            match t.feats.get(name) {
                Some(tv) if tv != sv => {
                    left.qualifiers.push(qualifier(sv));
                    right.qualifiers.push(qualifier(tv));
                }
                _ => {}
            }
        }
    }
    (left, right)
}

fn head(sentence: &AnnotatedSentence, (start, end): (usize, usize)) -> Result<Option<&Token>> {
    if start == end {
        Ok(None)
    } else {
        sentence.span_head(start, end).map(Some)
    }
}

/// The SErCl type of an edit, from the heads of its two spans.
pub fn classify_sercl(edit: &EditView<'_>, granularity: Granularity) -> Result<SerclType> {
    let src = head(edit.src_sentence, edit.src_range)?;
    let trg = head(edit.trg_sentence, edit.trg_range)?;
    let (left, right) = sides(src, trg, granularity);
    SerclType::new(left, right)
}
