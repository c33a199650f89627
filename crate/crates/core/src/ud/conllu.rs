use super::{parse_feats, AnnotatedSentence, Token, Upos};
use crate::{Error, Result};

/// Parses CoNLL-U text into sentences.
///
/// Comment lines, multiword-token ranges (`1-2`) and empty nodes (`1.1`)
/// are skipped. Heads become 0-based with `None` for the root.
pub fn parse_conllu(text: &str) -> Result<Vec<AnnotatedSentence>> {
    let mut sentences = Vec::new();
    let mut block: Vec<(usize, Token, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            flush(&mut block, &mut sentences)?;
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Conllu {
            line: lineno,
            message,
        };
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(err(format!("expected 10 columns, found {}", cols.len())));
        }
        let id = cols[0];
        if let Some((a, b)) = id.split_once('-') {
            if a.parse::<usize>().is_err() || b.parse::<usize>().is_err() {
                return Err(err(format!("bad multiword range {id:?}")));
            }
            continue;
        }
        if let Some((a, b)) = id.split_once('.') {
            if a.parse::<usize>().is_err() || b.parse::<usize>().is_err() {
                return Err(err(format!("bad empty node id {id:?}")));
            }
            continue;
        }
        let id: usize = id
            .parse()
            .map_err(|_| err(format!("non-integer id {id:?}")))?;
        if id != block.len() + 1 {
            return Err(err(format!(
                "token id {id} out of sequence, expected {}",
                block.len() + 1
            )));
        }
        let upos: Upos = cols[3].parse().map_err(|e| err(format!("{e}")))?;
        let feats = parse_feats(cols[5]).map_err(err)?;
        let head: usize = cols[6]
            .parse()
            .map_err(|_| err(format!("non-integer head {:?}", cols[6])))?;
        let form = cols[1].to_string();
        let lemma = if cols[2] == "_" && form != "_" {
            form.to_lowercase()
        } else {
            cols[2].to_lowercase()
        };
        block.push((
            lineno,
            Token {
                index: id - 1,
                form,
                lemma,
                upos,
                feats,
                head: head.checked_sub(1),
                deprel: cols[7].to_string(),
            },
            head,
        ));
    }
    flush(&mut block, &mut sentences)?;
    Ok(sentences)
}

fn flush(
    block: &mut Vec<(usize, Token, usize)>,
    sentences: &mut Vec<AnnotatedSentence>,
) -> Result<()> {
    if block.is_empty() {
        return Ok(());
    }
    let n = block.len();
    if let Some((line, _, head)) = block.iter().find(|(_, _, head)| *head > n) {
        return Err(Error::Conllu {
            line: *line,
            message: format!("head {head} out of range for a {n}-token sentence"),
        });
    }
    let first_line = block[0].0;
    let tokens = block.drain(..).map(|(_, t, _)| t).collect();
    let sentence = AnnotatedSentence::new(tokens).map_err(|e| Error::Conllu {
        line: first_line,
        message: e.to_string(),
    })?;
    sentences.push(sentence);
    Ok(())
}
