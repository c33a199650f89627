//! Helpers shared by the integration suites: reference alignment costs,
//! edit replay, sequence enumeration and annotated fixtures.
#![allow(dead_code)]

use serrant::{AlignKind, AlignmentOp, Edit};

/// Substitution cost as specified, computed from scratch.
pub fn sub_cost(a: &str, b: &str) -> u32 {
    if a == b {
        0
    } else if a.to_lowercase() == b.to_lowercase() {
        1
    } else {
        2
    }
}

fn swappable(src: &[&str], trg: &[&str], i: usize, j: usize) -> bool {
    i + 1 < src.len()
        && j + 1 < trg.len()
        && src[i] != src[i + 1]
        && src[i] == trg[j + 1]
        && src[i + 1] == trg[j]
}

/// Cost of one operation, checking that it is well-formed.
pub fn op_cost(op: &AlignmentOp, src: &[&str], trg: &[&str]) -> u32 {
    match op.kind {
        AlignKind::Match => {
            assert_eq!((op.src.len(), op.trg.len()), (1, 1));
            assert_eq!(
                src[op.src.start], trg[op.trg.start],
                "match of unequal tokens"
            );
            0
        }
        AlignKind::Substitute => {
            assert_eq!((op.src.len(), op.trg.len()), (1, 1));
            let c = sub_cost(src[op.src.start], trg[op.trg.start]);
            assert!(c > 0, "substitution of equal tokens");
            c
        }
        AlignKind::Transpose => {
            assert_eq!((op.src.len(), op.trg.len()), (2, 2));
            assert!(swappable(src, trg, op.src.start, op.trg.start));
            1
        }
        AlignKind::Delete => {
            assert_eq!((op.src.len(), op.trg.len()), (1, 0));
            1
        }
        AlignKind::Insert => {
            assert_eq!((op.src.len(), op.trg.len()), (0, 1));
            1
        }
    }
}

/// Total cost of an alignment, also checking that its ranges tile both
/// sequences in order.
pub fn alignment_cost(ops: &[AlignmentOp], src: &[&str], trg: &[&str]) -> u32 {
    let (mut i, mut j) = (0, 0);
    let mut total = 0;
    for op in ops {
        assert_eq!(
            (op.src.start, op.trg.start),
            (i, j),
            "ranges are not contiguous"
        );
        total += op_cost(op, src, trg);
        i = op.src.end;
        j = op.trg.end;
    }
    assert_eq!(
        (i, j),
        (src.len(), trg.len()),
        "alignment does not cover both sides"
    );
    total
}

/// Minimum over every alignment, enumerated one path at a time.
pub fn brute_force_min(src: &[&str], trg: &[&str]) -> u32 {
    fn go(src: &[&str], trg: &[&str], i: usize, j: usize, acc: u32, best: &mut u32) {
        if i == src.len() && j == trg.len() {
            *best = (*best).min(acc);
            return;
        }
        if i < src.len() && j < trg.len() {
            go(src, trg, i + 1, j + 1, acc + sub_cost(src[i], trg[j]), best);
        }
        if swappable(src, trg, i, j) {
            go(src, trg, i + 2, j + 2, acc + 1, best);
        }
        if i < src.len() {
            go(src, trg, i + 1, j, acc + 1, best);
        }
        if j < trg.len() {
            go(src, trg, i, j + 1, acc + 1, best);
        }
    }
    let mut best = u32::MAX;
    go(src, trg, 0, 0, 0, &mut best);
    best
}

/// Exhaustive search over alignments with the best cost of every
/// `(i, j)` suffix pair memoised.
pub fn exhaustive_min(src: &[&str], trg: &[&str]) -> u32 {
    fn go(src: &[&str], trg: &[&str], i: usize, j: usize, memo: &mut [Option<u32>]) -> u32 {
        if i == src.len() && j == trg.len() {
            return 0;
        }
        let key = i * (trg.len() + 1) + j;
        if let Some(c) = memo[key] {
            return c;
        }
        let mut best = u32::MAX;
        if i < src.len() && j < trg.len() {
            best = best.min(sub_cost(src[i], trg[j]) + go(src, trg, i + 1, j + 1, memo));
        }
        if swappable(src, trg, i, j) {
            best = best.min(1 + go(src, trg, i + 2, j + 2, memo));
        }
        if i < src.len() {
            best = best.min(1 + go(src, trg, i + 1, j, memo));
        }
        if j < trg.len() {
            best = best.min(1 + go(src, trg, i, j + 1, memo));
        }
        memo[key] = Some(best);
        best
    }
    let mut memo = vec![None; (src.len() + 1) * (trg.len() + 1)];
    go(src, trg, 0, 0, &mut memo)
}

/// Replays extracted edits on the source, left to right.
pub fn replay(src: &[&str], edits: &[Edit]) -> Vec<String> {
    let mut out = Vec::new();
    let mut cursor = 0;
    for e in edits {
        let r = e.span.range().expect("no noops");
        assert!(r.start >= cursor, "edits overlap or are unordered");
        out.extend(src[cursor..r.start].iter().map(|s| s.to_string()));
        out.extend(e.span.correction.iter().cloned());
        assert_eq!(e.src_tokens, src[r.clone()]);
        cursor = r.end;
    }
    out.extend(src[cursor..].iter().map(|s| s.to_string()));
    out
}

/// Every sequence of length `0..=max_len` over `alphabet`.
pub fn all_sequences(alphabet: &[&'static str], max_len: usize) -> Vec<Vec<&'static str>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<&'static str>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|seq| {
                alphabet.iter().map(move |&s| {
                    let mut next = seq.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// One representative per class of sequence pairs equivalent under a
/// renaming of a `k`-letter alphabet: the concatenation `src ++ trg` uses
/// letters in order of first appearance. Costs depend only on token
/// (in)equality, so these classes cover every pair over the alphabet.
pub fn canonical_pairs(
    alphabet: &[&'static str],
    max_len: usize,
) -> Vec<(Vec<&'static str>, Vec<&'static str>)> {
    fn grow(len: usize, k: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for sym in 0..(used + 1).min(k) {
            cur.push(sym);
            grow(len, k, cur, used.max(sym + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=2 * max_len {
        let mut strings = Vec::new();
        grow(total, alphabet.len(), &mut Vec::new(), 0, &mut strings);
        for s in &strings {
            let lo = total.saturating_sub(max_len);
            for n in lo..=total.min(max_len) {
                let word = |r: &[usize]| r.iter().map(|&x| alphabet[x]).collect::<Vec<_>>();
                out.push((word(&s[..n]), word(&s[n..])));
            }
        }
    }
    out
}

pub mod fixtures {
    use std::path::PathBuf;

    pub fn path(name: &str) -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/fixtures")
            .join(name)
    }

    pub fn read(name: &str) -> String {
        std::fs::read_to_string(path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
    }
}

pub mod gen {
    //! Seeded random generators for records, sentences and edits.

    use rand::seq::SliceRandom;
    use rand::Rng;
    use serrant::{AnnotatedSentence, EditSpan, Features, M2Edit, M2Record, Token, Upos};

    pub const VOCAB: &[&str] = &[
        "the", "a", "an", "cat", "cats", "dog", "dogs", "house", "houses", "apple", "Apple", "run",
        "runs", "ran", "running", "eat", "ate", "eating", "walk", "walked", "go", "went", "gone",
        "is", "are", "was", "were", "be", "been", "have", "has", "had", "will", "would", "can",
        "could", "should", "shall", "must", "may", "might", "I", "he", "she", "they", "their",
        "these", "this", "it", "in", "on", "at", "for", "and", "but", "because", "quickly", "very",
        "good", "better", "big", "John", "Mary", "London", ".", ",", "!", "3",
    ];

    fn token_text(rng: &mut impl Rng) -> String {
        const CHARS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ.,'-0123456789";
        if rng.gen_bool(0.7) {
            return VOCAB.choose(rng).unwrap().to_string();
        }
        let len = rng.gen_range(1..=7);
        (0..len)
            .map(|_| *CHARS.choose(rng).unwrap() as char)
            .collect::<String>()
            .replace("-NONE-", "x")
    }

    /// A structurally valid M2 record; labels and tokens are arbitrary.
    pub fn record(rng: &mut impl Rng) -> M2Record {
        let n = rng.gen_range(0..=10);
        let source_tokens: Vec<String> = (0..n).map(|_| token_text(rng)).collect();
        let edits = (0..rng.gen_range(0..=4))
            .map(|_| {
                if rng.gen_bool(0.1) {
                    return M2Edit {
                        span: EditSpan::noop(),
                        type_label: "noop".into(),
                        annotator: rng.gen_range(0..3),
                    };
                }
                let start = rng.gen_range(0..=n);
                let end = rng.gen_range(start..=n);
                let correction = (0..rng.gen_range(0..=3)).map(|_| token_text(rng)).collect();
                let label = [
                    "R:Spell",
                    "U:Det",
                    "M:Noun",
                    "R:Noun->Propn",
                    "R:Verb:WC",
                    "R:Noun→Propn",
                    "noop",
                    "",
                ]
                .choose(rng)
                .unwrap()
                .to_string();
                M2Edit {
                    span: EditSpan::new(start..end, correction),
                    type_label: label,
                    annotator: rng.gen_range(0..4),
                }
            })
            .collect();
        M2Record {
            source_tokens,
            edits,
        }
    }

    pub fn records(rng: &mut impl Rng) -> Vec<M2Record> {
        (0..rng.gen_range(0..=6)).map(|_| record(rng)).collect()
    }

    /// A sentence pair produced by up to three random corruptions.
    pub fn sentence_pair(rng: &mut impl Rng) -> (Vec<String>, Vec<String>) {
        let n = rng.gen_range(1..=12);
        let src: Vec<String> = (0..n)
            .map(|_| VOCAB.choose(rng).unwrap().to_string())
            .collect();
        let mut trg = src.clone();
        for _ in 0..rng.gen_range(0..=3) {
            let len = trg.len();
            match rng.gen_range(0..6) {
                0 if len > 0 => {
                    let i = rng.gen_range(0..len);
                    trg[i] = VOCAB.choose(rng).unwrap().to_string();
                }
                1 if len > 1 => {
                    trg.remove(rng.gen_range(0..len));
                }
                2 => trg.insert(
                    rng.gen_range(0..=len),
                    VOCAB.choose(rng).unwrap().to_string(),
                ),
                3 if len > 1 => {
                    let i = rng.gen_range(0..len - 1);
                    trg.swap(i, i + 1);
                }
                4 if len > 0 => {
                    let i = rng.gen_range(0..len);
                    let w = &trg[i];
                    trg[i] = if w.chars().next().is_some_and(char::is_uppercase) {
                        w.to_lowercase()
                    } else {
                        let mut c = w.chars();
                        c.next()
                            .map(|f| f.to_uppercase().chain(c).collect())
                            .unwrap_or_default()
                    };
                }
                5 if len > 0 => {
                    // misspell: replace one character
                    let i = rng.gen_range(0..len);
                    let mut chars: Vec<char> = trg[i].chars().collect();
                    let k = rng.gen_range(0..chars.len());
                    chars[k] = (b'a' + rng.gen_range(0..26)) as char;
                    trg[i] = chars.into_iter().collect();
                }
                _ => {}
            }
        }
        (src, trg)
    }

    const LEMMAS: &[&str] = &[
        "be", "have", "go", "eat", "cat", "will", "can", "apple", "this", "they", "run",
    ];
    const FORMS: &[&str] = &[
        "is", "has", "went", "eat", "cat", "Cat", "will", "can", "should", "shall", "must",
        "would", "apple", "Apple", "these", "their", ".", "3", "oh",
    ];

    fn random_token(rng: &mut impl Rng, index: usize) -> Token {
        let mut feats = Features::new();
        for (name, values) in [
            ("Number", &["Sing", "Plur"][..]),
            ("Tense", &["Pres", "Past"][..]),
            ("VerbForm", &["Fin", "Inf", "Ger"][..]),
        ] {
            if rng.gen_bool(0.4) {
                feats.insert(name.into(), values.choose(rng).unwrap().to_string());
            }
        }
        Token {
            index,
            form: FORMS.choose(rng).unwrap().to_string(),
            lemma: LEMMAS.choose(rng).unwrap().to_string(),
            upos: *Upos::ALL.choose(rng).unwrap(),
            feats,
            head: None,
            deprel: "dep".into(),
        }
    }

    /// Random dependency tree over `tokens`: tokens join in random order,
    /// each attaching to one already placed.
    pub fn with_random_tree(rng: &mut impl Rng, mut tokens: Vec<Token>) -> AnnotatedSentence {
        let mut order: Vec<usize> = (0..tokens.len()).collect();
        order.shuffle(rng);
        for (k, &i) in order.iter().enumerate() {
            tokens[i].index = i;
            tokens[i].head = (k > 0).then(|| order[rng.gen_range(0..k)]);
        }
        AnnotatedSentence::new(tokens).expect("random tree is valid")
    }

    /// A randomly annotated edit: source sentence, corrected sentence, and
    /// the source and target ranges of the edit.
    pub struct EditCase {
        pub src: AnnotatedSentence,
        pub trg: AnnotatedSentence,
        pub src_range: std::ops::Range<usize>,
        pub trg_range: std::ops::Range<usize>,
    }

    pub fn edit_case(rng: &mut impl Rng) -> EditCase {
        loop {
            let n = rng.gen_range(1..=6);
            let src_tokens: Vec<Token> = (0..n).map(|i| random_token(rng, i)).collect();
            let start = rng.gen_range(0..=n);
            let end = rng.gen_range(start..=n.min(start + 3));
            let corr_len = rng.gen_range(0..=3);
            if start == end && corr_len == 0 {
                continue;
            }
            let mut trg_tokens: Vec<Token> = src_tokens[..start].to_vec();
            trg_tokens.extend((0..corr_len).map(|i| random_token(rng, i)));
            trg_tokens.extend(src_tokens[end..].iter().cloned());
            return EditCase {
                src: with_random_tree(rng, src_tokens),
                trg: with_random_tree(rng, trg_tokens),
                src_range: start..end,
                trg_range: start..start + corr_len,
            };
        }
    }

    /// A sentence-initial case change of the first token, with arbitrary
    /// annotations on both sides.
    pub fn initial_capitalisation(rng: &mut impl Rng) -> EditCase {
        let n = rng.gen_range(1..=5);
        let src_tokens: Vec<Token> = (0..n).map(|i| random_token(rng, i)).collect();
        let mut trg_tokens = src_tokens.clone();
        let first = &src_tokens[0].form;
        let mut chars = first.chars();
        let flipped: String = match chars.next() {
            Some(c) if c.is_uppercase() => c.to_lowercase().chain(chars).collect(),
            Some(c) => c.to_uppercase().chain(chars).collect(),
            None => unreachable!(),
        };
        trg_tokens[0] = Token {
            form: if flipped == *first {
                format!("{first}X")
            } else {
                flipped
            },
            upos: *Upos::ALL.choose(rng).unwrap(),
            ..random_token(rng, 0)
        };
        if rng.gen_bool(0.5) {
            trg_tokens[0].upos = Upos::Propn;
        }
        EditCase {
            src: with_random_tree(rng, src_tokens),
            trg: with_random_tree(rng, trg_tokens),
            src_range: 0..1,
            trg_range: 0..1,
        }
    }

    /// Same forms, fresh random annotations.
    pub fn reannotate(rng: &mut impl Rng, s: &AnnotatedSentence) -> AnnotatedSentence {
        let tokens = s
            .tokens()
            .iter()
            .map(|t| Token {
                form: t.form.clone(),
                ..random_token(rng, t.index)
            })
            .collect();
        with_random_tree(rng, tokens)
    }
}

/// Renders a sentence as a CoNLL-U block.
pub fn to_conllu(s: &serrant::AnnotatedSentence) -> String {
    let mut out = String::new();
    for t in s.tokens() {
        let feats = if t.feats.is_empty() {
            "_".to_string()
        } else {
            t.feats
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join("|")
        };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t_\t{}\t{}\t{}\t_\t_\n",
            t.index + 1,
            t.form,
            t.lemma,
            t.upos,
            feats,
            t.head.map_or(0, |h| h + 1),
            t.deprel
        ));
    }
    out.push('\n');
    out
}

pub mod laws {
    //! Properties every combined label must satisfy. Each check returns a
    //! description of the violation, if any.

    use serrant::combine::HeadInfo;
    use serrant::extract::EditKind;
    use serrant::{
        classify_base, classify_sercl, combine, emit_m2, parse_m2, BaseType, Body, EditContext,
        EditView, Granularity, M2Record, Named, Operation, SerclType, Suffix, Upos, Wordlist,
    };

    const MODALS: [&str; 9] = [
        "can", "could", "may", "might", "shall", "should", "will", "would", "must",
    ];

    pub fn m2_round_trip(records: &[M2Record]) -> Result<(), String> {
        let text = emit_m2(records).map_err(|e| format!("emit: {e}"))?;
        let parsed = parse_m2(&text).map_err(|e| format!("parse: {e}\n{text}"))?;
        let expected: Vec<M2Record> = records.iter().map(normalise).collect();
        if parsed != expected {
            return Err(format!("parse(emit(r)) != r\n{text}"));
        }
        let again = emit_m2(&parsed).map_err(|e| format!("re-emit: {e}"))?;
        if again != text {
            return Err(format!("emit(parse(t)) != t\n{text}\n---\n{again}"));
        }
        Ok(())
    }

    /// A noop always carries an empty correction once parsed.
    fn normalise(r: &M2Record) -> M2Record {
        let mut r = r.clone();
        for e in &mut r.edits {
            if e.span.is_noop() {
                e.span.correction.clear();
            }
        }
        r
    }

    fn single_collapsed_tag(body: &Body) -> bool {
        match body {
            Body::Pos(_) | Body::Tag(_) => true,
            Body::Sercl(s) => s.collapsed && !s.has_qualifiers(),
            Body::Named(_) => false,
        }
    }

    fn unreliable(u: Option<Upos>) -> bool {
        matches!(
            u,
            Some(Upos::Intj | Upos::Num | Upos::Sym | Upos::X | Upos::Punct)
        )
    }

    /// Laws that hold for any base type, SErCl type and context.
    pub fn combined(base: BaseType, sercl: &SerclType, ctx: &EditContext) -> Result<(), String> {
        let ty = combine(base, sercl, ctx);
        let label = ty.render("->");
        let expected_op = match (ctx.src_forms.is_empty(), ctx.trg_forms.is_empty()) {
            (true, _) => Operation::Missing,
            (_, true) => Operation::Unnecessary,
            _ => Operation::Replace,
        };
        let prefix = match expected_op {
            Operation::Missing => "M:",
            Operation::Unnecessary => "U:",
            Operation::Replace => "R:",
        };
        if ty.op != expected_op || !label.starts_with(prefix) {
            return Err(format!("prefix law: {label} for {ctx:?}"));
        }
        if ty.suffixes.contains(&Suffix::WC) {
            let lemmas_differ =
                matches!((&ctx.src_head, &ctx.trg_head), (Some(s), Some(t)) if s.lemma != t.lemma);
            if expected_op != Operation::Replace
                || !lemmas_differ
                || !single_collapsed_tag(&ty.body)
            {
                return Err(format!("WC law: {label} for {ctx:?}"));
            }
        }
        if ty.body == Body::Named(Named::Modal) {
            let single_modal = |forms: &[String]| matches!(forms, [f] if MODALS.contains(&f.to_lowercase().as_str()));
            if !single_modal(&ctx.src_forms) || !single_modal(&ctx.trg_forms) {
                return Err(format!("Modal closure: {label} for {ctx:?}"));
            }
        }
        let (src, trg) = (
            ctx.src_head.as_ref().map(|h| h.upos),
            ctx.trg_head.as_ref().map(|h| h.upos),
        );
        let adj_propn = matches!(
            (src, trg),
            (Some(Upos::Adj), Some(Upos::Propn)) | (Some(Upos::Propn), Some(Upos::Adj))
        );
        if matches!(base, BaseType::Other | BaseType::Morph)
            && (unreliable(src) || unreliable(trg))
            && !(base == BaseType::Morph && adj_propn)
            && ty.body != Body::Named(Named::Other)
        {
            return Err(format!(
                "unreliable-tag screen: {label} for {base:?} {ctx:?}"
            ));
        }
        if base == BaseType::Orth && ctx.sentence_initial && label.contains("Propn") {
            return Err(format!("sentence-initial Orth became {label}"));
        }
        if combine(base, sercl, ctx) != ty {
            return Err("combine is not deterministic".into());
        }
        Ok(())
    }

    /// The full classification path on an annotated edit.
    pub fn classified(view: &EditView<'_>, wordlist: &Wordlist) -> Result<(), String> {
        let base = classify_base(view, Some(wordlist)).map_err(|e| e.to_string())?;
        for g in [Granularity::Upos, Granularity::UposFeats] {
            let sercl = classify_sercl(view, g).map_err(|e| e.to_string())?;
            combined(base, &sercl, &EditContext::from_view(view))?;
        }
        Ok(())
    }

    /// Sentence-initial case changes never turn into a proper-noun type.
    pub fn initial_orth(view: &EditView<'_>, wordlist: &Wordlist) -> Result<(), String> {
        let base = classify_base(view, Some(wordlist)).map_err(|e| e.to_string())?;
        let sercl = classify_sercl(view, Granularity::Upos).map_err(|e| e.to_string())?;
        let ty = combine(base, &sercl, &EditContext::from_view(view));
        let lowered =
            |t: &[serrant::Token]| t.iter().map(|t| t.form.to_lowercase()).collect::<Vec<_>>();
        if lowered(view.src_tokens()) == lowered(view.trg_tokens()) && ty.render("->") != "R:Orth" {
            return Err(format!("initial case change labelled {ty}"));
        }
        Ok(())
    }

    /// The source side of the SErCl type depends on source annotations only.
    pub fn source_side(a: &EditView<'_>, b: &EditView<'_>) -> Result<(), String> {
        for g in [Granularity::Upos, Granularity::UposFeats] {
            let x = classify_sercl(a, g).map_err(|e| e.to_string())?;
            let y = classify_sercl(b, g).map_err(|e| e.to_string())?;
            if x.left.tag != y.left.tag {
                return Err(format!("source tag moved: {x} vs {y}"));
            }
            if g == Granularity::Upos && x.left != y.left {
                return Err(format!("source side moved: {x} vs {y}"));
            }
        }
        Ok(())
    }

    pub fn random_context(rng: &mut impl rand::Rng) -> (BaseType, SerclType, EditContext) {
        use rand::seq::SliceRandom;
        let bases: Vec<BaseType> = [
            BaseType::Spell,
            BaseType::Orth,
            BaseType::Morph,
            BaseType::VerbTense,
            BaseType::VerbForm,
            BaseType::VerbInfl,
            BaseType::VerbSva,
            BaseType::NounNum,
            BaseType::AdjForm,
            BaseType::Other,
        ]
        .into_iter()
        .chain(Upos::ALL.iter().map(|&u| BaseType::Pos(u)))
        .collect();
        let base = *bases.choose(rng).unwrap();
        let words = [
            "will", "can", "should", "Shall", "be", "have", "go", "is", "cat", "MUST",
        ];
        let side = |rng: &mut _| -> (Vec<String>, Vec<String>, Option<HeadInfo>) {
            let n = rand::Rng::gen_range(rng, 0..=2);
            let forms: Vec<String> = (0..n)
                .map(|_| words.choose(rng).unwrap().to_string())
                .collect();
            let lemmas: Vec<String> = forms.iter().map(|f| f.to_lowercase()).collect();
            let head = (n > 0).then(|| HeadInfo {
                upos: *Upos::ALL.choose(rng).unwrap(),
                lemma: lemmas.choose(rng).unwrap().clone(),
            });
            (forms, lemmas, head)
        };
        let (mut src_forms, mut src_lemmas, mut src_head) = side(rng);
        let (trg_forms, trg_lemmas, trg_head) = side(rng);
        if src_forms.is_empty() && trg_forms.is_empty() {
            src_forms = vec!["cat".into()];
            src_lemmas = vec!["cat".into()];
            src_head = Some(HeadInfo {
                upos: Upos::Noun,
                lemma: "cat".into(),
            });
        }
        let tag = |h: &Option<HeadInfo>| match h {
            Some(h) => serrant::SerclSide::tag(h.upos),
            None => serrant::SerclSide::none(),
        };
        let sercl = SerclType::new(tag(&src_head), tag(&trg_head)).unwrap();
        let multi_word = src_forms.len() > 1 || trg_forms.len() > 1;
        let ctx = EditContext {
            sentence_initial: rand::Rng::gen_bool(rng, 0.3),
            src_lemmas,
            trg_lemmas,
            src_forms,
            trg_forms,
            src_head,
            trg_head,
            multi_word,
        };
        debug_assert!(ctx.kind() != EditKind::Insertion || ctx.src_forms.is_empty());
        (base, sercl, ctx)
    }
}
