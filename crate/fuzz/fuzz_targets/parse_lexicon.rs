#![no_main]

use libfuzzer_sys::fuzz_target;
use serrant::{fallback_annotate, Lexicon};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lexicon) = Lexicon::parse(text) {
        let words: Vec<&str> = text.split_whitespace().take(32).collect();
        let s = fallback_annotate(&words, &lexicon);
        assert_eq!(s.len(), words.len());
    }
});
