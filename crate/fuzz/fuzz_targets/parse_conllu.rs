#![no_main]

use libfuzzer_sys::fuzz_target;
use serrant::parse_conllu;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(sentences) = parse_conllu(text) {
        for s in &sentences {
            if !s.is_empty() {
                s.span_head(0, s.len()).expect("every sentence has a root");
            }
        }
    }
});
