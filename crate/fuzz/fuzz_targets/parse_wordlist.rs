#![no_main]

use libfuzzer_sys::fuzz_target;
use serrant::Wordlist;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(list) = Wordlist::parse(text) {
        assert!(!list.is_empty());
    }
});
