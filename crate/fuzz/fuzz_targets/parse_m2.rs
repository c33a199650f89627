#![no_main]

use libfuzzer_sys::fuzz_target;
use serrant::{emit_m2, parse_m2};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(records) = parse_m2(text) else { return };
    // whatever parses and can be written back must survive a second trip
    if let Ok(out) = emit_m2(&records) {
        let again = parse_m2(&out).expect("emitted M2 parses");
        assert_eq!(emit_m2(&again).expect("re-emit"), out);
    }
});
