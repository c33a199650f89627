#![no_main]

use libfuzzer_sys::fuzz_target;
use serrant::pipeline::Inputs;
use serrant::{run, PipelineConfig, Wordlist};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let (orig, cor) = text.split_once('\0').unwrap_or((text, text));
    let Ok(inputs) = Inputs::parallel_text(orig, cor) else {
        return;
    };
    let config = PipelineConfig {
        wordlist: Some(Wordlist::from_words(["the", "a", "i"]).unwrap()),
        ..PipelineConfig::default()
    };
    // classification of arbitrary tokenised text must not panic
    let _ = run(&config, &inputs);
});
