#![no_main]

use libfuzzer_sys::fuzz_target;
use twogrp::io::{parse_str, to_text};

// Anything that loads must serialize to text that loads again and
// serializes identically.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(structure) = parse_str(text, None) else { return };
    let written = to_text(&structure);
    let back = parse_str(&written, None).expect("serialized output loads");
    assert_eq!(to_text(&back), written);
});
