#![no_main]

use libfuzzer_sys::fuzz_target;
use nichols::io::{tensor_from_json, tensor_from_value, tensor_to_value};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 4096 {
        return;
    }
    if let Ok(x) = tensor_from_json(text) {
        assert_eq!(tensor_from_value(&tensor_to_value(&x)).expect("round trip"), x);
    }
});
