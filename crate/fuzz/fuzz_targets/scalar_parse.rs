#![no_main]

use libfuzzer_sys::fuzz_target;
use nichols::Scalar;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 256 {
        return;
    }
    if let Ok(x) = text.parse::<Scalar>() {
        let printed = x.to_string();
        let back: Scalar = printed.parse().expect("canonical output reparses");
        assert_eq!(back, x);
        assert_eq!(back.to_string(), printed);
    }
});
