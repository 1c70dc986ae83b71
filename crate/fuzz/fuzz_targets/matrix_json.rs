#![no_main]

use libfuzzer_sys::fuzz_target;
use nichols::io::MatrixSource;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = MatrixSource::from_json(text) {
        if m.braiding().n_letters() > 8 {
            return;
        }
        assert_eq!(MatrixSource::from_value(&m.to_value()).expect("round trip"), m);
    }
});
