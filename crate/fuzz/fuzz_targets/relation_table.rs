#![no_main]

use libfuzzer_sys::fuzz_target;
use nichols::io::{table_from_json, table_to_value};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // operator sizes grow like n!, keep runs short
    let Ok(v) = serde_json::from_str::<serde_json::Value>(text) else { return };
    if v.get("degree").and_then(|d| d.as_u64()).map_or(true, |d| d > 5) {
        return;
    }
    if let Ok((m, set)) = table_from_json(text) {
        let again = table_to_value(&m, &set).to_string();
        let (m2, set2) = table_from_json(&again).expect("reloads");
        assert_eq!(m2, m);
        assert_eq!(set2.blocks, set.blocks);
    }
});
