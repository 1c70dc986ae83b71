//! Replays the checked-in fuzz seeds through the same round-trip checks as the fuzz targets.

use std::path::PathBuf;

use nichols::io::{table_from_json, table_to_value, tensor_from_json, tensor_from_value, tensor_to_value, MatrixSource};
use nichols::Scalar;

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn scalar_seeds_round_trip() {
    for (p, text) in seeds("scalar_parse") {
        let x: Scalar = text.parse().unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }
}

#[test]
fn matrix_seeds_round_trip() {
    for (p, text) in seeds("matrix_json") {
        let m = MatrixSource::from_json(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(MatrixSource::from_value(&m.to_value()).unwrap(), m);
    }
}

#[test]
fn tensor_seeds_round_trip() {
    for (p, text) in seeds("tensor_json") {
        let x = tensor_from_json(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        assert_eq!(tensor_from_value(&tensor_to_value(&x)).unwrap(), x);
    }
}

#[test]
fn table_seeds_reload() {
    for (p, text) in seeds("relation_table") {
        let (m, set) = table_from_json(&text).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
        let (m2, set2) = table_from_json(&table_to_value(&m, &set).to_string()).unwrap();
        assert_eq!(m2, m);
        assert_eq!(set2.blocks, set.blocks);
    }
}
