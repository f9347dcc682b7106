#![allow(dead_code)]

use std::path::PathBuf;

use homlie::format::{parse_model, read_model, serialize_model, Model};
use homlie_core::hl2::TwoTermHL;
use homlie_core::linalg::int;
use homlie_core::{Matrix, Tensor};

pub const BLESS_VAR: &str = "HOMLIE_BLESS";

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn fixture(name: &str) -> Model {
    read_model(&data_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn two_term(name: &str) -> TwoTermHL {
    match fixture(name) {
        Model::TwoTermHl(v) => v,
        other => panic!("{name} is a {:?}", other.kind()),
    }
}

/// Compares `model` with the frozen file, or rewrites the file when
/// `HOMLIE_BLESS=1`.
pub fn frozen(name: &str, model: &Model) {
    let path = data_dir().join(name);
    let text = serialize_model(model).unwrap();
    if std::env::var(BLESS_VAR).as_deref() == Ok("1") {
        std::fs::write(&path, &text).unwrap();
        return;
    }
    let stored = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e} (run with {BLESS_VAR}=1 to create it)", path.display()));
    assert_eq!(&parse_model(&stored).unwrap(), model, "{name} differs from the computed value");
    assert_eq!(stored, text, "{name} is not in canonical form");
}

pub fn imatrix(n: usize, m: usize, v: &[i64]) -> Matrix {
    Matrix::from_row_major(n, m, v.iter().map(|&x| int(x)).collect()).unwrap()
}

pub fn itensor(shape: &[usize], v: &[i64]) -> Tensor {
    Tensor::from_row_major(shape, v.iter().map(|&x| int(x)).collect()).unwrap()
}
