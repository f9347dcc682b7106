//! Hand-built fixtures in `data/`, frozen from the library's values.

mod common;

use common::{frozen, imatrix};
use homlie::format::{parse_model, serialize_model, Model};
use homlie_core::constructions::{sl2_example, string_from_semisimple, QuadraticHomLie, SymplecticHomLie};
use homlie_core::hl2::TwoTermHL;
use homlie_core::homlie::{killing_form, HomLieAlgebra};
use homlie_core::{Matrix, Tensor};

fn abelian_strict() -> TwoTermHL {
    TwoTermHL::new(
        imatrix(2, 2, &[1, 0, 0, 0]),
        Tensor::zeros(&[2, 2, 2]),
        Tensor::zeros(&[2, 2, 2]),
        Tensor::zeros(&[2, 2, 2, 2]),
        imatrix(2, 2, &[1, 0, 0, -1]),
        imatrix(2, 2, &[1, 0, 0, -1]),
    )
    .unwrap()
}

fn abelian_symplectic() -> SymplecticHomLie {
    let g = HomLieAlgebra::abelian(Matrix::identity(2).scale(&homlie_core::linalg::int(-1))).unwrap();
    SymplecticHomLie::new(g, imatrix(2, 2, &[0, 1, -1, 0])).unwrap()
}

#[test]
fn fixtures_match_the_library() {
    let g = sl2_example();
    frozen("sl2.toml", &Model::HomLie(g.clone()));
    frozen("sl2_quadratic.toml", &Model::Quadratic(QuadraticHomLie::new(g.clone(), killing_form(&g)).unwrap()));
    frozen("sl2_string.toml", &Model::TwoTermHl(string_from_semisimple(&g).unwrap()));
    frozen("sl2_strict.toml", &Model::TwoTermHl(TwoTermHL::from_hom_lie_pair(&g)));
    frozen("abelian_strict.toml", &Model::TwoTermHl(abelian_strict()));
    frozen("abelian_symplectic.toml", &Model::Symplectic(abelian_symplectic()));
}

#[test]
fn every_fixture_round_trips_bit_exactly() {
    let mut seen = 0;
    for entry in std::fs::read_dir(common::data_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "toml") {
            let text = std::fs::read_to_string(&path).unwrap();
            let model = parse_model(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(serialize_model(&model).unwrap(), text, "{}", path.display());
            seen += 1;
        }
    }
    assert!(seen >= 10);
}
