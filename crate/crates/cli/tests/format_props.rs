use homlie::format::{parse_model, parse_row, serialize_model, Model, Row};
use homlie_core::hl2::TwoTermHL;
use homlie_core::homlie::HomLieAlgebra;
use homlie_core::linalg::frac;
use homlie_core::{Matrix, Rational, Tensor};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=97).prop_map(|(p, q)| frac(p, q))
}

fn entries(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rational(), len)
}

fn two_term() -> impl Strategy<Value = TwoTermHL> {
    (1usize..=3, 0usize..=2).prop_flat_map(|(n0, n1)| {
        (
            entries(n0 * n1),
            entries(n0 * n0 * n0),
            entries(n0 * n1 * n1),
            entries(n0 * n0 * n0 * n1),
            entries(n0 * n0),
            entries(n1 * n1),
        )
            .prop_map(move |(d, l2_00, l2_01, l3, phi0, phi1)| {
                TwoTermHL::new(
                    Matrix::from_row_major(n0, n1, d).unwrap(),
                    Tensor::from_row_major(&[n0, n0, n0], l2_00).unwrap(),
                    Tensor::from_row_major(&[n0, n1, n1], l2_01).unwrap(),
                    Tensor::from_row_major(&[n0, n0, n0, n1], l3).unwrap(),
                    Matrix::from_row_major(n0, n0, phi0).unwrap(),
                    Matrix::from_row_major(n1, n1, phi1).unwrap(),
                )
                .unwrap()
            })
    })
}

fn hom_lie() -> impl Strategy<Value = HomLieAlgebra> {
    (1usize..=4).prop_flat_map(|n| {
        (entries(n * n * n), entries(n * n)).prop_map(move |(c, phi)| {
            HomLieAlgebra::new(
                Tensor::from_row_major(&[n, n, n], c).unwrap(),
                Matrix::from_row_major(n, n, phi).unwrap(),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rows_round_trip(v in proptest::collection::vec(rational(), 0..8)) {
        let row = Row(v);
        prop_assert_eq!(parse_row(&row.to_string()).unwrap(), row);
    }

    #[test]
    fn two_term_files_round_trip(v in two_term()) {
        let m = Model::TwoTermHl(v);
        let text = serialize_model(&m).unwrap();
        prop_assert_eq!(parse_model(&text).unwrap(), m.clone());
        prop_assert_eq!(serialize_model(&parse_model(&text).unwrap()).unwrap(), text);
    }

    #[test]
    fn algebra_files_round_trip(g in hom_lie()) {
        let m = Model::HomLie(g);
        let text = serialize_model(&m).unwrap();
        prop_assert_eq!(parse_model(&text).unwrap(), m);
    }
}
