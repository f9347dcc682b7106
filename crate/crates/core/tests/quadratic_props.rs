mod common;

use homlie_core::constructions::{two_of_three, QuadraticHomLie, Q_TWO_OF_THREE};
use homlie_core::homlie::HomLieAlgebra;
use homlie_core::linalg::{int, Matrix, Rational};
use proptest::prelude::*;

fn diagonal(entries: &[Rational]) -> Matrix {
    let n = entries.len();
    Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { int(0) })
}

fn signs(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(|s| diagonal(&s.iter().map(|&b| int(if b { 1 } else { -1 })).collect::<Vec<_>>()))
}

#[derive(Debug, Clone, Copy)]
enum Kind {
    Random,
    Involutive,
    InvolutiveDoubled,
    Rotation,
    InvolutiveOtherForm,
}

/// `(B, phi, kind)` with `B` symmetric nondegenerate.
fn dataset() -> impl Strategy<Value = (Matrix, Matrix, Kind)> {
    let kind = prop_oneof![
        Just(Kind::Random),
        Just(Kind::Involutive),
        Just(Kind::InvolutiveDoubled),
        Just(Kind::Rotation),
        Just(Kind::InvolutiveOtherForm),
    ];
    (2usize..=4, kind).prop_flat_map(|(n, kind)| {
        (
            common::invertible(n),
            common::invertible(n),
            signs(n),
            proptest::collection::vec(common::nonzero_rational(), n),
            common::matrix(n, n),
            Just(kind),
        )
            .prop_map(move |(p, q, d, lambda, raw, kind)| {
                let p_inv = p.inverse().unwrap();
                // B = P^{-T} Lambda P^{-1}, and phi = P D P^{-1} is B-self-adjoint.
                let b = &(&p_inv.transpose() * &diagonal(&lambda)) * &p_inv;
                let involution = &(&p * &d) * &p_inv;
                match kind {
                    Kind::Random => (b, raw, kind),
                    Kind::Involutive => (b, involution, kind),
                    Kind::InvolutiveDoubled => (b, involution.scale(&int(2)), kind),
                    Kind::Rotation => {
                        // B = P^{-T} P^{-1} and a quarter turn in the first plane.
                        let b = &p_inv.transpose() * &p_inv;
                        let mut r = Matrix::identity(n).entries().to_vec();
                        r[0] = int(0);
                        r[1] = int(-1);
                        r[n] = int(1);
                        r[n + 1] = int(0);
                        let r = Matrix::from_row_major(n, n, r).unwrap();
                        (b, &(&p * &r) * &p_inv, kind)
                    }
                    Kind::InvolutiveOtherForm => {
                        let q_inv = q.inverse().unwrap();
                        let b2 = &(&q_inv.transpose() * &diagonal(&lambda)) * &q_inv;
                        (b2, involution, kind)
                    }
                }
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn two_conditions_force_the_third((b, phi, kind) in dataset()) {
        prop_assert!(b.is_symmetric() && b.is_invertible());
        let symmetric = &phi.transpose() * &b == &b * &phi;
        let involutive = &phi * &phi == Matrix::identity(phi.rows());
        let isometry = &(&phi.transpose() * &b) * &phi == b;
        let held = [symmetric, involutive, isometry].iter().filter(|&&h| h).count();
        prop_assert!(held != 2, "{:?}: exactly two of three hold", kind);
        match kind {
            Kind::Involutive => prop_assert_eq!(held, 3),
            Kind::InvolutiveDoubled | Kind::Rotation => prop_assert_eq!(held, 1),
            _ => {}
        }
        let check = two_of_three(&b, &phi);
        prop_assert!(check.passed);
        prop_assert!(check.note.is_none());
        let n = b.rows();
        let q = QuadraticHomLie::new(HomLieAlgebra::abelian(phi).unwrap(), b).unwrap();
        prop_assert!(q.check().passed(Q_TWO_OF_THREE));
        prop_assert_eq!(q.algebra.dim(), n);
    }
}

#[test]
fn two_of_three_is_vacuous_for_degenerate_forms() {
    let b = Matrix::from_ints(&[&[1, 0], &[0, 0]]);
    let phi = Matrix::from_ints(&[&[1, 0], &[0, 2]]);
    let c = two_of_three(&b, &phi);
    assert!(c.passed);
    assert!(c.note.is_some());
}
