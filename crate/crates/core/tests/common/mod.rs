#![allow(dead_code)]

use homlie_core::homlie::{twist_lie_algebra, HomLieAlgebra};
use homlie_core::linalg::{frac, int, Matrix, Rational, Tensor};
use proptest::prelude::*;

pub fn bracket(n: usize, entries: &[(usize, usize, usize, i64)]) -> Tensor {
    let mut c = Tensor::zeros(&[n, n, n]);
    for &(i, j, k, v) in entries {
        *c.get_mut(&[i, j, k]) = int(v);
        *c.get_mut(&[j, i, k]) = int(-v);
    }
    c
}

/// `[h,e] = 2e, [h,f] = -2f, [e,f] = h` on `(h, e, f)`.
pub fn sl2() -> Tensor {
    bracket(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

pub fn heisenberg() -> Tensor {
    bracket(3, &[(0, 1, 2, 1)])
}

pub fn aff1() -> Tensor {
    bracket(2, &[(0, 1, 1, 1)])
}

pub fn aff1_squared() -> Tensor {
    bracket(4, &[(0, 1, 1, 1), (2, 3, 3, 1)])
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-3i64..=3, 1i64..=3).prop_map(|(p, q)| frac(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-3i64..=-1, 1i64..=3], 1i64..=3).prop_map(|(p, q)| frac(p, q))
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small_rational(), rows * cols)
        .prop_map(move |v| Matrix::from_row_major(rows, cols, v).unwrap())
}

/// Unit lower times unit upper triangular, hence invertible.
pub fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (matrix(n, n), matrix(n, n)).prop_map(move |(a, b)| {
        let l = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Greater => a.row(i)[j].clone(),
            std::cmp::Ordering::Equal => int(1),
            std::cmp::Ordering::Less => int(0),
        });
        let u = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => b.row(i)[j].clone(),
            std::cmp::Ordering::Equal => int(1),
            std::cmp::Ordering::Greater => int(0),
        });
        &l * &u
    })
}

fn from_rows(rows: Vec<Vec<Rational>>) -> Matrix {
    let n = rows.len();
    let m = rows[0].len();
    Matrix::from_row_major(n, m, rows.into_iter().flatten().collect()).unwrap()
}

/// Endomorphisms of the sl2 bracket: `diag(1, t, 1/t)`, optionally
/// composed with the Chevalley involution, or zero.
fn sl2_endo() -> impl Strategy<Value = Matrix> {
    (nonzero_rational(), 0u8..3).prop_map(|(t, kind)| {
        let z = int(0);
        let scale = from_rows(vec![
            vec![int(1), z.clone(), z.clone()],
            vec![z.clone(), t.clone(), z.clone()],
            vec![z.clone(), z.clone(), int(1) / t],
        ]);
        let chevalley = Matrix::from_ints(&[&[-1, 0, 0], &[0, 0, -1], &[0, -1, 0]]);
        match kind {
            0 => scale,
            1 => &chevalley * &scale,
            _ => Matrix::zeros(3, 3),
        }
    })
}

/// `(x, y) -> M (x, y)`, `z -> det(M) z`, plus shifts of `x, y` into `z`.
fn heisenberg_endo() -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small_rational(), 6).prop_map(|v| {
        let det = &v[0] * &v[3] - &v[1] * &v[2];
        from_rows(vec![
            vec![v[0].clone(), v[1].clone(), int(0)],
            vec![v[2].clone(), v[3].clone(), int(0)],
            vec![v[4].clone(), v[5].clone(), det],
        ])
    })
}

/// `x -> x + s y, y -> t y`, or `x -> s y, y -> 0`.
fn aff1_endo() -> impl Strategy<Value = Matrix> {
    (small_rational(), small_rational(), any::<bool>()).prop_map(|(s, t, unital)| {
        if unital {
            from_rows(vec![vec![int(1), int(0)], vec![s, t]])
        } else {
            from_rows(vec![vec![int(0), int(0)], vec![s, int(0)]])
        }
    })
}

/// Hom-Lie algebras of dimension at most 4, all twists of Lie algebras
/// by bracket endomorphisms.
pub fn hom_lie_algebra() -> impl Strategy<Value = HomLieAlgebra> {
    prop_oneof![
        sl2_endo().prop_map(|a| twist_lie_algebra(&sl2(), &a).unwrap()),
        heisenberg_endo().prop_map(|a| twist_lie_algebra(&heisenberg(), &a).unwrap()),
        aff1_endo().prop_map(|a| twist_lie_algebra(&aff1(), &a).unwrap()),
        (aff1_endo(), aff1_endo()).prop_map(|(a, b)| twist_lie_algebra(&aff1_squared(), &a.direct_sum(&b)).unwrap()),
        (1usize..=4).prop_flat_map(|n| matrix(n, n)).prop_map(|a| HomLieAlgebra::abelian(a).unwrap()),
    ]
}
