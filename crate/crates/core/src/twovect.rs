//! 2-vector spaces presented by a 2-term complex `d: V1 -> V0`, linear
//! functors, and the 2-term DGLA `End(V)`.
//!
//! Objects are vectors of `V0`; a morphism is a pair `(v, m)` in
//! `V0 ⊕ V1`, flattened into one vector of length `dim V0 + dim V1`, with
//! source `v` and target `v + d m`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{add_vec, basis_vec, index_tuples, zero_vec, Matrix, Rational, Vector};
use crate::report::{Check, Report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoVectorSpace {
    d: Matrix,
}

impl TwoVectorSpace {
    pub fn from_complex(d: Matrix) -> Self {
        TwoVectorSpace { d }
    }

    pub fn differential(&self) -> &Matrix {
        &self.d
    }

    pub fn object_dim(&self) -> usize {
        self.d.rows()
    }

    pub fn arrow_part_dim(&self) -> usize {
        self.d.cols()
    }

    pub fn morphism_dim(&self) -> usize {
        self.object_dim() + self.arrow_part_dim()
    }

    /// `s(v, m) = v`
    pub fn source_map(&self) -> Matrix {
        let (n0, n) = (self.object_dim(), self.morphism_dim());
        Matrix::from_fn(n0, n, |r, c| if r == c { Rational::from_integer(1.into()) } else { Rational::from_integer(0.into()) })
    }

    /// `t(v, m) = v + d m`
    pub fn target_map(&self) -> Matrix {
        let n0 = self.object_dim();
        Matrix::from_fn(n0, self.morphism_dim(), |r, c| {
            if c < n0 {
                if r == c {
                    Rational::from_integer(1.into())
                } else {
                    Rational::from_integer(0.into())
                }
            } else {
                self.d[(r, c - n0)].clone()
            }
        })
    }

    /// `i(v) = (v, 0)`
    pub fn identity_map(&self) -> Matrix {
        self.source_map().transpose()
    }

    pub fn source(&self, arrow: &[Rational]) -> Vector {
        arrow[..self.object_dim()].to_vec()
    }

    pub fn target(&self, arrow: &[Rational]) -> Vector {
        add_vec(&arrow[..self.object_dim()], &self.d.mul_vec(self.arrow_part(arrow)))
    }

    pub fn arrow_part<'a>(&self, arrow: &'a [Rational]) -> &'a [Rational] {
        &arrow[self.object_dim()..]
    }

    pub fn identity_arrow(&self, object: &[Rational]) -> Vector {
        let mut a = object.to_vec();
        a.extend(zero_vec(self.arrow_part_dim()));
        a
    }

    pub fn arrow(&self, source: &[Rational], part: &[Rational]) -> Vector {
        let mut a = source.to_vec();
        a.extend_from_slice(part);
        a
    }

    /// Vertical composite `first · second`, defined when
    /// `t(first) = s(second)`.
    pub fn compose(&self, first: &[Rational], second: &[Rational]) -> Option<Vector> {
        if self.target(first) != self.source(second) {
            return None;
        }
        let part = add_vec(self.arrow_part(first), self.arrow_part(second));
        Some(self.arrow(&self.source(first), &part))
    }

    /// Category laws on basis data: `s∘i = t∘i = id`, unit laws and
    /// associativity of vertical composition.
    pub fn check(&self) -> Report {
        let n0 = self.object_dim();
        let n1 = self.arrow_part_dim();
        let mut report = Report::new("2-vector space");
        let id0 = Matrix::identity(n0);
        report.push(Check::from_bool("s∘i = id", &self.source_map() * &self.identity_map() == id0));
        report.push(Check::from_bool("t∘i = id", &self.target_map() * &self.identity_map() == id0));

        // Arrows (v, m) with v, m basis-or-zero; composites are then forced.
        let samples: Vec<(Vector, Vector)> = (0..=n0)
            .flat_map(|i| (0..=n1).map(move |j| (i, j)))
            .map(|(i, j)| {
                let v = if i < n0 { basis_vec(n0, i) } else { zero_vec(n0) };
                let m = if j < n1 { basis_vec(n1, j) } else { zero_vec(n1) };
                (v, m)
            })
            .collect();
        report.push(Check::over("unit laws", index_tuples(&[samples.len()]), |t| {
            let (v, m) = &samples[t[0]];
            let a = self.arrow(v, m);
            self.compose(&self.identity_arrow(v), &a).as_deref() == Some(a.as_slice())
                && self.compose(&a, &self.identity_arrow(&self.target(&a))).as_deref() == Some(a.as_slice())
        }));
        let parts: Vec<Vector> = (0..=n1)
            .map(|j| if j < n1 { basis_vec(n1, j) } else { zero_vec(n1) })
            .collect();
        report.push(Check::over(
            "associativity",
            index_tuples(&[samples.len(), parts.len(), parts.len()]),
            |t| {
                let (v, m) = &samples[t[0]];
                let a = self.arrow(v, m);
                let b = self.arrow(&self.target(&a), &parts[t[1]]);
                let c = self.arrow(&self.target(&b), &parts[t[2]]);
                let left = self.compose(&a, &b).and_then(|ab| self.compose(&ab, &c));
                let right = self.compose(&b, &c).and_then(|bc| self.compose(&a, &bc));
                left.is_some() && left == right
            },
        ));
        report
    }
}

/// A pair `(A0, A1)` acting on `V0` and `V1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFunctor {
    pub on_objects: Matrix,
    pub on_arrow_parts: Matrix,
}

impl LinearFunctor {
    pub fn new(on_objects: Matrix, on_arrow_parts: Matrix) -> Self {
        LinearFunctor {
            on_objects,
            on_arrow_parts,
        }
    }

    pub fn identity(space: &TwoVectorSpace) -> Self {
        LinearFunctor::new(
            Matrix::identity(space.object_dim()),
            Matrix::identity(space.arrow_part_dim()),
        )
    }

    /// The induced map on the morphism space `V0 ⊕ V1`.
    pub fn on_morphisms(&self) -> Matrix {
        self.on_objects.direct_sum(&self.on_arrow_parts)
    }

    fn compose(&self, other: &LinearFunctor) -> LinearFunctor {
        LinearFunctor::new(
            &self.on_objects * &other.on_objects,
            &self.on_arrow_parts * &other.on_arrow_parts,
        )
    }

    fn sub(&self, other: &LinearFunctor) -> LinearFunctor {
        LinearFunctor::new(
            &self.on_objects - &other.on_objects,
            &self.on_arrow_parts - &other.on_arrow_parts,
        )
    }

    fn add(&self, other: &LinearFunctor) -> LinearFunctor {
        LinearFunctor::new(
            &self.on_objects + &other.on_objects,
            &self.on_arrow_parts + &other.on_arrow_parts,
        )
    }
}

/// Membership in `End⁰_d`: `A0 d = d A1`.
pub fn check_linear_functor(f: &LinearFunctor, space: &TwoVectorSpace) -> Result<bool> {
    let (n0, n1) = (space.object_dim(), space.arrow_part_dim());
    if f.on_objects.rows() != n0
        || f.on_objects.cols() != n0
        || f.on_arrow_parts.rows() != n1
        || f.on_arrow_parts.cols() != n1
    {
        return Err(Error::shape(format!(
            "linear functor must be ({n0}x{n0}, {n1}x{n1})"
        )));
    }
    Ok(&f.on_objects * &space.d == &space.d * &f.on_arrow_parts)
}

/// `δ(α) = (d α, α d)` for `α ∈ Hom(V0, V1)`.
pub fn delta(space: &TwoVectorSpace, alpha: &Matrix) -> LinearFunctor {
    LinearFunctor::new(&space.d * alpha, alpha * &space.d)
}

/// `[A, B]_C` on `End⁰`.
pub fn bracket_00(a: &LinearFunctor, b: &LinearFunctor) -> LinearFunctor {
    a.compose(b).sub(&b.compose(a))
}

/// `[A, α]_C = A1 α − α A0`.
pub fn bracket_01(a: &LinearFunctor, alpha: &Matrix) -> Matrix {
    &(&a.on_arrow_parts * alpha) - &(alpha * &a.on_objects)
}

/// A basis of `End⁰_d` and the elementary basis of `End¹`.
pub fn end_basis(space: &TwoVectorSpace) -> (Vec<LinearFunctor>, Vec<Matrix>) {
    let (n0, n1) = (space.object_dim(), space.arrow_part_dim());
    let size = n0 * n0 + n1 * n1;
    let unpack = |coords: &[Rational]| {
        let a0 = Matrix::from_row_major(n0, n0, coords[..n0 * n0].to_vec()).unwrap();
        let a1 = Matrix::from_row_major(n1, n1, coords[n0 * n0..].to_vec()).unwrap();
        LinearFunctor::new(a0, a1)
    };
    let cols: Vec<Vector> = (0..size)
        .map(|c| {
            let f = unpack(&basis_vec(size, c));
            (&(&f.on_objects * &space.d) - &(&space.d * &f.on_arrow_parts)).entries().to_vec()
        })
        .collect();
    let zeros = if n0 * n1 == 0 {
        (0..size).map(|c| unpack(&basis_vec(size, c))).collect()
    } else {
        Matrix::from_columns(n0 * n1, &cols)
            .kernel()
            .iter()
            .map(|k| unpack(k))
            .collect()
    };
    let ones = (0..n1 * n0)
        .map(|c| Matrix::from_row_major(n1, n0, basis_vec(n1 * n0, c)).unwrap())
        .collect();
    (zeros, ones)
}

/// Verifies the 2-term DGLA identities of `End(V)` on the given elements.
///
/// All identities are multilinear, so passing a basis makes the check
/// exhaustive.
pub fn end_dgla_check(space: &TwoVectorSpace, zeros: &[LinearFunctor], ones: &[Matrix]) -> Result<Report> {
    for (i, a) in zeros.iter().enumerate() {
        if !check_linear_functor(a, space)? {
            return Err(Error::precondition(format!("degree-0 sample {i} is not in End0_d")));
        }
    }
    let (n0, n1) = (space.object_dim(), space.arrow_part_dim());
    if let Some(i) = ones.iter().position(|m| m.rows() != n1 || m.cols() != n0) {
        return Err(Error::shape(format!("degree-1 sample {i} must be {n1}x{n0}")));
    }
    let z = zeros.len();
    let o = ones.len();
    let in_end0 = |f: &LinearFunctor| check_linear_functor(f, space).unwrap_or(false);

    let mut report = Report::new("End(V) 2-term DGLA");
    report.push(Check::over("delta lands in End0", index_tuples(&[o]), |t| {
        in_end0(&delta(space, &ones[t[0]]))
    }));
    report.push(Check::over("bracket closes on End0", index_tuples(&[z, z]), |t| {
        in_end0(&bracket_00(&zeros[t[0]], &zeros[t[1]]))
    }));
    report.push(Check::over("bracket skew", index_tuples(&[z, z]), |t| {
        let sum = bracket_00(&zeros[t[0]], &zeros[t[1]]).add(&bracket_00(&zeros[t[1]], &zeros[t[0]]));
        sum.on_objects.is_zero() && sum.on_arrow_parts.is_zero()
    }));
    report.push(Check::over("Jacobi on End0", index_tuples(&[z, z, z]), |t| {
        let (a, b, c) = (&zeros[t[0]], &zeros[t[1]], &zeros[t[2]]);
        let sum = bracket_00(a, &bracket_00(b, c))
            .add(&bracket_00(b, &bracket_00(c, a)))
            .add(&bracket_00(c, &bracket_00(a, b)));
        sum.on_objects.is_zero() && sum.on_arrow_parts.is_zero()
    }));
    report.push(Check::over("Jacobi with End1", index_tuples(&[z, z, o]), |t| {
        let (a, b, alpha) = (&zeros[t[0]], &zeros[t[1]], &ones[t[2]]);
        bracket_01(&bracket_00(a, b), alpha)
            == &bracket_01(a, &bracket_01(b, alpha)) - &bracket_01(b, &bracket_01(a, alpha))
    }));
    report.push(Check::over("delta[A,alpha] = [A, delta alpha]", index_tuples(&[z, o]), |t| {
        let (a, alpha) = (&zeros[t[0]], &ones[t[1]]);
        delta(space, &bracket_01(a, alpha)) == bracket_00(a, &delta(space, alpha))
    }));
    report.push(Check::over(
        "[delta alpha, beta] + [delta beta, alpha] = 0",
        index_tuples(&[o, o]),
        |t| {
            let (alpha, beta) = (&ones[t[0]], &ones[t[1]]);
            (&bracket_01(&delta(space, alpha), beta) + &bracket_01(&delta(space, beta), alpha)).is_zero()
        },
    ));
    Ok(report)
}

/// `end_dgla_check` on a basis of `End⁰_d` and `End¹`.
pub fn end_dgla_check_basis(space: &TwoVectorSpace) -> Report {
    let (zeros, ones) = end_basis(space);
    end_dgla_check(space, &zeros, &ones).expect("basis elements are valid samples")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::linalg::int;

    #[test]
    fn zero_differential_has_equal_source_and_target() {
        let v = TwoVectorSpace::from_complex(Matrix::zeros(3, 1));
        assert_eq!(v.source_map(), v.target_map());
        assert!(v.check().all_passed());
    }

    #[test]
    fn identity_differential_target() {
        let v = TwoVectorSpace::from_complex(Matrix::identity(2));
        let a = vec![int(1), int(2), int(3), int(4)];
        assert_eq!(v.target(&a), vec![int(4), int(6)]);
        assert!(v.check().all_passed());
    }

    #[test]
    fn composition_requires_matching_endpoints() {
        let v = TwoVectorSpace::from_complex(Matrix::identity(1));
        let a = vec![int(0), int(1)];
        assert!(v.compose(&a, &[int(0), int(0)]).is_none());
        assert_eq!(v.compose(&a, &[int(1), int(2)]), Some(vec![int(0), int(3)]));
    }

    #[test]
    fn functor_membership() {
        let v = TwoVectorSpace::from_complex(Matrix::identity(2));
        assert!(check_linear_functor(&LinearFunctor::identity(&v), &v).unwrap());
        let f = LinearFunctor::new(Matrix::identity(2), Matrix::identity(2).scale(&int(2)));
        assert!(!check_linear_functor(&f, &v).unwrap());
        let bad = LinearFunctor::new(Matrix::identity(3), Matrix::identity(2));
        assert!(check_linear_functor(&bad, &v).is_err());
    }

    #[test]
    fn bracket_of_identities_vanishes() {
        let v = TwoVectorSpace::from_complex(Matrix::identity(2));
        let id = LinearFunctor::identity(&v);
        let b = bracket_00(&id, &id);
        assert!(b.on_objects.is_zero() && b.on_arrow_parts.is_zero());
    }

    #[test]
    fn delta_vanishes_for_zero_differential() {
        let v = TwoVectorSpace::from_complex(Matrix::zeros(2, 2));
        let alpha = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let d = delta(&v, &alpha);
        assert!(d.on_objects.is_zero() && d.on_arrow_parts.is_zero());
    }

    #[test]
    fn dgla_identities_hold_on_bases() {
        for d in [
            Matrix::identity(2),
            Matrix::zeros(3, 1),
            Matrix::from_ints(&[&[1, 0], &[2, 0], &[0, 1]]),
        ] {
            let v = TwoVectorSpace::from_complex(d);
            let report = end_dgla_check_basis(&v);
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn dgla_rejects_non_functor_samples() {
        let v = TwoVectorSpace::from_complex(Matrix::identity(2));
        let f = LinearFunctor::new(Matrix::identity(2), Matrix::zeros(2, 2));
        assert!(end_dgla_check(&v, &[f], &[]).is_err());
    }
}
