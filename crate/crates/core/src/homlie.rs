//! Hom-Lie algebras given by structure constants, their morphisms, the
//! Killing form and the induced Lie algebra of an involutive hom-Lie
//! algebra.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_vec, basis_vec, index_tuples, is_zero_vec, Matrix, Rational, Tensor, Vector};
use crate::report::{Check, Report};

pub const SKEW_SYMMETRY: &str = "skew-symmetry";
pub const PHI_MORPHISM: &str = "phi-morphism";
pub const HOM_JACOBI: &str = "hom-Jacobi";

/// A bracket `[e_i, e_j] = sum_k c[i][j][k] e_k` together with a twist
/// endomorphism `phi`.
///
/// Construction only checks shapes; axioms are verified by [`check`](Self::check)
/// or enforced by [`validated`](Self::validated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    bracket: Tensor,
    phi: Matrix,
}

impl HomLieAlgebra {
    pub fn new(bracket: Tensor, phi: Matrix) -> Result<Self> {
        let n = phi.rows();
        if !phi.is_square() {
            return Err(Error::shape(format!("phi is {}x{}, not square", phi.rows(), phi.cols())));
        }
        if bracket.shape() != [n, n, n] {
            return Err(Error::shape(format!(
                "bracket has shape {:?}, expected [{n}, {n}, {n}]",
                bracket.shape()
            )));
        }
        Ok(HomLieAlgebra { bracket, phi })
    }

    /// Shape check plus every hom-Lie axiom.
    pub fn validated(bracket: Tensor, phi: Matrix) -> Result<Self> {
        let g = Self::new(bracket, phi)?;
        let report = g.check();
        if report.all_passed() {
            Ok(g)
        } else {
            Err(Error::Invalid {
                what: "hom-Lie algebra".into(),
                report,
            })
        }
    }

    pub fn abelian(phi: Matrix) -> Result<Self> {
        let n = phi.rows();
        Self::new(Tensor::zeros(&[n, n, n]), phi)
    }

    /// An ordinary Lie algebra, viewed as a hom-Lie algebra with `phi = Id`.
    pub fn lie(bracket: Tensor) -> Result<Self> {
        let n = bracket.output_dim();
        Self::new(bracket, Matrix::identity(n))
    }

    pub fn dim(&self) -> usize {
        self.phi.rows()
    }

    pub fn bracket_tensor(&self) -> &Tensor {
        &self.bracket
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        self.bracket.fiber(&[i, j])
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.bracket.apply(&[x, y])
    }

    pub fn twist(&self, x: &[Rational]) -> Vector {
        self.phi.mul_vec(x)
    }

    pub fn basis(&self, i: usize) -> Vector {
        basis_vec(self.dim(), i)
    }

    pub fn is_involutive(&self) -> bool {
        (&self.phi * &self.phi).is_identity()
    }

    pub fn is_regular(&self) -> bool {
        self.phi.is_invertible()
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }

    /// Matrix of `ad_x = [x, -]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &self.basis(j))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// `[phi u, [v, w]] + [phi v, [w, u]] + [phi w, [u, v]]`
    pub fn hom_jacobiator(&self, u: &[Rational], v: &[Rational], w: &[Rational]) -> Vector {
        let a = self.bracket(&self.twist(u), &self.bracket(v, w));
        let b = self.bracket(&self.twist(v), &self.bracket(w, u));
        let c = self.bracket(&self.twist(w), &self.bracket(u, v));
        add_vec(&add_vec(&a, &b), &c)
    }

    pub fn check(&self) -> Report {
        let n = self.dim();
        let mut report = Report::new("hom-Lie algebra");
        report.push(Check::over(SKEW_SYMMETRY, index_tuples(&[n, n]), |t| {
            let (i, j) = (t[0], t[1]);
            self.bracket_basis(i, j)
                .iter()
                .zip(self.bracket_basis(j, i))
                .all(|(a, b)| (a + b).is_zero())
        }));
        report.push(Check::over(PHI_MORPHISM, index_tuples(&[n, n]), |t| {
            let (x, y) = (self.basis(t[0]), self.basis(t[1]));
            self.twist(&self.bracket(&x, &y)) == self.bracket(&self.twist(&x), &self.twist(&y))
        }));
        report.push(Check::over(HOM_JACOBI, index_tuples(&[n, n, n]), |t| {
            is_zero_vec(&self.hom_jacobiator(&self.basis(t[0]), &self.basis(t[1]), &self.basis(t[2])))
        }));
        report
    }
}

/// Runs the hom-Lie axioms on raw data.
pub fn check_hom_lie(bracket: &Tensor, phi: &Matrix) -> Result<Report> {
    Ok(HomLieAlgebra::new(bracket.clone(), phi.clone())?.check())
}

/// `B(x, y) = tr(ad_x ad_y)` with `ad` taken for the algebra's own bracket.
pub fn killing_form(g: &HomLieAlgebra) -> Matrix {
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad(&g.basis(i))).collect();
    Matrix::from_fn(n, n, |i, j| (&ads[i] * &ads[j]).trace())
}

/// The Lie algebra `g_phi` with bracket `phi([x, y])` and identity twist.
pub fn twisted_algebra(g: &HomLieAlgebra) -> Result<HomLieAlgebra> {
    if !g.is_involutive() {
        return Err(Error::precondition("twisted algebra needs an involutive twist (phi^2 = Id)"));
    }
    HomLieAlgebra::lie(g.bracket.map_output(&g.phi))
}

/// The hom-Lie algebra `(g, alpha [x, y], alpha)` from a Lie algebra `g`
/// and an endomorphism `alpha` of its bracket.
pub fn twist_lie_algebra(lie: &Tensor, alpha: &Matrix) -> Result<HomLieAlgebra> {
    let n = lie.output_dim();
    let g = HomLieAlgebra::validated(lie.clone(), Matrix::identity(n))?;
    if alpha.rows() != n || !alpha.is_square() {
        return Err(Error::shape("twist must be a square matrix on the algebra"));
    }
    let morphism = index_tuples(&[n, n]).into_iter().all(|t| {
        let (x, y) = (alpha.column(t[0]), alpha.column(t[1]));
        alpha.mul_vec(g.bracket_basis(t[0], t[1])) == g.bracket(&x, &y)
    });
    if !morphism {
        return Err(Error::precondition("twist is not an endomorphism of the bracket"));
    }
    HomLieAlgebra::new(lie.map_output(alpha), alpha.clone())
}

/// Linear map `f: source -> target` between hom-Lie algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieMorphism {
    pub source: HomLieAlgebra,
    pub target: HomLieAlgebra,
    map: Matrix,
}

pub const PRESERVES_BRACKET: &str = "preserves-bracket";
pub const COMMUTES_WITH_TWIST: &str = "commutes-with-twist";

impl HomLieMorphism {
    pub fn new(source: HomLieAlgebra, target: HomLieAlgebra, map: Matrix) -> Result<Self> {
        if map.rows() != target.dim() || map.cols() != source.dim() {
            return Err(Error::shape(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                map.rows(),
                map.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(HomLieMorphism { source, target, map })
    }

    pub fn identity(g: HomLieAlgebra) -> Self {
        let map = Matrix::identity(g.dim());
        HomLieMorphism {
            source: g.clone(),
            target: g,
            map,
        }
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn check(&self) -> Report {
        let n = self.source.dim();
        let f = &self.map;
        let mut report = Report::new("hom-Lie morphism");
        report.push(Check::over(PRESERVES_BRACKET, index_tuples(&[n, n]), |t| {
            let (u, v) = (self.source.basis(t[0]), self.source.basis(t[1]));
            f.mul_vec(&self.source.bracket(&u, &v)) == self.target.bracket(&f.mul_vec(&u), &f.mul_vec(&v))
        }));
        let lhs = f * self.source.phi();
        let rhs = self.target.phi() * f;
        report.push(Check::over(COMMUTES_WITH_TWIST, (0..n).map(|i| alloc::vec![i]), |t| {
            lhs.column(t[0]) == rhs.column(t[0])
        }));
        report
    }

    /// `after ∘ self`
    pub fn then(&self, after: &HomLieMorphism) -> Result<HomLieMorphism> {
        if self.target != after.source {
            return Err(Error::precondition("morphisms are not composable"));
        }
        HomLieMorphism::new(self.source.clone(), after.target.clone(), after.map() * &self.map)
    }
}

pub fn check_hom_lie_morphism(m: &HomLieMorphism) -> Report {
    m.check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn sl2_phi() -> HomLieAlgebra {
        crate::constructions::sl2_example()
    }

    #[test]
    fn abelian_is_hom_lie_for_any_twist() {
        let g = HomLieAlgebra::abelian(Matrix::from_ints(&[&[1, 2], &[3, 4]])).unwrap();
        assert!(g.check().all_passed());
    }

    #[test]
    fn sl2_passes_and_perturbation_is_caught() {
        let g = sl2_phi();
        assert!(g.check().all_passed());
        // c[A][B][C] += 1 only: breaks skewness and the Jacobi identity.
        let mut t = g.bracket_tensor().clone();
        *t.get_mut(&[0, 1, 2]) += int(1);
        let bad = HomLieAlgebra::new(t, g.phi().clone()).unwrap();
        let report = bad.check();
        let jac = report.get(HOM_JACOBI).unwrap();
        assert!(!jac.passed);
        assert!(jac.witness.as_ref().is_some_and(|w| w.len() == 3));
        assert!(!report.passed(SKEW_SYMMETRY));
    }

    #[test]
    fn shape_errors() {
        assert!(HomLieAlgebra::new(Tensor::zeros(&[2, 2, 2]), Matrix::identity(3)).is_err());
        assert!(HomLieAlgebra::new(Tensor::zeros(&[2, 2, 2]), Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn killing_form_values() {
        let abelian = HomLieAlgebra::abelian(Matrix::identity(3)).unwrap();
        assert!(killing_form(&abelian).is_zero());

        let g = sl2_phi();
        let b = killing_form(&g);
        assert!(b.is_symmetric());
        assert_eq!(b[(2, 2)], int(-8));
        // B([A,B]_phi, C) = B(-C, C)
        let ab = g.bracket(&g.basis(0), &g.basis(1));
        let value = crate::linalg::dot(&ab, &b.mul_vec(&g.basis(2)));
        assert_eq!(value, int(8));
    }

    #[test]
    fn twisted_algebra_examples() {
        let g = sl2_phi();
        let lie = twisted_algebra(&g).unwrap();
        // the twist undoes itself: plain sl(2) with [A,B]=C, [C,A]=2A, [B,C]=2B
        assert_eq!(lie.bracket_basis(0, 1), &[int(0), int(0), int(1)]);
        assert_eq!(lie.bracket_basis(2, 0), &[int(2), int(0), int(0)]);
        assert_eq!(lie.bracket_basis(1, 2), &[int(0), int(2), int(0)]);
        assert!(lie.check().all_passed());

        // twisting plain sl(2) by phi(x) = -x^T gives the bracket of the example
        let plain = HomLieAlgebra::new(lie.bracket_tensor().clone(), g.phi().clone()).unwrap();
        assert!(plain.check().all_passed());
        let back = twisted_algebra(&plain).unwrap();
        assert_eq!(back.bracket_tensor(), g.bracket_tensor());

        let ab = HomLieAlgebra::abelian(Matrix::identity(2).scale(&int(-1))).unwrap();
        assert!(twisted_algebra(&ab).unwrap().is_abelian());

        let id = HomLieAlgebra::lie(lie.bracket_tensor().clone()).unwrap();
        assert_eq!(twisted_algebra(&id).unwrap(), id);

        let not_inv = HomLieAlgebra::abelian(Matrix::identity(2).scale(&int(2))).unwrap();
        assert!(matches!(twisted_algebra(&not_inv), Err(Error::Precondition(_))));
    }

    #[test]
    fn morphism_examples() {
        let g = sl2_phi();
        assert!(HomLieMorphism::identity(g.clone()).check().all_passed());
        let phi = HomLieMorphism::new(g.clone(), g.clone(), g.phi().clone()).unwrap();
        assert!(phi.check().all_passed());
        let zero = HomLieMorphism::new(g.clone(), g.clone(), Matrix::zeros(3, 3)).unwrap();
        assert!(zero.check().all_passed());
        let composite = phi.then(&phi).unwrap();
        assert!(composite.check().all_passed());
        assert!(composite.map().is_identity());

        let scaled = HomLieMorphism::new(g.clone(), g, Matrix::identity(3).scale(&int(2))).unwrap();
        let report = scaled.check();
        assert!(!report.passed(PRESERVES_BRACKET));
        assert!(report.passed(COMMUTES_WITH_TWIST));
    }
}
