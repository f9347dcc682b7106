//! Representations of hom-Lie algebras, hom-cochains, the twisted
//! coboundary operator and cohomology computed by exact elimination.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::homlie::{twisted_algebra, HomLieAlgebra};
use crate::linalg::{
    axpy, in_span, increasing_tuples, index_tuples, intersect_spans, is_zero_vec, sort_with_sign,
    zero_vec, Matrix, Rational, Tensor, Vector,
};
use crate::report::{Check, Report};

pub const REP_TWIST_COMPATIBLE: &str = "rep-(i) twist compatibility";
pub const REP_BRACKET_COMPATIBLE: &str = "rep-(ii) bracket compatibility";
pub const DUAL_CONDITION: &str = "dual condition";

/// `rho: g -> gl(V)` together with the twist `A` on `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: HomLieAlgebra,
    twist: Matrix,
    action: Vec<Matrix>,
}

impl Representation {
    /// `action[i]` is the matrix of `rho(e_i)`.
    pub fn new(algebra: HomLieAlgebra, twist: Matrix, action: Vec<Matrix>) -> Result<Self> {
        let m = twist.rows();
        if !twist.is_square() {
            return Err(Error::shape("module twist A must be square"));
        }
        if action.len() != algebra.dim() {
            return Err(Error::shape(format!(
                "representation lists {} action matrices for a {}-dimensional algebra",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(i) = action.iter().position(|r| r.rows() != m || r.cols() != m) {
            return Err(Error::shape(format!("action matrix {i} is not {m}x{m}")));
        }
        Ok(Representation {
            algebra,
            twist,
            action,
        })
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.algebra
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn module_dim(&self) -> usize {
        self.twist.rows()
    }

    /// `rho(x)` for an arbitrary algebra element.
    pub fn rho(&self, x: &[Rational]) -> Matrix {
        let m = self.module_dim();
        let mut out = Matrix::zeros(m, m);
        for (c, r) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out = &out + &r.scale(c);
            }
        }
        out
    }

    pub fn check(&self) -> Report {
        let g = &self.algebra;
        let n = g.dim();
        let a = &self.twist;
        let mut report = Report::new("representation");
        report.push(Check::over(REP_TWIST_COMPATIBLE, index_tuples(&[n]), |t| {
            let u = g.basis(t[0]);
            &self.rho(&g.twist(&u)) * a == a * &self.rho(&u)
        }));
        report.push(Check::over(REP_BRACKET_COMPATIBLE, index_tuples(&[n, n]), |t| {
            let (u, v) = (g.basis(t[0]), g.basis(t[1]));
            let lhs = &self.rho(&g.bracket(&u, &v)) * a;
            let rhs = &(&self.rho(&g.twist(&u)) * &self.rho(&v)) - &(&self.rho(&g.twist(&v)) * &self.rho(&u));
            lhs == rhs
        }));
        report
    }

    /// `A rho([x,y]) = rho(x) rho(phi y) - rho(y) rho(phi x)` on basis pairs,
    /// the condition for the dual action to be a representation.
    pub fn dual_condition(&self) -> Check {
        let g = &self.algebra;
        let n = g.dim();
        Check::over(DUAL_CONDITION, index_tuples(&[n, n]), |t| {
            let (x, y) = (g.basis(t[0]), g.basis(t[1]));
            let lhs = &self.twist * &self.rho(&g.bracket(&x, &y));
            let rhs = &(&self.rho(&x) * &self.rho(&g.twist(&y))) - &(&self.rho(&y) * &self.rho(&g.twist(&x)));
            lhs == rhs
        })
    }
}

pub fn check_representation(r: &Representation) -> Report {
    r.check()
}

/// The trivial representation on a one-dimensional module with `A = Id`.
pub fn trivial_representation(g: &HomLieAlgebra) -> Representation {
    Representation {
        algebra: g.clone(),
        twist: Matrix::identity(1),
        action: vec![Matrix::zeros(1, 1); g.dim()],
    }
}

/// The adjoint representation `rho(x) = ad_x` on `g` with `A = phi`.
pub fn adjoint_representation(g: &HomLieAlgebra) -> Representation {
    Representation {
        algebra: g.clone(),
        twist: g.phi().clone(),
        action: (0..g.dim()).map(|i| g.ad(&g.basis(i))).collect(),
    }
}

/// `rho*(x) = -rho(x)^T` on `V*` with twist `A^T`, when that is again a
/// representation.
pub fn dual_representation(r: &Representation) -> Option<Representation> {
    if !r.dual_condition().passed {
        return None;
    }
    let dual = Representation {
        algebra: r.algebra.clone(),
        twist: r.twist.transpose(),
        action: r.action.iter().map(|m| -&m.transpose()).collect(),
    };
    dual.check().all_passed().then_some(dual)
}

/// A skew-symmetric `k`-linear map `g^k -> V`, stored as a full tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    values: Tensor,
}

impl Cochain {
    pub fn zero(degree: usize, algebra_dim: usize, module_dim: usize) -> Self {
        let mut shape = vec![algebra_dim; degree];
        shape.push(module_dim);
        Cochain {
            degree,
            values: Tensor::zeros(&shape),
        }
    }

    /// Wraps a tensor of shape `[n; k] + [m]`, checking that it is skew.
    pub fn from_tensor(values: Tensor) -> Result<Self> {
        let degree = values.arity();
        if degree > 0 && values.input_dims().iter().any(|&d| d != values.input_dims()[0]) {
            return Err(Error::shape("cochain inputs must all range over the algebra"));
        }
        let c = Cochain { degree, values };
        if let Some(w) = c.skew_violation() {
            return Err(Error::precondition(format!("cochain is not skew-symmetric at {w:?}")));
        }
        Ok(c)
    }

    /// Builds a skew cochain from its values on increasing index tuples.
    pub fn from_increasing(
        degree: usize,
        algebra_dim: usize,
        module_dim: usize,
        mut value: impl FnMut(&[usize]) -> Vector,
    ) -> Self {
        let mut c = Cochain::zero(degree, algebra_dim, module_dim);
        for t in increasing_tuples(algebra_dim, degree) {
            let v = value(&t);
            c.set_skew(&t, &v);
        }
        c
    }

    fn set_skew(&mut self, sorted: &[usize], v: &[Rational]) {
        for perm in permutations(sorted.len()) {
            let t: Vec<usize> = perm.iter().map(|&p| sorted[p]).collect();
            let sign = sort_with_sign(&perm).map(|(_, s)| s).unwrap_or(1);
            let val: Vector = if sign == 1 {
                v.to_vec()
            } else {
                v.iter().map(|x| -x).collect()
            };
            self.values.set_fiber(&t, &val);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra_dim(&self) -> usize {
        if self.degree == 0 {
            0
        } else {
            self.values.input_dims()[0]
        }
    }

    pub fn module_dim(&self) -> usize {
        self.values.output_dim()
    }

    pub fn tensor(&self) -> &Tensor {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn eval(&self, args: &[&[Rational]]) -> Vector {
        self.values.apply(args)
    }

    pub fn value(&self, indices: &[usize]) -> &[Rational] {
        self.values.fiber(indices)
    }

    fn skew_violation(&self) -> Option<Vec<usize>> {
        let n = self.algebra_dim();
        for t in index_tuples(&vec![n; self.degree]) {
            let expected: Vector = match sort_with_sign(&t) {
                None => zero_vec(self.module_dim()),
                Some((sorted, s)) => {
                    let v = self.values.fiber(&sorted);
                    if s == 1 {
                        v.to_vec()
                    } else {
                        v.iter().map(|x| -x).collect()
                    }
                }
            };
            if self.values.fiber(&t) != expected.as_slice() {
                return Some(t);
            }
        }
        None
    }

    /// Coordinates on increasing tuples, module index fastest.
    pub fn coordinates(&self) -> Vector {
        increasing_tuples(self.algebra_dim(), self.degree)
            .iter()
            .flat_map(|t| self.values.fiber(t).to_vec())
            .collect()
    }

    pub fn from_coordinates(degree: usize, algebra_dim: usize, module_dim: usize, coords: &[Rational]) -> Self {
        let tuples = increasing_tuples(algebra_dim, degree);
        assert_eq!(coords.len(), tuples.len() * module_dim, "coordinate vector has wrong length");
        let mut pos = 0;
        Cochain::from_increasing(degree, algebra_dim, module_dim, |_| {
            let v = coords[pos..pos + module_dim].to_vec();
            pos += module_dim;
            v
        })
    }

    /// `A f(u_1..u_k) - f(phi u_1, .., phi u_k)` on the first increasing
    /// tuple where it is nonzero.
    pub fn hom_violation(&self, r: &Representation) -> Option<Vec<usize>> {
        let g = r.algebra();
        increasing_tuples(g.dim(), self.degree).into_iter().find(|t| {
            let lhs = r.twist().mul_vec(self.value(t));
            let twisted: Vec<Vector> = t.iter().map(|&i| g.twist(&g.basis(i))).collect();
            let args: Vec<&[Rational]> = twisted.iter().map(Vec::as_slice).collect();
            lhs != self.eval(&args)
        })
    }

    pub fn is_hom_cochain(&self, r: &Representation) -> bool {
        self.hom_violation(r).is_none()
    }

    fn check_shape(&self, r: &Representation) -> Result<()> {
        if self.degree > 0 && self.algebra_dim() != r.algebra().dim() {
            return Err(Error::shape("cochain and representation live on different algebras"));
        }
        if self.module_dim() != r.module_dim() {
            return Err(Error::shape("cochain values and module have different dimensions"));
        }
        Ok(())
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// The coboundary formula without the hom-cochain precondition. Callers
/// in this module only feed it hom-cochains.
fn raw_coboundary(f: &Cochain, r: &Representation) -> Cochain {
    let g = r.algebra();
    let n = g.dim();
    let k = f.degree();
    let m = r.module_dim();
    let spectator_twist = g.phi().pow(k as u32 - 1);
    Cochain::from_increasing(k + 1, n, m, |t| {
        let us: Vec<Vector> = t.iter().map(|&i| g.basis(i)).collect();
        let twisted: Vec<Vector> = us.iter().map(|u| g.twist(u)).collect();
        let mut out = zero_vec(m);
        for p in 0..=k {
            let rest: Vec<&[Rational]> = (0..=k).filter(|&q| q != p).map(|q| us[q].as_slice()).collect();
            let fv = f.eval(&rest);
            if is_zero_vec(&fv) {
                continue;
            }
            let acting = r.rho(&spectator_twist.mul_vec(&us[p]));
            let term = acting.mul_vec(&fv);
            let sign = if p % 2 == 0 { Rational::one() } else { -Rational::one() };
            axpy(&mut out, &sign, &term);
        }
        for p in 0..=k {
            for q in p + 1..=k {
                let br = g.bracket(&us[p], &us[q]);
                if is_zero_vec(&br) {
                    continue;
                }
                let mut args: Vec<&[Rational]> = vec![br.as_slice()];
                args.extend((0..=k).filter(|&s| s != p && s != q).map(|s| twisted[s].as_slice()));
                let term = f.eval(&args);
                let sign = if (p + q) % 2 == 0 { Rational::one() } else { -Rational::one() };
                axpy(&mut out, &sign, &term);
            }
        }
        out
    })
}

/// Twisted coboundary of a hom-cochain of degree `k >= 1`.
pub fn coboundary(f: &Cochain, r: &Representation) -> Result<Cochain> {
    f.check_shape(r)?;
    if f.degree() == 0 {
        return Err(Error::precondition(
            "the coboundary is defined from degree 1; degree 0 is handled by class_is_trivial",
        ));
    }
    if let Some(w) = f.hom_violation(r) {
        return Err(Error::precondition(format!("not a hom-cochain: A f != f phi at {w:?}")));
    }
    Ok(raw_coboundary(f, r))
}

/// Degree-0 differential on `A`-fixed vectors: `(dv)(u) = rho(u) v`.
pub fn degree_zero_coboundary(v: &[Rational], r: &Representation) -> Cochain {
    let g = r.algebra();
    Cochain::from_increasing(1, g.dim(), r.module_dim(), |t| r.rho(&g.basis(t[0])).mul_vec(v))
}

/// Bases (as coordinate vectors) of the spaces in degree `k`.
#[derive(Debug, Clone)]
pub struct CochainSpaces {
    pub degree: usize,
    pub hom_cochains: Vec<Vector>,
    pub cocycles: Vec<Vector>,
    /// Spanning set of the coboundaries, reduced to a basis.
    pub coboundaries: Vec<Vector>,
}

fn hom_cochain_basis(r: &Representation, k: usize) -> Vec<Vector> {
    let n = r.algebra().dim();
    let m = r.module_dim();
    if k == 0 {
        // A-fixed vectors
        let fix = r.twist() - &Matrix::identity(m);
        return fix.kernel();
    }
    let tuples = increasing_tuples(n, k);
    let size = tuples.len() * m;
    if size == 0 {
        return Vec::new();
    }
    // Columns: the defect A f - f phi^{(k)} of each coordinate basis vector.
    let cols: Vec<Vector> = (0..size)
        .map(|c| {
            let mut coords = zero_vec(size);
            coords[c] = Rational::one();
            let f = Cochain::from_coordinates(k, n, m, &coords);
            let g = r.algebra();
            tuples
                .iter()
                .flat_map(|t| {
                    let lhs = r.twist().mul_vec(f.value(t));
                    let twisted: Vec<Vector> = t.iter().map(|&i| g.twist(&g.basis(i))).collect();
                    let args: Vec<&[Rational]> = twisted.iter().map(Vec::as_slice).collect();
                    let rhs = f.eval(&args);
                    lhs.into_iter().zip(rhs).map(|(a, b)| a - b).collect::<Vec<_>>()
                })
                .collect()
        })
        .collect();
    Matrix::from_columns(size, &cols).kernel()
}

fn differential_image(r: &Representation, k: usize, basis: &[Vector]) -> Vec<Vector> {
    let n = r.algebra().dim();
    let m = r.module_dim();
    basis
        .iter()
        .map(|c| {
            if k == 0 {
                degree_zero_coboundary(c, r).coordinates()
            } else {
                raw_coboundary(&Cochain::from_coordinates(k, n, m, c), r).coordinates()
            }
        })
        .collect()
}

fn reduce_to_basis(len: usize, vectors: Vec<Vector>) -> Vec<Vector> {
    if vectors.is_empty() {
        return vectors;
    }
    let (_, pivots) = Matrix::from_columns(len, &vectors).rref();
    pivots.into_iter().map(|p| vectors[p].clone()).collect()
}

pub fn cochain_spaces(r: &Representation, k: usize) -> Result<CochainSpaces> {
    if k == 0 {
        return Err(Error::precondition("cohomology is computed for k >= 1"));
    }
    let n = r.algebra().dim();
    let m = r.module_dim();
    let len = increasing_tuples(n, k).len() * m;
    let next_len = increasing_tuples(n, k + 1).len() * m;

    let hom = hom_cochain_basis(r, k);
    let images = differential_image(r, k, &hom);
    let cocycles: Vec<Vector> = if hom.is_empty() {
        Vec::new()
    } else if next_len == 0 {
        hom.clone()
    } else {
        Matrix::from_columns(next_len, &images)
            .kernel()
            .into_iter()
            .map(|coeffs| {
                let mut v = zero_vec(len);
                for (a, h) in coeffs.iter().zip(&hom) {
                    axpy(&mut v, a, h);
                }
                v
            })
            .collect()
    };
    let below = hom_cochain_basis(r, k - 1);
    let coboundaries = reduce_to_basis(len, differential_image(r, k - 1, &below));
    Ok(CochainSpaces {
        degree: k,
        hom_cochains: hom,
        cocycles,
        coboundaries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CohomologyDims {
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
    /// Whether every coboundary was verified to be a cocycle.
    pub coboundaries_closed: bool,
}

pub fn cohomology_dims(r: &Representation, k: usize) -> Result<CohomologyDims> {
    let spaces = cochain_spaces(r, k)?;
    let n = r.algebra().dim();
    let m = r.module_dim();
    let closed = spaces.coboundaries.iter().all(|b| {
        let c = Cochain::from_coordinates(k, n, m, b);
        c.is_hom_cochain(r) && raw_coboundary(&c, r).is_zero()
    });
    let z = spaces.cocycles.len();
    let b = spaces.coboundaries.len();
    Ok(CohomologyDims {
        cochains: spaces.hom_cochains.len(),
        cocycles: z,
        coboundaries: b,
        cohomology: z.saturating_sub(b),
        coboundaries_closed: closed,
    })
}

/// Whether a closed hom-cochain is a coboundary of some hom-cochain.
pub fn class_is_trivial(f: &Cochain, r: &Representation) -> Result<bool> {
    let closed = coboundary(f, r)?;
    if !closed.is_zero() {
        return Err(Error::precondition("cochain is not closed"));
    }
    let spaces = cochain_spaces(r, f.degree())?;
    Ok(in_span(&spaces.coboundaries, &f.coordinates()))
}

pub const INCLUSION_CLOSED: &str = "cocycles stay closed in g_phi";
pub const INCLUSION_EXACT: &str = "coboundaries stay exact in g_phi";
pub const INCLUSION_INJECTIVE: &str = "induced map is injective";

/// Compares the hom-cohomology of an involutive `g` (trivial coefficients)
/// with the Lie algebra cohomology of `g_phi`.
pub fn cohomology_inclusion_check(g: &HomLieAlgebra, k: usize) -> Result<Report> {
    let lie = twisted_algebra(g)?;
    let hom_rep = trivial_representation(g);
    let lie_rep = trivial_representation(&lie);
    let n = g.dim();
    let len = increasing_tuples(n, k).len();

    let hom = cochain_spaces(&hom_rep, k)?;
    let lie_spaces = cochain_spaces(&lie_rep, k)?;

    let mut report = Report::new(format!("cohomology inclusion, degree {k}"));
    report.push(Check::over(INCLUSION_CLOSED, (0..hom.cocycles.len()).map(|i| vec![i]), |t| {
        let f = Cochain::from_coordinates(k, n, 1, &hom.cocycles[t[0]]);
        raw_coboundary(&f, &lie_rep).is_zero()
    }));
    report.push(Check::over(INCLUSION_EXACT, (0..hom.coboundaries.len()).map(|i| vec![i]), |t| {
        in_span(&lie_spaces.coboundaries, &hom.coboundaries[t[0]])
    }));
    let meet = intersect_spans(len, &hom.cocycles, &lie_spaces.coboundaries);
    report.push(Check::over(INCLUSION_INJECTIVE, (0..meet.len()).map(|i| vec![i]), |t| {
        in_span(&hom.coboundaries, &meet[t[0]])
    }));
    Ok(report)
}
