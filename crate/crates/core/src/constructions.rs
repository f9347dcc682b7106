//! Quadratic, string, crossed-module, left-symmetric and symplectic
//! constructions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cohomology::{dual_representation, Cochain, Representation};
use crate::error::{Error, Result};
use crate::hl2::TwoTermHL;
use crate::homlie::{killing_form, twisted_algebra, HomLieAlgebra, HomLieMorphism};
use crate::linalg::{add_vec, basis_vec, dot, index_tuples, int, sub_vec, Matrix, Rational, Tensor, Vector};
use crate::report::{Check, Report};

/// `sl(2)` with basis `(A, B, C)`, twist `phi(x) = -x^T` and the twisted
/// bracket `[x, y]_phi = phi [x, y]`.
pub fn sl2_example() -> HomLieAlgebra {
    let mut c = Tensor::zeros(&[3, 3, 3]);
    let (a, b, h) = (0, 1, 2);
    let mut set = |i: usize, j: usize, k: usize, v: i64| {
        *c.get_mut(&[i, j, k]) = int(v);
        *c.get_mut(&[j, i, k]) = int(-v);
    };
    set(a, b, h, -1);
    set(h, a, b, -2);
    set(b, h, a, -2);
    let phi = Matrix::from_ints(&[&[0, -1, 0], &[-1, 0, 0], &[0, 0, -1]]);
    HomLieAlgebra::new(c, phi).expect("fixed shapes")
}

fn form(b: &Matrix, x: &[Rational], y: &[Rational]) -> Rational {
    dot(x, &b.mul_vec(y))
}

pub const Q_SYMMETRIC: &str = "B symmetric";
pub const Q_NONDEGENERATE: &str = "B nondegenerate";
pub const Q_INVARIANT: &str = "B([x,y],z) = -B([x,z],y)";
pub const Q_PHI_SYMMETRIC: &str = "B(phi x, y) = B(x, phi y)";
pub const Q_INVOLUTIVE: &str = "phi^2 = Id";
pub const Q_ISOMETRY: &str = "B(phi x, phi y) = B(x, y)";
pub const Q_TWO_OF_THREE: &str = "two of three imply the third";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticHomLie {
    pub algebra: HomLieAlgebra,
    pub form: Matrix,
}

impl QuadraticHomLie {
    pub fn new(algebra: HomLieAlgebra, form: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if form.rows() != n || form.cols() != n {
            return Err(Error::shape(format!("bilinear form must be {n}x{n}")));
        }
        Ok(QuadraticHomLie { algebra, form })
    }

    pub fn check(&self) -> Report {
        check_quadratic(self)
    }
}

fn phi_symmetric(b: &Matrix, phi: &Matrix) -> bool {
    &phi.transpose() * b == b * phi
}

fn isometric(b: &Matrix, phi: &Matrix) -> bool {
    &(&phi.transpose() * b) * phi == *b
}

/// For symmetric nondegenerate `B`, any two of `phi`-symmetry,
/// involutivity and isometry force the third. Passes vacuously when `B`
/// is not symmetric and nondegenerate.
pub fn two_of_three(b: &Matrix, phi: &Matrix) -> Check {
    if !b.is_symmetric() || !b.is_invertible() {
        return Check::pass(Q_TWO_OF_THREE).with_note("not applicable");
    }
    let held = [phi_symmetric(b, phi), (phi * phi).is_identity(), isometric(b, phi)];
    let count = held.iter().filter(|&&h| h).count();
    Check::from_bool(Q_TWO_OF_THREE, count != 2)
}

pub fn check_quadratic(q: &QuadraticHomLie) -> Report {
    let g = &q.algebra;
    let (b, phi) = (&q.form, g.phi());
    let n = g.dim();
    let mut report = Report::new("quadratic hom-Lie algebra");
    report.absorb("algebra: ", g.check());
    report.push(Check::from_bool(Q_SYMMETRIC, b.is_symmetric()));
    report.push(Check::from_bool(Q_NONDEGENERATE, b.is_invertible()));
    report.push(Check::over(Q_INVARIANT, index_tuples(&[n, n, n]), |t| {
        let (x, y, z) = (g.basis(t[0]), g.basis(t[1]), g.basis(t[2]));
        form(b, &g.bracket(&x, &y), &z) == -form(b, &g.bracket(&x, &z), &y)
    }));
    report.push(Check::from_bool(Q_PHI_SYMMETRIC, phi_symmetric(b, phi)));
    report.push(Check::from_bool(Q_INVOLUTIVE, g.is_involutive()));
    report.push(Check::from_bool(Q_ISOMETRY, isometric(b, phi)));
    report.push(two_of_three(b, phi));
    report
}

fn require_valid(report: Report, what: &str) -> Result<()> {
    if report.all_passed() {
        Ok(())
    } else {
        Err(Error::Invalid {
            what: what.into(),
            report,
        })
    }
}

/// `l3(x, y, z) = B([x, y], z)` as a trivial-coefficient 3-cochain.
pub fn l3_from_b(q: &QuadraticHomLie) -> Result<Cochain> {
    if !q.algebra.is_involutive() {
        return Err(Error::precondition("l3 from B needs an involutive hom-Lie algebra"));
    }
    let g = &q.algebra;
    let n = g.dim();
    let mut t = Tensor::zeros(&[n, n, n, 1]);
    for idx in index_tuples(&[n, n, n]) {
        let v = form(&q.form, g.bracket_basis(idx[0], idx[1]), &g.basis(idx[2]));
        t.set_fiber(&idx, &[v]);
    }
    Cochain::from_tensor(t)
}

/// `(R --0--> g, [.,.], l3 = B([x,y],z), phi, Id)`.
pub fn skeletal_from_quadratic(q: &QuadraticHomLie) -> Result<TwoTermHL> {
    if !q.algebra.is_involutive() {
        return Err(Error::precondition("skeletal construction needs an involutive hom-Lie algebra"));
    }
    require_valid(q.check(), "quadratic hom-Lie algebra")?;
    let g = &q.algebra;
    let n = g.dim();
    let l3 = l3_from_b(q)?;
    TwoTermHL::new(
        Matrix::zeros(n, 1),
        g.bracket_tensor().clone(),
        Tensor::zeros(&[n, 1, 1]),
        l3.tensor().clone(),
        g.phi().clone(),
        Matrix::identity(1),
    )
}

/// Nondegenerate Killing form of the induced Lie algebra `g_phi`.
pub fn is_semisimple(g: &HomLieAlgebra) -> Result<bool> {
    Ok(killing_form(&twisted_algebra(g)?).is_invertible())
}

/// The string hom-Lie 2-algebra with `B` the Killing form of `g`.
pub fn string_from_semisimple(g: &HomLieAlgebra) -> Result<TwoTermHL> {
    if !g.is_involutive() {
        return Err(Error::precondition("string construction needs an involutive hom-Lie algebra"));
    }
    if !is_semisimple(g)? {
        return Err(Error::precondition("not semisimple: the Killing form of g_phi is degenerate"));
    }
    skeletal_from_quadratic(&QuadraticHomLie::new(g.clone(), killing_form(g))?)
}

pub const CM_EQUIVARIANT: &str = "dt(varphi_x m) = [x, dt m]";
pub const CM_PEIFFER: &str = "varphi_{dt m} n = [m, n]_h";
pub const CM_DERIVED: &str = "varphi_{phi x}[m,n] = [varphi_x m, phi n] + [phi m, varphi_x n]";

/// `(h, g, dt, varphi)` with `varphi` a representation of `g` on `h`
/// relative to `phi_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    pub h: HomLieAlgebra,
    pub g: HomLieAlgebra,
    pub dt: Matrix,
    pub varphi: Representation,
}

impl CrossedModule {
    pub fn new(h: HomLieAlgebra, g: HomLieAlgebra, dt: Matrix, varphi: Representation) -> Result<Self> {
        if dt.rows() != g.dim() || dt.cols() != h.dim() {
            return Err(Error::shape(format!("dt must be {}x{}", g.dim(), h.dim())));
        }
        if varphi.algebra() != &g {
            return Err(Error::shape("varphi must be a representation of g"));
        }
        if varphi.twist() != h.phi() {
            return Err(Error::shape("varphi must act on h with twist phi_h"));
        }
        Ok(CrossedModule { h, g, dt, varphi })
    }

    pub fn check(&self) -> Report {
        check_crossed_module(self)
    }
}

pub fn check_crossed_module(cm: &CrossedModule) -> Report {
    let (h, g) = (&cm.h, &cm.g);
    let (nh, ng) = (h.dim(), g.dim());
    let act = |x: &[Rational], m: &[Rational]| cm.varphi.rho(x).mul_vec(m);
    let mut report = Report::new("crossed module");
    report.absorb("h: ", h.check());
    report.absorb("g: ", g.check());
    let dt = HomLieMorphism::new(h.clone(), g.clone(), cm.dt.clone()).expect("shapes checked at construction");
    report.absorb("dt: ", dt.check());
    report.absorb("varphi: ", cm.varphi.check());
    report.push(Check::over(CM_EQUIVARIANT, index_tuples(&[ng, nh]), |t| {
        let (x, m) = (g.basis(t[0]), h.basis(t[1]));
        cm.dt.mul_vec(&act(&x, &m)) == g.bracket(&x, &cm.dt.mul_vec(&m))
    }));
    report.push(Check::over(CM_PEIFFER, index_tuples(&[nh, nh]), |t| {
        let (m, n) = (h.basis(t[0]), h.basis(t[1]));
        act(&cm.dt.mul_vec(&m), &n) == h.bracket(&m, &n)
    }));
    report.push(Check::over(CM_DERIVED, index_tuples(&[ng, nh, nh]), |t| {
        let (x, m, n) = (g.basis(t[0]), h.basis(t[1]), h.basis(t[2]));
        let lhs = act(&g.twist(&x), &h.bracket(&m, &n));
        let rhs = add_vec(&h.bracket(&act(&x, &m), &h.twist(&n)), &h.bracket(&h.twist(&m), &act(&x, &n)));
        lhs == rhs
    }));
    report
}

/// `g = V0`, `h = V1` with `[m, n]_h = l2(dm, n)`, `dt = d`,
/// `varphi_x m = l2(x, m)`.
pub fn strict_to_crossed(v: &TwoTermHL) -> Result<CrossedModule> {
    if !v.is_strict() {
        return Err(Error::precondition("crossed modules correspond to strict algebras (l3 = 0)"));
    }
    require_valid(v.check(), "2-term HL-infinity algebra")?;
    let n1 = v.dim1();
    let mut hb = Tensor::zeros(&[n1, n1, n1]);
    for t in index_tuples(&[n1, n1]) {
        let val = v.l2_xm(&v.diff(&basis_vec(n1, t[0])), &basis_vec(n1, t[1]));
        hb.set_fiber(&t, &val);
    }
    let h = HomLieAlgebra::new(hb, v.phi1.clone())?;
    let g = v.degree_zero_algebra();
    let varphi = v.rho_phi1();
    CrossedModule::new(h, g, v.d.clone(), varphi)
}

/// `V0 = g`, `V1 = h`, `d = dt`, `l2(x, m) = varphi_x m`, `l3 = 0`.
pub fn crossed_to_strict(cm: &CrossedModule) -> Result<TwoTermHL> {
    let report = cm.check();
    if !report.all_passed() {
        let names: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
        return Err(Error::precondition(format!("invalid crossed module: {}", names.join(", "))));
    }
    let (nh, ng) = (cm.h.dim(), cm.g.dim());
    let mut l2_01 = Tensor::zeros(&[ng, nh, nh]);
    for t in index_tuples(&[ng, nh]) {
        l2_01.set_fiber(&t, &cm.varphi.action()[t[0]].column(t[1]));
    }
    TwoTermHL::new(
        cm.dt.clone(),
        cm.g.bracket_tensor().clone(),
        l2_01,
        Tensor::zeros(&[ng, ng, ng, nh]),
        cm.g.phi().clone(),
        cm.h.phi().clone(),
    )
}

pub const LS_MULTIPLICATIVE: &str = "phi(x*y) = phi x * phi y";
pub const LS_LEFT_SYMMETRY: &str = "left-symmetry";
pub const LS_DUAL: &str = "dual representation";

/// `(V, *, phi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLeftSymmetric {
    pub star: Tensor,
    pub phi: Matrix,
}

/// The report together with the structures a valid input induces.
#[derive(Debug, Clone)]
pub struct LeftSymmetricAnalysis {
    pub report: Report,
    pub sub_adjacent: Option<HomLieAlgebra>,
    pub rho: Option<Representation>,
    pub dual: Option<Representation>,
}

impl HomLeftSymmetric {
    pub fn new(star: Tensor, phi: Matrix) -> Result<Self> {
        let n = phi.rows();
        if !phi.is_square() || star.shape() != [n, n, n] {
            return Err(Error::shape(format!("left-symmetric data must be [{n},{n},{n}] with {n}x{n} phi")));
        }
        Ok(HomLeftSymmetric { star, phi })
    }

    pub fn dim(&self) -> usize {
        self.phi.rows()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.star.apply(&[x, y])
    }

    /// `[x, y] = x*y - y*x`.
    pub fn sub_adjacent(&self) -> HomLieAlgebra {
        let n = self.dim();
        let mut c = Tensor::zeros(&[n, n, n]);
        for t in index_tuples(&[n, n]) {
            c.set_fiber(&t, &sub_vec(self.star.fiber(&t), self.star.fiber(&[t[1], t[0]])));
        }
        HomLieAlgebra::new(c, self.phi.clone()).expect("shapes checked at construction")
    }

    /// `rho(x) y = x * y` on `V` with twist `phi`.
    pub fn left_multiplication(&self) -> Representation {
        let n = self.dim();
        let action = (0..n)
            .map(|i| Matrix::from_fn(n, n, |r, c| self.star.get(&[i, c, r]).clone()))
            .collect();
        Representation::new(self.sub_adjacent(), self.phi.clone(), action).expect("shapes checked at construction")
    }
}

pub fn check_left_symmetric(a: &HomLeftSymmetric) -> LeftSymmetricAnalysis {
    let n = a.dim();
    let e = |i: usize| basis_vec(n, i);
    let phi = |x: &[Rational]| a.phi.mul_vec(x);
    let mut report = Report::new("hom-left-symmetric algebra");
    report.push(Check::over(LS_MULTIPLICATIVE, index_tuples(&[n, n]), |t| {
        let (x, y) = (e(t[0]), e(t[1]));
        phi(&a.mul(&x, &y)) == a.mul(&phi(&x), &phi(&y))
    }));
    report.push(Check::over(LS_LEFT_SYMMETRY, index_tuples(&[n, n, n]), |t| {
        let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
        let lhs = sub_vec(&a.mul(&phi(&x), &a.mul(&y, &z)), &a.mul(&a.mul(&x, &y), &phi(&z)));
        let rhs = sub_vec(&a.mul(&phi(&y), &a.mul(&x, &z)), &a.mul(&a.mul(&y, &x), &phi(&z)));
        lhs == rhs
    }));
    if !report.all_passed() {
        return LeftSymmetricAnalysis {
            report,
            sub_adjacent: None,
            rho: None,
            dual: None,
        };
    }
    let g = a.sub_adjacent();
    let rho = a.left_multiplication();
    report.absorb("sub-adjacent: ", g.check());
    report.absorb("rho: ", rho.check());
    let dual = if g.is_involutive() {
        let d = dual_representation(&rho);
        report.push(Check::from_bool(LS_DUAL, d.is_some()));
        d
    } else {
        None
    };
    LeftSymmetricAnalysis {
        report,
        sub_adjacent: Some(g),
        rho: Some(rho),
        dual,
    }
}

pub const D_COMMUTES: &str = "d phi = phi d";
pub const D_BALANCED: &str = "dx * y = x * dy";
pub const D_DERIVATION: &str = "d(x*y) = x*dy - dy*x";

/// Conditions on `d: V -> V` for the strict construction.
pub fn check_leftsym_differential(a: &HomLeftSymmetric, d: &Matrix) -> Result<Report> {
    let n = a.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::shape(format!("d must be {n}x{n}")));
    }
    let e = |i: usize| basis_vec(n, i);
    let mut report = Report::new("differential on a hom-left-symmetric algebra");
    report.push(Check::from_bool(D_COMMUTES, d * &a.phi == &a.phi * d));
    report.push(Check::over(D_BALANCED, index_tuples(&[n, n]), |t| {
        let (x, y) = (e(t[0]), e(t[1]));
        a.mul(&d.mul_vec(&x), &y) == a.mul(&x, &d.mul_vec(&y))
    }));
    report.push(Check::over(D_DERIVATION, index_tuples(&[n, n]), |t| {
        let (x, y) = (e(t[0]), e(t[1]));
        let dy = d.mul_vec(&y);
        d.mul_vec(&a.mul(&x, &y)) == sub_vec(&a.mul(&x, &dy), &a.mul(&dy, &x))
    }));
    Ok(report)
}

/// `(V --d--> V, l2, phi, phi)` with `l2(x, y) = [x, y]` on `V0` and
/// `l2(x, m) = x * m`.
pub fn strict_from_leftsym(a: &HomLeftSymmetric, d: &Matrix) -> Result<TwoTermHL> {
    let analysis = check_left_symmetric(a);
    if !analysis.report.all_passed() {
        return Err(Error::Invalid {
            what: "hom-left-symmetric algebra".into(),
            report: analysis.report,
        });
    }
    let dr = check_leftsym_differential(a, d)?;
    if let Some(c) = dr.failures().next() {
        return Err(Error::precondition(format!("d violates {}", c.name)));
    }
    let n = a.dim();
    TwoTermHL::new(
        d.clone(),
        a.sub_adjacent().bracket_tensor().clone(),
        a.star.clone(),
        Tensor::zeros(&[n, n, n, n]),
        a.phi.clone(),
        a.phi.clone(),
    )
}

pub const S_SKEW: &str = "omega skew";
pub const S_NONDEGENERATE: &str = "omega nondegenerate";
pub const S_INVARIANT: &str = "omega(phi x, phi y) = omega(x, y)";
pub const S_CLOSED: &str = "omega closed";

/// A regular hom-Lie algebra with a 2-form `omega(x, y) = x^T W y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticHomLie {
    pub algebra: HomLieAlgebra,
    pub omega: Matrix,
}

impl SymplecticHomLie {
    pub fn new(algebra: HomLieAlgebra, omega: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if omega.rows() != n || omega.cols() != n {
            return Err(Error::shape(format!("omega must be {n}x{n}")));
        }
        Ok(SymplecticHomLie { algebra, omega })
    }

    pub fn omega(&self, x: &[Rational], y: &[Rational]) -> Rational {
        form(&self.omega, x, y)
    }

    /// `<omega#(x), y> = omega(x, y)`, i.e. the matrix `W^T`.
    pub fn omega_sharp(&self) -> Matrix {
        self.omega.transpose()
    }

    pub fn check(&self) -> Result<Report> {
        check_symplectic(self)
    }
}

pub fn check_symplectic(s: &SymplecticHomLie) -> Result<Report> {
    let g = &s.algebra;
    if !g.is_regular() {
        return Err(Error::precondition("symplectic structures need a regular hom-Lie algebra"));
    }
    let n = g.dim();
    let mut report = Report::new("symplectic hom-Lie algebra");
    report.absorb("algebra: ", g.check());
    report.push(Check::from_bool(S_SKEW, s.omega.transpose() == -&s.omega));
    report.push(Check::from_bool(S_NONDEGENERATE, s.omega.is_invertible()));
    report.push(Check::from_bool(
        S_INVARIANT,
        &(&g.phi().transpose() * &s.omega) * g.phi() == s.omega,
    ));
    report.push(Check::over(S_CLOSED, index_tuples(&[n, n, n]), |t| {
        let (x, y, z) = (g.basis(t[0]), g.basis(t[1]), g.basis(t[2]));
        let sum = s.omega(&g.twist(&x), &g.bracket(&y, &z))
            + s.omega(&g.twist(&y), &g.bracket(&z, &x))
            + s.omega(&g.twist(&z), &g.bracket(&x, &y));
        num_traits::Zero::is_zero(&sum)
    }));
    Ok(report)
}

/// Solves `omega(x*y, phi z) = -omega(phi y, [x, z])` for `x*y`.
pub fn star_from_symplectic(s: &SymplecticHomLie) -> Result<HomLeftSymmetric> {
    require_valid(check_symplectic(s)?, "symplectic hom-Lie algebra")?;
    let g = &s.algebra;
    let n = g.dim();
    // Row z of the system is omega(., phi e_z).
    let system = (&s.omega * g.phi()).transpose();
    let mut star = Tensor::zeros(&[n, n, n]);
    for t in index_tuples(&[n, n]) {
        let (x, y) = (g.basis(t[0]), g.basis(t[1]));
        let rhs: Vector = (0..n)
            .map(|z| -s.omega(&g.twist(&y), &g.bracket(&x, &g.basis(z))))
            .collect();
        let sol = system
            .solve(&rhs)?
            .ok_or_else(|| Error::precondition("the defining system for the product has no solution"))?;
        star.set_fiber(&t, &sol);
    }
    HomLeftSymmetric::new(star, g.phi().clone())
}

pub const SF_TWISTS: &str = "d phi* = phi d";
pub const SF_MIXED: &str = "d l2(x, xi) = l2(x, d xi)";
pub const SF_BALANCED: &str = "l2(d xi, eta) = l2(xi, d eta)";

/// The strict algebra on `g* --phi (omega#)^-1--> g` and the three
/// identities its proof reduces to.
pub fn strict_from_symplectic(s: &SymplecticHomLie) -> Result<(TwoTermHL, Report)> {
    let g = &s.algebra;
    if !g.is_involutive() {
        return Err(Error::precondition("the strict construction needs an involutive symplectic hom-Lie algebra"));
    }
    let ls = star_from_symplectic(s)?;
    let rho = ls.left_multiplication();
    let dual = dual_representation(&rho)
        .ok_or_else(|| Error::precondition("the dual of left multiplication is not a representation"))?;
    let n = g.dim();
    let sharp_inv = s
        .omega_sharp()
        .inverse()
        .ok_or_else(|| Error::precondition("omega is degenerate"))?;
    let d = g.phi() * &sharp_inv;
    let phi_star = g.phi().transpose();
    let mut l2_01 = Tensor::zeros(&[n, n, n]);
    for t in index_tuples(&[n, n]) {
        l2_01.set_fiber(&t, &dual.action()[t[0]].column(t[1]));
    }
    let v = TwoTermHL::new(
        d.clone(),
        g.bracket_tensor().clone(),
        l2_01,
        Tensor::zeros(&[n, n, n, n]),
        g.phi().clone(),
        phi_star.clone(),
    )?;

    let e = |i: usize| basis_vec(n, i);
    let mut report = Report::new("strict algebra from a symplectic structure");
    report.push(Check::from_bool(
        SF_TWISTS,
        &(g.phi() * &sharp_inv) * &phi_star == &(g.phi() * g.phi()) * &sharp_inv,
    ));
    report.push(Check::over(SF_MIXED, index_tuples(&[n, n]), |t| {
        let (x, xi) = (e(t[0]), e(t[1]));
        d.mul_vec(&v.l2_xm(&x, &xi)) == v.l2(&x, &d.mul_vec(&xi))
    }));
    report.push(Check::over(SF_BALANCED, index_tuples(&[n, n]), |t| {
        let (xi, eta) = (e(t[0]), e(t[1]));
        v.l2_xm(&d.mul_vec(&xi), &eta) == v.l2_mx(&xi, &d.mul_vec(&eta))
    }));
    Ok((v, report))
}
