//! 2-term HL∞-algebras, their morphisms, hom-Lie 2-algebras in the
//! 2-vector space model, and the functors `T` and `S` between them.

use alloc::format;
use alloc::vec::Vec;

use crate::cohomology::Representation;
use crate::error::{Error, Result};
use crate::homlie::HomLieAlgebra;
use crate::linalg::{add_vec, basis_vec, index_tuples, sub_vec, zero_vec, Matrix, Rational, Tensor, Vector};
use crate::report::{Check, Report};
use crate::twovect::TwoVectorSpace;

pub const COND_A: &str = "(a)";
pub const COND_B: &str = "(b)";
pub const COND_C: &str = "(c)";
pub const COND_D: &str = "(d)";
pub const COND_E: &str = "(e)";
pub const COND_F: &str = "(f)";
pub const COND_G: &str = "(g)";
pub const COND_H: &str = "(h)";
pub const COND_I: &str = "(i)";
pub const COND_J: &str = "(j)";
pub const CONDITIONS: [&str; 10] = [COND_A, COND_B, COND_C, COND_D, COND_E, COND_F, COND_G, COND_H, COND_I, COND_J];
pub const PHI_CHAIN_MAP: &str = "phi0 d = d phi1";
pub const L3_EQUIVARIANT: &str = "l3 phi-equivariance";
pub const L3_SKEW: &str = "l3 skew";

fn check_square(m: &Matrix, n: usize, what: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::shape(format!("{what} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
    }
    Ok(())
}

fn check_shape(t: &Tensor, shape: &[usize], what: &str) -> Result<()> {
    if t.shape() != shape {
        return Err(Error::shape(format!("{what} has shape {:?}, expected {shape:?}", t.shape())));
    }
    Ok(())
}

fn neg(v: &[Rational]) -> Vector {
    v.iter().map(|x| -x).collect()
}

/// `(V1 --d--> V0, l2, l3, phi0, phi1)`.
///
/// `l2` on `V0 x V0` and on `V0 x V1` is stored; `l2(m, x) = -l2(x, m)` and
/// `l2(m, n) = 0` are built in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTermHL {
    pub d: Matrix,
    pub l2_00: Tensor,
    pub l2_01: Tensor,
    pub l3: Tensor,
    pub phi0: Matrix,
    pub phi1: Matrix,
}

impl TwoTermHL {
    pub fn new(d: Matrix, l2_00: Tensor, l2_01: Tensor, l3: Tensor, phi0: Matrix, phi1: Matrix) -> Result<Self> {
        let (n0, n1) = (d.rows(), d.cols());
        check_shape(&l2_00, &[n0, n0, n0], "l2 on V0 x V0")?;
        check_shape(&l2_01, &[n0, n1, n1], "l2 on V0 x V1")?;
        check_shape(&l3, &[n0, n0, n0, n1], "l3")?;
        check_square(&phi0, n0, "phi0")?;
        check_square(&phi1, n1, "phi1")?;
        Ok(TwoTermHL {
            d,
            l2_00,
            l2_01,
            l3,
            phi0,
            phi1,
        })
    }

    pub fn validated(d: Matrix, l2_00: Tensor, l2_01: Tensor, l3: Tensor, phi0: Matrix, phi1: Matrix) -> Result<Self> {
        let v = Self::new(d, l2_00, l2_01, l3, phi0, phi1)?;
        let report = v.check();
        if report.all_passed() {
            Ok(v)
        } else {
            Err(Error::Invalid {
                what: "2-term HL-infinity algebra".into(),
                report,
            })
        }
    }

    /// Strict 2-term algebra `(g --0--> g)` with both `l2` components the
    /// bracket of `g` and both twists `phi_g`.
    pub fn from_hom_lie_pair(g: &HomLieAlgebra) -> Self {
        let n = g.dim();
        TwoTermHL {
            d: Matrix::zeros(n, n),
            l2_00: g.bracket_tensor().clone(),
            l2_01: g.bracket_tensor().clone(),
            l3: Tensor::zeros(&[n, n, n, n]),
            phi0: g.phi().clone(),
            phi1: g.phi().clone(),
        }
    }

    pub fn dim0(&self) -> usize {
        self.d.rows()
    }

    pub fn dim1(&self) -> usize {
        self.d.cols()
    }

    pub fn is_skeletal(&self) -> bool {
        self.d.is_zero()
    }

    pub fn is_strict(&self) -> bool {
        self.l3.is_zero()
    }

    pub fn l2(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.l2_00.apply(&[x, y])
    }

    /// `l2(x, m)` for `x ∈ V0`, `m ∈ V1`.
    pub fn l2_xm(&self, x: &[Rational], m: &[Rational]) -> Vector {
        self.l2_01.apply(&[x, m])
    }

    /// `l2(m, x) = -l2(x, m)`.
    pub fn l2_mx(&self, m: &[Rational], x: &[Rational]) -> Vector {
        neg(&self.l2_xm(x, m))
    }

    pub fn l3(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.l3.apply(&[x, y, z])
    }

    pub fn diff(&self, m: &[Rational]) -> Vector {
        self.d.mul_vec(m)
    }

    pub fn phi0(&self, x: &[Rational]) -> Vector {
        self.phi0.mul_vec(x)
    }

    pub fn phi1(&self, m: &[Rational]) -> Vector {
        self.phi1.mul_vec(m)
    }

    /// `(V0, l2, phi0)`.
    pub fn degree_zero_algebra(&self) -> HomLieAlgebra {
        HomLieAlgebra::new(self.l2_00.clone(), self.phi0.clone()).expect("shapes checked at construction")
    }

    /// `rho(x) m = l2(x, m)` on `V1` with respect to `phi1`.
    pub fn rho_phi1(&self) -> Representation {
        let n0 = self.dim0();
        let n1 = self.dim1();
        let action = (0..n0)
            .map(|i| Matrix::from_fn(n1, n1, |r, c| self.l2_01.get(&[i, c, r]).clone()))
            .collect();
        Representation::new(self.degree_zero_algebra(), self.phi1.clone(), action).expect("shapes checked at construction")
    }

    pub fn check(&self) -> Report {
        check_two_term(self)
    }
}

/// Conditions (a)-(j) plus the compatibility of the twists with `d` and
/// `l3`. Witnesses index `V0` first, then `V1`.
pub fn check_two_term(v: &TwoTermHL) -> Report {
    let (n0, n1) = (v.dim0(), v.dim1());
    let e0 = |i: usize| basis_vec(n0, i);
    let e1 = |i: usize| basis_vec(n1, i);
    let mut report = Report::new("2-term HL-infinity algebra");

    report.push(Check::over(COND_A, index_tuples(&[n0, n0]), |t| {
        add_vec(&v.l2(&e0(t[0]), &e0(t[1])), &v.l2(&e0(t[1]), &e0(t[0]))).iter().all(num_traits::Zero::is_zero)
    }));
    report.push(Check::pass(COND_B).with_note("structural"));
    report.push(Check::pass(COND_C).with_note("structural"));
    report.push(Check::over(COND_D, index_tuples(&[n0, n1]), |t| {
        let (x, m) = (e0(t[0]), e1(t[1]));
        v.diff(&v.l2_xm(&x, &m)) == v.l2(&x, &v.diff(&m))
    }));
    report.push(Check::over(COND_E, index_tuples(&[n1, n1]), |t| {
        let (m, n) = (e1(t[0]), e1(t[1]));
        v.l2_xm(&v.diff(&m), &n) == v.l2_mx(&m, &v.diff(&n))
    }));
    report.push(Check::over(COND_F, index_tuples(&[n0, n0]), |t| {
        let (x, y) = (e0(t[0]), e0(t[1]));
        v.phi0(&v.l2(&x, &y)) == v.l2(&v.phi0(&x), &v.phi0(&y))
    }));
    report.push(Check::over(COND_G, index_tuples(&[n0, n1]), |t| {
        let (x, m) = (e0(t[0]), e1(t[1]));
        v.phi1(&v.l2_xm(&x, &m)) == v.l2_xm(&v.phi0(&x), &v.phi1(&m))
    }));
    report.push(Check::over(COND_H, index_tuples(&[n0, n0, n0]), |t| {
        let (x, y, z) = (e0(t[0]), e0(t[1]), e0(t[2]));
        let rhs = add_vec(
            &add_vec(&v.l2(&v.phi0(&x), &v.l2(&y, &z)), &v.l2(&v.phi0(&y), &v.l2(&z, &x))),
            &v.l2(&v.phi0(&z), &v.l2(&x, &y)),
        );
        v.diff(&v.l3(&x, &y, &z)) == rhs
    }));
    report.push(Check::over(COND_I, index_tuples(&[n0, n0, n1]), |t| {
        let (x, y, m) = (e0(t[0]), e0(t[1]), e1(t[2]));
        let rhs = add_vec(
            &add_vec(&v.l2_xm(&v.phi0(&x), &v.l2_xm(&y, &m)), &v.l2_xm(&v.phi0(&y), &v.l2_mx(&m, &x))),
            &v.l2_mx(&v.phi1(&m), &v.l2(&x, &y)),
        );
        v.l3(&x, &y, &v.diff(&m)) == rhs
    }));
    report.push(Check::over(COND_J, index_tuples(&[n0, n0, n0, n0]), |t| {
        let (w, x, y, z) = (e0(t[0]), e0(t[1]), e0(t[2]), e0(t[3]));
        condition_j_defect(v, &w, &x, &y, &z).iter().all(num_traits::Zero::is_zero)
    }));

    report.push(Check::from_bool(PHI_CHAIN_MAP, &v.phi0 * &v.d == &v.d * &v.phi1));
    report.push(Check::over(L3_EQUIVARIANT, index_tuples(&[n0, n0, n0]), |t| {
        let (x, y, z) = (e0(t[0]), e0(t[1]), e0(t[2]));
        v.l3(&v.phi0(&x), &v.phi0(&y), &v.phi0(&z)) == v.phi1(&v.l3(&x, &y, &z))
    }));
    report.push(Check::over(L3_SKEW, index_tuples(&[n0, n0, n0]), |t| {
        let l = v.l3.fiber(t);
        neg(l) == v.l3.fiber(&[t[1], t[0], t[2]]) && neg(l) == v.l3.fiber(&[t[0], t[2], t[1]])
    }));
    report
}

/// Left side minus right side of condition (j).
pub fn condition_j_defect(v: &TwoTermHL, w: &[Rational], x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    let p = |a: &[Rational]| v.phi0(a);
    let pp = |a: &[Rational]| v.phi0(&v.phi0(a));
    let terms_lhs = [
        v.l3(&v.l2(w, x), &p(y), &p(z)),
        v.l2_mx(&v.l3(w, x, z), &pp(y)),
        v.l3(&p(w), &v.l2(x, z), &p(y)),
        v.l3(&v.l2(w, z), &p(x), &p(y)),
    ];
    let terms_rhs = [
        v.l2_mx(&v.l3(w, x, y), &pp(z)),
        v.l3(&v.l2(w, y), &p(x), &p(z)),
        v.l3(&p(w), &v.l2(x, y), &p(z)),
        v.l2_xm(&pp(w), &v.l3(x, y, z)),
        v.l2_mx(&v.l3(w, y, z), &pp(x)),
        v.l3(&p(w), &v.l2(y, z), &p(x)),
    ];
    let mut acc = zero_vec(v.dim1());
    for t in &terms_lhs {
        acc = add_vec(&acc, t);
    }
    for t in &terms_rhs {
        acc = sub_vec(&acc, t);
    }
    acc
}

pub const MORPH_CHAIN_MAP: &str = "f0 d = d' f1";
pub const MORPH_PHI0: &str = "f0 phi0 = phi0' f0";
pub const MORPH_PHI1: &str = "f1 phi1 = phi1' f1";
pub const MORPH_F2_SKEW: &str = "f2 skew";
pub const MORPH_F2_PHI: &str = "f2 phi-compatibility";
pub const MORPH_L2: &str = "d' f2 = f0 l2 - l2' f0";
pub const MORPH_MIXED: &str = "f2(x, dm) = f1 l2 - l2' f";
pub const MORPH_L3: &str = "l3 compatibility";

/// `f = (f0, f1, f2)` together with its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HLMorphism {
    pub source: TwoTermHL,
    pub target: TwoTermHL,
    pub f0: Matrix,
    pub f1: Matrix,
    pub f2: Tensor,
}

impl HLMorphism {
    pub fn new(source: TwoTermHL, target: TwoTermHL, f0: Matrix, f1: Matrix, f2: Tensor) -> Result<Self> {
        let (n0, n1) = (source.dim0(), source.dim1());
        let (m0, m1) = (target.dim0(), target.dim1());
        if f0.rows() != m0 || f0.cols() != n0 {
            return Err(Error::shape(format!("f0 must be {m0}x{n0}")));
        }
        if f1.rows() != m1 || f1.cols() != n1 {
            return Err(Error::shape(format!("f1 must be {m1}x{n1}")));
        }
        check_shape(&f2, &[n0, n0, m1], "f2")?;
        Ok(HLMorphism {
            source,
            target,
            f0,
            f1,
            f2,
        })
    }

    /// `(Id, Id, 0)`.
    pub fn identity(v: TwoTermHL) -> Self {
        let (n0, n1) = (v.dim0(), v.dim1());
        HLMorphism {
            f0: Matrix::identity(n0),
            f1: Matrix::identity(n1),
            f2: Tensor::zeros(&[n0, n0, n1]),
            target: v.clone(),
            source: v,
        }
    }

    pub fn check(&self) -> Report {
        check_hl_morphism(self)
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &HLMorphism) -> Result<HLMorphism> {
        compose_hl_morphisms(self, after)
    }
}

pub fn check_hl_morphism(f: &HLMorphism) -> Report {
    let (v, w) = (&f.source, &f.target);
    let (n0, n1) = (v.dim0(), v.dim1());
    let e0 = |i: usize| basis_vec(n0, i);
    let e1 = |i: usize| basis_vec(n1, i);
    let f0 = |x: &[Rational]| f.f0.mul_vec(x);
    let f1 = |m: &[Rational]| f.f1.mul_vec(m);
    let f2 = |x: &[Rational], y: &[Rational]| f.f2.apply(&[x, y]);
    let mut report = Report::new("HL-infinity morphism");

    report.push(Check::from_bool(MORPH_CHAIN_MAP, &f.f0 * &v.d == &w.d * &f.f1));
    report.push(Check::from_bool(MORPH_PHI0, &f.f0 * &v.phi0 == &w.phi0 * &f.f0));
    report.push(Check::from_bool(MORPH_PHI1, &f.f1 * &v.phi1 == &w.phi1 * &f.f1));
    report.push(Check::over(MORPH_F2_SKEW, index_tuples(&[n0, n0]), |t| {
        neg(f.f2.fiber(t)) == f.f2.fiber(&[t[1], t[0]])
    }));
    report.push(Check::over(MORPH_F2_PHI, index_tuples(&[n0, n0]), |t| {
        let (x, y) = (e0(t[0]), e0(t[1]));
        f2(&v.phi0(&x), &v.phi0(&y)) == w.phi1(&f2(&x, &y))
    }));
    report.push(Check::over(MORPH_L2, index_tuples(&[n0, n0]), |t| {
        let (x, y) = (e0(t[0]), e0(t[1]));
        w.diff(&f2(&x, &y)) == sub_vec(&f0(&v.l2(&x, &y)), &w.l2(&f0(&x), &f0(&y)))
    }));
    report.push(Check::over(MORPH_MIXED, index_tuples(&[n0, n1]), |t| {
        let (x, m) = (e0(t[0]), e1(t[1]));
        f2(&x, &v.diff(&m)) == sub_vec(&f1(&v.l2_xm(&x, &m)), &w.l2_xm(&f0(&x), &f1(&m)))
    }));
    report.push(Check::over(MORPH_L3, index_tuples(&[n0, n0, n0]), |t| {
        let (x, y, z) = (e0(t[0]), e0(t[1]), e0(t[2]));
        let (px, py, pz) = (v.phi0(&x), v.phi0(&y), v.phi0(&z));
        let lhs = [
            w.l2_mx(&f2(&x, &y), &f0(&pz)),
            f2(&v.l2(&x, &y), &pz),
            f1(&v.l3(&x, &y, &z)),
        ];
        let rhs = [
            w.l3(&f0(&x), &f0(&y), &f0(&z)),
            w.l2_xm(&f0(&px), &f2(&y, &z)),
            w.l2_mx(&f2(&x, &z), &f0(&py)),
            f2(&px, &v.l2(&y, &z)),
            f2(&v.l2(&x, &z), &py),
        ];
        let sum = |ts: &[Vector]| ts.iter().fold(zero_vec(w.dim1()), |a, b| add_vec(&a, b));
        sum(&lhs) == sum(&rhs)
    }));
    report
}

/// `(f' ∘ f)_2(x, y) = f'_2(f0 x, f0 y) + f'_1 f_2(x, y)`.
pub fn compose_hl_morphisms(f: &HLMorphism, after: &HLMorphism) -> Result<HLMorphism> {
    if f.target != after.source {
        return Err(Error::precondition("target of the first morphism is not the source of the second"));
    }
    let n0 = f.source.dim0();
    let mut f2 = Tensor::zeros(&[n0, n0, after.target.dim1()]);
    for t in index_tuples(&[n0, n0]) {
        let x = f.f0.column(t[0]);
        let y = f.f0.column(t[1]);
        let val = add_vec(&after.f2.apply(&[&x, &y]), &after.f1.mul_vec(f.f2.fiber(&t)));
        f2.set_fiber(&t, &val);
    }
    Ok(HLMorphism {
        source: f.source.clone(),
        target: after.target.clone(),
        f0: &after.f0 * &f.f0,
        f1: &after.f1 * &f.f1,
        f2,
    })
}

pub const BRACKET_SKEW: &str = "bracket skew";
pub const BRACKET_SOURCE: &str = "bracket commutes with source";
pub const BRACKET_TARGET: &str = "bracket commutes with target";
pub const BRACKET_IDENTITIES: &str = "bracket preserves identities";
pub const BRACKET_COMPOSITION: &str = "bracket preserves composition";
pub const PHI_FUNCTOR: &str = "Phi is a linear functor";
pub const PHI_BRACKET: &str = "Phi preserves bracket";
pub const J_ARROW: &str = "Jacobiator has the prescribed target";
pub const J_SKEW: &str = "Jacobiator skew";
pub const J_EQUIVARIANT: &str = "Jacobiator phi-equivariance";
pub const J_NATURAL: &str = "Jacobiator naturality";
pub const HOM_JACOBIATOR_IDENTITY: &str = "hom-Jacobiator identity";

/// A hom-Lie 2-algebra on the 2-vector space of a complex `d: V1 -> V0`.
///
/// Arrows live in `V0 ⊕ V1`. The bracket is a bilinear map on arrows; the
/// bracket of objects is read off identity arrows. `J_{x,y,z}` is stored
/// by its `V1` part, its source being `[[x,y], Phi0 z]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLie2Data {
    pub space: TwoVectorSpace,
    pub bracket: Tensor,
    pub phi0: Matrix,
    pub phi1: Matrix,
    pub jacobiator: Tensor,
}

impl HomLie2Data {
    pub fn new(space: TwoVectorSpace, bracket: Tensor, phi0: Matrix, phi1: Matrix, jacobiator: Tensor) -> Result<Self> {
        let (n0, n1, n) = (space.object_dim(), space.arrow_part_dim(), space.morphism_dim());
        check_shape(&bracket, &[n, n, n], "arrow bracket")?;
        check_square(&phi0, n0, "Phi0")?;
        check_square(&phi1, n, "Phi1")?;
        check_shape(&jacobiator, &[n0, n0, n0, n1], "Jacobiator")?;
        Ok(HomLie2Data {
            space,
            bracket,
            phi0,
            phi1,
            jacobiator,
        })
    }

    pub fn bracket(&self, a: &[Rational], b: &[Rational]) -> Vector {
        self.bracket.apply(&[a, b])
    }

    /// `[x, y] = s[i x, i y]`.
    pub fn object_bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let s = &self.space;
        s.source(&self.bracket(&s.identity_arrow(x), &s.identity_arrow(y)))
    }

    pub fn phi_obj(&self, x: &[Rational]) -> Vector {
        self.phi0.mul_vec(x)
    }

    pub fn phi_arrow(&self, a: &[Rational]) -> Vector {
        self.phi1.mul_vec(a)
    }

    /// `J_{x,y,z}` as an arrow.
    pub fn jacobiator_arrow(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        let src = self.object_bracket(&self.object_bracket(x, y), &self.phi_obj(z));
        self.space.arrow(&src, &self.jacobiator.apply(&[x, y, z]))
    }

    /// `[Phi0 x, [y, z]] + [[x, z], Phi0 y]`.
    pub fn jacobiator_expected_target(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        add_vec(
            &self.object_bracket(&self.phi_obj(x), &self.object_bracket(y, z)),
            &self.object_bracket(&self.object_bracket(x, z), &self.phi_obj(y)),
        )
    }

    pub fn check(&self) -> Report {
        check_hom_lie2(self)
    }
}

/// Every law of a hom-Lie 2-algebra, evaluated on basis data.
///
/// Composite arrows in the hom-Jacobiator identity are formed by vertical
/// composition; the unlabelled identity summands are the identities on
/// whatever part of the intermediate object the labelled arrows do not
/// touch.
pub fn check_hom_lie2(l: &HomLie2Data) -> Report {
    let sp = &l.space;
    let (n0, n1, n) = (sp.object_dim(), sp.arrow_part_dim(), sp.morphism_dim());
    let e0 = |i: usize| basis_vec(n0, i);
    let ea = |i: usize| basis_vec(n, i);
    let id = |x: &[Rational]| sp.identity_arrow(x);
    let mut report = Report::new("hom-Lie 2-algebra");

    report.push(Check::over(BRACKET_SKEW, index_tuples(&[n, n]), |t| {
        neg(l.bracket.fiber(t)) == l.bracket.fiber(&[t[1], t[0]])
    }));
    report.push(Check::over(BRACKET_SOURCE, index_tuples(&[n, n]), |t| {
        let (a, b) = (ea(t[0]), ea(t[1]));
        sp.source(&l.bracket(&a, &b)) == l.object_bracket(&sp.source(&a), &sp.source(&b))
    }));
    report.push(Check::over(BRACKET_TARGET, index_tuples(&[n, n]), |t| {
        let (a, b) = (ea(t[0]), ea(t[1]));
        sp.target(&l.bracket(&a, &b)) == l.object_bracket(&sp.target(&a), &sp.target(&b))
    }));
    report.push(Check::over(BRACKET_IDENTITIES, index_tuples(&[n0, n0]), |t| {
        let (x, y) = (e0(t[0]), e0(t[1]));
        l.bracket(&id(&x), &id(&y)) == id(&l.object_bracket(&x, &y))
    }));
    // Composable pairs (a, a') form the space {(a, m')}: a' = (t a, m').
    // The defect is bilinear in two such pairs, so basis pairs suffice.
    let pair = |k: usize| -> (Vector, Vector) {
        if k < n {
            let a = ea(k);
            let next = id(&sp.target(&a));
            (a, next)
        } else {
            let a = zero_vec(n);
            let next = sp.arrow(&zero_vec(n0), &basis_vec(n1, k - n));
            (a, next)
        }
    };
    report.push(Check::over(BRACKET_COMPOSITION, index_tuples(&[n + n1, n + n1]), |t| {
        let ((a, a2), (b, b2)) = (pair(t[0]), pair(t[1]));
        let (Some(ac), Some(bc)) = (sp.compose(&a, &a2), sp.compose(&b, &b2)) else {
            return false;
        };
        let lhs = l.bracket(&ac, &bc);
        let rhs = sp.compose(&l.bracket(&a, &b), &l.bracket(&a2, &b2));
        rhs.as_ref() == Some(&lhs)
    }));
    report.push(Check::from_bool(
        PHI_FUNCTOR,
        &sp.source_map() * &l.phi1 == &l.phi0 * &sp.source_map()
            && &sp.target_map() * &l.phi1 == &l.phi0 * &sp.target_map()
            && &l.phi1 * &sp.identity_map() == &sp.identity_map() * &l.phi0,
    ));
    report.push(Check::over(PHI_BRACKET, index_tuples(&[n, n]), |t| {
        let (a, b) = (ea(t[0]), ea(t[1]));
        l.phi_arrow(&l.bracket(&a, &b)) == l.bracket(&l.phi_arrow(&a), &l.phi_arrow(&b))
    }));
    report.push(Check::over(J_ARROW, index_tuples(&[n0, n0, n0]), |t| {
        let (x, y, z) = (e0(t[0]), e0(t[1]), e0(t[2]));
        sp.target(&l.jacobiator_arrow(&x, &y, &z)) == l.jacobiator_expected_target(&x, &y, &z)
    }));
    report.push(Check::over(J_SKEW, index_tuples(&[n0, n0, n0]), |t| {
        let j = l.jacobiator.fiber(t);
        neg(j) == l.jacobiator.fiber(&[t[1], t[0], t[2]]) && neg(j) == l.jacobiator.fiber(&[t[0], t[2], t[1]])
    }));
    report.push(Check::over(J_EQUIVARIANT, index_tuples(&[n0, n0, n0]), |t| {
        let (x, y, z) = (e0(t[0]), e0(t[1]), e0(t[2]));
        l.jacobiator_arrow(&l.phi_obj(&x), &l.phi_obj(&y), &l.phi_obj(&z))
            == l.phi_arrow(&l.jacobiator_arrow(&x, &y, &z))
    }));
    report.push(Check::over(J_NATURAL, index_tuples(&[3, n0, n0, n1]), |t| {
        jacobiator_natural_at(l, t[0], &e0(t[1]), &e0(t[2]), &basis_vec(n1, t[3]))
    }));
    report.push(Check::over(HOM_JACOBIATOR_IDENTITY, index_tuples(&[n0, n0, n0, n0]), |t| {
        let (w, x, y, z) = (e0(t[0]), e0(t[1]), e0(t[2]), e0(t[3]));
        hom_jacobiator_identity_holds(l, &w, &x, &y, &z)
    }));
    report
}

/// Naturality of `J` in argument `pos` along the arrow `(0, m): 0 -> d m`,
/// the other two arguments being the objects `a`, `b` in order.
///
/// Identity arrows are handled by `BRACKET_IDENTITIES`, and the square is
/// linear in the arrow, so these arrows suffice.
fn jacobiator_natural_at(l: &HomLie2Data, pos: usize, a: &[Rational], b: &[Rational], m: &[Rational]) -> bool {
    let sp = &l.space;
    let n0 = sp.object_dim();
    let xi = sp.arrow(&zero_vec(n0), m);
    let id = |x: &[Rational]| sp.identity_arrow(x);
    let zero = zero_vec(n0);
    let dm = sp.target(&xi);
    // Arrow arguments and their source/target objects.
    let (args, src, tgt): ([Vector; 3], [Vector; 3], [Vector; 3]) = match pos {
        0 => (
            [xi.clone(), id(a), id(b)],
            [zero.clone(), a.to_vec(), b.to_vec()],
            [dm.clone(), a.to_vec(), b.to_vec()],
        ),
        1 => (
            [id(a), xi.clone(), id(b)],
            [a.to_vec(), zero.clone(), b.to_vec()],
            [a.to_vec(), dm.clone(), b.to_vec()],
        ),
        _ => (
            [id(a), id(b), xi.clone()],
            [a.to_vec(), b.to_vec(), zero.clone()],
            [a.to_vec(), b.to_vec(), dm.clone()],
        ),
    };
    let [p, q, r] = &args;
    let source_functor = l.bracket(&l.bracket(p, q), &l.phi_arrow(r));
    let target_functor = add_vec(
        &l.bracket(&l.phi_arrow(p), &l.bracket(q, r)),
        &l.bracket(&l.bracket(p, r), &l.phi_arrow(q)),
    );
    let j_src = l.jacobiator_arrow(&src[0], &src[1], &src[2]);
    let j_tgt = l.jacobiator_arrow(&tgt[0], &tgt[1], &tgt[2]);
    let lhs = sp.compose(&source_functor, &j_tgt);
    let rhs = sp.compose(&j_src, &target_functor);
    lhs.is_some() && lhs == rhs
}

/// Composes `stages` vertically, padding each stage with the identity on
/// the part of the previous target it does not start from.
fn compose_padded(sp: &TwoVectorSpace, stages: &[Vector]) -> Option<Vector> {
    let mut acc = stages[0].clone();
    for s in &stages[1..] {
        let pad = sub_vec(&sp.target(&acc), &sp.source(s));
        let stage = add_vec(s, &sp.identity_arrow(&pad));
        acc = sp.compose(&acc, &stage)?;
    }
    Some(acc)
}

fn hom_jacobiator_identity_holds(l: &HomLie2Data, w: &[Rational], x: &[Rational], y: &[Rational], z: &[Rational]) -> bool {
    let sp = &l.space;
    let br = |a: &[Rational], b: &[Rational]| l.object_bracket(a, b);
    let p = |a: &[Rational]| l.phi_obj(a);
    let pp = |a: &[Rational]| l.phi_obj(&l.phi_obj(a));
    let j = |a: &[Rational], b: &[Rational], c: &[Rational]| l.jacobiator_arrow(a, b, c);
    let id = |a: &[Rational]| sp.identity_arrow(a);

    let lhs = compose_padded(
        sp,
        &[
            j(&br(w, x), &p(y), &p(z)),
            l.bracket(&j(w, x, z), &id(&pp(y))),
            add_vec(&j(&p(w), &br(x, z), &p(y)), &j(&br(w, z), &p(x), &p(y))),
        ],
    );
    let rhs = compose_padded(
        sp,
        &[
            l.bracket(&j(w, x, y), &id(&pp(z))),
            add_vec(&j(&p(w), &br(x, y), &p(z)), &j(&br(w, y), &p(x), &p(z))),
            add_vec(&l.bracket(&id(&pp(w)), &j(x, y, z)), &l.bracket(&j(w, y, z), &id(&pp(x)))),
            j(&p(w), &br(y, z), &p(x)),
        ],
    );
    lhs.is_some() && lhs == rhs
}

/// `T(V)`: `[(x,m),(y,n)] = (l2(x,y), l2(x,n) + l2(m,y) + l2(dm,n))`,
/// `Phi = (phi0, phi0 ⊕ phi1)`, `J_{x,y,z} = ([[x,y], phi0 z], l3(x,y,z))`.
pub fn functor_t(v: &TwoTermHL) -> HomLie2Data {
    let (n0, n1) = (v.dim0(), v.dim1());
    let space = TwoVectorSpace::from_complex(v.d.clone());
    let n = n0 + n1;
    let mut bracket = Tensor::zeros(&[n, n, n]);
    for t in index_tuples(&[n, n]) {
        let (a, b) = (basis_vec(n, t[0]), basis_vec(n, t[1]));
        let (x, m) = (&a[..n0], &a[n0..]);
        let (y, k) = (&b[..n0], &b[n0..]);
        let obj = v.l2(x, y);
        let part = add_vec(
            &add_vec(&v.l2_xm(x, k), &v.l2_mx(m, y)),
            &v.l2_xm(&v.diff(m), k),
        );
        bracket.set_fiber(&t, &space.arrow(&obj, &part));
    }
    HomLie2Data {
        phi0: v.phi0.clone(),
        phi1: v.phi0.direct_sum(&v.phi1),
        jacobiator: v.l3.clone(),
        bracket,
        space,
    }
}

/// `S(L)`: `V1 = ker s`, `d = t|ker s`, `l2(x, m) = [i x, m]`,
/// `l3 = J - i s J`, `phi1 = Phi1|ker s`.
pub fn functor_s(l: &HomLie2Data) -> TwoTermHL {
    let sp = &l.space;
    let (n0, n1) = (sp.object_dim(), sp.arrow_part_dim());
    let kernel_arrow = |j: usize| sp.arrow(&zero_vec(n0), &basis_vec(n1, j));
    let mut l2_00 = Tensor::zeros(&[n0, n0, n0]);
    for t in index_tuples(&[n0, n0]) {
        l2_00.set_fiber(&t, &l.object_bracket(&basis_vec(n0, t[0]), &basis_vec(n0, t[1])));
    }
    let mut l2_01 = Tensor::zeros(&[n0, n1, n1]);
    for t in index_tuples(&[n0, n1]) {
        let a = l.bracket(&sp.identity_arrow(&basis_vec(n0, t[0])), &kernel_arrow(t[1]));
        l2_01.set_fiber(&t, sp.arrow_part(&a));
    }
    let phi1 = Matrix::from_fn(n1, n1, |r, c| l.phi1[(n0 + r, n0 + c)].clone());
    TwoTermHL {
        d: sp.differential().clone(),
        l2_00,
        l2_01,
        l3: l.jacobiator.clone(),
        phi0: l.phi0.clone(),
        phi1,
    }
}

pub const BETA_IDENTITY: &str = "beta: S(T(V)) = V";
pub const ALPHA_FUNCTOR: &str = "alpha is a linear functor";
pub const ALPHA_INVERTIBLE: &str = "alpha is invertible";
pub const ALPHA_BRACKET: &str = "alpha preserves bracket";
pub const ALPHA_PHI: &str = "alpha commutes with Phi";
pub const ALPHA_JACOBIATOR: &str = "alpha preserves Jacobiator";

/// `beta_V = Id` as an exact equality of every field.
pub fn beta_check(v: &TwoTermHL) -> Check {
    Check::from_bool(BETA_IDENTITY, functor_s(&functor_t(v)) == *v)
}

/// `alpha_L: T(S(L)) -> L`, `(alpha_L)_0 = id`, `(alpha_L)_1(x, m) = i(x) + m`.
pub fn alpha_check(l: &HomLie2Data) -> Report {
    let sp = &l.space;
    let lp = functor_t(&functor_s(l));
    let spp = &lp.space;
    let (n0, n1, n) = (sp.object_dim(), sp.arrow_part_dim(), sp.morphism_dim());
    let alpha0 = Matrix::identity(n0);
    let mut cols: Vec<Vector> = (0..n0).map(|i| sp.identity_arrow(&basis_vec(n0, i))).collect();
    cols.extend((0..n1).map(|j| sp.arrow(&zero_vec(n0), &basis_vec(n1, j))));
    let alpha1 = Matrix::from_columns(n, &cols);

    let mut report = Report::new("alpha: T(S(L)) -> L");
    report.push(Check::from_bool(
        ALPHA_FUNCTOR,
        &sp.source_map() * &alpha1 == &alpha0 * &spp.source_map()
            && &sp.target_map() * &alpha1 == &alpha0 * &spp.target_map()
            && &alpha1 * &spp.identity_map() == &sp.identity_map() * &alpha0,
    ));
    report.push(Check::from_bool(ALPHA_INVERTIBLE, alpha1.is_invertible()));
    report.push(Check::over(ALPHA_BRACKET, index_tuples(&[n, n]), |t| {
        let (a, b) = (basis_vec(n, t[0]), basis_vec(n, t[1]));
        alpha1.mul_vec(&lp.bracket(&a, &b)) == l.bracket(&alpha1.mul_vec(&a), &alpha1.mul_vec(&b))
    }));
    report.push(Check::from_bool(
        ALPHA_PHI,
        &alpha1 * &lp.phi1 == &l.phi1 * &alpha1 && lp.phi0 == l.phi0,
    ));
    report.push(Check::over(ALPHA_JACOBIATOR, index_tuples(&[n0, n0, n0]), |t| {
        let (x, y, z) = (basis_vec(n0, t[0]), basis_vec(n0, t[1]), basis_vec(n0, t[2]));
        alpha1.mul_vec(&lp.jacobiator_arrow(&x, &y, &z)) == l.jacobiator_arrow(&x, &y, &z)
    }));
    report
}

/// `beta` for `V` and `alpha` for `T(V)`.
pub fn roundtrip_check(v: &TwoTermHL) -> Report {
    let mut report = Report::new("T/S round trip");
    report.push(beta_check(v));
    report.absorb("", alpha_check(&functor_t(v)));
    report
}

/// Scales `l3` by `c`; used to build non-examples.
pub fn with_scaled_l3(v: &TwoTermHL, c: &Rational) -> TwoTermHL {
    let mut out = v.clone();
    let data = out.l3.entries().iter().map(|x| x * c).collect();
    out.l3 = Tensor::from_row_major(v.l3.shape(), data).expect("same shape");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{check_representation, coboundary, Cochain};
    use crate::constructions::{sl2_example, string_from_semisimple};
    use crate::linalg::int;

    fn strict_pair() -> TwoTermHL {
        TwoTermHL::from_hom_lie_pair(&sl2_example())
    }

    fn abelian(n0: usize, n1: usize) -> TwoTermHL {
        TwoTermHL::new(
            Matrix::zeros(n0, n1),
            Tensor::zeros(&[n0, n0, n0]),
            Tensor::zeros(&[n0, n1, n1]),
            Tensor::zeros(&[n0, n0, n0, n1]),
            Matrix::identity(n0),
            Matrix::identity(n1),
        )
        .unwrap()
    }

    #[test]
    fn strict_pair_is_valid() {
        let r = strict_pair().check();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.checks.len(), 13);
    }

    #[test]
    fn string_sl2_is_valid_and_skeletal() {
        let v = string_from_semisimple(&sl2_example()).unwrap();
        assert!(v.is_skeletal());
        let r = v.check();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn shape_errors() {
        let v = abelian(2, 1);
        assert!(TwoTermHL::new(v.d.clone(), v.l2_00.clone(), Tensor::zeros(&[2, 2, 2]), v.l3, v.phi0, v.phi1).is_err());
    }

    #[test]
    fn skeletal_l3_is_a_cocycle_for_rho_phi1() {
        let v = string_from_semisimple(&sl2_example()).unwrap();
        let rho = v.rho_phi1();
        assert!(check_representation(&rho).all_passed());
        let theta = Cochain::from_tensor(v.l3.clone()).unwrap();
        assert!(coboundary(&theta, &rho).unwrap().is_zero());
    }

    #[test]
    fn identity_and_composition_of_morphisms() {
        let v = strict_pair();
        let id = HLMorphism::identity(v.clone());
        assert!(id.check().all_passed());
        let c = id.then(&id).unwrap();
        assert_eq!(c, id);
    }

    #[test]
    fn f2_violating_phi_compatibility_fails() {
        let v = strict_pair();
        let n = v.dim0();
        let mut f2 = Tensor::zeros(&[n, n, n]);
        *f2.get_mut(&[0, 1, 0]) = int(1);
        *f2.get_mut(&[1, 0, 0]) = int(-1);
        let m = HLMorphism::new(v.clone(), v, Matrix::identity(n), Matrix::identity(n), f2).unwrap();
        let r = m.check();
        assert!(!r.passed(MORPH_F2_PHI), "{r}");
    }

    #[test]
    fn composition_rejects_mismatched_endpoints() {
        let a = HLMorphism::identity(strict_pair());
        let b = HLMorphism::identity(abelian(3, 3));
        assert!(a.then(&b).is_err());
    }

    #[test]
    fn t_of_valid_is_valid_and_roundtrips() {
        for v in [strict_pair(), abelian(2, 1), string_from_semisimple(&sl2_example()).unwrap()] {
            let l = functor_t(&v);
            let r = l.check();
            assert!(r.all_passed(), "{r}");
            let rt = roundtrip_check(&v);
            assert!(rt.all_passed(), "{rt}");
        }
    }

    #[test]
    fn string_jacobiator_value() {
        let l = functor_t(&string_from_semisimple(&sl2_example()).unwrap());
        assert_eq!(l.jacobiator.fiber(&[0, 1, 2]), &[int(8)]);
    }

    #[test]
    fn zeroed_jacobiator_breaks_nonskeletal_data() {
        // d = Id over a skew bracket whose Jacobiator is nonzero; l3 carries it.
        let mut c = Tensor::zeros(&[3, 3, 3]);
        for (i, j, k, s) in [(0, 1, 2, 1), (1, 0, 2, -1), (1, 2, 1, 1), (2, 1, 1, -1)] {
            *c.get_mut(&[i, j, k]) = int(s);
        }
        let g = HomLieAlgebra::new(c.clone(), Matrix::identity(3)).unwrap();
        assert!(!g.check().passed(crate::homlie::HOM_JACOBI));
        let mut l3 = Tensor::zeros(&[3, 3, 3, 3]);
        for t in index_tuples(&[3, 3, 3]) {
            let j = g.hom_jacobiator(&g.basis(t[0]), &g.basis(t[1]), &g.basis(t[2]));
            l3.set_fiber(&t, &j);
        }
        let id = Matrix::identity(3);
        let v = TwoTermHL::new(id.clone(), c.clone(), c, l3, id.clone(), id).unwrap();
        assert!(v.check().all_passed(), "{}", v.check());
        assert!(functor_t(&v).check().all_passed());
        let broken = with_scaled_l3(&v, &int(0));
        let r = broken.check();
        assert!(!r.passed(COND_H));
        assert!(r.get(COND_H).unwrap().witness.is_some());
        assert!(!functor_t(&broken).check().passed(J_ARROW));
    }

    #[test]
    fn abelian_jacobiator_is_identity() {
        let l = functor_t(&abelian(2, 2));
        let x = basis_vec(2, 0);
        let j = l.jacobiator_arrow(&x, &x, &x);
        assert_eq!(l.space.source(&j), l.space.target(&j));
        assert!(l.jacobiator.is_zero());
    }

    #[test]
    fn s_of_strict_pair_recovers_it() {
        let v = strict_pair();
        assert_eq!(functor_s(&functor_t(&v)), v);
    }
}
