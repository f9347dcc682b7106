//! TOML model files.
//!
//! Every file carries a `kind` tag. Rationals are written `p/q` or as
//! integers inside whitespace-separated row strings. A matrix is an array
//! of rows; a tensor with inputs `[a, b, ..]` and output dimension `n` is
//! an array of `a * b * ..` rows of length `n`, one per input index in
//! row-major order. The grammar is given in the README.

use std::fmt;
use std::path::Path;

use homlie_core::cohomology::Representation;
use homlie_core::constructions::{CrossedModule, HomLeftSymmetric, QuadraticHomLie, SymplecticHomLie};
use homlie_core::hl2::{HLMorphism, TwoTermHL};
use homlie_core::homlie::HomLieAlgebra;
use homlie_core::{Matrix, Rational, Tensor};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("shape mismatch in `{field}`: {message}")]
    Shape { field: String, message: String },
    #[error("cannot serialize: {0}")]
    Serialize(String),
}

fn shape(field: &str, message: impl Into<String>) -> FormatError {
    FormatError::Shape {
        field: field.into(),
        message: message.into(),
    }
}

/// A whitespace-separated list of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row(pub Vec<Rational>);

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl Serialize for Row {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn parse_row(text: &str) -> Result<Row, String> {
    text.split_whitespace()
        .map(|tok| tok.parse::<Rational>().map_err(|e| format!("invalid rational `{tok}`: {e}")))
        .collect::<Result<_, _>>()
        .map(Row)
}

impl<'de> Deserialize<'de> for Row {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RowVisitor;
        impl Visitor<'_> for RowVisitor {
            type Value = Row;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a string of rationals such as \"1 -2 3/4\"")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Row, E> {
                parse_row(v).map_err(E::custom)
            }
        }
        d.deserialize_str(RowVisitor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    HomLie,
    Representation,
    TwoTermHl,
    Quadratic,
    CrossedModule,
    LeftSymmetric,
    Symplectic,
    HlMorphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFields {
    pub dim: usize,
    pub bracket: Vec<Row>,
    pub phi: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoTermFields {
    pub dim0: usize,
    pub dim1: usize,
    pub d: Vec<Row>,
    pub l2_00: Vec<Row>,
    pub l2_01: Vec<Row>,
    pub l3: Vec<Row>,
    pub phi0: Vec<Row>,
    pub phi1: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomLieFile {
    kind: Kind,
    dim: usize,
    bracket: Vec<Row>,
    phi: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    kind: Kind,
    module_dim: usize,
    twist: Vec<Row>,
    action: Vec<Vec<Row>>,
    algebra: AlgebraFields,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TwoTermFile {
    kind: Kind,
    dim0: usize,
    dim1: usize,
    d: Vec<Row>,
    l2_00: Vec<Row>,
    l2_01: Vec<Row>,
    l3: Vec<Row>,
    phi0: Vec<Row>,
    phi1: Vec<Row>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadraticFile {
    kind: Kind,
    form: Vec<Row>,
    algebra: AlgebraFields,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossedModuleFile {
    kind: Kind,
    dt: Vec<Row>,
    action: Vec<Vec<Row>>,
    h: AlgebraFields,
    g: AlgebraFields,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LeftSymmetricFile {
    kind: Kind,
    dim: usize,
    star: Vec<Row>,
    phi: Vec<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<Vec<Row>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SymplecticFile {
    kind: Kind,
    omega: Vec<Row>,
    algebra: AlgebraFields,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismFile {
    kind: Kind,
    f0: Vec<Row>,
    f1: Vec<Row>,
    f2: Vec<Row>,
    source: TwoTermFields,
    target: TwoTermFields,
}

#[derive(Deserialize)]
struct KindProbe {
    kind: Kind,
}

/// A parsed model file. Shapes are checked; axioms are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Model {
    HomLie(HomLieAlgebra),
    Representation(Representation),
    TwoTermHl(TwoTermHL),
    Quadratic(QuadraticHomLie),
    CrossedModule(CrossedModule),
    LeftSymmetric { algebra: HomLeftSymmetric, d: Option<Matrix> },
    Symplectic(SymplecticHomLie),
    HlMorphism(HLMorphism),
}

impl Model {
    pub fn kind(&self) -> Kind {
        match self {
            Model::HomLie(_) => Kind::HomLie,
            Model::Representation(_) => Kind::Representation,
            Model::TwoTermHl(_) => Kind::TwoTermHl,
            Model::Quadratic(_) => Kind::Quadratic,
            Model::CrossedModule(_) => Kind::CrossedModule,
            Model::LeftSymmetric { .. } => Kind::LeftSymmetric,
            Model::Symplectic(_) => Kind::Symplectic,
            Model::HlMorphism(_) => Kind::HlMorphism,
        }
    }
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::HomLie => "hom_lie",
            Kind::Representation => "representation",
            Kind::TwoTermHl => "two_term_hl",
            Kind::Quadratic => "quadratic",
            Kind::CrossedModule => "crossed_module",
            Kind::LeftSymmetric => "left_symmetric",
            Kind::Symplectic => "symplectic",
            Kind::HlMorphism => "hl_morphism",
        }
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn syntax(text: &str, e: toml::de::Error) -> FormatError {
    let (line, column) = e.span().map_or((1, 1), |s| line_col(text, s.start));
    FormatError::Syntax {
        line,
        column,
        message: e.message().trim().to_string(),
    }
}

fn from_toml<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, FormatError> {
    toml::from_str(text).map_err(|e| syntax(text, e))
}

fn matrix(field: &str, rows: &[Row], r: usize, c: usize) -> Result<Matrix, FormatError> {
    if rows.len() != r {
        return Err(shape(field, format!("expected {r} rows, found {}", rows.len())));
    }
    if let Some(i) = rows.iter().position(|row| row.0.len() != c) {
        return Err(shape(field, format!("row {i} has {} entries, expected {c}", rows[i].0.len())));
    }
    Matrix::from_row_major(r, c, rows.iter().flat_map(|row| row.0.iter().cloned()).collect())
        .map_err(|e| shape(field, e.to_string()))
}

fn tensor(field: &str, rows: &[Row], inputs: &[usize], out: usize) -> Result<Tensor, FormatError> {
    let count: usize = inputs.iter().product();
    if rows.len() != count {
        return Err(shape(field, format!("expected {count} rows (one per input index), found {}", rows.len())));
    }
    if let Some(i) = rows.iter().position(|row| row.0.len() != out) {
        return Err(shape(field, format!("row {i} has {} entries, expected {out}", rows[i].0.len())));
    }
    let mut dims = inputs.to_vec();
    dims.push(out);
    Tensor::from_row_major(&dims, rows.iter().flat_map(|row| row.0.iter().cloned()).collect())
        .map_err(|e| shape(field, e.to_string()))
}

fn matrix_rows(m: &Matrix) -> Vec<Row> {
    (0..m.rows()).map(|r| Row(m.row(r).to_vec())).collect()
}

fn tensor_rows(t: &Tensor) -> Vec<Row> {
    let out = t.output_dim();
    if out == 0 {
        return vec![Row(Vec::new()); t.input_dims().iter().product()];
    }
    t.entries().chunks(out).map(|c| Row(c.to_vec())).collect()
}

fn core(field: &str) -> impl Fn(homlie_core::Error) -> FormatError + '_ {
    move |e| shape(field, e.to_string())
}

fn algebra(prefix: &str, f: &AlgebraFields) -> Result<HomLieAlgebra, FormatError> {
    let n = f.dim;
    let bracket = tensor(&format!("{prefix}bracket"), &f.bracket, &[n, n], n)?;
    let phi = matrix(&format!("{prefix}phi"), &f.phi, n, n)?;
    HomLieAlgebra::new(bracket, phi).map_err(core(prefix))
}

fn algebra_fields(g: &HomLieAlgebra) -> AlgebraFields {
    AlgebraFields {
        dim: g.dim(),
        bracket: tensor_rows(g.bracket_tensor()),
        phi: matrix_rows(g.phi()),
    }
}

fn two_term(prefix: &str, f: &TwoTermFields) -> Result<TwoTermHL, FormatError> {
    let (n0, n1) = (f.dim0, f.dim1);
    let field = |name: &str| format!("{prefix}{name}");
    TwoTermHL::new(
        matrix(&field("d"), &f.d, n0, n1)?,
        tensor(&field("l2_00"), &f.l2_00, &[n0, n0], n0)?,
        tensor(&field("l2_01"), &f.l2_01, &[n0, n1], n1)?,
        tensor(&field("l3"), &f.l3, &[n0, n0, n0], n1)?,
        matrix(&field("phi0"), &f.phi0, n0, n0)?,
        matrix(&field("phi1"), &f.phi1, n1, n1)?,
    )
    .map_err(core(prefix))
}

fn two_term_fields(v: &TwoTermHL) -> TwoTermFields {
    TwoTermFields {
        dim0: v.dim0(),
        dim1: v.dim1(),
        d: matrix_rows(&v.d),
        l2_00: tensor_rows(&v.l2_00),
        l2_01: tensor_rows(&v.l2_01),
        l3: tensor_rows(&v.l3),
        phi0: matrix_rows(&v.phi0),
        phi1: matrix_rows(&v.phi1),
    }
}

fn actions(field: &str, mats: &[Vec<Row>], count: usize, m: usize) -> Result<Vec<Matrix>, FormatError> {
    if mats.len() != count {
        return Err(shape(field, format!("expected {count} action matrices, found {}", mats.len())));
    }
    mats.iter()
        .enumerate()
        .map(|(i, rows)| matrix(&format!("{field}[{i}]"), rows, m, m))
        .collect()
}

/// Parses model text. Syntax and schema errors carry a line and column.
pub fn parse_model(text: &str) -> Result<Model, FormatError> {
    let KindProbe { kind } = from_toml(text)?;
    Ok(match kind {
        Kind::HomLie => {
            let f: HomLieFile = from_toml(text)?;
            Model::HomLie(algebra(
                "",
                &AlgebraFields {
                    dim: f.dim,
                    bracket: f.bracket,
                    phi: f.phi,
                },
            )?)
        }
        Kind::Representation => {
            let f: RepresentationFile = from_toml(text)?;
            let g = algebra("algebra.", &f.algebra)?;
            let m = f.module_dim;
            let twist = matrix("twist", &f.twist, m, m)?;
            let action = actions("action", &f.action, g.dim(), m)?;
            Model::Representation(Representation::new(g, twist, action).map_err(core("action"))?)
        }
        Kind::TwoTermHl => {
            let f: TwoTermFile = from_toml(text)?;
            Model::TwoTermHl(two_term(
                "",
                &TwoTermFields {
                    dim0: f.dim0,
                    dim1: f.dim1,
                    d: f.d,
                    l2_00: f.l2_00,
                    l2_01: f.l2_01,
                    l3: f.l3,
                    phi0: f.phi0,
                    phi1: f.phi1,
                },
            )?)
        }
        Kind::Quadratic => {
            let f: QuadraticFile = from_toml(text)?;
            let g = algebra("algebra.", &f.algebra)?;
            let n = g.dim();
            let form = matrix("form", &f.form, n, n)?;
            Model::Quadratic(QuadraticHomLie::new(g, form).map_err(core("form"))?)
        }
        Kind::CrossedModule => {
            let f: CrossedModuleFile = from_toml(text)?;
            let h = algebra("h.", &f.h)?;
            let g = algebra("g.", &f.g)?;
            let dt = matrix("dt", &f.dt, g.dim(), h.dim())?;
            let action = actions("action", &f.action, g.dim(), h.dim())?;
            let varphi = Representation::new(g.clone(), h.phi().clone(), action).map_err(core("action"))?;
            Model::CrossedModule(CrossedModule::new(h, g, dt, varphi).map_err(core("dt"))?)
        }
        Kind::LeftSymmetric => {
            let f: LeftSymmetricFile = from_toml(text)?;
            let n = f.dim;
            let star = tensor("star", &f.star, &[n, n], n)?;
            let phi = matrix("phi", &f.phi, n, n)?;
            let d = f.d.as_ref().map(|rows| matrix("d", rows, n, n)).transpose()?;
            Model::LeftSymmetric {
                algebra: HomLeftSymmetric::new(star, phi).map_err(core("star"))?,
                d,
            }
        }
        Kind::Symplectic => {
            let f: SymplecticFile = from_toml(text)?;
            let g = algebra("algebra.", &f.algebra)?;
            let n = g.dim();
            let omega = matrix("omega", &f.omega, n, n)?;
            Model::Symplectic(SymplecticHomLie::new(g, omega).map_err(core("omega"))?)
        }
        Kind::HlMorphism => {
            let f: MorphismFile = from_toml(text)?;
            let v = two_term("source.", &f.source)?;
            let w = two_term("target.", &f.target)?;
            let f0 = matrix("f0", &f.f0, w.dim0(), v.dim0())?;
            let f1 = matrix("f1", &f.f1, w.dim1(), v.dim1())?;
            let f2 = tensor("f2", &f.f2, &[v.dim0(), v.dim0()], w.dim1())?;
            Model::HlMorphism(HLMorphism::new(v, w, f0, f1, f2).map_err(core("f2"))?)
        }
    })
}

fn to_toml<T: Serialize>(value: &T) -> Result<String, FormatError> {
    toml::to_string_pretty(value).map_err(|e| FormatError::Serialize(e.to_string()))
}

pub fn serialize_model(model: &Model) -> Result<String, FormatError> {
    let kind = model.kind();
    match model {
        Model::HomLie(g) => {
            let a = algebra_fields(g);
            to_toml(&HomLieFile {
                kind,
                dim: a.dim,
                bracket: a.bracket,
                phi: a.phi,
            })
        }
        Model::Representation(r) => to_toml(&RepresentationFile {
            kind,
            module_dim: r.module_dim(),
            twist: matrix_rows(r.twist()),
            action: r.action().iter().map(matrix_rows).collect(),
            algebra: algebra_fields(r.algebra()),
        }),
        Model::TwoTermHl(v) => {
            let t = two_term_fields(v);
            to_toml(&TwoTermFile {
                kind,
                dim0: t.dim0,
                dim1: t.dim1,
                d: t.d,
                l2_00: t.l2_00,
                l2_01: t.l2_01,
                l3: t.l3,
                phi0: t.phi0,
                phi1: t.phi1,
            })
        }
        Model::Quadratic(q) => to_toml(&QuadraticFile {
            kind,
            form: matrix_rows(&q.form),
            algebra: algebra_fields(&q.algebra),
        }),
        Model::CrossedModule(cm) => to_toml(&CrossedModuleFile {
            kind,
            dt: matrix_rows(&cm.dt),
            action: cm.varphi.action().iter().map(matrix_rows).collect(),
            h: algebra_fields(&cm.h),
            g: algebra_fields(&cm.g),
        }),
        Model::LeftSymmetric { algebra, d } => to_toml(&LeftSymmetricFile {
            kind,
            dim: algebra.dim(),
            star: tensor_rows(&algebra.star),
            phi: matrix_rows(&algebra.phi),
            d: d.as_ref().map(matrix_rows),
        }),
        Model::Symplectic(s) => to_toml(&SymplecticFile {
            kind,
            omega: matrix_rows(&s.omega),
            algebra: algebra_fields(&s.algebra),
        }),
        Model::HlMorphism(f) => to_toml(&MorphismFile {
            kind,
            f0: matrix_rows(&f.f0),
            f1: matrix_rows(&f.f1),
            f2: tensor_rows(&f.f2),
            source: two_term_fields(&f.source),
            target: two_term_fields(&f.target),
        }),
    }
}

pub fn read_model(path: &Path) -> Result<Model, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_model(&text)
}

pub fn write_model(path: &Path, model: &Model) -> Result<(), FormatError> {
    let text = serialize_model(model)?;
    std::fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use homlie_core::constructions::sl2_example;

    #[test]
    fn sl2_round_trips() {
        let m = Model::HomLie(sl2_example());
        let text = serialize_model(&m).unwrap();
        assert_eq!(parse_model(&text).unwrap(), m);
    }

    #[test]
    fn zero_denominator_is_a_syntax_error() {
        let text = "kind = \"hom_lie\"\ndim = 1\nbracket = [\"0\"]\nphi = [\"1/0\"]\n";
        match parse_model(text) {
            Err(FormatError::Syntax { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = "kind = \"hom_lie\"\ndim = 1\nbracket = [\"0\"]\nphi = [\"1\"]\ncolour = 3\n";
        match parse_model(text) {
            Err(FormatError::Syntax { line, message, .. }) => {
                assert_eq!(line, 5);
                assert!(message.contains("colour"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn shape_errors_name_the_field() {
        let text = "kind = \"hom_lie\"\ndim = 2\nbracket = [\"0 0\"]\nphi = [\"1 0\", \"0 1\"]\n";
        match parse_model(text) {
            Err(FormatError::Shape { field, .. }) => assert_eq!(field, "bracket"),
            other => panic!("{other:?}"),
        }
    }
}
