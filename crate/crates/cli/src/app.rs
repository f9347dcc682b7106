//! Command-line driver.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use homlie_core::cohomology::{adjoint_representation, cohomology_dims, trivial_representation, CohomologyDims};
use homlie_core::constructions::{
    check_leftsym_differential, check_left_symmetric, check_symplectic, crossed_to_strict, sl2_example,
    skeletal_from_quadratic, strict_from_leftsym, strict_from_symplectic, strict_to_crossed, string_from_semisimple,
};
use homlie_core::hl2::{functor_t, roundtrip_check, TwoTermHL};
use homlie_core::homlie::HomLieAlgebra;
use homlie_core::{Check, Error, Matrix, Report};
use serde::Serialize;

use crate::format::{read_model, write_model, FormatError, Model};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "homlie", version, about = "Check and construct hom-Lie structures over exact rationals")]
struct Cli {
    /// Emit the report as JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify every axiom of the structure in a model file.
    Check { file: PathBuf },
    /// Dimensions of hom-cochains, cocycles, coboundaries and cohomology.
    Cohomology {
        /// A `hom_lie` model file.
        file: PathBuf,
        /// A `representation` file, or `trivial`, or `adjoint`.
        #[arg(long)]
        rep: String,
        #[arg(long)]
        k: usize,
    },
    /// Run a construction and write the result.
    Construct {
        what: Construction,
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// T/S equivalence checks on a `two_term_hl` file.
    Roundtrip { file: PathBuf },
    /// Write a built-in example.
    Builtin {
        name: Builtin,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Construction {
    String,
    Skeletal,
    StrictFromCrossed,
    CrossedFromStrict,
    StrictFromSymplectic,
    StrictFromLeftsym,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Builtin {
    Sl2,
}

#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

/// Everything a command prints.
#[derive(Debug, Serialize)]
struct Document {
    command: &'static str,
    passed: bool,
    reports: Vec<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cohomology: Option<Dims>,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<String>,
}

#[derive(Debug, Serialize)]
struct Dims {
    degree: usize,
    #[serde(flatten)]
    dims: CohomologyDims,
}

impl Document {
    fn new(command: &'static str, reports: Vec<Report>) -> Self {
        let passed = reports.iter().all(Report::all_passed);
        Document {
            command,
            passed,
            reports,
            cohomology: None,
            output: None,
        }
    }

    fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
            s.push('\n');
            return s;
        }
        let mut s = String::new();
        for r in &self.reports {
            s.push_str(&r.to_string());
        }
        if let Some(c) = &self.cohomology {
            let k = c.degree;
            s.push_str(&format!(
                "degree {k}: C^{k} = {}, Z^{k} = {}, B^{k} = {}, H^{k} = {}\n",
                c.dims.cochains, c.dims.cocycles, c.dims.coboundaries, c.dims.cohomology
            ));
        }
        if let Some(out) = &self.output {
            s.push_str(&format!("wrote {out}\n"));
        }
        s.push_str(if self.passed { "result: pass\n" } else { "result: FAIL\n" });
        s
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let mut text = e.render().to_string();
            if e.kind() == clap::error::ErrorKind::InvalidSubcommand {
                text.push('\n');
                text.push_str(&Cli::command().render_help().to_string());
            }
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(doc) => {
            let _ = out.write_all(doc.render(cli.json).as_bytes());
            if doc.passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(command: Command) -> Result<Document, InputError> {
    match command {
        Command::Check { file } => Ok(Document::new("check", vec![check_model(&read_model(&file)?)?])),
        Command::Cohomology { file, rep, k } => cohomology(&file, &rep, k),
        Command::Construct { what, input, out } => construct(what, &input, &out),
        Command::Roundtrip { file } => {
            let v = expect_two_term(read_model(&file)?)?;
            let mut reports = vec![v.check()];
            reports.push(functor_t(&v).check());
            reports.push(roundtrip_check(&v));
            Ok(Document::new("roundtrip", reports))
        }
        Command::Builtin { name: Builtin::Sl2, out } => {
            let g = sl2_example();
            let mut report = g.check();
            report.push(Check::from_bool("phi^2 = Id", g.is_involutive()));
            write_model(&out, &Model::HomLie(g))?;
            let mut doc = Document::new("builtin", vec![report]);
            doc.output = Some(out.display().to_string());
            Ok(doc)
        }
    }
}

/// The full axiom report for any model.
pub fn check_model(model: &Model) -> Result<Report, Error> {
    Ok(match model {
        Model::HomLie(g) => g.check(),
        Model::Representation(r) => {
            let mut report = Report::new("representation");
            report.absorb("algebra: ", r.algebra().check());
            report.absorb("", r.check());
            report
        }
        Model::TwoTermHl(v) => v.check(),
        Model::Quadratic(q) => q.check(),
        Model::CrossedModule(cm) => cm.check(),
        Model::LeftSymmetric { algebra, d } => {
            let mut report = check_left_symmetric(algebra).report;
            if let Some(d) = d {
                report.absorb("d: ", check_leftsym_differential(algebra, d)?);
            }
            report
        }
        Model::Symplectic(s) => check_symplectic(s)?,
        Model::HlMorphism(f) => {
            let mut report = Report::new("HL-infinity morphism");
            report.absorb("source: ", f.source.check());
            report.absorb("target: ", f.target.check());
            report.absorb("", f.check());
            report
        }
    })
}

fn expect_two_term(model: Model) -> Result<TwoTermHL, InputError> {
    match model {
        Model::TwoTermHl(v) => Ok(v),
        other => Err(wrong_kind("two_term_hl", &other)),
    }
}

fn wrong_kind(expected: &str, found: &Model) -> InputError {
    InputError::Usage(format!("expected a `{expected}` file, found `{}`", found.kind().name()))
}

fn expect_algebra(model: Model) -> Result<HomLieAlgebra, InputError> {
    match model {
        Model::HomLie(g) => Ok(g),
        other => Err(wrong_kind("hom_lie", &other)),
    }
}

fn cohomology(file: &Path, rep: &str, k: usize) -> Result<Document, InputError> {
    let g = expect_algebra(read_model(file)?)?;
    let r = match rep {
        "trivial" => trivial_representation(&g),
        "adjoint" => adjoint_representation(&g),
        path => match read_model(Path::new(path))? {
            Model::Representation(r) if r.algebra() == &g => r,
            Model::Representation(_) => {
                return Err(InputError::Usage("the representation is over a different algebra".into()))
            }
            other => return Err(wrong_kind("representation", &other)),
        },
    };
    if k == 0 {
        return Err(InputError::Usage("--k must be at least 1".into()));
    }
    let mut report = Report::new(format!("cohomology in degree {k}"));
    report.absorb("algebra: ", g.check());
    report.absorb("", r.check());
    if !report.all_passed() {
        return Ok(Document::new("cohomology", vec![report]));
    }
    let dims = cohomology_dims(&r, k)?;
    report.push(Check::from_bool("coboundaries are cocycles", dims.coboundaries_closed));
    let mut doc = Document::new("cohomology", vec![report]);
    doc.cohomology = Some(Dims { degree: k, dims });
    Ok(doc)
}

/// Validates the input first: an input failing its axioms yields its
/// report and no output file.
fn construct(what: Construction, input: &Path, out: &Path) -> Result<Document, InputError> {
    let model = read_model(input)?;
    let input_report = check_model(&model)?;
    if !input_report.all_passed() {
        return Ok(Document::new("construct", vec![input_report]));
    }
    let (output, mut reports) = match (what, model) {
        (Construction::String, Model::HomLie(g)) => {
            let v = string_from_semisimple(&g)?;
            let r = v.check();
            (Model::TwoTermHl(v), vec![r])
        }
        (Construction::Skeletal, Model::Quadratic(q)) => {
            let v = skeletal_from_quadratic(&q)?;
            let r = v.check();
            (Model::TwoTermHl(v), vec![r])
        }
        (Construction::StrictFromCrossed, Model::CrossedModule(cm)) => {
            let v = crossed_to_strict(&cm)?;
            let r = v.check();
            (Model::TwoTermHl(v), vec![r])
        }
        (Construction::CrossedFromStrict, Model::TwoTermHl(v)) => {
            let cm = strict_to_crossed(&v)?;
            let r = cm.check();
            (Model::CrossedModule(cm), vec![r])
        }
        (Construction::StrictFromSymplectic, Model::Symplectic(s)) => {
            let (v, identities) = strict_from_symplectic(&s)?;
            let r = v.check();
            (Model::TwoTermHl(v), vec![r, identities])
        }
        (Construction::StrictFromLeftsym, Model::LeftSymmetric { algebra, d }) => {
            let n = algebra.dim();
            let d = d.unwrap_or_else(|| Matrix::zeros(n, n));
            let v = strict_from_leftsym(&algebra, &d)?;
            let r = v.check();
            (Model::TwoTermHl(v), vec![r])
        }
        (what, other) => {
            let expected = match what {
                Construction::String => "hom_lie",
                Construction::Skeletal => "quadratic",
                Construction::StrictFromCrossed => "crossed_module",
                Construction::CrossedFromStrict => "two_term_hl",
                Construction::StrictFromSymplectic => "symplectic",
                Construction::StrictFromLeftsym => "left_symmetric",
            };
            return Err(wrong_kind(expected, &other));
        }
    };
    write_model(out, &output)?;
    reports.insert(0, input_report);
    let mut doc = Document::new("construct", reports);
    doc.output = Some(out.display().to_string());
    Ok(doc)
}
