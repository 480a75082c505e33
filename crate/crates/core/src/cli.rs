//! The `gdminors` command line: JSON reports on stdout and a fixed exit-code
//! contract (0 ok, 1 disagreement, 2 invalid input, 3 budget exceeded).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cmcheck::{self, HomologyField};
use crate::complex::{self, ComplexReport, Engine, EnumOptions, MinorsProblem};
use crate::error::Error;
use crate::gdmatrix::{GDMatrix, MatrixSpec};
use crate::groebner;
use crate::multiplicity;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "gdminors",
    version,
    about = "Minors of generalized diagonal matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub matrix: MatrixArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug, Default, Clone)]
pub struct MatrixArgs {
    /// Number of rows.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Number of columns.
    #[arg(long, global = true)]
    pub m: Option<usize>,
    /// Lower ladder column heights, e.g. `2,1`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub c: Option<Vec<usize>>,
    /// Upper ladder column depths, right-aligned, e.g. `1,2`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub d: Option<Vec<usize>>,
    /// Lower triangle size, in place of `--c`.
    #[arg(long, global = true)]
    pub t1: Option<usize>,
    /// Upper triangle size, in place of `--d`.
    #[arg(long, global = true)]
    pub t2: Option<usize>,
    /// Matrix description as JSON (`{"n":3,"m":3,"c":[2,1],"d":[2]}`).
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
    /// Minor size.
    #[arg(long, global = true)]
    pub r: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Largest universe for facet enumeration.
    #[arg(long, global = true, default_value_t = complex::DEFAULT_CELL_BUDGET)]
    pub budget_cells: usize,
    /// Largest face count for homology.
    #[arg(long, global = true, default_value_t = cmcheck::DEFAULT_FACE_BUDGET)]
    pub budget_faces: usize,
    /// Largest vertex count for the vertex-decomposability search.
    #[arg(long, global = true, default_value_t = cmcheck::DEFAULT_VERTEX_BUDGET)]
    pub budget_vertices: usize,
    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, env = "GDMINORS_JOBS", default_value_t = 0)]
    pub jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Indented output.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Ladders, cells, corners, blocks and corner triangles.
    Describe,
    /// Facets of the Stanley-Reisner complex.
    Facets {
        #[arg(long, value_enum, default_value_t = EngineChoice::General)]
        method: EngineChoice,
    },
    /// Face counts by dimension.
    Fvector,
    /// Height of the ideal of minors.
    Height {
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Multiplicity, i.e. the number of top-dimensional facets.
    Multiplicity {
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Purity, Cohen-Macaulayness, vertex decomposability or the Gröbner property.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        /// Write the vertex decomposition certificate as JSON.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// `rational` or a prime such as `2`.
        #[arg(long, default_value = "rational", value_parser = parse_field)]
        field: HomologyField,
    },
    /// Runs agreement checks over a range of triangle-ladder instances.
    Sweep {
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(long, default_value_t = 2)]
        max_t: usize,
        /// Any of height, multiplicity, groebner, cm, vd, pure, engines.
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "height,multiplicity"
        )]
        checks: Vec<SweepCheck>,
        /// `triangles` ranges over t1, t2; `all` over every ladder shape.
        #[arg(long, value_enum, default_value_t = Shapes::Triangles)]
        shapes: Shapes,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    General,
    Paths,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Count,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Pure,
    Cm,
    Vd,
    Groebner,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepCheck {
    Height,
    Multiplicity,
    Groebner,
    Cm,
    Vd,
    Pure,
    Engines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Shapes {
    Triangles,
    All,
}

fn parse_field(s: &str) -> Result<HomologyField, String> {
    if s.eq_ignore_ascii_case("rational") || s == "0" {
        return Ok(HomologyField::Rational);
    }
    let p: u64 = s
        .parse()
        .map_err(|_| format!("expected `rational` or a prime, got `{s}`"))?;
    let prime = p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d));
    if prime && p < 1 << 62 {
        Ok(HomologyField::Prime(p))
    } else {
        Err(format!("{p} is not a prime below 2^62"))
    }
}

/// A finished command: the report and its exit code.
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

/// Failure before a report could be produced.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub report: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_budget() {
            EXIT_BUDGET
        } else {
            EXIT_INPUT
        };
        let mut err = json!({ "kind": error_kind(&e), "message": e.to_string() });
        if let Error::InvalidMatrix(v) = &e {
            err["violations"] = v
                .iter()
                .map(|x| json!({ "kind": x.kind(), "message": x.to_string() }))
                .collect();
        }
        Failure {
            code,
            report: json!({ "error": err }),
        }
    }
}

fn input_failure(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        report: json!({ "error": { "kind": "InvalidInput", "message": msg.into() } }),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidMatrix(_) => "InvalidMatrix",
        Error::CellIsZero(_) => "CellIsZero",
        Error::ResultDegenerate(_) => "ResultDegenerate",
        Error::InvalidProblem(_) => "InvalidProblem",
        Error::NotMaximalKStair(_) => "NotMaximalKStair",
        Error::UniverseTooLarge { .. } => "UniverseTooLarge",
        Error::NotAFace(_) => "NotAFace",
        Error::VertexClash => "VertexClash",
        Error::BadIndex(_) => "BadIndex",
        Error::ZeroPolynomial => "ZeroPolynomial",
        Error::BudgetExceeded(_) => "BudgetExceeded",
        Error::NotTriangleShape => "NotTriangleShape",
        Error::RecursionBudget(_) => "RecursionBudget",
        Error::CertificateAbort(_) => "CertificateAbort",
        Error::EngineUnsupported(_) => "EngineUnsupported",
        Error::InvalidParameters(_) => "InvalidParameters",
    }
}

impl MatrixArgs {
    fn matrix_spec(&self) -> Result<MatrixSpec, Failure> {
        let inline = self.n.is_some() || self.m.is_some() || self.c.is_some() || self.d.is_some();
        if let Some(path) = &self.spec {
            if inline || self.t1.is_some() || self.t2.is_some() {
                return Err(input_failure("give either --spec or inline matrix flags"));
            }
            let text = std::fs::read_to_string(path)
                .map_err(|e| input_failure(format!("cannot read {}: {e}", path.display())))?;
            return serde_json::from_str(&text)
                .map_err(|e| input_failure(format!("bad spec file: {e}")));
        }
        let (Some(n), Some(m)) = (self.n, self.m) else {
            return Err(input_failure("--n and --m are required"));
        };
        Ok(MatrixSpec {
            n,
            m,
            c: self.c.clone(),
            d: self.d.clone(),
            t1: self.t1,
            t2: self.t2,
        })
    }

    fn matrix(&self) -> Result<GDMatrix, Failure> {
        Ok(self.matrix_spec()?.build()?)
    }

    fn problem(&self) -> Result<MinorsProblem, Failure> {
        let r = self.r.ok_or_else(|| input_failure("--r is required"))?;
        Ok(MinorsProblem::new(self.matrix()?, r)?)
    }
}

/// Normalized echo of the input.
fn input_json(x: &GDMatrix, r: Option<usize>) -> Value {
    json!({ "n": x.n(), "m": x.m(), "c": x.c(), "d": x.d(), "r": r })
}

fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

/// Parses arguments, runs the command, writes the report and returns the
/// exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let (report, code) = match execute(&cli) {
        Ok(o) => (o.report, o.code),
        Err(f) => (f.report, f.code),
    };
    let text = render(&report, cli.run.pretty);
    match &cli.run.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("cannot write {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => println!("{text}"),
    }
    code
}

pub fn render(report: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(report).expect("values serialize")
    } else {
        report.to_string()
    }
}

/// Runs a parsed command inside a thread pool sized by `--jobs`.
pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.run.jobs)
        .build()
        .map_err(|e| input_failure(format!("cannot start {} workers: {e}", cli.run.jobs)))?;
    pool.install(|| dispatch(cli))
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let a = &cli.matrix;
    let run = &cli.run;
    let opts = |engine| EnumOptions {
        engine,
        cell_budget: run.budget_cells,
        parallel: true,
    };
    match &cli.command {
        Command::Describe => describe(a),
        Command::Facets { method } => facets(
            &a.problem()?,
            *method,
            opts(Engine::General),
            opts(Engine::Paths),
        ),
        Command::Fvector => {
            let p = a.problem()?;
            let f = complex::f_vector(&p, run.budget_cells)?;
            let report = json!({
                "input": input_json(p.matrix(), Some(p.r())),
                "f_vector": f,
                "dimension": f.len() as isize - 1,
            });
            Ok(Outcome {
                report,
                code: EXIT_OK,
            })
        }
        Command::Height { method } => height(a, *method, opts(Engine::General)),
        Command::Multiplicity { method } => multiplicity_cmd(a, *method, opts(Engine::General)),
        Command::Check {
            what,
            certificate,
            field,
        } => {
            let p = a.problem()?;
            if certificate.is_some() && *what != CheckKind::Vd {
                return Err(input_failure("--certificate only applies to `check vd`"));
            }
            match what {
                CheckKind::Pure => check_pure(&p, opts(Engine::General)),
                CheckKind::Cm => check_cm(&p, *field, run, opts(Engine::General)),
                CheckKind::Vd => check_vd(&p, certificate.as_ref(), run, opts(Engine::General)),
                CheckKind::Groebner => {
                    let rep = groebner::verify_groebner(&p)?;
                    let code = if rep.groebner { EXIT_OK } else { EXIT_DISAGREE };
                    let mut report = serde_json::to_value(&rep).expect("report serializes");
                    report["input"] = input_json(p.matrix(), Some(p.r()));
                    Ok(Outcome { report, code })
                }
            }
        }
        Command::Sweep {
            min_n,
            max_n,
            max_r,
            max_t,
            checks,
            shapes,
        } => Ok(sweep(
            &SweepConfig {
                min_n: *min_n,
                max_n: *max_n,
                max_r: *max_r,
                max_t: *max_t,
                shapes: *shapes,
            },
            checks,
            run,
        )),
    }
}

fn describe(a: &MatrixArgs) -> Result<Outcome, Failure> {
    let x = a.matrix()?;
    // Corner triangles and the zero-ideal flag need an r; default to 2.
    let r = a.r.unwrap_or(2).min(x.n().min(x.m())).max(1);
    let p = MinorsProblem::new(x.clone(), r)?;
    let k = r - 1;
    let blocks: Vec<Value> = x
        .unpinched_blocks()
        .iter()
        .map(|b| {
            json!({
                "rows": [b.rows.start(), b.rows.end()],
                "cols": [b.cols.start(), b.cols.end()],
                "c": b.matrix.c(),
                "d": b.matrix.d(),
            })
        })
        .collect();
    let report = json!({
        "input": input_json(&x, Some(r)),
        "cells": x.num_cells(),
        "lower_triangle": x.lower_triangle_size(),
        "upper_triangle": x.upper_triangle_size(),
        "corners_l1": x.corners_l1(),
        "corners_l2": x.corners_l2(),
        "pinches": x.pinches(),
        "unpinched": x.is_unpinched(),
        "blocks": blocks,
        "u": x.triangle_u(k),
        "d_triangle": x.triangle_d(k),
        "ideal_is_zero": p.ideal_is_zero(),
        "matrix": x.to_string(),
    });
    Ok(Outcome {
        report,
        code: EXIT_OK,
    })
}

fn facets(
    p: &MinorsProblem,
    method: EngineChoice,
    general: EnumOptions,
    paths: EnumOptions,
) -> Result<Outcome, Failure> {
    let input = input_json(p.matrix(), Some(p.r()));
    let run =
        |o: &EnumOptions| -> Result<complex::Complex, Failure> { Ok(complex::complex_with(p, o)?) };
    let (k, agree) = match method {
        EngineChoice::General => (run(&general)?, None),
        EngineChoice::Paths => (run(&paths)?, None),
        EngineChoice::Both => {
            let g = run(&general)?;
            let q = run(&paths)?;
            let same = g == q;
            (g, Some(same))
        }
    };
    let rep = ComplexReport::from(&k);
    let code = if agree == Some(false) {
        EXIT_DISAGREE
    } else {
        EXIT_OK
    };
    let report = json!({
        "input": input,
        "method": method_name(method),
        "count": rep.facets.len(),
        "dimension": rep.dimension,
        "pure": rep.pure,
        "facets": rep.facets,
        "agree": agree,
    });
    Ok(Outcome { report, code })
}

fn method_name<T: ValueEnum>(m: T) -> String {
    m.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

/// `(t1, t2)` when both ladders are staircases.
fn triangle_params(x: &GDMatrix) -> Option<(usize, usize)> {
    Some((x.lower_triangle_size()?, x.upper_triangle_size()?))
}

fn height(a: &MatrixArgs, method: Method, opts: EnumOptions) -> Result<Outcome, Failure> {
    let p = a.problem()?;
    let x = p.matrix();
    let formula = match (method, triangle_params(x)) {
        (Method::Count, _) => None,
        (_, Some((t1, t2))) => Some(complex::height_formula_triangles(
            x.n(),
            x.m(),
            t1,
            t2,
            p.r(),
        )),
        (Method::Formula, None) => {
            return Err(input_failure("the height formula needs triangle ladders"))
        }
        (Method::Both, None) => None,
    };
    let count = match method {
        Method::Formula => None,
        _ => {
            let f = complex::facets_with(&p, &opts)?;
            let top = f.iter().map(|s| s.len()).max().unwrap_or(0);
            Some((x.num_cells() - top, f.iter().all(|s| s.len() == top)))
        }
    };
    let agree = match (formula, count) {
        (Some(h), Some((c, _))) => Some(h == c),
        _ => None,
    };
    let report = json!({
        "input": input_json(x, Some(p.r())),
        "method": method_name(method),
        "height": count.map(|c| c.0).or(formula),
        "formula": formula,
        "count": count.map(|c| c.0),
        "pure": count.map(|c| c.1),
        "agree": agree,
    });
    Ok(Outcome {
        report,
        code: if agree == Some(false) {
            EXIT_DISAGREE
        } else {
            EXIT_OK
        },
    })
}

fn multiplicity_cmd(a: &MatrixArgs, method: Method, opts: EnumOptions) -> Result<Outcome, Failure> {
    let p = a.problem()?;
    let x = p.matrix();
    let formula = match (method, triangle_params(x)) {
        (Method::Count, _) => None,
        (_, Some((t1, t2))) => Some(multiplicity::multiplicity_formula(
            x.n(),
            x.m(),
            t1,
            t2,
            p.r(),
        )?),
        (Method::Formula, None) => {
            return Err(input_failure(
                "the multiplicity formula needs triangle ladders",
            ))
        }
        (Method::Both, None) => None,
    };
    let count = match method {
        Method::Formula => None,
        _ => {
            let f = complex::facets_with(&p, &opts)?;
            let top = f.iter().map(|s| s.len()).max().unwrap_or(0);
            let n = f.iter().filter(|s| s.len() == top).count();
            Some(multiplicity::FacetCount {
                top: BigInt::from(n),
                total: f.len(),
                pure: n == f.len(),
            })
        }
    };
    let agree = match (&formula, &count) {
        (Some(v), Some(c)) => Some(*v == c.top),
        _ => None,
    };
    let value = count.as_ref().map(|c| &c.top).or(formula.as_ref());
    let report = json!({
        "input": input_json(x, Some(p.r())),
        "method": method_name(method),
        "multiplicity": value.map(big),
        "formula": formula.as_ref().map(big),
        "count": count.as_ref().map(|c| big(&c.top)),
        "total_facets": count.as_ref().map(|c| c.total),
        "pure": count.as_ref().map(|c| c.pure),
        "agree": agree,
    });
    Ok(Outcome {
        report,
        code: if agree == Some(false) {
            EXIT_DISAGREE
        } else {
            EXIT_OK
        },
    })
}

/// `Some` only where the corner-diagonal criterion is exact: `r = 2` and an
/// unpinched matrix after removing zero lines.
fn exact_purity_prediction(p: &MinorsProblem) -> Option<bool> {
    let pred = complex::is_pure_predicted(p)?;
    (p.ideal_is_zero() || p.matrix().without_zero_lines().matrix.is_unpinched()).then_some(pred)
}

fn check_pure(p: &MinorsProblem, opts: EnumOptions) -> Result<Outcome, Failure> {
    let f = complex::facets_with(p, &opts)?;
    let pure = f.iter().all(|s| s.len() == f[0].len());
    let predicted = complex::is_pure_predicted(p);
    let exact = exact_purity_prediction(p);
    let agree = exact.map(|e| e == pure);
    let report = json!({
        "input": input_json(p.matrix(), Some(p.r())),
        "pure": pure,
        "predicted": predicted,
        "prediction_exact": exact.is_some(),
        "agrees": agree,
    });
    Ok(Outcome {
        report,
        code: if agree == Some(false) {
            EXIT_DISAGREE
        } else {
            EXIT_OK
        },
    })
}

fn check_cm(
    p: &MinorsProblem,
    field: HomologyField,
    run: &RunArgs,
    opts: EnumOptions,
) -> Result<Outcome, Failure> {
    let k = complex::complex_with(p, &opts)?;
    let rep = cmcheck::reisner_report(&k, field, run.budget_faces)?;
    let predicted = cmcheck::is_cm_predicted(p);
    let agrees = predicted == rep.cohen_macaulay;
    let report = json!({
        "input": input_json(p.matrix(), Some(p.r())),
        "predicted": predicted,
        "reisner": rep.cohen_macaulay,
        "agrees": agrees,
        "field": field,
        "faces_checked": rep.faces_checked,
        "failing_face": rep.failing_face,
        "failing_link_homology": rep.failing_link_homology,
    });
    Ok(Outcome {
        report,
        code: if agrees { EXIT_OK } else { EXIT_DISAGREE },
    })
}

fn check_vd(
    p: &MinorsProblem,
    certificate: Option<&PathBuf>,
    run: &RunArgs,
    opts: EnumOptions,
) -> Result<Outcome, Failure> {
    let k = complex::complex_with(p, &opts)?;
    let (cert, cert_error) = match cmcheck::vd_certificate_triangles(p) {
        Ok(c) => (Some(c), None),
        Err(Error::NotTriangleShape) if certificate.is_none() => {
            (None, Some(error_kind(&Error::NotTriangleShape)))
        }
        Err(e) => return Err(e.into()),
    };
    let validation = cert.as_ref().map(|c| cmcheck::validate_certificate(p, c));
    let search = match cmcheck::is_vertex_decomposable_with(&k, run.budget_vertices) {
        Ok(v) => Some(v),
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e.into()),
    };
    if let (Some(path), Some(c)) = (certificate, &cert) {
        let text = serde_json::to_string_pretty(c).expect("certificate serializes");
        std::fs::write(path, text + "\n")
            .map_err(|e| input_failure(format!("cannot write {}: {e}", path.display())))?;
    }
    let valid = validation.as_ref().map(|v| v.valid);
    let agrees = match (valid, search) {
        (Some(true), Some(s)) => Some(s),
        _ => None,
    };
    let failed = valid == Some(false) || agrees == Some(false);
    let report = json!({
        "input": input_json(p.matrix(), Some(p.r())),
        "certificate_valid": valid,
        "certificate_nodes": cert.as_ref().map(|c| c.root.size()),
        "certificate_depth": cert.as_ref().map(|c| c.root.depth()),
        "certificate_error": cert_error,
        "failing_path": validation.as_ref().filter(|v| !v.valid).map(|v| v.failing_path.iter().map(|s| s.to_string()).collect::<Vec<_>>()),
        "search": search,
        "agrees": agrees,
    });
    Ok(Outcome {
        report,
        code: if failed { EXIT_DISAGREE } else { EXIT_OK },
    })
}

/// Ranges for `sweep`.
#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub max_r: usize,
    pub max_t: usize,
    pub shapes: Shapes,
}

fn ladder_sequences(top: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn go(hi: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() + 1 >= max_len {
            return;
        }
        for v in 1..=hi {
            cur.push(v);
            go(v, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(top.saturating_sub(1), max_len, &mut Vec::new(), &mut out);
    out
}

fn sweep_instances(cfg: &SweepConfig) -> Vec<MinorsProblem> {
    let mut out = Vec::new();
    for n in cfg.min_n..=cfg.max_n {
        for m in cfg.min_n..=cfg.max_n {
            let mats: Vec<GDMatrix> = match cfg.shapes {
                Shapes::Triangles => (0..=cfg.max_t)
                    .flat_map(|t1| (0..=cfg.max_t).map(move |t2| (t1, t2)))
                    .filter_map(|(t1, t2)| GDMatrix::triangles(n, m, t1, t2).ok())
                    .collect(),
                Shapes::All => {
                    let ls = ladder_sequences(n, m);
                    ls.iter()
                        .flat_map(|c| ls.iter().map(move |d| (c, d)))
                        .filter_map(|(c, d)| {
                            GDMatrix::new(n, m, c.clone(), d.iter().rev().copied().collect()).ok()
                        })
                        .collect()
                }
            };
            for x in mats {
                for r in 2..=cfg.max_r.min(n.min(m)) {
                    out.push(MinorsProblem::new(x.clone(), r).expect("r is in range"));
                }
            }
        }
    }
    out
}

enum Verdict {
    Pass(Value),
    Fail(Value),
    Skip(String),
}

fn run_check(p: &MinorsProblem, check: SweepCheck, run: &RunArgs) -> Verdict {
    let opts = EnumOptions {
        engine: Engine::General,
        cell_budget: run.budget_cells,
        parallel: false,
    };
    let outcome = || -> Result<Verdict, Error> {
        let x = p.matrix();
        let verdict = |ok: bool, v: Value| {
            if ok {
                Verdict::Pass(v)
            } else {
                Verdict::Fail(v)
            }
        };
        Ok(match check {
            SweepCheck::Height => {
                let Some((t1, t2)) = triangle_params(x) else {
                    return Ok(Verdict::Skip("not triangles".into()));
                };
                let f = complex::facets_with(p, &opts)?;
                let top = f.iter().map(|s| s.len()).max().unwrap_or(0);
                let pure = f.iter().all(|s| s.len() == top);
                let h = x.num_cells() - top;
                let want = complex::height_formula_triangles(x.n(), x.m(), t1, t2, p.r());
                verdict(
                    h == want && pure,
                    json!({ "count": h, "formula": want, "pure": pure }),
                )
            }
            SweepCheck::Multiplicity => {
                let Some((t1, t2)) = triangle_params(x) else {
                    return Ok(Verdict::Skip("not triangles".into()));
                };
                let f = complex::facets_with(p, &opts)?;
                let top = f.iter().map(|s| s.len()).max().unwrap_or(0);
                let n = f.iter().filter(|s| s.len() == top).count();
                let want = multiplicity::multiplicity_formula(x.n(), x.m(), t1, t2, p.r())?;
                verdict(
                    want == BigInt::from(n),
                    json!({ "count": n.to_string(), "formula": want.to_string() }),
                )
            }
            SweepCheck::Groebner => {
                let rep = groebner::verify_groebner(p)?;
                verdict(rep.groebner, json!({ "pairs_checked": rep.pairs_checked }))
            }
            SweepCheck::Cm => {
                let k = complex::complex_with(p, &opts)?;
                let got = cmcheck::reisner_report(&k, HomologyField::Rational, run.budget_faces)?
                    .cohen_macaulay;
                let want = cmcheck::is_cm_predicted(p);
                verdict(got == want, json!({ "predicted": want, "reisner": got }))
            }
            SweepCheck::Vd => match cmcheck::vd_certificate_triangles(p) {
                Err(Error::NotTriangleShape) => Verdict::Skip("not triangle-shaped".into()),
                Err(e) => return Err(e),
                Ok(c) => {
                    let v = cmcheck::validate_certificate(p, &c);
                    let cm = v.valid && cmcheck::reisner_cm(&complex::complex_with(p, &opts)?)?;
                    verdict(
                        v.valid && cm,
                        json!({ "nodes": c.root.size(), "valid": v.valid, "reisner": cm }),
                    )
                }
            },
            SweepCheck::Pure => match exact_purity_prediction(p) {
                None => Verdict::Skip("no exact purity criterion".into()),
                Some(want) => {
                    let f = complex::facets_with(p, &opts)?;
                    let got = f.iter().all(|s| s.len() == f[0].len());
                    verdict(got == want, json!({ "predicted": want, "pure": got }))
                }
            },
            SweepCheck::Engines => {
                if !complex::paths_engine_supports(p) {
                    return Ok(Verdict::Skip("outside the paths engine's domain".into()));
                }
                let g = complex::facets_with(p, &opts)?;
                let q = complex::facets_with(
                    p,
                    &EnumOptions {
                        engine: Engine::Paths,
                        ..opts
                    },
                )?;
                verdict(g == q, json!({ "general": g.len(), "paths": q.len() }))
            }
        })
    };
    match outcome() {
        Ok(v) => v,
        Err(e) if e.is_budget() => Verdict::Skip(e.to_string()),
        Err(e) => Verdict::Fail(json!({ "error": e.to_string() })),
    }
}

/// Runs every requested check on every instance; rows keep instance order.
pub fn sweep(cfg: &SweepConfig, checks: &[SweepCheck], run: &RunArgs) -> Outcome {
    let instances = sweep_instances(cfg);
    let jobs: Vec<(usize, SweepCheck)> = (0..instances.len())
        .flat_map(|i| checks.iter().map(move |&c| (i, c)))
        .collect();
    let results: Vec<(usize, SweepCheck, Verdict)> = jobs
        .par_iter()
        .map(|&(i, c)| (i, c, run_check(&instances[i], c, run)))
        .collect();
    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    let rows: Vec<Value> = results
        .iter()
        .map(|(i, c, v)| {
            let p = &instances[*i];
            let mut row = json!({
                "n": p.matrix().n(),
                "m": p.matrix().m(),
                "c": p.matrix().c(),
                "d": p.matrix().d(),
                "r": p.r(),
                "check": method_name(*c),
            });
            match v {
                Verdict::Pass(d) => {
                    passed += 1;
                    row["status"] = "pass".into();
                    row["detail"] = d.clone();
                }
                Verdict::Fail(d) => {
                    failed += 1;
                    row["status"] = "fail".into();
                    row["detail"] = d.clone();
                }
                Verdict::Skip(why) => {
                    skipped += 1;
                    row["status"] = "skip".into();
                    row["detail"] = why.clone().into();
                }
            }
            row
        })
        .collect();
    let report = json!({
        "input": {
            "min_n": cfg.min_n,
            "max_n": cfg.max_n,
            "max_r": cfg.max_r,
            "max_t": cfg.max_t,
            "shapes": method_name(cfg.shapes),
            "checks": checks.iter().map(|&c| method_name(c)).collect::<Vec<_>>(),
        },
        "summary": { "instances": instances.len(), "passed": passed, "failed": failed, "skipped": skipped },
        "rows": rows,
    });
    Outcome {
        report,
        code: if failed > 0 { EXIT_DISAGREE } else { EXIT_OK },
    }
}
