//! The `liebax` command-line front end.
//!
//! Subcommands: `check` validates inputs, `centroid` prints the centroid
//! basis, `rb` evaluates a Rota-Baxter residual, `classify` runs the
//! coboundary classification, `double` emits a double as an algebra file,
//! and `fixtures` lists or emits the built-ins. Exit codes: 0 for success
//! verdicts, 1 for mathematical rejections, 2 for input errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bialg::{classify, classify_nonskew, ClassificationReport, Verdict};
use crate::centroid::centroid_basis;
use crate::error::{Error, Result};
use crate::fixtures::{fixture, FIXTURE_NAMES};
use crate::forms::{invariance_check, BilinearForm};
use crate::io::{
    emit_algebra, emit_matrix, emit_tensor, matrix_repr, parse_algebra, parse_form, parse_matrix,
    parse_tensor, peek_field, report_to_json, FieldRepr, ScalarCodec,
};
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;
use crate::rota::{build_double, rb_residual};
use crate::scalars::{squarefree_tag, Quad, Rat, Scalar};
use crate::tensor::{drinfeld_double, is_skew};

#[derive(Parser)]
#[command(
    name = "liebax",
    version,
    about = "Exact classification of coboundary Lie bialgebra structures and Rota-Baxter data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate inputs: Jacobi identity, form symmetry/invariance/nondegeneracy
    Check(CommonArgs),
    /// Compute the centroid basis and its dimension
    Centroid(CommonArgs),
    /// Evaluate the Rota-Baxter residual of --map with weight --weight
    Rb(CommonArgs),
    /// Classify the coboundary structure induced by --tensor
    Classify(CommonArgs),
    /// Emit a double as an algebra file: D_{R,mu} for --map/--weight, the
    /// classical double for --tensor
    Double(CommonArgs),
    /// List built-in fixtures, or emit one as JSON with --fixture
    Fixtures(CommonArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct CommonArgs {
    /// Algebra file (JSON)
    #[arg(long)]
    algebra: Option<String>,
    /// Bilinear form file (JSON)
    #[arg(long)]
    form: Option<String>,
    /// Tensor: a fixture tensor name or a file path
    #[arg(long)]
    tensor: Option<String>,
    /// Linear map: a fixture map name or a file path
    #[arg(long)]
    map: Option<String>,
    /// Weight map: a fixture map name, "id", "zero", or a file path
    #[arg(long)]
    weight: Option<String>,
    /// Built-in fixture name
    #[arg(long)]
    fixture: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Reinterpret rational inputs over Q(sqrt(d))
    #[arg(long, value_name = "d", allow_hyphen_values = true)]
    extend: Option<i64>,
}

/// Run the CLI on the given arguments, returning the exit code and output.
pub fn run<I>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let (args, runner): (&CommonArgs, CommandKind) = match &cli.command {
        Command::Check(a) => (a, CommandKind::Check),
        Command::Centroid(a) => (a, CommandKind::Centroid),
        Command::Rb(a) => (a, CommandKind::Rb),
        Command::Classify(a) => (a, CommandKind::Classify),
        Command::Double(a) => (a, CommandKind::Double),
        Command::Fixtures(a) => (a, CommandKind::Fixtures),
    };
    if matches!(runner, CommandKind::Fixtures) {
        return unpack(cmd_fixtures(args));
    }
    match load_dispatch(args) {
        Ok(Loaded::Rational(session)) => unpack(dispatch(&runner, &session, args)),
        Ok(Loaded::Extended(session)) => unpack(dispatch(&runner, &session, args)),
        Err(e) => (e.exit_code(), format!("error: {e}\n")),
    }
}

enum CommandKind {
    Check,
    Centroid,
    Rb,
    Classify,
    Double,
    Fixtures,
}

fn unpack(res: Result<(i32, String)>) -> (i32, String) {
    match res {
        Ok(pair) => pair,
        Err(e) => (e.exit_code(), format!("error: {e}\n")),
    }
}

fn dispatch<S: ScalarCodec>(
    kind: &CommandKind,
    session: &Session<S>,
    args: &CommonArgs,
) -> Result<(i32, String)> {
    match kind {
        CommandKind::Check => cmd_check(session, args),
        CommandKind::Centroid => cmd_centroid(session, args),
        CommandKind::Rb => cmd_rb(session, args),
        CommandKind::Classify => cmd_classify(session, args),
        CommandKind::Double => cmd_double(session, args),
        CommandKind::Fixtures => unreachable!("handled before dispatch"),
    }
}

/// Everything a subcommand operates on, over one scalar field.
struct Session<S: ScalarCodec> {
    algebra: LieAlgebra<S>,
    form: Option<BilinearForm<S>>,
    tensors: Vec<(String, Matrix<S>)>,
    maps: Vec<(String, Matrix<S>)>,
    ambient: Option<i64>,
}

enum Loaded {
    Rational(Session<Rat>),
    Extended(Session<Quad>),
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path:?}: {e}")))
}

fn load_dispatch(args: &CommonArgs) -> Result<Loaded> {
    if let Some(name) = &args.fixture {
        let f = fixture(name)?;
        let session = Session {
            algebra: f.algebra,
            form: Some(f.form),
            tensors: f.tensors,
            maps: f.maps,
            ambient: None,
        };
        return Ok(match args.extend {
            Some(d) => Loaded::Extended(lift_session(session, squarefree_tag(d))),
            None => Loaded::Rational(session),
        });
    }
    let Some(path) = &args.algebra else {
        return Err(Error::InvalidInput(
            "provide --fixture NAME or --algebra FILE".into(),
        ));
    };
    let json = read_file(path)?;
    match peek_field(&json)? {
        FieldRepr::Q => {
            let session = Session {
                algebra: parse_algebra::<Rat>(&json)?,
                form: load_form::<Rat>(args, None)?,
                tensors: Vec::new(),
                maps: Vec::new(),
                ambient: None,
            };
            Ok(match args.extend {
                Some(d) => Loaded::Extended(lift_session(session, squarefree_tag(d))),
                None => Loaded::Rational(session),
            })
        }
        FieldRepr::QuadExt { d } => {
            if args.extend.is_some() {
                return Err(Error::InvalidInput(
                    "--extend applies to rational inputs only".into(),
                ));
            }
            let d = squarefree_tag(d);
            Ok(Loaded::Extended(Session {
                algebra: parse_algebra::<Quad>(&json)?,
                form: load_form::<Quad>(args, Some(d))?,
                tensors: Vec::new(),
                maps: Vec::new(),
                ambient: Some(d),
            }))
        }
    }
}

fn load_form<S: ScalarCodec>(
    args: &CommonArgs,
    ambient: Option<i64>,
) -> Result<Option<BilinearForm<S>>> {
    match &args.form {
        Some(path) => Ok(Some(parse_form(&read_file(path)?, ambient)?)),
        None => Ok(None),
    }
}

fn lift_session(session: Session<Rat>, d: i64) -> Session<Quad> {
    Session {
        algebra: session.algebra.map_scalars(|s| s.lift_to_quad(d)),
        form: session.form.map(|f| f.map_scalars(|s| s.lift_to_quad(d))),
        tensors: session
            .tensors
            .into_iter()
            .map(|(n, t)| (n, t.map(|s| s.lift_to_quad(d))))
            .collect(),
        maps: session
            .maps
            .into_iter()
            .map(|(n, m)| (n, m.map(|s| s.lift_to_quad(d))))
            .collect(),
        ambient: Some(d),
    }
}

impl<S: ScalarCodec> Session<S> {
    fn resolve_tensor(&self, source: &str) -> Result<Matrix<S>> {
        if let Some((_, t)) = self.tensors.iter().find(|(n, _)| n == source) {
            return Ok(t.clone());
        }
        parse_tensor(&read_file(source)?, self.ambient)
    }

    fn resolve_map(&self, source: &str) -> Result<Matrix<S>> {
        if let Some((_, m)) = self.maps.iter().find(|(n, _)| n == source) {
            return Ok(m.clone());
        }
        match source {
            "id" => Ok(Matrix::identity(self.algebra.dim())),
            "zero" | "0" => Ok(Matrix::zeros(self.algebra.dim(), self.algebra.dim())),
            _ => parse_matrix(&read_file(source)?, self.ambient),
        }
    }

    fn require_form(&self) -> Result<&BilinearForm<S>> {
        self.form
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("this command needs --form (or a fixture)".into()))
    }
}

fn fmt_matrix<S: Scalar>(m: &Matrix<S>, indent: &str) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{indent}[{}]", row.join(", "));
    }
    out
}

fn field_name(ambient: Option<i64>) -> String {
    match ambient {
        None => "Q".to_string(),
        Some(d) => format!("Q(sqrt({d}))"),
    }
}

fn cmd_check<S: ScalarCodec>(session: &Session<S>, args: &CommonArgs) -> Result<(i32, String)> {
    let jacobi = session.algebra.jacobi_check();
    let mut all = jacobi;
    let form_checks = session.form.as_ref().map(|form| {
        let sym = form.is_symmetric();
        let inv = invariance_check(&session.algebra, form);
        let nondeg = form.is_nondegenerate();
        all = all && sym && inv && nondeg;
        (sym, inv, nondeg)
    });
    let out = match args.format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "algebra: dim {} over {}",
                session.algebra.dim(),
                field_name(session.ambient)
            );
            let _ = writeln!(out, "jacobi: {}", if jacobi { "ok" } else { "FAILED" });
            if let Some((sym, inv, nondeg)) = form_checks {
                let _ = writeln!(out, "form symmetric: {}", if sym { "ok" } else { "FAILED" });
                let _ = writeln!(out, "form invariant: {}", if inv { "ok" } else { "FAILED" });
                let _ = writeln!(
                    out,
                    "form nondegenerate: {}",
                    if nondeg { "ok" } else { "FAILED" }
                );
            }
            out
        }
        Format::Structured => {
            let mut map = serde_json::Map::new();
            map.insert("dim".into(), session.algebra.dim().into());
            map.insert("field".into(), field_name(session.ambient).into());
            map.insert("jacobi".into(), jacobi.into());
            if let Some((sym, inv, nondeg)) = form_checks {
                map.insert("form_symmetric".into(), sym.into());
                map.insert("form_invariant".into(), inv.into());
                map.insert("form_nondegenerate".into(), nondeg.into());
            }
            format!("{:#}\n", serde_json::Value::Object(map))
        }
    };
    Ok((i32::from(!all), out))
}

fn cmd_centroid<S: ScalarCodec>(session: &Session<S>, args: &CommonArgs) -> Result<(i32, String)> {
    let cb = centroid_basis(&session.algebra);
    let out = match args.format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "centroid dimension: {}", cb.dim());
            if cb.oversized {
                let _ = writeln!(
                    out,
                    "warning: centroid dimension exceeds the algebra dimension; the algebra is (near-)abelian"
                );
            }
            for (k, m) in cb.elements.iter().enumerate() {
                let _ = writeln!(out, "basis element {}:", k + 1);
                out.push_str(&fmt_matrix(m, "  "));
            }
            out
        }
        Format::Structured => {
            let basis: Vec<serde_json::Value> = cb
                .elements
                .iter()
                .map(|m| serde_json::to_value(matrix_repr(m)).expect("scalar json"))
                .collect();
            let value = serde_json::json!({
                "dimension": cb.dim(),
                "oversized": cb.oversized,
                "basis": basis,
            });
            format!("{value:#}\n")
        }
    };
    Ok((0, out))
}

fn cmd_rb<S: ScalarCodec>(session: &Session<S>, args: &CommonArgs) -> Result<(i32, String)> {
    let op_source = args
        .map
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("rb needs --map".into()))?;
    let op = session.resolve_map(op_source)?;
    let weight = session.resolve_map(args.weight.as_deref().unwrap_or("zero"))?;
    let residual = rb_residual(&session.algebra, &op, &weight)?;
    let n = session.algebra.dim();
    let zero = residual.is_zero();
    if matches!(args.format, Format::Structured) {
        let value = serde_json::json!({
            "residual_zero": zero,
            "nonzero_pairs": residual.nonzero_count(),
            "basis_pairs": n * n,
        });
        return Ok((i32::from(!zero), format!("{value:#}\n")));
    }
    let mut out = String::new();
    if zero {
        let _ = writeln!(
            out,
            "Rota-Baxter identity holds: residual is identically zero"
        );
        return Ok((0, out));
    }
    let _ = writeln!(
        out,
        "Rota-Baxter identity fails on {} of {} basis pairs",
        residual.nonzero_count(),
        n * n
    );
    let mut shown = 0;
    'outer: for i in 0..n {
        for j in 0..n {
            let v = residual.at(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                let row: Vec<String> = v.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "  residual(e{}, e{}) = [{}]",
                    i + 1,
                    j + 1,
                    row.join(", ")
                );
                shown += 1;
                if shown == 5 {
                    let _ = writeln!(out, "  ...");
                    break 'outer;
                }
            }
        }
    }
    Ok((1, out))
}

fn render_report_text<S: ScalarCodec>(
    report: &ClassificationReport<S>,
    ambient: Option<i64>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "verdict: {}", report.verdict);
    if let Some(nu) = &report.nu {
        let _ = writeln!(out, "nu:");
        out.push_str(&fmt_matrix(nu, "  "));
    }
    if let Some(mu) = &report.mu {
        let _ = writeln!(out, "mu:");
        out.push_str(&fmt_matrix(mu, "  "));
    }
    if let Some(d) = report.extension_d {
        let _ = writeln!(out, "extension discriminant: {d}");
    }
    if let Some(mu) = &report.mu_extension {
        let _ = writeln!(
            out,
            "mu over {}: ",
            field_name(report.extension_d.or(ambient))
        );
        out.push_str(&fmt_matrix(mu, "  "));
    }
    let d = &report.diagnostics;
    if let Some(v) = d.theta_nonzero {
        let _ = writeln!(out, "theta: {v} nonzero basis pairs");
    }
    if let Some(v) = d.cybe_nonzero {
        let _ = writeln!(out, "cybe residual: {v} nonzero entries");
    }
    for note in &d.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

fn cmd_classify<S: ScalarCodec>(session: &Session<S>, args: &CommonArgs) -> Result<(i32, String)> {
    if !session.algebra.jacobi_check() {
        return Err(Error::InvalidInput(
            "structure constants fail the Jacobi identity".into(),
        ));
    }
    let form = session.require_form()?;
    let source = args
        .tensor
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("classify needs --tensor".into()))?;
    let r = session.resolve_tensor(source)?;
    let report = if is_skew(&r) {
        classify(&session.algebra, form, &r)?
    } else {
        classify_nonskew(&session.algebra, form, &r)?
    };
    let code = i32::from(report.verdict == Verdict::NotBialgebra);
    let out = match args.format {
        Format::Text => render_report_text(&report, session.ambient),
        Format::Structured => format!("{:#}\n", report_to_json(&report)),
    };
    Ok((code, out))
}

fn cmd_double<S: ScalarCodec>(session: &Session<S>, args: &CommonArgs) -> Result<(i32, String)> {
    if !session.algebra.jacobi_check() {
        return Err(Error::InvalidInput(
            "structure constants fail the Jacobi identity".into(),
        ));
    }
    let double = if let Some(source) = &args.tensor {
        let r = session.resolve_tensor(source)?;
        drinfeld_double(&session.algebra, session.require_form()?, &r)?
    } else if let Some(source) = &args.map {
        let op = session.resolve_map(source)?;
        let weight = session.resolve_map(args.weight.as_deref().unwrap_or("zero"))?;
        build_double(&session.algebra, &op, &weight)?.algebra
    } else {
        return Err(Error::InvalidInput(
            "double needs --tensor (classical double) or --map/--weight (operator double)".into(),
        ));
    };
    let file = emit_algebra(&double, session.ambient);
    let json = serde_json::to_string_pretty(&file).expect("algebra file serializes");
    Ok((0, format!("{json}\n")))
}

fn cmd_fixtures(args: &CommonArgs) -> Result<(i32, String)> {
    let Some(name) = &args.fixture else {
        let mut out = String::new();
        for name in FIXTURE_NAMES {
            let f = fixture(name)?;
            let tensors: Vec<&str> = f.tensors.iter().map(|(n, _)| n.as_str()).collect();
            let maps: Vec<&str> = f.maps.iter().map(|(n, _)| n.as_str()).collect();
            let _ = writeln!(
                out,
                "{name}: dim {}, tensors [{}], maps [{}]",
                f.algebra.dim(),
                tensors.join(", "),
                maps.join(", ")
            );
        }
        return Ok((0, out));
    };
    let f = fixture(name)?;
    let bundle = serde_json::json!({
        "name": f.name,
        "algebra": serde_json::to_value(emit_algebra(&f.algebra, None)).expect("json"),
        "form": serde_json::to_value(emit_matrix(f.form.gram())).expect("json"),
        "tensors": f.tensors.iter().map(|(n, t)| {
            (n.clone(), serde_json::to_value(emit_tensor(t)).expect("json"))
        }).collect::<serde_json::Map<_, _>>(),
        "maps": f.maps.iter().map(|(n, m)| {
            (n.clone(), serde_json::to_value(emit_matrix(m)).expect("json"))
        }).collect::<serde_json::Map<_, _>>(),
    });
    Ok((
        0,
        format!("{}\n", serde_json::to_string_pretty(&bundle).expect("json")),
    ))
}
