//! Command-line front end. [`run`] takes the argument list and output
//! streams and returns the process exit code:
//! 0 success, 2 parse or usage error, 3 no certificate, 4 construction
//! failure.

pub mod settings;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::curves::boundaries::{named_boundaries, CurveSet, LAYERS, LAYER_PREIMAGES};
use crate::curves::config::{build_configuration, verify_configuration, ConfigCase, ConfigInput};
use crate::curves::export::{configuration_to_svg, curves_to_csv, curves_to_json, svg_document, SvgGroup, Viewport};
use crate::curves::{boundary_nth, PlaneCurve};
use crate::dynamics::{f, lateral, vertical, IterationProgram, Step};
use crate::error::Error;
use crate::literal::parse_lambda;
use crate::moebius::ComplexValue;
use crate::regions::predicates::SCHEMA_VERSION;
use crate::regions::{catalog_enumerate, certify_with, classify, CatalogRange, CertifyOptions, Family};

pub use settings::{CliConfig, Format, Precision};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_CERTIFICATE: i32 = 3;
pub const EXIT_CONSTRUCTION: i32 = 4;

#[derive(Debug, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        CliError { code: EXIT_USAGE, message }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ConstructionFailed(_) | Error::WrongRegion(_) => EXIT_CONSTRUCTION,
            _ => EXIT_USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "twopar", version, about = "Two-parabolic Moebius groups: regions, certificates, curves")]
struct Cli {
    /// Flat key=value settings file, applied before flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// exact (default) or float.
    #[arg(long, global = true)]
    precision: Option<String>,
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[arg(long = "curve-tol", global = true)]
    curve_tol: Option<f64>,
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long = "max-depth", global = true)]
    max_depth: Option<u32>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Extra certificate target, NAME=VALUE; repeatable.
    #[arg(long = "target", global = true)]
    targets: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Region report for a parameter.
    Classify {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Search for a dust or non-free certificate.
    Certify {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Iterates of f, or the steps of a V/L program, with region tags.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 0)]
        steps: u32,
        #[arg(long)]
        program: Option<String>,
    },
    /// Boundary curves and tessellation.
    Curves {
        #[arg(long, default_value = "jorgensen,schottky,nsdc,ncf")]
        layers: String,
        #[arg(long = "preimage-depth", default_value_t = 0)]
        preimage_depth: u32,
        /// Half-width of the SVG viewport.
        #[arg(long, default_value_t = 4.5)]
        extent: f64,
    },
    /// Build and verify a Schottky configuration.
    Config {
        #[arg(long)]
        case: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
    },
    /// List catalog values.
    Catalog {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        max: Option<u64>,
        /// Comma-separated N values for the Pell and convergent families.
        #[arg(long = "n-values")]
        n_values: Option<String>,
        #[arg(long)]
        count: Option<usize>,
    },
}

struct Ctx<'a> {
    cfg: CliConfig,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn lambda(&mut self, s: &str) -> Result<ComplexValue, CliError> {
        let p = parse_lambda(s)?;
        for w in &p.warnings {
            let _ = writeln!(self.stderr, "warning: {w}");
        }
        Ok(match self.cfg.precision {
            Precision::FloatOnly => p.value.to_float(),
            Precision::ExactPreferred => p.value,
        })
    }

    fn emit(&mut self, body: &str) -> Result<(), CliError> {
        match &self.cfg.out {
            Some(path) => std::fs::write(path, body).map_err(|e| CliError::usage(format!("{}: {e}", path.display()))),
            None => self.stdout.write_all(body.as_bytes()).map_err(|e| CliError::usage(e.to_string())),
        }
    }

    fn format(&self, default: Format) -> Format {
        self.cfg.format.unwrap_or(default)
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn text_of(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            let s = match x {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {s}\n"));
        }
    } else {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

fn unsupported(f: Format, cmd: &str) -> CliError {
    CliError::usage(format!("format {f:?} not supported by {cmd}"))
}

fn cmd_classify(ctx: &mut Ctx, lambda: &str) -> Result<i32, CliError> {
    let l = ctx.lambda(lambda)?;
    let r = classify(&l)?;
    let body = match ctx.format(Format::Json) {
        Format::Json => pretty(&r),
        Format::Text => text_of(&serde_json::to_value(&r).expect("report")),
        f => return Err(unsupported(f, "classify")),
    };
    ctx.emit(&body)?;
    Ok(EXIT_OK)
}

fn cmd_certify(ctx: &mut Ctx, lambda: &str, depth: Option<u32>) -> Result<i32, CliError> {
    let l = ctx.lambda(lambda)?;
    let opts = CertifyOptions {
        max_depth: depth.unwrap_or(ctx.cfg.max_depth),
        tolerance: ctx.cfg.tolerance,
        external_targets: ctx.cfg.targets.clone(),
        ..CertifyOptions::default()
    };
    let cert = certify_with(&l, &opts)?;
    let fmt = ctx.format(Format::Json);
    let body = match (&cert, fmt) {
        (Some(c), Format::Json) => pretty(c),
        (Some(c), Format::Text) => text_of(&serde_json::to_value(c).expect("certificate")),
        (None, Format::Json) => pretty(&json!({ "schema_version": SCHEMA_VERSION, "lambda": l, "certificate": null })),
        (None, Format::Text) => "none\n".to_string(),
        (_, f) => return Err(unsupported(f, "certify")),
    };
    ctx.emit(&body)?;
    Ok(if cert.is_some() { EXIT_OK } else { EXIT_NO_CERTIFICATE })
}

#[derive(Serialize)]
struct OrbitRow {
    step: usize,
    operation: String,
    value: ComplexValue,
    report: Option<crate::regions::RegionReport>,
}

fn cmd_orbit(ctx: &mut Ctx, lambda: &str, steps: u32, program: Option<&str>) -> Result<i32, CliError> {
    let l = ctx.lambda(lambda)?;
    let row = |step: usize, op: String, v: ComplexValue| OrbitRow {
        step,
        operation: op,
        report: classify(&v).ok(),
        value: v,
    };
    let mut rows = vec![row(0, "start".into(), l.clone())];
    let mut z = l.clone();
    match program {
        Some(p) => {
            let prog: IterationProgram = p.parse()?;
            for (k, s) in prog.steps.iter().rev().enumerate() {
                z = match s {
                    Step::V => vertical(&z),
                    Step::L(n) => lateral(&z, *n)?,
                };
                let op = match s {
                    Step::V => "V".to_string(),
                    Step::L(n) => format!("L{n}"),
                };
                rows.push(row(k + 1, op, z.clone()));
            }
        }
        None => {
            for k in 0..steps {
                z = f(&z);
                rows.push(row(k as usize + 1, "f".into(), z.clone()));
            }
        }
    }
    let body = match ctx.format(Format::Json) {
        Format::Json => {
            pretty(&json!({ "schema_version": SCHEMA_VERSION, "lambda": l, "program": program, "rows": rows }))
        }
        f @ (Format::Text | Format::Csv) => {
            let sep = if f == Format::Csv { "," } else { "\t" };
            let mut s = ["step", "operation", "value", "classical_ts", "jorgensen_interior", "special_boundary_point"]
                .join(sep);
            s.push('\n');
            for r in &rows {
                let (c, j, sp) = match &r.report {
                    Some(rep) => (
                        format!("{:?}", rep.classical_ts).to_lowercase(),
                        rep.jorgensen_interior.to_string(),
                        rep.special_boundary_point.map(|p| p.to_string()).unwrap_or_default(),
                    ),
                    None => (String::new(), String::new(), String::new()),
                };
                s.push_str(&[r.step.to_string(), r.operation.clone(), r.value.to_string(), c, j, sp].join(sep));
                s.push('\n');
            }
            s
        }
        f => return Err(unsupported(f, "orbit")),
    };
    ctx.emit(&body)?;
    Ok(EXIT_OK)
}

fn cmd_curves(ctx: &mut Ctx, layers: &str, depth: u32, extent: f64) -> Result<i32, CliError> {
    let wanted: Vec<&str> = layers.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if wanted.is_empty() {
        return Err(CliError::usage("empty layer list".into()));
    }
    for w in &wanted {
        if !LAYERS.contains(w) {
            return Err(CliError::usage(format!("unknown layer {w:?}; known: {}", LAYERS.join(","))));
        }
    }
    if !(extent > 0.0) {
        return Err(CliError::usage("extent must be positive".into()));
    }
    let depth = if depth == 0 && wanted.contains(&LAYER_PREIMAGES) { 2 } else { depth };
    let samples = ctx.cfg.samples;
    let all = named_boundaries(samples)?;
    let set = CurveSet { curves: all.curves.into_iter().filter(|c| wanted.contains(&c.layer.as_str())).collect() };
    let levels: Vec<Vec<PlaneCurve>> = (1..=depth).map(|n| boundary_nth(n, samples)).collect::<crate::Result<_>>()?;
    let worst = set.curves.iter().chain(levels.iter().flatten()).map(|c| c.max_residual()).fold(0.0, f64::max);
    if worst > ctx.cfg.curve_tol {
        return Err(CliError { code: EXIT_CONSTRUCTION, message: format!("curve residual {worst:e} above tolerance") });
    }
    let body = match ctx.format(Format::Svg) {
        Format::Svg => {
            let mut groups: Vec<SvgGroup> = LAYERS
                .iter()
                .filter(|&&l| l != LAYER_PREIMAGES)
                .filter_map(|&l| {
                    let curves: Vec<&PlaneCurve> = set.layer(l).collect();
                    (!curves.is_empty()).then(|| SvgGroup {
                        id: l.to_string(),
                        style_layer: l,
                        curves,
                        children: vec![],
                    })
                })
                .collect();
            if !levels.is_empty() {
                let children = levels
                    .iter()
                    .enumerate()
                    .map(|(k, lv)| SvgGroup {
                        id: format!("preimages_{}", k + 1),
                        style_layer: LAYER_PREIMAGES,
                        curves: lv.iter().collect(),
                        children: vec![],
                    })
                    .collect();
                groups.push(SvgGroup {
                    id: LAYER_PREIMAGES.into(),
                    style_layer: LAYER_PREIMAGES,
                    curves: vec![],
                    children,
                });
            }
            svg_document(&groups, &Viewport::square(extent, 800))
        }
        f @ (Format::Csv | Format::Json) => {
            let mut curves = set.curves.clone();
            curves.extend(levels.into_iter().flatten());
            if f == Format::Csv {
                curves_to_csv(&curves)
            } else {
                let mut s = curves_to_json(&curves, true);
                s.push('\n');
                s
            }
        }
        f => return Err(unsupported(f, "curves")),
    };
    ctx.emit(&body)?;
    Ok(EXIT_OK)
}

fn cmd_config(ctx: &mut Ctx, case: &str, lambda: Option<&str>, q: Option<&str>) -> Result<i32, CliError> {
    let case: ConfigCase = case.parse()?;
    let input = match (lambda, q) {
        (Some(l), None) => ConfigInput::Lambda(ctx.lambda(l)?),
        (None, Some(q)) => ConfigInput::Q(ctx.lambda(q)?),
        _ => return Err(CliError::usage("give exactly one of --lambda and --q".into())),
    };
    let cfg = build_configuration(case, &input)?;
    let report = verify_configuration(&cfg);
    let body = match ctx.format(Format::Json) {
        Format::Json => {
            pretty(&json!({ "schema_version": SCHEMA_VERSION, "configuration": cfg, "verification": report }))
        }
        Format::Svg => {
            let r = (2.0 * cfg.lambda.abs_f64() + 3.0).max(4.0);
            configuration_to_svg(&cfg, &Viewport::square(r, 800))
        }
        Format::Text => text_of(&serde_json::to_value(&report).expect("report")),
        f => return Err(unsupported(f, "config")),
    };
    ctx.emit(&body)?;
    Ok(EXIT_OK)
}

const ALL_FAMILIES: [Family; 8] = [
    Family::HalfSquares,
    Family::Sine,
    Family::Pell,
    Family::Convergent,
    Family::Sporadic,
    Family::Divided,
    Family::SmallRatio,
    Family::UnitSum,
];

fn cmd_catalog(
    ctx: &mut Ctx,
    family: Option<&str>,
    max: Option<u64>,
    n_values: Option<&str>,
    count: Option<usize>,
) -> Result<i32, CliError> {
    let mut range = CatalogRange::default();
    if let Some(m) = max {
        range.max = m;
    }
    if let Some(ns) = n_values {
        range.n_values = ns
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse().map_err(|_| CliError::usage(format!("bad N value {s:?}"))))
            .collect::<Result<_, _>>()?;
    }
    if let Some(c) = count {
        range.count = c;
    }
    let families: Vec<Family> = match family {
        Some(f) => vec![f.parse()?],
        None => ALL_FAMILIES.to_vec(),
    };
    let mut entries = Vec::new();
    for fam in families {
        entries.extend(catalog_enumerate(fam, &range)?);
    }
    let body = match ctx.format(Format::Json) {
        Format::Json => pretty(&json!({ "schema_version": SCHEMA_VERSION, "entries": entries })),
        Format::Text => entries.iter().map(|e| format!("{}\t{}\n", e.id, e.value)).collect(),
        Format::Csv => {
            let mut s = String::from("id,family,value\n");
            for e in &entries {
                s.push_str(&format!("\"{}\",{},{}\n", e.id, e.family.code(), e.value));
            }
            s
        }
        f => return Err(unsupported(f, "catalog")),
    };
    ctx.emit(&body)?;
    Ok(EXIT_OK)
}

fn settings(cli: &Cli) -> Result<CliConfig, CliError> {
    let mut cfg = CliConfig::default();
    if let Some(p) = &cli.config {
        cfg.load_file(p)?;
    }
    if let Some(p) = &cli.precision {
        cfg.set("precision", p)?;
    }
    if let Some(t) = cli.tolerance {
        cfg.tolerance = t;
    }
    if let Some(t) = cli.curve_tol {
        cfg.curve_tol = t;
    }
    if let Some(s) = cli.samples {
        cfg.samples = s;
    }
    if let Some(d) = cli.max_depth {
        cfg.max_depth = d;
    }
    if let Some(f) = cli.format {
        cfg.format = Some(f);
    }
    if let Some(o) = &cli.out {
        cfg.out = Some(o.clone());
    }
    for t in &cli.targets {
        let (name, value) =
            t.split_once('=').ok_or_else(|| CliError::usage(format!("target {t:?} is not NAME=VALUE")))?;
        cfg.add_target(name.trim(), value.trim())?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = settings(&cli)?;
    let mut ctx = Ctx { cfg, stdout, stderr };
    match &cli.command {
        Command::Classify { lambda } => cmd_classify(&mut ctx, lambda),
        Command::Certify { lambda, depth } => cmd_certify(&mut ctx, lambda, *depth),
        Command::Orbit { lambda, steps, program } => cmd_orbit(&mut ctx, lambda, *steps, program.as_deref()),
        Command::Curves { layers, preimage_depth, extent } => cmd_curves(&mut ctx, layers, *preimage_depth, *extent),
        Command::Config { case, lambda, q } => cmd_config(&mut ctx, case, lambda.as_deref(), q.as_deref()),
        Command::Catalog { family, max, n_values, count } => {
            cmd_catalog(&mut ctx, family.as_deref(), *max, n_values.as_deref(), *count)
        }
    }
}

/// Parse `args` (program name first), run the command, and return the
/// exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}
