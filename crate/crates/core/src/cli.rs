//! Command-line front end. `run` parses arguments, runs one pipeline and
//! returns the exit code together with everything printed.

use crate::characters::{
    blocks, decomposition_matrix, tilting_table, verify_bgg, verify_orthogonality, verma_decomposition_truncated,
    DecompositionMatrix, Window,
};
use crate::error::{Error, Result};
use crate::module::{certify_tilting, tilting_module, verify_kdual, verify_pdual, Limits, Workbench};
use crate::superalgebra::{
    build_q, gl_graded, standard_gamma, validate_algebra, verify_semiinfinite, AlgebraCharacter, GradingKind,
    LieSuperAlgebra, Weight,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_WINDOW: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "tiltbench", version, about = "Exact checks for graded Lie superalgebra representations")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GradingArg {
    Principal,
    Compatible,
    Q,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Bgg,
    Kdual,
    Pdual,
    Kdt,
    Sl1,
    All,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct RunConfig {
    /// gl:M,N or q:N
    #[arg(long, global = true, default_value = "gl:1,1")]
    pub algebra: String,
    /// Defaults to compatible for gl and q for q(n).
    #[arg(long, global = true, value_enum)]
    pub grading: Option<GradingArg>,
    /// Coordinate range LO..HI of the weight box.
    #[arg(long = "box", global = true, default_value = "-2..2", allow_hyphen_values = true)]
    pub window: String,
    /// Explicit weights "(a,b|c);(d,e|f)" instead of a box.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub weights: Option<String>,
    /// How far beyond the window auxiliary modules may reach.
    #[arg(long, global = true, default_value_t = 2)]
    pub margin: i64,
    #[arg(long, global = true, default_value_t = 2)]
    pub depth: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, global = true, default_value_t = Limits::default().max_module_dim)]
    pub max_module_dim: usize,
    #[arg(long, global = true, default_value_t = Limits::default().max_end_dim)]
    pub max_end_dim: usize,
    #[arg(long, global = true, default_value_t = Limits::default().max_iterations)]
    pub max_iterations: usize,
    /// Random combinations tried per isomorphism search.
    #[arg(long, global = true, default_value_t = Limits::default().iso_budget)]
    pub iso_budget: usize,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Check the semi-infinite character identity and the algebra axioms.
    CheckSemiinfinite {
        /// Use this character instead of the standard one.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
    },
    /// Decomposition numbers [K(mu):L(lambda)] over the window.
    Decompose {
        /// Directory for decomposition.json and decomposition.tsv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check multiplicity and duality identities over the window.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        which: Which,
    },
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Window(_) => EXIT_WINDOW,
        Error::Resource(_) => EXIT_RESOURCE,
        Error::Precondition(_) | Error::NotDominant(_) | Error::InvalidAlgebra(_) | Error::Unsupported(_) => EXIT_USAGE,
        Error::TrivialExtension | Error::Internal(_) => EXIT_VIOLATED,
    }
}

fn status(code: i32) -> &'static str {
    match code {
        EXIT_PASS => "pass",
        EXIT_VIOLATED => "violated",
        EXIT_USAGE => "usage",
        EXIT_WINDOW => "window",
        _ => "resource",
    }
}

fn parse_algebra(cfg: &RunConfig) -> Result<Arc<LieSuperAlgebra>> {
    let bad = || Error::Precondition(format!("cannot parse --algebra {}", cfg.algebra));
    let (kind, rest) = cfg.algebra.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = rest
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad())?;
    let g = match (kind.trim(), nums.as_slice()) {
        ("gl", [m, n]) => {
            let kind = match cfg.grading.unwrap_or(GradingArg::Compatible) {
                GradingArg::Principal => GradingKind::Principal,
                GradingArg::Compatible => GradingKind::Compatible,
                GradingArg::Q => return Err(Error::Precondition("the q grading needs --algebra q:N".into())),
            };
            gl_graded(*m, *n, kind)?
        }
        ("q", [n]) => {
            if !matches!(cfg.grading, None | Some(GradingArg::Q)) {
                return Err(Error::Precondition("q(n) carries only the q grading".into()));
            }
            build_q(*n)?
        }
        _ => return Err(bad()),
    };
    Ok(Arc::new(g))
}

fn parse_window(cfg: &RunConfig, g: &LieSuperAlgebra) -> Result<Window> {
    if let Some(list) = &cfg.weights {
        let ws = list
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                Weight::parse(s)
                    .filter(|w| w.len() == g.rank())
                    .ok_or_else(|| Error::Precondition(format!("cannot parse weight {s}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if ws.is_empty() {
            return Ok(Window::from_box(g, 1, 0));
        }
        return Window::from_weights(g, &ws);
    }
    let bad = || Error::Precondition(format!("cannot parse --box {}", cfg.window));
    let (lo, hi) = cfg.window.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    Ok(Window::from_box(g, lo, hi))
}

fn workbench(cfg: &RunConfig, g: Arc<LieSuperAlgebra>) -> Result<Workbench> {
    if cfg.max_module_dim == 0 || cfg.max_end_dim == 0 || cfg.max_iterations == 0 {
        return Err(Error::Precondition("resource bounds must be positive".into()));
    }
    if cfg.margin < 0 {
        return Err(Error::Precondition("--margin must be nonnegative".into()));
    }
    let limits = Limits {
        max_module_dim: cfg.max_module_dim,
        max_end_dim: cfg.max_end_dim,
        max_iterations: cfg.max_iterations,
        iso_budget: cfg.iso_budget,
        ..Limits::default()
    };
    Ok(Workbench::new(g, cfg.seed, limits))
}

fn labels(g: &LieSuperAlgebra, ws: &[Weight]) -> Vec<String> {
    ws.iter().map(|w| g.weight_label(w)).collect()
}

/// Result of one command before it is wrapped into a report.
struct Body {
    passed: bool,
    result: Value,
    tsv: String,
}

fn check_semiinfinite(cfg: &RunConfig, gamma: &Option<String>) -> Result<Body> {
    let g = parse_algebra(cfg)?;
    let gw = match gamma {
        Some(s) => Weight::parse(s)
            .filter(|w| w.len() == g.rank())
            .ok_or_else(|| Error::Precondition(format!("cannot parse --gamma {s}")))?,
        None => standard_gamma(&g)?,
    };
    let validation = validate_algebra(&g);
    let report = verify_semiinfinite(&g, &AlgebraCharacter::from_weight(&g, &gw)?)?;
    let passed = validation.all_passed() && report.passed();
    let mut tsv = String::from("check\tpassed\twitness\n");
    for c in &validation.checks {
        tsv += &format!("{}\t{}\t{}\n", c.name, c.passed, c.witness.clone().unwrap_or_default());
    }
    tsv += &format!("semiinfinite\t{}\t{}\n", report.passed(), report.defects.len());
    for d in &report.defects {
        tsv += &format!("defect\t{}\t{}\t{}\t{}\n", d.kind, d.elements.join(","), d.lhs, d.rhs);
    }
    Ok(Body {
        passed,
        result: json!({
            "gamma": g.weight_label(&gw),
            "validation": validation,
            "semiinfinite": report,
        }),
        tsv,
    })
}

fn matrix_tsv(g: &LieSuperAlgebra, d: &DecompositionMatrix) -> String {
    let mut s = String::from("K\\L");
    for w in &d.weights {
        s += &format!("\t{}", g.weight_label(w));
    }
    s.push('\n');
    for (i, w) in d.weights.iter().enumerate() {
        s += &g.weight_label(w);
        for x in &d.entries[i] {
            s += &format!("\t{x}");
        }
        s.push('\n');
    }
    s
}

fn decompose(cfg: &RunConfig, out: &Option<PathBuf>) -> Result<Body> {
    let g = parse_algebra(cfg)?;
    let win = parse_window(cfg, &g)?;
    let body = match g.grading {
        GradingKind::Compatible => {
            let wb = workbench(cfg, g.clone())?;
            let d = decomposition_matrix(&wb, &win)?;
            let bl: Vec<Vec<String>> = blocks(&d).iter().map(|b| labels(&g, b)).collect();
            let unitriangular = d.is_unitriangular(&g);
            Body {
                passed: unitriangular,
                result: json!({
                    "weights": labels(&g, &d.weights),
                    "matrix": d.entries,
                    "unitriangular": unitriangular,
                    "outside_window": d.outside_labels(&g),
                    "blocks": bl,
                }),
                tsv: matrix_tsv(&g, &d),
            }
        }
        GradingKind::Principal => {
            let mut rows = Vec::new();
            let mut tsv = String::from("lambda\tfactor\tmult\n");
            for lam in &win.list() {
                let t = verma_decomposition_truncated(&g, lam, cfg.depth)?;
                for (f, k) in &t.factors {
                    tsv += &format!("{}\t{f}\t{k}\n", g.weight_label(lam));
                }
                rows.push(json!({"lambda": g.weight_label(lam), "factors": t.factors}));
            }
            Body {
                passed: true,
                result: json!({"depth_limited": true, "depth": cfg.depth, "vermas": rows}),
                tsv,
            }
        }
        _ => return Err(Error::Unsupported("decomposition numbers are computed for gl(m|n)".into())),
    };
    if let Some(dir) = out {
        let io = |e: std::io::Error| Error::Precondition(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(io)?;
        let report = wrap(cfg, "decompose", EXIT_PASS, &body, None);
        std::fs::write(dir.join("decomposition.json"), to_json(&report)).map_err(io)?;
        std::fs::write(dir.join("decomposition.tsv"), tsv_with_header(cfg, &body.tsv)).map_err(io)?;
    }
    Ok(body)
}

fn verify(cfg: &RunConfig, which: Which) -> Result<Body> {
    let g = parse_algebra(cfg)?;
    if g.grading != GradingKind::Compatible {
        return Err(Error::Unsupported("verification runs on gl(m|n) with the compatible grading".into()));
    }
    let win = parse_window(cfg, &g)?;
    let wide = win.widened(&g, cfg.margin);
    let wb = workbench(cfg, g.clone())?;
    let all = which == Which::All;
    let mut checks = serde_json::Map::new();
    let mut tsv = String::from("check\tpassed\tdetail\n");
    let mut passed = true;
    let mut record = |name: &str, ok: bool, detail: String, v: Value| {
        passed &= ok;
        tsv.push_str(&format!("{name}\t{ok}\t{detail}\n"));
        checks.insert(name.to_string(), json!({"passed": ok, "report": v}));
    };
    if all || which == Which::Sl1 {
        let r = verify_orthogonality(&wb, &win)?;
        record("sl1", r.passed(), format!("{} pairs", r.pairs_checked), serde_json::to_value(&r).unwrap());
    }
    if all || which == Which::Bgg {
        let r = verify_bgg(&wb, &win, &wide)?;
        let detail = format!("{} rows, {} excluded", r.composition.rows.len(), r.excluded.len());
        record("bgg", r.passed(), detail, serde_json::to_value(&r).unwrap());
    }
    if all || which == Which::Kdual {
        let mut rows = Vec::new();
        let mut ok = true;
        for lam in &win.list() {
            let r = verify_kdual(&wb, lam)?;
            ok &= r.holds;
            rows.push(r);
        }
        record("kdual", ok, format!("{} weights", rows.len()), serde_json::to_value(&rows).unwrap());
    }
    if all || which == Which::Pdual {
        let mut rows = Vec::new();
        let mut excluded = Vec::new();
        let mut ok = true;
        for lam in &win.list() {
            let r = match verify_pdual(&wb, lam, &wide.weights) {
                Ok(r) => r,
                Err(Error::Window(w)) => {
                    excluded.push(json!({"lambda": g.weight_label(lam), "outside": w}));
                    continue;
                }
                Err(Error::Resource(m)) => return Err(Error::Resource(format!("{}: {m}", g.weight_label(lam)))),
                Err(e) => return Err(e),
            };
            let t = tilting_module(&wb, lam, &wide.weights)?;
            let cert = certify_tilting(&wb, lam, &t)?;
            ok &= r.holds && cert.holds();
            rows.push(json!({"duality": r, "tilting": cert, "dim": t.module.dim()}));
        }
        let detail = format!("{} weights, {} excluded", rows.len(), excluded.len());
        record("pdual", ok, detail, json!({"rows": rows, "excluded": excluded}));
    }
    if all || which == Which::Kdt {
        let r = tilting_table(&wb, &win, &wide)?;
        let detail = format!("{} rows, {} excluded", r.table.rows.len(), r.excluded.len());
        record("kdt", r.table.passed(), detail, serde_json::to_value(&r).unwrap());
    }
    Ok(Body {
        passed,
        result: json!({"window": labels(&g, &win.list()), "checks": checks}),
        tsv,
    })
}

fn wrap(cfg: &RunConfig, command: &str, code: i32, body: &Body, error: Option<String>) -> Value {
    json!({
        "tool": "tiltbench",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "config": cfg,
        "seed": cfg.seed,
        "status": status(code),
        "exit_code": code,
        "error": error,
        "result": body.result,
    })
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn tsv_with_header(cfg: &RunConfig, body: &str) -> String {
    format!(
        "# tiltbench {} seed={} config={}\n{body}",
        env!("CARGO_PKG_VERSION"),
        cfg.seed,
        serde_json::to_string(cfg).expect("config serializes")
    )
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let cfg = &cli.config;
    let (name, res) = match &cli.command {
        Command::CheckSemiinfinite { gamma } => ("check-semiinfinite", check_semiinfinite(cfg, gamma)),
        Command::Decompose { out } => ("decompose", decompose(cfg, out)),
        Command::Verify { which } => ("verify", verify(cfg, *which)),
    };
    let (code, body, error) = match res {
        Ok(b) => (if b.passed { EXIT_PASS } else { EXIT_VIOLATED }, b, None),
        Err(e) => {
            let b = Body {
                passed: false,
                result: Value::Null,
                tsv: String::new(),
            };
            (exit_code(&e), b, Some(e.to_string()))
        }
    };
    let stdout = match cfg.format {
        Format::Json => to_json(&wrap(cfg, name, code, &body, error.clone())),
        Format::Tsv => tsv_with_header(cfg, &body.tsv),
    };
    Outcome {
        code,
        stdout,
        stderr: error.map(|e| format!("tiltbench: {e}\n")).unwrap_or_default(),
    }
}
