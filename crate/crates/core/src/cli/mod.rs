//! Command-line front end. [`run`] parses arguments, dispatches one
//! computation and writes a deterministic report.

mod files;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

pub use files::{
    parse_coordinates, parse_points, parse_polytope, parse_space, parse_space_file, serialize_space,
    space_from_file, InputError, PolytopeFile, SpaceFile,
};

use crate::algebra::Exponent;
use crate::config::ComputeConfig;
use crate::diffops::{
    annihilator_weight_dim, difference_weights, evaluation_image, evaluation_image_bounded,
    preserving_weight_space,
};
use crate::error::Error;
use crate::jets::{n_inj_at, weierstrass_minors, weierstrass_scan, EvalPoint, SubspaceV};
use crate::toric::{
    faces, n1_surj_toric, n_inj_face, n_inj_max, n_surj_toric, smooth_check, toric_report,
    LatticePolytope,
};
use crate::verify::{verify_hirzebruch, verify_veronese, VerifyReport};

#[derive(Parser, Debug)]
#[command(name = "jetorder", version, about = "Jet orders of polynomial spaces and lattice polytopes")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized steps; overrides any seed in the input file.
    #[arg(long, global = true, env = "JETORDER_SEED")]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Injectivity and surjectivity orders at a point or generically.
    Orders {
        space: PathBuf,
        /// Comma-separated rational coordinates, e.g. `0,1/2`.
        #[arg(long, conflicts_with = "generic", required_unless_present = "generic", allow_hyphen_values = true)]
        at: Option<String>,
        #[arg(long)]
        generic: bool,
    },
    /// Order reports at every point of a point-list file.
    Scan {
        space: PathBuf,
        #[arg(long)]
        points: PathBuf,
    },
    /// Maximal minors cutting out the Weierstrass locus.
    Minors { space: PathBuf },
    /// Preserving differential operators of bounded order.
    Dv {
        space: PathBuf,
        #[arg(long)]
        order: u32,
        /// Weight window `lo:hi` applied to every coordinate; defaults to
        /// the difference set of the monomials.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        /// Coefficient degree bound for spaces without a monomial basis.
        #[arg(long)]
        coefficient_degree: Option<u32>,
    },
    /// Polytope combinatorics and orbit-wise orders.
    Toric {
        polytope: PathBuf,
        /// Full report; orbit-wise fields are null unless smooth.
        #[arg(long)]
        report: bool,
        #[arg(long)]
        n_surj: bool,
        #[arg(long)]
        n1_surj: bool,
        #[arg(long)]
        n_inj_max: bool,
        /// Injectivity order of every face orbit.
        #[arg(long)]
        faces: bool,
    },
    /// Known-answer suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    Veronese {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
    },
    Hirzebruch {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(#[from] InputError),
    #[error("{0}")]
    Compute(#[from] Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Input(e) => e.code(),
            CliError::Compute(_) => "E100",
            CliError::Io { .. } => "E200",
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    version: &'a str,
    seed: u64,
    input: Value,
    result: Value,
}

struct Outcome {
    command: &'static str,
    input: Value,
    result: Value,
    text: String,
    failed: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_space(path: &Path, base: &ComputeConfig, seed: Option<u64>) -> Result<(SubspaceV, SpaceFile, ComputeConfig), CliError> {
    let (v, file) = parse_space(&read(path)?)?;
    let mut cfg = file.apply(base);
    if let Some(s) = seed {
        cfg.seed = s;
    }
    Ok((v, file, cfg))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn parse_window(text: &str) -> Result<(i64, i64), InputError> {
    let bad = || InputError::Invalid(format!("weight window '{text}' is not of the form lo:hi"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn window_weights(nvars: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..nvars).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |t| {
                    let mut q = p.clone();
                    q.push(t);
                    q
                })
            })
            .collect()
    })
}

fn verify_outcome(report: VerifyReport, input: Value) -> Outcome {
    Outcome {
        command: "verify",
        input,
        text: report.to_string(),
        failed: !report.pass,
        result: to_value(&report),
    }
}

fn dispatch(cli: &Cli) -> Result<(Outcome, u64), CliError> {
    let base = ComputeConfig::default();
    let seed_or = |cfg: &ComputeConfig| cli.seed.unwrap_or(cfg.seed);
    match &cli.command {
        Command::Orders { space, at, generic } => {
            let (v, file, cfg) = load_space(space, &base, cli.seed)?;
            let point = match at {
                Some(text) => EvalPoint::At(parse_coordinates(text)?),
                None => {
                    debug_assert!(*generic);
                    EvalPoint::Generic
                }
            };
            let report = n_inj_at(&v, &point, &cfg)?;
            let text = format!(
                "point {}\n  n_inj {}\n  n_surj {}\n  rank profile {:?}\n  gap sequence {:?}\n  Weierstrass order {}\n  rank method {:?}",
                report.point, report.n_inj, report.n_surj, report.rank_profile, report.gap_sequence,
                report.weierstrass_order, report.method
            );
            let input = json!({"space": to_value(&file), "point": to_value(&point)});
            Ok((Outcome { command: "orders", input, result: to_value(&report), text, failed: false }, cfg.seed))
        }
        Command::Scan { space, points } => {
            let (v, file, cfg) = load_space(space, &base, cli.seed)?;
            let pts = parse_points(&read(points)?, v.nvars())?;
            let reports = weierstrass_scan(&v, &pts, &cfg)?;
            let text = reports
                .iter()
                .map(|r| {
                    format!(
                        "{}: n_inj {}, n_surj {}, Weierstrass order {}",
                        r.point, r.n_inj, r.n_surj, r.weierstrass_order
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let input = json!({"space": to_value(&file), "points": to_value(&pts.iter().map(|p| EvalPoint::At(p.clone())).collect::<Vec<_>>())});
            Ok((Outcome { command: "scan", input, result: to_value(&reports), text, failed: false }, cfg.seed))
        }
        Command::Minors { space } => {
            let (v, file, cfg) = load_space(space, &base, cli.seed)?;
            let report = weierstrass_minors(&v, &cfg)?;
            let mut text = format!(
                "order {}, {} nonzero of {} minors{}",
                report.order,
                report.minors.len(),
                report.total,
                if report.truncated { " (truncated)" } else { "" }
            );
            for (cols, p) in &report.minors {
                text.push_str(&format!("\n  {cols:?}: {p}"));
            }
            let input = json!({"space": to_value(&file)});
            Ok((Outcome { command: "minors", input, result: to_value(&report), text, failed: false }, cfg.seed))
        }
        Command::Dv { space, order, weights, coefficient_degree } => {
            let (v, file, cfg) = load_space(space, &base, cli.seed)?;
            let n = *order;
            let input = json!({"space": to_value(&file), "order": n, "weights": weights, "coefficient_degree": coefficient_degree});
            let Some(points) = v.monomial_points() else {
                let bound = coefficient_degree.ok_or_else(|| {
                    InputError::Invalid("space has no monomial basis; pass --coefficient-degree".into())
                })?;
                let image = evaluation_image_bounded(&v, n, bound)?;
                let text = format!("image in End(V): rank {} of {}", image.rank, image.dim_v * image.dim_v);
                let result = json!({"image": to_value(&image), "full": image.is_full()});
                return Ok((Outcome { command: "dv", input, result, text, failed: false }, cfg.seed));
            };
            let ws = match weights {
                Some(w) => {
                    let (lo, hi) = parse_window(w)?;
                    window_weights(v.nvars(), lo, hi)
                }
                None => difference_weights(points),
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            for w in &ws {
                let space = preserving_weight_space(points, w, n)?;
                debug_assert_eq!(space.annihilator_dim, annihilator_weight_dim(points, w, n)?);
                if space.dim() > 0 || space.annihilator_dim > 0 {
                    let ops: Vec<String> = space.basis.iter().map(ToString::to_string).collect();
                    text.push_str(&format!(
                        "weight {:?}: dim {}, annihilator {}, basis [{}]\n",
                        w,
                        space.dim(),
                        space.annihilator_dim,
                        ops.join("; ")
                    ));
                }
                rows.push(to_value(&space));
            }
            let image = evaluation_image(&v, n)?;
            text.push_str(&format!("image in End(V): rank {} of {}", image.rank, image.dim_v * image.dim_v));
            let result = json!({"weights": rows, "image": to_value(&image), "full": image.is_full()});
            Ok((Outcome { command: "dv", input, result, text, failed: false }, cfg.seed))
        }
        Command::Toric { polytope, report, n_surj, n1_surj, n_inj_max: want_max, faces: want_faces } => {
            let (p, file) = parse_polytope(&read(polytope)?)?;
            let mut cfg = base.clone();
            if let Some(b) = file.very_ample_bound {
                cfg.very_ample_bound = b;
            }
            cfg.seed = cli.seed.or(file.seed).unwrap_or(cfg.seed);
            let (result, text) = toric_result(&p, &cfg, *report, *n_surj, *n1_surj, *want_max, *want_faces)?;
            let input = to_value(&file);
            Ok((Outcome { command: "toric", input, result, text, failed: false }, cfg.seed))
        }
        Command::Verify(v) => {
            let mut cfg = base.clone();
            cfg.seed = seed_or(&base);
            let (report, input) = match v {
                VerifyCommand::Veronese { n, m } => (verify_veronese(*n, *m, &cfg)?, json!({"family": "veronese", "n": n, "m": m})),
                VerifyCommand::Hirzebruch { r, k, l } => {
                    (verify_hirzebruch(*r, *k, *l, &cfg)?, json!({"family": "hirzebruch", "r": r, "k": k, "l": l}))
                }
            };
            Ok((verify_outcome(report, input), cfg.seed))
        }
    }
}

fn toric_result(
    p: &LatticePolytope,
    cfg: &ComputeConfig,
    full: bool,
    want_surj: bool,
    want_n1: bool,
    want_max: bool,
    want_faces: bool,
) -> Result<(Value, String), CliError> {
    if full {
        let r = toric_report(p, cfg)?;
        let mut text = format!(
            "points {}\nsmooth {}\nvery ample {}\nedge lengths {:?}\ns {}\nd_gonal {}\nN_inj {}",
            r.points, r.smooth, r.very_ample, r.edge_lengths, r.s, r.d_gonal, r.n_inj_generic
        );
        if let (Some(by_face), Some(max), Some(s), Some(n1)) = (&r.n_inj_by_face, r.n_inj_max, r.n_surj, r.n1_surj) {
            for f in by_face {
                text.push_str(&format!("\n  n_inj({}) = {}", f.face, f.n_inj));
            }
            text.push_str(&format!("\nn_inj max {max}\nn_surj {s}\nn1_surj {n1}"));
        }
        return Ok((to_value(&r), text));
    }
    let mut result = serde_json::Map::new();
    let mut lines = vec![format!("points {}", p.points.len())];
    lines.push(format!(
        "vertices {}",
        p.vertices.iter().map(Exponent::to_string).collect::<Vec<_>>().join(" ")
    ));
    for e in &p.edges {
        lines.push(format!(
            "  edge {}-{} direction {:?} length {}",
            p.vertices[e.endpoints.0], p.vertices[e.endpoints.1], e.direction, e.length
        ));
    }
    result.insert("points".into(), to_value(&p.points));
    result.insert("vertices".into(), to_value(&p.vertices));
    result.insert("edges".into(), to_value(&p.edges));
    if p.is_full_dimensional() {
        let smooth = smooth_check(p)?;
        lines.push(format!("smooth {}", smooth.smooth));
        result.insert("smooth".into(), to_value(&smooth));
    }
    if want_surj {
        let s = n_surj_toric(p)?;
        lines.push(format!("n_surj {s}"));
        result.insert("n_surj".into(), s.into());
    }
    if want_n1 {
        let (n1, per) = n1_surj_toric(p, cfg)?;
        lines.push(format!("n1_surj {n1}"));
        result.insert("n1_surj".into(), n1.into());
        result.insert("n1_surj_by_facet".into(), to_value(&per));
    }
    if want_max {
        let m = n_inj_max(p)?;
        lines.push(format!("n_inj max {m}"));
        result.insert("n_inj_max".into(), m.into());
    }
    if want_faces {
        let mut rows = Vec::new();
        for f in faces(p)? {
            let n = n_inj_face(p, &f)?;
            lines.push(format!("  n_inj({}) = {n}", f.label(p)));
            rows.push(json!({"face": f.label(p), "dim": f.dim, "n_inj": n}));
        }
        result.insert("n_inj_by_face".into(), Value::Array(rows));
    }
    Ok((Value::Object(result), lines.join("\n")))
}

/// Runs the tool on `args` (including the program name). Returns the exit
/// code: 0 on success, 1 when a verification fails, 2 on input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((outcome, seed)) => {
            let body = if cli.json {
                let env = Envelope {
                    command: outcome.command,
                    version: env!("CARGO_PKG_VERSION"),
                    seed,
                    input: outcome.input,
                    result: outcome.result,
                };
                serde_json::to_string_pretty(&env).expect("reports serialize")
            } else {
                outcome.text
            };
            let _ = writeln!(out, "{body}");
            i32::from(outcome.failed)
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            2
        }
    }
}
