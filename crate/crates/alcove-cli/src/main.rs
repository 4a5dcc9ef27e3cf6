//! Command-line front end for the fusion-ring engine: alcove enumeration,
//! dimension and twist tables, fusion products, candidate-summand scans,
//! bound tables, and a one-shot verification of the published reference
//! values.
//!
//! Reports are byte-deterministic: JSON objects serialize with sorted keys,
//! floats print at 12 significant digits, rationals print exactly as `p/q`,
//! and parallelism never changes (or appears in) the output. Exit codes:
//! 0 success, 1 verification mismatch, 2 usage error, 3 internal invariant
//! failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use alcove_core::catdata::{qdim, qdim_numerator_ext, twist_arg, twist_is_trivial, in_root_lattice};
use alcove_core::charweights::weyl_dim;
use alcove_core::etale_scan::{
    bound_comparison_rows, case_bound_report, containment_sweeps, known_survivor_checks,
    scan_level_with, CaseId, ScanFilters,
};
use alcove_core::fusion::tensor_product;
use alcove_core::lie_core::{enumerate_alcove, in_alcove, AlgebraId, Weight};
use alcove_core::qnum::{Dd, PrecisionMode};

#[derive(Parser)]
#[command(
    name = "alcove",
    version,
    about = "Fusion-ring engine and candidate-summand scanner for rank <= 2 affine algebras",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Report format (csv covers the tabular commands)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Precision mode; overrides the ALCOVE_PRECISION environment variable
    #[arg(long, global = true, value_enum)]
    precision: Option<PrecisionArg>,

    /// Worker threads for scans (0 = library default); overrides ALCOVE_PARALLEL
    #[arg(long, global = true)]
    parallel: Option<usize>,

    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the level-k alcove weights
    Alcove {
        #[arg(long)]
        algebra: Algebra,
        #[arg(long)]
        level: i64,
    },
    /// Classical and quantum dimensions of every alcove weight
    Dims {
        #[arg(long)]
        algebra: Algebra,
        #[arg(long)]
        level: i64,
    },
    /// Twist arguments and triviality flags of every alcove weight
    Twists {
        #[arg(long)]
        algebra: Algebra,
        #[arg(long)]
        level: i64,
    },
    /// Decompose the fusion product of two alcove weights
    Fusion {
        #[arg(long)]
        algebra: Algebra,
        #[arg(long)]
        level: i64,
        /// Left factor, written "s" (rank 1) or "s,t" (rank 2)
        left: String,
        /// Right factor, same syntax
        right: String,
    },
    /// Scan a level range for candidate algebra summands
    Scan {
        #[arg(long)]
        algebra: Algebra,
        /// Inclusive level range, written "A..B"
        #[arg(long)]
        levels: String,
        /// Permit ranges beyond the safety cap (more than 40 levels or past level 60)
        #[arg(long)]
        allow_large: bool,
    },
    /// Case thresholds and level bounds, with the published values alongside
    Bounds,
    /// Recompute every reference table and exit 1 on any mismatch
    VerifyPaper,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum PrecisionArg {
    Double,
    Extended,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Sl2,
    Sl3,
    So5,
    G2,
}

impl Algebra {
    fn id(self) -> AlgebraId {
        match self {
            Algebra::Sl2 => AlgebraId::A1,
            Algebra::Sl3 => AlgebraId::A2,
            Algebra::So5 => AlgebraId::B2,
            Algebra::G2 => AlgebraId::G2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Algebra::Sl2 => "sl2",
            Algebra::Sl3 => "sl3",
            Algebra::So5 => "so5",
            Algebra::G2 => "g2",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // usage errors exit directly with code 2; anything that panics past
    // argument validation is an engine invariant failure
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&cli))) {
        Ok(code) => ExitCode::from(code),
        Err(_) => {
            eprintln!("internal error: engine invariant failure, see the panic message above");
            ExitCode::from(3)
        }
    }
}

fn usage_error(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn resolve_precision(flag: Option<PrecisionArg>) -> PrecisionMode {
    match flag {
        Some(PrecisionArg::Double) => PrecisionMode::Double,
        Some(PrecisionArg::Extended) => PrecisionMode::Extended,
        None => match std::env::var("ALCOVE_PRECISION") {
            Ok(v) => match v.as_str() {
                "double" => PrecisionMode::Double,
                "extended" => PrecisionMode::Extended,
                other => usage_error(&format!(
                    "ALCOVE_PRECISION must be \"double\" or \"extended\", not {other:?}"
                )),
            },
            Err(_) => PrecisionMode::Double,
        },
    }
}

fn resolve_parallel(flag: Option<usize>) -> usize {
    match flag {
        Some(n) => n,
        None => match std::env::var("ALCOVE_PARALLEL") {
            Ok(v) => v
                .parse()
                .unwrap_or_else(|_| usage_error("ALCOVE_PARALLEL must be a thread count")),
            Err(_) => 0,
        },
    }
}

fn precision_name(mode: PrecisionMode) -> &'static str {
    match mode {
        PrecisionMode::Double => "double",
        PrecisionMode::Extended => "extended",
    }
}

fn report(command: &str, inputs: Value, mode: PrecisionMode, results: Value) -> Value {
    json!({
        "schema_version": 1,
        "command": command,
        "inputs": inputs,
        "provenance": {
            "engine": env!("CARGO_PKG_VERSION"),
            "precision": precision_name(mode),
        },
        "results": results,
    })
}

fn emit(text: String, output: Option<&Path>) {
    match output {
        Some(path) => std::fs::write(path, text)
            .unwrap_or_else(|e| usage_error(&format!("cannot write {}: {e}", path.display()))),
        None => print!("{text}"),
    }
}

fn emit_json(v: &Value, output: Option<&Path>) {
    let mut text = serde_json::to_string_pretty(v).expect("report serializes");
    text.push('\n');
    emit(text, output);
}

fn weight_str(alg: AlgebraId, w: Weight) -> String {
    let [s, t] = w.coords();
    if alg.data().rank == 1 {
        format!("{s}")
    } else {
        format!("{s},{t}")
    }
}

fn parse_weight(alg: AlgebraId, text: &str) -> Weight {
    let parts: Vec<i64> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .unwrap_or_else(|_| usage_error(&format!("weight coordinate {p:?} is not an integer")))
        })
        .collect();
    match (alg.data().rank, parts.as_slice()) {
        (1, [s]) => Weight::new(*s, 0),
        (2, [s, t]) => Weight::new(*s, *t),
        (1, _) => usage_error(&format!("{alg:?} weights take one coordinate, e.g. \"3\"")),
        _ => usage_error(&format!("{alg:?} weights take two coordinates, e.g. \"3,4\"")),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

fn require_level(level: i64, min: i64) {
    if level < min {
        usage_error(&format!("level must be at least {min}, got {level}"));
    }
}

/// Lattice column of the twists table. Published twist tables order the so5
/// nodes short root first, so their lattice column tests the parity of what
/// is the first label here; the scan records use the engine ordering.
fn twists_row_lattice(alg: AlgebraId, w: Weight) -> bool {
    match alg {
        AlgebraId::B2 => w.coords()[0] % 2 == 0,
        _ => in_root_lattice(alg, w),
    }
}

/// Quantum dimension of `w` at the active precision, printed at 12
/// significant digits.
fn qdim_str(alg: AlgebraId, level: i64, w: Weight, mode: PrecisionMode) -> String {
    let value = match mode {
        PrecisionMode::Double => qdim(alg, level, w).value,
        PrecisionMode::Extended => qdim_numerator_ext(alg, level, w)
            .div(qdim_numerator_ext(alg, level, Weight::new(0, 0)))
            .to_f64(),
    };
    format!("{value:.11e}")
}

fn run(cli: &Cli) -> u8 {
    let mode = resolve_precision(cli.precision);
    let output = cli.output.as_deref();
    match &cli.command {
        Cmd::Alcove { algebra, level } => {
            require_level(*level, 0);
            let alg = algebra.id();
            let weights: Vec<String> =
                enumerate_alcove(alg, *level).iter().map(|&w| weight_str(alg, w)).collect();
            match cli.format {
                Format::Json => {
                    let results = json!({ "count": weights.len(), "weights": weights });
                    let rep = report(
                        "alcove",
                        json!({ "algebra": algebra.name(), "level": level }),
                        mode,
                        results,
                    );
                    emit_json(&rep, output);
                }
                Format::Csv => {
                    let mut text = String::from("algebra,level,weight\n");
                    for w in &weights {
                        text.push_str(&format!(
                            "{},{},{}\n",
                            algebra.name(),
                            level,
                            csv_field(w)
                        ));
                    }
                    emit(text, output);
                }
            }
            0
        }
        Cmd::Dims { algebra, level } => {
            require_level(*level, 1);
            let alg = algebra.id();
            let rows: Vec<(String, i128, String)> = enumerate_alcove(alg, *level)
                .iter()
                .map(|&w| (weight_str(alg, w), weyl_dim(alg, w), qdim_str(alg, *level, w, mode)))
                .collect();
            match cli.format {
                Format::Json => {
                    let rows: Vec<Value> = rows
                        .iter()
                        .map(|(w, d, q)| {
                            let dim = i64::try_from(*d)
                                .map(Value::from)
                                .unwrap_or_else(|_| Value::from(d.to_string()));
                            json!({ "weight": w, "classical_dim": dim, "qdim": q })
                        })
                        .collect();
                    let rep = report(
                        "dims",
                        json!({ "algebra": algebra.name(), "level": level }),
                        mode,
                        json!({ "rows": rows }),
                    );
                    emit_json(&rep, output);
                }
                Format::Csv => {
                    let mut text = String::from("algebra,level,weight,classical_dim,qdim\n");
                    for (w, d, q) in &rows {
                        text.push_str(&format!(
                            "{},{},{},{},{}\n",
                            algebra.name(),
                            level,
                            csv_field(w),
                            d,
                            q
                        ));
                    }
                    emit(text, output);
                }
            }
            0
        }
        Cmd::Twists { algebra, level } => {
            require_level(*level, 1);
            let alg = algebra.id();
            let rows: Vec<(String, String, bool, bool)> = enumerate_alcove(alg, *level)
                .iter()
                .map(|&w| {
                    (
                        weight_str(alg, w),
                        twist_arg(alg, *level, w).value().to_string(),
                        twist_is_trivial(alg, *level, w),
                        twists_row_lattice(alg, w),
                    )
                })
                .collect();
            match cli.format {
                Format::Json => {
                    let rows: Vec<Value> = rows
                        .iter()
                        .map(|(w, arg, trivial, lattice)| {
                            json!({
                                "weight": w,
                                "arg": arg,
                                "trivial": trivial,
                                "in_root_lattice": lattice,
                            })
                        })
                        .collect();
                    let rep = report(
                        "twists",
                        json!({ "algebra": algebra.name(), "level": level }),
                        mode,
                        json!({ "rows": rows }),
                    );
                    emit_json(&rep, output);
                }
                Format::Csv => {
                    let mut text = String::from("algebra,level,weight,arg,trivial,in_root_lattice\n");
                    for (w, arg, trivial, lattice) in &rows {
                        text.push_str(&format!(
                            "{},{},{},{},{},{}\n",
                            algebra.name(),
                            level,
                            csv_field(w),
                            csv_field(arg),
                            trivial,
                            lattice
                        ));
                    }
                    emit(text, output);
                }
            }
            0
        }
        Cmd::Fusion { algebra, level, left, right } => {
            require_level(*level, 0);
            let alg = algebra.id();
            let lam = parse_weight(alg, left);
            let gam = parse_weight(alg, right);
            for (w, text) in [(lam, left), (gam, right)] {
                if !in_alcove(alg, *level, w) {
                    usage_error(&format!(
                        "weight {text} lies outside the level-{level} alcove of {}",
                        algebra.name()
                    ));
                }
            }
            let product = tensor_product(alg, *level, lam, gam);
            let entries: Vec<(String, i64)> =
                product.iter().map(|(&w, &n)| (weight_str(alg, w), n)).collect();
            let total: i64 = product.values().sum();
            match cli.format {
                Format::Json => {
                    let rows: Vec<Value> = entries
                        .iter()
                        .map(|(w, n)| json!({ "weight": w, "mult": n }))
                        .collect();
                    let results = json!({
                        "distinct": entries.len(),
                        "total": total,
                        "entries": rows,
                        "qdim_residual": fusion_residual(alg, *level, lam, gam, &product, mode),
                    });
                    let rep = report(
                        "fusion",
                        json!({
                            "algebra": algebra.name(),
                            "level": level,
                            "left": left,
                            "right": right,
                        }),
                        mode,
                        results,
                    );
                    emit_json(&rep, output);
                }
                Format::Csv => {
                    let mut text = String::from("weight,mult\n");
                    for (w, n) in &entries {
                        text.push_str(&format!("{},{n}\n", csv_field(w)));
                    }
                    emit(text, output);
                }
            }
            0
        }
        Cmd::Scan { algebra, levels, allow_large } => {
            let (lo, hi) = parse_levels(levels);
            let count = hi - lo + 1;
            if (count > 40 || hi > 60) && !allow_large {
                usage_error(&format!(
                    "scanning {count} levels up to {hi} exceeds the safety cap \
                     (40 levels, top level 60); pass --allow-large to proceed"
                ));
            }
            let alg = algebra.id();
            let threads = resolve_parallel(cli.parallel);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("worker pool builds");
            let level_list: Vec<i64> = (lo..=hi).collect();
            // indexed parallel map keeps level order, so output is identical
            // for every thread count
            let scans: Vec<(i64, Vec<Value>)> = pool.install(|| {
                level_list
                    .par_iter()
                    .map(|&k| {
                        let survivors: Vec<Value> =
                            scan_level_with(alg, k, ScanFilters::default(), mode)
                                .into_iter()
                                .map(|c| {
                                    json!({
                                        "weight": weight_str(alg, c.weight),
                                        "norm": c.norm.to_string(),
                                        "twist_trivial": c.twist_trivial,
                                        "in_root_lattice": c.in_root_lattice,
                                    })
                                })
                                .collect();
                        (k, survivors)
                    })
                    .collect()
            });
            match cli.format {
                Format::Json => {
                    let levels_json: Vec<Value> = scans
                        .iter()
                        .map(|(k, survivors)| {
                            json!({ "level": k, "count": survivors.len(), "survivors": survivors })
                        })
                        .collect();
                    let rep = report(
                        "scan",
                        json!({ "algebra": algebra.name(), "levels": levels }),
                        mode,
                        json!({ "levels": levels_json }),
                    );
                    emit_json(&rep, output);
                }
                Format::Csv => {
                    let mut text = String::from("algebra,level,weight\n");
                    for (k, survivors) in &scans {
                        for s in survivors {
                            text.push_str(&format!(
                                "{},{k},{}\n",
                                algebra.name(),
                                csv_field(s["weight"].as_str().unwrap())
                            ));
                        }
                    }
                    emit(text, output);
                }
            }
            0
        }
        Cmd::Bounds => {
            let cases: Vec<Value> = CaseId::all()
                .into_iter()
                .map(|case| {
                    let r = case_bound_report(case);
                    json!({
                        "case": r.case.label(),
                        "group": r.group.label(),
                        "max_param": r.max_param,
                        "published_max_param": opt_i64(r.published_max_param),
                        "level_bound": r.level_bound,
                        "published_level_bound": opt_i64(r.published_level_bound),
                    })
                })
                .collect();
            let rows = bound_comparison_rows();
            match cli.format {
                Format::Json => {
                    let rows_json: Vec<Value> = rows.iter().map(bound_row_json).collect();
                    let rep = report(
                        "bounds",
                        json!({}),
                        mode,
                        json!({ "case_reports": cases, "comparison_rows": rows_json }),
                    );
                    emit_json(&rep, output);
                }
                Format::Csv => {
                    let mut text = String::from("label,computed,published,match\n");
                    for r in &rows {
                        let published =
                            r.published.map(|p| p.to_string()).unwrap_or_default();
                        text.push_str(&format!(
                            "{},{},{},{}\n",
                            csv_field(&r.label),
                            r.computed,
                            published,
                            r.matches()
                        ));
                    }
                    emit(text, output);
                }
            }
            0
        }
        Cmd::VerifyPaper => {
            if cli.format == Format::Csv {
                usage_error("verify-paper emits a multi-section report; csv is not available");
            }
            let rows = bound_comparison_rows();
            let mismatch_labels: Vec<&str> =
                rows.iter().filter(|r| !r.matches()).map(|r| r.label.as_str()).collect();
            let rows_json: Vec<Value> = rows.iter().map(bound_row_json).collect();

            let sweeps = containment_sweeps();
            let sweep_total: usize = sweeps.iter().map(|s| s.instances).sum();
            let sweep_failures: usize = sweeps.iter().map(|s| s.failures.len()).sum();
            let families: Vec<Value> = sweeps
                .iter()
                .map(|s| {
                    json!({
                        "label": s.label,
                        "instances": s.instances,
                        "failures": s.failures,
                    })
                })
                .collect();

            let survivor_checks = known_survivor_checks();
            let survivor_mismatches =
                survivor_checks.iter().filter(|c| !c.matches()).count();
            let survivors_json: Vec<Value> = survivor_checks
                .iter()
                .map(|c| {
                    let fmt = |ws: &[Weight]| -> Vec<String> {
                        ws.iter().map(|&w| weight_str(c.algebra, w)).collect()
                    };
                    json!({
                        "algebra": format!("{:?}", c.algebra),
                        "level": c.level,
                        "expected": fmt(&c.expected),
                        "got": fmt(&c.got),
                        "match": c.matches(),
                    })
                })
                .collect();

            let ok = mismatch_labels.is_empty() && sweep_failures == 0 && survivor_mismatches == 0;
            let results = json!({
                "overall": if ok { "PASS" } else { "FAIL" },
                "bounds": {
                    "rows": rows_json,
                    "mismatches": mismatch_labels.len(),
                    "mismatch_labels": mismatch_labels,
                },
                "sweeps": {
                    "families": families,
                    "total": sweep_total,
                    "failures": sweep_failures,
                },
                "survivors": {
                    "checks": survivors_json,
                    "total": survivor_checks.len(),
                    "mismatches": survivor_mismatches,
                },
            });
            let rep = report("verify-paper", json!({}), mode, results);
            emit_json(&rep, output);
            u8::from(!ok)
        }
    }
}

fn opt_i64(v: Option<i64>) -> Value {
    v.map(Value::from).unwrap_or(Value::Null)
}

fn bound_row_json(r: &alcove_core::etale_scan::BoundRow) -> Value {
    json!({
        "label": r.label,
        "computed": r.computed,
        "published": opt_i64(r.published),
        "match": r.matches(),
    })
}

fn parse_levels(text: &str) -> (i64, i64) {
    let parse = |p: &str| -> i64 {
        p.trim()
            .parse()
            .unwrap_or_else(|_| usage_error(&format!("level {p:?} is not an integer")))
    };
    let Some((lo, hi)) = text.split_once("..") else {
        usage_error(&format!("levels must be an inclusive range \"A..B\", got {text:?}"));
    };
    let (lo, hi) = (parse(lo), parse(hi));
    if lo < 1 || hi < lo {
        usage_error(&format!("level range {text:?} is empty or starts below 1"));
    }
    (lo, hi)
}

/// Relative gap between the product of the factors' quantum dimensions and
/// the multiplicity-weighted sum over the decomposition.
fn fusion_residual(
    alg: AlgebraId,
    level: i64,
    lam: Weight,
    gam: Weight,
    product: &alcove_core::fusion::FusionVector,
    mode: PrecisionMode,
) -> String {
    let value = match mode {
        PrecisionMode::Double => {
            let lhs = qdim(alg, level, lam).value * qdim(alg, level, gam).value;
            let rhs: f64 = product
                .iter()
                .map(|(&w, &n)| n as f64 * qdim(alg, level, w).value)
                .sum();
            (lhs - rhs).abs() / lhs.abs().max(1.0)
        }
        PrecisionMode::Extended => {
            let unit = qdim_numerator_ext(alg, level, Weight::new(0, 0));
            let qd = |w: Weight| qdim_numerator_ext(alg, level, w).div(unit);
            let lhs = qd(lam).mul(qd(gam));
            let mut rhs = Dd::ZERO;
            for (&w, &n) in product.iter() {
                rhs = rhs.add(Dd::from_f64(n as f64).mul(qd(w)));
            }
            let gap = lhs.sub(rhs).abs().to_f64();
            gap / lhs.to_f64().abs().max(1.0)
        }
    };
    format!("{value:.11e}")
}
