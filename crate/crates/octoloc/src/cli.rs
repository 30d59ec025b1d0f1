//! Batch front-end: read a complex file, run a checker / builder /
//! measurement, emit a JSON report with a stable exit code.
//!
//! Exit code contract: 0 = property holds / build ok; 1 = property fails
//! (witness in the report); 2 = UNKNOWN verdicts present; 3 = input or
//! config error. UNKNOWN is never folded into pass or fail.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::complex::SimplicialComplex;
use crate::conditions::{
    check_sd_prime, check_sd_prime_all, is_k_large, is_locally_k_large, is_m_located,
    LocationStatus, LocationVerdict,
};
use crate::cover::{build_cover, grow, init_cover, verify_covering, CoverState};
use crate::generators::{generate, GeneratorSpec};
use crate::hyperbolicity::{delta_report, max_interval_diameter};
use crate::io;
use crate::loops::DEFAULT_HOMOTOPY_BUDGET;
use crate::report::{
    envelope, input_info, write_report, EXIT_ERROR, EXIT_FAIL, EXIT_OK, EXIT_UNKNOWN,
};

#[derive(Debug, Parser)]
#[command(
    name = "octoloc",
    version,
    about = "Curvature condition checkers, cover builder, and hyperbolicity \
             measurements for finite flag simplicial complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads for the measurement scans (default: available
    /// parallelism). Verdicts and witnesses do not depend on this.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Complex file (see the README for the format).
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex/edge counts, flagness, connectivity, diameter.
    Info(InputArg),
    /// Decide m-location (default m = 8).
    CheckLocation {
        #[command(flatten)]
        input: InputArg,
        #[arg(short, long, default_value_t = 8)]
        m: usize,
        /// Homotopy move budget per loop.
        #[arg(long, default_value_t = DEFAULT_HOMOTOPY_BUDGET)]
        budget: usize,
    },
    /// Decide k-largeness (or local k-largeness with --local).
    CheckKlarge {
        #[command(flatten)]
        input: InputArg,
        #[arg(short, long)]
        k: usize,
        #[arg(long)]
        local: bool,
    },
    /// Check SD' from one base vertex (--base), or from all of them.
    CheckSd {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        base: Option<usize>,
        /// Radius; defaults to the base vertex's eccentricity.
        #[arg(short, long)]
        n: Option<usize>,
    },
    /// Grow the radius-truncated universal cover, verifying every stage.
    BuildCover {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 0)]
        base: usize,
        /// Cover radius; defaults to the base vertex's eccentricity.
        #[arg(short, long)]
        radius: Option<usize>,
        /// Write each stage ball, f.json, and classes.json into this
        /// directory.
        #[arg(long)]
        emit_stages: Option<PathBuf>,
        /// Skip the advisory 8-location pre-check.
        #[arg(long)]
        skip_location_check: bool,
    },
    /// Max interval-layer diameter over all endpoint pairs (passes at <= 2).
    Thinness(InputArg),
    /// Exact four-point delta.
    Delta(InputArg),
    /// The full pipeline: check 8-location, build the cover, measure
    /// thinness and delta on it.
    VerifyHyperbolic {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 0)]
        base: usize,
        #[arg(short, long)]
        radius: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_HOMOTOPY_BUDGET)]
        budget: usize,
        #[arg(long)]
        emit_stages: Option<PathBuf>,
    },
    /// Write a generated complex in the file format.
    Generate {
        /// Generator spec, e.g. "wheel(6)", "triangular_lattice_disk(3)",
        /// "join(path(2),discrete(2))", "random_flag(10,0.4,7)".
        #[arg(long)]
        spec: String,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

/// Parses the command line, runs it, writes the report, returns the exit
/// code for the process.
pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
    let (code, report) = run(&cli.command, threads);
    if let Err(err) = write_report(&report, cli.output.as_deref()) {
        eprintln!("cannot write report: {err}");
        return EXIT_ERROR;
    }
    code
}

struct LoadedInput {
    complex: SimplicialComplex,
    info: Value,
}

fn load(input: &InputArg) -> Result<LoadedInput, String> {
    let bytes = fs::read(&input.input).map_err(|e| format!("{}: {e}", input.input.display()))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| format!("{}: not UTF-8", input.input.display()))?;
    let complex =
        io::parse_complex(&text).map_err(|e| format!("{}: {e}", input.input.display()))?;
    let info = input_info(
        &input.input,
        &bytes,
        complex.n_vertices(),
        complex.n_edges(),
    );
    Ok(LoadedInput { complex, info })
}

fn error_report(command: &str, config: Value, message: String) -> (i32, Value) {
    (
        EXIT_ERROR,
        envelope(
            command,
            "error",
            EXIT_ERROR,
            config,
            None,
            json!({ "error": message }),
        ),
    )
}

/// Runs one command. Pure apart from filesystem access for input/stages.
pub fn run(command: &Command, threads: usize) -> (i32, Value) {
    match command {
        Command::Info(input) => cmd_info(input, threads),
        Command::CheckLocation { input, m, budget } => {
            cmd_check_location(input, *m, *budget, threads)
        }
        Command::CheckKlarge { input, k, local } => cmd_check_klarge(input, *k, *local, threads),
        Command::CheckSd { input, base, n } => cmd_check_sd(input, *base, *n, threads),
        Command::BuildCover {
            input,
            base,
            radius,
            emit_stages,
            skip_location_check,
        } => cmd_build_cover(
            input,
            *base,
            *radius,
            emit_stages.as_deref(),
            *skip_location_check,
            threads,
        ),
        Command::Thinness(input) => cmd_thinness(input, threads),
        Command::Delta(input) => cmd_delta(input, threads),
        Command::VerifyHyperbolic {
            input,
            base,
            radius,
            budget,
            emit_stages,
        } => cmd_verify_hyperbolic(
            input,
            *base,
            *radius,
            *budget,
            emit_stages.as_deref(),
            threads,
        ),
        Command::Generate { spec, out } => cmd_generate(spec, out.as_deref(), threads),
    }
}

fn cmd_info(input: &InputArg, threads: usize) -> (i32, Value) {
    let config = json!({ "threads": threads });
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return error_report("info", config, e),
    };
    let x = &loaded.complex;
    let payload = json!({
        "n_vertices": x.n_vertices(),
        "n_edges": x.n_edges(),
        "n_triangles": x.triangles().len(),
        "is_flag": x.is_flag(),
        "connected": x.is_connected(),
        "diameter": x.diameter(),
        "declared_simplices": x.declared_simplices().map(|s| s.len()),
    });
    (
        EXIT_OK,
        envelope("info", "ok", EXIT_OK, config, Some(loaded.info), payload),
    )
}

fn location_payload(verdict: &LocationVerdict) -> Value {
    json!({
        "condition": "m-location",
        "witness": verdict.witness.as_ref().map(|w| json!({
            "cycle": w.cycle.vertices(),
            "filling": w.filling,
        })),
        "unknowns": verdict
            .unknowns
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect::<Vec<_>>(),
    })
}

fn cmd_check_location(input: &InputArg, m: usize, budget: usize, threads: usize) -> (i32, Value) {
    let config = json!({ "m": m, "budget": budget, "threads": threads });
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return error_report("check-location", config, e),
    };
    let verdict = match is_m_located(&loaded.complex, m, budget) {
        Ok(v) => v,
        Err(e) => return error_report("check-location", config, e.to_string()),
    };
    let (code, status) = match verdict.status {
        LocationStatus::Located => (EXIT_OK, "located"),
        LocationStatus::NotLocated => (EXIT_FAIL, "not_located"),
        LocationStatus::Unknown => (EXIT_UNKNOWN, "unknown"),
    };
    (
        code,
        envelope(
            "check-location",
            status,
            code,
            config,
            Some(loaded.info),
            location_payload(&verdict),
        ),
    )
}

fn cmd_check_klarge(input: &InputArg, k: usize, local: bool, threads: usize) -> (i32, Value) {
    let config = json!({ "k": k, "local": local, "threads": threads });
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return error_report("check-klarge", config, e),
    };
    let x = &loaded.complex;
    let (holds, witness): (bool, Value) = if local {
        match is_locally_k_large(x, k) {
            Ok(v) => (
                v.is_locally_k_large,
                v.witness.map_or(
                    Value::Null,
                    |(vertex, cycle)| json!({ "link_vertex": vertex, "cycle": cycle.vertices() }),
                ),
            ),
            Err(e) => return error_report("check-klarge", config, e.to_string()),
        }
    } else {
        match is_k_large(x, k) {
            Ok(v) => (
                v.is_k_large,
                v.witness
                    .map_or(Value::Null, |cycle| json!({ "cycle": cycle.vertices() })),
            ),
            Err(e) => return error_report("check-klarge", config, e.to_string()),
        }
    };
    let (code, status) = if holds {
        (EXIT_OK, "ok")
    } else {
        (EXIT_FAIL, "fail")
    };
    let condition = if local { "locally-k-large" } else { "k-large" };
    (
        code,
        envelope(
            "check-klarge",
            status,
            code,
            config,
            Some(loaded.info),
            json!({ "condition": condition, "witness": witness }),
        ),
    )
}

fn cmd_check_sd(
    input: &InputArg,
    base: Option<usize>,
    n: Option<usize>,
    threads: usize,
) -> (i32, Value) {
    let config = json!({ "base": base, "n": n, "threads": threads });
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return error_report("check-sd", config, e),
    };
    let x = &loaded.complex;
    let reports = match base {
        Some(base) => {
            let n = n.unwrap_or_else(|| x.eccentricity(base));
            match check_sd_prime(x, base, n) {
                Ok(r) => vec![r],
                Err(e) => return error_report("check-sd", config, e.to_string()),
            }
        }
        None => match check_sd_prime_all(x, n) {
            Ok(r) => r,
            Err(e) => return error_report("check-sd", config, e.to_string()),
        },
    };
    let ok = reports.iter().all(|r| r.ok);
    let (code, status) = if ok {
        (EXIT_OK, "ok")
    } else {
        (EXIT_FAIL, "fail")
    };
    (
        code,
        envelope(
            "check-sd",
            status,
            code,
            config,
            Some(loaded.info),
            json!({ "condition": "sd-prime", "reports": reports }),
        ),
    )
}

fn cover_payload(state: &CoverState, x: &SimplicialComplex) -> Value {
    let covering = verify_covering(state, x);
    json!({
        "cover": {
            "stage": state.stage(),
            "n_vertices": state.ball().n_vertices(),
            "n_edges": state.ball().n_edges(),
            "class_vertices": state.class_records().len(),
        },
        "covering_check": covering,
    })
}

fn emit_stages(
    dir: &Path,
    x: &SimplicialComplex,
    base: usize,
    radius: usize,
) -> Result<CoverState, String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut state = init_cover(x, base).map_err(|e| e.to_string())?;
    let write_stage = |state: &CoverState| -> Result<(), String> {
        let path = dir.join(format!("stage_{}.cplx", state.stage()));
        io::write_complex_file(&path, state.ball()).map_err(|e| e.to_string())
    };
    write_stage(&state)?;
    while state.stage() < radius {
        state = grow(state, x).map_err(|e| e.to_string())?;
        write_stage(&state)?;
    }
    let f_json = json!({
        "schema": 1,
        "base": base,
        "stage": state.stage(),
        "map": state.map(),
        "layer": state.layer(),
    });
    fs::write(
        dir.join("f.json"),
        format!("{}\n", serde_json::to_string_pretty(&f_json).unwrap()),
    )
    .map_err(|e| e.to_string())?;
    let classes_json = json!({ "schema": 1, "classes": state.class_records() });
    fs::write(
        dir.join("classes.json"),
        format!("{}\n", serde_json::to_string_pretty(&classes_json).unwrap()),
    )
    .map_err(|e| e.to_string())?;
    Ok(state)
}

fn cmd_build_cover(
    input: &InputArg,
    base: usize,
    radius: Option<usize>,
    stages_dir: Option<&Path>,
    skip_location_check: bool,
    threads: usize,
) -> (i32, Value) {
    let config = json!({
        "base": base,
        "radius": radius,
        "emit_stages": stages_dir.map(|p| p.display().to_string()),
        "skip_location_check": skip_location_check,
        "threads": threads,
    });
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return error_report("build-cover", config, e),
    };
    let x = &loaded.complex;
    if base >= x.n_vertices() {
        return error_report("build-cover", config, format!("base {base} out of range"));
    }
    let radius = radius.unwrap_or_else(|| x.eccentricity(base).max(1));
    if radius == 0 {
        return error_report("build-cover", config, "radius must be >= 1".into());
    }
    let location_warning = if skip_location_check {
        Value::Null
    } else {
        match is_m_located(x, 8, DEFAULT_HOMOTOPY_BUDGET) {
            Ok(v) if v.status == LocationStatus::Located => Value::Null,
            Ok(v) => json!(format!(
                "input is not verified 8-located (status {:?}); relying on runtime invariant checks",
                v.status
            )),
            Err(e) => return error_report("build-cover", config, e.to_string()),
        }
    };
    let built = match stages_dir {
        Some(dir) => emit_stages(dir, x, base, radius).map_err(|e| e.to_string()),
        None => build_cover(x, base, radius).map_err(|e| e.to_string()),
    };
    match built {
        Ok(state) => {
            let mut payload = cover_payload(&state, x);
            payload["location_warning"] = location_warning;
            (
                EXIT_OK,
                envelope(
                    "build-cover",
                    "ok",
                    EXIT_OK,
                    config,
                    Some(loaded.info),
                    payload,
                ),
            )
        }
        Err(message) => (
            EXIT_FAIL,
            envelope(
                "build-cover",
                "invariant_violation",
                EXIT_FAIL,
                config,
                Some(loaded.info),
                json!({ "error": message, "location_warning": location_warning }),
            ),
        ),
    }
}

fn cmd_thinness(input: &InputArg, threads: usize) -> (i32, Value) {
    let config = json!({ "threads": threads });
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return error_report("thinness", config, e),
    };
    match max_interval_diameter(&loaded.complex, threads) {
        Ok(thin) => {
            let ok = thin.max_interval_diameter <= 2;
            let (code, status) = if ok {
                (EXIT_OK, "thin")
            } else {
                (EXIT_FAIL, "fat")
            };
            (
                code,
                envelope(
                    "thinness",
                    status,
                    code,
                    config,
                    Some(loaded.info),
                    json!({
                        "max_interval_diameter": thin.max_interval_diameter,
                        "bound": 2,
                        "witness": thin.witness,
                    }),
                ),
            )
        }
        Err(e) => error_report("thinness", config, e.to_string()),
    }
}

fn cmd_delta(input: &InputArg, threads: usize) -> (i32, Value) {
    let config = json!({ "threads": threads });
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return error_report("delta", config, e),
    };
    match delta_report(&loaded.complex, threads) {
        Ok(report) => (
            EXIT_OK,
            envelope(
                "delta",
                "ok",
                EXIT_OK,
                config,
                Some(loaded.info),
                json!({
                    "delta": report.two_delta as f64 / 2.0,
                    "two_delta": report.two_delta,
                    "max_interval_diameter": report.max_interval_diameter,
                    "witness": {
                        "delta_quadruple": report.delta_witness,
                        "thinness": report.thinness_witness,
                    },
                }),
            ),
        ),
        Err(e) => error_report("delta", config, e.to_string()),
    }
}

fn cmd_verify_hyperbolic(
    input: &InputArg,
    base: usize,
    radius: Option<usize>,
    budget: usize,
    stages_dir: Option<&Path>,
    threads: usize,
) -> (i32, Value) {
    let config = json!({
        "base": base,
        "radius": radius,
        "budget": budget,
        "emit_stages": stages_dir.map(|p| p.display().to_string()),
        "threads": threads,
    });
    let loaded = match load(input) {
        Ok(l) => l,
        Err(e) => return error_report("verify-hyperbolic", config, e),
    };
    let x = &loaded.complex;
    if base >= x.n_vertices() {
        return error_report(
            "verify-hyperbolic",
            config,
            format!("base {base} out of range"),
        );
    }
    // Step 1: local condition.
    let verdict = match is_m_located(x, 8, budget) {
        Ok(v) => v,
        Err(e) => return error_report("verify-hyperbolic", config, e.to_string()),
    };
    if verdict.status != LocationStatus::Located {
        let (code, status) = match verdict.status {
            LocationStatus::NotLocated => (EXIT_FAIL, "not_located"),
            _ => (EXIT_UNKNOWN, "unknown"),
        };
        return (
            code,
            envelope(
                "verify-hyperbolic",
                status,
                code,
                config,
                Some(loaded.info),
                json!({ "location": location_payload(&verdict) }),
            ),
        );
    }
    // Step 2: grow the cover.
    let radius = radius.unwrap_or_else(|| x.eccentricity(base).max(1));
    let built = match stages_dir {
        Some(dir) => emit_stages(dir, x, base, radius),
        None => build_cover(x, base, radius).map_err(|e| e.to_string()),
    };
    let state = match built {
        Ok(state) => state,
        Err(message) => {
            return (
                EXIT_FAIL,
                envelope(
                    "verify-hyperbolic",
                    "invariant_violation",
                    EXIT_FAIL,
                    config,
                    Some(loaded.info),
                    json!({ "location": "located", "error": message }),
                ),
            )
        }
    };
    // Step 3: measure the cover.
    let measures = match delta_report(state.ball(), threads) {
        Ok(m) => m,
        Err(e) => return error_report("verify-hyperbolic", config, e.to_string()),
    };
    let thin_ok = measures.max_interval_diameter <= 2;
    let (code, status) = if thin_ok {
        (EXIT_OK, "ok")
    } else {
        (EXIT_FAIL, "fat_interval")
    };
    let mut payload = cover_payload(&state, x);
    payload["location"] = json!("located");
    payload["thinness"] = json!({
        "max_interval_diameter": measures.max_interval_diameter,
        "bound": 2,
        "witness": measures.thinness_witness,
    });
    payload["delta"] = json!({
        "delta": measures.two_delta as f64 / 2.0,
        "two_delta": measures.two_delta,
        "witness": measures.delta_witness,
    });
    (
        code,
        envelope(
            "verify-hyperbolic",
            status,
            code,
            config,
            Some(loaded.info),
            payload,
        ),
    )
}

fn cmd_generate(spec: &str, out: Option<&Path>, threads: usize) -> (i32, Value) {
    let config =
        json!({ "spec": spec, "out": out.map(|p| p.display().to_string()), "threads": threads });
    let parsed: GeneratorSpec = match spec.parse() {
        Ok(s) => s,
        Err(e) => return error_report("generate", config, e.to_string()),
    };
    let x = match generate(&parsed) {
        Ok(x) => x,
        Err(e) => return error_report("generate", config, e.to_string()),
    };
    let text = io::write_complex(&x);
    if let Some(path) = out {
        if let Err(e) = fs::write(path, &text) {
            return error_report("generate", config, format!("{}: {e}", path.display()));
        }
    } else {
        print!("{text}");
    }
    (
        EXIT_OK,
        envelope(
            "generate",
            "ok",
            EXIT_OK,
            config,
            None,
            json!({
                "spec": parsed.to_string(),
                "n_vertices": x.n_vertices(),
                "n_edges": x.n_edges(),
                "sha256": io::sha256_hex(text.as_bytes()),
            }),
        ),
    )
}
