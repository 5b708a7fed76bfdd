//! `goppa`: curves, codes, self-orthogonality scans, quantum parameters and
//! channel simulations from the command line. Payloads go to stdout as JSON
//! (CSV for `scan`); failures print an error JSON and exit with status 1.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use goppa_core::agcode::{
    build_code, is_hermitian_self_orthogonal, min_distance, predicted_dimension,
    scan_self_orthogonality, scan_to_csv, write_generator, DistanceMode, LinearCode,
};
use goppa_core::channel::{simulate, ChannelKind, ChannelSpec};
use goppa_core::curve::{points_to_csv, Curve};
use goppa_core::galois::Field;
use goppa_core::quantum::{build_stabilizer, derive_params, verify_commutation, DualDistanceMode};
use goppa_core::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "goppa",
    version,
    about = "AG codes on y^q + y = x^s over GF(q^2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct CurveArgs {
    /// Odd prime characteristic.
    #[arg(long)]
    p: u32,
    /// q = p^e; the field is GF(q^2).
    #[arg(long, default_value_t = 1)]
    e: u32,
    /// Exponent s dividing q + 1. Defaults to (q + 1) / 2.
    #[arg(long)]
    s: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Point count and maximality of the curve.
    Curve {
        #[command(flatten)]
        curve: CurveArgs,
        /// Write the affine points as CSV to this file.
        #[arg(long)]
        points: Option<PathBuf>,
        /// Print a two-column table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Parameters of the one-point code C_L(D, m P_inf).
    Code {
        #[command(flatten)]
        curve: CurveArgs,
        /// Degree of the divisor m P_inf; negative values give the zero code.
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = DistanceArg::Auto)]
        distance: DistanceArg,
        /// Write the generator matrix to this file.
        #[arg(long)]
        export: Option<PathBuf>,
        /// Print a two-column table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Self-orthogonality scan over m = 0..=m_max as CSV.
    Scan {
        #[command(flatten)]
        curve: CurveArgs,
        /// Defaults to n + 2g.
        #[arg(long)]
        m_max: Option<i64>,
    },
    /// Quantum stabilizer parameters of a self-orthogonal code.
    Quantum {
        #[command(flatten)]
        curve: CurveArgs,
        /// Degree of the divisor m P_inf; negative values give the zero code.
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = DualArg::Auto)]
        distance: DualArg,
        /// Print a two-column table instead of JSON.
        #[arg(long)]
        table: bool,
    },
    /// Word error rate over a symmetric or erasure channel.
    Simulate {
        #[command(flatten)]
        curve: CurveArgs,
        /// Degree of the divisor m P_inf; negative values give the zero code.
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = KindArg::Symmetric)]
        kind: KindArg,
        /// Per-symbol substitution or erasure probability.
        #[arg(long)]
        prob: f64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print a two-column table instead of JSON.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DistanceArg {
    /// Exhaustive when the codebook is within the guard, else the designed bound.
    Auto,
    /// Minimum weight over every nonzero codeword.
    Exhaustive,
    /// Smallest nonzero weight of the weight enumerator.
    Enumerator,
    /// Designed distance max(n - m, 1), flagged inexact.
    Bound,
}

#[derive(Clone, Copy, ValueEnum)]
enum DualArg {
    /// Exact dual distance when the codebook is within the guard.
    Auto,
    /// Designed bound m - 2g + 2, at least 1.
    Bound,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Symmetric,
    Erasure,
}

fn build_curve(args: CurveArgs) -> Result<Arc<Curve>, Error> {
    let field = Arc::new(Field::new(args.p, args.e)?);
    let curve = match args.s {
        Some(s) => Curve::new(field, s)?,
        None => Curve::maximal(field)?,
    };
    Ok(Arc::new(curve))
}

enum Output {
    Json(Value, bool),
    Text(String),
}

fn distance_of(code: &LinearCode, mode: DistanceArg) -> Result<Value, Error> {
    let d = match mode {
        DistanceArg::Auto => match min_distance(code, DistanceMode::Exhaustive) {
            Err(Error::EnumerationGuard { .. }) => min_distance(code, DistanceMode::Bound)?,
            other => other?,
        },
        DistanceArg::Exhaustive => min_distance(code, DistanceMode::Exhaustive)?,
        DistanceArg::Enumerator => min_distance(code, DistanceMode::Enumerator)?,
        DistanceArg::Bound => min_distance(code, DistanceMode::Bound)?,
    };
    Ok(match d {
        Some(d) => json!({ "d": d.d, "d_exact": d.exact }),
        None => json!({ "d": null, "d_exact": true }),
    })
}

fn cmd_curve(args: CurveArgs, points: Option<PathBuf>, table: bool) -> Result<Output, Error> {
    let c = build_curve(args)?;
    if let Some(path) = points {
        std::fs::write(&path, points_to_csv(c.points()))
            .map_err(|e| Error::OutOfRange(format!("cannot write {}: {e}", path.display())))?;
    }
    let f = c.field();
    Ok(Output::Json(
        json!({
            "q": c.q(),
            "s": c.s(),
            "field_size": f.size(),
            "modulus": f.modulus(),
            "genus": c.genus(),
            "affine_points": c.points().len(),
            "total": c.rational_point_count(),
            "hasse_weil_upper": c.hasse_weil_upper(),
            "maximal": c.is_maximal(),
        }),
        table,
    ))
}

fn cmd_code(
    args: CurveArgs,
    m: i64,
    distance: DistanceArg,
    export: Option<PathBuf>,
    table: bool,
) -> Result<Output, Error> {
    let c = build_curve(args)?;
    let code = build_code(&c, m, None)?;
    if let Some(path) = export {
        std::fs::write(&path, write_generator(&code))
            .map_err(|e| Error::OutOfRange(format!("cannot write {}: {e}", path.display())))?;
    }
    let pred = predicted_dimension(&c, m)?;
    let mut out = json!({
        "q": c.q(),
        "s": c.s(),
        "m": m,
        "n": code.n(),
        "k": code.k(),
        "designed_d": code.n() as i64 - m,
        "self_orthogonal": is_hermitian_self_orthogonal(&code),
        "paper_case": pred.paper_case,
        "formula_value": pred.formula_value,
        "agrees_with_paper": pred.agrees_with_paper,
    });
    let d = distance_of(&code, distance)?;
    out["d"] = d["d"].clone();
    out["d_exact"] = d["d_exact"].clone();
    Ok(Output::Json(out, table))
}

fn cmd_scan(args: CurveArgs, m_max: Option<i64>) -> Result<Output, Error> {
    let c = build_curve(args)?;
    let m_max = m_max.unwrap_or(c.points().len() as i64 + 2 * c.genus() as i64);
    Ok(Output::Text(scan_to_csv(&scan_self_orthogonality(
        &c, m_max,
    )?)))
}

fn cmd_quantum(args: CurveArgs, m: i64, distance: DualArg, table: bool) -> Result<Output, Error> {
    let c = build_curve(args)?;
    let code = build_code(&c, m, None)?;
    let mode = match distance {
        DualArg::Auto => DualDistanceMode::Auto,
        DualArg::Bound => DualDistanceMode::BoundOnly,
    };
    let params = derive_params(&code, mode)?;
    let stab = build_stabilizer(&code)?;
    let mut out = serde_json::to_value(params).expect("serializable");
    out["s"] = json!(c.s());
    out["k"] = json!(code.k());
    out["stabilizer_rows"] = json!(stab.len());
    out["stabilizer_rank"] = json!(stab.rank());
    out["commutes"] = json!(verify_commutation(&stab));
    Ok(Output::Json(out, table))
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    args: CurveArgs,
    m: i64,
    kind: KindArg,
    prob: f64,
    trials: u64,
    seed: u64,
    table: bool,
) -> Result<Output, Error> {
    let c = build_curve(args)?;
    let code = build_code(&c, m, None)?;
    let kind = match kind {
        KindArg::Symmetric => ChannelKind::Symmetric,
        KindArg::Erasure => ChannelKind::Erasure,
    };
    let spec = ChannelSpec::new(kind, prob, seed)?;
    let report = simulate(&code, &spec, trials)?;
    Ok(Output::Json(
        serde_json::to_value(report).expect("serializable"),
        table,
    ))
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotPrime(_) | Error::EvenCharacteristic(_) | Error::ZeroDegree => "invalid_field",
        Error::FieldTooLarge { .. } => "field_too_large",
        Error::InvalidCurveParameter { .. } => "invalid_curve",
        Error::EnumerationGuard { .. } => "enumeration_guard",
        Error::NotSelfOrthogonal { .. } => "not_self_orthogonal",
        Error::CommutationFailure => "commutation_failure",
        Error::NoDesignedDistance => "no_designed_distance",
        Error::OutOfRange(_) => "out_of_range",
        _ => "error",
    }
}

fn error_json(e: &Error) -> Value {
    let mut out = json!({ "error": { "kind": error_kind(e), "message": e.to_string() } });
    match e {
        Error::NotSelfOrthogonal { nonzero } => out["error"]["gram_nonzero"] = json!(nonzero),
        Error::EnumerationGuard { count, limit } => {
            out["error"]["codewords"] = json!(count.to_string());
            out["error"]["limit"] = json!(limit);
        }
        _ => {}
    }
    out
}

/// Two-column `key  value` rendering of a flat JSON object.
fn render_table(v: &Value) -> String {
    let Some(obj) = v.as_object() else {
        return format!("{v}\n");
    };
    let mut rows = Vec::new();
    flatten("", obj, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, val)| format!("{k:<width$}  {val}\n"))
        .collect()
}

fn flatten(prefix: &str, obj: &serde_json::Map<String, Value>, rows: &mut Vec<(String, String)>) {
    for (k, val) in obj {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        match val {
            Value::Object(inner) => flatten(&key, inner, rows),
            Value::String(s) => rows.push((key, s.clone())),
            other => rows.push((key, other.to_string())),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Curve {
            curve,
            points,
            table,
        } => cmd_curve(curve, points, table),
        Command::Code {
            curve,
            m,
            distance,
            export,
            table,
        } => cmd_code(curve, m, distance, export, table),
        Command::Scan { curve, m_max } => cmd_scan(curve, m_max),
        Command::Quantum {
            curve,
            m,
            distance,
            table,
        } => cmd_quantum(curve, m, distance, table),
        Command::Simulate {
            curve,
            m,
            kind,
            prob,
            trials,
            seed,
            table,
        } => cmd_simulate(curve, m, kind, prob, trials, seed, table),
    };
    match result {
        Ok(Output::Json(v, false)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&v).expect("serializable")
            );
            ExitCode::SUCCESS
        }
        Ok(Output::Json(v, true)) => {
            print!("{}", render_table(&v));
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&error_json(&e)).expect("serializable")
            );
            ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use goppa_core::agcode::{gram_defects, ENUMERATION_GUARD};

    #[test]
    fn guard_limit_appears_in_error_json() {
        let e = Error::EnumerationGuard {
            count: 43_046_721,
            limit: ENUMERATION_GUARD,
        };
        let v = error_json(&e);
        assert_eq!(v["error"]["kind"], "enumeration_guard");
        assert_eq!(v["error"]["limit"], 10_000_000);
    }

    #[test]
    fn table_flattens_nested_objects() {
        let t = render_table(&json!({ "a": 1, "b": { "c": "x" } }));
        assert_eq!(t, "a    1\nb.c  x\n");
    }

    #[test]
    fn gram_count_is_reported() {
        let c = build_curve(CurveArgs {
            p: 3,
            e: 1,
            s: None,
        })
        .unwrap();
        let code = build_code(&c, 14, None).unwrap();
        let err = cmd_quantum(
            CurveArgs {
                p: 3,
                e: 1,
                s: None,
            },
            14,
            DualArg::Auto,
            false,
        )
        .err()
        .unwrap();
        assert_eq!(
            error_json(&err)["error"]["gram_nonzero"],
            gram_defects(&code)
        );
    }
}
