//! Command implementations: building sweep tables and reduction reports and
//! rendering them as CSV or JSON.

use std::path::{Path, PathBuf};

use grover_core::analytic::{self, predict};
use grover_core::grover::{self, default_iteration_budget, GroverSpec, Variant};
use grover_core::io::load_unitary;
use grover_core::linalg::{BasisIndex, DenseUnitary, StateVector};
use serde::Serialize;

use crate::{CompareArgs, FormatArg, ReduceArgs, SweepArgs, VariantArg};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{message}")]
    Reduction { kind: &'static str, message: String },
    #[error(transparent)]
    Core(#[from] grover_core::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

type Result<T> = std::result::Result<T, CliError>;

/// One sweep row; `amplitude_magnitude` is kept alongside the probability to
/// make mislabeled amplitude-vs-probability plots easy to spot.
#[derive(Serialize)]
struct SweepRecord {
    s: usize,
    p_simulated: f64,
    p_analytic: f64,
    amplitude_magnitude: f64,
    abs_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    state: Option<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct SweepReport {
    n_qubits: usize,
    marked: String,
    prepared: String,
    variant: &'static str,
    theta: f64,
    records: Vec<SweepRecord>,
}

#[derive(Serialize)]
struct CompareRecord {
    s: usize,
    p_corrected: f64,
    p_feng: f64,
    p_analytic: f64,
}

#[derive(Serialize)]
struct CompareReport {
    n_qubits: usize,
    marked: String,
    prepared: String,
    theta: f64,
    max_p_corrected: f64,
    max_p_feng: f64,
    records: Vec<CompareRecord>,
}

#[derive(Serialize)]
struct ReduceReport {
    u_tau_gamma: ComplexJson,
    theta: f64,
    sin_theta: f64,
    axis: AxisJson,
    q_prime: MatrixJson,
    optimal_iterations: usize,
}

#[derive(Serialize)]
struct ComplexJson {
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct AxisJson {
    nx: f64,
    ny: f64,
}

#[derive(Serialize)]
struct MatrixJson {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

fn parse_basis_state(bits: &str, n_qubits: usize) -> Result<StateVector> {
    let (len, _) = BasisIndex::from_bitstring(bits)?;
    if len != n_qubits {
        return Err(CliError::Invalid(format!(
            "bitstring {bits:?} has {len} bits but --n is {n_qubits}"
        )));
    }
    Ok(StateVector::from_bitstring(bits)?)
}

fn prepared_state(prepared: &Option<String>, n_qubits: usize) -> Result<StateVector> {
    match prepared {
        Some(bits) => parse_basis_state(bits, n_qubits),
        None => Ok(StateVector::basis(n_qubits, BasisIndex(0))?),
    }
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn overlap_theta(u: &DenseUnitary, tau: &StateVector, gamma: &StateVector) -> Result<f64> {
    let magnitude = analytic::matrix_element(u, tau, gamma)?.norm();
    Ok(magnitude.min(1.0).asin())
}

pub fn cmd_grover(args: &SweepArgs) -> Result<()> {
    if args.emit_state && args.format == FormatArg::Csv {
        return Err(CliError::Invalid(
            "--emit-state requires --format json (states do not fit the CSV columns)".into(),
        ));
    }
    let tau = parse_basis_state(&args.marked, args.n)?;
    let gamma = prepared_state(&args.prepared, args.n)?;

    let (variant, u) = match args.variant {
        VariantArg::General => {
            let path = args.unitary_file.as_ref().ok_or_else(|| {
                CliError::Invalid("--variant general requires --unitary-file".into())
            })?;
            (Variant::GeneralU, Some(load_checked(path, args.n)?))
        }
        other => {
            if args.unitary_file.is_some() {
                return Err(CliError::Invalid(
                    "--unitary-file only applies to --variant general".into(),
                ));
            }
            (Variant::from(other), None)
        }
    };

    // theta always refers to the corrected closed form, so the feng sweep's
    // abs_error column displays exactly how far the original sequence drifts.
    let theta = match &u {
        Some(u) => overlap_theta(u, &tau, &gamma)?,
        None => analytic::w_theta(args.n)?,
    };
    let s_max = resolve_budget(args.s_max, theta);

    let spec = GroverSpec::new(args.n, gamma.clone(), tau.clone(), variant, u, s_max)?
        .with_full_states(args.emit_state);
    let traces = grover::run(&spec)?;
    let curve = predict(theta, s_max);

    let records: Vec<SweepRecord> = traces
        .iter()
        .map(|t| {
            let p_analytic = curve.probability(t.s);
            SweepRecord {
                s: t.s,
                p_simulated: t.success_probability,
                p_analytic,
                amplitude_magnitude: t.marked_amplitude_magnitude,
                abs_error: (t.success_probability - p_analytic).abs(),
                state: t
                    .full_state
                    .as_ref()
                    .map(|v| v.amps().iter().map(|z| [z.re, z.im]).collect()),
            }
        })
        .collect();

    let content = match args.format {
        FormatArg::Csv => {
            let mut out = String::from("s,p_simulated,p_analytic,amplitude_magnitude,abs_error\n");
            for r in &records {
                out.push_str(&format!(
                    "{},{:.12},{:.12},{:.12},{:.12}\n",
                    r.s, r.p_simulated, r.p_analytic, r.amplitude_magnitude, r.abs_error
                ));
            }
            out
        }
        FormatArg::Json => {
            let report = SweepReport {
                n_qubits: args.n,
                marked: args.marked.clone(),
                prepared: prepared_bits(&args.prepared, args.n),
                variant: variant_name(args.variant),
                theta,
                records,
            };
            to_json(&report)
        }
    };
    emit(&args.output, &content)
}

pub fn cmd_compare(args: &CompareArgs) -> Result<()> {
    let tau = parse_basis_state(&args.marked, args.n)?;
    let gamma = prepared_state(&args.prepared, args.n)?;
    let theta = analytic::w_theta(args.n)?;
    let s_max = resolve_budget(args.s_max, theta);

    let corrected = grover::run(&GroverSpec::corrected(
        args.n,
        gamma.clone(),
        tau.clone(),
        s_max,
    )?)?;
    let feng = grover::run(&GroverSpec::feng_original(args.n, gamma, tau, s_max)?)?;
    let curve = predict(theta, s_max);

    let records: Vec<CompareRecord> = corrected
        .iter()
        .zip(&feng)
        .map(|(c, f)| CompareRecord {
            s: c.s,
            p_corrected: c.success_probability,
            p_feng: f.success_probability,
            p_analytic: curve.probability(c.s),
        })
        .collect();
    let max_p_corrected = records.iter().map(|r| r.p_corrected).fold(0.0f64, f64::max);
    let max_p_feng = records.iter().map(|r| r.p_feng).fold(0.0f64, f64::max);

    let content = match args.format {
        FormatArg::Csv => {
            let mut out = String::from("s,p_corrected,p_feng,p_analytic\n");
            for r in &records {
                out.push_str(&format!(
                    "{},{:.12},{:.12},{:.12}\n",
                    r.s, r.p_corrected, r.p_feng, r.p_analytic
                ));
            }
            out.push_str(&format!(
                "# max_p_corrected={max_p_corrected:.12} max_p_feng={max_p_feng:.12}\n"
            ));
            out
        }
        FormatArg::Json => to_json(&CompareReport {
            n_qubits: args.n,
            marked: args.marked.clone(),
            prepared: prepared_bits(&args.prepared, args.n),
            theta,
            max_p_corrected,
            max_p_feng,
            records,
        }),
    };
    emit(&args.output, &content)
}

pub fn cmd_reduce(args: &ReduceArgs) -> Result<()> {
    let u = match (&args.unitary_file, args.w) {
        (Some(path), None) => load_unitary(path)?,
        (None, Some(n)) => grover_core::gates::w_layer(n)?,
        _ => unreachable!("clap enforces exactly one source"),
    };
    let (len, _) = BasisIndex::from_bitstring(&args.gamma)?;
    if u.dim() != 1 << len {
        return Err(CliError::Invalid(format!(
            "unitary dimension {} does not match {}-bit states",
            u.dim(),
            len
        )));
    }
    let gamma = parse_basis_state(&args.gamma, len)?;
    let tau = parse_basis_state(&args.tau, len)?;

    let reduction = analytic::reduce(&u, &gamma, &tau).map_err(|e| match e {
        grover_core::Error::DegenerateOverlap => CliError::Reduction {
            kind: "DegenerateOverlap",
            message: e.to_string(),
        },
        grover_core::Error::SaturatedOverlap => CliError::Reduction {
            kind: "SaturatedOverlap",
            message: e.to_string(),
        },
        other => CliError::Core(other),
    })?;

    let report = ReduceReport {
        u_tau_gamma: ComplexJson {
            re: reduction.u_tau_gamma.re,
            im: reduction.u_tau_gamma.im,
        },
        theta: reduction.theta,
        sin_theta: reduction.theta.sin(),
        axis: AxisJson {
            nx: reduction.axis.nx(),
            ny: reduction.axis.ny(),
        },
        q_prime: MatrixJson {
            dim: 2,
            entries: reduction
                .q_prime
                .entries()
                .iter()
                .map(|z| [z.re, z.im])
                .collect(),
        },
        optimal_iterations: grover::optimal_iterations(reduction.theta)?,
    };
    emit(&args.output, &to_json(&report))
}

fn load_checked(path: &Path, n_qubits: usize) -> Result<DenseUnitary> {
    let u = load_unitary(path)?;
    if u.dim() != 1 << n_qubits {
        return Err(CliError::Invalid(format!(
            "unitary dimension {} does not match --n {}",
            u.dim(),
            n_qubits
        )));
    }
    Ok(u)
}

fn resolve_budget(s_max: Option<usize>, theta: f64) -> usize {
    s_max.unwrap_or_else(|| {
        if theta > 0.0 {
            default_iteration_budget(theta)
        } else {
            0
        }
    })
}

fn prepared_bits(prepared: &Option<String>, n_qubits: usize) -> String {
    prepared.clone().unwrap_or_else(|| "0".repeat(n_qubits))
}

fn variant_name(variant: VariantArg) -> &'static str {
    match variant {
        VariantArg::Corrected => "corrected",
        VariantArg::Feng => "feng",
        VariantArg::General => "general",
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report serialization cannot fail");
    out.push('\n');
    out
}
