//! Browser bindings for the simulator.
//!
//! Each export takes plain strings and numbers and returns a JSON string, so
//! the page's JavaScript stays a thin plotting layer. The functions here are
//! wrappers over [`grover_core`]; everything interesting is computed in Rust
//! and covered by the host-side tests at the bottom.

use grover_core::analytic::{self, predict};
use grover_core::grover::{self, GroverSpec, Variant};
use grover_core::io::unitary_from_json;
use grover_core::linalg::{BasisIndex, DenseUnitary, StateVector};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct SweepRow {
    s: usize,
    p_simulated: f64,
    p_analytic: f64,
    amplitude_magnitude: f64,
    abs_error: f64,
}

#[derive(Serialize)]
struct SweepPayload {
    n_qubits: usize,
    variant: String,
    theta: f64,
    records: Vec<SweepRow>,
}

#[derive(Serialize)]
struct CompareRow {
    s: usize,
    p_corrected: f64,
    p_feng: f64,
    p_analytic: f64,
}

#[derive(Serialize)]
struct ComparePayload {
    n_qubits: usize,
    theta: f64,
    optimal_iterations: usize,
    max_p_corrected: f64,
    max_p_feng: f64,
    records: Vec<CompareRow>,
}

#[derive(Serialize)]
struct ReducePayload {
    u_tau_gamma: [f64; 2],
    theta: f64,
    sin_theta: f64,
    axis: [f64; 2],
    q_prime: Vec<[f64; 2]>,
    optimal_iterations: usize,
    curve: Vec<f64>,
}

fn parse_state(bits: &str, n_qubits: usize) -> Result<StateVector, String> {
    let (len, _) = BasisIndex::from_bitstring(bits).map_err(|e| e.to_string())?;
    if len != n_qubits {
        return Err(format!(
            "bitstring {bits:?} has {len} bits, expected {n_qubits}"
        ));
    }
    StateVector::from_bitstring(bits).map_err(|e| e.to_string())
}

fn sweep_impl(
    n_qubits: usize,
    marked: &str,
    prepared: &str,
    variant: &str,
    s_max: usize,
) -> Result<String, String> {
    let variant = match variant {
        "corrected" => Variant::Corrected,
        "feng" => Variant::FengOriginal,
        other => return Err(format!("unknown variant {other:?}; use corrected or feng")),
    };
    let tau = parse_state(marked, n_qubits)?;
    let gamma = parse_state(prepared, n_qubits)?;
    let theta = analytic::w_theta(n_qubits).map_err(|e| e.to_string())?;
    let spec =
        GroverSpec::new(n_qubits, gamma, tau, variant, None, s_max).map_err(|e| e.to_string())?;
    let traces = grover::run(&spec).map_err(|e| e.to_string())?;
    let curve = predict(theta, s_max);
    let records = traces
        .iter()
        .map(|t| {
            let p_analytic = curve.probability(t.s);
            SweepRow {
                s: t.s,
                p_simulated: t.success_probability,
                p_analytic,
                amplitude_magnitude: t.marked_amplitude_magnitude,
                abs_error: (t.success_probability - p_analytic).abs(),
            }
        })
        .collect();
    let payload = SweepPayload {
        n_qubits,
        variant: variant_label(variant).to_string(),
        theta,
        records,
    };
    serde_json::to_string(&payload).map_err(|e| e.to_string())
}

fn compare_impl(
    n_qubits: usize,
    marked: &str,
    prepared: &str,
    s_max: usize,
) -> Result<String, String> {
    let tau = parse_state(marked, n_qubits)?;
    let gamma = parse_state(prepared, n_qubits)?;
    let theta = analytic::w_theta(n_qubits).map_err(|e| e.to_string())?;
    let corrected = grover::run(
        &GroverSpec::corrected(n_qubits, gamma.clone(), tau.clone(), s_max)
            .map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let feng = grover::run(
        &GroverSpec::feng_original(n_qubits, gamma, tau, s_max).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let curve = predict(theta, s_max);
    let records: Vec<CompareRow> = corrected
        .iter()
        .zip(&feng)
        .map(|(c, f)| CompareRow {
            s: c.s,
            p_corrected: c.success_probability,
            p_feng: f.success_probability,
            p_analytic: curve.probability(c.s),
        })
        .collect();
    let payload = ComparePayload {
        n_qubits,
        theta,
        optimal_iterations: grover::optimal_iterations(theta).map_err(|e| e.to_string())?,
        max_p_corrected: records.iter().map(|r| r.p_corrected).fold(0.0, f64::max),
        max_p_feng: records.iter().map(|r| r.p_feng).fold(0.0, f64::max),
        records,
    };
    serde_json::to_string(&payload).map_err(|e| e.to_string())
}

fn reduce_impl(unitary_json: &str, gamma: &str, tau: &str) -> Result<String, String> {
    let (n, _) = BasisIndex::from_bitstring(gamma).map_err(|e| e.to_string())?;
    let u: DenseUnitary = if unitary_json.trim().is_empty() {
        grover_core::gates::w_layer(n).map_err(|e| e.to_string())?
    } else {
        unitary_from_json(unitary_json).map_err(|e| e.to_string())?
    };
    if u.dim() != 1 << n {
        return Err(format!(
            "unitary dimension {} does not match {n}-bit states",
            u.dim()
        ));
    }
    let gamma = parse_state(gamma, n)?;
    let tau = parse_state(tau, n)?;
    let r = analytic::reduce(&u, &gamma, &tau).map_err(|e| e.to_string())?;
    let s_star = grover::optimal_iterations(r.theta).map_err(|e| e.to_string())?;
    let curve = predict(r.theta, (4 * (s_star + 1)).max(12));
    let payload = ReducePayload {
        u_tau_gamma: [r.u_tau_gamma.re, r.u_tau_gamma.im],
        theta: r.theta,
        sin_theta: r.theta.sin(),
        axis: [r.axis.nx(), r.axis.ny()],
        q_prime: r.q_prime.entries().iter().map(|z| [z.re, z.im]).collect(),
        optimal_iterations: s_star,
        curve: curve.points.iter().map(|&(_, p)| p).collect(),
    };
    serde_json::to_string(&payload).map_err(|e| e.to_string())
}

fn variant_label(variant: Variant) -> &'static str {
    match variant {
        Variant::Corrected => "corrected",
        Variant::FengOriginal => "feng",
        Variant::GeneralU => "general",
    }
}

/// Success probabilities of one sequence variant against the closed form.
#[wasm_bindgen]
pub fn sweep(
    n_qubits: usize,
    marked: &str,
    prepared: &str,
    variant: &str,
    s_max: usize,
) -> Result<String, JsValue> {
    sweep_impl(n_qubits, marked, prepared, variant, s_max).map_err(|e| JsValue::from_str(&e))
}

/// Corrected vs original sequences side by side, with the analytic curve.
#[wasm_bindgen]
pub fn compare(
    n_qubits: usize,
    marked: &str,
    prepared: &str,
    s_max: usize,
) -> Result<String, JsValue> {
    compare_impl(n_qubits, marked, prepared, s_max).map_err(|e| JsValue::from_str(&e))
}

/// Pseudo-spin reduction of (U, gamma, tau). Pass an empty string to use the
/// built-in W layer for the bitstring's qubit count.
#[wasm_bindgen]
pub fn reduce(unitary_json: &str, gamma: &str, tau: &str) -> Result<String, JsValue> {
    reduce_impl(unitary_json, gamma, tau).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_payload_carries_the_exact_two_qubit_search() {
        let json = sweep_impl(2, "11", "00", "corrected", 4).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let records = value["records"].as_array().unwrap();
        assert_eq!(records.len(), 5);
        assert!((records[1]["p_simulated"].as_f64().unwrap() - 1.0).abs() < 1e-12);
        assert!(records
            .iter()
            .all(|r| r["abs_error"].as_f64().unwrap() < 1e-10));
    }

    #[test]
    fn compare_payload_shows_the_three_qubit_split() {
        let json = compare_impl(3, "111", "000", 10).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["optimal_iterations"], 2);
        let feng = value["max_p_feng"].as_f64().unwrap();
        let corrected = value["max_p_corrected"].as_f64().unwrap();
        assert!((feng - 0.3828125).abs() < 1e-12);
        assert!(corrected > 0.94);
    }

    #[test]
    fn reduce_defaults_to_the_w_layer() {
        let json = reduce_impl("", "00", "11").unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!((value["theta"].as_f64().unwrap() - std::f64::consts::FRAC_PI_6).abs() < 1e-12);
        assert_eq!(value["optimal_iterations"], 1);
    }

    #[test]
    fn reduce_accepts_a_pasted_unitary() {
        let w2 = grover_core::io::unitary_to_json(&grover_core::gates::w_layer(2).unwrap());
        let json = reduce_impl(&w2, "00", "11").unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!((value["sin_theta"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn errors_come_back_as_messages() {
        assert!(sweep_impl(2, "111", "00", "corrected", 4).is_err());
        assert!(sweep_impl(2, "11", "00", "mystery", 4).is_err());
        let identity = grover_core::io::unitary_to_json(&DenseUnitary::identity(2));
        assert!(reduce_impl(&identity, "0", "0")
            .unwrap_err()
            .contains("= 1"));
        assert!(reduce_impl(&identity, "0", "1")
            .unwrap_err()
            .contains("= 0"));
        assert!(reduce_impl("{bad json", "00", "11").is_err());
    }
}
