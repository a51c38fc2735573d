//! Browser bindings for the fractional Chen-Lee toolkit: orbit simulation,
//! equilibrium classification, and an order sweep for the stability strip.
//!
//! Build with `wasm-pack build crates/wasm --target web --out-dir ../../www/pkg`
//! and serve the `www/` directory.

use wasm_bindgen::prelude::*;

use chenlee::{
    classify_e0, classify_e2m, convergence_report, discriminant, eigenvalues3, jacobian,
    matignon_classify, simulate, ControlMode, FractionalOrder, IntegratorConfig, KernelMode,
    State, SystemSpec, DEFAULT_BOUNDARY_TOL,
};

fn controlled_system(a: f64, c: f64, k: f64, m: f64) -> Result<(SystemSpec, State), String> {
    let anchor = State::new(0.0, m, 0.0);
    let spec = SystemSpec::controlled(a, c, k, anchor).map_err(|e| e.to_string())?;
    Ok((spec, anchor))
}

#[allow(clippy::too_many_arguments)]
fn orbit_impl(
    a: f64,
    c: f64,
    k: f64,
    m: f64,
    q: f64,
    h: f64,
    steps: u32,
    rho: f64,
    epsilon: f64,
    t_kernel: f64,
    time_consistent: bool,
    plain_gain: bool,
) -> Result<Vec<f64>, String> {
    let (sys, anchor) = controlled_system(a, c, k, m)?;
    let cfg = IntegratorConfig {
        q: FractionalOrder::new(q).map_err(|e| e.to_string())?,
        h,
        steps: steps as usize,
        rho,
        epsilon,
        t_kernel,
        t0: 0.0,
        kernel_mode: if time_consistent {
            KernelMode::PhysicalTime
        } else {
            KernelMode::StepIndex
        },
        control_mode: if plain_gain {
            ControlMode::PlainGain
        } else {
            ControlMode::AnchorOffset
        },
    };
    let traj = simulate(&cfg, &sys, &anchor).map_err(|e| e.to_string())?;
    let report = convergence_report(&traj, &anchor);
    let mut out = Vec::with_capacity(traj.points.len() * 5);
    for (point, dist) in traj.points.iter().zip(report.distances.iter()) {
        out.push(point.t);
        out.push(point.state.x1);
        out.push(point.state.x2);
        out.push(point.state.x3);
        out.push(*dist);
    }
    Ok(out)
}

/// Integrates the controlled system toward (0, m, 0) and returns the run
/// flattened as [t, x1, x2, x3, dist] per recorded state. A result shorter
/// than (steps+1)*5 values means the run diverged and was truncated.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn orbit(
    a: f64,
    c: f64,
    k: f64,
    m: f64,
    q: f64,
    h: f64,
    steps: u32,
    rho: f64,
    epsilon: f64,
    t_kernel: f64,
    time_consistent: bool,
    plain_gain: bool,
) -> Result<Vec<f64>, JsError> {
    orbit_impl(
        a, c, k, m, q, h, steps, rho, epsilon, t_kernel, time_consistent, plain_gain,
    )
    .map_err(|e| JsError::new(&e))
}

fn json_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "null".to_string())
}

fn analyze_impl(a: f64, c: f64, k: f64, m: f64, q: f64) -> Result<String, String> {
    let order = FractionalOrder::new(q).map_err(|e| e.to_string())?;
    let closed_form = if m == 0.0 {
        classify_e0(a, c, k, order)
    } else {
        classify_e2m(a, c, k, m, order)
    }
    .map_err(|e| e.to_string())?;

    let (spec, anchor) = controlled_system(a, c, k, m)?;
    let eigs = eigenvalues3(&jacobian(&anchor, &spec));
    let cone = matignon_classify(&eigs, order, DEFAULT_BOUNDARY_TOL);
    let report = discriminant(a, c, m);

    let eigen_json: Vec<String> = eigs
        .sorted_by_re()
        .iter()
        .map(|l| format!("[{},{}]", l.re, l.im))
        .collect();
    Ok(format!(
        "{{\"delta\":{},\"q2\":{},\"critical_q\":{},\"eigenvalues\":[{}],\"verdict\":\"{}\",\"agree\":{}}}",
        report.delta,
        json_opt(report.q2),
        json_opt(cone.critical_q),
        eigen_json.join(","),
        closed_form.kind,
        closed_form.kind == cone.kind
    ))
}

/// Classifies the controlled equilibrium (0, m, 0) at order q; m = 0 is
/// the origin. Returns a JSON record with the discriminant, critical
/// order, eigenvalues sorted by real part, and the verdict.
#[wasm_bindgen]
pub fn analyze(a: f64, c: f64, k: f64, m: f64, q: f64) -> Result<String, JsError> {
    analyze_impl(a, c, k, m, q).map_err(|e| JsError::new(&e))
}

fn sweep_orders_impl(a: f64, c: f64, k: f64, m: f64, points: u32) -> Result<String, String> {
    if points < 2 {
        return Err("need at least two grid points".to_string());
    }
    let mut qs = Vec::with_capacity(points as usize);
    let mut verdicts = Vec::with_capacity(points as usize);
    for i in 0..points {
        let q = (i + 1) as f64 / points as f64;
        let order = FractionalOrder::new(q).map_err(|e| e.to_string())?;
        let verdict = if m == 0.0 {
            classify_e0(a, c, k, order)
        } else {
            classify_e2m(a, c, k, m, order)
        }
        .map_err(|e| e.to_string())?;
        qs.push(q.to_string());
        verdicts.push(format!("\"{}\"", verdict.kind));
    }
    let q2 = discriminant(a, c, m).q2;
    Ok(format!(
        "{{\"q\":[{}],\"verdict\":[{}],\"q2\":{}}}",
        qs.join(","),
        verdicts.join(","),
        json_opt(q2)
    ))
}

/// Verdicts across an evenly spaced order grid (q from 1/points to 1),
/// for rendering a stability strip. Includes the critical order when the
/// parameters have one.
#[wasm_bindgen]
pub fn sweep_orders(a: f64, c: f64, k: f64, m: f64, points: u32) -> Result<String, JsError> {
    sweep_orders_impl(a, c, k, m, points).map_err(|e| JsError::new(&e))
}
