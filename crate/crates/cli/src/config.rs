//! Flat key = value run configuration files.
//!
//! One key per line, `#` starts a comment, unknown keys are rejected, and
//! missing keys fall back to the documented defaults. The target
//! equilibrium is (0, m, 0); `b` is accepted but must stay zero because the
//! controlled integration is defined on the special system.

use chenlee::{ControlMode, FractionalOrder, IntegratorConfig, KernelMode};

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub k: f64,
    pub m: f64,
    pub integrator: IntegratorConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            a: -2.0,
            b: 0.0,
            c: 1.0,
            k: -0.8,
            m: 1.0,
            integrator: IntegratorConfig::default(),
        }
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64, String> {
    value
        .parse::<f64>()
        .map_err(|_| format!("key '{key}': expected a number, got '{value}'"))
}

pub fn parse(text: &str) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    let mut seen: Vec<String> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(idx) => &raw[..idx],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected 'key = value'", lineno + 1))?;
        let key = key.trim();
        let value = value.trim();
        if seen.iter().any(|s| s == key) {
            return Err(format!("line {}: duplicate key '{key}'", lineno + 1));
        }
        seen.push(key.to_string());

        match key {
            "a" => cfg.a = parse_f64(key, value)?,
            "b" => cfg.b = parse_f64(key, value)?,
            "c" => cfg.c = parse_f64(key, value)?,
            "k" => cfg.k = parse_f64(key, value)?,
            "m" => cfg.m = parse_f64(key, value)?,
            "q" => {
                let q = parse_f64(key, value)?;
                cfg.integrator.q = FractionalOrder::new(q).map_err(|e| e.to_string())?;
            }
            "h" => cfg.integrator.h = parse_f64(key, value)?,
            "N" => {
                cfg.integrator.steps = value
                    .parse::<usize>()
                    .map_err(|_| format!("key 'N': expected a positive integer, got '{value}'"))?;
            }
            "rho" => cfg.integrator.rho = parse_f64(key, value)?,
            "epsilon" => cfg.integrator.epsilon = parse_f64(key, value)?,
            "t" => cfg.integrator.t_kernel = parse_f64(key, value)?,
            "t0" => cfg.integrator.t0 = parse_f64(key, value)?,
            "kernel_mode" => {
                cfg.integrator.kernel_mode = match value {
                    "paper-literal" => KernelMode::StepIndex,
                    "time-consistent" => KernelMode::PhysicalTime,
                    other => {
                        return Err(format!(
                            "key 'kernel_mode': expected 'paper-literal' or 'time-consistent', got '{other}'"
                        ))
                    }
                };
            }
            "control_mode" => {
                cfg.integrator.control_mode = match value {
                    "eq15-offset" => ControlMode::AnchorOffset,
                    "eq24-literal" => ControlMode::PlainGain,
                    other => {
                        return Err(format!(
                            "key 'control_mode': expected 'eq15-offset' or 'eq24-literal', got '{other}'"
                        ))
                    }
                };
            }
            other => return Err(format!("unknown key '{other}'")),
        }
    }

    if cfg.b != 0.0 {
        return Err("controlled integration requires b = 0".to_string());
    }
    cfg.integrator.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}
