//! Explicit one-step integration of the fractional fields against the
//! exponential kernel: x_{j+1} = x_j + h·F(x_j)·g(j).
//!
//! The scheme is memoryless by construction; the kernel weight g depends on
//! the step index (or the physical step time) but not on the history. With
//! q = 1 and rho = 0 the weight is exactly 1 and the scheme is classical
//! forward Euler.

use crate::error::Error;
use crate::fractional::{kernel_weight, FractionalOrder};
use crate::systems::{eval_gain, State, SystemSpec};

/// A coordinate magnitude beyond this aborts the run as divergent.
pub const DIVERGENCE_LIMIT: f64 = 1e12;

/// How the kernel weight's argument is formed at step j.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelMode {
    /// Argument t_kernel - j with the raw step index. Requires
    /// t_kernel > N so the argument stays positive over the whole run.
    StepIndex,
    /// Argument T - t_j with physical times t_j = t0 + j·h and
    /// T = t0 + (N+1)·h.
    PhysicalTime,
}

/// How the controlled field's gain term is formed during integration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ControlMode {
    /// k (x2 - anchor.x2): the anchored definition; the anchor is a fixed
    /// point of the stepped field.
    AnchorOffset,
    /// k x2 with no offset; coincides with the anchored form only when the
    /// anchor's second coordinate is zero.
    PlainGain,
}

/// Everything a run needs besides the system itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub q: FractionalOrder,
    pub h: f64,
    /// Number of steps N; a run records N+1 states.
    pub steps: usize,
    pub rho: f64,
    /// Per-coordinate shift applied to the target equilibrium to form the
    /// initial condition.
    pub epsilon: f64,
    /// Fixed upper time of the kernel argument in [`KernelMode::StepIndex`].
    pub t_kernel: f64,
    pub t0: f64,
    pub kernel_mode: KernelMode,
    pub control_mode: ControlMode,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            q: FractionalOrder::new(0.9).expect("0.9 lies in (0, 1]"),
            h: 0.01,
            steps: 500,
            rho: 0.01,
            epsilon: 0.01,
            t_kernel: 502.0,
            t0: 0.0,
            kernel_mode: KernelMode::StepIndex,
            control_mode: ControlMode::AnchorOffset,
        }
    }
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.h > 0.0) || !self.h.is_finite() {
            return Err(Error::Parameter(format!("step size must be > 0, got {}", self.h)));
        }
        if self.steps < 1 {
            return Err(Error::Parameter("need at least one step".to_string()));
        }
        if !(self.rho >= 0.0) || !self.rho.is_finite() {
            return Err(Error::Parameter(format!("rho must be >= 0, got {}", self.rho)));
        }
        if !self.epsilon.is_finite() {
            return Err(Error::Parameter("epsilon must be finite".to_string()));
        }
        if !self.t0.is_finite() {
            return Err(Error::Parameter("start time must be finite".to_string()));
        }
        if self.kernel_mode == KernelMode::StepIndex
            && (!self.t_kernel.is_finite() || self.t_kernel <= self.steps as f64)
        {
            return Err(Error::Parameter(format!(
                "kernel upper time must exceed the step count, got t = {}, N = {}",
                self.t_kernel, self.steps
            )));
        }
        Ok(())
    }

    /// Physical time of the j-th recorded state.
    pub fn time_at(&self, j: usize) -> f64 {
        self.t0 + j as f64 * self.h
    }
}

/// Kernel weight applied at step j.
pub fn step_weight(cfg: &IntegratorConfig, j: usize) -> Result<f64, Error> {
    let u = match cfg.kernel_mode {
        KernelMode::StepIndex => cfg.t_kernel - j as f64,
        KernelMode::PhysicalTime => {
            let t_j = cfg.time_at(j);
            let horizon = cfg.t0 + (cfg.steps as f64 + 1.0) * cfg.h;
            horizon - t_j
        }
    };
    if !(u > 0.0) {
        return Err(Error::Domain(format!(
            "kernel argument must be positive at step {j}, got {u}"
        )));
    }
    Ok(kernel_weight(cfg.q.get(), cfg.rho, u))
}

fn rhs(sys: &SystemSpec, mode: ControlMode, x: &State) -> State {
    match (sys, mode) {
        (SystemSpec::Controlled { a, c, control }, ControlMode::PlainGain) => {
            eval_gain(x, *a, *c, control.k, 0.0)
        }
        _ => sys.rhs(x),
    }
}

/// One explicit step x + h·F(x)·g(j).
pub fn euler_step(
    x: &State,
    j: usize,
    cfg: &IntegratorConfig,
    sys: &SystemSpec,
) -> Result<State, Error> {
    let g = step_weight(cfg, j)?;
    debug_assert!(g > 0.0, "kernel weight must stay positive");
    let f = rhs(sys, cfg.control_mode, x);
    Ok(State {
        x1: x.x1 + cfg.h * f.x1 * g,
        x2: x.x2 + cfg.h * f.x2 * g,
        x3: x.x3 + cfg.h * f.x3 * g,
    })
}

/// Target equilibrium shifted by epsilon in every coordinate.
pub fn initial_condition(x_e: &State, epsilon: f64) -> State {
    State::new(x_e.x1 + epsilon, x_e.x2 + epsilon, x_e.x3 + epsilon)
}

/// One recorded state of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub j: usize,
    pub t: f64,
    pub state: State,
}

/// The recorded run: N+1 states for a completed run, fewer when truncated
/// by divergence.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub points: Vec<TrajectoryPoint>,
    pub config: IntegratorConfig,
    pub system: SystemSpec,
    pub diverged: bool,
}

/// A step error together with whatever had been recorded up to it.
#[derive(Debug, Clone)]
pub struct SimulationError {
    pub error: Error,
    pub partial: Trajectory,
}

impl std::fmt::Display for SimulationError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} after {} recorded states",
            self.error,
            self.partial.points.len()
        )
    }
}

impl std::error::Error for SimulationError {}

/// Runs the scheme from x_e + epsilon for N steps.
///
/// Non-finite states are never recorded; a coordinate magnitude beyond
/// [`DIVERGENCE_LIMIT`] flags the run as divergent and truncates it.
pub fn simulate(
    cfg: &IntegratorConfig,
    sys: &SystemSpec,
    x_e: &State,
) -> Result<Trajectory, SimulationError> {
    let fail = |error: Error| SimulationError {
        error,
        partial: Trajectory {
            points: Vec::new(),
            config: *cfg,
            system: *sys,
            diverged: false,
        },
    };
    cfg.validate().map_err(&fail)?;
    if !x_e.is_finite() {
        return Err(fail(Error::Parameter("target state must be finite".to_string())));
    }

    let mut points = Vec::with_capacity(cfg.steps + 1);
    let x0 = initial_condition(x_e, cfg.epsilon);
    points.push(TrajectoryPoint { j: 0, t: cfg.time_at(0), state: x0 });
    let mut diverged = x0.max_abs() > DIVERGENCE_LIMIT;

    let mut current = x0;
    for j in 0..cfg.steps {
        if diverged {
            break;
        }
        match euler_step(&current, j, cfg, sys) {
            Ok(next) => {
                if !next.is_finite() {
                    diverged = true;
                    break;
                }
                points.push(TrajectoryPoint { j: j + 1, t: cfg.time_at(j + 1), state: next });
                if next.max_abs() > DIVERGENCE_LIMIT {
                    diverged = true;
                }
                current = next;
            }
            Err(error) => {
                return Err(SimulationError {
                    error,
                    partial: Trajectory {
                        points,
                        config: *cfg,
                        system: *sys,
                        diverged,
                    },
                })
            }
        }
    }

    Ok(Trajectory {
        points,
        config: *cfg,
        system: *sys,
        diverged,
    })
}

/// Distance-to-target record of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    /// ‖x_j - x_e‖ per recorded state.
    pub distances: Vec<f64>,
    pub initial: f64,
    pub terminal: f64,
    pub minimum: f64,
    /// Whether the final fifth of the distance sequence never increases by
    /// more than [`TAIL_TOL`] per step.
    pub tail_non_increasing: bool,
}

/// Per-step slack allowed when judging the tail monotone.
pub const TAIL_TOL: f64 = 1e-9;

pub fn convergence_report(traj: &Trajectory, x_e: &State) -> ConvergenceReport {
    let distances: Vec<f64> = traj.points.iter().map(|p| p.state.distance(x_e)).collect();
    let initial = *distances.first().expect("a trajectory records at least one state");
    let terminal = *distances.last().expect("a trajectory records at least one state");
    let minimum = distances.iter().copied().fold(f64::INFINITY, f64::min);
    let tail_start = distances.len() * 4 / 5;
    let tail_non_increasing = distances[tail_start..]
        .windows(2)
        .all(|w| w[1] <= w[0] + TAIL_TOL);
    ConvergenceReport {
        distances,
        initial,
        terminal,
        minimum,
        tail_non_increasing,
    }
}
