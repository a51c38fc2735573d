//! The Chen-Lee vector-field family and its feedback-controlled variant.
//!
//! Three right-hand sides are provided: the full three-parameter field, the
//! special two-parameter field (b = 0, ac != 0), and the controlled field
//! that adds a gain term k (x2 - anchor.x2) to steer trajectories toward an
//! equilibrium of the special system. The bilinear matrix split and the
//! solution-existence Lipschitz bound round out the module.

use crate::error::Error;

/// Largest residual ‖f(anchor)‖ accepted when validating a control anchor.
pub const ANCHOR_RESIDUAL_TOL: f64 = 1e-12;

/// A point of the three-dimensional state space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl State {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    /// Euclidean distance to another state.
    pub fn distance(&self, other: &State) -> f64 {
        State::new(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3).norm()
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    pub fn max_abs(&self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }
}

/// Rate parameters (a, b, c) of the full field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChenLeeParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Feedback gain and the equilibrium it anchors to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlSpec {
    pub k: f64,
    pub anchor: State,
}

/// Which member of the family a simulation or analysis runs against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SystemSpec {
    Full(ChenLeeParams),
    Special { a: f64, c: f64 },
    Controlled { a: f64, c: f64, control: ControlSpec },
}

impl SystemSpec {
    pub fn full(a: f64, b: f64, c: f64) -> Result<Self, Error> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::Parameter("parameters must be finite".to_string()));
        }
        Ok(SystemSpec::Full(ChenLeeParams { a, b, c }))
    }

    pub fn special(a: f64, c: f64) -> Result<Self, Error> {
        check_ac(a, c)?;
        Ok(SystemSpec::Special { a, c })
    }

    /// Controlled variant; the anchor must actually be an equilibrium of the
    /// special field (residual at most [`ANCHOR_RESIDUAL_TOL`]).
    pub fn controlled(a: f64, c: f64, k: f64, anchor: State) -> Result<Self, Error> {
        check_ac(a, c)?;
        check_k(k)?;
        if !anchor.is_finite() {
            return Err(Error::Parameter("anchor must be finite".to_string()));
        }
        let residual = eval_full(&anchor, &ChenLeeParams { a, b: 0.0, c }).norm();
        if residual > ANCHOR_RESIDUAL_TOL {
            return Err(Error::Parameter(format!(
                "anchor is not an equilibrium: residual {residual:e}"
            )));
        }
        Ok(SystemSpec::Controlled {
            a,
            c,
            control: ControlSpec { k, anchor },
        })
    }

    /// Right-hand side of the selected field. The controlled variant uses
    /// its anchored gain term.
    pub fn rhs(&self, x: &State) -> State {
        match self {
            SystemSpec::Full(p) => eval_full(x, p),
            SystemSpec::Special { a, c } => {
                eval_full(x, &ChenLeeParams { a: *a, b: 0.0, c: *c })
            }
            SystemSpec::Controlled { a, c, control } => {
                eval_gain(x, *a, *c, control.k, control.anchor.x2)
            }
        }
    }
}

fn check_ac(a: f64, c: f64) -> Result<(), Error> {
    if !(a.is_finite() && c.is_finite()) {
        return Err(Error::Parameter("parameters must be finite".to_string()));
    }
    if a * c == 0.0 {
        return Err(Error::Parameter(format!(
            "requires a*c != 0, got a = {a}, c = {c}"
        )));
    }
    Ok(())
}

fn check_k(k: f64) -> Result<(), Error> {
    if !k.is_finite() || k == 0.0 {
        return Err(Error::Parameter(format!(
            "control gain must be nonzero, got {k}"
        )));
    }
    Ok(())
}

/// Full field: (-x2 x3 + a x1, x1 x3 - b x2, x1 x2 / 3 - c x3).
pub fn eval_full(x: &State, p: &ChenLeeParams) -> State {
    State {
        x1: -x.x2 * x.x3 + p.a * x.x1,
        x2: x.x1 * x.x3 - p.b * x.x2,
        x3: x.x1 * x.x2 / 3.0 - p.c * x.x3,
    }
}

/// Special field: the full field with b = 0, defined for ac != 0.
pub fn eval_special(x: &State, a: f64, c: f64) -> Result<State, Error> {
    check_ac(a, c)?;
    Ok(eval_full(x, &ChenLeeParams { a, b: 0.0, c }))
}

pub(crate) fn eval_gain(x: &State, a: f64, c: f64, k: f64, anchor_x2: f64) -> State {
    State {
        x1: -x.x2 * x.x3 + a * x.x1,
        x2: x.x1 * x.x3 + k * (x.x2 - anchor_x2),
        x3: x.x1 * x.x2 / 3.0 - c * x.x3,
    }
}

/// Controlled field: the gain term k (x2 - anchor.x2) replaces the damping
/// of the second component. Reduces to the special field wherever
/// x2 equals the anchor's second coordinate.
pub fn eval_controlled(x: &State, a: f64, c: f64, ctrl: &ControlSpec) -> Result<State, Error> {
    check_k(ctrl.k)?;
    Ok(eval_gain(x, a, c, ctrl.k, ctrl.anchor.x2))
}

/// Constant matrices of the bilinear split x1·A·x + B·x of the special
/// field.
///
/// The split is not an exact refactoring: the first component's -x2 x3 term
/// has no x1 factor, so no constant A can carry it, and B's (2,1) entry
/// injects a linear x1 into the second component. [`MatrixForm::eval`] is the
/// literal split; [`MatrixForm::split_defect`] is the exact difference
/// eval(x) - special(x) = (x2 x3, x1, 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixForm {
    pub a_mat: [[f64; 3]; 3],
    pub b_mat: [[f64; 3]; 3],
}

pub fn matrix_form(a: f64, c: f64) -> MatrixForm {
    MatrixForm {
        a_mat: [[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0 / 3.0, 0.0]],
        b_mat: [[a, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, -c]],
    }
}

impl MatrixForm {
    /// Literal bilinear evaluation x1·(A·x) + B·x.
    pub fn eval(&self, x: &State) -> State {
        let v = x.to_array();
        let mut out = [0.0; 3];
        for (i, row) in out.iter_mut().enumerate() {
            let ax: f64 = (0..3).map(|j| self.a_mat[i][j] * v[j]).sum();
            let bx: f64 = (0..3).map(|j| self.b_mat[i][j] * v[j]).sum();
            *row = x.x1 * ax + bx;
        }
        State::new(out[0], out[1], out[2])
    }

    /// Exact difference between the bilinear split and the special field.
    pub fn split_defect(x: &State) -> State {
        State::new(x.x2 * x.x3, x.x1, 0.0)
    }
}

/// Which matrix norm feeds the linear part of [`lipschitz_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LipschitzNorm {
    /// sqrt(1 + c^2): the constant as conventionally quoted for this
    /// system. It drops the a^2 contribution of the linear part.
    Nominal,
    /// sqrt(a^2 + 1 + c^2): the full Frobenius norm of B.
    Frobenius,
}

/// Lipschitz constant L = 1 + sqrt(10)/3 + ‖B‖ + ‖x0‖ + delta used in the
/// solution-existence argument on the box [x0 - delta, x0 + delta]^3.
pub fn lipschitz_bound(
    a: f64,
    c: f64,
    x0: &State,
    delta: f64,
    norm: LipschitzNorm,
) -> Result<f64, Error> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::Parameter(format!("delta must be > 0, got {delta}")));
    }
    let b_norm = match norm {
        LipschitzNorm::Nominal => (1.0 + c * c).sqrt(),
        LipschitzNorm::Frobenius => (a * a + 1.0 + c * c).sqrt(),
    };
    Ok(1.0 + 10f64.sqrt() / 3.0 + b_norm + x0.norm() + delta)
}
