//! Equilibrium analysis for the special and controlled fields.
//!
//! The fractional stability test compares each Jacobian eigenvalue argument
//! against the cone boundary q·π/2: an equilibrium is asymptotically stable
//! when every eigenvalue satisfies |arg λ| > q·π/2, and a zero or positive
//! real eigenvalue makes it unstable at every order. Two independent routes
//! are provided for the controlled system: the general route (Jacobian →
//! characteristic cubic → closed-form eigenvalues → cone test) and the
//! closed-form classifiers [`classify_e0`] / [`classify_e2m`] built on the
//! factored spectra at the equilibrium line (0, m, 0). The two must agree;
//! a disagreement is a defect.

use num_complex::Complex64;

use crate::cubic::cubic_roots;
use crate::error::Error;
use crate::fractional::FractionalOrder;
use crate::systems::{eval_special, State, SystemSpec};

/// Angular half-width within which an eigenvalue counts as sitting on the
/// cone boundary.
pub const DEFAULT_BOUNDARY_TOL: f64 = 1e-9;
/// Below this magnitude an eigenvalue is treated as zero (unstable at every
/// order; its argument is undefined).
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-12;
/// Pairwise eigenvalue separation below which the spectrum is no longer
/// reported as simple.
pub const SIMPLE_SPECTRUM_TOL: f64 = 1e-9;

/// The one-parameter equilibrium line {(0, m, 0)} of the special field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumFamily {
    a: f64,
    c: f64,
}

impl EquilibriumFamily {
    pub fn sample(&self, m: f64) -> State {
        State::new(0.0, m, 0.0)
    }

    /// ‖f(sample(m))‖ under the special field; zero on the whole line.
    pub fn residual(&self, m: f64) -> f64 {
        eval_special(&self.sample(m), self.a, self.c)
            .expect("parameters validated at construction")
            .norm()
    }
}

/// Equilibria of the special field with ac != 0.
pub fn equilibria_special(a: f64, c: f64) -> Result<EquilibriumFamily, Error> {
    eval_special(&State::new(0.0, 0.0, 0.0), a, c)?;
    Ok(EquilibriumFamily { a, c })
}

/// Jacobian of the selected field at x. The controlled variant replaces the
/// zero (2,2) entry of the special Jacobian with the gain k; the full
/// variant carries -b there.
pub fn jacobian(x: &State, spec: &SystemSpec) -> [[f64; 3]; 3] {
    let (a, c, center) = match spec {
        SystemSpec::Full(p) => (p.a, p.c, -p.b),
        SystemSpec::Special { a, c } => (*a, *c, 0.0),
        SystemSpec::Controlled { a, c, control } => (*a, *c, control.k),
    };
    [
        [a, -x.x3, -x.x2],
        [x.x3, center, x.x1],
        [x.x2 / 3.0, x.x1 / 3.0, -c],
    ]
}

/// Coefficients (c3, c2, c1, c0) of det(J - λI) as a cubic in λ, assembled
/// from the trace, the sum of principal 2x2 minors, and the determinant.
pub fn char_poly(j: &[[f64; 3]; 3]) -> [f64; 4] {
    let trace = j[0][0] + j[1][1] + j[2][2];
    let minors = j[1][1] * j[2][2] - j[1][2] * j[2][1]
        + j[0][0] * j[2][2] - j[0][2] * j[2][0]
        + j[0][0] * j[1][1] - j[0][1] * j[1][0];
    let det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1])
        - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0])
        + j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
    [-1.0, trace, -minors, det]
}

/// Eigenvalues of a 3x3 matrix together with the characteristic cubic they
/// were extracted from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenTriple {
    pub lambdas: [Complex64; 3],
    pub cubic: [f64; 4],
}

impl EigenTriple {
    /// |p(λ)| for the stored cubic.
    pub fn residual(&self, lambda: Complex64) -> f64 {
        let [c3, c2, c1, c0] = self.cubic;
        (((lambda * c3 + c2) * lambda + c1) * lambda + c0).norm()
    }

    /// max over the roots of |p(λ)| / max(1, |λ|³).
    pub fn max_scaled_residual(&self) -> f64 {
        self.lambdas
            .iter()
            .map(|l| self.residual(*l) / l.norm().powi(3).max(1.0))
            .fold(0.0, f64::max)
    }

    /// |Σλ - (-c2/c3)|.
    pub fn vieta_sum_error(&self) -> f64 {
        let sum: Complex64 = self.lambdas.iter().sum();
        (sum - Complex64::new(-self.cubic[1] / self.cubic[0], 0.0)).norm()
    }

    pub fn sorted_by_re(&self) -> [Complex64; 3] {
        let mut out = self.lambdas;
        out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        out
    }
}

/// Eigenvalues of a 3x3 matrix through the closed-form cubic solver.
pub fn eigenvalues3(j: &[[f64; 3]; 3]) -> EigenTriple {
    let cubic = char_poly(j);
    EigenTriple {
        lambdas: cubic_roots(&cubic),
        cubic,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    AsymptoticallyStable,
    MarginallyStable,
    Unstable,
}

impl std::fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            VerdictKind::AsymptoticallyStable => "AsymptoticallyStable",
            VerdictKind::MarginallyStable => "MarginallyStable",
            VerdictKind::Unstable => "Unstable",
        };
        f.write_str(s)
    }
}

/// Per-eigenvalue record of |arg λ| against the cone boundary q·π/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenWitness {
    pub lambda: Complex64,
    /// None for a numerically zero eigenvalue, whose argument is undefined.
    pub arg_abs: Option<f64>,
    /// |arg λ| - q·π/2; -inf for a zero eigenvalue.
    pub margin: f64,
}

/// Stability classification with its per-eigenvalue evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilityVerdict {
    pub kind: VerdictKind,
    /// Order at which a spiral pair with positive real part crosses the
    /// cone boundary; absent when no such crossing exists (including when a
    /// real eigenvalue >= 0 forces instability at every order).
    pub critical_q: Option<f64>,
    pub witnesses: [EigenWitness; 3],
    /// Whether all eigenvalues are pairwise distinct at
    /// [`SIMPLE_SPECTRUM_TOL`]; boundary eigenvalues of a simple spectrum
    /// cannot be defective.
    pub simple_spectrum: bool,
}

fn witness(lambda: Complex64, q: f64) -> EigenWitness {
    if lambda.norm() <= ZERO_EIGENVALUE_TOL {
        EigenWitness {
            lambda,
            arg_abs: None,
            margin: f64::NEG_INFINITY,
        }
    } else {
        let arg_abs = lambda.arg().abs();
        EigenWitness {
            lambda,
            arg_abs: Some(arg_abs),
            margin: arg_abs - q * std::f64::consts::FRAC_PI_2,
        }
    }
}

fn kind_from_margins(witnesses: &[EigenWitness; 3], tol: f64) -> VerdictKind {
    if witnesses.iter().any(|w| w.margin < -tol) {
        VerdictKind::Unstable
    } else if witnesses.iter().all(|w| w.margin > tol) {
        VerdictKind::AsymptoticallyStable
    } else {
        VerdictKind::MarginallyStable
    }
}

fn critical_order(lambdas: &[Complex64; 3]) -> Option<f64> {
    let unstable_at_every_order = lambdas
        .iter()
        .any(|l| l.im.abs() <= ZERO_EIGENVALUE_TOL && l.re >= -ZERO_EIGENVALUE_TOL);
    if unstable_at_every_order {
        return None;
    }
    lambdas
        .iter()
        .filter(|l| l.re > ZERO_EIGENVALUE_TOL && l.im.abs() > ZERO_EIGENVALUE_TOL)
        .map(|l| 2.0 / std::f64::consts::PI * l.arg().abs())
        .min_by(f64::total_cmp)
}

fn simple_spectrum(lambdas: &[Complex64; 3]) -> bool {
    (lambdas[0] - lambdas[1]).norm() > SIMPLE_SPECTRUM_TOL
        && (lambdas[0] - lambdas[2]).norm() > SIMPLE_SPECTRUM_TOL
        && (lambdas[1] - lambdas[2]).norm() > SIMPLE_SPECTRUM_TOL
}

/// Cone test at order q with boundary tolerance `tol`.
///
/// Unstable if any eigenvalue falls inside the cone by more than `tol`
/// (a zero eigenvalue counts as inside at every order), asymptotically
/// stable if every eigenvalue clears the boundary by more than `tol`,
/// marginally stable otherwise.
pub fn matignon_classify(eigs: &EigenTriple, q: FractionalOrder, tol: f64) -> StabilityVerdict {
    assert!(tol > 0.0, "boundary tolerance must be positive");
    let qv = q.get();
    let witnesses = [
        witness(eigs.lambdas[0], qv),
        witness(eigs.lambdas[1], qv),
        witness(eigs.lambdas[2], qv),
    ];
    StabilityVerdict {
        kind: kind_from_margins(&witnesses, tol),
        critical_q: critical_order(&eigs.lambdas),
        witnesses,
        simple_spectrum: simple_spectrum(&eigs.lambdas),
    }
}

/// Sign structure of the non-gain eigenvalue pair at a point of the
/// equilibrium line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairRegime {
    /// Conjugate pair with negative real part (a < c): stable at every
    /// order once the gain is negative.
    ComplexStable,
    /// Conjugate pair with positive real part (a > c): stable below the
    /// critical order q2, unstable above it.
    ComplexCritical,
    /// Pair on the imaginary axis (a = c): the boundary is reached only at
    /// q = 1.
    ComplexNeutral,
    /// Two negative real roots (sum < 0, product > 0).
    RealNegative,
    /// At least one real root >= 0.
    RealNonNegative,
}

impl PairRegime {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairRegime::ComplexStable => "complex-stable",
            PairRegime::ComplexCritical => "complex-critical",
            PairRegime::ComplexNeutral => "complex-neutral",
            PairRegime::RealNegative => "real-negative",
            PairRegime::RealNonNegative => "real-nonnegative",
        }
    }
}

/// Discriminant Δ = (a+c)² - (4/3)m² of the pair quadratic at (0, m, 0),
/// the critical order q2 when the pair spirals outward, and the sign
/// regime of the pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminantReport {
    pub delta: f64,
    /// (2/π)·arctan(√(-Δ)/(a-c)); present only when Δ < 0 and a > c.
    pub q2: Option<f64>,
    pub regime: PairRegime,
}

pub fn discriminant(a: f64, c: f64, m: f64) -> DiscriminantReport {
    let delta = (a + c) * (a + c) - 4.0 / 3.0 * m * m;
    if delta < 0.0 {
        let (q2, regime) = if a > c {
            (
                Some(2.0 / std::f64::consts::PI * ((-delta).sqrt() / (a - c)).atan()),
                PairRegime::ComplexCritical,
            )
        } else if a < c {
            (None, PairRegime::ComplexStable)
        } else {
            (None, PairRegime::ComplexNeutral)
        };
        DiscriminantReport { delta, q2, regime }
    } else {
        // real pair ((a-c) ± √Δ)/2 with product -ac + m²/3 and sum a-c
        let product = -a * c + m * m / 3.0;
        let regime = if product > 0.0 && a - c < 0.0 {
            PairRegime::RealNegative
        } else {
            PairRegime::RealNonNegative
        };
        DiscriminantReport {
            delta,
            q2: None,
            regime,
        }
    }
}

fn check_classifier_params(a: f64, c: f64, k: f64) -> Result<(), Error> {
    if a * c == 0.0 || !a.is_finite() || !c.is_finite() {
        return Err(Error::Parameter(format!(
            "requires a*c != 0, got a = {a}, c = {c}"
        )));
    }
    if k == 0.0 || !k.is_finite() {
        return Err(Error::Parameter(format!(
            "control gain must be nonzero, got {k}"
        )));
    }
    Ok(())
}

fn verdict_from(kind: VerdictKind, lambdas: [Complex64; 3], q: f64) -> StabilityVerdict {
    let witnesses = [
        witness(lambdas[0], q),
        witness(lambdas[1], q),
        witness(lambdas[2], q),
    ];
    StabilityVerdict {
        kind,
        critical_q: critical_order(&lambdas),
        witnesses,
        simple_spectrum: simple_spectrum(&lambdas),
    }
}

/// Closed-form classification of the origin under control.
///
/// The controlled Jacobian there is diagonal with spectrum {a, -c, k}, so
/// the verdict is order-independent: stable exactly when k < 0, a < 0 and
/// c > 0, unstable in every other admissible case.
pub fn classify_e0(a: f64, c: f64, k: f64, q: FractionalOrder) -> Result<StabilityVerdict, Error> {
    check_classifier_params(a, c, k)?;
    let kind = if k < 0.0 && a < 0.0 && c > 0.0 {
        VerdictKind::AsymptoticallyStable
    } else {
        VerdictKind::Unstable
    };
    let lambdas = [
        Complex64::new(a, 0.0),
        Complex64::new(-c, 0.0),
        Complex64::new(k, 0.0),
    ];
    Ok(verdict_from(kind, lambdas, q.get()))
}

/// Closed-form classification of the line point (0, m, 0), m != 0, under
/// control.
///
/// The spectrum is {k} ∪ roots of λ² - (a-c)λ - ac + m²/3; the verdict
/// follows the sign regime of that pair, with the spiral case switching
/// from stable to unstable across the critical order q2.
pub fn classify_e2m(
    a: f64,
    c: f64,
    k: f64,
    m: f64,
    q: FractionalOrder,
) -> Result<StabilityVerdict, Error> {
    check_classifier_params(a, c, k)?;
    if m == 0.0 || !m.is_finite() {
        return Err(Error::Parameter(format!(
            "line parameter m must be nonzero, got {m}"
        )));
    }
    let qv = q.get();
    let report = discriminant(a, c, m);
    let half = (a - c) / 2.0;
    let lambdas = if report.delta < 0.0 {
        let im = (-report.delta).sqrt() / 2.0;
        [
            Complex64::new(k, 0.0),
            Complex64::new(half, im),
            Complex64::new(half, -im),
        ]
    } else {
        let root = report.delta.sqrt() / 2.0;
        [
            Complex64::new(k, 0.0),
            Complex64::new(half + root, 0.0),
            Complex64::new(half - root, 0.0),
        ]
    };

    let kind = if k > 0.0 {
        VerdictKind::Unstable
    } else {
        match report.regime {
            PairRegime::ComplexStable | PairRegime::RealNegative => {
                VerdictKind::AsymptoticallyStable
            }
            PairRegime::RealNonNegative => VerdictKind::Unstable,
            PairRegime::ComplexNeutral => {
                // |arg| is exactly π/2: the boundary is met only at q = 1
                if (1.0 - qv) * std::f64::consts::FRAC_PI_2 <= DEFAULT_BOUNDARY_TOL {
                    VerdictKind::MarginallyStable
                } else {
                    VerdictKind::AsymptoticallyStable
                }
            }
            PairRegime::ComplexCritical => {
                let q2 = report.q2.expect("critical regime carries q2");
                // the angular margin is (q2 - q)·π/2; mirror the cone
                // test's boundary tolerance
                let margin = (q2 - qv) * std::f64::consts::FRAC_PI_2;
                if margin.abs() <= DEFAULT_BOUNDARY_TOL {
                    VerdictKind::MarginallyStable
                } else if margin > 0.0 {
                    VerdictKind::AsymptoticallyStable
                } else {
                    VerdictKind::Unstable
                }
            }
        }
    };
    Ok(verdict_from(kind, lambdas, qv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: f64) -> FractionalOrder {
        FractionalOrder::new(v).unwrap()
    }

    fn controlled(a: f64, c: f64, k: f64, m: f64) -> SystemSpec {
        SystemSpec::controlled(a, c, k, State::new(0.0, m, 0.0)).unwrap()
    }

    #[test]
    fn family_samples_are_equilibria() {
        let family = equilibria_special(-2.0, 1.0).unwrap();
        assert_eq!(family.sample(0.0), State::new(0.0, 0.0, 0.0));
        assert_eq!(family.sample(1.0), State::new(0.0, 1.0, 0.0));
        assert_eq!(family.sample(-1.24), State::new(0.0, -1.24, 0.0));
        for m in [-3.0, -1.24, 0.0, 0.5, 2.0] {
            assert!(family.residual(m) <= 1e-14);
        }
        assert!(equilibria_special(0.0, 1.0).is_err());
    }

    #[test]
    fn jacobian_displays() {
        let spec = SystemSpec::special(-2.0, 1.0).unwrap();
        let m = 1.5;
        let j = jacobian(&State::new(0.0, m, 0.0), &spec);
        assert_eq!(j[0], [-2.0, 0.0, -m]);
        assert_eq!(j[1], [0.0, 0.0, 0.0]);
        assert_eq!(j[2], [m / 3.0, 0.0, -1.0]);

        let spec = controlled(-2.0, 1.0, -0.8, 0.0);
        let j = jacobian(&State::new(0.0, 0.0, 0.0), &spec);
        assert_eq!(j[0][0], -2.0);
        assert_eq!(j[1][1], -0.8);
        assert_eq!(j[2][2], -1.0);
    }

    #[test]
    fn char_poly_identity_matrix() {
        let eye = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        assert_eq!(char_poly(&eye), [-1.0, 3.0, -3.0, 1.0]);
    }

    #[test]
    fn char_poly_controlled_origin_factors() {
        // -(λ - a)(λ + c)(λ - k) expanded
        let (a, c, k) = (-2.0, 1.0, -0.8);
        let spec = controlled(a, c, k, 0.0);
        let poly = char_poly(&jacobian(&State::new(0.0, 0.0, 0.0), &spec));
        let expect = [-1.0, a - c + k, a * c + c * k - a * k, -a * c * k];
        for (got, want) in poly.iter().zip(expect) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn char_poly_line_point_factors() {
        // -(λ - k)(λ² - (a-c)λ - ac + m²/3) expanded
        let (a, c, k, m) = (-2.0, 1.0, -0.8, 1.0);
        let spec = controlled(a, c, k, m);
        let poly = char_poly(&jacobian(&State::new(0.0, m, 0.0), &spec));
        let p = -a * c + m * m / 3.0;
        let s = a - c;
        let expect = [-1.0, s + k, -(p + k * s), k * p];
        for (got, want) in poly.iter().zip(expect) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn eigenvalues_of_controlled_origin() {
        let spec = controlled(-2.0, 1.0, -0.8, 0.0);
        let eigs = eigenvalues3(&jacobian(&State::new(0.0, 0.0, 0.0), &spec));
        let sorted = eigs.sorted_by_re();
        for (got, want) in sorted.iter().zip([-2.0, -1.0, -0.8]) {
            assert!((got.re - want).abs() < 1e-10);
            assert!(got.im.abs() < 1e-12);
        }
        assert!(eigs.max_scaled_residual() <= 1e-8);
        assert!(eigs.vieta_sum_error() <= 1e-9);
    }

    #[test]
    fn eigenvalues_of_line_point_spiral() {
        // quadratic-formula oracle: pair at -1.5 ± i·sqrt(1/3)/2
        let spec = controlled(-2.0, 1.0, -0.8, 1.0);
        let eigs = eigenvalues3(&jacobian(&State::new(0.0, 1.0, 0.0), &spec));
        let sorted = eigs.sorted_by_re();
        let im = (1.0f64 / 3.0).sqrt() / 2.0;
        assert!((sorted[0].re + 1.5).abs() < 1e-10 && (sorted[0].im + im).abs() < 1e-10);
        assert!((sorted[1].re + 1.5).abs() < 1e-10 && (sorted[1].im - im).abs() < 1e-10);
        assert!((sorted[2].re + 0.8).abs() < 1e-10 && sorted[2].im.abs() < 1e-12);
    }

    #[test]
    fn matignon_examples() {
        let triple = |l: [Complex64; 3]| {
            // synthesize the matching cubic so residual checks stay honest
            let c2 = (l[0] + l[1] + l[2]).re;
            let c1 = (l[0] * l[1] + l[0] * l[2] + l[1] * l[2]).re;
            let c0 = (l[0] * l[1] * l[2]).re;
            EigenTriple {
                lambdas: l,
                cubic: [-1.0, c2, -c1, c0],
            }
        };

        let negative = triple([
            Complex64::new(-2.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(-0.8, 0.0),
        ]);
        for qs in [0.1, 0.5, 0.9, 1.0] {
            let v = matignon_classify(&negative, q(qs), DEFAULT_BOUNDARY_TOL);
            assert_eq!(v.kind, VerdictKind::AsymptoticallyStable);
            assert_eq!(v.critical_q, None);
        }

        let with_zero = triple([
            Complex64::new(0.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(-2.0, 0.0),
        ]);
        for qs in [0.1, 0.5, 1.0] {
            let v = matignon_classify(&with_zero, q(qs), DEFAULT_BOUNDARY_TOL);
            assert_eq!(v.kind, VerdictKind::Unstable);
        }

        // spiral pair at arg = π/6: boundary order is 1/3
        let spiral = triple([
            Complex64::new(-2.0, 0.0),
            Complex64::new(0.5, 0.28867513459481287),
            Complex64::new(0.5, -0.28867513459481287),
        ]);
        let v = matignon_classify(&spiral, q(0.2), DEFAULT_BOUNDARY_TOL);
        assert_eq!(v.kind, VerdictKind::AsymptoticallyStable);
        let v = matignon_classify(&spiral, q(0.5), DEFAULT_BOUNDARY_TOL);
        assert_eq!(v.kind, VerdictKind::Unstable);
        let crit = v.critical_q.unwrap();
        assert!((crit - 1.0 / 3.0).abs() < 1e-12);
        let v = matignon_classify(&spiral, q(crit), DEFAULT_BOUNDARY_TOL);
        assert_eq!(v.kind, VerdictKind::MarginallyStable);
    }

    #[test]
    fn discriminant_examples() {
        let r = discriminant(-2.0, 1.0, 1.0);
        assert!((r.delta + 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(r.q2, None);
        assert_eq!(r.regime, PairRegime::ComplexStable);

        let r = discriminant(2.0, 1.0, 7f64.sqrt());
        assert!((r.delta + 1.0 / 3.0).abs() < 1e-12);
        assert!((r.q2.unwrap() - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(r.regime, PairRegime::ComplexCritical);

        let r = discriminant(-1.0, -0.5, -1.24);
        assert!((r.delta - 0.1999).abs() < 5e-5);
        assert_eq!(r.q2, None);
        assert_eq!(r.regime, PairRegime::RealNegative);
    }

    #[test]
    fn classify_origin_cases() {
        let v = classify_e0(-0.25, 1.0, -0.25, q(0.5)).unwrap();
        assert_eq!(v.kind, VerdictKind::AsymptoticallyStable);

        for qs in [0.1, 0.5, 0.9, 1.0] {
            let v = classify_e0(0.5, 0.8, -0.75, q(qs)).unwrap();
            assert_eq!(v.kind, VerdictKind::Unstable);
        }

        // positive gain is always unstable
        let v = classify_e0(-1.0, 2.0, 3.0, q(0.5)).unwrap();
        assert_eq!(v.kind, VerdictKind::Unstable);

        assert!(classify_e0(0.0, 1.0, -1.0, q(0.5)).is_err());
        assert!(classify_e0(1.0, 1.0, 0.0, q(0.5)).is_err());
    }

    #[test]
    fn classify_line_cases() {
        let v = classify_e2m(-2.0, 1.0, -0.8, 1.0, q(0.9)).unwrap();
        assert_eq!(v.kind, VerdictKind::AsymptoticallyStable);

        let m = 7f64.sqrt();
        let v = classify_e2m(2.0, 1.0, -2.0, m, q(0.25)).unwrap();
        assert_eq!(v.kind, VerdictKind::AsymptoticallyStable);
        assert!((v.critical_q.unwrap() - 1.0 / 3.0).abs() < 1e-12);
        let v = classify_e2m(2.0, 1.0, -2.0, m, q(0.5)).unwrap();
        assert_eq!(v.kind, VerdictKind::Unstable);

        let v = classify_e2m(-1.0, -0.5, -0.4, -1.24, q(0.99)).unwrap();
        assert_eq!(v.kind, VerdictKind::AsymptoticallyStable);

        assert!(classify_e2m(-2.0, 1.0, -0.8, 0.0, q(0.5)).is_err());
    }

    #[test]
    fn uncontrolled_line_has_zero_eigenvalue() {
        let spec = SystemSpec::special(-2.0, 1.0).unwrap();
        for m in [-3.0, -1.0, 0.5, 2.0] {
            let eigs = eigenvalues3(&jacobian(&State::new(0.0, m, 0.0), &spec));
            let smallest = eigs.lambdas.iter().map(|l| l.norm()).fold(f64::INFINITY, f64::min);
            assert!(smallest <= 1e-12, "m = {m}: smallest |λ| = {smallest:e}");
            let v = matignon_classify(&eigs, q(0.7), DEFAULT_BOUNDARY_TOL);
            assert_eq!(v.kind, VerdictKind::Unstable);
        }
    }
}
