//! Fractional-calculus primitives: the gamma function, the exponential
//! power-law kernel, and product-integration quadratures for the
//! Riemann-Liouville integral and the Caputo derivative.
//!
//! The weight (t-s)^(alpha-1) is singular at s = t for alpha < 1, so both
//! quadratures integrate it analytically on each panel and approximate only
//! the smooth factor piecewise-linearly. Naive rules diverge there.

use crate::error::Error;

const SQRT_2PI: f64 = 2.5066282746310002;
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Euler's gamma function for x > 0.
///
/// Lanczos approximation (g = 7, 9 coefficients), with the reflection
/// formula below 0.5 and exact factorials at small integer arguments so
/// that weights built from Γ(1) = 1 stay exact.
pub fn gamma(x: f64) -> Result<f64, Error> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("gamma requires x > 0, got {x}")));
    }
    Ok(gamma_unchecked(x))
}

pub(crate) fn gamma_unchecked(x: f64) -> f64 {
    if x.fract() == 0.0 && x <= 20.0 {
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return acc;
    }
    if x < 0.5 {
        // reflection: Γ(x) = π / (sin(πx) Γ(1 − x))
        return std::f64::consts::PI
            / ((std::f64::consts::PI * x).sin() * gamma_unchecked(1.0 - x));
    }
    let z = x - 1.0;
    let mut series = LANCZOS_COEFFS[0];
    for (i, coeff) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += coeff / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    SQRT_2PI * t.powf(z + 0.5) * (-t).exp() * series
}

/// A fractional differentiation order restricted to (0, 1].
///
/// The boundary q = 1 is admitted and reproduces the classical first
/// derivative wherever it is used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    pub fn new(q: f64) -> Result<Self, Error> {
        if q.is_finite() && q > 0.0 && q <= 1.0 {
            Ok(Self(q))
        } else {
            Err(Error::Parameter(format!(
                "fractional order must lie in (0, 1], got {q}"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Parameters of the exponential fractional kernel
/// g(s) = (t-s)^(q-1) e^(-rho (t-s)) / Γ(q).
///
/// rho = 0 recovers the plain Riemann-Liouville weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    pub q: FractionalOrder,
    pub rho: f64,
    pub t: f64,
}

impl KernelParams {
    pub fn new(q: FractionalOrder, rho: f64, t: f64) -> Result<Self, Error> {
        if !(rho >= 0.0) || !rho.is_finite() {
            return Err(Error::Parameter(format!("rho must be >= 0, got {rho}")));
        }
        if !t.is_finite() {
            return Err(Error::Parameter(format!("upper time must be finite, got {t}")));
        }
        Ok(Self { q, rho, t })
    }
}

pub(crate) fn kernel_weight(q: f64, rho: f64, u: f64) -> f64 {
    u.powf(q - 1.0) * (-rho * u).exp() / gamma_unchecked(q)
}

/// Evaluates the exponential fractional kernel at s < t.
///
/// The weight is singular at s = t for q < 1, so s >= t is a domain error.
/// With q = 1 and rho = 0 the weight is exactly 1.
pub fn kernel_g(params: &KernelParams, s: f64) -> Result<f64, Error> {
    let u = params.t - s;
    if !(u > 0.0) {
        return Err(Error::Domain(format!(
            "kernel requires s < t, got s = {s}, t = {}",
            params.t
        )));
    }
    Ok(kernel_weight(params.q.get(), params.rho, u))
}

/// Integrates f against the weight (t-s)^(alpha-1) over [0, t] with the
/// weight handled analytically per panel and f interpolated linearly
/// between the `nodes` sample points.
fn weighted_product_trapezoid<F: Fn(f64) -> f64>(f: &F, alpha: f64, t: f64, nodes: usize) -> f64 {
    let panels = nodes - 1;
    let h = t / panels as f64;
    let mut total = 0.0;
    let mut f0 = f(0.0);
    for i in 0..panels {
        let s0 = i as f64 * h;
        let s1 = if i + 1 == panels { t } else { (i + 1) as f64 * h };
        let u0 = t - s0;
        let u1 = t - s1; // zero on the last panel; alpha > 0 keeps the moments finite
        let m0 = (u0.powf(alpha) - u1.powf(alpha)) / alpha;
        let m1 = (u0.powf(alpha + 1.0) - u1.powf(alpha + 1.0)) / (alpha + 1.0);
        let f1 = f(s1);
        total += f0 * m0 + (f1 - f0) / h * (u0 * m0 - m1);
        f0 = f1;
    }
    total
}

/// Riemann-Liouville integral of order alpha > 0 at time t:
/// (1/Γ(alpha)) ∫_0^t (t-s)^(alpha-1) f(s) ds.
pub fn rl_integral<F: Fn(f64) -> f64>(f: F, alpha: f64, t: f64, nodes: usize) -> Result<f64, Error> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!("order must be > 0, got {alpha}")));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("upper time must be > 0, got {t}")));
    }
    if nodes < 2 {
        return Err(Error::Domain(format!("need at least 2 nodes, got {nodes}")));
    }
    Ok(weighted_product_trapezoid(&f, alpha, t, nodes) / gamma_unchecked(alpha))
}

/// Caputo derivative of order q in (0, 1) at time t, written against the
/// first derivative of the target function:
/// (1/Γ(1-q)) ∫_0^t (t-s)^(-q) f'(s) ds.
///
/// Takes f' as a callable so the error budget is purely quadrature.
pub fn caputo_derivative<F: Fn(f64) -> f64>(
    f_prime: F,
    q: FractionalOrder,
    t: f64,
    nodes: usize,
) -> Result<f64, Error> {
    let qv = q.get();
    if qv >= 1.0 {
        return Err(Error::Domain(
            "quadrature covers q in (0, 1); at q = 1 the operator is the classical derivative"
                .to_string(),
        ));
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("upper time must be > 0, got {t}")));
    }
    if nodes < 2 {
        return Err(Error::Domain(format!("need at least 2 nodes, got {nodes}")));
    }
    let alpha = 1.0 - qv;
    Ok(weighted_product_trapezoid(&f_prime, alpha, t, nodes) / gamma_unchecked(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gamma_known_values() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_eq!(gamma(4.0).unwrap(), 6.0);
        assert!((gamma(0.5).unwrap() - PI.sqrt()).abs() < 1e-10 * PI.sqrt());
        // Γ(20) = 19!
        assert_eq!(gamma(20.0).unwrap(), 121_645_100_408_832_000.0);
    }

    #[test]
    fn gamma_rejects_nonpositive() {
        assert!(gamma(0.0).is_err());
        assert!(gamma(-1.5).is_err());
        assert!(gamma(f64::NAN).is_err());
    }

    #[test]
    fn fractional_order_bounds() {
        assert!(FractionalOrder::new(0.0).is_err());
        assert!(FractionalOrder::new(1.0 + 1e-12).is_err());
        assert!(FractionalOrder::new(-0.3).is_err());
        assert_eq!(FractionalOrder::new(1.0).unwrap().get(), 1.0);
        assert_eq!(FractionalOrder::new(0.55).unwrap().get(), 0.55);
    }

    #[test]
    fn kernel_classical_limit_is_exactly_one() {
        let params = KernelParams::new(FractionalOrder::new(1.0).unwrap(), 0.0, 10.0).unwrap();
        for s in [0.0, 1.0, 5.0, 9.999] {
            assert_eq!(kernel_g(&params, s).unwrap(), 1.0);
        }
    }

    #[test]
    fn kernel_values() {
        // q = 0.5, rho = 0, t - s = 4: 4^(-1/2) / Γ(1/2) = 1/(2 sqrt(pi))
        let params = KernelParams::new(FractionalOrder::new(0.5).unwrap(), 0.0, 5.0).unwrap();
        let expect = 0.5 / PI.sqrt();
        assert!((kernel_g(&params, 1.0).unwrap() - expect).abs() < 1e-14);
        // same with rho = 0.25: an extra factor e^(-1)
        let params = KernelParams::new(FractionalOrder::new(0.5).unwrap(), 0.25, 5.0).unwrap();
        assert!((kernel_g(&params, 1.0).unwrap() - expect * (-1.0f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn kernel_domain() {
        let params = KernelParams::new(FractionalOrder::new(0.5).unwrap(), 0.0, 2.0).unwrap();
        assert!(kernel_g(&params, 2.0).is_err());
        assert!(kernel_g(&params, 3.0).is_err());
        assert!(KernelParams::new(FractionalOrder::new(0.5).unwrap(), -0.1, 2.0).is_err());
    }

    #[test]
    fn rl_integral_constant_and_linear() {
        // ∫_0^2 1 ds = 2 for alpha = 1
        assert!((rl_integral(|_| 1.0, 1.0, 2.0, 16).unwrap() - 2.0).abs() < 1e-13);
        // I^(1/2) 1 at t = 1 is 1/Γ(3/2); exact for constants at any node count
        let expect = 1.0 / (0.5 * PI.sqrt());
        assert!((rl_integral(|_| 1.0, 0.5, 1.0, 2).unwrap() - expect).abs() < 1e-13);
        assert!((rl_integral(|_| 1.0, 0.5, 1.0, 33).unwrap() - expect).abs() < 1e-13);
        // I^(1/2) s at t = 1 is Γ(2)/Γ(5/2) = 1/(0.75 sqrt(pi)); exact for linear f
        let expect = 1.0 / (0.75 * PI.sqrt());
        assert!((rl_integral(|s| s, 0.5, 1.0, 33).unwrap() - expect).abs() < 1e-13);
    }

    #[test]
    fn rl_integral_domain() {
        assert!(rl_integral(|_| 1.0, 0.0, 1.0, 8).is_err());
        assert!(rl_integral(|_| 1.0, -0.5, 1.0, 8).is_err());
        assert!(rl_integral(|_| 1.0, 0.5, 0.0, 8).is_err());
        assert!(rl_integral(|_| 1.0, 0.5, 1.0, 1).is_err());
    }

    #[test]
    fn caputo_of_constant_is_zero() {
        let q = FractionalOrder::new(0.5).unwrap();
        for nodes in [2, 5, 64, 1024] {
            let v = caputo_derivative(|_| 0.0, q, 1.0, nodes).unwrap();
            assert!(v.abs() <= 1e-14);
        }
    }

    #[test]
    fn caputo_power_rule() {
        let q = FractionalOrder::new(0.5).unwrap();
        // d^(1/2)/dt^(1/2) of t at t = 1: Γ(2)/Γ(3/2) = 2/sqrt(pi); f' = 1 is exact
        let expect = 2.0 / PI.sqrt();
        assert!((caputo_derivative(|_| 1.0, q, 1.0, 16).unwrap() - expect).abs() < 1e-13);
        // of t^2 at t = 1: Γ(3)/Γ(5/2) = 2/(0.75 sqrt(pi)); f' = 2s is exact
        let expect = 2.0 / (0.75 * PI.sqrt());
        assert!((caputo_derivative(|s| 2.0 * s, q, 1.0, 64).unwrap() - expect).abs() < 1e-13);
    }

    #[test]
    fn caputo_domain() {
        let q1 = FractionalOrder::new(1.0).unwrap();
        assert!(caputo_derivative(|_| 1.0, q1, 1.0, 8).is_err());
        let q = FractionalOrder::new(0.5).unwrap();
        assert!(caputo_derivative(|_| 1.0, q, -1.0, 8).is_err());
        assert!(caputo_derivative(|_| 1.0, q, 1.0, 0).is_err());
    }
}
