//! Closed-form roots of real cubic polynomials.
//!
//! Positive discriminant goes through the numerically stable Cardano branch
//! (cube root chosen to avoid cancellation), non-positive through the
//! trigonometric triple-real branch. Each root gets a couple of guarded
//! Newton steps so residuals stay tight even for skewed coefficient scales.

use num_complex::Complex64;

/// All three roots of c3·x³ + c2·x² + c1·x + c0 with c3 != 0.
///
/// Complex roots come back as exact conjugate pairs; real roots carry an
/// exactly zero imaginary part.
pub fn cubic_roots(coeffs: &[f64; 4]) -> [Complex64; 3] {
    let [c3, c2, c1, c0] = *coeffs;
    debug_assert!(c3 != 0.0, "leading coefficient must be nonzero");
    let b = c2 / c3;
    let c = c1 / c3;
    let d = c0 / c3;

    // depressed form y^3 + p y + q with x = y - b/3
    let shift = -b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);

    let mut roots = if disc > 0.0 {
        // one real root and a conjugate pair
        let sq = disc.sqrt();
        let s = -q / 2.0;
        let u = if s >= 0.0 { (s + sq).cbrt() } else { (s - sq).cbrt() };
        let v = if u == 0.0 { 0.0 } else { -p / (3.0 * u) };
        let real = u + v;
        let re = -real / 2.0;
        let im = 3f64.sqrt() / 2.0 * (u - v).abs();
        [
            Complex64::new(real + shift, 0.0),
            Complex64::new(re + shift, im),
            Complex64::new(re + shift, -im),
        ]
    } else {
        // three real roots; p <= 0 here
        let r = (-p / 3.0).sqrt();
        if r == 0.0 {
            // p = 0 forces q = 0: triple root at the shift point
            [Complex64::new(shift, 0.0); 3]
        } else {
            let cos_phi = ((-q / 2.0) / (r * r * r)).clamp(-1.0, 1.0);
            let phi = cos_phi.acos();
            let mut out = [Complex64::new(0.0, 0.0); 3];
            for (k, slot) in out.iter_mut().enumerate() {
                let angle = (phi - 2.0 * std::f64::consts::PI * k as f64) / 3.0;
                *slot = Complex64::new(2.0 * r * angle.cos() + shift, 0.0);
            }
            out
        }
    };

    for root in roots.iter_mut() {
        *root = polish(*root, coeffs);
    }
    roots
}

/// Horner evaluation of the cubic and its derivative.
fn eval_with_derivative(z: Complex64, coeffs: &[f64; 4]) -> (Complex64, Complex64) {
    let [c3, c2, c1, c0] = *coeffs;
    let p = ((z * c3 + c2) * z + c1) * z + c0;
    let dp = (z * 3.0 * c3 + 2.0 * c2) * z + c1;
    (p, dp)
}

fn polish(start: Complex64, coeffs: &[f64; 4]) -> Complex64 {
    let mut z = start;
    let (mut pv, mut dv) = eval_with_derivative(z, coeffs);
    for _ in 0..2 {
        if dv.norm_sqr() == 0.0 {
            break;
        }
        let candidate = z - pv / dv;
        let (pc, dc) = eval_with_derivative(candidate, coeffs);
        if pc.norm_sqr() < pv.norm_sqr() {
            z = candidate;
            pv = pc;
            dv = dc;
        } else {
            break;
        }
    }
    z
}
