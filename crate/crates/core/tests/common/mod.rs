//! Test-only oracles, kept independent of the library's implementation
//! paths: a gamma function built from a series plus composite Simpson
//! quadrature, and a simultaneous-iteration cubic root finder.

#![allow(dead_code)]

use num_complex::Complex64;

/// Gamma through its integral definition: the argument is reduced into
/// [1, 2) by the recurrence, the head integral over [0, 1] is summed as an
/// alternating series, and the tail over [1, 45] goes through composite
/// Simpson. Accurate to roughly 1e-13 relative.
pub fn gamma_oracle(x: f64) -> f64 {
    assert!(x > 0.0, "oracle defined for positive arguments");
    let mut factor = 1.0;
    let mut z = x;
    while z >= 2.0 {
        z -= 1.0;
        factor *= z;
    }
    while z < 1.0 {
        factor /= z;
        z += 1.0;
    }
    factor * gamma_on_unit_band(z)
}

fn gamma_on_unit_band(z: f64) -> f64 {
    // ∫_0^1 t^(z-1) e^(-t) dt = Σ (-1)^n / (n! (z + n))
    let mut head = 0.0;
    let mut sign = 1.0;
    let mut factorial = 1.0;
    for n in 0..60 {
        let term = sign / (factorial * (z + n as f64));
        head += term;
        if term.abs() < 1e-18 {
            break;
        }
        sign = -sign;
        factorial *= (n + 1) as f64;
    }

    // ∫_1^45 t^(z-1) e^(-t) dt; the integrand is below 1e-16 past t = 45
    let integrand = |t: f64| t.powf(z - 1.0) * (-t).exp();
    let intervals = 160_000usize; // even
    let (lo, hi) = (1.0f64, 45.0f64);
    let h = (hi - lo) / intervals as f64;
    let mut tail = integrand(lo) + integrand(hi);
    for i in 1..intervals {
        let t = lo + i as f64 * h;
        tail += integrand(t) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    tail *= h / 3.0;

    head + tail
}

/// All roots of c3·x³ + c2·x² + c1·x + c0 by Durand-Kerner simultaneous
/// iteration on the monic form.
pub fn durand_kerner(coeffs: &[f64; 4]) -> [Complex64; 3] {
    let lead = coeffs[0];
    assert!(lead != 0.0);
    let b = coeffs[1] / lead;
    let c = coeffs[2] / lead;
    let d = coeffs[3] / lead;
    let p = |z: Complex64| ((z + b) * z + c) * z + d;

    let seed = Complex64::new(0.4, 0.9);
    let mut roots = [seed, seed * seed, seed * seed * seed];
    for _ in 0..500 {
        let mut widest = 0.0f64;
        for i in 0..3 {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..3 {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm_sqr() == 0.0 {
                continue;
            }
            let step = p(roots[i]) / denom;
            roots[i] -= step;
            widest = widest.max(step.norm());
        }
        if widest < 1e-15 {
            break;
        }
    }
    roots
}

/// Sort complex values by real part, then imaginary part.
pub fn sort_complex(values: &mut [Complex64]) {
    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Smallest over root orderings of the largest pointwise distance; immune
/// to conjugate pairs swapping places under lexicographic sort.
pub fn max_pairing_distance(a: &[Complex64; 3], b: &[Complex64; 3]) -> f64 {
    const ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    ORDERS
        .iter()
        .map(|perm| {
            (0..3)
                .map(|i| (a[i] - b[perm[i]]).norm())
                .fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

/// A controlled-system parameter tuple lying strictly inside one clause of
/// the closed-form classification (every case boundary cleared by at least
/// [`CLAUSE_MARGIN`]). `m` is `None` for origin tuples.
#[derive(Debug, Clone, Copy)]
pub struct ClauseTuple {
    pub a: f64,
    pub c: f64,
    pub k: f64,
    pub m: Option<f64>,
    pub q: f64,
}

pub const CLAUSE_MARGIN: f64 = 1e-6;

pub fn sample_clause_tuples(seed: u64, count: usize) -> Vec<ClauseTuple> {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a: f64 = rng.gen_range(-3.0..3.0);
        let c: f64 = rng.gen_range(-3.0..3.0);
        let k: f64 = rng.gen_range(-2.0..2.0);
        let q: f64 = rng.gen_range(0.02..0.999);
        if a.abs() <= CLAUSE_MARGIN || c.abs() <= CLAUSE_MARGIN || k.abs() <= CLAUSE_MARGIN {
            continue;
        }
        let origin = out.len() % 2 == 0;
        if origin {
            out.push(ClauseTuple { a, c, k, m: None, q });
            continue;
        }
        let m: f64 = rng.gen_range(-3.0..3.0);
        if m.abs() <= CLAUSE_MARGIN {
            continue;
        }
        let delta = (a + c) * (a + c) - 4.0 / 3.0 * m * m;
        let sum = a - c;
        if delta.abs() <= CLAUSE_MARGIN || sum.abs() <= CLAUSE_MARGIN {
            continue;
        }
        if delta > 0.0 {
            let product = -a * c + m * m / 3.0;
            if product.abs() <= CLAUSE_MARGIN {
                continue;
            }
        } else if sum > 0.0 {
            let q2 = 2.0 / std::f64::consts::PI * ((-delta).sqrt() / sum).atan();
            if (q - q2).abs() <= CLAUSE_MARGIN {
                continue;
            }
        }
        out.push(ClauseTuple { a, c, k, m: Some(m), q });
    }
    out
}

#[test]
fn oracle_matches_classical_values() {
    assert!((gamma_oracle(1.0) - 1.0).abs() < 1e-12);
    assert!((gamma_oracle(4.0) - 6.0).abs() < 1e-11);
    let sqrt_pi = std::f64::consts::PI.sqrt();
    assert!((gamma_oracle(0.5) - sqrt_pi).abs() < 1e-12);
}

#[test]
fn durand_kerner_finds_known_roots() {
    let mut roots = durand_kerner(&[1.0, -6.0, 11.0, -6.0]);
    sort_complex(&mut roots);
    for (root, expect) in roots.iter().zip([1.0, 2.0, 3.0]) {
        assert!((root.re - expect).abs() < 1e-12);
        assert!(root.im.abs() < 1e-12);
    }
}
