//! Scaled complementary error function of complex argument, plus the real
//! `erfc` built on top of it.
//!
//! `erfcx(z) = exp(z²)·erfc(z)`. For `Re z ≥ 0` it is bounded by 1 and is
//! evaluated either with the Laplace continued fraction (large `|z|`) or with
//! Gauss–Legendre quadrature of
//!
//! ```text
//! erfcx(z) = 2/√π ∫₀^∞ exp(−t² − 2 z t) dt
//! ```
//!
//! whose integrand is bounded by `exp(−t²)` on the closed right half plane, so
//! no cancellation beyond the oscillation in `Im z` occurs. The left half plane
//! follows from `erfcx(z) = 2·exp(z²) − erfcx(−z)`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// Switch-over radius between the quadrature and the continued fraction.
const CF_RADIUS: f64 = 7.0;
/// Upper limit of the Laplace integral; `exp(−T²)` is below 1e-18.
const LAPLACE_UPPER: f64 = 6.5;
const LAPLACE_PANELS: usize = 13;
const GL_ORDER: usize = 20;

/// Nodes and weights of the Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let n = order as f64;
    for i in 0..order.div_ceil(2) {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=order {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let pn = if order == 1 { x } else { p1 };
            let pm = if order == 1 { 1.0 } else { p0 };
            dp = n * (x * pn - pm) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
    (nodes, weights)
}

struct LaplaceRule {
    t: Vec<f64>,
    // weight already multiplied by exp(-t²)
    w: Vec<f64>,
}

fn laplace_rule() -> &'static LaplaceRule {
    static RULE: OnceLock<LaplaceRule> = OnceLock::new();
    RULE.get_or_init(|| {
        let (x, w) = gauss_legendre(GL_ORDER);
        let h = LAPLACE_UPPER / LAPLACE_PANELS as f64;
        let mut t = Vec::with_capacity(LAPLACE_PANELS * GL_ORDER);
        let mut ww = Vec::with_capacity(LAPLACE_PANELS * GL_ORDER);
        for panel in 0..LAPLACE_PANELS {
            let mid = (panel as f64 + 0.5) * h;
            for (xi, wi) in x.iter().zip(&w) {
                let ti = mid + 0.5 * h * xi;
                t.push(ti);
                ww.push(0.5 * h * wi * (-ti * ti).exp());
            }
        }
        LaplaceRule { t, w: ww }
    })
}

fn erfcx_quadrature(z: Complex64) -> Complex64 {
    let rule = laplace_rule();
    let mut acc = Complex64::new(0.0, 0.0);
    for (t, w) in rule.t.iter().zip(&rule.w) {
        acc += (-2.0 * z * t).exp() * w;
    }
    acc * FRAC_2_SQRT_PI
}

// z + (1/2)/(z + 1/(z + (3/2)/(z + ...))), modified Lentz.
fn erfcx_continued_fraction(z: Complex64) -> Complex64 {
    const TINY: f64 = 1e-300;
    let tiny = Complex64::new(TINY, 0.0);
    let mut f = if z.norm() == 0.0 { tiny } else { z };
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    for j in 1..5000 {
        let a = 0.5 * j as f64;
        d = z + a * d;
        if d.norm() < TINY {
            d = tiny;
        }
        c = z + a / c;
        if c.norm() < TINY {
            c = tiny;
        }
        d = d.inv();
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    f.inv() / PI.sqrt()
}

/// `exp(z²)·erfc(z)` for complex `z`.
pub fn erfcx(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        return 2.0 * (z * z).exp() - erfcx(-z);
    }
    if z.norm() >= CF_RADIUS {
        erfcx_continued_fraction(z)
    } else {
        erfcx_quadrature(z)
    }
}

/// Complementary error function of a real argument.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    if x > 27.0 {
        return 0.0;
    }
    erfcx(Complex64::new(x, 0.0)).re * (-x * x).exp()
}

pub fn erf(x: f64) -> f64 {
    1.0 - erfc(x)
}
