//! Energy from the matching coefficients alone:
//!
//! ```text
//! E = (2/pi) * integral_0^inf x^-2 ln( sum_k b_k x^(2k) ) dx
//! ```
//!
//! The range is split at 1. On `[1, inf)` the substitution `x = 1/t` turns the
//! integrand into `ln(sum_k b_k t^(-2k))`; with `K` the matching number this is
//! `-2K ln t + ln(sum_k b_k t^(2(K-k)))`, and the logarithmic part integrates
//! to `2K` in closed form. Both remaining integrands are smooth on `[0, 1]`.

use crate::charpoly::CoeffVector;
use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for XGK[1], XGK[3], XGK[5] and the centre
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Absolute error budget for each of the two integrals.
pub const COULSON_TOLERANCE: f64 = 1e-9;
const MAX_DEPTH: usize = 48;
const MAX_PANELS: usize = 200_000;
const SERIES_CUTOFF: f64 = 1e-8;

/// Energy by the Coulson integral.
pub fn energy_coulson(c: &CoeffVector) -> Result<f64> {
    let b = c.to_f64();
    if b.iter().any(|x| !x.is_finite()) {
        return Err(Error::Quadrature("coefficients exceed double range".into()));
    }
    let top = c.matching_number();
    if top == 0 {
        return Ok(0.0);
    }

    let near = |x: f64| near_integrand(&b, x);
    let far = |t: f64| {
        // ln(b_K + b_{K-1} t^2 + ... + b_0 t^(2K)) by Horner in t^2
        let t2 = t * t;
        b[..=top].iter().fold(0.0, |acc, &bk| acc * t2 + bk).ln()
    };

    let mut panels = 0usize;
    let i_near = adaptive(&near, 0.0, 1.0, COULSON_TOLERANCE, &mut panels)?;
    let i_far = adaptive(&far, 0.0, 1.0, COULSON_TOLERANCE, &mut panels)?;
    Ok(std::f64::consts::FRAC_2_PI * (i_near + i_far + 2.0 * top as f64))
}

/// `ln(sum_k b_k x^(2k)) / x^2`, written as `q * ln(1 + s) / s` with
/// `s = q x^2`, `q = sum_{k>=1} b_k x^(2k-2)`. Below `s = 1e-8` the log is
/// replaced by its series, so `x -> 0` tends to `b_1` without 0/0.
fn near_integrand(b: &[f64], x: f64) -> f64 {
    let x2 = x * x;
    let mut q = 0.0;
    for &bk in b[1..].iter().rev() {
        q = q * x2 + bk;
    }
    let s = q * x2;
    if s < SERIES_CUTOFF {
        q * (1.0 - s / 2.0 + s * s / 3.0)
    } else {
        q * s.ln_1p() / s
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, panels: &mut usize) -> Result<f64> {
    let mut stack = vec![(a, b, tol, 0usize)];
    let mut total = 0.0;
    while let Some((lo, hi, tol, depth)) = stack.pop() {
        *panels += 1;
        if *panels > MAX_PANELS {
            return Err(Error::Quadrature(format!("more than {MAX_PANELS} panels")));
        }
        let (value, err) = gauss_kronrod(f, lo, hi);
        if !value.is_finite() {
            return Err(Error::Quadrature(format!("non-finite integrand on [{lo}, {hi}]")));
        }
        let floor = 50.0 * f64::EPSILON * value.abs();
        if err <= tol.max(floor) {
            total += value;
            continue;
        }
        if depth >= MAX_DEPTH {
            return Err(Error::Quadrature(format!(
                "panel [{lo}, {hi}] still has error {err:e} at depth {depth}"
            )));
        }
        let mid = 0.5 * (lo + hi);
        stack.push((mid, hi, tol / 2.0, depth + 1));
        stack.push((lo, mid, tol / 2.0, depth + 1));
    }
    Ok(total)
}
