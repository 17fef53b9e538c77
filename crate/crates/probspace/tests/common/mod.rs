//! Shared machinery for the integration-test tier: an adaptive Simpson
//! integrator and quadrature-based reference implementations of every
//! distribution kernel. These deliberately share no code (and no algorithm)
//! with the library: the library uses series, continued fractions and a
//! Lanczos approximation, while everything here is brute-force numeric
//! integration of the density, so agreement is meaningful evidence.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

/// Adaptive Simpson with Richardson correction on one panel.
///
/// The argument list carries the already-computed endpoint and midpoint
/// values so recursion never re-evaluates the integrand.
#[allow(clippy::too_many_arguments)]
fn simpson_panel<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> f64 {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        left + right + delta / 15.0
    } else {
        simpson_panel(f, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth - 1)
            + simpson_panel(f, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth - 1)
    }
}

/// ∫ₐᵇ f, adaptive Simpson to absolute tolerance `eps`.
///
/// The interval is pre-split into 64 uniform panels before refinement so a
/// narrow peak cannot hide between the five initial sample points and fake
/// early convergence.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, eps: f64) -> f64 {
    const PANELS: usize = 64;
    let h = (b - a) / PANELS as f64;
    let panel_eps = eps / PANELS as f64;
    let mut total = 0.0;
    for i in 0..PANELS {
        let pa = a + i as f64 * h;
        let pb = if i == PANELS - 1 { b } else { pa + h };
        let pm = 0.5 * (pa + pb);
        let (fa, fm, fb) = (f(pa), f(pm), f(pb));
        let whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
        total += simpson_panel(f, pa, fa, pm, fm, pb, fb, whole, panel_eps, 40);
    }
    total
}

/// ∫ₐᵇ f to a *relative* tolerance, with the absolute tolerance derived
/// from a dense sample of the integrand. The sampled bound can only
/// underestimate the true magnitude, which merely tightens the tolerance.
pub fn integrate_rel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel: f64) -> f64 {
    const SAMPLES: usize = 513;
    let mut peak = 0.0f64;
    for i in 0..=SAMPLES {
        let x = a + (b - a) * i as f64 / SAMPLES as f64;
        peak = peak.max(f(x).abs());
    }
    let scale = (peak * (b - a)).max(f64::MIN_POSITIVE);
    integrate(f, a, b, rel * scale)
}

const QUAD_REL: f64 = 1e-12;

/// Γ(s) = 2∫₀^∞ u^(2s−1) e^(−u²) du. The substitution t = u² removes the
/// t^(s−1) endpoint singularity for every s ≥ 0.5. Good for s in [0.5, 60].
pub fn gamma_quad(s: f64) -> f64 {
    let hi = (2.0 * s).sqrt() + 14.0;
    integrate_rel(&|u: f64| 2.0 * u.powf(2.0 * s - 1.0) * (-u * u).exp(), 0.0, hi, QUAD_REL)
}

/// Regularized lower incomplete gamma P(s, x) by quadrature.
pub fn reg_lower_gamma_quad(s: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let kernel = |u: f64| 2.0 * u.powf(2.0 * s - 1.0) * (-u * u).exp();
    integrate_rel(&kernel, 0.0, x.sqrt(), QUAD_REL) / gamma_quad(s)
}

/// Regularized upper incomplete gamma Q(s, x), integrating the tail
/// directly so tiny tails keep full relative accuracy.
pub fn reg_upper_gamma_quad(s: f64, x: f64) -> f64 {
    let lo = x.sqrt();
    let hi = ((2.0 * s).sqrt() + 14.0).max(lo + 14.0);
    let kernel = |u: f64| 2.0 * u.powf(2.0 * s - 1.0) * (-u * u).exp();
    integrate_rel(&kernel, lo, hi, QUAD_REL) / gamma_quad(s)
}

/// ln Γ(x) by the Stirling–de Moivre asymptotic series with Bernoulli
/// coefficients, shifted into its convergence region by the recurrence
/// Γ(x+1) = xΓ(x). Independent of the Lanczos path under test; the series
/// truncation error at x ≥ 10 is below f64 resolution.
pub fn log_gamma_stirling(x: f64) -> f64 {
    // B_{2k} / (2k(2k−1)) for 2k = 2, 4, …, 16
    const COEFFS: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
        -3617.0 / 122_400.0,
    ];
    let mut y = x;
    let mut shift = 0.0;
    while y < 10.0 {
        shift += y.ln();
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut series = COEFFS[7];
    for &c in COEFFS.iter().rev().skip(1) {
        series = series * inv2 + c;
    }
    series /= y;
    (y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln() + series - shift
}

/// Regularized incomplete beta Iₓ(a, b) by quadrature in the t = sin²θ
/// coordinate, where the kernel becomes 2·sin^(2a−1)θ·cos^(2b−1)θ and stays
/// bounded for a, b ≥ 0.5. The normalizer is the same integral over the
/// full quarter period, so no gamma function is involved anywhere.
pub fn reg_inc_beta_quad(a: f64, b: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let kernel =
        |th: f64| 2.0 * th.sin().powf(2.0 * a - 1.0) * th.cos().powf(2.0 * b - 1.0);
    let split = x.sqrt().asin();
    let whole = integrate_rel(&kernel, 0.0, FRAC_PI_2, QUAD_REL);
    // integrate whichever side is smaller, for relative accuracy there
    if x <= 0.5 {
        integrate_rel(&kernel, 0.0, split, QUAD_REL) / whole
    } else {
        1.0 - integrate_rel(&kernel, split, FRAC_PI_2, QUAD_REL) / whole
    }
}

/// Φ(z) by quadrature of e^(−t²/2), with the normalizing constant itself
/// computed by quadrature rather than taken as √(2π).
pub fn normal_cdf_quad(z: f64) -> f64 {
    let kernel = |t: f64| (-0.5 * t * t).exp();
    let norm = integrate_rel(&kernel, -40.0, 40.0, QUAD_REL);
    let tail = |y: f64| integrate_rel(&kernel, y, y + 45.0, QUAD_REL) / norm;
    if z >= 0.0 {
        1.0 - tail(z)
    } else {
        tail(-z)
    }
}

/// Two-sided Student-t tail by quadrature in the θ = atan(u/√ν) coordinate,
/// where the density is proportional to cos^(ν−1)θ; the normalizer is the
/// same integral over the full quarter period.
pub fn t_two_sided_quad(t: f64, nu: f64) -> f64 {
    let kernel = |th: f64| th.cos().powf(nu - 1.0);
    let lo = (t.abs() / nu.sqrt()).atan();
    let num = integrate_rel(&kernel, lo, FRAC_PI_2, QUAD_REL);
    let den = integrate_rel(&kernel, 0.0, FRAC_PI_2, QUAD_REL);
    num / den
}

/// Upper chi-square tail by quadrature: Q(ν/2, x²/2).
pub fn chi_square_upper_quad(x2: f64, nu: f64) -> f64 {
    reg_upper_gamma_quad(0.5 * nu, 0.5 * x2)
}

/// Asserts |got − want| ≤ tol with a diagnostic that names the case.
pub fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{what}: got {got}, want {want} (off by {:.3e}, tol {tol:.3e})",
        (got - want).abs()
    );
}

/// Asserts relative agreement |got − want| ≤ rel·|want|.
pub fn assert_rel(got: f64, want: f64, rel: f64, what: &str) {
    assert!(
        (got - want).abs() <= rel * want.abs(),
        "{what}: got {got}, want {want} (rel {:.3e}, tol {rel:.3e})",
        (got - want).abs() / want.abs()
    );
}
