//! Small derivative-free numerical routines used by the density statistics.

/// Adaptive Simpson quadrature on `[a, b]` with absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Integrate over consecutive intervals `[breaks[k], breaks[k+1]]`, so the
/// integrand only needs to be smooth inside each piece.
pub fn integrate_pieces<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], tol: f64) -> f64 {
    let pieces = breaks.len().saturating_sub(1).max(1) as f64;
    breaks
        .windows(2)
        .map(|w| adaptive_simpson(f, w[0], w[1], tol / pieces))
        .sum()
}

/// Smallest-interval bisection for a sign change of `g` on `[lo, hi]`.
/// `g(lo)` and `g(hi)` must not have the same strict sign.
pub fn bisect<G: Fn(f64) -> f64>(g: G, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut g_lo = g(lo);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let g_mid = g(mid);
        if (g_mid < 0.0) == (g_lo < 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`.
/// Returns `(argmax, max)`, comparing the interior optimum against both ends.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = crate::number::OMEGA;
    let (mut lo, mut hi) = (a, b);
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    while hi - lo > tol {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    let x = 0.5 * (lo + hi);
    [(x, f(x)), (a, f(a)), (b, f(b))]
        .into_iter()
        .fold((x, f64::NEG_INFINITY), |best, cand| {
            if cand.1 > best.1 {
                cand
            } else {
                best
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_on_smooth_functions() {
        assert!(
            (adaptive_simpson(&|x: f64| x.sin(), 0.0, std::f64::consts::PI, 1e-12) - 2.0).abs()
                < 1e-11
        );
        assert!(
            (adaptive_simpson(&|x: f64| x.exp(), 0.0, 1.0, 1e-12) - (1f64.exp() - 1.0)).abs()
                < 1e-11
        );
        // x ln x is singular in its derivative at 0 but integrable: -1/4
        let xlnx = |x: f64| if x == 0.0 { 0.0 } else { x * x.ln() };
        assert!((adaptive_simpson(&xlnx, 0.0, 1.0, 1e-12) + 0.25).abs() < 1e-10);
    }

    #[test]
    fn pieces_handle_kinks() {
        let f = |x: f64| (x - 0.3).abs();
        let exact = 0.3 * 0.3 / 2.0 + 0.7 * 0.7 / 2.0;
        assert!((integrate_pieces(&f, &[0.0, 0.3, 1.0], 1e-12) - exact).abs() < 1e-13);
    }

    #[test]
    fn bisection_finds_cube_root() {
        let r = bisect(|x| x * x * x - 2.0, 0.0, 2.0, 1e-12);
        assert!((r - 2f64.cbrt()).abs() < 1e-11);
    }

    #[test]
    fn golden_section_finds_interior_and_endpoint_maxima() {
        let (x, fx) = golden_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-8 && fx.abs() < 1e-15);
        let (x, _) = golden_max(|x| x, 0.0, 1.0, 1e-10);
        assert_eq!(x, 1.0);
    }
}
