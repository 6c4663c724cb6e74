use crate::error::{Error, Result};
use num_complex::Complex64;

/// Tolerances and tail policy for the semi-infinite integrators.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Upper truncation point of the adaptive core; the remainder is summed
    /// cell-wise and extrapolated.
    pub tail_cutoff: f64,
    /// Extrapolation depth for oscillatory / algebraic tails.
    pub tail_order: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            max_subdivisions: 4000,
            tail_cutoff: 200.0,
            tail_order: 10,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::domain("max_subdivisions must be >= 1"));
        }
        if !(self.tail_cutoff > 0.0) {
            return Err(Error::domain("tail_cutoff must be positive"));
        }
        Ok(())
    }

    pub fn with_tail_cutoff(mut self, t: f64) -> Self {
        self.tail_cutoff = t;
        self
    }

    pub fn with_tols(mut self, abs_tol: f64, rel_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self.rel_tol = rel_tol;
        self
    }
}

// 15-point Kronrod / 7-point Gauss pair.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn rescale_error(mut err: f64, resabs: f64, resasc: f64) -> f64 {
    if resasc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / resasc).powf(1.5);
        err = if scale < 1.0 { resasc * scale } else { resasc };
    }
    let tiny = f64::MIN_POSITIVE / (50.0 * f64::EPSILON);
    if resabs > tiny {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    err
}

fn qk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let hl = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    let fc = f(center);
    let mut resg = WG[3] * fc;
    let mut resk = WGK[7] * fc;
    let mut resabs = resk.norm();
    let mut fv = [Complex64::new(0.0, 0.0); 15];
    fv[7] = fc;
    for j in 0..7 {
        let dx = hl * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        let fsum = f1 + f2;
        resk += WGK[j] * fsum;
        resabs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            resg += WG[j / 2] * fsum;
        }
    }
    let mean = resk * 0.5;
    let mut resasc = WGK[7] * (fc - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).norm() + (fv[14 - j] - mean).norm());
    }
    let err = rescale_error(((resk - resg) * hl).norm(), resabs * hl.abs(), resasc * hl.abs());
    (resk * hl, err)
}

struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

/// Globally adaptive Gauss-Kronrod integration of a complex-valued function
/// over a finite interval.
pub fn integrate_complex_finite<F: Fn(f64) -> Complex64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<(Complex64, f64)> {
    if a == b {
        return Ok((Complex64::new(0.0, 0.0), 0.0));
    }
    let (v0, e0) = qk15(&f, a, b);
    let mut segs = vec![Segment {
        a,
        b,
        value: v0,
        err: e0,
    }];
    let mut total_err = e0;
    let mut total: Complex64 = v0;
    let mut splits = 0usize;

    while total_err > abs_tol.max(rel_tol * total.norm()) {
        if splits >= max_subdivisions {
            return Err(Error::Convergence {
                partial: total.re,
                err_est: total_err,
            });
        }
        // split the segment with the largest error
        let (idx, _) = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.partial_cmp(&y.1.err).unwrap())
            .unwrap();
        let seg = segs.swap_remove(idx);
        let mid = 0.5 * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            // interval exhausted at machine precision; accept its estimate
            segs.push(seg);
            break;
        }
        let (vl, el) = qk15(&f, seg.a, mid);
        let (vr, er) = qk15(&f, mid, seg.b);
        total += vl + vr - seg.value;
        total_err += el + er - seg.err;
        segs.push(Segment {
            a: seg.a,
            b: mid,
            value: vl,
            err: el,
        });
        segs.push(Segment {
            a: mid,
            b: seg.b,
            value: vr,
            err: er,
        });
        splits += 1;
    }
    // resum for stability
    let value = segs.iter().fold(Complex64::new(0.0, 0.0), |s, g| s + g.value);
    let err = segs.iter().fold(0.0, |s, g| s + g.err);
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::NonFinite("integrate_complex_finite"));
    }
    Ok((value, err))
}

/// Real-valued wrapper around [`integrate_complex_finite`].
pub fn integrate_finite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<(f64, f64)> {
    let (v, e) = integrate_complex_finite(
        |x| Complex64::new(f(x), 0.0),
        a,
        b,
        abs_tol,
        rel_tol,
        max_subdivisions,
    )?;
    Ok((v.re, e))
}

/// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
/// accelerated limit and a conservative error estimate (the change at the
/// accepted table entry).
fn wynn_epsilon(s: &[Complex64]) -> (Complex64, f64) {
    let n = s.len();
    if n == 0 {
        return (Complex64::new(0.0, 0.0), f64::INFINITY);
    }
    if n < 3 {
        let last = *s.last().unwrap();
        let delta = if n == 2 {
            (s[1] - s[0]).norm()
        } else {
            f64::INFINITY
        };
        return (last, delta);
    }
    let scale = s.iter().map(|v| v.norm()).fold(1e-300, f64::max);
    let mut prev: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut cur: Vec<Complex64> = s.to_vec();
    // candidates: even-column tail entries, scored by the step from the
    // previous candidate; the smallest step wins (later columns can go
    // numerically unstable, so "latest" is not always best)
    let mut best = *s.last().unwrap();
    let mut best_delta = (s[n - 1] - s[n - 2]).norm();
    let mut last_cand = best;
    let mut m = 0usize;
    'outer: while cur.len() >= 2 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for j in 0..cur.len() - 1 {
            let diff = cur[j + 1] - cur[j];
            if diff.norm() <= 1e-16 * scale {
                // column numerically converged at this entry
                let delta = diff.norm().max(1e-16 * scale);
                if delta <= best_delta {
                    best = cur[j + 1];
                    best_delta = delta;
                }
                break 'outer;
            }
            next.push(prev[j + 1] + 1.0 / diff);
        }
        if next.is_empty() {
            break;
        }
        prev = std::mem::replace(&mut cur, next);
        m += 1;
        if m.is_multiple_of(2) {
            let cand = *cur.last().unwrap();
            let delta = (cand - last_cand).norm();
            last_cand = cand;
            if delta <= best_delta || m == 2 {
                best = cand;
                best_delta = delta.max(1e-16 * scale);
            }
        }
    }
    (best, best_delta)
}

/// Levin u-transform of a sequence of partial sums, with remainder offset
/// beta (for cell sums starting at T with width h, beta = 1 + T/h matches
/// the algebraic remainder scale). Handles algebraic remainders of any real
/// power as well as alternating term patterns; falls back to the epsilon
/// algorithm when a degenerate cell makes the weights singular. Returns the
/// transform value of the most stable order and a conservative error
/// estimate.
fn levin_u(s: &[Complex64], beta: f64) -> (Complex64, f64) {
    let len = s.len();
    if len < 4 {
        return wynn_epsilon(s);
    }
    let scale = s.iter().map(|v| v.norm()).fold(1e-300, f64::max);
    let last_term = s[len - 1] - s[len - 2];
    if last_term.norm() <= 1e-16 * scale {
        // the raw sum already converged to machine precision
        return (s[len - 1], last_term.norm().max(1e-16 * scale));
    }
    // ratios S_j / omega_j and 1 / omega_j, omega_j = (beta + j) a_j
    let mut s_over_w = Vec::with_capacity(len);
    let mut one_over_w = Vec::with_capacity(len);
    for j in 0..len {
        let a = if j == 0 { s[0] } else { s[j] - s[j - 1] };
        let omega = (beta + j as f64) * a;
        if omega.norm() < 1e-280 {
            return wynn_epsilon(s);
        }
        s_over_w.push(s[j] / omega);
        one_over_w.push(1.0 / omega);
    }
    let eval = |k: usize| -> Option<Complex64> {
        let mut num = Complex64::new(0.0, 0.0);
        let mut den = Complex64::new(0.0, 0.0);
        let mut binom = 1.0_f64;
        for j in 0..=k {
            let w = ((beta + j as f64) / (beta + k as f64)).powi(k as i32 - 1);
            let c = if j % 2 == 0 { binom * w } else { -binom * w };
            num += c * s_over_w[j];
            den += c * one_over_w[j];
            binom = binom * (k - j) as f64 / (j + 1) as f64;
        }
        if den.norm() < 1e-280 {
            None
        } else {
            Some(num / den)
        }
    };
    // walk the orders and keep the value at the most stable step
    let kmax = (len - 1).min(30);
    let mut best = *s.last().unwrap();
    let mut best_delta = last_term.norm();
    let mut prev: Option<Complex64> = None;
    for k in 2..=kmax {
        let Some(v) = eval(k) else { break };
        if let Some(p) = prev {
            let delta = (v - p).norm();
            if delta <= best_delta {
                best = v;
                best_delta = delta;
            }
        }
        prev = Some(v);
    }
    (best, (5.0 * best_delta).max(1e-16 * scale))
}

/// Semi-infinite integral with explicit tail cell width.
///
/// The range [0, tail_cutoff] is integrated adaptively; past the cutoff the
/// integral is summed over consecutive cells of the given width and the
/// partial sums are extrapolated (epsilon algorithm). Suitable both for
/// oscillatory integrands (choose the cell as a half period) and for smooth
/// algebraic decay.
pub fn integrate_semi_infinite_cells<F: Fn(f64) -> f64>(
    f: F,
    spec: &QuadratureSpec,
    cell: f64,
) -> Result<(f64, f64)> {
    let (v, e) =
        semi_infinite_complex_impl(|x| Complex64::new(f(x), 0.0), spec, cell)?;
    Ok((v.re, e))
}

/// Semi-infinite integral of a complex-valued function.
pub fn integrate_semi_infinite_complex<F: Fn(f64) -> Complex64>(
    f: F,
    spec: &QuadratureSpec,
    cell: f64,
) -> Result<(Complex64, f64)> {
    semi_infinite_complex_impl(f, spec, cell)
}

/// Semi-infinite integral with the default tail cell width (pi).
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    integrate_semi_infinite_cells(f, spec, std::f64::consts::PI)
}

fn semi_infinite_complex_impl<F: Fn(f64) -> Complex64>(
    f: F,
    spec: &QuadratureSpec,
    cell: f64,
) -> Result<(Complex64, f64)> {
    spec.validate()?;
    if !(cell > 0.0) {
        return Err(Error::domain("tail cell width must be positive"));
    }
    let core_tol_abs = 0.5 * spec.abs_tol;
    let (core, core_err) = integrate_complex_finite(
        &f,
        0.0,
        spec.tail_cutoff,
        core_tol_abs,
        spec.rel_tol,
        spec.max_subdivisions,
    )?;

    // tail cells
    let max_cells = (8 + 4 * spec.tail_order).min(96);
    let cell_tol = (spec.abs_tol / max_cells as f64).max(1e-15);
    let mut partials: Vec<Complex64> = Vec::with_capacity(max_cells);
    let mut running = Complex64::new(0.0, 0.0);
    let mut cells_err = 0.0;
    let mut tail = Complex64::new(0.0, 0.0);
    let mut tail_err = f64::INFINITY;
    for k in 0..max_cells {
        let a = spec.tail_cutoff + k as f64 * cell;
        let b = a + cell;
        let (cv, ce) = integrate_complex_finite(&f, a, b, cell_tol, spec.rel_tol, 400)?;
        running += cv;
        cells_err += ce;
        partials.push(running);
        if k >= 3 {
            let (ext, change) = levin_u(&partials, 1.0 + spec.tail_cutoff / cell);
            tail = ext;
            tail_err = change + cells_err;
            let scale = (core + tail).norm();
            if tail_err <= 0.5 * spec.abs_tol.max(spec.rel_tol * scale)
                && partials.len() >= spec.tail_order.min(6)
            {
                break;
            }
        }
    }
    if !tail_err.is_finite() {
        return Err(Error::Convergence {
            partial: core.re,
            err_est: f64::INFINITY,
        });
    }
    let value = core + tail;
    let err = core_err + tail_err;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::NonFinite("integrate_semi_infinite"));
    }
    Ok((value, err))
}
