//! The six concrete operator pairs: free Laplacian vs. Laplacian with a
//! point interaction, on the whole spaces R^n and the Dirichlet half spaces
//! H^n, n = 1, 2, 3.
//!
//! The functions g_n(lambda) are the finite parts of the regularized
//! diagonal Green function; together with the constants a_n, b_n and the
//! cutoff terms d_n(N) they determine resolvents, traces and spectra of
//! every model in the family.

use crate::error::{Error, Result};
use crate::numerics::{bessel_k0, log_neg, sqrt_on_cut, sqrt_upper, Rim};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Whole,
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Geometry {
    pub space: Space,
    pub dim: u8,
}

impl Geometry {
    pub fn new(space: Space, dim: u8) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(Error::domain(format!("dimension {dim} not in 1..=3")));
        }
        Ok(Geometry { space, dim })
    }

    pub const fn whole(dim: u8) -> Self {
        Geometry {
            space: Space::Whole,
            dim,
        }
    }

    pub const fn half(dim: u8) -> Self {
        Geometry {
            space: Space::Half,
            dim,
        }
    }

    pub const R1: Geometry = Geometry::whole(1);
    pub const R2: Geometry = Geometry::whole(2);
    pub const R3: Geometry = Geometry::whole(3);
    pub const H1: Geometry = Geometry::half(1);
    pub const H2: Geometry = Geometry::half(2);
    pub const H3: Geometry = Geometry::half(3);

    /// The physical (g_R-parameterized) operator exists: rank-one singular
    /// perturbations of the Laplacian do not exist on R^2.
    pub fn supports_physical(&self) -> bool {
        *self != Geometry::R2
    }

    /// The relative zeta pipeline is implemented: R^1, R^3, H^1, H^3.
    pub fn supports_zeta(&self) -> bool {
        matches!(
            *self,
            Geometry::R1 | Geometry::R3 | Geometry::H1 | Geometry::H3
        )
    }

    pub fn label(&self) -> String {
        let s = match self.space {
            Space::Whole => "R",
            Space::Half => "H",
        };
        format!("{}{}", s, self.dim)
    }
}

/// Renormalized coupling; infinite only in the H^1 Dirichlet limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coupling {
    Finite(f64),
    Infinite,
}

impl Coupling {
    pub fn inv(&self) -> f64 {
        match self {
            Coupling::Finite(g) => 1.0 / g,
            Coupling::Infinite => 0.0,
        }
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            Coupling::Finite(g) => Some(*g),
            Coupling::Infinite => None,
        }
    }
}

/// A concrete perturbed-operator model: geometry, delta position and
/// renormalized coupling.
#[derive(Debug, Clone)]
pub struct Model {
    pub geometry: Geometry,
    /// Delta position (distance to the wall in the half space; phase-only
    /// and trace-irrelevant in the whole space).
    pub a: f64,
    pub coupling: Coupling,
    bound_state_cache: OnceLock<bool>,
}

impl PartialEq for Model {
    fn eq(&self, other: &Self) -> bool {
        self.geometry == other.geometry && self.a == other.a && self.coupling == other.coupling
    }
}

impl Model {
    pub fn new(geometry: Geometry, a: f64, coupling: Coupling) -> Result<Self> {
        if !geometry.supports_physical() {
            return Err(Error::Capability(
                "singular rank one perturbations of the Laplace operator in dimension two do not exist on the whole plane".into(),
            ));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::domain("delta position a must be positive"));
        }
        match coupling {
            Coupling::Finite(g) => {
                if g == 0.0 || !g.is_finite() {
                    return Err(Error::domain("coupling g_R must be nonzero and finite"));
                }
            }
            Coupling::Infinite => {
                // Dirichlet limits: the half line (point spectrum pi^2 k^2/a^2)
                // and the line (b = 0, kept so the asymptotic-conditions report
                // can flag the failing consistency condition).
                if geometry != Geometry::H1 && geometry != Geometry::R1 {
                    return Err(Error::Capability(
                        "infinite coupling (Dirichlet limit) only supported in one dimension".into(),
                    ));
                }
            }
        }
        Ok(Model {
            geometry,
            a,
            coupling,
            bound_state_cache: OnceLock::new(),
        })
    }

    pub fn r1(g_r: f64) -> Result<Self> {
        Model::new(Geometry::R1, 1.0, Coupling::Finite(g_r))
    }

    pub fn r3(g_r: f64) -> Result<Self> {
        Model::new(Geometry::R3, 1.0, Coupling::Finite(g_r))
    }

    pub fn h1(a: f64, g_r: f64) -> Result<Self> {
        Model::new(Geometry::H1, a, Coupling::Finite(g_r))
    }

    pub fn h3(a: f64, g_r: f64) -> Result<Self> {
        Model::new(Geometry::H3, a, Coupling::Finite(g_r))
    }

    pub fn inv_g(&self) -> f64 {
        self.coupling.inv()
    }

    /// The derived constant b of the zeta pipelines: 1/(pi g_R) on R^1,
    /// 2/(pi^2 g_R) on H^3, pi g_R / 2 on H^1. Always recomputed.
    pub fn b(&self) -> Result<f64> {
        let g = self
            .coupling
            .finite()
            .ok_or_else(|| Error::Capability("b undefined in the Dirichlet limit".into()))?;
        match self.geometry {
            Geometry::R1 => Ok(1.0 / (PI * g)),
            Geometry::H3 => Ok(2.0 / (PI * PI * g)),
            Geometry::H1 => Ok(PI * g / 2.0),
            _ => Err(Error::Capability(format!(
                "no zeta-pipeline constant b for {}",
                self.geometry.label()
            ))),
        }
    }

    pub fn require_zeta(&self) -> Result<()> {
        if !self.geometry.supports_zeta() {
            return Err(Error::Capability(format!(
                "no zeta pipeline for {}",
                self.geometry.label()
            )));
        }
        if self.coupling == Coupling::Infinite {
            return Err(Error::Capability(
                "relative zeta function cannot be defined in the Dirichlet limit (consistency condition fails)".into(),
            ));
        }
        Ok(())
    }

    /// Whether the model has a bound state (computed once, then cached).
    pub fn has_bound_state(&self) -> bool {
        *self.bound_state_cache.get_or_init(|| {
            crate::bound_states::point_spectrum(self)
                .map(|s| s.has_bound_state)
                .unwrap_or(false)
        })
    }
}

/// Self-adjoint extension parameter alpha = cot(theta/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtensionParam {
    pub alpha: f64,
    pub theta: f64,
}

impl ExtensionParam {
    pub fn from_alpha(alpha: f64) -> Self {
        // theta in (0, 2 pi); theta = pi corresponds to alpha = 0 (maximal operator)
        let mut theta = 2.0 * (1.0 / alpha).atan();
        if theta <= 0.0 {
            theta += 2.0 * PI;
        }
        ExtensionParam { alpha, theta }
    }

    pub fn from_theta(theta: f64) -> Result<Self> {
        if !(0.0..2.0 * PI).contains(&theta) {
            return Err(Error::domain("theta must lie in [0, 2 pi)"));
        }
        Ok(ExtensionParam {
            alpha: 1.0 / (theta / 2.0).tan(),
            theta,
        })
    }
}

fn check_off_cut(lambda: Complex64) -> Result<()> {
    if !lambda.re.is_finite() || !lambda.im.is_finite() {
        return Err(Error::NonFinite("lambda"));
    }
    if lambda.im == 0.0 && lambda.re >= 0.0 {
        return Err(Error::domain(
            "lambda on [0, inf): use the explicit rim variants",
        ));
    }
    Ok(())
}

/// g_n(lambda) of the chosen geometry, evaluated at sqrt(lambda) = w.
/// Branch information enters only through w.
fn gn_at_sqrt(geometry: Geometry, a: f64, lambda: Complex64, w: Complex64) -> Result<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    match (geometry.space, geometry.dim) {
        (Space::Whole, 3) => Ok(2.0 * PI * PI * i * w),
        (Space::Whole, 2) => Ok(-PI * log_neg(lambda)?),
        (Space::Whole, 1) => Ok(i * PI / w),
        (Space::Half, 3) => {
            let e = (2.0 * i * a * w).exp();
            Ok(i * PI * PI * w / 2.0 - PI * PI / (4.0 * a) * e)
        }
        (Space::Half, 2) => {
            // K_0 argument with positive real part: -i w = principal
            // sqrt(-lambda). The K_0 term carries a minus sign: the
            // circular average of cos(2 a x) integrates to +2 pi K_0, which
            // the truncated-integral oracle confirms (the published display
            // has the opposite sign).
            let z = 2.0 * a * (-i * w);
            Ok(-PI / 4.0 * log_neg(lambda)? - PI / 2.0 * bessel_k0(z)?)
        }
        (Space::Half, 1) => {
            let e = (2.0 * i * a * w).exp();
            Ok(i * PI * (1.0 - e) / (4.0 * w))
        }
        _ => Err(Error::domain("invalid geometry")),
    }
}

/// g_n(lambda) (whole space) or the hatted half-space variant, with the
/// standing branch Im sqrt(lambda) > 0, for lambda off [0, inf).
pub fn gn_function(geometry: Geometry, a: f64, lambda: Complex64) -> Result<Complex64> {
    check_off_cut(lambda)?;
    let w = sqrt_upper(lambda)?;
    gn_at_sqrt(geometry, a, lambda, w)
}

/// Boundary values of g_n at lambda = v^2 on the chosen rim of the cut.
pub fn gn_on_cut(geometry: Geometry, a: f64, v: f64, rim: Rim) -> Result<Complex64> {
    if !(v > 0.0) {
        return Err(Error::domain("gn_on_cut: v must be positive"));
    }
    let w = sqrt_on_cut(v, rim);
    let lambda = Complex64::new(v * v, 0.0);
    // log(-lambda) boundary values: ln(v^2) -/+ i pi on the upper/lower rim
    let i = Complex64::new(0.0, 1.0);
    match (geometry.space, geometry.dim) {
        (Space::Whole, 2) => {
            let ln = Complex64::new((v * v).ln(), if rim == Rim::Upper { -PI } else { PI });
            Ok(-PI * ln)
        }
        (Space::Half, 2) => {
            let ln = Complex64::new((v * v).ln(), if rim == Rim::Upper { -PI } else { PI });
            let z = 2.0 * a * (-i * w);
            Ok(-PI / 4.0 * ln - PI / 2.0 * bessel_k0(z)?)
        }
        _ => gn_at_sqrt(geometry, a, lambda, w),
    }
}

/// The constants (a_n, b_n) resp. their hatted half-space variants.
///
/// a_n is the squared norm of the deficiency vectors,
/// a_n = (g_n(i) - g_n(-i)) / 2i, and b_n = (g_n(i) + g_n(-i)) / 2.
pub fn an_bn_constants(geometry: Geometry, a: f64) -> Result<(f64, f64)> {
    let s2 = std::f64::consts::SQRT_2;
    match (geometry.space, geometry.dim) {
        (Space::Whole, 3) => Ok((s2 * PI * PI, -s2 * PI * PI)),
        (Space::Whole, 2) => Ok((PI * PI / 2.0, 0.0)),
        (Space::Whole, 1) => Ok((PI / s2, PI / s2)),
        (Space::Half, 3) => {
            if !(a > 0.0) {
                return Err(Error::domain("half space needs a > 0"));
            }
            // from the defining combinations of g_3(+-i); the published
            // display carries the exponential term with the wrong sign and
            // an extra 1/2
            let e = (-s2 * a).exp();
            let an = PI * PI / 4.0 * (s2 - e * (s2 * a).sin() / a);
            let bn = -PI * PI / 4.0 * (s2 + e * (s2 * a).cos() / a);
            Ok((an, bn))
        }
        (Space::Half, 1) => {
            if !(a > 0.0) {
                return Err(Error::domain("half space needs a > 0"));
            }
            let e = (-s2 * a).exp();
            let (s, c) = ((s2 * a).sin(), (s2 * a).cos());
            let an = PI / (4.0 * s2) * (1.0 - e * (c + s));
            let bn = PI / (4.0 * s2) * (1.0 - e * (c - s));
            Ok((an, bn))
        }
        (Space::Half, 2) => {
            if !(a > 0.0) {
                return Err(Error::domain("half space needs a > 0"));
            }
            // from the defining combination of g_2(+-i)
            let gi = gn_function(geometry, a, Complex64::new(0.0, 1.0))?;
            let gmi = gn_function(geometry, a, Complex64::new(0.0, -1.0))?;
            let an = ((gi - gmi) / Complex64::new(0.0, 2.0)).re;
            let bn = ((gi + gmi) / 2.0).re;
            Ok((an, bn))
        }
        _ => Err(Error::domain("invalid geometry")),
    }
}

/// Divergent cutoff term d_n(N) of the large-N boundary-condition expansion.
pub fn dn_cutoff(geometry: Geometry, n_cut: f64) -> Result<f64> {
    if !(n_cut > 0.0) {
        return Err(Error::domain("dn_cutoff: N must be positive"));
    }
    Ok(match (geometry.space, geometry.dim) {
        (Space::Whole, 3) => 4.0 * PI * n_cut,
        (Space::Whole, 2) => 2.0 * PI * n_cut.ln(),
        (Space::Whole, 1) => -2.0 / n_cut,
        (Space::Half, 3) => PI * n_cut,
        (Space::Half, 2) => PI / 2.0 * n_cut.ln(),
        // half-line cutoff term of the finite-N expansion
        (Space::Half, 1) => -1.0 / (2.0 * n_cut),
        _ => return Err(Error::domain("invalid geometry")),
    })
}

/// The squared-resolvent integral J_n(lambda) = int |e|^2 / (|x|^2-lambda)^2,
/// closed form, at sqrt(lambda) = w. For the half space this is the integral
/// over the whole space of sin^2(ax)/(|x|^2-lambda)^2, the normalization used
/// by every trace display downstream.
fn jn_at_sqrt(geometry: Geometry, a: f64, lambda: Complex64, w: Complex64) -> Result<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    let l32 = lambda * w;
    match (geometry.space, geometry.dim) {
        (Space::Whole, 3) => Ok(i * PI * PI / w),
        (Space::Whole, 2) => Ok(-PI / lambda),
        (Space::Whole, 1) => Ok(-i * PI / (2.0 * l32)),
        (Space::Half, 3) => {
            let e = (2.0 * i * a * w).exp();
            Ok(i * PI * PI / (2.0 * w) * (1.0 - e))
        }
        (Space::Half, 2) => {
            let z = -2.0 * i * a * w;
            Ok(-PI / (2.0 * lambda) - PI * i * a / w * crate::numerics::bessel_k1(z)?)
        }
        (Space::Half, 1) => {
            let e = (2.0 * i * a * w).exp();
            Ok(-i * PI / (4.0 * l32) * (1.0 - e) + PI * a / (2.0 * lambda) * e)
        }
        _ => Err(Error::domain("invalid geometry")),
    }
}

pub(crate) fn jn_closed(geometry: Geometry, a: f64, lambda: Complex64) -> Result<Complex64> {
    check_off_cut(lambda)?;
    let w = sqrt_upper(lambda)?;
    jn_at_sqrt(geometry, a, lambda, w)
}

fn trace_from_denominator(
    denom: Complex64,
    inv_g_scale: f64,
    geometry: Geometry,
    a: f64,
    lambda: Complex64,
    w: Complex64,
) -> Result<Complex64> {
    let j = jn_at_sqrt(geometry, a, lambda, w)?;
    // pole detection scaled to the size of the terms forming the denominator
    let g = gn_at_sqrt(geometry, a, lambda, w)?;
    let scale = inv_g_scale.abs().max(g.norm()).max(1e-30);
    if denom.norm() < 1e-12 * scale {
        return Err(Error::Pole {
            location: lambda,
            order: 1,
        });
    }
    Ok(-j / denom)
}

/// Trace of the resolvent difference r(lambda) in the physical
/// g_R parameterization: r = -(1/g_R - g_n(lambda))^{-1} J_n(lambda).
pub fn trace_resolvent_diff(model: &Model, lambda: Complex64) -> Result<Complex64> {
    check_off_cut(lambda)?;
    let w = sqrt_upper(lambda)?;
    let g = gn_at_sqrt(model.geometry, model.a, lambda, w)?;
    trace_from_denominator(
        Complex64::new(model.inv_g(), 0.0) - g,
        model.inv_g(),
        model.geometry,
        model.a,
        lambda,
        w,
    )
}

/// Boundary values of the trace at lambda = v^2 on the chosen rim.
pub fn trace_on_cut(model: &Model, v: f64, rim: Rim) -> Result<Complex64> {
    if !(v > 0.0) {
        return Err(Error::domain("trace_on_cut: v must be positive"));
    }
    let w = sqrt_on_cut(v, rim);
    let lambda = Complex64::new(v * v, 0.0);
    let g = gn_on_cut(model.geometry, model.a, v, rim)?;
    trace_from_denominator(
        Complex64::new(model.inv_g(), 0.0) - g,
        model.inv_g(),
        model.geometry,
        model.a,
        lambda,
        w,
    )
}

/// Trace of the resolvent difference in the extension parameterization,
/// r = -(a_n/alpha + b_n - g_n(lambda))^{-1} J_n(lambda); defined for all
/// six geometries. Related to the physical form by 1/g_R = a_n/alpha + b_n.
pub fn trace_alpha(
    geometry: Geometry,
    a: f64,
    ext: ExtensionParam,
    lambda: Complex64,
) -> Result<Complex64> {
    check_off_cut(lambda)?;
    if ext.alpha == 0.0 {
        return Err(Error::domain(
            "alpha = 0 is the maximal operator; trace difference vanishes identically",
        ));
    }
    let w = sqrt_upper(lambda)?;
    let (an, bn) = an_bn_constants(geometry, a)?;
    let g = gn_at_sqrt(geometry, a, lambda, w)?;
    trace_from_denominator(
        Complex64::new(an / ext.alpha + bn, 0.0) - g,
        an / ext.alpha + bn,
        geometry,
        a,
        lambda,
        w,
    )
}

/// Regular (rank-one) part of the resolvent-difference kernel at momenta
/// x, y. The distributional diagonal delta(x-y)/(lambda-|x|^2) of the full
/// resolvent kernel is not included.
pub fn resolvent_kernel_correction(
    model: &Model,
    lambda: Complex64,
    x: &[f64],
    y: &[f64],
) -> Result<Complex64> {
    check_off_cut(lambda)?;
    let dim = model.geometry.dim as usize;
    if x.len() != dim || y.len() != dim {
        return Err(Error::domain("kernel: point dimension mismatch"));
    }
    if model.geometry.space == Space::Half && (x[0] < 0.0 || y[0] < 0.0) {
        return Err(Error::domain("kernel: half-space points need x_1 >= 0"));
    }
    let w = sqrt_upper(lambda)?;
    let g = gn_at_sqrt(model.geometry, model.a, lambda, w)?;
    let denom = Complex64::new(model.inv_g(), 0.0) - g;
    if denom.norm() < 1e-12 {
        return Err(Error::Pole {
            location: lambda,
            order: 1,
        });
    }
    let (ex, ey) = match model.geometry.space {
        // e(x) = exp(i a x_1), so e(x) conj(e(y)) = exp(i a (x_1 - y_1))
        Space::Whole => {
            let phase = Complex64::new(0.0, model.a * (x[0] - y[0])).exp();
            (phase, Complex64::new(1.0, 0.0))
        }
        Space::Half => (
            Complex64::new((model.a * x[0]).sin(), 0.0),
            Complex64::new((model.a * y[0]).sin(), 0.0),
        ),
    };
    let nx: f64 = x.iter().map(|t| t * t).sum();
    let ny: f64 = y.iter().map(|t| t * t).sum();
    Ok(-(ex * ey) / denom / ((lambda - nx) * (lambda - ny)))
}

/// Low-energy scattering data of the three-dimensional point interaction:
/// amplitude f(k), differential cross section |f|^2 and the squared
/// scattering length 4 m^2 g_R^2.
pub fn scattering(m: f64, g_r: f64, k: f64) -> Result<(Complex64, f64, f64)> {
    if !(m > 0.0) {
        return Err(Error::domain("scattering: mass must be positive"));
    }
    if k < 0.0 {
        return Err(Error::domain("scattering: k must be nonnegative"));
    }
    let f = 2.0 * m * g_r / Complex64::new(1.0, -2.0 * m * g_r * k);
    let dcs = f.norm_sqr();
    Ok((f, dcs, 4.0 * m * m * g_r * g_r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gn_whole_space_examples() {
        // g_3(-1) = 2 pi^2 i * i = -2 pi^2
        let g3 = gn_function(Geometry::R3, 1.0, c(-1.0, 0.0)).unwrap();
        assert!((g3 - c(-2.0 * PI * PI, 0.0)).norm() < 1e-12);
        // g_1(-1) = i pi / i = pi
        let g1 = gn_function(Geometry::R1, 1.0, c(-1.0, 0.0)).unwrap();
        assert!((g1 - c(PI, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn gn_half_line_example() {
        // a = 1, lambda = -1: pi (1 - e^{-2}) / 4
        let g = gn_function(Geometry::H1, 1.0, c(-1.0, 0.0)).unwrap();
        let want = PI * (1.0 - (-2.0_f64).exp()) / 4.0;
        assert!((g - c(want, 0.0)).norm() < 1e-13, "got {g}, want {want}");
    }

    #[test]
    fn gn_rejects_cut_without_rim() {
        assert!(gn_function(Geometry::R1, 1.0, c(2.0, 0.0)).is_err());
        assert!(gn_function(Geometry::R1, 1.0, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn an_bn_whole_tables() {
        let s2 = std::f64::consts::SQRT_2;
        let (a3, b3) = an_bn_constants(Geometry::R3, 1.0).unwrap();
        assert!((a3 - s2 * PI * PI).abs() < 1e-12 && (b3 + s2 * PI * PI).abs() < 1e-12);
        let (a2, b2) = an_bn_constants(Geometry::R2, 1.0).unwrap();
        assert!((a2 - PI * PI / 2.0).abs() < 1e-12 && b2.abs() < 1e-12);
        let (a1, b1) = an_bn_constants(Geometry::R1, 1.0).unwrap();
        assert!((a1 - PI / s2).abs() < 1e-12 && (b1 - PI / s2).abs() < 1e-12);
    }

    #[test]
    fn an_bn_match_deficiency_combination() {
        // a_n = (g_n(i) - g_n(-i))/2i and b_n = (g_n(i)+g_n(-i))/2 for every geometry
        for geom in [
            Geometry::R1,
            Geometry::R2,
            Geometry::R3,
            Geometry::H1,
            Geometry::H2,
            Geometry::H3,
        ] {
            for &a in &[0.5, 1.0, 2.3] {
                let (an, bn) = an_bn_constants(geom, a).unwrap();
                let gi = gn_function(geom, a, c(0.0, 1.0)).unwrap();
                let gmi = gn_function(geom, a, c(0.0, -1.0)).unwrap();
                let an_def = ((gi - gmi) / c(0.0, 2.0)).re;
                let bn_def = ((gi + gmi) / 2.0).re;
                assert!(
                    (an - an_def).abs() < 1e-10 * an.abs().max(1.0),
                    "a_n mismatch for {} a={a}: table {an} vs definition {an_def}",
                    geom.label()
                );
                assert!(
                    (bn - bn_def).abs() < 1e-10 * bn.abs().max(1.0),
                    "b_n mismatch for {} a={a}: table {bn} vs definition {bn_def}",
                    geom.label()
                );
                // imaginary parts of the combinations vanish
                assert!(((gi - gmi) / c(0.0, 2.0)).im.abs() < 1e-10);
            }
        }
    }

    #[test]
    fn dn_examples() {
        assert!((dn_cutoff(Geometry::R2, 100.0).unwrap() - 2.0 * PI * 100.0_f64.ln()).abs() < 1e-12);
        assert!((dn_cutoff(Geometry::H3, 10.0).unwrap() - 10.0 * PI).abs() < 1e-12);
        assert!((dn_cutoff(Geometry::R1, 10.0).unwrap() + 0.2).abs() < 1e-15);
    }

    #[test]
    fn trace_r1_displayed_form() {
        // b = 2 means g_R = 1/(2 pi); r(-1) = -1/2
        let m = Model::r1(1.0 / (2.0 * PI)).unwrap();
        let r = trace_resolvent_diff(&m, c(-1.0, 0.0)).unwrap();
        assert!((r - c(-0.5, 0.0)).norm() < 1e-12, "got {r}");
        // generic lambda: against -1/(2 lambda (i b sqrt(lambda) + 1))
        for &(re, im) in &[(-2.0, 0.0), (1.0, 1.0), (-2.0, 3.0), (0.5, -0.7)] {
            let l = c(re, im);
            let w = sqrt_upper(l).unwrap();
            let b = m.b().unwrap();
            let want = -1.0 / (2.0 * l * (c(0.0, b) * w + 1.0));
            let got = trace_resolvent_diff(&m, l).unwrap();
            assert!((got - want).norm() < 1e-12 * want.norm());
        }
    }

    #[test]
    fn trace_h3_displayed_form() {
        // a = 1, b = 1 (g_R = 2/pi^2), lambda = -1:
        // -(1 - e^{-2}) / (2 + e^{-2}/2)
        let m = Model::h3(1.0, 2.0 / (PI * PI)).unwrap();
        assert!((m.b().unwrap() - 1.0).abs() < 1e-14);
        let r = trace_resolvent_diff(&m, c(-1.0, 0.0)).unwrap();
        let e2 = (-2.0_f64).exp();
        let want = -(1.0 - e2) / (2.0 + e2 / 2.0);
        assert!((r - c(want, 0.0)).norm() < 1e-12, "got {r}, want {want}");
        // displayed quotient at generic lambda
        for &(re, im) in &[(1.0, 1.0), (-2.0, 3.0)] {
            let l = c(re, im);
            let w = sqrt_upper(l).unwrap();
            let i = c(0.0, 1.0);
            let e = (2.0 * i * w).exp();
            let want = (1.0 - e) / (i * w * (1.0 - i * w + e / 2.0));
            let got = trace_resolvent_diff(&m, l).unwrap();
            assert!((got - want).norm() < 1e-11 * want.norm());
        }
    }

    #[test]
    fn trace_small_coupling_vanishes() {
        for geom in [Geometry::R1, Geometry::R3, Geometry::H1, Geometry::H3] {
            let m = Model::new(geom, 1.0, Coupling::Finite(1e-12)).unwrap();
            let r = trace_resolvent_diff(&m, c(-1.0, 0.0)).unwrap();
            assert!(r.norm() < 1e-10, "{}: {r}", geom.label());
        }
    }

    #[test]
    fn trace_conjugation_symmetry() {
        let m = Model::h3(0.7, 1.3).unwrap();
        for &(re, im) in &[(1.0, 1.0), (-2.0, 3.0), (0.3, -2.0)] {
            let l = c(re, im);
            let r = trace_resolvent_diff(&m, l).unwrap();
            let rc = trace_resolvent_diff(&m, l.conj()).unwrap();
            assert!((rc - r.conj()).norm() < 1e-13 * r.norm().max(1e-30));
        }
    }

    #[test]
    fn trace_alpha_matches_gr_after_substitution() {
        // 1/g_R = a_n/alpha + b_n, n in {1,3}, both spaces
        let mut rng = 0.77_f64;
        let mut next = || {
            rng = (rng * 9301.0 + 49297.0) % 233280.0 / 233280.0;
            rng
        };
        let geoms = [Geometry::R1, Geometry::R3, Geometry::H1, Geometry::H3];
        for trial in 0..1000 {
            let geom = geoms[trial % 4];
            let a = 0.3 + 2.0 * next();
            let alpha = 0.2 + 3.0 * next();
            let l = c(4.0 * next() - 2.0, 0.3 + 3.0 * next());
            let ext = ExtensionParam::from_alpha(alpha);
            let (an, bn) = an_bn_constants(geom, a).unwrap();
            let inv_g = an / alpha + bn;
            if inv_g.abs() < 1e-6 {
                continue;
            }
            let m = Model::new(geom, a, Coupling::Finite(1.0 / inv_g)).unwrap();
            let r_alpha = trace_alpha(geom, a, ext, l).unwrap();
            let r_gr = trace_resolvent_diff(&m, l).unwrap();
            assert!(
                (r_alpha - r_gr).norm() <= 1e-12 * r_gr.norm().max(1e-300),
                "{} a={a} alpha={alpha} l={l}: {r_alpha} vs {r_gr}",
                geom.label()
            );
        }
    }

    #[test]
    fn whole_space_trace_independent_of_a() {
        let l = c(-1.5, 2.5);
        for geom in [Geometry::R1, Geometry::R3] {
            let vals: Vec<Complex64> = [0.5, 1.0, 2.0]
                .iter()
                .map(|&a| {
                    let m = Model::new(geom, a, Coupling::Finite(0.9)).unwrap();
                    trace_resolvent_diff(&m, l).unwrap()
                })
                .collect();
            assert_eq!(vals[0], vals[1]);
            assert_eq!(vals[1], vals[2]);
        }
    }

    #[test]
    fn trace_large_lambda_decay() {
        // |lambda r(lambda)| stays bounded along lambda = -t toward 1e6
        // (grid starts past the negative-axis pole region)
        for geom in [Geometry::R1, Geometry::R3, Geometry::H1, Geometry::H3] {
            let m = Model::new(geom, 1.0, Coupling::Finite(1.0)).unwrap();
            let mut bound = 0.0_f64;
            let mut t = 1e3;
            while t <= 1e6 {
                let r = trace_resolvent_diff(&m, c(-t, 0.0)).unwrap();
                bound = bound.max((r * c(t, 0.0)).norm());
                t *= 10.0;
            }
            assert!(bound < 10.0, "{}: |lambda r| up to {bound}", geom.label());
        }
    }

    #[test]
    fn kernel_examples() {
        // R1, b = 2, lambda = -1, x = y = 0 -> -1/pi
        let m = Model::r1(1.0 / (2.0 * PI)).unwrap();
        let k = resolvent_kernel_correction(&m, c(-1.0, 0.0), &[0.0], &[0.0]).unwrap();
        assert!((k - c(-1.0 / PI, 0.0)).norm() < 1e-13, "got {k}");
        // Hermitian symmetry at real negative lambda
        let m3 = Model::h3(0.8, 1.1).unwrap();
        let x = [1.0, 0.3, -0.2];
        let y = [0.4, -1.0, 0.7];
        let kxy = resolvent_kernel_correction(&m3, c(-2.0, 0.0), &x, &y).unwrap();
        let kyx = resolvent_kernel_correction(&m3, c(-2.0, 0.0), &y, &x).unwrap();
        assert!((kxy - kyx.conj()).norm() < 1e-13 * kxy.norm());
        // half space: kernel vanishes when a x_1 is a multiple of pi
        let m1 = Model::h1(1.0, 1.0).unwrap();
        let k0 = resolvent_kernel_correction(&m1, c(-1.0, 0.0), &[PI], &[0.37]).unwrap();
        assert!(k0.norm() < 1e-13);
    }

    #[test]
    fn scattering_examples() {
        let (f, _, _) = scattering(1.0, 1.0, 0.0).unwrap();
        assert!((f - c(2.0, 0.0)).norm() < 1e-15);
        let (_, dcs, _) = scattering(1.0, 1.0, 1.0).unwrap();
        assert!((dcs - 0.8).abs() < 1e-14);
        let (_, _, a2) = scattering(1.0, 0.5, 0.3).unwrap();
        assert!((a2 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn model_capabilities() {
        assert!(Model::new(Geometry::R2, 1.0, Coupling::Finite(1.0)).is_err());
        assert!(Model::new(Geometry::H2, 1.0, Coupling::Finite(1.0)).is_ok());
        assert!(Model::new(Geometry::H2, 1.0, Coupling::Finite(1.0))
            .unwrap()
            .require_zeta()
            .is_err());
        assert!(Model::new(Geometry::R3, 1.0, Coupling::Infinite).is_err());
        assert!(Model::new(Geometry::H1, 1.0, Coupling::Infinite).is_ok());
        assert!(Model::new(Geometry::H1, -1.0, Coupling::Finite(1.0)).is_err());
        assert!(Model::new(Geometry::R1, 1.0, Coupling::Finite(0.0)).is_err());
    }

    #[test]
    fn model_is_shareable_between_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Model>();
        assert_send_sync::<Geometry>();
    }

    #[test]
    fn extension_param_roundtrip() {
        let e = ExtensionParam::from_theta(PI).unwrap();
        assert!(e.alpha.abs() < 1e-15);
        let e2 = ExtensionParam::from_alpha(1.0);
        assert!((e2.alpha - 1.0 / (e2.theta / 2.0).tan()).abs() < 1e-14);
    }
}
