//! The cross-validation suite: one named check per acceptance criterion,
//! plus WARN rows for every documented discrepancy between the published
//! closed forms and the values the machinery itself produces.
//!
//! WARN rows never fail a run; FAIL rows do. The criteria are pinned to the
//! published reference numbers even where the internally consistent route
//! provably lands elsewhere (the H^3 small-a force); in that case the
//! failing row is accompanied by the derived-coefficient row so the table
//! documents both.

use crate::bound_states::{eigenvalue_residual, point_spectrum, spectrum_threshold};
use crate::numerics::QuadratureSpec;
use crate::operator_models::{trace_resolvent_diff, Coupling, Geometry, Model};
use crate::oracle_appendix::{compare_exact, compare_truncated};
use crate::report::{Check, VerificationReport};
use crate::spectral::{asymptotics_check, cross_cut_measure, spectral_measure};
use crate::thermodynamics::{casimir_force, in_constants, log_eta, log_eta_closed_whole};
use crate::zeta::{
    laurent_at_minus_half, residue_published, zeta0_quadrature, zeta_closed_r1_published,
    zeta_closed_whole,
};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::time::Instant;

fn c64(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn runtime_check(name: &str, start: Instant, budget_s: f64) -> Check {
    let elapsed = start.elapsed().as_secs_f64();
    Check::absolute(format!("{name}/runtime-s"), elapsed, 0.0, budget_s)
        .with_detail(format!("budget {budget_s} s"))
}

/// Criterion 1: the constants I0, I1, I2 within +-0.01 of the published
/// values, in under 30 s.
pub fn c01_in_constants(spec: &QuadratureSpec) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport::default();
    match in_constants(spec) {
        Ok(v) => {
            rep.push(Check::absolute("c01/I0", v.i0, -0.12, 0.01));
            rep.push(Check::absolute("c01/I1", v.i1, -0.51, 0.01));
            rep.push(Check::absolute("c01/I2", v.i2, -1.04, 0.01));
            rep.push(Check::absolute("c01/err-est", v.err_est, 0.0, 1e-4));
        }
        Err(e) => rep.push(
            Check::absolute("c01/evaluation", f64::NAN, 0.0, 0.0).with_detail(e.to_string()),
        ),
    }
    rep.push(runtime_check("c01", start, 30.0));
    rep
}

/// Criterion 2, as stated: the numeric-derivative force on H^3 at
/// a = 1e-3, g_R = 1e6 against p a^2 in [0.14, 0.16] and the published
/// analytic coefficient within 5%. The numeric route lands at
/// (1 + log 2 + pi I0)/(2 pi) ~ 0.2105 (documented erratum: the published
/// display doubles the I0 term), so the two pinned rows fail; the
/// derived-coefficient row documents the consistent value.
pub fn c02_h3_small_a_force(spec: &QuadratureSpec) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport::default();
    let a = 1e-3;
    let model = match Model::h3(a, 1e6) {
        Ok(m) => m,
        Err(e) => {
            rep.push(Check::absolute("c02/model", f64::NAN, 0.0, 0.0).with_detail(e.to_string()));
            return rep;
        }
    };
    match (casimir_force(&model, 1.0, spec), in_constants(spec)) {
        (Ok(p), Ok(ins)) => {
            let pa2 = p * a * a;
            rep.push(
                Check::absolute("c02/p-a2-in-[0.14,0.16]", pa2, 0.15, 0.01)
                    .with_detail("pinned to the published 0.15/a^2"),
            );
            let stated = (1.0 + 2.0_f64.ln() + 2.0 * PI * ins.i0) / (2.0 * PI);
            rep.push(
                Check::relative("c02/numeric-vs-published-coefficient", pa2, stated, 0.05)
                    .with_detail("published (1+log2+2 pi I0)/(2 pi)"),
            );
            let derived = (1.0 + 2.0_f64.ln() + PI * ins.i0) / (2.0 * PI);
            rep.push(
                Check::relative("c02/numeric-vs-derived-coefficient", pa2, derived, 0.05)
                    .with_detail("(1+log2+pi I0)/(2 pi): differentiating the assembled energy"),
            );
            rep.push(Check::warn(
                "c02/published-vs-derived-coefficient",
                stated,
                derived,
                "published H3 force display doubles the I0 term",
            ));
        }
        (Err(e), _) | (_, Err(e)) => {
            rep.push(Check::absolute("c02/force", f64::NAN, 0.0, 0.0).with_detail(e.to_string()))
        }
    }
    rep.push(runtime_check("c02", start, 120.0));
    rep
}

/// Criterion 3: H^1 small-a force vs g_R/(4a) + g_R^2 pi log2/8 within 2%.
pub fn c03_h1_small_a_force(spec: &QuadratureSpec) -> VerificationReport {
    let mut rep = VerificationReport::default();
    let a = 1e-3;
    for &g in &[0.5, 1.0] {
        let model = Model::h1(a, g).unwrap();
        match casimir_force(&model, 1.0, spec) {
            Ok(p) => {
                let want = g / (4.0 * a) + g * g * PI * 2.0_f64.ln() / 8.0;
                rep.push(Check::relative(
                    format!("c03/H1-force/gR={g}"),
                    p,
                    want,
                    0.02,
                ));
            }
            Err(e) => rep.push(
                Check::absolute(format!("c03/H1-force/gR={g}"), f64::NAN, 0.0, 0.0)
                    .with_detail(e.to_string()),
            ),
        }
    }
    rep
}

/// Criterion 4: the H^1 residue at s = -1/2 equals -g_R/4 within 1e-8.
pub fn c04_h1_residue(spec: &QuadratureSpec) -> VerificationReport {
    let mut rep = VerificationReport::default();
    for &g in &[0.5, 1.0, 2.0] {
        let model = Model::h1(1.0, g).unwrap();
        match laurent_at_minus_half(&model, spec) {
            Ok(l) => rep.push(Check::absolute(
                format!("c04/H1-residue/gR={g}"),
                l.residue.re,
                -g / 4.0,
                1e-8,
            )),
            Err(e) => rep.push(
                Check::absolute(format!("c04/H1-residue/gR={g}"), f64::NAN, 0.0, 0.0)
                    .with_detail(e.to_string()),
            ),
        }
    }
    rep
}

/// Criterion 5: H^3 residue self-consistency (extraction equals b/pi);
/// the published value 2/(pi^2 g_R) is reported as WARN.
pub fn c05_h3_residue(spec: &QuadratureSpec) -> VerificationReport {
    let mut rep = VerificationReport::default();
    for &(a, g) in &[(1.0, 2.0 / (PI * PI)), (0.5, 1.0), (2.0, 0.7)] {
        let model = Model::h3(a, g).unwrap();
        let b = model.b().unwrap();
        match laurent_at_minus_half(&model, spec) {
            Ok(l) => {
                rep.push(Check::absolute(
                    format!("c05/H3-residue-consistency/a={a}/gR={g}"),
                    l.residue.re,
                    b / PI,
                    1e-8,
                ));
                rep.push(Check::warn(
                    format!("c05/H3-residue-vs-published/a={a}/gR={g}"),
                    l.residue.re,
                    residue_published(&model).unwrap(),
                    "published residue 2/(pi^2 g_R) = pi x extracted value",
                ));
            }
            Err(e) => rep.push(
                Check::absolute(format!("c05/H3-residue/a={a}"), f64::NAN, 0.0, 0.0)
                    .with_detail(e.to_string()),
            ),
        }
    }
    rep
}

/// Criterion 6: whole-space closed forms. R^3: zeta(0) = 1/2 exactly.
/// R^1: the measure route equals the closed form on 20 strip points to
/// 1e-8; the closed form is the cos variant the measure integral produces,
/// and the published sin variant is carried as WARN.
pub fn c06_whole_space_closed_forms(spec: &QuadratureSpec) -> VerificationReport {
    let mut rep = VerificationReport::default();
    let z30 = zeta_closed_whole(Geometry::R3, 1.7, c64(0.0)).unwrap();
    rep.push(Check::absolute("c06/R3-zeta-at-0", z30.re, 0.5, 1e-15));
    let m = Model::r1(1.0).unwrap();
    let mut worst = 0.0_f64;
    let mut worst_s = 0.0;
    for k in 0..20 {
        let sre = -0.4 + 0.8 * (k as f64) / 19.0;
        let s = c64(sre);
        let quad = match zeta0_quadrature(&m, s, spec) {
            Ok(v) => v,
            Err(e) => {
                rep.push(
                    Check::absolute("c06/R1-measure-route", f64::NAN, 0.0, 0.0)
                        .with_detail(e.to_string()),
                );
                return rep;
            }
        };
        let closed = zeta_closed_whole(Geometry::R1, 1.0, s).unwrap();
        let d = (quad - closed).norm();
        if d > worst {
            worst = d;
            worst_s = sre;
        }
    }
    rep.push(
        Check::absolute("c06/R1-measure-vs-closed-20pts", worst, 0.0, 1e-8)
            .with_detail(format!("worst deviation at Re s = {worst_s:.3}")),
    );
    let s_probe = c64(0.3);
    rep.push(Check::warn(
        "c06/R1-closed-vs-published-sin-form",
        zeta_closed_whole(Geometry::R1, 1.0, s_probe).unwrap().re,
        zeta_closed_r1_published(1.0, s_probe).unwrap().re,
        "published R1 zeta has sin(pi s) where the measure integral gives cos(pi s)",
    ));
    rep
}

/// Criterion 7: the full closed-vs-brute-force oracle suite.
pub fn c07_appendix_oracles() -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport::default();
    let lambdas = [
        Complex64::new(-1.0, 0.0),
        Complex64::new(1.0, 1.0),
        Complex64::new(-2.0, 3.0),
    ];
    // cutoff-free families to 1e-7 relative
    for n in [1u8, 2, 3] {
        for &l in &lambdas {
            for a in [None, Some(1.0)] {
                match compare_exact(n, l, a) {
                    Ok(cmp) => {
                        let rel = cmp.abs_diff / cmp.closed.norm().max(1.0);
                        rep.push(Check::absolute(format!("c07/{}", cmp.name), rel, 0.0, 1e-7));
                    }
                    Err(e) => rep.push(
                        Check::absolute(format!("c07/exact/n={n}"), f64::NAN, 0.0, 0.0)
                            .with_detail(e.to_string()),
                    ),
                }
            }
        }
        // quartic norms (lambda-free)
        let cl = crate::oracle_appendix::quartic_norm_integral(
            n,
            crate::oracle_appendix::EvalMode::Closed,
        )
        .unwrap();
        let nu = crate::oracle_appendix::quartic_norm_integral(
            n,
            crate::oracle_appendix::EvalMode::Numeric,
        )
        .unwrap();
        rep.push(Check::absolute(
            format!("c07/quartic-norm/n={n}"),
            (cl - nu).norm() / cl.norm(),
            0.0,
            1e-7,
        ));
    }
    // truncated families: decay between N and 2N
    for n in [1u8, 2, 3] {
        for &l in &lambdas {
            for a in [None, Some(0.8)] {
                let d1 = compare_truncated(n, l, a, 200.0).map(|c| c.abs_diff);
                let d2 = compare_truncated(n, l, a, 400.0).map(|c| c.abs_diff);
                match (d1, d2) {
                    (Ok(d1), Ok(d2)) => {
                        let kind = if a.is_none() { "disc" } else { "halfdisc" };
                        let ratio = if d1 > 1e-9 { d2 / d1 } else { 0.0 };
                        rep.push(
                            Check::absolute(
                                format!("c07/{kind}-decay/n={n}/lambda={l}"),
                                ratio,
                                0.0,
                                0.75,
                            )
                            .with_detail(format!("|diff| {d1:.2e} -> {d2:.2e}")),
                        );
                    }
                    (Err(e), _) | (_, Err(e)) => rep.push(
                        Check::absolute(format!("c07/truncated/n={n}"), f64::NAN, 0.0, 0.0)
                            .with_detail(e.to_string()),
                    ),
                }
            }
        }
    }
    rep.push(runtime_check("c07", start, 60.0));
    rep
}

/// Criterion 8: closed-form spectral measure vs cross-cut limit within
/// 1e-4 on v in {0.1, 0.5, 1, 2, 5, 10}.
pub fn c08_measure_cross_check() -> VerificationReport {
    let mut rep = VerificationReport::default();
    let models = [
        ("R1", Model::r1(1.0 / PI).unwrap()),
        ("H3", Model::h3(1.0, 2.0 / (PI * PI)).unwrap()),
        ("H1", Model::h1(1.0, 2.0 / PI).unwrap()),
    ];
    for (label, m) in &models {
        let mut worst = 0.0_f64;
        for &v in &[0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
            let closed = spectral_measure(m, v).unwrap();
            match cross_cut_measure(m, v, &[]) {
                Ok(cc) => worst = worst.max((closed - cc).abs()),
                Err(e) => {
                    rep.push(
                        Check::absolute(format!("c08/{label}/v={v}"), f64::NAN, 0.0, 0.0)
                            .with_detail(e.to_string()),
                    );
                    continue;
                }
            }
        }
        rep.push(Check::absolute(
            format!("c08/{label}/max-deviation"),
            worst,
            0.0,
            1e-4,
        ));
    }
    rep
}

/// Criterion 9: the H^3 measure denominator stays positive on 1e5 samples
/// of [0, 1e3] for (a, b) in {0.5, 1, 2}^2.
pub fn c09_h3_regularity() -> VerificationReport {
    let mut rep = VerificationReport::default();
    let mut min_den = f64::INFINITY;
    for &a in &[0.5, 1.0, 2.0] {
        for &b in &[0.5, 1.0, 2.0] {
            for k in 0..100_000 {
                let v = 1000.0 * k as f64 / 99_999.0;
                let (s, c) = (2.0 * a * v).sin_cos();
                let den = 1.0 + 4.0 * a * a * (b * b + v * v) + 4.0 * a * b * c - 4.0 * a * v * s;
                min_den = min_den.min(den);
            }
        }
    }
    let ok = if min_den > 0.0 { 1.0 } else { 0.0 };
    rep.push(
        Check::absolute("c09/H3-denominator-positive", ok, 1.0, 0.0)
            .with_detail(format!("minimum over 9e5 samples: {min_den:.6e}")),
    );
    rep
}

/// Criterion 10: bound states. Dirichlet roots to 1e-10; empty whole-space
/// point spectra for g_R > 0; residual and trace-pole verification for every
/// located eigenvalue in the self-consistent geometries. The published
/// statement-vs-proof threshold clashes are WARN rows.
pub fn c10_bound_states() -> VerificationReport {
    let mut rep = VerificationReport::default();
    // Dirichlet limit
    let a = 1.0;
    let md = Model::new(Geometry::H1, a, Coupling::Infinite).unwrap();
    match point_spectrum(&md) {
        Ok(s) => {
            let mut worst = 0.0_f64;
            for (k, &lam) in s.eigenvalues.iter().enumerate() {
                let want = PI * PI * ((k + 1) as f64).powi(2) / (a * a);
                worst = worst.max((lam - want).abs() / want);
            }
            rep.push(Check::absolute(
                "c10/H1-dirichlet-roots-rel",
                worst,
                0.0,
                1e-10,
            ));
        }
        Err(e) => rep.push(
            Check::absolute("c10/H1-dirichlet", f64::NAN, 0.0, 0.0).with_detail(e.to_string()),
        ),
    }
    // empty whole-space spectra for positive coupling
    for (label, m) in [
        ("R1", Model::r1(1.0).unwrap()),
        ("R3", Model::r3(0.7).unwrap()),
    ] {
        let s = point_spectrum(&m).unwrap();
        rep.push(Check::absolute(
            format!("c10/{label}-empty-for-positive-coupling"),
            s.eigenvalues.len() as f64,
            0.0,
            0.0,
        ));
    }
    // located eigenvalues: residual and pole of the trace
    for (label, m) in [
        ("R3", Model::r3(-0.4).unwrap()),
        ("H3", Model::h3(4.0, -1.0).unwrap()),
        ("H1", Model::h1(1.0, 1.0).unwrap()),
    ] {
        let s = point_spectrum(&m).unwrap();
        if s.eigenvalues.is_empty() {
            rep.push(
                Check::absolute(format!("c10/{label}-eigenvalue"), f64::NAN, 0.0, 0.0)
                    .with_detail("expected a bound state"),
            );
            continue;
        }
        let lam = s.eigenvalues[0];
        let resid = eigenvalue_residual(&m, lam).unwrap();
        rep.push(Check::absolute(
            format!("c10/{label}-eigenvalue-residual"),
            resid,
            0.0,
            1e-10,
        ));
        let p1 = trace_resolvent_diff(&m, c64(lam - 1e-5)).unwrap().norm() * 1e-5;
        let p2 = trace_resolvent_diff(&m, c64(lam - 1e-6)).unwrap().norm() * 1e-6;
        rep.push(
            Check::relative(format!("c10/{label}-trace-pole"), p2, p1, 0.05)
                .with_detail("|r(lambda* - d)| d settles to the pole strength"),
        );
    }
    // documented statement-vs-proof clashes
    let t3 = spectrum_threshold(Geometry::H3, -1.0).unwrap();
    rep.push(Check::warn(
        "c10/H3-threshold-statement-vs-proof",
        t3.proof,
        t3.statement,
        "classification follows the proof criterion",
    ));
    let t1 = spectrum_threshold(Geometry::H1, 2.0).unwrap();
    rep.push(Check::warn(
        "c10/H1-threshold-statement-vs-proof",
        t1.proof,
        t1.statement,
        "statement has a <= 2 g_R/pi, proof gives a_crit = 2/(pi g_R)",
    ));
    let r1neg = point_spectrum(&Model::r1(-1.0).unwrap()).unwrap();
    rep.push(Check::warn(
        "c10/R1-negative-coupling-convention",
        r1neg.eigenvalues[0],
        -PI * PI,
        "stated classification conflicts with the pole of the displayed trace (sign convention)",
    ));
    rep
}

/// Criterion 11: the R^1 eta identity on the (tau, g_R) grid to 1e-7;
/// the published closed form is the sign-flipped WARN row.
pub fn c11_r1_eta_identity(spec: &QuadratureSpec) -> VerificationReport {
    let mut rep = VerificationReport::default();
    let mut worst = 0.0_f64;
    for &tau in &[0.5, 1.0, 2.0, 5.0] {
        for &g in &[0.5, 1.0, 2.0] {
            let m = Model::r1(g).unwrap();
            match (log_eta(&m, tau, spec), log_eta_closed_whole(&m, tau)) {
                (Ok(num), Ok(cl)) => worst = worst.max((num - cl).abs()),
                (Err(e), _) | (_, Err(e)) => rep.push(
                    Check::absolute(format!("c11/tau={tau}/g={g}"), f64::NAN, 0.0, 0.0)
                        .with_detail(e.to_string()),
                ),
            }
        }
    }
    rep.push(Check::absolute(
        "c11/R1-eta-identity-max-deviation",
        worst,
        0.0,
        1e-7,
    ));
    let m = Model::r1(1.0).unwrap();
    let cl = log_eta_closed_whole(&m, 1.0).unwrap();
    rep.push(Check::warn(
        "c11/R1-eta-closed-vs-published",
        cl,
        -cl,
        "published Gamma-form is the negative of the defining integral",
    ));
    rep
}

/// Criterion 12: small-a zeta_0(-1/2) on H^1 vs -(2 log2/pi) a b^2 within 5%.
pub fn c12_h1_small_a_zeta0(spec: &QuadratureSpec) -> VerificationReport {
    let mut rep = VerificationReport::default();
    let a = 1e-3;
    let m = Model::h1(a, 2.0 / PI).unwrap(); // b = 1
    match zeta0_quadrature(&m, c64(-0.5), spec) {
        Ok(z0) => {
            let want = -(2.0 * 2.0_f64.ln() / PI) * a;
            rep.push(Check::relative("c12/H1-zeta0-small-a", z0.re, want, 0.05));
        }
        Err(e) => rep.push(
            Check::absolute("c12/H1-zeta0-small-a", f64::NAN, 0.0, 0.0)
                .with_detail(e.to_string()),
        ),
    }
    rep
}

/// Criterion 13: asymptotic-conditions report for R^1, H^3, H^1 (and R^3),
/// plus the Dirichlet-limit consistency-condition failure on R^1.
pub fn c13_asymptotics() -> VerificationReport {
    let mut rep = VerificationReport::default();
    let models = [
        Model::r1(1.0 / PI).unwrap(),
        Model::r3(1.0).unwrap(),
        Model::h3(1.0, 2.0 / (PI * PI)).unwrap(),
        Model::h1(0.3, 1.0).unwrap(),
    ];
    for m in &models {
        match asymptotics_check(m) {
            Ok(r) => {
                for mut ch in r.checks {
                    ch.name = format!("c13/{}", ch.name);
                    rep.push(ch);
                }
            }
            Err(e) => rep.push(
                Check::absolute(format!("c13/{}", m.geometry.label()), f64::NAN, 0.0, 0.0)
                    .with_detail(e.to_string()),
            ),
        }
    }
    let dirichlet = Model::new(Geometry::R1, 1.0, Coupling::Infinite).unwrap();
    match asymptotics_check(&dirichlet) {
        Ok(r) => {
            let c = r.find("asymptotics/R1/condition-C").unwrap();
            rep.push(
                Check::absolute("c13/R1-dirichlet-condition-C-violated", c.computed, 0.0, 0.0)
                    .with_detail("alpha0 = beta0 = -1 in the b = 0 limit"),
            );
        }
        Err(e) => rep.push(
            Check::absolute("c13/R1-dirichlet", f64::NAN, 0.0, 0.0).with_detail(e.to_string()),
        ),
    }
    rep
}

/// Further documented discrepancies surfaced by the cross-validation,
/// reported as WARN rows.
pub fn documented_discrepancies(spec: &QuadratureSpec) -> VerificationReport {
    let mut rep = VerificationReport::default();
    // half-line cutoff term: the lemma-level value is -1/(2N)
    rep.push(Check::warn(
        "warn/halfline-cutoff-term-at-N=10",
        crate::operator_models::dn_cutoff(Geometry::H1, 10.0).unwrap(),
        -0.2,
        "restated value -2/N; the lemma-level expansion has -1/(2N)",
    ));
    // Mellin sin^2 identity: factor 2
    let s = 0.3;
    let a: f64 = 1.0;
    let true_val = 0.5
        * (2.0 * a).powf(2.0 * s + 1.0)
        * (PI * s).sin()
        * crate::numerics::gamma_fn(c64(-2.0 * s - 1.0)).unwrap().re;
    rep.push(Check::warn(
        "warn/mellin-sin2-identity-factor",
        true_val,
        2.0 * true_val,
        "published table entry for the sin^2 Mellin integral is twice the integral",
    ));
    // H1 spectral measure display sign
    let m1 = Model::h1(1.0, 2.0 / PI).unwrap();
    let e_true = spectral_measure(&m1, 2.0).unwrap();
    rep.push(Check::warn(
        "warn/H1-measure-display-sign",
        e_true,
        -e_true,
        "published closed form is the negative of the cut jump (its own v->0 limit agrees with the jump)",
    ));
    // R1 Casimir energy display (inherits the sin/cos slip)
    let mr = Model::r1(1.0).unwrap();
    if let Ok(e) = crate::thermodynamics::casimir_energy(&mr, 1.0, spec) {
        rep.push(Check::warn(
            "warn/R1-casimir-energy-vs-published",
            e,
            PI / 4.0,
            "published pi g_R/4 follows from the sin-form zeta; composition gives the cos-form value",
        ));
    }
    // R3 eta closed form is sign-flipped in the published display
    let m3 = Model::r3(1.0).unwrap();
    if let Ok(cl) = log_eta_closed_whole(&m3, 1.0) {
        rep.push(Check::warn(
            "warn/R3-eta-closed-vs-published",
            cl,
            -cl,
            "published Gamma-form is the negative of the defining integral",
        ));
    }
    // R3 log Z display carries a stray log 2 and the eta sign
    if let (Ok(z), Ok(eta)) = (
        crate::thermodynamics::log_partition(
            &m3,
            &crate::thermodynamics::ThermalParams::new(1.0, 1.0).unwrap(),
            spec,
        ),
        log_eta_closed_whole(&m3, 1.0),
    ) {
        let g: f64 = 1.0;
        let display = 2.0 * ((1.0 / (2.0 * PI * PI * g)).ln() - 1.0) / (8.0 * PI.powi(3) * g)
            + eta;
        rep.push(Check::warn(
            "warn/R3-logZ-vs-published",
            z,
            display,
            "published display evaluated with its own eta convention",
        ));
    }
    rep
}

/// The full table: every criterion plus the documented-discrepancy rows.
pub fn run_all(spec: &QuadratureSpec) -> VerificationReport {
    let mut rep = VerificationReport::default();
    rep.extend(c01_in_constants(spec));
    rep.extend(c02_h3_small_a_force(spec));
    rep.extend(c03_h1_small_a_force(spec));
    rep.extend(c04_h1_residue(spec));
    rep.extend(c05_h3_residue(spec));
    rep.extend(c06_whole_space_closed_forms(spec));
    rep.extend(c07_appendix_oracles());
    rep.extend(c08_measure_cross_check());
    rep.extend(c09_h3_regularity());
    rep.extend(c10_bound_states());
    rep.extend(c11_r1_eta_identity(spec));
    rep.extend(c12_h1_small_a_zeta0(spec));
    rep.extend(c13_asymptotics());
    rep.extend(documented_discrepancies(spec));
    rep
}

/// The criteria that a fully consistent implementation can satisfy; used by
/// tests that assert everything except the documented force erratum.
pub fn expected_failures() -> &'static [&'static str] {
    &[
        "c02/p-a2-in-[0.14,0.16]",
        "c02/numeric-vs-published-coefficient",
    ]
}
