use crate::config::{BaseCommand, Cli, Command, Meta, ModelArgs, SweepVar};
use crate::output::{int, num, render_csv, render_json, Row};
use num_complex::Complex64;
use relzeta::bound_states::{point_spectrum, spectrum_threshold};
use relzeta::operator_models::{trace_resolvent_diff, Space};
use relzeta::spectral::{cross_cut_measure, sample};
use relzeta::thermodynamics::{
    casimir_energy, casimir_energy_variant, casimir_force, force_small_a, force_small_a_derived,
    in_constants, log_eta, log_eta_closed_whole, log_partition, ResidueVariant, ThermalParams,
};
use relzeta::verification;
use relzeta::zeta::{laurent_at_minus_half, relative_zeta, residue_published};
use relzeta::{Error, Result};

fn complex_row(prefix: &'static str, z: Complex64, row: &mut Row) {
    match prefix {
        "trace" => {
            row.insert("trace_re", num(z.re));
            row.insert("trace_im", num(z.im));
        }
        "value" => {
            row.insert("value_re", num(z.re));
            row.insert("value_im", num(z.im));
        }
        _ => unreachable!(),
    }
}

pub fn eval_base(cmd: BaseCommand, args: &ModelArgs) -> Result<Vec<Row>> {
    let spec = args.quadrature();
    spec.validate()?;
    match cmd {
        BaseCommand::Trace => {
            let m = args.model()?;
            let r = trace_resolvent_diff(&m, args.lambda())?;
            let mut row = Row::new();
            row.insert("lambda_re", num(args.lambda_re));
            row.insert("lambda_im", num(args.lambda_im));
            complex_row("trace", r, &mut row);
            Ok(vec![row])
        }
        BaseCommand::Measure => {
            let m = args.model()?;
            let s = sample(&m, args.v)?;
            let mut row = Row::new();
            row.insert("v", num(args.v));
            row.insert("e", num(s.e));
            row.insert("e0", num(s.e0));
            row.insert("e_inf", num(s.e_inf));
            if args.v > 0.0 {
                row.insert("e_cross_cut", num(cross_cut_measure(&m, args.v, &[])?));
            }
            Ok(vec![row])
        }
        BaseCommand::Zeta => {
            let m = args.model()?;
            let z = relative_zeta(&m, args.s(), &spec)?;
            let mut row = Row::new();
            row.insert("s_re", num(args.s_re));
            row.insert("s_im", num(args.s_im));
            complex_row("value", z.value, &mut row);
            row.insert("zeta0_re", num(z.zeta0.re));
            row.insert("zeta0_im", num(z.zeta0.im));
            row.insert("zeta_inf_re", num(z.zeta_inf.re));
            row.insert("zeta_inf_im", num(z.zeta_inf.im));
            row.insert("strip_ok", format!("{}", z.strip_ok));
            Ok(vec![row])
        }
        BaseCommand::Residue => {
            let m = args.model()?;
            let l = laurent_at_minus_half(&m, &spec)?;
            let mut row = Row::new();
            row.insert("residue", num(l.residue.re));
            row.insert("finite_part", num(l.finite_part.re));
            row.insert("residue_published", num(residue_published(&m)?));
            row.insert("provenance", "zeta-inf-derived | published".into());
            Ok(vec![row])
        }
        BaseCommand::Eta => {
            let m = args.model()?;
            let mut row = Row::new();
            row.insert("tau", num(args.tau));
            row.insert("log_eta", num(log_eta(&m, args.tau, &spec)?));
            if let Ok(cl) = log_eta_closed_whole(&m, args.tau) {
                row.insert("log_eta_closed", num(cl));
            }
            Ok(vec![row])
        }
        BaseCommand::Partition => {
            let m = args.model()?;
            let thermal = ThermalParams::new(args.beta, args.ell)?;
            let mut row = Row::new();
            row.insert("beta", num(args.beta));
            row.insert("ell", num(args.ell));
            row.insert("log_z", num(log_partition(&m, &thermal, &spec)?));
            Ok(vec![row])
        }
        BaseCommand::Energy => {
            let m = args.model()?;
            let mut row = Row::new();
            row.insert("a", num(args.a));
            row.insert("ell", num(args.ell));
            row.insert("energy", num(casimir_energy(&m, args.ell, &spec)?));
            let stated = casimir_energy_variant(&m, args.ell, &spec, ResidueVariant::Published)?;
            row.insert("energy_published_variant", num(stated));
            row.insert("residue_variant", "zeta-inf-derived | published".into());
            Ok(vec![row])
        }
        BaseCommand::Force => {
            let m = args.model()?;
            let mut row = Row::new();
            row.insert("a", num(args.a));
            row.insert("ell", num(args.ell));
            row.insert("force", num(casimir_force(&m, args.ell, &spec)?));
            if m.geometry.space == Space::Half {
                if let Ok(ins) = in_constants(&spec) {
                    row.insert(
                        "small_a_published",
                        num(force_small_a(&m, &ins)?.evaluate(args.a)),
                    );
                    row.insert(
                        "small_a_derived",
                        num(force_small_a_derived(&m, &ins)?.evaluate(args.a)),
                    );
                }
            }
            Ok(vec![row])
        }
        BaseCommand::Spectrum => {
            let m = args.model()?;
            let s = point_spectrum(&m)?;
            let mut rows = Vec::new();
            for (k, &lam) in s.eigenvalues.iter().enumerate() {
                let mut row = Row::new();
                row.insert("k", int(k + 1));
                row.insert("eigenvalue", num(lam));
                if let Ok(resid) = relzeta::bound_states::eigenvalue_residual(&m, lam) {
                    row.insert("residual", num(resid));
                }
                row.insert("has_bound_state", format!("{}", s.has_bound_state));
                if let Ok(t) = spectrum_threshold(m.geometry, m.coupling.inv().recip()) {
                    row.insert("threshold_proof", num(t.proof));
                    row.insert("threshold_statement", num(t.statement));
                }
                rows.push(row);
            }
            if rows.is_empty() {
                let mut row = Row::new();
                row.insert("has_bound_state", "false".into());
                row.insert("threshold_proof", num(s.threshold));
                rows.push(row);
            }
            Ok(rows)
        }
        BaseCommand::Constants => {
            let c = in_constants(&spec)?;
            let mut row = Row::new();
            row.insert("I0", num(c.i0));
            row.insert("I1", num(c.i1));
            row.insert("I2", num(c.i2));
            row.insert("err_est", num(c.err_est));
            Ok(vec![row])
        }
    }
}

fn apply_sweep(args: &ModelArgs, var: SweepVar, x: f64) -> ModelArgs {
    let mut a = args.clone();
    match var {
        SweepVar::A => a.a = x,
        SweepVar::V => a.v = x,
        SweepVar::SRe => a.s_re = x,
        SweepVar::Beta => a.beta = x,
        SweepVar::LambdaRe => a.lambda_re = x,
    }
    a
}

fn sweep_column(var: SweepVar) -> &'static str {
    match var {
        SweepVar::A => "a",
        SweepVar::V => "v",
        SweepVar::SRe => "s_re",
        SweepVar::Beta => "beta",
        SweepVar::LambdaRe => "lambda_re",
    }
}

/// Reject malformed configuration before any computation starts; called by
/// the binary to map these to exit code 1 (capability rejections surface
/// later with their own code).
pub fn validate_config(cli: &Cli) -> Result<()> {
    let check_model = |args: &ModelArgs| -> Result<()> {
        args.geometry()?;
        args.coupling()?;
        args.quadrature().validate()?;
        Ok(())
    };
    match &cli.command {
        Command::Sweep { grid, model, .. } => {
            check_model(model)?;
            grid.points()?;
            Ok(())
        }
        Command::Trace(a)
        | Command::Measure(a)
        | Command::Zeta(a)
        | Command::Residue(a)
        | Command::Eta(a)
        | Command::Partition(a)
        | Command::Energy(a)
        | Command::Force(a)
        | Command::Spectrum(a)
        | Command::Constants(a)
        | Command::Verify(a) => check_model(a),
    }
}

pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let (meta, rows, exit) = match &cli.command {
        Command::Verify(args) => {
            let rep = verification::run_all(&args.quadrature());
            let mut text = format!("{rep}");
            let code = if rep.all_passed() { 0 } else { 1 };
            text.push_str(&format!(
                "\n{} checks, {} failed\n",
                rep.checks.len(),
                rep.failures().count()
            ));
            return Ok((text, code));
        }
        Command::Sweep {
            command,
            var,
            grid,
            model,
        } => {
            let meta = Meta {
                command: "sweep".into(),
                format: cli.format,
                model: model.clone(),
                sweep_command: Some(*command),
                sweep_var: Some(*var),
                grid: Some(grid.clone()),
            };
            let mut rows = Vec::new();
            for x in grid.points()? {
                let local = apply_sweep(model, *var, x);
                for mut row in eval_base(*command, &local)? {
                    row.entry(sweep_column(*var)).or_insert_with(|| num(x));
                    rows.push(row);
                }
            }
            (meta, rows, 0)
        }
        other => {
            let (name, cmd, args) = match other {
                Command::Trace(a) => ("trace", BaseCommand::Trace, a),
                Command::Measure(a) => ("measure", BaseCommand::Measure, a),
                Command::Zeta(a) => ("zeta", BaseCommand::Zeta, a),
                Command::Residue(a) => ("residue", BaseCommand::Residue, a),
                Command::Eta(a) => ("eta", BaseCommand::Eta, a),
                Command::Partition(a) => ("partition", BaseCommand::Partition, a),
                Command::Energy(a) => ("energy", BaseCommand::Energy, a),
                Command::Force(a) => ("force", BaseCommand::Force, a),
                Command::Spectrum(a) => ("spectrum", BaseCommand::Spectrum, a),
                Command::Constants(a) => ("constants", BaseCommand::Constants, a),
                Command::Verify(_) | Command::Sweep { .. } => unreachable!(),
            };
            let meta = Meta {
                command: name.into(),
                format: cli.format,
                model: args.clone(),
                sweep_command: None,
                sweep_var: None,
                grid: None,
            };
            (meta, eval_base(cmd, args)?, 0)
        }
    };
    let text = match cli.format {
        crate::config::OutFormat::Json => render_json(&meta, &rows),
        crate::config::OutFormat::Csv => render_csv(&meta, &rows),
    };
    Ok((text, exit))
}

pub fn write_output(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let mut target = std::path::PathBuf::from(path);
            if target.is_relative() {
                if let Ok(dir) = std::env::var("RELZETA_OUT_DIR") {
                    target = std::path::PathBuf::from(dir).join(target);
                }
            }
            std::fs::write(&target, text)
                .map_err(|e| Error::domain(format!("cannot write {}: {e}", target.display())))
        }
    }
}
