use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use relzeta::numerics::QuadratureSpec;
use relzeta::{Coupling, Error, Geometry, Model, Result, Space};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceArg {
    Whole,
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepVar {
    A,
    V,
    SRe,
    Beta,
    LambdaRe,
}

/// Model, evaluation-point and tolerance flags shared by the subcommands.
#[derive(Debug, Clone, Parser, Serialize, Deserialize, PartialEq)]
pub struct ModelArgs {
    /// whole space or half space with Dirichlet wall
    #[arg(long, value_enum, default_value = "whole")]
    pub geometry: SpaceArg,
    /// dimension 1, 2 or 3
    #[arg(long, default_value_t = 3)]
    pub dim: u8,
    /// renormalized coupling g_R (the string "inf" selects the Dirichlet
    /// limit; negative values are accepted for spectral commands)
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub gr: String,
    /// delta position (distance to the wall in the half space)
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// inverse temperature
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    /// renormalization scale
    #[arg(long, default_value_t = 1.0)]
    pub ell: f64,
    /// eta-function argument
    #[arg(long, default_value_t = 1.0)]
    pub tau: f64,
    /// spectral abscissa
    #[arg(long, default_value_t = 1.0)]
    pub v: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub s_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub s_im: f64,
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    pub lambda_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub lambda_im: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub abs_tol: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 4000)]
    pub max_subdivisions: usize,
    #[arg(long, default_value_t = 200.0)]
    pub tail_cutoff: f64,
    #[arg(long, default_value_t = 10)]
    pub tail_order: usize,
}

impl ModelArgs {
    pub fn coupling(&self) -> Result<Coupling> {
        if self.gr == "inf" {
            return Ok(Coupling::Infinite);
        }
        self.gr
            .parse::<f64>()
            .map(Coupling::Finite)
            .map_err(|_| Error::domain(format!("cannot parse coupling '{}'", self.gr)))
    }

    pub fn geometry(&self) -> Result<Geometry> {
        let space = match self.geometry {
            SpaceArg::Whole => Space::Whole,
            SpaceArg::Half => Space::Half,
        };
        Geometry::new(space, self.dim)
    }

    pub fn model(&self) -> Result<Model> {
        Model::new(self.geometry()?, self.a, self.coupling()?)
    }

    pub fn quadrature(&self) -> QuadratureSpec {
        QuadratureSpec {
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            max_subdivisions: self.max_subdivisions,
            tail_cutoff: self.tail_cutoff,
            tail_order: self.tail_order,
        }
    }

    pub fn s(&self) -> Complex64 {
        Complex64::new(self.s_re, self.s_im)
    }

    pub fn lambda(&self) -> Complex64 {
        Complex64::new(self.lambda_re, self.lambda_im)
    }
}

#[derive(Debug, Clone, Parser, Serialize, Deserialize, PartialEq)]
pub struct GridArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub start: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub stop: f64,
    #[arg(long, default_value_t = 21)]
    pub count: usize,
    #[arg(long, value_enum, default_value = "linear")]
    pub scale: GridScale,
}

impl GridArgs {
    pub fn points(&self) -> Result<Vec<f64>> {
        if self.count < 1 {
            return Err(Error::domain("grid count must be >= 1"));
        }
        if self.count == 1 {
            return Ok(vec![self.start]);
        }
        let n = self.count as f64 - 1.0;
        match self.scale {
            GridScale::Linear => Ok((0..self.count)
                .map(|i| self.start + (self.stop - self.start) * i as f64 / n)
                .collect()),
            GridScale::Log => {
                if !(self.start > 0.0 && self.stop > 0.0) {
                    return Err(Error::domain("log grid needs positive endpoints"));
                }
                let (l0, l1) = (self.start.ln(), self.stop.ln());
                Ok((0..self.count)
                    .map(|i| (l0 + (l1 - l0) * i as f64 / n).exp())
                    .collect())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseCommand {
    Trace,
    Measure,
    Zeta,
    Residue,
    Eta,
    Partition,
    Energy,
    Force,
    Spectrum,
    Constants,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Trace of the resolvent difference at one spectral parameter
    Trace(ModelArgs),
    /// Relative spectral measure e(v), its split and the cross-cut oracle
    Measure(ModelArgs),
    /// Relative zeta function at one s
    Zeta(ModelArgs),
    /// Residue and finite part at s = -1/2, with the published variant
    Residue(ModelArgs),
    /// Relative Dedekind eta function log eta(tau)
    Eta(ModelArgs),
    /// log Z at (beta, ell)
    Partition(ModelArgs),
    /// Casimir energy (both residue variants)
    Energy(ModelArgs),
    /// Casimir force p = -dE_c/da
    Force(ModelArgs),
    /// Point spectrum of the model
    Spectrum(ModelArgs),
    /// The small-a force constants I0, I1, I2
    Constants(ModelArgs),
    /// Run the full cross-validation table
    Verify(ModelArgs),
    /// Evaluate a base command over a one-parameter grid
    Sweep {
        #[arg(long, value_enum)]
        command: BaseCommand,
        #[arg(long, value_enum)]
        var: SweepVar,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        model: ModelArgs,
    },
}

#[derive(Debug, Parser)]
#[command(
    name = "relzeta",
    about = "Relative zeta determinants, partition functions and Casimir forces for point interactions",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: OutFormat,
    /// Output path (stdout when absent); relative paths resolve against
    /// RELZETA_OUT_DIR when that variable is set
    #[arg(long, global = true)]
    pub out: Option<String>,
}

/// Everything the output metadata has to echo so that a run can be
/// reconstructed from its artifact.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Meta {
    pub command: String,
    pub format: OutFormat,
    #[serde(flatten)]
    pub model: ModelArgs,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep_command: Option<BaseCommand>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sweep_var: Option<SweepVar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridArgs>,
}
