//! Run configuration: one TOML document whose every section has defaults.
//!
//! Library sections are in natural Planck units. The `[constants]` section
//! holds SI values and is used only to convert command-line inputs given in
//! kelvin, seconds, years or kg/m^3.

use std::path::Path;

use cosmotoy::burst::BurstConfig;
use cosmotoy::potentials::{AxionParams, RSParams};
use cosmotoy::quintessence::{EomParams, RegimeThresholds};
use cosmotoy::scale::{DensityParams, EPSILON_CAUSAL};
use cosmotoy::units::{C_SI, EV_SI, G_SI, HBAR_SI, K_B_SI};
use cosmotoy::vacuum::LambdaModel;
use cosmotoy::wdw::WdwConfig;
use cosmotoy::Constants;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConstantsSection {
    pub g: f64,
    pub hbar: f64,
    pub c: f64,
    pub k_b: f64,
    /// Joules per electronvolt.
    pub ev: f64,
}

impl Default for ConstantsSection {
    fn default() -> Self {
        Self {
            g: G_SI,
            hbar: HBAR_SI,
            c: C_SI,
            k_b: K_B_SI,
            ev: EV_SI,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CausalSection {
    pub dt: f64,
    pub alpha: f64,
    pub epsilon: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub rtol: f64,
}

impl Default for CausalSection {
    fn default() -> Self {
        Self {
            dt: 1.0,
            alpha: 10.0,
            epsilon: EPSILON_CAUSAL,
            lambda_min: 1e-10,
            lambda_max: 1e300,
            rtol: 1e-12,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Seed for randomized checks driven from this configuration.
    pub seed: u64,
    pub constants: ConstantsSection,
    pub lambda: LambdaModel,
    pub burst: BurstConfig,
    pub density: DensityParams,
    pub causal: CausalSection,
    pub axion: AxionParams,
    pub rs: RSParams,
    pub eom: EomParams,
    pub regimes: RegimeThresholds,
    pub wdw: WdwConfig,
}

fn at(section: &str, e: cosmotoy::Error) -> CliError {
    let msg = match e {
        cosmotoy::Error::Domain {
            param,
            value,
            reason,
        } => {
            format!("{section}.{param}: {reason} (got {value})")
        }
        other => format!("{section}: {other}"),
    };
    CliError::Config(msg)
}

impl RunConfig {
    pub fn constants(&self) -> Result<Constants, CliError> {
        let c = &self.constants;
        Constants::si(c.g, c.hbar, c.c, c.k_b, c.ev).map_err(|e| at("constants", e))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.constants()?;
        self.lambda.validate().map_err(|e| at("lambda", e))?;
        self.burst.validate().map_err(|e| at("burst", e))?;
        self.density.validate().map_err(|e| at("density", e))?;
        let c = &self.causal;
        for (name, v) in [
            ("dt", c.dt),
            ("epsilon", c.epsilon),
            ("lambda_min", c.lambda_min),
            ("rtol", c.rtol),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Config(format!(
                    "causal.{name}: must be positive (got {v})"
                )));
            }
        }
        if !(c.alpha >= 0.0) {
            return Err(CliError::Config(format!(
                "causal.alpha: must be non-negative (got {})",
                c.alpha
            )));
        }
        if !(c.lambda_max > c.lambda_min) {
            return Err(CliError::Config(format!(
                "causal.lambda_max: must exceed lambda_min (got {})",
                c.lambda_max
            )));
        }
        self.axion.validate().map_err(|e| at("axion", e))?;
        self.rs.validate().map_err(|e| at("rs", e))?;
        self.eom.validate().map_err(|e| at("eom", e))?;
        let r = &self.regimes;
        if !(r.t_low > 0.0 && r.t_high > r.t_low && r.c_small >= 0.0 && r.f_negligible >= 0.0) {
            return Err(CliError::Config(
                "regimes: need 0 < t_low < t_high and non-negative c_small, f_negligible".into(),
            ));
        }
        self.wdw.validate().map_err(|e| at("wdw", e))?;
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// The effective configuration as TOML.
    pub fn echo(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }
}

pub fn load_config(path: Option<&Path>) -> Result<RunConfig, CliError> {
    match path {
        None => {
            let cfg = RunConfig::default();
            cfg.validate()?;
            Ok(cfg)
        }
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Config(format!("{}: {e}", p.display())))?;
            RunConfig::parse(&text)
        }
    }
}
