//! Relic graviton burst: the rod-radiator power formula, the thermal
//! occupation integral, the burst energy balance, and the five-row table
//! over multiples of a reference temperature.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::numerics::quad::{integrate, QuadOptions};
use crate::units::{Constants, T_QUANTUM_GRAVITY_KELVIN};
use crate::vacuum::critical_energy;

/// Default graviton mass (kg).
pub const M_GRAVITON_KG: f64 = 1e-60;

/// Integration range for the occupation integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OmegaBounds {
    /// `[lo * k_B T / hbar, hi * k_B T / hbar]`, rescaled with temperature.
    Thermal { lo: f64, hi: f64 },
    /// Fixed angular frequencies.
    Fixed { lo: f64, hi: f64 },
}

impl Default for OmegaBounds {
    fn default() -> Self {
        OmegaBounds::Thermal { lo: 1e-6, hi: 10.0 }
    }
}

impl OmegaBounds {
    pub fn resolve(&self, t: f64, k: &Constants) -> (f64, f64) {
        match *self {
            OmegaBounds::Thermal { lo, hi } => {
                let scale = k.k_b * t / k.hbar;
                (lo * scale, hi * scale)
            }
            OmegaBounds::Fixed { lo, hi } => (lo, hi),
        }
    }
}

/// Which width divides the occupation integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaNet {
    /// `omega_hi - omega_lo`.
    #[default]
    Width,
    /// `omega_hi`.
    Upper,
}

/// Log-normal window in temperature that turns the smooth occupation sweep
/// into a burst. `occupation *= peak_scale * exp(-x^2 / 2)` with
/// `x = log10(T / center) / width_decades`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BurstWindow {
    /// Natural units.
    pub center: f64,
    pub width_decades: f64,
    pub peak_scale: f64,
}

impl BurstWindow {
    pub fn factor(&self, t: f64) -> f64 {
        let x = (t / self.center).log10() / self.width_decades;
        self.peak_scale * (-0.5 * x * x).exp()
    }
}

/// Burst inputs. All dimensional fields are natural units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BurstConfig {
    pub t_star: f64,
    pub l_hat: f64,
    pub m_graviton: f64,
    pub bounds: OmegaBounds,
    pub omega_net: OmegaNet,
    pub n_plus: f64,
    pub quadrature_tol: f64,
    /// `None` reports the bare occupation integral.
    pub window: Option<BurstWindow>,
    /// Power is reported as zero below `power_threshold * max_k N_k`.
    pub power_threshold: f64,
    /// Absolute occupation floor for the same gate.
    pub min_occupation: f64,
}

impl Default for BurstConfig {
    fn default() -> Self {
        let k = Constants::codata();
        let t_q = k.kelvin_to_natural(T_QUANTUM_GRAVITY_KELVIN);
        Self {
            t_star: t_q / 3.0,
            l_hat: 1.0,
            m_graviton: k.kg_to_natural(M_GRAVITON_KG),
            bounds: OmegaBounds::default(),
            omega_net: OmegaNet::Width,
            n_plus: 0.5,
            quadrature_tol: 1e-10,
            window: Some(BurstWindow {
                center: t_q,
                width_decades: 0.03,
                peak_scale: 1.0,
            }),
            power_threshold: 1e-2,
            min_occupation: 1e-30,
        }
    }
}

impl BurstConfig {
    pub fn validate(&self) -> Result<()> {
        require_positive("t_star", self.t_star)?;
        require_positive("l_hat", self.l_hat)?;
        require_non_negative("m_graviton", self.m_graviton)?;
        if !(self.n_plus > 0.0 && self.n_plus < 1.0) {
            return Err(Error::domain("n_plus", self.n_plus, "must lie in (0, 1)"));
        }
        require_positive("quadrature_tol", self.quadrature_tol)?;
        let (lo, hi) = match self.bounds {
            OmegaBounds::Thermal { lo, hi } | OmegaBounds::Fixed { lo, hi } => (lo, hi),
        };
        require_non_negative("omega_lo", lo)?;
        if !(hi > lo) {
            return Err(Error::domain("omega_hi", hi, "must exceed omega_lo"));
        }
        if let Some(w) = &self.window {
            require_positive("window.center", w.center)?;
            require_positive("window.width_decades", w.width_decades)?;
            require_positive("window.peak_scale", w.peak_scale)?;
        }
        require_non_negative("power_threshold", self.power_threshold)?;
        require_non_negative("min_occupation", self.min_occupation)?;
        Ok(())
    }
}

/// Rod-radiator graviton power `2 m^2 L^4 omega^6 / (45 c^5 G)`.
///
/// Implemented as written. In Planck units it is well defined; with SI
/// constants the result does not carry units of power.
pub fn fontana_power(m: f64, l: f64, omega: f64, k: &Constants) -> Result<f64> {
    require_non_negative("m", m)?;
    require_non_negative("L", l)?;
    require_non_negative("omega", omega)?;
    Ok(2.0 * m * m * l.powi(4) * omega.powi(6) / (45.0 * k.c.powi(5) * k.g))
}

/// `(omega^2 / pi^2) / (exp(2 pi hbar omega / k_B T) - 1)`.
pub fn occupation_integrand(omega: f64, t: f64, k: &Constants) -> f64 {
    if omega == 0.0 {
        return 0.0;
    }
    let x = 2.0 * PI * k.hbar * omega / (k.k_b * t);
    omega * omega / (PI * PI) / x.exp_m1()
}

/// Thermal graviton occupation averaged over the configured band.
///
/// `t` is in the temperature unit of `k`; fixed bounds are angular
/// frequencies in the same system.
pub fn mean_occupation(t: f64, cfg: &BurstConfig, k: &Constants) -> Result<f64> {
    require_positive("T", t)?;
    let (lo, hi) = cfg.bounds.resolve(t, k);
    let net = match cfg.omega_net {
        OmegaNet::Width => hi - lo,
        OmegaNet::Upper => hi,
    };
    if !(net > 0.0) {
        return Err(Error::domain("omega_net", net, "must be positive"));
    }
    let opts = QuadOptions {
        rel_tol: cfg.quadrature_tol,
        ..QuadOptions::default()
    };
    let integral = integrate(|w| occupation_integrand(w, t, k), lo, hi, opts)?;
    Ok(integral.value / net)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BurstEnergy {
    /// `V4 lambda / (8 pi G)`.
    pub e_vac: f64,
    /// `N+ hbar omega`.
    pub e_grav: f64,
    /// `e_vac / e_grav`.
    pub ratio: f64,
}

pub fn burst_energy(
    v4: f64,
    lambda: f64,
    omega_graviton: f64,
    cfg: &BurstConfig,
    k: &Constants,
) -> Result<BurstEnergy> {
    require_positive("V4", v4)?;
    require_positive("lambda", lambda)?;
    require_positive("omega_graviton", omega_graviton)?;
    let e_vac = v4 * lambda / (8.0 * PI * k.g);
    let e_grav = cfg.n_plus * k.hbar * omega_graviton;
    Ok(BurstEnergy {
        e_vac,
        e_grav,
        ratio: e_vac / e_grav,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BurstRow {
    pub k: u32,
    /// Natural units.
    pub temperature: f64,
    pub occupation: f64,
    /// Natural units; zero when gated.
    pub power: f64,
}

/// Five rows at `T = k * t_star`, `k = 1..=5`.
///
/// The power column uses `omega_eff = N_k * E_critical / hbar`.
pub fn burst_table(cfg: &BurstConfig) -> Result<Vec<BurstRow>> {
    cfg.validate()?;
    let k = Constants::natural();
    let omega_char = critical_energy(&k) / k.hbar;
    let mut rows = Vec::with_capacity(5);
    for i in 1..=5u32 {
        let t = f64::from(i) * cfg.t_star;
        let mut n = mean_occupation(t, cfg, &k)?;
        if let Some(w) = &cfg.window {
            n *= w.factor(t);
        }
        rows.push(BurstRow {
            k: i,
            temperature: t,
            occupation: n,
            power: 0.0,
        });
    }
    let peak = rows.iter().fold(0.0f64, |m, r| m.max(r.occupation));
    let gate = (cfg.power_threshold * peak).max(cfg.min_occupation);
    for row in &mut rows {
        if row.occupation >= gate && row.occupation > 0.0 {
            row.power = fontana_power(cfg.m_graviton, cfg.l_hat, row.occupation * omega_char, &k)?;
        }
    }
    Ok(rows)
}
