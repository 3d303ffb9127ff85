//! Axion and inflaton potentials, the brane-world radion potential with its
//! metastable minimum, Kaluza-Klein masses and brane parameters.
//!
//! Everything is in natural units.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_finite, require_non_negative, require_positive, Error, Result};
use crate::numerics::minimize::golden_section;
use crate::units::Constants;

/// Temperature exponent of the axion mass.
pub const AXION_MASS_EXPONENT: f64 = 3.7;

/// Cold anchor of the axion strength (K).
pub const T_COLD_KELVIN: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AxionParams {
    /// Zero-temperature axion mass.
    pub m_a0: f64,
    pub lambda_qcd: f64,
    /// `f_PQ / N`.
    pub f_pq_over_n: f64,
    /// Inflaton mass; `m^2 = M_P^2 / 100` by default.
    pub m: f64,
    pub phi_c: f64,
    pub phi_star: f64,
    /// Temperature at which the axion strength equals `100 m^2`.
    pub t_cold: f64,
    /// Floor of the axion strength, in units of `m^2`.
    pub eps_plus: f64,
}

impl Default for AxionParams {
    fn default() -> Self {
        let k = Constants::codata().natural_system();
        Self {
            m_a0: k.ev * 1e-5,
            lambda_qcd: k.ev * 2e8,
            f_pq_over_n: k.ev * 1e21,
            m: 0.1,
            phi_c: 1.0,
            phi_star: 0.5,
            t_cold: Constants::codata().kelvin_to_natural(T_COLD_KELVIN),
            eps_plus: 1e-12,
        }
    }
}

impl AxionParams {
    pub fn validate(&self) -> Result<()> {
        require_positive("m_a0", self.m_a0)?;
        require_positive("lambda_qcd", self.lambda_qcd)?;
        require_positive("f_pq_over_n", self.f_pq_over_n)?;
        require_positive("m", self.m)?;
        require_finite("phi_c", self.phi_c)?;
        require_finite("phi_star", self.phi_star)?;
        require_positive("t_cold", self.t_cold)?;
        require_positive("eps_plus", self.eps_plus)?;
        if self.eps_plus >= 100.0 {
            return Err(Error::domain(
                "eps_plus",
                self.eps_plus,
                "must be below 100",
            ));
        }
        Ok(())
    }
}

/// `0.1 m_a0 (lambda_qcd / T)^3.7`.
pub fn axion_mass(t: f64, p: &AxionParams) -> Result<f64> {
    require_positive("T", t)?;
    Ok(0.1 * p.m_a0 * (p.lambda_qcd / t).powf(AXION_MASS_EXPONENT))
}

/// Axion contribution strength `f(T) = 100 m^2 (m_a(T) / m_a(t_cold))^2`,
/// clamped to `[eps_plus m^2, 100 m^2]`.
pub fn axion_strength(t: f64, p: &AxionParams) -> Result<f64> {
    require_positive("T", t)?;
    let m2 = p.m * p.m;
    let ratio = (p.t_cold / t).powf(2.0 * AXION_MASS_EXPONENT);
    Ok((100.0 * m2 * ratio).clamp(p.eps_plus * m2, 100.0 * m2))
}

/// Domain-wall potential `m_a(T)^2 (f/N)^2 (1 - cos(a / (f/N)))`.
pub fn axion_wall(a_field: f64, t: f64, p: &AxionParams) -> Result<f64> {
    let ma = axion_mass(t, p)?;
    let f = p.f_pq_over_n;
    // 1 - cos x = 2 sin^2(x/2) keeps small-angle values accurate.
    let half = (0.5 * a_field / f).sin();
    Ok(ma * ma * f * f * 2.0 * half * half)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    /// `(f(T)/2)(1 - cos phi) + (m^2/2)(phi - phi*)^2`.
    PreBurst,
    /// `(1/2)(phi - phi_C)^2`.
    PostBurst,
    /// `(m^2/2)(phi - phi_C)^2`.
    PostBurstMassWeighted,
}

pub fn chaotic_potential(phi: f64, t: f64, phase: Phase, p: &AxionParams) -> Result<f64> {
    let m2 = p.m * p.m;
    Ok(match phase {
        Phase::PreBurst => {
            let f = axion_strength(t, p)?;
            let half = (0.5 * phi).sin();
            f * half * half + 0.5 * m2 * (phi - p.phi_star).powi(2)
        }
        Phase::PostBurst => 0.5 * (phi - p.phi_c).powi(2),
        Phase::PostBurstMassWeighted => 0.5 * m2 * (phi - p.phi_c).powi(2),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxionContribution {
    /// `f (1 - cos phi) + (m^2/2)(phi - phi_C)^2`.
    pub v: f64,
    /// `f sin phi + m^2 (phi - phi_C)`.
    pub dv: f64,
    /// `f phi^5/125 - f phi^3/6 + (m^2 + f) phi - m^2 phi_C`, the truncated
    /// expansion with its coefficients taken as given (a sine series would
    /// have 1/120 rather than 1/125).
    pub dv_quintic: f64,
}

pub fn v_axion_contri(phi: f64, t: f64, p: &AxionParams) -> Result<AxionContribution> {
    let f = axion_strength(t, p)?;
    Ok(axion_contribution_with_strength(phi, f, p))
}

/// As [`v_axion_contri`] with the axion strength given directly.
pub fn axion_contribution_with_strength(phi: f64, f: f64, p: &AxionParams) -> AxionContribution {
    let m2 = p.m * p.m;
    let half = (0.5 * phi).sin();
    AxionContribution {
        v: 2.0 * f * half * half + 0.5 * m2 * (phi - p.phi_c).powi(2),
        dv: f * phi.sin() + m2 * (phi - p.phi_c),
        dv_quintic: f * phi.powi(5) / 125.0 - f * phi.powi(3) / 6.0 + (m2 + f) * phi - m2 * p.phi_c,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxionSweepRow {
    pub t: f64,
    pub mass: f64,
    /// `max_a` of the wall potential, `2 m_a^2 (f/N)^2`.
    pub wall_amplitude: f64,
    pub strength: f64,
    /// Sup of the pre-burst axion term on `[-pi, pi]` over the quadratic term
    /// at unit displacement, `2 f / m^2`.
    pub axion_to_quadratic: f64,
}

pub fn axion_sweep(temps: &[f64], p: &AxionParams) -> Result<Vec<AxionSweepRow>> {
    p.validate()?;
    temps
        .iter()
        .map(|&t| {
            let mass = axion_mass(t, p)?;
            let strength = axion_strength(t, p)?;
            Ok(AxionSweepRow {
                t,
                mass,
                wall_amplitude: 2.0 * mass * mass * p.f_pq_over_n * p.f_pq_over_n,
                strength,
                axion_to_quadratic: 2.0 * strength / (p.m * p.m),
            })
        })
        .collect()
}

/// Brane-world radion potential parameters and search bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RSParams {
    pub k: f64,
    pub k_tilde: f64,
    pub m5: f64,
    pub m5_tilde: f64,
    pub r_min: f64,
    pub r_max: f64,
}

impl Default for RSParams {
    fn default() -> Self {
        Self {
            k: 1.0,
            k_tilde: 6.0,
            m5: 1.0,
            m5_tilde: 3.0,
            r_min: 0.2,
            r_max: 2.0,
        }
    }
}

impl RSParams {
    pub fn validate(&self) -> Result<()> {
        require_finite("K", self.k)?;
        require_finite("K_tilde", self.k_tilde)?;
        require_positive("m5", self.m5)?;
        require_positive("m5_tilde", self.m5_tilde)?;
        require_positive("R_min", self.r_min)?;
        if !(self.r_max > self.r_min) {
            return Err(Error::domain("R_max", self.r_max, "must exceed R_min"));
        }
        Ok(())
    }
}

/// The two terms of the radion potential,
/// `(K^2/2m5)(1+e^x)/(1-e^x)` and `(K~^2/2m~5)(1-e^y)/(1+e^y)` with
/// `x = m5 pi R`, `y = m~5 pi R`.
pub fn rs_terms(r: f64, p: &RSParams) -> Result<(f64, f64)> {
    require_positive("R", r)?;
    let x = p.m5 * PI * r;
    if x.exp_m1().abs() < 1e-300 {
        return Err(Error::Singularity(format!(
            "1 - exp(m5 pi R) vanishes at R = {r:e}"
        )));
    }
    let y = p.m5_tilde * PI * r;
    // (1+e^x)/(1-e^x) = -coth(x/2), (1-e^y)/(1+e^y) = -tanh(y/2)
    let first = -p.k * p.k / (2.0 * p.m5) / (0.5 * x).tanh();
    let second = -p.k_tilde * p.k_tilde / (2.0 * p.m5_tilde) * (0.5 * y).tanh();
    Ok((first, second))
}

pub fn rs_effective_potential(r: f64, p: &RSParams) -> Result<f64> {
    let (a, b) = rs_terms(r, p)?;
    Ok(a + b)
}

/// Analytic `dV/dR = (pi/4)[K^2 csch^2(x/2) - K~^2 sech^2(y/2)]`.
pub fn rs_gradient(r: f64, p: &RSParams) -> Result<f64> {
    require_positive("R", r)?;
    let hx = 0.5 * p.m5 * PI * r;
    let hy = 0.5 * p.m5_tilde * PI * r;
    let csch2 = hx.sinh().powi(-2);
    let sech2 = hy.cosh().powi(-2);
    Ok(PI / 4.0 * (p.k * p.k * csch2 - p.k_tilde * p.k_tilde * sech2))
}

/// Analytic second derivative.
pub fn rs_curvature(r: f64, p: &RSParams) -> Result<f64> {
    require_positive("R", r)?;
    let hx = 0.5 * p.m5 * PI * r;
    let hy = 0.5 * p.m5_tilde * PI * r;
    let csch2 = hx.sinh().powi(-2);
    let sech2 = hy.cosh().powi(-2);
    Ok(PI * PI / 4.0
        * (-p.k * p.k * p.m5 * csch2 / hx.tanh()
            + p.k_tilde * p.k_tilde * p.m5_tilde * sech2 * hy.tanh()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RsMinimum {
    pub r_star: f64,
    pub v_min: f64,
    pub curvature: f64,
    pub gradient: f64,
}

impl RsMinimum {
    /// `V_min + curvature (R - R*)^2 / 2`.
    pub fn quadratic_model(&self, r: f64) -> f64 {
        self.v_min + 0.5 * self.curvature * (r - self.r_star).powi(2)
    }

    /// `|V(R) - model(R)| / |V(R)|`.
    pub fn model_error(&self, r: f64, p: &RSParams) -> Result<f64> {
        let v = rs_effective_potential(r, p)?;
        Ok((v - self.quadratic_model(r)).abs() / v.abs())
    }
}

/// Metastable minimum of the radion potential inside `[r_min, r_max]`.
///
/// Golden-section search locates the basin; Newton steps on the analytic
/// gradient then drive `|dV/dR|` below `tol`.
pub fn rs_minimize(p: &RSParams, tol: f64) -> Result<RsMinimum> {
    p.validate()?;
    require_positive("tol", tol)?;
    let v = |r: f64| rs_effective_potential(r, p).unwrap_or(f64::INFINITY);
    let width = p.r_max - p.r_min;
    let (mut r, _) = golden_section(v, p.r_min, p.r_max, 1e-9 * width);
    let edge = 1e-6 * width;
    if r - p.r_min < edge || p.r_max - r < edge {
        return Err(Error::Search(format!(
            "no interior minimum in [{}, {}]: search ended at the edge R = {r:e}",
            p.r_min, p.r_max
        )));
    }
    let mut g = rs_gradient(r, p)?;
    for _ in 0..50 {
        if g.abs() < tol {
            break;
        }
        let c = rs_curvature(r, p)?;
        if !(c > 0.0) {
            break;
        }
        let next = r - g / c;
        if !(next > p.r_min && next < p.r_max) {
            break;
        }
        let g_next = rs_gradient(next, p)?;
        if g_next.abs() >= g.abs() {
            break;
        }
        r = next;
        g = g_next;
    }
    let curvature = rs_curvature(r, p)?;
    if !(curvature > 0.0) {
        return Err(Error::Search(format!(
            "stationary point at R = {r:e} has curvature {curvature:e}"
        )));
    }
    if !(g.abs() < tol) {
        return Err(Error::Search(format!(
            "gradient {g:e} at R = {r:e} above tolerance {tol:e}"
        )));
    }
    Ok(RsMinimum {
        r_star: r,
        v_min: rs_effective_potential(r, p)?,
        curvature,
        gradient: g,
    })
}

/// Kaluza-Klein tower `sqrt(n^2/R^2 + m5^2)`.
pub fn kk_mass(n: u32, r: f64, m5: f64) -> Result<f64> {
    require_positive("R", r)?;
    require_non_negative("m5", m5)?;
    Ok((f64::from(n) / r).hypot(m5))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BraneParams {
    pub k5_sq: f64,
    pub v0: f64,
    /// Bulk vacuum parameter, negative.
    pub lambda5: f64,
}

impl BraneParams {
    /// Requires `lambda5 < 0`; whether `|lambda5|` exceeds `k5_sq v0` is part of
    /// the report rather than a construction error.
    pub fn new(k5_sq: f64, v0: f64, lambda5: f64) -> Result<Self> {
        require_non_negative("k5_sq", k5_sq)?;
        require_finite("v0", v0)?;
        if !(lambda5 < 0.0) {
            return Err(Error::domain(
                "lambda5",
                lambda5,
                "bulk vacuum parameter must be negative",
            ));
        }
        Ok(Self { k5_sq, v0, lambda5 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BraneReport {
    /// `k5^2 V0 / 6`.
    pub h_hat: f64,
    /// `lambda5 + k5^2 V0`.
    pub lambda5_eff: f64,
    /// `lambda5_eff < 0`.
    pub valid: bool,
    /// `|m^2| phi^2 / V0` for the supplied probe.
    pub probe_ratio: Option<f64>,
    /// Probe ratio below 0.01.
    pub probe_ok: Option<bool>,
}

pub fn brane_params(p: &BraneParams, probe: Option<(f64, f64)>) -> BraneReport {
    let lambda5_eff = p.lambda5 + p.k5_sq * p.v0;
    let probe_ratio = probe.map(|(m, phi)| (m * m).abs() * phi * phi / p.v0);
    BraneReport {
        h_hat: p.k5_sq * p.v0 / 6.0,
        lambda5_eff,
        valid: lambda5_eff < 0.0,
        probe_ratio,
        probe_ok: probe_ratio.map(|r| (0.0..0.01).contains(&r)),
    }
}
