//! Temperature-dependent vacuum energy: the 4- and 5-dimensional power-law
//! models, the post-burst cap, Hartle-Hawking amplitudes, holographic density
//! estimates, e-folding arithmetic and the Casimir special case.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{require_finite, require_positive, Error, Result};
use crate::units::{Constants, LogScalar, T_PARK_KELVIN, T_QUANTUM_GRAVITY_KELVIN};

/// Critical energy at which quantum effects are taken to dominate (eV).
pub const E_CRITICAL_EV: f64 = 1.22e28;

/// Post-burst upper limit on the 4-dimensional vacuum parameter, in units of
/// `m_p^2`.
pub const BARVINSKY_CAP: f64 = 360.0;

/// Target of the default calibration: `lambda_4d(T_quantum) = 8 pi * 1e156`.
pub const INITIAL_LAMBDA_OVER_8PI: f64 = 1e156;

/// Power-law vacuum-energy model. Temperatures are natural units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LambdaModel {
    /// 5-dimensional coupling.
    pub c1: f64,
    /// 4-dimensional coupling.
    pub c2: f64,
    /// 5-dimensional temperature exponent.
    pub alpha: f64,
    /// 4-dimensional temperature exponent.
    pub beta: f64,
    pub t_quantum: f64,
    pub cap: f64,
}

impl Default for LambdaModel {
    fn default() -> Self {
        let k = Constants::codata();
        Self::calibrated(
            1.0,
            2.0,
            k.kelvin_to_natural(T_QUANTUM_GRAVITY_KELVIN),
            k.kelvin_to_natural(T_PARK_KELVIN),
            BARVINSKY_CAP,
        )
        .expect("default calibration is valid")
    }
}

impl LambdaModel {
    pub fn new(c1: f64, c2: f64, alpha: f64, beta: f64, t_quantum: f64, cap: f64) -> Result<Self> {
        require_positive("c1", c1)?;
        require_positive("c2", c2)?;
        require_positive("alpha", alpha)?;
        require_positive("beta", beta)?;
        require_positive("t_quantum", t_quantum)?;
        require_positive("cap", cap)?;
        require_finite("c1", c1)?;
        require_finite("c2", c2)?;
        Ok(Self {
            c1,
            c2,
            alpha,
            beta,
            t_quantum,
            cap,
        })
    }

    pub fn validate(&self) -> Result<()> {
        Self::new(
            self.c1,
            self.c2,
            self.alpha,
            self.beta,
            self.t_quantum,
            self.cap,
        )
        .map(|_| ())
    }

    /// Chooses `c2` so that `lambda_4d(t_quantum) = 8 pi 1e156` and `c1` so
    /// that the 5-dimensional magnitude equals the cap at `t_park`, where the
    /// two branches trade places.
    pub fn calibrated(
        alpha: f64,
        beta: f64,
        t_quantum: f64,
        t_park: f64,
        cap: f64,
    ) -> Result<Self> {
        require_positive("t_quantum", t_quantum)?;
        require_positive("t_park", t_park)?;
        let c2 = 8.0 * PI * INITIAL_LAMBDA_OVER_8PI / t_quantum.powf(beta);
        let c1 = cap * t_park.powf(alpha);
        Self::new(c1, c2, alpha, beta, t_quantum, cap)
    }

    /// `c2 T^beta`, clamped to the cap after the burst.
    pub fn lambda_4d(&self, t: f64, post_burst: bool) -> Result<f64> {
        require_positive("T", t)?;
        let raw = self.c2 * t.powf(self.beta);
        Ok(if post_burst { raw.min(self.cap) } else { raw })
    }

    /// `-c1 / T^alpha`.
    pub fn lambda_5d(&self, t: f64) -> Result<f64> {
        require_positive("T", t)?;
        Ok(-self.c1 / t.powf(self.alpha))
    }
}

/// Hartle-Hawking amplitude `exp(3 pi / (2 G lambda))`, kept in log form.
///
/// Written as printed, without a sign reconciliation between `exp(-S_E)` and
/// the exponent; check [`LogScalar::is_saturated`] before converting.
pub fn hh_amplitude(lambda: f64, g: f64) -> Result<LogScalar> {
    require_positive("G", g)?;
    if lambda == 0.0 {
        return Err(Error::Singularity("hh_amplitude at lambda = 0".into()));
    }
    if lambda.is_nan() {
        return Err(Error::domain("lambda", lambda, "must not be NaN"));
    }
    Ok(LogScalar::exp(3.0 * PI / (2.0 * g * lambda)))
}

/// Holographic vacuum-density estimates for a Hubble rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolographicDensity {
    /// `H^2 / l_p^2`.
    pub rho_vac: f64,
    /// `H^2 / G`.
    pub delta_rho: f64,
    /// `8 pi G rho_vac`.
    pub lambda_equiv: f64,
}

pub fn vacuum_density_holographic(h: f64, k: &Constants) -> Result<HolographicDensity> {
    require_positive("H", h)?;
    let rho_vac = h * h / (k.l_p * k.l_p);
    Ok(HolographicDensity {
        rho_vac,
        delta_rho: h * h / k.g,
        lambda_equiv: 8.0 * PI * k.g * rho_vac,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Efolds {
    pub n: f64,
    /// `a(t_end) / a(t_start) = exp(n)`.
    pub ratio: LogScalar,
}

/// `N = H (t_end - t_start)`; any consistent units for `H` and time.
pub fn inflation_efolds(h: f64, t_start: f64, t_end: f64) -> Result<Efolds> {
    require_positive("H", h)?;
    if !(t_end > t_start) {
        return Err(Error::domain("t_end", t_end, "must exceed t_start"));
    }
    let n = h * (t_end - t_start);
    Ok(Efolds {
        n,
        ratio: LogScalar::exp(n),
    })
}

/// Parallel-plate vacuum energy density `-A / a^4`.
pub fn casimir_density(a: f64, big_a: f64) -> Result<f64> {
    require_positive("a", a)?;
    require_positive("A", big_a)?;
    Ok(-big_a / a.powi(4))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dominance {
    /// `lambda4 / |lambda5| - 1`.
    pub residual: f64,
    /// Whether `|residual| <= tol / n`.
    pub dominant: bool,
}

pub fn quantum_dominance(lambda4: f64, lambda5: f64, n: u32, tol: f64) -> Result<Dominance> {
    if lambda5 == 0.0 {
        return Err(Error::Singularity(
            "quantum_dominance with lambda5 = 0".into(),
        ));
    }
    if n == 0 {
        return Err(Error::domain("n", 0.0, "must be at least 1"));
    }
    let residual = lambda4 / lambda5.abs() - 1.0;
    Ok(Dominance {
        residual,
        dominant: residual.abs() <= tol / f64::from(n),
    })
}

/// [`E_CRITICAL_EV`] in the energy unit of `k`.
pub fn critical_energy(k: &Constants) -> f64 {
    E_CRITICAL_EV * k.ev
}
