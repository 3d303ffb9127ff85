//! Computation bounds on the universe, horizon energetics, entropy growth
//! profiles and the thermal free-energy relations.

use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::units::Constants;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LloydBounds {
    /// Operations per unit time, `2E / (pi hbar)`.
    pub rate: f64,
    /// Operations supported by the entropy, `S / (k_B ln 2)`.
    pub memory: f64,
    /// Matter-dominated count `rho c^5 t^4 / hbar`.
    pub matter: f64,
    /// `(4E / hbar)(t - sqrt(t t_p))`.
    pub refined: f64,
}

/// The four operation-count bounds for energy `E`, entropy `S`, mass density
/// `rho` and age `t`, in the units of `k`.
///
/// The matter bound divides by `hbar` so that it is a pure number in any unit
/// system; in Planck units this changes nothing.
pub fn lloyd_bounds(e: f64, s: f64, rho: f64, t: f64, k: &Constants) -> Result<LloydBounds> {
    require_positive("E", e)?;
    require_positive("S", s)?;
    require_positive("rho", rho)?;
    require_positive("t", t)?;
    if t < k.t_p {
        return Err(Error::domain("t", t, "must be at least one Planck time"));
    }
    Ok(LloydBounds {
        rate: 2.0 * e / (PI * k.hbar),
        memory: s / (k.k_b * LN_2),
        matter: rho * k.c.powi(5) * t.powi(4) / k.hbar,
        refined: 4.0 * e / k.hbar * (t - (t * k.t_p).sqrt()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Horizon {
    pub h: f64,
    /// `c / H`.
    pub distance: f64,
    /// `1 / (t_p^2 H)`.
    pub energy: f64,
}

/// Horizon quantities from a critical density via `H = sqrt(8 pi G rho / (3 c^2))`.
pub fn horizon_quantities(rho_crit: f64, k: &Constants) -> Result<Horizon> {
    require_positive("rho_crit", rho_crit)?;
    horizon_from_hubble((8.0 * PI * k.g * rho_crit / (3.0 * k.c * k.c)).sqrt(), k)
}

pub fn horizon_from_hubble(h: f64, k: &Constants) -> Result<Horizon> {
    require_positive("H", h)?;
    Ok(Horizon {
        h,
        distance: k.c / h,
        energy: 1.0 / (k.t_p * k.t_p * h),
    })
}

/// Critical density carried by one graviton of frequency `omega` in a
/// four-volume `v4`: `hbar omega / V4`.
pub fn graviton_critical_density(omega: f64, v4: f64, k: &Constants) -> Result<f64> {
    require_positive("omega", omega)?;
    require_positive("V4", v4)?;
    Ok(k.hbar * omega / v4)
}

/// `(3 ln2 / 4)^(4/3) (S / (k_B ln 2))^(4/3)`, implemented as written; the
/// dimensional bookkeeping behind it is not reconstructed.
pub fn ops_from_entropy(s: f64, k: &Constants) -> Result<f64> {
    require_positive("S", s)?;
    let bits = s / (k.k_b * LN_2);
    Ok((0.75 * LN_2 * bits).powf(4.0 / 3.0))
}

pub type VolumeFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Three-regime entropy model.
///
/// * `t < t_p`: `S = k_sigma t^2`;
/// * `t_p <= t < t_cmb`: `S = s_net V(t)`;
/// * `t >= t_cmb`: `S = s_tau0 V(t) tau0 / t`.
#[derive(Clone)]
pub struct EntropyProfileParams {
    pub s_tau0: f64,
    pub tau0: f64,
    pub k_sigma: f64,
    pub s_net: f64,
    pub volume_fn: VolumeFn,
    pub t_p: f64,
    pub t_cmb: f64,
}

impl fmt::Debug for EntropyProfileParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EntropyProfileParams")
            .field("s_tau0", &self.s_tau0)
            .field("tau0", &self.tau0)
            .field("k_sigma", &self.k_sigma)
            .field("s_net", &self.s_net)
            .field("t_p", &self.t_p)
            .field("t_cmb", &self.t_cmb)
            .finish_non_exhaustive()
    }
}

/// Age of the universe at redshift ~1100, in seconds.
pub const T_CMB_SECONDS: f64 = 380_000.0 * crate::units::YEAR_SECONDS;

impl Default for EntropyProfileParams {
    /// Natural units, `V(t) = t^4`, continuous at both boundaries.
    fn default() -> Self {
        let k = Constants::codata();
        Self::calibrated(
            1.0,
            1.0,
            k.seconds_to_natural(T_CMB_SECONDS),
            1.0,
            Arc::new(|t: f64| t.powi(4)),
        )
        .expect("default profile is valid")
    }
}

impl EntropyProfileParams {
    pub fn validate(&self) -> Result<()> {
        require_positive("s_tau0", self.s_tau0)?;
        require_positive("tau0", self.tau0)?;
        require_positive("k_sigma", self.k_sigma)?;
        require_positive("s_net", self.s_net)?;
        require_positive("t_p", self.t_p)?;
        require_positive("t_cmb", self.t_cmb)?;
        if !(self.t_p < self.t_cmb) {
            return Err(Error::domain("t_cmb", self.t_cmb, "must exceed t_p"));
        }
        Ok(())
    }

    /// Chooses `k_sigma` and `s_tau0` so that the profile is continuous at
    /// `t_p` and at `t_cmb`.
    pub fn calibrated(
        s_net: f64,
        t_p: f64,
        t_cmb: f64,
        tau0: f64,
        volume_fn: VolumeFn,
    ) -> Result<Self> {
        require_positive("t_p", t_p)?;
        require_positive("tau0", tau0)?;
        let v_p = volume_fn(t_p);
        require_positive("V(t_p)", v_p)?;
        let p = Self {
            s_tau0: s_net * t_cmb / tau0,
            tau0,
            k_sigma: s_net * v_p / (t_p * t_p),
            s_net,
            volume_fn,
            t_p,
            t_cmb,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn entropy(&self, t: f64) -> Result<f64> {
        require_positive("t", t)?;
        let s = if t < self.t_p {
            self.k_sigma * t * t
        } else if t < self.t_cmb {
            self.s_net * (self.volume_fn)(t)
        } else {
            self.s_tau0 * (self.volume_fn)(t) * (self.tau0 / t)
        };
        if s.is_finite() {
            Ok(s)
        } else {
            Err(Error::Evaluation(format!("entropy at t = {t:e} is {s}")))
        }
    }

    /// `s(tau) = s(tau0) tau0 / tau`.
    pub fn density(&self, tau: f64) -> Result<f64> {
        require_positive("tau", tau)?;
        Ok(self.s_tau0 * self.tau0 / tau)
    }
}

/// Free-energy density of a massless scalar, `-pi^2 T^4 / 90`.
pub fn free_energy(t: f64) -> Result<f64> {
    require_non_negative("T", t)?;
    Ok(-PI * PI * t.powi(4) / 90.0)
}

/// `pi^2 T^4 / 30`.
pub fn energy_density(t: f64) -> Result<f64> {
    require_non_negative("T", t)?;
    Ok(PI * PI * t.powi(4) / 30.0)
}

/// `V0(phi) + (lambda/8) T^2 phi^2 - pi^2 T^4 / 90`.
///
/// The thermal `-s(T^2)` term is read as the free energy above.
pub fn one_loop_potential<F>(phi_c: f64, t: f64, lambda: f64, v0: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let thermal = free_energy(t)?;
    Ok(v0(phi_c) + lambda / 8.0 * t * t * phi_c * phi_c + thermal)
}
