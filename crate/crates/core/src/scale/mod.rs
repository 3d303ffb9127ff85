//! Scale-factor dynamics: the Friedmann rate, explicit stepping, the
//! causal-discontinuity bound, the near-singularity polynomial in `u = 1/a`,
//! and causal-set checks on stepped series.

mod causet;
mod polynomial;

pub use causet::{series_to_causet, verify_causal_set, CausalReport, CausalSet};
pub use polynomial::{scale_polynomial, ScalePolynomial};

use serde::{Deserialize, Serialize};
use std::f64::consts::{LN_10, PI};

use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::numerics::bisect;
use crate::units::Constants;

/// Default discontinuity threshold on the causal bound.
pub const EPSILON_CAUSAL: f64 = 1e-30;

/// Background densities and the vacuum parameter, natural units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DensityParams {
    pub rho_rel0: f64,
    pub rho_m0: f64,
    /// Reference scale factor; one Planck length by default.
    pub a0: f64,
    pub lambda: f64,
    pub g: f64,
}

impl Default for DensityParams {
    fn default() -> Self {
        Self {
            rho_rel0: 1.0,
            rho_m0: 1.0,
            a0: 1.0,
            lambda: 1.0,
            g: 1.0,
        }
    }
}

impl DensityParams {
    pub fn validate(&self) -> Result<()> {
        require_non_negative("rho_rel0", self.rho_rel0)?;
        require_non_negative("rho_m0", self.rho_m0)?;
        require_positive("a0", self.a0)?;
        require_positive("G", self.g)?;
        if !self.lambda.is_finite() {
            return Err(Error::domain("lambda", self.lambda, "must be finite"));
        }
        Ok(())
    }
}

/// `(adot/a)^2 = (8 pi G / 3)[rho_rel0 (a0/a)^4 + rho_m0 (a0/a)^3] + lambda/3`.
pub fn friedmann_rate(a: f64, p: &DensityParams) -> Result<f64> {
    require_positive("a", a)?;
    let x = p.a0 / a;
    Ok(8.0 * PI * p.g / 3.0 * (p.rho_rel0 * x.powi(4) + p.rho_m0 * x.powi(3)) + p.lambda / 3.0)
}

/// Sampled scale factor; times strictly increasing, values positive.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleSeries {
    times: Vec<f64>,
    a_values: Vec<f64>,
}

impl ScaleSeries {
    pub fn new(times: Vec<f64>, a_values: Vec<f64>) -> Result<Self> {
        if times.len() != a_values.len() {
            return Err(Error::Input(format!(
                "{} times but {} scale factors",
                times.len(),
                a_values.len()
            )));
        }
        if times.is_empty() {
            return Err(Error::Input("series must not be empty".into()));
        }
        if times.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Input("times must be strictly increasing".into()));
        }
        if let Some(&bad) = a_values.iter().find(|&&a| !(a > 0.0)) {
            return Err(Error::domain("a", bad, "scale factors must be positive"));
        }
        Ok(Self { times, a_values })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn a_values(&self) -> &[f64] {
        &self.a_values
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Forward stepping `a <- a (1 + dt sqrt(rate^2(a)))`, returning `n + 1`
/// samples starting at `(t0, a_start)`.
pub fn step_scale_factor(
    t0: f64,
    a_start: f64,
    dt: f64,
    n: usize,
    p: &DensityParams,
) -> Result<ScaleSeries> {
    require_positive("dt", dt)?;
    require_positive("a_start", a_start)?;
    if n == 0 {
        return Err(Error::domain("n", 0.0, "at least one step is required"));
    }
    p.validate()?;
    let mut times = Vec::with_capacity(n + 1);
    let mut a_values = Vec::with_capacity(n + 1);
    let mut a = a_start;
    times.push(t0);
    a_values.push(a);
    for i in 0..n {
        let t = t0 + dt * i as f64;
        let rate2 = friedmann_rate(a, p)?;
        if rate2 < 0.0 {
            return Err(Error::Integration {
                at: t,
                reason: format!("negative expansion rate squared {rate2:e} at step {i}"),
            });
        }
        a *= 1.0 + dt * rate2.sqrt();
        if !a.is_finite() {
            return Err(Error::Integration {
                at: t,
                reason: format!("scale factor overflowed at step {i}"),
            });
        }
        times.push(t0 + dt * (i + 1) as f64);
        a_values.push(a);
    }
    ScaleSeries::new(times, a_values)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CausalBound {
    /// Natural log of the bound.
    pub ln_bound: f64,
    /// The bound itself; underflows to zero for very large lambda.
    pub bound: f64,
    /// Whether the bound has fallen to `epsilon` or below.
    pub discontinuity: bool,
}

/// Upper bound on the one-step growth `a(t + dt)/a(t) - 1`:
///
/// `(dt l_p) / sqrt(lambda/3) * [1 + (8 pi / lambda)(rho_rel0 10^(4 alpha) + rho_m0 10^(3 alpha))]^(1/2)`
///
/// Evaluated as written (the prefactor mixes a length with an inverse rate)
/// and in log form so that large `alpha` and `lambda` stay representable.
pub fn causal_bound(
    dt: f64,
    alpha: f64,
    p: &DensityParams,
    k: &Constants,
    epsilon: f64,
) -> Result<CausalBound> {
    require_positive("dt", dt)?;
    require_non_negative("alpha", alpha)?;
    require_positive("lambda", p.lambda)?;
    require_positive("epsilon", epsilon)?;
    let ln_rel = if p.rho_rel0 > 0.0 {
        p.rho_rel0.ln() + 4.0 * alpha * LN_10
    } else {
        f64::NEG_INFINITY
    };
    let ln_m = if p.rho_m0 > 0.0 {
        p.rho_m0.ln() + 3.0 * alpha * LN_10
    } else {
        f64::NEG_INFINITY
    };
    let ln_sum = log_add(ln_rel, ln_m);
    let ln_x = (8.0 * PI).ln() + ln_sum - p.lambda.ln();
    let ln_bracket = softplus(ln_x);
    let ln_bound = (dt * k.l_p).ln() - 0.5 * (p.lambda / 3.0).ln() + 0.5 * ln_bracket;
    Ok(CausalBound {
        ln_bound,
        bound: ln_bound.exp(),
        discontinuity: ln_bound <= epsilon.ln(),
    })
}

fn log_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// `ln(1 + e^x)` without overflow.
fn softplus(x: f64) -> f64 {
    if x > 40.0 {
        x + (-x).exp()
    } else if x == f64::NEG_INFINITY {
        0.0
    } else {
        x.exp().ln_1p()
    }
}

/// Smallest `lambda` (to relative `rtol`) at which [`causal_bound`] flags a
/// discontinuity, searched by bisection in `ln lambda` on `[lo, hi]`.
#[allow(clippy::too_many_arguments)]
pub fn lambda_star(
    dt: f64,
    alpha: f64,
    p: &DensityParams,
    k: &Constants,
    epsilon: f64,
    lo: f64,
    hi: f64,
    rtol: f64,
) -> Result<f64> {
    require_positive("lambda_lo", lo)?;
    require_positive("lambda_hi", hi)?;
    let ln_eps = epsilon.ln();
    let excess = |ln_l: f64| -> f64 {
        let q = DensityParams {
            lambda: ln_l.exp(),
            ..*p
        };
        match causal_bound(dt, alpha, &q, k, epsilon) {
            Ok(b) => b.ln_bound - ln_eps,
            Err(_) => f64::NAN,
        }
    };
    let (ln_lo, ln_hi) = (lo.ln(), hi.ln());
    let e_lo = excess(ln_lo);
    let e_hi = excess(ln_hi);
    if !(e_lo > 0.0 && e_hi <= 0.0) {
        return Err(Error::Search(format!(
            "no discontinuity threshold in lambda range [{lo:e}, {hi:e}]"
        )));
    }
    // Convert the relative tolerance on lambda into an absolute one on ln lambda.
    let ln_tol = rtol / ln_lo.abs().max(ln_hi.abs()).max(1.0);
    let ln_star = bisect(excess, ln_lo, ln_hi, ln_tol)?;
    // Return the flagged side of the final bracket.
    let mut l = ln_star.exp();
    while excess(l.ln()) > 0.0 {
        l *= 1.0 + rtol;
    }
    Ok(l)
}
