//! Charged, vacuum-dominated metric coefficient, its temperature-driven slope
//! `eta(T)`, the bridge wavefunctional and the four-link equivalence chain
//! tying the bridge to the burst and to the amplitude transition.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::burst::{burst_table, BurstConfig};
use crate::error::{require_finite, require_positive, Error, Result};
use crate::units::LogScalar;
use crate::vacuum::{hh_amplitude, LambdaModel};

/// Threshold below which the 5-dimensional amplitude counts as vanished.
pub const HH_VANISHING: f64 = 1e-10;

/// Natural units; `r_shell` defaults to one Planck length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricParams {
    pub m: f64,
    pub q: f64,
    pub lambda: f64,
    pub r_shell: f64,
}

impl Default for MetricParams {
    fn default() -> Self {
        Self {
            m: 1.0,
            q: 0.0,
            lambda: 0.0,
            r_shell: 1.0,
        }
    }
}

/// `1 - 2M/r + Q^2/r^2 - (lambda/3) r^2`.
pub fn metric_f(r: f64, p: &MetricParams) -> Result<f64> {
    require_positive("r", r)?;
    Ok(1.0 - 2.0 * p.m / r + p.q * p.q / (r * r) - p.lambda / 3.0 * r * r)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eta {
    /// `-2 lambda_4d(T) / 3`.
    pub eta: f64,
    /// `eta * r`, the slope of the vacuum term of the metric coefficient.
    pub slope: f64,
}

pub fn eta(t: f64, model: &LambdaModel, r: f64) -> Result<Eta> {
    require_positive("r", r)?;
    let eta = -2.0 * model.lambda_4d(t, false)? / 3.0;
    Ok(Eta {
        eta,
        slope: eta * r,
    })
}

/// A coefficient function of `(omega, t, r)`.
pub type CoeffFn = Arc<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>;

/// Bridge parameters. Defaults: `A = 1`, `omega = 1`,
/// `C1 = cos(omega t) exp(-r)`, `C2 = sin^2(omega t) exp(-r)` (natural units).
#[derive(Clone)]
pub struct BridgeConfig {
    pub a: f64,
    pub omega: f64,
    pub c1_fn: CoeffFn,
    pub c2_fn: CoeffFn,
}

impl fmt::Debug for BridgeConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BridgeConfig")
            .field("a", &self.a)
            .field("omega", &self.omega)
            .finish_non_exhaustive()
    }
}

impl Default for BridgeConfig {
    fn default() -> Self {
        Self {
            a: 1.0,
            omega: 1.0,
            c1_fn: Arc::new(|w, t, r| (w * t).cos() * (-r).exp()),
            c2_fn: Arc::new(|w, t, r| (w * t).sin().powi(2) * (-r).exp()),
        }
    }
}

impl BridgeConfig {
    pub fn with_amplitude(a: f64) -> Self {
        Self {
            a,
            ..Self::default()
        }
    }

    /// Checks that both coefficient functions are finite on a sample grid and
    /// differ somewhere on it.
    pub fn spot_check(&self) -> Result<()> {
        require_finite("A", self.a)?;
        require_finite("omega", self.omega)?;
        let mut differ = false;
        for i in -4..=4 {
            for j in 1..=4 {
                let t = 0.37 * f64::from(i);
                let r = 0.5 * f64::from(j);
                let c1 = (self.c1_fn)(self.omega, t, r);
                let c2 = (self.c2_fn)(self.omega, t, r);
                if !(c1.is_finite() && c2.is_finite()) {
                    return Err(Error::Evaluation(format!(
                        "C1/C2 not finite at t={t}, r={r}"
                    )));
                }
                differ |= c1 != c2;
            }
        }
        if differ {
            Ok(())
        } else {
            Err(Error::Input("C1 and C2 coincide on the sample grid".into()))
        }
    }
}

/// The two terms of the bridge functional, kept in log form because
/// `eta^2` exceeds the `f64` range at Planck temperatures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BridgeTerms {
    /// `-A eta^2 C1`.
    pub eta_squared: LogScalar,
    /// `A eta omega^2 C2`.
    pub eta_linear: LogScalar,
}

impl BridgeTerms {
    pub fn total(&self) -> LogScalar {
        self.eta_squared.add(self.eta_linear)
    }
}

pub fn bridge_terms(
    t_temp: f64,
    t: f64,
    r: f64,
    cfg: &BridgeConfig,
    model: &LambdaModel,
) -> Result<BridgeTerms> {
    let e = eta(t_temp, model, r)?.eta;
    let c1 = (cfg.c1_fn)(cfg.omega, t, r);
    let c2 = (cfg.c2_fn)(cfg.omega, t, r);
    if !(c1.is_finite() && c2.is_finite()) {
        return Err(Error::Evaluation(format!(
            "C1 = {c1}, C2 = {c2} at t = {t}, r = {r}"
        )));
    }
    let a = LogScalar::from_f64(cfg.a);
    let eta_l = LogScalar::from_f64(e);
    Ok(BridgeTerms {
        eta_squared: LogScalar::from_f64(-1.0)
            .mul(a)
            .mul(eta_l)
            .mul(eta_l)
            .mul(LogScalar::from_f64(c1)),
        eta_linear: a
            .mul(eta_l)
            .mul(LogScalar::from_f64(cfg.omega * cfg.omega))
            .mul(LogScalar::from_f64(c2)),
    })
}

/// `Psi(T) = -A eta^2 C1 + A eta omega^2 C2` at time `t` and radius `r`.
pub fn bridge_amplitude(
    t_temp: f64,
    t: f64,
    r: f64,
    cfg: &BridgeConfig,
    model: &LambdaModel,
) -> Result<LogScalar> {
    Ok(bridge_terms(t_temp, t, r, cfg, model)?.total())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinkResult {
    pub link: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Theorem1Report {
    /// Natural units.
    pub t_max: f64,
    pub links: Vec<LinkResult>,
}

impl Theorem1Report {
    pub fn passed(&self) -> bool {
        self.links.iter().all(|l| l.passed)
    }

    pub fn failed_links(&self) -> Vec<&'static str> {
        self.links
            .iter()
            .filter(|l| !l.passed)
            .map(|l| l.link)
            .collect()
    }

    pub fn link(&self, name: &str) -> Option<&LinkResult> {
        self.links.iter().find(|l| l.link == name)
    }
}

fn outcome(link: &'static str, res: Result<(bool, String)>) -> LinkResult {
    match res {
        Ok((passed, detail)) => LinkResult {
            link,
            passed,
            detail,
        },
        Err(e) => LinkResult {
            link,
            passed: false,
            detail: e.to_string(),
        },
    }
}

/// Runs the equivalence chain at `t_max` (natural units):
///
/// * `i`: the vacuum term dominates the metric coefficient at one Planck length;
/// * `ii`: the bridge is nonzero, eta-dominated at `t = t_p / 2`, and even in time;
/// * `iii`: the burst table with `t_star = t_max / 3` has a row with power;
/// * `iv`: the 5-dimensional amplitude at `t_max` has vanished while the capped
///   4-dimensional one exceeds one.
///
/// Failures are reported per link rather than raised.
pub fn theorem1_chain(
    t_max: f64,
    cfg: &BridgeConfig,
    model: &LambdaModel,
    burst: &BurstConfig,
) -> Result<Theorem1Report> {
    require_positive("T_max", t_max)?;
    let r = 1.0;
    let mut links = Vec::with_capacity(4);

    links.push(outcome(
        "i",
        (|| {
            let lambda = model.lambda_4d(t_max, false)?;
            let p = MetricParams {
                lambda,
                r_shell: r,
                ..MetricParams::default()
            };
            let vac = (lambda / 3.0 * r * r).abs();
            let rest = (metric_f(r, &p)? + lambda / 3.0 * r * r).abs();
            Ok((
                vac >= rest,
                format!("|lambda r^2 / 3| = {vac:e}, remainder = {rest:e}"),
            ))
        })(),
    ));

    links.push(outcome(
        "ii",
        (|| {
            cfg.spot_check()?;
            let t = 0.5;
            let terms = bridge_terms(t_max, t, r, cfg, model)?;
            let psi = terms.total();
            let mirrored = bridge_amplitude(t_max, -t, r, cfg, model)?;
            let symmetric = mirrored == psi;
            let dominated = !terms.eta_squared.is_zero()
                && terms.eta_squared.ln_abs() >= terms.eta_linear.ln_abs();
            Ok((
                !psi.is_zero() && dominated && symmetric,
                format!(
                    "ln|eta^2 term| = {:e}, ln|eta term| = {:e}, psi(t) = psi(-t): {symmetric}",
                    terms.eta_squared.ln_abs(),
                    terms.eta_linear.ln_abs()
                ),
            ))
        })(),
    ));

    links.push(outcome(
        "iii",
        (|| {
            let table_cfg = BurstConfig {
                t_star: t_max / 3.0,
                ..burst.clone()
            };
            let rows = burst_table(&table_cfg)?;
            let hot: Vec<u32> = rows.iter().filter(|r| r.power > 0.0).map(|r| r.k).collect();
            Ok((!hot.is_empty(), format!("rows with nonzero power: {hot:?}")))
        })(),
    ));

    links.push(outcome(
        "iv",
        (|| {
            let five = hh_amplitude(model.lambda_5d(t_max)?, 1.0)?;
            let four = hh_amplitude(model.cap, 1.0)?;
            let vanished = five.value() < HH_VANISHING;
            let above = four.ln_abs() > 0.0 && four.sign() > 0;
            Ok((
                vanished && above,
                format!(
                    "ln hh(lambda_5) = {:e}, hh(cap) = {:e}",
                    five.ln_abs(),
                    four.value()
                ),
            ))
        })(),
    ));

    Ok(Theorem1Report { t_max, links })
}
