//! Quintessence field dynamics: reconstruction of the potential and field
//! from an expansion history, the baryon-coupled equation of motion, its
//! characteristic roots and their temperature-driven bifurcation.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{require_finite, require_non_negative, require_positive, Error, Result};
use crate::numerics::{bisect, ode};
use crate::potentials::{axion_contribution_with_strength, axion_strength, AxionParams};
use crate::units::Constants;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EomParams {
    /// Baryon coupling strength.
    pub c_tilde: f64,
    /// Mass scale `M`.
    pub m_scale: f64,
    /// Baryonic degrees of freedom.
    pub g_b: f64,
    /// Temperature.
    pub t: f64,
    /// Hubble rate, held constant over an integration.
    pub h: f64,
    /// Inflaton mass.
    pub m: f64,
    pub f_axion: f64,
    pub phi_c: f64,
}

impl Default for EomParams {
    fn default() -> Self {
        Self {
            c_tilde: 1.0,
            m_scale: 1.0,
            g_b: 100.0,
            t: 1.0,
            h: 1.0,
            m: 0.1,
            f_axion: 0.0,
            phi_c: 1.0,
        }
    }
}

impl EomParams {
    pub fn validate(&self) -> Result<()> {
        require_non_negative("c_tilde", self.c_tilde)?;
        require_positive("M", self.m_scale)?;
        require_positive("g_b", self.g_b)?;
        require_positive("T", self.t)?;
        require_positive("H", self.h)?;
        require_finite("m", self.m)?;
        require_non_negative("f_axion", self.f_axion)?;
        require_finite("phi_c", self.phi_c)?;
        Ok(())
    }

    /// `c~ T^2 g_b / (6 M^2)`.
    pub fn coupling(&self) -> f64 {
        self.c_tilde * self.t * self.t * self.g_b / (6.0 * self.m_scale * self.m_scale)
    }

    /// Common factor of the kinetic and friction terms, `1 + coupling`.
    pub fn kappa(&self) -> f64 {
        1.0 + self.coupling()
    }

    /// `k = 6 (m^2 + f) M^2 / (c~ T^2 g_b)`, the strong-coupling stiffness of
    /// the characteristic equation.
    pub fn stiffness(&self) -> Result<f64> {
        let denom = self.c_tilde * self.t * self.t * self.g_b;
        if denom == 0.0 {
            return Err(Error::Singularity("c_tilde T^2 g_b vanishes".into()));
        }
        Ok(6.0 * (self.m * self.m + self.f_axion) * self.m_scale * self.m_scale / denom)
    }

    /// `(m^2 + f) / kappa`, the stiffness of the linearized equation that
    /// [`integrate_eom`] actually solves.
    pub fn full_stiffness(&self) -> f64 {
        (self.m * self.m + self.f_axion) / self.kappa()
    }

    /// Roots of `p^2 + 3 H p + full_stiffness = 0`.
    pub fn linear_roots(&self) -> RootPair {
        roots_from_stiffness(self.h, self.full_stiffness())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootMode {
    Exact,
    /// The printed high-temperature approximation with `f` omitted:
    /// `p1 = -(3H/2)[2 - 4 m^2 M^2 / (T^2 c g_b H)]`, `p2 = -6 m^2 M^2 / (T^2 c g_b)`.
    CaseTwo,
    /// The printed rising-temperature form
    /// `-(3H/2)[1 +- sqrt(1 - 6 M^2 (m^2 + f) / (3 T^2 c g_b H))]`.
    CaseFour,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Oscillatory,
    CriticallyDamped,
    Overdamped,
}

impl Regime {
    fn from_discriminant(d: f64) -> Self {
        if d < 0.0 {
            Regime::Oscillatory
        } else if d == 0.0 {
            Regime::CriticallyDamped
        } else {
            Regime::Overdamped
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootPair {
    /// Fast root (most negative real part).
    pub p1: Complex64,
    /// Slow root.
    pub p2: Complex64,
    /// `(p1 - p2)^2`, which is `9H^2 - 4k` for the exact pair.
    pub discriminant: f64,
    pub regime: Regime,
}

impl RootPair {
    /// Largest real part, the late-time decay rate.
    pub fn max_re(&self) -> f64 {
        self.p1.re.max(self.p2.re)
    }

    pub fn is_real(&self) -> bool {
        self.p1.im == 0.0 && self.p2.im == 0.0
    }
}

/// Roots of `p^2 + 3 H p + k = 0` by the cancellation-free quadratic formula.
pub fn roots_from_stiffness(h: f64, k: f64) -> RootPair {
    let b = 3.0 * h;
    let disc = b * b - 4.0 * k;
    let (p1, p2) = if disc >= 0.0 {
        let q = -0.5 * (b + disc.sqrt());
        let other = if q == 0.0 { 0.0 } else { k / q };
        (Complex64::new(q, 0.0), Complex64::new(other, 0.0))
    } else {
        let w = 0.5 * (-disc).sqrt();
        (Complex64::new(-0.5 * b, w), Complex64::new(-0.5 * b, -w))
    };
    RootPair {
        p1,
        p2,
        discriminant: disc,
        regime: Regime::from_discriminant(disc),
    }
}

pub fn characteristic_roots(p: &EomParams, mode: RootMode) -> Result<RootPair> {
    p.validate()?;
    let k = p.stiffness()?;
    let h = p.h;
    let pair = |p1: Complex64, p2: Complex64| {
        let d = (p1 - p2).powi(2).re;
        RootPair {
            p1,
            p2,
            discriminant: d,
            regime: Regime::from_discriminant(d),
        }
    };
    Ok(match mode {
        RootMode::Exact => roots_from_stiffness(h, k),
        RootMode::CaseTwo => {
            let base = p.m * p.m * p.m_scale * p.m_scale / (p.t * p.t * p.c_tilde * p.g_b);
            let p1 = -1.5 * h * (2.0 - 4.0 * base / h);
            let p2 = -6.0 * base;
            pair(Complex64::new(p1, 0.0), Complex64::new(p2, 0.0))
        }
        RootMode::CaseFour => {
            let radicand = 1.0
                - 6.0 * p.m_scale * p.m_scale * (p.m * p.m + p.f_axion)
                    / (3.0 * p.t * p.t * p.c_tilde * p.g_b * h);
            let s = Complex64::new(radicand, 0.0).sqrt();
            let one = Complex64::new(1.0, 0.0);
            pair(-1.5 * h * (one + s), -1.5 * h * (one - s))
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    /// Cold, slow roll: the second derivative is dropped.
    I,
    /// Hot with a non-small coupling.
    II,
    /// Hot with a small coupling.
    III,
    /// Rising temperature with a non-negligible axion term.
    IV,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RegimeThresholds {
    pub t_low: f64,
    pub t_high: f64,
    pub c_small: f64,
    /// `f` counts as negligible below this multiple of `m^2`.
    pub f_negligible: f64,
}

impl RegimeThresholds {
    /// Defaults `T_low = 1e3 K`, `T_high = 1e12 K`, converted with `k`.
    pub fn new(k: &Constants) -> Self {
        Self {
            t_low: k.kelvin_to_natural(1e3),
            t_high: k.kelvin_to_natural(1e12),
            c_small: 1e-3,
            f_negligible: 1e-6,
        }
    }
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        Self::new(&Constants::codata())
    }
}

/// Case label at temperature `t_temp` and time `time`.
///
/// Between the thresholds the case is IV when the axion term matters and
/// otherwise follows the coupling split used at high temperature. The time
/// argument only has to be positive.
pub fn classify_regime(
    t_temp: f64,
    time: f64,
    p: &EomParams,
    th: &RegimeThresholds,
) -> Result<Case> {
    require_positive("T", t_temp)?;
    require_positive("t", time)?;
    if t_temp < th.t_low {
        return Ok(Case::I);
    }
    if t_temp < th.t_high && p.f_axion >= th.f_negligible * p.m * p.m {
        return Ok(Case::IV);
    }
    Ok(if p.c_tilde <= th.c_small {
        Case::III
    } else {
        Case::II
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldTrajectory {
    pub times: Vec<f64>,
    pub phi: Vec<f64>,
    pub phi_dot: Vec<f64>,
}

impl FieldTrajectory {
    /// `|phi(t_end) - phi_C| / |phi_initial|`.
    pub fn epsilon1(&self, phi_c: f64) -> f64 {
        let last = self.phi.last().copied().unwrap_or(f64::NAN);
        (last - phi_c).abs() / self.phi[0].abs()
    }
}

/// Integrates `kappa (phi'' + 3 H phi') + dV/dphi = 0` with the exact axion
/// derivative, sampling `samples + 1` evenly spaced times on `[0, t_end]`.
pub fn integrate_eom(
    p: &EomParams,
    phi0: f64,
    phidot0: f64,
    t_end: f64,
    samples: usize,
    opts: ode::OdeOptions,
) -> Result<FieldTrajectory> {
    p.validate()?;
    require_positive("t_end", t_end)?;
    require_finite("phi0", phi0)?;
    require_finite("phidot0", phidot0)?;
    if samples == 0 {
        return Err(Error::Input(
            "at least one sample interval is required".into(),
        ));
    }
    let kappa = p.kappa();
    let ap = AxionParams {
        m: p.m,
        phi_c: p.phi_c,
        ..AxionParams::default()
    };
    let grid: Vec<f64> = (0..=samples)
        .map(|i| t_end * i as f64 / samples as f64)
        .collect();
    let rhs = |_t: f64, y: &[f64; 2]| {
        let dv = axion_contribution_with_strength(y[0], p.f_axion, &ap).dv;
        [y[1], -3.0 * p.h * y[1] - dv / kappa]
    };
    let states = ode::solve(rhs, 0.0, [phi0, phidot0], &grid, opts)?;
    Ok(FieldTrajectory {
        phi: states.iter().map(|s| s[0]).collect(),
        phi_dot: states.iter().map(|s| s[1]).collect(),
        times: grid,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reconstruction {
    pub v: Vec<f64>,
    pub phi: Vec<f64>,
    /// Samples where `dH/dt > 0`; they contribute nothing to `phi`.
    pub mask: Vec<bool>,
}

/// `V = (3H^2/8 pi G)(1 + H'/3H^2)` and `phi = int sqrt(-H'/4 pi G) dt` from
/// `H` sampled every `dt`.
pub fn padmanabhan_reconstruct(h: &[f64], dt: f64, k: &Constants) -> Result<Reconstruction> {
    reconstruct_with_floor(h, dt, 0.0, k)
}

/// As [`padmanabhan_reconstruct`] from scale-factor samples, with `H` and
/// `H'` taken by differencing `ln a`.
///
/// Differencing turns the rounding of `ln a` into noise in `H'` of order
/// `eps max|ln a| / dt^2`; values of `H'` below a generous multiple of that
/// are treated as zero.
pub fn reconstruct_from_scale(a: &[f64], dt: f64, k: &Constants) -> Result<Reconstruction> {
    require_positive("dt", dt)?;
    if a.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::Input("scale factors must be positive".into()));
    }
    let ln_a: Vec<f64> = a.iter().map(|x| x.ln()).collect();
    let h = derivative(&ln_a, dt)?;
    let scale = ln_a.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let floor = 1e3 * f64::EPSILON * scale / (dt * dt);
    reconstruct_with_floor(&h, dt, floor, k)
}

fn reconstruct_with_floor(h: &[f64], dt: f64, floor: f64, k: &Constants) -> Result<Reconstruction> {
    require_positive("dt", dt)?;
    if h.iter().any(|&x| !(x > 0.0) || !x.is_finite()) {
        return Err(Error::Input("H samples must be positive and finite".into()));
    }
    let h_dot = derivative(h, dt)?;
    let h_dot: Vec<f64> = h_dot
        .iter()
        .map(|&d| if d.abs() <= floor { 0.0 } else { d })
        .collect();
    let v = h
        .iter()
        .zip(&h_dot)
        .map(|(&hh, &hd)| 3.0 * hh * hh / (8.0 * PI * k.g) * (1.0 + hd / (3.0 * hh * hh)))
        .collect();
    let mask: Vec<bool> = h_dot.iter().map(|&d| d > 0.0).collect();
    let rate: Vec<f64> = h_dot
        .iter()
        .map(|&d| {
            if d < 0.0 {
                (-d / (4.0 * PI * k.g)).sqrt()
            } else {
                0.0
            }
        })
        .collect();
    let mut phi = Vec::with_capacity(h.len());
    phi.push(0.0);
    for w in rate.windows(2) {
        let last = *phi.last().unwrap();
        phi.push(last + 0.5 * dt * (w[0] + w[1]));
    }
    Ok(Reconstruction { v, phi, mask })
}

/// Second-order differences: central inside, one-sided at the ends.
fn derivative(y: &[f64], dt: f64) -> Result<Vec<f64>> {
    let n = y.len();
    if n < 3 {
        return Err(Error::Input(format!("need at least 3 samples, got {n}")));
    }
    let mut d = vec![0.0; n];
    // written in differences so constant data gives exactly zero
    d[0] = (4.0 * (y[1] - y[0]) - (y[2] - y[0])) / (2.0 * dt);
    d[n - 1] = (4.0 * (y[n - 1] - y[n - 2]) - (y[n - 1] - y[n - 3])) / (2.0 * dt);
    for i in 1..n - 1 {
        d[i] = (y[i + 1] - y[i - 1]) / (2.0 * dt);
    }
    Ok(d)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub t: f64,
    pub f_axion: f64,
    pub roots: RootPair,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BifurcationReport {
    pub rows: Vec<ScanRow>,
    /// Every bracketed discriminant sign change, refined by bisection.
    pub crossings: Vec<f64>,
    /// Regimes just below and above the first crossing.
    pub transition: Option<(Regime, Regime)>,
    /// `max Re p` at the hottest grid point.
    pub late_decay_rate: Option<f64>,
}

impl BifurcationReport {
    pub fn t_crit(&self) -> Option<f64> {
        self.crossings.first().copied()
    }

    pub fn summary(&self) -> String {
        match (self.t_crit(), self.transition) {
            (Some(t), Some((a, b))) => format!("bifurcation at T = {t:e}: {a:?} -> {b:?}"),
            _ => "no bifurcation in range".to_string(),
        }
    }
}

/// Exact roots across `temps` with `f_axion = f(T)`, locating each sign change
/// of the discriminant to `1e-6` relative.
pub fn bifurcation_scan(
    temps: &[f64],
    template: &EomParams,
    axion: &AxionParams,
) -> Result<BifurcationReport> {
    if temps.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Input("temperature grid must be increasing".into()));
    }
    axion.validate()?;
    let at = |t: f64| -> Result<ScanRow> {
        let f_axion = axion_strength(t, axion)?;
        let p = EomParams {
            t,
            f_axion,
            ..*template
        };
        Ok(ScanRow {
            t,
            f_axion,
            roots: characteristic_roots(&p, RootMode::Exact)?,
        })
    };
    let rows = temps.iter().map(|&t| at(t)).collect::<Result<Vec<_>>>()?;
    let mut crossings = Vec::new();
    let mut transition = None;
    for w in rows.windows(2) {
        let (d0, d1) = (w[0].roots.discriminant, w[1].roots.discriminant);
        if d0 == 0.0 || d0.signum() == d1.signum() {
            continue;
        }
        let t = bisect(
            |t| at(t).map_or(f64::NAN, |r| r.roots.discriminant),
            w[0].t,
            w[1].t,
            1e-8,
        )?;
        if transition.is_none() {
            transition = Some((w[0].roots.regime, w[1].roots.regime));
        }
        crossings.push(t);
    }
    Ok(BifurcationReport {
        late_decay_rate: rows.last().map(|r| r.roots.max_re()),
        rows,
        crossings,
        transition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * a.norm().max(b.norm()).max(f64::MIN_POSITIVE)
    }

    #[test]
    fn stiffness_and_singular_coupling() {
        let p = EomParams::default();
        assert!((p.stiffness().unwrap() - 6.0 * 0.01 / 100.0).abs() < 1e-18);
        let p0 = EomParams { c_tilde: 0.0, ..p };
        assert!(matches!(
            characteristic_roots(&p0, RootMode::Exact),
            Err(Error::Singularity(_))
        ));
    }

    #[test]
    fn exact_root_examples() {
        let p = EomParams {
            m: 0.0,
            f_axion: 0.0,
            h: 2.0,
            ..EomParams::default()
        };
        let r = characteristic_roots(&p, RootMode::Exact).unwrap();
        assert_eq!(r.p1, Complex64::new(-6.0, 0.0));
        assert_eq!(r.p2.re, 0.0);
        let r = roots_from_stiffness(1.0, 2.25);
        assert_eq!(r.discriminant, 0.0);
        assert_eq!(r.regime, Regime::CriticallyDamped);
        assert_eq!(
            (r.p1, r.p2),
            (Complex64::new(-1.5, 0.0), Complex64::new(-1.5, 0.0))
        );
        let big = EomParams {
            f_axion: 100.0,
            ..EomParams::default()
        };
        let r = characteristic_roots(&big, RootMode::Exact).unwrap();
        assert_eq!(r.regime, Regime::Oscillatory);
        assert!(r.p1.im != 0.0);
        let small = EomParams::default();
        let r = characteristic_roots(&small, RootMode::Exact).unwrap();
        assert!(r.is_real() && r.p1.re < 0.0 && r.p2.re < 0.0);
    }

    #[test]
    fn printed_modes() {
        let p = EomParams {
            h: 2.0,
            ..EomParams::default()
        };
        let k = p.stiffness().unwrap();
        let two = characteristic_roots(&p, RootMode::CaseTwo).unwrap();
        assert!((two.p1.re - (-6.0 + k)).abs() < 1e-15);
        assert!((two.p2.re + k).abs() < 1e-18);
        let four = characteristic_roots(&p, RootMode::CaseFour).unwrap();
        let s = (1.0 - k / 6.0f64).sqrt();
        assert!((four.p1.re + 3.0 * (1.0 + s)).abs() < 1e-14);
        assert!((four.p2.re + 3.0 * (1.0 - s)).abs() < 1e-14);
        let hot = EomParams { f_axion: 1e4, ..p };
        assert_eq!(
            characteristic_roots(&hot, RootMode::CaseFour)
                .unwrap()
                .regime,
            Regime::Oscillatory
        );
    }

    #[test]
    fn printed_modes_converge_on_the_fast_root_only() {
        // deviation ratio over a decade of k measures the log-log slope
        for mode in [RootMode::CaseTwo, RootMode::CaseFour] {
            let dev = |m: f64| {
                let p = EomParams {
                    m,
                    h: 1.0,
                    ..EomParams::default()
                };
                let e = characteristic_roots(&p, RootMode::Exact).unwrap();
                let q = characteristic_roots(&p, mode).unwrap();
                (
                    (q.p1 - e.p1).norm() / e.p1.norm(),
                    (q.p2 / e.p2).re,
                    p.stiffness().unwrap(),
                )
            };
            let (d1, _, k1) = dev(1e-2);
            let (d2, slow, k2) = dev(1e-3);
            let slope = (d1 / d2).ln() / (k1 / k2).ln();
            assert!(slope >= 0.99, "{mode:?} slope {slope}");
            // the slow root keeps a fixed ratio: 3H and 3H/4 respectively
            let want = if mode == RootMode::CaseTwo { 3.0 } else { 0.75 };
            assert!((slow - want).abs() < 1e-3, "{mode:?} {slow}");
        }
    }

    #[test]
    fn regimes() {
        let k = Constants::codata();
        let th = RegimeThresholds::new(&k);
        let p = EomParams::default();
        assert_eq!(
            classify_regime(k.kelvin_to_natural(1.0), 1.0, &p, &th).unwrap(),
            Case::I
        );
        assert_eq!(
            classify_regime(k.kelvin_to_natural(1e13), 1.0, &p, &th).unwrap(),
            Case::II
        );
        let weak = EomParams { c_tilde: 1e-6, ..p };
        assert_eq!(
            classify_regime(k.kelvin_to_natural(1e13), 1.0, &weak, &th).unwrap(),
            Case::III
        );
        let axion = EomParams { f_axion: 1e-3, ..p };
        assert_eq!(
            classify_regime(k.kelvin_to_natural(1e8), 1.0, &axion, &th).unwrap(),
            Case::IV
        );
        assert_eq!(
            classify_regime(k.kelvin_to_natural(1e8), 1.0, &p, &th).unwrap(),
            Case::II
        );
    }

    #[test]
    fn equilibrium_is_stationary() {
        let p = EomParams::default();
        let tr = integrate_eom(&p, p.phi_c, 0.0, 10.0, 20, ode::OdeOptions::default()).unwrap();
        assert!(tr.phi.iter().all(|&x| x == p.phi_c));
    }

    #[test]
    fn lyapunov_is_non_increasing() {
        let p = EomParams {
            t: 0.05,
            ..EomParams::default()
        };
        let tr = integrate_eom(&p, 3.0, 1.0, 40.0, 400, ode::OdeOptions::default()).unwrap();
        let kappa = p.kappa();
        let e: Vec<f64> = tr
            .phi
            .iter()
            .zip(&tr.phi_dot)
            .map(|(x, v)| 0.5 * kappa * v * v + 0.5 * p.m * p.m * (x - p.phi_c).powi(2))
            .collect();
        assert!(e.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-9)));
    }

    #[test]
    fn constant_hubble_reconstructs_zero_field() {
        let k = Constants::natural();
        let (hh, dt) = (0.7, 0.01);
        let a: Vec<f64> = (0..2000).map(|i| (hh * dt * i as f64).exp()).collect();
        let r = reconstruct_from_scale(&a, dt, &k).unwrap();
        assert!(r.phi.iter().all(|x| x.abs() < 1e-10));
        let want = 3.0 * hh * hh / (8.0 * PI);
        assert!(r.v.iter().all(|v| ((v - want) / want).abs() < 1e-9));
        let flat = padmanabhan_reconstruct(&[hh; 50], dt, &k).unwrap();
        assert!(flat.phi.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn matter_like_history() {
        let k = Constants::natural();
        let dt = 1e-3;
        let h: Vec<f64> = (0..1000)
            .map(|i| 2.0 / (3.0 * (1.0 + dt * i as f64)))
            .collect();
        let r = padmanabhan_reconstruct(&h, dt, &k).unwrap();
        assert!(r.phi.windows(2).all(|w| w[1] > w[0]));
        assert!(r.mask.iter().all(|&m| !m));
        // trapezoid of sqrt(2/(3 t^2) / 4 pi) = ln(t) / sqrt(6 pi)
        let t_end = 1.0 + dt * 999.0;
        let want = t_end.ln() / (6.0 * PI).sqrt();
        assert!((r.phi[999] - want).abs() < 1e-5);
    }

    #[test]
    fn two_epoch_history_has_two_quiet_ends() {
        let k = Constants::natural();
        let dt = 0.01;
        let h: Vec<f64> = (0..4000)
            .map(|i| {
                let t = dt * i as f64;
                0.1 + 0.9 / (1.0 + (t - 20.0).exp())
            })
            .collect();
        let r = padmanabhan_reconstruct(&h, dt, &k).unwrap();
        let rate = |i: usize| (r.phi[i + 1] - r.phi[i]) / dt;
        let peak = (0..3999).map(rate).fold(0.0, f64::max);
        assert!(rate(0) < 1e-3 * peak);
        assert!(rate(3998) < 1e-3 * peak);
        let rising: Vec<f64> = h.iter().rev().copied().collect();
        let masked = padmanabhan_reconstruct(&rising, dt, &k).unwrap();
        assert!(masked.mask.iter().any(|&m| m));
        assert!(masked.phi.iter().all(|&x| x < 1e-3));
    }

    #[test]
    fn bifurcation_template() {
        let temps: Vec<f64> = (0..=60)
            .map(|i| 10f64.powf(-3.0 + 0.05 * f64::from(i)))
            .collect();
        let rep = bifurcation_scan(&temps, &EomParams::default(), &AxionParams::default()).unwrap();
        assert_eq!(rep.crossings.len(), 1);
        let t = rep.t_crit().unwrap();
        assert!((t - (0.06f64 / 225.0).sqrt()).abs() / t < 1e-6);
        assert_eq!(
            rep.transition,
            Some((Regime::Oscillatory, Regime::Overdamped))
        );
        assert!(rep.late_decay_rate.unwrap() < 0.0);
        let one =
            bifurcation_scan(&temps[..1], &EomParams::default(), &AxionParams::default()).unwrap();
        assert_eq!(one.summary(), "no bifurcation in range");
    }

    proptest::proptest! {
        #[test]
        fn vieta(h in 1e-3f64..1e3, k in 1e-6f64..1e6) {
            let r = roots_from_stiffness(h, k);
            let sum = r.p1 + r.p2;
            let prod = r.p1 * r.p2;
            proptest::prop_assert!((sum.re + 3.0 * h).abs() <= 1e-10 * 3.0 * h && sum.im.abs() <= 1e-10 * 3.0 * h);
            proptest::prop_assert!((prod.re - k).abs() <= 1e-10 * k && prod.im.abs() <= 1e-10 * k);
            proptest::prop_assert!(r.p1.re < 0.0 && r.p2.re < 0.0);
        }

        #[test]
        fn companion_matrix(h in 1e-2f64..1e2, ratio in 1e-3f64..1e3) {
            let k = ratio * h * h;
            let r = roots_from_stiffness(h, k);
            let m = nalgebra::Matrix2::new(0.0, 1.0, -k, -3.0 * h);
            let ev = m.complex_eigenvalues();
            let mut ev = [ev[0], ev[1]];
            ev.sort_by(|a, b| a.re.total_cmp(&b.re).then(b.im.total_cmp(&a.im)));
            let mut ours = [r.p1, r.p2];
            ours.sort_by(|a, b| a.re.total_cmp(&b.re).then(b.im.total_cmp(&a.im)));
            for (a, b) in ours.iter().zip(&ev) {
                proptest::prop_assert!(close(*a, *b, 1e-12) || (a - b).norm() <= 1e-12 * 3.0 * h, "{a} {b}");
            }
        }
    }
}
