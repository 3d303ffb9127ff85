//! Minisuperspace Wheeler-DeWitt equation, Hermite polynomials, oscillator
//! eigenfunctions and the product wavefunction of the scale factor and
//! graviton modes.
//!
//! The scale-factor equation `psi'' = (9 pi^2 / 4 G^2)(a^2 - (lambda/3) a^4) psi`
//! has Airy-type solutions near its turning point; they are obtained here by
//! direct integration only.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_finite, require_positive, Error, Result};
use crate::numerics::ode::{self, OdeOptions};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WdwConfig {
    pub lambda_eff: f64,
    pub g: f64,
    pub a_min: f64,
    pub a_max: f64,
    /// `psi(a_min)`.
    pub psi0: f64,
    /// `psi'(a_min)`.
    pub dpsi0: f64,
    /// Relative local error tolerance.
    pub tol: f64,
    /// Output intervals on `[a_min, a_max]`.
    pub samples: usize,
}

impl Default for WdwConfig {
    fn default() -> Self {
        Self {
            lambda_eff: 1.0,
            g: 1.0,
            a_min: 0.0,
            a_max: 3.0,
            psi0: 1.0,
            dpsi0: 0.0,
            tol: 1e-10,
            samples: 300,
        }
    }
}

impl WdwConfig {
    pub fn validate(&self) -> Result<()> {
        require_finite("lambda_eff", self.lambda_eff)?;
        require_positive("G", self.g)?;
        require_finite("a_min", self.a_min)?;
        require_finite("a_max", self.a_max)?;
        if !(self.a_max > self.a_min) {
            return Err(Error::domain(
                "a_max",
                self.a_max,
                "domain must be nondegenerate",
            ));
        }
        require_finite("psi0", self.psi0)?;
        require_finite("dpsi0", self.dpsi0)?;
        require_positive("tol", self.tol)?;
        if self.samples == 0 {
            return Err(Error::Input("samples must be at least 1".into()));
        }
        Ok(())
    }

    /// Sample points, evenly spaced.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.samples;
        (0..=n)
            .map(|i| self.a_min + (self.a_max - self.a_min) * i as f64 / n as f64)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WdwSolution {
    pub a: Vec<f64>,
    pub psi: Vec<f64>,
    pub dpsi: Vec<f64>,
}

/// `(9 pi^2 / 4 G^2)(a^2 - (lambda/3) a^4)`.
pub fn wdw_potential(a: f64, lambda_eff: f64, g: f64) -> f64 {
    9.0 * PI * PI / (4.0 * g * g) * (a * a - lambda_eff / 3.0 * a.powi(4))
}

/// Integrates the two fundamental solutions together and combines them with
/// the boundary data, so the result is linear in `(psi0, dpsi0)` up to the
/// final combination's rounding.
pub fn wdw_solve(cfg: &WdwConfig) -> Result<WdwSolution> {
    cfg.validate()?;
    let opts = OdeOptions {
        rtol: cfg.tol,
        atol: cfg.tol * 1e-2,
        ..OdeOptions::default()
    };
    let (lambda, g) = (cfg.lambda_eff, cfg.g);
    let rhs = |a: f64, y: &[f64; 4]| {
        let v = wdw_potential(a, lambda, g);
        [y[1], v * y[0], y[3], v * y[2]]
    };
    let grid = cfg.grid();
    let states = ode::solve(rhs, cfg.a_min, [1.0, 0.0, 0.0, 1.0], &grid, opts)?;
    let mut psi = Vec::with_capacity(grid.len());
    let mut dpsi = Vec::with_capacity(grid.len());
    for (s, &a) in states.iter().zip(&grid) {
        let p = cfg.psi0 * s[0] + cfg.dpsi0 * s[2];
        let d = cfg.psi0 * s[1] + cfg.dpsi0 * s[3];
        if !p.is_finite() || !d.is_finite() {
            return Err(Error::Integration {
                at: a,
                reason: "solution overflowed in the growing region".into(),
            });
        }
        psi.push(p);
        dpsi.push(d);
    }
    Ok(WdwSolution { a: grid, psi, dpsi })
}

/// Converts a signed degree, rejecting negatives.
pub fn degree(p: i64) -> Result<u32> {
    u32::try_from(p).map_err(|_| {
        Error::domain(
            "p",
            p as f64,
            "Hermite degree must be a non-negative integer",
        )
    })
}

/// Physicists' Hermite polynomial by `H_{k+1} = 2x H_k - 2k H_{k-1}`.
pub fn hermite(p: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if p == 0 {
        return prev;
    }
    for k in 1..p {
        let next = 2.0 * x * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact integer `H_p(x)`; `None` on overflow.
pub fn hermite_int(p: u32, x: i64) -> Option<i128> {
    let x = i128::from(x);
    let (mut prev, mut cur) = (1i128, 2 * x);
    if p == 0 {
        return Some(prev);
    }
    for k in 1..p {
        let next = (2 * x)
            .checked_mul(cur)?
            .checked_sub((2 * i128::from(k)).checked_mul(prev)?)?;
        prev = cur;
        cur = next;
    }
    Some(cur)
}

/// Normalized oscillator eigenfunction `(2^k k! sqrt(pi))^{-1/2} H_k(x) e^{-x^2/2}`
/// by the normalized recurrence, which neither overflows nor loses the
/// Gaussian factor for large `k`.
pub fn sho_eigenfunction(k: u32, x: f64) -> f64 {
    let mut prev = PI.powf(-0.25) * (-0.5 * x * x).exp();
    if k == 0 {
        return prev;
    }
    let mut cur = 2f64.sqrt() * x * prev;
    for j in 1..k {
        let j = f64::from(j);
        let next = (2.0 / (j + 1.0)).sqrt() * x * cur - (j / (j + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaleSector {
    /// Hermite degree.
    pub p: u32,
    /// Scale-sector eigenvalue; `-(2p + 1)` is consistent.
    pub lambda: f64,
}

impl ScaleSector {
    pub fn consistent(p: u32) -> Self {
        Self {
            p,
            lambda: -(2.0 * f64::from(p) + 1.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeSpec {
    /// Mode index, at least 1.
    pub n: u32,
    /// Excitation level; the eigenfunction used has level `2 p_n`.
    pub p_n: u32,
    /// Mode eigenvalue; `n (4 p_n + 1)` is consistent.
    pub lambda_n: f64,
}

impl ModeSpec {
    pub fn new(n: u32, p_n: u32, lambda_n: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n", 0.0, "mode index starts at 1"));
        }
        require_finite("lambda_n", lambda_n)?;
        Ok(Self { n, p_n, lambda_n })
    }

    pub fn consistent(n: u32, p_n: u32) -> Result<Self> {
        Self::new(n, p_n, f64::from(n) * (4.0 * f64::from(p_n) + 1.0))
    }

    /// The mode factor at amplitude `d`.
    pub fn factor(&self, d: f64, arg: ModeArgument) -> f64 {
        let n = f64::from(self.n);
        let x = match arg {
            ModeArgument::Scaled => n.sqrt() * d,
            ModeArgument::Literal => n * d * d,
        };
        sho_eigenfunction(2 * self.p_n, x)
    }
}

/// How the mode amplitude enters its eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeArgument {
    /// `sqrt(n) d`, which makes each factor an eigenfunction of its mode operator.
    #[default]
    Scaled,
    /// `n d^2` as literally written.
    Literal,
}

/// `H_p(a) e^{-a^2/2} prod_n psi_{2 p_n}(x_n)`.
pub fn assemble_wavefunction(
    scale: &ScaleSector,
    modes: &[ModeSpec],
    a_bar: f64,
    d_values: &[f64],
    arg: ModeArgument,
) -> Result<f64> {
    if modes.len() != d_values.len() {
        return Err(Error::Input(format!(
            "{} modes but {} amplitudes",
            modes.len(),
            d_values.len()
        )));
    }
    require_finite("a_bar", a_bar)?;
    let mut psi = hermite(scale.p, a_bar) * (-0.5 * a_bar * a_bar).exp();
    for (m, &d) in modes.iter().zip(d_values) {
        require_finite("d_n", d)?;
        psi *= m.factor(d, arg);
    }
    Ok(psi)
}

/// A function sampled on an evenly spaced grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Sampled {
    pub start: f64,
    pub step: f64,
    pub values: Vec<f64>,
}

impl Sampled {
    pub fn from_fn(start: f64, end: f64, points: usize, f: impl Fn(f64) -> f64) -> Self {
        let step = (end - start) / (points - 1) as f64;
        Self {
            start,
            step,
            values: (0..points).map(|i| f(start + step * i as f64)).collect(),
        }
    }

    fn x(&self, i: usize) -> f64 {
        self.start + self.step * i as f64
    }

    fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionResidual {
    /// `max |A'' - (a^2 + lambda) A| / max |A|`.
    pub scale: f64,
    /// `max |D'' - (n^2 d^2 - lambda_n) D| / max |D|` per mode.
    pub modes: Vec<f64>,
    /// `(scale + sum modes) max|A| prod max|D_n|`, which bounds the operator
    /// applied to the product over the whole tensor grid.
    pub bound: f64,
}

/// Minimum samples per local oscillation period.
pub const POINTS_PER_OSCILLATION: f64 = 16.0;

fn sector_residual(s: &Sampled, what: &str, coeff: impl Fn(f64) -> f64) -> Result<f64> {
    let n = s.values.len();
    if n < 3 || !(s.step > 0.0) {
        return Err(Error::Input(format!(
            "{what}: need at least 3 increasing samples"
        )));
    }
    let h = s.step;
    let mut worst = 0.0f64;
    for i in 0..n {
        let c = coeff(s.x(i));
        if c < 0.0 && h * (-c).sqrt() > 2.0 * PI / POINTS_PER_OSCILLATION {
            return Err(Error::Resolution(format!(
                "{what}: step {h:e} gives fewer than {POINTS_PER_OSCILLATION} points per oscillation at {:e}",
                s.x(i)
            )));
        }
    }
    for i in 1..n - 1 {
        let v = &s.values;
        let d2 = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
        worst = worst.max((d2 - coeff(s.x(i)) * v[i]).abs());
    }
    let scale = s.max_abs();
    Ok(if scale > 0.0 { worst / scale } else { worst })
}

/// Second-difference residual of the separated operator
/// `[d^2/da^2 - a^2 - lambda] - sum_n [d^2/dd_n^2 - n^2 d_n^2 + lambda_n]`
/// on a product candidate given by its sampled factors.
pub fn sho_decomposition_residual(
    scale_factor: &Sampled,
    scale: &ScaleSector,
    modes: &[(ModeSpec, Sampled)],
) -> Result<DecompositionResidual> {
    let r_scale = sector_residual(scale_factor, "scale sector", |a| a * a + scale.lambda)?;
    let mut bound_scale = scale_factor.max_abs();
    let mut r_modes = Vec::with_capacity(modes.len());
    for (m, s) in modes {
        let n = f64::from(m.n);
        r_modes.push(sector_residual(s, "mode", |d| n * n * d * d - m.lambda_n)?);
        bound_scale *= s.max_abs();
    }
    let total: f64 = r_scale + r_modes.iter().sum::<f64>();
    Ok(DecompositionResidual {
        scale: r_scale,
        modes: r_modes,
        bound: total * bound_scale,
    })
}
