//! Dormand-Prince 5(4) explicit Runge-Kutta with adaptive step control.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    /// Initial step; chosen automatically when `None`.
    pub h0: Option<f64>,
    /// Steps shorter than `h_min_rel * max(1, |t|)` count as a collapse.
    pub h_min_rel: f64,
    pub max_steps: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            atol: 1e-12,
            h0: None,
            h_min_rel: 1e-14,
            max_steps: 2_000_000,
        }
    }
}

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
// 5th-order weights equal A[6]; E = b5 - b4.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Integrates `y' = f(t, y)` from `(t0, y0)` and returns the state at each
/// time in `grid`, which must be non-decreasing and start at or after `t0`.
///
/// Steps are shortened to land exactly on grid points, so outputs are never
/// interpolated.
pub fn solve<const N: usize, F>(
    f: F,
    t0: f64,
    y0: [f64; N],
    grid: &[f64],
    opts: OdeOptions,
) -> Result<Vec<[f64; N]>>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    if grid.windows(2).any(|w| !(w[1] >= w[0])) {
        return Err(Error::Input("output grid must be non-decreasing".into()));
    }
    if let Some(&first) = grid.first() {
        if !(first >= t0) {
            return Err(Error::Input("output grid starts before t0".into()));
        }
    }
    let mut out = Vec::with_capacity(grid.len());
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let span = grid.last().map_or(0.0, |&g| g - t0);
    let mut h = opts
        .h0
        .unwrap_or_else(|| initial_step(&f, t, &y, &k1, span, &opts));
    let mut steps = 0usize;
    for &target in grid {
        while t < target {
            let remaining = target - t;
            let last = h >= remaining;
            let step = if last { remaining } else { h };
            if step < opts.h_min_rel * t.abs().max(1.0) && !last {
                return Err(Error::Integration {
                    at: t,
                    reason: format!("step size collapsed to {step:e}"),
                });
            }
            steps += 1;
            if steps > opts.max_steps {
                return Err(Error::Integration {
                    at: t,
                    reason: format!("exceeded {} steps", opts.max_steps),
                });
            }
            let (y_new, k7, err) = dp_step(&f, t, &y, &k1, step, &opts);
            if !err.is_finite() {
                h = step * 0.1;
                if h < opts.h_min_rel * t.abs().max(1.0) {
                    return Err(Error::Integration {
                        at: t,
                        reason: "non-finite derivative".into(),
                    });
                }
                continue;
            }
            if err <= 1.0 {
                t = if last { target } else { t + step };
                y = y_new;
                k1 = k7;
                let grow = if err == 0.0 {
                    5.0
                } else {
                    (0.9 * err.powf(-0.2)).min(5.0)
                };
                // A step shortened to hit the grid should not shrink the next one.
                h = if last {
                    h.max(step * grow)
                } else {
                    step * grow
                };
            } else {
                h = step * (0.9 * err.powf(-0.2)).max(0.2);
            }
        }
        out.push(y);
    }
    Ok(out)
}

fn dp_step<const N: usize, F>(
    f: &F,
    t: f64,
    y: &[f64; N],
    k1: &[f64; N],
    h: f64,
    opts: &OdeOptions,
) -> ([f64; N], [f64; N], f64)
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let mut k = [[0.0; N]; 7];
    k[0] = *k1;
    for s in 1..7 {
        let mut ys = *y;
        for (i, yi) in ys.iter_mut().enumerate() {
            let mut acc = 0.0;
            for j in 0..s {
                acc += A[s][j] * k[j][i];
            }
            *yi += h * acc;
        }
        k[s] = f(t + C[s] * h, &ys);
    }
    let mut y_new = *y;
    for (i, yi) in y_new.iter_mut().enumerate() {
        let mut acc = 0.0;
        for j in 0..6 {
            acc += A[6][j] * k[j][i];
        }
        *yi += h * acc;
    }
    let mut err_sq = 0.0;
    for i in 0..N {
        let mut e = 0.0;
        for j in 0..7 {
            e += E[j] * k[j][i];
        }
        let scale = opts.atol + opts.rtol * y[i].abs().max(y_new[i].abs());
        err_sq += (h * e / scale).powi(2);
    }
    let err = if N == 0 {
        0.0
    } else {
        (err_sq / N as f64).sqrt()
    };
    (y_new, k[6], err)
}

fn initial_step<const N: usize, F>(
    f: &F,
    t: f64,
    y: &[f64; N],
    k1: &[f64; N],
    span: f64,
    opts: &OdeOptions,
) -> f64
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let norm = |v: &[f64; N]| {
        let s: f64 = v
            .iter()
            .zip(y.iter())
            .map(|(vi, yi)| (vi / (opts.atol + opts.rtol * yi.abs())).powi(2))
            .sum();
        (s / N.max(1) as f64).sqrt()
    };
    let d0 = norm(y);
    let d1 = norm(k1);
    let mut h0 = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    if span > 0.0 {
        h0 = h0.min(span);
    }
    let mut y1 = *y;
    for i in 0..N {
        y1[i] += h0 * k1[i];
    }
    let k2 = f(t + h0, &y1);
    let mut diff = [0.0; N];
    for i in 0..N {
        diff[i] = k2[i] - k1[i];
    }
    let d2 = norm(&diff) / h0;
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    let h = (100.0 * h0).min(h1);
    if span > 0.0 {
        h.min(span)
    } else {
        h
    }
}
