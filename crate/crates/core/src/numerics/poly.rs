//! Real polynomials in ascending coefficient order: evaluation, Sturm
//! counts and positive-root isolation.

/// `sum c[k] x^k` by Horner's rule.
pub fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Value and first derivative together.
pub fn eval_with_derivative(coeffs: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

pub fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| k as f64 * c)
        .collect()
}

/// `sum |c[k]| |x|^k`, the natural scale for a residual at `x`.
pub fn abs_scale(coeffs: &[f64], x: f64) -> f64 {
    eval(&coeffs.iter().map(|c| c.abs()).collect::<Vec<_>>(), x.abs())
}

fn trim(mut p: Vec<f64>, tol: f64) -> Vec<f64> {
    while p.len() > 1 && p.last().is_some_and(|c| c.abs() <= tol) {
        p.pop();
    }
    p
}

fn normalize(p: &mut [f64]) {
    let m = p.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if m > 0.0 {
        p.iter_mut().for_each(|c| *c /= m);
    }
}

/// Remainder of `a / b` (ascending order, `b` with nonzero leading term).
fn remainder(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let q = r[dr] / lead;
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] -= q * bc;
        }
        r.pop();
    }
    r
}

/// A Sturm sequence for a polynomial without a vanishing leading term.
#[derive(Debug, Clone)]
pub struct Sturm {
    chain: Vec<Vec<f64>>,
}

impl Sturm {
    pub fn new(coeffs: &[f64]) -> Self {
        let mut p0 = trim(coeffs.to_vec(), 0.0);
        normalize(&mut p0);
        let mut chain = vec![p0.clone()];
        if p0.len() < 2 {
            return Self { chain };
        }
        let mut p1 = derivative(&p0);
        normalize(&mut p1);
        chain.push(p1);
        loop {
            let n = chain.len();
            let b = &chain[n - 1];
            if b.len() < 2 {
                break;
            }
            let mut r: Vec<f64> = remainder(&chain[n - 2], b).iter().map(|c| -c).collect();
            // Remainders below roundoff of the dividend mean b divides it.
            let scale = chain[n - 2].iter().fold(0.0f64, |m, c| m.max(c.abs()));
            r = trim(r, 64.0 * f64::EPSILON * scale);
            if r.iter().all(|&c| c.abs() <= 64.0 * f64::EPSILON * scale) {
                break;
            }
            normalize(&mut r);
            chain.push(r);
        }
        Self { chain }
    }

    pub fn sign_changes(&self, x: f64) -> usize {
        let mut count = 0;
        let mut prev = 0.0f64;
        for p in &self.chain {
            let v = eval(p, x);
            if v != 0.0 {
                if prev != 0.0 && v.signum() != prev.signum() {
                    count += 1;
                }
                prev = v;
            }
        }
        count
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count(&self, a: f64, b: f64) -> usize {
        self.sign_changes(a).saturating_sub(self.sign_changes(b))
    }
}

/// Number of distinct real roots in `(a, b]`.
pub fn count_real_roots(coeffs: &[f64], a: f64, b: f64) -> usize {
    Sturm::new(coeffs).count(a, b)
}

/// Cauchy bound: every root satisfies `|x| < 1 + max |c_k / c_n|`.
pub fn cauchy_bound(coeffs: &[f64]) -> f64 {
    let p = trim(coeffs.to_vec(), 0.0);
    let lead = p[p.len() - 1];
    1.0 + p[..p.len() - 1]
        .iter()
        .fold(0.0f64, |m, c| m.max((c / lead).abs()))
}

/// All distinct positive real roots, ascending, polished to near machine
/// precision.
///
/// The interval is split at the critical points (roots of the derivative,
/// found recursively), so each piece is monotone and holds at most one root.
/// A critical point where `p` vanishes to rounding is reported as an
/// even-multiplicity root. Floating-point Sturm sequences were tried here
/// and miscount when the coefficients span many decades.
pub fn positive_roots(coeffs: &[f64]) -> Vec<f64> {
    let mut p = trim(coeffs.to_vec(), 0.0);
    if p.len() < 2 {
        return Vec::new();
    }
    // Roots at zero are not positive; divide them out.
    let zeros = p.iter().take_while(|&&c| c == 0.0).count();
    p.drain(..zeros);
    if p.len() < 2 {
        return Vec::new();
    }
    let hi = cauchy_bound(&p);
    // Reciprocal Cauchy bound keeps the bracket away from zero.
    let rev: Vec<f64> = p.iter().rev().copied().collect();
    let lo = 0.5 / cauchy_bound(&rev);
    let mut roots = roots_in(&p, lo, hi);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 4.0 * f64::EPSILON * b.abs());
    roots
}

/// Distinct real roots of `p` in `[lo, hi]`, ascending.
fn roots_in(p: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    let p = trim(p.to_vec(), 0.0);
    if p.len() < 2 {
        return Vec::new();
    }
    let mut knots = vec![lo];
    let critical = if p.len() > 2 {
        roots_in(&derivative(&p), lo, hi)
    } else {
        Vec::new()
    };
    knots.extend(critical.iter().copied().filter(|&c| c > lo && c < hi));
    knots.push(hi);
    let vanishes = |x: f64| eval(&p, x).abs() <= 16.0 * f64::EPSILON * abs_scale(&p, x);
    let mut out = Vec::new();
    for w in knots.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (eval(&p, a), eval(&p, b));
        if fa == 0.0 || (a > lo && vanishes(a)) {
            out.push(a);
        } else if fb != 0.0 && fa.signum() != fb.signum() {
            out.push(polish(&p, a, b));
        }
    }
    if eval(&p, hi) == 0.0 {
        out.push(hi);
    }
    out
}

/// Safeguarded Newton iteration inside a sign-changing bracket.
fn polish(p: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    // Geometric midpoints while the bracket spans decades, so a bracket
    // reaching out to the Cauchy bound collapses in a few steps.
    let mid = |lo: f64, hi: f64| {
        if lo > 0.0 && hi > 4.0 * lo {
            (lo * hi).sqrt()
        } else {
            0.5 * (lo + hi)
        }
    };
    let f_lo = eval(p, lo);
    let mut x = mid(lo, hi);
    let mut width = hi - lo;
    for _ in 0..400 {
        let (fx, dfx) = eval_with_derivative(p, x);
        if fx == 0.0 {
            return x;
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - fx / dfx;
        // Newton only while it is inside the bracket and the bracket keeps halving.
        let next = if newton > lo && newton < hi && hi - lo <= 0.5 * width {
            newton
        } else {
            mid(lo, hi)
        };
        width = hi - lo;
        if (next - x).abs() <= 2.0 * f64::EPSILON * x.abs() || width <= 2.0 * f64::EPSILON * hi {
            x = next;
            break;
        }
        x = next;
    }
    // Pick the best of the final candidates.
    [x, lo, hi]
        .into_iter()
        .min_by(|a, b| eval(p, *a).abs().total_cmp(&eval(p, *b).abs()))
        .unwrap_or(x)
}
