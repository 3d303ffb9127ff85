use std::f64::consts::PI;

use crate::error::{require_finite, require_positive, Error, Result};
use crate::numerics::poly;

use super::DensityParams;

/// The degree-9 polynomial in `u = 1/a` and its positive real roots.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalePolynomial {
    /// Ascending order: `coeffs[k]` multiplies `u^k`.
    pub coeffs: [f64; 10],
    /// Distinct positive roots, ascending.
    pub roots: Vec<f64>,
}

impl ScalePolynomial {
    /// `|p(u)| / sum |c_k| |u|^k`.
    pub fn relative_residual(&self, u: f64) -> f64 {
        poly::eval(&self.coeffs, u).abs() / poly::abs_scale(&self.coeffs, u)
    }
}

/// Builds
///
/// `u^9 + A1 u^8/a0 + A2 u^7/a0^2 - A3 L u^5/a0^4 - A4 L u^4/a0^5 + A5 L^2 u/a0^8 + A6 L^2 t/a0^9`
///
/// with `L = lambda / 8 pi` and
/// `A1 = (9/4) rho_m/rho_rel`, `A2 = (rho_m/rho_rel)^2`, `A3 = (1/5)/rho_rel`,
/// `A4 = (rho_m/4)/rho_rel^2`, `A5 = 1/rho_rel^2`, `A6 = sqrt(lambda/3)/rho_rel^2`,
/// taken as given rather than re-derived, and isolates its positive roots.
pub fn scale_polynomial(p: &DensityParams, t: f64) -> Result<ScalePolynomial> {
    if p.rho_rel0 == 0.0 {
        return Err(Error::Singularity(
            "coefficients divide by rho_rel0 = 0".into(),
        ));
    }
    require_positive("rho_rel0", p.rho_rel0)?;
    require_positive("lambda", p.lambda)?;
    require_positive("a0", p.a0)?;
    require_finite("t", t)?;
    let (rr, rm, a0) = (p.rho_rel0, p.rho_m0, p.a0);
    let l = p.lambda / (8.0 * PI);
    let a1 = 2.25 * rm / rr;
    let a2 = (rm / rr).powi(2);
    let a3 = 0.2 / rr;
    let a4 = 0.25 * rm / (rr * rr);
    let a5 = 1.0 / (rr * rr);
    let a6 = (p.lambda / 3.0).sqrt() / (rr * rr);
    let mut c = [0.0; 10];
    c[9] = 1.0;
    c[8] = a1 / a0;
    c[7] = a2 / a0.powi(2);
    c[5] = -a3 * l / a0.powi(4);
    c[4] = -a4 * l / a0.powi(5);
    c[1] = a5 * l * l / a0.powi(8);
    c[0] = a6 * l * l * t / a0.powi(9);
    if c.iter().any(|x| !x.is_finite()) {
        return Err(Error::Evaluation(format!("coefficients overflowed: {c:?}")));
    }
    let roots = poly::positive_roots(&c);
    Ok(ScalePolynomial { coeffs: c, roots })
}
