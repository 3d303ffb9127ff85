//! Physical constants, the Planck unit system, and elementary kinematics.
//!
//! A [`Constants`] value describes one unit system. [`Constants::codata`]
//! carries CODATA 2018 SI values; [`Constants::natural`] is the Planck system
//! in which `G = hbar = c = k_B = 1` and every Planck scale equals one.
//! Formulas written with explicit constants give consistent results in
//! either system, and the conversion methods move quantities between them.

use serde::{Deserialize, Serialize};

use crate::error::{require_finite, require_non_negative, require_positive, Error, Result};

/// CODATA 2018 Newtonian constant of gravitation (m^3 kg^-1 s^-2).
pub const G_SI: f64 = 6.674_30e-11;
/// CODATA 2018 reduced Planck constant (J s).
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// Speed of light (m/s), exact.
pub const C_SI: f64 = 299_792_458.0;
/// Boltzmann constant (J/K), exact.
pub const K_B_SI: f64 = 1.380_649e-23;
/// Elementary charge, i.e. joules per electronvolt, exact.
pub const EV_SI: f64 = 1.602_176_634e-19;
/// Julian year in seconds.
pub const YEAR_SECONDS: f64 = 365.25 * 86_400.0;

/// Temperature above which quantum-gravity effects are taken to dominate.
pub const T_QUANTUM_GRAVITY_KELVIN: f64 = 1e32;
/// Temperature that appears in the Park upper bound on the vacuum parameter.
pub const T_PARK_KELVIN: f64 = 1e23;

/// Which unit system a [`Constants`] value describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    Si,
    Natural,
}

/// Fundamental constants plus the Planck scales derived from them.
#[derive(Debug, Clone, PartialEq)]
pub struct Constants {
    pub system: UnitSystem,
    pub g: f64,
    pub hbar: f64,
    pub c: f64,
    pub k_b: f64,
    /// One electronvolt expressed in this system's energy unit.
    pub ev: f64,
    pub l_p: f64,
    pub t_p: f64,
    pub m_p: f64,
    /// Planck temperature `m_p c^2 / k_B`.
    pub t_planck: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Self::codata()
    }
}

impl Constants {
    /// SI constants from caller-supplied fundamental values.
    pub fn si(g: f64, hbar: f64, c: f64, k_b: f64, ev: f64) -> Result<Self> {
        require_positive("g", g)?;
        require_positive("hbar", hbar)?;
        require_positive("c", c)?;
        require_positive("k_b", k_b)?;
        require_positive("ev", ev)?;
        let l_p = (hbar * g / c.powi(3)).sqrt();
        let m_p = (hbar * c / g).sqrt();
        Ok(Self {
            system: UnitSystem::Si,
            g,
            hbar,
            c,
            k_b,
            ev,
            l_p,
            t_p: l_p / c,
            m_p,
            t_planck: m_p * c * c / k_b,
        })
    }

    pub fn codata() -> Self {
        Self::si(G_SI, HBAR_SI, C_SI, K_B_SI, EV_SI).expect("CODATA values are positive")
    }

    /// Planck units built on the CODATA electronvolt.
    pub fn natural() -> Self {
        Self::codata().natural_system()
    }

    /// The Planck system whose electronvolt matches this one.
    pub fn natural_system(&self) -> Self {
        Self {
            system: UnitSystem::Natural,
            g: 1.0,
            hbar: 1.0,
            c: 1.0,
            k_b: 1.0,
            ev: self.ev / self.planck_energy(),
            l_p: 1.0,
            t_p: 1.0,
            m_p: 1.0,
            t_planck: 1.0,
        }
    }

    pub fn planck_energy(&self) -> f64 {
        self.m_p * self.c * self.c
    }

    /// Planck power `c^5 / G`.
    pub fn planck_power(&self) -> f64 {
        self.planck_energy() / self.t_p
    }

    /// Planck mass density `m_p / l_p^3`.
    pub fn planck_density(&self) -> f64 {
        self.m_p / self.l_p.powi(3)
    }

    pub fn kelvin_to_natural(&self, t: f64) -> f64 {
        t / self.t_planck
    }

    pub fn natural_to_kelvin(&self, t: f64) -> f64 {
        t * self.t_planck
    }

    pub fn seconds_to_natural(&self, t: f64) -> f64 {
        t / self.t_p
    }

    pub fn natural_to_seconds(&self, t: f64) -> f64 {
        t * self.t_p
    }

    pub fn meters_to_natural(&self, x: f64) -> f64 {
        x / self.l_p
    }

    pub fn natural_to_meters(&self, x: f64) -> f64 {
        x * self.l_p
    }

    pub fn kg_to_natural(&self, m: f64) -> f64 {
        m / self.m_p
    }

    pub fn natural_to_kg(&self, m: f64) -> f64 {
        m * self.m_p
    }

    pub fn joules_to_natural(&self, e: f64) -> f64 {
        e / self.planck_energy()
    }

    pub fn natural_to_joules(&self, e: f64) -> f64 {
        e * self.planck_energy()
    }

    pub fn ev_to_natural(&self, e_ev: f64) -> f64 {
        self.joules_to_natural(e_ev * self.ev)
    }

    /// Rates and angular frequencies (s^-1).
    pub fn per_second_to_natural(&self, rate: f64) -> f64 {
        rate * self.t_p
    }

    pub fn natural_to_per_second(&self, rate: f64) -> f64 {
        rate / self.t_p
    }

    /// Mass densities (kg/m^3).
    pub fn density_to_natural(&self, rho: f64) -> f64 {
        rho / self.planck_density()
    }

    pub fn natural_to_watts(&self, p: f64) -> f64 {
        p * self.planck_power()
    }

    pub fn ev_to_kelvin(&self, e_ev: f64) -> f64 {
        e_ev * self.ev / self.k_b
    }

    pub fn kelvin_to_ev(&self, t: f64) -> f64 {
        t * self.k_b / self.ev
    }
}

/// Redshift of a source receding at `v` (as a fraction of c).
///
/// Evaluated as `2v / ((1 - v)(s + 1))` with `s = sqrt((1+v)/(1-v))`, which
/// equals `s - 1` without the cancellation near `v = 0`.
pub fn redshift(v: f64) -> Result<f64> {
    Recession::from_beta(v).map(|r| r.redshift())
}

/// A recession speed stored together with its complement `1 - v`.
///
/// Near `v = 1` the complement carries the information that a plain `f64`
/// speed would lose, so very large redshifts survive a round trip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Recession {
    beta: f64,
    complement: f64,
}

impl Recession {
    pub fn from_beta(v: f64) -> Result<Self> {
        if !(v.abs() < 1.0) {
            return Err(Error::domain(
                "v",
                v,
                "speed must satisfy |v| < 1 (superluminal input)",
            ));
        }
        Ok(Self {
            beta: v,
            complement: 1.0 - v,
        })
    }

    /// The recession speed producing redshift `z >= 0`.
    pub fn for_redshift(z: f64) -> Result<Self> {
        require_non_negative("z", z)?;
        require_finite("z", z)?;
        // (1+z)^2 = (1+v)/(1-v)  =>  v = z(z+2) / (z^2 + 2z + 2)
        let denom = z * (z + 2.0) + 2.0;
        Ok(Self {
            beta: z * (z + 2.0) / denom,
            complement: 2.0 / denom,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn complement(&self) -> f64 {
        self.complement
    }

    pub fn redshift(&self) -> f64 {
        let ratio = (1.0 + self.beta) / self.complement;
        2.0 * self.beta / self.complement / (ratio.sqrt() + 1.0)
    }
}

/// Proper distance at scale factor `a` of an object now at `d_now`.
pub fn comoving_distance(a: f64, d_now: f64) -> Result<f64> {
    require_positive("a", a)?;
    require_non_negative("d_now", d_now)?;
    Ok(a * d_now)
}

/// Above this natural log a [`LogScalar`] no longer converts to a finite `f64`
/// without risk of overflow.
pub const LOG_SATURATION: f64 = 700.0;

/// A signed real number stored as `sign * exp(ln_abs)`.
///
/// Amplitudes and growth ratios in this crate routinely exceed the range of
/// `f64`; they are carried in this form and converted at the edges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScalar {
    sign: i8,
    ln_abs: f64,
}

impl LogScalar {
    pub const ZERO: LogScalar = LogScalar {
        sign: 0,
        ln_abs: f64::NEG_INFINITY,
    };

    /// `exp(ln)`, always positive.
    pub fn exp(ln: f64) -> Self {
        Self {
            sign: 1,
            ln_abs: ln,
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self {
                sign: if x > 0.0 { 1 } else { -1 },
                ln_abs: x.abs().ln(),
            }
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn ln_abs(&self) -> f64 {
        self.ln_abs
    }

    /// The plain value; overflows to an infinity and underflows to zero.
    pub fn value(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.ln_abs.exp(),
        }
    }

    /// The value when it is safely representable.
    pub fn to_f64(&self) -> Option<f64> {
        (!self.is_saturated()).then(|| self.value())
    }

    pub fn is_saturated(&self) -> bool {
        self.sign != 0 && self.ln_abs > LOG_SATURATION
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: LogScalar) -> LogScalar {
        if self.sign == 0 || other.sign == 0 {
            return Self::ZERO;
        }
        Self {
            sign: self.sign * other.sign,
            ln_abs: self.ln_abs + other.ln_abs,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: LogScalar) -> LogScalar {
        if self.sign == 0 {
            return other;
        }
        if other.sign == 0 {
            return self;
        }
        let (big, small) = if self.ln_abs >= other.ln_abs {
            (self, other)
        } else {
            (other, self)
        };
        let rel = (small.ln_abs - big.ln_abs).exp();
        if big.sign == small.sign {
            Self {
                sign: big.sign,
                ln_abs: big.ln_abs + rel.ln_1p(),
            }
        } else if rel == 1.0 {
            Self::ZERO
        } else {
            Self {
                sign: big.sign,
                ln_abs: big.ln_abs + (-rel).ln_1p(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn planck_identities_hold() {
        let k = Constants::codata();
        assert!(rel(k.l_p, (k.hbar * k.g / k.c.powi(3)).sqrt()) < 1e-12);
        assert!(rel(k.t_p, k.l_p / k.c) < 1e-12);
        assert!(rel(k.m_p, (k.hbar * k.c / k.g).sqrt()) < 1e-12);
        // CODATA 2018 published Planck scales
        assert!(rel(k.l_p, 1.616_255e-35) < 1e-6);
        assert!(rel(k.t_p, 5.391_247e-44) < 1e-6);
        assert!(rel(k.m_p, 2.176_434e-8) < 1e-6);
        assert!(rel(k.t_planck, 1.416_784e32) < 1e-6);
    }

    #[test]
    fn natural_system_is_unit() {
        let n = Constants::natural();
        assert_eq!((n.g, n.hbar, n.c, n.k_b), (1.0, 1.0, 1.0, 1.0));
        assert_eq!((n.l_p, n.t_p, n.m_p, n.t_planck), (1.0, 1.0, 1.0, 1.0));
        // Planck energy is 1.2209e28 eV
        assert!(rel(1.0 / n.ev, 1.220_89e28) < 1e-5);
    }

    #[test]
    fn conversions_round_trip() {
        let k = Constants::codata();
        for &x in &[1e-40, 3.7, 1e32, 6.02e23] {
            assert!(rel(k.natural_to_kelvin(k.kelvin_to_natural(x)), x) < 1e-12);
            assert!(rel(k.natural_to_seconds(k.seconds_to_natural(x)), x) < 1e-12);
            assert!(rel(k.natural_to_meters(k.meters_to_natural(x)), x) < 1e-12);
            assert!(rel(k.natural_to_kg(k.kg_to_natural(x)), x) < 1e-12);
            assert!(rel(k.natural_to_joules(k.joules_to_natural(x)), x) < 1e-12);
            assert!(rel(k.natural_to_per_second(k.per_second_to_natural(x)), x) < 1e-12);
            assert!(rel(k.kelvin_to_ev(k.ev_to_kelvin(x)), x) < 1e-12);
        }
    }

    #[test]
    fn ev_and_kelvin_agree_across_systems() {
        let si = Constants::codata();
        let n = si.natural_system();
        let e_ev = 1.22e28;
        let t_si = si.ev_to_kelvin(e_ev);
        let t_nat = n.ev_to_kelvin(e_ev);
        assert!(rel(si.kelvin_to_natural(t_si), t_nat) < 1e-12);
    }

    #[test]
    fn redshift_examples() {
        assert_eq!(redshift(0.0).unwrap(), 0.0);
        assert!((redshift(0.6).unwrap() - 1.0).abs() < 1e-15);
        let near = redshift(1.0 - 1e-15).unwrap();
        assert!(near.is_finite() && near > 1e7);
        assert!(matches!(redshift(1.0), Err(Error::Domain { .. })));
        assert!(matches!(redshift(-1.5), Err(Error::Domain { .. })));
        assert!(redshift(f64::NAN).is_err());
    }

    #[test]
    fn redshift_is_monotone() {
        let mut prev = redshift(-0.999).unwrap();
        for i in 1..2000 {
            let v = -0.999 + 1.998 * f64::from(i) / 2000.0;
            let z = redshift(v).unwrap();
            assert!(z > prev);
            prev = z;
        }
    }

    #[test]
    fn comoving_distance_examples() {
        assert_eq!(comoving_distance(1.0, 42.0).unwrap(), 42.0);
        assert_eq!(comoving_distance(0.5, 2.0).unwrap(), 1.0);
        assert_eq!(comoving_distance(2.0, 0.0).unwrap(), 0.0);
        assert!(comoving_distance(0.0, 1.0).is_err());
        assert!(comoving_distance(-1.0, 1.0).is_err());
    }

    #[test]
    fn log_scalar_arithmetic() {
        let a = LogScalar::from_f64(-2.0);
        let b = LogScalar::from_f64(5.0);
        assert!((a.add(b).value() - 3.0).abs() < 1e-15);
        assert!((a.mul(b).value() + 10.0).abs() < 1e-14);
        assert!(a.add(LogScalar::from_f64(2.0)).is_zero());
        let huge = LogScalar::exp(1000.0);
        assert!(huge.is_saturated());
        assert_eq!(huge.to_f64(), None);
        assert_eq!(huge.value(), f64::INFINITY);
        assert_eq!(LogScalar::exp(-1e6).value(), 0.0);
    }

    proptest::proptest! {
        #[test]
        fn redshift_round_trips(z in 0.0f64..1e6) {
            let back = Recession::for_redshift(z).unwrap().redshift();
            let scale = z.max(f64::MIN_POSITIVE);
            proptest::prop_assert!(z == 0.0 && back == 0.0 || ((back - z) / scale).abs() < 1e-12);
        }

        #[test]
        fn log_scalar_add_matches_plain(x in -1e6f64..1e6, y in -1e6f64..1e6) {
            let sum = LogScalar::from_f64(x).add(LogScalar::from_f64(y)).value();
            proptest::prop_assert!((sum - (x + y)).abs() <= 1e-9 * (x.abs() + y.abs()).max(1.0));
        }
    }
}
