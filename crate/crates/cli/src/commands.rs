use cosmotoy::burst::burst_table;
use cosmotoy::info::{lloyd_bounds, ops_from_entropy, EntropyProfileParams};
use cosmotoy::potentials::{
    axion_strength, axion_sweep, rs_effective_potential, rs_gradient, rs_minimize,
};
use cosmotoy::quintessence::{
    bifurcation_scan, characteristic_roots, classify_regime, integrate_eom, EomParams, RootMode,
    RootPair,
};
use cosmotoy::scale::{causal_bound, lambda_star, scale_polynomial, DensityParams};
use cosmotoy::units::YEAR_SECONDS;
use cosmotoy::vacuum::hh_amplitude;
use cosmotoy::wdw::{wdw_solve, WdwConfig};
use cosmotoy::wormhole::{bridge_terms, eta, metric_f, theorem1_chain, BridgeConfig, MetricParams};
use cosmotoy::{numerics::ode::OdeOptions, Constants, LogScalar};
use serde_json::json;

use crate::config::RunConfig;
use crate::table::Table;
use crate::{Artifact, CliError, Command};

type Outcome = Result<(Artifact, Option<CliError>), CliError>;

fn ok(a: Artifact) -> Outcome {
    Ok((a, None))
}

fn logspace(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>, CliError> {
    if !(lo > 0.0 && hi >= lo) || n == 0 {
        return Err(CliError::Usage(format!(
            "need 0 < lo <= hi and at least one point (got {lo}, {hi}, {n})"
        )));
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    let (a, b) = (lo.log10(), hi.log10());
    Ok((0..n)
        .map(|i| 10f64.powf(a + (b - a) * i as f64 / (n - 1) as f64))
        .collect())
}

fn log_scalar(v: LogScalar) -> serde_json::Value {
    json!({ "sign": v.sign(), "ln_abs": v.ln_abs(), "value": v.value() })
}

fn roots_json(r: &RootPair) -> serde_json::Value {
    json!({
        "p1": [r.p1.re, r.p1.im],
        "p2": [r.p2.re, r.p2.im],
        "discriminant": r.discriminant,
        "regime": r.regime,
    })
}

pub fn dispatch(cmd: &Command, cfg: &RunConfig) -> Outcome {
    let si = cfg.constants()?;
    match cmd {
        Command::Constants => constants(&si),
        Command::Lambda { temp, post_burst } => lambda(cfg, &si, temp, *post_burst),
        Command::Hh { lambda } => {
            let a = hh_amplitude(*lambda, 1.0)?;
            ok(Artifact::Report(json!({
                "lambda": lambda,
                "amplitude": log_scalar(a),
                "saturated": a.is_saturated(),
            })))
        }
        Command::Wormhole { temp, time, radius } => wormhole(cfg, &si, *temp, *time, *radius),
        Command::Theorem1 { tmax } => {
            let t = si.kelvin_to_natural(*tmax);
            let report = theorem1_chain(t, &BridgeConfig::default(), &cfg.lambda, &cfg.burst)?;
            let doc = json!({ "t_max_kelvin": tmax, "passed": report.passed(), "report": report });
            let failure = (!report.passed()).then(|| CliError::Failed {
                kind: "theorem1",
                message: format!("chain failed at T_max = {tmax:e} K"),
                detail: json!({ "failed_links": report.failed_links() }),
            });
            Ok((Artifact::Report(doc), failure))
        }
        Command::CausalScan {
            lambda_min,
            lambda_max,
            points,
            dt,
            alpha,
            star,
        } => {
            let c = &cfg.causal;
            let (lo, hi) = (
                lambda_min.unwrap_or(c.lambda_min),
                lambda_max.unwrap_or(c.lambda_max),
            );
            let (dt, alpha) = (dt.unwrap_or(c.dt), alpha.unwrap_or(c.alpha));
            let k = Constants::natural();
            if *star {
                let l = lambda_star(dt, alpha, &cfg.density, &k, c.epsilon, lo, hi, c.rtol)?;
                return ok(Artifact::Report(
                    json!({ "lambda_star": l, "dt": dt, "alpha": alpha }),
                ));
            }
            let mut t = Table::new(&["lambda", "ln_bound", "bound", "flag"]);
            for l in logspace(lo, hi, *points)? {
                let p = DensityParams {
                    lambda: l,
                    ..cfg.density
                };
                let b = causal_bound(dt, alpha, &p, &k, c.epsilon)?;
                t.push(vec![
                    l.into(),
                    b.ln_bound.into(),
                    b.bound.into(),
                    b.discontinuity.into(),
                ]);
            }
            ok(Artifact::Table(t))
        }
        Command::Roots { t } => {
            let s = scale_polynomial(&cfg.density, *t)?;
            let roots: Vec<_> = s
                .roots
                .iter()
                .map(|&u| json!({ "u": u, "a": 1.0 / u, "residual": s.relative_residual(u) }))
                .collect();
            ok(Artifact::Report(
                json!({ "t": t, "coefficients": s.coeffs, "roots": roots }),
            ))
        }
        Command::Lloyd { rho, age } => {
            let mut t = Table::new(&[
                "age_yr",
                "t_seconds",
                "energy_j",
                "matter_ops",
                "rate_ops",
                "refined_ops",
            ]);
            for &yr in age {
                let secs = yr * YEAR_SECONDS;
                // mass-energy inside the light-travel radius c t
                let e = rho * si.c * si.c * (si.c * secs).powi(3);
                let b = lloyd_bounds(e, 1.0, *rho, secs, &si)?;
                t.push(vec![
                    yr.into(),
                    secs.into(),
                    e.into(),
                    b.matter.into(),
                    b.rate.into(),
                    b.refined.into(),
                ]);
            }
            ok(Artifact::Table(t))
        }
        Command::Entropy { t } => {
            let times = if t.is_empty() {
                logspace(1e-44, 1e18, 63)?
            } else {
                t.clone()
            };
            let prof = EntropyProfileParams::default();
            let nat = Constants::natural();
            let mut tab = Table::new(&["t_seconds", "entropy", "ops"]);
            for secs in times {
                let s = prof.entropy(si.seconds_to_natural(secs))?;
                tab.push(vec![
                    secs.into(),
                    s.into(),
                    ops_from_entropy(s, &nat)?.into(),
                ]);
            }
            ok(Artifact::Table(tab))
        }
        Command::BurstTable { tstar } => {
            let mut b = cfg.burst.clone();
            if let Some(tk) = tstar {
                b.t_star = si.kelvin_to_natural(*tk);
            }
            let rows = burst_table(&b)?;
            let mut t = Table::new(&["k", "T_kelvin", "occupation", "power_watts"]);
            for r in rows {
                t.push(vec![
                    r.k.into(),
                    si.natural_to_kelvin(r.temperature).into(),
                    r.occupation.into(),
                    si.natural_to_watts(r.power).into(),
                ]);
            }
            ok(Artifact::Table(t))
        }
        Command::Axion { temp_sweep } => {
            let (lo, hi, n) = match temp_sweep.as_deref() {
                Some([lo, hi, n]) => (*lo, *hi, *n),
                _ => (1.0, 1e32, 33.0),
            };
            if !(n >= 1.0 && n.fract() == 0.0) {
                return Err(CliError::Usage(format!(
                    "POINTS must be a positive integer (got {n})"
                )));
            }
            let temps = logspace(lo, hi, n as usize)?;
            let nat: Vec<f64> = temps.iter().map(|&t| si.kelvin_to_natural(t)).collect();
            let rows = axion_sweep(&nat, &cfg.axion)?;
            let mut t = Table::new(&[
                "T_kelvin",
                "mass",
                "wall_amplitude",
                "strength",
                "axion_to_quadratic",
            ]);
            for (tk, r) in temps.iter().zip(rows) {
                t.push(vec![
                    (*tk).into(),
                    r.mass.into(),
                    r.wall_amplitude.into(),
                    r.strength.into(),
                    r.axion_to_quadratic.into(),
                ]);
            }
            ok(Artifact::Table(t))
        }
        Command::RsPotential { scan, points } => match scan.as_deref() {
            Some([lo, hi]) => {
                if *points < 2 || !(hi > lo) {
                    return Err(CliError::Usage(
                        "scan needs R_MIN < R_MAX and at least 2 points".into(),
                    ));
                }
                let mut t = Table::new(&["R", "V", "dV_dR"]);
                for i in 0..*points {
                    let r = lo + (hi - lo) * i as f64 / (*points - 1) as f64;
                    t.push(vec![
                        r.into(),
                        rs_effective_potential(r, &cfg.rs)?.into(),
                        rs_gradient(r, &cfg.rs)?.into(),
                    ]);
                }
                ok(Artifact::Table(t))
            }
            _ => {
                let m = rs_minimize(&cfg.rs, 1e-12)?;
                ok(Artifact::Report(json!({ "params": cfg.rs, "minimum": m })))
            }
        },
        Command::Quintessence { case } => quintessence(cfg, &si, *case),
        Command::Bifurcation {
            t_min,
            t_max,
            points,
        } => {
            let temps = logspace(*t_min, *t_max, *points)?;
            let rep = bifurcation_scan(&temps, &cfg.eom, &cfg.axion)?;
            eprintln!("{}", rep.summary());
            let mut t = Table::new(&["T", "re_p1", "im_p1", "re_p2", "im_p2", "regime"]);
            for r in &rep.rows {
                let p = &r.roots;
                let regime = serde_json::to_value(p.regime).expect("regime serializes");
                t.push(vec![
                    r.t.into(),
                    p.p1.re.into(),
                    p.p1.im.into(),
                    p.p2.re.into(),
                    p.p2.im.into(),
                    regime.as_str().unwrap_or_default().into(),
                ]);
            }
            ok(Artifact::Table(t))
        }
        Command::Wdw { lambda, a_max } => {
            let w = WdwConfig {
                lambda_eff: lambda.unwrap_or(cfg.wdw.lambda_eff),
                a_max: a_max.unwrap_or(cfg.wdw.a_max),
                ..cfg.wdw
            };
            let s = wdw_solve(&w)?;
            let mut t = Table::new(&["a", "psi"]);
            for (a, p) in s.a.iter().zip(&s.psi) {
                t.push(vec![(*a).into(), (*p).into()]);
            }
            ok(Artifact::Table(t))
        }
    }
}

fn constants(k: &Constants) -> Outcome {
    let rel = |a: f64, b: f64| ((a - b) / b).abs();
    let checks = json!({
        "l_p_sq_eq_hbar_g_over_c3": rel(k.l_p * k.l_p, k.hbar * k.g / k.c.powi(3)),
        "t_p_eq_l_p_over_c": rel(k.t_p * k.c, k.l_p),
        "m_p_sq_eq_hbar_c_over_g": rel(k.m_p * k.m_p, k.hbar * k.c / k.g),
        "t_planck_eq_m_p_c2_over_k_b": rel(k.t_planck * k.k_b, k.m_p * k.c * k.c),
    });
    let passed = checks
        .as_object()
        .expect("object")
        .values()
        .all(|v| v.as_f64().is_some_and(|e| e < 1e-12));
    ok(Artifact::Report(json!({
        "g": k.g,
        "hbar": k.hbar,
        "c": k.c,
        "k_b": k.k_b,
        "l_p": k.l_p,
        "t_p": k.t_p,
        "m_p": k.m_p,
        "t_planck_kelvin": k.t_planck,
        "identity_relative_errors": checks,
        "identities_pass": passed,
    })))
}

fn lambda(cfg: &RunConfig, si: &Constants, temps: &[f64], post_burst: bool) -> Outcome {
    let temps = if temps.is_empty() {
        logspace(1e20, 1e35, 16)?
    } else {
        temps.to_vec()
    };
    let mut t = Table::new(&[
        "T_kelvin",
        "lambda4",
        "lambda5",
        "hh_amplitude",
        "hh_ln_abs",
    ]);
    for tk in temps {
        let tn = si.kelvin_to_natural(tk);
        let l4 = cfg.lambda.lambda_4d(tn, post_burst)?;
        let l5 = cfg.lambda.lambda_5d(tn)?;
        let hh = hh_amplitude(l5, 1.0)?;
        t.push(vec![
            tk.into(),
            l4.into(),
            l5.into(),
            hh.value().into(),
            hh.ln_abs().into(),
        ]);
    }
    ok(Artifact::Table(t))
}

fn wormhole(
    cfg: &RunConfig,
    si: &Constants,
    temp: f64,
    time: Option<f64>,
    radius: Option<f64>,
) -> Outcome {
    let tn = si.kelvin_to_natural(temp);
    let time_n = time.map_or(0.5, |s| si.seconds_to_natural(s));
    let r = radius.map_or(1.0, |m| si.meters_to_natural(m));
    let e = eta(tn, &cfg.lambda, r)?;
    let bc = BridgeConfig::default();
    let terms = bridge_terms(tn, time_n, r, &bc, &cfg.lambda)?;
    let l4 = cfg.lambda.lambda_4d(tn, false)?;
    let f = metric_f(
        r,
        &MetricParams {
            lambda: l4,
            r_shell: r,
            ..MetricParams::default()
        },
    )?;
    ok(Artifact::Report(json!({
        "temp_kelvin": temp,
        "time_natural": time_n,
        "radius_natural": r,
        "eta": e.eta,
        "eta_slope": e.slope,
        "metric_f": f,
        "eta_squared_term": log_scalar(terms.eta_squared),
        "eta_linear_term": log_scalar(terms.eta_linear),
        "amplitude": log_scalar(terms.total()),
    })))
}

fn quintessence(cfg: &RunConfig, si: &Constants, case: u8) -> Outcome {
    let base = cfg.eom;
    let m2 = base.m * base.m;
    // representative temperature (K) and overrides for each case
    let (tk, p) = match case {
        1 => (1.0, base),
        2 => (1e13, base),
        3 => (
            1e13,
            EomParams {
                c_tilde: 1e-6,
                ..base
            },
        ),
        _ => (
            1e8,
            EomParams {
                f_axion: 50.0 * m2,
                ..base
            },
        ),
    };
    let tn = si.kelvin_to_natural(tk);
    let f_axion = if case == 4 {
        p.f_axion
    } else {
        axion_strength(tn, &cfg.axion)?
    };
    let p = EomParams {
        t: tn,
        f_axion,
        ..p
    };
    let label = classify_regime(tn, 1.0, &p, &cfg.regimes)?;
    let mut roots = serde_json::Map::new();
    for (name, mode) in [
        ("exact", RootMode::Exact),
        ("case_ii", RootMode::CaseTwo),
        ("case_iv", RootMode::CaseFour),
    ] {
        roots.insert(name.into(), roots_json(&characteristic_roots(&p, mode)?));
    }
    let lin = p.linear_roots();
    let rate = lin.max_re().abs();
    let t_end = if rate > 0.0 { 10.0 / rate } else { 10.0 };
    let phi0 = p.phi_c + 1.0;
    let tr = integrate_eom(&p, phi0, 0.0, t_end, 50, OdeOptions::default())?;
    ok(Artifact::Report(json!({
        "case": case,
        "classified": label,
        "temp_kelvin": tk,
        "params": p,
        "roots": roots,
        "linear_roots": roots_json(&lin),
        "trajectory": tr,
        "epsilon1": tr.epsilon1(p.phi_c),
    })))
}
