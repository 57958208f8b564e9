use std::process::ExitCode;

use dha_core::geometry::lens_area;
use dha_core::oracle::{
    beta_incomplete_quadrature, lens_area_montecarlo_chunked, lens_area_quadrature,
};
use dha_core::solver::{dha_report, offset_for_area, DHA};
use dha_core::special_functions::{
    beta_incomplete, beta_regularized, beta_regularized_inverse, kepler_e_newton, kepler_e_series,
};
use dha_core::{BetaParams, Error, KeplerQuery, LensConfig, SolveRequest, Target, Tolerance};
use serde_json::{json, Value};

use crate::args::{Command, Format, Method};
use crate::output::{sig17, Envelope};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERIC: u8 = 3;

const CONSTANT_GATE: f64 = 1e-10;
/// A looser solve tolerance widens the agreement gate proportionally.
const CONSTANT_GATE_PER_TOL: f64 = 10.0;
const KEPLER_GATE: f64 = 1e-12;
const QUADRATURE_GATE: f64 = 1e-8;
const QUADRATURE_PANELS: usize = 4096;
const MC_BLOCK: u64 = 65_536;
const MC_SIGMAS: f64 = 4.0;

/// What a command produced: the envelope to print and the exit status.
pub struct Outcome {
    pub envelope: Envelope,
    pub exit: u8,
    pub format: Format,
}

pub fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Constant { format, tol } => constant(tol.tol, format.format),
        Command::LensArea {
            radius_a,
            radius_b,
            separation,
            format,
        } => lens(radius_a, radius_b, separation, format.format),
        Command::Offset {
            radius_a,
            radius_b,
            fraction,
            area,
            format,
            tol,
        } => offset(radius_a, radius_b, fraction, area, tol.tol, format.format),
        Command::Kepler {
            a,
            x,
            method,
            terms,
            format,
        } => kepler(a, x, method, terms, format.format),
        Command::Invbeta {
            z,
            a,
            b,
            format,
            tol,
        } => invbeta(z, a, b, tol.tol, format.format),
        Command::Verify {
            samples,
            seed,
            format,
        } => verify(samples, seed, format.format),
    }
}

fn tolerance(abs_tol: f64) -> Result<Tolerance, Error> {
    Tolerance::with_abs_tol(abs_tol)
}

fn constant(tol: f64, format: Format) -> Result<Outcome, Error> {
    let report = dha_report(tolerance(tol)?);
    let mut result = serde_json::Map::new();
    for (key, value) in [
        ("d_rootfind", report.d_rootfind),
        ("d_kepler", report.d_kepler),
        ("d_archav", report.d_archav),
        ("d_invbeta", report.d_invbeta),
    ] {
        result.insert(key.to_owned(), value.map_or(Value::Null, Value::from));
    }
    let delta = report.max_pairwise_delta;
    result.insert("max_pairwise_delta".to_owned(), finite_or_null(delta));
    result.insert(
        "reference_digits_matched".to_owned(),
        json!(report.reference_digits_matched),
    );

    let mut env = Envelope::new("constant").input("tol", tol);
    env.primary = report.values().first().map(|&(_, v)| v);
    env.result = Value::Object(result);
    for (method, value) in report.values() {
        env.text_lines
            .push(format!("{}: {}", method.name(), sig17(value)));
    }
    env.diagnostic("max_pairwise_delta", finite_or_null(delta));
    env.diagnostic("reference_digits_matched", report.reference_digits_matched);
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| json!({"method": f.method.name(), "error": f.error.to_string()}))
        .collect();
    env.diagnostic("failures", failures);

    let gate = CONSTANT_GATE.max(CONSTANT_GATE_PER_TOL * tol);
    env.diagnostic("agreement_gate", gate);
    let exit = if delta <= gate { 0 } else { EXIT_NUMERIC };
    Ok(Outcome {
        envelope: env,
        exit,
        format,
    })
}

fn lens(radius_a: f64, radius_b: f64, separation: f64, format: Format) -> Result<Outcome, Error> {
    let config = LensConfig::new(radius_a, radius_b, separation)?;
    let env = Envelope::new("lens-area")
        .input("R", radius_a)
        .input("r", radius_b)
        .input("d", separation)
        .scalar(lens_area(config));
    Ok(Outcome {
        envelope: env,
        exit: 0,
        format,
    })
}

fn offset(
    radius_a: f64,
    radius_b: f64,
    fraction: Option<f64>,
    area: Option<f64>,
    tol: f64,
    format: Format,
) -> Result<Outcome, Error> {
    let (target, env) = match (fraction, area) {
        (Some(f), _) => (
            Target::Fraction(f),
            Envelope::new("offset").input("fraction", f),
        ),
        (None, Some(a)) => (Target::Area(a), Envelope::new("offset").input("area", a)),
        (None, None) => unreachable!("clap requires one target flag"),
    };
    let request = SolveRequest::new(radius_a, radius_b, target, tolerance(tol)?)?;
    let d = offset_for_area(&request)?;
    let achieved = lens_area(LensConfig::new(radius_a, radius_b, d)?);
    let mut env = env
        .input("R", radius_a)
        .input("r", radius_b)
        .input("tol", tol)
        .scalar(d);
    env.diagnostic("target_area", request.target_area());
    env.diagnostic("residual", (achieved - request.target_area()).abs());
    env.diagnostic("method", "brent");
    Ok(Outcome {
        envelope: env,
        exit: 0,
        format,
    })
}

fn kepler(a: f64, x: f64, method: Method, terms: usize, format: Format) -> Result<Outcome, Error> {
    let query = KeplerQuery::new(a, x)?;
    let solution = match method {
        Method::Newton => kepler_e_newton(query, Tolerance::default())?,
        Method::Series => kepler_e_series(query, terms)?,
    };
    let mut env = Envelope::new("kepler").input("a", a).input("x", x);
    if method == Method::Series {
        env = env.input("terms", terms);
    }
    let mut env = env.scalar(solution.y);
    env.diagnostic("method", solution.method.name());
    env.diagnostic("residual", solution.residual);
    let counter = match method {
        Method::Newton => "iterations",
        Method::Series => "terms",
    };
    env.diagnostic(counter, solution.iterations_or_terms);
    let exit = match method {
        Method::Newton if solution.residual > KEPLER_GATE => EXIT_NUMERIC,
        _ => 0,
    };
    Ok(Outcome {
        envelope: env,
        exit,
        format,
    })
}

fn invbeta(z: f64, a: f64, b: f64, tol: f64, format: Format) -> Result<Outcome, Error> {
    let params = BetaParams::new(a, b)?;
    let x = beta_regularized_inverse(z, params, tolerance(tol)?)?;
    let check = beta_regularized(x, params)?;
    let mut env = Envelope::new("invbeta")
        .input("z", z)
        .input("a", a)
        .input("b", b)
        .input("tol", tol)
        .scalar(x);
    env.diagnostic("forward_residual", (check - z).abs());
    Ok(Outcome {
        envelope: env,
        exit: 0,
        format,
    })
}

const VERIFY_LENSES: [(f64, f64, f64); 8] = [
    (1.0, 1.0, 0.2),
    (1.0, 1.0, DHA),
    (1.0, 1.0, 1.0),
    (1.0, 1.0, 1.6),
    (1.0, 0.5, 0.8),
    (2.0, 1.0, 1.5),
    (1.0, 0.3, 0.9),
    (1.5, 1.0, 0.6),
];

const VERIFY_BETAS: [(f64, f64, f64); 5] = [
    (0.3, 0.5, 1.5),
    (0.5, 0.5, 0.5),
    (0.4, 2.0, 3.0),
    (0.7, 2.5, 1.5),
    (0.2, 1.0, 4.0),
];

struct Check {
    name: String,
    delta: f64,
    gate: f64,
}

impl Check {
    fn pass(&self) -> bool {
        self.delta <= self.gate
    }
}

/// Cross-checks the analytic lens area against quadrature and Monte Carlo,
/// and the incomplete beta against quadrature.
///
/// The Monte Carlo gate is four standard errors computed from the analytic
/// hit probability, so it stays meaningful when a small sample happens to
/// hit every point or none.
fn verify(samples: u64, seed: u64, format: Format) -> Result<Outcome, Error> {
    let mut checks = Vec::new();
    for (i, &(big_r, r, d)) in VERIFY_LENSES.iter().enumerate() {
        let config = LensConfig::new(big_r, r, d)?;
        let exact = lens_area(config);
        let label = format!("lens R={big_r} r={r} d={d:.6}");

        let quad = lens_area_quadrature(config, QUADRATURE_PANELS)?;
        checks.push(Check {
            name: format!("{label} quadrature"),
            delta: (quad - exact).abs(),
            gate: QUADRATURE_GATE,
        });

        let block_seed = seed.wrapping_add(i as u64);
        let mc = lens_area_montecarlo_chunked(config, samples, block_seed, MC_BLOCK, true)?;
        let box_area = (big_r - d + r) * 2.0 * big_r.min(r);
        let p = (exact / box_area).clamp(0.0, 1.0);
        let sigma = box_area * (p * (1.0 - p) / samples as f64).sqrt();
        checks.push(Check {
            name: format!("{label} monte carlo"),
            delta: (mc.value - exact).abs(),
            gate: MC_SIGMAS * sigma.max(mc.std_error),
        });
    }
    for &(x, a, b) in &VERIFY_BETAS {
        let params = BetaParams::new(a, b)?;
        let exact = beta_incomplete(x, params)?;
        let quad = beta_incomplete_quadrature(x, params, QUADRATURE_PANELS)?;
        checks.push(Check {
            name: format!("beta x={x} a={a} b={b} quadrature"),
            delta: (quad - exact).abs(),
            gate: QUADRATURE_GATE * exact.abs().max(1.0),
        });
    }

    let passed = checks.iter().filter(|c| c.pass()).count();
    let all_pass = passed == checks.len();
    let mut env = Envelope::new("verify")
        .input("samples", samples)
        .input("seed", seed);
    env.result = json!({
        "passed": passed,
        "total": checks.len(),
        "checks": checks
            .iter()
            .map(|c| json!({"name": c.name, "delta": c.delta, "gate": c.gate, "pass": c.pass()}))
            .collect::<Vec<_>>(),
    });
    env.text_lines.push(format!(
        "{:<44} {:>12} {:>12}  status",
        "check", "delta", "gate"
    ));
    for c in &checks {
        let status = if c.pass() { "PASS" } else { "FAIL" };
        env.text_lines.push(format!(
            "{:<44} {:>12.3e} {:>12.3e}  {status}",
            c.name, c.delta, c.gate
        ));
    }
    env.text_lines
        .push(format!("{passed}/{} checks passed", checks.len()));
    Ok(Outcome {
        envelope: env,
        exit: if all_pass { 0 } else { EXIT_NUMERIC },
        format,
    })
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

/// Exit status for a library error.
pub fn error_exit(error: &Error) -> ExitCode {
    if error.is_non_convergence() {
        ExitCode::from(EXIT_NUMERIC)
    } else {
        ExitCode::from(EXIT_USAGE)
    }
}
