use super::Outcome;
use crate::error::CliError;
use crate::job::{self, CoeffSpec, Context, Overrides, RingKind, WeierstrassJob};
use crate::report;
use dieudonne_core::algebras::Hurwitz;
use dieudonne_core::weierstrass::{
    weierstrass_prepare, weierstrass_prepare_right, LocalCoeff, SkewSeries, WeierstrassFactorization,
};
use dieudonne_core::{PAdic, Ring};
use serde_json::{json, Value};

pub fn run(source: &str, overrides: Overrides) -> Result<Outcome, CliError> {
    let job: WeierstrassJob = job::parse_job(source)?;
    let ctx = Context::resolve(source, &job.context, RingKind::HurwitzSeries, overrides)?;
    let right = match job.side.as_deref() {
        None | Some("left") => false,
        Some("right") => true,
        Some(other) => return Err(CliError::Usage(format!("side must be \"left\" or \"right\", got {other:?}"))),
    };
    if job.series.is_empty() {
        return Err(CliError::Usage("series needs at least one coefficient".into()));
    }
    if job.series.len() > ctx.series {
        return Err(CliError::Usage(format!(
            "{} coefficients given but series precision is {}",
            job.series.len(),
            ctx.series
        )));
    }
    let (results, failures) = match ctx.ring {
        RingKind::HurwitzSeries => {
            let c = job
                .series
                .iter()
                .map(|s| match s {
                    CoeffSpec::Quaternion(q) => ctx.hurwitz(source, q),
                    CoeffSpec::Scalar(_) => Err(CliError::Usage("Hurwitz coefficients are 4-tuples".into())),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let f = SkewSeries::new(ctx.series, c, &Hurwitz::from_ints(ctx.precision, [0; 4]));
            prepare(&f, right, report::hurwitz)?
        }
        RingKind::PadicSeries => {
            let c = job
                .series
                .iter()
                .map(|s| match s {
                    CoeffSpec::Scalar(x) => ctx.padic(source, x),
                    CoeffSpec::Quaternion(_) => Err(CliError::Usage("p-adic coefficients are single strings".into())),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let f = SkewSeries::new(ctx.series, c, &PAdic::zero(ctx.p, ctx.precision));
            prepare(&f, right, |x| Value::String(x.signed().to_string()))?
        }
        other => {
            return Err(CliError::Unsupported(format!("weierstrass does not handle ring kind {}", other.name())))
        }
    };
    Ok(Outcome { context: report::context(&ctx), results, failures })
}

fn prepare<C: LocalCoeff>(
    f: &SkewSeries<C>,
    right: bool,
    show: impl Fn(&C) -> Value,
) -> Result<(Value, Vec<String>), CliError> {
    let w: WeierstrassFactorization<C> = if right { weierstrass_prepare_right(f)? } else { weierstrass_prepare(f)? };
    let residual = f.sub(&w.reconstruct());
    let nonzero = residual.coeffs().iter().filter(|c| !c.is_zero()).count();
    let mut failures = Vec::new();
    if nonzero != 0 {
        failures.push(format!("reconstruction residual has {nonzero} nonzero coefficients"));
    }
    if !w.is_distinguished() {
        failures.push("J is not distinguished".into());
    }
    let results = json!({
        "side": if right { "right" } else { "left" },
        "mu": w.mu.to_string(),
        "degree": w.degree().to_string(),
        "unit": w.unit.coeffs().iter().map(&show).collect::<Vec<_>>(),
        "monic": w.monic.iter().map(&show).collect::<Vec<_>>(),
        "residual_nonzero_coefficients": nonzero.to_string(),
        "trusted_coefficients": w.unit.trusted().to_string(),
    });
    Ok((results, failures))
}
