use super::Outcome;
use crate::error::CliError;
use crate::job::{self, CharacterSpec, Context, IsogenyJob, Overrides, RingKind};
use crate::report;
use dieudonne_core::group_algebra::FiniteGroup;
use dieudonne_core::iwasawa::{verify_isogeny_identity, IsogenyCharacter};
use serde_json::{json, Value};

fn character(source: &str, ctx: &Context, spec: &CharacterSpec) -> Result<IsogenyCharacter, CliError> {
    let group = FiniteGroup::from_spec(&spec.group)?;
    let value = job::parse_int(source, &spec.value)?;
    let value: i64 = value.try_into().map_err(|_| CliError::Usage(format!("character value {} is too large", spec.value)))?;
    Ok(IsogenyCharacter::new(&group, ctx.p, value)?)
}

pub fn run(source: &str, overrides: Overrides) -> Result<Outcome, CliError> {
    let job: IsogenyJob = job::parse_job(source)?;
    let ctx = Context::resolve(source, &job.context, RingKind::PadicSeries, overrides)?;
    if ctx.ring != RingKind::PadicSeries {
        return Err(CliError::Unsupported("isogeny-check works over padic_series".into()));
    }
    let chi = character(source, &ctx, &job.chi_phi)?;
    let chi_tilde = character(source, &ctx, &job.chi_phi_tilde)?;
    let a_e = job::square_matrix(&job.a_e, |s| ctx.series_of(source, s))?;
    let a_phi = job::square_matrix(&job.a_phi, |t| job::lambda_elem(source, &ctx, chi.group(), t))?;
    let a_phi_tilde = job::square_matrix(&job.a_phi_tilde, |t| job::lambda_elem(source, &ctx, chi_tilde.group(), t))?;
    let r = verify_isogeny_identity(&a_e, &a_phi, &a_phi_tilde, &chi, &chi_tilde)?;
    let gen = |x: &dieudonne_core::iwasawa::LambdaModP2| report::coeffs(x.coeffs());
    let quotient = |q: &Option<dieudonne_core::iwasawa::LambdaModP2>| q.as_ref().map(gen).unwrap_or(Value::Null);
    let results = json!({
        "holds": r.holds,
        "lhs": gen(&r.lhs),
        "rhs_phi": gen(&r.rhs_phi),
        "rhs_phi_tilde": gen(&r.rhs_phi_tilde),
        "rhs": gen(&r.rhs),
        "lhs_distinguished": report::coeffs(&r.lhs_distinguished),
        "rhs_distinguished": report::coeffs(&r.rhs_distinguished),
        "lhs_over_rhs": quotient(&r.lhs_over_rhs),
        "rhs_over_lhs": quotient(&r.rhs_over_lhs),
        "series_precision": r.series_precision.to_string(),
        "assumptions": r.assumptions,
    });
    let failures = if r.holds { Vec::new() } else { vec!["ideals differ modulo (p^2, T^M)".to_string()] };
    Ok(Outcome { context: report::context(&ctx), results, failures })
}
