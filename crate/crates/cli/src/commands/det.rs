use super::Outcome;
use crate::error::CliError;
use crate::job::{self, Context, DetJob, EntrySpec, Overrides, RingKind};
use crate::report::{self, ReportScalar};
use dieudonne_core::dieudonne::{
    det_via_elimination, dihedral_integral_representative, h8_obstruction, TraceOp, Verdict,
};
use dieudonne_core::group_algebra::{GroupKind, GroupRingElem};
use dieudonne_core::{det_class, DetEntry, Matrix, PAdic, Ring, Scalar};
use num_rational::BigRational;
use serde_json::{json, Value};

pub fn run(source: &str, overrides: Overrides) -> Result<Outcome, CliError> {
    let job: DetJob = job::parse_job(source)?;
    let ctx = Context::resolve(source, &job.context, RingKind::GroupRing, overrides)?;
    let results = match ctx.ring {
        RingKind::GroupRing => {
            let group = ctx.require_group()?.clone();
            let zero = PAdic::zero(ctx.p, ctx.precision);
            let a = job::square_matrix(&job.matrix, |e| match e {
                EntrySpec::Terms(t) => job::group_elem(source, &group, t, &zero, |c| ctx.padic(source, c)),
                EntrySpec::Quaternion(_) => Err(CliError::Usage("group-ring entries are [word, coeff] lists".into())),
            })?;
            let certificate = match group.kind() {
                GroupKind::Dihedral(_) => {
                    let c = dihedral_integral_representative(&a)?;
                    Some(report::verdict(&c.verdict, &c.trace))
                }
                _ => scalar_certificate(&a)?,
            };
            group_ring_report(&a, certificate)?
        }
        RingKind::RationalGroupRing => {
            let group = ctx.require_group()?.clone();
            let zero = BigRational::from_integer(0.into());
            let a = job::square_matrix(&job.matrix, |e| match e {
                EntrySpec::Terms(t) => job::group_elem(source, &group, t, &zero, |c| job::parse_rational(source, c)),
                EntrySpec::Quaternion(_) => Err(CliError::Usage("group-ring entries are [word, coeff] lists".into())),
            })?;
            let certificate = scalar_certificate(&a)?;
            group_ring_report(&a, certificate)?
        }
        RingKind::RationalQuaternion => {
            let a = job::square_matrix(&job.matrix, |e| match e {
                EntrySpec::Quaternion(c) => job::rational_quaternion(source, c),
                EntrySpec::Terms(_) => Err(CliError::Usage("quaternion entries are 4-tuples".into())),
            })?;
            let class = det_class(&a)?;
            json!({
                "class": report::class(&class),
                "trace_length": trace_length(&a),
            })
        }
        other => return Err(CliError::Unsupported(format!("det does not handle ring kind {}", other.name()))),
    };
    Ok(Outcome { context: report::context(&ctx), results, failures: Vec::new() })
}

fn trace_length<R: DetEntry>(a: &Matrix<R>) -> Value {
    match det_via_elimination(a) {
        Ok((_, trace)) => Value::String(trace.len().to_string()),
        Err(_) => Value::Null,
    }
}

/// H8 gets the mod-8 test; commutative groups are their own representative.
fn scalar_certificate<S: Scalar + ReportScalar>(a: &Matrix<GroupRingElem<S>>) -> Result<Option<Value>, CliError> {
    let group = a.get(0, 0).group().clone();
    Ok(match group.kind() {
        GroupKind::Quaternion8 => {
            let c = h8_obstruction(a)?;
            Some(report::verdict(&c.verdict, &c.trace))
        }
        GroupKind::C2 | GroupKind::Klein4 | GroupKind::Cyclic(_) => {
            let class = det_class(a)?;
            let d = class.commutative().expect("commutative class").clone();
            Some(report::verdict(&Verdict::RepresentativeFound(d), &[] as &[TraceOp]))
        }
        _ => None,
    })
}

fn group_ring_report<S: ReportScalar + Ring>(
    a: &Matrix<GroupRingElem<S>>,
    certificate: Option<Value>,
) -> Result<Value, CliError> {
    let class = det_class(a)?;
    Ok(json!({
        "class": report::class(&class),
        "trace_length": trace_length(a),
        "certificate": certificate.unwrap_or(json!({ "verdict": "not_applicable" })),
    }))
}
