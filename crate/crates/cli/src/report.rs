use crate::job::Context;
use dieudonne_core::algebras::{Cyclo, Hurwitz};
use dieudonne_core::dieudonne::{TraceOp, Verdict};
use dieudonne_core::group_algebra::GroupRingElem;
use dieudonne_core::{ClassPart, DetClass, PAdic};
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use std::time::Duration;

/// Scalars as they appear in reports.
pub trait ReportScalar {
    fn show(&self) -> String;
}

impl ReportScalar for PAdic {
    fn show(&self) -> String {
        self.signed().to_string()
    }
}

impl ReportScalar for BigRational {
    fn show(&self) -> String {
        self.to_string()
    }
}

pub fn elem<S: ReportScalar + dieudonne_core::Ring>(x: &GroupRingElem<S>) -> String {
    x.display_with(|c| c.show())
}

pub fn coeffs<S: ReportScalar>(xs: &[S]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.show())).collect())
}

pub fn hurwitz(h: &Hurwitz) -> Value {
    let q = h.to_rational();
    Value::Array(q.b.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn cyclo<S: ReportScalar + dieudonne_core::Ring>(c: &Cyclo<S>) -> Value {
    coeffs(c.coords())
}

pub fn class<S: ReportScalar + dieudonne_core::Ring>(c: &DetClass<S>) -> Value {
    Value::Array(
        c.parts()
            .iter()
            .map(|part| match part {
                ClassPart::Commutative(x) => json!({ "component": "commutative", "value": elem(x) }),
                ClassPart::Central(x) => json!({ "component": "reduced_norm", "basis": "zeta powers", "value": cyclo(x) }),
                ClassPart::Scalar(x) => json!({ "component": "reduced_norm", "value": x.show() }),
            })
            .collect(),
    )
}

pub fn verdict<S: ReportScalar + dieudonne_core::Ring>(v: &Verdict<S>, trace: &[TraceOp]) -> Value {
    let mut out = match v {
        Verdict::RepresentativeFound(e) => json!({ "verdict": "representative_found", "representative": elem(e) }),
        Verdict::NoIntegralRepresentative(ob) => json!({
            "verdict": "no_integral_representative",
            "modulus": ob.modulus.to_string(),
            "required": ob.required.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "actual": ob.actual.to_string(),
            "detail": ob.detail,
        }),
        Verdict::Inconclusive(why) => json!({ "verdict": "inconclusive", "reason": why }),
    };
    out["trace_length"] = Value::String(trace.len().to_string());
    out
}

pub fn context(ctx: &Context) -> Value {
    let mut m = Map::new();
    m.insert("ring".into(), ctx.ring.name().into());
    if let Some(g) = &ctx.group {
        m.insert("group".into(), g.spec().into());
    }
    m.insert("p".into(), ctx.p.to_string().into());
    m.insert("padic_precision".into(), ctx.precision.to_string().into());
    m.insert("series_precision".into(), ctx.series.to_string().into());
    Value::Object(m)
}

/// The common report envelope.
pub fn envelope(command: &str, context: Value, results: Value, failures: &[String], elapsed: Duration) -> Value {
    json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "context": context,
        "results": results,
        "failures": failures,
        "status": if failures.is_empty() { "ok" } else { "failed" },
        "timing": { "elapsed_us": elapsed.as_micros().to_string() },
    })
}
