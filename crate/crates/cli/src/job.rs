//! JSON job files. Every number is a string; unknown fields are rejected.

use crate::error::CliError;
use dieudonne_core::algebras::{Hurwitz, Quaternion};
use dieudonne_core::group_algebra::{FiniteGroup, Group, GroupKind, GroupRingElem, IwasawaSeries, LambdaGElem};
use dieudonne_core::padic::validate_context;
use dieudonne_core::{Error, Matrix, PAdic, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const DEFAULT_PRECISION: u32 = 16;
pub const DEFAULT_SERIES: usize = 24;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Default)]
#[serde(deny_unknown_fields)]
pub struct ContextSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub padic_precision: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series_precision: Option<String>,
}

/// A matrix entry: `[[word, coeff], ...]` over a group ring, or the four
/// coordinates of a quaternion on 1, i, j, ij.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(untagged)]
pub enum EntrySpec {
    Terms(Vec<(String, String)>),
    Quaternion([String; 4]),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(untagged)]
pub enum CoeffSpec {
    Scalar(String),
    Quaternion([String; 4]),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DetJob {
    pub context: ContextSpec,
    pub matrix: Vec<Vec<EntrySpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct WeierstrassJob {
    pub context: ContextSpec,
    pub series: Vec<CoeffSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CharacterSpec {
    pub group: String,
    pub value: String,
}

/// Λ[G] entries are `[[word, [c0, c1, ...]], ...]`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct IsogenyJob {
    pub context: ContextSpec,
    pub a_e: Vec<Vec<Vec<String>>>,
    pub a_phi: Vec<Vec<Vec<(String, Vec<String>)>>>,
    pub a_phi_tilde: Vec<Vec<Vec<(String, Vec<String>)>>>,
    pub chi_phi: CharacterSpec,
    pub chi_phi_tilde: CharacterSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
}

/// Parses a whole document, reporting syntax and shape errors with their
/// position.
pub fn parse_job<T: DeserializeOwned>(source: &str) -> Result<T, CliError> {
    serde_json::from_str(source).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string().split(" at line").next().unwrap_or_default().to_string(),
    })
}

/// 1-based line and column of the first occurrence of the JSON string
/// literal `text`, shifted by `offset` characters into it.
fn locate(source: &str, text: &str, offset: usize) -> (usize, usize) {
    let needle = serde_json::to_string(text).unwrap_or_default();
    let Some(at) = source.find(&needle) else {
        return (0, 0);
    };
    let before = &source[..at];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().unwrap_or("").chars().count() + 1 + offset;
    (line, col)
}

/// Re-anchors an error raised while reading the string `text` to the job
/// file.
fn in_source(source: &str, text: &str, e: Error) -> CliError {
    match e {
        Error::Parse { column, message, .. } => {
            let (line, col) = locate(source, text, column);
            CliError::Parse { line, column: col, message: format!("{message} in {text:?}") }
        }
        other => CliError::from(other),
    }
}

fn parse_error(source: &str, text: &str, message: String) -> CliError {
    let (line, column) = locate(source, text, 1);
    CliError::Parse { line, column, message }
}

pub fn parse_int(source: &str, text: &str) -> Result<BigInt, CliError> {
    text.trim().parse::<BigInt>().map_err(|_| parse_error(source, text, format!("expected an integer, got {text:?}")))
}

pub fn parse_rational(source: &str, text: &str) -> Result<BigRational, CliError> {
    let bad = || parse_error(source, text, format!("expected an integer or a fraction a/b, got {text:?}"));
    match text.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(source, text)?)),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(parse_error(source, text, "zero denominator".into()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

fn parse_small<T: std::str::FromStr>(source: &str, text: &str, what: &str) -> Result<T, CliError> {
    text.trim().parse::<T>().map_err(|_| parse_error(source, text, format!("{what} must be a non-negative integer, got {text:?}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    /// Z_p[G] with p-adic coefficients.
    GroupRing,
    /// Q[G] with exact rational coefficients.
    RationalGroupRing,
    /// Quaternions over Q.
    RationalQuaternion,
    /// Z_p[[x]].
    PadicSeries,
    /// O_D[[x]] over the 2-adic Hurwitz order.
    HurwitzSeries,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::GroupRing => "group_ring",
            RingKind::RationalGroupRing => "rational_group_ring",
            RingKind::RationalQuaternion => "rational_quaternion",
            RingKind::PadicSeries => "padic_series",
            RingKind::HurwitzSeries => "hurwitz_series",
        }
    }

    fn parse(s: &str) -> Result<RingKind, CliError> {
        Ok(match s {
            "group_ring" => RingKind::GroupRing,
            "rational_group_ring" => RingKind::RationalGroupRing,
            "rational_quaternion" => RingKind::RationalQuaternion,
            "padic_series" => RingKind::PadicSeries,
            "hurwitz_series" => RingKind::HurwitzSeries,
            other => return Err(CliError::Unsupported(format!("unknown ring kind {other:?}"))),
        })
    }
}

/// A validated context.
#[derive(Clone, Debug)]
pub struct Context {
    pub ring: RingKind,
    pub group: Option<Group>,
    pub p: u64,
    pub precision: u32,
    pub series: usize,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub precision: Option<u32>,
    pub series: Option<usize>,
}

impl Context {
    pub fn resolve(
        source: &str,
        spec: &ContextSpec,
        default_ring: RingKind,
        overrides: Overrides,
    ) -> Result<Context, CliError> {
        let ring = match &spec.ring {
            Some(r) => RingKind::parse(r)?,
            None => default_ring,
        };
        let group = spec.group.as_deref().map(FiniteGroup::from_spec).transpose()?;
        let given_p = spec.p.as_deref().map(|s| parse_small::<u64>(source, s, "p")).transpose()?;
        let forced = match (&group, ring) {
            (Some(g), _) => match g.kind() {
                GroupKind::Quaternion8 => Some(2),
                GroupKind::Dihedral(q) | GroupKind::Cyclic(q) => Some(q),
                _ => None,
            },
            (None, RingKind::HurwitzSeries) => Some(2),
            _ => None,
        };
        let p = match (forced, given_p) {
            (Some(f), Some(g)) if f != g => {
                return Err(CliError::Unsupported(format!("this ring requires p = {f}, the job asks for p = {g}")))
            }
            (Some(f), _) => f,
            (None, Some(g)) => g,
            (None, None) => 2,
        };
        let precision = match overrides.precision {
            Some(n) => n,
            None => spec
                .padic_precision
                .as_deref()
                .map(|s| parse_small::<u32>(source, s, "padic_precision"))
                .transpose()?
                .unwrap_or(DEFAULT_PRECISION),
        };
        let series = match overrides.series {
            Some(m) => m,
            None => spec
                .series_precision
                .as_deref()
                .map(|s| parse_small::<usize>(source, s, "series_precision"))
                .transpose()?
                .unwrap_or(DEFAULT_SERIES),
        };
        validate_context(p, precision).map_err(|e| CliError::Numeric(e.to_string()))?;
        if series == 0 {
            return Err(CliError::Numeric("series precision must be at least 1".into()));
        }
        Ok(Context { ring, group, p, precision, series })
    }

    pub fn require_group(&self) -> Result<&Group, CliError> {
        self.group.as_ref().ok_or_else(|| CliError::Usage("this job needs context.group".into()))
    }

    pub fn padic(&self, source: &str, text: &str) -> Result<PAdic, CliError> {
        let q = parse_rational(source, text)?;
        PAdic::from_rational(self.p, self.precision, &q)
            .map_err(|_| parse_error(source, text, format!("{text:?} is not {}-integral", self.p)))
    }

    pub fn hurwitz(&self, source: &str, c: &[String; 4]) -> Result<Hurwitz, CliError> {
        let q = Quaternion::new(
            parse_rational(source, &c[0])?,
            parse_rational(source, &c[1])?,
            parse_rational(source, &c[2])?,
            parse_rational(source, &c[3])?,
        );
        Hurwitz::from_rational(self.precision, &q)
            .map_err(|_| parse_error(source, &c[0], "quaternion is not in the Hurwitz order".into()))
    }

    pub fn series_of(&self, source: &str, coeffs: &[String]) -> Result<IwasawaSeries, CliError> {
        let c = coeffs.iter().map(|s| self.padic(source, s)).collect::<Result<Vec<_>, _>>()?;
        Ok(IwasawaSeries::new(self.p, self.precision, self.series, &c))
    }
}

pub fn rational_quaternion(source: &str, c: &[String; 4]) -> Result<Quaternion<BigRational>, CliError> {
    Ok(Quaternion::new(
        parse_rational(source, &c[0])?,
        parse_rational(source, &c[1])?,
        parse_rational(source, &c[2])?,
        parse_rational(source, &c[3])?,
    ))
}

pub fn group_elem<S: Ring>(
    source: &str,
    group: &Group,
    terms: &[(String, String)],
    zero: &S,
    coeff: impl Fn(&str) -> Result<S, CliError>,
) -> Result<GroupRingElem<S>, CliError> {
    let mut out = GroupRingElem::zero(group, zero);
    for (word, c) in terms {
        let g = group.parse_word(word).map_err(|e| in_source(source, word, e))?;
        let mut coeffs = out.coeffs().to_vec();
        coeffs[g] = coeffs[g].add(&coeff(c)?);
        out = GroupRingElem::new(group.clone(), coeffs);
    }
    Ok(out)
}

pub fn lambda_elem(
    source: &str,
    ctx: &Context,
    group: &Group,
    terms: &[(String, Vec<String>)],
) -> Result<LambdaGElem, CliError> {
    let zero = IwasawaSeries::from_ints(ctx.p, ctx.precision, ctx.series, &[]);
    let mut coeffs = vec![zero.clone(); group.order()];
    for (word, series) in terms {
        let g = group.parse_word(word).map_err(|e| in_source(source, word, e))?;
        coeffs[g] = coeffs[g].add(&ctx.series_of(source, series)?);
    }
    Ok(GroupRingElem::new(group.clone(), coeffs))
}

pub fn square_matrix<T, R: Ring>(
    rows: &[Vec<T>],
    mut entry: impl FnMut(&T) -> Result<R, CliError>,
) -> Result<Matrix<R>, CliError> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!("matrix must be square and non-empty, got {n} rows")));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(&mut entry).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(parsed))
}
