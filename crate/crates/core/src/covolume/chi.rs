use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::closed_forms::c_of_r_at;
use super::spec::GroupSpec;
use crate::error::{Error, Result};
use crate::exact::{ExactRational, RealInterval};
use crate::localdata::xi_order;
use crate::numberfields::FieldDescriptor;
use crate::zeta::{dedekind_zeta_negative_with, dedekind_zeta_positive, ZetaOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaMode {
    /// Special values at negative odd integers; the result is rational.
    Exact,
    /// Certified enclosures of `ζ_k(2i)`; the result is an interval.
    Enclosure,
}

/// A covolume: exact, or an enclosure with the rational it should contain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiValue {
    Exact(ExactRational),
    Enclosure {
        interval: RealInterval,
        candidate: Option<ExactRational>,
    },
}

impl ChiValue {
    /// The exact value, or the reconstructed candidate.
    pub fn rational(&self) -> Option<&ExactRational> {
        match self {
            ChiValue::Exact(q) => Some(q),
            ChiValue::Enclosure { candidate, .. } => candidate.as_ref(),
        }
    }

    pub fn interval(&self, prec: u32) -> RealInterval {
        match self {
            ChiValue::Exact(q) => RealInterval::from_rational(q, prec),
            ChiValue::Enclosure { interval, .. } => interval.clone(),
        }
    }

    fn scale_down(&self, n: &BigInt) -> ChiValue {
        let d = ExactRational::from_integer(n.clone());
        match self {
            ChiValue::Exact(q) => ChiValue::Exact(q / &d),
            ChiValue::Enclosure {
                interval,
                candidate,
            } => {
                let p = interval.precision();
                ChiValue::Enclosure {
                    interval: interval
                        .checked_div(&RealInterval::from_rational(&d, p))
                        .expect("index bound ≥ 1"),
                    candidate: candidate.as_ref().map(|c| c / &d),
                }
            }
        }
    }
}

#[serde_with::serde_as]
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiResult {
    pub chi_principal: ChiValue,
    /// Bound on the index of the principal group in its normalizer.
    #[serde_as(as = "serde_with::DisplayFromStr")]
    pub index_bound: BigInt,
    /// `chi_principal / index_bound`.
    pub chi_maximal_lower: ChiValue,
    pub trace: Vec<String>,
}

/// `h_k · 2^{d + #T_ns} · Π_{v∈T} #Ξ_θv`.
pub fn index_bound(spec: &GroupSpec) -> BigInt {
    let f = spec.field();
    let xi: BigInt = spec
        .bad_places()
        .iter()
        .map(|p| BigInt::from(xi_order(p)))
        .product();
    BigInt::from(f.class_number())
        * BigInt::from(2).pow(f.degree() + spec.nonsplit_count() as u32)
        * xi
}

/// `D^{r² + r/2}` as an interval.
pub(crate) fn discriminant_power(field: &FieldDescriptor, r: u32, prec: u32) -> RealInterval {
    let d = RealInterval::from_integer(field.discriminant().clone(), prec);
    let whole = d.powi(i64::from(r * r + r / 2));
    if r % 2 == 0 {
        whole
    } else {
        &whole * &d.sqrt()
    }
}

/// `Π_{i=1}^{r} ζ_k(2i)` as an enclosure.
pub fn euler_factor(field: &FieldDescriptor, r: u32, opts: &ZetaOptions) -> Result<RealInterval> {
    let mut e = RealInterval::from_integer(1, opts.precision_bits);
    for i in 1..=r {
        let z = dedekind_zeta_positive(field, 2 * i, opts)?;
        e = &e * z.enclosure.as_ref().expect("positive values carry enclosures");
    }
    Ok(e)
}

/// `4 · Π |ζ_k(1-2i)| / 2^{rd} · Π λ_v`.
fn chi_exact(spec: &GroupSpec, opts: &ZetaOptions, trace: &mut Vec<String>) -> Result<ExactRational> {
    let f = spec.field();
    let r = spec.rank();
    let mut prod = ExactRational::one();
    for i in 1..=r {
        let z = dedekind_zeta_negative_with(f, i, opts)?;
        let v = z.exact.expect("negative values are exact");
        trace.push(format!("ζ_k({}) = {v} [{:?}]", 1 - 2 * i64::from(i), z.method));
        prod = prod * v.abs();
    }
    let lambda = spec.lambda_product()?;
    trace.push(format!("Π λ_v = {lambda}"));
    Ok(ExactRational::from_integer(4) * prod * lambda
        / ExactRational::from_integer(BigInt::from(2).pow(r * f.degree())))
}

/// `c_∞ · D^{dim G/2} · C(r)^d · τ · Π ζ_k(2i) · Π λ_v`.
fn chi_enclosure(
    spec: &GroupSpec,
    opts: &ZetaOptions,
    trace: &mut Vec<String>,
) -> Result<RealInterval> {
    let f = spec.field();
    let r = spec.rank();
    let work = opts.precision_bits + 32;
    let inner = ZetaOptions {
        precision_bits: work,
        ..opts.clone()
    };
    let e = euler_factor(f, r, &inner)?;
    trace.push(format!("Π ζ_k(2i) ∈ {}", e.to_decimal(20)));
    let lambda = RealInterval::from_rational(&spec.lambda_product()?, work);
    let chi = &(&(&RealInterval::from_integer(4, work) * &discriminant_power(f, r, work))
        * &c_of_r_at(r, work).powi(i64::from(f.degree())))
        * &(&e * &lambda);
    Ok(chi.with_precision(opts.precision_bits))
}

/// χ of the principal arithmetic subgroup described by `spec`.
pub fn chi_principal(spec: &GroupSpec, mode: ZetaMode) -> Result<ChiResult> {
    chi_principal_with(spec, mode, &ZetaOptions::default())
}

pub fn chi_principal_with(spec: &GroupSpec, mode: ZetaMode, opts: &ZetaOptions) -> Result<ChiResult> {
    let mut trace = vec![format!(
        "r = {}, k = {}, T = [{}]",
        spec.rank(),
        spec.field().label(),
        spec.bad_places()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )];
    let value = match mode {
        ZetaMode::Exact => ChiValue::Exact(chi_exact(spec, opts, &mut trace)?),
        ZetaMode::Enclosure => {
            let interval = chi_enclosure(spec, opts, &mut trace)?;
            let candidate = match chi_exact(spec, opts, &mut trace) {
                Ok(q) => {
                    if !interval.contains(&q) {
                        return Err(Error::InconsistentModes(format!(
                            "{q} is outside {interval}"
                        )));
                    }
                    Some(q)
                }
                Err(e) => {
                    trace.push(format!("no exact candidate: {e}"));
                    None
                }
            };
            ChiValue::Enclosure {
                interval,
                candidate,
            }
        }
    };
    let index = index_bound(spec);
    trace.push(format!("index bound {index}"));
    Ok(ChiResult {
        chi_maximal_lower: value.scale_down(&index),
        chi_principal: value,
        index_bound: index,
        trace,
    })
}
