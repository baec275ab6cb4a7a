use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::analytic::{abelian_zeta_positive_enclosure, euler_product_enclosure};
use super::character::{dirichlet_l_negative, kronecker_character, riemann_zeta_negative};
use super::integrality::integrality_multiple;
use crate::error::{Error, Result};
use crate::exact::{
    rational_reconstruct, round_to_integer, ExactRational, RealInterval, DEFAULT_PRECISION,
};
use crate::numberfields::FieldDescriptor;

/// How a zeta value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaMethod {
    BernoulliExact,
    FunctionalEquationReconstructed,
    EulerProductEnclosure,
    EulerMaclaurinEnclosure,
}

/// A special value `ζ_k(argument)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZetaValue {
    pub argument: i64,
    pub exact: Option<ExactRational>,
    pub enclosure: Option<RealInterval>,
    pub method: ZetaMethod,
}

/// Tuning for the analytic path.
#[derive(Clone, Debug)]
pub struct ZetaOptions {
    pub precision_bits: u32,
    /// Starting prime bound of the Euler product.
    pub prime_bound: u64,
    /// Give up once the Euler product would need primes past this bound.
    pub max_prime_bound: u64,
    /// When set, reconstruct by continued fractions with this denominator
    /// bound instead of through the integrality multiple.
    pub denominator_bound: Option<BigInt>,
}

impl Default for ZetaOptions {
    fn default() -> Self {
        ZetaOptions {
            precision_bits: DEFAULT_PRECISION,
            prime_bound: 10_000,
            max_prime_bound: 20_000_000,
            denominator_bound: None,
        }
    }
}

/// `2·(2i)!·D^{2i}`, the heuristic denominator bound for `ζ_k(1 - 2i)`.
pub fn default_denominator_bound(field: &FieldDescriptor, i: u32) -> BigInt {
    let fact: BigInt = (1..=2 * i).map(BigInt::from).product();
    BigInt::from(2) * fact * field.discriminant().pow(2 * i)
}

/// `ζ_k(s)` for even `s ≥ 2` from the Euler product over `p ≤ prime_bound`.
pub fn dedekind_zeta_positive_enclosure(
    field: &FieldDescriptor,
    s: u32,
    prime_bound: u64,
) -> Result<RealInterval> {
    dedekind_zeta_positive_enclosure_at(field, s, prime_bound, DEFAULT_PRECISION)
}

pub fn dedekind_zeta_positive_enclosure_at(
    field: &FieldDescriptor,
    s: u32,
    prime_bound: u64,
    prec: u32,
) -> Result<RealInterval> {
    if s < 2 || s % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "ζ_k(s) enclosures are for even s ≥ 2, got {s}"
        )));
    }
    if prime_bound < 100 {
        return Err(Error::InvalidArgument(format!(
            "prime bound {prime_bound} is below 100"
        )));
    }
    euler_product_enclosure(field, s, prime_bound, prec)
}

/// The tightest available enclosure of `ζ_k(s)`: Euler–Maclaurin for
/// degree ≤ 2, the Euler product otherwise.
pub fn dedekind_zeta_positive(
    field: &FieldDescriptor,
    s: u32,
    opts: &ZetaOptions,
) -> Result<ZetaValue> {
    if s < 2 || s % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "ζ_k(s) enclosures are for even s ≥ 2, got {s}"
        )));
    }
    let (enclosure, method) =
        match abelian_zeta_positive_enclosure(field, s, opts.precision_bits)? {
            Some(e) => (e, ZetaMethod::EulerMaclaurinEnclosure),
            None => (
                dedekind_zeta_positive_enclosure_at(
                    field,
                    s,
                    opts.prime_bound,
                    opts.precision_bits,
                )?,
                ZetaMethod::EulerProductEnclosure,
            ),
        };
    Ok(ZetaValue {
        argument: i64::from(s),
        exact: None,
        enclosure: Some(enclosure),
        method,
    })
}

/// `(-1)^{d·i}`, the sign of `ζ_k(1 - 2i)`.
pub fn negative_value_sign(degree: u32, i: u32) -> i32 {
    if (degree * i) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `D^{2i-1/2} · (2·(2i-1)!/(2π)^{2i})^d`, the factor taking `ζ_k(2i)` to `|ζ_k(1-2i)|`.
pub fn functional_equation_factor(field: &FieldDescriptor, i: u32, prec: u32) -> RealInterval {
    let work = prec + 32;
    let d = field.degree() as i64;
    let disc = RealInterval::from_integer(field.discriminant().clone(), work);
    let disc_pow = disc
        .powi(2 * i64::from(i))
        .checked_div(&disc.sqrt())
        .expect("positive discriminant");
    let fact: BigInt = (1..2 * i).map(BigInt::from).product();
    let two_pi = &RealInterval::pi(work) * &RealInterval::from_integer(2, work);
    let gamma = RealInterval::from_integer(BigInt::from(2) * fact, work)
        .checked_div(&two_pi.powi(2 * i64::from(i)))
        .expect("positive");
    (&disc_pow * &gamma.powi(d)).with_precision(prec)
}

/// Enclosure of `|ζ_k(1 - 2i)|` from the Euler product of `ζ_k(2i)`.
fn negative_value_enclosure(
    field: &FieldDescriptor,
    i: u32,
    prime_bound: u64,
    prec: u32,
) -> Result<RealInterval> {
    let z = euler_product_enclosure(field, 2 * i, prime_bound, prec)?;
    Ok(&z * &functional_equation_factor(field, i, prec))
}

/// Exact `ζ_k(1 - 2i)`.
///
/// Degree 1 and 2 fields use Bernoulli numbers (with the Kronecker character
/// in the quadratic case); higher degrees map an Euler-product enclosure of
/// `ζ_k(2i)` through the functional equation and recover the rational.
pub fn dedekind_zeta_negative(
    field: &FieldDescriptor,
    i: u32,
    denominator_bound: Option<&BigInt>,
) -> Result<ZetaValue> {
    let opts = ZetaOptions {
        denominator_bound: denominator_bound.cloned(),
        ..ZetaOptions::default()
    };
    dedekind_zeta_negative_with(field, i, &opts)
}

type MemoKey = (Vec<BigInt>, BigInt, u32);

fn memo() -> &'static Mutex<HashMap<MemoKey, ZetaValue>> {
    static MEMO: OnceLock<Mutex<HashMap<MemoKey, ZetaValue>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

pub fn dedekind_zeta_negative_with(
    field: &FieldDescriptor,
    i: u32,
    opts: &ZetaOptions,
) -> Result<ZetaValue> {
    if i == 0 {
        return Err(Error::InvalidArgument("ζ_k(1 - 2i) needs i ≥ 1".into()));
    }
    let argument = 1 - 2 * i64::from(i);
    match field.degree() {
        1 => Ok(ZetaValue {
            argument,
            exact: Some(riemann_zeta_negative(i)),
            enclosure: None,
            method: ZetaMethod::BernoulliExact,
        }),
        2 => {
            let d: i64 = field
                .discriminant()
                .try_into()
                .map_err(|_| Error::NotFundamental(field.discriminant().clone()))?;
            let chi = kronecker_character(d)?;
            Ok(ZetaValue {
                argument,
                exact: Some(riemann_zeta_negative(i) * dirichlet_l_negative(&chi, i)?),
                enclosure: None,
                method: ZetaMethod::BernoulliExact,
            })
        }
        _ => {
            let key = (
                field.defining_polynomial().to_vec(),
                field.discriminant().clone(),
                i,
            );
            if opts.denominator_bound.is_none() {
                if let Some(v) = memo().lock().expect("zeta memo poisoned").get(&key) {
                    return Ok(v.clone());
                }
            }
            let v = reconstruct_negative(field, i, opts)?;
            if opts.denominator_bound.is_none() {
                memo()
                    .lock()
                    .expect("zeta memo poisoned")
                    .insert(key, v.clone());
            }
            Ok(v)
        }
    }
}

fn signed(x: RealInterval, sign: i32) -> RealInterval {
    if sign < 0 {
        -x
    } else {
        x
    }
}

fn reconstruct_negative(field: &FieldDescriptor, i: u32, opts: &ZetaOptions) -> Result<ZetaValue> {
    let sign = negative_value_sign(field.degree(), i);
    let argument = 1 - 2 * i64::from(i);
    let fail = |why: String| {
        Error::ReconstructionFailed(format!("{} at 1 - 2·{i}: {why}", field.label()))
    };
    let s = 2 * i;
    let mut prime_bound = opts.prime_bound;
    let mut prec = opts.precision_bits;

    match &opts.denominator_bound {
        Some(bound) => {
            let mut bound = bound.clone();
            for _ in 0..8 {
                let v = negative_value_enclosure(field, i, prime_bound, prec)?;
                match rational_reconstruct(&v, &bound) {
                    Ok(q) => {
                        let v2 = negative_value_enclosure(field, i, prime_bound * 2, prec * 2)?;
                        if rational_reconstruct(&v2, &bound).as_ref() == Ok(&q) {
                            return Ok(ZetaValue {
                                argument,
                                exact: Some(if sign < 0 { -q } else { q }),
                                enclosure: Some(signed(v2, sign)),
                                method: ZetaMethod::FunctionalEquationReconstructed,
                            });
                        }
                        bound *= 2;
                    }
                    Err(Error::NoRationalInInterval) => bound *= 2,
                    Err(_) => {}
                }
                prime_bound *= 4;
                prec *= 2;
                if prime_bound > opts.max_prime_bound {
                    break;
                }
            }
            Err(fail("continued-fraction reconstruction did not stabilize".into()))
        }
        None => {
            let m = integrality_multiple(s, field.degree(), field.discriminant());
            let scale = ExactRational::from_integer(m.clone());
            let scaled = |pb: u64, pr: u32| -> Result<RealInterval> {
                let v = negative_value_enclosure(field, i, pb, pr)?;
                Ok(&v * &RealInterval::from_rational(&scale, pr))
            };
            loop {
                let x = scaled(prime_bound, prec)?;
                let width = x.width();
                if width.clone() * ExactRational::from(4) < ExactRational::one() {
                    let n = round_to_integer(&x).map_err(|e| fail(e.to_string()))?;
                    let check_bound = prime_bound * 2;
                    let x2 = scaled(check_bound, prec * 2)?;
                    let n2 = round_to_integer(&x2).map_err(|e| fail(e.to_string()))?;
                    if n != n2 {
                        return Err(fail(format!(
                            "precision ladder disagrees ({n} vs {n2} over {m})"
                        )));
                    }
                    let q = ExactRational::new(n2, m);
                    let enclosure = x2
                        .checked_div(&RealInterval::from_rational(&scale, prec * 2))
                        .expect("positive multiple");
                    return Ok(ZetaValue {
                        argument,
                        exact: Some(if sign < 0 { -q } else { q }),
                        enclosure: Some(signed(enclosure, sign)),
                        method: ZetaMethod::FunctionalEquationReconstructed,
                    });
                }
                // the tail error scales like P^{1-s}; aim for width 1/8
                let ratio = (width * ExactRational::from(8)).to_f64();
                let grow = ratio.powf(1.0 / f64::from(s - 1)).max(2.0);
                let next = (prime_bound as f64 * grow * 1.1).ceil();
                if next > opts.max_prime_bound as f64 {
                    return Err(fail(format!(
                        "Euler product would need primes beyond {}",
                        opts.max_prime_bound
                    )));
                }
                prime_bound = next as u64;
            }
        }
    }
}
