use num_bigint::BigInt;

use super::chi::discriminant_power;
use super::closed_forms::c_of_r_at;
use super::spec::GroupSpec;
use crate::error::{Error, Result};
use crate::exact::{ExactRational, RealInterval};
use crate::localdata::xi_order;
use crate::numberfields::FieldDescriptor;
use crate::zeta::dedekind_zeta_positive_enclosure_at;

/// Working precision for the bound ladder.
pub const BOUND_PRECISION: u32 = 128;

/// `Π ζ_k(2i)` from Euler products over `p ≤ 1000`; only the lower end
/// matters for the bounds, so the cheap path is used for every degree.
fn euler_factor_for_bounds(field: &FieldDescriptor, r: u32) -> Result<RealInterval> {
    let mut e = RealInterval::from_integer(1, BOUND_PRECISION);
    for i in 1..=r {
        e = &e * &dedekind_zeta_positive_enclosure_at(field, 2 * i, 1_000, BOUND_PRECISION)?;
    }
    Ok(e)
}

/// `10²·(π/12)^d·D`, an upper bound for the class number.
pub fn class_number_bound(field: &FieldDescriptor) -> RealInterval {
    class_number_bound_for(
        field.degree(),
        &ExactRational::from_integer(field.discriminant().clone()),
        BOUND_PRECISION,
    )
}

pub fn class_number_bound_for(degree: u32, disc: &ExactRational, prec: u32) -> RealInterval {
    let pi12 = RealInterval::pi(prec)
        .checked_div(&RealInterval::from_integer(12, prec))
        .expect("nonzero");
    &(&RealInterval::from_integer(100, prec) * &pi12.powi(i64::from(degree)))
        * &RealInterval::from_rational(disc, prec)
}

/// `𝓔 · Π λ_v · (Π #Ξ_θv)^{-1} · 2^{-#T_ns}`, which always exceeds 1.
pub fn local_excess_factor(spec: &GroupSpec) -> Result<RealInterval> {
    let prec = BOUND_PRECISION;
    let e = euler_factor_for_bounds(spec.field(), spec.rank())?;
    let xi: BigInt = spec
        .bad_places()
        .iter()
        .map(|p| BigInt::from(xi_order(p)))
        .product();
    let den = xi * BigInt::from(2).pow(spec.nonsplit_count() as u32);
    let local = spec.lambda_product()? / ExactRational::from_integer(den);
    let factor = &e * &RealInterval::from_rational(&local, prec);
    if !factor.certainly_gt_rational(&ExactRational::one()) {
        return Err(Error::InvariantViolation(format!(
            "local factor {factor} is not certainly above 1"
        )));
    }
    Ok(factor)
}

/// Lower bound for χ of any maximal arithmetic subgroup normalizing the
/// principal group of `spec`.
///
/// With `use_exact_h` the class number of the field is used; otherwise it
/// is replaced by [`class_number_bound`].
pub fn chi_lower_bound(spec: &GroupSpec, use_exact_h: bool) -> Result<RealInterval> {
    let prec = BOUND_PRECISION;
    let f = spec.field();
    let r = spec.rank();
    let d = f.degree();
    let factor = local_excess_factor(spec)?;
    let core = &discriminant_power(f, r, prec) * &c_of_r_at(r, prec).powi(i64::from(d));
    let global = if use_exact_h {
        RealInterval::from_rational(
            &ExactRational::new(4, BigInt::from(2).pow(d) * f.class_number()),
            prec,
        )
    } else {
        let pi6 = RealInterval::pi(prec)
            .checked_div(&RealInterval::from_integer(6, prec))
            .expect("nonzero");
        let disc = RealInterval::from_integer(f.discriminant().clone(), prec);
        RealInterval::from_integer(4, prec)
            .checked_div(&(&(&RealInterval::from_integer(100, prec) * &pi6.powi(i64::from(d))) * &disc))
            .expect("positive")
    };
    Ok(&(&global * &core) * &factor)
}

/// `4·D^{r²+r/2}·C(r)^d/(2^d·h)`: a lower bound for χ of every maximal
/// arithmetic subgroup defined over `field`, whatever its local data.
pub fn field_lower_bound(field: &FieldDescriptor, r: u32) -> RealInterval {
    let prec = BOUND_PRECISION;
    let d = field.degree();
    let global = RealInterval::from_rational(
        &ExactRational::new(4, BigInt::from(2).pow(d) * field.class_number()),
        prec,
    );
    &(&global * &discriminant_power(field, r, prec)) * &c_of_r_at(r, prec).powi(i64::from(d))
}
