use num_bigint::BigInt;

use crate::exact::{ExactRational, RealInterval};

/// Published lower bounds for the discriminant of a totally real field of degree `d`.
pub fn discriminant_lower_bound(d: u32) -> ExactRational {
    let base = match d {
        0 | 1 => return ExactRational::one(),
        2 => return ExactRational::from_integer(5),
        3 => return ExactRational::from_integer(49),
        4 => ExactRational::from_integer(5),
        5 => ExactRational::new(13, 2),
        6 => ExactRational::new(79, 10),
        7 => ExactRational::new(11051, 1000),
        _ => ExactRational::from_integer(10),
    };
    base.pow(d as i32)
}

/// `(25·χ_max·(2⁶π⁷/6²)^d)^{1/4}`, the largest discriminant a degree-`d`
/// field can have while carrying a manifold with `χ ≤ χ_max`.
pub fn discriminant_upper_bound(chi_max: &ExactRational, d: u32, prec: u32) -> RealInterval {
    let pi = RealInterval::pi(prec);
    let c = (&RealInterval::from_integer(64, prec) * &pi.powi(7))
        .checked_div(&RealInterval::from_integer(36, prec))
        .expect("nonzero");
    let x = &RealInterval::from_rational(&(ExactRational::from_integer(25) * chi_max), prec)
        * &c.powi(i64::from(d));
    x.sqrt().sqrt()
}

/// Degree and floored discriminant bound for every degree admitted by
/// `χ ≤ chi_max`, stopping at the first degree whose bound falls below the
/// discriminant lower bound.
pub fn discriminant_ranges(chi_max: &ExactRational) -> Vec<(u32, BigInt)> {
    assert!(chi_max.is_positive(), "chi_max must be positive");
    let mut out = Vec::new();
    for d in 2.. {
        let mut prec = 128;
        let (y, floor) = loop {
            let y = discriminant_upper_bound(chi_max, d, prec);
            let lo = y.lower().floor();
            if y.certainly_lt_rational(&ExactRational::from_integer(&lo + 1)) {
                break (y, lo);
            }
            prec *= 2;
        };
        if y.certainly_lt_rational(&discriminant_lower_bound(d)) {
            break;
        }
        out.push((d, floor));
    }
    out
}

/// Whether `disc` lies within the admitted range for degree `d`.
pub fn in_ranges(ranges: &[(u32, BigInt)], d: u32, disc: &BigInt) -> bool {
    ranges.iter().any(|(deg, max)| *deg == d && disc <= max)
}
