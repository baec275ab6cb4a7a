use num_bigint::BigInt;

use crate::exact::{bernoulli, ExactRational, RealInterval, DEFAULT_PRECISION};
use crate::zeta::{dirichlet_l_negative, kronecker_character, riemann_zeta_negative};

/// `(dim G, exponents m_i, c_∞, τ(G))` for `G` of type B_r.
pub fn structure_constants(r: u32) -> (u32, Vec<u32>, u32, u32) {
    (2 * r * r + r, (1..=r).map(|i| 2 * i - 1).collect(), 2, 2)
}

/// `C(r) = Π_{i=1}^{r} (2i-1)!/(2π)^{2i}`.
pub fn c_of_r(r: u32) -> RealInterval {
    c_of_r_at(r, DEFAULT_PRECISION)
}

pub fn c_of_r_at(r: u32, prec: u32) -> RealInterval {
    let work = prec + 32;
    let two_pi = &RealInterval::pi(work) * &RealInterval::from_integer(2, work);
    let mut fact = BigInt::from(1);
    let mut num = BigInt::from(1);
    for i in 1..=r {
        for k in (2 * i - 2).max(1)..=(2 * i - 1) {
            fact *= k;
        }
        num *= &fact;
    }
    let exponent = i64::from(r) * i64::from(r + 1);
    RealInterval::from_integer(num, work)
        .checked_div(&two_pi.powi(exponent))
        .expect("2π > 0")
        .with_precision(prec)
}

/// `|ζ_{ℚ[√5]}(1 - 2i)| = |ζ(1 - 2i)·L(1 - 2i, χ_5)|`.
fn zeta_sqrt5_negative_abs(i: u32) -> ExactRational {
    let chi = kronecker_character(5).expect("5 is fundamental");
    let l = dirichlet_l_negative(&chi, i).expect("χ_5 is even");
    (riemann_zeta_negative(i) * l).abs()
}

/// λ(r): 1 for even r, `(4^r - 1)/2` for odd r.
pub fn compact_lambda(r: u32) -> ExactRational {
    if r % 2 == 0 {
        ExactRational::one()
    } else {
        ExactRational::new(BigInt::from(4).pow(r) - 1, 2)
    }
}

/// λ′(r): 1 for r ≡ 0, 1 (mod 4), `(2^r - 1)/2` otherwise.
pub fn noncompact_lambda(r: u32) -> ExactRational {
    if matches!(r % 4, 0 | 1) {
        ExactRational::one()
    } else {
        ExactRational::new(BigInt::from(2).pow(r) - 1, 2)
    }
}

/// `|χ|` of the smallest compact principal arithmetic orbifold in dimension `2r`.
pub fn chi_closed_form_compact(r: u32) -> ExactRational {
    let prod: ExactRational = (1..=r).map(zeta_sqrt5_negative_abs).product();
    compact_lambda(r) * prod / ExactRational::from_integer(BigInt::from(4).pow(r - 1))
}

/// `|χ|` of the smallest non-compact principal arithmetic orbifold in dimension `2r`.
pub fn chi_closed_form_noncompact(r: u32) -> ExactRational {
    let prod: ExactRational = (1..=r).map(|i| riemann_zeta_negative(i).abs()).product();
    noncompact_lambda(r) * prod * ExactRational::from_integer(2).pow(2 - r as i32)
}

/// 1 for r ≡ 0, 1 (mod 4) and `(2^{2r} - 1)/6` otherwise.
pub fn unimodular_branch_factor(r: u32) -> ExactRational {
    if matches!(r % 4, 0 | 1) {
        ExactRational::one()
    } else {
        ExactRational::new(BigInt::from(2).pow(2 * r) - 1, 6)
    }
}

/// χ of the stabilizer of the odd unimodular lattice `I_{1,2r}`:
/// `4·Π |B_{2i}|/(4i)` times the branch factor.
pub fn chi_unimodular_stabilizer(r: u32) -> ExactRational {
    let prod: ExactRational = (1..=r)
        .map(|i| bernoulli(2 * i).abs() / ExactRational::from_integer(4 * i64::from(i)))
        .product();
    ExactRational::from_integer(4) * prod * unimodular_branch_factor(r)
}

/// `(2π)^r/(1·3·…·(2r-1)) · χ`.
pub fn hyperbolic_volume(chi: &ExactRational, r: u32) -> RealInterval {
    hyperbolic_volume_at(chi, r, DEFAULT_PRECISION)
}

pub fn hyperbolic_volume_at(chi: &ExactRational, r: u32, prec: u32) -> RealInterval {
    let work = prec + 16;
    let two_pi = &RealInterval::pi(work) * &RealInterval::from_integer(2, work);
    let odd: BigInt = (1..=r).map(|i| BigInt::from(2 * i - 1)).product();
    let scale = ExactRational::new(chi.numer().clone(), chi.denom() * odd);
    (&two_pi.powi(i64::from(r)) * &RealInterval::from_rational(&scale, work)).with_precision(prec)
}
