use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::types::{DeletedVertex, Form, LocalPlaceData, ParahoricType};
use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// Finite groups of Lie type appearing as reductive quotients of parahorics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiniteGroup {
    /// `SO_{2m+1}`.
    SoOdd(u32),
    /// `O^+_{2m}`.
    OEvenPlus(u32),
    /// `O^-_{2m}`.
    OEvenMinus(u32),
    Gl1,
    Product(Vec<FiniteGroup>),
}

/// `#Ḡ(𝔽_q)` together with the number of positive roots of `Ḡ`.
#[serde_with::serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroupOrder {
    pub group: FiniteGroup,
    pub q: u64,
    #[serde_as(as = "serde_with::DisplayFromStr")]
    pub order: BigInt,
    pub positive_roots: u64,
}

fn qpow(q: u64, e: u64) -> BigInt {
    BigInt::from(q).pow(e as u32)
}

/// `Π_{i=1}^{n} (q^{2i} - 1)`.
fn even_cyclotomic_product(q: u64, n: u32) -> BigInt {
    (1..=n).map(|i| qpow(q, 2 * u64::from(i)) - 1).product()
}

impl FiniteGroup {
    pub fn order(&self, q: u64) -> BigInt {
        match self {
            FiniteGroup::SoOdd(m) => qpow(q, u64::from(m * m)) * even_cyclotomic_product(q, *m),
            FiniteGroup::OEvenPlus(m) | FiniteGroup::OEvenMinus(m) => {
                assert!(*m >= 1, "O_{{2m}} needs m >= 1");
                let pm = qpow(q, u64::from(*m));
                let middle = if matches!(self, FiniteGroup::OEvenPlus(_)) {
                    pm - 1
                } else {
                    pm + 1
                };
                BigInt::from(2)
                    * qpow(q, u64::from(m * (m - 1)))
                    * middle
                    * even_cyclotomic_product(q, m - 1)
            }
            FiniteGroup::Gl1 => BigInt::from(q) - 1,
            FiniteGroup::Product(parts) => parts.iter().map(|g| g.order(q)).product(),
        }
    }

    /// Number of positive roots of the group over the algebraic closure.
    pub fn positive_roots(&self) -> u64 {
        match self {
            FiniteGroup::SoOdd(m) => u64::from(m * m),
            FiniteGroup::OEvenPlus(m) | FiniteGroup::OEvenMinus(m) => u64::from(m * (m - 1)),
            FiniteGroup::Gl1 => 0,
            FiniteGroup::Product(parts) => parts.iter().map(FiniteGroup::positive_roots).sum(),
        }
    }

    pub fn evaluate(&self, q: u64) -> FiniteGroupOrder {
        FiniteGroupOrder {
            group: self.clone(),
            q,
            order: self.order(q),
            positive_roots: self.positive_roots(),
        }
    }
}

/// The reductive quotient `Ḡ` attached to a maximal type.
pub fn reductive_quotient(t: &ParahoricType) -> FiniteGroup {
    use FiniteGroup::*;
    let r = t.rank();
    match (t.form(), t.vertex()) {
        (Form::Split, DeletedVertex::Single(0)) => SoOdd(r),
        (Form::Split, DeletedVertex::ZeroOne) => Product(vec![Gl1, SoOdd(r - 1)]),
        (Form::Split, DeletedVertex::Single(i)) if i < r => {
            Product(vec![OEvenPlus(i), SoOdd(r - i)])
        }
        (Form::Split, DeletedVertex::Single(_)) => OEvenPlus(r),
        (Form::Nonsplit, DeletedVertex::Single(0)) => Product(vec![OEvenMinus(1), SoOdd(r - 1)]),
        (Form::Nonsplit, DeletedVertex::Single(i)) if i + 1 < r => {
            Product(vec![OEvenMinus(i + 1), SoOdd(r - i - 1)])
        }
        (Form::Nonsplit, _) => OEvenMinus(r),
    }
}

fn check_rank(place: &LocalPlaceData, r: u32) -> Result<()> {
    if place.parahoric.rank() != r {
        return Err(Error::IllegalType(format!(
            "{} was built for rank {}, not {r}",
            place.parahoric,
            place.parahoric.rank()
        )));
    }
    Ok(())
}

/// λ from the closed forms of the λ-factor table.
pub fn lambda_factor(place: &LocalPlaceData, r: u32) -> Result<ExactRational> {
    check_rank(place, r)?;
    let q = place.q;
    let p = |e: u32| qpow(q, u64::from(e));
    let prod = |lo: u32, hi: u32| -> BigInt { (lo..=hi).map(|v| p(2 * v) - 1).product() };
    let two = BigInt::from(2);
    let t = place.parahoric;
    let (num, den) = match (t.form(), t.vertex()) {
        (Form::Split, DeletedVertex::Single(0)) => (BigInt::from(1), BigInt::from(1)),
        (Form::Split, DeletedVertex::ZeroOne) => (p(2 * r) - 1, BigInt::from(q) - 1),
        (Form::Split, DeletedVertex::Single(i)) if i < r => {
            ((p(i) + 1) * prod(i + 1, r), &two * prod(1, r - i))
        }
        (Form::Split, DeletedVertex::Single(_)) => (p(r) + 1, two),
        (Form::Nonsplit, DeletedVertex::Single(0)) => (p(2 * r) - 1, &two * (BigInt::from(q) + 1)),
        (Form::Nonsplit, DeletedVertex::Single(i)) if i + 1 < r => {
            ((p(i + 1) - 1) * prod(i + 2, r), &two * prod(1, r - i - 1))
        }
        (Form::Nonsplit, _) => (p(r) - 1, two),
    };
    Ok(ExactRational::new(num, den))
}

/// λ from first principles:
/// `q^{-N(Ḡ_qs)}·#Ḡ_qs(𝔽_q) / (q^{-N(Ḡ)}·#Ḡ(𝔽_q))` with `Ḡ_qs = SO_{2r+1}`.
pub fn lambda_factor_via_orders(place: &LocalPlaceData, r: u32) -> Result<ExactRational> {
    check_rank(place, r)?;
    let q = place.q;
    let qs = FiniteGroup::SoOdd(r).evaluate(q);
    let g = reductive_quotient(&place.parahoric).evaluate(q);
    let normalized = |o: &FiniteGroupOrder| {
        ExactRational::new(o.order.clone(), qpow(q, o.positive_roots))
    };
    Ok(normalized(&qs) / normalized(&g))
}

/// Upper bound on `#Ξ_θ`: 1 for nonsplit forms and the hyperspecial type, else 2.
pub fn xi_order(place: &LocalPlaceData) -> u32 {
    if place.is_nonsplit() || place.parahoric.is_hyperspecial() {
        1
    } else {
        2
    }
}
