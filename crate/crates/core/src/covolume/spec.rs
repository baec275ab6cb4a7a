use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::ExactRational;
use crate::localdata::{
    lambda_factor, parity_check, required_nonsplit_parity, Form, LocalPlaceData, ParahoricType,
};
use crate::numberfields::arith::prime_power;
use crate::numberfields::FieldDescriptor;

/// Default norm bound for the bad-place search.
pub const DEFAULT_NORM_BOUND: u64 = 100;

/// A principal arithmetic subgroup: rank, field and the places `T` where the
/// parahoric is not hyperspecial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    rank: u32,
    field: FieldDescriptor,
    bad_places: Vec<LocalPlaceData>,
}

impl GroupSpec {
    /// Checks ranks, the parity condition and that `T` fits inside the
    /// places of the field.
    pub fn new(rank: u32, field: FieldDescriptor, bad_places: Vec<LocalPlaceData>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidArgument(format!("rank {rank} < 2")));
        }
        for p in &bad_places {
            if p.parahoric.rank() != rank {
                return Err(Error::IllegalType(format!(
                    "{p} has rank {}, expected {rank}",
                    p.parahoric.rank()
                )));
            }
        }
        let nonsplit = bad_places.iter().filter(|p| p.is_nonsplit()).count();
        if !parity_check(rank, field.degree(), nonsplit) {
            return Err(Error::ParityViolation {
                rank,
                degree: field.degree(),
                nonsplit,
            });
        }
        let mut per_q: HashMap<u64, usize> = HashMap::new();
        for p in &bad_places {
            *per_q.entry(p.q).or_default() += 1;
        }
        for (&q, &want) in &per_q {
            let have = places_of_norm(&field, q)?;
            if want > have {
                return Err(Error::InvalidArgument(format!(
                    "{} has {have} place(s) of norm {q}, T lists {want}",
                    field.label()
                )));
            }
        }
        Ok(GroupSpec {
            rank,
            field,
            bad_places,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn bad_places(&self) -> &[LocalPlaceData] {
        &self.bad_places
    }

    /// `#T_ns`.
    pub fn nonsplit_count(&self) -> usize {
        self.bad_places.iter().filter(|p| p.is_nonsplit()).count()
    }

    /// Groups over ℚ are non-cocompact, all others cocompact.
    pub fn is_cocompact(&self) -> bool {
        self.field.degree() >= 2
    }

    /// `Π_{v∈T} λ_v`.
    pub fn lambda_product(&self) -> Result<ExactRational> {
        self.bad_places
            .iter()
            .map(|p| lambda_factor(p, self.rank))
            .product()
    }
}

fn places_of_norm(field: &FieldDescriptor, q: u64) -> Result<usize> {
    let (p, f) =
        prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
    Ok(field
        .place_splitting(p)?
        .factors
        .iter()
        .filter(|&&(g, _)| g == f)
        .count())
}

/// The set `T` giving the smallest χ for `(field, r)` subject to parity.
///
/// Empty when parity holds without bad places. Otherwise a single nonsplit
/// place with the smallest λ over residue sizes `q ≤ norm_bound`; ties go
/// to the smaller `q`, then to the earlier type in table order.
pub fn minimal_bad_places(
    field: &FieldDescriptor,
    r: u32,
    norm_bound: u64,
) -> Result<Vec<LocalPlaceData>> {
    if required_nonsplit_parity(r, field.degree()) == 0 {
        return Ok(Vec::new());
    }
    let mut best: Option<(ExactRational, LocalPlaceData)> = None;
    for q in 2..=norm_bound {
        if prime_power(q).is_none() || places_of_norm(field, q)? == 0 {
            continue;
        }
        for t in ParahoricType::all(r) {
            if t.form() != Form::Nonsplit {
                continue;
            }
            let place = LocalPlaceData::new(q, t)?;
            let l = lambda_factor(&place, r)?;
            if best.as_ref().map_or(true, |(b, _)| l < *b) {
                best = Some((l, place));
            }
        }
    }
    best.map(|(_, p)| vec![p]).ok_or_else(|| {
        Error::NoAdmissibleConfiguration(format!(
            "{} has no place of norm ≤ {norm_bound}",
            field.label()
        ))
    })
}

/// The group realizing the minimal-λ configuration over `field`.
pub fn minimal_group(field: &FieldDescriptor, r: u32) -> Result<GroupSpec> {
    let t = minimal_bad_places(field, r, DEFAULT_NORM_BOUND)?;
    GroupSpec::new(r, field.clone(), t)
}
