use std::collections::{HashMap, HashSet};
use std::fmt;
use std::io::{BufRead, Write};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::arith::prime_power;
use super::poly::{self, exact_sqrt, factor_degrees_mod_p};
use crate::error::{Error, Result};

/// Where a splitting pattern came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplittingSource {
    /// Factorization of the defining polynomial mod p (Dedekind–Kummer).
    Factorization,
    /// Supplied by the field table for a prime dividing the index.
    Override,
}

/// Decomposition of a rational prime in a field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingType {
    pub prime: u64,
    /// `(residue degree f, ramification index e)` per prime above `p`, sorted.
    pub factors: Vec<(u32, u32)>,
    pub certified: bool,
    pub source: SplittingSource,
}

impl SplittingType {
    /// Residue field sizes `p^f` of the places above `p`.
    pub fn residue_sizes(&self) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&(f, _)| self.prime.pow(f))
            .collect()
    }

    pub fn is_ramified(&self) -> bool {
        self.factors.iter().any(|&(_, e)| e > 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingOverride {
    pub p: u64,
    pub factors: Vec<(u32, u32)>,
}

/// One line of the field table.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldRecord {
    label: String,
    degree: u32,
    disc: u64,
    h: u64,
    poly: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    splitting_overrides: Vec<SplittingOverride>,
}

type SplitCache = Arc<Mutex<HashMap<u64, SplittingType>>>;

/// A totally real number field as read from a field table.
#[derive(Clone, Serialize, Deserialize)]
#[serde(into = "FieldRecord", try_from = "FieldRecord")]
pub struct FieldDescriptor {
    label: String,
    degree: u32,
    discriminant: BigInt,
    class_number: u64,
    defining_polynomial: Vec<BigInt>,
    splitting_overrides: Vec<SplittingOverride>,
    index: BigInt,
    cache: SplitCache,
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label
            && self.degree == other.degree
            && self.discriminant == other.discriminant
            && self.class_number == other.class_number
            && self.defining_polynomial == other.defining_polynomial
            && self.splitting_overrides == other.splitting_overrides
    }
}

impl Eq for FieldDescriptor {}

impl fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldDescriptor")
            .field("label", &self.label)
            .field("degree", &self.degree)
            .field("discriminant", &self.discriminant)
            .field("class_number", &self.class_number)
            .field("defining_polynomial", &self.defining_polynomial)
            .finish()
    }
}

impl FieldDescriptor {
    /// Build and validate a descriptor.
    pub fn new(
        label: impl Into<String>,
        degree: u32,
        discriminant: impl Into<BigInt>,
        class_number: u64,
        defining_polynomial: Vec<BigInt>,
        splitting_overrides: Vec<SplittingOverride>,
    ) -> Result<Self> {
        let label = label.into();
        let discriminant = discriminant.into();
        let bad = |m: String| Error::InvariantViolation(format!("field {label}: {m}"));
        if degree == 0 {
            return Err(bad("degree must be positive".into()));
        }
        if defining_polynomial.len() != degree as usize + 1 {
            return Err(bad(format!(
                "polynomial has {} coefficients, expected {}",
                defining_polynomial.len(),
                degree + 1
            )));
        }
        if !defining_polynomial.last().is_some_and(|c| c.is_one()) {
            return Err(bad("polynomial is not monic".into()));
        }
        if !discriminant.is_positive() {
            return Err(bad("discriminant must be positive".into()));
        }
        if class_number == 0 {
            return Err(bad("class number must be positive".into()));
        }
        if degree == 1 && !discriminant.is_one() {
            return Err(bad("a degree-1 field has discriminant 1".into()));
        }
        let pd = poly::discriminant(&defining_polynomial);
        if degree == 2 && !pd.is_positive() {
            return Err(bad("quadratic polynomial is not totally real".into()));
        }
        let (q, r) = pd.abs().div_rem(&discriminant);
        let index = match exact_sqrt(&q) {
            Some(i) if r.is_zero() && pd.is_positive() => i,
            _ => {
                return Err(bad(format!(
                    "polynomial discriminant {pd} is not a square multiple of {discriminant}"
                )))
            }
        };
        for o in &splitting_overrides {
            let sum: u32 = o.factors.iter().map(|&(f, e)| f * e).sum();
            if sum != degree {
                return Err(bad(format!(
                    "override at p = {} has Σ e·f = {sum}, expected {degree}",
                    o.p
                )));
            }
        }
        Ok(FieldDescriptor {
            label,
            degree,
            discriminant,
            class_number,
            defining_polynomial,
            splitting_overrides,
            index,
            cache: Arc::default(),
        })
    }

    /// The field ℚ.
    pub fn rationals() -> Self {
        FieldDescriptor::new(
            "1.1.1.1",
            1,
            1,
            1,
            vec![BigInt::zero(), BigInt::one()],
            vec![],
        )
        .expect("valid")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    pub fn class_number(&self) -> u64 {
        self.class_number
    }

    pub fn defining_polynomial(&self) -> &[BigInt] {
        &self.defining_polynomial
    }

    pub fn splitting_overrides(&self) -> &[SplittingOverride] {
        &self.splitting_overrides
    }

    /// `[O_k : ℤ[θ]]`, the square root of disc(poly)/D_k.
    pub fn polynomial_index(&self) -> &BigInt {
        &self.index
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    /// Splitting of `p` read off the defining polynomial.
    ///
    /// The result is `certified` unless `p` divides the polynomial index, in
    /// which case the factor pattern may differ from the true decomposition.
    pub fn splitting_type(&self, p: u64) -> SplittingType {
        if let Some(s) = self.cache.lock().expect("splitting cache poisoned").get(&p) {
            return s.clone();
        }
        let s = SplittingType {
            prime: p,
            factors: factor_degrees_mod_p(&self.defining_polynomial, p),
            certified: !(&self.index % BigInt::from(p)).is_zero(),
            source: SplittingSource::Factorization,
        };
        self.cache
            .lock()
            .expect("splitting cache poisoned")
            .insert(p, s.clone());
        s
    }

    /// The true decomposition of `p`: a certified factorization, or the
    /// table's override for an index prime.
    pub fn place_splitting(&self, p: u64) -> Result<SplittingType> {
        let s = self.splitting_type(p);
        if s.certified {
            return Ok(s);
        }
        match self.splitting_overrides.iter().find(|o| o.p == p) {
            Some(o) => {
                let mut factors = o.factors.clone();
                factors.sort_unstable();
                Ok(SplittingType {
                    prime: p,
                    factors,
                    certified: true,
                    source: SplittingSource::Override,
                })
            }
            None => Err(Error::UncertifiedPrime {
                label: self.label.clone(),
                prime: p,
            }),
        }
    }

    /// Does the field have a prime ideal of norm `q`?
    pub fn has_place_of_residue_size(&self, q: u64, prime_bound: u64) -> Result<bool> {
        let (p, f) = prime_power(q)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        if p > prime_bound {
            return Err(Error::InvalidArgument(format!(
                "prime {p} exceeds the bound {prime_bound}"
            )));
        }
        Ok(self
            .place_splitting(p)?
            .factors
            .iter()
            .any(|&(g, _)| g == f))
    }

    fn to_record(&self) -> FieldRecord {
        FieldRecord {
            label: self.label.clone(),
            degree: self.degree,
            disc: self.discriminant.to_u64().expect("table discriminants fit in u64"),
            h: self.class_number,
            poly: self
                .defining_polynomial
                .iter()
                .map(|c| c.to_i64().expect("table coefficients fit in i64"))
                .collect(),
            splitting_overrides: self.splitting_overrides.clone(),
        }
    }

    /// The record as one JSON line (no trailing newline).
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("serializable")
    }
}

impl From<FieldDescriptor> for FieldRecord {
    fn from(f: FieldDescriptor) -> Self {
        f.to_record()
    }
}

impl TryFrom<FieldRecord> for FieldDescriptor {
    type Error = Error;
    fn try_from(rec: FieldRecord) -> Result<Self> {
        FieldDescriptor::new(
            rec.label,
            rec.degree,
            rec.disc,
            rec.h,
            rec.poly.into_iter().map(BigInt::from).collect(),
            rec.splitting_overrides,
        )
    }
}

fn sort_key(f: &FieldDescriptor) -> (u32, BigInt, String) {
    (f.degree, f.discriminant.clone(), f.label.clone())
}

/// Parse a JSON Lines field table.
///
/// Blank lines and lines starting with `#` are skipped. The result is sorted
/// by (degree, discriminant, label).
pub fn ingest_field_table(source: impl BufRead) -> Result<Vec<FieldDescriptor>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in source.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let rec: FieldRecord = serde_json::from_str(t).map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        if !seen.insert(rec.label.clone()) {
            return Err(Error::DuplicateLabel(rec.label));
        }
        out.push(FieldDescriptor::try_from(rec)?);
    }
    out.sort_by_key(sort_key);
    Ok(out)
}

/// Write descriptors in the table format, one record per line.
pub fn serialize_field_table(fields: &[FieldDescriptor], mut sink: impl Write) -> std::io::Result<()> {
    for f in fields {
        writeln!(sink, "{}", f.to_json_line())?;
    }
    Ok(())
}

const BUNDLED: &str = include_str!("../../../../data/totally_real_fields.jsonl");

/// The bundled table: ℚ and every totally real field of degree 2..6 inside
/// the discriminant ranges for χ ≤ 24.
pub fn bundled_fields() -> &'static [FieldDescriptor] {
    static TABLE: OnceLock<Vec<FieldDescriptor>> = OnceLock::new();
    TABLE.get_or_init(|| ingest_field_table(BUNDLED.as_bytes()).expect("bundled table is valid"))
}

/// Look up a field in the bundled table by label.
pub fn bundled_field(label: &str) -> Option<&'static FieldDescriptor> {
    bundled_fields().iter().find(|f| f.label == label)
}

/// The real quadratic field of discriminant `d` from the bundled table.
pub fn bundled_quadratic(d: u64) -> Option<&'static FieldDescriptor> {
    bundled_fields()
        .iter()
        .find(|f| f.degree == 2 && f.discriminant == BigInt::from(d))
}
