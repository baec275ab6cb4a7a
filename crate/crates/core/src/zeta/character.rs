use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, bernoulli_polynomial, ExactRational};
use crate::numberfields::arith::{is_fundamental_discriminant, kronecker};

/// `ζ(1 - 2i) = -B_{2i} / 2i`.
pub fn riemann_zeta_negative(i: u32) -> ExactRational {
    assert!(i >= 1, "riemann_zeta_negative needs i >= 1");
    -bernoulli(2 * i) / ExactRational::from(i64::from(2 * i))
}

/// A real Dirichlet character given by its value table mod the conductor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirichletCharacter {
    conductor: u64,
    values: Vec<i8>,
}

impl DirichletCharacter {
    /// The trivial character mod 1, whose L-function is ζ.
    pub fn trivial() -> Self {
        DirichletCharacter {
            conductor: 1,
            values: vec![1],
        }
    }

    /// A character from its table `χ(0), ..., χ(f-1)`; the table must be a
    /// real character mod `f`.
    pub fn from_values(values: Vec<i8>) -> Result<Self> {
        let f = values.len() as u64;
        let bad = |m: &str| Error::InvalidArgument(format!("not a real character mod {f}: {m}"));
        if f == 0 {
            return Err(bad("empty table"));
        }
        for (a, &v) in values.iter().enumerate() {
            let unit = num_integer::gcd(a as u64, f) == 1;
            if !matches!(v, -1..=1) || (v == 0) == unit {
                return Err(bad("values must be ±1 on units and 0 elsewhere"));
            }
        }
        for a in 0..f {
            for b in 0..f {
                if values[((a * b) % f) as usize] != values[a as usize] * values[b as usize] {
                    return Err(bad("not multiplicative"));
                }
            }
        }
        Ok(DirichletCharacter {
            conductor: f,
            values,
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// `χ(n)` for any integer `n`.
    pub fn value(&self, n: i64) -> i8 {
        self.values[n.rem_euclid(self.conductor as i64) as usize]
    }

    pub fn is_even(&self) -> bool {
        self.value(-1) == 1
    }
}

/// The Kronecker character `(D | ·)` of the real quadratic field of
/// discriminant `D`.
pub fn kronecker_character(d: i64) -> Result<DirichletCharacter> {
    if d <= 0 || !is_fundamental_discriminant(d) {
        return Err(Error::NotFundamental(BigInt::from(d)));
    }
    let values = (0..d)
        .map(|a| if a == 0 { 0 } else { kronecker(d, a) as i8 })
        .collect();
    Ok(DirichletCharacter {
        conductor: d as u64,
        values,
    })
}

/// Generalized Bernoulli number `B_{n,χ} = f^{n-1} Σ_{a=1}^{f} χ(a) B_n(a/f)`.
pub fn generalized_bernoulli(chi: &DirichletCharacter, n: u32) -> ExactRational {
    static MEMO: OnceLock<Mutex<HashMap<(Vec<i8>, u32), ExactRational>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (chi.values.clone(), n);
    if let Some(v) = memo.lock().expect("character memo poisoned").get(&key) {
        return v.clone();
    }
    let f = chi.conductor as i64;
    let mut sum = ExactRational::zero();
    for a in 1..=f {
        let c = chi.value(a);
        if c != 0 {
            let b = bernoulli_polynomial(n, &ExactRational::new(a, f));
            sum = if c > 0 { sum + b } else { sum - b };
        }
    }
    let v = sum * ExactRational::from(f).pow(n as i32 - 1);
    memo.lock()
        .expect("character memo poisoned")
        .insert(key, v.clone());
    v
}

/// `L(1 - 2i, χ) = -B_{2i,χ} / 2i` for an even character.
pub fn dirichlet_l_negative(chi: &DirichletCharacter, i: u32) -> Result<ExactRational> {
    assert!(i >= 1, "dirichlet_l_negative needs i >= 1");
    if !chi.is_even() {
        return Err(Error::OddCharacter);
    }
    Ok(-generalized_bernoulli(chi, 2 * i) / ExactRational::from(i64::from(2 * i)))
}
