use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numberfields::arith::prime_power;

/// Split (Δ₁) or nonsplit (Δ₂) form of a group of type B_r over a local field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Split,
    Nonsplit,
}

/// Vertices removed from the local Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeletedVertex {
    /// `{α_i}`.
    Single(u32),
    /// `{α₀, α₁}` (split form only).
    ZeroOne,
}

/// A maximal parahoric type, one row of the λ-factor table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParahoricType {
    form: Form,
    vertex: DeletedVertex,
    rank: u32,
}

impl ParahoricType {
    /// Validates the vertex for the form and rank. The split types `{α₀}`
    /// and `{α₁}` give conjugate subgroups; `{α₁}` is stored as `{α₀}`.
    pub fn new(form: Form, vertex: DeletedVertex, rank: u32) -> Result<Self> {
        if rank < 2 {
            return Err(Error::IllegalType(format!("rank {rank} < 2")));
        }
        let vertex = match (form, vertex) {
            (Form::Split, DeletedVertex::Single(1)) => DeletedVertex::Single(0),
            (_, v) => v,
        };
        let legal = match (form, vertex) {
            (Form::Split, DeletedVertex::ZeroOne) => true,
            (Form::Split, DeletedVertex::Single(i)) => i == 0 || (2..=rank).contains(&i),
            (Form::Nonsplit, DeletedVertex::ZeroOne) => false,
            (Form::Nonsplit, DeletedVertex::Single(i)) => i < rank,
        };
        if !legal {
            return Err(Error::IllegalType(format!(
                "{} is not a maximal type for rank {rank}",
                describe(form, vertex)
            )));
        }
        Ok(ParahoricType { form, vertex, rank })
    }

    pub fn split(vertex: u32, rank: u32) -> Result<Self> {
        ParahoricType::new(Form::Split, DeletedVertex::Single(vertex), rank)
    }

    pub fn split_zero_one(rank: u32) -> Result<Self> {
        ParahoricType::new(Form::Split, DeletedVertex::ZeroOne, rank)
    }

    pub fn nonsplit(vertex: u32, rank: u32) -> Result<Self> {
        ParahoricType::new(Form::Nonsplit, DeletedVertex::Single(vertex), rank)
    }

    /// The hyperspecial type Δ₁\{α₀}, the standard choice at almost all places.
    pub fn hyperspecial(rank: u32) -> Result<Self> {
        ParahoricType::split(0, rank)
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn vertex(&self) -> DeletedVertex {
        self.vertex
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn is_split(&self) -> bool {
        self.form == Form::Split
    }

    pub fn is_hyperspecial(&self) -> bool {
        self.form == Form::Split && self.vertex == DeletedVertex::Single(0)
    }

    /// Every legal type for rank `r`, in table order.
    pub fn all(rank: u32) -> Vec<ParahoricType> {
        let mut out = vec![
            DeletedVertex::Single(0),
            DeletedVertex::ZeroOne,
        ];
        out.extend((2..rank).map(DeletedVertex::Single));
        out.push(DeletedVertex::Single(rank));
        let mut types: Vec<_> = out
            .into_iter()
            .map(|v| ParahoricType::new(Form::Split, v, rank).expect("legal"))
            .collect();
        types.extend((0..rank).map(|i| ParahoricType::nonsplit(i, rank).expect("legal")));
        types
    }

    /// Position in table order (row, then vertex).
    pub fn table_position(&self) -> (u32, u32) {
        let r = self.rank;
        match (self.form, self.vertex) {
            (Form::Split, DeletedVertex::Single(0)) => (1, 0),
            (Form::Split, DeletedVertex::ZeroOne) => (2, 0),
            (Form::Split, DeletedVertex::Single(i)) if i < r => (3, i),
            (Form::Split, DeletedVertex::Single(_)) => (4, 0),
            (Form::Nonsplit, DeletedVertex::Single(0)) => (5, 0),
            (Form::Nonsplit, DeletedVertex::Single(i)) if i + 1 < r => (6, i),
            (Form::Nonsplit, _) => (7, 0),
        }
    }
}

fn describe(form: Form, vertex: DeletedVertex) -> String {
    let d = match form {
        Form::Split => "Δ1",
        Form::Nonsplit => "Δ2",
    };
    match vertex {
        DeletedVertex::Single(i) => format!("{d}\\{{α{i}}}"),
        DeletedVertex::ZeroOne => format!("{d}\\{{α0,α1}}"),
    }
}

impl fmt::Display for ParahoricType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&describe(self.form, self.vertex))
    }
}

impl fmt::Display for DeletedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeletedVertex::Single(i) => write!(f, "{i}"),
            DeletedVertex::ZeroOne => f.write_str("0,1"),
        }
    }
}

impl FromStr for DeletedVertex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.replace(' ', "") == "0,1" {
            return Ok(DeletedVertex::ZeroOne);
        }
        s.parse()
            .map(DeletedVertex::Single)
            .map_err(|_| Error::IllegalType(format!("bad vertex `{s}`")))
    }
}

#[derive(Serialize, Deserialize)]
struct TypeRepr {
    form: Form,
    vertex: String,
    rank: u32,
}

impl Serialize for ParahoricType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TypeRepr {
            form: self.form,
            vertex: self.vertex.to_string(),
            rank: self.rank,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ParahoricType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = TypeRepr::deserialize(deserializer)?;
        let v: DeletedVertex = r.vertex.parse().map_err(serde::de::Error::custom)?;
        ParahoricType::new(r.form, v, r.rank).map_err(serde::de::Error::custom)
    }
}

/// A place in the set T: its residue field size and parahoric type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalPlaceData {
    pub q: u64,
    #[serde(rename = "type")]
    pub parahoric: ParahoricType,
}

impl LocalPlaceData {
    pub fn new(q: u64, parahoric: ParahoricType) -> Result<Self> {
        if prime_power(q).is_none() {
            return Err(Error::InvalidArgument(format!(
                "residue field size {q} is not a prime power"
            )));
        }
        Ok(LocalPlaceData { q, parahoric })
    }

    pub fn is_nonsplit(&self) -> bool {
        !self.parahoric.is_split()
    }
}

impl fmt::Display for LocalPlaceData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} {}", self.q, self.parahoric)
    }
}
