//! JSON interchange formats.
//!
//! * simplicial complex: `{"n":4,"facets":[[1,2],[1,3]],"void":false}`
//! * relative complex: `{"delta":<complex>,"gamma":<complex>}`
//! * vectors: `{"kind":"f"|"h","d":2,"entries":[0,0,4]}`; a bare array is
//!   accepted on input
//!
//! Integers whose magnitude exceeds [`MAX_SAFE_INTEGER`] (2^53) are written
//! as decimal strings; both forms are accepted on input.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::complex::{RelativeComplex, SimplicialComplex};
use crate::error::Error;
use crate::face::Face;
use crate::vector::{FVector, HVector};

/// Largest integer every JSON reader represents exactly.
pub const MAX_SAFE_INTEGER: i64 = 1 << 53;

/// Version tag emitted at the top level of every CLI document.
pub const SCHEMA_VERSION: u32 = 1;

/// An integer that serializes natively when small and as a string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.abs() <= MAX_SAFE_INTEGER => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Signed(i64),
            Unsigned(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Signed(v) => Ok(JsonInt(BigInt::from(v))),
            Raw::Unsigned(v) => Ok(JsonInt(BigInt::from(v))),
            Raw::Text(t) => t
                .trim()
                .parse::<BigInt>()
                .map(JsonInt)
                .map_err(|_| de::Error::custom(format!("not an integer: {t:?}"))),
        }
    }
}

pub fn to_json_ints(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

pub fn from_json_ints(v: Vec<JsonInt>) -> Vec<BigInt> {
    v.into_iter().map(|x| x.0).collect()
}

/// Serde adapter for `Vec<BigInt>` fields.
pub mod big_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        to_json_ints(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(from_json_ints(Vec::deserialize(d)?))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub n: u32,
    pub facets: Vec<Vec<u32>>,
    #[serde(default)]
    pub void: bool,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexJson {
            n: c.n(),
            facets: c.facets().iter().map(|f| f.vertices().to_vec()).collect(),
            void: c.is_void(),
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(j: ComplexJson) -> Result<Self, Error> {
        if j.void {
            if !j.facets.is_empty() {
                return Err(Error::Precondition(
                    "a void complex cannot list facets".into(),
                ));
            }
            return Ok(SimplicialComplex::void(j.n));
        }
        let facets = j
            .facets
            .into_iter()
            .map(Face::new)
            .collect::<Result<Vec<_>, _>>()?;
        SimplicialComplex::from_facets(j.n, facets)
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ComplexJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        SimplicialComplex::try_from(ComplexJson::deserialize(d)?).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelativeJson {
    delta: SimplicialComplex,
    gamma: SimplicialComplex,
}

impl Serialize for RelativeComplex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RelativeJson {
            delta: self.delta().clone(),
            gamma: self.gamma().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RelativeComplex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = RelativeJson::deserialize(d)?;
        RelativeComplex::new(j.delta, j.gamma).map_err(de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorKind {
    F,
    H,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorJson {
    pub kind: VectorKind,
    pub d: usize,
    pub entries: Vec<JsonInt>,
}

/// Either the tagged object form or a bare integer array.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum VectorInput {
    Tagged(VectorJson),
    Bare(Vec<JsonInt>),
}

impl VectorInput {
    /// Kind, declared `d` (if any) and entries.
    pub fn parts(self) -> (Option<VectorKind>, Option<usize>, Vec<BigInt>) {
        match self {
            VectorInput::Tagged(j) => (Some(j.kind), Some(j.d), from_json_ints(j.entries)),
            VectorInput::Bare(v) => (None, None, from_json_ints(v)),
        }
    }
}

impl Serialize for FVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        VectorJson {
            kind: VectorKind::F,
            d: self.len().saturating_sub(1),
            entries: to_json_ints(self.entries()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (kind, dim, mut entries) = VectorInput::deserialize(d)?.parts();
        if kind == Some(VectorKind::H) {
            return Err(de::Error::custom("expected an f-vector, found kind \"h\""));
        }
        if let Some(dim) = dim {
            if entries.len() > dim + 1 {
                return Err(de::Error::custom(format!(
                    "f-vector with d = {dim} has {} entries",
                    entries.len()
                )));
            }
            entries.resize(dim + 1, BigInt::from(0));
        }
        Ok(FVector::new(entries))
    }
}

impl Serialize for HVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        VectorJson {
            kind: VectorKind::H,
            d: self.d(),
            entries: to_json_ints(self.entries()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (kind, dim, entries) = VectorInput::deserialize(d)?.parts();
        if kind == Some(VectorKind::F) {
            return Err(de::Error::custom("expected an h-vector, found kind \"f\""));
        }
        if let Some(dim) = dim {
            if entries.len() != dim + 1 {
                return Err(de::Error::custom(format!(
                    "h-vector with d = {dim} must have {} entries, found {}",
                    dim + 1,
                    entries.len()
                )));
            }
        }
        Ok(HVector::new(entries))
    }
}

/// Returns true if the integer needs the string encoding.
pub fn needs_string(x: &BigInt) -> bool {
    x.abs() > BigInt::from(MAX_SAFE_INTEGER)
}
