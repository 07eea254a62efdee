//! Three-valued verdicts and self-validating witnesses.

use serde_json::{json, Map, Value};

use crate::json::elem_to_json;
use crate::ring::{Elem, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refutation {
    /// Every candidate in a finite ring was tried.
    ExhaustiveEnumeration,
    /// An exact criterion rules the property out.
    AnalyticOracle,
}

impl Refutation {
    pub fn as_str(self) -> &'static str {
        match self {
            Refutation::ExhaustiveEnumeration => "exhaustive-enumeration",
            Refutation::AnalyticOracle => "analytic-oracle",
        }
    }
}

/// Outcome of a witness search. `No` is only produced by exhaustion of a
/// finite ring or by an exact criterion; a bounded search that runs dry
/// answers `Unknown`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Yes(W),
    No(Refutation),
    Unknown { bound: u64 },
}

impl<W> Verdict<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self {
            Verdict::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Yes(w) => Verdict::Yes(f(w)),
            Verdict::No(r) => Verdict::No(r),
            Verdict::Unknown { bound } => Verdict::Unknown { bound },
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No(_) => "no",
            Verdict::Unknown { .. } => "unknown",
        }
    }
}

pub trait Witness {
    /// Re-check the witness using ring arithmetic only.
    fn validate(&self, ring: &Ring) -> bool;

    fn to_json(&self, ring: &Ring) -> Value;
}

/// `{property, verdict, witness?, bound?, refutation?}`
pub fn verdict_json<W: Witness>(property: &str, ring: &Ring, v: &Verdict<W>) -> Value {
    let mut m = Map::new();
    m.insert("property".into(), json!(property));
    m.insert("verdict".into(), json!(v.label()));
    match v {
        Verdict::Yes(w) => {
            m.insert("witness".into(), w.to_json(ring));
        }
        Verdict::No(r) => {
            m.insert("refutation".into(), json!(r.as_str()));
        }
        Verdict::Unknown { bound } => {
            m.insert("bound".into(), json!(bound.to_string()));
        }
    }
    Value::Object(m)
}

fn is_inverse_pair(ring: &Ring, x: &Elem, y: &Elem) -> bool {
    ring.is_one(&ring.mul(x, y)) && ring.is_one(&ring.mul(y, x))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitWitness {
    pub element: Elem,
    pub inverse: Elem,
}

impl Witness for UnitWitness {
    fn validate(&self, ring: &Ring) -> bool {
        is_inverse_pair(ring, &self.element, &self.inverse)
    }

    fn to_json(&self, ring: &Ring) -> Value {
        json!({
            "element": elem_to_json(ring, &self.element),
            "inverse": elem_to_json(ring, &self.inverse),
        })
    }
}

/// `a·u·a = a` for the unit `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitRegularWitness {
    pub element: Elem,
    pub inner_unit: Elem,
    pub inner_unit_inverse: Elem,
}

impl UnitRegularWitness {
    /// The same certificate for the transposed matrix: `Aᵀ·uᵀ·Aᵀ = (A·u·A)ᵀ`.
    pub fn transpose(&self, ring: &Ring) -> Self {
        UnitRegularWitness {
            element: ring.transpose(&self.element),
            inner_unit: ring.transpose(&self.inner_unit),
            inner_unit_inverse: ring.transpose(&self.inner_unit_inverse),
        }
    }
}

impl Witness for UnitRegularWitness {
    fn validate(&self, ring: &Ring) -> bool {
        is_inverse_pair(ring, &self.inner_unit, &self.inner_unit_inverse)
            && ring.mul_all([&self.element, &self.inner_unit, &self.element]) == self.element
    }

    fn to_json(&self, ring: &Ring) -> Value {
        json!({
            "element": elem_to_json(ring, &self.element),
            "inner_unit": elem_to_json(ring, &self.inner_unit),
            "inner_unit_inverse": elem_to_json(ring, &self.inner_unit_inverse),
        })
    }
}

/// `a = e + u`, `e² = e`, `u` a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleanWitness {
    pub element: Elem,
    pub idempotent: Elem,
    pub unit: Elem,
    pub unit_inverse: Elem,
}

impl Witness for CleanWitness {
    fn validate(&self, ring: &Ring) -> bool {
        ring.is_idempotent(&self.idempotent)
            && is_inverse_pair(ring, &self.unit, &self.unit_inverse)
            && ring.add(&self.idempotent, &self.unit) == self.element
    }

    fn to_json(&self, ring: &Ring) -> Value {
        json!({
            "element": elem_to_json(ring, &self.element),
            "idempotent": elem_to_json(ring, &self.idempotent),
            "unit": elem_to_json(ring, &self.unit),
            "unit_inverse": elem_to_json(ring, &self.unit_inverse),
        })
    }
}

/// `a = r + u` with `r` unit-regular and `u` a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClearWitness {
    pub element: Elem,
    pub unit_regular_part: UnitRegularWitness,
    pub unit: Elem,
    pub unit_inverse: Elem,
    /// `r ≠ 0` and `r` is not a unit.
    pub nontrivial: bool,
}

impl ClearWitness {
    pub fn r(&self) -> &Elem {
        &self.unit_regular_part.element
    }
}

pub fn is_nontrivial_part(ring: &Ring, r: &Elem) -> bool {
    !ring.is_zero(r) && !ring.is_unit(r)
}

impl Witness for ClearWitness {
    fn validate(&self, ring: &Ring) -> bool {
        self.unit_regular_part.validate(ring)
            && is_inverse_pair(ring, &self.unit, &self.unit_inverse)
            && ring.add(self.r(), &self.unit) == self.element
            && self.nontrivial == is_nontrivial_part(ring, self.r())
    }

    fn to_json(&self, ring: &Ring) -> Value {
        json!({
            "element": elem_to_json(ring, &self.element),
            "unit_regular_part": self.unit_regular_part.to_json(ring),
            "unit": elem_to_json(ring, &self.unit),
            "unit_inverse": elem_to_json(ring, &self.unit_inverse),
            "nontrivial": self.nontrivial,
        })
    }
}

/// `a = u + v` with both units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGoodWitness {
    pub element: Elem,
    pub first: UnitWitness,
    pub second: UnitWitness,
}

impl Witness for TwoGoodWitness {
    fn validate(&self, ring: &Ring) -> bool {
        self.first.validate(ring)
            && self.second.validate(ring)
            && ring.add(&self.first.element, &self.second.element) == self.element
    }

    fn to_json(&self, ring: &Ring) -> Value {
        json!({
            "element": elem_to_json(ring, &self.element),
            "first": self.first.to_json(ring),
            "second": self.second.to_json(ring),
        })
    }
}

/// `a = e + u + v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCleanWitness {
    pub element: Elem,
    pub idempotent: Elem,
    pub units: TwoGoodWitness,
}

impl Witness for TwoCleanWitness {
    fn validate(&self, ring: &Ring) -> bool {
        ring.is_idempotent(&self.idempotent)
            && self.units.validate(ring)
            && ring.add(&self.idempotent, &self.units.element) == self.element
    }

    fn to_json(&self, ring: &Ring) -> Value {
        json!({
            "element": elem_to_json(ring, &self.element),
            "idempotent": elem_to_json(ring, &self.idempotent),
            "first": self.units.first.to_json(ring),
            "second": self.units.second.to_json(ring),
        })
    }
}

/// `e = a·x` and `1 - e = (1 - a)·y` for an idempotent `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub element: Elem,
    pub idempotent: Elem,
    pub x: Elem,
    pub y: Elem,
}

impl Witness for ExchangeWitness {
    fn validate(&self, ring: &Ring) -> bool {
        let one = ring.one();
        ring.is_idempotent(&self.idempotent)
            && ring.mul(&self.element, &self.x) == self.idempotent
            && ring.mul(&ring.sub(&one, &self.element), &self.y) == ring.sub(&one, &self.idempotent)
    }

    fn to_json(&self, ring: &Ring) -> Value {
        json!({
            "element": elem_to_json(ring, &self.element),
            "idempotent": elem_to_json(ring, &self.idempotent),
            "x": elem_to_json(ring, &self.x),
            "y": elem_to_json(ring, &self.y),
        })
    }
}
