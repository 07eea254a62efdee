//! JSON encoding of elements.
//!
//! Integers and residues are decimal strings (so arbitrary precision
//! survives any JSON reader), pairs are two-element arrays and matrices are
//! arrays of rows. Decoding needs the ring to resolve the shape.

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingKind};

pub fn elem_to_json(ring: &Ring, a: &Elem) -> Value {
    match (ring.kind(), a) {
        (_, Elem::Int(v)) => Value::String(v.to_string()),
        (_, Elem::Res(v)) => Value::String(v.to_string()),
        (RingKind::Product(l, r), Elem::Pair(x, y)) => {
            Value::Array(vec![elem_to_json(l, x), elem_to_json(r, y)])
        }
        (RingKind::Matrix(b, k), Elem::Mat(es)) => Value::Array(
            es.chunks(*k)
                .map(|row| Value::Array(row.iter().map(|e| elem_to_json(b, e)).collect()))
                .collect(),
        ),
        _ => panic!("elem_to_json: {a} is not an element of {ring}"),
    }
}

pub fn elem_from_json(ring: &Ring, v: &Value) -> Result<Elem> {
    let bad = || Error::NotAnElement {
        element: v.to_string(),
        ring: ring.to_string(),
    };
    let e = match (ring.kind(), v) {
        (RingKind::Integers | RingKind::Modular(_), Value::String(s)) => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            let e = ring.from_int(&n);
            // residues must already be canonical
            if let RingKind::Modular(_) = ring.kind() {
                if e.lift() != Some(n) {
                    return Err(bad());
                }
            }
            e
        }
        (RingKind::Product(l, r), Value::Array(xs)) if xs.len() == 2 => {
            Elem::pair(elem_from_json(l, &xs[0])?, elem_from_json(r, &xs[1])?)
        }
        (RingKind::Matrix(b, k), Value::Array(rows)) if rows.len() == *k => {
            let mut es = Vec::with_capacity(k * k);
            for row in rows {
                match row {
                    Value::Array(xs) if xs.len() == *k => {
                        for x in xs {
                            es.push(elem_from_json(b, x)?);
                        }
                    }
                    _ => return Err(bad()),
                }
            }
            Elem::Mat(es)
        }
        _ => return Err(bad()),
    };
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::{parse_element, parse_ring};

    #[test]
    fn matrix_json_mirrors_bracket_syntax() {
        let r = parse_ring("M2(Z)").unwrap();
        let a = parse_element(&r, "[[12,5],[0,-7]]").unwrap();
        let v = elem_to_json(&r, &a);
        assert_eq!(v.to_string(), r#"[["12","5"],["0","-7"]]"#);
        assert_eq!(elem_from_json(&r, &v).unwrap(), a);
    }

    #[test]
    fn non_canonical_residue_rejected() {
        let r = parse_ring("Z/4").unwrap();
        assert!(elem_from_json(&r, &Value::String("5".into())).is_err());
        assert!(elem_from_json(&r, &Value::String("3".into())).is_ok());
    }
}
