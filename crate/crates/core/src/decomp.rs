//! Clear decomposition of full 2x2 matrices.
//!
//! For a full `A` over Z or Z/n, reduce to `P·A·Q = diag(1, d)`, swap the
//! columns with `S = [[0,1],[1,0]]` to get `[[0,1],[d,0]]`, and split that as
//!
//! ```text
//! [[0,1],[d,0]] = [[0,0],[d+1,1]] + [[0,1],[-1,-1]]
//!                  idempotent E      unit U0 (det 1)
//! ```
//!
//! With `Q' = Q·S` this gives `A = P⁻¹·E·Q'⁻¹ + P⁻¹·U0·Q'⁻¹`, where the first
//! summand `r` satisfies `r·(Q'·P)·r = r`.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::elem_to_json;
use crate::ring::{Elem, Ring, RingKind};
use crate::smith::{fullness, reduce_full_to_unit_diag};
use crate::verdict::{
    is_nontrivial_part, ClearWitness, Refutation, UnitRegularWitness, Verdict, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixClearDecomposition {
    pub input: Elem,
    /// Unit-regular part.
    pub r: Elem,
    pub u: Elem,
    pub u_inverse: Elem,
    /// `v` with `r·v·r = r`.
    pub inner_unit: Elem,
    pub inner_unit_inverse: Elem,
    /// `P·A·Q = diag(1, d)`.
    pub p: Elem,
    pub q: Elem,
    pub d: Elem,
    pub nontrivial: bool,
    /// `A` is nonsingular, so the statement this construction proves applies
    /// verbatim; singular full inputs are handled by the same construction.
    pub within_hypotheses: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    UnitInvertible,
    InnerUnitInvertible,
    ProjectionIdempotent,
    UnitRegular,
    Sum,
    NontrivialFlag,
}

impl Clause {
    pub const ALL: [Clause; 6] = [
        Clause::UnitInvertible,
        Clause::InnerUnitInvertible,
        Clause::ProjectionIdempotent,
        Clause::UnitRegular,
        Clause::Sum,
        Clause::NontrivialFlag,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Clause::UnitInvertible => "unit part not invertible",
            Clause::InnerUnitInvertible => "inner unit not invertible",
            Clause::ProjectionIdempotent => "r·v is not idempotent",
            Clause::UnitRegular => "r·v·r differs from r",
            Clause::Sum => "r + u differs from A",
            Clause::NontrivialFlag => "nontrivial flag inconsistent",
        }
    }

    fn key(self) -> &'static str {
        match self {
            Clause::UnitInvertible => "unit_invertible",
            Clause::InnerUnitInvertible => "inner_unit_invertible",
            Clause::ProjectionIdempotent => "rv_idempotent",
            Clause::UnitRegular => "rvr_equals_r",
            Clause::Sum => "sum_equals_input",
            Clause::NontrivialFlag => "nontrivial_flag",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn swap_matrix(base: &Ring) -> Elem {
    Elem::Mat(vec![base.zero(), base.one(), base.one(), base.zero()])
}

pub fn clear_decompose_full(ring: &Ring, a: &Elem) -> Result<MatrixClearDecomposition> {
    let unit_diag = reduce_full_to_unit_diag(ring, a)?;
    let nonsingular = fullness(ring, a)?.is_nonsingular;
    let base = ring.matrix_base().expect("2x2 matrix ring");
    let (zero, one) = (base.zero(), base.one());

    let q_swapped = ring.mul(&unit_diag.q, &swap_matrix(base));
    let e = Elem::Mat(vec![
        zero.clone(),
        zero.clone(),
        base.add(&unit_diag.d, &one),
        one.clone(),
    ]);
    let u0 = Elem::Mat(vec![zero, one.clone(), base.neg(&one), base.neg(&one)]);

    let p_inv = ring.inverse(&unit_diag.p).expect("P is invertible");
    let qs_inv = ring.inverse(&q_swapped).expect("Q·S is invertible");
    let u0_inv = ring.inverse(&u0).expect("det U0 = 1");

    let r = ring.mul_all([&p_inv, &e, &qs_inv]);
    let u = ring.mul_all([&p_inv, &u0, &qs_inv]);
    let u_inverse = ring.mul_all([&q_swapped, &u0_inv, &unit_diag.p]);
    let inner_unit = ring.mul(&q_swapped, &unit_diag.p);
    let inner_unit_inverse = ring.mul(&p_inv, &qs_inv);

    Ok(MatrixClearDecomposition {
        input: a.clone(),
        r,
        u,
        u_inverse,
        inner_unit,
        inner_unit_inverse,
        p: unit_diag.p,
        q: unit_diag.q,
        d: unit_diag.d,
        // E ≠ 0 and det E = 0
        nontrivial: true,
        within_hypotheses: nonsingular,
    })
}

fn clause_holds(ring: &Ring, w: &MatrixClearDecomposition, clause: Clause) -> bool {
    let inverse_pair =
        |x: &Elem, y: &Elem| ring.is_one(&ring.mul(x, y)) && ring.is_one(&ring.mul(y, x));
    match clause {
        Clause::UnitInvertible => inverse_pair(&w.u, &w.u_inverse),
        Clause::InnerUnitInvertible => inverse_pair(&w.inner_unit, &w.inner_unit_inverse),
        Clause::ProjectionIdempotent => ring.is_idempotent(&ring.mul(&w.r, &w.inner_unit)),
        Clause::UnitRegular => ring.mul_all([&w.r, &w.inner_unit, &w.r]) == w.r,
        Clause::Sum => ring.add(&w.r, &w.u) == w.input,
        Clause::NontrivialFlag => w.nontrivial == is_nontrivial_part(ring, &w.r),
    }
}

/// Every clause with its outcome, in checking order.
pub fn decomposition_checks(ring: &Ring, w: &MatrixClearDecomposition) -> Vec<(Clause, bool)> {
    Clause::ALL
        .iter()
        .map(|&c| (c, clause_holds(ring, w, c)))
        .collect()
}

/// Re-check a decomposition by arithmetic alone; reports the first failing clause.
pub fn verify_clear_decomposition(
    ring: &Ring,
    w: &MatrixClearDecomposition,
) -> std::result::Result<(), Clause> {
    for c in Clause::ALL {
        if !clause_holds(ring, w, c) {
            return Err(c);
        }
    }
    Ok(())
}

impl MatrixClearDecomposition {
    pub fn to_clear_witness(&self) -> ClearWitness {
        ClearWitness {
            element: self.input.clone(),
            unit_regular_part: UnitRegularWitness {
                element: self.r.clone(),
                inner_unit: self.inner_unit.clone(),
                inner_unit_inverse: self.inner_unit_inverse.clone(),
            },
            unit: self.u.clone(),
            unit_inverse: self.u_inverse.clone(),
            nontrivial: self.nontrivial,
        }
    }

    /// Entrywise reduction modulo `n` of every component. The flag is
    /// recomputed in the target ring.
    pub fn reduce(&self, ring: &Ring, n: u64) -> Result<(Ring, MatrixClearDecomposition)> {
        let target = ring.reduction(n)?;
        let red = |x: &Elem| ring.reduce(x, n);
        let r = red(&self.r);
        let nontrivial = is_nontrivial_part(&target, &r);
        let out = MatrixClearDecomposition {
            input: red(&self.input),
            r,
            u: red(&self.u),
            u_inverse: red(&self.u_inverse),
            inner_unit: red(&self.inner_unit),
            inner_unit_inverse: red(&self.inner_unit_inverse),
            p: red(&self.p),
            q: red(&self.q),
            d: ring.matrix_base().expect("matrix ring").reduce(&self.d, n),
            nontrivial,
            within_hypotheses: self.within_hypotheses,
        };
        Ok((target, out))
    }

    pub fn to_json(&self, ring: &Ring) -> Value {
        let base = ring.matrix_base().expect("matrix ring");
        let checks: Vec<Value> = decomposition_checks(ring, self)
            .into_iter()
            .map(|(c, ok)| json!({"check": c.key(), "passed": ok}))
            .collect();
        json!({
            "A": elem_to_json(ring, &self.input),
            "r": elem_to_json(ring, &self.r),
            "u": elem_to_json(ring, &self.u),
            "u_inverse": elem_to_json(ring, &self.u_inverse),
            "inner_unit": elem_to_json(ring, &self.inner_unit),
            "inner_unit_inverse": elem_to_json(ring, &self.inner_unit_inverse),
            "P": elem_to_json(ring, &self.p),
            "Q": elem_to_json(ring, &self.q),
            "d": elem_to_json(base, &self.d),
            "nontrivial": self.nontrivial,
            "hypotheses": if self.within_hypotheses {
                "full nonsingular"
            } else {
                "full singular (beyond theorem hypotheses)"
            },
            "checks": checks,
        })
    }
}

/// Certificate that `[[a,0],[b,0]]` is unit-regular: `(a, b) = (a1·e, b1·e)`
/// with `e` idempotent and `(a1, b1)` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnWitness {
    pub witness: UnitRegularWitness,
    pub idempotent: Elem,
    pub column: (Elem, Elem),
}

impl Witness for ColumnWitness {
    fn validate(&self, ring: &Ring) -> bool {
        let base = ring.matrix_base().expect("matrix ring");
        let (a1, b1) = &self.column;
        let es = self.witness.element.entries().expect("matrix");
        base.is_idempotent(&self.idempotent)
            && base.mul(a1, &self.idempotent) == es[0]
            && base.mul(b1, &self.idempotent) == es[2]
            && base.is_zero(&es[1])
            && base.is_zero(&es[3])
            && self.witness.validate(ring)
    }

    fn to_json(&self, ring: &Ring) -> Value {
        let base = ring.matrix_base().expect("matrix ring");
        json!({
            "unit_regular": self.witness.to_json(ring),
            "idempotent": elem_to_json(base, &self.idempotent),
            "column": [elem_to_json(base, &self.column.0), elem_to_json(base, &self.column.1)],
        })
    }
}

fn base_idempotents(base: &Ring) -> Result<Vec<Elem>> {
    match base.kind() {
        RingKind::Integers => Ok(vec![base.zero(), base.one()]),
        RingKind::Modular(_) => Ok(base.elements()?.filter(|e| base.is_idempotent(e)).collect()),
        _ => Err(Error::Unsupported(format!(
            "column criterion needs a base ring Z or Z/n, got {base}"
        ))),
    }
}

/// Generator of the ideal `(x1, ..., xk)` in Z or Z/n, as an integer.
fn ideal_generator(base: &Ring, xs: &[&Elem]) -> num_bigint::BigInt {
    use num_integer::Integer;
    let g = xs.iter().fold(num_bigint::BigInt::from(0), |g, x| {
        g.gcd(&x.lift().unwrap())
    });
    match base.kind() {
        RingKind::Modular(n) => g.gcd(&num_bigint::BigInt::from(*n)),
        _ => g,
    }
}

/// Bezout coefficients `x·a + y·b = 1` for a unimodular pair.
fn bezout(base: &Ring, a: &Elem, b: &Elem) -> Option<(Elem, Elem)> {
    use num_integer::Integer;
    let e = a.lift()?.extended_gcd(&b.lift()?);
    let (x, y) = (base.from_int(&e.x), base.from_int(&e.y));
    let g_inv = base.inverse(&base.from_int(&e.gcd))?;
    Some((base.mul(&x, &g_inv), base.mul(&y, &g_inv)))
}

/// Unit-regularity of `[[a,0],[b,0]]` through the column criterion.
pub fn unit_regular_matrix_from_column(
    ring: &Ring,
    a: &Elem,
    b: &Elem,
) -> Result<Verdict<ColumnWitness>> {
    let base = match ring.kind() {
        RingKind::Matrix(base, 2) => base,
        _ => {
            return Err(Error::Unsupported(format!(
                "column criterion needs a 2x2 matrix ring, got {ring}"
            )))
        }
    };
    base.check(a)?;
    base.check(b)?;
    let idempotents = base_idempotents(base)?;
    let g = ideal_generator(base, &[a, b]);
    let Some(e) = idempotents
        .into_iter()
        .find(|e| ideal_generator(base, &[e]) == g)
    else {
        // (a, b) is not generated by an idempotent
        return Ok(Verdict::No(Refutation::AnalyticOracle));
    };
    let one = base.one();
    let a1 = base.add(a, &base.sub(&one, &e));
    let b1 = b.clone();
    let (x, y) = bezout(base, &a1, &b1).expect("(a1, b1) is unimodular");
    // M = [[a1, -y], [b1, x]] has det 1 and A = M·diag(e, 0)
    let m = Elem::Mat(vec![a1.clone(), base.neg(&y), b1.clone(), x.clone()]);
    let m_inv = Elem::Mat(vec![x, y, base.neg(&b1), a1.clone()]);
    let element = Elem::Mat(vec![a.clone(), base.zero(), b.clone(), base.zero()]);
    Ok(Verdict::Yes(ColumnWitness {
        witness: UnitRegularWitness {
            element,
            inner_unit: m_inv,
            inner_unit_inverse: m,
        },
        idempotent: e,
        column: (a1, b1),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::{parse_element, parse_ring};

    fn mz() -> Ring {
        parse_ring("M2(Z)").unwrap()
    }

    fn m(ring: &Ring, s: &str) -> Elem {
        parse_element(ring, s).unwrap()
    }

    #[test]
    fn diag_1_5_matches_hand_computation() {
        let r = mz();
        let w = clear_decompose_full(&r, &m(&r, "[[1,0],[0,5]]")).unwrap();
        assert_eq!(w.r, m(&r, "[[0,0],[1,6]]"));
        assert_eq!(w.u, m(&r, "[[1,0],[-1,-1]]"));
        assert_eq!(w.inner_unit, m(&r, "[[0,1],[1,0]]"));
        assert!(w.nontrivial && w.within_hypotheses);
        assert_eq!(verify_clear_decomposition(&r, &w), Ok(()));
    }

    #[test]
    fn singular_full_matrix_still_decomposes() {
        let r = mz();
        let w = clear_decompose_full(&r, &m(&r, "[[1,0],[0,0]]")).unwrap();
        assert_eq!(w.d, Elem::int(0));
        assert!(!w.within_hypotheses);
        assert!(w.nontrivial);
        assert_eq!(verify_clear_decomposition(&r, &w), Ok(()));
        let j = w.to_json(&r);
        assert_eq!(j["hypotheses"], "full singular (beyond theorem hypotheses)");
    }

    #[test]
    fn not_full_rejected() {
        let r = mz();
        assert!(matches!(
            clear_decompose_full(&r, &m(&r, "[[2,0],[0,2]]")),
            Err(Error::NotFull { .. })
        ));
    }

    #[test]
    fn tampered_unit_detected() {
        let r = mz();
        let mut w = clear_decompose_full(&r, &m(&r, "[[1,0],[0,5]]")).unwrap();
        w.u = r.add(&w.u, &r.one());
        assert_eq!(
            verify_clear_decomposition(&r, &w),
            Err(Clause::UnitInvertible)
        );
        assert_eq!(
            Clause::UnitInvertible.to_string(),
            "unit part not invertible"
        );
    }

    #[test]
    fn trivial_zero_witness_verifies() {
        let r = mz();
        let one = r.one();
        let minus_one = r.neg(&one);
        let w = MatrixClearDecomposition {
            input: r.zero(),
            r: one.clone(),
            u: minus_one.clone(),
            u_inverse: minus_one,
            inner_unit: one.clone(),
            inner_unit_inverse: one.clone(),
            p: one.clone(),
            q: one,
            d: Elem::int(0),
            nontrivial: false,
            within_hypotheses: false,
        };
        assert_eq!(verify_clear_decomposition(&r, &w), Ok(()));
        let mut flipped = w.clone();
        flipped.nontrivial = true;
        assert_eq!(
            verify_clear_decomposition(&r, &flipped),
            Err(Clause::NontrivialFlag)
        );
    }

    #[test]
    fn modular_decomposition() {
        let r = parse_ring("M2(Z/6)").unwrap();
        let a = m(&r, "[[5,2],[3,3]]");
        let w = clear_decompose_full(&r, &a).unwrap();
        assert_eq!(verify_clear_decomposition(&r, &w), Ok(()));
        assert!(w.to_clear_witness().validate(&r));
    }

    #[test]
    fn column_criterion_examples() {
        let r = mz();
        let v = unit_regular_matrix_from_column(&r, &Elem::int(12), &Elem::int(5)).unwrap();
        let w = v.witness().unwrap();
        assert!(w.validate(&r));
        // the transposed orientation [[12,5],[0,0]]
        let t = w.witness.transpose(&r);
        assert_eq!(t.element, m(&r, "[[12,5],[0,0]]"));
        assert!(t.validate(&r));

        let v = unit_regular_matrix_from_column(&r, &Elem::int(2), &Elem::int(4)).unwrap();
        assert_eq!(v, Verdict::No(Refutation::AnalyticOracle));

        let v = unit_regular_matrix_from_column(&r, &Elem::int(0), &Elem::int(0)).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.idempotent, Elem::int(0));
        assert!(w.validate(&r));
    }

    #[test]
    fn column_criterion_modular() {
        let r = parse_ring("M2(Z/6)").unwrap();
        let base = r.matrix_base().unwrap().clone();
        for a in base.elements().unwrap() {
            for b in base.elements().unwrap() {
                let v = unit_regular_matrix_from_column(&r, &a, &b).unwrap();
                if let Some(w) = v.witness() {
                    assert!(w.validate(&r), "({a}, {b})");
                }
            }
        }
        // (2, 4) generates (2) = (4), and 4 is idempotent mod 6
        let v = unit_regular_matrix_from_column(&r, &Elem::Res(2), &Elem::Res(4)).unwrap();
        assert_eq!(v.witness().unwrap().idempotent, Elem::Res(4));
    }
}
