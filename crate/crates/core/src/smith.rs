//! Diagonal reduction of 2x2 matrices over Z and Z/n.
//!
//! One integer kernel does the work: alternating row/column Euclidean
//! elimination with the transformations accumulated alongside. Over Z/n the
//! canonical lifts are reduced over Z and the transforms are mapped back.

use std::mem::swap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingKind};

type IntMat = [BigInt; 4];

/// `P·A·Q = D` with `D = diag(d1, d2)` and `d2 = multiplier·d1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub original: Elem,
    pub p: Elem,
    pub d: Elem,
    pub q: Elem,
    pub d1: Elem,
    pub d2: Elem,
    pub multiplier: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullnessVerdict {
    pub is_full: bool,
    /// Generator of the ideal spanned by the entries.
    pub gcd_of_entries: Elem,
    pub is_nonsingular: bool,
}

/// `P·A·Q = diag(1, d)` for a full matrix `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitDiagonal {
    pub p: Elem,
    pub q: Elem,
    pub d: Elem,
}

fn identity() -> IntMat {
    [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()]
}

/// Integer Smith normal form of a 2x2 matrix: `(P, D, Q)` with
/// `P·A·Q = D`, `det P, det Q = ±1`, `0 <= d1 | d2`.
pub(crate) fn int_snf(a: &IntMat) -> (IntMat, IntMat, IntMat) {
    let mut b = a.clone();
    let mut p = identity();
    let mut q = identity();
    if b.iter().all(Zero::is_zero) {
        return (p, b, q);
    }
    loop {
        // smallest nonzero entry to (0, 0)
        let (pivot, _) = b
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .min_by(|(i, x), (j, y)| x.abs().cmp(&y.abs()).then(i.cmp(j)))
            .expect("nonzero matrix");
        if pivot >= 2 {
            swap_rows(&mut b);
            swap_rows(&mut p);
        }
        if pivot % 2 == 1 {
            swap_cols(&mut b);
            swap_cols(&mut q);
        }

        let mut clean = true;
        if !b[2].is_zero() {
            let t = b[2].div_floor(&b[0]);
            row_sub(&mut b, &t);
            row_sub(&mut p, &t);
            clean &= b[2].is_zero();
        }
        if !b[1].is_zero() {
            let t = b[1].div_floor(&b[0]);
            col_sub(&mut b, &t);
            col_sub(&mut q, &t);
            clean &= b[1].is_zero();
        }
        if !clean {
            continue;
        }
        if !b[3].is_multiple_of(&b[0]) {
            // pull d2 into the first row; the next pass shrinks the pivot
            row_add(&mut b);
            row_add(&mut p);
            continue;
        }
        break;
    }
    for col in 0..2 {
        let diag = if col == 0 { 0 } else { 3 };
        if b[diag].is_negative() {
            negate_col(&mut b, col);
            negate_col(&mut q, col);
        }
    }
    (p, b, q)
}

fn swap_rows(m: &mut IntMat) {
    let [a, b, c, d] = m;
    swap(a, c);
    swap(b, d);
}

fn swap_cols(m: &mut IntMat) {
    let [a, b, c, d] = m;
    swap(a, b);
    swap(c, d);
}

/// row1 -= t·row0
fn row_sub(m: &mut IntMat, t: &BigInt) {
    m[2] = &m[2] - t * &m[0];
    m[3] = &m[3] - t * &m[1];
}

/// col1 -= t·col0
fn col_sub(m: &mut IntMat, t: &BigInt) {
    m[1] = &m[1] - t * &m[0];
    m[3] = &m[3] - t * &m[2];
}

/// row0 += row1
fn row_add(m: &mut IntMat) {
    m[0] = &m[0] + &m[2];
    m[1] = &m[1] + &m[3];
}

fn negate_col(m: &mut IntMat, col: usize) {
    m[col] = -&m[col];
    m[col + 2] = -&m[col + 2];
}

enum Base {
    Integers,
    Modular(u64),
}

fn base_of(ring: &Ring) -> Result<(Base, &Ring)> {
    match ring.kind() {
        RingKind::Matrix(b, 2) => match b.kind() {
            RingKind::Integers => Ok((Base::Integers, b)),
            RingKind::Modular(n) => Ok((Base::Modular(*n), b)),
            _ => Err(Error::Unsupported(format!(
                "diagonal reduction needs a base ring Z or Z/n, got {b}"
            ))),
        },
        _ => Err(Error::Unsupported(format!(
            "diagonal reduction is implemented for 2x2 matrices, got {ring}"
        ))),
    }
}

fn lift_matrix(ring: &Ring, a: &Elem) -> Result<IntMat> {
    ring.check(a)?;
    let es = a.entries().expect("matrix");
    Ok([0, 1, 2, 3].map(|i| es[i].lift().expect("scalar entry")))
}

fn to_elem(base: &Ring, m: &IntMat) -> Elem {
    Elem::Mat(m.iter().map(|x| base.from_int(x)).collect())
}

pub fn smith_normal_form(ring: &Ring, a: &Elem) -> Result<SmithForm> {
    let (_, base) = base_of(ring)?;
    let lifted = lift_matrix(ring, a)?;
    let (p, d, q) = int_snf(&lifted);
    let multiplier = if d[0].is_zero() {
        BigInt::zero()
    } else {
        &d[3] / &d[0]
    };
    Ok(SmithForm {
        original: a.clone(),
        p: to_elem(base, &p),
        d: to_elem(base, &d),
        q: to_elem(base, &q),
        d1: base.from_int(&d[0]),
        d2: base.from_int(&d[3]),
        multiplier: base.from_int(&multiplier),
    })
}

pub fn fullness(ring: &Ring, a: &Elem) -> Result<FullnessVerdict> {
    let (kind, base) = base_of(ring)?;
    let m = lift_matrix(ring, a)?;
    let content = m.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let det = &m[0] * &m[3] - &m[1] * &m[2];
    let (gcd, is_nonsingular) = match kind {
        Base::Integers => (content, !det.is_zero()),
        Base::Modular(n) => {
            let n = BigInt::from(n);
            (content.gcd(&n), det.gcd(&n).is_one())
        }
    };
    Ok(FullnessVerdict {
        is_full: gcd.is_one(),
        gcd_of_entries: base.from_int(&gcd),
        is_nonsingular,
    })
}

pub fn reduce_full_to_unit_diag(ring: &Ring, a: &Elem) -> Result<UnitDiagonal> {
    let verdict = fullness(ring, a)?;
    if !verdict.is_full {
        return Err(Error::NotFull {
            gcd: verdict.gcd_of_entries.to_string(),
        });
    }
    let (_, base) = base_of(ring)?;
    let snf = smith_normal_form(ring, a)?;
    // d1 is a unit; fold its inverse into the first row of P
    let d1_inv = base.inverse(&snf.d1).expect("full matrix has a unit d1");
    let scale = Elem::Mat(vec![d1_inv, base.zero(), base.zero(), base.one()]);
    Ok(UnitDiagonal {
        p: ring.mul(&scale, &snf.p),
        q: snf.q,
        d: snf.d2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::{parse_element, parse_ring};

    fn mz() -> Ring {
        parse_ring("M2(Z)").unwrap()
    }

    fn diag_of(s: &SmithForm) -> (String, String) {
        (s.d1.to_string(), s.d2.to_string())
    }

    #[test]
    fn snf_examples() {
        let r = mz();
        let s = smith_normal_form(&r, &parse_element(&r, "[[2,4],[6,8]]").unwrap()).unwrap();
        assert_eq!(diag_of(&s), ("2".into(), "4".into()));
        assert_eq!(r.mul_all([&s.p, &s.original, &s.q]), s.d);

        let a = parse_element(&r, "[[1,0],[0,7]]").unwrap();
        let s = smith_normal_form(&r, &a).unwrap();
        assert_eq!(s.d, a);
        assert!(r.is_one(&s.p) && r.is_one(&s.q));

        let s = smith_normal_form(&r, &parse_element(&r, "[[12,5],[0,0]]").unwrap()).unwrap();
        assert_eq!(diag_of(&s), ("1".into(), "0".into()));
    }

    #[test]
    fn zero_matrix() {
        let r = mz();
        let s = smith_normal_form(&r, &r.zero()).unwrap();
        assert!(r.is_zero(&s.d) && r.is_one(&s.p) && r.is_one(&s.q));
    }

    #[test]
    fn fullness_examples() {
        let r = mz();
        let f = fullness(&r, &parse_element(&r, "[[1,0],[0,5]]").unwrap()).unwrap();
        assert!(f.is_full && f.is_nonsingular);
        let f = fullness(&r, &parse_element(&r, "[[2,0],[0,2]]").unwrap()).unwrap();
        assert!(!f.is_full && f.is_nonsingular);
        assert_eq!(f.gcd_of_entries, Elem::int(2));
        let f = fullness(&r, &parse_element(&r, "[[12,5],[0,0]]").unwrap()).unwrap();
        assert!(f.is_full && !f.is_nonsingular);
    }

    #[test]
    fn unit_diagonal_examples() {
        let r = mz();
        let a = parse_element(&r, "[[1,0],[0,5]]").unwrap();
        let u = reduce_full_to_unit_diag(&r, &a).unwrap();
        assert!(r.is_one(&u.p) && r.is_one(&u.q));
        assert_eq!(u.d, Elem::int(5));

        let a = parse_element(&r, "[[3,1],[1,1]]").unwrap();
        let u = reduce_full_to_unit_diag(&r, &a).unwrap();
        assert_eq!(u.d, Elem::int(2));
        let target = parse_element(&r, "[[1,0],[0,2]]").unwrap();
        assert_eq!(r.mul_all([&u.p, &a, &u.q]), target);

        let a = parse_element(&r, "[[2,0],[0,2]]").unwrap();
        assert!(matches!(
            reduce_full_to_unit_diag(&r, &a),
            Err(Error::NotFull { .. })
        ));
    }

    #[test]
    fn modular_reduction() {
        let r = parse_ring("M2(Z/12)").unwrap();
        let a = parse_element(&r, "[[4,6],[10,3]]").unwrap();
        let s = smith_normal_form(&r, &a).unwrap();
        assert_eq!(r.mul_all([&s.p, &a, &s.q]), s.d);
        assert!(r.is_unit(&s.p) && r.is_unit(&s.q));
        let base = r.matrix_base().unwrap();
        assert_eq!(base.mul(&s.multiplier, &s.d1), s.d2);

        // gcd(4,6,10,3) = 1 over Z; the ideal is everything
        let u = reduce_full_to_unit_diag(&r, &a).unwrap();
        let expect = Elem::Mat(vec![Elem::Res(1), Elem::Res(0), Elem::Res(0), u.d.clone()]);
        assert_eq!(r.mul_all([&u.p, &a, &u.q]), expect);

        // all entries even: the ideal is (2)
        let b = parse_element(&r, "[[2,4],[6,8]]").unwrap();
        assert!(!fullness(&r, &b).unwrap().is_full);
        // 5 is a unit mod 12, so diag(5,0) is full
        let c = parse_element(&r, "[[5,0],[0,0]]").unwrap();
        let u = reduce_full_to_unit_diag(&r, &c).unwrap();
        assert_eq!(u.d, Elem::Res(0));
    }

    #[test]
    fn unsupported_bases() {
        let r = parse_ring("M3(Z)").unwrap();
        assert!(smith_normal_form(&r, &r.one()).is_err());
        let r = parse_ring("M2(Z/2 x Z/3)").unwrap();
        assert!(fullness(&r, &r.one()).is_err());
    }
}
