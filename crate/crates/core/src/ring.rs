//! Concrete ring models with exact arithmetic.
//!
//! A [`Ring`] is a cheap-to-clone handle describing one of the supported
//! models: the integers, a residue ring `Z/n`, a direct product of two
//! models, or a square matrix ring over a commutative model. Elements are
//! plain values ([`Elem`]); the handle carries the arithmetic. Residues are
//! always stored in `[0, n)`, so structural equality is ring equality.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingKind>);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Modular(u64),
    Product(Ring, Ring),
    Matrix(Ring, usize),
}

/// An element of some [`Ring`]. Which variant is valid is decided by the ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Int(BigInt),
    Res(u64),
    Pair(Box<Elem>, Box<Elem>),
    /// Row-major entries of a square matrix.
    Mat(Vec<Elem>),
}

impl Elem {
    pub fn int(v: i64) -> Self {
        Elem::Int(BigInt::from(v))
    }

    pub fn pair(left: Elem, right: Elem) -> Self {
        Elem::Pair(Box::new(left), Box::new(right))
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Elem::Int(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_res(&self) -> Option<u64> {
        match self {
            Elem::Res(v) => Some(*v),
            _ => None,
        }
    }

    pub fn entries(&self) -> Option<&[Elem]> {
        match self {
            Elem::Mat(v) => Some(v),
            _ => None,
        }
    }

    /// Integer representative: the value itself over Z, the canonical
    /// residue in `[0, n)` over Z/n.
    pub fn lift(&self) -> Option<BigInt> {
        match self {
            Elem::Int(v) => Some(v.clone()),
            Elem::Res(v) => Some(BigInt::from(*v)),
            _ => None,
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(v) => write!(f, "{v}"),
            Elem::Res(v) => write!(f, "{v}"),
            Elem::Pair(l, r) => write!(f, "({l}, {r})"),
            Elem::Mat(entries) => {
                let k = matrix_dim(entries.len());
                write!(f, "[")?;
                for i in 0..k {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[")?;
                    for j in 0..k {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{}", entries[i * k + j])?;
                    }
                    write!(f, "]")?;
                }
                write!(f, "]")
            }
        }
    }
}

fn matrix_dim(len: usize) -> usize {
    let k = (len as f64).sqrt().round() as usize;
    debug_assert_eq!(k * k, len);
    k
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Modular(n) => write!(f, "Z/{n}"),
            RingKind::Matrix(base, k) => write!(f, "M{k}({base})"),
            RingKind::Product(l, r) => {
                // `x` is left-associative, so only a product on the right needs parentheses.
                write!(f, "{l} x ")?;
                if matches!(r.kind(), RingKind::Product(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

impl Ring {
    pub fn integers() -> Self {
        Ring(Arc::new(RingKind::Integers))
    }

    pub fn modular(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!(
                "modulus must be at least 2, got {n}"
            )));
        }
        Ok(Ring(Arc::new(RingKind::Modular(n))))
    }

    pub fn product(left: Ring, right: Ring) -> Self {
        Ring(Arc::new(RingKind::Product(left, right)))
    }

    /// `size x size` matrices over `base`. The base must be commutative, so
    /// determinants and adjugates are available.
    pub fn matrix(base: Ring, size: usize) -> Result<Self> {
        if size < 1 {
            return Err(Error::InvalidRing("matrix size must be at least 1".into()));
        }
        if !base.is_commutative() {
            return Err(Error::InvalidRing(format!(
                "matrix base {base} is not commutative"
            )));
        }
        Ok(Ring(Arc::new(RingKind::Matrix(base, size))))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        match self.kind() {
            RingKind::Integers => false,
            RingKind::Modular(_) => true,
            RingKind::Product(l, r) => l.is_finite() && r.is_finite(),
            RingKind::Matrix(b, _) => b.is_finite(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        match self.kind() {
            RingKind::Integers | RingKind::Modular(_) => true,
            RingKind::Product(l, r) => l.is_commutative() && r.is_commutative(),
            RingKind::Matrix(b, k) => *k == 1 && b.is_commutative(),
        }
    }

    /// `Some(|R|)` for finite rings.
    pub fn cardinality(&self) -> Option<BigUint> {
        match self.kind() {
            RingKind::Integers => None,
            RingKind::Modular(n) => Some(BigUint::from(*n)),
            RingKind::Product(l, r) => Some(l.cardinality()? * r.cardinality()?),
            RingKind::Matrix(b, k) => Some(num_traits::pow(b.cardinality()?, k * k)),
        }
    }

    /// Cardinality as a `u64`, or an error for infinite or oversized rings.
    pub fn finite_size(&self) -> Result<u64> {
        let card = self
            .cardinality()
            .ok_or_else(|| Error::InfiniteRing(self.to_string()))?;
        card.to_u64().ok_or_else(|| {
            Error::Unsupported(format!("{self} has {card} elements, too many to index"))
        })
    }

    pub fn matrix_size(&self) -> Option<usize> {
        match self.kind() {
            RingKind::Matrix(_, k) => Some(*k),
            _ => None,
        }
    }

    pub fn matrix_base(&self) -> Option<&Ring> {
        match self.kind() {
            RingKind::Matrix(b, _) => Some(b),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match self.kind() {
            RingKind::Integers => Elem::Int(BigInt::zero()),
            RingKind::Modular(_) => Elem::Res(0),
            RingKind::Product(l, r) => Elem::pair(l.zero(), r.zero()),
            RingKind::Matrix(b, k) => Elem::Mat(vec![b.zero(); k * k]),
        }
    }

    pub fn one(&self) -> Elem {
        match self.kind() {
            RingKind::Integers => Elem::Int(BigInt::one()),
            RingKind::Modular(_) => Elem::Res(1),
            RingKind::Product(l, r) => Elem::pair(l.one(), r.one()),
            RingKind::Matrix(b, k) => {
                let k = *k;
                Elem::Mat(
                    (0..k * k)
                        .map(|i| if i / k == i % k { b.one() } else { b.zero() })
                        .collect(),
                )
            }
        }
    }

    /// Image of an integer under the unique unital map `Z -> R`.
    pub fn from_int(&self, v: &BigInt) -> Elem {
        match self.kind() {
            RingKind::Integers => Elem::Int(v.clone()),
            RingKind::Modular(n) => Elem::Res(reduce_bigint(v, *n)),
            RingKind::Product(l, r) => Elem::pair(l.from_int(v), r.from_int(v)),
            RingKind::Matrix(b, k) => {
                let k = *k;
                Elem::Mat(
                    (0..k * k)
                        .map(|i| {
                            if i / k == i % k {
                                b.from_int(v)
                            } else {
                                b.zero()
                            }
                        })
                        .collect(),
                )
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        self.from_int(&BigInt::from(v))
    }

    pub fn contains(&self, a: &Elem) -> bool {
        match (self.kind(), a) {
            (RingKind::Integers, Elem::Int(_)) => true,
            (RingKind::Modular(n), Elem::Res(v)) => v < n,
            (RingKind::Product(l, r), Elem::Pair(x, y)) => l.contains(x) && r.contains(y),
            (RingKind::Matrix(b, k), Elem::Mat(es)) => {
                es.len() == k * k && es.iter().all(|e| b.contains(e))
            }
            _ => false,
        }
    }

    pub fn check(&self, a: &Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::NotAnElement {
                element: a.to_string(),
                ring: self.to_string(),
            })
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self.kind(), a, b) {
            (RingKind::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (RingKind::Modular(n), Elem::Res(x), Elem::Res(y)) => {
                Elem::Res(((*x as u128 + *y as u128) % *n as u128) as u64)
            }
            (RingKind::Product(l, r), Elem::Pair(x1, y1), Elem::Pair(x2, y2)) => {
                Elem::pair(l.add(x1, x2), r.add(y1, y2))
            }
            (RingKind::Matrix(base, _), Elem::Mat(xs), Elem::Mat(ys)) => {
                Elem::Mat(xs.iter().zip(ys).map(|(x, y)| base.add(x, y)).collect())
            }
            _ => panic!("add: operands {a}, {b} are not elements of {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self.kind(), a) {
            (RingKind::Integers, Elem::Int(x)) => Elem::Int(-x),
            (RingKind::Modular(n), Elem::Res(x)) => Elem::Res(if *x == 0 { 0 } else { n - x }),
            (RingKind::Product(l, r), Elem::Pair(x, y)) => Elem::pair(l.neg(x), r.neg(y)),
            (RingKind::Matrix(base, _), Elem::Mat(xs)) => {
                Elem::Mat(xs.iter().map(|x| base.neg(x)).collect())
            }
            _ => panic!("neg: operand {a} is not an element of {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self.kind(), a, b) {
            (RingKind::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (RingKind::Modular(n), Elem::Res(x), Elem::Res(y)) => {
                Elem::Res(((*x as u128 * *y as u128) % *n as u128) as u64)
            }
            (RingKind::Product(l, r), Elem::Pair(x1, y1), Elem::Pair(x2, y2)) => {
                Elem::pair(l.mul(x1, x2), r.mul(y1, y2))
            }
            (RingKind::Matrix(base, k), Elem::Mat(xs), Elem::Mat(ys)) => {
                let k = *k;
                let mut out = Vec::with_capacity(k * k);
                for i in 0..k {
                    for j in 0..k {
                        let mut acc = base.mul(&xs[i * k], &ys[j]);
                        for t in 1..k {
                            acc = base.add(&acc, &base.mul(&xs[i * k + t], &ys[t * k + j]));
                        }
                        out.push(acc);
                    }
                }
                Elem::Mat(out)
            }
            _ => panic!("mul: operands {a}, {b} are not elements of {self}"),
        }
    }

    /// Product of a sequence, left to right.
    pub fn mul_all<'a>(&self, factors: impl IntoIterator<Item = &'a Elem>) -> Elem {
        factors
            .into_iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn is_idempotent(&self, a: &Elem) -> bool {
        self.mul(a, a) == *a
    }

    /// Two-sided inverse, if `a` is a unit.
    ///
    /// Units are decided exactly in every model: `±1` over Z, a residue
    /// coprime to the modulus over Z/n, componentwise in products, and a
    /// unit determinant (inverse by adjugate) in matrix rings.
    pub fn inverse(&self, a: &Elem) -> Option<Elem> {
        match (self.kind(), a) {
            (RingKind::Integers, Elem::Int(x)) => {
                if x.abs().is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            (RingKind::Modular(n), Elem::Res(x)) => mod_inverse(*x, *n).map(Elem::Res),
            (RingKind::Product(l, r), Elem::Pair(x, y)) => {
                Some(Elem::pair(l.inverse(x)?, r.inverse(y)?))
            }
            (RingKind::Matrix(base, _), Elem::Mat(_)) => {
                let det_inv = base.inverse(&self.det(a))?;
                let adj = self.adjugate(a);
                Some(self.scale(&det_inv, &adj))
            }
            _ => panic!("inverse: operand {a} is not an element of {self}"),
        }
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// Entrywise multiplication by a base-ring scalar.
    pub fn scale(&self, s: &Elem, a: &Elem) -> Elem {
        match (self.kind(), a) {
            (RingKind::Matrix(base, _), Elem::Mat(xs)) => {
                Elem::Mat(xs.iter().map(|x| base.mul(s, x)).collect())
            }
            _ => self.mul(s, a),
        }
    }

    pub fn entry<'a>(&self, a: &'a Elem, i: usize, j: usize) -> &'a Elem {
        let k = self.matrix_size().expect("entry: not a matrix ring");
        &a.entries().expect("entry: not a matrix")[i * k + j]
    }

    pub fn transpose(&self, a: &Elem) -> Elem {
        let k = self.matrix_size().expect("transpose: not a matrix ring");
        let es = a.entries().expect("transpose: not a matrix");
        Elem::Mat(
            (0..k * k)
                .map(|i| es[(i % k) * k + i / k].clone())
                .collect(),
        )
    }

    /// Determinant of a matrix over the commutative base, by cofactor expansion.
    pub fn det(&self, a: &Elem) -> Elem {
        let (base, k) = match self.kind() {
            RingKind::Matrix(b, k) => (b, *k),
            _ => panic!("det: {self} is not a matrix ring"),
        };
        det_entries(base, a.entries().expect("det: not a matrix"), k)
    }

    pub fn adjugate(&self, a: &Elem) -> Elem {
        let (base, k) = match self.kind() {
            RingKind::Matrix(b, k) => (b, *k),
            _ => panic!("adjugate: {self} is not a matrix ring"),
        };
        let es = a.entries().expect("adjugate: not a matrix");
        if k == 1 {
            return Elem::Mat(vec![base.one()]);
        }
        let mut out = vec![base.zero(); k * k];
        for i in 0..k {
            for j in 0..k {
                let minor = minor_entries(es, k, i, j);
                let c = det_entries(base, &minor, k - 1);
                // adj[j][i] = (-1)^(i+j) * M_ij
                out[j * k + i] = if (i + j) % 2 == 0 { c } else { base.neg(&c) };
            }
        }
        Elem::Mat(out)
    }

    /// The `index`-th element in lexicographic order of canonical
    /// representations. Finite rings only.
    pub fn element_at(&self, index: u64) -> Elem {
        match self.kind() {
            RingKind::Integers => panic!("element_at: Z is infinite"),
            RingKind::Modular(n) => {
                debug_assert!(index < *n);
                Elem::Res(index)
            }
            RingKind::Product(l, r) => {
                let rs = r.finite_size().expect("finite");
                Elem::pair(l.element_at(index / rs), r.element_at(index % rs))
            }
            RingKind::Matrix(b, k) => {
                let bs = b.finite_size().expect("finite");
                let mut digits = vec![b.zero(); k * k];
                let mut rest = index;
                for slot in digits.iter_mut().rev() {
                    *slot = b.element_at(rest % bs);
                    rest /= bs;
                }
                Elem::Mat(digits)
            }
        }
    }

    /// Inverse of [`Ring::element_at`].
    pub fn index_of(&self, a: &Elem) -> Option<u64> {
        match (self.kind(), a) {
            (RingKind::Modular(n), Elem::Res(v)) if v < n => Some(*v),
            (RingKind::Product(l, r), Elem::Pair(x, y)) => {
                Some(l.index_of(x)? * r.finite_size().ok()? + r.index_of(y)?)
            }
            (RingKind::Matrix(b, k), Elem::Mat(es)) if es.len() == k * k => {
                let bs = b.finite_size().ok()?;
                es.iter()
                    .try_fold(0u64, |acc, e| Some(acc * bs + b.index_of(e)?))
            }
            _ => None,
        }
    }

    /// Every element exactly once, in lexicographic order.
    pub fn elements(&self) -> Result<Elements> {
        let end = self.finite_size()?;
        Ok(Elements {
            ring: self.clone(),
            next: 0,
            end,
        })
    }

    /// The ring obtained by reducing every integer or residue leaf modulo `n`.
    pub fn reduction(&self, n: u64) -> Result<Ring> {
        match self.kind() {
            RingKind::Integers => Ring::modular(n),
            RingKind::Modular(m) => {
                if n >= 2 && m % n == 0 {
                    Ring::modular(n)
                } else {
                    Err(Error::InvalidRing(format!(
                        "no reduction Z/{m} -> Z/{n}: {n} does not divide {m}"
                    )))
                }
            }
            RingKind::Product(l, r) => Ok(Ring::product(l.reduction(n)?, r.reduction(n)?)),
            RingKind::Matrix(b, k) => Ring::matrix(b.reduction(n)?, *k),
        }
    }

    /// Image of `a` under the reduction map to [`Ring::reduction`]`(n)`.
    pub fn reduce(&self, a: &Elem, n: u64) -> Elem {
        match (self.kind(), a) {
            (RingKind::Integers, Elem::Int(v)) => Elem::Res(reduce_bigint(v, n)),
            (RingKind::Modular(_), Elem::Res(v)) => Elem::Res(v % n),
            (RingKind::Product(l, r), Elem::Pair(x, y)) => {
                Elem::pair(l.reduce(x, n), r.reduce(y, n))
            }
            (RingKind::Matrix(b, _), Elem::Mat(es)) => {
                Elem::Mat(es.iter().map(|e| b.reduce(e, n)).collect())
            }
            _ => panic!("reduce: operand {a} is not an element of {self}"),
        }
    }
}

/// Entrywise reduction of an element over Z or M_k(Z) modulo `n`, together
/// with the target ring. This is a unital ring homomorphism.
pub fn hom_image(ring: &Ring, x: &Elem, n: u64) -> Result<(Ring, Elem)> {
    let over_integers = match ring.kind() {
        RingKind::Integers => true,
        RingKind::Matrix(b, _) => matches!(b.kind(), RingKind::Integers),
        _ => false,
    };
    if !over_integers {
        return Err(Error::Unsupported(format!(
            "hom_image expects Z or a matrix ring over Z, got {ring}"
        )));
    }
    ring.check(x)?;
    let target = ring.reduction(n)?;
    Ok((target, ring.reduce(x, n)))
}

pub struct Elements {
    ring: Ring,
    next: u64,
    end: u64,
}

impl Iterator for Elements {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.next >= self.end {
            return None;
        }
        let e = self.ring.element_at(self.next);
        self.next += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Elements {}

pub(crate) fn reduce_bigint(v: &BigInt, n: u64) -> u64 {
    v.mod_floor(&BigInt::from(n))
        .to_u64()
        .expect("residue below modulus fits in u64")
}

pub(crate) fn mod_inverse(x: u64, n: u64) -> Option<u64> {
    let e = (x as i128).extended_gcd(&(n as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(n as i128) as u64)
}

fn minor_entries(es: &[Elem], k: usize, row: usize, col: usize) -> Vec<Elem> {
    let mut out = Vec::with_capacity((k - 1) * (k - 1));
    for i in (0..k).filter(|&i| i != row) {
        for j in (0..k).filter(|&j| j != col) {
            out.push(es[i * k + j].clone());
        }
    }
    out
}

fn det_entries(base: &Ring, es: &[Elem], k: usize) -> Elem {
    match k {
        1 => es[0].clone(),
        2 => base.sub(&base.mul(&es[0], &es[3]), &base.mul(&es[1], &es[2])),
        _ => {
            let mut acc = base.zero();
            for j in 0..k {
                let term = base.mul(
                    &es[j],
                    &det_entries(base, &minor_entries(es, k, 0, j), k - 1),
                );
                acc = if j % 2 == 0 {
                    base.add(&acc, &term)
                } else {
                    base.sub(&acc, &term)
                };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(base: Ring) -> Ring {
        Ring::matrix(base, 2).unwrap()
    }

    fn zmat(v: [i64; 4]) -> Elem {
        Elem::Mat(v.iter().map(|&x| Elem::int(x)).collect())
    }

    #[test]
    fn cardinalities() {
        assert_eq!(Ring::modular(6).unwrap().finite_size().unwrap(), 6);
        let z2 = Ring::modular(2).unwrap();
        assert_eq!(m2(z2.clone()).finite_size().unwrap(), 16);
        let p = Ring::product(z2, Ring::modular(3).unwrap());
        assert_eq!(p.finite_size().unwrap(), 6);
    }

    #[test]
    fn malformed_rings_rejected() {
        assert!(Ring::modular(1).is_err());
        assert!(Ring::modular(0).is_err());
        assert!(Ring::matrix(Ring::integers(), 0).is_err());
        let m = m2(Ring::integers());
        assert!(Ring::matrix(m, 2).is_err());
    }

    #[test]
    fn enumeration_order() {
        let z4 = Ring::modular(4).unwrap();
        let all: Vec<_> = z4.elements().unwrap().collect();
        assert_eq!(all, (0..4).map(Elem::Res).collect::<Vec<_>>());

        let m = m2(Ring::modular(2).unwrap());
        let all: Vec<_> = m.elements().unwrap().collect();
        assert_eq!(all.len(), 16);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);
        for (i, e) in all.iter().enumerate() {
            assert_eq!(m.index_of(e), Some(i as u64));
        }

        assert!(matches!(
            Ring::integers().elements(),
            Err(Error::InfiniteRing(_))
        ));
    }

    #[test]
    fn residues_canonical() {
        let z6 = Ring::modular(6).unwrap();
        assert_eq!(z6.from_i64(-1), Elem::Res(5));
        assert_eq!(z6.neg(&Elem::Res(0)), Elem::Res(0));
        assert_eq!(z6.mul(&Elem::Res(5), &Elem::Res(5)), Elem::Res(1));
    }

    #[test]
    fn hom_image_examples() {
        let (t, x) = hom_image(&Ring::integers(), &Elem::int(7), 4).unwrap();
        assert_eq!(t, Ring::modular(4).unwrap());
        assert_eq!(x, Elem::Res(3));

        let mz = m2(Ring::integers());
        let (t, x) = hom_image(&mz, &zmat([12, 5, 0, 0]), 5).unwrap();
        assert_eq!(t, m2(Ring::modular(5).unwrap()));
        assert_eq!(
            x,
            Elem::Mat(vec![Elem::Res(2), Elem::Res(0), Elem::Res(0), Elem::Res(0)])
        );

        let (_, x) = hom_image(&Ring::integers(), &Elem::int(-3), 4).unwrap();
        assert_eq!(x, Elem::Res(1));
        assert!(hom_image(&Ring::modular(4).unwrap(), &Elem::Res(1), 2).is_err());
    }

    #[test]
    fn matrix_inverse_by_adjugate() {
        let mz = m2(Ring::integers());
        let u = zmat([0, 1, -1, -1]);
        assert_eq!(mz.det(&u), Elem::int(1));
        let inv = mz.inverse(&u).unwrap();
        assert!(mz.is_one(&mz.mul(&u, &inv)));
        assert!(mz.is_one(&mz.mul(&inv, &u)));
        assert!(mz.inverse(&zmat([2, 0, 0, 1])).is_none());

        let m3 = Ring::matrix(Ring::modular(5).unwrap(), 3).unwrap();
        let a = Elem::Mat(
            [2u64, 1, 0, 0, 3, 1, 1, 0, 1]
                .iter()
                .map(|&v| Elem::Res(v))
                .collect(),
        );
        let inv = m3.inverse(&a).unwrap();
        assert!(m3.is_one(&m3.mul(&a, &inv)));
    }

    #[test]
    fn display_round_trips_grammar() {
        let r = Ring::product(
            Ring::modular(2).unwrap(),
            Ring::product(Ring::modular(3).unwrap(), m2(Ring::integers())),
        );
        assert_eq!(r.to_string(), "Z/2 x (Z/3 x M2(Z))");
        assert_eq!(zmat([1, 0, 0, 5]).to_string(), "[[1,0],[0,5]]");
    }
}
