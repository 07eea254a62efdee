//! Table-backed view of a finite ring for exhaustive searches.
//!
//! Elements are numbered in enumeration order and addition and
//! multiplication are tabulated once, so ring-wide brute force runs on
//! small integers instead of element values.

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// Default bound on `|R|` for table-backed computations.
pub const DEFAULT_BUDGET: usize = 4096;

const MAX_TABLE: usize = 1 << 16;

pub struct FiniteRing {
    ring: Ring,
    elems: Vec<Elem>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
    inverse: Vec<Option<u16>>,
    units: Vec<usize>,
    idempotents: Vec<usize>,
}

impl FiniteRing {
    pub fn new(ring: &Ring, budget: usize) -> Result<Self> {
        let size = ring.finite_size()?;
        if size as u128 > budget.min(MAX_TABLE) as u128 {
            return Err(Error::BudgetExceeded {
                ring: ring.to_string(),
                required: size.to_string(),
                budget: budget.min(MAX_TABLE),
            });
        }
        let n = size as usize;
        let elems: Vec<Elem> = ring.elements()?.collect();
        let index = |e: &Elem| ring.index_of(e).expect("closed under operations") as u16;

        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                add[i * n + j] = index(&ring.add(&elems[i], &elems[j]));
                mul[i * n + j] = index(&ring.mul(&elems[i], &elems[j]));
            }
        }
        let neg: Vec<u16> = elems.iter().map(|e| index(&ring.neg(e))).collect();
        let zero = index(&ring.zero()) as usize;
        let one = index(&ring.one()) as usize;

        let mut inverse = vec![None; n];
        for x in 0..n {
            if inverse[x].is_some() {
                continue;
            }
            for y in 0..n {
                if mul[x * n + y] as usize == one && mul[y * n + x] as usize == one {
                    inverse[x] = Some(y as u16);
                    inverse[y] = Some(x as u16);
                    break;
                }
            }
        }
        let units = (0..n).filter(|&x| inverse[x].is_some()).collect();
        let idempotents = (0..n).filter(|&x| mul[x * n + x] as usize == x).collect();

        Ok(FiniteRing {
            ring: ring.clone(),
            elems,
            add,
            mul,
            neg,
            zero,
            one,
            inverse,
            units,
            idempotents,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elem(&self, i: usize) -> &Elem {
        &self.elems[i]
    }

    pub fn index(&self, e: &Elem) -> usize {
        self.ring.index_of(e).expect("element of this ring") as usize
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.inverse[a].map(usize::from)
    }

    #[inline]
    pub fn is_unit(&self, a: usize) -> bool {
        self.inverse[a].is_some()
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn has_nontrivial_idempotents(&self) -> bool {
        self.idempotents
            .iter()
            .any(|&e| e != self.zero && e != self.one)
    }

    /// Membership mask of the principal right ideal `aR`.
    pub fn right_ideal(&self, a: usize) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        for x in 0..self.len() {
            mask[self.mul(a, x)] = true;
        }
        mask
    }

    /// Some `x` with `a·x = target`.
    pub fn right_divisor(&self, a: usize, target: usize) -> Option<usize> {
        (0..self.len()).find(|&x| self.mul(a, x) == target)
    }

    /// Whether `aR + bR = R`, with masks precomputed by [`FiniteRing::right_ideal`].
    pub fn comaximal(&self, a_ideal: &[bool], b_ideal: &[bool]) -> bool {
        (0..self.len()).any(|x| a_ideal[x] && b_ideal[self.sub(self.one, x)])
    }

    /// Exhaustive check of the ring axioms on the tables.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.len();
        for a in 0..n {
            if self.add(a, self.zero) != a || self.add(a, self.neg(a)) != self.zero {
                return Err(format!(
                    "additive identity/inverse fails at {}",
                    self.elems[a]
                ));
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return Err(format!("unity fails at {}", self.elems[a]));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err("addition is not commutative".into());
                }
                for c in 0..n {
                    let e = |s: &str| {
                        Err(format!(
                            "{s} fails at ({}, {}, {})",
                            self.elems[a], self.elems[b], self.elems[c]
                        ))
                    };
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return e("additive associativity");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return e("multiplicative associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return e("left distributivity");
                    }
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return e("right distributivity");
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalReport {
    pub ring: Ring,
    pub radical_elements: Vec<Elem>,
    pub is_semisimple: bool,
    /// Whether the left test `1 - x·y` and the right test `1 - y·x` select the same set.
    pub sides_agree: bool,
}

/// `J(R)` as the set of `x` with `1 - x·y` a unit for every `y`.
pub fn jacobson_radical(ring: &Ring) -> Result<RadicalReport> {
    let fr = FiniteRing::new(ring, DEFAULT_BUDGET)?;
    Ok(radical_of(&fr))
}

pub fn radical_of(fr: &FiniteRing) -> RadicalReport {
    let n = fr.len();
    let one = fr.one();
    let left: Vec<usize> = (0..n)
        .filter(|&x| (0..n).all(|y| fr.is_unit(fr.sub(one, fr.mul(x, y)))))
        .collect();
    let right: Vec<usize> = (0..n)
        .filter(|&x| (0..n).all(|y| fr.is_unit(fr.sub(one, fr.mul(y, x)))))
        .collect();
    let is_semisimple = left.len() == 1 && left[0] == fr.zero();
    RadicalReport {
        ring: fr.ring().clone(),
        radical_elements: left.iter().map(|&i| fr.elem(i).clone()).collect(),
        is_semisimple,
        sides_agree: left == right,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::parse_ring;

    #[test]
    fn radical_examples() {
        let r = jacobson_radical(&parse_ring("Z/4").unwrap()).unwrap();
        assert_eq!(r.radical_elements, vec![Elem::Res(0), Elem::Res(2)]);
        assert!(!r.is_semisimple);

        let r = jacobson_radical(&parse_ring("Z/6").unwrap()).unwrap();
        assert_eq!(r.radical_elements, vec![Elem::Res(0)]);
        assert!(r.is_semisimple);

        for p in [2, 3, 5, 7, 11, 13] {
            let r = jacobson_radical(&Ring::modular(p).unwrap()).unwrap();
            assert!(r.is_semisimple);
        }
    }

    #[test]
    fn matrix_radical_is_two_sided() {
        // J(M2(Z/4)) = M2(2Z/4)
        let r = jacobson_radical(&parse_ring("M2(Z/4)").unwrap()).unwrap();
        assert!(r.sides_agree);
        assert_eq!(r.radical_elements.len(), 16);
        let r = jacobson_radical(&parse_ring("M2(Z/3)").unwrap()).unwrap();
        assert!(r.sides_agree && r.is_semisimple);
    }

    #[test]
    fn budget_enforced() {
        let r = parse_ring("M2(Z/9)").unwrap();
        assert!(matches!(
            FiniteRing::new(&r, 4096),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            FiniteRing::new(&Ring::integers(), 4096),
            Err(Error::InfiniteRing(_))
        ));
    }

    #[test]
    fn units_and_idempotents_by_table() {
        let fr = FiniteRing::new(&parse_ring("Z/8").unwrap(), 64).unwrap();
        let units: Vec<_> = fr.units().iter().map(|&i| fr.elem(i).clone()).collect();
        assert_eq!(units, [1, 3, 5, 7].map(Elem::Res).to_vec());
        assert!(!fr.has_nontrivial_idempotents());
        let fr = FiniteRing::new(&parse_ring("M2(Z/2)").unwrap(), 64).unwrap();
        assert_eq!(fr.units().len(), 6);
        assert!(fr.has_nontrivial_idempotents());
    }
}
