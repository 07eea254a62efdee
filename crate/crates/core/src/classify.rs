//! Witness-producing predicates for element properties.
//!
//! Finite rings are searched exhaustively and answer `Yes` or `No`. Over Z
//! every property has an exact criterion. Over M2(Z) units and
//! unit-regularity are decided exactly (determinant, diagonal reduction),
//! clean elements are searched within an entry bound, and the remaining
//! properties have explicit constructions. Products with an infinite factor
//! are decided componentwise. Anything else answers `Unknown`.
//!
//! Witness selection is deterministic: the first candidate in enumeration
//! order, except for clear elements where nontrivial decompositions are
//! preferred and units are scanned from the end of the enumeration.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::brute::Profile;
use crate::decomp::clear_decompose_full;
use crate::error::{Error, Result};
use crate::finite::{FiniteRing, DEFAULT_BUDGET};
use crate::ring::{Elem, Ring, RingKind};
use crate::smith::{fullness, smith_normal_form};
use crate::verdict::{
    is_nontrivial_part, CleanWitness, ClearWitness, ExchangeWitness, Refutation, TwoCleanWitness,
    TwoGoodWitness, UnitRegularWitness, UnitWitness, Verdict,
};

/// Entry bound used by the CLI when `--bound` is not given.
pub const DEFAULT_BOUND: u64 = 30;

/// Entry bounds above this are clamped; the searches are cubic in the bound.
const MAX_BOUND: u64 = 100_000;

enum Model<'a> {
    Finite,
    Integers,
    IntMatrix2,
    Product(&'a Ring, &'a Ring),
    Unsupported,
}

fn model(ring: &Ring) -> Model<'_> {
    if ring.is_finite() {
        return Model::Finite;
    }
    match ring.kind() {
        RingKind::Integers => Model::Integers,
        RingKind::Matrix(b, 2) if matches!(b.kind(), RingKind::Integers) => Model::IntMatrix2,
        RingKind::Product(l, r) => Model::Product(l, r),
        _ => Model::Unsupported,
    }
}

fn split(a: &Elem) -> (&Elem, &Elem) {
    match a {
        Elem::Pair(x, y) => (x, y),
        _ => unreachable!("product element"),
    }
}

/// Componentwise combination for products with an infinite factor. A `No`
/// in either factor is a complete refutation.
fn combine<A, B, W>(l: Verdict<A>, r: Verdict<B>, f: impl FnOnce(A, B) -> W) -> Verdict<W> {
    match (l, r) {
        (Verdict::No(_), _) | (_, Verdict::No(_)) => Verdict::No(Refutation::AnalyticOracle),
        (Verdict::Yes(a), Verdict::Yes(b)) => Verdict::Yes(f(a, b)),
        (Verdict::Unknown { bound }, _) | (_, Verdict::Unknown { bound }) => {
            Verdict::Unknown { bound }
        }
    }
}

fn search_size(ring: &Ring) -> Result<()> {
    let size = ring.finite_size()?;
    if size > DEFAULT_BUDGET as u64 {
        return Err(Error::BudgetExceeded {
            ring: ring.to_string(),
            required: size.to_string(),
            budget: DEFAULT_BUDGET,
        });
    }
    Ok(())
}

/// `(u, u⁻¹)` for every unit, in enumeration order.
fn units_of(ring: &Ring) -> Result<Vec<(Elem, Elem)>> {
    search_size(ring)?;
    Ok(ring
        .elements()?
        .filter_map(|e| ring.inverse(&e).map(|inv| (e, inv)))
        .collect())
}

fn idempotents_of(ring: &Ring) -> Result<Vec<Elem>> {
    search_size(ring)?;
    Ok(ring.elements()?.filter(|e| ring.is_idempotent(e)).collect())
}

fn unit_regular_among(ring: &Ring, a: &Elem, units: &[(Elem, Elem)]) -> Option<UnitRegularWitness> {
    if ring.is_zero(a) {
        return Some(UnitRegularWitness {
            element: a.clone(),
            inner_unit: ring.one(),
            inner_unit_inverse: ring.one(),
        });
    }
    units
        .iter()
        .find(|(u, _)| ring.mul_all([a, u, a]) == *a)
        .map(|(u, inv)| UnitRegularWitness {
            element: a.clone(),
            inner_unit: u.clone(),
            inner_unit_inverse: inv.clone(),
        })
}

fn two_good_among(ring: &Ring, a: &Elem, units: &[(Elem, Elem)]) -> Option<TwoGoodWitness> {
    units.iter().find_map(|(u, u_inv)| {
        let v = ring.sub(a, u);
        ring.inverse(&v).map(|v_inv| TwoGoodWitness {
            element: a.clone(),
            first: UnitWitness {
                element: u.clone(),
                inverse: u_inv.clone(),
            },
            second: UnitWitness {
                element: v,
                inverse: v_inv,
            },
        })
    })
}

pub fn unit_witness(ring: &Ring, a: &Elem) -> Result<Verdict<UnitWitness>> {
    ring.check(a)?;
    Ok(match ring.inverse(a) {
        Some(inverse) => Verdict::Yes(UnitWitness {
            element: a.clone(),
            inverse,
        }),
        None => Verdict::No(Refutation::AnalyticOracle),
    })
}

pub fn idempotent_test(ring: &Ring, a: &Elem) -> Result<bool> {
    ring.check(a)?;
    Ok(ring.is_idempotent(a))
}

pub fn unit_regular_witness(ring: &Ring, a: &Elem) -> Result<Verdict<UnitRegularWitness>> {
    ring.check(a)?;
    Ok(match model(ring) {
        Model::Finite => {
            let units = units_of(ring)?;
            match unit_regular_among(ring, a, &units) {
                Some(w) => Verdict::Yes(w),
                None => Verdict::No(Refutation::ExhaustiveEnumeration),
            }
        }
        Model::Integers => {
            let v = a.as_int().expect("integer");
            if v.abs() <= BigInt::one() {
                let u = if v.is_negative() {
                    a.clone()
                } else {
                    ring.one()
                };
                Verdict::Yes(UnitRegularWitness {
                    element: a.clone(),
                    inner_unit: u.clone(),
                    inner_unit_inverse: u,
                })
            } else {
                Verdict::No(Refutation::AnalyticOracle)
            }
        }
        Model::IntMatrix2 => {
            // A is unit-regular iff diag(d1, d2) is, iff d1, d2 ∈ {0, 1};
            // then A·(Q·P)·A = P⁻¹·D²·Q⁻¹ = A.
            let s = smith_normal_form(ring, a)?;
            let small = |d: &Elem| d.as_int().is_some_and(|v| v <= &BigInt::one());
            if small(&s.d1) && small(&s.d2) {
                let inner_unit = ring.mul(&s.q, &s.p);
                let inner_unit_inverse = ring.inverse(&inner_unit).expect("unimodular");
                Verdict::Yes(UnitRegularWitness {
                    element: a.clone(),
                    inner_unit,
                    inner_unit_inverse,
                })
            } else {
                Verdict::No(Refutation::AnalyticOracle)
            }
        }
        Model::Product(l, r) => {
            let (x, y) = split(a);
            combine(
                unit_regular_witness(l, x)?,
                unit_regular_witness(r, y)?,
                |p, q| UnitRegularWitness {
                    element: a.clone(),
                    inner_unit: Elem::pair(p.inner_unit, q.inner_unit),
                    inner_unit_inverse: Elem::pair(p.inner_unit_inverse, q.inner_unit_inverse),
                },
            )
        }
        Model::Unsupported => Verdict::Unknown { bound: 0 },
    })
}

/// The clean split of a 2x2 matrix with a unit off-diagonal entry, over a
/// commutative base: `A = E + U` with `E = [[0,0],[x,1]]` (unit `(1,2)` entry)
/// or `E = [[1,y],[0,0]]` (unit `(2,1)` entry) and `det U = 1`.
pub fn clean_from_unit_entry(ring: &Ring, a: &Elem) -> Option<CleanWitness> {
    let base = match ring.kind() {
        RingKind::Matrix(b, 2) => b,
        _ => return None,
    };
    let es = a.entries()?;
    let (a11, a12, a21, a22) = (&es[0], &es[1], &es[2], &es[3]);
    let one = base.one();
    let bc_plus_one = base.add(&one, &base.mul(a12, a21));
    let idempotent = if let Some(b_inv) = base.inverse(a12) {
        let x = base.mul(
            &b_inv,
            &base.sub(&bc_plus_one, &base.mul(a11, &base.sub(a22, &one))),
        );
        Elem::Mat(vec![base.zero(), base.zero(), x, one])
    } else {
        let c_inv = base.inverse(a21)?;
        let y = base.mul(
            &c_inv,
            &base.sub(&bc_plus_one, &base.mul(&base.sub(a11, &one), a22)),
        );
        Elem::Mat(vec![one, y, base.zero(), base.zero()])
    };
    let unit = ring.sub(a, &idempotent);
    let unit_inverse = ring.inverse(&unit).expect("det(A - E) = 1");
    Some(CleanWitness {
        element: a.clone(),
        idempotent,
        unit,
        unit_inverse,
    })
}

fn int_matrix(m: [i64; 4]) -> Elem {
    Elem::Mat(m.iter().map(|&v| Elem::int(v)).collect())
}

fn clamp(bound: u64) -> i64 {
    bound.min(MAX_BOUND) as i64
}

/// Visit the 2x2 integer idempotents of trace 1 (`[[a,b],[c,1-a]]` with
/// `a(1-a) = bc`) whose entries are bounded by `bound`, until `f` returns true.
fn for_each_bounded_idempotent(bound: u64, mut f: impl FnMut([i64; 4]) -> bool) -> bool {
    let b_max = clamp(bound);
    for a in (1 - b_max)..=b_max {
        let prod = a * (1 - a);
        for b in -b_max..=b_max {
            if b == 0 {
                if prod == 0 {
                    for c in -b_max..=b_max {
                        if f([a, 0, c, 1 - a]) {
                            return true;
                        }
                    }
                }
            } else if prod % b == 0 {
                let c = prod / b;
                if c.abs() <= b_max && f([a, b, c, 1 - a]) {
                    return true;
                }
            }
        }
    }
    false
}

/// Visit the 2x2 integer matrices of determinant ±1 with entries bounded by
/// `bound`, until `f` returns true.
fn for_each_bounded_unit(bound: u64, mut f: impl FnMut([i64; 4]) -> bool) -> bool {
    let m = clamp(bound);
    for a in -m..=m {
        for b in -m..=m {
            for c in -m..=m {
                let bc = b * c;
                if a != 0 {
                    for s in [1, -1] {
                        let num = s + bc;
                        if num % a == 0 {
                            let d = num / a;
                            if d.abs() <= m && f([a, b, c, d]) {
                                return true;
                            }
                        }
                    }
                } else if bc.abs() == 1 {
                    for d in -m..=m {
                        if f([a, b, c, d]) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

pub fn clean_witness(ring: &Ring, a: &Elem, bound: u64) -> Result<Verdict<CleanWitness>> {
    ring.check(a)?;
    let split_at = |e: Elem| {
        let unit = ring.sub(a, &e);
        ring.inverse(&unit).map(|unit_inverse| CleanWitness {
            element: a.clone(),
            idempotent: e,
            unit,
            unit_inverse,
        })
    };
    Ok(match model(ring) {
        Model::Finite => match idempotents_of(ring)?.into_iter().find_map(split_at) {
            Some(w) => Verdict::Yes(w),
            None => Verdict::No(Refutation::ExhaustiveEnumeration),
        },
        // 0 and 1 are the only idempotents of Z
        Model::Integers => match [ring.zero(), ring.one()].into_iter().find_map(split_at) {
            Some(w) => Verdict::Yes(w),
            None => Verdict::No(Refutation::AnalyticOracle),
        },
        Model::IntMatrix2 => {
            if let Some(w) = clean_from_unit_entry(ring, a) {
                return Ok(Verdict::Yes(w));
            }
            if let Some(w) = [ring.zero(), ring.one()].into_iter().find_map(split_at) {
                return Ok(Verdict::Yes(w));
            }
            let mut found = None;
            for_each_bounded_idempotent(bound, |e| {
                found = split_at(int_matrix(e));
                found.is_some()
            });
            match found {
                Some(w) => Verdict::Yes(w),
                None => Verdict::Unknown { bound },
            }
        }
        Model::Product(l, r) => {
            let (x, y) = split(a);
            combine(
                clean_witness(l, x, bound)?,
                clean_witness(r, y, bound)?,
                |p, q| CleanWitness {
                    element: a.clone(),
                    idempotent: Elem::pair(p.idempotent, q.idempotent),
                    unit: Elem::pair(p.unit, q.unit),
                    unit_inverse: Elem::pair(p.unit_inverse, q.unit_inverse),
                },
            )
        }
        Model::Unsupported => Verdict::Unknown { bound },
    })
}

/// Clear decomposition of a unit-regular element: with `a·u·a = a`, the
/// element `e = 1 - a·u` is idempotent and `a = u⁻¹ + (-e·u⁻¹)`, where
/// `-e·u⁻¹` is unit-regular with inner unit `-u`.
pub fn clear_from_unit_regular(ring: &Ring, w: &UnitRegularWitness) -> ClearWitness {
    let a = &w.element;
    let e = ring.sub(&ring.one(), &ring.mul(a, &w.inner_unit));
    let r = ring.neg(&ring.mul(&e, &w.inner_unit_inverse));
    let nontrivial = is_nontrivial_part(ring, &r);
    ClearWitness {
        element: a.clone(),
        unit_regular_part: UnitRegularWitness {
            element: r,
            inner_unit: ring.neg(&w.inner_unit),
            inner_unit_inverse: ring.neg(&w.inner_unit_inverse),
        },
        unit: w.inner_unit_inverse.clone(),
        unit_inverse: w.inner_unit.clone(),
        nontrivial,
    }
}

/// `0 = 1 + (-1)`.
fn zero_clear_witness(ring: &Ring) -> ClearWitness {
    let one = ring.one();
    let minus_one = ring.neg(&one);
    ClearWitness {
        element: ring.zero(),
        unit_regular_part: UnitRegularWitness {
            element: one.clone(),
            inner_unit: one.clone(),
            inner_unit_inverse: one,
        },
        unit: minus_one.clone(),
        unit_inverse: minus_one,
        nontrivial: false,
    }
}

fn clear_with_unit(ring: &Ring, r: UnitRegularWitness, u: Elem, u_inv: Elem) -> ClearWitness {
    let nontrivial = is_nontrivial_part(ring, &r.element);
    ClearWitness {
        element: ring.add(&r.element, &u),
        unit_regular_part: r,
        unit: u,
        unit_inverse: u_inv,
        nontrivial,
    }
}

pub fn clear_witness(ring: &Ring, a: &Elem, bound: u64) -> Result<Verdict<ClearWitness>> {
    ring.check(a)?;
    if ring.is_zero(a) {
        return Ok(Verdict::Yes(zero_clear_witness(ring)));
    }
    Ok(match model(ring) {
        Model::Finite => {
            let units = units_of(ring)?;
            let search = |nontrivial_only: bool| {
                units.iter().rev().find_map(|(u, u_inv)| {
                    let r = ring.sub(a, u);
                    if nontrivial_only && !is_nontrivial_part(ring, &r) {
                        return None;
                    }
                    unit_regular_among(ring, &r, &units)
                        .map(|w| clear_with_unit(ring, w, u.clone(), u_inv.clone()))
                })
            };
            match search(true).or_else(|| search(false)) {
                Some(w) => Verdict::Yes(w),
                None => Verdict::No(Refutation::ExhaustiveEnumeration),
            }
        }
        Model::Integers => {
            // unit-regular integers are 0 and ±1
            let found = [0i64, 1, -1].into_iter().find_map(|r| {
                let r = ring.from_i64(r);
                let u = ring.sub(a, &r);
                let u_inv = ring.inverse(&u)?;
                let w = unit_regular_witness(ring, &r).ok()?.into_witness()?;
                Some(clear_with_unit(ring, w, u, u_inv))
            });
            match found {
                Some(w) => Verdict::Yes(w),
                None => Verdict::No(Refutation::AnalyticOracle),
            }
        }
        Model::IntMatrix2 => Verdict::Yes(clear_int_matrix(ring, a, bound)?),
        Model::Product(l, r) => {
            let (x, y) = split(a);
            combine(
                clear_witness(l, x, bound)?,
                clear_witness(r, y, bound)?,
                |p, q| {
                    let part = UnitRegularWitness {
                        element: Elem::pair(
                            p.unit_regular_part.element,
                            q.unit_regular_part.element,
                        ),
                        inner_unit: Elem::pair(
                            p.unit_regular_part.inner_unit,
                            q.unit_regular_part.inner_unit,
                        ),
                        inner_unit_inverse: Elem::pair(
                            p.unit_regular_part.inner_unit_inverse,
                            q.unit_regular_part.inner_unit_inverse,
                        ),
                    };
                    clear_with_unit(
                        ring,
                        part,
                        Elem::pair(p.unit, q.unit),
                        Elem::pair(p.unit_inverse, q.unit_inverse),
                    )
                },
            )
        }
        Model::Unsupported => Verdict::Unknown { bound },
    })
}

fn clear_int_matrix(ring: &Ring, a: &Elem, bound: u64) -> Result<ClearWitness> {
    let from_unit_regular = unit_regular_witness(ring, a)?
        .into_witness()
        .map(|w| clear_from_unit_regular(ring, &w));
    if let Some(w) = from_unit_regular.as_ref().filter(|w| w.nontrivial) {
        return Ok(w.clone());
    }
    if fullness(ring, a)?.is_full {
        return Ok(clear_decompose_full(ring, a)?.to_clear_witness());
    }
    if let Some(w) = from_unit_regular {
        return Ok(w);
    }
    // not full and not unit-regular: look for a nontrivial split within the bound
    let mut found = None;
    for_each_bounded_unit(bound, |m| {
        let u = int_matrix(m);
        let r = ring.sub(a, &u);
        if !is_nontrivial_part(ring, &r) {
            return false;
        }
        if let Ok(Verdict::Yes(w)) = unit_regular_witness(ring, &r) {
            let u_inv = ring.inverse(&u).expect("det ±1");
            found = Some(clear_with_unit(ring, w, u, u_inv));
        }
        found.is_some()
    });
    if let Some(w) = found {
        return Ok(w);
    }
    // every 2x2 integer matrix is a sum of two units
    let tg = two_good_int_matrix(ring, a)?;
    let r = UnitRegularWitness {
        element: tg.first.element.clone(),
        inner_unit: tg.first.inverse.clone(),
        inner_unit_inverse: tg.first.element,
    };
    Ok(clear_with_unit(
        ring,
        r,
        tg.second.element,
        tg.second.inverse,
    ))
}

/// `diag(x, y) = [[x,1],[-1,0]] + [[0,-1],[1,y]]`, both of determinant 1,
/// transported back through the diagonal reduction.
fn two_good_int_matrix(ring: &Ring, a: &Elem) -> Result<TwoGoodWitness> {
    let s = smith_normal_form(ring, a)?;
    let base = ring.matrix_base().expect("matrix ring");
    let one = base.one();
    let minus_one = base.neg(&one);
    let d1 = Elem::Mat(vec![
        s.d1.clone(),
        one.clone(),
        minus_one.clone(),
        base.zero(),
    ]);
    let d2 = Elem::Mat(vec![base.zero(), minus_one, one, s.d2.clone()]);
    let p_inv = ring.inverse(&s.p).expect("unimodular");
    let q_inv = ring.inverse(&s.q).expect("unimodular");
    let first = ring.mul_all([&p_inv, &d1, &q_inv]);
    let second = ring.mul_all([&p_inv, &d2, &q_inv]);
    let unit = |x: Elem| {
        let inverse = ring.inverse(&x).expect("det 1");
        UnitWitness {
            element: x,
            inverse,
        }
    };
    Ok(TwoGoodWitness {
        element: a.clone(),
        first: unit(first),
        second: unit(second),
    })
}

pub fn two_good_test(ring: &Ring, a: &Elem, bound: u64) -> Result<Verdict<TwoGoodWitness>> {
    ring.check(a)?;
    Ok(match model(ring) {
        Model::Finite => match two_good_among(ring, a, &units_of(ring)?) {
            Some(w) => Verdict::Yes(w),
            None => Verdict::No(Refutation::ExhaustiveEnumeration),
        },
        Model::Integers => {
            let units = [
                (ring.one(), ring.one()),
                (ring.from_i64(-1), ring.from_i64(-1)),
            ];
            match two_good_among(ring, a, &units) {
                Some(w) => Verdict::Yes(w),
                None => Verdict::No(Refutation::AnalyticOracle),
            }
        }
        Model::IntMatrix2 => Verdict::Yes(two_good_int_matrix(ring, a)?),
        Model::Product(l, r) => {
            let (x, y) = split(a);
            combine(
                two_good_test(l, x, bound)?,
                two_good_test(r, y, bound)?,
                |p, q| TwoGoodWitness {
                    element: a.clone(),
                    first: UnitWitness {
                        element: Elem::pair(p.first.element, q.first.element),
                        inverse: Elem::pair(p.first.inverse, q.first.inverse),
                    },
                    second: UnitWitness {
                        element: Elem::pair(p.second.element, q.second.element),
                        inverse: Elem::pair(p.second.inverse, q.second.inverse),
                    },
                },
            )
        }
        Model::Unsupported => Verdict::Unknown { bound },
    })
}

pub fn two_clean_test(ring: &Ring, a: &Elem, bound: u64) -> Result<Verdict<TwoCleanWitness>> {
    ring.check(a)?;
    let with = |e: Elem, units: TwoGoodWitness| TwoCleanWitness {
        element: a.clone(),
        idempotent: e,
        units,
    };
    Ok(match model(ring) {
        Model::Finite => {
            let units = units_of(ring)?;
            let found = idempotents_of(ring)?
                .into_iter()
                .find_map(|e| two_good_among(ring, &ring.sub(a, &e), &units).map(|w| with(e, w)));
            match found {
                Some(w) => Verdict::Yes(w),
                None => Verdict::No(Refutation::ExhaustiveEnumeration),
            }
        }
        Model::Integers => {
            let found = [ring.zero(), ring.one()].into_iter().find_map(|e| {
                two_good_test(ring, &ring.sub(a, &e), bound)
                    .ok()?
                    .into_witness()
                    .map(|w| with(e, w))
            });
            match found {
                Some(w) => Verdict::Yes(w),
                None => Verdict::No(Refutation::AnalyticOracle),
            }
        }
        Model::IntMatrix2 => Verdict::Yes(with(ring.zero(), two_good_int_matrix(ring, a)?)),
        Model::Product(l, r) => {
            let (x, y) = split(a);
            combine(
                two_clean_test(l, x, bound)?,
                two_clean_test(r, y, bound)?,
                |p, q| TwoCleanWitness {
                    element: a.clone(),
                    idempotent: Elem::pair(p.idempotent, q.idempotent),
                    units: TwoGoodWitness {
                        element: Elem::pair(p.units.element, q.units.element),
                        first: UnitWitness {
                            element: Elem::pair(p.units.first.element, q.units.first.element),
                            inverse: Elem::pair(p.units.first.inverse, q.units.first.inverse),
                        },
                        second: UnitWitness {
                            element: Elem::pair(p.units.second.element, q.units.second.element),
                            inverse: Elem::pair(p.units.second.inverse, q.units.second.inverse),
                        },
                    },
                },
            )
        }
        Model::Unsupported => Verdict::Unknown { bound },
    })
}

/// An idempotent `e` with `e ∈ aR` and `1 - e ∈ (1 - a)R`. Finite rings only.
pub fn exchange_test(ring: &Ring, a: &Elem) -> Result<Option<ExchangeWitness>> {
    ring.check(a)?;
    if !ring.is_finite() {
        return Err(Error::InfiniteRing(ring.to_string()));
    }
    search_size(ring)?;
    let elems: Vec<Elem> = ring.elements()?.collect();
    let one = ring.one();
    let co = ring.sub(&one, a);
    for e in elems.iter().filter(|e| ring.is_idempotent(e)) {
        let Some(x) = elems.iter().find(|x| ring.mul(a, x) == *e) else {
            continue;
        };
        let target = ring.sub(&one, e);
        if let Some(y) = elems.iter().find(|y| ring.mul(&co, y) == target) {
            return Ok(Some(ExchangeWitness {
                element: a.clone(),
                idempotent: e.clone(),
                x: x.clone(),
                y: y.clone(),
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ursr1Outcome {
    pub holds: bool,
    /// First pair `(a, b)` with `aR + bR = R` and no unit-regular `r`
    /// making `a + b·r` a unit.
    pub counterexample: Option<(Elem, Elem)>,
}

/// Unit-regular stable range 1, by exhaustion over all pairs.
pub fn ursr1_test(ring: &Ring) -> Result<Ursr1Outcome> {
    let fr = FiniteRing::new(ring, DEFAULT_BUDGET)?;
    let profile = Profile::new(&fr);
    let counterexample = profile
        .ursr1_counterexample()
        .map(|(a, b)| (fr.elem(a).clone(), fr.elem(b).clone()));
    Ok(Ursr1Outcome {
        holds: counterexample.is_none(),
        counterexample,
    })
}

/// Integer value of a small element of Z, for tests and reports.
pub fn small_int(a: &Elem) -> Option<i64> {
    a.as_int()?.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::{parse_element, parse_ring};
    use crate::verdict::Witness;

    fn ring(s: &str) -> Ring {
        parse_ring(s).unwrap()
    }

    fn el(r: &Ring, s: &str) -> Elem {
        parse_element(r, s).unwrap()
    }

    #[test]
    fn unit_examples() {
        let z4 = ring("Z/4");
        let v = unit_witness(&z4, &Elem::Res(3)).unwrap();
        assert_eq!(v.witness().unwrap().inverse, Elem::Res(3));
        let z = ring("Z");
        assert_eq!(
            unit_witness(&z, &Elem::int(2)).unwrap(),
            Verdict::No(Refutation::AnalyticOracle)
        );
        let mz = ring("M2(Z)");
        let u = el(&mz, "[[0,1],[-1,-1]]");
        let v = unit_witness(&mz, &u).unwrap();
        assert!(v.witness().unwrap().validate(&mz));
        assert_eq!(mz.det(&u), Elem::int(1));
    }

    #[test]
    fn idempotent_examples() {
        let z6 = ring("Z/6");
        assert!(idempotent_test(&z6, &Elem::Res(3)).unwrap());
        assert!(!idempotent_test(&z6, &Elem::Res(2)).unwrap());
        let mz = ring("M2(Z)");
        assert!(idempotent_test(&mz, &el(&mz, "[[0,0],[6,1]]")).unwrap());
    }

    #[test]
    fn unit_regular_examples() {
        let mz = ring("M2(Z)");
        let a = el(&mz, "[[12,5],[0,0]]");
        let w = unit_regular_witness(&mz, &a)
            .unwrap()
            .into_witness()
            .unwrap();
        assert!(w.validate(&mz));

        let z4 = ring("Z/4");
        assert_eq!(
            unit_regular_witness(&z4, &Elem::Res(2)).unwrap(),
            Verdict::No(Refutation::ExhaustiveEnumeration)
        );
        for r in ["Z", "Z/4", "M2(Z)", "M2(Z/3)", "Z/2 x Z"] {
            let r = ring(r);
            let w = unit_regular_witness(&r, &r.zero())
                .unwrap()
                .into_witness()
                .unwrap();
            assert!(r.is_one(&w.inner_unit));
        }
        let mz_bad = el(&mz, "[[2,0],[0,0]]");
        assert_eq!(
            unit_regular_witness(&mz, &mz_bad).unwrap(),
            Verdict::No(Refutation::AnalyticOracle)
        );
    }

    #[test]
    fn clean_examples() {
        let z4 = ring("Z/4");
        let w = clean_witness(&z4, &Elem::Res(2), 0)
            .unwrap()
            .into_witness()
            .unwrap();
        assert_eq!((w.idempotent, w.unit), (Elem::Res(1), Elem::Res(1)));

        let mz = ring("M2(Z)");
        let w = clean_witness(&mz, &el(&mz, "[[0,1],[7,0]]"), 30)
            .unwrap()
            .into_witness()
            .unwrap();
        assert_eq!(w.idempotent, el(&mz, "[[0,0],[8,1]]"));
        assert_eq!(w.unit, el(&mz, "[[0,1],[-1,-1]]"));

        let v = clean_witness(&mz, &el(&mz, "[[12,5],[0,0]]"), 30).unwrap();
        assert_eq!(v, Verdict::Unknown { bound: 30 });

        let z = ring("Z");
        assert!(clean_witness(&z, &Elem::int(2), 0).unwrap().is_yes());
        assert_eq!(
            clean_witness(&z, &Elem::int(5), 0).unwrap(),
            Verdict::No(Refutation::AnalyticOracle)
        );
    }

    #[test]
    fn clean_from_unit_entry_both_orientations() {
        for r in ["M2(Z)", "M2(Z/6)"] {
            let r = ring(r);
            for s in [
                "[[3,1],[4,9]]",
                "[[3,4],[1,9]]",
                "[[0,5],[1,2]]",
                "[[2,5],[-1,8]]",
            ] {
                let a = el(&r, s);
                let w = clean_from_unit_entry(&r, &a).unwrap();
                assert!(w.validate(&r), "{s} over {r}");
            }
        }
    }

    #[test]
    fn clear_examples() {
        let z4 = ring("Z/4");
        let w = clear_witness(&z4, &Elem::Res(2), 0)
            .unwrap()
            .into_witness()
            .unwrap();
        assert_eq!(
            (w.r().clone(), w.unit.clone()),
            (Elem::Res(3), Elem::Res(3))
        );
        assert!(!w.nontrivial);

        for r in ["Z", "Z/4", "Z/6", "M2(Z)", "M2(Z/2)", "Z/3 x Z"] {
            let r = ring(r);
            let w = clear_witness(&r, &r.zero(), 0)
                .unwrap()
                .into_witness()
                .unwrap();
            assert!(r.is_one(w.r()));
            assert_eq!(w.unit, r.neg(&r.one()));
            assert!(!w.nontrivial && w.validate(&r));
        }

        let mz = ring("M2(Z)");
        let a = el(&mz, "[[12,5],[0,0]]");
        let w = clear_witness(&mz, &a, 30).unwrap().into_witness().unwrap();
        assert!(w.validate(&mz) && w.nontrivial);
        // built as a = u⁻¹ - e·u⁻¹ from a·u·a = a
        let ur = unit_regular_witness(&mz, &a)
            .unwrap()
            .into_witness()
            .unwrap();
        assert_eq!(w, clear_from_unit_regular(&mz, &ur));
    }

    #[test]
    fn clear_over_int_matrices_never_unknown() {
        let mz = ring("M2(Z)");
        for s in [
            "[[2,0],[0,2]]",
            "[[4,6],[8,10]]",
            "[[3,0],[0,0]]",
            "[[1,0],[0,1]]",
            "[[7,3],[2,1]]",
        ] {
            let a = el(&mz, s);
            let w = clear_witness(&mz, &a, 3).unwrap().into_witness().unwrap();
            assert!(w.validate(&mz), "{s}");
        }
        // full nonsingular matrices are nontrivially clear
        let w = clear_witness(&mz, &el(&mz, "[[1,0],[0,1]]"), 3)
            .unwrap()
            .into_witness()
            .unwrap();
        assert!(w.nontrivial);
    }

    #[test]
    fn two_good_examples() {
        let z2 = ring("Z/2");
        let w = two_good_test(&z2, &Elem::Res(0), 0)
            .unwrap()
            .into_witness()
            .unwrap();
        assert_eq!(
            (w.first.element, w.second.element),
            (Elem::Res(1), Elem::Res(1))
        );
        assert_eq!(
            two_good_test(&z2, &Elem::Res(1), 0).unwrap(),
            Verdict::No(Refutation::ExhaustiveEnumeration)
        );
        let z = ring("Z");
        assert_eq!(
            two_good_test(&z, &Elem::int(3), 0).unwrap(),
            Verdict::No(Refutation::AnalyticOracle)
        );
        for v in [-2, 0, 2] {
            assert!(two_good_test(&z, &Elem::int(v), 0).unwrap().is_yes());
        }
        let mz = ring("M2(Z)");
        for s in ["[[12,5],[0,0]]", "[[0,0],[0,0]]", "[[100,-3],[7,44]]"] {
            let w = two_good_test(&mz, &el(&mz, s), 0)
                .unwrap()
                .into_witness()
                .unwrap();
            assert!(w.validate(&mz));
        }
    }

    #[test]
    fn two_clean_examples() {
        let z4 = ring("Z/4");
        let w = two_clean_test(&z4, &Elem::Res(2), 0)
            .unwrap()
            .into_witness()
            .unwrap();
        assert_eq!(w.idempotent, Elem::Res(0));
        assert_eq!(
            (w.units.first.element, w.units.second.element),
            (Elem::Res(1), Elem::Res(1))
        );

        let z = ring("Z");
        let w = two_clean_test(&z, &Elem::int(1), 0)
            .unwrap()
            .into_witness()
            .unwrap();
        assert_eq!(w.idempotent, Elem::int(1));
        assert_eq!(
            (w.units.first.element, w.units.second.element),
            (Elem::int(1), Elem::int(-1))
        );

        let m = ring("M2(Z/2)");
        for a in m.elements().unwrap() {
            let w = two_clean_test(&m, &a, 0).unwrap().into_witness().unwrap();
            assert!(w.validate(&m));
        }
    }

    #[test]
    fn exchange_examples() {
        let z8 = ring("Z/8");
        for a in z8.elements().unwrap() {
            if clean_witness(&z8, &a, 0).unwrap().is_yes() {
                let w = exchange_test(&z8, &a).unwrap().unwrap();
                assert!(w.validate(&z8));
            }
        }
        assert_eq!(
            exchange_test(&z8, &Elem::Res(0))
                .unwrap()
                .unwrap()
                .idempotent,
            Elem::Res(0)
        );
        assert_eq!(
            exchange_test(&z8, &Elem::Res(1))
                .unwrap()
                .unwrap()
                .idempotent,
            Elem::Res(1)
        );
        assert!(exchange_test(&ring("Z"), &Elem::int(0)).is_err());
    }

    #[test]
    fn ursr1_examples() {
        for r in ["Z/4", "Z/6", "Z/2", "Z/3", "Z/5", "Z/7"] {
            assert!(ursr1_test(&ring(r)).unwrap().holds, "{r}");
        }
        assert!(ursr1_test(&ring("Z")).is_err());
    }

    #[test]
    fn products_with_infinite_factor() {
        let r = ring("Z x Z/4");
        let a = el(&r, "(2, 2)");
        assert!(clean_witness(&r, &a, 5)
            .unwrap()
            .into_witness()
            .unwrap()
            .validate(&r));
        let w = clear_witness(&r, &a, 5).unwrap().into_witness().unwrap();
        assert!(w.validate(&r));
        let b = el(&r, "(7, 1)");
        assert!(clean_witness(&r, &b, 5).unwrap().is_no());
        assert!(unit_regular_witness(&r, &el(&r, "(1, 2)")).unwrap().is_no());
    }

    #[test]
    fn unsupported_models_answer_unknown() {
        let r = ring("M3(Z)");
        assert_eq!(
            clean_witness(&r, &r.one(), 4).unwrap(),
            Verdict::Unknown { bound: 4 }
        );
        assert!(unit_witness(&r, &r.one()).unwrap().is_yes());
    }
}
