//! Exhaustive element-property tables over a [`FiniteRing`].

use std::collections::HashMap;

use crate::finite::FiniteRing;

/// Per-element outcome of every property, decided by exhaustion.
pub struct Profile<'a> {
    pub fr: &'a FiniteRing,
    /// First unit `u` (enumeration order) with `a·u·a = a`.
    pub unit_regular: Vec<Option<usize>>,
    /// First idempotent `e` with `a - e` a unit.
    pub clean: Vec<Option<usize>>,
    pub clear: Vec<bool>,
    pub two_good: Vec<bool>,
    pub two_clean: Vec<bool>,
    pub exchange: Vec<bool>,
    /// Principal right ideal `aR` of each element, as an index into `ideals`.
    ideal_of: Vec<usize>,
    ideals: Vec<Vec<bool>>,
}

impl<'a> Profile<'a> {
    pub fn new(fr: &'a FiniteRing) -> Self {
        let n = fr.len();
        let units = fr.units();
        let idempotents = fr.idempotents();

        let unit_regular: Vec<Option<usize>> = (0..n)
            .map(|a| {
                units
                    .iter()
                    .copied()
                    .find(|&u| fr.mul(fr.mul(a, u), a) == a)
            })
            .collect();
        let clean = (0..n)
            .map(|a| {
                idempotents
                    .iter()
                    .copied()
                    .find(|&e| fr.is_unit(fr.sub(a, e)))
            })
            .collect();
        let clear = (0..n)
            .map(|a| units.iter().any(|&u| unit_regular[fr.sub(a, u)].is_some()))
            .collect();
        let two_good: Vec<bool> = (0..n)
            .map(|a| units.iter().any(|&u| fr.is_unit(fr.sub(a, u))))
            .collect();
        let two_clean = (0..n)
            .map(|a| idempotents.iter().any(|&e| two_good[fr.sub(a, e)]))
            .collect();

        let mut ids: HashMap<Vec<bool>, usize> = HashMap::new();
        let mut ideals = Vec::new();
        let ideal_of: Vec<usize> = (0..n)
            .map(|a| {
                let mask = fr.right_ideal(a);
                *ids.entry(mask).or_insert_with_key(|m| {
                    ideals.push(m.clone());
                    ideals.len() - 1
                })
            })
            .collect();
        let one = fr.one();
        let exchange = (0..n)
            .map(|a| {
                let own = &ideals[ideal_of[a]];
                let co = &ideals[ideal_of[fr.sub(one, a)]];
                idempotents.iter().any(|&e| own[e] && co[fr.sub(one, e)])
            })
            .collect();

        Profile {
            fr,
            unit_regular,
            clean,
            clear,
            two_good,
            two_clean,
            exchange,
            ideal_of,
            ideals,
        }
    }

    pub fn is_unit_regular(&self, a: usize) -> bool {
        self.unit_regular[a].is_some()
    }

    pub fn is_clean(&self, a: usize) -> bool {
        self.clean[a].is_some()
    }

    /// First pair `(a, b)` with `aR + bR = R` for which no unit-regular `r`
    /// makes `a + b·r` a unit.
    pub fn ursr1_counterexample(&self) -> Option<(usize, usize)> {
        let fr = self.fr;
        let n = fr.len();
        let ur: Vec<usize> = (0..n).filter(|&r| self.is_unit_regular(r)).collect();
        let k = self.ideals.len();
        let comaximal: Vec<bool> = (0..k * k)
            .map(|i| fr.comaximal(&self.ideals[i / k], &self.ideals[i % k]))
            .collect();
        for a in 0..n {
            for b in 0..n {
                if !comaximal[self.ideal_of[a] * k + self.ideal_of[b]] {
                    continue;
                }
                if !ur.iter().any(|&r| fr.is_unit(fr.add(a, fr.mul(b, r)))) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::parse_ring;
    use crate::ring::Elem;

    #[test]
    fn z4_profile() {
        let fr = FiniteRing::new(&parse_ring("Z/4").unwrap(), 64).unwrap();
        let p = Profile::new(&fr);
        assert!(!p.is_unit_regular(2));
        assert!(p.clear.iter().all(|&c| c));
        assert!(p.ursr1_counterexample().is_none());
    }

    #[test]
    fn z2_is_not_two_good() {
        let fr = FiniteRing::new(&parse_ring("Z/2").unwrap(), 64).unwrap();
        let p = Profile::new(&fr);
        assert_eq!(p.two_good, vec![true, false]);
        assert_eq!(fr.elem(1), &Elem::Res(1));
    }
}
