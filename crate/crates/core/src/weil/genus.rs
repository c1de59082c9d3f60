use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// An element of `Z[h1, h2, h3, h4] / (h1^2, h2^2, h3^2, h4^2)`, the Chow ring
/// of (P^1)^4. Square-free monomials are keyed by bitmask.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ChowClass {
    terms: BTreeMap<u8, i64>,
}

impl ChowClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The pullback `h_k` of the point class from the k-th factor, `k` in 1..=4.
    pub fn h(k: usize) -> Self {
        assert!((1..=4).contains(&k), "factor index out of range");
        Self::monomial(1 << (k - 1), 1)
    }

    /// `h1 + h2 + h3 + h4`.
    pub fn hyperplane() -> Self {
        (1..=4).map(Self::h).fold(Self::zero(), |acc, h| &acc + &h)
    }

    fn monomial(mask: u8, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(mask, coeff);
        }
        Self { terms }
    }

    /// Coefficient of the square-free monomial with the given bitmask.
    pub fn coefficient(&self, mask: u8) -> i64 {
        self.terms.get(&mask).copied().unwrap_or(0)
    }

    /// Coefficient of the point class `h1 h2 h3 h4`.
    pub fn degree(&self) -> i64 {
        self.coefficient(0b1111)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;

    fn add(self, rhs: &ChowClass) -> ChowClass {
        let mut terms = self.terms.clone();
        for (&m, &c) in &rhs.terms {
            *terms.entry(m).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        ChowClass { terms }
    }
}

impl Mul for &ChowClass {
    type Output = ChowClass;

    fn mul(self, rhs: &ChowClass) -> ChowClass {
        let mut terms = BTreeMap::new();
        for (&m1, &c1) in &self.terms {
            for (&m2, &c2) in &rhs.terms {
                if m1 & m2 == 0 {
                    *terms.entry(m1 | m2).or_insert(0) += c1 * c2;
                }
            }
        }
        terms.retain(|_, c: &mut i64| *c != 0);
        ChowClass { terms }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GenusReport {
    /// Degree of `H^4`, which is `(K_X) = 2g - 2` for the complete intersection of
    /// three divisors of class `H` (adjunction: `K_X = (-2H + 3H)|_X = H|_X`).
    pub top_coefficient: i64,
    /// Degrees of `H^3 h_j` for `j = 1..4`.
    pub partial: [i64; 4],
    pub genus: i64,
    pub passed: bool,
}

pub fn genus_check() -> GenusReport {
    let h = ChowClass::hyperplane();
    let h3 = h.pow(3);
    let top_coefficient = (&h3 * &h).degree();
    let partial = [1, 2, 3, 4].map(|j| (&h3 * &ChowClass::h(j)).degree());
    let genus = top_coefficient / 2 + 1;
    GenusReport {
        top_coefficient,
        partial,
        genus,
        passed: top_coefficient == 24 && genus == 13 && 2 * genus - 2 == top_coefficient,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_24_and_genus_13() {
        let r = genus_check();
        assert_eq!(r.top_coefficient, 24);
        assert_eq!(r.genus, 13);
        assert_eq!(r.partial, [6; 4]);
        assert!(r.passed);
    }

    #[test]
    fn squares_vanish() {
        for k in 1..=4 {
            assert_eq!(ChowClass::h(k).pow(2), ChowClass::zero());
        }
        assert_eq!(ChowClass::hyperplane().pow(5), ChowClass::zero());
    }

    #[test]
    fn h_squared_counts_pairs() {
        let h2 = ChowClass::hyperplane().pow(2);
        assert_eq!(h2.coefficient(0b0011), 2);
        assert_eq!(h2.coefficient(0b0001), 0);
    }
}
