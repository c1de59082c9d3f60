//! Sparse multivariate polynomials over `Q(i)`.
//!
//! Every [`Polynomial`] is tied to a [`VariableRegistry`] that fixes the variable
//! names and their order. Terms are kept in a `BTreeMap` keyed by [`Monomial`],
//! ordered graded-lexicographically in registry index order, so iteration and
//! rendering are deterministic. Zero coefficients are never stored.

mod bidegree;
mod resultant;
mod univariate;

pub use bidegree::{common_zero_free, BidegreeForm, Block, ZeroFreeVerdict};
pub use resultant::{sylvester_matrix, sylvester_resultant, sylvester_resultant_formal};
pub use univariate::UnivariatePolynomial;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

/// Ordered, duplicate-free list of variable names.
#[derive(Debug, PartialEq, Eq)]
pub struct VariableRegistry {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableRegistry {
    /// Names must be identifiers (`[A-Za-z_][A-Za-z0-9_]*`) and may not be `i`,
    /// which is reserved for the imaginary unit.
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Self {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            let name = name.into();
            let mut chars = name.chars();
            let valid = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
                && name != "i";
            if !valid {
                return Err(Error::InvalidVariableName(name));
            }
            if out.index.contains_key(&name) {
                return Err(Error::DuplicateVariable(name));
            }
            out.index.insert(name.clone(), out.names.len());
            out.names.push(name);
        }
        Ok(Arc::new(out))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

fn same_registry(a: &Arc<VariableRegistry>, b: &Arc<VariableRegistry>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// Exponent vector with one slot per registry variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    /// Builds a monomial from `(name, exponent)` pairs; repeated names accumulate.
    pub fn from_powers(registry: &VariableRegistry, powers: &[(&str, u32)]) -> Result<Self> {
        let mut exps = vec![0; registry.len()];
        for &(name, e) in powers {
            exps[registry.require(name)?] += e;
        }
        Ok(Self(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    fn render(&self, registry: &VariableRegistry) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| match e {
                1 => registry.name(k).to_string(),
                _ => format!("{}^{}", registry.name(k), e),
            })
            .collect();
        parts.join("*")
    }
}

/// Graded lexicographic: total degree first, then exponents compared from index 0.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    registry: Arc<VariableRegistry>,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_registry(&self.registry, &other.registry) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(registry: &Arc<VariableRegistry>) -> Self {
        Self {
            registry: Arc::clone(registry),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(registry: &Arc<VariableRegistry>) -> Self {
        Self::constant(registry, GaussianRational::one())
    }

    pub fn constant(registry: &Arc<VariableRegistry>, c: impl Into<GaussianRational>) -> Self {
        Self::monomial(registry, Monomial::one(registry.len()), c.into())
    }

    pub fn var(registry: &Arc<VariableRegistry>, name: &str) -> Result<Self> {
        let k = registry.require(name)?;
        let mut exps = vec![0; registry.len()];
        exps[k] = 1;
        Ok(Self::monomial(registry, Monomial(exps), GaussianRational::one()))
    }

    /// Product of the named variables with coefficient 1, e.g. `["s", "t", "t"]` is `s*t^2`.
    pub fn product_of(registry: &Arc<VariableRegistry>, names: &[&str]) -> Result<Self> {
        let powers: Vec<(&str, u32)> = names.iter().map(|&n| (n, 1)).collect();
        Ok(Self::monomial(
            registry,
            Monomial::from_powers(registry, &powers)?,
            GaussianRational::one(),
        ))
    }

    pub fn monomial(registry: &Arc<VariableRegistry>, m: Monomial, c: GaussianRational) -> Self {
        assert_eq!(m.0.len(), registry.len(), "monomial arity does not match registry");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            registry: Arc::clone(registry),
            terms,
        }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(registry: &Arc<VariableRegistry>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut p = Self::zero(registry);
        for (m, c) in terms {
            assert_eq!(m.0.len(), registry.len(), "monomial arity does not match registry");
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn registry(&self) -> &Arc<VariableRegistry> {
        &self.registry
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial, `None` otherwise.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        if !self.is_constant() {
            return None;
        }
        self.terms.values().next().cloned()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, name: &str) -> Result<u32> {
        let k = self.registry.require(name)?;
        Ok(self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0))
    }

    /// Names of the variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<&str> {
        (0..self.registry.len())
            .filter(|&k| self.terms.keys().any(|m| m.0[k] > 0))
            .map(|k| self.registry.name(k))
            .collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_registry(&self.registry, &other.registry) {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let prod = c1 * c2;
                *acc.entry(m1.mul(m2)).or_default() += &prod;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self {
            registry: Arc::clone(&self.registry),
            terms: acc,
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.registry);
        }
        Self {
            registry: Arc::clone(&self.registry),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.registry);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder
    /// (or the divisor is zero).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.check(divisor).is_err() {
            return None;
        }
        let (lead_m, lead_c) = divisor.leading_term()?;
        let lead_inv = lead_c.inv().ok()?;
        if divisor.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                terms.insert(m.div(lead_m)?, c * &lead_inv);
            }
            return Some(Self {
                registry: Arc::clone(&self.registry),
                terms,
            });
        }
        let mut rem = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some((m, c)) = rem.terms.last_key_value() {
            let qm = m.div(lead_m)?;
            let qc = c * &lead_inv;
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), &-(dc * &qc));
            }
            quotient.insert(qm, qc);
        }
        Some(Self {
            registry: Arc::clone(&self.registry),
            terms: quotient,
        })
    }

    /// Splits off the powers of one variable: entry `k` is the coefficient of `var^k`.
    pub fn coefficients_in_var(&self, name: &str) -> Result<Vec<Polynomial>> {
        let k = self.registry.require(name)?;
        let deg = self.degree_in(name)? as usize;
        let mut out = vec![Self::zero(&self.registry); deg + 1];
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = std::mem::take(&mut rest.0[k]) as usize;
            out[e].add_term(rest, c);
        }
        Ok(out)
    }

    /// Writes `self = sum coeff_j * basis_j + remainder` with scalar coefficients.
    ///
    /// The remainder holds every term whose monomial is not in `basis`. If a
    /// monomial is listed twice, the first slot receives the coefficient.
    pub fn coefficient_vector(&self, basis: &[Monomial]) -> (Vec<GaussianRational>, Polynomial) {
        let mut coeffs = vec![GaussianRational::zero(); basis.len()];
        let mut remainder = Self::zero(&self.registry);
        for (m, c) in &self.terms {
            match basis.iter().position(|b| b == m) {
                Some(j) => coeffs[j] = c.clone(),
                None => remainder.add_term(m.clone(), c),
            }
        }
        (coeffs, remainder)
    }

    /// Like [`coefficient_vector`](Self::coefficient_vector), but only the exponents of
    /// `main` variables are matched against `basis`; the coefficients are
    /// polynomials in the remaining variables.
    pub fn coefficient_vector_in(
        &self,
        main: &[&str],
        basis: &[Monomial],
    ) -> Result<(Vec<Polynomial>, Polynomial)> {
        let main_idx: Vec<usize> = main
            .iter()
            .map(|n| self.registry.require(n))
            .collect::<Result<_>>()?;
        let mut coeffs = vec![Self::zero(&self.registry); basis.len()];
        let mut remainder = Self::zero(&self.registry);
        for (m, c) in &self.terms {
            let mut main_part = vec![0; self.registry.len()];
            let mut rest = m.clone();
            for &k in &main_idx {
                main_part[k] = std::mem::take(&mut rest.0[k]);
            }
            let main_part = Monomial(main_part);
            match basis.iter().position(|b| *b == main_part) {
                Some(j) => coeffs[j].add_term(rest, c),
                None => remainder.add_term(m.clone(), c),
            }
        }
        Ok((coeffs, remainder))
    }

    /// Ring homomorphism sending each bound variable to its image; unbound
    /// variables go to the same-named variable of the target registry.
    ///
    /// The target registry is that of the first image, or `self`'s registry when
    /// `bindings` is empty.
    pub fn substitute(&self, bindings: &[(&str, Polynomial)]) -> Result<Polynomial> {
        let target = bindings
            .first()
            .map(|(_, p)| Arc::clone(&p.registry))
            .unwrap_or_else(|| Arc::clone(&self.registry));
        self.substitute_into(bindings, &target)
    }

    /// [`substitute`](Self::substitute) with an explicit target registry. With no
    /// bindings this re-homes the polynomial into `target` by variable name.
    pub fn substitute_into(
        &self,
        bindings: &[(&str, Polynomial)],
        target: &Arc<VariableRegistry>,
    ) -> Result<Polynomial> {
        let mut images: Vec<Option<Polynomial>> = vec![None; self.registry.len()];
        for (name, image) in bindings {
            let k = self.registry.require(name)?;
            if !same_registry(&image.registry, target) {
                return Err(Error::RegistryMismatch);
            }
            images[k] = Some(image.clone());
        }
        for (k, slot) in images.iter_mut().enumerate() {
            if slot.is_none() && self.terms.keys().any(|m| m.0[k] > 0) {
                *slot = Some(Polynomial::var(target, self.registry.name(k))?);
            }
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = images[k].as_ref().expect("image resolved above");
                let power = powers.entry((k, e)).or_insert_with(|| image.pow(e));
                term = &term * &*power;
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, &tc);
            }
        }
        Ok(out)
    }

    /// Evaluates at a point given as `(name, value)` pairs. Every variable that
    /// occurs in `self` must be bound.
    pub fn evaluate(&self, point: &[(&str, GaussianRational)]) -> Result<GaussianRational> {
        let mut values: Vec<Option<&GaussianRational>> = vec![None; self.registry.len()];
        for (name, v) in point {
            values[self.registry.require(name)?] = Some(v);
        }
        let mut powers: HashMap<(usize, u32), GaussianRational> = HashMap::new();
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values[k].ok_or_else(|| Error::UnboundVariable(self.registry.name(k).to_string()))?;
                let power = powers.entry((k, e)).or_insert_with(|| {
                    (1..e).fold(v.clone(), |a, _| &a * v)
                });
                term *= &*power;
            }
            acc += &term;
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical rendering: terms in descending monomial order, `*` between
    /// factors, non-real coefficients parenthesized. The output re-parses with
    /// the command-line polynomial grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.has_negative_lead();
            let mag = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff = if mag.is_real() || mag.re().is_zero() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{}", m.render(&self.registry))?;
            } else {
                write!(f, "{coeff}*{}", m.render(&self.registry))?;
            }
        }
        Ok(())
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        /// # Panics
        ///
        /// Panics if the operands use different registries; the `checked_*`
        /// methods return [`Error::RegistryMismatch`] instead.
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;

            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial registries differ")
            }
        }

        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            registry: Arc::clone(&self.registry),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use proptest::prelude::*;

    fn reg() -> Arc<VariableRegistry> {
        VariableRegistry::new(["s", "t", "x", "y"]).unwrap()
    }

    fn v(r: &Arc<VariableRegistry>, n: &str) -> Polynomial {
        Polynomial::var(r, n).unwrap()
    }

    #[test]
    fn registry_rejects_bad_names() {
        assert!(matches!(VariableRegistry::new(["s", "s"]), Err(Error::DuplicateVariable(_))));
        assert!(matches!(VariableRegistry::new(["i"]), Err(Error::InvalidVariableName(_))));
        assert!(matches!(VariableRegistry::new(["2x"]), Err(Error::InvalidVariableName(_))));
    }

    #[test]
    fn difference_of_squares() {
        let r = reg();
        let (s, t) = (v(&r, "s"), v(&r, "t"));
        let lhs = &(&s + &t) * &(&s - &t);
        assert_eq!(lhs, &s.pow(2) - &t.pow(2));
        assert_eq!(&lhs + &Polynomial::zero(&r), lhs);
    }

    #[test]
    fn square_of_a_four_term_sum_has_ten_terms() {
        let r = reg();
        let a1 = ["s", "t", "x", "y"].iter().fold(Polynomial::zero(&r), |acc, n| &acc + &v(&r, n));
        assert_eq!(a1.pow(2).len(), 10);
    }

    #[test]
    fn mismatched_registries_error() {
        let other = VariableRegistry::new(["u"]).unwrap();
        let p = v(&reg(), "s");
        let q = v(&other, "u");
        assert!(matches!(p.checked_add(&q), Err(Error::RegistryMismatch)));
        assert!(matches!(p.checked_mul(&q), Err(Error::RegistryMismatch)));
    }

    #[test]
    fn substitute_examples() {
        let r = reg();
        let sx_ty = &(&v(&r, "s") * &v(&r, "x")) + &(&v(&r, "t") * &v(&r, "y"));
        let restricted = sx_ty
            .substitute(&[("x", v(&r, "s")), ("y", v(&r, "t"))])
            .unwrap();
        assert_eq!(restricted, &v(&r, "s").pow(2) + &v(&r, "t").pow(2));
        assert_eq!(sx_ty.substitute(&[]).unwrap(), sx_ty);
        assert!(matches!(
            sx_ty.substitute(&[("q", v(&r, "s"))]),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn substitute_into_smaller_registry_needs_names() {
        let r = reg();
        let small = VariableRegistry::new(["s"]).unwrap();
        let p = &v(&r, "s") * &v(&r, "t");
        assert!(matches!(p.substitute_into(&[], &small), Err(Error::UnknownVariable(_))));
        let q = p.substitute_into(&[("t", Polynomial::constant(&small, 3))], &small).unwrap();
        assert_eq!(q, Polynomial::var(&small, "s").unwrap().scale(&3.into()));
    }

    #[test]
    fn evaluate_examples() {
        let r = reg();
        let a1 = &(&v(&r, "s") + &v(&r, "t")) + &(&v(&r, "x") + &v(&r, "y"));
        let one = GaussianRational::one();
        let pt: Vec<(&str, GaussianRational)> =
            ["s", "t", "x", "y"].iter().map(|&n| (n, one.clone())).collect();
        assert_eq!(a1.evaluate(&pt).unwrap(), GaussianRational::from(4));
        assert!(matches!(a1.evaluate(&pt[..2]), Err(Error::UnboundVariable(_))));
    }

    #[test]
    fn coefficient_vector_examples() {
        let r = reg();
        let basis = vec![
            Monomial::from_powers(&r, &[("s", 2)]).unwrap(),
            Monomial::from_powers(&r, &[("s", 1), ("t", 1)]).unwrap(),
        ];
        let (c, rem) = Polynomial::zero(&r).coefficient_vector(&basis);
        assert!(c.iter().all(Zero::is_zero) && rem.is_zero());
        let p = &v(&r, "x") * &v(&r, "y");
        let (c, rem) = p.coefficient_vector(&basis);
        assert!(c.iter().all(Zero::is_zero));
        assert_eq!(rem, p);
        let p = &(&v(&r, "s").pow(2).scale(&3.into()) - &(&v(&r, "s") * &v(&r, "t"))) + &v(&r, "x");
        let (c, rem) = p.coefficient_vector(&basis);
        assert_eq!(c, vec![GaussianRational::from(3), GaussianRational::from(-1)]);
        assert_eq!(rem, v(&r, "x"));
    }

    #[test]
    fn coefficient_vector_in_keeps_parameters() {
        let r = reg();
        // (x + 2y) s^2 + t s^2 -> coefficient of s^2 over main var s
        let p = &(&(&v(&r, "x") + &v(&r, "y").scale(&2.into())) * &v(&r, "s").pow(2)) + &v(&r, "t");
        let basis = vec![Monomial::from_powers(&r, &[("s", 2)]).unwrap()];
        let (c, rem) = p.coefficient_vector_in(&["s", "t"], &basis).unwrap();
        assert_eq!(c[0], &v(&r, "x") + &v(&r, "y").scale(&2.into()));
        assert_eq!(rem, v(&r, "t"));
    }

    #[test]
    fn exact_division() {
        let r = reg();
        let (s, t) = (v(&r, "s"), v(&r, "t"));
        let a = &(&s + &t) * &(&s - &t.scale(&rational(1, 2).into()));
        assert_eq!(a.div_exact(&(&s + &t)).unwrap(), &s - &t.scale(&rational(1, 2).into()));
        assert!(a.div_exact(&(&s + &v(&r, "x"))).is_none());
        assert!(a.div_exact(&Polynomial::zero(&r)).is_none());
    }

    #[test]
    fn rendering_is_canonical() {
        let r = reg();
        let (s, t) = (v(&r, "s"), v(&r, "t"));
        let i = GaussianRational::i();
        let p = &(&s.pow(2) - &(&s * &t).scale(&rational(1, 2).into())) + &t.scale(&i);
        assert_eq!(p.to_string(), "s^2 - 1/2*s*t + i*t");
        let q = &Polynomial::constant(&r, GaussianRational::new(rational(-1, 1), rational(2, 1))) - &s;
        assert_eq!(q.to_string(), "-s - (1-2*i)");
    }

    fn arb_poly(r: Arc<VariableRegistry>) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..2, 0u32..2), -5i64..6, -2i64..3), 0..6).prop_map(
            move |terms| {
                Polynomial::from_terms(
                    &r,
                    terms.into_iter().map(|((a, b, c, d), re, im)| {
                        (
                            Monomial::from_exponents(vec![a, b, c, d]),
                            GaussianRational::new(rational(re, 1), rational(im, 1)),
                        )
                    }),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(reg()), q in arb_poly(reg()), w in arb_poly(reg())) {
            prop_assert_eq!(&(&p + &q) + &w, &p + &(&q + &w));
            prop_assert_eq!(&(&p * &q) * &w, &p * &(&q * &w));
            prop_assert_eq!(&p * &(&q + &w), &(&p * &q) + &(&p * &w));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn division_recovers_factor(p in arb_poly(reg()), q in arb_poly(reg())) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
        }
    }
}
