//! Elimination of `a4, a5, a6` through the linear relations
//! `a4 = A.a`, `a5 = B.a`, `a6 = C.a` (with `a = (a1, a2, a3)`), and the
//! matrices that result.
//!
//! After the substitution every right-hand side of the `b` and `c*d`
//! relations is a quadratic form in `a1, a2, a3` (or a single `b`-product), so
//! it has a coefficient vector in the basis
//! `alpha = (a1^2, a2^2, a3^2, a1 a2, a1 a3, a2 a3)` extended by
//! `(b1 b2, b2 b3, b2 b4)`. Reading off those vectors gives
//!
//! * `M`, the 6x6 matrix with `gamma = M alpha` for the six `c*d` combinations,
//! * the 9x9 matrix over the extended basis for all nine `c*d` relations,
//! * the 7x6 matrix of the seven `b` relations, whose left kernel is the
//!   vanishing quadric.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, Rational};
use crate::linalg::{PolyMatrix, ScalarMatrix};
use crate::multipoly::{Monomial, Polynomial, VariableRegistry};

use super::{coefficient_registry, quadric_relations_b, quadric_relations_cd, Identity, COEFFICIENT_NAMES};

pub const ALPHA_NAMES: [&str; 6] = ["a1^2", "a2^2", "a3^2", "a1*a2", "a1*a3", "a2*a3"];

pub const B_TRIPLE_NAMES: [&str; 3] = ["b1*b2", "b2*b3", "b2*b4"];

/// The six combinations forming `gamma`, by relation name.
pub const GAMMA_NAMES: [&str; 6] = [
    "c1*d1",
    "c2*d2",
    "c3*d3",
    "(c1*d2-i*c2*d1)/(1-i)",
    "(c1*d3+c3*d1)/2",
    "(c2*d3+i*c3*d2)/(1+i)",
];

/// The remaining three `c*d` relations, whose right sides are `b1 b2, b2 b3, b2 b4`.
const EXTRA_ROW_NAMES: [&str; 3] = [
    "(c1*d2+i*c2*d1)/(1+i)",
    "-i*(c2*d3-i*c3*d2)/(1+i)",
    "i*(c1*d3-c3*d1)/2",
];

const MAIN_VARS: [&str; 7] = ["a1", "a2", "a3", "b1", "b2", "b3", "b4"];

fn elimination_registry() -> &'static Arc<VariableRegistry> {
    static REG: OnceLock<Arc<VariableRegistry>> = OnceLock::new();
    REG.get_or_init(|| {
        let names = ["a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4"]
            .into_iter()
            .chain(COEFFICIENT_NAMES);
        VariableRegistry::new(names).expect("valid names")
    })
}

/// Rational coefficients `A1..A3, B1..B3, C1..C3` of the three linear relations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoefficientTriple {
    rows: [[Rational; 3]; 3],
}

impl CoefficientTriple {
    pub fn from_values(values: [Rational; 9]) -> Self {
        let mut it = values.into_iter();
        let mut row = || [(); 3].map(|_| it.next().expect("nine values"));
        let rows = [row(), row(), row()];
        Self { rows }
    }

    pub fn from_slice(values: &[Rational]) -> Result<Self> {
        let arr: [Rational; 9] = values
            .to_vec()
            .try_into()
            .map_err(|v: Vec<Rational>| Error::Shape(format!("expected 9 coefficients, got {}", v.len())))?;
        Ok(Self::from_values(arr))
    }

    pub fn origin() -> Self {
        Self::from_values(std::array::from_fn(|_| Rational::zero()))
    }

    /// `[A, B, C]`, each a row of three.
    pub fn rows(&self) -> &[[Rational; 3]; 3] {
        &self.rows
    }

    pub fn values(&self) -> Vec<Rational> {
        self.rows.iter().flatten().cloned().collect()
    }

    /// The triple as an evaluation point for polynomials in `A1..C3`.
    pub fn point(&self) -> Vec<(&'static str, GaussianRational)> {
        COEFFICIENT_NAMES
            .iter()
            .zip(self.values())
            .map(|(&n, v)| (n, GaussianRational::from_rational(v)))
            .collect()
    }
}

impl fmt::Display for CoefficientTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values().iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for CoefficientTriple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.values().iter().map(ToString::to_string).collect();
        parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CoefficientTriple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(deserializer)?;
        let values = parts
            .iter()
            .map(|p| p.parse::<Rational>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::from_slice(&values).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug)]
pub struct EliminationResult {
    /// `alpha` followed by `b1 b2, b2 b3, b2 b4`, as monomials of the elimination registry.
    pub basis: Vec<Monomial>,
    /// 6x6 over `A1..C3`, rows in `GAMMA_NAMES` order, columns in `ALPHA_NAMES` order.
    pub m: PolyMatrix,
    /// 9x9: the rows of `M` padded with zeros, then the three unit rows.
    pub full: PolyMatrix,
    /// 7x6: the `b` relations in the basis `alpha`.
    pub quadric: PolyMatrix,
}

/// Numeric matrices at a fixed coefficient triple.
#[derive(Clone, Debug)]
pub struct SpecializedElimination {
    pub m: ScalarMatrix,
    pub full: ScalarMatrix,
    pub quadric: ScalarMatrix,
}

fn extended_basis(reg: &VariableRegistry) -> Vec<Monomial> {
    let pairs: [(&str, &str); 9] = [
        ("a1", "a1"),
        ("a2", "a2"),
        ("a3", "a3"),
        ("a1", "a2"),
        ("a1", "a3"),
        ("a2", "a3"),
        ("b1", "b2"),
        ("b2", "b3"),
        ("b2", "b4"),
    ];
    pairs
        .iter()
        .map(|&(u, v)| Monomial::from_powers(reg, &[(u, 1), (v, 1)]).expect("elimination names"))
        .collect()
}

fn linear_bindings() -> Result<Vec<(&'static str, Polynomial)>> {
    let reg = elimination_registry();
    let a: Vec<Polynomial> = ["a1", "a2", "a3"]
        .iter()
        .map(|n| Polynomial::var(reg, n))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (target, prefix) in [("a4", "A"), ("a5", "B"), ("a6", "C")] {
        let mut image = Polynomial::zero(reg);
        for (k, ak) in a.iter().enumerate() {
            let coeff = Polynomial::var(reg, &format!("{prefix}{}", k + 1))?;
            image = &image + &(&coeff * ak);
        }
        out.push((target, image));
    }
    Ok(out)
}

/// Coefficients of one relation's right side in the extended basis, as
/// polynomials in `A1..C3`.
fn row_of(identity: &Identity, basis: &[Monomial], bindings: &[(&str, Polynomial)]) -> Result<Vec<Polynomial>> {
    let reg = elimination_registry();
    let rhs = identity.rhs.substitute_into(&[], reg)?;
    let eliminated = rhs.substitute_into(bindings, reg)?;
    let (coeffs, remainder) = eliminated.coefficient_vector_in(&MAIN_VARS, basis)?;
    if !remainder.is_zero() {
        return Err(Error::NonzeroRemainder {
            row: identity.name.to_string(),
            remainder: remainder.to_string(),
        });
    }
    coeffs
        .iter()
        .map(|c| c.substitute_into(&[], coefficient_registry()))
        .collect()
}

fn find<'a>(relations: &'a [Identity], name: &str) -> &'a Identity {
    relations
        .iter()
        .find(|r| r.name == name)
        .unwrap_or_else(|| panic!("relation {name} is defined"))
}

/// Symbolic elimination over `Q[A1..C3]`.
pub fn eliminate() -> Result<EliminationResult> {
    let reg = elimination_registry();
    let basis = extended_basis(reg);
    let bindings = linear_bindings()?;

    let cd = quadric_relations_cd();
    let mut full_rows = Vec::new();
    for name in GAMMA_NAMES.iter().chain(&EXTRA_ROW_NAMES) {
        full_rows.push(row_of(find(&cd, name), &basis, &bindings)?);
    }
    let m_rows: Vec<Vec<Polynomial>> = full_rows[..6].iter().map(|r| r[..6].to_vec()).collect();

    let mut quadric_rows = Vec::new();
    for rel in quadric_relations_b() {
        let row = row_of(&rel, &basis, &bindings)?;
        if let Some(extra) = row[6..].iter().find(|c| !c.is_zero()) {
            return Err(Error::NonzeroRemainder {
                row: rel.name.to_string(),
                remainder: extra.to_string(),
            });
        }
        quadric_rows.push(row[..6].to_vec());
    }

    Ok(EliminationResult {
        basis,
        m: PolyMatrix::from_rows(m_rows)?,
        full: PolyMatrix::from_rows(full_rows)?,
        quadric: PolyMatrix::from_rows(quadric_rows)?,
    })
}

impl EliminationResult {
    pub fn specialize(&self, triple: &CoefficientTriple) -> Result<SpecializedElimination> {
        let point = triple.point();
        Ok(SpecializedElimination {
            m: self.m.evaluate(&point)?,
            full: self.full.evaluate(&point)?,
            quadric: self.quadric.evaluate(&point)?,
        })
    }
}

/// `det M` as a polynomial in `A1..C3`. Also checks that the 9x9 determinant
/// equals `det M` up to sign.
pub fn det_m(result: &EliminationResult) -> Result<Polynomial> {
    let det = result.m.det_bareiss();
    let full = result.full.det_bareiss();
    if full != det && full != -&det {
        return Err(Error::BlockDeterminantMismatch);
    }
    Ok(det)
}

/// Dimension of the space of linear relations among the seven `b` relations.
pub fn quadric_kernel_dim(spec: &SpecializedElimination) -> usize {
    spec.quadric.transpose().kernel_basis().len()
}

/// Coefficients `v` (one per `b` relation) with `sum v_k row_k = 0`, when that
/// relation is unique up to scale.
pub fn quadric_q(spec: &SpecializedElimination) -> Result<Vec<GaussianRational>> {
    let mut kernel = spec.quadric.transpose().kernel_basis();
    if kernel.len() != 1 {
        return Err(Error::KernelNotUnique { dim: kernel.len() });
    }
    Ok(kernel.remove(0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndependenceVerdict {
    pub det_value: GaussianRational,
    pub passed: bool,
}

/// Evaluates `det M` at the triple and cross-checks it against the numeric
/// 6x6 and 9x9 determinants of the specialized matrices.
pub fn independence_certificate(
    result: &EliminationResult,
    det: &Polynomial,
    triple: &CoefficientTriple,
) -> Result<IndependenceVerdict> {
    let det_value = det.evaluate(&triple.point())?;
    let spec = result.specialize(triple)?;
    let numeric = spec.m.det_bareiss()?;
    let full = spec.full.det_bareiss()?;
    if numeric != det_value || (full != det_value && full != -&det_value) {
        return Err(Error::BlockDeterminantMismatch);
    }
    Ok(IndependenceVerdict {
        passed: !det_value.is_zero(),
        det_value,
    })
}
