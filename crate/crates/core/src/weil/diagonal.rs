//! Restriction to the fixed locus of `sigma^2`, the diagonal `{(s, t, s, t)}`.

use std::sync::{Arc, OnceLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, Rational};
use crate::multipoly::{common_zero_free, BidegreeForm, Polynomial, VariableRegistry, ZeroFreeVerdict};

use super::{coordinate_registry, named_generators, CoefficientTriple};

fn diagonal_registry() -> &'static Arc<VariableRegistry> {
    static REG: OnceLock<Arc<VariableRegistry>> = OnceLock::new();
    REG.get_or_init(|| VariableRegistry::new(["s", "t"]).expect("valid names"))
}

/// Restricts a form in `s, t, x, y` to the diagonal by `x -> s`, `y -> t`.
/// The result lives in the two-variable registry `s, t`.
pub fn restrict_to_diagonal(p: &Polynomial) -> Result<Polynomial> {
    let reg = diagonal_registry();
    let s = Polynomial::var(reg, "s")?;
    let t = Polynomial::var(reg, "t")?;
    p.substitute_into(&[("x", s), ("y", t)], reg)
}

/// Affine forms of the restricted invariant generators up to scalars:
/// `s + t, s t, s t (s + t), s^2 + t^2, s^2 t^2, 1`.
fn reference_forms() -> Vec<Polynomial> {
    let reg = diagonal_registry();
    let s = Polynomial::var(reg, "s").expect("s");
    let t = Polynomial::var(reg, "t").expect("t");
    let st = &s * &t;
    vec![
        &s + &t,
        st.clone(),
        &st * &(&s + &t),
        &s.pow(2) + &t.pow(2),
        st.pow(2),
        Polynomial::one(reg),
    ]
}

#[derive(Clone, Debug)]
pub struct DiagonalReport {
    /// `a_k` restricted equals `factor_k` times the k-th reference form.
    pub factors: Vec<Rational>,
    pub restricted: Vec<Polynomial>,
    pub base_points: ZeroFreeVerdict,
}

fn as_form(p: Polynomial) -> Result<BidegreeForm> {
    BidegreeForm::new(p, "s", "t", 2, 2)
}

/// Restricts `a1..a6` to the diagonal, records their proportionality factors
/// against the reference forms, and certifies that the restrictions have no
/// common zero on P^1 x P^1.
pub fn verify_diagonal() -> Result<DiagonalReport> {
    let gens = named_generators();
    let mut factors = Vec::new();
    let mut restricted = Vec::new();
    for ((name, g), reference) in gens.iter().take(6).zip(reference_forms()) {
        let r = restrict_to_diagonal(g)?;
        let fail = || Error::IdentityFailed {
            name: format!("{name} on the diagonal"),
            residual: r.to_string(),
        };
        let (m, c) = reference.leading_term().expect("reference forms are nonzero");
        let factor = r.coefficient(m).checked_div(c)?;
        if factor.is_zero() || r != reference.scale(&factor) {
            return Err(fail());
        }
        factors.push(factor.to_rational().ok_or_else(fail)?);
        restricted.push(r);
    }
    let forms = restricted.iter().cloned().map(as_form).collect::<Result<Vec<_>>>()?;
    let base_points = common_zero_free(&forms)?;
    if base_points != ZeroFreeVerdict::CertifiedEmpty {
        return Err(Error::BasePointNotExcluded);
    }
    Ok(DiagonalReport {
        factors,
        restricted,
        base_points,
    })
}

/// The three defining forms `a4 - (A.a)`, `a5 - (B.a)`, `a6 - (C.a)` of the
/// curve, restricted to the diagonal as bidegree (2, 2) forms.
pub fn diagonal_forms(triple: &CoefficientTriple) -> Result<Vec<BidegreeForm>> {
    let gens = named_generators();
    let a: Vec<Polynomial> = gens.iter().take(6).map(|(_, g)| g.clone()).collect();
    let reg = coordinate_registry();
    triple
        .rows()
        .iter()
        .enumerate()
        .map(|(k, row)| {
            let linear = row.iter().zip(&a).fold(Polynomial::zero(reg), |acc, (c, ai)| {
                &acc + &ai.scale(&GaussianRational::from_rational(c.clone()))
            });
            as_form(restrict_to_diagonal(&(&a[3 + k] - &linear))?)
        })
        .collect()
}

/// Decides whether the curve cut out by the triple misses the diagonal, which
/// is where every fixed point of `sigma` (and of `sigma^2`) would lie.
pub fn fixed_point_free_check(triple: &CoefficientTriple) -> Result<ZeroFreeVerdict> {
    common_zero_free(&diagonal_forms(triple)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use crate::weil::GroupElement;

    fn int_triple(v: [i64; 9]) -> CoefficientTriple {
        CoefficientTriple::from_values(v.map(|k| rational(k, 1)))
    }

    #[test]
    fn factors_are_2_4_2_1_1_1() {
        let report = verify_diagonal().unwrap();
        let expected: Vec<Rational> = [2, 4, 2, 1, 1, 1].iter().map(|&k| rational(k, 1)).collect();
        assert_eq!(report.factors, expected);
        assert_eq!(report.base_points, ZeroFreeVerdict::CertifiedEmpty);
    }

    #[test]
    fn sample_restrictions() {
        let gens = named_generators();
        assert_eq!(restrict_to_diagonal(&gens[3].1).unwrap().to_string(), "s^2 + t^2");
        assert_eq!(restrict_to_diagonal(&gens[0].1).unwrap().to_string(), "2*s + 2*t");
        assert_eq!(restrict_to_diagonal(&gens[1].1).unwrap().to_string(), "4*s*t");
    }

    #[test]
    fn diagonal_is_fixed_by_sigma_squared() {
        // sigma^2 swaps (s, t) with (x, y), so restriction commutes with it
        let s2 = GroupElement::sigma().pow(2);
        for (_, g) in named_generators() {
            let lhs = restrict_to_diagonal(&s2.apply(&g).unwrap()).unwrap();
            assert_eq!(lhs, restrict_to_diagonal(&g).unwrap());
        }
    }

    // Verdicts below were cross-checked with a Groebner-basis computation on
    // all four affine charts of P^1 x P^1.
    #[test]
    fn generic_triples_are_fixed_point_free() {
        let t = CoefficientTriple::from_values([
            rational(1, 1),
            rational(2, 1),
            rational(3, 1),
            rational(-1, 1),
            rational(0, 1),
            rational(2, 1),
            rational(1, 2),
            rational(-3, 1),
            rational(1, 1),
        ]);
        assert_eq!(fixed_point_free_check(&t).unwrap(), ZeroFreeVerdict::CertifiedEmpty);
        let t = int_triple([-7, 3, 10, 2, -5, -1, 4, 6, -9]);
        assert_eq!(fixed_point_free_check(&t).unwrap(), ZeroFreeVerdict::CertifiedEmpty);
        assert_eq!(
            fixed_point_free_check(&CoefficientTriple::origin()).unwrap(),
            ZeroFreeVerdict::CertifiedEmpty
        );
    }

    #[test]
    fn curve_through_a_diagonal_point_is_not_certified() {
        // at (s, t) = (1, 1): a1 = 4, a4 = 2, a5 = 1, a6 = 1 on the diagonal
        let q = rational(1, 4);
        let z = rational(0, 1);
        let t = CoefficientTriple::from_values([
            rational(1, 2),
            z.clone(),
            z.clone(),
            q.clone(),
            z.clone(),
            z.clone(),
            q,
            z.clone(),
            z,
        ]);
        assert_eq!(fixed_point_free_check(&t).unwrap(), ZeroFreeVerdict::Inconclusive);
    }
}
