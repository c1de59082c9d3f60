//! The cubic relation among `a1..a6` and the quadratic relations expressing the
//! `b`-products and `c*d`-products through the invariant generators.
//!
//! Each relation is stated over the formal generator symbols and checked by
//! substituting the forms of [`named_generators`](super::named_generators) and
//! comparing with zero.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::linalg::ScalarMatrix;
use crate::multipoly::{Monomial, Polynomial};

use super::{coordinate_registry, generator_registry, half, named_generators};

/// A claimed polynomial identity `lhs = rhs` over the generator symbols.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

/// Outcome of one identity: the residual `lhs - rhs` in `s, t, x, y`.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub residual: Polynomial,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

impl Identity {
    /// `lhs - rhs` after substituting the generator forms.
    pub fn residual(&self) -> Result<Polynomial> {
        (&self.lhs - &self.rhs).substitute_into(&named_generators(), coordinate_registry())
    }

    pub fn check(&self) -> Result<IdentityCheck> {
        Ok(IdentityCheck {
            name: self.name,
            residual: self.residual()?,
        })
    }

    pub fn verify(&self) -> Result<()> {
        let c = self.check()?;
        if c.passed() {
            Ok(())
        } else {
            Err(Error::IdentityFailed {
                name: self.name.to_string(),
                residual: c.residual.to_string(),
            })
        }
    }
}

fn g(name: &str) -> Polynomial {
    Polynomial::var(generator_registry(), name).expect("generator name")
}

fn k(c: i64) -> GaussianRational {
    GaussianRational::from(c)
}

fn zero() -> Polynomial {
    Polynomial::zero(generator_registry())
}

/// The cubic satisfied by the invariant generators:
/// `a1^2 a5 - a1 a3 a4 + a2 a4^2 - 4 a2 a5 a6 + a3^2 a6 = 0`.
///
/// It spans the space of cubic relations among `a1..a6` (see
/// [`cubic_relation_space`]); with `a4` in place of `a5` in the first term the
/// residual is nonzero.
pub fn cubic_relation() -> Identity {
    let (a1, a2, a3, a4, a5, a6) = (g("a1"), g("a2"), g("a3"), g("a4"), g("a5"), g("a6"));
    let terms = [
        &a1.pow(2) * &a5,
        -&(&(&a1 * &a3) * &a4),
        &a2 * &a4.pow(2),
        (&(&a2 * &a5) * &a6).scale(&k(-4)),
        &a3.pow(2) * &a6,
    ];
    let lhs = terms.iter().fold(zero(), |acc, t| &acc + t);
    Identity {
        name: "cubic",
        lhs,
        rhs: zero(),
    }
}

/// The seven relations for the `b`-products.
pub fn quadric_relations_b() -> Vec<Identity> {
    let (a1, a2, a3, a4, a5, a6) = (g("a1"), g("a2"), g("a3"), g("a4"), g("a5"), g("a6"));
    let (b1, b2, b3, b4) = (g("b1"), g("b2"), g("b3"), g("b4"));
    vec![
        Identity {
            name: "b1^2",
            lhs: b1.pow(2),
            rhs: &a1.pow(2) - &(&a2 * &a6).scale(&k(4)),
        },
        Identity {
            name: "b2^2",
            lhs: b2.pow(2),
            rhs: &(&a2.pow(2) - &(&(&a1 * &a3) - &(&a2 * &a4)).scale(&k(4))) + &(&a5 * &a6).scale(&k(16)),
        },
        Identity {
            name: "b3^2",
            lhs: b3.pow(2),
            rhs: &a3.pow(2) - &(&a2 * &a5).scale(&k(4)),
        },
        Identity {
            name: "b1*b3",
            lhs: &b1 * &b3,
            rhs: &(&a1 * &a3) - &(&a2 * &a4).scale(&k(2)),
        },
        Identity {
            name: "b1*b4",
            lhs: &b1 * &b4,
            rhs: &(&a1 * &a4) - &(&a3 * &a6).scale(&k(2)),
        },
        Identity {
            name: "b3*b4",
            lhs: &b3 * &b4,
            rhs: &(&a1 * &a5).scale(&k(2)) - &(&a3 * &a4),
        },
        Identity {
            name: "b4^2",
            lhs: b4.pow(2),
            rhs: &a4.pow(2) - &(&a5 * &a6).scale(&k(4)),
        },
    ]
}

/// The nine relations for the `c*d`-products, including the combinations
/// normalized by `1/2`, `i/2` and `1/(1 +- i)`.
pub fn quadric_relations_cd() -> Vec<Identity> {
    let (a1, a2, a3, a4, a5, a6) = (g("a1"), g("a2"), g("a3"), g("a4"), g("a5"), g("a6"));
    let (b1, b2, b3, b4) = (g("b1"), g("b2"), g("b3"), g("b4"));
    let (c1, c2, c3) = (g("c1"), g("c2"), g("c3"));
    let (d1, d2, d3) = (g("d1"), g("d2"), g("d3"));
    let i = GaussianRational::i();
    let one = k(1);
    let inv_1mi = (&one - &i).inv().expect("1 - i is a unit");
    let inv_1pi = (&one + &i).inv().expect("1 + i is a unit");
    vec![
        Identity {
            name: "c1*d1",
            lhs: &c1 * &d1,
            rhs: &(&a1.pow(2) - &(&a2 * &a6).scale(&k(2))) - &(&a4 * &a6).scale(&k(4)),
        },
        Identity {
            name: "c3*d3",
            lhs: &c3 * &d3,
            rhs: &(&a3.pow(2) - &(&a2 * &a5).scale(&k(2))) - &(&a4 * &a5).scale(&k(4)),
        },
        Identity {
            name: "c2*d2",
            lhs: &c2 * &d2,
            rhs: &(&a2.pow(2) - &(&a1 * &a3).scale(&k(2))) + &(&a2 * &a4).scale(&k(2)),
        },
        Identity {
            name: "(c1*d3+c3*d1)/2",
            lhs: (&(&c1 * &d3) + &(&c3 * &d1)).scale(&half()),
            rhs: &(&(&a2 * &a4) - &(&a1 * &a3)) + &(&a5 * &a6).scale(&k(8)),
        },
        Identity {
            name: "i*(c1*d3-c3*d1)/2",
            lhs: (&(&c1 * &d3) - &(&c3 * &d1)).scale(&(&i * &half())),
            rhs: &b2 * &b4,
        },
        Identity {
            name: "(c1*d2-i*c2*d1)/(1-i)",
            lhs: (&(&c1 * &d2) - &(&c2 * &d1).scale(&i)).scale(&inv_1mi),
            rhs: &(&a1 * &a2) - &(&a3 * &a6).scale(&k(4)),
        },
        Identity {
            name: "(c1*d2+i*c2*d1)/(1+i)",
            lhs: (&(&c1 * &d2) + &(&c2 * &d1).scale(&i)).scale(&inv_1pi),
            rhs: &b1 * &b2,
        },
        Identity {
            name: "(c2*d3+i*c3*d2)/(1+i)",
            lhs: (&(&c2 * &d3) + &(&c3 * &d2).scale(&i)).scale(&inv_1pi),
            rhs: &(&a1 * &a5).scale(&k(4)) - &(&a2 * &a3),
        },
        Identity {
            name: "-i*(c2*d3-i*c3*d2)/(1+i)",
            lhs: (&(&c2 * &d3) - &(&c3 * &d2).scale(&i)).scale(&(&-&i * &inv_1pi)),
            rhs: &b2 * &b3,
        },
    ]
}

/// All seventeen identities: the cubic, then the seven `b` and nine `c*d` relations.
pub fn all_identities() -> Vec<Identity> {
    let mut out = vec![cubic_relation()];
    out.extend(quadric_relations_b());
    out.extend(quadric_relations_cd());
    out
}

/// Checks all seventeen identities (in parallel); results keep the listed order.
pub fn check_identities() -> Result<Vec<IdentityCheck>> {
    all_identities().par_iter().map(Identity::check).collect()
}

pub fn verify_cubic_relation() -> Result<()> {
    cubic_relation().verify()
}

pub fn verify_segre_b() -> Result<()> {
    quadric_relations_b().iter().try_for_each(Identity::verify)
}

pub fn verify_segre_cd() -> Result<()> {
    quadric_relations_cd().iter().try_for_each(Identity::verify)
}

/// Basis of all homogeneous cubic relations among `a1..a6`, as polynomials
/// over the generator symbols. Found as the kernel of the map sending each of
/// the 56 cubic monomials to its expansion in `s, t, x, y`.
pub fn cubic_relation_space() -> Result<Vec<Polynomial>> {
    let reg = generator_registry();
    let gens = named_generators();
    let mut cubics = Vec::new();
    for a in 0..6 {
        for b in a..6 {
            for c in b..6 {
                cubics.push([a, b, c]);
            }
        }
    }
    let expansions: Vec<Polynomial> = cubics
        .iter()
        .map(|idx| idx.iter().fold(Polynomial::one(coordinate_registry()), |acc, &j| &acc * &gens[j].1))
        .collect();
    let mut support: Vec<Monomial> = expansions
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()).collect::<Vec<_>>())
        .collect();
    support.sort();
    support.dedup();
    let columns: Vec<Vec<GaussianRational>> =
        expansions.iter().map(|p| p.coefficient_vector(&support).0).collect();
    let matrix = ScalarMatrix::from_rows(columns)?.transpose();
    Ok(matrix
        .kernel_basis()
        .into_iter()
        .map(|v| {
            cubics.iter().zip(v).fold(Polynomial::zero(reg), |acc, (idx, c)| {
                let names: Vec<&str> = idx.iter().map(|&j| gens[j].0).collect();
                &acc + &Polynomial::product_of(reg, &names).expect("generator names").scale(&c)
            })
        })
        .collect())
}
