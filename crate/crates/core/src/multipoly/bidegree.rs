use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{sylvester_resultant_formal, Polynomial, UnivariatePolynomial};

/// Affine form of a bihomogeneous polynomial on P^1 x P^1.
///
/// `poly` is written in the affine coordinates `s = s1/s0`, `t = t1/t0`; the
/// form of bidegree `(ds, dt)` is recovered by multiplying each term by the
/// missing powers of `s0` and `t0`.
#[derive(Clone, Debug, PartialEq)]
pub struct BidegreeForm {
    poly: Polynomial,
    s: String,
    t: String,
    ds: u32,
    dt: u32,
}

/// Which coordinate block a resultant eliminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    S,
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroFreeVerdict {
    /// The forms provably have no common zero on P^1 x P^1.
    CertifiedEmpty,
    /// The resultant test could not exclude a common zero.
    Inconclusive,
}

impl BidegreeForm {
    pub fn new(poly: Polynomial, s: &str, t: &str, ds: u32, dt: u32) -> Result<Self> {
        if poly.degree_in(s)? > ds || poly.degree_in(t)? > dt {
            return Err(Error::Shape(format!("`{poly}` exceeds bidegree ({ds}, {dt})")));
        }
        if let Some(v) = poly.variables().into_iter().find(|&v| v != s && v != t) {
            return Err(Error::UnknownVariable(v.to_string()));
        }
        Ok(Self {
            poly,
            s: s.to_string(),
            t: t.to_string(),
            ds,
            dt,
        })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.ds, self.dt)
    }

    /// Resultant with respect to the eliminated block, as a binary form in the
    /// other block: the affine polynomial and its formal degree.
    pub fn resultant(&self, other: &Self, eliminate: Block) -> Result<(UnivariatePolynomial, u32)> {
        let (elim, keep, de_f, dk_f, de_g, dk_g) = match eliminate {
            Block::T => (&self.t, &self.s, self.dt, self.ds, other.dt, other.ds),
            Block::S => (&self.s, &self.t, self.ds, self.dt, other.ds, other.dt),
        };
        let res = sylvester_resultant_formal(&self.poly, &other.poly, elim, de_f, de_g)?;
        let degree = dk_f * de_g + dk_g * de_f;
        Ok((UnivariatePolynomial::from_polynomial(&res, keep)?, degree))
    }
}

/// Decides whether the forms have no common zero on P^1 x P^1.
///
/// For a base form `f` and every other form `g`, a common zero projects to a
/// root (possibly at infinity) of `Res(f, g)` taken over one block. If the gcd
/// of the nonzero resultants is constant and they do not all vanish at
/// infinity, there is no common zero. Every base form and both blocks are
/// tried before giving up. The test is sound but not complete.
pub fn common_zero_free(forms: &[BidegreeForm]) -> Result<ZeroFreeVerdict> {
    if forms.iter().any(|f| f.poly.is_zero()) {
        return Ok(ZeroFreeVerdict::Inconclusive);
    }
    if forms.iter().any(|f| f.ds == 0 && f.dt == 0) {
        // a nonzero constant of bidegree (0, 0) never vanishes
        return Ok(ZeroFreeVerdict::CertifiedEmpty);
    }
    for block in [Block::T, Block::S] {
        for base in 0..forms.len() {
            let mut gcd: Option<UnivariatePolynomial> = None;
            let mut all_vanish_at_infinity = true;
            for (k, other) in forms.iter().enumerate() {
                if k == base {
                    continue;
                }
                let (res, degree) = forms[base].resultant(other, block)?;
                if res.is_zero() {
                    continue;
                }
                if !res.coeff(degree as usize).is_zero() {
                    all_vanish_at_infinity = false;
                }
                gcd = Some(match gcd {
                    None => res.gcd(&res),
                    Some(g) => g.gcd(&res),
                });
            }
            if let Some(g) = gcd {
                if g.degree() == Some(0) && !all_vanish_at_infinity {
                    return Ok(ZeroFreeVerdict::CertifiedEmpty);
                }
            }
        }
    }
    Ok(ZeroFreeVerdict::Inconclusive)
}
