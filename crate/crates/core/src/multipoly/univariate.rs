use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

use super::Polynomial;

/// Dense univariate polynomial over `Q(i)`, coefficients from the constant term up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnivariatePolynomial {
    coeffs: Vec<GaussianRational>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Reads `p` as a polynomial in `var`; every other variable must be absent.
    pub fn from_polynomial(p: &Polynomial, var: &str) -> Result<Self> {
        let parts = p.coefficients_in_var(var)?;
        let coeffs = parts
            .iter()
            .map(|c| {
                c.constant_value().ok_or_else(|| {
                    Error::Parse(format!("`{p}` is not univariate in `{var}`"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`, zero past the end.
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[d].inv()?;
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let q = &r[top] * &lead_inv;
            if !q.is_zero() {
                for (k, c) in divisor.coeffs.iter().enumerate() {
                    let idx = top - d + k;
                    r[idx] -= &(&q * c);
                }
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Ok(Self::new(r))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    fn monic(self) -> Self {
        match self.coeffs.last() {
            None => self,
            Some(lead) => {
                let inv = lead.inv().expect("nonzero leading coefficient");
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::new(c.iter().map(|&k| GaussianRational::from(k)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let g = up(&[-2, 1, 1]).gcd(&up(&[3, -4, 1]));
        assert_eq!(g, up(&[-1, 1]));
    }

    #[test]
    fn coprime_gcd_is_one() {
        assert_eq!(up(&[1, 0, 1]).gcd(&up(&[-1, 1])), up(&[1]));
        assert_eq!(up(&[0]).gcd(&up(&[0])), up(&[]));
    }

    #[test]
    fn remainder() {
        // x^3 + 1 = (x + 1)(x^2 - x + 1)
        assert!(up(&[1, 0, 0, 1]).rem(&up(&[1, 1])).unwrap().is_zero());
        assert_eq!(up(&[2, 0, 1]).rem(&up(&[0, 1])).unwrap(), up(&[2]));
        assert!(up(&[1]).rem(&up(&[])).is_err());
    }
}
