use crate::error::{Error, Result};
use crate::linalg::PolyMatrix;

use super::Polynomial;

/// Sylvester matrix of two coefficient lists given from the constant term up.
///
/// With formal degrees `m = f.len() - 1` and `n = g.len() - 1`, the first `n`
/// rows carry shifted copies of `f` and the last `m` rows shifted copies of `g`,
/// highest coefficient first.
pub fn sylvester_matrix(f: &[Polynomial], g: &[Polynomial]) -> Result<PolyMatrix> {
    let (Some(first), Some(_)) = (f.first(), g.first()) else {
        return Err(Error::Shape("empty coefficient list".into()));
    };
    let registry = first.registry().clone();
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut entries = vec![Polynomial::zero(&registry); size * size];
    for row in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            entries[row * size + row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            entries[(n + row) * size + row + k] = c.clone();
        }
    }
    PolyMatrix::new(size, size, entries)
}

/// Resultant of `f` and `g` with respect to `var`, using their actual degrees.
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial, var: &str) -> Result<Polynomial> {
    let df = f.degree_in(var)?;
    let dg = g.degree_in(var)?;
    if df == 0 || dg == 0 {
        return Err(Error::DegreeZero(var.to_string()));
    }
    sylvester_resultant_formal(f, g, var, df, dg)
}

/// Resultant with prescribed formal degrees `df >= deg f`, `dg >= deg g`.
///
/// Padding with zero leading coefficients gives the resultant of the
/// homogenized binary forms, which vanishes exactly when they share a
/// projective root, including the root at infinity.
pub fn sylvester_resultant_formal(
    f: &Polynomial,
    g: &Polynomial,
    var: &str,
    df: u32,
    dg: u32,
) -> Result<Polynomial> {
    if f.registry() != g.registry() {
        return Err(Error::RegistryMismatch);
    }
    if df + dg == 0 {
        return Err(Error::DegreeZero(var.to_string()));
    }
    let mut fc = f.coefficients_in_var(var)?;
    let mut gc = g.coefficients_in_var(var)?;
    if fc.len() > df as usize + 1 || gc.len() > dg as usize + 1 {
        return Err(Error::Shape(format!("formal degree below actual degree in `{var}`")));
    }
    fc.resize(df as usize + 1, Polynomial::zero(f.registry()));
    gc.resize(dg as usize + 1, Polynomial::zero(g.registry()));
    Ok(sylvester_matrix(&fc, &gc)?.det_bareiss())
}
