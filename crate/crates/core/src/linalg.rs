//! Exact dense linear algebra over `Q(i)` and over polynomial rings.
//!
//! Determinants use fraction-free Bareiss elimination. Every Bareiss step
//! divides by the previous pivot; over a polynomial ring that division must be
//! exact, and if it ever is not the computation restarts with cofactor
//! expansion. Cofactor expansion is also exported as an independent oracle.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::multipoly::{Polynomial, VariableRegistry};

/// Minimal ring interface shared by the scalar and polynomial determinant code.
trait RingElement: Clone {
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// `self / rhs` when the quotient exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl RingElement for GaussianRational {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs).ok()
    }
}

impl RingElement for Polynomial {
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Polynomial::div_exact(self, rhs)
    }
}

/// One-step Bareiss. Returns `None` if an intermediate division is not exact.
fn bareiss<T: RingElement>(entries: &[T], n: usize, zero: &T, one: &T) -> Option<T> {
    if n == 0 {
        return Some(one.clone());
    }
    let mut a = entries.to_vec();
    let mut negate = false;
    let mut prev = one.clone();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Some(zero.clone());
            };
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let mut num = a[i * n + j].mul(&pivot);
                if !lead.is_zero() && !a[k * n + j].is_zero() {
                    num = num.sub(&lead.mul(&a[k * n + j]));
                }
                a[i * n + j] = if num.is_zero() { zero.clone() } else { num.div_exact(&prev)? };
            }
            a[i * n + k] = zero.clone();
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    Some(if negate { det.neg() } else { det })
}

/// Laplace expansion along successive rows, memoized on the set of used columns.
fn cofactor<T: RingElement>(entries: &[T], n: usize, zero: &T, one: &T) -> T {
    fn go<T: RingElement>(
        entries: &[T],
        n: usize,
        row: usize,
        used: u32,
        zero: &T,
        one: &T,
        memo: &mut HashMap<u32, T>,
    ) -> T {
        if row == n {
            return one.clone();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = zero.clone();
        let mut sign_positive = true;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let e = &entries[row * n + col];
            if !e.is_zero() {
                let minor = go(entries, n, row + 1, used | (1 << col), zero, one, memo);
                let term = e.mul(&minor);
                acc = if sign_positive { acc.add(&term) } else { acc.sub(&term) };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(used, acc.clone());
        acc
    }
    assert!(n <= 31, "cofactor expansion limited to 31x31");
    go(entries, n, 0, 0, zero, one, &mut HashMap::new())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ScalarMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.entries[k * n + k] = GaussianRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    /// Reduced row echelon form and the pivot columns.
    fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !Zero::is_zero(m.get(r, col))) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.entries.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || Zero::is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column.
    /// Each vector has a 1 in its free column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<GaussianRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![GaussianRational::zero(); self.cols];
                v[f] = GaussianRational::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(k, f);
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        if v.len() != self.cols {
            return Err(Error::Shape("vector length does not match column count".into()));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(GaussianRational::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    fn require_square(&self) -> Result<()> {
        if self.rows == self.cols {
            Ok(())
        } else {
            Err(Error::Shape(format!("{}x{} is not square", self.rows, self.cols)))
        }
    }

    pub fn det_bareiss(&self) -> Result<GaussianRational> {
        self.require_square()?;
        let (zero, one) = (GaussianRational::zero(), GaussianRational::one());
        Ok(bareiss(&self.entries, self.rows, &zero, &one).expect("division is exact over a field"))
    }

    pub fn det_cofactor(&self) -> Result<GaussianRational> {
        self.require_square()?;
        Ok(cofactor(&self.entries, self.rows, &GaussianRational::zero(), &GaussianRational::one()))
    }
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Dense matrix of polynomials sharing one registry.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    registry: Arc<VariableRegistry>,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    /// Fails on a wrong entry count, on an empty matrix (no registry to take),
    /// or when entries use different registries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let registry = entries
            .first()
            .map(|p| Arc::clone(p.registry()))
            .ok_or_else(|| Error::Shape("empty polynomial matrix".into()))?;
        if entries.iter().any(|p| **p.registry() != *registry) {
            return Err(Error::RegistryMismatch);
        }
        Ok(Self {
            rows,
            cols,
            registry,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn identity(registry: &Arc<VariableRegistry>, n: usize) -> Self {
        let mut entries = vec![Polynomial::zero(registry); n * n];
        for k in 0..n {
            entries[k * n + k] = Polynomial::one(registry);
        }
        Self {
            rows: n,
            cols: n,
            registry: Arc::clone(registry),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn registry(&self) -> &Arc<VariableRegistry> {
        &self.registry
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Polynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            registry: Arc::clone(&self.registry),
            entries,
        }
    }

    /// Entrywise evaluation.
    pub fn evaluate(&self, point: &[(&str, GaussianRational)]) -> Result<ScalarMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.evaluate(point))
            .collect::<Result<Vec<_>>>()?;
        ScalarMatrix::new(self.rows, self.cols, entries)
    }

    /// Determinant by fraction-free Bareiss elimination, falling back to
    /// cofactor expansion if an intermediate quotient is not exact.
    ///
    /// # Panics
    ///
    /// Panics if the matrix is not square.
    pub fn det_bareiss(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let zero = Polynomial::zero(&self.registry);
        let one = Polynomial::one(&self.registry);
        bareiss(&self.entries, self.rows, &zero, &one)
            .unwrap_or_else(|| cofactor(&self.entries, self.rows, &zero, &one))
    }

    /// # Panics
    ///
    /// Panics if the matrix is not square.
    pub fn det_cofactor(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let zero = Polynomial::zero(&self.registry);
        let one = Polynomial::one(&self.registry);
        cofactor(&self.entries, self.rows, &zero, &one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use proptest::prelude::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ScalarMatrix::identity(6).rank(), 6);
        assert_eq!(ScalarMatrix::zeros(7, 6).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(ScalarMatrix::identity(4).kernel_basis().is_empty());
        let m = ScalarMatrix::from_rows(vec![vec![g(1), g(1)]]).unwrap();
        assert_eq!(m.kernel_basis(), vec![vec![g(-1), g(1)]]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let i = GaussianRational::i();
        let m = ScalarMatrix::from_rows(vec![
            vec![g(1), i.clone(), g(0), g(2)],
            vec![g(2), &i * &g(2), g(1), g(0)],
            vec![g(3), &i * &g(3), g(1), g(2)],
        ])
        .unwrap();
        let ker = m.kernel_basis();
        assert_eq!(m.rank() + ker.len(), 4);
        for v in &ker {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn polynomial_determinants() {
        let r = VariableRegistry::new(["A1", "A2", "B1", "B2"]).unwrap();
        assert_eq!(PolyMatrix::identity(&r, 5).det_bareiss(), Polynomial::one(&r));
        let v = |n| Polynomial::var(&r, n).unwrap();
        let m = PolyMatrix::from_rows(vec![vec![v("A1"), v("A2")], vec![v("B1"), v("B2")]]).unwrap();
        assert_eq!(m.det_bareiss(), &(&v("A1") * &v("B2")) - &(&v("A2") * &v("B1")));
    }

    #[test]
    fn zero_leading_pivot_swaps_rows() {
        let m = ScalarMatrix::from_rows(vec![
            vec![g(0), g(1), g(2)],
            vec![g(1), g(0), g(3)],
            vec![g(4), g(-3), g(8)],
        ])
        .unwrap();
        // 0*(0*8+9) - 1*(8-12) + 2*(-3-0) = -2
        assert_eq!(m.det_bareiss().unwrap(), g(-2));
        assert_eq!(m.det_cofactor().unwrap(), g(-2));
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(ScalarMatrix::zeros(2, 3).det_bareiss().is_err());
        assert!(ScalarMatrix::new(2, 2, vec![g(1)]).is_err());
    }

    fn arb_square() -> impl Strategy<Value = ScalarMatrix> {
        (1usize..=5).prop_flat_map(|n| {
            prop::collection::vec((-4i64..5, 1i64..4, -2i64..3), n * n).prop_map(move |v| {
                let entries = v
                    .into_iter()
                    .map(|(a, b, c)| GaussianRational::new(rational(a, b), rational(c, 1)))
                    .collect();
                ScalarMatrix::new(n, n, entries).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(m in arb_square()) {
            prop_assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
        }

        #[test]
        fn rank_nullity(m in arb_square()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }
    }
}
