use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::linalg::ScalarMatrix;
use crate::multipoly::{Monomial, Polynomial};

use super::{coordinate_registry, named_generators, GroupElement};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Eigenvalue {
    One,
    MinusOne,
    I,
    MinusI,
}

impl Eigenvalue {
    pub const ALL: [Eigenvalue; 4] = [Self::One, Self::MinusOne, Self::I, Self::MinusI];

    pub fn value(self) -> GaussianRational {
        match self {
            Self::One => GaussianRational::from(1),
            Self::MinusOne => GaussianRational::from(-1),
            Self::I => GaussianRational::i(),
            Self::MinusI => -GaussianRational::i(),
        }
    }

    /// Name prefix of the generators spanning this eigenspace.
    pub fn generator_prefix(self) -> char {
        match self {
            Self::One => 'a',
            Self::MinusOne => 'b',
            Self::I => 'c',
            Self::MinusI => 'd',
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// The sixteen multilinear monomials `s^e0 t^e1 x^e2 y^e3`, `e_k` in {0, 1},
/// indexed by the bit pattern `e0 + 2 e1 + 4 e2 + 8 e3`.
pub fn monomial_basis() -> Vec<Polynomial> {
    let reg = coordinate_registry();
    (0u32..16)
        .map(|bits| {
            let exps = (0..4).map(|k| (bits >> k) & 1).collect();
            Polynomial::monomial(reg, Monomial::from_exponents(exps), GaussianRational::from(1))
        })
        .collect()
}

fn basis_monomials() -> Vec<Monomial> {
    monomial_basis()
        .iter()
        .map(|p| p.leading_term().expect("nonzero").0.clone())
        .collect()
}

/// Coordinates of a form in V with respect to the monomial basis.
fn coordinates(p: &Polynomial, basis: &[Monomial]) -> Option<Vec<GaussianRational>> {
    let (coeffs, rem) = p.coefficient_vector(basis);
    rem.is_zero().then_some(coeffs)
}

#[derive(Clone, Debug)]
pub struct Eigenspace {
    pub eigenvalue: Eigenvalue,
    /// Dimension of the kernel of `sigma - eigenvalue` on V.
    pub computed_dim: usize,
    pub generators: Vec<(&'static str, Polynomial)>,
}

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub spaces: Vec<Eigenspace>,
    /// Rank of the 16 generators taken together.
    pub total_rank: usize,
}

impl EigenDecomposition {
    /// Dimensions in the order 1, -1, i, -i.
    pub fn dims(&self) -> [usize; 4] {
        let mut out = [0; 4];
        for (slot, space) in out.iter_mut().zip(&self.spaces) {
            *slot = space.computed_dim;
        }
        out
    }

    pub fn space(&self, eigenvalue: Eigenvalue) -> &Eigenspace {
        self.spaces
            .iter()
            .find(|s| s.eigenvalue == eigenvalue)
            .expect("all four eigenspaces are present")
    }
}

/// Computes the eigenspaces of `sigma` on V by exact kernels of
/// `sigma - lambda` and checks each equals the span of its named generators.
pub fn eigen_decomposition() -> Result<EigenDecomposition> {
    let sigma = GroupElement::sigma();
    let basis = basis_monomials();
    let monomials = monomial_basis();
    let n = basis.len();

    // column j holds the coordinates of sigma(m_j)
    let mut action = ScalarMatrix::zeros(n, n);
    for (j, m) in monomials.iter().enumerate() {
        let image = coordinates(&sigma.apply(m)?, &basis).expect("sigma preserves V");
        for (i, c) in image.into_iter().enumerate() {
            action.set(i, j, c);
        }
    }

    let generators = named_generators();
    let mut all_coords = Vec::new();
    let mut spaces = Vec::new();
    for eigenvalue in Eigenvalue::ALL {
        let lambda = eigenvalue.value();
        let mismatch = || Error::EigenbasisMismatch {
            eigenvalue: eigenvalue.to_string(),
        };
        let mut shifted = action.clone();
        for k in 0..n {
            let v = shifted.get(k, k) - &lambda;
            shifted.set(k, k, v);
        }
        let kernel = shifted.kernel_basis();

        let named: Vec<(&'static str, Polynomial)> = generators
            .iter()
            .filter(|(name, _)| name.starts_with(eigenvalue.generator_prefix()))
            .cloned()
            .collect();
        let mut gen_rows = Vec::new();
        for (_, g) in &named {
            if sigma.apply(g)? != g.scale(&lambda) {
                return Err(mismatch());
            }
            gen_rows.push(coordinates(g, &basis).ok_or_else(mismatch)?);
        }
        let gen_rank = ScalarMatrix::from_rows(gen_rows.clone())?.rank();
        let joint_rank = ScalarMatrix::from_rows(kernel.iter().cloned().chain(gen_rows.iter().cloned()).collect())?.rank();
        if gen_rank != named.len() || gen_rank != kernel.len() || joint_rank != kernel.len() {
            return Err(mismatch());
        }
        // kernel vectors really are eigenvectors
        for v in &kernel {
            if !shifted.mul_vec(v)?.iter().all(Zero::is_zero) {
                return Err(mismatch());
            }
        }
        all_coords.extend(gen_rows);
        spaces.push(Eigenspace {
            eigenvalue,
            computed_dim: kernel.len(),
            generators: named,
        });
    }
    let total_rank = ScalarMatrix::from_rows(all_coords)?.rank();
    Ok(EigenDecomposition { spaces, total_rank })
}
