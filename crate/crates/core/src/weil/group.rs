use std::fmt;

use crate::error::Result;
use crate::multipoly::Polynomial;

use super::COORDINATES;

/// A permutation of the coordinates `s, t, x, y`, acting on polynomials by
/// renaming: coordinate `k` is replaced by coordinate `image[k]`.
///
/// `sigma` acts as `s -> t, t -> x, x -> y, y -> s`. This is the pullback by
/// the inverse of the point map `(s, t, x, y) -> (y, s, t, x)`, and it is the
/// convention under which `c1 = s - i t - x + i y` has eigenvalue `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    image: [usize; 4],
}

impl GroupElement {
    pub const fn identity() -> Self {
        Self { image: [0, 1, 2, 3] }
    }

    pub const fn sigma() -> Self {
        Self { image: [1, 2, 3, 0] }
    }

    /// Swaps `s` and `x`.
    pub const fn tau() -> Self {
        Self { image: [2, 1, 0, 3] }
    }

    pub fn image(&self) -> [usize; 4] {
        self.image
    }

    /// `g.compose(&h)` acts on a polynomial as `h` first, then `g`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            image: other.image.map(|k| self.image[k]),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [0; 4];
        for (k, &j) in self.image.iter().enumerate() {
            inv[j] = k;
        }
        Self { image: inv }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| self.compose(&acc))
    }

    /// Applies the renaming to a polynomial whose registry contains `s, t, x, y`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let reg = p.registry();
        let bindings = COORDINATES
            .iter()
            .enumerate()
            .map(|(k, &name)| Ok((name, Polynomial::var(reg, COORDINATES[self.image[k]])?)))
            .collect::<Result<Vec<_>>>()?;
        p.substitute_into(&bindings, reg)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = COORDINATES
            .iter()
            .enumerate()
            .map(|(k, name)| format!("{name}->{}", COORDINATES[self.image[k]]))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::GaussianRational;
    use crate::weil::{coordinate_registry, monomial_basis, named_generators};

    fn gen(name: &str) -> Polynomial {
        named_generators().into_iter().find(|(n, _)| *n == name).unwrap().1
    }

    #[test]
    fn dihedral_relations_as_permutations() {
        let (s, t) = (GroupElement::sigma(), GroupElement::tau());
        assert_eq!(s.pow(4), GroupElement::identity());
        assert_ne!(s.pow(2), GroupElement::identity());
        assert_eq!(t.pow(2), GroupElement::identity());
        assert_eq!(t.compose(&s).compose(&t), s.inverse());
    }

    #[test]
    fn dihedral_relations_on_all_monomials() {
        let (s, t) = (GroupElement::sigma(), GroupElement::tau());
        let tst = t.compose(&s).compose(&t);
        for m in monomial_basis() {
            let s4 = (0..4).try_fold(m.clone(), |p, _| s.apply(&p)).unwrap();
            assert_eq!(s4, m);
            assert_eq!(t.apply(&t.apply(&m).unwrap()).unwrap(), m);
            let lhs = t.apply(&s.apply(&t.apply(&m).unwrap()).unwrap()).unwrap();
            assert_eq!(lhs, tst.apply(&m).unwrap());
            assert_eq!(lhs, s.inverse().apply(&m).unwrap());
        }
    }

    #[test]
    fn sigma_eigenvalues_of_sample_generators() {
        let sigma = GroupElement::sigma();
        let a1 = gen("a1");
        assert_eq!(sigma.apply(&a1).unwrap(), a1);
        let b1 = gen("b1");
        assert_eq!(sigma.apply(&b1).unwrap(), -&b1);
        let c1 = gen("c1");
        assert_eq!(sigma.apply(&c1).unwrap(), c1.scale(&GaussianRational::i()));
    }

    #[test]
    fn opposite_convention_swaps_i_and_minus_i() {
        let c1 = gen("c1");
        let image = GroupElement::sigma().inverse().apply(&c1).unwrap();
        assert_eq!(image, c1.scale(&-GaussianRational::i()));
        assert_eq!(coordinate_registry().len(), 4);
    }
}
