//! The multilinear forms on (P^1)^4 and the computations built on them.
//!
//! Forms are written in the affine chart `s, t, x, y` (each multihomogeneous
//! form divided by `s0*t0*x0*y0`). The cyclic permutation `sigma` and the
//! involution `tau` act by renaming variables. The sixteen named generators
//! `a1..a6, b1..b4, c1..c3, d1..d3` span the eigenspaces of `sigma`, and the
//! quadratic relations among them drive the elimination down to the 6x6
//! matrix `M` whose determinant certifies that the multiplication map is an
//! isomorphism.

mod diagonal;
mod eigen;
mod elimination;
mod genus;
mod group;
mod identities;

pub use diagonal::{
    diagonal_forms, fixed_point_free_check, restrict_to_diagonal, verify_diagonal, DiagonalReport,
};
pub use eigen::{eigen_decomposition, monomial_basis, EigenDecomposition, Eigenspace, Eigenvalue};
pub use elimination::{
    det_m, eliminate, independence_certificate, quadric_kernel_dim, quadric_q,
    CoefficientTriple, EliminationResult, IndependenceVerdict, SpecializedElimination,
    ALPHA_NAMES, B_TRIPLE_NAMES, GAMMA_NAMES,
};
pub use genus::{genus_check, ChowClass, GenusReport};
pub use group::GroupElement;
pub use identities::{
    all_identities, check_identities, cubic_relation_space, cubic_relation, quadric_relations_b,
    quadric_relations_cd, verify_cubic_relation, verify_segre_b, verify_segre_cd, Identity,
    IdentityCheck,
};

use std::sync::{Arc, OnceLock};

use crate::exactnum::{rational, GaussianRational};
use crate::multipoly::{Polynomial, VariableRegistry};

/// Affine coordinates on (P^1)^4.
pub const COORDINATES: [&str; 4] = ["s", "t", "x", "y"];

/// Names of the sixteen eigen-generators, in eigenvalue order 1, -1, i, -i.
pub const GENERATOR_NAMES: [&str; 16] = [
    "a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "d1", "d2", "d3",
];

/// The elimination coefficients, in the order `A1..A3, B1..B3, C1..C3`.
pub const COEFFICIENT_NAMES: [&str; 9] = ["A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3"];

/// Registry of the affine coordinates `s, t, x, y`.
pub fn coordinate_registry() -> &'static Arc<VariableRegistry> {
    static REG: OnceLock<Arc<VariableRegistry>> = OnceLock::new();
    REG.get_or_init(|| VariableRegistry::new(COORDINATES).expect("valid names"))
}

/// Registry of the formal generator symbols `a1..d3`.
pub fn generator_registry() -> &'static Arc<VariableRegistry> {
    static REG: OnceLock<Arc<VariableRegistry>> = OnceLock::new();
    REG.get_or_init(|| VariableRegistry::new(GENERATOR_NAMES).expect("valid names"))
}

/// Registry of the coefficients `A1..C3`.
pub fn coefficient_registry() -> &'static Arc<VariableRegistry> {
    static REG: OnceLock<Arc<VariableRegistry>> = OnceLock::new();
    REG.get_or_init(|| VariableRegistry::new(COEFFICIENT_NAMES).expect("valid names"))
}

/// `sum coeff * product(vars)` in the coordinate registry.
fn combo(terms: &[(GaussianRational, &[&str])]) -> Polynomial {
    let reg = coordinate_registry();
    terms.iter().fold(Polynomial::zero(reg), |acc, (c, vars)| {
        &acc + &Polynomial::product_of(reg, vars).expect("coordinate names").scale(c)
    })
}

type Term<'a> = (GaussianRational, &'a [&'a str]);

/// The sixteen generators as forms in `s, t, x, y`, keyed by name.
pub fn named_generators() -> Vec<(&'static str, Polynomial)> {
    let one = GaussianRational::from(1);
    let neg = GaussianRational::from(-1);
    let i = GaussianRational::i();
    let ni = -&i;
    let defs: Vec<(&str, Vec<Term>)> = vec![
        ("a1", vec![(one.clone(), &["s"]), (one.clone(), &["t"]), (one.clone(), &["x"]), (one.clone(), &["y"])]),
        (
            "a2",
            vec![(one.clone(), &["s", "t"]), (one.clone(), &["t", "x"]), (one.clone(), &["x", "y"]), (one.clone(), &["y", "s"])],
        ),
        (
            "a3",
            vec![
                (one.clone(), &["t", "x", "y"]),
                (one.clone(), &["s", "x", "y"]),
                (one.clone(), &["s", "t", "y"]),
                (one.clone(), &["s", "t", "x"]),
            ],
        ),
        ("a4", vec![(one.clone(), &["s", "x"]), (one.clone(), &["t", "y"])]),
        ("a5", vec![(one.clone(), &["s", "t", "x", "y"])]),
        ("a6", vec![(one.clone(), &[])]),
        ("b1", vec![(one.clone(), &["s"]), (neg.clone(), &["t"]), (one.clone(), &["x"]), (neg.clone(), &["y"])]),
        (
            "b2",
            vec![(one.clone(), &["s", "t"]), (neg.clone(), &["t", "x"]), (one.clone(), &["x", "y"]), (neg.clone(), &["y", "s"])],
        ),
        (
            "b3",
            vec![
                (one.clone(), &["t", "x", "y"]),
                (neg.clone(), &["s", "x", "y"]),
                (one.clone(), &["s", "t", "y"]),
                (neg.clone(), &["s", "t", "x"]),
            ],
        ),
        ("b4", vec![(one.clone(), &["s", "x"]), (neg.clone(), &["t", "y"])]),
        ("c1", vec![(one.clone(), &["s"]), (ni.clone(), &["t"]), (neg.clone(), &["x"]), (i.clone(), &["y"])]),
        (
            "c2",
            vec![(one.clone(), &["s", "t"]), (ni.clone(), &["t", "x"]), (neg.clone(), &["x", "y"]), (i.clone(), &["y", "s"])],
        ),
        (
            "c3",
            vec![
                (one.clone(), &["t", "x", "y"]),
                (ni.clone(), &["s", "x", "y"]),
                (neg.clone(), &["s", "t", "y"]),
                (i.clone(), &["s", "t", "x"]),
            ],
        ),
        ("d1", vec![(one.clone(), &["s"]), (i.clone(), &["t"]), (neg.clone(), &["x"]), (ni.clone(), &["y"])]),
        (
            "d2",
            vec![(one.clone(), &["s", "t"]), (i.clone(), &["t", "x"]), (neg.clone(), &["x", "y"]), (ni.clone(), &["y", "s"])],
        ),
        (
            "d3",
            vec![
                (one.clone(), &["t", "x", "y"]),
                (i.clone(), &["s", "x", "y"]),
                (neg.clone(), &["s", "t", "y"]),
                (ni.clone(), &["s", "t", "x"]),
            ],
        ),
    ];
    defs.into_iter().map(|(n, terms)| (n, combo(&terms))).collect()
}

pub(crate) fn half() -> GaussianRational {
    GaussianRational::from_rational(rational(1, 2))
}
