//! Tropical conics over the max-plus semiring with exact rational arithmetic.
//!
//! A conic is the corner locus of a degree-two tropical polynomial
//!
//! ```text
//! P = a11⊙X² ⊕ a22⊙Y² ⊕ a33⊙Z² ⊕ a21⊙X⊙Y ⊕ a32⊙Y⊙Z ⊕ a31⊙X⊙Z
//! ```
//!
//! The crate classifies such curves from the shape matrix of `P`, computes
//! their vertices in closed form, checks the result against a brute-force
//! corner-locus computation, factors reducible polynomials and rebuilds a
//! polynomial from a balanced weighted tree.
//!
//! ```
//! use tropical_conics::{classify, corner_locus, invariants_of, matrix_of, parse_poly, Chart, ConicTag};
//!
//! let p = parse_poly("(-4)*X^2 + Y^2 + Z^2 + (-2)*X*Y + Y*Z + X*Z").unwrap();
//! let class = classify(&invariants_of(&matrix_of(&p)));
//! assert_eq!(class.tag, ConicTag::Degenerate2);
//! let curve = corner_locus(&p, Chart::Z).unwrap();
//! assert_eq!(curve.vertices.len(), 2);
//! ```

pub mod check;
pub mod conic;
pub mod corpus;
pub mod error;
pub mod factor;
pub mod io;
pub mod quadratic;
pub mod reconstruct;
pub mod semiring;

pub use conic::{
    anchor_labels, anchor_points, classify, corner_locus, invariants_of, vertices, AffinePoint, Chart, ConicClass,
    ConicTag, Invariants, ProjPoint, Sketch,
};
pub use error::{Error, Result};
pub use factor::{expand, factorize, is_reducible, Factorization, LinForm};
pub use io::{format_poly, parse_poly};
pub use quadratic::{matrix_of, poly_of, shape, shape_plus, trop_det, QuadPoly, SymMatrix3};
pub use reconstruct::{recover_invariants, recover_polynomial, validate_tree, TreeSpec};
pub use semiring::{Rational, TropScalar};
