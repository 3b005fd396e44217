//! Exact-arithmetic combinatorics of the free tridendriform bialgebra on one
//! generator.
//!
//! The algebra lives on reduced planar rooted trees.  This crate implements:
//!
//! * the four products `*`, `≺`, `·`, `≻` by quasi-shuffles of comb
//!   decompositions, with the inductive grafting definitions as an
//!   independent oracle ([`products`]);
//! * the tridendriform structure on the augmented tensor square
//!   ([`tensor`]);
//! * the admissible-cut coproduct, its right-most-leaf splitting into the
//!   two half-coproducts of the (3,2)-dendriform structure, and exhaustive
//!   verification of all compatibilities ([`coproduct`]);
//! * the graded dual (lightning splitting, dual product by transposition)
//!   together with its cotridendriform relations ([`dual`]);
//! * primitive spaces by exact kernel computation and the isomorphism
//!   `a ↦ a · Y` between coassociative and codendriform primitives
//!   ([`primitives`]);
//! * Schroeder-number series identities ([`series`]);
//! * the quotient onto planar binary trees ([`quotient`]).
//!
//! Everything is computed over exact rationals; no floating point anywhere.
//!
//! ```
//! use tridendriform::coproduct::coproduct;
//! use tridendriform::products::star;
//! use tridendriform::{PlanarTree, TreeVector};
//!
//! let y = TreeVector::basis(PlanarTree::generator());
//! let product = star(&y, &y);
//! assert_eq!(
//!     product.to_string(),
//!     "1*((|,|),|) + 1*(|,(|,|)) + 1*(|,|,|)"
//! );
//! // the generator is primitive
//! assert_eq!(coproduct(&y).len(), 2);
//! ```

pub mod coproduct;
pub mod dual;
pub mod error;
pub mod linalg;
pub mod primitives;
pub mod products;
pub mod quotient;
pub mod report;
pub mod series;
pub mod tensor;
pub mod tree;
pub mod vect;

pub use error::{Error, Result};
pub use report::{Report, Violation};
pub use tree::{enumerate_trees, Forest, PlanarTree};
pub use vect::{Coeff, TensorVector, TreeVector, TripleTensorVector};
