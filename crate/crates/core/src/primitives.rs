//! Primitive elements, computed degree by degree as exact kernels.
//!
//! Four flavours: coassociative primitives (kernel of the reduced cut
//! coproduct), codendriform primitives (joint kernel of both reduced
//! half-coproducts), and the one-sided kernels of `Δ̃←` and `Δ̃→`.
//! The codendriform dimensions are the big Schroeder numbers and the
//! coassociative ones their shift; the map `a ↦ a · Y` identifies the two.

use num::Zero;

use crate::coproduct::{reduced_coproduct, reduced_coproduct_left, reduced_coproduct_right};
use crate::error::{Error, Result};
use crate::linalg::GradedMapComponent;
use crate::products::mid;
use crate::tree::{enumerate_trees, PlanarTree};
use crate::vect::{TensorVector, TreeVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimKind {
    /// Kernel of the reduced coproduct.
    Coass,
    /// Joint kernel of both reduced half-coproducts.
    Codend,
    /// Kernel of the reduced left half-coproduct.
    Left,
    /// Kernel of the reduced right half-coproduct.
    Right,
}

impl PrimKind {
    pub fn name(self) -> &'static str {
        match self {
            PrimKind::Coass => "coass",
            PrimKind::Codend => "codend",
            PrimKind::Left => "left",
            PrimKind::Right => "right",
        }
    }
}

/// A deterministic kernel basis of a primitive space in one degree.
#[derive(Debug, Clone)]
pub struct PrimitiveBasis {
    pub kind: PrimKind,
    pub degree: usize,
    pub vectors: Vec<TreeVector>,
}

fn reduced_left_tree(t: &PlanarTree) -> TensorVector {
    reduced_coproduct_left(&TreeVector::basis(t.clone())).expect("non-unit")
}

fn reduced_right_tree(t: &PlanarTree) -> TensorVector {
    reduced_coproduct_right(&TreeVector::basis(t.clone())).expect("non-unit")
}

fn reduced_full_tree(t: &PlanarTree) -> TensorVector {
    reduced_coproduct(&TreeVector::basis(t.clone())).expect("non-unit")
}

/// The degree-`n` matrix of the coproduct(s) that cut out each primitive
/// space.
pub fn defining_map(kind: PrimKind, n: usize) -> GradedMapComponent {
    match kind {
        PrimKind::Coass => GradedMapComponent::of(n, reduced_full_tree),
        PrimKind::Left => GradedMapComponent::of(n, reduced_left_tree),
        PrimKind::Right => GradedMapComponent::of(n, reduced_right_tree),
        PrimKind::Codend => {
            let left = GradedMapComponent::of(n, reduced_left_tree);
            let right = GradedMapComponent::of(n, reduced_right_tree);
            left.joined_with(right)
        }
    }
}

/// Exact kernel basis of the defining coproduct(s) on the degree-`n` slice,
/// expressed over the canonical tree basis.
pub fn primitive_basis(kind: PrimKind, n: usize) -> PrimitiveBasis {
    let component = defining_map(kind, n);
    let vectors = component
        .matrix
        .kernel_basis()
        .into_iter()
        .map(|coords| {
            coords
                .into_iter()
                .zip(component.domain.iter())
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, t)| (t.clone(), c))
                .collect()
        })
        .collect();
    PrimitiveBasis {
        kind,
        degree: n,
        vectors,
    }
}

/// The map `a ↦ a · Y` on a coassociative primitive basis; its image is an
/// independent spanning set of the codendriform primitives one degree up.
pub fn theta(basis: &PrimitiveBasis) -> Result<Vec<TreeVector>> {
    if basis.kind != PrimKind::Coass {
        return Err(Error::BasisKindMismatch {
            expected: PrimKind::Coass.name(),
            got: basis.kind.name(),
        });
    }
    let y = TreeVector::basis(PlanarTree::generator());
    basis.vectors.iter().map(|a| mid(a, &y)).collect()
}

/// One row of the dimension table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionRow {
    pub degree: usize,
    pub dim_a: usize,
    pub dim_prim_coass: usize,
    pub dim_prim_codend: usize,
    pub dim_prim_left: usize,
    pub dim_prim_right: usize,
}

/// Exact dimensions of the algebra and its primitive spaces for degrees
/// `1..=max_degree`.
pub fn dimension_table(max_degree: usize) -> Vec<DimensionRow> {
    (1..=max_degree)
        .map(|n| DimensionRow {
            degree: n,
            dim_a: enumerate_trees(n).len(),
            dim_prim_coass: primitive_basis(PrimKind::Coass, n).vectors.len(),
            dim_prim_codend: primitive_basis(PrimKind::Codend, n).vectors.len(),
            dim_prim_left: primitive_basis(PrimKind::Left, n).vectors.len(),
            dim_prim_right: primitive_basis(PrimKind::Right, n).vectors.len(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SparseMatrix;
    use crate::vect::pairing;

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    fn in_span(basis: &[TreeVector], v: &TreeVector) -> bool {
        // rank comparison over the involved tree support
        let mut columns: Vec<TreeVector> = basis.to_vec();
        let with_rank = SparseMatrix::from_columns(&columns).1.rank();
        columns.push(v.clone());
        SparseMatrix::from_columns(&columns).1.rank() == with_rank
    }

    #[test]
    fn codend_bases_in_low_degrees() {
        let b1 = primitive_basis(PrimKind::Codend, 1);
        assert_eq!(b1.vectors, vec![TreeVector::basis(t("(|,|)"))]);
        let b2 = primitive_basis(PrimKind::Codend, 2);
        assert_eq!(b2.vectors, vec![TreeVector::basis(t("(|,|,|)"))]);
    }

    #[test]
    fn coass_degree_two_span() {
        let b = primitive_basis(PrimKind::Coass, 2);
        assert_eq!(b.vectors.len(), 2);
        let corolla = TreeVector::basis(t("(|,|,|)"));
        let difference =
            TreeVector::basis(t("((|,|),|)")).minus(&TreeVector::basis(t("(|,(|,|))")));
        assert!(in_span(&b.vectors, &corolla));
        assert!(in_span(&b.vectors, &difference));
        for v in &b.vectors {
            assert!(reduced_coproduct(v).unwrap().is_zero());
        }
    }

    #[test]
    fn coass_dimensions_match_shifted_big_schroeder() {
        let expected = [1usize, 2, 6, 22];
        for (i, &d) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                primitive_basis(PrimKind::Coass, n).vectors.len(),
                d,
                "degree {n}"
            );
        }
    }

    #[test]
    fn codend_dimensions_match_big_schroeder() {
        let expected = [1usize, 1, 2, 6, 22];
        for (i, &d) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                primitive_basis(PrimKind::Codend, n).vectors.len(),
                d,
                "degree {n}"
            );
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        for n in 1..=4 {
            for v in primitive_basis(PrimKind::Codend, n).vectors {
                assert!(reduced_coproduct_left(&v).unwrap().is_zero());
                assert!(reduced_coproduct_right(&v).unwrap().is_zero());
            }
            for v in primitive_basis(PrimKind::Left, n).vectors {
                assert!(reduced_coproduct_left(&v).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn codend_is_intersection_and_inside_coass() {
        for n in 1..=5 {
            let codend = primitive_basis(PrimKind::Codend, n);
            let left = primitive_basis(PrimKind::Left, n);
            let right = primitive_basis(PrimKind::Right, n);
            let coass = primitive_basis(PrimKind::Coass, n);
            for v in &codend.vectors {
                assert!(in_span(&left.vectors, v));
                assert!(in_span(&right.vectors, v));
                assert!(in_span(&coass.vectors, v));
            }
            // dim(L ∩ R) = dim L + dim R - dim(L + R) must equal dim codend
            let mut combined = left.vectors.clone();
            combined.extend(right.vectors.iter().cloned());
            let dim_sum = SparseMatrix::from_columns(&combined).1.rank();
            assert_eq!(
                left.vectors.len() + right.vectors.len() - dim_sum,
                codend.vectors.len(),
                "degree {n}"
            );
        }
    }

    #[test]
    fn theta_in_degree_one() {
        let basis = primitive_basis(PrimKind::Coass, 1);
        let image = theta(&basis).unwrap();
        assert_eq!(image, vec![TreeVector::basis(t("(|,|,|)"))]);
    }

    #[test]
    fn theta_rejects_wrong_kind() {
        let basis = primitive_basis(PrimKind::Codend, 1);
        assert!(matches!(
            theta(&basis),
            Err(Error::BasisKindMismatch { .. })
        ));
    }

    #[test]
    fn theta_degree_two_spans_codend_three() {
        let basis = primitive_basis(PrimKind::Coass, 2);
        let image = theta(&basis).unwrap();
        assert_eq!(image.len(), 2);
        let codend = primitive_basis(PrimKind::Codend, 3);
        assert_eq!(codend.vectors.len(), 2);
        let image_rank = SparseMatrix::from_columns(&image).1.rank();
        assert_eq!(image_rank, 2);
        for v in &image {
            assert!(in_span(&codend.vectors, v));
        }
    }

    #[test]
    fn theta_closure_maps_to_total_degree_five() {
        use crate::products::{left as prec, right as succ};
        for na in 1..=4usize {
            for nb in 1..=5 - na {
                let coass = primitive_basis(PrimKind::Coass, na);
                let pl = primitive_basis(PrimKind::Left, nb);
                let pr = primitive_basis(PrimKind::Right, nb);
                let pc = primitive_basis(PrimKind::Codend, nb);
                for a in &coass.vectors {
                    for b in &pl.vectors {
                        let v = succ(a, b).unwrap();
                        assert!(reduced_coproduct_left(&v).unwrap().is_zero());
                    }
                    for b in &pr.vectors {
                        let v = prec(a, b).unwrap();
                        assert!(reduced_coproduct_right(&v).unwrap().is_zero());
                    }
                    for b in &pc.vectors {
                        let v = mid(a, b).unwrap();
                        assert!(reduced_coproduct_left(&v).unwrap().is_zero());
                        assert!(reduced_coproduct_right(&v).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_trees_are_corollas() {
        for n in 1..=4 {
            for tree in enumerate_trees(n) {
                let primitive = reduced_full_tree(&tree).is_zero();
                assert_eq!(primitive, tree.is_corolla(), "tree {tree}");
            }
        }
    }

    #[test]
    fn dimension_table_small() {
        let rows = dimension_table(3);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].dim_a, 1);
        assert_eq!(rows[1].dim_a, 3);
        assert_eq!(rows[2].dim_a, 11);
        assert_eq!(rows[2].dim_prim_coass, 6);
        assert_eq!(rows[2].dim_prim_codend, 2);
    }

    #[test]
    fn basis_vectors_pair_independently() {
        // sanity: distinct kernel vectors have distinct leading supports
        let b = primitive_basis(PrimKind::Coass, 3);
        for i in 0..b.vectors.len() {
            for j in i + 1..b.vectors.len() {
                assert_ne!(b.vectors[i], b.vectors[j]);
            }
        }
        let y = TreeVector::basis(t("(|,|)"));
        assert_eq!(pairing(&y, &y), crate::vect::coeff_int(1));
    }
}
