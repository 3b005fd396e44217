//! Acceptance suite: every guarantee the library makes, exercised at desk
//! scale with exact arithmetic (tolerance zero throughout).  One test per
//! criterion; each prints a PASS line on success.
//!
//! Run with `cargo test --test acceptance` (add `-- --nocapture` to see the
//! PASS lines).

use num::BigInt;
use tridendriform::coproduct::{check_32_relations, check_bialgebra, reduced_coproduct};
use tridendriform::dual::check_dual_structure;
use tridendriform::linalg::SparseMatrix;
use tridendriform::primitives::{primitive_basis, theta, PrimKind};
use tridendriform::products::{
    apply_qsh, check_tridend_axioms, enumerate_qsh, left, left_inductive, mid, mid_inductive,
    right, right_inductive, star, star_inductive,
};
use tridendriform::quotient::{
    check_biideal, lr_coproduct, lr_coproduct_recursive, lr_product, lr_product_recursive,
    matching_lr_reading, project_lr, LrReading,
};
use tridendriform::series::{big_schroeder, check_series_identities, small_schroeder};
use tridendriform::{enumerate_trees, PlanarTree, Report, TreeVector};

fn pass(criterion: u32, detail: &str) {
    println!("PASS criterion {criterion}: {detail}");
}

fn assert_clean(criterion: u32, report: &Report) {
    assert!(
        report.is_ok(),
        "criterion {criterion}: {} violation(s), first: {}",
        report.violations.len(),
        report.violations[0]
    );
}

#[test]
fn criterion_01_tridendriform_axioms_to_degree_six() {
    let report = check_tridend_axioms(6);
    assert_clean(1, &report);
    pass(
        1,
        &format!(
            "all 7 relations on every tree triple with degree sum <= 6 ({} instances, 0 violations)",
            report.checked
        ),
    );
}

#[test]
fn criterion_02_quasi_shuffle_equals_inductive_products() {
    let by_degree: Vec<Vec<PlanarTree>> = (0..=5).map(enumerate_trees).collect();
    let mut pairs = 0u64;
    for da in 1..=5usize {
        for db in 1..=6 - da {
            for a in &by_degree[da] {
                let va = TreeVector::basis(a.clone());
                for b in &by_degree[db] {
                    let vb = TreeVector::basis(b.clone());
                    assert_eq!(star(&va, &vb), star_inductive(&va, &vb).unwrap());
                    assert_eq!(left(&va, &vb), left_inductive(&va, &vb));
                    assert_eq!(mid(&va, &vb), mid_inductive(&va, &vb));
                    assert_eq!(right(&va, &vb), right_inductive(&va, &vb));
                    pairs += 1;
                }
            }
        }
    }
    pass(
        2,
        &format!("quasi-shuffle and inductive forms agree for all 4 products on {pairs} pairs"),
    );
}

#[test]
fn criterion_03_hopf_structure_to_degree_five() {
    let report = check_bialgebra(5);
    assert_clean(3, &report);
    pass(
        3,
        &format!(
            "coassociativity, counit and the three coproduct morphism laws ({} instances)",
            report.checked
        ),
    );
}

#[test]
fn criterion_04_three_two_relations_to_degree_five() {
    let report = check_32_relations(5);
    assert_clean(4, &report);
    pass(
        4,
        &format!(
            "all six (3,2) compatibilities and the three codendriform identities ({} instances)",
            report.checked
        ),
    );
}

#[test]
fn criterion_05_duality_to_degree_five() {
    let report = check_dual_structure(5);
    assert_clean(5, &report);
    pass(
        5,
        &format!(
            "lightning coproduct transposes *, pieces adjoint to their products, cotri1-7 and compa1-3 ({} instances)",
            report.checked
        ),
    );
}

#[test]
fn criterion_06_dimensions_by_enumeration_and_recurrence() {
    let expected: [u64; 7] = [1, 3, 11, 45, 197, 903, 4279];
    for (i, &count) in expected.iter().enumerate() {
        let n = i + 1;
        assert_eq!(
            enumerate_trees(n).len() as u64,
            count,
            "enumeration at degree {n}"
        );
        assert_eq!(
            small_schroeder(n),
            BigInt::from(count),
            "recurrence at degree {n}"
        );
    }
    pass(
        6,
        "dim A_n = 1, 3, 11, 45, 197, 903, 4279 for n = 1..7, by enumeration and by recurrence",
    );
}

#[test]
fn criterion_07_primitive_dimensions_by_exact_kernels() {
    let codend: [usize; 6] = [1, 1, 2, 6, 22, 90];
    for (i, &d) in codend.iter().enumerate() {
        let n = i + 1;
        assert_eq!(
            primitive_basis(PrimKind::Codend, n).vectors.len(),
            d,
            "codendriform primitives at degree {n}"
        );
    }
    let coass: [usize; 5] = [1, 2, 6, 22, 90];
    for (i, &d) in coass.iter().enumerate() {
        let n = i + 1;
        assert_eq!(
            primitive_basis(PrimKind::Coass, n).vectors.len(),
            d,
            "coassociative primitives at degree {n}"
        );
    }
    pass(
        7,
        "dim Prim_Codend(1..6) = 1,1,2,6,22,90 and dim Prim_Coass(1..5) = 1,2,6,22,90",
    );
}

#[test]
fn criterion_08_theta_isomorphism() {
    use tridendriform::coproduct::{reduced_coproduct_left, reduced_coproduct_right};
    for n in 1..=4usize {
        let basis = primitive_basis(PrimKind::Coass, n);
        let image = theta(&basis).unwrap();
        let target_dim = primitive_basis(PrimKind::Codend, n + 1).vectors.len();
        // each image vector is codendriform primitive
        for v in &image {
            assert!(
                reduced_coproduct_left(v).unwrap().is_zero()
                    && reduced_coproduct_right(v).unwrap().is_zero(),
                "theta image must be codendriform primitive at degree {}",
                n + 1
            );
        }
        // independent and spanning by dimension count
        let rank = SparseMatrix::from_columns(&image).1.rank();
        assert_eq!(rank, image.len(), "theta image independent at degree {n}");
        assert_eq!(rank, target_dim, "theta image spans at degree {n}");
    }
    pass(
        8,
        "a ↦ a·Y carries each Prim_Coass(n) basis (n = 1..4) to an independent spanning set of Prim_Codend(n+1)",
    );
}

#[test]
fn criterion_09_series_identities_to_order_twelve() {
    let report = check_series_identities(12);
    assert_clean(9, &report);
    pass(
        9,
        "P = R/(1+R)^2, P = X + X^2 + 2X^2R, R/(1+R) = X + 2XR, and (4X(1+R)-1-X)^2 = 1-6X+X^2 through order 12",
    );
}

#[test]
fn criterion_10_loday_ronco_quotient() {
    // middle products vanish and the quotient laws hold
    let report = check_biideal(5);
    assert_clean(10, &report);

    // quotient dimensions are the Catalan numbers (independent recurrence)
    let mut catalan = vec![1usize];
    for m in 1..=5 {
        catalan.push((0..m).map(|i| catalan[i] * catalan[m - 1 - i]).sum());
    }
    for (n, expected) in catalan.iter().enumerate() {
        let count = enumerate_trees(n)
            .into_iter()
            .filter(|t| t.is_binary())
            .count();
        assert_eq!(count, *expected, "quotient dimension at degree {n}");
    }

    // quotient coproduct equals the recursive formula on every binary tree
    for n in 0..=5usize {
        for t in enumerate_trees(n).into_iter().filter(|t| t.is_binary()) {
            assert_eq!(
                lr_coproduct(&t).unwrap(),
                lr_coproduct_recursive(&t).unwrap(),
                "recursive coproduct at {t}"
            );
        }
    }

    // exactly one reading of the recursive product formula matches π ∘ *
    let reading = matching_lr_reading(5).unwrap();
    assert_eq!(reading, LrReading::Standard);
    // and the other one demonstrably fails
    let y = PlanarTree::generator();
    assert_ne!(
        lr_product_recursive(LrReading::AsPrinted, &y, &y).unwrap(),
        lr_product(&y, &y).unwrap().into_vector()
    );

    // spot check: the corolla is a middle product, hence projects to zero
    let corolla: PlanarTree = "(|,|,|)".parse().unwrap();
    assert!(project_lr(&TreeVector::basis(corolla)).is_zero());

    pass(
        10,
        &format!(
            "quotient checks clean ({} instances); dimensions Catalan 1,1,2,5,14,42; recursive coproduct matches; product reading: {}",
            report.checked,
            reading.name()
        ),
    );
}

#[test]
fn criterion_11_quasi_shuffle_action_is_injective() {
    let by_degree: Vec<Vec<PlanarTree>> = (0..=5).map(enumerate_trees).collect();
    let mut pairs = 0u64;
    for da in 1..=5usize {
        for db in 1..=6 - da {
            for a in &by_degree[da] {
                for b in &by_degree[db] {
                    let k = tridendriform::tree::right_comb_decomposition(a)
                        .unwrap()
                        .len();
                    let l = tridendriform::tree::left_comb_decomposition(b)
                        .unwrap()
                        .len();
                    let shuffles = enumerate_qsh(k, l).unwrap();
                    let mut seen = std::collections::BTreeSet::new();
                    for sigma in &shuffles {
                        let tree = apply_qsh(sigma, a, b).unwrap();
                        assert!(
                            seen.insert(tree),
                            "collision in the action on ({a}, {b}) at {sigma}"
                        );
                    }
                    pairs += 1;
                }
            }
        }
    }
    pass(
        11,
        &format!(
            "no collisions among the quasi-shuffle images on {pairs} pairs with degree sum <= 6"
        ),
    );
}

#[test]
fn criterion_12_primitive_trees_are_exactly_corollas() {
    for n in 1..=6usize {
        let mut primitives = Vec::new();
        for t in enumerate_trees(n) {
            if reduced_coproduct(&TreeVector::basis(t.clone()))
                .unwrap()
                .is_zero()
            {
                primitives.push(t);
            }
        }
        assert_eq!(primitives.len(), 1, "one primitive tree at degree {n}");
        assert!(
            primitives[0].is_corolla(),
            "the primitive tree at degree {n} is the corolla"
        );
        assert_eq!(primitives[0].leaf_count(), n + 1);
    }
    pass(
        12,
        "for each degree n <= 6 the primitive basis trees are exactly the corolla with n+1 leaves",
    );
}

#[test]
fn big_schroeder_shadows_primitive_dimensions() {
    // cross-module consistency used throughout the suite
    for n in 1..=6usize {
        assert_eq!(
            BigInt::from(primitive_basis(PrimKind::Codend, n).vectors.len()),
            big_schroeder(n)
        );
    }
    for n in 1..=5usize {
        assert_eq!(
            BigInt::from(primitive_basis(PrimKind::Coass, n).vectors.len()),
            big_schroeder(n + 1)
        );
    }
}
