//! The quotient by the tridendriform biideal generated by all middle
//! products, realized on planar binary trees.
//!
//! A basis tree lies in the ideal exactly when it is not binary, so the
//! projection simply drops non-binary terms.  The induced product `π(x * y)`
//! and coproduct `(π ⊗ π)Δ` make the binary trees a Hopf algebra in which
//! `* = ≺ + ≻`; both are cross-checked against the classical recursive
//! formulas on grafting components.

use num::One;

use crate::coproduct::{coproduct, coproduct_left, coproduct_right, coproduct_tree};
use crate::error::{Error, Result};
use crate::products::{left, mid, right, star};
use crate::report::Report;
use crate::tree::{enumerate_trees, PlanarTree};
use crate::vect::{Coeff, TensorVector, TreeVector};

/// A formal sum supported on binary trees only.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinaryTreeVector(TreeVector);

impl BinaryTreeVector {
    pub fn as_vector(&self) -> &TreeVector {
        &self.0
    }

    pub fn into_vector(self) -> TreeVector {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl TryFrom<TreeVector> for BinaryTreeVector {
    type Error = Error;

    fn try_from(v: TreeVector) -> Result<Self> {
        if let Some((t, _)) = v.iter().find(|(t, _)| !t.is_binary()) {
            return Err(Error::NotBinary(t.to_string()));
        }
        Ok(BinaryTreeVector(v))
    }
}

impl std::fmt::Display for BinaryTreeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// The quotient projection: drops every non-binary basis tree.
pub fn project_lr(x: &TreeVector) -> BinaryTreeVector {
    BinaryTreeVector(
        x.iter()
            .filter(|(t, _)| t.is_binary())
            .map(|(t, c)| (t.clone(), c.clone()))
            .collect(),
    )
}

fn require_binary(t: &PlanarTree) -> Result<()> {
    if t.is_binary() {
        Ok(())
    } else {
        Err(Error::NotBinary(t.to_string()))
    }
}

/// The quotient product `π(t * s)` of two binary trees.
pub fn lr_product(t: &PlanarTree, s: &PlanarTree) -> Result<BinaryTreeVector> {
    require_binary(t)?;
    require_binary(s)?;
    Ok(project_lr(&star(
        &TreeVector::basis(t.clone()),
        &TreeVector::basis(s.clone()),
    )))
}

fn lr_product_vec(x: &TreeVector, y: &TreeVector) -> TreeVector {
    project_lr(&star(x, y)).into_vector()
}

/// The quotient coproduct `(π ⊗ π) Δ(t)` of a binary tree.
pub fn lr_coproduct(t: &PlanarTree) -> Result<TensorVector> {
    require_binary(t)?;
    let mut out = TensorVector::zero();
    for ((u, v), c) in coproduct_tree(t).iter() {
        if u.is_binary() && v.is_binary() {
            out.add_term((u.clone(), v.clone()), c.clone());
        }
    }
    Ok(out)
}

/// The two possible readings of the recursive product formula on
/// `t = t1 ∨ t2`, `t' = t1' ∨ t2'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LrReading {
    /// `t * t' = t1 ∨ (t1' * t2) + (t * t1') ∨ t2'`.
    AsPrinted,
    /// `t * t' = t1 ∨ (t2 * t') + (t * t1') ∨ t2'`.
    Standard,
}

impl LrReading {
    pub fn name(self) -> &'static str {
        match self {
            LrReading::AsPrinted => "as-printed",
            LrReading::Standard => "standard",
        }
    }
}

fn graft_pair_linear(first: &TreeVector, second: &TreeVector) -> TreeVector {
    let mut out = TreeVector::zero();
    for (a, ca) in first.iter() {
        for (b, cb) in second.iter() {
            out.add_term(
                PlanarTree::node(vec![a.clone(), b.clone()]),
                ca.clone() * cb.clone(),
            );
        }
    }
    out
}

/// Recursive product on binary trees under the chosen reading, with
/// `| * t = t = t * |`.
pub fn lr_product_recursive(
    reading: LrReading,
    t: &PlanarTree,
    s: &PlanarTree,
) -> Result<TreeVector> {
    require_binary(t)?;
    require_binary(s)?;
    Ok(lr_recursive(reading, t, s))
}

fn lr_recursive(reading: LrReading, t: &PlanarTree, s: &PlanarTree) -> TreeVector {
    if t.is_leaf() {
        return TreeVector::basis(s.clone());
    }
    if s.is_leaf() {
        return TreeVector::basis(t.clone());
    }
    let (t1, t2) = (&t.children()[0], &t.children()[1]);
    let (s1, s2) = (&s.children()[0], &s.children()[1]);
    let first = match reading {
        // t1 ∨ (t1' * t2)
        LrReading::AsPrinted => graft_pair_linear(
            &TreeVector::basis(t1.clone()),
            &lr_recursive(reading, s1, t2),
        ),
        // t1 ∨ (t2 * t')
        LrReading::Standard => graft_pair_linear(
            &TreeVector::basis(t1.clone()),
            &lr_recursive(reading, t2, s),
        ),
    };
    // (t * t1') ∨ t2'
    let second = graft_pair_linear(
        &lr_recursive(reading, t, s1),
        &TreeVector::basis(s2.clone()),
    );
    first.plus(&second)
}

/// Recursive coproduct on binary trees: on `t = t1 ∨ t2`,
/// `Δ(t) = Σ (t1' * t2') ⊗ (t1'' ∨ t2'') + t ⊗ |`, products taken in the
/// quotient.
pub fn lr_coproduct_recursive(t: &PlanarTree) -> Result<TensorVector> {
    require_binary(t)?;
    Ok(lr_coproduct_rec(t))
}

fn lr_coproduct_rec(t: &PlanarTree) -> TensorVector {
    let mut out = TensorVector::zero();
    if t.is_leaf() {
        out.add_term((PlanarTree::Leaf, PlanarTree::Leaf), Coeff::one());
        return out;
    }
    let (t1, t2) = (&t.children()[0], &t.children()[1]);
    let d1 = lr_coproduct_rec(t1);
    let d2 = lr_coproduct_rec(t2);
    for ((u1, v1), c1) in d1.iter() {
        for ((u2, v2), c2) in d2.iter() {
            let first = lr_product_vec(
                &TreeVector::basis(u1.clone()),
                &TreeVector::basis(u2.clone()),
            );
            let second = PlanarTree::node(vec![v1.clone(), v2.clone()]);
            for (w, cw) in first.iter() {
                out.add_term(
                    (w.clone(), second.clone()),
                    c1.clone() * c2.clone() * cw.clone(),
                );
            }
        }
    }
    out.add_term((t.clone(), PlanarTree::Leaf), Coeff::one());
    out
}

/// Determines which reading of the recursive product formula agrees with
/// `π ∘ *` on all binary pairs with degree sum at most the bound; errors if
/// not exactly one does.
pub fn matching_lr_reading(max_total_degree: usize) -> Result<LrReading> {
    let binaries: Vec<Vec<PlanarTree>> = (0..=max_total_degree)
        .map(|n| {
            enumerate_trees(n)
                .into_iter()
                .filter(PlanarTree::is_binary)
                .collect()
        })
        .collect();
    let mut printed_ok = true;
    let mut standard_ok = true;
    for da in 1..max_total_degree {
        for db in 1..=max_total_degree - da {
            for a in &binaries[da] {
                for b in &binaries[db] {
                    let truth = lr_product(a, b)?.into_vector();
                    if lr_product_recursive(LrReading::AsPrinted, a, b)? != truth {
                        printed_ok = false;
                    }
                    if lr_product_recursive(LrReading::Standard, a, b)? != truth {
                        standard_ok = false;
                    }
                }
            }
        }
    }
    match (printed_ok, standard_ok) {
        (false, true) => Ok(LrReading::Standard),
        (true, false) => Ok(LrReading::AsPrinted),
        (true, true) => Err(Error::InvalidShuffleWord(
            "both readings of the recursive product formula match".into(),
        )),
        (false, false) => Err(Error::InvalidShuffleWord(
            "neither reading of the recursive product formula matches".into(),
        )),
    }
}

/// Verifies the biideal and quotient-bialgebra properties up to the bound:
/// the coproducts of ideal elements stay in the ideal, middle products
/// project to zero, `π(x * y) = π(x ≺ y) + π(x ≻ y)`, the quotient coproduct
/// is coassociative and multiplicative, and the recursive formulas agree
/// with the quotient structure.
pub fn check_biideal(max_degree: usize) -> Report {
    let mut report = Report::new();
    let by_degree: Vec<Vec<PlanarTree>> = (0..=max_degree).map(enumerate_trees).collect();

    // ideal elements have coproducts inside I ⊗ A + A ⊗ I
    for trees in &by_degree {
        for t in trees {
            if t.is_binary() {
                continue;
            }
            let x = TreeVector::basis(t.clone());
            for (law, d) in [
                ("biideal-coproduct", coproduct(&x)),
                ("biideal-coproduct-left", coproduct_left(&x)),
                ("biideal-coproduct-right", coproduct_right(&x)),
            ] {
                let projected: TensorVector = d
                    .iter()
                    .filter(|((u, v), _)| u.is_binary() && v.is_binary())
                    .map(|(k, c)| (k.clone(), c.clone()))
                    .collect();
                report.check_eq(law, || format!("t={t}"), &projected, &TensorVector::zero());
            }
        }
    }

    // middle products land in the ideal; * = ≺ + ≻ after projection
    for da in 1..max_degree {
        for db in 1..=max_degree - da {
            for a in &by_degree[da] {
                let va = TreeVector::basis(a.clone());
                for b in &by_degree[db] {
                    let vb = TreeVector::basis(b.clone());
                    let mid_proj = project_lr(&mid(&va, &vb).expect("non-unit"));
                    report.check_eq(
                        "quotient-mid-vanishes",
                        || format!("x={a};y={b}"),
                        mid_proj.as_vector(),
                        &TreeVector::zero(),
                    );
                    let star_proj = project_lr(&star(&va, &vb));
                    let sum = project_lr(&left(&va, &vb).expect("non-unit"))
                        .into_vector()
                        .plus(project_lr(&right(&va, &vb).expect("non-unit")).as_vector());
                    report.check_eq(
                        "quotient-star-split",
                        || format!("x={a};y={b}"),
                        star_proj.as_vector(),
                        &sum,
                    );
                }
            }
        }
    }

    // the projected product only depends on the projected arguments: adding
    // an ideal element to either side leaves π(x * y) unchanged
    for da in 1..max_degree {
        for db in 1..=max_degree - da {
            let ideal_a: Vec<&PlanarTree> =
                by_degree[da].iter().filter(|t| !t.is_binary()).collect();
            for a in by_degree[da].iter().filter(|t| t.is_binary()) {
                let va = TreeVector::basis(a.clone());
                for b in by_degree[db].iter().filter(|t| t.is_binary()) {
                    let vb = TreeVector::basis(b.clone());
                    let base = project_lr(&star(&va, &vb));
                    for extra in &ideal_a {
                        let shifted = va.clone().plus(&TreeVector::basis((*extra).clone()));
                        let with_ideal = project_lr(&star(&shifted, &vb));
                        report.check_eq(
                            "quotient-well-defined",
                            || format!("x={a};ideal={extra};y={b}"),
                            &with_ideal,
                            &base,
                        );
                    }
                }
            }
        }
    }

    // quotient bialgebra laws on binary trees
    let binaries: Vec<Vec<PlanarTree>> = by_degree
        .iter()
        .map(|ts| ts.iter().filter(|t| t.is_binary()).cloned().collect())
        .collect();
    for trees in &binaries {
        for t in trees {
            let d = lr_coproduct(t).expect("binary");
            // coassociativity
            let mut lhs = crate::vect::TripleTensorVector::zero();
            let mut rhs = crate::vect::TripleTensorVector::zero();
            for ((u, v), c) in d.iter() {
                for ((a, b), cu) in lr_coproduct(u).expect("binary").iter() {
                    lhs.add_term((a.clone(), b.clone(), v.clone()), c.clone() * cu.clone());
                }
                for ((a, b), cv) in lr_coproduct(v).expect("binary").iter() {
                    rhs.add_term((u.clone(), a.clone(), b.clone()), c.clone() * cv.clone());
                }
            }
            report.check_eq("quotient-coassoc", || format!("t={t}"), &lhs, &rhs);
            // recursive coproduct formula
            report.check_eq(
                "quotient-coproduct-recursive",
                || format!("t={t}"),
                &d,
                &lr_coproduct_recursive(t).expect("binary"),
            );
        }
    }

    // multiplicativity of the quotient coproduct
    for da in 1..max_degree {
        for db in 1..=max_degree - da {
            for a in &binaries[da] {
                let da_tensor = lr_coproduct(a).expect("binary");
                for b in &binaries[db] {
                    let db_tensor = lr_coproduct(b).expect("binary");
                    let product = lr_product(a, b).expect("binary");
                    let mut lhs = TensorVector::zero();
                    for (t, c) in product.as_vector().iter() {
                        for (k, v) in lr_coproduct(t).expect("binary").iter() {
                            lhs.add_term(k.clone(), c.clone() * v.clone());
                        }
                    }
                    let mut rhs = TensorVector::zero();
                    for ((u1, v1), c1) in da_tensor.iter() {
                        for ((u2, v2), c2) in db_tensor.iter() {
                            let firsts = lr_product_vec(
                                &TreeVector::basis(u1.clone()),
                                &TreeVector::basis(u2.clone()),
                            );
                            let seconds = lr_product_vec(
                                &TreeVector::basis(v1.clone()),
                                &TreeVector::basis(v2.clone()),
                            );
                            let c = c1.clone() * c2.clone();
                            for (w1, cw1) in firsts.iter() {
                                for (w2, cw2) in seconds.iter() {
                                    rhs.add_term(
                                        (w1.clone(), w2.clone()),
                                        c.clone() * cw1.clone() * cw2.clone(),
                                    );
                                }
                            }
                        }
                    }
                    report.check_eq(
                        "quotient-multiplicative",
                        || format!("x={a};y={b}"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vect::coeff_int;

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    fn v(s: &str) -> TreeVector {
        TreeVector::basis(t(s))
    }

    #[test]
    fn projection_examples() {
        assert!(project_lr(&v("(|,|,|)")).is_zero());
        assert_eq!(project_lr(&v("((|,|),|)")).as_vector(), &v("((|,|),|)"));
        let yy = star(&v("(|,|)"), &v("(|,|)"));
        let projected = project_lr(&yy);
        let expected = v("((|,|),|)").plus(&v("(|,(|,|))"));
        assert_eq!(projected.as_vector(), &expected);
    }

    #[test]
    fn binary_vector_validation() {
        assert!(BinaryTreeVector::try_from(v("(|,|,|)")).is_err());
        assert!(BinaryTreeVector::try_from(v("((|,|),|)")).is_ok());
    }

    #[test]
    fn lr_product_on_generators_and_units() {
        let p = lr_product(&t("(|,|)"), &t("(|,|)")).unwrap();
        let expected = v("((|,|),|)").plus(&v("(|,(|,|))"));
        assert_eq!(p.as_vector(), &expected);
        assert_eq!(
            lr_product(&t("|"), &t("((|,|),|)")).unwrap().as_vector(),
            &v("((|,|),|)")
        );
        assert_eq!(
            lr_product(&t("((|,|),|)"), &t("|")).unwrap().as_vector(),
            &v("((|,|),|)")
        );
        assert!(lr_product(&t("(|,|,|)"), &t("(|,|)")).is_err());
    }

    #[test]
    fn lr_coproduct_examples() {
        let d = lr_coproduct(&t("(|,|)")).unwrap();
        assert_eq!(d.len(), 2);
        let d = lr_coproduct(&t("(|,(|,|))")).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&(t("(|,|)"), t("(|,|)"))), coeff_int(1));
        let d = lr_coproduct(&t("((|,|),|)")).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&(t("(|,|)"), t("(|,|)"))), coeff_int(1));
        assert!(lr_coproduct(&t("(|,|,|)")).is_err());
    }

    #[test]
    fn standard_reading_matches() {
        assert_eq!(matching_lr_reading(4).unwrap(), LrReading::Standard);
    }

    #[test]
    fn printed_reading_breaks_grading() {
        let y = t("(|,|)");
        let p = lr_product_recursive(LrReading::AsPrinted, &y, &y).unwrap();
        // the printed formula collapses degrees; the true product is graded
        assert_ne!(p, lr_product(&y, &y).unwrap().into_vector());
    }

    /// Catalan numbers by the convolution recurrence, as an independent
    /// count of the quotient basis.
    fn catalan(n: usize) -> usize {
        let mut c = vec![1usize];
        for m in 1..=n {
            c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
        }
        c[n]
    }

    #[test]
    fn quotient_dimensions_are_catalan() {
        for n in 0..=4 {
            let count = enumerate_trees(n)
                .into_iter()
                .filter(|t| t.is_binary())
                .count();
            assert_eq!(count, catalan(n));
        }
    }

    #[test]
    fn biideal_checks_pass_small() {
        let report = check_biideal(3);
        assert!(report.is_ok(), "violations: {:?}", report.violations);
    }
}
