//! The tridendriform structure on the augmented tensor square.
//!
//! On basis tensors the partial products case-split on the second factors:
//! when both are units (the `D` case) the operation moves to the first
//! factors, `(a ⊗ |) ⋉ (c ⊗ |) = (a ⋉ c) ⊗ |`; otherwise (the `U` case) the
//! first factors multiply with `*` and the operation lands on the second,
//! `(a ⊗ b) ⋉ (c ⊗ d) = (a * c) ⊗ (b ⋉ d)`.  With `⋉ = *` both cases agree.
//! This is exactly the structure needed to state the coproduct morphism law
//! `Δ(x ⋉ y) = Δ(x) ⋉ Δ(y)`.

use num::One;

use crate::error::Result;
use crate::products::{product, TriOp};
use crate::report::Report;
use crate::tree::{enumerate_trees, PlanarTree};
use crate::vect::{Coeff, TensorVector, TreeVector, TripleTensorVector};

/// `x ⋉ y` in the augmented tensor square, bilinear over basis tensors.
///
/// Errors propagate from the underlying tree products: the only undefined
/// atomic case is a partial product applied to the pair of units, which here
/// arises exactly for `(| ⊗ |) ⋉ (| ⊗ |)` with `⋉ ≠ *`.
pub fn tensor_op(op: TriOp, x: &TensorVector, y: &TensorVector) -> Result<TensorVector> {
    let mut out = TensorVector::zero();
    for ((a, b), cx) in x.iter() {
        for ((c, d), cy) in y.iter() {
            let coeff = cx.clone() * cy.clone();
            let term = tensor_op_basis(op, a, b, c, d)?;
            for (k, v) in term.iter() {
                out.add_term(k.clone(), coeff.clone() * v.clone());
            }
        }
    }
    Ok(out)
}

fn tensor_op_basis(
    op: TriOp,
    a: &PlanarTree,
    b: &PlanarTree,
    c: &PlanarTree,
    d: &PlanarTree,
) -> Result<TensorVector> {
    let (firsts, seconds) = if op != TriOp::Star && b.is_leaf() && d.is_leaf() {
        // D case: operate on the first factors
        let firsts = product(
            op,
            &TreeVector::basis(a.clone()),
            &TreeVector::basis(c.clone()),
        )?;
        (firsts, TreeVector::basis(PlanarTree::Leaf))
    } else {
        // U case (and all of *): star on firsts, operate on seconds
        let firsts = product(
            TriOp::Star,
            &TreeVector::basis(a.clone()),
            &TreeVector::basis(c.clone()),
        )?;
        let seconds = product(
            op,
            &TreeVector::basis(b.clone()),
            &TreeVector::basis(d.clone()),
        )?;
        (firsts, seconds)
    };
    let mut out = TensorVector::zero();
    for (u, cu) in firsts.iter() {
        for (v, cv) in seconds.iter() {
            out.add_term((u.clone(), v.clone()), cu.clone() * cv.clone());
        }
    }
    Ok(out)
}

/// Basis of the augmented tensor square in total degree `d`: pairs of trees
/// with degrees summing to `d`, excluding the pure unit pair.
fn tensor_basis(d: usize, by_degree: &[Vec<PlanarTree>]) -> Vec<(PlanarTree, PlanarTree)> {
    let mut out = Vec::new();
    for i in 0..=d {
        for a in &by_degree[i] {
            for b in &by_degree[d - i] {
                if a.is_leaf() && b.is_leaf() {
                    continue;
                }
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Basis triples of the threefold augmented tensor product in total degree
/// `d` (at least one factor differs from the unit).
fn triple_basis(
    d: usize,
    by_degree: &[Vec<PlanarTree>],
) -> Vec<(PlanarTree, PlanarTree, PlanarTree)> {
    let mut out = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            for a in &by_degree[i] {
                for b in &by_degree[j] {
                    for c in &by_degree[d - i - j] {
                        if a.is_leaf() && b.is_leaf() && c.is_leaf() {
                            continue;
                        }
                        out.push((a.clone(), b.clone(), c.clone()));
                    }
                }
            }
        }
    }
    out
}

/// `x ⋉ y` on basis triples, read as `(A ⊗ A) ⊗ A`.
fn triple_op_left_assoc(
    op: TriOp,
    x: &(PlanarTree, PlanarTree, PlanarTree),
    y: &(PlanarTree, PlanarTree, PlanarTree),
) -> Result<TripleTensorVector> {
    let (a, b, c) = x;
    let (a2, b2, c2) = y;
    let mut out = TripleTensorVector::zero();
    if op != TriOp::Star && c.is_leaf() && c2.is_leaf() {
        let inner = tensor_op_basis(op, a, b, a2, b2)?;
        for ((u, v), w) in inner.iter() {
            out.add_term((u.clone(), v.clone(), PlanarTree::Leaf), w.clone());
        }
    } else {
        let inner = tensor_op_basis(TriOp::Star, a, b, a2, b2)?;
        let last = product(
            op,
            &TreeVector::basis(c.clone()),
            &TreeVector::basis(c2.clone()),
        )?;
        for ((u, v), w) in inner.iter() {
            for (z, cz) in last.iter() {
                out.add_term((u.clone(), v.clone(), z.clone()), w.clone() * cz.clone());
            }
        }
    }
    Ok(out)
}

/// `x ⋉ y` on basis triples, read as `A ⊗ (A ⊗ A)`.
fn triple_op_right_assoc(
    op: TriOp,
    x: &(PlanarTree, PlanarTree, PlanarTree),
    y: &(PlanarTree, PlanarTree, PlanarTree),
) -> Result<TripleTensorVector> {
    let (a, b, c) = x;
    let (a2, b2, c2) = y;
    let mut out = TripleTensorVector::zero();
    if op != TriOp::Star && b.is_leaf() && c.is_leaf() && b2.is_leaf() && c2.is_leaf() {
        let firsts = product(
            op,
            &TreeVector::basis(a.clone()),
            &TreeVector::basis(a2.clone()),
        )?;
        for (u, cu) in firsts.iter() {
            out.add_term((u.clone(), PlanarTree::Leaf, PlanarTree::Leaf), cu.clone());
        }
    } else {
        let firsts = product(
            TriOp::Star,
            &TreeVector::basis(a.clone()),
            &TreeVector::basis(a2.clone()),
        )?;
        let inner = tensor_op_basis(op, b, c, b2, c2)?;
        for (u, cu) in firsts.iter() {
            for ((v, w), cvw) in inner.iter() {
                out.add_term((u.clone(), v.clone(), w.clone()), cu.clone() * cvw.clone());
            }
        }
    }
    Ok(out)
}

/// Verifies that the tensor structure behaves:
///
/// 1. both bracketings of the threefold tensor product carry the same four
///    operations (checked on pairs of basis triples whose total degree is at
///    most the bound);
/// 2. `* = ≺ + · + ≻` on the tensor square, including the mixed-unit cases;
/// 3. the seven tridendriform relations hold for unit-free basis tensors
///    (triples with total degree at most the bound).
pub fn check_tensor_structure(max_total_degree: usize) -> Report {
    let mut report = Report::new();
    let by_degree: Vec<Vec<PlanarTree>> = (0..=max_total_degree).map(enumerate_trees).collect();

    // (1) associativity of the tensor construction
    let triples: Vec<Vec<(PlanarTree, PlanarTree, PlanarTree)>> = (0..=max_total_degree)
        .map(|d| triple_basis(d, &by_degree))
        .collect();
    for dx in 1..=max_total_degree.saturating_sub(1) {
        for dy in 1..=max_total_degree - dx {
            for x in &triples[dx] {
                for y in &triples[dy] {
                    for op in [TriOp::Left, TriOp::Mid, TriOp::Right, TriOp::Star] {
                        let lhs = triple_op_left_assoc(op, x, y);
                        let rhs = triple_op_right_assoc(op, x, y);
                        report.checked += 1;
                        let same = match (&lhs, &rhs) {
                            (Ok(l), Ok(r)) => l == r,
                            (Err(el), Err(er)) => el == er,
                            _ => false,
                        };
                        if !same {
                            report.record(
                                "tensor-assoc",
                                format!(
                                    "op={};x={}⊗{}⊗{};y={}⊗{}⊗{}",
                                    op.symbol(),
                                    x.0,
                                    x.1,
                                    x.2,
                                    y.0,
                                    y.1,
                                    y.2
                                ),
                                render(&lhs),
                                render(&rhs),
                            );
                        }
                    }
                }
            }
        }
    }

    // (2) * = ≺ + · + ≻ on the tensor square, mixed units included
    let mut pairs: Vec<(PlanarTree, PlanarTree)> = vec![(PlanarTree::Leaf, PlanarTree::Leaf)];
    for d in 1..=max_total_degree {
        pairs.extend(tensor_basis(d, &by_degree));
    }
    for x in &pairs {
        for y in &pairs {
            if x.0.is_leaf() && x.1.is_leaf() && y.0.is_leaf() && y.1.is_leaf() {
                continue; // partial products are undefined on the unit pair
            }
            if x.0.degree() + x.1.degree() + y.0.degree() + y.1.degree() > max_total_degree {
                continue;
            }
            let vx = TensorVector::basis(x.clone());
            let vy = TensorVector::basis(y.clone());
            let star = tensor_op(TriOp::Star, &vx, &vy).expect("tensor star is total here");
            let sum = tensor_op(TriOp::Left, &vx, &vy)
                .and_then(|l| Ok(l.plus(&tensor_op(TriOp::Mid, &vx, &vy)?)))
                .and_then(|lm| Ok(lm.plus(&tensor_op(TriOp::Right, &vx, &vy)?)));
            report.checked += 1;
            match sum {
                Ok(s) if s == star => {}
                other => report.record(
                    "tensor-star-split",
                    format!("x={}⊗{};y={}⊗{}", x.0, x.1, y.0, y.1),
                    star.to_string(),
                    match other {
                        Ok(s) => s.to_string(),
                        Err(e) => format!("<error: {e}>"),
                    },
                ),
            }
        }
    }

    // (3) tri1-tri7 for unit-free tensors
    let unit_free: Vec<Vec<(PlanarTree, PlanarTree)>> = (0..=max_total_degree)
        .map(|d| {
            tensor_basis(d, &by_degree)
                .into_iter()
                .filter(|(a, b)| !a.is_leaf() && !b.is_leaf())
                .collect()
        })
        .collect();
    for da in 2..=max_total_degree.saturating_sub(4) {
        for db in 2..=max_total_degree - da - 2 {
            for dc in 2..=max_total_degree - da - db {
                for a in &unit_free[da] {
                    for b in &unit_free[db] {
                        for c in &unit_free[dc] {
                            let va = TensorVector::basis(a.clone());
                            let vb = TensorVector::basis(b.clone());
                            let vc = TensorVector::basis(c.clone());
                            for &(law, lo, ro, li, ri) in &crate::products::TRI_RELATIONS {
                                let lhs =
                                    tensor_op(lo, &va, &vb).and_then(|ab| tensor_op(ro, &ab, &vc));
                                let rhs =
                                    tensor_op(ri, &vb, &vc).and_then(|bc| tensor_op(li, &va, &bc));
                                report.checked += 1;
                                match (lhs, rhs) {
                                    (Ok(l), Ok(r)) if l == r => {}
                                    (l, r) => report.record(
                                        &format!("tensor-{law}"),
                                        format!(
                                            "a={}⊗{};b={}⊗{};c={}⊗{}",
                                            a.0, a.1, b.0, b.1, c.0, c.1
                                        ),
                                        render_pairvec(&l),
                                        render_pairvec(&r),
                                    ),
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    report
}

fn render(r: &Result<TripleTensorVector>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("<error: {e}>"),
    }
}

fn render_pairvec(r: &Result<TensorVector>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("<error: {e}>"),
    }
}

/// Convenience: `x ⊗ y` scaled by a coefficient, added into `acc`.
pub(crate) fn add_tensor_scaled(acc: &mut TensorVector, x: &TreeVector, y: &TreeVector, c: &Coeff) {
    if c == &Coeff::one() {
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                acc.add_term((a.clone(), b.clone()), ca.clone() * cb.clone());
            }
        }
    } else {
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                acc.add_term((a.clone(), b.clone()), c.clone() * ca.clone() * cb.clone());
            }
        }
    }
}
