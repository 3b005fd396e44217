//! The admissible-cut coproduct and its right-most-leaf splitting.
//!
//! An *admissible cut* of a tree is the empty cut, the total cut, or a
//! non-empty set of internal edges no two of which lie on a common
//! root-to-leaf path.  Removing the chosen edges drops the subtrees hanging
//! below them (each replaced by a leaf stump in the trunk); the coproduct is
//!
//! ```text
//! Δ(t) = Σ_c  G^c(t) ⊗ P^c(t),      Δ(|) = | ⊗ |,
//! ```
//!
//! where `P^c` is the trunk and `G^c` is the `*`-product of the fallen
//! subtrees read left to right (a linear combination in general).
//!
//! Splitting the cut sum by whether the right-most leaf of `t` falls gives
//! the two half-coproducts `Δ←` (it falls) and `Δ→` (it stays), which make
//! the algebra a (3,2)-dendriform bialgebra.

use std::collections::BTreeSet;

use num::One;

use crate::error::{Error, Result};
use crate::products::{left, mid, right, star, TriOp};
use crate::report::Report;
use crate::tensor::{add_tensor_scaled, tensor_op};
use crate::tree::{enumerate_trees, PlanarTree};
use crate::vect::{Coeff, TensorVector, TreeVector, TripleTensorVector};

/// An admissible cut; edges are identified by the path of child indices from
/// the root to the *lower* endpoint (the child node), which must be internal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum AdmissibleCut {
    Empty,
    Total,
    Edges(BTreeSet<Vec<usize>>),
}

/// Every admissible cut of `t`, deterministically ordered: empty, total, then
/// the edge sets in ascending set order.
pub fn enumerate_admissible_cuts(t: &PlanarTree) -> Vec<AdmissibleCut> {
    let mut sets = Vec::new();
    let mut path = Vec::new();
    collect_antichains(t, &mut path, &mut sets);
    let mut cuts = vec![AdmissibleCut::Empty, AdmissibleCut::Total];
    sets.retain(|s| !s.is_empty());
    sets.sort();
    cuts.extend(sets.into_iter().map(AdmissibleCut::Edges));
    cuts
}

/// All antichains (including the empty one) of internal edges in the subtree
/// rooted at `path`.
fn collect_antichains(t: &PlanarTree, path: &mut Vec<usize>, out: &mut Vec<BTreeSet<Vec<usize>>>) {
    // per-child options: either cut the edge to an internal child (nothing
    // below it may then be cut) or keep it and take any antichain inside
    let mut options: Vec<Vec<BTreeSet<Vec<usize>>>> = Vec::new();
    for (i, c) in t.children().iter().enumerate() {
        if c.is_leaf() {
            continue;
        }
        path.push(i);
        let mut inner = Vec::new();
        collect_antichains(c, path, &mut inner);
        let mut cut_here = BTreeSet::new();
        cut_here.insert(path.clone());
        inner.push(cut_here);
        options.push(inner);
        path.pop();
    }
    // cartesian product of the per-child choices
    let mut acc: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new()];
    for opts in options {
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for base in &acc {
            for extra in &opts {
                let mut s = base.clone();
                s.extend(extra.iter().cloned());
                next.push(s);
            }
        }
        acc = next;
    }
    out.extend(acc);
}

fn validate_cut(t: &PlanarTree, edges: &BTreeSet<Vec<usize>>) -> Result<()> {
    if edges.is_empty() {
        return Err(Error::InadmissibleCut("empty edge set".into()));
    }
    for p in edges {
        if p.is_empty() {
            return Err(Error::InadmissibleCut("empty edge path".into()));
        }
        match t.subtree_at(p) {
            Some(sub) if !sub.is_leaf() => {}
            Some(_) => {
                return Err(Error::InadmissibleCut(format!(
                    "edge {p:?} does not join two internal vertices"
                )))
            }
            None => {
                return Err(Error::InadmissibleCut(format!(
                    "edge path {p:?} does not exist"
                )))
            }
        }
    }
    let paths: Vec<&Vec<usize>> = edges.iter().collect();
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            let (a, b) = (paths[i], paths[j]);
            if a.len() <= b.len() && b[..a.len()] == a[..] {
                return Err(Error::InadmissibleCut(format!(
                    "edges {a:?} and {b:?} share a root-to-leaf path"
                )));
            }
        }
    }
    Ok(())
}

/// Splits `t` along an admissible cut into `(G, P)`: the `*`-product of the
/// fallen subtrees (left to right) and the trunk.
pub fn cut_parts(t: &PlanarTree, cut: &AdmissibleCut) -> Result<(TreeVector, PlanarTree)> {
    match cut {
        AdmissibleCut::Empty => Ok((TreeVector::basis(PlanarTree::Leaf), t.clone())),
        AdmissibleCut::Total => Ok((TreeVector::basis(t.clone()), PlanarTree::Leaf)),
        AdmissibleCut::Edges(edges) => {
            validate_cut(t, edges)?;
            let mut fallen = Vec::new();
            let mut path = Vec::new();
            let trunk = sever(t, &mut path, edges, &mut fallen);
            let mut g = TreeVector::basis(PlanarTree::Leaf);
            for part in &fallen {
                g = star(&g, &TreeVector::basis(part.clone()));
            }
            Ok((g, trunk))
        }
    }
}

/// Rebuilds the trunk, replacing each fallen subtree by a leaf stump and
/// pushing the fallen subtrees in left-to-right order.
fn sever(
    t: &PlanarTree,
    path: &mut Vec<usize>,
    edges: &BTreeSet<Vec<usize>>,
    fallen: &mut Vec<PlanarTree>,
) -> PlanarTree {
    match t {
        PlanarTree::Leaf => PlanarTree::Leaf,
        PlanarTree::Node(cs) => {
            let mut children = Vec::with_capacity(cs.len());
            for (i, c) in cs.iter().enumerate() {
                path.push(i);
                if edges.contains(path.as_slice()) {
                    fallen.push(c.clone());
                    children.push(PlanarTree::Leaf);
                } else {
                    children.push(sever(c, path, edges, fallen));
                }
                path.pop();
            }
            PlanarTree::node(children)
        }
    }
}

/// True iff the right-most leaf of `t` lies in a fallen component: some cut
/// edge sits on the path from the root to the right-most leaf.
fn cuts_rightmost_leaf(t: &PlanarTree, cut: &AdmissibleCut) -> bool {
    match cut {
        AdmissibleCut::Empty => false,
        AdmissibleCut::Total => true,
        AdmissibleCut::Edges(edges) => edges.iter().any(|p| {
            let mut cur = t;
            for &step in p {
                let cs = cur.children();
                if step != cs.len() - 1 {
                    return false;
                }
                cur = &cs[step];
            }
            true
        }),
    }
}

/// The admissible-cut coproduct of a single tree; `Δ(|) = | ⊗ |` (for the
/// leaf the empty and total cuts coincide).
pub fn coproduct_tree(t: &PlanarTree) -> TensorVector {
    let mut out = TensorVector::zero();
    if t.is_leaf() {
        out.add_term((PlanarTree::Leaf, PlanarTree::Leaf), Coeff::one());
        return out;
    }
    for cut in enumerate_admissible_cuts(t) {
        let (g, p) = cut_parts(t, &cut).expect("enumerated cuts are admissible");
        for (u, c) in g.iter() {
            out.add_term((u.clone(), p.clone()), c.clone());
        }
    }
    out
}

/// Linear extension of the coproduct.
pub fn coproduct(x: &TreeVector) -> TensorVector {
    let mut out = TensorVector::zero();
    for (t, c) in x.iter() {
        for (k, v) in coproduct_tree(t).iter() {
            out.add_term(k.clone(), c.clone() * v.clone());
        }
    }
    out
}

/// `Δ̃(x) = Δ(x) - | ⊗ x - x ⊗ |`; defined on the augmentation ideal.
pub fn reduced_coproduct(x: &TreeVector) -> Result<TensorVector> {
    let mut out = TensorVector::zero();
    for (t, c) in x.iter() {
        if t.is_leaf() {
            return Err(Error::LeafNotAllowed);
        }
        for cut in enumerate_admissible_cuts(t) {
            if matches!(cut, AdmissibleCut::Empty | AdmissibleCut::Total) {
                continue;
            }
            let (g, p) = cut_parts(t, &cut).expect("enumerated cuts are admissible");
            for (u, v) in g.iter() {
                out.add_term((u.clone(), p.clone()), c.clone() * v.clone());
            }
        }
    }
    Ok(out)
}

/// Which of the two half-coproducts a term belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfCoproduct {
    /// `Δ←`: the right-most leaf has been cut.
    Left,
    /// `Δ→`: the right-most leaf has not been cut.
    Right,
}

fn half_coproduct_tree(t: &PlanarTree, side: HalfCoproduct, reduced: bool) -> TensorVector {
    let mut out = TensorVector::zero();
    for cut in enumerate_admissible_cuts(t) {
        if reduced && matches!(cut, AdmissibleCut::Empty | AdmissibleCut::Total) {
            continue;
        }
        let falls = cuts_rightmost_leaf(t, &cut);
        let keep = match side {
            HalfCoproduct::Left => falls,
            HalfCoproduct::Right => !falls,
        };
        if !keep {
            continue;
        }
        let (g, p) = cut_parts(t, &cut).expect("enumerated cuts are admissible");
        for (u, c) in g.iter() {
            out.add_term((u.clone(), p.clone()), c.clone());
        }
    }
    out
}

/// Full `Δ←`: the cut-sum terms whose fallen part contains the right-most
/// leaf.  On the unit, `Δ←(|) = 0`.
pub fn coproduct_left(x: &TreeVector) -> TensorVector {
    let mut out = TensorVector::zero();
    for (t, c) in x.iter() {
        if t.is_leaf() {
            continue;
        }
        for (k, v) in half_coproduct_tree(t, HalfCoproduct::Left, false).iter() {
            out.add_term(k.clone(), c.clone() * v.clone());
        }
    }
    out
}

/// Full `Δ→`; on the unit, `Δ→(|) = | ⊗ |` so that `Δ← + Δ→ = Δ`.
pub fn coproduct_right(x: &TreeVector) -> TensorVector {
    let mut out = TensorVector::zero();
    for (t, c) in x.iter() {
        if t.is_leaf() {
            out.add_term((PlanarTree::Leaf, PlanarTree::Leaf), c.clone());
            continue;
        }
        for (k, v) in half_coproduct_tree(t, HalfCoproduct::Right, false).iter() {
            out.add_term(k.clone(), c.clone() * v.clone());
        }
    }
    out
}

/// `Δ̃←(x) = Δ←(x) - x ⊗ |`; rejects the unit.
pub fn reduced_coproduct_left(x: &TreeVector) -> Result<TensorVector> {
    reduced_half(x, HalfCoproduct::Left)
}

/// `Δ̃→(x) = Δ→(x) - | ⊗ x`; rejects the unit.
pub fn reduced_coproduct_right(x: &TreeVector) -> Result<TensorVector> {
    reduced_half(x, HalfCoproduct::Right)
}

fn reduced_half(x: &TreeVector, side: HalfCoproduct) -> Result<TensorVector> {
    let mut out = TensorVector::zero();
    for (t, c) in x.iter() {
        if t.is_leaf() {
            return Err(Error::LeafNotAllowed);
        }
        for (k, v) in half_coproduct_tree(t, side, true).iter() {
            out.add_term(k.clone(), c.clone() * v.clone());
        }
    }
    Ok(out)
}

/// Counit: the coefficient of the unit tree.
pub fn counit(x: &TreeVector) -> Coeff {
    x.coeff(&PlanarTree::Leaf)
}

// ---------------------------------------------------------------------------
// verification

type CoprodFn<'a> = &'a dyn Fn(&PlanarTree) -> TensorVector;

/// Coassociativity, counit, and the morphism law `Δ(x ⋉ y) = Δ(x) ⋉ Δ(y)`
/// for the three partial products, exhaustively up to the degree bound.
pub fn check_bialgebra(max_degree: usize) -> Report {
    check_bialgebra_with(&coproduct_tree, max_degree)
}

pub(crate) fn check_bialgebra_with(delta: CoprodFn, max_degree: usize) -> Report {
    let mut report = Report::new();
    let by_degree: Vec<Vec<PlanarTree>> = (0..=max_degree).map(enumerate_trees).collect();

    // coassociativity and counit on basis trees
    for trees in &by_degree {
        for t in trees {
            let d = delta(t);
            let mut lhs = TripleTensorVector::zero();
            let mut rhs = TripleTensorVector::zero();
            for ((u, v), c) in d.iter() {
                for ((a, b), cu) in delta(u).iter() {
                    lhs.add_term((a.clone(), b.clone(), v.clone()), c.clone() * cu.clone());
                }
                for ((a, b), cv) in delta(v).iter() {
                    rhs.add_term((u.clone(), a.clone(), b.clone()), c.clone() * cv.clone());
                }
            }
            report.check_eq("coassoc", || format!("t={t}"), &lhs, &rhs);

            let mut left_counit = TreeVector::zero();
            let mut right_counit = TreeVector::zero();
            for ((u, v), c) in d.iter() {
                if u.is_leaf() {
                    left_counit.add_term(v.clone(), c.clone());
                }
                if v.is_leaf() {
                    right_counit.add_term(u.clone(), c.clone());
                }
            }
            let id = TreeVector::basis(t.clone());
            report.check_eq("counit-left", || format!("t={t}"), &left_counit, &id);
            report.check_eq("counit-right", || format!("t={t}"), &right_counit, &id);
        }
    }

    // morphism law for ≺, ·, ≻ on pairs of positive degree
    for da in 1..max_degree {
        for db in 1..=max_degree - da {
            for a in &by_degree[da] {
                let va = TreeVector::basis(a.clone());
                let da_tensor = delta(a);
                for b in &by_degree[db] {
                    let vb = TreeVector::basis(b.clone());
                    let db_tensor = delta(b);
                    for op in [TriOp::Left, TriOp::Mid, TriOp::Right] {
                        let product = match op {
                            TriOp::Left => left(&va, &vb),
                            TriOp::Mid => mid(&va, &vb),
                            TriOp::Right => right(&va, &vb),
                            TriOp::Star => unreachable!(),
                        }
                        .expect("products of non-units are defined");
                        let mut lhs = TensorVector::zero();
                        for (t, c) in product.iter() {
                            for (k, v) in delta(t).iter() {
                                lhs.add_term(k.clone(), c.clone() * v.clone());
                            }
                        }
                        let rhs = tensor_op(op, &da_tensor, &db_tensor)
                            .expect("no unit-unit case arises in Δ(x) ⋉ Δ(y)");
                        report.check_eq(
                            &format!("morphism-{}", op.symbol()),
                            || format!("x={a};y={b}"),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }

    report
}

/// Sweedler data of a tree under the three reduced coproducts.
struct Sweedler {
    full: TensorVector,
    left: TensorVector,
    right: TensorVector,
}

fn sweedler(t: &PlanarTree) -> Sweedler {
    let v = TreeVector::basis(t.clone());
    Sweedler {
        full: reduced_coproduct(&v).expect("non-unit"),
        left: reduced_coproduct_left(&v).expect("non-unit"),
        right: reduced_coproduct_right(&v).expect("non-unit"),
    }
}

/// The six (3,2)-dendriform compatibilities together with the three
/// codendriform coassociativity identities, exhaustively up to the bound.
///
/// Sweedler sums are realized with the reduced coproducts, so every product
/// that appears acts on the augmentation ideal and is defined.
pub fn check_32_relations(max_total_degree: usize) -> Report {
    let mut report = Report::new();
    let by_degree: Vec<Vec<PlanarTree>> = (0..=max_total_degree).map(enumerate_trees).collect();

    // pair relations
    for da in 1..max_total_degree {
        for db in 1..=max_total_degree - da {
            for a in &by_degree[da] {
                let sa = sweedler(a);
                let va = TreeVector::basis(a.clone());
                for b in &by_degree[db] {
                    let sb = sweedler(b);
                    let vb = TreeVector::basis(b.clone());
                    check_32_pair(&mut report, a, &va, &sa, b, &vb, &sb);
                }
            }
        }
    }

    // codendriform coassociativity on single trees
    for trees in by_degree.iter().skip(1) {
        for t in trees {
            let s = sweedler(t);
            // (Δ̃← ⊗ Id) ∘ Δ̃← = (Id ⊗ Δ̃) ∘ Δ̃←
            let lhs = apply_left(&s.left, reduced_left_of);
            let rhs = apply_right(&s.left, reduced_full_of);
            report.check_eq("codendri1", || format!("t={t}"), &lhs, &rhs);
            // (Δ̃→ ⊗ Id) ∘ Δ̃← = (Id ⊗ Δ̃←) ∘ Δ̃→
            let lhs = apply_left(&s.left, reduced_right_of);
            let rhs = apply_right(&s.right, reduced_left_of);
            report.check_eq("codendri2", || format!("t={t}"), &lhs, &rhs);
            // (Δ̃ ⊗ Id) ∘ Δ̃→ = (Id ⊗ Δ̃→) ∘ Δ̃→
            let lhs = apply_left(&s.right, reduced_full_of);
            let rhs = apply_right(&s.right, reduced_right_of);
            report.check_eq("codendri3", || format!("t={t}"), &lhs, &rhs);
        }
    }

    report
}

fn reduced_left_of(t: &PlanarTree) -> TensorVector {
    reduced_coproduct_left(&TreeVector::basis(t.clone())).expect("non-unit")
}

fn reduced_right_of(t: &PlanarTree) -> TensorVector {
    reduced_coproduct_right(&TreeVector::basis(t.clone())).expect("non-unit")
}

fn reduced_full_of(t: &PlanarTree) -> TensorVector {
    reduced_coproduct(&TreeVector::basis(t.clone())).expect("non-unit")
}

fn apply_left(x: &TensorVector, f: impl Fn(&PlanarTree) -> TensorVector) -> TripleTensorVector {
    let mut out = TripleTensorVector::zero();
    for ((u, v), c) in x.iter() {
        for ((a, b), cu) in f(u).iter() {
            out.add_term((a.clone(), b.clone(), v.clone()), c.clone() * cu.clone());
        }
    }
    out
}

fn apply_right(x: &TensorVector, f: impl Fn(&PlanarTree) -> TensorVector) -> TripleTensorVector {
    let mut out = TripleTensorVector::zero();
    for ((u, v), c) in x.iter() {
        for ((a, b), cv) in f(v).iter() {
            out.add_term((u.clone(), a.clone(), b.clone()), c.clone() * cv.clone());
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn check_32_pair(
    report: &mut Report,
    a: &PlanarTree,
    va: &TreeVector,
    sa: &Sweedler,
    b: &PlanarTree,
    vb: &TreeVector,
    sb: &Sweedler,
) {
    let inputs = || format!("a={a};b={b}");
    let p = |x: &TreeVector, op: TriOp, y: &TreeVector| -> TreeVector {
        match op {
            TriOp::Left => left(x, y).expect("non-unit"),
            TriOp::Mid => mid(x, y).expect("non-unit"),
            TriOp::Right => right(x, y).expect("non-unit"),
            TriOp::Star => star(x, y),
        }
    };
    // helper: Σ (a' * b'_h) ⊗ (a'' op b''_h) over two Sweedler sums
    let cross = |sa: &TensorVector, sb: &TensorVector, op: TriOp| -> TensorVector {
        let mut out = TensorVector::zero();
        for ((a1, a2), ca) in sa.iter() {
            for ((b1, b2), cb) in sb.iter() {
                let c = ca.clone() * cb.clone();
                let firsts = star(
                    &TreeVector::basis(a1.clone()),
                    &TreeVector::basis(b1.clone()),
                );
                let seconds = p(
                    &TreeVector::basis(a2.clone()),
                    op,
                    &TreeVector::basis(b2.clone()),
                );
                add_tensor_scaled(&mut out, &firsts, &seconds, &c);
            }
        }
        out
    };
    // helper: Σ x'_h ⊗ (y op x''_h) with y fixed on the left slot of op
    let fix_left = |s: &TensorVector, y: &TreeVector, op: TriOp| -> TensorVector {
        let mut out = TensorVector::zero();
        for ((x1, x2), c) in s.iter() {
            let seconds = p(y, op, &TreeVector::basis(x2.clone()));
            add_tensor_scaled(&mut out, &TreeVector::basis(x1.clone()), &seconds, c);
        }
        out
    };
    // helper: Σ x'_h ⊗ (x''_h op y)
    let fix_right = |s: &TensorVector, y: &TreeVector, op: TriOp| -> TensorVector {
        let mut out = TensorVector::zero();
        for ((x1, x2), c) in s.iter() {
            let seconds = p(&TreeVector::basis(x2.clone()), op, y);
            add_tensor_scaled(&mut out, &TreeVector::basis(x1.clone()), &seconds, c);
        }
        out
    };

    // Δ̃←(a · b) = a'b'← ⊗ a''·b''← + b'← ⊗ a·b''←
    let lhs = reduced_coproduct_left(&p(va, TriOp::Mid, vb)).expect("non-unit product");
    let rhs = cross(&sa.full, &sb.left, TriOp::Mid).plus(&fix_left(&sb.left, va, TriOp::Mid));
    report.check_eq("three-two-1", inputs, &lhs, &rhs);

    // Δ̃→(a · b) = a'b'→ ⊗ a''·b''→ + a' ⊗ a''·b + b'→ ⊗ a·b''→
    let lhs = reduced_coproduct_right(&p(va, TriOp::Mid, vb)).expect("non-unit product");
    let rhs = cross(&sa.full, &sb.right, TriOp::Mid)
        .plus(&fix_right(&sa.full, vb, TriOp::Mid))
        .plus(&fix_left(&sb.right, va, TriOp::Mid));
    report.check_eq("three-two-2", inputs, &lhs, &rhs);

    // Δ̃←(a ≺ b) = a'b'← ⊗ a''≺b''← + a'b ⊗ a'' + b'← ⊗ a≺b''← + b ⊗ a
    let lhs = reduced_coproduct_left(&p(va, TriOp::Left, vb)).expect("non-unit product");
    let mut rhs = cross(&sa.full, &sb.left, TriOp::Left).plus(&fix_left(&sb.left, va, TriOp::Left));
    for ((a1, a2), c) in sa.full.iter() {
        let firsts = star(&TreeVector::basis(a1.clone()), vb);
        add_tensor_scaled(&mut rhs, &firsts, &TreeVector::basis(a2.clone()), c);
    }
    add_tensor_scaled(&mut rhs, vb, va, &Coeff::one());
    report.check_eq("three-two-3", inputs, &lhs, &rhs);

    // Δ̃→(a ≺ b) = a'b'→ ⊗ a''≺b''→ + a' ⊗ a''≺b + b'→ ⊗ a≺b''→
    let lhs = reduced_coproduct_right(&p(va, TriOp::Left, vb)).expect("non-unit product");
    let rhs = cross(&sa.full, &sb.right, TriOp::Left)
        .plus(&fix_right(&sa.full, vb, TriOp::Left))
        .plus(&fix_left(&sb.right, va, TriOp::Left));
    report.check_eq("three-two-4", inputs, &lhs, &rhs);

    // Δ̃→(a ≻ b) = a'b'→ ⊗ a''≻b''→ + a' ⊗ a''≻b + b'→ ⊗ a≻b''→ + ab'→ ⊗ b''→ + a ⊗ b
    let lhs = reduced_coproduct_right(&p(va, TriOp::Right, vb)).expect("non-unit product");
    let mut rhs = cross(&sa.full, &sb.right, TriOp::Right)
        .plus(&fix_right(&sa.full, vb, TriOp::Right))
        .plus(&fix_left(&sb.right, va, TriOp::Right));
    for ((b1, b2), c) in sb.right.iter() {
        let firsts = star(va, &TreeVector::basis(b1.clone()));
        add_tensor_scaled(&mut rhs, &firsts, &TreeVector::basis(b2.clone()), c);
    }
    add_tensor_scaled(&mut rhs, va, vb, &Coeff::one());
    report.check_eq("three-two-5", inputs, &lhs, &rhs);

    // Δ̃←(a ≻ b) = a'b'← ⊗ a''≻b''← + b'← ⊗ a≻b''← + ab'← ⊗ b''←
    let lhs = reduced_coproduct_left(&p(va, TriOp::Right, vb)).expect("non-unit product");
    let mut rhs =
        cross(&sa.full, &sb.left, TriOp::Right).plus(&fix_left(&sb.left, va, TriOp::Right));
    for ((b1, b2), c) in sb.left.iter() {
        let firsts = star(va, &TreeVector::basis(b1.clone()));
        add_tensor_scaled(&mut rhs, &firsts, &TreeVector::basis(b2.clone()), c);
    }
    report.check_eq("three-two-6", inputs, &lhs, &rhs);
}
