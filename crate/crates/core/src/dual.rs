//! The graded dual bialgebra, realized on the same tree basis through the
//! Kronecker pairing.
//!
//! The dual coproduct is the lightning splitting: severing a tree along the
//! path from the root to its `m`-th leaf leaves a part `^m t` (everything
//! strictly left of the path, reassembled as a right comb) and a part `t^m`
//! (everything strictly right, reassembled as a left comb), and
//!
//! ```text
//! Δ(t) = Σ_{m=1}^{nf(t)}  ^m t ⊗ t^m .
//! ```
//!
//! The three pieces `Δ≺`, `Δ•`, `Δ≻` sort the summands by the first step of
//! the path: into the root's last child, a middle child, or the first child.
//! Each piece is adjoint to the corresponding product through the pairing.
//! The dual product is the transpose of `Δ` on the primal side, i.e. the
//! coefficient of `w` in `s · t` is `<s ⊗ t, Δ(w)>`.

use std::collections::HashMap;

use num::{One, Zero};

use crate::coproduct::coproduct_tree;
use crate::error::{Error, Result};
use crate::products::{product, TriOp};
use crate::report::Report;
use crate::tree::{assemble_left_comb, assemble_right_comb, enumerate_trees, Forest, PlanarTree};
use crate::vect::{Coeff, TensorVector, TreeVector};

/// Severs `t` along the root-to-leaf-`m` path (leaves are numbered from 1,
/// left to right).  Returns `(^m t, t^m)`.
pub fn lightning_split(t: &PlanarTree, m: usize) -> Result<(PlanarTree, PlanarTree)> {
    let leaves = t.leaf_count();
    if m == 0 || m > leaves {
        return Err(Error::LeafIndexOutOfRange { index: m, leaves });
    }
    let mut lefts: Vec<Forest> = Vec::new();
    let mut rights: Vec<Forest> = Vec::new();
    let mut cur = t;
    let mut target = m;
    while let PlanarTree::Node(cs) = cur {
        // find the child containing the target leaf
        let mut idx = 0;
        let mut offset = target;
        for (i, c) in cs.iter().enumerate() {
            let n = c.leaf_count();
            if offset <= n {
                idx = i;
                break;
            }
            offset -= n;
        }
        if idx > 0 {
            lefts.push(Forest::new(cs[..idx].to_vec()).expect("non-empty"));
        }
        if idx + 1 < cs.len() {
            rights.push(Forest::new(cs[idx + 1..].to_vec()).expect("non-empty"));
        }
        target = offset;
        cur = &cs[idx];
    }
    Ok((assemble_right_comb(&lefts), assemble_left_comb(&rights)))
}

/// The lightning coproduct, extended linearly.
pub fn dual_coproduct(x: &TreeVector) -> TensorVector {
    let mut out = TensorVector::zero();
    for (t, c) in x.iter() {
        for m in 1..=t.leaf_count() {
            let (u, v) = lightning_split(t, m).expect("m in range");
            out.add_term((u, v), c.clone());
        }
    }
    out
}

/// The three pieces of the dual coproduct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualPiece {
    /// Lightnings through the root's last child; adjoint to `≺`.
    Prec,
    /// Lightnings through a middle child; adjoint to `·`.
    Mid,
    /// Lightnings through the root's first child; adjoint to `≻`.
    Succ,
}

impl DualPiece {
    pub fn op(self) -> TriOp {
        match self {
            DualPiece::Prec => TriOp::Left,
            DualPiece::Mid => TriOp::Mid,
            DualPiece::Succ => TriOp::Right,
        }
    }
}

/// Which piece the lightning to leaf `m` belongs to, by the first step of
/// the root-to-leaf path.
fn classify(t: &PlanarTree, m: usize) -> DualPiece {
    let cs = t.children();
    let mut offset = m;
    for (i, c) in cs.iter().enumerate() {
        let n = c.leaf_count();
        if offset <= n {
            return if i == 0 {
                DualPiece::Succ
            } else if i == cs.len() - 1 {
                DualPiece::Prec
            } else {
                DualPiece::Mid
            };
        }
        offset -= n;
    }
    unreachable!("leaf index validated by caller")
}

type Classifier = fn(&PlanarTree, usize) -> DualPiece;

fn piece_tree(t: &PlanarTree, piece: DualPiece, classifier: Classifier) -> TensorVector {
    let mut out = TensorVector::zero();
    for m in 1..=t.leaf_count() {
        if classifier(t, m) != piece {
            continue;
        }
        let (u, v) = lightning_split(t, m).expect("m in range");
        out.add_term((u, v), Coeff::one());
    }
    out
}

/// One piece of the dual coproduct, with the augmented conventions: `Δ≺`
/// keeps its `t ⊗ |` term and `Δ≻` its `| ⊗ t` term.  Rejects the unit.
pub fn dual_coproduct_piece(piece: DualPiece, x: &TreeVector) -> Result<TensorVector> {
    dual_piece_with(piece, x, classify, false)
}

/// The reduced piece: `Δ̃≺ = Δ≺ - t ⊗ |`, `Δ̃≻ = Δ≻ - | ⊗ t`, `Δ̃• = Δ•`.
pub fn dual_coproduct_piece_reduced(piece: DualPiece, x: &TreeVector) -> Result<TensorVector> {
    dual_piece_with(piece, x, classify, true)
}

fn dual_piece_with(
    piece: DualPiece,
    x: &TreeVector,
    classifier: Classifier,
    reduced: bool,
) -> Result<TensorVector> {
    let mut out = TensorVector::zero();
    for (t, c) in x.iter() {
        if t.is_leaf() {
            return Err(Error::LeafNotAllowed);
        }
        let mut part = piece_tree(t, piece, classifier);
        if reduced {
            match piece {
                DualPiece::Prec => part.add_term((t.clone(), PlanarTree::Leaf), -Coeff::one()),
                DualPiece::Succ => part.add_term((PlanarTree::Leaf, t.clone()), -Coeff::one()),
                DualPiece::Mid => {}
            }
        }
        for (k, v) in part.iter() {
            out.add_term(k.clone(), c.clone() * v.clone());
        }
    }
    Ok(out)
}

/// The dual product, computed as the transpose of the primal coproduct: the
/// coefficient of `w` in `x · y` is `<x ⊗ y, Δ(w)>`, extended bilinearly.
/// It is associative and graded with unit `|`.
pub fn dual_product(x: &TreeVector, y: &TreeVector) -> TreeVector {
    let mut out = TreeVector::zero();
    for (s, cs) in x.iter() {
        for (t, ct) in y.iter() {
            let c = cs.clone() * ct.clone();
            for w in enumerate_trees(s.degree() + t.degree()) {
                let coeff = coproduct_tree(&w).coeff(&(s.clone(), t.clone()));
                if !coeff.is_zero() {
                    out.add_term(w, c.clone() * coeff);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// verification

/// Dual products for all tree pairs of a fixed total degree, tabulated by
/// transposing each coproduct once.
struct TransposeTable {
    by_pair: HashMap<(PlanarTree, PlanarTree), TreeVector>,
}

impl TransposeTable {
    fn build(max_degree: usize) -> Self {
        let mut by_pair: HashMap<(PlanarTree, PlanarTree), TreeVector> = HashMap::new();
        for n in 0..=max_degree {
            for w in enumerate_trees(n) {
                for ((u, v), c) in coproduct_tree(&w).iter() {
                    by_pair
                        .entry((u.clone(), v.clone()))
                        .or_default()
                        .add_term(w.clone(), c.clone());
                }
            }
        }
        TransposeTable { by_pair }
    }

    fn product(&self, s: &PlanarTree, t: &PlanarTree) -> TreeVector {
        self.by_pair
            .get(&(s.clone(), t.clone()))
            .cloned()
            .unwrap_or_default()
    }

    fn product_vec(&self, x: &TreeVector, y: &TreeVector) -> TreeVector {
        let mut out = TreeVector::zero();
        for (s, cs) in x.iter() {
            for (t, ct) in y.iter() {
                let c = cs.clone() * ct.clone();
                for (w, cw) in self.product(s, t).iter() {
                    out.add_term(w.clone(), c.clone() * cw.clone());
                }
            }
        }
        out
    }
}

/// (i) the lightning coproduct is the transpose of `*`, and (ii) each piece
/// is adjoint to its product, for all trees and argument pairs up to the
/// degree bound.
pub fn check_dual_adjoint(max_degree: usize) -> Report {
    check_dual_adjoint_with(classify, max_degree)
}

pub(crate) fn check_dual_adjoint_with(classifier: Classifier, max_degree: usize) -> Report {
    let mut report = Report::new();
    let by_degree: Vec<Vec<PlanarTree>> = (0..=max_degree).map(enumerate_trees).collect();
    for n in 1..=max_degree {
        // products of all argument pairs of total degree n, computed once
        struct PairRow {
            u: PlanarTree,
            v: PlanarTree,
            star: TreeVector,
            pieces: [Option<TreeVector>; 3],
        }
        let mut pairs: Vec<PairRow> = Vec::new();
        for i in 0..=n {
            for u in &by_degree[i] {
                let vu = TreeVector::basis(u.clone());
                for v in &by_degree[n - i] {
                    let vv = TreeVector::basis(v.clone());
                    let star = product(TriOp::Star, &vu, &vv).expect("star is total");
                    let pieces = if u.is_leaf() && v.is_leaf() {
                        [None, None, None]
                    } else {
                        [
                            Some(product(TriOp::Left, &vu, &vv).expect("non-unit pair")),
                            Some(product(TriOp::Mid, &vu, &vv).expect("non-unit pair")),
                            Some(product(TriOp::Right, &vu, &vv).expect("non-unit pair")),
                        ]
                    };
                    pairs.push(PairRow {
                        u: u.clone(),
                        v: v.clone(),
                        star,
                        pieces,
                    });
                }
            }
        }
        for t in &by_degree[n] {
            let full = dual_coproduct(&TreeVector::basis(t.clone()));
            let prec = dual_piece_with(
                DualPiece::Prec,
                &TreeVector::basis(t.clone()),
                classifier,
                false,
            )
            .expect("non-unit");
            let midp = dual_piece_with(
                DualPiece::Mid,
                &TreeVector::basis(t.clone()),
                classifier,
                false,
            )
            .expect("non-unit");
            let succ = dual_piece_with(
                DualPiece::Succ,
                &TreeVector::basis(t.clone()),
                classifier,
                false,
            )
            .expect("non-unit");
            // the pieces partition the lightning sum
            report.check_eq(
                "dual-piece-partition",
                || format!("t={t}"),
                &prec.clone().plus(&midp).plus(&succ),
                &full,
            );
            for row in &pairs {
                let key = (row.u.clone(), row.v.clone());
                report.check_eq(
                    "dual-transpose-*",
                    || format!("t={t};u={};v={}", row.u, row.v),
                    &full.coeff(&key),
                    &row.star.coeff(t),
                );
                for (tensor, piece_product, op) in [
                    (&prec, &row.pieces[0], TriOp::Left),
                    (&midp, &row.pieces[1], TriOp::Mid),
                    (&succ, &row.pieces[2], TriOp::Right),
                ] {
                    let Some(p) = piece_product else { continue };
                    report.check_eq(
                        &format!("dual-adjoint-{}", op.symbol()),
                        || format!("t={t};u={};v={}", row.u, row.v),
                        &tensor.coeff(&key),
                        &p.coeff(t),
                    );
                }
            }
        }
    }
    report
}

/// The seven cotridendriform coassociativity relations and the three
/// product-coproduct compatibilities of the dual bialgebra, exhaustively up
/// to the degree bound.
pub fn check_cotri_compa(max_degree: usize) -> Report {
    let mut report = Report::new();
    let by_degree: Vec<Vec<PlanarTree>> = (0..=max_degree).map(enumerate_trees).collect();

    // augmented piece maps; `None` encodes the full coproduct
    let apply = |piece: Option<DualPiece>, t: &PlanarTree| -> TensorVector {
        match piece {
            None => dual_coproduct(&TreeVector::basis(t.clone())),
            Some(p) => dual_coproduct_piece(p, &TreeVector::basis(t.clone()))
                .expect("pieces are applied to non-units only"),
        }
    };
    // (outer ⊗ Id) ∘ inner and (Id ⊗ outer) ∘ inner on a basis tree
    let compose_left = |outer: Option<DualPiece>, inner: Option<DualPiece>, t: &PlanarTree| {
        let mut out = crate::vect::TripleTensorVector::zero();
        for ((u, v), c) in apply(inner, t).iter() {
            if u.is_leaf() && outer.is_some() {
                // pieces are undefined on the unit; such terms never occur
                // for the relations below
                unreachable!("piece applied to unit");
            }
            for ((a, b), cu) in apply(outer, u).iter() {
                out.add_term((a.clone(), b.clone(), v.clone()), c.clone() * cu.clone());
            }
        }
        out
    };
    let compose_right = |outer: Option<DualPiece>, inner: Option<DualPiece>, t: &PlanarTree| {
        let mut out = crate::vect::TripleTensorVector::zero();
        for ((u, v), c) in apply(inner, t).iter() {
            if v.is_leaf() && outer.is_some() {
                unreachable!("piece applied to unit");
            }
            for ((a, b), cv) in apply(outer, v).iter() {
                out.add_term((u.clone(), a.clone(), b.clone()), c.clone() * cv.clone());
            }
        }
        out
    };

    use DualPiece::{Mid, Prec, Succ};
    /// One relation `(Id ⊗ second) ∘ inner_rhs = (first ⊗ Id) ∘ inner_lhs`;
    /// `None` stands for the full coproduct.
    type CotriRelation = (
        &'static str,
        Option<DualPiece>,
        Option<DualPiece>,
        Option<DualPiece>,
        Option<DualPiece>,
    );
    let relations: [CotriRelation; 7] = [
        ("cotri1", None, Some(Prec), Some(Prec), Some(Prec)),
        ("cotri2", Some(Prec), Some(Succ), Some(Succ), Some(Prec)),
        ("cotri3", Some(Succ), Some(Succ), None, Some(Succ)),
        ("cotri4", Some(Mid), Some(Succ), Some(Succ), Some(Mid)),
        ("cotri5", Some(Succ), Some(Mid), Some(Prec), Some(Mid)),
        ("cotri6", Some(Prec), Some(Mid), Some(Mid), Some(Prec)),
        ("cotri7", Some(Mid), Some(Mid), Some(Mid), Some(Mid)),
    ];
    for trees in by_degree.iter().skip(1) {
        for t in trees {
            for &(law, x, z, y, w) in &relations {
                let lhs = compose_right(x, z, t);
                let rhs = compose_left(y, w, t);
                report.check_eq(law, || format!("t={t}"), &lhs, &rhs);
            }
        }
    }

    // compatibilities between the dual product and the three pieces
    let table = TransposeTable::build(max_degree);
    let reduced_full = |t: &PlanarTree| -> TensorVector {
        let mut d = dual_coproduct(&TreeVector::basis(t.clone()));
        d.add_term((t.clone(), PlanarTree::Leaf), -Coeff::one());
        d.add_term((PlanarTree::Leaf, t.clone()), -Coeff::one());
        d
    };
    let reduced_piece = |p: DualPiece, t: &PlanarTree| -> TensorVector {
        dual_coproduct_piece_reduced(p, &TreeVector::basis(t.clone())).expect("non-unit")
    };
    for df in 1..max_degree {
        for dg in 1..=max_degree - df {
            for f in &by_degree[df] {
                let vf = TreeVector::basis(f.clone());
                let rf = reduced_full(f);
                for g in &by_degree[dg] {
                    let vg = TreeVector::basis(g.clone());
                    let fg = table.product(f, g);
                    let inputs = || format!("f={f};g={g}");

                    // Δ̃≺(fg) = g⊗f + g'≺⊗fg''≺ + fg'≺⊗g''≺ + f'g⊗f'' + f'g'≺⊗f''g''≺
                    let lhs = reduced_piece_vec(DualPiece::Prec, &fg);
                    let rg = reduced_piece(Prec, g);
                    let mut rhs = TensorVector::zero();
                    crate::tensor::add_tensor_scaled(&mut rhs, &vg, &vf, &Coeff::one());
                    for ((g1, g2), c) in rg.iter() {
                        let right = table.product_vec(&vf, &TreeVector::basis(g2.clone()));
                        crate::tensor::add_tensor_scaled(
                            &mut rhs,
                            &TreeVector::basis(g1.clone()),
                            &right,
                            c,
                        );
                        let left = table.product_vec(&vf, &TreeVector::basis(g1.clone()));
                        crate::tensor::add_tensor_scaled(
                            &mut rhs,
                            &left,
                            &TreeVector::basis(g2.clone()),
                            c,
                        );
                    }
                    for ((f1, f2), c) in rf.iter() {
                        let left = table.product_vec(&TreeVector::basis(f1.clone()), &vg);
                        crate::tensor::add_tensor_scaled(
                            &mut rhs,
                            &left,
                            &TreeVector::basis(f2.clone()),
                            c,
                        );
                        for ((g1, g2), cg) in rg.iter() {
                            let l = table.product(f1, g1);
                            let r = table.product(f2, g2);
                            crate::tensor::add_tensor_scaled(
                                &mut rhs,
                                &l,
                                &r,
                                &(c.clone() * cg.clone()),
                            );
                        }
                    }
                    report.check_eq("compa1", inputs, &lhs, &rhs);

                    // Δ̃•(fg) = f'g'•⊗f''g''• + fg'•⊗g''• + g'•⊗fg''•
                    let lhs = reduced_piece_vec(DualPiece::Mid, &fg);
                    let rg = reduced_piece(Mid, g);
                    let mut rhs = TensorVector::zero();
                    for ((g1, g2), c) in rg.iter() {
                        let left = table.product_vec(&vf, &TreeVector::basis(g1.clone()));
                        crate::tensor::add_tensor_scaled(
                            &mut rhs,
                            &left,
                            &TreeVector::basis(g2.clone()),
                            c,
                        );
                        let right = table.product_vec(&vf, &TreeVector::basis(g2.clone()));
                        crate::tensor::add_tensor_scaled(
                            &mut rhs,
                            &TreeVector::basis(g1.clone()),
                            &right,
                            c,
                        );
                        for ((f1, f2), cf) in rf.iter() {
                            let l = table.product(f1, g1);
                            let r = table.product(f2, g2);
                            crate::tensor::add_tensor_scaled(
                                &mut rhs,
                                &l,
                                &r,
                                &(c.clone() * cf.clone()),
                            );
                        }
                    }
                    report.check_eq("compa2", inputs, &lhs, &rhs);

                    // Δ̃≻(fg) = f⊗g + f'g'≻⊗f''g''≻ + fg'≻⊗g''≻ + f'⊗f''g + g'≻⊗fg''≻
                    let lhs = reduced_piece_vec(DualPiece::Succ, &fg);
                    let rg = reduced_piece(Succ, g);
                    let mut rhs = TensorVector::zero();
                    crate::tensor::add_tensor_scaled(&mut rhs, &vf, &vg, &Coeff::one());
                    for ((g1, g2), c) in rg.iter() {
                        let left = table.product_vec(&vf, &TreeVector::basis(g1.clone()));
                        crate::tensor::add_tensor_scaled(
                            &mut rhs,
                            &left,
                            &TreeVector::basis(g2.clone()),
                            c,
                        );
                        let right = table.product_vec(&vf, &TreeVector::basis(g2.clone()));
                        crate::tensor::add_tensor_scaled(
                            &mut rhs,
                            &TreeVector::basis(g1.clone()),
                            &right,
                            c,
                        );
                        for ((f1, f2), cf) in rf.iter() {
                            let l = table.product(f1, g1);
                            let r = table.product(f2, g2);
                            crate::tensor::add_tensor_scaled(
                                &mut rhs,
                                &l,
                                &r,
                                &(c.clone() * cf.clone()),
                            );
                        }
                    }
                    for ((f1, f2), c) in rf.iter() {
                        let right = table.product_vec(&TreeVector::basis(f2.clone()), &vg);
                        crate::tensor::add_tensor_scaled(
                            &mut rhs,
                            &TreeVector::basis(f1.clone()),
                            &right,
                            c,
                        );
                    }
                    report.check_eq("compa3", inputs, &lhs, &rhs);
                }
            }
        }
    }

    report
}

fn reduced_piece_vec(piece: DualPiece, x: &TreeVector) -> TensorVector {
    dual_coproduct_piece_reduced(piece, x).expect("dual products of non-units avoid the unit")
}

/// Runs both halves of the dual verification.
pub fn check_dual_structure(max_degree: usize) -> Report {
    let mut report = check_dual_adjoint(max_degree);
    report.absorb(check_cotri_compa(max_degree));
    report
}
