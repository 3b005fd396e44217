//! The four products `*`, `≺`, `·`, `≻` on the tree algebra.
//!
//! The primary implementation is the quasi-shuffle description: for trees
//! `t`, `s` different from the leaf, `t * s` is the sum of `σ(t, s)` over all
//! `(k, l)`-quasi-shuffles, where `k` and `l` are the lengths of the right
//! comb decomposition of `t` and the left comb decomposition of `s`.  The
//! three partial products select the quasi-shuffles by the preimage of 1:
//! `{1}` for `≺`, `{1, k+1}` for `·`, `{k+1}` for `≻`.
//!
//! The inductive definitions on the grafting decomposition serve as an
//! independent oracle and are exposed as `*_inductive`.
//!
//! Unit conventions of the augmented algebra: `a ≺ | = a = | ≻ a`,
//! `| ≺ a = 0 = a ≻ |`, `a · | = 0 = | · a`, `| * | = |`; the pairs
//! `| ≺ |`, `| · |`, `| ≻ |` are undefined and rejected.

use std::fmt;

use num::One;

use crate::error::{Error, Result};
use crate::tree::{left_comb_decomposition, right_comb_decomposition, Forest, PlanarTree};
use crate::vect::{Coeff, TreeVector};

/// One of the four tridendriform operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriOp {
    Left,
    Mid,
    Right,
    Star,
}

impl TriOp {
    pub fn symbol(self) -> &'static str {
        match self {
            TriOp::Left => "≺",
            TriOp::Mid => "·",
            TriOp::Right => "≻",
            TriOp::Star => "*",
        }
    }
}

/// A `(k, l)`-quasi-shuffle: a surjection of `[1, k+l]` onto an initial
/// segment `[1, n]`, strictly increasing on each of the two blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuasiShuffle {
    values: Vec<usize>,
    k: usize,
    l: usize,
}

impl QuasiShuffle {
    pub fn new(k: usize, l: usize, values: Vec<usize>) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::EmptyShuffleBlock);
        }
        if values.len() != k + l {
            return Err(Error::InvalidShuffleWord(format!(
                "expected {} values, got {}",
                k + l,
                values.len()
            )));
        }
        let increasing = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&values[..k]) || !increasing(&values[k..]) {
            return Err(Error::InvalidShuffleWord(
                "blocks must be strictly increasing".into(),
            ));
        }
        let n = *values.iter().max().unwrap();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 {
                return Err(Error::InvalidShuffleWord("values start at 1".into()));
            }
            seen[v] = true;
        }
        if !seen[1..].iter().all(|&b| b) {
            return Err(Error::InvalidShuffleWord(
                "image must be an initial segment without gaps".into(),
            ));
        }
        Ok(QuasiShuffle { values, k, l })
    }

    pub fn block_sizes(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Size of the image `[1, n]`.
    pub fn image_max(&self) -> usize {
        *self.values.iter().max().unwrap()
    }

    /// Which product this shuffle contributes to, by `σ^{-1}(1)`.
    pub fn class(&self) -> TriOp {
        let first_block = self.values[0] == 1;
        let second_block = self.values[self.k] == 1;
        match (first_block, second_block) {
            (true, false) => TriOp::Left,
            (true, true) => TriOp::Mid,
            (false, true) => TriOp::Right,
            // surjectivity forces 1 into the image, and each block is
            // increasing, so 1 can only sit at a block start
            (false, false) => unreachable!("1 must be hit by a block start"),
        }
    }
}

impl fmt::Display for QuasiShuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// All `(k, l)`-quasi-shuffles, sorted lexicographically on their value
/// tuples.
pub fn enumerate_qsh(k: usize, l: usize) -> Result<Vec<QuasiShuffle>> {
    if k == 0 || l == 0 {
        return Err(Error::EmptyShuffleBlock);
    }
    // Walk the lattice: at each step the next value goes to the first block,
    // the second block, or both.
    let mut out = Vec::new();
    let mut first = Vec::with_capacity(k);
    let mut second = Vec::with_capacity(l);
    fn step(
        k: usize,
        l: usize,
        next: usize,
        first: &mut Vec<usize>,
        second: &mut Vec<usize>,
        out: &mut Vec<QuasiShuffle>,
    ) {
        if first.len() == k && second.len() == l {
            let mut values = first.clone();
            values.extend_from_slice(second);
            out.push(QuasiShuffle { values, k, l });
            return;
        }
        if first.len() < k {
            first.push(next);
            step(k, l, next + 1, first, second, out);
            first.pop();
        }
        if second.len() < l {
            second.push(next);
            step(k, l, next + 1, first, second, out);
            second.pop();
        }
        if first.len() < k && second.len() < l {
            first.push(next);
            second.push(next);
            step(k, l, next + 1, first, second, out);
            first.pop();
            second.pop();
        }
    }
    step(k, l, 1, &mut first, &mut second, &mut out);
    out.sort();
    Ok(out)
}

/// Applies a quasi-shuffle to a pair of trees: builds the ladder with
/// `max σ` nodes and grafts the right-comb forests of `t` as left children
/// and the left-comb forests of `s` as right children, at the nodes the
/// shuffle dictates.
pub fn apply_qsh(sigma: &QuasiShuffle, t: &PlanarTree, s: &PlanarTree) -> Result<PlanarTree> {
    if t.is_leaf() || s.is_leaf() {
        return Err(Error::LeafNotAllowed);
    }
    let right = right_comb_decomposition(t)?;
    let left = left_comb_decomposition(s)?;
    if sigma.k != right.len() || sigma.l != left.len() {
        return Err(Error::ShuffleShapeMismatch {
            sk: sigma.k,
            sl: sigma.l,
            k: right.len(),
            l: left.len(),
        });
    }
    Ok(apply_to_forests(sigma, &right, &left))
}

fn apply_to_forests(sigma: &QuasiShuffle, right: &[Forest], left: &[Forest]) -> PlanarTree {
    let n = sigma.image_max();
    // left_at[v] / right_at[v]: forest grafted at ladder node v (1-based)
    let mut left_at: Vec<Option<&Forest>> = vec![None; n + 1];
    let mut right_at: Vec<Option<&Forest>> = vec![None; n + 1];
    for (i, f) in right.iter().enumerate() {
        left_at[sigma.values[i]] = Some(f);
    }
    for (j, f) in left.iter().enumerate() {
        right_at[sigma.values[sigma.k + j]] = Some(f);
    }
    // assemble top-down; node n carries the top leaf of the ladder
    let mut cur = PlanarTree::Leaf;
    for v in (1..=n).rev() {
        let mut children = Vec::new();
        if let Some(f) = left_at[v] {
            children.extend(f.trees().iter().cloned());
        }
        children.push(cur);
        if let Some(f) = right_at[v] {
            children.extend(f.trees().iter().cloned());
        }
        cur = PlanarTree::node(children);
    }
    cur
}

/// Product of two basis trees under `op`, with the augmented unit rules.
fn product_trees(op: TriOp, t: &PlanarTree, s: &PlanarTree) -> Result<TreeVector> {
    match (t.is_leaf(), s.is_leaf()) {
        (true, true) => match op {
            TriOp::Star => Ok(TreeVector::basis(PlanarTree::Leaf)),
            _ => Err(Error::UndefinedUnitPair { op: op.symbol() }),
        },
        (true, false) => match op {
            TriOp::Star | TriOp::Right => Ok(TreeVector::basis(s.clone())),
            TriOp::Left | TriOp::Mid => Ok(TreeVector::zero()),
        },
        (false, true) => match op {
            TriOp::Star | TriOp::Left => Ok(TreeVector::basis(t.clone())),
            TriOp::Mid | TriOp::Right => Ok(TreeVector::zero()),
        },
        (false, false) => {
            let right = right_comb_decomposition(t)?;
            let left = left_comb_decomposition(s)?;
            let shuffles = enumerate_qsh(right.len(), left.len())?;
            let mut out = TreeVector::zero();
            for sigma in &shuffles {
                if op == TriOp::Star || sigma.class() == op {
                    out.add_term(apply_to_forests(sigma, &right, &left), Coeff::one());
                }
            }
            Ok(out)
        }
    }
}

/// Bilinear extension of a tree-level product to vectors.
fn bilinear(
    x: &TreeVector,
    y: &TreeVector,
    f: &dyn Fn(&PlanarTree, &PlanarTree) -> Result<TreeVector>,
) -> Result<TreeVector> {
    let mut out = TreeVector::zero();
    for (t, ct) in x.iter() {
        for (s, cs) in y.iter() {
            let p = f(t, s)?;
            let c = ct.clone() * cs.clone();
            for (w, cw) in p.iter() {
                out.add_term(w.clone(), c.clone() * cw.clone());
            }
        }
    }
    Ok(out)
}

/// `x * y`: total on all inputs, `| * | = |`.
pub fn star(x: &TreeVector, y: &TreeVector) -> TreeVector {
    bilinear(x, y, &|t, s| product_trees(TriOp::Star, t, s)).expect("star is defined on all inputs")
}

/// `x ≺ y`; rejects the unit pair.
pub fn left(x: &TreeVector, y: &TreeVector) -> Result<TreeVector> {
    bilinear(x, y, &|t, s| product_trees(TriOp::Left, t, s))
}

/// `x · y`; rejects the unit pair.
pub fn mid(x: &TreeVector, y: &TreeVector) -> Result<TreeVector> {
    bilinear(x, y, &|t, s| product_trees(TriOp::Mid, t, s))
}

/// `x ≻ y`; rejects the unit pair.
pub fn right(x: &TreeVector, y: &TreeVector) -> Result<TreeVector> {
    bilinear(x, y, &|t, s| product_trees(TriOp::Right, t, s))
}

pub fn product(op: TriOp, x: &TreeVector, y: &TreeVector) -> Result<TreeVector> {
    match op {
        TriOp::Left => left(x, y),
        TriOp::Mid => mid(x, y),
        TriOp::Right => right(x, y),
        TriOp::Star => Ok(star(x, y)),
    }
}

/// Grafts `prefix ++ [m] ++ suffix` for every basis tree `m` of `middle`,
/// extending linearly in the middle slot.
fn graft_linear(prefix: &[PlanarTree], middle: &TreeVector, suffix: &[PlanarTree]) -> TreeVector {
    let mut out = TreeVector::zero();
    for (m, c) in middle.iter() {
        let mut children = prefix.to_vec();
        children.push(m.clone());
        children.extend_from_slice(suffix);
        out.add_term(PlanarTree::node(children), c.clone());
    }
    out
}

fn inductive_trees(op: TriOp, t: &PlanarTree, s: &PlanarTree) -> Result<TreeVector> {
    match (t, s) {
        (PlanarTree::Leaf, PlanarTree::Leaf) => match op {
            TriOp::Star => Ok(TreeVector::basis(PlanarTree::Leaf)),
            _ => Err(Error::UndefinedUnitPair { op: op.symbol() }),
        },
        (PlanarTree::Leaf, _) => match op {
            TriOp::Star | TriOp::Right => Ok(TreeVector::basis(s.clone())),
            _ => Ok(TreeVector::zero()),
        },
        (_, PlanarTree::Leaf) => match op {
            TriOp::Star | TriOp::Left => Ok(TreeVector::basis(t.clone())),
            _ => Ok(TreeVector::zero()),
        },
        (PlanarTree::Node(xs), PlanarTree::Node(ys)) => match op {
            // x ≺ y = x0 ∨ ... ∨ (xk * y)
            TriOp::Left => {
                let (last, init) = xs.split_last().unwrap();
                let inner = inductive_trees(TriOp::Star, last, s)?;
                Ok(graft_linear(init, &inner, &[]))
            }
            // x ≻ y = (x * y0) ∨ y1 ∨ ... ∨ yl
            TriOp::Right => {
                let (first, rest) = ys.split_first().unwrap();
                let inner = inductive_trees(TriOp::Star, t, first)?;
                Ok(graft_linear(&[], &inner, rest))
            }
            // x · y = x0 ∨ ... ∨ (xk * y0) ∨ ... ∨ yl
            TriOp::Mid => {
                let (xlast, xinit) = xs.split_last().unwrap();
                let (yfirst, yrest) = ys.split_first().unwrap();
                let inner = inductive_trees(TriOp::Star, xlast, yfirst)?;
                Ok(graft_linear(xinit, &inner, yrest))
            }
            TriOp::Star => {
                let mut out = inductive_trees(TriOp::Left, t, s)?;
                out.add_assign(&inductive_trees(TriOp::Mid, t, s)?);
                out.add_assign(&inductive_trees(TriOp::Right, t, s)?);
                Ok(out)
            }
        },
    }
}

/// Inductive (grafting-recursion) form of `*`; oracle for [`star`].
pub fn star_inductive(x: &TreeVector, y: &TreeVector) -> Result<TreeVector> {
    bilinear(x, y, &|t, s| inductive_trees(TriOp::Star, t, s))
}

pub fn left_inductive(x: &TreeVector, y: &TreeVector) -> Result<TreeVector> {
    bilinear(x, y, &|t, s| inductive_trees(TriOp::Left, t, s))
}

pub fn mid_inductive(x: &TreeVector, y: &TreeVector) -> Result<TreeVector> {
    bilinear(x, y, &|t, s| inductive_trees(TriOp::Mid, t, s))
}

pub fn right_inductive(x: &TreeVector, y: &TreeVector) -> Result<TreeVector> {
    bilinear(x, y, &|t, s| inductive_trees(TriOp::Right, t, s))
}

/// A set of three partial products plus their sum; lets the axiom checker run
/// against deliberately broken fixtures in tests.
pub(crate) struct ProductSet {
    pub left: fn(&TreeVector, &TreeVector) -> Result<TreeVector>,
    pub mid: fn(&TreeVector, &TreeVector) -> Result<TreeVector>,
    pub right: fn(&TreeVector, &TreeVector) -> Result<TreeVector>,
    pub star: fn(&TreeVector, &TreeVector) -> Result<TreeVector>,
}

pub(crate) const REAL_PRODUCTS: ProductSet = ProductSet {
    left,
    mid,
    right,
    star: |x, y| Ok(star(x, y)),
};

impl ProductSet {
    fn apply(&self, op: TriOp, x: &TreeVector, y: &TreeVector) -> Result<TreeVector> {
        match op {
            TriOp::Left => (self.left)(x, y),
            TriOp::Mid => (self.mid)(x, y),
            TriOp::Right => (self.right)(x, y),
            TriOp::Star => (self.star)(x, y),
        }
    }
}

use crate::report::{Report, Violation};

/// The seven relations as quadruples `(⋉, ⋊, ⋉', ⋊')` meaning
/// `(a ⋉ b) ⋊ c = a ⋉' (b ⋊' c)`.
pub(crate) const TRI_RELATIONS: [(&str, TriOp, TriOp, TriOp, TriOp); 7] = [
    ("tri1", TriOp::Left, TriOp::Left, TriOp::Left, TriOp::Star),
    ("tri2", TriOp::Right, TriOp::Left, TriOp::Right, TriOp::Left),
    (
        "tri3",
        TriOp::Star,
        TriOp::Right,
        TriOp::Right,
        TriOp::Right,
    ),
    ("tri4", TriOp::Right, TriOp::Mid, TriOp::Right, TriOp::Mid),
    ("tri5", TriOp::Left, TriOp::Mid, TriOp::Mid, TriOp::Right),
    ("tri6", TriOp::Mid, TriOp::Left, TriOp::Mid, TriOp::Left),
    ("tri7", TriOp::Mid, TriOp::Mid, TriOp::Mid, TriOp::Mid),
];

/// Exhaustively verifies the seven tridendriform relations on all tree
/// triples of positive degree whose degrees sum to at most the bound.
pub fn check_tridend_axioms(max_total_degree: usize) -> Report {
    check_tridend_axioms_with(&REAL_PRODUCTS, max_total_degree)
}

pub(crate) fn check_tridend_axioms_with(products: &ProductSet, bound: usize) -> Report {
    let mut report = Report::new();
    let by_degree: Vec<Vec<PlanarTree>> = (0..=bound).map(crate::tree::enumerate_trees).collect();
    for da in 1..=bound.saturating_sub(2) {
        for db in 1..=bound - da - 1 {
            for dc in 1..=bound - da - db {
                for a in &by_degree[da] {
                    let va = TreeVector::basis(a.clone());
                    for b in &by_degree[db] {
                        let vb = TreeVector::basis(b.clone());
                        for c in &by_degree[dc] {
                            let vc = TreeVector::basis(c.clone());
                            for &(law, lo, ro, li, ri) in &TRI_RELATIONS {
                                let lhs = products
                                    .apply(lo, &va, &vb)
                                    .and_then(|ab| products.apply(ro, &ab, &vc));
                                let rhs = products
                                    .apply(ri, &vb, &vc)
                                    .and_then(|bc| products.apply(li, &va, &bc));
                                report.checked += 1;
                                match (lhs, rhs) {
                                    (Ok(l), Ok(r)) if l == r => {}
                                    (l, r) => report.violations.push(Violation {
                                        law: law.to_string(),
                                        inputs: format!("a={a};b={b};c={c}"),
                                        lhs: render_result(&l),
                                        rhs: render_result(&r),
                                    }),
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

fn render_result(r: &Result<TreeVector>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("<error: {e}>"),
    }
}

/// An expression over the three partial products whose leaves are the
/// generator `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorExpr {
    Gen,
    Left(Box<GeneratorExpr>, Box<GeneratorExpr>),
    Mid(Box<GeneratorExpr>, Box<GeneratorExpr>),
    Right(Box<GeneratorExpr>, Box<GeneratorExpr>),
}

impl GeneratorExpr {
    /// Evaluates with the real products; for expressions produced by
    /// [`express_in_generator`] this is a single basis tree with
    /// coefficient 1.
    pub fn eval(&self) -> Result<TreeVector> {
        match self {
            GeneratorExpr::Gen => Ok(TreeVector::basis(PlanarTree::generator())),
            GeneratorExpr::Left(a, b) => left(&a.eval()?, &b.eval()?),
            GeneratorExpr::Mid(a, b) => mid(&a.eval()?, &b.eval()?),
            GeneratorExpr::Right(a, b) => right(&a.eval()?, &b.eval()?),
        }
    }

    fn write(&self, out: &mut String) {
        let operand = |e: &GeneratorExpr, out: &mut String| {
            if matches!(e, GeneratorExpr::Gen) {
                out.push('g');
            } else {
                out.push('(');
                e.write(out);
                out.push(')');
            }
        };
        match self {
            GeneratorExpr::Gen => out.push('g'),
            GeneratorExpr::Left(a, b) => {
                operand(a, out);
                out.push('≺');
                operand(b, out);
            }
            GeneratorExpr::Mid(a, b) => {
                operand(a, out);
                out.push('·');
                operand(b, out);
            }
            GeneratorExpr::Right(a, b) => {
                operand(a, out);
                out.push('≻');
                operand(b, out);
            }
        }
    }
}

impl fmt::Display for GeneratorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

/// Writes a tree as an expression in the generator, by the four-case
/// decomposition on the grafting components: a corolla with `m` leaves is an
/// `(m-1)`-fold `·`-product of the generator, and otherwise the first or
/// last non-leaf component is peeled off with `≻`, `≺` or `·`.
pub fn express_in_generator(t: &PlanarTree) -> Result<GeneratorExpr> {
    if t.is_leaf() {
        return Err(Error::LeafNotAllowed);
    }
    let children = t.children();
    let k = children.len() - 1;
    // Case 1: corolla
    if children.iter().all(PlanarTree::is_leaf) {
        let mut expr = GeneratorExpr::Gen;
        for _ in 1..k {
            expr = GeneratorExpr::Mid(Box::new(GeneratorExpr::Gen), Box::new(expr));
        }
        return Ok(expr);
    }
    // Case 2: first component is not a leaf: x = x0 ≻ (| ∨ x1 ∨ ... ∨ xk)
    if !children[0].is_leaf() {
        let mut rest = vec![PlanarTree::Leaf];
        rest.extend(children[1..].iter().cloned());
        return Ok(GeneratorExpr::Right(
            Box::new(express_in_generator(&children[0])?),
            Box::new(express_in_generator(&PlanarTree::node(rest))?),
        ));
    }
    // Case 3: last component is not a leaf: x = (x0 ∨ ... ∨ x(k-1) ∨ |) ≺ xk
    if !children[k].is_leaf() {
        let mut init = children[..k].to_vec();
        init.push(PlanarTree::Leaf);
        return Ok(GeneratorExpr::Left(
            Box::new(express_in_generator(&PlanarTree::node(init))?),
            Box::new(express_in_generator(&children[k])?),
        ));
    }
    // Case 4: some middle component is not a leaf:
    // x = (x0 ∨ ... ∨ x(i-1) ∨ |) · (xi ∨ ... ∨ xk)
    let i = children
        .iter()
        .position(|c| !c.is_leaf())
        .expect("non-corolla has a non-leaf component");
    let mut first = children[..i].to_vec();
    first.push(PlanarTree::Leaf);
    let second = children[i..].to_vec();
    Ok(GeneratorExpr::Mid(
        Box::new(express_in_generator(&PlanarTree::node(first))?),
        Box::new(express_in_generator(&PlanarTree::node(second))?),
    ))
}
