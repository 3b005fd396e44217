//! Reduced planar rooted trees.
//!
//! A *reduced* planar tree is either the single leaf `|` or an internal node
//! with an ordered list of at least two subtrees.  Trees with `n + 1` leaves
//! form the degree-`n` slice of the basis; the unique degree-0 tree is the
//! leaf itself.
//!
//! Trees have a canonical text form: the leaf renders as `|` and a node as
//! the comma-separated list of its children in parentheses, e.g. `(|,(|,|))`.
//! Parsing is whitespace-insensitive; rendering never emits whitespace.
//! The canonical total order compares degrees first and then the canonical
//! strings byte-wise, which is what every deterministic output in this crate
//! is sorted by.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A reduced planar rooted tree.
///
/// Invariant: every `Node` has at least two children.  Use [`PlanarTree::graft`]
/// to build nodes with validation; direct construction through the enum is
/// possible but skips the arity check.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PlanarTree {
    Leaf,
    Node(Vec<PlanarTree>),
}

impl PlanarTree {
    /// The single leaf `|`, the unit of the augmented algebra.
    pub fn leaf() -> Self {
        PlanarTree::Leaf
    }

    /// The generator `Y = (|,|)`, the unique tree of degree 1.
    pub fn generator() -> Self {
        PlanarTree::Node(vec![PlanarTree::Leaf, PlanarTree::Leaf])
    }

    /// The corolla with `n + 1` leaves (`n >= 1`): a root whose children are
    /// all leaves.
    pub fn corolla(n: usize) -> Result<Self> {
        Self::graft(vec![PlanarTree::Leaf; n + 1])
    }

    /// Grafts the given trees onto a common root, left to right.
    ///
    /// Rejects lists of fewer than two children, which would produce a
    /// non-reduced tree.
    pub fn graft(children: Vec<PlanarTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::GraftArity(children.len()));
        }
        Ok(PlanarTree::Node(children))
    }

    /// Internal constructor used where the arity is known to be valid.
    pub(crate) fn node(children: Vec<PlanarTree>) -> Self {
        debug_assert!(children.len() >= 2);
        PlanarTree::Node(children)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarTree::Leaf)
    }

    /// The children of the root; empty for the leaf.
    pub fn children(&self) -> &[PlanarTree] {
        match self {
            PlanarTree::Leaf => &[],
            PlanarTree::Node(cs) => cs,
        }
    }

    /// Number of leaves, `nf(t)`.
    pub fn leaf_count(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(cs) => cs.iter().map(PlanarTree::leaf_count).sum(),
        }
    }

    /// Degree `deg(t) = nf(t) - 1`; the grading of the algebra.
    pub fn degree(&self) -> usize {
        self.leaf_count() - 1
    }

    /// True iff every internal node has exactly two children.
    pub fn is_binary(&self) -> bool {
        match self {
            PlanarTree::Leaf => true,
            PlanarTree::Node(cs) => cs.len() == 2 && cs.iter().all(PlanarTree::is_binary),
        }
    }

    /// True iff the tree is a corolla: a single internal node whose children
    /// are all leaves.  The leaf itself is not a corolla.
    pub fn is_corolla(&self) -> bool {
        match self {
            PlanarTree::Leaf => false,
            PlanarTree::Node(cs) => cs.iter().all(PlanarTree::is_leaf),
        }
    }

    /// The subtree at a path of child indices from the root.
    pub fn subtree_at(&self, path: &[usize]) -> Option<&PlanarTree> {
        let mut cur = self;
        for &i in path {
            cur = cur.children().get(i)?;
        }
        Some(cur)
    }

    fn write_canonical(&self, out: &mut String) {
        match self {
            PlanarTree::Leaf => out.push('|'),
            PlanarTree::Node(cs) => {
                out.push('(');
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    c.write_canonical(out);
                }
                out.push(')');
            }
        }
    }

    /// Byte-wise comparison of the canonical strings, without allocating
    /// them.  Alphabet order is the ASCII order of `(`, `)`, `,`, `|`.
    fn cmp_canonical(&self, other: &Self) -> Ordering {
        CanonicalBytes::new(self).cmp(CanonicalBytes::new(other))
    }
}

/// Streams the canonical encoding of a tree one byte at a time.
struct CanonicalBytes<'a> {
    stack: Vec<Frame<'a>>,
}

enum Frame<'a> {
    Byte(u8),
    Tree(&'a PlanarTree),
}

impl<'a> CanonicalBytes<'a> {
    fn new(t: &'a PlanarTree) -> Self {
        CanonicalBytes {
            stack: vec![Frame::Tree(t)],
        }
    }
}

impl<'a> Iterator for CanonicalBytes<'a> {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        match self.stack.pop()? {
            Frame::Byte(b) => Some(b),
            Frame::Tree(PlanarTree::Leaf) => Some(b'|'),
            Frame::Tree(PlanarTree::Node(cs)) => {
                self.stack.push(Frame::Byte(b')'));
                for (i, c) in cs.iter().enumerate().rev() {
                    self.stack.push(Frame::Tree(c));
                    if i > 0 {
                        self.stack.push(Frame::Byte(b','));
                    }
                }
                Some(b'(')
            }
        }
    }
}

impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.leaf_count()
            .cmp(&other.leaf_count())
            .then_with(|| self.cmp_canonical(other))
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_canonical(&mut s);
        f.write_str(&s)
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes: Vec<(usize, u8)> = s
            .bytes()
            .enumerate()
            .filter(|(_, b)| !b.is_ascii_whitespace())
            .collect();
        let mut pos = 0;
        let t = parse_tree(&bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse {
                at: bytes[pos].0,
                msg: "trailing input after tree".into(),
            });
        }
        Ok(t)
    }
}

fn parse_tree(bytes: &[(usize, u8)], pos: &mut usize) -> Result<PlanarTree> {
    match bytes.get(*pos) {
        Some(&(_, b'|')) => {
            *pos += 1;
            Ok(PlanarTree::Leaf)
        }
        Some(&(_, b'(')) => {
            *pos += 1;
            let mut children = vec![parse_tree(bytes, pos)?];
            loop {
                match bytes.get(*pos) {
                    Some(&(_, b',')) => {
                        *pos += 1;
                        children.push(parse_tree(bytes, pos)?);
                    }
                    Some(&(at, b')')) => {
                        *pos += 1;
                        if children.len() < 2 {
                            return Err(Error::Parse {
                                at,
                                msg: "node with a single child is not reduced".into(),
                            });
                        }
                        return Ok(PlanarTree::Node(children));
                    }
                    Some(&(at, b)) => {
                        return Err(Error::Parse {
                            at,
                            msg: format!("expected ',' or ')', found '{}'", b as char),
                        })
                    }
                    None => {
                        return Err(Error::Parse {
                            at: bytes.last().map_or(0, |&(i, _)| i + 1),
                            msg: "unterminated '('".into(),
                        })
                    }
                }
            }
        }
        Some(&(at, b)) => Err(Error::Parse {
            at,
            msg: format!("expected '|' or '(', found '{}'", b as char),
        }),
        None => Err(Error::Parse {
            at: 0,
            msg: "empty input".into(),
        }),
    }
}

/// An ordered, non-empty list of trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest(Vec<PlanarTree>);

impl Forest {
    pub fn new(trees: Vec<PlanarTree>) -> Result<Self> {
        if trees.is_empty() {
            return Err(Error::EmptyForest);
        }
        Ok(Forest(trees))
    }

    pub fn trees(&self) -> &[PlanarTree] {
        &self.0
    }

    /// Total number of leaves across the forest.
    pub fn leaf_count(&self) -> usize {
        self.0.iter().map(PlanarTree::leaf_count).sum()
    }
}

/// All reduced planar trees of degree `n` (that is, with `n + 1` leaves) in
/// canonical order.  The counts `1, 1, 3, 11, 45, ...` are the small
/// Schroeder numbers.
pub fn enumerate_trees(n: usize) -> Vec<PlanarTree> {
    let mut by_leaves: Vec<Vec<PlanarTree>> = Vec::with_capacity(n + 2);
    by_leaves.push(Vec::new()); // zero leaves: impossible
    by_leaves.push(vec![PlanarTree::Leaf]);
    for m in 2..=n + 1 {
        let mut trees = Vec::new();
        // Choose the number of root children k and a composition of m leaves.
        for k in 2..=m {
            let mut parts = Vec::with_capacity(k);
            compose(m, k, &mut parts, &mut trees, &by_leaves);
        }
        by_leaves.push(trees);
    }
    let mut result = by_leaves.pop().unwrap();
    result.sort();
    result
}

fn compose(
    remaining: usize,
    slots: usize,
    parts: &mut Vec<PlanarTree>,
    out: &mut Vec<PlanarTree>,
    by_leaves: &[Vec<PlanarTree>],
) {
    if slots == 1 {
        for t in &by_leaves[remaining] {
            parts.push(t.clone());
            out.push(PlanarTree::node(parts.clone()));
            parts.pop();
        }
        return;
    }
    for take in 1..=remaining - (slots - 1) {
        for t in &by_leaves[take] {
            parts.push(t.clone());
            compose(remaining - take, slots - 1, parts, out, by_leaves);
            parts.pop();
        }
    }
}

/// Writes `t` as a right comb: walking the right-most branch, the i-th entry
/// is the forest of all children of the i-th branch node except its last
/// child.  Reassembling with [`assemble_right_comb`] is the identity.
pub fn right_comb_decomposition(t: &PlanarTree) -> Result<Vec<Forest>> {
    if t.is_leaf() {
        return Err(Error::LeafNotAllowed);
    }
    let mut forests = Vec::new();
    let mut cur = t;
    while let PlanarTree::Node(cs) = cur {
        let (last, init) = cs.split_last().expect("nodes have >= 2 children");
        forests.push(Forest(init.to_vec()));
        cur = last;
    }
    Ok(forests)
}

/// Mirror image of [`right_comb_decomposition`]: walk the left-most branch
/// and collect all children except the first.
pub fn left_comb_decomposition(t: &PlanarTree) -> Result<Vec<Forest>> {
    if t.is_leaf() {
        return Err(Error::LeafNotAllowed);
    }
    let mut forests = Vec::new();
    let mut cur = t;
    while let PlanarTree::Node(cs) = cur {
        let (first, rest) = cs.split_first().expect("nodes have >= 2 children");
        forests.push(Forest(rest.to_vec()));
        cur = first;
    }
    Ok(forests)
}

/// Rebuilds a tree from its right-comb forests; the empty list gives the leaf.
pub fn assemble_right_comb(forests: &[Forest]) -> PlanarTree {
    let mut cur = PlanarTree::Leaf;
    for f in forests.iter().rev() {
        let mut children = f.0.clone();
        children.push(cur);
        cur = PlanarTree::node(children);
    }
    cur
}

/// Rebuilds a tree from its left-comb forests; the empty list gives the leaf.
pub fn assemble_left_comb(forests: &[Forest]) -> PlanarTree {
    let mut cur = PlanarTree::Leaf;
    for f in forests.iter().rev() {
        let mut children = vec![cur];
        children.extend(f.0.iter().cloned());
        cur = PlanarTree::node(children);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    #[test]
    fn graft_builds_nodes_in_order() {
        let y = PlanarTree::graft(vec![PlanarTree::Leaf, PlanarTree::Leaf]).unwrap();
        assert_eq!(y.to_string(), "(|,|)");
        let mid = PlanarTree::graft(vec![PlanarTree::Leaf, y.clone(), PlanarTree::Leaf]).unwrap();
        assert_eq!(mid.to_string(), "(|,(|,|),|)");
        let left = PlanarTree::graft(vec![y, PlanarTree::Leaf, PlanarTree::Leaf]).unwrap();
        assert_eq!(left.to_string(), "((|,|),|,|)");
    }

    #[test]
    fn graft_rejects_short_lists() {
        assert_eq!(
            PlanarTree::graft(vec![PlanarTree::Leaf]),
            Err(Error::GraftArity(1))
        );
        assert_eq!(PlanarTree::graft(vec![]), Err(Error::GraftArity(0)));
    }

    #[test]
    fn parse_render_round_trip() {
        for s in ["|", "(|,|)", "(|,(|,|),|)", "(((|,|),|),(|,|),(|,|,|))"] {
            assert_eq!(t(s).to_string(), s);
        }
        // whitespace-insensitive parse
        assert_eq!(t(" ( | , ( | , | ) ) "), t("(|,(|,|))"));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<PlanarTree>().is_err());
        assert!("(|)".parse::<PlanarTree>().is_err());
        assert!("(|,|".parse::<PlanarTree>().is_err());
        assert!("(|,|))".parse::<PlanarTree>().is_err());
        assert!("x".parse::<PlanarTree>().is_err());
    }

    #[test]
    fn enumerate_degree_zero_and_two() {
        assert_eq!(enumerate_trees(0), vec![PlanarTree::Leaf]);
        let t2: Vec<String> = enumerate_trees(2).iter().map(|t| t.to_string()).collect();
        // canonical order: '(' sorts before '|'
        assert_eq!(t2, ["((|,|),|)", "(|,(|,|))", "(|,|,|)"]);
    }

    #[test]
    fn enumerate_counts_match_schroeder_numbers() {
        let expected = [1usize, 1, 3, 11, 45, 197, 903, 4279];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_trees(n).len(), count, "degree {n}");
        }
    }

    #[test]
    fn canonical_order_is_total_on_small_degrees() {
        for n in 0..=6 {
            let trees = enumerate_trees(n);
            for i in 0..trees.len() {
                assert_eq!(trees[i].cmp(&trees[i]), Ordering::Equal);
                for j in i + 1..trees.len() {
                    assert_eq!(trees[i].cmp(&trees[j]), Ordering::Less);
                    assert_eq!(trees[j].cmp(&trees[i]), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn comb_decompositions_on_degree_two() {
        let rcd = |s: &str| {
            right_comb_decomposition(&t(s))
                .unwrap()
                .iter()
                .map(|f| f.trees().iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        };
        let lcd = |s: &str| {
            left_comb_decomposition(&t(s))
                .unwrap()
                .iter()
                .map(|f| f.trees().iter().map(|x| x.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        };
        assert_eq!(rcd("(|,|)"), vec![vec!["|"]]);
        assert_eq!(rcd("(|,(|,|))"), vec![vec!["|"], vec!["|"]]);
        assert_eq!(rcd("((|,|),|)"), vec![vec!["(|,|)"]]);
        assert_eq!(lcd("(|,|)"), vec![vec!["|"]]);
        assert_eq!(lcd("((|,|),|)"), vec![vec!["|"], vec!["|"]]);
        assert_eq!(lcd("(|,(|,|))"), vec![vec!["(|,|)"]]);
    }

    #[test]
    fn comb_decompositions_reject_leaf() {
        assert_eq!(
            right_comb_decomposition(&PlanarTree::Leaf),
            Err(Error::LeafNotAllowed)
        );
        assert_eq!(
            left_comb_decomposition(&PlanarTree::Leaf),
            Err(Error::LeafNotAllowed)
        );
    }

    #[test]
    fn comb_round_trips_exhaustively() {
        for n in 1..=6 {
            for tree in enumerate_trees(n) {
                let r = right_comb_decomposition(&tree).unwrap();
                assert_eq!(assemble_right_comb(&r), tree);
                let l = left_comb_decomposition(&tree).unwrap();
                assert_eq!(assemble_left_comb(&l), tree);
            }
        }
    }

    #[test]
    fn binary_predicate() {
        assert!(t("|").is_binary());
        assert!(!t("(|,|,|)").is_binary());
        assert!(t("((|,|),|)").is_binary());
        assert!(!t("((|,|,|),|)").is_binary());
    }

    /// Independent oracle: Catalan numbers by the standard convolution
    /// recurrence.
    fn catalan(n: usize) -> usize {
        let mut c = vec![1usize];
        for m in 1..=n {
            let mut v = 0;
            for i in 0..m {
                v += c[i] * c[m - 1 - i];
            }
            c.push(v);
        }
        c[n]
    }

    #[test]
    fn binary_tree_counts_are_catalan() {
        for n in 0..=8 {
            let count = enumerate_trees(n).iter().filter(|t| t.is_binary()).count();
            assert_eq!(count, catalan(n), "degree {n}");
        }
    }

    #[test]
    fn forest_leaf_counts_add_up() {
        let f = Forest::new(vec![t("(|,|)"), t("(|,|,|)")]).unwrap();
        assert_eq!(f.leaf_count(), 5);
        assert!(Forest::new(vec![]).is_err());
    }
}
