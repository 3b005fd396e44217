//! Shared fixtures for the benchmarks.

use tridendriform::{enumerate_trees, PlanarTree, TreeVector};

/// The sum of all basis trees of one degree, a convenient dense input.
pub fn full_slice(degree: usize) -> TreeVector {
    enumerate_trees(degree)
        .into_iter()
        .map(|t| (t, tridendriform::vect::coeff_int(1)))
        .collect()
}

/// A comb-heavy tree of the given degree (worst case for the ladder walks).
pub fn right_comb(degree: usize) -> PlanarTree {
    let mut t = PlanarTree::Leaf;
    for _ in 0..degree {
        t = PlanarTree::graft(vec![PlanarTree::Leaf, t]).unwrap();
    }
    t
}
