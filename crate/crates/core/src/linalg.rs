//! Exact sparse linear algebra over the rationals.
//!
//! Kernels are computed from the reduced row echelon form, which is unique,
//! so kernel bases are deterministic: one vector per free column in canonical
//! column order, with entry 1 at the free column.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::tree::PlanarTree;
use crate::vect::{Coeff, FormalSum, TensorVector};

/// A sparse matrix with rational entries, stored row-major.
#[derive(Debug, Clone)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    /// Per row: sorted `(column, value)` pairs, no zeros.
    data: Vec<Vec<(usize, Coeff)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        assert!(r < self.rows && c < self.cols);
        if v.is_zero() {
            return;
        }
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) => row[i].1 = v,
            Err(i) => row.insert(i, (c, v)),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Coeff {
        self.data[r]
            .binary_search_by_key(&c, |e| e.0)
            .map(|i| self.data[r][i].1.clone())
            .unwrap_or_else(|_| Coeff::zero())
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`, with rows
    /// indexed by the sorted union of all keys appearing.  Returns the row
    /// basis alongside the matrix.
    pub fn from_columns<K: Ord + Clone>(columns: &[FormalSum<K>]) -> (Vec<K>, SparseMatrix) {
        let mut row_index: BTreeMap<K, usize> = BTreeMap::new();
        for col in columns {
            for (k, _) in col.iter() {
                let next = row_index.len();
                row_index.entry(k.clone()).or_insert(next);
            }
        }
        // BTreeMap iteration is sorted; re-number in sorted order.
        let keys: Vec<K> = row_index.keys().cloned().collect();
        for (i, k) in keys.iter().enumerate() {
            *row_index.get_mut(k).unwrap() = i;
        }
        let mut m = SparseMatrix::new(keys.len(), columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (k, v) in col.iter() {
                let r = row_index[k];
                m.data[r].push((j, v.clone()));
            }
        }
        for row in &mut m.data {
            row.sort_by_key(|e| e.0);
        }
        (keys, m)
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn stacked(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        SparseMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Coeff]) -> Vec<Coeff> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = Coeff::zero();
                for (c, x) in row {
                    if !v[*c].is_zero() {
                        acc += x.clone() * v[*c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form as a list of normalized pivot rows, keyed by
    /// pivot column.  The RREF is unique, so the result does not depend on
    /// the row order.
    fn rref(&self) -> BTreeMap<usize, Vec<(usize, Coeff)>> {
        let mut pivots: BTreeMap<usize, Vec<(usize, Coeff)>> = BTreeMap::new();
        for row in &self.data {
            let mut r = row.clone();
            // eliminate every entry sitting in an existing pivot column
            loop {
                let hit = r
                    .iter()
                    .find(|(c, _)| pivots.contains_key(c))
                    .map(|(c, v)| (*c, v.clone()));
                match hit {
                    Some((c, factor)) => {
                        r = row_sub_scaled(&r, &pivots[&c], &factor);
                    }
                    None => break,
                }
            }
            if let Some(&(lead, _)) = r.first() {
                let inv = r[0].1.clone();
                for e in &mut r {
                    e.1 /= inv.clone();
                }
                // clear the new pivot column from previously inserted rows
                let cols: Vec<usize> = pivots.keys().cloned().collect();
                for pc in cols {
                    let prow = pivots.get(&pc).unwrap();
                    if let Ok(i) = prow.binary_search_by_key(&lead, |e| e.0) {
                        let factor = prow[i].1.clone();
                        let updated = row_sub_scaled(prow, &r, &factor);
                        pivots.insert(pc, updated);
                    }
                }
                pivots.insert(lead, r);
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().len()
    }

    /// Deterministic basis of the right kernel: one vector per free column,
    /// ascending, each with entry 1 at its free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Coeff>> {
        let pivots = self.rref();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivots.contains_key(&f) {
                continue;
            }
            let mut v = vec![Coeff::zero(); self.cols];
            v[f] = Coeff::one();
            for (&p, row) in &pivots {
                if let Ok(i) = row.binary_search_by_key(&f, |e| e.0) {
                    v[p] = -row[i].1.clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// `a - factor * b` on sparse rows.
fn row_sub_scaled(
    a: &[(usize, Coeff)],
    b: &[(usize, Coeff)],
    factor: &Coeff,
) -> Vec<(usize, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ca, ref va)), Some(&(cb, ref vb))) => {
                if ca < cb {
                    out.push((ca, va.clone()));
                    i += 1;
                } else if cb < ca {
                    out.push((cb, -factor.clone() * vb.clone()));
                    j += 1;
                } else {
                    let v = va.clone() - factor.clone() * vb.clone();
                    if !v.is_zero() {
                        out.push((ca, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some(&(ca, ref va)), None) => {
                out.push((ca, va.clone()));
                i += 1;
            }
            (None, Some(&(cb, ref vb))) => {
                out.push((cb, -factor.clone() * vb.clone()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// The degree-`n` component of a graded linear map out of the algebra,
/// realized as a sparse matrix over the canonical ordered bases.
pub struct GradedMapComponent {
    pub degree: usize,
    /// Canonical tree basis of the source in column order.
    pub domain: Vec<PlanarTree>,
    /// Row basis: the sorted tensor keys that actually occur.
    pub row_basis: Vec<(PlanarTree, PlanarTree)>,
    pub matrix: SparseMatrix,
}

impl GradedMapComponent {
    /// Assembles the matrix of `f` on the degree-`n` tree basis.
    pub fn of(n: usize, f: impl Fn(&PlanarTree) -> TensorVector) -> Self {
        let domain = crate::tree::enumerate_trees(n);
        let columns: Vec<TensorVector> = domain.iter().map(&f).collect();
        let (row_basis, matrix) = SparseMatrix::from_columns(&columns);
        GradedMapComponent {
            degree: n,
            domain,
            row_basis,
            matrix,
        }
    }

    /// Stacks two maps on the same domain; the kernel of the result is the
    /// joint kernel.  Rows of `other` sit below the rows of `self`, so the
    /// combined row basis lists both blocks in order.
    pub fn joined_with(self, other: GradedMapComponent) -> Self {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.domain, other.domain);
        let matrix = self.matrix.stacked(&other.matrix);
        let mut row_basis = self.row_basis;
        row_basis.extend(other.row_basis);
        GradedMapComponent {
            degree: self.degree,
            domain: self.domain,
            row_basis,
            matrix,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vect::coeff_int;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let mut m = SparseMatrix::new(rows.len(), rows[0].len());
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, coeff_int(v));
            }
        }
        m
    }

    #[test]
    fn identity_has_empty_kernel() {
        let m = dense(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(m.kernel_basis().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn zero_map_has_full_kernel() {
        let m = SparseMatrix::new(2, 3);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            assert_eq!(v[i], coeff_int(1));
        }
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn kernel_vectors_annihilate_and_rank_nullity_holds() {
        let m = dense(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0]]);
        let basis = m.kernel_basis();
        assert_eq!(m.rank() + basis.len(), 4);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rref_is_deterministic_under_row_order() {
        let a = dense(&[&[0, 1, 1], &[1, 1, 0]]);
        let b = dense(&[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(a.kernel_basis(), b.kernel_basis());
    }

    #[test]
    fn reduced_coproduct_matrix_at_degree_two() {
        // of the three degree-2 trees only the two combs have a nonzero
        // reduced coproduct, both equal to Y ⊗ Y: kernel dimension 2
        let component = GradedMapComponent::of(2, |t| {
            crate::coproduct::reduced_coproduct(&crate::vect::TreeVector::basis(t.clone())).unwrap()
        });
        assert_eq!(component.domain.len(), 3);
        assert_eq!(component.row_basis.len(), 1);
        assert_eq!(component.matrix.kernel_basis().len(), 2);
        assert_eq!(component.matrix.rank(), 1);
    }
}
