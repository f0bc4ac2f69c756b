//! Sparse vectors and an incremental echelon basis.
//!
//! The large systems in this crate (commutants, ideal spans, syzygies) have
//! a handful of nonzeros per row, so rows are kept as sorted `(index, value)`
//! lists and reduced against a growing set of pivot rows.

use crate::field::Field;

/// Sorted list of nonzero coordinates.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense<F: Field>(v: &SparseVec<F>, len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `acc += c * v` for a dense accumulator.
pub fn axpy_dense<F: Field>(acc: &mut [F], c: &F, v: &SparseVec<F>) {
    if c.is_zero() {
        return;
    }
    for (i, x) in v {
        acc[*i] = acc[*i].clone() + c.clone() * x.clone();
    }
}

/// Linear combination of sparse vectors, result sorted and without zeros.
pub fn sparse_combine<F: Field>(terms: &[(F, &SparseVec<F>)]) -> SparseVec<F> {
    let mut map = std::collections::BTreeMap::<usize, F>::new();
    for (c, v) in terms {
        if c.is_zero() {
            continue;
        }
        for (i, x) in v.iter() {
            let e = map.entry(*i).or_insert_with(F::zero);
            *e = e.clone() + c.clone() * x.clone();
        }
    }
    map.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// Rows in echelon form over a fixed number of columns. Every stored row has
/// leading coefficient one at its pivot column and zeros in the pivot
/// columns of rows inserted before it.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        p.sort_unstable();
        p
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Residue of `v` after elimination against the stored pivots, as a dense vector.
    pub fn reduce_dense(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    fn reduce_in_place(&self, w: &mut [F]) {
        for c in 0..self.ncols {
            if w[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let f = -w[c].clone();
                axpy_dense(w, &f, &self.rows[r]);
            }
        }
    }

    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut w = sparse_to_dense(v, self.ncols);
        self.reduce_in_place(&mut w);
        sparse_from_dense(&w)
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert a row; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let r = self.reduce(v);
        self.push_reduced(r)
    }

    pub fn insert_dense(&mut self, v: &[F]) -> bool {
        let w = self.reduce_dense(v);
        self.push_reduced(sparse_from_dense(&w))
    }

    fn push_reduced(&mut self, mut r: SparseVec<F>) -> bool {
        if r.is_empty() {
            return false;
        }
        let lead = r[0].1.clone();
        if lead != F::one() {
            let inv = F::one() / lead;
            for e in r.iter_mut() {
                e.1 = e.1.clone() * inv.clone();
            }
        }
        self.pivot_row[r[0].0] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    /// Rows of the reduced row echelon form of the span, sorted by pivot.
    pub fn reduced_rows(&self) -> Vec<SparseVec<F>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        let mut dense: Vec<Vec<F>> = order.iter().map(|&r| sparse_to_dense(&self.rows[r], self.ncols)).collect();
        let pivots: Vec<usize> = order.iter().map(|&r| self.rows[r][0].0).collect();
        // back substitution, bottom-up
        for k in (0..dense.len()).rev() {
            let pk = pivots[k];
            let (upper, lower) = dense.split_at_mut(k);
            let row_k = &lower[0];
            for row in upper.iter_mut() {
                if row[pk].is_zero() {
                    continue;
                }
                let f = row[pk].clone();
                for c in pk..self.ncols {
                    if !row_k[c].is_zero() {
                        row[c] = row[c].clone() - f.clone() * row_k[c].clone();
                    }
                }
            }
        }
        dense.iter().map(|r| sparse_from_dense(r)).collect()
    }

    /// Basis of the orthogonal complement `{x : <row, x> = 0 for all rows}`,
    /// i.e. the null space of the matrix whose rows were inserted.
    pub fn null_space(&self) -> Vec<Vec<F>> {
        let rows = self.reduced_rows();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if self.pivot_row[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.ncols];
            v[free] = F::one();
            for row in &rows {
                if let Ok(pos) = row.binary_search_by_key(&free, |e| e.0) {
                    v[row[0].0] = -row[pos].1.clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Null space of a sparse system given by its rows.
pub fn sparse_kernel<F: Field>(rows: &[SparseVec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.null_space()
}

/// Rank of the span of the given vectors.
pub fn span_rank<F: Field>(vectors: &[SparseVec<F>], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::Rational;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn kernel_agrees_with_dense() {
        let rows = vec![vec![q(1), q(2), q(0), q(-1)], vec![q(2), q(4), q(1), q(0)], vec![q(3), q(6), q(1), q(-1)]];
        let m = Matrix::from_rows(rows.clone(), 4).unwrap();
        let sparse: Vec<_> = rows.iter().map(|r| sparse_from_dense(r)).collect();
        let k = sparse_kernel(&sparse, 4);
        assert_eq!(k.len(), 4 - m.rank());
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn reduced_rows_match_rref() {
        let rows = vec![vec![q(0), q(2), q(4)], vec![q(1), q(1), q(1)], vec![q(1), q(3), q(5)]];
        let m = Matrix::from_rows(rows.clone(), 3).unwrap();
        let (r, p) = m.rref();
        let mut e = Echelon::new(3);
        for row in &rows {
            e.insert_dense(row);
        }
        let red = e.reduced_rows();
        assert_eq!(e.pivots(), p);
        for (i, row) in red.iter().enumerate() {
            assert_eq!(sparse_to_dense(row, 3), r.row(i).to_vec());
        }
    }

    #[test]
    fn combine_drops_cancellations() {
        let a = vec![(0, q(1)), (2, q(3))];
        let b = vec![(0, q(1)), (1, q(1))];
        assert_eq!(sparse_combine(&[(q(1), &a), (q(-1), &b)]), vec![(1, q(-1)), (2, q(3))]);
    }
}
