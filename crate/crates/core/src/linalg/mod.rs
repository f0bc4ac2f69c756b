//! Exact linear algebra: dense matrices with deterministic row reduction and
//! a sparse incremental echelon form for the larger systems.

mod dense;
mod sparse;

pub use dense::Matrix;
pub use sparse::{
    axpy_dense, sparse_combine, sparse_from_dense, sparse_kernel, sparse_to_dense, span_rank, Echelon, SparseVec,
};

use crate::field::Field;

/// `rank(m) + dim ker(m) = cols`, the identity checked by the property suites.
pub fn rank_nullity_holds<F: Field>(m: &Matrix<F>) -> bool {
    m.rank() + m.kernel_basis().len() == m.cols()
}

/// Basis (as column vectors) of the column space, chosen among the columns of `m`.
pub fn column_space<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    m.independent_columns().into_iter().map(|j| m.column(j)).collect()
}

/// Coordinates of `v` in the basis `basis` (vectors of equal length), if `v` lies in the span.
pub fn coordinates<F: Field>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    if basis.is_empty() {
        return if v.iter().all(|x| x.is_zero()) { Some(Vec::new()) } else { None };
    }
    let m = Matrix::from_columns(basis, v.len());
    m.solve(v).expect("shape checked")
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x.clone() * y.clone()
        }
    })
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn scale_vec<F: Field>(c: &F, a: &[F]) -> Vec<F> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn unit_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// A subspace with a fixed basis, prepared for repeated coordinate queries.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    /// rows of the reduced echelon form of the basis, sparse
    reduced: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
    /// `reduced[i] = Σ_l transform[i][l] · basis[l]`
    transform: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    /// `basis` must be linearly independent.
    pub fn new(basis: Vec<Vec<F>>, ambient: usize) -> crate::Result<Self> {
        let k = basis.len();
        let m = Matrix::from_fn(k, ambient + k, |i, j| {
            if j < ambient {
                basis[i][j].clone()
            } else if j - ambient == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = m.rref();
        if pivots.len() < k || pivots.iter().any(|&p| p >= ambient) {
            return Err(crate::Error::Dimension("subspace basis is linearly dependent".into()));
        }
        let reduced = (0..k).map(|i| sparse_from_dense(&r.row(i)[..ambient])).collect();
        let transform = (0..k).map(|i| r.row(i)[ambient..].to_vec()).collect();
        Ok(Subspace { ambient, basis, reduced, pivots, transform })
    }

    /// Basis of the span of arbitrary vectors, chosen greedily among them.
    pub fn spanned_by(vectors: &[Vec<F>], ambient: usize) -> Self {
        let mut ech = Echelon::new(ambient);
        let basis: Vec<Vec<F>> = vectors.iter().filter(|v| ech.insert_dense(v)).cloned().collect();
        Self::new(basis, ambient).expect("greedy basis is independent")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let k = self.basis.len();
        let mut residue = v.to_vec();
        let mut c = vec![F::zero(); k];
        for (i, &p) in self.pivots.iter().enumerate() {
            let x = v[p].clone();
            if x.is_zero() {
                continue;
            }
            axpy_dense(&mut residue, &(-x.clone()), &self.reduced[i]);
            for (l, t) in self.transform[i].iter().enumerate() {
                if !t.is_zero() {
                    c[l] = c[l].clone() + x.clone() * t.clone();
                }
            }
        }
        if is_zero_vec(&residue) {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Same subspace (as sets) as `other`.
    pub fn same_span(&self, other: &Subspace<F>) -> bool {
        self.dim() == other.dim() && other.basis.iter().all(|v| self.contains(v))
    }
}
