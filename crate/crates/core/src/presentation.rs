//! Presentations `R = kQ/I` and their degree-wise bases.
//!
//! `R_d` is computed inductively as a quotient of `⊕_a R_{d-|a|}·a` by the
//! images of `p·r` for basis monomials `p` and relations `r`. Columns are
//! ordered with the largest paths first, so pivots (leading terms) are the
//! largest monomials and the surviving basis consists of small monomials.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::linalg::{axpy_dense, sparse_from_dense, Echelon, Matrix, SparseVec};
use crate::quiver::{Path, PathElement, Quiver};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    quiver: Quiver,
    relations: Vec<PathElement<F>>,
    group: Option<FiniteGroup>,
    homogeneity_degree: Option<usize>,
}

impl<F: Field> Presentation<F> {
    pub fn new(quiver: Quiver, relations: Vec<PathElement<F>>, group: Option<FiniteGroup>) -> Result<Self> {
        let mut degrees = Vec::new();
        for (i, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::Inhomogeneous(format!("relation {i} is zero")));
            }
            let d = r.n_degree().ok_or_else(|| {
                Error::Inhomogeneous(format!("relation {i} `{}` mixes degrees", r.display(&quiver)))
            })?;
            if d == 0 {
                return Err(Error::Inhomogeneous(format!("relation {i} has degree 0")));
            }
            if r.endpoints().is_none() {
                return Err(Error::Inhomogeneous(format!(
                    "relation {i} `{}` is not a combination of parallel paths",
                    r.display(&quiver)
                )));
            }
            degrees.push(d);
        }
        if let Some(g) = &group {
            if quiver.arrows().iter().any(|a| a.g_degree >= g.order()) {
                return Err(Error::Group("arrow group degree out of range".into()));
            }
        }
        let homogeneity_degree = match degrees.first() {
            Some(&d) if degrees.iter().all(|&e| e == d) => Some(d),
            _ => None,
        };
        Ok(Presentation { quiver, relations, group, homogeneity_degree })
    }

    /// Relations given as lists of `(coefficient, written word of arrow labels)`.
    pub fn from_words(quiver: Quiver, relations: &[Vec<(F, Vec<&str>)>], group: Option<FiniteGroup>) -> Result<Self> {
        let rels = relations
            .iter()
            .map(|terms| {
                let mut e = PathElement::zero();
                for (c, w) in terms {
                    e.add_term(c.clone(), quiver.path_from_labels(w)?);
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver, rels, group)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[PathElement<F>] {
        &self.relations
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        self.group.as_ref()
    }

    /// `Some(d)` when every relation has degree `d`.
    pub fn homogeneity_degree(&self) -> Option<usize> {
        self.homogeneity_degree
    }

    pub fn with_group(mut self, group: FiniteGroup) -> Result<Self> {
        if self.quiver.arrows().iter().any(|a| a.g_degree >= group.order()) {
            return Err(Error::Group("arrow group degree out of range".into()));
        }
        self.group = Some(group);
        Ok(self)
    }

    /// The same algebra with arrows declared in reverse order.
    pub fn reversed_arrow_order(&self) -> Self {
        let (q, perm) = self.quiver.reversed_arrow_order();
        let rels = self
            .relations
            .iter()
            .map(|r| {
                PathElement::from_terms(r.terms().map(|(p, c)| {
                    let word: Vec<usize> = p.arrows.iter().map(|&a| perm[a]).collect();
                    let path = if word.is_empty() { p.clone() } else { q.path(&word).expect("relabelled path") };
                    (c.clone(), path)
                }))
            })
            .collect();
        Presentation { quiver: q, relations: rels, group: self.group.clone(), homogeneity_degree: self.homogeneity_degree }
    }

    /// Every relation is G-homogeneous. Vertex idempotents always have the identity degree.
    pub fn check_g_homogeneity(&self) -> Report {
        let mut report = Report::new("G-homogeneity");
        let Some(g) = &self.group else {
            report.check("grading group present", false, "presentation carries no group");
            return report;
        };
        for (i, r) in self.relations.iter().enumerate() {
            let degs: Vec<usize> = r.terms().map(|(p, _)| self.quiver.g_degree(p, g)).collect();
            if degs.iter().any(|&d| d != degs[0]) {
                report.check(
                    format!("relation {i} is G-homogeneous"),
                    false,
                    format!("`{}` has terms of group degrees {:?}", r.display(&self.quiver), degs),
                );
                return report;
            }
        }
        report.check("all relations G-homogeneous", true, format!("{} relations", self.relations.len()));
        report
    }
}

/// Degree-wise bases and normal forms of `kQ/I`, computed up to a bound.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra<F: Field> {
    presentation: Presentation<F>,
    max_degree: usize,
    basis: Vec<Vec<Path>>,
    index: Vec<HashMap<Path, usize>>,
    /// `right[d][a][i]`: coordinates in `R_d` of `basis_{d-|a|}[i] · a`.
    right: Vec<Vec<Vec<SparseVec<F>>>>,
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn new(presentation: Presentation<F>, max_degree: usize) -> Self {
        let q = presentation.quiver.clone();
        let nv = q.num_vertices();
        let mut alg = QuotientAlgebra {
            presentation,
            max_degree: 0,
            basis: vec![(0..nv).map(|v| q.trivial_path(v)).collect()],
            index: vec![(0..nv).map(|v| (q.trivial_path(v), v)).collect()],
            right: vec![Vec::new()],
        };
        for d in 1..=max_degree {
            alg.extend_one_degree(d);
        }
        alg
    }

    fn extend_one_degree(&mut self, d: usize) {
        let q = self.presentation.quiver.clone();
        // candidate monomials m·a
        let mut cols: Vec<(Path, usize, usize)> = Vec::new(); // (path, arrow, prefix index)
        for (a, ar) in q.arrows().iter().enumerate() {
            if ar.n_degree > d {
                continue;
            }
            for (i, m) in self.basis[d - ar.n_degree].iter().enumerate() {
                if m.source == ar.target {
                    cols.push((m.compose(&q.arrow_path(a)).expect("composable"), a, i));
                }
            }
        }
        cols.sort_by(|x, y| y.0.cmp(&x.0));
        let col_of: HashMap<(usize, usize), usize> = cols.iter().enumerate().map(|(c, (_, a, i))| ((*a, *i), c)).collect();
        let ncols = cols.len();

        let mut ech = Echelon::new(ncols);
        for r in &self.presentation.relations {
            let e = r.n_degree().expect("homogeneous");
            if e > d {
                continue;
            }
            let (_, target) = r.endpoints().expect("parallel");
            for p in &self.basis[d - e] {
                if p.source != target {
                    continue;
                }
                let mut row = vec![F::zero(); ncols];
                for (w, c) in r.terms() {
                    let last = *w.arrows.last().expect("relations have positive degree");
                    let prefix = Path {
                        n_degree: w.n_degree - q.arrow(last).n_degree,
                        arrows: w.arrows[..w.arrows.len() - 1].to_vec(),
                        source: q.arrow(last).target,
                        target: w.target,
                    };
                    let pw = p.compose(&prefix).expect("composable");
                    let nf = self.normal_form_of_path(&pw);
                    for (i, x) in nf {
                        let col = col_of[&(last, i)];
                        row[col] = row[col].clone() + c.clone() * x;
                    }
                }
                ech.insert_dense(&row);
            }
        }
        let reduced = ech.reduced_rows();
        let mut basis_pos = vec![None; ncols];
        let mut basis = Vec::new();
        // basis in increasing path order
        for c in (0..ncols).rev() {
            if !ech.is_pivot(c) {
                basis_pos[c] = Some(basis.len());
                basis.push(cols[c].0.clone());
            }
        }
        let mut nf_col: Vec<SparseVec<F>> = vec![Vec::new(); ncols];
        for (c, slot) in nf_col.iter_mut().enumerate() {
            if let Some(b) = basis_pos[c] {
                *slot = vec![(b, F::one())];
            }
        }
        for row in &reduced {
            let pc = row[0].0;
            let mut v: SparseVec<F> =
                row[1..].iter().map(|(c, x)| (basis_pos[*c].expect("non-pivot column"), -x.clone())).collect();
            v.sort_by_key(|e| e.0);
            nf_col[pc] = v;
        }
        let mut right = vec![Vec::new(); q.num_arrows()];
        for (a, ar) in q.arrows().iter().enumerate() {
            if ar.n_degree > d {
                continue;
            }
            right[a] = (0..self.basis[d - ar.n_degree].len())
                .map(|i| col_of.get(&(a, i)).map(|&c| nf_col[c].clone()).unwrap_or_default())
                .collect();
        }
        self.index.push(basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect());
        self.basis.push(basis);
        self.right.push(right);
        self.max_degree = d;
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis[d].len()
    }

    pub fn basis(&self, d: usize) -> &[Path] {
        &self.basis[d]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p.n_degree)?.get(p).copied()
    }

    pub fn hilbert_function(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.len()).collect()
    }

    /// Apply right multiplication by arrow `a` to a vector of `R_{d}`.
    pub fn right_mul_arrow(&self, v: &SparseVec<F>, d: usize, a: usize) -> SparseVec<F> {
        let e = d + self.quiver().arrow(a).n_degree;
        let mut acc = vec![F::zero(); self.dim(e)];
        for (i, x) in v {
            axpy_dense(&mut acc, x, &self.right[e][a][*i]);
        }
        sparse_from_dense(&acc)
    }

    /// Coordinates of a path in the basis of its degree.
    pub fn normal_form_of_path(&self, p: &Path) -> SparseVec<F> {
        assert!(p.n_degree <= self.max_degree, "path degree beyond computed bound");
        let mut v: SparseVec<F> = vec![(p.target, F::one())];
        let mut d = 0;
        for &a in &p.arrows {
            v = self.right_mul_arrow(&v, d, a);
            d += self.quiver().arrow(a).n_degree;
            if v.is_empty() {
                break;
            }
        }
        v
    }

    /// Coordinates of a homogeneous element of degree `d`.
    pub fn normal_form(&self, e: &PathElement<F>, d: usize) -> Result<Vec<F>> {
        if d > self.max_degree {
            return Err(Error::OutOfRange(d, self.max_degree));
        }
        let mut out = vec![F::zero(); self.dim(d)];
        for (p, c) in e.terms() {
            if p.n_degree != d {
                return Err(Error::Inhomogeneous(format!(
                    "term `{}` has degree {} (expected {d})",
                    self.quiver().path_label(p),
                    p.n_degree
                )));
            }
            axpy_dense(&mut out, c, &self.normal_form_of_path(p));
        }
        Ok(out)
    }

    /// Product of basis elements `basis_i[b] · basis_j[c]`.
    pub fn mul_basis(&self, i: usize, b: usize, j: usize, c: usize) -> SparseVec<F> {
        let (m, n) = (&self.basis[i][b], &self.basis[j][c]);
        if m.source != n.target {
            return Vec::new();
        }
        let mut v: SparseVec<F> = vec![(b, F::one())];
        let mut d = i;
        for &a in &n.arrows {
            v = self.right_mul_arrow(&v, d, a);
            d += self.quiver().arrow(a).n_degree;
            if v.is_empty() {
                break;
            }
        }
        v
    }

    /// Product of homogeneous elements of degrees `i` and `j`.
    pub fn mul(&self, x: &[F], i: usize, y: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim(i + j)];
        for (b, xb) in x.iter().enumerate() {
            if xb.is_zero() {
                continue;
            }
            for (c, yc) in y.iter().enumerate() {
                if yc.is_zero() {
                    continue;
                }
                axpy_dense(&mut out, &(xb.clone() * yc.clone()), &self.mul_basis(i, b, j, c));
            }
        }
        out
    }

    /// Basis and full normal-form matrix for degree `d`.
    pub fn graded_basis(&self, d: usize) -> GradedBasis<F> {
        let paths = self.quiver().enumerate_paths(d, None);
        let columns: Vec<Vec<F>> = paths
            .iter()
            .map(|p| crate::linalg::sparse_to_dense(&self.normal_form_of_path(p), self.dim(d)))
            .collect();
        GradedBasis { degree: d, basis: self.basis[d].clone(), paths, normal_form: Matrix::from_columns(&columns, self.dim(d)) }
    }
}

/// Basis of `R_d` and the matrix rewriting every degree-`d` path in it.
#[derive(Clone, Debug)]
pub struct GradedBasis<F: Field> {
    pub degree: usize,
    pub basis: Vec<Path>,
    /// All paths of degree `d`, in the column order of `normal_form`.
    pub paths: Vec<Path>,
    pub normal_form: Matrix<F>,
}

impl<F: Field> GradedBasis<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}
