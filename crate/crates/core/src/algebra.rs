//! Finite truncations of graded algebras by structure constants.
//!
//! A [`GradedAlgebra`] stores `A_0, ..., A_top` with products `A_i × A_j → A_{i+j}`
//! for `i + j ≤ top` (products landing beyond `top` are treated as zero). When
//! `A_0` is spanned by orthogonal idempotents `e_v` and every basis element
//! satisfies `e_t x e_s = x` for a unique pair `(t, s)`, the algebra carries a
//! Peirce decomposition and behaves like a path algebra with relations.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy_dense, sparse_from_dense, Matrix, SparseVec, Subspace};
use crate::presentation::QuotientAlgebra;
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct Peirce {
    pub vertices: Vec<String>,
    /// `(target, source)` of every basis element, per degree.
    pub of: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug)]
pub struct GradedAlgebra<F: Field> {
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    /// `mult[i][j][b * dims[j] + c]` = coordinates of `x_b · y_c` in degree `i + j`
    mult: Vec<Vec<Vec<SparseVec<F>>>>,
    unit: Vec<F>,
    peirce: Option<Peirce>,
    /// `A_{>0}` is generated, as an algebra over `A_0`, by `A_1, ..., A_g`.
    generator_degree: usize,
}

impl<F: Field> GradedAlgebra<F> {
    /// Build from a product function on basis elements. `product(i, b, j, c)`
    /// returns coordinates in degree `i + j` and is only called for `i + j ≤ top`.
    pub fn from_fn(
        dims: Vec<usize>,
        labels: Vec<Vec<String>>,
        unit: Vec<F>,
        generator_degree: usize,
        mut product: impl FnMut(usize, usize, usize, usize) -> SparseVec<F>,
    ) -> Result<Self> {
        if dims.is_empty() || labels.len() != dims.len() || labels.iter().zip(&dims).any(|(l, d)| l.len() != *d) {
            return Err(Error::Dimension("labels do not match graded dimensions".into()));
        }
        if unit.len() != dims[0] {
            return Err(Error::Dimension("unit must lie in degree 0".into()));
        }
        let top = dims.len() - 1;
        let mut mult = Vec::with_capacity(top + 1);
        for i in 0..=top {
            let mut row = Vec::new();
            for j in 0..=top - i {
                let mut table = Vec::with_capacity(dims[i] * dims[j]);
                for b in 0..dims[i] {
                    for c in 0..dims[j] {
                        table.push(product(i, b, j, c));
                    }
                }
                row.push(table);
            }
            mult.push(row);
        }
        Ok(GradedAlgebra { dims, labels, mult, unit, peirce: None, generator_degree })
    }

    /// The truncation `A_{≤top}` of a path algebra with relations.
    pub fn from_quotient(q: &QuotientAlgebra<F>) -> Self {
        let top = q.max_degree();
        let dims = q.hilbert_function();
        let quiver = q.quiver();
        let labels = (0..=top).map(|d| q.basis(d).iter().map(|p| quiver.path_label(p)).collect()).collect();
        let unit = vec![F::one(); dims[0]];
        let mut a = Self::from_fn(dims, labels, unit, quiver.max_arrow_degree().max(1), |i, b, j, c| {
            q.mul_basis(i, b, j, c)
        })
        .expect("quotient algebra data is consistent");
        a.peirce = Some(Peirce {
            vertices: quiver.vertices().to_vec(),
            of: (0..=top).map(|d| q.basis(d).iter().map(|p| (p.target, p.source)).collect()).collect(),
        });
        a
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, d: usize) -> usize {
        self.dims.get(d).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn labels(&self, d: usize) -> &[String] {
        &self.labels[d]
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn generator_degree(&self) -> usize {
        self.generator_degree
    }

    pub fn peirce(&self) -> Option<&Peirce> {
        self.peirce.as_ref()
    }

    pub fn num_vertices(&self) -> usize {
        self.peirce.as_ref().map(|p| p.vertices.len()).unwrap_or(0)
    }

    /// `(target, source)` of basis element `b` of degree `d`.
    pub fn endpoints(&self, d: usize, b: usize) -> (usize, usize) {
        self.peirce.as_ref().expect("algebra has a Peirce decomposition").of[d][b]
    }

    /// Basis elements of `A_d` with the given source vertex.
    pub fn basis_from(&self, d: usize, source: usize) -> Vec<usize> {
        (0..self.dim(d)).filter(|&b| self.endpoints(d, b).1 == source).collect()
    }

    /// Basis elements `(degree, index)` generating `A_{>0}` over `A_0`.
    pub fn generators(&self) -> Vec<(usize, usize)> {
        (1..=self.generator_degree.min(self.top_degree())).flat_map(|d| (0..self.dim(d)).map(move |b| (d, b))).collect()
    }

    pub fn mul_basis(&self, i: usize, b: usize, j: usize, c: usize) -> &[(usize, F)] {
        if i + j > self.top_degree() {
            return &[];
        }
        &self.mult[i][j][b * self.dims[j] + c]
    }

    /// Product of homogeneous elements; zero beyond the top degree.
    pub fn mul(&self, x: &[F], i: usize, y: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim(i + j)];
        if i + j > self.top_degree() {
            return out;
        }
        for (b, xb) in x.iter().enumerate() {
            if xb.is_zero() {
                continue;
            }
            for (c, yc) in y.iter().enumerate() {
                if !yc.is_zero() {
                    axpy_dense(&mut out, &(xb.clone() * yc.clone()), &self.mult[i][j][b * self.dims[j] + c]);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y` from `A_j` to `A_{i+j}`.
    pub fn left_mul_matrix(&self, x: &[F], i: usize, j: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim(i + j), self.dim(j));
        if i + j > self.top_degree() {
            return m;
        }
        for c in 0..self.dim(j) {
            let mut col = vec![F::zero(); self.dim(i + j)];
            for (b, xb) in x.iter().enumerate() {
                if !xb.is_zero() {
                    axpy_dense(&mut col, xb, &self.mult[i][j][b * self.dims[j] + c]);
                }
            }
            for (r, v) in col.into_iter().enumerate() {
                m[(r, c)] = v;
            }
        }
        m
    }

    /// Matrix of `y ↦ y·x` from `A_j` to `A_{i+j}`.
    pub fn right_mul_matrix(&self, x: &[F], i: usize, j: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim(i + j), self.dim(j));
        if i + j > self.top_degree() {
            return m;
        }
        for c in 0..self.dim(j) {
            let mut col = vec![F::zero(); self.dim(i + j)];
            for (b, xb) in x.iter().enumerate() {
                if !xb.is_zero() {
                    axpy_dense(&mut col, xb, &self.mult[j][i][c * self.dims[i] + b]);
                }
            }
            for (r, v) in col.into_iter().enumerate() {
                m[(r, c)] = v;
            }
        }
        m
    }

    /// Attach a vertex decomposition; every basis element must satisfy `e_t x e_s = x`
    /// for its recorded `(t, s)`.
    pub fn with_peirce(mut self, peirce: Peirce) -> Result<Self> {
        if peirce.of.len() != self.dims.len() || peirce.of.iter().zip(&self.dims).any(|(o, d)| o.len() != *d) {
            return Err(Error::Dimension("vertex data does not match graded dimensions".into()));
        }
        let nv = peirce.vertices.len();
        if self.dims[0] != nv || (0..nv).any(|v| peirce.of[0][v] != (v, v)) {
            return Err(Error::Unsupported("degree 0 must be spanned by the vertex idempotents in order".into()));
        }
        for d in 0..self.dims.len() {
            for b in 0..self.dims[d] {
                let (t, s) = peirce.of[d][b];
                let e = crate::linalg::unit_vec(self.dims[d], b);
                let et = crate::linalg::unit_vec(nv, t);
                let es = crate::linalg::unit_vec(nv, s);
                if self.mul(&self.mul(&et, 0, &e, d), d, &es, 0) != e {
                    return Err(Error::Action(format!("{} is not in its recorded vertex component", self.labels[d][b])));
                }
            }
        }
        self.peirce = Some(peirce);
        Ok(self)
    }

    /// The same algebra truncated at a lower top degree.
    pub fn truncate(&self, top: usize) -> Self {
        let top = top.min(self.top_degree());
        let mut a = self.clone();
        a.dims.truncate(top + 1);
        a.labels.truncate(top + 1);
        a.mult.truncate(top + 1);
        for (i, row) in a.mult.iter_mut().enumerate() {
            row.truncate(top - i + 1);
        }
        if let Some(p) = &mut a.peirce {
            p.of.truncate(top + 1);
        }
        a
    }

    /// Unit laws and associativity on every basis triple (`exhaustive`) or on
    /// `samples` random homogeneous triples.
    pub fn verify(&self, samples: Option<(usize, u64)>) -> Report {
        let mut r = Report::new("graded algebra axioms");
        let top = self.top_degree();
        let mut bad = None;
        'unit: for d in 0..=top {
            for b in 0..self.dim(d) {
                let e = crate::linalg::unit_vec(self.dim(d), b);
                if self.mul(&self.unit, 0, &e, d) != e || self.mul(&e, d, &self.unit, 0) != e {
                    bad = Some(self.labels[d][b].clone());
                    break 'unit;
                }
            }
        }
        r.check("unit", bad.is_none(), bad.unwrap_or_default());
        let triple = |i: usize, b: usize, j: usize, c: usize, k: usize, e: usize| -> bool {
            let x = crate::linalg::unit_vec(self.dim(i), b);
            let y = crate::linalg::unit_vec(self.dim(j), c);
            let z = crate::linalg::unit_vec(self.dim(k), e);
            self.mul(&self.mul(&x, i, &y, j), i + j, &z, k) == self.mul(&x, i, &self.mul(&y, j, &z, k), j + k)
        };
        let mut bad = None;
        match samples {
            None => {
                'assoc: for i in 0..=top {
                    for j in 0..=top - i {
                        for k in 0..=top - i - j {
                            for b in 0..self.dim(i) {
                                for c in 0..self.dim(j) {
                                    for e in 0..self.dim(k) {
                                        if !triple(i, b, j, c, k, e) {
                                            bad = Some(format!(
                                                "{} {} {}",
                                                self.labels[i][b], self.labels[j][c], self.labels[k][e]
                                            ));
                                            break 'assoc;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            Some((n, seed)) => {
                let mut rng = crate::rng(seed);
                for _ in 0..n {
                    let i = rng.gen_range(0..=top);
                    let j = rng.gen_range(0..=top - i);
                    let k = rng.gen_range(0..=top - i - j);
                    let x = crate::random_vector(&mut rng, self.dim(i));
                    let y = crate::random_vector(&mut rng, self.dim(j));
                    let z = crate::random_vector(&mut rng, self.dim(k));
                    if self.mul(&self.mul(&x, i, &y, j), i + j, &z, k) != self.mul(&x, i, &self.mul(&y, j, &z, k), j + k)
                    {
                        bad = Some(format!("random triple in degrees ({i},{j},{k})"));
                        break;
                    }
                }
            }
        }
        r.check("associativity", bad.is_none(), bad.unwrap_or_default());
        r
    }

    /// Product-rank profile: `rank span(A_a · A_b)` inside `A_{a+b}` for `a, b ≥ 1`.
    pub fn product_ranks(&self) -> Vec<((usize, usize), usize)> {
        let top = self.top_degree();
        let mut out = Vec::new();
        for a in 1..=top {
            for b in 1..=top - a {
                let mut vecs = Vec::new();
                for x in 0..self.dim(a) {
                    for y in 0..self.dim(b) {
                        let p = self.mul_basis(a, x, b, y);
                        if !p.is_empty() {
                            vecs.push(p.to_vec());
                        }
                    }
                }
                out.push(((a, b), crate::linalg::span_rank(&vecs, self.dim(a + b))));
            }
        }
        out
    }

    /// Rebase so that `A_0` is spanned by the given complete set of orthogonal
    /// idempotents and every basis element lies in a single Peirce component.
    pub fn with_idempotents(&self, idempotents: &[Vec<F>], vertex_labels: Vec<String>) -> Result<Self> {
        let m = idempotents.len();
        if vertex_labels.len() != m {
            return Err(Error::Dimension("one label per idempotent".into()));
        }
        if m != self.dim(0) {
            return Err(Error::Unsupported(format!(
                "degree-0 part has dimension {} but {m} primitive idempotents were given; only basic commutative degree-0 parts are supported",
                self.dim(0)
            )));
        }
        for (t, f) in idempotents.iter().enumerate() {
            for (s, g) in idempotents.iter().enumerate() {
                let p = self.mul(f, 0, g, 0);
                let expect = if s == t { f.clone() } else { vec![F::zero(); self.dim(0)] };
                if p != expect {
                    return Err(Error::Action(format!("elements {t}, {s} are not orthogonal idempotents")));
                }
            }
        }
        let mut sum = vec![F::zero(); self.dim(0)];
        for f in idempotents {
            sum = crate::linalg::add_vec(&sum, f);
        }
        if sum != self.unit {
            return Err(Error::Action("idempotents do not sum to the unit".into()));
        }
        let top = self.top_degree();
        let mut new_basis: Vec<Vec<Vec<F>>> = Vec::new();
        let mut of = Vec::new();
        for d in 0..=top {
            let mut vecs = Vec::new();
            let mut ends = Vec::new();
            if d == 0 {
                vecs = idempotents.to_vec();
                ends = (0..m).map(|v| (v, v)).collect();
            } else {
                for t in 0..m {
                    for s in 0..m {
                        let comp: Vec<Vec<F>> = (0..self.dim(d))
                            .map(|b| {
                                let x = crate::linalg::unit_vec(self.dim(d), b);
                                let y = self.mul(&idempotents[t], 0, &x, d);
                                self.mul(&y, d, &idempotents[s], 0)
                            })
                            .collect();
                        let sub = Subspace::spanned_by(&comp, self.dim(d));
                        for v in sub.basis() {
                            vecs.push(v.clone());
                            ends.push((t, s));
                        }
                    }
                }
            }
            if vecs.len() != self.dim(d) {
                return Err(Error::Internal(format!("Peirce components do not span degree {d}")));
            }
            new_basis.push(vecs);
            of.push(ends);
        }
        let coords: Vec<Subspace<F>> =
            (0..=top).map(|d| Subspace::new(new_basis[d].clone(), self.dim(d))).collect::<Result<_>>()?;
        let labels = (0..=top)
            .map(|d| {
                if d == 0 {
                    vertex_labels.clone()
                } else {
                    new_basis[d].iter().map(|v| combination_label(v, &self.labels[d])).collect()
                }
            })
            .collect();
        let mut a = Self::from_fn(self.dims.clone(), labels, vec![F::one(); m], self.generator_degree, |i, b, j, c| {
            let p = self.mul(&new_basis[i][b], i, &new_basis[j][c], j);
            sparse_from_dense(&coords[i + j].coordinates(&p).expect("full-space coordinates"))
        })?;
        a.peirce = Some(Peirce { vertices: vertex_labels, of });
        Ok(a)
    }
}

/// Human-readable label of a linear combination of labelled basis vectors.
pub fn combination_label<F: Field>(v: &[F], labels: &[String]) -> String {
    let terms: Vec<(usize, &F)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    if terms.len() == 1 && *terms[0].1 == F::one() {
        return labels[terms[0].0].clone();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(i, c)| if **c == F::one() { labels[*i].clone() } else { format!("({c})*{}", labels[*i]) })
        .collect();
    parts.join(" + ")
}

pub mod roots {
    //! Primitive idempotents of small commutative split semisimple algebras over the rationals.

    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};

    use crate::error::{Error, Result};
    use crate::linalg::Matrix;
    use crate::Rational;

    /// Characteristic polynomial `det(tI − M)`, coefficients from `t^0` upward.
    pub fn characteristic_polynomial(m: &Matrix<Rational>) -> Vec<Rational> {
        let n = m.rows();
        // Faddeev–LeVerrier
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut mk = Matrix::<Rational>::zeros(n, n);
        for k in 1..=n {
            let mut next = m.mul(&mk);
            for i in 0..n {
                next[(i, i)] = next[(i, i)].clone() + coeffs[n - k + 1].clone();
            }
            mk = next;
            let am = m.mul(&mk);
            let tr = (0..n).fold(Rational::zero(), |acc, i| acc + am[(i, i)].clone());
            coeffs[n - k] = -tr / Rational::from_integer(BigInt::from(k));
        }
        coeffs
    }

    fn eval(p: &[Rational], x: &Rational) -> Rational {
        p.iter().rev().fold(Rational::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    fn divisors(n: &BigInt) -> Vec<BigInt> {
        let n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                out.push(d.clone());
                let q = &n / &d;
                if q != d {
                    out.push(q);
                }
            }
            d += 1;
        }
        out
    }

    /// Distinct rational roots of a polynomial (coefficients from `t^0` upward).
    pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
        let mut p: Vec<Rational> = p.to_vec();
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        let mut roots = Vec::new();
        if p.len() <= 1 {
            return roots;
        }
        if p[0].is_zero() {
            roots.push(Rational::zero());
            let k = p.iter().position(|c| !c.is_zero()).unwrap_or(0);
            p.drain(..k);
        }
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let (a0, an) = (ints[0].clone(), ints[ints.len() - 1].clone());
        for num in divisors(&a0) {
            for den in divisors(&an) {
                for s in [1, -1] {
                    let r = Rational::new(num.clone() * s, den.clone());
                    if !roots.contains(&r) && eval(&p, &r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        roots
    }

    /// Primitive idempotents of a commutative algebra given by `left_mul[i]`
    /// (the matrix of multiplication by basis element `i`) and its unit.
    /// Fails when the algebra does not split into a product of copies of the rationals.
    pub fn primitive_idempotents(left_mul: &[Matrix<Rational>], unit: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        let n = unit.len();
        let times = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
            let mut m = Matrix::zeros(n, n);
            for (k, c) in x.iter().enumerate() {
                m.add_scaled(c, &left_mul[k]);
            }
            m.mul_vec(y)
        };
        let mut idems = vec![unit.to_vec()];
        for b in 0..n {
            let mut next = Vec::new();
            for f in &idems {
                let fb = times(f, &crate::linalg::unit_vec(n, b));
                let mut m = Matrix::zeros(n, n);
                for (k, c) in fb.iter().enumerate() {
                    m.add_scaled(c, &left_mul[k]);
                }
                let roots = rational_roots(&characteristic_polynomial(&m));
                let mut pieces = Vec::new();
                for mu in &roots {
                    let mut e = f.clone();
                    for nu in &roots {
                        if nu == mu {
                            continue;
                        }
                        let shifted: Vec<Rational> =
                            fb.iter().zip(f).map(|(x, y)| (x.clone() - nu.clone() * y.clone()) / (mu - nu)).collect();
                        e = times(&e, &shifted);
                    }
                    if !crate::linalg::is_zero_vec(&e) {
                        pieces.push(e);
                    }
                }
                let sum = pieces.iter().fold(vec![Rational::zero(); n], |acc, e| crate::linalg::add_vec(&acc, e));
                if sum != *f {
                    return Err(Error::Unsupported(
                        "degree-0 algebra does not split over the rationals".into(),
                    ));
                }
                next.extend(pieces);
            }
            idems = next;
        }
        if idems.len() != n {
            return Err(Error::Unsupported("degree-0 algebra is not split semisimple over the rationals".into()));
        }
        Ok(idems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;
    use crate::quiver::Quiver;
    use crate::{HopfAlgebra, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn kxyz(top: usize) -> GradedAlgebra<Rational> {
        let p = Presentation::from_words(
            Quiver::loops(&["x", "y", "z"]),
            &[
                vec![(q(1), vec!["x", "y"]), (q(-1), vec!["y", "x"])],
                vec![(q(1), vec!["x", "z"]), (q(-1), vec!["z", "x"])],
                vec![(q(1), vec!["z", "y"]), (q(-1), vec!["y", "z"])],
            ],
            None,
        )
        .unwrap();
        GradedAlgebra::from_quotient(&QuotientAlgebra::new(p, top))
    }

    #[test]
    fn polynomial_truncation() {
        let a = kxyz(4);
        assert_eq!(a.dims(), &[1, 3, 6, 10, 15]);
        assert!(a.verify(None).passed());
        assert_eq!(a.generators().len(), 3);
        assert_eq!(a.truncate(2).dims(), &[1, 3, 6]);
        // A_1 · A_1 = A_2
        assert!(a.product_ranks().contains(&((1, 1), 6)));
        assert_eq!(a.endpoints(2, 0), (0, 0));
    }

    #[test]
    fn characteristic_polynomials_and_roots() {
        use roots::*;
        let m = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]], 2).unwrap();
        assert_eq!(characteristic_polynomial(&m), vec![q(-1), q(0), q(1)]);
        let mut r = rational_roots(&characteristic_polynomial(&m));
        r.sort();
        assert_eq!(r, vec![q(-1), q(1)]);
        // t^2 + 1 has none
        assert!(rational_roots(&[q(1), q(0), q(1)]).is_empty());
        // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        let mut r = rational_roots(&[q(1), q(-3), q(2)]);
        r.sort();
        assert_eq!(r, vec![Rational::from_ratio(1, 2), q(1)]);
    }

    #[test]
    fn idempotents_of_group_algebras() {
        let c2 = crate::FiniteGroup::cyclic(2).unwrap();
        let h = HopfAlgebra::<Rational>::group_algebra(&c2);
        let lm: Vec<_> = (0..2).map(|i| h.left_mul_matrix(i)).collect();
        let mut e = roots::primitive_idempotents(&lm, h.unit()).unwrap();
        e.sort();
        let half = Rational::from_ratio(1, 2);
        assert_eq!(e, vec![vec![half.clone(), -half.clone()], vec![half.clone(), half]]);
        // kZ/3 needs cube roots of unity
        let c3 = crate::FiniteGroup::cyclic(3).unwrap();
        let h = HopfAlgebra::<Rational>::group_algebra(&c3);
        let lm: Vec<_> = (0..3).map(|i| h.left_mul_matrix(i)).collect();
        assert!(roots::primitive_idempotents(&lm, h.unit()).is_err());
        // kV4 splits
        let v4 = c2.product(&c2);
        let h = HopfAlgebra::<Rational>::group_algebra(&v4);
        let lm: Vec<_> = (0..4).map(|i| h.left_mul_matrix(i)).collect();
        assert_eq!(roots::primitive_idempotents(&lm, h.unit()).unwrap().len(), 4);
    }
}
