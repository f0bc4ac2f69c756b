//! Finite-dimensional Hopf algebras given by structure constants.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::linalg::{axpy_dense, sparse_from_dense, Matrix, SparseVec, Subspace};
use crate::report::Report;

/// Structure constants `(m, u, Δ, ε, S)` on a basis `b_0, ..., b_{n-1}`.
#[derive(Clone, Debug)]
pub struct HopfAlgebra<F: Field> {
    labels: Vec<String>,
    /// `mult[i][j]` = coordinates of `b_i b_j`
    mult: Vec<Vec<SparseVec<F>>>,
    unit: Vec<F>,
    /// `comult[i]` = terms `(j, k, c)` of `Δ(b_i) = Σ c b_j ⊗ b_k`
    comult: Vec<Vec<(usize, usize, F)>>,
    counit: Vec<F>,
    antipode: Matrix<F>,
    antipode_inv: Matrix<F>,
}

impl<F: Field> HopfAlgebra<F> {
    /// Assemble from raw structure constants. Only shapes and invertibility of
    /// the antipode are checked here; the axioms are checked by [`Self::verify_axioms`].
    pub fn from_structure_constants(
        labels: Vec<String>,
        mult: Vec<Vec<Vec<F>>>,
        unit: Vec<F>,
        comult: Vec<Vec<Vec<F>>>,
        counit: Vec<F>,
        antipode: Matrix<F>,
    ) -> Result<Self> {
        let n = labels.len();
        let shape_ok = mult.len() == n
            && mult.iter().all(|r| r.len() == n && r.iter().all(|v| v.len() == n))
            && unit.len() == n
            && comult.len() == n
            && comult.iter().all(|r| r.len() == n && r.iter().all(|v| v.len() == n))
            && counit.len() == n
            && antipode.rows() == n
            && antipode.cols() == n;
        if !shape_ok {
            return Err(Error::Hopf(format!("structure constants do not match dimension {n}")));
        }
        let antipode_inv = antipode.inverse().ok_or_else(|| Error::Hopf("antipode is not invertible".into()))?;
        let mult = mult.iter().map(|r| r.iter().map(|v| sparse_from_dense(v)).collect()).collect();
        let comult = comult
            .iter()
            .map(|m| {
                let mut t = Vec::new();
                for (j, row) in m.iter().enumerate() {
                    for (k, c) in row.iter().enumerate() {
                        if !c.is_zero() {
                            t.push((j, k, c.clone()));
                        }
                    }
                }
                t
            })
            .collect();
        Ok(HopfAlgebra { labels, mult, unit, comult, counit, antipode, antipode_inv })
    }

    /// The group algebra `kG`: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
    pub fn group_algebra(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mult = (0..n).map(|a| (0..n).map(|b| vec![(g.mul(a, b), F::one())]).collect()).collect();
        let mut unit = vec![F::zero(); n];
        unit[g.identity()] = F::one();
        let comult = (0..n).map(|a| vec![(a, a, F::one())]).collect();
        let counit = vec![F::one(); n];
        let antipode = Matrix::from_fn(n, n, |i, j| if i == g.inverse(j) { F::one() } else { F::zero() });
        let antipode_inv = antipode.clone();
        let labels = (0..n).map(|a| g.label(a).to_string()).collect();
        HopfAlgebra { labels, mult, unit, comult, counit, antipode, antipode_inv }
    }

    /// The dual group algebra `kG*` on the delta functions `p_g`.
    pub fn dual_group_algebra(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mult =
            (0..n).map(|a| (0..n).map(|b| if a == b { vec![(a, F::one())] } else { Vec::new() }).collect()).collect();
        let unit = vec![F::one(); n];
        let comult = (0..n)
            .map(|c| {
                let mut t = Vec::new();
                for x in 0..n {
                    let y = g.mul(g.inverse(x), c);
                    t.push((x, y, F::one()));
                }
                t
            })
            .collect();
        let counit = (0..n).map(|a| if a == g.identity() { F::one() } else { F::zero() }).collect();
        let antipode = Matrix::from_fn(n, n, |i, j| if i == g.inverse(j) { F::one() } else { F::zero() });
        let antipode_inv = antipode.clone();
        let labels = (0..n).map(|a| format!("p_{}", g.label(a))).collect();
        HopfAlgebra { labels, mult, unit, comult, counit, antipode, antipode_inv }
    }

    /// The ground field as a one-dimensional Hopf algebra.
    pub fn ground_field() -> Self {
        Self::group_algebra(&FiniteGroup::cyclic(1).expect("trivial group"))
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn antipode_inverse(&self) -> &Matrix<F> {
        &self.antipode_inv
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.mult[i][j]
    }

    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, F)] {
        &self.comult[i]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    axpy_dense(&mut out, &(a.clone() * b.clone()), &self.mult[i][j]);
                }
            }
        }
        out
    }

    /// `Δ(x)` as a dense `n×n` coefficient grid, `[j][k]` for `b_j ⊗ b_k`.
    pub fn comult(&self, x: &[F]) -> Vec<Vec<F>> {
        let n = self.dim();
        let mut out = vec![vec![F::zero(); n]; n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                out[*j][*k] = out[*j][*k].clone() + a.clone() * c.clone();
            }
        }
        out
    }

    /// Sparse terms of `Δ(x)`.
    pub fn comult_terms(&self, x: &[F]) -> Vec<(usize, usize, F)> {
        let grid = self.comult(x);
        let mut t = Vec::new();
        for (j, row) in grid.into_iter().enumerate() {
            for (k, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    t.push((j, k, c));
                }
            }
        }
        t
    }

    /// Terms of `(Δ⊗id)Δ(b_i) = Σ c b_j ⊗ b_k ⊗ b_l`.
    pub fn comult2_basis(&self, i: usize) -> Vec<(usize, usize, usize, F)> {
        let n = self.dim();
        let mut acc: Vec<F> = vec![F::zero(); n * n * n];
        for (a, l, c) in &self.comult[i] {
            for (j, k, c2) in &self.comult[*a] {
                let idx = (j * n + k) * n + l;
                acc[idx] = acc[idx].clone() + c.clone() * c2.clone();
            }
        }
        acc.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (idx / (n * n), (idx / n) % n, idx % n, c))
            .collect()
    }

    pub fn counit_of(&self, x: &[F]) -> F {
        crate::linalg::dot(&self.counit, x)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<F> {
        crate::linalg::unit_vec(self.dim(), i)
    }

    /// Left multiplication by `b_i` as a matrix.
    pub fn left_mul_matrix(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in &self.mult[i][j] {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }

    /// The basis elements are orthogonal idempotents summing to one.
    pub fn basis_is_idempotent_decomposition(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let p = &self.mult[i][j];
                if i == j {
                    p.len() == 1 && p[0].0 == i && p[0].1 == F::one()
                } else {
                    p.is_empty()
                }
            })
        }) && self.unit.iter().all(|c| *c == F::one())
    }

    /// Checks every Hopf algebra axiom on basis elements.
    pub fn verify_axioms(&self) -> Report {
        let n = self.dim();
        let mut r = Report::new("Hopf algebra axioms");
        let e = |i: usize| self.basis_vec(i);
        let label = |i: usize| self.labels[i].clone();

        let mut first = None;
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.mul(&self.mul(&e(i), &e(j)), &e(k));
                    let rhs = self.mul(&e(i), &self.mul(&e(j), &e(k)));
                    if lhs != rhs {
                        first = Some(format!("({} {}) {}", label(i), label(j), label(k)));
                        break 'assoc;
                    }
                }
            }
        }
        r.check("associativity", first.is_none(), first.unwrap_or_default());

        let bad = (0..n).find(|&i| self.mul(&self.unit, &e(i)) != e(i) || self.mul(&e(i), &self.unit) != e(i));
        r.check("unit", bad.is_none(), bad.map(label).unwrap_or_default());

        // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ
        let bad = (0..n).find(|&i| {
            let mut lhs = vec![F::zero(); n * n * n];
            let mut rhs = vec![F::zero(); n * n * n];
            for (a, b, c) in &self.comult[i] {
                for (x, y, c2) in &self.comult[*a] {
                    let idx = (x * n + y) * n + b;
                    lhs[idx] = lhs[idx].clone() + c.clone() * c2.clone();
                }
                for (x, y, c2) in &self.comult[*b] {
                    let idx = (a * n + x) * n + y;
                    rhs[idx] = rhs[idx].clone() + c.clone() * c2.clone();
                }
            }
            lhs != rhs
        });
        r.check("coassociativity", bad.is_none(), bad.map(label).unwrap_or_default());

        let bad = (0..n).find(|&i| {
            let mut left = vec![F::zero(); n];
            let mut right = vec![F::zero(); n];
            for (a, b, c) in &self.comult[i] {
                left[*b] = left[*b].clone() + c.clone() * self.counit[*a].clone();
                right[*a] = right[*a].clone() + c.clone() * self.counit[*b].clone();
            }
            left != e(i) || right != e(i)
        });
        r.check("counit", bad.is_none(), bad.map(label).unwrap_or_default());

        // Δ(xy) = Δ(x)Δ(y)
        let mut first = None;
        'delta: for i in 0..n {
            for j in 0..n {
                let lhs = self.comult(&self.mul(&e(i), &e(j)));
                let mut rhs = vec![vec![F::zero(); n]; n];
                for (a, b, c) in &self.comult[i] {
                    for (x, y, c2) in &self.comult[j] {
                        let c = c.clone() * c2.clone();
                        for (p, u) in &self.mult[*a][*x] {
                            for (q, v) in &self.mult[*b][*y] {
                                rhs[*p][*q] = rhs[*p][*q].clone() + c.clone() * u.clone() * v.clone();
                            }
                        }
                    }
                }
                if lhs != rhs {
                    first = Some(format!("{} {}", label(i), label(j)));
                    break 'delta;
                }
            }
        }
        let unit_ok = self.comult(&self.unit) == {
            let mut g = vec![vec![F::zero(); n]; n];
            for (j, a) in self.unit.iter().enumerate() {
                for (k, b) in self.unit.iter().enumerate() {
                    g[j][k] = a.clone() * b.clone();
                }
            }
            g
        };
        if !unit_ok && first.is_none() {
            first = Some("Δ(1) ≠ 1⊗1".into());
        }
        r.check("comultiplication is an algebra map", first.is_none(), first.unwrap_or_default());

        let mut first = None;
        'eps: for i in 0..n {
            for j in 0..n {
                if self.counit_of(&self.mul(&e(i), &e(j))) != self.counit[i].clone() * self.counit[j].clone() {
                    first = Some(format!("{} {}", label(i), label(j)));
                    break 'eps;
                }
            }
        }
        if self.counit_of(&self.unit) != F::one() && first.is_none() {
            first = Some("ε(1) ≠ 1".into());
        }
        r.check("counit is an algebra map", first.is_none(), first.unwrap_or_default());

        // m(S⊗id)Δ = uε = m(id⊗S)Δ
        let bad = (0..n).find(|&i| {
            let target: Vec<F> = self.unit.iter().map(|u| u.clone() * self.counit[i].clone()).collect();
            let mut left = vec![F::zero(); n];
            let mut right = vec![F::zero(); n];
            for (a, b, c) in &self.comult[i] {
                let sa = self.antipode.column(*a);
                let sb = self.antipode.column(*b);
                let l = self.mul(&sa, &e(*b));
                let rr = self.mul(&e(*a), &sb);
                for k in 0..n {
                    left[k] = left[k].clone() + c.clone() * l[k].clone();
                    right[k] = right[k].clone() + c.clone() * rr[k].clone();
                }
            }
            left != target || right != target
        });
        r.check("antipode", bad.is_none(), bad.map(|i| format!("witness {}", label(i))).unwrap_or_default());
        r
    }

    /// Solve `hΛ = ε(h)Λ`; normalize to `ε(Λ) = 1` when possible.
    pub fn left_integral(&self) -> Result<IntegralCertificate<F>> {
        let n = self.dim();
        let mut rows = Vec::new();
        for h in 0..n {
            let l = self.left_mul_matrix(h);
            for i in 0..n {
                rows.push(
                    (0..n)
                        .map(|j| {
                            let d = if i == j { self.counit[h].clone() } else { F::zero() };
                            l[(i, j)].clone() - d
                        })
                        .collect::<Vec<_>>(),
                );
            }
        }
        let m = Matrix::from_rows(rows, n)?;
        let space = m.kernel_basis();
        if space.is_empty() {
            return Err(Error::Internal("no nonzero left integral".into()));
        }
        match space.iter().find(|v| !self.counit_of(v).is_zero()) {
            Some(v) => {
                let e = self.counit_of(v);
                let element = v.iter().map(|x| x.clone() / e.clone()).collect();
                Ok(IntegralCertificate { element, normalized: true, semisimple: true })
            }
            None => Ok(IntegralCertificate { element: space[0].clone(), normalized: false, semisimple: false }),
        }
    }

    /// Checks that `action[i]` (one matrix per basis element) is a left `H`-module.
    pub fn check_module(&self, action: &[Matrix<F>]) -> Result<()> {
        let n = self.dim();
        if action.len() != n {
            return Err(Error::Action(format!("{} matrices for a {n}-dimensional Hopf algebra", action.len())));
        }
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Action("action matrices are not square of a common size".into()));
        }
        let combine = |v: &[F]| {
            let mut m = Matrix::zeros(dim, dim);
            for (k, c) in v.iter().enumerate() {
                m.add_scaled(c, &action[k]);
            }
            m
        };
        if combine(&self.unit) != Matrix::identity(dim) {
            return Err(Error::Action("the unit does not act as the identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let prod = crate::linalg::sparse_to_dense(&self.mult[i][j], n);
                if combine(&prod) != action[i].mul(&action[j]) {
                    return Err(Error::Action(format!(
                        "action of {} {} is not the product of the actions",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// `X^H = {x : hx = ε(h)x}`, computed by solving the eigen-system and,
    /// when `H` is semisimple, also as the image of `x ↦ Λx`.
    pub fn invariants(&self, action: &[Matrix<F>]) -> Result<Invariants<F>> {
        self.check_module(action)?;
        let dim = action[0].rows();
        let mut rows = Vec::new();
        for (h, m) in action.iter().enumerate() {
            for i in 0..dim {
                rows.push(
                    (0..dim)
                        .map(|j| {
                            let d = if i == j { self.counit[h].clone() } else { F::zero() };
                            m[(i, j)].clone() - d
                        })
                        .collect::<Vec<_>>(),
                );
            }
        }
        let basis = Matrix::from_rows(rows, dim)?.kernel_basis();
        let integral = self.left_integral()?;
        let projector = if integral.semisimple {
            let mut p = Matrix::zeros(dim, dim);
            for (k, c) in integral.element.iter().enumerate() {
                p.add_scaled(c, &action[k]);
            }
            let image = Subspace::spanned_by(&(0..dim).map(|j| p.column(j)).collect::<Vec<_>>(), dim);
            let kernel_route = Subspace::new(basis.clone(), dim)?;
            if !image.same_span(&kernel_route) {
                return Err(Error::Internal("integral projector and eigen-system disagree".into()));
            }
            Some(p)
        } else {
            None
        };
        Ok(Invariants { basis, projector })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralCertificate<F> {
    pub element: Vec<F>,
    /// `ε(Λ) = 1`
    pub normalized: bool,
    pub semisimple: bool,
}

#[derive(Clone, Debug)]
pub struct Invariants<F: Field> {
    pub basis: Vec<Vec<F>>,
    /// `x ↦ Λx` for the normalized integral (semisimple case only).
    pub projector: Option<Matrix<F>>,
}

impl<F: Field> Invariants<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn group_and_dual_group_algebras_are_hopf() {
        for n in [1, 2, 3, 4, 6] {
            let g = cyclic(n);
            for h in [HopfAlgebra::<Rational>::group_algebra(&g), HopfAlgebra::dual_group_algebra(&g)] {
                let r = h.verify_axioms();
                assert!(r.passed(), "{r}");
                let s = h.antipode();
                assert_eq!(s.mul(s), Matrix::identity(h.dim()));
                let int = h.left_integral().unwrap();
                assert!(int.semisimple && int.normalized);
            }
        }
        let v4 = cyclic(2).product(&cyclic(2));
        assert!(HopfAlgebra::<Rational>::group_algebra(&v4).verify_axioms().passed());
        assert!(HopfAlgebra::<Rational>::group_algebra(&FiniteGroup::symmetric3()).verify_axioms().passed());
    }

    #[test]
    fn comultiplication_formulas() {
        let g = cyclic(3);
        let kg = HopfAlgebra::<Rational>::group_algebra(&g);
        assert_eq!(kg.comult_basis(1), &[(1, 1, q(1))]);
        assert_eq!(kg.antipode().column(1), vec![q(0), q(0), q(1)]);
        let dual = HopfAlgebra::<Rational>::dual_group_algebra(&g);
        let mut d: Vec<(usize, usize)> = dual.comult_basis(0).iter().map(|(a, b, _)| (*a, *b)).collect();
        d.sort();
        assert_eq!(d, vec![(0, 0), (1, 2), (2, 1)]);
    }

    /// The dual of `kG` is obtained by transposing structure constants:
    /// `m* = Δ^T`, `Δ* = m^T`, `ε* = u`, `u* = ε`, `S* = S^T`.
    #[test]
    fn dual_group_algebra_is_transposed_group_algebra() {
        for g in [cyclic(3), cyclic(4), FiniteGroup::symmetric3()] {
            let kg = HopfAlgebra::<Rational>::group_algebra(&g);
            let dual = HopfAlgebra::<Rational>::dual_group_algebra(&g);
            let n = g.order();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        // coefficient of b_k in p_i p_j equals coefficient of b_i⊗b_j in Δ(b_k)
                        let m_dual = dual.mul_basis(i, j).iter().find(|e| e.0 == k).map(|e| e.1.clone()).unwrap_or_else(Rational::zero);
                        let d_kg = kg.comult(&kg.basis_vec(k))[i][j].clone();
                        assert_eq!(m_dual, d_kg);
                        // coefficient of p_j⊗p_k in Δ(p_i) equals coefficient of b_i in b_j b_k
                        let d_dual = dual.comult(&dual.basis_vec(i))[j][k].clone();
                        let m_kg = kg.mul_basis(j, k).iter().find(|e| e.0 == i).map(|e| e.1.clone()).unwrap_or_else(Rational::zero);
                        assert_eq!(d_dual, m_kg);
                    }
                }
                assert_eq!(dual.counit()[i], kg.unit()[i]);
                assert_eq!(dual.unit()[i], kg.counit()[i]);
            }
            assert_eq!(*dual.antipode(), kg.antipode().transpose());
        }
    }

    #[test]
    fn broken_antipode_is_reported() {
        let g = cyclic(3);
        let kg = HopfAlgebra::<Rational>::group_algebra(&g);
        let broken = HopfAlgebra::from_structure_constants(
            kg.labels().to_vec(),
            (0..3).map(|i| (0..3).map(|j| crate::linalg::sparse_to_dense(kg.mul_basis(i, j), 3)).collect()).collect(),
            kg.unit().to_vec(),
            (0..3).map(|i| kg.comult(&kg.basis_vec(i))).collect(),
            kg.counit().to_vec(),
            Matrix::identity(3),
        )
        .unwrap();
        let r = broken.verify_axioms();
        assert!(!r.passed());
        let f = r.first_failure().unwrap();
        assert_eq!(f.name, "antipode");
        assert!(f.detail.contains("witness 1"));
    }

    #[test]
    fn integrals() {
        let g = cyclic(3);
        let kg = HopfAlgebra::<Rational>::group_algebra(&g);
        let third = Rational::from_ratio(1, 3);
        assert_eq!(kg.left_integral().unwrap().element, vec![third.clone(), third.clone(), third]);
        let dual = HopfAlgebra::<Rational>::dual_group_algebra(&g);
        assert_eq!(dual.left_integral().unwrap().element, vec![q(1), q(0), q(0)]);
        assert_eq!(HopfAlgebra::<Rational>::ground_field().left_integral().unwrap().element, vec![q(1)]);
    }

    #[test]
    fn invariants_two_routes() {
        // trivial action
        let g = cyclic(3);
        let kg = HopfAlgebra::<Rational>::group_algebra(&g);
        let triv: Vec<_> = (0..3).map(|_| Matrix::<Rational>::identity(2)).collect();
        assert_eq!(kg.invariants(&triv).unwrap().dim(), 2);

        // kG* on a Z/3-graded space with components of dims 2,1,1
        let dual = HopfAlgebra::<Rational>::dual_group_algebra(&g);
        let degs = [0, 0, 1, 2];
        let proj: Vec<_> = (0..3)
            .map(|h| Matrix::from_fn(4, 4, |i, j| if i == j && degs[i] == h { q(1) } else { q(0) }))
            .collect();
        let inv = dual.invariants(&proj).unwrap();
        assert_eq!(inv.dim(), 2);
        assert!(inv.basis.iter().all(|v| v[2].is_zero() && v[3].is_zero()));

        // regular representation of kZ/2
        let c2 = cyclic(2);
        let k2 = HopfAlgebra::<Rational>::group_algebra(&c2);
        let reg: Vec<_> = (0..2).map(|h| k2.left_mul_matrix(h)).collect();
        let inv = k2.invariants(&reg).unwrap();
        assert_eq!(inv.basis, vec![vec![q(1), q(1)]]);

        // a non-module is rejected
        let bad = vec![Matrix::identity(2), Matrix::identity(2).scale(&q(2))];
        assert!(k2.invariants(&bad).is_err());
    }

    #[test]
    fn antipode_and_counit_identities() {
        for h in [HopfAlgebra::<Rational>::group_algebra(&cyclic(4)), HopfAlgebra::dual_group_algebra(&cyclic(4))] {
            for i in 0..h.dim() {
                let s = h.antipode().column(i);
                assert_eq!(h.counit_of(&s), h.counit()[i]);
            }
            assert_eq!(h.antipode().mul_vec(h.unit()), h.unit().to_vec());
        }
    }
}
