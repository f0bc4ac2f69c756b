//! Finite-dimensional dg algebras by structure constants, their cohomology
//! algebras, `H`-actions compatible with the differential and dg smash products.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::linalg::{axpy_dense, sparse_from_dense, unit_vec, Echelon, Matrix, SparseVec, Subspace};
use crate::report::Report;

fn sign<F: Field>(k: i64) -> F {
    if k.rem_euclid(2) == 0 {
        F::one()
    } else {
        -F::one()
    }
}

/// A dg algebra on a finite basis: `mult[i][j]` is `e_i e_j`, column `j` of
/// `diff` is `d(e_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DgAlgebra<F: Field> {
    degrees: Vec<i64>,
    labels: Vec<String>,
    mult: Vec<Vec<SparseVec<F>>>,
    unit: Vec<F>,
    diff: Matrix<F>,
}

impl<F: Field> DgAlgebra<F> {
    pub fn new(
        degrees: Vec<i64>,
        labels: Vec<String>,
        mult: Vec<Vec<Vec<F>>>,
        unit: Vec<F>,
        diff: Matrix<F>,
    ) -> Result<Self> {
        let n = degrees.len();
        if labels.len() != n || unit.len() != n || diff.rows() != n || diff.cols() != n {
            return Err(Error::Dimension(format!("dg algebra of dimension {n}")));
        }
        if mult.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::Dimension(format!("multiplication table must be {n}×{n}×{n}")));
        }
        let mult = mult.iter().map(|r| r.iter().map(|v| sparse_from_dense(v)).collect()).collect();
        Ok(DgAlgebra { degrees, labels, mult, unit, diff })
    }

    /// A graded algebra with zero differential, from the product of basis elements.
    pub fn with_zero_differential(
        degrees: Vec<i64>,
        labels: Vec<String>,
        mult: Vec<Vec<Vec<F>>>,
        unit: Vec<F>,
    ) -> Result<Self> {
        let n = degrees.len();
        Self::new(degrees, labels, mult, unit, Matrix::zeros(n, n))
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn differential(&self) -> &Matrix<F> {
        &self.diff
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.mult[i][j]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy_dense(&mut out, &(xi.clone() * yj.clone()), &self.mult[i][j]);
                }
            }
        }
        out
    }

    pub fn d(&self, x: &[F]) -> Vec<F> {
        self.diff.mul_vec(x)
    }

    /// Basis indices of degree `n`.
    pub fn basis_of_degree(&self, n: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == n).collect()
    }

    /// Distinct degrees, increasing.
    pub fn degree_range(&self) -> Vec<i64> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `x` is homogeneous of degree `n`.
    fn supported_in(&self, x: &[F], n: i64) -> bool {
        x.iter().enumerate().all(|(i, c)| c.is_zero() || self.degrees[i] == n)
    }

    /// Graded tensor product `A ⊗ B` with `(a⊗b)(a'⊗b') = (−1)^{|b||a'|} aa' ⊗ bb'`
    /// and `d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db`; basis `a ⊗ b` at `a · dim B + b`.
    pub fn tensor(&self, other: &DgAlgebra<F>) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let idx = |a: usize, b: usize| a * m + b;
        let mut degrees = Vec::with_capacity(n * m);
        let mut labels = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in 0..m {
                degrees.push(self.degrees[a] + other.degrees[b]);
                labels.push(format!("{}⊗{}", self.labels[a], other.labels[b]));
            }
        }
        let mut mult = vec![vec![vec![F::zero(); n * m]; n * m]; n * m];
        for a in 0..n {
            for b in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        let s: F = sign(other.degrees[b] * self.degrees[a2]);
                        let out = &mut mult[idx(a, b)][idx(a2, b2)];
                        for (x, cx) in &self.mult[a][a2] {
                            for (y, cy) in &other.mult[b][b2] {
                                out[idx(*x, *y)] = out[idx(*x, *y)].clone() + s.clone() * cx.clone() * cy.clone();
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![F::zero(); n * m];
        for a in 0..n {
            for b in 0..m {
                unit[idx(a, b)] = self.unit[a].clone() * other.unit[b].clone();
            }
        }
        let mut diff: Matrix<F> = Matrix::zeros(n * m, n * m);
        for a in 0..n {
            for b in 0..m {
                for x in 0..n {
                    let c = &self.diff[(x, a)];
                    if !c.is_zero() {
                        diff[(idx(x, b), idx(a, b))] = diff[(idx(x, b), idx(a, b))].clone() + c.clone();
                    }
                }
                let s: F = sign(self.degrees[a]);
                for y in 0..m {
                    let c = &other.diff[(y, b)];
                    if !c.is_zero() {
                        diff[(idx(a, y), idx(a, b))] = diff[(idx(a, y), idx(a, b))].clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        let mult = mult.iter().map(|r| r.iter().map(|v| sparse_from_dense(v)).collect()).collect();
        DgAlgebra { degrees, labels, mult, unit, diff }
    }
}

/// Associativity, unit, degrees, `d² = 0` and the graded Leibniz rule on basis elements.
pub fn verify_dg<F: Field>(a: &DgAlgebra<F>) -> Report {
    let n = a.dim();
    let mut r = Report::new("dg algebra");
    let e = |i: usize| unit_vec::<F>(n, i);
    let mut first = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = a.mul(&e(i), &e(j));
            for k in 0..n {
                if a.mul(&ij, &e(k)) != a.mul(&e(i), &a.mul(&e(j), &e(k))) {
                    first = Some(format!("({} {}) {}", a.labels[i], a.labels[j], a.labels[k]));
                    break 'assoc;
                }
            }
        }
    }
    r.check("associative", first.is_none(), first.unwrap_or_default());
    let unit_ok = (0..n).all(|i| a.mul(&a.unit, &e(i)) == e(i) && a.mul(&e(i), &a.unit) == e(i));
    r.check("unit", unit_ok && a.supported_in(&a.unit, 0), "");
    let graded = (0..n).all(|i| (0..n).all(|j| a.mult[i][j].iter().all(|(k, _)| a.degrees[*k] == a.degrees[i] + a.degrees[j])));
    r.check("product is degree-additive", graded, "");
    let d_degree = (0..n).find(|&i| !a.supported_in(&a.diff.column(i), a.degrees[i] + 1));
    r.check("d has degree +1", d_degree.is_none(), d_degree.map(|i| a.labels[i].clone()).unwrap_or_default());
    let d2 = (0..n).find(|&i| !a.d(&a.d(&e(i))).iter().all(|c| c.is_zero()));
    r.check("d² = 0", d2.is_none(), d2.map(|i| format!("d²({}) ≠ 0", a.labels[i])).unwrap_or_default());
    let mut leibniz = None;
    'leib: for i in 0..n {
        for j in 0..n {
            let lhs = a.d(&a.mul(&e(i), &e(j)));
            let s: F = sign(a.degrees[i]);
            let mut rhs = a.mul(&a.d(&e(i)), &e(j));
            for (k, v) in a.mul(&e(i), &a.d(&e(j))).into_iter().enumerate() {
                rhs[k] = rhs[k].clone() + s.clone() * v;
            }
            if lhs != rhs {
                leibniz = Some(format!("d({} {})", a.labels[i], a.labels[j]));
                break 'leib;
            }
        }
    }
    r.check("d(ab) = d(a)b + (−1)^{|a|} a d(b)", leibniz.is_none(), leibniz.unwrap_or_default());
    r
}

/// `H(A)` with a chosen section: `reps[k]` is a cocycle representing the `k`-th class.
#[derive(Clone, Debug)]
pub struct CohomologyAlgebra<F: Field> {
    degrees: Vec<i64>,
    reps: Vec<Vec<F>>,
    /// `mult[i][j]` = coordinates of `[rep_i rep_j]`
    mult: Vec<Vec<Vec<F>>>,
    /// per degree: the classes of that degree and a coordinate system on `reps ∪ boundaries`
    by_degree: BTreeMap<i64, (Vec<usize>, Subspace<F>)>,
}

impl<F: Field> CohomologyAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn representatives(&self) -> &[Vec<F>] {
        &self.reps
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<F>>] {
        &self.mult
    }

    /// `degree → dim H^degree`, nonzero entries only.
    pub fn dims(&self) -> BTreeMap<i64, usize> {
        let mut t = BTreeMap::new();
        for d in &self.degrees {
            *t.entry(*d).or_insert(0) += 1;
        }
        t
    }

    /// Coordinates of the class of a homogeneous cocycle of degree `n`.
    pub fn class_of(&self, z: &[F], n: i64) -> Option<Vec<F>> {
        let mut out = vec![F::zero(); self.dim()];
        let Some((classes, coords)) = self.by_degree.get(&n) else {
            return z.iter().all(|c| c.is_zero()).then_some(out);
        };
        let c = coords.coordinates(z)?;
        for (k, &cls) in classes.iter().enumerate() {
            out[cls] = c[k].clone();
        }
        Some(out)
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                if xi.is_zero() || yj.is_zero() {
                    continue;
                }
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    out[k] = out[k].clone() + xi.clone() * yj.clone() * c.clone();
                }
            }
        }
        out
    }
}

/// Cohomology with the section given by the first cocycles (in the order of
/// the reduced kernel basis) independent of the boundaries; with `perturb`,
/// every representative is moved by a seeded random boundary.
fn cohomology_with<F: Field>(a: &DgAlgebra<F>, perturb: Option<u64>) -> Result<CohomologyAlgebra<F>> {
    let n = a.dim();
    let mut rng = crate::rng(perturb.unwrap_or(0));
    let mut degrees = Vec::new();
    let mut reps: Vec<Vec<F>> = Vec::new();
    let mut by_degree = BTreeMap::new();
    for deg in a.degree_range() {
        let idx = a.basis_of_degree(deg);
        let d_here = Matrix::from_columns(&idx.iter().map(|&i| a.diff.column(i)).collect::<Vec<_>>(), n);
        let cycles: Vec<Vec<F>> = d_here
            .kernel_basis()
            .into_iter()
            .map(|k| {
                let mut v = vec![F::zero(); n];
                for (c, &i) in k.iter().zip(&idx) {
                    v[i] = c.clone();
                }
                v
            })
            .collect();
        let mut ech = Echelon::new(n);
        let mut boundaries = Vec::new();
        for i in a.basis_of_degree(deg - 1) {
            let b = a.diff.column(i);
            if ech.insert_dense(&b) {
                boundaries.push(b);
            }
        }
        let mut classes = Vec::new();
        let mut chosen = Vec::new();
        for z in cycles {
            if ech.insert_dense(&z) {
                let mut z = z;
                if perturb.is_some() {
                    for b in &boundaries {
                        let c = F::from_int(rng.gen_range(-3..=3));
                        for (k, v) in b.iter().enumerate() {
                            z[k] = z[k].clone() + c.clone() * v.clone();
                        }
                    }
                }
                classes.push(reps.len() + chosen.len());
                chosen.push(z);
            }
        }
        let mut joint = chosen.clone();
        joint.extend(boundaries);
        by_degree.insert(deg, (classes, Subspace::new(joint, n)?));
        degrees.extend(std::iter::repeat(deg).take(chosen.len()));
        reps.extend(chosen);
    }
    let mut h = CohomologyAlgebra { degrees, reps, mult: Vec::new(), by_degree };
    let mut mult = vec![vec![Vec::new(); h.dim()]; h.dim()];
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let p = a.mul(&h.reps[i], &h.reps[j]);
            mult[i][j] = h
                .class_of(&p, h.degrees[i] + h.degrees[j])
                .ok_or_else(|| Error::Dg("product of cocycles is not a cocycle".into()))?;
        }
    }
    h.mult = mult;
    Ok(h)
}

/// `H(A)` with its induced product, checked against a second section.
pub fn cohomology_algebra<F: Field>(a: &DgAlgebra<F>) -> Result<(CohomologyAlgebra<F>, Report)> {
    let h = cohomology_with(a, None)?;
    let other = cohomology_with(a, Some(1))?;
    let mut r = Report::new("cohomology algebra");
    r.set("dims", h.dims().iter().map(|(d, n)| serde_json::json!({"degree": d, "dim": n})).collect::<Vec<_>>());
    r.check(
        "product independent of representatives",
        h.mult == other.mult,
        if h.reps == other.reps { "no boundaries to move the representatives by" } else { "" },
    );
    let chi_a: i64 = a.degrees.iter().map(|d| if d.rem_euclid(2) == 0 { 1 } else { -1 }).sum();
    let chi_h: i64 = h.degrees.iter().map(|d| if d.rem_euclid(2) == 0 { 1 } else { -1 }).sum();
    r.check("Euler characteristic preserved", chi_a == chi_h, format!("{chi_a} and {chi_h}"));
    Ok((h, r))
}

/// `H` acting on a dg algebra by matrices on its basis.
#[derive(Clone, Debug)]
pub struct DgAction<F: Field> {
    hopf: HopfAlgebra<F>,
    rho: Vec<Matrix<F>>,
}

impl<F: Field> DgAction<F> {
    pub fn new(hopf: HopfAlgebra<F>, rho: Vec<Matrix<F>>) -> Result<Self> {
        if rho.len() != hopf.dim() {
            return Err(Error::Action(format!("need one matrix per basis element of H ({})", hopf.dim())));
        }
        hopf.check_module(&rho)?;
        Ok(DgAction { hopf, rho })
    }

    /// `h·a = ε(h)a`.
    pub fn trivial(hopf: HopfAlgebra<F>, a: &DgAlgebra<F>) -> Self {
        let rho = hopf.counit().iter().map(|c| Matrix::identity(a.dim()).scale(c)).collect();
        DgAction { hopf, rho }
    }

    pub fn hopf(&self) -> &HopfAlgebra<F> {
        &self.hopf
    }

    pub fn matrix(&self, h: usize) -> &Matrix<F> {
        &self.rho[h]
    }
}

/// The dg `H`-module algebra axioms, including `d(h·a) = h·d(a)`.
pub fn verify_dg_action<F: Field>(a: &DgAlgebra<F>, act: &DgAction<F>) -> Report {
    let hopf = &act.hopf;
    let n = a.dim();
    let mut r = Report::new("dg H-module algebra");
    let e = |i: usize| unit_vec::<F>(n, i);
    let unit = (0..hopf.dim()).all(|h| act.rho[h].mul_vec(&a.unit) == crate::linalg::scale_vec(&hopf.counit()[h], &a.unit));
    r.check("h·1 = ε(h)1", unit, "");
    let degrees = act.rho.iter().all(|m| (0..n).all(|j| a.supported_in(&m.column(j), a.degrees[j])));
    r.check("action preserves degrees", degrees, "");
    let mut first = None;
    'ma: for h in 0..hopf.dim() {
        for i in 0..n {
            for j in 0..n {
                let lhs = act.rho[h].mul_vec(&a.mul(&e(i), &e(j)));
                let mut rhs = vec![F::zero(); n];
                for (h1, h2, c) in hopf.comult_basis(h) {
                    let p = a.mul(&act.rho[*h1].column(i), &act.rho[*h2].column(j));
                    for (k, v) in p.into_iter().enumerate() {
                        rhs[k] = rhs[k].clone() + c.clone() * v;
                    }
                }
                if lhs != rhs {
                    first = Some(format!("{}·({} {})", hopf.labels()[h], a.labels[i], a.labels[j]));
                    break 'ma;
                }
            }
        }
    }
    r.check("h·(ab) = (h₁·a)(h₂·b)", first.is_none(), first.unwrap_or_default());
    let mut commute = None;
    'dc: for h in 0..hopf.dim() {
        for i in 0..n {
            let lhs = a.d(&act.rho[h].column(i));
            let rhs = act.rho[h].mul_vec(&a.d(&e(i)));
            if lhs != rhs {
                commute = Some(format!(
                    "d({}·{}) = {} but {}·d({}) = {}",
                    hopf.labels()[h],
                    a.labels[i],
                    show(&lhs, &a.labels),
                    hopf.labels()[h],
                    a.labels[i],
                    show(&rhs, &a.labels)
                ));
                break 'dc;
            }
        }
    }
    r.check("d(h·a) = h·d(a)", commute.is_none(), commute.unwrap_or_default());
    r
}

fn show<F: Field>(v: &[F], labels: &[String]) -> String {
    crate::algebra::combination_label(v, labels)
}

/// `A#H` with `(a#h)(b#g) = a(h₁·b) # h₂g` and `δ = d⊗id`; basis `a#h` at `a · dim H + h`.
pub fn dg_smash<F: Field>(a: &DgAlgebra<F>, act: &DgAction<F>) -> DgAlgebra<F> {
    let hopf = &act.hopf;
    let (n, m) = (a.dim(), hopf.dim());
    let idx = |x: usize, h: usize| x * m + h;
    let mut degrees = Vec::with_capacity(n * m);
    let mut labels = Vec::with_capacity(n * m);
    for x in 0..n {
        for h in 0..m {
            degrees.push(a.degrees[x]);
            labels.push(format!("{}#{}", a.labels[x], hopf.labels()[h]));
        }
    }
    let mut mult = vec![vec![vec![F::zero(); n * m]; n * m]; n * m];
    for x in 0..n {
        for h in 0..m {
            for y in 0..n {
                for g in 0..m {
                    let out = &mut mult[idx(x, h)][idx(y, g)];
                    for (h1, h2, c) in hopf.comult_basis(h) {
                        let hy = act.rho[*h1].column(y);
                        let p = a.mul(&unit_vec(n, x), &hy);
                        for (k, pk) in p.iter().enumerate() {
                            if pk.is_zero() {
                                continue;
                            }
                            for (l, cl) in hopf.mul_basis(*h2, g) {
                                out[idx(k, *l)] = out[idx(k, *l)].clone() + c.clone() * pk.clone() * cl.clone();
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![F::zero(); n * m];
    for x in 0..n {
        for h in 0..m {
            unit[idx(x, h)] = a.unit[x].clone() * hopf.unit()[h].clone();
        }
    }
    let diff = a.diff.kron(&Matrix::identity(m));
    let mult = mult.iter().map(|r| r.iter().map(|v| sparse_from_dense(v)).collect()).collect();
    DgAlgebra { degrees, labels, mult, unit, diff }
}

/// `H(A#H) ≅ H(A)#H`: builds both sides, and checks that `[z]#h ↦ [z#h]` is
/// a degree-preserving bijection that intertwines the products.
pub fn dg_smash_cohomology_check<F: Field>(a: &DgAlgebra<F>, act: &DgAction<F>) -> Result<Report> {
    let action = verify_dg_action(a, act);
    if !action.passed() {
        let c = action.first_failure().expect("failed report has a failing check");
        return Err(Error::Action(format!("{}: {}", c.name, c.detail)));
    }
    let hopf = &act.hopf;
    let m = hopf.dim();
    let mut r = Report::new("H(A#H) ≅ H(A)#H");
    let (ha, rep_a) = cohomology_algebra(a)?;
    r.absorb(&rep_a);
    let smash = dg_smash(a, act);
    r.absorb(&verify_dg(&smash));
    let (hs, rep_s) = cohomology_algebra(&smash)?;
    r.absorb(&rep_s);

    // H acting on H(A) through representatives
    let rho_h: Vec<Matrix<F>> = (0..m)
        .map(|h| {
            let cols = (0..ha.dim())
                .map(|k| {
                    ha.class_of(&act.rho[h].mul_vec(&ha.reps[k]), ha.degrees[k])
                        .ok_or_else(|| Error::Internal("H does not preserve cocycles".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(&cols, ha.dim()))
        })
        .collect::<Result<_>>()?;
    // ([z]#h)([w]#g) = [z](h₁·[w]) # h₂g in H(A)#H, basis [z]#h at z · m + h
    let nd = ha.dim() * m;
    let smash_mul = |x: usize, y: usize| -> Vec<F> {
        let (z, h) = (x / m, x % m);
        let (w, g) = (y / m, y % m);
        let mut out = vec![F::zero(); nd];
        for (h1, h2, c) in hopf.comult_basis(h) {
            let hw = rho_h[*h1].column(w);
            let p = ha.mul(&unit_vec(ha.dim(), z), &hw);
            for (k, pk) in p.iter().enumerate() {
                if pk.is_zero() {
                    continue;
                }
                for (l, cl) in hopf.mul_basis(*h2, g) {
                    out[k * m + l] = out[k * m + l].clone() + c.clone() * pk.clone() * cl.clone();
                }
            }
        }
        out
    };
    let phi_cols = (0..nd)
        .map(|x| {
            let (z, h) = (x / m, x % m);
            let mut v = vec![F::zero(); smash.dim()];
            for (i, c) in ha.reps[z].iter().enumerate() {
                v[i * m + h] = c.clone();
            }
            hs.class_of(&v, ha.degrees[z]).ok_or_else(|| Error::Internal("z#h is not a cocycle".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let phi = Matrix::from_columns(&phi_cols, hs.dim());
    let dims_a: BTreeMap<i64, usize> = ha.dims().into_iter().map(|(d, k)| (d, k * m)).collect();
    r.set("smash_cohomology_dims", hs.dims().iter().map(|(d, k)| serde_json::json!({"degree": d, "dim": k})).collect::<Vec<_>>());
    r.set("cohomology_dims", ha.dims().iter().map(|(d, k)| serde_json::json!({"degree": d, "dim": k})).collect::<Vec<_>>());
    r.check("dim H^n(A#H) = dim H^n(A) · dim H", hs.dims() == dims_a, "");
    r.check(
        "[z]#h ↦ [z#h] is bijective",
        phi.rows() == nd && phi.rank() == nd,
        format!("rank {} for dimensions {nd} and {}", phi.rank(), hs.dim()),
    );
    let mut first = None;
    for x in 0..nd {
        for y in 0..nd {
            let lhs = phi.mul_vec(&smash_mul(x, y));
            let rhs = hs.mul(&phi.column(x), &phi.column(y));
            if first.is_none() && lhs != rhs {
                first = Some(format!("classes {x} and {y}"));
            }
        }
    }
    r.check("the identification intertwines products", first.is_none(), first.unwrap_or_default());
    Ok(r)
}

/// Instances used by the demos and tests.
pub mod examples {
    use super::*;

    fn table<F: Field>(n: usize, entries: &[(usize, usize, usize, i64)]) -> Vec<Vec<Vec<F>>> {
        let mut m = vec![vec![vec![F::zero(); n]; n]; n];
        for &(i, j, k, c) in entries {
            m[i][j][k] = F::from_int(c);
        }
        m
    }

    /// `span{1, a, a²}` with `|a| = 1`, `a³ = 0`, `d(a) = a²`.
    pub fn truncated_cubic<F: Field>() -> DgAlgebra<F> {
        let mult = table(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (1, 0, 1, 1), (2, 0, 2, 1), (1, 1, 2, 1)]);
        let mut diff = Matrix::zeros(3, 3);
        diff[(2, 1)] = F::one();
        DgAlgebra::new(vec![0, 1, 2], vec!["1".into(), "a".into(), "a²".into()], mult, unit_vec(3, 0), diff)
            .expect("consistent sizes")
    }

    /// `Λ(u) ⊗ k[v]/(v²)` with `|u| = 1`, `|v| = 2`, `d(u) = v`; basis `1, u, v, uv`.
    pub fn exterior_koszul<F: Field>() -> DgAlgebra<F> {
        let mult = table(
            4,
            &[
                (0, 0, 0, 1),
                (0, 1, 1, 1),
                (0, 2, 2, 1),
                (0, 3, 3, 1),
                (1, 0, 1, 1),
                (2, 0, 2, 1),
                (3, 0, 3, 1),
                (1, 2, 3, 1),
                (2, 1, 3, 1),
            ],
        );
        let mut diff = Matrix::zeros(4, 4);
        diff[(2, 1)] = F::one();
        DgAlgebra::new(
            vec![0, 1, 2, 3],
            vec!["1".into(), "u".into(), "v".into(), "uv".into()],
            mult,
            unit_vec(4, 0),
            diff,
        )
        .expect("consistent sizes")
    }

    /// `kZ/2` with the generator acting by `−1` on the listed basis elements and `1` elsewhere.
    pub fn sign_action<F: Field>(a: &DgAlgebra<F>, negated: &[usize]) -> Result<DgAction<F>> {
        let hopf = HopfAlgebra::group_algebra(&crate::group::FiniteGroup::cyclic(2)?);
        let g = Matrix::from_fn(a.dim(), a.dim(), |i, j| {
            if i != j {
                F::zero()
            } else if negated.contains(&i) {
                -F::one()
            } else {
                F::one()
            }
        });
        DgAction::new(hopf, vec![Matrix::identity(a.dim()), g])
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;
    use crate::Rational;

    fn dims(h: &CohomologyAlgebra<Rational>) -> Vec<(i64, usize)> {
        h.dims().into_iter().collect()
    }

    #[test]
    fn truncated_cubic_has_trivial_cohomology() {
        let a: DgAlgebra<Rational> = truncated_cubic();
        assert!(verify_dg(&a).passed(), "{}", verify_dg(&a));
        let (h, r) = cohomology_algebra(&a).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(dims(&h), vec![(0, 1)]);
    }

    #[test]
    fn broken_differential_is_caught() {
        let mut a: DgAlgebra<Rational> = truncated_cubic();
        a.diff[(2, 2)] = Rational::from_int(1);
        let r = verify_dg(&a);
        assert!(!r.passed());
        assert!(r.checks.iter().any(|c| !c.passed && c.name == "d² = 0" && c.detail.contains('a')), "{r}");
    }

    #[test]
    fn zero_differential_gives_the_algebra_back() {
        let mut a: DgAlgebra<Rational> = exterior_koszul();
        a.diff = Matrix::zeros(4, 4);
        let (h, _) = cohomology_algebra(&a).unwrap();
        assert_eq!(h.dim(), 4);
        let act = sign_action(&a, &[1, 2]).unwrap();
        let r = dg_smash_cohomology_check(&a, &act).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn sign_action_does_not_commute_with_the_differential_on_the_truncated_cubic() {
        let a: DgAlgebra<Rational> = truncated_cubic();
        let act = sign_action(&a, &[1]).unwrap();
        let err = dg_smash_cohomology_check(&a, &act).unwrap_err();
        assert!(err.to_string().contains("d(h·a) = h·d(a)"), "{err}");
        let trivial = DgAction::trivial(HopfAlgebra::group_algebra(&crate::FiniteGroup::cyclic(2).unwrap()), &a);
        let r = dg_smash_cohomology_check(&a, &trivial).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.data["smash_cohomology_dims"], serde_json::json!([{"degree": 0, "dim": 2}]));
    }

    #[test]
    fn sign_action_on_exterior_koszul() {
        let a: DgAlgebra<Rational> = exterior_koszul();
        assert!(verify_dg(&a).passed());
        let (h, _) = cohomology_algebra(&a).unwrap();
        assert_eq!(dims(&h), vec![(0, 1), (3, 1)]);
        let act = sign_action(&a, &[1, 2]).unwrap();
        assert!(verify_dg_action(&a, &act).passed());
        let r = dg_smash_cohomology_check(&a, &act).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(
            r.data["smash_cohomology_dims"],
            serde_json::json!([{"degree": 0, "dim": 2}, {"degree": 3, "dim": 2}])
        );
    }

    #[test]
    fn kunneth_with_a_zero_differential_factor() {
        let a: DgAlgebra<Rational> = truncated_cubic();
        let mut b: DgAlgebra<Rational> = exterior_koszul();
        b.diff = Matrix::zeros(4, 4);
        let t = a.tensor(&b);
        assert!(verify_dg(&t).passed(), "{}", verify_dg(&t));
        let (ht, r) = cohomology_algebra(&t).unwrap();
        assert!(r.passed());
        let (ha, _) = cohomology_algebra(&a).unwrap();
        for n in -1..=6 {
            let want: usize = ha
                .dims()
                .iter()
                .map(|(i, k)| k * b.degrees().iter().filter(|&&d| d == n - i).count())
                .sum();
            assert_eq!(ht.dims().get(&n).copied().unwrap_or(0), want, "degree {n}");
        }
    }

    #[test]
    fn ground_field_hopf_algebra_is_a_tautology() {
        let a: DgAlgebra<Rational> = exterior_koszul();
        let act = DgAction::trivial(HopfAlgebra::ground_field(), &a);
        let r = dg_smash_cohomology_check(&a, &act).unwrap();
        assert!(r.passed(), "{r}");
    }
}
