//! Finite-dimensional `A#H`-modules as matrices, their `Hom` spaces with the
//! conjugation action of `H`, the tensor-hom adjunction and the map `θ`
//! comparing `Hom_A(P, P)#H` with `Hom_{A#H}(P⊗H, P⊗H)`.
//!
//! `A` sits in cohomological degree 0; modules may carry cohomological
//! degrees, which enter through the Koszul signs.

use rand::Rng;

use crate::action::HAction;
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::hopf::HopfAlgebra;
use crate::linalg::{sparse_kernel, unit_vec, Matrix, SparseVec, Subspace};
use crate::report::Report;
use crate::resolution::{free_module_action, FreeModule, MinimalResolution};

fn sign<F: Field>(a: i64, b: i64) -> F {
    if (a * b).rem_euclid(2) == 0 {
        F::one()
    } else {
        -F::one()
    }
}

fn combine<F: Field>(coeffs: &[F], mats: &[Matrix<F>], rows: usize, cols: usize) -> Matrix<F> {
    let mut m = Matrix::zeros(rows, cols);
    for (c, x) in coeffs.iter().zip(mats) {
        if !c.is_zero() {
            m.add_scaled(c, x);
        }
    }
    m
}

fn flatten<F: Field>(m: &Matrix<F>) -> Vec<F> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

/// A finite-dimensional `H`-module with cohomological degrees.
#[derive(Clone, Debug)]
pub struct HModule<F: Field> {
    pub cdeg: Vec<i64>,
    pub action: Vec<Matrix<F>>,
}

impl<F: Field> HModule<F> {
    /// `H` acting on itself by left multiplication.
    pub fn regular(hopf: &HopfAlgebra<F>) -> Self {
        HModule { cdeg: vec![0; hopf.dim()], action: (0..hopf.dim()).map(|h| hopf.left_mul_matrix(h)).collect() }
    }

    /// `k` with `h` acting by `ε(h)`.
    pub fn trivial(hopf: &HopfAlgebra<F>) -> Self {
        HModule {
            cdeg: vec![0],
            action: hopf.counit().iter().map(|c| Matrix::from_fn(1, 1, |_, _| c.clone())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.cdeg.len()
    }
}

/// A finite-dimensional `A#H`-module: `a_action[d][b]` is the matrix of the
/// basis element `b` of `A_d`, `h_action[h]` that of the basis element `h` of `H`.
#[derive(Clone, Debug)]
pub struct ModuleRep<F: Field> {
    pub cdeg: Vec<i64>,
    pub a_action: Vec<Vec<Matrix<F>>>,
    pub h_action: Vec<Matrix<F>>,
}

impl<F: Field> ModuleRep<F> {
    pub fn dim(&self) -> usize {
        self.cdeg.len()
    }

    /// `A/A_{>top}` with `A` acting by left multiplication and `H` through the action on `A`.
    pub fn regular(a: &GradedAlgebra<F>, act: &HAction<F>, top: usize) -> Self {
        let top = top.min(a.top_degree()).min(act.top_degree());
        let offsets: Vec<usize> = (0..=top + 1).map(|e| (0..e).map(|k| a.dim(k)).sum()).collect();
        let n = offsets[top + 1];
        let a_action = (0..=a.top_degree())
            .map(|d| {
                (0..a.dim(d))
                    .map(|b| {
                        let mut m = Matrix::zeros(n, n);
                        for e in 0..=top {
                            if d + e > top {
                                break;
                            }
                            for c in 0..a.dim(e) {
                                for (k, v) in a.mul_basis(d, b, e, c) {
                                    m[(offsets[d + e] + k, offsets[e] + c)] = v.clone();
                                }
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        let h_action = (0..act.hopf().dim())
            .map(|h| {
                let mut m = Matrix::zeros(n, n);
                for e in 0..=top {
                    let block = act.matrix(e, h);
                    for r in 0..a.dim(e) {
                        for c in 0..a.dim(e) {
                            m[(offsets[e] + r, offsets[e] + c)] = block[(r, c)].clone();
                        }
                    }
                }
                m
            })
            .collect();
        ModuleRep { cdeg: vec![0; n], a_action, h_action }
    }

    /// The degree-zero part `A_0 = A/A_{>0}`.
    pub fn degree_zero(a: &GradedAlgebra<F>, act: &HAction<F>) -> Self {
        Self::regular(a, act, 0)
    }

    /// A free module `A ⊗ V` truncated above internal degree `top`, with `H`
    /// acting diagonally through `rho_v` on the generator span `V`.
    pub fn free(a: &GradedAlgebra<F>, act: &HAction<F>, module: &FreeModule, rho_v: &[Matrix<F>], top: usize) -> Self {
        let top = top.min(module.max_degree());
        let offsets: Vec<usize> = (0..=top + 1).map(|j| (0..j).map(|k| module.dim(k)).sum()).collect();
        let n = offsets[top + 1];
        let a_action = (0..=a.top_degree())
            .map(|d| {
                (0..a.dim(d))
                    .map(|r| {
                        let mut m = Matrix::zeros(n, n);
                        for j in 0..=top {
                            if j + d > top {
                                break;
                            }
                            for pos in 0..module.dim(j) {
                                let image = module.left_mul(a, d, r, &unit_vec(module.dim(j), pos), j);
                                for (row, v) in image.into_iter().enumerate() {
                                    m[(offsets[j + d] + row, offsets[j] + pos)] = v;
                                }
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect();
        let h_action = (0..act.hopf().dim())
            .map(|h| {
                let mut m = Matrix::zeros(n, n);
                for j in 0..=top {
                    let block = free_module_action(act, module, rho_v, j, h);
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m[(offsets[j] + r, offsets[j] + c)] = block[(r, c)].clone();
                        }
                    }
                }
                m
            })
            .collect();
        ModuleRep { cdeg: vec![0; n], a_action, h_action }
    }

    /// The term `P_n` of an equivariant resolution, truncated above internal degree `top`.
    pub fn from_resolution(res: &MinimalResolution<F>, n: usize, top: usize) -> Result<Self> {
        let (act, gens) =
            res.h_action().ok_or_else(|| Error::Action("resolution was not built equivariantly".into()))?;
        Ok(Self::free(res.algebra(), act, res.module(n), &gens[n], top))
    }

    /// `M ⊗ W` with `(a#h)(m⊗w) = (a#h₁)m ⊗ h₂w`; basis `m ⊗ w` at `m · dim W + w`.
    pub fn tensor(&self, w: &HModule<F>, hopf: &HopfAlgebra<F>) -> Self {
        let idw = Matrix::identity(w.dim());
        let a_action = self.a_action.iter().map(|per_b| per_b.iter().map(|m| m.kron(&idw)).collect()).collect();
        let n = self.dim() * w.dim();
        let h_action = (0..hopf.dim())
            .map(|h| {
                let mut m = Matrix::zeros(n, n);
                for (h1, h2, c) in hopf.comult_basis(h) {
                    m.add_scaled(c, &self.h_action[*h1].kron(&w.action[*h2]));
                }
                m
            })
            .collect();
        let cdeg = self.cdeg.iter().flat_map(|x| w.cdeg.iter().map(move |y| x + y)).collect();
        ModuleRep { cdeg, a_action, h_action }
    }

    /// Module axioms over `A`, over `H`, and the smash relation
    /// `h·(a·m) = Σ (h₁·a)·(h₂·m)`.
    pub fn verify(&self, a: &GradedAlgebra<F>, act: &HAction<F>) -> Report {
        let mut r = Report::new("A#H-module");
        let n = self.dim();
        let hopf = act.hopf();
        let unit = combine(a.unit(), &self.a_action[0], n, n);
        r.check("1 acts as the identity", unit == Matrix::identity(n), "");
        let top = a.top_degree().min(act.top_degree());
        let mut assoc = None;
        for i in 0..=top {
            for j in 0..=top - i {
                for b in 0..a.dim(i) {
                    for c in 0..a.dim(j) {
                        let prod = a.mul(&unit_vec(a.dim(i), b), i, &unit_vec(a.dim(j), c), j);
                        let lhs = combine(&prod, &self.a_action[i + j], n, n);
                        if assoc.is_none() && lhs != self.a_action[i][b].mul(&self.a_action[j][c]) {
                            assoc = Some(format!("{} · {}", a.labels(i)[b], a.labels(j)[c]));
                        }
                    }
                }
            }
        }
        r.check("A acts associatively", assoc.is_none(), assoc.unwrap_or_default());
        let h_ok = hopf.check_module(&self.h_action);
        r.check("H-module", h_ok.is_ok(), h_ok.err().map(|e| e.to_string()).unwrap_or_default());
        let mut smash = None;
        for d in 0..=top {
            for b in 0..a.dim(d) {
                for h in 0..hopf.dim() {
                    let lhs = self.h_action[h].mul(&self.a_action[d][b]);
                    let mut rhs = Matrix::zeros(n, n);
                    for (h1, h2, c) in hopf.comult_basis(h) {
                        let hb = act.matrix(d, *h1).column(b);
                        rhs.add_scaled(c, &combine(&hb, &self.a_action[d], n, n).mul(&self.h_action[*h2]));
                    }
                    if smash.is_none() && lhs != rhs {
                        smash = Some(format!("{} on {}", hopf.labels()[h], a.labels(d)[b]));
                    }
                }
            }
        }
        r.check("h·(a·m) = (h₁·a)·(h₂·m)", smash.is_none(), smash.unwrap_or_default());
        let preserves = |m: &Matrix<F>| {
            (0..n).all(|i| (0..n).all(|j| m[(i, j)].is_zero() || self.cdeg[i] == self.cdeg[j]))
        };
        let degrees = self.a_action.iter().flatten().chain(&self.h_action).all(preserves);
        r.check("actions preserve cohomological degree", degrees, "");
        r
    }
}

/// A space of module maps `M → N` with a basis of homogeneous maps.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    rows: usize,
    cols: usize,
    basis: Vec<Matrix<F>>,
    degrees: Vec<i64>,
    coords: Subspace<F>,
}

impl<F: Field> HomSpace<F> {
    fn new(rows: usize, cols: usize, basis: Vec<Matrix<F>>, degrees: Vec<i64>) -> Result<Self> {
        let coords = Subspace::new(basis.iter().map(flatten).collect(), rows * cols)?;
        Ok(HomSpace { rows, cols, basis, degrees, coords })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<F>] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    /// Coordinates of a map, or `None` when it is not in the space.
    pub fn coordinates(&self, f: &Matrix<F>) -> Option<Vec<F>> {
        self.coords.coordinates(&flatten(f))
    }

    pub fn element(&self, coords: &[F]) -> Matrix<F> {
        combine(coords, &self.basis, self.rows, self.cols)
    }

    /// Matrix of a linear operator on the space, given by its effect on maps.
    pub fn operator(&self, f: impl Fn(&Matrix<F>) -> Matrix<F>) -> Result<Matrix<F>> {
        let cols = self
            .basis
            .iter()
            .map(|b| self.coordinates(&f(b)).ok_or_else(|| Error::Internal("operator leaves the Hom space".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(&cols, self.dim()))
    }
}

/// Homogeneous maps `f : M → N` with `f ∘ ρ_M(x) = ρ_N(x) ∘ f` for the given operators.
fn commutant<F: Field>(m: &ModuleRep<F>, n: &ModuleRep<F>, ops: &[(&Matrix<F>, &Matrix<F>)]) -> Result<HomSpace<F>> {
    let (rows, cols) = (n.dim(), m.dim());
    let mut shifts: Vec<i64> =
        n.cdeg.iter().flat_map(|y| m.cdeg.iter().map(move |x| y - x)).collect();
    shifts.sort_unstable();
    shifts.dedup();
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    for s in shifts {
        let cells: Vec<(usize, usize)> = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| n.cdeg[i] - m.cdeg[j] == s)
            .collect();
        let var: std::collections::HashMap<(usize, usize), usize> =
            cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut eqs: Vec<SparseVec<F>> = Vec::new();
        for (rm, rn) in ops {
            // (ρ_N f − f ρ_M)[i][j] = Σ_l ρ_N[i][l] f[l][j] − Σ_l f[i][l] ρ_M[l][j]
            for i in 0..rows {
                for j in 0..cols {
                    let mut eq = std::collections::BTreeMap::<usize, F>::new();
                    for l in 0..rows {
                        let c = &rn[(i, l)];
                        if let (false, Some(&v)) = (c.is_zero(), var.get(&(l, j))) {
                            let e = eq.entry(v).or_insert_with(F::zero);
                            *e = e.clone() + c.clone();
                        }
                    }
                    for l in 0..cols {
                        let c = &rm[(l, j)];
                        if let (false, Some(&v)) = (c.is_zero(), var.get(&(i, l))) {
                            let e = eq.entry(v).or_insert_with(F::zero);
                            *e = e.clone() - c.clone();
                        }
                    }
                    let eq: SparseVec<F> = eq.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    if !eq.is_empty() {
                        eqs.push(eq);
                    }
                }
            }
        }
        for v in sparse_kernel(&eqs, cells.len()) {
            let mut f = Matrix::zeros(rows, cols);
            for (k, &(i, j)) in cells.iter().enumerate() {
                f[(i, j)] = v[k].clone();
            }
            basis.push(f);
            degrees.push(s);
        }
    }
    HomSpace::new(rows, cols, basis, degrees)
}

fn a_generators<F: Field>(a: &GradedAlgebra<F>) -> Vec<(usize, usize)> {
    let mut g: Vec<(usize, usize)> = (0..a.dim(0)).map(|b| (0, b)).collect();
    g.extend(a.generators());
    g
}

/// `Hom_A(M, N)`.
pub fn hom_a<F: Field>(a: &GradedAlgebra<F>, m: &ModuleRep<F>, n: &ModuleRep<F>) -> Result<HomSpace<F>> {
    let gens = a_generators(a);
    let ops: Vec<_> = gens.iter().map(|&(d, b)| (&m.a_action[d][b], &n.a_action[d][b])).collect();
    commutant(m, n, &ops)
}

/// `Hom_{A#H}(M, N)`, solved directly from `A`- and `H`-linearity.
pub fn hom_smash<F: Field>(a: &GradedAlgebra<F>, m: &ModuleRep<F>, n: &ModuleRep<F>) -> Result<HomSpace<F>> {
    let gens = a_generators(a);
    let mut ops: Vec<_> = gens.iter().map(|&(d, b)| (&m.a_action[d][b], &n.a_action[d][b])).collect();
    ops.extend(m.h_action.iter().zip(&n.h_action));
    commutant(m, n, &ops)
}

/// `(h⇀f)(m) = h₂·f(S⁻¹(h₁)·m)` as a map on matrices.
fn conjugate<F: Field>(hopf: &HopfAlgebra<F>, h: usize, f: &Matrix<F>, on_m: &[Matrix<F>], on_n: &[Matrix<F>]) -> Matrix<F> {
    let mut out = Matrix::zeros(f.rows(), f.cols());
    let sinv = hopf.antipode_inverse();
    for (h1, h2, c) in hopf.comult_basis(h) {
        let s = combine(&sinv.column(*h1), on_m, on_m[0].rows(), on_m[0].cols());
        out.add_scaled(c, &on_n[*h2].mul(f).mul(&s));
    }
    out
}

/// Matrices of the action `h⇀f` on the basis of `hom`.
pub fn hom_action<F: Field>(
    hopf: &HopfAlgebra<F>,
    m: &ModuleRep<F>,
    n: &ModuleRep<F>,
    hom: &HomSpace<F>,
) -> Result<Vec<Matrix<F>>> {
    (0..hopf.dim()).map(|h| hom.operator(|f| conjugate(hopf, h, f, &m.h_action, &n.h_action))).collect()
}

/// `H` acting on `Hom_A(M, N)` is a module, and its invariants are exactly `Hom_{A#H}(M, N)`.
pub fn hom_invariants_check<F: Field>(
    a: &GradedAlgebra<F>,
    act: &HAction<F>,
    m: &ModuleRep<F>,
    n: &ModuleRep<F>,
) -> Result<Report> {
    let hopf = act.hopf();
    let mut r = Report::new("Hom over the smash product");
    let hom = hom_a(a, m, n)?;
    let rho = hom_action(hopf, m, n, &hom)?;
    let module = hopf.check_module(&rho);
    r.check("h⇀f is an H-module", module.is_ok(), module.err().map(|e| e.to_string()).unwrap_or_default());
    let inv = hopf.invariants(&rho)?;
    let smash = hom_smash(a, m, n)?;
    let inv_maps: Vec<Vec<F>> = inv.basis.iter().map(|c| flatten(&hom.element(c))).collect();
    let same = Subspace::spanned_by(&inv_maps, m.dim() * n.dim())
        .same_span(&Subspace::spanned_by(&smash.basis.iter().map(flatten).collect::<Vec<_>>(), m.dim() * n.dim()));
    r.set("hom_dim", hom.dim());
    r.set("invariant_dim", inv.dim());
    r.set("smash_hom_dim", smash.dim());
    r.check(
        "Hom_A(M, N)^H = Hom_{A#H}(M, N)",
        same,
        format!("dimensions {} and {}", inv.dim(), smash.dim()),
    );
    Ok(r)
}

/// The kG*-action on `Hom_A(M, N)` from the `G`-gradings of `M` and `N`
/// (read off from the projections `p_g`): a map of degree `g` sends `M_x` to `N_{xg}`.
pub fn grading_hom_action<F: Field>(
    group: &FiniteGroup,
    m: &ModuleRep<F>,
    n: &ModuleRep<F>,
    hom: &HomSpace<F>,
) -> Result<Vec<Matrix<F>>> {
    (0..group.order())
        .map(|g| {
            hom.operator(|f| {
                let mut out = Matrix::zeros(f.rows(), f.cols());
                for x in 0..group.order() {
                    out = out.add(&n.h_action[group.mul(x, g)].mul(f).mul(&m.h_action[x]));
                }
                out
            })
        })
        .collect()
}

/// `φ : Hom(W, Hom_A(M, N)) → Hom_A(M⊗W, N)`, `φ(f)(m⊗w) = (−1)^{|m||w|} f(w)(m)`:
/// bijectivity and `φ(h⇀f) = h⇀φ(f)` on every basis pair.
pub fn adjoint_phi<F: Field>(
    a: &GradedAlgebra<F>,
    act: &HAction<F>,
    w: &HModule<F>,
    m: &ModuleRep<F>,
    n: &ModuleRep<F>,
) -> Result<Report> {
    let hopf = act.hopf();
    let mut r = Report::new("adjunction is H-linear");
    let inner = hom_a(a, m, n)?;
    let inner_rho = hom_action(hopf, m, n, &inner)?;
    let (di, dw) = (inner.dim(), w.dim());
    let mw = m.tensor(w, hopf);
    let target = hom_a(a, &mw, n)?;
    let target_rho = hom_action(hopf, &mw, n, &target)?;

    // basis of the source: f = e_k ⊗ w*, index k · dim W + w, as a (dim inner × dim W) matrix
    let source_basis: Vec<Matrix<F>> = (0..di * dw)
        .map(|idx| Matrix::from_fn(di, dw, |k, x| if k * dw + x == idx { F::one() } else { F::zero() }))
        .collect();
    let source_rho: Vec<Matrix<F>> = (0..hopf.dim())
        .map(|h| {
            let cols: Vec<Vec<F>> = source_basis
                .iter()
                .map(|f| flatten(&conjugate(hopf, h, f, &w.action, &inner_rho)))
                .collect();
            Matrix::from_columns(&cols, di * dw)
        })
        .collect();
    let phi = |f: &Matrix<F>| -> Matrix<F> {
        let mut out = Matrix::zeros(n.dim(), m.dim() * dw);
        for x in 0..dw {
            let fx = inner.element(&f.column(x));
            for col in 0..m.dim() {
                let s: F = sign(m.cdeg[col], w.cdeg[x]);
                for row in 0..n.dim() {
                    if !fx[(row, col)].is_zero() {
                        out[(row, col * dw + x)] = s.clone() * fx[(row, col)].clone();
                    }
                }
            }
        }
        out
    };
    let cols = source_basis
        .iter()
        .map(|f| target.coordinates(&phi(f)).ok_or_else(|| Error::Internal("φ(f) is not A-linear".into())))
        .collect::<Result<Vec<_>>>()?;
    let phi_m = Matrix::from_columns(&cols, target.dim());
    r.set("source_dim", di * dw);
    r.set("target_dim", target.dim());
    r.check(
        "φ is bijective",
        phi_m.rank() == di * dw && di * dw == target.dim(),
        format!("rank {} between dimensions {} and {}", phi_m.rank(), di * dw, target.dim()),
    );
    let mut checked = 0;
    let mut failure = None;
    for h in 0..hopf.dim() {
        let lhs = phi_m.mul(&source_rho[h]);
        let rhs = target_rho[h].mul(&phi_m);
        for f in 0..di * dw {
            checked += 1;
            if failure.is_none() && lhs.column(f) != rhs.column(f) {
                failure = Some(format!("{} on basis map {f}", hopf.labels()[h]));
            }
        }
    }
    r.set("checked_pairs", checked);
    r.check("φ(h⇀f) = h⇀φ(f)", failure.is_none(), failure.unwrap_or_default());
    Ok(r)
}

/// An element `Σ_h f_h # h` of `Hom_A(P, P)#H`, stored by `H`-basis index.
type SmashElement<F> = Vec<Matrix<F>>;

/// `θ(f⊗h)(p⊗g) = g₂·f(S⁻¹(g₁)·p) ⊗ g₃h` on `P⊗H` with basis `p · dim H + g`.
fn theta_of<F: Field>(hopf: &HopfAlgebra<F>, p: &ModuleRep<F>, f: &Matrix<F>, h: usize, cache: &[Vec<(usize, usize, usize, F)>]) -> Matrix<F> {
    let nh = hopf.dim();
    let np = p.dim();
    let mut out: Matrix<F> = Matrix::zeros(np * nh, np * nh);
    let sinv = hopf.antipode_inverse();
    for (g, terms) in cache.iter().enumerate() {
        for (g1, g2, g3, c) in terms {
            let s = combine(&sinv.column(*g1), &p.h_action, np, np);
            let k = p.h_action[*g2].mul(f).mul(&s);
            let gh = hopf.mul_basis(*g3, h);
            for row in 0..np {
                for col in 0..np {
                    let v = &k[(row, col)];
                    if v.is_zero() {
                        continue;
                    }
                    for (l, cl) in gh {
                        let idx = (row * nh + l, col * nh + g);
                        out[idx] = out[idx].clone() + c.clone() * v.clone() * cl.clone();
                    }
                }
            }
        }
    }
    out
}

/// Verification of `θ : Hom_A(P, P)#H → Hom_{A#H}(P⊗H, P⊗H)`: it lands in
/// `A#H`-linear maps, is bijective, sends `id⊗1` to the identity and is
/// multiplicative for `f*g = (−1)^{|f||g|} g∘f` on all basis pairs and
/// `random_pairs` seeded random pairs.
pub fn theta_check<F: Field>(
    a: &GradedAlgebra<F>,
    act: &HAction<F>,
    p: &ModuleRep<F>,
    random_pairs: usize,
    seed: u64,
) -> Result<Report> {
    let hopf = act.hopf();
    let nh = hopf.dim();
    let mut r = Report::new("θ is an algebra isomorphism");
    let e = hom_a(a, p, p)?;
    let ph = p.tensor(&HModule::regular(hopf), hopf);
    let target = hom_smash(a, &ph, &ph)?;
    let cache: Vec<_> = (0..nh).map(|g| hopf.comult2_basis(g)).collect();
    let theta = |x: &SmashElement<F>| -> Matrix<F> {
        let mut out = Matrix::zeros(ph.dim(), ph.dim());
        for (h, f) in x.iter().enumerate() {
            if !f.is_zero() {
                out = out.add(&theta_of(hopf, p, f, h, &cache));
            }
        }
        out
    };
    let single = |f: &Matrix<F>, h: usize| -> SmashElement<F> {
        (0..nh).map(|k| if k == h { f.clone() } else { Matrix::zeros(p.dim(), p.dim()) }).collect()
    };
    let hom_degree = |x: &SmashElement<F>| -> i64 {
        x.iter()
            .filter_map(|f| e.coordinates(f))
            .flat_map(|c| c.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, _)| e.degree(i)).collect::<Vec<_>>())
            .next()
            .unwrap_or(0)
    };
    // (f′#h′)(f#h) = Σ f′ * (h′₁⇀f) # h′₂h
    let smash_mul = |x: &SmashElement<F>, y: &SmashElement<F>| -> SmashElement<F> {
        let mut out: SmashElement<F> = vec![Matrix::zeros(p.dim(), p.dim()); nh];
        let s: F = sign(hom_degree(x), hom_degree(y));
        for (h1_, fx) in x.iter().enumerate() {
            if fx.is_zero() {
                continue;
            }
            for (h, fy) in y.iter().enumerate() {
                if fy.is_zero() {
                    continue;
                }
                for (h1, h2, c) in hopf.comult_basis(h1_) {
                    let moved = conjugate(hopf, *h1, fy, &p.h_action, &p.h_action);
                    let prod = moved.mul(fx).scale(&(s.clone() * c.clone()));
                    for (l, cl) in hopf.mul_basis(*h2, h) {
                        out[*l].add_scaled(cl, &prod);
                    }
                }
            }
        }
        out
    };
    let star = |x: &Matrix<F>, dx: i64, y: &Matrix<F>, dy: i64| -> Matrix<F> { y.mul(x).scale(&sign(dx, dy)) };

    let basis: Vec<(SmashElement<F>, i64)> = (0..e.dim())
        .flat_map(|i| (0..nh).map(move |h| (i, h)))
        .map(|(i, h)| (single(&e.basis()[i], h), e.degree(i)))
        .collect();
    let images: Vec<Matrix<F>> = basis.iter().map(|(x, _)| theta(x)).collect();
    let coords = images.iter().map(|m| target.coordinates(m)).collect::<Option<Vec<_>>>();
    r.set("source_dim", basis.len());
    r.set("target_dim", target.dim());
    match coords {
        None => {
            r.check("θ lands in Hom_{A#H}(P⊗H, P⊗H)", false, "");
        }
        Some(cols) => {
            r.check("θ lands in Hom_{A#H}(P⊗H, P⊗H)", true, "");
            let rank = Matrix::from_columns(&cols, target.dim()).rank();
            r.check(
                "θ is bijective",
                rank == basis.len() && rank == target.dim(),
                format!("rank {rank} between dimensions {} and {}", basis.len(), target.dim()),
            );
        }
    }
    let unit: Vec<F> = hopf.unit().to_vec();
    let id_elem: SmashElement<F> = unit.iter().map(|c| Matrix::identity(p.dim()).scale(c)).collect();
    r.check("θ(id⊗1) = id", theta(&id_elem) == Matrix::identity(ph.dim()), "");

    let mut failure = None;
    let mut count = 0usize;
    for (i, (x, dx)) in basis.iter().enumerate() {
        for (j, (y, dy)) in basis.iter().enumerate() {
            count += 1;
            let lhs = theta(&smash_mul(x, y));
            let rhs = star(&images[i], *dx, &images[j], *dy);
            if failure.is_none() && lhs != rhs {
                failure = Some(format!("basis pair ({i}, {j})"));
            }
        }
    }
    r.set("basis_pairs", count);
    r.check("θ(xy) = θ(x)*θ(y) on basis pairs", failure.is_none(), failure.unwrap_or_default());

    let mut rng = crate::rng(seed);
    let mut degrees: Vec<i64> = (0..e.dim()).map(|i| e.degree(i)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let random = |rng: &mut rand_chacha::ChaCha8Rng| -> (SmashElement<F>, i64) {
        let d = degrees[rng.gen_range(0..degrees.len())];
        let x = (0..nh)
            .map(|_| {
                let c: Vec<F> = (0..e.dim())
                    .map(|i| if e.degree(i) == d { F::from_int(rng.gen_range(-3..=3)) } else { F::zero() })
                    .collect();
                e.element(&c)
            })
            .collect();
        (x, d)
    };
    let mut failure = None;
    for t in 0..random_pairs {
        let (x, dx) = random(&mut rng);
        let (y, dy) = random(&mut rng);
        if failure.is_none() && theta(&smash_mul(&x, &y)) != star(&theta(&x), dx, &theta(&y), dy) {
            failure = Some(format!("random pair {t}"));
        }
    }
    r.set("random_pairs", random_pairs);
    r.set("seed", seed);
    r.check("θ(xy) = θ(x)*θ(y) on random pairs", failure.is_none(), failure.unwrap_or_default());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::presentation::{Presentation, QuotientAlgebra};
    use crate::resolution::{minimal_resolution, Generator};
    use crate::Rational;

    fn graded(n: usize, top: usize) -> (GradedAlgebra<Rational>, HAction<Rational>) {
        let q = QuotientAlgebra::new(catalog::kxyz(Some(n)), top);
        (GradedAlgebra::from_quotient(&q), HAction::from_grading(&q).unwrap())
    }

    /// `A ⊗ V` truncated at `top`, `V` spanned by generators of the given
    /// internal degrees and group degrees, with `p_g` projecting onto degree `g`.
    pub(crate) fn graded_free(
        a: &GradedAlgebra<Rational>,
        act: &HAction<Rational>,
        gens: &[(usize, usize)],
        top: usize,
    ) -> ModuleRep<Rational> {
        let module = FreeModule::new(
            gens.iter().map(|&(degree, _)| Generator { vertex: 0, degree, origin: 0 }).collect(),
            a,
            top,
        );
        let rho_v: Vec<Matrix<Rational>> = (0..act.hopf().dim())
            .map(|h| {
                Matrix::from_fn(gens.len(), gens.len(), |i, j| {
                    if i == j && gens[i].1 == h {
                        Rational::from_int(1)
                    } else {
                        Rational::from_int(0)
                    }
                })
            })
            .collect();
        ModuleRep::free(a, act, &module, &rho_v, top)
    }

    #[test]
    fn regular_and_free_modules_verify() {
        let (a, act) = graded(3, 3);
        assert!(ModuleRep::regular(&a, &act, 2).verify(&a, &act).passed());
        assert!(ModuleRep::degree_zero(&a, &act).verify(&a, &act).passed());
        let m = graded_free(&a, &act, &[(0, 1), (1, 2)], 3);
        let r = m.verify(&a, &act);
        assert!(r.passed(), "{r}");
        let t = m.tensor(&HModule::regular(act.hopf()), act.hopf());
        assert!(t.verify(&a, &act).passed());
        assert_eq!(t.dim(), 3 * m.dim());
    }

    #[test]
    fn tensoring_with_the_ground_field_changes_nothing() {
        let q = QuotientAlgebra::new(catalog::kxyz(None), 2);
        let a = GradedAlgebra::from_quotient(&q);
        let act = HAction::trivial(HopfAlgebra::ground_field(), &a);
        let m = ModuleRep::regular(&a, &act, 2);
        let t = m.tensor(&HModule::regular(act.hopf()), act.hopf());
        assert_eq!(t.a_action, m.a_action);
        assert_eq!(t.h_action, m.h_action);
    }

    #[test]
    fn invariant_homs_are_smash_homs() {
        let (a, act) = graded(3, 3);
        let r0 = ModuleRep::degree_zero(&a, &act);
        let r = hom_invariants_check(&a, &act, &r0, &r0).unwrap();
        assert!(r.passed(), "{r}");
        let p = ModuleRep::regular(&a, &act, 2);
        let r = hom_invariants_check(&a, &act, &p, &p).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.data["hom_dim"], serde_json::json!(10));
        // invariant endomorphisms of A≤2 are right multiplications by G-degree-e elements: only A_0
        assert_eq!(r.data["invariant_dim"], serde_json::json!(1));
    }

    #[test]
    fn unit_acts_trivially_on_homs() {
        let (a, act) = graded(2, 2);
        let p = ModuleRep::regular(&a, &act, 2);
        let hom = hom_a(&a, &p, &p).unwrap();
        let rho = hom_action(act.hopf(), &p, &p, &hom).unwrap();
        let unit = combine(act.hopf().unit(), &rho, hom.dim(), hom.dim());
        assert_eq!(unit, Matrix::identity(hom.dim()));
    }

    #[test]
    fn group_algebra_action_is_conjugation() {
        // kZ/2 swapping x and y in k[x, y]
        let q = QuotientAlgebra::new(catalog::polynomial(&["x", "y"], None), 2);
        let a = GradedAlgebra::from_quotient(&q);
        let hopf = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2).unwrap());
        let swap = Matrix::from_fn(2, 2, |i, j| Rational::from_int((i != j) as i64));
        let act = HAction::from_arrow_action(hopf, &q, vec![Matrix::identity(2), swap]).unwrap();
        let p = ModuleRep::regular(&a, &act, 2);
        assert!(p.verify(&a, &act).passed());
        let hom = hom_a(&a, &p, &p).unwrap();
        let rho = hom_action(act.hopf(), &p, &p, &hom).unwrap();
        let g = &p.h_action[1];
        for (k, f) in hom.basis().iter().enumerate() {
            let want = g.mul(f).mul(&g.inverse().unwrap());
            assert_eq!(hom.element(&rho[1].column(k)), want);
        }
        let r = theta_check(&a, &act, &p, 10, 3).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn gradings_and_conjugation_agree_for_a_nonabelian_group() {
        let g = FiniteGroup::symmetric3();
        let quiver = crate::Quiver::loops(&["x", "y"]).with_g_degrees(&[1, 3]);
        let q = QuotientAlgebra::new(Presentation::new(quiver, vec![], Some(g.clone())).unwrap(), 2);
        let a = GradedAlgebra::from_quotient(&q);
        let act = HAction::from_grading(&q).unwrap();
        let m = graded_free(&a, &act, &[(0, 2), (1, 4)], 2);
        let n = graded_free(&a, &act, &[(0, 5), (0, 1)], 2);
        assert!(m.verify(&a, &act).passed());
        let hom = hom_a(&a, &m, &n).unwrap();
        assert!(hom.dim() > 0);
        assert_eq!(hom_action(act.hopf(), &m, &n, &hom).unwrap(), grading_hom_action(&g, &m, &n, &hom).unwrap());
    }

    #[test]
    fn adjunction_for_regular_hopf_module() {
        let (a, act) = graded(3, 3);
        let res = minimal_resolution(&a, &[0], 2, 3, Some(&act)).unwrap();
        let p1 = ModuleRep::from_resolution(&res, 1, 2).unwrap();
        assert!(p1.verify(&a, &act).passed());
        let r = adjoint_phi(&a, &act, &HModule::regular(act.hopf()), &p1, &p1).unwrap();
        assert!(r.passed(), "{r}");
        let r = adjoint_phi(&a, &act, &HModule::trivial(act.hopf()), &p1, &p1).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn koszul_signs_enter_the_adjunction() {
        let (a, act) = graded(2, 1);
        let mut m = ModuleRep::degree_zero(&a, &act);
        m.cdeg = vec![1];
        let mut w = HModule::regular(act.hopf());
        w.cdeg = vec![1, 1];
        let r = adjoint_phi(&a, &act, &w, &m, &m).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn theta_on_truncated_polynomial_ring() {
        let (a, act) = graded(3, 2);
        let p = ModuleRep::regular(&a, &act, 2);
        let r = theta_check(&a, &act, &p, 20, 0).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.data["source_dim"], serde_json::json!(30));
        assert_eq!(r.data["target_dim"], serde_json::json!(30));
    }
}
