//! Hopf algebra actions on graded algebras.

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::linalg::{axpy_dense, sparse_to_dense, Matrix};
use crate::presentation::QuotientAlgebra;
use crate::quiver::{Path, PathElement};
use crate::report::Report;

/// A degree-preserving left action of `H`: `rho[d][h]` is the matrix of the
/// basis element `h` on `A_d`.
#[derive(Clone, Debug)]
pub struct HAction<F: Field> {
    hopf: HopfAlgebra<F>,
    rho: Vec<Vec<Matrix<F>>>,
    /// The action on the arrow span it was generated from, if any.
    arrows: Option<Vec<Matrix<F>>>,
}

impl<F: Field> HAction<F> {
    pub fn new(hopf: HopfAlgebra<F>, rho: Vec<Vec<Matrix<F>>>) -> Result<Self> {
        for (d, per_h) in rho.iter().enumerate() {
            if per_h.len() != hopf.dim() {
                return Err(Error::Action(format!("degree {d}: {} matrices for dim H = {}", per_h.len(), hopf.dim())));
            }
        }
        Ok(HAction { hopf, rho, arrows: None })
    }

    /// `h·a = ε(h)a`.
    pub fn trivial(hopf: HopfAlgebra<F>, a: &GradedAlgebra<F>) -> Self {
        let rho = (0..=a.top_degree())
            .map(|d| (0..hopf.dim()).map(|h| Matrix::identity(a.dim(d)).scale(&hopf.counit()[h])).collect())
            .collect();
        HAction { hopf, rho, arrows: None }
    }

    /// `kG*` acting through a `G`-grading: `p_g` projects onto the component of degree `g`.
    pub fn from_grading(q: &QuotientAlgebra<F>) -> Result<Self> {
        let p = q.presentation();
        let report = p.check_g_homogeneity();
        if !report.passed() {
            let f = report.first_failure().expect("failed report");
            return Err(Error::Inhomogeneous(format!("{}: {}", f.name, f.detail)));
        }
        let g = p.group().expect("checked above").clone();
        let hopf = HopfAlgebra::dual_group_algebra(&g);
        let rho = (0..=q.max_degree())
            .map(|d| {
                let degs: Vec<usize> = q.basis(d).iter().map(|path| q.quiver().g_degree(path, &g)).collect();
                (0..g.order())
                    .map(|h| {
                        Matrix::from_fn(degs.len(), degs.len(), |i, j| {
                            if i == j && degs[i] == h {
                                F::one()
                            } else {
                                F::zero()
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(HAction { hopf, rho, arrows: None })
    }

    /// Extend an action given on the arrow span (`on_arrows[h]` is the matrix of
    /// `h` on arrows, column `a` = `h·a`) to every degree through
    /// `h·(m a) = (h₁·m)(h₂·a)`. Vertices are acted on through the counit.
    /// The result is only meaningful when the ideal is stable; see [`Self::ideal_stability`].
    pub fn from_arrow_action(hopf: HopfAlgebra<F>, q: &QuotientAlgebra<F>, on_arrows: Vec<Matrix<F>>) -> Result<Self> {
        let quiver = q.quiver();
        let na = quiver.num_arrows();
        if on_arrows.len() != hopf.dim() || on_arrows.iter().any(|m| m.rows() != na || m.cols() != na) {
            return Err(Error::Action(format!("need {} square matrices of size {na} on the arrows", hopf.dim())));
        }
        for m in &on_arrows {
            for a in 0..na {
                for b in 0..na {
                    let (x, y) = (quiver.arrow(a), quiver.arrow(b));
                    if !m[(b, a)].is_zero()
                        && (x.n_degree != y.n_degree || x.source != y.source || x.target != y.target)
                    {
                        return Err(Error::Action(format!(
                            "action sends `{}` to a multiple of the non-parallel or differently graded arrow `{}`",
                            x.label, y.label
                        )));
                    }
                }
            }
        }
        let n = hopf.dim();
        let mut rho: Vec<Vec<Matrix<F>>> = vec![(0..n)
            .map(|h| Matrix::identity(q.dim(0)).scale(&hopf.counit()[h]))
            .collect()];
        for d in 1..=q.max_degree() {
            let dim = q.dim(d);
            let mut per_h: Vec<Matrix<F>> = (0..n).map(|_| Matrix::zeros(dim, dim)).collect();
            for (k, path) in q.basis(d).iter().enumerate() {
                let (prefix, last) = split_last(path, q);
                let pd = prefix.n_degree;
                let pi = q.basis_index(&prefix).expect("prefix of a basis monomial is a basis monomial");
                for (h, m) in per_h.iter_mut().enumerate() {
                    let mut col = vec![F::zero(); dim];
                    for (h1, h2, c) in hopf.comult_basis(h) {
                        let left = rho[pd][*h1].column(pi);
                        let left_sparse = crate::linalg::sparse_from_dense(&left);
                        for b in 0..na {
                            let coef = on_arrows[*h2][(b, last)].clone();
                            if coef.is_zero() {
                                continue;
                            }
                            let prod = q.right_mul_arrow(&left_sparse, pd, b);
                            axpy_dense(&mut col, &(c.clone() * coef), &prod);
                        }
                    }
                    for (i, v) in col.into_iter().enumerate() {
                        m[(i, k)] = v;
                    }
                }
            }
            rho.push(per_h);
        }
        Ok(HAction { hopf, rho, arrows: Some(on_arrows) })
    }

    pub fn hopf(&self) -> &HopfAlgebra<F> {
        &self.hopf
    }

    pub fn top_degree(&self) -> usize {
        self.rho.len() - 1
    }

    /// Matrix of basis element `h` on `A_d`.
    pub fn matrix(&self, d: usize, h: usize) -> &Matrix<F> {
        &self.rho[d][h]
    }

    pub fn matrices(&self, d: usize) -> &[Matrix<F>] {
        &self.rho[d]
    }

    /// Matrix of an arbitrary element `x ∈ H` on `A_d`.
    pub fn matrix_of(&self, d: usize, x: &[F]) -> Matrix<F> {
        let dim = self.rho[d].first().map(|m| m.rows()).unwrap_or(0);
        let mut m = Matrix::zeros(dim, dim);
        for (h, c) in x.iter().enumerate() {
            m.add_scaled(c, &self.rho[d][h]);
        }
        m
    }

    pub fn arrow_action(&self) -> Option<&[Matrix<F>]> {
        self.arrows.as_deref()
    }

    /// The same action restricted to degrees `≤ top`.
    pub fn truncate(&self, top: usize) -> Self {
        let mut a = self.clone();
        a.rho.truncate(top + 1);
        a
    }

    /// `h·r ∈ I` for every relation `r` and basis element `h`, computed in the
    /// free path algebra and reduced modulo the relations.
    pub fn ideal_stability(&self, q: &QuotientAlgebra<F>) -> Report {
        let mut report = Report::new("relations stable under the action");
        let Some(on_arrows) = &self.arrows else {
            report.check("action given on arrows", false, "only arrow-generated actions can be tested on relations");
            return report;
        };
        let quiver = q.quiver();
        for (i, r) in q.presentation().relations().iter().enumerate() {
            let d = r.n_degree().expect("homogeneous relation");
            if d > q.max_degree() {
                continue;
            }
            for h in 0..self.hopf.dim() {
                let mut image = PathElement::zero();
                for (p, c) in r.terms() {
                    image = image.add(&act_on_path_free(&self.hopf, on_arrows, quiver, h, p).scale(c));
                }
                let nf = q.normal_form(&image, d).expect("homogeneous image");
                if nf.iter().any(|x| !x.is_zero()) {
                    report.check(
                        format!("relation {i} under {}", self.hopf.labels()[h]),
                        false,
                        format!("{} ↦ {} ∉ I", r.display(quiver), image.display(quiver)),
                    );
                    return report;
                }
            }
        }
        report.check("all relations mapped into the ideal", true, "");
        report
    }
}

fn split_last<F: Field>(path: &Path, q: &QuotientAlgebra<F>) -> (Path, usize) {
    let quiver = q.quiver();
    let last = *path.arrows.last().expect("positive degree");
    let prefix = Path {
        n_degree: path.n_degree - quiver.arrow(last).n_degree,
        arrows: path.arrows[..path.arrows.len() - 1].to_vec(),
        source: quiver.arrow(last).target,
        target: path.target,
    };
    (prefix, last)
}

/// `h·p` in the free path algebra, using the iterated coproduct.
fn act_on_path_free<F: Field>(
    hopf: &HopfAlgebra<F>,
    on_arrows: &[Matrix<F>],
    quiver: &crate::quiver::Quiver,
    h: usize,
    p: &Path,
) -> PathElement<F> {
    if p.arrows.is_empty() {
        return PathElement::from_path(p.clone()).scale(&hopf.counit()[h]);
    }
    let last = *p.arrows.last().expect("nonempty");
    let prefix = if p.arrows.len() == 1 {
        quiver.trivial_path(p.target)
    } else {
        quiver.path(&p.arrows[..p.arrows.len() - 1]).expect("subword of a path")
    };
    let mut out = PathElement::zero();
    for (h1, h2, c) in hopf.comult_basis(h) {
        let left = act_on_path_free(hopf, on_arrows, quiver, *h1, &prefix);
        let mut right = PathElement::zero();
        for b in 0..quiver.num_arrows() {
            let coef = on_arrows[*h2][(b, last)].clone();
            if !coef.is_zero() {
                right.add_term(coef, quiver.arrow_path(b));
            }
        }
        out = out.add(&left.mul(&right).scale(c));
    }
    out
}

/// Checks the module-algebra axioms of `act` on `a` up to degree `dmax`:
/// module axioms in each degree, `h·1 = ε(h)1`, and `h·(xy) = (h₁·x)(h₂·y)` on
/// all basis pairs. When the action comes from arrows and `q` is given, the
/// relations are also checked for stability.
pub fn verify_module_algebra<F: Field>(
    a: &GradedAlgebra<F>,
    act: &HAction<F>,
    q: Option<&QuotientAlgebra<F>>,
    dmax: usize,
) -> Report {
    let hopf = act.hopf();
    let top = dmax.min(a.top_degree()).min(act.top_degree());
    let mut report = Report::new("module algebra").with_bounds(0, top);
    if let Some(q) = q {
        if act.arrow_action().is_some() {
            report.absorb(&act.ideal_stability(q));
            if !report.passed() {
                return report;
            }
        }
    }
    for d in 0..=top {
        if let Err(e) = hopf.check_module(act.matrices(d)) {
            report.check(format!("module axioms in degree {d}"), false, e.to_string());
            return report;
        }
    }
    report.check("module axioms", true, format!("degrees 0..={top}"));

    let bad = (0..hopf.dim()).find(|&h| {
        let lhs = act.matrix(0, h).mul_vec(a.unit());
        let rhs: Vec<F> = a.unit().iter().map(|u| u.clone() * hopf.counit()[h].clone()).collect();
        lhs != rhs
    });
    report.check("h·1 = ε(h)1", bad.is_none(), bad.map(|h| hopf.labels()[h].clone()).unwrap_or_default());

    let mut bad = None;
    'outer: for i in 0..=top {
        for j in 0..=top - i {
            for b in 0..a.dim(i) {
                for c in 0..a.dim(j) {
                    let xy = sparse_to_dense(&a.mul_basis(i, b, j, c).to_vec(), a.dim(i + j));
                    for h in 0..hopf.dim() {
                        let lhs = act.matrix(i + j, h).mul_vec(&xy);
                        let mut rhs = vec![F::zero(); a.dim(i + j)];
                        for (h1, h2, coef) in hopf.comult_basis(h) {
                            let x = act.matrix(i, *h1).column(b);
                            let y = act.matrix(j, *h2).column(c);
                            let p = a.mul(&x, i, &y, j);
                            for (k, v) in p.into_iter().enumerate() {
                                if !v.is_zero() {
                                    rhs[k] = rhs[k].clone() + coef.clone() * v;
                                }
                            }
                        }
                        if lhs != rhs {
                            bad = Some(format!(
                                "{} · ({} {})",
                                hopf.labels()[h],
                                a.labels(i)[b],
                                a.labels(j)[c]
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    report.check("h·(xy) = (h₁·x)(h₂·y)", bad.is_none(), bad.unwrap_or_default());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::presentation::Presentation;
    use crate::quiver::Quiver;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn kxyz_graded(n: usize) -> Presentation<Rational> {
        Presentation::from_words(
            Quiver::loops(&["x", "y", "z"]).with_g_degrees(&[1 % n, 1 % n, 1 % n]),
            &[
                vec![(q(1), vec!["x", "y"]), (q(-1), vec!["y", "x"])],
                vec![(q(1), vec!["x", "z"]), (q(-1), vec!["z", "x"])],
                vec![(q(1), vec!["z", "y"]), (q(-1), vec!["y", "z"])],
            ],
            Some(FiniteGroup::cyclic(n).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn grading_action_is_a_module_algebra() {
        let qa = QuotientAlgebra::new(kxyz_graded(3), 5);
        let a = GradedAlgebra::from_quotient(&qa);
        let act = HAction::from_grading(&qa).unwrap();
        // degree 1: p_1 is the identity, p_0 vanishes
        assert_eq!(*act.matrix(1, 1), Matrix::identity(3));
        assert!(act.matrix(1, 0).is_zero());
        assert_eq!(*act.matrix(0, 0), Matrix::identity(1));
        let r = verify_module_algebra(&a, &act, Some(&qa), 5);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn trivial_action_passes() {
        let qa = QuotientAlgebra::new(kxyz_graded(2), 3);
        let a = GradedAlgebra::from_quotient(&qa);
        let hopf = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2).unwrap());
        let act = HAction::trivial(hopf, &a);
        assert!(verify_module_algebra(&a, &act, None, 3).passed());
    }

    #[test]
    fn sign_action_from_arrows() {
        let qa = QuotientAlgebra::new(kxyz_graded(2), 4);
        let a = GradedAlgebra::from_quotient(&qa);
        let hopf = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2).unwrap());
        let act =
            HAction::from_arrow_action(hopf, &qa, vec![Matrix::identity(3), Matrix::identity(3).scale(&q(-1))])
                .unwrap();
        assert!(verify_module_algebra(&a, &act, Some(&qa), 4).passed());
        assert_eq!(*act.matrix(3, 1), Matrix::identity(10).scale(&q(-1)));
        assert_eq!(*act.matrix(2, 1), Matrix::identity(6));
    }

    #[test]
    fn unstable_ideal_is_reported() {
        // k<x,y>/(xy) with the generator of Z/2 swapping x and y: xy ↦ yx ∉ I
        let p = Presentation::from_words(Quiver::loops(&["x", "y"]), &[vec![(q(1), vec!["x", "y"])]], None).unwrap();
        let qa = QuotientAlgebra::new(p, 3);
        let a = GradedAlgebra::from_quotient(&qa);
        let hopf = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2).unwrap());
        let swap = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]], 2).unwrap();
        let act = HAction::from_arrow_action(hopf, &qa, vec![Matrix::identity(2), swap]).unwrap();
        let r = verify_module_algebra(&a, &act, Some(&qa), 3);
        assert!(!r.passed());
        let f = r.first_failure().unwrap();
        assert_eq!(f.name, "relations stable under the action");
        assert!(f.detail.contains("yx"), "{}", f.detail);
    }

    #[test]
    fn grading_action_on_paths_matches_projection() {
        let qa = QuotientAlgebra::new(kxyz_graded(3), 4);
        let hopf = HopfAlgebra::dual_group_algebra(&FiniteGroup::cyclic(3).unwrap());
        // p_g acts on arrows (all of degree 1) as δ_{g,1}
        let on_arrows = (0..3).map(|g| if g == 1 { Matrix::identity(3) } else { Matrix::zeros(3, 3) }).collect();
        let from_arrows = HAction::from_arrow_action(hopf, &qa, on_arrows).unwrap();
        let from_grading = HAction::from_grading(&qa).unwrap();
        for d in 0..=4 {
            for h in 0..3 {
                assert_eq!(from_arrows.matrix(d, h), from_grading.matrix(d, h), "degree {d}, p_{h}");
            }
        }
    }
}
