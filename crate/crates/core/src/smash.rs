//! Smash products `A#H` and the covering-quiver description of `R#kG*`.

use crate::action::HAction;
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::hopf::HopfAlgebra;
use crate::linalg::{sparse_from_dense, Matrix};
use crate::presentation::{Presentation, QuotientAlgebra};
use crate::quiver::{Arrow, Path, PathElement, Quiver};
use crate::report::Report;
use crate::Rational;

/// `A#H` on the basis `a#h` (index `a * dim H + h` within each degree), with
/// `(a#h)(b#g) = a(h₁·b) # h₂g`.
pub fn smash_product<F: Field>(a: &GradedAlgebra<F>, act: &HAction<F>) -> Result<GradedAlgebra<F>> {
    let hopf = act.hopf();
    let n = hopf.dim();
    let top = a.top_degree().min(act.top_degree());
    let a = a.truncate(top);
    let dims: Vec<usize> = a.dims().iter().map(|d| d * n).collect();
    let labels = (0..=top)
        .map(|d| {
            a.labels(d)
                .iter()
                .flat_map(|x| hopf.labels().iter().map(move |h| format!("{x}#{h}")))
                .collect()
        })
        .collect();
    let mut unit = vec![F::zero(); dims[0]];
    for (b, u) in a.unit().iter().enumerate() {
        for (h, v) in hopf.unit().iter().enumerate() {
            unit[b * n + h] = u.clone() * v.clone();
        }
    }
    GradedAlgebra::from_fn(dims, labels, unit, a.generator_degree(), |i, x, j, y| {
        let (ab, h) = (x / n, x % n);
        let (bb, g) = (y / n, y % n);
        let mut out = vec![F::zero(); a.dim(i + j) * n];
        for (h1, h2, c) in hopf.comult_basis(h) {
            let hb = act.matrix(j, *h1).column(bb);
            if hb.iter().all(|v| v.is_zero()) {
                continue;
            }
            let prod = a.mul(&crate::linalg::unit_vec(a.dim(i), ab), i, &hb, j);
            let hg = hopf.mul_basis(*h2, g);
            for (k, pk) in prod.iter().enumerate() {
                if pk.is_zero() {
                    continue;
                }
                for (l, cl) in hg {
                    let idx = k * n + l;
                    out[idx] = out[idx].clone() + c.clone() * pk.clone() * cl.clone();
                }
            }
        }
        sparse_from_dense(&out)
    })
}

/// `A#H` rebased on the primitive idempotents `e_v # f` of its degree-0 part,
/// where `f` runs over the given primitive idempotents of `H`. `H` must act on
/// `A_0` through the counit.
pub fn basic_smash_product<F: Field>(
    a: &GradedAlgebra<F>,
    act: &HAction<F>,
    h_idempotents: &[Vec<F>],
    h_idempotent_labels: &[String],
) -> Result<GradedAlgebra<F>> {
    let hopf = act.hopf();
    let peirce = a.peirce().ok_or_else(|| Error::Unsupported("base algebra has no vertex decomposition".into()))?;
    for h in 0..hopf.dim() {
        if *act.matrix(0, h) != Matrix::identity(a.dim(0)).scale(&hopf.counit()[h]) {
            return Err(Error::Unsupported(format!(
                "{} does not act on the vertex idempotents through the counit",
                hopf.labels()[h]
            )));
        }
    }
    let raw = smash_product(a, act)?;
    let n = hopf.dim();
    let mut idems = Vec::new();
    let mut labels = Vec::new();
    for (v, vl) in peirce.vertices.iter().enumerate() {
        for (f, fl) in h_idempotents.iter().zip(h_idempotent_labels) {
            let mut e = vec![F::zero(); raw.dim(0)];
            for (h, c) in f.iter().enumerate() {
                e[v * n + h] = c.clone();
            }
            idems.push(e);
            labels.push(format!("{vl}_{fl}"));
        }
    }
    raw.with_idempotents(&idems, labels)
}

impl HopfAlgebra<Rational> {
    /// Primitive idempotents of a commutative `H` that splits over the rationals,
    /// with labels. The basis itself is used when it already consists of
    /// orthogonal idempotents (as for `kG*`).
    pub fn primitive_idempotents(&self) -> Result<(Vec<Vec<Rational>>, Vec<String>)> {
        if self.basis_is_idempotent_decomposition() {
            let labels = self.labels().iter().map(|l| l.strip_prefix("p_").unwrap_or(l).to_string()).collect();
            return Ok(((0..self.dim()).map(|i| self.basis_vec(i)).collect(), labels));
        }
        let lm: Vec<Matrix<Rational>> = (0..self.dim()).map(|i| self.left_mul_matrix(i)).collect();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if self.mul_basis(i, j) != self.mul_basis(j, i) {
                    return Err(Error::Unsupported("Hopf algebra is not commutative".into()));
                }
            }
        }
        let mut idems = crate::algebra::roots::primitive_idempotents(&lm, self.unit())?;
        // the idempotent on which H acts through the counit first
        idems.sort_by_key(|e| self.counit_of(e) != Rational::from_int(1));
        let labels = (0..idems.len()).map(|i| format!("f{i}")).collect();
        Ok((idems, labels))
    }
}

/// [`basic_smash_product`] over the rationals, with the idempotents of `H` found automatically.
pub fn basic_smash_product_q(a: &GradedAlgebra<Rational>, act: &HAction<Rational>) -> Result<GradedAlgebra<Rational>> {
    let (idems, labels) = act.hopf().primitive_idempotents()?;
    basic_smash_product(a, act, &idems, &labels)
}

/// The covering of a `G`-graded presentation, with the data of the covering map.
#[derive(Clone, Debug)]
pub struct Covering<F: Field> {
    pub presentation: Presentation<F>,
    pub group: FiniteGroup,
    /// base vertex of each covering vertex `(v, h)`, index `v * |G| + h`
    pub vertex_map: Vec<usize>,
    /// base arrow of each covering arrow `a_h`, index `a * |G| + h`
    pub arrow_map: Vec<usize>,
    base_quiver: Quiver,
}

impl<F: Field> Covering<F> {
    /// Lift of a base path starting (in traversal order) at covering vertex `(source, h)`.
    pub fn lift_path(&self, p: &Path, h: usize) -> Path {
        let n = self.group.order();
        let q = self.presentation.quiver();
        if p.arrows.is_empty() {
            return q.trivial_path(p.source * n + h);
        }
        let mut at = h;
        let mut word = vec![0; p.arrows.len()];
        for (k, &a) in p.arrows.iter().enumerate().rev() {
            word[k] = a * n + at;
            at = self.group.mul(self.base_quiver.arrow(a).g_degree, at);
        }
        q.path(&word).expect("lifted word is a path")
    }

    pub fn lift_element(&self, e: &PathElement<F>, h: usize) -> PathElement<F> {
        PathElement::from_terms(e.terms().map(|(p, c)| (c.clone(), self.lift_path(p, h))))
    }
}

/// Covering quiver: vertices `(v, h)`, arrows `a_h: (v, h) → (w, g_a h)`, and
/// each relation lifted from every starting vertex.
pub fn covering_presentation<F: Field>(p: &Presentation<F>) -> Result<Covering<F>> {
    let report = p.check_g_homogeneity();
    if !report.passed() {
        let f = report.first_failure().expect("failure");
        return Err(Error::Inhomogeneous(format!("{}: {}", f.name, f.detail)));
    }
    let g = p.group().expect("checked").clone();
    let n = g.order();
    let base = p.quiver();
    let single = n == 1;
    let vlabel = |v: &str, h: usize| if single { v.to_string() } else { format!("{v}_{}", g.label(h)) };
    let mut vertices = Vec::new();
    let mut vertex_map = Vec::new();
    for (v, vl) in base.vertices().iter().enumerate() {
        for h in 0..n {
            vertices.push(vlabel(vl, h));
            vertex_map.push(v);
        }
    }
    let mut arrows = Vec::new();
    let mut arrow_map = Vec::new();
    for (a, ar) in base.arrows().iter().enumerate() {
        for h in 0..n {
            arrows.push(Arrow {
                label: vlabel(&ar.label, h),
                source: ar.source * n + h,
                target: ar.target * n + g.mul(ar.g_degree, h),
                n_degree: ar.n_degree,
                g_degree: 0,
            });
            arrow_map.push(a);
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let mut cov = Covering {
        presentation: Presentation::new(quiver.clone(), Vec::new(), None)?,
        group: g.clone(),
        vertex_map,
        arrow_map,
        base_quiver: base.clone(),
    };
    let mut rels = Vec::new();
    for r in p.relations() {
        for h in 0..n {
            rels.push(cov.lift_element(r, h));
        }
    }
    cov.presentation = Presentation::new(quiver, rels, None)?;
    Ok(cov)
}

/// Checks that `m#p_h ↦ (lift of m starting at (source m, h))` is an algebra
/// isomorphism `R#kG* → S` in degrees `≤ dmax`.
pub fn verify_covering_iso<F: Field>(p: &Presentation<F>, dmax: usize) -> Result<Report> {
    let cov = covering_presentation(p)?;
    let n = cov.group.order();
    let qr = QuotientAlgebra::new(p.clone(), dmax);
    let a = GradedAlgebra::from_quotient(&qr);
    let act = HAction::from_grading(&qr)?;
    let b = smash_product(&a, &act)?;
    let qs = QuotientAlgebra::new(cov.presentation.clone(), dmax);
    let mut report = Report::new("covering isomorphism").with_bounds(0, dmax);
    let psi: Vec<Matrix<F>> = (0..=dmax)
        .map(|d| {
            let cols: Vec<Vec<F>> = (0..b.dim(d))
                .map(|x| {
                    let path = &qr.basis(d)[x / n];
                    let lifted = cov.lift_path(path, x % n);
                    crate::linalg::sparse_to_dense(&qs.normal_form_of_path(&lifted), qs.dim(d))
                })
                .collect();
            Matrix::from_columns(&cols, qs.dim(d))
        })
        .collect();
    for d in 0..=dmax {
        let ok = psi[d].is_square() && psi[d].rank() == b.dim(d);
        if !report.check(
            format!("bijective in degree {d}"),
            ok,
            format!("dim (R#kG*)_{d} = {}, dim S_{d} = {}", b.dim(d), qs.dim(d)),
        ) {
            return Ok(report);
        }
    }
    let mut bad = None;
    'outer: for i in 0..=dmax {
        for j in 0..=dmax - i {
            for x in 0..b.dim(i) {
                for y in 0..b.dim(j) {
                    let xy = crate::linalg::sparse_to_dense(&b.mul_basis(i, x, j, y).to_vec(), b.dim(i + j));
                    let lhs = psi[i + j].mul_vec(&xy);
                    let rhs = qs.mul(&psi[i].column(x), i, &psi[j].column(y), j);
                    if lhs != rhs {
                        bad = Some(format!("{} · {}", b.labels(i)[x], b.labels(j)[y]));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.check("multiplicative on all basis pairs", bad.is_none(), bad.unwrap_or_default());
    report.set("smash_dims", b.dims());
    report.set("covering_dims", qs.hilbert_function());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    pub(crate) fn kxyz_graded(n: usize) -> Presentation<Rational> {
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
    fn covering_of_polynomial_ring() {
        let cov = covering_presentation(&kxyz_graded(3)).unwrap();
        let quiv = cov.presentation.quiver();
        assert_eq!(quiv.num_vertices(), 3);
        assert_eq!(quiv.num_arrows(), 9);
        assert_eq!(cov.presentation.relations().len(), 9);
        // x_1 y_0 - y_1 x_0 (written: first y_0 then x_1) is among the lifted relations
        let want = PathElement::from_terms([
            (q(1), quiv.path_from_labels(&["x_1", "y_0"]).unwrap()),
            (q(-1), quiv.path_from_labels(&["y_1", "x_0"]).unwrap()),
        ]);
        assert!(cov.presentation.relations().contains(&want));
        let x0 = quiv.arrow(quiv.arrow_index("x_0").unwrap());
        assert_eq!((x0.source, x0.target), (0, 1));
        let s = QuotientAlgebra::new(cov.presentation.clone(), 3);
        assert_eq!(s.hilbert_function(), vec![3, 9, 18, 30]);

        let cov2 = covering_presentation(&kxyz_graded(2)).unwrap();
        assert_eq!(cov2.presentation.quiver().num_vertices(), 2);
        assert_eq!(cov2.presentation.quiver().num_arrows(), 6);
        assert_eq!(cov2.presentation.relations().len(), 6);
        let s2 = QuotientAlgebra::new(cov2.presentation.clone(), 4);
        assert_eq!(s2.hilbert_function(), vec![2, 6, 12, 20, 30]);

        let cov1 = covering_presentation(&kxyz_graded(1)).unwrap();
        assert_eq!(cov1.presentation.quiver().arrows(), kxyz_graded(1).quiver().arrows());
    }

    #[test]
    fn covering_iso_small() {
        for n in [1, 2, 3] {
            let r = verify_covering_iso(&kxyz_graded(n), 3).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn smash_dimensions_and_associativity() {
        let qa = QuotientAlgebra::new(kxyz_graded(3), 3);
        let a = GradedAlgebra::from_quotient(&qa);
        let act = HAction::from_grading(&qa).unwrap();
        let b = smash_product(&a, &act).unwrap();
        assert_eq!(b.dims(), &[3, 9, 18, 30]);
        assert!(b.verify(Some((50, 1))).passed());
        let basic = basic_smash_product_q(&a, &act).unwrap();
        assert_eq!(basic.num_vertices(), 3);
        assert!(basic.verify(Some((50, 2))).passed());
        // over k the smash product is the algebra itself
        let triv = HAction::trivial(HopfAlgebra::ground_field(), &a);
        let same = smash_product(&a, &triv).unwrap();
        assert_eq!(same.dims(), a.dims());
        for (i, j) in [(1, 1), (1, 2)] {
            for x in 0..a.dim(i) {
                for y in 0..a.dim(j) {
                    assert_eq!(same.mul_basis(i, x, j, y), a.mul_basis(i, x, j, y));
                }
            }
        }
    }

    #[test]
    fn smash_with_group_algebra_splits() {
        let qa = QuotientAlgebra::new(kxyz_graded(2), 3);
        let a = GradedAlgebra::from_quotient(&qa);
        let hopf = HopfAlgebra::group_algebra(&FiniteGroup::cyclic(2).unwrap());
        let act = HAction::from_arrow_action(hopf, &qa, vec![Matrix::identity(3), Matrix::identity(3).scale(&q(-1))])
            .unwrap();
        let b = basic_smash_product_q(&a, &act).unwrap();
        assert_eq!(b.num_vertices(), 2);
        assert_eq!(b.dims(), &[2, 6, 12, 20]);
        assert!(b.verify(Some((40, 3))).passed());
        // arrows swap the two idempotents (1 ± g)/2
        for x in 0..b.dim(1) {
            let (t, s) = b.endpoints(1, x);
            assert_ne!(t, s);
        }
    }
}
