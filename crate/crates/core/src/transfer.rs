//! Comparisons between homological data of `A` and of the smash product `A#H`:
//! invariants of Ext, the Ext algebra of `A#H` against `E(A)#H`, and the
//! transfer of d-Koszulness.

use std::collections::BTreeMap;

use crate::action::HAction;
use crate::algebra::GradedAlgebra;
use crate::error::Result;
use crate::ext::{h_action_on_ext, yoneda_ext_algebra, ExtAlgebra};
use crate::linalg::{sparse_from_dense, Echelon};
use crate::report::Report;
use crate::resolution::{d_koszul_check, minimal_resolution};
use crate::smash::{basic_smash_product_q, smash_product};
use crate::Rational;

fn all_vertices<F: crate::Field>(a: &GradedAlgebra<F>) -> Vec<usize> {
    (0..a.num_vertices()).collect()
}

/// Vertices `e_v # f` of the basic smash product with `f` the idempotent on
/// which `H` acts through the counit.
fn trivial_vertices(a: &GradedAlgebra<Rational>, act: &HAction<Rational>) -> Result<Vec<usize>> {
    let (idems, _) = act.hopf().primitive_idempotents()?;
    Ok((0..a.num_vertices()).map(|v| v * idems.len()).collect())
}

fn scaled(table: &BTreeMap<(usize, usize), usize>, k: usize) -> BTreeMap<(usize, usize), usize> {
    table.iter().map(|(key, v)| (*key, v * k)).collect()
}

fn invariant_bases(ext: &ExtAlgebra<Rational>, act: &HAction<Rational>) -> Result<Vec<Vec<Vec<Rational>>>> {
    (0..=ext.algebra().top_degree()).map(|n| Ok(act.hopf().invariants(act.matrices(n))?.basis)).collect()
}

/// `Ext_{A#H}(A_0, A_0)` against `Ext_A(A_0, A_0)^H`, the invariants closing
/// under the Yoneda product, and `Ext_{A#H}(A_0⊗H, A_0⊗H)` against `E(A)` scaled by `dim H`.
pub fn verify_cor_ext(a: &GradedAlgebra<Rational>, act: &HAction<Rational>, hmax: usize, dmax: usize) -> Result<Report> {
    let mut r = Report::new("Ext over the smash product").with_bounds(hmax, dmax);
    let n_h = act.hopf().dim();
    let b = basic_smash_product_q(a, act)?;

    let res_a = minimal_resolution(a, &all_vertices(a), hmax, dmax, Some(act))?;
    r.absorb(res_a.section_report());
    let e_a = yoneda_ext_algebra(&res_a, hmax)?;
    let e_act = h_action_on_ext(&res_a, &e_a)?;
    let inv = invariant_bases(&e_a, &e_act)?;
    let inv_dims: Vec<usize> = inv.iter().map(|b| b.len()).collect();

    let res_b0 = minimal_resolution(&b, &trivial_vertices(a, act)?, hmax, dmax, None)?;
    let e_b0 = yoneda_ext_algebra(&res_b0, hmax)?;
    r.set("smash_ext_dims", e_b0.dims());
    r.set("invariant_ext_dims", &inv_dims);
    r.check(
        "(i) dim Ext_{A#H}(A_0, A_0) = dim Ext_A(A_0, A_0)^H",
        e_b0.dims() == inv_dims.as_slice(),
        format!("{:?} and {:?}", e_b0.dims(), inv_dims),
    );

    let e = e_a.algebra();
    let mut closed = true;
    let mut witness = String::new();
    for i in 0..=e.top_degree() {
        for j in 0..=e.top_degree() - i {
            let mut target = Echelon::new(e.dim(i + j));
            for v in &inv[i + j] {
                target.insert_dense(v);
            }
            for x in &inv[i] {
                for y in &inv[j] {
                    if !target.contains(&sparse_from_dense(&e.mul(x, i, y, j))) && closed {
                        closed = false;
                        witness = format!("product of invariants in Ext^{i} × Ext^{j}");
                    }
                }
            }
        }
    }
    r.check("(ii) invariants form a subalgebra", closed, witness);

    let res_b = minimal_resolution(&b, &all_vertices(&b), hmax, dmax, None)?;
    let e_b = yoneda_ext_algebra(&res_b, hmax)?;
    let want: Vec<usize> = e_a.dims().iter().map(|d| d * n_h).collect();
    r.set("full_smash_ext_dims", e_b.dims());
    r.set("base_ext_dims", e_a.dims());
    r.check(
        "(iii) dim Ext_{A#H}(A_0⊗H, A_0⊗H) = dim H · dim Ext_A(A_0, A_0)",
        e_b.dims() == want.as_slice() && e_b.bigraded_dims() == scaled(&e_a.bigraded_dims(), n_h),
        format!("{:?} and {:?}", e_b.dims(), want),
    );
    Ok(r)
}

/// d-Koszulness of `A` and `A#H` agree, and `E(A#H)` has the bigraded
/// dimensions and product ranks of `E(A)#H`.
pub fn verify_thm_koszul_transfer(
    a: &GradedAlgebra<Rational>,
    act: &HAction<Rational>,
    d: usize,
    hmax: usize,
    dmax: usize,
) -> Result<Report> {
    let mut r = Report::new("Koszul transfer to the smash product").with_bounds(hmax, dmax);
    let n_h = act.hopf().dim();
    let b = basic_smash_product_q(a, act)?;

    let res_a = minimal_resolution(a, &all_vertices(a), hmax, dmax, Some(act))?;
    r.absorb(res_a.section_report());
    let res_b = minimal_resolution(&b, &all_vertices(&b), hmax, dmax, None)?;
    let ka = d_koszul_check(&res_a, d);
    let kb = d_koszul_check(&res_b, d);
    r.set("koszul_base", ka.passed());
    r.set("koszul_smash", kb.passed());
    r.check(format!("{d}-Koszul verdicts agree"), ka.passed() == kb.passed(), format!("{} and {}", ka.verdict, kb.verdict));

    let e_a = yoneda_ext_algebra(&res_a, hmax)?;
    let e_act = h_action_on_ext(&res_a, &e_a)?;
    let e_smash = smash_product(e_a.algebra(), &e_act)?;
    let e_b = yoneda_ext_algebra(&res_b, hmax)?;
    r.absorb(e_a.lift_check());
    r.absorb(e_b.lift_check());
    r.set("ext_dims", e_b.dims());
    r.set("smashed_ext_dims", e_smash.dims());
    r.check("dim E(A#H) = dim E(A)#H", e_b.dims() == e_smash.dims(), format!("{:?} and {:?}", e_b.dims(), e_smash.dims()));
    r.check(
        "bigraded dims of E(A#H) = dim H · those of E(A)",
        e_b.bigraded_dims() == scaled(&e_a.bigraded_dims(), n_h),
        "",
    );
    let (pb, ps) = (e_b.algebra().product_ranks(), e_smash.product_ranks());
    r.set("product_ranks", pb.iter().map(|((i, j), k)| format!("{i}·{j}: {k}")).collect::<Vec<_>>());
    r.check("product ranks of E(A#H) and E(A)#H agree", pb == ps, "");
    r.set("structure_constants", "compared through dimensions and product ranks only");
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::presentation::QuotientAlgebra;

    fn graded(n: usize, dmax: usize) -> (GradedAlgebra<Rational>, HAction<Rational>) {
        let q = QuotientAlgebra::new(catalog::kxyz(Some(n)), dmax);
        (GradedAlgebra::from_quotient(&q), HAction::from_grading(&q).unwrap())
    }

    #[test]
    fn invariants_of_ext_for_three_fold_grading() {
        let (a, act) = graded(3, 6);
        let r = verify_cor_ext(&a, &act, 3, 6).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.data["smash_ext_dims"], serde_json::json!([1, 0, 0, 1]));
        assert_eq!(r.data["invariant_ext_dims"], serde_json::json!([1, 0, 0, 1]));
        assert_eq!(r.data["full_smash_ext_dims"], serde_json::json!([3, 9, 9, 3]));
    }

    #[test]
    fn trivial_hopf_algebra_is_a_tautology() {
        let (a, act) = graded(1, 5);
        let r = verify_cor_ext(&a, &act, 3, 5).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.data["smash_ext_dims"], r.data["base_ext_dims"]);
        let r = verify_thm_koszul_transfer(&a, &act, 2, 3, 5).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn koszul_transfer_for_three_fold_grading() {
        let (a, act) = graded(3, 6);
        let r = verify_thm_koszul_transfer(&a, &act, 2, 3, 6).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.data["koszul_base"], serde_json::json!(true));
        assert_eq!(r.data["koszul_smash"], serde_json::json!(true));
        assert_eq!(r.data["ext_dims"], serde_json::json!([3, 9, 9, 3]));
    }

    #[test]
    fn cubic_transfer_with_two_fold_grading() {
        let q = QuotientAlgebra::new(catalog::cubic(true), 7);
        let a = GradedAlgebra::from_quotient(&q);
        let act = HAction::from_grading(&q).unwrap();
        let r = verify_thm_koszul_transfer(&a, &act, 3, 4, 7).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.data["koszul_base"], serde_json::json!(true));
        assert_eq!(r.data["koszul_smash"], serde_json::json!(true));
    }
}
