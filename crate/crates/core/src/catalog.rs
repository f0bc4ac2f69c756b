//! Ready-made presentations used by the demos and test suites.

use crate::field::Field;
use crate::group::FiniteGroup;
use crate::presentation::Presentation;
use crate::quiver::{Path, PathElement, Quiver};
use crate::{PresentationQ, Rational};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `k[x_1, ..., x_m]` as the loop quiver modulo all commutators, optionally
/// graded by `Z/n` with the given degrees of the variables.
pub fn polynomial(vars: &[&str], grading: Option<(usize, &[usize])>) -> PresentationQ {
    let mut quiver = Quiver::loops(vars);
    let group = grading.map(|(n, degs)| {
        quiver = quiver.with_g_degrees(&degs.iter().map(|d| d % n).collect::<Vec<_>>());
        FiniteGroup::cyclic(n).expect("n ≥ 1")
    });
    let mut rels = Vec::new();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            rels.push(commutator(&quiver, i, j));
        }
    }
    Presentation::new(quiver, rels, group).expect("polynomial relations are homogeneous")
}

fn commutator(quiver: &Quiver, i: usize, j: usize) -> PathElement<Rational> {
    let p = |w: &[usize]| quiver.path(w).expect("loops compose");
    PathElement::from_terms([(q(1), p(&[i, j])), (q(-1), p(&[j, i]))])
}

/// `k[x, y, z]`, with the grading by `Z/n` sending every variable to the
/// generator `λ` when `n` is given.
pub fn kxyz(n: Option<usize>) -> PresentationQ {
    match n {
        Some(n) => polynomial(&["x", "y", "z"], Some((n, &[1, 1, 1]))),
        None => polynomial(&["x", "y", "z"], None),
    }
}

/// The free algebra on loops with the given labels.
pub fn free_algebra(vars: &[&str]) -> PresentationQ {
    Presentation::new(Quiver::loops(vars), Vec::new(), None).expect("no relations")
}

/// Loop quiver modulo monomial relations given as words.
pub fn monomial(vars: &[&str], words: &[&[&str]]) -> PresentationQ {
    let quiver = Quiver::loops(vars);
    let rels = words
        .iter()
        .map(|w| PathElement::from_path(quiver.path_from_labels(w).expect("labels of the quiver")))
        .collect();
    Presentation::new(quiver, rels, None).expect("monomial relations are homogeneous")
}

/// The cubic algebra `k⟨x, y⟩/(x²y − yx², xy² − y²x)`, optionally graded by
/// `Z/2` with both generators odd.
pub fn cubic(graded: bool) -> PresentationQ {
    let mut quiver = Quiver::loops(&["x", "y"]);
    let group = graded.then(|| {
        quiver = quiver.with_g_degrees(&[1, 1]);
        FiniteGroup::cyclic(2).expect("Z/2")
    });
    let p = |w: &[&str]| -> Path { quiver.path_from_labels(w).expect("labels of the quiver") };
    let rels = vec![
        PathElement::from_terms([(q(1), p(&["x", "x", "y"])), (q(-1), p(&["y", "x", "x"]))]),
        PathElement::from_terms([(q(1), p(&["x", "y", "y"])), (q(-1), p(&["y", "y", "x"]))]),
    ];
    Presentation::new(quiver, rels, group).expect("cubic relations are homogeneous")
}

/// `k⟨x, y, z⟩/(x², yz, xz − z²)`: quadratic but not Koszul, with a
/// degree-4 generator in homological degree 3.
pub fn non_koszul() -> PresentationQ {
    let quiver = Quiver::loops(&["x", "y", "z"]);
    let p = |w: &[&str]| -> Path { quiver.path_from_labels(w).expect("labels of the quiver") };
    let rels = vec![
        PathElement::from_path(p(&["x", "x"])),
        PathElement::from_path(p(&["y", "z"])),
        PathElement::from_terms([(q(1), p(&["x", "z"])), (q(-1), p(&["z", "z"]))]),
    ];
    Presentation::new(quiver, rels, None).expect("quadratic relations are homogeneous")
}
