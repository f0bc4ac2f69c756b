//! Two-sided ideals of a path algebra spanned directly by the products `p·r·q`.
//!
//! This is the slow, transparent route; the quotient bases in
//! [`crate::presentation`] are checked against it.

use std::collections::HashMap;

use crate::field::Field;
use crate::linalg::{Echelon, SparseVec};
use crate::quiver::{Path, PathElement, Quiver};
use crate::report::Report;

/// All paths of degree `j` and the vectors `p·r·q` spanning `I_j` in their coordinates.
pub fn ideal_spanning_set<F: Field>(quiver: &Quiver, rels: &[PathElement<F>], j: usize) -> (Vec<Path>, Vec<SparseVec<F>>) {
    let paths = quiver.enumerate_paths(j, None);
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let by_degree: Vec<Vec<Path>> = (0..=j).map(|d| quiver.enumerate_paths(d, None)).collect();
    let mut vecs = Vec::new();
    for r in rels {
        let Some(e) = r.n_degree() else { continue };
        if e > j {
            continue;
        }
        for a in 0..=j - e {
            for p in &by_degree[a] {
                for q in &by_degree[j - e - a] {
                    let mut v = std::collections::BTreeMap::<usize, F>::new();
                    for (path, c) in r.terms() {
                        let Some(full) = p.compose(path).and_then(|pr| pr.compose(q)) else { continue };
                        let slot = v.entry(index[&full]).or_insert_with(F::zero);
                        *slot = slot.clone() + c.clone();
                    }
                    let v: SparseVec<F> = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    if !v.is_empty() {
                        vecs.push(v);
                    }
                }
            }
        }
    }
    (paths, vecs)
}

/// `dim I_j` for `j = 0..=dmax`.
pub fn ideal_dims<F: Field>(quiver: &Quiver, rels: &[PathElement<F>], dmax: usize) -> Vec<usize> {
    (0..=dmax)
        .map(|j| {
            let (paths, vecs) = ideal_spanning_set(quiver, rels, j);
            crate::linalg::span_rank(&vecs, paths.len())
        })
        .collect()
}

/// The two-sided ideals generated by `a` and `b` agree in every degree `≤ dmax`.
pub fn ideal_equality_check<F: Field>(
    quiver: &Quiver,
    a: &[PathElement<F>],
    b: &[PathElement<F>],
    dmax: usize,
) -> Report {
    let mut r = Report::new("ideal equality").with_bounds(0, dmax);
    for j in 0..=dmax {
        let (paths, va) = ideal_spanning_set(quiver, a, j);
        let (_, vb) = ideal_spanning_set(quiver, b, j);
        let mut ea = Echelon::new(paths.len());
        for v in &va {
            ea.insert(v);
        }
        let mut eb = Echelon::new(paths.len());
        for v in &vb {
            eb.insert(v);
        }
        let b_in_a = vb.iter().all(|v| ea.contains(v));
        let a_in_b = va.iter().all(|v| eb.contains(v));
        r.check(
            format!("degree {j}"),
            a_in_b && b_in_a,
            format!("dimensions {} and {}", ea.rank(), eb.rank()),
        );
    }
    r
}
