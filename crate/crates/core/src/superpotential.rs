//! Superpotentials: linear combinations of closed paths up to rotation,
//! their cyclic derivatives, Jacobian presentations and lifts to coverings.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::presentation::Presentation;
use crate::quiver::{PathElement, Quiver};
use crate::smash::Covering;

/// Least rotation of a written word.
pub fn least_rotation(word: &[usize]) -> Vec<usize> {
    (0..word.len().max(1))
        .map(|i| {
            let mut w = word[i.min(word.len())..].to_vec();
            w.extend_from_slice(&word[..i.min(word.len())]);
            w
        })
        .min()
        .unwrap_or_default()
}

/// An element of `kQ/[kQ, kQ]` spanned by closed paths, each stored as its
/// least rotation.
#[derive(Clone, Debug, PartialEq)]
pub struct Superpotential<F: Field> {
    quiver: Quiver,
    terms: BTreeMap<Vec<usize>, F>,
}

impl<F: Field> Superpotential<F> {
    pub fn new(quiver: Quiver, words: impl IntoIterator<Item = (F, Vec<usize>)>) -> Result<Self> {
        let mut terms = BTreeMap::new();
        let mut degree = None;
        for (c, w) in words {
            let p = quiver.path(&w).ok_or_else(|| Error::Superpotential(format!("word {w:?} is not a path")))?;
            if w.is_empty() || !p.is_closed() {
                return Err(Error::Superpotential(format!("`{}` is not a closed path", quiver.path_label(&p))));
            }
            if *degree.get_or_insert(p.n_degree) != p.n_degree {
                return Err(Error::Inhomogeneous("superpotential terms of different degrees".into()));
            }
            let e = terms.entry(least_rotation(&w)).or_insert_with(F::zero);
            *e = e.clone() + c;
        }
        terms.retain(|_, c: &mut F| !c.is_zero());
        Ok(Superpotential { quiver, terms })
    }

    pub fn from_labels(quiver: Quiver, words: &[(F, Vec<&str>)]) -> Result<Self> {
        let words = words
            .iter()
            .map(|(c, w)| Ok((c.clone(), w.iter().map(|l| quiver.arrow_index(l)).collect::<Result<Vec<_>>>()?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver, words)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Normalized words with their coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let e = PathElement::from_terms(
            self.terms.iter().map(|(w, c)| (c.clone(), self.quiver.path(w).expect("stored words are paths"))),
        );
        e.display(&self.quiver)
    }

    /// `∂_a W`: each occurrence of `a` is rotated to the front and deleted.
    pub fn cyclic_derivative(&self, a: usize) -> PathElement<F> {
        let mut out = PathElement::zero();
        for (w, c) in &self.terms {
            for (i, &x) in w.iter().enumerate() {
                if x != a {
                    continue;
                }
                let mut rest = w[i + 1..].to_vec();
                rest.extend_from_slice(&w[..i]);
                let path = if rest.is_empty() {
                    self.quiver.trivial_path(self.quiver.arrow(a).source)
                } else {
                    self.quiver.path(&rest).expect("rotations of closed paths are paths")
                };
                out.add_term(c.clone(), path);
            }
        }
        out
    }

    /// `kQ/(∂_a W | a ∈ Q_1)`, with zero derivatives dropped.
    pub fn jacobian_presentation(&self, group: Option<FiniteGroup>) -> Result<Presentation<F>> {
        let rels =
            (0..self.quiver.num_arrows()).map(|a| self.cyclic_derivative(a)).filter(|r| !r.is_zero()).collect();
        Presentation::new(self.quiver.clone(), rels, group)
    }

    /// Lift to the covering: every word is lifted from each covering vertex
    /// over its first traversed vertex; all lifts must close up.
    pub fn lift(&self, covering: &Covering<F>) -> Result<Superpotential<F>> {
        let g = &covering.group;
        let mut words = Vec::new();
        for (w, c) in &self.terms {
            let p = self.quiver.path(w).expect("stored words are paths");
            let gd = self.quiver.g_degree(&p, g);
            if gd != g.identity() {
                return Err(Error::Superpotential(format!(
                    "`{}` has group degree {} ≠ identity, so it admits no closed lift",
                    self.quiver.path_label(&p),
                    g.label(gd)
                )));
            }
            for h in 0..g.order() {
                let lifted = covering.lift_path(&p, h);
                words.push((c.clone(), lifted.arrows));
            }
        }
        Superpotential::new(covering.presentation.quiver().clone(), words)
    }
}
