//! Quivers, paths and formal combinations of paths.
//!
//! Paths are stored in *written* order: the word `x y` is the composite
//! "first `y`, then `x`", so `x y` is a path only when `source(x) == target(y)`.
//! Files list paths in the same written order.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub n_degree: usize,
    pub g_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Quiver(format!("duplicate vertex label `{v}`")));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.label == a.label) || vertices.contains(&a.label) {
                return Err(Error::Quiver(format!("duplicate label `{}`", a.label)));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::Quiver(format!("arrow `{}` has an endpoint out of range", a.label)));
            }
            if a.n_degree == 0 {
                return Err(Error::Quiver(format!("arrow `{}` has degree 0", a.label)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// One vertex with the given loops, all of degree one and trivial group degree.
    pub fn loops(labels: &[&str]) -> Self {
        let arrows = labels
            .iter()
            .map(|l| Arrow { label: (*l).to_string(), source: 0, target: 0, n_degree: 1, g_degree: 0 })
            .collect();
        Quiver::new(vec!["v".into()], arrows).expect("loop quiver")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, label: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.label == label).ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == label).ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    pub fn max_arrow_degree(&self) -> usize {
        self.arrows.iter().map(|a| a.n_degree).max().unwrap_or(1)
    }

    /// Same quiver with arrows declared in reverse order.
    pub fn reversed_arrow_order(&self) -> (Quiver, Vec<usize>) {
        let n = self.arrows.len();
        let arrows = self.arrows.iter().rev().cloned().collect();
        let perm = (0..n).map(|i| n - 1 - i).collect();
        (Quiver { vertices: self.vertices.clone(), arrows }, perm)
    }

    pub fn with_g_degrees(&self, g_degrees: &[usize]) -> Self {
        let mut q = self.clone();
        for (a, g) in q.arrows.iter_mut().zip(g_degrees) {
            a.g_degree = *g;
        }
        q
    }

    pub fn trivial_path(&self, v: usize) -> Path {
        Path { n_degree: 0, arrows: Vec::new(), source: v, target: v }
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let ar = &self.arrows[a];
        Path { n_degree: ar.n_degree, arrows: vec![a], source: ar.source, target: ar.target }
    }

    /// Path from a written word of arrow indices; `None` if not composable.
    pub fn path(&self, word: &[usize]) -> Option<Path> {
        let first = *word.last()?;
        let mut source = self.arrows[first].source;
        let mut target = source;
        let mut deg = 0;
        for &a in word.iter().rev() {
            let ar = &self.arrows[a];
            if ar.source != target {
                return None;
            }
            target = ar.target;
            deg += ar.n_degree;
        }
        if word.is_empty() {
            source = target;
        }
        Some(Path { n_degree: deg, arrows: word.to_vec(), source, target })
    }

    pub fn path_from_labels(&self, labels: &[impl AsRef<str>]) -> Result<Path> {
        let word = labels.iter().map(|l| self.arrow_index(l.as_ref())).collect::<Result<Vec<_>>>()?;
        self.path(&word).ok_or_else(|| {
            let w: Vec<&str> = labels.iter().map(|l| l.as_ref()).collect();
            Error::Quiver(format!("`{}` is not a path", w.join(" ")))
        })
    }

    /// Group degree of a path: ordered product of arrow degrees in written order.
    pub fn g_degree(&self, p: &Path, group: &FiniteGroup) -> usize {
        group.product_of(p.arrows.iter().map(|&a| self.arrows[a].g_degree))
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("")
        }
    }

    /// All paths of total degree `d`, optionally with fixed `(source, target)`,
    /// in degree-lexicographic order by arrow declaration order.
    pub fn enumerate_paths(&self, d: usize, endpoints: Option<(usize, usize)>) -> Vec<Path> {
        let mut out = Vec::new();
        if d == 0 {
            for v in 0..self.num_vertices() {
                out.push(self.trivial_path(v));
            }
        } else {
            // grow written words to the right (i.e. prepend in traversal order)
            let mut stack: Vec<Path> = Vec::new();
            for a in 0..self.num_arrows() {
                if self.arrows[a].n_degree <= d {
                    stack.push(self.arrow_path(a));
                }
            }
            while let Some(p) = stack.pop() {
                if p.n_degree == d {
                    out.push(p);
                    continue;
                }
                for (b, ar) in self.arrows.iter().enumerate() {
                    if ar.target == p.source && p.n_degree + ar.n_degree <= d {
                        let mut arrows = p.arrows.clone();
                        arrows.push(b);
                        stack.push(Path { n_degree: p.n_degree + ar.n_degree, arrows, source: ar.source, target: p.target });
                    }
                }
            }
        }
        if let Some((s, t)) = endpoints {
            out.retain(|p| p.source == s && p.target == t);
        }
        out.sort();
        out
    }
}

/// A path. Ordering is degree first, then lexicographic on the written word,
/// then by endpoints (only relevant for trivial paths).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub n_degree: usize,
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl Path {
    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Written concatenation `self · other` ("first `other`, then `self`").
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { n_degree: self.n_degree + other.n_degree, arrows, source: other.source, target: self.target })
    }

    pub fn is_closed(&self) -> bool {
        self.source == self.target
    }
}

/// Formal linear combination of paths.
#[derive(Clone, PartialEq)]
pub struct PathElement<F> {
    terms: BTreeMap<Path, F>,
}

impl<F: Field> Default for PathElement<F> {
    fn default() -> Self {
        PathElement { terms: BTreeMap::new() }
    }
}

impl<F: Field> PathElement<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::from_terms([(F::one(), p)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (F, Path)>) -> Self {
        let mut e = Self::zero();
        for (c, p) in terms {
            e.add_term(c, p);
        }
        e
    }

    pub fn add_term(&mut self, c: F, p: Path) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Occupied(mut o) => {
                let v = o.get().clone() + c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(c.clone(), p.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, x)| (x.clone() * c.clone(), p.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Product in the path algebra; non-composable pairs vanish.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                if let Some(pq) = p.compose(q) {
                    out.add_term(a.clone() * b.clone(), pq);
                }
            }
        }
        out
    }

    /// The common n-degree, if the element is homogeneous and nonzero.
    pub fn n_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|p| p.n_degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Common endpoints `(source, target)` if all paths are parallel.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|p| (p.source, p.target));
        let e = it.next()?;
        it.all(|x| x == e).then_some(e)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let c = c.to_string();
            let (sign, mag) = match c.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", c),
            };
            if i == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            if mag != "1" {
                s.push_str(&mag);
                s.push('*');
            }
            s.push_str(&q.path_label(p));
        }
        s
    }
}

impl<F: Field> fmt::Debug for PathElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(p, c)| (&p.arrows, c.to_string()))).finish()
    }
}
