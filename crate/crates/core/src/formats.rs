//! JSON problem bundles: presentations, Hopf algebras, actions,
//! superpotentials and dg algebras, with eager validation.
//!
//! Matrices are lists of rows; column `j` is the image of basis element `j`.
//! Coefficients are integers or strings `"p/q"`. Paths are written words:
//! `["x", "y"]` is "first `y`, then `x`".

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::action::HAction;
use crate::dg::{DgAction, DgAlgebra};
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational, Field};
use crate::group::FiniteGroup;
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::presentation::{Presentation, QuotientAlgebra};
use crate::quiver::{Arrow, PathElement, Quiver};
use crate::superpotential::Superpotential;
use crate::{HopfAlgebraQ, MatrixQ, PresentationQ, Rational};

/// A rational read from an integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq)]
pub struct Coef(pub Rational);

impl<'de> Deserialize<'de> for Coef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Coef;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a rational string \"p/q\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Coef, E> {
                Ok(Coef(Rational::from_int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Coef, E> {
                i64::try_from(v).map(|v| Coef(Rational::from_int(v))).map_err(|_| E::custom("integer too large"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Coef, E> {
                parse_rational(v).map(Coef).ok_or_else(|| E::custom(format!("`{v}` is not a rational number")))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Deserialize, Debug, Clone)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic(usize),
    Table(Vec<Vec<usize>>),
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Table(t) => FiniteGroup::from_table(t.clone()),
            GroupSpec::Product(gs) => {
                let mut g = FiniteGroup::cyclic(1)?;
                for s in gs {
                    g = g.product(&s.build()?);
                }
                Ok(g)
            }
        }
    }
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub label: String,
    pub from: String,
    pub to: String,
    #[serde(default)]
    pub gdeg: usize,
    #[serde(default = "one")]
    pub deg: usize,
}

fn one() -> usize {
    1
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coef: Coef,
    pub path: Vec<String>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
    pub group: Option<GroupSpec>,
}

#[derive(Deserialize, Debug, Clone, Default)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub group: Option<GroupSpec>,
    #[serde(default)]
    pub dual: bool,
    pub dim: Option<usize>,
    pub labels: Option<Vec<String>>,
    pub mult: Option<Vec<Vec<Vec<Coef>>>>,
    pub unit: Option<Vec<Coef>>,
    pub comult: Option<Vec<Vec<Vec<Coef>>>>,
    pub counit: Option<Vec<Coef>>,
    pub antipode: Option<Vec<Vec<Coef>>>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum ActionSpec {
    Named(String),
    Explicit {
        #[serde(default)]
        on_vertices: BTreeMap<String, Vec<Vec<Coef>>>,
        on_arrows: BTreeMap<String, Vec<Vec<Coef>>>,
    },
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct DgActionSpec {
    pub hopf: HopfSpec,
    pub on_basis: BTreeMap<String, Vec<Vec<Coef>>>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct DgSpec {
    pub degrees: Vec<i64>,
    pub labels: Option<Vec<String>>,
    pub mult: Vec<Vec<Vec<Coef>>>,
    pub unit: Option<Vec<Coef>>,
    pub diff: Option<Vec<Vec<Coef>>>,
    pub action: Option<DgActionSpec>,
}

#[derive(Deserialize, Debug, Clone, Default, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BoundsSpec {
    pub hmax: Option<usize>,
    pub dmax: Option<usize>,
    pub range: Option<usize>,
    pub d: Option<usize>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct BundleSpec {
    pub name: Option<String>,
    pub description: Option<String>,
    pub presentation: Option<PresentationSpec>,
    pub hopf: Option<HopfSpec>,
    pub action: Option<ActionSpec>,
    pub superpotential: Option<Vec<TermSpec>>,
    pub dg: Option<DgSpec>,
    #[serde(default)]
    pub bounds: BoundsSpec,
    pub seed: Option<u64>,
}

/// How `H` acts on the path algebra.
#[derive(Clone, Debug)]
pub enum ActionData {
    /// `kG*` through the grading of the presentation.
    Grading,
    /// Matrices on the arrow span, one per basis element of `H`.
    Arrows(Vec<MatrixQ>),
}

#[derive(Clone, Debug)]
pub struct DgData {
    pub algebra: DgAlgebra<Rational>,
    pub action: Option<DgAction<Rational>>,
}

/// A validated problem bundle.
#[derive(Clone, Debug)]
pub struct Bundle {
    pub name: Option<String>,
    pub presentation: Option<PresentationQ>,
    pub hopf: Option<HopfAlgebraQ>,
    pub action: Option<ActionData>,
    pub superpotential: Option<Superpotential<Rational>>,
    pub dg: Option<DgData>,
    pub bounds: BoundsSpec,
    pub seed: Option<u64>,
}

fn coefs(v: &[Coef]) -> Vec<Rational> {
    v.iter().map(|c| c.0.clone()).collect()
}

fn matrix(rows: &[Vec<Coef>], n_rows: usize, n_cols: usize, what: &str) -> Result<MatrixQ> {
    if rows.len() != n_rows || rows.iter().any(|r| r.len() != n_cols) {
        return Err(Error::Format(format!("{what}: expected a {n_rows}×{n_cols} matrix")));
    }
    Matrix::from_rows(rows.iter().map(|r| coefs(r)).collect(), n_cols)
}

fn cube(t: &[Vec<Vec<Coef>>]) -> Vec<Vec<Vec<Rational>>> {
    t.iter().map(|r| r.iter().map(|v| coefs(v)).collect()).collect()
}

pub fn build_presentation(spec: &PresentationSpec) -> Result<PresentationQ> {
    let vertex = |l: &str, arrow: &str| {
        spec.vertices.iter().position(|v| v == l).ok_or_else(|| {
            Error::Format(format!("arrow `{arrow}` refers to vertex `{l}`, which is not among the vertices"))
        })
    };
    let arrows = spec
        .arrows
        .iter()
        .map(|a| {
            Ok(Arrow {
                label: a.label.clone(),
                source: vertex(&a.from, &a.label)?,
                target: vertex(&a.to, &a.label)?,
                n_degree: a.deg,
                g_degree: a.gdeg,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let quiver = Quiver::new(spec.vertices.clone(), arrows)?;
    let group = spec.group.as_ref().map(GroupSpec::build).transpose()?;
    let relations = spec
        .relations
        .iter()
        .enumerate()
        .map(|(i, terms)| element(&quiver, terms).map_err(|e| Error::Format(format!("relation {i}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(quiver, relations, group)
}

fn element(quiver: &Quiver, terms: &[TermSpec]) -> Result<PathElement<Rational>> {
    let mut e = PathElement::zero();
    for t in terms {
        e.add_term(t.coef.0.clone(), quiver.path_from_labels(&t.path)?);
    }
    Ok(e)
}

pub fn build_hopf(spec: &HopfSpec) -> Result<HopfAlgebraQ> {
    if let Some(g) = &spec.group {
        let g = g.build()?;
        return Ok(if spec.dual { HopfAlgebra::dual_group_algebra(&g) } else { HopfAlgebra::group_algebra(&g) });
    }
    let missing = |f: &str| Error::Format(format!("Hopf algebra: either `group` or raw `{f}` is required"));
    let mult = cube(spec.mult.as_ref().ok_or_else(|| missing("mult"))?);
    let comult = cube(spec.comult.as_ref().ok_or_else(|| missing("comult"))?);
    let counit = coefs(spec.counit.as_ref().ok_or_else(|| missing("counit"))?);
    let n = spec.dim.unwrap_or(counit.len());
    let antipode = matrix(spec.antipode.as_ref().ok_or_else(|| missing("antipode"))?, n, n, "antipode")?;
    let labels = spec.labels.clone().unwrap_or_else(|| (0..n).map(|i| format!("b{i}")).collect());
    let unit = match &spec.unit {
        Some(u) => coefs(u),
        None => solve_unit(&mult, n)?,
    };
    let h = HopfAlgebra::from_structure_constants(labels, mult, unit, comult, counit, antipode)?;
    let report = h.verify_axioms();
    match report.first_failure() {
        Some(f) => Err(Error::Hopf(format!("{}: {}", f.name, f.detail))),
        None => Ok(h),
    }
}

/// The `u` with `u e_j = e_j` for all `j`.
fn solve_unit(mult: &[Vec<Vec<Rational>>], n: usize) -> Result<Vec<Rational>> {
    if mult.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
        return Err(Error::Format(format!("Hopf algebra: `mult` must be {n}×{n}×{n}")));
    }
    let rows: Vec<Vec<Rational>> = (0..n * n).map(|r| (0..n).map(|i| mult[i][r / n][r % n].clone()).collect()).collect();
    let m = Matrix::from_rows(rows, n)?;
    let b: Vec<Rational> = (0..n * n).map(|r| if r / n == r % n { Rational::one() } else { Rational::zero() }).collect();
    m.solve(&b)?.ok_or_else(|| Error::Hopf("multiplication has no unit".into()))
}

fn per_label(
    hopf: &HopfAlgebraQ,
    given: &BTreeMap<String, Vec<Vec<Coef>>>,
    size: usize,
    what: &str,
) -> Result<Vec<MatrixQ>> {
    for l in given.keys() {
        if hopf.label_index(l).is_err() {
            return Err(Error::Format(format!(
                "{what} references `{l}`, which is not a basis label of H ({})",
                hopf.labels().join(", ")
            )));
        }
    }
    hopf.labels()
        .iter()
        .map(|l| {
            let rows = given.get(l).ok_or_else(|| Error::Format(format!("{what} gives no matrix for `{l}`")))?;
            matrix(rows, size, size, &format!("{what} `{l}`"))
        })
        .collect()
}

pub fn build_dg(spec: &DgSpec) -> Result<DgData> {
    let n = spec.degrees.len();
    let labels = spec.labels.clone().unwrap_or_else(|| (0..n).map(|i| format!("e{i}")).collect());
    let unit = match &spec.unit {
        Some(u) => coefs(u),
        None => crate::linalg::unit_vec(n, 0),
    };
    let diff = match &spec.diff {
        Some(d) => matrix(d, n, n, "differential")?,
        None => Matrix::zeros(n, n),
    };
    let algebra = DgAlgebra::new(spec.degrees.clone(), labels, cube(&spec.mult), unit, diff)?;
    let action = match &spec.action {
        Some(a) => {
            let hopf = build_hopf(&a.hopf)?;
            let rho = per_label(&hopf, &a.on_basis, n, "dg action")?;
            Some(DgAction::new(hopf, rho)?)
        }
        None => None,
    };
    Ok(DgData { algebra, action })
}

impl Bundle {
    pub fn from_spec(spec: BundleSpec) -> Result<Bundle> {
        let presentation = spec.presentation.as_ref().map(build_presentation).transpose()?;
        let mut hopf = spec.hopf.as_ref().map(build_hopf).transpose()?;
        let action = match &spec.action {
            None => None,
            Some(ActionSpec::Named(s)) if s == "grading" => {
                let p = presentation.as_ref().ok_or_else(|| Error::Format("a grading action needs a presentation".into()))?;
                let g = p.group().ok_or_else(|| Error::Format("a grading action needs a presentation group".into()))?;
                match &hopf {
                    Some(h) if h.labels() != HopfAlgebra::<Rational>::dual_group_algebra(g).labels() => {
                        return Err(Error::Format(format!(
                            "grading group of order {} does not match H with basis ({})",
                            g.order(),
                            h.labels().join(", ")
                        )))
                    }
                    Some(_) => {}
                    None => hopf = Some(HopfAlgebra::dual_group_algebra(g)),
                }
                let report = p.check_g_homogeneity();
                if let Some(f) = report.first_failure() {
                    return Err(Error::Inhomogeneous(format!("{}: {}", f.name, f.detail)));
                }
                Some(ActionData::Grading)
            }
            Some(ActionSpec::Named(s)) => {
                return Err(Error::Format(format!("unknown action `{s}`; expected \"grading\" or explicit matrices")))
            }
            Some(ActionSpec::Explicit { on_vertices, on_arrows }) => {
                let p = presentation.as_ref().ok_or_else(|| Error::Format("an action needs a presentation".into()))?;
                let h = hopf.as_ref().ok_or_else(|| Error::Format("an action needs a Hopf algebra".into()))?;
                let nv = p.quiver().num_vertices();
                if !on_vertices.is_empty() {
                    for (i, m) in per_label(h, on_vertices, nv, "action on vertices")?.iter().enumerate() {
                        if *m != Matrix::identity(nv).scale(&h.counit()[i]) {
                            return Err(Error::Unsupported(format!(
                                "`{}` must act on vertices through the counit",
                                h.labels()[i]
                            )));
                        }
                    }
                }
                let mats = per_label(h, on_arrows, p.quiver().num_arrows(), "action")?;
                let top = p.relations().iter().filter_map(|r| r.n_degree()).max().unwrap_or(1);
                let q = QuotientAlgebra::new(p.clone(), top);
                let act = HAction::from_arrow_action(h.clone(), &q, mats.clone())?;
                let report = crate::action::verify_module_algebra(&GradedAlgebraQ::from_quotient(&q), &act, Some(&q), top);
                if let Some(f) = report.first_failure() {
                    return Err(Error::Action(format!("{}: {}", f.name, f.detail)));
                }
                Some(ActionData::Arrows(mats))
            }
        };
        let superpotential = match &spec.superpotential {
            Some(terms) => {
                let p = presentation
                    .as_ref()
                    .ok_or_else(|| Error::Format("a superpotential needs a presentation".into()))?;
                let quiver = p.quiver();
                let words = terms
                    .iter()
                    .map(|t| {
                        let w = t.path.iter().map(|l| quiver.arrow_index(l)).collect::<Result<Vec<_>>>()?;
                        Ok((t.coef.0.clone(), w))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Some(Superpotential::new(quiver.clone(), words)?)
            }
            None => None,
        };
        let dg = spec.dg.as_ref().map(build_dg).transpose()?;
        Ok(Bundle {
            name: spec.name,
            presentation,
            hopf,
            action,
            superpotential,
            dg,
            bounds: spec.bounds,
            seed: spec.seed,
        })
    }

    /// The action on `A = kQ/I` up to the degree of `q`.
    pub fn h_action(&self, q: &QuotientAlgebra<Rational>) -> Result<HAction<Rational>> {
        match &self.action {
            Some(ActionData::Grading) => HAction::from_grading(q),
            Some(ActionData::Arrows(m)) => {
                HAction::from_arrow_action(self.hopf.clone().expect("validated with the action"), q, m.clone())
            }
            None => Err(Error::Format("the bundle has no action".into())),
        }
    }
}

type GradedAlgebraQ = crate::GradedAlgebraQ;

pub fn parse_bundle(text: &str) -> Result<Bundle> {
    let spec: BundleSpec = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    Bundle::from_spec(spec)
}

pub fn load_bundle(path: &std::path::Path) -> Result<Bundle> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    parse_bundle(&text).map_err(|e| match e {
        Error::Format(m) => Error::Format(format!("{}: {m}", path.display())),
        e => e,
    })
}

pub fn rational_json(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn matrix_json(m: &MatrixQ) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(m.row(i))).collect())
}

pub fn group_json(g: &FiniteGroup) -> Value {
    let n = g.order();
    match FiniteGroup::cyclic(n) {
        Ok(c) if c.table() == g.table() => json!({ "cyclic": n }),
        _ => json!({ "table": g.table() }),
    }
}

fn element_json(quiver: &Quiver, e: &PathElement<Rational>) -> Value {
    Value::Array(
        e.terms()
            .map(|(p, c)| {
                let path: Vec<&str> = p.arrows.iter().map(|&a| quiver.arrow(a).label.as_str()).collect();
                json!({ "coef": format_rational(c), "path": path })
            })
            .collect(),
    )
}

/// The presentation in bundle format.
pub fn presentation_json(p: &PresentationQ) -> Value {
    let q = p.quiver();
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .map(|a| {
            json!({
                "label": a.label,
                "from": q.vertices()[a.source],
                "to": q.vertices()[a.target],
                "gdeg": a.g_degree,
                "deg": a.n_degree,
            })
        })
        .collect();
    let mut v = json!({
        "vertices": q.vertices(),
        "arrows": arrows,
        "relations": p.relations().iter().map(|r| element_json(q, r)).collect::<Vec<_>>(),
    });
    if let Some(g) = p.group() {
        v["group"] = group_json(g);
    }
    v
}

/// The superpotential in bundle format, one term per normalized cyclic word.
pub fn superpotential_json(w: &Superpotential<Rational>) -> Value {
    let q = w.quiver();
    Value::Array(
        w.terms()
            .map(|(word, c)| {
                let path: Vec<&str> = word.iter().map(|&a| q.arrow(a).label.as_str()).collect();
                json!({ "coef": format_rational(c), "path": path })
            })
            .collect(),
    )
}
