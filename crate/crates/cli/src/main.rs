//! `smash`: command-line front end to the smash-core verification suites.
//!
//! Exit status: 0 when every verdict passes, 1 on a refutation, 2 when a
//! verdict is inconclusive within the bounds, 3 on invalid input.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use smash_core::algebra::combination_label;
use smash_core::formats::{self, presentation_json, superpotential_json, vector_json};
use smash_core::{
    adjoint_phi, basic_smash_product_q, cohomology_algebra, covering_presentation, cy_check, d_koszul_check,
    dg_smash_cohomology_check, generation_check, gorenstein_check_bounded, graded_symmetric_check, ideal_equality_check,
    minimal_resolution, smash_product, theta_check, verify_cor_ext, verify_covering_iso, verify_dg, verify_dg_action,
    verify_module_algebra, verify_thm_koszul_transfer, yoneda_ext_algebra, Bundle, Error, GradedAlgebraQ, HAction,
    HModule, HopfAlgebra, MinimalResolution, ModuleRep, QuotientAlgebra, Rational, Report, Verdict,
};

const DEMO_BUNDLE: &str = include_str!("../examples/kxyz_n3.json");

#[derive(Parser)]
#[command(name = "smash", version, about = "Exact verification of smash products, resolutions and Ext algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone, Default)]
struct Opts {
    /// Write the machine-readable report here (`-` for stdout)
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Homological bound N [default: bundle, else 4]
    #[arg(long, global = true)]
    hmax: Option<usize>,
    /// Internal-degree bound D [default: bundle, else 6]
    #[arg(long, global = true)]
    dmax: Option<usize>,
    /// Seed of every randomized check [default: bundle, else 0]
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Homological range of Ext products [default: N]
    #[arg(long, global = true)]
    range: Option<usize>,
    /// Relation degree d for d-Koszul checks [default: homogeneity degree]
    #[arg(long, global = true)]
    d: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Hopf axioms, left integral and semisimplicity
    VerifyHopf { bundle: PathBuf },
    /// Module-algebra axioms and the smash product A#H
    Smash { bundle: PathBuf },
    /// Covering presentation and the isomorphism R#kG* ≅ S
    Cover { bundle: PathBuf },
    /// Minimal graded free resolution of the simple modules
    Resolve {
        bundle: PathBuf,
        /// Build H-equivariant sections; uses the bundle's action, or the
        /// `hopf` and `action` of the given file
        #[arg(long, num_args = 0..=1, value_name = "ACTION")]
        equivariant: Option<Option<PathBuf>>,
    },
    /// Yoneda Ext algebra
    Ext {
        bundle: PathBuf,
        /// Report structure constants, product ranks and generation
        #[arg(long)]
        products: bool,
    },
    /// d-Koszul test with the Betti table
    Koszul { bundle: PathBuf },
    /// Graded symmetric test of the Ext algebra (of A#H when the bundle has an action)
    Symmetric {
        bundle: PathBuf,
        /// Use A even when the bundle has an action
        #[arg(long)]
        base: bool,
    },
    /// Calabi-Yau test (of A#H when the bundle has an action)
    Cy {
        bundle: PathBuf,
        #[arg(long)]
        base: bool,
    },
    /// Superpotential calculus
    #[command(subcommand)]
    Superpotential(SuperpotentialCommand),
    /// θ : Hom_A(P, P)#H → Hom_{A#H}(P⊗H, P⊗H) on the truncated regular module
    VerifyTheta {
        bundle: PathBuf,
        /// Truncation degree of A
        #[arg(long, default_value_t = 2)]
        top: usize,
        /// Random pairs on top of all basis pairs
        #[arg(long, default_value_t = 100)]
        pairs: usize,
    },
    /// H-linearity of the adjunction Hom(W, Hom_A(M, N)) ≅ Hom_A(M⊗W, N)
    VerifyAdjoint {
        bundle: PathBuf,
        /// Truncation degree of the resolution pieces
        #[arg(long, default_value_t = 3)]
        top: usize,
    },
    /// Ext over A#H against H-invariants of Ext over A
    VerifyCorExt { bundle: PathBuf },
    /// d-Koszulness and E(A#H) ≅ E(A)#H
    VerifyKoszulTransfer { bundle: PathBuf },
    /// H(A#H) ≅ H(A)#H for the bundle's dg algebra
    VerifyPropCohomology { bundle: PathBuf },
    /// Bounded AS-Gorenstein test
    Gorenstein { bundle: PathBuf },
    /// End-to-end run on k[x,y,z] graded by Z/3 (or on the given bundle)
    Demo { bundle: Option<PathBuf> },
}

#[derive(Subcommand)]
enum SuperpotentialCommand {
    /// Cyclic derivatives, compared with the relations of the presentation
    Derive { bundle: PathBuf },
    /// Lift to the covering quiver
    Lift { bundle: PathBuf },
    /// The Jacobian presentation
    Jacobian { bundle: PathBuf },
}

/// Bundle with resolved bounds.
struct Ctx {
    bundle: Bundle,
    path: String,
    hmax: usize,
    dmax: usize,
    seed: u64,
    range: Option<usize>,
    d: Option<usize>,
}

impl Ctx {
    fn new(bundle: Bundle, path: String, o: &Opts) -> Ctx {
        let b = &bundle.bounds;
        Ctx {
            hmax: o.hmax.or(b.hmax).unwrap_or(4),
            dmax: o.dmax.or(b.dmax).unwrap_or(6),
            seed: o.seed.or(bundle.seed).unwrap_or(0),
            range: o.range.or(b.range),
            d: o.d.or(b.d),
            bundle,
            path,
        }
    }

    fn load(path: &Path, o: &Opts) -> Result<Ctx> {
        Ok(Ctx::new(formats::load_bundle(path)?, path.display().to_string(), o))
    }

    fn quotient(&self) -> Result<QuotientAlgebra<Rational>> {
        let p = self.bundle.presentation.clone().ok_or_else(|| anyhow!("the bundle has no `presentation`"))?;
        Ok(QuotientAlgebra::new(p, self.dmax))
    }

    fn algebra(&self) -> Result<(QuotientAlgebra<Rational>, GradedAlgebraQ)> {
        let q = self.quotient()?;
        let a = GradedAlgebraQ::from_quotient(&q);
        Ok((q, a))
    }

    fn action(&self, q: &QuotientAlgebra<Rational>) -> Result<HAction<Rational>> {
        if self.bundle.action.is_none() {
            bail!("the bundle has no `action`");
        }
        Ok(self.bundle.h_action(q)?)
    }

    fn with_action(&self) -> Result<(GradedAlgebraQ, HAction<Rational>)> {
        let (q, a) = self.algebra()?;
        let act = self.action(&q)?;
        Ok((a, act))
    }

    /// `A#H` (basic form) when the bundle has an action and `base` is off, else `A`.
    fn target(&self, base: bool) -> Result<(GradedAlgebraQ, &'static str)> {
        let (q, a) = self.algebra()?;
        if base || self.bundle.action.is_none() {
            return Ok((a, "A"));
        }
        let act = self.action(&q)?;
        Ok((basic_smash_product_q(&a, &act)?, "A#H"))
    }

    fn koszul_degree(&self) -> Result<usize> {
        if let Some(d) = self.d {
            return Ok(d);
        }
        self.bundle
            .presentation
            .as_ref()
            .and_then(|p| p.homogeneity_degree())
            .ok_or_else(|| anyhow!("relations are not all of one degree; pass --d"))
    }

    fn resolve(&self, a: &GradedAlgebraQ, act: Option<&HAction<Rational>>) -> Result<MinimalResolution<Rational>> {
        let simples: Vec<usize> = (0..a.num_vertices()).collect();
        Ok(minimal_resolution(a, &simples, self.hmax, self.dmax, act)?)
    }
}

fn betti(res: &MinimalResolution<Rational>) -> Value {
    Value::Array(
        res.betti_table().iter().map(|((n, j), c)| json!({"n": n, "degree": j, "count": c})).collect(),
    )
}

fn bigraded(table: &std::collections::BTreeMap<(usize, usize), usize>) -> Value {
    Value::Array(table.iter().map(|((n, j), c)| json!({"n": n, "degree": j, "dim": c})).collect())
}

fn verify_hopf(ctx: &Ctx) -> Result<Vec<Report>> {
    let hopf = match (&ctx.bundle.hopf, &ctx.bundle.presentation) {
        (Some(h), _) => h.clone(),
        (None, Some(p)) if p.group().is_some() => HopfAlgebra::dual_group_algebra(p.group().expect("checked")),
        _ => bail!("the bundle has no `hopf` and no graded presentation"),
    };
    let mut axioms = hopf.verify_axioms();
    axioms.set("labels", hopf.labels());
    let mut r = Report::new("left integral");
    let int = hopf.left_integral()?;
    r.set("integral", vector_json(&int.element));
    r.check("ε(Λ) = 1", int.normalized, "");
    r.check("semisimple", int.semisimple, "");
    let s = hopf.antipode();
    r.check("S² = id", s.mul(s) == smash_core::Matrix::identity(hopf.dim()), "");
    Ok(vec![axioms, r])
}

fn smash(ctx: &Ctx) -> Result<Vec<Report>> {
    let (q, a) = ctx.algebra()?;
    let act = ctx.action(&q)?;
    let module = verify_module_algebra(&a, &act, Some(&q), ctx.dmax);
    let b = smash_product(&a, &act)?;
    let mut r = b.verify(Some((50, ctx.seed)));
    r.name = "smash product A#H".into();
    r = r.with_bounds(0, ctx.dmax);
    let n = act.hopf().dim();
    let want: Vec<usize> = a.dims().iter().map(|d| d * n).collect();
    r.check("dim (A#H)_j = dim H · dim A_j", b.dims() == want.as_slice(), format!("{:?}", b.dims()));
    r.set("base_dims", a.dims());
    r.set("smash_dims", b.dims());
    if let Ok(basic) = basic_smash_product_q(&a, &act) {
        r.set("basic_vertices", basic.peirce().map(|p| p.vertices.clone()).unwrap_or_default());
    }
    Ok(vec![module, r])
}

fn cover(ctx: &Ctx) -> Result<Vec<Report>> {
    let p = ctx.bundle.presentation.as_ref().ok_or_else(|| anyhow!("the bundle has no `presentation`"))?;
    let cov = covering_presentation(p)?;
    let mut r = verify_covering_iso(p, ctx.dmax)?;
    let cq = cov.presentation.quiver();
    r.set("vertices", cq.num_vertices());
    r.set("arrows", cq.num_arrows());
    r.set("relations", cov.presentation.relations().len());
    r.set("covering", presentation_json(&cov.presentation));
    Ok(vec![r])
}

fn resolve(ctx: &Ctx, equivariant: &Option<Option<PathBuf>>) -> Result<Vec<Report>> {
    let (q, a) = ctx.algebra()?;
    let act = match equivariant {
        None => None,
        Some(None) => Some(ctx.action(&q)?),
        Some(Some(path)) => {
            let own: Value = serde_json::from_str(&std::fs::read_to_string(&ctx.path)?)?;
            let extra: Value = serde_json::from_str(
                &std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?,
            )
            .with_context(|| format!("{}", path.display()))?;
            let mut merged = own;
            for key in ["hopf", "action"] {
                match extra.get(key) {
                    Some(v) => merged[key] = v.clone(),
                    None => {
                        merged.as_object_mut().expect("bundle is an object").remove(key);
                    }
                }
            }
            let b = formats::parse_bundle(&merged.to_string())?;
            Some(b.h_action(&q)?)
        }
    };
    let res = ctx.resolve(&a, act.as_ref())?;
    let mut r = Report::new("minimal resolution").with_bounds(ctx.hmax, ctx.dmax);
    r.absorb(&res.verify_complex());
    r.absorb(&res.minimality_certificate());
    if act.is_some() {
        r.absorb(res.section_report());
    }
    r.set("betti", betti(&res));
    r.set("free_ranks", res.free_ranks());
    r.set("length", res.length());
    Ok(vec![r])
}

fn ext(ctx: &Ctx, products: bool) -> Result<Vec<Report>> {
    let (_, a) = ctx.algebra()?;
    let res = ctx.resolve(&a, None)?;
    let range = ctx.range.unwrap_or(ctx.hmax);
    let e = yoneda_ext_algebra(&res, range)?;
    let mut r = Report::new("Yoneda Ext algebra").with_bounds(ctx.hmax, ctx.dmax);
    r.absorb(e.lift_check());
    r.set("dims", e.dims());
    r.set("bigraded_dims", bigraded(&e.bigraded_dims()));
    r.set("range", range);
    let mut out = vec![];
    if products {
        let alg = e.algebra();
        let mut consts = Vec::new();
        for i in 0..=alg.top_degree() {
            for j in 0..=alg.top_degree() - i {
                for x in 0..alg.dim(i) {
                    for y in 0..alg.dim(j) {
                        let prod = alg.mul_basis(i, x, j, y);
                        if prod.is_empty() {
                            continue;
                        }
                        let mut v = vec![Rational::from_integer(0.into()); alg.dim(i + j)];
                        for (k, c) in prod {
                            v[*k] = c.clone();
                        }
                        consts.push(json!({
                            "left": alg.labels(i)[x],
                            "right": alg.labels(j)[y],
                            "product": combination_label(&v, alg.labels(i + j)),
                        }));
                    }
                }
            }
        }
        r.set("products", consts);
        r.set(
            "product_ranks",
            alg.product_ranks().iter().map(|((i, j), k)| json!({"i": i, "j": j, "rank": k})).collect::<Vec<_>>(),
        );
        out.push(generation_check(alg, range));
    }
    out.insert(0, r);
    Ok(out)
}

fn koszul(ctx: &Ctx) -> Result<Vec<Report>> {
    let (_, a) = ctx.algebra()?;
    let d = ctx.koszul_degree()?;
    let res = ctx.resolve(&a, None)?;
    let mut r = d_koszul_check(&res, d);
    r.set("d", d);
    r.set("betti", betti(&res));
    Ok(vec![r])
}

fn symmetric(ctx: &Ctx, base: bool) -> Result<Vec<Report>> {
    let (a, which) = ctx.target(base)?;
    let res = ctx.resolve(&a, None)?;
    let e = yoneda_ext_algebra(&res, ctx.range.unwrap_or(ctx.hmax))?;
    let cert = graded_symmetric_check(e.algebra(), ctx.seed);
    let mut r = cert.report.clone().with_bounds(ctx.hmax, ctx.dmax);
    r.name = format!("E({which}) is graded symmetric");
    r.set("ext_dims", e.dims());
    r.set("form_degree", cert.degree);
    r.set("constraint_space_dim", cert.constraint_space.len());
    if let Some(tau) = &cert.tau {
        r.set("tau", vector_json(tau));
    }
    Ok(vec![r])
}

fn cy(ctx: &Ctx, base: bool) -> Result<Vec<Report>> {
    let (a, which) = ctx.target(base)?;
    let d = ctx.koszul_degree()?;
    let mut r = cy_check(&a, d, ctx.hmax, ctx.dmax, ctx.seed)?;
    r.name = format!("{which} is Calabi-Yau");
    Ok(vec![r])
}

fn superpotential(ctx: &Ctx, cmd: &SuperpotentialCommand) -> Result<Vec<Report>> {
    let w = ctx.bundle.superpotential.as_ref().ok_or_else(|| anyhow!("the bundle has no `superpotential`"))?;
    let p = ctx.bundle.presentation.as_ref().expect("a superpotential comes with a presentation");
    let quiver = w.quiver();
    match cmd {
        SuperpotentialCommand::Derive { .. } => {
            let mut r = Report::new("cyclic derivatives").with_bounds(0, ctx.dmax);
            r.set("superpotential", w.display());
            let derivs: Vec<Value> = (0..quiver.num_arrows())
                .map(|a| json!({"arrow": quiver.arrow(a).label, "derivative": w.cyclic_derivative(a).display(quiver)}))
                .collect();
            r.set("derivatives", derivs);
            let jac = w.jacobian_presentation(None)?;
            r.absorb(&ideal_equality_check(quiver, p.relations(), jac.relations(), ctx.dmax));
            Ok(vec![r])
        }
        SuperpotentialCommand::Lift { .. } => {
            let cov = covering_presentation(p)?;
            let mut r = Report::new("superpotential lift").with_bounds(0, ctx.dmax);
            let lifted = match w.lift(&cov) {
                Ok(l) => l,
                Err(e @ Error::Superpotential(_)) => {
                    r.check("every term lifts to closed paths", false, e.to_string());
                    return Ok(vec![r]);
                }
                Err(e) => return Err(e.into()),
            };
            r.check("every term lifts to closed paths", true, "");
            r.set("lift", superpotential_json(&lifted));
            r.set("lift_display", lifted.display());
            let jac = lifted.jacobian_presentation(None)?;
            let hj = QuotientAlgebra::new(jac.clone(), ctx.dmax).hilbert_function();
            let hc = QuotientAlgebra::new(cov.presentation.clone(), ctx.dmax).hilbert_function();
            r.check("Jacobian algebra of the lift has the covering's Hilbert function", hj == hc, format!("{hj:?} and {hc:?}"));
            r.absorb(&ideal_equality_check(
                cov.presentation.quiver(),
                cov.presentation.relations(),
                jac.relations(),
                ctx.dmax,
            ));
            Ok(vec![r])
        }
        SuperpotentialCommand::Jacobian { .. } => {
            let jac = w.jacobian_presentation(p.group().cloned())?;
            let mut r = Report::new("Jacobian presentation").with_bounds(0, ctx.dmax);
            r.set("presentation", presentation_json(&jac));
            r.set("hilbert_function", QuotientAlgebra::new(jac, ctx.dmax).hilbert_function());
            Ok(vec![r])
        }
    }
}

fn verify_theta(ctx: &Ctx, top: usize, pairs: usize) -> Result<Vec<Report>> {
    let p = ctx.bundle.presentation.clone().ok_or_else(|| anyhow!("the bundle has no `presentation`"))?;
    let q = QuotientAlgebra::new(p, top);
    let a = GradedAlgebraQ::from_quotient(&q);
    let act = ctx.action(&q)?;
    let module = ModuleRep::regular(&a, &act, top);
    let mut r = theta_check(&a, &act, &module, pairs, ctx.seed)?.with_bounds(0, top);
    r.set("truncation", top);
    Ok(vec![r])
}

fn verify_adjoint(ctx: &Ctx, top: usize) -> Result<Vec<Report>> {
    let (a, act) = ctx.with_action()?;
    let simples: Vec<usize> = (0..a.num_vertices()).collect();
    let res = minimal_resolution(&a, &simples, ctx.hmax, ctx.dmax, Some(&act))?;
    let w = HModule::regular(act.hopf());
    let mut out = Vec::new();
    for n in 0..=ctx.hmax {
        if res.module(n).rank() == 0 {
            break;
        }
        let m = ModuleRep::from_resolution(&res, n, top)?;
        let mut r = adjoint_phi(&a, &act, &w, &m, &m)?.with_bounds(ctx.hmax, top);
        r.name = format!("{} (M = N = P^-{n} up to degree {top})", r.name);
        out.push(r);
    }
    Ok(out)
}

fn verify_prop_cohomology(ctx: &Ctx) -> Result<Vec<Report>> {
    let dg = ctx.bundle.dg.as_ref().ok_or_else(|| anyhow!("the bundle has no `dg` section"))?;
    let a = &dg.algebra;
    let mut out = vec![verify_dg(a)];
    let (h, mut r) = cohomology_algebra(a)?;
    r.set("cohomology_dims", h.dims().iter().map(|(n, d)| json!({"degree": n, "dim": d})).collect::<Vec<_>>());
    out.push(r);
    if let Some(act) = &dg.action {
        out.push(verify_dg_action(a, act));
        match dg_smash_cohomology_check(a, act) {
            Ok(r) => out.push(r),
            Err(e @ Error::Action(_)) => {
                let mut r = Report::new("H(A#H) ≅ H(A)#H");
                r.check("H acts by dg maps", false, e.to_string());
                out.push(r);
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(out)
}

fn demo(ctx: &Ctx) -> Result<Vec<Report>> {
    let mut out = cover(ctx)?;
    out.extend(koszul(ctx)?);
    out.push(verify_thm_koszul_transfer(
        &ctx.algebra()?.1,
        &ctx.action(&ctx.quotient()?)?,
        ctx.koszul_degree()?,
        ctx.hmax,
        ctx.dmax,
    )?);
    out.extend(cy(ctx, true)?);
    out.extend(cy(ctx, false)?);
    if ctx.bundle.superpotential.is_some() {
        out.extend(superpotential(ctx, &SuperpotentialCommand::Lift { bundle: PathBuf::new() })?);
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<(String, Ctx, Vec<Report>)> {
    let o = &cli.opts;
    let (name, ctx, reports) = match &cli.command {
        Command::VerifyHopf { bundle } => {
            let c = Ctx::load(bundle, o)?;
            let r = verify_hopf(&c)?;
            ("verify-hopf", c, r)
        }
        Command::Smash { bundle } => {
            let c = Ctx::load(bundle, o)?;
            let r = smash(&c)?;
            ("smash", c, r)
        }
        Command::Cover { bundle } => {
            let c = Ctx::load(bundle, o)?;
            let r = cover(&c)?;
            ("cover", c, r)
        }
        Command::Resolve { bundle, equivariant } => {
            let c = Ctx::load(bundle, o)?;
            let r = resolve(&c, equivariant)?;
            ("resolve", c, r)
        }
        Command::Ext { bundle, products } => {
            let c = Ctx::load(bundle, o)?;
            let r = ext(&c, *products)?;
            ("ext", c, r)
        }
        Command::Koszul { bundle } => {
            let c = Ctx::load(bundle, o)?;
            let r = koszul(&c)?;
            ("koszul", c, r)
        }
        Command::Symmetric { bundle, base } => {
            let c = Ctx::load(bundle, o)?;
            let r = symmetric(&c, *base)?;
            ("symmetric", c, r)
        }
        Command::Cy { bundle, base } => {
            let c = Ctx::load(bundle, o)?;
            let r = cy(&c, *base)?;
            ("cy", c, r)
        }
        Command::Superpotential(sub) => {
            let bundle = match sub {
                SuperpotentialCommand::Derive { bundle }
                | SuperpotentialCommand::Lift { bundle }
                | SuperpotentialCommand::Jacobian { bundle } => bundle,
            };
            let c = Ctx::load(bundle, o)?;
            let r = superpotential(&c, sub)?;
            ("superpotential", c, r)
        }
        Command::VerifyTheta { bundle, top, pairs } => {
            let c = Ctx::load(bundle, o)?;
            let r = verify_theta(&c, *top, *pairs)?;
            ("verify-theta", c, r)
        }
        Command::VerifyAdjoint { bundle, top } => {
            let c = Ctx::load(bundle, o)?;
            let r = verify_adjoint(&c, *top)?;
            ("verify-adjoint", c, r)
        }
        Command::VerifyCorExt { bundle } => {
            let c = Ctx::load(bundle, o)?;
            let (a, act) = c.with_action()?;
            let r = vec![verify_cor_ext(&a, &act, c.hmax, c.dmax)?];
            ("verify-cor-ext", c, r)
        }
        Command::VerifyKoszulTransfer { bundle } => {
            let c = Ctx::load(bundle, o)?;
            let (a, act) = c.with_action()?;
            let r = vec![verify_thm_koszul_transfer(&a, &act, c.koszul_degree()?, c.hmax, c.dmax)?];
            ("verify-koszul-transfer", c, r)
        }
        Command::VerifyPropCohomology { bundle } => {
            let c = Ctx::load(bundle, o)?;
            let r = verify_prop_cohomology(&c)?;
            ("verify-prop-cohomology", c, r)
        }
        Command::Gorenstein { bundle } => {
            let c = Ctx::load(bundle, o)?;
            let (_, a) = c.algebra()?;
            let res = c.resolve(&a, None)?;
            let mut r = gorenstein_check_bounded(&res);
            r.set("betti", betti(&res));
            ("gorenstein", c, vec![r])
        }
        Command::Demo { bundle } => {
            let c = match bundle {
                Some(b) => Ctx::load(b, o)?,
                None => Ctx::new(formats::parse_bundle(DEMO_BUNDLE)?, "<built-in kxyz_n3>".into(), o),
            };
            let r = demo(&c)?;
            ("demo", c, r)
        }
    };
    Ok((name.to_string(), ctx, reports))
}

fn document(command: &str, ctx: &Ctx, reports: &[Report], verdict: Verdict) -> Value {
    json!({
        "command": command,
        "bundle": ctx.path,
        "name": ctx.bundle.name,
        "bounds": {"hmax": ctx.hmax, "dmax": ctx.dmax, "range": ctx.range, "d": ctx.d},
        "seed": ctx.seed,
        "verdict": verdict,
        "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (command, ctx, reports) = match run(&cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(3);
        }
    };
    let verdict = reports.iter().fold(Verdict::Pass, |v, r| v.and(r.verdict));
    let doc = document(&command, &ctx, &reports, verdict);
    let to_stdout = cli.opts.json.as_deref() == Some(Path::new("-"));
    let mut out = String::new();
    if to_stdout {
        out = serde_json::to_string_pretty(&doc).expect("report serializes") + "\n";
    } else {
        out += &format!("{command} on {} (N = {}, D = {}, seed {})\n", ctx.path, ctx.hmax, ctx.dmax, ctx.seed);
        for r in &reports {
            out += &r.to_string();
        }
        out += &format!("verdict: {verdict}\n");
        if let Some(path) = &cli.opts.json {
            let text = serde_json::to_string_pretty(&doc).expect("report serializes");
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
    }
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    ExitCode::from(verdict.exit_code() as u8)
}
