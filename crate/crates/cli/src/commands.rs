use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use serde_json::{json, Value};

use hilbcalc::bounds::{
    connectivity_report, count_nonsurjective_algebra_homs, count_nonsurjective_linear, hilb_complement_codim,
    CountReport,
};
use hilbcalc::charclass::{
    gl2_decompose, reconstruct, verify_hilb3_presentation, BundleExpr, ChernRing, GL2Character, GeneratorSet,
};
use hilbcalc::corealg::{BaseRing, ExactLinalg, Field, Fp, Matrix, MonomialOrder, Ring};
use hilbcalc::finalg::{
    classify_degree3, fiber_product as pullback, isotype_report, quotient_by_unit as unit_quotient, rees_family,
    robber_witness, specialize_family, three_lines_witness, Algebra, AlgebraHom, AlgebraJson, AnyAlgebra,
    IsotypeReport, LocalField,
};
use hilbcalc::hilbpts::{
    canonical_basepoint, colength, groebner_basis, path_to_basepoint as basepoint_path, tangent_space,
    tangent_space_dim, HilbError, IdealPoint, SurjectionData,
};
use hilbcalc::BigRational;

pub struct Output {
    pub payload: Value,
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(payload: Value, text: String) -> Self {
        Output {
            payload,
            text,
            passed: true,
        }
    }
}

macro_rules! with_field {
    ($base:expr, $F:ident => $body:expr) => {
        match $base {
            BaseRing::Q => {
                type $F = BigRational;
                $body
            }
            BaseRing::Fp { .. } => {
                type $F = Fp;
                $body
            }
            other => bail!("{other} is not a field"),
        }
    };
}

macro_rules! with_algebra {
    ($a:expr, $x:ident => $body:expr) => {
        match $a {
            AnyAlgebra::Z($x) => $body,
            AnyAlgebra::Q($x) => $body,
            AnyAlgebra::Fp($x) => $body,
            _ => bail!("expected an algebra over Z, Q or F_p, got a family over a line"),
        }
    };
}

/// Inline JSON, or a path to a file holding it.
fn load(arg: &str) -> Result<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
}

fn load_algebra(arg: &str) -> Result<AnyAlgebra> {
    let j: AlgebraJson = serde_json::from_str(&load(arg)?).context("parsing algebra JSON")?;
    Ok(AnyAlgebra::from_json(&j)?)
}

fn parse_field(s: &str) -> Result<BaseRing> {
    let t = s.trim().to_ascii_uppercase();
    if t == "Q" || t == "QQ" {
        return Ok(BaseRing::Q);
    }
    let digits = t
        .trim_start_matches("GF(")
        .trim_start_matches("F_")
        .trim_start_matches('F')
        .trim_end_matches(')');
    let p: u64 = digits.parse().map_err(|_| anyhow!("unknown field {s:?}; use Q or F<p>"))?;
    Ok(BaseRing::fp(p)?)
}

fn parse_order(s: &str) -> Result<MonomialOrder> {
    match s.to_ascii_lowercase().as_str() {
        "degrevlex" | "grevlex" => Ok(MonomialOrder::Degrevlex),
        "lex" => Ok(MonomialOrder::Lex),
        other => bail!("unknown monomial order {other:?}"),
    }
}

fn split_vars(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|v| !v.is_empty()).collect()
}

fn strings<R: Ring>(v: &[R]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn mat_strings<R: Ring>(m: &Matrix<R>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(&m.row(i))).collect()
}

fn parse_vec<R: Ring>(v: &[String], base: &BaseRing) -> Result<Vec<R>> {
    v.iter()
        .map(|s| R::parse(s, base).map_err(anyhow::Error::from))
        .collect()
}

fn parse_matrix<R: Ring>(rows: &[Vec<String>], cols: usize, base: &BaseRing) -> Result<Matrix<R>> {
    let parsed = rows.iter().map(|r| parse_vec(r, base)).collect::<Result<Vec<_>>>()?;
    if parsed.iter().any(|r| r.len() != cols) {
        bail!("every matrix row needs {cols} entries");
    }
    Ok(Matrix::from_rows_sized(parsed, cols))
}

pub fn verify_hilb3() -> Result<Output> {
    let r = verify_hilb3_presentation()?;
    let point = IdealPoint::<BigRational>::parse("x^2, x*y, y^2", &["x", "y"], BaseRing::Q, MonomialOrder::Degrevlex)?;
    let tangent_dim = tangent_space_dim(&point)?;
    let content: u64 = r.content.parse().context("content")?;
    let mut text = String::new();
    writeln!(text, "presentation   {}", r.presentation)?;
    writeln!(text, "generator      {}  =  {}", r.generator, r.factored)?;
    writeln!(text, "content        {content}")?;
    for m in &r.mod_p_nonzero {
        writeln!(text, "mod {:<2}         {}", m.p, m.reduction)?;
    }
    writeln!(text, "tangent        {:?}", r.tangent_weights)?;
    writeln!(text, "tangent dim    {tangent_dim}")?;
    let payload = json!({
        "presentation": r.presentation,
        "generator": r.generator,
        "factored": r.factored,
        "content": content,
        "mod_p_nonzero": r.mod_p_nonzero,
        "chern_classes": r.chern_classes,
        "decomposition": r.tangent_weights,
        "normal_weights": r.normal_weights,
        "tangent_dim": tangent_dim,
    });
    Ok(Output::ok(payload, text))
}

pub fn verify_witnesses() -> Result<Output> {
    let three = three_lines_witness();
    let robber = robber_witness();
    let r3 = three.verify();
    let rr = robber.verify();
    let status = |r: &Result<(), _>| match r {
        Ok(()) => json!({"ok": true}),
        Err(e) => json!({"ok": false, "error": format!("{e}")}),
    };
    let payload = json!({
        "three_lines": {
            "check": status(&r3),
            "family": three.family.to_json(),
            "automorphism": mat_strings(&three.automorphism),
        },
        "robber": {
            "check": status(&rr),
            "family": robber.family.to_json(),
        },
    });
    let line = |name: &str, r: &Result<(), hilbcalc::finalg::AlgebraError>| match r {
        Ok(()) => format!("{name:<12} ok"),
        Err(e) => format!("{name:<12} FAILED: {e}"),
    };
    let text = format!("{}\n{}\n", line("three lines", &r3), line("robber", &rr));
    Ok(Output {
        payload,
        text,
        passed: r3.is_ok() && rr.is_ok(),
    })
}

pub fn chern(expr: &str, gens: &[String], k: Option<usize>) -> Result<Output> {
    let specs: Vec<&str> = gens.iter().map(String::as_str).collect();
    let ring = ChernRing::parse_gens(&specs)?;
    let e = BundleExpr::parse(expr)?;
    let rank = ring.gens.rank(&e)?;
    let roots = ring.gens.chern_roots(&e)?;
    let classes: Vec<(usize, String)> = match k {
        Some(k) => vec![(k, ring.chern_class(&e, k)?.to_string())],
        None => ring
            .total_chern_class(&e)?
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.to_string()))
            .collect(),
    };
    let mut text = format!("{e}   rank {rank}\n");
    for (i, c) in &classes {
        writeln!(text, "c{i} = {c}")?;
    }
    let payload = json!({
        "expr": e.to_string(),
        "generators": ring.gens.generators(),
        "rank": rank,
        "roots": if roots.len() <= 64 { json!(roots.strings()) } else { Value::Null },
        "classes": classes.iter().map(|(i, c)| json!({"k": i, "class": c})).collect::<Vec<_>>(),
    });
    Ok(Output::ok(payload, text))
}

pub fn decompose_gl2(character: Option<&str>, expr: Option<&str>) -> Result<Output> {
    let chi = match (character, expr) {
        (Some(c), _) => GL2Character::parse(c)?,
        (None, Some(e)) => {
            let gens = GeneratorSet::parse(&["V:2"])?;
            GL2Character::from_roots(&gens.chern_roots(&BundleExpr::parse(e)?)?)?
        }
        (None, None) => bail!("give --char or --expr"),
    };
    let weights = gl2_decompose(&chi)?;
    if reconstruct(&weights) != chi {
        bail!("reconstruction does not return the input character");
    }
    let dims: Vec<i32> = weights.iter().map(|(p, q)| p - q + 1).collect();
    let text = format!("{chi}\n= {}\n", {
        let parts: Vec<String> = weights.iter().map(|(p, q)| format!("({p}, {q})")).collect();
        parts.join(" + ")
    });
    let payload = json!({
        "character": chi.to_string(),
        "dimension": chi.dim(),
        "weights": weights,
        "summand_dims": dims,
    });
    Ok(Output::ok(payload, text))
}

fn tangent_in<F: Field + ExactLinalg>(ideal: &str, vars: &[&str], base: BaseRing, order: MonomialOrder) -> Result<Output> {
    let p = IdealPoint::<F>::parse(ideal, vars, base, order)?;
    let report = tangent_space(&p)?;
    let c = colength(&p)?;
    let text = format!(
        "colength {}   basis {{{}}}\ntangent dimension {}   ({} syzygies, {:?})\n",
        c.d,
        c.basis.join(", "),
        report.dim,
        report.syzygies,
        report.method
    );
    let payload = json!({
        "tangent_dim": report.dim,
        "colength": c.d,
        "standard_monomials": c.basis,
        "generators": report.generators,
        "syzygies": report.syzygies,
        "method": report.method,
    });
    Ok(Output::ok(payload, text))
}

pub fn tangent(ideal: &str, vars: &str, field: &str, order: &str) -> Result<Output> {
    let base = parse_field(field)?;
    let order = parse_order(order)?;
    let vars = split_vars(vars);
    with_field!(base.clone(), F => tangent_in::<F>(ideal, &vars, base, order))
}

fn groebner_in<F: Field + ExactLinalg>(ideal: &str, vars: &[&str], base: BaseRing, order: MonomialOrder) -> Result<Output> {
    let p = IdealPoint::<F>::parse(ideal, vars, base, order)?;
    let gb: Vec<String> = groebner_basis(&p).iter().map(ToString::to_string).collect();
    let mut text = format!("basis {{{}}}\n", gb.join(", "));
    let payload = match colength(&p) {
        Ok(c) => {
            writeln!(text, "colength {}   standard monomials {{{}}}", c.d, c.basis.join(", "))?;
            json!({"basis": gb, "colength": c.d, "standard_monomials": c.basis})
        }
        Err(HilbError::InfiniteColength(v)) => {
            writeln!(text, "infinite quotient (no pure power of {v} leads)")?;
            json!({"basis": gb, "colength": Value::Null, "infinite_in": v})
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Output::ok(payload, text))
}

pub fn groebner(ideal: &str, vars: &str, field: &str, order: &str) -> Result<Output> {
    let base = parse_field(field)?;
    let order = parse_order(order)?;
    let vars = split_vars(vars);
    with_field!(base.clone(), F => groebner_in::<F>(ideal, &vars, base, order))
}

fn classify_any<F: LocalField>(a: &Algebra<F>) -> Result<IsotypeReport> {
    Ok(if a.rank() == 3 {
        classify_degree3(a)?
    } else {
        isotype_report(a)?
    })
}

pub fn classify(arg: &str, p: Option<u64>) -> Result<Output> {
    let a = load_algebra(arg)?;
    let base = a.base();
    let report = match (a, p) {
        (AnyAlgebra::Fp(x), p) => {
            if let (Some(p), BaseRing::Fp { p: q }) = (p, &base) {
                if p != *q {
                    bail!("--p {p} does not match the algebra's base F_{q}");
                }
            }
            classify_any(&x)?
        }
        (AnyAlgebra::Z(x), Some(p)) => {
            let fp = BaseRing::fp(p)?;
            let y = x.map_base(fp.clone(), |c| Fp::parse(&c.to_string(), &fp).expect("integers reduce mod p"));
            classify_any(&y)?
        }
        (AnyAlgebra::Z(_), None) => bail!("an algebra over Z needs --p to pick a residue field"),
        (AnyAlgebra::Q(x), None) => classify_any(&x)?,
        (AnyAlgebra::Q(_), Some(_)) => bail!("--p only applies to algebras over Z"),
        _ => bail!("classify needs an algebra, not a family over a line"),
    };
    let mut text = format!("rank {}", report.rank);
    if let Some(l) = report.lci {
        write!(text, "   lci {l}")?;
    }
    text.push('\n');
    for f in &report.factors {
        writeln!(
            text,
            "  local factor: rank {}, residue degree {}, hilbert function {:?}",
            f.rank, f.residue_degree, f.hilbert_function
        )?;
    }
    Ok(Output::ok(serde_json::to_value(&report)?, text))
}

fn rees_in<R: ExactLinalg>(a: &Algebra<R>) -> Result<Output> {
    let r = rees_family(a)?;
    let zero = R::from_int(0);
    let fiber0 = specialize_family(&r.family, &zero)?;
    let text = format!(
        "Rees family of rank {} over {}\nt = 0 fiber square-zero: {}\n",
        r.family.rank(),
        r.family.base(),
        fiber0.is_square_zero()
    );
    let payload = json!({
        "family": r.family.to_json(),
        "base_change": mat_strings(&r.base_change),
        "fiber_at_0_square_zero": fiber0.is_square_zero(),
    });
    Ok(Output::ok(payload, text))
}

pub fn rees(arg: &str) -> Result<Output> {
    with_algebra!(load_algebra(arg)?, a => rees_in(&a))
}

fn quotient_in<R: ExactLinalg>(a: &Algebra<R>) -> Result<Output> {
    let q = unit_quotient(a)?;
    let complement: Vec<Vec<String>> = q.complement().iter().map(|v| strings(v)).collect();
    let text = format!("A / R.1 is free of rank {}\nlifts {:?}\n", q.rank, complement);
    let payload = json!({"rank": q.rank, "complement": complement, "basis": mat_strings(&q.basis)});
    Ok(Output::ok(payload, text))
}

pub fn quotient_by_unit(arg: &str) -> Result<Output> {
    with_algebra!(load_algebra(arg)?, a => quotient_in(&a))
}

pub fn specialize(arg: &str, t: &str) -> Result<Output> {
    fn go<R: Ring>(f: &hilbcalc::finalg::FamilyOverLine<R>, t: &str) -> Result<Output> {
        let inner = f.base().inner().cloned().ok_or_else(|| anyhow!("not a family"))?;
        let t0 = R::parse(t, &inner)?;
        let a = specialize_family(f, &t0)?;
        let text = format!("fiber at t = {t0}: rank {} over {}\n{}\n", a.rank(), a.base(), a);
        Ok(Output::ok(serde_json::to_value(a.to_json())?, text))
    }
    match load_algebra(arg)? {
        AnyAlgebra::ZT(f) => go(&f, t),
        AnyAlgebra::QT(f) => go(&f, t),
        AnyAlgebra::FpT(f) => go(&f, t),
        _ => bail!("specialize needs a family over Z[t], Q[t] or F_p[t]"),
    }
}

#[derive(Deserialize)]
struct DMaps {
    d: AlgebraJson,
    f: Vec<Vec<String>>,
    g: Vec<Vec<String>>,
}

fn fiber_in<R: ExactLinalg>(b: Algebra<R>, c: Algebra<R>, d: Algebra<R>, maps: &DMaps) -> Result<Output> {
    let base = d.base().clone();
    let f = parse_matrix::<R>(&maps.f, b.rank(), &base)?;
    let g = parse_matrix::<R>(&maps.g, c.rank(), &base)?;
    let fh = AlgebraHom::new(b, d.clone(), f)?;
    let gh = AlgebraHom::new(c, d, g)?;
    let fp = pullback(&fh, &gh)?;
    let text = format!("fiber product of rank {} over {}\n{}\n", fp.algebra.rank(), base, fp.algebra);
    let payload = json!({
        "algebra": fp.algebra.to_json(),
        "to_b": mat_strings(fp.to_b.matrix()),
        "to_c": mat_strings(fp.to_c.matrix()),
    });
    Ok(Output::ok(payload, text))
}

pub fn fiber_product(b: &str, c: &str, d_maps: &str) -> Result<Output> {
    let maps: DMaps = serde_json::from_str(&load(d_maps)?).context("parsing --d-maps")?;
    let d = AnyAlgebra::from_json(&maps.d)?;
    match (load_algebra(b)?, load_algebra(c)?, d) {
        (AnyAlgebra::Z(b), AnyAlgebra::Z(c), AnyAlgebra::Z(d)) => fiber_in(b, c, d, &maps),
        (AnyAlgebra::Q(b), AnyAlgebra::Q(c), AnyAlgebra::Q(d)) => fiber_in(b, c, d, &maps),
        (AnyAlgebra::Fp(b), AnyAlgebra::Fp(c), AnyAlgebra::Fp(d)) => fiber_in(b, c, d, &maps),
        _ => bail!("B, C and D must be algebras over the same base Z, Q or F_p"),
    }
}

pub fn bounds(n: usize, d: usize) -> Result<Output> {
    let r = connectivity_report(n, d)?;
    let complement = if d >= 1 { Some(hilb_complement_codim(n, d)?) } else { None };
    let rows = [
        ("complex connectivity", r.complex_connectivity),
        ("real connectivity", r.real_connectivity),
        ("suspension A1 connectivity", r.suspension_a1_connectivity),
        ("very effective index", r.very_effective_index),
        ("motivic weight iso bound", r.motivic_weight_iso_bound),
    ];
    let mut text = format!("n = {n}, d = {d}\n");
    for (k, v) in rows {
        writeln!(text, "  {k:<28}{v:>4}")?;
    }
    if let Some(c) = complement {
        writeln!(text, "  {:<28}{c:>4}", "complement codimension")?;
    }
    let mut payload = serde_json::to_value(r)?;
    payload["complement_codimension"] = json!(complement);
    Ok(Output::ok(payload, text))
}

fn count_text(r: &CountReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "{:?} n = {}, r = {}, p = {}", r.kind, r.n, r.r, r.p);
    let _ = writeln!(t, "  {:<20}{:>10}", "total", r.total);
    let _ = writeln!(t, "  {:<20}{:>10}", "non-surjective", r.nonsurjective);
    let _ = writeln!(t, "  {:<20}{:>10}", "closed form", r.formula);
    if let (Some(c), Some(d)) = (r.codimension, r.expected_dimension) {
        let _ = writeln!(t, "  {:<20}{:>10}", "codimension", c);
        let _ = writeln!(t, "  {:<20}{:>10}", "dimension", d);
    }
    t
}

pub fn count_nonsurj(n: usize, r: usize, p: u64, algebra_homs: bool) -> Result<Output> {
    let report = if algebra_homs {
        count_nonsurjective_algebra_homs(n, p)?
    } else {
        count_nonsurjective_linear(n, r, p)?
    };
    Ok(Output {
        text: count_text(&report),
        passed: report.matches_formula(),
        payload: serde_json::to_value(&report)?,
    })
}

fn path_in<F: Field + ExactLinalg>(a: Algebra<F>, images: &[Vec<String>]) -> Result<Output> {
    let base = a.base().clone();
    let imgs = images.iter().map(|v| parse_vec::<F>(v, &base)).collect::<Result<Vec<_>>>()?;
    let s = SurjectionData::new(a, imgs)?;
    let path = basepoint_path(&s)?;
    path.verify(&s)?;
    let bp = path.rees.basepoint()?;
    let canonical = bp == canonical_basepoint(s.rank(), s.n(), base)?;
    let steps: Vec<Value> = path
        .straightening
        .steps
        .iter()
        .map(|st| {
            json!({
                "kind": st.kind,
                "moved": st.moved,
                "start": st.start.iter().map(|v| strings(v)).collect::<Vec<_>>(),
                "end": st.end.iter().map(|v| strings(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let straightened: Vec<Vec<String>> = path.straightening.result.images.iter().map(|v| strings(v)).collect();
    let marked: Vec<Vec<String>> = path.rees.marked.iter().map(|v| strings(v)).collect();
    let text = format!(
        "{} straightening step(s), then the Rees family of rank {}\nstraightened images {:?}\nt = 0 endpoint is the canonical basepoint: {canonical}\n",
        steps.len(),
        s.rank(),
        straightened
    );
    let payload = json!({
        "steps": steps,
        "straightened": straightened,
        "rees_family": path.rees.family().to_json(),
        "marked": marked,
        "basepoint": {
            "algebra": bp.algebra.to_json(),
            "images": bp.images.iter().map(|v| strings(v)).collect::<Vec<_>>(),
        },
        "endpoint_is_canonical": canonical,
    });
    Ok(Output {
        payload,
        text,
        passed: canonical,
    })
}

pub fn path_to_basepoint(alg: &str, images: &str) -> Result<Output> {
    let imgs: Vec<Vec<String>> = serde_json::from_str(&load(images)?).context("parsing --images")?;
    match load_algebra(alg)? {
        AnyAlgebra::Q(a) => path_in(a, &imgs),
        AnyAlgebra::Fp(a) => path_in(a, &imgs),
        _ => bail!("path-to-basepoint needs an algebra over a field (Q or F_p)"),
    }
}

