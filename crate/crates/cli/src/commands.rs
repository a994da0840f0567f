//! One function per verb. Each returns a [`Report`]; `ok == false` is a
//! mathematical negative and exits with status 1.

use std::path::Path;

use serde_json::{json, Value};

use repdim_core::approximation::{
    approximating_sequence, auslander_generator, is_right_minimal, repdim_upper_bound, verify_approx_sequence, Registry,
};
use repdim_core::constructions::{
    apply_reflection_sequence, one_point_coextension, one_point_extension, repetitive_window, trivial_extension,
    ReflectionMode,
};
use repdim_core::decompose::decompose;
use repdim_core::format::{algebra_json, module_json, write_bqa, write_module};
use repdim_core::homological::{ar_translate, ar_translate_inverse, projective_dimension, simple_pds, Dimension};
use repdim_core::sca::{present_sca, StructureConstantAlgebra};
use repdim_core::tilting::{end_algebra_presentation, end_presentation_of, tilt_hom, tilting_check, EndAlgebra};
use repdim_core::{BoundQuiverAlgebra, Representation};

use crate::error::{CliError, Result};
use crate::input;

pub struct Report {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Report { json, text, ok: true }
    }
}

fn algebra_report(a: &BoundQuiverAlgebra) -> Report {
    Report::new(algebra_json(a), write_bqa(a))
}

fn module_report(a: &BoundQuiverAlgebra, m: &Representation) -> Report {
    Report::new(module_json(a, m), write_module(a, m))
}

fn dims_text(d: &[usize]) -> String {
    d.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn dim_json(d: Dimension) -> Value {
    Value::String(d.to_string())
}

pub fn parse(a: &BoundQuiverAlgebra) -> Report {
    algebra_report(a)
}

pub fn cartan(a: &BoundQuiverAlgebra) -> Report {
    let c = a.cartan_matrix();
    let text = c.iter().map(|r| dims_text(r)).collect::<Vec<_>>().join("\n") + "\n";
    let labels: Vec<&str> = a.quiver.vertices.iter().map(|v| v.label.as_str()).collect();
    Report::new(json!({ "vertices": labels, "cartan": c }), text)
}

pub fn gldim(a: &BoundQuiverAlgebra, cap: usize) -> Report {
    let pds = simple_pds(a, cap);
    let gl = pds.iter().copied().max().unwrap_or(Dimension::Finite(0));
    let mut text = format!("gldim {gl}\n");
    let mut table = serde_json::Map::new();
    for (v, d) in a.quiver.vertices.iter().zip(&pds) {
        text.push_str(&format!("pd S({}) = {d}\n", v.label));
        table.insert(v.label.clone(), dim_json(*d));
    }
    Report::new(json!({ "gldim": dim_json(gl), "simple_pds": table }), text)
}

pub fn pd(a: &BoundQuiverAlgebra, m: &Representation, cap: usize) -> Report {
    let d = projective_dimension(a, m, cap);
    Report::new(json!({ "dims": m.dims, "pd": dim_json(d) }), format!("pd {d}\n"))
}

pub fn tau(a: &BoundQuiverAlgebra, m: &Representation, inverse: bool) -> Result<Report> {
    let t = if inverse {
        ar_translate_inverse(a, m)?
    } else {
        ar_translate(a, m)?
    };
    Ok(module_report(a, &t))
}

pub fn opext(b: &BoundQuiverAlgebra, m: &Representation, vertex: Option<&str>) -> Result<Report> {
    let v = input::vertex(vertex, b)?;
    Ok(algebra_report(&one_point_extension(b, m, v)?.algebra))
}

pub fn coext(b: &BoundQuiverAlgebra, m: &Representation, vertex: Option<&str>) -> Result<Report> {
    let v = input::vertex(vertex, b)?;
    Ok(algebra_report(&one_point_coextension(b, m, v)?))
}

pub fn reflect(b: &BoundQuiverAlgebra, seq: &str, mode: &str) -> Result<Report> {
    let mode = match mode {
        "s+" => ReflectionMode::SPlus,
        "t+" => ReflectionMode::TPlus,
        _ => return Err(CliError::Usage(format!("unknown mode `{mode}`, expected s+ or t+"))),
    };
    let seq: Vec<&str> = seq.split(',').map(str::trim).collect();
    Ok(algebra_report(&apply_reflection_sequence(b, &seq, mode)?))
}

pub fn trivext(b: &BoundQuiverAlgebra) -> Result<Report> {
    Ok(algebra_report(&trivial_extension(b)?.algebra))
}

pub fn repet(b: &BoundQuiverAlgebra, window: usize) -> Result<Report> {
    if window == 0 {
        return Err(CliError::Usage("window must be positive".into()));
    }
    Ok(algebra_report(&repetitive_window(b, window)?.algebra))
}

pub fn present(a: &BoundQuiverAlgebra) -> Result<Report> {
    let p = present_sca(&StructureConstantAlgebra::from_bqa(a), &a.name)?;
    Ok(algebra_report(&p.algebra))
}

pub fn tilt_check(a: &BoundQuiverAlgebra, t: &Representation, seed: u64) -> Result<Report> {
    let cert = tilting_check(a, t, seed)?;
    let summands: Vec<Value> = cert
        .summands
        .iter()
        .zip(&cert.projective_dimensions)
        .map(|((x, k), d)| json!({ "dims": x.dims, "multiplicity": k, "pd": dim_json(*d) }))
        .collect();
    let mut text = String::new();
    for ((x, k), d) in cert.summands.iter().zip(&cert.projective_dimensions) {
        text.push_str(&format!("summand {} x{k} pd {d}\n", dims_text(&x.dims)));
    }
    text.push_str(&format!(
        "pd <= 1: {}\next1(T, T) = 0: {}\nsummands = vertices: {}\ntilting: {}\n",
        cert.pd_ok,
        cert.ext_ok,
        cert.count_ok,
        cert.valid()
    ));
    Ok(Report {
        json: json!({
            "summands": summands,
            "pd_ok": cert.pd_ok,
            "ext_ok": cert.ext_ok,
            "count_ok": cert.count_ok,
            "tilting": cert.valid(),
        }),
        text,
        ok: cert.valid(),
    })
}

/// `End` of the given summands, or of the decomposition of a single module.
pub fn end_of(a: &BoundQuiverAlgebra, parts: Vec<Representation>, seed: u64) -> Result<EndAlgebra> {
    Ok(if parts.len() == 1 {
        end_algebra_presentation(a, &parts[0], seed)?
    } else {
        end_presentation_of(a, parts, None, "End")?
    })
}

pub fn end(a: &BoundQuiverAlgebra, parts: Vec<Representation>, seed: u64) -> Result<Report> {
    let e = end_of(a, parts, seed)?;
    Ok(algebra_report(e.algebra()))
}

/// `Hom_A(T, X)` for each `(name, X)`; with `out`, also writes the
/// endomorphism algebra and the modules as files.
pub fn tilt_hom_report(
    a: &BoundQuiverAlgebra,
    end: &EndAlgebra,
    targets: &[(String, Representation)],
    out: Option<&Path>,
) -> Result<Report> {
    let b = end.algebra();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut files = Vec::new();
    for (name, x) in targets {
        let h = tilt_hom(a, end, x)?;
        text.push_str(&format!("Hom(T, {name}) {}\n", dims_text(&h.dims)));
        if let Some(dir) = out {
            let file = dir.join(format!("hom_{}.mod", sanitize(name)));
            write_file(&file, &write_module(b, &h))?;
            files.push(file.display().to_string());
        }
        rows.push(json!({ "target": name, "dims": h.dims, "module": module_json(b, &h) }));
    }
    if let Some(dir) = out {
        let file = dir.join("end.bqa");
        write_file(&file, &write_bqa(b))?;
        files.push(file.display().to_string());
    }
    Ok(Report::new(
        json!({ "end": algebra_json(b), "homs": rows, "files": files }),
        text,
    ))
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

pub fn decompose_report(a: &BoundQuiverAlgebra, m: &Representation, seed: u64) -> Result<Report> {
    let parts = decompose(a, m, seed)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (x, k) in &parts {
        text.push_str(&format!("{} x{k}\n", dims_text(&x.dims)));
        rows.push(json!({ "dims": x.dims, "multiplicity": k, "module": module_json(a, x) }));
    }
    Ok(Report::new(json!({ "summands": rows }), text))
}

/// Registry from `name=spec` or bare `spec` parts.
pub fn registry(a: &BoundQuiverAlgebra, parts: &[String], seed: u64) -> Result<Registry> {
    let mods: Vec<(String, Representation)> = parts
        .iter()
        .map(|p| {
            let (name, spec) = p.split_once('=').unwrap_or((p, p));
            Ok((name.to_string(), input::module(a, spec, seed)?))
        })
        .collect::<Result<_>>()?;
    let named: Vec<(&str, &Representation)> = mods.iter().map(|(n, m)| (n.as_str(), m)).collect();
    Ok(auslander_generator(a, &named, seed)?)
}

fn registry_json(reg: &Registry) -> Value {
    reg.names
        .iter()
        .zip(&reg.modules)
        .map(|(n, m)| json!({ "name": n, "dims": m.dims }))
        .collect()
}

fn registry_text(reg: &Registry) -> String {
    reg.names
        .iter()
        .zip(&reg.modules)
        .enumerate()
        .map(|(i, (n, m))| format!("M{i} {n}: {}\n", dims_text(&m.dims)))
        .collect()
}

pub fn auslander_gen(a: &BoundQuiverAlgebra, reg: &Registry) -> Report {
    let missing: Vec<String> = (0..a.vertex_count())
        .flat_map(|x| {
            let l = &a.quiver.vertices[x].label;
            let p = reg
                .index_of(a, &Representation::projective(a, x))
                .is_none()
                .then(|| format!("P({l})"));
            let i = reg
                .index_of(a, &Representation::injective(a, x))
                .is_none()
                .then(|| format!("I({l})"));
            p.into_iter().chain(i)
        })
        .collect();
    let mut text = registry_text(reg);
    text.push_str(&format!("generator-cogenerator: {}\n", missing.is_empty()));
    if !missing.is_empty() {
        text.push_str(&format!("missing: {}\n", missing.join(" ")));
    }
    Report {
        json: json!({ "registry": registry_json(reg), "generator_cogenerator": missing.is_empty(), "missing": missing }),
        text,
        ok: missing.is_empty(),
    }
}

pub fn approx(a: &BoundQuiverAlgebra, reg: &Registry, x: &Representation) -> Result<Report> {
    let seq = approximating_sequence(a, reg, x)?;
    let verified = verify_approx_sequence(a, &seq, reg);
    let minimal = is_right_minimal(a, reg, &seq)?;
    let m0: Vec<Value> = seq.approx.parts.iter().map(|&i| json!(reg.names[i])).collect();
    let k: Vec<Value> = seq
        .k_parts
        .iter()
        .map(|&(i, n)| json!({ "member": reg.names[i], "multiplicity": n }))
        .collect();
    let text = format!(
        "{}M0 = {}\nK dims {}\nK = {}\nverified: {verified}\nright minimal: {minimal}\n",
        registry_text(reg),
        seq.approx
            .parts
            .iter()
            .map(|&i| format!("M{i}"))
            .collect::<Vec<_>>()
            .join(" + "),
        dims_text(&seq.k.dims),
        seq.k_parts
            .iter()
            .map(|&(i, n)| format!("{n}*M{i}"))
            .collect::<Vec<_>>()
            .join(" + "),
    );
    Ok(Report {
        json: json!({
            "registry": registry_json(reg),
            "x_dims": x.dims,
            "m0": m0,
            "k_dims": seq.k.dims,
            "k": k,
            "verified": verified,
            "right_minimal": minimal,
        }),
        text,
        ok: verified && minimal,
    })
}

pub fn repdim_bound(a: &BoundQuiverAlgebra, reg: &Registry, cap: usize, rep_infinite: bool) -> Result<Report> {
    let r = repdim_upper_bound(a, reg, cap)?;
    let mut text = registry_text(reg);
    let mut table = serde_json::Map::new();
    for (i, d) in r.simple_pds.iter().enumerate() {
        text.push_str(&format!("pd S(M{i}) = {d}\n"));
        table.insert(reg.names[i].clone(), dim_json(*d));
    }
    // Representation dimension 2 would force finite type, so a bound of 3
    // is attained on representation-infinite algebras.
    let exact = rep_infinite && r.bound == Dimension::Finite(3);
    let relation = if exact { "=" } else { "<=" };
    text.push_str(&format!("gldim End(M) = {}\nrepdim {relation} {}\n", r.bound, r.bound));
    Ok(Report::new(
        json!({
            "registry": registry_json(reg),
            "simple_pds": table,
            "gldim_end": dim_json(r.bound),
            "bound": dim_json(r.bound),
            "exact": exact,
        }),
        text,
    ))
}
