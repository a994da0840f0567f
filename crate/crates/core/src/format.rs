//! Line-oriented text format for bound quiver algebras and JSON emission.
//!
//! ```text
//! # comment
//! field Q
//! vertex 1 1
//! vertex 2 2
//! arrow a: 2 -> 1
//! relation 1*a.b + -1*c.d = 0
//! ```

use serde_json::{json, Value};

use crate::algebra::{BoundQuiverAlgebra, DEFAULT_PATH_CAP};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::Representation;
use crate::quiver::{Quiver, Relation};
use crate::scalar::{FieldSpec, Scalar};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses an algebra file with the default path-length cap.
pub fn parse_bqa(text: &str) -> Result<BoundQuiverAlgebra> {
    parse_bqa_with(text, None, DEFAULT_PATH_CAP)
}

/// Parses an algebra file. `field` overrides any `field` line.
pub fn parse_bqa_with(text: &str, field: Option<FieldSpec>, cap: usize) -> Result<BoundQuiverAlgebra> {
    let mut declared_field = None;
    let mut name = String::from("A");
    let mut quiver = Quiver::new();
    let mut rel_lines: Vec<(usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match kw {
            "field" => declared_field = Some(FieldSpec::parse_name(rest).map_err(|e| perr(ln, e.to_string()))?),
            "name" => name = rest.to_string(),
            "vertex" => {
                let mut it = rest.split_whitespace();
                let id: i64 = it
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| perr(ln, "expected `vertex <id> <label>`"))?;
                let label = it.next().map(str::to_string).unwrap_or_else(|| id.to_string());
                if it.next().is_some() {
                    return Err(perr(ln, "trailing tokens after vertex label"));
                }
                quiver.add_vertex(id, label).map_err(|e| perr(ln, e.to_string()))?;
            }
            "arrow" => {
                let (label, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| perr(ln, "expected `arrow <label>: <src> -> <tgt>`"))?;
                let (s, t) = ends
                    .split_once("->")
                    .ok_or_else(|| perr(ln, "expected `<src> -> <tgt>`"))?;
                let s = quiver.vertex_index(s.trim()).map_err(|e| perr(ln, e.to_string()))?;
                let t = quiver.vertex_index(t.trim()).map_err(|e| perr(ln, e.to_string()))?;
                let label = label.trim();
                if label.is_empty() || label.contains(['.', '*', '+', ' ']) {
                    return Err(perr(ln, format!("invalid arrow label `{label}`")));
                }
                quiver.add_arrow(label, s, t).map_err(|e| perr(ln, e.to_string()))?;
            }
            "relation" => rel_lines.push((ln, rest.to_string())),
            other => return Err(perr(ln, format!("unknown directive `{other}`"))),
        }
    }
    let field = field.or(declared_field).unwrap_or(FieldSpec::Rationals);
    let mut relations = Vec::new();
    for (ln, r) in rel_lines {
        relations.push(parse_relation(&quiver, field, &r).map_err(|e| match e {
            Error::Parse { msg, .. } => perr(ln, msg),
            other => perr(ln, other.to_string()),
        })?);
    }
    BoundQuiverAlgebra::with_cap(name, field, quiver, relations, cap)
}

/// Parses `c1*p1 + c2*p2 + ... = 0`. A missing coefficient means 1, and a
/// leading `-` negates.
pub fn parse_relation(q: &Quiver, field: FieldSpec, s: &str) -> Result<Relation> {
    let lhs = match s.split_once('=') {
        Some((l, r)) => {
            if r.trim() != "0" {
                return Err(perr(0, "relation must have right-hand side 0"));
            }
            l
        }
        None => s,
    };
    let mut terms = Vec::new();
    let mut buf = String::new();
    let mut pieces = Vec::new();
    for ch in lhs.chars() {
        if (ch == '+' || ch == '-') && !buf.trim().is_empty() && !buf.trim_end().ends_with(['*', '/']) {
            pieces.push(std::mem::take(&mut buf));
            if ch == '-' {
                buf.push('-');
            }
        } else {
            buf.push(ch);
        }
    }
    pieces.push(buf);
    for piece in pieces {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (coef, path) = match piece.split_once('*') {
            Some((c, p)) => {
                let c = c.trim();
                let c = match c {
                    "-" => field.from_i64(-1),
                    "" => field.one(),
                    _ => field.parse_scalar(c)?,
                };
                (c, p.trim())
            }
            None => match piece.strip_prefix('-') {
                Some(p) => (field.from_i64(-1), p.trim()),
                None => (field.one(), piece),
            },
        };
        let p = q.parse_path(path).map_err(|e| perr(0, e.to_string()))?;
        terms.push((coef, p));
    }
    if terms.is_empty() {
        return Err(perr(0, "empty relation"));
    }
    Relation::new(terms).map_err(|e| perr(0, e.to_string()))
}

pub fn relation_text(q: &Quiver, r: &Relation) -> String {
    let body: Vec<String> = r
        .terms
        .iter()
        .map(|(c, p)| format!("{}*{}", c.to_exact_string(), q.path_label(p)))
        .collect();
    format!("{} = 0", body.join(" + "))
}

/// Serializes an algebra so that [`parse_bqa`] reproduces it.
pub fn write_bqa(a: &BoundQuiverAlgebra) -> String {
    write_presentation(&a.name, a.field, &a.quiver, &a.relations)
}

pub fn write_presentation(name: &str, field: FieldSpec, q: &Quiver, rels: &[Relation]) -> String {
    let mut s = String::new();
    s.push_str(&format!("name {name}\nfield {}\n", field.name()));
    for v in &q.vertices {
        s.push_str(&format!("vertex {} {}\n", v.id, v.label));
    }
    for a in &q.arrows {
        s.push_str(&format!(
            "arrow {}: {} -> {}\n",
            a.label, q.vertices[a.source].id, q.vertices[a.target].id
        ));
    }
    for r in rels {
        s.push_str(&format!("relation {}\n", relation_text(q, r)));
    }
    s
}

/// Parses a module over `alg`:
///
/// ```text
/// dims 1 2
/// map a: 1 ; 3/2
/// ```
///
/// `map` rows are separated by `;`, entries by whitespace, and the matrix of
/// an arrow `s -> t` is `dims[t] x dims[s]`. Omitted arrows act by zero.
pub fn parse_module(alg: &BoundQuiverAlgebra, text: &str) -> Result<Representation> {
    let q = &alg.quiver;
    let mut dims: Option<Vec<usize>> = None;
    let mut maps: Vec<Option<Mat>> = vec![None; q.arrows.len()];
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match kw {
            "dims" => {
                let d: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| perr(ln, format!("bad dimension `{t}`"))))
                    .collect::<Result<_>>()?;
                if d.len() != q.vertex_count() {
                    return Err(perr(
                        ln,
                        format!("expected {} dimensions, got {}", q.vertex_count(), d.len()),
                    ));
                }
                dims = Some(d);
            }
            "map" => {
                let d = dims.as_ref().ok_or_else(|| perr(ln, "`dims` must precede `map`"))?;
                let (label, body) = rest
                    .split_once(':')
                    .ok_or_else(|| perr(ln, "expected `map <arrow>: <rows>`"))?;
                let a = q.arrow_index(label.trim()).map_err(|e| perr(ln, e.to_string()))?;
                let (r, c) = (d[q.arrows[a].target], d[q.arrows[a].source]);
                let mut m = Mat::zeros(alg.field, r, c);
                let rows: Vec<&str> = body.split(';').filter(|s| !s.trim().is_empty()).collect();
                if rows.len() != r {
                    return Err(perr(
                        ln,
                        format!("arrow `{}` needs {r} rows, got {}", label.trim(), rows.len()),
                    ));
                }
                for (ri, row) in rows.iter().enumerate() {
                    let xs: Vec<&str> = row.split_whitespace().collect();
                    if xs.len() != c {
                        return Err(perr(ln, format!("row {} needs {c} entries, got {}", ri + 1, xs.len())));
                    }
                    for (ci, x) in xs.iter().enumerate() {
                        m[(ri, ci)] = alg.field.parse_scalar(x).map_err(|e| perr(ln, e.to_string()))?;
                    }
                }
                maps[a] = Some(m);
            }
            other => return Err(perr(ln, format!("unknown directive `{other}`"))),
        }
    }
    let dims = dims.ok_or_else(|| perr(0, "missing `dims` line"))?;
    let maps = maps
        .into_iter()
        .zip(&q.arrows)
        .map(|(m, a)| m.unwrap_or_else(|| Mat::zeros(alg.field, dims[a.target], dims[a.source])))
        .collect();
    Representation::new(alg, dims, maps)
}

/// Serializes a module so that [`parse_module`] reproduces it.
pub fn write_module(alg: &BoundQuiverAlgebra, m: &Representation) -> String {
    let mut s = format!(
        "dims {}\n",
        m.dims.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    );
    for (a, mat) in alg.quiver.arrows.iter().zip(&m.maps) {
        if mat.rows == 0 || mat.cols == 0 {
            continue;
        }
        let rows: Vec<String> = (0..mat.rows)
            .map(|r| {
                (0..mat.cols)
                    .map(|c| mat[(r, c)].to_exact_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        s.push_str(&format!("map {}: {}\n", a.label, rows.join(" ; ")));
    }
    s
}

pub fn module_json(alg: &BoundQuiverAlgebra, m: &Representation) -> Value {
    let maps: serde_json::Map<String, Value> = alg
        .quiver
        .arrows
        .iter()
        .zip(&m.maps)
        .map(|(a, mat)| {
            let rows: Vec<Vec<Value>> = (0..mat.rows)
                .map(|r| (0..mat.cols).map(|c| scalar_json(&mat[(r, c)])).collect())
                .collect();
            (a.label.clone(), json!(rows))
        })
        .collect();
    json!({ "dims": m.dims, "maps": maps })
}

pub fn scalar_json(x: &Scalar) -> Value {
    Value::String(x.to_exact_string())
}

pub fn algebra_json(a: &BoundQuiverAlgebra) -> Value {
    let q = &a.quiver;
    json!({
        "name": a.name,
        "field": a.field.name(),
        "vertices": q.vertices.iter().map(|v| json!({"id": v.id, "label": v.label})).collect::<Vec<_>>(),
        "arrows": q.arrows.iter().map(|ar| json!({
            "label": ar.label,
            "source": q.vertices[ar.source].label,
            "target": q.vertices[ar.target].label,
        })).collect::<Vec<_>>(),
        "relations": a.relations.iter().map(|r| relation_text(q, r)).collect::<Vec<_>>(),
        "dim": a.dim(),
        "loewy_length": a.loewy_length(),
        "basis": (0..a.dim()).map(|i| a.basis_label(i)).collect::<Vec<_>>(),
        "cartan": a.cartan_matrix(),
    })
}
