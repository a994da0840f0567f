//! Quivers, paths and relations. Paths compose left to right: `a.b` is
//! "`a` then `b`" and requires `target(a) == source(b)`.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: i64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub label: String,
    /// Index into [`Quiver::vertices`].
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: i64, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.vertices.iter().any(|v| v.id == id) {
            return Err(Error::InvalidInput(format!("duplicate vertex id {id}")));
        }
        if self.vertices.iter().any(|v| v.label == label) {
            return Err(Error::InvalidInput(format!("duplicate vertex label {label}")));
        }
        self.vertices.push(Vertex { id, label });
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, label: impl Into<String>, source: usize, target: usize) -> Result<usize> {
        let label = label.into();
        if source >= self.vertices.len() || target >= self.vertices.len() {
            return Err(Error::InvalidInput(format!("arrow {label}: endpoint not declared")));
        }
        if self.arrows.iter().any(|a| a.label == label) {
            return Err(Error::InvalidInput(format!("duplicate arrow label {label}")));
        }
        self.arrows.push(Arrow { label, source, target });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Resolves a vertex by label, falling back to its numeric id.
    pub fn vertex_index(&self, key: &str) -> Result<usize> {
        if let Some(i) = self.vertices.iter().position(|v| v.label == key) {
            return Ok(i);
        }
        if let Ok(id) = key.parse::<i64>() {
            if let Some(i) = self.vertices.iter().position(|v| v.id == id) {
                return Ok(i);
            }
        }
        Err(Error::UnknownVertex(key.to_string()))
    }

    pub fn arrow_index(&self, label: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    pub fn arrows_out(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_in(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows_out(v).next().is_none()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows_in(v).next().is_none()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Vertices ordered so every arrow goes from a later to an earlier
    /// position (sinks first), or `None` if the quiver has an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut out_deg: Vec<usize> = (0..n).map(|v| self.arrows_out(v).count()).collect();
        let mut order = Vec::new();
        let mut ready: Vec<usize> = (0..n).filter(|&v| out_deg[v] == 0).collect();
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows_in(v) {
                let s = self.arrows[a].source;
                out_deg[s] -= 1;
                if out_deg[s] == 0 {
                    ready.push(s);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Quiver with all arrows reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    pub fn arrow_count_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.source][a.target] += 1;
        }
        m
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.vertices[p.source].label)
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Parses a `.`-separated arrow label sequence (or `e<vertex>`).
    pub fn parse_path(&self, s: &str) -> Result<Path> {
        let s = s.trim();
        if let Some(v) = s.strip_prefix('e') {
            if let Ok(i) = self.vertex_index(v) {
                if self.arrow_index(s).is_err() {
                    return Ok(Path::trivial(i));
                }
            }
        }
        let arrows = s
            .split('.')
            .map(|a| self.arrow_index(a.trim()))
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(self, arrows)
    }
}

/// A path in a quiver, possibly trivial (`arrows` empty, `source == target`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Path {
        Path {
            source: q.arrows[a].source,
            target: q.arrows[a].target,
            arrows: vec![a],
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidInput("empty path without base vertex".into()));
        };
        for w in arrows.windows(2) {
            if q.arrows[w[0]].target != q.arrows[w[1]].source {
                return Err(Error::InvalidInput(format!(
                    "arrows {} and {} are not composable",
                    q.arrows[w[0]].label, q.arrows[w[1]].label
                )));
            }
        }
        Ok(Path {
            source: q.arrows[first].source,
            target: q.arrows[*arrows.last().unwrap()].target,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self` then `o`, if composable.
    pub fn concat(&self, o: &Path) -> Option<Path> {
        if self.target != o.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&o.arrows);
        Some(Path {
            source: self.source,
            target: o.target,
            arrows,
        })
    }

    /// Order used for normal forms: by length, then arrow-id sequence.
    pub fn cmp_deglex(&self, o: &Path) -> Ordering {
        self.len()
            .cmp(&o.len())
            .then_with(|| self.arrows.cmp(&o.arrows))
            .then_with(|| self.source.cmp(&o.source))
    }
}

/// A linear combination of parallel paths, all of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Result<Relation> {
        let mut merged: Vec<(Scalar, Path)> = Vec::new();
        for (c, p) in terms {
            if let Some(e) = merged.iter_mut().find(|(_, q)| *q == p) {
                e.0 = &e.0 + &c;
            } else {
                merged.push((c, p));
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        if merged.is_empty() {
            return Err(Error::InvalidInput("relation is identically zero".into()));
        }
        let (s, t) = (merged[0].1.source, merged[0].1.target);
        if merged.iter().any(|(_, p)| p.source != s || p.target != t) {
            return Err(Error::InvalidInput("relation terms are not parallel".into()));
        }
        Ok(Relation { terms: merged })
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut s = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            s.push_str(&format!("{}*{}", c, q.path_label(p)));
        }
        s.push_str(" = 0");
        s
    }

    /// Relation on the opposite quiver (each path read backwards).
    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| {
                    let mut arrows = p.arrows.clone();
                    arrows.reverse();
                    (
                        c.clone(),
                        Path {
                            source: p.target,
                            target: p.source,
                            arrows,
                        },
                    )
                })
                .collect(),
        }
    }
}

/// All paths of length `0..=max_len`, bucketed by source vertex.
pub fn paths_by_source(q: &Quiver, max_len: usize) -> Vec<Vec<Path>> {
    let n = q.vertices.len();
    let mut out: Vec<Vec<Path>> = (0..n).map(|v| vec![Path::trivial(v)]).collect();
    let mut frontier: Vec<Path> = (0..n).map(Path::trivial).collect();
    let mut by_source_out: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, a) in q.arrows.iter().enumerate() {
        by_source_out.entry(a.source).or_default().push(i);
    }
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            if let Some(outs) = by_source_out.get(&p.target) {
                for &a in outs {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path {
                        source: p.source,
                        target: q.arrows[a].target,
                        arrows,
                    });
                }
            }
        }
        for p in &next {
            out[p.source].push(p.clone());
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    out
}
