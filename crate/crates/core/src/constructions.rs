//! Algebra constructions: one-point (co)extensions, reflections at sinks,
//! branch rooting, trivial extensions and finite windows of the repetitive
//! algebra.

use std::collections::{HashMap, HashSet};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::format::{parse_relation, relation_text};
use crate::module::{dual_module, socle_dims, Representation};
use crate::quiver::{Path, Quiver, Relation};
use crate::sca::{present_sca, Presentation, StructureConstantAlgebra};
use crate::scalar::Scalar;

type Sparse = Vec<(usize, Scalar)>;

fn primed(label: &str, k: usize) -> String {
    format!("{label}{}", "'".repeat(k))
}

/// Id and label for the extension vertex replacing `v`: the label gains a
/// prime and the id moves up by 100 until free.
pub fn prime_vertex(q: &Quiver, v: usize) -> (i64, String) {
    let vert = &q.vertices[v];
    let mut id = vert.id + 100;
    while q.vertices.iter().any(|w| w.id == id) {
        id += 100;
    }
    (id, format!("{}'", vert.label))
}

/// `B[M]`: basis of `B`, then the basis of `M` (vertex by vertex), then the
/// new idempotent. Elements of `M_x` lie in `e_ω Λ e_x`.
pub fn one_point_extension_sca(
    b: &BoundQuiverAlgebra,
    m: &Representation,
    vertex: (i64, String),
) -> Result<StructureConstantAlgebra> {
    let f = b.field;
    let nb = b.dim();
    let nv = b.vertex_count();
    let mut m_start = vec![0; nv];
    let mut acc = nb;
    for v in 0..nv {
        m_start[v] = acc;
        acc += m.dims[v];
    }
    let omega = acc;
    let n = omega + 1;
    // Vertex of each module basis element.
    let m_vertex: Vec<usize> = (0..nv).flat_map(|v| std::iter::repeat_n(v, m.dims[v])).collect();
    let path_mats: Vec<crate::Mat> = b.basis().iter().map(|p| m.path_matrix(b, p)).collect();
    let mut labels: Vec<String> = (0..nb).map(|i| b.basis_label(i)).collect();
    for (k, &v) in m_vertex.iter().enumerate() {
        labels.push(format!("m{}@{}", k - (m_start[v] - nb), b.vertex_label(v)));
    }
    labels.push(format!("e{}", vertex.1));
    let mult = |i: usize, j: usize| -> Sparse {
        if i < nb && j < nb {
            return b.mul_basis(i, j).to_vec();
        }
        if i == omega && j == omega {
            return vec![(omega, f.one())];
        }
        if i == omega && j >= nb && j < omega {
            return vec![(j, f.one())];
        }
        if i >= nb && i < omega && j < nb {
            let v = m_vertex[i - nb];
            let p = &b.basis()[j];
            if p.source != v {
                return Vec::new();
            }
            let col = path_mats[j].column(i - m_start[v]);
            return col
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| (m_start[p.target] + r, c))
                .collect();
        }
        Vec::new()
    };
    let mut idem: Vec<Vec<Scalar>> = (0..nv)
        .map(|v| {
            let mut e = vec![f.zero(); n];
            e[b.idempotent(v)] = f.one();
            e
        })
        .collect();
    let mut e = vec![f.zero(); n];
    e[omega] = f.one();
    idem.push(e);
    let mut verts: Vec<(i64, String)> = b.quiver.vertices.iter().map(|v| (v.id, v.label.clone())).collect();
    verts.push(vertex);
    let mut sca = StructureConstantAlgebra::new(f, labels, mult, idem, verts)?;
    let mut hints: Vec<(String, Vec<Scalar>)> = b
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(i, ar)| {
            let mut v = b.element_of_path(&Path::arrow(&b.quiver, i));
            v.resize(n, f.zero());
            (ar.label.clone(), v)
        })
        .collect();
    for k in nb..omega {
        let mut v = vec![f.zero(); n];
        v[k] = f.one();
        hints.push((String::new(), v));
    }
    sca.arrow_hints = hints;
    Ok(sca)
}

pub fn one_point_extension(b: &BoundQuiverAlgebra, m: &Representation, vertex: (i64, String)) -> Result<Presentation> {
    let name = format!("{}[M]", b.name);
    present_sca(&one_point_extension_sca(b, m, vertex)?, &name)
}

/// `[M]B = (B^op[DM])^op`; the new vertex is a sink.
pub fn one_point_coextension(
    b: &BoundQuiverAlgebra,
    m: &Representation,
    vertex: (i64, String),
) -> Result<BoundQuiverAlgebra> {
    let op = b.opposite()?;
    let ext = one_point_extension(&op, &dual_module(m), vertex)?;
    let mut out = ext.algebra.opposite()?;
    out.name = format!("[M]{}", b.name);
    Ok(out)
}

/// `T⁺_i B = B[I(i)]` with new vertex `i'`.
pub fn t_plus(b: &BoundQuiverAlgebra, i: usize) -> Result<Presentation> {
    let mut p = one_point_extension(b, &Representation::injective(b, i), prime_vertex(&b.quiver, i))?;
    p.algebra.name = format!("T+{}({})", b.vertex_label(i), b.name);
    Ok(p)
}

/// `S⁺_i B`: `T⁺_i B` with the sink `i` removed.
pub fn reflection_splus(b: &BoundQuiverAlgebra, i: usize) -> Result<BoundQuiverAlgebra> {
    if !b.quiver.is_sink(i) {
        return Err(Error::NotASink {
            vertex: b.vertex_label(i).to_string(),
            step: 1,
        });
    }
    let t = t_plus(b, i)?.algebra;
    let old = t.quiver.vertex_index(b.vertex_label(i))?;
    let keep: Vec<usize> = (0..t.vertex_count()).filter(|&v| v != old).collect();
    let (p, _) = crate::sca::idempotent_truncation(&t, &keep)?;
    let mut a = p.algebra;
    a.name = format!("S+{}({})", b.vertex_label(i), b.name);
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflectionMode {
    SPlus,
    TPlus,
}

/// Folds reflections (or one-point extensions by injectives) along a
/// sequence of vertex labels. In `TPlus` mode each vertex must be a sink
/// once the previously extended vertices are removed.
pub fn apply_reflection_sequence(
    b: &BoundQuiverAlgebra,
    seq: &[&str],
    mode: ReflectionMode,
) -> Result<BoundQuiverAlgebra> {
    let mut cur = b.clone();
    let mut done: HashSet<String> = HashSet::new();
    for (step, label) in seq.iter().enumerate() {
        let v = cur.quiver.vertex_index(label)?;
        let sink = cur
            .quiver
            .arrows_out(v)
            .all(|a| done.contains(cur.vertex_label(cur.quiver.arrows[a].target)));
        if !sink {
            return Err(Error::NotASink {
                vertex: label.to_string(),
                step: step + 1,
            });
        }
        cur = match mode {
            ReflectionMode::SPlus => reflection_splus(&cur, v)?,
            ReflectionMode::TPlus => t_plus(&cur, v)?.algebra,
        };
        done.insert(label.to_string());
    }
    Ok(cur)
}

/// Checks that `branch` is a tree whose relations are zero relations of
/// length two.
fn validate_branch(branch: &BoundQuiverAlgebra) -> Result<()> {
    let q = &branch.quiver;
    if !q.is_connected() || q.arrows.len() + 1 != q.vertex_count() {
        return Err(Error::InvalidBranch("branch quiver is not a tree".into()));
    }
    for r in &branch.relations {
        if r.terms.len() != 1 || r.terms[0].1.len() != 2 {
            return Err(Error::InvalidBranch(format!(
                "relation {} is not a zero relation of length 2",
                r.display(q)
            )));
        }
    }
    Ok(())
}

/// Glues `branch` to `b` by identifying the branch vertex `root` with the
/// vertex `at` of `b`; the ideal is generated by both ideals.
pub fn root_branch(
    b: &BoundQuiverAlgebra,
    at: &str,
    branch: &BoundQuiverAlgebra,
    root: &str,
) -> Result<BoundQuiverAlgebra> {
    validate_branch(branch)?;
    let at_v = b.quiver.vertex_index(at)?;
    let root_v = branch.quiver.vertex_index(root)?;
    let mut q = b.quiver.clone();
    let mut vmap = vec![usize::MAX; branch.vertex_count()];
    vmap[root_v] = at_v;
    for (v, vert) in branch.quiver.vertices.iter().enumerate() {
        if v == root_v {
            continue;
        }
        if q.vertices.iter().any(|w| w.label == vert.label || w.id == vert.id) {
            return Err(Error::BranchOverlap(format!("vertex `{}`", vert.label)));
        }
        vmap[v] = q.add_vertex(vert.id, vert.label.clone())?;
    }
    for ar in &branch.quiver.arrows {
        if q.arrows.iter().any(|x| x.label == ar.label) {
            return Err(Error::BranchOverlap(format!("arrow `{}`", ar.label)));
        }
        q.add_arrow(ar.label.clone(), vmap[ar.source], vmap[ar.target])?;
    }
    let mut rels = b.relations.clone();
    for r in &branch.relations {
        rels.push(parse_relation(&q, b.field, &relation_text(&branch.quiver, r))?);
    }
    BoundQuiverAlgebra::new(format!("{}+branch", b.name), b.field, q, rels)
}

/// `p* · a` and `a · p*` in `D(B)`, as sparse vectors over the dual basis.
fn dual_actions(b: &BoundQuiverAlgebra) -> (Vec<Vec<Sparse>>, Vec<Vec<Sparse>>) {
    let n = b.dim();
    let mut right = vec![vec![Vec::new(); n]; n];
    let mut left = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for q in 0..n {
            for (p, c) in b.mul_basis(a, q) {
                // p*·a has coefficient coef_p(a q) at q*.
                right[*p][a].push((q, c.clone()));
            }
            for (p, c) in b.mul_basis(q, a) {
                // a·p* has coefficient coef_p(q a) at q*.
                left[a][*p].push((q, c.clone()));
            }
        }
    }
    (right, left)
}

fn dual_hints(b: &BoundQuiverAlgebra, offset: usize, n: usize) -> Vec<(String, Vec<Scalar>)> {
    let f = b.field;
    (0..b.dim())
        .rev()
        .map(|p| {
            let mut v = vec![f.zero(); n];
            v[offset + p] = f.one();
            (String::new(), v)
        })
        .collect()
}

/// `T(B) = B ⋉ D(B)`: basis of `B` followed by the dual basis.
pub fn trivial_extension_sca(b: &BoundQuiverAlgebra) -> Result<StructureConstantAlgebra> {
    let f = b.field;
    let nb = b.dim();
    let n = 2 * nb;
    let (right, left) = dual_actions(b);
    let mut labels: Vec<String> = (0..nb).map(|i| b.basis_label(i)).collect();
    labels.extend((0..nb).map(|i| format!("{}*", b.basis_label(i))));
    let mult = |i: usize, j: usize| -> Sparse {
        match (i < nb, j < nb) {
            (true, true) => b.mul_basis(i, j).to_vec(),
            (false, true) => right[i - nb][j].iter().map(|(q, c)| (nb + q, c.clone())).collect(),
            (true, false) => left[i][j - nb].iter().map(|(q, c)| (nb + q, c.clone())).collect(),
            (false, false) => Vec::new(),
        }
    };
    let idem = (0..b.vertex_count())
        .map(|v| {
            let mut e = vec![f.zero(); n];
            e[b.idempotent(v)] = f.one();
            e
        })
        .collect();
    let verts = b.quiver.vertices.iter().map(|v| (v.id, v.label.clone())).collect();
    let mut sca = StructureConstantAlgebra::new(f, labels, mult, idem, verts)?;
    let mut hints = StructureConstantAlgebra::from_bqa(b).arrow_hints;
    for h in hints.iter_mut() {
        h.1.resize(n, f.zero());
    }
    hints.extend(dual_hints(b, nb, n));
    sca.arrow_hints = hints;
    Ok(sca)
}

pub fn trivial_extension(b: &BoundQuiverAlgebra) -> Result<Presentation> {
    present_sca(&trivial_extension_sca(b)?, &format!("T({})", b.name))
}

/// Nakayama permutation `x ↦ soc P(x)` if every indecomposable projective
/// has simple socle and the assignment is a bijection.
pub fn nakayama_permutation(a: &BoundQuiverAlgebra) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    let mut perm = Vec::with_capacity(n);
    for x in 0..n {
        let s = socle_dims(a, &Representation::projective(a, x));
        if s.iter().sum::<usize>() != 1 {
            return None;
        }
        perm.push(s.iter().position(|&d| d == 1)?);
    }
    let distinct: HashSet<usize> = perm.iter().copied().collect();
    (distinct.len() == n).then_some(perm)
}

pub fn is_selfinjective(a: &BoundQuiverAlgebra) -> bool {
    nakayama_permutation(a).is_some()
}

/// Window of the repetitive algebra with `r` copies of `B`; copy `k` (from
/// 0) has vertex labels with `k` primes and ids shifted by `100k`. The
/// bimodule `D(B)` between copies `k+1` and `k` puts `p*` (for `p: s -> t`)
/// in `e_{t^(k+1)} Λ e_{s^(k)}`.
pub fn repetitive_window_sca(b: &BoundQuiverAlgebra, r: usize) -> Result<StructureConstantAlgebra> {
    if r == 0 {
        return Err(Error::InvalidInput("window must contain at least one copy".into()));
    }
    let f = b.field;
    let nb = b.dim();
    let n = (2 * r - 1) * nb;
    let (right, left) = dual_actions(b);
    let copy = |k: usize| k * nb;
    let dual = |k: usize| (r + k) * nb;
    let mut labels = Vec::with_capacity(n);
    for k in 0..r {
        labels.extend((0..nb).map(|i| primed(&b.basis_label(i), k)));
    }
    for k in 0..r - 1 {
        labels.extend((0..nb).map(|i| format!("{}*{}", b.basis_label(i), k)));
    }
    // Slot of a global basis index: (is_dual, layer, local index).
    let slot = |i: usize| -> (bool, usize, usize) {
        if i < r * nb {
            (false, i / nb, i % nb)
        } else {
            (true, (i - r * nb) / nb, i % nb)
        }
    };
    let mult = |i: usize, j: usize| -> Sparse {
        let (di, ki, li) = slot(i);
        let (dj, kj, lj) = slot(j);
        match (di, dj) {
            (false, false) if ki == kj => b
                .mul_basis(li, lj)
                .iter()
                .map(|(q, c)| (copy(ki) + q, c.clone()))
                .collect(),
            // p* in layer k times a in copy k.
            (true, false) if kj == ki => right[li][lj].iter().map(|(q, c)| (dual(ki) + q, c.clone())).collect(),
            // a in copy k+1 times p* in layer k.
            (false, true) if ki == kj + 1 => left[li][lj].iter().map(|(q, c)| (dual(kj) + q, c.clone())).collect(),
            _ => Vec::new(),
        }
    };
    let mut idem = Vec::new();
    let mut verts = Vec::new();
    for k in 0..r {
        for (v, vert) in b.quiver.vertices.iter().enumerate() {
            let mut e = vec![f.zero(); n];
            e[copy(k) + b.idempotent(v)] = f.one();
            idem.push(e);
            verts.push((vert.id + 100 * k as i64, primed(&vert.label, k)));
        }
    }
    let mut sca = StructureConstantAlgebra::new(f, labels, mult, idem, verts)?;
    let base = StructureConstantAlgebra::from_bqa(b).arrow_hints;
    let mut hints = Vec::new();
    for k in 0..r {
        for (label, v) in &base {
            let mut w = vec![f.zero(); n];
            for (i, c) in v.iter().enumerate() {
                w[copy(k) + i] = c.clone();
            }
            hints.push((primed(label, k), w));
        }
    }
    for k in 0..r - 1 {
        hints.extend(dual_hints(b, dual(k), n));
    }
    sca.arrow_hints = hints;
    Ok(sca)
}

pub fn repetitive_window(b: &BoundQuiverAlgebra, r: usize) -> Result<Presentation> {
    present_sca(&repetitive_window_sca(b, r)?, &format!("{}^({})", b.name, r))
}

/// Outcome of comparing a computed algebra with a displayed presentation on
/// the same vertex labels.
#[derive(Clone, Debug)]
pub struct DisplayComparison {
    pub vertices_match: bool,
    pub arrows_match: bool,
    /// Computed arrow label for each displayed arrow.
    pub arrow_map: Vec<Option<String>>,
    /// Sign applied to each displayed arrow to realise the best match.
    pub signs: Vec<i64>,
    /// Every displayed relation vanishes in the computed algebra.
    pub displayed_in_computed: bool,
    /// Displayed and computed ideals agree (inclusion plus equal dimension).
    pub ideals_equal: bool,
    pub computed_dim: usize,
    pub displayed_dim: usize,
}

impl DisplayComparison {
    pub fn passed(&self) -> bool {
        self.vertices_match && self.arrows_match && self.ideals_equal
    }
}

/// Compares `computed` with `displayed`. Arrows are matched by label, or by
/// endpoints when exactly one arrow joins the two vertices on both sides.
/// Displayed arrows matched by endpoints may be rescaled by `±1`; the
/// signs are searched relation by relation.
pub fn compare_with_displayed(
    computed: &BoundQuiverAlgebra,
    displayed: &BoundQuiverAlgebra,
) -> Result<DisplayComparison> {
    let cq = &computed.quiver;
    let dq = &displayed.quiver;
    let cl: HashSet<&str> = cq.vertices.iter().map(|v| v.label.as_str()).collect();
    let dl: HashSet<&str> = dq.vertices.iter().map(|v| v.label.as_str()).collect();
    let vertices_match = cl == dl;
    let mut out = DisplayComparison {
        vertices_match,
        arrows_match: false,
        arrow_map: vec![None; dq.arrows.len()],
        signs: vec![1; dq.arrows.len()],
        displayed_in_computed: false,
        ideals_equal: false,
        computed_dim: computed.dim(),
        displayed_dim: displayed.dim(),
    };
    if !vertices_match {
        return Ok(out);
    }
    let cv = |d: usize| cq.vertex_index(&dq.vertices[d].label).expect("shared label");
    let mut used = HashSet::new();
    let mut free = Vec::new();
    for (i, a) in dq.arrows.iter().enumerate() {
        let (s, t) = (cv(a.source), cv(a.target));
        let by_label = cq
            .arrows
            .iter()
            .position(|x| x.label == a.label && x.source == s && x.target == t);
        let par_c: Vec<usize> = (0..cq.arrows.len())
            .filter(|&x| cq.arrows[x].source == s && cq.arrows[x].target == t)
            .collect();
        let par_d = dq
            .arrows
            .iter()
            .filter(|x| x.source == a.source && x.target == a.target)
            .count();
        let hit = match by_label {
            Some(x) => Some(x),
            None if par_c.len() == 1 && par_d == 1 => {
                free.push(i);
                Some(par_c[0])
            }
            None => None,
        };
        if let Some(x) = hit {
            if used.insert(x) {
                out.arrow_map[i] = Some(cq.arrows[x].label.clone());
            }
        }
    }
    out.arrows_match = out.arrow_map.iter().all(Option::is_some) && used.len() == cq.arrows.len();
    if !out.arrows_match {
        return Ok(out);
    }
    // Displayed relations rewritten over computed arrow indices.
    let amap: Vec<usize> = out
        .arrow_map
        .iter()
        .map(|l| cq.arrow_index(l.as_deref().expect("matched")).expect("arrow"))
        .collect();
    let rels: Vec<Vec<(Scalar, Path, Vec<usize>)>> = displayed
        .relations
        .iter()
        .map(|r| {
            r.terms
                .iter()
                .map(|(c, p)| {
                    let arrows: Vec<usize> = p.arrows.iter().map(|&a| amap[a]).collect();
                    let path = Path::from_arrows(cq, arrows).expect("composable");
                    (c.clone(), path, p.arrows.clone())
                })
                .collect()
        })
        .collect();
    let f = computed.field;
    let free_pos: HashMap<usize, usize> = free.iter().enumerate().map(|(k, &a)| (a, k)).collect();
    let vanishes = |r: &Vec<(Scalar, Path, Vec<usize>)>, signs: &[i64]| {
        let mut v = computed.zero_element();
        for (c, p, darrows) in r {
            let s: i64 = darrows
                .iter()
                .filter_map(|a| free_pos.get(a))
                .map(|&k| signs[k])
                .product();
            let c = c * &f.from_i64(s);
            for (i, x) in computed.reduce_path(p) {
                v[i] = &v[i] + &(&c * &x);
            }
        }
        v.iter().all(Scalar::is_zero)
    };
    // Relations become decidable once all their free arrows have signs.
    let ready_at: Vec<usize> = rels
        .iter()
        .map(|r| {
            r.iter()
                .flat_map(|(_, _, d)| d.iter().filter_map(|a| free_pos.get(a).copied()))
                .max()
                .map_or(0, |k| k + 1)
        })
        .collect();
    fn search(
        k: usize,
        nfree: usize,
        signs: &mut Vec<i64>,
        rels: &[Vec<(Scalar, Path, Vec<usize>)>],
        ready_at: &[usize],
        vanishes: &dyn Fn(&Vec<(Scalar, Path, Vec<usize>)>, &[i64]) -> bool,
    ) -> bool {
        let check = |signs: &[i64]| {
            rels.iter()
                .zip(ready_at)
                .filter(|(_, &r)| r == k)
                .all(|(rel, _)| vanishes(rel, signs))
        };
        if !check(signs) {
            return false;
        }
        if k == nfree {
            return true;
        }
        for s in [1, -1] {
            signs[k] = s;
            if search(k + 1, nfree, signs, rels, ready_at, vanishes) {
                return true;
            }
        }
        signs[k] = 1;
        false
    }
    let mut signs = vec![1; free.len()];
    out.displayed_in_computed = search(0, free.len(), &mut signs, &rels, &ready_at, &vanishes);
    for (k, &a) in free.iter().enumerate() {
        out.signs[a] = signs[k];
    }
    out.ideals_equal = out.displayed_in_computed && computed.dim() == displayed.dim();
    Ok(out)
}

/// Relations of `a` rewritten for another quiver with the same labels.
pub fn transport_relations(a: &BoundQuiverAlgebra, q: &Quiver) -> Result<Vec<Relation>> {
    a.relations
        .iter()
        .map(|r| parse_relation(q, a.field, &relation_text(&a.quiver, r)))
        .collect()
}
