//! Algebras given by structure constants, and recovery of a bound quiver
//! presentation from them.

use std::collections::HashMap;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, Echelon, Mat};
use crate::quiver::{Path, Quiver, Relation};
use crate::scalar::{FieldSpec, Scalar};

type Sparse = Vec<(usize, Scalar)>;

/// A finite-dimensional algebra on a basis, with a complete set of
/// orthogonal idempotents naming the vertices.
#[derive(Clone, Debug)]
pub struct StructureConstantAlgebra {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    mult: Vec<Sparse>,
    pub idempotents: Vec<Vec<Scalar>>,
    /// `(id, label)` for each idempotent.
    pub vertices: Vec<(i64, String)>,
    /// Named elements preferred as arrows during presentation.
    pub arrow_hints: Vec<(String, Vec<Scalar>)>,
}

impl StructureConstantAlgebra {
    /// `mult(i, j)` is the product of basis elements `i` and `j`.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        mut mult: impl FnMut(usize, usize) -> Sparse,
        idempotents: Vec<Vec<Scalar>>,
        vertices: Vec<(i64, String)>,
    ) -> Result<Self> {
        let n = labels.len();
        if vertices.len() != idempotents.len() {
            return Err(Error::InvalidInput("one vertex name per idempotent required".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(mult(i, j).into_iter().filter(|(_, c)| !c.is_zero()).collect());
            }
        }
        let a = StructureConstantAlgebra {
            field,
            labels,
            mult: table,
            idempotents,
            vertices,
            arrow_hints: Vec::new(),
        };
        a.check_idempotents()?;
        Ok(a)
    }

    pub fn from_bqa(alg: &BoundQuiverAlgebra) -> Self {
        let n = alg.dim();
        let idem = (0..alg.vertex_count())
            .map(|v| {
                let mut e = alg.zero_element();
                e[alg.idempotent(v)] = alg.field.one();
                e
            })
            .collect();
        let mut a = StructureConstantAlgebra {
            field: alg.field,
            labels: (0..n).map(|i| alg.basis_label(i)).collect(),
            mult: (0..n * n).map(|k| alg.mul_basis(k / n, k % n).to_vec()).collect(),
            idempotents: idem,
            vertices: alg.quiver.vertices.iter().map(|v| (v.id, v.label.clone())).collect(),
            arrow_hints: Vec::new(),
        };
        a.arrow_hints = alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(i, ar)| (ar.label.clone(), alg.element_of_path(&Path::arrow(&alg.quiver, i))))
            .collect();
        a
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        let ys: Vec<(usize, &Scalar)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &ys {
                let ab = a * b;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<Scalar> {
        let mut u = self.zero();
        for e in &self.idempotents {
            for (k, c) in e.iter().enumerate() {
                u[k] = &u[k] + c;
            }
        }
        u
    }

    fn check_idempotents(&self) -> Result<()> {
        for (i, e) in self.idempotents.iter().enumerate() {
            for (j, f) in self.idempotents.iter().enumerate() {
                let p = self.mul(e, f);
                let expect = if i == j { e.clone() } else { self.zero() };
                if p != expect {
                    return Err(Error::InvalidInput(format!(
                        "idempotents {i} and {j} are not orthogonal idempotents"
                    )));
                }
            }
        }
        let u = self.unit();
        for i in 0..self.dim() {
            let b = self.basis_vector(i);
            if self.mul(&u, &b) != b || self.mul(&b, &u) != b {
                return Err(Error::InvalidInput("idempotents do not sum to the unit".into()));
            }
        }
        Ok(())
    }

    /// Checks `(xy)z = x(yz)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij: Vec<Scalar> = {
                    let mut v = self.zero();
                    for (k, c) in self.mul_basis(i, j) {
                        v[*k] = c.clone();
                    }
                    v
                };
                for k in 0..n {
                    let bk = self.basis_vector(k);
                    let bi = self.basis_vector(i);
                    let jk = self.mul(&self.basis_vector(j), &bk);
                    if self.mul(&ij, &bk) != self.mul(&bi, &jk) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `e_i x e_j`.
    pub fn peirce(&self, i: usize, x: &[Scalar], j: usize) -> Vec<Scalar> {
        self.mul(&self.mul(&self.idempotents[i], x), &self.idempotents[j])
    }

    /// Trace of left multiplication by each basis element.
    fn left_traces(&self) -> Vec<Scalar> {
        (0..self.dim())
            .map(|l| {
                let mut t = self.field.zero();
                for k in 0..self.dim() {
                    if let Some((_, c)) = self.mul_basis(l, k).iter().find(|(i, _)| *i == k) {
                        t = &t + c;
                    }
                }
                t
            })
            .collect()
    }

    /// Jacobson radical as the kernel of the trace form `(x, y) ↦ tr L_{xy}`,
    /// valid in characteristic zero.
    pub fn radical(&self) -> Result<Vec<Vec<Scalar>>> {
        if self.field.characteristic() != 0 {
            return Err(Error::CharacteristicZeroRequired);
        }
        let n = self.dim();
        let t = self.left_traces();
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut s = self.field.zero();
                        for (l, c) in self.mul_basis(a, b) {
                            if !t[*l].is_zero() {
                                s = &s + &(c * &t[*l]);
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        Ok(kernel_basis(&Mat::from_rows(self.field, rows)))
    }
}

/// A bound quiver algebra certified isomorphic to a structure-constant
/// algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub algebra: BoundQuiverAlgebra,
    /// Image of each basis path of `algebra` in the structure-constant algebra.
    pub images: Vec<Vec<Scalar>>,
    /// Image of each arrow.
    pub arrow_elements: Vec<Vec<Scalar>>,
}

/// Basis of each Peirce block `e_i S e_j` of a subspace `S` closed under
/// both idempotent actions.
fn peirce_blocks(a: &StructureConstantAlgebra, space: &[Vec<Scalar>]) -> Vec<Vec<Vec<Vec<Scalar>>>> {
    let n = a.idempotents.len();
    let mut out = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        let left: Vec<Vec<Scalar>> = space.iter().map(|x| a.mul(&a.idempotents[i], x)).collect();
        for j in 0..n {
            let mut e = Echelon::new(a.field, a.dim());
            for x in &left {
                let y = a.mul(x, &a.idempotents[j]);
                if e.insert(&y) {
                    out[i][j].push(y);
                }
            }
        }
    }
    out
}

fn block_products(
    a: &StructureConstantAlgebra,
    x: &[Vec<Vec<Vec<Scalar>>>],
    y: &[Vec<Vec<Vec<Scalar>>>],
) -> Vec<Vec<Vec<Vec<Scalar>>>> {
    let n = x.len();
    let mut out = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for k in 0..n {
            let mut e = Echelon::new(a.field, a.dim());
            for j in 0..n {
                for u in &x[i][j] {
                    for v in &y[j][k] {
                        let p = a.mul(u, v);
                        if e.insert(&p) {
                            out[i][k].push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

fn is_empty_blocks(b: &[Vec<Vec<Vec<Scalar>>>]) -> bool {
    b.iter().all(|r| r.iter().all(Vec::is_empty))
}

fn arrow_label(taken: &mut std::collections::HashSet<String>, want: &str) -> String {
    let mut label = want.to_string();
    let mut k = 1;
    while taken.contains(&label) {
        label = format!("{want}_{k}");
        k += 1;
    }
    taken.insert(label.clone());
    label
}

/// Recovers the bound quiver of a basic algebra: vertices are the given
/// idempotents, arrows span `rad/rad²` blockwise, and relations are the
/// kernel of `kQ -> A` up to the Loewy length.
pub fn present_sca(a: &StructureConstantAlgebra, name: &str) -> Result<Presentation> {
    let f = a.field;
    let nv = a.idempotents.len();
    let rad = a.radical()?;
    let rad_b = peirce_blocks(a, &rad);
    let full = peirce_blocks(a, &(0..a.dim()).map(|k| a.basis_vector(k)).collect::<Vec<_>>());
    for i in 0..nv {
        if full[i][i].len() != rad_b[i][i].len() + 1 {
            return Err(Error::NotBasic(format!(
                "vertex {} has e A e / rad of dimension {}",
                a.vertices[i].1,
                full[i][i].len() - rad_b[i][i].len()
            )));
        }
    }
    if rad.len() + nv != a.dim() {
        return Err(Error::NotBasic(format!("A/rad has dimension {}", a.dim() - rad.len())));
    }
    let rad2 = block_products(a, &rad_b, &rad_b);

    let mut quiver = Quiver::new();
    for (id, label) in &a.vertices {
        quiver.add_vertex(*id, label.clone())?;
    }
    let mut used = std::collections::HashSet::new();
    let mut arrow_elements = Vec::new();
    for i in 0..nv {
        for j in 0..nv {
            let mut e = Echelon::new(f, a.dim());
            for x in &rad2[i][j] {
                e.insert(x);
            }
            let mut chosen: Vec<(String, Vec<Scalar>)> = Vec::new();
            let default = format!("x_{}_{}", a.vertices[i].1, a.vertices[j].1);
            for (label, h) in &a.arrow_hints {
                if a.peirce(i, h, j) == *h && h.iter().any(|c| !c.is_zero()) && e.insert(h) {
                    let l = if label.is_empty() {
                        default.clone()
                    } else {
                        label.clone()
                    };
                    chosen.push((l, h.clone()));
                }
            }
            for x in &rad_b[i][j] {
                if e.insert(x) {
                    chosen.push((default.clone(), x.clone()));
                }
            }
            for (label, x) in chosen {
                let label = arrow_label(&mut used, &label);
                quiver.add_arrow(label, i, j)?;
                arrow_elements.push(x);
            }
        }
    }

    // Loewy length: smallest L with rad^L = 0.
    let mut loewy = 1;
    let mut power = rad_b.clone();
    while !is_empty_blocks(&power) {
        power = block_products(a, &power, &rad_b);
        loewy += 1;
    }

    let relations = kernel_relations(a, &quiver, &arrow_elements, loewy)?;
    let algebra = BoundQuiverAlgebra::new(name, f, quiver, relations)?;
    let images: Vec<Vec<Scalar>> = algebra
        .basis()
        .iter()
        .map(|p| path_image(a, &arrow_elements, p))
        .collect();
    if algebra.dim() != a.dim() || Mat::from_columns(f, a.dim(), &images).rank() != a.dim() {
        return Err(Error::InvalidInput(format!(
            "presentation has dimension {} but the algebra has dimension {}",
            algebra.dim(),
            a.dim()
        )));
    }
    Ok(Presentation {
        algebra,
        images,
        arrow_elements,
    })
}

fn path_image(a: &StructureConstantAlgebra, arrows: &[Vec<Scalar>], p: &Path) -> Vec<Scalar> {
    let mut v = a.idempotents[p.source].clone();
    for &ar in &p.arrows {
        v = a.mul(&v, &arrows[ar]);
    }
    v
}

/// Minimal generators of the kernel of `kQ/J^{L+1} -> A`, blockwise: kernel
/// vectors not already in the ideal generated one arrow away.
fn kernel_relations(
    a: &StructureConstantAlgebra,
    q: &Quiver,
    arrows: &[Vec<Scalar>],
    loewy: usize,
) -> Result<Vec<Relation>> {
    let f = a.field;
    let nv = q.vertex_count();
    // Paths of length 2..=loewy with their images, grouped by endpoints.
    let mut blocks: HashMap<(usize, usize), Vec<(Path, Vec<Scalar>)>> = HashMap::new();
    let mut frontier: Vec<(Path, Vec<Scalar>)> =
        (0..nv).map(|v| (Path::trivial(v), a.idempotents[v].clone())).collect();
    for len in 1..=loewy {
        let mut next = Vec::new();
        for (p, img) in &frontier {
            for ar in q.arrows_out(p.target) {
                let np = p.concat(&Path::arrow(q, ar)).expect("composable");
                let ni = if len == loewy {
                    a.zero()
                } else {
                    a.mul(img, &arrows[ar])
                };
                if len >= 2 {
                    blocks
                        .entry((np.source, np.target))
                        .or_default()
                        .push((np.clone(), ni.clone()));
                }
                next.push((np, ni));
            }
        }
        frontier = next;
    }
    let index: HashMap<(usize, usize), HashMap<Path, usize>> = blocks
        .iter()
        .map(|(k, ps)| (*k, ps.iter().enumerate().map(|(i, (p, _))| (p.clone(), i)).collect()))
        .collect();
    let mut kernels: HashMap<(usize, usize), Vec<Vec<Scalar>>> = HashMap::new();
    for (k, ps) in &blocks {
        let m = Mat::from_columns(f, a.dim(), &ps.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>());
        kernels.insert(*k, kernel_basis(&m));
    }
    let mut keys: Vec<(usize, usize)> = blocks.keys().copied().collect();
    keys.sort();
    let mut rels = Vec::new();
    for (s, t) in keys {
        let ps = &blocks[&(s, t)];
        let idx = &index[&(s, t)];
        let mut ech = Echelon::new(f, ps.len());
        let push_shifted =
            |ech: &mut Echelon, src: (usize, usize), vec: &[Scalar], pre: Option<usize>, post: Option<usize>| {
                let from = &blocks[&src];
                let mut out = vec![f.zero(); ps.len()];
                let mut any = false;
                for (c, (p, _)) in vec.iter().zip(from) {
                    if c.is_zero() {
                        continue;
                    }
                    let mut w = p.clone();
                    if let Some(x) = pre {
                        w = Path::arrow(q, x).concat(&w).expect("composable");
                    }
                    if let Some(y) = post {
                        w = w.concat(&Path::arrow(q, y)).expect("composable");
                    }
                    if let Some(&i) = idx.get(&w) {
                        out[i] = &out[i] + c;
                        any = true;
                    }
                }
                if any {
                    ech.insert(&out);
                }
            };
        for x in q.arrows_out(s) {
            let s2 = q.arrows[x].target;
            if let Some(ks) = kernels.get(&(s2, t)) {
                for k in ks {
                    push_shifted(&mut ech, (s2, t), k, Some(x), None);
                }
            }
        }
        for y in q.arrows_in(t) {
            let t2 = q.arrows[y].source;
            if let Some(ks) = kernels.get(&(s, t2)) {
                for k in ks {
                    push_shifted(&mut ech, (s, t2), k, None, Some(y));
                }
            }
        }
        for k in &kernels[&(s, t)] {
            if ech.insert(k) {
                let terms: Vec<(Scalar, Path)> = k
                    .iter()
                    .zip(ps)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, (p, _))| (c.clone(), p.clone()))
                    .collect();
                rels.push(Relation::new(terms)?);
            }
        }
    }
    Ok(rels)
}

/// Subalgebra `eAe` for `e` the sum of the idempotents of `keep`, on the
/// basis paths with both endpoints in `keep`.
pub fn truncation_sca(alg: &BoundQuiverAlgebra, keep: &[usize]) -> (StructureConstantAlgebra, Vec<usize>) {
    let kept: Vec<usize> = (0..alg.dim())
        .filter(|&i| {
            let p = &alg.basis()[i];
            keep.contains(&p.source) && keep.contains(&p.target)
        })
        .collect();
    let pos: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let f = alg.field;
    let n = kept.len();
    let labels = kept.iter().map(|&i| alg.basis_label(i)).collect();
    let mult: Vec<Sparse> = (0..n * n)
        .map(|k| {
            alg.mul_basis(kept[k / n], kept[k % n])
                .iter()
                .map(|(b, c)| (pos[b], c.clone()))
                .collect()
        })
        .collect();
    let idempotents = keep
        .iter()
        .map(|&v| {
            let mut e = vec![f.zero(); n];
            e[pos[&alg.idempotent(v)]] = f.one();
            e
        })
        .collect();
    let vertices = keep
        .iter()
        .map(|&v| (alg.quiver.vertices[v].id, alg.quiver.vertices[v].label.clone()))
        .collect();
    let arrow_hints = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .filter(|(_, ar)| keep.contains(&ar.source) && keep.contains(&ar.target))
        .map(|(i, ar)| {
            let full = alg.element_of_path(&Path::arrow(&alg.quiver, i));
            (ar.label.clone(), kept.iter().map(|&b| full[b].clone()).collect())
        })
        .collect();
    (
        StructureConstantAlgebra {
            field: f,
            labels,
            mult,
            idempotents,
            vertices,
            arrow_hints,
        },
        kept,
    )
}

/// `eAe` re-presented as a bound quiver algebra. Returns the presentation
/// and the basis indices of `alg` spanning `eAe`.
pub fn idempotent_truncation(alg: &BoundQuiverAlgebra, keep: &[usize]) -> Result<(Presentation, Vec<usize>)> {
    if keep.is_empty() {
        return Err(Error::InvalidInput("empty vertex set".into()));
    }
    let (sca, kept) = truncation_sca(alg, keep);
    Ok((present_sca(&sca, &alg.name)?, kept))
}

/// Restriction of a module to `eAe`, using the truncation's presentation.
pub fn restrict_module(
    alg: &BoundQuiverAlgebra,
    m: &crate::Representation,
    keep: &[usize],
    pres: &Presentation,
    kept: &[usize],
) -> Result<crate::Representation> {
    let dims: Vec<usize> = keep.iter().map(|&v| m.dims[v]).collect();
    let sub = &pres.algebra;
    let maps = sub
        .quiver
        .arrows
        .iter()
        .zip(&pres.arrow_elements)
        .map(|(ar, x)| {
            let mut full = alg.zero_element();
            for (c, &b) in x.iter().zip(kept) {
                full[b] = c.clone();
            }
            m.block_action(alg, keep[ar.source], keep[ar.target], &full)
        })
        .collect();
    crate::Representation::new(sub, dims, maps)
}

/// Vertex bijection `σ` with equal arrow counts `i -> j` and `σi -> σj`
/// and, if given, equal Cartan entries.
pub fn quiver_isomorphism(a: &BoundQuiverAlgebra, b: &BoundQuiverAlgebra) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.quiver.arrows.len() != b.quiver.arrows.len() || a.dim() != b.dim() {
        return None;
    }
    let qa = a.quiver.arrow_count_matrix();
    let qb = b.quiver.arrow_count_matrix();
    let ca = a.cartan_matrix();
    let cb = b.cartan_matrix();
    let sig = |q: &Vec<Vec<usize>>, c: &Vec<Vec<usize>>, v: usize| {
        let mut out: Vec<usize> = q[v].clone();
        out.sort();
        let mut inn: Vec<usize> = q.iter().map(|r| r[v]).collect();
        inn.sort();
        let mut cr: Vec<usize> = c[v].clone();
        cr.sort();
        let mut cc: Vec<usize> = c.iter().map(|r| r[v]).collect();
        cc.sort();
        (out, inn, cr, cc)
    };
    let sa: Vec<_> = (0..n).map(|v| sig(&qa, &ca, v)).collect();
    let sb: Vec<_> = (0..n).map(|v| sig(&qb, &cb, v)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        n: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ok: &dyn Fn(usize, usize, &[usize]) -> bool,
    ) -> bool {
        if k == n {
            return true;
        }
        for w in 0..n {
            if !used[w] && ok(k, w, map) {
                map[k] = w;
                used[w] = true;
                if go(k + 1, n, map, used, ok) {
                    return true;
                }
                used[w] = false;
                map[k] = usize::MAX;
            }
        }
        false
    }
    let ok = |v: usize, w: usize, map: &[usize]| {
        if sa[v] != sb[w] || qa[v][v] != qb[w][w] || ca[v][v] != cb[w][w] {
            return false;
        }
        (0..v).all(|u| {
            let x = map[u];
            qa[u][v] == qb[x][w] && qa[v][u] == qb[w][x] && ca[u][v] == cb[x][w] && ca[v][u] == cb[w][x]
        })
    };
    go(0, n, &mut map, &mut used, &ok).then_some(map)
}

/// Two algebras on the same labelled quiver have the same ideal iff each
/// one's relations vanish in the other.
pub fn same_ideal(a: &BoundQuiverAlgebra, b: &BoundQuiverAlgebra) -> Result<bool> {
    Ok(relations_hold_in(a, b)? && relations_hold_in(b, a)?)
}

/// Whether every relation of `a`, read by labels in `b`'s quiver, vanishes in `b`.
pub fn relations_hold_in(a: &BoundQuiverAlgebra, b: &BoundQuiverAlgebra) -> Result<bool> {
    for r in &a.relations {
        let text = crate::format::relation_text(&a.quiver, r);
        let rb = crate::format::parse_relation(&b.quiver, b.field, &text)?;
        let mut v = b.zero_element();
        for (c, p) in &rb.terms {
            for (i, x) in b.reduce_path(p) {
                v[i] = &v[i] + &(c * &x);
            }
        }
        if v.iter().any(|c| !c.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_bqa;

    const SQUARE: &str = "vertex 1 1\nvertex 2 2\nvertex 3 3\nvertex 4 4\n\
        arrow a: 4 -> 2\narrow b: 2 -> 1\narrow c: 4 -> 3\narrow d: 3 -> 1\nrelation a.b - c.d = 0\n";

    #[test]
    fn round_trip_keeps_quiver_and_ideal() {
        let a = parse_bqa(SQUARE).unwrap();
        let s = StructureConstantAlgebra::from_bqa(&a);
        assert!(s.is_associative());
        let p = present_sca(&s, "A").unwrap();
        assert_eq!(p.algebra.quiver.arrow_count_matrix(), a.quiver.arrow_count_matrix());
        assert!(same_ideal(&a, &p.algebra).unwrap());
        assert!(quiver_isomorphism(&a, &p.algebra).is_some());
    }

    #[test]
    fn radical_of_a2() {
        let a = parse_bqa("vertex 1 1\nvertex 2 2\narrow a: 2 -> 1\n").unwrap();
        let s = StructureConstantAlgebra::from_bqa(&a);
        assert_eq!(s.radical().unwrap().len(), 1);
    }

    #[test]
    fn prime_field_refused() {
        let a = parse_bqa("field F5\nvertex 1 1\n").unwrap();
        let s = StructureConstantAlgebra::from_bqa(&a);
        assert!(matches!(present_sca(&s, "A"), Err(Error::CharacteristicZeroRequired)));
    }

    #[test]
    fn truncating_a3_keeps_long_path() {
        let a = parse_bqa("vertex 1 1\nvertex 2 2\nvertex 3 3\narrow a: 3 -> 2\narrow b: 2 -> 1\n").unwrap();
        let (p, _) = idempotent_truncation(&a, &[0, 2]).unwrap();
        assert_eq!(p.algebra.dim(), 3);
        assert_eq!(p.algebra.quiver.arrows.len(), 1);
        let (p, _) = idempotent_truncation(&a, &[0, 1, 2]).unwrap();
        assert!(quiver_isomorphism(&a, &p.algebra).is_some());
    }

    #[test]
    fn restriction_of_projective() {
        let a = parse_bqa("vertex 1 1\nvertex 2 2\nvertex 3 3\narrow a: 3 -> 2\narrow b: 2 -> 1\n").unwrap();
        let (p, kept) = idempotent_truncation(&a, &[0, 2]).unwrap();
        let m = crate::Representation::projective(&a, 2);
        let r = restrict_module(&a, &m, &[0, 2], &p, &kept).unwrap();
        assert_eq!(r.dims, vec![1, 1]);
        assert!(!r.maps[0].is_zero());
    }
}
