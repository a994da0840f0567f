//! Bound quiver algebras `kQ/I` with a path basis and multiplication table.
//!
//! The basis is computed by echelonizing the ideal inside `kQ/J^{d+1}` for
//! increasing `d` until every path of length `d` lies in the ideal. Paths are
//! ordered by length then arrow sequence, and the largest paths are chosen as
//! pivots, so the surviving basis paths are the smallest normal forms. The
//! result is the algebra modulo a power of the arrow ideal, which coincides
//! with `kQ/I` whenever `I` is admissible.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::quiver::{paths_by_source, Path, Quiver, Relation};
use crate::scalar::{FieldSpec, Scalar};

pub const DEFAULT_PATH_CAP: usize = 30;

pub type Sparse = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    pub name: String,
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    normal_forms: HashMap<Path, Sparse>,
    loewy: usize,
    mult: HashMap<(usize, usize), Sparse>,
}

struct BlockIdeal {
    columns: Vec<Path>,
    index: HashMap<Vec<usize>, usize>,
    ideal: Echelon,
}

fn ideal_blocks(q: &Quiver, rels: &[Relation], field: FieldSpec, d: usize) -> HashMap<(usize, usize), BlockIdeal> {
    let by_source = paths_by_source(q, d);
    let n = q.vertex_count();
    let mut by_target: Vec<Vec<&Path>> = vec![Vec::new(); n];
    let mut grouped: HashMap<(usize, usize), Vec<Path>> = HashMap::new();
    for ps in &by_source {
        for p in ps {
            by_target[p.target].push(p);
            grouped.entry((p.source, p.target)).or_default().push(p.clone());
        }
    }
    let mut blocks: HashMap<(usize, usize), BlockIdeal> = grouped
        .into_iter()
        .map(|(k, mut cols)| {
            cols.sort_by(|a, b| b.cmp_deglex(a));
            let index = cols.iter().enumerate().map(|(i, p)| (p.arrows.clone(), i)).collect();
            let ideal = Echelon::new(field, cols.len());
            (
                k,
                BlockIdeal {
                    columns: cols,
                    index,
                    ideal,
                },
            )
        })
        .collect();

    for r in rels {
        let m = r.min_len();
        if m > d {
            continue;
        }
        let slack = d - m;
        for u in &by_target[r.source()] {
            if u.len() > slack {
                continue;
            }
            for v in &by_source[r.target()] {
                if u.len() + v.len() > slack {
                    continue;
                }
                let block = blocks.get_mut(&(u.source, v.target)).expect("block exists");
                let mut vec = vec![field.zero(); block.columns.len()];
                let mut any = false;
                for (c, p) in &r.terms {
                    if u.len() + p.len() + v.len() > d {
                        continue;
                    }
                    let mut arrows = u.arrows.clone();
                    arrows.extend_from_slice(&p.arrows);
                    arrows.extend_from_slice(&v.arrows);
                    let col = block.index[&arrows];
                    vec[col] = &vec[col] + c;
                    any = true;
                }
                if any {
                    block.ideal.insert(&vec);
                }
            }
        }
    }
    blocks
}

impl BoundQuiverAlgebra {
    pub fn new(name: impl Into<String>, field: FieldSpec, quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        Self::with_cap(name, field, quiver, relations, DEFAULT_PATH_CAP)
    }

    /// Builds the algebra, failing with [`Error::InfiniteDimensional`] if no
    /// power `J^d` with `d <= cap` lies in the ideal.
    pub fn with_cap(
        name: impl Into<String>,
        field: FieldSpec,
        quiver: Quiver,
        relations: Vec<Relation>,
        cap: usize,
    ) -> Result<Self> {
        for r in &relations {
            if let Some((_, p)) = r.terms.iter().find(|(_, p)| p.len() < 2) {
                return Err(Error::NotAdmissible(format!(
                    "relation {} has a term `{}` of length {}",
                    r.display(&quiver),
                    quiver.path_label(p),
                    p.len()
                )));
            }
        }
        let mut prev = ideal_blocks(&quiver, &relations, field, 0);
        let mut loewy = None;
        for d in 1..=cap {
            let cur = ideal_blocks(&quiver, &relations, field, d);
            let all_in = cur.values().all(|b| {
                b.columns.iter().enumerate().all(|(i, p)| {
                    if p.len() != d {
                        return true;
                    }
                    let mut e = vec![field.zero(); b.columns.len()];
                    e[i] = field.one();
                    b.ideal.contains(&e)
                })
            });
            if all_in {
                loewy = Some(d);
                break;
            }
            prev = cur;
        }
        let loewy = loewy.ok_or(Error::InfiniteDimensional(cap))?;

        let mut basis = Vec::new();
        let mut normal_forms_raw: Vec<(Path, Vec<(Path, Scalar)>)> = Vec::new();
        for b in prev.values() {
            let mut is_pivot = vec![false; b.columns.len()];
            for (p, _) in b.ideal.pivot_rows() {
                is_pivot[*p] = true;
            }
            for (i, p) in b.columns.iter().enumerate() {
                if !is_pivot[i] {
                    basis.push(p.clone());
                }
            }
            for (p, row) in b.ideal.pivot_rows() {
                let nf = row
                    .iter()
                    .enumerate()
                    .filter(|(c, x)| *c != *p && !x.is_zero())
                    .map(|(c, x)| (b.columns[c].clone(), -x))
                    .collect();
                normal_forms_raw.push((b.columns[*p].clone(), nf));
            }
        }
        basis.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then(a.source.cmp(&b.source))
                .then(a.target.cmp(&b.target))
                .then(a.arrows.cmp(&b.arrows))
        });
        let basis_index: HashMap<Path, usize> = basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let normal_forms = normal_forms_raw
            .into_iter()
            .map(|(p, nf)| {
                let mut s: Sparse = nf.into_iter().map(|(q, c)| (basis_index[&q], c)).collect();
                s.sort_by_key(|(i, _)| *i);
                (p, s)
            })
            .collect();

        let mut alg = BoundQuiverAlgebra {
            name: name.into(),
            field,
            quiver,
            relations,
            basis,
            basis_index,
            normal_forms,
            loewy,
            mult: HashMap::new(),
        };
        alg.build_mult();
        Ok(alg)
    }

    fn build_mult(&mut self) {
        let n = self.quiver.vertex_count();
        let mut from: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, p) in self.basis.iter().enumerate() {
            from[p.source].push(i);
        }
        let mut mult = HashMap::new();
        for (i, p) in self.basis.iter().enumerate() {
            for &j in &from[p.target] {
                let w = p.concat(&self.basis[j]).expect("composable");
                let r = self.reduce_path(&w);
                if !r.is_empty() {
                    mult.insert((i, j), r);
                }
            }
        }
        self.mult = mult;
    }

    /// Coordinates of a path in the basis.
    pub fn reduce_path(&self, p: &Path) -> Sparse {
        if p.len() >= self.loewy {
            return Vec::new();
        }
        if let Some(&i) = self.basis_index.get(p) {
            return vec![(i, self.field.one())];
        }
        self.normal_forms.get(p).cloned().unwrap_or_default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.quiver.vertices[v].label
    }

    pub fn basis_label(&self, i: usize) -> String {
        self.quiver.path_label(&self.basis[i])
    }

    /// Product of basis elements `i` and `j` (`i` then `j`).
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.mult.get(&(i, j)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn element_of_path(&self, p: &Path) -> Vec<Scalar> {
        let mut v = self.zero_element();
        for (i, c) in self.reduce_path(p) {
            v[i] = c;
        }
        v
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_element();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Index of the trivial path at `v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.basis_index[&Path::trivial(v)]
    }

    /// Basis indices of the paths from `s` to `t`, i.e. a basis of `e_s A e_t`.
    pub fn block(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == s && self.basis[i].target == t)
            .collect()
    }

    /// `C[i][j]` is the number of basis paths from `j` to `i`, which is the
    /// dimension of the indecomposable projective at `j` at vertex `i`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut c = vec![vec![0; n]; n];
        for p in &self.basis {
            c[p.target][p.source] += 1;
        }
        c
    }

    pub fn opposite(&self) -> Result<BoundQuiverAlgebra> {
        BoundQuiverAlgebra::new(
            format!("{}^op", self.name),
            self.field,
            self.quiver.opposite(),
            self.relations.iter().map(Relation::reversed).collect(),
        )
    }

    /// Checks that every defining relation reduces to zero.
    pub fn relations_vanish(&self) -> bool {
        self.relations.iter().all(|r| {
            let mut v = self.zero_element();
            for (c, p) in &r.terms {
                for (i, x) in self.reduce_path(p) {
                    v[i] = &v[i] + &(c * &x);
                }
            }
            v.iter().all(Scalar::is_zero)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear(n: usize, zero_rel: bool) -> BoundQuiverAlgebra {
        let f = FieldSpec::Rationals;
        let mut q = Quiver::new();
        for i in 1..=n {
            q.add_vertex(i as i64, i.to_string()).unwrap();
        }
        for i in 1..n {
            q.add_arrow(format!("a{i}"), i, i - 1).unwrap();
        }
        let mut rels = Vec::new();
        if zero_rel && n >= 3 {
            let p = Path::from_arrows(&q, vec![1, 0]).unwrap();
            rels.push(Relation::new(vec![(f.one(), p)]).unwrap());
        }
        BoundQuiverAlgebra::new("A", f, q, rels).unwrap()
    }

    #[test]
    fn linear_a3_dimensions() {
        assert_eq!(linear(3, false).dim(), 6);
        let a = linear(3, true);
        assert_eq!(a.dim(), 5);
        assert_eq!(a.loewy_length(), 2);
        assert!(a.relations_vanish());
    }

    #[test]
    fn commutative_square_identifies_paths() {
        let f = FieldSpec::Rationals;
        let mut q = Quiver::new();
        for i in 1..=4 {
            q.add_vertex(i, i.to_string()).unwrap();
        }
        let a = q.add_arrow("a", 3, 1).unwrap();
        let b = q.add_arrow("b", 1, 0).unwrap();
        let c = q.add_arrow("c", 3, 2).unwrap();
        let d = q.add_arrow("d", 2, 0).unwrap();
        let r = Relation::new(vec![
            (f.one(), Path::from_arrows(&q, vec![a, b]).unwrap()),
            (f.from_i64(-1), Path::from_arrows(&q, vec![c, d]).unwrap()),
        ])
        .unwrap();
        let alg = BoundQuiverAlgebra::new("sq", f, q, vec![r]).unwrap();
        assert_eq!(alg.dim(), 4 + 4 + 1);
        let ab = alg.element_of_path(&Path::from_arrows(&alg.quiver, vec![a, b]).unwrap());
        let cd = alg.element_of_path(&Path::from_arrows(&alg.quiver, vec![c, d]).unwrap());
        assert_eq!(ab, cd);
        let x = alg.element_of_path(&Path::arrow(&alg.quiver, a));
        let y = alg.element_of_path(&Path::arrow(&alg.quiver, b));
        assert_eq!(alg.mul(&x, &y), ab);
        assert_eq!(alg.cartan_matrix()[0][3], 1);
    }

    #[test]
    fn loop_without_relations_is_infinite() {
        let f = FieldSpec::Rationals;
        let mut q = Quiver::new();
        q.add_vertex(1, "1").unwrap();
        q.add_arrow("x", 0, 0).unwrap();
        let e = BoundQuiverAlgebra::with_cap("l", f, q, vec![], 8).unwrap_err();
        assert!(matches!(e, Error::InfiniteDimensional(8)));
    }

    #[test]
    fn short_relation_rejected() {
        let f = FieldSpec::Rationals;
        let mut q = Quiver::new();
        q.add_vertex(1, "1").unwrap();
        q.add_vertex(2, "2").unwrap();
        let a = q.add_arrow("a", 1, 0).unwrap();
        let r = Relation::new(vec![(f.one(), Path::arrow(&q, a))]).unwrap();
        let e = BoundQuiverAlgebra::new("x", f, q, vec![r]).unwrap_err();
        assert!(matches!(e, Error::NotAdmissible(_)));
    }

    #[test]
    fn loop_with_square_zero() {
        let f = FieldSpec::Rationals;
        let mut q = Quiver::new();
        q.add_vertex(1, "1").unwrap();
        let x = q.add_arrow("x", 0, 0).unwrap();
        let r = Relation::new(vec![(f.one(), Path::from_arrows(&q, vec![x, x]).unwrap())]).unwrap();
        let alg = BoundQuiverAlgebra::new("d", f, q, vec![r]).unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(alg.cartan_matrix(), vec![vec![2]]);
    }

    #[test]
    fn opposite_transposes_cartan() {
        let a = linear(4, true);
        let o = a.opposite().unwrap();
        let c = a.cartan_matrix();
        let co = o.cartan_matrix();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(c[i][j], co[j][i]);
            }
        }
    }
}
