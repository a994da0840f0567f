//! Right modules as quiver representations, module morphisms, Hom spaces,
//! submodules and quotients, duality and transport between algebras.
//!
//! An arrow `a: x -> y` acts as a `dims[y] x dims[x]` matrix whose columns
//! are coordinates of `M_x`. The matrix of a path `a1.a2...ak` is
//! `M(ak)...M(a1)`.

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{column_basis, complement_columns, kernel_basis, kernel_matrix, solve_linear, Echelon, Mat};
use crate::quiver::Path;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    /// One matrix per arrow, in the quiver's arrow order.
    pub maps: Vec<Mat>,
}

/// A family of linear maps `f_v: M_v -> N_v` commuting with the arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub maps: Vec<Mat>,
}

/// A submodule together with its inclusion.
#[derive(Clone, Debug)]
pub struct Sub {
    pub module: Representation,
    pub inclusion: Morphism,
}

impl Representation {
    /// Validates shapes and relations.
    pub fn new(alg: &BoundQuiverAlgebra, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        let q = &alg.quiver;
        if dims.len() != q.vertex_count() || maps.len() != q.arrows.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} vertices and {} arrows",
                q.vertex_count(),
                q.arrows.len()
            )));
        }
        for (i, a) in q.arrows.iter().enumerate() {
            if maps[i].rows != dims[a.target] || maps[i].cols != dims[a.source] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.label, dims[a.target], dims[a.source], maps[i].rows, maps[i].cols
                )));
            }
        }
        let m = Representation {
            field: alg.field,
            dims,
            maps,
        };
        m.check_relations(alg)?;
        Ok(m)
    }

    pub fn zero(alg: &BoundQuiverAlgebra) -> Self {
        let q = &alg.quiver;
        Representation {
            field: alg.field,
            dims: vec![0; q.vertex_count()],
            maps: vec![Mat::zeros(alg.field, 0, 0); q.arrows.len()],
        }
    }

    pub fn simple(alg: &BoundQuiverAlgebra, x: usize) -> Self {
        let mut dims = vec![0; alg.vertex_count()];
        dims[x] = 1;
        Self::with_zero_maps(alg, dims)
    }

    fn with_zero_maps(alg: &BoundQuiverAlgebra, dims: Vec<usize>) -> Self {
        let maps = alg
            .quiver
            .arrows
            .iter()
            .map(|a| Mat::zeros(alg.field, dims[a.target], dims[a.source]))
            .collect();
        Representation {
            field: alg.field,
            dims,
            maps,
        }
    }

    /// `P(x) = e_x A`, with basis at `v` the basis paths from `x` to `v`.
    pub fn projective(alg: &BoundQuiverAlgebra, x: usize) -> Self {
        let n = alg.vertex_count();
        let blocks: Vec<Vec<usize>> = (0..n).map(|v| alg.block(x, v)).collect();
        let dims: Vec<usize> = blocks.iter().map(Vec::len).collect();
        let maps = alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arrow = alg.reduce_path(&Path::arrow(&alg.quiver, ai));
                let mut m = Mat::zeros(alg.field, dims[a.target], dims[a.source]);
                for (c, &p) in blocks[a.source].iter().enumerate() {
                    for (ai_idx, ac) in &arrow {
                        for (k, v) in alg.mul_basis(p, *ai_idx) {
                            let r = blocks[a.target].iter().position(|b| b == k).expect("block");
                            m[(r, c)] = &m[(r, c)] + &(ac * v);
                        }
                    }
                }
                m
            })
            .collect();
        Representation {
            field: alg.field,
            dims,
            maps,
        }
    }

    /// `I(x) = D(A e_x)`, with basis at `v` dual to the basis paths `v -> x`.
    pub fn injective(alg: &BoundQuiverAlgebra, x: usize) -> Self {
        let n = alg.vertex_count();
        let blocks: Vec<Vec<usize>> = (0..n).map(|v| alg.block(v, x)).collect();
        let dims: Vec<usize> = blocks.iter().map(Vec::len).collect();
        let maps = alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arrow = alg.reduce_path(&Path::arrow(&alg.quiver, ai));
                // (p* . a)(b) = p*(a b) for b: target(a) -> x.
                let mut m = Mat::zeros(alg.field, dims[a.target], dims[a.source]);
                for (r, &b) in blocks[a.target].iter().enumerate() {
                    for (ai_idx, ac) in &arrow {
                        for (k, v) in alg.mul_basis(*ai_idx, b) {
                            let c = blocks[a.source].iter().position(|p| p == k).expect("block");
                            m[(r, c)] = &m[(r, c)] + &(ac * v);
                        }
                    }
                }
                m
            })
            .collect();
        Representation {
            field: alg.field,
            dims,
            maps,
        }
    }

    /// The regular module `A_A`, the sum of all indecomposable projectives.
    pub fn regular(alg: &BoundQuiverAlgebra) -> Self {
        let parts: Vec<_> = (0..alg.vertex_count()).map(|x| Self::projective(alg, x)).collect();
        Self::direct_sum(alg, &parts.iter().collect::<Vec<_>>())
    }

    /// `D(A)`, the sum of all indecomposable injectives.
    pub fn dual_regular(alg: &BoundQuiverAlgebra) -> Self {
        let parts: Vec<_> = (0..alg.vertex_count()).map(|x| Self::injective(alg, x)).collect();
        Self::direct_sum(alg, &parts.iter().collect::<Vec<_>>())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn path_matrix(&self, _alg: &BoundQuiverAlgebra, p: &Path) -> Mat {
        let mut m = Mat::identity(self.field, self.dims[p.source]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action matrices of every basis element of `alg`.
    pub fn basis_actions(&self, alg: &BoundQuiverAlgebra) -> Vec<Mat> {
        alg.basis().iter().map(|p| self.path_matrix(alg, p)).collect()
    }

    /// Matrix `M_x -> M_y` of the part of `elem` lying in `e_x A e_y`.
    pub fn block_action(&self, alg: &BoundQuiverAlgebra, x: usize, y: usize, elem: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dims[y], self.dims[x]);
        for i in alg.block(x, y) {
            if !elem[i].is_zero() {
                m = m.add(&self.path_matrix(alg, &alg.basis()[i]).scale(&elem[i]));
            }
        }
        m
    }

    pub fn check_relations(&self, alg: &BoundQuiverAlgebra) -> Result<()> {
        for r in &alg.relations {
            let mut acc = Mat::zeros(self.field, self.dims[r.target()], self.dims[r.source()]);
            for (c, p) in &r.terms {
                acc = acc.add(&self.path_matrix(alg, p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(r.display(&alg.quiver)));
            }
        }
        Ok(())
    }

    pub fn direct_sum(alg: &BoundQuiverAlgebra, parts: &[&Representation]) -> Representation {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..alg.quiver.arrows.len())
            .map(|a| {
                let mut m = Mat::zeros(alg.field, 0, 0);
                for p in parts {
                    m = m.block_diag(&p.maps[a]);
                }
                m
            })
            .collect();
        Representation {
            field: alg.field,
            dims,
            maps,
        }
    }

    /// Transports the module along per-vertex isomorphisms `g_v`.
    pub fn change_basis(&self, alg: &BoundQuiverAlgebra, g: &[Mat]) -> Representation {
        let inv: Vec<Mat> = g.iter().map(|m| m.inverse().expect("invertible base change")).collect();
        let maps = alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| g[a.target].mul(&self.maps[i]).mul(&inv[a.source]))
            .collect();
        Representation {
            field: self.field,
            dims: self.dims.clone(),
            maps,
        }
    }
}

impl Morphism {
    pub fn zero(m: &Representation, n: &Representation) -> Morphism {
        Morphism {
            maps: m
                .dims
                .iter()
                .zip(&n.dims)
                .map(|(&a, &b)| Mat::zeros(m.field, b, a))
                .collect(),
        }
    }

    pub fn identity(m: &Representation) -> Morphism {
        Morphism {
            maps: m.dims.iter().map(|&d| Mat::identity(m.field, d)).collect(),
        }
    }

    /// `g` after `self`.
    pub fn then(&self, g: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&g.maps).map(|(f, g)| g.mul(f)).collect(),
        }
    }

    pub fn add(&self, o: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&o.maps).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        Morphism {
            maps: self.maps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Mat::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Mat::rank).sum()
    }

    pub fn is_invertible(&self) -> bool {
        self.maps.iter().all(Mat::is_invertible)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.maps.iter().all(Mat::is_nilpotent)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols)
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows)
    }

    pub fn trace(&self, field: FieldSpec) -> Scalar {
        self.maps.iter().fold(field.zero(), |acc, m| &acc + &m.trace())
    }

    /// Checks `f_y M(a) = N(a) f_x` for every arrow.
    pub fn is_homomorphism(&self, alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> bool {
        alg.quiver
            .arrows
            .iter()
            .enumerate()
            .all(|(i, a)| self.maps[a.target].mul(&m.maps[i]) == n.maps[i].mul(&self.maps[a.source]))
    }

    /// Entries of all vertex maps, concatenated.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps.iter().flat_map(|m| m.entries().to_vec()).collect()
    }
}

/// Submodule spanned at each vertex by the columns of `spaces[v]`, which
/// must be linearly independent and closed under the arrows.
/// Rows of `s` forming an identity block, as kernel bases from reduced
/// echelon forms have.
fn unit_rows(s: &Mat) -> Option<Vec<usize>> {
    (0..s.cols)
        .map(|c| (0..s.rows).find(|&r| s[(r, c)].is_one() && (0..s.cols).all(|k| k == c || s[(r, k)].is_zero())))
        .collect()
}

/// `x` with `s x = img`, for `s` of full column rank.
fn coordinates_in(s: &Mat, img: &Mat) -> Option<Mat> {
    if let Some(rows) = unit_rows(s) {
        let x = img.select_rows(&rows);
        return (s.mul(&x) == *img).then_some(x);
    }
    solve_linear(s, img).expect("shapes agree")
}

pub fn submodule(alg: &BoundQuiverAlgebra, m: &Representation, spaces: Vec<Mat>) -> Sub {
    let dims: Vec<usize> = spaces.iter().map(|s| s.cols).collect();
    let maps = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let img = m.maps[i].mul(&spaces[a.source]);
            coordinates_in(&spaces[a.target], &img).expect("subspace closed under arrows")
        })
        .collect();
    Sub {
        module: Representation {
            field: m.field,
            dims,
            maps,
        },
        inclusion: Morphism { maps: spaces },
    }
}

/// Quotient `M / S` for a closed family of subspaces, with the projection.
pub fn quotient(alg: &BoundQuiverAlgebra, m: &Representation, spaces: &[Mat]) -> (Representation, Morphism) {
    let f = m.field;
    let n = alg.vertex_count();
    let mut comps = Vec::with_capacity(n);
    let mut projs = Vec::with_capacity(n);
    for v in 0..n {
        let c = complement_columns(f, m.dims[v], &spaces[v]);
        let full = spaces[v].hstack(&c);
        let inv = full.inverse().expect("complement completes a basis");
        let k = spaces[v].cols;
        projs.push(inv.block(k, 0, c.cols, m.dims[v]));
        comps.push(c);
    }
    let dims: Vec<usize> = comps.iter().map(|c| c.cols).collect();
    let maps = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| projs[a.target].mul(&m.maps[i]).mul(&comps[a.source]))
        .collect();
    (Representation { field: f, dims, maps }, Morphism { maps: projs })
}

pub fn kernel(alg: &BoundQuiverAlgebra, m: &Representation, f: &Morphism) -> Sub {
    let spaces = f.maps.iter().map(kernel_matrix).collect();
    submodule(alg, m, spaces)
}

pub fn image(alg: &BoundQuiverAlgebra, n: &Representation, f: &Morphism) -> Sub {
    let spaces = f.maps.iter().map(column_basis).collect();
    submodule(alg, n, spaces)
}

pub fn cokernel(alg: &BoundQuiverAlgebra, n: &Representation, f: &Morphism) -> (Representation, Morphism) {
    let spaces: Vec<Mat> = f.maps.iter().map(column_basis).collect();
    quotient(alg, n, &spaces)
}

/// `rad M`: at each vertex, the sum of the images of the incoming arrows.
pub fn radical_spaces(alg: &BoundQuiverAlgebra, m: &Representation) -> Vec<Mat> {
    (0..alg.vertex_count())
        .map(|v| {
            let mut acc = Mat::zeros(m.field, m.dims[v], 0);
            for a in alg.quiver.arrows_in(v) {
                acc = acc.hstack(&m.maps[a]);
            }
            column_basis(&acc)
        })
        .collect()
}

/// `soc M`: at each vertex, the common kernel of the outgoing arrows.
pub fn socle_spaces(alg: &BoundQuiverAlgebra, m: &Representation) -> Vec<Mat> {
    (0..alg.vertex_count())
        .map(|v| {
            let mut acc = Mat::zeros(m.field, 0, m.dims[v]);
            for a in alg.quiver.arrows_out(v) {
                acc = acc.vstack(&m.maps[a]);
            }
            kernel_matrix(&acc)
        })
        .collect()
}

pub fn top_dims(alg: &BoundQuiverAlgebra, m: &Representation) -> Vec<usize> {
    radical_spaces(alg, m)
        .iter()
        .zip(&m.dims)
        .map(|(r, d)| d - r.cols)
        .collect()
}

pub fn socle_dims(alg: &BoundQuiverAlgebra, m: &Representation) -> Vec<usize> {
    socle_spaces(alg, m).iter().map(|s| s.cols).collect()
}

/// Submodule generated by vectors `(vertex, vector)`.
pub fn generated_spaces(alg: &BoundQuiverAlgebra, m: &Representation, gens: &[(usize, Vec<Scalar>)]) -> Vec<Mat> {
    let n = alg.vertex_count();
    let mut cols: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n];
    for (x, g) in gens {
        for i in 0..alg.dim() {
            let p = &alg.basis()[i];
            if p.source == *x {
                cols[p.target].push(m.path_matrix(alg, p).mul_vec(g));
            }
        }
    }
    (0..n)
        .map(|v| column_basis(&Mat::from_columns(m.field, m.dims[v], &cols[v])))
        .collect()
}

/// Generators of `M` lifted from `top M`, and the spanning data they induce.
#[derive(Clone, Debug)]
pub struct Generation {
    /// `(vertex, vector)` per generator.
    pub gens: Vec<(usize, Vec<Scalar>)>,
    /// Per vertex: the spanning columns `(generator, basis index)`, the
    /// matrix of their images in `M_v`, and a selection of columns forming a
    /// basis of `M_v`.
    pub spans: Vec<VertexSpan>,
}

#[derive(Clone, Debug)]
pub struct VertexSpan {
    pub cols: Vec<(usize, usize)>,
    pub images: Mat,
    pub selected: Vec<usize>,
    pub selected_inverse: Mat,
}

pub fn generation(alg: &BoundQuiverAlgebra, m: &Representation) -> Generation {
    let f = m.field;
    let n = alg.vertex_count();
    let rad = radical_spaces(alg, m);
    let mut gens = Vec::new();
    for v in 0..n {
        let c = complement_columns(f, m.dims[v], &rad[v]);
        for j in 0..c.cols {
            gens.push((v, c.column(j)));
        }
    }
    let actions = m.basis_actions(alg);
    let spans = (0..n)
        .map(|v| {
            let mut cols = Vec::new();
            let mut images = Vec::new();
            for (k, (x, g)) in gens.iter().enumerate() {
                for i in alg.block(*x, v) {
                    cols.push((k, i));
                    images.push(actions[i].mul_vec(g));
                }
            }
            let images = Mat::from_columns(f, m.dims[v], &images);
            let selected = crate::linalg::independent_columns(&images);
            debug_assert_eq!(selected.len(), m.dims[v]);
            let selected_inverse = images
                .select_columns(&selected)
                .inverse()
                .expect("top lifts generate the module");
            VertexSpan {
                cols,
                images,
                selected,
                selected_inverse,
            }
        })
        .collect();
    Generation { gens, spans }
}

/// Intertwiner systems up to this many unknowns are solved directly.
const DIRECT_UNKNOWNS: usize = 160;

/// `dim top M` at each vertex, from ranks modulo a prime. Exact ranks are
/// not needed to pick a route.
fn top_dims_estimate(alg: &BoundQuiverAlgebra, m: &Representation) -> Vec<usize> {
    (0..alg.vertex_count())
        .map(|v| {
            let mut acc = Mat::zeros(m.field, m.dims[v], 0);
            for a in alg.quiver.arrows_in(v) {
                acc = acc.hstack(&m.maps[a]);
            }
            let rank = match m.field {
                FieldSpec::Rationals => crate::modular::rank_mod_mat(&acc).unwrap_or_else(|| acc.rank()),
                _ => acc.rank(),
            };
            m.dims[v] - rank
        })
        .collect()
}

/// Basis of `Hom_A(M, N)`.
/// Uses whichever of the intertwiner and generator systems has fewer unknowns.
pub fn hom_space(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> Vec<Morphism> {
    let direct: usize = m.dims.iter().zip(&n.dims).map(|(a, b)| a * b).sum();
    if direct <= DIRECT_UNKNOWNS {
        return intertwiners(alg, m, n);
    }
    let via_gens: usize = top_dims_estimate(alg, m).iter().zip(&n.dims).map(|(t, d)| t * d).sum();
    if via_gens < direct {
        hom_space_via_generators(alg, m, n)
    } else {
        intertwiners(alg, m, n)
    }
}

/// Basis of `Hom_A(M, N)` as the solutions of `N_a f_s = f_t M_a` for every
/// arrow `a: s -> t`. The system has the arrow matrices as coefficients,
/// which keeps it sparse and integral for integral modules.
pub fn intertwiners(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> Vec<Morphism> {
    let f = m.field;
    let nv = alg.vertex_count();
    let mut offs = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offs.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    if unknowns == 0 {
        return Vec::new();
    }
    // f_v[r][c] is unknown offs[v] + r * m.dims[v] + c.
    let var = |v: usize, r: usize, c: usize| offs[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (k, a) in alg.quiver.arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (&m.maps[k], &n.maps[k]);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![f.zero(); unknowns];
                for j in 0..n.dims[s] {
                    if !na[(r, j)].is_zero() {
                        let i = var(s, j, c);
                        row[i] = &row[i] + &na[(r, j)];
                    }
                }
                for j in 0..m.dims[t] {
                    if !ma[(j, c)].is_zero() {
                        let i = var(t, r, j);
                        row[i] = &row[i] - &ma[(j, c)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sol = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![f.zero(); unknowns];
                e[i] = f.one();
                e
            })
            .collect()
    } else {
        kernel_basis(&Mat::from_rows(f, rows))
    };
    sol.into_iter()
        .map(|x| Morphism {
            maps: (0..nv)
                .map(|v| {
                    let mut mat = Mat::zeros(f, n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            mat[(r, c)] = x[var(v, r, c)].clone();
                        }
                    }
                    mat
                })
                .collect(),
        })
        .collect()
}

/// Basis of `Hom_A(M, N)` by the generator route: the unknowns are the
/// images of the generators of `M`, constrained by every linear dependency
/// among the spanning vectors of `M`.
pub fn hom_space_via_generators(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> Vec<Morphism> {
    let g = generation(alg, m);
    hom_space_with(alg, &g, m, n)
}

pub fn hom_space_with(
    alg: &BoundQuiverAlgebra,
    g: &Generation,
    m: &Representation,
    n: &Representation,
) -> Vec<Morphism> {
    let f = m.field;
    let nv = alg.vertex_count();
    let mut offs = Vec::with_capacity(g.gens.len());
    let mut unknowns = 0;
    for (x, _) in &g.gens {
        offs.push(unknowns);
        unknowns += n.dims[*x];
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let n_actions = n.basis_actions(alg);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for v in 0..nv {
        let span = &g.spans[v];
        if n.dims[v] == 0 {
            continue;
        }
        let coords = span.selected_inverse.mul(&span.images);
        let mut is_sel = vec![false; span.cols.len()];
        for &s in &span.selected {
            is_sel[s] = true;
        }
        for c in 0..span.cols.len() {
            if is_sel[c] {
                continue;
            }
            let mut block = vec![vec![f.zero(); unknowns]; n.dims[v]];
            let mut add = |col: usize, coef: &Scalar| {
                let (k, i) = span.cols[col];
                let a = &n_actions[i];
                for r in 0..n.dims[v] {
                    for j in 0..a.cols {
                        if !a[(r, j)].is_zero() {
                            let t = &block[r][offs[k] + j] + &(coef * &a[(r, j)]);
                            block[r][offs[k] + j] = t;
                        }
                    }
                }
            };
            add(c, &f.one());
            for (si, &s) in span.selected.iter().enumerate() {
                let co = &coords[(si, c)];
                if !co.is_zero() {
                    add(s, &-co);
                }
            }
            rows.extend(block);
        }
    }
    let sol = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut e = vec![f.zero(); unknowns];
                e[i] = f.one();
                e
            })
            .collect()
    } else {
        kernel_basis(&Mat::from_rows(f, rows))
    };
    sol.into_iter()
        .map(|x| {
            let maps = (0..nv)
                .map(|v| {
                    let span = &g.spans[v];
                    let cols: Vec<Vec<Scalar>> = span
                        .selected
                        .iter()
                        .map(|&s| {
                            let (k, i) = span.cols[s];
                            let xk = &x[offs[k]..offs[k] + n.dims[g.gens[k].0]];
                            n_actions[i].mul_vec(xk)
                        })
                        .collect();
                    Mat::from_columns(f, n.dims[v], &cols).mul(&span.selected_inverse)
                })
                .collect();
            Morphism { maps }
        })
        .collect()
}

pub fn hom_dim(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> usize {
    hom_space(alg, m, n).len()
}

/// Projective cover `P0 -> M` built on the generators of `M`. `P0` is the
/// direct sum of `P(x_k)` in generator order, with coordinates matching the
/// spanning columns of [`Generation`].
pub fn projective_cover(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
) -> (Representation, Vec<usize>, Morphism, Generation) {
    let g = generation(alg, m);
    let tops: Vec<usize> = g.gens.iter().map(|(x, _)| *x).collect();
    let parts: Vec<Representation> = tops.iter().map(|&x| Representation::projective(alg, x)).collect();
    let p0 = if parts.is_empty() {
        Representation::zero(alg)
    } else {
        Representation::direct_sum(alg, &parts.iter().collect::<Vec<_>>())
    };
    let cover = Morphism {
        maps: g.spans.iter().map(|s| s.images.clone()).collect(),
    };
    (p0, tops, cover, g)
}

/// First syzygy `ker(P0 -> M)` with its embedding into `P0`.
pub fn syzygy(alg: &BoundQuiverAlgebra, m: &Representation) -> (Sub, Representation, Vec<usize>) {
    let (p0, tops, cover, _) = projective_cover(alg, m);
    (kernel(alg, &p0, &cover), p0, tops)
}

/// `dim Ext^1(M, N)` from the long exact sequence of `0 -> ΩM -> P0 -> M -> 0`.
pub fn ext1_dim(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> usize {
    let (omega, _, tops) = syzygy(alg, m);
    let hom_p0: usize = tops.iter().map(|&x| n.dims[x]).sum();
    hom_dim(alg, &omega.module, n) + hom_dim(alg, m, n) - hom_p0
}

/// `D M` as a module over the opposite algebra (arrow order preserved).
pub fn dual_module(m: &Representation) -> Representation {
    Representation {
        field: m.field,
        dims: m.dims.clone(),
        maps: m.maps.iter().map(Mat::transpose).collect(),
    }
}

/// Dual of a morphism `f: M -> N`, giving `D f: D N -> D M`.
pub fn dual_morphism(f: &Morphism) -> Morphism {
    Morphism {
        maps: f.maps.iter().map(Mat::transpose).collect(),
    }
}

/// Moves a module between algebras whose quivers share vertex labels.
/// Vertices missing from `to` must carry zero spaces; vertices and arrows of
/// `to` missing from `from` get zero spaces and zero maps. Arrows are matched
/// by label, or by endpoints when exactly one arrow joins the two vertices
/// on both sides.
pub fn transport(from: &BoundQuiverAlgebra, m: &Representation, to: &BoundQuiverAlgebra) -> Result<Representation> {
    let fq = &from.quiver;
    let tq = &to.quiver;
    let mut dims = vec![0; tq.vertex_count()];
    for (v, vert) in fq.vertices.iter().enumerate() {
        match tq.vertices.iter().position(|w| w.label == vert.label) {
            Some(w) => dims[w] = m.dims[v],
            None if m.dims[v] == 0 => {}
            None => return Err(Error::UnknownVertex(vert.label.clone())),
        }
    }
    let vmap: Vec<Option<usize>> = tq
        .vertices
        .iter()
        .map(|w| fq.vertices.iter().position(|v| v.label == w.label))
        .collect();
    let mut maps = Vec::with_capacity(tq.arrows.len());
    for ta in &tq.arrows {
        let mut mat = Mat::zeros(m.field, dims[ta.target], dims[ta.source]);
        if let (Some(s), Some(t)) = (vmap[ta.source], vmap[ta.target]) {
            let by_label = fq
                .arrows
                .iter()
                .position(|a| a.label == ta.label && a.source == s && a.target == t);
            let parallel: Vec<usize> = (0..fq.arrows.len())
                .filter(|&i| fq.arrows[i].source == s && fq.arrows[i].target == t)
                .collect();
            let t_parallel = tq
                .arrows
                .iter()
                .filter(|b| b.source == ta.source && b.target == ta.target)
                .count();
            let src = by_label.or(if parallel.len() == 1 && t_parallel == 1 {
                Some(parallel[0])
            } else {
                None
            });
            if let Some(i) = src {
                mat = m.maps[i].clone();
            }
        }
        maps.push(mat);
    }
    Representation::new(to, dims, maps)
}

/// Echelon span of flattened morphisms, for membership tests.
pub fn span_of(morphs: &[Morphism], field: FieldSpec) -> Echelon {
    let n = morphs.first().map(|m| m.flatten().len()).unwrap_or(0);
    let mut e = Echelon::new(field, n);
    for m in morphs {
        e.insert(&m.flatten());
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_bqa;

    fn kronecker() -> BoundQuiverAlgebra {
        parse_bqa("vertex 1 1\nvertex 2 2\narrow a: 2 -> 1\narrow b: 2 -> 1\n").unwrap()
    }

    fn a3_rad2() -> BoundQuiverAlgebra {
        parse_bqa("vertex 1 1\nvertex 2 2\nvertex 3 3\narrow a: 2 -> 1\narrow b: 3 -> 2\nrelation b.a = 0\n").unwrap()
    }

    #[test]
    fn structural_dimensions() {
        let a = a3_rad2();
        assert_eq!(Representation::projective(&a, 2).dims, vec![0, 1, 1]);
        assert_eq!(Representation::injective(&a, 0).dims, vec![1, 1, 0]);
        assert_eq!(Representation::simple(&a, 1).dims, vec![0, 1, 0]);
        for x in 0..3 {
            Representation::projective(&a, x).check_relations(&a).unwrap();
            Representation::injective(&a, x).check_relations(&a).unwrap();
        }
    }

    #[test]
    fn yoneda_and_dual_yoneda() {
        let a = kronecker();
        let m = Representation::new(
            &a,
            vec![2, 1],
            vec![
                Mat::from_i64(a.field, &[&[1], &[0]]),
                Mat::from_i64(a.field, &[&[0], &[1]]),
            ],
        )
        .unwrap();
        for x in 0..2 {
            assert_eq!(hom_dim(&a, &Representation::projective(&a, x), &m), m.dims[x]);
            assert_eq!(hom_dim(&a, &m, &Representation::injective(&a, x)), m.dims[x]);
        }
    }

    #[test]
    fn kronecker_ext_between_simples() {
        let a = kronecker();
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        assert_eq!(ext1_dim(&a, &s2, &s1), 2);
        assert_eq!(ext1_dim(&a, &s1, &s2), 0);
        assert_eq!(ext1_dim(&a, &Representation::projective(&a, 1), &s1), 0);
    }

    #[test]
    fn hom_morphisms_intertwine() {
        let a = a3_rad2();
        let p = Representation::regular(&a);
        let i = Representation::dual_regular(&a);
        for f in hom_space(&a, &p, &i) {
            assert!(f.is_homomorphism(&a, &p, &i));
        }
        assert_eq!(hom_dim(&a, &p, &p), a.dim());
    }

    #[test]
    fn quotient_and_kernel_dimensions() {
        let a = a3_rad2();
        let p = Representation::projective(&a, 1);
        let rad = radical_spaces(&a, &p);
        let (top, pi) = quotient(&a, &p, &rad);
        assert_eq!(top.dims, vec![0, 1, 0]);
        let k = kernel(&a, &p, &pi);
        assert_eq!(k.module.dims, vec![1, 0, 0]);
        assert_eq!(socle_dims(&a, &p), vec![1, 0, 0]);
    }
}
