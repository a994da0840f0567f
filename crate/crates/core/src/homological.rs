//! Minimal projective presentations, projective and global dimension, the
//! Nakayama functor and the Auslander-Reiten translate.

use std::fmt;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{cokernel, kernel, projective_cover, Morphism, Representation};

pub const DEFAULT_PD_CAP: usize = 12;

/// `P1 --d--> P0 --cover--> M -> 0`, both covers built from tops.
#[derive(Clone, Debug)]
pub struct ProjectivePresentation {
    pub p0: Representation,
    pub p0_tops: Vec<usize>,
    pub p1: Representation,
    pub p1_tops: Vec<usize>,
    pub d: Morphism,
    pub cover: Morphism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dimension {
    Finite(usize),
    AtLeast(usize),
}

impl Dimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dimension::Finite(n) => Some(n),
            Dimension::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

pub fn min_presentation(alg: &BoundQuiverAlgebra, m: &Representation) -> ProjectivePresentation {
    let (p0, p0_tops, cover, _) = projective_cover(alg, m);
    let k = kernel(alg, &p0, &cover);
    let (p1, p1_tops, cover1, _) = projective_cover(alg, &k.module);
    let d = cover1.then(&k.inclusion);
    ProjectivePresentation {
        p0,
        p0_tops,
        p1,
        p1_tops,
        d,
        cover,
    }
}

/// Projective dimension, or `AtLeast(cap)` once `cap` syzygies are nonzero.
pub fn projective_dimension(alg: &BoundQuiverAlgebra, m: &Representation, cap: usize) -> Dimension {
    let mut cur = m.clone();
    for n in 0..cap {
        if cur.is_zero() {
            return Dimension::Finite(n.saturating_sub(1));
        }
        let (p0, _, cover, _) = projective_cover(alg, &cur);
        let k = kernel(alg, &p0, &cover).module;
        if k.is_zero() {
            return Dimension::Finite(n);
        }
        cur = k;
    }
    Dimension::AtLeast(cap)
}

/// Projective dimension of each simple module.
pub fn simple_pds(alg: &BoundQuiverAlgebra, cap: usize) -> Vec<Dimension> {
    (0..alg.vertex_count())
        .map(|x| projective_dimension(alg, &Representation::simple(alg, x), cap))
        .collect()
}

pub fn global_dimension(alg: &BoundQuiverAlgebra, cap: usize) -> Dimension {
    simple_pds(alg, cap).into_iter().max().unwrap_or(Dimension::Finite(0))
}

/// Offsets of each summand `P(x_j)` at each vertex inside `⊕ P(x_j)`.
fn offsets(alg: &BoundQuiverAlgebra, tops: &[usize]) -> Vec<Vec<usize>> {
    let n = alg.vertex_count();
    let mut acc = vec![0; n];
    tops.iter()
        .map(|&x| {
            let here = acc.clone();
            for (v, a) in acc.iter_mut().enumerate() {
                *a += alg.block(x, v).len();
            }
            here
        })
        .collect()
}

/// Reads a morphism `⊕ P(src_j) -> ⊕ P(dst_i)` as the matrix of elements
/// `a_ij ∈ e_{dst_i} A e_{src_j}`, each in basis-block coordinates.
pub fn projective_matrix(
    alg: &BoundQuiverAlgebra,
    src: &[usize],
    dst: &[usize],
    d: &Morphism,
) -> Vec<Vec<Vec<crate::Scalar>>> {
    let so = offsets(alg, src);
    let dof = offsets(alg, dst);
    dst.iter()
        .enumerate()
        .map(|(i, &y)| {
            src.iter()
                .enumerate()
                .map(|(j, &x)| {
                    let e = alg.idempotent(x);
                    let local = alg.block(x, x).iter().position(|&b| b == e).expect("idempotent");
                    let col = d.maps[x].column(so[j][x] + local);
                    let len = alg.block(y, x).len();
                    col[dof[i][x]..dof[i][x] + len].to_vec()
                })
                .collect()
        })
        .collect()
}

/// `ν` applied to `d: ⊕ P(src_j) -> ⊕ P(dst_i)`, giving `⊕ I(src_j) -> ⊕ I(dst_i)`.
pub fn nakayama_morphism(
    alg: &BoundQuiverAlgebra,
    src: &[usize],
    dst: &[usize],
    d: &Morphism,
) -> (Representation, Representation, Morphism) {
    let f = alg.field;
    let a = projective_matrix(alg, src, dst, d);
    let inj = |tops: &[usize]| {
        let parts: Vec<Representation> = tops.iter().map(|&x| Representation::injective(alg, x)).collect();
        if parts.is_empty() {
            Representation::zero(alg)
        } else {
            Representation::direct_sum(alg, &parts.iter().collect::<Vec<_>>())
        }
    };
    let nsrc = inj(src);
    let ndst = inj(dst);
    let n = alg.vertex_count();
    let mut maps = Vec::with_capacity(n);
    for v in 0..n {
        let mut m = Mat::zeros(f, ndst.dims[v], nsrc.dims[v]);
        let mut r0 = 0;
        for (i, &y) in dst.iter().enumerate() {
            let rows = alg.block(v, y);
            let mut c0 = 0;
            for (j, &x) in src.iter().enumerate() {
                let cols = alg.block(v, x);
                let elem_basis = alg.block(y, x);
                // q* ↦ (b ↦ q*(b a)).
                for (r, &b) in rows.iter().enumerate() {
                    for (k, coef) in elem_basis.iter().zip(&a[i][j]) {
                        if coef.is_zero() {
                            continue;
                        }
                        for (t, c) in alg.mul_basis(b, *k) {
                            if let Some(q) = cols.iter().position(|p| p == t) {
                                m[(r0 + r, c0 + q)] = &m[(r0 + r, c0 + q)] + &(coef * c);
                            }
                        }
                    }
                }
                c0 += cols.len();
            }
            r0 += rows.len();
        }
        maps.push(m);
    }
    (nsrc, ndst, Morphism { maps })
}

/// `ν M = coker(ν P1 -> ν P0)`.
pub fn nakayama(alg: &BoundQuiverAlgebra, m: &Representation) -> Representation {
    let pres = min_presentation(alg, m);
    let (_, ndst, nd) = nakayama_morphism(alg, &pres.p1_tops, &pres.p0_tops, &pres.d);
    cokernel(alg, &ndst, &nd).0
}

/// `τ M = ker(ν P1 -> ν P0)` for a minimal presentation.
pub fn ar_translate(alg: &BoundQuiverAlgebra, m: &Representation) -> Result<Representation> {
    let pres = min_presentation(alg, m);
    if pres.p1_tops.is_empty() {
        return Err(Error::ModuleIsProjective);
    }
    let (nsrc, _, nd) = nakayama_morphism(alg, &pres.p1_tops, &pres.p0_tops, &pres.d);
    Ok(kernel(alg, &nsrc, &nd).module)
}

/// `τ⁻ M = D τ_{A^op} D M`.
pub fn ar_translate_inverse(alg: &BoundQuiverAlgebra, m: &Representation) -> Result<Representation> {
    let op = alg.opposite()?;
    let dm = crate::module::dual_module(m);
    let t = ar_translate(&op, &dm).map_err(|e| match e {
        Error::ModuleIsProjective => Error::InvalidInput("module is injective".into()),
        other => other,
    })?;
    Ok(crate::module::dual_module(&t))
}
