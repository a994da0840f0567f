//! Krull-Schmidt decomposition by Fitting splitting, with a locality
//! certificate for every summand, and isomorphism tests between
//! indecomposables.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{column_basis, kernel_matrix, Echelon, Mat};
use crate::module::{hom_space, submodule, Morphism, Representation};
use crate::scalar::{FieldSpec, Scalar};

/// One indecomposable summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

/// Isoclasses with multiplicities, in order of first appearance.
pub fn decompose(alg: &BoundQuiverAlgebra, m: &Representation, seed: u64) -> Result<Vec<(Representation, usize)>> {
    let parts = decompose_full(alg, m, seed)?;
    Ok(group_isoclasses(alg, parts.into_iter().map(|s| s.module).collect()))
}

pub fn group_isoclasses(alg: &BoundQuiverAlgebra, mods: Vec<Representation>) -> Vec<(Representation, usize)> {
    let mut out: Vec<(Representation, usize)> = Vec::new();
    for x in mods {
        match out.iter_mut().find(|(y, _)| isomorphic_indecomposables(alg, &x, y)) {
            Some(e) => e.1 += 1,
            None => out.push((x, 1)),
        }
    }
    out
}

/// Splits `m` into indecomposable summands.
pub fn decompose_full(alg: &BoundQuiverAlgebra, m: &Representation, seed: u64) -> Result<Vec<Summand>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    split_rec(alg, m, Morphism::identity(m), Morphism::identity(m), &mut rng, &mut out)?;
    Ok(out)
}

fn split_rec(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
    inc: Morphism,
    proj: Morphism,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Summand>,
) -> Result<()> {
    let end = hom_space(alg, m, m);
    if end.len() == 1 {
        out.push(Summand {
            module: m.clone(),
            inclusion: inc,
            projection: proj,
        });
        return Ok(());
    }
    match find_fitting_element(m, &end, rng) {
        Some(phi) => {
            let (parts, incs, projs) = fitting_split(alg, m, &phi);
            for ((x, i), p) in parts.into_iter().zip(incs).zip(projs) {
                split_rec(alg, &x, i.then(&inc), proj.then(&p), rng, out)?;
            }
            Ok(())
        }
        None => {
            if local_certificate(m, &end).is_some() {
                out.push(Summand {
                    module: m.clone(),
                    inclusion: inc,
                    projection: proj,
                });
                Ok(())
            } else {
                Err(Error::NonSplit(format!(
                    "no idempotent found in a {}-dimensional endomorphism ring of a module of dimension {:?}",
                    end.len(),
                    m.dims
                )))
            }
        }
    }
}

fn is_fitting(phi: &Morphism) -> bool {
    !phi.is_invertible() && !phi.is_nilpotent()
}

fn shift(m: &Representation, phi: &Morphism, lambda: &Scalar) -> Morphism {
    phi.add(&Morphism::identity(m).scale(&-lambda))
}

/// Searches for an endomorphism that is neither nilpotent nor invertible.
fn find_fitting_element(m: &Representation, end: &[Morphism], rng: &mut ChaCha8Rng) -> Option<Morphism> {
    let f = m.field;
    let cap = end.len().min(24);
    for b in end {
        if is_fitting(b) {
            return Some(b.clone());
        }
    }
    let shifts: Vec<Scalar> = [1, -1, 2, -2, 3, -3].iter().map(|&x| f.from_i64(x)).collect();
    for b in end.iter().take(cap) {
        for l in &shifts {
            let c = shift(m, b, l);
            if is_fitting(&c) {
                return Some(c);
            }
        }
    }
    for i in 0..cap {
        for j in (i + 1)..cap {
            for s in [f.one(), f.from_i64(-1)] {
                let c = end[i].add(&end[j].scale(&s));
                if is_fitting(&c) {
                    return Some(c);
                }
            }
        }
    }
    let nilpotent: Vec<&Morphism> = end
        .iter()
        .filter(|b| b.is_nilpotent() && !b.is_zero())
        .take(cap)
        .collect();
    for a in &nilpotent {
        for b in end.iter().take(cap) {
            for c in [a.then(b), b.then(a)] {
                if is_fitting(&c) {
                    return Some(c);
                }
            }
        }
    }
    for _ in 0..64 {
        let mut r = Morphism::zero(m, m);
        for b in end {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                r = r.add(&b.scale(&f.from_i64(c)));
            }
        }
        if is_fitting(&r) {
            return Some(r);
        }
        for a in &nilpotent {
            let c = r.then(a);
            if is_fitting(&c) {
                return Some(c);
            }
        }
        for l in &shifts {
            let c = shift(m, &r, l);
            if is_fitting(&c) {
                return Some(c);
            }
        }
    }
    None
}

/// `M = Im φ^N ⊕ Ker φ^N` for `N = dim M`.
fn fitting_split(
    alg: &BoundQuiverAlgebra,
    m: &Representation,
    phi: &Morphism,
) -> (Vec<Representation>, Vec<Morphism>, Vec<Morphism>) {
    let n = m.total_dim().max(1);
    let powered: Vec<Mat> = phi.maps.iter().map(|a| a.pow(n)).collect();
    let ims: Vec<Mat> = powered.iter().map(column_basis).collect();
    let kers: Vec<Mat> = powered.iter().map(kernel_matrix).collect();
    let mut proj_im = Vec::new();
    let mut proj_ker = Vec::new();
    for v in 0..m.dims.len() {
        let full = ims[v].hstack(&kers[v]);
        let inv = full.inverse().expect("Fitting decomposition is direct");
        proj_im.push(inv.block(0, 0, ims[v].cols, m.dims[v]));
        proj_ker.push(inv.block(ims[v].cols, 0, kers[v].cols, m.dims[v]));
    }
    let a = submodule(alg, m, ims);
    let b = submodule(alg, m, kers);
    (
        vec![a.module, b.module],
        vec![a.inclusion, b.inclusion],
        vec![Morphism { maps: proj_im }, Morphism { maps: proj_ker }],
    )
}

/// A vertex whose dimension is invertible in the field, used to read off
/// the scalar part of an endomorphism of a local module.
fn trace_vertex(m: &Representation) -> Option<usize> {
    let p = m.field.characteristic();
    (0..m.dims.len()).find(|&v| m.dims[v] > 0 && (p == 0 || !(m.dims[v] as u64).is_multiple_of(p)))
}

/// Scalar `λ` with `φ - λ·1` in the radical, assuming `End(M)` is local.
pub fn residue(m: &Representation, phi: &Morphism) -> Option<Scalar> {
    let v = trace_vertex(m)?;
    let d = m.field.from_i64(m.dims[v] as i64);
    Some(&phi.maps[v].trace() / &d)
}

/// Certifies `End(M) = k·1 ⊕ N` with `N` a nilpotent ideal, returning the
/// residue of each basis element.
pub fn local_certificate(m: &Representation, end: &[Morphism]) -> Option<Vec<Scalar>> {
    if m.is_zero() || end.is_empty() {
        return None;
    }
    let lambdas: Vec<Scalar> = end.iter().map(|b| residue(m, b)).collect::<Option<_>>()?;
    let rad: Vec<Morphism> = end.iter().zip(&lambdas).map(|(b, l)| shift(m, b, l)).collect();
    let f = m.field;
    let width = rad[0].flatten().len();
    let mut span = Echelon::new(f, width);
    let mut basis = Vec::new();
    for r in &rad {
        if span.insert(&r.flatten()) {
            basis.push(r.clone());
        }
    }
    if basis.len() + 1 != end.len() {
        return None;
    }
    // Closed under products and nilpotent: powers of the span reach zero.
    for x in &basis {
        for y in &basis {
            if !span.contains(&x.then(y).flatten()) {
                return None;
            }
        }
    }
    let mut power = basis.clone();
    for _ in 0..=m.total_dim() {
        if power.is_empty() {
            return Some(lambdas);
        }
        let mut ech = Echelon::new(f, width);
        let mut next = Vec::new();
        for x in &power {
            for y in &basis {
                let p = x.then(y);
                if ech.insert(&p.flatten()) {
                    next.push(p);
                }
            }
        }
        if next.len() == power.len() {
            return None;
        }
        power = next;
    }
    None
}

pub fn is_indecomposable(alg: &BoundQuiverAlgebra, m: &Representation) -> bool {
    let end = hom_space(alg, m, m);
    end.len() == 1 && !m.is_zero() || local_certificate(m, &end).is_some()
}

/// For indecomposable `x`, `y`: isomorphic iff some `g∘f` is invertible.
pub fn isomorphic_indecomposables(alg: &BoundQuiverAlgebra, x: &Representation, y: &Representation) -> bool {
    if x.dims != y.dims {
        return false;
    }
    let fs = hom_space(alg, x, y);
    if fs.is_empty() {
        return false;
    }
    let gs = hom_space(alg, y, x);
    fs.iter().any(|f| gs.iter().any(|g| f.then(g).is_invertible()))
}

/// Multiplicity of the indecomposable `y` as a summand of `k`: the rank of
/// the pairing `Hom(Y,K) x Hom(K,Y) -> End(Y)/rad = k`.
pub fn multiplicity(alg: &BoundQuiverAlgebra, y: &Representation, k: &Representation) -> Result<usize> {
    let into = hom_space(alg, y, k);
    if into.is_empty() {
        return Ok(0);
    }
    let back = hom_space(alg, k, y);
    if back.is_empty() {
        return Ok(0);
    }
    // The residue of `f ∘ g` is a multiple of `tr(g_v f_v)`; the rank does
    // not see the scale.
    let v = trace_vertex(y).ok_or_else(|| Error::NonSplit("no usable trace vertex".into()))?;
    let rows: Vec<Vec<Scalar>> = back
        .iter()
        .map(|g| into.iter().map(|f| trace_of_product(&g.maps[v], &f.maps[v])).collect())
        .collect();
    Ok(Mat::from_rows(y.field, rows).rank())
}

/// `tr(a b)` without forming the product.
fn trace_of_product(a: &Mat, b: &Mat) -> Scalar {
    let mut t = a.field.zero();
    for r in 0..a.rows {
        for c in 0..a.cols {
            let x = &a[(r, c)];
            if !x.is_zero() {
                let y = &b[(c, r)];
                if !y.is_zero() {
                    t = &t + &(x * y);
                }
            }
        }
    }
    t
}

/// Random per-vertex change of basis (for invariance tests).
pub fn random_base_change(alg: &BoundQuiverAlgebra, m: &Representation, seed: u64) -> Representation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g: Vec<Mat> = m
        .dims
        .iter()
        .map(|&d| random_invertible(m.field, d, &mut rng))
        .collect();
    m.change_basis(alg, &g)
}

pub fn random_invertible(f: FieldSpec, d: usize, rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..d)
            .map(|_| (0..d).map(|_| f.from_i64(rng.gen_range(-2..=2))).collect())
            .collect();
        let m = Mat::from_rows(f, rows);
        if d == 0 || m.is_invertible() {
            return if d == 0 { Mat::zeros(f, 0, 0) } else { m };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_bqa;

    fn a3() -> BoundQuiverAlgebra {
        parse_bqa("vertex 1 1\nvertex 2 2\nvertex 3 3\narrow a: 2 -> 1\narrow b: 3 -> 2\n").unwrap()
    }

    #[test]
    fn projective_squared() {
        let a = a3();
        let p = Representation::projective(&a, 2);
        let m = Representation::direct_sum(&a, &[&p, &p]);
        let m = random_base_change(&a, &m, 7);
        let d = decompose(&a, &m, 0).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert_eq!(d[0].0.dims, vec![1, 1, 1]);
    }

    #[test]
    fn regular_module_splits_into_projectives() {
        let a = a3();
        let m = random_base_change(&a, &Representation::regular(&a), 3);
        let d = decompose(&a, &m, 0).unwrap();
        let mut dims: Vec<_> = d.iter().map(|(x, k)| (x.dims.clone(), *k)).collect();
        dims.sort();
        assert_eq!(dims, vec![(vec![1, 0, 0], 1), (vec![1, 1, 0], 1), (vec![1, 1, 1], 1)]);
    }

    #[test]
    fn summands_are_split() {
        let a = a3();
        let m = random_base_change(&a, &Representation::dual_regular(&a), 11);
        for s in decompose_full(&a, &m, 1).unwrap() {
            assert!(s.inclusion.is_homomorphism(&a, &s.module, &m));
            assert!(s.projection.is_homomorphism(&a, &m, &s.module));
            assert_eq!(s.inclusion.then(&s.projection), Morphism::identity(&s.module));
        }
    }

    #[test]
    fn multiplicity_by_pairing() {
        let a = a3();
        let p = Representation::projective(&a, 1);
        let s = Representation::simple(&a, 1);
        let m = Representation::direct_sum(&a, &[&p, &s, &p]);
        let m = random_base_change(&a, &m, 5);
        assert_eq!(multiplicity(&a, &p, &m).unwrap(), 2);
        assert_eq!(multiplicity(&a, &s, &m).unwrap(), 1);
        assert_eq!(multiplicity(&a, &Representation::simple(&a, 0), &m).unwrap(), 0);
    }
}
