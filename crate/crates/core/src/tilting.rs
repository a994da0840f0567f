//! Tilting modules: rigid generic modules, the tilting certificate,
//! presentations of endomorphism algebras and the functor `Hom_A(T, -)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::BoundQuiverAlgebra;
use crate::decompose::{decompose, isomorphic_indecomposables};
use crate::error::{Error, Result};
use crate::homological::{ar_translate, projective_dimension, Dimension};
use crate::linalg::{Coordinates, Mat};
use crate::module::{ext1_dim, hom_dim, hom_space, Morphism, Representation};
use crate::sca::{present_sca, Presentation, StructureConstantAlgebra};
use crate::scalar::Scalar;

/// A module with the given dimension vector over a relation-free algebra,
/// with random integer arrow matrices, certified `End = k` and
/// `Ext¹(X, X) = 0`. Tries seeds `seed, seed + 1, ...`.
pub fn generic_rigid_module(
    alg: &BoundQuiverAlgebra,
    dims: &[usize],
    seed: u64,
    tries: usize,
) -> Result<(Representation, u64)> {
    if !alg.relations.is_empty() {
        return Err(Error::InvalidInput(
            "generic modules need a relation-free algebra".into(),
        ));
    }
    let f = alg.field;
    for s in seed..seed + tries as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let maps = alg
            .quiver
            .arrows
            .iter()
            .map(|a| {
                let rows = (0..dims[a.target])
                    .map(|_| (0..dims[a.source]).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect())
                    .collect();
                Mat::from_rows(f, rows)
            })
            .collect();
        let x = Representation::new(alg, dims.to_vec(), maps)?;
        if hom_dim(alg, &x, &x) == 1 && ext1_dim(alg, &x, &x) == 0 {
            return Ok((x, s));
        }
    }
    Err(Error::InvalidInput(format!(
        "no rigid brick with dimension vector {dims:?} in {tries} seeds"
    )))
}

#[derive(Clone, Debug)]
pub struct TiltingCertificate {
    pub summands: Vec<(Representation, usize)>,
    pub projective_dimensions: Vec<Dimension>,
    pub pd_ok: bool,
    pub ext_ok: bool,
    pub count_ok: bool,
}

impl TiltingCertificate {
    pub fn valid(&self) -> bool {
        self.pd_ok && self.ext_ok && self.count_ok
    }
}

/// `pd T <= 1`, `Ext¹(T, T) = 0`, and as many isoclasses of indecomposable
/// summands as vertices.
pub fn tilting_check(alg: &BoundQuiverAlgebra, t: &Representation, seed: u64) -> Result<TiltingCertificate> {
    let summands = decompose(alg, t, seed)?;
    let pds: Vec<Dimension> = summands.iter().map(|(x, _)| projective_dimension(alg, x, 3)).collect();
    let pd_ok = pds.iter().all(|d| matches!(d, Dimension::Finite(n) if *n <= 1));
    let ext_ok = ext1_dim(alg, t, t) == 0;
    let count_ok = summands.len() == alg.vertex_count();
    Ok(TiltingCertificate {
        summands,
        projective_dimensions: pds,
        pd_ok,
        ext_ok,
        count_ok,
    })
}

/// `End(⊕ M_i)` with one vertex per summand. `e_i End e_j = Hom(M_j, M_i)`
/// and the product is composition, `a·b = a ∘ b`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub summands: Vec<Representation>,
    pub presentation: Presentation,
    /// `(i, j, φ)`: the basis element `φ: M_j -> M_i` of the algebra.
    pub basis: Vec<(usize, usize, Morphism)>,
}

impl EndAlgebra {
    pub fn algebra(&self) -> &BoundQuiverAlgebra {
        &self.presentation.algebra
    }

    /// The morphism `M_j -> M_i` represented by an element of `e_i End e_j`.
    pub fn morphism_of(&self, elem: &[Scalar], i: usize, j: usize) -> Morphism {
        let mut out = Morphism::zero(&self.summands[j], &self.summands[i]);
        for (c, (bi, bj, phi)) in elem.iter().zip(&self.basis) {
            if !c.is_zero() {
                assert!(*bi == i && *bj == j, "element outside e_i End e_j");
                out = out.add(&phi.scale(c));
            }
        }
        out
    }
}

pub fn end_sca(
    alg: &BoundQuiverAlgebra,
    summands: &[Representation],
    vertices: Vec<(i64, String)>,
) -> Result<(StructureConstantAlgebra, Vec<(usize, usize, Morphism)>)> {
    let f = alg.field;
    let n = summands.len();
    let mut basis = Vec::new();
    let mut block_start = vec![vec![0; n]; n];
    let mut coords: Vec<Vec<Option<Coordinates>>> = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            block_start[i][j] = basis.len();
            let homs = hom_space(alg, &summands[j], &summands[i]);
            if let Some(first) = homs.first() {
                let flat: Vec<Vec<Scalar>> = homs.iter().map(Morphism::flatten).collect();
                coords[i][j] = Some(Coordinates::new(f, first.flatten().len(), &flat));
            }
            basis.extend(homs.into_iter().map(|h| (i, j, h)));
        }
    }
    let dim = basis.len();
    let labels = basis
        .iter()
        .enumerate()
        .map(|(k, (i, j, _))| format!("{}<-{}#{}", vertices[*i].1, vertices[*j].1, k - block_start[*i][*j]))
        .collect();
    let mult = |a: usize, b: usize| -> Vec<(usize, Scalar)> {
        let (i, j, phi) = &basis[a];
        let (j2, k, psi) = &basis[b];
        if j != j2 {
            return Vec::new();
        }
        let comp = psi.then(phi);
        let Some(c) = coords[*i][*k].as_ref() else {
            return Vec::new();
        };
        let v = c.of(&comp.flatten()).expect("composition lies in the Hom space");
        v.into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(t, x)| (block_start[*i][*k] + t, x))
            .collect()
    };
    let idem: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut e = vec![f.zero(); dim];
            let id = Morphism::identity(&summands[i]).flatten();
            let c = coords[i][i]
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("zero summand".into()))?;
            for (t, x) in c.of(&id).expect("identity").into_iter().enumerate() {
                e[block_start[i][i] + t] = x;
            }
            Ok(e)
        })
        .collect::<Result<_>>()?;
    let sca = StructureConstantAlgebra::new(f, labels, mult, idem, vertices)?;
    Ok((sca, basis))
}

fn default_vertices(n: usize) -> Vec<(i64, String)> {
    (1..=n).map(|i| (i as i64, i.to_string())).collect()
}

/// Presents `End(⊕ summands)`; summands must be indecomposable and
/// pairwise non-isomorphic so that the algebra is basic.
pub fn end_presentation_of(
    alg: &BoundQuiverAlgebra,
    summands: Vec<Representation>,
    vertices: Option<Vec<(i64, String)>>,
    name: &str,
) -> Result<EndAlgebra> {
    let vertices = vertices.unwrap_or_else(|| default_vertices(summands.len()));
    let (sca, basis) = end_sca(alg, &summands, vertices)?;
    let presentation = present_sca(&sca, name)?;
    Ok(EndAlgebra {
        summands,
        presentation,
        basis,
    })
}

/// Decomposes `m` and presents the endomorphism algebra of its basic part.
pub fn end_algebra_presentation(alg: &BoundQuiverAlgebra, m: &Representation, seed: u64) -> Result<EndAlgebra> {
    let parts: Vec<Representation> = decompose(alg, m, seed)?.into_iter().map(|(x, _)| x).collect();
    end_presentation_of(alg, parts, None, "End")
}

/// `Hom_A(⊕ M_i, X)` as a right module over the endomorphism algebra: the
/// space at vertex `i` is `Hom(M_i, X)` and an arrow `i -> j` with element
/// `φ ∈ Hom(M_j, M_i)` acts by `f ↦ f ∘ φ`.
pub fn tilt_hom(alg: &BoundQuiverAlgebra, end: &EndAlgebra, x: &Representation) -> Result<Representation> {
    let b = end.algebra();
    let f = alg.field;
    let spaces: Vec<Vec<Morphism>> = end.summands.iter().map(|m| hom_space(alg, m, x)).collect();
    let coords: Vec<Option<Coordinates>> = spaces
        .iter()
        .map(|s| {
            s.first().map(|h| {
                Coordinates::new(
                    f,
                    h.flatten().len(),
                    &s.iter().map(Morphism::flatten).collect::<Vec<_>>(),
                )
            })
        })
        .collect();
    let dims: Vec<usize> = spaces.iter().map(Vec::len).collect();
    let maps = b
        .quiver
        .arrows
        .iter()
        .zip(&end.presentation.arrow_elements)
        .map(|(ar, elem)| {
            let (i, j) = (ar.source, ar.target);
            let phi = end.morphism_of(elem, i, j);
            let cols: Vec<Vec<Scalar>> = spaces[i]
                .iter()
                .map(|g| {
                    let h = phi.then(g);
                    coords[j]
                        .as_ref()
                        .map_or_else(Vec::new, |c| c.of(&h.flatten()).expect("Hom(M_j, X)"))
                })
                .collect();
            Mat::from_columns(f, dims[j], &cols)
        })
        .collect();
    Representation::new(b, dims, maps)
}

#[derive(Clone, Debug)]
pub struct SliceReport {
    pub sincere: bool,
    pub summand_count_ok: bool,
    pub pairwise_distinct: bool,
    pub hom_to_translate_zero: bool,
    pub ext_zero: bool,
}

impl SliceReport {
    pub fn passed(&self) -> bool {
        self.sincere && self.summand_count_ok && self.pairwise_distinct && self.hom_to_translate_zero && self.ext_zero
    }
}

/// Finite slice checks: sincerity, one summand per vertex with no repeats,
/// `Hom(M, τM) = 0` and `Ext¹(M, M) = 0`. Convexity in the whole module
/// category is not decided.
pub fn slice_candidate_check(alg: &BoundQuiverAlgebra, m: &Representation, seed: u64) -> Result<SliceReport> {
    let parts = crate::decompose::decompose_full(alg, m, seed)?;
    let mods: Vec<Representation> = parts.into_iter().map(|s| s.module).collect();
    let mut distinct = true;
    for a in 0..mods.len() {
        for b in a + 1..mods.len() {
            if isomorphic_indecomposables(alg, &mods[a], &mods[b]) {
                distinct = false;
            }
        }
    }
    let mut hom_tau = true;
    for x in &mods {
        if let Ok(t) = ar_translate(alg, x) {
            if hom_dim(alg, m, &t) != 0 {
                hom_tau = false;
            }
        }
    }
    Ok(SliceReport {
        sincere: m.dims.iter().all(|&d| d > 0),
        summand_count_ok: mods.len() == alg.vertex_count(),
        pairwise_distinct: distinct,
        hom_to_translate_zero: hom_tau,
        ext_zero: ext1_dim(alg, m, m) == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_bqa;
    use crate::sca::quiver_isomorphism;

    fn a3() -> BoundQuiverAlgebra {
        parse_bqa("vertex 1 1\nvertex 2 2\nvertex 3 3\narrow a: 3 -> 2\narrow b: 2 -> 1\n").unwrap()
    }

    #[test]
    fn regular_module_is_tilting_with_end_the_algebra() {
        let a = a3();
        let t = Representation::regular(&a);
        assert!(tilting_check(&a, &t, 0).unwrap().valid());
        let parts: Vec<Representation> = (0..3).map(|x| Representation::projective(&a, x)).collect();
        let end = end_presentation_of(&a, parts, None, "End").unwrap();
        assert!(quiver_isomorphism(end.algebra(), &a).is_some());
    }

    #[test]
    fn hom_from_regular_is_identity_functor() {
        let a = a3();
        let parts: Vec<Representation> = (0..3).map(|x| Representation::projective(&a, x)).collect();
        let end = end_presentation_of(&a, parts, None, "End").unwrap();
        for x in 0..3 {
            let m = tilt_hom(&a, &end, &Representation::injective(&a, x)).unwrap();
            assert_eq!(m.dims, Representation::injective(&a, x).dims);
        }
    }

    #[test]
    fn pd_two_simple_breaks_tilting() {
        let a = parse_bqa("vertex 1 1\nvertex 2 2\nvertex 3 3\narrow a: 3 -> 2\narrow b: 2 -> 1\nrelation a.b = 0\n")
            .unwrap();
        let s = Representation::simple(&a, 2);
        let t = Representation::direct_sum(&a, &[&Representation::regular(&a), &s]);
        let c = tilting_check(&a, &t, 0).unwrap();
        assert!(!c.pd_ok);
        assert!(!c.valid());
    }

    #[test]
    fn end_of_projective_is_a_point() {
        let a = a3();
        let end = end_presentation_of(&a, vec![Representation::projective(&a, 2)], None, "End").unwrap();
        assert_eq!(end.algebra().dim(), 1);
    }

    #[test]
    fn generic_bricks_over_kronecker() {
        let k = parse_bqa("vertex 1 1\nvertex 2 2\narrow a: 2 -> 1\narrow b: 2 -> 1\n").unwrap();
        let (x, _) = generic_rigid_module(&k, &[3, 2], 0, 50).unwrap();
        assert_eq!(hom_dim(&k, &x, &x), 1);
        assert!(generic_rigid_module(&k, &[1, 1], 0, 20).is_err());
    }

    #[test]
    fn slice_checks_on_projectives() {
        let a = a3();
        assert!(slice_candidate_check(&a, &Representation::regular(&a), 0)
            .unwrap()
            .passed());
        let one = Representation::projective(&a, 2);
        assert!(!slice_candidate_check(&a, &one, 0).unwrap().summand_count_ok);
    }
}
