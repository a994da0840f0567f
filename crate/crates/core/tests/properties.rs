//! Structural identities checked over fixtures and random inputs.

mod common;

use common::{cyclic_module, fixture, fixture_names};
use proptest::prelude::*;
use repdim_core::decompose::{decompose, group_isoclasses, random_base_change};
use repdim_core::format::parse_bqa;
use repdim_core::homological::{global_dimension, Dimension};
use repdim_core::module::{hom_dim, hom_space_via_generators, intertwiners};
use repdim_core::tilting::end_presentation_of;
use repdim_core::{BoundQuiverAlgebra, Representation};

fn linear(n: usize) -> BoundQuiverAlgebra {
    let mut s = String::new();
    for i in 1..=n {
        s.push_str(&format!("vertex {i} {i}\n"));
    }
    for i in 2..=n {
        s.push_str(&format!("arrow a{i}: {i} -> {}\n", i - 1));
    }
    parse_bqa(&s).unwrap()
}

/// Indecomposables of a linear quiver, found by decomposing every module
/// with dimensions at most one and 0/1 arrow entries.
fn brute_force_indecomposables(a: &BoundQuiverAlgebra) -> Vec<Representation> {
    let n = a.vertex_count();
    let mut found = Vec::new();
    for mask in 1..(1usize << n) {
        let dims: Vec<usize> = (0..n).map(|v| (mask >> v) & 1).collect();
        let arrows = a.quiver.arrows.len();
        for bits in 0..(1usize << arrows) {
            let entries: Vec<i64> = (0..arrows).map(|k| ((bits >> k) & 1) as i64).collect();
            let m = cyclic_module(a, &dims, &entries);
            for (x, _) in decompose(a, &m, 0).unwrap() {
                found.push(x);
            }
        }
    }
    group_isoclasses(a, found).into_iter().map(|(x, _)| x).collect()
}

#[test]
fn auslander_algebras_of_linear_quivers_have_gldim_at_most_two() {
    for n in [2, 3] {
        let a = linear(n);
        let all = brute_force_indecomposables(&a);
        // Gabriel: one indecomposable per positive root of A_n.
        assert_eq!(all.len(), n * (n + 1) / 2);
        let end = end_presentation_of(&a, all, None, "Aus").unwrap();
        let gl = global_dimension(end.algebra(), 6);
        assert!(matches!(gl, Dimension::Finite(d) if d <= 2), "n = {n}: {gl:?}");
    }
}

fn random_acyclic_text(n: usize, arrows: &[(usize, usize)]) -> String {
    let mut s = String::new();
    for i in 1..=n {
        s.push_str(&format!("vertex {i} {i}\n"));
    }
    for (k, &(x, y)) in arrows.iter().enumerate() {
        let (x, y) = (x % n + 1, y % n + 1);
        let (hi, lo) = (x.max(y), x.min(y));
        if hi != lo {
            // Arrows go from larger to smaller labels, so no cycles arise.
            s.push_str(&format!("arrow r{k}: {hi} -> {lo}\n"));
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn hereditary_algebras_have_gldim_at_most_one(
        n in 2usize..6,
        arrows in proptest::collection::vec((0usize..6, 0usize..6), 0..7),
    ) {
        let a = parse_bqa(&random_acyclic_text(n, &arrows)).unwrap();
        let gl = global_dimension(&a, 4);
        let expected = if a.quiver.arrows.is_empty() { 0 } else { 1 };
        prop_assert_eq!(gl, Dimension::Finite(expected));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decomposition_ignores_base_change(
        dims in proptest::array::uniform3(0usize..3),
        entries in proptest::collection::vec(-2i64..3, 1..9),
        seed in 0u64..1000,
    ) {
        prop_assume!(dims.iter().any(|&d| d > 0));
        let a = linear(3);
        let m = cyclic_module(&a, &dims, &entries);
        let sorted = |parts: Vec<(Representation, usize)>| {
            let mut v: Vec<(Vec<usize>, usize)> = parts.into_iter().map(|(x, k)| (x.dims, k)).collect();
            v.sort();
            v
        };
        let before = sorted(decompose(&a, &m, seed).unwrap());
        let after = sorted(decompose(&a, &random_base_change(&a, &m, seed), seed + 1).unwrap());
        let total: Vec<usize> = (0..3).map(|v| before.iter().map(|(d, k)| d[v] * k).sum()).collect();
        prop_assert_eq!(total, dims.to_vec());
        prop_assert_eq!(before, after);
    }

    #[test]
    fn hom_routes_agree_on_the_wild_quiver(
        d1 in proptest::array::uniform3(0usize..3),
        d2 in proptest::array::uniform3(0usize..3),
        e1 in proptest::collection::vec(-2i64..3, 1..7),
        e2 in proptest::collection::vec(-2i64..3, 1..7),
    ) {
        let a = fixture("wild_A.bqa");
        let m = cyclic_module(&a, &d1, &e1);
        let n = cyclic_module(&a, &d2, &e2);
        let direct = intertwiners(&a, &m, &n);
        let via = hom_space_via_generators(&a, &m, &n);
        prop_assert_eq!(direct.len(), via.len());
        for f in direct.iter().chain(&via) {
            prop_assert!(f.is_homomorphism(&a, &m, &n));
        }
    }
}

#[test]
fn yoneda_on_every_fixture_module() {
    for name in fixture_names() {
        let a = fixture(&name);
        let n = a.vertex_count();
        let mut modules = Vec::new();
        for v in 0..n {
            modules.push(Representation::simple(&a, v));
            modules.push(Representation::projective(&a, v));
            modules.push(Representation::injective(&a, v));
        }
        for x in 0..n {
            let p = Representation::projective(&a, x);
            for m in &modules {
                assert_eq!(hom_dim(&a, &p, m), m.dims[x], "{name}: Hom(P({x}), {:?})", m.dims);
            }
        }
    }
}
