mod common;

use common::tilted_shared;
use proptest::prelude::*;
use repdim_core::approximation::{
    approximating_sequence, auslander_generator, is_right_minimal, padded_sequence, quasiserial_splice,
    repdim_upper_bound, summand_embedding, verify_approx_sequence, Registry,
};
use repdim_core::constructions::t_plus;
use repdim_core::format::parse_bqa;
use repdim_core::homological::Dimension;
use repdim_core::linalg::Mat;
use repdim_core::module::transport;
use repdim_core::scalar::FieldSpec;
use repdim_core::{BoundQuiverAlgebra, Representation};

fn a3() -> BoundQuiverAlgebra {
    parse_bqa("vertex 1 1\nvertex 2 2\nvertex 3 3\narrow a: 3 -> 2\narrow b: 2 -> 1\n").unwrap()
}

/// All six indecomposables of the linear quiver: `A ⊕ DA ⊕ S(2)`.
fn a3_all(a: &BoundQuiverAlgebra) -> Registry {
    let p = Representation::regular(a);
    let i = Representation::dual_regular(a);
    let s = Representation::simple(a, 1);
    auslander_generator(a, &[("A", &p), ("DA", &i), ("S2", &s)], 0).unwrap()
}

fn random_a3_module(dims: [usize; 3], entries: &[i64]) -> Representation {
    let f = FieldSpec::Rationals;
    let mut it = entries.iter().cycle();
    let mut mat = |r: usize, c: usize| {
        let rows: Vec<Vec<_>> = (0..r)
            .map(|_| (0..c).map(|_| f.from_i64(*it.next().unwrap())).collect())
            .collect();
        if r == 0 || c == 0 {
            Mat::zeros(f, r, c)
        } else {
            Mat::from_rows(f, rows)
        }
    };
    // Arrow a: 3 -> 2 is dims[1] x dims[2]; b: 2 -> 1 is dims[0] x dims[1].
    let ma = mat(dims[1], dims[2]);
    let mb = mat(dims[0], dims[1]);
    Representation {
        field: f,
        dims: dims.to_vec(),
        maps: vec![ma, mb],
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// With every indecomposable in the generator, each module has a minimal
    /// approximating sequence whose kernel stays in add M.
    #[test]
    fn finite_type_modules_have_certified_sequences(
        dims in proptest::array::uniform3(0usize..3),
        entries in proptest::collection::vec(-2i64..3, 1..8),
    ) {
        prop_assume!(dims.iter().any(|&d| d > 0));
        let a = a3();
        let reg = a3_all(&a);
        let x = random_a3_module(dims, &entries);
        let seq = approximating_sequence(&a, &reg, &x).unwrap();
        prop_assert!(verify_approx_sequence(&a, &seq, &reg));
        prop_assert!(is_right_minimal(&a, &reg, &seq).unwrap());
        let padded = padded_sequence(&a, &reg, &seq, 3).unwrap();
        prop_assert!(verify_approx_sequence(&a, &padded, &reg));
        prop_assert!(!is_right_minimal(&a, &reg, &padded).unwrap());
        prop_assert!(summand_embedding(&a, &seq, &padded).is_some());
    }
}

#[test]
fn kronecker_regular_simple_is_approximated_by_its_projective_cover() {
    let a = parse_bqa("vertex 1 1\nvertex 2 2\narrow x: 2 -> 1\narrow y: 2 -> 1\n").unwrap();
    let p = Representation::regular(&a);
    let i = Representation::dual_regular(&a);
    let reg = auslander_generator(&a, &[("A", &p), ("DA", &i)], 0).unwrap();
    let f = FieldSpec::Rationals;
    let regular = Representation {
        field: f,
        dims: vec![1, 1],
        maps: vec![Mat::from_i64(f, &[&[1]]), Mat::from_i64(f, &[&[1]])],
    };
    let seq = approximating_sequence(&a, &reg, &regular).unwrap();
    assert!(verify_approx_sequence(&a, &seq, &reg));
    assert_eq!(seq.approx.m0.dims, vec![2, 1]);
    assert_eq!(seq.k.dims, vec![1, 0]);
}

#[test]
fn kernel_outside_add_m_is_reported() {
    // Over k[x]/(x^3) the approximation of the simple by A has kernel
    // k[x]/(x^2), which is not a sum of copies of A.
    let a = parse_bqa("vertex 1 1\narrow x: 1 -> 1\nrelation x.x.x = 0\n").unwrap();
    let p = Representation::regular(&a);
    let reg = auslander_generator(&a, &[("A", &p)], 0).unwrap();
    let err = approximating_sequence(&a, &reg, &Representation::simple(&a, 0)).unwrap_err();
    assert!(matches!(err, repdim_core::Error::KernelNotInAdd(_)), "{err}");
}

#[test]
fn tilted_generator_bounds_representation_dimension_by_three() {
    let t = tilted_shared();
    let b = t.end.algebra();
    let s = Representation::direct_sum(b, &t.slice.iter().collect::<Vec<_>>());
    let bb = Representation::regular(b);
    let db = Representation::dual_regular(b);
    let reg = auslander_generator(b, &[("B", &bb), ("DB", &db), ("slice", &s)], 0).unwrap();
    assert_eq!(reg.len(), 9);
    let bound = repdim_upper_bound(b, &reg, 6).unwrap();
    assert_eq!(bound.bound, Dimension::Finite(3));
    assert_eq!(bound.simple_pds.iter().max(), Some(&Dimension::Finite(3)));
}

#[test]
fn splice_kernel_splits_over_the_one_point_extension() {
    let t = tilted_shared();
    let b = t.end.algebra();
    let s = Representation::direct_sum(b, &t.slice.iter().collect::<Vec<_>>());
    let bb = Representation::regular(b);
    let db = Representation::dual_regular(b);
    let over_b = auslander_generator(b, &[("B", &bb), ("slice", &s), ("DB", &db)], 0).unwrap();
    let e = t_plus(b, 0).unwrap().algebra;
    let n_reg = Registry {
        names: over_b.names.clone(),
        modules: over_b.modules.iter().map(|m| transport(b, m, &e).unwrap()).collect(),
    };
    let sub: Vec<usize> = ["1", "2", "3"]
        .iter()
        .map(|l| e.quiver.vertex_index(l).unwrap())
        .collect();
    let w = e.quiver.vertex_index("1'").unwrap();
    let sp = quasiserial_splice(&e, &sub, &n_reg, &Representation::projective(&e, w), 0).unwrap();
    assert!(sp.k_is_l_plus_l_prime);
    assert_eq!(sp.k.dims, vec![1, 3, 2, 0]);
    assert!(!sp.k_parts.is_empty());
}
