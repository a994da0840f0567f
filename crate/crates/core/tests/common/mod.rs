//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use repdim_core::format::parse_bqa;
use repdim_core::linalg::Mat;
use repdim_core::scalar::FieldSpec;
use repdim_core::tilting::{end_presentation_of, generic_rigid_module, tilt_hom, EndAlgebra};
use repdim_core::{BoundQuiverAlgebra, Representation};

pub fn fixture(name: &str) -> BoundQuiverAlgebra {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    parse_bqa(&std::fs::read_to_string(p).unwrap()).unwrap()
}

/// Fixture with extra zero relations appended.
pub fn fixture_with(name: &str, extra: &[&str]) -> BoundQuiverAlgebra {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    let mut text = std::fs::read_to_string(p).unwrap();
    for r in extra {
        text.push_str(&format!("relation {r} = 0\n"));
    }
    parse_bqa(&text).unwrap()
}

pub const TILTING_DIMS: [[usize; 3]; 3] = [[2, 3, 0], [6, 9, 1], [1, 2, 0]];

/// The wild hereditary algebra, its tilting summands and `End(T)`.
pub struct Tilted {
    pub a: BoundQuiverAlgebra,
    pub summands: Vec<Representation>,
    pub end: EndAlgebra,
    /// `Hom_A(T, I_A(x))` for each vertex `x`.
    pub slice: Vec<Representation>,
}

pub fn tilted() -> Tilted {
    let a = fixture("wild_A.bqa");
    let summands: Vec<Representation> = TILTING_DIMS
        .iter()
        .map(|d| generic_rigid_module(&a, d, 1, 40).unwrap().0)
        .collect();
    let end = end_presentation_of(&a, summands.clone(), None, "B").unwrap();
    let slice = (0..3)
        .map(|x| tilt_hom(&a, &end, &Representation::injective(&a, x)).unwrap())
        .collect();
    Tilted {
        a,
        summands,
        end,
        slice,
    }
}

/// [`tilted`], built once per test binary.
pub fn tilted_shared() -> &'static Tilted {
    static T: OnceLock<Tilted> = OnceLock::new();
    T.get_or_init(tilted)
}

/// Module over a relation-free algebra with arrow entries drawn cyclically
/// from `entries`.
pub fn cyclic_module(alg: &BoundQuiverAlgebra, dims: &[usize], entries: &[i64]) -> Representation {
    let f = FieldSpec::Rationals;
    let mut it = entries.iter().cycle();
    let maps = alg
        .quiver
        .arrows
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.target], dims[a.source]);
            let mut m = Mat::zeros(f, r, c);
            for i in 0..r {
                for j in 0..c {
                    m[(i, j)] = f.from_i64(*it.next().unwrap());
                }
            }
            m
        })
        .collect();
    Representation::new(alg, dims.to_vec(), maps).unwrap()
}

/// All fixture files, by name.
pub fn fixture_names() -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut names: Vec<String> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".bqa"))
        .collect();
    names.sort();
    names
}
