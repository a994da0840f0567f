//! Inputs shared by the benchmarks.

use repdim_core::format::parse_bqa;
use repdim_core::tilting::generic_rigid_module;
use repdim_core::{BoundQuiverAlgebra, Representation};

pub const WILD_A: &str = include_str!("../../core/fixtures/wild_A.bqa");
pub const TILTED_B: &str = include_str!("../../core/fixtures/wild_tilted_B.bqa");
pub const TOWER_B: &str = include_str!("../../core/fixtures/tower_B.bqa");

pub fn algebra(text: &str) -> BoundQuiverAlgebra {
    parse_bqa(text).expect("bundled fixture parses")
}

/// Rigid summands of the tilting module over the wild hereditary algebra.
pub fn tilting_summands(a: &BoundQuiverAlgebra) -> Vec<Representation> {
    [[2, 3, 0], [6, 9, 1], [1, 2, 0]]
        .iter()
        .map(|d| generic_rigid_module(a, d, 1, 40).expect("seed 1 gives rigid bricks").0)
        .collect()
}
