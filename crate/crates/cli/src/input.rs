//! Loading algebras and modules from the command line.
//!
//! A module argument is a file in the module format or a `+`-separated sum
//! of shorthands: `P:x`, `I:x`, `S:x` for structural modules at vertex `x`,
//! `A` and `DA` for the regular module and its dual, and `generic:d1,d2,..`
//! for a rigid module with that dimension vector.

use std::path::Path;

use repdim_core::format::{parse_bqa_with, parse_module};
use repdim_core::tilting::generic_rigid_module;
use repdim_core::{BoundQuiverAlgebra, FieldSpec, Representation};

use crate::error::{CliError, Result};

const GENERIC_TRIES: usize = 40;

pub fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_string(),
        source,
    })
}

pub fn algebra(path: &str, field: Option<FieldSpec>) -> Result<BoundQuiverAlgebra> {
    Ok(parse_bqa_with(
        &read(path)?,
        field,
        repdim_core::algebra::DEFAULT_PATH_CAP,
    )?)
}

/// The summands named by a module argument, in order.
pub fn summands(alg: &BoundQuiverAlgebra, spec: &str, seed: u64) -> Result<Vec<Representation>> {
    spec.split('+')
        .map(|s| {
            let s = s.trim();
            if Path::new(s).is_file() {
                Ok(parse_module(alg, &read(s)?)?)
            } else {
                shorthand(alg, s, seed)
            }
        })
        .collect()
}

pub fn module(alg: &BoundQuiverAlgebra, spec: &str, seed: u64) -> Result<Representation> {
    let parts = summands(alg, spec, seed)?;
    Ok(Representation::direct_sum(alg, &parts.iter().collect::<Vec<_>>()))
}

fn shorthand(alg: &BoundQuiverAlgebra, s: &str, seed: u64) -> Result<Representation> {
    match s {
        "A" => return Ok(Representation::regular(alg)),
        "DA" => return Ok(Representation::dual_regular(alg)),
        _ => {}
    }
    let (kind, arg) = s
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("`{s}` is neither a file nor a module shorthand")))?;
    if kind == "generic" {
        let dims: Vec<usize> = arg
            .split(',')
            .map(|d| {
                d.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad dimension `{d}`")))
            })
            .collect::<Result<_>>()?;
        if dims.len() != alg.vertex_count() {
            return Err(CliError::Usage(format!(
                "`{s}` needs {} dimensions",
                alg.vertex_count()
            )));
        }
        return Ok(generic_rigid_module(alg, &dims, seed, GENERIC_TRIES)?.0);
    }
    let x = alg.quiver.vertex_index(arg)?;
    match kind {
        "P" => Ok(Representation::projective(alg, x)),
        "I" => Ok(Representation::injective(alg, x)),
        "S" => Ok(Representation::simple(alg, x)),
        _ => Err(CliError::Usage(format!("unknown module kind `{kind}`"))),
    }
}

/// `id:label`, or a bare id used as its own label.
pub fn vertex(spec: Option<&str>, alg: &BoundQuiverAlgebra) -> Result<(i64, String)> {
    let Some(spec) = spec else {
        let id = alg.quiver.vertices.iter().map(|v| v.id).max().unwrap_or(0) + 1;
        return Ok((id, id.to_string()));
    };
    let (id, label) = spec.split_once(':').unwrap_or((spec, spec));
    let id = id
        .parse()
        .map_err(|_| CliError::Usage(format!("bad vertex id `{id}`")))?;
    Ok((id, label.to_string()))
}
