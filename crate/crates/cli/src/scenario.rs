//! Named end-to-end scenarios on the bundled fixtures. Each check records
//! the expected and computed values; a scenario passes when all checks do.

use serde_json::{json, Value};

use repdim_core::approximation::{auslander_generator, repdim_upper_bound};
use repdim_core::constructions::{
    apply_reflection_sequence, compare_with_displayed, is_selfinjective, reflection_splus, repetitive_window, t_plus,
    trivial_extension, ReflectionMode,
};
use repdim_core::format::parse_bqa;
use repdim_core::homological::Dimension;
use repdim_core::module::{quotient, socle_spaces};
use repdim_core::sca::{idempotent_truncation, quiver_isomorphism, restrict_module};
use repdim_core::tilting::{end_presentation_of, generic_rigid_module, tilt_hom, tilting_check};
use repdim_core::{BoundQuiverAlgebra, Representation};

use crate::error::{CliError, Result};

pub const FIXTURES: &[(&str, &str)] = &[
    ("branch_B", include_str!("../../core/fixtures/branch_B.bqa")),
    ("branch_Bminus", include_str!("../../core/fixtures/branch_Bminus.bqa")),
    ("branch_Bplus", include_str!("../../core/fixtures/branch_Bplus.bqa")),
    ("branch_C", include_str!("../../core/fixtures/branch_C.bqa")),
    ("wild_A", include_str!("../../core/fixtures/wild_A.bqa")),
    ("wild_tilted_B", include_str!("../../core/fixtures/wild_tilted_B.bqa")),
    ("tower_B", include_str!("../../core/fixtures/tower_B.bqa")),
    ("tower_TB", include_str!("../../core/fixtures/tower_TB.bqa")),
    ("tower_window2", include_str!("../../core/fixtures/tower_window2.bqa")),
];

pub const SCENARIOS: &[&str] = &["branch", "wild", "tower"];

fn fixture(name: &str) -> Result<BoundQuiverAlgebra> {
    let text = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| CliError::Usage(format!("no fixture `{name}`")))?;
    Ok(parse_bqa(text)?)
}

pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn check(name: &'static str, expected: impl ToString, actual: impl ToString) -> Check {
    Check {
        name,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn dims(d: &[usize]) -> String {
    format!("{d:?}")
}

/// Runs the checks of `scenario` whose name starts with `only`, if given.
pub fn run(scenario: &str, only: Option<&str>, seed: u64) -> Result<Vec<Check>> {
    let wanted = |n: &str| only.is_none_or(|o| n.starts_with(o));
    match scenario {
        "branch" => branch(&wanted),
        "wild" => wild(&wanted, seed),
        "tower" => tower(&wanted),
        _ => Err(CliError::Usage(format!(
            "unknown scenario `{scenario}`, expected one of {}",
            SCENARIOS.join(", ")
        ))),
    }
}

fn labels_in(a: &BoundQuiverAlgebra, m: &Representation, order: &[&str]) -> Result<Vec<usize>> {
    order.iter().map(|l| Ok(m.dims[a.quiver.vertex_index(l)?])).collect()
}

fn branch(wanted: &dyn Fn(&str) -> bool) -> Result<Vec<Check>> {
    let bminus = fixture("branch_Bminus")?;
    let mut out = Vec::new();
    if wanted("reflect") {
        let bplus = apply_reflection_sequence(&bminus, &["1", "2", "10", "9"], ReflectionMode::SPlus)?;
        let cmp = compare_with_displayed(&bplus, &fixture("branch_Bplus")?)?;
        out.push(check("reflect 1,2,10,9 matches displayed B+", true, cmp.passed()));
    }
    if wanted("extend") {
        let b = apply_reflection_sequence(&bminus, &["1", "2", "10", "9"], ReflectionMode::TPlus)?;
        let iso = quiver_isomorphism(&b, &fixture("branch_B")?).is_some();
        out.push(check("extend by injectives along 1,2,10,9 gives B", true, iso));
    }
    if wanted("coextension") {
        let keep: Vec<usize> = (2..8).collect();
        let (trunc, kept) = idempotent_truncation(&bminus, &keep)?;
        let iso = quiver_isomorphism(&trunc.algebra, &fixture("branch_C")?).is_some();
        out.push(check("coextension: truncation to 3..8 is C", true, iso));
        let i2 = Representation::injective(&bminus, 1);
        let (v, _) = quotient(&bminus, &i2, &socle_spaces(&bminus, &i2));
        let u = restrict_module(&bminus, &v, &keep, &trunc, &kept)?;
        out.push(check(
            "coextension: dim U on 3..8",
            dims(&[1, 1, 1, 1, 1, 0]),
            dims(&u.dims),
        ));
        let s5 = restrict_module(&bminus, &Representation::simple(&bminus, 4), &keep, &trunc, &kept)?;
        out.push(check(
            "coextension: dim S5 on 3..8",
            dims(&[0, 0, 1, 0, 0, 0]),
            dims(&s5.dims),
        ));
    }
    Ok(out)
}

fn wild(wanted: &dyn Fn(&str) -> bool, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let b = fixture("wild_tilted_B")?;
    if wanted("tilt") || wanted("repdim") {
        let a = fixture("wild_A")?;
        let ts: Vec<Representation> = [[2, 3, 0], [6, 9, 1], [1, 2, 0]]
            .iter()
            .map(|d| Ok(generic_rigid_module(&a, d, seed, 40)?.0))
            .collect::<Result<_>>()?;
        let t = Representation::direct_sum(&a, &ts.iter().collect::<Vec<_>>());
        let end = end_presentation_of(&a, ts, None, "B")?;
        let slice: Vec<Representation> = (0..3)
            .map(|x| tilt_hom(&a, &end, &Representation::injective(&a, x)))
            .collect::<repdim_core::Result<_>>()?;
        if wanted("tilt") {
            out.push(check("tilt: T is tilting", true, tilting_check(&a, &t, seed)?.valid()));
            let eb = end.algebra();
            let counts = eb.quiver.arrow_count_matrix();
            out.push(check("tilt: End(T) vertices", 3, eb.vertex_count()));
            out.push(check("tilt: End(T) arrows 2 -> 1", 3, counts[1][0]));
            out.push(check("tilt: End(T) arrows 3 -> 2", 4, counts[2][1]));
            out.push(check("tilt: End(T) arrows in total", 7, eb.quiver.arrows.len()));
            out.push(check("tilt: dim End(T)", 12, eb.dim()));
            out.push(check(
                "tilt: End(T) quiver and Cartan match B",
                true,
                quiver_isomorphism(eb, &b).is_some(),
            ));
            let hom: Vec<Vec<usize>> = slice.iter().map(|m| m.dims.clone()).collect();
            out.push(check(
                "tilt: Hom(T, I(x)) dims",
                format!("{:?}", [[2, 6, 1], [3, 9, 2], [0, 1, 0]]),
                format!("{hom:?}"),
            ));
        }
        if wanted("repdim") {
            let eb = end.algebra();
            let p = Representation::regular(eb);
            let i = Representation::dual_regular(eb);
            let s = Representation::direct_sum(eb, &slice.iter().collect::<Vec<_>>());
            let reg = auslander_generator(eb, &[("B", &p), ("DB", &i), ("slice", &s)], seed)?;
            let r = repdim_upper_bound(eb, &reg, 12)?;
            out.push(check(
                "repdim: gldim End(B + DB + slice)",
                Dimension::Finite(3),
                r.bound,
            ));
        }
    }
    if wanted("extension") {
        out.push(check(
            "extension: dim I_B(1)",
            dims(&[1, 3, 2]),
            dims(&Representation::injective(&b, 0).dims),
        ));
        out.push(check(
            "extension: dim P_B(3)",
            dims(&[2, 4, 1]),
            dims(&Representation::projective(&b, 2).dims),
        ));
        let e = t_plus(&b, 0)?.algebra;
        let order: Vec<usize> = ["1", "2", "3", "1'"]
            .iter()
            .map(|l| e.quiver.vertex_index(l))
            .collect::<repdim_core::Result<_>>()?;
        let c = e.cartan_matrix();
        let c: Vec<Vec<usize>> = order
            .iter()
            .map(|&i| order.iter().map(|&j| c[i][j]).collect())
            .collect();
        out.push(check(
            "extension: Cartan matrix of E",
            format!("{:?}", [[1, 3, 2, 1], [0, 1, 4, 3], [0, 0, 1, 2], [0, 0, 0, 1]]),
            format!("{c:?}"),
        ));
        out.push(check(
            "extension: arrows 1' -> 3",
            2,
            e.quiver.arrow_count_matrix()[order[3]][order[2]],
        ));
    }
    if wanted("coextension") {
        let f = reflection_splus(&b, 0)?;
        let i2 = Representation::injective(&f, f.quiver.vertex_index("2")?);
        out.push(check(
            "coextension: dim I_F(2) on 2,3,1'",
            dims(&[1, 4, 3]),
            dims(&labels_in(&f, &i2, &["2", "3", "1'"])?),
        ));
        let (v, _) = quotient(&f, &i2, &socle_spaces(&f, &i2));
        out.push(check(
            "coextension: dim V on 3,1'",
            dims(&[4, 3]),
            dims(&labels_in(&f, &v, &["3", "1'"])?),
        ));
        out.push(check(
            "coextension: V vanishes at 2",
            0,
            v.dims[f.quiver.vertex_index("2")?],
        ));
    }
    Ok(out)
}

fn tower(wanted: &dyn Fn(&str) -> bool) -> Result<Vec<Check>> {
    let b = fixture("tower_B")?;
    let seq = ["1", "2", "3", "4", "5", "6", "7", "8"];
    let mut out = Vec::new();
    if wanted("reflect") {
        let r = apply_reflection_sequence(&b, &seq, ReflectionMode::SPlus)?;
        out.push(check(
            "reflect 1..8 returns to B",
            true,
            quiver_isomorphism(&r, &b).is_some(),
        ));
    }
    if wanted("trivext") {
        let t = trivial_extension(&b)?.algebra;
        out.push(check("trivext: dim T(B) = 2 dim B", 2 * b.dim(), t.dim()));
        out.push(check("trivext: selfinjective", true, is_selfinjective(&t)));
        let cmp = compare_with_displayed(&t, &fixture("tower_TB")?)?;
        out.push(check("trivext: vertices match displayed", true, cmp.vertices_match));
        out.push(check("trivext: arrows match displayed", true, cmp.arrows_match));
        out.push(check(
            "trivext: displayed relations hold",
            true,
            cmp.displayed_in_computed,
        ));
        out.push(check("trivext: ideal equals displayed", true, cmp.ideals_equal));
    }
    if wanted("repet") {
        let w = repetitive_window(&b, 2)?.algebra;
        out.push(check("repet: window dimension 3 dim B", 3 * b.dim(), w.dim()));
        let cmp = compare_with_displayed(&w, &fixture("tower_window2")?)?;
        out.push(check(
            "repet: displayed relations hold",
            true,
            cmp.displayed_in_computed,
        ));
        out.push(check("repet: ideal equals displayed", true, cmp.ideals_equal));
        let dup = apply_reflection_sequence(&b, &seq, ReflectionMode::TPlus)?;
        out.push(check(
            "repet: extension tower gives the window",
            true,
            quiver_isomorphism(&dup, &w).is_some(),
        ));
    }
    Ok(out)
}

pub fn json(scenario: &str, checks: &[Check]) -> Value {
    json!({
        "scenario": scenario,
        "passed": checks.iter().all(Check::passed),
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "expected": c.expected,
            "actual": c.actual,
            "passed": c.passed(),
        })).collect::<Vec<_>>(),
    })
}

pub fn text(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| {
            if c.passed() {
                format!("PASS {}\n", c.name)
            } else {
                format!("FAIL {}: expected {}, got {}\n", c.name, c.expected, c.actual)
            }
        })
        .collect()
}
