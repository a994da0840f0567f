//! Acceptance gate: runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero unless the failures are exactly the known ones.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use repdim_core::approximation::{
    approximating_sequence, auslander_generator, padded_sequence, quasiserial_splice, summand_embedding,
    verify_approx_sequence, Registry,
};
use repdim_core::constructions::{
    apply_reflection_sequence, compare_with_displayed, reflection_splus, repetitive_window, t_plus, trivial_extension,
    ReflectionMode,
};
use repdim_core::decompose::{decompose, group_isoclasses};
use repdim_core::format::parse_bqa;
use repdim_core::homological::{ar_translate, ar_translate_inverse, global_dimension, Dimension};
use repdim_core::linalg::Mat;
use repdim_core::module::{hom_dim, quotient, socle_spaces, transport};
use repdim_core::sca::quiver_isomorphism;
use repdim_core::tilting::{end_presentation_of, generic_rigid_module, tilt_hom, EndAlgebra};
use repdim_core::{BoundQuiverAlgebra, FieldSpec, Representation};

/// Criteria expected to fail, with the reason recorded in the notes.
const KNOWN_FAILURES: &[usize] = &[6];

const TILTING: &str = "generic:2,3,0+generic:6,9,1+generic:1,2,0";

type Outcome = Result<String, String>;

/// Number, title, time limit in seconds and check.
type Criterion<'a> = (usize, &'static str, u64, Box<dyn FnMut() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fixture_path(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn fixture(name: &str) -> BoundQuiverAlgebra {
    parse_bqa(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

fn fixture_with(name: &str, extra: &[&str]) -> BoundQuiverAlgebra {
    let mut text = std::fs::read_to_string(fixture_path(name)).unwrap();
    for r in extra {
        text.push_str(&format!("relation {r} = 0\n"));
    }
    parse_bqa(&text).unwrap()
}

/// Runs the binary; `Err` carries stderr on a non-zero exit.
fn repdim(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_repdim"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    if out.status.success() {
        Ok(stdout)
    } else {
        Err(format!(
            "`repdim {}` exited {:?}: {}{}",
            args.join(" "),
            out.status.code(),
            stdout,
            String::from_utf8_lossy(&out.stderr)
        ))
    }
}

fn repdim_json(args: &[&str]) -> Result<Value, String> {
    let mut a = args.to_vec();
    a.push("--json");
    let out = repdim(&a)?;
    serde_json::from_str::<Value>(&out)
        .map(|v| v["result"].clone())
        .map_err(|e| e.to_string())
}

/// The wild hereditary algebra, `End(T)` and the modules `Hom(T, I(x))`.
struct Tilted {
    a: BoundQuiverAlgebra,
    end: EndAlgebra,
    slice: Vec<Representation>,
}

fn tilted() -> Tilted {
    let a = fixture("wild_A.bqa");
    let ts: Vec<Representation> = [[2, 3, 0], [6, 9, 1], [1, 2, 0]]
        .iter()
        .map(|d| generic_rigid_module(&a, d, 1, 40).unwrap().0)
        .collect();
    let end = end_presentation_of(&a, ts, None, "B").unwrap();
    let slice = (0..3)
        .map(|x| tilt_hom(&a, &end, &Representation::injective(&a, x)).unwrap())
        .collect();
    Tilted { a, end, slice }
}

fn cartan(dir: &Path) -> Outcome {
    let e = repdim(&["opext", &fixture_path("wild_tilted_B.bqa"), "I:1", "--vertex", "4:1'"])?;
    let file = dir.join("E.bqa");
    std::fs::write(&file, e).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let r = repdim_json(&["cartan", file.to_str().unwrap()])?;
    let t = start.elapsed();
    ensure(
        r["vertices"] == json!(["1", "2", "3", "1'"]),
        format!("vertex order {}", r["vertices"]),
    )?;
    let expected = json!([[1, 3, 2, 1], [0, 1, 4, 3], [0, 0, 1, 2], [0, 0, 0, 1]]);
    ensure(r["cartan"] == expected, format!("cartan {}", r["cartan"]))?;
    ensure(t < Duration::from_secs(1), format!("cartan took {t:?}"))?;
    Ok(format!("C_E = {}", r["cartan"]))
}

fn tilting_pipeline(dir: &Path) -> Outcome {
    let a = fixture_path("wild_A.bqa");
    let check = repdim_json(&["tilt-check", &a, TILTING])?;
    ensure(check["tilting"] == json!(true), format!("tilt-check {check}"))?;
    let pds: Vec<&Value> = check["summands"].as_array().unwrap().iter().map(|s| &s["pd"]).collect();
    ensure(
        pds.len() == 3 && pds.iter().all(|p| *p == "1"),
        format!("summand pds {pds:?}"),
    )?;
    let end = repdim_json(&["end", &a, TILTING])?;
    let arrows = end["arrows"].as_array().unwrap();
    let count = |s: &str, t: &str| arrows.iter().filter(|x| x["source"] == s && x["target"] == t).count();
    ensure(
        end["vertices"].as_array().unwrap().len() == 3
            && arrows.len() == 7
            && count("2", "1") == 3
            && count("3", "2") == 4,
        format!("End(T) arrows {arrows:?}"),
    )?;
    let out = dir.join("tilted");
    let homs = repdim_json(&[
        "tilt-hom",
        &a,
        TILTING,
        "--all-injectives",
        "--out",
        out.to_str().unwrap(),
    ])?;
    let dims: Vec<Value> = homs["homs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|h| h["dims"].clone())
        .collect();
    ensure(
        dims == vec![json!([2, 6, 1]), json!([3, 9, 2]), json!([0, 1, 0])],
        format!("Hom(T, I) dims {dims:?}"),
    )?;
    Ok("3 summands of pd 1, Ext¹(T, T) = 0; End(T) has 3 + 4 arrows; Hom(T, I(x)) = (2,6,1), (3,9,2), (0,1,0)".into())
}

fn one_point_extension() -> Outcome {
    let b = fixture("wild_tilted_B.bqa");
    let i1 = Representation::injective(&b, 0);
    let p3 = Representation::projective(&b, 2);
    ensure(i1.dims == [1, 3, 2], format!("dim I_B(1) = {:?}", i1.dims))?;
    ensure(p3.dims == [2, 4, 1], format!("dim P_B(3) = {:?}", p3.dims))?;
    let e = t_plus(&b, 0).map_err(|e| e.to_string())?.algebra;
    ensure(e.vertex_count() == 4, "E needs 4 vertices")?;
    let w = e.quiver.vertex_index("1'").map_err(|e| e.to_string())?;
    let three = e.quiver.vertex_index("3").map_err(|e| e.to_string())?;
    let new_arrows = e.quiver.arrow_count_matrix()[w][three];
    ensure(
        new_arrows == 2 && e.quiver.arrows_out(w).count() == 2,
        format!("{new_arrows} arrows 1' -> 3"),
    )?;
    ensure(
        e.cartan_matrix() == vec![vec![1, 3, 2, 1], vec![0, 1, 4, 3], vec![0, 0, 1, 2], vec![0, 0, 0, 1]],
        format!("cartan {:?}", e.cartan_matrix()),
    )?;
    Ok(format!(
        "dim E = {}, two arrows 1' -> 3, dim I_B(1) = (1,3,2), dim P_B(3) = (2,4,1)",
        e.dim()
    ))
}

fn coextension() -> Outcome {
    let b = fixture("wild_tilted_B.bqa");
    let f = reflection_splus(&b, 0).map_err(|e| e.to_string())?;
    let at = |l: &str| f.quiver.vertex_index(l).unwrap();
    let i2 = Representation::injective(&f, at("2"));
    let got: Vec<usize> = ["2", "3", "1'"].iter().map(|l| i2.dims[at(l)]).collect();
    ensure(got == [1, 4, 3], format!("dim I_F(2) = {got:?}"))?;
    let (v, _) = quotient(&f, &i2, &socle_spaces(&f, &i2));
    let got: Vec<usize> = ["2", "3", "1'"].iter().map(|l| v.dims[at(l)]).collect();
    ensure(got == [0, 4, 3], format!("dim V = {got:?}"))?;
    Ok("dim I_F(2) = (1,4,3), dim V = (4,3)".into())
}

fn reflections() -> Outcome {
    let bminus = fixture("branch_Bminus.bqa");
    let bplus =
        apply_reflection_sequence(&bminus, &["1", "2", "10", "9"], ReflectionMode::SPlus).map_err(|e| e.to_string())?;
    let cmp = compare_with_displayed(&bplus, &fixture("branch_Bplus.bqa")).map_err(|e| e.to_string())?;
    ensure(cmp.passed(), format!("B+ comparison {cmp:?}"))?;
    let b = fixture("tower_B.bqa");
    let seq = ["1", "2", "3", "4", "5", "6", "7", "8"];
    let r = apply_reflection_sequence(&b, &seq, ReflectionMode::SPlus).map_err(|e| e.to_string())?;
    ensure(
        quiver_isomorphism(&r, &b).is_some(),
        "eight-step tower is not isomorphic to B",
    )?;
    Ok("B+ matches vertices, arrows and ideal; eight reflections return to B".into())
}

fn trivext_and_repet() -> Outcome {
    let b = fixture("tower_B.bqa");
    let t = trivial_extension(&b).map_err(|e| e.to_string())?.algebra;
    let shown = fixture("tower_TB.bqa");
    let cmp = compare_with_displayed(&t, &shown).map_err(|e| e.to_string())?;
    let w = repetitive_window(&b, 2).map_err(|e| e.to_string())?.algebra;
    let wcmp = compare_with_displayed(&w, &fixture("tower_window2.bqa")).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    if !(cmp.vertices_match && cmp.arrows_match) {
        problems.push(format!("T(B) quiver differs: {cmp:?}"));
    }
    if !cmp.ideals_equal {
        problems.push(format!(
            "displayed T(B) relations span a smaller ideal (dim {} vs {} = 2 dim B)",
            cmp.displayed_dim, cmp.computed_dim
        ));
    }
    if w.dim() != 3 * b.dim() {
        problems.push(format!("window dimension {} != 3 dim B", w.dim()));
    }
    if !wcmp.ideals_equal {
        problems.push(format!(
            "displayed window relations span a smaller ideal (dim {} vs {})",
            wcmp.displayed_dim, wcmp.computed_dim
        ));
    }
    if !problems.is_empty() {
        // What does hold: the displayed relations vanish, and adding the two
        // missing zero-relation families gives equality.
        let completed = fixture_with("tower_TB.bqa", &["xi.alpha.omega", "eps.rho.eta.alpha"]);
        let fixed = compare_with_displayed(&t, &completed)
            .map_err(|e| e.to_string())?
            .passed();
        let wcompleted = fixture_with("tower_window2.bqa", &["xi'.alpha'.omega", "eps.rho.eta.alpha"]);
        let wfixed = compare_with_displayed(&w, &wcompleted)
            .map_err(|e| e.to_string())?
            .passed();
        problems.push(format!(
            "displayed relations hold: {} / {}; equal after adding the two missing families: {fixed} / {wfixed}",
            cmp.displayed_in_computed, wcmp.displayed_in_computed
        ));
        return Err(problems.join("; "));
    }
    Ok("T(B) and the window match the displayed presentations".into())
}

fn repdim_bound(dir: &Path) -> Outcome {
    let out = dir.join("tilted");
    if !out.join("end.bqa").is_file() {
        let a = fixture_path("wild_A.bqa");
        repdim(&[
            "tilt-hom",
            &a,
            TILTING,
            "--all-injectives",
            "--out",
            out.to_str().unwrap(),
        ])?;
    }
    let slice: Vec<String> = (1..=3)
        .map(|x| out.join(format!("hom_I_{x}_.mod")).display().to_string())
        .collect();
    let parts = format!("B=A,DB=DA,slice={}", slice.join("+"));
    let r = repdim_json(&[
        "repdim-bound",
        out.join("end.bqa").to_str().unwrap(),
        "--parts",
        &parts,
        "--representation-infinite",
    ])?;
    ensure(
        r["registry"].as_array().unwrap().len() == 9,
        format!("registry {}", r["registry"]),
    )?;
    ensure(
        r["bound"] == "3" && r["exact"] == json!(true),
        format!("bound {} exact {}", r["bound"], r["exact"]),
    )?;
    Ok(format!("repdim = 3, simple pds {}", r["simple_pds"]))
}

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

/// All modules with dimensions at most one and 0/1 arrow entries, split
/// into indecomposables and grouped by isoclass.
fn brute_force_indecomposables(a: &BoundQuiverAlgebra) -> Vec<Representation> {
    let f = FieldSpec::Rationals;
    let n = a.vertex_count();
    let arrows = &a.quiver.arrows;
    let mut found = Vec::new();
    for mask in 1..(1usize << n) {
        let dims: Vec<usize> = (0..n).map(|v| (mask >> v) & 1).collect();
        for bits in 0..(1usize << arrows.len()) {
            let maps = arrows
                .iter()
                .enumerate()
                .map(|(k, ar)| {
                    let mut m = Mat::zeros(f, dims[ar.target], dims[ar.source]);
                    if dims[ar.target] == 1 && dims[ar.source] == 1 {
                        m[(0, 0)] = f.from_i64(((bits >> k) & 1) as i64);
                    }
                    m
                })
                .collect();
            let m = Representation::new(a, dims.clone(), maps).unwrap();
            found.extend(decompose(a, &m, 0).unwrap().into_iter().map(|(x, _)| x));
        }
    }
    group_isoclasses(a, found).into_iter().map(|(x, _)| x).collect()
}

fn random_hereditary(rng: &mut ChaCha8Rng) -> BoundQuiverAlgebra {
    let n = rng.gen_range(2..=6);
    let mut s = String::new();
    for i in 1..=n {
        s.push_str(&format!("vertex {i} {i}\n"));
    }
    for k in 0..rng.gen_range(1..=8) {
        let (x, y) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        if x != y {
            s.push_str(&format!("arrow r{k}: {} -> {}\n", x.max(y), x.min(y)));
        }
    }
    parse_bqa(&s).unwrap()
}

fn auslander_suite(t: &Tilted) -> Outcome {
    for n in [2, 3] {
        let a = linear(n);
        let all = brute_force_indecomposables(&a);
        ensure(
            all.len() == n * (n + 1) / 2,
            format!("A{n}: {} indecomposables", all.len()),
        )?;
        let end = end_presentation_of(&a, all, None, "Aus").map_err(|e| e.to_string())?;
        let gl = global_dimension(end.algebra(), 6);
        ensure(
            matches!(gl, Dimension::Finite(d) if d <= 2),
            format!("A{n}: gldim End = {gl}"),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..20 {
        let a = random_hereditary(&mut rng);
        let gl = global_dimension(&a, 4);
        let expected = Dimension::Finite(usize::from(!a.quiver.arrows.is_empty()));
        ensure(gl == expected, format!("random hereditary #{k}: gldim {gl}"))?;
    }
    let mut checked = 0;
    let mut fixtures: Vec<(String, BoundQuiverAlgebra, Vec<Representation>)> = Vec::new();
    for name in [
        "branch_B",
        "branch_Bminus",
        "branch_Bplus",
        "branch_C",
        "wild_A",
        "wild_tilted_B",
        "tower_B",
        "tower_TB",
        "tower_window2",
    ] {
        let a = fixture(&format!("{name}.bqa"));
        let mods = (0..a.vertex_count())
            .flat_map(|v| {
                [
                    Representation::simple(&a, v),
                    Representation::projective(&a, v),
                    Representation::injective(&a, v),
                ]
            })
            .collect();
        fixtures.push((name.into(), a, mods));
    }
    fixtures.push(("End(T)".into(), t.end.algebra().clone(), t.slice.clone()));
    fixtures.push(("wild_A, tilting summands".into(), t.a.clone(), t.end.summands.clone()));
    for (name, a, mods) in &fixtures {
        for x in 0..a.vertex_count() {
            let p = Representation::projective(a, x);
            for m in mods {
                ensure(
                    hom_dim(a, &p, m) == m.dims[x],
                    format!("{name}: Hom(P({x}), N) for N = {:?}", m.dims),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "A2, A3 Auslander algebras gldim <= 2; 20 hereditary gldim <= 1; {checked} Yoneda identities"
    ))
}

fn approximation_suite(t: &Tilted) -> Outcome {
    let b = t.end.algebra();
    let s = Representation::direct_sum(b, &t.slice.iter().collect::<Vec<_>>());
    let bb = Representation::regular(b);
    let db = Representation::dual_regular(b);
    let reg = auslander_generator(b, &[("B", &bb), ("DB", &db), ("slice", &s)], 1).map_err(|e| e.to_string())?;
    let mut samples: Vec<(String, Representation)> = Vec::new();
    for x in 0..b.vertex_count() {
        let l = b.vertex_label(x);
        samples.push((format!("S({l})"), Representation::simple(b, x)));
        samples.push((format!("P({l})"), Representation::projective(b, x)));
        samples.push((format!("I({l})"), Representation::injective(b, x)));
    }
    for (k, m) in t.slice.iter().enumerate() {
        samples.push((format!("slice[{k}]"), m.clone()));
        let (mut up, mut down) = (m.clone(), m.clone());
        for step in 1..=2 {
            up = ar_translate(b, &up).map_err(|e| e.to_string())?;
            down = ar_translate_inverse(b, &down).map_err(|e| e.to_string())?;
            samples.push((format!("tau^{step} slice[{k}]"), up.clone()));
            samples.push((format!("tau^-{step} slice[{k}]"), down.clone()));
        }
    }
    samples.retain(|(_, m)| !m.is_zero());
    let mut first = None;
    for (name, x) in &samples {
        let seq = approximating_sequence(b, &reg, x).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            verify_approx_sequence(b, &seq, &reg),
            format!("{name}: sequence not exact under Hom(M, -)"),
        )?;
        first.get_or_insert(seq);
    }
    let seq = first.ok_or("no samples")?;
    let padded = padded_sequence(b, &reg, &seq, reg.len() - 1).map_err(|e| e.to_string())?;
    ensure(
        verify_approx_sequence(b, &padded, &reg),
        "padded sequence not approximating",
    )?;
    ensure(
        summand_embedding(b, &seq, &padded).is_some(),
        "no split embedding of the minimal sequence",
    )?;

    let over_b = auslander_generator(b, &[("B", &bb), ("slice", &s), ("DB", &db)], 1).map_err(|e| e.to_string())?;
    let e = t_plus(b, 0).map_err(|e| e.to_string())?.algebra;
    let n_reg = Registry {
        names: over_b.names.clone(),
        modules: over_b
            .modules
            .iter()
            .map(|m| transport(b, m, &e))
            .collect::<repdim_core::Result<_>>()
            .map_err(|e| e.to_string())?,
    };
    let sub: Vec<usize> = ["1", "2", "3"]
        .iter()
        .map(|l| e.quiver.vertex_index(l).unwrap())
        .collect();
    let w = e.quiver.vertex_index("1'").unwrap();
    let sp = quasiserial_splice(&e, &sub, &n_reg, &Representation::projective(&e, w), 1).map_err(|e| e.to_string())?;
    ensure(sp.k_is_l_plus_l_prime, "K is not L + L'")?;
    ensure(!sp.k_parts.is_empty(), "K has no summands in add N")?;
    Ok(format!(
        "{} samples verified; padded sequence splits; splice kernel {:?} is L + L' in add N",
        samples.len(),
        sp.k.dims
    ))
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let mut shared: Option<Tilted> = None;
    let criteria: Vec<Criterion> = vec![
        (1, "Cartan matrix of E", 1, Box::new(|| cartan(d))),
        (2, "tilting pipeline", 30, Box::new(|| tilting_pipeline(d))),
        (3, "one-point extension E", 5, Box::new(one_point_extension)),
        (4, "coextension identities", 5, Box::new(coextension)),
        (5, "reflection sequences", 30, Box::new(reflections)),
        (
            6,
            "trivial extension and repetitive window",
            60,
            Box::new(trivext_and_repet),
        ),
        (7, "representation-dimension bound", 180, Box::new(|| repdim_bound(d))),
        (
            8,
            "Auslander property suite",
            60,
            Box::new(|| auslander_suite(shared.get_or_insert_with(tilted))),
        ),
    ];
    let mut failed = Vec::new();
    let mut run = |n: usize, title: &str, limit: u64, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let t = start.elapsed().as_secs_f64();
        let outcome = outcome.and_then(|s| {
            if t > limit as f64 {
                Err(format!("took {t:.1} s, limit {limit} s"))
            } else {
                Ok(s)
            }
        });
        match outcome {
            Ok(s) => println!("criterion {n}: PASS {title} ({t:.1} s): {s}"),
            Err(e) => {
                println!("criterion {n}: FAIL {title} ({t:.1} s): {e}");
                failed.push(n);
            }
        }
    };
    for (n, title, limit, mut f) in criteria {
        run(n, title, limit, &mut *f);
    }
    // Built outside the timer: the tilting pipeline is criterion 2's subject.
    let t = shared.take().unwrap_or_else(tilted);
    run(9, "approximation suite", 120, &mut || approximation_suite(&t));
    if failed == KNOWN_FAILURES {
        println!(
            "acceptance: {} of 9 criteria pass; known failures {failed:?}",
            9 - failed.len()
        );
    } else {
        println!("acceptance: unexpected failures {failed:?}, known {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
}
