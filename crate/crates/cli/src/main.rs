//! `repdim`: exact computations with bound quiver algebras from the shell.

mod commands;
mod error;
mod input;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use repdim_core::FieldSpec;

use crate::commands::Report;
use crate::error::{CliError, Result};

#[derive(Parser)]
#[command(name = "repdim", version, about = "Exact computations with bound quiver algebras")]
struct Cli {
    /// Coefficient field, `Q` or `F<p>`; overrides the algebra file.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Seed for randomized constructions.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Cap for projective and global dimensions.
    #[arg(long, global = true, default_value_t = 12)]
    cap: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct AlgArg {
    /// Algebra file.
    algebra: String,
}

#[derive(Args)]
struct AlgModule {
    /// Algebra file.
    algebra: String,
    /// Module file or shorthand (`P:x`, `I:x`, `S:x`, `A`, `DA`, `generic:d,..`, joined by `+`).
    module: String,
}

#[derive(Args)]
struct Parts {
    /// Algebra file.
    algebra: String,
    /// Comma-separated parts of the generator, each `name=module` or `module`.
    #[arg(long, value_delimiter = ',', required = true)]
    parts: Vec<String>,
}

#[derive(Subcommand)]
enum Verb {
    /// Basis, Cartan matrix and presentation of an algebra.
    Parse(AlgArg),
    /// Cartan matrix: entry (i, j) is dim P(j) at vertex i.
    Cartan(AlgArg),
    /// Global dimension with the table of simple projective dimensions.
    Gldim(AlgArg),
    /// Projective dimension of a module.
    Pd(AlgModule),
    /// Auslander-Reiten translate of a module.
    Tau {
        #[command(flatten)]
        m: AlgModule,
        /// Apply the inverse translate instead.
        #[arg(long)]
        inverse: bool,
    },
    /// One-point extension by a module.
    Opext {
        #[command(flatten)]
        m: AlgModule,
        /// New vertex as `id:label`.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// One-point coextension by a module.
    Coext {
        #[command(flatten)]
        m: AlgModule,
        /// New vertex as `id:label`.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Reflections at a sequence of sinks.
    Reflect {
        #[command(flatten)]
        a: AlgArg,
        /// Comma-separated vertex labels.
        #[arg(long)]
        seq: String,
        /// `s+` for reflections, `t+` for extensions by injectives.
        #[arg(long, default_value = "s+")]
        mode: String,
    },
    /// Trivial extension.
    Trivext(AlgArg),
    /// Finite window of the repetitive category.
    Repet {
        #[command(flatten)]
        a: AlgArg,
        /// Number of consecutive copies.
        #[arg(long, default_value_t = 2)]
        window: usize,
    },
    /// Recomputes a minimal presentation from the structure constants.
    Present(AlgArg),
    /// Certifies pd <= 1, Ext¹(T, T) = 0 and the summand count.
    TiltCheck(AlgModule),
    /// Presentation of the endomorphism algebra.
    End(AlgModule),
    /// Hom_A(T, X) as a module over End(T).
    TiltHom {
        #[command(flatten)]
        t: AlgModule,
        /// All indecomposable injectives.
        #[arg(long, conflicts_with = "of")]
        all_injectives: bool,
        /// Target module.
        #[arg(long)]
        of: Option<String>,
        /// Directory for `end.bqa` and the resulting module files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Indecomposable summands with multiplicities.
    Decompose(AlgModule),
    /// Minimal add(M)-approximating sequence of a module.
    Approx {
        #[command(flatten)]
        p: Parts,
        /// Module to approximate.
        #[arg(long)]
        of: String,
    },
    /// Registry of indecomposable summands of a generator.
    AuslanderGen(Parts),
    /// Upper bound gldim End(M) for the representation dimension.
    RepdimBound {
        #[command(flatten)]
        p: Parts,
        /// The algebra is known to be representation-infinite, so a bound
        /// of 3 is exact.
        #[arg(long)]
        representation_infinite: bool,
    },
    /// Runs a named scenario on the bundled fixtures.
    Example {
        /// `branch`, `wild` or `tower`.
        scenario: String,
        /// Only checks whose name starts with this prefix.
        #[arg(long)]
        check: Option<String>,
    },
}

fn run(cli: &Cli) -> Result<(String, Report)> {
    let field = cli.field.as_deref().map(FieldSpec::parse_name).transpose()?;
    let seed = cli.seed;
    let alg = |path: &str| input::algebra(path, field);
    Ok(match &cli.verb {
        Verb::Parse(a) => ("parse".into(), commands::parse(&alg(&a.algebra)?)),
        Verb::Cartan(a) => ("cartan".into(), commands::cartan(&alg(&a.algebra)?)),
        Verb::Gldim(a) => ("gldim".into(), commands::gldim(&alg(&a.algebra)?, cli.cap)),
        Verb::Pd(m) => {
            let a = alg(&m.algebra)?;
            (
                "pd".into(),
                commands::pd(&a, &input::module(&a, &m.module, seed)?, cli.cap),
            )
        }
        Verb::Tau { m, inverse } => {
            let a = alg(&m.algebra)?;
            (
                "tau".into(),
                commands::tau(&a, &input::module(&a, &m.module, seed)?, *inverse)?,
            )
        }
        Verb::Opext { m, vertex } => {
            let a = alg(&m.algebra)?;
            (
                "opext".into(),
                commands::opext(&a, &input::module(&a, &m.module, seed)?, vertex.as_deref())?,
            )
        }
        Verb::Coext { m, vertex } => {
            let a = alg(&m.algebra)?;
            (
                "coext".into(),
                commands::coext(&a, &input::module(&a, &m.module, seed)?, vertex.as_deref())?,
            )
        }
        Verb::Reflect { a, seq, mode } => ("reflect".into(), commands::reflect(&alg(&a.algebra)?, seq, mode)?),
        Verb::Trivext(a) => ("trivext".into(), commands::trivext(&alg(&a.algebra)?)?),
        Verb::Repet { a, window } => ("repet".into(), commands::repet(&alg(&a.algebra)?, *window)?),
        Verb::Present(a) => ("present".into(), commands::present(&alg(&a.algebra)?)?),
        Verb::TiltCheck(m) => {
            let a = alg(&m.algebra)?;
            (
                "tilt-check".into(),
                commands::tilt_check(&a, &input::module(&a, &m.module, seed)?, seed)?,
            )
        }
        Verb::End(m) => {
            let a = alg(&m.algebra)?;
            (
                "end".into(),
                commands::end(&a, input::summands(&a, &m.module, seed)?, seed)?,
            )
        }
        Verb::TiltHom {
            t,
            all_injectives,
            of,
            out,
        } => {
            let a = alg(&t.algebra)?;
            let end = commands::end_of(&a, input::summands(&a, &t.module, seed)?, seed)?;
            let targets = match (all_injectives, of) {
                (true, _) => (0..a.vertex_count())
                    .map(|x| {
                        (
                            format!("I({})", a.vertex_label(x)),
                            repdim_core::Representation::injective(&a, x),
                        )
                    })
                    .collect(),
                (false, Some(x)) => vec![(x.clone(), input::module(&a, x, seed)?)],
                (false, None) => return Err(CliError::Usage("give --all-injectives or --of".into())),
            };
            if let Some(dir) = out {
                std::fs::create_dir_all(dir).map_err(|source| CliError::Read {
                    path: dir.display().to_string(),
                    source,
                })?;
            }
            (
                "tilt-hom".into(),
                commands::tilt_hom_report(&a, &end, &targets, out.as_deref())?,
            )
        }
        Verb::Decompose(m) => {
            let a = alg(&m.algebra)?;
            (
                "decompose".into(),
                commands::decompose_report(&a, &input::module(&a, &m.module, seed)?, seed)?,
            )
        }
        Verb::Approx { p, of } => {
            let a = alg(&p.algebra)?;
            let reg = commands::registry(&a, &p.parts, seed)?;
            (
                "approx".into(),
                commands::approx(&a, &reg, &input::module(&a, of, seed)?)?,
            )
        }
        Verb::AuslanderGen(p) => {
            let a = alg(&p.algebra)?;
            let reg = commands::registry(&a, &p.parts, seed)?;
            ("auslander-gen".into(), commands::auslander_gen(&a, &reg))
        }
        Verb::RepdimBound {
            p,
            representation_infinite,
        } => {
            let a = alg(&p.algebra)?;
            let reg = commands::registry(&a, &p.parts, seed)?;
            (
                "repdim-bound".into(),
                commands::repdim_bound(&a, &reg, cli.cap, *representation_infinite)?,
            )
        }
        Verb::Example { scenario: name, check } => {
            let checks = scenario::run(name, check.as_deref(), seed)?;
            let ok = checks.iter().all(scenario::Check::passed);
            (
                "example".into(),
                Report {
                    json: scenario::json(name, &checks),
                    text: scenario::text(&checks),
                    ok,
                },
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((verb, report)) => {
            if cli.json {
                let out = json!({
                    "schema": 1,
                    "command": verb,
                    "field": cli.field.as_deref().unwrap_or("from input"),
                    "seed": cli.seed,
                    "ok": report.ok,
                    "result": report.json,
                });
                println!("{}", serde_json::to_string_pretty(&out).expect("JSON values serialize"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
