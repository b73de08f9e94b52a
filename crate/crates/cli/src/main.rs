use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use steenrod_coalg::chains::normalized_chains;
use steenrod_coalg::io;
use steenrod_coalg::reconstruct::{
    enumerate_morphisms, homology_square, is_steenrod_morphism, lift_morphism, s_functor, separation_search,
    verify_reconstruction, xi_iterate, Mode, XiImage,
};
use steenrod_coalg::simplicial::OrderedComplex;
use steenrod_coalg::steenrod::{steenrod_squares, SteenrodStructure};
use steenrod_coalg::{Error, Result};

#[derive(Parser)]
#[command(name = "stcoalg", version, about = "Steenrod coalgebras of ordered simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Guided,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a complex and print its canonical form
    Validate { complex: PathBuf },
    /// Normalized chain complex: ranks and boundary matrices
    Chains { complex: PathBuf },
    /// Integral homology
    Homology { complex: PathBuf },
    /// Cup-i coproducts as JSON lines
    XiDump {
        complex: PathBuf,
        #[arg(long)]
        max_i: Option<usize>,
    },
    /// Check the Steenrod structure contract
    XiCheck {
        complex: PathBuf,
        #[arg(long)]
        max_i: Option<usize>,
    },
    /// Steenrod squares on mod 2 cohomology
    Squares {
        complex: PathBuf,
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Steenrod morphisms from the chains of a standard simplex
    Enumerate {
        complex: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Guided)]
        mode: ModeArg,
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Compare Shom(*, N(X)) with d(X) and run the separation search
    Reconstruct {
        complex: PathBuf,
        #[arg(long)]
        up_to: Option<usize>,
        #[arg(long = "K", default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Decide whether a chain map is a Steenrod morphism
    IsMorphism { source: PathBuf, target: PathBuf, map: PathBuf },
    /// Lift a verified morphism to the reconstructed simplicial sets
    Lift {
        source: PathBuf,
        target: PathBuf,
        map: PathBuf,
        #[arg(long)]
        up_to: Option<usize>,
    },
    /// Check the homology square of a verified morphism
    HomologySquare {
        source: PathBuf,
        target: PathBuf,
        map: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_i: usize,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn complex(path: &Path) -> Result<OrderedComplex> {
    io::parse_complex(&read(path)?)
}

fn dim(x: &OrderedComplex) -> usize {
    x.dim().unwrap_or(0)
}

/// JSON to print and whether the verdict is positive.
enum Output {
    Json(Value, bool),
    Lines(Vec<String>),
}

fn run(command: Command) -> Result<Output> {
    Ok(match command {
        Command::Validate { complex: p } => {
            let x = complex(&p)?;
            let mut v = io::complex_json(&x);
            v["f_vector"] = json!(x.f_vector());
            Output::Json(v, true)
        }
        Command::Chains { complex: p } => {
            let n = normalized_chains(&complex(&p)?);
            let mut boundaries = Vec::new();
            for k in 1..=n.top().unwrap_or(0) {
                let mut triples = Vec::new();
                for s in n.basis(k) {
                    for (t, c) in n.boundary_of(s).iter() {
                        triples.push(json!([t, s, c]));
                    }
                }
                boundaries.push(json!({ "degree": k, "entries": triples }));
            }
            Output::Json(json!({ "ranks": n.ranks(), "boundaries": boundaries }), true)
        }
        Command::Homology { complex: p } => Output::Json(io::homology_json(&normalized_chains(&complex(&p)?).homology()), true),
        Command::XiDump { complex: p, max_i } => {
            let st = SteenrodStructure::build(&complex(&p)?, max_i);
            Output::Lines(io::xi_dump_lines(&st)?)
        }
        Command::XiCheck { complex: p, max_i } => {
            let x = complex(&p)?;
            let st = SteenrodStructure::build(&x, max_i);
            let report = st.verify_through(max_i.unwrap_or(2 * dim(&x)));
            let pass = report.pass;
            Output::Json(serde_json::to_value(report).expect("serializable"), pass)
        }
        Command::Squares { complex: p, samples, seed } => {
            let x = complex(&p)?;
            let st = SteenrodStructure::build(&x, None);
            let mut blocks = Vec::new();
            for i in 0..=dim(&x) {
                blocks.extend(steenrod_squares(&st, i, samples, seed)?);
            }
            let pass = blocks.iter().all(|b| b.well_defined);
            Output::Json(json!({ "blocks": blocks }), pass)
        }
        Command::Enumerate { complex: p, n, mode, bound } => {
            let st = SteenrodStructure::build(&complex(&p)?, None);
            let (mode, name) = match mode {
                ModeArg::Guided => (Mode::Guided, "guided"),
                ModeArg::Brute => (Mode::Brute, "brute"),
            };
            let all = enumerate_morphisms(n, &st, mode, bound)?;
            let morphisms: Vec<Value> = all.iter().map(io::morphism_json).collect();
            Output::Json(json!({ "n": n, "mode": name, "count": all.len(), "morphisms": morphisms }), true)
        }
        Command::Reconstruct { complex: p, up_to, k, bound } => {
            let x = complex(&p)?;
            let (report, _) = verify_reconstruction(&x, up_to.unwrap_or(dim(&x) + 2))?;
            let st = SteenrodStructure::build(&x, None);
            let mut simplex_images = true;
            let mut separation = Vec::new();
            for d in 0..=dim(&x) {
                for s in x.simplices(d) {
                    let c = steenrod_coalg::chains::Chain::basis(s.clone());
                    simplex_images &= xi_iterate(&st, &c, k, d)? == XiImage::of_power(&c, d, k);
                }
                separation.push(match separation_search(&st, d, k, bound) {
                    Ok(r) => io::separation_json(&r),
                    Err(Error::SizeLimit(why)) => json!({ "dim": d, "skipped": why }),
                    Err(e) => return Err(e),
                });
            }
            let separated = separation.iter().all(|r| r["counterexample"].is_null());
            let pass = report.pass && simplex_images && separated;
            let mut v = serde_json::to_value(report).expect("serializable");
            v["simplex_images"] = json!(simplex_images);
            v["separation"] = json!(separation);
            Output::Json(v, pass)
        }
        Command::IsMorphism { source, target, map } => {
            let (a, b) = (complex(&source)?, complex(&target)?);
            let f = io::parse_chain_map(&read(&map)?, &a, &b)?;
            let v = is_steenrod_morphism(&f, &SteenrodStructure::build(&a, None), &SteenrodStructure::build(&b, None))?;
            Output::Json(io::verdict_json(&v), v.is_morphism())
        }
        Command::Lift { source, target, map, up_to } => {
            let (a, b) = (complex(&source)?, complex(&target)?);
            let f = io::parse_chain_map(&read(&map)?, &a, &b)?;
            let (sa, sb) = (SteenrodStructure::build(&a, None), SteenrodStructure::build(&b, None));
            let v = is_steenrod_morphism(&f, &sa, &sb)?;
            if !v.is_morphism() {
                return Ok(Output::Json(json!({ "verdict": io::verdict_json(&v), "lift": null }), false));
            }
            let up_to = up_to.unwrap_or(dim(&a).max(dim(&b)) + 2);
            let (ha, hb) = (s_functor(&sa, up_to)?, s_functor(&sb, up_to)?);
            let lift = lift_morphism(&f, &v, &ha, &hb)?;
            let bijection = lift.vertex_bijection(&ha, &hb, &a, &b)?;
            let lift_json = json!({
                "up_to": up_to,
                "levels": lift.levels,
                "is_identity": lift.is_identity(),
                "vertex_bijection": bijection,
            });
            Output::Json(json!({ "verdict": io::verdict_json(&v), "lift": lift_json }), true)
        }
        Command::HomologySquare { source, target, map, max_i } => {
            let (a, b) = (complex(&source)?, complex(&target)?);
            let f = io::parse_chain_map(&read(&map)?, &a, &b)?;
            let v = is_steenrod_morphism(&f, &SteenrodStructure::build(&a, None), &SteenrodStructure::build(&b, None))?;
            if !v.is_morphism() {
                return Ok(Output::Json(json!({ "verdict": io::verdict_json(&v), "square": null }), false));
            }
            let report = homology_square(&f, &v, &a, &b, max_i)?;
            let pass = report.pass;
            Output::Json(json!({ "verdict": io::verdict_json(&v), "square": report }), pass)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    // a closed pipe downstream is not an error worth reporting
    match run(cli.command) {
        Ok(Output::Json(v, positive)) => {
            let _ = writeln!(out, "{v}");
            if positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Output::Lines(lines)) => {
            for l in lines {
                if writeln!(out, "{l}").is_err() {
                    break;
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
