use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use theta2kit::core::msset::{is_mono, MarkedSSet};
use theta2kit::core::nerves::{duskin_nerve, rs_nerve, scaled_nerve};
use theta2kit::core::suspension::suspend_marked;
use theta2kit::core::theta::{apply_l, apply_l_map, elementary_cofibration, CofibrationKind};
use theta2kit::formats::{Document, MSSetDoc, MapDoc, TwoCatDoc};
use theta2kit::objects::ObjectSpec;
use theta2kit::suites::{self, SuiteOptions};
use theta2kit::{Error, Result};

#[derive(Parser)]
#[command(name = "theta2kit", version, about = "Θ₂-sets, 2-complicial nerves and the comparison functor L")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Marking {
    Rs,
    Duskin,
    Scaled,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    VerticalSegal,
    HorizontalSegal,
    HorizontalCompleteness,
    VerticalCompleteness,
}

#[derive(Subcommand)]
enum Command {
    /// Export a named 2-category as twocat/1 JSON.
    Object {
        #[arg(long)]
        object: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the nerve of a named 2-category as msset/1 JSON.
    Nerve {
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value = "rs")]
        marking: Marking,
        #[arg(long, env = "THETA2KIT_BOUND", default_value_t = 5)]
        bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Suspend a marked simplicial set read from msset/1 JSON.
    Suspend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, env = "THETA2KIT_BOUND", default_value_t = 5)]
        bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply L to an elementary acyclic cofibration or to a presentation.
    Lmap {
        #[arg(long, value_enum, conflicts_with = "presentation", required_unless_present = "presentation")]
        kind: Option<Kind>,
        /// Height of the vertical Segal map.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Column heights of the horizontal Segal map.
        #[arg(long, value_delimiter = ',', default_value = "0,0")]
        ks: Vec<usize>,
        /// A theta/1 presentation; only its image L(W) is written.
        #[arg(long)]
        presentation: Option<PathBuf>,
        #[arg(long, env = "THETA2KIT_BOUND", default_value_t = 5)]
        bound: usize,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 2)]
        max_k: usize,
        #[arg(long, default_value_t = 3)]
        max_i: usize,
        #[arg(long, default_value_t = 3)]
        max_j: usize,
        #[arg(long, default_value_t = 200)]
        fuzz: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Parse a document of any schema and write it back canonically.
    Roundtrip {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(doc: &Document, out: Option<&Path>) -> Result<()> {
    let text = doc.to_pretty();
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            // a closed pipe (`| head`) is the reader's choice, not an error
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
            _ => {}
        },
    }
    Ok(())
}

fn read_doc(path: &Path) -> Result<Document> {
    Document::parse(&std::fs::read_to_string(path)?)
}

fn msset_of(doc: Document) -> Result<MarkedSSet> {
    match doc {
        Document::MSSet(d) => d.to_set(),
        _ => Err(Error::Schema("expected an msset/1 document".into())),
    }
}

/// `Ok(false)` means a verification failed.
fn execute(command: Command) -> Result<bool> {
    match command {
        Command::Object { object, out } => {
            let d = object.parse::<ObjectSpec>()?.two_category()?;
            emit(&Document::TwoCat(TwoCatDoc::from_category(&d)), out.as_deref())?;
        }
        Command::Nerve { object, marking, bound, out } => {
            let d = object.parse::<ObjectSpec>()?.two_category()?;
            let x = match marking {
                Marking::Rs => rs_nerve(&d, bound)?,
                Marking::Duskin => duskin_nerve(&d, bound)?,
                Marking::Scaled => scaled_nerve(&d, bound)?,
            };
            emit(&Document::MSSet(MSSetDoc::from_set(&x)), out.as_deref())?;
        }
        Command::Suspend { input, bound, out } => {
            let x = msset_of(read_doc(&input)?)?;
            let y = suspend_marked(&x, bound)?;
            emit(&Document::MSSet(MSSetDoc::from_set(&y)), out.as_deref())?;
        }
        Command::Lmap { kind, k, ks, presentation, bound, out_dir } => {
            std::fs::create_dir_all(&out_dir)?;
            if let Some(path) = presentation {
                let w = match read_doc(&path)? {
                    Document::Theta(d) => d.to_presentation()?,
                    _ => return Err(Error::Schema("expected a theta/1 document".into())),
                };
                let l = apply_l(&w, bound)?;
                let target = out_dir.join("target.json");
                emit(&Document::MSSet(MSSetDoc::from_set(l.set())), Some(&target))?;
                println!("wrote {}", target.display());
                return Ok(true);
            }
            let kind = match kind.expect("clap enforces kind or presentation") {
                Kind::VerticalSegal => CofibrationKind::VerticalSegal(k),
                Kind::HorizontalSegal => CofibrationKind::HorizontalSegal(ks),
                Kind::HorizontalCompleteness => CofibrationKind::HorizontalCompleteness,
                Kind::VerticalCompleteness => CofibrationKind::VerticalCompleteness,
            };
            let l = apply_l_map(&elementary_cofibration(&kind)?, bound)?;
            let source = MSSetDoc::from_set(l.source.set());
            let target = MSSetDoc::from_set(l.target.set());
            let map = MapDoc::from_map(&l.map, &source, &target);
            for (name, doc) in [
                ("source.json", Document::MSSet(source)),
                ("target.json", Document::MSSet(target)),
                ("map.json", Document::Map(map)),
            ] {
                emit(&doc, Some(&out_dir.join(name)))?;
            }
            println!(
                "{kind:?}: source {:?}, target {:?}, mono {}",
                l.source.set().counts(),
                l.target.set().counts(),
                is_mono(&l.map, l.source.set())
            );
        }
        Command::Verify { suite, max_m, max_k, max_i, max_j, fuzz, seed, json } => {
            let opts = SuiteOptions { max_m, max_k, max_i, max_j, fuzz, seed };
            let Some(reports) = suites::run(&suite, &opts) else {
                let known: Vec<&str> = suites::suite_names().collect();
                return Err(Error::Schema(format!("unknown suite {suite:?}; known: {}", known.join(", "))));
            };
            let reports = reports?;
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    print!("{r}");
                }
            }
            for r in &reports {
                eprintln!("{}: {:.2?}", r.suite, r.elapsed);
            }
            return Ok(reports.iter().all(|r| r.passed));
        }
        Command::Roundtrip { input, out } => {
            let doc = read_doc(&input)?;
            if !doc.round_trip()? {
                return Err(Error::Schema("document does not survive a decode/encode cycle".into()));
            }
            emit(&doc, out.as_deref())?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
