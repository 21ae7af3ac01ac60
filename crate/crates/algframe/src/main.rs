use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use algframe::corpus::Corpus;
use algframe::formats::{self, ChainDoc, DualDoc, LatticeDoc, PosetDoc, SpaceDoc};
use algframe::report::{self, witness_json, RunOptions, Status};
use algframe::{dot, fixtures, Error, Result};
use algframe_core::chains::{ChainFrame, ChainPredicate};
use algframe_core::dlat::FramePredicate;
use algframe_core::duality::{priestley_space_of_with, Theorem};
use algframe_core::priestley::{FinPriestley, LSpacePredicate, PointSpacePredicate};
use algframe_core::{Error as CoreError, Limits, Verdict};

/// `esakia` quantifies over every subset of points.
const ESAKIA_POINTS: usize = 16;

#[derive(Parser)]
#[command(name = "algframe", version, about = "Finite frames, Priestley spaces and chain witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Lattice,
    Space,
    Chain,
}

#[derive(Subcommand)]
enum Command {
    /// Write one entry per poset isomorphism class up to the given size.
    GenCorpus {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate a named predicate; prints true/false and, on failure, a witness.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        object: Object,
        #[arg(long)]
        predicate: String,
    },
    /// Compute the Priestley space of a lattice and its Stone map.
    Dualize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the theorem validators over a corpus; JSON lines on stdout.
    Validate {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long)]
        threads: Option<usize>,
        /// Record per-check timings (makes the report nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate a predicate on a chain word such as `omega` or `fin:2+dense`.
    Chain {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        predicate: String,
    },
    /// Hasse diagram in DOT; `--focus 1,3` annotates the operators on that upset.
    ExportDot {
        #[arg(long = "in")]
        input: PathBuf,
        /// Defaults to `space` for documents with a `priestley` key.
        #[arg(long, value_enum)]
        object: Option<Object>,
        #[arg(long)]
        focus: Option<String>,
    },
    /// Print the chain witness table.
    Fixtures,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cmd: Command) -> Result<u8> {
    let limits = Limits::default();
    match cmd {
        Command::GenCorpus { max_size, out } => {
            let c = Corpus::generate(max_size, &limits)?;
            formats::write_file(&out, &c.to_json())?;
            eprintln!("{} entries", c.entries.len());
        }
        Command::Check {
            input,
            object,
            predicate,
        } => {
            let v = check(&input, object, &predicate)?;
            println!("{}", v.holds);
            if let Some(w) = &v.witness {
                println!("{}", witness_json(w));
            }
        }
        Command::Dualize { input, out } => {
            let doc: LatticeDoc = formats::read_json(&input)?;
            let rec = priestley_space_of_with(&doc.to_lattice()?, &limits)?;
            let dual = DualDoc {
                priestley: PosetDoc::from_poset(rec.space.points()),
                phi: rec.phi.iter().map(|&m| formats::members(m)).collect(),
                filters: rec.filters.iter().map(|&m| formats::members(m)).collect(),
            };
            formats::write_file(&out, &formats::to_json(&dual))?;
        }
        Command::Validate {
            corpus,
            theorem,
            threads,
            timings,
        } => {
            let c = Corpus::load(&corpus)?;
            let theorems = match theorem {
                Some(t) => vec![t.parse::<Theorem>()?],
                None => Theorem::ALL.to_vec(),
            };
            let lines = report::run(&c, &theorems, &limits, RunOptions { timings, threads })?;
            print!("{}", report::render(&lines));
            let failed = lines.iter().filter(|l| l.status == Status::Fail).count();
            if failed > 0 {
                return Err(Error::Validation(failed));
            }
        }
        Command::Chain { spec, predicate } => {
            let c: ChainFrame = spec.parse()?;
            let p: ChainPredicate = predicate.parse()?;
            println!("{}", c.predicate(p));
        }
        Command::ExportDot {
            input,
            object,
            focus,
        } => {
            let value: Value = formats::read_json(&input)?;
            let object = object.unwrap_or(if value.get("priestley").is_some() {
                Object::Space
            } else {
                Object::Lattice
            });
            let text = match object {
                Object::Space => {
                    let x = parse::<SpaceDoc>(value, &input)?.to_space()?;
                    let focus = focus.map(|f| dot::parse_focus(&f, x.size())).transpose()?;
                    dot::space_dot(&x, focus)?
                }
                Object::Lattice if focus.is_some() => {
                    return Err(Error::Usage("--focus applies to spaces".into()))
                }
                Object::Lattice => dot::lattice_dot(&parse::<LatticeDoc>(value, &input)?.to_lattice()?),
                Object::Chain => return Err(Error::Usage("chains have no finite diagram".into())),
            };
            print!("{text}");
        }
        Command::Fixtures => {
            let rows = fixtures::table()?;
            print!("{}", fixtures::render(&rows));
            let bad = rows
                .iter()
                .flat_map(|r| &r.cells)
                .filter(|c| !c.agrees())
                .count();
            if bad > 0 {
                return Err(Error::Validation(bad));
            }
        }
    }
    Ok(0)
}

fn parse<T: serde::de::DeserializeOwned>(value: Value, path: &Path) -> Result<T> {
    serde_json::from_value(value).map_err(|source| Error::Json {
        path: path.to_owned(),
        source,
    })
}

fn check(input: &Path, object: Object, predicate: &str) -> Result<Verdict> {
    match object {
        Object::Lattice => {
            let l = formats::read_json::<LatticeDoc>(input)?.to_lattice()?;
            Ok(l.frame_predicate(predicate.parse::<FramePredicate>()?))
        }
        Object::Space => {
            let x = formats::read_json::<SpaceDoc>(input)?.to_space()?;
            space_predicate(&x, predicate)
        }
        Object::Chain => {
            let c = formats::read_json::<ChainDoc>(input)?.to_chain()?;
            Ok(Verdict::from_bool(c.predicate(predicate.parse()?)))
        }
    }
}

/// L-space predicates first, then the predicates of the space of points.
fn space_predicate(x: &FinPriestley, name: &str) -> Result<Verdict> {
    if let Ok(p) = name.parse::<LSpacePredicate>() {
        return Ok(x.lspace_predicate(p));
    }
    if let Ok(p) = name.parse::<PointSpacePredicate>() {
        return Ok(x.spatial_part().space.predicate(p));
    }
    match name {
        "esakia" => Ok(x.esakia(ESAKIA_POINTS)?),
        "extremallyOrderDisconnected" => Ok(x.extremally_order_disconnected()),
        _ => Err(CoreError::UnknownPredicate(name.to_owned()).into()),
    }
}
