//! Command-line front end. Exit status: 0 success, 1 a property or class
//! check failed, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::colouring::{
    bound_for_class, chromatic_number_exact, colour_2k2_diamond_with_clique, colour_p3p2_diamond_with_clique,
    colour_p3p2_with_clique, colour_p4p2_with_clique, verify_colouring, CaseTrace, Colouring,
};
use crate::error::Error;
use crate::graph::io::{encode_inline, read_graph, write_dimacs, write_dot, write_edge_list};
use crate::graph::{fixture, Graph};
use crate::harness::{generate_class_instances, run_suite, Mode, SweepConfig};
use crate::partition::{build_partition, check_claims, clique_number, max_clique_exact};
use crate::recognition::{check_class, ClassId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "chromabound", version, about = "Clique-anchored colouring and certification for hereditary graph classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Graph file (DIMACS .col or 0-based edge list); `-` reads stdin.
    input: Option<PathBuf>,
    /// Use a built-in fixture instead of a file.
    #[arg(long, conflicts_with = "input")]
    fixture: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
    Dot,
    Dimacs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    P3p2,
    P4p2,
    P3p2diamond,
    #[value(name = "2k2diamond")]
    TwoK2diamond,
    Exact,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check membership in a class; prints a witness for non-members.
    Recognize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        class: ClassId,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build the clique-anchored partition and check the structural claims.
    Partition {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        class: ClassId,
        /// Ordered maximum clique, comma separated; defaults to the least one.
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Colour with a class algorithm or the exact oracle.
    Colour {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact chromatic number.
    Chi {
        #[command(flatten)]
        input: Input,
    },
    /// Check a colouring file (lines `vertex colour`) against a graph.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Generate class members.
    Gen {
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property sweep and report failures.
    Suite {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Corrupt the colouring of every k-th instance (negative control).
        #[arg(long)]
        inject_every: Option<usize>,
        /// Write one JSON record per instance here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a named fixture.
    Fixture {
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    class: ClassId,
    #[arg(long, default_value = "random_sample")]
    mode: Mode,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SweepArgs {
    fn config(&self) -> SweepConfig {
        let mut cfg = SweepConfig::new(self.class, self.n_min, self.n_max, self.mode);
        cfg.sample_count = self.samples;
        cfg.seed = self.seed;
        cfg
    }
}

enum Outcome {
    Ok,
    Failed,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotInClass { .. } | Error::Invariant(_) | Error::Precondition { .. } => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

fn load(input: &Input) -> Result<Graph, Error> {
    if let Some(name) = &input.fixture {
        return fixture(name);
    }
    let text = match input.input.as_deref() {
        None => return Err(Error::Config("no input: give a graph file, `-`, or --fixture".into())),
        Some(p) if p == Path::new("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        Some(p) => fs::read_to_string(p)?,
    };
    read_graph(&text)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize") + "\n"
}

fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Text => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
        Format::Dot => write_dot(g, None),
        Format::Records => json(&serde_json::json!({ "n": g.n(), "edges": g.edges() })),
    }
}

#[derive(Serialize)]
struct ColourSummary {
    method: &'static str,
    class: Option<ClassId>,
    omega: usize,
    bound: Option<usize>,
    colours_used: usize,
    case_trace: Option<String>,
}

fn colour(g: &Graph, method: Method, clique: Option<Vec<usize>>) -> Result<(Colouring, ColourSummary), Error> {
    let omega = clique_number(g);
    let a = clique.unwrap_or_else(|| max_clique_exact(g));
    let (tag, class) = match method {
        Method::P3p2 => ("p3p2", Some(ClassId::P3P2Free)),
        Method::P4p2 => ("p4p2", Some(ClassId::P4P2Free)),
        Method::P3p2diamond => ("p3p2diamond", Some(ClassId::P3P2DiamondFree)),
        Method::TwoK2diamond => ("2k2diamond", Some(ClassId::TwoK2DiamondFree)),
        Method::Exact => ("exact", None),
    };
    let traced = |r: (Colouring, CaseTrace)| (r.0, Some(r.1.to_string()));
    let (col, trace) = match method {
        Method::P3p2 => (colour_p3p2_with_clique(g, &a)?.colouring, None),
        Method::P4p2 => (colour_p4p2_with_clique(g, &a)?.colouring, None),
        Method::P3p2diamond => traced(colour_p3p2_diamond_with_clique(g, &a)?),
        Method::TwoK2diamond => traced(colour_2k2_diamond_with_clique(g, &a)?),
        Method::Exact => (chromatic_number_exact(g)?, None),
    };
    let summary = ColourSummary {
        method: tag,
        class,
        omega,
        bound: class.map(|c| bound_for_class(c, omega).colours),
        colours_used: col.colours_used,
        case_trace: trace,
    };
    Ok((col, summary))
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<Outcome, Error> {
    match cmd {
        Command::Recognize { input, class, format } => {
            let g = load(&input)?;
            let report = check_class(&g, class);
            let text = match format {
                Format::Records => json(&report),
                _ => match &report.witness {
                    None => format!("member=true class={class}\n"),
                    Some(w) => format!("member=false class={class}\nwitness: {w}\n"),
                },
            };
            out.write_all(text.as_bytes())?;
            Ok(if report.member { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Partition { input, class, clique, format } => {
            let g = load(&input)?;
            let membership = check_class(&g, class);
            if let Some(witness) = membership.witness {
                return Err(Error::NotInClass { class, witness });
            }
            let a = clique.unwrap_or_else(|| max_clique_exact(&g));
            let p = build_partition(&g, &a)?;
            let check = check_claims(&g, &p, class);
            let text = match format {
                Format::Records => json(&serde_json::json!({ "partition": p.to_record(), "claims": check })),
                _ => {
                    let mut s = p.to_text(&g);
                    if let Some(v) = &check.structure {
                        s += &format!("structure: {v}\n");
                    }
                    for c in &check.claims {
                        let status = match (c.applicable, c.holds) {
                            (false, _) => "n/a".to_string(),
                            (true, true) => "holds".to_string(),
                            (true, false) => format!("FAILS {:?}", c.witness.as_deref().unwrap_or(&[])),
                        };
                        let note = c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
                        s += &format!("claim {}: {status}{note}\n", c.claim);
                    }
                    s
                }
            };
            out.write_all(text.as_bytes())?;
            Ok(if check.all_hold() { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Colour { input, method, clique, format, out: path } => {
            let g = load(&input)?;
            let (col, summary) = colour(&g, method, clique)?;
            let text = match format {
                Format::Records => json(&serde_json::json!({ "assignment": col.assignment, "summary": summary })),
                Format::Dot => write_dot(&g, Some(&col.assignment)),
                _ => {
                    let mut s = col.to_text();
                    s += &format!("# method={} omega={} colours_used={}", summary.method, summary.omega, summary.colours_used);
                    if let Some(b) = summary.bound {
                        s += &format!(" bound={b}");
                    }
                    if let Some(t) = &summary.case_trace {
                        s += &format!(" trace={t}");
                    }
                    s + "\n"
                }
            };
            emit(out, path.as_deref(), &text)?;
            Ok(Outcome::Ok)
        }
        Command::Chi { input } => {
            let g = load(&input)?;
            let col = chromatic_number_exact(&g)?;
            writeln!(out, "{}", col.colours_used)?;
            Ok(Outcome::Ok)
        }
        Command::Verify { input, colouring } => {
            let g = load(&input)?;
            let col = Colouring::parse(&fs::read_to_string(colouring)?)?;
            match verify_colouring(&g, &col)? {
                None => {
                    writeln!(out, "proper colours_used={}", col.colours_used)?;
                    Ok(Outcome::Ok)
                }
                Some((u, v)) => {
                    writeln!(out, "improper edge={u},{v} colour={}", col.colour(u))?;
                    Ok(Outcome::Failed)
                }
            }
        }
        Command::Gen { sweep, format, out: path } => {
            let instances = generate_class_instances(&sweep.config())?;
            let mut text = String::new();
            for inst in &instances {
                match format {
                    Format::Records => {
                        text += &json(&serde_json::json!({ "source": inst.source, "graph": encode_inline(&inst.graph) }))
                    }
                    _ => text += &format!("# {}\n{}\n", inst.source, write_edge_list(&inst.graph)),
                }
            }
            emit(out, path.as_deref(), &text)?;
            Ok(Outcome::Ok)
        }
        Command::Suite { sweep, inject_every, out: path } => {
            let mut cfg = sweep.config();
            cfg.inject_every = inject_every;
            let report = run_suite(&cfg)?;
            if let Some(p) = path {
                report.write_records(io::BufWriter::new(fs::File::create(p)?))?;
            }
            out.write_all(report.summary().as_bytes())?;
            Ok(if report.passed() { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Fixture { name, format, out: path } => {
            let g = fixture(&name)?;
            emit(out, path.as_deref(), &write_graph(&g, format))?;
            Ok(Outcome::Ok)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Failed) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
