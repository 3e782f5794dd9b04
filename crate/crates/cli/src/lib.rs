//! The `gauss` command line.
//!
//! [`run`] does all the work and returns the exit code together with
//! everything that would go to stdout and stderr, so tests can drive it
//! without spawning a process.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gauss_diagram::census::census_movable_triples;
use gauss_diagram::codec::{parse_gauss_code, serialize_gauss_code};
use gauss_diagram::moves::{apply_move, enumerate_moves, Move};
use gauss_diagram::random::random_diagram;
use gauss_diagram::render::{render, RenderFormat, RenderOptions};
use gauss_diagram::simplify::{simplify, SearchLimits};
use gauss_diagram::GaussDiagram;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_APPLICABLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gauss", about = "Gauss diagrams and Reidemeister moves", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Code {
    /// Gauss code, or "-" to read it from standard input
    #[arg(value_name = "CODE", allow_hyphen_values = true)]
    code: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a Gauss code is well formed
    Validate(Code),
    /// List the moves available on a diagram
    Moves {
        #[command(flatten)]
        code: Code,
        /// Include R1 and R2 insertions
        #[arg(long)]
        insertions: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply one move and print the result
    Apply {
        #[command(flatten)]
        code: Code,
        /// Move spec such as r1:del:1 or r3:1,3,4
        #[arg(long = "move", value_name = "SPEC")]
        spec: String,
    },
    /// Search for a diagram with fewer chords
    Simplify {
        #[command(flatten)]
        code: Code,
        #[arg(long, value_name = "N", default_value_t = SearchLimits::default().max_states)]
        max_states: usize,
        /// Allow R1 and R2 insertions during the search
        #[arg(long)]
        insertions: bool,
        /// Chord cap while inserting (defaults to two more than the input)
        #[arg(long, value_name = "M")]
        max_chords: Option<usize>,
        /// Print the move sequence
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the canonical form
    Canonical(Code),
    /// Draw a diagram
    Render {
        #[command(flatten)]
        code: Code,
        #[arg(long, value_enum)]
        format: Format,
        /// SVG width and height in pixels
        #[arg(long, default_value_t = RenderOptions::default().size, value_parser = clap::value_parser!(u32).range(1..))]
        size: u32,
        /// Write to FILE instead of standard output
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Print a seeded random diagram
    Random {
        #[arg(long, value_name = "N")]
        chords: usize,
        #[arg(long, value_name = "S")]
        seed: u64,
    },
    /// Count over every diagram with a given number of chords
    Census {
        #[arg(long, value_name = "N")]
        chords: usize,
        #[arg(long, value_enum)]
        count: CensusCount,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CensusCount {
    MovableTriples,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

fn invalid(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.to_string(),
    }
}

fn read_code(code: &Code, stdin: &mut dyn Read) -> Result<GaussDiagram, Failure> {
    let text = if code.code == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| invalid(format!("reading standard input: {e}")))?;
        buf
    } else {
        code.code.clone()
    };
    parse_gauss_code(text.trim()).map_err(invalid)
}

fn envelope(ok: bool, result: Value, error: Option<&str>) -> String {
    let value = json!({ "ok": ok, "result": result, "error": error });
    format!("{value}\n")
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };

    let json = matches!(
        cli.command,
        Command::Moves { json: true, .. } | Command::Simplify { json: true, .. }
    );
    match dispatch(cli.command, stdin) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(failure) if json => Outcome {
            code: failure.code,
            stdout: envelope(false, Value::Null, Some(&failure.message)),
            stderr: String::new(),
        },
        Err(failure) => Outcome {
            code: failure.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", failure.message),
        },
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<String, Failure> {
    match command {
        Command::Validate(code) => {
            let d = read_code(&code, stdin)?;
            Ok(format!(
                "valid: {} chords, writhe {}\n",
                d.chord_count(),
                d.writhe()
            ))
        }

        Command::Moves {
            code,
            insertions,
            json,
        } => {
            let d = read_code(&code, stdin)?;
            let specs: Vec<String> = enumerate_moves(&d, insertions)
                .iter()
                .map(Move::to_string)
                .collect();
            if json {
                Ok(envelope(true, json!(specs), None))
            } else {
                Ok(specs.iter().map(|s| format!("{s}\n")).collect())
            }
        }

        Command::Apply { code, spec } => {
            let d = read_code(&code, stdin)?;
            let mv: Move = spec.parse().map_err(invalid)?;
            let next = apply_move(&d, &mv).map_err(|e| Failure {
                code: EXIT_NOT_APPLICABLE,
                message: e.to_string(),
            })?;
            Ok(format!("{}\n", serialize_gauss_code(&next)))
        }

        Command::Simplify {
            code,
            max_states,
            insertions,
            max_chords,
            trace,
            json,
        } => {
            let d = read_code(&code, stdin)?;
            let limits = SearchLimits {
                max_states,
                allow_insertions: insertions,
                max_chords,
            };
            let r = simplify(&d, limits);
            let final_code = serialize_gauss_code(&r.final_diagram);
            if json {
                let mut result = json!({
                    "final": final_code,
                    "chords": r.final_diagram.chord_count(),
                    "steps": r.trace.len(),
                    "states_explored": r.states_explored,
                    "limit_hit": r.limit_hit,
                });
                if trace {
                    result["trace"] = r
                        .trace
                        .steps
                        .iter()
                        .map(|s| json!({ "move": s.mv.to_string(), "result": serialize_gauss_code(&s.result) }))
                        .collect();
                }
                return Ok(envelope(true, result, None));
            }
            let mut out = format!(
                "final: \"{final_code}\"\nchords: {}\nsteps: {}\nstates explored: {}\n",
                r.final_diagram.chord_count(),
                r.trace.len(),
                r.states_explored
            );
            if r.limit_hit {
                out.push_str("state limit reached\n");
            }
            if trace {
                out.push_str(&r.trace.to_string());
            }
            Ok(out)
        }

        Command::Canonical(code) => {
            let d = read_code(&code, stdin)?;
            Ok(format!("{}\n", serialize_gauss_code(&d.canonical())))
        }

        Command::Render {
            code,
            format,
            size,
            output,
        } => {
            let d = read_code(&code, stdin)?;
            let format = match format {
                Format::Ascii => RenderFormat::Ascii,
                Format::Svg => RenderFormat::Svg,
            };
            let text = render(&d, RenderOptions { format, size });
            match output {
                Some(path) => {
                    fs::write(&path, text)
                        .map_err(|e| invalid(format!("writing {}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }

        Command::Random { chords, seed } => Ok(format!(
            "{}\n",
            serialize_gauss_code(&random_diagram(chords, seed))
        )),

        Command::Census {
            chords,
            count: CensusCount::MovableTriples,
        } => {
            let report = census_movable_triples(chords).map_err(invalid)?;
            Ok(format!(
                "chords: {}\n\
                 diagrams: {}\n\
                 matched triples: {}\n\
                 movable triples: {}\n\
                 movable triples up to rotation: {}\n\
                 diagrams with a matched triple: {}\n\
                 diagrams with a movable triple: {}\n\
                 diagrams with a movable triple up to rotation: {}\n",
                report.chords,
                report.total_diagrams,
                report.matched_placements,
                report.movable_placements,
                report.movable_placement_classes,
                report.diagrams_with_matched,
                report.diagrams_with_movable,
                report.movable_diagram_classes,
            ))
        }
    }
}
