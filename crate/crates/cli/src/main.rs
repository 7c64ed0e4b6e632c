use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use orientseq::bounds::{sos_bound, sos_bound_oracle_with_limit, DEFAULT_MAX_TUPLES};
use orientseq::constructions::{construct, Anchors, ConstructionParams, Variant};
use orientseq::euler::{os2_maximal, os2_starter};
use orientseq::format::{FileFormat, SequenceFile};
use orientseq::lempel::{d_inverse, sos3, sos_general, tower};
use orientseq::registry::{find, EXAMPLES};
use orientseq::{report, Error, PropertyReport, RingSequence};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "orientseq", version, about = "Special orientable sequences over Z_q")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Sequence file format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the sequence here and print its property report instead.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for FileFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => FileFormat::Text,
            Format::Json => FileFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Weight-adjusted sequence followed by lift and insertion steps.
    General,
    /// A single lift of U*, order 3 only.
    Lift,
}

#[derive(Subcommand)]
enum Command {
    /// Maximal orientable sequence of order 2 from an Eulerian circuit.
    GenOs2 {
        #[arg(long)]
        q: u32,
        /// Forced start x,y,z.
        #[arg(long, value_parser = parse_xyz)]
        xyz: Option<Anchors>,
        /// Begin with 0 before x,y,z.
        #[arg(long, requires = "xyz")]
        lead_zero: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Build a special orientable sequence over Z_q' from a starter over Z_q.
    Construct {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long)]
        q: u32,
        #[arg(long = "q-prime")]
        q_prime: u32,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Starter sequence file; generated when omitted.
        #[arg(long)]
        starter: Option<PathBuf>,
        #[arg(long, value_parser = parse_xyz)]
        xyz: Option<Anchors>,
        #[command(flatten)]
        out: Output,
    },
    /// Apply the inverse difference map.
    Lift {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        start: u32,
        /// Insert one symbol after each lift so the weight stays 1.
        #[arg(long)]
        extend: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Full pipeline for a special orientable sequence of order n over Z_q.
    Sos {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::General)]
        method: Method,
        #[command(flatten)]
        out: Output,
    },
    /// Report every property of a sequence file. Exits 1 unless the sequence is special.
    Verify {
        #[arg(long)]
        n: Option<usize>,
        /// Also require the zero-run condition.
        #[arg(long)]
        good: bool,
        file: PathBuf,
    },
    /// Period bound, in closed form and by enumeration when small enough.
    Bound {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
    },
    /// List or replay the built-in worked examples.
    Examples {
        #[arg(long)]
        id: Option<String>,
        /// Recompute and compare against the stored output.
        #[arg(long, requires = "id")]
        check: bool,
    },
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_xyz(s: &str) -> Result<Anchors, String> {
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [x, y, z] => Ok(Anchors { x, y, z }),
        _ => Err("expected three comma-separated integers".into()),
    }
}

/// Failure with a chosen exit code.
struct Exit {
    code: u8,
    message: Value,
}

fn usage(e: anyhow::Error) -> Exit {
    Exit {
        code: 2,
        message: json!({ "error": format!("{e:#}") }),
    }
}

fn classify(e: Error) -> Exit {
    let code = match e {
        Error::Parse { .. }
        | Error::InvalidModulus(_)
        | Error::InvalidParameters(_)
        | Error::WindowTooShort { .. }
        | Error::ModulusMismatch { .. } => 2,
        _ => 1,
    };
    Exit {
        code,
        message: json!({ "error": e.to_string() }),
    }
}

fn read_file(path: &PathBuf) -> Result<SequenceFile, Exit> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)?;
    SequenceFile::parse(&text).map_err(classify)
}

fn emit(value: &Value, pretty: bool) {
    if pretty {
        match value {
            Value::Object(map) => {
                let width = map.keys().map(String::len).max().unwrap_or(0);
                for (k, v) in map {
                    println!("{k:<width$}  {}", render_plain(v));
                }
            }
            other => println!("{}", render_plain(other)),
        }
    } else {
        println!("{value}");
    }
}

fn render_plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(render_plain)
            .collect::<Vec<_>>()
            .join(","),
        other => other.to_string(),
    }
}

fn report_value(r: &PropertyReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

/// Prints or writes a produced sequence.
fn deliver(s: &RingSequence, n: usize, out: &Output, pretty: bool) -> Result<(), Exit> {
    let file = SequenceFile::new(s, n);
    let rendered = file.render(out.format.into());
    match &out.output {
        Some(path) => {
            fs::write(path, &rendered)
                .with_context(|| format!("writing {}", path.display()))
                .map_err(usage)?;
            emit(&report_value(&report(s, n).map_err(classify)?), pretty);
        }
        None if pretty => {
            let r = report(s, n).map_err(classify)?;
            let mut v = report_value(&r);
            v["terms"] = json!(s.terms());
            emit(&v, true);
        }
        None => print!("{rendered}"),
    }
    Ok(())
}

fn max_tuples() -> Result<u128, Exit> {
    match std::env::var("ORIENTSEQ_MAX_TUPLES") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(anyhow!("ORIENTSEQ_MAX_TUPLES must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_TUPLES),
    }
}

fn run(cli: Cli) -> Result<(), Exit> {
    let pretty = cli.pretty;
    match cli.command {
        Command::GenOs2 {
            q,
            xyz,
            lead_zero,
            out,
        } => {
            let s = match xyz {
                Some(a) => os2_maximal(q, a.x, a.y, a.z, lead_zero),
                None => os2_starter(q),
            }
            .map_err(classify)?;
            deliver(&s, 2, &out, pretty)
        }
        Command::Construct {
            variant,
            q,
            q_prime,
            n,
            starter,
            xyz,
            out,
        } => {
            let starter = match &starter {
                Some(path) => Some(read_file(path)?.sequence().map_err(classify)?),
                None => None,
            };
            let params = ConstructionParams {
                q,
                q_prime,
                n,
                anchors: xyz,
                variant,
            };
            let s = construct(&params, starter.as_ref()).map_err(classify)?;
            deliver(&s, n, &out, pretty)
        }
        Command::Lift {
            input,
            steps,
            start,
            extend,
            out,
        } => {
            let file = read_file(&input)?;
            let mut s = file.sequence().map_err(classify)?;
            let n = file.n;
            if extend {
                if start != 0 {
                    return Err(usage(anyhow!("--extend lifts from start 0")));
                }
                if steps > 0 {
                    let levels = tower(&s, n, steps).map_err(classify)?;
                    s = levels.into_iter().last().expect("steps > 0").extension.sequence;
                }
            } else {
                for _ in 0..steps {
                    s = d_inverse(&s, start).map_err(classify)?;
                }
            }
            deliver(&s, n + steps, &out, pretty)
        }
        Command::Sos { q, n, method, out } => {
            let s = match method {
                Method::General => sos_general(q, n),
                Method::Lift if n == 3 => sos3(q),
                Method::Lift => Err(Error::InvalidParameters(
                    "--method lift builds order 3 only".into(),
                )),
            }
            .map_err(classify)?;
            deliver(&s, n, &out, pretty)
        }
        Command::Verify { n, good, file } => {
            let f = read_file(&file)?;
            let n = n.unwrap_or(f.n);
            let s = f.sequence().map_err(classify)?;
            let r = report(&s, n).map_err(classify)?;
            let value = report_value(&r);
            if r.is_special && (!good || r.is_good) {
                emit(&value, pretty);
                Ok(())
            } else {
                Err(Exit {
                    code: 1,
                    message: value,
                })
            }
        }
        Command::Bound { q, n } => {
            let closed = sos_bound(q, n).map_err(classify)?;
            let limit = max_tuples()?;
            let oracle = match sos_bound_oracle_with_limit(q, n, limit) {
                Ok(b) => serde_json::to_value(b).expect("breakdown serializes"),
                Err(Error::ResourceGuard { requested, limit }) => json!({
                    "skipped": format!("{requested} tuples exceed the limit {limit}")
                }),
                Err(e) => return Err(classify(e)),
            };
            if let Some(b) = oracle.get("bound") {
                if b != &json!(closed) {
                    return Err(Exit {
                        code: 1,
                        message: json!({ "closed_form": closed, "oracle": oracle }),
                    });
                }
            }
            emit(
                &json!({ "q": q, "n": n, "closed_form": closed, "oracle": oracle }),
                pretty,
            );
            Ok(())
        }
        Command::Examples { id, check } => match id {
            None => {
                let list: Vec<Value> = EXAMPLES
                    .iter()
                    .map(|e| {
                        json!({
                            "id": e.name,
                            "description": e.description,
                            "variant": e.variant,
                            "q": e.q,
                            "q_prime": e.q_prime,
                            "period": e.expected.len(),
                        })
                    })
                    .collect();
                if pretty {
                    for e in &EXAMPLES {
                        println!("{:<14} {}", e.name, e.description);
                    }
                } else {
                    println!("{}", Value::Array(list));
                }
                Ok(())
            }
            Some(id) => {
                let e = find(&id).ok_or_else(|| {
                    usage(anyhow!(
                        "unknown example {id:?}; known: {}",
                        EXAMPLES.iter().map(|e| e.name).collect::<Vec<_>>().join(", ")
                    ))
                })?;
                if check {
                    let outcome = e.check().map_err(classify)?;
                    let value = serde_json::to_value(&outcome).expect("outcome serializes");
                    if outcome.matches {
                        emit(&value, pretty);
                        Ok(())
                    } else {
                        Err(Exit {
                            code: 1,
                            message: value,
                        })
                    }
                } else {
                    emit(&serde_json::to_value(e).expect("record serializes"), pretty);
                    Ok(())
                }
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit { code, message }) => {
            if code == 1 && message.get("error").is_none() {
                emit(&message, pretty);
            } else {
                eprintln!("{message}");
            }
            ExitCode::from(code)
        }
    }
}

