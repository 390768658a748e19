use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hedrite::catalog::{compare_census, golden_rows, parse_golden, GoldenRow};
use hedrite::circuits::central_circuits;
use hedrite::dartcode::{decode_all, encode, to_json};
use hedrite::enumerate::{census_each, enumerate, HedriteRecord};
use hedrite::link::{dt_code, gauss_code, to_link};
use hedrite::report::analyze;
use hedrite::structure::rail_roads;
use hedrite::transform::{goldberg_coxeter, inflate_all, inflate_circuit, reduce, GcParams};
use hedrite::PlaneGraph;

#[derive(Parser)]
#[command(name = "hedrite", version, about = "Enumerate and analyze i-hedrites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dartcode,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Gauss,
    Dt,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List all i-hedrites with the given number of vertices.
    #[command(group(ArgGroup::new("size").required(true).args(["n", "n_max"])))]
    Enumerate {
        /// Number of 2-gons is 8 - i; all i when omitted (census mode).
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=8))]
        i: Option<u8>,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=63))]
        n: Option<u16>,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=63))]
        n_max: Option<u16>,
        #[arg(long, value_enum, default_value = "dartcode")]
        format: GraphFormat,
    },
    /// Print a JSON report for every graph in a dart-code file.
    Analyze {
        /// Input file, `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Apply one transformation to every graph in a dart-code file.
    #[command(group(ArgGroup::new("op").required(true).args(["medial", "gc", "inflate", "inflate_circuit", "reduce"])))]
    Transform {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        medial: bool,
        /// Goldberg-Coxeter parameters `k,l`.
        #[arg(long, value_name = "K,L")]
        gc: Option<String>,
        /// Inflate every central circuit `t` times.
        #[arg(long, value_name = "T")]
        inflate: Option<usize>,
        /// Inflate one central circuit: `index:t`.
        #[arg(long, value_name = "IDX:T")]
        inflate_circuit: Option<String>,
        /// Reduce the rail-road with this index.
        #[arg(long, value_name = "IDX")]
        reduce: Option<usize>,
        #[arg(long, value_enum, default_value = "dartcode")]
        format: GraphFormat,
    },
    /// Export link diagrams (Gauss code, DT code or both as JSON).
    Export {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: ExportFormat,
    },
    /// Compare the census with the embedded golden listings.
    Tables {
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u16).range(1..=15))]
        n_max: u16,
        /// Golden data file replacing the embedded one.
        #[arg(long)]
        golden: Option<String>,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_graphs(path: &str) -> Result<Vec<PlaneGraph>> {
    Ok(decode_all(&read_input(path)?)?)
}

fn write_graph(out: &mut impl Write, g: &PlaneGraph, format: GraphFormat, header: Option<&HedriteRecord>) -> Result<()> {
    match format {
        GraphFormat::Dartcode => {
            if let Some(r) = header {
                writeln!(out, "{}", r.header())?;
            }
            write!(out, "{}", encode(g))?;
        }
        GraphFormat::Jsonl => {
            let mut v = match header {
                Some(r) => serde_json::to_value(r)?,
                None => json!({}),
            };
            let code = serde_json::to_value(to_json(g))?;
            for key in ["n", "theta", "rotation"] {
                v[key] = code[key].clone();
            }
            writeln!(out, "{v}")?;
        }
    }
    Ok(())
}

fn parse_pair(text: &str, sep: char) -> Result<(usize, usize)> {
    let (a, b) = text.split_once(sep).ok_or_else(|| anyhow!("expected two numbers separated by {sep:?}"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match cli.command {
        Command::Enumerate { i, n, n_max, format } => {
            let is: Vec<usize> = match i {
                Some(i) => vec![i as usize],
                None => (4..=8).collect(),
            };
            let mut emit = |recs: Vec<HedriteRecord>| -> Result<()> {
                for r in &recs {
                    write_graph(&mut out, r.graph(), format, Some(r))?;
                }
                Ok(())
            };
            match (n, n_max) {
                (Some(n), _) => {
                    for &i in &is {
                        emit(enumerate(i, n as usize))?;
                    }
                }
                (None, Some(m)) if i.is_none() => {
                    let mut result = Ok(());
                    census_each(m as usize, |recs| {
                        if result.is_ok() {
                            result = emit(recs);
                        }
                    });
                    result?;
                }
                (None, Some(m)) => {
                    for n in 1..=m as usize {
                        emit(enumerate(is[0], n))?;
                    }
                }
                (None, None) => unreachable!("clap requires a size"),
            }
        }
        Command::Analyze { input } => {
            let rows = golden_rows();
            let reports: Vec<Value> = read_graphs(&input)?.iter().map(|g| analyze(g, Some(&rows))).collect();
            serde_json::to_writer_pretty(&mut out, &reports)?;
            writeln!(out)?;
        }
        Command::Transform { input, medial, gc, inflate, inflate_circuit: ic, reduce: red, format } => {
            for g in read_graphs(&input)? {
                let h = if medial {
                    g.medial()
                } else if let Some(text) = &gc {
                    let (k, l) = parse_pair(text, ',')?;
                    goldberg_coxeter(&g, GcParams::new(k, l)?)?
                } else if let Some(t) = inflate {
                    inflate_all(&g, t)?
                } else if let Some(text) = &ic {
                    let (idx, t) = parse_pair(text, ':')?;
                    let cs = central_circuits(&g);
                    let c = cs.get(idx).ok_or_else(|| anyhow!("no central circuit {idx} (graph has {})", cs.len()))?;
                    inflate_circuit(&g, c, t)?
                } else if let Some(idx) = red {
                    let rr = rail_roads(&g);
                    let r = rr.get(idx).ok_or_else(|| anyhow!("no rail-road {idx} (graph has {})", rr.len()))?;
                    reduce(&g, r)?
                } else {
                    unreachable!("clap requires an operation")
                };
                write_graph(&mut out, &h, format, None)?;
            }
        }
        Command::Export { input, format } => {
            for g in read_graphs(&input)? {
                let link = to_link(&g)?;
                match format {
                    ExportFormat::Gauss => writeln!(out, "{}", gauss_code(&link))?,
                    ExportFormat::Dt => match dt_code(&link) {
                        Ok(d) => writeln!(out, "{d}")?,
                        Err(e) => bail!(e),
                    },
                    ExportFormat::Json => {
                        let v = json!({
                            "components": link.components.len(),
                            "crossings": link.crossings,
                            "composite": link.composite,
                            "gauss_code": gauss_code(&link).to_string(),
                            "dt_code": dt_code(&link).ok().map(|d| d.to_string()),
                        });
                        writeln!(out, "{v}")?;
                    }
                }
            }
        }
        Command::Tables { n_max, golden } => {
            let rows: Vec<GoldenRow> = match golden {
                Some(path) => parse_golden(&read_input(&path)?)?,
                None => golden_rows(),
            };
            let n_max = n_max as usize;
            let mut census = Vec::new();
            census_each(n_max, |recs| census.extend(recs));
            let cells = compare_census(&rows, &census, n_max);
            let failed = cells.iter().filter(|c| !c.pass).count();
            for c in &cells {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                write!(out, "{tag} i={} n={} expected={} found={}", c.i, c.n, c.expected, c.found)?;
                if !c.pass {
                    write!(out, " unmatched_golden=[{}] unmatched_census=[{}]", c.unmatched_rows.join("; "), c.unmatched_records.join("; "))?;
                }
                writeln!(out)?;
            }
            writeln!(out, "summary: {} cells, {} pass, {} fail", cells.len(), cells.len() - failed, failed)?;
            out.flush()?;
            return Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(t) = std::env::var("HEDRITE_THREADS") {
        match t.parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
            _ => {
                eprintln!("error: HEDRITE_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
