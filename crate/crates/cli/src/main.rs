use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qeclab::analysis::{self, fmt_f64, Evaluator};
use qeclab::channels::{enumerate_kraus, Asymmetry, ChannelConfig, ChannelModel};
use qeclab::codes::CodeName;
use qeclab::grid::Grid;
use qeclab::metrics::FidelityMode;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "qeclab",
    version,
    about = "Correlated Pauli noise, small codes, fidelity and code entropy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entanglement fidelity over a (p, mu) grid
    Fidelity(SweepArgs),
    /// Code entropy over a (p, mu) grid
    Entropy(SweepArgs),
    /// Break-even memory mu_bar(p) with 1 - F = p
    Threshold(CurveArgs),
    /// Memory values where two codes have equal fidelity
    Crossover {
        #[command(flatten)]
        curve: CurveArgs,
        /// Code compared against --code
        #[arg(long)]
        versus: String,
    },
    /// Dataset behind one of the figures (1 to 10)
    Figure {
        number: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Full single-point report as JSON
    Report {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate the weighted Kraus words of a channel
    Kraus(KrausArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// rc3, dfs2, conc6 or five_qubit
    #[arg(long)]
    code: String,
    /// dephasing or depolarizing; defaults to the code's usual model
    #[arg(long)]
    model: Option<String>,
    /// x,y,z weights of the depolarizing letters, or "symmetric"
    #[arg(long, default_value = "symmetric")]
    alpha: String,
    /// greedy or paper
    #[arg(long, default_value = "paper")]
    decoder: String,
    /// truncated, full or raw
    #[arg(long, default_value = "truncated")]
    mode: String,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// VALUE or START:STOP:COUNT
    #[arg(long)]
    p: String,
    /// VALUE or START:STOP:COUNT
    #[arg(long)]
    mu: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CurveArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// VALUE or START:STOP:COUNT
    #[arg(long)]
    p: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct KrausArgs {
    /// JSON file {model, n, p, mu, alpha}
    #[arg(long, conflicts_with_all = ["model", "n", "p", "mu"])]
    channel: Option<PathBuf>,
    #[arg(long)]
    model: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long, default_value = "symmetric")]
    alpha: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_alpha(s: &str) -> qeclab::Result<Asymmetry> {
    if s == "symmetric" {
        return Ok(Asymmetry::SYMMETRIC);
    }
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| qeclab::Error::Argument(format!("bad alpha {s:?}")))?;
    match parts.as_slice() {
        [x, y, z] => Asymmetry::new(*x, *y, *z),
        _ => Err(qeclab::Error::Argument(format!("alpha {s:?} needs three weights"))),
    }
}

fn evaluator(args: &ModelArgs) -> qeclab::Result<Evaluator> {
    let name: CodeName = args.code.parse()?;
    let model = match &args.model {
        Some(m) => m.parse()?,
        None => name.default_model(),
    };
    Evaluator::new(
        name,
        model,
        parse_alpha(&args.alpha)?,
        args.decoder.parse()?,
        args.mode.parse::<FidelityMode>()?,
    )
}

fn grid(s: &str) -> qeclab::Result<Vec<f64>> {
    Ok(s.parse::<Grid>()?.values())
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).context("writing to stdout")?;
            out.flush().context("writing to stdout")
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Fidelity(args) | Command::Entropy(args) => {
            let eval = evaluator(&args.model)?;
            let table = analysis::sweep(&eval, &grid(&args.mu)?, &grid(&args.p)?)?;
            let text = match args.format {
                Format::Csv => table.to_csv(),
                Format::Json => table.to_json(),
            };
            emit(args.output.as_ref(), &text)
        }
        Command::Threshold(args) => {
            let eval = evaluator(&args.model)?;
            let points = analysis::threshold_curve(|mu, p| eval.fidelity(mu, p), &grid(&args.p)?)?;
            let text = match args.format {
                Format::Json => json(&points),
                Format::Csv => {
                    let mut s = String::from("p,mu_bar\n");
                    for t in &points {
                        let mu = t.mu_bar.map_or_else(|| "none".to_string(), fmt_f64);
                        s.push_str(&format!("{},{mu}\n", fmt_f64(t.p)));
                    }
                    s
                }
            };
            emit(args.output.as_ref(), &text)
        }
        Command::Crossover { curve, versus } => {
            let first = evaluator(&curve.model)?;
            let other = ModelArgs {
                code: versus,
                model: None,
                ..curve.model
            };
            let second = evaluator(&other)?;
            let points = analysis::crossover_curve(
                |mu, p| first.fidelity(mu, p),
                |mu, p| second.fidelity(mu, p),
                &grid(&curve.p)?,
            )?;
            let text = match curve.format {
                Format::Json => json(&points),
                Format::Csv => {
                    let mut s = String::from("p,mu_bar\n");
                    for c in &points {
                        if c.mu_bar.is_empty() {
                            s.push_str(&format!("{},none\n", fmt_f64(c.p)));
                        }
                        for m in &c.mu_bar {
                            s.push_str(&format!("{},{}\n", fmt_f64(c.p), fmt_f64(*m)));
                        }
                    }
                    s
                }
            };
            emit(curve.output.as_ref(), &text)
        }
        Command::Figure { number, output } => emit(output.as_ref(), &analysis::figure(number)?.render()),
        Command::Report { model, mu, p, output } => {
            let report = evaluator(&model)?.report(mu, p)?;
            emit(output.as_ref(), &json(&report))
        }
        Command::Kraus(args) => {
            let config = match &args.channel {
                Some(path) => {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    serde_json::from_str::<ChannelConfig>(&text)
                        .map_err(|e| qeclab::Error::Argument(format!("bad channel file: {e}")))?
                }
                None => {
                    let missing =
                        |flag: &str| qeclab::Error::Argument(format!("--{flag} is required without --channel"));
                    ChannelConfig {
                        model: args
                            .model
                            .as_deref()
                            .ok_or_else(|| missing("model"))?
                            .parse::<ChannelModel>()?,
                        n: args.n.ok_or_else(|| missing("n"))?,
                        p: args.p.ok_or_else(|| missing("p"))?,
                        mu: args.mu.ok_or_else(|| missing("mu"))?,
                        alpha: parse_alpha(&args.alpha)?,
                    }
                }
            };
            let ks = enumerate_kraus(&config.to_spec()?);
            #[derive(Serialize)]
            struct Row {
                index: usize,
                word: String,
                weight: f64,
            }
            let rows: Vec<Row> = ks
                .elements()
                .iter()
                .enumerate()
                .map(|(index, k)| Row {
                    index,
                    word: k.word.to_string(),
                    weight: k.weight,
                })
                .collect();
            let text = match args.format {
                Format::Json => json(&rows),
                Format::Csv => {
                    let mut s = String::from("index,word,weight\n");
                    for r in &rows {
                        s.push_str(&format!("{},{},{}\n", r.index, r.word, fmt_f64(r.weight)));
                    }
                    s
                }
            };
            emit(args.output.as_ref(), &text)
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("QECLAB_THREADS") {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| qeclab::Error::Argument(format!("QECLAB_THREADS={v:?} is not a positive integer")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring thread pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<qeclab::Error>() {
                Some(qeclab::Error::Argument(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
