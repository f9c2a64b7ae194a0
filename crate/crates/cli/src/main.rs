use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use vlink::gauss::{strip_comments, ParsedCode};
use vlink::indices::span_multiset;
use vlink::invariants::Invariants;
use vlink::moves::{certify_ind_prime, fuzz_with, smooth, FuzzConfig, MoveTrace};
use vlink::{corpus, Convention, GaussDiagram};

/// Writes to stdout, propagating errors such as a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(io::stdout().lock(), $($arg)*)?
    };
}

#[derive(Parser)]
#[command(name = "vlink", version, about = "Invariants of virtual links from Gauss codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute every invariant of a diagram.
    Compute {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value = "default")]
        convention: Convention,
    },
    /// Apply random Reidemeister moves and check that invariants survive.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of W, Wbar, Lts, B, Bbar, span.
        #[arg(long, value_delimiter = ',', default_value = "W,Wbar,Lts,B,Bbar,span")]
        invariants: Vec<Checked>,
        #[arg(long, default_value = "default")]
        convention: Convention,
        /// Write the move trace as JSON here when verification fails.
        #[arg(long)]
        dump: Option<std::path::PathBuf>,
        #[arg(long, hide = true)]
        corrupt_r2: bool,
    },
    /// Smooth one chord and print the resulting code.
    Smooth {
        #[command(flatten)]
        input: Input,
        /// Chord label as written in the input.
        #[arg(long)]
        chord: String,
    },
    /// Mirror the diagram or change one crossing.
    Transform {
        #[command(flatten)]
        input: Input,
        /// `mirror` or `crossing-change:LABEL`.
        #[arg(long)]
        op: String,
    },
    /// List or show the built-in example diagrams.
    Corpus {
        #[command(subcommand)]
        cmd: Option<CorpusCmd>,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    List,
    Show { name: String },
}

#[derive(Args)]
struct Input {
    /// A Gauss code, a file containing one, or `-` for stdin.
    #[arg(conflicts_with_all = ["code", "fixture"])]
    input: Option<String>,
    #[arg(short, long)]
    code: Option<String>,
    /// Name of a built-in example.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Checked {
    #[value(name = "W")]
    W,
    #[value(name = "Wbar")]
    Wbar,
    #[value(name = "Lts")]
    Lts,
    #[value(name = "B")]
    B,
    #[value(name = "Bbar")]
    Bbar,
    #[value(name = "span")]
    Span,
}

impl Input {
    fn text(&self) -> Result<String> {
        if let Some(code) = &self.code {
            return Ok(code.clone());
        }
        if let Some(name) = &self.fixture {
            let fx = corpus::get(name).with_context(|| format!("no built-in example named `{name}`"))?;
            return Ok(fx.code());
        }
        match self.input.as_deref() {
            None => bail!("no input: give a code, a file, `-`, --code or --fixture"),
            Some("-") => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).context("reading stdin")?;
                Ok(strip_comments(&s))
            }
            Some(arg) if Path::new(arg).is_file() => {
                let s = std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
                Ok(strip_comments(&s))
            }
            Some(arg) => Ok(arg.to_string()),
        }
    }

    fn parse(&self) -> Result<ParsedCode> {
        Ok(GaussDiagram::parse_labeled(&self.text()?)?)
    }
}

/// Values of the selected invariants, rendered for comparison and display.
fn fingerprint(inv: &Invariants, d: &GaussDiagram, which: &[Checked]) -> Result<Vec<(Checked, String)>> {
    which
        .iter()
        .map(|&c| {
            let v = match c {
                Checked::W => inv.w(d).to_string(),
                Checked::Wbar => inv.wbar(d).to_string(),
                Checked::Lts => inv.l_ts(d)?.to_string(),
                Checked::B => inv.b_ts(d)?.to_string(),
                Checked::Bbar => inv.bbar_ts(d)?.to_string(),
                Checked::Span => format!("{:?}", span_multiset(d, inv.convention())),
            };
            Ok((c, v))
        })
        .collect()
}

fn verify(
    d: &GaussDiagram,
    cfg: &FuzzConfig,
    which: &[Checked],
    conv: Convention,
    dump: Option<&Path>,
) -> Result<bool> {
    let inv = Invariants::new(conv);
    let trace = fuzz_with(d, cfg)?;
    let diagrams = trace.replay()?;
    let start = fingerprint(&inv, &diagrams[0], which)?;
    let mut failure = None;
    for (step, e) in diagrams.iter().enumerate().skip(1) {
        let now = fingerprint(&inv, e, which)?;
        if let Some(((k, a), (_, b))) = start.iter().zip(&now).find(|(a, b)| a != b) {
            failure = Some(format!("{k:?} changed at move {step}: {a} -> {b}"));
            break;
        }
    }
    if failure.is_none() {
        if let Some(v) = certify_ind_prime(&trace, conv)?.first() {
            failure = Some(format!("Ind' axiom {:?} broken at move {} by chord {}", v.axiom, v.step + 1, v.chord));
        }
    }
    match failure {
        None => {
            out!("ok: {} moves, final {}", trace.moves.len(), trace.final_code);
            Ok(true)
        }
        Some(msg) => {
            eprintln!("verification failed: {msg}");
            report_trace(&trace, dump)?;
            Ok(false)
        }
    }
}

fn report_trace(trace: &MoveTrace, dump: Option<&Path>) -> Result<()> {
    let json = serde_json::to_string_pretty(trace)?;
    match dump {
        Some(path) => {
            std::fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("trace written to {}", path.display());
        }
        None => eprintln!("{json}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Compute { input, format, convention } => {
            let d = input.parse()?.diagram;
            let report = Invariants::new(convention).report(&d)?;
            match format {
                Format::Json => out!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => out!("{}", report.to_text().trim_end()),
            }
        }
        Cmd::Verify { input, steps, seed, invariants, convention, dump, corrupt_r2 } => {
            let d = input.parse()?.diagram;
            let cfg = FuzzConfig { corrupt_r2, ..FuzzConfig::new(steps, seed) };
            return verify(&d, &cfg, &invariants, convention, dump.as_deref());
        }
        Cmd::Smooth { input, chord } => {
            let p = input.parse()?;
            out!("{}", smooth(&p.diagram, p.chord(&chord)?)?.to_code());
        }
        Cmd::Transform { input, op } => {
            let p = input.parse()?;
            let out = match op.split_once(':') {
                None if op == "mirror" => p.diagram.mirror_all(),
                Some(("crossing-change", label)) => p.diagram.crossing_change(p.chord(label)?)?,
                _ => bail!("unknown operation `{op}` (expected mirror or crossing-change:LABEL)"),
            };
            out!("{}", out.to_code());
        }
        Cmd::Corpus { cmd } => match cmd.unwrap_or(CorpusCmd::List) {
            CorpusCmd::List => {
                for fx in corpus::FIXTURES {
                    out!("{:<16} {}", fx.name, fx.code());
                }
            }
            CorpusCmd::Show { name } => {
                let fx = corpus::get(&name).with_context(|| format!("no built-in example named `{name}`"))?;
                out!("{}", fx.text.trim_end());
            }
        },
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
