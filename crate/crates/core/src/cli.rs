//! Command-line front end shared by the `hopfian` binary and the tests.
//!
//! Exit codes: 0 success, 1 a property or theorem check failed, 2 bad input,
//! 3 a size cap or search budget was hit.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::act::Act;
use crate::congruence::Congruence;
use crate::decide::{r_chain_index, Decider};
use crate::error::{Error, Result};
use crate::format::{
    parse_input, render_report, render_verdicts, to_sorted_json, ActReport, InputDocument,
    ReportDocument,
};
use crate::harness::{run_suite, CorpusSpec, TheoremId};
use crate::monoid::{prime_power_product, zmod_mult_monoid, Monoid};

#[derive(Debug, Parser)]
#[command(
    name = "hopfian",
    version,
    about = "Hopfian-type properties of finite monoid acts"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate every table in a file.
    Validate { file: PathBuf },
    /// Decide every property of one act.
    Classify {
        file: Option<PathBuf>,
        #[arg(long)]
        act: Option<String>,
        /// Use the regular act of a monoid from the file, or of `Z<m>` or `trivial`.
        #[arg(long, conflicts_with = "act")]
        regular: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// List the endomorphism monoid of an act.
    Endos {
        file: PathBuf,
        #[arg(long)]
        act: String,
    },
    /// List the congruences of an act, finest first.
    Congruences {
        file: PathBuf,
        #[arg(long)]
        act: String,
    },
    /// Check the theorem registry over the exhaustive corpus.
    Suite {
        #[arg(long, default_value_t = 3)]
        max_monoid: usize,
        #[arg(long, default_value_t = 4)]
        max_act: usize,
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// r-chain index of x = (p, p, ..., p) in Z/p × Z/p² × ... × Z/p^N.
    Family36 {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match run(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Runs one command. `Ok(1)` reports a failed check; errors carry their own
/// exit code.
pub fn run(command: &Command, out: &mut dyn Write) -> Result<i32> {
    let decider = Decider::default();
    let text = match command {
        Command::Validate { file } => {
            let doc = load(file)?;
            format!(
                "ok: {} monoid(s), {} act(s)\n",
                doc.monoids.len(),
                doc.acts.len()
            )
        }
        Command::Classify {
            file,
            act,
            regular,
            json,
        } => {
            let (name, act, input) =
                classify_target(file.as_deref(), act.as_deref(), regular.as_deref())?;
            let report = ActReport::new(name, decider.classify(&act)?);
            if *json {
                ReportDocument::new(&input, vec![report], Vec::new()).to_json()
            } else {
                render_report(&report)
            }
        }
        Command::Endos { file, act } => {
            let doc = load(file)?;
            let end = decider.end_monoid(doc.act(act)?)?;
            let mut s = format!("|End({act})| = {}\n", end.len());
            for (i, f) in end.elements().iter().enumerate() {
                let tags = [
                    (f.is_injective(), "injective"),
                    (f.is_surjective(), "surjective"),
                ];
                let tags: Vec<&str> = tags.iter().filter(|t| t.0).map(|t| t.1).collect();
                s += &format!("{i:>4}  {:?}  {}\n", f.map(), tags.join(" "));
            }
            s
        }
        Command::Congruences { file, act } => {
            let doc = load(file)?;
            let congruences = decider.congruences(doc.act(act)?)?;
            let mut s = format!("{} congruence(s)\n", congruences.len());
            for c in &congruences {
                s += &format!("{}\n", show_congruence(c));
            }
            s
        }
        Command::Suite {
            max_monoid,
            max_act,
            theorems,
            seed,
            samples,
            json,
        } => {
            let theorems = if theorems.is_empty() {
                TheoremId::ALL.to_vec()
            } else {
                theorems.iter().map(|t| t.parse()).collect::<Result<_>>()?
            };
            let spec = CorpusSpec {
                max_monoid_size: *max_monoid,
                max_act_size: *max_act,
                theorems,
                seed: *seed,
                samples: *samples,
            };
            let verdicts = run_suite(&spec, &decider)?;
            let failed = verdicts.iter().any(|v| !v.passed);
            let text = if *json {
                ReportDocument::new(to_sorted_json(&spec).as_bytes(), Vec::new(), verdicts)
                    .to_json()
            } else {
                render_verdicts(&verdicts)
            };
            out_text(out, &text)?;
            return Ok(i32::from(failed));
        }
        Command::Family36 { p, max_n } => {
            let mut s = format!("{:>3} {:>7} {:>8}\n", "N", "|M|", "r-index");
            for n in 1..=*max_n {
                let (m, x) = prime_power_product(*p, n)?;
                let index = r_chain_index(&m, x).map_or_else(|| "-".to_string(), |i| i.to_string());
                s += &format!("{n:>3} {:>7} {index:>8}\n", m.size());
            }
            s
        }
    };
    out_text(out, &text)?;
    Ok(0)
}

fn out_text(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Io {
        path: "<stdout>".into(),
        msg: e.to_string(),
    })
}

fn load(path: &Path) -> Result<InputDocument> {
    parse_input(&read(path)?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

/// `Z<m>` for the multiplicative monoid of integers mod m, or `trivial`.
pub fn builtin_monoid(name: &str) -> Option<Monoid> {
    if name.eq_ignore_ascii_case("trivial") {
        return Some(Monoid::trivial());
    }
    let m: usize = name.strip_prefix(['Z', 'z'])?.parse().ok()?;
    (1..=64).contains(&m).then(|| zmod_mult_monoid(m))
}

fn classify_target(
    file: Option<&Path>,
    act: Option<&str>,
    regular: Option<&str>,
) -> Result<(String, Act, Vec<u8>)> {
    let text = file.map(read).transpose()?;
    let doc = text.as_deref().map(parse_input).transpose()?;
    match (act, regular) {
        (Some(name), _) => {
            let doc =
                doc.ok_or_else(|| Error::UnknownName(format!("{name} (no input file given)")))?;
            Ok((
                name.to_string(),
                doc.act(name)?.clone(),
                text.unwrap_or_default().into_bytes(),
            ))
        }
        (None, Some(name)) => {
            let monoid = match doc.as_ref().and_then(|d| d.monoid(name).ok()) {
                Some(m) => m.clone(),
                None => Arc::new(
                    builtin_monoid(name).ok_or_else(|| Error::UnknownName(name.to_string()))?,
                ),
            };
            let input = text
                .unwrap_or_else(|| format!("regular {name}"))
                .into_bytes();
            Ok((format!("regular {name}"), Act::regular(monoid), input))
        }
        (None, None) => Err(Error::UnknownName(
            "pass --act NAME or --regular NAME".into(),
        )),
    }
}

fn show_congruence(c: &Congruence) -> String {
    let classes: Vec<String> = c
        .classes()
        .iter()
        .map(|class| {
            let members: Vec<String> = class.iter().map(usize::to_string).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    classes.join(" ")
}
