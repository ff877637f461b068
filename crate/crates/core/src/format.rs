//! Line-oriented text format for monoid and act tables, and the JSON report
//! document.
//!
//! ```text
//! # comments run to the end of a line
//! monoid M2 2
//! 0 1
//! 1 1
//! act A2 over M2 2
//! 0 1
//! 1 1
//! ```
//!
//! A monoid row `s` lists `s·t` for every `t`, with the identity at index 0.
//! An act row `a` lists `a·s` for every monoid element `s`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::act::Act;
use crate::decide::{ChainReport, Classification, PropertyReport};
use crate::error::{Error, Result};
use crate::harness::Verdict;
use crate::monoid::Monoid;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMonoid {
    pub name: String,
    pub monoid: Arc<Monoid>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedAct {
    pub name: String,
    pub monoid: String,
    pub act: Act,
}

/// Parsed input file, in definition order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InputDocument {
    pub monoids: Vec<NamedMonoid>,
    pub acts: Vec<NamedAct>,
}

impl InputDocument {
    pub fn monoid(&self, name: &str) -> Result<&Arc<Monoid>> {
        self.monoids
            .iter()
            .find(|m| m.name == name)
            .map(|m| &m.monoid)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn act(&self, name: &str) -> Result<&Act> {
        self.acts
            .iter()
            .find(|a| a.name == name)
            .map(|a| &a.act)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Text that [`parse_input`] reads back to an equal document.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for m in &self.monoids {
            let _ = writeln!(out, "monoid {} {}", m.name, m.monoid.size());
            write_rows(&mut out, &m.monoid.rows());
        }
        for a in &self.acts {
            let _ = writeln!(out, "act {} over {} {}", a.name, a.monoid, a.act.size());
            write_rows(&mut out, &a.act.rows());
        }
        out
    }
}

fn write_rows(out: &mut String, rows: &[Vec<usize>]) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

/// A whitespace-separated token with its 1-based line and column.
struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content
        .char_indices()
        .chain(std::iter::once((content.len(), ' ')))
    {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &content[s..i],
                    col: content[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

fn number(token: &Token<'_>, line: usize) -> Result<usize> {
    token.text.parse().map_err(|_| {
        syntax(
            line,
            token.col,
            format!("expected a non-negative integer, found `{}`", token.text),
        )
    })
}

pub fn parse_input(text: &str) -> Result<InputDocument> {
    let lines: Vec<(usize, Vec<Token<'_>>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let last_line = text.lines().count() + 1;
    let mut doc = InputDocument::default();
    let mut names = HashSet::new();
    let mut next = 0;
    while next < lines.len() {
        let (line, header) = &lines[next];
        let line = *line;
        next += 1;
        let keyword = header[0].text;
        let (name, monoid_name, count_token) = match keyword {
            "monoid" if header.len() == 3 => (&header[1], None, &header[2]),
            "act" if header.len() == 5 && header[2].text == "over" => {
                (&header[1], Some(&header[3]), &header[4])
            }
            "monoid" => return Err(syntax(line, header[0].col, "expected `monoid <name> <n>`")),
            "act" => {
                return Err(syntax(
                    line,
                    header[0].col,
                    "expected `act <name> over <monoid> <m>`",
                ))
            }
            other => {
                return Err(syntax(
                    line,
                    header[0].col,
                    format!("expected `monoid` or `act`, found `{other}`"),
                ))
            }
        };
        let count = number(count_token, line)?;
        let monoid = match monoid_name {
            Some(m) => Some(
                doc.monoid(m.text)
                    .map_err(|_| Error::UnknownMonoidReference(m.text.to_string()))?
                    .clone(),
            ),
            None => None,
        };
        if !names.insert(name.text.to_string()) {
            return Err(Error::DuplicateName(name.text.to_string()));
        }
        let width = monoid.as_ref().map_or(count, |m| m.size());
        let mut rows = Vec::with_capacity(count);
        for _ in 0..count {
            let Some((row_line, row)) = lines.get(next) else {
                return Err(syntax(
                    last_line,
                    1,
                    format!("`{}` is missing table rows", name.text),
                ));
            };
            next += 1;
            if matches!(row[0].text, "monoid" | "act") {
                return Err(syntax(
                    *row_line,
                    1,
                    format!("`{}` is missing table rows", name.text),
                ));
            }
            if row.len() != width {
                let col = row.get(width).map_or_else(
                    || row[row.len() - 1].col + row[row.len() - 1].text.len(),
                    |t| t.col,
                );
                return Err(syntax(
                    *row_line,
                    col,
                    format!("expected {width} entries, found {}", row.len()),
                ));
            }
            rows.push(
                row.iter()
                    .map(|t| number(t, *row_line))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let invalid = |e: Error| Error::InvalidDefinition {
            name: name.text.to_string(),
            source: Box::new(e),
        };
        match monoid {
            None => {
                let m = if count == 0 {
                    Err(Error::EmptyCarrier)
                } else {
                    Monoid::from_rows(&rows)
                };
                doc.monoids.push(NamedMonoid {
                    name: name.text.to_string(),
                    monoid: Arc::new(m.map_err(invalid)?),
                });
            }
            Some(m) => {
                let act = Act::new(m, &rows).map_err(invalid)?;
                doc.acts.push(NamedAct {
                    name: name.text.to_string(),
                    monoid: monoid_name.map(|t| t.text.to_string()).unwrap_or_default(),
                    act,
                });
            }
        }
    }
    Ok(doc)
}

/// Lowercase hex SHA-256.
pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Properties and chain data of one named act.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActReport {
    pub name: String,
    #[serde(flatten)]
    pub properties: PropertyReport,
    pub chains: Vec<ChainReport>,
}

impl ActReport {
    pub fn new(name: impl Into<String>, classification: Classification) -> Self {
        ActReport {
            name: name.into(),
            properties: classification.properties,
            chains: classification.chains,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub input_digest: String,
    pub reports: Vec<ActReport>,
    pub verdicts: Vec<Verdict>,
}

impl ReportDocument {
    pub fn new(input: &[u8], reports: Vec<ActReport>, verdicts: Vec<Verdict>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            input_digest: digest(input),
            reports,
            verdicts,
        }
    }

    /// Pretty JSON with object keys sorted, ending in a newline.
    pub fn to_json(&self) -> String {
        to_sorted_json(self)
    }
}

/// Serializes through `serde_json::Value`, whose maps keep keys sorted.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("report types serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

/// Two-column table of every property flag.
pub fn render_report(report: &ActReport) -> String {
    let p = &report.properties;
    let rows: [(&str, String); 18] = [
        ("act size", p.act_size.to_string()),
        ("|End|", p.end_size.to_string()),
        ("hopfian", p.hopfian.to_string()),
        ("co-hopfian", p.co_hopfian.to_string()),
        ("strongly hopfian", p.strongly_hopfian.to_string()),
        ("  index", p.strongly_hopfian_index.to_string()),
        ("strongly co-hopfian", p.strongly_co_hopfian.to_string()),
        ("  index", p.strongly_co_hopfian_index.to_string()),
        ("fitting", p.fitting.to_string()),
        ("noetherian", p.noetherian.to_string()),
        ("artinian", p.artinian.to_string()),
        ("simple", p.simple.to_string()),
        ("quasi-injective", p.quasi_injective.to_string()),
        ("quasi-projective", p.quasi_projective.to_string()),
        ("End commutative", p.end_commutative.to_string()),
        (
            "End strongly pi-regular",
            p.end_strongly_pi_regular.to_string(),
        ),
        ("congruences", p.congruence_count.to_string()),
        ("longest chain", p.max_chain_length.to_string()),
    ];
    let mut out = format!("act {}\n", report.name);
    for (label, value) in rows {
        let _ = writeln!(out, "  {label:<25} {value}");
    }
    let _ = writeln!(out, "  {:<4} {:<16} {:>3} {:>3}", "#", "map", "k", "i");
    for c in &report.chains {
        let _ = writeln!(
            out,
            "  {:<4} {:<16} {:>3} {:>3}",
            c.endomorphism,
            format!("{:?}", c.map),
            c.k_index,
            c.i_index
        );
    }
    out
}

/// One line per theorem, then the detail of any counterexample.
pub fn render_verdicts(verdicts: &[Verdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let _ = writeln!(
            out,
            "{:<4} {:<5} checked {:>6}  non-vacuous {:>6}  vacuous {:>6}  {}",
            v.theorem.to_string(),
            if v.passed { "ok" } else { "FAIL" },
            v.instances_checked,
            v.non_vacuous,
            v.vacuous,
            v.statement
        );
        for (k, n) in &v.counters {
            let _ = writeln!(out, "       {k}: {n}");
        }
        if let Some(w) = &v.counterexample {
            let _ = writeln!(out, "       counterexample: {}", w.detail);
            let _ = writeln!(
                out,
                "       {}",
                serde_json::to_string(&w.instance).unwrap_or_default()
            );
        }
    }
    out
}
