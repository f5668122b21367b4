//! Coefficient reports and their plain, CSV and JSON renderings.
//!
//! Every rendering can be parsed back into [`CoefficientRow`]s, so the three
//! formats can be checked against each other.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use gjcluster::series::{format_rational, parse_rational, variable_name, Rational, TPoly, XSeries};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

/// One named series: coefficients of `x^0..=x^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Block {
    pub name: String,
    pub rows: Vec<TPoly>,
    /// Remarks attached to single coefficients.
    pub notes: BTreeMap<usize, String>,
}

impl Block {
    pub fn new(name: impl Into<String>, series: &XSeries) -> Self {
        Block {
            name: name.into(),
            rows: series.coeffs().to_vec(),
            notes: BTreeMap::new(),
        }
    }

    pub fn with_note(mut self, n: usize, note: impl Into<String>) -> Self {
        if n < self.rows.len() {
            self.notes.insert(n, note.into());
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub title: String,
    pub arity: usize,
    pub blocks: Vec<Block>,
}

/// Format-independent content of one coefficient: terms sorted by exponent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoefficientRow {
    pub series: String,
    pub n: usize,
    pub terms: Vec<(Vec<u32>, String)>,
}

impl CoefficientRow {
    fn from_poly(series: &str, n: usize, poly: &TPoly) -> Self {
        let mut terms: Vec<(Vec<u32>, String)> = poly
            .terms()
            .map(|(e, c)| (e.to_vec(), format_rational(c)))
            .collect();
        terms.sort();
        CoefficientRow {
            series: series.to_string(),
            n,
            terms,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonReport {
    title: String,
    variables: Vec<String>,
    series: Vec<JsonSeries>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonSeries {
    name: String,
    rows: Vec<JsonRow>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonRow {
    n: usize,
    terms: Vec<JsonTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTerm {
    exponents: Vec<u32>,
    coefficient: String,
}

#[derive(Serialize, Deserialize)]
struct CsvRecord {
    series: String,
    n: usize,
    exponents: String,
    coefficient: String,
    note: String,
}

const PLAIN_SEP: &str = " | ";

impl Report {
    pub fn new(title: impl Into<String>, arity: usize, blocks: Vec<Block>) -> Self {
        Report {
            title: title.into(),
            arity,
            blocks,
        }
    }

    pub fn variables(&self) -> Vec<String> {
        (0..self.arity)
            .map(|v| variable_name(v, self.arity))
            .collect()
    }

    /// Evaluates every coefficient at the given t-values.
    pub fn specialize(&self, values: &[Rational]) -> Result<Report> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let rows = b
                    .rows
                    .iter()
                    .map(|p| Ok(TPoly::constant(p.eval(values)?, 0)))
                    .collect::<Result<Vec<_>, gjcluster::Error>>()?;
                Ok(Block {
                    name: b.name.clone(),
                    rows,
                    notes: b.notes.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Report {
            title: self.title.clone(),
            arity: 0,
            blocks,
        })
    }

    pub fn rows(&self) -> Vec<CoefficientRow> {
        self.blocks
            .iter()
            .flat_map(|b| {
                b.rows
                    .iter()
                    .enumerate()
                    .map(|(n, p)| CoefficientRow::from_poly(&b.name, n, p))
            })
            .collect()
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Plain => Ok(self.render_plain()),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_plain(&self) -> String {
        let vars = self.variables();
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.title);
        let _ = writeln!(
            out,
            "# variables: {}",
            if vars.is_empty() {
                "none".to_string()
            } else {
                vars.join(", ")
            }
        );
        for b in &self.blocks {
            let _ = writeln!(out, "## {}", b.name);
            let width = b.rows.len().saturating_sub(1).to_string().len().max(2);
            for (n, p) in b.rows.iter().enumerate() {
                let _ = write!(out, "{n:>width$}{PLAIN_SEP}{p}");
                if let Some(note) = b.notes.get(&n) {
                    let _ = write!(out, "{PLAIN_SEP}note: {note}");
                }
                out.push('\n');
            }
        }
        out
    }

    fn render_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for b in &self.blocks {
            for (n, p) in b.rows.iter().enumerate() {
                let mut note = b.notes.get(&n).cloned().unwrap_or_default();
                let mut terms: Vec<(String, String)> = p
                    .sorted_terms()
                    .into_iter()
                    .map(|(e, c)| (join_exponents(e), format_rational(c)))
                    .collect();
                if terms.is_empty() {
                    terms.push((join_exponents(&vec![0; self.arity]), "0".into()));
                }
                for (exponents, coefficient) in terms {
                    w.serialize(CsvRecord {
                        series: b.name.clone(),
                        n,
                        exponents,
                        coefficient,
                        note: std::mem::take(&mut note),
                    })?;
                }
            }
        }
        Ok(String::from_utf8(
            w.into_inner().map_err(|e| anyhow!("csv: {e}"))?,
        )?)
    }

    fn render_json(&self) -> Result<String> {
        let series = self
            .blocks
            .iter()
            .map(|b| JsonSeries {
                name: b.name.clone(),
                rows: b
                    .rows
                    .iter()
                    .enumerate()
                    .map(|(n, p)| JsonRow {
                        n,
                        terms: p
                            .sorted_terms()
                            .into_iter()
                            .map(|(e, c)| JsonTerm {
                                exponents: e.to_vec(),
                                coefficient: format_rational(c),
                            })
                            .collect(),
                        note: b.notes.get(&n).cloned(),
                    })
                    .collect(),
            })
            .collect();
        let doc = JsonReport {
            title: self.title.clone(),
            variables: self.variables(),
            series,
        };
        Ok(serde_json::to_string_pretty(&doc)? + "\n")
    }
}

fn join_exponents(e: &[u32]) -> String {
    e.iter().map(u32::to_string).collect::<Vec<_>>().join(";")
}

fn split_exponents(s: &str) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|e| {
            e.parse::<u32>()
                .with_context(|| format!("bad exponent {e:?}"))
        })
        .collect()
}

fn canonical(series: &str, n: usize, mut terms: Vec<(Vec<u32>, Rational)>) -> CoefficientRow {
    terms.retain(|(_, c)| c != &Rational::from_integer(0.into()));
    let mut terms: Vec<(Vec<u32>, String)> = terms
        .into_iter()
        .map(|(e, c)| (e, format_rational(&c)))
        .collect();
    terms.sort();
    CoefficientRow {
        series: series.to_string(),
        n,
        terms,
    }
}

pub fn parse_plain(text: &str) -> Result<Vec<CoefficientRow>> {
    let mut arity = None;
    let mut series: Option<String> = None;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let at = || format!("line {}", i + 1);
        if let Some(name) = line.strip_prefix("## ") {
            series = Some(name.to_string());
        } else if let Some(vars) = line.strip_prefix("# variables: ") {
            arity = Some(if vars == "none" {
                0
            } else {
                vars.split(", ").count()
            });
        } else if line.starts_with("# ") || line.is_empty() {
            continue;
        } else {
            let mut parts = line.split(PLAIN_SEP);
            let n: usize = parts.next().unwrap_or("").trim().parse().with_context(at)?;
            let poly = parts
                .next()
                .ok_or_else(|| anyhow!("{}: missing coefficient", at()))?;
            let arity =
                arity.ok_or_else(|| anyhow!("{}: coefficient before the variables line", at()))?;
            let name = series
                .as_deref()
                .ok_or_else(|| anyhow!("{}: coefficient outside a series", at()))?;
            let p = TPoly::parse(poly, arity).with_context(at)?;
            out.push(CoefficientRow::from_poly(name, n, &p));
        }
    }
    Ok(out)
}

type Term = (Vec<u32>, Rational);

pub fn parse_csv(text: &str) -> Result<Vec<CoefficientRow>> {
    let mut grouped: Vec<(String, usize, Vec<Term>)> = Vec::new();
    for record in csv::Reader::from_reader(text.as_bytes()).deserialize() {
        let r: CsvRecord = record?;
        let term = (
            split_exponents(&r.exponents)?,
            parse_rational(&r.coefficient)?,
        );
        match grouped.last_mut() {
            Some((s, n, terms)) if *s == r.series && *n == r.n => terms.push(term),
            _ => grouped.push((r.series, r.n, vec![term])),
        }
    }
    Ok(grouped
        .into_iter()
        .map(|(s, n, t)| canonical(&s, n, t))
        .collect())
}

pub fn parse_json(text: &str) -> Result<Vec<CoefficientRow>> {
    let doc: JsonReport = serde_json::from_str(text)?;
    let mut out = Vec::new();
    for s in doc.series {
        for row in s.rows {
            let terms = row
                .terms
                .into_iter()
                .map(|t| Ok((t.exponents, parse_rational(&t.coefficient)?)))
                .collect::<Result<Vec<_>>>()?;
            out.push(canonical(&s.name, row.n, terms));
        }
    }
    Ok(out)
}

pub fn parse(format: Format, text: &str) -> Result<Vec<CoefficientRow>> {
    match format {
        Format::Plain => parse_plain(text),
        Format::Csv => parse_csv(text),
        Format::Json => parse_json(text),
    }
}

/// Parses `--t` values: one value for every variable, a comma list with one
/// value per variable, or `t1=a,t2=b` assignments.
pub fn parse_assignment(spec: &str, arity: usize) -> Result<Vec<Rational>> {
    let items: Vec<&str> = spec.split(',').map(str::trim).collect();
    if items.iter().any(|i| i.contains('=')) {
        let mut values: Vec<Option<Rational>> = vec![None; arity];
        for item in items {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| anyhow!("expected name=value, got {item:?}"))?;
            let var = (0..arity)
                .find(|&v| variable_name(v, arity) == name.trim())
                .ok_or_else(|| anyhow!("unknown variable {:?}", name.trim()))?;
            values[var] = Some(parse_rational(value)?);
        }
        return values
            .into_iter()
            .enumerate()
            .map(|(v, x)| x.ok_or_else(|| anyhow!("no value for {}", variable_name(v, arity))))
            .collect();
    }
    let values = items
        .iter()
        .map(|i| parse_rational(i))
        .collect::<Result<Vec<_>, _>>()?;
    match values.len() {
        1 => Ok(vec![values[0].clone(); arity]),
        k if k == arity => Ok(values),
        k => bail!("{k} values given for {arity} variables"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gjcluster::series::{rat, ratio};

    fn sample() -> Report {
        let s = XSeries::from_terms(
            4,
            2,
            &[
                (1, 0, &[0, 0]),
                (2, 2, &[1, 0]),
                (-1, 3, &[2, 1]),
                (3, 3, &[0, 0]),
            ],
        );
        let t = XSeries::from_ints(&[1, 0, 5], 4, 0).with_arity(2).unwrap();
        Report::new(
            "sample",
            2,
            vec![
                Block::new("F[1,2]", &s).with_note(3, "a, \"quoted\" note"),
                Block::new("G", &t),
            ],
        )
    }

    #[test]
    fn formats_round_trip() {
        let r = sample();
        let rows = r.rows();
        assert_eq!(rows.len(), 10);
        for f in [Format::Plain, Format::Csv, Format::Json] {
            assert_eq!(parse(f, &r.render(f).unwrap()).unwrap(), rows, "{f:?}");
        }
    }

    #[test]
    fn plain_layout() {
        let text = sample().render(Format::Plain).unwrap();
        assert!(text.contains("# variables: t1, t2\n"));
        assert!(text.contains(" 3 | 3 - t1^2*t2 | note: a, \"quoted\" note\n"));
        assert!(text.contains(" 1 | 0\n"));
    }

    #[test]
    fn specialization() {
        let r = sample().specialize(&[rat(1), rat(1)]).unwrap();
        assert_eq!(r.arity, 0);
        assert_eq!(r.blocks[0].rows[3], TPoly::constant(rat(2), 0));
        assert_eq!(
            parse_plain(&r.render(Format::Plain).unwrap()).unwrap(),
            r.rows()
        );
    }

    #[test]
    fn assignments() {
        assert_eq!(parse_assignment("0", 2).unwrap(), vec![rat(0), rat(0)]);
        assert_eq!(
            parse_assignment("1/2, 3", 2).unwrap(),
            vec![ratio(1, 2), rat(3)]
        );
        assert_eq!(
            parse_assignment("t2=1,t1=0", 2).unwrap(),
            vec![rat(0), rat(1)]
        );
        assert_eq!(parse_assignment("t=2", 1).unwrap(), vec![rat(2)]);
        assert!(parse_assignment("t1=0", 2).is_err());
        assert!(parse_assignment("1,2,3", 2).is_err());
        assert!(parse_assignment("t3=1", 2).is_err());
    }
}
