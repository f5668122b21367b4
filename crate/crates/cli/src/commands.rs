use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use gjcluster::cluster::{
    cluster_gf, enumerate_clusters, Alphabet, Homomorphism, PatternSet, Word,
};
use gjcluster::contfrac::{
    bounded_ratio, cf_eval, cf_spec, closed_form, restricted_cf_spec, ClosedForm, Family,
    Restricted,
};
use gjcluster::network::{
    gj_network, gj_network_weighted, validate_network, Mask, MonoidNetwork, NetworkFile, Walk,
    DEFAULT_WALK_BUDGET,
};
use gjcluster::paths::{
    ascents, count_stat, enumerate_paths, gf_asc_height_restricted, gf_asc_start_restricted,
    gf_pv_height_restricted, gf_statistic, occurrence_heights, HeightSet, PathKind, Statistic, D,
    DEFAULT_PATH_BUDGET, U,
};
use gjcluster::series::{rat, TPoly, XSeries};
use gjcluster::verify::{run_suite, Suite, SuiteReport};
use serde::Serialize;

use crate::render::{parse_assignment, Block, Format, Report};

/// Applies `--t` if given.
pub fn finish(report: Report, t: Option<&str>, format: Format) -> Result<String> {
    let report = match t {
        Some(spec) => report.specialize(&parse_assignment(spec, report.arity)?)?,
        None => report,
    };
    report.render(format)
}

/// Selectable generating functions for the `series` command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesName {
    Stat(Statistic),
    AscentEnds,
    AscentStarts,
    PeakValleyHeights,
}

impl FromStr for SeriesName {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "asc" => SeriesName::Stat(Statistic::Ascents),
            "peak" => SeriesName::Stat(Statistic::Peaks),
            "valley" => SeriesName::Stat(Statistic::Valleys),
            "pv" => SeriesName::Stat(Statistic::PeaksValleys),
            "plt" => SeriesName::Stat(Statistic::AllPlateaus),
            "asc-ends" => SeriesName::AscentEnds,
            "asc-starts" => SeriesName::AscentStarts,
            "pv-heights" => SeriesName::PeakValleyHeights,
            other => match other.strip_prefix("plt").and_then(|k| k.parse().ok()) {
                Some(k) => SeriesName::Stat(Statistic::Plateaus(k)),
                None => bail!(
                    "unknown series {other:?}; expected asc, peak, valley, pv, plt, plt<k>, asc-ends, asc-starts or pv-heights"
                ),
            },
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Route {
    /// Inverse of the network's cluster-corrected transfer matrix.
    #[default]
    Network,
    /// Finite continued fraction (bounded height only).
    Cf,
    /// Ratio of recurrence polynomials (bounded height only).
    Ratio,
    /// Quadratic closed form (unbounded height only).
    Closed,
    /// Tally over every enumerated path.
    Oracle,
}

#[derive(Clone, Debug)]
pub struct SeriesRequest {
    pub name: SeriesName,
    pub bound: Option<usize>,
    pub heights: HeightSet,
    pub peaks: HeightSet,
    pub valleys: HeightSet,
    pub route: Route,
    pub n: usize,
}

impl SeriesRequest {
    fn restriction(&self) -> Option<Restricted> {
        match self.name {
            SeriesName::AscentEnds => Some(Restricted::AscentEnds(self.heights.clone())),
            SeriesName::PeakValleyHeights => Some(Restricted::PeaksValleys {
                peaks: self.peaks.clone(),
                valleys: self.valleys.clone(),
            }),
            _ => None,
        }
    }

    fn family(&self) -> Result<Family> {
        match self.name {
            SeriesName::Stat(Statistic::Ascents) => Ok(Family::Ascents),
            SeriesName::Stat(Statistic::Plateaus(k)) => Ok(Family::Plateaus(k)),
            SeriesName::Stat(Statistic::AllPlateaus) => Ok(Family::AllPlateaus),
            SeriesName::Stat(Statistic::PeaksValleys) => Ok(Family::PeaksValleys),
            _ => bail!("route {:?} is not available for this series", self.route),
        }
    }

    fn label(&self) -> String {
        let base = match self.name {
            SeriesName::Stat(Statistic::Ascents) => "ascents".to_string(),
            SeriesName::Stat(Statistic::Peaks) => "peaks".into(),
            SeriesName::Stat(Statistic::Valleys) => "valleys".into(),
            SeriesName::Stat(Statistic::PeaksValleys) => "peaks (t1) and valleys (t2)".into(),
            SeriesName::Stat(Statistic::AllPlateaus) => "plateaus".into(),
            SeriesName::Stat(Statistic::Plateaus(k)) => format!("plateaus of length {k}"),
            SeriesName::AscentEnds => format!("ascents ending in {}", self.heights),
            SeriesName::AscentStarts => format!("ascents starting in {}", self.heights),
            SeriesName::PeakValleyHeights => {
                format!("peaks in {}, valleys in {}", self.peaks, self.valleys)
            }
        };
        match self.bound {
            Some(m) => format!("{base}, height <= {m}"),
            None => base,
        }
    }

    fn arity(&self) -> usize {
        match self.name {
            SeriesName::Stat(s) => s.arity(),
            _ => 0,
        }
    }
}

pub fn series(req: &SeriesRequest) -> Result<Report> {
    let n = req.n;
    let bounded = || {
        req.bound
            .ok_or_else(|| anyhow!("route {:?} needs --bound", req.route))
    };
    let s: XSeries = match req.route {
        Route::Network => match req.name {
            SeriesName::Stat(s) => gf_statistic(s, req.bound, n)?,
            SeriesName::AscentEnds => gf_asc_height_restricted(&req.heights, req.bound, n)?,
            SeriesName::AscentStarts => gf_asc_start_restricted(&req.heights, req.bound, n)?,
            SeriesName::PeakValleyHeights => {
                gf_pv_height_restricted(&req.peaks, &req.valleys, req.bound, n)?
            }
        },
        Route::Cf => match req.restriction() {
            Some(r) => cf_eval(&restricted_cf_spec(&r, bounded()?, n)?, n)?,
            None => cf_eval(&cf_spec(req.family()?, bounded()?, n)?, n)?,
        },
        Route::Ratio => bounded_ratio(req.family()?, bounded()?, n)?,
        Route::Closed => {
            if req.bound.is_some() {
                bail!("closed forms describe unbounded height; drop --bound");
            }
            let form = match req.restriction() {
                Some(r) => ClosedForm::RESTRICTED
                    .into_iter()
                    .find(|f| f.restriction().as_ref() == Some(&r))
                    .ok_or_else(|| anyhow!("no closed form for {}", req.label()))?,
                None => match req.family()? {
                    Family::Ascents => ClosedForm::Ascents,
                    Family::Plateaus(k) => ClosedForm::Plateaus(k),
                    Family::AllPlateaus => ClosedForm::AllPlateaus,
                    Family::PeaksValleys => ClosedForm::PeaksValleys,
                },
            };
            closed_form(form, n)?
        }
        Route::Oracle => oracle_series(req)?,
    };
    Ok(Report::new(
        format!(
            "Motzkin paths by {}, {} route",
            req.label(),
            format!("{:?}", req.route).to_lowercase()
        ),
        req.arity(),
        vec![Block::new(series_id(req), &s)],
    ))
}

fn series_id(req: &SeriesRequest) -> String {
    let base = match req.name {
        SeriesName::Stat(Statistic::Ascents) => "asc".to_string(),
        SeriesName::Stat(Statistic::Peaks) => "peak".into(),
        SeriesName::Stat(Statistic::Valleys) => "valley".into(),
        SeriesName::Stat(Statistic::PeaksValleys) => "pv".into(),
        SeriesName::Stat(Statistic::AllPlateaus) => "plt".into(),
        SeriesName::Stat(Statistic::Plateaus(k)) => format!("plt{k}"),
        SeriesName::AscentEnds => format!("asc-ends {}", req.heights),
        SeriesName::AscentStarts => format!("asc-starts {}", req.heights),
        SeriesName::PeakValleyHeights => format!("pv-heights {} {}", req.peaks, req.valleys),
    };
    match req.bound {
        Some(m) => format!("{base} m={m}"),
        None => base,
    }
}

fn oracle_series(req: &SeriesRequest) -> Result<XSeries> {
    let arity = req.arity();
    let mut coeffs = Vec::with_capacity(req.n + 1);
    for k in 0..=req.n {
        let paths = enumerate_paths(PathKind::Motzkin, k, req.bound, DEFAULT_PATH_BUDGET)?;
        let mut tally = TPoly::zero(arity);
        for p in &paths {
            let keep = match req.name {
                SeriesName::Stat(s) => {
                    tally = &tally + &TPoly::monomial(rat(1), count_stat(p, s));
                    continue;
                }
                SeriesName::AscentEnds => ascents(p).iter().all(|&(_, e)| req.heights.contains(e)),
                SeriesName::AscentStarts => {
                    ascents(p).iter().all(|&(s, _)| req.heights.contains(s))
                }
                SeriesName::PeakValleyHeights => {
                    occurrence_heights(p, &[U, D])
                        .iter()
                        .all(|&h| req.peaks.contains(h))
                        && occurrence_heights(p, &[D, U])
                            .iter()
                            .all(|&h| req.valleys.contains(h))
                }
            };
            if keep {
                tally = &tally + &TPoly::one(0);
            }
        }
        coeffs.push(tally);
    }
    Ok(XSeries::from_coeffs(coeffs)?)
}

#[derive(Clone, Debug)]
pub struct NetworkRequest {
    /// 1-based `(row, column)`.
    pub entry: Option<(usize, usize)>,
    pub avoid: Vec<String>,
    pub prob: bool,
    pub n: usize,
}

pub fn parse_entry(s: &str) -> Result<(usize, usize)> {
    let (i, j) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("expected i,j, got {s:?}"))?;
    let parse = |v: &str| -> Result<usize> {
        let v: usize = v
            .trim()
            .parse()
            .with_context(|| format!("bad entry {s:?}"))?;
        if v == 0 {
            bail!("entries are numbered from 1");
        }
        Ok(v)
    };
    Ok((parse(i)?, parse(j)?))
}

/// Splits an `--avoid` word into letters: on commas if present, otherwise
/// into characters.
fn parse_avoid(alphabet: &Alphabet, word: &str) -> Result<Word> {
    let names: Vec<String> = if word.contains(',') {
        word.split(',').map(|l| l.trim().to_string()).collect()
    } else {
        word.chars().map(String::from).collect()
    };
    Ok(alphabet.word_from_names(&names)?)
}

fn render_walk(w: &Walk, alphabet: &Alphabet) -> String {
    let mut s = (w.start + 1).to_string();
    for &(l, v) in &w.steps {
        let _ = write!(s, " -{}-> {}", alphabet.name(l), v + 1);
    }
    s
}

/// Longest word length checked for unique decoding.
const DECODING_CHECK_LEN: usize = 10;

pub fn check_decoding(net: &MonoidNetwork, n: usize) -> Result<()> {
    match validate_network(net, n.clamp(1, DECODING_CHECK_LEN), DEFAULT_WALK_BUDGET) {
        Ok(None) => Ok(()),
        Ok(Some(amb)) => bail!(
            "invalid network: the same word labels two walks:\n  {}\n  {}",
            render_walk(&amb.first, net.alphabet()),
            render_walk(&amb.second, net.alphabet())
        ),
        Err(gjcluster::Error::WalkBudget { depth, .. }) => {
            eprintln!("note: unique decoding checked for words up to length {depth}");
            Ok(())
        }
        Err(e) => Err(e.into()),
    }
}

pub fn network(path: &Path, req: &NetworkRequest) -> Result<Report> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = NetworkFile::parse(&text)?;
    let net = file.network()?;
    check_decoding(&net, req.n)?;
    let alphabet = net.alphabet().clone();
    let patterns = if req.avoid.is_empty() {
        file.patterns(&alphabet)?
    } else {
        PatternSet::single_variable(
            req.avoid
                .iter()
                .map(|w| parse_avoid(&alphabet, w))
                .collect::<Result<_>>()?,
        )?
    };
    let hom = Homomorphism::uniform(alphabet.len(), req.n, patterns.arity());
    let matrix = if req.prob {
        net.check_stochastic()?;
        gj_network_weighted(&net, &patterns, &hom, &Mask::All)?
    } else {
        gj_network(&net, &patterns, &hom, &Mask::All)?
    };
    let matrix = if req.avoid.is_empty() {
        matrix
    } else {
        matrix.specialize(&[rat(0)])?
    };
    let dim = net.vertex_count();
    let entries: Vec<(usize, usize)> = match req.entry {
        Some((i, j)) => {
            if i > dim || j > dim {
                bail!("entry ({i},{j}) outside a network with {dim} vertices");
            }
            vec![(i, j)]
        }
        None => (1..=dim)
            .flat_map(|i| (1..=dim).map(move |j| (i, j)))
            .collect(),
    };
    let blocks = entries
        .into_iter()
        .map(|(i, j)| Block::new(format!("F[{i},{j}]"), matrix.get(i - 1, j - 1)))
        .collect();
    let what = match (req.prob, req.avoid.is_empty()) {
        (true, false) => "avoidance probabilities",
        (true, true) => "weighted cluster generating function",
        (false, false) => "avoiding words",
        (false, true) => "cluster generating function",
    };
    let name = path.file_name().map_or_else(
        || path.display().to_string(),
        |f| f.to_string_lossy().into_owned(),
    );
    Ok(Report::new(
        format!("{name}: {what}"),
        matrix.arity(),
        blocks,
    ))
}

#[derive(Serialize)]
struct ClusterRecord {
    word: String,
    marks: Vec<MarkRecord>,
}

#[derive(Serialize)]
struct MarkRecord {
    start: usize,
    pattern: String,
}

#[derive(Serialize)]
struct ClusterListing {
    patterns: Vec<String>,
    clusters: Vec<ClusterRecord>,
}

/// Clusters of length `<= n` for patterns over their own letters, each
/// pattern with its own marking variable.
pub fn cluster(avoid: &[String], n: usize, format: Format) -> Result<String> {
    if avoid.is_empty() {
        bail!("give at least one pattern with --avoid");
    }
    let letters: BTreeSet<char> = avoid.iter().flat_map(|w| w.chars()).collect();
    let alphabet = Alphabet::new(letters.iter().map(char::to_string))?;
    let words = avoid
        .iter()
        .map(|w| alphabet.parse_word(w))
        .collect::<Result<Vec<_>, _>>()?;
    let patterns = PatternSet::distinct_variables(words)?;
    let clusters = enumerate_clusters(&patterns, n);
    let records: Vec<ClusterRecord> = clusters
        .iter()
        .map(|c| ClusterRecord {
            word: alphabet.render(c.word()),
            marks: c
                .marks()
                .iter()
                .map(|m| MarkRecord {
                    start: m.start,
                    pattern: alphabet.render(&patterns.get(m.pattern).word),
                })
                .collect(),
        })
        .collect();
    let gf = cluster_gf(
        &patterns,
        &Homomorphism::uniform(alphabet.len(), n, patterns.arity()),
    )?;
    let report = Report::new(
        format!("clusters of {}", avoid.join(", ")),
        patterns.arity(),
        vec![Block::new("L", &gf)],
    );
    match format {
        Format::Plain => {
            let mut out = String::new();
            let _ = writeln!(out, "# {} clusters of length <= {n}", records.len());
            for c in &clusters {
                let _ = writeln!(out, "{}", c.display(&alphabet));
            }
            Ok(out + &report.render(Format::Plain)?)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["word", "start", "pattern"])?;
            for r in &records {
                for m in &r.marks {
                    w.write_record([r.word.as_str(), &m.start.to_string(), &m.pattern])?;
                }
            }
            Ok(String::from_utf8(
                w.into_inner().map_err(|e| anyhow!("csv: {e}"))?,
            )?)
        }
        Format::Json => {
            let listing = ClusterListing {
                patterns: avoid.to_vec(),
                clusters: records,
            };
            Ok(serde_json::to_string_pretty(&listing)? + "\n")
        }
    }
}

#[derive(Serialize)]
struct SuiteSummary<'a> {
    suite: &'a str,
    checks: usize,
    failed: usize,
    first_failure: Option<String>,
    notes: &'a [String],
}

/// Runs the suites on separate threads; output follows the given order.
pub fn run_suites(suites: &[Suite], n: usize) -> Result<Vec<SuiteReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| scope.spawn(move || run_suite(s, n)))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .map_err(|_| anyhow!("verification thread panicked"))?
                    .map_err(Into::into)
            })
            .collect()
    })
}

pub fn render_verification(reports: &[SuiteReport], format: Format) -> Result<String> {
    let summaries: Vec<SuiteSummary> = reports
        .iter()
        .map(|r| SuiteSummary {
            suite: r.suite.name(),
            checks: r.checks(),
            failed: r.failures.len(),
            first_failure: r.failures.first().map(ToString::to_string),
            notes: &r.notes,
        })
        .collect();
    match format {
        Format::Plain => {
            let mut out = String::new();
            for s in &summaries {
                let status = if s.failed == 0 { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{:<14}{status}  {} checks, {} failed",
                    s.suite, s.checks, s.failed
                );
                if let Some(f) = &s.first_failure {
                    let _ = writeln!(out, "  first failure: {f}");
                }
                for note in s.notes {
                    let _ = writeln!(out, "  note: {note}");
                }
            }
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "checks", "failed", "first_failure"])?;
            for s in &summaries {
                w.write_record([
                    s.suite,
                    &s.checks.to_string(),
                    &s.failed.to_string(),
                    s.first_failure.as_deref().unwrap_or(""),
                ])?;
            }
            Ok(String::from_utf8(
                w.into_inner().map_err(|e| anyhow!("csv: {e}"))?,
            )?)
        }
        Format::Json => Ok(serde_json::to_string_pretty(&summaries)? + "\n"),
    }
}

pub fn parse_suites(spec: &str) -> Result<Vec<Suite>> {
    if spec == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    spec.split(',')
        .map(|s| s.trim().parse::<Suite>().map_err(Into::into))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn request(name: &str, route: Route, bound: Option<usize>) -> SeriesRequest {
        SeriesRequest {
            name: name.parse().unwrap(),
            bound,
            heights: HeightSet::Even,
            peaks: HeightSet::Odd,
            valleys: HeightSet::EvenWithZero,
            route,
            n: 8,
        }
    }

    #[test]
    fn routes_give_equal_rows() {
        for name in ["asc", "plt2", "plt", "pv"] {
            let net = series(&request(name, Route::Network, Some(2)))
                .unwrap()
                .rows();
            for route in [Route::Cf, Route::Ratio, Route::Oracle] {
                assert_eq!(
                    series(&request(name, route, Some(2))).unwrap().rows(),
                    net,
                    "{name} {route:?}"
                );
            }
            let net = series(&request(name, Route::Network, None)).unwrap().rows();
            assert_eq!(
                series(&request(name, Route::Closed, None)).unwrap().rows(),
                net,
                "{name}"
            );
        }
        for name in ["asc-ends", "pv-heights"] {
            let net = series(&request(name, Route::Network, None)).unwrap().rows();
            assert_eq!(
                series(&request(name, Route::Closed, None)).unwrap().rows(),
                net,
                "{name}"
            );
            assert_eq!(
                series(&request(name, Route::Oracle, None)).unwrap().rows(),
                net,
                "{name}"
            );
        }
    }

    #[test]
    fn unavailable_routes() {
        assert!(series(&request("peak", Route::Cf, Some(2))).is_err());
        assert!(series(&request("asc", Route::Cf, None)).is_err());
        assert!(series(&request("asc", Route::Closed, Some(3))).is_err());
        assert!(series(&request("asc-starts", Route::Closed, None)).is_err());
        assert!("plateau".parse::<SeriesName>().is_err());
    }

    #[test]
    fn entries_and_suites() {
        assert_eq!(parse_entry("1,2").unwrap(), (1, 2));
        assert!(parse_entry("0,1").is_err());
        assert!(parse_entry("12").is_err());
        assert_eq!(parse_suites("all").unwrap().len(), 6);
        assert_eq!(
            parse_suites("routes,oracle").unwrap(),
            vec![Suite::Routes, Suite::Oracle]
        );
        assert!(parse_suites("routes,bogus").is_err());
    }

    #[test]
    fn cluster_listing() {
        let out = cluster(&["aba".into(), "abab".into()], 7, Format::Plain).unwrap();
        assert!(out.contains("# variables: t1, t2"));
        assert!(cluster(&[], 4, Format::Plain).is_err());
        let json: serde_json::Value =
            serde_json::from_str(&cluster(&["aa".into()], 4, Format::Json).unwrap()).unwrap();
        assert_eq!(json["clusters"].as_array().unwrap().len(), 3);
    }
}
