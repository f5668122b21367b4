//! Lattice paths as walks on height-indexed networks. Vertex `h` is height
//! `h`; a path of length `n` is a closed walk at vertex 0.
//!
//! Occurrence heights are taken at an occurrence's first step.

mod closed;
mod heights;
mod oracle;

use std::collections::BTreeSet;

pub use closed::{all_plateaus_cluster_matrix, gf_pv_height_restricted_closed, pv_cluster_matrix};
pub use heights::HeightSet;
pub use oracle::{
    ascents, count_paths, count_stat, enumerate_paths, heights, occurrence_heights, oracle_count,
    oracle_distribution, Statistic, DEFAULT_PATH_BUDGET,
};

use crate::cluster::{Alphabet, Homomorphism, PatternSet, Word};
use crate::error::{Error, Result};
use crate::network::{gj_network, Mask, MonoidNetwork};
use crate::series::{rat, XSeries};

pub const U: usize = 0;
pub const D: usize = 1;
pub const F: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathKind {
    Dyck,
    Motzkin,
    /// Flat steps have length 2.
    Schroeder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathModel {
    pub kind: PathKind,
    /// Maximum height.
    pub bound: usize,
    /// Adds a source vertex `m + 1` whose only arc is a U step to height 1.
    pub ascent_start: bool,
}

impl PathModel {
    pub fn new(kind: PathKind, bound: usize) -> Result<Self> {
        if bound == 0 {
            return Err(Error::InvalidNetwork(
                "height bound must be at least 1".into(),
            ));
        }
        Ok(PathModel {
            kind,
            bound,
            ascent_start: false,
        })
    }

    pub fn motzkin(bound: usize) -> Result<Self> {
        Self::new(PathKind::Motzkin, bound)
    }

    pub fn with_ascent_start(self) -> Self {
        PathModel {
            ascent_start: true,
            ..self
        }
    }

    /// Vertex index of the extra source, when present.
    pub fn source(&self) -> Option<usize> {
        self.ascent_start.then_some(self.bound + 1)
    }

    pub fn alphabet(&self) -> Alphabet {
        match self.kind {
            PathKind::Dyck => Alphabet::from_chars("UD"),
            _ => Alphabet::from_chars("UDF"),
        }
        .expect("fixed alphabet")
    }

    pub fn network(&self) -> MonoidNetwork {
        build_network(self)
    }

    /// U and D map to `x`; F maps to `x` (Motzkin) or `x^2` (Schröder).
    pub fn homomorphism(&self, order: usize, arity: usize) -> Homomorphism {
        let x = XSeries::x(order, arity);
        let mut images = vec![x.clone(), x.clone()];
        match self.kind {
            PathKind::Dyck => {}
            PathKind::Motzkin => images.push(x),
            PathKind::Schroeder => images.push(x.pow(2)),
        }
        Homomorphism::new(&self.alphabet(), images).expect("path images have zero constant term")
    }
}

pub fn build_network(model: &PathModel) -> MonoidNetwork {
    let m = model.bound;
    let mut arcs = Vec::new();
    for h in 0..=m {
        if model.kind != PathKind::Dyck {
            arcs.push((h, h, vec![F]));
        }
        if h < m {
            arcs.push((h, h + 1, vec![U]));
            arcs.push((h + 1, h, vec![D]));
        }
    }
    let vertices = if let Some(s) = model.source() {
        arcs.push((s, 1, vec![U]));
        m + 2
    } else {
        m + 1
    };
    MonoidNetwork::new(model.alphabet(), vertices, arcs).expect("path network is well formed")
}

/// Height bound that makes a length-`n` computation exact for unbounded paths.
pub fn unbounded_height(n: usize) -> usize {
    n.div_ceil(2).max(1)
}

fn motzkin_word(steps: &[usize]) -> Word {
    Word(steps.to_vec())
}

/// Patterns whose occurrences `stat` counts, all truncated at length `n`.
pub fn statistic_patterns(stat: Statistic, n: usize) -> PatternSet {
    let w = motzkin_word;
    let set = match stat {
        Statistic::Ascents => PatternSet::single_variable(vec![w(&[U, D]), w(&[U, F])]),
        Statistic::Plateaus(k) => PatternSet::single_variable(vec![w(&oracle::plateau(k))]),
        Statistic::AllPlateaus => PatternSet::single_variable(
            (0..n.saturating_sub(1))
                .map(|k| w(&oracle::plateau(k)))
                .collect(),
        ),
        Statistic::Peaks => PatternSet::single_variable(vec![w(&[U, D])]),
        Statistic::Valleys => PatternSet::single_variable(vec![w(&[D, U])]),
        Statistic::PeaksValleys => PatternSet::distinct_variables(vec![w(&[U, D]), w(&[D, U])]),
    };
    set.expect("statistic patterns are valid")
}

fn origin_entry(
    model: &PathModel,
    patterns: &PatternSet,
    n: usize,
    mask: &Mask,
) -> Result<XSeries> {
    let hom = model.homomorphism(n, patterns.arity());
    let f = gj_network(&model.network(), patterns, &hom, mask)?;
    Ok(f.get(0, 0).clone())
}

/// Generating function of Motzkin paths by length and `stat`, truncated at
/// `n`. `bound = None` means unbounded height.
pub fn gf_statistic(stat: Statistic, bound: Option<usize>, n: usize) -> Result<XSeries> {
    let model = PathModel::motzkin(bound.unwrap_or_else(|| unbounded_height(n)))?;
    origin_entry(&model, &statistic_patterns(stat, n), n, &Mask::All)
}

/// Motzkin paths all of whose ascents end at a height in `allowed`.
pub fn gf_asc_height_restricted(
    allowed: &HeightSet,
    bound: Option<usize>,
    n: usize,
) -> Result<XSeries> {
    let model = PathModel::motzkin(bound.unwrap_or_else(|| unbounded_height(n)))?;
    // An ascent marked by UD or UF at vertex h ends at height h + 1.
    let rows: BTreeSet<usize> = (0..model.bound)
        .filter(|h| allowed.contains(h + 1))
        .collect();
    let f = origin_entry(
        &model,
        &statistic_patterns(Statistic::Ascents, n),
        n,
        &Mask::ExcludeRows(rows),
    )?;
    f.specialize(&[rat(0)])
}

/// Motzkin paths with every peak at a height in `peaks` and every valley at a
/// height in `valleys`.
pub fn gf_pv_height_restricted(
    peaks: &HeightSet,
    valleys: &HeightSet,
    bound: Option<usize>,
    n: usize,
) -> Result<XSeries> {
    let model = PathModel::motzkin(bound.unwrap_or_else(|| unbounded_height(n)))?;
    let m = model.bound;
    let mask = Mask::TrackedStarts(vec![peaks.complement_up_to(m), valleys.complement_up_to(m)]);
    let f = origin_entry(
        &model,
        &statistic_patterns(Statistic::PeaksValleys, n),
        n,
        &mask,
    )?;
    f.specialize(&[rat(0), rat(0)])
}

/// Motzkin paths all of whose ascents start at a height in `allowed`.
///
/// Ascents other than a leading one are exactly the occurrences of FU and DU.
/// Walks from the extra source vertex are the paths that begin with U, so the
/// leading ascent is handled by adding those back when height 0 is allowed.
pub fn gf_asc_start_restricted(
    allowed: &HeightSet,
    bound: Option<usize>,
    n: usize,
) -> Result<XSeries> {
    let model =
        PathModel::motzkin(bound.unwrap_or_else(|| unbounded_height(n)))?.with_ascent_start();
    let m = model.bound;
    let patterns = PatternSet::single_variable(vec![motzkin_word(&[D, U]), motzkin_word(&[F, U])])
        .expect("valid patterns");
    // DU at h starts an ascent at h - 1; FU at h starts one at h.
    let du: BTreeSet<usize> = (1..=m).filter(|&h| !allowed.contains(h - 1)).collect();
    let fu: BTreeSet<usize> = (0..=m).filter(|&h| !allowed.contains(h)).collect();
    let hom = model.homomorphism(n, 1);
    let f = gj_network(
        &model.network(),
        &patterns,
        &hom,
        &Mask::TrackedStarts(vec![du, fu]),
    )?
    .specialize(&[rat(0)])?;
    let source = model.source().expect("variant has a source");
    // The source is unreachable from 0, so entry (0, 0) is the plain network's.
    let all = f.get(0, 0);
    let leading = f.get(source, 0);
    let rest = all - leading;
    Ok(if allowed.contains(0) {
        &rest + leading
    } else {
        rest
    })
}
