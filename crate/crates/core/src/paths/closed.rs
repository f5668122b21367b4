//! Cluster matrices written from their closed-form entries instead of by
//! enumerating clusters. Used to cross-check the enumerated route.

use super::{unbounded_height, HeightSet, PathModel};
use crate::error::Result;
use crate::network::{gj_network_with_cluster_matrix, SeriesMatrix};
use crate::series::{rat, XSeries};

fn term(coeff: i64, power: usize, exps: &[u32], n: usize) -> XSeries {
    XSeries::from_terms(n, exps.len(), &[(coeff, power, exps)])
}

/// Peak/valley cluster matrix on the height-`m` network, variables
/// `(t1, t2)` marking peaks and valleys. Only peaks at heights outside
/// `peaks` and valleys at heights outside `valleys` are marked.
///
/// Clusters are alternating runs: UDUD.. and DUDU.. return to their start
/// height, UDU.. climbs one level and DUD.. drops one.
pub fn pv_cluster_matrix(
    peaks: &HeightSet,
    valleys: &HeightSet,
    m: usize,
    n: usize,
) -> SeriesMatrix {
    let geometric = (&XSeries::one(n, 2) - &term(1, 2, &[1, 1], n))
        .invert()
        .expect("unit");
    let updown = term(1, 2, &[1, 0], n);
    let downup = term(1, 2, &[0, 1], n);
    let long = term(1, 3, &[1, 1], n);
    let peak_marked = |h: usize| !peaks.contains(h);
    let valley_marked = |h: usize| h > 0 && !valleys.contains(h);

    // Clusters starting with UD at height h; they continue past the first
    // peak only if the valley at h + 1 is also marked.
    let up_first = |h: usize, body: &XSeries| -> XSeries {
        match (peak_marked(h), valley_marked(h + 1)) {
            (true, true) => body * &geometric,
            (true, false) => body.clone(),
            _ => XSeries::zero(n, 2),
        }
    };
    let down_first = |h: usize, body: &XSeries| -> XSeries {
        match (valley_marked(h), h >= 1 && peak_marked(h - 1)) {
            (true, true) => body * &geometric,
            (true, false) => body.clone(),
            _ => XSeries::zero(n, 2),
        }
    };
    let long_up = |h: usize| -> XSeries {
        if peak_marked(h) && valley_marked(h + 1) {
            &long * &geometric
        } else {
            XSeries::zero(n, 2)
        }
    };
    let long_down = |h: usize| -> XSeries {
        if valley_marked(h) && peak_marked(h - 1) {
            &long * &geometric
        } else {
            XSeries::zero(n, 2)
        }
    };

    let mut l = SeriesMatrix::zero(m + 1, n, 2);
    for h in 0..=m {
        let mut diag = XSeries::zero(n, 2);
        if h < m {
            diag = &diag + &up_first(h, &updown);
            l.set(h, h + 1, long_up(h));
        }
        if h > 0 {
            diag = &diag + &down_first(h, &downup);
            l.set(h, h - 1, long_down(h));
        }
        l.set(h, h, diag);
    }
    l
}

/// All-plateau cluster matrix with the full entry `U (1 - F)^(-1) D t` on the
/// diagonal below the top vertex.
pub fn all_plateaus_cluster_matrix(m: usize, n: usize) -> SeriesMatrix {
    let entry = (&term(1, 2, &[1], n)
        * &XSeries::from_ints(&[1, -1], n, 1).invert().expect("unit"))
        .truncate(n);
    let mut l = SeriesMatrix::zero(m + 1, n, 1);
    for h in 0..m {
        l.set(h, h, entry.clone());
    }
    l
}

/// [`super::gf_pv_height_restricted`] computed from [`pv_cluster_matrix`].
pub fn gf_pv_height_restricted_closed(
    peaks: &HeightSet,
    valleys: &HeightSet,
    bound: Option<usize>,
    n: usize,
) -> Result<XSeries> {
    let model = PathModel::motzkin(bound.unwrap_or_else(|| unbounded_height(n)))?;
    let l = pv_cluster_matrix(peaks, valleys, model.bound, n);
    let f = gj_network_with_cluster_matrix(&model.network(), &model.homomorphism(n, 2), &l)?;
    f.get(0, 0).specialize(&[rat(0), rat(0)])
}
