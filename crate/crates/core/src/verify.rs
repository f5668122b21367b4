//! Invariant suites: each recomputes a family of series along independent
//! routes or against exhaustive enumeration and records every mismatch.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::cluster::{
    brute_force_clusters, enumerate_clusters, find_occurrences, gj_free_monoid,
    marked_word_gf_brute, Alphabet, Homomorphism, PatternSet, Word,
};
use crate::contfrac::{
    bounded_ratio, cf_eval, cf_spec, closed_form, formula_coefficient, formula_value,
    one_peak_diagnostic, restricted_cf_spec, ClosedForm, CountFormula, Family, Restricted,
};
use crate::error::{Error, Result};
use crate::network::{
    avoidance_probability, enumerate_walks, gamma_star, gj_network, gj_network_weighted,
    network_cluster_matrix, step_matrix, validate_network, Mask, MonoidNetwork, SeriesMatrix,
    DEFAULT_WALK_BUDGET,
};
use crate::paths::{
    all_plateaus_cluster_matrix, ascents, count_paths, count_stat, enumerate_paths,
    gf_asc_height_restricted, gf_asc_start_restricted, gf_pv_height_restricted,
    gf_pv_height_restricted_closed, gf_statistic, occurrence_heights, unbounded_height, HeightSet,
    PathKind, PathModel, Statistic, D, DEFAULT_PATH_BUDGET, U,
};
use crate::series::{format_rational, rat, ratio, Rational, TPoly, XSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Routes,
    Oracle,
    Stabilization,
    Corollaries,
    Algebra,
    Clusters,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Routes,
        Suite::Oracle,
        Suite::Stabilization,
        Suite::Corollaries,
        Suite::Algebra,
        Suite::Clusters,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Oracle => "oracle",
            Suite::Stabilization => "stabilization",
            Suite::Corollaries => "corollaries",
            Suite::Algebra => "algebra",
            Suite::Clusters => "clusters",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub context: String,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, got {}",
            self.context, self.expected, self.got
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: usize,
    pub failures: Vec<Failure>,
    /// Informational lines that do not affect the outcome.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            passed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn checks(&self) -> usize {
        self.passed + self.failures.len()
    }

    fn check<T: PartialEq + fmt::Display>(
        &mut self,
        context: impl FnOnce() -> String,
        expected: &T,
        got: &T,
    ) {
        if expected == got {
            self.passed += 1;
        } else {
            self.failures.push(Failure {
                context: context(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn check_true(&mut self, context: impl FnOnce() -> String, ok: bool) {
        self.check(context, &true, &ok);
    }
}

pub fn run_suite(suite: Suite, n: usize) -> Result<SuiteReport> {
    match suite {
        Suite::Routes => routes(n),
        Suite::Oracle => oracle(n),
        Suite::Stabilization => stabilization(n),
        Suite::Corollaries => corollaries(n),
        Suite::Algebra => algebra(n),
        Suite::Clusters => clusters(),
    }
}

const FAMILIES: [Family; 6] = [
    Family::Ascents,
    Family::Plateaus(0),
    Family::Plateaus(1),
    Family::Plateaus(2),
    Family::AllPlateaus,
    Family::PeaksValleys,
];

const STATISTICS: [Statistic; 8] = [
    Statistic::Ascents,
    Statistic::Plateaus(0),
    Statistic::Plateaus(1),
    Statistic::Plateaus(2),
    Statistic::AllPlateaus,
    Statistic::Peaks,
    Statistic::Valleys,
    Statistic::PeaksValleys,
];

pub fn restriction_sets() -> Vec<HeightSet> {
    vec![
        HeightSet::Naturals,
        HeightSet::Positives,
        HeightSet::Even,
        HeightSet::Odd,
        HeightSet::EvenWithZero,
        HeightSet::empty(),
        HeightSet::finite([0]),
        HeightSet::finite([1, 2]),
    ]
}

/// Network inverse, continued fraction and recurrence ratio at each bound;
/// closed forms against a large bound.
pub fn routes(n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Routes);
    for family in FAMILIES {
        for m in 1..=5 {
            let net = gf_statistic(family.statistic(), Some(m), n)?;
            let cf = cf_eval(&cf_spec(family, m, n)?, n)?;
            let ratio = bounded_ratio(family, m, n)?;
            r.check(|| format!("{family:?} m={m} continued fraction"), &net, &cf);
            r.check(
                || format!("{family:?} m={m} recurrence ratio"),
                &net,
                &ratio,
            );
        }
    }
    let big = unbounded_height(n).max(7);
    let forms = [
        ClosedForm::Ascents,
        ClosedForm::Plateaus(0),
        ClosedForm::Plateaus(1),
        ClosedForm::Plateaus(2),
        ClosedForm::AllPlateaus,
        ClosedForm::PeaksValleys,
    ];
    for form in forms {
        let family = form.family().expect("unrestricted form");
        let net = gf_statistic(family.statistic(), Some(big), n)?;
        r.check(
            || format!("{form:?} closed form vs m={big}"),
            &net,
            &closed_form(form, n)?,
        );
    }
    for form in ClosedForm::RESTRICTED {
        let net = restricted_network(&form.restriction().expect("restricted form"), Some(big), n)?;
        r.check(
            || format!("{form:?} closed form vs m={big}"),
            &net,
            &closed_form(form, n)?,
        );
    }
    for m in 1..=5 {
        let model = PathModel::motzkin(m)?;
        let closed = crate::network::gj_network_with_cluster_matrix(
            &model.network(),
            &model.homomorphism(n, 1),
            &all_plateaus_cluster_matrix(m, n),
        )?;
        let net = gf_statistic(Statistic::AllPlateaus, Some(m), n)?;
        r.check(
            || format!("all plateaus m={m} closed cluster entry"),
            &net,
            closed.get(0, 0),
        );
        for a in restriction_sets() {
            let net = gf_asc_height_restricted(&a, Some(m), n)?;
            let cf = cf_eval(
                &restricted_cf_spec(&Restricted::AscentEnds(a.clone()), m, n)?,
                n,
            )?;
            r.check(
                || format!("ascent ends in {a}, m={m} continued fraction"),
                &net,
                &cf,
            );
        }
        for p in restriction_sets() {
            for v in restriction_sets() {
                let net = gf_pv_height_restricted(&p, &v, Some(m), n)?;
                let rs = Restricted::PeaksValleys {
                    peaks: p.clone(),
                    valleys: v.clone(),
                };
                let cf = cf_eval(&restricted_cf_spec(&rs, m, n)?, n)?;
                r.check(
                    || format!("peaks in {p}, valleys in {v}, m={m} continued fraction"),
                    &net,
                    &cf,
                );
                let closed = gf_pv_height_restricted_closed(&p, &v, Some(m), n)?;
                r.check(
                    || format!("peaks in {p}, valleys in {v}, m={m} closed cluster matrix"),
                    &net,
                    &closed,
                );
            }
        }
    }
    Ok(r)
}

fn restricted_network(restriction: &Restricted, bound: Option<usize>, n: usize) -> Result<XSeries> {
    match restriction {
        Restricted::AscentEnds(a) => gf_asc_height_restricted(a, bound, n),
        Restricted::PeaksValleys { peaks, valleys } => {
            gf_pv_height_restricted(peaks, valleys, bound, n)
        }
    }
}

fn int_poly(count: u64) -> TPoly {
    TPoly::constant(rat(count as i64), 0)
}

/// Every coefficient against tallies over exhaustively enumerated paths.
pub fn oracle(n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Oracle);
    let sets = restriction_sets();
    for bound in [Some(1), Some(2), Some(3), None] {
        let label = bound.map_or_else(|| "unbounded".to_string(), |m| format!("m={m}"));
        let gfs: Vec<XSeries> = STATISTICS
            .iter()
            .map(|&s| gf_statistic(s, bound, n))
            .collect::<Result<_>>()?;
        let asc_end: Vec<XSeries> = sets
            .iter()
            .map(|a| gf_asc_height_restricted(a, bound, n))
            .collect::<Result<_>>()?;
        let asc_start: Vec<XSeries> = sets
            .iter()
            .map(|a| gf_asc_start_restricted(a, bound, n))
            .collect::<Result<_>>()?;
        let mut pv = Vec::new();
        for p in &sets {
            for v in &sets {
                pv.push(gf_pv_height_restricted(p, v, bound, n)?);
            }
        }
        for k in 0..=n {
            let paths = enumerate_paths(PathKind::Motzkin, k, bound, DEFAULT_PATH_BUDGET)?;
            for (stat, gf) in STATISTICS.iter().zip(&gfs) {
                let mut tally = TPoly::zero(stat.arity());
                for p in &paths {
                    tally = &tally + &TPoly::monomial(Rational::one(), count_stat(p, *stat));
                }
                r.check(|| format!("{stat:?} {label} n={k}"), &tally, gf.coeff(k)?);
            }
            let runs: Vec<Vec<(usize, usize)>> = paths.iter().map(|p| ascents(p)).collect();
            let peaks: Vec<Vec<usize>> = paths
                .iter()
                .map(|p| occurrence_heights(p, &[U, D]))
                .collect();
            let valleys: Vec<Vec<usize>> = paths
                .iter()
                .map(|p| occurrence_heights(p, &[D, U]))
                .collect();
            for (i, a) in sets.iter().enumerate() {
                let ends = runs
                    .iter()
                    .filter(|rs| rs.iter().all(|&(_, e)| a.contains(e)))
                    .count() as u64;
                r.check(
                    || format!("ascent ends in {a} {label} n={k}"),
                    &int_poly(ends),
                    asc_end[i].coeff(k)?,
                );
                let starts = runs
                    .iter()
                    .filter(|rs| rs.iter().all(|&(s, _)| a.contains(s)))
                    .count() as u64;
                r.check(
                    || format!("ascent starts in {a} {label} n={k}"),
                    &int_poly(starts),
                    asc_start[i].coeff(k)?,
                );
            }
            for (i, p) in sets.iter().enumerate() {
                for (j, v) in sets.iter().enumerate() {
                    let count = (0..paths.len())
                        .filter(|&q| {
                            peaks[q].iter().all(|&h| p.contains(h))
                                && valleys[q].iter().all(|&h| v.contains(h))
                        })
                        .count() as u64;
                    let gf = &pv[i * sets.len() + j];
                    r.check(
                        || format!("peaks in {p}, valleys in {v} {label} n={k}"),
                        &int_poly(count),
                        gf.coeff(k)?,
                    );
                }
            }
        }
    }
    Ok(r)
}

/// Bounded results agree with unbounded ones below length `2m + 2`, and
/// every statistic sums to the Motzkin numbers at `t = 1`.
pub fn stabilization(n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Stabilization);
    let motzkin: Vec<TPoly> = (0..=n)
        .map(|k| int_poly(count_paths(PathKind::Motzkin, k, None) as u64))
        .collect();
    for stat in STATISTICS {
        let full = gf_statistic(stat, None, n)?;
        for m in 1..unbounded_height(n) {
            let bounded = gf_statistic(stat, Some(m), n)?;
            for k in 0..=(2 * m + 1).min(n) {
                r.check(
                    || format!("{stat:?} m={m} n={k}"),
                    full.coeff(k)?,
                    bounded.coeff(k)?,
                );
            }
        }
        let ones = vec![Rational::one(); stat.arity()];
        let total = full.specialize(&ones)?;
        for (k, expect) in motzkin.iter().enumerate() {
            r.check(
                || format!("{stat:?} at t=1, n={k}"),
                expect,
                total.coeff(k)?,
            );
        }
    }
    Ok(r)
}

/// Closed-form single coefficients; the one-peak sum is informational.
pub fn corollaries(n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Corollaries);
    let show = |q: &Rational| format_rational(q);
    for k in 1..=n {
        for c in [CountFormula::OneAscent, CountFormula::OnePlateau] {
            r.check(
                || format!("{c:?} n={k}"),
                &show(&formula_value(c, k)),
                &show(&formula_coefficient(c, k)?),
            );
        }
        if k >= 3 {
            let c = CountFormula::TwoPlateaus;
            r.check(
                || format!("{c:?} n={k}"),
                &show(&formula_value(c, k)),
                &show(&formula_coefficient(c, k)?),
            );
        }
    }
    for k in 0..=n.saturating_sub(1) / 2 {
        let c = CountFormula::MaxAscents;
        r.check(
            || format!("{c:?} n={k}"),
            &show(&formula_value(c, k)),
            &show(&formula_coefficient(c, k)?),
        );
    }
    for k in 2..=n {
        let d = one_peak_diagnostic(k)?;
        r.notes.push(format!(
            "one peak, n={k}: binomial sum {} vs coefficient {}{}",
            d.binomial_sum,
            show(&d.coefficient),
            if d.agrees() { "" } else { " (differs)" }
        ));
    }
    Ok(r)
}

/// Loop {b} at 0, {a,c} on 0->1, {b,c} on 1->0, with patterns acb and bc.
pub fn two_vertex_example() -> (MonoidNetwork, PatternSet) {
    let a = Alphabet::from_chars("abc").expect("alphabet");
    let net = MonoidNetwork::new(
        a.clone(),
        2,
        vec![(0, 0, vec![1]), (0, 1, vec![0, 2]), (1, 0, vec![1, 2])],
    )
    .expect("network");
    let b = PatternSet::distinct_variables(vec![
        a.parse_word("acb").expect("word"),
        a.parse_word("bc").expect("word"),
    ])
    .expect("patterns");
    (net, b)
}

/// One loop carrying `a` and `b`, each with probability 1/2.
pub fn coin_flip() -> MonoidNetwork {
    let a = Alphabet::from_chars("ab").expect("alphabet");
    MonoidNetwork::new(a, 1, vec![(0, 0, vec![0, 1])])
        .and_then(|n| n.with_weights(vec![((0, 0, 0), ratio(1, 2)), ((1, 0, 0), ratio(1, 2))]))
        .expect("network")
}

fn builtin_networks() -> Result<Vec<(String, MonoidNetwork)>> {
    let mut out = vec![("two-vertex example".to_string(), two_vertex_example().0)];
    for m in 1..=3 {
        out.push((format!("Motzkin m={m}"), PathModel::motzkin(m)?.network()));
    }
    out.push((
        "Motzkin m=2 with source".into(),
        PathModel::motzkin(2)?.with_ascent_start().network(),
    ));
    out.push((
        "Dyck m=3".into(),
        PathModel::new(PathKind::Dyck, 3)?.network(),
    ));
    out.push((
        "Schroeder m=2".into(),
        PathModel::new(PathKind::Schroeder, 2)?.network(),
    ));
    Ok(out)
}

/// Matrix identities, specializations, walk enumeration and the small
/// worked models.
pub fn algebra(n: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Algebra);
    let walk_depth = n.min(8);

    for (name, net) in builtin_networks()? {
        r.check_true(
            || format!("{name}: unique decoding to depth 8"),
            validate_network(&net, 8, DEFAULT_WALK_BUDGET)?.is_none(),
        );
        let g = gamma_star(
            &net,
            &Homomorphism::uniform(net.alphabet().len(), walk_depth, 0),
        )?;
        for start in 0..net.vertex_count() {
            for len in 0..=walk_depth {
                let walks = enumerate_walks(&net, start, len);
                for end in 0..net.vertex_count() {
                    let words: HashSet<Vec<usize>> = walks
                        .iter()
                        .filter(|w| w.end() == end)
                        .map(|w| w.word())
                        .collect();
                    r.check(
                        || format!("{name}: words {start}->{end} of length {len}"),
                        &int_poly(words.len() as u64),
                        g.get(start, end).coeff(len)?,
                    );
                }
            }
        }
    }

    let (net, b) = two_vertex_example();
    let mut configs: Vec<(String, MonoidNetwork, PatternSet, Homomorphism)> = vec![(
        "two-vertex example".into(),
        net.clone(),
        b.clone(),
        Homomorphism::uniform(3, n, 2),
    )];
    for m in 1..=3 {
        let model = PathModel::motzkin(m)?;
        for stat in [
            Statistic::Ascents,
            Statistic::PeaksValleys,
            Statistic::AllPlateaus,
        ] {
            let patterns = crate::paths::statistic_patterns(stat, n);
            let hom = model.homomorphism(n, patterns.arity());
            configs.push((
                format!("Motzkin m={m} {stat:?}"),
                model.network(),
                patterns,
                hom,
            ));
        }
    }
    for (name, net, patterns, hom) in &configs {
        let f = gj_network(net, patterns, hom, &Mask::All)?;
        let l = network_cluster_matrix(net, patterns, hom, &Mask::All)?;
        let system = step_matrix(net, hom)?.checked_add(&l.shift_t(&rat(-1)))?;
        let identity = SeriesMatrix::identity(net.vertex_count(), hom.order(), hom.arity());
        let product = identity.checked_sub(&system)?.checked_mul(&f)?;
        r.check_true(
            || format!("{name}: (I - step - clusters(t-1)) F = I"),
            product == identity,
        );
        let at_one = f.specialize(&vec![Rational::one(); patterns.arity()])?;
        let g = gamma_star(
            net,
            &Homomorphism::uniform(net.alphabet().len(), hom.order(), 0),
        )?;
        r.check_true(
            || format!("{name}: t=1 gives the transfer inverse"),
            at_one == g,
        );
        for value in 0..=2 {
            let at = f.specialize(&vec![rat(value); patterns.arity()])?;
            let ok = (0..at.dim()).all(|i| {
                (0..at.dim()).all(|j| {
                    at.get(i, j)
                        .to_integers()
                        .is_some_and(|c| c.iter().all(|v| v >= &Zero::zero()))
                })
            });
            r.check_true(|| format!("{name}: non-negative integers at t={value}"), ok);
        }
    }

    // Avoidance counts at t = 0 against filtered walk enumeration.
    let f0 = gj_network(
        &net,
        &b,
        &Homomorphism::uniform(3, walk_depth, 2),
        &Mask::All,
    )?
    .specialize(&[rat(0), rat(0)])?;
    for start in 0..2 {
        for len in 0..=walk_depth {
            let walks = enumerate_walks(&net, start, len);
            for end in 0..2 {
                let count = walks
                    .iter()
                    .filter(|w| w.end() == end)
                    .filter(|w| {
                        b.patterns()
                            .iter()
                            .all(|p| find_occurrences(&w.word(), &p.word.0).is_empty())
                    })
                    .count() as u64;
                r.check(
                    || format!("two-vertex avoiders {start}->{end}, length {len}"),
                    &int_poly(count),
                    f0.get(start, end).coeff(len)?,
                );
            }
        }
    }

    // The worked example's rational functions.
    let g = gamma_star(&net, &Homomorphism::uniform(3, n, 0))?;
    r.check(
        || "two-vertex transfer entry (0,1) times 1 - x - 4x^2".into(),
        &XSeries::from_ints(&[0, 2], n, 0),
        &(&XSeries::from_ints(&[1, -1, -4], n, 0) * g.get(0, 1)),
    );
    let f = gj_network(&net, &b, &Homomorphism::uniform(3, n, 2), &Mask::All)?;
    let (num, den) = two_vertex_fraction(n);
    r.check(
        || "two-vertex cluster entry (0,1) times denominator".into(),
        &num,
        &(&den * f.get(0, 1)),
    );
    let f0 = f.specialize(&[rat(0), rat(0)])?;
    r.check(
        || "two-vertex avoidance entry (0,1) times denominator".into(),
        &XSeries::from_ints(&[0, 2, -1, 0, 1], n, 0),
        &(&XSeries::from_ints(&[1, -1, -3, 2, 0, -1], n, 0) * f0.get(0, 1)),
    );

    // A single vertex carrying the whole alphabet is the free monoid.
    let a = Alphabet::from_chars("abc")?;
    let single = MonoidNetwork::new(a.clone(), 1, vec![(0, 0, vec![0, 1, 2])])?;
    let hom = Homomorphism::uniform(3, n, 2);
    let patterns = PatternSet::distinct_variables(vec![a.parse_word("acb")?, a.parse_word("bc")?])?;
    r.check_true(
        || "single vertex equals free monoid".into(),
        gj_network(&single, &patterns, &hom, &Mask::All)?.get(0, 0)
            == &gj_free_monoid(&a, &patterns, &hom)?,
    );

    // Schröder and Dyck counts from the transfer inverse.
    for (kind, m) in [
        (PathKind::Schroeder, unbounded_height(n)),
        (PathKind::Dyck, unbounded_height(n)),
    ] {
        let model = PathModel::new(kind, m)?;
        let g = gamma_star(&model.network(), &model.homomorphism(n, 0))?;
        let expect: Vec<i64> = (0..=n).map(|k| count_paths(kind, k, None) as i64).collect();
        r.check(
            || format!("{kind:?} counts"),
            &format!("{expect:?}"),
            &format!("{:?}", g.get(0, 0).to_i64s().unwrap_or_default()),
        );
        for k in 0..=walk_depth {
            let listed = enumerate_paths(kind, k, None, DEFAULT_PATH_BUDGET)?.len() as u64;
            r.check(
                || format!("{kind:?} listed paths n={k}"),
                &int_poly(listed),
                g.get(0, 0).coeff(k)?,
            );
        }
    }

    // Coin flips.
    let coin = coin_flip();
    let ab = PatternSet::single_variable(vec![Word(vec![0, 1])])?;
    let show = |q: &Rational| format_rational(q);
    r.check(
        || "coin flip avoids ab at n=2".into(),
        &"3/4".to_string(),
        &show(&avoidance_probability(&coin, &ab, 2, 0, 0)?),
    );
    let fw = gj_network_weighted(&coin, &ab, &Homomorphism::uniform(2, 8, 1), &Mask::All)?;
    let total = fw.get(0, 0).specialize(&[rat(1)])?;
    for k in 0..=8 {
        r.check(
            || format!("coin flip probabilities sum to 1 at n={k}"),
            &TPoly::one(0),
            total.coeff(k)?,
        );
    }
    Ok(r)
}

/// Numerator and denominator of the worked example's (0,1) entry.
pub fn two_vertex_fraction(n: usize) -> (XSeries, XSeries) {
    let num = XSeries::from_terms(
        n,
        2,
        &[
            (2, 1, &[0, 0]),
            (-1, 2, &[0, 0]),
            (1, 2, &[0, 1]),
            (1, 4, &[0, 0]),
            (-1, 4, &[1, 0]),
            (-1, 4, &[0, 1]),
            (1, 4, &[1, 1]),
        ],
    );
    let den = XSeries::from_terms(
        n,
        2,
        &[
            (1, 0, &[0, 0]),
            (-1, 1, &[0, 0]),
            (-3, 2, &[0, 0]),
            (-1, 2, &[0, 1]),
            (2, 3, &[0, 0]),
            (-1, 3, &[1, 0]),
            (-1, 3, &[0, 1]),
            (-1, 5, &[0, 0]),
            (1, 5, &[1, 0]),
            (1, 5, &[0, 1]),
            (-1, 5, &[1, 1]),
        ],
    );
    (num, den)
}

/// All sets of distinct words over `letters` letters, each of length at
/// least 2, with total length at most `total`. Each set is listed once, in
/// increasing word order.
pub fn pattern_sets(letters: usize, total: usize) -> Vec<Vec<Vec<usize>>> {
    let mut words: Vec<Vec<usize>> = Vec::new();
    for len in 2..=total {
        let mut w = vec![0usize; len];
        loop {
            words.push(w.clone());
            let mut i = len;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                w[i] += 1;
                if w[i] < letters {
                    break;
                }
                w[i] = 0;
            }
            if w.iter().all(|&l| l == 0) {
                break;
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    choose_sets(&words, 0, total, &mut chosen, &mut out);
    out
}

fn choose_sets(
    words: &[Vec<usize>],
    from: usize,
    budget: usize,
    chosen: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    for i in from..words.len() {
        if words[i].len() > budget {
            continue;
        }
        chosen.push(words[i].clone());
        out.push(chosen.clone());
        choose_sets(words, i + 1, budget - words[i].len(), chosen, out);
        chosen.pop();
    }
}

/// Summary of the exhaustive cluster comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterSweep {
    pub pattern_sets: usize,
    pub clusters: usize,
    pub first_mismatch: Option<String>,
}

/// Chain enumeration against the definition-based filter for every pattern
/// set over `letters` letters with total length `<= total`, words `<= max_len`.
pub fn cluster_sweep(letters: usize, total: usize, max_len: usize) -> Result<ClusterSweep> {
    let sets = pattern_sets(letters, total);
    let mut clusters = 0;
    for set in &sets {
        let patterns = PatternSet::single_variable(set.iter().cloned().map(Word).collect())?;
        // Clusters only use letters that occur in the patterns.
        let used: BTreeSet<usize> = set.iter().flatten().copied().collect();
        let alphabet_size = used.iter().max().map_or(0, |m| m + 1);
        let dp = enumerate_clusters(&patterns, max_len);
        let brute = brute_force_clusters(&patterns, alphabet_size, max_len);
        if dp != brute {
            return Ok(ClusterSweep {
                pattern_sets: sets.len(),
                clusters,
                first_mismatch: Some(format!(
                    "{set:?}: chain {} clusters, definition {}",
                    dp.len(),
                    brute.len()
                )),
            });
        }
        clusters += dp.len();
    }
    Ok(ClusterSweep {
        pattern_sets: sets.len(),
        clusters,
        first_mismatch: None,
    })
}

/// Exhaustive cluster comparison and the marked-word identity.
pub fn clusters() -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Clusters);
    let sweep = cluster_sweep(3, 8, 6)?;
    r.check(
        || "chain enumeration vs definition".into(),
        &"none".to_string(),
        &sweep
            .first_mismatch
            .clone()
            .unwrap_or_else(|| "none".into()),
    );
    r.notes.push(format!(
        "{} pattern sets, {} clusters compared",
        sweep.pattern_sets, sweep.clusters
    ));
    let ab = Alphabet::from_chars("ab")?;
    let abc = Alphabet::from_chars("abc")?;
    let cases = [
        (ab.clone(), vec!["aba", "abab"], 8),
        (ab.clone(), vec!["aa", "ab"], 8),
        (abc.clone(), vec!["acb", "bc"], 7),
        (abc, vec!["abc", "bca", "cab"], 7),
    ];
    for (alphabet, words, order) in cases {
        let patterns = PatternSet::distinct_variables(
            words
                .iter()
                .map(|w| alphabet.parse_word(w))
                .collect::<Result<_>>()?,
        )?;
        let hom = Homomorphism::uniform(alphabet.len(), order, patterns.arity());
        let brute = marked_word_gf_brute(&alphabet, &patterns, &hom, 1 << 20)?;
        let gj = gj_free_monoid(&alphabet, &patterns, &hom)?.shift_t(&rat(1));
        r.check_true(
            || format!("{words:?}: marked words equal F(1 + t) at N={order}"),
            brute == gj,
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_set_listing() {
        let sets = pattern_sets(2, 4);
        // words: 4 of length 2, 8 of length 3, 16 of length 4; pairs of length-2 words: 6
        assert_eq!(sets.len(), 4 + 8 + 16 + 6);
        assert!(sets
            .iter()
            .all(|s| s.iter().map(Vec::len).sum::<usize>() <= 4));
    }

    #[test]
    fn small_sweep() {
        let sweep = cluster_sweep(2, 6, 5).unwrap();
        assert_eq!(sweep.first_mismatch, None);
        assert!(sweep.clusters > sweep.pattern_sets);
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for suite in [
            Suite::Routes,
            Suite::Stabilization,
            Suite::Corollaries,
            Suite::Algebra,
        ] {
            let report = run_suite(suite, 6).unwrap();
            assert!(report.ok(), "{suite}: {:?}", report.failures.first());
        }
    }
}
