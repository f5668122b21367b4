//! Monoid networks: digraphs whose arcs carry letter sets, such that a word
//! and a pair of endpoints determine at most one walk. Provides the transfer
//! matrix, its inverse, and the cluster method lifted to walks.
//!
//! Vertices are 0-based.

mod file;
mod matrix;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};

pub use file::{ArcSpec, NetworkFile, PatternSpec, WeightSpec};
pub use matrix::SeriesMatrix;

use crate::cluster::{enumerate_clusters, marking_monomial, Alphabet, Homomorphism, PatternSet};
use crate::error::{Error, Result};
use crate::series::{format_rational, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidNetwork {
    alphabet: Alphabet,
    vertices: usize,
    arcs: BTreeMap<(usize, usize), BTreeSet<usize>>,
    weights: Option<BTreeMap<(usize, usize, usize), Rational>>,
    /// successors[v][letter] = reachable (to) vertices.
    successors: Vec<Vec<Vec<usize>>>,
}

impl MonoidNetwork {
    /// `arcs` lists `(from, to, letters)`; repeated arcs merge their letter sets.
    pub fn new(
        alphabet: Alphabet,
        vertices: usize,
        arcs: Vec<(usize, usize, Vec<usize>)>,
    ) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidNetwork("network has no vertices".into()));
        }
        let mut map: BTreeMap<(usize, usize), BTreeSet<usize>> = BTreeMap::new();
        for (from, to, letters) in arcs {
            if from >= vertices || to >= vertices {
                return Err(Error::InvalidNetwork(format!(
                    "arc ({from},{to}) leaves the {vertices} vertices"
                )));
            }
            if letters.is_empty() {
                return Err(Error::InvalidNetwork(format!(
                    "arc ({from},{to}) has no letters"
                )));
            }
            if let Some(&l) = letters.iter().find(|&&l| l >= alphabet.len()) {
                return Err(Error::InvalidNetwork(format!(
                    "letter index {l} outside the alphabet"
                )));
            }
            map.entry((from, to)).or_default().extend(letters);
        }
        let mut successors = vec![vec![Vec::new(); alphabet.len()]; vertices];
        for (&(from, to), letters) in &map {
            for &l in letters {
                successors[from][l].push(to);
            }
        }
        Ok(MonoidNetwork {
            alphabet,
            vertices,
            arcs: map,
            weights: None,
            successors,
        })
    }

    /// Attaches arc weights keyed by `(letter, from, to)`. They must cover
    /// exactly the letter/arc pairs of the network.
    pub fn with_weights(mut self, weights: Vec<((usize, usize, usize), Rational)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((letter, from, to), w) in weights {
            if !self
                .arcs
                .get(&(from, to))
                .is_some_and(|ls| ls.contains(&letter))
            {
                return Err(Error::InvalidNetwork(format!(
                    "weight for letter {:?} on ({from},{to}), which is not an arc letter",
                    self.alphabet
                        .names()
                        .get(letter)
                        .map_or("?", String::as_str)
                )));
            }
            if map.insert((letter, from, to), w).is_some() {
                return Err(Error::InvalidNetwork(format!(
                    "duplicate weight on ({from},{to})"
                )));
            }
        }
        for (&(from, to), letters) in &self.arcs {
            for &l in letters {
                if !map.contains_key(&(l, from, to)) {
                    return Err(Error::MissingWeight {
                        letter: self.alphabet.name(l).to_string(),
                        from,
                        to,
                    });
                }
            }
        }
        self.weights = Some(map);
        Ok(self)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arcs(&self) -> impl Iterator<Item = ((usize, usize), &BTreeSet<usize>)> {
        self.arcs.iter().map(|(&k, v)| (k, v))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn letters(&self, from: usize, to: usize) -> Option<&BTreeSet<usize>> {
        self.arcs.get(&(from, to))
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Weight of `letter` on `(from, to)`; 1 on unweighted networks.
    pub fn weight(&self, letter: usize, from: usize, to: usize) -> Rational {
        self.weights
            .as_ref()
            .and_then(|w| w.get(&(letter, from, to)).cloned())
            .unwrap_or_else(Rational::one)
    }

    pub fn successors(&self, vertex: usize, letter: usize) -> &[usize] {
        &self.successors[vertex][letter]
    }

    /// Checks that the weights leaving every vertex sum to 1.
    pub fn check_stochastic(&self) -> Result<()> {
        let weights = self
            .weights
            .as_ref()
            .ok_or_else(|| Error::InvalidNetwork("network has no weights".into()))?;
        let mut sums = vec![Rational::zero(); self.vertices];
        for (&(_, from, _), w) in weights {
            sums[from] += w;
        }
        match sums.iter().position(|s| !s.is_one()) {
            Some(vertex) => Err(Error::NotStochastic {
                vertex,
                sum: format_rational(&sums[vertex]),
            }),
            None => Ok(()),
        }
    }

    fn check_homomorphism(&self, hom: &Homomorphism) -> Result<()> {
        if hom.letters() != self.alphabet.len() {
            return Err(Error::InvalidAlphabet(format!(
                "homomorphism covers {} letters, network alphabet has {}",
                hom.letters(),
                self.alphabet.len()
            )));
        }
        Ok(())
    }
}

/// A walk: its start vertex and the (letter, next vertex) steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    pub start: usize,
    pub steps: Vec<(usize, usize)>,
}

impl Walk {
    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, |s| s.1)
    }

    pub fn word(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.0).collect()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayWalk {
            walk: self,
            alphabet,
        }
    }
}

struct DisplayWalk<'a> {
    walk: &'a Walk,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayWalk<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.walk.start)?;
        for &(l, v) in &self.walk.steps {
            write!(f, " -{}-> {v}", self.alphabet.name(l))?;
        }
        Ok(())
    }
}

/// Two distinct walks with the same word and the same endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub first: Walk,
    pub second: Walk,
}

pub const DEFAULT_WALK_BUDGET: usize = 2_000_000;

/// Exhaustively checks unique decoding for walks of length `<= check_len`.
/// Returns `Ok(None)` when no ambiguity exists up to that length.
pub fn validate_network(
    net: &MonoidNetwork,
    check_len: usize,
    budget: usize,
) -> Result<Option<Ambiguity>> {
    let mut frontier: Vec<Walk> = (0..net.vertices)
        .map(|start| Walk {
            start,
            steps: Vec::new(),
        })
        .collect();
    for depth in 1..=check_len {
        let mut seen: HashMap<(usize, Vec<usize>, usize), Walk> = HashMap::new();
        let mut next = Vec::new();
        for walk in &frontier {
            let here = walk.end();
            for letter in 0..net.alphabet.len() {
                for &to in net.successors(here, letter) {
                    let mut w = walk.clone();
                    w.steps.push((letter, to));
                    let key = (w.start, w.word(), to);
                    if let Some(prev) = seen.get(&key) {
                        return Ok(Some(Ambiguity {
                            first: prev.clone(),
                            second: w,
                        }));
                    }
                    if next.len() >= budget {
                        return Err(Error::WalkBudget {
                            budget,
                            depth: depth - 1,
                        });
                    }
                    seen.insert(key, w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    Ok(None)
}

/// Every walk of exactly `len` steps from `start`.
pub fn enumerate_walks(net: &MonoidNetwork, start: usize, len: usize) -> Vec<Walk> {
    let mut frontier = vec![Walk {
        start,
        steps: Vec::new(),
    }];
    for _ in 0..len {
        let mut next = Vec::new();
        for walk in &frontier {
            for letter in 0..net.alphabet.len() {
                for &to in net.successors(walk.end(), letter) {
                    let mut w = walk.clone();
                    w.steps.push((letter, to));
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    frontier
}

/// Sum of `image(a)` over the letters on each arc, weighted when `weighted`.
fn transfer_matrix(
    net: &MonoidNetwork,
    hom: &Homomorphism,
    weighted: bool,
) -> Result<SeriesMatrix> {
    net.check_homomorphism(hom)?;
    let mut m = SeriesMatrix::zero(net.vertices, hom.order(), hom.arity());
    for (&(from, to), letters) in &net.arcs {
        for &l in letters {
            let img = if weighted {
                hom.image(l).scale(&net.weight(l, from, to))
            } else {
                hom.image(l).clone()
            };
            m.add_to(from, to, &img);
        }
    }
    Ok(m)
}

/// One-step matrix: entry `(i, j)` sums the images of the letters on arc
/// `(i, j)`, times their weights on a weighted network.
pub fn step_matrix(net: &MonoidNetwork, hom: &Homomorphism) -> Result<SeriesMatrix> {
    transfer_matrix(net, hom, net.is_weighted())
}

/// Entry `(i, j)` counts words read along walks from `i` to `j`, by length.
pub fn gamma_star(net: &MonoidNetwork, hom: &Homomorphism) -> Result<SeriesMatrix> {
    transfer_matrix(net, hom, false)?.invert_i_minus()
}

/// Which cluster occurrences are marked.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Mask {
    /// Every occurrence at every vertex.
    #[default]
    All,
    /// Clusters starting at these vertices are dropped (their rows are zero).
    ExcludeRows(BTreeSet<usize>),
    /// Per pattern, the vertices where an occurrence may be marked. A lifted
    /// cluster survives only if every mark starts at an allowed vertex.
    TrackedStarts(Vec<BTreeSet<usize>>),
}

/// Cluster matrix: clusters of `patterns` lifted to every walk realizing
/// them, each contributing `weight * image(word) * prod t_v^(marks on v)` to
/// the entry indexed by the walk's endpoints.
pub fn network_cluster_matrix(
    net: &MonoidNetwork,
    patterns: &PatternSet,
    hom: &Homomorphism,
    mask: &Mask,
) -> Result<SeriesMatrix> {
    cluster_matrix(net, patterns, hom, mask, false)
}

fn cluster_matrix(
    net: &MonoidNetwork,
    patterns: &PatternSet,
    hom: &Homomorphism,
    mask: &Mask,
    weighted: bool,
) -> Result<SeriesMatrix> {
    net.check_homomorphism(hom)?;
    hom.check_arity(patterns.arity())?;
    if let Mask::TrackedStarts(sets) = mask {
        if sets.len() != patterns.len() {
            return Err(Error::InvalidPattern(format!(
                "{} tracked-vertex sets for {} patterns",
                sets.len(),
                patterns.len()
            )));
        }
    }
    let mut out = SeriesMatrix::zero(net.vertices, hom.order(), hom.arity());
    let mut vertices = Vec::new();
    for cluster in enumerate_clusters(patterns, hom.order()) {
        let image = hom.word_image(cluster.word().letters());
        if image.is_zero() {
            continue;
        }
        let image = image.scale_poly(&marking_monomial(&cluster.mark_counts(patterns)))?;
        let word = cluster.word().letters();
        for start in 0..net.vertices {
            if matches!(mask, Mask::ExcludeRows(rows) if rows.contains(&start)) {
                continue;
            }
            vertices.clear();
            vertices.push(start);
            let mut ends: BTreeMap<usize, Rational> = BTreeMap::new();
            lift(
                net,
                word,
                &mut vertices,
                Rational::one(),
                weighted,
                &mut |path, w| {
                    let allowed = match mask {
                        Mask::TrackedStarts(sets) => cluster
                            .marks()
                            .iter()
                            .all(|m| sets[m.pattern].contains(&path[m.start])),
                        _ => true,
                    };
                    if allowed {
                        *ends
                            .entry(*path.last().expect("nonempty"))
                            .or_insert_with(Rational::zero) += w;
                    }
                },
            );
            for (end, w) in ends {
                out.add_to(start, end, &image.scale(&w));
            }
        }
    }
    Ok(out)
}

/// Visits every walk reading `word` from `path[0]`, with its weight product.
fn lift(
    net: &MonoidNetwork,
    word: &[usize],
    path: &mut Vec<usize>,
    weight: Rational,
    weighted: bool,
    visit: &mut impl FnMut(&[usize], Rational),
) {
    let depth = path.len() - 1;
    if depth == word.len() {
        visit(path, weight);
        return;
    }
    let here = path[depth];
    let letter = word[depth];
    for &to in net.successors(here, letter) {
        let w = if weighted {
            &weight * net.weight(letter, here, to)
        } else {
            weight.clone()
        };
        path.push(to);
        lift(net, word, path, w, weighted, visit);
        path.pop();
    }
}

/// Inverts `I - step - cluster(t - 1)` for a precomputed cluster matrix.
pub fn gj_network_with_cluster_matrix(
    net: &MonoidNetwork,
    hom: &Homomorphism,
    clusters: &SeriesMatrix,
) -> Result<SeriesMatrix> {
    let step = transfer_matrix(net, hom, false)?;
    step.checked_add(&clusters.shift_t(&rat(-1)))?
        .invert_i_minus()
}

/// Entry `(i, j)` is the generating function for words read along `i -> j`
/// walks, by length and marked pattern occurrences (`t_v` per variable).
pub fn gj_network(
    net: &MonoidNetwork,
    patterns: &PatternSet,
    hom: &Homomorphism,
    mask: &Mask,
) -> Result<SeriesMatrix> {
    let clusters = cluster_matrix(net, patterns, hom, mask, false)?;
    gj_network_with_cluster_matrix(net, hom, &clusters)
}

/// As [`gj_network`], with every walk weighted by the product of its arc
/// weights.
pub fn gj_network_weighted(
    net: &MonoidNetwork,
    patterns: &PatternSet,
    hom: &Homomorphism,
    mask: &Mask,
) -> Result<SeriesMatrix> {
    if !net.is_weighted() {
        return Err(Error::InvalidNetwork("network has no weights".into()));
    }
    let clusters = cluster_matrix(net, patterns, hom, mask, true)?;
    let step = transfer_matrix(net, hom, true)?;
    step.checked_add(&clusters.shift_t(&rat(-1)))?
        .invert_i_minus()
}

/// Probability that a random length-`n` word read from `from` and ending at
/// `to` contains no pattern occurrence.
pub fn avoidance_probability(
    net: &MonoidNetwork,
    patterns: &PatternSet,
    n: usize,
    from: usize,
    to: usize,
) -> Result<Rational> {
    net.check_stochastic()?;
    if from >= net.vertices || to >= net.vertices {
        return Err(Error::InvalidNetwork(format!(
            "entry ({from},{to}) outside the network"
        )));
    }
    let hom = Homomorphism::uniform(net.alphabet.len(), n, patterns.arity());
    let f = gj_network_weighted(net, patterns, &hom, &Mask::All)?;
    f.get(from, to)
        .coeff_at(n, &vec![Rational::zero(); patterns.arity()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::{gj_free_monoid, Word};
    use crate::series::{ratio, XSeries};

    /// Loop {b} at 0, {a,c} on 0->1, {b,c} on 1->0.
    fn two_vertex() -> MonoidNetwork {
        let a = Alphabet::from_chars("abc").unwrap();
        MonoidNetwork::new(
            a,
            2,
            vec![(0, 0, vec![1]), (0, 1, vec![0, 2]), (1, 0, vec![1, 2])],
        )
        .unwrap()
    }

    fn two_vertex_patterns(net: &MonoidNetwork) -> PatternSet {
        let a = net.alphabet();
        PatternSet::distinct_variables(vec![
            a.parse_word("acb").unwrap(),
            a.parse_word("bc").unwrap(),
        ])
        .unwrap()
    }

    fn coin() -> MonoidNetwork {
        let a = Alphabet::from_chars("ab").unwrap();
        MonoidNetwork::new(a, 1, vec![(0, 0, vec![0, 1])])
            .unwrap()
            .with_weights(vec![((0, 0, 0), ratio(1, 2)), ((1, 0, 0), ratio(1, 2))])
            .unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            validate_network(&two_vertex(), 8, DEFAULT_WALK_BUDGET).unwrap(),
            None
        );
        let a = Alphabet::from_chars("a").unwrap();
        let diamond = MonoidNetwork::new(
            a,
            4,
            vec![
                (0, 1, vec![0]),
                (1, 3, vec![0]),
                (0, 2, vec![0]),
                (2, 3, vec![0]),
            ],
        )
        .unwrap();
        let amb = validate_network(&diamond, 4, DEFAULT_WALK_BUDGET)
            .unwrap()
            .expect("ambiguous");
        assert_eq!(amb.first.word(), vec![0, 0]);
        assert_eq!((amb.first.start, amb.first.end()), (0, 3));
        assert_eq!((amb.second.start, amb.second.end()), (0, 3));
        assert_ne!(amb.first, amb.second);
        assert_eq!(
            amb.first.display(diamond.alphabet()).to_string(),
            "0 -a-> 1 -a-> 3"
        );
        assert!(matches!(
            validate_network(&two_vertex(), 30, 1000),
            Err(Error::WalkBudget { budget: 1000, .. })
        ));
    }

    #[test]
    fn network_construction_errors() {
        let a = Alphabet::from_chars("ab").unwrap();
        assert!(MonoidNetwork::new(a.clone(), 1, vec![(0, 1, vec![0])]).is_err());
        assert!(MonoidNetwork::new(a.clone(), 1, vec![(0, 0, vec![])]).is_err());
        let net = MonoidNetwork::new(a, 1, vec![(0, 0, vec![0, 1])]).unwrap();
        assert_eq!(
            net.clone().with_weights(vec![((0, 0, 0), ratio(1, 2))]),
            Err(Error::MissingWeight {
                letter: "b".into(),
                from: 0,
                to: 0
            })
        );
        let lopsided = net
            .with_weights(vec![((0, 0, 0), ratio(1, 2)), ((1, 0, 0), ratio(1, 3))])
            .unwrap();
        assert_eq!(
            lopsided.check_stochastic(),
            Err(Error::NotStochastic {
                vertex: 0,
                sum: "5/6".into()
            })
        );
    }

    #[test]
    fn step_matrix_of_two_vertex_example() {
        let net = two_vertex();
        let m = step_matrix(&net, &Homomorphism::uniform(3, 4, 0)).unwrap();
        let x = XSeries::x(4, 0);
        let expect = SeriesMatrix::from_rows(vec![
            vec![x.clone(), x.scale(&rat(2))],
            vec![x.scale(&rat(2)), XSeries::zero(4, 0)],
        ])
        .unwrap();
        assert_eq!(m, expect);
    }

    #[test]
    fn transfer_identity_on_two_vertex_example() {
        let net = two_vertex();
        let g = gamma_star(&net, &Homomorphism::uniform(3, 12, 0)).unwrap();
        let den = XSeries::from_ints(&[1, -1, -4], 12, 0);
        assert_eq!(&den * g.get(0, 1), XSeries::from_ints(&[0, 2], 12, 0));
    }

    #[test]
    fn worked_cluster_example() {
        let net = two_vertex();
        let b = two_vertex_patterns(&net);
        let n = 12;
        let hom = Homomorphism::uniform(3, n, 2);
        let f = gj_network(&net, &b, &hom, &Mask::All).unwrap();
        // numerator 2x - (1 - t2) x^2 + (1 - t1 - t2 + t1 t2) x^4
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
        // 1 - x - (3 + t2) x^2 + (2 - t1 - t2) x^3 - (1 - t1 - t2 + t1 t2) x^5
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
        assert_eq!(&den * f.get(0, 1), num);
        let at_zero = f.specialize(&[rat(0), rat(0)]).unwrap();
        let den0 = XSeries::from_ints(&[1, -1, -3, 2, 0, -1], n, 0);
        assert_eq!(
            &den0 * at_zero.get(0, 1),
            XSeries::from_ints(&[0, 2, -1, 0, 1], n, 0)
        );
        let at_one = f.specialize(&[rat(1), rat(1)]).unwrap();
        assert_eq!(
            at_one,
            gamma_star(&net, &Homomorphism::uniform(3, n, 0)).unwrap()
        );
    }

    #[test]
    fn single_vertex_reduces_to_free_monoid() {
        let a = Alphabet::from_chars("abc").unwrap();
        let net = MonoidNetwork::new(a.clone(), 1, vec![(0, 0, vec![0, 1, 2])]).unwrap();
        let b = PatternSet::distinct_variables(vec![
            a.parse_word("acb").unwrap(),
            a.parse_word("bc").unwrap(),
        ])
        .unwrap();
        let hom = Homomorphism::uniform(3, 10, 2);
        let f = gj_network(&net, &b, &hom, &Mask::All).unwrap();
        assert_eq!(f.get(0, 0), &gj_free_monoid(&a, &b, &hom).unwrap());
    }

    #[test]
    fn coin_flip_probabilities() {
        let net = coin();
        let b = PatternSet::single_variable(vec![Word(vec![0, 1])]).unwrap();
        assert_eq!(
            avoidance_probability(&net, &b, 2, 0, 0).unwrap(),
            ratio(3, 4)
        );
        assert_eq!(avoidance_probability(&net, &b, 0, 0, 0).unwrap(), rat(1));
        // n + 1 of the 2^n words avoid "ab"
        assert_eq!(
            avoidance_probability(&net, &b, 5, 0, 0).unwrap(),
            ratio(6, 32)
        );
        let hom = Homomorphism::uniform(2, 8, 1);
        let f = gj_network_weighted(&net, &b, &hom, &Mask::All).unwrap();
        let total = f.get(0, 0).specialize(&[rat(1)]).unwrap();
        assert_eq!(
            total,
            XSeries::from_ints(&[1; 9], 8, 0).with_arity(0).unwrap()
        );
        assert!(gj_network_weighted(&two_vertex(), &b, &hom, &Mask::All).is_err());
    }

    #[test]
    fn unit_weights_match_unweighted() {
        let net = two_vertex();
        let mut weights = Vec::new();
        for ((from, to), letters) in net.arcs() {
            for &l in letters {
                weights.push(((l, from, to), rat(1)));
            }
        }
        let weighted = net.clone().with_weights(weights).unwrap();
        let b = two_vertex_patterns(&net);
        let hom = Homomorphism::uniform(3, 8, 2);
        assert_eq!(
            gj_network_weighted(&weighted, &b, &hom, &Mask::All).unwrap(),
            gj_network(&net, &b, &hom, &Mask::All).unwrap()
        );
    }

    #[test]
    fn excluded_rows_are_zero() {
        let net = two_vertex();
        let b = two_vertex_patterns(&net);
        let hom = Homomorphism::uniform(3, 8, 2);
        let l = network_cluster_matrix(&net, &b, &hom, &Mask::ExcludeRows(BTreeSet::from([1])))
            .unwrap();
        assert!(l.get(1, 0).is_zero() && l.get(1, 1).is_zero());
        assert!(!l.get(0, 0).is_zero());
    }
}
