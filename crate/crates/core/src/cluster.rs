//! Words, pattern occurrences, marked words and clusters, and the cluster
//! method on the free monoid.
//!
//! Positions are 0-based throughout: a mark `(start, u)` says pattern `u`
//! occurs at `word[start..start + len]`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::series::{rat, Rational, TPoly, XSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<String>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        let mut index = HashMap::new();
        for (i, l) in letters.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidAlphabet("empty letter name".into()));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate letter {l:?}")));
            }
        }
        Ok(Alphabet { letters, index })
    }

    /// One letter per character, e.g. `"abc"`.
    pub fn from_chars(s: &str) -> Result<Self> {
        Self::new(s.chars().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn name(&self, letter: usize) -> &str {
        &self.letters[letter]
    }

    pub fn names(&self) -> &[String] {
        &self.letters
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Parses a word written one character per letter.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let names: Vec<String> = s.chars().map(String::from).collect();
        self.word_from_names(&names)
    }

    pub fn word_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Word> {
        names
            .iter()
            .map(|n| {
                let n = n.as_ref();
                self.index_of(n)
                    .ok_or_else(|| Error::InvalidAlphabet(format!("unknown letter {n:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn render(&self, word: &Word) -> String {
        word.0.iter().map(|&l| self.letters[l].as_str()).collect()
    }
}

/// A word as letter indices into an [`Alphabet`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub word: Word,
    /// Marking variable, 0-based (`t1` is 0).
    pub var: usize,
}

/// Ordered set of patterns, each tagged with a marking variable.
/// Non-reduced sets (one pattern inside another) are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<Pattern>,
    arity: usize,
}

impl PatternSet {
    pub fn new(patterns: Vec<Pattern>, arity: usize) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for p in &patterns {
            if p.word.len() < 2 {
                return Err(Error::InvalidPattern(format!(
                    "pattern {:?} is shorter than 2",
                    p.word.0
                )));
            }
            if p.var >= arity {
                return Err(Error::InvalidPattern(format!(
                    "variable index {} out of range for {arity} variables",
                    p.var + 1
                )));
            }
            if !seen.insert(p.word.clone()) {
                return Err(Error::InvalidPattern(format!(
                    "duplicate pattern {:?}",
                    p.word.0
                )));
            }
        }
        Ok(PatternSet { patterns, arity })
    }

    /// Every pattern marked by the single variable `t`.
    pub fn single_variable(words: Vec<Word>) -> Result<Self> {
        Self::new(
            words
                .into_iter()
                .map(|word| Pattern { word, var: 0 })
                .collect(),
            1,
        )
    }

    /// Pattern `i` marked by its own variable `t_{i+1}`.
    pub fn distinct_variables(words: Vec<Word>) -> Result<Self> {
        let k = words.len();
        Self::new(
            words
                .into_iter()
                .enumerate()
                .map(|(var, word)| Pattern { word, var })
                .collect(),
            k,
        )
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn get(&self, u: usize) -> &Pattern {
        &self.patterns[u]
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of occurrences of each variable's patterns in `word`.
    pub fn bad_counts(&self, word: &[usize]) -> Vec<u32> {
        let mut counts = vec![0; self.arity];
        for p in &self.patterns {
            counts[p.var] += find_occurrences(word, &p.word.0).len() as u32;
        }
        counts
    }
}

/// A marked occurrence: pattern `pattern` (of length `len`) at `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mark {
    pub start: usize,
    pub len: usize,
    pub pattern: usize,
}

impl Mark {
    /// One past the last covered position.
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

/// A word with a set of genuine pattern occurrences, sorted by (start, end).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedWord {
    word: Word,
    marks: Vec<Mark>,
}

impl MarkedWord {
    /// Validates and normalises `(start, pattern)` marks.
    pub fn new(word: Word, marks: &[(usize, usize)], patterns: &PatternSet) -> Result<Self> {
        let mut out = Vec::with_capacity(marks.len());
        for &(start, u) in marks {
            let p = patterns
                .patterns
                .get(u)
                .ok_or_else(|| Error::InvalidMarkedWord(format!("no pattern with index {u}")))?;
            let len = p.word.len();
            if start + len > word.len() || word.0[start..start + len] != p.word.0[..] {
                return Err(Error::InvalidMarkedWord(format!(
                    "pattern {u} does not occur at {start}"
                )));
            }
            out.push(Mark {
                start,
                len,
                pattern: u,
            });
        }
        out.sort_by_key(|m| (m.start, m.end(), m.pattern));
        if out.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidMarkedWord("repeated mark".into()));
        }
        Ok(MarkedWord { word, marks: out })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    /// Marks per marking variable.
    pub fn mark_counts(&self, patterns: &PatternSet) -> Vec<u32> {
        let mut counts = vec![0; patterns.arity()];
        for m in &self.marks {
            counts[patterns.get(m.pattern).var] += 1;
        }
        counts
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayMarked { mw: self, alphabet }
    }
}

struct DisplayMarked<'a> {
    mw: &'a MarkedWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayMarked<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.alphabet.render(&self.mw.word))?;
        for (i, m) in self.mw.marks.iter().enumerate() {
            let w = Word(self.mw.word.0[m.start..m.end()].to_vec());
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{})", m.start + 1, self.alphabet.render(&w))?;
        }
        write!(f, "}}")
    }
}

/// Every start index at which `pattern` occurs in `word`.
pub fn find_occurrences(word: &[usize], pattern: &[usize]) -> Vec<usize> {
    if pattern.is_empty() || pattern.len() > word.len() {
        return Vec::new();
    }
    word.windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i)
        .collect()
}

/// True iff the marked word cannot be split into two nonempty marked words:
/// marks are present and every cut between adjacent letters lies strictly
/// inside some mark.
pub fn is_cluster(mw: &MarkedWord) -> bool {
    let n = mw.word.len();
    if mw.marks.is_empty() || n == 0 {
        return false;
    }
    (1..n).all(|cut| mw.marks.iter().any(|m| m.start < cut && m.end() > cut))
        && mw.marks.iter().any(|m| m.start == 0)
        && mw.marks.iter().any(|m| m.end() == n)
}

/// All clusters of word length at most `max_len`.
///
/// Marks are added in (start, end) order. The first starts at 0, each later
/// one starts no further right than the last covered position and must agree
/// with the letters already fixed. Every prefix of such a chain is itself a
/// cluster, so each chain state is emitted exactly once.
pub fn enumerate_clusters(patterns: &PatternSet, max_len: usize) -> Vec<MarkedWord> {
    let mut out = Vec::new();
    let mut word = Vec::new();
    let mut marks = Vec::new();
    for (u, p) in patterns.patterns.iter().enumerate() {
        let len = p.word.len();
        if len > max_len {
            continue;
        }
        word.clear();
        word.extend_from_slice(&p.word.0);
        marks.clear();
        marks.push(Mark {
            start: 0,
            len,
            pattern: u,
        });
        extend_chain(patterns, max_len, &mut word, &mut marks, &mut out);
    }
    out.sort();
    out
}

fn extend_chain(
    patterns: &PatternSet,
    max_len: usize,
    word: &mut Vec<usize>,
    marks: &mut Vec<Mark>,
    out: &mut Vec<MarkedWord>,
) {
    out.push(MarkedWord {
        word: Word(word.clone()),
        marks: marks.clone(),
    });
    let last = *marks.last().expect("chain is nonempty");
    let covered = word.len();
    for start in last.start..covered {
        for (u, p) in patterns.patterns.iter().enumerate() {
            let len = p.word.len();
            let end = start + len;
            if end > max_len || (start, end) <= (last.start, last.end()) {
                continue;
            }
            let overlap = end.min(covered);
            if word[start..overlap] != p.word.0[..overlap - start] {
                continue;
            }
            let grown = end.saturating_sub(covered);
            word.extend_from_slice(&p.word.0[len - grown..]);
            marks.push(Mark {
                start,
                len,
                pattern: u,
            });
            extend_chain(patterns, max_len, word, marks, out);
            marks.pop();
            word.truncate(covered);
        }
    }
}

/// Definition-based oracle: every marked word on every word over
/// `alphabet_size` letters of length `<= max_len`, filtered by [`is_cluster`].
pub fn brute_force_clusters(
    patterns: &PatternSet,
    alphabet_size: usize,
    max_len: usize,
) -> Vec<MarkedWord> {
    let mut out = Vec::new();
    for len in 2..=max_len {
        let mut word = vec![0usize; len];
        loop {
            let occ: Vec<(usize, usize)> = patterns
                .patterns
                .iter()
                .enumerate()
                .flat_map(|(u, p)| {
                    find_occurrences(&word, &p.word.0)
                        .into_iter()
                        .map(move |s| (s, u))
                })
                .collect();
            let first = occ.iter().any(|&(s, _)| s == 0);
            let last = occ
                .iter()
                .any(|&(s, u)| s + patterns.get(u).word.len() == len);
            if first && last {
                for mask in 1u64..(1u64 << occ.len()) {
                    let chosen: Vec<(usize, usize)> = (0..occ.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| occ[i])
                        .collect();
                    let mw = MarkedWord::new(Word(word.clone()), &chosen, patterns)
                        .expect("genuine occurrences");
                    if is_cluster(&mw) {
                        out.push(mw);
                    }
                }
            }
            if !next_word(&mut word, alphabet_size) {
                break;
            }
        }
    }
    out.sort();
    out
}

/// Odometer increment; false once every word has been visited.
fn next_word(word: &mut [usize], alphabet_size: usize) -> bool {
    for slot in word.iter_mut().rev() {
        *slot += 1;
        if *slot < alphabet_size {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Letter-to-series substitution. Every image must have x-order at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    images: Vec<XSeries>,
}

impl Homomorphism {
    pub fn new(alphabet: &Alphabet, images: Vec<XSeries>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::InvalidAlphabet(format!(
                "{} letter images for {} letters",
                images.len(),
                alphabet.len()
            )));
        }
        let first = &images[0];
        for (l, img) in images.iter().enumerate() {
            if img.arity() != first.arity() {
                return Err(Error::ArityMismatch {
                    left: first.arity(),
                    right: img.arity(),
                });
            }
            if !img.coeffs()[0].is_zero() {
                return Err(Error::NonAdmissibleHomomorphism {
                    letter: alphabet.name(l).to_string(),
                });
            }
        }
        let order = images.iter().map(XSeries::order).min().unwrap_or(0);
        Ok(Homomorphism {
            images: images.into_iter().map(|s| s.truncate(order)).collect(),
        })
    }

    /// Every letter goes to `x`.
    pub fn uniform(letters: usize, order: usize, arity: usize) -> Self {
        Homomorphism {
            images: vec![XSeries::x(order, arity); letters],
        }
    }

    pub fn order(&self) -> usize {
        self.images[0].order()
    }

    pub fn arity(&self) -> usize {
        self.images[0].arity()
    }

    pub fn letters(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, letter: usize) -> &XSeries {
        &self.images[letter]
    }

    pub fn word_image(&self, word: &[usize]) -> XSeries {
        word.iter()
            .fold(XSeries::one(self.order(), self.arity()), |acc, &l| {
                &acc * &self.images[l]
            })
    }

    pub(crate) fn check_arity(&self, arity: usize) -> Result<()> {
        if self.arity() != arity {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: arity,
            });
        }
        Ok(())
    }
}

pub(crate) fn marking_monomial(counts: &[u32]) -> TPoly {
    TPoly::monomial(Rational::one(), counts.to_vec())
}

/// Cluster generating function `L(t1..tk)` under a homomorphism, truncated at
/// the homomorphism's order.
pub fn cluster_gf(patterns: &PatternSet, hom: &Homomorphism) -> Result<XSeries> {
    hom.check_arity(patterns.arity())?;
    let order = hom.order();
    let mut total = XSeries::zero(order, patterns.arity());
    for c in enumerate_clusters(patterns, order) {
        let img = hom.word_image(&c.word.0);
        total = &total + &img.scale_poly(&marking_monomial(&c.mark_counts(patterns)))?;
    }
    Ok(total)
}

/// Generating function for all words by length and pattern occurrences:
/// `(1 - sum_a image(a) - L(t - 1))^(-1)`.
pub fn gj_free_monoid(
    alphabet: &Alphabet,
    patterns: &PatternSet,
    hom: &Homomorphism,
) -> Result<XSeries> {
    if hom.letters() != alphabet.len() {
        return Err(Error::InvalidAlphabet(
            "homomorphism does not cover the alphabet".into(),
        ));
    }
    let order = hom.order();
    let arity = patterns.arity();
    let mut base = XSeries::one(order, arity);
    for l in 0..alphabet.len() {
        base = &base - hom.image(l);
    }
    let clusters = cluster_gf(patterns, hom)?.shift_t(&rat(-1));
    (&base - &clusters).invert()
}

/// Brute-force sum over words of length `<= order` and over every subset of
/// their pattern occurrences, weighted by `prod t_v^(marks on v)`. This equals
/// `gj_free_monoid` after `t -> t + 1`.
pub fn marked_word_gf_brute(
    alphabet: &Alphabet,
    patterns: &PatternSet,
    hom: &Homomorphism,
    budget: u128,
) -> Result<XSeries> {
    hom.check_arity(patterns.arity())?;
    let order = hom.order();
    let k = alphabet.len() as u128;
    let needed: u128 = (0..=order as u32).map(|n| k.pow(n)).sum();
    if needed > budget {
        return Err(Error::EnumerationTooLarge { needed, budget });
    }
    let arity = patterns.arity();
    let mut total = XSeries::zero(order, arity);
    let mut word = Vec::new();
    brute_walk(
        alphabet.len(),
        patterns,
        hom,
        order,
        &mut word,
        XSeries::one(order, arity),
        &mut total,
    )?;
    Ok(total)
}

fn brute_walk(
    letters: usize,
    patterns: &PatternSet,
    hom: &Homomorphism,
    order: usize,
    word: &mut Vec<usize>,
    image: XSeries,
    total: &mut XSeries,
) -> Result<()> {
    let occ_vars: Vec<usize> = patterns
        .patterns
        .iter()
        .flat_map(|p| std::iter::repeat_n(p.var, find_occurrences(word, &p.word.0).len()))
        .collect();
    if occ_vars.len() > 24 {
        return Err(Error::EnumerationTooLarge {
            needed: 1 << occ_vars.len(),
            budget: 1 << 24,
        });
    }
    let mut weight = TPoly::zero(patterns.arity());
    for mask in 0u64..(1u64 << occ_vars.len()) {
        let mut counts = vec![0u32; patterns.arity()];
        for (i, &v) in occ_vars.iter().enumerate() {
            if mask >> i & 1 == 1 {
                counts[v] += 1;
            }
        }
        weight = &weight + &marking_monomial(&counts);
    }
    *total = &*total + &image.scale_poly(&weight)?;
    if word.len() == order || image.is_zero() {
        return Ok(());
    }
    for l in 0..letters {
        word.push(l);
        let next = &image * hom.image(l);
        brute_walk(letters, patterns, hom, order, word, next, total)?;
        word.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    fn abc() -> Alphabet {
        Alphabet::from_chars("abc").unwrap()
    }

    fn pats(alpha: &Alphabet, words: &[&str]) -> PatternSet {
        PatternSet::distinct_variables(words.iter().map(|w| alpha.parse_word(w).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn occurrences() {
        let a = abc();
        let w = a.parse_word("abcabbcabc").unwrap();
        assert_eq!(
            find_occurrences(&w.0, &a.parse_word("abc").unwrap().0),
            vec![0, 7]
        );
        assert_eq!(
            find_occurrences(&w.0, &a.parse_word("bca").unwrap().0),
            vec![1, 5]
        );
        let one = Alphabet::from_chars("a").unwrap();
        let w = one.parse_word("aaaaaa").unwrap();
        assert_eq!(
            find_occurrences(&w.0, &one.parse_word("aaaa").unwrap().0),
            vec![0, 1, 2]
        );
        let udf = Alphabet::from_chars("UDF").unwrap();
        let w = udf.parse_word("UDUD").unwrap();
        assert_eq!(
            find_occurrences(&w.0, &udf.parse_word("DU").unwrap().0),
            vec![1]
        );
    }

    #[test]
    fn cluster_recognition() {
        let a = abc();
        let b = pats(&a, &["abc", "bca"]);
        let w = a.parse_word("abcabbcabc").unwrap();
        let mw = MarkedWord::new(w, &[(0, 0), (1, 1), (5, 1)], &b).unwrap();
        assert!(!is_cluster(&mw));

        let b = pats(&a, &["bca", "cab"]);
        let w = a.parse_word("bcabca").unwrap();
        let mw = MarkedWord::new(w, &[(0, 0), (1, 1), (3, 0)], &b).unwrap();
        assert!(is_cluster(&mw));

        let one = Alphabet::from_chars("a").unwrap();
        let b = pats(&one, &["aaaa"]);
        let w = one.parse_word("aaaaaa").unwrap();
        assert!(is_cluster(
            &MarkedWord::new(w.clone(), &[(0, 0), (2, 0)], &b).unwrap()
        ));
        assert!(is_cluster(
            &MarkedWord::new(w.clone(), &[(0, 0), (1, 0), (2, 0)], &b).unwrap()
        ));
        assert!(!is_cluster(&MarkedWord::new(w, &[(0, 0)], &b).unwrap()));
    }

    #[test]
    fn marked_word_validation() {
        let a = abc();
        let b = pats(&a, &["ab"]);
        let w = a.parse_word("abab").unwrap();
        assert!(MarkedWord::new(w.clone(), &[(1, 0)], &b).is_err());
        assert!(MarkedWord::new(w.clone(), &[(0, 0), (0, 0)], &b).is_err());
        assert!(MarkedWord::new(w, &[(2, 0), (0, 0)], &b).is_ok());
    }

    #[test]
    fn pattern_validation() {
        let a = abc();
        assert!(PatternSet::single_variable(vec![a.parse_word("a").unwrap()]).is_err());
        assert!(PatternSet::single_variable(vec![
            a.parse_word("ab").unwrap(),
            a.parse_word("ab").unwrap()
        ])
        .is_err());
        let p = Pattern {
            word: a.parse_word("ab").unwrap(),
            var: 2,
        };
        assert!(PatternSet::new(vec![p], 2).is_err());
    }

    #[test]
    fn isolated_patterns_cluster_alone() {
        let udf = Alphabet::from_chars("UDF").unwrap();
        let b = PatternSet::single_variable(vec![
            udf.parse_word("UD").unwrap(),
            udf.parse_word("UF").unwrap(),
        ])
        .unwrap();
        let words: Vec<String> = enumerate_clusters(&b, 6)
            .iter()
            .map(|c| udf.render(c.word()))
            .collect();
        assert_eq!(words, vec!["UD", "UF"]);
    }

    #[test]
    fn acb_bc_clusters() {
        let a = abc();
        let b = pats(&a, &["acb", "bc"]);
        let mut words: Vec<String> = enumerate_clusters(&b, 5)
            .iter()
            .map(|c| a.render(c.word()))
            .collect();
        words.sort();
        assert_eq!(words, vec!["acb", "acbc", "bc"]);
    }

    #[test]
    fn non_reduced_clusters_match_definition() {
        let ab = Alphabet::from_chars("ab").unwrap();
        let b = pats(&ab, &["aba", "abab"]);
        let dp = enumerate_clusters(&b, 5);
        assert_eq!(dp, brute_force_clusters(&b, 2, 5));
        let abab = ab.parse_word("abab").unwrap();
        assert!(dp.contains(&MarkedWord::new(abab.clone(), &[(0, 1)], &b).unwrap()));
        assert!(dp.contains(&MarkedWord::new(abab, &[(0, 0), (0, 1)], &b).unwrap()));
        let ababa = ab.parse_word("ababa").unwrap();
        assert!(dp.contains(&MarkedWord::new(ababa, &[(0, 0), (2, 0)], &b).unwrap()));
    }

    #[test]
    fn two_clusters_on_a6() {
        let one = Alphabet::from_chars("a").unwrap();
        let b = pats(&one, &["aaaa"]);
        let on_six = enumerate_clusters(&b, 6)
            .into_iter()
            .filter(|c| c.word().len() == 6)
            .count();
        assert_eq!(on_six, 2);
    }

    #[test]
    fn cluster_gf_for_acb_bc() {
        let a = abc();
        let b = pats(&a, &["acb", "bc"]);
        let l = cluster_gf(&b, &Homomorphism::uniform(3, 8, 2)).unwrap();
        let expect =
            XSeries::from_terms(8, 2, &[(1, 3, &[1, 0]), (1, 2, &[0, 1]), (1, 4, &[1, 1])]);
        assert_eq!(l, expect);
    }

    #[test]
    fn plateau_cluster_is_itself() {
        let udf = Alphabet::from_chars("UDF").unwrap();
        for k in 0..4 {
            let w = format!("U{}D", "F".repeat(k));
            let b = PatternSet::single_variable(vec![udf.parse_word(&w).unwrap()]).unwrap();
            let l = cluster_gf(&b, &Homomorphism::uniform(3, 10, 1)).unwrap();
            assert_eq!(l, XSeries::from_terms(10, 1, &[(1, k + 2, &[1])]));
        }
    }

    #[test]
    fn peak_valley_clusters_at_length_four() {
        let udf = Alphabet::from_chars("UDF").unwrap();
        let b = pats(&udf, &["UD", "DU"]);
        let l = cluster_gf(&b, &Homomorphism::uniform(3, 4, 2)).unwrap();
        let mut expect = TPoly::monomial(rat(1), vec![2, 1]);
        expect = &expect + &TPoly::monomial(rat(1), vec![1, 2]);
        assert_eq!(l.coeff(4).unwrap(), &expect);
    }

    #[test]
    fn free_monoid_example_denominator() {
        let a = abc();
        let b = pats(&a, &["acb", "bc"]);
        let n = 12;
        let f = gj_free_monoid(&a, &b, &Homomorphism::uniform(3, n, 2)).unwrap();
        // 1 - 3x - x^2 (t2 - 1) - x^3 (t1 - 1) - x^4 (t1 - 1)(t2 - 1)
        let den = XSeries::from_terms(
            n,
            2,
            &[
                (1, 0, &[0, 0]),
                (-3, 1, &[0, 0]),
                (-1, 2, &[0, 1]),
                (1, 2, &[0, 0]),
                (-1, 3, &[1, 0]),
                (1, 3, &[0, 0]),
                (-1, 4, &[1, 1]),
                (1, 4, &[1, 0]),
                (1, 4, &[0, 1]),
                (-1, 4, &[0, 0]),
            ],
        );
        assert_eq!(&f * &den, XSeries::one(n, 2));
        let avoid = f.specialize(&[rat(0), rat(0)]).unwrap();
        let den0 = XSeries::from_ints(&[1, -3, 1, 1, -1], n, 0);
        assert_eq!(&avoid * &den0, XSeries::one(n, 0));
        let all = f.specialize(&[rat(1), rat(1)]).unwrap();
        assert_eq!(all, XSeries::from_ints(&[1, -3], n, 0).invert().unwrap());
    }

    #[test]
    fn brute_identity_on_example() {
        let a = abc();
        let b = pats(&a, &["acb", "bc"]);
        let hom = Homomorphism::uniform(3, 6, 2);
        let brute = marked_word_gf_brute(&a, &b, &hom, 1 << 20).unwrap();
        let gj = gj_free_monoid(&a, &b, &hom).unwrap().shift_t(&rat(1));
        assert_eq!(brute, gj);
        let plain = brute.specialize(&[rat(0), rat(0)]).unwrap();
        assert_eq!(
            plain.to_i64s().unwrap(),
            (0..=6).map(|n| 3i64.pow(n)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn brute_budget() {
        let a = abc();
        let b = pats(&a, &["ab"]);
        let hom = Homomorphism::uniform(3, 10, 1);
        assert!(matches!(
            marked_word_gf_brute(&a, &b, &hom, 1000),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn homomorphism_must_be_admissible() {
        let a = Alphabet::from_chars("ab").unwrap();
        let bad = Homomorphism::new(
            &a,
            vec![XSeries::x(4, 0), XSeries::from_ints(&[1, 1], 4, 0)],
        );
        assert!(matches!(bad, Err(Error::NonAdmissibleHomomorphism { letter }) if letter == "b"));
        let weighted = Homomorphism::new(
            &a,
            vec![XSeries::x(4, 0).scale(&ratio(1, 2)), XSeries::x(4, 0)],
        );
        assert!(weighted.is_ok());
    }

    #[test]
    fn marked_display() {
        let a = abc();
        let b = pats(&a, &["acb", "bc"]);
        let c = MarkedWord::new(a.parse_word("acbc").unwrap(), &[(0, 0), (2, 1)], &b).unwrap();
        assert_eq!(c.display(&a).to_string(), "acbc {(1,acb), (3,bc)}");
    }
}
