//! Exhaustive path enumeration and direct statistic counting.

use super::{PathKind, D, F, U};
use crate::error::{Error, Result};
use crate::series::TPoly;

use num_traits::One;

/// Step length under the path homomorphism (Schröder flats count 2).
fn step_len(kind: PathKind, step: usize) -> usize {
    if kind == PathKind::Schroeder && step == F {
        2
    } else {
        1
    }
}

fn steps(kind: PathKind) -> &'static [usize] {
    match kind {
        PathKind::Dyck => &[U, D],
        PathKind::Motzkin | PathKind::Schroeder => &[U, D, F],
    }
}

/// Number of paths of weighted length `n`, via a height-indexed table.
pub fn count_paths(kind: PathKind, n: usize, bound: Option<usize>) -> u128 {
    let top = bound.unwrap_or(n);
    // ways[len][h]
    let mut ways = vec![vec![0u128; top + 2]; n + 1];
    ways[0][0] = 1;
    for len in 0..n {
        for h in 0..=top {
            let w = ways[len][h];
            if w == 0 {
                continue;
            }
            for &s in steps(kind) {
                let next = len + step_len(kind, s);
                if next > n {
                    continue;
                }
                match s {
                    U if h < top => ways[next][h + 1] += w,
                    D if h > 0 => ways[next][h - 1] += w,
                    F => ways[next][h] += w,
                    _ => {}
                }
            }
        }
    }
    ways[n][0]
}

pub const DEFAULT_PATH_BUDGET: u128 = 2_000_000;

/// Every path of weighted length `n` (heights `<= bound` when given), in
/// lexicographic step order.
pub fn enumerate_paths(
    kind: PathKind,
    n: usize,
    bound: Option<usize>,
    budget: u128,
) -> Result<Vec<Vec<usize>>> {
    let needed = count_paths(kind, n, bound);
    if needed > budget {
        return Err(Error::EnumerationTooLarge { needed, budget });
    }
    let mut out = Vec::with_capacity(needed as usize);
    let mut path = Vec::new();
    extend(kind, n, bound.unwrap_or(n), 0, 0, &mut path, &mut out);
    Ok(out)
}

fn extend(
    kind: PathKind,
    n: usize,
    top: usize,
    len: usize,
    height: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if len == n {
        if height == 0 {
            out.push(path.clone());
        }
        return;
    }
    // Too high to get back down in time.
    if height > n - len {
        return;
    }
    for &s in steps(kind) {
        let next = len + step_len(kind, s);
        if next > n {
            continue;
        }
        let h = match s {
            U if height < top => height + 1,
            D if height > 0 => height - 1,
            F => height,
            _ => continue,
        };
        path.push(s);
        extend(kind, n, top, next, h, path, out);
        path.pop();
    }
}

/// Height before each step, plus the final height.
pub fn heights(path: &[usize]) -> Vec<usize> {
    let mut h = vec![0usize];
    for &s in path {
        let cur = *h.last().expect("nonempty");
        h.push(match s {
            U => cur + 1,
            D => cur.checked_sub(1).expect("path dips below zero"),
            _ => cur,
        });
    }
    h
}

/// Heights at which `pattern` starts in `path`.
pub fn occurrence_heights(path: &[usize], pattern: &[usize]) -> Vec<usize> {
    let h = heights(path);
    crate::cluster::find_occurrences(path, pattern)
        .into_iter()
        .map(|i| h[i])
        .collect()
}

/// Maximal runs of up steps as (start height, end height).
pub fn ascents(path: &[usize]) -> Vec<(usize, usize)> {
    let h = heights(path);
    let mut out = Vec::new();
    let mut i = 0;
    while i < path.len() {
        if path[i] == U {
            let start = i;
            while i < path.len() && path[i] == U {
                i += 1;
            }
            out.push((h[start], h[i]));
        } else {
            i += 1;
        }
    }
    out
}

/// Path statistics counted directly on the step sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    /// Maximal runs of up steps.
    Ascents,
    /// Occurrences of `U F^k D`.
    Plateaus(usize),
    /// Occurrences of `U F^k D` for any `k >= 0`.
    AllPlateaus,
    /// Occurrences of `UD`.
    Peaks,
    /// Occurrences of `DU`.
    Valleys,
    /// Joint `(peaks, valleys)`.
    PeaksValleys,
}

impl Statistic {
    pub fn arity(self) -> usize {
        if self == Statistic::PeaksValleys {
            2
        } else {
            1
        }
    }
}

/// The statistic's value on `path` (one entry, or two for peaks/valleys).
pub fn count_stat(path: &[usize], stat: Statistic) -> Vec<u32> {
    let count = |pat: &[usize]| crate::cluster::find_occurrences(path, pat).len() as u32;
    match stat {
        Statistic::Ascents => vec![ascents(path).len() as u32],
        Statistic::Plateaus(k) => vec![count(&plateau(k))],
        Statistic::AllPlateaus => {
            // Each plateau is a U, a run of flats, then a D.
            let mut total = 0;
            for (i, &s) in path.iter().enumerate() {
                if s == U {
                    let flats = path[i + 1..].iter().take_while(|&&x| x == F).count();
                    if path.get(i + 1 + flats) == Some(&D) {
                        total += 1;
                    }
                }
            }
            vec![total]
        }
        Statistic::Peaks => vec![count(&[U, D])],
        Statistic::Valleys => vec![count(&[D, U])],
        Statistic::PeaksValleys => vec![count(&[U, D]), count(&[D, U])],
    }
}

pub(crate) fn plateau(k: usize) -> Vec<usize> {
    let mut w = vec![U];
    w.extend(std::iter::repeat_n(F, k));
    w.push(D);
    w
}

/// Joint distribution of `stat` over Motzkin paths of length `n`, as a
/// polynomial in the marking variables.
pub fn oracle_distribution(stat: Statistic, n: usize, bound: Option<usize>) -> Result<TPoly> {
    let mut dist = TPoly::zero(stat.arity());
    for p in enumerate_paths(PathKind::Motzkin, n, bound, DEFAULT_PATH_BUDGET)? {
        dist = &dist + &TPoly::monomial(One::one(), count_stat(&p, stat));
    }
    Ok(dist)
}

/// Number of Motzkin paths of length `n` satisfying `keep`.
pub fn oracle_count(
    n: usize,
    bound: Option<usize>,
    keep: impl Fn(&[usize]) -> bool,
) -> Result<u64> {
    Ok(
        enumerate_paths(PathKind::Motzkin, n, bound, DEFAULT_PATH_BUDGET)?
            .iter()
            .filter(|p| keep(p))
            .count() as u64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Vec<usize> {
        s.chars()
            .map(|c| match c {
                'U' => U,
                'D' => D,
                _ => F,
            })
            .collect()
    }

    fn render(p: &[usize]) -> String {
        p.iter().map(|&s| ['U', 'D', 'F'][s]).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            enumerate_paths(PathKind::Motzkin, 4, None, 100)
                .unwrap()
                .len(),
            9
        );
        let mut bounded: Vec<String> = enumerate_paths(PathKind::Motzkin, 3, Some(1), 100)
            .unwrap()
            .iter()
            .map(|p| render(p))
            .collect();
        bounded.sort();
        assert_eq!(bounded, ["FFF", "FUD", "UDF", "UFD"]);
        let dyck: Vec<String> = enumerate_paths(PathKind::Dyck, 4, None, 100)
            .unwrap()
            .iter()
            .map(|p| render(p))
            .collect();
        assert_eq!(dyck, ["UUDD", "UDUD"]);
        assert_eq!(count_paths(PathKind::Schroeder, 4, None), 6);
        assert!(matches!(
            enumerate_paths(PathKind::Motzkin, 12, None, 10),
            Err(Error::EnumerationTooLarge {
                needed: 15511,
                budget: 10
            })
        ));
    }

    #[test]
    fn motzkin_counts() {
        let counts: Vec<u128> = (0..10)
            .map(|n| count_paths(PathKind::Motzkin, n, None))
            .collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]);
        for (n, &count) in counts.iter().enumerate() {
            assert_eq!(
                enumerate_paths(PathKind::Motzkin, n, None, 10_000)
                    .unwrap()
                    .len() as u128,
                count
            );
        }
    }

    #[test]
    fn statistics() {
        assert_eq!(count_stat(&parse("UDUD"), Statistic::PeaksValleys), [2, 1]);
        assert_eq!(
            count_stat(&parse("UFDUFD"), Statistic::PeaksValleys),
            [0, 1]
        );
        assert_eq!(count_stat(&parse("UUDD"), Statistic::Ascents), [1]);
        assert_eq!(count_stat(&parse("UDFUD"), Statistic::Ascents), [2]);
        assert_eq!(count_stat(&parse("UFFDUD"), Statistic::AllPlateaus), [2]);
        assert_eq!(count_stat(&parse("UFFDUD"), Statistic::Plateaus(2)), [1]);
        assert_eq!(occurrence_heights(&parse("UUDUDD"), &[D, U]), [2]);
        assert_eq!(ascents(&parse("UUDUDD")), [(0, 2), (1, 2)]);
    }
}
