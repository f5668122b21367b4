use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A set of path heights, described finitely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeightSet {
    /// 0, 1, 2, ...
    Naturals,
    /// 1, 2, 3, ...
    Positives,
    /// 2, 4, 6, ...
    Even,
    /// 1, 3, 5, ...
    Odd,
    /// 0, 2, 4, ...
    EvenWithZero,
    Finite(BTreeSet<usize>),
}

impl HeightSet {
    pub fn empty() -> Self {
        HeightSet::Finite(BTreeSet::new())
    }

    pub fn finite(heights: impl IntoIterator<Item = usize>) -> Self {
        HeightSet::Finite(heights.into_iter().collect())
    }

    pub fn contains(&self, h: usize) -> bool {
        match self {
            HeightSet::Naturals => true,
            HeightSet::Positives => h > 0,
            HeightSet::Even => h > 0 && h.is_multiple_of(2),
            HeightSet::Odd => h % 2 == 1,
            HeightSet::EvenWithZero => h.is_multiple_of(2),
            HeightSet::Finite(s) => s.contains(&h),
        }
    }

    /// Members in `0..=max`.
    pub fn up_to(&self, max: usize) -> BTreeSet<usize> {
        (0..=max).filter(|&h| self.contains(h)).collect()
    }

    /// Heights in `0..=max` outside the set.
    pub fn complement_up_to(&self, max: usize) -> BTreeSet<usize> {
        (0..=max).filter(|&h| !self.contains(h)).collect()
    }
}

impl fmt::Display for HeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeightSet::Naturals => write!(f, "N"),
            HeightSet::Positives => write!(f, "P"),
            HeightSet::Even => write!(f, "E"),
            HeightSet::Odd => write!(f, "O"),
            HeightSet::EvenWithZero => write!(f, "E0"),
            HeightSet::Finite(s) if s.is_empty() => write!(f, "none"),
            HeightSet::Finite(s) => {
                let items: Vec<String> = s.iter().map(usize::to_string).collect();
                write!(f, "{}", items.join(","))
            }
        }
    }
}

/// `N`, `P`, `E`, `O`, `E0`, `none`, or a comma-separated list of heights.
impl FromStr for HeightSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.trim() {
            "N" => HeightSet::Naturals,
            "P" => HeightSet::Positives,
            "E" => HeightSet::Even,
            "O" => HeightSet::Odd,
            "E0" => HeightSet::EvenWithZero,
            "none" | "" => HeightSet::empty(),
            list => HeightSet::Finite(
                list.split(',')
                    .map(|h| {
                        h.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad height {h:?} in {s:?}")))
                    })
                    .collect::<Result<_, _>>()?,
            ),
        })
    }
}
