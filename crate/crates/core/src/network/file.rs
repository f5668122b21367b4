//! JSON description of a network and its pattern set.
//!
//! ```json
//! {
//!   "vertices": 2,
//!   "arcs": [{"from": 1, "to": 2, "letters": ["a", "c"]}],
//!   "weights": [{"letter": "a", "from": 1, "to": 2, "num": 1, "den": 2}],
//!   "patterns": [{"word": ["a", "c"], "var": 1}]
//! }
//! ```
//!
//! Vertices are numbered `1..=vertices` and `var` names the marking variable
//! `t<var>`, also from 1. The in-memory network is 0-based. The alphabet is
//! the set of arc letters in order of first use.

use serde::{Deserialize, Serialize};

use super::MonoidNetwork;
use crate::cluster::{Alphabet, Pattern, PatternSet};
use crate::error::{Error, Result};
use crate::series::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkFile {
    pub vertices: usize,
    pub arcs: Vec<ArcSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightSpec>>,
    #[serde(default)]
    pub patterns: Vec<PatternSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcSpec {
    pub from: usize,
    pub to: usize,
    pub letters: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightSpec {
    pub letter: String,
    pub from: usize,
    pub to: usize,
    pub num: i64,
    pub den: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternSpec {
    pub word: Vec<String>,
    pub var: usize,
}

impl NetworkFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("network file: {e}")))
    }

    pub fn alphabet(&self) -> Result<Alphabet> {
        let mut letters: Vec<String> = Vec::new();
        for arc in &self.arcs {
            for l in &arc.letters {
                if !letters.contains(l) {
                    letters.push(l.clone());
                }
            }
        }
        Alphabet::new(letters)
    }

    fn vertex(&self, v: usize) -> Result<usize> {
        if v == 0 || v > self.vertices {
            return Err(Error::InvalidNetwork(format!(
                "vertex {v} outside 1..={}",
                self.vertices
            )));
        }
        Ok(v - 1)
    }

    pub fn network(&self) -> Result<MonoidNetwork> {
        let alphabet = self.alphabet()?;
        let letter = |name: &str| {
            alphabet
                .index_of(name)
                .ok_or_else(|| Error::InvalidNetwork(format!("letter {name:?} is on no arc")))
        };
        let arcs = self
            .arcs
            .iter()
            .map(|a| {
                Ok((
                    self.vertex(a.from)?,
                    self.vertex(a.to)?,
                    a.letters
                        .iter()
                        .map(|l| letter(l))
                        .collect::<Result<Vec<_>>>()?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let weights = match &self.weights {
            None => None,
            Some(ws) => Some(
                ws.iter()
                    .map(|w| {
                        if w.den == 0 {
                            return Err(Error::Parse(format!(
                                "weight on ({},{}) has zero denominator",
                                w.from, w.to
                            )));
                        }
                        Ok((
                            (letter(&w.letter)?, self.vertex(w.from)?, self.vertex(w.to)?),
                            Rational::new(w.num.into(), w.den.into()),
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let net = MonoidNetwork::new(alphabet, self.vertices, arcs)?;
        match weights {
            Some(w) => net.with_weights(w),
            None => Ok(net),
        }
    }

    /// Patterns from the file; the variable count is the largest `var`.
    pub fn patterns(&self, alphabet: &Alphabet) -> Result<PatternSet> {
        let arity = self.patterns.iter().map(|p| p.var).max().unwrap_or(0);
        let patterns = self
            .patterns
            .iter()
            .map(|p| {
                if p.var == 0 {
                    return Err(Error::InvalidPattern(
                        "variables are numbered from 1".into(),
                    ));
                }
                Ok(Pattern {
                    word: alphabet.word_from_names(&p.word)?,
                    var: p.var - 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        PatternSet::new(patterns, arity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    const SAMPLE: &str = r#"{
        "vertices": 2,
        "arcs": [
            {"from": 1, "to": 1, "letters": ["b"]},
            {"from": 1, "to": 2, "letters": ["a", "c"]},
            {"from": 2, "to": 1, "letters": ["b", "c"]}
        ],
        "patterns": [{"word": ["a", "c", "b"], "var": 1}, {"word": ["b", "c"], "var": 2}]
    }"#;

    #[test]
    fn parses_sample() {
        let f = NetworkFile::parse(SAMPLE).unwrap();
        let net = f.network().unwrap();
        assert_eq!(net.alphabet().names(), ["b", "a", "c"]);
        assert_eq!(net.arc_count(), 3);
        let b = f.patterns(net.alphabet()).unwrap();
        assert_eq!(b.arity(), 2);
        assert_eq!(net.alphabet().render(&b.get(0).word), "acb");
        let back = NetworkFile::parse(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn weights_and_errors() {
        let text = r#"{"vertices": 1, "arcs": [{"from": 1, "to": 1, "letters": ["a", "b"]}],
            "weights": [{"letter": "a", "from": 1, "to": 1, "num": 1, "den": 2},
                        {"letter": "b", "from": 1, "to": 1, "num": 1, "den": 2}]}"#;
        let net = NetworkFile::parse(text).unwrap().network().unwrap();
        assert_eq!(net.weight(1, 0, 0), ratio(1, 2));
        assert!(net.check_stochastic().is_ok());

        let err = NetworkFile::parse(r#"{"vertices": 1, "arcs": [{"from": 0}]}"#).unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.contains("line 1")));
        let bad_var = r#"{"vertices": 1, "arcs": [{"from": 1, "to": 1, "letters": ["a"]}],
            "patterns": [{"word": ["a", "a"], "var": 0}]}"#;
        let f = NetworkFile::parse(bad_var).unwrap();
        assert!(f.patterns(&f.alphabet().unwrap()).is_err());
        let unknown = r#"{"vertices": 1, "arcs": [{"from": 1, "to": 1, "letters": ["a"]}],
            "patterns": [{"word": ["a", "z"], "var": 1}]}"#;
        let f = NetworkFile::parse(unknown).unwrap();
        assert!(f.patterns(&f.alphabet().unwrap()).is_err());
        let zero_vertex = r#"{"vertices": 1, "arcs": [{"from": 0, "to": 1, "letters": ["a"]}]}"#;
        assert!(NetworkFile::parse(zero_vertex).unwrap().network().is_err());
    }
}
