//! Binary words indexing the iterated subdivision of the V5 triangle `oab`,
//! their symmetry and contiguity structure, and nested-triangle configurations.

mod checks;
mod frame;
mod nested;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use checks::{
    check_contiguity_lemma, check_frame_heredity, check_separation, check_symmetry, v5_saturation_symmetry_check,
    ContiguityReport, HeredityReport, SeparationReport, SymmetryReport, V5SymmetryReport,
};
pub use frame::{
    derived_points, frames_json, render_subdivision, standard_v5, subdivide, symmetry, triangle_of_word,
    triangle_of_word_limited, witness_point, V5Frame, WordTriangle, DEFAULT_DEPTH_LIMIT,
};
pub use nested::{nested_census, nested_pattern_triples, NestedPattern};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordsError {
    #[error("word length {0} exceeds the depth limit {1}")]
    DepthLimit(usize, usize),
    #[error("degenerate frame: {0}")]
    DegenerateFrame(&'static str),
    #[error("words have different lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("invalid letter {0:?}")]
    InvalidLetter(char),
    #[error("pattern {0} is not one of 1, 2, 3, 4")]
    InvalidPattern(u8),
    #[error("no valid realization found after {0} attempts")]
    ConstructionFailed(usize),
    #[error("word must be non-empty")]
    EmptyWord,
}

/// A finite word over `{0, 1}`; the empty word denotes the root triangle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn empty() -> BinaryWord {
        BinaryWord(Vec::new())
    }

    pub fn new(letters: impl IntoIterator<Item = u8>) -> Result<BinaryWord, WordsError> {
        let letters: Vec<u8> = letters.into_iter().collect();
        match letters.iter().find(|&&l| l > 1) {
            Some(&l) => Err(WordsError::InvalidLetter(char::from(b'0' + l.min(9)))),
            None => Ok(BinaryWord(letters)),
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&self, letter: u8) -> BinaryWord {
        let mut v = self.0.clone();
        v.push(letter & 1);
        BinaryWord(v)
    }

    pub fn prepend(&self, letter: u8) -> BinaryWord {
        let mut v = vec![letter & 1];
        v.extend_from_slice(&self.0);
        BinaryWord(v)
    }

    /// Letterwise flip.
    pub fn complement(&self) -> BinaryWord {
        BinaryWord(self.0.iter().map(|l| 1 - l).collect())
    }

    /// All words of length `n` in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = BinaryWord> {
        (0u64..1 << n).map(move |m| BinaryWord((0..n).rev().map(|i| (m >> i & 1) as u8).collect()))
    }

    /// All words of length at most `n`, shortest first.
    pub fn all_up_to(n: usize) -> impl Iterator<Item = BinaryWord> {
        (0..=n).flat_map(BinaryWord::all_of_length)
    }
}

pub fn complement(w: &BinaryWord) -> BinaryWord {
    w.complement()
}

/// `α = γ10^m` and `β = γ01^m` for some `γ` and `m ≥ 0`, or conversely.
pub fn is_contiguous(a: &BinaryWord, b: &BinaryWord) -> Result<bool, WordsError> {
    if a.len() != b.len() {
        return Err(WordsError::LengthMismatch(a.len(), b.len()));
    }
    let split = |x: &BinaryWord, y: &BinaryWord| -> bool {
        let Some(k) = x.0.iter().zip(&y.0).position(|(p, q)| p != q) else { return false };
        x.0[k] == 1 && y.0[k] == 0 && x.0[k + 1..].iter().all(|&l| l == 0) && y.0[k + 1..].iter().all(|&l| l == 1)
    };
    Ok(split(a, b) || split(b, a))
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = WordsError;

    fn from_str(s: &str) -> Result<BinaryWord, WordsError> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(WordsError::InvalidLetter(c)),
            })
            .collect::<Result<Vec<u8>, _>>()
            .map(BinaryWord)
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&w("01")), w("10"));
        assert_eq!(complement(&w("")), w(""));
        assert_eq!(complement(&w("100")), w("011"));
        assert_eq!(w("0110").complement().complement(), w("0110"));
    }

    #[test]
    fn contiguity_examples() {
        assert!(is_contiguous(&w("10"), &w("01")).unwrap());
        assert!(is_contiguous(&w("110"), &w("101")).unwrap());
        // m = 0 with γ = 0
        assert!(is_contiguous(&w("00"), &w("01")).unwrap());
        assert!(!is_contiguous(&w("00"), &w("10")).unwrap());
        assert!(!is_contiguous(&w("010"), &w("100")).unwrap());
        assert!(!is_contiguous(&w("01"), &w("01")).unwrap());
        assert_eq!(is_contiguous(&w("0"), &w("01")), Err(WordsError::LengthMismatch(1, 2)));
    }

    #[test]
    fn contiguous_means_lexicographic_neighbours() {
        for n in 1..=6 {
            let words: Vec<BinaryWord> = BinaryWord::all_of_length(n).collect();
            for (i, a) in words.iter().enumerate() {
                for (j, b) in words.iter().enumerate() {
                    assert_eq!(is_contiguous(a, b).unwrap(), i.abs_diff(j) == 1, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn parse_and_enumerate() {
        assert_eq!(w("0101").letters(), &[0, 1, 0, 1]);
        assert!("012".parse::<BinaryWord>().is_err());
        assert_eq!(BinaryWord::all_up_to(7).count(), 255);
        assert_eq!(BinaryWord::all_of_length(2).map(|x| x.to_string()).collect::<Vec<_>>(), ["00", "01", "10", "11"]);
    }
}
