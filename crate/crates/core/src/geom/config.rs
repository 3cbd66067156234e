use std::collections::HashSet;
use std::fmt;

use serde::de::{self, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use super::Point;

const DUPLICATE_TAG: &str = "duplicate point";
const RATIONAL_TAG: &str = "malformed rational";

/// A finite labelled set of pairwise distinct points.
///
/// JSON form: `{"points": [["0","0"],["1","0"]], "labels": ["o","a"]}`, with
/// `labels` optional.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Configuration {
    #[serde(deserialize_with = "distinct_points")]
    points: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("empty input")]
    EmptyInput,
    #[error("line {line}, column {column}: {message}")]
    MalformedRational { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: {message}")]
    DuplicatePoint { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("duplicate point {0:?}")]
    Duplicate(Box<Point>),
    #[error("{labels} labels for {points} points")]
    LabelCount { points: usize, labels: usize },
}

fn distinct_points<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Point>, D::Error> {
    struct Points;
    impl<'de> Visitor<'de> for Points {
        type Value = Vec<Point>;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an array of [x, y] rational pairs")
        }

        fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<Point>, A::Error> {
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            while let Some(p) = seq.next_element::<Point>()? {
                if !seen.insert(p.clone()) {
                    return Err(de::Error::custom(format!("{DUPLICATE_TAG} {p:?}")));
                }
                out.push(p);
            }
            Ok(out)
        }
    }
    d.deserialize_seq(Points)
}

impl Configuration {
    pub fn new(points: Vec<Point>) -> Result<Configuration, ConfigError> {
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p) {
                return Err(ConfigError::Duplicate(Box::new(p.clone())));
            }
        }
        Ok(Configuration { points, labels: None })
    }

    pub fn with_labels(points: Vec<Point>, labels: Vec<String>) -> Result<Configuration, ConfigError> {
        let mut c = Configuration::new(points)?;
        c.set_labels(labels)?;
        Ok(c)
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<(), ConfigError> {
        if labels.len() != self.points.len() {
            return Err(ConfigError::LabelCount { points: self.points.len(), labels: labels.len() });
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Integer-coordinate shorthand; panics on duplicates.
    pub fn from_ints(coords: &[(i64, i64)]) -> Configuration {
        Configuration::new(coords.iter().map(|&(x, y)| Point::int(x, y)).collect()).expect("distinct points")
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// The given label, or `p{i}` when unlabelled.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => format!("p{i}"),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.label(i)).collect()
    }

    /// Position of `p` in the point list.
    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// The sub-configuration selected by a bitmask, keeping labels.
    pub fn subset(&self, mask: u64) -> Configuration {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| mask >> i & 1 == 1).collect();
        Configuration {
            points: keep.iter().map(|&i| self.points[i].clone()).collect(),
            labels: self.labels.as_ref().map(|ls| keep.iter().map(|&i| ls[i].clone()).collect()),
        }
    }

    pub fn without(&self, i: usize) -> Configuration {
        let full = if self.len() == 64 { u64::MAX } else { (1u64 << self.len()) - 1 };
        self.subset(full & !(1 << i))
    }

    /// Union with extra points, which must be new.
    pub fn extended(&self, extra: impl IntoIterator<Item = Point>) -> Result<Configuration, ConfigError> {
        let mut points = self.points.clone();
        let start = points.len();
        points.extend(extra);
        let mut c = Configuration::new(points)?;
        if let Some(ls) = &self.labels {
            let mut ls = ls.clone();
            ls.extend((start..c.len()).map(|i| format!("p{i}")));
            c.labels = Some(ls);
        }
        Ok(c)
    }

    pub fn from_json(text: &str) -> Result<Configuration, ConfigError> {
        if text.trim().is_empty() {
            return Err(ConfigError::EmptyInput);
        }
        let c: Configuration = serde_json::from_str(text).map_err(|e| {
            let (line, column) = (e.line(), e.column());
            let message = e.to_string();
            // serde_json appends its own position; keep the bare message
            let message = match message.rfind(" at line ") {
                Some(i) => message[..i].to_string(),
                None => message,
            };
            if message.contains(DUPLICATE_TAG) {
                ConfigError::DuplicatePoint { line, column, message }
            } else if message.contains(RATIONAL_TAG) {
                ConfigError::MalformedRational { line, column, message }
            } else {
                ConfigError::Syntax { line, column, message }
            }
        })?;
        if let Some(ls) = &c.labels {
            if ls.len() != c.points.len() {
                return Err(ConfigError::LabelCount { points: c.points.len(), labels: ls.len() });
            }
        }
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("configuration serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let c = Configuration::from_json(r#"{"points":[["0","0"],["1","0"],["2","0"]]}"#).unwrap();
        assert_eq!(c.len(), 3);
        let c = Configuration::from_json(r#"{"points":[["1/2","1/3"]]}"#).unwrap();
        assert_eq!(c.point(0), &Point::frac(1, 2, 1, 3));
    }

    #[test]
    fn distinct_diagnostics() {
        let dup = Configuration::from_json("{\"points\":[\n[\"0\",\"0\"],\n[\"0\",\"0\"]]}").unwrap_err();
        assert!(matches!(dup, ConfigError::DuplicatePoint { line: 3, .. }), "{dup:?}");
        let bad = Configuration::from_json("{\"points\":[\n[\"1/0\",\"0\"]]}").unwrap_err();
        assert!(matches!(bad, ConfigError::MalformedRational { line: 2, .. }), "{bad:?}");
        assert_eq!(Configuration::from_json("  \n").unwrap_err(), ConfigError::EmptyInput);
        let syn = Configuration::from_json("{\"points\": [").unwrap_err();
        assert!(matches!(syn, ConfigError::Syntax { .. }));
        let lab = Configuration::from_json(r#"{"points":[["0","0"]],"labels":["a","b"]}"#).unwrap_err();
        assert!(matches!(lab, ConfigError::LabelCount { .. }));
    }

    #[test]
    fn json_round_trip_with_labels() {
        let c =
            Configuration::with_labels(vec![Point::int(0, 0), Point::frac(1, 3, -2, 1)], vec!["o".into(), "a".into()])
                .unwrap();
        let s = c.to_json();
        assert_eq!(s, r#"{"points":[["0","0"],["1/3","-2"]],"labels":["o","a"]}"#);
        assert_eq!(Configuration::from_json(&s).unwrap(), c);
    }

    #[test]
    fn subsets_keep_labels() {
        let c = Configuration::with_labels(
            vec![Point::int(0, 0), Point::int(1, 0), Point::int(2, 0)],
            vec!["x".into(), "y".into(), "z".into()],
        )
        .unwrap();
        assert_eq!(c.subset(0b101).labels(), vec!["x", "z"]);
        assert_eq!(c.without(0).labels(), vec!["y", "z"]);
    }
}
