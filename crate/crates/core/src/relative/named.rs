use std::fmt;
use std::str::FromStr;

use crate::geom::{collinear, Configuration, Point};

use super::RelativeError;

/// The five configurations of the small-order table that have no family name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Figure2 {
    R,
    RPrime,
    G,
    GPrime,
    P5,
}

impl Figure2 {
    pub const ALL: [Figure2; 5] = [Figure2::R, Figure2::RPrime, Figure2::G, Figure2::GPrime, Figure2::P5];

    fn data(self) -> &'static str {
        match self {
            Figure2::R => include_str!("../../data/figure2/R.json"),
            Figure2::RPrime => include_str!("../../data/figure2/R_prime.json"),
            Figure2::G => include_str!("../../data/figure2/G.json"),
            Figure2::GPrime => include_str!("../../data/figure2/G_prime.json"),
            Figure2::P5 => include_str!("../../data/figure2/P5.json"),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Figure2::R => "R",
            Figure2::RPrime => "R'",
            Figure2::G => "G",
            Figure2::GPrime => "G'",
            Figure2::P5 => "P5",
        }
    }
}

/// A named configuration with fixed rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedConfig {
    /// `n` collinear points.
    L(usize),
    /// `n` collinear points and one point off the line.
    T(usize),
    /// Diamond: a line through `c` with `p` points on one side and `q` on the
    /// other, and a three-point line with `c` in the middle.
    D(usize, usize),
    /// Diamond without its centre `c`.
    I(usize, usize),
    /// Six points whose only collinear triples are `{a,a',c'}`, `{b,b',a'}`, `{c,c',b'}`.
    S6,
    /// `o-a-a'` and `o-b-b'` with no other collinear triple.
    V5,
    Figure2(Figure2),
}

/// The twelve five-point configurations of the small-order table.
pub const FIVE_POINT_TABLE: [NamedConfig; 12] = [
    NamedConfig::L(5),
    NamedConfig::T(4),
    NamedConfig::V5,
    NamedConfig::D(0, 2),
    NamedConfig::Figure2(Figure2::R),
    NamedConfig::I(0, 3),
    NamedConfig::Figure2(Figure2::G),
    NamedConfig::Figure2(Figure2::RPrime),
    NamedConfig::D(1, 1),
    NamedConfig::I(1, 2),
    NamedConfig::Figure2(Figure2::GPrime),
    NamedConfig::Figure2(Figure2::P5),
];

fn labelled(points: Vec<Point>, labels: Vec<String>) -> Configuration {
    Configuration::with_labels(points, labels).expect("named configurations have distinct points")
}

impl NamedConfig {
    pub fn build(self) -> Configuration {
        match self {
            NamedConfig::L(n) => {
                labelled((0..n as i64).map(|i| Point::int(i, 0)).collect(), (0..n).map(|i| format!("x{i}")).collect())
            }
            NamedConfig::T(n) => {
                let mut pts: Vec<Point> = (0..n as i64).map(|i| Point::int(i, 0)).collect();
                pts.push(Point::int(0, 1));
                let mut names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
                names.push("t".into());
                labelled(pts, names)
            }
            NamedConfig::D(p, q) | NamedConfig::I(p, q) => {
                let with_c = matches!(self, NamedConfig::D(..));
                let mut pts = Vec::new();
                let mut names = Vec::new();
                for i in 1..=p as i64 {
                    pts.push(Point::int(-i, 0));
                    names.push(format!("l{i}"));
                }
                if with_c {
                    pts.push(Point::int(0, 0));
                    names.push("c".into());
                }
                for i in 1..=q as i64 {
                    pts.push(Point::int(i, 0));
                    names.push(format!("r{i}"));
                }
                pts.push(Point::int(0, -1));
                names.push("b1".into());
                pts.push(Point::int(0, 1));
                names.push("b2".into());
                labelled(pts, names)
            }
            NamedConfig::S6 => {
                // inner triangle a', b', c' with each outer vertex on an
                // extended inner side, turning the same way around
                let pts = vec![
                    Point::int(6, 0),  // a on line c'a'
                    Point::int(-2, 6), // b on line a'b'
                    Point::int(0, -2), // c on line b'c'
                    Point::int(4, 0),  // a'
                    Point::int(0, 4),  // b'
                    Point::int(0, 0),  // c'
                ];
                labelled(pts, ["a", "b", "c", "a'", "b'", "c'"].map(String::from).to_vec())
            }
            NamedConfig::V5 => labelled(
                vec![Point::int(0, 0), Point::int(1, 0), Point::int(2, 0), Point::int(0, 1), Point::int(0, 2)],
                ["o", "a", "a'", "b", "b'"].map(String::from).to_vec(),
            ),
            NamedConfig::Figure2(f) => Configuration::from_json(f.data()).expect("bundled configuration data parses"),
        }
    }

    /// The collinear triples the definition prescribes, as sorted index triples.
    pub fn intended_triples(self) -> Vec<[usize; 3]> {
        let line_triples = |idx: &[usize]| -> Vec<[usize; 3]> {
            let mut out = Vec::new();
            for (a, &i) in idx.iter().enumerate() {
                for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                    for &k in &idx[b + 1..] {
                        out.push([i, j, k]);
                    }
                }
            }
            out
        };
        let mut t = match self {
            NamedConfig::L(n) | NamedConfig::T(n) => line_triples(&(0..n).collect::<Vec<_>>()),
            NamedConfig::D(p, q) => {
                let a_line = p + q + 1;
                let mut t = line_triples(&(0..a_line).collect::<Vec<_>>());
                t.push([p, a_line, a_line + 1]);
                t
            }
            NamedConfig::I(p, q) => line_triples(&(0..p + q).collect::<Vec<_>>()),
            NamedConfig::S6 => vec![[0, 3, 5], [1, 3, 4], [2, 4, 5]],
            NamedConfig::V5 => vec![[0, 1, 2], [0, 3, 4]],
            NamedConfig::Figure2(f) => figure2_triples(f),
        };
        for tr in &mut t {
            tr.sort_unstable();
        }
        t.sort_unstable();
        t
    }

    /// True iff the built coordinates realize exactly the intended collinear triples.
    pub fn verify_collinearity(self) -> bool {
        collinear_triples(&self.build()) == self.intended_triples()
    }

    pub fn len(self) -> usize {
        self.build().len()
    }

    pub fn is_empty(self) -> bool {
        self.len() == 0
    }
}

fn figure2_triples(f: Figure2) -> Vec<[usize; 3]> {
    #[derive(serde::Deserialize)]
    struct Meta {
        collinear: Vec<[usize; 3]>,
    }
    let meta: Meta = serde_json::from_str(f.data()).expect("bundled configuration data parses");
    meta.collinear
}

/// All collinear index triples `i < j < k`, sorted.
pub fn collinear_triples(x: &Configuration) -> Vec<[usize; 3]> {
    let n = x.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(x.point(i), x.point(j), x.point(k)) {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

impl fmt::Display for NamedConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedConfig::L(n) => write!(f, "L{n}"),
            NamedConfig::T(n) => write!(f, "T{n}"),
            NamedConfig::D(p, q) => write!(f, "D{p},{q}"),
            NamedConfig::I(p, q) => write!(f, "I{p},{q}"),
            NamedConfig::S6 => f.write_str("S6"),
            NamedConfig::V5 => f.write_str("V5"),
            NamedConfig::Figure2(x) => f.write_str(x.name()),
        }
    }
}

impl FromStr for NamedConfig {
    type Err = RelativeError;

    fn from_str(s: &str) -> Result<NamedConfig, RelativeError> {
        let err = || RelativeError::UnknownName(s.to_string());
        let s = s.trim();
        let pair = |rest: &str| -> Result<(usize, usize), RelativeError> {
            let rest = rest.trim_start_matches('_').trim_matches(|c| c == '{' || c == '}');
            let (p, q) = rest.split_once(',').ok_or_else(err)?;
            Ok((p.trim().parse().map_err(|_| err())?, q.trim().parse().map_err(|_| err())?))
        };
        match s {
            "S6" => return Ok(NamedConfig::S6),
            "V5" => return Ok(NamedConfig::V5),
            "R" => return Ok(NamedConfig::Figure2(Figure2::R)),
            "R'" => return Ok(NamedConfig::Figure2(Figure2::RPrime)),
            "G" => return Ok(NamedConfig::Figure2(Figure2::G)),
            "G'" => return Ok(NamedConfig::Figure2(Figure2::GPrime)),
            "P5" => return Ok(NamedConfig::Figure2(Figure2::P5)),
            _ => {}
        }
        let (head, rest) = s.split_at(s.chars().next().map_or(0, |c| c.len_utf8()));
        match head {
            "L" => Ok(NamedConfig::L(rest.trim_start_matches('_').parse().map_err(|_| err())?)),
            "T" => Ok(NamedConfig::T(rest.trim_start_matches('_').parse().map_err(|_| err())?)),
            "D" => pair(rest).map(|(p, q)| NamedConfig::D(p, q)),
            "I" => pair(rest).map(|(p, q)| NamedConfig::I(p, q)),
            _ => Err(err()),
        }
    }
}
