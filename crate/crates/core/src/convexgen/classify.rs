use serde::Serialize;

use crate::geom::{collinear, cross, orient, Configuration, Point, Rational};
use crate::relative::{equivalent, k_subsets, NamedConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Finiteness {
    FiniteGenerating,
    InfiniteGenerating,
}

/// Evidence behind a finiteness verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// `x` is equivalent to the sub-configuration `target.subset(mask)` of a
    /// diamond; `map[i]` is the diamond index of point `i`.
    Diamond { target: String, mask: u64, map: Vec<usize> },
    /// `x` is equivalent to the sporadic configuration.
    Sporadic { map: Vec<usize> },
    /// A smallest sub-configuration that fits neither pattern. `near_misses`
    /// lists lines of `x` leaving exactly two points that lie on the same side.
    Obstruction { subset: Vec<usize>, near_misses: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Finiteness,
    pub certificate: Certificate,
}

/// Largest configuration for which a minimal obstruction is searched.
const OBSTRUCTION_SEARCH_LIMIT: usize = 16;

fn mask_of(idx: impl IntoIterator<Item = usize>) -> u64 {
    idx.into_iter().fold(0, |m, i| m | 1 << i)
}

/// Point of line `ab` on line `cd`; the lines must cross.
fn line_intersection(a: &Point, b: &Point, c: &Point, d: &Point) -> Point {
    let t = cross(c, d, a) / (cross(c, d, a) - cross(c, d, b));
    a.lerp(b, &t)
}

/// Lines through at least two points, as point masks, in first-pair order.
fn lines(x: &Configuration) -> Vec<u64> {
    let n = x.len();
    let mut out: Vec<u64> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let m = mask_of((0..n).filter(|&k| k == i || k == j || collinear(x.point(i), x.point(j), x.point(k))));
            if !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out
}

/// Diamond sub-configuration pattern for `x` using `line` as the long line.
fn diamond_pattern(x: &Configuration, line: u64) -> Option<(NamedConfig, u64)> {
    let n = x.len();
    let on: Vec<usize> = (0..n).filter(|&i| line >> i & 1 == 1).collect();
    let off: Vec<usize> = (0..n).filter(|&i| line >> i & 1 == 0).collect();
    let (a0, a1) = (x.point(on[0]), x.point(on[1]));
    let mut along: Vec<&Point> = on.iter().map(|&i| x.point(i)).collect();
    along.sort();
    match off.as_slice() {
        [] => {
            // L_n inside D_{n-1,0}: the line without the two B points
            let k = on.len();
            Some((NamedConfig::D(k - 1, 0), mask_of(0..k)))
        }
        [_] => {
            let k = on.len();
            Some((NamedConfig::D(k - 1, 0), mask_of(0..=k)))
        }
        [u, v] => {
            let (b1, b2) = (x.point(*u), x.point(*v));
            if orient(a0, a1, b1) * orient(a0, a1, b2) >= 0 {
                return None;
            }
            let c = line_intersection(b1, b2, a0, a1);
            let p = along.iter().filter(|&&q| *q < c).count();
            let q = along.iter().filter(|&&q| *q > c).count();
            let has_c = along.iter().any(|&q| *q == c);
            // diamond order: left points, c, right points, b1, b2
            let total = p + q + 3;
            let mut m = mask_of(0..total);
            if !has_c {
                m &= !(1 << p);
            }
            Some((NamedConfig::D(p, q), m))
        }
        _ => None,
    }
}

/// Structural test for being a sub-configuration of a diamond, confirmed by an
/// explicit equivalence.
fn diamond_certificate(x: &Configuration) -> Option<Certificate> {
    if x.len() <= 1 {
        let mask = mask_of(0..x.len());
        return Some(Certificate::Diamond { target: "D0,0".into(), mask, map: vec![0; x.len()] });
    }
    lines(x).into_iter().find_map(|line| {
        let (d, mask) = diamond_pattern(x, line)?;
        let sub = d.build().subset(mask);
        let f = equivalent(x, &sub)?;
        // translate subset indices back to diamond indices
        let used: Vec<usize> = (0..64).filter(|&i| mask >> i & 1 == 1).collect();
        let map = f.iter().map(|&j| used[j]).collect();
        Some(Certificate::Diamond { target: d.to_string(), mask, map })
    })
}

fn sporadic_certificate(x: &Configuration) -> Option<Certificate> {
    if x.len() != 6 {
        return None;
    }
    equivalent(x, &NamedConfig::S6.build()).map(|map| Certificate::Sporadic { map })
}

fn near_misses(x: &Configuration) -> Vec<Vec<usize>> {
    lines(x)
        .into_iter()
        .filter_map(|line| {
            let on: Vec<usize> = (0..x.len()).filter(|&i| line >> i & 1 == 1).collect();
            let off: Vec<usize> = (0..x.len()).filter(|&i| line >> i & 1 == 0).collect();
            let [u, v] = off.as_slice() else { return None };
            let (a0, a1) = (x.point(on[0]), x.point(on[1]));
            (orient(a0, a1, x.point(*u)) == orient(a0, a1, x.point(*v))).then_some(on)
        })
        .collect()
}

fn is_finite_pattern(x: &Configuration) -> bool {
    diamond_certificate(x).is_some() || sporadic_certificate(x).is_some()
}

/// Decides whether K(X) is finite by the diamond/sporadic characterization.
pub fn classify_finiteness(x: &Configuration) -> Classification {
    if let Some(certificate) = diamond_certificate(x).or_else(|| sporadic_certificate(x)) {
        return Classification { verdict: Finiteness::FiniteGenerating, certificate };
    }
    let n = x.len();
    let subset = if n <= OBSTRUCTION_SEARCH_LIMIT {
        (5..n)
            .flat_map(|k| k_subsets(n, k))
            .find(|&m| !is_finite_pattern(&x.subset(m)))
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
    } else {
        None
    };
    Classification {
        verdict: Finiteness::InfiniteGenerating,
        certificate: Certificate::Obstruction {
            subset: subset.unwrap_or_else(|| (0..n).collect()),
            near_misses: near_misses(x),
        },
    }
}

/// Integer approximation of a regular pentagon, scaled by 1000.
pub fn regular_pentagon() -> Configuration {
    let pts = (0..5)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / 5.0 + std::f64::consts::FRAC_PI_2;
            let r = |v: f64| Rational::from_integer((1000.0 * v).round() as i64);
            Point::new(r(t.cos()), r(t.sin()))
        })
        .collect();
    Configuration::new(pts).expect("distinct vertices")
}
