use crate::geom::{orient, Configuration, Point, Rational};
use crate::relative::collinear_triples;

use super::WordsError;

const MAX_ATTEMPTS: usize = 64;

/// How the vertices of a triangle line up with the sides of the triangle
/// nested inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NestedPattern {
    /// No collinear triple.
    NoLine = 1,
    /// One outer vertex on an extended inner side.
    OneLine = 2,
    /// Two outer vertices on extended inner sides.
    TwoLines = 3,
    /// All three, turning the same way: the sporadic configuration.
    Sporadic = 4,
}

impl NestedPattern {
    pub const ALL: [NestedPattern; 4] =
        [NestedPattern::NoLine, NestedPattern::OneLine, NestedPattern::TwoLines, NestedPattern::Sporadic];

    pub fn from_code(code: u8) -> Result<NestedPattern, WordsError> {
        NestedPattern::ALL.get((code as usize).wrapping_sub(1)).copied().ok_or(WordsError::InvalidPattern(code))
    }

    fn lines(self) -> usize {
        self as usize - 1
    }
}

/// Intended collinear triples: triangle `j` occupies indices `3j..3j+3`, and
/// outer vertex `i` lies on the line through inner vertices `i-1` and `i`.
pub fn nested_pattern_triples(patterns: &[NestedPattern]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (j, pat) in patterns.iter().enumerate() {
        for i in 0..pat.lines() {
            let mut t = [3 * j + (i + 2) % 3, 3 * j + i, 3 * (j + 1) + i];
            t.sort_unstable();
            out.push(t);
        }
    }
    out.sort_unstable();
    out
}

fn outer_triangle(inner: &[Point; 3], pat: NestedPattern, attempt: usize, step: usize) -> [Point; 3] {
    let s = Rational::new(1 + (attempt % 4) as i64, 2);
    std::array::from_fn(|i| {
        let (prev, cur) = (&inner[(i + 2) % 3], &inner[i]);
        let (dx, dy) = cur.sub(prev);
        let mut q = cur.translate(&(&dx * &s), &(&dy * &s));
        if i >= pat.lines() {
            // push off the line, away from the inner triangle
            let e = Rational::new(1, (3 + i + 2 * step + attempt / 4) as i64);
            q = q.translate(&(&dy * &e), &-(&dx * &e));
        }
        q
    })
}

fn strictly_inside(p: &Point, tri: &[Point; 3]) -> bool {
    (0..3).all(|i| orient(&tri[i], &tri[(i + 1) % 3], p) > 0)
}

/// `k = patterns.len() + 1` nested triangles, each strictly inside the next,
/// whose consecutive pairs realize the given patterns (codes 1 to 4) and
/// whose only collinear triples are the intended ones.
pub fn nested_census(patterns: &[u8]) -> Result<Configuration, WordsError> {
    let pats: Vec<NestedPattern> = patterns.iter().map(|&c| NestedPattern::from_code(c)).collect::<Result<_, _>>()?;
    let intended = nested_pattern_triples(&pats);
    let innermost = [Point::int(0, 0), Point::int(5, 1), Point::int(2, 4)];
    'attempts: for attempt in 0..MAX_ATTEMPTS {
        let mut tris = vec![innermost.clone()];
        for (step, &pat) in pats.iter().enumerate() {
            let inner = tris.last().expect("non-empty");
            let outer = outer_triangle(inner, pat, attempt, step);
            if orient(&outer[0], &outer[1], &outer[2]) <= 0 || !inner.iter().all(|p| strictly_inside(p, &outer)) {
                continue 'attempts;
            }
            tris.push(outer);
        }
        let points: Vec<Point> = tris.into_iter().flatten().collect();
        let Ok(x) = Configuration::new(points) else { continue };
        if collinear_triples(&x) == intended {
            return Ok(x);
        }
    }
    Err(WordsError::ConstructionFailed(MAX_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relative::{equivalent, NamedConfig};

    #[test]
    fn sporadic_step_is_s6() {
        let x = nested_census(&[4]).unwrap();
        assert_eq!(x.len(), 6);
        assert!(equivalent(&x, &NamedConfig::S6.build()).is_some());
    }

    #[test]
    fn plain_step_has_no_lines() {
        let x = nested_census(&[1]).unwrap();
        assert!(collinear_triples(&x).is_empty());
    }

    #[test]
    fn single_steps_are_pairwise_distinct() {
        let xs: Vec<Configuration> = (1..=4).map(|p| nested_census(&[p]).unwrap()).collect();
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(equivalent(&xs[i], &xs[j]).is_none(), "{i} {j}");
            }
        }
    }

    #[test]
    fn rejects_bad_codes() {
        assert_eq!(nested_census(&[5]), Err(WordsError::InvalidPattern(5)));
        assert_eq!(nested_census(&[0]), Err(WordsError::InvalidPattern(0)));
        assert_eq!(nested_census(&[]).unwrap().len(), 3);
    }
}
