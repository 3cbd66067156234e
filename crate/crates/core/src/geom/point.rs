use std::fmt;

use serde::{Deserialize, Serialize};

use super::{GeomError, Rational};

/// A point of the plane with exact rational coordinates.
///
/// Ordered lexicographically by `x`, then `y`. Serializes as a two-element
/// array of rational strings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Point {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Point {
        Point::new(x.into(), y.into())
    }

    /// Point with coordinates `xn/xd`, `yn/yd`.
    pub fn frac(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::new(Rational::new(xn, xd), Rational::new(yn, yd))
    }

    pub fn sub(&self, other: &Point) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    /// `self + t * (to - self)`.
    pub fn lerp(&self, to: &Point, t: &Rational) -> Point {
        Point::new(&self.x + &(t * &(&to.x - &self.x)), &self.y + &(t * &(&to.y - &self.y)))
    }

    pub fn scale(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }

    /// Reflection across the diagonal `y = x`.
    pub fn swapped(&self) -> Point {
        Point::new(self.y.clone(), self.x.clone())
    }
}

impl From<[Rational; 2]> for Point {
    fn from([x, y]: [Rational; 2]) -> Point {
        Point { x, y }
    }
}

impl From<Point> for [Rational; 2] {
    fn from(p: Point) -> [Rational; 2] {
        [p.x, p.y]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Twice the signed area of triangle `p q r`.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    let (ux, uy) = q.sub(p);
    let (vx, vy) = r.sub(p);
    &(&ux * &vy) - &(&uy * &vx)
}

/// Sign of the turn `p -> q -> r`: +1 counter-clockwise, -1 clockwise, 0 collinear.
pub fn orient(p: &Point, q: &Point, r: &Point) -> i32 {
    cross(p, q, r).signum()
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    orient(p, q, r) == 0
}

/// True iff `a`, `b`, `c` are collinear with `b` strictly inside segment `ac`.
pub fn between(a: &Point, b: &Point, c: &Point) -> Result<bool, GeomError> {
    if a == b || b == c || a == c {
        return Err(GeomError::NotDistinct);
    }
    Ok(collinear(a, b, c) && strictly_inside_span(a, b, c))
}

// Assumes collinearity; checks that b sits strictly between a and c along the line.
pub(crate) fn strictly_inside_span(a: &Point, b: &Point, c: &Point) -> bool {
    let lo = a.min(c);
    let hi = a.max(c);
    lo < b && b < hi
}

/// Closed-span version of [`strictly_inside_span`].
pub(crate) fn inside_span(a: &Point, b: &Point, c: &Point) -> bool {
    let lo = a.min(c);
    let hi = a.max(c);
    lo <= b && b <= hi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_examples() {
        let o = Point::int(0, 0);
        assert_eq!(orient(&o, &Point::int(1, 0), &Point::int(2, 0)), 0);
        assert_eq!(orient(&o, &Point::int(1, 0), &Point::int(0, 1)), 1);
        assert_eq!(orient(&o, &Point::int(0, 1), &Point::int(1, 0)), -1);
    }

    #[test]
    fn betweenness() {
        let (a, b, c) = (Point::int(0, 0), Point::int(1, 1), Point::int(2, 2));
        assert!(between(&a, &b, &c).unwrap());
        assert!(!between(&a, &c, &b).unwrap());
        assert!(!between(&a, &Point::int(1, 0), &Point::int(0, 1)).unwrap());
        // vertical line: lexicographic order falls back to y
        assert!(between(&Point::int(0, 0), &Point::int(0, 1), &Point::int(0, 3)).unwrap());
        assert_eq!(between(&a, &a, &c), Err(GeomError::NotDistinct));
    }

    #[test]
    fn json_form() {
        let p = Point::frac(1, 2, -1, 3);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/2","-1/3"]"#);
        assert_eq!(serde_json::from_str::<Point>(&s).unwrap(), p);
    }
}
