use std::fmt;

use serde::{Deserialize, Serialize};

use super::point::{cross, inside_span, orient, strictly_inside_span};
use super::{Point, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PolytopeKind {
    Empty,
    SinglePoint,
    Segment,
    Polygon,
}

/// A bounded convex set of the plane, stored by its extreme points in
/// canonical order.
///
/// Canonical form: a segment lists its endpoints in lexicographic order; a
/// polygon lists its vertices counter-clockwise, strictly convex, starting at
/// the lexicographically smallest one. Two polytopes are the same set iff
/// their vertex lists are equal, so the derived `Eq`/`Ord`/`Hash` are set
/// equality and a total order usable as a dedup key.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Polytope {
    vertices: Vec<Point>,
}

impl Polytope {
    pub fn empty() -> Polytope {
        Polytope { vertices: Vec::new() }
    }

    pub fn point(p: Point) -> Polytope {
        Polytope { vertices: vec![p] }
    }

    pub fn segment(a: Point, b: Point) -> Polytope {
        convex_hull([a, b])
    }

    pub fn triangle(a: Point, b: Point, c: Point) -> Polytope {
        convex_hull([a, b, c])
    }

    pub fn kind(&self) -> PolytopeKind {
        match self.vertices.len() {
            0 => PolytopeKind::Empty,
            1 => PolytopeKind::SinglePoint,
            2 => PolytopeKind::Segment,
            _ => PolytopeKind::Polygon,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The single point, if this is a singleton.
    pub fn as_point(&self) -> Option<&Point> {
        match self.vertices.as_slice() {
            [p] => Some(p),
            _ => None,
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Extreme points, i.e. the canonical vertex list.
    pub fn extreme_points(&self) -> &[Point] {
        &self.vertices
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self.vertices.as_slice() {
            [] => false,
            [q] => q == p,
            [a, b] => orient(a, b, p) == 0 && inside_span(a, p, b),
            vs => edges(vs).all(|(u, v)| orient(u, v, p) >= 0),
        }
    }

    /// Membership in the interior relative to the affine span.
    pub fn interior_contains(&self, p: &Point) -> bool {
        match self.vertices.as_slice() {
            [] => false,
            [q] => q == p,
            [a, b] => orient(a, b, p) == 0 && strictly_inside_span(a, p, b),
            vs => edges(vs).all(|(u, v)| orient(u, v, p) > 0),
        }
    }

    /// `self ⊆ other` as point sets.
    pub fn is_subset(&self, other: &Polytope) -> bool {
        self.vertices.iter().all(|v| other.contains(v))
    }

    /// Set intersection.
    pub fn meet(&self, other: &Polytope) -> Polytope {
        meet(self, other)
    }

    /// Convex hull of the union.
    pub fn join(&self, other: &Polytope) -> Polytope {
        join(self, other)
    }

    /// Twice the area; zero for anything that is not a polygon.
    pub fn double_area(&self) -> Rational {
        let vs = &self.vertices;
        if vs.len() < 3 {
            return Rational::zero();
        }
        let o = &vs[0];
        vs.windows(2).skip(1).fold(Rational::zero(), |acc, w| acc + cross(o, &w[0], &w[1]))
    }

    /// Image under a point map that is an invertible affine transformation.
    pub fn map_affine(&self, f: impl Fn(&Point) -> Point) -> Polytope {
        convex_hull(self.vertices.iter().map(f))
    }

    /// Re-derive the canonical form from the stored vertices.
    pub fn canonicalize(&self) -> Polytope {
        convex_hull(self.vertices.iter().cloned())
    }
}

impl fmt::Debug for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.kind(), self.vertices)
    }
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Polytope, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<Point>,
        }
        let raw = Raw::deserialize(d)?;
        Ok(convex_hull(raw.vertices))
    }
}

fn edges(vs: &[Point]) -> impl Iterator<Item = (&Point, &Point)> {
    vs.iter().zip(vs.iter().cycle().skip(1))
}

/// Convex hull of a finite point set (Andrew's monotone chain).
///
/// Collinear boundary points are dropped, so the result lists extreme points only.
pub fn convex_hull<I: IntoIterator<Item = Point>>(points: I) -> Polytope {
    let mut pts: Vec<Point> = points.into_iter().collect();
    pts.sort();
    pts.dedup();
    match pts.len() {
        0 | 1 => return Polytope { vertices: pts },
        _ => {}
    }

    let chain = |iter: &mut dyn Iterator<Item = &Point>| -> Vec<Point> {
        let mut out: Vec<Point> = Vec::new();
        for p in iter {
            while out.len() >= 2 && orient(&out[out.len() - 2], &out[out.len() - 1], p) <= 0 {
                out.pop();
            }
            out.push(p.clone());
        }
        out
    };

    let mut lower = chain(&mut pts.iter());
    let mut upper = chain(&mut pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // starts at the lexicographic minimum and runs counter-clockwise; a fully
    // collinear input collapses to its two extreme endpoints
    Polytope { vertices: lower }
}

pub fn join(p: &Polytope, q: &Polytope) -> Polytope {
    if p.is_empty() {
        return q.clone();
    }
    if q.is_empty() || p == q {
        return p.clone();
    }
    convex_hull(p.vertices.iter().chain(q.vertices.iter()).cloned())
}

/// Half-plane `a*x + b*y + c >= 0`.
struct HalfPlane {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl HalfPlane {
    /// Points on or to the left of the directed line `u -> v`.
    fn left_of(u: &Point, v: &Point) -> HalfPlane {
        // cross(u, v, p) = (v-u) x (p-u)
        let (dx, dy) = v.sub(u);
        let a = -&dy;
        let b = dx.clone();
        let c = &(&dy * &u.x) - &(&dx * &u.y);
        HalfPlane { a, b, c }
    }

    /// Points whose projection on `u -> v` is not behind `u`.
    fn ahead_of(u: &Point, v: &Point) -> HalfPlane {
        let (dx, dy) = v.sub(u);
        let c = -(&(&dx * &u.x) + &(&dy * &u.y));
        HalfPlane { a: dx, b: dy, c }
    }

    fn eval(&self, p: &Point) -> Rational {
        &(&(&self.a * &p.x) + &(&self.b * &p.y)) + &self.c
    }

    /// Sutherland-Hodgman step against one half-plane. Works for degenerate
    /// rings (a single point, or a segment given as a two-vertex ring).
    fn clip(&self, ring: &[Point]) -> Vec<Point> {
        let mut out = Vec::with_capacity(ring.len() + 1);
        if ring.len() == 1 {
            if self.eval(&ring[0]).signum() >= 0 {
                out.push(ring[0].clone());
            }
            return out;
        }
        let vals: Vec<Rational> = ring.iter().map(|p| self.eval(p)).collect();
        for i in 0..ring.len() {
            let j = (i + 1) % ring.len();
            let (fs, fe) = (&vals[i], &vals[j]);
            let (ss, se) = (fs.signum(), fe.signum());
            if ss >= 0 {
                out.push(ring[i].clone());
            }
            if (ss > 0 && se < 0) || (ss < 0 && se > 0) {
                let t = fs / &(fs - fe);
                out.push(ring[i].lerp(&ring[j], &t));
            }
        }
        out
    }
}

fn constraints(q: &Polytope) -> Vec<HalfPlane> {
    match q.vertices.as_slice() {
        [a, b] => vec![
            HalfPlane::left_of(a, b),
            HalfPlane::left_of(b, a),
            HalfPlane::ahead_of(a, b),
            HalfPlane::ahead_of(b, a),
        ],
        vs => edges(vs).map(|(u, v)| HalfPlane::left_of(u, v)).collect(),
    }
}

/// Set intersection of two canonical polytopes, returned in canonical form
/// with its true dimension (never a zero-area polygon).
pub fn meet(p: &Polytope, q: &Polytope) -> Polytope {
    if p.is_empty() || q.is_empty() {
        return Polytope::empty();
    }
    if p == q {
        return p.clone();
    }
    if let Some(x) = q.as_point() {
        return if p.contains(x) { q.clone() } else { Polytope::empty() };
    }
    if let Some(x) = p.as_point() {
        return if q.contains(x) { p.clone() } else { Polytope::empty() };
    }
    // clip the smaller ring by the other's half-planes
    let (ring, cutter) = if p.vertices.len() <= q.vertices.len() { (p, q) } else { (q, p) };
    let mut pts = ring.vertices.clone();
    for h in constraints(cutter) {
        pts = h.clip(&pts);
        if pts.is_empty() {
            return Polytope::empty();
        }
    }
    convex_hull(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq() -> Polytope {
        convex_hull([Point::int(0, 0), Point::int(1, 0), Point::int(0, 1), Point::int(1, 1)])
    }

    #[test]
    fn hull_examples() {
        let h = convex_hull([
            Point::int(0, 0),
            Point::int(1, 0),
            Point::int(0, 1),
            Point::int(1, 1),
            Point::frac(1, 2, 1, 2),
        ]);
        assert_eq!(h.kind(), PolytopeKind::Polygon);
        assert_eq!(h.vertices(), &[Point::int(0, 0), Point::int(1, 0), Point::int(1, 1), Point::int(0, 1)]);
        let s = convex_hull([Point::int(1, 1), Point::int(0, 0), Point::int(2, 2)]);
        assert_eq!(s.vertices(), &[Point::int(0, 0), Point::int(2, 2)]);
        assert_eq!(convex_hull(Vec::new()).kind(), PolytopeKind::Empty);
    }

    #[test]
    fn collinear_boundary_points_dropped() {
        let h = convex_hull([Point::int(0, 0), Point::int(1, 0), Point::int(2, 0), Point::int(0, 2)]);
        assert_eq!(h.vertices().len(), 3);
    }

    #[test]
    fn meet_examples() {
        let d1 = Polytope::segment(Point::int(0, 0), Point::int(1, 1));
        let d2 = Polytope::segment(Point::int(1, 0), Point::int(0, 1));
        assert_eq!(meet(&d1, &d2), Polytope::point(Point::frac(1, 2, 1, 2)));
        assert_eq!(meet(&sq(), &sq()), sq());
        let s1 = Polytope::segment(Point::int(0, 0), Point::int(1, 0));
        let s2 = Polytope::segment(Point::int(2, 0), Point::int(3, 0));
        assert!(meet(&s1, &s2).is_empty());
    }

    #[test]
    fn meet_degenerate_cases() {
        // collinear overlap
        let s1 = Polytope::segment(Point::int(0, 0), Point::int(2, 0));
        let s2 = Polytope::segment(Point::int(1, 0), Point::int(3, 0));
        assert_eq!(meet(&s1, &s2), Polytope::segment(Point::int(1, 0), Point::int(2, 0)));
        // collinear touching at an endpoint
        let s3 = Polytope::segment(Point::int(2, 0), Point::int(3, 0));
        assert_eq!(meet(&s1, &s3), Polytope::point(Point::int(2, 0)));
        // triangles sharing only a vertex
        let t1 = Polytope::triangle(Point::int(0, 0), Point::int(1, 0), Point::int(0, 1));
        let t2 = Polytope::triangle(Point::int(1, 0), Point::int(2, 0), Point::int(2, 1));
        assert_eq!(meet(&t1, &t2), Polytope::point(Point::int(1, 0)));
        // triangles sharing an edge
        let t3 = Polytope::triangle(Point::int(1, 0), Point::int(0, 1), Point::int(1, 1));
        assert_eq!(meet(&t1, &t3), Polytope::segment(Point::int(1, 0), Point::int(0, 1)));
        // segment crossing a polygon
        let cut = Polytope::segment(Point::frac(-1, 1, 1, 2), Point::frac(3, 1, 1, 2));
        assert_eq!(meet(&sq(), &cut), Polytope::segment(Point::frac(0, 1, 1, 2), Point::frac(1, 1, 1, 2)));
        // segment along an edge
        let edge = Polytope::segment(Point::int(-1, 0), Point::int(3, 0));
        assert_eq!(meet(&sq(), &edge), Polytope::segment(Point::int(0, 0), Point::int(1, 0)));
        // point on boundary
        assert_eq!(meet(&sq(), &Polytope::point(Point::int(1, 1))), Polytope::point(Point::int(1, 1)));
    }

    #[test]
    fn join_examples() {
        let a = Polytope::point(Point::int(0, 0));
        let b = Polytope::point(Point::int(1, 0));
        let c = Polytope::point(Point::int(0, 1));
        assert_eq!(join(&a, &b).kind(), PolytopeKind::Segment);
        assert_eq!(join(&Polytope::empty(), &a), a);
        let tri = join(&join(&a, &b), &c);
        assert_eq!(tri, Polytope::triangle(Point::int(0, 0), Point::int(1, 0), Point::int(0, 1)));
    }

    #[test]
    fn containment() {
        let half = Point::frac(1, 2, 1, 2);
        assert!(sq().contains(&half) && sq().interior_contains(&half));
        assert!(sq().contains(&Point::int(0, 0)) && !sq().interior_contains(&Point::int(0, 0)));
        let s = Polytope::segment(Point::int(0, 0), Point::int(2, 0));
        assert!(s.contains(&Point::int(1, 0)) && s.interior_contains(&Point::int(1, 0)));
        assert!(!s.interior_contains(&Point::int(2, 0)));
        let p = Polytope::point(Point::int(3, 3));
        assert!(p.interior_contains(&Point::int(3, 3)));
    }

    #[test]
    fn area() {
        assert_eq!(sq().double_area(), Rational::from(2));
    }
}
