//! Brute-force geometry on small `i128` rationals, written without the
//! library's hull, clipping or orientation code.

#![allow(dead_code)]

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use convexlat::geom::{Point, Polytope};

pub type Q = Ratio<i128>;
pub type P = (Q, Q);

pub fn q(n: i128) -> Q {
    Q::from_integer(n)
}

pub fn from_point(p: &Point) -> P {
    let c = |r: &convexlat::geom::Rational| Q::new(r.numer().to_i128().unwrap(), r.denom().to_i128().unwrap());
    (c(&p.x), c(&p.y))
}

pub fn to_point(p: &P) -> Point {
    let c = |r: &Q| convexlat::geom::Rational::new(*r.numer() as i64, *r.denom() as i64);
    Point::new(c(&p.0), c(&p.1))
}

pub fn cross(a: &P, b: &P, c: &P) -> Q {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

pub fn on_segment(a: &P, b: &P, z: &P) -> bool {
    cross(a, b, z).is_zero() && a.0.min(b.0) <= z.0 && z.0 <= a.0.max(b.0) && a.1.min(b.1) <= z.1 && z.1 <= a.1.max(b.1)
}

/// Closed triangle membership, degenerate triangles included.
pub fn in_triangle(a: &P, b: &P, c: &P, z: &P) -> bool {
    let area = cross(a, b, c);
    if area.is_zero() {
        return on_segment(a, b, z) || on_segment(b, c, z) || on_segment(a, c, z);
    }
    let s = |d: Q| if area > Q::zero() { d >= Q::zero() } else { d <= Q::zero() };
    s(cross(a, b, z)) && s(cross(b, c, z)) && s(cross(c, a, z))
}

/// Membership in the convex hull by Carathéodory: some triple contains `z`.
pub fn in_hull(pts: &[P], z: &P) -> bool {
    let n = pts.len();
    (0..n).any(|i| (i..n).any(|j| (j..n).any(|k| in_triangle(&pts[i], &pts[j], &pts[k], z))))
}

pub fn dedup(mut pts: Vec<P>) -> Vec<P> {
    pts.sort();
    pts.dedup();
    pts
}

/// Points of the set not in the hull of the others, sorted.
pub fn extreme(pts: &[P]) -> Vec<P> {
    let pts = dedup(pts.to_vec());
    let mut out: Vec<P> = pts
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            let others: Vec<P> = pts.iter().enumerate().filter(|(j, _)| j != i).map(|(_, q)| *q).collect();
            !in_hull(&others, p)
        })
        .map(|(_, p)| *p)
        .collect();
    out.sort();
    out
}

pub fn vertices(p: &Polytope) -> Vec<P> {
    let mut v: Vec<P> = p.vertices().iter().map(from_point).collect();
    v.sort();
    v
}

/// Every chord between two vertices; crossings of chords lie in both bodies,
/// so using all of them instead of boundary edges only adds interior candidates.
fn chords(v: &[P]) -> Vec<(P, P)> {
    (0..v.len()).flat_map(|i| (i + 1..v.len()).map(move |j| (v[i], v[j]))).collect()
}

fn segment_crossing(a: &P, b: &P, c: &P, d: &P) -> Option<P> {
    let den = (b.0 - a.0) * (d.1 - c.1) - (b.1 - a.1) * (d.0 - c.0);
    if den.is_zero() {
        return None;
    }
    let t = ((c.0 - a.0) * (d.1 - c.1) - (c.1 - a.1) * (d.0 - c.0)) / den;
    let u = ((c.0 - a.0) * (b.1 - a.1) - (c.1 - a.1) * (b.0 - a.0)) / den;
    let unit = |s: &Q| *s >= Q::zero() && *s <= q(1);
    (unit(&t) && unit(&u)).then(|| (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1)))
}

/// Extreme points of `P ∩ Q`, from vertices inside the other body and
/// pairwise chord crossings.
pub fn meet_vertices(p: &[P], r: &[P]) -> Vec<P> {
    let mut cand: Vec<P> = p.iter().filter(|z| !r.is_empty() && in_hull(r, z)).copied().collect();
    cand.extend(r.iter().filter(|z| !p.is_empty() && in_hull(p, z)).copied());
    for (a, b) in chords(p) {
        for (c, d) in chords(r) {
            cand.extend(segment_crossing(&a, &b, &c, &d));
        }
    }
    extreme(&cand)
}

pub fn join_vertices(p: &[P], r: &[P]) -> Vec<P> {
    extreme(&[p, r].concat())
}
