use std::collections::BTreeMap;

use serde::Serialize;

use crate::geom::{between, collinear, convex_hull, Configuration, Point, Polytope, Rational};
use crate::relative::collinear_triples;
use crate::svg::Canvas;

use super::{BinaryWord, WordsError};

/// Longest word accepted by [`triangle_of_word`].
pub const DEFAULT_DEPTH_LIMIT: usize = 12;

/// Five points `o, p, p', q, q'` with `o-p-p'` and `o-q-q'` the only collinear triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct V5Frame {
    pub o: Point,
    pub p: Point,
    #[serde(rename = "p'")]
    pub p_prime: Point,
    pub q: Point,
    #[serde(rename = "q'")]
    pub q_prime: Point,
}

impl V5Frame {
    pub fn validate(&self) -> Result<(), WordsError> {
        let betw = |a, b, c| between(a, b, c).unwrap_or(false);
        if !betw(&self.o, &self.p, &self.p_prime) || !betw(&self.o, &self.q, &self.q_prime) {
            return Err(WordsError::DegenerateFrame("base points are not between o and their primes"));
        }
        if collinear(&self.o, &self.p, &self.q) {
            return Err(WordsError::DegenerateFrame("o, p, q are collinear"));
        }
        let x =
            Configuration::new(self.points().to_vec()).map_err(|_| WordsError::DegenerateFrame("repeated point"))?;
        if collinear_triples(&x) != vec![[0, 1, 2], [0, 3, 4]] {
            return Err(WordsError::DegenerateFrame("extra collinear triple"));
        }
        Ok(())
    }

    /// `[o, p, p', q, q']`.
    pub fn points(&self) -> [Point; 5] {
        [self.o.clone(), self.p.clone(), self.p_prime.clone(), self.q.clone(), self.q_prime.clone()]
    }

    pub fn configuration(&self) -> Configuration {
        Configuration::with_labels(self.points().to_vec(), ["o", "p", "p'", "q", "q'"].map(String::from).to_vec())
            .expect("frame points are distinct")
    }

    /// The triangle `o p q`.
    pub fn triangle(&self) -> Polytope {
        convex_hull([self.o.clone(), self.p.clone(), self.q.clone()])
    }

    pub fn map(&self, f: impl Fn(&Point) -> Point) -> V5Frame {
        V5Frame { o: f(&self.o), p: f(&self.p), p_prime: f(&self.p_prime), q: f(&self.q), q_prime: f(&self.q_prime) }
    }
}

/// `o = (0,0)`, `p = (1,0)`, `p' = (2,0)`, `q = (0,1)`, `q' = (0,2)`.
pub fn standard_v5() -> V5Frame {
    V5Frame {
        o: Point::int(0, 0),
        p: Point::int(1, 0),
        p_prime: Point::int(2, 0),
        q: Point::int(0, 1),
        q_prime: Point::int(0, 2),
    }
}

/// `c' = pq' ∧ qp'` and `c = oc' ∧ pq`.
pub fn derived_points(f: &V5Frame) -> Result<(Point, Point), WordsError> {
    let seg = |a: &Point, b: &Point| convex_hull([a.clone(), b.clone()]);
    let c_prime = seg(&f.p, &f.q_prime)
        .meet(&seg(&f.q, &f.p_prime))
        .as_point()
        .cloned()
        .ok_or(WordsError::DegenerateFrame("pq' and qp' do not meet in a point"))?;
    let c = seg(&f.o, &c_prime)
        .meet(&seg(&f.p, &f.q))
        .as_point()
        .cloned()
        .ok_or(WordsError::DegenerateFrame("oc' and pq do not meet in a point"))?;
    Ok((c_prime, c))
}

/// The upper child (keeps `q`, letter 0) and the lower child (keeps `p`, letter 1).
pub fn subdivide(f: &V5Frame) -> Result<(V5Frame, V5Frame), WordsError> {
    let (c_prime, c) = derived_points(f)?;
    let upper =
        V5Frame { o: f.o.clone(), p: c.clone(), p_prime: c_prime.clone(), q: f.q.clone(), q_prime: f.q_prime.clone() };
    let lower = V5Frame { o: f.o.clone(), p: f.p.clone(), p_prime: f.p_prime.clone(), q: c, q_prime: c_prime };
    Ok((upper, lower))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordTriangle {
    pub word: BinaryWord,
    pub frame: V5Frame,
    pub triangle: Polytope,
}

pub fn triangle_of_word(w: &BinaryWord) -> Result<WordTriangle, WordsError> {
    triangle_of_word_limited(w, DEFAULT_DEPTH_LIMIT)
}

pub fn triangle_of_word_limited(w: &BinaryWord, limit: usize) -> Result<WordTriangle, WordsError> {
    if w.len() > limit {
        return Err(WordsError::DepthLimit(w.len(), limit));
    }
    let mut frame = standard_v5();
    for &l in w.letters() {
        let (upper, lower) = subdivide(&frame)?;
        frame = if l == 0 { upper } else { lower };
    }
    Ok(WordTriangle { word: w.clone(), triangle: frame.triangle(), frame })
}

/// Triangles of every word of length `n`, in lexicographic order.
pub(crate) fn triangles_of_length(n: usize) -> Result<Vec<WordTriangle>, WordsError> {
    if n > DEFAULT_DEPTH_LIMIT {
        return Err(WordsError::DepthLimit(n, DEFAULT_DEPTH_LIMIT));
    }
    let mut level = vec![(BinaryWord::empty(), standard_v5())];
    for _ in 0..n {
        let mut next = Vec::with_capacity(level.len() * 2);
        for (w, f) in &level {
            let (upper, lower) = subdivide(f)?;
            next.push((w.push(0), upper));
            next.push((w.push(1), lower));
        }
        level = next;
    }
    Ok(level.into_iter().map(|(word, frame)| WordTriangle { word, triangle: frame.triangle(), frame }).collect())
}

/// The coordinate swap, which exchanges `p ↔ q` and `p' ↔ q'` in the standard frame.
pub fn symmetry() -> fn(&Point) -> Point {
    Point::swapped
}

/// Centroid of the word triangle; lies in its interior and in the interior of `oab`.
pub fn witness_point(w: &BinaryWord) -> Result<Point, WordsError> {
    if w.is_empty() {
        return Err(WordsError::EmptyWord);
    }
    let t = triangle_of_word(w)?;
    let f = &t.frame;
    let third = Rational::new(1, 3);
    Ok(Point::new(&(&(&f.o.x + &f.p.x) + &f.q.x) * &third, &(&(&f.o.y + &f.p.y) + &f.q.y) * &third))
}

/// Frames of all words of length at most `depth`, keyed by word.
pub fn frames_json(depth: usize) -> Result<serde_json::Value, WordsError> {
    let mut out = BTreeMap::new();
    for n in 0..=depth {
        for t in triangles_of_length(n)? {
            out.insert(t.word.to_string(), t.frame);
        }
    }
    Ok(serde_json::to_value(out).expect("frames serialize"))
}

/// The subdivision of `oab` at the given depth, with word labels.
pub fn render_subdivision(depth: usize) -> Result<String, WordsError> {
    let f = standard_v5();
    let (c_prime, c) = derived_points(&f)?;
    let mut canvas = Canvas::fitted(f.points().iter(), 520.0);
    canvas.polytope(&convex_hull([f.p.clone(), f.q.clone(), c_prime.clone()]), "#b04040", "#b04040", 0.08);
    for t in triangles_of_length(depth)? {
        canvas.polytope(&t.triangle, "#3060a0", "#3060a0", 0.05);
        if depth <= 4 {
            let v = t.triangle.vertices();
            let third = Rational::new(1, 3);
            let cx = &(&(&v[0].x + &v[1].x) + &v[2].x) * &third;
            let cy = &(&(&v[0].y + &v[1].y) + &v[2].y) * &third;
            canvas.label(&Point::new(cx, cy), &t.word.to_string());
        }
    }
    for (p, name) in f.points().iter().zip(["o", "a", "a'", "b", "b'"]).chain([(&c, "c"), (&c_prime, "c'")]) {
        canvas.dot(p, 3.0, "black");
        canvas.label(p, name);
    }
    Ok(canvas.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn standard_frame_and_derived_points() {
        let f = standard_v5();
        f.validate().unwrap();
        let (c_prime, c) = derived_points(&f).unwrap();
        assert_eq!(c_prime, Point::frac(2, 3, 2, 3));
        assert_eq!(c, Point::frac(1, 2, 1, 2));
        assert!(between(&f.o, &c, &c_prime).unwrap());
    }

    #[test]
    fn derived_points_are_equivariant() {
        let two = Rational::from_integer(2);
        let f = standard_v5().map(|p| p.scale(&two));
        let (c_prime, c) = derived_points(&f).unwrap();
        assert_eq!(c_prime, Point::frac(4, 3, 4, 3));
        assert_eq!(c, Point::int(1, 1));
    }

    #[test]
    fn first_subdivision() {
        let (upper, lower) = subdivide(&standard_v5()).unwrap();
        let half = Point::frac(1, 2, 1, 2);
        assert_eq!(upper.triangle(), convex_hull([Point::int(0, 0), half.clone(), Point::int(0, 1)]));
        assert_eq!(lower.triangle(), convex_hull([Point::int(0, 0), Point::int(1, 0), half]));
        upper.validate().unwrap();
        lower.validate().unwrap();
        let parent = standard_v5().triangle().double_area();
        assert_eq!(upper.triangle().double_area() + lower.triangle().double_area(), parent);
    }

    #[test]
    fn words_to_triangles() {
        assert_eq!(triangle_of_word(&w("")).unwrap().triangle, standard_v5().triangle());
        let t0 = triangle_of_word(&w("0")).unwrap().triangle;
        let t01 = triangle_of_word(&w("01")).unwrap().triangle;
        assert!(t01.is_subset(&t0) && t01 != t0);
        assert_eq!(triangle_of_word(&w("0000000000000")), Err(WordsError::DepthLimit(13, 12)));
        let level = triangles_of_length(3).unwrap();
        assert_eq!(level[5].triangle, triangle_of_word(&w("101")).unwrap().triangle);
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_point(&w("0")).unwrap(), Point::frac(1, 6, 1, 2));
        assert_eq!(witness_point(&w("")), Err(WordsError::EmptyWord));
        let root = standard_v5().triangle();
        for word in BinaryWord::all_up_to(5).skip(1) {
            let z = witness_point(&word).unwrap();
            assert!(triangle_of_word(&word).unwrap().triangle.interior_contains(&z));
            assert!(root.interior_contains(&z));
            assert_eq!(symmetry()(&z), witness_point(&word.complement()).unwrap());
        }
    }

    #[test]
    fn svg_and_json_outputs() {
        let s = render_subdivision(2).unwrap();
        assert_eq!(s.matches("<polygon").count(), 5);
        assert!(s.contains(">01<"));
        let j = frames_json(1).unwrap();
        assert_eq!(j.as_object().unwrap().len(), 3);
        assert_eq!(j["0"]["p"], serde_json::json!(["1/2", "1/2"]));
    }
}
