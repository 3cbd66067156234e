use std::collections::HashSet;

use serde::Serialize;

use crate::convexgen::{saturate, Budget, ConvexgenError};
use crate::geom::{convex_hull, Point, Polytope};
use crate::relative::{equivalent, NamedConfig};

use super::frame::{derived_points, standard_v5, subdivide, symmetry, triangles_of_length, witness_point};
use super::{is_contiguous, BinaryWord, WordsError};

/// Equal-length word triangles share the apex `o`; they touch when they
/// share more than that.
fn touch(a: &Polytope, b: &Polytope, apex: &Polytope) -> bool {
    let m = a.meet(b);
    !m.is_empty() && m != *apex
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContiguityReport {
    pub depth: usize,
    pub pairs_checked: usize,
    pub counterexamples: Vec<(BinaryWord, BinaryWord)>,
}

/// For equal-length words up to `depth`: the triangles touch iff the words
/// are equal or contiguous.
pub fn check_contiguity_lemma(depth: usize) -> Result<ContiguityReport, WordsError> {
    let apex = Polytope::point(standard_v5().o);
    let mut report = ContiguityReport { depth, pairs_checked: 0, counterexamples: Vec::new() };
    for n in 1..=depth {
        let level = triangles_of_length(n)?;
        for (i, a) in level.iter().enumerate() {
            for b in &level[i..] {
                report.pairs_checked += 1;
                let expected = a.word == b.word || is_contiguous(&a.word, &b.word)?;
                let contains_apex = a.triangle.meet(&b.triangle).contains(&apex.vertices()[0]);
                if touch(&a.triangle, &b.triangle, &apex) != expected || !contains_apex {
                    report.counterexamples.push((a.word.clone(), b.word.clone()));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub words_checked: usize,
    /// Words whose triangle is not mapped onto the triangle of the complement.
    pub failures: Vec<BinaryWord>,
    /// The swap fixes `o` and exchanges `p ↔ q`, `p' ↔ q'`.
    pub frame_swapped: bool,
    pub involution: bool,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.frame_swapped && self.involution
    }
}

pub fn check_symmetry(depth: usize) -> Result<SymmetryReport, WordsError> {
    let s = symmetry();
    let f = standard_v5();
    let frame_swapped =
        s(&f.o) == f.o && s(&f.p) == f.q && s(&f.q) == f.p && s(&f.p_prime) == f.q_prime && s(&f.q_prime) == f.p_prime;
    let mut report = SymmetryReport { words_checked: 0, failures: Vec::new(), frame_swapped, involution: true };
    for n in 0..=depth {
        let level = triangles_of_length(n)?;
        for (i, t) in level.iter().enumerate() {
            report.words_checked += 1;
            // complement of the i-th word of length n is the (2^n - 1 - i)-th
            let image = t.triangle.map_affine(s);
            if image != level[level.len() - 1 - i].triangle {
                report.failures.push(t.word.clone());
            }
            if image.map_affine(s) != t.triangle {
                report.involution = false;
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeredityReport {
    pub frames_checked: usize,
    pub failures: Vec<BinaryWord>,
}

/// Every frame up to `depth` is a valid V5 frame equivalent to V5, and its
/// children split its triangle along `oc`.
pub fn check_frame_heredity(depth: usize) -> Result<HeredityReport, WordsError> {
    let v5 = NamedConfig::V5.build();
    let mut report = HeredityReport { frames_checked: 0, failures: Vec::new() };
    for n in 0..=depth {
        for t in triangles_of_length(n)? {
            report.frames_checked += 1;
            let f = &t.frame;
            let ok = f.validate().is_ok()
                && equivalent(&f.configuration(), &v5).is_some()
                && (|| {
                    let (_, c) = derived_points(f).ok()?;
                    let (up, low) = subdivide(f).ok()?;
                    let (tu, tl) = (up.triangle(), low.triangle());
                    let strict = |child: &Polytope| child.is_subset(&t.triangle) && *child != t.triangle;
                    let split = tu.meet(&tl) == convex_hull([f.o.clone(), c])
                        && tu.double_area() + tl.double_area() == t.triangle.double_area();
                    Some(strict(&tu) && strict(&tl) && split)
                })()
                .unwrap_or(false);
            if !ok {
                report.failures.push(t.word.clone());
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub pairs_checked: usize,
    pub failures: Vec<(BinaryWord, BinaryWord)>,
}

/// For distinct non-contiguous `0α`, `0β` of equal length up to `depth`: the
/// triangles meet only in `o`, the witnesses differ, and the complement of
/// `0β` starts with 1 so its triangle differs from that of `0α`.
pub fn check_separation(depth: usize) -> Result<SeparationReport, WordsError> {
    let apex = Polytope::point(standard_v5().o);
    let mut report = SeparationReport { pairs_checked: 0, failures: Vec::new() };
    for n in 2..=depth {
        let level = triangles_of_length(n)?;
        let half = &level[..level.len() / 2];
        let witnesses: Vec<Point> = half.iter().map(|t| witness_point(&t.word)).collect::<Result<_, _>>()?;
        for (i, a) in half.iter().enumerate() {
            for (j, b) in half.iter().enumerate().skip(i + 1) {
                if is_contiguous(&a.word, &b.word)? {
                    continue;
                }
                report.pairs_checked += 1;
                let comp = b.word.complement();
                let comp_tri = &level[level.len() - 1 - j].triangle;
                let ok = a.triangle.meet(&b.triangle) == apex
                    && witnesses[i] != witnesses[j]
                    && comp.letters()[0] == 1
                    && *comp_tri != a.triangle;
                if !ok {
                    report.failures.push((a.word.clone(), b.word.clone()));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct V5SymmetryReport {
    pub rounds: usize,
    pub elements_checked: usize,
    pub identity_invariant: bool,
    pub s_invariant: bool,
    pub new_points: usize,
    /// All generated points outside V5 lie in the closed triangle `a b c'`.
    pub new_points_in_triangle: bool,
}

/// Saturates the standard V5 within the budget and checks, over the fully
/// completed rounds, that the swap permutes the elements and that new points
/// stay inside `a b c'`.
pub fn v5_saturation_symmetry_check(budget: &Budget) -> Result<V5SymmetryReport, ConvexgenError> {
    let f = standard_v5();
    let x = f.configuration();
    let g = saturate(&x, budget)?;
    let rounds = g.completed_rounds();
    let elems: Vec<&Polytope> =
        (0..g.len()).filter(|&i| g.generation_index(i) <= rounds).map(|i| &g.elements()[i]).collect();
    let set: HashSet<&Polytope> = elems.iter().copied().collect();
    let s = symmetry();
    let s_invariant = elems.iter().all(|e| set.contains(&e.map_affine(s)));
    let identity_invariant = elems.iter().all(|e| set.contains(&e.map_affine(Point::clone)));
    let (c_prime, _) = derived_points(&f).expect("standard frame is valid");
    let tri = convex_hull([f.p.clone(), f.q.clone(), c_prime]);
    let fresh: Vec<&Point> = elems.iter().filter_map(|e| e.as_point()).filter(|p| x.index_of(p).is_none()).collect();
    Ok(V5SymmetryReport {
        rounds,
        elements_checked: elems.len(),
        identity_invariant,
        s_invariant,
        new_points: fresh.len(),
        new_points_in_triangle: fresh.iter().all(|p| tri.contains(p)),
    })
}
