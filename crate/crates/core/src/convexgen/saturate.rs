use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::geom::{Configuration, Point, Polytope, PolytopeKind};
use crate::lattice::{FiniteLattice, LatticeError};

use super::ConvexgenError;

/// Pairs evaluated between budget checks.
const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Budget {
    pub max_rounds: usize,
    pub max_elements: usize,
    /// Hard cap on the bit size of any generated coordinate; exceeding it is an error.
    pub max_coordinate_bits: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget { max_rounds: 8, max_elements: 50_000, max_coordinate_bits: 4096 }
    }
}

impl Budget {
    pub fn new(max_rounds: usize, max_elements: usize) -> Budget {
        Budget { max_rounds, max_elements, ..Budget::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "budget")]
pub enum SaturationStatus {
    Saturated,
    BudgetExhausted(Budget),
}

/// The elements of K(X) reached by round-based saturation.
#[derive(Debug, Clone)]
pub struct GeneratedLattice {
    elements: Vec<Polytope>,
    rounds: Vec<usize>,
    status: SaturationStatus,
    round_sizes: Vec<usize>,
    completed_rounds: usize,
}

impl GeneratedLattice {
    /// Elements in canonical order.
    pub fn elements(&self) -> &[Polytope] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn status(&self) -> SaturationStatus {
        self.status
    }

    pub fn is_saturated(&self) -> bool {
        self.status == SaturationStatus::Saturated
    }

    /// Round in which element `i` first appeared (singletons are round 0).
    pub fn generation_index(&self, i: usize) -> usize {
        self.rounds[i]
    }

    pub fn position(&self, p: &Polytope) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Polytope) -> bool {
        self.position(p).is_some()
    }

    /// Element counts after round 0, 1, ...; the last entry may be a partial round.
    pub fn round_sizes(&self) -> &[usize] {
        &self.round_sizes
    }

    /// Rounds run to completion (a saturated run counts its final idle round).
    pub fn completed_rounds(&self) -> usize {
        self.completed_rounds
    }

    /// Points appearing as singleton elements.
    pub fn singletons(&self) -> impl Iterator<Item = &Point> {
        self.elements.iter().filter_map(Polytope::as_point)
    }

    /// Exhaustive check that every pairwise join and meet is an element.
    pub fn is_closed(&self) -> bool {
        let n = self.len();
        (0..n).into_par_iter().all(|i| {
            (0..i).all(|j| {
                let (a, b) = (&self.elements[i], &self.elements[j]);
                self.contains(&a.join(b)) && self.contains(&a.meet(b))
            })
        })
    }

    /// The elements as a dense finite lattice ordered by inclusion.
    pub fn to_lattice(&self) -> Result<FiniteLattice, LatticeError> {
        let n = self.len();
        let labels = self.elements.iter().map(|p| format!("{p:?}")).collect();
        let find = |p: Polytope| self.position(&p).unwrap_or(n);
        FiniteLattice::from_operations(
            labels,
            |a, b| self.elements[a].is_subset(&self.elements[b]),
            |a, b| find(self.elements[a].meet(&self.elements[b])),
            |a, b| find(self.elements[a].join(&self.elements[b])),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Element<'a> {
            kind: PolytopeKind,
            vertices: &'a [Point],
            round: usize,
        }
        let elements: Vec<Element> = self
            .elements
            .iter()
            .zip(&self.rounds)
            .map(|(p, &round)| Element { kind: p.kind(), vertices: p.vertices(), round })
            .collect();
        serde_json::json!({
            "status": self.status,
            "size": self.len(),
            "completed_rounds": self.completed_rounds,
            "round_sizes": self.round_sizes,
            "elements": elements,
        })
    }
}

fn too_big(p: &Polytope, cap: u64) -> bool {
    p.vertices().iter().any(|v| v.x.bits() > cap || v.y.bits() > cap)
}

/// Round-based closure of the singletons of `x` under join and meet.
pub fn saturate(x: &Configuration, budget: &Budget) -> Result<GeneratedLattice, ConvexgenError> {
    run(x, budget, false).map(|(g, _)| g)
}

/// Saturates only until a singleton outside `x` appears.
pub fn first_new_point(x: &Configuration, budget: &Budget) -> Result<Option<Point>, ConvexgenError> {
    run(x, budget, true).map(|(_, p)| p)
}

fn run(
    x: &Configuration,
    budget: &Budget,
    stop_on_new_point: bool,
) -> Result<(GeneratedLattice, Option<Point>), ConvexgenError> {
    if x.is_empty() {
        return Err(ConvexgenError::EmptyConfiguration);
    }
    let mut all: Vec<Polytope> = Vec::new();
    let mut round_of: Vec<usize> = Vec::new();
    let mut index: HashMap<Polytope, usize> = HashMap::new();
    for p in x.points() {
        let e = Polytope::point(p.clone());
        if !index.contains_key(&e) {
            index.insert(e.clone(), all.len());
            all.push(e);
            round_of.push(0);
        }
    }
    let mut round_sizes = vec![all.len()];
    let mut status = SaturationStatus::Saturated;
    let mut completed = 0;
    let mut new_point = None;
    let mut frontier = 0;
    'rounds: for round in 1.. {
        if round > budget.max_rounds {
            status = SaturationStatus::BudgetExhausted(*budget);
            break;
        }
        let prev = all.len();
        // each unordered pair with at least one member from the last round
        let pairs: Vec<(usize, usize)> = (frontier..prev).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
        for chunk in pairs.chunks(CHUNK) {
            let results: Vec<(Polytope, Polytope)> =
                chunk.par_iter().map(|&(i, j)| (all[i].join(&all[j]), all[i].meet(&all[j]))).collect();
            for p in results.into_iter().flat_map(|(a, b)| [a, b]) {
                if index.contains_key(&p) {
                    continue;
                }
                if too_big(&p, budget.max_coordinate_bits) {
                    return Err(ConvexgenError::CoordinateCap(budget.max_coordinate_bits));
                }
                if stop_on_new_point && new_point.is_none() {
                    if let Some(q) = p.as_point() {
                        if x.index_of(q).is_none() {
                            new_point = Some(q.clone());
                        }
                    }
                }
                index.insert(p.clone(), all.len());
                all.push(p);
                round_of.push(round);
                if all.len() >= budget.max_elements {
                    status = SaturationStatus::BudgetExhausted(*budget);
                    round_sizes.push(all.len());
                    break 'rounds;
                }
            }
            if new_point.is_some() {
                status = SaturationStatus::BudgetExhausted(*budget);
                round_sizes.push(all.len());
                break 'rounds;
            }
        }
        completed = round;
        if all.len() == prev {
            break;
        }
        round_sizes.push(all.len());
        frontier = prev;
    }
    let mut order: Vec<usize> = (0..all.len()).collect();
    order.sort_by(|&a, &b| all[a].cmp(&all[b]));
    let rounds = order.iter().map(|&i| round_of[i]).collect();
    let mut slots: Vec<Option<Polytope>> = all.into_iter().map(Some).collect();
    let elements = order.iter().map(|&i| slots[i].take().expect("each index once")).collect();
    Ok((GeneratedLattice { elements, rounds, status, round_sizes, completed_rounds: completed }, new_point))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{convex_hull, PolytopeKind};

    fn kinds(g: &GeneratedLattice) -> Vec<usize> {
        let mut c = vec![0; 4];
        for e in g.elements() {
            c[e.kind() as usize] += 1;
        }
        c
    }

    #[test]
    fn triangle_saturates() {
        let g = saturate(&Configuration::from_ints(&[(0, 0), (1, 0), (0, 1)]), &Budget::default()).unwrap();
        assert!(g.is_saturated());
        // empty, 3 singletons, 3 sides, the triangle
        assert_eq!(kinds(&g), vec![1, 3, 3, 1]);
        assert!(g.is_closed());
    }

    #[test]
    fn line_of_three() {
        let g = saturate(&Configuration::from_ints(&[(0, 0), (1, 0), (2, 0)]), &Budget::default()).unwrap();
        assert!(g.is_saturated());
        assert_eq!(g.len(), 7);
        assert!(g.contains(&Polytope::empty()));
        assert_eq!(g.to_lattice().unwrap().len(), 7);
    }

    #[test]
    fn square_gains_its_center() {
        let x = Configuration::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let g = saturate(&x, &Budget::default()).unwrap();
        assert!(g.is_saturated());
        let extra: Vec<&Point> = g.singletons().filter(|p| x.index_of(p).is_none()).collect();
        assert_eq!(extra, vec![&Point::int(1, 1)]);
        assert_eq!(first_new_point(&x, &Budget::default()).unwrap(), Some(Point::int(1, 1)));
    }

    #[test]
    fn generation_rounds_are_recorded() {
        let x = Configuration::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let g = saturate(&x, &Budget::default()).unwrap();
        let center = g.position(&Polytope::point(Point::int(1, 1))).unwrap();
        assert_eq!(g.generation_index(center), 2);
        let side = g.position(&convex_hull([Point::int(0, 0), Point::int(2, 0)])).unwrap();
        assert_eq!(g.generation_index(side), 1);
        assert_eq!(g.elements().iter().filter(|e| e.kind() == PolytopeKind::SinglePoint).count(), 5);
    }

    #[test]
    fn element_budget_stops_mid_round() {
        let x = Configuration::from_ints(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]);
        let g = saturate(&x, &Budget::new(8, 40)).unwrap();
        assert_eq!(g.status(), SaturationStatus::BudgetExhausted(Budget::new(8, 40)));
        assert_eq!(g.len(), 40);
    }
}
