use serde::Serialize;

use crate::geom::{convex_hull, Configuration, Point, Polytope};
use crate::relative::closure_system_limited;

use super::{saturate, Budget, ConvexgenError, GeneratedLattice, SaturationStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Complete,
    Incomplete,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionResult {
    pub original: Configuration,
    /// Singletons of the saturated lattice outside the original points, sorted.
    pub new_points: Vec<Point>,
    pub verdict: Verdict,
    pub status: SaturationStatus,
}

impl CompletionResult {
    /// The original configuration with the new points appended.
    pub fn completed(&self) -> Configuration {
        self.original.extended(self.new_points.iter().cloned()).expect("new points are outside the original")
    }
}

fn completion_of(x: &Configuration, g: &GeneratedLattice) -> CompletionResult {
    let mut new_points: Vec<Point> = g.singletons().filter(|p| x.index_of(p).is_none()).cloned().collect();
    new_points.sort();
    let verdict = match (g.status(), new_points.is_empty()) {
        (_, false) => Verdict::Incomplete,
        (SaturationStatus::Saturated, true) => Verdict::Complete,
        (SaturationStatus::BudgetExhausted(_), true) => Verdict::Unknown,
    };
    CompletionResult { original: x.clone(), new_points, verdict, status: g.status() }
}

/// Points of the completion found within the budget, with a completeness verdict.
pub fn completion_points(x: &Configuration, budget: &Budget) -> Result<CompletionResult, ConvexgenError> {
    Ok(completion_of(x, &saturate(x, budget)?))
}

fn saturated_complete(x: &Configuration, budget: &Budget) -> Result<GeneratedLattice, ConvexgenError> {
    let g = saturate(x, budget)?;
    let c = completion_of(x, &g);
    match c.verdict {
        Verdict::Complete => Ok(g),
        Verdict::Incomplete => Err(ConvexgenError::NotComplete(c.new_points.len())),
        Verdict::Unknown => Err(ConvexgenError::NotSaturated),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremeReport {
    pub elements_checked: usize,
    /// Elements with an extreme point outside the configuration.
    pub violations: Vec<Polytope>,
}

impl ExtremeReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every element of K(X) has all its extreme points in X.
/// Refuses configurations not shown complete within the budget.
pub fn verify_extreme_lemma(x: &Configuration, budget: &Budget) -> Result<ExtremeReport, ConvexgenError> {
    let g = saturated_complete(x, budget)?;
    let violations =
        g.elements().iter().filter(|e| e.extreme_points().iter().any(|v| x.index_of(v).is_none())).cloned().collect();
    Ok(ExtremeReport { elements_checked: g.len(), violations })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub k_size: usize,
    pub r_size: usize,
    /// `phi[i]` is the point mask of `A ∩ X` for the `i`-th element `A` of K(X).
    pub phi: Vec<u64>,
    /// First failed check, if any.
    pub failure: Option<String>,
}

impl IsoReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that `A ↦ A ∩ X` is a lattice isomorphism from K(X) onto R(X)
/// whose inverse is the convex hull. Refuses incomplete or unsaturated input.
pub fn verify_iso_theorem(x: &Configuration, budget: &Budget) -> Result<IsoReport, ConvexgenError> {
    let g = saturated_complete(x, budget)?;
    let sys = closure_system_limited(x, 64)?;
    let elems = g.elements();
    let phi: Vec<u64> =
        elems.iter().map(|e| (0..x.len()).filter(|&i| e.contains(x.point(i))).fold(0, |m, i| m | 1 << i)).collect();
    let mut report = IsoReport { k_size: g.len(), r_size: sys.len(), phi, failure: None };
    let phi = &report.phi;
    let failure = (|| {
        if g.len() != sys.len() {
            return Some(format!("K has {} elements, R has {}", g.len(), sys.len()));
        }
        let mut image = phi.clone();
        image.sort_unstable();
        image.dedup();
        if image.len() != phi.len() {
            return Some("phi is not injective".into());
        }
        if let Some(&m) = phi.iter().find(|&&m| !sys.is_closed(m)) {
            return Some(format!("phi image {m:#b} is not relatively convex"));
        }
        for (e, &m) in elems.iter().zip(phi) {
            let hull = convex_hull((0..x.len()).filter(|&i| m >> i & 1 == 1).map(|i| x.point(i).clone()));
            if hull != *e {
                return Some(format!("hull of phi({e:?}) is {hull:?}"));
            }
        }
        for i in 0..elems.len() {
            for j in 0..i {
                let (a, b) = (&elems[i], &elems[j]);
                let join = g.position(&a.join(b))?;
                let meet = g.position(&a.meet(b))?;
                if phi[join] != sys.closure(phi[i] | phi[j]) {
                    return Some(format!("phi does not preserve the join of {a:?} and {b:?}"));
                }
                if phi[meet] != phi[i] & phi[j] {
                    return Some(format!("phi does not preserve the meet of {a:?} and {b:?}"));
                }
            }
        }
        None
    })();
    report.failure = failure;
    Ok(report)
}
