use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::geom::Configuration;

use super::equiv::{canonical_form, CanonicalForm};
use super::{closure_system_limited, invariant_profile, k_subsets, InvariantProfile};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusOptions {
    pub n: usize,
    /// Side length of the integer grid `{0..grid}²`.
    pub grid: usize,
    /// Stop after this many subsets; the report is then flagged partial.
    pub max_subsets: u64,
    /// Skip subsets that are images of an earlier one under a grid symmetry.
    pub use_symmetry: bool,
}

impl CensusOptions {
    pub fn new(n: usize, grid: usize) -> CensusOptions {
        CensusOptions { n, grid, max_subsets: 5_000_000, use_symmetry: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusClass {
    pub representative: Configuration,
    pub profile: InvariantProfile,
    /// Number of examined subsets (after symmetry reduction) in the class.
    pub members: u64,
    #[serde(skip)]
    pub form: CanonicalForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub grid: usize,
    pub subsets_examined: u64,
    pub partial: bool,
    pub classes: Vec<CensusClass>,
}

impl CensusReport {
    /// Index of the class whose closure system matches that of `x`.
    pub fn class_of(&self, x: &Configuration) -> Option<usize> {
        let sys = closure_system_limited(x, 64).ok()?;
        let cf = canonical_form(&sys);
        self.classes.iter().position(|c| c.form == cf)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

type Cell = (i64, i64);

/// Least sorted image of a grid subset under the dihedral group and translation.
fn symmetry_key(cells: &[Cell]) -> Vec<Cell> {
    let maps: [fn(Cell) -> Cell; 8] = [
        |(x, y)| (x, y),
        |(x, y)| (-x, y),
        |(x, y)| (x, -y),
        |(x, y)| (-x, -y),
        |(x, y)| (y, x),
        |(x, y)| (-y, x),
        |(x, y)| (y, -x),
        |(x, y)| (-y, -x),
    ];
    maps.iter()
        .map(|f| {
            let mut img: Vec<Cell> = cells.iter().map(|&c| f(c)).collect();
            let mx = img.iter().map(|c| c.0).min().unwrap_or(0);
            let my = img.iter().map(|c| c.1).min().unwrap_or(0);
            for c in &mut img {
                *c = (c.0 - mx, c.1 - my);
            }
            img.sort_unstable();
            img
        })
        .min()
        .unwrap_or_default()
}

/// Equivalence classes of all `n`-point subsets of a square integer grid.
///
/// Classes are ordered by canonical form; each keeps the first subset met in
/// enumeration order as its representative.
pub fn census(opts: &CensusOptions) -> CensusReport {
    let cells: Vec<Cell> = (0..opts.grid as i64).flat_map(|x| (0..opts.grid as i64).map(move |y| (x, y))).collect();
    let mut seen: HashSet<Vec<Cell>> = HashSet::new();
    let mut classes: BTreeMap<CanonicalForm, (Configuration, u64)> = BTreeMap::new();
    let mut examined = 0u64;
    let mut partial = false;
    if cells.len() <= 64 {
        for m in k_subsets(cells.len(), opts.n) {
            if examined >= opts.max_subsets {
                partial = true;
                break;
            }
            examined += 1;
            let chosen: Vec<Cell> = (0..cells.len()).filter(|&i| m >> i & 1 == 1).map(|i| cells[i]).collect();
            if opts.use_symmetry && !seen.insert(symmetry_key(&chosen)) {
                continue;
            }
            let x = Configuration::from_ints(&chosen);
            let sys = closure_system_limited(&x, 64).expect("grid subset fits");
            classes.entry(canonical_form(&sys)).or_insert_with(|| (x, 0)).1 += 1;
        }
    } else {
        partial = true;
    }
    let classes = classes
        .into_iter()
        .map(|(form, (representative, members))| CensusClass {
            profile: invariant_profile(&representative),
            representative,
            members,
            form,
        })
        .collect();
    CensusReport { n: opts.n, grid: opts.grid, subsets_examined: examined, partial, classes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(census(&CensusOptions::new(3, 4)).classes.len(), 2);
        assert_eq!(census(&CensusOptions::new(4, 4)).classes.len(), 4);
    }

    #[test]
    fn symmetry_does_not_change_classes() {
        let mut plain = CensusOptions::new(4, 3);
        plain.use_symmetry = false;
        let a = census(&plain);
        let b = census(&CensusOptions::new(4, 3));
        let forms = |r: &CensusReport| r.classes.iter().map(|c| c.form.clone()).collect::<Vec<_>>();
        assert_eq!(forms(&a), forms(&b));
        assert_eq!(a.subsets_examined, 126);
    }

    #[test]
    fn budget_flags_partial() {
        let mut o = CensusOptions::new(4, 4);
        o.max_subsets = 10;
        let r = census(&o);
        assert!(r.partial);
        assert_eq!(r.subsets_examined, 10);
    }
}
