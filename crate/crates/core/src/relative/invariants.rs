use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::geom::Configuration;

use super::equiv::{canonical_form, system_bijection, CanonicalForm};
use super::{closure_system_limited, k_subsets, rext, NamedConfig};

/// Shapes whose counts make up a profile: every configuration of size 1 to 4.
pub const PROFILE_SHAPES: [NamedConfig; 8] = [
    NamedConfig::L(1),
    NamedConfig::L(2),
    NamedConfig::L(3),
    NamedConfig::T(2),
    NamedConfig::L(4),
    NamedConfig::T(3),
    NamedConfig::I(0, 2),
    NamedConfig::I(1, 1),
];

/// `#_Z(X)` for each profile shape `Z`, plus `|Rext(X)|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InvariantProfile {
    pub size: usize,
    pub rext_size: usize,
    /// Keyed by shape name.
    pub counts: BTreeMap<String, u64>,
    /// Subsets of size at most 4 matching no listed shape; always zero when
    /// the shape list is complete.
    pub unmatched: u64,
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

impl InvariantProfile {
    pub fn count(&self, z: NamedConfig) -> u64 {
        self.counts.get(&z.to_string()).copied().unwrap_or(0)
    }

    /// The shape counts of each size add up to the number of subsets of that size.
    pub fn sum_identities_hold(&self) -> bool {
        (1..=4).all(|k| {
            let total: u64 = PROFILE_SHAPES.iter().filter(|z| z.len() == k).map(|&z| self.count(z)).sum();
            total == binomial(self.size, k)
        }) && self.unmatched == 0
    }
}

fn shape_forms() -> &'static [(CanonicalForm, String)] {
    static FORMS: OnceLock<Vec<(CanonicalForm, String)>> = OnceLock::new();
    FORMS.get_or_init(|| {
        PROFILE_SHAPES
            .iter()
            .map(|z| {
                let sys = closure_system_limited(&z.build(), 64).expect("small shape");
                (canonical_form(&sys), z.to_string())
            })
            .collect()
    })
}

/// Number of `|Z|`-subsets of `x` equivalent to `z`, by direct bijection search.
pub fn count_subconfigs(x: &Configuration, z: NamedConfig) -> u64 {
    let zc = z.build();
    let Ok(zs) = closure_system_limited(&zc, 64) else { return 0 };
    k_subsets(x.len(), zc.len())
        .filter(|&m| closure_system_limited(&x.subset(m), 64).is_ok_and(|s| system_bijection(&s, &zs).is_some()))
        .count() as u64
}

/// Counts for all profile shapes, bucketing each small subset by canonical form.
pub fn invariant_profile(x: &Configuration) -> InvariantProfile {
    let forms = shape_forms();
    let mut counts: BTreeMap<String, u64> = forms.iter().map(|(_, n)| (n.clone(), 0)).collect();
    let mut unmatched = 0;
    for k in 1..=4.min(x.len()) {
        for m in k_subsets(x.len(), k) {
            let sys = closure_system_limited(&x.subset(m), 64).expect("small subset");
            let cf = canonical_form(&sys);
            match forms.iter().find(|(f, _)| *f == cf) {
                Some((_, name)) => *counts.get_mut(name).expect("known shape") += 1,
                None => unmatched += 1,
            }
        }
    }
    InvariantProfile { size: x.len(), rext_size: rext(x).count_ones() as usize, counts, unmatched }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_point_table() {
        let cols = [NamedConfig::L(4), NamedConfig::T(3), NamedConfig::I(0, 2), NamedConfig::I(1, 1)];
        let rows: Vec<Vec<u64>> = cols
            .iter()
            .map(|c| {
                let p = invariant_profile(&c.build());
                vec![
                    p.count(NamedConfig::L(1)),
                    p.count(NamedConfig::L(2)),
                    p.count(NamedConfig::L(3)),
                    p.count(NamedConfig::T(2)),
                    p.rext_size as u64,
                ]
            })
            .collect();
        assert_eq!(rows, vec![vec![4, 6, 4, 0, 2], vec![4, 6, 1, 3, 3], vec![4, 6, 0, 4, 3], vec![4, 6, 0, 4, 4]]);
    }

    #[test]
    fn direct_counts_match_profile() {
        let x = NamedConfig::D(1, 2).build();
        let p = invariant_profile(&x);
        for z in PROFILE_SHAPES {
            assert_eq!(count_subconfigs(&x, z), p.count(z), "{z}");
        }
        assert!(p.sum_identities_hold());
    }

    #[test]
    fn singleton_profile() {
        let p = invariant_profile(&NamedConfig::L(1).build());
        assert_eq!(p.count(NamedConfig::L(1)), 1);
        assert_eq!(p.counts.values().sum::<u64>(), 1);
        assert_eq!(p.rext_size, 1);
    }

    #[test]
    fn convex_pentagon() {
        let x = Configuration::from_ints(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]);
        let p = invariant_profile(&x);
        assert_eq!(p.count(NamedConfig::T(2)), 10);
        assert_eq!(p.count(NamedConfig::L(3)), 0);
        assert_eq!(p.count(NamedConfig::I(1, 1)), 5);
    }
}
