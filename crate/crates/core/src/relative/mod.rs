//! Relative convex hulls and the relative lattice R(X) of a configuration:
//! relatively convex sets, relative extreme points, configuration
//! equivalence, sub-configuration counts and the small-grid census.

mod census;
mod equiv;
mod invariants;
mod named;

use crate::geom::{convex_hull, Configuration};
use crate::lattice::{format_mask, lattice_of_closure_system, ClosureSystem, FiniteLattice, LatticeError};

pub use census::{census, CensusClass, CensusOptions, CensusReport};
pub use equiv::{canonical_form, equivalent, equivalent_via_bijection, equivalent_via_lattice, CanonicalForm};
pub use invariants::{count_subconfigs, invariant_profile, InvariantProfile, PROFILE_SHAPES};
pub use named::{collinear_triples, Figure2, NamedConfig, FIVE_POINT_TABLE};

/// Default cap on the ground-set size for relative lattice construction.
pub const DEFAULT_SIZE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelativeError {
    #[error("subset {0:#b} is not contained in the configuration")]
    NotSubset(u64),
    #[error("configuration has {0} points, above the limit of {1}")]
    SizeLimit(usize, usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("unknown configuration name {0:?}")]
    UnknownName(String),
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_points(x: &Configuration, mask: u64) -> impl Iterator<Item = usize> + '_ {
    (0..x.len()).filter(move |&i| mask >> i & 1 == 1)
}

/// All `k`-element submasks of `{0..n}` in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    let limit = full_mask(n);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let n2 = (((r ^ cur) >> 2) / c) | r;
                (n2 <= limit && n2.count_ones() as usize == k).then_some(n2)
            }
        };
        Some(cur)
    })
}

fn check_subset(x: &Configuration, a: u64) -> Result<(), RelativeError> {
    if a & !full_mask(x.len()) != 0 {
        return Err(RelativeError::NotSubset(a));
    }
    Ok(())
}

fn rch_unchecked(x: &Configuration, a: u64) -> u64 {
    if a.count_ones() <= 1 {
        return a;
    }
    let hull = convex_hull(mask_points(x, a).map(|i| x.point(i).clone()));
    (0..x.len()).filter(|&i| a >> i & 1 == 1 || hull.contains(x.point(i))).fold(0, |m, i| m | 1 << i)
}

/// Relative convex hull `ch(A) ∩ X`.
pub fn rch(x: &Configuration, a: u64) -> Result<u64, RelativeError> {
    check_subset(x, a)?;
    Ok(rch_unchecked(x, a))
}

pub fn is_relatively_convex(x: &Configuration, a: u64) -> Result<bool, RelativeError> {
    Ok(rch(x, a)? == a)
}

/// The closure system of relatively convex subsets of `x`.
pub fn closure_system(x: &Configuration) -> Result<ClosureSystem, RelativeError> {
    closure_system_limited(x, DEFAULT_SIZE_LIMIT)
}

pub fn closure_system_limited(x: &Configuration, limit: usize) -> Result<ClosureSystem, RelativeError> {
    if x.len() > limit.min(64) {
        return Err(RelativeError::SizeLimit(x.len(), limit.min(64)));
    }
    Ok(ClosureSystem::from_operator(x.len(), |a| rch_unchecked(x, a)))
}

/// R(X): relatively convex sets, meet = intersection, join = Rch of the union.
/// Elements are labelled with the point labels of `x`.
pub fn relative_lattice(x: &Configuration) -> Result<FiniteLattice, RelativeError> {
    let sys = closure_system(x)?;
    lattice_from_system(x, &sys)
}

pub(crate) fn lattice_from_system(x: &Configuration, sys: &ClosureSystem) -> Result<FiniteLattice, RelativeError> {
    let names = x.labels();
    Ok(lattice_of_closure_system(sys, |m| format_mask(m, Some(&names)))?)
}

/// Points whose removal leaves a relatively convex set.
pub fn rext(x: &Configuration) -> u64 {
    let full = full_mask(x.len());
    (0..x.len()).filter(|&i| rch_unchecked(x, full & !(1 << i)) >> i & 1 == 0).fold(0, |m, i| m | 1 << i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn l3() -> Configuration {
        Configuration::from_ints(&[(0, 0), (1, 0), (2, 0)])
    }

    #[test]
    fn k_subsets_enumerates_binomial() {
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(4, 4).collect::<Vec<_>>(), vec![0b1111]);
        assert!(k_subsets(7, 3).all(|m| m.count_ones() == 3 && m < 128));
    }

    #[test]
    fn rch_examples() {
        // square plus center: the corners close to everything
        let x = Configuration::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]);
        assert_eq!(rch(&x, 0b01111).unwrap(), 0b11111);
        assert_eq!(rch(&x, 0b11111).unwrap(), 0b11111);
        assert_eq!(rch(&l3(), 0b101).unwrap(), 0b111);
        assert_eq!(rch(&l3(), 0b1000), Err(RelativeError::NotSubset(0b1000)));
    }

    #[test]
    fn relative_convexity_examples() {
        assert!(is_relatively_convex(&l3(), 0b011).unwrap());
        assert!(!is_relatively_convex(&l3(), 0b101).unwrap());
        let t =
            Configuration::new(vec![Point::int(0, 0), Point::int(3, 0), Point::int(0, 3), Point::int(1, 1)]).unwrap();
        assert!(!is_relatively_convex(&t, 0b0111).unwrap());
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(relative_lattice(&l3()).unwrap().len(), 7);
        let t2 = Configuration::from_ints(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(relative_lattice(&t2).unwrap().len(), 8);
        let l1 = Configuration::from_ints(&[(5, 5)]);
        assert_eq!(relative_lattice(&l1).unwrap().len(), 2);
    }

    #[test]
    fn rext_examples() {
        assert_eq!(rext(&l3()), 0b101);
        let pent = Configuration::from_ints(&[(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]);
        assert_eq!(rext(&pent), 0b11111);
    }

    #[test]
    fn size_limit() {
        let big = Configuration::from_ints(&(0..17).map(|i| (i, i * i)).collect::<Vec<_>>());
        assert_eq!(closure_system(&big).unwrap_err(), RelativeError::SizeLimit(17, 16));
    }
}
