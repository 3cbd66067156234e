use std::collections::HashMap;

use super::{FiniteLattice, LatticeError};

/// Ground sets up to this size use closure-of-every-subset enumeration;
/// larger ones use next-closure.
pub const SUBSET_SWEEP_LIMIT: usize = 12;

/// An intersection-closed family of subsets of `{0, .., n-1}` containing the
/// full set, each subset stored as a bitmask.
///
/// Closed sets are kept sorted by `(cardinality, mask)`, so the least closed
/// set comes first and the full set last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSystem {
    n: usize,
    closed: Vec<u64>,
    index: HashMap<u64, usize>,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn sort_masks(masks: &mut Vec<u64>) {
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks.dedup();
}

impl ClosureSystem {
    /// Validates and wraps a family of closed sets.
    pub fn new(n: usize, closed: impl IntoIterator<Item = u64>) -> Result<ClosureSystem, LatticeError> {
        if n > 64 {
            return Err(LatticeError::GroundTooLarge(n));
        }
        let full = full_mask(n);
        let mut closed: Vec<u64> = closed.into_iter().collect();
        if let Some(&m) = closed.iter().find(|&&m| m & !full != 0) {
            return Err(LatticeError::OutOfGround(m));
        }
        sort_masks(&mut closed);
        let index: HashMap<u64, usize> = closed.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        if !index.contains_key(&full) {
            return Err(LatticeError::MissingGround);
        }
        for (i, &a) in closed.iter().enumerate() {
            for &b in &closed[i + 1..] {
                if !index.contains_key(&(a & b)) {
                    return Err(LatticeError::NotIntersectionClosed(a, b));
                }
            }
        }
        Ok(ClosureSystem { n, closed, index })
    }

    /// Closed family of a closure operator, enumerated by closing every subset
    /// when `n` is small and by next-closure otherwise.
    pub fn from_operator(n: usize, close: impl Fn(u64) -> u64) -> ClosureSystem {
        let closed = if n <= SUBSET_SWEEP_LIMIT { sweep_closed_sets(n, &close) } else { next_closure_sets(n, &close) };
        Self::from_trusted(n, closed)
    }

    fn from_trusted(n: usize, mut closed: Vec<u64>) -> ClosureSystem {
        sort_masks(&mut closed);
        let index = closed.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        ClosureSystem { n, closed, index }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn closed_sets(&self) -> &[u64] {
        &self.closed
    }

    pub fn len(&self) -> usize {
        self.closed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closed.is_empty()
    }

    pub fn is_closed(&self, a: u64) -> bool {
        self.index.contains_key(&a)
    }

    pub fn position(&self, a: u64) -> Option<usize> {
        self.index.get(&a).copied()
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: u64) -> u64 {
        if self.is_closed(a) {
            return a;
        }
        self.closed.iter().filter(|&&c| c & a == a).fold(full_mask(self.n), |acc, &c| acc & c)
    }

    /// Image of the family under a permutation of the ground set.
    pub fn permuted(&self, perm: &[usize]) -> ClosureSystem {
        Self::from_trusted(self.n, self.closed.iter().map(|&m| permute_mask(m, perm)).collect())
    }

    /// The lattice of closed sets: meet is intersection, join is the closure of the union.
    pub fn lattice(&self) -> Result<FiniteLattice, LatticeError> {
        lattice_of_closure_system(self, |m| format_mask(m, None))
    }
}

pub fn permute_mask(mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        out |= 1 << perm[i];
        m &= m - 1;
    }
    out
}

/// `{0,2}` style rendering, or with names when provided.
pub fn format_mask(mask: u64, names: Option<&[String]>) -> String {
    let items: Vec<String> = (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| match names {
            Some(ns) => ns[i].clone(),
            None => i.to_string(),
        })
        .collect();
    format!("{{{}}}", items.join(","))
}

fn sweep_closed_sets(n: usize, close: &impl Fn(u64) -> u64) -> Vec<u64> {
    let mut out: Vec<u64> = (0..1u64 << n).map(close).collect();
    sort_masks(&mut out);
    out
}

/// Ganter's next-closure: closed sets in lectic order.
pub fn next_closure_sets(n: usize, close: &impl Fn(u64) -> u64) -> Vec<u64> {
    let full = full_mask(n);
    let mut a = close(0);
    let mut out = vec![a];
    while a != full {
        let mut advanced = false;
        for i in (0..n).rev() {
            let bit = 1u64 << i;
            if a & bit != 0 {
                a &= !bit;
            } else {
                let b = close(a | bit);
                let lower = bit - 1;
                if b & lower == a & lower {
                    a = b;
                    out.push(a);
                    advanced = true;
                    break;
                }
            }
        }
        if !advanced {
            break;
        }
    }
    out
}

/// Builds the lattice of a closure system; `label` renders each closed set.
pub fn lattice_of_closure_system(
    sys: &ClosureSystem,
    label: impl Fn(u64) -> String,
) -> Result<FiniteLattice, LatticeError> {
    let cs = &sys.closed;
    let labels = cs.iter().map(|&m| label(m)).collect();
    FiniteLattice::from_operations(
        labels,
        |i, j| cs[i] & !cs[j] == 0,
        |i, j| sys.index[&(cs[i] & cs[j])],
        |i, j| sys.index[&sys.closure(cs[i] | cs[j])],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_intersection_closed() {
        // {0,1} and {1,2} closed but {1} missing
        let err = ClosureSystem::new(3, [0b011, 0b110, 0b111]).unwrap_err();
        assert_eq!(err, LatticeError::NotIntersectionClosed(0b011, 0b110));
        assert_eq!(ClosureSystem::new(2, [0b01]).unwrap_err(), LatticeError::MissingGround);
    }

    #[test]
    fn boolean_and_chain() {
        let b3 = ClosureSystem::new(3, 0..8).unwrap();
        assert_eq!(b3.lattice().unwrap().len(), 8);
        let chain = ClosureSystem::new(3, [0, 0b111]).unwrap();
        assert_eq!(chain.lattice().unwrap().len(), 2);
        assert_eq!(chain.closure(0b001), 0b111);
    }

    #[test]
    fn linear_three_closed_family() {
        // x=0, y=1, z=2 with y between x and z: {x,z} closes to everything
        let l3 = ClosureSystem::new(3, [0, 0b001, 0b010, 0b100, 0b011, 0b110, 0b111]).unwrap();
        let lat = l3.lattice().unwrap();
        assert_eq!(lat.len(), 7);
        assert_eq!(l3.closure(0b101), 0b111);
    }

    #[test]
    fn next_closure_matches_sweep() {
        // closure: a set is closed iff it is an interval of 0..n
        let n = 7;
        let close = |m: u64| {
            if m == 0 {
                0
            } else {
                let lo = m.trailing_zeros();
                let hi = 63 - m.leading_zeros();
                ((1u64 << (hi + 1)) - 1) & !((1u64 << lo) - 1)
            }
        };
        let mut a = sweep_closed_sets(n, &close);
        let mut b = next_closure_sets(n, &close);
        sort_masks(&mut a);
        sort_masks(&mut b);
        assert_eq!(a, b);
        assert_eq!(a.len(), 1 + n * (n + 1) / 2);
    }
}
