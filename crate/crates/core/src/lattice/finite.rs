use serde::Serialize;

use super::{BitSet, LatticeError};

/// Dense tables are quadratic in the element count; beyond this size a lattice
/// has to be queried through its closure system instead.
pub const MAX_DENSE_ELEMENTS: usize = 2048;

/// A finite bounded lattice with explicit order and meet/join tables.
///
/// Elements are indices `0..len()`. Labels are presentation payload only:
/// isomorphism and automorphism searches look at the order structure alone.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    labels: Vec<String>,
    below: Vec<BitSet>,
    above: Vec<BitSet>,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from a partial order, computing meets and joins.
    pub fn from_order(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<FiniteLattice, LatticeError> {
        let n = labels.len();
        let (below, above) = order_sets(n, &leq)?;
        let bound = |sets: &[BitSet], i: usize, j: usize| -> Option<u32> {
            let common = sets[i].intersection(&sets[j]);
            let size = common.len();
            let found = common.iter().find(|&m| sets[m].len() == size);
            found.map(|m| m as u32)
        };
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = bound(&below, i, j).ok_or(LatticeError::NoMeet(i, j))?;
                join[i * n + j] = bound(&above, i, j).ok_or(LatticeError::NoJoin(i, j))?;
            }
        }
        Self::assemble(labels, below, above, meet, join)
    }

    /// Builds a lattice from an order and candidate meet/join operations; the
    /// operations are cross-checked to be the greatest lower and least upper
    /// bounds of the order.
    pub fn from_operations(
        labels: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
        meet_op: impl Fn(usize, usize) -> usize,
        join_op: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteLattice, LatticeError> {
        let n = labels.len();
        let (below, above) = order_sets(n, &leq)?;
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let m = meet_op(i, j);
                let common = below[i].intersection(&below[j]);
                if m >= n || !common.contains(m) || !common.is_subset(&below[m]) {
                    return Err(LatticeError::NoMeet(i, j));
                }
                let k = join_op(i, j);
                let common = above[i].intersection(&above[j]);
                if k >= n || !common.contains(k) || !common.is_subset(&above[k]) {
                    return Err(LatticeError::NoJoin(i, j));
                }
                meet[i * n + j] = m as u32;
                meet[j * n + i] = m as u32;
                join[i * n + j] = k as u32;
                join[j * n + i] = k as u32;
            }
        }
        Self::assemble(labels, below, above, meet, join)
    }

    fn assemble(
        labels: Vec<String>,
        below: Vec<BitSet>,
        above: Vec<BitSet>,
        meet: Vec<u32>,
        join: Vec<u32>,
    ) -> Result<FiniteLattice, LatticeError> {
        let n = labels.len();
        let bottom = (0..n).find(|&i| below[i].len() == 1).ok_or(LatticeError::Empty)?;
        let top = (0..n).find(|&i| above[i].len() == 1).ok_or(LatticeError::Empty)?;
        if above[bottom].len() != n || below[top].len() != n {
            return Err(LatticeError::Unbounded);
        }
        Ok(FiniteLattice { labels, below, above, meet, join, bottom, top })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// `{x : x <= a}`, including `a`.
    pub fn down_set(&self, a: usize) -> &BitSet {
        &self.below[a]
    }

    /// `{x : x >= a}`, including `a`.
    pub fn up_set(&self, a: usize) -> &BitSet {
        &self.above[a]
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| i != self.bottom && self.below[i].len() == 2).collect()
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.lower_covers(i).len() == 1).collect()
    }

    pub fn lower_covers(&self, b: usize) -> Vec<usize> {
        let mut strict = self.below[b].clone();
        strict.remove(b);
        strict.iter().filter(|&a| self.above[a].intersection_len(&strict) == 1).collect()
    }

    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        let mut strict = self.above[a].clone();
        strict.remove(a);
        strict.iter().filter(|&b| self.below[b].intersection_len(&strict) == 1).collect()
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.below[i].len());
        let mut h = vec![0usize; self.len()];
        for &b in &order {
            h[b] = self.lower_covers(b).iter().map(|&a| h[a] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Exhaustive check of the lattice laws on the stored tables.
    pub fn check_laws(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let (m, j) = (self.meet(a, b), self.join(a, b));
                m == self.meet(b, a)
                    && j == self.join(b, a)
                    && self.join(a, m) == a
                    && self.meet(a, j) == a
                    && self.meet(a, self.bottom) == self.bottom
                    && self.join(a, self.top) == self.top
                    && (self.leq(a, b) == (m == a))
            })
        })
    }

    /// Plain JSON description: labels, heights and covering pairs.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Element<'a> {
            index: usize,
            label: &'a str,
            height: usize,
        }
        let heights = self.heights();
        let elements: Vec<Element> =
            (0..self.len()).map(|i| Element { index: i, label: &self.labels[i], height: heights[i] }).collect();
        serde_json::json!({
            "size": self.len(),
            "bottom": self.bottom,
            "top": self.top,
            "elements": elements,
            "covers": super::covering_digraph(self),
        })
    }
}

#[allow(clippy::needless_range_loop)]
fn order_sets(n: usize, leq: &impl Fn(usize, usize) -> bool) -> Result<(Vec<BitSet>, Vec<BitSet>), LatticeError> {
    if n == 0 {
        return Err(LatticeError::Empty);
    }
    if n > MAX_DENSE_ELEMENTS {
        return Err(LatticeError::TooLarge(n));
    }
    let mut below = vec![BitSet::new(n); n];
    let mut above = vec![BitSet::new(n); n];
    for a in 0..n {
        if !leq(a, a) {
            return Err(LatticeError::NotPartialOrder(a, a));
        }
        for b in 0..n {
            if leq(a, b) {
                below[b].insert(a);
                above[a].insert(b);
            }
        }
    }
    for a in 0..n {
        for b in above[a].iter() {
            if b != a && above[b].contains(a) {
                return Err(LatticeError::NotPartialOrder(a, b));
            }
            if !above[b].is_subset(&above[a]) {
                return Err(LatticeError::NotPartialOrder(a, b));
            }
        }
    }
    Ok((below, above))
}

/// True iff `f` preserves both lattice operations (exhaustive check).
pub fn is_lattice_morphism(f: &[usize], l1: &FiniteLattice, l2: &FiniteLattice) -> bool {
    if f.len() != l1.len() || f.iter().any(|&y| y >= l2.len()) {
        return false;
    }
    (0..l1.len()).all(|a| {
        (0..l1.len()).all(|b| f[l1.join(a, b)] == l2.join(f[a], f[b]) && f[l1.meet(a, b)] == l2.meet(f[a], f[b]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn boolean_square_from_order() {
        // subsets of {0,1} as masks
        let l = FiniteLattice::from_order(names(4), |a, b| a & !b == 0).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 3);
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.atoms(), vec![1, 2]);
        assert!(l.check_laws());
        assert_eq!(l.heights(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn rejects_non_lattice() {
        // two minimal elements with no meet
        let err = FiniteLattice::from_order(names(3), |a, b| a == b || b == 2).unwrap_err();
        assert!(matches!(err, LatticeError::NoMeet(..)));
    }

    #[test]
    fn rejects_wrong_operations() {
        let err = FiniteLattice::from_operations(names(2), |a, b| a <= b, |_, _| 1, |a, b| a.max(b)).unwrap_err();
        assert!(matches!(err, LatticeError::NoMeet(0, 0)));
    }

    #[test]
    fn morphism_checks() {
        let chain = FiniteLattice::from_order(names(3), |a, b| a <= b).unwrap();
        assert!(is_lattice_morphism(&[0, 1, 2], &chain, &chain));
        assert!(is_lattice_morphism(&[0, 0, 2], &chain, &chain));
        // top sent below the image of another element
        assert!(!is_lattice_morphism(&[0, 2, 1], &chain, &chain));
    }
}
