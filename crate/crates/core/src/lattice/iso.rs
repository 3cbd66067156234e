//! Lattice isomorphism and automorphism search.
//!
//! A finite lattice is isomorphic to the family of sets of join-irreducibles
//! below its elements, ordered by inclusion. So an isomorphism is the same as
//! a bijection between join-irreducibles that carries one such family onto
//! the other. The search assigns join-irreducibles one at a time, restricted
//! to candidates with the same refined invariant colour, and rejects a partial
//! assignment as soon as some element whose join-irreducibles are all
//! assigned maps to a set that is not in the other family.

use std::collections::HashMap;

use super::{is_lattice_morphism, BitSet, FiniteLattice};

struct Side<'a> {
    lat: &'a FiniteLattice,
    /// element indices of the join-irreducibles
    ji: Vec<usize>,
    /// per element: set of join-irreducible positions below it
    masks: Vec<BitSet>,
    family: HashMap<BitSet, usize>,
    /// per join-irreducible position: the positions strictly below it
    ji_below: Vec<Vec<usize>>,
}

impl<'a> Side<'a> {
    fn new(lat: &'a FiniteLattice) -> Side<'a> {
        let ji = lat.join_irreducibles();
        let masks: Vec<BitSet> = (0..lat.len())
            .map(|x| {
                let mut m = BitSet::new(ji.len());
                for (p, &j) in ji.iter().enumerate() {
                    if lat.leq(j, x) {
                        m.insert(p);
                    }
                }
                m
            })
            .collect();
        let family = masks.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let ji_below =
            ji.iter().map(|&j| (0..ji.len()).filter(|&q| ji[q] != j && lat.leq(ji[q], j)).collect()).collect();
        Side { lat, ji, masks, family, ji_below }
    }
}

/// Invariant colours for the join-irreducibles of both lattices, computed
/// over their disjoint union so that equal colours mean equal invariants.
fn refine_colours(a: &Side, b: &Side) -> (Vec<u32>, Vec<u32>) {
    let base = |s: &Side| -> Vec<Vec<usize>> {
        let heights = s.lat.heights();
        s.ji.iter()
            .enumerate()
            .map(|(p, &j)| {
                let above_ji = (0..s.ji.len()).filter(|&q| s.lat.leq(j, s.ji[q])).count();
                vec![
                    heights[j],
                    s.lat.down_set(j).len(),
                    s.lat.up_set(j).len(),
                    s.lat.upper_covers(j).len(),
                    s.ji_below[p].len(),
                    above_ji,
                ]
            })
            .collect()
    };
    let mut table: HashMap<Vec<usize>, u32> = HashMap::new();
    let mut intern = |sig: Vec<usize>| -> u32 {
        let next = table.len() as u32;
        *table.entry(sig).or_insert(next)
    };
    let mut ca: Vec<u32> = base(a).into_iter().map(&mut intern).collect();
    let mut cb: Vec<u32> = base(b).into_iter().map(&mut intern).collect();
    let distinct = |x: &[u32], y: &[u32]| {
        let mut v: Vec<u32> = x.iter().chain(y).copied().collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let mut classes = distinct(&ca, &cb);
    loop {
        let step = |s: &Side, c: &[u32]| -> Vec<Vec<usize>> {
            (0..s.ji.len())
                .map(|p| {
                    let mut below: Vec<usize> = s.ji_below[p].iter().map(|&q| c[q] as usize).collect();
                    below.sort_unstable();
                    let mut above: Vec<usize> =
                        (0..s.ji.len()).filter(|&q| s.ji_below[q].contains(&p)).map(|q| c[q] as usize).collect();
                    above.sort_unstable();
                    let mut sig = vec![c[p] as usize, below.len()];
                    sig.extend(below);
                    sig.push(usize::MAX);
                    sig.extend(above);
                    sig
                })
                .collect()
        };
        let na: Vec<Vec<usize>> = step(a, &ca);
        let nb: Vec<Vec<usize>> = step(b, &cb);
        let na: Vec<u32> = na.into_iter().map(&mut intern).collect();
        let nb: Vec<u32> = nb.into_iter().map(&mut intern).collect();
        let now = distinct(&na, &nb);
        ca = na;
        cb = nb;
        if now == classes {
            break;
        }
        classes = now;
    }
    (ca, cb)
}

struct Search<'a> {
    a: &'a Side<'a>,
    b: &'a Side<'a>,
    ca: Vec<u32>,
    cb: Vec<u32>,
    order: Vec<usize>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
    find_all: bool,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn consistent(&self, p: usize) -> bool {
        let a = self.a;
        let b = self.b;
        let q = self.image[p].unwrap();
        // order between join-irreducibles
        for (r, img) in self.image.iter().enumerate() {
            if let Some(s) = *img {
                if a.ji_below[p].contains(&r) != b.ji_below[q].contains(&s)
                    || a.ji_below[r].contains(&p) != b.ji_below[s].contains(&q)
                {
                    return false;
                }
            }
        }
        let mut assigned_a = BitSet::new(a.ji.len());
        let mut assigned_b = BitSet::new(b.ji.len());
        for (r, img) in self.image.iter().enumerate() {
            if let Some(s) = *img {
                assigned_a.insert(r);
                assigned_b.insert(s);
            }
        }
        let forward = |m: &BitSet| -> BitSet {
            let mut out = BitSet::new(b.ji.len());
            for r in m.iter() {
                out.insert(self.image[r].unwrap());
            }
            out
        };
        for m in &a.masks {
            if m.contains(p) && m.is_subset(&assigned_a) && !b.family.contains_key(&forward(m)) {
                return false;
            }
        }
        let mut inverse = vec![usize::MAX; b.ji.len()];
        for (r, img) in self.image.iter().enumerate() {
            if let Some(s) = *img {
                inverse[s] = r;
            }
        }
        for m in &b.masks {
            if m.contains(q) && m.is_subset(&assigned_b) {
                let mut pre = BitSet::new(a.ji.len());
                for s in m.iter() {
                    pre.insert(inverse[s]);
                }
                if !a.family.contains_key(&pre) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self) -> Option<Vec<usize>> {
        let mut f = Vec::with_capacity(self.a.lat.len());
        for m in &self.a.masks {
            let mut out = BitSet::new(self.b.ji.len());
            for r in m.iter() {
                out.insert(self.image[r]?);
            }
            f.push(*self.b.family.get(&out)?);
        }
        let mut seen = vec![false; self.b.lat.len()];
        for &y in &f {
            if std::mem::replace(&mut seen[y], true) {
                return None;
            }
        }
        is_lattice_morphism(&f, self.a.lat, self.b.lat).then_some(f)
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            if let Some(f) = self.extend() {
                self.found.push(f);
                return !self.find_all;
            }
            return false;
        }
        let p = self.order[depth];
        for q in 0..self.b.ji.len() {
            if self.used[q] || self.cb[q] != self.ca[p] {
                continue;
            }
            self.image[p] = Some(q);
            self.used[q] = true;
            if self.consistent(p) && self.run(depth + 1) {
                return true;
            }
            self.image[p] = None;
            self.used[q] = false;
        }
        false
    }
}

fn search(l1: &FiniteLattice, l2: &FiniteLattice, find_all: bool) -> Vec<Vec<usize>> {
    if l1.len() != l2.len() {
        return Vec::new();
    }
    let a = Side::new(l1);
    let b = Side::new(l2);
    if a.ji.len() != b.ji.len() {
        return Vec::new();
    }
    let (ca, cb) = refine_colours(&a, &b);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Vec::new();
    }
    let class_size = |c: u32| ca.iter().filter(|&&x| x == c).count();
    // rarest colours first, lower elements first within a colour
    let heights = l1.heights();
    let mut order: Vec<usize> = (0..a.ji.len()).collect();
    order.sort_by_key(|&p| (class_size(ca[p]), heights[a.ji[p]], p));
    let mut s = Search {
        a: &a,
        b: &b,
        ca,
        cb,
        order,
        image: vec![None; a.ji.len()],
        used: vec![false; b.ji.len()],
        find_all,
        found: Vec::new(),
    };
    s.run(0);
    let mut found = s.found;
    found.sort();
    found
}

/// An isomorphism `l1 -> l2` as an element map, verified to preserve meet and
/// join, or `None`.
pub fn is_isomorphic(l1: &FiniteLattice, l2: &FiniteLattice) -> Option<Vec<usize>> {
    search(l1, l2, false).into_iter().next()
}

/// The full automorphism group, sorted.
pub fn automorphisms(l: &FiniteLattice) -> Vec<Vec<usize>> {
    search(l, l, true)
}
