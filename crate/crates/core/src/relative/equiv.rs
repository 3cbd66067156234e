use crate::geom::Configuration;
use crate::lattice::{is_isomorphic, permute_mask, ClosureSystem};

use super::{closure_system_limited, lattice_from_system};

/// Per-point invariant: how many closed sets of each size contain the point,
/// followed by the sorted closure sizes of the pairs it belongs to.
fn point_signatures(sys: &ClosureSystem) -> Vec<Vec<usize>> {
    let n = sys.ground_size();
    (0..n)
        .map(|i| {
            let mut sig = vec![0usize; n + 1];
            for &c in sys.closed_sets() {
                if c >> i & 1 == 1 {
                    sig[c.count_ones() as usize] += 1;
                }
            }
            let mut pairs: Vec<usize> =
                (0..n).filter(|&j| j != i).map(|j| sys.closure(1 << i | 1 << j).count_ones() as usize).collect();
            pairs.sort_unstable();
            sig.extend(pairs);
            sig
        })
        .collect()
}

/// A complete isomorphism invariant of a closure system: the least sorted
/// mask list over all relabellings that respect the point signatures.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub size: usize,
    pub signatures: Vec<Vec<usize>>,
    pub masks: Vec<u64>,
}

pub fn canonical_form(sys: &ClosureSystem) -> CanonicalForm {
    let n = sys.ground_size();
    let sigs = point_signatures(sys);
    let mut classes: Vec<Vec<usize>> = sigs.clone();
    classes.sort();
    classes.dedup();
    let groups: Vec<Vec<usize>> = classes.iter().map(|s| (0..n).filter(|&i| &sigs[i] == s).collect()).collect();

    // labels are handed out group by group; within a group every order is tried
    let mut best: Option<Vec<u64>> = None;
    let mut perm = vec![0usize; n];
    let mut group_perms: Vec<Vec<usize>> = groups.clone();
    fn rec(
        g: usize,
        groups: &[Vec<usize>],
        group_perms: &mut Vec<Vec<usize>>,
        perm: &mut Vec<usize>,
        sys: &ClosureSystem,
        best: &mut Option<Vec<u64>>,
    ) {
        if g == groups.len() {
            let mut next = 0;
            for gp in group_perms.iter() {
                for &i in gp {
                    perm[i] = next;
                    next += 1;
                }
            }
            let mut masks: Vec<u64> = sys.closed_sets().iter().map(|&m| permute_mask(m, perm)).collect();
            masks.sort_unstable();
            if best.as_ref().is_none_or(|b| masks < *b) {
                *best = Some(masks);
            }
            return;
        }
        let mut items = groups[g].clone();
        permutations(&mut items, 0, &mut |p| {
            group_perms[g] = p.to_vec();
            rec(g + 1, groups, group_perms, perm, sys, best);
        });
    }
    rec(0, &groups, &mut group_perms, &mut perm, sys, &mut best);
    let signatures = groups.iter().flat_map(|g| g.iter().map(|&i| sigs[i].clone())).collect();
    CanonicalForm { size: n, signatures, masks: best.unwrap_or_default() }
}

fn permutations(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Direct search for a point bijection carrying closed sets onto closed sets.
pub fn equivalent_via_bijection(x: &Configuration, y: &Configuration) -> Option<Vec<usize>> {
    let sx = closure_system_limited(x, 64).ok()?;
    let sy = closure_system_limited(y, 64).ok()?;
    system_bijection(&sx, &sy)
}

pub(crate) fn system_bijection(sx: &ClosureSystem, sy: &ClosureSystem) -> Option<Vec<usize>> {
    let n = sx.ground_size();
    if n != sy.ground_size() || sx.len() != sy.len() {
        return None;
    }
    if sx.closed_sets() == sy.closed_sets() {
        return Some((0..n).collect());
    }
    let gx = point_signatures(sx);
    let gy = point_signatures(sy);
    let mut a = gx.clone();
    let mut b = gy.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let class_size = |i: usize| gx.iter().filter(|s| **s == gx[i]).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (class_size(i), i));
    let mut step_of = vec![0usize; n];
    for (k, &i) in order.iter().enumerate() {
        step_of[i] = k;
    }
    // closed sets checked at the step where their last point is assigned
    let mut buckets: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &c in sx.closed_sets() {
        if c != 0 {
            let last = (0..n).filter(|&i| c >> i & 1 == 1).map(|i| step_of[i]).max().unwrap();
            buckets[last].push(c);
        }
    }

    struct St<'a> {
        sy: &'a ClosureSystem,
        gx: &'a [Vec<usize>],
        gy: &'a [Vec<usize>],
        order: &'a [usize],
        buckets: &'a [Vec<u64>],
        image: Vec<usize>,
        used: Vec<bool>,
    }
    fn run(st: &mut St, k: usize) -> bool {
        if k == st.order.len() {
            return true;
        }
        let p = st.order[k];
        for q in 0..st.gy.len() {
            if st.used[q] || st.gy[q] != st.gx[p] {
                continue;
            }
            st.image[p] = q;
            st.used[q] = true;
            let ok = st.buckets[k].iter().all(|&c| st.sy.is_closed(permute_mask(c, &st.image)));
            if ok && run(st, k + 1) {
                return true;
            }
            st.used[q] = false;
        }
        false
    }
    let mut st =
        St { sy, gx: &gx, gy: &gy, order: &order, buckets: &buckets, image: vec![usize::MAX; n], used: vec![false; n] };
    run(&mut st, 0).then_some(st.image)
}

/// Point bijection induced on atoms by an isomorphism of relative lattices.
pub fn equivalent_via_lattice(x: &Configuration, y: &Configuration) -> Option<Vec<usize>> {
    if x.len() != y.len() {
        return None;
    }
    let sx = closure_system_limited(x, 64).ok()?;
    let sy = closure_system_limited(y, 64).ok()?;
    let lx = lattice_from_system(x, &sx).ok()?;
    let ly = lattice_from_system(y, &sy).ok()?;
    let f = is_isomorphic(&lx, &ly)?;
    let mut points = vec![0usize; x.len()];
    for (i, slot) in points.iter_mut().enumerate() {
        let e = sx.position(1 << i)?;
        let img = sy.closed_sets()[f[e]];
        if img.count_ones() != 1 {
            return None;
        }
        *slot = img.trailing_zeros() as usize;
    }
    Some(points)
}

/// A point bijection `f` (as `f[i] = j`) such that `A` is relatively convex in
/// `x` iff `f(A)` is relatively convex in `y`.
pub fn equivalent(x: &Configuration, y: &Configuration) -> Option<Vec<usize>> {
    equivalent_via_bijection(x, y)
}
