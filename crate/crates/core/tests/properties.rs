use std::collections::HashSet;

use proptest::prelude::*;

use convexlat::convexgen::{completion_points, saturate, Budget, Verdict};
use convexlat::geom::{convex_hull, Configuration, Point, Polytope};
use convexlat::lattice::{automorphisms, is_isomorphic};
use convexlat::relative::{equivalent, equivalent_via_lattice, rch, relative_lattice, rext};
use convexlat::words::{symmetry, triangle_of_word, witness_point, BinaryWord};

fn points(max: usize, side: i64) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::btree_set((0..side, 0..side), 1..=max).prop_map(|s| s.into_iter().collect())
}

fn config(max: usize, side: i64) -> impl Strategy<Value = Configuration> {
    points(max, side).prop_map(|p| Configuration::from_ints(&p))
}

fn polytope() -> impl Strategy<Value = Polytope> {
    points(5, 7).prop_map(|p| convex_hull(p.into_iter().map(|(x, y)| Point::int(x, y))))
}

const MAPS: [[i64; 4]; 4] = [[1, 0, 0, 1], [0, 1, 1, 0], [2, 1, 1, 1], [1, 3, 0, -1]];

/// An affine image of `x` with its points listed in shuffled order.
fn affine_copy(max: usize) -> impl Strategy<Value = (Configuration, Configuration)> {
    (points(max, 5), 0..MAPS.len(), -3i64..3, -3i64..3)
        .prop_flat_map(|(p, m, dx, dy)| {
            let [a, b, c, d] = MAPS[m];
            let image: Vec<(i64, i64)> = p.iter().map(|&(x, y)| (a * x + b * y + dx, c * x + d * y + dy)).collect();
            (Just(p), Just(image).prop_shuffle())
        })
        .prop_map(|(p, q)| (Configuration::from_ints(&p), Configuration::from_ints(&q)))
}

fn image_mask(mask: u64, f: &[usize]) -> u64 {
    f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0, |acc, (_, &j)| acc | 1 << j)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hull_is_spanned_by_its_extreme_points(p in points(8, 7)) {
        let pts: Vec<Point> = p.iter().map(|&(x, y)| Point::int(x, y)).collect();
        let h = convex_hull(pts.clone());
        prop_assert!(h.extreme_points().iter().all(|v| pts.contains(v)));
        prop_assert_eq!(convex_hull(h.extreme_points().to_vec()), h.clone());
        prop_assert_eq!(h.canonicalize(), h);
    }

    #[test]
    fn meet_and_join_form_a_lattice(p in polytope(), q in polytope(), r in polytope()) {
        prop_assert_eq!(p.meet(&q), q.meet(&p));
        prop_assert_eq!(p.join(&q), q.join(&p));
        prop_assert_eq!(p.meet(&q).meet(&r), p.meet(&q.meet(&r)));
        prop_assert_eq!(p.join(&q).join(&r), p.join(&q.join(&r)));
        prop_assert_eq!(p.meet(&p), p.clone());
        prop_assert_eq!(p.join(&p), p.clone());
        prop_assert_eq!(p.join(&p.meet(&q)), p.clone());
        prop_assert_eq!(p.meet(&p.join(&q)), p.clone());
        prop_assert_eq!(p.meet(&q).canonicalize(), p.meet(&q));
    }

    #[test]
    fn rch_is_a_closure_operator(x in config(10, 6), a in any::<u64>(), b in any::<u64>()) {
        let full = (1u64 << x.len()) - 1;
        let (a, b) = (a & full, b & full);
        let ca = rch(&x, a).unwrap();
        prop_assert_eq!(ca & a, a);
        prop_assert_eq!(rch(&x, ca).unwrap(), ca);
        let cab = rch(&x, a | b).unwrap();
        prop_assert_eq!(ca & cab, ca);
    }

    #[test]
    fn equivalence_routes_agree(x in config(5, 4), y in config(5, 4)) {
        let direct = equivalent(&x, &y);
        prop_assert_eq!(direct.is_some(), equivalent_via_lattice(&x, &y).is_some());
    }

    #[test]
    fn affine_images_are_equivalent((x, y) in affine_copy(7)) {
        let f = equivalent(&x, &y);
        prop_assert!(f.is_some());
        prop_assert!(equivalent_via_lattice(&x, &y).is_some());
        let f = f.unwrap();
        prop_assert_eq!(image_mask(rext(&x), &f), rext(&y));
        for (a, &fa) in f.iter().enumerate() {
            prop_assert!(equivalent(&x.without(a), &y.without(fa)).is_some());
        }
    }

    #[test]
    fn lattice_isomorphism_is_an_equivalence((x, y) in affine_copy(6), (_, z) in affine_copy(6)) {
        let (lx, ly) = (relative_lattice(&x).unwrap(), relative_lattice(&y).unwrap());
        let id = is_isomorphic(&lx, &lx).unwrap();
        prop_assert!(convexlat::lattice::is_lattice_morphism(&id, &lx, &lx));
        let f = is_isomorphic(&lx, &ly).unwrap();
        let g = is_isomorphic(&ly, &lx).unwrap();
        // composing both ways gives automorphisms
        let autos: HashSet<Vec<usize>> = automorphisms(&lx).into_iter().collect();
        let gf: Vec<usize> = (0..lx.len()).map(|i| g[f[i]]).collect();
        prop_assert!(autos.contains(&gf));
        let lz = relative_lattice(&z).unwrap();
        if let Some(h) = is_isomorphic(&ly, &lz) {
            let hf: Vec<usize> = (0..lx.len()).map(|i| h[f[i]]).collect();
            prop_assert!(convexlat::lattice::is_lattice_morphism(&hf, &lx, &lz));
            prop_assert!(is_isomorphic(&lx, &lz).is_some());
        }
    }

    #[test]
    fn automorphisms_form_a_group(x in config(6, 4)) {
        let l = relative_lattice(&x).unwrap();
        let autos: HashSet<Vec<usize>> = automorphisms(&l).into_iter().collect();
        prop_assert!(autos.contains(&(0..l.len()).collect::<Vec<_>>()));
        for a in &autos {
            let mut inv = vec![0; a.len()];
            for (i, &j) in a.iter().enumerate() {
                inv[j] = i;
            }
            prop_assert!(autos.contains(&inv));
            for b in &autos {
                prop_assert!(autos.contains(&a.iter().map(|&i| b[i]).collect::<Vec<_>>()));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn saturation_is_monotone(x in config(4, 5), k in 1usize..3) {
        let cap = 20_000;
        let g = saturate(&x, &Budget::new(k, cap)).unwrap();
        prop_assume!(g.len() < cap);
        let h = saturate(&x, &Budget::new(k + 1, cap)).unwrap();
        let later: HashSet<&Polytope> = h.elements().iter().collect();
        prop_assert!(g.elements().iter().all(|e| later.contains(e)));
        if g.is_saturated() {
            prop_assert_eq!(g.elements(), h.elements());
            prop_assert!(g.is_closed());
        }
    }

    #[test]
    fn completion_generates_the_same_lattice(x in config(5, 4)) {
        let budget = Budget::new(8, 5_000);
        let r = completion_points(&x, &budget).unwrap();
        prop_assume!(r.verdict != Verdict::Unknown && r.status == convexlat::convexgen::SaturationStatus::Saturated);
        let g = saturate(&x, &budget).unwrap();
        let gbar = saturate(&r.completed(), &budget).unwrap();
        prop_assert_eq!(g.elements(), gbar.elements());
    }

    #[test]
    fn word_triangles_nest(bits in prop::collection::vec(0u8..2, 1..=7)) {
        let w = BinaryWord::new(bits).unwrap();
        let parent = BinaryWord::new(w.letters()[..w.len() - 1].iter().copied()).unwrap();
        let (t, tp) = (triangle_of_word(&w).unwrap().triangle, triangle_of_word(&parent).unwrap().triangle);
        prop_assert!(t.is_subset(&tp) && t != tp);
        let s = symmetry();
        prop_assert_eq!(s(&witness_point(&w).unwrap()), witness_point(&w.complement()).unwrap());
        prop_assert_eq!(t.map_affine(s), triangle_of_word(&w.complement()).unwrap().triangle);
    }
}
