//! Finite lattices: closure systems, dense lattice tables, Hasse diagrams,
//! isomorphism and automorphism search.

mod bits;
mod closure;
mod finite;
mod iso;

use std::fmt::Write;

pub use bits::BitSet;
pub use closure::{
    format_mask, lattice_of_closure_system, next_closure_sets, permute_mask, ClosureSystem, SUBSET_SWEEP_LIMIT,
};
pub use finite::{is_lattice_morphism, FiniteLattice, MAX_DENSE_ELEMENTS};
pub use iso::{automorphisms, is_isomorphic};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("ground set of {0} elements exceeds the 64-element bitmask limit")]
    GroundTooLarge(usize),
    #[error("mask {0:#b} has bits outside the ground set")]
    OutOfGround(u64),
    #[error("the full ground set is not closed")]
    MissingGround,
    #[error("closed sets {0:#b} and {1:#b} intersect in a non-closed set")]
    NotIntersectionClosed(u64, u64),
    #[error("lattice has no elements")]
    Empty,
    #[error("{0} elements exceed the dense-table limit")]
    TooLarge(usize),
    #[error("relation is not a partial order at ({0}, {1})")]
    NotPartialOrder(usize, usize),
    #[error("elements {0} and {1} have no meet")]
    NoMeet(usize, usize),
    #[error("elements {0} and {1} have no join")]
    NoJoin(usize, usize),
    #[error("order has no top or no bottom")]
    Unbounded,
}

/// Covering pairs `(lower, upper)` of the Hasse diagram, sorted.
pub fn covering_digraph(l: &FiniteLattice) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> =
        (0..l.len()).flat_map(|b| l.lower_covers(b).into_iter().map(move |a| (a, b))).collect();
    edges.sort_unstable();
    edges
}

/// Graphviz rendering of the Hasse diagram, bottom at the bottom.
pub fn export_dot(l: &FiniteLattice, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "'"));
    out.push_str("  rankdir=BT;\n  node [shape=box, fontsize=10];\n");
    for i in 0..l.len() {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", i, l.label(i).replace('"', "'"));
    }
    for (a, b) in covering_digraph(l) {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hasse_edges() {
        let chain = ClosureSystem::new(1, [0, 1]).unwrap().lattice().unwrap();
        assert_eq!(covering_digraph(&chain), vec![(0, 1)]);
        let b2 = ClosureSystem::new(2, 0..4).unwrap().lattice().unwrap();
        assert_eq!(covering_digraph(&b2).len(), 4);
        let dot = export_dot(&b2, "B2");
        assert!(dot.starts_with("digraph \"B2\""));
        assert_eq!(dot.matches("->").count(), 4);
    }
}
