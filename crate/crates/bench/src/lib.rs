//! Shared inputs for the benchmarks.

use domgame::Graph;

/// The 11-vertex caterpillar whose five game values are pairwise distinct.
pub fn caterpillar() -> Graph {
    let spine = (0..6).map(|i| (i, i + 1));
    Graph::from_edges(11, spine.chain([(1, 7), (2, 8), (3, 9), (4, 10)])).expect("valid tree")
}
