//! Domination number and total domination number.
//!
//! Iterative deepening on the set size. At each level the lowest vertex not
//! yet (totally) dominated must be hit by one of its (open) neighbors, so
//! the search branches only over that neighborhood.

use serde::Serialize;

use crate::engine::GameError;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassicalResult {
    pub gamma: u32,
    pub gamma_t: u32,
}

/// Both invariants; `g` must be isolate-free.
pub fn classical(g: &Graph) -> Result<ClassicalResult, GameError> {
    Ok(ClassicalResult {
        gamma: domination_number(g),
        gamma_t: total_domination_number(g)?,
    })
}

pub fn domination_number(g: &Graph) -> u32 {
    let hoods: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    min_cover(&hoods, g.vertices())
}

pub fn total_domination_number(g: &Graph) -> Result<u32, GameError> {
    if g.has_isolated() {
        return Err(GameError::IsolatedVertex(g.isolated_vertices()));
    }
    let hoods: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    Ok(min_cover(&hoods, g.vertices()))
}

/// Smallest `k` such that `k` of the `hoods` cover `target`.
fn min_cover(hoods: &[VertexSet], target: VertexSet) -> u32 {
    // hits[u] = vertices whose neighborhood contains u
    let mut hits = vec![VertexSet::EMPTY; hoods.len()];
    for (v, h) in hoods.iter().enumerate() {
        for u in *h {
            hits[u].insert(v);
        }
    }
    let mut k = 0;
    while !coverable(hoods, &hits, target, VertexSet::EMPTY, k) {
        k += 1;
    }
    k
}

fn coverable(hoods: &[VertexSet], hits: &[VertexSet], target: VertexSet, covered: VertexSet, budget: u32) -> bool {
    let Some(u) = (target - covered).first() else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    hits[u]
        .iter()
        .any(|v| coverable(hoods, hits, target, covered | hoods[v], budget - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::{complete, cycle, leafy_clique, path, star};

    #[test]
    fn examples() {
        assert_eq!(domination_number(&star(3).unwrap()), 1);
        assert_eq!(domination_number(&cycle(5).unwrap()), 2);
        assert_eq!(domination_number(&leafy_clique(2).unwrap()), 2);
        assert_eq!(total_domination_number(&leafy_clique(2).unwrap()), Ok(2));
        assert_eq!(total_domination_number(&complete(2).unwrap()), Ok(2));
        assert_eq!(total_domination_number(&cycle(5).unwrap()), Ok(3));
        assert_eq!(total_domination_number(&leafy_clique(3).unwrap()), Ok(3));
    }

    #[test]
    fn paths() {
        for n in 2..15 {
            let p = path(n).unwrap();
            assert_eq!(domination_number(&p), n.div_ceil(3) as u32, "n={n}");
        }
    }

    #[test]
    fn isolated_rejected_for_total() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(total_domination_number(&g).is_err());
        assert_eq!(domination_number(&g), 2);
    }
}
