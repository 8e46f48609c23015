//! Test corpora: all free trees of a given order, and seeded random
//! connected graphs.

use std::io::{self, BufRead, Write};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Graph6Error, GraphError, VertexSet};

/// Largest order accepted by [`enumerate_trees`].
pub const MAX_TREE_ORDER: usize = 18;

/// Edge probability used by [`random_connected`] on top of the spanning tree.
pub const DEFAULT_EDGE_PROBABILITY: f64 = 0.3;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("tree order {0} outside 1..={MAX_TREE_ORDER}")]
    OrderOutOfRange(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Every free tree on `n` vertices exactly once.
///
/// Trees are produced as level sequences of rooted trees in the order of the
/// constant-amortized-time free-tree algorithm of Wright, Richmond, Odlyzko
/// and McKay, with rooted-tree successors from Beyer and Hedetniemi. A
/// vertex's parent is the nearest earlier vertex one level up, which fixes
/// the labeling.
pub fn enumerate_trees(n: usize) -> Result<TreeStream, CorpusError> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(CorpusError::OrderOutOfRange(n));
    }
    let layout = if n == 1 {
        vec![0]
    } else {
        (0..=n / 2).chain(1..n.div_ceil(2)).collect()
    };
    Ok(TreeStream {
        n,
        layout: Some(layout),
    })
}

#[derive(Debug, Clone)]
pub struct TreeStream {
    n: usize,
    layout: Option<Vec<usize>>,
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.n
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let layout = self.layout.take()?;
        if self.n == 1 {
            return Some(Graph::empty(1).expect("one vertex"));
        }
        let tree = next_free_tree(layout)?;
        self.layout = next_rooted_tree(&tree, None);
        Some(layout_to_graph(&tree))
    }
}

/// Next rooted level sequence, changing positions from `p` on.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the root's first subtree (re-leveled) and
/// the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(1)
        .skip_while(|&(i, _)| i == 1)
        .find(|&(_, &l)| l == 1)
        .map(|(i, _)| i)
        .unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// The candidate itself if it is the canonical rooting of a free tree,
/// otherwise the next candidate that is.
fn next_free_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
            valid = false;
        }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (k, level) in (1..=h + 1).enumerate() {
            next[len - (h + 1) + k] = level;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), edges).expect("level sequence yields a valid tree")
}

/// Isomorphism-invariant string for a tree (AHU encoding rooted at the
/// center; the smaller encoding if there are two centers). `None` if `g`
/// is not a tree.
pub fn tree_canonical_form(g: &Graph) -> Option<String> {
    if !g.is_tree() {
        return None;
    }
    let n = g.n();
    let mut remaining = g.vertices();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    while remaining.len() > 2 {
        let leaves: Vec<usize> = remaining.iter().filter(|&v| degree[v] <= 1).collect();
        for &v in &leaves {
            remaining.remove(v);
            for u in g.neighbors(v) & remaining {
                degree[u] -= 1;
            }
        }
    }
    remaining.iter().map(|c| ahu(g, c, None)).min()
}

fn ahu(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| ahu(g, u, Some(v)))
        .collect();
    kids.sort();
    let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
    s.push('(');
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

/// All trees on `2..=n_max` vertices, smallest orders first. The single
/// vertex is left out since it has no legal game.
pub fn trees_up_to(n_max: usize) -> Result<Vec<Graph>, CorpusError> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.extend(enumerate_trees(n)?);
    }
    Ok(out)
}

/// `count` random connected graphs with orders drawn uniformly from
/// `2..=max_n`.
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<Graph>, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=max_n.max(2));
            random_connected_with(n, DEFAULT_EDGE_PROBABILITY, &mut rng)
        })
        .collect()
}

/// Connected graph: a random spanning tree plus each remaining pair with
/// probability `p`. Deterministic in `seed`.
pub fn random_connected(n: usize, seed: u64) -> Result<Graph, GraphError> {
    random_connected_with(n, DEFAULT_EDGE_PROBABILITY, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_connected_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::ParameterTooSmall {
            family: "random_connected",
            param: "n",
            min: 2,
            got: n,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        edges.push((order[i], order[j]));
    }
    let tree = Graph::from_edges(n, edges.iter().copied())?;
    // Pairs are visited in a fixed order so the seed alone fixes the graph.
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Random subset of `universe`, each member kept with probability `p`.
pub fn random_subset<R: Rng>(universe: VertexSet, p: f64, rng: &mut R) -> VertexSet {
    universe.iter().filter(|_| rng.random_bool(p)).collect()
}

/// Writes one graph6 string per line.
pub fn write_graph6_lines<'a, W, I>(out: &mut W, graphs: I) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        writeln!(out, "{}", g.to_graph6())?;
    }
    Ok(())
}

/// Reads newline-separated graph6; blank lines and `#` comments are skipped.
pub fn read_graph6_lines<R: BufRead>(input: R) -> Result<Vec<Graph>, CorpusError> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        out.push(Graph::from_graph6(t).map_err(|source| CorpusError::Parse { line: i + 1, source })?);
    }
    Ok(out)
}
