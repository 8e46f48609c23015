use std::collections::HashSet;

use domgame::corpus::{enumerate_trees, tree_canonical_form, trees_up_to, MAX_TREE_ORDER};
use domgame::Graph;

/// Tree with the given Prüfer sequence on `seq.len() + 2` labels.
fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

/// Isomorphism classes among all labeled trees on `n` vertices.
fn prufer_classes(n: usize) -> HashSet<String> {
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut seq = vec![0; len];
    let mut classes = HashSet::new();
    for mut code in 0..total {
        for s in seq.iter_mut() {
            *s = code % n;
            code /= n;
        }
        classes.insert(tree_canonical_form(&prufer_tree(&seq)).unwrap());
    }
    classes
}

/// Free-tree counts from the rooted-tree recurrence and Otter's
/// dissimilarity formula.
fn otter_counts(n_max: usize) -> Vec<i128> {
    let mut r = vec![0i128; n_max + 1];
    r[1] = 1;
    for n in 1..n_max {
        let mut sum = 0;
        for k in 1..=n {
            let s: i128 = (1..=k).filter(|d| k % d == 0).map(|d| d as i128 * r[d]).sum();
            sum += s * r[n - k + 1];
        }
        r[n + 1] = sum / n as i128;
    }
    let mut t = vec![0i128; n_max + 1];
    for n in 1..=n_max {
        let pairs: i128 = (1..n).map(|i| r[i] * r[n - i]).sum();
        let middle = if n % 2 == 0 { r[n / 2] } else { 0 };
        t[n] = r[n] - (pairs - middle) / 2;
    }
    t
}

#[test]
fn counts_match_prufer_classes() {
    for n in 2..=9 {
        let classes = prufer_classes(n);
        let trees: Vec<Graph> = enumerate_trees(n).unwrap().collect();
        assert_eq!(trees.len(), classes.len(), "n={n}");
        let ours: HashSet<String> = trees.iter().map(|t| tree_canonical_form(t).unwrap()).collect();
        assert_eq!(ours, classes, "n={n}");
    }
}

#[test]
fn counts_match_otter_formula() {
    let t = otter_counts(MAX_TREE_ORDER);
    assert_eq!(&t[1..5], &[1, 1, 1, 2]);
    for n in 1..=MAX_TREE_ORDER {
        assert_eq!(enumerate_trees(n).unwrap().count() as i128, t[n], "n={n}");
    }
}

#[test]
fn trees_are_trees_and_distinct() {
    for n in 1..=14 {
        let mut seen = HashSet::new();
        for t in enumerate_trees(n).unwrap() {
            assert_eq!(t.n(), n);
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected());
            assert!(seen.insert(tree_canonical_form(&t).unwrap()), "duplicate at n={n}");
        }
    }
}

#[test]
fn small_orders() {
    assert_eq!(enumerate_trees(1).unwrap().count(), 1);
    let four: Vec<Graph> = enumerate_trees(4).unwrap().collect();
    assert_eq!(four.len(), 2);
    assert_eq!(trees_up_to(1).unwrap().len(), 0);
}
