//! Named graph families and the product/corona constructions.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::graph6::{parse_graph6, Graph6Error};
use super::{Graph, GraphError, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `P_n` on `0..n` with edges `{i, i+1}`.
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,k}` with center 0.
    Star(usize),
    /// `F_n`: `K_n` with `n` pendant leaves on every clique vertex.
    LeafyClique(usize),
}

fn at_least(family: &'static str, param: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::ParameterTooSmall {
            family,
            param,
            min,
            got,
        })
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    at_least("path", "n", 1, n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    at_least("cycle", "n", 3, n)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    at_least("complete", "n", 1, n)?;
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn star(k: usize) -> Result<Graph, GraphError> {
    at_least("star", "k", 1, k)?;
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

/// Clique vertices are `0..n`; the leaves of clique vertex `i` are
/// `n + i*n .. n + (i+1)*n`.
pub fn leafy_clique(n: usize) -> Result<Graph, GraphError> {
    at_least("leafy_clique", "n", 2, n)?;
    let total = n * (n + 1);
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let clique = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let leaves = (0..n).flat_map(|i| (0..n).map(move |k| (i, n + i * n + k)));
    Graph::from_edges(total, clique.chain(leaves))
}

pub fn construct_family(family: Family) -> Result<Graph, GraphError> {
    match family {
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::Complete(n) => complete(n),
        Family::Star(k) => star(k),
        Family::LeafyClique(n) => leafy_clique(n),
    }
}

/// `G □ H`; vertex `(i, j)` has index `i * n(H) + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (gn, hn) = (g.n(), h.n());
    let total = gn * hn;
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let mut adj = vec![VertexSet::EMPTY; total];
    for i in 0..gn {
        for j in 0..hn {
            let nb = &mut adj[i * hn + j];
            for i2 in g.neighbors(i) {
                nb.insert(i2 * hn + j);
            }
            for j2 in h.neighbors(j) {
                nb.insert(i * hn + j2);
            }
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// `G^Y`: each vertex of `G` becomes the center of a private spider with
/// three legs of length two.
///
/// Centers keep their indices `0..n`. For center `v`, the support vertices
/// are `n + 6v + {0,1,2}` and the leaf hanging off support `n + 6v + k` is
/// `n + 6v + 3 + k`.
pub fn y_corona(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.n();
    let total = 7 * n;
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in 0..n {
        let base = n + 6 * v;
        for k in 0..3 {
            edges.push((v, base + k));
            edges.push((base + k, base + 3 + k));
        }
    }
    Graph::from_edges(total, edges)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::LeafyClique(n) => write!(f, "leafy:{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameter in {0:?}")]
    BadParameter(String),
    #[error("cannot split {0:?} into two operands around 'x'")]
    BadProduct(String),
    #[error("ambiguous product {0:?}: several ways to split around 'x'")]
    AmbiguousProduct(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

impl FromStr for Family {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| SpecError::UnknownFamily(s.to_string()))?;
        let k: usize = arg
            .trim()
            .parse()
            .map_err(|_| SpecError::BadParameter(s.to_string()))?;
        Ok(match name.trim() {
            "path" => Family::Path(k),
            "cycle" => Family::Cycle(k),
            "complete" => Family::Complete(k),
            "star" => Family::Star(k),
            "leafy" | "leafy_clique" => Family::LeafyClique(k),
            other => return Err(SpecError::UnknownFamily(other.to_string())),
        })
    }
}

/// Parses the command-line graph mini-language.
///
/// ```text
/// spec    := family | "ycorona:" operand | "cartesian:" operand "x" operand
/// family  := ("path"|"cycle"|"star"|"complete"|"leafy") ":" N
/// operand := spec | graph6
/// ```
///
/// `x` is a legal graph6 character, so a product is split at every `x` and
/// accepted only if exactly one split parses on both sides.
pub fn parse_graph_spec(s: &str) -> Result<Graph, SpecError> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("ycorona:") {
        return Ok(y_corona(&parse_operand(rest)?)?);
    }
    if let Some(rest) = s.strip_prefix("cartesian:") {
        let mut found = None;
        for (i, _) in rest.match_indices('x') {
            if let (Ok(a), Ok(b)) = (parse_operand(&rest[..i]), parse_operand(&rest[i + 1..])) {
                if found.is_some() {
                    return Err(SpecError::AmbiguousProduct(s.to_string()));
                }
                found = Some((a, b));
            }
        }
        let (a, b) = found.ok_or_else(|| SpecError::BadProduct(s.to_string()))?;
        return Ok(cartesian_product(&a, &b)?);
    }
    Ok(construct_family(s.parse()?)?)
}

fn parse_operand(s: &str) -> Result<Graph, SpecError> {
    if s.contains(':') {
        parse_graph_spec(s)
    } else {
        Ok(parse_graph6(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_five() {
        let p5 = path(5).unwrap();
        assert_eq!(
            p5.edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3), (3, 4)]
        );
        assert_eq!(path(1).unwrap().n(), 1);
    }

    #[test]
    fn leafy_clique_two() {
        let f2 = leafy_clique(2).unwrap();
        assert_eq!(f2.n(), 6);
        assert!(f2.has_edge(0, 1));
        assert_eq!(f2.neighbors(0), [1, 2, 3].into_iter().collect());
        assert_eq!(f2.neighbors(1), [0, 4, 5].into_iter().collect());
        assert!((2..6).all(|v| f2.degree(v) == 1));
        let f3 = leafy_clique(3).unwrap();
        assert_eq!(f3.n(), 12);
        assert_eq!(f3.edge_count(), 3 + 9);
    }

    #[test]
    fn star_three() {
        let s = star(3).unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.degree(0), 3);
    }

    #[test]
    fn parameters_below_minimum() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(star(0).is_err());
        assert!(complete(0).is_err());
        assert!(matches!(
            leafy_clique(1),
            Err(GraphError::ParameterTooSmall { min: 2, got: 1, .. })
        ));
        assert!(leafy_clique(8).is_err());
    }

    #[test]
    fn k2_box_k2_is_c4() {
        let k2 = complete(2).unwrap();
        let g = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(g.n(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        // 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1): a 4-cycle 0-1-3-2-0
        assert_eq!(g, cycle(4).unwrap().permuted(&[0, 1, 3, 2]));
    }

    #[test]
    fn k2_box_star() {
        let g = cartesian_product(&complete(2).unwrap(), &star(4).unwrap()).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 4 + 4 + 5);
        for j in 0..5 {
            assert!(g.has_edge(j, 5 + j));
        }
        assert_eq!(g.degree(0), 5);
    }

    #[test]
    fn identity_factor() {
        let p3 = path(3).unwrap();
        let k1 = complete(1).unwrap();
        assert_eq!(cartesian_product(&p3, &k1).unwrap(), p3);
    }

    #[test]
    fn product_too_large() {
        let k9 = complete(9).unwrap();
        assert_eq!(
            cartesian_product(&k9, &k9),
            Err(GraphError::TooManyVertices(81))
        );
    }

    #[test]
    fn y_of_k1_is_spider() {
        let y = y_corona(&complete(1).unwrap()).unwrap();
        assert_eq!(y.n(), 7);
        assert!(y.is_tree());
        assert_eq!(y.degree(0), 3);
        assert_eq!((0..7).filter(|&v| y.degree(v) == 1).count(), 3);
        assert_eq!((0..7).filter(|&v| y.degree(v) == 2).count(), 3);
    }

    #[test]
    fn y_of_k2() {
        let k2 = complete(2).unwrap();
        let g = y_corona(&k2).unwrap();
        assert_eq!(g.n(), 14);
        assert!(g.is_tree());
        for v in 0..2 {
            assert_eq!(g.degree(v), k2.degree(v) + 3);
        }
        assert!(y_corona(&complete(10).unwrap()).is_err());
    }

    #[test]
    fn spec_language() {
        assert_eq!(parse_graph_spec("path:4").unwrap(), path(4).unwrap());
        assert_eq!(parse_graph_spec("leafy:2").unwrap(), leafy_clique(2).unwrap());
        assert_eq!(parse_graph_spec("ycorona:A_").unwrap().n(), 14);
        assert_eq!(parse_graph_spec("ycorona:complete:1").unwrap().n(), 7);
        let prod = parse_graph_spec("cartesian:A_xstar:4").unwrap();
        assert_eq!(prod.n(), 10);
        assert_eq!(parse_graph_spec("cartesian:A_xA_").unwrap().edge_count(), 4);
        assert!(matches!(
            parse_graph_spec("wheel:5"),
            Err(SpecError::UnknownFamily(_))
        ));
        assert!(matches!(
            parse_graph_spec("path:abc"),
            Err(SpecError::BadParameter(_))
        ));
        assert!(parse_graph_spec("cartesian:A_").is_err());
    }

    #[test]
    fn family_display_round_trip() {
        for f in [
            Family::Path(3),
            Family::Cycle(5),
            Family::Complete(4),
            Family::Star(2),
            Family::LeafyClique(3),
        ] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
