//! Exact game values by memoized minimax.
//!
//! Dominator minimizes the number of moves, Staller maximizes it; a
//! terminal position is worth 0. The residual value of a position depends
//! only on `(covered, forbidden, to_move)`, which is the memo key. The move
//! counter is deliberately not part of the key.
//!
//! In the LL-game a vertex that is uncovered while its whole open
//! neighborhood is covered can be replayed without changing anything (a
//! null move), so the literal game tree is infinite. Whenever a null move
//! exists Staller can answer it with the same null move, so a null move
//! costs Dominator at least two moves and never improves his result. The
//! search therefore never lets Dominator make one. With that, coverage
//! grows on every Dominator move and every game ends within `2n` moves.

use std::hash::Hash;

use dashmap::DashMap;
use rayon::prelude::*;
use rustc_hash::{FxBuildHasher, FxHashMap};
use serde::Serialize;
use thiserror::Error;

use crate::engine::{ForbiddenMode, GameError, GameState, Player, Variant};
use crate::graph::{Graph, VertexSet};

/// Default cap on memo entries (roughly 1.5 GB of table).
pub const DEFAULT_MAX_ENTRIES: usize = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("memo table exceeded its cap of {cap} entries")]
    StateCapExceeded { cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MemoKey {
    pub covered: VertexSet,
    pub forbidden: VertexSet,
    pub to_move: Player,
}

impl MemoKey {
    pub fn of(state: &GameState<'_>) -> Self {
        MemoKey {
            covered: state.covered(),
            forbidden: state.forbidden(),
            to_move: state.to_move(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_entries: usize,
    pub forbidden_mode: ForbiddenMode,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_entries: DEFAULT_MAX_ENTRIES,
            forbidden_mode: ForbiddenMode::Normalized,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    /// Number of moves under optimal play.
    pub length: u32,
    /// Root moves that achieve `length`.
    pub optimal_first: VertexSet,
    /// Memo entries held when the solve finished.
    pub states_visited: usize,
}

/// Storage for residual values.
pub trait TranspositionTable {
    fn get(&self, key: &MemoKey) -> Option<u8>;
    fn insert(&mut self, key: MemoKey, value: u8);
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl TranspositionTable for FxHashMap<MemoKey, u8> {
    #[inline]
    fn get(&self, key: &MemoKey) -> Option<u8> {
        std::collections::HashMap::get(self, key).copied()
    }
    #[inline]
    fn insert(&mut self, key: MemoKey, value: u8) {
        std::collections::HashMap::insert(self, key, value);
    }
    #[inline]
    fn len(&self) -> usize {
        std::collections::HashMap::len(self)
    }
}

/// A table that many threads may fill at once. Entries are written whole,
/// and a race only means two threads compute the same value.
pub type SharedTable = DashMap<MemoKey, u8, FxBuildHasher>;

impl TranspositionTable for &SharedTable {
    #[inline]
    fn get(&self, key: &MemoKey) -> Option<u8> {
        DashMap::get(*self, key).map(|v| *v)
    }
    #[inline]
    fn insert(&mut self, key: MemoKey, value: u8) {
        DashMap::insert(*self, key, value);
    }
    #[inline]
    fn len(&self) -> usize {
        DashMap::len(*self)
    }
}

fn search<T: TranspositionTable>(
    state: &GameState<'_>,
    table: &mut T,
    cap: usize,
) -> Result<u8, SolveError> {
    let key = MemoKey::of(state);
    if let Some(v) = table.get(&key) {
        return Ok(v);
    }
    let moves = state.legal_moves();
    let value = if moves.is_empty() {
        0
    } else {
        let dominator = state.to_move() == Player::Dominator;
        let mut best = if dominator { u8::MAX } else { 0 };
        for v in moves {
            if dominator && state.is_null_move(v) {
                continue;
            }
            let child = search(&state.apply_unchecked(v), table, cap)?;
            best = if dominator {
                best.min(child)
            } else {
                best.max(child)
            };
        }
        best + 1
    };
    if table.len() >= cap {
        return Err(SolveError::StateCapExceeded { cap });
    }
    table.insert(key, value);
    Ok(value)
}

/// Memoized solver for one graph and one variant. The table is kept
/// between calls, so solving several start positions on the same graph
/// reuses work.
pub struct Solver<'g> {
    graph: &'g Graph,
    variant: Variant,
    config: SolverConfig,
    table: FxHashMap<MemoKey, u8>,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, variant: Variant) -> Self {
        Self::with_config(graph, variant, SolverConfig::default())
    }

    pub fn with_config(graph: &'g Graph, variant: Variant, config: SolverConfig) -> Self {
        Solver {
            graph,
            variant,
            config,
            table: FxHashMap::default(),
        }
    }

    pub fn start(&self, predominated: VertexSet, starter: Player) -> Result<GameState<'g>, GameError> {
        GameState::with_mode(
            self.graph,
            self.variant,
            predominated,
            starter,
            self.config.forbidden_mode,
        )
    }

    /// Residual number of moves from `state` under optimal play.
    pub fn value(&mut self, state: &GameState<'_>) -> Result<u32, SolveError> {
        debug_assert!(state.variant() == self.variant);
        search(state, &mut self.table, self.config.max_entries).map(u32::from)
    }

    pub fn solve(&mut self, predominated: VertexSet, starter: Player) -> Result<SolveResult, SolveError> {
        let root = self.start(predominated, starter)?;
        let length = self.value(&root)?;
        let mut optimal_first = VertexSet::EMPTY;
        if length > 0 {
            for v in root.legal_moves() {
                if self.value(&root.apply_unchecked(v))? + 1 == length {
                    optimal_first.insert(v);
                }
            }
        }
        Ok(SolveResult {
            length,
            optimal_first,
            states_visited: self.table.len(),
        })
    }

    /// A full optimal play; ties go to the lowest vertex index.
    pub fn optimal_line(
        &mut self,
        predominated: VertexSet,
        starter: Player,
    ) -> Result<Vec<(Player, usize)>, SolveError> {
        let mut state = self.start(predominated, starter)?;
        let mut line = Vec::new();
        while let Some(v) = self.best_move(&state)? {
            line.push((state.to_move(), v));
            state = state.apply_unchecked(v);
        }
        Ok(line)
    }

    /// Lowest-index optimal move for the player to move, `None` if terminal.
    pub fn best_move(&mut self, state: &GameState<'_>) -> Result<Option<usize>, SolveError> {
        let target = self.value(state)?;
        if target == 0 {
            return Ok(None);
        }
        for v in state.legal_moves() {
            if self.value(&state.apply_unchecked(v))? + 1 == target {
                return Ok(Some(v));
            }
        }
        unreachable!("a non-terminal position has an optimal move")
    }

    pub fn table_len(&self) -> usize {
        self.table.len()
    }
}

/// Game length with Dominator or Staller starting on `G|A`.
pub fn game_length(
    g: &Graph,
    variant: Variant,
    starter: Player,
    predominated: VertexSet,
) -> Result<SolveResult, SolveError> {
    Solver::new(g, variant).solve(predominated, starter)
}

pub fn optimal_line(
    g: &Graph,
    variant: Variant,
    starter: Player,
    predominated: VertexSet,
) -> Result<Vec<(Player, usize)>, SolveError> {
    Solver::new(g, variant).optimal_line(predominated, starter)
}

/// Like [`game_length`], but the root moves are searched in parallel over
/// one shared table.
pub fn game_length_parallel(
    g: &Graph,
    variant: Variant,
    starter: Player,
    predominated: VertexSet,
    config: SolverConfig,
) -> Result<SolveResult, SolveError> {
    let root = GameState::with_mode(g, variant, predominated, starter, config.forbidden_mode)?;
    let table = SharedTable::with_hasher(FxBuildHasher);
    let moves: Vec<usize> = root.legal_moves().iter().collect();
    let children: Vec<(usize, u32)> = moves
        .par_iter()
        .map(|&v| {
            let mut t = &table;
            search(&root.apply_unchecked(v), &mut t, config.max_entries).map(|x| (v, x as u32 + 1))
        })
        .collect::<Result<_, _>>()?;
    let length = match starter {
        Player::Dominator => children.iter().map(|c| c.1).min(),
        Player::Staller => children.iter().map(|c| c.1).max(),
    }
    .unwrap_or(0);
    let optimal_first = children
        .iter()
        .filter(|c| c.1 == length)
        .map(|c| c.0)
        .collect();
    Ok(SolveResult {
        length,
        optimal_first,
        states_visited: table.len(),
    })
}

/// Plain minimax over move sequences: no memo, no bitmasks, no shared code
/// with [`GameState`]. Exponential; intended for graphs of at most eight
/// vertices as an oracle for the memoized solver.
pub fn brute_length(
    g: &Graph,
    variant: Variant,
    starter: Player,
    predominated: VertexSet,
) -> Result<u32, GameError> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| g.has_edge(u, v)).collect())
        .collect();
    if let Some(v) = adj.iter().position(|a| a.is_empty()) {
        return Err(GameError::IsolatedVertex(VertexSet::singleton(v)));
    }
    if predominated.iter().any(|v| v >= n) {
        return Err(GameError::PredominatedOutOfRange(predominated));
    }
    // (newness is open, coverage is open, moves must be distinct)
    let rule = match variant {
        Variant::D => (false, false, false),
        Variant::T => (true, true, false),
        Variant::Z => (true, false, false),
        Variant::L => (false, true, true),
        Variant::LL => (false, true, false),
    };
    let mut brute = Brute {
        adj,
        newness_open: rule.0,
        coverage_open: rule.1,
        distinct: rule.2,
        cover_count: (0..n).map(|v| predominated.contains(v) as u32).collect(),
        played: Vec::new(),
    };
    Ok(brute.run(starter == Player::Dominator))
}

struct Brute {
    adj: Vec<Vec<usize>>,
    newness_open: bool,
    coverage_open: bool,
    distinct: bool,
    cover_count: Vec<u32>,
    played: Vec<usize>,
}

impl Brute {
    fn hood(&self, v: usize, open: bool) -> Vec<usize> {
        let mut h = self.adj[v].clone();
        if !open {
            h.push(v);
        }
        h
    }

    fn legal(&self, v: usize) -> bool {
        if self.distinct && self.played.contains(&v) {
            return false;
        }
        self.hood(v, self.newness_open)
            .iter()
            .any(|&u| self.cover_count[u] == 0)
    }

    fn run(&mut self, dominator: bool) -> u32 {
        let mut best: Option<u32> = None;
        for v in 0..self.adj.len() {
            if !self.legal(v) {
                continue;
            }
            let hood = self.hood(v, self.coverage_open);
            // Dominator gains nothing from a move that covers nothing new.
            if dominator && !self.distinct && hood.iter().all(|&u| self.cover_count[u] > 0) {
                continue;
            }
            for &u in &hood {
                self.cover_count[u] += 1;
            }
            self.played.push(v);
            let r = 1 + self.run(!dominator);
            self.played.pop();
            for &u in &hood {
                self.cover_count[u] -= 1;
            }
            best = Some(match best {
                None => r,
                Some(b) if dominator => b.min(r),
                Some(b) => b.max(r),
            });
        }
        best.unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::{complete, cycle, leafy_clique, path, star};

    fn len(g: &Graph, v: Variant, p: Player, pre: &[usize]) -> u32 {
        game_length(g, v, p, pre.iter().copied().collect()).unwrap().length
    }

    #[test]
    fn five_cycle() {
        let c5 = cycle(5).unwrap();
        let d = Player::Dominator;
        assert_eq!(len(&c5, Variant::Z, d, &[]), 3);
        assert_eq!(len(&c5, Variant::D, d, &[]), 3);
        assert_eq!(len(&c5, Variant::T, d, &[]), 3);
        assert_eq!(len(&c5, Variant::L, d, &[]), 3);
        assert_eq!(len(&c5, Variant::LL, d, &[]), 5);
    }

    #[test]
    fn small_values() {
        let k2 = complete(2).unwrap();
        assert_eq!(len(&k2, Variant::LL, Player::Dominator, &[]), 3);
        assert_eq!(len(&k2, Variant::D, Player::Dominator, &[]), 1);
        let p3 = path(3).unwrap();
        assert_eq!(len(&p3, Variant::LL, Player::Staller, &[0, 2]), 2);
        let f2 = leafy_clique(2).unwrap();
        assert_eq!(len(&f2, Variant::T, Player::Dominator, &[]), 3);
        let k13 = star(3).unwrap();
        assert_eq!(len(&k13, Variant::D, Player::Staller, &[]), 2);
    }

    #[test]
    fn brute_small_values() {
        let k2 = complete(2).unwrap();
        assert_eq!(brute_length(&k2, Variant::D, Player::Dominator, VertexSet::EMPTY), Ok(1));
        let k13 = star(3).unwrap();
        assert_eq!(brute_length(&k13, Variant::D, Player::Staller, VertexSet::EMPTY), Ok(2));
        let p3 = path(3).unwrap();
        assert_eq!(
            brute_length(&p3, Variant::LL, Player::Staller, [0, 2].into_iter().collect()),
            Ok(2)
        );
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(brute_length(&g, Variant::D, Player::Dominator, VertexSet::EMPTY).is_err());
    }

    #[test]
    fn result_contract() {
        let c5 = cycle(5).unwrap();
        for v in Variant::ALL {
            let r = game_length(&c5, v, Player::Staller, VertexSet::EMPTY).unwrap();
            assert!(r.length > 0);
            assert!(!r.optimal_first.is_empty());
            assert!(r.states_visited > 0);
            let done = game_length(&c5, v, Player::Staller, c5.vertices()).unwrap();
            assert_eq!(done.length, 0);
            assert!(done.optimal_first.is_empty());
        }
    }

    #[test]
    fn optimal_lines() {
        let k2 = complete(2).unwrap();
        let line = optimal_line(&k2, Variant::LL, Player::Dominator, VertexSet::EMPTY).unwrap();
        assert_eq!(
            line,
            vec![(Player::Dominator, 0), (Player::Staller, 0), (Player::Dominator, 1)]
        );
        let p3 = path(3).unwrap();
        let line = optimal_line(&p3, Variant::D, Player::Dominator, VertexSet::EMPTY).unwrap();
        assert_eq!(line, vec![(Player::Dominator, 1)]);
    }

    #[test]
    fn cap_is_enforced() {
        let c5 = cycle(5).unwrap();
        let cfg = SolverConfig {
            max_entries: 3,
            ..SolverConfig::default()
        };
        let mut s = Solver::with_config(&c5, Variant::LL, cfg);
        assert_eq!(
            s.solve(VertexSet::EMPTY, Player::Dominator),
            Err(SolveError::StateCapExceeded { cap: 3 })
        );
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            game_length(&g, Variant::Z, Player::Dominator, VertexSet::EMPTY),
            Err(SolveError::Game(GameError::IsolatedVertex(_)))
        ));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = leafy_clique(2).unwrap();
        for v in Variant::ALL {
            for p in [Player::Dominator, Player::Staller] {
                let a = game_length(&g, v, p, VertexSet::EMPTY).unwrap();
                let b = game_length_parallel(&g, v, p, VertexSet::EMPTY, SolverConfig::default()).unwrap();
                assert_eq!(a.length, b.length);
                assert_eq!(a.optimal_first, b.optimal_first);
            }
        }
    }
}
