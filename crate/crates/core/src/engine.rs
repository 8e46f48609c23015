//! Rules of the five domination games.
//!
//! All five share one legality rule: a vertex `v` may be played iff its
//! *newness* neighborhood still contains an uncovered vertex, and (for the
//! L-game) `v` has not been played before. Playing `v` adds its *coverage*
//! neighborhood to the covered set. The game ends when nothing is legal.
//!
//! | variant | newness | coverage | repeats |
//! |---------|---------|----------|---------|
//! | D       | N\[v\]  | N\[v\]   | yes     |
//! | T       | N(v)    | N(v)     | yes     |
//! | Z       | N(v)    | N\[v\]   | yes     |
//! | L       | N\[v\]  | N(v)     | no      |
//! | LL      | N\[v\]  | N(v)     | yes     |
//!
//! In D, T and Z the coverage neighborhood contains the newness one, so a
//! vertex can never be played twice; only LL actually admits repeats.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Neighborhood {
    Open,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// Domination game.
    #[serde(rename = "d")]
    D,
    /// Total domination game.
    #[serde(rename = "t")]
    T,
    #[serde(rename = "z")]
    Z,
    #[serde(rename = "l")]
    L,
    #[serde(rename = "ll")]
    LL,
}

impl Variant {
    pub const ALL: [Variant; 5] = [Variant::Z, Variant::D, Variant::T, Variant::L, Variant::LL];

    pub const fn newness(self) -> Neighborhood {
        match self {
            Variant::D | Variant::L | Variant::LL => Neighborhood::Closed,
            Variant::T | Variant::Z => Neighborhood::Open,
        }
    }

    pub const fn coverage(self) -> Neighborhood {
        match self {
            Variant::D | Variant::Z => Neighborhood::Closed,
            Variant::T | Variant::L | Variant::LL => Neighborhood::Open,
        }
    }

    pub const fn no_repeat(self) -> bool {
        matches!(self, Variant::L)
    }

    /// Inverse of the three selectors. Only five combinations are games.
    pub fn from_rules(newness: Neighborhood, coverage: Neighborhood, no_repeat: bool) -> Option<Variant> {
        use Neighborhood::*;
        match (newness, coverage, no_repeat) {
            (Closed, Closed, false) => Some(Variant::D),
            (Open, Open, false) => Some(Variant::T),
            (Open, Closed, false) => Some(Variant::Z),
            (Closed, Open, true) => Some(Variant::L),
            (Closed, Open, false) => Some(Variant::LL),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::D => "d",
            Variant::T => "t",
            Variant::Z => "z",
            Variant::L => "l",
            Variant::LL => "ll",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "d" => Ok(Variant::D),
            "t" => Ok(Variant::T),
            "z" => Ok(Variant::Z),
            "l" => Ok(Variant::L),
            "ll" => Ok(Variant::LL),
            _ => Err(format!("unknown variant {s:?} (expected d, t, z, l or ll)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    #[inline]
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }

    pub fn initial(self) -> char {
        match self {
            Player::Dominator => 'D',
            Player::Staller => 'S',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Dominator => "dominator",
            Player::Staller => "staller",
        })
    }
}

impl FromStr for Player {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "dominator" | "d" => Ok(Player::Dominator),
            "staller" | "s" => Ok(Player::Staller),
            _ => Err(format!("unknown player {s:?} (expected dominator or staller)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("graph has isolated vertices {0}")]
    IsolatedVertex(VertexSet),
    #[error("pre-dominated set {0} is not a subset of the vertex set")]
    PredominatedOutOfRange(VertexSet),
    #[error("illegal move {vertex}: {reason}")]
    IllegalMove { vertex: usize, reason: IllegalReason },
}

/// Why a vertex cannot be played.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IllegalReason {
    NoSuchVertex,
    /// L-game only.
    AlreadyPlayed,
    /// Every vertex of the newness neighborhood is covered.
    NothingNew(Neighborhood),
}

impl fmt::Display for IllegalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IllegalReason::NoSuchVertex => f.write_str("no such vertex"),
            IllegalReason::AlreadyPlayed => f.write_str("already played"),
            IllegalReason::NothingNew(Neighborhood::Open) => {
                f.write_str("its open neighborhood N(v) is already covered")
            }
            IllegalReason::NothingNew(Neighborhood::Closed) => {
                f.write_str("its closed neighborhood N[v] is already covered")
            }
        }
    }
}

/// How the forbidden set of a no-repeat game is maintained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ForbiddenMode {
    /// Played vertices plus every `u` with `N[u]` covered. Such `u` can
    /// never become legal again, so folding them in only merges memo keys.
    #[default]
    Normalized,
    /// Exactly the played vertices.
    PlayedOnly,
}

/// Position of a game in progress. `apply` returns a new value.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct GameState<'g> {
    graph: &'g Graph,
    variant: Variant,
    mode: ForbiddenMode,
    covered: VertexSet,
    forbidden: VertexSet,
    to_move: Player,
    moves_made: u32,
}

impl<'g> GameState<'g> {
    pub fn new(
        graph: &'g Graph,
        variant: Variant,
        predominated: VertexSet,
        starter: Player,
    ) -> Result<Self, GameError> {
        Self::with_mode(graph, variant, predominated, starter, ForbiddenMode::default())
    }

    pub fn with_mode(
        graph: &'g Graph,
        variant: Variant,
        predominated: VertexSet,
        starter: Player,
        mode: ForbiddenMode,
    ) -> Result<Self, GameError> {
        if graph.has_isolated() {
            return Err(GameError::IsolatedVertex(graph.isolated_vertices()));
        }
        if !predominated.is_subset(graph.vertices()) {
            return Err(GameError::PredominatedOutOfRange(predominated));
        }
        let mut s = GameState {
            graph,
            variant,
            mode,
            covered: predominated,
            forbidden: VertexSet::EMPTY,
            to_move: starter,
            moves_made: 0,
        };
        s.normalize();
        Ok(s)
    }

    fn normalize(&mut self) {
        if self.variant.no_repeat() && self.mode == ForbiddenMode::Normalized {
            for u in self.graph.vertices() - self.forbidden {
                if self.graph.closed_neighbors(u).is_subset(self.covered) {
                    self.forbidden.insert(u);
                }
            }
        }
    }

    #[inline]
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn variant(&self) -> Variant {
        self.variant
    }

    #[inline]
    pub fn covered(&self) -> VertexSet {
        self.covered
    }

    #[inline]
    pub fn forbidden(&self) -> VertexSet {
        self.forbidden
    }

    #[inline]
    pub fn to_move(&self) -> Player {
        self.to_move
    }

    #[inline]
    pub fn moves_made(&self) -> u32 {
        self.moves_made
    }

    #[inline]
    fn newness_of(&self, v: usize) -> VertexSet {
        match self.variant.newness() {
            Neighborhood::Open => self.graph.neighbors(v),
            Neighborhood::Closed => self.graph.closed_neighbors(v),
        }
    }

    #[inline]
    fn coverage_of(&self, v: usize) -> VertexSet {
        match self.variant.coverage() {
            Neighborhood::Open => self.graph.neighbors(v),
            Neighborhood::Closed => self.graph.closed_neighbors(v),
        }
    }

    /// `None` if `v` is legal.
    pub fn illegal_reason(&self, v: usize) -> Option<IllegalReason> {
        if v >= self.graph.n() {
            return Some(IllegalReason::NoSuchVertex);
        }
        if (self.newness_of(v) - self.covered).is_empty() {
            return Some(IllegalReason::NothingNew(self.variant.newness()));
        }
        if self.forbidden.contains(v) {
            return Some(IllegalReason::AlreadyPlayed);
        }
        None
    }

    #[inline]
    pub fn is_legal(&self, v: usize) -> bool {
        self.illegal_reason(v).is_none()
    }

    pub fn legal_moves(&self) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in self.graph.vertices() - self.forbidden {
            if !(self.newness_of(v) - self.covered).is_empty() {
                out.insert(v);
            }
        }
        out
    }

    /// True if playing the legal vertex `v` would leave coverage and the
    /// forbidden set unchanged. Only possible in the LL-game: `v` itself is
    /// uncovered but all of `N(v)` already is, so `v` stays playable.
    #[inline]
    pub fn is_null_move(&self, v: usize) -> bool {
        !self.variant.no_repeat() && self.coverage_of(v).is_subset(self.covered)
    }

    pub fn is_terminal(&self) -> bool {
        self.legal_moves().is_empty()
    }

    pub fn apply(&self, v: usize) -> Result<GameState<'g>, GameError> {
        if let Some(reason) = self.illegal_reason(v) {
            return Err(GameError::IllegalMove { vertex: v, reason });
        }
        Ok(self.apply_unchecked(v))
    }

    /// `apply` for a vertex already known to be legal.
    #[inline]
    pub(crate) fn apply_unchecked(&self, v: usize) -> GameState<'g> {
        let mut next = *self;
        next.covered |= self.coverage_of(v);
        if self.variant.no_repeat() {
            next.forbidden.insert(v);
            next.normalize();
        }
        next.to_move = self.to_move.other();
        next.moves_made += 1;
        next
    }
}

impl fmt::Debug for GameState<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GameState")
            .field("variant", &self.variant)
            .field("covered", &self.covered)
            .field("forbidden", &self.forbidden)
            .field("to_move", &self.to_move)
            .field("moves_made", &self.moves_made)
            .finish()
    }
}
