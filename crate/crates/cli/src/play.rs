//! Terminal game loop: a human against the solver, or the solver alone.

use std::io::{BufRead, Write};

use domgame::{GameError, Graph, Player, Solver, Variant, VertexSet};

use crate::CliError;

/// Plays one game and returns its length. `human` is the side read from
/// `input`; `None` lets the solver play both sides.
pub fn run<R: BufRead, W: Write>(
    g: &Graph,
    variant: Variant,
    starter: Player,
    predominated: VertexSet,
    human: Option<Player>,
    mut input: R,
    mut out: W,
) -> Result<u32, CliError> {
    let mut solver = Solver::new(g, variant);
    let mut state = solver.start(predominated, starter)?;
    let optimal = solver.value(&state)?;
    writeln!(out, "{variant}-game on {} vertices, {starter} starts", g.n())?;
    let mut line = String::new();
    while !state.is_terminal() {
        let who = state.to_move();
        if Some(who) == human {
            write!(out, "covered {}; your move ({who}), legal {}: ", state.covered(), state.legal_moves())?;
            out.flush()?;
            line.clear();
            if input.read_line(&mut line)? == 0 {
                writeln!(out)?;
                return Err(CliError::InputEnded);
            }
            let Ok(v) = line.trim().parse::<usize>() else {
                writeln!(out, "not a vertex index: {:?}", line.trim())?;
                continue;
            };
            match state.apply(v) {
                Ok(next) => state = next,
                Err(GameError::IllegalMove { reason, .. }) => {
                    writeln!(out, "illegal move {v}: {reason}")?;
                }
                Err(e) => return Err(e.into()),
            }
        } else {
            let v = solver.best_move(&state)?.expect("game not over");
            writeln!(out, "{who} plays {v}")?;
            state = state.apply(v)?;
        }
    }
    let length = state.moves_made();
    writeln!(out, "game over after {length} moves; optimal play from the start takes {optimal}")?;
    Ok(length)
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        CliError::Solve(e.into())
    }
}
