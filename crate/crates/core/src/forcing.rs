//! The forcing process: a colored vertex with exactly one uncolored neighbor
//! colors that neighbor.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// One force. `round` is the 1-based time step in which it happened.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Force {
    pub round: usize,
    pub forcer: usize,
    pub forced: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingTrace {
    pub initial: VertexSet,
    pub steps: Vec<Force>,
    pub final_set: VertexSet,
}

impl ForcingTrace {
    pub fn is_complete(&self) -> bool {
        self.final_set.len() == self.final_set.ambient()
    }

    /// One line per force: `round forcer forced`.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for f in &self.steps {
            writeln!(out, "{} {} {}", f.round, f.forcer, f.forced).unwrap();
        }
        out
    }

    /// Replays the trace on `g`, checking every force is legal at its moment
    /// and that `final_set` is exactly the initial set plus the forced vertices.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.initial)?;
        g.check_set(&self.final_set)?;
        let bad = |msg: String| Err(Error::InvalidTrace(msg));
        let mut colored = self.initial.clone();
        let mut has_forced = VertexSet::empty(g.order());
        let mut last_round = 0;
        for f in &self.steps {
            if f.forcer >= g.order() || f.forced >= g.order() {
                return bad(format!("vertex out of range in {f:?}"));
            }
            if f.round < last_round {
                return bad(format!("rounds out of order at {f:?}"));
            }
            last_round = f.round;
            if !colored.contains(f.forcer) {
                return bad(format!("forcer {} is uncolored", f.forcer));
            }
            if colored.contains(f.forced) {
                return bad(format!("vertex {} forced while already colored", f.forced));
            }
            if !has_forced.insert(f.forcer) {
                return bad(format!("vertex {} forces twice", f.forcer));
            }
            let mut uncolored = g
                .neighbors(f.forcer)
                .iter()
                .filter(|&&u| !colored.contains(u));
            if uncolored.next() != Some(&f.forced) || uncolored.next().is_some() {
                return bad(format!(
                    "{} is not the only uncolored neighbor of {}",
                    f.forced, f.forcer
                ));
            }
            colored.insert(f.forced);
        }
        if colored != self.final_set {
            return bad("final set does not match the replayed closure".into());
        }
        Ok(())
    }
}

/// Runs the forcing process to its fixed point. Within a round every force
/// available at the start of the round is applied in ascending forcer order
/// (skipping any whose target was just colored), then availability is
/// recomputed. The final set does not depend on the schedule.
pub fn forcing_closure(g: &Graph, s: &VertexSet) -> Result<ForcingTrace> {
    g.check_set(s)?;
    let n = g.order();
    let mut colored = s.clone();
    // number of uncolored neighbors per vertex
    let mut open: Vec<usize> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| !colored.contains(u))
                .count()
        })
        .collect();
    let mut steps = Vec::new();
    let mut candidates: Vec<usize> = colored.iter().filter(|&v| open[v] == 1).collect();
    let mut round = 0;
    while !candidates.is_empty() {
        round += 1;
        let mut next = Vec::new();
        for &forcer in &candidates {
            if open[forcer] != 1 {
                continue;
            }
            let forced = g
                .neighbors(forcer)
                .iter()
                .copied()
                .find(|&u| !colored.contains(u))
                .unwrap();
            colored.insert(forced);
            steps.push(Force {
                round,
                forcer,
                forced,
            });
            for &w in g.neighbors(forced) {
                open[w] -= 1;
                if open[w] == 1 && colored.contains(w) {
                    next.push(w);
                }
            }
            if open[forced] == 1 {
                next.push(forced);
            }
        }
        next.sort_unstable();
        next.dedup();
        candidates = next;
    }
    Ok(ForcingTrace {
        initial: s.clone(),
        steps,
        final_set: colored,
    })
}

/// Mask variant of the closure for graphs with at most 64 vertices.
pub fn closure_mask(neighbors: &[u64], start: u64) -> u64 {
    let mut colored = start;
    loop {
        let before = colored;
        let mut rest = colored;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let open = neighbors[v] & !colored;
            if open != 0 && open & (open - 1) == 0 {
                colored |= open;
            }
        }
        if colored == before {
            return colored;
        }
    }
}

pub fn is_forcing_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    Ok(forcing_closure(g, s)?.is_complete())
}

/// A nonempty set that induces a connected subgraph and forces `g`.
pub fn is_connected_forcing_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::Precondition(
            "connected forcing sets are nonempty".into(),
        ));
    }
    Ok(g.induces_connected(s) && is_forcing_set(g, s)?)
}

/// Splits the colored vertices of a trace into forcing chains, one per initial
/// vertex, each listed from the initial vertex along its successive forces.
pub fn forcing_chains(trace: &ForcingTrace, g: &Graph) -> Result<Vec<Vec<usize>>> {
    trace.validate(g)?;
    let mut successor = vec![None; g.order()];
    for f in &trace.steps {
        successor[f.forcer] = Some(f.forced);
    }
    let chains: Vec<Vec<usize>> = trace
        .initial
        .iter()
        .map(|start| {
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = successor[cur] {
                chain.push(next);
                cur = next;
            }
            chain
        })
        .collect();
    let covered: usize = chains.iter().map(Vec::len).sum();
    if covered != trace.final_set.len() {
        return Err(Error::InvalidTrace(
            "chains do not partition the colored vertices".into(),
        ));
    }
    Ok(chains)
}
