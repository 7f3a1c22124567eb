//! Enumeration reports over small graphs for questions without a known
//! answer. Nothing here is asserted; the reports list what was found.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{minimum_connected_forcing_sets, minimum_forcing_sets};
use crate::generators::all_connected_graphs_up_to_isomorphism;
use crate::graph::{compute_r_sets, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Question {
    /// Graphs with `F_c = 2`.
    FcTwo,
    /// Graphs with `F_c = 3`.
    FcThree,
    /// Graphs with `F_c = n - 2`.
    FcNMinusTwo,
    /// Graphs with `F_c = n - 3`.
    FcNMinusThree,
    /// Graphs where no minimum connected forcing set contains a minimum forcing set.
    Containment,
    /// Vertices in every minimum connected forcing set although `G - v` has two
    /// components, one of them a path.
    R2Converse,
}

impl Question {
    pub const ALL: [Question; 6] = [
        Question::FcTwo,
        Question::FcThree,
        Question::FcNMinusTwo,
        Question::FcNMinusThree,
        Question::Containment,
        Question::R2Converse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Question::FcTwo => "fc-2",
            Question::FcThree => "fc-3",
            Question::FcNMinusTwo => "fc-n-2",
            Question::FcNMinusThree => "fc-n-3",
            Question::Containment => "containment",
            Question::R2Converse => "r2-converse",
        }
    }
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Question {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Question::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown question {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub graph: Graph,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExploreReport {
    pub question: Question,
    pub max_n: usize,
    pub examined: usize,
    pub findings: Vec<Finding>,
}

/// One line per graph: `n=<n> edges=<u-v ...> <detail>`.
impl fmt::Display for ExploreReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "question = {}", self.question)?;
        writeln!(f, "max_n = {}", self.max_n)?;
        writeln!(f, "examined = {}", self.examined)?;
        writeln!(f, "found = {}", self.findings.len())?;
        for finding in &self.findings {
            let edges: Vec<String> = finding
                .graph
                .edges()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect();
            write!(f, "n={} edges={}", finding.graph.order(), edges.join(","))?;
            if finding.detail.is_empty() {
                writeln!(f)?;
            } else {
                writeln!(f, " {}", finding.detail)?;
            }
        }
        Ok(())
    }
}

const MAX_N: usize = 6;

/// Runs `question` over one representative of every connected graph on
/// `1..=max_n` vertices (`max_n <= 6`).
pub fn explore(question: Question, max_n: usize) -> Result<ExploreReport> {
    if max_n > MAX_N {
        return Err(Error::TooLarge {
            n: max_n,
            limit: MAX_N,
        });
    }
    let graphs: Vec<Graph> = (1..=max_n)
        .map(all_connected_graphs_up_to_isomorphism)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let examined = graphs.len();
    let findings: Vec<Option<Finding>> = graphs
        .into_par_iter()
        .map(|g| evaluate(question, g))
        .collect::<Result<_>>()?;
    Ok(ExploreReport {
        question,
        max_n,
        examined,
        findings: findings.into_iter().flatten().collect(),
    })
}

fn evaluate(question: Question, g: Graph) -> Result<Option<Finding>> {
    let n = g.order();
    let minimum = minimum_connected_forcing_sets(&g)?;
    let fc = minimum[0].len();
    let target = |value: Option<usize>| {
        Ok((value == Some(fc)).then(|| Finding {
            detail: format!("Fc={fc} witness={}", minimum[0]),
            graph: g.clone(),
        }))
    };
    match question {
        Question::FcTwo => target(Some(2)),
        Question::FcThree => target(Some(3)),
        Question::FcNMinusTwo => target(n.checked_sub(2)),
        Question::FcNMinusThree => target(n.checked_sub(3)),
        Question::Containment => {
            let plain = minimum_forcing_sets(&g)?;
            let contained = minimum.iter().any(|w| plain.iter().any(|s| s.is_subset(w)));
            Ok((!contained).then(|| Finding {
                detail: format!("F={} Fc={fc}", plain[0].len()),
                graph: g.clone(),
            }))
        }
        Question::R2Converse => {
            let report = compute_r_sets(&g)?;
            let mut hits = Vec::new();
            for v in report
                .articulation_points
                .difference(&report.r1.union(&report.r2))
                .iter()
            {
                let comps = g.components_after_removal(&VertexSet::from_ids(n, [v]));
                if comps.len() == 2 && minimum.iter().all(|w| w.contains(v)) {
                    let single = comps.iter().any(|c| c.len() == 1);
                    hits.push(format!("{v}{}", if single { "(singleton)" } else { "" }));
                }
            }
            Ok((!hits.is_empty()).then(|| Finding {
                detail: format!("vertices={}", hits.join(",")),
                graph: g.clone(),
            }))
        }
    }
}
