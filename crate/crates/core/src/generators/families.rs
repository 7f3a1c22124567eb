use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Hypercube,
    Torus,
    FlowerSnark,
    PendantPath,
    PendantCycle,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::Hypercube,
        Family::Torus,
        Family::FlowerSnark,
        Family::PendantPath,
        Family::PendantCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Hypercube => "hypercube",
            Family::Torus => "torus",
            Family::FlowerSnark => "flower_snark",
            Family::PendantPath => "pendant_path",
            Family::PendantCycle => "pendant_cycle",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Torus => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Family(format!("unknown family {s:?}")))
    }
}

/// A family name with its parameters, e.g. `torus [3, 4]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self> {
        if params.len() != family.arity() {
            return Err(Error::Family(format!(
                "{family} takes {} parameter(s), got {}",
                family.arity(),
                params.len()
            )));
        }
        Ok(Self { family, params })
    }

    pub fn parse(name: &str, params: &[&str]) -> Result<Self> {
        let family: Family = name.parse()?;
        let params = params
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|e| Error::Family(format!("bad parameter {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(family, params)
    }
}

/// Builds the graph named by `spec`.
pub fn make(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.params;
    match spec.family {
        Family::Path => path(p[0]),
        Family::Cycle => cycle(p[0]),
        Family::Complete => complete(p[0]),
        Family::Star => star(p[0]),
        Family::Hypercube => hypercube(p[0]),
        Family::Torus => torus(p[0], p[1]),
        Family::FlowerSnark => flower_snark(p[0]),
        Family::PendantPath => pendant_path(p[0]),
        Family::PendantCycle => pendant_cycle(p[0]),
    }
}

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Family(msg()))
    }
}

/// `P_n` on `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, || "path needs n >= 1".into())?;
    Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

/// `C_n` on `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || "cycle needs n >= 3".into())?;
    Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, || "complete graph needs n >= 1".into())?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges)
}

/// The star of order `n`: center 0 joined to leaves `1..n`.
pub fn star(n: usize) -> Result<Graph> {
    need(n >= 2, || "star needs order n >= 2".into())?;
    Graph::new(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>())
}

/// `Q_d`: vertices are `d`-bit words, adjacent when they differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    need((1..=20).contains(&d), || {
        "hypercube needs 1 <= d <= 20".into()
    })?;
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ 1 << b)))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::new(n, &edges)
}

/// `C_n × C_m` with `(i, j) ↦ i·m + j` and wraparound in both coordinates.
pub fn torus(n: usize, m: usize) -> Result<Graph> {
    need(3 <= n && n <= m, || {
        format!("torus needs 3 <= n <= m, got {n} x {m}")
    })?;
    let id = |i: usize, j: usize| i * m + j;
    let mut edges = Vec::with_capacity(2 * n * m);
    for i in 0..n {
        for j in 0..m {
            edges.push((id(i, j), id((i + 1) % n, j)));
            edges.push((id(i, j), id(i, (j + 1) % m)));
        }
    }
    Graph::new(n * m, &edges)
}

/// Flower snark `J_{4k}` for odd `k >= 3`. For `j = 1..=k`: `A_j = j-1`,
/// `B_j = k+j-1`, `C_j = 2k+j-1`, `D_j = 3k+j-1`. Each `A_j` is joined to
/// `B_j, C_j, D_j`; the `B_j` form a `k`-cycle; `C_1 .. C_k D_1 .. D_k` form a
/// `2k`-cycle.
pub fn flower_snark(k: usize) -> Result<Graph> {
    need(k >= 3 && k % 2 == 1, || {
        format!("flower snark needs odd k >= 3, got {k}")
    })?;
    let (a, b, c, d) = (
        |j: usize| j,
        |j: usize| k + j,
        |j: usize| 2 * k + j,
        |j: usize| 3 * k + j,
    );
    let mut edges = Vec::with_capacity(6 * k);
    for j in 0..k {
        edges.extend([(a(j), b(j)), (a(j), c(j)), (a(j), d(j))]);
        edges.push((b(j), b((j + 1) % k)));
    }
    // 2k-cycle C_1 .. C_k D_1 .. D_k
    let outer: Vec<usize> = (0..k).map(c).chain((0..k).map(d)).collect();
    for i in 0..2 * k {
        edges.push((outer[i], outer[(i + 1) % (2 * k)]));
    }
    Graph::new(4 * k, &edges)
}

/// `G_k`: the path `0 - ... - (k-1)` with pendants `k, k+1` on vertex 0 and
/// `k+2, k+3` on vertex `k-1`.
pub fn pendant_path(k: usize) -> Result<Graph> {
    need(k >= 2, || "pendant_path needs k >= 2".into())?;
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges.extend([(0, k), (0, k + 1), (k - 1, k + 2), (k - 1, k + 3)]);
    Graph::new(k + 4, &edges)
}

/// `H_k`: the cycle `C_k` (even `k >= 4`) with one pendant on each endpoint of
/// the opposite edges `(0, 1)` and `(k/2, k/2 + 1)`; pendants `k, k+1, k+2,
/// k+3` hang from `0, 1, k/2, k/2 + 1`.
pub fn pendant_cycle(k: usize) -> Result<Graph> {
    need(k >= 4 && k.is_multiple_of(2), || {
        format!("pendant_cycle needs even k >= 4, got {k}")
    })?;
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let h = k / 2;
    edges.extend([(0, k), (1, k + 1), (h, k + 2), (h + 1, k + 3)]);
    Graph::new(k + 4, &edges)
}
