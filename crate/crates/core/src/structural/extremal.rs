use crate::graph::Graph;

/// Shape classes with an extremal connected forcing number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extremal {
    /// A path: `F_c = 1`.
    FcIsOne,
    /// `K_n`: `F_c = n - 1`.
    FcIsNMinusOneComplete,
    /// `K_{1,k}` with `k >= 3`: `F_c = n - 1`.
    FcIsNMinusOneStar,
    Neither,
}

/// Classifies by shape alone. `K_2` is both a path and complete and is
/// reported as a path; either way its value is 1.
pub fn classify_extremal(g: &Graph) -> Extremal {
    if g.is_path_graph() {
        Extremal::FcIsOne
    } else if g.is_complete() {
        Extremal::FcIsNMinusOneComplete
    } else if g.is_star() {
        Extremal::FcIsNMinusOneStar
    } else {
        Extremal::Neither
    }
}
