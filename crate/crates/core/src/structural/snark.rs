use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// The connected forcing set `{C_1, ..., C_k, A_1, D_1}` of the flower snark
/// `J_{4k}` in the labeling of [`crate::generators::flower_snark`], of size
/// `k + 2`.
pub fn flower_snark_upper_set(k: usize) -> Result<VertexSet> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "flower snarks need an odd k >= 3, got {k}"
        )));
    }
    let c = (1..=k).map(|j| 2 * k + j - 1);
    let a1 = 0;
    let d1 = 3 * k;
    Ok(VertexSet::from_ids(4 * k, c.chain([a1, d1])))
}
