use rayon::prelude::*;

use super::eigen::eigen_hermitian;
use super::permutation::Permutation;
use crate::error::Result;
use crate::matrix::ComplexMatrix;

/// Default threshold for treating an entry as structurally zero, relative to
/// the largest entry magnitude.
pub const DEFAULT_BLOCK_TOL: f64 = 1e-12;

/// A symmetric permutation that makes a matrix block-diagonal, with the
/// sizes of the diagonal blocks in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub permutation: Permutation,
    pub block_sizes: Vec<usize>,
}

impl BlockStructure {
    /// Original indices in their permuted order.
    pub fn order(&self) -> Vec<usize> {
        self.permutation.inverse().mapping().to_vec()
    }

    /// Original indices grouped by block.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let order = self.order();
        let mut out = Vec::with_capacity(self.block_sizes.len());
        let mut start = 0;
        for &size in &self.block_sizes {
            out.push(order[start..start + size].to_vec());
            start += size;
        }
        out
    }
}

/// Connected components of the graph with an edge `(i, j)` whenever
/// `|H[i,j]|` or `|H[j,i]|` exceeds `tol * max|H|`.
///
/// Components are listed by their smallest member; members within a block
/// keep ascending original order.
pub fn block_structure(h: &ComplexMatrix, tol: f64) -> BlockStructure {
    let n = h.dim();
    let threshold = tol * h.max_abs();
    let connected =
        |i: usize, j: usize| h.get(i, j).norm() > threshold || h.get(j, i).norm() > threshold;

    let mut component = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for root in 0..n {
        if component[root] != usize::MAX {
            continue;
        }
        let id = groups.len();
        component[root] = id;
        let mut members = vec![root];
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if component[j] == usize::MAX && connected(i, j) {
                    component[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }

    let block_sizes = groups.iter().map(Vec::len).collect();
    let order: Vec<usize> = groups.into_iter().flatten().collect();
    BlockStructure {
        permutation: Permutation::from_order(&order).expect("components partition 0..n"),
        block_sizes,
    }
}

/// Full spectrum assembled from independent eigen solves of each diagonal
/// block. Blocks are solved in parallel; the result is sorted, so it does not
/// depend on scheduling.
pub fn eigenvalues_by_blocks(
    h: &ComplexMatrix,
    blocks: &BlockStructure,
    tol: f64,
) -> Result<Vec<f64>> {
    let per_block: Vec<Vec<f64>> = blocks
        .blocks()
        .par_iter()
        .map(|idx| {
            let sub = h.principal_submatrix(idx)?;
            Ok(eigen_hermitian(&sub, tol, false)?.eigenvalues)
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<f64> = per_block.into_iter().flatten().collect();
    all.sort_by(f64::total_cmp);
    Ok(all)
}
