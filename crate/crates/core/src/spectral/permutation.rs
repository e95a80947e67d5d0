use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ONE, ZERO};

/// A bijection on `0..n`. `mapping[i]` is the position index `i` moves to.
///
/// The induced matrix `U` has `U[p(j), j] = 1`, so `U H Uᵀ` has entries
/// `H[p⁻¹(i), p⁻¹(j)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; n];
        for &m in &mapping {
            if m >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {m} out of range 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[m], true) {
                return Err(Error::InvalidPermutation(format!("image {m} repeated")));
            }
        }
        Ok(Self { mapping })
    }

    /// Builds the permutation that puts original index `order[k]` at position `k`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut mapping = vec![usize::MAX; n];
        for (pos, &orig) in order.iter().enumerate() {
            if orig >= n || mapping[orig] != usize::MAX {
                return Err(Error::InvalidPermutation(format!("bad order entry {orig}")));
            }
            mapping[orig] = pos;
        }
        Self::new(mapping)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((0..n).collect())
    }

    /// `i -> n - 1 - i`.
    pub fn reversal(n: usize) -> Result<Self> {
        Self::new((0..n).rev().collect())
    }

    /// Swaps `i` and `j`, fixes everything else.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut mapping: Vec<usize> = (0..n).collect();
        if i >= n || j >= n {
            return Err(Error::InvalidPermutation(format!(
                "swap ({i}, {j}) out of range 0..{n}"
            )));
        }
        mapping.swap(i, j);
        Self::new(mapping)
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            inv[m] = i;
        }
        Permutation { mapping: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.mapping
            .iter()
            .enumerate()
            .all(|(i, &m)| self.mapping[m] == i)
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let n = self.mapping.len();
        ComplexMatrix::from_fn(n, |r, c| if self.mapping[c] == r { ONE } else { ZERO })
            .expect("permutation matrix is finite")
    }
}

/// `U H Uᵀ` for the permutation matrix `U` of `p`, computed by reindexing.
pub fn permutation_conjugate(h: &ComplexMatrix, p: &Permutation) -> Result<ComplexMatrix> {
    if h.dim() != p.len() {
        return Err(Error::DimensionMismatch {
            op: "permutation_conjugate",
            left: h.dim(),
            right: p.len(),
        });
    }
    let inv = p.inverse();
    ComplexMatrix::from_fn(h.dim(), |i, j| h.get(inv.apply(i), inv.apply(j)))
}
