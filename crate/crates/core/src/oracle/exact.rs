//! Exact integer rank via fraction-free (Bareiss) elimination.
//!
//! Multiplicities reported here never come from counting numeric eigenvalues:
//! the rank of `L - lambda*I` is computed over arbitrary-precision integers,
//! so `n - rank` is the exact eigenspace dimension. Intermediate entries are
//! minors of the input and can grow past any fixed word size, hence big
//! integers throughout.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LaplacianMatrix;

/// Exact multiplicity of the integer `lambda` in the Laplacian spectrum,
/// computed as `n - rank(L - lambda*I)`.
pub fn integer_multiplicity(l: &LaplacianMatrix, lambda: i64) -> usize {
    assert!(lambda >= 0, "Laplacian eigenvalues are non-negative");
    let n = l.n();
    let mut mat: Vec<Vec<BigInt>> = l
        .rows()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &v)| BigInt::from(if i == j { v - lambda } else { v }))
                .collect()
        })
        .collect();
    n - bareiss_rank(&mut mat)
}

/// Rank of an integer matrix by one-step fraction-free elimination.
/// Each update divides by the previous pivot; Sylvester's identity makes the
/// division exact, including across skipped (rank-deficient) columns.
pub(crate) fn bareiss_rank(mat: &mut [Vec<BigInt>]) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;

    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Smallest-magnitude pivot keeps intermediate minors compact.
        let pivot_row = (rank..rows)
            .filter(|&r| !mat[r][col].is_zero())
            .min_by(|&a, &b| mat[a][col].abs().cmp(&mat[b][col].abs()));
        let Some(pivot_row) = pivot_row else {
            continue;
        };
        mat.swap(rank, pivot_row);

        let (pivot_slice, below) = mat.split_at_mut(rank + 1);
        let pivot_row_vals = &pivot_slice[rank];
        let pivot = pivot_row_vals[col].clone();
        for row in below.iter_mut() {
            // Rows with a zero in the pivot column still need the
            // (pivot * entry) / prev rescale to stay on the minor lattice.
            let factor = row[col].clone();
            for j in (col + 1)..cols {
                let num = &pivot * &row[j] - &factor * &pivot_row_vals[j];
                debug_assert!((&num % &prev).is_zero(), "fraction-free division must be exact");
                row[j] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
