use super::matrix::{ComplexMatrix, ZERO};
use super::LinalgError;

/// Traces out every subsystem not listed in `keep`.
///
/// `dims` lists the local dimensions with the first entry most significant.
/// Kept subsystems appear in their original relative order regardless of the
/// order of `keep`.
pub fn partial_trace(
    rho: &ComplexMatrix,
    dims: &[usize],
    keep: &[usize],
) -> Result<ComplexMatrix, LinalgError> {
    let total: usize = dims.iter().product();
    if dims.is_empty() || dims.contains(&0) || total != rho.dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: rho.dim(),
            actual: total,
        });
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.is_empty() || kept.len() != keep.len() || kept.iter().any(|&k| k >= dims.len()) {
        return Err(LinalgError::InvalidSubsystems {
            keep: keep.to_vec(),
            n_subsystems: dims.len(),
        });
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !kept.contains(i)).collect();

    // Place value of each subsystem inside the full index.
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let kept_dims: Vec<usize> = kept.iter().map(|&k| dims[k]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&k| dims[k]).collect();
    let out_dim: usize = kept_dims.iter().product();
    let env_dim: usize = traced_dims.iter().product();

    let embed = |sub: &[usize], positions: &[usize], mut value: usize| -> usize {
        let mut offset = 0;
        for idx in (0..positions.len()).rev() {
            offset += (value % sub[idx]) * strides[positions[idx]];
            value /= sub[idx];
        }
        offset
    };
    let kept_offsets: Vec<usize> = (0..out_dim).map(|r| embed(&kept_dims, &kept, r)).collect();
    let env_offsets: Vec<usize> = (0..env_dim)
        .map(|e| embed(&traced_dims, &traced, e))
        .collect();

    let mut out = ComplexMatrix::zeros(out_dim);
    for (r, &row_base) in kept_offsets.iter().enumerate() {
        for (c, &col_base) in kept_offsets.iter().enumerate() {
            let mut acc = ZERO;
            for &e in &env_offsets {
                acc += rho[(row_base + e, col_base + e)];
            }
            out[(r, c)] = acc;
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Transpose of one tensor factor of a bipartite operator.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    dims: (usize, usize),
    subsystem: Subsystem,
) -> Result<ComplexMatrix, LinalgError> {
    let (da, db) = dims;
    if da * db != rho.dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: rho.dim(),
            actual: da * db,
        });
    }
    let mut out = ComplexMatrix::zeros(rho.dim());
    for i in 0..da {
        for j in 0..db {
            for k in 0..da {
                for l in 0..db {
                    let (src_row, src_col) = match subsystem {
                        Subsystem::First => (k * db + j, i * db + l),
                        Subsystem::Second => (i * db + l, k * db + j),
                    };
                    out[(i * db + j, k * db + l)] = rho[(src_row, src_col)];
                }
            }
        }
    }
    Ok(out)
}
