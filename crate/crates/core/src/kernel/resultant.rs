//! Sylvester resultants of multivariate polynomials.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::linalg::bareiss_determinant;
use super::{KernelError, MultiPoly};

/// The resultant of `p` and `q` with respect to `var`: the determinant of
/// their Sylvester matrix, computed fraction-free. The result keeps the
/// variable list of the inputs but no longer involves `var`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly, KernelError> {
    let idx = p
        .var_index(var)
        .ok_or_else(|| KernelError::UnknownVariable(var.to_string()))?;
    let dp = p.degree_in(idx) as usize;
    let dq = q.degree_in(idx) as usize;
    if dp == 0 || dq == 0 {
        return Err(KernelError::DegenerateInput(var.to_string()));
    }
    let pc = p.coefficients_in(idx);
    let qc = q.coefficients_in(idx);
    let n = dp + dq;
    let zero = MultiPoly::zero(p.vars());
    let mut rows: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    for i in 0..dq {
        let mut row = alloc::vec![zero.clone(); n];
        for (k, c) in pc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..dp {
        let mut row = alloc::vec![zero.clone(); n];
        for (k, c) in qc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(bareiss_determinant(rows))
}
