use crate::error::SpinAlgError;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Unique PSD square root of a hermitian PSD matrix, with eigenvalues in
/// (-1e-13, 0) clamped to zero before the root.
pub fn matrix_abs_sqrt(h: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let se = h.clone().symmetric_eigen();
    let n = h.nrows();
    let mut out = DMatrix::<Complex64>::zeros(n, n);
    for k in 0..n {
        let ev = se.eigenvalues[k];
        let clamped = if ev < 0.0 {
            debug_assert!(ev > -1e-10, "matrix not PSD: eigenvalue {ev}");
            0.0
        } else {
            ev
        };
        let root = clamped.sqrt();
        let col = se.eigenvectors.column(k);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += col[i] * col[j].conj() * Complex64::new(root, 0.0);
            }
        }
    }
    out
}

/// Residual of the trace inequality
/// |tr c† M c N†| <= (tr c_L M c_L M† + tr c_R N c_R N†)/2
/// with c_L = sqrt(c c†), c_R = sqrt(c† c); supports rectangular c (m x n),
/// M m x m, N n x n. Nonnegative up to roundoff for all inputs.
pub fn kls_trace_inequality_residual(
    c: &DMatrix<Complex64>,
    m: &DMatrix<Complex64>,
    n: &DMatrix<Complex64>,
) -> Result<f64, SpinAlgError> {
    let (rows, cols) = c.shape();
    if m.nrows() != rows || m.ncols() != rows {
        return Err(SpinAlgError::ShapeMismatch(format!(
            "M is {}x{}, want {rows}x{rows}",
            m.nrows(),
            m.ncols()
        )));
    }
    if n.nrows() != cols || n.ncols() != cols {
        return Err(SpinAlgError::ShapeMismatch(format!(
            "N is {}x{}, want {cols}x{cols}",
            n.nrows(),
            n.ncols()
        )));
    }
    let c_l = matrix_abs_sqrt(&(c * c.adjoint()));
    let c_r = matrix_abs_sqrt(&(c.adjoint() * c));
    let lhs = (c.adjoint() * m * c * n.adjoint()).trace().norm();
    let t1 = (&c_l * m * &c_l * m.adjoint()).trace().re;
    let t2 = (&c_r * n * &c_r * n.adjoint()).trace().re;
    Ok(0.5 * (t1 + t2) - lhs)
}
