use crate::error::SpinAlgError;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// The five standard spin matrices in the |s,m> basis, m = s..-s.
pub struct SpinMatrices {
    pub sx: DMatrix<Complex64>,
    pub sy: DMatrix<Complex64>,
    pub sz: DMatrix<Complex64>,
    pub sp: DMatrix<Complex64>,
    pub sm: DMatrix<Complex64>,
}

/// Spin matrices for spin `s` (half-integer, s >= 1/2).
///
/// S+|s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>, basis ordered m descending.
pub fn spin_matrices(s: f64) -> Result<SpinMatrices, SpinAlgError> {
    let twice = 2.0 * s;
    if s < 0.5 || (twice - twice.round()).abs() > 1e-12 {
        return Err(SpinAlgError::InvalidSpin(s));
    }
    let d = twice.round() as usize + 1;
    let m_of = |row: usize| s - row as f64; // row 0 -> m = s
    let mut sp = DMatrix::<Complex64>::zeros(d, d);
    let mut sz = DMatrix::<Complex64>::zeros(d, d);
    for row in 0..d {
        let m = m_of(row);
        sz[(row, row)] = Complex64::new(m, 0.0);
        if row > 0 {
            // S+ maps m to m+1: column index row, target row-1
            let c = (s * (s + 1.0) - m_of(row) * (m_of(row) + 1.0)).sqrt();
            sp[(row - 1, row)] = Complex64::new(c, 0.0);
        }
    }
    let sm = sp.adjoint();
    let half = Complex64::new(0.5, 0.0);
    let half_i = Complex64::new(0.0, -0.5);
    let sx = (&sp + &sm) * half;
    let sy = (&sp - &sm) * half_i;
    Ok(SpinMatrices { sx, sy, sz, sp, sm })
}
