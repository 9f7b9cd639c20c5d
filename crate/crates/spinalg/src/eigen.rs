use crate::error::SpinAlgError;
use crate::sparse::SparseOperator;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Eigensolver result: ascending eigenvalues with matching orthonormal
/// eigenvectors, plus the tolerance used to group degenerate blocks.
#[derive(Debug, Clone)]
pub struct EigenResult {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<DVector<Complex64>>,
    pub degeneracy_tol: f64,
}

impl EigenResult {
    /// Indices of the lowest degenerate block (relative gap < degeneracy_tol).
    pub fn ground_block(&self) -> std::ops::Range<usize> {
        if self.eigenvalues.is_empty() {
            return 0..0;
        }
        let e0 = self.eigenvalues[0];
        let scale = self.eigenvalues.last().unwrap().abs().max(e0.abs()).max(1.0);
        let mut end = 1;
        while end < self.eigenvalues.len() && (self.eigenvalues[end] - e0).abs() < self.degeneracy_tol * scale {
            end += 1;
        }
        0..end
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Lowest(usize),
    Full,
}

const DENSE_LIMIT: usize = 3000;

/// Hermitian eigensolve.
///
/// `k = None` means the full spectrum. Dense solve below DENSE_LIMIT,
/// Lanczos with full reorthogonalization above. Eigenvector phases are fixed
/// so the first component above 1e-8 in magnitude is real positive.
pub fn eigensolve(
    op: &SparseOperator,
    k: Option<usize>,
    degeneracy_tol: f64,
) -> Result<EigenResult, SpinAlgError> {
    if !op.is_hermitian() {
        return Err(SpinAlgError::NotHermitian(op.hermiticity_defect()));
    }
    let dim = op.dim();
    let k_eff = k.unwrap_or(dim);
    if k_eff > dim {
        return Err(SpinAlgError::TooManyEigenpairs { k: k_eff, dim });
    }
    let mut result = if dim <= DENSE_LIMIT || k_eff * 4 > dim {
        dense_solve(op, k_eff, degeneracy_tol)
    } else {
        lanczos_solve(op, k_eff, degeneracy_tol)?
    };
    fix_phases(&mut result.eigenvectors);
    Ok(result)
}

fn dense_solve(op: &SparseOperator, k: usize, degeneracy_tol: f64) -> EigenResult {
    let m = op.to_dense();
    let se = m.symmetric_eigen();
    let mut order: Vec<usize> = (0..op.dim()).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().take(k).map(|&i| se.eigenvalues[i]).collect();
    let eigenvectors: Vec<DVector<Complex64>> = order
        .iter()
        .take(k)
        .map(|&i| se.eigenvectors.column(i).into_owned())
        .collect();
    EigenResult {
        eigenvalues,
        eigenvectors,
        degeneracy_tol,
    }
}

/// Lanczos with full reorthogonalization; deterministic start vector.
fn lanczos_solve(
    op: &SparseOperator,
    k: usize,
    degeneracy_tol: f64,
) -> Result<EigenResult, SpinAlgError> {
    let dim = op.dim();
    let max_iter = (30 * k + 300).min(dim);
    // deterministic pseudo-random start
    let mut v0 = DVector::<Complex64>::zeros(dim);
    let mut state = 0x9e3779b97f4a7c15u64;
    for i in 0..dim {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let x = ((state >> 11) as f64) / ((1u64 << 53) as f64) - 0.5;
        v0[i] = Complex64::new(x, 0.0);
    }
    v0 /= Complex64::new(v0.norm(), 0.0);

    let mut basis: Vec<DVector<Complex64>> = vec![v0];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();

    for j in 0..max_iter {
        let mut w = op.matvec(&basis[j]);
        let alpha = basis[j].dotc(&w).re;
        alphas.push(alpha);
        // full reorthogonalization, twice for stability
        for _ in 0..2 {
            for b in &basis {
                let c = b.dotc(&w);
                w -= b * c;
            }
        }
        let beta = w.norm();
        if beta < 1e-13 {
            break;
        }
        betas.push(beta);
        basis.push(w / Complex64::new(beta, 0.0));
    }

    let m = alphas.len();
    if m < k {
        return Err(SpinAlgError::NoConvergence(max_iter));
    }
    // tridiagonal dense solve
    let mut t = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        t[(i, i)] = alphas[i];
        if i + 1 < m {
            t[(i, i + 1)] = betas[i];
            t[(i + 1, i)] = betas[i];
        }
    }
    let se = t.symmetric_eigen();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].partial_cmp(&se.eigenvalues[b]).unwrap());

    let mut eigenvalues = Vec::with_capacity(k);
    let mut eigenvectors = Vec::with_capacity(k);
    for &i in order.iter().take(k) {
        eigenvalues.push(se.eigenvalues[i]);
        let mut v = DVector::<Complex64>::zeros(dim);
        for (row, b) in basis.iter().take(m).enumerate() {
            v += b * Complex64::new(se.eigenvectors[(row, i)], 0.0);
        }
        v /= Complex64::new(v.norm(), 0.0);
        eigenvectors.push(v);
    }
    // residual check: Lanczos must meet the contract or we fail loudly
    let scale = op.max_abs().max(1.0);
    for (e, v) in eigenvalues.iter().zip(&eigenvectors) {
        let r = (op.matvec(v) - v * Complex64::new(*e, 0.0)).norm();
        if r > 1e-9 * scale * (op.dim() as f64).sqrt() {
            return Err(SpinAlgError::NoConvergence(max_iter));
        }
    }
    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
        degeneracy_tol,
    })
}

fn fix_phases(vs: &mut [DVector<Complex64>]) {
    for v in vs {
        if let Some(first) = v.iter().find(|z| z.norm() > 1e-8) {
            let phase = first / first.norm();
            let ph = phase.conj();
            for z in v.iter_mut() {
                *z *= ph;
            }
        }
    }
}
