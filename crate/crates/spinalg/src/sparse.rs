use crate::error::SpinAlgError;
use crate::hilbert::HilbertSpace;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use std::collections::BTreeMap;

const HERMITICITY_TOL: f64 = 1e-13;

/// Complex sparse operator on a labeled tensor-product space.
///
/// Entries are kept in a sorted map keyed by (row, col) during assembly and
/// compressed to row-major form for matvec. Immutable once built; all
/// combinators return new operators.
#[derive(Debug, Clone)]
pub struct SparseOperator {
    space: HilbertSpace,
    entries: BTreeMap<(usize, usize), Complex64>,
    hermitian: bool,
}

impl SparseOperator {
    pub fn zero(space: HilbertSpace) -> Self {
        SparseOperator {
            space,
            entries: BTreeMap::new(),
            hermitian: true,
        }
    }

    pub fn identity(space: HilbertSpace) -> Self {
        let mut entries = BTreeMap::new();
        for i in 0..space.dim() {
            entries.insert((i, i), Complex64::new(1.0, 0.0));
        }
        SparseOperator {
            space,
            entries,
            hermitian: true,
        }
    }

    pub fn from_entries(
        space: HilbertSpace,
        it: impl IntoIterator<Item = (usize, usize, Complex64)>,
    ) -> Self {
        let mut entries = BTreeMap::new();
        for (r, c, v) in it {
            debug_assert!(r < space.dim() && c < space.dim());
            let e = entries.entry((r, c)).or_insert(Complex64::new(0.0, 0.0));
            *e += v;
        }
        entries.retain(|_, v| v.norm() > 0.0);
        let mut op = SparseOperator {
            space,
            entries,
            hermitian: false,
        };
        op.hermitian = op.hermiticity_defect() < HERMITICITY_TOL;
        op
    }

    pub fn space(&self) -> &HilbertSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        *self.entries.get(&(r, c)).unwrap_or(&Complex64::new(0.0, 0.0))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for (&(r, c), &v) in &self.entries {
            let tv = self.entry(c, r);
            worst = worst.max((v - tv.conj()).norm());
        }
        worst
    }

    /// Re-checks hermiticity and sets the flag; panics on gross violation in
    /// debug builds so assembly bugs surface early.
    pub fn into_hermitian(mut self) -> Self {
        let defect = self.hermiticity_defect();
        debug_assert!(defect < 1e-10, "hermiticity defect {defect:e}");
        self.hermitian = defect < HERMITICITY_TOL;
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.space == other.space, "operators on different spaces");
        let mut entries = self.entries.clone();
        for (&k, &v) in &other.entries {
            let e = entries.entry(k).or_insert(Complex64::new(0.0, 0.0));
            *e += v;
        }
        entries.retain(|_, v| v.norm() > 0.0);
        SparseOperator {
            space: self.space.clone(),
            entries,
            hermitian: self.hermitian && other.hermitian,
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(&k, &v)| (k, v * c))
            .collect::<BTreeMap<_, _>>();
        SparseOperator {
            space: self.space.clone(),
            entries,
            hermitian: self.hermitian && c.im == 0.0,
        }
    }

    pub fn adjoint(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(&(r, c), &v)| ((c, r), v.conj()))
            .collect::<BTreeMap<_, _>>();
        SparseOperator {
            space: self.space.clone(),
            entries,
            hermitian: self.hermitian,
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert!(self.space == other.space, "operators on different spaces");
        // row-major view of other
        let mut rows: BTreeMap<usize, Vec<(usize, Complex64)>> = BTreeMap::new();
        for (&(r, c), &v) in &other.entries {
            rows.entry(r).or_default().push((c, v));
        }
        let mut out: BTreeMap<(usize, usize), Complex64> = BTreeMap::new();
        for (&(r, k), &a) in &self.entries {
            if let Some(row) = rows.get(&k) {
                for &(c, b) in row {
                    let e = out.entry((r, c)).or_insert(Complex64::new(0.0, 0.0));
                    *e += a * b;
                }
            }
        }
        out.retain(|_, v| v.norm() > 1e-300);
        SparseOperator {
            space: self.space.clone(),
            entries: out,
            hermitian: false,
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        let ab = self.matmul(other);
        let ba = other.matmul(self);
        ab.add(&ba.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn matvec(&self, v: &DVector<Complex64>) -> DVector<Complex64> {
        let mut out = DVector::<Complex64>::zeros(self.dim());
        for (&(r, c), &a) in &self.entries {
            out[r] += a * v[c];
        }
        out
    }

    pub fn expectation(&self, v: &DVector<Complex64>) -> Complex64 {
        let hv = self.matvec(v);
        v.dotc(&hv)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.values().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_offdiag(&self) -> f64 {
        self.entries
            .iter()
            .filter(|(&(r, c), _)| r != c)
            .map(|(_, v)| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.entry(i, i)).sum()
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let d = self.dim();
        let mut m = DMatrix::<Complex64>::zeros(d, d);
        for (&(r, c), &v) in &self.entries {
            m[(r, c)] = v;
        }
        m
    }
}

/// Embed a dense local operator at `site`, identity elsewhere.
pub fn embed(
    op: &DMatrix<Complex64>,
    site: usize,
    space: &HilbertSpace,
) -> Result<SparseOperator, SpinAlgError> {
    let d_local = space.site(site).dim;
    if op.nrows() != d_local || op.ncols() != d_local {
        return Err(SpinAlgError::DimensionMismatch {
            site,
            got: op.nrows(),
            want: d_local,
        });
    }
    let mut entries = Vec::new();
    for basis in 0..space.dim() {
        let l = space.local_index(basis, site);
        for lp in 0..d_local {
            let v = op[(lp, l)];
            if v.norm() > 0.0 {
                entries.push((space.with_local_index(basis, site, lp), basis, v));
            }
        }
    }
    Ok(SparseOperator::from_entries(space.clone(), entries))
}

/// Embed a dense two-site operator given in kron(site_i, site_j) layout.
pub fn embed_pair(
    op: &DMatrix<Complex64>,
    i: usize,
    j: usize,
    space: &HilbertSpace,
) -> Result<SparseOperator, SpinAlgError> {
    if i == j {
        return Err(SpinAlgError::SameSiteBond(i));
    }
    let di = space.site(i).dim;
    let dj = space.site(j).dim;
    if op.nrows() != di * dj || op.ncols() != di * dj {
        return Err(SpinAlgError::ShapeMismatch(format!(
            "two-site operator is {}x{}, want {}",
            op.nrows(),
            op.ncols(),
            di * dj
        )));
    }
    let mut entries = Vec::new();
    for basis in 0..space.dim() {
        let li = space.local_index(basis, i);
        let lj = space.local_index(basis, j);
        let col = li * dj + lj;
        for lip in 0..di {
            for ljp in 0..dj {
                let v = op[(lip * dj + ljp, col)];
                if v.norm() > 0.0 {
                    let mid = space.with_local_index(basis, i, lip);
                    entries.push((space.with_local_index(mid, j, ljp), basis, v));
                }
            }
        }
    }
    Ok(SparseOperator::from_entries(space.clone(), entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::spin_matrices;

    #[test]
    fn embed_identity_is_identity() {
        let space = HilbertSpace::uniform(3, 0.5).unwrap();
        let id2 = DMatrix::<Complex64>::identity(2, 2);
        for site in 0..3 {
            let op = embed(&id2, site, &space).unwrap();
            let want = SparseOperator::identity(space.clone());
            let diff = op.add(&want.scale(Complex64::new(-1.0, 0.0)));
            assert!(diff.max_abs() < 1e-15);
        }
    }

    #[test]
    fn embed_sz_site0_two_halves() {
        let space = HilbertSpace::uniform(2, 0.5).unwrap();
        let m = spin_matrices(0.5).unwrap();
        let op = embed(&m.sz, 0, &space).unwrap();
        let want = [0.5, 0.5, -0.5, -0.5];
        for (k, w) in want.iter().enumerate() {
            assert!((op.entry(k, k) - Complex64::new(*w, 0.0)).norm() < 1e-15);
        }
        assert!(op.max_abs_offdiag() < 1e-15);
    }

    #[test]
    fn disjoint_supports_commute() {
        let space = HilbertSpace::uniform(2, 0.5).unwrap();
        let m = spin_matrices(0.5).unwrap();
        let a = embed(&m.sx, 0, &space).unwrap();
        let b = embed(&m.sy, 1, &space).unwrap();
        assert!(a.commutator(&b).max_abs() < 1e-15);
    }

    #[test]
    fn embed_dimension_mismatch() {
        let space = HilbertSpace::uniform(2, 1.0).unwrap();
        let id2 = DMatrix::<Complex64>::identity(2, 2);
        assert!(embed(&id2, 0, &space).is_err());
    }

    #[test]
    fn embed_pair_matches_embed_product() {
        let space = HilbertSpace::uniform(3, 0.5).unwrap();
        let m = spin_matrices(0.5).unwrap();
        let two = m.sx.kronecker(&m.sy);
        let via_pair = embed_pair(&two, 0, 2, &space).unwrap();
        let via_prod = embed(&m.sx, 0, &space)
            .unwrap()
            .matmul(&embed(&m.sy, 2, &space).unwrap());
        let diff = via_pair.add(&via_prod.scale(Complex64::new(-1.0, 0.0)));
        assert!(diff.max_abs() < 1e-15);
    }
}
