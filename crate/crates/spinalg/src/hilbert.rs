use crate::error::SpinAlgError;
use std::sync::Arc;

/// One lattice site carrying a spin-s degree of freedom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinSite {
    /// Intrinsic spin, a half-integer >= 1/2.
    pub spin: f64,
    /// Local dimension 2s+1.
    pub dim: usize,
}

impl SpinSite {
    pub fn new(spin: f64) -> Result<Self, SpinAlgError> {
        let twice = 2.0 * spin;
        if spin < 0.5 || (twice - twice.round()).abs() > 1e-12 {
            return Err(SpinAlgError::InvalidSpin(spin));
        }
        Ok(SpinSite {
            spin,
            dim: (twice.round() as usize) + 1,
        })
    }
}

/// Ordered tensor product of spin sites.
///
/// Basis convention: site 0 is the most significant index; within a site the
/// magnetic quantum number m runs from +s down to -s. The global basis index
/// of per-site indices (l_0, ..., l_{n-1}) is `sum_i l_i * prod_{k>i} d_k`.
#[derive(Debug, Clone)]
pub struct HilbertSpace {
    sites: Arc<Vec<SpinSite>>,
    dim: usize,
    /// Stride of each site in the flattened index.
    strides: Arc<Vec<usize>>,
}

impl PartialEq for HilbertSpace {
    fn eq(&self, other: &Self) -> bool {
        self.sites == other.sites
    }
}

impl HilbertSpace {
    pub fn new(sites: Vec<SpinSite>) -> Self {
        let mut strides = vec![1usize; sites.len()];
        for i in (0..sites.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * sites[i + 1].dim;
        }
        let dim = sites.iter().map(|s| s.dim).product::<usize>().max(1);
        HilbertSpace {
            sites: Arc::new(sites),
            dim,
            strides: Arc::new(strides),
        }
    }

    /// n identical spin-s sites.
    pub fn uniform(n: usize, spin: f64) -> Result<Self, SpinAlgError> {
        let site = SpinSite::new(spin)?;
        Ok(Self::new(vec![site; n]))
    }

    pub fn n_sites(&self) -> usize {
        self.sites.len()
    }

    pub fn site(&self, i: usize) -> SpinSite {
        self.sites[i]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn stride(&self, site: usize) -> usize {
        self.strides[site]
    }

    /// Local index of `site` inside the flattened basis index.
    pub fn local_index(&self, basis: usize, site: usize) -> usize {
        (basis / self.strides[site]) % self.sites[site].dim
    }

    /// Replace the local index of `site` in `basis` with `new_local`.
    pub fn with_local_index(&self, basis: usize, site: usize, new_local: usize) -> usize {
        let old = self.local_index(basis, site);
        let delta = (new_local as isize - old as isize) * self.strides[site] as isize;
        (basis as isize + delta) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strides_and_indexing() {
        let space = HilbertSpace::new(vec![
            SpinSite::new(0.5).unwrap(),
            SpinSite::new(1.0).unwrap(),
            SpinSite::new(0.5).unwrap(),
        ]);
        assert_eq!(space.dim(), 2 * 3 * 2);
        // site 0 most significant
        assert_eq!(space.stride(0), 6);
        assert_eq!(space.stride(1), 2);
        assert_eq!(space.stride(2), 1);
        let idx = 1 * 6 + 2 * 2 + 1;
        assert_eq!(space.local_index(idx, 0), 1);
        assert_eq!(space.local_index(idx, 1), 2);
        assert_eq!(space.local_index(idx, 2), 1);
        assert_eq!(space.with_local_index(idx, 1, 0), 1 * 6 + 0 + 1);
    }

    #[test]
    fn invalid_spin_rejected() {
        assert!(SpinSite::new(0.3).is_err());
        assert!(SpinSite::new(0.0).is_err());
        assert!(SpinSite::new(0.5).is_ok());
        assert!(SpinSite::new(2.5).is_ok());
    }
}
