//! Spin operator algebra on tensor-product Hilbert spaces.
//!
//! Provides spin-s matrices, sparse operator assembly on labeled product
//! spaces, dense/Lanczos hermitian eigensolvers, total-spin resolution,
//! the KLS trace inequality residual, and the pi-rotation about the
//! 2-axis used by reflection arguments.

mod error;
mod hilbert;
mod spin;
mod sparse;
mod eigen;
mod kls;
mod rotation;
pub mod io;

pub use error::SpinAlgError;
pub use hilbert::{HilbertSpace, SpinSite};
pub use spin::{spin_matrices, SpinMatrices};
pub use sparse::SparseOperator;
pub use eigen::{eigensolve, EigenResult, Which};
pub use kls::{kls_trace_inequality_residual, matrix_abs_sqrt};
pub use rotation::spin_rotation_pi_about_y;

/// Total spin squared (sum_i S_i)^2 on the whole space.
///
/// Assembled as the square of the global spin components, so it commutes
/// exactly (up to rounding) with any rotation-invariant bond Hamiltonian.
pub fn total_spin_squared(space: &HilbertSpace) -> SparseOperator {
    let sx = global_component(space, 0);
    let sy = global_component(space, 1);
    let sz = global_component(space, 2);
    let mut s2 = sx.matmul(&sx);
    s2 = s2.add(&sy.matmul(&sy));
    s2 = s2.add(&sz.matmul(&sz));
    s2.into_hermitian()
}

/// Global spin component: sum over sites of the embedded local matrix.
/// `axis`: 0 -> S^1, 1 -> S^2, 2 -> S^3.
pub fn global_component(space: &HilbertSpace, axis: usize) -> SparseOperator {
    let mut acc = SparseOperator::zero(space.clone());
    for site in 0..space.n_sites() {
        let m = spin_matrices(space.site(site).spin).expect("site spins validated on construction");
        let local = match axis {
            0 => m.sx,
            1 => m.sy,
            _ => m.sz,
        };
        acc = acc.add(&sparse::embed(&local, site, space).expect("dimension fixed by construction"));
    }
    acc
}

/// Heisenberg exchange bond `coupling * (S_i . S_j)`.
pub fn heisenberg_bond(
    i: usize,
    j: usize,
    coupling: f64,
    space: &HilbertSpace,
) -> Result<SparseOperator, SpinAlgError> {
    if i == j {
        return Err(SpinAlgError::SameSiteBond(i));
    }
    let mi = spin_matrices(space.site(i).spin)?;
    let mj = spin_matrices(space.site(j).spin)?;
    let mut two_site = kron(&mi.sx, &mj.sx);
    two_site += kron(&mi.sy, &mj.sy);
    two_site += kron(&mi.sz, &mj.sz);
    two_site.scale_mut(coupling);
    sparse::embed_pair(&two_site, i, j, space)
}

pub(crate) fn kron(
    a: &nalgebra::DMatrix<num_complex::Complex64>,
    b: &nalgebra::DMatrix<num_complex::Complex64>,
) -> nalgebra::DMatrix<num_complex::Complex64> {
    a.kronecker(b)
}

pub use sparse::{embed, embed_pair};

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn total_spin_squared_single_site_is_scalar() {
        for &(num, den) in &[(1u32, 2u32), (2, 2), (3, 2), (4, 2)] {
            let s = num as f64 / den as f64;
            let space = HilbertSpace::uniform(1, s).unwrap();
            let s2 = total_spin_squared(&space);
            let expect = s * (s + 1.0);
            let d = space.dim();
            for k in 0..d {
                let v = s2.entry(k, k);
                assert!((v - Complex64::new(expect, 0.0)).norm() < 1e-12);
            }
            assert!(s2.max_abs_offdiag() < 1e-12);
        }
    }

    #[test]
    fn two_halves_spectrum() {
        let space = HilbertSpace::uniform(2, 0.5).unwrap();
        let s2 = total_spin_squared(&space);
        let eig = eigensolve(&s2, None, 1e-8).unwrap();
        let want = [0.0, 2.0, 2.0, 2.0];
        for (got, want) in eig.eigenvalues.iter().zip(want.iter()) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn four_halves_has_two_singlets() {
        let space = HilbertSpace::uniform(4, 0.5).unwrap();
        let s2 = total_spin_squared(&space);
        let eig = eigensolve(&s2, None, 1e-8).unwrap();
        let singlets = eig.eigenvalues.iter().filter(|&&e| e.abs() < 1e-9).count();
        assert_eq!(singlets, 2);
    }

    #[test]
    fn bond_singlet_triplet() {
        let space = HilbertSpace::uniform(2, 0.5).unwrap();
        let b = heisenberg_bond(0, 1, 1.0, &space).unwrap();
        let eig = eigensolve(&b, None, 1e-8).unwrap();
        let want = [-0.75, 0.25, 0.25, 0.25];
        for (got, want) in eig.eigenvalues.iter().zip(want.iter()) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn bond_zero_coupling_is_zero() {
        let space = HilbertSpace::uniform(2, 1.0).unwrap();
        let b = heisenberg_bond(0, 1, 0.0, &space).unwrap();
        assert!(b.max_abs() < 1e-15);
    }

    #[test]
    fn spin_one_pair_ground_energy() {
        // lowest eigenvalue of S_i.S_j for two spin-1 sites:
        // S(S+1)/2 - s(s+1) at S=0 -> -2
        let space = HilbertSpace::uniform(2, 1.0).unwrap();
        let b = heisenberg_bond(0, 1, 1.0, &space).unwrap();
        let eig = eigensolve(&b, Some(1), 1e-8).unwrap();
        assert!((eig.eigenvalues[0] + 2.0).abs() < 1e-10);
    }

    #[test]
    fn same_site_bond_rejected() {
        let space = HilbertSpace::uniform(2, 0.5).unwrap();
        assert!(heisenberg_bond(1, 1, 1.0, &space).is_err());
    }

    #[test]
    fn s2_commutes_with_bond_hamiltonians() {
        // Random bond Hamiltonian on 5 spin-1/2 sites (D=32), plus a spin-1 pair.
        let space = HilbertSpace::uniform(5, 0.5).unwrap();
        let mut h = SparseOperator::zero(space.clone());
        for &(i, j, c) in &[(0usize, 1usize, 1.0), (1, 2, 0.7), (2, 3, -0.4), (3, 4, 1.3), (0, 4, 0.9)] {
            h = h.add(&heisenberg_bond(i, j, c, &space).unwrap());
        }
        let s2 = total_spin_squared(&space);
        let c = h.commutator(&s2);
        assert!(c.max_abs() < 1e-12, "commutator {}", c.max_abs());
    }
}
