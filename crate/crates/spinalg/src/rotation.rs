use crate::hilbert::HilbertSpace;
use crate::sparse::SparseOperator;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Local pi-rotation about the 2-axis: |s,m> -> (-)^{s-m} |s,-m>.
pub fn local_rotation_pi_about_y(spin: f64) -> DMatrix<Complex64> {
    let d = (2.0 * spin).round() as usize + 1;
    let mut u = DMatrix::<Complex64>::zeros(d, d);
    for col in 0..d {
        let m = spin - col as f64;
        // target row for -m: row = s - (-m) = s + m
        let row = (spin + m).round() as usize;
        let sign = if ((spin - m).round() as i64) % 2 == 0 { 1.0 } else { -1.0 };
        u[(row, col)] = Complex64::new(sign, 0.0);
    }
    u
}

/// Tensor product over all sites of the local pi-rotation about the 2-axis.
pub fn spin_rotation_pi_about_y(space: &HilbertSpace) -> SparseOperator {
    let mut entries: Vec<(usize, usize, Complex64)> = Vec::with_capacity(space.dim());
    for basis in 0..space.dim() {
        let mut target = basis;
        let mut amp = Complex64::new(1.0, 0.0);
        for site in 0..space.n_sites() {
            let spin = space.site(site).spin;
            let l = space.local_index(basis, site);
            let m = spin - l as f64;
            let new_l = (spin + m).round() as usize;
            let sign = if ((spin - m).round() as i64) % 2 == 0 { 1.0 } else { -1.0 };
            amp *= Complex64::new(sign, 0.0);
            target = space.with_local_index(target, site, new_l);
        }
        entries.push((target, basis, amp));
    }
    SparseOperator::from_entries(space.clone(), entries)
}
