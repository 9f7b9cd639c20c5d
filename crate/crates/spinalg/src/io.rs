//! Little-endian binary dump of sparse operators for debugging.
//!
//! Record stream: (row: u64, col: u64, re: f64, im: f64) repeated, no header.

use crate::error::SpinAlgError;
use crate::hilbert::HilbertSpace;
use crate::sparse::SparseOperator;
use num_complex::Complex64;
use std::io::{Read, Write};

pub fn dump_records<W: Write>(op: &SparseOperator, mut w: W) -> Result<(), SpinAlgError> {
    for (r, c, v) in op.entries() {
        w.write_all(&(r as u64).to_le_bytes())?;
        w.write_all(&(c as u64).to_le_bytes())?;
        w.write_all(&v.re.to_le_bytes())?;
        w.write_all(&v.im.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_records<R: Read>(space: HilbertSpace, mut r: R) -> Result<SparseOperator, SpinAlgError> {
    let mut buf = Vec::new();
    r.read_to_end(&mut buf)?;
    if buf.len() % 32 != 0 {
        return Err(SpinAlgError::BadRecordStream(format!(
            "stream length {} is not a multiple of 32",
            buf.len()
        )));
    }
    let mut entries = Vec::with_capacity(buf.len() / 32);
    for chunk in buf.chunks_exact(32) {
        let row = u64::from_le_bytes(chunk[0..8].try_into().unwrap()) as usize;
        let col = u64::from_le_bytes(chunk[8..16].try_into().unwrap()) as usize;
        let re = f64::from_le_bytes(chunk[16..24].try_into().unwrap());
        let im = f64::from_le_bytes(chunk[24..32].try_into().unwrap());
        if row >= space.dim() || col >= space.dim() {
            return Err(SpinAlgError::BadRecordStream(format!(
                "index ({row},{col}) out of range for dimension {}",
                space.dim()
            )));
        }
        entries.push((row, col, Complex64::new(re, im)));
    }
    Ok(SparseOperator::from_entries(space, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg_bond;

    #[test]
    fn roundtrip() {
        let space = HilbertSpace::uniform(3, 0.5).unwrap();
        let op = heisenberg_bond(0, 2, 0.8, &space).unwrap();
        let mut buf = Vec::new();
        dump_records(&op, &mut buf).unwrap();
        assert_eq!(buf.len(), 32 * op.nnz());
        let back = read_records(space, &buf[..]).unwrap();
        let diff = back.add(&op.scale(Complex64::new(-1.0, 0.0)));
        assert!(diff.max_abs() < 1e-15);
    }

    #[test]
    fn truncated_stream_rejected() {
        let space = HilbertSpace::uniform(1, 0.5).unwrap();
        assert!(read_records(space, &[0u8; 31][..]).is_err());
    }
}
