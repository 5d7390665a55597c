//! Cyclic difference matrices with three rows.

use crate::error::{Error, Result};

/// A `3 x v` matrix over `Z_v` whose row differences each run through `Z_v`
/// exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffMatrix {
    pub v: u64,
    pub rows: [Vec<u64>; 3],
}

impl DiffMatrix {
    /// Entries of column `i`, one per row.
    pub fn column(&self, i: usize) -> [u64; 3] {
        [self.rows[0][i], self.rows[1][i], self.rows[2][i]]
    }

    pub fn is_valid(&self) -> bool {
        let v = self.v as usize;
        if self.rows.iter().any(|r| r.len() != v || r.iter().any(|&e| e >= self.v)) {
            return false;
        }
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let mut seen = vec![false; v];
            for i in 0..v {
                let d = ((self.rows[a][i] + self.v - self.rows[b][i]) % self.v) as usize;
                if std::mem::replace(&mut seen[d], true) {
                    return false;
                }
            }
        }
        true
    }
}

/// The matrix with columns `(0, i, 2i)`; exists exactly for odd `v`.
pub fn cdm(v: u64) -> Result<DiffMatrix> {
    if v == 0 || v % 2 == 0 {
        return Err(Error::NoSuchDesign(format!("no three-row cyclic difference matrix of even order {v}")));
    }
    let m = DiffMatrix {
        v,
        rows: [vec![0; v as usize], (0..v).collect(), (0..v).map(|i| 2 * i % v).collect()],
    };
    if !m.is_valid() {
        return Err(Error::NoSuchDesign(format!("difference matrix of order {v} failed its check")));
    }
    Ok(m)
}
