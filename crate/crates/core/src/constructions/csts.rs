//! Cyclic Steiner triple systems as families of base blocks over `Z_v`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::code::{Code, Codeword};
use crate::error::{Error, Result};
use crate::group::GridGroup;
use crate::search::cover_with_restarts;

/// Base blocks `{0, a, a + b}` of a cyclic Steiner triple system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CstsBlocks {
    pub v: u64,
    pub blocks: Vec<[u64; 3]>,
    /// Non-zero elements covered by no block difference: empty for
    /// `v = 1 (mod 6)`, `{v/3, 2v/3}` for `v = 3 (mod 6)`.
    pub leave: Vec<u64>,
}

impl CstsBlocks {
    /// The blocks as a code on `Z_1 x Z_v` with auto-correlation 1.
    pub fn to_code(&self) -> Result<Code> {
        let g = GridGroup::new(1, self.v as u32)?;
        let words = self
            .blocks
            .iter()
            .map(|b| Codeword::from_pairs(&g, b.map(|z| (0, z as i64))))
            .collect::<Result<Vec<_>>>()?;
        Code::new(g, 1, 1, words)
    }
}

fn fold(z: u64, v: u64) -> u64 {
    let r = z % v;
    r.min(v - r)
}

fn solve(v: u64) -> Result<CstsBlocks> {
    if v % 6 != 1 && v % 6 != 3 {
        return Err(Error::NoSuchDesign(format!("a cyclic triple system needs v = 1, 3 (mod 6), got {v}")));
    }
    let half = (v - 1) / 2;
    let third = if v % 3 == 0 { v / 3 } else { 0 };
    let leave = if third > 0 { vec![third, 2 * third] } else { vec![] };
    // Columns are the differences 1..=half except v/3.
    let cols: Vec<u64> = (1..=half).filter(|&d| d != third).collect();
    let col_of: HashMap<u64, usize> = cols.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut triples = Vec::new();
    for a in 1..=half {
        for b in a + 1..=half {
            let c = fold(a + b, v);
            if c == 0 || c == a || c == b || [a, b, c].contains(&third) {
                continue;
            }
            let mut t = [a, b, c];
            t.sort();
            triples.push(t);
        }
    }
    triples.sort();
    triples.dedup();
    let rows: Vec<Vec<usize>> = triples.iter().map(|t| t.iter().map(|d| col_of[d]).collect()).collect();
    let weights = vec![2; cols.len()];
    let chosen = cover_with_restarts(&weights, &rows, v, None)?
        .ok_or_else(|| Error::NoSuchDesign(format!("no cyclic triple system of order {v}")))?
        .0;
    let mut blocks: Vec<[u64; 3]> = chosen
        .iter()
        .map(|&r| {
            let [p, q, _] = triples[r];
            [0, p, (p + q) % v]
        })
        .collect();
    blocks.sort();
    let out = CstsBlocks { v, blocks, leave };
    check(&out)?;
    Ok(out)
}

fn check(c: &CstsBlocks) -> Result<()> {
    let code = c.to_code()?;
    code.ensure_valid()?;
    let want: Vec<u64> = c.leave.clone();
    let got: Vec<u64> = code.leave()?.uncovered.iter().map(|a| a.y as u64).collect();
    if got != want {
        return Err(Error::NoSuchDesign(format!("triple system of order {} leaves {got:?}", c.v)));
    }
    Ok(())
}

/// Cyclic Steiner triple system of order `v` (memoized per process).
pub fn cyclic_sts(v: u64) -> Result<CstsBlocks> {
    static MEMO: OnceLock<Mutex<HashMap<u64, CstsBlocks>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(hit) = memo.lock().expect("memo lock").get(&v) {
        return Ok(hit.clone());
    }
    let fresh = solve(v)?;
    memo.lock().expect("memo lock").insert(v, fresh.clone());
    Ok(fresh)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let c = cyclic_sts(7).unwrap();
        assert_eq!(c.blocks.len(), 1);
        assert!(c.leave.is_empty());
        let c = cyclic_sts(3).unwrap();
        assert!(c.blocks.is_empty());
        assert_eq!(c.leave, vec![1, 2]);
        let c = cyclic_sts(15).unwrap();
        assert_eq!(c.blocks.len(), 2);
        assert_eq!(c.leave, vec![5, 10]);
        assert!(cyclic_sts(1).unwrap().blocks.is_empty());
    }

    #[test]
    fn nonexistent_orders() {
        assert!(matches!(cyclic_sts(9), Err(Error::NoSuchDesign(_))));
        assert!(matches!(cyclic_sts(11), Err(Error::NoSuchDesign(_))));
        assert!(matches!(cyclic_sts(12), Err(Error::NoSuchDesign(_))));
    }

    #[test]
    fn regularity_of_embedding() {
        let c = cyclic_sts(21).unwrap().to_code().unwrap();
        assert_eq!(c.regularity().unwrap(), Some((1, 3)));
        let c = cyclic_sts(19).unwrap().to_code().unwrap();
        assert_eq!(c.regularity().unwrap(), Some((1, 1)));
    }
}
