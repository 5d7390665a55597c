//! Small explicit codes used as ingredients and as reference examples.

use crate::code::{Code, Codeword};
use crate::error::{Error, Result};
use crate::group::GridGroup;

type Listing = &'static [[(i64, i64); 3]];

const SIX_BY_SIX_LA2: Listing = &[
    [(0, 0), (0, 3), (3, 0)],
    [(0, 0), (0, 1), (0, 2)],
    [(0, 0), (1, 0), (2, 0)],
    [(0, 0), (1, 1), (2, 2)],
    [(0, 0), (1, 2), (2, 1)],
    [(0, 0), (1, 3), (3, 2)],
    [(0, 0), (1, 4), (3, 1)],
];

const SIX_BY_SIX_LA3: Listing = &[
    [(0, 0), (0, 2), (0, 4)],
    [(0, 0), (2, 0), (4, 0)],
    [(0, 0), (2, 2), (4, 4)],
    [(0, 0), (2, 4), (4, 2)],
    [(0, 0), (0, 1), (1, 0)],
    [(0, 0), (1, 1), (2, 3)],
    [(0, 0), (1, 3), (3, 2)],
    [(0, 0), (1, 4), (3, 5)],
    [(0, 0), (0, 3), (3, 0)],
];

const TWO_BY_SIX: Listing = &[[(0, 0), (0, 1), (1, 2)], [(0, 0), (0, 3), (1, 0)]];

const TWO_BY_EIGHTEEN: Listing = &[
    [(0, 0), (0, 1), (0, 2)],
    [(0, 0), (1, 4), (0, 8)],
    [(0, 0), (1, 7), (0, 14)],
    [(0, 0), (0, 3), (1, 1)],
    [(0, 0), (0, 5), (1, 8)],
    [(0, 0), (0, 7), (1, 12)],
    [(0, 0), (0, 9), (1, 0)],
];

const NINE_BY_THREE: Listing = &[[(0, 0), (1, 0), (2, 1)], [(0, 0), (1, 2), (5, 0)], [(0, 0), (2, 0), (4, 2)]];

const TWO_BY_TWO: Listing = &[[(0, 0), (1, 0), (0, 1)]];

const ONE_BY_THREE: Listing = &[[(0, 0), (0, 1), (0, 2)]];

/// Catalog keys: `(m, n, λa, variant)`.
pub const ENTRIES: &[(u32, u32, u32, &str)] = &[
    (6, 6, 2, "optimal"),
    (6, 6, 3, "optimal"),
    (2, 6, 2, "(1,3)-regular"),
    (2, 18, 2, "(1,3)-regular"),
    (9, 3, 1, "(3,3)-regular"),
    (2, 2, 2, "optimal"),
    (1, 3, 3, "optimal"),
];

fn listing(m: u32, n: u32, lambda_a: u32, variant: &str) -> Option<Listing> {
    Some(match (m, n, lambda_a, variant) {
        (6, 6, 2, "optimal") => SIX_BY_SIX_LA2,
        (6, 6, 3, "optimal") => SIX_BY_SIX_LA3,
        (2, 6, 2, "(1,3)-regular") => TWO_BY_SIX,
        (2, 18, 2, "(1,3)-regular") => TWO_BY_EIGHTEEN,
        (9, 3, 1, "(3,3)-regular") => NINE_BY_THREE,
        (2, 2, 2, "optimal") => TWO_BY_TWO,
        (1, 3, 3, "optimal") => ONE_BY_THREE,
        _ => return None,
    })
}

/// A listed code, re-verified on every load.
pub fn base_code(m: u32, n: u32, lambda_a: u32, variant: &str) -> Result<Code> {
    let rows = listing(m, n, lambda_a, variant)
        .ok_or_else(|| Error::UnknownCatalogEntry(format!("({m},{n}) with auto-correlation {lambda_a}, {variant}")))?;
    let g = GridGroup::new(m, n)?;
    let words = rows.iter().map(|p| Codeword::from_pairs(&g, *p)).collect::<Result<Vec<_>>>()?;
    let code = Code::new(g, lambda_a, 1, words)?;
    code.ensure_valid()?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads() {
        for &(m, n, la, v) in ENTRIES {
            let c = base_code(m, n, la, v).unwrap();
            assert!(c.verify_shift().is_valid(), "({m},{n},{la},{v})");
        }
    }

    #[test]
    fn sizes_and_regularity() {
        assert_eq!(base_code(6, 6, 2, "optimal").unwrap().len(), 7);
        assert_eq!(base_code(6, 6, 3, "optimal").unwrap().len(), 9);
        let c = base_code(2, 18, 2, "(1,3)-regular").unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c.regularity().unwrap(), Some((1, 3)));
        let c = base_code(2, 6, 2, "(1,3)-regular").unwrap();
        assert_eq!(c.regularity().unwrap(), Some((1, 3)));
        let gl = c.group();
        assert_eq!(c.leave().unwrap().uncovered, vec![gl.elem(0, 2), gl.elem(0, 4)]);
        assert_eq!(base_code(9, 3, 1, "(3,3)-regular").unwrap().regularity().unwrap(), Some((3, 3)));
        assert_eq!(base_code(2, 2, 2, "optimal").unwrap().census().n3_1, 1);
    }

    #[test]
    fn unknown_key() {
        assert!(matches!(base_code(4, 4, 2, "optimal"), Err(Error::UnknownCatalogEntry(_))));
    }
}
