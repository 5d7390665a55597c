//! Parametric families of codes with auto-correlation 2.

use crate::code::{Code, Codeword};
use crate::error::{Error, Result};
use crate::group::{crt_split, GridGroup};

/// Integers in `[lo, hi]`; empty when `hi < lo`.
fn span(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    lo..=hi
}

/// `(2, n)`-regular code on `(m, n)` with `5n(m - 2)/24` codewords, for
/// `m = 2 (mod 12)` and `n = 2 (mod 4)`.
pub fn family_m2mod12(m: u32, n: u32) -> Result<Code> {
    if m % 12 != 2 || n % 4 != 2 {
        return Err(Error::param(format!("needs m = 2 (mod 12) and n = 2 (mod 4), got ({m},{n})")));
    }
    let g = GridGroup::new(m, n)?;
    let (mi, ni) = (m as i64, n as i64);
    let mut rows: Vec<[(i64, i64); 3]> = Vec::new();
    if m > 2 {
        let t_hi = (mi - 14).div_euclid(24);
        let s_hi = (mi - 26).div_euclid(24);
        let j_hi = (mi - 14) / 12;
        for i in span(0, ni / 2 - 1) {
            for t in span(0, t_hi) {
                rows.push([(0, 0), (12 * t + 3, 2 * i), (24 * t + 6, 4 * i)]);
                rows.push([(0, 0), (12 * t + 5, 2 * i + 1), (24 * t + 10, 4 * i + 2)]);
            }
            for s in span(0, s_hi) {
                rows.push([(0, 0), (12 * s + 9, 2 * i + 1), (24 * s + 18, 4 * i + 2)]);
                rows.push([(0, 0), (12 * s + 11, 2 * i), (24 * s + 22, 4 * i)]);
            }
            for j in span(0, j_hi) {
                rows.push([(0, 0), (mi / 2 - 6 * j - 1, 2 * i + 1), (mi - 12 * j - 2, 4 * i + 2)]);
                rows.push([(0, 0), (6 * j + 1, 2 * i), (12 * j + 3, 4 * i + 1)]);
                rows.push([(0, 0), (6 * j + 4, 2 * i + 1), (12 * j + 5, 4 * i + 2)]);
            }
        }
    }
    let words = rows.iter().map(|p| Codeword::from_pairs(&g, *p)).collect::<Result<Vec<_>>>()?;
    let code = Code::new(g, 2, 1, words)?;
    code.ensure_valid()?;
    Ok(code)
}

/// Optimal code on `(2, n)` with `(5n - 2)/12` codewords for `n = 10 (mod 12)`,
/// built on `Z_2 x Z_2 x Z_t` with `t = n/2` and mapped through the CRT.
pub fn family_2xn(n: u32) -> Result<Code> {
    if n % 12 != 10 {
        return Err(Error::param(format!("needs n = 10 (mod 12), got {n}")));
    }
    let t = (n / 2) as i64;
    let mut rows: Vec<[(i64, i64, i64); 3]> = vec![[(0, 0, 0), (0, 1, 0), (1, 0, 0)]];
    for i in span(1, (t + 1) / 6) {
        rows.push([(0, 0, 0), (0, 1, 2 * i - 1), (0, 0, 4 * i - 2)]);
        rows.push([(0, 0, 0), (1, 0, 2 * i), (0, 0, 4 * i)]);
        rows.push([(0, 0, 0), (1, 1, 2 * i - 1), (0, 1, 4 * i - 2)]);
    }
    for i in span(1, (t - 5) / 6) {
        rows.push([(0, 0, 0), (1, 1, (t + 1) / 2 - i), (0, 0, t - 2 * i + 1)]);
        rows.push([(0, 0, 0), (0, 1, 4 * i), (1, 0, (t + 1) / 3 + 2 * i)]);
    }
    let g = GridGroup::new(2, n)?;
    let crt = crt_split(n as u64, 2, t as u64)?;
    let words = rows
        .iter()
        .map(|r| {
            let e = r.map(|(a, b, c)| g.elem(a, crt.join(b as u64, c.rem_euclid(t) as u64) as i64));
            Codeword::new(&g, e)
        })
        .collect::<Result<Vec<_>>>()?;
    let code = Code::new(g, 2, 1, words)?;
    code.ensure_valid()?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m2mod12_examples() {
        let c = family_m2mod12(2, 6).unwrap();
        assert!(c.is_empty());
        assert_eq!(c.regularity().unwrap(), Some((2, 6)));
        let c = family_m2mod12(14, 2).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.regularity().unwrap(), Some((2, 2)));
        let c = family_m2mod12(14, 10).unwrap();
        assert_eq!(c.len(), 25);
        assert_eq!(c.regularity().unwrap(), Some((2, 10)));
        assert!(family_m2mod12(10, 6).is_err());
    }

    #[test]
    fn m2mod12_sizes() {
        for m in (2..=74).step_by(12) {
            for n in (2..=30).step_by(4) {
                let c = family_m2mod12(m, n).unwrap();
                assert_eq!(c.len() as u32 * 24, 5 * n * (m - 2), "({m},{n})");
                assert_eq!(c.regularity().unwrap(), Some((2, n)), "({m},{n})");
            }
        }
    }

    #[test]
    fn two_by_n_examples() {
        let c = family_2xn(10).unwrap();
        assert_eq!(c.len(), 4);
        let g = c.group();
        let first = c.codewords()[0];
        assert_eq!(crate::code::classify(&g, &first).to_string(), "3.1");
        assert_eq!(family_2xn(22).unwrap().len(), 9);
        assert!(family_2xn(14).is_err());
    }

    #[test]
    fn two_by_n_sizes() {
        for n in (10..=130).step_by(12) {
            assert_eq!(family_2xn(n).unwrap().len() as u32 * 12, 5 * n - 2, "n={n}");
        }
    }
}
