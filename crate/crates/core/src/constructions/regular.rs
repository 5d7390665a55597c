//! Regular codes used as ingredients for the doubling pipeline.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Mutex, OnceLock};

use num_integer::gcd;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::group::GridGroup;
use crate::io::{CodeFile, Metadata};
use crate::search::{search_regular, SearchOptions};

use super::catalog::base_code;
use super::csts::cyclic_sts;
use super::ops::{double, embed_cyclic, fill, inflate, Axis};

/// Directory for persisted search results; unset means memory only.
pub const CACHE_DIR_VAR: &str = "OOSPC_CACHE_DIR";

type Key = (u32, u32, u32, u32, u32);

fn memory() -> &'static Mutex<HashMap<Key, Code>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Code>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cache_path(key: Key) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_DIR_VAR)?;
    let (m, n, la, s, t) = key;
    Some(PathBuf::from(dir).join(format!("regular-{m}x{n}-la{la}-{s}x{t}.json")))
}

fn load_from_disk(key: Key) -> Option<Code> {
    let code = CodeFile::read(&cache_path(key)?).ok()?.to_code().ok()?;
    let (m, n, la, s, t) = key;
    let fits = code.group() == GridGroup::new(m, n).ok()?
        && code.lambda_a() == la
        && code.lambda_c() == 1
        && code.regularity().ok()? == Some((s, t));
    fits.then_some(code)
}

fn store_on_disk(key: Key, code: &Code) {
    let Some(path) = cache_path(key) else { return };
    if let Some(dir) = path.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    let meta = Metadata { construction: Some("regular search".into()), regularity: Some((key.3, key.4)) };
    let _ = CodeFile::from_code(code, Some(meta)).write(&path);
}

/// `(s, t)`-regular code found by search, cached in memory and optionally on
/// disk. Cached files are re-verified before use.
pub fn searched_regular(m: u32, n: u32, lambda_a: u32, s: u32, t: u32) -> Result<Code> {
    let key = (m, n, lambda_a, s, t);
    if let Some(hit) = memory().lock().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let code = match load_from_disk(key) {
        Some(c) => c,
        None => {
            let found = search_regular(m, n, lambda_a, s, t, &SearchOptions::default())?.witness;
            store_on_disk(key, &found);
            found
        }
    };
    memory().lock().expect("cache lock").insert(key, code.clone());
    Ok(code)
}

fn expect_regular(code: Code, s: u32, t: u32) -> Result<Code> {
    match code.regularity()? {
        Some(r) if r == (s, t) => Ok(code),
        other => Err(Error::param(format!("expected a ({s},{t})-regular code, got {other:?}"))),
    }
}

/// `(1, 1)`-regular code on `(m, n)` with auto-correlation 1, `mn = 1 (mod 6)`.
pub fn regular_11(m: u32, n: u32) -> Result<Code> {
    if (m as u64 * n as u64) % 6 != 1 {
        return Err(Error::param(format!("needs mn = 1 (mod 6), got ({m},{n})")));
    }
    let code = if gcd(m, n) == 1 {
        embed_cyclic(&cyclic_sts(m as u64 * n as u64)?.to_code()?, m, n)?
    } else {
        searched_regular(m, n, 1, 1, 1)?
    };
    expect_regular(code, 1, 1)
}

/// `(1, 3)`-regular code on `(m, n)` with auto-correlation 1, for
/// `m = 1, 5 (mod 6)`, `n = 3 (mod 6)`, `(m, n) != (1, 9)`.
pub fn regular_13(m: u32, n: u32) -> Result<Code> {
    if !matches!(m % 6, 1 | 5) || n % 6 != 3 {
        return Err(Error::param(format!("needs m = 1, 5 (mod 6) and n = 3 (mod 6), got ({m},{n})")));
    }
    if (m, n) == (1, 9) {
        return Err(Error::NoSuchDesign("no (1,3)-regular code on Z_1 x Z_9".into()));
    }
    let code = if n == 3 || n == 9 {
        embed_cyclic(&cyclic_sts(m as u64 * n as u64)?.to_code()?, m, n)?
    } else {
        let spread = inflate(&cyclic_sts(n as u64)?.to_code()?, m as u64, Axis::Rows)?;
        fill(&spread, &regular_13(m, 3)?)?
    };
    expect_regular(code, 1, 3)
}

/// `(3, 3)`-regular code on `(m, n)` with auto-correlation 1, `m, n = 3 (mod 6)`.
pub fn regular_33(m: u32, n: u32) -> Result<Code> {
    if m % 6 != 3 || n % 6 != 3 {
        return Err(Error::param(format!("needs m, n = 3 (mod 6), got ({m},{n})")));
    }
    if m > n {
        return Ok(regular_33(n, m)?.transposed());
    }
    let code = match (m, n) {
        (3, 3) => Code::empty(GridGroup::new(3, 3)?, 1),
        (3, 9) => base_code(9, 3, 1, "(3,3)-regular")?.transposed(),
        (3, _) => inflate(&cyclic_sts(n as u64)?.to_code()?, 3, Axis::Rows)?,
        (9, 9) => searched_regular(9, 9, 1, 3, 3)?,
        (9, _) => {
            let spread = inflate(&base_code(9, 3, 1, "(3,3)-regular")?, n as u64 / 3, Axis::Cols)?;
            fill(&spread, &regular_33(3, n)?)?
        }
        _ => {
            let spread = inflate(&regular_33(3, n)?, m as u64 / 3, Axis::Rows)?;
            fill(&spread, &regular_33(m, 3)?)?
        }
    };
    expect_regular(code, 3, 3)
}

/// `(1, 3)`-regular code on `(m, n)` with auto-correlation 2 and
/// `(5mn - 12)/24` codewords, for `m = 2, 10 (mod 12)` and `n = 6 (mod 12)`.
pub fn regular_13_la2(m: u32, n: u32) -> Result<Code> {
    if !matches!(m % 12, 2 | 10) || n % 12 != 6 {
        return Err(Error::param(format!("needs m = 2, 10 (mod 12) and n = 6 (mod 12), got ({m},{n})")));
    }
    let code = match (m, n) {
        (2, 6) | (2, 18) => base_code(m, n, 2, "(1,3)-regular")?,
        _ => fill(&double(&regular_13(m / 2, n / 2)?)?, &base_code(2, 6, 2, "(1,3)-regular")?)?,
    };
    expect_regular(code, 1, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = regular_11(5, 5).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.leave().unwrap().uncovered.is_empty());

        let c = regular_13(5, 3).unwrap();
        assert_eq!(c.len(), 2);
        let g = c.group();
        assert_eq!(c.leave().unwrap().uncovered, vec![g.elem(0, 1), g.elem(0, 2)]);

        assert_eq!(regular_33(9, 3).unwrap(), base_code(9, 3, 1, "(3,3)-regular").unwrap());
        assert_eq!(regular_13_la2(2, 6).unwrap().len(), 2);
    }

    #[test]
    fn sizes_follow_the_counting() {
        for m in [1u32, 5, 7, 11, 13] {
            for n in [3u32, 9, 15, 21, 27] {
                if (m, n) == (1, 9) {
                    assert!(regular_13(m, n).is_err());
                    continue;
                }
                let c = regular_13(m, n).unwrap();
                assert_eq!(c.len() as u32 * 6, m * n - 3, "({m},{n})");
            }
        }
        for m in [3u32, 9, 15, 21] {
            for n in [3u32, 9, 15, 21] {
                let c = regular_33(m, n).unwrap();
                assert_eq!(c.len() as u32 * 6, m * n - 9, "({m},{n})");
            }
        }
        for (m, n) in [(2u32, 30u32), (10, 6), (10, 18), (14, 6), (22, 30)] {
            let c = regular_13_la2(m, n).unwrap();
            assert_eq!(c.len() as u32 * 24, 5 * m * n - 12, "({m},{n})");
        }
    }

    #[test]
    fn rejects_bad_residues() {
        assert!(regular_11(2, 3).is_err());
        assert!(regular_13(3, 3).is_err());
        assert!(regular_33(3, 5).is_err());
        assert!(regular_13_la2(6, 6).is_err());
    }
}
