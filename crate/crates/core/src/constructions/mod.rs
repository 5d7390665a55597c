//! Generative machinery: triple systems, difference matrices, the recursive
//! operations, explicit codes, and the optimal-code dispatcher for
//! `m = n = 2 (mod 4)`.

pub mod catalog;
pub mod cdm;
pub mod csts;
pub mod families;
pub mod ops;
pub mod regular;

pub use catalog::base_code;
pub use cdm::{cdm, DiffMatrix};
pub use csts::{cyclic_sts, CstsBlocks};
pub use families::{family_2xn, family_m2mod12};
pub use ops::{double, doubled_leave, embed_cyclic, fill, inflate, traced, Axis, OpKind, Shape, Step};
pub use regular::{regular_11, regular_13, regular_13_la2, regular_33, searched_regular, CACHE_DIR_VAR};

use crate::bounds::theta_exact_2mod4;
use crate::code::Code;
use crate::error::{Error, Result};

/// Which recipe [`construct_optimal`] follows, after orienting the moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Both moduli `2 (mod 12)` or both `10 (mod 12)`: double a `(1,1)`-regular
    /// half-size code, fill with the `(2,2)` code.
    SameResidue,
    /// One modulus `2`, the other `10 (mod 12)`: the `(2, n)`-regular family
    /// filled with the `(2, n)` family.
    MixedResidue,
    /// Exactly one modulus `6 (mod 12)`: the `(1,3)`-regular code, filled
    /// with the `(1,3)` singleton when `λa = 3`.
    OneSix,
    /// Both moduli `6 (mod 12)`: double a `(3,3)`-regular half-size code,
    /// fill with the `(6,6)` code.
    BothSix,
}

impl Route {
    pub fn describe(self) -> &'static str {
        match self {
            Route::SameResidue => "double (1,1)-regular half code, fill with (2,2)",
            Route::MixedResidue => "(2,n)-regular family, fill with (2,n) family",
            Route::OneSix => "(1,3)-regular code, fill with (1,3) when lambda_a = 3",
            Route::BothSix => "double (3,3)-regular half code, fill with (6,6)",
        }
    }
}

fn check_domain(m: u32, n: u32, lambda_a: u32) -> Result<()> {
    if m % 4 != 2 || n % 4 != 2 {
        return Err(Error::Unsupported(format!(
            "optimal constructions need m = n = 2 (mod 4); got m = {} (mod 4), n = {} (mod 4)",
            m % 4,
            n % 4
        )));
    }
    if !matches!(lambda_a, 2 | 3) {
        return Err(Error::param(format!("auto-correlation must be 2 or 3, got {lambda_a}")));
    }
    Ok(())
}

/// Recipe for `(m, n)` and whether the moduli are swapped first.
pub fn route(m: u32, n: u32, lambda_a: u32) -> Result<(Route, bool)> {
    check_domain(m, n, lambda_a)?;
    Ok(match (m % 12, n % 12) {
        (a, b) if a == b && a != 6 => (Route::SameResidue, false),
        (2, 10) => (Route::MixedResidue, false),
        (10, 2) => (Route::MixedResidue, true),
        (6, 6) => (Route::BothSix, false),
        (_, 6) => (Route::OneSix, false),
        _ => (Route::OneSix, true),
    })
}

/// Optimal code on `(m, n)` with auto-correlation `λa` and cross-correlation
/// 1 for `m = n = 2 (mod 4)`, of size `⌊(5mn + 4 + 8ω)/24⌋`.
pub fn construct_optimal(m: u32, n: u32, lambda_a: u32) -> Result<Code> {
    let (r, swap) = route(m, n, lambda_a)?;
    if swap {
        return Ok(construct_optimal(n, m, lambda_a)?.transposed());
    }
    if lambda_a == 3 && (m as u64 * n as u64) % 3 != 0 {
        // No Type-2 codeword exists, so the two limits define the same codes.
        let code = construct_optimal(m, n, 2)?.with_lambda_a(3);
        code.ensure_valid()?;
        return Ok(code);
    }
    let code = match r {
        Route::SameResidue if (m, n) == (2, 2) => base_code(2, 2, 2, "optimal")?,
        Route::SameResidue => fill(&double(&regular_11(m / 2, n / 2)?)?, &base_code(2, 2, 2, "optimal")?)?,
        Route::MixedResidue if m == 2 => family_2xn(n)?,
        Route::MixedResidue => fill(&family_m2mod12(m, n)?, &family_2xn(n)?)?,
        Route::OneSix => {
            let core = regular_13_la2(m, n)?;
            if lambda_a == 3 {
                fill(&core.with_lambda_a(3), &base_code(1, 3, 3, "optimal")?)?
            } else {
                core
            }
        }
        Route::BothSix if (m, n) == (6, 6) => base_code(6, 6, lambda_a, "optimal")?,
        Route::BothSix => fill(
            &double(&regular_33(m / 2, n / 2)?)?.with_lambda_a(lambda_a),
            &base_code(6, 6, lambda_a, "optimal")?,
        )?,
    };
    code.ensure_valid()?;
    let want = theta_exact_2mod4(m as u64, n as u64, lambda_a)? as usize;
    if code.len() != want {
        return Err(Error::param(format!(
            "construction for ({m},{n}) gave {} codewords, expected {want}",
            code.len()
        )));
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(construct_optimal(2, 2, 2).unwrap().len(), 1);
        assert_eq!(construct_optimal(6, 6, 3).unwrap().len(), 9);
        assert_eq!(construct_optimal(10, 14, 2).unwrap().len(), 29);
        assert_eq!(construct_optimal(6, 18, 3).unwrap().len(), 24);
        assert_eq!(construct_optimal(10, 10, 2).unwrap().len(), 21);
    }

    #[test]
    fn outside_domain() {
        assert!(matches!(construct_optimal(4, 4, 2), Err(Error::Unsupported(_))));
        assert!(construct_optimal(6, 6, 1).is_err());
    }

    #[test]
    fn orientation_is_transposition() {
        let a = construct_optimal(10, 2, 2).unwrap();
        let b = construct_optimal(2, 10, 2).unwrap();
        assert_eq!(a, b.transposed());
        assert_eq!(route(18, 10, 2).unwrap(), (Route::OneSix, true));
    }

    #[test]
    fn small_grid() {
        for m in (2..=22).step_by(4) {
            for n in (2..=22).step_by(4) {
                for la in [2, 3] {
                    let c = construct_optimal(m, n, la).unwrap();
                    assert!(c.verify_shift().is_valid(), "({m},{n},{la})");
                    assert_eq!(c.group().m(), m);
                }
            }
        }
    }
}
