//! Closed-form size bounds and exact values for weight-3 codes.
//!
//! Everything here is exact integer arithmetic.

use num_integer::gcd;

use crate::error::{Error, Result};

fn gcd3(m: u64, n: u64, k: u64) -> u64 {
    gcd(gcd(m, n), k)
}

fn check_lambda_a(lambda_a: u32) -> Result<()> {
    if matches!(lambda_a, 2 | 3) {
        Ok(())
    } else {
        Err(Error::param(format!("auto-correlation must be 2 or 3, got {lambda_a}")))
    }
}

/// Nested-floor Johnson bound `J(v, k, lam)`.
pub fn johnson(v: u64, k: u64, lam: u64) -> Result<u64> {
    if lam < 1 || k < lam + 1 || v <= k {
        return Err(Error::param(format!(
            "johnson bound needs v > k >= lam + 1 >= 2, got v={v} k={k} lam={lam}"
        )));
    }
    let mut acc = (v - lam) / (k - lam);
    for i in (1..lam).rev() {
        acc = (v - i) * acc / (k - i);
    }
    Ok(acc / k)
}

/// `⌊λa (v-1)(v-2)…(v-λc) / (k(k-1)…(k-λc))⌋` with `v = mn`.
pub fn bound_lambda_gap(m: u64, n: u64, k: u64, lambda_a: u64, lambda_c: u64) -> Result<u64> {
    if lambda_a <= lambda_c || lambda_c == 0 {
        return Err(Error::param(format!(
            "needs lambda_a > lambda_c >= 1, got {lambda_a} and {lambda_c}"
        )));
    }
    if k <= lambda_c {
        return Err(Error::param(format!("weight {k} must exceed lambda_c {lambda_c}")));
    }
    let v = (m * n) as u128;
    let (mut num, mut den) = (lambda_a as u128, k as u128);
    for i in 1..=lambda_c as u128 {
        num *= v.saturating_sub(i);
        den *= k as u128 - i;
    }
    Ok((num / den) as u64)
}

/// Size bound `⌊mn/4⌋` for auto-correlation 2 and cross-correlation 1.
pub fn bound_sawa(m: u64, n: u64) -> u64 {
    let v = m * n;
    if v % 4 == 0 {
        v / 4
    } else {
        (v - 1) / 4
    }
}

/// Number of order-3 subgroups of `Z_m x Z_n`.
pub fn xi(m: u64, n: u64) -> u64 {
    if (m * n) % 3 != 0 {
        0
    } else if gcd3(m, n, 3) == 3 {
        4
    } else {
        1
    }
}

/// Number of Type-2 codewords a code may afford: 0 for `λa = 2`, `xi` for `λa = 3`.
pub fn omega(m: u64, n: u64, lambda_a: u32) -> Result<u64> {
    check_lambda_a(lambda_a)?;
    Ok(if lambda_a == 2 { 0 } else { xi(m, n) })
}

const SPORADIC_LAMBDA3: [(u64, u64); 6] = [(2, 12), (4, 6), (6, 4), (6, 12), (12, 2), (12, 6)];

/// Piecewise upper bound on the size of a code with auto-correlation 2 or 3
/// and cross-correlation 1. Guards are tried in order; sporadic pairs first.
pub fn theta_upper(m: u64, n: u64, lambda_a: u32) -> Result<u64> {
    if m == 0 || n == 0 {
        return Err(Error::param("moduli must be positive"));
    }
    let w = omega(m, n, lambda_a)?;
    let v = m * n;
    let pair = (m, n);
    let (g2, g4, g8) = (gcd3(m, n, 2), gcd3(m, n, 4), gcd3(m, n, 8));

    if pair == (12, 3) || pair == (3, 12) {
        return Ok(7 + w / 2);
    }
    if pair == (2, 4) || pair == (4, 2) {
        return Ok(1);
    }
    if lambda_a == 3 && SPORADIC_LAMBDA3.contains(&pair) {
        return Ok((5 * v + 8 + 8 * w) / 24);
    }
    if lambda_a == 2 && v % 64 == 32 && g8 == 4 {
        return Ok((13 * v - 32) / 64);
    }
    if lambda_a == 2 && v % 192 == 144 && g4 == 4 {
        return Ok((13 * v - 16) / 64);
    }
    let bound = match v % 4 {
        1..=3 => (v + 2 * w) / 4,
        _ if v % 8 == 0 && g2 == 1 => (7 * v + 16 * w) / 32,
        _ if v % 8 == 4 && g2 == 1 => (7 * v + 4 + 16 * w) / 32,
        _ if v % 8 == 4 => (5 * v + 4 + 8 * w) / 24,
        _ if v % 16 == 8 => (13 * v + 40 + 32 * w) / 64,
        _ if v % 32 == 0 || (v % 32 == 16 && g4 == 2) => (13 * v + 32 + 32 * w) / 64,
        _ => {
            debug_assert!(v % 32 == 16 && g4 == 4);
            (13 * v + 48 + 32 * w) / 64
        }
    };
    Ok(bound)
}

/// The tighter of the two auto-correlation bounds when `3 ∤ mn`, where
/// codes with auto-correlation 2 and 3 are the same objects.
pub fn theta_best_upper(m: u64, n: u64, lambda_a: u32) -> Result<u64> {
    let own = theta_upper(m, n, lambda_a)?;
    if (m * n) % 3 == 0 {
        return Ok(own);
    }
    Ok(own.min(theta_upper(m, n, 2)?).min(theta_upper(m, n, 3)?))
}

/// Exact maximum size when `m ≡ n ≡ 2 (mod 4)`.
pub fn theta_exact_2mod4(m: u64, n: u64, lambda_a: u32) -> Result<u64> {
    if m % 4 != 2 || n % 4 != 2 {
        return Err(Error::param(format!("needs m = n = 2 (mod 4), got ({m},{n})")));
    }
    let w = omega(m, n, lambda_a)?;
    Ok((5 * m * n + 4 + 8 * w) / 24)
}

/// Maximum size of a code with `λa = λc = 1`.
pub fn theta_lambda1(m: u64, n: u64) -> Result<u64> {
    let v = m * n;
    if v <= 3 {
        return Ok(0);
    }
    let j = johnson(v, 3, 1)?;
    let g4 = gcd3(m, n, 4);
    let deficient = matches!(v % 24, 14 | 20)
        || (matches!(v % 24, 8 | 16) && g4 == 2)
        || (v % 6 == 2 && g4 == 4);
    Ok(if deficient { j - 1 } else { j })
}

/// Maximum size of a one-dimensional code of length `v ≡ 0 (mod 4)`.
pub fn phi_1d(v: u64, lambda_a: u32) -> Result<u64> {
    check_lambda_a(lambda_a)?;
    if v == 0 || v % 4 != 0 {
        return Err(Error::param(format!("length must be a positive multiple of 4, got {v}")));
    }
    if v == 64 {
        return Ok(13);
    }
    Ok(if lambda_a == 2 {
        if v % 8 == 0 {
            7 * v / 32
        } else {
            (7 * v + 4) / 32
        }
    } else {
        match v % 24 {
            0 if v == 48 => 10,
            0 => (7 * v + 16) / 32,
            4 | 20 => (7 * v + 4) / 32,
            8 | 16 => 7 * v / 32,
            _ => (7 * v + 20) / 32,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn johnson_examples() {
        assert_eq!(johnson(13, 3, 1).unwrap(), 2);
        assert_eq!(johnson(7, 3, 1).unwrap(), 1);
        assert_eq!(johnson(9, 3, 2).unwrap(), 9);
        assert!(johnson(3, 3, 1).is_err());
        assert!(johnson(10, 3, 3).is_err());
    }

    #[test]
    fn lambda_gap_examples() {
        assert_eq!(bound_lambda_gap(6, 6, 3, 2, 1).unwrap(), 11);
        assert_eq!(bound_lambda_gap(2, 2, 3, 2, 1).unwrap(), 1);
        assert_eq!(bound_lambda_gap(6, 6, 3, 3, 1).unwrap(), 17);
        assert!(bound_lambda_gap(6, 6, 3, 1, 1).is_err());
    }

    #[test]
    fn sawa_examples() {
        assert_eq!(bound_sawa(6, 6), 9);
        assert_eq!(bound_sawa(5, 6), 7);
        assert_eq!(bound_sawa(4, 4), 4);
        assert_eq!(bound_sawa(2, 2), 1);
    }

    #[test]
    fn xi_omega_examples() {
        assert_eq!(xi(6, 6), 4);
        assert_eq!(omega(6, 6, 3).unwrap(), 4);
        assert_eq!(xi(2, 6), 1);
        assert_eq!(omega(2, 6, 2).unwrap(), 0);
        assert_eq!(xi(5, 7), 0);
        assert!(omega(5, 7, 1).is_err());
    }

    #[test]
    fn xi_counts_order3_subgroups() {
        for m in 1..=15u32 {
            for n in 1..=15u32 {
                let g = crate::group::GridGroup::new(m, n).unwrap();
                assert_eq!(g.order3_subgroups().len() as u64, xi(m as u64, n as u64), "({m},{n})");
            }
        }
    }

    #[test]
    fn theta_upper_examples() {
        assert_eq!(theta_upper(6, 6, 2).unwrap(), 7);
        assert_eq!(theta_upper(3, 12, 3).unwrap(), 9);
        assert_eq!(theta_upper(2, 4, 2).unwrap(), 1);
        assert_eq!(theta_upper(4, 8, 2).unwrap(), 6);
        assert_eq!(theta_upper(12, 12, 2).unwrap(), 29);
        assert_eq!(theta_upper(4, 8, 3).unwrap(), 7);
    }

    #[test]
    fn theta_best_examples() {
        assert_eq!(theta_best_upper(4, 8, 3).unwrap(), 6);
        assert_eq!(theta_best_upper(2, 72, 3).unwrap(), 30);
        assert_eq!(theta_best_upper(6, 6, 3).unwrap(), 9);
    }

    #[test]
    fn theta_upper_symmetric_and_monotone() {
        for m in 1..=100 {
            for n in 1..=100 {
                for la in [2, 3] {
                    assert_eq!(theta_upper(m, n, la).unwrap(), theta_upper(n, m, la).unwrap());
                }
                assert!(theta_upper(m, n, 3).unwrap() >= theta_upper(m, n, 2).unwrap(), "({m},{n})");
            }
        }
    }

    #[test]
    fn exact_2mod4_examples() {
        assert_eq!(theta_exact_2mod4(10, 10, 2).unwrap(), 21);
        assert_eq!(theta_exact_2mod4(6, 6, 3).unwrap(), 9);
        assert_eq!(theta_exact_2mod4(2, 2, 2).unwrap(), 1);
        assert!(theta_exact_2mod4(4, 6, 2).is_err());
    }

    #[test]
    fn exact_2mod4_agrees_with_upper() {
        for m in (2..=102).step_by(4) {
            for n in (2..=102).step_by(4) {
                for la in [2, 3] {
                    assert_eq!(theta_exact_2mod4(m, n, la).unwrap(), theta_upper(m, n, la).unwrap());
                }
            }
        }
    }

    #[test]
    fn lambda1_examples() {
        assert_eq!(theta_lambda1(5, 5).unwrap(), 4);
        assert_eq!(theta_lambda1(2, 7).unwrap(), 1);
        assert_eq!(theta_lambda1(1, 7).unwrap(), 1);
        assert_eq!(theta_lambda1(3, 3).unwrap(), 1);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_1d(64, 2).unwrap(), 13);
        assert_eq!(phi_1d(48, 3).unwrap(), 10);
        assert_eq!(phi_1d(24, 3).unwrap(), 5);
        assert!(phi_1d(10, 2).is_err());
    }

    #[test]
    fn phi_within_upper_bound_for_coprime_moduli() {
        for m in 1..=200u64 {
            for n in 1..=200u64 {
                let v = m * n;
                if v > 200 || v % 4 != 0 || gcd(m, n) != 1 || v == 48 || v == 64 {
                    continue;
                }
                for la in [2, 3] {
                    assert!(phi_1d(v, la).unwrap() <= theta_upper(m, n, la).unwrap(), "({m},{n},{la})");
                }
            }
        }
    }
}
