//! Upper bound on the period of a special orientable sequence, in closed form and by
//! exhaustive classification of all `q^n` tuples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::neg_mod;

/// Default ceiling on the number of tuples [`sos_bound_oracle`] will enumerate.
pub const DEFAULT_MAX_TUPLES: u128 = 10_000_000;

/// Classification of all `n`-tuples over `Z_q` by the relations between `s`, `s^R`, `-s`
/// and `-s^R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundBreakdown {
    pub q: u32,
    pub n: u32,
    /// `s = s^R = -s = -s^R`.
    pub count_fixed_both: u128,
    /// `s = -s`, `s != s^R`.
    pub count_negself: u128,
    /// `s = s^R`, `s != -s^R`.
    pub count_palindromic: u128,
    /// `s = -s^R`, `s != s^R`.
    pub count_antipalindromic: u128,
    /// `s`, `-s`, `s^R`, `-s^R` pairwise distinct.
    pub count_free: u128,
    pub bound: u128,
}

fn check_params(q: u32, n: u32) -> Result<()> {
    if q <= 1 {
        return Err(Error::InvalidModulus(q));
    }
    if n <= 1 {
        return Err(Error::WindowTooShort {
            min: 2,
            got: n as usize,
        });
    }
    Ok(())
}

fn pow(base: u128, exp: u32) -> Result<u128> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::InvalidParameters(format!("{base}^{exp} overflows u128")))
}

/// Maximum possible period of an `SOS_q(n)`.
pub fn sos_bound(q: u32, n: u32) -> Result<u128> {
    check_params(q, n)?;
    let qq = q as u128;
    let qn = pow(qq, n)?;
    let twice = match (q % 2 == 1, n % 2 == 1) {
        (true, true) => qn + 1 - pow(qq, (n + 1) / 2)? - pow(qq, (n - 1) / 2)?,
        (true, false) => qn + 1 - 2 * pow(qq, n / 2)?,
        (false, true) => {
            qn + pow(2, (n + 3) / 2)?
                - pow(qq, (n + 1) / 2)?
                - 2 * pow(qq, (n - 1) / 2)?
                - pow(2, (n + 1) / 2)?
        }
        (false, false) => qn + pow(2, (n + 2) / 2)? - 2 * pow(qq, n / 2)? - pow(2, n / 2)?,
    };
    debug_assert_eq!(twice % 2, 0);
    Ok(twice / 2)
}

pub fn sos_bound_oracle(q: u32, n: u32) -> Result<BoundBreakdown> {
    sos_bound_oracle_with_limit(q, n, DEFAULT_MAX_TUPLES)
}

/// Enumerates every tuple and classifies it; the bound is half of the tuples that can
/// appear at all, counted per tuple.
pub fn sos_bound_oracle_with_limit(q: u32, n: u32, max_tuples: u128) -> Result<BoundBreakdown> {
    check_params(q, n)?;
    let total = (q as u128).checked_pow(n).unwrap_or(u128::MAX);
    if total > max_tuples {
        return Err(Error::ResourceGuard {
            requested: total,
            limit: max_tuples,
        });
    }
    let len = n as usize;
    let mut b = BoundBreakdown {
        q,
        n,
        count_fixed_both: 0,
        count_negself: 0,
        count_palindromic: 0,
        count_antipalindromic: 0,
        count_free: 0,
        bound: 0,
    };
    let mut s = vec![0u32; len];
    loop {
        let palindrome = (0..len).all(|k| s[k] == s[len - 1 - k]);
        let antipalindrome = (0..len).all(|k| s[k] == neg_mod(s[len - 1 - k], q));
        let negself = s.iter().all(|&x| x == neg_mod(x, q));
        match (palindrome, antipalindrome, negself) {
            (true, true, _) => b.count_fixed_both += 1,
            (true, false, _) => b.count_palindromic += 1,
            (false, true, _) => b.count_antipalindromic += 1,
            (false, false, true) => b.count_negself += 1,
            (false, false, false) => b.count_free += 1,
        }
        // odometer increment
        let mut k = len;
        loop {
            if k == 0 {
                b.bound = (b.count_negself + b.count_free) / 2;
                return Ok(b);
            }
            k -= 1;
            s[k] += 1;
            if s[k] < q {
                break;
            }
            s[k] = 0;
        }
    }
}

/// Period of a maximal `OS_q(2)` from an Eulerian circuit: `q(q-1)/2` for odd `q`,
/// `q(q-2)/2` for even `q`.
pub fn os2_max_period(q: u32) -> Result<u64> {
    if q < 3 {
        return Err(Error::InvalidParameters(format!(
            "maximal OS_q(2) period needs q >= 3, got {q}"
        )));
    }
    let q = q as u64;
    Ok(if q % 2 == 1 {
        q * (q - 1) / 2
    } else {
        q * (q - 2) / 2
    })
}
