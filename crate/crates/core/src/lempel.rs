//! Lempel's difference map and its inverse, used to raise the window length of a special
//! orientable sequence by one, and the single-symbol insertion that restores a unit weight
//! so the lift can be repeated.

use std::collections::HashSet;

use serde::Serialize;

use crate::constructions::{make_u_star, make_u_starstar};
use crate::error::{Error, Result};
use crate::residue::{add_mod, gcd, neg_mod, Residue};
use crate::sequence::{RingSequence, MAX_PERIOD};
use crate::verify::{check_good, longest_zero_run, report};

/// `t_j = beta * (s_{j+1} - s_j)`.
pub fn d_beta(s: &RingSequence, beta: u32) -> Result<RingSequence> {
    let q = s.q();
    let b = beta as u64 % q as u64;
    let m = s.period() as i64;
    let terms = (0..m)
        .map(|j| {
            let diff = add_mod(s.at(j + 1), neg_mod(s.at(j), q), q) as u64;
            (b * diff % q as u64) as u32
        })
        .collect();
    Ok(RingSequence::from_parts_unchecked(q, terms))
}

/// Period of the inverse image of a sequence with period `m` and weight `w` over `Z_q`.
pub fn lift_period(m: usize, weight_mod: u32, q: u32) -> u128 {
    m as u128 * (q as u128 / gcd(weight_mod as u64, q as u64) as u128)
}

/// Inverse of [`d_beta`] with `beta = 1`: `t_0 = start`, `t_{j+1} = t_j + s_j`.
pub fn d_inverse(s: &RingSequence, start: u32) -> Result<RingSequence> {
    d_inverse_beta(s, 1, start)
}

/// Inverse of [`d_beta`] for a unit `beta`: `t_{j+1} = t_j + beta^{-1} s_j`, continued
/// until the sequence closes up.
pub fn d_inverse_beta(s: &RingSequence, beta: u32, start: u32) -> Result<RingSequence> {
    let q = s.q();
    let inv = Residue::new(beta as i64, q)?
        .inverse()
        .ok_or_else(|| Error::InvalidParameters(format!("beta = {beta} is not a unit mod {q}")))?
        .value() as u64;
    if start >= q {
        return Err(Error::TermOutOfRange {
            index: 0,
            value: start,
            modulus: q,
        });
    }
    let w = (s.weight() % q as u64 * inv % q as u64) as u32;
    let len = lift_period(s.period(), w, q);
    if len > MAX_PERIOD as u128 {
        return Err(Error::ResourceGuard {
            requested: len,
            limit: MAX_PERIOD as u128,
        });
    }
    let m = s.period();
    let mut terms = Vec::with_capacity(len as usize);
    let mut t = start;
    for j in 0..len as usize {
        terms.push(t);
        t = add_mod(t, (s.terms()[j % m] as u64 * inv % q as u64) as u32, q);
    }
    debug_assert_eq!(t, start);
    Ok(RingSequence::from_parts_unchecked(q, terms))
}

/// Result of inserting one symbol into a special orientable sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub sequence: RingSequence,
    pub symbol: u32,
    /// Index of the inserted symbol in the new sequence.
    pub position: usize,
}

/// Inserts one copy of `a` into `T`, keeping it special (and good, when it was good).
/// With `a = 1 - w(T)` the weight of the result is 1.
///
/// Insertion points right after a maximal run of `n - 2` copies of `a` with distinct
/// neighbours are tried first, then every other position in order. Each candidate is
/// screened by comparing only the `n` new windows against the rest, then the winner is
/// certified in full.
pub fn extend_ea(t: &RingSequence, a: u32, n: usize) -> Result<Extension> {
    let q = t.q();
    if a >= q {
        return Err(Error::TermOutOfRange {
            index: 0,
            value: a,
            modulus: q,
        });
    }
    let before = report(t, n)?;
    if !before.is_special {
        return Err(Error::Precondition(format!(
            "input is not special: {:?}",
            before.violations
        )));
    }
    let keep_good = before.is_good;
    let expected_weight = add_mod(before.weight_mod, a, q);
    let len = t.period();
    if len < n {
        return Err(Error::Precondition(format!(
            "period {len} is shorter than the window length {n}"
        )));
    }
    let terms = t.terms();
    let doubled: Vec<u32> = terms.iter().chain(terms).copied().collect();
    let window_slice = |i: usize| &doubled[i..i + n];
    let windows: HashSet<&[u32]> = (0..len).map(window_slice).collect();

    let mut preferred = Vec::new();
    let run = n - 2;
    for i in 0..len {
        let b = terms[(i + len - 1) % len];
        let c = terms[(i + run) % len];
        if b != a
            && c != a
            && b != c
            && (0..run).all(|k| terms[(i + k) % len] == a)
        {
            preferred.push((i + run) % len);
        }
    }
    let preferred_set: HashSet<usize> = preferred.iter().copied().collect();
    let rest = (0..len).filter(|p| !preferred_set.contains(p));
    let zero_limit = n.saturating_sub(2);

    for p in preferred.clone().into_iter().chain(rest) {
        // new sequence: terms[..p] + [a] + terms[p..]; windows starting p-n+1..=p are new
        let mut local = Vec::with_capacity(2 * n - 1);
        for k in (1..n).rev() {
            local.push(terms[(p + len * n - k) % len]);
        }
        local.push(a);
        for k in 0..n - 1 {
            local.push(terms[(p + k) % len]);
        }
        let fresh: Vec<&[u32]> = (0..n).map(|k| &local[k..k + n]).collect();
        let removed: HashSet<&[u32]> = (1..n)
            .map(|k| window_slice((p + len * n - k) % len))
            .collect();
        let present = |w: &[u32]| windows.contains(w) && !removed.contains(w);
        let mut ok = true;
        'check: for (x, &w) in fresh.iter().enumerate() {
            let rev: Vec<u32> = w.iter().rev().copied().collect();
            let negrev: Vec<u32> = rev.iter().map(|&v| neg_mod(v, q)).collect();
            if present(w) || present(&rev) || present(&negrev) {
                ok = false;
                break;
            }
            for (y, &other) in fresh.iter().enumerate() {
                if (x != y && other == w) || other == rev.as_slice() || other == negrev.as_slice()
                {
                    ok = false;
                    break 'check;
                }
            }
        }
        if !ok {
            continue;
        }
        if keep_good && a == 0 {
            let mut left = 0;
            while left < len && terms[(p + len - 1 - left) % len] == 0 {
                left += 1;
            }
            let mut right = 0;
            while right < len && terms[(p + right) % len] == 0 {
                right += 1;
            }
            if left + right + 1 > zero_limit {
                continue;
            }
        }
        let mut out = Vec::with_capacity(len + 1);
        out.extend_from_slice(&terms[..p]);
        out.push(a);
        out.extend_from_slice(&terms[p..]);
        let sequence = RingSequence::new(q, out)?;
        let r = report(&sequence, n)?;
        let fail = |detail: String| Error::Certification {
            stage: "E_a".into(),
            detail,
        };
        if !r.is_special {
            return Err(fail(format!("not special: {:?}", r.violations)));
        }
        if keep_good && !r.is_good {
            return Err(fail(format!(
                "not good, longest zero run {:?}",
                longest_zero_run(&sequence)
            )));
        }
        if r.weight_mod != expected_weight {
            return Err(fail(format!("weight {} != {expected_weight}", r.weight_mod)));
        }
        return Ok(Extension {
            sequence,
            symbol: a,
            position: p,
        });
    }
    Err(Error::NoValidInsertion { symbol: a })
}

/// One lift step: `D^{-1}` followed by [`extend_ea`]. Both stages are certified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerLevel {
    pub n: usize,
    pub lifted_period: usize,
    pub extension: Extension,
}

/// Lifts a good `SOS(n)` with unit weight to orders `n+1, ..., n+levels`. Each level has
/// period `q * m + 1` and weight 1.
pub fn tower(base: &RingSequence, n: usize, levels: usize) -> Result<Vec<TowerLevel>> {
    if !check_good(base, n)? {
        return Err(Error::Precondition("starting sequence is not good".into()));
    }
    let mut out: Vec<TowerLevel> = Vec::with_capacity(levels);
    let mut current = base.clone();
    for level in 0..levels {
        let order = n + level;
        let lifted = lift_certified(&current, order)?;
        let a = add_mod(1, neg_mod(lifted.weight_mod().value(), lifted.q()), lifted.q());
        let extension = extend_ea(&lifted, a, order + 1)?;
        current = extension.sequence.clone();
        out.push(TowerLevel {
            n: order + 1,
            lifted_period: lifted.period(),
            extension,
        });
    }
    Ok(out)
}

/// `D^{-1}` of a special sequence of order `n` with unit weight, certified special of order
/// `n + 1` with period `q * m`, and good when the input was good.
pub fn lift_certified(s: &RingSequence, n: usize) -> Result<RingSequence> {
    let r = report(s, n)?;
    if !r.is_special {
        return Err(Error::Precondition(format!(
            "input is not special: {:?}",
            r.violations
        )));
    }
    if gcd(r.weight_mod as u64, s.q() as u64) != 1 {
        return Err(Error::Precondition(format!(
            "weight {} is not a unit mod {}",
            r.weight_mod,
            s.q()
        )));
    }
    let lifted = d_inverse(s, 0)?;
    let after = report(&lifted, n + 1)?;
    let fail = |detail: String| Error::Certification {
        stage: "D^-1".into(),
        detail,
    };
    if !after.is_special {
        return Err(fail(format!("not special: {:?}", after.violations)));
    }
    if after.period != s.period() * s.q() as usize {
        return Err(fail(format!("period {}", after.period)));
    }
    if r.is_good && !after.is_good {
        return Err(fail("goodness lost".into()));
    }
    Ok(lifted)
}

/// `SOS_{q'}(3)` of period `q' * (4m - 3)`: the lift of `U*` built from `q = (q'-1)/2` for
/// odd `q'` and `q = (q'-2)/2` for even `q'`.
pub fn sos3(q_prime: u32) -> Result<RingSequence> {
    if q_prime < 11 {
        return Err(Error::InvalidParameters(format!(
            "sos3 needs q' >= 11, got {q_prime}"
        )));
    }
    let q = if q_prime % 2 == 1 {
        (q_prime - 1) / 2
    } else {
        (q_prime - 2) / 2
    };
    lift_certified(&make_u_star(q, q_prime)?, 2)
}

/// Good `SOS_{q'}(n)` with weight 1 from `U**` and `n - 2` tower steps.
pub fn sos_general(q_prime: u32, n: usize) -> Result<RingSequence> {
    if n < 2 {
        return Err(Error::WindowTooShort { min: 2, got: n });
    }
    if q_prime < 12 {
        return Err(Error::InvalidParameters(format!(
            "sos_general needs q' >= 12, got {q_prime}"
        )));
    }
    let q = if q_prime % 2 == 0 {
        (q_prime.saturating_sub(2)) / 2
    } else {
        (q_prime.saturating_sub(3)) / 2
    };
    let base = make_u_starstar(q, q_prime)?;
    if n == 2 {
        return Ok(base);
    }
    let levels = tower(&base, 2, n - 2)?;
    Ok(levels.into_iter().last().expect("n > 2").extension.sequence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::check_special;

    fn seq(q: u32, t: &[u32]) -> RingSequence {
        RingSequence::new(q, t.to_vec()).unwrap()
    }

    #[test]
    fn difference_and_inverse_round_trip() {
        let s = seq(7, &[0, 1, 3, 2, 6]);
        let t = d_inverse(&s, 4).unwrap();
        assert_eq!(t.period(), lift_period(5, s.weight_mod().value(), 7) as usize);
        assert_eq!(t.terms()[0], 4);
        let back = d_beta(&t, 1).unwrap();
        assert_eq!(&back.terms()[..5], s.terms());
        assert_eq!(back.period() % 5, 0);
    }

    #[test]
    fn general_beta_inverse() {
        let s = seq(9, &[1, 2, 0, 4]);
        let t = d_inverse_beta(&s, 4, 0).unwrap();
        let back = d_beta(&t, 4).unwrap();
        assert_eq!(&back.terms()[..4], s.terms());
        assert!(d_inverse_beta(&s, 3, 0).is_err());
    }

    #[test]
    fn lift_period_formula() {
        assert_eq!(lift_period(37, 2, 11), 407);
        assert_eq!(lift_period(10, 0, 12), 10);
        assert_eq!(lift_period(10, 6, 12), 20);
        let s = seq(12, &[1, 5, 0]);
        assert_eq!(d_inverse(&s, 0).unwrap().period(), 6);
    }

    #[test]
    fn sos3_periods() {
        assert_eq!(sos3(11).unwrap().period(), 407);
        assert_eq!(sos3(12).unwrap().period(), 444);
        assert_eq!(sos3(13).unwrap().period(), 585);
    }

    #[test]
    fn extension_sets_unit_weight() {
        let base = make_u_starstar(5, 12).unwrap();
        let lifted = lift_certified(&base, 2).unwrap();
        assert_eq!(lifted.period(), 444);
        assert_eq!(lifted.weight_mod().value(), 6);
        let ext = extend_ea(&lifted, 7, 3).unwrap();
        assert_eq!(ext.symbol, 7);
        assert_eq!(ext.sequence.period(), 445);
        assert_eq!(ext.sequence.weight_mod().value(), 1);
        assert!(check_special(&ext.sequence, 3).unwrap().holds);
    }

    #[test]
    fn lift_requires_unit_weight() {
        let u = crate::constructions::make_u(&seq(5, &[0, 1, 2, 3, 4, 0, 2, 4, 1, 3]), 11, 2)
            .unwrap();
        assert!(matches!(lift_certified(&u, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn difference_examples() {
        assert_eq!(d_beta(&seq(5, &[1, 3, 0]), 2).unwrap().terms(), &[4, 4, 2]);
        assert_eq!(d_beta(&seq(6, &[0, 1, 2, 3, 4, 5]), 1).unwrap().terms(), &[1; 6]);
        assert_eq!(d_beta(&seq(6, &[4, 4]), 5).unwrap().terms(), &[0, 0]);
        assert_eq!(d_inverse(&seq(6, &[1]), 0).unwrap().terms(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn weight_zero_lift_does_not_grow() {
        let u = crate::constructions::make_u(&seq(5, &[0, 1, 2, 3, 4, 0, 2, 4, 1, 3]), 11, 2)
            .unwrap();
        assert_eq!(d_inverse(&u, 0).unwrap().period(), 40);
    }

    #[test]
    fn extension_weight_identity() {
        let lifted = sos3(11).unwrap();
        let w = lifted.weight_mod().value();
        for a in [1u32, 5] {
            if let Ok(ext) = extend_ea(&lifted, a, 3) {
                assert_eq!(ext.sequence.weight_mod().value(), (w + a) % 11);
                assert_eq!(ext.sequence.period(), 408);
            }
        }
        assert!(extend_ea(&lifted, 11, 3).is_err());
    }

    #[test]
    fn tower_rejects_bad_start() {
        let u_star = make_u_star(5, 11).unwrap();
        assert!(matches!(tower(&u_star, 2, 1), Err(Error::Precondition(_))));
        let base = make_u_starstar(5, 12).unwrap();
        assert!(tower(&base, 2, 0).unwrap().is_empty());
    }

    #[test]
    fn general_sequences() {
        assert_eq!(sos_general(13, 2).unwrap().period(), 37);
        assert_eq!(sos_general(13, 2).unwrap().weight_mod().value(), 2);
        let s = sos_general(12, 3).unwrap();
        assert_eq!(s.period(), 445);
        let r = report(&s, 3).unwrap();
        assert!(r.is_special && r.is_good);
        assert_eq!(r.weight_mod, 1);
    }
}
