//! Pipelines that turn an orientable starter over `Z_q` into special orientable sequences
//! over a larger alphabet `Z_q'`.
//!
//! Every public constructor certifies its output with [`crate::verify::report`] before
//! returning it; a failed certification surfaces as [`Error::Certification`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::os2_max_period;
use crate::error::{Error, Result};
use crate::euler::{os2_maximal, os2_starter};
use crate::residue::{gcd, neg_mod};
use crate::sequence::RingSequence;
use crate::verify::{check_disjoint, check_orientable, check_special, report, PropertyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Embed,
    S2,
    T,
    T2,
    U,
    UStar,
    UPrime,
    UStarStar,
}

impl Variant {
    pub const ALL: [Variant; 8] = [
        Variant::Embed,
        Variant::S2,
        Variant::T,
        Variant::T2,
        Variant::U,
        Variant::UStar,
        Variant::UPrime,
        Variant::UStarStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Embed => "embed",
            Variant::S2 => "s2",
            Variant::T => "t",
            Variant::T2 => "t2",
            Variant::U => "u",
            Variant::UStar => "ustar",
            Variant::UPrime => "uprime",
            Variant::UStarStar => "ustarstar",
        }
    }

    /// Whether `(q, q')` satisfies this variant's modulus constraints.
    pub fn admits(self, q: u32, q_prime: u32) -> bool {
        let (q, qp) = (q as u64, q_prime as u64);
        match self {
            Variant::Embed | Variant::S2 => q >= 2 && qp >= 2 * q - 1 && 2 * q - 1 > 2,
            Variant::T | Variant::T2 => q >= 2 && qp >= 2 * q && 2 * q > 3,
            Variant::U => q >= 2 && qp >= 2 * q + 1 && 2 * q + 1 > 4,
            Variant::UStar => q > 4 && (qp == 2 * q + 1 || qp == 2 * q + 2),
            Variant::UPrime => q >= 2 && qp >= 2 * q + 2,
            Variant::UStarStar => q > 4 && (qp == 2 * q + 2 || qp == 2 * q + 3),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown variant {s:?}")))
    }
}

/// The three symbols whose cycle is cut out of `U` to adjust its weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchors {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Anchors {
    pub fn sum(&self) -> u64 {
        self.x as u64 + self.y as u64 + self.z as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub q: u32,
    pub q_prime: u32,
    pub n: usize,
    pub anchors: Option<Anchors>,
    pub variant: Variant,
}

impl ConstructionParams {
    pub fn new(variant: Variant, q: u32, q_prime: u32, n: usize) -> Self {
        Self {
            q,
            q_prime,
            n,
            anchors: None,
            variant,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::WindowTooShort {
                min: 2,
                got: self.n,
            });
        }
        if !self.variant.admits(self.q, self.q_prime) {
            return Err(Error::InvalidParameters(format!(
                "variant {} does not admit q = {}, q' = {}",
                self.variant, self.q, self.q_prime
            )));
        }
        if matches!(self.variant, Variant::UStar | Variant::UStarStar) && self.n != 2 {
            return Err(Error::InvalidParameters(format!(
                "variant {} is defined for n = 2 only",
                self.variant
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WeightClaim {
    Any,
    Exact(u64),
    UnitExact(u64),
}

struct Claims {
    special: bool,
    good: bool,
    period: Option<usize>,
    weight: WeightClaim,
}

fn certify(stage: &str, s: &RingSequence, n: usize, claims: Claims) -> Result<PropertyReport> {
    let r = report(s, n)?;
    let fail = |detail: String| Error::Certification {
        stage: stage.to_string(),
        detail,
    };
    if claims.special && !r.is_special {
        return Err(fail(format!("not special: {:?}", r.violations)));
    }
    if claims.good && !r.is_good {
        return Err(fail("not good".into()));
    }
    if let Some(p) = claims.period {
        if r.period != p {
            return Err(fail(format!("period {} != {p}", r.period)));
        }
    }
    let w = r.weight_mod as u64;
    match claims.weight {
        WeightClaim::Any => {}
        WeightClaim::Exact(e) if w != e => {
            return Err(fail(format!("weight {w} != {e}")));
        }
        WeightClaim::UnitExact(e) if w != e || gcd(w, s.q() as u64) != 1 => {
            return Err(fail(format!("weight {w} is not the unit {e}")));
        }
        _ => {}
    }
    Ok(r)
}

fn require_orientable(s: &RingSequence, n: usize) -> Result<()> {
    let r = check_orientable(s, n)?;
    if !r.holds {
        return Err(Error::Precondition(format!(
            "starter is not an orientable sequence of order {n}: {:?}",
            r.violations
        )));
    }
    Ok(())
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameters(msg()))
    }
}

/// Result of re-reading an orientable sequence over a larger alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub sequence: RingSequence,
    /// `q' >= 2q - 1`: the output is certified special. Otherwise no claim is made.
    pub special_guaranteed: bool,
}

pub fn embed_qprime(s: &RingSequence, q_prime: u32, n: usize) -> Result<Embedding> {
    require_orientable(s, n)?;
    let sequence = s.embed(q_prime)?;
    let special_guaranteed = q_prime as u64 >= 2 * s.q() as u64 - 1;
    if special_guaranteed {
        certify(
            "embed",
            &sequence,
            n,
            Claims {
                special: true,
                good: false,
                period: Some(s.period()),
                weight: WeightClaim::Any,
            },
        )?;
    }
    Ok(Embedding {
        sequence,
        special_guaranteed,
    })
}

/// `S'' = S' || -S'`.
pub fn make_s2(s: &RingSequence, q_prime: u32, n: usize) -> Result<RingSequence> {
    require(Variant::S2.admits(s.q(), q_prime), || {
        format!("S'' needs q' >= 2q - 1 > 2, got q = {}, q' = {q_prime}", s.q())
    })?;
    require_orientable(s, n)?;
    let embedded = s.embed(q_prime)?;
    let out = embedded.concat(&embedded.negate())?;
    certify(
        "S''",
        &out,
        n,
        Claims {
            special: true,
            good: false,
            period: Some(2 * s.period()),
            weight: WeightClaim::Exact(0),
        },
    )?;
    Ok(out)
}

/// Alternating-sign copy of the embedded starter with zeros replaced by `±q`.
fn alternating(s: &RingSequence, q_prime: u32) -> RingSequence {
    let (q, m) = (s.q(), s.period());
    let terms = s
        .terms()
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let magnitude = if x == 0 { q } else { x };
            if (i + m - 1) % 2 == 0 {
                magnitude
            } else {
                neg_mod(magnitude, q_prime)
            }
        })
        .collect();
    RingSequence::from_parts_unchecked(q_prime, terms)
}

pub fn make_t(s: &RingSequence, q_prime: u32, n: usize) -> Result<RingSequence> {
    require(Variant::T.admits(s.q(), q_prime), || {
        format!("T needs q' >= 2q > 3, got q = {}, q' = {q_prime}", s.q())
    })?;
    require_orientable(s, n)?;
    let out = alternating(s, q_prime);
    certify(
        "T",
        &out,
        n,
        Claims {
            special: true,
            good: false,
            period: Some(s.period()),
            weight: WeightClaim::Any,
        },
    )?;
    if out.count(0) != 0 {
        return Err(Error::Certification {
            stage: "T".into(),
            detail: "contains a zero".into(),
        });
    }
    Ok(out)
}

/// `T' = T || -T`.
pub fn make_t2(s: &RingSequence, q_prime: u32, n: usize) -> Result<RingSequence> {
    let t = make_t(s, q_prime, n)?;
    let out = t.concat(&t.negate())?;
    certify(
        "T'",
        &out,
        n,
        Claims {
            special: true,
            good: true,
            period: Some(2 * s.period()),
            weight: WeightClaim::Exact(0),
        },
    )?;
    Ok(out)
}

/// `U = S'' || T'`, period `4m`, weight zero. Requires `s_0 = 0`.
pub fn make_u(s: &RingSequence, q_prime: u32, n: usize) -> Result<RingSequence> {
    require(Variant::U.admits(s.q(), q_prime), || {
        format!("U needs q' >= 2q + 1 > 4, got q = {}, q' = {q_prime}", s.q())
    })?;
    if s.terms()[0] != 0 {
        return Err(Error::Precondition(format!(
            "U needs a starter with s_0 = 0, got s_0 = {}",
            s.terms()[0]
        )));
    }
    let s2 = make_s2(s, q_prime, n)?;
    let t2 = make_t2(s, q_prime, n)?;
    let out = s2.concat(&t2)?;
    certify(
        "U",
        &out,
        n,
        Claims {
            special: true,
            good: false,
            period: Some(4 * s.period()),
            weight: WeightClaim::Exact(0),
        },
    )?;
    Ok(out)
}

/// The anchor cycle removed from `U` when building the weight-adjusted sequence.
pub fn choose_xyz(q: u32, q_prime: u32) -> Result<Anchors> {
    let anchors = match (q, q_prime) {
        (5, 12) => Anchors { x: 0, y: 1, z: 4 },
        (6, 14) => Anchors { x: 0, y: 1, z: 2 },
        (q, qp) if q >= 5 && qp == 2 * q + 1 => Anchors {
            x: 2,
            y: q - 2,
            z: q - 1,
        },
        (q, qp) if q >= 7 && qp == 2 * q + 2 => Anchors {
            x: 4,
            y: q - 2,
            z: q - 1,
        },
        _ => {
            return Err(Error::InvalidParameters(format!(
                "no anchor choice for q = {q}, q' = {q_prime}"
            )))
        }
    };
    debug_assert_eq!(gcd(anchors.sum(), q_prime as u64), 1);
    Ok(anchors)
}

/// Weight-adjusted `U*` from a library-generated starter.
pub fn make_u_star(q: u32, q_prime: u32) -> Result<RingSequence> {
    require(Variant::UStar.admits(q, q_prime), || {
        format!("U* needs q > 4 and q' in {{2q+1, 2q+2}}, got q = {q}, q' = {q_prime}")
    })?;
    let a = choose_xyz(q, q_prime)?;
    let starter = os2_maximal(q, a.x, a.y, a.z, a.x != 0)?;
    make_u_star_from(&starter, q_prime, a)
}

/// Weight-adjusted `U*` from an explicit maximal `OS_q(2)` starter beginning with
/// `[x, y, z, x]` (when `x = 0`) or `[0, x, y, z, x]`.
pub fn make_u_star_from(starter: &RingSequence, q_prime: u32, a: Anchors) -> Result<RingSequence> {
    let q = starter.q();
    require(Variant::UStar.admits(q, q_prime), || {
        format!("U* needs q > 4 and q' in {{2q+1, 2q+2}}, got q = {q}, q' = {q_prime}")
    })?;
    let m = os2_max_period(q)? as usize;
    if starter.period() != m {
        return Err(Error::Precondition(format!(
            "starter period {} is not the maximal {m}",
            starter.period()
        )));
    }
    let (form, cut) = if a.x == 0 {
        (vec![a.x, a.y, a.z, a.x], 0..3)
    } else {
        (vec![0, a.x, a.y, a.z, a.x], 1..4)
    };
    if !starter.terms().starts_with(&form) {
        return Err(Error::Precondition(format!(
            "starter must begin {form:?}, got {:?}",
            &starter.terms()[..form.len().min(starter.period())]
        )));
    }
    let u = make_u(starter, q_prime, 2)?;
    let mut terms = u.into_terms();
    terms.drain(cut);
    let out = RingSequence::new(q_prime, terms)?;
    let expected_weight = (q_prime as u64 - a.sum() % q_prime as u64) % q_prime as u64;
    certify(
        "U*",
        &out,
        2,
        Claims {
            special: true,
            good: false,
            period: Some(4 * m - 3),
            weight: WeightClaim::UnitExact(expected_weight),
        },
    )?;
    Ok(out)
}

/// Replaces the zeros of `U` half by `q + 1` and half by `q' - q - 1`.
///
/// Zeros are assigned in ring order: with `force_first_two` the first two become `q + 1`,
/// the rest alternate starting from `q' - q - 1`, and the latest free assignments are
/// flipped until both values are used equally often.
pub fn goodify(u: &RingSequence, q: u32, n: usize, force_first_two: bool) -> Result<RingSequence> {
    let qp = u.q();
    require(q >= 2 && qp as u64 >= 2 * q as u64 + 2, || {
        format!("goodify needs q' >= 2q + 2, got q = {q}, q' = {qp}")
    })?;
    let high = q + 1;
    let low = qp - q - 1;
    if let Some(i) = u.terms().iter().position(|&x| x == high || x == low) {
        return Err(Error::Precondition(format!(
            "input already contains replacement value {} at index {i}",
            u.terms()[i]
        )));
    }
    let zeros: Vec<usize> = (0..u.period()).filter(|&i| u.terms()[i] == 0).collect();
    if zeros.len() % 2 == 1 {
        return Err(Error::Precondition(format!(
            "odd number of zeros ({})",
            zeros.len()
        )));
    }
    let half = zeros.len() / 2;
    let forced = if force_first_two { 2 } else { 0 };
    if forced > half.max(1) * 2 || (force_first_two && high != low && half < 2) {
        return Err(Error::Precondition(format!(
            "cannot force two zeros to {high} with only {} zeros",
            zeros.len()
        )));
    }
    let mut values: Vec<u32> = (0..zeros.len())
        .map(|k| {
            if k < forced || (k - forced) % 2 == 1 {
                high
            } else {
                low
            }
        })
        .collect();
    if high != low {
        let mut excess_high = values.iter().filter(|&&v| v == high).count() as i64 - half as i64;
        for k in (forced..values.len()).rev() {
            if excess_high > 0 && values[k] == high {
                values[k] = low;
                excess_high -= 1;
            } else if excess_high < 0 && values[k] == low {
                values[k] = high;
                excess_high += 1;
            }
        }
    }
    let mut terms = u.terms().to_vec();
    for (&i, &v) in zeros.iter().zip(&values) {
        terms[i] = v;
    }
    let out = RingSequence::new(qp, terms)?;
    certify(
        "U'",
        &out,
        n,
        Claims {
            special: check_special(u, n)?.holds,
            good: true,
            period: Some(u.period()),
            weight: WeightClaim::Exact(u.weight_mod().value() as u64),
        },
    )?;
    Ok(out)
}

/// Good, unit-weight `U**` from a library-generated starter.
pub fn make_u_starstar(q: u32, q_prime: u32) -> Result<RingSequence> {
    require(Variant::UStarStar.admits(q, q_prime), || {
        format!("U** needs q > 4 and q' in {{2q+2, 2q+3}}, got q = {q}, q' = {q_prime}")
    })?;
    let starter = os2_maximal(q, 0, 1, q - 1, false)?;
    make_u_starstar_from(&starter, q_prime)
}

/// Good, unit-weight `U**` from an explicit maximal `OS_q(2)` starter beginning
/// `[0, 1, q-1, 0]`.
pub fn make_u_starstar_from(starter: &RingSequence, q_prime: u32) -> Result<RingSequence> {
    let q = starter.q();
    require(Variant::UStarStar.admits(q, q_prime), || {
        format!("U** needs q > 4 and q' in {{2q+2, 2q+3}}, got q = {q}, q' = {q_prime}")
    })?;
    let m = os2_max_period(q)? as usize;
    if starter.period() != m {
        return Err(Error::Precondition(format!(
            "starter period {} is not the maximal {m}",
            starter.period()
        )));
    }
    let form = [0, 1, q - 1, 0];
    if !starter.terms().starts_with(&form) {
        return Err(Error::Precondition(format!(
            "starter must begin {form:?}, got {:?}",
            &starter.terms()[..4.min(starter.period())]
        )));
    }
    let u = make_u(starter, q_prime, 2)?;
    let u_prime = goodify(&u, q, 2, true)?;
    let mut terms = u_prime.into_terms();
    terms.drain(0..3);
    let out = RingSequence::new(q_prime, terms)?;
    certify(
        "U**",
        &out,
        2,
        Claims {
            special: true,
            good: true,
            period: Some(4 * m - 3),
            weight: WeightClaim::UnitExact((q_prime - (2 * q + 1)) as u64),
        },
    )?;
    Ok(out)
}

/// Adds one to every integer representative and reads the result over `Z_{q+1}`.
///
/// The output is zero-free, but it is not special in general: a window `(0, q-1)` of the
/// input becomes `(1, q)`, which equals its own negated reverse. Check the result.
pub fn increment_embed(s: &RingSequence) -> Result<RingSequence> {
    let q = s.q() + 1;
    RingSequence::new(q, s.terms().iter().map(|&x| x + 1).collect())
}

/// Splices `S` and `-S` at their first shared `(n-1)`-tuple into one cycle of period `2m`.
pub fn join_negative(s: &RingSequence, n: usize) -> Result<RingSequence> {
    let special = check_special(s, n)?;
    if !special.holds {
        return Err(Error::Precondition(format!(
            "input is not special: {:?}",
            special.violations
        )));
    }
    let neg = s.negate();
    if !check_disjoint(s, &neg, n)?.tuple_disjoint {
        return Err(Error::Precondition(
            "some window occurs together with its negative".into(),
        ));
    }
    let k = n - 1;
    let mut first_in_neg = std::collections::HashMap::new();
    for j in 0..neg.period() {
        first_in_neg
            .entry(neg.window(j as i64, k).entries().to_vec())
            .or_insert(j);
    }
    let (i, j) = (0..s.period())
        .find_map(|i| {
            first_in_neg
                .get(s.window(i as i64, k).entries())
                .map(|&j| (i, j))
        })
        .ok_or_else(|| {
            Error::Precondition(format!("S and -S share no {k}-tuple"))
        })?;
    let out = s.rotate(i as i64).concat(&neg.rotate(j as i64))?;
    certify(
        "join",
        &out,
        n,
        Claims {
            special: true,
            good: false,
            period: Some(2 * s.period()),
            weight: WeightClaim::Exact(0),
        },
    )?;
    Ok(out)
}

/// Runs the pipeline selected by `params`. Without an explicit starter the library
/// generates a maximal `OS_q(2)` (anchored where the variant needs it).
pub fn construct(params: &ConstructionParams, starter: Option<&RingSequence>) -> Result<RingSequence> {
    params.validate()?;
    let ConstructionParams {
        q,
        q_prime,
        n,
        variant,
        ..
    } = *params;
    if let Some(s) = starter {
        if s.q() != q {
            return Err(Error::ModulusMismatch {
                left: q,
                right: s.q(),
            });
        }
    }
    let generated;
    let base = match starter {
        Some(s) => s,
        None if matches!(variant, Variant::UStar | Variant::UStarStar) => {
            return match variant {
                Variant::UStar => match params.anchors {
                    Some(a) => {
                        let s = os2_maximal(q, a.x, a.y, a.z, a.x != 0)?;
                        make_u_star_from(&s, q_prime, a)
                    }
                    None => make_u_star(q, q_prime),
                },
                _ => make_u_starstar(q, q_prime),
            };
        }
        None => {
            if n != 2 {
                return Err(Error::InvalidParameters(format!(
                    "generated starters have order 2; supply a starter for n = {n}"
                )));
            }
            generated = os2_starter(q)?;
            &generated
        }
    };
    match variant {
        Variant::Embed => Ok(embed_qprime(base, q_prime, n)?.sequence),
        Variant::S2 => make_s2(base, q_prime, n),
        Variant::T => make_t(base, q_prime, n),
        Variant::T2 => make_t2(base, q_prime, n),
        Variant::U => make_u(base, q_prime, n),
        Variant::UPrime => goodify(&make_u(base, q_prime, n)?, q, n, false),
        Variant::UStar => {
            let a = match params.anchors {
                Some(a) => a,
                None => choose_xyz(q, q_prime)?,
            };
            make_u_star_from(base, q_prime, a)
        }
        Variant::UStarStar => make_u_starstar_from(base, q_prime),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::check_good;

    fn seq(q: u32, t: &[u32]) -> RingSequence {
        RingSequence::new(q, t.to_vec()).unwrap()
    }

    const S5: [u32; 10] = [0, 1, 2, 3, 4, 0, 2, 4, 1, 3];
    const S5_ANCHORED: [u32; 10] = [0, 2, 3, 4, 2, 1, 0, 3, 1, 4];

    #[test]
    fn embed_examples() {
        let e = embed_qprime(&seq(5, &S5), 9, 2).unwrap();
        assert!(e.special_guaranteed);
        assert_eq!((e.sequence.q(), e.sequence.terms()), (9, &S5[..]));
        assert!(embed_qprime(&seq(5, &S5), 10, 2).unwrap().special_guaranteed);
        let small = embed_qprime(&seq(3, &[0, 1, 2]), 5, 2).unwrap();
        assert!(small.special_guaranteed);
        assert!(check_special(&small.sequence, 2).unwrap().holds);
        assert!(!embed_qprime(&seq(5, &S5), 7, 2).unwrap().special_guaranteed);
    }

    #[test]
    fn embed_rejects_non_orientable() {
        assert!(matches!(
            embed_qprime(&seq(3, &[0, 1, 0, 2]), 9, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn s2_examples() {
        let s = seq(5, &S5);
        assert_eq!(
            make_s2(&s, 9, 2).unwrap().terms(),
            &[0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 8, 7, 6, 5, 0, 7, 5, 8, 6]
        );
        assert_eq!(
            make_s2(&s, 10, 2).unwrap().terms(),
            &[0, 1, 2, 3, 4, 0, 2, 4, 1, 3, 0, 9, 8, 7, 6, 0, 8, 6, 9, 7]
        );
        assert!(make_s2(&s, 8, 2).is_err());
    }

    #[test]
    fn t_examples() {
        assert_eq!(
            make_t(&seq(5, &S5), 10, 2).unwrap().terms(),
            &[5, 1, 8, 3, 6, 5, 8, 4, 9, 3]
        );
        assert_eq!(
            make_t(&seq(5, &S5_ANCHORED), 11, 2).unwrap().terms(),
            &[6, 2, 8, 4, 9, 1, 6, 3, 10, 4]
        );
        assert!(make_t(&seq(5, &S5), 9, 2).is_err());
    }

    #[test]
    fn t_sign_follows_period_parity() {
        // odd period: exponent i + m - 1 is even at i = 0, so t_0 keeps its sign
        let s = seq(3, &[0, 1, 2]);
        let t = make_t(&s, 6, 2).unwrap();
        assert_eq!(t.terms(), &[3, 5, 2]);
    }

    #[test]
    fn t2_examples() {
        let t2 = make_t2(&seq(5, &S5), 10, 2).unwrap();
        assert_eq!(
            t2.terms(),
            &[5, 1, 8, 3, 6, 5, 8, 4, 9, 3, 5, 9, 2, 7, 4, 5, 2, 6, 1, 7]
        );
        assert!(check_good(&t2, 2).unwrap());
        assert_eq!(
            make_t2(&seq(5, &S5_ANCHORED), 11, 2).unwrap().terms(),
            &[6, 2, 8, 4, 9, 1, 6, 3, 10, 4, 5, 9, 3, 7, 2, 10, 5, 8, 1, 7]
        );
    }

    #[test]
    fn u_requires_leading_zero() {
        let s = seq(5, &S5).rotate(1);
        assert!(matches!(make_u(&s, 11, 2), Err(Error::Precondition(_))));
        assert!(make_u(&seq(5, &S5), 10, 2).is_err());
    }

    #[test]
    fn u_over_z11() {
        let u = make_u(&seq(5, &S5), 11, 2).unwrap();
        assert_eq!(u.period(), 40);
        assert_eq!(u.weight_mod().value(), 0);
        assert_eq!(&u.terms()[20..25], &[6, 1, 9, 3, 7]);
    }

    #[test]
    fn xyz_choices() {
        let a = |x, y, z| Anchors { x, y, z };
        assert_eq!(choose_xyz(5, 11).unwrap(), a(2, 3, 4));
        assert_eq!(choose_xyz(5, 12).unwrap(), a(0, 1, 4));
        assert_eq!(choose_xyz(6, 14).unwrap(), a(0, 1, 2));
        assert_eq!(choose_xyz(7, 16).unwrap(), a(4, 5, 6));
        assert_eq!(choose_xyz(6, 13).unwrap(), a(2, 4, 5));
        assert!(choose_xyz(4, 9).is_err());
        assert!(choose_xyz(7, 17).is_err());
        for q in 5..60u32 {
            for qp in [2 * q + 1, 2 * q + 2] {
                if let Ok(a) = choose_xyz(q, qp) {
                    assert_eq!(gcd(a.sum(), qp as u64), 1, "q={q} q'={qp}");
                    assert!(a.x != a.y && a.y != a.z && a.x != a.z);
                    assert!(a.y != 0 && a.z != 0);
                }
            }
        }
    }

    #[test]
    fn u_star_library_starters() {
        let u = make_u_star(5, 11).unwrap();
        assert_eq!(u.period(), 37);
        assert_eq!(u.weight_mod().value(), 2);
        let u = make_u_star(7, 15).unwrap();
        assert_eq!(u.period(), 81);
        assert_eq!(gcd(u.weight_mod().value() as u64, 15), 1);
    }

    #[test]
    fn u_star_rejects_wrong_prefix() {
        let a = choose_xyz(5, 11).unwrap();
        assert!(matches!(
            make_u_star_from(&seq(5, &S5), 11, a),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn goodify_preconditions() {
        let u = make_u(&seq(5, &S5), 11, 2).unwrap();
        assert!(goodify(&u, 5, 2, false).is_err());
        let odd = seq(12, &[0, 1, 2]);
        assert!(matches!(goodify(&odd, 5, 2, false), Err(Error::Precondition(_))));
        let collide = seq(12, &[0, 6, 0, 1]);
        assert!(matches!(goodify(&collide, 5, 2, false), Err(Error::Precondition(_))));
    }

    #[test]
    fn goodify_balances_distinct_values() {
        let u = make_u(&seq(5, &S5), 13, 2).unwrap();
        let g = goodify(&u, 5, 2, true).unwrap();
        let zeros: Vec<usize> = (0..u.period()).filter(|&i| u.terms()[i] == 0).collect();
        assert_eq!(zeros.len(), 4);
        assert_eq!(g.terms()[zeros[0]], 6);
        assert_eq!(g.terms()[zeros[1]], 6);
        assert_eq!(g.count(6), 2);
        assert_eq!(g.count(7), 2);
        assert_eq!(g.weight_mod().value(), 0);
    }

    #[test]
    fn u_starstar_library_starters() {
        for (q, qp, w) in [(5, 12, 1), (5, 13, 2), (6, 14, 1), (6, 15, 2)] {
            let u = make_u_starstar(q, qp).unwrap();
            let m = os2_max_period(q).unwrap() as usize;
            assert_eq!(u.period(), 4 * m - 3);
            assert_eq!(u.weight_mod().value(), w);
            assert!(check_good(&u, 2).unwrap());
        }
        assert_eq!(make_u_starstar(6, 14).unwrap().period(), 45);
    }

    #[test]
    fn increment_embed_examples() {
        let s = increment_embed(&seq(3, &[0, 1, 2])).unwrap();
        assert_eq!((s.q(), s.terms()), (4, &[1, 2, 3][..]));
        let s2 = make_s2(&seq(5, &S5), 9, 2).unwrap();
        let inc = increment_embed(&s2).unwrap();
        assert_eq!(inc.q(), 10);
        let r = report(&inc, 2).unwrap();
        assert!(r.is_good && r.is_orientable);
        // (0, 8) becomes (1, 9), its own negated reverse over Z_10
        assert!(!r.is_negative_orientable);
        let u = make_u(&seq(5, &S5), 11, 2).unwrap();
        let r = report(&increment_embed(&u).unwrap(), 2).unwrap();
        assert!(r.is_good && !r.is_negative_orientable);
        assert_eq!(r.violations[0].tuple, vec![1, 11]);
        assert_eq!(increment_embed(&seq(7, &[5, 5])).unwrap().terms(), &[6, 6]);
    }

    #[test]
    fn join_negative_splices_at_shared_symbol() {
        let s = seq(9, &S5);
        let joined = join_negative(&s, 2).unwrap();
        assert_eq!(joined.period(), 20);
        assert_eq!(joined.weight_mod().value(), 0);
        assert!(check_special(&joined, 2).unwrap().holds);
    }

    #[test]
    fn join_negative_needs_shared_tuple() {
        // the T-style sequence has no zero, and its negative lives in the other band
        let t = seq(11, &[1, 2, 3]);
        assert!(matches!(join_negative(&t, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn construct_dispatch() {
        let p = ConstructionParams::new(Variant::T2, 5, 10, 2);
        let out = construct(&p, Some(&seq(5, &S5))).unwrap();
        assert_eq!(out.period(), 20);
        let p = ConstructionParams::new(Variant::U, 5, 10, 2);
        assert!(construct(&p, None).is_err());
        let p = ConstructionParams::new(Variant::UStarStar, 5, 12, 2);
        assert_eq!(construct(&p, None).unwrap().period(), 37);
        assert_eq!("ustar".parse::<Variant>().unwrap(), Variant::UStar);
        assert!("v".parse::<Variant>().is_err());
    }
}
