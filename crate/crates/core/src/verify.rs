//! Decision procedures for the window, orientable, negative-orientable, special and good
//! properties, each returning the lexicographically first witness on failure.
//!
//! Every check hashes the `m` cyclic windows once, so a full report costs `O(m n)` time and
//! `O(m)` space.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::neg_mod;
use crate::sequence::RingSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// `s_n(i) = s_n(j)` with `i != j`.
    Repeat,
    /// `s_n(i) = s_n(j)^R`.
    Reverse,
    /// `s_n(i) = -s_n(j)^R`.
    NegativeReverse,
}

/// A witness pair. `tuple` is the window at `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub i: usize,
    pub j: usize,
    pub tuple: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub holds: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub q: u32,
    pub n: usize,
    pub period: usize,
    pub weight: u64,
    pub weight_mod: u32,
    pub is_window: bool,
    pub is_orientable: bool,
    pub is_negative_orientable: bool,
    pub is_special: bool,
    pub is_good: bool,
    pub violations: Vec<Violation>,
}

/// Flags of the three disjointness relations between two sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disjointness {
    pub tuple_disjoint: bool,
    pub o_disjoint: bool,
    pub n_disjoint: bool,
}

impl Disjointness {
    pub fn s_disjoint(&self) -> bool {
        self.tuple_disjoint && self.o_disjoint && self.n_disjoint
    }
}

/// Hashable encoding of an `n`-tuple over `Z_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum WindowKey {
    Packed(u128),
    Wide(Box<[u32]>),
}

/// Packs tuples into a `u128` when `n * bits(q - 1)` fits, otherwise keeps them boxed.
#[derive(Debug, Clone, Copy)]
pub(crate) struct WindowCodec {
    q: u32,
    bits: u32,
    packed: bool,
}

impl WindowCodec {
    pub(crate) fn new(q: u32, n: usize) -> Self {
        let bits = (32 - (q - 1).leading_zeros()).max(1);
        Self {
            q,
            bits,
            packed: (bits as usize) * n <= 128,
        }
    }

    pub(crate) fn key<I>(&self, entries: I) -> WindowKey
    where
        I: IntoIterator<Item = u32>,
    {
        if self.packed {
            WindowKey::Packed(
                entries
                    .into_iter()
                    .fold(0u128, |acc, x| (acc << self.bits) | x as u128),
            )
        } else {
            WindowKey::Wide(entries.into_iter().collect())
        }
    }

    pub(crate) fn forward(&self, ext: &[u32], i: usize, n: usize) -> WindowKey {
        self.key(ext[i..i + n].iter().copied())
    }

    pub(crate) fn reversed(&self, ext: &[u32], i: usize, n: usize) -> WindowKey {
        self.key(ext[i..i + n].iter().rev().copied())
    }

    pub(crate) fn negated_reversed(&self, ext: &[u32], i: usize, n: usize) -> WindowKey {
        let q = self.q;
        self.key(ext[i..i + n].iter().rev().map(move |&x| neg_mod(x, q)))
    }
}

/// Terms followed by enough wraparound that every cyclic window is a contiguous slice.
pub(crate) fn extended_terms(s: &RingSequence, n: usize) -> Vec<u32> {
    let m = s.period();
    (0..m + n - 1).map(|k| s.terms()[k % m]).collect()
}

/// Hashed windows of one sequence: for each distinct window its first and second positions.
pub(crate) struct WindowTable {
    n: usize,
    codec: WindowCodec,
    ext: Vec<u32>,
    occurrences: HashMap<WindowKey, (usize, Option<usize>)>,
}

impl WindowTable {
    pub(crate) fn build(s: &RingSequence, n: usize) -> Self {
        let codec = WindowCodec::new(s.q(), n);
        let ext = extended_terms(s, n);
        let m = s.period();
        let mut occurrences: HashMap<WindowKey, (usize, Option<usize>)> =
            HashMap::with_capacity(m);
        for i in 0..m {
            occurrences
                .entry(codec.forward(&ext, i, n))
                .and_modify(|e| {
                    if e.1.is_none() {
                        e.1 = Some(i);
                    }
                })
                .or_insert((i, None));
        }
        Self {
            n,
            codec,
            ext,
            occurrences,
        }
    }

    fn period(&self) -> usize {
        self.ext.len() + 1 - self.n
    }

    fn tuple(&self, i: usize) -> Vec<u32> {
        self.ext[i..i + self.n].to_vec()
    }

    pub(crate) fn first(&self, key: &WindowKey) -> Option<usize> {
        self.occurrences.get(key).map(|e| e.0)
    }

    fn first_repeat(&self) -> Option<Violation> {
        self.occurrences
            .values()
            .filter_map(|&(i, j)| j.map(|j| (i, j)))
            .min()
            .map(|(i, j)| Violation {
                kind: ViolationKind::Repeat,
                i,
                j,
                tuple: self.tuple(i),
            })
    }

    /// First `(i, j)` with window `i` of `self` matching a transformed window `j` of `other`.
    fn first_cross(&self, other: &WindowTable, kind: ViolationKind) -> Option<Violation> {
        (0..self.period()).find_map(|i| {
            let key = match kind {
                ViolationKind::Repeat => self.codec.forward(&self.ext, i, self.n),
                ViolationKind::Reverse => self.codec.reversed(&self.ext, i, self.n),
                ViolationKind::NegativeReverse => {
                    self.codec.negated_reversed(&self.ext, i, self.n)
                }
            };
            other.first(&key).map(|j| Violation {
                kind,
                i,
                j,
                tuple: self.tuple(i),
            })
        })
    }
}

fn require_order(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::WindowTooShort { min: 2, got: n });
    }
    Ok(())
}

pub fn check_window(s: &RingSequence, n: usize) -> Result<CheckResult> {
    require_order(n)?;
    let table = WindowTable::build(s, n);
    let v = table.first_repeat();
    Ok(CheckResult {
        holds: v.is_none(),
        violations: v.into_iter().collect(),
    })
}

pub fn check_orientable(s: &RingSequence, n: usize) -> Result<CheckResult> {
    require_order(n)?;
    let table = WindowTable::build(s, n);
    Ok(combine(&[
        table.first_repeat(),
        table.first_cross(&table, ViolationKind::Reverse),
    ]))
}

pub fn check_negative_orientable(s: &RingSequence, n: usize) -> Result<CheckResult> {
    require_order(n)?;
    let table = WindowTable::build(s, n);
    Ok(combine(&[
        table.first_repeat(),
        table.first_cross(&table, ViolationKind::NegativeReverse),
    ]))
}

pub fn check_special(s: &RingSequence, n: usize) -> Result<CheckResult> {
    require_order(n)?;
    let table = WindowTable::build(s, n);
    Ok(combine(&[
        table.first_repeat(),
        table.first_cross(&table, ViolationKind::Reverse),
        table.first_cross(&table, ViolationKind::NegativeReverse),
    ]))
}

fn combine(found: &[Option<Violation>]) -> CheckResult {
    let violations: Vec<Violation> = found.iter().flatten().cloned().collect();
    CheckResult {
        holds: violations.is_empty(),
        violations,
    }
}

/// Length of the longest cyclic run of zeros, or `None` when every term is zero.
pub fn longest_zero_run(s: &RingSequence) -> Option<usize> {
    let t = s.terms();
    let start = t.iter().position(|&x| x != 0)?;
    let m = t.len();
    let (mut best, mut run) = (0, 0);
    for k in 1..=m {
        if t[(start + k) % m] == 0 {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    Some(best)
}

/// Every cyclic run of zeros has length at most `n - 2`.
pub fn check_good(s: &RingSequence, n: usize) -> Result<bool> {
    require_order(n)?;
    Ok(longest_zero_run(s).is_some_and(|r| r <= n - 2))
}

pub fn check_disjoint(s: &RingSequence, t: &RingSequence, n: usize) -> Result<Disjointness> {
    require_order(n)?;
    if s.q() != t.q() {
        return Err(Error::ModulusMismatch {
            left: s.q(),
            right: t.q(),
        });
    }
    let a = WindowTable::build(s, n);
    let b = WindowTable::build(t, n);
    Ok(Disjointness {
        tuple_disjoint: a.first_cross(&b, ViolationKind::Repeat).is_none(),
        o_disjoint: a.first_cross(&b, ViolationKind::Reverse).is_none(),
        n_disjoint: a.first_cross(&b, ViolationKind::NegativeReverse).is_none(),
    })
}

pub fn report(s: &RingSequence, n: usize) -> Result<PropertyReport> {
    require_order(n)?;
    let table = WindowTable::build(s, n);
    let repeat = table.first_repeat();
    let reverse = table.first_cross(&table, ViolationKind::Reverse);
    let negative = table.first_cross(&table, ViolationKind::NegativeReverse);
    let is_window = repeat.is_none();
    let is_orientable = is_window && reverse.is_none();
    let is_negative_orientable = is_window && negative.is_none();
    Ok(PropertyReport {
        q: s.q(),
        n,
        period: s.period(),
        weight: s.weight(),
        weight_mod: s.weight_mod().value(),
        is_window,
        is_orientable,
        is_negative_orientable,
        is_special: is_orientable && is_negative_orientable,
        is_good: check_good(s, n)?,
        violations: [repeat, reverse, negative].into_iter().flatten().collect(),
    })
}
