//! Cyclic words over `Z_q`, their windows, and the alphabet maps between moduli.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::{add_mod, neg_mod, Residue};

/// Largest modulus the crate accepts.
pub const MAX_MODULUS: u32 = 1 << 16;
/// Largest stored period the crate accepts.
pub const MAX_PERIOD: usize = 1 << 28;

/// An `n`-tuple of residues read from a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    q: u32,
    entries: Vec<u32>,
}

impl Window {
    pub fn new(q: u32, entries: Vec<u32>) -> Result<Self> {
        validate(q, &entries)?;
        Ok(Self { q, entries })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn reverse(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Self { q: self.q, entries }
    }

    pub fn negate(&self) -> Self {
        Self {
            q: self.q,
            entries: self.entries.iter().map(|&x| neg_mod(x, self.q)).collect(),
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// One period of a periodic sequence over `Z_q`, read cyclically.
///
/// Equality is positional; use [`RingSequence::canonical`] to compare up to rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RingSequence {
    q: u32,
    terms: Vec<u32>,
}

fn validate(q: u32, terms: &[u32]) -> Result<()> {
    if q < 2 || q > MAX_MODULUS {
        return Err(Error::InvalidModulus(q));
    }
    if let Some((index, &value)) = terms.iter().enumerate().find(|(_, &v)| v >= q) {
        return Err(Error::TermOutOfRange {
            index,
            value,
            modulus: q,
        });
    }
    Ok(())
}

impl RingSequence {
    pub fn new(q: u32, terms: Vec<u32>) -> Result<Self> {
        validate(q, &terms)?;
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        if terms.len() > MAX_PERIOD {
            return Err(Error::InvalidParameters(format!(
                "period {} exceeds {MAX_PERIOD}",
                terms.len()
            )));
        }
        Ok(Self { q, terms })
    }

    /// Builds a sequence from arbitrary integers, reducing each one mod `q`.
    pub fn from_integers(q: u32, values: &[i64]) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidModulus(q));
        }
        let terms = values
            .iter()
            .map(|&v| v.rem_euclid(q as i64) as u32)
            .collect();
        Self::new(q, terms)
    }

    pub(crate) fn from_parts_unchecked(q: u32, terms: Vec<u32>) -> Self {
        debug_assert!(validate(q, &terms).is_ok() && !terms.is_empty());
        Self { q, terms }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<u32> {
        self.terms
    }

    /// The stored ring length.
    pub fn period(&self) -> usize {
        self.terms.len()
    }

    /// Term at cyclic index `i`.
    pub fn at(&self, i: i64) -> u32 {
        self.terms[i.rem_euclid(self.terms.len() as i64) as usize]
    }

    pub fn residue_at(&self, i: i64) -> Residue {
        Residue::new(self.at(i) as i64, self.q).expect("modulus validated at construction")
    }

    /// `(s_i, ..., s_{i+n-1})` with cyclic wraparound.
    pub fn window(&self, i: i64, n: usize) -> Window {
        let m = self.terms.len() as i64;
        let start = i.rem_euclid(m) as usize;
        let entries = (0..n)
            .map(|k| self.terms[(start + k) % m as usize])
            .collect();
        Window { q: self.q, entries }
    }

    pub fn windows(&self, n: usize) -> impl Iterator<Item = Window> + '_ {
        (0..self.period()).map(move |i| self.window(i as i64, n))
    }

    pub fn negate(&self) -> Self {
        Self {
            q: self.q,
            terms: self.terms.iter().map(|&x| neg_mod(x, self.q)).collect(),
        }
    }

    /// The ring read backwards.
    pub fn reversed(&self) -> Self {
        let mut terms = self.terms.clone();
        terms.reverse();
        Self { q: self.q, terms }
    }

    pub fn translate(&self, lambda: Residue) -> Result<Self> {
        if lambda.modulus() != self.q {
            return Err(Error::ModulusMismatch {
                left: self.q,
                right: lambda.modulus(),
            });
        }
        Ok(Self {
            q: self.q,
            terms: self
                .terms
                .iter()
                .map(|&x| add_mod(x, lambda.value(), self.q))
                .collect(),
        })
    }

    /// Rotation starting at cyclic index `k`.
    pub fn rotate(&self, k: i64) -> Self {
        let m = self.terms.len();
        let k = k.rem_euclid(m as i64) as usize;
        let mut terms = Vec::with_capacity(m);
        terms.extend_from_slice(&self.terms[k..]);
        terms.extend_from_slice(&self.terms[..k]);
        Self { q: self.q, terms }
    }

    /// Lexicographically least rotation.
    pub fn canonical(&self) -> Self {
        self.rotate(least_rotation(&self.terms) as i64)
    }

    /// Smallest `d` dividing the stored period with rotation by `d` fixing the ring.
    pub fn least_period(&self) -> usize {
        let m = self.terms.len();
        (1..=m)
            .filter(|d| m % d == 0)
            .find(|&d| (0..m).all(|i| self.terms[i] == self.terms[(i + d) % m]))
            .unwrap_or(m)
    }

    /// Integer sum of one period, terms read in `[0, q-1]`.
    pub fn weight(&self) -> u64 {
        self.terms.iter().map(|&x| x as u64).sum()
    }

    pub fn weight_mod(&self) -> Residue {
        Residue::new((self.weight() % self.q as u64) as i64, self.q)
            .expect("modulus validated at construction")
    }

    pub fn count(&self, value: u32) -> usize {
        self.terms.iter().filter(|&&x| x == value).count()
    }

    /// Ring concatenation `self || other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::ModulusMismatch {
                left: self.q,
                right: other.q,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Self::new(self.q, terms)
    }

    /// The alphabet embedding `Z_q -> Z_q'` keeping the integer representative.
    pub fn embed(&self, q_prime: u32) -> Result<Self> {
        if q_prime <= self.q {
            return Err(Error::InvalidParameters(format!(
                "embedding target {q_prime} must exceed source modulus {}",
                self.q
            )));
        }
        Self::new(q_prime, self.terms.clone())
    }

    /// Folds `Z_q'` onto `Z_q`, identifying `y` with `-y`.
    ///
    /// Low band `[0, q-1]` maps to itself, the middle band `[q, q'-q]` to zero, and the
    /// high band `[q'-q+1, q'-1]` to `q' - y`.
    pub fn fold(&self, q: u32) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|&y| fold_residue(y, self.q, q))
            .collect::<Result<Vec<_>>>()?;
        Self::new(q, terms)
    }
}

/// Single-residue version of [`RingSequence::fold`].
pub fn fold_residue(y: u32, q_prime: u32, q: u32) -> Result<u32> {
    if q < 2 {
        return Err(Error::InvalidModulus(q));
    }
    if (q_prime as u64) < 2 * q as u64 - 1 {
        return Err(Error::InvalidParameters(format!(
            "folding Z_{q_prime} onto Z_{q} needs q' >= 2q - 1"
        )));
    }
    Ok(if y < q {
        y
    } else if y <= q_prime - q {
        0
    } else {
        q_prime - y
    })
}

/// Start index of the lexicographically least rotation (two-pointer minimum expression).
fn least_rotation(s: &[u32]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

impl fmt::Display for RingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "] over Z_{}", self.q)
    }
}
