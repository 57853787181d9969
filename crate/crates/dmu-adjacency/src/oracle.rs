//! Brute-force recount of every stratum by explicit enumeration of root
//! arrangements.
//!
//! An arrangement is a word on the axis: simple roots, multiple roots of odd
//! or even multiplicity, and one marked point for the origin. The sign of
//! the defining polynomial is `delta` far to the right and flips exactly at
//! roots of odd multiplicity, so whether the origin sits in a negative or a
//! positive interval is read off the word directly — no counting formulas
//! are involved anywhere on this path. Words are generated as distinct
//! multiset permutations, each geometric configuration class exactly once.
//!
//! This module deliberately shares no arithmetic with [`crate::formula`]
//! beyond big-integer addition; it exists to check that module, not to call
//! it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::types::{DGerm, MultisingularityType, Profile, Sign};

/// Default bound on the number of generated words per public call.
pub const DEFAULT_WORD_CAP: u64 = 100_000_000;

/// How the origin sits inside an arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MarkerKind {
    /// Zero is not a root; the polynomial is negative there (`x1 != 0`).
    NonRootPoint,
    /// Zero is a double root inside a positive interval (`x2 > 0`); it
    /// contributes no preimage.
    PositiveDoubleRoot,
    /// Zero is a double root inside a negative interval (`x2 < 0`); it
    /// contributes the `A1^2` factor.
    NegativeDoubleRoot,
    /// Zero is a triple root; it contributes the `A3` factor.
    TripleRoot,
}

/// One letter of an arrangement word, left to right along the axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// A simple real root (flips the sign).
    Simple,
    /// The distinguished simple root standing at the origin (`C1` words).
    PinnedSimple,
    /// A multiple root of odd multiplicity `alpha + 1`, `alpha` even
    /// (flips the sign).
    OddRoot(u64),
    /// A multiple root of even multiplicity `beta + 1`, `beta` odd
    /// (keeps the sign).
    EvenRoot(u64),
    /// The origin.
    Marker(MarkerKind),
}

impl Symbol {
    fn flips_sign(self) -> bool {
        matches!(
            self,
            Symbol::Simple | Symbol::PinnedSimple | Symbol::OddRoot(_)
        )
    }
}

/// A root-arrangement word containing exactly one [`Symbol::Marker`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    word: Vec<Symbol>,
}

impl Arrangement {
    /// Panics unless the word contains exactly one marker.
    pub fn new(word: Vec<Symbol>) -> Self {
        let markers = word
            .iter()
            .filter(|s| matches!(s, Symbol::Marker(_)))
            .count();
        assert_eq!(markers, 1, "an arrangement carries exactly one marker");
        Self { word }
    }

    pub fn word(&self) -> &[Symbol] {
        &self.word
    }

    /// The sign of the interval containing the marker: `delta` at the far
    /// right, flipped at every odd-multiplicity root encountered on the way
    /// in. Even-multiplicity roots and the marker itself never flip.
    pub fn marker_interval_sign(&self, delta: Sign) -> Sign {
        marker_sign(&self.word, delta).expect("arrangement contains a marker")
    }
}

fn marker_sign(word: &[Symbol], delta: Sign) -> Option<Sign> {
    let mut sign = delta;
    for &symbol in word.iter().rev() {
        if let Symbol::Marker(_) = symbol {
            return Some(sign);
        }
        if symbol.flips_sign() {
            sign = sign.flip();
        }
    }
    None
}

/// The five stratum classes of the component count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    /// Components meeting `x1 > 0`: marker off the roots, negative interval.
    C0,
    /// Components meeting `x1 = 0, u != 0`: one simple root pinned at zero.
    C1,
    /// Components meeting `x1 = u = 0, x2 > 0`: double root at zero in a
    /// positive interval.
    I1,
    /// Components with `x2 < 0`: double root at zero in a negative interval,
    /// type divided by `A1^2`.
    Pi2,
    /// Components with `x2 = 0`: triple root at zero, type divided by `A3`.
    Pi3,
}

/// Per-stratum arrangement counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumCounts {
    pub c0: BigInt,
    pub c1: BigInt,
    pub i1: BigInt,
    pub pi2: BigInt,
    pub pi3: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// More words than the configured cap allows; the request is beyond
    /// desk scale.
    WordCapExceeded { cap: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::WordCapExceeded { cap } => {
                write!(f, "enumeration cap of {cap} generated words exceeded")
            }
        }
    }
}

impl std::error::Error for OracleError {}

struct WordBudget {
    remaining: u64,
    cap: u64,
}

impl WordBudget {
    fn new(cap: u64) -> Self {
        Self {
            remaining: cap,
            cap,
        }
    }

    fn spend(&mut self) -> Result<(), OracleError> {
        if self.remaining == 0 {
            return Err(OracleError::WordCapExceeded { cap: self.cap });
        }
        self.remaining -= 1;
        Ok(())
    }
}

/// Counts the arrangements of one stratum class by exhaustive generation.
pub fn enumerate_stratum(
    germ: DGerm,
    ty: &MultisingularityType,
    stratum: Stratum,
    word_cap: u64,
) -> Result<BigInt, OracleError> {
    stratum_count(germ, ty, stratum, &mut WordBudget::new(word_cap))
}

/// All five stratum counts, sharing one word budget.
pub fn count_strata(
    germ: DGerm,
    ty: &MultisingularityType,
    word_cap: u64,
) -> Result<StratumCounts, OracleError> {
    let budget = &mut WordBudget::new(word_cap);
    Ok(StratumCounts {
        c0: stratum_count(germ, ty, Stratum::C0, budget)?,
        c1: stratum_count(germ, ty, Stratum::C1, budget)?,
        i1: stratum_count(germ, ty, Stratum::I1, budget)?,
        pi2: stratum_count(germ, ty, Stratum::Pi2, budget)?,
        pi3: stratum_count(germ, ty, Stratum::Pi3, budget)?,
    })
}

/// The adjacency index recomputed exclusively from enumerated words:
/// `(2 C0 - C1) + I1 + Pi2 + Pi3` by inclusion-exclusion over the pieces.
pub fn oracle_adjacency_index(
    germ: DGerm,
    ty: &MultisingularityType,
    word_cap: u64,
) -> Result<BigInt, OracleError> {
    let counts = count_strata(germ, ty, word_cap)?;
    Ok(&counts.c0 + &counts.c0 - &counts.c1 + &counts.i1 + &counts.pi2 + &counts.pi3)
}

fn stratum_count(
    germ: DGerm,
    ty: &MultisingularityType,
    stratum: Stratum,
    budget: &mut WordBudget,
) -> Result<BigInt, OracleError> {
    let full = ty.profile();
    let n = germ.mu() as i64 - full.codim as i64;
    let delta = germ.delta();

    // active profile, marker, i0 bound, i0 parity, and required marker sign
    let (profile, marker, hi, parity, required) = match stratum {
        Stratum::C0 => (
            full,
            Some(MarkerKind::NonRootPoint),
            n,
            n,
            Some(Sign::Minus),
        ),
        Stratum::C1 => (full, None, n, n, None),
        Stratum::I1 => (
            full,
            Some(MarkerKind::PositiveDoubleRoot),
            n - 2,
            n,
            Some(Sign::Plus),
        ),
        Stratum::Pi2 => match ty.divide(&MultisingularityType::single(1, 2)) {
            Some(reduced) => (
                reduced.profile(),
                Some(MarkerKind::NegativeDoubleRoot),
                n + 2,
                n,
                Some(Sign::Minus),
            ),
            None => return Ok(BigInt::zero()),
        },
        Stratum::Pi3 => match ty.divide(&MultisingularityType::single(3, 1)) {
            Some(reduced) => (
                reduced.profile(),
                Some(MarkerKind::TripleRoot),
                n + 1,
                n + 1,
                None,
            ),
            None => return Ok(BigInt::zero()),
        },
    };

    let mut total = BigInt::zero();
    let mut i0 = parity.rem_euclid(2);
    while i0 <= hi {
        let count = i0 as u64;
        if !(stratum == Stratum::C1 && count == 0) {
            let word = stratum_word(count, &profile, marker, stratum == Stratum::C1);
            total += count_words(word, delta, required, budget)?;
        }
        i0 += 2;
    }
    Ok(total)
}

fn stratum_word(
    i0: u64,
    profile: &Profile,
    marker: Option<MarkerKind>,
    pin_one_simple: bool,
) -> Vec<Symbol> {
    let mut word = Vec::new();
    if pin_one_simple {
        word.push(Symbol::PinnedSimple);
        word.extend(std::iter::repeat_n(Symbol::Simple, i0 as usize - 1));
    } else {
        word.extend(std::iter::repeat_n(Symbol::Simple, i0 as usize));
    }
    for &(alpha, count) in &profile.even_part {
        word.extend(std::iter::repeat_n(Symbol::OddRoot(alpha), count as usize));
    }
    for &(beta, count) in &profile.odd_part {
        word.extend(std::iter::repeat_n(Symbol::EvenRoot(beta), count as usize));
    }
    if let Some(kind) = marker {
        word.push(Symbol::Marker(kind));
    }
    word
}

/// Visits every distinct permutation of `word` once and counts those whose
/// marker interval has the required sign (all of them when `required` is
/// `None`).
fn count_words(
    mut word: Vec<Symbol>,
    delta: Sign,
    required: Option<Sign>,
    budget: &mut WordBudget,
) -> Result<u64, OracleError> {
    word.sort_unstable();
    let mut count = 0;
    loop {
        budget.spend()?;
        let admissible = match required {
            None => true,
            Some(sign) => marker_sign(&word, delta) == Some(sign),
        };
        if admissible {
            count += 1;
        }
        if !next_permutation(&mut word) {
            return Ok(count);
        }
    }
}

/// Rewrites `seq` into its lexicographic successor; `false` once `seq` is
/// the last permutation.
fn next_permutation<T: Ord>(seq: &mut [T]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut pivot = seq.len() - 1;
    while pivot > 0 && seq[pivot - 1] >= seq[pivot] {
        pivot -= 1;
    }
    if pivot == 0 {
        return false;
    }
    let mut swap = seq.len() - 1;
    while seq[swap] <= seq[pivot - 1] {
        swap -= 1;
    }
    seq.swap(pivot - 1, swap);
    seq[pivot..].reverse();
    true
}
