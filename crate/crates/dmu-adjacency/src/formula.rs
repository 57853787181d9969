//! The adjacency index `J_A(D_mu^delta)` evaluated along two algebraically
//! distinct paths.
//!
//! The published form sums, over the admissible numbers `i0` of simple roots,
//! multinomial terms with rational correction factors; it is evaluated here
//! in exact rational arithmetic. The proof form counts the same strata in
//! pure integer arithmetic: `C0` (components meeting `x1 > 0`), `C1`
//! (components meeting `x1 = 0, u != 0`), `I1` (the `u = 0, x2 > 0` wall),
//! and the counts of components inside the `Pi2`/`Pi3` walls obtained by
//! dividing the type by `A1^2` or `A3` and placing a marked root at zero.
//! [`adjacency_index`] runs both and insists they agree term by term.
//!
//! Everything is exact: counts are arbitrary-precision integers and the
//! rational path never rounds. A non-integral value where an integer is
//! required aborts with [`FormulaError::NonIntegralTerm`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::types::{DGerm, MultisingularityType, Profile, Sign};

/// `(n1 + ... + nr)! / (n1! ... nr!)` — the number of distinct words with
/// `ni` letters of the i-th kind. The empty list gives 1.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total: u64 = 0;
    let mut result = BigInt::from(1u32);
    for &part in parts {
        total = total.checked_add(part).expect("part sum overflows u64");
        result *= binomial(total, part);
    }
    result
}

fn binomial(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut result = BigInt::from(1u32);
    // each partial product is a binomial coefficient, so division is exact
    for t in 1..=k {
        result = result * (n - k + t) / t;
    }
    result
}

/// `Delta(i0) = floor((3 - delta + 2 (i0 + m1)) / 4)`: the number of negative
/// intervals cut out by `i0 + m1` sign-flipping roots when the point zero
/// lies in a negative interval. Always between 0 and `1 + i0 + m1`.
pub fn delta_count(delta: Sign, i0: u64, m1: u64) -> u64 {
    let offset = match delta {
        Sign::Plus => 2,
        Sign::Minus => 4,
    };
    (offset + 2 * (i0 + m1)) / 4
}

/// The degree budget `N = mu - codim(A)` left for simple roots; negative
/// budgets make every main-stratum sum vacuous.
pub fn budget(germ: DGerm, ty: &MultisingularityType) -> i64 {
    germ.mu() as i64 - ty.codim() as i64
}

/// Admissible simple-root counts: `0 <= i0 <= hi` with `i0 ≡ parity_like (mod 2)`.
fn i0_values(hi: i64, parity_like: i64) -> Vec<u64> {
    let mut values = Vec::new();
    let mut i0 = parity_like.rem_euclid(2);
    while i0 <= hi {
        values.push(i0 as u64);
        i0 += 2;
    }
    values
}

/// Parts `[i0, i1, ..., ik]` of the odd-multiplicity word multinomial.
fn odd_multiplicity_parts(i0: u64, profile: &Profile) -> Vec<u64> {
    let mut parts = Vec::with_capacity(1 + profile.even_part.len());
    parts.push(i0);
    parts.extend(profile.even_part.iter().map(|&(_, e)| e));
    parts
}

/// Parts `[lead, j1, ..., jl]` for interleaving even-multiplicity roots among
/// `lead` fixed points.
fn even_multiplicity_parts(lead: u64, profile: &Profile) -> Vec<u64> {
    let mut parts = Vec::with_capacity(1 + profile.odd_part.len());
    parts.push(lead);
    parts.extend(profile.odd_part.iter().map(|&(_, e)| e));
    parts
}

/// Parts `[i0, i1, ..., ik, j1, ..., jl]` of the flat multinomial.
fn flat_parts(i0: u64, profile: &Profile) -> Vec<u64> {
    let mut parts = odd_multiplicity_parts(i0, profile);
    parts.extend(profile.odd_part.iter().map(|&(_, e)| e));
    parts
}

/// The four summands of the published formula, already multiplied by their
/// correction factors: `J = i0 + i1 + i2_term + i3_term`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalTerms {
    pub i0: BigInt,
    pub i1: BigInt,
    /// `a1 (a1 - 1) I2` as a single integer (`I2` alone is generically
    /// fractional).
    pub i2_term: BigInt,
    /// `a3 I3` as a single integer.
    pub i3_term: BigInt,
}

/// The proof-form stratum counts; `I0 = 2 C0 - C1` by inclusion-exclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerTerms {
    pub c0: BigInt,
    pub c1: BigInt,
    pub i1: BigInt,
    /// Components in the `Pi2` wall; equals `a1 (a1 - 1) I2`.
    pub pi2: BigInt,
    /// Components in the `Pi3` wall; equals `a3 I3`.
    pub pi3: BigInt,
}

impl IntegerTerms {
    pub fn i0(&self) -> BigInt {
        &self.c0 + &self.c0 - &self.c1
    }
}

/// Both computation paths merged after the term-by-term cross-check, for a
/// raw `(mu, delta)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedTerms {
    pub i0: BigInt,
    pub i1: BigInt,
    pub i2_term: BigInt,
    pub i3_term: BigInt,
    pub c0: BigInt,
    pub c1: BigInt,
    pub n: i64,
}

impl CheckedTerms {
    /// The adjacency index `J = I0 + I1 + a1(a1-1) I2 + a3 I3`.
    pub fn index(&self) -> BigInt {
        &self.i0 + &self.i1 + &self.i2_term + &self.i3_term
    }
}

/// The adjacency index with its full term breakdown along both paths.
/// `j == 0` means the stratum is not adjacent at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyReport {
    pub germ: DGerm,
    pub ty: MultisingularityType,
    pub j: BigInt,
    pub i0: BigInt,
    pub i1: BigInt,
    pub i2_term: BigInt,
    pub i3_term: BigInt,
    pub c0: BigInt,
    pub c1: BigInt,
    pub pi2_count: BigInt,
    pub pi3_count: BigInt,
    pub n: i64,
}

/// Internal-consistency failures. Either variant signals an implementation
/// bug, never bad input: the computation aborts rather than report a value
/// it cannot defend.
#[derive(Clone, Debug, PartialEq)]
pub enum FormulaError {
    /// A rational-path quantity that must be an integer came out fractional.
    NonIntegralTerm {
        term: &'static str,
        value: BigRational,
    },
    /// The published form and the proof form disagree.
    DualPathMismatch {
        rational: Box<RationalTerms>,
        integer: Box<IntegerTerms>,
    },
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaError::NonIntegralTerm { term, value } => {
                write!(f, "internal error: non-integral value {value} for {term}")
            }
            FormulaError::DualPathMismatch { rational, integer } => {
                write!(
                    f,
                    "internal error: dual-path mismatch\n  published form: I0={} I1={} I2term={} I3term={}\n  proof form:     C0={} C1={} => I0={} I1={} pi2={} pi3={}",
                    rational.i0,
                    rational.i1,
                    rational.i2_term,
                    rational.i3_term,
                    integer.c0,
                    integer.c1,
                    integer.i0(),
                    integer.i1,
                    integer.pi2,
                    integer.pi3,
                )
            }
        }
    }
}

impl std::error::Error for FormulaError {}

fn require_integer(value: BigRational, term: &'static str) -> Result<BigInt, FormulaError> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(FormulaError::NonIntegralTerm { term, value })
    }
}

fn rational(value: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

fn rational_terms(
    mu: u64,
    delta: Sign,
    ty: &MultisingularityType,
) -> Result<RationalTerms, FormulaError> {
    let profile = ty.profile();
    let n = mu as i64 - profile.codim as i64;

    let mut i0_sum = BigRational::zero();
    for i0 in i0_values(n, n) {
        let word = BigRational::from_integer(multinomial(&flat_parts(i0, &profile)));
        let ratio = BigRational::new(
            BigInt::from(1 + i0 + profile.m1 + profile.m2),
            BigInt::from(1 + i0 + profile.m1),
        );
        let negatives = delta_count(delta, i0, profile.m1);
        i0_sum += word * (rational(2 * negatives) * ratio - rational(i0));
    }

    let mut i1_sum = BigRational::zero();
    for i0 in i0_values(n - 2, n) {
        let word = BigRational::from_integer(multinomial(&flat_parts(i0, &profile)));
        let ratio = BigRational::new(
            BigInt::from(1 + i0 + profile.m1 + profile.m2),
            BigInt::from(1 + i0 + profile.m1),
        );
        let positives = 1 + i0 + profile.m1 - delta_count(delta, i0, profile.m1);
        i1_sum += word * ratio * rational(positives);
    }

    let mut i2_sum = BigRational::zero();
    if profile.a1 >= 2 {
        for i0 in i0_values(n + 2, n) {
            let word = BigRational::from_integer(multinomial(&flat_parts(i0, &profile)));
            let negatives = delta_count(delta, i0, profile.m1);
            let denominator = (1 + i0 + profile.m1) * (i0 + profile.m1 + profile.m2);
            i2_sum += word * rational(negatives) / rational(denominator);
        }
    }
    let i2_term = rational(profile.a1 * profile.a1.saturating_sub(1)) * i2_sum;

    let mut i3_sum = BigRational::zero();
    if profile.a3 >= 1 {
        for i0 in i0_values(n + 1, n + 1) {
            i3_sum += BigRational::from_integer(multinomial(&flat_parts(i0, &profile)));
        }
    }
    let i3_term = rational(profile.a3) * i3_sum;

    Ok(RationalTerms {
        i0: require_integer(i0_sum, "I0")?,
        i1: require_integer(i1_sum, "I1")?,
        i2_term: require_integer(i2_term, "a1(a1-1)*I2")?,
        i3_term: require_integer(i3_term, "a3*I3")?,
    })
}

fn integer_terms(mu: u64, delta: Sign, ty: &MultisingularityType) -> IntegerTerms {
    let profile = ty.profile();
    let n = mu as i64 - profile.codim as i64;

    let mut c0 = BigInt::zero();
    let mut c1 = BigInt::zero();
    for i0 in i0_values(n, n) {
        let odd_words = multinomial(&odd_multiplicity_parts(i0, &profile));
        let even_words = multinomial(&even_multiplicity_parts(1 + i0 + profile.m1, &profile));
        c0 += odd_words * even_words * delta_count(delta, i0, profile.m1);
        c1 += multinomial(&flat_parts(i0, &profile)) * i0;
    }

    let mut i1 = BigInt::zero();
    for i0 in i0_values(n - 2, n) {
        let odd_words = multinomial(&odd_multiplicity_parts(i0, &profile));
        let even_words = multinomial(&even_multiplicity_parts(1 + i0 + profile.m1, &profile));
        let positives = 1 + i0 + profile.m1 - delta_count(delta, i0, profile.m1);
        i1 += odd_words * even_words * positives;
    }

    // Pi2: zero is an extra double root in a negative interval and consumes
    // an A1^2 factor; the even-multiplicity part shrinks accordingly while
    // the odd-multiplicity part (and hence m1) is untouched.
    let pi2 = match ty.divide(&MultisingularityType::single(1, 2)) {
        None => BigInt::zero(),
        Some(reduced) => {
            let reduced = reduced.profile();
            let mut sum = BigInt::zero();
            for i0 in i0_values(n + 2, n) {
                let odd_words = multinomial(&odd_multiplicity_parts(i0, &reduced));
                let even_words =
                    multinomial(&even_multiplicity_parts(1 + i0 + reduced.m1, &reduced));
                sum += odd_words * even_words * delta_count(delta, i0, reduced.m1);
            }
            sum
        }
    };

    // Pi3: zero is a fixed triple root consuming an A3 factor; it occupies a
    // slot of its own in the word, hence the extra unit part.
    let pi3 = match ty.divide(&MultisingularityType::single(3, 1)) {
        None => BigInt::zero(),
        Some(reduced) => {
            let reduced = reduced.profile();
            let mut sum = BigInt::zero();
            for i0 in i0_values(n + 1, n + 1) {
                let mut parts = odd_multiplicity_parts(i0, &reduced);
                parts.push(1);
                parts.extend(reduced.odd_part.iter().map(|&(_, e)| e));
                sum += multinomial(&parts);
            }
            sum
        }
    };

    IntegerTerms {
        c0,
        c1,
        i1,
        pi2,
        pi3,
    }
}

/// The published-formula evaluation in exact rational arithmetic.
pub fn compute_terms_rational(
    germ: DGerm,
    ty: &MultisingularityType,
) -> Result<RationalTerms, FormulaError> {
    rational_terms(germ.mu(), germ.delta(), ty)
}

/// The proof-form evaluation in pure integer arithmetic.
pub fn compute_terms_integer(germ: DGerm, ty: &MultisingularityType) -> IntegerTerms {
    integer_terms(germ.mu(), germ.delta(), ty)
}

/// Evaluates both paths for a raw `(mu, delta)` pair and cross-checks them.
///
/// Unlike [`adjacency_index`] this does not normalize odd `mu`, which makes
/// the sign-invariance of odd-index germs directly testable.
pub fn adjacency_terms(
    mu: u64,
    delta: Sign,
    ty: &MultisingularityType,
) -> Result<CheckedTerms, FormulaError> {
    assert!(mu >= 4, "the D series starts at index 4, got {mu}");
    let rational = rational_terms(mu, delta, ty)?;
    let integer = integer_terms(mu, delta, ty);
    let i0 = integer.i0();
    if rational.i0 != i0
        || rational.i1 != integer.i1
        || rational.i2_term != integer.pi2
        || rational.i3_term != integer.pi3
    {
        return Err(FormulaError::DualPathMismatch {
            rational: Box::new(rational),
            integer: Box::new(integer),
        });
    }
    Ok(CheckedTerms {
        i0,
        i1: rational.i1,
        i2_term: rational.i2_term,
        i3_term: rational.i3_term,
        c0: integer.c0,
        c1: integer.c1,
        n: mu as i64 - ty.codim() as i64,
    })
}

/// The adjacency index of `germ` to the multisingularity type `ty`, with the
/// full term breakdown along both evaluation paths.
pub fn adjacency_index(
    germ: DGerm,
    ty: &MultisingularityType,
) -> Result<AdjacencyReport, FormulaError> {
    let terms = adjacency_terms(germ.mu(), germ.delta(), ty)?;
    let j = terms.index();
    debug_assert!(!j.is_negative());
    Ok(AdjacencyReport {
        germ,
        ty: ty.clone(),
        j,
        pi2_count: terms.i2_term.clone(),
        pi3_count: terms.i3_term.clone(),
        i0: terms.i0,
        i1: terms.i1,
        i2_term: terms.i2_term,
        i3_term: terms.i3_term,
        c0: terms.c0,
        c1: terms.c1,
        n: terms.n,
    })
}

fn exact_div(value: BigInt, divisor: u64) -> BigInt {
    let (quotient, remainder) = value.div_rem(&BigInt::from(divisor));
    debug_assert!(remainder.is_zero());
    quotient
}

/// Closed form for the number of smooth front pieces (`J` of the single
/// factor `A1`): `2k(k^2-1)/3 + k(k+3) floor((3-delta)/4)` for `mu = 2k` and
/// `k(k+1)(4k+5)/6 + k` for `mu = 2k+1`.
pub fn closed_form_a1(germ: DGerm) -> BigInt {
    let bump: u64 = match germ.delta() {
        Sign::Plus => 0,
        Sign::Minus => 1,
    };
    if germ.mu().is_multiple_of(2) {
        let k = BigInt::from(germ.mu() / 2);
        exact_div(&k * (&k * &k - 1) * 2, 3) + &k * (&k + 3) * bump
    } else {
        let k = BigInt::from((germ.mu() - 1) / 2);
        exact_div(&k * (&k + 1) * (&k * 4 + 5), 6) + &k
    }
}

/// Closed form for the number of complement components (`J` of the empty
/// type): `k(k+1)/2 + (k+2) floor((3-delta)/4)` for `mu = 2k` and
/// `(k+1)(k+2)/2` for `mu = 2k+1`.
pub fn closed_form_trivial(germ: DGerm) -> BigInt {
    let bump: u64 = match germ.delta() {
        Sign::Plus => 0,
        Sign::Minus => 1,
    };
    if germ.mu().is_multiple_of(2) {
        let k = BigInt::from(germ.mu() / 2);
        exact_div(&k * (&k + 1), 2) + (&k + 2) * bump
    } else {
        let k = BigInt::from((germ.mu() - 1) / 2);
        exact_div((&k + 1) * (&k + 2), 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::MultisingularityType as Ty;

    fn germ(text: &str) -> DGerm {
        text.parse().unwrap()
    }

    fn ty(text: &str) -> Ty {
        text.parse().unwrap()
    }

    #[test]
    fn multinomial_basics() {
        assert_eq!(multinomial(&[2, 1]), BigInt::from(3));
        assert_eq!(multinomial(&[0, 0, 0]), BigInt::from(1));
        assert_eq!(multinomial(&[3, 2, 1]), BigInt::from(60));
        assert_eq!(multinomial(&[]), BigInt::from(1));
    }

    #[test]
    fn multinomial_grows_past_machine_words() {
        // 60! / (20!)^3 needs well over 64 bits
        let value = multinomial(&[20, 20, 20]);
        assert!(value > BigInt::from(u64::MAX));
        assert_eq!(value, "577831214478475823831865900".parse().unwrap());
    }

    #[test]
    fn delta_count_examples() {
        assert_eq!(delta_count(Sign::Plus, 0, 0), 0);
        assert_eq!(delta_count(Sign::Minus, 0, 0), 1);
        assert_eq!(delta_count(Sign::Plus, 2, 1), 2);
    }

    #[test]
    fn delta_count_recurrence() {
        for m1 in 0..6 {
            for i0 in 0..20 {
                for delta in [Sign::Plus, Sign::Minus] {
                    assert_eq!(
                        delta_count(delta, i0 + 2, m1),
                        delta_count(delta, i0, m1) + 1
                    );
                    assert!(delta_count(delta, i0, m1) <= 1 + i0 + m1);
                }
                let gap = delta_count(Sign::Minus, i0, m1) - delta_count(Sign::Plus, i0, m1);
                assert!(gap <= 1);
            }
        }
    }

    #[test]
    fn budget_examples() {
        assert_eq!(budget(germ("D4-"), &ty("A1")), 2);
        assert_eq!(budget(germ("D6+"), &ty("A1 A2")), 1);
        assert_eq!(budget(germ("D4+"), &ty("A3")), 0);
        assert_eq!(budget(germ("D4+"), &ty("A1^4")), -4);
    }

    #[test]
    fn rational_terms_frozen_values() {
        let t = compute_terms_rational(germ("D4-"), &ty("A1")).unwrap();
        assert_eq!(
            (t.i0, t.i1, t.i2_term, t.i3_term),
            (14.into(), 0.into(), 0.into(), 0.into())
        );

        let t = compute_terms_rational(germ("D4+"), &Ty::one()).unwrap();
        assert_eq!(
            (t.i0, t.i1, t.i2_term, t.i3_term),
            (0.into(), 3.into(), 0.into(), 0.into())
        );

        let t = compute_terms_rational(germ("D4-"), &ty("A1^2")).unwrap();
        assert_eq!(
            (t.i0, t.i1, t.i2_term, t.i3_term),
            (6.into(), 0.into(), 3.into(), 0.into())
        );
    }

    #[test]
    fn integer_terms_frozen_values() {
        let t = compute_terms_integer(germ("D4-"), &Ty::one());
        assert_eq!((t.c0, t.c1, t.i1), (6.into(), 6.into(), 1.into()));

        let t = compute_terms_integer(germ("D4+"), &ty("A1^2"));
        assert_eq!(t.pi2, BigInt::from(1));

        assert_eq!(
            compute_terms_integer(germ("D4+"), &ty("A3")).pi3,
            BigInt::from(2)
        );
        assert_eq!(
            compute_terms_integer(germ("D4-"), &ty("A3")).pi3,
            BigInt::from(2)
        );
    }

    #[test]
    fn adjacency_index_examples() {
        let cases = [
            ("D4-", "A1", 14),
            ("D5", "A1", 15),
            ("D4+", "1", 3),
            ("D4-", "A2", 6),
            ("D4+", "A1^2", 1),
        ];
        for (g, t, expected) in cases {
            let report = adjacency_index(germ(g), &ty(t)).unwrap();
            assert_eq!(report.j, BigInt::from(expected), "J for {g} {t}");
            assert_eq!(
                report.j,
                &report.i0 + &report.i1 + &report.i2_term + &report.i3_term
            );
            assert_eq!(report.i0, &report.c0 + &report.c0 - &report.c1);
            assert_eq!(report.pi2_count, report.i2_term);
            assert_eq!(report.pi3_count, report.i3_term);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_a1(germ("D4-")), BigInt::from(14));
        assert_eq!(closed_form_a1(germ("D6+")), BigInt::from(16));
        assert_eq!(closed_form_a1(germ("D7")), BigInt::from(37));
        assert_eq!(closed_form_trivial(germ("D4-")), BigInt::from(7));
        assert_eq!(closed_form_trivial(germ("D5")), BigInt::from(6));
        assert_eq!(closed_form_trivial(germ("D6-")), BigInt::from(11));
    }

    #[test]
    fn closed_forms_agree_with_the_formula() {
        for mu in 4..=24u64 {
            let germs: &[DGerm] = if mu % 2 == 0 {
                &[DGerm::new(mu, Sign::Plus), DGerm::new(mu, Sign::Minus)]
            } else {
                &[DGerm::new(mu, Sign::Plus)]
            };
            for &g in germs {
                assert_eq!(
                    adjacency_index(g, &ty("A1")).unwrap().j,
                    closed_form_a1(g),
                    "{g}"
                );
                assert_eq!(
                    adjacency_index(g, &Ty::one()).unwrap().j,
                    closed_form_trivial(g),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn odd_mu_is_sign_invariant() {
        for t in ["1", "A1", "A1^2", "A2", "A3", "A1 A2", "A1 A3", "A2^2"] {
            let plus = adjacency_terms(5, Sign::Plus, &ty(t)).unwrap();
            let minus = adjacency_terms(5, Sign::Minus, &ty(t)).unwrap();
            assert_eq!(plus, minus, "type {t}");
        }
    }

    #[test]
    fn vacuous_ranges_give_zero() {
        // codim 8 > mu = 4: N < 0, so the main sums are empty
        let t = compute_terms_integer(germ("D4+"), &ty("A1^2 A3"));
        assert_eq!(t.i0(), BigInt::zero());
        assert_eq!(t.i1, BigInt::zero());
        // not divisible by A1^2 / A3
        let t = compute_terms_integer(germ("D6-"), &ty("A1 A2"));
        assert_eq!(t.pi2, BigInt::zero());
        assert_eq!(t.pi3, BigInt::zero());
    }

    #[test]
    fn pi2_pi3_survive_negative_budget() {
        // codim mu + 2: N = -2 but the Pi2 range [0, N+2] is still inhabited
        let report = adjacency_index(germ("D4+"), &ty("A1^3")).unwrap();
        assert_eq!(report.n, -2);
        assert_eq!(report.j, BigInt::zero());
        let report = adjacency_index(germ("D4-"), &ty("A1^3")).unwrap();
        assert_eq!(report.i2_term, BigInt::from(2));
        assert_eq!(report.j, BigInt::from(2));
        // codim mu + 1: N = -1, Pi3 range [0, N+1] is {0}
        let report = adjacency_index(germ("D4+"), &ty("A1 A3")).unwrap();
        assert_eq!(report.n, -2);
        assert_eq!(report.j, BigInt::zero());
        let report = adjacency_index(germ("D5"), &ty("A1 A3")).unwrap();
        assert_eq!(report.n, -1);
        assert_eq!(report.i3_term, BigInt::from(2));
    }

    #[test]
    fn dual_paths_agree_on_a_small_sweep() {
        for mu in 4..=8u64 {
            for delta in [Sign::Plus, Sign::Minus] {
                for t in [
                    "1", "A1", "A1^2", "A1^3", "A2", "A3", "A1 A2", "A1 A3", "A2 A3", "A4",
                ] {
                    let terms = adjacency_terms(mu, delta, &ty(t))
                        .unwrap_or_else(|e| panic!("mu={mu} delta={delta:?} {t}: {e}"));
                    assert!(!terms.index().is_negative());
                }
            }
        }
    }

    #[test]
    fn multinomial_permutation_invariance_and_pascal() {
        use proptest::prelude::*;
        let mut runner = proptest::test_runner::TestRunner::default();
        runner
            .run(&proptest::collection::vec(0u64..12, 0..6), |mut parts| {
                let before = multinomial(&parts);
                parts.reverse();
                prop_assert_eq!(&before, &multinomial(&parts));
                parts.sort_unstable();
                prop_assert_eq!(&before, &multinomial(&parts));
                Ok(())
            })
            .unwrap();
        runner
            .run(&(1u64..40, 1u64..40), |(a, b)| {
                let whole = multinomial(&[a, b]);
                let left = multinomial(&[a - 1, b]);
                let right = multinomial(&[a, b - 1]);
                prop_assert_eq!(whole, left + right);
                prop_assert_eq!(multinomial(&[a, 1]), BigInt::from(a + 1));
                Ok(())
            })
            .unwrap();
    }
}
