//! Multisingularity types, D-germs, and their combinatorial profiles.
//!
//! A multisingularity type is a formal commutative product of A-symbols,
//! written `A1^2 A3` in text form; the empty product is written `1`. A
//! D-germ is a pair `(mu, delta)` printed `D4+`, `D4-`, `D5`, ... For odd
//! `mu` the two signs give equivalent germs, so the stored form always
//! carries `+`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Upper bound on A-indices, exponents, and the D-series index `mu`.
///
/// Keeps every derived quantity (codimension, budget, interval counts)
/// comfortably inside `u64`/`i64`. Inputs anywhere near this bound are far
/// beyond what exact evaluation can finish in reasonable time anyway.
pub const MAX_SYMBOL_VALUE: u64 = 1_000_000;

/// The sign `delta = ±1` distinguishing the two even-index D-series normal
/// forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A formal commutative product of A-symbols; the empty product is the
/// type `1`.
///
/// Stored as a map from index to exponent with every exponent >= 1, so equal
/// values have equal representations and formatting is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultisingularityType {
    factors: BTreeMap<u64, u64>,
}

impl MultisingularityType {
    /// The empty product `1` (a point with no preimages).
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The single factor `A_index^exponent`.
    ///
    /// Panics on an out-of-range index or exponent; use the parser for
    /// untrusted input.
    pub fn single(index: u64, exponent: u64) -> Self {
        Self::from_factors([(index, exponent)])
    }

    /// Builds a product from `(index, exponent)` pairs, merging repeated
    /// indices by exponent addition and skipping zero exponents.
    ///
    /// Panics on index 0 or any value above [`MAX_SYMBOL_VALUE`]; use the
    /// parser for untrusted input.
    pub fn from_factors(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut factors = BTreeMap::new();
        for (index, exponent) in pairs {
            if exponent == 0 {
                continue;
            }
            assert!(
                (1..=MAX_SYMBOL_VALUE).contains(&index),
                "A-index {index} out of range"
            );
            let entry = factors.entry(index).or_insert(0);
            *entry += exponent;
            assert!(
                *entry <= MAX_SYMBOL_VALUE,
                "exponent of A{index} out of range"
            );
        }
        Self { factors }
    }

    /// Factors as `(index, exponent)` pairs, ascending by index.
    pub fn factors(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.factors.iter().map(|(&i, &k)| (i, k))
    }

    /// The exponent of `A_index`, zero when the factor is absent.
    pub fn exponent(&self, index: u64) -> u64 {
        self.factors.get(&index).copied().unwrap_or(0)
    }

    /// Total number of factors counted with multiplicity.
    pub fn factor_count(&self) -> u64 {
        self.factors.values().sum()
    }

    /// Codimension of the stratum: the degree budget `sum k (index + 1)`
    /// the multiple roots of this type consume.
    pub fn codim(&self) -> u64 {
        self.factors.iter().map(|(&i, &k)| k * (i + 1)).sum()
    }

    /// Exponent-wise sum of two products.
    pub fn multiply(&self, other: &Self) -> Self {
        Self::from_factors(self.factors().chain(other.factors()))
    }

    /// Exact division: `Some(self / factor)` when every exponent of `factor`
    /// fits inside `self`, `None` otherwise.
    pub fn divide(&self, factor: &Self) -> Option<Self> {
        let mut out = self.factors.clone();
        for (index, needed) in factor.factors() {
            let have = out.get(&index).copied().unwrap_or(0);
            if have < needed {
                return None;
            }
            if have == needed {
                out.remove(&index);
            } else {
                out.insert(index, have - needed);
            }
        }
        Some(Self { factors: out })
    }

    /// Splits the product by index parity and precomputes the quantities the
    /// adjacency formula consumes.
    pub fn profile(&self) -> Profile {
        let mut even_part = Vec::new();
        let mut odd_part = Vec::new();
        for (index, exponent) in self.factors() {
            if index.is_multiple_of(2) {
                even_part.push((index, exponent));
            } else {
                odd_part.push((index, exponent));
            }
        }
        Profile {
            m1: even_part.iter().map(|&(_, e)| e).sum(),
            m2: odd_part.iter().map(|&(_, e)| e).sum(),
            a1: self.exponent(1),
            a3: self.exponent(3),
            codim: self.codim(),
            even_part,
            odd_part,
        }
    }
}

impl fmt::Display for MultisingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (index, exponent) in self.factors() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "A{index}")?;
            if exponent > 1 {
                write!(f, "^{exponent}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultisingularityType {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        parse_type(text)
    }
}

/// A D-series Legendrian germ `(mu, delta)` with `mu >= 4`.
///
/// Odd-index germs of either sign are equivalent; the constructor and the
/// parser both normalize odd `mu` to `delta = +1`, and formatting prints odd
/// germs without a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DGerm {
    mu: u64,
    delta: Sign,
}

impl DGerm {
    /// Panics if `mu < 4` or `mu > MAX_SYMBOL_VALUE`; use the parser for
    /// untrusted input.
    pub fn new(mu: u64, delta: Sign) -> Self {
        assert!(
            (4..=MAX_SYMBOL_VALUE).contains(&mu),
            "D-index {mu} out of range"
        );
        let delta = if mu % 2 == 1 { Sign::Plus } else { delta };
        Self { mu, delta }
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }

    pub fn delta(&self) -> Sign {
        self.delta
    }
}

impl fmt::Display for DGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mu.is_multiple_of(2) {
            write!(f, "D{}{}", self.mu, self.delta)
        } else {
            write!(f, "D{}", self.mu)
        }
    }
}

impl FromStr for DGerm {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        parse_germ(text)
    }
}

/// A multisingularity type split by index parity, with the derived counts
/// used throughout the adjacency computation.
///
/// Even indices contribute roots of odd multiplicity `alpha + 1` (the sign
/// of the defining polynomial flips there); odd indices contribute roots of
/// even multiplicity `beta + 1` (no sign change). All fields are consistent
/// by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    /// `(alpha, i)` pairs over even indices, ascending by `alpha`.
    pub even_part: Vec<(u64, u64)>,
    /// `(beta, j)` pairs over odd indices, ascending by `beta`.
    pub odd_part: Vec<(u64, u64)>,
    /// Number of odd-multiplicity multiple roots: `sum i`.
    pub m1: u64,
    /// Number of even-multiplicity multiple roots: `sum j`.
    pub m2: u64,
    /// Exponent of `A1` (zero when absent).
    pub a1: u64,
    /// Exponent of `A3` (zero when absent).
    pub a3: u64,
    /// `sum i (alpha + 1) + sum j (beta + 1)`.
    pub codim: u64,
}

impl Profile {
    /// Rebuilds the multisingularity type; exact inverse of
    /// [`MultisingularityType::profile`].
    pub fn reconstruct(&self) -> MultisingularityType {
        MultisingularityType::from_factors(
            self.even_part.iter().chain(self.odd_part.iter()).copied(),
        )
    }
}

/// Errors from the type-expression and germ parsers. Positions are 1-based
/// character offsets into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed input; `expected` describes what would have been valid.
    Syntax {
        pos: usize,
        expected: &'static str,
    },
    /// A recognizable non-A symbol (D or E) inside a type expression.
    UnsupportedSymbol {
        pos: usize,
        symbol: char,
    },
    ZeroIndex {
        pos: usize,
    },
    ZeroExponent {
        pos: usize,
    },
    /// A literal above [`MAX_SYMBOL_VALUE`].
    NumberTooLarge {
        pos: usize,
    },
    MuTooSmall {
        mu: u64,
    },
    SignRequired {
        mu: u64,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, expected } => {
                write!(f, "syntax error at position {pos}: expected {expected}")
            }
            ParseError::UnsupportedSymbol { pos, symbol } => write!(
                f,
                "unsupported symbol '{symbol}' at position {pos}: only A-type factors are allowed"
            ),
            ParseError::ZeroIndex { pos } => {
                write!(f, "index must be at least 1 (position {pos})")
            }
            ParseError::ZeroExponent { pos } => {
                write!(f, "exponent must be at least 1 (position {pos})")
            }
            ParseError::NumberTooLarge { pos } => write!(
                f,
                "number at position {pos} exceeds the supported maximum of {MAX_SYMBOL_VALUE}"
            ),
            ParseError::MuTooSmall { mu } => {
                write!(f, "the D series starts at index 4, got D{mu}")
            }
            ParseError::SignRequired { mu } => {
                write!(f, "sign required for even index (D{mu}+ or D{mu}-)")
            }
        }
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    len: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.char_indices().peekable(),
            len: text.len(),
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    /// 1-based byte position of the next character (length + 1 at the end).
    fn pos(&mut self) -> usize {
        match self.chars.peek() {
            Some(&(i, _)) => i + 1,
            None => self.len + 1,
        }
    }

    fn bump(&mut self) {
        self.chars.next();
    }

    fn skip_whitespace(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    /// Parses a run of decimal digits into a bounded value.
    fn number(&mut self, expected: &'static str) -> Result<(u64, usize), ParseError> {
        let pos = self.pos();
        let mut value: u64 = 0;
        let mut seen = false;
        while let Some(c) = self.peek() {
            let Some(digit) = c.to_digit(10) else { break };
            seen = true;
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(digit)))
                .ok_or(ParseError::NumberTooLarge { pos })?;
            if value > MAX_SYMBOL_VALUE {
                return Err(ParseError::NumberTooLarge { pos });
            }
            self.bump();
        }
        if !seen {
            return Err(ParseError::Syntax { pos, expected });
        }
        Ok((value, pos))
    }
}

fn parse_type(text: &str) -> Result<MultisingularityType, ParseError> {
    let mut s = Scanner::new(text);
    s.skip_whitespace();
    match s.peek() {
        None => Err(ParseError::Syntax {
            pos: s.pos(),
            expected: "a type expression",
        }),
        Some('1') => {
            s.bump();
            s.skip_whitespace();
            if s.peek().is_some() {
                return Err(ParseError::Syntax {
                    pos: s.pos(),
                    expected: "end of input after \"1\"",
                });
            }
            Ok(MultisingularityType::one())
        }
        Some(_) => {
            let mut factors = BTreeMap::new();
            loop {
                parse_factor(&mut s, &mut factors)?;
                let mut separated = false;
                while matches!(s.peek(), Some(c) if c == '*' || c.is_whitespace()) {
                    s.bump();
                    separated = true;
                }
                match s.peek() {
                    None => break,
                    Some(_) if separated => continue,
                    Some(_) => {
                        return Err(ParseError::Syntax {
                            pos: s.pos(),
                            expected: "'*', whitespace, or end of input",
                        })
                    }
                }
            }
            Ok(MultisingularityType { factors })
        }
    }
}

fn parse_factor(s: &mut Scanner<'_>, factors: &mut BTreeMap<u64, u64>) -> Result<(), ParseError> {
    match s.peek() {
        Some('A') => s.bump(),
        Some(symbol @ ('D' | 'E')) => {
            return Err(ParseError::UnsupportedSymbol {
                pos: s.pos(),
                symbol,
            })
        }
        _ => {
            return Err(ParseError::Syntax {
                pos: s.pos(),
                expected: "an A-factor",
            })
        }
    }
    let (index, index_pos) = s.number("a factor index")?;
    if index == 0 {
        return Err(ParseError::ZeroIndex { pos: index_pos });
    }
    let exponent = if s.peek() == Some('^') {
        s.bump();
        let (exponent, exponent_pos) = s.number("an exponent")?;
        if exponent == 0 {
            return Err(ParseError::ZeroExponent { pos: exponent_pos });
        }
        exponent
    } else {
        1
    };
    let entry = factors.entry(index).or_insert(0);
    *entry += exponent;
    if *entry > MAX_SYMBOL_VALUE {
        return Err(ParseError::NumberTooLarge { pos: index_pos });
    }
    Ok(())
}

fn parse_germ(text: &str) -> Result<DGerm, ParseError> {
    let mut s = Scanner::new(text);
    s.skip_whitespace();
    match s.peek() {
        Some('D') => s.bump(),
        _ => {
            return Err(ParseError::Syntax {
                pos: s.pos(),
                expected: "a D-germ such as \"D4+\" or \"D5\"",
            })
        }
    }
    let (mu, _) = s.number("the D-series index")?;
    if mu < 4 {
        return Err(ParseError::MuTooSmall { mu });
    }
    let sign = match s.peek() {
        Some('+') => {
            s.bump();
            Some(Sign::Plus)
        }
        Some('-') => {
            s.bump();
            Some(Sign::Minus)
        }
        _ => None,
    };
    s.skip_whitespace();
    if s.peek().is_some() {
        return Err(ParseError::Syntax {
            pos: s.pos(),
            expected: "end of input",
        });
    }
    match (mu % 2, sign) {
        (0, None) => Err(ParseError::SignRequired { mu }),
        (0, Some(delta)) => Ok(DGerm::new(mu, delta)),
        // odd mu: both signs name the same germ
        (_, _) => Ok(DGerm::new(mu, Sign::Plus)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(text: &str) -> MultisingularityType {
        text.parse().unwrap()
    }

    #[test]
    fn parses_products() {
        assert_eq!(
            ty("A1^2 A3"),
            MultisingularityType::from_factors([(1, 2), (3, 1)])
        );
        assert_eq!(ty("1"), MultisingularityType::one());
        assert_eq!(ty("A2*A2"), MultisingularityType::single(2, 2));
        assert_eq!(
            ty("  A3 * A1\tA1 "),
            MultisingularityType::from_factors([(1, 2), (3, 1)])
        );
        assert_eq!(ty(" 1 "), MultisingularityType::one());
    }

    #[test]
    fn rejects_malformed_types() {
        assert!(matches!(
            "".parse::<MultisingularityType>(),
            Err(ParseError::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            "D2".parse::<MultisingularityType>(),
            Err(ParseError::UnsupportedSymbol {
                pos: 1,
                symbol: 'D'
            })
        ));
        assert!(matches!(
            "A1 E8".parse::<MultisingularityType>(),
            Err(ParseError::UnsupportedSymbol {
                pos: 4,
                symbol: 'E'
            })
        ));
        assert!(matches!(
            "A0".parse::<MultisingularityType>(),
            Err(ParseError::ZeroIndex { pos: 2 })
        ));
        assert!(matches!(
            "A2^0".parse::<MultisingularityType>(),
            Err(ParseError::ZeroExponent { pos: 4 })
        ));
        assert!(matches!(
            "A1A2".parse::<MultisingularityType>(),
            Err(ParseError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            "1 A1".parse::<MultisingularityType>(),
            Err(ParseError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            "A".parse::<MultisingularityType>(),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            "A1^".parse::<MultisingularityType>(),
            Err(ParseError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            "A1000001".parse::<MultisingularityType>(),
            Err(ParseError::NumberTooLarge { pos: 2 })
        ));
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(
            MultisingularityType::from_factors([(1, 2), (3, 1)]).to_string(),
            "A1^2 A3"
        );
        assert_eq!(MultisingularityType::one().to_string(), "1");
        assert_eq!(MultisingularityType::single(4, 1).to_string(), "A4");
    }

    #[test]
    fn parses_germs() {
        assert_eq!("D4+".parse::<DGerm>().unwrap(), DGerm::new(4, Sign::Plus));
        assert_eq!("D4-".parse::<DGerm>().unwrap(), DGerm::new(4, Sign::Minus));
        // odd-index germs of either sign are equivalent
        assert_eq!("D5-".parse::<DGerm>().unwrap(), DGerm::new(5, Sign::Plus));
        assert_eq!(
            "D5+".parse::<DGerm>().unwrap(),
            "D5".parse::<DGerm>().unwrap()
        );
        assert!(matches!(
            "D6".parse::<DGerm>(),
            Err(ParseError::SignRequired { mu: 6 })
        ));
        assert!(matches!(
            "D3+".parse::<DGerm>(),
            Err(ParseError::MuTooSmall { mu: 3 })
        ));
        assert!(matches!(
            "A4".parse::<DGerm>(),
            Err(ParseError::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            "D4++".parse::<DGerm>(),
            Err(ParseError::Syntax { pos: 4, .. })
        ));
    }

    #[test]
    fn germ_display_normalizes_odd_sign() {
        assert_eq!(DGerm::new(4, Sign::Minus).to_string(), "D4-");
        assert_eq!(DGerm::new(5, Sign::Minus).to_string(), "D5");
    }

    #[test]
    fn divides_exactly() {
        let a = MultisingularityType::from_factors([(1, 2), (3, 1)]);
        assert_eq!(
            a.divide(&MultisingularityType::single(1, 2)),
            Some(MultisingularityType::single(3, 1))
        );
        assert_eq!(
            MultisingularityType::single(1, 1).divide(&MultisingularityType::single(1, 2)),
            None
        );
        assert_eq!(
            MultisingularityType::single(3, 1).divide(&MultisingularityType::single(3, 1)),
            Some(MultisingularityType::one())
        );
    }

    #[test]
    fn profiles_match_definitions() {
        let p = ty("A1^2 A3").profile();
        assert!(p.even_part.is_empty());
        assert_eq!(p.odd_part, vec![(1, 2), (3, 1)]);
        assert_eq!((p.m1, p.m2, p.a1, p.a3, p.codim), (0, 3, 2, 1, 8));

        let p = MultisingularityType::one().profile();
        assert_eq!((p.m1, p.m2, p.a1, p.a3, p.codim), (0, 0, 0, 0, 0));

        let p = ty("A2").profile();
        assert_eq!(p.even_part, vec![(2, 1)]);
        assert!(p.odd_part.is_empty());
        assert_eq!((p.m1, p.m2, p.a1, p.a3, p.codim), (1, 0, 0, 0, 3));
    }

    #[test]
    fn codim_matches_direct_recomputation() {
        let a = ty("A1^3 A2 A4^2");
        let direct: u64 = a.factors().map(|(i, k)| (i + 1) * k).sum();
        assert_eq!(a.codim(), direct);
        assert_eq!(a.codim(), 3 * 2 + 3 + 2 * 5);
    }
}
