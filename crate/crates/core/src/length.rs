//! Validated code lengths n = 2^m + 1 and the residue class of their exponent.

use crate::error::{Error, Result};

/// Residue class of the exponent m. Every closed form in this crate is keyed
/// on one of the three supported classes; `t` is the family's own index, not
/// the exponent itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// m = 2t + 1. Closed forms are stated for t >= 5 (m >= 11).
    OddM { t: u32 },
    /// m = 4t + 2. Closed forms are stated for t >= 2 (m >= 10).
    FourTPlus2 { t: u32 },
    /// m = 8t + 4. Closed forms are stated for t >= 1 (m >= 12).
    EightTPlus4 { t: u32 },
    /// m divisible by 8: no closed forms apply; brute force only.
    Unsupported,
}

impl Family {
    pub fn classify(m: u32) -> Family {
        if m % 2 == 1 {
            Family::OddM { t: (m - 1) / 2 }
        } else if m % 4 == 2 {
            Family::FourTPlus2 { t: (m - 2) / 4 }
        } else if m % 8 == 4 {
            Family::EightTPlus4 { t: (m - 4) / 8 }
        } else {
            Family::Unsupported
        }
    }

    /// The family index t, if the class has one.
    pub fn t(self) -> Option<u32> {
        match self {
            Family::OddM { t } | Family::FourTPlus2 { t } | Family::EightTPlus4 { t } => Some(t),
            Family::Unsupported => None,
        }
    }

    /// Smallest t for which the family's closed forms are stated.
    pub fn floor(self) -> Option<u32> {
        match self {
            Family::OddM { .. } => Some(5),
            Family::FourTPlus2 { .. } => Some(2),
            Family::EightTPlus4 { .. } => Some(1),
            Family::Unsupported => None,
        }
    }

    /// t, provided the family is supported and t meets its floor.
    pub(crate) fn supported_t(self, m: u32) -> Result<u32> {
        match (self.t(), self.floor()) {
            (Some(t), Some(floor)) if t >= floor => Ok(t),
            (Some(t), Some(floor)) => Err(Error::FamilyFloor { m, t, floor }),
            _ => Err(Error::UnsupportedFamily { m }),
        }
    }
}

/// A code length n = 2^m + 1 with 2 <= m <= 62.
///
/// Construction verifies rather than assumes that 2 has order exactly 2m
/// modulo n, which is what makes |C_x| divide 2m and every coset closed
/// under negation (2^m ≡ -1 mod n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeLength {
    m: u32,
    n: u64,
    family: Family,
}

impl CodeLength {
    pub fn new(m: u32) -> Result<CodeLength> {
        if !(2..=62).contains(&m) {
            return Err(Error::ExponentRange { m });
        }
        let n = (1u64 << m) + 1;
        let mut y = 2u64 % n;
        let mut ord = 1u64;
        while y != 1 {
            y = crate::coset::double_mod(y, n);
            ord += 1;
        }
        assert_eq!(ord, 2 * u64::from(m), "2 must have order 2m mod 2^m + 1");
        Ok(CodeLength { m, n, family: Family::classify(m) })
    }

    #[inline]
    pub fn m(self) -> u32 {
        self.m
    }

    #[inline]
    pub fn n(self) -> u64 {
        self.n
    }

    /// Multiplicative order of 2 modulo n; always 2m.
    #[inline]
    pub fn ord(self) -> u32 {
        2 * self.m
    }

    #[inline]
    pub fn family(self) -> Family {
        self.family
    }
}
