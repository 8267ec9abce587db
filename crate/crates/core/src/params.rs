//! Code parameters: dimensions (brute-force and closed-form), Bose distances,
//! and auxiliary dimension estimates.
//!
//! For a designed distance delta and offset b ∈ {0, 1}, the code's dimension
//! is k = n - |C_b ∪ ... ∪ C_{delta-1}|. Because C_0 = {0} is the only coset
//! the b = 0 defining set adds, k drops by exactly 1 when b moves from 1 to 0,
//! wherever both are defined.
//!
//! Closed forms organize odd delta into rows:
//!
//! * slope rows [lo, hi]: every odd delta in the row leads its own coset, so
//!   each step of 2 in delta adds one full 2m-coset and
//!   k = n - m·delta + add·m for a per-row constant `add`; the Bose distance
//!   is delta itself;
//! * flat rows [lo, hi]: no new cosets appear inside the row, k is constant,
//!   and the Bose distance is the row cap `hi` (the first leader at or above
//!   every delta in the row);
//! * ladder rows between consecutive top-five leaders delta_{i+1} < delta_i:
//!   [delta_{i+1} + 2, delta_i] has constant k = 2m(i-1) + c for a family
//!   constant c, with Bose distance delta_i;
//! * a terminal row [delta_1 + 2, n] (b = 1 only): the defining set is
//!   everything but C_0, k = 1, Bose distance n.
//!
//! Odd delta between rows is genuinely outside the proven tables and maps to
//! [`Error::NoDimensionRow`].

use crate::closed_form::delta_ladder;
use crate::coset::{bose_distance, defining_set};
use crate::error::{Error, Result};
use crate::length::{CodeLength, Family};

/// Fully evaluated parameters of one code, computed from first principles
/// (orbit enumeration, no closed forms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub length: CodeLength,
    pub delta: u64,
    pub b: u8,
    /// k = n - |defining set|
    pub dimension: u64,
    pub defining_size: u64,
    /// Largest delta' giving the same code (first leader >= delta, or n).
    pub bose: u64,
    /// BCH bound on minimum distance: bose for b = 1; 2·bose for b = 0
    /// (negation closure glues the two runs through 0 into one).
    pub distance_bound: u64,
}

/// Compute every parameter of (n, delta, b) by orbit enumeration.
pub fn code_spec(len: CodeLength, delta: u64, b: u8) -> Result<CodeSpec> {
    let set = defining_set(len, delta, b)?;
    let bose = bose_distance(len, delta, b)?;
    Ok(CodeSpec {
        length: len,
        delta,
        b,
        dimension: len.n() - set.size,
        defining_size: set.size,
        bose,
        distance_bound: if b == 1 { bose } else { 2 * bose },
    })
}

/// Dimension by orbit enumeration alone.
pub fn dimension_brute(len: CodeLength, delta: u64, b: u8) -> Result<u64> {
    Ok(len.n() - defining_set(len, delta, b)?.size)
}

// ---------------------------------------------------------------------------
// Closed-form rows
// ---------------------------------------------------------------------------

enum Row {
    Slope { lo: u64, hi: u64, add: u64 },
    Flat { lo: u64, hi: u64, k1: u64 },
    Ladder { lo: u64, hi: u64, k1: u64 },
    Terminal { lo: u64 },
}

fn rows(len: CodeLength) -> Result<Vec<Row>> {
    let m = u64::from(len.m());
    let n = len.n();
    let t = len.family().supported_t(len.m())?;
    let mut rows = match len.family() {
        Family::OddM { .. } => {
            let p = 1u64 << (t + 1);
            let q = 1u64 << t;
            vec![
                Row::Slope { lo: p + 3, hi: p + q - 3, add: 5 },
                Row::Slope { lo: p + q + 3, hi: 2 * p - 9, add: 9 },
                Row::Flat { lo: 2 * p - 7, hi: 2 * p + 9, k1: n + 16 * m - 2 * p * m },
            ]
        }
        Family::FourTPlus2 { .. } => {
            let p = 1u64 << (2 * t + 1);
            let big_p = 2 * p;
            let q = 1u64 << (2 * t);
            let a = big_p + p;
            vec![
                Row::Slope { lo: p + 3, hi: big_p - 5, add: 3 },
                Row::Slope { lo: big_p + 5, hi: big_p + q - 3, add: 11 },
                Row::Slope { lo: big_p + q + 3, hi: a - 3, add: 15 },
                Row::Flat { lo: a - 1, hi: a + 5, k1: n + 16 * m - a * m },
            ]
        }
        Family::EightTPlus4 { .. } => {
            let a = 1u64 << (4 * t + 2);
            let b = 2 * a;
            let c = a / 2;
            let cap = b + a + c;
            vec![
                Row::Slope { lo: a + 3, hi: b - 5, add: 3 },
                Row::Slope { lo: b + 5, hi: b + c - 3, add: 11 },
                Row::Slope { lo: b + c + 3, hi: b + a - 3, add: 15 },
                Row::Slope { lo: b + a + 5, hi: cap - 3, add: 21 },
                Row::Flat { lo: cap - 1, hi: cap + 3, k1: n + 22 * m - cap * m },
            ]
        }
        Family::Unsupported => return Err(Error::UnsupportedFamily { m: len.m() }),
    };
    let ladder_const = match len.family() {
        Family::OddM { .. } => 3,
        Family::FourTPlus2 { .. } => 5,
        Family::EightTPlus4 { .. } => 9,
        Family::Unsupported => unreachable!(),
    };
    let ladder = delta_ladder(len)?;
    for i in 1..=4u64 {
        // row between the (i+1)-th and i-th largest leaders
        rows.push(Row::Ladder {
            lo: ladder.deltas[i as usize] + 2,
            hi: ladder.deltas[i as usize - 1],
            k1: 2 * m * (i - 1) + ladder_const,
        });
    }
    rows.push(Row::Terminal { lo: ladder.deltas[0] + 2 });
    Ok(rows)
}

fn locate_row(len: CodeLength, delta: u64, b: u8) -> Result<(u64, u64)> {
    let n = len.n();
    assert!(b <= 1, "offset b must be 0 or 1");
    if !(2..=n).contains(&delta) {
        return Err(Error::DeltaRange { delta, n });
    }
    if delta.is_multiple_of(2) {
        return Err(Error::EvenDelta { delta });
    }
    let m = u64::from(len.m());
    for row in rows(len)? {
        let (k1, bose) = match row {
            Row::Slope { lo, hi, add } if (lo..=hi).contains(&delta) => {
                (n + add * m - m * delta, delta)
            }
            Row::Flat { lo, hi, k1 } if (lo..=hi).contains(&delta) => (k1, hi),
            Row::Ladder { lo, hi, k1 } if (lo..=hi).contains(&delta) => (k1, hi),
            Row::Terminal { lo } if delta >= lo => {
                if b == 0 {
                    // with b = 0 the defining set is all of Z_n here; no code
                    return Err(Error::NoDimensionRow { delta, m: len.m() });
                }
                (1, n)
            }
            _ => continue,
        };
        return Ok((k1 - u64::from(1 - b), bose));
    }
    Err(Error::NoDimensionRow { delta, m: len.m() })
}

/// Closed-form dimension, valid on the proven rows of odd delta.
pub fn dimension_closed(len: CodeLength, delta: u64, b: u8) -> Result<u64> {
    locate_row(len, delta, b).map(|(k, _)| k)
}

/// Closed-form Bose distance for the same rows (independent of b).
pub fn bose_closed(len: CodeLength, delta: u64, b: u8) -> Result<u64> {
    locate_row(len, delta, b).map(|(_, bose)| bose)
}

// ---------------------------------------------------------------------------
// Auxiliary dimension estimates
// ---------------------------------------------------------------------------

/// The blunt count bound n - ord·(delta - 1), possibly non-positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericBound {
    pub value: i128,
    /// True when the bound says nothing (value <= 0).
    pub vacuous: bool,
}

/// k >= n - ord·(delta - 1); for narrow-sense binary codes with odd delta
/// only every other exponent starts a new coset, refining to
/// k >= n - ord·⌈(delta - 1)/2⌉.
pub fn dim_lower_bound_generic(
    n: u64,
    ord: u32,
    delta: u64,
    narrow_binary_odd: bool,
) -> GenericBound {
    let steps = if narrow_binary_odd { delta / 2 } else { delta - 1 };
    let value = n as i128 - i128::from(ord) * steps as i128;
    GenericBound { value, vacuous: value <= 0 }
}

/// Exact dimension of a q-ary narrow-sense BCH code of length n where n sits
/// in the window q^{⌊ord/2⌋} <= n <= q^ord - 1 and delta is small enough that
/// delta·(q^ord - 1) <= n·q^{⌈ord/2⌉}:
///
/// k = n - ord·⌈(delta - 1)(q - 1)/q⌉.
///
/// Lengths 2^m + 1 fall outside the delta window for every delta >= 2, so
/// this returns None for them; it exists as a cross-check for other lengths.
pub fn dim_aly(n: u64, q: u64, ord: u32, delta: u64) -> Option<u64> {
    if q < 2 || ord == 0 || delta < 2 || delta > n {
        return None;
    }
    let qo = u128::from(q).checked_pow(ord)?;
    let half_lo = u128::from(q).checked_pow(ord / 2)?;
    let half_hi = u128::from(q).checked_pow(ord.div_ceil(2))?;
    let n128 = u128::from(n);
    if !(half_lo..qo).contains(&n128) {
        return None;
    }
    if u128::from(delta) * (qo - 1) > n128 * half_hi {
        return None;
    }
    let drop = u128::from(ord) * (u128::from(delta - 1) * u128::from(q - 1)).div_ceil(u128::from(q));
    (n128 > drop).then(|| (n128 - drop) as u64)
}

/// Exact dimension for small delta, below where coset collisions start.
///
/// With h = ⌊(m - 1)/2⌋, every coset C_1, C_3, ..., C_{2^h + 1} is full and
/// distinct, giving for 2 <= delta <= 2^{h+1} (b = 1):
///
/// * m even: k = n - 2m·⌈(delta - 1)/2⌉;
/// * m odd: the same until delta = 2^{h+1} - 2; the last two values of delta
///   fold back through the short tail, k = n - 2m·(2^{h+1} - 2 - ⌊(delta-1)/2⌋).
///
/// For b = 0 the window is 2 <= delta <= 2^h + 2 and k is one less than the
/// b = 1 value: k = (n - 1) - 2m·⌈(delta - 1)/2⌉.
///
/// Returns None outside the window.
pub fn dim_small_delta(len: CodeLength, delta: u64, b: u8) -> Option<u64> {
    assert!(b <= 1, "offset b must be 0 or 1");
    let m = u64::from(len.m());
    let n = len.n();
    let h = (m - 1) / 2;
    let new_cosets = delta / 2; // ⌈(delta - 1)/2⌉ for integer delta
    if b == 1 {
        if !(2..=1 << (h + 1)).contains(&delta) {
            return None;
        }
        if m % 2 == 1 && delta > (1 << (h + 1)) - 2 {
            return Some(n - 2 * m * ((1 << (h + 1)) - 2 - (delta - 1) / 2));
        }
        Some(n - 2 * m * new_cosets)
    } else {
        if !(2..=(1 << h) + 2).contains(&delta) {
            return None;
        }
        Some((n - 1) - 2 * m * new_cosets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn len(m: u32) -> CodeLength {
        CodeLength::new(m).unwrap()
    }

    #[test]
    fn brute_spot_values() {
        assert_eq!(dimension_brute(len(11), 5, 1).unwrap(), 2005);
        assert_eq!(dimension_brute(len(11), 2, 1).unwrap(), 2027);
        assert_eq!(dimension_brute(len(10), 5, 1).unwrap(), 985);
        assert_eq!(dimension_brute(len(11), 343, 1).unwrap(), 3);
        assert_eq!(dimension_brute(len(11), 3, 0).unwrap(), 2026);
    }

    #[test]
    fn code_spec_assembles() {
        let s = code_spec(len(11), 343, 1).unwrap();
        assert_eq!((s.dimension, s.defining_size, s.bose, s.distance_bound), (3, 2046, 683, 683));
        let s0 = code_spec(len(3), 2, 0).unwrap();
        assert_eq!((s0.dimension, s0.bose, s0.distance_bound), (2, 3, 6));
    }

    #[test]
    fn closed_rows_match_frozen_values() {
        assert_eq!(dimension_closed(len(11), 67, 1).unwrap(), 1367);
        assert_eq!(dimension_closed(len(11), 121, 1).unwrap(), 817);
        assert_eq!(dimension_closed(len(11), 343, 1).unwrap(), 3);
        assert_eq!(dimension_closed(len(10), 35, 1).unwrap(), 705);
        assert_eq!(dimension_closed(len(12), 67, 1).unwrap(), 3329);
        assert_eq!(dimension_closed(len(12), 67, 0).unwrap(), 3328);
        assert_eq!(dimension_closed(len(11), 2049, 1).unwrap(), 1);
        assert_eq!(dimension_closed(len(11), 1001, 1).unwrap(), 1);
        assert_eq!(dimension_closed(len(11), 685, 1).unwrap(), 1);
    }

    #[test]
    fn closed_bose() {
        assert_eq!(bose_closed(len(11), 67, 1).unwrap(), 67);
        assert_eq!(bose_closed(len(11), 121, 1).unwrap(), 137);
        assert_eq!(bose_closed(len(11), 343, 1).unwrap(), 683);
        assert_eq!(bose_closed(len(11), 343, 0).unwrap(), 683);
        assert_eq!(bose_closed(len(11), 1001, 1).unwrap(), 2049);
        assert_eq!(bose_closed(len(10), 97, 1).unwrap(), 101);
        assert_eq!(bose_closed(len(12), 225, 1).unwrap(), 227);
    }

    #[test]
    fn row_errors() {
        assert_eq!(dimension_closed(len(11), 4, 1), Err(Error::EvenDelta { delta: 4 }));
        assert_eq!(dimension_closed(len(11), 1, 1), Err(Error::DeltaRange { delta: 1, n: 2049 }));
        assert_eq!(
            dimension_closed(len(11), 139, 1),
            Err(Error::NoDimensionRow { delta: 139, m: 11 })
        );
        assert_eq!(
            dimension_closed(len(11), 65, 1),
            Err(Error::NoDimensionRow { delta: 65, m: 11 })
        );
        // with b = 0 the terminal range holds no code
        assert_eq!(
            dimension_closed(len(11), 1001, 0),
            Err(Error::NoDimensionRow { delta: 1001, m: 11 })
        );
        assert_eq!(dimension_closed(len(16), 67, 1), Err(Error::UnsupportedFamily { m: 16 }));
        assert_eq!(
            dimension_closed(len(9), 67, 1),
            Err(Error::FamilyFloor { m: 9, t: 4, floor: 5 })
        );
    }

    #[test]
    fn generic_bound() {
        let g = dim_lower_bound_generic(2049, 22, 201, true);
        assert_eq!((g.value, g.vacuous), (-151, true));
        let g2 = dim_lower_bound_generic(2049, 22, 5, false);
        assert_eq!((g2.value, g2.vacuous), (2049 - 88, false));
    }

    #[test]
    fn aly_window() {
        assert_eq!(dim_aly(2047, 2, 11, 5), Some(2025));
        // antiprimitive lengths fail the delta window immediately
        assert_eq!(dim_aly(2049, 2, 22, 5), None);
        assert_eq!(dim_aly(2047, 2, 11, 2047), None);
        assert_eq!(dim_aly(2047, 2, 11, 1), None);
    }

    #[test]
    fn small_delta_band() {
        assert_eq!(dim_small_delta(len(10), 5, 1), Some(985));
        assert_eq!(dim_small_delta(len(11), 5, 1), Some(2005));
        assert_eq!(dim_small_delta(len(11), 3, 0), Some(2026));
        assert_eq!(dim_small_delta(len(10), 6, 0), Some(964));
        // odd-m fold at the top of the window
        assert_eq!(dim_small_delta(len(11), 63, 1), Some(1367));
        assert_eq!(dim_small_delta(len(11), 64, 1), Some(1367));
        // window edges
        assert_eq!(dim_small_delta(len(11), 65, 1), None);
        assert_eq!(dim_small_delta(len(10), 33, 1), None);
        assert_eq!(dim_small_delta(len(10), 19, 0), None);
        assert_eq!(dim_small_delta(len(10), 1, 1), None);
    }

    #[test]
    fn closed_matches_brute_on_rows() {
        for m in [10, 11, 12] {
            let l = len(m);
            let mut delta = 3;
            while delta <= l.n() {
                for b in [0u8, 1u8] {
                    if let Ok(k) = dimension_closed(l, delta, b) {
                        assert_eq!(k, dimension_brute(l, delta, b).unwrap(), "m={m} d={delta} b={b}");
                        assert_eq!(
                            bose_closed(l, delta, b).unwrap(),
                            crate::coset::bose_distance(l, delta, b).unwrap(),
                            "m={m} d={delta} b={b}"
                        );
                    }
                }
                delta += 2;
            }
        }
    }
}
