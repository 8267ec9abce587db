//! Closed-form coset-leader structure near the top of the leader range.
//!
//! For each supported family of exponents m the odd residues in an initial
//! envelope [1, E] split into alternating runs of leaders and non-leaders
//! whose endpoints are fixed polynomials in powers of two:
//!
//! * m = 2t + 1 (odd), t >= 5, with p = 2^{t+1}, q = 2^t:
//!   leaders on [1, p-3], [p+3, p+q-3], [p+q+3, 2p-9]; non-leaders on
//!   [p-1, p+1], [p+q-1, p+q+1], [2p-7, 2p+7]; E = 2p + 7.
//! * m = 4t + 2, t >= 2, with p = 2^{2t+1}, P = 2p, q = 2^{2t}:
//!   leaders on [1, p-1], [p+3, P-5], [P+5, P+q-3], [P+q+3, P+p-3];
//!   non-leaders on {p+1}, [P-3, P+3], [P+q-1, P+q+1], [P+p-1, P+p+3];
//!   E = P + p + 3.
//! * m = 8t + 4, t >= 1, with A = 2^{4t+2}, B = 2A, C = A/2:
//!   leaders on [1, A-1], [A+3, B-5], [B+5, B+C-3], [B+C+3, B+A-3],
//!   [B+A+5, B+A+C-3]; non-leaders on {A+1}, [B-3, B+3], [B+C-1, B+C+1],
//!   [B+A-1, B+A+3], [B+A+C-1, B+A+C+1]; E = B + A + C + 1.
//!
//! The five largest coset leaders of the length and the cardinalities of
//! their cosets are likewise closed-form (the largest leader's coset is the
//! short orbit of n/3, n/5 or 3n/17; the rest are full 2m-orbits).
//!
//! Interval ladders: two self-similar partitions of initial segments into
//! intervals I_s (stride-4 lengths) and J_s (stride-16 lengths), indexed so
//! that interval s decomposes as base interval 2^i plus a packed offset
//! λ, where i is the 2-adic valuation of s.

use crate::error::{Error, Result};
use crate::length::{CodeLength, Family};

/// Verdict of the closed-form leader classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeaderStatus {
    Leader,
    NotLeader,
}

/// A residue together with its classified status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeaderVerdict {
    pub x: u64,
    pub status: LeaderStatus,
}

/// Closed-form run structure for one family instance: alternating inclusive
/// runs (status, lo, hi) tiling the odd residues of [1, envelope].
pub(crate) struct RangeTable {
    pub runs: Vec<(LeaderStatus, u64, u64)>,
    pub envelope: u64,
}

use LeaderStatus::{Leader, NotLeader};

pub(crate) fn range_table(len: CodeLength) -> Result<RangeTable> {
    let m = len.m();
    let t = len.family().supported_t(m)?;
    let runs: Vec<(LeaderStatus, u64, u64)> = match len.family() {
        Family::OddM { .. } => {
            let p = 1u64 << (t + 1);
            let q = 1u64 << t;
            vec![
                (Leader, 1, p - 3),
                (NotLeader, p - 1, p + 1),
                (Leader, p + 3, p + q - 3),
                (NotLeader, p + q - 1, p + q + 1),
                (Leader, p + q + 3, 2 * p - 9),
                (NotLeader, 2 * p - 7, 2 * p + 7),
            ]
        }
        Family::FourTPlus2 { .. } => {
            let p = 1u64 << (2 * t + 1);
            let big_p = 2 * p;
            let q = 1u64 << (2 * t);
            vec![
                (Leader, 1, p - 1),
                (NotLeader, p + 1, p + 1),
                (Leader, p + 3, big_p - 5),
                (NotLeader, big_p - 3, big_p + 3),
                (Leader, big_p + 5, big_p + q - 3),
                (NotLeader, big_p + q - 1, big_p + q + 1),
                (Leader, big_p + q + 3, big_p + p - 3),
                (NotLeader, big_p + p - 1, big_p + p + 3),
            ]
        }
        Family::EightTPlus4 { .. } => {
            let a = 1u64 << (4 * t + 2);
            let b = 2 * a;
            let c = a / 2;
            vec![
                (Leader, 1, a - 1),
                (NotLeader, a + 1, a + 1),
                (Leader, a + 3, b - 5),
                (NotLeader, b - 3, b + 3),
                (Leader, b + 5, b + c - 3),
                (NotLeader, b + c - 1, b + c + 1),
                (Leader, b + c + 3, b + a - 3),
                (NotLeader, b + a - 1, b + a + 3),
                (Leader, b + a + 5, b + a + c - 3),
                (NotLeader, b + a + c - 1, b + a + c + 1),
            ]
        }
        Family::Unsupported => return Err(Error::UnsupportedFamily { m }),
    };
    // The runs must tile [1, envelope] over odd residues with no gap.
    let envelope = runs.last().unwrap().2;
    debug_assert!(runs.windows(2).all(|w| w[1].1 == w[0].2 + 2));
    debug_assert!(runs.iter().all(|&(_, lo, hi)| lo % 2 == 1 && hi % 2 == 1 && lo <= hi));
    Ok(RangeTable { runs, envelope })
}

/// Largest residue the classification covers for this length.
pub fn classification_envelope(len: CodeLength) -> Result<u64> {
    Ok(range_table(len)?.envelope)
}

/// Classify an odd residue by table lookup. Residues above the envelope are
/// out of range for the closed form (the brute-force test still applies).
pub fn classify_leader(x: u64, len: CodeLength) -> Result<LeaderVerdict> {
    if x == 0 {
        return Err(Error::ZeroResidue);
    }
    if x >= len.n() {
        return Err(Error::ResidueRange { x, n: len.n() });
    }
    if x.is_multiple_of(2) {
        return Err(Error::EvenResidue { x });
    }
    let table = range_table(len)?;
    if x > table.envelope {
        return Err(Error::BeyondEnvelope { x, m: len.m() });
    }
    let status = table
        .runs
        .iter()
        .find(|&&(_, lo, hi)| lo <= x && x <= hi)
        .map(|&(s, _, _)| s)
        .expect("odd residues tile the envelope");
    Ok(LeaderVerdict { x, status })
}

/// The five largest coset leaders of n = 2^m + 1, descending, with the
/// cardinalities of their cosets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaLadder {
    pub deltas: [u64; 5],
    pub coset_sizes: [u64; 5],
}

/// Closed form for the five largest coset leaders.
pub fn delta_ladder(len: CodeLength) -> Result<DeltaLadder> {
    let m = len.m();
    let n = len.n();
    let t = len.family().supported_t(m)?;
    let ord = u64::from(len.ord());
    let (deltas, sizes): ([u64; 5], [u64; 5]) = match len.family() {
        Family::OddM { .. } => {
            // n = 2^{2t+1} + 1 ≡ 0 (mod 3); the top leader n/3 has the short
            // orbit {n/3, 2n/3}.
            debug_assert_eq!(n % 3, 0);
            let d1 = n / 3;
            let d2 = (n - 3) / 6;
            ([d1, d2, d2 - 2, d2 - 8, d2 - 10], [2, ord, ord, ord, ord])
        }
        Family::FourTPlus2 { .. } => {
            debug_assert_eq!(n % 5, 0);
            let d1 = n / 5;
            let d2 = (1u64 << (4 * t - 1)) + ((1u64 << (4 * t)) - 1) / 5;
            let (d4, d5) = if t == 2 { (d2 - 8, d2 - 24) } else { (d2 - 96, d2 - 102) };
            ([d1, d2, d2 - 6, d4, d5], [4, ord, ord, ord, ord])
        }
        Family::EightTPlus4 { .. } => {
            debug_assert_eq!(n % 17, 0);
            let d1 = 3 * (n / 17);
            if t == 1 {
                // At t = 1 the second leader sits 6 below the top, and the
                // remaining three cluster tightly: the next gap of 24 is
                // followed by gaps of 2 and 6 (the value 38 below the third
                // leader fails the m-step leader test, landing in C_329).
                let d2 = d1 - 6;
                let d3 = d2 - 24;
                ([d1, d2, d3, d3 - 2, d3 - 8], [8, ord, ord, ord, ord])
            } else {
                let d2 = d1 - (d1 + 45) / 128;
                let d3 = d2 - 90;
                let (d4, d5) =
                    if t == 2 { (d3 - 6, d3 - 390) } else { (d3 - 22950, d3 - 23040) };
                ([d1, d2, d3, d4, d5], [8, ord, ord, ord, ord])
            }
        }
        Family::Unsupported => return Err(Error::UnsupportedFamily { m }),
    };
    debug_assert!(deltas.windows(2).all(|w| w[0] > w[1]));
    Ok(DeltaLadder { deltas, coset_sizes: sizes })
}

/// Cardinality of C_x by closed form where one exists: |C_0| = 1; the top
/// ladder leader has the short orbit; everything else in the envelope is a
/// full orbit of length 2m. Falls back to direct orbit length outside.
pub fn coset_cardinality(x: u64, len: CodeLength) -> Result<u64> {
    let n = len.n();
    if x >= n {
        return Err(Error::ResidueRange { x, n });
    }
    if x == 0 {
        return Ok(1);
    }
    Ok(crate::coset::coset_of(x, len)?.size as u64)
}

// ---------------------------------------------------------------------------
// Interval ladders
// ---------------------------------------------------------------------------

/// Which of the two self-similar interval partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Stride-2 refinement: 2^{t-3} intervals covering [1, 2^{2t-5}].
    Ia1,
    /// Stride-4 refinement: 2^{t-2} intervals covering [1, 3·2^{4t-6}].
    Ia2,
}

/// One materialized partition: `intervals[s-1]` is the inclusive interval
/// indexed s, for s = 1 ..= count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPartition {
    pub scheme: Scheme,
    pub t: u32,
    pub intervals: Vec<(u64, u64)>,
}

impl Scheme {
    fn floor(self) -> u32 {
        match self {
            Scheme::Ia1 => 5,
            Scheme::Ia2 => 2,
        }
    }

    /// Largest t whose interval endpoints fit u64.
    fn cap(self) -> u32 {
        match self {
            Scheme::Ia1 => 33,
            Scheme::Ia2 => 16,
        }
    }

    fn check_t(self, t: u32) -> Result<()> {
        if t < self.floor() || t > self.cap() {
            return Err(Error::PartitionRange { t, floor: self.floor(), cap: self.cap() });
        }
        Ok(())
    }

    fn levels(self, t: u32) -> u32 {
        match self {
            Scheme::Ia1 => t - 3,
            Scheme::Ia2 => t - 2,
        }
    }

    /// Base interval at index 2^i (the first interval of level i + base).
    fn base_interval(self, i: u32) -> (u64, u64) {
        match self {
            Scheme::Ia1 => {
                if i == 0 {
                    (1, 2)
                } else {
                    // lo = 1 + 2(4^i - 1)/3, hi = 2^{2i+1}
                    (1 + 2 * ((1u64 << (2 * i)) - 1) / 3, 1u64 << (2 * i + 1))
                }
            }
            Scheme::Ia2 => {
                if i == 0 {
                    (1, 12)
                } else {
                    // lo = 1 + 4(16^i - 1)/5, hi = 3·2^{4i+2}
                    (1 + 4 * ((1u64 << (4 * i)) - 1) / 5, 3u64 << (4 * i + 2))
                }
            }
        }
    }

    /// Reconstruction stride: interval s = 2^i·(odd) is the base interval
    /// 2^i translated by `stride(i) · λ` for the packed offset λ.
    fn stride(self, i: u32) -> u64 {
        match self {
            Scheme::Ia1 => 1u64 << (2 * i + 3),
            Scheme::Ia2 => 3u64 << (4 * i + 6),
        }
    }

    /// Spread the bits of `packed` with the scheme's digit stride:
    /// bit j of `packed` contributes 2^{2j} (Ia1) or 2^{4j} (Ia2) to λ.
    fn spread(self, mut packed: u64) -> u64 {
        let shift = match self {
            Scheme::Ia1 => 2,
            Scheme::Ia2 => 4,
        };
        let mut lambda = 0u64;
        let mut place = 0u32;
        while packed != 0 {
            if packed & 1 == 1 {
                lambda |= 1 << place;
            }
            packed >>= 1;
            place += shift;
        }
        lambda
    }
}

/// Materialize the partition for parameter t: each level doubles the count
/// by appending a shifted copy of everything so far, except that the last
/// interval's shifted copy stretches to the new level's terminal.
pub fn ia_partition(scheme: Scheme, t: u32) -> Result<IntervalPartition> {
    scheme.check_t(t)?;
    let (mut intervals, first_lvl): (Vec<(u64, u64)>, u32) = match scheme {
        Scheme::Ia1 => (vec![(1, 2), (3, 8)], 5),
        Scheme::Ia2 => (vec![(1, 12)], 3),
    };
    for lvl in first_lvl..=t {
        let (shift, terminal) = match scheme {
            Scheme::Ia1 => (1u64 << (2 * lvl - 7), 1u64 << (2 * lvl - 5)),
            Scheme::Ia2 => (3u64 << (4 * lvl - 10), 3u64 << (4 * lvl - 6)),
        };
        let prev_len = intervals.len();
        for j in 0..prev_len {
            let (lo, hi) = intervals[j];
            if j + 1 < prev_len {
                intervals.push((lo + shift, hi + shift));
            } else {
                intervals.push((lo + shift, terminal));
            }
        }
    }
    debug_assert!(intervals.windows(2).all(|w| w[1].0 == w[0].1 + 1), "intervals abut");
    debug_assert_eq!(intervals.len(), 1usize << scheme.levels(t));
    Ok(IntervalPartition { scheme, t, intervals })
}

/// Decompose an interval index: s = 2^i·(2u+1) maps to (i, λ) with λ the
/// stride-spread digits of u; the final index s = 2^{levels} maps to
/// (levels, 0).
pub fn interval_locate(scheme: Scheme, t: u32, s: u64) -> Result<(u32, u64)> {
    scheme.check_t(t)?;
    let count = 1u64 << scheme.levels(t);
    if s == 0 || s > count {
        return Err(Error::IntervalIndex { s, max: count });
    }
    if s == count {
        return Ok((scheme.levels(t), 0));
    }
    let i = s.trailing_zeros();
    let packed = s >> (i + 1);
    Ok((i, scheme.spread(packed)))
}

/// Rebuild interval s from its (i, λ) decomposition: the base interval at
/// 2^i translated by stride(i)·λ.
pub fn interval_reconstruct(scheme: Scheme, t: u32, s: u64) -> Result<(u64, u64)> {
    let (i, lambda) = interval_locate(scheme, t, s)?;
    let (lo, hi) = scheme.base_interval(i);
    let offset = scheme.stride(i) * lambda;
    Ok((lo + offset, hi + offset))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn len(m: u32) -> CodeLength {
        CodeLength::new(m).unwrap()
    }

    #[test]
    fn envelopes() {
        for (m, e) in [(11, 135), (13, 263), (10, 99), (14, 387), (12, 225), (20, 3585)] {
            assert_eq!(classification_envelope(len(m)).unwrap(), e, "m = {m}");
        }
    }

    #[test]
    fn classify_odd_m() {
        let l = len(11); // t = 5: p = 64, q = 32
        let is = |x: u64| classify_leader(x, l).unwrap().status;
        assert_eq!(is(1), Leader);
        assert_eq!(is(61), Leader);
        assert_eq!(is(63), NotLeader);
        assert_eq!(is(65), NotLeader);
        assert_eq!(is(67), Leader);
        assert_eq!(is(93), Leader);
        assert_eq!(is(95), NotLeader);
        assert_eq!(is(97), NotLeader);
        assert_eq!(is(99), Leader);
        assert_eq!(is(119), Leader);
        assert_eq!(is(121), NotLeader);
        assert_eq!(is(135), NotLeader);
        assert_eq!(classify_leader(137, l), Err(Error::BeyondEnvelope { x: 137, m: 11 }));
        assert_eq!(classify_leader(0, l), Err(Error::ZeroResidue));
        assert_eq!(classify_leader(4, l), Err(Error::EvenResidue { x: 4 }));
        assert_eq!(classify_leader(2049, l), Err(Error::ResidueRange { x: 2049, n: 2049 }));
    }

    #[test]
    fn classify_four_t_plus_2() {
        let l = len(10); // t = 2: p = 32, P = 64, q = 16
        let is = |x: u64| classify_leader(x, l).unwrap().status;
        assert_eq!(is(31), Leader);
        assert_eq!(is(33), NotLeader);
        assert_eq!(is(35), Leader);
        assert_eq!(is(59), Leader);
        assert_eq!(is(61), NotLeader);
        assert_eq!(is(67), NotLeader);
        assert_eq!(is(69), Leader);
        assert_eq!(is(77), Leader);
        assert_eq!(is(79), NotLeader);
        assert_eq!(is(81), NotLeader);
        assert_eq!(is(83), Leader);
        assert_eq!(is(93), Leader);
        assert_eq!(is(95), NotLeader);
        assert_eq!(is(99), NotLeader);
        assert_eq!(classify_leader(101, l), Err(Error::BeyondEnvelope { x: 101, m: 10 }));
    }

    #[test]
    fn classify_eight_t_plus_4() {
        let l = len(12); // t = 1: A = 64, B = 128, C = 32
        let is = |x: u64| classify_leader(x, l).unwrap().status;
        assert_eq!(is(63), Leader);
        assert_eq!(is(65), NotLeader);
        assert_eq!(is(67), Leader);
        assert_eq!(is(123), Leader);
        assert_eq!(is(125), NotLeader);
        assert_eq!(is(131), NotLeader);
        assert_eq!(is(133), Leader);
        assert_eq!(is(157), Leader);
        assert_eq!(is(159), NotLeader);
        assert_eq!(is(161), NotLeader);
        assert_eq!(is(163), Leader);
        assert_eq!(is(189), Leader);
        assert_eq!(is(191), NotLeader);
        assert_eq!(is(195), NotLeader);
        assert_eq!(is(197), Leader);
        assert_eq!(is(221), Leader);
        assert_eq!(is(223), NotLeader);
        assert_eq!(is(225), NotLeader);
        assert_eq!(classify_leader(227, l), Err(Error::BeyondEnvelope { x: 227, m: 12 }));
    }

    #[test]
    fn unsupported_and_floor() {
        assert_eq!(classify_leader(3, len(16)), Err(Error::UnsupportedFamily { m: 16 }));
        assert_eq!(
            classify_leader(3, len(9)),
            Err(Error::FamilyFloor { m: 9, t: 4, floor: 5 })
        );
        assert_eq!(delta_ladder(len(24)), Err(Error::UnsupportedFamily { m: 24 }));
        assert_eq!(delta_ladder(len(6)), Err(Error::FamilyFloor { m: 6, t: 1, floor: 2 }));
    }

    #[test]
    fn ladders() {
        let cases: [(u32, [u64; 5]); 5] = [
            (11, [683, 341, 339, 333, 331]),
            (13, [2731, 1365, 1363, 1357, 1355]),
            (10, [205, 179, 173, 171, 155]),
            (14, [3277, 2867, 2861, 2771, 2765]),
            (12, [723, 717, 693, 691, 685]),
        ];
        for (m, expect) in cases {
            let ladder = delta_ladder(len(m)).unwrap();
            assert_eq!(ladder.deltas, expect, "m = {m}");
            assert_eq!(ladder.coset_sizes[1..], [u64::from(2 * m); 4][..], "m = {m}");
        }
        assert_eq!(delta_ladder(len(11)).unwrap().coset_sizes[0], 2);
        assert_eq!(delta_ladder(len(10)).unwrap().coset_sizes[0], 4);
        assert_eq!(delta_ladder(len(12)).unwrap().coset_sizes[0], 8);
    }

    #[test]
    fn cardinalities() {
        let l = len(11);
        assert_eq!(coset_cardinality(0, l).unwrap(), 1);
        assert_eq!(coset_cardinality(683, l).unwrap(), 2);
        assert_eq!(coset_cardinality(1, l).unwrap(), 22);
        let l3 = len(3);
        assert_eq!(coset_cardinality(3, l3).unwrap(), 2);
        assert_eq!(coset_cardinality(9, l3), Err(Error::ResidueRange { x: 9, n: 9 }));
    }

    #[test]
    fn ia1_partitions() {
        let p = ia_partition(Scheme::Ia1, 5).unwrap();
        assert_eq!(p.intervals, vec![(1, 2), (3, 8), (9, 10), (11, 32)]);
        let p6 = ia_partition(Scheme::Ia1, 6).unwrap();
        assert_eq!(p6.intervals.len(), 8);
        assert_eq!(p6.intervals[0], (1, 2));
        assert_eq!(p6.intervals[4], (33, 34));
        assert_eq!(p6.intervals[7], (43, 128));
        assert_eq!(
            ia_partition(Scheme::Ia1, 4),
            Err(Error::PartitionRange { t: 4, floor: 5, cap: 33 })
        );
        // every partition tiles [1, 2^{2t-5}]
        for t in 5..=9 {
            let p = ia_partition(Scheme::Ia1, t).unwrap();
            assert_eq!(p.intervals[0].0, 1);
            assert_eq!(p.intervals.last().unwrap().1, 1u64 << (2 * t - 5));
        }
    }

    #[test]
    fn ia2_partitions() {
        let p = ia_partition(Scheme::Ia2, 2).unwrap();
        assert_eq!(p.intervals, vec![(1, 12)]);
        let p3 = ia_partition(Scheme::Ia2, 3).unwrap();
        assert_eq!(p3.intervals, vec![(1, 12), (13, 192)]);
        let p4 = ia_partition(Scheme::Ia2, 4).unwrap();
        assert_eq!(p4.intervals, vec![(1, 12), (13, 192), (193, 204), (205, 3072)]);
        for t in 2..=6 {
            let p = ia_partition(Scheme::Ia2, t).unwrap();
            assert_eq!(p.intervals[0].0, 1);
            assert_eq!(p.intervals.last().unwrap().1, 3u64 << (4 * t - 6));
        }
    }

    #[test]
    fn locate_and_reconstruct_match_materialized() {
        for t in 5..=9 {
            let p = ia_partition(Scheme::Ia1, t).unwrap();
            for (idx, &iv) in p.intervals.iter().enumerate() {
                let s = idx as u64 + 1;
                assert_eq!(interval_reconstruct(Scheme::Ia1, t, s).unwrap(), iv, "t={t} s={s}");
            }
        }
        for t in 2..=6 {
            let p = ia_partition(Scheme::Ia2, t).unwrap();
            for (idx, &iv) in p.intervals.iter().enumerate() {
                let s = idx as u64 + 1;
                assert_eq!(interval_reconstruct(Scheme::Ia2, t, s).unwrap(), iv, "t={t} s={s}");
            }
        }
    }

    #[test]
    fn locate_examples() {
        assert_eq!(interval_locate(Scheme::Ia1, 8, 8).unwrap(), (3, 0));
        assert_eq!(interval_locate(Scheme::Ia1, 8, 10).unwrap(), (1, 4));
        assert_eq!(interval_locate(Scheme::Ia1, 8, 15).unwrap(), (0, 21));
        assert_eq!(interval_locate(Scheme::Ia2, 8, 8).unwrap(), (3, 0));
        assert_eq!(interval_locate(Scheme::Ia2, 8, 10).unwrap(), (1, 16));
        assert_eq!(interval_locate(Scheme::Ia2, 8, 15).unwrap(), (0, 273));
        assert_eq!(
            interval_locate(Scheme::Ia1, 5, 5),
            Err(Error::IntervalIndex { s: 5, max: 4 })
        );
        assert_eq!(
            interval_locate(Scheme::Ia1, 5, 0),
            Err(Error::IntervalIndex { s: 0, max: 4 })
        );
    }
}
