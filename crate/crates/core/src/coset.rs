//! 2-cyclotomic coset arithmetic modulo n = 2^m + 1.
//!
//! The coset of x is C_x = { x·2^k mod n : k >= 0 }. Because 2^m ≡ -1 (mod n),
//! each coset is closed under negation: with y_{x,k} = x·2^k mod n,
//!
//! ```text
//! C_x = { y_{x,k}, n - y_{x,k} : 0 <= k < m }.
//! ```
//!
//! So x leads its coset (is its minimum) iff y_{x,k} >= x and n - y_{x,k} >= x
//! for every k in [0, m) — an m-step test with early exit and no allocation.
//! An even x >= 2 never leads: x/2 lies in the same coset.
//!
//! All residue arithmetic stays inside u64. n <= 2^62 + 1, and the only
//! product ever formed is a doubling, so `x << 1` cannot overflow and one
//! conditional subtraction reduces it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::length::CodeLength;

/// One cyclotomic coset: leader (minimum), elements in ascending order, size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRecord {
    pub leader: u64,
    pub elements: Vec<u64>,
    pub size: usize,
}

/// Defining set of the code with designed distance `delta` and offset `b`:
/// the union C_b ∪ ... ∪ C_{delta-1}. For the same odd delta, b = 0 adds
/// exactly the singleton C_0 = {0} on top of the b = 1 set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    pub n: u64,
    pub delta: u64,
    pub b: u8,
    /// |C_b ∪ ... ∪ C_{delta-1}|
    pub size: u64,
    /// Distinct coset leaders occurring, ascending (0 first when b = 0).
    pub leaders: Vec<u64>,
}

/// x·2 mod n without overflow (valid for x < n <= 2^62 + 1).
#[inline]
pub(crate) fn double_mod(x: u64, n: u64) -> u64 {
    let d = x << 1;
    if d >= n {
        d - n
    } else {
        d
    }
}

/// Materialize C_x. x = 0 yields the singleton zero coset.
pub fn coset_of(x: u64, len: CodeLength) -> Result<CosetRecord> {
    let n = len.n();
    if x >= n {
        return Err(Error::ResidueRange { x, n });
    }
    let mut elements = Vec::with_capacity(len.ord() as usize);
    elements.push(x);
    let mut y = double_mod(x, n);
    while y != x {
        elements.push(y);
        y = double_mod(y, n);
    }
    elements.sort_unstable();
    Ok(CosetRecord { leader: elements[0], size: elements.len(), elements })
}

/// Leader test in at most m doublings, without materializing the orbit.
pub fn is_coset_leader(x: u64, len: CodeLength) -> Result<bool> {
    let n = len.n();
    if x == 0 {
        return Err(Error::ZeroResidue);
    }
    if x >= n {
        return Err(Error::ResidueRange { x, n });
    }
    if x.is_multiple_of(2) {
        return Ok(false);
    }
    let mut y = x;
    for _ in 0..len.m() {
        if y < x || n - y < x {
            return Ok(false);
        }
        y = double_mod(y, n);
    }
    Ok(true)
}

/// All coset leaders in [lo, hi], ascending, with their cosets. An inverted
/// range is an empty result, not an error.
pub fn enumerate_leaders(len: CodeLength, lo: u64, hi: u64) -> Result<Vec<CosetRecord>> {
    let n = len.n();
    if lo == 0 {
        return Err(Error::ZeroResidue);
    }
    if hi >= n {
        return Err(Error::ResidueRange { x: hi, n });
    }
    let mut out = Vec::new();
    let mut x = lo | 1; // leaders above 0 are odd
    while x <= hi {
        if is_coset_leader(x, len)? {
            out.push(coset_of(x, len)?);
        }
        x += 2;
    }
    Ok(out)
}

/// The `count` largest coset leaders, descending (fewer if the length has
/// fewer cosets).
pub fn top_leaders(len: CodeLength, count: usize) -> Vec<CosetRecord> {
    let n = len.n();
    let mut out = Vec::with_capacity(count);
    let mut x = n - 2; // n is odd, so n - 2 is the largest odd candidate
    while out.len() < count && x >= 1 {
        if is_coset_leader(x, len).expect("odd nonzero candidate") {
            out.push(coset_of(x, len).expect("in range"));
        }
        match x.checked_sub(2) {
            Some(next) => x = next,
            None => break,
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Per-length memo table
// ---------------------------------------------------------------------------

/// Memoized coset structure of one length: sorted nonzero leaders, their coset
/// sizes and prefix sums (defining-set sizes become a binary search), and —
/// for small n — a per-residue leader array that makes Bose-distance walks a
/// table lookup.
pub(crate) struct CosetTable {
    pub leaders: Vec<u64>,
    /// prefix[i] = |C_{leaders[0]}| + ... + |C_{leaders[i]}|
    pub prefix: Vec<u64>,
    /// leader_of[x] for every residue; empty when n > LEADER_OF_CAP.
    pub leader_of: Vec<u32>,
    pub max_leader: u64,
}

/// Above this the lazy memo is bypassed and every query recomputes orbits.
pub(crate) const MEMO_CAP: u64 = (1 << 24) + 1;
/// Above this the memo keeps only the leader/size arrays, not leader_of.
const LEADER_OF_CAP: u64 = (1 << 20) + 1;

impl CosetTable {
    fn build(len: CodeLength) -> CosetTable {
        let n = len.n();
        let keep_leader_of = n <= LEADER_OF_CAP;
        let mut leader_of = if keep_leader_of { vec![0u32; n as usize] } else { Vec::new() };
        let words = (n as usize).div_ceil(64);
        let mut visited = vec![0u64; words];
        let mut leaders = Vec::new();
        let mut prefix = Vec::new();
        let mut acc = 0u64;
        let mut orbit = Vec::with_capacity(len.ord() as usize);
        // Ascending odd scan: the first unvisited member of a coset is its
        // leader, because nonzero leaders are odd and minimal.
        let mut x = 1u64;
        while x < n {
            if visited[(x / 64) as usize] >> (x % 64) & 1 == 0 {
                orbit.clear();
                let mut y = x;
                loop {
                    visited[(y / 64) as usize] |= 1 << (y % 64);
                    orbit.push(y);
                    y = double_mod(y, n);
                    if y == x {
                        break;
                    }
                }
                debug_assert_eq!(*orbit.iter().min().unwrap(), x);
                if keep_leader_of {
                    for &e in &orbit {
                        leader_of[e as usize] = x as u32;
                    }
                }
                leaders.push(x);
                acc += orbit.len() as u64;
                prefix.push(acc);
            }
            x += 2;
        }
        let max_leader = *leaders.last().expect("n >= 5 has nonzero cosets");
        CosetTable { leaders, prefix, leader_of, max_leader }
    }

    /// Leader of the coset containing x (x > 0).
    fn leader_of(&self, x: u64, len: CodeLength) -> u64 {
        if !self.leader_of.is_empty() {
            return u64::from(self.leader_of[x as usize]);
        }
        orbit_min(x, len)
    }
}

fn orbit_min(x: u64, len: CodeLength) -> u64 {
    let n = len.n();
    let mut min = x;
    let mut y = double_mod(x, n);
    while y != x {
        min = min.min(y);
        y = double_mod(y, n);
    }
    min
}

fn memo() -> &'static Mutex<HashMap<u64, Arc<CosetTable>>> {
    static MEMO: OnceLock<Mutex<HashMap<u64, Arc<CosetTable>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Lazily built per-length table; None above the cap (callers recompute).
/// Single writer: the map mutex is held across the build, so concurrent
/// callers of the same length block rather than duplicate work.
pub(crate) fn table_for(len: CodeLength) -> Option<Arc<CosetTable>> {
    if len.n() > MEMO_CAP {
        return None;
    }
    let mut map = memo().lock().expect("memo poisoned");
    Some(Arc::clone(map.entry(len.n()).or_insert_with(|| Arc::new(CosetTable::build(len)))))
}

fn check_delta(delta: u64, b: u8, n: u64) -> Result<()> {
    assert!(b <= 1, "offset b must be 0 or 1");
    if !(2..=n).contains(&delta) {
        return Err(Error::DeltaRange { delta, n });
    }
    Ok(())
}

/// The defining set C_b ∪ ... ∪ C_{delta-1}.
pub fn defining_set(len: CodeLength, delta: u64, b: u8) -> Result<DefiningSet> {
    let n = len.n();
    check_delta(delta, b, n)?;
    let (mut leaders, nonzero_size): (Vec<u64>, u64) = match table_for(len) {
        Some(table) => {
            let cut = table.leaders.partition_point(|&l| l < delta);
            (table.leaders[..cut].to_vec(), if cut == 0 { 0 } else { table.prefix[cut - 1] })
        }
        None => {
            let mut acc = Vec::new();
            let mut total = 0u64;
            let mut x = 1u64;
            while x < delta {
                if is_coset_leader(x, len)? {
                    total += orbit_len(x, len);
                    acc.push(x);
                }
                x += 2;
            }
            (acc, total)
        }
    };
    let mut size = nonzero_size;
    if b == 0 {
        leaders.insert(0, 0);
        size += 1;
    }
    Ok(DefiningSet { n, delta, b, size, leaders })
}

fn orbit_len(x: u64, len: CodeLength) -> u64 {
    let n = len.n();
    let mut count = 1u64;
    let mut y = double_mod(x, n);
    while y != x {
        count += 1;
        y = double_mod(y, n);
    }
    count
}

/// Largest delta' with the same defining set as (delta, b). Equivalently
/// the first j >= delta whose coset leader is >= delta (or n if none).
///
/// Only odd j need checking: if an even j were the first hit, the odd part of
/// j would be an earlier one (same leader, smaller index, still >= delta
/// because a leader never exceeds its elements).
pub fn bose_distance(len: CodeLength, delta: u64, b: u8) -> Result<u64> {
    let n = len.n();
    check_delta(delta, b, n)?;
    let table = table_for(len);
    if let Some(table) = &table {
        if delta > table.max_leader {
            return Ok(n);
        }
    }
    let mut j = delta | 1;
    while j < n {
        let leader = match &table {
            Some(table) => table.leader_of(j, len),
            None => orbit_min(j, len),
        };
        if leader >= delta {
            return Ok(j);
        }
        j += 2;
    }
    Ok(n)
}
