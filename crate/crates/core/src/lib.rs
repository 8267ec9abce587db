//! Structure of binary cyclic codes of antiprimitive length n = 2^m + 1.
//!
//! Everything here flows from one arithmetic fact: 2 has multiplicative
//! order exactly 2m modulo 2^m + 1, with 2^m ≡ -1. That makes every
//! 2-cyclotomic coset mod n closed under negation, which in turn forces the
//! BCH codes of this length with designed-distance defining sets
//! C_b ∪ ... ∪ C_{delta-1} (b ∈ {0, 1}) to be reversible and LCD, and makes
//! their parameters unusually regular:
//!
//! * [`coset`] — orbit enumeration, coset-leader tests, defining sets and
//!   Bose distances, all from first principles (the ground truth everything
//!   else is checked against);
//! * [`length`] — validated lengths and the residue class of the exponent m
//!   (odd, 2 mod 4, 4 mod 8) that keys every closed form;
//! * [`closed_form`] — the leader/non-leader run structure of an initial
//!   envelope of residues, the five largest coset leaders, and two
//!   self-similar interval partitions with O(1) index decomposition;
//! * [`params`] — closed-form dimensions and Bose distances organized in
//!   rows over the designed distance, plus auxiliary dimension estimates
//!   (small-delta exact band, a windowed exact formula for other lengths,
//!   and the blunt counting bound);
//! * [`gf2`] — bit-packed GF(2)[X], the splitting field GF(2^{2m}) of
//!   X^n + 1, minimal and generator polynomials, systematic encoding, and
//!   exhaustive minimum-weight search.
//!
//! Closed forms never silently extrapolate: outside their proven ranges they
//! return typed errors ([`Error::BeyondEnvelope`], [`Error::NoDimensionRow`],
//! ...) so callers can fall back to the brute-force path.

pub mod closed_form;
pub mod coset;
pub mod error;
pub mod gf2;
pub mod length;
pub mod params;

pub use closed_form::{
    classification_envelope, classify_leader, coset_cardinality, delta_ladder, ia_partition,
    interval_locate, interval_reconstruct, DeltaLadder, IntervalPartition, LeaderStatus,
    LeaderVerdict, Scheme,
};
pub use coset::{
    bose_distance, coset_of, defining_set, enumerate_leaders, is_coset_leader, top_leaders,
    CosetRecord, DefiningSet,
};
pub use error::{Error, Result};
pub use gf2::{
    build_field, encode, generator_polynomial, min_weight_exhaustive, minimal_polynomial,
    BinaryPolynomial, FieldContext,
};
pub use length::{CodeLength, Family};
pub use params::{
    bose_closed, code_spec, dim_aly, dim_lower_bound_generic, dim_small_delta, dimension_brute,
    dimension_closed, CodeSpec, GenericBound,
};
