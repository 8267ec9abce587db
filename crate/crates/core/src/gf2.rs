//! GF(2) polynomial arithmetic and generator polynomials.
//!
//! Codewords and generators live in GF(2)[X] as bit-packed words: bit i of
//! word i/64 is the coefficient of X^i. The n-th roots of unity live in
//! GF(2^{2m}) (2m is the multiplicative order of 2 mod n, so this is the
//! splitting field of X^n + 1); its elements are packed into u64 against the
//! lexicographically smallest primitive modulus of degree 2m, and
//! ξ = α^{(2^{2m} - 1)/n} is a fixed primitive n-th root of unity.
//!
//! The generator of the code with defining set T = C_b ∪ ... ∪ C_{delta-1} is
//! g(X) = ∏_{leaders x of T} M_x(X), where M_x is the minimal polynomial of
//! ξ^x: the product of (X + ξ^y) over the coset of x, which lands back in
//! GF(2)[X]. deg g = |T|, and because every coset is closed under negation,
//! T = -T and g is always self-reciprocal — equivalently the code equals its
//! reverse and intersects its dual trivially (LCD).

use crate::coset::defining_set;
use crate::error::{Error, Result};
use crate::length::CodeLength;

// ---------------------------------------------------------------------------
// Bit-packed polynomials over GF(2)
// ---------------------------------------------------------------------------

/// A polynomial over GF(2), packed little-endian: bit i of `words[i / 64]`
/// is the coefficient of X^i. Always normalized (no trailing zero words);
/// the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPolynomial {
    words: Vec<u64>,
}

impl BinaryPolynomial {
    pub fn zero() -> Self {
        BinaryPolynomial { words: Vec::new() }
    }

    pub fn one() -> Self {
        BinaryPolynomial { words: vec![1] }
    }

    pub fn x_pow(k: usize) -> Self {
        let mut words = vec![0u64; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        BinaryPolynomial { words }
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = BinaryPolynomial { words };
        p.normalize();
        p
    }

    /// From coefficient bits, lowest degree first (values taken mod 2).
    pub fn from_coefficient_bits(bits: &[u8]) -> Self {
        let mut words = vec![0u64; bits.len() / 64 + 1];
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        BinaryPolynomial::from_words(words)
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + (63 - last.leading_zeros() as usize))
    }

    pub fn coefficient(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Addition = subtraction = XOR.
    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        BinaryPolynomial::from_words(words)
    }

    /// Carryless schoolbook product.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return BinaryPolynomial::zero();
        }
        let mut words = vec![0u64; self.words.len() + rhs.words.len()];
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let bi = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                xor_shifted(&mut words, &rhs.words, wi * 64 + bi);
            }
        }
        BinaryPolynomial::from_words(words)
    }

    /// Remainder of self divided by a nonzero modulus.
    pub fn rem(&self, modulus: &Self) -> Self {
        let md = modulus.degree().expect("nonzero modulus");
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < md {
                break;
            }
            let shift = rd - md;
            // widen once so the shifted modulus always fits
            if r.words.len() < (rd / 64) + 2 {
                r.words.resize(rd / 64 + 2, 0);
            }
            xor_shifted(&mut r.words, &modulus.words, shift);
            r.normalize();
        }
        r
    }

    /// Does self divide other exactly?
    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// X^deg · p(1/X): the coefficient sequence reversed. Defined only when
    /// the constant term is 1 (otherwise reversal loses degree and the map
    /// is not an involution).
    pub fn reciprocal(&self) -> Result<Self> {
        if !self.coefficient(0) {
            return Err(Error::ZeroConstantTerm);
        }
        let deg = self.degree().expect("constant term 1 implies nonzero");
        let mut words = vec![0u64; deg / 64 + 1];
        for i in 0..=deg {
            if self.coefficient(i) {
                let j = deg - i;
                words[j / 64] |= 1 << (j % 64);
            }
        }
        Ok(BinaryPolynomial::from_words(words))
    }

    /// Equal to its own reciprocal?
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()? == *self)
    }

    /// Canonical wire form `deg=D;hex=..`: the coefficient bytes (bit j of
    /// byte i/8 is the coefficient of X^{8i+j}), lowercase hex, exactly
    /// D/8 + 1 bytes. The zero polynomial prints as `zero`.
    pub fn wire_string(&self) -> String {
        let Some(deg) = self.degree() else {
            return "zero".to_string();
        };
        let mut s = format!("deg={deg};hex=");
        for byte_idx in 0..=(deg / 8) {
            let word = self.words.get(byte_idx / 8).copied().unwrap_or(0);
            let byte = (word >> (8 * (byte_idx % 8))) & 0xff;
            s.push_str(&format!("{byte:02x}"));
        }
        s
    }
}

/// target ^= source << shift (target must be wide enough).
fn xor_shifted(target: &mut [u64], source: &[u64], shift: usize) {
    let (off, r) = (shift / 64, shift % 64);
    if r == 0 {
        for (j, &s) in source.iter().enumerate() {
            target[j + off] ^= s;
        }
    } else {
        for (j, &s) in source.iter().enumerate() {
            target[j + off] ^= s << r;
            if j + off + 1 < target.len() {
                target[j + off + 1] ^= s >> (64 - r);
            } else {
                debug_assert_eq!(s >> (64 - r), 0, "shift overflow");
            }
        }
    }
}

// ---------------------------------------------------------------------------
// GF(2^{2m}) and its n-th roots of unity
// ---------------------------------------------------------------------------

/// The splitting field GF(2^{2m}) of X^n + 1, with a fixed primitive n-th
/// root of unity. Elements are bit-packed u64 (so 2m <= 32).
#[derive(Debug, Clone)]
pub struct FieldContext {
    len: CodeLength,
    degree: u32,
    /// Primitive modulus, leading bit included (degree `degree`).
    modulus: u64,
    /// ξ = α^{(2^{2m} - 1)/n} where α = X mod modulus.
    xi: u64,
}

/// Largest packed extension degree.
const FIELD_DEGREE_CAP: u32 = 32;

fn clmul(a: u64, b: u64) -> u64 {
    debug_assert!(a < 1 << 32 && b < 1 << 32);
    let mut acc = 0u64;
    let mut bits = a;
    while bits != 0 {
        let i = bits.trailing_zeros();
        bits &= bits - 1;
        acc ^= b << i;
    }
    acc
}

fn polymod(mut v: u64, modulus: u64, degree: u32) -> u64 {
    while v >> degree != 0 {
        let d = 63 - v.leading_zeros();
        v ^= modulus << (d - degree);
    }
    v
}

fn mulmod(a: u64, b: u64, modulus: u64, degree: u32) -> u64 {
    polymod(clmul(a, b), modulus, degree)
}

fn powmod(mut base: u64, mut e: u64, modulus: u64, degree: u32) -> u64 {
    let mut acc = 1u64;
    while e != 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, modulus, degree);
        }
        base = mulmod(base, base, modulus, degree);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= v {
        if v.is_multiple_of(p) {
            out.push(p);
            while v.is_multiple_of(p) {
                v /= p;
            }
        }
        p += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

fn is_irreducible(candidate: u64, degree: u32) -> bool {
    // x^{2^degree} == x, and x^{2^{degree/q}} != x for every prime q | degree
    let frob = |k: u32| {
        let mut y = 2u64 % candidate;
        for _ in 0..k {
            y = mulmod(y, y, candidate, degree);
        }
        y
    };
    if frob(degree) != 2 % candidate {
        return false;
    }
    prime_factors(u64::from(degree)).iter().all(|&q| frob(degree / q as u32) != 2 % candidate)
}

fn is_primitive(candidate: u64, degree: u32) -> bool {
    let order = (1u64 << degree) - 1;
    prime_factors(order).iter().all(|&r| powmod(2, order / r, candidate, degree) != 1)
}

/// Lexicographically smallest primitive polynomial of the given degree,
/// as packed bits including the leading term.
pub(crate) fn smallest_primitive_modulus(degree: u32) -> u64 {
    assert!((2..=FIELD_DEGREE_CAP).contains(&degree));
    let lead = 1u64 << degree;
    let mut candidate = lead | 1; // constant term required
    loop {
        if is_irreducible(candidate, degree) && is_primitive(candidate, degree) {
            return candidate;
        }
        candidate += 2;
    }
}

/// Build the splitting field of X^n + 1 for this length.
pub fn build_field(len: CodeLength) -> Result<FieldContext> {
    let degree = len.ord();
    if degree > FIELD_DEGREE_CAP {
        return Err(Error::FieldTooLarge { degree });
    }
    let modulus = smallest_primitive_modulus(degree);
    let n = len.n();
    let xi = powmod(2, ((1u64 << degree) - 1) / n, modulus, degree);
    // ξ must have order exactly n
    assert_eq!(powmod(xi, n, modulus, degree), 1);
    for p in prime_factors(n) {
        assert_ne!(powmod(xi, n / p, modulus, degree), 1, "ξ order divides n/{p}");
    }
    Ok(FieldContext { len, degree, modulus, xi })
}

impl FieldContext {
    pub fn length(&self) -> CodeLength {
        self.len
    }

    pub fn extension_degree(&self) -> u32 {
        self.degree
    }

    /// Field modulus as packed bits, leading term included.
    pub fn modulus_polynomial(&self) -> u64 {
        self.modulus
    }

    /// Order of the field's multiplicative group, 2^{2m} - 1.
    pub fn generator_order(&self) -> u64 {
        (1u64 << self.degree) - 1
    }

    /// The fixed primitive n-th root of unity ξ.
    pub fn unity_root(&self) -> u64 {
        self.xi
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mulmod(a, b, self.modulus, self.degree)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        powmod(a, e, self.modulus, self.degree)
    }
}

// ---------------------------------------------------------------------------
// Minimal and generator polynomials
// ---------------------------------------------------------------------------

/// Minimal polynomial of ξ^e over GF(2): ∏ (X + ξ^y) over the coset of e.
/// The product's coefficients provably land in {0, 1}.
pub fn minimal_polynomial(field: &FieldContext, e: u64) -> Result<BinaryPolynomial> {
    let n = field.len.n();
    if e >= n {
        return Err(Error::ResidueRange { x: e, n });
    }
    // coeffs[j] is the field element multiplying X^j
    let mut coeffs: Vec<u64> = vec![1];
    let mut root = field.pow(field.xi, e);
    let first = root;
    loop {
        coeffs.push(0);
        for j in (0..coeffs.len()).rev() {
            let lower = if j > 0 { coeffs[j - 1] } else { 0 };
            coeffs[j] = lower ^ field.mul(coeffs[j], root);
        }
        root = field.mul(root, root); // next conjugate
        if root == first {
            break;
        }
    }
    let mut bits = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        assert!(c <= 1, "conjugate product must have binary coefficients");
        bits.push(c as u8);
    }
    Ok(BinaryPolynomial::from_coefficient_bits(&bits))
}

/// Generator polynomial of the code (n, delta, b): the product of the minimal
/// polynomials over the defining set's coset leaders. Errors if the field was
/// built for a different length, or if the defining set is all of Z_n (then
/// only the zero codeword would remain).
pub fn generator_polynomial(
    field: &FieldContext,
    len: CodeLength,
    delta: u64,
    b: u8,
) -> Result<BinaryPolynomial> {
    if field.len.n() != len.n() {
        return Err(Error::LengthMismatch { expected: field.len.n(), got: len.n() });
    }
    let set = defining_set(len, delta, b)?;
    if set.size == len.n() {
        return Err(Error::DegenerateGenerator { n: len.n() });
    }
    let mut g = BinaryPolynomial::one();
    for &leader in &set.leaders {
        g = g.mul(&minimal_polynomial(field, leader)?);
    }
    assert_eq!(g.degree().expect("nonzero") as u64, set.size, "deg g = |T|");
    debug_assert!({
        let xn1 = BinaryPolynomial::x_pow(len.n() as usize).add(&BinaryPolynomial::one());
        g.divides(&xn1)
    });
    Ok(g)
}

/// Systematic encoding: c = msg·X^r + (msg·X^r mod g), r = deg g. The top
/// n - r coefficients of c are the message bits verbatim.
pub fn encode(generator: &BinaryPolynomial, n: u64, message_bits: &[u8]) -> Result<BinaryPolynomial> {
    let r = generator.degree().expect("nonzero generator");
    let expected = n as usize - r;
    if message_bits.len() != expected {
        return Err(Error::MessageLength { expected, got: message_bits.len() });
    }
    let shifted =
        BinaryPolynomial::from_coefficient_bits(message_bits).mul(&BinaryPolynomial::x_pow(r));
    Ok(shifted.add(&shifted.rem(generator)))
}

/// Dimensions above this make the 2^k - 1 codeword sweep unreasonable.
const MIN_WEIGHT_DIM_CAP: u32 = 24;

/// True minimum weight by enumerating all 2^k - 1 nonzero codewords (Gray
/// order, one XOR of a shifted generator per step). None when k exceeds the
/// enumeration cap.
pub fn min_weight_exhaustive(generator: &BinaryPolynomial, n: u64) -> Option<u64> {
    let r = generator.degree().expect("nonzero generator");
    let k = (n as usize).checked_sub(r)?;
    if k == 0 || k > MIN_WEIGHT_DIM_CAP as usize {
        return None;
    }
    let width = (n as usize).div_ceil(64);
    let shifts: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut words = vec![0u64; width];
            xor_shifted(&mut words, generator.words(), i);
            words
        })
        .collect();
    let mut buf = vec![0u64; width];
    let mut best = u64::MAX;
    for i in 1u64..1 << k {
        let j = i.trailing_zeros() as usize;
        for (w, s) in buf.iter_mut().zip(&shifts[j]) {
            *w ^= s;
        }
        let weight: u64 = buf.iter().map(|w| u64::from(w.count_ones())).sum();
        best = best.min(weight);
    }
    Some(best)
}
