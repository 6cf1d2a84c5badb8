//! Exact field scalars: arbitrary-precision rationals and prime fields GF(p).
//!
//! Every computation in this crate happens over one of two concrete fields:
//!
//! * [`Rational`] — arbitrary-precision rationals backed by
//!   [`num_rational::BigRational`]. Values are kept fully reduced with a
//!   positive denominator after every operation, which bounds coefficient
//!   growth during elimination.
//! * [`GfElement`] — integers mod a prime `p`. Each element carries its
//!   modulus; mixing moduli is a programming error and panics.
//!
//! Generic code is written against the [`Field`] trait. Because a GF(p)
//! element only makes sense relative to its modulus, the trait carries an
//! associated [`Field::Context`] (`()` for the rationals, the prime for
//! GF(p)) from which zeros, ones, and embedded integers are made. The
//! `*_like` convenience methods derive the context from an existing value.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, the crate's canonical field.
pub type Rational = BigRational;

/// Exact field arithmetic over a runtime-selected field.
///
/// Implementations must satisfy the field axioms exactly: associativity,
/// commutativity, distributivity, `a + (-a) = 0`, and `a * a.inv() = 1` for
/// nonzero `a`, with no rounding anywhere.
pub trait Field:
    Sized
    + Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
{
    /// Runtime description of the field an element lives in: `()` for the
    /// rationals, the prime modulus for GF(p).
    type Context: Copy + PartialEq + fmt::Debug + Send + Sync + 'static;

    /// The context of this element.
    fn context(&self) -> Self::Context;

    /// Additive identity.
    fn zero(ctx: Self::Context) -> Self;

    /// Multiplicative identity.
    fn one(ctx: Self::Context) -> Self;

    /// The canonical image of an integer in the field (repeated sums of 1,
    /// so e.g. `from_int(p, _) == 0` in GF(p)).
    fn from_int(ctx: Self::Context, value: i64) -> Self;

    /// Field characteristic; `0` denotes characteristic zero.
    fn characteristic(ctx: Self::Context) -> u64;

    /// Human-readable field label, e.g. `rational` or `gf:7`.
    fn describe(ctx: Self::Context) -> String;

    /// Parses a scalar in the textual scalar format of the field.
    fn parse(ctx: Self::Context, text: &str) -> Result<Self>;

    fn is_zero(&self) -> bool;

    /// Multiplicative inverse; errors on zero.
    fn inv(&self) -> Result<Self>;

    /// Zero of the same field as `self`.
    fn zero_like(&self) -> Self {
        Self::zero(self.context())
    }

    /// One of the same field as `self`.
    fn one_like(&self) -> Self {
        Self::one(self.context())
    }

    /// Integer embedded into the same field as `self`.
    fn int_like(&self, value: i64) -> Self {
        Self::from_int(self.context(), value)
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Exact division; errors on a zero divisor.
    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * &rhs.inv()?)
    }

    /// Nonnegative integer power by repeated squaring; `powu(0) = 1`.
    fn powu(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

impl Field for Rational {
    type Context = ();

    fn context(&self) -> Self::Context {}

    fn zero(_ctx: ()) -> Self {
        <BigRational as Zero>::zero()
    }

    fn one(_ctx: ()) -> Self {
        <BigRational as One>::one()
    }

    fn from_int(_ctx: (), value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn characteristic(_ctx: ()) -> u64 {
        0
    }

    fn describe(_ctx: ()) -> String {
        "rational".to_owned()
    }

    fn parse(_ctx: (), text: &str) -> Result<Self> {
        parse_rational(text)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }
}

/// Parses `"a"` or `"a/b"` into a reduced rational with positive denominator.
fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |reason: &str| Error::InvalidScalar {
        text: text.to_owned(),
        reason: reason.to_owned(),
    };
    match text.split_once('/') {
        None => {
            let n = BigInt::from_str(text).map_err(|_| bad("expected an integer"))?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num).map_err(|_| bad("expected an integer numerator"))?;
            let d = BigInt::from_str(den).map_err(|_| bad("expected an integer denominator"))?;
            if Zero::is_zero(&d) {
                return Err(bad("denominator must be nonzero"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// An element of GF(p) for a prime modulus `p`, stored as the canonical
/// residue in `[0, p)`.
///
/// Arithmetic between elements of different moduli panics: elements of
/// different fields never meet in a correct program.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GfElement {
    residue: u64,
    modulus: u64,
}

impl GfElement {
    /// Embeds an integer, reducing it into `[0, p)`.
    ///
    /// The modulus must be a prime `>= 2` and `< 2^62`; [`FieldKind`] is the
    /// validated entry point for user-supplied moduli.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        assert!(modulus < (1 << 62), "modulus too large");
        let p = modulus as i128;
        let r = ((value as i128 % p) + p) % p;
        GfElement {
            residue: r as u64,
            modulus,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "GF(p) arithmetic across different moduli"
        );
    }
}

impl fmt::Debug for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

impl fmt::Display for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for GfElement {
    type Output = GfElement;
    fn add(self, rhs: GfElement) -> GfElement {
        self.check_same_field(&rhs);
        let sum = (self.residue as u128 + rhs.residue as u128) % self.modulus as u128;
        GfElement {
            residue: sum as u64,
            modulus: self.modulus,
        }
    }
}

impl Add<&GfElement> for GfElement {
    type Output = GfElement;
    fn add(self, rhs: &GfElement) -> GfElement {
        self + *rhs
    }
}

impl Sub for GfElement {
    type Output = GfElement;
    fn sub(self, rhs: GfElement) -> GfElement {
        self + (-rhs)
    }
}

impl Sub<&GfElement> for GfElement {
    type Output = GfElement;
    fn sub(self, rhs: &GfElement) -> GfElement {
        self - *rhs
    }
}

impl Mul for GfElement {
    type Output = GfElement;
    fn mul(self, rhs: GfElement) -> GfElement {
        self.check_same_field(&rhs);
        let prod = (self.residue as u128 * rhs.residue as u128) % self.modulus as u128;
        GfElement {
            residue: prod as u64,
            modulus: self.modulus,
        }
    }
}

impl Mul<&GfElement> for GfElement {
    type Output = GfElement;
    fn mul(self, rhs: &GfElement) -> GfElement {
        self * *rhs
    }
}

impl Neg for GfElement {
    type Output = GfElement;
    fn neg(self) -> GfElement {
        if self.residue == 0 {
            self
        } else {
            GfElement {
                residue: self.modulus - self.residue,
                modulus: self.modulus,
            }
        }
    }
}

impl Field for GfElement {
    type Context = u64;

    fn context(&self) -> u64 {
        self.modulus
    }

    fn zero(ctx: u64) -> Self {
        GfElement::new(0, ctx)
    }

    fn one(ctx: u64) -> Self {
        GfElement::new(1, ctx)
    }

    fn from_int(ctx: u64, value: i64) -> Self {
        GfElement::new(value, ctx)
    }

    fn characteristic(ctx: u64) -> u64 {
        ctx
    }

    fn describe(ctx: u64) -> String {
        format!("gf:{ctx}")
    }

    fn parse(ctx: u64, text: &str) -> Result<Self> {
        let value = i64::from_str(text).map_err(|_| Error::InvalidScalar {
            text: text.to_owned(),
            reason: "expected an integer residue".to_owned(),
        })?;
        Ok(GfElement::new(value, ctx))
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn inv(&self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid on (residue, p); p prime guarantees a unit.
        let (mut r0, mut r1) = (self.modulus as i128, self.residue as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        let p = self.modulus as i128;
        let inv = ((s0 % p) + p) % p;
        Ok(GfElement {
            residue: inv as u64,
            modulus: self.modulus,
        })
    }
}

/// The working field selected at the CLI boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    /// GF(p); the modulus has passed a primality check.
    Gf(u64),
}

impl FieldKind {
    /// Parses `"rational"` or `"gf:<p>"`, validating that `p` is prime.
    pub fn parse(text: &str) -> Result<Self> {
        if text == "rational" {
            return Ok(FieldKind::Rational);
        }
        if let Some(raw) = text.strip_prefix("gf:") {
            let p: u64 = raw.parse().map_err(|_| {
                Error::UnsupportedField(format!("'{text}': modulus must be an integer"))
            })?;
            if p >= (1 << 62) {
                return Err(Error::UnsupportedField(format!(
                    "'{text}': modulus must be below 2^62"
                )));
            }
            if !is_prime(p) {
                return Err(Error::UnsupportedField(format!(
                    "'{text}': {p} is not prime"
                )));
            }
            return Ok(FieldKind::Gf(p));
        }
        Err(Error::UnsupportedField(format!(
            "'{text}': expected 'rational' or 'gf:<prime>'"
        )))
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Gf(p) => write!(f, "gf:{p}"),
        }
    }
}

/// Deterministic Miller-Rabin primality test, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // This base set decides primality for every n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Rationals are ordered; positivity backs the symmetric-matrix fast path.
pub fn is_positive_rational(x: &Rational) -> bool {
    Signed::is_positive(x)
}
