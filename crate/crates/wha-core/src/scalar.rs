//! Exact scalar fields.
//!
//! Every computation in the crate is generic over [`Scalar`]. Two fields are
//! provided: arbitrary-precision rationals ([`Rat`]) and prime fields
//! ([`Fp`]) whose modulus is chosen at run time.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational numbers.
pub type Rat = BigRational;

/// An exact field element.
///
/// `Ctx` carries whatever run-time data is needed to build elements from
/// integers (the modulus for prime fields, nothing for rationals). The
/// `Zero`/`One` constants must be valid in every context.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    type Ctx: Clone + fmt::Debug + Send + Sync + 'static;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The image of the integer `n`.
    fn from_int(ctx: &Self::Ctx, n: i64) -> Self;

    /// The image of `n / d`, `None` when `d` vanishes in the field.
    fn from_ratio(ctx: &Self::Ctx, n: i64, d: i64) -> Option<Self> {
        Self::from_int(ctx, d)
            .inv()
            .map(|di| Self::from_int(ctx, n) * di)
    }

    /// Characteristic of the field (0 for the rationals).
    fn characteristic(ctx: &Self::Ctx) -> u64;

    /// Short human-readable field name, e.g. `Q` or `Fp:5`.
    fn field_name(ctx: &Self::Ctx) -> String;

    /// Parse a literal such as `3`, `-2/7`.
    fn parse(ctx: &Self::Ctx, text: &str) -> Result<Self> {
        let text = text.trim();
        let (n, d) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let n: i64 = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad scalar literal `{text}`")))?;
        let d: i64 = d
            .parse()
            .map_err(|_| Error::Parse(format!("bad scalar literal `{text}`")))?;
        Self::from_ratio(ctx, n, d)
            .ok_or_else(|| Error::Parse(format!("scalar `{text}` has vanishing denominator")))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

impl Scalar for Rat {
    type Ctx = ();

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(_: &(), n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn from_ratio(_: &(), n: i64, d: i64) -> Option<Self> {
        (d != 0).then(|| Rat::new(BigInt::from(n), BigInt::from(d)))
    }

    fn characteristic(_: &()) -> u64 {
        0
    }

    fn field_name(_: &()) -> String {
        "Q".into()
    }

    fn parse(_: &(), text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Parse(format!("bad scalar literal `{text}`"));
        let (n, d) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("scalar `{text}` has zero denominator")));
        }
        Ok(Rat::new(n, d))
    }
}

/// Element of the prime field F_p with the modulus carried at run time.
///
/// `p == 0` marks a modulus-free constant produced by `Zero::zero` or
/// `One::one`; it is reduced as soon as it meets a bound element.
#[derive(Clone, Copy)]
pub struct Fp {
    v: i64,
    p: u32,
}

/// Largest admissible modulus (exclusive).
pub const FP_MODULUS_LIMIT: u64 = 1 << 31;

impl Fp {
    /// Build `n mod p`. Primality is the caller's responsibility; use
    /// [`check_prime`] at configuration time.
    pub fn new(n: i64, p: u32) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        Fp { v: n.rem_euclid(p as i64), p }
    }

    pub fn modulus(&self) -> Option<u32> {
        (self.p != 0).then_some(self.p)
    }

    /// Canonical representative in `[0, p)` (or the raw integer when unbound).
    pub fn value(&self) -> i64 {
        self.v
    }

    fn join(a: Fp, b: Fp) -> (i64, i64, u32) {
        let p = a.p.max(b.p);
        debug_assert!(a.p == 0 || b.p == 0 || a.p == b.p, "mixed moduli");
        if p == 0 {
            (a.v, b.v, 0)
        } else {
            let m = p as i64;
            (a.v.rem_euclid(m), b.v.rem_euclid(m), p)
        }
    }

    fn make(v: i64, p: u32) -> Fp {
        if p == 0 {
            Fp { v, p }
        } else {
            Fp { v: v.rem_euclid(p as i64), p }
        }
    }
}

/// Check that `p` is a prime below 2^31.
pub fn check_prime(p: u64) -> Result<u32> {
    if !(2..FP_MODULUS_LIMIT).contains(&p) {
        return Err(Error::Parse(format!("modulus {p} outside [2, 2^31)")));
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Err(Error::Parse(format!("modulus {p} is not prime")));
        }
        d += 1;
    }
    Ok(p as u32)
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Fp::join(*self, *other);
        a == b
    }
}

impl Eq for Fp {}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            0 => write!(f, "{}", self.v),
            p => write!(f, "{} (mod {p})", self.v),
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        let (a, b, p) = Fp::join(self, o);
        Fp::make(a + b, p)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        let (a, b, p) = Fp::join(self, o);
        Fp::make(a - b, p)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        let (a, b, p) = Fp::join(self, o);
        // Both factors are below 2^31 once bound, so the product fits in i64.
        Fp::make(a * b, p)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::make(-self.v, self.p)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { v: 0, p: 0 }
    }
    fn is_zero(&self) -> bool {
        match self.p {
            0 => self.v == 0,
            p => self.v.rem_euclid(p as i64) == 0,
        }
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { v: 1, p: 0 }
    }
}

impl Scalar for Fp {
    type Ctx = u32;

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.p == 0 {
            // Only ±1 are invertible without a modulus.
            return (self.v == 1 || self.v == -1).then_some(*self);
        }
        let m = self.p as i64;
        let (mut r0, mut r1) = (m, self.v.rem_euclid(m));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(Fp::make(t0, self.p))
    }

    fn from_int(p: &u32, n: i64) -> Self {
        Fp::new(n, *p)
    }

    fn characteristic(p: &u32) -> u64 {
        *p as u64
    }

    fn field_name(p: &u32) -> String {
        format!("Fp:{p}")
    }
}

/// Run-time choice of field, as selected on the command line or in a model file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    /// Parse `Q` or `Fp:<p>`, rejecting non-prime moduli.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "Q" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(p) = text.strip_prefix("Fp:") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field `{text}`")))?;
            return Ok(FieldSpec::Prime(check_prime(p)?));
        }
        Err(Error::Parse(format!("unknown field `{text}` (expected Q or Fp:<p>)")))
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rational => "Q".into(),
            FieldSpec::Prime(p) => format!("Fp:{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Render a rational with its sign, used in witnesses.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-{}/{}", r.numer().abs(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
