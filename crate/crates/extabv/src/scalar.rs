//! Coefficient backends for series and subspace arithmetic.
//!
//! Two fields are supported: arbitrary-precision rationals (`Rat`, exact)
//! and arbitrary-precision complex floats (`Cf`, MPFR/MPC backed, with a
//! per-value precision in bits). All curve-side algebra runs over `Rat`;
//! `Cf` only enters where periods do.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rug::ops::CompleteRound;
use rug::{Assign, Complex, Float};

/// Minimum precision for the complex backend, in bits.
pub const MIN_PREC: u32 = 64;

/// Exact rational scalar.
pub type Rat = BigRational;

/// Field operations needed by the generic series and window code.
///
/// `is_negligible` is the comparison hook: exact backends ignore the
/// tolerance and test structural zero; the float backend compares `|x|`
/// against the caller-supplied tolerance.
pub trait CoeffField: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Division; callers guarantee `rhs` is nonzero.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Principal square root, if one exists in the field.
    fn sqrt_exact(&self) -> Option<Self>;
    fn is_negligible(&self, tol: f64) -> bool;
    /// Crude magnitude used for pivot selection over floats.
    fn magnitude(&self) -> f64;
}

impl CoeffField for Rat {
    fn zero() -> Self {
        BigRational::zero()
    }
    fn one() -> Self {
        BigRational::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            return Some(BigRational::zero());
        }
        if self.is_negative() {
            return None;
        }
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &(&ns * &ns) == self.numer() && &(&ds * &ds) == self.denom() {
            Some(BigRational::new(ns, ds))
        } else {
            None
        }
    }
    fn is_negligible(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        if Zero::is_zero(self) {
            0.0
        } else {
            1.0
        }
    }
}

/// Complex scalar with explicit binary precision.
#[derive(Clone, Debug)]
pub struct Cf(pub Complex);

impl Cf {
    pub fn new(prec: u32) -> Self {
        Cf(Complex::new(prec.max(MIN_PREC)))
    }

    pub fn with_val<T>(prec: u32, val: T) -> Self
    where
        Complex: Assign<T>,
    {
        let mut c = Complex::new(prec.max(MIN_PREC));
        c.assign(val);
        Cf(c)
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Cf(Complex::with_val(prec.max(MIN_PREC), (re, im)))
    }

    pub fn from_rat(prec: u32, r: &Rat) -> Self {
        let p = prec.max(MIN_PREC);
        let q = rug::Rational::from((bigint_to_rug(r.numer()), bigint_to_rug(r.denom())));
        let re = Float::with_val(p, &q);
        Cf(Complex::with_val(p, (re, Float::with_val(p, 0))))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec().0
    }

    pub fn re(&self) -> &Float {
        self.0.real()
    }

    pub fn im(&self) -> &Float {
        self.0.imag()
    }

    pub fn conj(&self) -> Self {
        Cf(self.0.clone().conj())
    }

    pub fn abs(&self) -> Float {
        self.0.clone().abs().into_real_imag().0
    }

    /// Principal branch square root.
    pub fn sqrt(&self) -> Self {
        Cf(self.0.clone().sqrt())
    }

    pub fn scale_pow2(&self, k: i32) -> Self {
        Cf((&self.0 << k).complete(self.prec2()))
    }

    fn prec2(&self) -> (u32, u32) {
        self.0.prec()
    }

    fn join(&self, rhs: &Self) -> (u32, u32) {
        let p = self.prec().max(rhs.prec());
        (p, p)
    }
}

impl PartialEq for Cf {
    fn eq(&self, other: &Self) -> bool {
        self.0.real() == other.0.real() && self.0.imag() == other.0.imag()
    }
}

impl fmt::Display for Cf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl CoeffField for Cf {
    fn zero() -> Self {
        Cf::new(MIN_PREC)
    }
    fn one() -> Self {
        Cf::with_val(MIN_PREC, 1)
    }
    fn from_i64(n: i64) -> Self {
        Cf::with_val(MIN_PREC, n)
    }
    fn add(&self, rhs: &Self) -> Self {
        Cf((&self.0 + &rhs.0).complete(self.join(rhs)))
    }
    fn sub(&self, rhs: &Self) -> Self {
        Cf((&self.0 - &rhs.0).complete(self.join(rhs)))
    }
    fn mul(&self, rhs: &Self) -> Self {
        Cf((&self.0 * &rhs.0).complete(self.join(rhs)))
    }
    fn div(&self, rhs: &Self) -> Self {
        Cf((&self.0 / &rhs.0).complete(self.join(rhs)))
    }
    fn neg(&self) -> Self {
        Cf((-&self.0).complete(self.prec2()))
    }
    fn is_zero(&self) -> bool {
        self.0.real().is_zero() && self.0.imag().is_zero()
    }
    fn sqrt_exact(&self) -> Option<Self> {
        Some(self.sqrt())
    }
    fn is_negligible(&self, tol: f64) -> bool {
        if self.is_zero() {
            return true;
        }
        self.abs().to_f64() <= tol
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64()
    }
}

fn bigint_to_rug(n: &BigInt) -> rug::Integer {
    let (sign, bytes) = n.to_bytes_le();
    let mag = rug::Integer::from_digits(&bytes, rug::integer::Order::Lsf);
    if sign == num_bigint::Sign::Minus {
        -mag
    } else {
        mag
    }
}

/// Real multiprecision float helper used by the numeric modules.
pub fn mpf(prec: u32, v: f64) -> Float {
    Float::with_val(prec.max(MIN_PREC), v)
}

/// pi at the requested precision.
pub fn pi(prec: u32) -> Float {
    Float::with_val(prec.max(MIN_PREC), rug::float::Constant::Pi)
}

/// 2*pi*i at the requested precision.
pub fn two_pi_i(prec: u32) -> Cf {
    let p = prec.max(MIN_PREC);
    let two_pi = pi(p) * 2u32;
    Cf(Complex::with_val(p, (Float::with_val(p, 0), two_pi)))
}

/// Decimal digits needed for a bit-exact round trip at `prec` bits.
pub fn decimal_digits(prec: u32) -> usize {
    (prec as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2
}

/// Renders a Float as a decimal string that round-trips at its precision.
pub fn float_to_string(x: &Float) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(decimal_digits(x.prec())))
}

/// Parses a decimal string into a Float at the given precision.
pub fn float_from_string(prec: u32, s: &str) -> Option<Float> {
    let p = Float::parse(s).ok()?;
    Some(Float::with_val(prec.max(MIN_PREC), p))
}
