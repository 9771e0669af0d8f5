//! High-precision decimal arithmetic for the transcendental bounds.
//!
//! Values are base-10 floats carried at [`WORKING_DIGITS`] significant
//! digits. Euler's constant is hardcoded to 31 significant digits, so every
//! quantity derived from it is good to roughly 30 digits; callers only rely
//! on 15.

use std::cmp::Ordering;
use std::str::FromStr;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Decimal = FBig<HalfEven, 10>;

pub const WORKING_DIGITS: usize = 50;

/// Euler-Mascheroni constant, OEIS A001620.
const EULER_GAMMA: &str = "0.5772156649015328606065120900824";

pub fn gamma() -> Decimal {
    Decimal::from_str(EULER_GAMMA)
        .expect("valid literal")
        .with_precision(WORKING_DIGITS)
        .value()
}

pub fn from_int(v: u64) -> Decimal {
    Decimal::from(v).with_precision(WORKING_DIGITS).value()
}

fn from_bigint(v: &BigInt) -> Decimal {
    Decimal::from_str(&v.to_string())
        .expect("integer literal")
        .with_precision(WORKING_DIGITS)
        .value()
}

/// Rounded value of `q`. Only the leading 256 bits of each side are used
/// (relative error below `2^-250`), so huge factorial denominators are cheap.
pub fn from_ratio(q: &BigRational) -> Decimal {
    let (a, sa) = leading_bits(q.numer());
    let (b, sb) = leading_bits(q.denom());
    let (a, b) = if sa >= sb {
        (a << (sa - sb), b)
    } else {
        (a, b << (sb - sa))
    };
    from_bigint(&a) / from_bigint(&b)
}

fn leading_bits(v: &BigInt) -> (BigInt, u64) {
    let shift = v.bits().saturating_sub(256);
    (v >> shift, shift)
}

/// Exact rational value of a decimal.
pub fn to_ratio(x: &Decimal) -> BigRational {
    let repr = x.repr();
    let significand = BigInt::from_str(&repr.significand().to_string()).expect("integer");
    let exp = repr.exponent();
    let ten = BigInt::from(10);
    if exp >= 0 {
        BigRational::from_integer(significand * num_traits::pow(ten, exp as usize))
    } else {
        BigRational::new(significand, num_traits::pow(ten, (-exp) as usize))
    }
}

pub fn exp(x: &Decimal) -> Decimal {
    x.clone().with_precision(WORKING_DIGITS).value().exp()
}

pub fn ln(x: &Decimal) -> Decimal {
    x.clone().with_precision(WORKING_DIGITS).value().ln()
}

/// Rounds to `digits` significant digits and renders in positional form.
pub fn format_sig(x: &Decimal, digits: usize) -> String {
    x.clone().with_precision(digits.max(1)).value().to_string()
}

/// Compares an exact rational against a decimal carried at working
/// precision. Differences below `10^-40` relative to the decimal are
/// reported as `None`: the decimal cannot resolve them.
pub fn compare_ratio(q: &BigRational, x: &Decimal) -> Option<Ordering> {
    let exact = to_ratio(x);
    let diff = q - &exact;
    let scale = exact.abs().max(BigRational::new(1.into(), 1.into()));
    let margin = scale * BigRational::new(1.into(), num_traits::pow(BigInt::from(10), 40));
    if diff.abs() <= margin {
        return None;
    }
    Some(if diff.is_zero() {
        Ordering::Equal
    } else if diff.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

pub fn to_f64(x: &Decimal) -> f64 {
    x.to_f64().value()
}
