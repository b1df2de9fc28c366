//! Exact rational scalars.
//!
//! Every coefficient in this crate is a [`Rat`], a reduced fraction of
//! arbitrary-precision integers with positive denominator. There are no
//! floating-point modes and no tolerances anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with optional sign; rejects zero denominators.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| format!("invalid integer {:?} in rational {:?}", num_str, s))?;
    let denom: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| format!("invalid integer {:?} in rational {:?}", den_str, s))?;
    if denom.is_zero() {
        return Err(format!("zero denominator in rational {:?}", s));
    }
    Ok(Rat::new(numer, denom))
}

/// Formats as `"p"` or `"p/q"`; inverse of [`parse_rat`].
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scales a rational vector to a primitive integer vector (clears
/// denominators, divides by the content, first nonzero entry positive).
/// Returns `None` for the zero vector.
pub fn primitive_integer_vector(v: &[Rat]) -> Option<Vec<BigInt>> {
    use num::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return None;
    }
    for x in &mut ints {
        *x = &*x / &gcd;
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut ints {
                *x = -&*x;
            }
        }
    }
    Some(ints)
}
