//! Exact rational scalars. Everything in this crate computes over `Rat`;
//! there is no floating-point fallback.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Floor of a rational as a BigInt.
pub fn floor_int(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// Reduce into [0, 1).
pub fn frac_mod_one(x: &Rat) -> Rat {
    x - Rat::from_integer(floor_int(x))
}

/// Render as `p/q`, or just `p` when the denominator is 1.
pub fn rat_to_string(x: &Rat) -> String {
    if is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `p`, `-p`, or `p/q`. Rejects floating-point notation.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.contains('.') || s.contains(['e', 'E']) {
        return Err(Error::Parse(format!(
            "floating-point literal {s:?} rejected; use exact p/q"
        )));
    }
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Falling factorial x(x-1)...(x-k+1) for rational x.
pub fn falling(x: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x - rat(i as i64);
    }
    acc
}

/// Generalized binomial coefficient (x choose k) for rational x.
pub fn binom(x: &Rat, k: usize) -> Rat {
    let mut fact = Rat::one();
    for i in 1..=k {
        fact *= rat(i as i64);
    }
    falling(x, k) / fact
}

/// Integer falling factorial; stays in Z for integer input.
pub fn falling_i(x: i64, k: usize) -> Rat {
    falling(&rat(x), k)
}

/// Exact integer square root test: Some(r) with r*r == n when n is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for s in ["3", "-4", "1/2", "-7/3", "0"] {
            let x = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&x), s);
        }
    }

    #[test]
    fn rejects_floats() {
        assert!(rat_from_str("0.5").is_err());
        assert!(rat_from_str("1e3").is_err());
    }

    #[test]
    fn binom_half() {
        // (1/2 choose 2) = (1/2)(-1/2)/2 = -1/8
        assert_eq!(binom(&ratio(1, 2), 2), ratio(-1, 8));
    }

    #[test]
    fn frac_mod() {
        assert_eq!(frac_mod_one(&ratio(-1, 2)), ratio(1, 2));
        assert_eq!(frac_mod_one(&rat(3)), rat(0));
    }
}
