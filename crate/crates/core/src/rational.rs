use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_pow2(e: i64) -> Q {
    if e >= 0 {
        Q::from_integer(BigInt::one() << (e as usize))
    } else {
        Q::new(BigInt::one(), BigInt::one() << ((-e) as usize))
    }
}

/// `num/den` with den omitted when it is 1.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Always `num/den`.
pub fn fmt_q_full(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Result<Q> {
    let bad = |m: String| Error::Parse { offset: 0, message: m };
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|e| bad(format!("{s:?}: {e}")))?;
    let d: BigInt = d.parse().map_err(|e| bad(format!("{s:?}: {e}")))?;
    if d.is_zero() {
        return Err(bad(format!("{s:?}: zero denominator")));
    }
    Ok(Q::new(n, d))
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(fmt_q(&q_frac(6, 4)), "3/2");
        assert_eq!(fmt_q(&q(-5)), "-5");
        assert_eq!(fmt_q_full(&q(5)), "5/1");
        assert_eq!(parse_q("3/2").unwrap(), q_frac(3, 2));
        assert_eq!(parse_q("-7").unwrap(), q(-7));
        assert!(parse_q("1/0").is_err());
        assert_eq!(q_pow2(-2), q_frac(1, 4));
    }
}
