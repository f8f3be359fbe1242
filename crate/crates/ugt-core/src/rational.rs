//! Exact rational scalars and the canonical text forms used across the
//! whole workspace: rationals as `"p/q"` in lowest terms, floats with 12
//! significant digits.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

pub fn q_from(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, an integer string, or a decimal string, exactly.
/// No floating-point round trip is involved.
pub fn parse_q(s: &str) -> Result<Q, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.strip_prefix(['-', '+']).unwrap_or(int_part);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let int_val: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().map_err(|_| format!("bad decimal {s:?}"))?
        };
        let frac_val: BigInt = frac_part.parse().map_err(|_| format!("bad decimal {s:?}"))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut q = Q::from_integer(int_val) + Q::new(frac_val, scale);
        if negative {
            q = -q;
        }
        return Ok(q);
    }
    let n: BigInt = s.parse().map_err(|_| format!("bad rational {s:?}"))?;
    Ok(Q::from_integer(n))
}

/// Lowest-terms text form: `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_q(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn q_to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // denominators can outgrow f64 after long exact pipelines; divide
        // the parts separately as a fallback
        let n = q.numer().to_f64().unwrap_or(f64::MAX);
        let d = q.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// `%.12g`-style rendering: 12 significant digits, fixed or scientific
/// depending on magnitude, trailing zeros stripped.
pub fn fmt_f64_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    // {:.11e} gives "d.<11 digits>e<exp>"
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("exponent value");
    if exp < -4 || exp >= 12 {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        return format!("{}e{}{:02}", m, if exp < 0 { "-" } else { "+" }, exp.abs());
    }
    // fixed notation with 12 significant digits total
    let frac_digits = (11 - exp).max(0) as usize;
    let fixed = format!("{:.*}", frac_digits, x);
    if fixed.contains('.') {
        fixed
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        fixed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("3/5").unwrap(), q_from(3, 5));
        assert_eq!(parse_q("0.75").unwrap(), q_from(3, 4));
        assert_eq!(parse_q("2").unwrap(), q_int(2));
        assert_eq!(parse_q("-0.5").unwrap(), q_from(-1, 2));
        assert_eq!(parse_q(".25").unwrap(), q_from(1, 4));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert!(parse_q("1e3").is_err());
    }

    #[test]
    fn fmt_lowest_terms() {
        assert_eq!(fmt_q(&q_from(6, 10)), "3/5");
        assert_eq!(fmt_q(&q_from(4, 2)), "2");
        assert_eq!(fmt_q(&q_from(-6, 10)), "-3/5");
    }

    #[test]
    fn sig12_rendering() {
        assert_eq!(fmt_f64_sig12(0.0), "0");
        assert_eq!(fmt_f64_sig12(1.0), "1");
        assert_eq!(fmt_f64_sig12(0.5), "0.5");
        assert_eq!(fmt_f64_sig12(2281.0 / 200.0), "11.405");
        assert_eq!(fmt_f64_sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_f64_sig12(1e-7), "1e-07");
        assert_eq!(fmt_f64_sig12(123456789012345.0), "1.23456789012e+14");
        assert_eq!(fmt_f64_sig12(-0.25), "-0.25");
    }

    #[test]
    fn decimal_parse_is_exact() {
        // 0.1 is not a binary float; parsing must not round-trip through f64
        assert_eq!(parse_q("0.1").unwrap(), q_from(1, 10));
        assert_eq!(parse_q("0.123456789123456789").unwrap(),
            Q::new("123456789123456789".parse().unwrap(),
                   "1000000000000000000".parse().unwrap()));
    }
}
