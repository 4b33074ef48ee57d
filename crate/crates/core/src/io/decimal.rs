//! Exact conversion between decimal text and scaled integers.

use thiserror::Error;

/// Largest supported scale exponent; `10^18` still fits in an `i64`.
pub const MAX_SCALE: u32 = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecimalError {
    #[error("`{0}` is not a decimal number")]
    Malformed(String),
    #[error("`{text}` has more than {scale} fractional digits")]
    TooManyFractionalDigits { text: String, scale: u32 },
    #[error("`{0}` is out of range")]
    Overflow(String),
    #[error("`{0}` must not be negative")]
    Negative(String),
    #[error("twice `{text}` is not a whole number of 10^-{scale} units")]
    NotRepresentable { text: String, scale: u32 },
    #[error("scale {0} exceeds the maximum of {MAX_SCALE}")]
    ScaleTooLarge(u32),
}

/// Digits of a decimal literal with the point removed, and how many of them
/// were fractional.
struct Mantissa {
    value: i128,
    frac_digits: u32,
}

fn parse_mantissa(text: &str) -> Result<Mantissa, DecimalError> {
    let malformed = || DecimalError::Malformed(text.to_string());
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
        || (body.contains('.') && frac_part.is_empty())
    {
        return Err(malformed());
    }
    let mut value: i128 = 0;
    for b in int_part.bytes().chain(frac_part.bytes()) {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add((b - b'0') as i128))
            .filter(|v| *v <= i64::MAX as i128 * 10)
            .ok_or_else(|| DecimalError::Overflow(text.to_string()))?;
    }
    if negative {
        value = -value;
    }
    Ok(Mantissa {
        value,
        frac_digits: frac_part.len() as u32,
    })
}

fn pow10(exp: u32) -> i128 {
    10i128.pow(exp)
}

fn check_scale(scale: u32) -> Result<(), DecimalError> {
    if scale > MAX_SCALE {
        return Err(DecimalError::ScaleTooLarge(scale));
    }
    Ok(())
}

fn to_i64(value: i128, text: &str) -> Result<i64, DecimalError> {
    i64::try_from(value).map_err(|_| DecimalError::Overflow(text.to_string()))
}

/// `text * 10^scale`, which must be an integer with at most `scale`
/// fractional digits written.
pub fn parse_scaled(text: &str, scale: u32) -> Result<i64, DecimalError> {
    check_scale(scale)?;
    let m = parse_mantissa(text)?;
    if m.frac_digits > scale {
        return Err(DecimalError::TooManyFractionalDigits {
            text: text.to_string(),
            scale,
        });
    }
    to_i64(m.value * pow10(scale - m.frac_digits), text)
}

/// `2 * text * 10^scale` for a tolerance, which must come out integral.
/// Permits one more fractional digit than `scale` when it is a 5.
pub fn parse_doubled_epsilon(text: &str, scale: u32) -> Result<i64, DecimalError> {
    check_scale(scale)?;
    let m = parse_mantissa(text)?;
    if m.value < 0 {
        return Err(DecimalError::Negative(text.to_string()));
    }
    let doubled = 2 * m.value;
    let value = if m.frac_digits <= scale {
        doubled * pow10(scale - m.frac_digits)
    } else {
        let divisor = pow10(m.frac_digits - scale);
        if doubled % divisor != 0 {
            return Err(DecimalError::NotRepresentable {
                text: text.to_string(),
                scale,
            });
        }
        doubled / divisor
    };
    to_i64(value, text)
}

/// Renders `value / 10^scale` with exactly `scale` fractional digits.
pub fn format_scaled(value: i64, scale: u32) -> String {
    let sign = if value < 0 { "-" } else { "" };
    let magnitude = (value as i128).unsigned_abs();
    if scale == 0 {
        return format!("{sign}{magnitude}");
    }
    let unit = 10u128.pow(scale);
    format!(
        "{sign}{}.{:0width$}",
        magnitude / unit,
        magnitude % unit,
        width = scale as usize
    )
}

/// Renders a doubled tolerance `2ε` as `ε` at the given scale; halves may
/// need one extra digit.
pub fn format_half(doubled: i64, scale: u32) -> String {
    if doubled % 2 == 0 {
        format_scaled(doubled / 2, scale)
    } else {
        format_scaled(doubled * 5, scale + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_weights() {
        assert_eq!(parse_scaled("4.7", 2), Ok(470));
        assert_eq!(parse_scaled("0.05", 2), Ok(5));
        assert_eq!(parse_scaled("7", 0), Ok(7));
        assert_eq!(parse_scaled(".5", 1), Ok(5));
        assert_eq!(parse_scaled("-1.5", 1), Ok(-15));
        assert!(matches!(
            parse_scaled("0.055", 2),
            Err(DecimalError::TooManyFractionalDigits { .. })
        ));
        assert!(matches!(
            parse_scaled("0.50", 1),
            Err(DecimalError::TooManyFractionalDigits { .. })
        ));
        for bad in ["", ".", "1.", "1.2.3", "abc", "1e5", "--1", " 1"] {
            assert!(
                matches!(parse_scaled(bad, 3), Err(DecimalError::Malformed(_))),
                "{bad:?}"
            );
        }
        assert!(matches!(
            parse_scaled("99999999999999999999", 0),
            Err(DecimalError::Overflow(_))
        ));
        assert!(matches!(parse_scaled("1", 19), Err(DecimalError::ScaleTooLarge(19))));
    }

    #[test]
    fn parses_tolerances() {
        assert_eq!(parse_doubled_epsilon("0.05", 1), Ok(1));
        assert_eq!(parse_doubled_epsilon("0.05", 2), Ok(10));
        assert_eq!(parse_doubled_epsilon("0.050", 1), Ok(1));
        assert_eq!(parse_doubled_epsilon("1", 0), Ok(2));
        assert_eq!(parse_doubled_epsilon("0.5", 0), Ok(1));
        assert_eq!(parse_doubled_epsilon("0", 0), Ok(0));
        assert!(matches!(
            parse_doubled_epsilon("0.03", 1),
            Err(DecimalError::NotRepresentable { .. })
        ));
        assert!(matches!(
            parse_doubled_epsilon("0.25", 0),
            Err(DecimalError::NotRepresentable { .. })
        ));
        assert!(matches!(parse_doubled_epsilon("-1", 0), Err(DecimalError::Negative(_))));
    }

    #[test]
    fn formats() {
        assert_eq!(format_scaled(470, 2), "4.70");
        assert_eq!(format_scaled(5, 2), "0.05");
        assert_eq!(format_scaled(7, 0), "7");
        assert_eq!(format_scaled(-15, 1), "-1.5");
        assert_eq!(format_half(1, 1), "0.05");
        assert_eq!(format_half(2, 0), "1");
        assert_eq!(format_half(10, 2), "0.05");
    }
}
