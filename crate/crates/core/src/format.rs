//! Numeric output formatting.

use crate::combinatorics::Rational;

/// Fixed-point rendering with `digits` significant digits, e.g.
/// `sig(0.08, 12) == "0.0800000000000"`.
pub fn sig(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { format!("{:.*}", digits.saturating_sub(1), 0.0) } else { v.to_string() };
    }
    // exponent of the leading digit after rounding to `digits` places
    let sci = format!("{:.*e}", digits.saturating_sub(1), v);
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

/// 12 significant digits, the precision of all CLI output.
pub fn sig12(v: f64) -> String {
    sig(v, 12)
}

/// Exact counterpart of [`sig`] for a nonnegative rational, rounding half up.
pub fn sig_exact(q: Rational, digits: usize) -> String {
    let (num, den) = (*q.numer() as i128, *q.denom() as i128);
    assert!(num >= 0 && digits >= 1, "sig_exact takes a nonnegative value");
    if num == 0 {
        return sig(0.0, digits);
    }
    // exp = floor(log10(num / den))
    let mut exp = 0i32;
    let (mut a, mut b) = (num, den);
    while a >= 10 * b {
        b *= 10;
        exp += 1;
    }
    while a < b {
        a *= 10;
        exp -= 1;
    }
    let mut shift = digits as i32 - 1 - exp;
    let (mut a, mut b) = (num, den);
    if shift >= 0 {
        a *= 10i128.pow(shift as u32);
    } else {
        b *= 10i128.pow((-shift) as u32);
    }
    let mut scaled = a / b;
    if 2 * (a % b) >= b {
        scaled += 1;
    }
    // rounding carried into a new leading digit
    if scaled == 10i128.pow(digits as u32) {
        scaled /= 10;
        shift -= 1;
    }
    let decimals = shift.max(0) as usize;
    let mut text = scaled.to_string();
    if shift < 0 {
        text.push_str(&"0".repeat((-shift) as usize));
    }
    if decimals == 0 {
        return text;
    }
    if text.len() <= decimals {
        text = "0".repeat(decimals + 1 - text.len()) + &text;
    }
    let split = text.len() - decimals;
    format!("{}.{}", &text[..split], &text[split..])
}
