//! Plain-text numeric formatting.
//!
//! Plain output prints comma-separated decimals rounded to a requested
//! number of significant digits (default 12), falling back to scientific
//! notation outside a readable exponent range.

use hypercross::{Matrix, VecN};

/// Formats a value to `sig` significant digits, trimming trailing zeros.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    let sig = sig.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (_, exp_str) = sci.split_once('e').expect("exponential format");
    let exp: i32 = exp_str.parse().expect("exponent is an integer");
    if exp >= -4 && exp < sig as i32 {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_trailing(&format!("{x:.decimals$}"))
    } else {
        let (mantissa, _) = sci.split_once('e').expect("exponential format");
        format!("{}e{exp}", trim_trailing(mantissa))
    }
}

fn trim_trailing(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".to_string()
    } else {
        t.to_string()
    }
}

pub fn fmt_vector(v: &VecN, sig: usize) -> String {
    v.coords()
        .iter()
        .map(|&c| fmt_sig(c, sig))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn fmt_matrix(m: &Matrix, sig: usize) -> String {
    m.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&c| fmt_sig(c, sig))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn matrix_json(m: &Matrix) -> serde_json::Value {
    serde_json::json!(m.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.0, 12), "0");
        assert_eq!(fmt_sig(-0.0, 12), "0");
        assert_eq!(fmt_sig(1.0, 12), "1");
        assert_eq!(fmt_sig(-2.5, 12), "-2.5");
        assert_eq!(fmt_sig(123456.789, 12), "123456.789");
        assert_eq!(fmt_sig(std::f64::consts::PI, 12), "3.14159265359");
        assert_eq!(fmt_sig(1e-5, 12), "1e-5");
        assert_eq!(fmt_sig(1.5e20, 12), "1.5e20");
        assert_eq!(fmt_sig(0.999999, 3), "1");
        // ties round to even, following the standard formatter
        assert_eq!(fmt_sig(0.125, 2), "0.12");
        assert_eq!(fmt_sig(0.135, 2), "0.14");
    }

    #[test]
    fn vector_formatting() {
        let v = VecN::new(vec![0.0, 1.0, -0.5]);
        assert_eq!(fmt_vector(&v, 12), "0,1,-0.5");
    }
}
