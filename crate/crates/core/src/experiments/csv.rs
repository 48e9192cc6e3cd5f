//! `a,D` CSV output: one header line, one row per grid point, values with
//! 12 significant digits in `%g` style, `\n` line endings.

use std::fs;
use std::path::Path;

use super::sweep::SweepResult;
use crate::error::{EcdError, Result};

const SIGNIFICANT_DIGITS: usize = 12;

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Formats like C's `%.12g`: zero is `0`, trailing zeros are dropped, and
/// scientific notation is used for exponents below −4 or from 12 up.
pub fn format_g12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIGNIFICANT_DIGITS as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    } else {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

pub fn to_csv_string(result: &SweepResult) -> String {
    let mut out = String::from("a,D");
    for row in &result.rows {
        out.push('\n');
        out.push_str(&format_g12(row.a));
        out.push(',');
        out.push_str(&format_g12(row.d));
    }
    out.push('\n');
    out
}

pub fn emit_csv(result: &SweepResult, path: &Path) -> Result<()> {
    fs::write(path, to_csv_string(result))?;
    Ok(())
}

/// Reads back `(a, D)` pairs from an emitted file's contents.
pub fn parse_csv(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut lines = text.lines();
    match lines.next() {
        Some("a,D") => {}
        other => {
            return Err(EcdError::InvalidParameter(format!(
                "expected `a,D` header, got {other:?}"
            )))
        }
    }
    lines
        .map(|line| {
            let (a, d) = line
                .split_once(',')
                .ok_or_else(|| EcdError::InvalidParameter(format!("bad row `{line}`")))?;
            let parse = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| EcdError::InvalidParameter(format!("bad number `{s}`")))
            };
            Ok((parse(a)?, parse(d)?))
        })
        .collect()
}
