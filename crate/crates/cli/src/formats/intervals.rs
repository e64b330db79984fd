//! One interval per line: `vertex lo hi`. Endpoints are integers, decimals
//! (`0.25`) or fractions (`3/4`). Vertices must cover `1..=n`, each once.

use num_rational::Ratio;
use wordrep_core::models::{Endpoint, IntervalModel};

use crate::error::FormatError;

pub fn parse_rational(s: &str) -> Option<Endpoint> {
    if let Some((num, den)) = s.split_once('/') {
        let den: i64 = den.parse().ok()?;
        let num: i64 = num.parse().ok()?;
        return (den != 0).then(|| Ratio::new(num, den));
    }
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let den = 10i64.checked_pow(frac.len() as u32)?;
    let whole: i64 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let part: i64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    let value = Ratio::new(whole.checked_mul(den)?.checked_add(part)?, den);
    Some(if neg { -value } else { value })
}

pub fn parse(text: &str) -> Result<IntervalModel, FormatError> {
    let mut rows: Vec<Option<(Endpoint, Endpoint)>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [v, lo, hi] = tokens[..] else {
            return Err(FormatError::line(ln, "expected `vertex lo hi`"));
        };
        let v: usize = v.parse().ok().filter(|&v| v > 0).ok_or_else(|| FormatError::line(ln, "bad vertex"))?;
        let lo = parse_rational(lo).ok_or_else(|| FormatError::line(ln, format!("bad endpoint {lo:?}")))?;
        let hi = parse_rational(hi).ok_or_else(|| FormatError::line(ln, format!("bad endpoint {hi:?}")))?;
        if rows.len() < v {
            rows.resize(v, None);
        }
        if rows[v - 1].replace((lo, hi)).is_some() {
            return Err(FormatError::line(ln, format!("vertex {v} listed twice")));
        }
    }
    if rows.is_empty() {
        return Err(FormatError::Empty);
    }
    let intervals = rows
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| FormatError::line(0, format!("vertex {} has no interval", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntervalModel::new(intervals)?)
}

pub fn serialize(model: &IntervalModel) -> String {
    model.intervals().iter().enumerate().map(|(i, (lo, hi))| format!("{} {lo} {hi}\n", i + 1)).collect()
}
