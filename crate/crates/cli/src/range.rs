use std::ops::RangeInclusive;

/// Parse `N` or `A..B` (inclusive) with `1 <= A <= B <= max`.
pub fn parse_range(s: &str, max: u64) -> Result<RangeInclusive<u64>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("invalid degree '{}' in --d {s}", t.trim()))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if a == 0 {
        return Err(format!("degrees start at 1, got --d {s}"));
    }
    if a > b {
        return Err(format!("empty range --d {s}"));
    }
    if b > max {
        return Err(format!("degree {b} exceeds --max-d {max}"));
    }
    Ok(a..=b)
}
