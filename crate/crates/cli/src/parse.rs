//! Value parsers for numeric flags. Every number accepts scientific notation.

/// Non-negative integer, e.g. `2000`, `2e3`, `1.0e4`.
pub fn count(s: &str) -> Result<usize, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
    if !((0.0..=9.0e15).contains(&v) && v.fract() == 0.0) {
        return Err(format!("'{s}' is not a non-negative integer"));
    }
    Ok(v as usize)
}

pub fn real(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
    if !v.is_finite() {
        return Err(format!("'{s}' is not finite"));
    }
    Ok(v)
}

/// Comma-separated reals.
#[derive(Debug, Clone, PartialEq)]
pub struct Reals(pub Vec<f64>);

pub fn real_list(s: &str) -> Result<Reals, String> {
    s.split(',').map(real).collect::<Result<_, _>>().map(Reals)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Indices(pub Vec<usize>);

/// Index set: comma-separated items, each `k`, `a..b` or `a..=b` (both inclusive).
pub fn index_set(s: &str) -> Result<Indices, String> {
    let mut out = Vec::new();
    for item in s.split(',') {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (count(lo)?, count(hi.strip_prefix('=').unwrap_or(hi))?);
                if lo > hi {
                    return Err(format!("empty range '{item}'"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(count(item)?),
        }
    }
    if out.is_empty() {
        return Err("empty index set".into());
    }
    Ok(Indices(out))
}

/// Real interval `lo..hi` with lo < hi.
pub fn interval(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("'{s}' is not of the form LO..HI"))?;
    let (lo, hi) = (real(lo)?, real(hi)?);
    if !(lo < hi) {
        return Err(format!("'{s}' needs LO < HI"));
    }
    Ok((lo, hi))
}
