//! Parsing of the `c1*KEY1 + c2*KEY2` text form.

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{self, Scalar};

/// Splits at top-level ` + ` / ` - ` separators, returning (offset, sign, term).
fn split_terms(s: &str) -> Result<Vec<(usize, bool, &str)>> {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    let mut out = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let mut i = 0;
    if s.starts_with('-') {
        negative = true;
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        match bytes[i] {
            b'(' | b'[' | b'{' => depth += 1,
            b')' | b']' | b'}' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(i, "unbalanced bracket"));
                }
            }
            b' ' if depth == 0
                && i + 2 < bytes.len()
                && (bytes[i + 1] == b'+' || bytes[i + 1] == b'-')
                && bytes[i + 2] == b' ' =>
            {
                out.push((start, negative, &s[start..i]));
                negative = bytes[i + 1] == b'-';
                i += 3;
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    if depth != 0 {
        return Err(Error::parse(s.len(), "unbalanced bracket"));
    }
    out.push((start, negative, &s[start..]));
    Ok(out)
}

/// Parses a linear combination given a parser for single keys.
pub fn parse_lincomb<K: Ord + Clone>(
    s: &str,
    mut key: impl FnMut(&str) -> Result<K>,
) -> Result<LinComb<K>> {
    let s = s.trim();
    if s == "0" {
        return Ok(LinComb::zero());
    }
    if s.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut out = LinComb::zero();
    for (offset, negative, term) in split_terms(s)? {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::parse(offset, "missing term"));
        }
        let mut coeff = Scalar::from_integer(1.into());
        let mut body = term;
        if let Some((head, rest)) = term.split_once('*') {
            if head.starts_with(|c: char| c.is_ascii_digit()) {
                if let Ok(c) = scalar::parse(head) {
                    coeff = c;
                    body = rest;
                }
            }
        }
        let k = key(body).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::parse(offset + pos, msg),
            other => other,
        })?;
        out.add_term(k, if negative { -coeff } else { coeff });
    }
    Ok(out)
}
