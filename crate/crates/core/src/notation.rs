//! Text forms of Gaussian integers and expansions.
//!
//! Two expansion styles are supported. The plain style marks the period
//! explicitly, `[0; 5+i, over(1-2i, 3)]`; the bracket style uses TeX overline
//! markup and no spaces, `[0;5+i,\overline{1-2i,3}]`.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::cfengine::{Expansion, Status};
use crate::error::{Error, Result};
use crate::exactnum::GaussianInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Bracket,
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn parse_int(s: &str, pos: usize) -> Result<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(pos, format!("expected an integer, found {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| parse_err(pos, e.to_string()))
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (whitespace ignored).
pub fn parse_gaussian(text: &str) -> Result<GaussianInt> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(parse_err(0, "empty Gaussian integer"));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(GaussianInt { re: parse_int(&t, 0)?, im: BigInt::from(0) });
    };
    let split = body.rfind(['+', '-']).filter(|&p| p > 0);
    let (re, im_str, im_pos) = match split {
        Some(p) => (parse_int(&body[..p], 0)?, &body[p..], p),
        None => (BigInt::from(0), body, 0),
    };
    let im = match im_str {
        "" | "+" => BigInt::from(1),
        "-" => BigInt::from(-1),
        s => parse_int(s, im_pos)?,
    };
    Ok(GaussianInt { re, im })
}

fn join(items: &[GaussianInt], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// Renders `[a0; a1, ..., over(...)]` (plain) or `[a0;a1,...,\overline{...}]`.
pub fn format_expansion(e: &Expansion, style: Style) -> String {
    let pre: Vec<GaussianInt> = e.preperiod.iter().map(|a| a.value.clone()).collect();
    let per: Vec<GaussianInt> = e.period.iter().map(|a| a.value.clone()).collect();
    format_parts(&e.initial, &pre, &per, e.status == Status::Truncated, style)
}

pub fn format_parts(
    initial: &GaussianInt,
    preperiod: &[GaussianInt],
    period: &[GaussianInt],
    truncated: bool,
    style: Style,
) -> String {
    let (sep, head_sep) = match style {
        Style::Plain => (", ", "; "),
        Style::Bracket => (",", ";"),
    };
    let mut parts: Vec<String> = preperiod.iter().map(ToString::to_string).collect();
    if !period.is_empty() {
        parts.push(match style {
            Style::Plain => format!("over({})", join(period, sep)),
            Style::Bracket => format!("\\overline{{{}}}", join(period, sep)),
        });
    }
    if truncated {
        parts.push("...".into());
    }
    if parts.is_empty() {
        format!("[{initial}]")
    } else {
        format!("[{initial}{head_sep}{}]", parts.join(sep))
    }
}

/// The quotients of an expansion string in either style.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedExpansion {
    pub initial: GaussianInt,
    pub preperiod: Vec<GaussianInt>,
    pub period: Vec<GaussianInt>,
    pub truncated: bool,
}

fn parse_list(s: &str, offset: usize) -> Result<Vec<GaussianInt>> {
    let mut out = Vec::new();
    let mut pos = offset;
    for item in s.split(',') {
        out.push(parse_gaussian(item).map_err(|e| match e {
            Error::Parse { pos: p, msg } => parse_err(pos + p, msg),
            other => other,
        })?);
        pos += item.len() + 1;
    }
    Ok(out)
}

pub fn parse_expansion(text: &str) -> Result<ParsedExpansion> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| parse_err(0, "expansion must be enclosed in [ ]"))?;
    let (head, rest) = match inner.split_once(';') {
        Some((h, r)) => (h, r.trim()),
        None => (inner, ""),
    };
    let initial = parse_gaussian(head)?;
    let mut rest = rest.to_string();
    let truncated = rest.ends_with("...");
    if truncated {
        rest.truncate(rest.len() - 3);
        rest = rest.trim_end().trim_end_matches(',').to_string();
    }
    let open = ["over(", "\\overline{"].iter().find_map(|m| rest.find(m).map(|p| (p, m.len())));
    let (pre_str, per_str) = match open {
        Some((p, len)) => {
            let close = if rest[p..].starts_with("over(") { ')' } else { '}' };
            let body = rest[p + len..]
                .strip_suffix(close)
                .ok_or_else(|| parse_err(p, "unterminated period"))?;
            (rest[..p].trim_end().trim_end_matches(',').to_string(), body.to_string())
        }
        None => (rest.clone(), String::new()),
    };
    let list = |s: &str| if s.trim().is_empty() { Ok(vec![]) } else { parse_list(s, 0) };
    Ok(ParsedExpansion { initial, preperiod: list(&pre_str)?, period: list(&per_str)?, truncated })
}

/// Label `\sqrt{D}-a` with `a` parenthesized when it carries a sign.
pub fn sqrt_label(radicand: &GaussianInt, floor: &GaussianInt) -> String {
    let f = floor.to_string();
    if f.contains(['+', '-']) {
        format!("\\sqrt{{{radicand}}}-({f})")
    } else {
        format!("\\sqrt{{{radicand}}}-{f}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn gaussian_forms() {
        for (s, v) in [
            ("0", g(0, 0)),
            ("3", g(3, 0)),
            ("-3", g(-3, 0)),
            ("i", g(0, 1)),
            ("-i", g(0, -1)),
            ("2i", g(0, 2)),
            ("-4i", g(0, -4)),
            ("1-3i", g(1, -3)),
            ("-1+i", g(-1, 1)),
            (" 5 + i ", g(5, 1)),
        ] {
            assert_eq!(parse_gaussian(s).unwrap(), v, "{s}");
        }
        for bad in ["", "x", "1+", "2+-3i", "ii", "1.5"] {
            assert!(parse_gaussian(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn expansion_strings_round_trip() {
        let pre = [g(5, 1)];
        let per = [g(-3, -1), g(1, 1)];
        let plain = format_parts(&g(0, 0), &pre, &per, false, Style::Plain);
        assert_eq!(plain, "[0; 5+i, over(-3-i, 1+i)]");
        let bracket = format_parts(&g(0, 0), &pre, &per, false, Style::Bracket);
        assert_eq!(bracket, "[0;5+i,\\overline{-3-i,1+i}]");
        for s in [plain, bracket] {
            let p = parse_expansion(&s).unwrap();
            assert_eq!((p.preperiod, p.period), (pre.to_vec(), per.to_vec()));
        }
        let p = parse_expansion("[0;2,2]").unwrap();
        assert_eq!((p.preperiod, p.period), (vec![g(2, 0), g(2, 0)], vec![]));
        let p = parse_expansion("[1+i; 2, ...]").unwrap();
        assert!(p.truncated);
        assert_eq!(p.preperiod, vec![g(2, 0)]);
        assert_eq!(format_parts(&g(3, 0), &[], &[], false, Style::Plain), "[3]");
    }

    #[test]
    fn labels() {
        assert_eq!(sqrt_label(&g(2, 1), &g(2, 0)), "\\sqrt{2+i}-2");
        assert_eq!(sqrt_label(&g(-2, -1), &g(0, -2)), "\\sqrt{-2-i}-(-2i)");
        assert_eq!(sqrt_label(&g(-2, 0), &g(0, 2)), "\\sqrt{-2}-2i");
        assert_eq!(sqrt_label(&g(-2, -2), &g(1, -1)), "\\sqrt{-2-2i}-(1-i)");
    }
}
