//! Reference expansions of `sqrt(m+ni) - floor_H(sqrt(m+ni))` for small
//! `m, n`, and a runner that recomputes and diffs them.

use crate::cfengine::{expand, Algorithm, Status, DEFAULT_MAX_STEPS};
use crate::error::{Error, Result};
use crate::exactnum::sqrt_gaussian;
use crate::notation::{format_expansion, parse_gaussian, sqrt_label, Style};
use crate::regions::floor_h;

/// Rows with `|m|, |n| < 3`: (label, expansion).
pub const TABLE_1: &[(&str, &str)] = &[
    (r"\sqrt{-2-2i}-(1-i)", r"[0;\overline{-1+i,2-2i}]"),
    (r"\sqrt{-2-i}-(-2i)", r"[0;\overline{1-i,-1+3i,-1+i,1-3i}]"),
    (r"\sqrt{-2}-2i", r"[0;\overline{2i,4i}]"),
    (r"\sqrt{-2+i}-2i", r"[0;\overline{1+i,-1-3i,-1-i,1+3i}]"),
    (r"\sqrt{-2+2i}-(1+i)", r"[0;\overline{-1-i,2+2i}]"),
    (r"\sqrt{-1-2i}-(1-i)", r"[0;\overline{-2+2i,2-2i}]"),
    (r"\sqrt{-1-i}-(1-i)", r"[0;\overline{-2,2-2i}]"),
    (r"\sqrt{-1+i}-(1+i)", r"[0;\overline{-2,2+2i}]"),
    (r"\sqrt{-1+2i}-(1+i)", r"[0;\overline{-2-2i,2+2i}]"),
    (r"\sqrt{-i}-(1-i)", r"[0;\overline{-2-2i,2-2i}]"),
    (r"\sqrt{i}-(1+i)", r"[0;\overline{-2+2i,2+2i}]"),
    (r"\sqrt{1-2i}-(1-i)", r"[0;\overline{2-2i}]"),
    (r"\sqrt{1-i}-(1-i)", r"[0;\overline{-2i,2-2i}]"),
    (r"\sqrt{1+i}-(1+i)", r"[0;\overline{2i,2+2i}]"),
    (r"\sqrt{1+2i}-(1+i)", r"[0;\overline{2+2i}]"),
    (r"\sqrt{2-2i}-(1-i)", r"[0;\overline{1-i,2-2i}]"),
    (r"\sqrt{2-i}-2", r"[0;\overline{-1+i,-3+i,1-i,3-i}]"),
    (r"\sqrt{2}-2", r"[0;\overline{-2,4}]"),
    (r"\sqrt{2+i}-2", r"[0;\overline{-1-i,-3-i,1+i,3+i}]"),
    (r"\sqrt{2+2i}-(1+i)", r"[0;\overline{1+i,2+2i}]"),
];

/// Rows with `|m|, |n| <= 3` and `|m| = 3` or `|n| = 3`.
pub const TABLE_2: &[(&str, &str)] = &[
    (r"\sqrt{-3-3i}-(-2i)", r"[0;\overline{2,-2,1-i,1-i,-1+i,1-3i}]"),
    (r"\sqrt{-3-2i}-(-2i)", r"[0;\overline{2,-1+i,1-3i}]"),
    (r"\sqrt{-3-i}-(-2i)", r"[0;\overline{2-2i,-4i}]"),
    (r"\sqrt{-3}-2i", r"[0;\overline{4i}]"),
    (r"\sqrt{-3+i}-2i", r"[0;\overline{2+2i,4i}]"),
    (r"\sqrt{-3+2i}-2i", r"[0;\overline{2,-1-i,1+3i}]"),
    (r"\sqrt{-3+3i}-2i", r"[0;\overline{2,-2,1+i,1+i,-1-i,1+3i}]"),
    (r"\sqrt{3-3i}-2", r"[0;\overline{2i,2i,-1+i,1-i,1-i,3-i}]"),
    (r"\sqrt{3-2i}-2", r"[0;\overline{2i,-1+i,-3+i,-2i,1-i,3-i}]"),
    (r"\sqrt{3-i}-2", r"[0;\overline{-2+2i,4}]"),
    (r"\sqrt{3}-2", r"[0;\overline{-4,4}]"),
    (r"\sqrt{3+i}-2", r"[0;\overline{-2-2i,4}]"),
    (r"\sqrt{3+2i}-2", r"[0;\overline{-2i,-1-i,-3-i,2i,1+i,3+i}]"),
    (r"\sqrt{3+3i}-2", r"[0;\overline{-2i,-2i,-1-i,1+i,1+i,3+i}]"),
    (r"\sqrt{-2-3i}-(1-i)", r"[0;\overline{2i,-1+i,1-i,-2+2i,-2i,1-i,-1+i,2-2i}]"),
    (r"\sqrt{-1-3i}-(1-i)", r"[0;\overline{2i,2-2i}]"),
    (r"\sqrt{-3i}-(1-i)", r"[0;\overline{2+2i,2-2i}]"),
    (r"\sqrt{1-3i}-(1-i)", r"[0;\overline{2,2-2i}]"),
    (r"\sqrt{2-3i}-(1-i)", r"[0;\overline{2,-1+i,-1+i,-2+2i,-2,1-i,1-i,2-2i}]"),
    (r"\sqrt{-2+3i}-(1+i)", r"[0;\overline{-2i,-1-i,1+i,-2-2i,2i,1+i,-1-i,2+2i}]"),
    (r"\sqrt{-1+3i}-(1+i)", r"[0;\overline{-2i,2+2i}]"),
    (r"\sqrt{3i}-(1+i)", r"[0;\overline{2-2i,2+2i}]"),
    (r"\sqrt{1+3i}-(1+i)", r"[0;\overline{2,2+2i}]"),
    (r"\sqrt{2+3i}-(1+i)", r"[0;\overline{2,-1-i,-1-i,-2-2i,-2,1+i,1+i,2+2i}]"),
];
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowResult {
    pub expected_label: String,
    pub expected: String,
    pub label: String,
    pub computed: String,
}

impl RowResult {
    pub fn matches(&self) -> bool {
        self.label == self.expected_label && self.computed == self.expected
    }
}

/// Radicand of a `\sqrt{D}-...` label.
pub fn radicand_of(label: &str) -> Result<crate::exactnum::GaussianInt> {
    let body = label
        .strip_prefix("\\sqrt{")
        .and_then(|s| s.split_once('}'))
        .map(|(d, _)| d)
        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("not a sqrt label: {label}") })?;
    parse_gaussian(body)
}

pub fn run_row(label: &str, expected: &str) -> Result<RowResult> {
    let d = radicand_of(label)?;
    let s = sqrt_gaussian(&d)?;
    let a0 = floor_h(&s)?;
    let e = expand(&s.sub_int(&a0), Algorithm::H, DEFAULT_MAX_STEPS)?;
    if e.status != Status::Periodic {
        return Err(Error::Verification(format!("{label}: status {}", e.status.as_str())));
    }
    Ok(RowResult {
        expected_label: label.to_string(),
        expected: expected.to_string(),
        label: sqrt_label(&d, &a0),
        computed: format_expansion(&e, Style::Bracket),
    })
}

/// Rows of table 1, table 2 or both (`which = None`).
pub fn rows(which: Option<u8>) -> Vec<(&'static str, &'static str)> {
    match which {
        Some(1) => TABLE_1.to_vec(),
        Some(2) => TABLE_2.to_vec(),
        _ => TABLE_1.iter().chain(TABLE_2).copied().collect(),
    }
}

pub fn run_tables(which: Option<u8>) -> Result<Vec<RowResult>> {
    rows(which).into_iter().map(|(l, e)| run_row(l, e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(TABLE_1.len(), 20);
        assert_eq!(TABLE_2.len(), 24);
    }

    #[test]
    fn every_row_matches() {
        let bad: Vec<RowResult> = run_tables(None).unwrap().into_iter().filter(|r| !r.matches()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn first_rows_match() {
        for (l, e) in [TABLE_1[0], TABLE_1[2], TABLE_2[3]] {
            let r = run_row(l, e).unwrap();
            assert!(r.matches(), "{r:?}");
        }
    }
}
