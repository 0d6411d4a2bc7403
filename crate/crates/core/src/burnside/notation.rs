//! Bracket notation `k[G/H] + ...` for Burnside elements.

use std::fmt;
use std::sync::Arc;

use crate::group::{ClassName, GroupLattice};

use super::{BurnsideElement, BurnsideError};

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group = self.ring.name().as_str();
        let mut first = true;
        for (c, class) in self.coeffs.iter().zip(self.ring.classes()) {
            if *c == 0 {
                continue;
            }
            let sign = match (first, *c < 0) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            let k = c.unsigned_abs();
            if k == 1 {
                write!(f, "{sign}[{group}/{}]", class.label)?;
            } else {
                write!(f, "{sign}{k}[{group}/{}]", class.label)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl BurnsideElement {
    /// Parses an element over a given ambient group. Bracket group names must
    /// match the ambient group's class name.
    pub fn parse_in(ring: &Arc<GroupLattice>, s: &str) -> Result<BurnsideElement, BurnsideError> {
        let terms = split_terms(s)?;
        let mut out = BurnsideElement::zero(ring);
        for term in terms {
            let Some((group, label, k)) = term else { continue };
            let name: ClassName = group.parse().map_err(|_| BurnsideError::Parse(format!("unknown group {group}")))?;
            if name != ring.name() {
                return Err(BurnsideError::AmbientMismatch(group, ring.name().to_string()));
            }
            let idx = ring.class_by_label(&label)?;
            out.coeffs[idx] += k;
        }
        Ok(out)
    }
}

/// Parses `k[G/H] + ...`; the ambient group is the fixed representative of
/// the class named `G`.
pub fn parse_element(s: &str) -> Result<BurnsideElement, BurnsideError> {
    let terms = split_terms(s)?;
    let group = terms
        .iter()
        .flatten()
        .map(|(g, _, _)| g.clone())
        .next()
        .ok_or_else(|| BurnsideError::Parse(format!("no [G/H] term in {s:?}")))?;
    let name: ClassName = group
        .parse()
        .map_err(|_| BurnsideError::Parse(format!("unknown group {group}")))?;
    BurnsideElement::parse_in(&GroupLattice::shared(name), s)
}

type Term = Option<(String, String, i64)>;

/// Splits into signed terms. A bare `0` yields `None`.
fn split_terms(s: &str) -> Result<Vec<Term>, BurnsideError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(BurnsideError::Parse("empty input".into()));
    }
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('+') {
            if first {
                return Err(BurnsideError::Parse(format!("leading '+' in {s:?}")));
            }
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if !first {
            return Err(BurnsideError::Parse(format!("expected '+' or '-' in {s:?}")));
        }
        first = false;
        let digits = rest.chars().take_while(char::is_ascii_digit).count();
        let k: i64 = if digits == 0 {
            1
        } else {
            rest[..digits]
                .parse()
                .map_err(|_| BurnsideError::Parse(format!("bad coefficient in {s:?}")))?
        };
        rest = &rest[digits..];
        if !rest.starts_with('[') {
            if digits > 0 && k == 0 {
                out.push(None);
                continue;
            }
            return Err(BurnsideError::Parse(format!("expected '[' in {s:?}")));
        }
        let close = rest
            .find(']')
            .ok_or_else(|| BurnsideError::Parse(format!("unclosed bracket in {s:?}")))?;
        let body = &rest[1..close];
        let (group, label) = body
            .split_once('/')
            .ok_or_else(|| BurnsideError::Parse(format!("expected G/H inside brackets in {s:?}")))?;
        if group.is_empty() || label.is_empty() {
            return Err(BurnsideError::Parse(format!("empty group or subgroup in {s:?}")));
        }
        out.push(Some((group.to_string(), label.to_string(), sign * k)));
        rest = &rest[close + 1..];
    }
    Ok(out)
}
