//! Plain-text polynomials: `x1*y2 - x2*y1`, `3*x1^2 + 5`.
//!
//! Terms print in the polynomial's order. A coefficient `c` prints as its
//! representative in `1..p`, except that `p - 1` prints as a minus sign.

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;
use crate::AlgebraError;

fn format_monomial(ring: &Ring, m: Monomial) -> String {
    let mut parts = Vec::new();
    for (k, name) in ring.names().iter().enumerate() {
        match m.exponent(k) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

pub(crate) fn format_terms(ring: &Ring, terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let p = ring.characteristic();
    let mut s = String::new();
    for (idx, &(m, c)) in terms.iter().enumerate() {
        let (neg, c) = if c == p - 1 { (true, 1) } else { (false, c) };
        match (idx, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let mono = format_monomial(ring, m);
        match (c, mono.is_empty()) {
            (1, true) => s.push('1'),
            (1, false) => s.push_str(&mono),
            (_, true) => s.push_str(&c.to_string()),
            (_, false) => s.push_str(&format!("{c}*{mono}")),
        }
    }
    s
}

fn parse_err(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse(msg.into())
}

fn parse_term(ring: &Ring, text: &str, negative: bool) -> Result<Term, AlgebraError> {
    let f = ring.field();
    let mut coef = f.from_i64(if negative { -1 } else { 1 });
    let mut exps = vec![0u32; ring.nvars()];
    for factor in text.split('*').map(str::trim) {
        if factor.is_empty() {
            return Err(parse_err(format!("empty factor in {text:?}")));
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            let v: u64 = factor
                .parse()
                .map_err(|e| parse_err(format!("bad integer {factor:?}: {e}")))?;
            coef = f.mul(coef, (v % f.characteristic() as u64) as u32);
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|err| parse_err(format!("bad exponent in {factor:?}: {err}")))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let k = ring
            .var_index(name)
            .ok_or_else(|| parse_err(format!("unknown variable {name:?}")))?;
        exps[k] += exp;
    }
    let m = Monomial::from_exponents(&exps)
        .ok_or_else(|| parse_err(format!("exponent too large in {text:?}")))?;
    Ok((m, coef))
}

impl Polynomial {
    /// Parses a sum of terms; the result is sorted in degrevlex.
    pub fn parse(ring: &Ring, text: &str) -> Result<Polynomial, AlgebraError> {
        let mut terms = Vec::new();
        let mut negative = false;
        let mut current = String::new();
        let mut flush = |cur: &mut String, neg: bool| -> Result<(), AlgebraError> {
            let t = cur.trim();
            if !t.is_empty() {
                terms.push(parse_term(ring, t, neg)?);
            }
            cur.clear();
            Ok(())
        };
        for ch in text.chars() {
            match ch {
                '+' | '-' => {
                    if !current.trim().is_empty() && current.trim_end().ends_with(['*', '^']) {
                        return Err(parse_err(format!(
                            "dangling operator before {ch:?} in {text:?}"
                        )));
                    }
                    let was_empty = current.trim().is_empty();
                    flush(&mut current, negative)?;
                    negative = if was_empty {
                        negative ^ (ch == '-')
                    } else {
                        ch == '-'
                    };
                }
                _ => current.push(ch),
            }
        }
        if current.trim().is_empty()
            && !text.trim().is_empty()
            && text.trim_end().ends_with(['+', '-'])
        {
            return Err(parse_err(format!("dangling sign in {text:?}")));
        }
        flush(&mut current, negative)?;
        if text.trim().is_empty() {
            return Err(parse_err("empty polynomial"));
        }
        Ok(Polynomial::from_terms(
            ring,
            MonomialOrder::DegRevLex,
            terms,
        ))
    }
}

/// One polynomial per comma-separated item, optionally wrapped in parentheses.
pub fn parse_list(ring: &Ring, text: &str) -> Result<Vec<Polynomial>, AlgebraError> {
    let t = text.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t);
    if t.trim().is_empty() {
        return Ok(vec![]);
    }
    t.split(',').map(|s| Polynomial::parse(ring, s)).collect()
}

pub fn format_list(polys: &[Polynomial]) -> String {
    let items: Vec<String> = polys.iter().map(ToString::to_string).collect();
    format!("({})", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Ring::binomial(3, 32003).unwrap();
        for s in ["x2*y1 - x1*y2", "x1^2*y3 + 5*x2 - 1", "0", "-x1", "7"] {
            let p = Polynomial::parse(&r, s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(Polynomial::parse(&r, &p.to_string()).unwrap(), p);
        }
        assert_eq!(
            Polynomial::parse(&r, "x1*y2 - x2*y1").unwrap().to_string(),
            "-x2*y1 + x1*y2"
        );
        assert_eq!(
            Polynomial::parse(&r, "2*3*x1 - - x1").unwrap().to_string(),
            "7*x1"
        );
        assert_eq!(
            Polynomial::parse(&r, "-2*x1").unwrap().to_string(),
            "32001*x1"
        );
    }

    #[test]
    fn rejects_garbage() {
        let r = Ring::binomial(2, 32003).unwrap();
        for s in ["", "x3", "x1*", "x1 +", "x1^x2", "z", "x1**y1"] {
            assert!(Polynomial::parse(&r, s).is_err(), "{s:?}");
        }
    }

    #[test]
    fn lists() {
        let r = Ring::binomial(2, 32003).unwrap();
        let l = parse_list(&r, "(x1*y2 - x2*y1, x1)").unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(format_list(&l), "(-x2*y1 + x1*y2, x1)");
        assert!(parse_list(&r, "()").unwrap().is_empty());
    }
}
