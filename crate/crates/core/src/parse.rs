//! Text grammar for ideals, shared by the CLI and test fixtures.
//!
//! Variables are `x1`..`xN`; a monomial is `x<i>` or `x<i>^<e>` joined by
//! `*`; an ideal is a comma-separated list of monomials. Whitespace is
//! ignored. The literal `1` denotes the unit monomial and the literal `0`
//! the zero ideal (empty generator set).

use thiserror::Error;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty ideal expression")]
    Empty,
    #[error("empty monomial factor in {0:?}")]
    EmptyFactor(String),
    #[error("malformed factor {0:?}: expected x<i> or x<i>^<e> or 1")]
    BadFactor(String),
    #[error("variable index must be at least 1 in {0:?}")]
    ZeroIndex(String),
    #[error("variable x{index} exceeds ambient variable count {nvars}")]
    TooManyVars { index: usize, nvars: usize },
}

/// A parsed ideal whose ambient variable count is not yet fixed.
#[derive(Debug, Clone, Default)]
pub struct ParsedIdeal {
    /// Each monomial as (1-based variable index, exponent) pairs.
    terms: Vec<Vec<(usize, u32)>>,
    max_var: usize,
}

impl ParsedIdeal {
    /// Largest variable index mentioned (1-based); 0 when none.
    pub fn max_var(&self) -> usize {
        self.max_var
    }

    /// Realize in `K[x1..x_nvars]`.
    pub fn with_vars(&self, nvars: usize) -> Result<MonomialIdeal, ParseError> {
        let mut gens = Vec::with_capacity(self.terms.len());
        for term in &self.terms {
            let mut exps = vec![0u32; nvars];
            for &(idx, e) in term {
                if idx > nvars {
                    return Err(ParseError::TooManyVars { index: idx, nvars });
                }
                exps[idx - 1] += e;
            }
            gens.push(Monomial::new(exps));
        }
        Ok(MonomialIdeal::new(nvars, gens))
    }
}

fn parse_factor(raw: &str, mono: &str) -> Result<Option<(usize, u32)>, ParseError> {
    if raw.is_empty() {
        return Err(ParseError::EmptyFactor(mono.to_string()));
    }
    if raw == "1" {
        return Ok(None);
    }
    let rest = raw
        .strip_prefix('x')
        .ok_or_else(|| ParseError::BadFactor(raw.to_string()))?;
    let (idx_str, exp) = match rest.split_once('^') {
        Some((i, e)) => {
            let exp: u32 = e
                .parse()
                .map_err(|_| ParseError::BadFactor(raw.to_string()))?;
            (i, exp)
        }
        None => (rest, 1),
    };
    let idx: usize = idx_str
        .parse()
        .map_err(|_| ParseError::BadFactor(raw.to_string()))?;
    if idx == 0 {
        return Err(ParseError::ZeroIndex(raw.to_string()));
    }
    Ok(Some((idx, exp)))
}

/// Parse an ideal expression, leaving the ambient variable count open.
pub fn parse_ideal(input: &str) -> Result<ParsedIdeal, ParseError> {
    let squeezed: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if squeezed.is_empty() {
        return Err(ParseError::Empty);
    }
    if squeezed == "0" {
        return Ok(ParsedIdeal::default());
    }
    let mut parsed = ParsedIdeal::default();
    for mono in squeezed.split(',') {
        if mono.is_empty() {
            return Err(ParseError::EmptyFactor(input.to_string()));
        }
        let mut term = Vec::new();
        for factor in mono.split('*') {
            if let Some((idx, exp)) = parse_factor(factor, mono)? {
                parsed.max_var = parsed.max_var.max(idx);
                if exp > 0 {
                    term.push((idx, exp));
                }
            }
        }
        parsed.terms.push(term);
    }
    Ok(parsed)
}

/// Parse an ideal in a fixed ambient ring.
pub fn parse_ideal_str(input: &str, nvars: usize) -> Result<MonomialIdeal, ParseError> {
    parse_ideal(input)?.with_vars(nvars)
}

/// Parse several ideal expressions into a common ambient ring inferred from
/// the largest variable index mentioned anywhere (at least 1).
pub fn parse_ideals(inputs: &[&str]) -> Result<Vec<MonomialIdeal>, ParseError> {
    let parsed: Vec<ParsedIdeal> = inputs
        .iter()
        .map(|s| parse_ideal(s))
        .collect::<Result<_, _>>()?;
    let nvars = parsed.iter().map(|p| p.max_var()).max().unwrap_or(0).max(1);
    parsed.iter().map(|p| p.with_vars(nvars)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_example() {
        let i = parse_ideal_str("x1^2*x2, x1*x2*x3, x2*x3*x4, x3*x4^2", 4).unwrap();
        assert_eq!(i.num_gens(), 4);
        assert_eq!(i.to_string(), "x1^2*x2, x1*x2*x3, x2*x3*x4, x3*x4^2");
    }

    #[test]
    fn whitespace_ignored() {
        let a = parse_ideal_str(" x1 ^ 2 * x2 , x3 ", 3).unwrap();
        let b = parse_ideal_str("x1^2*x2,x3", 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unit_and_zero() {
        assert!(parse_ideal_str("1", 2).unwrap().is_unit());
        assert!(parse_ideal_str("0", 2).unwrap().is_zero());
        // 1 as a factor is the empty exponent contribution
        let i = parse_ideal_str("1*x2", 2).unwrap();
        assert_eq!(i.to_string(), "x2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ideal_str("", 2).is_err());
        assert!(parse_ideal_str("y1", 2).is_err());
        assert!(parse_ideal_str("x0", 2).is_err());
        assert!(parse_ideal_str("x1^", 2).is_err());
        assert!(parse_ideal_str("x1,,x2", 2).is_err());
        assert!(parse_ideal_str("x5", 2).is_err());
    }

    #[test]
    fn common_ambient_inference() {
        let ideals = parse_ideals(&["x1", "x3*x2"]).unwrap();
        assert_eq!(ideals[0].nvars(), 3);
        assert_eq!(ideals[1].nvars(), 3);
    }

    #[test]
    fn display_round_trip() {
        let src = "x1^3, x2*x4^2";
        let i = parse_ideal_str(src, 4).unwrap();
        let again = parse_ideal_str(&i.to_string(), 4).unwrap();
        assert_eq!(i, again);
    }
}
