//! Reader for linear forms written in coefficient notation, e.g.
//! `-b^{(0,0,1)} + c^{(0,1,0)}` or `a^{(0,1,0)} σ_1 + b^{(1,0,0)} σ_2`,
//! where `a, b, c` name the `x, y, z` components of a field and
//! `(k1,k2,k3)` the monomial. Used to state reference equations verbatim.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};
use crate::poly::{Axis, CoefficientIndex, Monomial};

pub type LinearForm = BTreeMap<CoefficientIndex, Rational>;

fn malformed(text: &str, why: &str) -> Error {
    Error::MalformedPolynomial(format!("{why} in {text:?}"))
}

/// Parses a sum of terms `[±][integer] letter^{(k1,k2,k3)} [σ_j]`, with
/// `σ_j` replaced by `sigma[j-1]`. A trailing `= 0` is ignored.
pub fn parse_linear_form(text: &str, sigma: &[Rational; 3]) -> Result<LinearForm> {
    let body = text.split('=').next().unwrap_or("");
    let cleaned: String = body
        .replace('−', "-")
        .replace("\\sigma", "σ")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();

    let mut terms: Vec<String> = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in cleaned.chars() {
        match ch {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            '+' | '-' if depth == 0 && !current.is_empty() => {
                terms.push(std::mem::take(&mut current));
            }
            _ => {}
        }
        current.push(ch);
    }
    if !current.is_empty() {
        terms.push(current);
    }
    if terms.is_empty() {
        return Err(malformed(text, "empty form"));
    }

    let mut out = LinearForm::new();
    for term in terms {
        let (idx, value) = parse_term(&term, sigma).map_err(|why| malformed(text, &why))?;
        let slot = out.entry(idx).or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            out.remove(&idx);
        }
    }
    Ok(out)
}

fn parse_term(term: &str, sigma: &[Rational; 3]) -> std::result::Result<(CoefficientIndex, Rational), String> {
    let (sign, rest) = match term.strip_prefix('-') {
        Some(r) => (-Rational::one(), r),
        None => (Rational::one(), term.strip_prefix('+').unwrap_or(term)),
    };
    let letter_at = rest
        .find(['a', 'b', 'c'])
        .ok_or_else(|| format!("no coefficient letter in term {term:?}"))?;
    let scalar = if letter_at == 0 {
        Rational::one()
    } else {
        parse_rational(rest[..letter_at].trim_end_matches('*')).map_err(|e| e.to_string())?
    };
    let component = match &rest[letter_at..letter_at + 1] {
        "a" => Axis::X,
        "b" => Axis::Y,
        _ => Axis::Z,
    };
    let after = &rest[letter_at + 1..];
    let open = after.find('(').ok_or_else(|| format!("missing exponent in {term:?}"))?;
    let close = after.find(')').ok_or_else(|| format!("missing exponent in {term:?}"))?;
    let exps: Vec<u32> = after[open + 1..close]
        .split(',')
        .map(|s| s.parse::<u32>().map_err(|_| format!("bad exponent in {term:?}")))
        .collect::<std::result::Result<_, _>>()?;
    if exps.len() != 3 {
        return Err(format!("expected three exponents in {term:?}"));
    }
    let tail = after[close + 1..].trim_start_matches('}').trim_start_matches('*');
    let factor = if tail.is_empty() {
        Rational::one()
    } else {
        let j = tail
            .strip_prefix("σ_")
            .or_else(|| tail.strip_prefix('σ'))
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|j| (1..=3).contains(j))
            .ok_or_else(|| format!("unexpected trailing factor {tail:?}"))?;
        sigma[j - 1].clone()
    };
    let idx = CoefficientIndex::new(component, Monomial::new(exps[0], exps[1], exps[2]));
    Ok((idx, sign * scalar * factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn sig() -> [Rational; 3] {
        [int(2), int(3), int(-7)]
    }

    #[test]
    fn curl_row() {
        let f = parse_linear_form("-b^{(0,0,1)} + c^{(0,1,0)} = 0", &sig()).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[&CoefficientIndex::new(Axis::Y, Monomial::new(0, 0, 1))], int(-1));
        assert_eq!(f[&CoefficientIndex::new(Axis::Z, Monomial::new(0, 1, 0))], int(1));
    }

    #[test]
    fn integer_and_sigma_factors() {
        let f = parse_linear_form("2 c^{(0,2,0)}-b^{(0,1,1)}", &sig()).unwrap();
        assert_eq!(f[&CoefficientIndex::new(Axis::Z, Monomial::new(0, 2, 0))], int(2));
        let g = parse_linear_form("a^{(0,1,1)} \\sigma_1+b^{(1,0,1)} σ_2+c^{(1,1,0)} σ_3", &sig()).unwrap();
        assert_eq!(g[&CoefficientIndex::new(Axis::Z, Monomial::new(1, 1, 0))], int(-7));
        assert_eq!(g[&CoefficientIndex::new(Axis::X, Monomial::new(0, 1, 1))], int(2));
    }

    #[test]
    fn garbage_is_rejected() {
        assert!(parse_linear_form("x + y", &sig()).is_err());
        assert!(parse_linear_form("a^{(1,0)}", &sig()).is_err());
        assert!(parse_linear_form("a^{(1,0,0)} τ", &sig()).is_err());
    }
}
