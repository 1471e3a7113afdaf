//! Text grammar for groups, cocharacters and Newton points.
//!
//! ```text
//! group   := factor ("x" factor)*
//! factor  := "gl(" n ")" | "res(" d "," "gl(" n "))"
//! cochar  := copies ("|" copies)*        copies := ints (";" ints)*
//! newton  := rats ("|" rats)*            rats   := rat ("," rat)*
//! ```

use adlv_core::group::{Factor, GroupDatum, SigmaInvariants, Q};
use adlv_core::orbits::CocharTuple;
use adlv_core::rational::parse_q;

use crate::CliError;

fn bad(what: &str, input: &str) -> CliError {
    CliError::Validation(format!("cannot parse {what} from {input:?}"))
}

pub fn ints(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| bad("integer list", s)))
        .collect()
}

pub fn rationals(s: &str) -> Result<Vec<Q>, CliError> {
    s.split(',')
        .map(|x| parse_q(x).ok_or_else(|| bad("rational list", s)))
        .collect()
}

fn parse_factor(s: &str) -> Option<Factor> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.to_ascii_lowercase();
    if let Some(inner) = s.strip_prefix("res(").and_then(|r| r.strip_suffix(')')) {
        let (d, rest) = inner.split_once(',')?;
        let n = rest.strip_prefix("gl(")?.strip_suffix(')')?;
        return Some(Factor {
            n: n.parse().ok()?,
            d: d.parse().ok()?,
        });
    }
    let n = s.strip_prefix("gl(")?.strip_suffix(')')?;
    Some(Factor { n: n.parse().ok()?, d: 1 })
}

pub fn group(s: &str) -> Result<GroupDatum, CliError> {
    let factors = s
        .split('x')
        .map(|f| parse_factor(f).ok_or_else(|| bad("group", s)))
        .collect::<Result<Vec<_>, _>>()?;
    GroupDatum::new(factors).map_err(CliError::from)
}

/// Copies separated by `;`, factors by `|`.
pub fn cochar(s: &str) -> Result<CocharTuple, CliError> {
    let factors = s
        .split('|')
        .map(|f| f.split(';').map(ints).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CocharTuple(factors))
}

/// Rows of a type vector separated by `;`.
pub fn rows(s: &str) -> Result<Vec<Vec<i64>>, CliError> {
    s.split(';').map(ints).collect()
}

pub fn newton(s: &str) -> Result<Vec<Vec<Q>>, CliError> {
    s.split('|').map(rationals).collect()
}

/// Per-factor integers separated by `|` or `,`.
pub fn kappa(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(['|', ','])
        .map(|x| x.trim().parse::<i64>().map_err(|_| bad("kappa", s)))
        .collect()
}

pub fn invariants(newton_s: &str, kappa_s: Option<&str>) -> Result<SigmaInvariants, CliError> {
    let nu = newton(newton_s)?;
    let kappa = match kappa_s {
        Some(k) => kappa(k)?,
        None => nu
            .iter()
            .map(|v| {
                let total: Q = v.iter().sum();
                if total.is_integer() {
                    Ok(total.to_integer())
                } else {
                    Err(CliError::Validation(format!(
                        "Newton total {total} is not an integer"
                    )))
                }
            })
            .collect::<Result<_, _>>()?,
    };
    SigmaInvariants::new(nu, kappa).map_err(CliError::from)
}
