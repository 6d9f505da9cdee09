use clifford_quartic::repkit::{rep_build, rep_from_json, rep_from_text};
use clifford_quartic::{CliffordRep, Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;

use crate::args::{ModeArgs, RepSource};
use clifford_quartic::symlie::Mode;

/// Reads the rep from a file, or builds it from `--p --q --mult`.
/// JSON files may be bare rep files or the `result` of `rep build`.
pub fn load_rep(src: &RepSource) -> Result<CliffordRep> {
    let Some(path) = &src.rep else {
        return match (src.p, src.q, &src.mults) {
            (Some(p), Some(q), Some(mults)) => rep_build(p, q, mults),
            _ => Err(Error::invalid("give a rep file or all of --p, --q and --mult")),
        };
    };
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(&text)?;
        let inner = match value.get("result") {
            Some(r) if r.get("basis").is_some() => r.clone(),
            _ => value,
        };
        return rep_from_json(&inner.to_string());
    }
    match (src.p, src.q, &src.mults) {
        (Some(p), Some(q), Some(mults)) => rep_from_text(&text, p, q, mults.clone()),
        _ => Err(Error::invalid("the plain-text rep format needs --p, --q and --mult")),
    }
}

pub fn mode(m: ModeArgs) -> Mode {
    if m.float {
        Mode::Float
    } else {
        Mode::Exact
    }
}

pub fn parse_ints(items: &[String]) -> Result<Vec<BigInt>> {
    items
        .iter()
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        })
        .collect()
}

/// Parses `a`, `bi`, `a+bi` or `a-bi` (exponents like `1e-3` allowed).
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || Error::Parse(format!("not a complex number: {text:?}"));
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let num = |x: &str| x.parse::<f64>().map_err(|_| bad());
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(num(&t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |x: &str| match x {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => num(x),
    };
    match split {
        Some(k) => Ok(Complex64::new(num(&body[..k])?, imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}
