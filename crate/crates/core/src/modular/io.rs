//! JSON text format:
//! `{"ring": <ring object or path>, "conductor": n, "twists": [...],
//! "S": [[[c_0, ..., c_{φ(n)-1}], ...], ...]}` with each coefficient a
//! rational string `"p"` or `"p/q"`.

use std::fmt::Write;
use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{ModularData, ModularError};
use crate::cyclotomic::{euler_phi, Cyclotomic};
use crate::ring::{self, ParseError, RingFile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingRef {
    Inline(RingFile),
    Path(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModularFile {
    pub ring: RingRef,
    pub conductor: u64,
    pub twists: Vec<i64>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Error)]
pub enum ModularParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("ring: {0}")]
    Ring(#[from] ParseError),
    #[error("cannot read ring file {path}: {source}")]
    RingFile { path: String, source: std::io::Error },
    #[error("S entry ({x},{y}) has {len} coefficients, expected {expected}")]
    CoefficientCount { x: usize, y: usize, len: usize, expected: usize },
    #[error("S entry ({x},{y}) coefficient {index}: not a rational: {text:?}")]
    Rational { x: usize, y: usize, index: usize, text: String },
    #[error(transparent)]
    Shape(#[from] ModularError),
}

pub fn parse_modular(text: &str) -> Result<ModularData, ModularParseError> {
    parse_modular_with_base(text, None)
}

/// Ring references given as paths are resolved against `base`.
pub fn parse_modular_with_base(text: &str, base: Option<&Path>) -> Result<ModularData, ModularParseError> {
    let file: ModularFile = serde_json::from_str(text)?;
    let ring = match file.ring {
        RingRef::Inline(r) => r.into_ring()?,
        RingRef::Path(p) => {
            let path = base.map(|b| b.join(&p)).unwrap_or_else(|| p.clone().into());
            let text = std::fs::read_to_string(&path)
                .map_err(|source| ModularParseError::RingFile { path: path.display().to_string(), source })?;
            ring::parse_ring(&text)?
        }
    };
    if file.conductor == 0 {
        return Err(ModularError::ZeroConductor.into());
    }
    let phi = euler_phi(file.conductor);
    let mut s = Vec::with_capacity(file.s.len());
    for (x, row) in file.s.into_iter().enumerate() {
        let mut out_row = Vec::with_capacity(row.len());
        for (y, entry) in row.into_iter().enumerate() {
            if entry.len() != phi {
                return Err(ModularParseError::CoefficientCount { x, y, len: entry.len(), expected: phi });
            }
            let coeffs = entry
                .into_iter()
                .enumerate()
                .map(|(index, text)| {
                    text.trim().parse::<BigRational>().map_err(|_| ModularParseError::Rational { x, y, index, text })
                })
                .collect::<Result<Vec<_>, _>>()?;
            out_row.push(Cyclotomic::from_coeffs(file.conductor, coeffs).expect("length checked"));
        }
        s.push(out_row);
    }
    Ok(ModularData::new(ring, file.conductor, file.twists, s)?)
}

/// Canonical rendering with the ring inlined; one S-row per line.
pub fn modular_to_json(md: &ModularData) -> String {
    let md = md.with_common_conductor();
    let mut out = String::new();
    out.push_str("{\n  \"ring\": ");
    ring::write_ring_object(&mut out, md.ring(), "  ");
    out.push_str(",\n");
    let _ = writeln!(out, "  \"conductor\": {},", md.conductor());
    let twists: Vec<String> = md.twist_exponents().iter().map(|t| t.to_string()).collect();
    let _ = writeln!(out, "  \"twists\": [{}],", twists.join(", "));
    out.push_str("  \"S\": [\n");
    let rows = md.s_matrix();
    for (x, row) in rows.iter().enumerate() {
        let entries: Vec<String> = row
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.coeffs().iter().map(|q| format!("\"{q}\"")).collect();
                format!("[{}]", parts.join(", "))
            })
            .collect();
        let sep = if x + 1 == rows.len() { "" } else { "," };
        let _ = writeln!(out, "    [{}]{sep}", entries.join(", "));
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip_is_bit_exact() {
        for md in [catalog::pointed_modular(5), catalog::ising_modular(), catalog::z3_all_ones()] {
            let text = modular_to_json(&md);
            let back = parse_modular(&text).unwrap();
            assert_eq!(back, md);
            assert_eq!(modular_to_json(&back), text);
        }
    }

    #[test]
    fn rejects_bad_coefficients() {
        let text = modular_to_json(&catalog::pointed_modular(3)).replacen("\"0\"", "\"x/0\"", 1);
        assert!(matches!(parse_modular(&text), Err(ModularParseError::Rational { .. })));
    }
}
