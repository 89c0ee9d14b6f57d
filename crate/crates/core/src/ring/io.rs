//! JSON text format:
//! `{"rank": r, "dual": [...], "coeffs": [[i,j,k,n], ...]}` with the
//! quadruples sorted lexicographically and `n >= 1`.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{FusionRing, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub rank: usize,
    pub dual: Vec<usize>,
    pub coeffs: Vec<[u64; 4]>,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("coefficient {0:?} does not fit the index or multiplicity range")]
    Overflow([u64; 4]),
}

impl RingFile {
    pub fn into_ring(self) -> Result<FusionRing, ParseError> {
        let mut entries = Vec::with_capacity(self.coeffs.len());
        for q in self.coeffs {
            let [i, j, k, n] = q;
            let conv = |v: u64| usize::try_from(v).map_err(|_| ParseError::Overflow(q));
            let n = u32::try_from(n).map_err(|_| ParseError::Overflow(q))?;
            entries.push((conv(i)?, conv(j)?, conv(k)?, n));
        }
        Ok(FusionRing::new(self.rank, self.dual, entries)?)
    }

    pub fn from_ring(ring: &FusionRing) -> Self {
        RingFile {
            rank: ring.rank(),
            dual: ring.duals().to_vec(),
            coeffs: ring.entries().iter().map(|e| [e.i as u64, e.j as u64, e.k as u64, e.n as u64]).collect(),
        }
    }
}

pub fn parse_ring(text: &str) -> Result<FusionRing, ParseError> {
    let file: RingFile = serde_json::from_str(text)?;
    file.into_ring()
}

/// Canonical rendering: one quadruple per line, trailing newline.
pub fn ring_to_json(ring: &FusionRing) -> String {
    let mut out = String::new();
    write_ring_object(&mut out, ring, "");
    out.push('\n');
    out
}

pub(crate) fn write_ring_object(out: &mut String, ring: &FusionRing, indent: &str) {
    let dual: Vec<String> = ring.duals().iter().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "{indent}  \"rank\": {},", ring.rank());
    let _ = writeln!(out, "{indent}  \"dual\": [{}],", dual.join(", "));
    let _ = writeln!(out, "{indent}  \"coeffs\": [");
    let n = ring.entries().len();
    for (idx, e) in ring.entries().iter().enumerate() {
        let sep = if idx + 1 == n { "" } else { "," };
        let _ = writeln!(out, "{indent}    [{}, {}, {}, {}]{sep}", e.i, e.j, e.k, e.n);
    }
    let _ = writeln!(out, "{indent}  ]");
    let _ = write!(out, "{indent}}}");
}
