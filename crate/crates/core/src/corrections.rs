//! Errata overlay: a line-oriented text file of `key = value` fields
//! separated by `;`. Blank lines and `#` comments are ignored.
//!
//! ```text
//! kind = bracket ; algebra = g2 ; lhs = x1, x2 ; printed = 2*x3 ; corrected = -2*x3 ; note = ...
//! kind = claim ; id = f4.chain.x3.u6 ; printed = -u9 ; derived = u9 ; note = ...
//! ```

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// The overlay shipped with the library.
pub const DEFAULT_OVERLAY: &str = include_str!("../data/corrections.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketCorrection {
    pub algebra: String,
    pub lhs: (String, String),
    pub printed: String,
    pub corrected: String,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCorrection {
    pub id: String,
    pub printed: String,
    pub derived: String,
    pub note: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corrections {
    pub brackets: Vec<BracketCorrection>,
    pub claims: Vec<ClaimCorrection>,
}

fn fields(line: &str, lineno: usize) -> Result<BTreeMap<String, String>, AlgebraError> {
    let mut map = BTreeMap::new();
    for part in line.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| AlgebraError::Corrections(alloc::format!("line {lineno}: `{part}` is not key = value")))?;
        let k = k.trim().to_string();
        if map.insert(k.clone(), v.trim().to_string()).is_some() {
            return Err(AlgebraError::Corrections(alloc::format!("line {lineno}: duplicate key `{k}`")));
        }
    }
    Ok(map)
}

fn take(map: &mut BTreeMap<String, String>, key: &str, lineno: usize) -> Result<String, AlgebraError> {
    map.remove(key)
        .filter(|v| !v.is_empty())
        .ok_or_else(|| AlgebraError::Corrections(alloc::format!("line {lineno}: missing `{key}`")))
}

impl Corrections {
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let mut out = Corrections::default();
        for (n, raw) in text.lines().enumerate() {
            let lineno = n + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut map = fields(line, lineno)?;
            let kind = take(&mut map, "kind", lineno)?;
            match kind.as_str() {
                "bracket" => {
                    let lhs = take(&mut map, "lhs", lineno)?;
                    let (a, b) = lhs.split_once(',').ok_or_else(|| {
                        AlgebraError::Corrections(alloc::format!("line {lineno}: lhs must be `a, b`"))
                    })?;
                    out.brackets.push(BracketCorrection {
                        algebra: take(&mut map, "algebra", lineno)?,
                        lhs: (a.trim().to_string(), b.trim().to_string()),
                        printed: take(&mut map, "printed", lineno)?,
                        corrected: take(&mut map, "corrected", lineno)?,
                        note: map.remove("note").unwrap_or_default(),
                    });
                }
                "claim" => out.claims.push(ClaimCorrection {
                    id: take(&mut map, "id", lineno)?,
                    printed: take(&mut map, "printed", lineno)?,
                    derived: take(&mut map, "derived", lineno)?,
                    note: map.remove("note").unwrap_or_default(),
                }),
                other => {
                    return Err(AlgebraError::Corrections(alloc::format!("line {lineno}: unknown kind `{other}`")))
                }
            }
            if let Some(k) = map.keys().next() {
                return Err(AlgebraError::Corrections(alloc::format!("line {lineno}: unknown key `{k}`")));
            }
        }
        Ok(out)
    }

    pub fn builtin() -> Self {
        Self::parse(DEFAULT_OVERLAY).expect("embedded overlay parses")
    }

    pub fn brackets_for<'a>(&'a self, algebra: &'a str) -> impl Iterator<Item = &'a BracketCorrection> + 'a {
        self.brackets.iter().filter(move |b| b.algebra == algebra)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimCorrection> {
        self.claims.iter().find(|c| c.id == id)
    }
}
