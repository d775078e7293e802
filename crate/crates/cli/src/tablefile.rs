//! JSON algebra tables: labels, Cartan part, excluded primes and brackets
//! with exact rational coefficients written as strings.

use std::collections::BTreeMap;

use lieinv_core::catalog::Family;
use lieinv_core::liealg::RationalRow;
use lieinv_core::{AlgebraError, Rational, StructureTable};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub name: String,
    /// Primes for which the table has no meaning (denominators, or 2 and 3).
    #[serde(default)]
    pub excluded_primes: Vec<u32>,
    pub basis: Vec<String>,
    #[serde(default)]
    pub cartan: Vec<String>,
    /// Built-in invariant family to check against this table.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub lhs: String,
    pub rhs: String,
    /// `[coefficient, label]` pairs.
    pub value: Vec<(String, String)>,
}

impl TableFile {
    pub fn from_table(t: &StructureTable, family: Option<Family>) -> TableFile {
        let brackets = t
            .entries()
            .map(|(i, j, row)| BracketEntry {
                lhs: t.label(i).to_string(),
                rhs: t.label(j).to_string(),
                value: row.iter().map(|(k, c)| (c.to_string(), t.label(*k).to_string())).collect(),
            })
            .collect();
        TableFile {
            name: t.name().to_string(),
            excluded_primes: t.excluded_primes().to_vec(),
            basis: t.registry().names().to_vec(),
            cartan: t.cartan().iter().map(|&i| t.label(i).to_string()).collect(),
            family,
            brackets,
        }
    }

    pub fn to_table(&self) -> Result<StructureTable, AlgebraError> {
        let index: BTreeMap<&str, usize> = self.basis.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let find = |l: &str| index.get(l).copied().ok_or_else(|| AlgebraError::UnknownVariable(l.to_string()));
        let cartan = self.cartan.iter().map(|l| find(l)).collect::<Result<Vec<_>, _>>()?;
        let mut entries = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let mut row = RationalRow::new();
            for (c, l) in &b.value {
                let c: Rational = c
                    .parse()
                    .map_err(|_| AlgebraError::Parse(format!("bad coefficient `{c}` in [{}, {}]", b.lhs, b.rhs)))?;
                row.push((find(l)?, c));
            }
            entries.push((find(&b.lhs)?, find(&b.rhs)?, row));
        }
        StructureTable::new(&self.name, &self.basis, &cartan, entries, &self.excluded_primes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieinv_core::catalog::g2_borel;
    use lieinv_core::corrections::Corrections;

    #[test]
    fn roundtrip_g2() {
        let t = g2_borel(&Corrections::builtin()).unwrap().table;
        let f = TableFile::from_table(&t, Some(Family::G2));
        let json = serde_json::to_string(&f).unwrap();
        let back: TableFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        let t2 = back.to_table().unwrap();
        assert_eq!(t2.entries().count(), t.entries().count());
        for (a, b) in t.entries().zip(t2.entries()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn unknown_label_rejected() {
        let f = TableFile {
            name: "bad".into(),
            excluded_primes: vec![],
            basis: vec!["a".into(), "b".into()],
            cartan: vec![],
            family: None,
            brackets: vec![BracketEntry { lhs: "a".into(), rhs: "b".into(), value: vec![("1".into(), "c".into())] }],
        };
        assert!(f.to_table().is_err());
    }
}
