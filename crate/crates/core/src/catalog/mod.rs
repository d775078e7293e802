//! Built-in algebras: the G2 and F4 Borel subalgebras from their printed
//! bracket tables, and the C_n Borel subalgebra from matrices.

mod f4_data;
mod g2_data;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::corrections::{BracketCorrection, Corrections};
use crate::error::AlgebraError;
use crate::field::Field;
use crate::liealg::{build_cn_borel, Level, MatrixRealization, RationalRow, StructureTable};
use crate::poly::{Polynomial, VarRegistry};
use crate::rational::Rational;

pub(crate) type PrintedEntry = (&'static str, &'static str, i64, i64, &'static str);

/// Identifies one of the built-in algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    G2,
    F4,
    Cn,
}

impl Family {
    pub fn key(self) -> &'static str {
        match self {
            Family::G2 => "g2",
            Family::F4 => "f4",
            Family::Cn => "cn",
        }
    }
}

/// A pair whose two printed cells disagree with antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptionConflict {
    pub lhs: (String, String),
    pub upper: RationalRow,
    pub lower: RationalRow,
}

/// A built-in algebra plus what happened while building it.
#[derive(Debug, Clone)]
pub struct CatalogAlgebra {
    pub family: Family,
    pub table: StructureTable,
    pub conflicts: Vec<TranscriptionConflict>,
    pub applied: Vec<BracketCorrection>,
    pub realization: Option<MatrixRealization>,
}

impl CatalogAlgebra {
    /// The Borel table or its nilradical, over `field`.
    pub fn at(&self, level: Level, field: Field) -> Result<StructureTable, AlgebraError> {
        let t = self.table.over(field)?;
        Ok(match level {
            Level::Borel => t,
            Level::Nilradical => restrict_to_nil(&t)?,
        })
    }
}

fn labels(cartan: usize, nil: usize) -> Vec<String> {
    (1..=cartan).map(|i| format!("h{i}")).chain((1..=nil).map(|i| format!("x{i}"))).collect()
}

fn build_printed(
    family: Family,
    name: &str,
    rank: usize,
    nil: usize,
    printed: &[PrintedEntry],
    excluded: &[u32],
    overlay: &Corrections,
) -> Result<CatalogAlgebra, AlgebraError> {
    let names = labels(rank, nil);
    let reg = VarRegistry::new(&names)?;
    let dim = names.len();
    let mut cells: BTreeMap<(usize, usize), RationalRow> = BTreeMap::new();
    for &(row, col, num, den, target) in printed {
        let key = (reg.require(row)?, reg.require(col)?);
        let t = reg.require(target)?;
        let cell = cells.entry(key).or_default();
        cell.push((t, Rational::new(num, den)));
        cell.sort_by_key(|(k, _)| *k);
    }
    // A cell counts as printed when its row and column labels both occur in
    // the table (F4 prints no Cartan columns).
    let rows: Vec<usize> = cells.keys().map(|k| k.0).collect();
    let cols: Vec<usize> = cells.keys().map(|k| k.1).collect();
    let covered = |i: usize, j: usize| rows.contains(&i) && cols.contains(&j);
    let mut conflicts = Vec::new();
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let upper = cells.get(&(i, j)).cloned().unwrap_or_default();
            let lower = cells.get(&(j, i)).cloned().unwrap_or_default();
            let neg_lower: RationalRow = lower.iter().map(|(k, c)| (*k, -c)).collect();
            if covered(i, j) && covered(j, i) && upper != neg_lower {
                conflicts.push(TranscriptionConflict {
                    lhs: (names[i].clone(), names[j].clone()),
                    upper: upper.clone(),
                    lower,
                });
            }
            let value = if upper.is_empty() { neg_lower } else { upper };
            if !value.is_empty() {
                entries.push((i, j, value));
            }
        }
    }
    let cartan: Vec<usize> = (0..rank).collect();
    let mut table = StructureTable::new(name, &names, &cartan, entries, excluded)?;
    let mut applied = Vec::new();
    for c in overlay.brackets_for(family.key()) {
        let i = reg.require(&c.lhs.0)?;
        let j = reg.require(&c.lhs.1)?;
        let value = parse_linear(&c.corrected, &reg)?;
        table = table.with_bracket(i, j, value)?;
        applied.push(c.clone());
    }
    Ok(CatalogAlgebra { family, table, conflicts, applied, realization: None })
}

/// Parses a linear combination of basis labels with rational coefficients.
pub fn parse_linear(s: &str, reg: &VarRegistry) -> Result<RationalRow, AlgebraError> {
    let p = Polynomial::parse(s, reg, Field::Rational)?;
    let mut row = RationalRow::new();
    for (m, c) in p.terms() {
        let v = match (m.degree(), m.max_var()) {
            (1, Some(v)) => v,
            _ => return Err(AlgebraError::NotLinear(String::from(s))),
        };
        row.push((v, c.as_rational().cloned().expect("rational")));
    }
    row.sort_by_key(|(k, _)| *k);
    Ok(row)
}

pub fn g2_borel(overlay: &Corrections) -> Result<CatalogAlgebra, AlgebraError> {
    build_printed(Family::G2, "G2 Borel", 2, 6, g2_data::G2_PRINTED, &[2, 3], overlay)
}

pub fn f4_borel(overlay: &Corrections) -> Result<CatalogAlgebra, AlgebraError> {
    build_printed(Family::F4, "F4 Borel", 4, 24, f4_data::F4_PRINTED, &[2], overlay)
}

pub fn cn_borel(n: usize) -> Result<CatalogAlgebra, AlgebraError> {
    let (table, real) = build_cn_borel(n)?;
    Ok(CatalogAlgebra {
        family: Family::Cn,
        table,
        conflicts: Vec::new(),
        applied: Vec::new(),
        realization: Some(real),
    })
}

/// The nilradical as a standalone algebra (Cartan elements dropped,
/// indices renumbered).
pub fn restrict_to_nil(t: &StructureTable) -> Result<StructureTable, AlgebraError> {
    let nil = t.nil();
    let pos: BTreeMap<usize, usize> = nil.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    let names: Vec<&str> = nil.iter().map(|&i| t.label(i)).collect();
    let mut entries = Vec::new();
    for (a, &i) in nil.iter().enumerate() {
        for (b, &j) in nil.iter().enumerate().skip(a + 1) {
            let row = t.rational_row(i, j);
            let mut out = RationalRow::new();
            for (k, c) in row {
                let Some(&kk) = pos.get(k) else {
                    return Err(AlgebraError::CommutatorNotInSpan(format!(
                        "[{}, {}] leaves the nilradical",
                        t.label(i),
                        t.label(j)
                    )));
                };
                out.push((kk, c.clone()));
            }
            if !out.is_empty() {
                entries.push((a, b, out));
            }
        }
    }
    let name = format!("{} nilradical", t.name().trim_end_matches(" Borel"));
    StructureTable::new(&name, &names, &[], entries, t.excluded_primes())?.over(t.field())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn g2_shape_and_entries() {
        let g = g2_borel(&Corrections::builtin()).unwrap();
        let t = &g.table;
        assert_eq!(t.dim(), 8);
        assert_eq!(t.nil().len(), 6);
        assert!(g.conflicts.is_empty());
        let (h1, x4) = (t.index("h1").unwrap(), t.index("x4").unwrap());
        assert_eq!(t.rational_row(h1, x4), &vec![(x4, q(2, 1))]);
        let diag: Vec<i64> = t.weights().unwrap().iter().map(|w| w[0]).collect();
        assert_eq!(diag, vec![0, 0, -1, 1, 0, 2, -1, 1]);
    }

    #[test]
    fn f4_shape_and_entries() {
        let f = f4_borel(&Corrections::builtin()).unwrap();
        let t = &f.table;
        assert_eq!(t.dim(), 28);
        assert!(f.conflicts.is_empty());
        let i = |s: &str| t.index(s).unwrap();
        assert_eq!(t.rational_row(i("x6"), i("x12")), &vec![(i("x17"), q(-1, 2))]);
        assert_eq!(t.rational_row(i("x23"), i("x1")), &vec![(i("x24"), q(-1, 1))]);
        assert!(t.weights().is_some());
    }

    #[test]
    fn excluded_primes() {
        let g = g2_borel(&Corrections::builtin()).unwrap();
        assert!(matches!(g.table.over(Field::Prime(3)), Err(AlgebraError::ExcludedPrime { p: 3, .. })));
        assert!(g.table.over(Field::Prime(5)).is_ok());
        let f = f4_borel(&Corrections::builtin()).unwrap();
        assert!(f.table.over(Field::Prime(3)).is_ok());
        assert!(Field::prime(2).is_err());
    }

    #[test]
    fn nilradical_restriction() {
        let g = g2_borel(&Corrections::builtin()).unwrap();
        let n = g.at(Level::Nilradical, Field::Rational).unwrap();
        assert_eq!(n.dim(), 6);
        assert!(n.cartan().is_empty());
        assert!(n.jacobi_check().passed());
    }

    #[test]
    fn bracket_overlay_applies() {
        let o = Corrections::parse("kind = bracket ; algebra = g2 ; lhs = x1, x2 ; printed = 2*x3 ; corrected = 5*x3")
            .unwrap();
        let g = g2_borel(&o).unwrap();
        let t = &g.table;
        let i = |s: &str| t.index(s).unwrap();
        assert_eq!(t.rational_row(i("x2"), i("x1")), &vec![(i("x3"), q(-5, 1))]);
        assert_eq!(g.applied.len(), 1);
    }

    #[test]
    fn single_flips_and_jacobi() {
        let g = g2_borel(&Corrections::builtin()).unwrap();
        let t = &g.table;
        let i = |s: &str| t.index(s).unwrap();
        let flip = |a: usize, b: usize| {
            let neg = t.rational_row(a, b).iter().map(|(k, c)| (*k, -c)).collect();
            t.with_bracket(a, b, neg).unwrap()
        };
        // Negating x3, x5, x6 absorbs this flip, so Jacobi cannot see it.
        assert!(flip(i("x1"), i("x2")).jacobi_check().passed());
        let r = flip(i("x1"), i("x3")).jacobi_check();
        assert!(!r.passed());
        assert!(!r.failures[0].residual.is_zero());
    }

    #[test]
    fn linear_parse_rejects_products() {
        let reg = VarRegistry::new(&["a", "b"]).unwrap();
        assert!(parse_linear("a*b", &reg).is_err());
        assert_eq!(parse_linear("1/2*a - b", &reg).unwrap(), vec![(0, q(1, 2)), (1, q(-1, 1))]);
    }
}
