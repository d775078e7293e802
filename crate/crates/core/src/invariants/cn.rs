use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{InvariantFamily, NamedElement};
use crate::catalog::Family;
use crate::error::AlgebraError;
use crate::field::Field;
use crate::liealg::{reflect, StructureTable};
use crate::poisson::is_invariant;
use crate::poly::{poly_det, Polynomial};
use crate::rational::Rational;

/// Scalars attached to the entries of the `2n x 2n` arrangement. The
/// printed rule admits more than one reading; only some give invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CnConvention {
    /// Every entry is the bare basis variable.
    Unit,
    /// Off-diagonal symmetric entries `e_{i,n+j} + e_{j,n+i}`, which occupy
    /// two mirrored positions, carry the factor 1/2.
    HalvedSymmetric,
    /// Entries for `e_{i,n+i}` carry the factor 2 (the rule read with `i = j`).
    DoubledDiagonal,
}

impl CnConvention {
    pub const CANDIDATES: [CnConvention; 3] =
        [CnConvention::Unit, CnConvention::HalvedSymmetric, CnConvention::DoubledDiagonal];

    pub fn name(self) -> &'static str {
        match self {
            CnConvention::Unit => "unit",
            CnConvention::HalvedSymmetric => "halved-symmetric",
            CnConvention::DoubledDiagonal => "doubled-diagonal",
        }
    }
}

/// The matrix `M` over `S(n)`: each entry is zero or a scalar times a
/// nilradical variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrixM {
    pub n: usize,
    /// `entries[r][c]`, 0-based.
    pub entries: Vec<Vec<Option<(usize, Rational)>>>,
}

impl BlockMatrixM {
    pub fn build(t: &StructureTable, n: usize, conv: CnConvention) -> Result<Self, AlgebraError> {
        let size = 2 * n;
        let mut entries = vec![vec![None; size]; size];
        let r = |s: usize| reflect(size, s);
        // 1-based setter
        let mut set = |row: usize, col: usize, v: usize, c: Rational| entries[row - 1][col - 1] = Some((v, c));
        for i in 1..=n {
            for j in i..=n {
                if i != j {
                    let u = t.index(&format!("u{i}_{j}"))?;
                    set(i, j, u, Rational::ONE);
                    set(r(j), r(i), u, Rational::ONE);
                }
                let (v, c) = if i == j {
                    let c = match conv {
                        CnConvention::DoubledDiagonal => Rational::from_int(2),
                        _ => Rational::ONE,
                    };
                    (t.index(&format!("t{i}"))?, c)
                } else {
                    let c = match conv {
                        CnConvention::HalvedSymmetric => Rational::new(1, 2),
                        _ => Rational::ONE,
                    };
                    (t.index(&format!("s{i}_{j}"))?, c)
                };
                set(i, r(j), v, c.clone());
                set(j, r(i), v, c);
            }
        }
        Ok(BlockMatrixM { n, entries })
    }

    pub fn size(&self) -> usize {
        2 * self.n
    }

    /// `m_{r(j), r(i)} = m_{i, j}` for all positions.
    pub fn is_antidiagonal_symmetric(&self) -> bool {
        let l = self.size();
        (1..=l)
            .all(|i| (1..=l).all(|j| self.entries[reflect(l, j) - 1][reflect(l, i) - 1] == self.entries[i - 1][j - 1]))
    }

    fn entry(&self, field: Field, row: usize, col: usize) -> Result<Polynomial, AlgebraError> {
        Ok(match &self.entries[row - 1][col - 1] {
            None => Polynomial::zero(field),
            Some((v, c)) => Polynomial::var(field, *v).scale(&field.rational(c)?),
        })
    }

    /// The `i`-th right upper block: rows `1..=i`, columns `r(i), ..., r(1)`.
    pub fn block(&self, i: usize, field: Field) -> Result<Vec<Vec<Polynomial>>, AlgebraError> {
        let l = self.size();
        (1..=i).map(|row| (1..=i).map(|k| self.entry(field, row, reflect(l, i + 1 - k))).collect()).collect()
    }

    pub fn block_det(&self, i: usize, field: Field) -> Result<Polynomial, AlgebraError> {
        Ok(poly_det(&self.block(i, field)?, field))
    }
}

fn family_for(t: &StructureTable, n: usize, conv: CnConvention) -> Result<InvariantFamily, AlgebraError> {
    let m = BlockMatrixM::build(t, n, conv)?;
    let mut elements = Vec::new();
    for i in 1..=n {
        let poly = m.block_det(i, t.field())?;
        elements.push(NamedElement { name: format!("c{i}"), definition: format!("det C{i} ({})", conv.name()), poly });
    }
    let t1 = t.index("t1")?;
    Ok(InvariantFamily {
        family: Family::Cn,
        algebra: t.name().to_string(),
        field: t.field(),
        registry: t.registry().clone(),
        elements,
        invariants: (1..=n).map(|i| format!("c{i}")).collect(),
        exempt: t1,
        cn: Some((conv, m)),
    })
}

/// Families for one convention, `None` when some `c_i` is not invariant.
pub fn cn_family_with(
    t: &StructureTable,
    n: usize,
    conv: CnConvention,
) -> Result<Option<InvariantFamily>, AlgebraError> {
    let fam = family_for(t, n, conv)?;
    for (_, c) in fam.cs() {
        if c.is_zero() || !is_invariant(t, c, t.nil())?.invariant() {
            return Ok(None);
        }
    }
    Ok(Some(fam))
}

/// `c_i = det C_i`, using the first candidate convention whose block
/// determinants are all invariant.
pub fn build_cn_invariants(t: &StructureTable, n: usize) -> Result<(InvariantFamily, BlockMatrixM), AlgebraError> {
    for conv in CnConvention::CANDIDATES {
        if let Some(fam) = cn_family_with(t, n, conv)? {
            let m = fam.cn.as_ref().expect("cn data").1.clone();
            return Ok((fam, m));
        }
    }
    Err(AlgebraError::InvariantConvention(format!(
        "no candidate scaling gives invariant block determinants for n = {n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::cn_borel;
    use crate::poisson::weight_of;

    #[test]
    fn c2_convention_selection() {
        let t = cn_borel(2).unwrap().table;
        assert!(cn_family_with(&t, 2, CnConvention::Unit).unwrap().is_none());
        let (fam, m) = build_cn_invariants(&t, 2).unwrap();
        assert_eq!(fam.cn.as_ref().unwrap().0, CnConvention::HalvedSymmetric);
        assert!(m.is_antidiagonal_symmetric());
        assert_eq!(fam.c(1), &Polynomial::var(Field::Rational, t.index("t1").unwrap()));
        // c2 is a multiple of 4bc - d^2 with b = t1, c = t2, d = s1_2
        let target = fam.eval("4*t1*t2 - s1_2^2").unwrap();
        assert!(fam.c(2).scalar_ratio(&target).is_some());
    }

    #[test]
    fn conventions_agree_up_to_scalars() {
        let t = cn_borel(2).unwrap().table;
        let a = cn_family_with(&t, 2, CnConvention::HalvedSymmetric).unwrap().unwrap();
        let b = cn_family_with(&t, 2, CnConvention::DoubledDiagonal).unwrap().unwrap();
        for i in 1..=2 {
            assert!(a.c(i).scalar_ratio(b.c(i)).is_some());
            assert_eq!(
                weight_of(&t, a.c(i)).unwrap().vector().is_some(),
                weight_of(&t, b.c(i)).unwrap().vector().is_some()
            );
        }
    }

    #[test]
    fn degrees_n3_n4() {
        for n in [3, 4] {
            let t = cn_borel(n).unwrap().table;
            let (fam, _) = build_cn_invariants(&t, n).unwrap();
            for i in 1..=n {
                assert_eq!(fam.c(i).degree(), Some(i as u32));
                assert!(fam.c(i).is_homogeneous());
            }
        }
    }
}
