use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::AlgebraError;
use crate::field::Field;
use crate::liealg::StructureTable;
use crate::linalg::{nullspace, Echelon, SparseRow};
use crate::poisson::ad_apply;
use crate::poly::{Monomial, Polynomial};

/// All monomials of total degree `d` in `vars`.
pub fn monomials_of_degree(vars: &[usize], d: u32) -> Vec<Monomial> {
    fn rec(vars: &[usize], d: u32, acc: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        if d == 0 {
            out.push(Monomial::from_pairs(acc));
            return;
        }
        let Some((&v, rest)) = vars.split_first() else { return };
        for e in (0..=d).rev() {
            if e > 0 {
                acc.push((v, e));
            }
            rec(rest, d - e, acc, out);
            if e > 0 {
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, d, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    let mut r: usize = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Basis of the homogeneous degree-`d` polynomials in `vars` killed by
/// `ad x_i` for every `i` in `gens`, over the table's field.
///
/// When the table carries an integer weight grading the system splits into
/// independent weight blocks. `cap` bounds `#monomials * #gens`.
pub fn brute_force_invariant_space(
    t: &StructureTable,
    d: u32,
    vars: &[usize],
    gens: &[usize],
    cap: usize,
) -> Result<Vec<Polynomial>, AlgebraError> {
    let count = binomial(vars.len() + d as usize - 1, d as usize).max(1);
    let needed = count.saturating_mul(gens.len().max(1));
    if needed > cap {
        return Err(AlgebraError::CapExceeded { needed, cap });
    }
    let field = t.field();
    let monos = monomials_of_degree(vars, d);
    let mut blocks: BTreeMap<Vec<i64>, Vec<Monomial>> = BTreeMap::new();
    for m in monos {
        let key = match t.weights() {
            Some(w) => {
                let mut acc = alloc::vec![0i64; t.cartan().len()];
                for (v, e) in m.iter() {
                    for (a, b) in acc.iter_mut().zip(&w[v]) {
                        *a += b * e as i64;
                    }
                }
                acc
            }
            None => Vec::new(),
        };
        blocks.entry(key).or_default().push(m);
    }
    let mut basis = Vec::new();
    for monos in blocks.values() {
        // rows indexed by (generator, image monomial)
        let mut rows: BTreeMap<(usize, Monomial), SparseRow> = BTreeMap::new();
        for (k, m) in monos.iter().enumerate() {
            let single = Polynomial::term(field.one(), m.clone());
            for &g in gens {
                for (img, c) in ad_apply(t, g, &single)?.terms() {
                    rows.entry((g, img.clone())).or_default().push((k, c.clone()));
                }
            }
        }
        for v in nullspace(field, rows.into_values(), monos.len()) {
            basis.push(Polynomial::from_terms(field, v.into_iter().map(|(k, c)| (c, monos[k].clone()))));
        }
    }
    Ok(basis)
}

/// Outcome of comparing an oracle space with the span of generator products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedComparison {
    pub degree: u32,
    pub oracle_dim: usize,
    pub generated_dim: usize,
    /// A product outside the oracle space, or an oracle vector outside the
    /// generated span.
    pub witness: Option<Polynomial>,
}

impl GeneratedComparison {
    pub fn equal(&self) -> bool {
        self.witness.is_none() && self.oracle_dim == self.generated_dim
    }
}

fn products(gens: &[(String, Polynomial)], d: u32, field: Field) -> Vec<Polynomial> {
    fn rec(gens: &[(String, Polynomial)], start: usize, d: u32, cur: Polynomial, out: &mut Vec<Polynomial>) {
        if d == 0 {
            out.push(cur);
            return;
        }
        for (k, (_, g)) in gens.iter().enumerate().skip(start) {
            let gd = g.degree().unwrap_or(0);
            if gd == 0 || gd > d {
                continue;
            }
            rec(gens, k, d - gd, &cur * g, out);
        }
    }
    let mut out = Vec::new();
    rec(gens, 0, d, Polynomial::one(field), &mut out);
    out
}

/// Checks that degree-`d` products of the (homogeneous) generators span
/// exactly the oracle space.
pub fn compare_with_generated(
    oracle: &[Polynomial],
    generators: &[(String, Polynomial)],
    d: u32,
    field: Field,
) -> GeneratedComparison {
    let prods = products(generators, d, field);
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in oracle.iter().chain(&prods) {
        for (m, _) in p.terms() {
            let n = index.len();
            index.entry(m.clone()).or_insert(n);
        }
    }
    let row = |p: &Polynomial| -> SparseRow {
        let mut r: SparseRow = p.terms().map(|(m, c)| (index[m], c.clone())).collect();
        r.sort_by_key(|(k, _)| *k);
        r
    };
    let mut ora = Echelon::new();
    for p in oracle {
        ora.insert(row(p));
    }
    let mut gen = Echelon::new();
    let mut witness = None;
    for p in &prods {
        gen.insert(row(p));
        if witness.is_none() && !ora.contains(row(p)) {
            witness = Some(p.clone());
        }
    }
    if witness.is_none() {
        witness = oracle.iter().find(|p| !gen.contains(row(p))).cloned();
    }
    GeneratedComparison { degree: d, oracle_dim: ora.rank(), generated_dim: gen.rank(), witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cn_borel, g2_borel};
    use crate::corrections::Corrections;
    use crate::invariants::{build_cn_invariants, build_g2_invariants};
    use alloc::string::ToString;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(&[0, 1, 2], 2).len(), 6);
        assert_eq!(monomials_of_degree(&[0, 1], 0).len(), 1);
        assert_eq!(binomial(27, 4), 17550);
    }

    #[test]
    fn g2_char0_dimensions() {
        let t = g2_borel(&Corrections::builtin()).unwrap().table;
        let fam = build_g2_invariants(&t).unwrap();
        let gens: Vec<(String, Polynomial)> = fam.cs().into_iter().map(|(n, p)| (n.to_string(), p.clone())).collect();
        let mut dims = Vec::new();
        for d in 1..=6 {
            let basis = brute_force_invariant_space(&t, d, t.nil(), t.nil(), 1_000_000).unwrap();
            let cmp = compare_with_generated(&basis, &gens, d, Field::Rational);
            assert!(cmp.equal(), "degree {d}: {cmp:?}");
            dims.push(basis.len());
        }
        assert_eq!(dims, [1, 2, 2, 3, 3, 4]);
        let d1 = brute_force_invariant_space(&t, 1, t.nil(), t.nil(), 1_000_000).unwrap();
        assert_eq!(d1, alloc::vec![fam.c(1).clone()]);
    }

    #[test]
    fn cap_enforced() {
        let t = g2_borel(&Corrections::builtin()).unwrap().table;
        assert!(matches!(
            brute_force_invariant_space(&t, 6, t.nil(), t.nil(), 100),
            Err(AlgebraError::CapExceeded { .. })
        ));
    }

    #[test]
    fn mismatch_has_witness() {
        let t = cn_borel(2).unwrap().table;
        let (fam, _) = build_cn_invariants(&t, 2).unwrap();
        let basis = brute_force_invariant_space(&t, 2, t.nil(), t.nil(), 1_000_000).unwrap();
        assert_eq!(basis.len(), 2);
        let only_c1 = alloc::vec![("c1".to_string(), fam.c(1).clone())];
        let cmp = compare_with_generated(&basis, &only_c1, 2, Field::Rational);
        assert!(!cmp.equal());
        assert!(cmp.witness.is_some());
    }
}
