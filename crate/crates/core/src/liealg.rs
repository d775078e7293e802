//! Lie algebras given by exact structure constants.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::field::{Coeff, Field};
use crate::linalg::{Matrix, SparseRow};
use crate::poly::{Monomial, Polynomial, VarRegistry};
use crate::rational::Rational;

/// A linear combination of basis elements with rational coefficients.
pub type RationalRow = Vec<(usize, Rational)>;

/// Which part of a Borel subalgebra an operation ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Nilradical,
    Borel,
}

/// A finite-dimensional Lie algebra over a field, defined over the
/// rationals and reduced modulo a prime on demand.
///
/// Basis order is the registry order; it doubles as the PBW order.
#[derive(Debug, Clone)]
pub struct StructureTable {
    name: String,
    registry: VarRegistry,
    field: Field,
    cartan: Vec<usize>,
    nil: Vec<usize>,
    excluded_primes: Vec<u32>,
    rational: Vec<RationalRow>,
    brackets: Vec<SparseRow>,
    weights: Option<Vec<Vec<i64>>>,
}

fn add_into(row: &mut RationalRow, k: usize, c: &Rational) {
    match row.binary_search_by_key(&k, |(i, _)| *i) {
        Ok(pos) => {
            let s = &row[pos].1 + c;
            if s.is_zero() {
                row.remove(pos);
            } else {
                row[pos].1 = s;
            }
        }
        Err(pos) => {
            if !c.is_zero() {
                row.insert(pos, (k, c.clone()));
            }
        }
    }
}

fn normalize_row(entries: &[(usize, Rational)]) -> RationalRow {
    let mut row = RationalRow::new();
    for (k, c) in entries {
        add_into(&mut row, *k, c);
    }
    row
}

fn neg_row(row: &RationalRow) -> RationalRow {
    row.iter().map(|(k, c)| (*k, -c)).collect()
}

impl StructureTable {
    /// Builds a table from bracket values `[x_i, x_j]` for `i != j`;
    /// antisymmetry fills the remaining entries. Giving both orientations is
    /// allowed only if they agree.
    pub fn new<S: AsRef<str>>(
        name: &str,
        labels: &[S],
        cartan: &[usize],
        entries: impl IntoIterator<Item = (usize, usize, RationalRow)>,
        excluded_primes: &[u32],
    ) -> Result<Self, AlgebraError> {
        let registry = VarRegistry::new(labels)?;
        let dim = registry.len();
        let mut rational = vec![RationalRow::new(); dim * dim];
        let mut seen = vec![false; dim * dim];
        for (i, j, row) in entries {
            for &x in [i, j].iter().chain(row.iter().map(|(k, _)| k)) {
                if x >= dim {
                    return Err(AlgebraError::IndexOutOfRange { index: x, dim });
                }
            }
            let row = normalize_row(&row);
            if i == j {
                if !row.is_empty() {
                    return Err(AlgebraError::Parse(alloc::format!("[{0}, {0}] must vanish", registry.name(i))));
                }
                continue;
            }
            let (a, b, r) = if i < j { (i, j, row) } else { (j, i, neg_row(&row)) };
            if seen[a * dim + b] && rational[a * dim + b] != r {
                return Err(AlgebraError::Parse(alloc::format!(
                    "conflicting values for [{}, {}]",
                    registry.name(a),
                    registry.name(b)
                )));
            }
            seen[a * dim + b] = true;
            rational[b * dim + a] = neg_row(&r);
            rational[a * dim + b] = r;
        }
        for &c in cartan {
            if c >= dim {
                return Err(AlgebraError::IndexOutOfRange { index: c, dim });
            }
        }
        let mut cartan = cartan.to_vec();
        cartan.sort_unstable();
        cartan.dedup();
        let nil = (0..dim).filter(|i| !cartan.contains(i)).collect();
        let mut t = StructureTable {
            name: name.to_string(),
            registry,
            field: Field::Rational,
            cartan,
            nil,
            excluded_primes: excluded_primes.to_vec(),
            brackets: Vec::new(),
            rational,
            weights: None,
        };
        t.brackets = t.reduce_brackets(Field::Rational)?;
        t.weights = t.compute_weights();
        Ok(t)
    }

    fn reduce_brackets(&self, field: Field) -> Result<Vec<SparseRow>, AlgebraError> {
        self.rational
            .iter()
            .map(|row| {
                let mut out = SparseRow::new();
                for (k, c) in row {
                    let v = field.rational(c)?;
                    if !v.is_zero() {
                        out.push((*k, v));
                    }
                }
                Ok(out)
            })
            .collect()
    }

    /// Integer Cartan eigenvalues of every basis element, when the Cartan
    /// part acts diagonally with integer eigenvalues and the bracket is
    /// additive in them (a genuine grading, valid in every characteristic).
    fn compute_weights(&self) -> Option<Vec<Vec<i64>>> {
        let dim = self.dim();
        let mut w = vec![vec![0i64; self.cartan.len()]; dim];
        for (k, &h) in self.cartan.iter().enumerate() {
            for (b, wb) in w.iter_mut().enumerate() {
                let row = &self.rational[h * dim + b];
                match row.as_slice() {
                    [] => wb[k] = 0,
                    [(t, c)] if *t == b && c.is_integer() => {
                        wb[k] = i64::try_from(c.numer()).ok()?;
                    }
                    _ => return None,
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for (t, _) in &self.rational[i * dim + j] {
                    let sum: Vec<i64> = w[i].iter().zip(&w[j]).map(|(a, b)| a + b).collect();
                    if w[*t] != sum {
                        return None;
                    }
                }
            }
        }
        Some(w)
    }

    /// The same algebra over `field`. Fails for excluded primes or when a
    /// structure constant has no image mod p.
    pub fn over(&self, field: Field) -> Result<StructureTable, AlgebraError> {
        if let Field::Prime(p) = field {
            self.check_prime(p)?;
        }
        let mut t = self.clone();
        t.field = field;
        t.brackets = self.reduce_brackets(field)?;
        Ok(t)
    }

    pub fn check_prime(&self, p: u32) -> Result<(), AlgebraError> {
        if self.excluded_primes.contains(&p) {
            return Err(AlgebraError::ExcludedPrime { algebra: self.name.clone(), p });
        }
        Field::prime(p).map(|_| ())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.registry.len()
    }

    pub fn registry(&self) -> &VarRegistry {
        &self.registry
    }

    pub fn label(&self, i: usize) -> &str {
        self.registry.name(i)
    }

    pub fn index(&self, label: &str) -> Result<usize, AlgebraError> {
        self.registry.require(label)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn cartan(&self) -> &[usize] {
        &self.cartan
    }

    pub fn nil(&self) -> &[usize] {
        &self.nil
    }

    pub fn excluded_primes(&self) -> &[u32] {
        &self.excluded_primes
    }

    /// Generators acting at the given level.
    pub fn level_indices(&self, level: Level) -> Vec<usize> {
        match level {
            Level::Nilradical => self.nil.clone(),
            Level::Borel => (0..self.dim()).collect(),
        }
    }

    pub fn weights(&self) -> Option<&[Vec<i64>]> {
        self.weights.as_deref()
    }

    /// Structure-constant row of `[x_i, x_j]` in the working field.
    pub fn bracket_row(&self, i: usize, j: usize) -> &SparseRow {
        &self.brackets[i * self.dim() + j]
    }

    pub fn rational_row(&self, i: usize, j: usize) -> &RationalRow {
        &self.rational[i * self.dim() + j]
    }

    fn check_index(&self, i: usize) -> Result<(), AlgebraError> {
        if i >= self.dim() {
            return Err(AlgebraError::IndexOutOfRange { index: i, dim: self.dim() });
        }
        Ok(())
    }

    /// `[x_i, x_j]` as a linear polynomial.
    pub fn bracket(&self, i: usize, j: usize) -> Result<Polynomial, AlgebraError> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(Polynomial::from_terms(
            self.field,
            self.bracket_row(i, j).iter().map(|(k, c)| (c.clone(), Monomial::var(*k))),
        ))
    }

    /// Nonzero upper-triangle entries `(i, j, [x_i, x_j])`, `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RationalRow)> + '_ {
        let dim = self.dim();
        (0..dim).flat_map(move |i| (i + 1..dim).map(move |j| (i, j))).filter_map(move |(i, j)| {
            let r = &self.rational[i * dim + j];
            (!r.is_empty()).then_some((i, j, r))
        })
    }

    /// Copy with `[x_i, x_j]` replaced (and `[x_j, x_i]` updated).
    pub fn with_bracket(&self, i: usize, j: usize, value: RationalRow) -> Result<StructureTable, AlgebraError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(AlgebraError::Parse("cannot set [x, x]".to_string()));
        }
        let dim = self.dim();
        let mut t = self.clone();
        let value = normalize_row(&value);
        t.rational[j * dim + i] = neg_row(&value);
        t.rational[i * dim + j] = value;
        t.brackets = t.reduce_brackets(self.field)?;
        t.weights = t.compute_weights();
        Ok(t)
    }

    pub fn with_name(mut self, name: &str) -> StructureTable {
        self.name = name.to_string();
        self
    }

    fn apply(&self, i: usize, v: &SparseRow) -> SparseRow {
        let mut acc: BTreeMap<usize, Coeff> = BTreeMap::new();
        for (j, c) in v {
            for (k, s) in self.bracket_row(i, *j) {
                let e = acc.entry(*k).or_insert_with(|| self.field.zero());
                *e = &*e + &(c * s);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Checks the Jacobi identity on every unordered triple of basis
    /// elements and reports each failing triple with its residual.
    pub fn jacobi_check(&self) -> JacobiReport {
        let dim = self.dim();
        let mut failures = Vec::new();
        let mut triples = 0usize;
        for i in 0..dim {
            for j in i + 1..dim {
                for k in j + 1..dim {
                    triples += 1;
                    let mut acc: BTreeMap<usize, Coeff> = BTreeMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (t, v) in self.apply(a, self.bracket_row(b, c)) {
                            let e = acc.entry(t).or_insert_with(|| self.field.zero());
                            *e = &*e + &v;
                        }
                    }
                    let residual: SparseRow = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    if !residual.is_empty() {
                        let poly = Polynomial::from_terms(
                            self.field,
                            residual.iter().map(|(t, c)| (c.clone(), Monomial::var(*t))),
                        );
                        failures.push(JacobiFailure { triple: [i, j, k], residual: poly });
                    }
                }
            }
        }
        JacobiReport { triples, failures }
    }

    /// Violations of: Cartan elements commute, `[B, B]` lies in the span of
    /// the nilradical.
    pub fn borel_structure_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let row = self.bracket_row(i, j);
                let both_cartan = self.cartan.contains(&i) && self.cartan.contains(&j);
                if (both_cartan && !row.is_empty()) || row.iter().any(|(k, _)| self.cartan.contains(k)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Matrix of `ad x_i` on the basis; column `j` holds `[x_i, x_j]`.
    pub fn ad_matrix(&self, i: usize) -> Result<Matrix, AlgebraError> {
        self.check_index(i)?;
        let dim = self.dim();
        let mut m = Matrix::zeros(self.field, dim, dim);
        for j in 0..dim {
            for (k, c) in self.bracket_row(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        Ok(m)
    }

    /// Checks `(ad x)^p = 0` for a nilradical element, `(ad h)^p = ad h`
    /// for a Cartan element, as matrix identities over F_p.
    pub fn ad_power_identity(&self, i: usize, p: u32) -> Result<AdPowerCheck, AlgebraError> {
        self.check_index(i)?;
        self.check_prime(p)?;
        let t = if self.field == Field::Prime(p) { self.clone() } else { self.over(Field::Prime(p))? };
        let ad = t.ad_matrix(i)?;
        let power = ad.pow(p);
        let cartan = t.cartan.contains(&i);
        let residual = if cartan { power.sub(&ad) } else { power };
        Ok(AdPowerCheck { index: i, cartan, p, holds: residual.is_zero(), residual })
    }
}

#[derive(Debug, Clone)]
pub struct JacobiFailure {
    pub triple: [usize; 3],
    pub residual: Polynomial,
}

#[derive(Debug, Clone)]
pub struct JacobiReport {
    pub triples: usize,
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct AdPowerCheck {
    pub index: usize,
    pub cartan: bool,
    pub p: u32,
    pub holds: bool,
    /// `(ad h)^p - ad h` or `(ad x)^p`.
    pub residual: Matrix,
}

/// Exact matrices realizing a Lie algebra basis; the bracket is the
/// matrix commutator.
#[derive(Debug, Clone)]
pub struct MatrixRealization {
    pub size: usize,
    pub labels: Vec<String>,
    pub matrices: Vec<Matrix>,
    /// A position where basis matrix `k` is nonzero and all others vanish.
    signature: Vec<(usize, usize)>,
}

impl MatrixRealization {
    pub fn new(size: usize, labels: Vec<String>, matrices: Vec<Matrix>) -> Result<Self, AlgebraError> {
        let mut signature = Vec::with_capacity(matrices.len());
        for (k, m) in matrices.iter().enumerate() {
            let pos = (0..size)
                .flat_map(|r| (0..size).map(move |c| (r, c)))
                .find(|&(r, c)| {
                    !m.get(r, c).is_zero() && matrices.iter().enumerate().all(|(l, o)| l == k || o.get(r, c).is_zero())
                })
                .ok_or_else(|| {
                    AlgebraError::CommutatorNotInSpan(alloc::format!("{} has no private entry", labels[k]))
                })?;
            signature.push(pos);
        }
        Ok(MatrixRealization { size, labels, matrices, signature })
    }

    pub fn commutator(&self, i: usize, j: usize) -> Matrix {
        let (a, b) = (&self.matrices[i], &self.matrices[j]);
        a.mul(b).sub(&b.mul(a))
    }

    /// Coordinates of `m` in the basis, or an error if `m` is not in the span.
    pub fn coordinates(&self, m: &Matrix) -> Result<RationalRow, AlgebraError> {
        let mut coords = RationalRow::new();
        let mut rebuilt = Matrix::zeros(Field::Rational, self.size, self.size);
        for (k, &(r, c)) in self.signature.iter().enumerate() {
            let v = m.get(r, c);
            if v.is_zero() {
                continue;
            }
            let scale = v * &self.matrices[k].get(r, c).inv().expect("nonzero signature");
            for rr in 0..self.size {
                for cc in 0..self.size {
                    let e = rebuilt.get(rr, cc) + &(&scale * self.matrices[k].get(rr, cc));
                    rebuilt.set(rr, cc, e);
                }
            }
            coords.push((k, scale.as_rational().cloned().expect("rational realization")));
        }
        if rebuilt != *m {
            return Err(AlgebraError::CommutatorNotInSpan("matrix outside the basis span".to_string()));
        }
        Ok(coords)
    }
}

/// `r_l(s) = l - s + 1`, the index reflection used to address anti-diagonal
/// positions of an `l x l` matrix (1-based).
pub fn reflect(l: usize, s: usize) -> usize {
    l + 1 - s
}

fn unit(field: Field, size: usize, r: usize, c: usize) -> Matrix {
    let mut m = Matrix::zeros(field, size, size);
    m.set(r, c, field.one());
    m
}

/// Labels of the C_n Borel basis: `h1..hn`, then `u{i}_{j}` for
/// `e_{i,j} - e_{n+j,n+i}` (i<j), `t{i}` for `e_{i,n+i}`, and `s{i}_{j}` for
/// `e_{i,n+j} + e_{j,n+i}` (i<j).
pub fn cn_labels(n: usize) -> Vec<String> {
    let mut labels: Vec<String> = (1..=n).map(|i| alloc::format!("h{i}")).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            labels.push(alloc::format!("u{i}_{j}"));
        }
    }
    for i in 1..=n {
        labels.push(alloc::format!("t{i}"));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            labels.push(alloc::format!("s{i}_{j}"));
        }
    }
    labels
}

/// The Borel subalgebra of `sp(2n)` in its defining `2n x 2n` realization;
/// structure constants are computed from matrix commutators.
pub fn build_cn_borel(n: usize) -> Result<(StructureTable, MatrixRealization), AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::SizeMismatch { expected: 1, found: 0 });
    }
    let q = Field::Rational;
    let size = 2 * n;
    // 1-based matrix units
    let e = |r: usize, c: usize| unit(q, size, r - 1, c - 1);
    let mut mats = Vec::new();
    for i in 1..=n {
        mats.push(e(i, i).sub(&e(n + i, n + i)));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            mats.push(e(i, j).sub(&e(n + j, n + i)));
        }
    }
    for i in 1..=n {
        mats.push(e(i, n + i));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            mats.push(e(i, n + j).add(&e(j, n + i)));
        }
    }
    let labels = cn_labels(n);
    let real = MatrixRealization::new(size, labels.clone(), mats)?;
    let dim = labels.len();
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let coords = real.coordinates(&real.commutator(i, j))?;
            if !coords.is_empty() {
                entries.push((i, j, coords));
            }
        }
    }
    let cartan: Vec<usize> = (0..n).collect();
    let table = StructureTable::new(&alloc::format!("C{n} Borel"), &labels, &cartan, entries, &[2])?;
    Ok((table, real))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abelian(dim: usize) -> StructureTable {
        let labels: Vec<String> = (1..=dim).map(|i| alloc::format!("y{i}")).collect();
        StructureTable::new("abelian", &labels, &[], Vec::new(), &[]).unwrap()
    }

    #[test]
    fn abelian_passes_jacobi() {
        let t = abelian(4);
        let r = t.jacobi_check();
        assert!(r.passed());
        assert_eq!(r.triples, 4);
    }

    #[test]
    fn abelian_ad_power() {
        let t = abelian(3);
        for i in 0..3 {
            let c = t.ad_power_identity(i, 5).unwrap();
            assert!(c.holds);
            assert!(c.residual.is_zero());
        }
    }

    #[test]
    fn self_bracket_vanishes_and_index_errors() {
        let t = abelian(2);
        assert!(t.bracket(1, 1).unwrap().is_zero());
        assert!(matches!(t.bracket(0, 7), Err(AlgebraError::IndexOutOfRange { .. })));
    }

    #[test]
    fn conflicting_orientations_rejected() {
        let r = |k: usize, n: i64| vec![(k, Rational::from_int(n))];
        let entries = vec![(0, 1, r(2, 1)), (1, 0, r(2, 1))];
        assert!(StructureTable::new("bad", &["a", "b", "c"], &[], entries, &[]).is_err());
        let entries = vec![(0, 1, r(2, 1)), (1, 0, r(2, -1))];
        assert!(StructureTable::new("ok", &["a", "b", "c"], &[], entries, &[]).is_ok());
    }

    #[test]
    fn reflection() {
        assert_eq!(reflect(6, 2), 5);
        assert_eq!(reflect(4, 1), 4);
    }

    #[test]
    fn c2_dimensions_and_brackets() {
        let (t, _) = build_cn_borel(2).unwrap();
        assert_eq!(t.dim(), 6);
        assert_eq!(t.nil().len(), 4);
        let a = t.index("u1_2").unwrap();
        let c = t.index("t2").unwrap();
        let d = t.index("s1_2").unwrap();
        let b = t.index("t1").unwrap();
        // [e12 - e43, e24] = e14 + e23
        assert_eq!(t.bracket(a, c).unwrap(), Polynomial::var(Field::Rational, d));
        // [e12 - e43, e14 + e23] = 2 e13
        assert_eq!(t.bracket(a, d).unwrap(), Polynomial::var(Field::Rational, b).scale_int(2));
    }
}
