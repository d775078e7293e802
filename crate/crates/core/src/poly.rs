//! Sparse multivariate polynomials with exact coefficients.
//!
//! A [`Polynomial`] is a map from [`Monomial`] to nonzero [`Coeff`], tagged
//! with its [`Field`]. Monomials are ordered graded-lexicographically with
//! variable 0 the largest, which fixes both the printed term order and the
//! leading term.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::error::AlgebraError;
use crate::field::{Coeff, Field};
use crate::rational::Rational;

/// Ordered, immutable list of variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarRegistry {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarRegistry {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, AlgebraError> {
        let mut index = BTreeMap::new();
        let mut out = Vec::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if !valid_name(n) {
                return Err(AlgebraError::Parse(alloc::format!("invalid variable name `{n}`")));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(AlgebraError::DuplicateVariable(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(VarRegistry { names: out, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index_of(name).ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }
}

/// Product of variable powers, stored as `(variable, exponent)` pairs sorted
/// by variable with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(u32, u32); 6]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: usize) -> Self {
        Monomial(smallvec::smallvec![(v as u32, 1)])
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(smallvec::smallvec![(v as u32, e)])
    }

    /// Builds from arbitrary `(var, exp)` pairs, merging duplicates.
    pub fn from_pairs(pairs: &[(usize, u32)]) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m = m.mul(&Monomial::var_pow(v, e));
        }
        m
    }

    /// Dense exponent vector of length `n`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, &e)| (v as u32, e)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0.iter().find(|&&(w, _)| w as usize == v).map(|&(_, e)| e).unwrap_or(0)
    }

    /// `(variable, exponent)` pairs in increasing variable order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Divides out one power of `v`; `None` if `v` does not occur.
    pub fn without_one(&self, v: usize) -> Option<(u32, Monomial)> {
        let pos = self.0.iter().position(|&(w, _)| w as usize == v)?;
        let e = self.0[pos].1;
        let mut m = self.0.clone();
        if e == 1 {
            m.remove(pos);
        } else {
            m[pos].1 -= 1;
        }
        Some((e, Monomial(m)))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Every exponent divided by `p`, if all are divisible.
    pub fn deflate(&self, p: u32) -> Option<Monomial> {
        self.0.iter().map(|&(v, e)| (e % p == 0).then_some((v, e / p))).collect::<Option<SmallVec<_>>>().map(Monomial)
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(v, _)| v as usize)
    }

    pub fn display<'a>(&'a self, reg: &'a VarRegistry) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, reg }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (&(va, ea), &(vb, eb)) in self.0.iter().zip(other.0.iter()) {
                if va != vb {
                    // The monomial containing the smaller-index variable wins.
                    return vb.cmp(&va);
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "v{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    reg: &'a VarRegistry,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.m.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            f.write_str(self.reg.name(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial over `field` in canonical form: no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Self {
        Polynomial { field, terms: BTreeMap::new() }
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { field, terms }
    }

    pub fn var(field: Field, v: usize) -> Self {
        Self::term(field.one(), Monomial::var(v))
    }

    /// Collects `(coefficient, monomial)` pairs, summing duplicates.
    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Coeff, Monomial)>) -> Self {
        let mut p = Polynomial::zero(field);
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Variables occurring in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn add_term(&mut self, c: Coeff, m: Monomial) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(c.field(), self.field);
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::CharacteristicMismatch { left: self.field, right: other.field });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let (mut acc, small) = if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in small.terms() {
            acc.add_term(c.clone(), m.clone());
        }
        Ok(acc)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let mut acc = Polynomial::zero(self.field);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                acc.add_term(ca * cb, ma.mul(mb));
            }
        }
        Ok(acc)
    }

    /// In-place `self += c * m * other`.
    pub fn add_scaled(&mut self, c: &Coeff, m: &Monomial, other: &Polynomial) {
        for (mo, co) in other.terms() {
            self.add_term(c * co, m.mul(mo));
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field);
        }
        Polynomial { field: self.field, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Polynomial {
        self.scale(&self.field.int(n))
    }

    pub fn scale_rational(&self, r: &Rational) -> Result<Polynomial, AlgebraError> {
        Ok(self.scale(&self.field.rational(r)?))
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `v`.
    pub fn partial(&self, v: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in self.terms() {
            if let Some((e, rest)) = m.without_one(v) {
                out.add_term(c * &self.field.int(e as i64), rest);
            }
        }
        out
    }

    /// Reduction of a rational polynomial into `field`.
    pub fn to_field(&self, field: Field) -> Result<Polynomial, AlgebraError> {
        if self.field == field {
            return Ok(self.clone());
        }
        let mut out = Polynomial::zero(field);
        for (m, c) in self.terms() {
            let r = c.as_rational().ok_or(AlgebraError::CharacteristicMismatch { left: self.field, right: field })?;
            out.add_term(field.rational(r)?, m.clone());
        }
        Ok(out)
    }

    /// Applies `f` to every monomial, summing collisions.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Polynomial {
        Polynomial::from_terms(self.field, self.terms().map(|(m, c)| (c.clone(), f(m))))
    }

    /// Divides every exponent by `p`; `None` unless each is divisible.
    pub fn deflate(&self, p: u32) -> Option<Polynomial> {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in self.terms() {
            out.add_term(c.clone(), m.deflate(p)?);
        }
        Some(out)
    }

    /// Multiplies every exponent by `k` (the substitution `x_i -> x_i^k`).
    pub fn inflate(&self, k: u32) -> Polynomial {
        self.map_monomials(|m| m.pow(k))
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            self.terms().filter(|(m, _)| m.degree() == d).map(|(m, c)| (c.clone(), m.clone())),
        )
    }

    /// If `self = lambda * other` for a scalar `lambda`, returns it.
    pub fn scalar_ratio(&self, other: &Polynomial) -> Option<Coeff> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.field.zero());
        }
        if self.len() != other.len() {
            return None;
        }
        let (m, c) = other.leading()?;
        let lambda = self.coeff(m)? * &c.inv()?;
        (other.scale(&lambda) == *self).then_some(lambda)
    }

    pub fn display<'a>(&'a self, reg: &'a VarRegistry) -> PolyDisplay<'a> {
        PolyDisplay { p: self, reg }
    }

    /// Canonical text form, leading term first.
    pub fn to_text(&self, reg: &VarRegistry) -> String {
        self.display(reg).to_string()
    }

    /// Parses the text form `coef*var^e*... + ...`; coefficients as `a` or `a/b`.
    pub fn parse(s: &str, reg: &VarRegistry, field: Field) -> Result<Polynomial, AlgebraError> {
        parse_poly(s, reg, field)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c:?}*{m:?}")?;
        }
        Ok(())
    }
}

pub struct PolyDisplay<'a> {
    p: &'a Polynomial,
    reg: &'a VarRegistry,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(self.reg))?;
            } else {
                write!(f, "{abs}*{}", m.display(self.reg))?;
            }
        }
        Ok(())
    }
}

fn parse_poly(s: &str, reg: &VarRegistry, field: Field) -> Result<Polynomial, AlgebraError> {
    let perr = |msg: &str| AlgebraError::Parse(alloc::format!("{msg} in `{s}`"));
    let mut out = Polynomial::zero(field);
    let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if src.is_empty() {
        return Err(perr("empty polynomial"));
    }
    // Split into signed terms at top-level '+' / '-'.
    let bytes = src.as_bytes();
    let mut start = 0;
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let mut sign_neg = false;
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if (b == b'+' || b == b'-') && (i == 0 || bytes[i - 1] != b'^') {
            if i > start {
                terms.push((sign_neg, &src[start..i]));
            } else if i > 0 {
                return Err(perr("dangling sign"));
            }
            sign_neg = b == b'-';
            start = i + 1;
        }
        i += 1;
    }
    if start >= src.len() {
        return Err(perr("trailing sign"));
    }
    terms.push((sign_neg, &src[start..]));

    for (neg, t) in terms {
        let mut c = field.one();
        let mut m = Monomial::one();
        for factor in t.split('*') {
            if factor.is_empty() {
                return Err(perr("empty factor"));
            }
            let first = factor.as_bytes()[0];
            if first.is_ascii_digit() {
                let r: Rational = factor.parse().map_err(|_| perr("bad coefficient"))?;
                c = &c * &field.rational(&r)?;
            } else {
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| perr("bad exponent"))?),
                    None => (factor, 1),
                };
                let v = reg.require(name)?;
                m = m.mul(&Monomial::var_pow(v, e));
            }
        }
        if neg {
            c = -c;
        }
        out.add_term(c, m);
    }
    Ok(out)
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics on characteristic mismatch; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { field: self.field, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Determinant of the Jacobian matrix `(d fs[i] / d vs[j])`, by Laplace
/// expansion along the first row. Supports up to 4x4.
pub fn jacobian_det(fs: &[Polynomial], vs: &[usize]) -> Result<Polynomial, AlgebraError> {
    if fs.len() != vs.len() {
        return Err(AlgebraError::SizeMismatch { expected: fs.len(), found: vs.len() });
    }
    if fs.len() > 4 {
        return Err(AlgebraError::CapExceeded { needed: fs.len(), cap: 4 });
    }
    let field = fs.first().map(Polynomial::field).unwrap_or(Field::Rational);
    for f in fs {
        if f.field() != field {
            return Err(AlgebraError::CharacteristicMismatch { left: field, right: f.field() });
        }
    }
    let matrix: Vec<Vec<Polynomial>> = fs.iter().map(|f| vs.iter().map(|&v| f.partial(v)).collect()).collect();
    Ok(poly_det(&matrix, field))
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn poly_det(m: &[Vec<Polynomial>], field: Field) -> Polynomial {
    let n = m.len();
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, 0, &cols, field)
}

fn det_rec(m: &[Vec<Polynomial>], row: usize, cols: &[usize], field: Field) -> Polynomial {
    if cols.is_empty() {
        return Polynomial::one(field);
    }
    let mut acc = Polynomial::zero(field);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(m, row + 1, &rest, field);
        let term = entry * &minor;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `f^p` over F_p via the Frobenius endomorphism: each term is raised to
/// the `p`-th power independently.
pub fn frobenius_expand(f: &Polynomial, p: u32) -> Result<Polynomial, AlgebraError> {
    match f.field() {
        Field::Prime(q) if q == p => {}
        Field::Prime(q) => {
            return Err(AlgebraError::CharacteristicMismatch { left: Field::Prime(q), right: Field::Prime(p) })
        }
        Field::Rational => return Err(AlgebraError::RequiresPrimeField),
    }
    Ok(Polynomial::from_terms(f.field(), f.terms().map(|(m, c)| (c.pow(p), m.pow(p)))))
}

/// Outcome of a p-pattern membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PPatternMembership {
    pub member: bool,
    /// First monomial (from the leading term down) with a non-divisible
    /// exponent on a constrained variable.
    pub witness: Option<Monomial>,
}

/// Decides membership in `F[x_i^p (i not exempt), x_e (e exempt)]`: every
/// monomial must have `p`-divisible exponents on the non-exempt variables.
pub fn ppattern_membership(f: &Polynomial, p: u32, exempt: &[usize]) -> PPatternMembership {
    for (m, _) in f.terms().rev() {
        if m.iter().any(|(v, e)| !exempt.contains(&v) && e % p != 0) {
            return PPatternMembership { member: false, witness: Some(m.clone()) };
        }
    }
    PPatternMembership { member: true, witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn reg6() -> VarRegistry {
        VarRegistry::new(&["x1", "x2", "x3", "x4", "x5", "x6"]).unwrap()
    }

    fn p(s: &str, f: Field) -> Polynomial {
        Polynomial::parse(s, &reg6(), f).unwrap()
    }

    #[test]
    fn cancellation() {
        let q = Field::Rational;
        assert_eq!(&p("x1 + x2", q) + &p("-x2", q), p("x1", q));
    }

    #[test]
    fn g2_c2_assembles() {
        let q = Field::Rational;
        let c2 = &p("3*x1*x6 + x3^2", q) + &p("-3*x2*x5", q);
        assert_eq!(c2.len(), 3);
        assert_eq!(c2.to_text(&reg6()), "3*x1*x6 - 3*x2*x5 + x3^2");
    }

    #[test]
    fn mod_five_addition() {
        let f5 = Field::Prime(5);
        assert_eq!(&p("3*x1", f5) + &p("3*x1", f5), p("x1", f5));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = p("x1", Field::Rational);
        let b = p("x1", Field::Prime(5));
        assert!(matches!(a.try_add(&b), Err(AlgebraError::CharacteristicMismatch { .. })));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn products() {
        let q = Field::Rational;
        assert_eq!(&p("x3", q) * &p("x3", q), p("x3^2", q));
        assert_eq!(&p("x1+x2", q) * &p("x1-x2", q), p("x1^2-x2^2", q));
    }

    #[test]
    fn partials() {
        let q = Field::Rational;
        assert_eq!(p("x3^2", q).partial(2), p("2*x3", q));
        let c2 = p("3*x1*x6 - 3*x2*x5 + x3^2", q);
        assert_eq!(c2.partial(0), p("3*x6", q));
        assert_eq!(c2.partial(1), p("-3*x5", q));
        assert!(p("x6", q).partial(4).is_zero());
    }

    #[test]
    fn jacobians() {
        let q = Field::Rational;
        assert_eq!(jacobian_det(&[p("x1", q), p("x2", q)], &[0, 1]).unwrap(), Polynomial::one(q));
        assert_eq!(jacobian_det(&[p("x1*x2", q)], &[1]).unwrap(), p("x1", q));
        assert!(jacobian_det(&[p("x1", q)], &[0, 1]).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let f5 = Field::Prime(5);
        assert_eq!(frobenius_expand(&p("x1+x2", f5), 5).unwrap(), p("x1^5+x2^5", f5));
        let c2 = p("3*x1*x6 - 3*x2*x5 + x3^2", f5);
        let expected = p("3*x1^5*x6^5 - 3*x2^5*x5^5 + x3^10", f5);
        assert_eq!(frobenius_expand(&c2, 5).unwrap(), expected);
        assert_eq!(c2.pow(5), expected);
        let f3 = Field::Prime(3);
        assert_eq!(frobenius_expand(&Polynomial::constant(f3.int(2)), 3).unwrap(), Polynomial::constant(f3.int(2)));
        assert_eq!(frobenius_expand(&p("x1", Field::Rational), 5), Err(AlgebraError::RequiresPrimeField));
    }

    #[test]
    fn ppattern_examples() {
        let f5 = Field::Prime(5);
        let c2 = p("3*x1*x6 - 3*x2*x5 + x3^2", f5);
        let r = ppattern_membership(&frobenius_expand(&c2, 5).unwrap(), 5, &[5]);
        assert!(r.member);
        let r = ppattern_membership(&c2, 5, &[5]);
        assert!(!r.member);
        assert_eq!(r.witness, Some(Monomial::from_pairs(&[(0, 1), (5, 1)])));
        assert!(ppattern_membership(&p("x6^3", f5), 5, &[5]).member);
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::from_pairs(&[(0, 1), (5, 1)]);
        let b = Monomial::from_pairs(&[(1, 1), (4, 1)]);
        let c = Monomial::from_pairs(&[(2, 2)]);
        let d = Monomial::from_pairs(&[(0, 3)]);
        let mut v = vec![c.clone(), d.clone(), b.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![c, b, a, d]);
    }

    #[test]
    fn parse_display_roundtrip_fp() {
        let f7 = Field::Prime(7);
        let q = p("1/2*x1 - x2^3*x4", f7);
        let text = q.to_text(&reg6());
        assert_eq!(text, "6*x2^3*x4 + 4*x1");
        assert_eq!(p(&text, f7), q);
    }

    #[test]
    fn parse_errors() {
        let r = reg6();
        assert!(Polynomial::parse("x7", &r, Field::Rational).is_err());
        assert!(Polynomial::parse("x1 +", &r, Field::Rational).is_err());
        assert!(Polynomial::parse("", &r, Field::Rational).is_err());
        assert!(Polynomial::parse("1/0*x1", &r, Field::Rational).is_err());
    }
}
