//! The enveloping algebra in PBW normal form.
//!
//! A normal-ordered PBW monomial `x_{i1} x_{i2} ... x_{ik}` with
//! `i1 <= ... <= ik` is stored as the commutative [`Monomial`] with the same
//! exponents, so an element is a [`Polynomial`] read as an ordered word sum.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::AlgebraError;
use crate::field::{Coeff, Field};
use crate::invariants::InvariantFamily;
use crate::liealg::StructureTable;
use crate::poly::{Monomial, Polynomial, VarRegistry};
use crate::report::{ClaimResult, SuiteReport};

/// An element of `U(L)` in PBW normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct PbwElement(Polynomial);

impl PbwElement {
    pub fn zero(field: Field) -> Self {
        PbwElement(Polynomial::zero(field))
    }

    pub fn one(field: Field) -> Self {
        PbwElement(Polynomial::one(field))
    }

    pub fn generator(field: Field, i: usize) -> Self {
        PbwElement(Polynomial::var(field, i))
    }

    /// Reads each commutative monomial as its sorted word (the naive lift).
    pub fn ordered_lift(f: &Polynomial) -> Self {
        PbwElement(f.clone())
    }

    /// The normal form viewed as coefficients on sorted words.
    pub fn words(&self) -> &Polynomial {
        &self.0
    }

    pub fn field(&self) -> Field {
        self.0.field()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Filtration degree: the longest word, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.0.terms().map(|(m, _)| m.degree()).max()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        PbwElement(self.0.scale(c))
    }

    pub fn display<'a>(&'a self, reg: &'a VarRegistry) -> impl fmt::Display + 'a {
        self.0.display(reg)
    }
}

impl fmt::Debug for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pbw({:?})", self.0)
    }
}

impl core::ops::Add for &PbwElement {
    type Output = PbwElement;
    fn add(self, o: &PbwElement) -> PbwElement {
        PbwElement(&self.0 + &o.0)
    }
}

impl core::ops::Sub for &PbwElement {
    type Output = PbwElement;
    fn sub(self, o: &PbwElement) -> PbwElement {
        PbwElement(&self.0 - &o.0)
    }
}

/// The top filtration component, as a polynomial in `S(L)`.
pub fn gr_leading(e: &PbwElement) -> Result<Polynomial, AlgebraError> {
    let d = e.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    Ok(e.0.homogeneous_part(d))
}

/// Straightening context with memoized `word * x_j` products.
pub struct Pbw<'a> {
    t: &'a StructureTable,
    right: BTreeMap<(Monomial, usize), Polynomial>,
    sym: BTreeMap<Monomial, Polynomial>,
}

impl<'a> Pbw<'a> {
    pub fn new(t: &'a StructureTable) -> Self {
        Pbw { t, right: BTreeMap::new(), sym: BTreeMap::new() }
    }

    pub fn table(&self) -> &StructureTable {
        self.t
    }

    fn check(&self, e: &PbwElement) -> Result<(), AlgebraError> {
        if e.field() != self.t.field() {
            return Err(AlgebraError::CharacteristicMismatch { left: self.t.field(), right: e.field() });
        }
        if let Some(v) = e.0.variables().into_iter().find(|&v| v >= self.t.dim()) {
            return Err(AlgebraError::IndexOutOfRange { index: v, dim: self.t.dim() });
        }
        Ok(())
    }

    /// Normal form of `m * x_j` for a normal word `m`.
    fn word_times_var(&mut self, m: &Monomial, j: usize) -> Polynomial {
        let field = self.t.field();
        let k = match m.max_var() {
            Some(k) if k > j => k,
            _ => return Polynomial::term(field.one(), m.mul(&Monomial::var(j))),
        };
        let key = (m.clone(), j);
        if let Some(r) = self.right.get(&key) {
            return r.clone();
        }
        // m' x_k x_j = (m' x_j) x_k + m' [x_k, x_j]
        let (_, rest) = m.without_one(k).expect("max var present");
        let head = self.word_times_var(&rest, j);
        let mut out = self.elem_times_var(&head, k);
        let row = self.t.bracket_row(k, j).clone();
        for (l, c) in &row {
            let part = self.word_times_var(&rest, *l);
            out = &out + &part.scale(c);
        }
        self.right.insert(key, out.clone());
        out
    }

    fn elem_times_var(&mut self, e: &Polynomial, j: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.t.field());
        for (m, c) in e.terms() {
            let r = self.word_times_var(m, j);
            out = &out + &r.scale(c);
        }
        out
    }

    /// Multiplies on the right by the sorted word of `m`.
    fn elem_times_word(&mut self, e: &Polynomial, m: &Monomial) -> Polynomial {
        let mut acc = e.clone();
        for (v, k) in m.iter() {
            for _ in 0..k {
                acc = self.elem_times_var(&acc, v);
            }
        }
        acc
    }

    /// Associative product in normal form.
    pub fn mul(&mut self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement, AlgebraError> {
        self.check(a)?;
        self.check(b)?;
        let mut out = Polynomial::zero(self.t.field());
        for (m, c) in b.0.terms() {
            let r = self.elem_times_word(&a.0, m);
            out = &out + &r.scale(c);
        }
        Ok(PbwElement(out))
    }

    /// `ab - ba`.
    pub fn commutator(&mut self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement, AlgebraError> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        Ok(&ab - &ba)
    }

    /// `[x_g, x_i^p] = sum_k x_i^k [x_g, x_i] x_i^(p-1-k)`.
    pub fn commutator_with_power(&mut self, g: usize, i: usize, p: u32) -> Result<PbwElement, AlgebraError> {
        let field = self.t.field();
        let br = PbwElement(self.t.bracket(g, i)?);
        let mut out = PbwElement::zero(field);
        for k in 0..p {
            let left = PbwElement(Polynomial::term(field.one(), Monomial::var_pow(i, k)));
            let right = PbwElement(Polynomial::term(field.one(), Monomial::var_pow(i, p - 1 - k)));
            let lb = self.mul(&left, &br)?;
            out = &out + &self.mul(&lb, &right)?;
        }
        Ok(out)
    }

    /// Symmetrization: each monomial maps to the average of its orderings.
    /// Uses `sym(m) = (1/k) sum_{v | m} e_v sym(m / x_v) x_v`.
    pub fn symmetrize(&mut self, f: &Polynomial) -> Result<PbwElement, AlgebraError> {
        self.check(&PbwElement(f.clone()))?;
        let field = self.t.field();
        if let (Field::Prime(p), Some(d)) = (field, f.degree()) {
            if p <= d {
                return Err(AlgebraError::CharacteristicObstruction { p, degree: d });
            }
        }
        let mut out = Polynomial::zero(field);
        for (m, c) in f.terms() {
            let s = self.sym_monomial(m);
            out = &out + &s.scale(c);
        }
        Ok(PbwElement(out))
    }

    fn sym_monomial(&mut self, m: &Monomial) -> Polynomial {
        let field = self.t.field();
        if m.degree() <= 1 {
            return Polynomial::term(field.one(), m.clone());
        }
        if let Some(r) = self.sym.get(m) {
            return r.clone();
        }
        let mut out = Polynomial::zero(field);
        let vars: Vec<(usize, u32)> = m.iter().collect();
        for (v, e) in vars {
            let (_, rest) = m.without_one(v).expect("present");
            let s = self.sym_monomial(&rest);
            let r = self.elem_times_var(&s, v);
            out = &out + &r.scale(&field.int(e as i64));
        }
        let inv = field.int(m.degree() as i64).inv().expect("checked characteristic");
        let out = out.scale(&inv);
        self.sym.insert(m.clone(), out.clone());
        out
    }

    /// First generator (in the given order) not commuting with `e`.
    pub fn is_central(&mut self, e: &PbwElement, gens: &[usize]) -> Result<Centrality, AlgebraError> {
        let field = self.t.field();
        for &g in gens {
            let c = self.commutator(&PbwElement::generator(field, g), e)?;
            if !c.is_zero() {
                return Ok(Centrality { failure: Some((g, c)) });
            }
        }
        Ok(Centrality { failure: None })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centrality {
    pub failure: Option<(usize, PbwElement)>,
}

impl Centrality {
    pub fn central(&self) -> bool {
        self.failure.is_none()
    }
}

/// Straightens the word `x_{w1} ... x_{wk}` by repeatedly rewriting an
/// out-of-order adjacent pair. `choose(n)` picks which of the `n` current
/// descents to rewrite, so the normal form can be compared across orders.
pub fn straighten_word_with(t: &StructureTable, word: &[usize], choose: &mut impl FnMut(usize) -> usize) -> PbwElement {
    let field = t.field();
    let mut pending: Vec<(Coeff, Vec<usize>)> = alloc::vec![(field.one(), word.to_vec())];
    let mut out = Polynomial::zero(field);
    while let Some((c, w)) = pending.pop() {
        let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&k| w[k] > w[k + 1]).collect();
        if descents.is_empty() {
            let mut pairs: Vec<(usize, u32)> = Vec::new();
            for &v in &w {
                match pairs.last_mut() {
                    Some((u, e)) if *u == v => *e += 1,
                    _ => pairs.push((v, 1)),
                }
            }
            out.add_term(c, Monomial::from_pairs(&pairs));
            continue;
        }
        let k = descents[choose(descents.len()) % descents.len()];
        let (a, b) = (w[k], w[k + 1]);
        let mut swapped = w.clone();
        swapped.swap(k, k + 1);
        pending.push((c.clone(), swapped));
        for (l, s) in t.bracket_row(a, b) {
            let mut shorter = w[..k].to_vec();
            shorter.push(*l);
            shorter.extend_from_slice(&w[k + 2..]);
            pending.push((&c * s, shorter));
        }
    }
    PbwElement(out)
}

/// In `U(b)` over `F_p`: `[g, x_i^p] = 0` and `[g, h_j^p - h_j] = 0` for
/// every basis element `g`, cross-checked against the ad-power identities.
pub fn p_center_suite(t: &StructureTable, p: u32) -> Result<SuiteReport, AlgebraError> {
    t.check_prime(p)?;
    let tp = if t.field() == Field::Prime(p) { t.clone() } else { t.over(Field::Prime(p))? };
    let field = tp.field();
    let mut rep = SuiteReport::new("pbw", tp.name(), field);
    let mut u = Pbw::new(&tp);
    let all: Vec<usize> = (0..tp.dim()).collect();
    let reg = tp.registry().clone();
    for &i in tp.nil() {
        let xi = reg.name(i);
        let mut failure: Option<String> = None;
        for &g in &all {
            let c = u.commutator_with_power(g, i, p)?;
            if !c.is_zero() {
                failure = Some(format!("[{}, {xi}^{p}] = {}", reg.name(g), c.display(&reg)));
                break;
            }
        }
        let id = format!("pcenter.{xi}");
        let anchor = format!("[g, {xi}^{p}] = 0 for every basis element g");
        rep.push(match failure {
            None => ClaimResult::verified(id, anchor),
            Some(w) => ClaimResult::fail(id, anchor, w),
        });
    }
    for &h in tp.cartan() {
        let hn = reg.name(h);
        let mut z = Polynomial::term(field.one(), Monomial::var_pow(h, p));
        z.add_term(-field.one(), Monomial::var(h));
        let z = PbwElement(z);
        let check = u.is_central(&z, &all)?;
        let id = format!("pcenter.{hn}");
        let anchor = format!("[g, {hn}^{p} - {hn}] = 0 for every basis element g");
        rep.push(match check.failure {
            None => ClaimResult::verified(id, anchor),
            Some((g, c)) => {
                ClaimResult::fail(id, anchor, format!("[{}, {hn}^{p} - {hn}] = {}", reg.name(g), c.display(&reg)))
            }
        });
    }
    for &i in &all {
        let chk = tp.ad_power_identity(i, p)?;
        let n = reg.name(i);
        let anchor = if chk.cartan { format!("(ad {n})^{p} = ad {n}") } else { format!("(ad {n})^{p} = 0") };
        rep.push(ClaimResult::from_bool(format!("adpower.{n}"), anchor, chk.holds, || {
            format!("nonzero residual matrix for {n}")
        }));
    }
    Ok(rep)
}

/// For each invariant `c_i`: the symmetrized lift `z_i` is central in
/// `U(n)` with `gr z_i = c_i`, and the naive ordered lift differs from it
/// only in lower filtration degree (its own centrality is recorded).
pub fn z_lift_audit(t: &StructureTable, fam: &InvariantFamily) -> Result<SuiteReport, AlgebraError> {
    let fam = if fam.field == t.field() { fam.clone() } else { fam.over(t.field())? };
    let mut rep = SuiteReport::new("zlift", t.name(), t.field());
    let key = fam.family.key();
    let reg = t.registry();
    let mut u = Pbw::new(t);
    for (name, c) in fam.cs() {
        let deg = c.degree().unwrap_or(0);
        let z = match u.symmetrize(c) {
            Ok(z) => z,
            Err(AlgebraError::CharacteristicObstruction { p, degree }) => {
                rep.push(ClaimResult::asserted(
                    format!("{key}.zlift.{name}"),
                    format!("gr z = {name}, z central"),
                    format!("symmetrization of degree {degree} needs p > {degree}, have p = {p}"),
                ));
                continue;
            }
            Err(e) => return Err(e),
        };
        let gr = gr_leading(&z)?;
        rep.push(ClaimResult::from_bool(
            format!("{key}.zlift.{name}.gr"),
            format!("gr sym({name}) = {name}"),
            &gr == c,
            || format!("gr = {}", gr.display(reg)),
        ));
        let central = u.is_central(&z, t.nil())?;
        rep.push(match &central.failure {
            None => ClaimResult::verified(format!("{key}.zlift.{name}.central"), format!("[x_i, sym({name})] = 0")),
            Some((g, w)) => ClaimResult::fail(
                format!("{key}.zlift.{name}.central"),
                format!("[x_i, sym({name})] = 0"),
                format!("[{}, sym({name})] = {}", reg.name(*g), w.display(reg)),
            ),
        });
        let naive = PbwElement::ordered_lift(c);
        let diff = &naive - &z;
        let lower = diff.degree().is_none_or(|d| d < deg);
        let naive_central = u.is_central(&naive, t.nil())?;
        let verdict = match (&naive_central.failure, diff.is_zero()) {
            (_, true) => String::from("naive lift equals the symmetrized lift"),
            (None, false) => String::from("naive lift is central and differs in lower degree"),
            (Some((g, _)), false) => format!("naive lift is not central (fails at {})", reg.name(*g)),
        };
        rep.push(
            ClaimResult::from_bool(
                format!("{key}.zlift.{name}.naive"),
                format!("deg(naive({name}) - sym({name})) < {deg}"),
                lower,
                || format!("difference {}", diff.display(reg)),
            )
            .with_detail(verdict),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::g2_borel;
    use crate::corrections::Corrections;
    use crate::invariants::build_g2_invariants;

    fn g2() -> StructureTable {
        g2_borel(&Corrections::builtin()).unwrap().table
    }

    fn el(t: &StructureTable, s: &str) -> PbwElement {
        PbwElement(Polynomial::parse(s, t.registry(), t.field()).unwrap())
    }

    #[test]
    fn straightening_examples() {
        let t = g2();
        let mut u = Pbw::new(&t);
        assert_eq!(u.mul(&el(&t, "x2"), &el(&t, "x1")).unwrap(), el(&t, "x1*x2 - 2*x3"));
        let f = el(&t, "x1*x3 + 2*h1");
        assert_eq!(u.mul(&PbwElement::one(t.field()), &f).unwrap(), f);
        let ab = u.mul(&el(&t, "x2"), &el(&t, "x1")).unwrap();
        let l = u.mul(&ab, &el(&t, "x4")).unwrap();
        let bc = u.mul(&el(&t, "x1"), &el(&t, "x4")).unwrap();
        let r = u.mul(&el(&t, "x2"), &bc).unwrap();
        assert_eq!(l, r);
        assert_eq!(u.commutator(&el(&t, "h1"), &el(&t, "x4")).unwrap(), el(&t, "2*x4"));
    }

    #[test]
    fn z2_central_x5_not() {
        let t = g2();
        let mut u = Pbw::new(&t);
        let z2 = el(&t, "3*x1*x6 - 3*x2*x5 + x3^2");
        assert!(u.commutator(&el(&t, "x1"), &z2).unwrap().is_zero());
        assert!(u.is_central(&z2, t.nil()).unwrap().central());
        let c = u.is_central(&el(&t, "x5"), t.nil()).unwrap();
        assert_eq!(c.failure.unwrap().0, t.index("x4").unwrap());
        assert!(u.is_central(&PbwElement::one(t.field()), t.nil()).unwrap().central());
    }

    #[test]
    fn symmetrize_and_gr() {
        let t = g2();
        let mut u = Pbw::new(&t);
        let f = Polynomial::parse("x3^2", t.registry(), t.field()).unwrap();
        assert_eq!(u.symmetrize(&f).unwrap(), el(&t, "x3^2"));
        let f = Polynomial::parse("x1*x6", t.registry(), t.field()).unwrap();
        assert_eq!(u.symmetrize(&f).unwrap(), el(&t, "x1*x6"));
        let f = Polynomial::parse("x1*x2", t.registry(), t.field()).unwrap();
        assert_eq!(u.symmetrize(&f).unwrap(), el(&t, "x1*x2 - x3"));
        assert_eq!(
            gr_leading(&el(&t, "x1*x2 - 2*x3")).unwrap(),
            Polynomial::parse("x1*x2", t.registry(), t.field()).unwrap()
        );
        assert_eq!(gr_leading(&PbwElement::zero(t.field())), Err(AlgebraError::ZeroPolynomial));
        let t5 = t.over(Field::Prime(5)).unwrap();
        let h = el(&t5, "h1^5 - h1");
        assert_eq!(gr_leading(&h).unwrap(), Polynomial::parse("h1^5", t5.registry(), t5.field()).unwrap());
        let mut u5 = Pbw::new(&t5);
        let f = Polynomial::parse("x1^5", t5.registry(), t5.field()).unwrap();
        assert_eq!(u5.symmetrize(&f), Err(AlgebraError::CharacteristicObstruction { p: 5, degree: 5 }));
    }

    #[test]
    fn power_commutators_match_direct() {
        let t = g2().over(Field::Prime(5)).unwrap();
        let mut u = Pbw::new(&t);
        let x1 = t.index("x1").unwrap();
        let x2 = t.index("x2").unwrap();
        let direct = u.commutator(&PbwElement::generator(t.field(), x1), &el(&t, "x2^5")).unwrap();
        assert!(direct.is_zero());
        assert_eq!(u.commutator_with_power(x1, x2, 5).unwrap(), direct);
        let over_q = g2();
        let mut uq = Pbw::new(&over_q);
        let d = uq.commutator(&el(&over_q, "x1"), &el(&over_q, "x2^3")).unwrap();
        assert!(!d.is_zero());
        assert_eq!(uq.commutator_with_power(x1, x2, 3).unwrap(), d);
        assert!(u.commutator(&el(&t, "x4"), &el(&t, "h1^5 - h1")).unwrap().is_zero());
    }

    #[test]
    fn word_rewriting_orders_agree() {
        let t = g2();
        let mut u = Pbw::new(&t);
        let word = [6, 5, 3, 2, 7, 4];
        let mut first = |_n: usize| 0;
        let mut last = |n: usize| n - 1;
        let a = straighten_word_with(&t, &word, &mut first);
        let b = straighten_word_with(&t, &word, &mut last);
        let mut prod = PbwElement::one(t.field());
        for &w in &word {
            prod = u.mul(&prod, &PbwElement::generator(t.field(), w)).unwrap();
        }
        assert_eq!(a, b);
        assert_eq!(a, prod);
    }

    #[test]
    fn g2_suites() {
        let t = g2();
        let rep = p_center_suite(&t, 5).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        assert_eq!(rep.claims.len(), 6 + 2 + 8);
        assert!(p_center_suite(&t, 3).is_err());
        let fam = build_g2_invariants(&t).unwrap();
        let rep = z_lift_audit(&t, &fam).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        assert!(rep.find("g2.zlift.c2.naive").unwrap().detail.as_deref().unwrap().contains("equals"));
    }
}
