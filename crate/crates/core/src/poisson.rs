//! The Lie-Poisson bracket on the symmetric algebra.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::catalog::Family;
use crate::corrections::Corrections;
use crate::error::AlgebraError;
use crate::field::Coeff;
use crate::invariants::InvariantFamily;
use crate::liealg::StructureTable;
use crate::poly::{Monomial, Polynomial};
use crate::report::{judge_equal, ClaimResult, SuiteReport};

fn check_field(t: &StructureTable, f: &Polynomial) -> Result<(), AlgebraError> {
    if f.field() != t.field() {
        return Err(AlgebraError::CharacteristicMismatch { left: t.field(), right: f.field() });
    }
    if let Some(v) = f.variables().into_iter().find(|&v| v >= t.dim()) {
        return Err(AlgebraError::IndexOutOfRange { index: v, dim: t.dim() });
    }
    Ok(())
}

/// `{x_i, f} = sum_j [x_i, x_j] * df/dx_j`.
pub fn ad_apply(t: &StructureTable, i: usize, f: &Polynomial) -> Result<Polynomial, AlgebraError> {
    check_field(t, f)?;
    if i >= t.dim() {
        return Err(AlgebraError::IndexOutOfRange { index: i, dim: t.dim() });
    }
    let field = t.field();
    let mut out = Polynomial::zero(field);
    for (m, c) in f.terms() {
        for (j, e) in m.iter() {
            let row = t.bracket_row(i, j);
            if row.is_empty() {
                continue;
            }
            let (_, rest) = m.without_one(j).expect("variable present");
            let ce = c * &field.int(e as i64);
            if ce.is_zero() {
                continue;
            }
            for (k, s) in row {
                out.add_term(&ce * s, rest.mul(&Monomial::var(*k)));
            }
        }
    }
    Ok(out)
}

/// `{f, g} = sum_i df/dx_i * {x_i, g}`.
pub fn poisson_bracket(t: &StructureTable, f: &Polynomial, g: &Polynomial) -> Result<Polynomial, AlgebraError> {
    check_field(t, f)?;
    check_field(t, g)?;
    let mut out = Polynomial::zero(t.field());
    for v in f.variables() {
        let d = f.partial(v);
        if d.is_zero() {
            continue;
        }
        let a = ad_apply(t, v, g)?;
        out = &out + &(&d * &a);
    }
    Ok(out)
}

/// Result of an invariance test: the first generator (in the given order)
/// that does not kill `f`, with `ad x(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceCheck {
    pub failure: Option<(usize, Polynomial)>,
}

impl InvarianceCheck {
    pub fn invariant(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn is_invariant(t: &StructureTable, f: &Polynomial, gens: &[usize]) -> Result<InvarianceCheck, AlgebraError> {
    for &i in gens {
        let r = ad_apply(t, i, f)?;
        if !r.is_zero() {
            return Ok(InvarianceCheck { failure: Some((i, r)) });
        }
    }
    Ok(InvarianceCheck { failure: None })
}

/// Simultaneous eigenvalues of `ad h` over the Cartan generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weight {
    Vector(Vec<Coeff>),
    /// `ad h(f)` is not a scalar multiple of `f` for this Cartan index.
    NotSemiInvariant {
        cartan: usize,
    },
}

impl Weight {
    pub fn vector(&self) -> Option<&[Coeff]> {
        match self {
            Weight::Vector(v) => Some(v),
            Weight::NotSemiInvariant { .. } => None,
        }
    }

    pub fn is_nonzero(&self) -> bool {
        self.vector().is_some_and(|v| v.iter().any(|c| !c.is_zero()))
    }
}

pub fn weight_of(t: &StructureTable, f: &Polynomial) -> Result<Weight, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut w = Vec::with_capacity(t.cartan().len());
    for &h in t.cartan() {
        let g = ad_apply(t, h, f)?;
        match g.scalar_ratio(f) {
            Some(l) => w.push(l),
            None => return Ok(Weight::NotSemiInvariant { cartan: h }),
        }
    }
    Ok(Weight::Vector(w))
}

/// `ad h(e) = value` statements about Cartan generators acting on named
/// elements.
const G2_WEIGHT_FACTS: &[(&str, &str, &str)] = &[("h2", "c2", "-c2"), ("h1", "c2", "0"), ("h1", "c1", "c1")];

/// `ad c(h) = value` pairings that separate the invariants.
const G2_PAIRINGS: &[(&str, &str, &str)] = &[("c1", "h1", "-c1"), ("c2", "h2", "2*c2"), ("c2", "h1", "0")];

const F4_WEIGHT_FACTS: &[(&str, &str, &str)] = &[
    ("h4", "c1", "0"),
    ("h4", "c2", "2*c2"),
    ("h3", "c1", "0"),
    ("h3", "c2", "0"),
    ("h3", "c3", "2*c3"),
    ("h3", "u9", "2*u9"),
    ("h3", "v4", "v4"),
    ("h2", "c1", "0"),
    ("h2", "c2", "0"),
    ("h2", "c3", "0"),
    ("h2", "u9", "0"),
    ("h2", "v4", "0"),
    ("h2", "c4", "2*c4"),
    ("h2", "u2", "2*u2"),
    ("h2", "u6", "u6"),
    ("h2", "v3", "v3"),
    ("h2", "v7", "v7"),
    ("h2", "w3", "w3"),
];

const F4_PAIRINGS: &[(&str, &str, &str)] = &[
    ("c1", "h1", "-c1"),
    ("c4", "h2", "-2*c4"),
    ("c4", "h1", "0"),
    ("c3", "h3", "-2*c3"),
    ("c3", "h1", "0"),
    ("c3", "h2", "0"),
    ("c2", "h4", "-2*c2"),
    ("c2", "h1", "0"),
    ("c2", "h2", "0"),
    ("c2", "h3", "0"),
];

/// Each `c_i` is nilradical-invariant and a Cartan weight vector with
/// nonzero weight; then the stated eigen-equations and pairings.
pub fn semicenter_witness_suite(
    t: &StructureTable,
    fam: &InvariantFamily,
    overlay: &Corrections,
) -> Result<SuiteReport, AlgebraError> {
    let mut rep = SuiteReport::new("weights", t.name(), t.field());
    let key = fam.family.key();
    let reg = t.registry();
    for (name, c) in fam.cs() {
        let inv = is_invariant(t, c, t.nil())?;
        let w = weight_of(t, c)?;
        let anchor = format!("ad x_i({name}) = 0, ad h_k({name}) = w_k {name}, w != 0");
        let id = format!("{key}.semicenter.{name}");
        rep.push(match (&inv.failure, &w) {
            (Some((i, r)), _) => {
                ClaimResult::fail(id, anchor, format!("ad {}({name}) = {}", t.label(*i), r.display(reg)))
            }
            (None, Weight::NotSemiInvariant { cartan }) => {
                ClaimResult::fail(id, anchor, format!("ad {}({name}) is not a multiple of {name}", t.label(*cartan)))
            }
            (None, Weight::Vector(v)) if !w.is_nonzero() => {
                ClaimResult::fail(id, anchor, format!("weight {}", fmt_weight(v)))
            }
            (None, Weight::Vector(v)) => {
                ClaimResult::verified(id, anchor).with_detail(format!("weight {}", fmt_weight(v)))
            }
        });
    }
    let (facts, pairings) = match fam.family {
        Family::G2 => (G2_WEIGHT_FACTS, G2_PAIRINGS),
        Family::F4 => (F4_WEIGHT_FACTS, F4_PAIRINGS),
        Family::Cn => (&[][..], &[][..]),
    };
    let aliases = fam.aliases();
    for (h, e, value) in facts {
        let computed = ad_apply(t, t.index(h)?, fam.element(e)?)?;
        let stated = fam.eval(value)?;
        let id = format!("{key}.weight.{h}.{e}");
        let anchor = format!("ad {h}({e}) = {value}");
        rep.push(judge_equal(&id, &anchor, &stated, &computed, reg, &aliases, overlay));
    }
    for (c, h, value) in pairings {
        let hv = Polynomial::var(t.field(), t.index(h)?);
        let computed = poisson_bracket(t, fam.element(c)?, &hv)?;
        let stated = fam.eval(value)?;
        let id = format!("{key}.pairing.{c}.{h}");
        let anchor = format!("ad {c}({h}) = {value}");
        rep.push(judge_equal(&id, &anchor, &stated, &computed, reg, &aliases, overlay));
    }
    Ok(rep)
}

fn fmt_weight(v: &[Coeff]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}
