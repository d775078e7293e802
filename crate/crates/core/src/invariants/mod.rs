//! Named invariants and auxiliary elements of the catalog algebras, the
//! relation chains they satisfy, and a brute-force invariant oracle.

mod cn;
mod oracle;

pub use cn::{build_cn_invariants, BlockMatrixM, CnConvention};
pub use oracle::{brute_force_invariant_space, compare_with_generated, monomials_of_degree, GeneratedComparison};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::catalog::Family;
use crate::corrections::Corrections;
use crate::error::AlgebraError;
use crate::expr::eval_expr;
use crate::field::Field;
use crate::liealg::StructureTable;
use crate::poisson::{ad_apply, poisson_bracket};
use crate::poly::{Polynomial, VarRegistry};
use crate::report::{judge_equal, ClaimResult, SuiteReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedElement {
    pub name: String,
    /// Defining expression over variables and earlier elements.
    pub definition: String,
    pub poly: Polynomial,
}

impl NamedElement {
    pub fn degree(&self) -> u32 {
        self.poly.degree().unwrap_or(0)
    }
}

/// The invariants `c1..cr` of an algebra together with the auxiliary
/// elements used to build and certify them. Polynomials live in the Borel
/// registry.
#[derive(Debug, Clone)]
pub struct InvariantFamily {
    pub family: Family,
    pub algebra: String,
    pub field: Field,
    pub registry: VarRegistry,
    pub elements: Vec<NamedElement>,
    /// Names of the invariants, in order `c1, c2, ...`.
    pub invariants: Vec<String>,
    /// The variable equal to `c1`; exempt from p-th power patterns.
    pub exempt: usize,
    pub cn: Option<(CnConvention, BlockMatrixM)>,
}

impl InvariantFamily {
    fn from_definitions(
        family: Family,
        t: &StructureTable,
        defs: &[(&str, &str)],
        invariants: &[&str],
    ) -> Result<Self, AlgebraError> {
        let reg = t.registry().clone();
        let mut elements: Vec<NamedElement> = Vec::new();
        for (name, def) in defs {
            let aliases: Vec<(&str, &Polynomial)> = elements.iter().map(|e| (e.name.as_str(), &e.poly)).collect();
            let poly = eval_expr(def, &reg, &aliases, Field::Rational)?;
            elements.push(NamedElement { name: name.to_string(), definition: def.to_string(), poly });
        }
        let mut fam = InvariantFamily {
            family,
            algebra: t.name().to_string(),
            field: Field::Rational,
            registry: reg,
            elements,
            invariants: invariants.iter().map(|s| s.to_string()).collect(),
            exempt: 0,
            cn: None,
        };
        let c1 = fam.c(1).clone();
        fam.exempt = match (c1.len(), c1.leading()) {
            (1, Some((m, _))) if m.degree() == 1 => m.max_var().expect("linear"),
            _ => return Err(AlgebraError::InvariantConvention("c1 is not a single variable".to_string())),
        };
        if t.field() != Field::Rational {
            fam = fam.over(t.field())?;
        }
        Ok(fam)
    }

    pub fn get(&self, name: &str) -> Option<&Polynomial> {
        self.elements.iter().find(|e| e.name == name).map(|e| &e.poly)
    }

    pub fn element(&self, name: &str) -> Result<&Polynomial, AlgebraError> {
        self.get(name).ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    /// The invariant `c_i`, 1-based.
    pub fn c(&self, i: usize) -> &Polynomial {
        self.get(&self.invariants[i - 1]).expect("invariant present")
    }

    pub fn cs(&self) -> Vec<(&str, &Polynomial)> {
        self.invariants.iter().map(|n| (n.as_str(), self.get(n).expect("invariant present"))).collect()
    }

    pub fn aliases(&self) -> Vec<(&str, &Polynomial)> {
        self.elements.iter().map(|e| (e.name.as_str(), &e.poly)).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// The same family with coefficients reduced into `field`.
    pub fn over(&self, field: Field) -> Result<InvariantFamily, AlgebraError> {
        let mut f = self.clone();
        f.field = field;
        for e in &mut f.elements {
            e.poly = e.poly.to_field(field)?;
        }
        Ok(f)
    }

    /// Evaluates an expression in this family's names and variables.
    pub fn eval(&self, s: &str) -> Result<Polynomial, AlgebraError> {
        eval_expr(s, &self.registry, &self.aliases(), self.field)
    }
}

/// `c1, c2` and the elements `v2..v5` with `ad v_i(x_j) = delta_ij c1`.
pub fn build_g2_invariants(t: &StructureTable) -> Result<InvariantFamily, AlgebraError> {
    const DEFS: &[(&str, &str)] = &[
        ("c1", "x6"),
        ("c2", "3*x1*x6 - 3*x2*x5 + x3^2"),
        ("v2", "-1/3*x3"),
        ("v3", "1/3*x2"),
        ("v4", "x5"),
        ("v5", "-x4"),
    ];
    InvariantFamily::from_definitions(Family::G2, t, DEFS, &["c1", "c2"])
}

const F4_DEFS: &[(&str, &str)] = &[
    ("c1", "x24"),
    ("c2", "2*x16*x24 - 2*x18*x23 - x20*x22 + x21^2"),
    ("v4", "-2*x13*x24 + 2*x15*x23 + x17*x22 - x19*x21"),
    ("u9", "x9*x24 - x11*x23 + x14*x22 - 1/2*x19^2"),
    ("c3", "c2*u9 + 1/2*v4^2"),
    ("v7", "2*x10*x24 - 2*x12*x23 + x19*x20 - x17*x21"),
    ("u6", "x6*x24 - x8*x23 + x14*x21 - 1/2*x17*x19"),
    ("v3", "-c2*u6 + 1/2*v4*v7"),
    ("u2", "x2*x24 - x5*x23 - 1/2*x14*x20 + 1/4*x17^2"),
    ("w3", "u9*v7 + u6*v4"),
    ("c4", "-u2*c3 + 1/2*u6*v3 + 1/4*v7*w3"),
    ("v23", "x1"),
    ("v22", "x5"),
    ("v21", "x8"),
    ("v20", "-1/2*x11"),
    ("v19", "x12"),
    ("v18", "-x14"),
    ("v17", "-x15"),
    ("v15", "x17"),
    ("v14", "x18"),
    ("v12", "-x19"),
    ("v11", "1/2*x20"),
    ("v8", "x21"),
    ("v5", "-x22"),
    ("v1", "-x23"),
    ("v13", "2*x4*x24 - 2*x17*x18 + 2*x15*x20 - 2*x12*x21"),
    ("v10", "-2*x7*x24 + 2*x18*x19 + 2*x12*x22 - 2*x15*x21"),
    ("u3", "-x3*x24 - x11*x21 + x8*x22 - x15*x19"),
    ("v6", "-c2*u3 + 1/2*v4*v10"),
];

pub fn build_f4_invariants(t: &StructureTable) -> Result<InvariantFamily, AlgebraError> {
    InvariantFamily::from_definitions(Family::F4, t, F4_DEFS, &["c1", "c2", "c3", "c4"])
}

/// Builds the family matching the table's catalog family.
pub fn build_family(family: Family, t: &StructureTable) -> Result<InvariantFamily, AlgebraError> {
    match family {
        Family::G2 => build_g2_invariants(t),
        Family::F4 => build_f4_invariants(t),
        Family::Cn => {
            let n = t.cartan().len();
            build_cn_invariants(t, n).map(|(f, _)| f)
        }
    }
}

/// `ad x_g(element) = value` for each listed generator, zero for every
/// other nilradical generator.
struct Chain {
    element: &'static str,
    nonzero: &'static [(&'static str, &'static str)],
}

const F4_CHAINS: &[Chain] = &[
    Chain { element: "v4", nonzero: &[("x4", "-c2")] },
    Chain { element: "u9", nonzero: &[("x4", "v4")] },
    Chain { element: "v7", nonzero: &[("x3", "-v4"), ("x7", "-c2")] },
    Chain { element: "u6", nonzero: &[("x3", "-u9"), ("x4", "-1/2*v7"), ("x7", "-1/2*v4")] },
    Chain { element: "v3", nonzero: &[("x3", "-c3")] },
    Chain { element: "u2", nonzero: &[("x3", "-u6"), ("x7", "-1/2*v7")] },
    Chain { element: "w3", nonzero: &[("x4", "v3"), ("x7", "-c3")] },
    Chain { element: "v10", nonzero: &[("x2", "-v7"), ("x6", "-v4"), ("x10", "-c2")] },
    Chain { element: "u3", nonzero: &[("x2", "-u6"), ("x4", "-1/2*v10"), ("x6", "u9"), ("x10", "-1/2*v4")] },
];

fn prefix(fam: &InvariantFamily) -> &'static str {
    fam.family.key()
}

/// Checks every stated derivation identity and each "zero for all other
/// generators" complement.
pub fn verify_relation_chain(
    t: &StructureTable,
    fam: &InvariantFamily,
    overlay: &Corrections,
) -> Result<SuiteReport, AlgebraError> {
    let mut rep = SuiteReport::new("chains", t.name(), t.field());
    let chains: &[Chain] = match fam.family {
        Family::F4 => F4_CHAINS,
        _ => &[],
    };
    let aliases = fam.aliases();
    for ch in chains {
        let f = fam.element(ch.element)?;
        for (g, value) in ch.nonzero {
            let gi = t.index(g)?;
            let stated = fam.eval(value)?;
            let computed = ad_apply(t, gi, f)?;
            let id = format!("{}.chain.{}.{}", prefix(fam), g, ch.element);
            let anchor = format!("ad {}({}) = {}", g, ch.element, value);
            rep.push(judge_equal(&id, &anchor, &stated, &computed, t.registry(), &aliases, overlay));
        }
        let listed: Vec<&str> = ch.nonzero.iter().map(|(g, _)| *g).collect();
        let mut failure = None;
        for &i in t.nil() {
            if listed.contains(&t.label(i)) {
                continue;
            }
            let r = ad_apply(t, i, f)?;
            if !r.is_zero() {
                failure = Some(format!("ad {}({}) = {}", t.label(i), ch.element, r.display(t.registry())));
                break;
            }
        }
        let id = format!("{}.chain.others.{}", prefix(fam), ch.element);
        let anchor = format!("ad x_i({}) = 0 for i not in {{{}}}", ch.element, listed.join(", "));
        rep.push(match failure {
            None => ClaimResult::verified(id, anchor),
            Some(w) => ClaimResult::fail(id, anchor, w),
        });
    }
    Ok(rep)
}

/// The index set and expected diagonal values of the triangularity
/// property `ad v_i(x_j) = 0 (i < j)`, `= c_k (i = j)`.
fn triangle_layout(fam: &InvariantFamily) -> Vec<(usize, &'static str)> {
    match fam.family {
        Family::G2 => (2..=5).map(|i| (i, "c1")).collect(),
        Family::F4 => (1..=24)
            .filter(|i| ![2, 9, 16, 24].contains(i))
            .map(|i| {
                let c = match i {
                    4 | 7 | 10 | 13 => "c2",
                    3 | 6 => "c3",
                    _ => "c1",
                };
                (i, c)
            })
            .collect(),
        Family::Cn => Vec::new(),
    }
}

pub fn verify_triangle_property(
    t: &StructureTable,
    fam: &InvariantFamily,
    overlay: &Corrections,
) -> Result<SuiteReport, AlgebraError> {
    let mut rep = SuiteReport::new("triangle", t.name(), t.field());
    let layout = triangle_layout(fam);
    let aliases = fam.aliases();
    let zero = Polynomial::zero(t.field());
    for (a, &(i, c)) in layout.iter().enumerate() {
        let v = fam.element(&format!("v{i}"))?;
        for &(j, _) in &layout[a..] {
            let xj = Polynomial::var(t.field(), t.index(&format!("x{j}"))?);
            let computed = poisson_bracket(t, v, &xj)?;
            let (stated, value) = if i == j { (fam.element(c)?, c) } else { (&zero, "0") };
            let id = format!("{}.triangle.{}.{}", prefix(fam), i, j);
            let anchor = format!("ad v{i}(x{j}) = {value}");
            rep.push(judge_equal(&id, &anchor, stated, &computed, t.registry(), &aliases, overlay));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{f4_borel, g2_borel};
    use crate::poisson::is_invariant;
    use crate::report::Status;

    fn f4() -> (StructureTable, InvariantFamily) {
        let t = f4_borel(&Corrections::builtin()).unwrap().table;
        let fam = build_f4_invariants(&t).unwrap();
        (t, fam)
    }

    #[test]
    fn g2_family() {
        let t = g2_borel(&Corrections::builtin()).unwrap().table;
        let fam = build_g2_invariants(&t).unwrap();
        assert_eq!(fam.c(2).len(), 3);
        assert_eq!(fam.c(2).degree(), Some(2));
        assert_eq!(t.label(fam.exempt), "x6");
        let v3 = fam.get("v3").unwrap();
        let x3 = Polynomial::var(Field::Rational, t.index("x3").unwrap());
        assert_eq!(&poisson_bracket(&t, v3, &x3).unwrap(), fam.c(1));
        let rep = verify_triangle_property(&t, &fam, &Corrections::builtin()).unwrap();
        assert_eq!(rep.claims.len(), 10);
        assert!(rep.passed());
    }

    #[test]
    fn f4_family_degrees_and_invariance() {
        let (t, fam) = f4();
        let degs: Vec<u32> = (1..=4).map(|i| fam.c(i).degree().unwrap()).collect();
        assert_eq!(degs, [1, 2, 4, 6]);
        assert_eq!(fam.c(4).len(), 199);
        for (_, c) in fam.cs() {
            assert!(c.is_homogeneous());
            assert!(is_invariant(&t, c, t.nil()).unwrap().invariant());
        }
        let x4 = t.index("x4").unwrap();
        assert_eq!(ad_apply(&t, x4, fam.get("v4").unwrap()).unwrap(), -fam.c(2));
        assert_eq!(&ad_apply(&t, x4, fam.get("u9").unwrap()).unwrap(), fam.get("v4").unwrap());
    }

    #[test]
    fn f4_chains() {
        let (t, fam) = f4();
        let rep = verify_relation_chain(&t, &fam, &Corrections::builtin()).unwrap();
        assert_eq!(rep.claims.len(), 28);
        assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        assert_eq!(rep.find("f4.chain.x3.u6").unwrap().status, Status::DerivedWithNote);
        assert_eq!(rep.count(Status::DerivedWithNote), 1);
        let bare = verify_relation_chain(&t, &fam, &Corrections::default()).unwrap();
        assert_eq!(bare.failures().count(), 1);
    }

    #[test]
    fn f4_triangle() {
        let (t, fam) = f4();
        let rep = verify_triangle_property(&t, &fam, &Corrections::builtin()).unwrap();
        assert_eq!(rep.claims.len(), 210);
        assert!(rep.passed());
        assert_eq!(rep.find("f4.triangle.8.8").unwrap().status, Status::DerivedWithNote);
        assert_eq!(rep.find("f4.triangle.7.7").unwrap().status, Status::Verified);
    }

    #[test]
    fn family_mod_p() {
        let (t, fam) = f4();
        let t3 = t.over(Field::Prime(3)).unwrap();
        let fam3 = build_f4_invariants(&t3).unwrap();
        assert_eq!(fam3.field, Field::Prime(3));
        assert_eq!(fam3.c(3), &fam.c(3).to_field(Field::Prime(3)).unwrap());
        for (_, c) in fam3.cs() {
            assert!(is_invariant(&t3, c, t3.nil()).unwrap().invariant());
        }
    }
}
