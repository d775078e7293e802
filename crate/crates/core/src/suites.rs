//! Suite selection and dispatch shared by the command line and the tests.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::catalog::{cn_borel, f4_borel, g2_borel, CatalogAlgebra, Family, TranscriptionConflict};
use crate::charp::{
    frobenius_membership_suite, jacobian_identity_suite, oracle_degree, sp_generators, theorem_generator_audit,
    ORACLE_CAP,
};
use crate::corrections::Corrections;
use crate::error::AlgebraError;
use crate::field::Field;
use crate::invariants::{
    brute_force_invariant_space, build_cn_invariants, build_family, compare_with_generated, verify_relation_chain,
    verify_triangle_property, GeneratedComparison, InvariantFamily,
};
use crate::liealg::{Level, MatrixRealization, StructureTable};
use crate::pbw::{p_center_suite, z_lift_audit};
use crate::poisson::{ad_apply, semicenter_witness_suite};
use crate::poly::Polynomial;
use crate::report::{ClaimResult, SuiteReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Jacobi,
    Invariance,
    Chains,
    Triangle,
    Weights,
    Frobenius,
    Jacobians,
    Pbw,
    Oracle,
    Audit,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Jacobi,
        Suite::Invariance,
        Suite::Chains,
        Suite::Triangle,
        Suite::Weights,
        Suite::Frobenius,
        Suite::Jacobians,
        Suite::Pbw,
        Suite::Oracle,
        Suite::Audit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::Invariance => "invariance",
            Suite::Chains => "chains",
            Suite::Triangle => "triangle",
            Suite::Weights => "weights",
            Suite::Frobenius => "frobenius",
            Suite::Jacobians => "jacobians",
            Suite::Pbw => "pbw",
            Suite::Oracle => "oracle",
            Suite::Audit => "audit",
        }
    }

    pub fn parse(s: &str) -> Result<Suite, AlgebraError> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| AlgebraError::Parse(format!("unknown suite `{s}`")))
    }
}

/// An algebra prepared for verification: the table over the run's field,
/// its invariant family when one is known, and catalog metadata.
#[derive(Debug, Clone)]
pub struct Target {
    pub family: Option<Family>,
    pub level: Level,
    pub table: StructureTable,
    pub invariants: Option<InvariantFamily>,
    pub realization: Option<MatrixRealization>,
    pub conflicts: Vec<TranscriptionConflict>,
    pub applied: Vec<String>,
}

impl Target {
    /// A built-in algebra at the given level over `field`.
    pub fn catalog(
        family: Family,
        n: usize,
        level: Level,
        field: Field,
        overlay: &Corrections,
    ) -> Result<Target, AlgebraError> {
        let cat: CatalogAlgebra = match family {
            Family::G2 => g2_borel(overlay)?,
            Family::F4 => f4_borel(overlay)?,
            Family::Cn => cn_borel(n)?,
        };
        if let Field::Prime(p) = field {
            cat.table.check_prime(p)?;
        }
        let table = cat.at(level, field)?;
        let applied = cat
            .applied
            .iter()
            .map(|b| format!("{}: [{}, {}] {} -> {}", b.algebra, b.lhs.0, b.lhs.1, b.printed, b.corrected))
            .collect();
        Target::assemble(Some(family), level, table, cat.realization, cat.conflicts, applied)
    }

    /// A table read from elsewhere; `family` selects the invariants to check.
    pub fn custom(table: StructureTable, family: Option<Family>) -> Result<Target, AlgebraError> {
        let level = if table.cartan().is_empty() { Level::Nilradical } else { Level::Borel };
        Target::assemble(family, level, table, None, Vec::new(), Vec::new())
    }

    fn assemble(
        family: Option<Family>,
        level: Level,
        table: StructureTable,
        realization: Option<MatrixRealization>,
        conflicts: Vec<TranscriptionConflict>,
        applied: Vec<String>,
    ) -> Result<Target, AlgebraError> {
        let invariants = match family {
            Some(f) => Some(family_for_table(f, &table)?),
            None => None,
        };
        Ok(Target { family, level, table, invariants, realization, conflicts, applied })
    }

    pub fn field(&self) -> Field {
        self.table.field()
    }

    pub fn key(&self) -> &'static str {
        self.family.map(Family::key).unwrap_or("custom")
    }

    /// Whether `suite` can run on this target.
    pub fn supports(&self, suite: Suite) -> bool {
        let fam = self.invariants.is_some();
        let char_p = self.field() != Field::Rational;
        let borel = self.level == Level::Borel;
        match suite {
            Suite::Jacobi => true,
            Suite::Invariance | Suite::Oracle => fam,
            Suite::Chains | Suite::Triangle | Suite::Jacobians => {
                matches!(self.family, Some(Family::G2 | Family::F4))
            }
            Suite::Weights | Suite::Audit => fam && borel,
            Suite::Frobenius => fam && char_p,
            Suite::Pbw => fam || char_p,
        }
    }

    pub fn applicable_suites(&self) -> Vec<Suite> {
        Suite::ALL.into_iter().filter(|s| self.supports(*s)).collect()
    }
}

/// The nilradical of C_n has dimension n^2, which fixes n when the Cartan
/// part is absent.
fn family_for_table(f: Family, t: &StructureTable) -> Result<InvariantFamily, AlgebraError> {
    if f == Family::Cn && t.cartan().is_empty() {
        let n = (1..=t.dim()).find(|n| n * n == t.dim()).ok_or_else(|| {
            AlgebraError::InvariantConvention(format!("a C_n nilradical has square dimension, found {}", t.dim()))
        })?;
        return Ok(build_cn_invariants(t, n)?.0);
    }
    build_family(f, t)
}

/// Tuning knobs for the bounded suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_degree: Option<u32>,
    pub oracle_cap: usize,
    /// Prime for the literal Jacobian instantiation.
    pub literal_prime: Option<u32>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_degree: None, oracle_cap: ORACLE_CAP, literal_prime: Some(3) }
    }
}

fn need(x: &Option<InvariantFamily>, suite: Suite) -> Result<&InvariantFamily, AlgebraError> {
    x.as_ref()
        .ok_or_else(|| AlgebraError::InvariantConvention(format!("suite {} needs an invariant family", suite.name())))
}

pub fn run_suite(
    target: &Target,
    suite: Suite,
    overlay: &Corrections,
    opts: &SuiteOptions,
) -> Result<SuiteReport, AlgebraError> {
    if !target.supports(suite) {
        return Err(AlgebraError::InvariantConvention(format!(
            "suite {} does not apply to {} over {}",
            suite.name(),
            target.table.name(),
            target.field()
        )));
    }
    let t = &target.table;
    match suite {
        Suite::Jacobi => Ok(jacobi_suite(target)),
        Suite::Invariance => invariance_suite(t, need(&target.invariants, suite)?, target.key()),
        Suite::Chains => verify_relation_chain(t, need(&target.invariants, suite)?, overlay),
        Suite::Triangle => verify_triangle_property(t, need(&target.invariants, suite)?, overlay),
        Suite::Weights => semicenter_witness_suite(t, need(&target.invariants, suite)?, overlay),
        Suite::Frobenius => {
            let p = t.field().characteristic();
            frobenius_membership_suite(t, need(&target.invariants, suite)?, p)
        }
        Suite::Jacobians => {
            let fam = need(&target.invariants, suite)?;
            let literal = match (target.family, opts.literal_prime) {
                (Some(Family::F4), Some(q)) if t.check_prime(q).is_ok() => Some(q),
                _ => None,
            };
            jacobian_identity_suite(t, fam, literal)
        }
        Suite::Pbw => {
            let mut rep = SuiteReport::new("pbw", t.name(), t.field());
            if let Field::Prime(p) = t.field() {
                rep.claims.extend(p_center_suite(t, p)?.claims);
            }
            if let Some(fam) = &target.invariants {
                rep.claims.extend(z_lift_audit(t, fam)?.claims);
            }
            Ok(rep)
        }
        Suite::Oracle => oracle_suite(t, need(&target.invariants, suite)?, opts.max_degree, opts.oracle_cap),
        Suite::Audit => {
            let p = match t.field() {
                Field::Rational => None,
                Field::Prime(p) => Some(p),
            };
            theorem_generator_audit(t, need(&target.invariants, suite)?, p)
        }
    }
}

/// Jacobi identity over all triples, transcription consistency, Borel
/// shape and, for matrix algebras, agreement with the commutators.
pub fn jacobi_suite(target: &Target) -> SuiteReport {
    let t = &target.table;
    let key = target.key();
    let reg = t.registry();
    let mut rep = SuiteReport::new("jacobi", t.name(), t.field());
    let j = t.jacobi_check();
    let anchor = format!("[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 on all {} triples", j.triples);
    rep.push(match j.failures.first() {
        None => ClaimResult::verified(format!("{key}.jacobi"), anchor),
        Some(f) => {
            let [a, b, c] = f.triple;
            ClaimResult::fail(
                format!("{key}.jacobi"),
                anchor,
                format!(
                    "{} failing triples; witness ({}, {}, {}) with residual {}",
                    j.failures.len(),
                    reg.name(a),
                    reg.name(b),
                    reg.name(c),
                    f.residual.display(reg)
                ),
            )
        }
    });
    let bad = t.borel_structure_violations();
    rep.push(ClaimResult::from_bool(
        format!("{key}.borel-shape"),
        "[h, h'] = 0, [h, x] in span(x), [n, n] in n",
        bad.is_empty(),
        || {
            let (a, b) = bad[0];
            format!(
                "[{}, {}] = {}",
                reg.name(a),
                reg.name(b),
                t.bracket(a, b).map(|p| p.to_text(reg)).unwrap_or_default()
            )
        },
    ));
    if target.family.is_some() && target.family != Some(Family::Cn) {
        rep.push(ClaimResult::from_bool(
            format!("{key}.transcription"),
            "printed table is antisymmetric where both orientations are printed",
            target.conflicts.is_empty(),
            || {
                let c = &target.conflicts[0];
                format!("{} conflicts, first [{}, {}]", target.conflicts.len(), c.lhs.0, c.lhs.1)
            },
        ));
    }
    if let (Some(real), Level::Borel) = (&target.realization, target.level) {
        let mut failure = None;
        'outer: for i in 0..t.dim() {
            for j in i + 1..t.dim() {
                let m = real.commutator(i, j);
                match real.coordinates(&m) {
                    Ok(row) if &row == t.rational_row(i, j) => {}
                    Ok(_) | Err(_) => {
                        failure =
                            Some(format!("[{}, {}] differs from the matrix commutator", reg.name(i), reg.name(j)));
                        break 'outer;
                    }
                }
            }
        }
        rep.push(match failure {
            None => ClaimResult::verified(format!("{key}.realization"), "[x_i, x_j] = x_i x_j - x_j x_i as matrices"),
            Some(w) => ClaimResult::fail(format!("{key}.realization"), "[x_i, x_j] = x_i x_j - x_j x_i as matrices", w),
        });
    }
    rep
}

/// `ad x_i(c_j) = 0` for every nilradical generator and invariant.
pub fn invariance_suite(t: &StructureTable, fam: &InvariantFamily, key: &str) -> Result<SuiteReport, AlgebraError> {
    let fam = if fam.field == t.field() { fam.clone() } else { fam.over(t.field())? };
    let mut rep = SuiteReport::new("invariance", t.name(), t.field());
    let reg = t.registry();
    for (name, c) in fam.cs() {
        for &i in t.nil() {
            let r = ad_apply(t, i, c)?;
            let x = t.label(i);
            rep.push(ClaimResult::from_bool(
                format!("{key}.invariance.{x}.{name}"),
                format!("ad {x}({name}) = 0"),
                r.is_zero(),
                || format!("ad {x}({name}) = {}", r.display(reg)),
            ));
        }
    }
    Ok(rep)
}

/// The oracle's generators: the `c_i`, plus `x_i^p` for the non-exempt
/// nilradical variables in characteristic p.
pub fn oracle_generators(t: &StructureTable, fam: &InvariantFamily) -> Result<Vec<(String, Polynomial)>, AlgebraError> {
    let mut gens: Vec<(String, Polynomial)> = fam.cs().into_iter().map(|(n, c)| (n.to_string(), c.clone())).collect();
    if let Field::Prime(p) = t.field() {
        let sp = sp_generators(t, fam.exempt, p, Level::Nilradical)?;
        gens.extend(sp.generators.into_iter().map(|g| (g.name, g.poly)));
    }
    Ok(gens)
}

/// Brute-force invariant spaces against generated spans, degrees `1..=dmax`.
pub fn oracle_comparisons(
    t: &StructureTable,
    fam: &InvariantFamily,
    max_degree: Option<u32>,
    cap: usize,
) -> Result<Vec<GeneratedComparison>, AlgebraError> {
    let fam = if fam.field == t.field() { fam.clone() } else { fam.over(t.field())? };
    let gens = oracle_generators(t, &fam)?;
    let dmax = max_degree.unwrap_or_else(|| oracle_degree(fam.family, t.nil().len()));
    (1..=dmax)
        .map(|d| {
            let basis = brute_force_invariant_space(t, d, t.nil(), t.nil(), cap)?;
            Ok(compare_with_generated(&basis, &gens, d, t.field()))
        })
        .collect()
}

/// Per degree: the brute-force invariant space equals the span of products
/// of the generators (the `c_i`, plus `x_i^p` in characteristic p).
pub fn oracle_suite(
    t: &StructureTable,
    fam: &InvariantFamily,
    max_degree: Option<u32>,
    cap: usize,
) -> Result<SuiteReport, AlgebraError> {
    let mut rep = SuiteReport::new("oracle", t.name(), t.field());
    let key = fam.family.key();
    let reg = t.registry();
    let mut described = format!("c1..c{}", fam.rank());
    if let Field::Prime(p) = t.field() {
        described.push_str(&format!(" and x^{p}"));
    }
    for cmp in oracle_comparisons(t, fam, max_degree, cap)? {
        let d = cmp.degree;
        let id = format!("{key}.oracle.degree.{d}");
        let anchor = format!("dim S(n)^n in degree {d} = dim span of products of {described}");
        rep.push(if cmp.equal() {
            ClaimResult::verified(id, anchor).with_detail(format!("dimension {}", cmp.oracle_dim))
        } else {
            ClaimResult::fail(
                id,
                anchor,
                format!(
                    "oracle {} vs generated {}{}",
                    cmp.oracle_dim,
                    cmp.generated_dim,
                    cmp.witness.map(|w| format!(", witness {}", w.display(reg))).unwrap_or_default()
                ),
            )
        });
    }
    Ok(rep)
}

/// Oracle dimensions recorded in an oracle suite, in degree order.
pub fn oracle_dimensions(rep: &SuiteReport) -> Vec<usize> {
    rep.claims.iter().filter_map(|c| c.detail.as_deref()?.strip_prefix("dimension ")?.parse().ok()).collect()
}
