//! Verification report types shared by every suite.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::corrections::Corrections;
use crate::poly::{Polynomial, VarRegistry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    /// The stated value is contradicted, a correction overlay entry covers
    /// it, and the derived value holds.
    DerivedWithNote,
    /// Proof content outside the reach of finite checks.
    AssertedNotVerified,
    Fail,
}

impl Status {
    pub fn is_pass(self) -> bool {
        self != Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    /// The statement being checked, as a formula.
    pub anchor: String,
    pub status: Status,
    /// Residual, witness or note; always present for failures.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl ClaimResult {
    pub fn verified(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        ClaimResult { id: id.into(), anchor: anchor.into(), status: Status::Verified, detail: None }
    }

    pub fn fail(id: impl Into<String>, anchor: impl Into<String>, detail: impl Into<String>) -> Self {
        ClaimResult { id: id.into(), anchor: anchor.into(), status: Status::Fail, detail: Some(detail.into()) }
    }

    pub fn asserted(id: impl Into<String>, anchor: impl Into<String>, detail: impl Into<String>) -> Self {
        ClaimResult {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::AssertedNotVerified,
            detail: Some(detail.into()),
        }
    }

    pub fn from_bool(
        id: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Self::verified(id, anchor)
        } else {
            Self::fail(id, anchor, detail())
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Compares a computed polynomial with the stated one. A mismatch covered
/// by a claim entry of the overlay becomes [`Status::DerivedWithNote`] when
/// the computed value equals the entry's derived value.
#[allow(clippy::too_many_arguments)]
pub fn judge_equal(
    id: &str,
    anchor: &str,
    stated: &Polynomial,
    computed: &Polynomial,
    reg: &VarRegistry,
    aliases: &[(&str, &Polynomial)],
    overlay: &Corrections,
) -> ClaimResult {
    if stated == computed {
        return ClaimResult::verified(id, anchor);
    }
    if let Some(c) = overlay.claim(id) {
        if let Ok(derived) = crate::expr::eval_expr(&c.derived, reg, aliases, computed.field()) {
            if derived == *computed {
                return ClaimResult {
                    id: id.to_string(),
                    anchor: anchor.to_string(),
                    status: Status::DerivedWithNote,
                    detail: Some(alloc::format!("stated {}, derived {}: {}", c.printed, c.derived, c.note)),
                };
            }
        }
    }
    let residual = computed - stated;
    ClaimResult::fail(id, anchor, alloc::format!("residual (computed - stated) = {}", residual.display(reg)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub algebra: String,
    pub field: String,
    pub claims: Vec<ClaimResult>,
}

impl SuiteReport {
    pub fn new(suite: &str, algebra: &str, field: crate::field::Field) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            algebra: algebra.to_string(),
            field: field.to_string(),
            claims: Vec::new(),
        }
    }

    pub fn push(&mut self, c: ClaimResult) {
        self.claims.push(c);
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status.is_pass())
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.claims.iter().filter(|c| c.status == s).count()
    }

    pub fn find(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub derived_with_note: usize,
    pub asserted_not_verified: usize,
    pub fail: usize,
}

impl Summary {
    pub fn of(suites: &[SuiteReport]) -> Self {
        let mut s = Summary::default();
        for c in suites.iter().flat_map(|r| &r.claims) {
            match c.status {
                Status::Verified => s.verified += 1,
                Status::DerivedWithNote => s.derived_with_note += 1,
                Status::AssertedNotVerified => s.asserted_not_verified += 1,
                Status::Fail => s.fail += 1,
            }
        }
        s
    }
}

/// A full run: configuration echo, overlay fingerprint, suites and counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: BTreeMap<String, String>,
    pub corrections_sha256: String,
    pub corrections_applied: Vec<String>,
    pub suites: Vec<SuiteReport>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts suites by (suite, algebra, field) so the output does not depend
    /// on execution order.
    pub fn new(
        config: BTreeMap<String, String>,
        corrections_sha256: String,
        corrections_applied: Vec<String>,
        mut suites: Vec<SuiteReport>,
    ) -> Self {
        suites.sort_by(|a, b| (&a.suite, &a.algebra, &a.field).cmp(&(&b.suite, &b.algebra, &b.field)));
        let summary = Summary::of(&suites);
        VerificationReport { config, corrections_sha256, corrections_applied, suites, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_markdown(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "# Verification report\n");
        for (k, v) in &self.config {
            let _ = writeln!(out, "- {k}: `{v}`");
        }
        let _ = writeln!(out, "- corrections sha256: `{}`", self.corrections_sha256);
        for c in &self.corrections_applied {
            let _ = writeln!(out, "- correction applied: {c}");
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "\n**{} verified, {} derived with note, {} asserted not verified, {} failed**",
            s.verified, s.derived_with_note, s.asserted_not_verified, s.fail
        );
        for suite in &self.suites {
            let _ = writeln!(out, "\n## {} / {} / {}\n", suite.suite, suite.algebra, suite.field);
            let _ = writeln!(out, "| claim | statement | status | detail |");
            let _ = writeln!(out, "|---|---|---|---|");
            for c in &suite.claims {
                let status = match c.status {
                    Status::Verified => "verified",
                    Status::DerivedWithNote => "derived-with-note",
                    Status::AssertedNotVerified => "asserted-not-verified",
                    Status::Fail => "FAIL",
                };
                let detail = c.detail.as_deref().unwrap_or("").replace('|', "\\|");
                let _ = writeln!(out, "| {} | {} | {} | {} |", c.id, c.anchor.replace('|', "\\|"), status, detail);
            }
        }
        out
    }
}
