use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{CatalogEntry, Claim};
use crate::complexes::{
    default_max_degree, euler_characteristic_check, ozone_vs_hamiltonian, ph_dims, sealed_k1_dims, vacancy_check,
    Koszul,
};
use crate::error::Result;
use crate::hilbert::{closed_form_ph, expand_i64};
use crate::jacobian::{gcd_partials, gkdim};
use crate::poisson::{rgt, PoissonStructure};
use crate::textio::format_poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Computed and reported, but the tables make no claim to grade against.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub expected: String,
    pub computed: String,
}

impl Check {
    fn graded(name: &'static str, ok: bool, expected: impl ToString, computed: impl ToString) -> Check {
        let status = if ok { Status::Pass } else { Status::Fail };
        Check { name, status, expected: expected.to_string(), computed: computed.to_string() }
    }

    fn info(name: &'static str, computed: impl ToString) -> Check {
        Check { name, status: Status::Info, expected: "-".into(), computed: computed.to_string() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub weights: String,
    pub omega: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub max_degree: i64,
    pub checks: Vec<Check>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub failed: usize,
    pub info: usize,
}

impl CatalogReport {
    /// Number of entries with at least one failed check.
    pub fn mismatches(&self) -> usize {
        self.entries.iter().filter(|e| !e.passed()).count()
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn degrees(list: &[i64]) -> String {
    if list.is_empty() {
        return "none".into();
    }
    let parts: Vec<String> = list.iter().map(i64::to_string).collect();
    parts.join(",")
}

/// Grades a truncated yes/no computation against a recorded claim.
fn claim_check(name: &'static str, claim: Claim, computed: bool, detail: String, bound: i64) -> Check {
    let text = format!("{} up to {bound} ({detail})", if computed { "yes" } else { "no" });
    match claim.as_bool() {
        Some(want) => Check::graded(name, computed == want, claim, text),
        None => Check::info(name, text),
    }
}

/// Recomputes every recorded invariant of `e`, truncating degree-wise
/// checks at `max_degree`. Errors become failed checks.
pub fn verify_entry(e: &CatalogEntry, max_degree: i64) -> EntryReport {
    let mut checks = Vec::new();
    if let Err(err) = run_checks(e, max_degree, &mut checks) {
        checks.push(Check::graded("error", false, "-", err));
    }
    EntryReport {
        id: e.id.clone(),
        weights: e.weights.to_string(),
        omega: e.omega_text.clone(),
        kind: e.kind.label().to_string(),
        max_degree,
        checks,
    }
}

fn run_checks(e: &CatalogEntry, bound: i64, checks: &mut Vec<Check>) -> Result<()> {
    let omega = &e.omega;
    let s = PoissonStructure::from_potential(omega)?;
    let jac = s.jacobiator();
    checks.push(Check::graded("jacobiator", jac.is_zero(), "0", format_poly(&jac)));
    let m = s.modular_derivation();
    let mtext: Vec<String> = m.vector().0.iter().map(format_poly).collect();
    checks.push(Check::graded("modular", m.is_zero(), "0", format!("({})", mtext.join(", "))));

    let r = rgt(omega)?;
    checks.push(Check::graded("rgt", e.rgt.admits(r), &e.rgt, r));
    let gk = gkdim(omega)?;
    checks.push(Check::graded("gkdim", e.gk.admits(gk), &e.gk, gk));
    checks.push(Check::graded("isolated", (gk == 0) == e.isolated, e.isolated, gk == 0));

    let g = gcd_partials(omega)?;
    let coprime = g.is_constant();
    checks.push(Check::graded(
        "gk-gcd",
        gk > 1 || coprime,
        "gcd = 1 when GK <= 1",
        format!("gcd = {}", format_poly(&g)),
    ));
    if coprime {
        let kz = Koszul::new(omega)?;
        let mut bad = Vec::new();
        for d in 0..=bound {
            if kz.homology(2, d)? != 0 || kz.homology(3, d)? != 0 {
                bad.push(d);
            }
        }
        checks.push(Check::graded("koszul-h2h3", bad.is_empty(), "0", format!("nonzero at {}", degrees(&bad))));
    } else {
        checks.push(Check::info("koszul-h2h3", format!("skipped, gcd = {}", format_poly(&g))));
    }

    let euler = euler_characteristic_check(omega, bound)?;
    let off: Vec<i64> = euler.degrees.iter().filter(|(_, (a, b))| a != b).map(|(d, _)| *d).collect();
    checks.push(Check::graded("euler", off.is_empty(), "identity", format!("off at {}", degrees(&off))));

    let vac = vacancy_check(omega, bound)?;
    let nonzero = vac.nonzero_degrees();
    checks.push(claim_check("vacant", e.vacant, nonzero.is_empty(), format!("uPH2 at {}", degrees(&nonzero)), bound));
    let oz = ozone_vs_hamiltonian(omega, bound)?;
    let disc = oz.discrepancies();
    checks.push(Check::graded(
        "ozone",
        disc == nonzero,
        format!("discrepancies at {}", degrees(&nonzero)),
        format!("discrepancies at {}", degrees(&disc)),
    ));

    let sealed = sealed_k1_dims(omega, bound)?;
    let unsealed: Vec<i64> = sealed.dims().into_iter().filter(|(_, v)| *v != 0).map(|(d, _)| d).collect();
    checks.push(claim_check("sealed", e.sealed, unsealed.is_empty(), format!("sK1 at {}", degrees(&unsealed)), bound));

    let ph = ph_dims(omega, bound)?;
    if e.kind.is_balanced_irreducible() {
        let mut mismatch = None;
        'outer: for i in 0..4 {
            let want = expand_i64(&closed_form_ph(&e.weights, i)?, ph.min_degree, ph.max_degree);
            for (d, w) in ph.degrees().zip(want) {
                if ph.get(i, d) as i64 != w {
                    mismatch = Some(format!("PH{i} in degree {d}: {} vs {w}", ph.get(i, d)));
                    break 'outer;
                }
            }
        }
        let computed = mismatch.clone().unwrap_or_else(|| format!("match in degrees {}..={bound}", ph.min_degree));
        checks.push(Check::graded("ph-closed-form", mismatch.is_none(), "closed forms", computed));
    } else {
        let total: Vec<usize> = (0..4).map(|i| ph.row(i).iter().sum()).collect();
        checks.push(Check::info("ph-closed-form", format!("not applicable; total dims {total:?}")));
    }
    Ok(())
}

/// Runs [`verify_entry`] over `entries` in parallel, keeping their order.
/// Without an explicit bound each entry uses `3n + 12`.
pub fn verify_all(entries: &[&CatalogEntry], max_degree: Option<i64>) -> CatalogReport {
    let reports: Vec<EntryReport> = entries
        .par_iter()
        .map(|e| verify_entry(e, max_degree.unwrap_or_else(|| default_max_degree(e.degree()))))
        .collect();
    let count = |s: Status| reports.iter().flat_map(|r| &r.checks).filter(|c| c.status == s).count();
    CatalogReport { passed: count(Status::Pass), failed: count(Status::Fail), info: count(Status::Info), entries: reports }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;

    fn report(id: &str) -> EntryReport {
        let cat = Catalog::builtin();
        let e = cat.get(id).unwrap();
        verify_entry(e, 12)
    }

    #[test]
    fn isolated_family_member_passes() {
        let r = report("112-05");
        assert_eq!(r.omega, "z^2+x*y^3+5*x^2*y^2+x^3*y");
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.check("rgt").unwrap().computed, "0");
        assert_eq!(r.check("gkdim").unwrap().computed, "0");
        assert_eq!(r.check("isolated").unwrap().computed, "true");
        assert_eq!(r.check("sealed").unwrap().status, Status::Pass);
    }

    #[test]
    fn cusp_is_neither_vacant_nor_sealed() {
        let r = report("123-01");
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(r.check("vacant").unwrap().computed.starts_with("no"));
        assert!(r.check("sealed").unwrap().computed.starts_with("no"));
        assert_eq!(r.check("ph-closed-form").unwrap().status, Status::Info);
    }

    #[test]
    fn quartic_power() {
        let r = report("112-11");
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.check("rgt").unwrap().computed, "-5");
        assert_eq!(r.check("gkdim").unwrap().computed, "2");
    }

    #[test]
    fn unknown_claims_are_reported_not_graded() {
        let r = report("112-02");
        assert_eq!(r.check("sealed").unwrap().status, Status::Info);
        assert_eq!(r.check("vacant").unwrap().status, Status::Pass);
    }

    #[test]
    fn empty_selection() {
        let r = verify_all(&[], Some(5));
        assert!(r.entries.is_empty());
        assert!(r.ok());
    }
}
