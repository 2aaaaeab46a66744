//! Named verification suites: batches of checks over every Dynkin type and
//! orientation within a rank bound, each reported as pass, fail, or budget
//! exceeded.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::counting::{self, CountTable};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::indec::IndecTable;
use crate::indexset::IndexSet;
use crate::oracle::{self, Bounds, ClosureOracle, ClosureReport, Property, Verdict};
use crate::quiver::{DynkinType, Quiver};
use crate::rigid::{self, RigidModule};
use crate::subcat::{self, Subcat};

/// Largest rank for the brute-force oracle searches.
const ORACLE_RANK: usize = 4;
/// Largest rank for submodule enumeration and the raw `W` search.
const SUBMODULE_RANK: usize = 3;
/// Largest rank swept over every orientation; above it only the standard
/// orientation is used, except by the mutation suite.
const ALL_ORIENTATIONS_RANK: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    MainBijection,
    IceClosure,
    Section4,
    Exceptional,
    Mutation,
    Counts,
    FieldIndependence,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::MainBijection,
        Suite::IceClosure,
        Suite::Section4,
        Suite::Exceptional,
        Suite::Mutation,
        Suite::Counts,
        Suite::FieldIndependence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainBijection => "main-bijection",
            Suite::IceClosure => "ice-closure",
            Suite::Section4 => "section4",
            Suite::Exceptional => "exceptional",
            Suite::Mutation => "mutation",
            Suite::Counts => "counts",
            Suite::FieldIndependence => "field-independence",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            format!("unknown suite {s:?}, expected one of {}", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scope {
    pub rank_bound: usize,
    /// Primes for the oracle and field-independence checks; the first is
    /// also used where a single prime is needed.
    pub primes: Vec<u32>,
    pub bounds: Bounds,
}

impl Default for Scope {
    fn default() -> Self {
        Scope { rank_bound: 4, primes: vec![2, 3], bounds: Bounds::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    BudgetExceeded,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    fn pass(name: String) -> Self {
        Check { name, status: Status::Pass, counterexample: None }
    }

    fn fail(name: String, counterexample: String) -> Self {
        Check { name, status: Status::Fail, counterexample: Some(counterexample) }
    }

    fn from_first_failure(name: String, failure: Option<String>) -> Self {
        match failure {
            Some(cx) => Check::fail(name, cx),
            None => Check::pass(name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    /// The worst status among the checks.
    pub fn outcome(&self) -> Status {
        self.checks.iter().map(|c| c.status).max().unwrap_or(Status::Pass)
    }
}

/// Connected Dynkin types of rank at most `bound`, ordered A, D, E.
pub fn types_up_to(bound: usize) -> Vec<DynkinType> {
    let mut out: Vec<DynkinType> = (1..=bound).map(DynkinType::a).collect();
    out.extend((4..=bound).map(DynkinType::d));
    out.extend((6..=bound.min(8)).map(DynkinType::e));
    out
}

fn orientations(ty: DynkinType) -> Vec<(u64, Quiver)> {
    if ty.rank() <= ALL_ORIENTATIONS_RANK {
        (0..1u64 << ty.edges().len()).map(|bits| (bits, ty.orientation(bits))).collect()
    } else {
        vec![(0, ty.orientation(0))]
    }
}

fn label(ty: DynkinType, bits: u64) -> String {
    format!("{ty}/o{bits}")
}

fn dims(t: &IndecTable, set: IndexSet) -> String {
    let list: Vec<String> = set.iter().map(|i| format!("{:?}", t.dim(i))).collect();
    format!("[{}]", list.join(", "))
}

fn first_failure<T>(items: &[T], mut bad: impl FnMut(&T) -> Option<String>) -> Option<String> {
    items.iter().find_map(&mut bad)
}

pub fn run(suite: Suite, scope: &Scope) -> Result<SuiteReport> {
    let primes: Vec<PrimeField> = scope.primes.iter().map(|&p| PrimeField::new(p)).collect::<Result<_>>()?;
    let field = primes.first().copied().unwrap_or(PrimeField::DEFAULT);
    let checks = match suite {
        Suite::MainBijection => main_bijection(scope.rank_bound, field)?,
        Suite::IceClosure => ice_closure(scope.rank_bound.min(ORACLE_RANK), &primes, scope.bounds)?,
        Suite::Section4 => section4(scope.rank_bound, field, scope.bounds)?,
        Suite::Exceptional => exceptional(scope.rank_bound, field)?,
        Suite::Mutation => mutation(scope.rank_bound, field)?,
        Suite::Counts => counts(scope.rank_bound, field)?,
        Suite::FieldIndependence => field_independence(scope.rank_bound, &primes)?,
    };
    Ok(SuiteReport { suite: suite.name().to_string(), checks })
}

/// `U ↦ cok U` is injective and inverted by taking Ext-progenerators.
pub fn main_bijection_check(t: &IndecTable) -> Option<String> {
    let ice = subcat::enumerate_ice(t);
    let mut seen: Vec<u128> = ice.iter().map(|(_, c)| c.members().bits()).collect();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != ice.len() {
        return Some(format!("{} rigid modules but {} distinct subcategories", ice.len(), seen.len()));
    }
    first_failure(&ice, |&(u, c)| match subcat::progenerator(c, t) {
        Ok(p) if p == u => None,
        Ok(p) => Some(format!("progenerator of cok {} is {}", dims(t, u.summands()), dims(t, p.summands()))),
        Err(e) => Some(format!("cok {}: {e}", dims(t, u.summands()))),
    })
}

fn main_bijection(bound: usize, field: PrimeField) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for ty in types_up_to(bound) {
        for (bits, q) in orientations(ty) {
            let t = IndecTable::build_with_field(&q, field)?;
            checks.push(Check::from_first_failure(label(ty, bits), main_bijection_check(&t)));
        }
    }
    Ok(checks)
}

const ICE: [Property; 3] = [Property::Images, Property::Cokernels, Property::Extensions];

/// Closure reports for `cok U` of every rigid `U`, in enumeration order.
pub fn cok_reports(t: &IndecTable, bounds: Bounds) -> Vec<(RigidModule, ClosureReport)> {
    let oracle = ClosureOracle::build(t, t.all(), bounds);
    rigid::enumerate_rigid(t).into_iter().map(|u| (u, oracle.report(subcat::cok(u, t)))).collect()
}

fn ice_check(name: String, t: &IndecTable, reports: &[(RigidModule, ClosureReport)]) -> Check {
    let mut budget = false;
    for (u, r) in reports {
        for p in ICE {
            match r.verdict(p) {
                Verdict::Holds => {}
                Verdict::Inconclusive => budget = true,
                Verdict::Fails => {
                    let cx = &r.counterexamples[&p];
                    return Check::fail(
                        name,
                        format!("cok {} not closed under {p}: {:?} from {:?}, {:?}", dims(t, u.summands()), cx.witness, cx.from, cx.to),
                    );
                }
            }
        }
    }
    let status = if budget { Status::BudgetExceeded } else { Status::Pass };
    Check { name, status, counterexample: None }
}

fn ice_closure(bound: usize, primes: &[PrimeField], bounds: Bounds) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for ty in types_up_to(bound) {
        for (bits, q) in orientations(ty) {
            let mut per_prime = Vec::new();
            for &f in primes {
                let t = IndecTable::build_with_field(&q, f)?;
                let reports = cok_reports(&t, bounds);
                checks.push(ice_check(format!("{}/p{}", label(ty, bits), f.p()), &t, &reports));
                per_prime.push((t, reports));
            }
            if let Some(((t0, first), rest)) = per_prime.split_first() {
                let disagreement = rest.iter().find_map(|(_, other)| {
                    first.iter().zip(other).find_map(|((u, a), (_, b))| {
                        let props = oracle::discrepancies(a, b);
                        (!props.is_empty()).then(|| format!("cok {}: {props:?}", dims(t0, u.summands())))
                    })
                });
                checks.push(Check::from_first_failure(format!("{}/prime-agreement", label(ty, bits)), disagreement));
            }
        }
    }
    Ok(checks)
}

/// `Fac(cok U) = Fac(co-Bongartz U)`, the completion is support tilting, and
/// has the same Fac as `U`.
pub fn co_bongartz_check(t: &IndecTable) -> Option<String> {
    first_failure(&rigid::enumerate_rigid(t), |&u| {
        let bar = rigid::co_bongartz(u, t);
        let fac_u = subcat::fac_closure(u.summands(), t);
        let ok = rigid::is_support_tilting(bar, t)
            && subcat::fac_closure(bar.summands(), t) == fac_u
            && subcat::torsion_closure(subcat::cok(u, t), t) == fac_u;
        (!ok).then(|| format!("U = {}, completion {}", dims(t, u.summands()), dims(t, bar.summands())))
    })
}

/// `W(cok U) = cok(U_0)`, `W(c) ⊆ c`, and split projectives are Ext-projective.
pub fn wide_part_check(t: &IndecTable) -> Option<String> {
    first_failure(&rigid::enumerate_rigid(t), |&u| {
        let c = subcat::cok(u, t);
        let (Ok(w), Ok(split)) = (subcat::wide_part(c, t), subcat::split_projectives(c, t)) else {
            return Some(format!("cok {} has no progenerator", dims(t, u.summands())));
        };
        let ok = w == subcat::cok(rigid::fac_minimal_version(u, t), t)
            && w.is_subset(c)
            && split.is_subset(subcat::ext_projectives(c, t));
        (!ok).then(|| format!("U = {}", dims(t, u.summands())))
    })
}

/// `W ∘ T` fixes the wide subcategories `cok U_0` with `U_0` Fac-minimal,
/// and `T ∘ W` fixes the torsion classes `Fac U`.
pub fn ftors_fwide_check(t: &IndecTable) -> Option<String> {
    first_failure(&rigid::enumerate_rigid(t), |&u| {
        if rigid::is_fac_minimal(u, t) {
            let w = subcat::cok(u, t);
            let back = subcat::wide_part(subcat::torsion_closure(w, t), t).ok();
            if back != Some(w) {
                return Some(format!("W(T(cok {})) differs", dims(t, u.summands())));
            }
        }
        let tors = subcat::fac_closure(u.summands(), t);
        let back = subcat::wide_part(tors, t).ok().map(|w| subcat::torsion_closure(w, t));
        (back != Some(tors)).then(|| format!("T(W(Fac {})) differs", dims(t, u.summands())))
    })
}

fn verdict_failure(u: RigidModule, t: &IndecTable, what: &str, v: Verdict) -> Option<String> {
    (v == Verdict::Inconclusive).then(|| format!("{what} search for cok {} ran out of budget", dims(t, u.summands())))
}

/// The three epi-kernel conditions agree, and `cok U` is closed under
/// kernels exactly when `U` is Fac-minimal. `Err` carries an
/// out-of-budget description.
pub fn trichotomy_check(
    t: &IndecTable,
    reports: &[(RigidModule, ClosureReport)],
) -> std::result::Result<Option<String>, String> {
    for &(u, ref r) in reports {
        let c = subcat::cok(u, t);
        let split_is_all = subcat::split_projectives(c, t).map(|s| s == subcat::ext_projectives(c, t)).unwrap_or(false);
        let minimal = rigid::is_fac_minimal(u, t);
        for (what, prop) in [("epi-kernel", Property::EpiKernels), ("kernel", Property::Kernels)] {
            if let Some(msg) = verdict_failure(u, t, what, r.verdict(prop)) {
                return Err(msg);
            }
        }
        let epi = r.holds(Property::EpiKernels);
        if split_is_all != minimal || minimal != epi {
            return Ok(Some(format!(
                "U = {}: split projectives are all {split_is_all}, Fac-minimal {minimal}, epi-kernel closed {epi}",
                dims(t, u.summands())
            )));
        }
        if r.holds(Property::Kernels) != minimal {
            return Ok(Some(format!("U = {}: kernel closure disagrees with Fac-minimality", dims(t, u.summands()))));
        }
    }
    Ok(None)
}

/// Presentation search agrees with membership in `cok U`. `Err` carries
/// an out-of-budget description.
pub fn presentation_check(t: &IndecTable, budget: u64) -> std::result::Result<Option<String>, String> {
    for u in rigid::enumerate_rigid(t) {
        let c = subcat::cok(u, t);
        for x in 0..t.len() {
            match oracle::has_two_term_presentation(u, x, t, budget) {
                Ok(found) if found == c.contains(x) => {}
                Ok(found) => {
                    return Ok(Some(format!(
                        "U = {}, X = {:?}: presentation {found}, member {}",
                        dims(t, u.summands()),
                        t.dim(x),
                        c.contains(x)
                    )))
                }
                Err(Error::BudgetExceeded(_)) => {
                    return Err(format!("U = {}, X = {:?}", dims(t, u.summands()), t.dim(x)))
                }
                Err(e) => return Ok(Some(e.to_string())),
            }
        }
    }
    Ok(None)
}

/// Submodules of split projectives lying in `cok U` are split projective,
/// and `W(cok U)` matches its definition through kernels. `Err` carries an
/// out-of-budget description.
pub fn submodule_checks(t: &IndecTable, bounds: Bounds) -> std::result::Result<Option<String>, String> {
    let raw_bounds = Bounds { mult_bound: bounds.mult_bound.max(3), ..bounds };
    for u in rigid::enumerate_rigid(t) {
        let c = subcat::cok(u, t);
        let Ok(split) = subcat::split_projectives(c, t) else {
            return Ok(Some(format!("cok {} has no progenerator", dims(t, u.summands()))));
        };
        for p in split.members() {
            match oracle::member_submodule_summands(p, c, t, bounds.map_budget) {
                Ok(found) if found.is_subset(split.members()) => {}
                Ok(found) => {
                    return Ok(Some(format!(
                        "U = {}: submodules of {:?} have summands {} outside the split projectives",
                        dims(t, u.summands()),
                        t.dim(p),
                        dims(t, found.difference(split.members()))
                    )))
                }
                Err(_) => return Err(format!("submodules of {:?}", t.dim(p))),
            }
        }
        let (raw, complete) = oracle::raw_wide_part(c, t, raw_bounds);
        if !complete {
            return Err(format!("raw wide part of cok {}", dims(t, u.summands())));
        }
        if Some(raw) != subcat::wide_part(c, t).ok() {
            return Ok(Some(format!("U = {}: W by kernels is {}", dims(t, u.summands()), dims(t, raw.members()))));
        }
    }
    Ok(None)
}

fn budgeted(name: String, outcome: std::result::Result<Option<String>, String>) -> Check {
    match outcome {
        Ok(failure) => Check::from_first_failure(name, failure),
        Err(msg) => Check { name, status: Status::BudgetExceeded, counterexample: Some(msg) },
    }
}

fn section4(bound: usize, field: PrimeField, bounds: Bounds) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for ty in types_up_to(bound) {
        for (bits, q) in orientations(ty) {
            let t = IndecTable::build_with_field(&q, field)?;
            let name = label(ty, bits);
            checks.push(Check::from_first_failure(format!("{name}/co-bongartz"), co_bongartz_check(&t)));
            checks.push(Check::from_first_failure(format!("{name}/wide-part"), wide_part_check(&t)));
            checks.push(Check::from_first_failure(format!("{name}/ftors-fwide"), ftors_fwide_check(&t)));
            if ty.rank() <= ORACLE_RANK {
                let reports = cok_reports(&t, bounds);
                checks.push(budgeted(format!("{name}/epi-kernels"), trichotomy_check(&t, &reports)));
                checks.push(budgeted(format!("{name}/presentations"), presentation_check(&t, bounds.map_budget)));
            }
            if ty.rank() <= SUBMODULE_RANK {
                checks.push(budgeted(format!("{name}/submodules"), submodule_checks(&t, bounds)));
            }
        }
    }
    Ok(checks)
}

/// Every rigid module admits an exceptional ordering of its summands.
pub fn exceptional_order_check(t: &IndecTable) -> Option<String> {
    first_failure(&rigid::enumerate_rigid(t), |&u| {
        rigid::exceptional_order(u, t).err().map(|e| format!("U = {}: {e}", dims(t, u.summands())))
    })
}

/// The wide envelope of `U` has an Ext-free progenerator with `|U|` summands.
pub fn envelope_rank_check(t: &IndecTable) -> Option<String> {
    first_failure(&rigid::enumerate_rigid(t), |&u| {
        let w = subcat::wide_envelope(u.summands(), t).expect("enumerated modules are rigid");
        match subcat::progenerator(w, t) {
            Ok(p) if p.len() == u.len() => None,
            Ok(p) => Some(format!("U = {}: progenerator {}", dims(t, u.summands()), dims(t, p.summands()))),
            Err(e) => Some(format!("U = {}: {e}", dims(t, u.summands()))),
        }
    })
}

fn exceptional(bound: usize, field: PrimeField) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for ty in types_up_to(bound) {
        for (bits, q) in orientations(ty) {
            let t = IndecTable::build_with_field(&q, field)?;
            let name = label(ty, bits);
            checks.push(Check::from_first_failure(format!("{name}/order"), exceptional_order_check(&t)));
            checks.push(Check::from_first_failure(format!("{name}/envelope-rank"), envelope_rank_check(&t)));
        }
    }
    Ok(checks)
}

fn mutation(bound: usize, field: PrimeField) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for ty in types_up_to(bound) {
        let report = counting::verify_mutation_invariance(ty, field)?;
        let failure = (!report.passed()).then(|| format!("profiles {:?}, expected {:?}", report.profiles, report.expected));
        checks.push(Check::from_first_failure(format!("{ty}/profiles"), failure));
        if ty.rank() > ORACLE_RANK {
            continue;
        }
        for (bits, q) in orientations(ty) {
            let t = IndecTable::build_with_field(&q, field)?;
            for v in 0..q.vertex_count() {
                if q.is_sink(v) {
                    let r = counting::bijection_check_reflection(&t, v)?;
                    checks.push(Check::from_first_failure(
                        format!("{}/reflect-{v}", label(ty, bits)),
                        r.failures.first().cloned(),
                    ));
                }
                if q.is_sink(v) || q.is_source(v) {
                    let r = counting::bijection_check_removal(&t, v)?;
                    checks.push(Check::from_first_failure(
                        format!("{}/remove-{v}", label(ty, bits)),
                        r.failures.first().cloned(),
                    ));
                }
            }
        }
    }
    Ok(checks)
}

fn counts(bound: usize, field: PrimeField) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for ty in types_up_to(bound) {
        let t = IndecTable::build_with_field(&ty.orientation(0), field)?;
        let found = CountTable::enumerated(&t)?;
        let expected = CountTable::closed(ty);
        let failure = (found != expected).then(|| format!("enumerated {:?}, closed form {:?}", found.by_size, expected.by_size));
        checks.push(Check::from_first_failure(format!("{ty}/profile"), failure));
        let roots = counting::closed_form(ty, 1)? as usize;
        let failure = (roots != t.len()).then(|| format!("closed form {roots}, indecomposables {}", t.len()));
        checks.push(Check::from_first_failure(format!("{ty}/roots"), failure));
    }
    let failure = (1..=bound.max(10)).find_map(|n| {
        let ty = DynkinType::a(n);
        let sum: u128 = (0..=n).map(|i| counting::closed_form(ty, i).map(u128::from).unwrap_or(0)).sum();
        (sum != counting::schroeder(n)).then(|| format!("A{n}: {sum} vs {}", counting::schroeder(n)))
    });
    checks.push(Check::from_first_failure("schroeder".into(), failure));
    Ok(checks)
}

fn field_independence(bound: usize, primes: &[PrimeField]) -> Result<Vec<Check>> {
    let mut fields = vec![PrimeField::DEFAULT];
    for &f in primes {
        if !fields.contains(&f) {
            fields.push(f);
        }
    }
    let mut checks = Vec::new();
    for ty in types_up_to(bound) {
        for (bits, q) in orientations(ty) {
            let tables: Vec<IndecTable> =
                fields.iter().map(|&f| IndecTable::build_with_field(&q, f)).collect::<Result<_>>()?;
            let failure = tables.iter().skip(1).find_map(|t| {
                let same = t.hom_matrix() == tables[0].hom_matrix() && t.ext_matrix() == tables[0].ext_matrix();
                (!same).then(|| format!("p = {} differs from p = {}", t.field().p(), tables[0].field().p()))
            });
            checks.push(Check::from_first_failure(label(ty, bits), failure));
        }
    }
    Ok(checks)
}

/// Convenience for callers holding a subcategory rather than a module.
pub fn is_ice_closed(c: Subcat, t: &IndecTable, bounds: Bounds) -> Verdict {
    let r = oracle::closure_oracles(c, t, bounds);
    let verdicts: Vec<Verdict> = ICE.iter().map(|&p| r.verdict(p)).collect();
    if verdicts.contains(&Verdict::Fails) {
        Verdict::Fails
    } else if verdicts.contains(&Verdict::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::Holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn type_ranges() {
        let names: Vec<String> = types_up_to(6).iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"]);
        assert_eq!(types_up_to(2).len(), 2);
    }

    #[test]
    fn small_suites_pass() {
        let scope = Scope { rank_bound: 3, ..Scope::default() };
        for suite in Suite::ALL {
            let report = run(suite, &scope).unwrap();
            assert!(!report.checks.is_empty(), "{suite}");
            assert_eq!(report.outcome(), Status::Pass, "{suite}: {report:?}");
        }
    }

    #[test]
    fn ice_closed_examples() {
        let t = IndecTable::build_with_field(&Quiver::linear_a(2), PrimeField::new(2).unwrap()).unwrap();
        assert_eq!(is_ice_closed(Subcat::new([0, 1].into_iter().collect()), &t, Bounds::default()), Verdict::Fails);
        assert_eq!(is_ice_closed(Subcat::everything(&t), &t, Bounds::default()), Verdict::Holds);
    }

    #[test]
    fn outcome_ordering() {
        let mut r = SuiteReport { suite: "x".into(), checks: vec![Check::pass("a".into())] };
        assert_eq!(r.outcome(), Status::Pass);
        r.checks.push(Check { name: "b".into(), status: Status::BudgetExceeded, counterexample: None });
        assert_eq!(r.outcome(), Status::BudgetExceeded);
        r.checks.push(Check::fail("c".into(), "boom".into()));
        assert_eq!(r.outcome(), Status::Fail);
    }
}
