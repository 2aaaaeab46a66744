//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::time::{Duration, Instant};

use qrep::counting::{self, CountTable};
use qrep::oracle::{self, Bounds, ClosureReport, Property, Verdict};
use qrep::verify::{self, types_up_to};
use qrep::{DynkinType, IndecTable, Mat, ModuleClass, PrimeField, Quiver, Representation, RigidModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn field(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn table(q: &Quiver, p: u32) -> IndecTable {
    IndecTable::build_with_field(q, field(p)).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn profiles_match(ty: DynkinType, orientations: &[Quiver]) -> Result<(), String> {
    let expected = CountTable::closed(ty).by_size;
    for q in orientations {
        let found = qrep::rigid::rigid_profile(&table(q, 5));
        ensure(found == expected, || format!("{q}: {found:?} != {expected:?}"))?;
    }
    Ok(())
}

fn type_a_counts() -> Outcome {
    let mut totals = Vec::new();
    for n in 1..=5 {
        let ty = DynkinType::a(n);
        profiles_match(ty, &ty.all_orientations())?;
        let total = CountTable::closed(ty).total;
        ensure(total as u128 == counting::schroeder(n), || format!("A{n} total {total}"))?;
        totals.push(total);
    }
    ensure(totals == [2, 6, 22, 90, 394], || format!("totals {totals:?}"))?;
    Ok(format!("totals {totals:?}"))
}

fn type_d_counts() -> Outcome {
    ensure(CountTable::closed(DynkinType::d(4)).by_size == [1, 12, 39, 48, 20], || "D4 closed form".into())?;
    for n in [4, 5] {
        let ty = DynkinType::d(n);
        profiles_match(ty, &ty.all_orientations())?;
    }
    Ok("D4 (1, 12, 39, 48, 20) total 120; D5 total 654".into())
}

fn type_e_counts() -> Outcome {
    let expected: [(usize, &[u64], u64); 3] = [
        (6, &[1, 36, 300, 1035, 1720, 1368, 418], 4878),
        (7, &[1, 63, 777, 3927, 9933, 13299, 9009, 2431], 39440),
        (8, &[1, 120, 2135, 15120, 54327, 108360, 121555, 71760, 17342], 390720),
    ];
    let mut totals = Vec::new();
    for (n, profile, total) in expected {
        let found = qrep::rigid::rigid_profile(&table(&DynkinType::e(n).orientation(0), 5));
        ensure(found == profile, || format!("E{n}: {found:?}"))?;
        let sum: u64 = found.iter().sum();
        ensure(sum == total, || format!("E{n} total {sum}"))?;
        totals.push(sum);
    }
    Ok(format!("totals {totals:?}"))
}

fn main_bijection() -> Outcome {
    let mut modules = 0;
    for ty in [DynkinType::a(4), DynkinType::d(4)] {
        for q in ty.all_orientations() {
            let t = table(&q, 5);
            if let Some(cx) = verify::main_bijection_check(&t) {
                return Err(format!("{q}: {cx}"));
            }
            let ice = qrep::subcat::enumerate_ice(&t).len();
            let rigid = qrep::rigid::enumerate_rigid(&t).len();
            ensure(ice == rigid, || format!("{q}: {ice} ICE-closed vs {rigid} rigid"))?;
            modules += rigid;
        }
    }
    Ok(format!("{modules} rigid modules over 16 quivers"))
}

/// Oracle reports for every rigid module of A3 and D4, per orientation and prime.
struct OracleRun {
    /// (quiver, p = 2 table, p = 2 reports, p = 3 reports)
    runs: Vec<(Quiver, IndecTable, Vec<(RigidModule, ClosureReport)>, Vec<(RigidModule, ClosureReport)>)>,
}

fn run_oracles() -> OracleRun {
    let bounds = Bounds { mult_bound: 2, ..Bounds::default() };
    let mut runs = Vec::new();
    for ty in [DynkinType::a(3), DynkinType::d(4)] {
        for q in ty.all_orientations() {
            let t2 = table(&q, 2);
            let r2 = verify::cok_reports(&t2, bounds);
            let r3 = verify::cok_reports(&table(&q, 3), bounds);
            runs.push((q, t2, r2, r3));
        }
    }
    OracleRun { runs }
}

fn ice_closure(oracles: &OracleRun) -> Outcome {
    let ice = [Property::Images, Property::Cokernels, Property::Extensions];
    let (mut checks, mut inconclusive) = (0usize, 0usize);
    for (q, _, r2, r3) in &oracles.runs {
        for ((u, a), (_, b)) in r2.iter().zip(r3) {
            for r in [a, b] {
                checks += r.checks;
                inconclusive += r.inconclusive;
                for p in ice {
                    ensure(r.verdict(p) != Verdict::Fails, || format!("{q}: cok {u:?} fails {p}: {:?}", r.counterexamples[&p]))?;
                }
            }
            let diff = oracle::discrepancies(a, b);
            ensure(diff.is_empty(), || format!("{q}: cok {u:?} differs between p = 2 and 3 on {diff:?}"))?;
        }
    }
    let share = inconclusive as f64 / checks.max(1) as f64;
    ensure(share < 0.05, || format!("{inconclusive} of {checks} searches out of budget"))?;
    Ok(format!("{checks} searches, {inconclusive} out of budget, no prime discrepancy"))
}

fn section4() -> Outcome {
    for ty in [DynkinType::a(4), DynkinType::d(4)] {
        for q in ty.all_orientations() {
            let t = table(&q, 5);
            for (what, check) in [
                ("co-Bongartz", verify::co_bongartz_check as fn(&IndecTable) -> Option<String>),
                ("wide part", verify::wide_part_check),
                ("torsion/wide inverse", verify::ftors_fwide_check),
            ] {
                if let Some(cx) = check(&t) {
                    return Err(format!("{q} {what}: {cx}"));
                }
            }
        }
    }
    Ok("A4 and D4, all orientations".into())
}

fn epi_kernels(oracles: &OracleRun) -> Outcome {
    let mut fac_minimal = 0;
    let mut total = 0;
    for (q, t, r2, _) in &oracles.runs {
        match verify::trichotomy_check(t, r2) {
            Ok(None) => {}
            Ok(Some(cx)) => return Err(format!("{q}: {cx}")),
            Err(budget) => return Err(format!("{q}: out of budget at {budget}")),
        }
        fac_minimal += r2.iter().filter(|(u, _)| qrep::rigid::is_fac_minimal(*u, t)).count();
        total += r2.len();
    }
    Ok(format!("{fac_minimal} of {total} rigid modules Fac-minimal, all three conditions agree"))
}

fn exceptional() -> Outcome {
    let mut modules = 0;
    for ty in [DynkinType::a(5), DynkinType::d(5), DynkinType::e(6)] {
        for q in ty.all_orientations() {
            let t = table(&q, 5);
            if let Some(cx) = verify::exceptional_order_check(&t) {
                return Err(format!("{q}: {cx}"));
            }
            modules += qrep::rigid::enumerate_rigid(&t).len();
        }
    }
    for ty in [DynkinType::a(4), DynkinType::d(4)] {
        for q in ty.all_orientations() {
            if let Some(cx) = verify::envelope_rank_check(&table(&q, 5)) {
                return Err(format!("{q}: {cx}"));
            }
        }
    }
    Ok(format!("{modules} modules ordered"))
}

fn appendix_bijections() -> Outcome {
    let mut checks = 0;
    for ty in [DynkinType::a(3), DynkinType::a(4), DynkinType::d(4)] {
        let report = counting::verify_mutation_invariance(ty, field(5)).unwrap();
        ensure(report.passed(), || format!("{ty}: profiles {:?}", report.profiles))?;
        for q in ty.all_orientations() {
            let t = table(&q, 5);
            for v in 0..q.vertex_count() {
                if q.is_sink(v) {
                    let r = counting::bijection_check_reflection(&t, v).unwrap();
                    ensure(r.passed(), || format!("{q} reflect at {v}: {:?}", r.failures))?;
                    checks += 1;
                }
                if q.is_sink(v) || q.is_source(v) {
                    let r = counting::bijection_check_removal(&t, v).unwrap();
                    ensure(r.passed(), || format!("{q} remove {v}: {:?}", r.failures))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} vertex checks"))
}

fn field_independence() -> Outcome {
    let mut tables = 0;
    for ty in types_up_to(6) {
        for q in ty.all_orientations() {
            let base = table(&q, 5);
            for p in [2, 3] {
                let t = table(&q, p);
                ensure(t.hom_matrix() == base.hom_matrix() && t.ext_matrix() == base.ext_matrix(), || {
                    format!("{q}: p = {p} differs from p = 5")
                })?;
            }
            tables += 1;
        }
    }
    Ok(format!("{tables} quivers at p = 2, 3, 5"))
}

fn random_invertible(rng: &mut ChaCha8Rng, f: PrimeField, n: usize) -> (Mat, Mat) {
    loop {
        let data = (0..n * n).map(|_| rng.random_range(0..f.p())).collect();
        let g = Mat::from_vec(f, n, n, data);
        if let Some(inv) = g.inverse() {
            return (g, inv);
        }
    }
}

/// `m` after a random change of basis at every vertex.
fn scramble(m: &Representation, rng: &mut ChaCha8Rng) -> Representation {
    let f = m.field();
    let bases: Vec<(Mat, Mat)> = m.dim().iter().map(|&d| random_invertible(rng, f, d)).collect();
    let maps = m
        .quiver()
        .arrows()
        .iter()
        .zip(m.maps())
        .map(|(&(i, j), a)| bases[j].0.mul(a).mul(&bases[i].1))
        .collect();
    Representation::new(m.quiver().clone(), f, m.dim().to_vec(), maps).unwrap()
}

fn decomposition() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut types = 0;
    for ty in types_up_to(6) {
        let t = table(&ty.orientation(0), 5);
        for _ in 0..1000 {
            let k = rng.random_range(1..=4);
            let parts: Vec<usize> = (0..k).map(|_| rng.random_range(0..t.len())).collect();
            let mut expected = ModuleClass::new();
            for &i in &parts {
                expected.add(i, 1);
            }
            let reps: Vec<&Representation> = parts.iter().map(|&i| t.indec(i)).collect();
            let m = scramble(&Representation::direct_sum(t.quiver(), t.field(), &reps), &mut rng);
            let found = t.decompose(&m).map_err(|e| format!("{ty} {parts:?}: {e}"))?;
            ensure(found == expected, || format!("{ty} {parts:?}: got {found:?}"))?;
        }
        types += 1;
    }
    Ok(format!("1000 sums for each of {types} types"))
}

fn main() {
    let mut failed = 0;
    let mut report = |n: usize, name: &str, limit: Duration, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if took > limit => ("FAIL", format!("took {took:.1?}, limit {limit:?}")),
            Ok(detail) => ("PASS", detail),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {n:>2} {status} {name} [{took:.2?}] {detail}");
    };

    let secs = Duration::from_secs;
    report(1, "type A counts", secs(10), &mut type_a_counts);
    report(2, "type D counts", secs(30), &mut type_d_counts);
    report(3, "type E counts", secs(300), &mut type_e_counts);
    report(4, "main bijection", secs(60), &mut main_bijection);
    let mut oracles = None;
    report(5, "ICE closure oracle", secs(600), &mut || {
        let runs = run_oracles();
        let outcome = ice_closure(&runs);
        oracles = Some(runs);
        outcome
    });
    report(6, "co-Bongartz and wide parts", secs(60), &mut section4);
    // reuses the oracle runs of criterion 5
    report(7, "epi-kernel trichotomy", secs(600), &mut || epi_kernels(oracles.as_ref().expect("criterion 5 ran")));
    report(8, "exceptional structure", secs(120), &mut exceptional);
    report(9, "appendix bijections", secs(120), &mut appendix_bijections);
    report(10, "field independence", secs(60), &mut field_independence);
    report(11, "decomposition oracle", secs(60), &mut decomposition);

    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 11 acceptance criteria passed");
}
