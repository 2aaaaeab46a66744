//! Brute-force closure oracles over a small prime field.
//!
//! These enumerate actual morphisms, extension classes and submodules and
//! decompose what comes out, independently of the Hom/Ext bookkeeping the
//! rest of the crate relies on. Every search is bounded; running out of
//! budget yields [`Verdict::Inconclusive`], never a failure.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Mat, PrimeField};
use crate::indec::{IndecTable, ModuleClass};
use crate::indexset::IndexSet;
use crate::par;
use crate::rep::{self, Representation};
use crate::rigid::RigidModule;
use crate::subcat::Subcat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Extensions,
    Images,
    Cokernels,
    Quotients,
    Kernels,
    EpiKernels,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Extensions,
        Property::Images,
        Property::Cokernels,
        Property::Quotients,
        Property::Kernels,
        Property::EpiKernels,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Property::Extensions => "extensions",
            Property::Images => "images",
            Property::Cokernels => "cokernels",
            Property::Quotients => "quotients",
            Property::Kernels => "kernels",
            Property::EpiKernels => "epi_kernels",
        };
        f.write_str(s)
    }
}

/// Search bounds.
///
/// `mult_bound` caps the total number of indecomposable summands (counted
/// with multiplicity) of every module the search builds from members;
/// `map_budget` caps the number of elements enumerated in any single
/// morphism space, extension group or submodule lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub mult_bound: usize,
    pub map_budget: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { mult_bound: 2, map_budget: 1 << 14 }
    }
}

/// The first offending construction found, in canonical search order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub property: Property,
    /// Source of the map, or the quotient end of an extension.
    pub from: ModuleClass,
    /// Target of the map, or the submodule end of an extension.
    pub to: ModuleClass,
    /// The module that escaped the subcategory.
    pub witness: ModuleClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub verdicts: BTreeMap<Property, Verdict>,
    pub counterexamples: BTreeMap<Property, Counterexample>,
    /// Searches relevant to the subcategory, and how many ran out of budget.
    pub checks: usize,
    pub inconclusive: usize,
}

impl ClosureReport {
    pub fn verdict(&self, p: Property) -> Verdict {
        self.verdicts[&p]
    }

    pub fn holds(&self, p: Property) -> bool {
        self.verdict(p) == Verdict::Holds
    }
}

/// Properties whose verdicts differ between two reports.
pub fn discrepancies(a: &ClosureReport, b: &ClosureReport) -> Vec<Property> {
    Property::ALL.into_iter().filter(|&p| a.verdict(p) != b.verdict(p)).collect()
}

#[derive(Clone, Debug)]
struct SumModule {
    class: ModuleClass,
    support: IndexSet,
    rep: Representation,
}

/// Distinct decompositions seen along one search, each kept with its support.
#[derive(Clone, Debug, Default)]
struct Outcomes(Vec<(IndexSet, ModuleClass)>);

impl Outcomes {
    fn push(&mut self, class: ModuleClass) {
        if !self.0.iter().any(|(_, c)| *c == class) {
            self.0.push((class.support(), class));
        }
    }

    fn first_escape(&self, c: IndexSet) -> Option<&ModuleClass> {
        self.0.iter().find(|(s, _)| !s.is_subset(c)).map(|(_, m)| m)
    }
}

#[derive(Clone, Debug, Default)]
struct MapSearch {
    exhausted: bool,
    images: Outcomes,
    cokernels: Outcomes,
    kernels: Outcomes,
    epi_kernels: Outcomes,
}

#[derive(Clone, Debug)]
struct Search {
    from: usize,
    to: usize,
    exhausted: bool,
    found: Outcomes,
}

/// Precomputed searches over every bounded sum of indecomposables drawn
/// from a universe. One oracle answers [`ClosureOracle::report`] for any
/// subcategory inside that universe.
#[derive(Debug)]
pub struct ClosureOracle<'t> {
    table: &'t IndecTable,
    universe: IndexSet,
    bounds: Bounds,
    sums: Vec<SumModule>,
    maps: Vec<(usize, usize, MapSearch)>,
    extensions: Vec<Search>,
    quotients: Vec<Search>,
}

/// Multisets of universe members with `1..=bound` elements, shortest first.
fn bounded_multisets(universe: IndexSet, bound: usize) -> Vec<Vec<usize>> {
    let members = universe.to_vec();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for prefix in &layer {
            let start = prefix.last().map_or(0, |&last| members.iter().position(|&m| m == last).unwrap());
            for &m in &members[start..] {
                let mut v = prefix.clone();
                v.push(m);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Number of nonzero vectors of `F_p^dim` up to scalars, saturating.
fn projective_count(p: u32, dim: usize) -> u64 {
    let mut total: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..dim {
        total = total.saturating_add(power);
        power = power.saturating_mul(p as u64);
    }
    total
}

/// Calls `visit` on one representative of every line in `F_p^dim`: the
/// vectors whose first nonzero coordinate is 1.
fn for_each_line(p: u32, dim: usize, mut visit: impl FnMut(&[u32])) {
    let mut coeffs = vec![0u32; dim];
    for lead in 0..dim {
        let tail = dim - lead - 1;
        for mut code in 0..(p as u64).pow(tail as u32) {
            coeffs[..lead].iter_mut().for_each(|c| *c = 0);
            coeffs[lead] = 1;
            for c in &mut coeffs[lead + 1..] {
                *c = (code % p as u64) as u32;
                code /= p as u64;
            }
            visit(&coeffs);
        }
    }
}

/// Column bases of every subspace of `F_p^dim`, in reduced echelon form.
pub fn all_subspaces(field: PrimeField, dim: usize) -> Vec<Mat> {
    let p = field.p();
    let mut out = Vec::new();
    for k in 0..=dim {
        for pivots in combinations(dim, k) {
            // free slots: row r, column c > pivots[r], c not a pivot
            let slots: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| ((pivots[r] + 1)..dim).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let count = (p as usize).pow(slots.len() as u32);
            for mut code in 0..count {
                let mut rows = Mat::zeros(field, k, dim);
                for (r, &c) in pivots.iter().enumerate() {
                    rows.set(r, c, 1);
                }
                for &(r, c) in &slots {
                    rows.set(r, c, (code % p as usize) as u32);
                    code /= p as usize;
                }
                out.push(rows.transpose());
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every subrepresentation of `m`, as vertexwise column bases. Fails with
/// `BudgetExceeded` once more than `budget` candidate assignments are tried.
pub fn subrepresentations(m: &Representation, budget: u64) -> Result<Vec<Vec<Mat>>> {
    let f = m.field();
    let n = m.dim().len();
    let mut cache: HashMap<usize, Vec<Mat>> = HashMap::new();
    for &d in m.dim() {
        cache.entry(d).or_insert_with(|| all_subspaces(f, d));
    }
    let options: Vec<&Vec<Mat>> = m.dim().iter().map(|d| &cache[d]).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Mat> = Vec::with_capacity(n);
    let mut visited: u64 = 0;

    fn stable(m: &Representation, chosen: &[Mat], upto: usize) -> bool {
        m.quiver().arrows().iter().enumerate().all(|(a, &(i, j))| {
            if i > upto || j > upto || (i != upto && j != upto) {
                return true;
            }
            let moved = m.maps()[a].mul(&chosen[i]);
            let both = Mat::hstack(m.field(), m.dim()[j], &[&chosen[j], &moved]);
            both.rank() == chosen[j].cols()
        })
    }

    fn go(
        m: &Representation,
        options: &[&Vec<Mat>],
        chosen: &mut Vec<Mat>,
        out: &mut Vec<Vec<Mat>>,
        visited: &mut u64,
        budget: u64,
    ) -> Result<()> {
        let v = chosen.len();
        if v == options.len() {
            out.push(chosen.clone());
            return Ok(());
        }
        for s in options[v].iter() {
            *visited += 1;
            if *visited > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            chosen.push(s.clone());
            if stable(m, chosen, v) {
                go(m, options, chosen, out, visited, budget)?;
            }
            chosen.pop();
        }
        Ok(())
    }

    go(m, &options, &mut chosen, &mut out, &mut visited, budget)?;
    Ok(out)
}

impl<'t> ClosureOracle<'t> {
    /// Runs every bounded search over sums of members of `universe`.
    pub fn build(table: &'t IndecTable, universe: IndexSet, bounds: Bounds) -> Self {
        let field = table.field();
        let sums: Vec<SumModule> = bounded_multisets(universe, bounds.mult_bound)
            .into_iter()
            .map(|parts| {
                let class = ModuleClass::from_multiplicities(parts.iter().map(|&i| (i, 1)));
                let rep = table.module(&class);
                SumModule { support: class.support(), class, rep }
            })
            .collect();
        let pairs: Vec<(usize, usize)> =
            (0..sums.len()).flat_map(|a| (0..sums.len()).map(move |b| (a, b))).collect();
        let budget = bounds.map_budget;
        let p = field.p();

        let maps = par::map(&pairs, |&(a, b)| {
            let (src, tgt) = (&sums[a].rep, &sums[b].rep);
            let basis = rep::hom_basis_comps(src, tgt);
            let mut search = MapSearch::default();
            if projective_count(p, basis.len()) > budget {
                return (a, b, search);
            }
            search.exhausted = true;
            for_each_line(p, basis.len(), |coeffs| {
                let f = rep::combine(src, tgt, &basis, coeffs);
                let decompose = |r: &Representation| table.decompose(r).expect("decomposition of a valid module");
                let (ker, _) = f.kernel();
                let (im, _) = f.image();
                let (coker, _) = f.cokernel();
                let ker_class = decompose(&ker);
                search.images.push(decompose(&im));
                search.cokernels.push(decompose(&coker));
                if coker.is_zero() {
                    search.epi_kernels.push(ker_class.clone());
                }
                search.kernels.push(ker_class);
            });
            (a, b, search)
        });

        let extensions = par::map(&pairs, |&(a, b)| {
            // extensions 0 -> sums[b] -> E -> sums[a] -> 0
            let (quot, sub) = (&sums[a].rep, &sums[b].rep);
            let cocycles = rep::ext_cocycle_basis(quot, sub);
            let mut search = Search { from: a, to: b, exhausted: false, found: Outcomes::default() };
            if projective_count(p, cocycles.len()) > budget {
                return search;
            }
            search.exhausted = true;
            for_each_line(p, cocycles.len(), |coeffs| {
                let d: Vec<Mat> = (0..quot.quiver().arrows().len())
                    .map(|arrow| {
                        cocycles.iter().zip(coeffs).fold(
                            Mat::zeros(field, cocycles[0][arrow].rows(), cocycles[0][arrow].cols()),
                            |acc, (c, &k)| acc.add(&c[arrow].scale(k)),
                        )
                    })
                    .collect();
                let middle = rep::extension_middle(quot, sub, &d);
                search.found.push(table.decompose(&middle).expect("decomposition of a valid module"));
            });
            search
        });

        let singles: Vec<usize> = (0..sums.len()).collect();
        let quotients = par::map(&singles, |&a| {
            let m = &sums[a].rep;
            let mut search = Search { from: a, to: a, exhausted: false, found: Outcomes::default() };
            let Ok(subs) = subrepresentations(m, budget) else {
                return search;
            };
            search.exhausted = true;
            for bases in subs {
                let (_, incl) = m.subrepresentation(bases).expect("enumerated subspaces are stable");
                let (q, _) = incl.cokernel();
                search.found.push(table.decompose(&q).expect("decomposition of a valid module"));
            }
            search
        });

        ClosureOracle { table, universe, bounds, sums, maps, extensions, quotients }
    }

    pub fn table(&self) -> &IndecTable {
        self.table
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    /// Closure verdicts for a subcategory inside the oracle's universe.
    pub fn report(&self, c: Subcat) -> ClosureReport {
        assert!(c.members().is_subset(self.universe), "subcategory outside the oracle universe");
        let c = c.members();
        let inside = |k: usize| self.sums[k].support.is_subset(c);
        let mut verdicts = BTreeMap::new();
        let mut counterexamples = BTreeMap::new();
        let mut checks = 0;
        let mut inconclusive = 0;
        let mut record = |prop: Property, found: Option<Counterexample>, unsure: bool| {
            let verdict = match (found, unsure) {
                (Some(cx), _) => {
                    counterexamples.insert(prop, cx);
                    Verdict::Fails
                }
                (None, true) => Verdict::Inconclusive,
                (None, false) => Verdict::Holds,
            };
            verdicts.insert(prop, verdict);
        };

        let relevant: Vec<&(usize, usize, MapSearch)> =
            self.maps.iter().filter(|(a, b, _)| inside(*a) && inside(*b)).collect();
        checks += relevant.len();
        let unsure = relevant.iter().any(|(_, _, s)| !s.exhausted);
        inconclusive += relevant.iter().filter(|(_, _, s)| !s.exhausted).count();
        type Pick = fn(&MapSearch) -> &Outcomes;
        let picks: [(Property, Pick); 4] = [
            (Property::Images, |s| &s.images),
            (Property::Cokernels, |s| &s.cokernels),
            (Property::Kernels, |s| &s.kernels),
            (Property::EpiKernels, |s| &s.epi_kernels),
        ];
        for (prop, pick) in picks {
            let found = relevant.iter().find_map(|(a, b, s)| {
                pick(s).first_escape(c).map(|w| Counterexample {
                    property: prop,
                    from: self.sums[*a].class.clone(),
                    to: self.sums[*b].class.clone(),
                    witness: w.clone(),
                })
            });
            record(prop, found, unsure);
        }

        for (prop, searches) in [(Property::Extensions, &self.extensions), (Property::Quotients, &self.quotients)] {
            let relevant: Vec<&Search> = searches.iter().filter(|s| inside(s.from) && inside(s.to)).collect();
            checks += relevant.len();
            let misses = relevant.iter().filter(|s| !s.exhausted).count();
            inconclusive += misses;
            let found = relevant.iter().find_map(|s| {
                s.found.first_escape(c).map(|w| Counterexample {
                    property: prop,
                    from: self.sums[s.from].class.clone(),
                    to: self.sums[s.to].class.clone(),
                    witness: w.clone(),
                })
            });
            record(prop, found, misses > 0);
        }

        ClosureReport { verdicts, counterexamples, checks, inconclusive }
    }
}

/// `W(c)` straight from its definition, within bounds: the members `w`
/// such that every map from a sum of at most `bounds.mult_bound` members
/// into `w` has its kernel in `c`. The flag is false when some morphism
/// space was too large to enumerate.
pub fn raw_wide_part(c: Subcat, t: &IndecTable, bounds: Bounds) -> (Subcat, bool) {
    let cm = c.members();
    let p = t.field().p();
    let sources: Vec<Representation> = bounded_multisets(cm, bounds.mult_bound)
        .into_iter()
        .map(|parts| t.module(&ModuleClass::from_multiplicities(parts.iter().map(|&i| (i, 1)))))
        .collect();
    let targets = cm.to_vec();
    let verdicts = par::map(&targets, |&w| {
        let mut complete = true;
        let mut kept = true;
        for src in &sources {
            let basis = rep::hom_basis_comps(src, t.indec(w));
            if projective_count(p, basis.len()) > bounds.map_budget {
                complete = false;
                continue;
            }
            for_each_line(p, basis.len(), |coeffs| {
                if kept {
                    let (ker, _) = rep::combine(src, t.indec(w), &basis, coeffs).kernel();
                    kept = t.decompose(&ker).expect("decomposition of a valid module").support().is_subset(cm);
                }
            });
            if !kept {
                break;
            }
        }
        (kept, complete)
    });
    let members = targets.iter().zip(&verdicts).filter(|(_, (kept, _))| *kept).map(|(&w, _)| w).collect();
    (Subcat::new(members), verdicts.iter().all(|&(kept, complete)| !kept || complete))
}

/// One-shot oracle over the members of `c` only.
pub fn closure_oracles(c: Subcat, t: &IndecTable, bounds: Bounds) -> ClosureReport {
    ClosureOracle::build(t, c.members(), bounds).report(c)
}

/// Searches for `0 -> U_1 -> U_0 -> x -> 0` with `U_0 = ⊕ u_i^{dim Hom(u_i, x)}`
/// and `U_1` in `add u`, over every map `U_0 -> x` up to scalars.
pub fn has_two_term_presentation(u: RigidModule, x: usize, t: &IndecTable, budget: u64) -> Result<bool> {
    let class = ModuleClass::from_multiplicities(u.summands().iter().map(|i| (i, t.hom(i, x))));
    let top = t.module(&class);
    let target = t.indec(x);
    let basis = rep::hom_basis_comps(&top, target);
    if projective_count(t.field().p(), basis.len()) > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    let mut found = false;
    for_each_line(t.field().p(), basis.len(), |coeffs| {
        if found {
            return;
        }
        let f = rep::combine(&top, target, &basis, coeffs);
        if f.is_surjective() {
            let (ker, _) = f.kernel();
            let k = t.decompose(&ker).expect("decomposition of a valid module");
            found = k.support().is_subset(u.summands());
        }
    });
    Ok(found)
}

/// Indecomposables that occur as summands of submodules of `indec_p` and lie
/// in `c`, as the union of supports. Used to probe split projectives.
pub fn member_submodule_summands(p: usize, c: Subcat, t: &IndecTable, budget: u64) -> Result<IndexSet> {
    let m = t.indec(p);
    let mut seen = BTreeSet::new();
    for bases in subrepresentations(m, budget)? {
        let (sub, _) = m.subrepresentation(bases).expect("enumerated subspaces are stable");
        let class = t.decompose(&sub)?;
        if class.support().is_subset(c.members()) {
            seen.extend(class.support().iter());
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use crate::rigid::enumerate_rigid;
    use crate::subcat::cok;

    const S2: usize = 0;
    const S1: usize = 1;
    const P1: usize = 2;

    fn a2(p: u32) -> IndecTable {
        IndecTable::build_with_field(&Quiver::linear_a(2), PrimeField::new(p).unwrap()).unwrap()
    }

    fn sc(items: &[usize]) -> Subcat {
        Subcat::new(items.iter().copied().collect())
    }

    #[test]
    fn line_enumeration() {
        let mut seen = Vec::new();
        for_each_line(3, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![1, 0], vec![1, 1], vec![1, 2], vec![0, 1]]);
        assert_eq!(projective_count(3, 2), 4);
        let mut n = 0;
        for_each_line(2, 4, |_| n += 1);
        assert_eq!(n, 15);
        for_each_line(5, 0, |_| panic!("no lines in the zero space"));
    }

    #[test]
    fn subspace_counts() {
        // Gaussian binomials: F_3^3 has 1 + 13 + 13 + 1 subspaces
        assert_eq!(all_subspaces(PrimeField::new(3).unwrap(), 3).len(), 28);
        assert_eq!(all_subspaces(PrimeField::new(2).unwrap(), 2).len(), 5);
        assert_eq!(all_subspaces(PrimeField::new(5).unwrap(), 0).len(), 1);
    }

    #[test]
    fn a2_examples() {
        let t = a2(2);
        let b = Bounds { mult_bound: 2, map_budget: 1 << 12 };
        let r = closure_oracles(sc(&[S1, S2]), &t, b);
        assert_eq!(r.verdict(Property::Extensions), Verdict::Fails);
        let cx = &r.counterexamples[&Property::Extensions];
        assert_eq!(cx.witness, ModuleClass::from_multiplicities([(P1, 1)]));

        let full = closure_oracles(Subcat::everything(&t), &t, b);
        assert!(Property::ALL.iter().all(|&p| full.holds(p)));

        let r = closure_oracles(sc(&[S1, P1]), &t, b);
        assert!(r.holds(Property::Images) && r.holds(Property::Cokernels) && r.holds(Property::Extensions));
        // P1 -> S1 is onto with kernel S2
        assert_eq!(r.verdict(Property::EpiKernels), Verdict::Fails);
    }

    #[test]
    fn budget_is_a_third_answer() {
        let t = a2(3);
        let r = closure_oracles(Subcat::everything(&t), &t, Bounds { mult_bound: 2, map_budget: 1 });
        assert_eq!(r.verdict(Property::Images), Verdict::Inconclusive);
        assert!(r.inconclusive > 0);
    }

    #[test]
    fn presentations() {
        let t = a2(3);
        let u = RigidModule::new(&t, [S1, P1].into_iter().collect()).unwrap();
        assert!(has_two_term_presentation(u, S1, &t, 1000).unwrap());
        assert!(!has_two_term_presentation(u, S2, &t, 1000).unwrap());
        let p = RigidModule::new(&t, [P1].into_iter().collect()).unwrap();
        assert!(!has_two_term_presentation(p, S1, &t, 1000).unwrap());
        assert!(has_two_term_presentation(p, P1, &t, 1000).unwrap());
    }

    #[test]
    fn cok_is_ice_closed_a3() {
        for q in crate::DynkinType::a(3).all_orientations() {
            let t = IndecTable::build_with_field(&q, PrimeField::new(2).unwrap()).unwrap();
            let oracle = ClosureOracle::build(&t, t.all(), Bounds::default());
            for u in enumerate_rigid(&t) {
                let r = oracle.report(cok(u, &t));
                assert!(r.holds(Property::Images), "{u:?}: {r:?}");
                assert!(r.holds(Property::Cokernels), "{u:?}: {r:?}");
                assert!(r.holds(Property::Extensions), "{u:?}: {r:?}");
                let (raw, complete) = raw_wide_part(cok(u, &t), &t, Bounds { mult_bound: 3, ..Bounds::default() });
                assert!(complete);
                assert_eq!(raw, crate::subcat::wide_part(cok(u, &t), &t).unwrap());
            }
        }
    }
}
