//! Basic rigid modules: enumeration and the module-side constructions
//! (Fac-minimal version, co-Bongartz completion, exceptional ordering).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indec::IndecTable;
use crate::indexset::IndexSet;
use crate::par;

/// A basic rigid module, stored as its set of indecomposable summands.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RigidModule(IndexSet);

impl RigidModule {
    pub const ZERO: RigidModule = RigidModule(IndexSet::EMPTY);

    /// Checks that the summands are pairwise (and self-) Ext-orthogonal.
    pub fn new(t: &IndecTable, summands: IndexSet) -> Result<Self> {
        if is_rigid(t, summands) {
            Ok(RigidModule(summands))
        } else {
            Err(Error::NotRigid)
        }
    }

    pub fn summands(self) -> IndexSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for RigidModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rigid{:?}", self.0)
    }
}

pub fn is_rigid(t: &IndecTable, set: IndexSet) -> bool {
    set.iter().all(|i| set.iter().all(|j| t.ext(i, j) == 0))
}

/// For each indecomposable, the set of indecomposables it can share a
/// rigid module with (Ext vanishing both ways). Non-rigid indecomposables get
/// an empty mask.
pub fn compatibility_masks(t: &IndecTable) -> Vec<IndexSet> {
    (0..t.len())
        .map(|i| {
            if t.ext(i, i) != 0 {
                return IndexSet::EMPTY;
            }
            (0..t.len()).filter(|&j| t.ext(i, j) == 0 && t.ext(j, i) == 0).collect()
        })
        .collect()
}

fn extend_cliques(masks: &[IndexSet], current: IndexSet, candidates: IndexSet, out: &mut Vec<RigidModule>) {
    out.push(RigidModule(current));
    for i in candidates {
        let rest = IndexSet::from_bits(candidates.bits() & !((2u128 << i) - 1));
        extend_cliques(masks, current.with(i), rest.intersection(masks[i]), out);
    }
}

fn count_cliques(masks: &[IndexSet], size: usize, candidates: IndexSet, profile: &mut [u64]) {
    profile[size] += 1;
    for i in candidates {
        let rest = IndexSet::from_bits(candidates.bits() & !((2u128 << i) - 1));
        count_cliques(masks, size + 1, rest.intersection(masks[i]), profile);
    }
}

/// Every basic rigid module, including zero, in canonical order: the
/// lexicographic order of ascending summand lists.
///
/// Subtrees rooted at each smallest summand are searched independently and
/// concatenated in index order, so the output is the same with or without
/// the `parallel` feature.
pub fn enumerate_rigid(t: &IndecTable) -> Vec<RigidModule> {
    let masks = compatibility_masks(t);
    let roots: Vec<usize> = (0..t.len()).filter(|&i| !masks[i].is_empty()).collect();
    let branches = par::map(&roots, |&i| {
        let mut out = Vec::new();
        let later = IndexSet::from_bits(!((2u128 << i) - 1) & IndexSet::full(t.len()).bits());
        extend_cliques(&masks, IndexSet::singleton(i), later.intersection(masks[i]), &mut out);
        out
    });
    let mut all = Vec::with_capacity(1 + branches.iter().map(Vec::len).sum::<usize>());
    all.push(RigidModule::ZERO);
    all.extend(branches.into_iter().flatten());
    all
}

/// Number of basic rigid modules with `i` summands, for `i = 0..=rank`.
pub fn rigid_profile(t: &IndecTable) -> Vec<u64> {
    let masks = compatibility_masks(t);
    let width = t.quiver().vertex_count() + 2;
    let roots: Vec<usize> = (0..t.len()).collect();
    let partials = par::map(&roots, |&i| {
        let mut profile = vec![0u64; width];
        if !masks[i].is_empty() {
            let later = IndexSet::from_bits(!((2u128 << i) - 1) & IndexSet::full(t.len()).bits());
            count_cliques(&masks, 1, later.intersection(masks[i]), &mut profile);
        }
        profile
    });
    let mut profile = vec![0u64; width];
    profile[0] = 1;
    for p in partials {
        for (slot, c) in profile.iter_mut().zip(p) {
            *slot += c;
        }
    }
    // rigid modules never have more summands than vertices
    assert_eq!(profile[width - 1], 0, "rigid module with more summands than vertices");
    profile.truncate(width - 1);
    profile
}

/// The Fac-minimal version of `u`: repeatedly drop the first summand lying
/// in the Fac of the others until none does.
pub fn fac_minimal_version(u: RigidModule, t: &IndecTable) -> RigidModule {
    let order: Vec<usize> = u.0.to_vec();
    fac_minimal_version_by(u, t, &order)
}

/// [`fac_minimal_version`] with an explicit priority order for deletions.
pub fn fac_minimal_version_by(u: RigidModule, t: &IndecTable, order: &[usize]) -> RigidModule {
    let mut current = u.0;
    loop {
        let redundant = order.iter().copied().find(|&i| current.contains(i) && t.in_fac(current.without(i), i));
        match redundant {
            Some(i) => current.remove(i),
            None => return RigidModule(current),
        }
    }
}

pub fn is_fac_minimal(u: RigidModule, t: &IndecTable) -> bool {
    u.0.iter().all(|i| !t.in_fac(u.0.without(i), i))
}

/// The Ext-projectives of `Fac u`, which form the support tilting module with
/// the same Fac as `u`.
pub fn co_bongartz(u: RigidModule, t: &IndecTable) -> RigidModule {
    let fac: IndexSet = (0..t.len()).filter(|&x| t.in_fac(u.0, x)).collect();
    RigidModule(fac.iter().filter(|&x| fac.iter().all(|y| t.ext(x, y) == 0)).collect())
}

/// `|u|` equals the number of vertices in the joint support of the summands.
pub fn is_support_tilting(u: RigidModule, t: &IndecTable) -> bool {
    u.len() == t.support(u.0)
}

/// Orders the summands so no later summand has Hom or Ext¹ to an earlier one.
/// Ties go to the smallest index.
pub fn exceptional_order(u: RigidModule, t: &IndecTable) -> Result<Vec<usize>> {
    let members = u.0.to_vec();
    let arc = |i: usize, j: usize| i != j && (t.hom(i, j) != 0 || t.ext(i, j) != 0);
    let mut indeg: Vec<usize> = members.iter().map(|&j| members.iter().filter(|&&i| arc(i, j)).count()).collect();
    let mut ready: BTreeSet<usize> = (0..members.len()).filter(|&k| indeg[k] == 0).collect();
    let mut order = Vec::with_capacity(members.len());
    let mut placed = vec![false; members.len()];
    while let Some(k) = ready.pop_first() {
        order.push(members[k]);
        placed[k] = true;
        for (l, &j) in members.iter().enumerate() {
            if !placed[l] && arc(members[k], j) {
                indeg[l] -= 1;
                if indeg[l] == 0 {
                    ready.insert(l);
                }
            }
        }
    }
    if order.len() != members.len() {
        let stuck = members.iter().zip(&placed).filter(|(_, &p)| !p).map(|(&m, _)| m).collect();
        return Err(Error::CycleFound(stuck));
    }
    Ok(order)
}
