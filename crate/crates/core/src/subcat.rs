//! Subcategories of `mod kQ` as sets of indecomposables, and the maps between
//! rigid modules, ICE-closed subcategories, torsion classes and wide
//! subcategories.
//!
//! Every subcategory here is the additive closure of its members: a module
//! belongs to it exactly when each indecomposable summand does.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indec::IndecTable;
use crate::indexset::IndexSet;
use crate::rigid::{self, RigidModule};

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subcat(IndexSet);

impl Subcat {
    pub const ZERO: Subcat = Subcat(IndexSet::EMPTY);

    pub fn new(members: IndexSet) -> Self {
        Subcat(members)
    }

    pub fn everything(t: &IndecTable) -> Self {
        Subcat(t.all())
    }

    pub fn members(self) -> IndexSet {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(self, other: Subcat) -> bool {
        self.0.is_subset(other.0)
    }
}

impl From<RigidModule> for Subcat {
    fn from(u: RigidModule) -> Self {
        Subcat(u.summands())
    }
}

impl fmt::Debug for Subcat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subcat{:?}", self.0)
    }
}

/// `Fac u`: quotients of finite sums of copies of the members of `u`.
pub fn fac_closure(u: IndexSet, t: &IndecTable) -> Subcat {
    Subcat((0..t.len()).filter(|&x| t.in_fac(u, x)).collect())
}

/// `Sub u`: submodules of finite sums of copies of the members of `u`.
pub fn sub_closure(u: IndexSet, t: &IndecTable) -> Subcat {
    Subcat((0..t.len()).filter(|&x| t.in_sub(u, x)).collect())
}

/// `u^⊥`: modules receiving neither maps nor extensions from `u`.
pub fn right_perp(u: IndexSet, t: &IndecTable) -> Subcat {
    Subcat((0..t.len()).filter(|&x| u.iter().all(|i| t.hom(i, x) == 0 && t.ext(i, x) == 0)).collect())
}

/// `^⊥u`: modules with neither maps nor extensions into `u`.
pub fn left_perp(u: IndexSet, t: &IndecTable) -> Subcat {
    Subcat((0..t.len()).filter(|&x| u.iter().all(|i| t.hom(x, i) == 0 && t.ext(x, i) == 0)).collect())
}

/// Smallest wide subcategory containing a rigid `u`, computed as `^⊥(u^⊥)`.
pub fn wide_envelope(u: IndexSet, t: &IndecTable) -> Result<Subcat> {
    if !rigid::is_rigid(t, u) {
        return Err(Error::NotRigid);
    }
    Ok(left_perp(right_perp(u, t).members(), t))
}

/// `cok u`, the ICE-closed subcategory with Ext-progenerator `u`, as
/// `Fac u ∩ ^⊥(u^⊥)`.
pub fn cok(u: RigidModule, t: &IndecTable) -> Subcat {
    let envelope = left_perp(right_perp(u.summands(), t).members(), t);
    Subcat(fac_closure(u.summands(), t).members().intersection(envelope.members()))
}

/// [`cok`] for an unchecked summand set.
pub fn cok_of(u: IndexSet, t: &IndecTable) -> Result<Subcat> {
    Ok(cok(RigidModule::new(t, u)?, t))
}

/// Members `x` of `c` with `Ext¹(x, c) = 0`.
pub fn ext_projectives(c: Subcat, t: &IndecTable) -> Subcat {
    Subcat(c.0.iter().filter(|&x| c.0.iter().all(|y| t.ext(x, y) == 0)).collect())
}

/// The Ext-projectives of `c` as a basic module. Fails with `NotRigid` when
/// they are not mutually Ext-free, which means `c` was not extension-closed.
pub fn progenerator(c: Subcat, t: &IndecTable) -> Result<RigidModule> {
    RigidModule::new(t, ext_projectives(c, t).members())
}

/// `c = cok P(c)`: every member is a cokernel of a map between Ext-projectives.
pub fn has_enough_ext_projectives(c: Subcat, t: &IndecTable) -> bool {
    progenerator(c, t).is_ok_and(|p| cok(p, t) == c)
}

/// The smallest torsion class containing an extension-closed `c`, i.e. `Fac c`.
pub fn torsion_closure(c: Subcat, t: &IndecTable) -> Subcat {
    fac_closure(c.0, t)
}

/// The wide part `W(c)` of an ICE-closed subcategory, computed as
/// `cok` of the Fac-minimal version of its progenerator.
pub fn wide_part(c: Subcat, t: &IndecTable) -> Result<Subcat> {
    let p = progenerator(c, t)?;
    Ok(cok(rigid::fac_minimal_version(p, t), t))
}

/// Split projectives of `c`: the additive closure of the Fac-minimal version
/// of its progenerator.
pub fn split_projectives(c: Subcat, t: &IndecTable) -> Result<Subcat> {
    let p = progenerator(c, t)?;
    Ok(Subcat::from(rigid::fac_minimal_version(p, t)))
}

/// All ICE-closed subcategories as `(progenerator, cok)` pairs, in the
/// canonical order of their progenerators.
pub fn enumerate_ice(t: &IndecTable) -> Vec<(RigidModule, Subcat)> {
    let rigid = rigid::enumerate_rigid(t);
    let cats = crate::par::map(&rigid, |&u| cok(u, t));
    rigid.into_iter().zip(cats).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{DynkinType, Quiver};

    const S2: usize = 0;
    const S1: usize = 1;
    const P1: usize = 2;

    fn a2() -> IndecTable {
        IndecTable::build(&Quiver::linear_a(2)).unwrap()
    }

    fn set(items: &[usize]) -> IndexSet {
        items.iter().copied().collect()
    }

    fn sc(items: &[usize]) -> Subcat {
        Subcat(set(items))
    }

    fn rigid(t: &IndecTable, items: &[usize]) -> RigidModule {
        RigidModule::new(t, set(items)).unwrap()
    }

    #[test]
    fn closures() {
        let t = a2();
        assert_eq!(fac_closure(set(&[P1]), &t), sc(&[S1, P1]));
        assert_eq!(fac_closure(t.all(), &t), Subcat::everything(&t));
        assert_eq!(sub_closure(set(&[P1]), &t), sc(&[S2, P1]));
    }

    #[test]
    fn perpendiculars() {
        let t = a2();
        assert_eq!(right_perp(set(&[S2]), &t), sc(&[S1]));
        assert_eq!(left_perp(set(&[S2]), &t), sc(&[P1]));
        assert_eq!(right_perp(IndexSet::EMPTY, &t), Subcat::everything(&t));
        assert_eq!(wide_envelope(set(&[S1, P1]), &t).unwrap(), Subcat::everything(&t));
        assert_eq!(wide_envelope(set(&[S1, S2]), &t), Err(Error::NotRigid));
    }

    #[test]
    fn cok_examples() {
        let t = a2();
        assert_eq!(cok(RigidModule::ZERO, &t), Subcat::ZERO);
        assert_eq!(cok(rigid(&t, &[S2, P1]), &t), Subcat::everything(&t));
        assert_eq!(cok(rigid(&t, &[S1, P1]), &t), sc(&[S1, P1]));
        assert_eq!(cok(rigid(&t, &[P1]), &t), sc(&[P1]));
        assert_eq!(cok_of(set(&[S1, S2]), &t), Err(Error::NotRigid));
    }

    #[test]
    fn projectives() {
        let t = a2();
        assert_eq!(ext_projectives(sc(&[S1, P1]), &t), sc(&[S1, P1]));
        assert_eq!(progenerator(Subcat::everything(&t), &t).unwrap().summands(), set(&[S2, P1]));
        assert_eq!(ext_projectives(Subcat::ZERO, &t), Subcat::ZERO);
        // {S1, S2} is not extension-closed; only S2 is Ext-projective in it
        assert_eq!(progenerator(sc(&[S1, S2]), &t).unwrap().summands(), set(&[S2]));
        assert!(!has_enough_ext_projectives(sc(&[S1, S2]), &t));
        assert!(has_enough_ext_projectives(sc(&[S1, P1]), &t));
    }

    #[test]
    fn torsion_and_wide() {
        let t = a2();
        assert_eq!(torsion_closure(sc(&[P1]), &t), sc(&[S1, P1]));
        let tors = sc(&[S1, P1]);
        assert_eq!(torsion_closure(tors, &t), tors);
        assert_eq!(torsion_closure(Subcat::ZERO, &t), Subcat::ZERO);
        assert_eq!(wide_part(sc(&[S1, P1]), &t).unwrap(), sc(&[P1]));
        assert_eq!(wide_part(Subcat::everything(&t), &t).unwrap(), Subcat::everything(&t));
        assert_eq!(wide_part(sc(&[P1]), &t).unwrap(), sc(&[P1]));
        assert_eq!(split_projectives(sc(&[S1, P1]), &t).unwrap(), sc(&[P1]));
        assert_eq!(split_projectives(Subcat::everything(&t), &t).unwrap(), sc(&[S2, P1]));
        assert_eq!(split_projectives(Subcat::ZERO, &t).unwrap(), Subcat::ZERO);
    }

    #[test]
    fn main_bijection_round_trip() {
        for q in DynkinType::a(3).all_orientations().into_iter().chain(DynkinType::d(4).all_orientations()) {
            let t = IndecTable::build(&q).unwrap();
            let ice = enumerate_ice(&t);
            let mut cats: Vec<u128> = ice.iter().map(|(_, c)| c.members().bits()).collect();
            cats.sort();
            cats.dedup();
            assert_eq!(cats.len(), ice.len());
            for (u, c) in ice {
                assert_eq!(progenerator(c, &t).unwrap(), u);
                assert!(has_enough_ext_projectives(c, &t));
                let w = wide_part(c, &t).unwrap();
                assert!(w.is_subset(c));
                assert!(split_projectives(c, &t).unwrap().is_subset(ext_projectives(c, &t)));
                assert_eq!(wide_part(w, &t).unwrap(), w);
            }
        }
    }
}
