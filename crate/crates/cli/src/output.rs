//! Serialized shapes of command output. Field order here is output order.

use qrep::{IndecTable, IndexSet, Mat, RigidModule, Subcat};
use serde::Serialize;

/// Dimension vectors of a set of indecomposables, in table order.
pub type DimList = Vec<Vec<usize>>;

pub fn dim_list(t: &IndecTable, set: IndexSet) -> DimList {
    set.iter().map(|i| t.dim(i).to_vec()).collect()
}

fn rows(m: &Mat) -> Vec<Vec<u32>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect()).collect()
}

#[derive(Serialize)]
pub struct Indecomposable {
    dim: Vec<usize>,
    /// One matrix per arrow, in the quiver's arrow order.
    maps: Vec<Vec<Vec<u32>>>,
}

#[derive(Serialize)]
pub struct IndecReport {
    #[serde(rename = "type")]
    ty: Option<String>,
    prime: u32,
    quiver: qrep::Quiver,
    indecomposables: Vec<Indecomposable>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
}

impl IndecReport {
    pub fn new(t: &IndecTable) -> Self {
        IndecReport {
            ty: t.dynkin_type().map(|ty| ty.to_string()),
            prime: t.field().p(),
            quiver: (**t.quiver()).clone(),
            indecomposables: t
                .indecs()
                .iter()
                .map(|m| Indecomposable { dim: m.dim().to_vec(), maps: m.maps().iter().map(rows).collect() })
                .collect(),
            hom: t.hom_matrix().to_vec(),
            ext: t.ext_matrix().to_vec(),
        }
    }
}

#[derive(Serialize)]
pub struct Profile {
    #[serde(rename = "type")]
    ty: Option<String>,
    profile: Vec<u64>,
    total: u64,
}

impl Profile {
    pub fn new(t: &IndecTable, profile: Vec<u64>) -> Self {
        Profile { ty: t.dynkin_type().map(|ty| ty.to_string()), total: profile.iter().sum(), profile }
    }
}

#[derive(Serialize)]
pub struct IceEntry {
    progenerator: DimList,
    members: DimList,
}

impl IceEntry {
    pub fn new(t: &IndecTable, u: RigidModule, c: Subcat) -> Self {
        IceEntry { progenerator: dim_list(t, u.summands()), members: dim_list(t, c.members()) }
    }
}

#[derive(Serialize)]
pub struct IceCount {
    pub count: usize,
}
