//! Indecomposable representations of a Dynkin quiver.
//!
//! Indecomposables are built with BGP reflection functors: each one is a
//! simple representation of some iterated sink mutation of `Q`, pulled back
//! to `Q` through source reflections. The resulting [`IndecTable`] carries
//! the Hom and Ext dimension matrices every later module works from.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Mat, PrimeField};
use crate::indexset::IndexSet;
use crate::quiver::{DynkinType, Quiver};
use crate::rep::{self, Representation};

/// BGP reflection at a sink `v`: a representation of `μ_v Q`.
///
/// The space at `v` becomes the kernel of `⊕_{a: w -> v} M_w -> M_v` and the
/// reversed arrows carry the coordinate projections of that kernel.
pub fn reflection_functor(m: &Representation, v: usize) -> Result<Representation> {
    let q = m.quiver();
    let (mutated, old_to_new) = q.sink_mutation_with_map(v)?;
    let f = m.field();
    let incoming: Vec<usize> = q.arrows_into(v).collect();
    let blocks: Vec<&Mat> = incoming.iter().map(|&a| &m.maps()[a]).collect();
    let kernel = Mat::hstack(f, m.dim()[v], &blocks).kernel_basis();
    let mut dim = m.dim().to_vec();
    dim[v] = kernel.cols();
    let mut maps = vec![Mat::zeros(f, 0, 0); q.arrows().len()];
    for (a, map) in m.maps().iter().enumerate() {
        maps[old_to_new[a]] = map.clone();
    }
    let mut offset = 0;
    for &a in &incoming {
        let w = q.arrows()[a].0;
        maps[old_to_new[a]] = kernel.submatrix(offset..offset + m.dim()[w], 0..kernel.cols());
        offset += m.dim()[w];
    }
    Representation::new(Arc::new(mutated), f, dim, maps)
}

/// BGP reflection at a source `v`, the counterpart of [`reflection_functor`].
///
/// The space at `v` becomes the cokernel of `M_v -> ⊕_{a: v -> w} M_w`.
pub fn coreflection_functor(m: &Representation, v: usize) -> Result<Representation> {
    let q = m.quiver();
    let (mutated, old_to_new) = q.source_mutation_with_map(v)?;
    let f = m.field();
    let outgoing: Vec<usize> = q.arrows_out_of(v).collect();
    let blocks: Vec<&Mat> = outgoing.iter().map(|&a| &m.maps()[a]).collect();
    let combined = Mat::vstack(f, m.dim()[v], &blocks);
    let projection = combined.column_basis().left_kernel();
    debug_assert_eq!(projection.cols(), outgoing.iter().map(|&a| m.dim()[q.arrows()[a].1]).sum::<usize>());
    let mut dim = m.dim().to_vec();
    dim[v] = projection.rows();
    let mut maps = vec![Mat::zeros(f, 0, 0); q.arrows().len()];
    for (a, map) in m.maps().iter().enumerate() {
        maps[old_to_new[a]] = map.clone();
    }
    let mut offset = 0;
    for &a in &outgoing {
        let w = q.arrows()[a].1;
        maps[old_to_new[a]] = projection.submatrix(0..projection.rows(), offset..offset + m.dim()[w]);
        offset += m.dim()[w];
    }
    Representation::new(Arc::new(mutated), f, dim, maps)
}

/// Iso class of a module: multiplicity of each indecomposable summand.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModuleClass(BTreeMap<usize, usize>);

impl ModuleClass {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_multiplicities<I: IntoIterator<Item = (usize, usize)>>(items: I) -> Self {
        let mut m = ModuleClass::new();
        for (i, k) in items {
            m.add(i, k);
        }
        m
    }

    pub fn add(&mut self, index: usize, mult: usize) {
        if mult > 0 {
            *self.0.entry(index).or_default() += mult;
        }
    }

    pub fn multiplicity(&self, index: usize) -> usize {
        self.0.get(&index).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&i, &k)| (i, k))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_basic(&self) -> bool {
        self.0.values().all(|&k| k == 1)
    }

    /// Number of non-isomorphic indecomposable summands.
    pub fn distinct_summands(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> IndexSet {
        self.0.keys().copied().collect()
    }

    pub fn union(&self, other: &ModuleClass) -> ModuleClass {
        let mut out = self.clone();
        for (i, k) in other.iter() {
            out.add(i, k);
        }
        out
    }
}

/// The indecomposables of a Dynkin quiver, or of a disjoint union of
/// Dynkin quivers, with their Hom/Ext data.
#[derive(Clone, Debug)]
pub struct IndecTable {
    quiver: Arc<Quiver>,
    field: PrimeField,
    types: Vec<DynkinType>,
    indecs: Vec<Representation>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    hom_bases: Vec<Vec<Vec<Vec<Mat>>>>,
    hom_inverse: Vec<Vec<Ratio<i128>>>,
}

/// Serializable raw contents of an [`IndecTable`]; derived data is rebuilt on load.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableData {
    pub quiver: Quiver,
    pub field: PrimeField,
    pub indecs: Vec<Representation>,
    pub hom_bases: Vec<Vec<Vec<Vec<Mat>>>>,
}

impl IndecTable {
    pub fn build(quiver: &Quiver) -> Result<Self> {
        Self::build_with_field(quiver, PrimeField::DEFAULT)
    }

    pub fn build_with_field(quiver: &Quiver, field: PrimeField) -> Result<Self> {
        let types = quiver.component_types()?;
        let quiver = Arc::new(quiver.clone());
        let indecs = construct_indecomposables(&quiver, field, &types)?;
        let hom_bases: Vec<Vec<Vec<Vec<Mat>>>> = indecs
            .iter()
            .map(|m| indecs.iter().map(|x| rep::hom_basis_comps(m, x)).collect())
            .collect();
        Self::assemble(quiver, field, types, indecs, hom_bases)
    }

    pub fn from_data(data: TableData) -> Result<Self> {
        let types = data.quiver.component_types()?;
        let quiver = Arc::new(data.quiver);
        if data.indecs.iter().any(|r| **r.quiver() != *quiver || r.field() != data.field) {
            return Err(Error::DimensionMismatch("cached table does not match its quiver".into()));
        }
        Self::assemble(quiver, data.field, types, data.indecs, data.hom_bases)
    }

    pub fn to_data(&self) -> TableData {
        TableData {
            quiver: (*self.quiver).clone(),
            field: self.field,
            indecs: self.indecs.clone(),
            hom_bases: self.hom_bases.clone(),
        }
    }

    fn assemble(
        quiver: Arc<Quiver>,
        field: PrimeField,
        types: Vec<DynkinType>,
        indecs: Vec<Representation>,
        hom_bases: Vec<Vec<Vec<Vec<Mat>>>>,
    ) -> Result<Self> {
        let n = indecs.len();
        if hom_bases.len() != n || hom_bases.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch("hom basis table has the wrong shape".into()));
        }
        let hom: Vec<Vec<usize>> = hom_bases.iter().map(|row| row.iter().map(Vec::len).collect()).collect();
        let ext = (0..n)
            .map(|i| (0..n).map(|j| rep::ext_from_hom(&indecs[i], &indecs[j], hom[i][j])).collect())
            .collect();
        let hom_inverse = rational_inverse(&hom)
            .ok_or_else(|| Error::NoSolution("Hom dimension matrix is singular".into()))?;
        Ok(Self { quiver, field, types, indecs, hom, ext, hom_bases, hom_inverse })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The Dynkin type, when the quiver is connected.
    pub fn dynkin_type(&self) -> Option<DynkinType> {
        match self.types.as_slice() {
            [ty] => Some(*ty),
            _ => None,
        }
    }

    /// Types of the connected components, in [`Quiver::components`] order.
    pub fn component_types(&self) -> &[DynkinType] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    pub fn all(&self) -> IndexSet {
        IndexSet::full(self.len())
    }

    pub fn indec(&self, i: usize) -> &Representation {
        &self.indecs[i]
    }

    pub fn indecs(&self) -> &[Representation] {
        &self.indecs
    }

    pub fn dim(&self, i: usize) -> &[usize] {
        self.indecs[i].dim()
    }

    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    pub fn ext(&self, i: usize, j: usize) -> usize {
        self.ext[i][j]
    }

    pub fn hom_matrix(&self) -> &[Vec<usize>] {
        &self.hom
    }

    pub fn ext_matrix(&self) -> &[Vec<usize>] {
        &self.ext
    }

    /// Components of a basis of `Hom(indec_i, indec_j)`.
    pub fn hom_basis(&self, i: usize, j: usize) -> &[Vec<Mat>] {
        &self.hom_bases[i][j]
    }

    pub fn index_of_dim(&self, dim: &[usize]) -> Option<usize> {
        self.indecs.binary_search_by(|r| r.dim().cmp(dim)).ok()
    }

    pub fn simple_index(&self, v: usize) -> usize {
        let mut d = vec![0; self.quiver.vertex_count()];
        d[v] = 1;
        self.index_of_dim(&d).expect("every simple is indecomposable")
    }

    /// Index of the indecomposable projective at `v`.
    pub fn projective_index(&self, v: usize) -> usize {
        (0..self.len())
            .find(|&i| (0..self.len()).all(|j| self.hom[i][j] == self.dim(j)[v]))
            .expect("projectives are indecomposable")
    }

    /// Union of the supports of the given summands.
    pub fn support(&self, set: IndexSet) -> usize {
        let mut seen = vec![false; self.quiver.vertex_count()];
        for i in set {
            for v in self.indecs[i].support() {
                seen[v] = true;
            }
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Whether `indec_x` is a quotient of a sum of copies of `⊕ gens`.
    pub fn in_fac(&self, gens: IndexSet, x: usize) -> bool {
        let target = &self.indecs[x];
        let basis = gens.iter().flat_map(|i| self.hom_bases[i][x].iter());
        rep::trace_from_basis(target, basis) == target.dim()
    }

    /// Whether `indec_x` embeds into a sum of copies of `⊕ gens`.
    pub fn in_sub(&self, gens: IndexSet, x: usize) -> bool {
        let source = &self.indecs[x];
        let basis = gens.iter().flat_map(|i| self.hom_bases[x][i].iter());
        rep::reject_from_basis(source, basis).iter().all(|&d| d == 0)
    }

    /// `dim Hom(indec_i, m)` for every `i`.
    pub fn fingerprint(&self, m: &Representation) -> Vec<usize> {
        self.indecs.iter().map(|x| rep::hom_dim(x, m)).collect()
    }

    /// Direct sum of indecomposables with multiplicities.
    pub fn module(&self, class: &ModuleClass) -> Representation {
        let parts: Vec<&Representation> =
            class.iter().flat_map(|(i, k)| std::iter::repeat_n(&self.indecs[i], k)).collect();
        Representation::direct_sum(&self.quiver, self.field, &parts)
    }

    /// Direct sum of one copy of each listed indecomposable.
    pub fn basic_module(&self, set: IndexSet) -> Representation {
        let parts: Vec<&Representation> = set.iter().map(|i| &self.indecs[i]).collect();
        Representation::direct_sum(&self.quiver, self.field, &parts)
    }

    /// Multiplicities of the indecomposable summands of `m`.
    ///
    /// Solves `fingerprint(m) = H · μ` exactly over the rationals, where
    /// `H[i][j] = dim Hom(indec_i, indec_j)`, then checks the solution.
    pub fn decompose(&self, m: &Representation) -> Result<ModuleClass> {
        if **m.quiver() != *self.quiver {
            return Err(Error::DimensionMismatch("module over a different quiver".into()));
        }
        let fp = self.fingerprint(m);
        self.decompose_fingerprint(&fp)
    }

    pub fn decompose_fingerprint(&self, fp: &[usize]) -> Result<ModuleClass> {
        let n = self.len();
        let mut class = ModuleClass::new();
        for j in 0..n {
            let mu: Ratio<i128> = (0..n).map(|i| self.hom_inverse[j][i] * Ratio::from_integer(fp[i] as i128)).sum();
            if !mu.is_integer() || *mu.numer() < 0 {
                return Err(Error::NoSolution(format!("multiplicity {mu} for indecomposable {j}")));
            }
            class.add(j, *mu.numer() as usize);
        }
        for i in 0..n {
            let back: usize = class.iter().map(|(j, k)| k * self.hom[i][j]).sum();
            if back != fp[i] {
                return Err(Error::NoSolution(format!("fingerprint mismatch at {i}")));
            }
        }
        Ok(class)
    }

    pub fn iso(&self, m: &Representation, x: &Representation) -> Result<bool> {
        Ok(self.decompose(m)? == self.decompose(x)?)
    }
}

fn rational_inverse(m: &[Vec<usize>]) -> Option<Vec<Vec<Ratio<i128>>>> {
    let n = m.len();
    let zero = Ratio::from_integer(0);
    let one = Ratio::from_integer(1);
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i128>> = row.iter().map(|&x| Ratio::from_integer(x as i128)).collect();
            r.extend((0..n).map(|j| if i == j { one } else { zero }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| a[r][c] != zero)?;
        a.swap(c, p);
        let inv = one / a[c][c];
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        let pivot = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != c && row[c] != zero {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x -= factor * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// One indecomposable per positive root, sorted by dimension vector.
fn construct_indecomposables(
    quiver: &Arc<Quiver>,
    field: PrimeField,
    types: &[DynkinType],
) -> Result<Vec<Representation>> {
    let expected: usize = types.iter().map(|ty| ty.positive_root_count()).sum();
    let order = quiver.admissible_sinks();
    let n = quiver.vertex_count();
    let mut found: Vec<Representation> = Vec::with_capacity(expected);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut current = Arc::new((**quiver).clone());
    let mut path: Vec<usize> = Vec::new();
    // a reduced word for the longest element is a prefix of the repeated
    // admissible sequence, so `expected` steps reach every root
    let max_steps = expected + 2 * n * n;
    for step in 0..max_steps {
        if found.len() == expected {
            break;
        }
        let v = order[step % n];
        let mut m = Representation::simple(current.clone(), field, v);
        for &w in path.iter().rev() {
            m = coreflection_functor(&m, w)?;
            if m.is_zero() {
                break;
            }
        }
        if !m.is_zero() && seen.insert(m.dim().to_vec()) {
            debug_assert_eq!(**m.quiver(), **quiver);
            if rep::hom_dim(&m, &m) != 1 {
                return Err(Error::NoSolution(format!("constructed module {:?} is not a brick", m.dim())));
            }
            found.push(m);
        }
        current = Arc::new(current.sink_mutation(v)?);
        path.push(v);
    }
    if found.len() != expected {
        return Err(Error::NoSolution(format!("found {} of {expected} indecomposables", found.len())));
    }
    found.sort_by(|a, b| a.dim().cmp(b.dim()));
    // re-anchor every module on the caller's quiver handle
    Ok(found
        .into_iter()
        .map(|m| Representation::new(quiver.clone(), field, m.dim().to_vec(), m.maps().to_vec()).expect("same quiver"))
        .collect())
}
