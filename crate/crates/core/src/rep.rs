//! Quiver representations and the morphism spaces between them.
//!
//! A representation puts a vector space `F_p^{dim[v]}` at every vertex and a
//! matrix of shape `dim[target] x dim[source]` on every arrow. Morphisms are
//! vertexwise matrices commuting with the arrow maps.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{subspace_sum, Mat, PrimeField};
use crate::quiver::Quiver;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: PrimeField,
    dim: Vec<usize>,
    maps: Vec<Mat>,
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, field: PrimeField, dim: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        if dim.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "dimension vector of length {} on {} vertices",
                dim.len(),
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} arrow maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (k, (&(s, t), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if m.rows() != dim[t] || m.cols() != dim[s] || m.field() != field {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {k} ({s}->{t}) carries a {}x{} matrix, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    dim[t],
                    dim[s]
                )));
            }
        }
        Ok(Self { quiver, field, dim, maps })
    }

    pub fn zero(quiver: Arc<Quiver>, field: PrimeField) -> Self {
        let dim = vec![0; quiver.vertex_count()];
        let maps = quiver.arrows().iter().map(|_| Mat::zeros(field, 0, 0)).collect();
        Self { quiver, field, dim, maps }
    }

    /// The simple representation `S(v)`.
    pub fn simple(quiver: Arc<Quiver>, field: PrimeField, v: usize) -> Self {
        let mut dim = vec![0; quiver.vertex_count()];
        dim[v] = 1;
        let maps = quiver.arrows().iter().map(|&(s, t)| Mat::zeros(field, dim[t], dim[s])).collect();
        Self { quiver, field, dim, maps }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> &[usize] {
        &self.dim
    }

    pub fn total_dim(&self) -> usize {
        self.dim.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim.iter().all(|&d| d == 0)
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    /// Vertices where the representation is nonzero.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.dim.iter().enumerate().filter(|(_, &d)| d > 0).map(|(v, _)| v)
    }

    /// Direct sum over `quiver`; an empty list gives the zero representation.
    pub fn direct_sum(quiver: &Arc<Quiver>, field: PrimeField, parts: &[&Representation]) -> Representation {
        let n = quiver.vertex_count();
        let dim = (0..n).map(|v| parts.iter().map(|p| p.dim[v]).sum()).collect();
        let maps = (0..quiver.arrows().len())
            .map(|a| {
                let blocks: Vec<&Mat> = parts.iter().map(|p| &p.maps[a]).collect();
                Mat::block_diag(field, &blocks)
            })
            .collect();
        Representation { quiver: quiver.clone(), field, dim, maps }
    }

    /// The subrepresentation spanned at each vertex by the columns of
    /// `bases[v]`, with its inclusion. The spans must be stable under the
    /// arrow maps and the columns independent.
    pub fn subrepresentation(&self, bases: Vec<Mat>) -> Result<(Representation, Morphism)> {
        if bases.len() != self.dim.len() || bases.iter().zip(&self.dim).any(|(b, &d)| b.rows() != d || b.rank() != b.cols())
        {
            return Err(Error::DimensionMismatch("subspace bases do not fit the representation".into()));
        }
        for (a, &(i, j)) in self.quiver.arrows().iter().enumerate() {
            if bases[j].solve(&self.maps[a].mul(&bases[i])).is_none() {
                return Err(Error::DimensionMismatch(format!("subspace not stable under arrow {i}->{j}")));
            }
        }
        let dim = bases.iter().map(|b| b.cols()).collect();
        let maps = induced_maps(self, &bases);
        let sub = Representation { quiver: self.quiver.clone(), field: self.field, dim, maps };
        let incl = Morphism { source: sub.clone(), target: self.clone(), comps: bases };
        Ok((sub, incl))
    }

    /// The identity endomorphism.
    pub fn identity(&self) -> Morphism {
        let comps = self.dim.iter().map(|&d| Mat::identity(self.field, d)).collect();
        Morphism { source: self.clone(), target: self.clone(), comps }
    }

    /// Deletes the space at `v` and the arrows touching it.
    pub fn restrict_away(&self, v: usize) -> Result<Representation> {
        let quiver = Arc::new(self.quiver.remove_vertex(v)?);
        let dim = self.dim.iter().enumerate().filter(|&(w, _)| w != v).map(|(_, &d)| d).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .filter(|(&(s, t), _)| s != v && t != v)
            .map(|(_, m)| m.clone())
            .collect();
        Representation::new(quiver, self.field, dim, maps)
    }

    /// Removes every `S(v)` summand, for `v` a sink or a source.
    ///
    /// At a sink the `S(v)` summands form a complement of the images of the
    /// incoming arrows, so the result keeps only the sum of those images. At a
    /// source they sit inside the common kernel of the outgoing arrows, which
    /// is quotiented out.
    pub fn strip_simple(&self, v: usize) -> Result<Representation> {
        let q = &self.quiver;
        if v >= q.vertex_count() {
            return Err(Error::NoSuchVertex(v));
        }
        let f = self.field;
        let mut dim = self.dim.clone();
        let mut maps = self.maps.clone();
        if q.is_sink(v) {
            let incoming: Vec<usize> = q.arrows_into(v).collect();
            let blocks: Vec<&Mat> = incoming.iter().map(|&a| &self.maps[a]).collect();
            let span = subspace_sum(f, self.dim[v], &blocks)?;
            dim[v] = span.cols();
            for &a in &incoming {
                maps[a] = span.solve(&self.maps[a]).expect("arrow image lies in the span");
            }
        } else if q.is_source(v) {
            let outgoing: Vec<usize> = q.arrows_out_of(v).collect();
            let blocks: Vec<&Mat> = outgoing.iter().map(|&a| &self.maps[a]).collect();
            let common_kernel = Mat::vstack(f, self.dim[v], &blocks).kernel_basis();
            let quotient = common_kernel.left_kernel();
            let section = quotient.right_inverse().expect("quotient map is surjective");
            dim[v] = quotient.rows();
            for &a in &outgoing {
                maps[a] = self.maps[a].mul(&section);
            }
        } else {
            return Err(Error::NotSinkOrSource(v));
        }
        Representation::new(q.clone(), f, dim, maps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    comps: Vec<Mat>,
}

impl Morphism {
    /// Checks shapes and the intertwiner law before building the morphism.
    pub fn new(source: Representation, target: Representation, comps: Vec<Mat>) -> Result<Self> {
        if source.quiver != target.quiver || comps.len() != source.dim.len() {
            return Err(Error::DimensionMismatch("morphism between different quivers".into()));
        }
        for (v, c) in comps.iter().enumerate() {
            if c.rows() != target.dim[v] || c.cols() != source.dim[v] {
                return Err(Error::DimensionMismatch(format!("component at vertex {v} has the wrong shape")));
            }
        }
        let m = Morphism { source, target, comps };
        if !m.commutes() {
            return Err(Error::DimensionMismatch("components do not commute with the arrow maps".into()));
        }
        Ok(m)
    }

    pub fn zero(source: &Representation, target: &Representation) -> Morphism {
        let comps = (0..source.dim.len()).map(|v| Mat::zeros(source.field, target.dim[v], source.dim[v])).collect();
        Morphism { source: source.clone(), target: target.clone(), comps }
    }

    fn commutes(&self) -> bool {
        let q = &self.source.quiver;
        q.arrows().iter().enumerate().all(|(a, &(i, j))| {
            self.comps[j].mul(&self.source.maps[a]) == self.target.maps[a].mul(&self.comps[i])
        })
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn comps(&self) -> &[Mat] {
        &self.comps
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().zip(&self.target.dim).all(|(c, &d)| c.rank() == d)
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().zip(&self.source.dim).all(|(c, &d)| c.rank() == d)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| b.mul(a)).collect();
        Morphism { source: self.source.clone(), target: other.target.clone(), comps }
    }

    /// Kernel object with its inclusion into the source.
    pub fn kernel(&self) -> (Representation, Morphism) {
        let src = &self.source;
        let f = src.field;
        let bases: Vec<Mat> = self.comps.iter().map(|c| c.kernel_basis()).collect();
        let dim = bases.iter().map(|b| b.cols()).collect();
        let maps = induced_maps(src, &bases);
        let rep = Representation { quiver: src.quiver.clone(), field: f, dim, maps };
        let incl = Morphism { source: rep.clone(), target: src.clone(), comps: bases };
        (rep, incl)
    }

    /// Image object with its inclusion into the target.
    pub fn image(&self) -> (Representation, Morphism) {
        let tgt = &self.target;
        let bases: Vec<Mat> = self.comps.iter().map(|c| c.column_basis()).collect();
        let dim = bases.iter().map(|b| b.cols()).collect();
        let maps = induced_maps(tgt, &bases);
        let rep = Representation { quiver: tgt.quiver.clone(), field: tgt.field, dim, maps };
        let incl = Morphism { source: rep.clone(), target: tgt.clone(), comps: bases };
        (rep, incl)
    }

    /// Cokernel object with the projection from the target.
    pub fn cokernel(&self) -> (Representation, Morphism) {
        let tgt = &self.target;
        let projections: Vec<Mat> = self.comps.iter().map(|c| c.column_basis().left_kernel()).collect();
        let sections: Vec<Mat> =
            projections.iter().map(|p| p.right_inverse().expect("projection has full row rank")).collect();
        let dim = projections.iter().map(|p| p.rows()).collect();
        let maps = tgt
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(i, j))| projections[j].mul(&tgt.maps[a]).mul(&sections[i]))
            .collect();
        let rep = Representation { quiver: tgt.quiver.clone(), field: tgt.field, dim, maps };
        let proj = Morphism { source: tgt.clone(), target: rep.clone(), comps: projections };
        (rep, proj)
    }
}

/// Arrow maps restricted to the subrepresentation spanned by `bases`, which
/// must be stable under every arrow and have independent columns.
fn induced_maps(rep: &Representation, bases: &[Mat]) -> Vec<Mat> {
    rep.quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(i, j))| {
            let moved = rep.maps[a].mul(&bases[i]);
            bases[j].solve(&moved).expect("subspace is stable under arrow maps")
        })
        .collect()
}

/// Vertexwise components of a basis of `Hom(m, x)`.
pub fn hom_basis_comps(m: &Representation, x: &Representation) -> Vec<Vec<Mat>> {
    let q = &m.quiver;
    let f = m.field;
    let n = q.vertex_count();
    let mut offset = Vec::with_capacity(n + 1);
    let mut total = 0;
    for v in 0..n {
        offset.push(total);
        total += x.dim[v] * m.dim[v];
    }
    if total == 0 {
        return Vec::new();
    }
    let eq_rows: usize = q.arrows().iter().map(|&(i, j)| x.dim[j] * m.dim[i]).sum();
    let mut system = Mat::zeros(f, eq_rows, total);
    let mut row = 0;
    for (a, &(i, j)) in q.arrows().iter().enumerate() {
        let (ma, xa) = (&m.maps[a], &x.maps[a]);
        for r in 0..x.dim[j] {
            for c in 0..m.dim[i] {
                // (phi_j M_a)[r][c] - (X_a phi_i)[r][c] = 0
                for k in 0..m.dim[j] {
                    let coeff = ma.get(k, c);
                    if coeff != 0 {
                        let col = offset[j] + r * m.dim[j] + k;
                        system.set(row, col, f.add(system.get(row, col), coeff));
                    }
                }
                for k in 0..x.dim[i] {
                    let coeff = xa.get(r, k);
                    if coeff != 0 {
                        let col = offset[i] + k * m.dim[i] + c;
                        system.set(row, col, f.sub(system.get(row, col), coeff));
                    }
                }
                row += 1;
            }
        }
    }
    let kernel = system.kernel_basis();
    (0..kernel.cols())
        .map(|b| {
            (0..n)
                .map(|v| {
                    let data = (0..x.dim[v] * m.dim[v]).map(|e| kernel.get(offset[v] + e, b)).collect();
                    Mat::from_vec(f, x.dim[v], m.dim[v], data)
                })
                .collect()
        })
        .collect()
}

pub fn hom_basis(m: &Representation, x: &Representation) -> Vec<Morphism> {
    hom_basis_comps(m, x)
        .into_iter()
        .map(|comps| Morphism { source: m.clone(), target: x.clone(), comps })
        .collect()
}

pub fn hom_dim(m: &Representation, x: &Representation) -> usize {
    hom_basis_comps(m, x).len()
}

/// `dim Ext^1(m, x)` via `dim Hom(m, x) - <dim m, dim x>`, exact over a path
/// algebra.
pub fn ext_dim(m: &Representation, x: &Representation) -> usize {
    ext_from_hom(m, x, hom_dim(m, x))
}

pub(crate) fn ext_from_hom(m: &Representation, x: &Representation, hom: usize) -> usize {
    let euler = m.quiver.euler_form(&m.dim, &x.dim).expect("same quiver");
    let ext = hom as i64 - euler;
    assert!(ext >= 0, "negative Ext dimension: hom {hom}, euler {euler}");
    ext as usize
}

/// Per-vertex dimensions of the trace of `u` in `x`: the sum of the images
/// of all morphisms `u -> x`.
pub fn trace_in(u: &Representation, x: &Representation) -> Vec<usize> {
    trace_from_basis(x, &hom_basis_comps(u, x))
}

pub(crate) fn trace_from_basis<'a, I>(x: &Representation, basis: I) -> Vec<usize>
where
    I: IntoIterator<Item = &'a Vec<Mat>> + Clone,
{
    (0..x.dim.len())
        .map(|v| {
            let blocks: Vec<&Mat> = basis.clone().into_iter().map(|comps| &comps[v]).collect();
            if blocks.is_empty() {
                0
            } else {
                Mat::hstack(x.field, x.dim[v], &blocks).rank()
            }
        })
        .collect()
}

/// Dimensions of the common kernel of all listed morphisms out of `x`.
pub(crate) fn reject_from_basis<'a, I>(x: &Representation, basis: I) -> Vec<usize>
where
    I: IntoIterator<Item = &'a Vec<Mat>> + Clone,
{
    (0..x.dim.len())
        .map(|v| {
            let blocks: Vec<&Mat> = basis.clone().into_iter().map(|comps| &comps[v]).collect();
            x.dim[v] - Mat::vstack(x.field, x.dim[v], &blocks).rank()
        })
        .collect()
}

/// `x` is a quotient of a direct sum of copies of `u`.
pub fn is_in_fac(u: &Representation, x: &Representation) -> bool {
    trace_in(u, x) == x.dim
}

/// `x` embeds into a direct sum of copies of `u`.
pub fn is_in_sub(u: &Representation, x: &Representation) -> bool {
    reject_from_basis(x, &hom_basis_comps(x, u)).iter().all(|&d| d == 0)
}

/// Cocycles `(D_a)` representing a basis of `Ext^1(n, l)`.
///
/// Extensions of `n` by `l` are the representations `E_v = l_v ⊕ n_v` with
/// arrow maps `[[l_a, D_a], [0, n_a]]`; two cocycles give equivalent
/// extensions exactly when they differ by `l_a h_i - h_j n_a`. The returned
/// cocycles are standard basis vectors spanning a complement of those
/// coboundaries.
pub fn ext_cocycle_basis(n: &Representation, l: &Representation) -> Vec<Vec<Mat>> {
    let q = &n.quiver;
    let f = n.field;
    let verts = q.vertex_count();
    let mut h_off = Vec::with_capacity(verts);
    let mut h_total = 0;
    for v in 0..verts {
        h_off.push(h_total);
        h_total += l.dim[v] * n.dim[v];
    }
    let mut d_off = Vec::with_capacity(q.arrows().len());
    let mut d_total = 0;
    for &(i, j) in q.arrows() {
        d_off.push(d_total);
        d_total += l.dim[j] * n.dim[i];
    }
    let mut coboundary = Mat::zeros(f, d_total, h_total);
    for (a, &(i, j)) in q.arrows().iter().enumerate() {
        let (la, na) = (&l.maps[a], &n.maps[a]);
        for r in 0..l.dim[j] {
            for c in 0..n.dim[i] {
                let row = d_off[a] + r * n.dim[i] + c;
                // (l_a h_i)[r][c]
                for k in 0..l.dim[i] {
                    let coeff = la.get(r, k);
                    if coeff != 0 {
                        let col = h_off[i] + k * n.dim[i] + c;
                        coboundary.set(row, col, f.add(coboundary.get(row, col), coeff));
                    }
                }
                // -(h_j n_a)[r][c]
                for k in 0..n.dim[j] {
                    let coeff = na.get(k, c);
                    if coeff != 0 {
                        let col = h_off[j] + r * n.dim[j] + k;
                        coboundary.set(row, col, f.sub(coboundary.get(row, col), coeff));
                    }
                }
            }
        }
    }
    let complement = coboundary.complement_basis();
    (0..complement.cols())
        .map(|b| {
            q.arrows()
                .iter()
                .enumerate()
                .map(|(a, &(i, j))| {
                    let data = (0..l.dim[j] * n.dim[i]).map(|e| complement.get(d_off[a] + e, b)).collect();
                    Mat::from_vec(f, l.dim[j], n.dim[i], data)
                })
                .collect()
        })
        .collect()
}

/// Middle term of the extension of `n` by `l` given by the cocycle `d`.
pub fn extension_middle(n: &Representation, l: &Representation, d: &[Mat]) -> Representation {
    let q = &n.quiver;
    let f = n.field;
    let dim: Vec<usize> = (0..q.vertex_count()).map(|v| l.dim[v] + n.dim[v]).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(i, j))| {
            let mut m = Mat::zeros(f, dim[j], dim[i]);
            m.paste(0, 0, &l.maps[a]);
            m.paste(0, l.dim[i], &d[a]);
            m.paste(l.dim[j], l.dim[i], &n.maps[a]);
            m
        })
        .collect();
    Representation { quiver: q.clone(), field: f, dim, maps }
}

/// Builds the morphism `source -> target` with components
/// `sum_k coeffs[k] * basis[k]`.
pub fn combine(
    source: &Representation,
    target: &Representation,
    basis: &[Vec<Mat>],
    coeffs: &[u32],
) -> Morphism {
    let f = source.field;
    let comps = (0..source.dim.len())
        .map(|v| {
            let mut acc = Mat::zeros(f, target.dim[v], source.dim[v]);
            for (b, &c) in basis.iter().zip(coeffs) {
                if c != 0 {
                    acc = acc.add(&b[v].scale(c));
                }
            }
            acc
        })
        .collect();
    Morphism { source: source.clone(), target: target.clone(), comps }
}
