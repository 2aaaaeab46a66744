//! Finite acyclic quivers, ADE classification and sink mutation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite acyclic quiver on vertices `0..n`.
///
/// Arrows are kept sorted lexicographically by `(source, target)`, which is
/// the canonical arrow order used by representations and on disk.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawQuiver")]
pub struct Quiver {
    #[serde(rename = "vertices")]
    n: usize,
    arrows: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawQuiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl TryFrom<RawQuiver> for Quiver {
    type Error = Error;

    fn try_from(raw: RawQuiver) -> Result<Self> {
        Quiver::new(raw.vertices, raw.arrows)
    }
}

impl Quiver {
    pub fn new(n: usize, mut arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            if s >= n || t >= n {
                return Err(Error::InvalidQuiver(format!("arrow {s}->{t} leaves vertex range 0..{n}")));
            }
        }
        arrows.sort();
        let q = Self { n, arrows };
        if q.topological_order().is_none() {
            return Err(Error::Cyclic);
        }
        Ok(q)
    }

    /// The linearly oriented path `0 -> 1 -> ... -> n-1`.
    pub fn linear_a(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("a path is acyclic")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn is_sink(&self, v: usize) -> bool {
        v < self.n && self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        v < self.n && self.arrows.iter().all(|&(_, t)| t != v)
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_sink(v)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_source(v)).collect()
    }

    /// Arrows ending at `v`, as arrow indices.
    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.1 == v).map(|(i, _)| i)
    }

    /// Arrows starting at `v`, as arrow indices.
    pub fn arrows_out_of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.0 == v).map(|(i, _)| i)
    }

    /// Kahn's algorithm with smallest-index tie breaking.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: std::collections::BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.insert(t);
                    }
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// An admissible sequence of sinks: each vertex is a sink of the quiver
    /// obtained by mutating at all earlier ones.
    pub fn admissible_sinks(&self) -> Vec<usize> {
        let mut order = self.topological_order().expect("acyclic by construction");
        order.reverse();
        order
    }

    /// `<d, e> = sum_v d_v e_v - sum_{a: i -> j} d_i e_j`.
    pub fn euler_form(&self, d: &[usize], e: &[usize]) -> Result<i64> {
        if d.len() != self.n || e.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "dimension vectors of length {} and {} on {} vertices",
                d.len(),
                e.len(),
                self.n
            )));
        }
        let diag: i64 = d.iter().zip(e).map(|(&a, &b)| (a * b) as i64).sum();
        let off: i64 = self.arrows.iter().map(|&(i, j)| (d[i] * e[j]) as i64).sum();
        Ok(diag - off)
    }

    /// Reverses every arrow ending at the sink `v`.
    pub fn sink_mutation(&self, v: usize) -> Result<Quiver> {
        self.sink_mutation_with_map(v).map(|(q, _)| q)
    }

    /// Like [`Quiver::sink_mutation`], also returning where each old arrow
    /// index lands in the mutated quiver.
    pub fn sink_mutation_with_map(&self, v: usize) -> Result<(Quiver, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::NoSuchVertex(v));
        }
        if !self.is_sink(v) {
            return Err(Error::NotASink(v));
        }
        Ok(self.reverse_at(v))
    }

    /// Reverses every arrow ending at `v` (if a sink) or starting at `v`
    /// (if a source). Exactly one of the two applies for a non-isolated vertex.
    fn reverse_at(&self, v: usize) -> (Quiver, Vec<usize>) {
        let flipped: Vec<(usize, usize)> =
            self.arrows.iter().map(|&(s, t)| if s == v || t == v { (t, s) } else { (s, t) }).collect();
        let mut idx: Vec<usize> = (0..flipped.len()).collect();
        idx.sort_by_key(|&i| (flipped[i], i));
        let mut old_to_new = vec![0; flipped.len()];
        for (new, &old) in idx.iter().enumerate() {
            old_to_new[old] = new;
        }
        let arrows = idx.iter().map(|&i| flipped[i]).collect();
        (Quiver { n: self.n, arrows }, old_to_new)
    }

    /// Reverses every arrow starting at the source `v`; inverse of
    /// [`Quiver::sink_mutation`].
    pub fn source_mutation_with_map(&self, v: usize) -> Result<(Quiver, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::NoSuchVertex(v));
        }
        if !self.is_source(v) {
            return Err(Error::NotSinkOrSource(v));
        }
        Ok(self.reverse_at(v))
    }

    /// Deletes `v` and its arrows, shifting higher vertices down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Quiver> {
        if v >= self.n {
            return Err(Error::NoSuchVertex(v));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let arrows = self
            .arrows
            .iter()
            .filter(|&&(s, t)| s != v && t != v)
            .map(|&(s, t)| (shift(s), shift(t)))
            .collect();
        Quiver::new(self.n - 1, arrows)
    }

    /// Vertex sets of the connected components of the underlying graph,
    /// each ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label: Vec<Option<usize>> = vec![None; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if label[start].is_some() {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            label[start] = Some(id);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &(s, t) in &self.arrows {
                    let y = if s == x { t } else if t == x { s } else { continue };
                    if label[y].is_none() {
                        label[y] = Some(id);
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    /// The full subquiver on `vertices` (ascending), renumbered from 0.
    pub fn induced(&self, vertices: &[usize]) -> Result<Quiver> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::NoSuchVertex(v));
        }
        let pos = |x: usize| vertices.iter().position(|&y| y == x);
        let arrows = self.arrows.iter().filter_map(|&(s, t)| Some((pos(s)?, pos(t)?))).collect();
        Quiver::new(vertices.len(), arrows)
    }

    /// ADE type of each connected component, in [`Quiver::components`] order.
    pub fn component_types(&self) -> Result<Vec<DynkinType>> {
        self.components().iter().map(|c| self.induced(c)?.classify()).collect()
    }

    /// ADE type of the underlying graph.
    pub fn classify(&self) -> Result<DynkinType> {
        let n = self.n;
        if n == 0 {
            return Err(Error::NotDynkin("empty quiver".into()));
        }
        let mut edges: Vec<(usize, usize)> = self.arrows.iter().map(|&(s, t)| (s.min(t), s.max(t))).collect();
        edges.sort();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotDynkin("multiple edges".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotDynkin(if edges.len() >= n { "underlying graph has a cycle" } else { "disconnected" }.into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        // n - 1 edges plus connectivity means tree
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::NotDynkin("disconnected".into()));
        }
        let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
        match branch.as_slice() {
            [] => Ok(DynkinType::new(Family::A, n).expect("n >= 1")),
            [c] if adj[*c].len() == 3 => {
                let mut arms: Vec<usize> = adj[*c]
                    .iter()
                    .map(|&start| {
                        let (mut prev, mut cur, mut len) = (*c, start, 1);
                        while let Some(&next) = adj[cur].iter().find(|&&y| y != prev) {
                            (prev, cur) = (cur, next);
                            len += 1;
                        }
                        len
                    })
                    .collect();
                arms.sort();
                match arms.as_slice() {
                    [1, 1, k] => DynkinType::new(Family::D, k + 3),
                    [1, 2, 2] => DynkinType::new(Family::E, 6),
                    [1, 2, 3] => DynkinType::new(Family::E, 7),
                    [1, 2, 4] => DynkinType::new(Family::E, 8),
                    other => Err(Error::NotDynkin(format!("star with arm lengths {other:?}"))),
                }
            }
            _ => Err(Error::NotDynkin("vertex of degree > 3 or several branch points".into())),
        }
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({}: ", self.n)?;
        for (i, (s, t)) in self.arrows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}->{t}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

/// A simply-laced Dynkin type `A_n (n >= 1)`, `D_n (n >= 4)` or `E_6, E_7, E_8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::InvalidType(format!("{family:?}{rank}")));
        }
        Ok(Self { family, rank })
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("valid A rank")
    }

    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("valid D rank")
    }

    pub fn e(n: usize) -> Self {
        Self::new(Family::E, n).expect("valid E rank")
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
        }
    }

    /// Edges of the standard diagram, `(u, w)` with `u < w`.
    ///
    /// `A_n` is the path `0 - 1 - ... - n-1`; `D_n` hangs `n-1` off `n-3`;
    /// `E_n` hangs `n-1` off vertex 2 of the path `0 - ... - n-2`.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i - 1, i)).collect(),
            Family::D => (1..n - 1).map(|i| (i - 1, i)).chain([(n - 3, n - 1)]).collect(),
            Family::E => (1..n - 1).map(|i| (i - 1, i)).chain([(2, n - 1)]).collect(),
        }
    }

    /// Orientation `bits` of the standard diagram: bit `k` set reverses
    /// edge `k` so that it points from the larger to the smaller vertex.
    pub fn orientation(self, bits: u64) -> Quiver {
        let arrows = self
            .edges()
            .into_iter()
            .enumerate()
            .map(|(k, (u, w))| if bits >> k & 1 == 1 { (w, u) } else { (u, w) })
            .collect();
        Quiver::new(self.rank, arrows).expect("orientations of a tree are acyclic")
    }

    /// All `2^(rank-1)` orientations, indexed by orientation id.
    pub fn all_orientations(self) -> Vec<Quiver> {
        let e = self.rank - 1;
        (0..1u64 << e).map(|bits| self.orientation(bits)).collect()
    }
}

/// All orientations of the standard diagram of `ty`, in orientation-id order.
pub fn all_orientations(ty: DynkinType) -> Vec<Quiver> {
    ty.all_orientations()
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        DynkinType::new(family, rank)
    }
}
