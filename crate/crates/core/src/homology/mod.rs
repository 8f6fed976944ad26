//! Simplicial complexes on at most 64 vertices and their reduced homology
//! over the rationals.
//!
//! Faces are bitmasks over the complex's vertex list. Homology dimensions
//! come from rank-nullity on the augmented boundary maps, with ranks
//! computed exactly.

mod rank;

pub use rank::{rank_bareiss, rank_integer_echelon};

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{MonomialIdeal, VarIndex};

pub const MAX_FACES: usize = 1 << 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RankMethod {
    #[default]
    Bareiss,
    IntegerEchelon,
}

impl RankMethod {
    fn rank(self, m: &[Vec<i64>]) -> usize {
        match self {
            RankMethod::Bareiss => rank_bareiss(m),
            RankMethod::IntegerEchelon => rank_integer_echelon(m),
        }
    }
}

/// A simplicial complex given by its facets.
///
/// No facets is the void complex; the single facet `∅` is the complex
/// `{∅}` whose only face is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    #[serde(serialize_with = "serialize_facets")]
    facets: Vec<u64>,
}

fn serialize_facets<S: serde::Serializer>(
    facets: &[u64],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(facets.iter().map(|f| mask_bits(*f).collect::<Vec<_>>()))
}

fn mask_bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

fn maximal(masks: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut all: Vec<u64> = masks
        .into_iter()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    all.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    let mut out: Vec<u64> = Vec::new();
    for m in all {
        if !out.iter().any(|&f| m & !f == 0) {
            out.push(m);
        }
    }
    out.sort_by_key(|m| (m.count_ones(), *m));
    out
}

impl SimplicialComplex {
    /// Builds a complex from faces that generate it; non-maximal ones are
    /// dropped.
    pub fn from_faces<S: AsRef<str>>(vertices: &[S], faces: &[Vec<S>]) -> Result<Self> {
        if vertices.len() > 64 {
            return Err(Error::CapExceeded {
                what: "vertex count",
                limit: 64,
                actual: vertices.len(),
            });
        }
        let mut masks = Vec::with_capacity(faces.len());
        for f in faces {
            let mut m = 0u64;
            for v in f {
                let i = vertices
                    .iter()
                    .position(|x| x.as_ref() == v.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?;
                m |= 1 << i;
            }
            masks.push(m);
        }
        Ok(Self::from_masks(
            vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            masks,
        ))
    }

    pub(crate) fn from_masks(vertices: Vec<String>, faces: Vec<u64>) -> Self {
        SimplicialComplex {
            vertices,
            facets: maximal(faces),
        }
    }

    pub fn void<S: AsRef<str>>(vertices: &[S]) -> Self {
        SimplicialComplex {
            vertices: vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            facets: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    /// Facets as sorted vertex-name lists.
    pub fn facets(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|&f| mask_bits(f).map(|b| self.vertices[b].clone()).collect())
            .collect()
    }

    /// Top dimension; -1 for `{∅}`, `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
    }

    /// Every face (including the empty one), ordered by size then mask.
    pub fn faces(&self) -> Result<Vec<u64>> {
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            // submasks of f, f itself down to 0
            let mut s = f;
            loop {
                seen.insert(s);
                if seen.len() > MAX_FACES {
                    return Err(Error::CapExceeded {
                        what: "face count",
                        limit: MAX_FACES,
                        actual: seen.len(),
                    });
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_by_key(|m| (m.count_ones(), *m));
        Ok(out)
    }

    /// `f_{-1}, f_0, f_1, ...`
    pub fn face_counts(&self) -> Result<Vec<usize>> {
        Ok(counts_by_size(&self.faces()?))
    }

    /// True when some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty() && self.facets.iter().fold(!0u64, |acc, &f| acc & f) != 0
    }
}

fn counts_by_size(faces: &[u64]) -> Vec<usize> {
    let mut counts = Vec::new();
    for &f in faces {
        let s = f.count_ones() as usize;
        if counts.len() <= s {
            counts.resize(s + 1, 0);
        }
        counts[s] += 1;
    }
    counts
}

/// Reduced Betti numbers of a complex, indexed from dimension -1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_d`, zero outside the computed range.
    pub fn get(&self, d: isize) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.dims.get(i).copied())
            .unwrap_or(0)
    }

    /// Dimensions from -1 upwards.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ (-1)^d dim H̃_d` over `d >= -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &h)| if i % 2 == 1 { h as i64 } else { -(h as i64) })
            .sum()
    }

    /// Nonzero entries as `(dimension, rank)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &h)| h > 0)
            .map(|(i, &h)| (i as isize - 1, h))
    }
}

/// Reduced homology of the complex whose face list (closed under subsets,
/// sorted by size) is `faces`.
pub(crate) fn homology_of_faces(faces: &[u64], method: RankMethod) -> ReducedHomology {
    if faces.is_empty() {
        return ReducedHomology::default();
    }
    let by_size: Vec<Vec<u64>> = {
        let mut v: Vec<Vec<u64>> = Vec::new();
        for &f in faces {
            let s = f.count_ones() as usize;
            if v.len() <= s {
                v.resize(s + 1, Vec::new());
            }
            v[s].push(f);
        }
        v
    };
    // rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; by_size.len() + 1];
    for s in 1..by_size.len() {
        let rows = &by_size[s - 1];
        let cols = &by_size[s];
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        ranks[s] = method.rank(&boundary_matrix(rows, cols));
    }
    let dims = (0..by_size.len())
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    ReducedHomology { dims }
}

/// Boundary matrix with rows indexed by `rows` (faces of size s-1) and
/// columns by `cols` (faces of size s). Removing the t-th smallest vertex
/// carries sign `(-1)^t`.
pub(crate) fn boundary_matrix(rows: &[u64], cols: &[u64]) -> Vec<Vec<i64>> {
    let index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = vec![vec![0i64; cols.len()]; rows.len()];
    for (c, &f) in cols.iter().enumerate() {
        for (t, b) in mask_bits(f).enumerate() {
            let r = index[&(f & !(1 << b))];
            m[r][c] = if t % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

pub fn reduced_homology_dims(c: &SimplicialComplex) -> Result<ReducedHomology> {
    reduced_homology_with(c, RankMethod::default())
}

pub fn reduced_homology_with(c: &SimplicialComplex, method: RankMethod) -> Result<ReducedHomology> {
    Ok(homology_of_faces(&c.faces()?, method))
}

/// Maximal independent sets of the graph on vertex masks `adj`, restricted
/// to `within`, by Bron-Kerbosch on the complement graph.
fn maximal_independent_sets(adj: &[u64], within: u64) -> Vec<u64> {
    fn bk(adj: &[u64], within: u64, r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let non_nb = |v: usize| within & !adj[v] & !(1u64 << v);
        let pivot = mask_bits(p | x)
            .max_by_key(|&u| (p & non_nb(u)).count_ones())
            .expect("p | x is nonempty");
        let mut cand = p & !non_nb(pivot);
        let (mut p, mut x) = (p, x);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            bk(adj, within, r | 1 << v, p & non_nb(v), x & non_nb(v), out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    bk(adj, within, 0, within, 0, &mut out);
    out
}

/// The complex of independent vertex sets of `g`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    let adj: Vec<u64> = (0..g.vertex_count()).map(|v| g.neighbor_mask(v)).collect();
    let all = if g.vertex_count() == 64 {
        !0
    } else {
        (1u64 << g.vertex_count()) - 1
    };
    SimplicialComplex::from_masks(g.vertices().to_vec(), maximal_independent_sets(&adj, all))
}

/// Independence complex of the induced subgraph on `w`.
pub fn induced_subcomplex<S: AsRef<str>>(g: &Graph, w: &[S]) -> Result<SimplicialComplex> {
    Ok(independence_complex(&g.induced_subgraph(w)?))
}

/// The Stanley-Reisner complex of a square-free ideal on the given
/// variables: faces are the variable sets containing no generator.
pub fn stanley_reisner_complex<S: AsRef<str>>(
    ideal: &MonomialIdeal,
    variables: &[S],
) -> Result<SimplicialComplex> {
    let mut names: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
    let extra: BTreeSet<String> = ideal
        .variables()
        .into_iter()
        .filter(|v| !names.contains(v))
        .collect();
    names.extend(extra);
    let vars = VarIndex::new(&names)?;
    if vars.len() > 24 {
        return Err(Error::CapExceeded {
            what: "variables for Stanley-Reisner enumeration",
            limit: 24,
            actual: vars.len(),
        });
    }
    let gens: Vec<u64> = ideal.generators().iter().map(|g| vars.mask(g)).collect();
    let n = vars.len();
    let faces = (0u64..1 << n).filter(|&f| gens.iter().all(|&g| g & !f != 0));
    Ok(SimplicialComplex::from_masks(names, faces.collect()))
}
