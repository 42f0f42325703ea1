//! Face lattices identified with their vertex shadows.
//!
//! A [`FaceLattice`] stores every face (including the bottom `∅` and the top
//! `V`) as a [`Shadow`] together with its rank. Faces are kept sorted by
//! `(rank, shadow)` and the Hasse diagram is materialised in both directions.
//! Values are immutable once built.

mod graph;
mod iso;
mod validate;

use std::fmt;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shadow::{Shadow, MAX_VERTICES};

pub use graph::Graph;
pub use iso::isomorphism;
pub use validate::{Check, ValidationReport, Violation};

/// A face: its vertex shadow and its rank (`dim + 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Face {
    pub shadow: Shadow,
    pub rank: u32,
}

impl Face {
    pub fn dim(&self) -> i32 {
        self.rank as i32 - 1
    }
}

#[derive(Clone)]
pub struct FaceLattice {
    labels: Vec<String>,
    faces: Vec<Face>,
    index: FxHashMap<Shadow, u32>,
    /// `rank_start[r]` is the position of the first face of rank `r`.
    rank_start: Vec<usize>,
    down: Vec<Vec<u32>>,
    up: Vec<Vec<u32>>,
}

impl fmt::Debug for FaceLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FaceLattice")
            .field("labels", &self.labels)
            .field("dim", &self.dim())
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

/// Pick the cheaper of submask enumeration and a linear scan over
/// `candidates` (faces that could possibly sit strictly below `g`).
fn proper_subfaces(
    g: Shadow,
    lookup: &FxHashMap<Shadow, u32>,
    candidates: &[Shadow],
    out: &mut Vec<u32>,
) {
    out.clear();
    let k = g.len();
    if k < 24 && (1usize << k) < candidates.len() / 2 {
        for s in g.subsets() {
            if s != g {
                if let Some(&i) = lookup.get(&s) {
                    out.push(i);
                }
            }
        }
    } else {
        for (i, &s) in candidates.iter().enumerate() {
            if s.is_proper_subset(g) {
                out.push(i as u32);
            }
        }
    }
}

impl FaceLattice {
    /// Build a lattice from vertex labels and a family of shadows.
    ///
    /// The bottom `∅` and the top `{0..n-1}` are added when missing. Ranks are
    /// longest-chain lengths from the bottom. Every vertex must be a face, the
    /// family must be closed under intersection, and every covering pair must
    /// differ in rank by one.
    pub fn from_shadows<I>(labels: Vec<String>, shadows: I) -> Result<FaceLattice>
    where
        I: IntoIterator<Item = Shadow>,
    {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        let full = Shadow::full(n);

        let mut set: FxHashSet<Shadow> = FxHashSet::default();
        set.insert(Shadow::EMPTY);
        set.insert(full);
        for s in shadows {
            if !s.is_subset(full) {
                return Err(Error::OutOfRange { shadow: s, n });
            }
            set.insert(s);
        }
        for (v, label) in labels.iter().enumerate() {
            if !set.contains(&Shadow::singleton(v)) {
                return Err(Error::NotALattice(format!("vertex {label} is not a face")));
            }
        }

        // Strict inclusion forces strictly larger shadows, so size order is a
        // linear extension of the face order.
        let mut by_size: Vec<Shadow> = set.into_iter().collect();
        by_size.sort_unstable_by_key(|s| (s.len(), s.bits()));
        let lookup: FxHashMap<Shadow, u32> = by_size
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, i as u32))
            .collect();

        let count = by_size.len();
        let mut rank = vec![0u32; count];
        let mut down: Vec<Vec<u32>> = vec![Vec::new(); count];
        let mut rank_error = None;
        let mut subs = Vec::new();
        let mut size_start = 0;
        for gi in 1..count {
            let g = by_size[gi];
            while by_size[size_start].len() < g.len() {
                size_start += 1;
            }
            proper_subfaces(g, &lookup, &by_size[..size_start], &mut subs);
            let top_rank = subs.iter().map(|&i| rank[i as usize]).max().unwrap_or(0);
            rank[gi] = top_rank + 1;

            // Longest-chain rank strictly increases along inclusion, so scanning
            // in decreasing rank order finds each maximal subface before any
            // subface it contains.
            subs.sort_unstable_by_key(|&i| std::cmp::Reverse(rank[i as usize]));
            let mut covers: Vec<u32> = Vec::new();
            for &f in &subs {
                let fs = by_size[f as usize];
                if !covers.iter().any(|&c| fs.is_subset(by_size[c as usize])) {
                    covers.push(f);
                }
            }
            if rank_error.is_none() {
                if let Some(&bad) = covers.iter().find(|&&c| rank[c as usize] + 1 != rank[gi]) {
                    rank_error = Some(Error::NotRanked {
                        lower: by_size[bad as usize],
                        upper: g,
                        lower_rank: rank[bad as usize],
                        upper_rank: rank[gi],
                    });
                }
            }
            down[gi] = covers;
        }

        check_meet_closed(&by_size, &lookup, &down[count - 1], &labels)?;
        if let Some(err) = rank_error {
            return Err(err);
        }

        // Re-sort by (rank, lexicographic shadow).
        let mut order: Vec<usize> = (0..count).collect();
        order.sort_unstable_by(|&a, &b| rank[a].cmp(&rank[b]).then(by_size[a].cmp(&by_size[b])));
        let mut new_pos = vec![0u32; count];
        for (pos, &old) in order.iter().enumerate() {
            new_pos[old] = pos as u32;
        }
        let faces: Vec<Face> = order
            .iter()
            .map(|&old| Face {
                shadow: by_size[old],
                rank: rank[old],
            })
            .collect();
        let mut new_down: Vec<Vec<u32>> = order
            .iter()
            .map(|&old| {
                let mut d: Vec<u32> = down[old].iter().map(|&c| new_pos[c as usize]).collect();
                d.sort_unstable();
                d
            })
            .collect();
        new_down.shrink_to_fit();
        let mut up: Vec<Vec<u32>> = vec![Vec::new(); count];
        for (g, d) in new_down.iter().enumerate() {
            for &f in d {
                up[f as usize].push(g as u32);
            }
        }
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.shadow, i as u32))
            .collect();
        let top_rank = faces[count - 1].rank as usize;
        let rank_start: Vec<usize> = (0..=top_rank + 1)
            .map(|r| faces.partition_point(|f| (f.rank as usize) < r))
            .collect();

        Ok(FaceLattice {
            labels,
            faces,
            index,
            rank_start,
            down: new_down,
            up,
        })
    }

    /// Build a simplicial lattice: every subset of every facet is a face.
    pub fn from_simplicial_facets<I>(labels: Vec<String>, facets: I) -> Result<FaceLattice>
    where
        I: IntoIterator<Item = Shadow>,
    {
        let mut set: FxHashSet<Shadow> = FxHashSet::default();
        let full = Shadow::full(labels.len().min(MAX_VERTICES));
        for f in facets {
            if !f.is_subset(full) {
                return Err(Error::OutOfRange {
                    shadow: f,
                    n: labels.len(),
                });
            }
            if set.contains(&f) {
                continue;
            }
            set.extend(f.subsets());
        }
        FaceLattice::from_shadows(labels, set)
    }

    /// Build a lattice whose faces are all intersections of the given facets.
    pub fn from_facet_intersections<I>(labels: Vec<String>, facets: I) -> Result<FaceLattice>
    where
        I: IntoIterator<Item = Shadow>,
    {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        let full = Shadow::full(n);
        let mut family: FxHashSet<Shadow> = FxHashSet::default();
        family.insert(full);
        for facet in facets {
            if !facet.is_subset(full) {
                return Err(Error::OutOfRange { shadow: facet, n });
            }
            let new: Vec<Shadow> = family.iter().map(|s| s.intersection(facet)).collect();
            family.extend(new);
        }
        FaceLattice::from_shadows(labels, family)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> i32 {
        self.top().rank as i32 - 2
    }

    /// All faces, sorted by rank then lexicographic shadow order.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, i: usize) -> Face {
        self.faces[i]
    }

    pub fn bottom(&self) -> Face {
        self.faces[0]
    }

    pub fn top(&self) -> Face {
        self.faces[self.faces.len() - 1]
    }

    pub fn index_of(&self, shadow: Shadow) -> Option<usize> {
        self.index.get(&shadow).map(|&i| i as usize)
    }

    pub fn contains(&self, shadow: Shadow) -> bool {
        self.index.contains_key(&shadow)
    }

    pub fn face_of(&self, shadow: Shadow) -> Result<Face> {
        self.index_of(shadow)
            .map(|i| self.faces[i])
            .ok_or(Error::NotAFace(shadow))
    }

    /// Faces of a given rank.
    pub fn faces_of_rank(&self, rank: u32) -> &[Face] {
        let r = rank as usize;
        if r + 1 >= self.rank_start.len() {
            return &[];
        }
        &self.faces[self.rank_start[r]..self.rank_start[r + 1]]
    }

    /// Proper faces: everything except the bottom and the top.
    pub fn proper_faces(&self) -> &[Face] {
        &self.faces[1..self.faces.len() - 1]
    }

    pub fn facets(&self) -> &[Face] {
        self.faces_of_rank(self.top().rank - 1)
    }

    /// Faces covered by face `i` (indices).
    pub fn covers_below(&self, i: usize) -> &[u32] {
        &self.down[i]
    }

    /// Faces covering face `i` (indices).
    pub fn covers_above(&self, i: usize) -> &[u32] {
        &self.up[i]
    }

    /// Indices of every face strictly below face `i`.
    pub fn faces_below(&self, i: usize) -> Vec<u32> {
        let g = self.faces[i];
        let end = self.rank_start[g.rank as usize];
        let candidates: Vec<Shadow> = self.faces[..end].iter().map(|f| f.shadow).collect();
        let mut out = Vec::new();
        proper_subfaces(g.shadow, &self.index, &candidates, &mut out);
        out.sort_unstable();
        out
    }

    /// Indices of every face strictly above face `i`.
    pub fn faces_above(&self, i: usize) -> Vec<u32> {
        let f = self.faces[i];
        let start = self.rank_start[f.rank as usize + 1];
        (start..self.faces.len())
            .filter(|&j| f.shadow.is_subset(self.faces[j].shadow))
            .map(|j| j as u32)
            .collect()
    }

    /// Greatest lower bound. Shadows of a lattice are closed under
    /// intersection, so the meet's shadow is the intersection.
    pub fn meet(&self, f: Shadow, g: Shadow) -> Result<Face> {
        self.face_of(f)?;
        self.face_of(g)?;
        self.face_of(f.intersection(g))
    }

    /// Least upper bound.
    pub fn join_faces(&self, f: Shadow, g: Shadow) -> Result<Face> {
        self.face_of(f)?;
        self.face_of(g)?;
        Ok(self
            .closure(f.union(g))
            .expect("the top contains every vertex set"))
    }

    /// The smallest face whose shadow contains `set`.
    pub fn closure(&self, set: Shadow) -> Option<Face> {
        if let Some(i) = self.index_of(set) {
            return Some(self.faces[i]);
        }
        // First hit in rank order has minimal rank, hence is the least face.
        self.faces.iter().find(|f| set.is_subset(f.shadow)).copied()
    }

    /// The interval `[a, b]`, re-based so that its vertices are the faces
    /// covering `a`. Each new vertex is labelled by the old vertices it adds
    /// to `a`, joined with `+`.
    pub fn interval(&self, a: Shadow, b: Shadow) -> Result<FaceLattice> {
        let fa = self.face_of(a)?;
        let fb = self.face_of(b)?;
        if !a.is_subset(b) {
            return Err(Error::NotComparable(a, b));
        }
        if a == b {
            return Err(Error::DegenerateInterval(a));
        }
        let members: Vec<Shadow> = self.faces
            [self.rank_start[fa.rank as usize]..self.rank_start[fb.rank as usize + 1]]
            .iter()
            .map(|f| f.shadow)
            .filter(|s| a.is_subset(*s) && s.is_subset(b))
            .collect();
        let atoms: Vec<Shadow> = self
            .faces_of_rank(fa.rank + 1)
            .iter()
            .map(|f| f.shadow)
            .filter(|s| a.is_subset(*s) && s.is_subset(b))
            .collect();
        if atoms.len() > MAX_VERTICES {
            return Err(Error::Capacity(atoms.len()));
        }
        let labels = atoms
            .iter()
            .map(|t| {
                t.difference(a)
                    .iter()
                    .map(|v| self.labels[v].as_str())
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        let shadows = members.iter().map(|m| {
            Shadow::from_indices(
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t.is_subset(*m))
                    .map(|(i, _)| i),
            )
        });
        FaceLattice::from_shadows(labels, shadows.collect::<Vec<_>>())
    }

    /// `∂g = [∅, g]`.
    pub fn boundary(&self, g: Shadow) -> Result<FaceLattice> {
        self.interval(Shadow::EMPTY, g)
    }

    /// `lk(f) = [f, V]`.
    pub fn link(&self, f: Shadow) -> Result<FaceLattice> {
        self.interval(f, self.top().shadow)
    }

    /// The facet graph Λ: facets adjacent when their meet has rank `ρ(⊤) - 2`.
    pub fn facet_graph(&self) -> Graph {
        let facets = self.facets();
        let ridge_rank = self.top().rank.saturating_sub(2);
        let pos: FxHashMap<Shadow, usize> = facets
            .iter()
            .enumerate()
            .map(|(i, f)| (f.shadow, i))
            .collect();
        let mut graph = Graph::new(facets.iter().map(|f| f.shadow).collect());
        if self.top().rank < 2 {
            return graph;
        }
        for ridge in self.faces_of_rank(ridge_rank) {
            let i = self.index[&ridge.shadow] as usize;
            let above: Vec<usize> = self.up[i]
                .iter()
                .filter_map(|&g| pos.get(&self.faces[g as usize].shadow).copied())
                .collect();
            for (x, &p) in above.iter().enumerate() {
                for &q in &above[x + 1..] {
                    graph.add_edge(p, q);
                }
            }
        }
        graph
    }

    /// The edge graph Λ*: vertices `u, v` adjacent when `u ∨ v` has dimension 1.
    pub fn edge_graph(&self) -> Graph {
        let mut graph = Graph::new((0..self.n()).map(Shadow::singleton).collect());
        if self.top().rank <= 2 {
            // The only rank-2 face (if any) is the top itself.
            return graph;
        }
        for e in self.faces_of_rank(2) {
            let vs = e.shadow.to_vec();
            for (x, &u) in vs.iter().enumerate() {
                for &v in &vs[x + 1..] {
                    graph.add_edge(u, v);
                }
            }
        }
        graph
    }

    /// Number of `i`-faces for `i = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        (1..self.top().rank)
            .map(|r| self.faces_of_rank(r).len())
            .collect()
    }

    /// `n - dim - 2`.
    pub fn excess(&self) -> usize {
        self.n() - self.top().rank as usize
    }

    /// True when every proper face has exactly `rank` vertices.
    pub fn is_simplicial(&self) -> bool {
        self.proper_faces()
            .iter()
            .all(|f| f.shadow.len() == f.rank as usize)
    }

    /// True when the edge graph is complete.
    ///
    /// "Neighbourly" is taken to mean a complete 1-skeleton: every pair of
    /// distinct vertices spans an edge.
    pub fn is_neighbourly(&self) -> bool {
        self.edge_graph().is_complete()
    }

    /// Euler characteristic of the barycentric subdivision, computed from the
    /// order complex of the proper part without materialising it.
    pub fn euler_char_of_bsd(&self) -> i64 {
        let count = self.faces.len();
        if count <= 2 {
            return 0;
        }
        let mut weight = vec![0i64; count];
        let mut chi = 0i64;
        for i in 1..count - 1 {
            let below: i64 = self
                .faces_below(i)
                .iter()
                .filter(|&&j| j != 0)
                .map(|&j| weight[j as usize])
                .sum();
            weight[i] = 1 - below;
            chi += weight[i];
        }
        chi
    }

    /// A shadow-preserving vertex bijection onto `other`, if one exists.
    pub fn isomorphism(&self, other: &FaceLattice) -> Option<Vec<usize>> {
        iso::isomorphism(self, other)
    }

    pub fn is_isomorphic(&self, other: &FaceLattice) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Check the cellular-pseudomanifold axioms.
    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().verdict
    }

    /// The same lattice with new vertex labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<FaceLattice> {
        if labels.len() != self.n() {
            return Err(Error::InvalidParameter(format!(
                "expected {} labels, got {}",
                self.n(),
                labels.len()
            )));
        }
        let mut out = self.clone();
        out.labels = labels;
        Ok(out)
    }

    /// Relabel vertices: old vertex `v` becomes new vertex `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<FaceLattice> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter(
                "not a permutation of the vertices".into(),
            ));
        }
        let mut labels = vec![String::new(); n];
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[v].clone();
        }
        FaceLattice::from_shadows(
            labels,
            self.faces
                .iter()
                .map(|f| f.shadow.map(perm))
                .collect::<Vec<_>>(),
        )
    }

    /// Shadows of proper faces in lexicographic order.
    pub fn proper_shadows_sorted(&self) -> Vec<Shadow> {
        let mut v: Vec<Shadow> = self.proper_faces().iter().map(|f| f.shadow).collect();
        v.sort_unstable();
        v
    }
}

/// Verify closure under intersection.
///
/// Intersections with the maximal proper faces are checked for every face;
/// a face that is itself an intersection of maximal faces then inherits
/// closure, and the remaining faces are checked against everything.
fn check_meet_closed(
    faces: &[Shadow],
    lookup: &FxHashMap<Shadow, u32>,
    maximal: &[u32],
    labels: &[String],
) -> Result<()> {
    let maximal: Vec<Shadow> = maximal.iter().map(|&i| faces[i as usize]).collect();
    let fail = |f: Shadow, g: Shadow| {
        Error::NotALattice(format!(
            "{} and {} have no meet (their intersection {} is not a face)",
            f.display(labels),
            g.display(labels),
            f.intersection(g).display(labels)
        ))
    };
    for &f in faces {
        for &m in &maximal {
            if !lookup.contains_key(&f.intersection(m)) {
                return Err(fail(f, m));
            }
        }
    }
    let full = *faces.last().expect("non-empty");
    for &g in faces {
        let generated = maximal
            .iter()
            .filter(|m| g.is_subset(**m))
            .fold(full, |acc, m| acc.intersection(*m));
        if generated != g {
            for &f in faces {
                if !lookup.contains_key(&f.intersection(g)) {
                    return Err(fail(f, g));
                }
            }
        }
    }
    Ok(())
}

/// Labels `prefix1..prefixN`.
pub fn numbered_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
