//! Backtracking isomorphism search between face lattices.

use std::hash::{Hash, Hasher};

use rustc_hash::{FxHashMap, FxHasher};

use super::FaceLattice;
use crate::shadow::Shadow;

fn hash_of<T: Hash>(value: &T) -> u64 {
    let mut h = FxHasher::default();
    value.hash(&mut h);
    h.finish()
}

fn profile(l: &FaceLattice) -> Vec<(u32, usize)> {
    let mut p: Vec<(u32, usize)> = l.faces().iter().map(|f| (f.rank, f.shadow.len())).collect();
    p.sort_unstable();
    p
}

/// Per-vertex hash of the `(rank, size)` pairs of the faces through it.
fn incidence_signature(l: &FaceLattice) -> Vec<u64> {
    let mut incident: Vec<Vec<(u32, usize)>> = vec![Vec::new(); l.n()];
    for f in l.proper_faces() {
        for v in f.shadow.iter() {
            incident[v].push((f.rank, f.shadow.len()));
        }
    }
    incident
        .into_iter()
        .map(|mut inc| {
            inc.sort_unstable();
            hash_of(&inc)
        })
        .collect()
}

fn sorted(v: &[u64]) -> Vec<u64> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

fn class_count(v: &[u64]) -> usize {
    let mut s = sorted(v);
    s.dedup();
    s.len()
}

fn refine_once(sig: &[u64], adj: &[Vec<usize>]) -> Vec<u64> {
    sig.iter()
        .zip(adj)
        .map(|(&own, nbrs)| {
            let mut around: Vec<u64> = nbrs.iter().map(|&w| sig[w]).collect();
            around.sort_unstable();
            hash_of(&(own, around))
        })
        .collect()
}

/// Colour refinement run in lockstep on both lattices. Returns `None` as soon
/// as the colour multisets differ.
fn refined_signatures(a: &FaceLattice, b: &FaceLattice) -> Option<(Vec<u64>, Vec<u64>)> {
    let adj_a = a.edge_graph().adjacency();
    let adj_b = b.edge_graph().adjacency();
    let mut sa = incidence_signature(a);
    let mut sb = incidence_signature(b);
    loop {
        if sorted(&sa) != sorted(&sb) {
            return None;
        }
        let before = class_count(&sa);
        let na = refine_once(&sa, &adj_a);
        let nb = refine_once(&sb, &adj_b);
        if class_count(&na) == before {
            return Some((sa, sb));
        }
        sa = na;
        sb = nb;
    }
}

/// Vertex order for the search: start from the rarest colour, then prefer
/// vertices with the most already-placed neighbours.
fn search_order(sig: &[u64], adj: &[Vec<usize>]) -> Vec<usize> {
    let n = sig.len();
    let mut freq: FxHashMap<u64, usize> = FxHashMap::default();
    for &s in sig {
        *freq.entry(s).or_default() += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), freq[&sig[v]], v))
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &w in &adj[v] {
            links[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    target: &'a FaceLattice,
    order: Vec<usize>,
    /// Faces of the source whose last vertex (in search order) sits at each position.
    buckets: Vec<Vec<Shadow>>,
    candidates: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        for k in 0..self.candidates[pos].len() {
            let w = self.candidates[pos][k];
            if self.used[w] {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            let consistent = self.buckets[pos]
                .iter()
                .all(|s| self.target.contains(s.map(&self.map)));
            if consistent && self.run(pos + 1) {
                return true;
            }
            self.used[w] = false;
        }
        false
    }
}

/// Find a vertex bijection `map` with `map[v]` in `b` such that shadows of `a`
/// are sent exactly onto shadows of `b`.
pub fn isomorphism(a: &FaceLattice, b: &FaceLattice) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() || a.face_count() != b.face_count() || a.top().rank != b.top().rank {
        return None;
    }
    if profile(a) != profile(b) {
        return None;
    }
    let (sa, sb) = refined_signatures(a, b)?;
    let adj_a = a.edge_graph().adjacency();
    let order = search_order(&sa, &adj_a);
    let mut position = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let mut buckets = vec![Vec::new(); n];
    for f in &a.faces()[1..] {
        let last = f
            .shadow
            .iter()
            .map(|v| position[v])
            .max()
            .expect("non-bottom face");
        buckets[last].push(f.shadow);
    }
    let candidates = order
        .iter()
        .map(|&v| (0..n).filter(|&w| sb[w] == sa[v]).collect())
        .collect();
    let mut search = Search {
        target: b,
        order,
        buckets,
        candidates,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    search.run(0).then_some(search.map)
}
