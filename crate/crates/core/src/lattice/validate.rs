use std::fmt;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::FaceLattice;
use crate::shadow::Shadow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Stored rank disagrees with the recomputed longest-chain rank.
    Rank,
    /// A rank-gap-2 interval without exactly two middle elements.
    Diamond,
    /// A rank-gap >= 3 interval whose facet graph is disconnected.
    Connectivity,
    /// A Gale diagram line with fewer than two points on one open side.
    Hemisphere,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Rank => "rank",
            Check::Diamond => "diamond",
            Check::Connectivity => "connectivity",
            Check::Hemisphere => "hemisphere",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: Check,
    pub witnesses: Vec<Shadow>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub verdict: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn from_violations(mut violations: Vec<Violation>) -> ValidationReport {
        violations.sort_by(|a, b| a.witnesses.cmp(&b.witnesses).then(a.check.cmp(&b.check)));
        ValidationReport {
            verdict: violations.is_empty(),
            violations,
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

pub(super) fn validate(l: &FaceLattice) -> ValidationReport {
    let mut violations = Vec::new();

    let mut rank = vec![0u32; l.faces.len()];
    for i in 1..l.faces.len() {
        rank[i] = 1 + l.down[i]
            .iter()
            .map(|&j| rank[j as usize])
            .max()
            .unwrap_or(0);
        if rank[i] != l.faces[i].rank {
            violations.push(Violation {
                check: Check::Rank,
                witnesses: vec![l.faces[i].shadow],
                detail: format!("stored rank {} but chain rank {}", l.faces[i].rank, rank[i]),
            });
        }
    }

    let diamond: Vec<Violation> = (0..l.faces.len())
        .into_par_iter()
        .flat_map_iter(|x| diamond_at(l, x))
        .collect();
    violations.extend(diamond);

    let connectivity: Vec<Violation> = (0..l.faces.len())
        .into_par_iter()
        .filter(|&z| l.faces[z].rank >= 3)
        .flat_map_iter(|z| connectivity_below(l, z))
        .collect();
    violations.extend(connectivity);

    ValidationReport::from_violations(violations)
}

fn diamond_at(l: &FaceLattice, x: usize) -> Vec<Violation> {
    let mut paths: FxHashMap<u32, usize> = FxHashMap::default();
    for &y in &l.up[x] {
        for &z in &l.up[y as usize] {
            *paths.entry(z).or_default() += 1;
        }
    }
    let mut out: Vec<Violation> = paths
        .into_iter()
        .filter(|&(_, count)| count != 2)
        .map(|(z, count)| Violation {
            check: Check::Diamond,
            witnesses: vec![l.faces[x].shadow, l.faces[z as usize].shadow],
            detail: format!("{count} middle elements"),
        })
        .collect();
    out.sort_by(|a, b| a.witnesses.cmp(&b.witnesses));
    out
}

/// For every `x` at least three ranks below `z`, the coatoms of `z` above `x`
/// must be connected through shared faces of rank `ρ(z) - 2` that contain `x`.
fn connectivity_below(l: &FaceLattice, z: usize) -> Vec<Violation> {
    let coatoms: Vec<Shadow> = l.down[z]
        .iter()
        .map(|&c| l.faces[c as usize].shadow)
        .collect();
    let mut shared: FxHashMap<u32, Vec<usize>> = FxHashMap::default();
    for (k, &c) in l.down[z].iter().enumerate() {
        for &w in &l.down[c as usize] {
            shared.entry(w).or_default().push(k);
        }
    }
    let mut edges: Vec<(usize, usize, Shadow)> = Vec::new();
    for (&w, above) in &shared {
        let ws = l.faces[w as usize].shadow;
        for (i, &a) in above.iter().enumerate() {
            for &b in &above[i + 1..] {
                edges.push((a, b, ws));
            }
        }
    }

    let zr = l.faces[z].rank;
    let mut out = Vec::new();
    for x in l.faces_below(z) {
        let fx = l.faces[x as usize];
        if fx.rank + 3 > zr {
            continue;
        }
        let mut uf = UnionFind::new(coatoms.len());
        for &(a, b, ws) in &edges {
            if fx.shadow.is_subset(ws) {
                uf.union(a, b);
            }
        }
        let mut root = None;
        let connected = coatoms
            .iter()
            .enumerate()
            .filter(|(_, c)| fx.shadow.is_subset(**c))
            .all(|(k, _)| {
                let r = uf.find(k);
                *root.get_or_insert(r) == r
            });
        if !connected {
            out.push(Violation {
                check: Check::Connectivity,
                witnesses: vec![fx.shadow, l.faces[z].shadow],
                detail: "facet graph of the interval is disconnected".into(),
            });
        }
    }
    out
}
