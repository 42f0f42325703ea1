//! The excess-1 and reducible excess-2 families, their closed-form counts,
//! and a brute-force enumerator used as an independent check.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{join, standard_sphere, tensor};
use crate::error::{Error, Result};
use crate::lattice::{numbered_labels, FaceLattice};
use crate::shadow::Shadow;

/// A named construction from standard spheres. Parameters are sphere
/// dimensions; a sphere of dimension `b` has `b + 2` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum Family {
    /// `S^b1 ∗ S^b2`
    Join2(i32, i32),
    /// `(S^d1 ∗ S^d2) ⊗ S^d3`
    JoinTensor(i32, i32, i32),
    /// `S^b1 ∗ S^b2 ∗ S^b3`
    Join3(i32, i32, i32),
    /// `((S^d1 ∗ S^d2) ⊗ S^d3) ∗ S^d4`
    JoinTensorJoin(i32, i32, i32, i32),
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Join2(..) => "Join2",
            Family::JoinTensor(..) => "JoinTensor",
            Family::Join3(..) => "Join3",
            Family::JoinTensorJoin(..) => "JoinTensorJoin",
        }
    }

    pub fn params(&self) -> Vec<i32> {
        match *self {
            Family::Join2(a, b) => vec![a, b],
            Family::JoinTensor(a, b, c) | Family::Join3(a, b, c) => vec![a, b, c],
            Family::JoinTensorJoin(a, b, c, d) => vec![a, b, c, d],
        }
    }

    /// Build the lattice. Factor vertices are named `a1, a2, ...`, `b1, ...`
    /// and so on, one letter per factor in order.
    pub fn build(&self) -> Result<FaceLattice> {
        let sphere = |d: i32, letter: &str| -> Result<FaceLattice> {
            let s = standard_sphere(d)?;
            let n = s.n();
            s.with_labels(numbered_labels(letter, n))
        };
        let lattice = match *self {
            Family::Join2(a, b) => join(&sphere(a, "a")?, &sphere(b, "b")?)?,
            Family::JoinTensor(a, b, c) => {
                tensor(&join(&sphere(a, "a")?, &sphere(b, "b")?)?, &sphere(c, "c")?)?
            }
            Family::Join3(a, b, c) => {
                join(&join(&sphere(a, "a")?, &sphere(b, "b")?)?, &sphere(c, "c")?)?
            }
            Family::JoinTensorJoin(a, b, c, d) => join(
                &tensor(&join(&sphere(a, "a")?, &sphere(b, "b")?)?, &sphere(c, "c")?)?,
                &sphere(d, "d")?,
            )?,
        };
        let labels = lattice
            .labels()
            .iter()
            .map(|s| strip_sides(s).to_string())
            .collect();
        lattice.with_labels(labels)
    }

    /// The neighbourliness criterion for the excess-2 families: no 0-sphere
    /// factor in a join position.
    pub fn is_neighbourly_family(&self) -> bool {
        match *self {
            Family::Join3(a, b, c) => a >= 1 && b >= 1 && c >= 1,
            Family::JoinTensorJoin(a, b, _, d) => a >= 1 && b >= 1 && d >= 1,
            _ => false,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.tag(), params.join(","))
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parse the display form, e.g. `JoinTensor(0,0,-1)`.
    fn from_str(s: &str) -> Result<Family> {
        let bad = || Error::InvalidParameter(format!("cannot parse family {s:?}"));
        let (tag, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let p: Vec<i32> = inner
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (tag.trim(), p.as_slice()) {
            ("Join2", &[a, b]) => Ok(Family::Join2(a, b)),
            ("JoinTensor", &[a, b, c]) => Ok(Family::JoinTensor(a, b, c)),
            ("Join3", &[a, b, c]) => Ok(Family::Join3(a, b, c)),
            ("JoinTensorJoin", &[a, b, c, d]) => Ok(Family::JoinTensorJoin(a, b, c, d)),
            _ => Err(bad()),
        }
    }
}

fn strip_sides(label: &str) -> &str {
    let mut s = label;
    while let Some(rest) = s.strip_prefix("L:").or_else(|| s.strip_prefix("R:")) {
        s = rest;
    }
    s
}

#[derive(Clone, Debug)]
pub struct ClassificationItem {
    pub family: Family,
    pub lattice: FaceLattice,
}

fn build_all(families: Vec<Family>) -> Result<Vec<ClassificationItem>> {
    families
        .into_par_iter()
        .map(|family| {
            Ok(ClassificationItem {
                family,
                lattice: family.build()?,
            })
        })
        .collect()
}

/// Parameters of the excess-1 families in dimension `d`, in listing order.
pub fn excess1_families(d: i32) -> Result<Vec<Family>> {
    if d < 1 {
        return Err(Error::InvalidParameter(format!("dimension {d} < 1")));
    }
    let mut out = Vec::new();
    for b1 in 0..=(d - 1) / 2 {
        out.push(Family::Join2(b1, d - 1 - b1));
    }
    for d1 in 0..=d {
        for d2 in d1..=d {
            let d3 = d - 3 - d1 - d2;
            if d3 >= -1 {
                out.push(Family::JoinTensor(d1, d2, d3));
            }
        }
    }
    Ok(out)
}

/// Every `d`-dimensional cellular pseudomanifold of excess 1, one per class.
pub fn enumerate_excess1(d: i32) -> Result<Vec<ClassificationItem>> {
    build_all(excess1_families(d)?)
}

/// Parameters of the reducible excess-2 families in dimension `d`.
pub fn reducible_excess2_families(d: i32, neighbourly_only: bool) -> Result<Vec<Family>> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("dimension {d} < 2")));
    }
    let mut out = Vec::new();
    for b1 in 0..=d {
        for b2 in b1..=d {
            let b3 = d - 2 - b1 - b2;
            if b3 >= b2 {
                out.push(Family::Join3(b1, b2, b3));
            }
        }
    }
    for d1 in 0..=d {
        for d2 in d1..=d {
            for d3 in -1..=d {
                let d4 = d - 4 - d1 - d2 - d3;
                if d4 >= 0 {
                    out.push(Family::JoinTensorJoin(d1, d2, d3, d4));
                }
            }
        }
    }
    if neighbourly_only {
        out.retain(Family::is_neighbourly_family);
    }
    Ok(out)
}

/// Every reducible `d`-dimensional cellular pseudomanifold of excess 2.
pub fn enumerate_reducible_excess2(
    d: i32,
    neighbourly_only: bool,
) -> Result<Vec<ClassificationItem>> {
    build_all(reducible_excess2_families(d, neighbourly_only)?)
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// `⌊(d+1)²/4⌋`
pub fn count_excess1(d: i64) -> i64 {
    floor_div((d + 1) * (d + 1), 4)
}

/// `⌊((d²+1)(2d−1)+9)/24⌋`
pub fn count_reducible_excess2(d: i64) -> i64 {
    floor_div((d * d + 1) * (2 * d - 1) + 9, 24)
}

/// Reducible neighbourly excess-2 count, obtained from
/// [`count_reducible_excess2`] by shifting three parameters down by one.
pub fn count_neighbourly(d: i64) -> i64 {
    let e = d - 3;
    floor_div((e * e + 1) * (2 * e - 1) + 9, 24)
}

/// An alternative closed form for the neighbourly count. It disagrees with
/// [`count_neighbourly`] and with direct enumeration (17 against 27 at
/// `d = 10`) and is kept for comparison only.
pub fn count_neighbourly_alternative(d: i64) -> i64 {
    floor_div((d * d - 6 * d - 8) * (2 * d - 7) + 9, 24)
}

/// All cellular pseudomanifolds of dimension `d` on `n` vertices, up to
/// isomorphism, by exhaustive search. Supported: `d = 1, n <= 12` and
/// `d = 2, n <= 5`.
///
/// In dimension 1 every edge has two vertices and every vertex lies on two
/// edges, so candidates are the 2-regular graphs. In dimension 2 every face
/// is an intersection of facets, so candidates are antichains of vertex sets
/// of size 3 to `n - 1`.
pub fn brute_force_enumerate(d: i32, n: usize) -> Result<Vec<FaceLattice>> {
    let found = match (d, n) {
        (1, 0..=12) => one_dimensional(n),
        (2, 0..=5) => two_dimensional(n),
        _ => {
            return Err(Error::InfeasibleSize(format!(
                "brute force supports d=1 with n<=12 and d=2 with n<=5, got d={d} n={n}"
            )))
        }
    };
    let mut reps: Vec<FaceLattice> = Vec::new();
    for l in found {
        if !reps.iter().any(|r| r.is_isomorphic(&l)) {
            reps.push(l);
        }
    }
    Ok(reps)
}

/// 2-regular graphs with vertex 0 adjacent to 1 and 2, which every 2-regular
/// graph becomes after relabelling.
fn one_dimensional(n: usize) -> Vec<FaceLattice> {
    if n < 3 {
        return Vec::new();
    }
    let mut graphs = Vec::new();
    let mut degree = vec![0u8; n];
    let mut edges = vec![(0, 1), (0, 2)];
    degree[0] = 2;
    degree[1] = 1;
    degree[2] = 1;
    extend_two_regular(n, 1, &mut degree, &mut edges, &mut graphs);
    graphs
        .into_par_iter()
        .filter_map(|edges| {
            let mut faces: Vec<Shadow> = (0..n).map(Shadow::singleton).collect();
            faces.extend(edges.iter().map(|&(a, b)| Shadow::from_indices([a, b])));
            let l = FaceLattice::from_shadows(numbered_labels("v", n), faces).ok()?;
            (l.dim() == 1 && l.is_valid()).then_some(l)
        })
        .collect()
}

fn extend_two_regular(
    n: usize,
    v: usize,
    degree: &mut Vec<u8>,
    edges: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if v == n {
        out.push(edges.clone());
        return;
    }
    match degree[v] {
        2 => extend_two_regular(n, v + 1, degree, edges, out),
        1 => {
            for w in v + 1..n {
                if degree[w] < 2 && !edges.contains(&(v, w)) {
                    degree[v] += 1;
                    degree[w] += 1;
                    edges.push((v, w));
                    extend_two_regular(n, v + 1, degree, edges, out);
                    edges.pop();
                    degree[v] -= 1;
                    degree[w] -= 1;
                }
            }
        }
        _ => {
            for w1 in v + 1..n {
                for w2 in w1 + 1..n {
                    if degree[w1] < 2 && degree[w2] < 2 {
                        degree[v] = 2;
                        degree[w1] += 1;
                        degree[w2] += 1;
                        edges.push((v, w1));
                        edges.push((v, w2));
                        extend_two_regular(n, v + 1, degree, edges, out);
                        edges.pop();
                        edges.pop();
                        degree[v] = 0;
                        degree[w1] -= 1;
                        degree[w2] -= 1;
                    }
                }
            }
        }
    }
}

fn two_dimensional(n: usize) -> Vec<FaceLattice> {
    if n < 4 {
        return Vec::new();
    }
    let candidates: Vec<Shadow> = Shadow::full(n)
        .subsets()
        .filter(|s| (3..n).contains(&s.len()))
        .collect();
    let k = candidates.len();
    (1u32..1 << k)
        .into_par_iter()
        .filter_map(|mask| {
            let facets: Vec<Shadow> = (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            let antichain = facets
                .iter()
                .all(|a| facets.iter().all(|b| a == b || !a.is_subset(*b)));
            if !antichain {
                return None;
            }
            let l = FaceLattice::from_facet_intersections(numbered_labels("v", n), facets).ok()?;
            (l.dim() == 2 && l.is_valid()).then_some(l)
        })
        .collect()
}
