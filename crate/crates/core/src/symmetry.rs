//! Transposition symmetry: the `~` classes, join decomposition, quotients
//! and inflations.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{join, standard_sphere};
use crate::error::{Error, Result};
use crate::lattice::FaceLattice;
use crate::shadow::{Shadow, MAX_VERTICES};

/// True when `perm` (a bijection of the vertices) sends faces to faces.
pub fn is_automorphism(l: &FaceLattice, perm: &[usize]) -> bool {
    let n = l.n();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return false;
        }
    }
    l.faces().iter().all(|f| l.contains(f.shadow.map(perm)))
}

/// True when swapping `x` and `y` is an automorphism. Only faces holding
/// exactly one of the two can move.
pub fn is_transposition_automorphism(l: &FaceLattice, x: usize, y: usize) -> bool {
    let pair = Shadow::from_indices([x, y]);
    l.faces().iter().all(|f| {
        let hit = f.shadow.intersection(pair);
        hit.len() != 1 || l.contains(Shadow(f.shadow.bits() ^ pair.bits()))
    })
}

/// The `~` classes of a lattice, in order of their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    pub classes: Vec<Shadow>,
}

impl VertexPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, v: usize) -> Option<Shadow> {
        self.classes.iter().copied().find(|c| c.contains(v))
    }

    /// All classes are singletons.
    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn display<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        DisplayPartition {
            partition: self,
            labels,
        }
    }
}

struct DisplayPartition<'a> {
    partition: &'a VertexPartition,
    labels: &'a [String],
}

impl fmt::Display for DisplayPartition<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.partition.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c.display(self.labels))?;
        }
        write!(f, "}}")
    }
}

/// Classes of `x ~ y` iff `x = y` or the transposition `(x y)` is an automorphism.
pub fn tilde_partition(l: &FaceLattice) -> VertexPartition {
    let n = l.n();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .collect();
    let related: Vec<(usize, usize)> = pairs
        .into_par_iter()
        .filter(|&(x, y)| is_transposition_automorphism(l, x, y))
        .collect();
    let mut class: Vec<Shadow> = (0..n).map(Shadow::singleton).collect();
    for &(x, y) in &related {
        let merged = class[x].union(class[y]);
        for v in merged.iter() {
            class[v] = merged;
        }
    }
    if cfg!(debug_assertions) {
        // The relation is transitive, so every pair inside a class was related directly.
        for (v, c) in class.iter().enumerate() {
            for w in c.iter().filter(|&w| w > v) {
                debug_assert!(related.contains(&(v, w)), "~ is not transitive at {v},{w}");
            }
        }
    }
    let mut classes: Vec<Shadow> = Vec::new();
    for (v, c) in class.into_iter().enumerate() {
        if c.first() == Some(v) {
            classes.push(c);
        }
    }
    VertexPartition { classes }
}

/// Classes not contained in the shadow of any facet.
pub fn sphere_classes(l: &FaceLattice, partition: &VertexPartition) -> Vec<Shadow> {
    if l.dim() < 0 {
        return Vec::new();
    }
    partition
        .classes
        .iter()
        .copied()
        .filter(|c| !l.facets().iter().any(|f| c.is_subset(f.shadow)))
        .collect()
}

/// Some `~` class lies in no facet.
pub fn is_reducible(l: &FaceLattice) -> bool {
    !sphere_classes(l, &tilde_partition(l)).is_empty()
}

/// An irreducible lattice together with the standard-sphere factors split off it.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub irreducible_part: FaceLattice,
    /// Vertex sets of the split-off spheres, as shadows of the input.
    pub sphere_classes: Vec<Shadow>,
}

impl Decomposition {
    /// Join the irreducible part with a standard sphere on each class.
    pub fn rejoin(&self) -> Result<FaceLattice> {
        let mut out = self.irreducible_part.clone();
        for c in &self.sphere_classes {
            out = join(&out, &standard_sphere(c.len() as i32 - 2)?)?;
        }
        Ok(out)
    }
}

/// Split `l` into an irreducible part joined with standard spheres.
pub fn decompose(l: &FaceLattice) -> Result<Decomposition> {
    if l.dim() < 0 {
        return Ok(Decomposition {
            irreducible_part: l.clone(),
            sphere_classes: Vec::new(),
        });
    }
    let spheres = sphere_classes(l, &tilde_partition(l));
    if spheres.is_empty() {
        return Ok(Decomposition {
            irreducible_part: l.clone(),
            sphere_classes: spheres,
        });
    }
    let removed = spheres.iter().fold(Shadow::EMPTY, |acc, c| acc.union(*c));
    let kept: Vec<usize> = l.top().shadow.difference(removed).to_vec();
    let irreducible_part = if kept.is_empty() {
        standard_sphere(-1)?
    } else {
        let mut position = vec![usize::MAX; l.n()];
        for (i, &v) in kept.iter().enumerate() {
            position[v] = i;
        }
        let labels = kept.iter().map(|&v| l.labels()[v].clone()).collect();
        let shadows: Vec<Shadow> = l
            .faces()
            .iter()
            .filter(|f| f.shadow.is_disjoint(removed))
            .map(|f| f.shadow.map(&position))
            .collect();
        FaceLattice::from_shadows(labels, shadows)?
    };
    Ok(Decomposition {
        irreducible_part,
        sphere_classes: spheres,
    })
}

/// A `~` class that is not the shadow of a proper face, if any.
fn improper_class(l: &FaceLattice, partition: &VertexPartition) -> Option<Shadow> {
    let top = l.top().shadow;
    partition
        .classes
        .iter()
        .copied()
        .find(|c| *c == top || !l.contains(*c))
}

/// Every `~` class is the shadow of a proper face. A standard sphere, whose
/// single class is the whole vertex set, is not proper.
pub fn is_proper(l: &FaceLattice) -> bool {
    improper_class(l, &tilde_partition(l)).is_none()
}

/// Every `~` class is a single vertex.
pub fn is_primitive(l: &FaceLattice) -> bool {
    tilde_partition(l).is_discrete()
}

/// `M/~`: one vertex per class; a set of classes is a face when its union is.
/// Class labels are the member labels, sorted and joined with `+`.
pub fn quotient(l: &FaceLattice) -> Result<FaceLattice> {
    let partition = tilde_partition(l);
    if let Some(bad) = improper_class(l, &partition) {
        return Err(Error::NotProper(bad));
    }
    let classes = &partition.classes;
    let labels = classes
        .iter()
        .map(|c| {
            let mut names: Vec<&str> = c.iter().map(|v| l.labels()[v].as_str()).collect();
            names.sort_unstable();
            names.join("+")
        })
        .collect();
    let shadows: Vec<Shadow> = l
        .faces()
        .iter()
        .filter(|f| {
            classes
                .iter()
                .all(|c| c.is_subset(f.shadow) || c.is_disjoint(f.shadow))
        })
        .map(|f| {
            Shadow::from_indices(
                classes
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.is_subset(f.shadow))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    FaceLattice::from_shadows(labels, shadows)
}

/// `⟨N, f⟩`: replace vertex `x` of `n` by `mult[x]` copies `x.1, x.2, ...`.
///
/// A set `A` of copies is a face exactly when the vertices whose copies all
/// lie in `A` form a face of `n`.
pub fn inflate(n: &FaceLattice, mult: &[usize]) -> Result<FaceLattice> {
    if mult.len() != n.n() {
        return Err(Error::InvalidParameter(format!(
            "expected {} multiplicities, got {}",
            n.n(),
            mult.len()
        )));
    }
    if let Some(x) = mult.iter().position(|&m| m == 0) {
        return Err(Error::InvalidParameter(format!(
            "multiplicity of {} must be positive",
            n.labels()[x]
        )));
    }
    let total: usize = mult.iter().sum();
    if total > MAX_VERTICES {
        return Err(Error::Capacity(total));
    }
    if let Some(bad) = improper_class(n, &tilde_partition(n)) {
        return Err(Error::NotProper(bad));
    }

    let mut blocks = Vec::with_capacity(mult.len());
    let mut labels = Vec::with_capacity(total);
    for (x, &m) in mult.iter().enumerate() {
        let start = labels.len();
        for i in 1..=m {
            labels.push(format!("{}.{i}", n.labels()[x]));
        }
        blocks.push(Shadow(Shadow::full(m).bits() << start));
    }

    let mut shadows = Vec::new();
    for alpha in n.faces() {
        // Full blocks for members of alpha, a proper subset of every other block.
        let base = alpha
            .shadow
            .iter()
            .fold(Shadow::EMPTY, |acc, x| acc.union(blocks[x]));
        let mut partial = vec![base];
        for x in n.top().shadow.difference(alpha.shadow).iter() {
            let choices: Vec<Shadow> = blocks[x].subsets().filter(|s| *s != blocks[x]).collect();
            partial = partial
                .iter()
                .flat_map(|p| choices.iter().map(move |c| p.union(*c)))
                .collect();
        }
        shadows.extend(partial);
    }
    FaceLattice::from_shadows(labels, shadows)
}
