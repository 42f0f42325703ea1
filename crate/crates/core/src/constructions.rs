//! Standard spheres, polygons, duals, products and barycentric subdivision.

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::lattice::{numbered_labels, FaceLattice};
use crate::shadow::{Shadow, MAX_VERTICES};

/// The boundary of a `(d+1)`-simplex: every subset of `d + 2` vertices.
///
/// `d = -1` gives the lattice without proper faces. It is stored with a single
/// vertex that is also the top, so that `n = dim + 2` holds.
pub fn standard_sphere(d: i32) -> Result<FaceLattice> {
    if d < -1 {
        return Err(Error::InvalidParameter(format!(
            "sphere dimension {d} < -1"
        )));
    }
    let n = (d + 2) as usize;
    if n > 20 {
        return Err(Error::Capacity(n));
    }
    FaceLattice::from_shadows(
        numbered_labels("v", n),
        Shadow::full(n).subsets().collect::<Vec<_>>(),
    )
}

/// The `n`-gon.
pub fn cycle(n: usize) -> Result<FaceLattice> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::Capacity(n));
    }
    let mut faces: Vec<Shadow> = (0..n).map(Shadow::singleton).collect();
    faces.extend((0..n).map(|i| Shadow::from_indices([i, (i + 1) % n])));
    FaceLattice::from_shadows(numbered_labels("v", n), faces)
}

/// The iterated join of `k` copies of the 0-sphere.
pub fn cross_polytope(k: usize) -> Result<FaceLattice> {
    let mut out = standard_sphere(-1)?;
    for _ in 0..k {
        out = join(&out, &standard_sphere(0)?)?;
    }
    let n = out.n();
    let labels = (0..n)
        .map(|i| format!("{}{}", if i % 2 == 0 { "p" } else { "q" }, i / 2 + 1))
        .collect();
    // Antipodal pairs are consecutive; name them p_i, q_i.
    out.with_labels(labels)
}

/// The 6-vertex triangulation of the real projective plane.
pub fn projective_plane_6() -> FaceLattice {
    const FACETS: [[usize; 3]; 10] = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ];
    FaceLattice::from_simplicial_facets(
        numbered_labels("v", 6),
        FACETS
            .iter()
            .map(|f| Shadow::from_indices(f.iter().map(|v| v - 1))),
    )
    .expect("the projective plane facets form a lattice")
}

/// The opposite lattice. Its vertices are the facets of `l`, labelled
/// `F1, F2, ...` in face order.
pub fn dual(l: &FaceLattice) -> Result<FaceLattice> {
    let facets: Vec<Shadow> = l.facets().iter().map(|f| f.shadow).collect();
    if facets.len() > MAX_VERTICES {
        return Err(Error::Capacity(facets.len()));
    }
    let shadows: Vec<Shadow> = l
        .faces()
        .iter()
        .map(|g| {
            Shadow::from_indices(
                facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| g.shadow.is_subset(**f))
                    .map(|(i, _)| i),
            )
        })
        .collect();
    FaceLattice::from_shadows(numbered_labels("F", facets.len()), shadows)
}

fn side_labels(a: &FaceLattice, b: &FaceLattice) -> Vec<String> {
    a.labels()
        .iter()
        .map(|s| format!("L:{s}"))
        .chain(b.labels().iter().map(|s| format!("R:{s}")))
        .collect()
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity(n))
    } else {
        Ok(())
    }
}

/// The direct product `⊗`: all pairs under the componentwise order.
///
/// The vertices are `(v, ⊥)` and `(⊥, w)`, labelled `L:v` and `R:w`. The top of
/// a `(-1)`-sphere factor is its single atom, so it contributes an apex.
pub fn tensor(a: &FaceLattice, b: &FaceLattice) -> Result<FaceLattice> {
    let n1 = a.n();
    check_capacity(n1 + b.n())?;
    let shadows: Vec<Shadow> = a
        .faces()
        .iter()
        .flat_map(|x| {
            b.faces()
                .iter()
                .map(move |y| Shadow(x.shadow.bits() | y.shadow.bits() << n1))
        })
        .collect();
    FaceLattice::from_shadows(side_labels(a, b), shadows)
}

/// The join `∗`: pairs with both entries below the top, plus the top pair.
pub fn join(a: &FaceLattice, b: &FaceLattice) -> Result<FaceLattice> {
    let a_trivial = a.dim() == -1;
    let b_trivial = b.dim() == -1;
    if a_trivial && b_trivial {
        return standard_sphere(-1)?.with_labels(vec![format!("L:{}", a.labels()[0])]);
    }
    // A (-1)-sphere factor has no vertex below its top, so it adds nothing.
    let (na, nb) = (
        if a_trivial { 0 } else { a.n() },
        if b_trivial { 0 } else { b.n() },
    );
    check_capacity(na + nb)?;
    let mut labels = Vec::with_capacity(na + nb);
    if !a_trivial {
        labels.extend(a.labels().iter().map(|s| format!("L:{s}")));
    }
    if !b_trivial {
        labels.extend(b.labels().iter().map(|s| format!("R:{s}")));
    }
    let below = |l: &FaceLattice| -> Vec<Shadow> {
        let top = l.top().shadow;
        l.faces()
            .iter()
            .map(|f| f.shadow)
            .filter(|s| *s != top)
            .collect()
    };
    let (fa, fb) = (below(a), below(b));
    let mut shadows: Vec<Shadow> = Vec::with_capacity(fa.len() * fb.len());
    for x in &fa {
        for y in &fb {
            shadows.push(Shadow(
                x.bits() | y.bits().checked_shl(na as u32).unwrap_or(0),
            ));
        }
    }
    FaceLattice::from_shadows(labels, shadows)
}

/// The cartesian product `×`: pairs with both entries strictly between
/// bottom and top, plus the bottom and top pairs. Vertex `(v, w)` is labelled
/// `v×w`.
pub fn cartesian(a: &FaceLattice, b: &FaceLattice) -> Result<FaceLattice> {
    if a.dim() < 0 || b.dim() < 0 {
        return Err(Error::InvalidParameter(
            "cartesian product needs factors of dimension at least 0".into(),
        ));
    }
    let (n1, n2) = (a.n(), b.n());
    check_capacity(n1 * n2)?;
    let labels = a
        .labels()
        .iter()
        .flat_map(|v| b.labels().iter().map(move |w| format!("{v}×{w}")))
        .collect();
    let mut shadows = Vec::new();
    for x in a.proper_faces() {
        for y in b.proper_faces() {
            let mut s = Shadow::EMPTY;
            for v in x.shadow.iter() {
                for w in y.shadow.iter() {
                    s = s.with(v * n2 + w);
                }
            }
            shadows.push(s);
        }
    }
    FaceLattice::from_shadows(labels, shadows)
}

/// The barycentric subdivision: one vertex per proper face, one simplex per
/// chain of proper faces. Vertex labels join the face's vertex labels with `+`.
pub fn barycentric(l: &FaceLattice) -> Result<FaceLattice> {
    if l.dim() < 0 {
        return Err(Error::InvalidParameter(
            "barycentric subdivision needs dimension at least 0".into(),
        ));
    }
    let proper = l.proper_faces();
    check_capacity(proper.len())?;
    let labels: Vec<String> = proper
        .iter()
        .map(|f| {
            f.shadow
                .iter()
                .map(|v| l.labels()[v].as_str())
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    // Proper face k sits at lattice index k + 1.
    let above: Vec<Vec<usize>> = (0..proper.len())
        .map(|k| {
            l.faces_above(k + 1)
                .into_iter()
                .map(|j| j as usize - 1)
                .filter(|&j| j < proper.len())
                .collect()
        })
        .collect();
    let mut chains: FxHashSet<Shadow> = FxHashSet::default();
    let mut stack: Vec<(usize, Shadow)> = (0..proper.len())
        .map(|k| (k, Shadow::singleton(k)))
        .collect();
    while let Some((last, chain)) = stack.pop() {
        if !chains.insert(chain) {
            continue;
        }
        for &next in &above[last] {
            stack.push((next, chain.with(next)));
        }
    }
    FaceLattice::from_shadows(labels, chains)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spheres() {
        let s = standard_sphere(-1).unwrap();
        assert_eq!((s.n(), s.face_count(), s.dim()), (1, 2, -1));
        let s0 = standard_sphere(0).unwrap();
        assert_eq!((s0.n(), s0.face_count()), (2, 4));
        assert_eq!(standard_sphere(2).unwrap().f_vector(), vec![4, 6, 4]);
        assert!(standard_sphere(-2).is_err());
    }

    #[test]
    fn cycles() {
        assert!(cycle(3)
            .unwrap()
            .is_isomorphic(&standard_sphere(1).unwrap()));
        let s0 = standard_sphere(0).unwrap();
        assert!(cycle(4).unwrap().is_isomorphic(&join(&s0, &s0).unwrap()));
        assert_eq!(cycle(6).unwrap().f_vector(), vec![6, 6]);
        assert!(matches!(cycle(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn tensor_with_minus_one_sphere() {
        let m = standard_sphere(-1).unwrap();
        assert!(tensor(&m, &m)
            .unwrap()
            .is_isomorphic(&standard_sphere(0).unwrap()));
        for b in 0..4 {
            let t = tensor(&standard_sphere(b).unwrap(), &m).unwrap();
            assert!(t.is_isomorphic(&standard_sphere(b + 1).unwrap()));
        }
        let pyramid = tensor(&cycle(5).unwrap(), &m).unwrap();
        assert_eq!(pyramid.n(), 6);
        assert_eq!(pyramid.f_vector(), vec![6, 10, 6]);
        assert_eq!(
            pyramid
                .facets()
                .iter()
                .filter(|f| f.shadow.len() == 5)
                .count(),
            1
        );
        assert!(!pyramid.is_simplicial());
        assert!(pyramid.is_valid());
    }

    #[test]
    fn join_identities() {
        let m = standard_sphere(-1).unwrap();
        let c = cycle(5).unwrap();
        assert!(join(&c, &m).unwrap().is_isomorphic(&c));
        assert!(join(&m, &c).unwrap().is_isomorphic(&c));
        assert_eq!(join(&m, &m).unwrap().dim(), -1);
        let oct = cross_polytope(3).unwrap();
        assert_eq!(oct.f_vector(), vec![6, 12, 8]);
        assert!(oct.facets().iter().all(|f| f.shadow.len() == 3));
        assert!(oct.is_valid());
        assert_eq!(oct.euler_char_of_bsd(), 2);
    }

    #[test]
    fn torus_from_triangles() {
        let t = cycle(3).unwrap();
        let torus = cartesian(&t, &t).unwrap();
        assert_eq!(torus.f_vector(), vec![9, 18, 9]);
        assert!(torus.facets().iter().all(|f| f.shadow.len() == 4));
        assert!(torus.is_valid());
        assert_eq!(torus.euler_char_of_bsd(), 0);
        assert_eq!(torus.labels()[1], "v1×v2");
    }

    #[test]
    fn duals() {
        for n in 3..8 {
            let c = cycle(n).unwrap();
            assert!(dual(&c).unwrap().is_isomorphic(&c));
        }
        let cube = dual(&cross_polytope(3).unwrap()).unwrap();
        assert_eq!((cube.n(), cube.facets().len()), (8, 6));
        assert!(cube.is_valid());
    }

    #[test]
    fn subdivisions() {
        for n in 3..7 {
            let b = barycentric(&cycle(n).unwrap()).unwrap();
            assert!(b.is_isomorphic(&cycle(2 * n).unwrap()));
        }
        let s0 = standard_sphere(0).unwrap();
        assert!(barycentric(&s0).unwrap().is_isomorphic(&s0));
        let b = barycentric(&standard_sphere(2).unwrap()).unwrap();
        assert_eq!(b.n(), 14);
        assert_eq!(b.facets().len(), 24);
        assert!(b.is_simplicial());
        assert!(b.is_valid());
    }

    #[test]
    fn projective_plane() {
        let p = projective_plane_6();
        assert_eq!(p.dim(), 2);
        assert!(p.is_valid());
        assert!(p.is_neighbourly());
        assert_eq!(p.euler_char_of_bsd(), 1);
    }
}
