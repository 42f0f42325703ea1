//! Fixtures shared by the benchmarks.

use cellman_core::classification::Family;
use cellman_core::constructions::{
    barycentric, cycle, projective_plane_6, standard_sphere, tensor,
};
use cellman_core::FaceLattice;

/// Barycentric subdivision of the octahedron: 26 vertices, 48 triangles.
pub fn subdivided_octahedron() -> FaceLattice {
    barycentric(&Family::Join3(0, 0, 0).build().unwrap()).unwrap()
}

/// A mid-sized excess-1 lattice with many faces.
pub fn wide_join() -> FaceLattice {
    Family::JoinTensor(2, 3, 1).build().unwrap()
}

/// `lattice` with its vertices listed in reverse order.
pub fn reversed(lattice: &FaceLattice) -> FaceLattice {
    let perm: Vec<usize> = (0..lattice.n()).rev().collect();
    lattice.permuted(&perm).unwrap()
}

/// Excess-2 inputs for the diagram search, largest last.
pub fn search_targets() -> Vec<(&'static str, FaceLattice)> {
    vec![
        ("cycle5", cycle(5).unwrap()),
        ("rp2", projective_plane_6()),
        (
            "pyramid_cone",
            tensor(
                &tensor(&cycle(5).unwrap(), &standard_sphere(-1).unwrap()).unwrap(),
                &standard_sphere(-1).unwrap(),
            )
            .unwrap(),
        ),
        ("jtj", Family::JoinTensorJoin(0, 0, -1, 0).build().unwrap()),
    ]
}
