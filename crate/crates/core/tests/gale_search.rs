use cellman_core::classification::{enumerate_reducible_excess2, Family};
use cellman_core::constructions::{cycle, standard_sphere, tensor};
use cellman_core::gale::{
    find_join_faces, gale_search, gale_search_all, is_join_normal_form, link_spheres,
    reduce_join_face, sphere_from_diagram, Position,
};

#[test]
fn apex_over_a_certified_sphere_is_certified() {
    let apex = standard_sphere(-1).unwrap();
    let pyramid = tensor(&cycle(5).unwrap(), &apex).unwrap();
    let inputs = [
        cycle(5).unwrap(),
        Family::Join3(0, 0, 0).build().unwrap(),
        pyramid,
    ];
    for l in &inputs {
        assert!(gale_search(l).unwrap().is_some());
        let cone = tensor(l, &apex).unwrap();
        assert_eq!(cone.excess(), 2);
        let g = gale_search(&cone).unwrap().expect("cone has a diagram");
        assert!(sphere_from_diagram(&g).unwrap().is_isomorphic(&cone));
    }
}

#[test]
fn apex_sits_at_the_center() {
    let pyramid = tensor(&cycle(5).unwrap(), &standard_sphere(-1).unwrap()).unwrap();
    let g = gale_search(&pyramid).unwrap().unwrap();
    let apex = pyramid
        .labels()
        .iter()
        .position(|l| l.starts_with("R:"))
        .unwrap();
    assert_eq!(g.position(apex), Position::Center);
}

#[test]
fn three_dimensional_catalog_is_certified() {
    for it in enumerate_reducible_excess2(3, false).unwrap() {
        let g = gale_search(&it.lattice)
            .unwrap()
            .unwrap_or_else(|| panic!("{}", it.family));
        assert!(sphere_from_diagram(&g).unwrap().is_isomorphic(&it.lattice));
    }
}

#[test]
fn reduced_lattice_has_a_diagram_in_join_normal_form() {
    let m = Family::JoinTensorJoin(0, 0, -1, 0).build().unwrap();
    let jf = find_join_faces(&m).unwrap()[0];
    let (r, s) = link_spheres(&m, &jf).unwrap();
    let m1 = reduce_join_face(&m, jf.face).unwrap();
    let all = gale_search_all(&m1).unwrap();
    assert!(!all.is_empty());
    for g in &all {
        assert!(sphere_from_diagram(g).unwrap().is_isomorphic(&m1));
    }
    assert!(all.iter().any(|g| is_join_normal_form(g, &jf, r, s)));
}
