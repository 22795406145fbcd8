//! Values pinned on named cones.

use toric_ishida::combinatorics::{h_tilde_simple, FVector};
use toric_ishida::corpus::named_cone;
use toric_ishida::ishida::{build, ExtTable};
use toric_ishida::mhm::{
    a_numbers, a_numbers_simple_closed_form, a_numbers_spectral, decomposition_report, AValue,
};
use toric_ishida::FaceLattice;

fn lattice(name: &str) -> FaceLattice {
    FaceLattice::new(&named_cone(name).unwrap())
}

#[test]
fn quadric_ishida_complexes() {
    let fl = lattice("quadric");
    let top = build(&fl, 3).unwrap();
    assert_eq!(top.term_dims, vec![1, 4, 4, 1]);
    assert_eq!(top.cohomology_dims(), vec![0, 0, 0, 0]);
    assert_eq!(build(&fl, 1).unwrap().cohomology_dims(), vec![0, 1]);
}

#[test]
fn degree_zero_cohomology_in_dimension_four() {
    assert_eq!(build(&lattice("octahedron"), 3).unwrap().cohomology_dims(), vec![0, 0, 2, 0]);
    assert_eq!(build(&lattice("cube"), 3).unwrap().cohomology_dims(), vec![0, 2, 0, 0]);
}

#[test]
fn lcdef_values() {
    for (name, want) in [("quadric", 0), ("octahedron", 1), ("cube", 0), ("cross4", 2), ("example_dual", 0)] {
        let t = ExtTable::compute(&lattice(name)).unwrap();
        assert_eq!(t.lcdef(), want, "{name}");
    }
}

#[test]
fn dual_generator_example() {
    let fl = lattice("example_dual");
    let f = FVector::of(&fl);
    assert_eq!(f.f, vec![1, 9, 18, 15, 6, 1]);
    let ht = h_tilde_simple(&f);
    let t = ExtTable::compute(&fl).unwrap();
    let spectral = a_numbers_spectral(&fl, &t).unwrap();
    let closed = a_numbers_simple_closed_form(&fl).unwrap();
    assert_eq!(spectral.top().entries, closed.top().entries);
    assert_eq!(spectral.top().get(0, 1), AValue::Determined((ht[1] - ht[0]) as u64));
    assert_eq!(spectral.top().get(0, 2), AValue::Determined((ht[2] - ht[1]) as u64));
    assert_eq!(spectral.top().r, Some(1));
}

#[test]
fn decomposition_reports() {
    let fl = lattice("octahedron");
    let t = ExtTable::compute(&fl).unwrap();
    let rep = decomposition_report(&a_numbers(&fl, &t).unwrap(), &t);
    assert_eq!(rep.lcdef_implied, 1);
    let h1: Vec<_> = rep.pieces.iter().filter(|p| p.l == 1).collect();
    assert_eq!(h1.len(), 1);
    assert_eq!(h1[0].weight, 2);
    assert_eq!(h1[0].summands[0].multiplicity, AValue::Determined(2));

    let fl = lattice("cube");
    let t = ExtTable::compute(&fl).unwrap();
    let rep = decomposition_report(&a_numbers(&fl, &t).unwrap(), &t);
    assert!(rep.pieces.iter().all(|p| p.l == 0));
    let w2: Vec<_> = rep.pieces.iter().filter(|p| p.weight == 2).collect();
    assert_eq!(w2[0].summands.len(), 1);
    assert_eq!(w2[0].summands[0].multiplicity, AValue::Determined(2));
    // square facets of the cube contribute at weight 3
    let w3: Vec<_> = rep.pieces.iter().filter(|p| p.weight == 3).collect();
    assert_eq!(w3[0].summands.len(), 6);
}

#[test]
fn six_dimensional_cone_outside_both_classes() {
    let fl = lattice("triangle_product_pyramid");
    let t = ExtTable::compute(&fl).unwrap();
    let dec = a_numbers(&fl, &t).unwrap();
    let top = dec.top();
    assert_eq!(top.get(0, 2), AValue::Undetermined);
    assert_eq!(top.get(1, 2), AValue::Undetermined);
    for l in 0..=3 {
        assert!(top.get(l, 1).determined().is_some());
    }
    assert_eq!(dec.undetermined().len(), 2);
}
