//! Enumeration through the public API: orientations, B = C, and structure.

use num_bigint::BigUint;
use tiltcount_core::closed_forms::a_row;
use tiltcount_core::enumerator::{count_tables, enumerate_antichains, eta_inverse, eta_map, Kind};
use tiltcount_core::root_datum::DiagramShape;
use tiltcount_core::verifier::all_orientations;
use tiltcount_core::{build_cartan, knit_category, DynkinType, Error, OrientationSpec, Series};

fn ty(s: Series, n: usize) -> DynkinType {
    DynkinType::new(s, n).unwrap()
}

#[test]
fn d4_every_orientation_agrees() {
    let t = ty(Series::D, 4);
    let specs = all_orientations(t);
    assert_eq!(specs.len(), 8);
    let expected = a_row(Series::D, 4).unwrap();
    for spec in specs {
        let cat = knit_category(&build_cartan(t, &spec).unwrap()).unwrap();
        for kind in [Kind::Antichain, Kind::SupportTilting] {
            let table = count_tables(&cat, kind).unwrap();
            assert_eq!(table.by_support_rank, expected, "{spec} {kind}");
        }
    }
}

#[test]
fn b_equals_c_up_to_five() {
    for n in 2..=5 {
        let b = knit_category(&build_cartan(ty(Series::B, n), &OrientationSpec::LinearDefault).unwrap()).unwrap();
        let c = knit_category(&build_cartan(ty(Series::C, n), &OrientationSpec::LinearDefault).unwrap()).unwrap();
        for kind in [Kind::Antichain, Kind::SupportTilting] {
            assert!(count_tables(&b, kind).unwrap().same_counts(&count_tables(&c, kind).unwrap()));
        }
    }
}

#[test]
fn explicit_orientation_spec() {
    let spec: OrientationSpec = "1>2,3>2,3>4".parse().unwrap();
    let cat = knit_category(&build_cartan(ty(Series::A, 4), &spec).unwrap()).unwrap();
    let table = count_tables(&cat, Kind::SupportTilting).unwrap();
    assert_eq!(table.total, BigUint::from(42u32));

    let bad: OrientationSpec = "1>3".parse().unwrap();
    assert!(matches!(build_cartan(ty(Series::A, 4), &bad), Err(Error::ArrowMismatch(_))));
    assert!("1-2".parse::<OrientationSpec>().is_err());
}

#[test]
fn disconnected_shape_counts_by_convolution() {
    // A2 ⊔ A1 is the conventional E3
    let a2 = ty(Series::A, 2).shape();
    let a1 = ty(Series::A, 1).shape();
    let shape: DiagramShape = a2.disjoint_union(&a1);
    let datum = tiltcount_core::root_datum::CartanDatum::from_shape("A2+A1", shape, &OrientationSpec::LinearDefault).unwrap();
    let cat = knit_category(&datum).unwrap();
    let table = count_tables(&cat, Kind::SupportTilting).unwrap();
    assert_eq!(table.by_support_rank, a_row(Series::E, 3).unwrap());
}

#[test]
fn eta_maps_b2_injective_down() {
    let cat = knit_category(&build_cartan(ty(Series::B, 2), &OrientationSpec::LinearDefault).unwrap()).unwrap();
    let sincere: Vec<_> = enumerate_antichains(&cat)
        .unwrap()
        .into_iter()
        .filter(|a| a.support() == cat.full_support())
        .collect();
    assert_eq!(sincere.len(), 3);
    let mut dropped = 0;
    for a in &sincere {
        let w = eta_map(&cat, a).unwrap();
        if w != *a {
            dropped += 1;
            assert_ne!(w.support(), cat.full_support());
        }
        assert_eq!(&eta_inverse(&cat, &w).unwrap(), a);
    }
    assert!(dropped > 0);
}
