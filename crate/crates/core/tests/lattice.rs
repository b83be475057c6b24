mod common;

use std::collections::{BTreeMap, BTreeSet};

use brt_core::{LcmLattice, Morphism, Multidegree};
use common::*;
use rand::Rng;

/// Joins of all nonempty column sets, with the sets realizing each.
fn brute_force_joins(phi: &Morphism) -> BTreeMap<Multidegree, Vec<Vec<usize>>> {
    let e = phi.e();
    let mut out: BTreeMap<Multidegree, Vec<Vec<usize>>> = BTreeMap::new();
    for mask in 1u32..1 << e {
        let face: Vec<usize> = (0..e).filter(|i| mask >> i & 1 == 1).collect();
        out.entry(phi.face_degree(&face)).or_default().push(face);
    }
    out
}

#[test]
fn lattice_matches_brute_force() {
    let mut r = rng(11);
    for _ in 0..60 {
        let phi = random_morphism(&mut r, 3, 5, 2, 3);
        let lat = LcmLattice::of(&phi).unwrap();
        let joins = brute_force_joins(&phi);
        assert_eq!(lat.elements().iter().cloned().collect::<BTreeSet<_>>(), joins.keys().cloned().collect());
        for (a, faces) in &joins {
            assert_eq!(lat.face_count(a), faces.len() as u64);
            let fd = lat.face_data(a).unwrap();
            assert_eq!(fd.columns_leq, phi.columns_leq(a));
            let meet: Vec<usize> =
                (0..phi.e()).filter(|i| faces.iter().all(|f| f.contains(i))).collect();
            assert_eq!(fd.meet, meet);
            let upper: Vec<usize> = fd.columns_leq.iter().copied().filter(|i| !meet.contains(i)).collect();
            assert_eq!(fd.upper, upper);
            // the largest face of degree a is I_a
            assert!(faces.contains(&fd.columns_leq));
            assert_eq!(&phi.face_degree(&fd.columns_leq), a);
        }
        let scarf: BTreeSet<Vec<usize>> = joins.values().filter(|f| f.len() == 1).map(|f| f[0].clone()).collect();
        assert_eq!(lat.scarf_faces().into_iter().collect::<BTreeSet<_>>(), scarf);
        assert_eq!(lat.scarf_part().len() + lat.nonscarf_part().len(), lat.elements().len());
    }
}

#[test]
fn lattice_is_closed_under_joins() {
    let mut r = rng(12);
    for _ in 0..40 {
        let phi = random_morphism(&mut r, 4, 5, 2, 2);
        let lat = LcmLattice::of(&phi).unwrap();
        for a in lat.elements() {
            for b in lat.elements() {
                assert!(lat.contains(&a.vee(b)));
            }
        }
        for atom in phi.source_degrees() {
            assert!(lat.contains(atom));
        }
    }
}

#[test]
fn scarf_faces_form_a_simplicial_complex() {
    let mut r = rng(13);
    for _ in 0..40 {
        let phi = random_morphism(&mut r, 3, 6, 1, 3);
        let faces: BTreeSet<Vec<usize>> = LcmLattice::of(&phi).unwrap().scarf_faces().into_iter().collect();
        for f in &faces {
            for t in 0..f.len() {
                if f.len() > 1 {
                    let mut sub = f.clone();
                    sub.remove(t);
                    assert!(faces.contains(&sub), "{f:?} without {t}");
                }
            }
        }
    }
}

#[test]
fn columns_and_k_spaces_are_monotone() {
    let mut r = rng(14);
    for _ in 0..40 {
        let phi = random_morphism(&mut r, 3, 5, 3, 3);
        let lat = LcmLattice::of(&phi).unwrap();
        for a in lat.elements() {
            for b in lat.elements() {
                if a.le(b) {
                    let (ia, ib) = (phi.columns_leq(a), phi.columns_leq(b));
                    assert!(ia.iter().all(|i| ib.contains(i)));
                    assert!(phi.k_space(&ib).is_subspace_of(&phi.k_space(&ia)));
                }
            }
        }
    }
}

#[test]
fn uniform_rank_implies_maximal_rank() {
    let mut r = rng(15);
    let mut uniform = 0;
    for _ in 0..200 {
        let e = r.gen_range(2..=6);
        let g = r.gen_range(1..=3);
        let phi = random_morphism(&mut r, 3, e, g, 3);
        if phi.is_uniform_rank() {
            uniform += 1;
            assert!(phi.is_maximal_rank_everywhere().unwrap());
        }
    }
    assert!(uniform > 50);
}

#[test]
fn combinatorial_genericity_by_definition() {
    let mut r = rng(16);
    for _ in 0..100 {
        let phi = random_morphism(&mut r, 3, 4, 1, 3);
        let degs = phi.source_degrees();
        let expected = (0..degs.len()).all(|i| {
            (i + 1..degs.len()).all(|j| {
                let diff = degs[i].difference(&degs[j]).unwrap();
                let supp: BTreeSet<usize> = diff.support().into_iter().collect();
                degs[i].support().iter().chain(&degs[j].support()).all(|k| supp.contains(k))
            })
        });
        assert_eq!(phi.is_combinatorially_generic(), expected);
    }
}
