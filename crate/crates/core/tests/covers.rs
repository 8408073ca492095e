use antipodal_core::covers::{
    cap_cover, empirical_nerve, lift_cover, lifted_cap_cover, membership, regular_simplex_vertices, sample_sphere,
    structured_battery, verify_cover, Cover, CoverSet, SpherePoint,
};

const PAIRS: usize = 100_000;
const SEED: u64 = 42;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[test]
fn cap_cover_of_circle_and_sphere() {
    for (h, sets, mult) in [(1, 3, 2), (2, 4, 3)] {
        let c = cap_cover(h).unwrap();
        assert_eq!(c.sets.len(), sets);
        let r = verify_cover(&c, &sample_sphere(h, PAIRS, SEED).unwrap()).unwrap();
        assert!(r.covered && r.antipodal_free);
        assert_eq!(r.max_multiplicity, mult);
        assert_eq!(r.samples_used, 2 * r.pairs);
        assert_eq!(r.multiplicity_histogram.iter().sum::<usize>(), r.samples_used);
    }
}

#[test]
fn simplex_vertex_lies_in_all_other_caps() {
    for h in 1..=6 {
        let c = cap_cover(h).unwrap();
        for (i, w) in regular_simplex_vertices(h).unwrap().iter().enumerate() {
            let members = c.members(w).unwrap();
            let expected: Vec<usize> = (0..h + 2).filter(|&j| j != i).collect();
            assert_eq!(members, expected);
        }
    }
}

#[test]
fn multiplicity_witness_reproduces() {
    let c = cap_cover(3).unwrap();
    let r = verify_cover(&c, &sample_sphere(3, 5000, 3).unwrap()).unwrap();
    let w = r.multiplicity_witness.unwrap();
    assert_eq!(c.members(&w.point).unwrap(), w.sets);
    assert_eq!(w.sets.len(), 4);
}

#[test]
fn dropping_a_cap_leaves_its_center_uncovered() {
    let mut c = cap_cover(2).unwrap();
    let removed = c.sets.remove(1);
    let CoverSet::Cap { normal, .. } = &removed else { unreachable!() };
    let r = verify_cover(&c, &sample_sphere(2, PAIRS, SEED).unwrap()).unwrap();
    assert!(!r.covered);
    let witness = r.uncovered_witness.unwrap().point;
    // The witness is in none of the remaining caps, and near the center -w of the removed one.
    for s in &c.sets {
        assert!(!membership(s, &witness).unwrap());
    }
    assert!(dot(witness.coords(), normal) < -0.99, "witness {:?}", witness.coords());
}

#[test]
fn wide_cap_is_not_antipodal_free() {
    let w = vec![0.0, 0.0, 1.0];
    let c = Cover { sphere_dim: 2, sets: vec![CoverSet::Cap { normal: w.clone(), threshold: 0.5 }], epsilon: None };
    let r = verify_cover(&c, &sample_sphere(2, 1000, SEED).unwrap()).unwrap();
    assert!(!r.antipodal_free);
    let aw = r.antipodal_witness.unwrap();
    assert_eq!(aw.set, 0);
    assert!(membership(&c.sets[0], &aw.point).unwrap());
    assert!(membership(&c.sets[0], &aw.point.antipode()).unwrap());
    assert!(dot(aw.point.coords(), &w).abs() < 0.5);
}

#[test]
fn lifted_circle_cover() {
    let lifted = lift_cover(&cap_cover(1).unwrap(), 0.05).unwrap();
    let r = verify_cover(&lifted, &sample_sphere(2, PAIRS, SEED).unwrap()).unwrap();
    assert_eq!(lifted.sets.len(), 4);
    assert!(r.covered && r.antipodal_free);
    assert!(r.max_multiplicity <= 3);

    let twice = lifted_cap_cover(3, 0.05).unwrap();
    let r = verify_cover(&twice, &sample_sphere(3, PAIRS, SEED).unwrap()).unwrap();
    assert_eq!(twice.sets.len(), 5);
    assert!(r.covered && r.antipodal_free);
    assert!(r.max_multiplicity <= 4);
}

#[test]
fn north_pole_only_in_the_capped_band() {
    for h in 2..=5 {
        let c = lifted_cap_cover(h, 0.05).unwrap();
        let mut pole = vec![0.0; h + 1];
        pole[h] = 1.0;
        let pole = SpherePoint::new(pole).unwrap();
        assert_eq!(c.members(&pole).unwrap(), vec![c.sets.len() - 2]);
    }
}

#[test]
fn nerves() {
    let s1 = empirical_nerve(&cap_cover(1).unwrap(), &sample_sphere(1, PAIRS, SEED).unwrap()).unwrap();
    assert_eq!((s1.n_vertices, s1.face_counts(), s1.dimension), (3, vec![3, 3], Some(1)));

    let s2 = empirical_nerve(&cap_cover(2).unwrap(), &sample_sphere(2, PAIRS, SEED).unwrap()).unwrap();
    assert_eq!((s2.n_vertices, s2.dimension), (4, Some(2)));
    assert_eq!(s2.face_counts(), vec![4, 6, 4]);

    let lifted = lift_cover(&cap_cover(1).unwrap(), 0.05).unwrap();
    let samples = sample_sphere(2, PAIRS, SEED).unwrap();
    let n = empirical_nerve(&lifted, &samples).unwrap();
    let r = verify_cover(&lifted, &samples).unwrap();
    assert_eq!(n.n_vertices, 4);
    assert!(n.dimension.unwrap() <= 2);
    assert_eq!(n.dimension.unwrap() + 1, r.max_multiplicity);
}

#[test]
fn nerve_is_downward_closed() {
    let c = lifted_cap_cover(3, 0.05).unwrap();
    let n = empirical_nerve(&c, &sample_sphere(3, 20_000, 5).unwrap()).unwrap();
    for faces in n.faces.iter().skip(1) {
        for f in faces {
            for skip in 0..f.len() {
                let sub: Vec<usize> = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                assert!(n.contains(&sub), "{sub:?} missing below {f:?}");
            }
        }
    }
}

#[test]
fn battery_has_levels_and_poles() {
    let b = structured_battery(3);
    // 4 poles; levels 1..3 contribute 3+3, 4+6, 5+10 points.
    assert_eq!(b.len(), 4 + 6 + 10 + 15);
    let s = sample_sphere(3, 10, 0).unwrap();
    assert_eq!(&s.points[..s.battery], b.as_slice());
}

#[test]
fn external_cover_file_is_verifiable() {
    // Hand-written cover of the circle by three open arcs of 150 degrees.
    let text = r#"{
        "sphere_dim": 1,
        "sets": [
            {"kind": "cap", "normal": [1.0, 0.0], "threshold": -0.25881904510252074},
            {"kind": "cap", "normal": [-0.5, 0.8660254037844386], "threshold": -0.25881904510252074},
            {"kind": "union", "parts": [
                {"kind": "cap", "normal": [-0.5, -0.8660254037844386], "threshold": -0.25881904510252074}
            ]}
        ]
    }"#;
    let c = Cover::from_json(text).unwrap();
    let r = verify_cover(&c, &sample_sphere(1, 20_000, SEED).unwrap()).unwrap();
    // Centers 120 degrees apart with half-width 75: adjacent arcs overlap, no three meet.
    assert!(r.antipodal_free && r.covered);
    assert_eq!(r.max_multiplicity, 2);
}
