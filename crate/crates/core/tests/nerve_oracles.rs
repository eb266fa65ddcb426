use theta2kit_core::msset::*;
use theta2kit_core::nerves::*;
use theta2kit_core::twocat::*;

/// The classical nerve of the poset `[k]`, built directly: generators are
/// strictly increasing chains, faces delete one element, and everything of
/// dimension at least 2 is marked.
fn classical_nerve(k: usize, bound: usize) -> MarkedSSet {
    let mut x = MarkedSSet::new(bound);
    let mut chains: Vec<Vec<Vec<usize>>> = Vec::new();
    for n in 0..=bound.min(k) {
        let row = subsets(k + 1, n + 1);
        for c in &row {
            let faces: Vec<SimplexRef> = if n == 0 {
                Vec::new()
            } else {
                (0..=n)
                    .map(|i| {
                        let mut face = c.clone();
                        face.remove(i);
                        let index = chains[n - 1].iter().position(|d| *d == face).unwrap();
                        SimplexRef::generator(GenId::new(n - 1, index))
                    })
                    .collect()
            };
            let name: String = c.iter().map(|v| v.to_string()).collect();
            x.add_generator(name, n, faces, n >= 2).unwrap();
        }
        chains.push(row);
    }
    x
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn roberts_street_nerve_of_an_ordinal_is_the_classical_nerve() {
    for k in 0..=3 {
        let d = Fin2Category::from_category(&ordinal(k as isize).unwrap());
        let n = rs_nerve(&d, 4).unwrap();
        let oracle = classical_nerve(k, 4);
        assert!(validate_msset(&oracle).passed());
        let counts: Vec<usize> = (0..=4).map(|j| binomial(k + 1, j + 1)).collect();
        assert_eq!(n.counts(), counts, "[{k}]");
        assert!(find_iso(&n, &oracle).is_some(), "[{k}]");
    }
}

#[test]
fn nerve_of_the_walking_isomorphism() {
    let d = Fin2Category::from_category(&free_iso());
    let n = rs_nerve(&d, 4).unwrap();
    // nondegenerate simplices alternate between the two objects
    assert_eq!(n.counts(), vec![2, 2, 2, 2, 2]);
    assert_eq!(n.marked_counts(), vec![0, 0, 2, 2, 2]);
    let sc = scaled_nerve(&d, 4).unwrap();
    assert_eq!(sc.marked_counts(), vec![0, 0, 2, 0, 0]);
}

#[test]
fn the_free_two_cell_has_two_thin_free_triangles() {
    let c2 = cell(2).unwrap();
    let n = rs_nerve(&c2, 4).unwrap();
    assert_eq!(n.counts()[2], 2);
    assert_eq!(n.marked_counts()[2], 0);
    let duskin = duskin_nerve(&c2, 4).unwrap();
    assert_eq!(duskin.counts(), n.counts());
    assert!(duskin.marked_counts().iter().all(|&m| m == 0));
    let scaled = scaled_nerve(&c2, 4).unwrap();
    assert_eq!(scaled.marked_counts()[2], 0);
}

#[test]
fn roberts_street_marks_exactly_the_identity_triangles() {
    let d = theta2_object(&"[2|1,1]".parse().unwrap()).unwrap();
    let nerve = Nerve::new(&d, Marking::RobertsStreet, 3).unwrap();
    for g in nerve.set.gen_ids(2) {
        let s = nerve.simplex(g);
        assert_eq!(nerve.set.generator(g).marked, d.is_identity2(s.triangles[0]));
    }
    assert!(nerve.set.gen_ids(1).all(|g| !nerve.set.generator(g).marked));
    assert!(nerve.set.gen_ids(3).all(|g| nerve.set.generator(g).marked));
}

#[test]
fn small_nerves_are_three_coskeletal() {
    for shape in ["[1|1]", "[2|1,0]", "[1|2]"] {
        let d = theta2_object(&shape.parse().unwrap()).unwrap();
        let n = duskin_nerve(&d, 5).unwrap();
        for dim in 4..=5 {
            let report = check_coskeletal(&n, dim, SearchLimits::default()).unwrap();
            assert!(report.passed(), "{shape} dim {dim}: {report}");
        }
    }
}

#[test]
fn coskeletality_is_not_checked_above_the_bound() {
    let d = theta2_object(&"[1|1]".parse().unwrap()).unwrap();
    let n = duskin_nerve(&d, 3).unwrap();
    assert!(check_coskeletal(&n, 4, SearchLimits::default()).is_err());
}

#[test]
fn nerve_maps_are_functorial() {
    let shapes: Vec<Fin2Category> = ["[1|0]", "[1|1]", "[2|1,0]"]
        .iter()
        .map(|s| theta2_object(&s.parse().unwrap()).unwrap())
        .collect();
    let nerves: Vec<Nerve> = shapes.iter().map(|d| Nerve::new(d, Marking::RobertsStreet, 4).unwrap()).collect();
    let fs = enumerate_two_functors(&shapes[0], &shapes[1], SearchLimits::default()).unwrap();
    let gs = enumerate_two_functors(&shapes[1], &shapes[2], SearchLimits::default()).unwrap();
    for f in &fs {
        let nf = nerve_map(f, &nerves[0], &nerves[1]).unwrap();
        assert!(validate_map(&nf, &nerves[0].set, &nerves[1].set).passed());
        for g in &gs {
            let ng = nerve_map(g, &nerves[1], &nerves[2]).unwrap();
            let nfg = nerve_map(&f.then(g), &nerves[0], &nerves[2]).unwrap();
            assert_eq!(nf.then(&ng, &nerves[2].set), nfg);
        }
    }
}
