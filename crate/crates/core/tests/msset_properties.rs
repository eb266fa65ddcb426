use proptest::prelude::*;
use theta2kit_core::msset::*;
use theta2kit_core::nerves::rs_nerve;
use theta2kit_core::suspension::suspend_marked;
use theta2kit_core::twocat::{theta2_object, Theta2Shape};

const BOUND: usize = 4;

fn variant(ell: usize, v: usize) -> SimplexVariant {
    match v % 6 {
        0 => SimplexVariant::Flat,
        1 => SimplexVariant::Sharp,
        2 if ell > 0 => SimplexVariant::Boundary,
        3 => SimplexVariant::Horn(v % (ell + 1)),
        4 if ell == 1 => SimplexVariant::EdgeMarked,
        5 if ell == 3 => SimplexVariant::Eq3,
        _ => SimplexVariant::Flat,
    }
}

fn simplex(ell: usize, v: usize) -> MarkedSSet {
    standard_simplex(ell, variant(ell, v), BOUND).unwrap()
}

/// A variant containing every face of `Δ[ℓ]`.
fn full_simplex(ell: usize, v: usize) -> MarkedSSet {
    let variant = match v % 4 {
        1 => SimplexVariant::Sharp,
        2 if ell == 1 => SimplexVariant::EdgeMarked,
        3 if ell == 3 => SimplexVariant::Eq3,
        _ => SimplexVariant::Flat,
    };
    standard_simplex(ell, variant, BOUND).unwrap()
}

/// Two copies of `Δ[ℓ]` glued along the faces opposite `i` and `j`.
fn glued(ell: usize, i: usize, j: usize, v: usize) -> Colimit {
    let ell = ell.max(1);
    let face = standard_simplex(ell - 1, SimplexVariant::Flat, BOUND).unwrap();
    let x = full_simplex(ell, v);
    let a = delta_map(&coface(ell, i % (ell + 1)), &face, &x).unwrap();
    let b = delta_map(&coface(ell, j % (ell + 1)), &face, &x).unwrap();
    colimit(&Diagram::span(face, x.clone(), x, a, b)).unwrap()
}

/// `Δ[ℓ]` with its edge `i < j` collapsed to a point.
fn collapsed(ell: usize, i: usize, j: usize, v: usize) -> Colimit {
    let ell = ell.max(1);
    let i = i % ell;
    let j = i + 1 + j % (ell - i);
    let edge = standard_simplex(1, SimplexVariant::Flat, BOUND).unwrap();
    let point = standard_simplex(0, SimplexVariant::Flat, BOUND).unwrap();
    let x = full_simplex(ell, v);
    let to_point = delta_map(&[0, 0], &edge, &point).unwrap();
    let inclusion = delta_map(&[i, j], &edge, &x).unwrap();
    colimit(&Diagram::span(edge, point, x, to_point, inclusion)).unwrap()
}

fn build(kind: usize, ell: usize, i: usize, j: usize, v: usize) -> MarkedSSet {
    match kind % 6 {
        0 => simplex(ell, v),
        1 => {
            let shape = Theta2Shape::from_ks((0..ell % 3).map(|t| (v >> t) & 1).collect());
            rs_nerve(&theta2_object(&shape).unwrap(), BOUND).unwrap()
        }
        2 => product(&simplex(ell % 3, v), &simplex(i % 3, j)),
        3 => collapsed(ell, i, j, v).set,
        4 => glued(ell, i, j, v).set,
        _ => suspend_marked(&simplex(ell.min(2), v), BOUND).unwrap(),
    }
}

fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return (0..=n).map(|v| vec![v]).collect();
    }
    monotone_maps(m - 1, n)
        .into_iter()
        .flat_map(|a| {
            let last = *a.last().unwrap();
            (last..=n).map(move |v| {
                let mut b = a.clone();
                b.push(v);
                b
            })
        })
        .collect()
}

fn constructor() -> impl Strategy<Value = (usize, usize, usize, usize, usize)> {
    (0usize..6, 0usize..4, 0usize..4, 0usize..4, 0usize..64)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn constructors_satisfy_the_simplicial_identities((kind, ell, i, j, v) in constructor()) {
        let x = build(kind, ell, i, j, v);
        let report = validate_msset(&x);
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn normal_forms_round_trip((kind, ell, i, j, v) in constructor()) {
        let x = build(kind, ell, i, j, v);
        for n in 0..=2 {
            for s in x.simplices(n) {
                prop_assert_eq!(&x.degenerate(&SimplexRef::generator(s.gen), &s.word), &s);
                let identity: Vec<usize> = (0..=n).collect();
                prop_assert_eq!(&x.apply(&s, &identity), &s);
                let verts = x.vertices(&s);
                for m in 0..=2 {
                    for alpha in monotone_maps(m, n) {
                        let t = x.apply(&s, &alpha);
                        let expected: Vec<usize> = alpha.iter().map(|&a| verts[a]).collect();
                        prop_assert_eq!(x.vertices(&t), expected);
                        for beta in monotone_maps(1, m) {
                            let composite: Vec<usize> = beta.iter().map(|&b| alpha[b]).collect();
                            prop_assert_eq!(x.apply(&t, &beta), x.apply(&s, &composite));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn truncation_is_stable((kind, ell, i, j, v) in constructor(), a in 0usize..=BOUND, b in 0usize..=BOUND) {
        let x = build(kind, ell, i, j, v);
        let (lo, hi) = (a.min(b), a.max(b));
        prop_assert_eq!(x.truncate(hi).truncate(lo), x.truncate(lo));
        prop_assert_eq!(&x.truncate(lo).counts()[..], &x.counts()[..=lo]);
        prop_assert!(validate_msset(&x.truncate(lo)).passed());
    }

    #[test]
    fn product_marking_is_componentwise(p in 0usize..3, q in 0usize..3, u in 0usize..64, w in 0usize..64) {
        let (x, y) = (simplex(p, u), simplex(q, w));
        let prod = Product::new(&x, &y);
        prop_assert!(validate_msset(&prod.set).passed());
        prop_assert!(validate_map(&prod.pr1(), &prod.set, &x).passed());
        prop_assert!(validate_map(&prod.pr2(), &prod.set, &y).passed());
        for g in prod.set.all_gen_ids() {
            let (a, b) = prod.components(g);
            prop_assert_eq!(prod.set.generator(g).marked, g.dim > 0 && x.is_marked(a) && y.is_marked(b));
        }
    }

    #[test]
    fn colimit_marking_is_the_image_of_the_node_markings(ell in 1usize..4, i in 0usize..4, j in 0usize..4, v in 0usize..64, glue in any::<bool>()) {
        let c = if glue { glued(ell, i, j, v) } else { collapsed(ell, i, j, v) };
        let ell = ell.max(1);
        let nodes: Vec<MarkedSSet> = if glue {
            vec![standard_simplex(ell - 1, SimplexVariant::Flat, BOUND).unwrap(), full_simplex(ell, v), full_simplex(ell, v)]
        } else {
            vec![
                standard_simplex(1, SimplexVariant::Flat, BOUND).unwrap(),
                standard_simplex(0, SimplexVariant::Flat, BOUND).unwrap(),
                full_simplex(ell, v),
            ]
        };
        // brute force: a colimit generator is marked iff some node generator
        // lands on it and is marked
        let mut hit = vec![Vec::new(); BOUND + 1];
        for n in 0..=BOUND {
            hit[n] = vec![false; c.set.gens(n).len()];
        }
        for (node, x) in nodes.iter().enumerate() {
            prop_assert!(validate_map(&c.legs[node], x, &c.set).passed());
            for g in x.all_gen_ids() {
                let img = c.legs[node].image(g);
                if x.generator(g).marked && !img.is_degenerate() {
                    hit[img.gen.dim][img.gen.index] = true;
                }
            }
        }
        for g in c.set.all_gen_ids() {
            prop_assert_eq!(c.set.generator(g).marked, hit[g.dim][g.index], "{:?}", g);
        }
    }
}

/// Strictly increasing chains of `n + 1` elements in the grid `[p] × [q]`.
fn grid_chains(p: usize, q: usize, n: usize) -> usize {
    fn go(p: usize, q: usize, a: usize, b: usize, left: usize) -> usize {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for c in a..=p {
            for d in b..=q {
                if (c, d) != (a, b) {
                    total += go(p, q, c, d, left - 1);
                }
            }
        }
        total
    }
    let mut total = 0;
    for a in 0..=p {
        for b in 0..=q {
            total += go(p, q, a, b, n);
        }
    }
    total
}

#[test]
fn products_of_simplices_are_nerves_of_grids() {
    for p in 0..=2 {
        for q in 0..=2 {
            let prod = product(&simplex(p, 0), &simplex(q, 0));
            let expected: Vec<usize> = (0..=BOUND).map(|n| grid_chains(p, q, n)).collect();
            assert_eq!(prod.counts(), expected, "Δ[{p}] × Δ[{q}]");
        }
    }
    assert_eq!(product(&simplex(1, 0), &simplex(1, 0)).counts()[..3], [4, 5, 2]);
}
