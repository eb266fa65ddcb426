use theta2kit_core::theta::d_restriction;
use theta2kit_core::twocat::*;

/// Two composable parallel pairs `f, g : x -> y` and `h, k : y -> z` with
/// 2-cells `α : f => g` and `β : h => k`. The hom `x -> z` is the square of
/// whiskerings; when `honest` is false its two diagonals are kept apart, so
/// the interchange law fails exactly at `(id f, α, β, id k)`.
fn whiskered_square(honest: bool) -> Fin2Category {
    let mut b = Fin2Builder::new();
    let (x, y, z) = (b.object("x"), b.object("y"), b.object("z"));
    let f = b.cell1("f", x, y);
    let g = b.cell1("g", x, y);
    let h = b.cell1("h", y, z);
    let k = b.cell1("k", y, z);
    let fh = b.cell1("fh", x, z);
    let fk = b.cell1("fk", x, z);
    let gh = b.cell1("gh", x, z);
    let gk = b.cell1("gk", x, z);
    b.auto_identities1();
    b.auto_identities2();
    for (p, q, r) in [(f, h, fh), (f, k, fk), (g, h, gh), (g, k, gk)] {
        b.set_hcomp1(p, q, r);
    }
    let alpha = b.cell2("α", f, g);
    let beta = b.cell2("β", h, k);
    let a_h = b.cell2("αh", fh, gh);
    let a_k = b.cell2("αk", fk, gk);
    let f_b = b.cell2("fβ", fh, fk);
    let g_b = b.cell2("gβ", gh, gk);
    let lower = b.cell2("αh;gβ", fh, gk);
    let upper = if honest { lower } else { b.cell2("fβ;αk", fh, gk) };
    b.set_vcomp(a_h, g_b, lower);
    b.set_vcomp(f_b, a_k, upper);
    b.fill_units();
    b.fill_identity_hcomp2();
    let built = b.clone().build().unwrap();
    let id = |c: usize| built.id2(c);
    b.set_hcomp2(alpha, id(h), a_h);
    b.set_hcomp2(alpha, id(k), a_k);
    b.set_hcomp2(id(f), beta, f_b);
    b.set_hcomp2(id(g), beta, g_b);
    b.set_hcomp2(alpha, beta, lower);
    b.build().unwrap()
}

#[test]
fn interchange_violation_is_reported_with_its_witness() {
    let honest = whiskered_square(true);
    let report = validate_2cat(&honest);
    assert!(report.passed(), "{report}");

    let broken = whiskered_square(false);
    let report = validate_2cat(&broken);
    assert!(report.mentions("interchange"));
    let witness = report
        .violations
        .iter()
        .find(|v| v.law == "interchange" && v.witness == "(id(f), α, β, id(k))");
    assert!(witness.is_some(), "{report}");
    // every other law still holds
    assert!(report.violations.iter().all(|v| v.law == "interchange"));
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `N_j` of the hom poset `[k_{a+1}] × … × [k_b]`, or a point when `a = b`:
/// monotone maps `[j] -> [k]` number `C(k + j + 1, j + 1)`.
fn hom_chains(ks: &[usize], a: usize, b: usize, j: usize) -> u64 {
    ks[a..b].iter().map(|&k| binomial((k + j + 1) as u64, (j + 1) as u64)).product()
}

/// Chains of objects `a₀ ≤ … ≤ aᵢ` weighted by the hom chain counts.
fn fiber_product(ks: &[usize], i: usize, j: usize) -> u64 {
    let n = ks.len() + 1;
    let mut paths = vec![1u64; n];
    for _ in 0..i {
        paths = (0..n).map(|c| (0..=c).map(|a| paths[a] * hom_chains(ks, a, c, j)).sum()).collect();
    }
    paths.iter().sum()
}

#[test]
fn diagonal_homs_match_the_binomial_oracle() {
    for theta in Theta2Shape::grid(2, 2) {
        for i in 0..=2 {
            for j in 0..=2 {
                let (enumerated, fibered) = d_restriction(&theta, i, j).unwrap();
                let oracle = fiber_product(theta.ks(), i, j);
                assert_eq!((enumerated, fibered), (oracle, oracle), "{theta} i={i} j={j}");
            }
        }
    }
}

#[test]
fn one_column_homs_are_chains_of_the_hom_poset() {
    // for i = 1 the count is N_j of the whole underlying hom union
    for theta in ["[1|2]", "[2|1,1]", "[3|0,1,2]"] {
        let theta: Theta2Shape = theta.parse().unwrap();
        let (count, _) = d_restriction(&theta, 1, 2).unwrap();
        let m = theta.m();
        let oracle: u64 = (0..=m).flat_map(|a| (a..=m).map(move |b| (a, b))).map(|(a, b)| hom_chains(theta.ks(), a, b, 2)).sum();
        assert_eq!(count, oracle, "{theta}");
    }
}

#[test]
fn functors_compose_and_identities_are_neutral() {
    let d = theta2_object(&"[2|1,0]".parse().unwrap()).unwrap();
    let e = theta2_object(&"[1|1]".parse().unwrap()).unwrap();
    let fs = enumerate_two_functors(&d, &e, SearchLimits::default()).unwrap();
    let gs = enumerate_two_functors(&e, &e, SearchLimits::default()).unwrap();
    for f in &fs {
        assert_eq!(f.then(&TwoFunctor::identity(&e)), *f);
        for g in &gs {
            assert!(validate_two_functor(&f.then(g), &d, &e).passed());
        }
    }
}

#[test]
fn suspension_of_an_ordinal_is_a_column_shape() {
    for k in 0..=3 {
        let sigma = suspend_category(&ordinal(k as isize).unwrap());
        let column = theta2_object(&Theta2Shape::from_ks(vec![k])).unwrap();
        assert!(validate_2cat(&sigma).passed());
        let iso = find_iso_2cat(&sigma, &column, SearchLimits::default()).unwrap();
        assert!(iso.is_some(), "Σ[{k}]");
    }
}
