use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use theta2kit_core::msset::{
    colimit, delta_map, product, standard_simplex, validate_msset, Diagram, MarkedSSet, SimplexRef, SimplexVariant,
};
use theta2kit_core::nerves::{duskin_nerve, rs_nerve, scaled_nerve};
use theta2kit_core::suspension::suspend_marked;
use theta2kit_core::theta::{apply_l_map, elementary_cofibration, CofibrationKind};
use theta2kit_core::twocat::{free_iso, ordinal, suspend_category, theta2_object, Fin2Category, Theta2Shape};

use super::{Check, SuiteOptions};
use crate::formats::{Document, MSSetDoc, MapDoc, ThetaDoc, TwoCatDoc};
use crate::Result;

const BOUND: usize = 4;

fn random_variant(rng: &mut ChaCha8Rng, ell: usize) -> SimplexVariant {
    match rng.gen_range(0..6) {
        0 => SimplexVariant::Flat,
        1 => SimplexVariant::Sharp,
        2 if ell > 0 => SimplexVariant::Boundary,
        3 => SimplexVariant::Horn(rng.gen_range(0..=ell)),
        4 if ell == 1 => SimplexVariant::EdgeMarked,
        5 if ell == 3 => SimplexVariant::Eq3,
        _ => SimplexVariant::Flat,
    }
}

/// A strictly increasing map `[d] -> [n]`.
fn random_face(rng: &mut ChaCha8Rng, d: usize, n: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..=n).collect();
    while all.len() > d + 1 {
        all.remove(rng.gen_range(0..all.len()));
    }
    all
}

/// A random marked simplicial set from the constructors: standard simplices,
/// nerves, products, gluings, collapses and suspensions.
pub fn random_set(rng: &mut ChaCha8Rng) -> Result<(String, MarkedSSet)> {
    Ok(match rng.gen_range(0..7) {
        0 => {
            let ell = rng.gen_range(0..=3);
            let v = random_variant(rng, ell);
            (format!("Δ[{ell}] {v:?}"), standard_simplex(ell, v, BOUND)?)
        }
        1 => {
            let ks: Vec<usize> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..=1)).collect();
            let shape = Theta2Shape::from_ks(ks);
            let d = theta2_object(&shape)?;
            match rng.gen_range(0..3) {
                0 => (format!("N^RS{shape}"), rs_nerve(&d, BOUND)?),
                1 => (format!("N{shape}"), duskin_nerve(&d, BOUND)?),
                _ => (format!("N^sc{shape}"), scaled_nerve(&d, BOUND)?),
            }
        }
        2 => {
            let (p, q) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
            let (vp, vq) = (random_variant(rng, p), random_variant(rng, q));
            let x = standard_simplex(p, vp, BOUND)?;
            let y = standard_simplex(q, vq, BOUND)?;
            (format!("Δ[{p}] {vp:?} × Δ[{q}] {vq:?}"), product(&x, &y))
        }
        3 => {
            let (p, q) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let d = rng.gen_range(0..p.min(q));
            let (a, b) = (random_face(rng, d, p), random_face(rng, d, q));
            let face = standard_simplex(d, SimplexVariant::Flat, BOUND)?;
            let x = standard_simplex(p, SimplexVariant::Sharp, BOUND)?;
            let y = standard_simplex(q, SimplexVariant::Flat, BOUND)?;
            let fa = delta_map(&a, &face, &x)?;
            let fb = delta_map(&b, &face, &y)?;
            (format!("Δ[{p}]♯ ⊔ Δ[{q}] along {a:?} ~ {b:?}"), colimit(&Diagram::span(face, x, y, fa, fb))?.set)
        }
        4 => {
            let ell = rng.gen_range(1..=3);
            let e = random_face(rng, 1, ell);
            let edge = standard_simplex(1, SimplexVariant::Flat, BOUND)?;
            let point = standard_simplex(0, SimplexVariant::Flat, BOUND)?;
            let x = standard_simplex(ell, SimplexVariant::Flat, BOUND)?;
            let collapse = delta_map(&[0, 0], &edge, &point)?;
            let inclusion = delta_map(&e, &edge, &x)?;
            (format!("Δ[{ell}] / {e:?}"), colimit(&Diagram::span(edge, point, x, collapse, inclusion))?.set)
        }
        5 => {
            let ell = rng.gen_range(0..=2);
            let v = random_variant(rng, ell);
            (format!("Σ Δ[{ell}] {v:?}"), suspend_marked(&standard_simplex(ell, v, BOUND)?, BOUND)?)
        }
        _ => {
            if rng.gen_bool(0.5) {
                let k = rng.gen_range(0..=2);
                (format!("N^RS Σ[{k}]"), rs_nerve(&suspend_category(&ordinal(k)?), BOUND)?)
            } else {
                ("N^RS 𝕀".into(), rs_nerve(&Fin2Category::from_category(&free_iso()), BOUND)?)
            }
        }
    })
}

fn random_monotone(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..=m).map(|_| rng.gen_range(0..=n)).collect();
    v.sort_unstable();
    v
}

/// Checks `(s·α)·β = s·(α∘β)` and the normal form of `s` on random data.
fn functoriality(rng: &mut ChaCha8Rng, x: &MarkedSSet) -> Option<String> {
    for _ in 0..20 {
        let n = rng.gen_range(0..=3usize);
        let all = x.simplices(n);
        if all.is_empty() {
            continue;
        }
        let s = &all[rng.gen_range(0..all.len())];
        if x.degenerate(&SimplexRef::generator(s.gen), &s.word) != *s {
            return Some(format!("normal form of {}", x.simplex_name(s)));
        }
        let m = rng.gen_range(0..=3usize);
        let p = rng.gen_range(0..=3usize);
        let alpha = random_monotone(rng, m, n);
        let beta = random_monotone(rng, p, m);
        let composite: Vec<usize> = beta.iter().map(|&b| alpha[b]).collect();
        if x.apply(&x.apply(s, &alpha), &beta) != x.apply(s, &composite) {
            return Some(format!("{} · {alpha:?} · {beta:?}", x.simplex_name(s)));
        }
    }
    None
}

pub(super) fn simplicial_identities(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut identity_failures = Vec::new();
    let mut functor_failures = Vec::new();
    for case in 0..opts.fuzz {
        let (name, x) = random_set(&mut rng)?;
        let report = validate_msset(&x);
        if !report.passed() {
            identity_failures.push(format!("case {case} ({name}): {}", report.violations[0].law));
        }
        if let Some(w) = functoriality(&mut rng, &x) {
            functor_failures.push(format!("case {case} ({name}): {w}"));
        }
    }
    Ok(vec![
        Check::new(
            format!("simplicial identities on {} random sets (seed {})", opts.fuzz, opts.seed),
            identity_failures.is_empty(),
            || identity_failures.join("; "),
        ),
        Check::new(
            format!("simplicial operators compose on {} random sets (seed {})", opts.fuzz, opts.seed),
            functor_failures.is_empty(),
            || functor_failures.join("; "),
        ),
    ])
}

/// Every simplex up to dimension 3 is its generator degenerated by its
/// word, and `d_j s_j t = d_{j+1} s_j t = t`.
fn ez_round_trip(x: &MarkedSSet) -> Option<String> {
    for n in 0..=3.min(x.bound()) {
        for s in x.simplices(n) {
            if x.degenerate(&SimplexRef::generator(s.gen), &s.word) != s {
                return Some(x.simplex_name(&s));
            }
            for j in 0..=n {
                let t = x.degeneracy(&s, j);
                if x.face(&t, j) != s || x.face(&t, j + 1) != s {
                    return Some(format!("s_{j} {}", x.simplex_name(&s)));
                }
            }
        }
    }
    None
}

fn json_round_trip(doc: Document) -> Result<bool> {
    let text = doc.to_pretty();
    let again = Document::parse(&text)?;
    Ok(again == doc && again.to_pretty() == text && again.round_trip()?)
}

pub(super) fn infrastructure(_: &SuiteOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let samples = [
        ("N^RS[1|1]", rs_nerve(&theta2_object(&"[1|1]".parse()?)?, BOUND)?),
        ("Δ[3]", standard_simplex(3, SimplexVariant::Flat, BOUND)?),
        ("Δ[2] × Δ[1]", product(&standard_simplex(2, SimplexVariant::Flat, BOUND)?, &standard_simplex(1, SimplexVariant::Sharp, BOUND)?)),
        ("N^RS 𝕀", rs_nerve(&Fin2Category::from_category(&free_iso()), BOUND)?),
    ];
    for (name, x) in &samples {
        let w = ez_round_trip(x);
        checks.push(Check::new(format!("normal forms round-trip in {name}"), w.is_none(), || w.clone().unwrap_or_default()));
    }

    let edge = standard_simplex(1, SimplexVariant::Flat, BOUND)?;
    let square = product(&edge, &edge);
    checks.push(Check::new("Δ[1] × Δ[1] has counts (4, 5, 2)", square.counts()[..3] == [4, 5, 2], || {
        format!("{:?}", square.counts())
    }));
    let sharp = edge.sharp();
    let sq = product(&sharp, &sharp);
    checks.push(Check::new("Δ[1]♯ × Δ[1]♯ marks every positive simplex", sq.marked_counts()[..3] == [0, 5, 2], || {
        format!("{:?}", sq.marked_counts())
    }));

    let mut cats: Vec<Fin2Category> = Theta2Shape::grid(2, 1).iter().map(theta2_object).collect::<Result<_, _>>()?;
    cats.push(suspend_category(&ordinal(2)?));
    cats.push(Fin2Category::from_category(&free_iso()));
    let twocat_ok = cats.iter().all(|d| {
        let doc = TwoCatDoc::from_category(d);
        doc.to_category().ok().as_ref() == Some(d) && json_round_trip(Document::TwoCat(doc)).unwrap_or(false)
    });
    checks.push(Check::new("twocat/1 round-trips", twocat_ok, || "a 2-category changed".into()));

    let msset_ok = samples.iter().all(|(_, x)| {
        let doc = MSSetDoc::from_set(x);
        doc.to_set().ok().as_ref() == Some(x) && json_round_trip(Document::MSSet(doc)).unwrap_or(false)
    });
    checks.push(Check::new("msset/1 round-trips", msset_ok, || "a marked simplicial set changed".into()));

    let mut theta_ok = true;
    let mut map_ok = true;
    for kind in [CofibrationKind::VerticalSegal(2), CofibrationKind::HorizontalCompleteness] {
        let f = elementary_cofibration(&kind)?;
        for w in [&f.source, &f.target] {
            let doc = ThetaDoc::from_presentation(w);
            theta_ok &= doc.to_presentation().ok().as_ref() == Some(w) && json_round_trip(Document::Theta(doc))?;
        }
        let l = apply_l_map(&f, BOUND)?;
        let (s, t) = (MSSetDoc::from_set(l.source.set()), MSSetDoc::from_set(l.target.set()));
        let doc = MapDoc::from_map(&l.map, &s, &t);
        map_ok &= doc.to_map(&s, &t).ok().as_ref() == Some(&l.map) && json_round_trip(Document::Map(doc.clone()))?;
        // a map must refuse endpoints other than the pinned ones
        map_ok &= doc.to_map(&t, &s).is_err();
    }
    checks.push(Check::new("theta/1 round-trips", theta_ok, || "a presentation changed".into()));
    checks.push(Check::new("msset-map/1 round-trips and pins its endpoints", map_ok, || "a map changed".into()));
    Ok(checks)
}
