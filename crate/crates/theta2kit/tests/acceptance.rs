//! One line per acceptance criterion. Every criterion runs its verification
//! suite and, next to it, recomputes a few headline numbers from closed
//! forms written out here, so a suite that checks the wrong thing cannot
//! pass on its own.

use std::io::Write;
use std::time::{Duration, Instant};

use theta2kit::core::msset::{is_mono, product, standard_simplex, SimplexVariant};
use theta2kit::core::nerves::rs_nerve;
use theta2kit::core::suspension::suspend_marked;
use theta2kit::core::theta::{apply_l, apply_l_map, d_restriction, elementary_cofibration, CofibrationKind, Theta2Presentation};
use theta2kit::core::twocat::{cell, ordinal, Fin2Category, Theta2Shape};
use theta2kit::suites::{self, SuiteOptions};

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// Weakly increasing sequences `a_0 ≤ … ≤ a_i` in `0..=m`.
fn monotone_sequences(i: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..=m).map(|a| vec![a]).collect();
    for _ in 0..i {
        out = out
            .into_iter()
            .flat_map(|s| {
                let last = *s.last().unwrap();
                (last..=m).map(move |a| {
                    let mut t = s.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

/// `|Hom([i|j,…,j], [m|k])|`: a monotone map on objects, then for each of
/// the `i` columns a `j`-simplex of a product of chains `[k_s]`, and a
/// chain `[k]` has `C(k+j+1, j+1)` monotone maps from `[j]`.
fn hom_count(theta: &Theta2Shape, i: usize, j: usize) -> u64 {
    let ks = theta.ks();
    monotone_sequences(i, theta.m())
        .iter()
        .map(|a| {
            a.windows(2)
                .flat_map(|w| w[0]..w[1])
                .map(|s| binomial(ks[s] as u64 + j as u64 + 1, j as u64 + 1))
                .product::<u64>()
        })
        .sum()
}

/// Nonidentity 1-cells of `[m|k]`: for `a < b` the product of `k_s + 1`.
fn nonidentity_1cells(theta: &Theta2Shape) -> usize {
    let ks = theta.ks();
    let m = theta.m();
    (0..m)
        .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
        .map(|(a, b)| ks[a..b].iter().map(|k| k + 1).product::<usize>())
        .sum()
}

fn suite_passes(name: &str, opts: &SuiteOptions) -> Result<(), String> {
    let reports = suites::run(name, opts).ok_or("unknown suite")?.map_err(|e| e.to_string())?;
    match reports.iter().flat_map(|r| &r.checks).find(|c| !c.passed) {
        None => Ok(()),
        Some(c) => Err(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())),
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn criterion_1() -> Result<(), String> {
    suite_passes("eq3-pushout", &SuiteOptions::default())?;
    // Δ[3]_eq: every simplex of dimension ≥ 2 marked, plus the edges 02, 13
    let eq = standard_simplex(3, SimplexVariant::Eq3, 4).map_err(|e| e.to_string())?;
    ensure(eq.counts()[..4] == [4, 6, 4, 1], || format!("Δ[3]_eq counts {:?}", eq.counts()))?;
    ensure(eq.marked_counts()[..4] == [0, 2, 4, 1], || format!("Δ[3]_eq marked {:?}", eq.marked_counts()))
}

fn criterion_2() -> Result<(), String> {
    let opts = SuiteOptions { max_m: 3, max_k: 2, max_i: 3, max_j: 3, ..SuiteOptions::default() };
    suite_passes("hom-bijection", &opts)?;
    for theta in Theta2Shape::grid(3, 2) {
        for i in 0..=3 {
            for j in 0..=3 {
                let (enumerated, fibered) = d_restriction(&theta, i, j).map_err(|e| e.to_string())?;
                let expected = hom_count(&theta, i, j);
                ensure(enumerated == expected && fibered == expected, || {
                    format!("{theta} i={i} j={j}: {enumerated}/{fibered}, closed form {expected}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Result<(), String> {
    suite_passes("l-representables", &SuiteOptions::default())?;
    for theta in Theta2Shape::grid(2, 2) {
        let l = apply_l(&Theta2Presentation::representable(theta.clone(), 0), 4).map_err(|e| e.to_string())?;
        let c = l.set().counts();
        ensure(c[0] == theta.m() + 1 && c[1] == nonidentity_1cells(&theta), || {
            format!("L(Θ₂{theta}) has counts {c:?}")
        })?;
    }
    Ok(())
}

fn criterion_4() -> Result<(), String> {
    suite_passes("cofibrations", &SuiteOptions::default())?;
    // a vertical Segal map is a bijection on 1-generators: k+1 parallel 1-cells
    for k in 0..=3 {
        let l = apply_l_map(&elementary_cofibration(&CofibrationKind::VerticalSegal(k)).map_err(|e| e.to_string())?, 4)
            .map_err(|e| e.to_string())?;
        ensure(is_mono(&l.map, l.source.set()), || format!("vertical Segal {k} not mono"))?;
        ensure(l.source.set().counts()[1] == k + 1 && l.target.set().counts()[1] == k + 1, || {
            format!("vertical Segal {k}: 1-generators {:?} → {:?}", l.source.set().counts(), l.target.set().counts())
        })?;
    }
    Ok(())
}

fn criterion_5() -> Result<(), String> {
    suite_passes("suspension-laws", &SuiteOptions::default())?;
    // ΣΔ[ℓ] has two vertices and C(ℓ+1, n) nondegenerate n-simplices for n ≥ 1
    for ell in 0..=3usize {
        let x = standard_simplex(ell, SimplexVariant::Flat, 4).map_err(|e| e.to_string())?;
        let s = suspend_marked(&x, 5).map_err(|e| e.to_string())?;
        let c = s.counts();
        let expected: Vec<usize> =
            (0..c.len()).map(|n| if n == 0 { 2 } else { binomial(ell as u64 + 1, n as u64) as usize }).collect();
        ensure(c == expected, || format!("ΣΔ[{ell}] counts {c:?}, expected {expected:?}"))?;
    }
    Ok(())
}

fn criterion_6() -> Result<(), String> {
    suite_passes("comparison", &SuiteOptions::default())
}

fn criterion_7() -> Result<(), String> {
    suite_passes("nerve-structure", &SuiteOptions::default())?;
    // the nerve of [k] has C(k+1, n+1) nondegenerate n-simplices
    for k in 0..=3usize {
        let n = rs_nerve(&Fin2Category::from_category(&ordinal(k as isize).map_err(|e| e.to_string())?), 5)
            .map_err(|e| e.to_string())?;
        for (dim, &c) in n.counts().iter().enumerate() {
            let expected = binomial(k as u64 + 1, dim as u64 + 1) as usize;
            ensure(c == expected, || format!("N[{k}] has {c} generators in dimension {dim}, expected {expected}"))?;
        }
    }
    let c2 = rs_nerve(&cell(2).map_err(|e| e.to_string())?, 4).map_err(|e| e.to_string())?;
    let unmarked = c2.counts()[2] - c2.marked_counts()[2];
    ensure(unmarked == 2, || format!("N(C₂) has {unmarked} unmarked 2-generators"))
}

fn criterion_8() -> Result<(), String> {
    suite_passes("simplicial-identities", &SuiteOptions { fuzz: 200, seed: 0, ..SuiteOptions::default() })?;
    suite_passes("infrastructure", &SuiteOptions::default())?;
    let edge = standard_simplex(1, SimplexVariant::Flat, 3).map_err(|e| e.to_string())?;
    let square = product(&edge, &edge);
    ensure(square.counts()[..3] == [4, 5, 2], || format!("Δ[1]×Δ[1] counts {:?}", square.counts()))
}

/// Writes straight to stderr so the line shows up even when the harness
/// captures the output of passing tests.
fn report(line: String) {
    let _ = writeln!(std::io::stderr(), "{line}");
}

type Criterion = fn() -> Result<(), String>;

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion, Duration); 8] = [
        ("Δ[3]_eq pushout", criterion_1, Duration::from_secs(1)),
        ("hom bijection grid", criterion_2, Duration::from_secs(300)),
        ("L on representables", criterion_3, Duration::from_secs(60)),
        ("elementary cofibration images", criterion_4, Duration::from_secs(120)),
        ("suspension laws", criterion_5, Duration::from_secs(60)),
        ("comparison map", criterion_6, Duration::from_secs(60)),
        ("nerve structure", criterion_7, Duration::from_secs(120)),
        ("infrastructure properties", criterion_8, Duration::from_secs(60)),
    ];
    let mut failed = Vec::new();
    for (n, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= *budget, || format!("took {elapsed:.2?}, budget {budget:?}"))
        });
        match &outcome {
            Ok(()) => report(format!("criterion {}: PASS {name} ({elapsed:.2?})", n + 1)),
            Err(why) => {
                report(format!("criterion {}: FAIL {name} ({elapsed:.2?}): {why}", n + 1));
                failed.push(n + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
