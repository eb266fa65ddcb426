use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::functor::TwoFunctor;
use super::two::Fin2Category;
use crate::{Error, Result};

/// Caps on a functor search. Exceeding either one is an error, never a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_results: usize,
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_results: 1_000_000,
            max_nodes: 500_000_000,
        }
    }
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
enum Kind {
    Id1,
    Id2,
    H1,
    V,
    H2,
}

/// One propagation step. Inputs and output are keys into the unified image
/// vector: objects first, then 1-cells, then 2-cells.
#[derive(Debug, Clone, Copy)]
struct Op {
    kind: Kind,
    a: u32,
    b: u32,
    r: u32,
    set: bool,
}

#[derive(Debug, Clone, Copy)]
enum Var {
    Object(usize),
    Cell1 { key: u32, src: u32, tgt: u32 },
    Cell2 { key: u32, src: u32, tgt: u32 },
}

/// A static search plan: a variable order and, per variable, the straight
/// line of propagation steps that becomes runnable once it is placed.
///
/// Every identity and composition of the domain appears in exactly one
/// schedule. When all variables are placed every image is set and every
/// relation has been checked, so each complete assignment is a 2-functor
/// provided the codomain is a valid 2-category.
struct Plan {
    n0: usize,
    n1: usize,
    vars: Vec<Var>,
    schedules: Vec<Vec<Op>>,
}

impl Plan {
    fn new(d: &Fin2Category) -> Result<Self> {
        let (n0, n1, n2) = (d.objects().len(), d.cells1().len(), d.cells2().len());
        let k1 = |f: usize| (n0 + f) as u32;
        let k2 = |a: usize| (n0 + n1 + a) as u32;
        let mut ops = Vec::new();
        for (x, &i) in d.identities1().iter().enumerate() {
            ops.push((Kind::Id1, x as u32, x as u32, k1(i)));
        }
        for (f, &i) in d.identities2().iter().enumerate() {
            ops.push((Kind::Id2, k1(f), k1(f), k2(i)));
        }
        for &(f, g, r) in d.hcomp1_triples() {
            ops.push((Kind::H1, k1(f), k1(g), k1(r)));
        }
        for &(a, b, r) in d.vcomp_triples() {
            ops.push((Kind::V, k2(a), k2(b), k2(r)));
        }
        for &(a, b, r) in d.hcomp2_triples() {
            ops.push((Kind::H2, k2(a), k2(b), k2(r)));
        }
        let total = n0 + n1 + n2;
        let mut waiting: Vec<Vec<usize>> = vec![Vec::new(); total];
        let mut missing: Vec<u8> = Vec::with_capacity(ops.len());
        for (i, &(_, a, b, _)) in ops.iter().enumerate() {
            waiting[a as usize].push(i);
            if b != a {
                waiting[b as usize].push(i);
                missing.push(2);
            } else {
                missing.push(1);
            }
        }

        let (gens1, gens2): (Vec<usize>, Vec<usize>) = match d.generators() {
            Some(g) => (g.cells1.clone(), g.cells2.clone()),
            None => (
                (0..n1).filter(|&f| d.identities1()[d.cells1()[f].src] != f).collect(),
                (0..n2).filter(|&a| !d.is_identity2(a)).collect(),
            ),
        };

        let mut known = vec![false; total];
        let mut placed1 = vec![false; gens1.len()];
        let mut placed2 = vec![false; gens2.len()];
        let mut next_object = 0;
        let mut vars = Vec::new();
        let mut schedules = Vec::new();
        loop {
            let ready2 = (0..gens2.len()).find(|&i| {
                let c = &d.cells2()[gens2[i]];
                !placed2[i] && known[k1(c.src) as usize] && known[k1(c.tgt) as usize]
            });
            let ready1 = || {
                (0..gens1.len()).find(|&i| {
                    let c = &d.cells1()[gens1[i]];
                    !placed1[i] && known[c.src] && known[c.tgt]
                })
            };
            let (var, key) = if let Some(i) = ready2 {
                placed2[i] = true;
                let c = &d.cells2()[gens2[i]];
                let key = k2(gens2[i]);
                (Var::Cell2 { key, src: k1(c.src), tgt: k1(c.tgt) }, key)
            } else if let Some(i) = ready1() {
                placed1[i] = true;
                let c = &d.cells1()[gens1[i]];
                let key = k1(gens1[i]);
                (Var::Cell1 { key, src: c.src as u32, tgt: c.tgt as u32 }, key)
            } else if next_object < n0 {
                next_object += 1;
                (Var::Object(next_object - 1), (next_object - 1) as u32)
            } else {
                break;
            };
            if known[key as usize] {
                // determined by earlier choices; its relations are already scheduled
                continue;
            }
            let mut schedule = Vec::new();
            let mut queue = VecDeque::from([key]);
            known[key as usize] = true;
            while let Some(c) = queue.pop_front() {
                for &i in &waiting[c as usize] {
                    missing[i] -= 1;
                    if missing[i] == 0 {
                        let (kind, a, b, r) = ops[i];
                        let set = !known[r as usize];
                        if set {
                            known[r as usize] = true;
                            queue.push_back(r);
                        }
                        schedule.push(Op { kind, a, b, r, set });
                    }
                }
            }
            vars.push(var);
            schedules.push(schedule);
        }
        if let Some(c) = known.iter().position(|&k| !k) {
            let name = if c < n0 {
                d.objects()[c].clone()
            } else if c < n0 + n1 {
                d.cells1()[c - n0].name.clone()
            } else {
                d.cells2()[c - n0 - n1].name.clone()
            };
            return Err(Error::invalid(format!("generators do not reach cell {name}")));
        }
        Ok(Self { n0, n1, vars, schedules })
    }
}

struct Search<'a, F> {
    plan: &'a Plan,
    e: &'a Fin2Category,
    img: Vec<u32>,
    nodes: u64,
    max_nodes: u64,
    visit: F,
}

impl<F: FnMut(&[u32]) -> ControlFlow<()>> Search<'_, F> {
    fn run_schedule(&mut self, i: usize) -> bool {
        let (n0, n1) = (self.plan.n0 as u32, self.plan.n1 as u32);
        for op in &self.plan.schedules[i] {
            let a = self.img[op.a as usize] as usize;
            let b = self.img[op.b as usize] as usize;
            let v = match op.kind {
                Kind::Id1 => Some(self.e.id1(a) as u32 + n0),
                Kind::Id2 => Some(self.e.id2(a) as u32 + n0 + n1),
                Kind::H1 => self.e.hcomp1(a, b).map(|r| r as u32 + n0),
                Kind::V => self.e.vcomp(a, b).map(|r| r as u32 + n0 + n1),
                Kind::H2 => self.e.hcomp2(a, b).map(|r| r as u32 + n0 + n1),
            };
            // images are stored relative to their level
            let Some(v) = v else { return false };
            let v = v - if matches!(op.kind, Kind::Id1 | Kind::H1) { n0 } else { n0 + n1 };
            if op.set {
                self.img[op.r as usize] = v;
            } else if self.img[op.r as usize] != v {
                return false;
            }
        }
        true
    }

    fn go(&mut self, depth: usize) -> Result<ControlFlow<()>> {
        if depth == self.plan.vars.len() {
            return Ok((self.visit)(&self.img));
        }
        let e = self.e;
        let (key, candidates): (u32, &[usize]) = match self.plan.vars[depth] {
            Var::Object(x) => {
                let n = e.objects().len();
                return self.try_each(depth, x as u32, (0..n).map(|v| v as u32));
            }
            Var::Cell1 { key, src, tgt } => (
                key,
                e.cells1_between(self.img[src as usize] as usize, self.img[tgt as usize] as usize),
            ),
            Var::Cell2 { key, src, tgt } => (
                key,
                e.cells2_between(self.img[src as usize] as usize, self.img[tgt as usize] as usize),
            ),
        };
        self.try_each(depth, key, candidates.iter().map(|&v| v as u32))
    }

    fn try_each(&mut self, depth: usize, key: u32, values: impl Iterator<Item = u32>) -> Result<ControlFlow<()>> {
        for v in values {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(Error::ResourceLimit(format!(
                    "functor search exceeded {} nodes",
                    self.max_nodes
                )));
            }
            self.img[key as usize] = v;
            if self.run_schedule(depth) && self.go(depth + 1)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn search(
    d: &Fin2Category,
    e: &Fin2Category,
    max_nodes: u64,
    visit: impl FnMut(&[u32]) -> ControlFlow<()>,
) -> Result<()> {
    let plan = Plan::new(d)?;
    let total = d.objects().len() + d.cells1().len() + d.cells2().len();
    let mut s = Search {
        plan: &plan,
        e,
        img: vec![NONE; total],
        nodes: 0,
        max_nodes,
        visit,
    };
    s.go(0).map(|_| ())
}

fn to_functor(d: &Fin2Category, img: &[u32]) -> TwoFunctor {
    let (n0, n1) = (d.objects().len(), d.cells1().len());
    let conv = |s: &[u32]| s.iter().map(|&v| v as usize).collect();
    TwoFunctor {
        objects: conv(&img[..n0]),
        cells1: conv(&img[n0..n0 + n1]),
        cells2: conv(&img[n0 + n1..]),
    }
}

/// Counts the strict 2-functors `d -> e` without storing them.
///
/// The search branches only on the generators of `d` (all non-identity
/// cells when none are recorded) and derives every other image.
pub fn count_two_functors(d: &Fin2Category, e: &Fin2Category, limits: SearchLimits) -> Result<u64> {
    let mut n = 0u64;
    search(d, e, limits.max_nodes, |_| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(n)
}

/// Calls `visit` on each 2-functor `d -> e` in search order until it breaks.
pub fn visit_two_functors(
    d: &Fin2Category,
    e: &Fin2Category,
    limits: SearchLimits,
    mut visit: impl FnMut(&TwoFunctor) -> ControlFlow<()>,
) -> Result<()> {
    search(d, e, limits.max_nodes, |img| visit(&to_functor(d, img)))
}

/// All strict 2-functors `d -> e` in canonical (lexicographic) order.
pub fn enumerate_two_functors(d: &Fin2Category, e: &Fin2Category, limits: SearchLimits) -> Result<Vec<TwoFunctor>> {
    let mut out = Vec::new();
    let mut overflow = false;
    search(d, e, limits.max_nodes, |img| {
        if out.len() == limits.max_results {
            overflow = true;
            return ControlFlow::Break(());
        }
        out.push(to_functor(d, img));
        ControlFlow::Continue(())
    })?;
    if overflow {
        return Err(Error::ResourceLimit(format!(
            "more than {} functors",
            limits.max_results
        )));
    }
    out.sort_unstable();
    Ok(out)
}

/// An isomorphism of 2-categories `d -> e`, if one exists.
pub fn find_iso_2cat(d: &Fin2Category, e: &Fin2Category, limits: SearchLimits) -> Result<Option<TwoFunctor>> {
    if d.objects().len() != e.objects().len()
        || d.cells1().len() != e.cells1().len()
        || d.cells2().len() != e.cells2().len()
    {
        return Ok(None);
    }
    let mut found = None;
    let d_all = d.clone().with_generators(None);
    visit_two_functors(&d_all, e, limits, |f| {
        if f.is_bijective(e) {
            found = Some(f.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}
