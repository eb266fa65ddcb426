use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::category::FinCategory;
use super::two::{Fin2Builder, Fin2Category, Generators, MAX_CELLS2};
use crate::{Error, Result};

/// An object `[m|k₁,…,k_m]` of the cell category `Θ₂`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Theta2Shape {
    m: usize,
    ks: Vec<usize>,
}

impl Theta2Shape {
    pub fn new(m: usize, ks: Vec<usize>) -> Result<Self> {
        if ks.len() != m {
            return Err(Error::invalid(format!(
                "shape [{m}|..] needs {m} entries, got {}",
                ks.len()
            )));
        }
        Ok(Self { m, ks })
    }

    /// Shape with `m = ks.len()`.
    pub fn from_ks(ks: Vec<usize>) -> Self {
        Self { m: ks.len(), ks }
    }

    pub fn point() -> Self {
        Self { m: 0, ks: Vec::new() }
    }

    /// `[i|j,…,j]`, the image of `[i, j]` under `Δ × Δ → Θ₂`.
    pub fn diagonal(i: usize, j: usize) -> Self {
        Self::from_ks(vec![j; i])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    /// Every shape with `m ≤ max_m` and all `kᵢ ≤ max_k`, in canonical order.
    pub fn grid(max_m: usize, max_k: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for m in 0..=max_m {
            for ks in tuples(&vec![max_k + 1; m]) {
                out.push(Self::from_ks(ks));
            }
        }
        out
    }
}

impl fmt::Display for Theta2Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 0 {
            return write!(f, "[0]");
        }
        write!(f, "[{}|", self.m)?;
        for (i, k) in self.ks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Theta2Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("cannot parse shape {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match inner.split_once('|') {
            None if num(inner)? == 0 => Ok(Self::point()),
            None => Err(bad()),
            Some((m, rest)) => {
                let m = num(m)?;
                let ks = if rest.trim().is_empty() {
                    Vec::new()
                } else {
                    rest.split(',').map(num).collect::<Result<Vec<_>>>()?
                };
                Self::new(m, ks)
            }
        }
    }
}

fn tuple_name(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

/// All tuples of the product `[r₀-1]×⋯`, lexicographically.
fn tuples(radices: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &r in radices {
        let mut next = Vec::with_capacity(out.len() * r);
        for t in &out {
            for v in 0..r {
                let mut u = t.clone();
                u.push(v);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

fn le(a: &[usize], b: &[usize]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The 2-category `[m|k₁,…,k_m]`.
///
/// Objects are `0..=m`. For `x ≤ y` the hom-category `hom(x, y)` is the
/// product poset `[k_{x+1}]×⋯×[k_y]`, horizontal composition concatenates
/// tuples, and there are no cells from `y` to `x`. Cell ids are
/// `"x->y:t"` for 1-cells and `"x->y:a=>b"` for 2-cells.
pub fn theta2_object(shape: &Theta2Shape) -> Result<Fin2Category> {
    let m = shape.m;
    let ks = &shape.ks;
    let mut total2 = 0usize;
    for x in 0..=m {
        for y in x..=m {
            let pairs: usize = ks[x..y].iter().map(|k| (k + 1) * (k + 2) / 2).product();
            total2 = total2.saturating_add(pairs);
        }
    }
    if total2 > MAX_CELLS2 {
        return Err(Error::ResourceLimit(format!("{shape} has {total2} 2-cells")));
    }

    let mut b = Fin2Builder::new();
    for x in 0..=m {
        b.object(x.to_string());
    }
    // hom data keyed by (x, y)
    let mut ones: BTreeMap<(usize, usize), (Vec<Vec<usize>>, Vec<usize>)> = BTreeMap::new();
    let mut twos: BTreeMap<(usize, usize), BTreeMap<(usize, usize), usize>> = BTreeMap::new();
    for x in 0..=m {
        for y in x..=m {
            let radices: Vec<usize> = ks[x..y].iter().map(|k| k + 1).collect();
            let ts = tuples(&radices);
            let ids: Vec<usize> = ts
                .iter()
                .map(|t| b.cell1(format!("{x}->{y}:{}", tuple_name(t)), x, y))
                .collect();
            if x == y {
                b.set_id1(x, ids[0]);
            }
            let mut cells = BTreeMap::new();
            for (i, ti) in ts.iter().enumerate() {
                for (j, tj) in ts.iter().enumerate() {
                    if le(ti, tj) {
                        let name = format!("{x}->{y}:{}=>{}", tuple_name(ti), tuple_name(tj));
                        let c = b.cell2(name, ids[i], ids[j]);
                        cells.insert((i, j), c);
                        if i == j {
                            b.set_id2(ids[i], c);
                        }
                    }
                }
            }
            ones.insert((x, y), (ts, ids));
            twos.insert((x, y), cells);
        }
    }
    for (&(x, y), cells) in &twos {
        let n = ones[&(x, y)].0.len();
        for (&(i, j), &a) in cells {
            for k in j..n {
                if let Some(&c) = cells.get(&(j, k)) {
                    b.set_vcomp(a, c, cells[&(i, k)]);
                }
            }
        }
    }
    let rank = |ts: &Vec<Vec<usize>>, t: &[usize]| ts.iter().position(|u| u == t).unwrap();
    for x in 0..=m {
        for y in x..=m {
            for z in y..=m {
                let (txy, ixy) = &ones[&(x, y)];
                let (tyz, iyz) = &ones[&(y, z)];
                let (txz, ixz) = &ones[&(x, z)];
                let mut concat_rank = vec![vec![0; tyz.len()]; txy.len()];
                for (p, tp) in txy.iter().enumerate() {
                    for (q, tq) in tyz.iter().enumerate() {
                        let mut t = tp.clone();
                        t.extend_from_slice(tq);
                        let r = rank(txz, &t);
                        concat_rank[p][q] = r;
                        b.set_hcomp1(ixy[p], iyz[q], ixz[r]);
                    }
                }
                let cxz = &twos[&(x, z)];
                for (&(i, j), &a) in &twos[&(x, y)] {
                    for (&(k, l), &c) in &twos[&(y, z)] {
                        let r = cxz[&(concat_rank[i][k], concat_rank[j][l])];
                        b.set_hcomp2(a, c, r);
                    }
                }
            }
        }
    }
    let mut gens = Generators::default();
    for i in 1..=m {
        let (_, ids) = &ones[&(i - 1, i)];
        gens.cells1.extend(ids.iter().copied());
        let cells = &twos[&(i - 1, i)];
        for p in 1..=ks[i - 1] {
            gens.cells2.push(cells[&(p - 1, p)]);
        }
    }
    b.generators(gens);
    b.build()
}

/// The free `j`-cell `C_j` for `j ∈ {0, 1, 2}`.
pub fn cell(j: usize) -> Result<Fin2Category> {
    match j {
        0 => theta2_object(&Theta2Shape::point()),
        1 => theta2_object(&Theta2Shape::from_ks(vec![0])),
        2 => theta2_object(&Theta2Shape::from_ks(vec![1])),
        _ => Err(Error::invalid(format!("there is no free {j}-cell here; j must be 0, 1 or 2"))),
    }
}

/// Index of the object `x⊥` in a suspension.
pub const SUSPENSION_BOT: usize = 0;
/// Index of the object `x⊤` in a suspension.
pub const SUSPENSION_TOP: usize = 1;

/// The 1-cell `x⊥ -> x⊤` of `ΣC` corresponding to object `c` of `C`.
pub fn suspension_cell1(c: usize) -> usize {
    2 + c
}

/// The 2-cell of `ΣC` corresponding to morphism `f` of `C`.
pub fn suspension_cell2(f: usize) -> usize {
    2 + f
}

/// The suspension `ΣC`: objects `bot` and `top`, `hom(bot, top) = C`,
/// trivial endo-homs, nothing from `top` to `bot`.
///
/// Layout: 1-cells are `[id(bot), id(top), objects of C…]` and 2-cells are
/// `[id id(bot), id id(top), morphisms of C…]`.
pub fn suspend_category(c: &FinCategory) -> Fin2Category {
    let mut b = Fin2Builder::new();
    let bot = b.object("bot");
    let top = b.object("top");
    let ib = b.cell1("bot->bot", bot, bot);
    let it = b.cell1("top->top", top, top);
    b.set_id1(bot, ib);
    b.set_id1(top, it);
    for o in c.objects() {
        b.cell1(o.clone(), bot, top);
    }
    let ibb = b.cell2("bot->bot=>bot->bot", ib, ib);
    let itt = b.cell2("top->top=>top->top", it, it);
    b.set_id2(ib, ibb);
    b.set_id2(it, itt);
    for m in c.morphisms() {
        b.cell2(m.name.clone(), suspension_cell1(m.src), suspension_cell1(m.tgt));
    }
    for (x, &i) in c.identities().iter().enumerate() {
        b.set_id2(suspension_cell1(x), suspension_cell2(i));
    }
    for &(f, g, r) in c.composition_triples() {
        b.set_vcomp(suspension_cell2(f), suspension_cell2(g), suspension_cell2(r));
    }
    b.fill_units();
    b.build().expect("suspension tables")
}
