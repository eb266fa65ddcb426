use alloc::vec;
use alloc::vec::Vec;

use crate::twocat::Fin2Category;

/// An `n`-simplex of the Duskin nerve: objects `x₀…x_n`, 1-cells
/// `f_ij : x_i -> x_j` for `i < j` and 2-cells `φ_ijk : f_ik => f_ij ; f_jk`
/// for `i < j < k`.
///
/// Edges are stored in lexicographic order of `(i, j)` and triangles in
/// lexicographic order of `(i, j, k)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NerveSimplex {
    pub objects: Vec<usize>,
    pub edges: Vec<usize>,
    pub triangles: Vec<usize>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    // pairs (a, _) with a < i, then (i, i+1..j)
    i * n - i * i.saturating_sub(1) / 2 + (j - i - 1)
}

fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    let mut idx = 0;
    for a in 0..i {
        let rest = n - a;
        idx += rest * (rest - 1) / 2;
    }
    for b in i + 1..j {
        idx += n - b;
    }
    idx + (k - j - 1)
}

impl NerveSimplex {
    pub fn dim(&self) -> usize {
        self.objects.len() - 1
    }

    pub fn edge(&self, i: usize, j: usize) -> usize {
        self.edges[pair_index(self.dim(), i, j)]
    }

    pub fn triangle(&self, i: usize, j: usize, k: usize) -> usize {
        self.triangles[triple_index(self.dim(), i, j, k)]
    }

    /// Vertex `i` as a 0-simplex.
    pub fn vertex(x: usize) -> Self {
        Self {
            objects: vec![x],
            edges: Vec::new(),
            triangles: Vec::new(),
        }
    }

    /// Builds a simplex from dense accessors.
    pub fn from_fn(
        n: usize,
        object: impl Fn(usize) -> usize,
        edge: impl Fn(usize, usize) -> usize,
        triangle: impl Fn(usize, usize, usize) -> usize,
    ) -> Self {
        let objects = (0..=n).map(object).collect();
        let mut edges = Vec::new();
        let mut triangles = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                edges.push(edge(i, j));
            }
        }
        for i in 0..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    triangles.push(triangle(i, j, k));
                }
            }
        }
        Self {
            objects,
            edges,
            triangles,
        }
    }

    /// `σ · α` for a monotone `α : [m] -> [n]`. Collapsed edges become
    /// identities and triangles with a repeated vertex become identity
    /// 2-cells.
    pub fn restrict(&self, alpha: &[usize], d: &Fin2Category) -> NerveSimplex {
        let edge = |a: usize, b: usize| if a == b { d.id1(self.objects[a]) } else { self.edge(a, b) };
        NerveSimplex::from_fn(
            alpha.len() - 1,
            |i| self.objects[alpha[i]],
            |i, j| edge(alpha[i], alpha[j]),
            |i, j, k| {
                let (a, b, c) = (alpha[i], alpha[j], alpha[k]);
                if a < b && b < c {
                    self.triangle(a, b, c)
                } else {
                    d.id2(edge(a, c))
                }
            },
        )
    }

    /// Whether `σ = s_j d_j σ`.
    pub fn is_degenerate_at(&self, j: usize, d: &Fin2Category) -> bool {
        let n = self.dim();
        let alpha: Vec<usize> = (0..=n).map(|k| if k == j { j + 1 } else { k }).collect();
        self.restrict(&alpha, d) == *self
    }

    /// Checks endpoints, 2-cell boundaries and the 3-simplex relation on
    /// every 4-element subset.
    pub fn is_valid(&self, d: &Fin2Category) -> bool {
        let n = self.dim();
        if self.edges.len() != n * (n + 1) / 2 || self.objects.iter().any(|&x| x >= d.objects().len()) {
            return false;
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let f = self.edge(i, j);
                if f >= d.cells1().len() || d.cells1()[f].src != self.objects[i] || d.cells1()[f].tgt != self.objects[j] {
                    return false;
                }
            }
        }
        for i in 0..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let phi = self.triangle(i, j, k);
                    let Some(t) = d.hcomp1(self.edge(i, j), self.edge(j, k)) else {
                        return false;
                    };
                    if phi >= d.cells2().len() || d.cells2()[phi].src != self.edge(i, k) || d.cells2()[phi].tgt != t {
                        return false;
                    }
                }
            }
        }
        (0..=n).all(|a| {
            (a + 1..=n).all(|b| (b + 1..=n).all(|c| (c + 1..=n).all(|e| duskin_relation(self, d, a, b, c, e))))
        })
    }
}

/// `φ_abd ; (id f_ab ⋆ φ_bcd) = φ_acd ; (φ_abc ⋆ id f_cd)` as 2-cells
/// `f_ad => f_ab ; f_bc ; f_cd`.
pub(crate) fn duskin_relation(s: &NerveSimplex, d: &Fin2Category, a: usize, b: usize, c: usize, e: usize) -> bool {
    relation_holds(
        d,
        s.edge(a, b),
        s.edge(c, e),
        s.triangle(a, b, c),
        s.triangle(a, b, e),
        s.triangle(a, c, e),
        s.triangle(b, c, e),
    )
}

pub(crate) fn relation_holds(
    d: &Fin2Category,
    f_ab: usize,
    f_cd: usize,
    abc: usize,
    abd: usize,
    acd: usize,
    bcd: usize,
) -> bool {
    let lhs = d.hcomp2(d.id2(f_ab), bcd).and_then(|w| d.vcomp(abd, w));
    let rhs = d.hcomp2(abc, d.id2(f_cd)).and_then(|w| d.vcomp(acd, w));
    lhs.is_some() && lhs == rhs
}
