use alloc::vec;
use alloc::vec::Vec;

const NONE: u32 = u32::MAX;

/// Dense partial binary operation on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Table2 {
    n: usize,
    data: Vec<u32>,
}

impl Table2 {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            data: vec![NONE; n * n],
        }
    }

    pub fn from_triples(n: usize, triples: &[(usize, usize, usize)]) -> Self {
        let mut t = Self::new(n);
        for &(a, b, r) in triples {
            t.set(a, b, r);
        }
        t
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.data[a * self.n + b];
        (v != NONE).then_some(v as usize)
    }

    pub fn set(&mut self, a: usize, b: usize, r: usize) {
        self.data[a * self.n + b] = r as u32;
    }
}
