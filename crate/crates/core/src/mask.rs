//! Vertex bitsets for the search routines. `u64` covers the common small
//! case; `WideMask` handles any order.

pub(crate) trait Mask: Clone + PartialEq {
    fn empty(n: usize) -> Self;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn contains(&self, v: usize) -> bool;
    fn is_empty(&self) -> bool;
    fn count(&self) -> usize;
    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;
    fn first(&self) -> Option<usize>;
    fn for_each(&self, f: impl FnMut(usize));

    #[cfg(test)]
    fn full(n: usize) -> Self {
        let mut m = Self::empty(n);
        for v in 0..n {
            m.insert(v);
        }
        m
    }

    fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.count());
        self.for_each(|v| out.push(v));
        out
    }
}

impl Mask for u64 {
    fn empty(_: usize) -> Self {
        0
    }
    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }
    fn remove(&mut self, v: usize) {
        *self &= !(1 << v);
    }
    fn contains(&self, v: usize) -> bool {
        *self >> v & 1 == 1
    }
    fn is_empty(&self) -> bool {
        *self == 0
    }
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    fn and(&self, other: &Self) -> Self {
        self & other
    }
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }
    fn or(&self, other: &Self) -> Self {
        self | other
    }
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    fn for_each(&self, mut f: impl FnMut(usize)) {
        let mut bits = *self;
        while bits != 0 {
            f(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct WideMask(Box<[u64]>);

impl Mask for WideMask {
    fn empty(n: usize) -> Self {
        WideMask(vec![0; n.div_ceil(64)].into_boxed_slice())
    }
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn and(&self, other: &Self) -> Self {
        WideMask(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a & b)
                .collect(),
        )
    }
    fn and_not(&self, other: &Self) -> Self {
        WideMask(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a & !b)
                .collect(),
        )
    }
    fn or(&self, other: &Self) -> Self {
        WideMask(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a | b)
                .collect(),
        )
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn for_each(&self, mut f: impl FnMut(usize)) {
        for (i, &word) in self.0.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                f(i * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
    }
}
