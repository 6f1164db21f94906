/// Fixed-capacity bit set used for adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    /// Make room for indices below `len`.
    pub fn grow(&mut self, len: usize) {
        let need = len.div_ceil(64);
        if need > self.words.len() {
            self.words.resize(need, 0);
        }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i >> 6).is_some_and(|w| w >> (i & 63) & 1 == 1)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `self & other` into a new set.
    pub fn and(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    /// Keep only bits strictly above `i`.
    pub fn above(&self, i: usize) -> BitSet {
        let mut out = self.clone();
        let w = i >> 6;
        for x in &mut out.words[..w] {
            *x = 0;
        }
        if w < out.words.len() {
            let keep = if i & 63 == 63 { 0 } else { !0u64 << ((i & 63) + 1) };
            out.words[w] &= keep;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn above_masks_low_bits() {
        let mut s = BitSet::new(130);
        for i in [0, 5, 63, 64, 100, 129] {
            s.insert(i);
        }
        assert_eq!(s.above(63).iter().collect::<Vec<_>>(), vec![64, 100, 129]);
        assert_eq!(s.above(5).iter().collect::<Vec<_>>(), vec![63, 64, 100, 129]);
        assert_eq!(s.above(129).count(), 0);
    }
}
