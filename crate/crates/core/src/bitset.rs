//! Fixed-width bit sets and boolean matrices.
//!
//! Carriers are indexed by position; a set over a carrier of size `n` is a
//! `u64` with the low `n` bits significant. All derivation operators reduce
//! to row folds over [`BoolMat`].

/// Maximum carrier size supported by [`BitSet`].
pub const MAX_CARRIER: usize = 64;

fn mask(len: usize) -> u64 {
    debug_assert!(len <= MAX_CARRIER);
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A subset of a carrier of fixed size `len`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    bits: u64,
    len: usize,
}

impl BitSet {
    pub fn empty(len: usize) -> Self {
        assert!(len <= MAX_CARRIER, "carrier too large: {len}");
        BitSet { bits: 0, len }
    }

    pub fn full(len: usize) -> Self {
        assert!(len <= MAX_CARRIER, "carrier too large: {len}");
        BitSet {
            bits: mask(len),
            len,
        }
    }

    pub fn singleton(len: usize, i: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(i);
        s
    }

    pub fn from_indices(len: usize, idx: &[usize]) -> Self {
        let mut s = Self::empty(len);
        for &i in idx {
            s.insert(i);
        }
        s
    }

    /// Raw bit pattern; stable key for hashing and ordering.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.bits & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.len,
            "index {i} out of carrier of size {}",
            self.len
        );
        self.bits |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len);
        self.bits &= !(1 << i);
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            bits: self.bits | other.bits,
            len: self.len,
        }
    }

    pub fn inter(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            bits: self.bits & other.bits,
            len: self.len,
        }
    }

    pub fn diff(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            bits: self.bits & !other.bits,
            len: self.len,
        }
    }

    pub fn complement(&self) -> BitSet {
        BitSet {
            bits: !self.bits & mask(self.len),
            len: self.len,
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|i| self.contains(*i))
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Render against carrier names, in carrier order: `{a,b}`.
    pub fn render(&self, names: &[String]) -> String {
        let elems: Vec<&str> = self.iter().map(|i| names[i].as_str()).collect();
        format!("{{{}}}", elems.join(","))
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Iterate all subsets of a carrier of size `len` in numeric order.
pub fn all_subsets(len: usize) -> impl Iterator<Item = BitSet> {
    assert!(len < 32, "subset enumeration limited to small carriers");
    (0u64..(1u64 << len)).map(move |bits| BitSet { bits, len })
}

/// A dense boolean matrix; each row is stored as the low `cols` bits of a `u64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl BoolMat {
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(cols <= MAX_CARRIER, "too many columns: {cols}");
        BoolMat {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        let mut m = Self::new(rows, cols);
        for r in 0..rows {
            m.data[r] = mask(cols);
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::new(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r] & (1 << c) != 0
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        assert!(r < self.rows && c < self.cols);
        if v {
            self.data[r] |= 1 << c;
        } else {
            self.data[r] &= !(1 << c);
        }
    }

    pub fn row(&self, r: usize) -> BitSet {
        BitSet {
            bits: self.data[r],
            len: self.cols,
        }
    }

    pub fn set_row(&mut self, r: usize, s: BitSet) {
        assert_eq!(s.len(), self.cols);
        self.data[r] = s.bits();
    }

    pub fn col(&self, c: usize) -> BitSet {
        let mut s = BitSet::empty(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                s.insert(r);
            }
        }
        s
    }

    pub fn set_col(&mut self, c: usize, s: BitSet) {
        assert_eq!(s.len(), self.rows);
        for r in 0..self.rows {
            self.set(r, c, s.contains(r));
        }
    }

    pub fn transpose(&self) -> BoolMat {
        let mut t = BoolMat::new(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Pointwise inclusion: every entry of `self` implies the same entry of `other`.
    pub fn le(&self, other: &BoolMat) -> bool {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &BoolMat) -> BoolMat {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a | b)
            .collect();
        BoolMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn complement(&self) -> BoolMat {
        let m = mask(self.cols);
        let data = self.data.iter().map(|a| !a & m).collect();
        BoolMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `{u : s ⊆ row(u)}` — the 0-section fold used by every derivation operator.
    pub fn zero_section(&self, s: &BitSet) -> BitSet {
        debug_assert_eq!(s.len(), self.cols);
        let mut out = BitSet::empty(self.rows);
        for r in 0..self.rows {
            if s.bits() & !self.data[r] == 0 {
                out.insert(r);
            }
        }
        out
    }

    /// `⋂_{u∈s} row(u)` — the 1-section fold.
    pub fn one_section(&self, s: &BitSet) -> BitSet {
        debug_assert_eq!(s.len(), self.rows);
        let mut acc = mask(self.cols);
        for r in s.iter() {
            acc &= self.data[r];
        }
        BitSet {
            bits: acc,
            len: self.cols,
        }
    }

    /// Ordinary relational composition of square boolean matrices:
    /// `(self∘other)(u,w)` iff `self(u,v)` and `other(v,w)` for some `v`.
    pub fn compose(&self, other: &BoolMat) -> BoolMat {
        assert_eq!(self.cols, other.rows);
        let mut out = BoolMat::new(self.rows, other.cols);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for v in self.row(r).iter() {
                acc |= other.data[v];
            }
            out.data[r] = acc;
        }
        out
    }

    pub fn is_reflexive(&self) -> bool {
        debug_assert_eq!(self.rows, self.cols);
        (0..self.rows).all(|i| self.get(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        debug_assert_eq!(self.rows, self.cols);
        (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_transitive(&self) -> bool {
        debug_assert_eq!(self.rows, self.cols);
        self.compose(self).le(self)
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }
}

impl std::fmt::Debug for BoolMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BoolMat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", if self.get(r, c) { 'X' } else { '.' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
