//! Bit-packed GF(2) vectors and incremental row-echelon elimination.
//!
//! Everything downstream of this module — Pauli arithmetic, stabilizer rank,
//! group membership, the distance search — reduces to word-wise XOR/AND plus
//! popcounts, so the representation here is a plain `Vec<u64>` with the bit
//! order fixed as: bit `i` of the vector lives in word `i / 64`, position
//! `i % 64`.
//!
//! [`Echelon`] maintains a row-echelon basis *with combination tracking*: for
//! every independent row it remembers which of the inserted vectors XOR
//! together to produce it, and for every dependent insertion it records the
//! kernel combination. That is what lets membership queries return an explicit
//! witness ("this vector is the product of generators 1 and 3") instead of a
//! bare boolean.

const WORD_BITS: usize = 64;

fn words_for(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS).max(1)
}

/// Fixed-width bit vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    nbits: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// All-zero vector of the given width.
    pub fn zeros(nbits: usize) -> Self {
        Self {
            nbits,
            words: vec![0; words_for(nbits)],
        }
    }

    /// Vector with exactly the listed bit positions set.
    ///
    /// Panics if any index is out of range; duplicate indices toggle.
    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, indices: I) -> Self {
        let mut v = Self::zeros(nbits);
        for i in indices {
            v.flip(i);
        }
        v
    }

    /// Number of bits in the vector.
    pub fn len(&self) -> usize {
        self.nbits
    }

    /// True when the vector has zero width.
    pub fn is_empty(&self) -> bool {
        self.nbits == 0
    }

    /// Raw word storage (low word first).
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Value of bit `i`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.nbits, "bit index {i} out of range {}", self.nbits);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    /// Set bit `i` to `value`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.nbits, "bit index {i} out of range {}", self.nbits);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// Toggle bit `i`.
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.nbits, "bit index {i} out of range {}", self.nbits);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// In-place XOR with another vector of the same width.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.nbits, other.nbits, "width mismatch in xor_assign");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Number of set bits.
    pub fn popcount(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Number of positions set in both vectors.
    pub fn and_popcount(&self, other: &Self) -> u32 {
        assert_eq!(self.nbits, other.nbits, "width mismatch in and_popcount");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    /// Parity (mod 2) of the overlap between two vectors.
    pub fn and_parity(&self, other: &Self) -> bool {
        self.and_popcount(other) & 1 == 1
    }

    /// Number of positions set in either vector.
    pub fn or_popcount(&self, other: &Self) -> u32 {
        assert_eq!(self.nbits, other.nbits, "width mismatch in or_popcount");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones())
            .sum()
    }

    /// True when no bit is set.
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Position of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterator over set bit positions in ascending order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Widen the vector to `nbits`, padding with zeros. No-op if already wide enough.
    pub fn grow(&mut self, nbits: usize) {
        if nbits > self.nbits {
            self.nbits = nbits;
            self.words.resize(words_for(nbits), 0);
        }
    }

    /// Return a copy truncated (or padded) to exactly `nbits`.
    ///
    /// Truncation asserts that no set bit is discarded — it is only meant for
    /// shrinking capacity padding, not for dropping data.
    fn with_len(mut self, nbits: usize) -> Self {
        if nbits >= self.nbits {
            self.grow(nbits);
            return self;
        }
        let keep = words_for(nbits);
        for (wi, &w) in self.words.iter().enumerate() {
            let masked = if wi < keep - 1 {
                0
            } else if wi == keep - 1 {
                let rem = nbits % WORD_BITS;
                if rem == 0 {
                    0
                } else {
                    w & !((1u64 << rem) - 1)
                }
            } else {
                w
            };
            assert_eq!(masked, 0, "truncation would drop set bits");
        }
        self.words.truncate(keep);
        self.nbits = nbits;
        self
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVec[{}]{{", self.nbits)?;
        for (count, i) in self.ones().enumerate() {
            if count > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Incremental GF(2) row-echelon form with combination tracking.
///
/// Vectors are offered one at a time through [`Echelon::insert`]; the basis
/// keeps one row per pivot column. For each stored row the echelon also keeps
/// the combination of *inserted* vectors (by insertion index) that produces
/// it, and for each rejected (dependent) insertion it stores the kernel
/// combination that sums to zero. Queries never mutate the structure, so a
/// built echelon can be shared freely across threads.
#[derive(Debug, Clone)]
pub struct Echelon {
    width: usize,
    rows: Vec<BitVec>,
    combos: Vec<BitVec>,
    pivots: Vec<usize>,
    sources: Vec<usize>,
    kernel: Vec<BitVec>,
    inserted: usize,
    combo_cap: usize,
}

impl Echelon {
    /// Empty echelon over vectors of the given width.
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            combos: Vec::new(),
            pivots: Vec::new(),
            sources: Vec::new(),
            kernel: Vec::new(),
            inserted: 0,
            combo_cap: WORD_BITS,
        }
    }

    /// Offer a vector; returns `true` when it was independent of the rows so
    /// far (rank increased), `false` when it reduced to zero.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.width, "width mismatch in Echelon::insert");
        let idx = self.inserted;
        if idx == self.combo_cap {
            self.combo_cap *= 2;
            for c in self.combos.iter_mut().chain(self.kernel.iter_mut()) {
                c.grow(self.combo_cap);
            }
        }
        self.inserted += 1;

        let mut r = v.clone();
        let mut c = BitVec::zeros(self.combo_cap);
        c.set(idx, true);
        for j in 0..self.rows.len() {
            if r.get(self.pivots[j]) {
                r.xor_assign(&self.rows[j]);
                c.xor_assign(&self.combos[j]);
            }
        }
        match r.first_one() {
            Some(p) => {
                self.rows.push(r);
                self.combos.push(c);
                self.pivots.push(p);
                self.sources.push(idx);
                true
            }
            None => {
                self.kernel.push(c);
                false
            }
        }
    }

    /// Current rank (number of independent rows).
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors offered so far.
    pub fn inserted_count(&self) -> usize {
        self.inserted
    }

    /// Column width of the vectors this echelon accepts.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Insertion indices of the vectors that created each independent row.
    ///
    /// These form a maximal independent subset of everything inserted.
    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    /// Kernel combinations: for every dependent insertion, the set of
    /// insertion indices (including the dependent vector itself) whose XOR is
    /// zero. Width of each combination equals [`Self::inserted_count`]'s
    /// capacity; bits beyond the inserted count are zero.
    pub fn kernel(&self) -> impl Iterator<Item = BitVec> + '_ {
        self.kernel.iter().map(|c| c.clone().with_len(self.inserted))
    }

    /// Reduce `v` against the rows. Returns `(residual, combo)` where
    /// `residual = v XOR (sum of inserted vectors selected by combo)`; the
    /// combo is indexed by insertion order and has width
    /// [`Self::inserted_count`].
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        assert_eq!(v.len(), self.width, "width mismatch in Echelon::reduce");
        let mut r = v.clone();
        let mut c = BitVec::zeros(self.combo_cap);
        for j in 0..self.rows.len() {
            if r.get(self.pivots[j]) {
                r.xor_assign(&self.rows[j]);
                c.xor_assign(&self.combos[j]);
            }
        }
        (r, c.with_len(self.inserted))
    }

    /// If `v` lies in the row space, return the combination of inserted
    /// vectors (by insertion index) whose XOR equals it.
    pub fn in_span(&self, v: &BitVec) -> Option<BitVec> {
        let (r, c) = self.reduce(v);
        r.is_zero().then_some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitvec_basics() {
        let mut v = BitVec::zeros(70);
        assert_eq!(v.len(), 70);
        assert!(v.is_zero());
        v.set(0, true);
        v.set(69, true);
        v.flip(33);
        assert!(v.get(0) && v.get(33) && v.get(69));
        assert!(!v.get(1));
        assert_eq!(v.popcount(), 3);
        assert_eq!(v.first_one(), Some(0));
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 33, 69]);
        v.set(0, false);
        assert_eq!(v.first_one(), Some(33));
    }

    #[test]
    fn bitvec_word_ops() {
        let a = BitVec::from_indices(10, [0, 2, 4, 6]);
        let b = BitVec::from_indices(10, [2, 3, 6, 9]);
        assert_eq!(a.and_popcount(&b), 2);
        assert!(!a.and_parity(&b));
        assert_eq!(a.or_popcount(&b), 6);
        let mut c = a.clone();
        c.xor_assign(&b);
        assert_eq!(c.ones().collect::<Vec<_>>(), vec![0, 3, 4, 9]);
    }

    #[test]
    fn bitvec_duplicate_indices_toggle() {
        let v = BitVec::from_indices(5, [1, 3, 1]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn echelon_rank_and_span() {
        let mut e = Echelon::new(6);
        let r1 = BitVec::from_indices(6, [0, 1]);
        let r2 = BitVec::from_indices(6, [1, 2]);
        let r3 = BitVec::from_indices(6, [0, 2]); // dependent: r1 ^ r2
        assert!(e.insert(&r1));
        assert!(e.insert(&r2));
        assert!(!e.insert(&r3));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.sources(), &[0, 1]);

        let combo = e.in_span(&r3).expect("r3 lies in the span");
        assert_eq!(combo.ones().collect::<Vec<_>>(), vec![0, 1]);
        assert!(e.in_span(&BitVec::from_indices(6, [0])).is_none());

        // The kernel records the dependency r1 ^ r2 ^ r3 = 0.
        let kernel: Vec<BitVec> = e.kernel().collect();
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0].ones().collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn echelon_combo_reconstructs_rows() {
        // Random-ish deterministic battery: XOR of the combo must equal the query.
        let vectors: Vec<BitVec> = (0u64..20)
            .map(|s| {
                let bits = (0..16).filter(move |i| (s.wrapping_mul(2654435761) >> i) & 1 == 1);
                BitVec::from_indices(16, bits)
            })
            .collect();
        let mut e = Echelon::new(16);
        for v in &vectors {
            e.insert(v);
        }
        for v in &vectors {
            let combo = e.in_span(v).expect("inserted vector is in the span");
            let mut acc = BitVec::zeros(16);
            for i in combo.ones() {
                acc.xor_assign(&vectors[i]);
            }
            assert_eq!(&acc, v);
        }
    }

    #[test]
    fn echelon_combo_capacity_growth() {
        // More than 64 insertions forces the combo width to grow.
        let mut e = Echelon::new(200);
        for i in 0..150 {
            assert!(e.insert(&BitVec::from_indices(200, [i])));
        }
        assert_eq!(e.rank(), 150);
        let q = BitVec::from_indices(200, [3, 120]);
        let combo = e.in_span(&q).expect("in span");
        assert_eq!(combo.ones().collect::<Vec<_>>(), vec![3, 120]);
        assert_eq!(combo.len(), 150);
    }
}
