//! Symmetric matrices over GF(2) and the delta-matroids they represent.
//!
//! Rows are single machine words, so matrices hold at most 64 labels; the
//! exhaustive routines ([`SymMatrix::delta_matroid`] in particular) are only
//! practical for a couple of dozen.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::setsys::{bit, bits, check_labels, full_mask, Mask, SetSystem, SlideSequence};

/// Counts `(i, j, k, l)` naming the canonical form `D_{i,j,k,l}`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSignature {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl CanonicalSignature {
    pub fn new(i: usize, j: usize, k: usize, l: usize) -> Self {
        Self { i, j, k, l }
    }

    /// Size of the ground set of the canonical form.
    pub fn ground_size(&self) -> usize {
        self.i + 2 * self.j + self.k + self.l
    }

    pub fn build<S: AsRef<str>>(&self, labels: &[S]) -> Result<SetSystem> {
        SetSystem::build_canonical(self.i, self.j, self.k, self.l, labels)
    }
}

impl fmt::Display for CanonicalSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i={} j={} k={} l={}", self.i, self.j, self.k, self.l)
    }
}

/// Diagonal block of a canonical matrix, by row index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    Zero(usize),
    Pair(usize, usize),
    One(usize),
}

/// A symmetric matrix over GF(2) whose rows and columns share one labelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    labels: Vec<String>,
    rows: Vec<u64>,
}

impl SymMatrix {
    /// Bit `j` of `rows[i]` is the `(i, j)` entry.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>, rows: Vec<u64>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels)?;
        let n = labels.len();
        if rows.len() != n {
            return Err(Error::InvalidArity {
                expected: n,
                actual: rows.len(),
            });
        }
        let full = full_mask(n);
        for (i, r) in rows.iter().enumerate() {
            if r & !full != 0 {
                return Err(Error::InvalidElements(format!("row {i} is wider than {n} columns")));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                    return Err(Error::Asymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { labels, rows })
    }

    pub fn from_bits<S: Into<String>>(labels: impl IntoIterator<Item = S>, entries: &[&[u8]]) -> Result<Self> {
        let rows = entries
            .iter()
            .map(|r| r.iter().enumerate().fold(0u64, |acc, (j, &v)| acc | (u64::from(v & 1) << j)))
            .collect();
        Self::new(labels, rows)
    }

    pub fn zero<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        Self::new(labels, vec![0; n])
    }

    pub fn identity<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let rows = (0..labels.len()).map(bit).collect();
        Self::new(labels, rows)
    }

    /// `[0]^i`, then `[[0,1],[1,0]]^j`, then `[1]^k` down the diagonal.
    pub fn canonical<S: AsRef<str>>(i: usize, j: usize, k: usize, labels: &[S]) -> Result<Self> {
        let n = i + 2 * j + k;
        if labels.len() != n {
            return Err(Error::InvalidArity {
                expected: n,
                actual: labels.len(),
            });
        }
        let mut rows = vec![0u64; n];
        for p in 0..j {
            let a = i + 2 * p;
            rows[a] = bit(a + 1);
            rows[a + 1] = bit(a);
        }
        for (r, row) in rows.iter_mut().enumerate().skip(i + 2 * j) {
            *row = bit(r);
        }
        Self::new(labels.iter().map(|s| s.as_ref().to_string()), rows)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::InvalidElements(format!("`{label}` is not a matrix label")))
    }

    /// Determinant over GF(2) of the principal submatrix on `subset`.
    pub fn det<S: AsRef<str>>(&self, subset: &[S]) -> Result<bool> {
        let m = subset
            .iter()
            .try_fold(0, |m, l| Ok::<_, Error>(m | bit(self.require_index(l.as_ref())?)))?;
        Ok(self.det_mask(m))
    }

    /// Determinant of `M[A]`; the empty minor counts as non-singular.
    pub fn det_mask(&self, subset: Mask) -> bool {
        let idx: Vec<usize> = bits(subset).collect();
        let mut sub: Vec<u64> = idx
            .iter()
            .map(|&r| {
                idx.iter()
                    .enumerate()
                    .filter(|(_, &c)| self.get(r, c))
                    .fold(0u64, |acc, (t, _)| acc | bit(t))
            })
            .collect();
        let k = sub.len();
        for col in 0..k {
            let Some(p) = (col..k).find(|&r| sub[r] & bit(col) != 0) else {
                return false;
            };
            sub.swap(col, p);
            let pivot = sub[col];
            for row in sub.iter_mut().skip(col + 1) {
                if *row & bit(col) != 0 {
                    *row ^= pivot;
                }
            }
        }
        true
    }

    /// `D(M)`: the subsets whose principal minor is non-singular.
    pub fn delta_matroid(&self) -> SetSystem {
        let n = self.len();
        assert!(n < 32, "delta_matroid enumerates 2^n minors; n = {n} is too large");
        let fam: BTreeSet<Mask> = (0..1u64 << n).filter(|&a| self.det_mask(a)).collect();
        SetSystem::from_parts(self.labels.clone(), fam)
    }

    /// Slides `a` over `b`: column `b` is added to column `a`, then row `b`
    /// to row `a`.
    pub fn handle_slide(&self, a: &str, b: &str) -> Result<Self> {
        let (ia, ib) = (self.require_index(a)?, self.require_index(b)?);
        if ia == ib {
            return Err(Error::InvalidElements(format!("cannot slide `{a}` over itself")));
        }
        Ok(self.slide_indices(ia, ib))
    }

    pub fn slide_indices(&self, a: usize, b: usize) -> Self {
        let mut rows = self.rows.clone();
        for r in rows.iter_mut() {
            if *r & bit(b) != 0 {
                *r ^= bit(a);
            }
        }
        let rb = rows[b];
        rows[a] ^= rb;
        Self {
            labels: self.labels.clone(),
            rows,
        }
    }

    pub fn apply_slides(&self, seq: &SlideSequence) -> Result<Self> {
        seq.iter().try_fold(self.clone(), |m, (a, b)| m.handle_slide(a, b))
    }

    /// Reorders rows and columns: new position `p` takes old index `order[p]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.len());
        let rows = order
            .iter()
            .map(|&old_r| {
                order
                    .iter()
                    .enumerate()
                    .filter(|(_, &old_c)| self.get(old_r, old_c))
                    .fold(0u64, |acc, (p, _)| acc | bit(p))
            })
            .collect();
        Self {
            labels: order.iter().map(|&o| self.labels[o].clone()).collect(),
            rows,
        }
    }

    /// Splits a block-diagonal matrix into its `[0]`, `[1]` and
    /// `[[0,1],[1,0]]` blocks, in row order.
    pub fn blocks(&self) -> Result<Vec<Block>> {
        let n = self.len();
        let mut out = Vec::new();
        let mut r = 0;
        while r < n {
            let off = self.rows[r] & !bit(r);
            if off == 0 {
                out.push(if self.get(r, r) { Block::One(r) } else { Block::Zero(r) });
                r += 1;
            } else if r + 1 < n && self.rows[r] == bit(r + 1) && self.rows[r + 1] == bit(r) {
                out.push(Block::Pair(r, r + 1));
                r += 2;
            } else {
                return Err(Error::NotBlockDiagonal(r));
            }
        }
        Ok(out)
    }

    /// Block counts `(i, j, k, 0)` of a block-diagonal matrix.
    pub fn block_signature(&self) -> Result<CanonicalSignature> {
        let mut sig = CanonicalSignature::default();
        for b in self.blocks()? {
            match b {
                Block::Zero(_) => sig.i += 1,
                Block::Pair(..) => sig.j += 1,
                Block::One(_) => sig.k += 1,
            }
        }
        Ok(sig)
    }

    /// Reduces to block-diagonal form with slides and one final reordering.
    ///
    /// Each round takes the lowest remaining element `e` with a diagonal 1
    /// and slides every `f` adjacent to it over `e`. With no diagonal 1
    /// left, a zero row is split off as `[0]`; otherwise the lowest `e` with
    /// its lowest neighbour `f` become a `[[0,1],[1,0]]` block after every
    /// other `i` is cleared: over `f` if `i` only meets `e`, over `e` if it
    /// only meets `f`, over `f` then `e` if it meets both.
    pub fn normalize_blocks(&self) -> BlockNormalization {
        let n = self.len();
        let mut m = self.clone();
        let mut slides = SlideSequence::new();
        let mut remaining = full_mask(n);
        let (mut zeros, mut pairs, mut ones) = (Vec::new(), Vec::new(), Vec::new());
        let mut slide = |m: &mut SymMatrix, a: usize, b: usize| {
            *m = m.slide_indices(a, b);
            slides
                .push(m.labels[a].clone(), m.labels[b].clone())
                .expect("distinct indices");
        };
        while remaining != 0 {
            if let Some(e) = bits(remaining).find(|&e| m.get(e, e)) {
                let nbrs = m.rows[e] & remaining & !bit(e);
                for f in bits(nbrs) {
                    slide(&mut m, f, e);
                }
                ones.push(e);
                remaining &= !bit(e);
                continue;
            }
            if let Some(e) = bits(remaining).find(|&e| m.rows[e] & remaining == 0) {
                zeros.push(e);
                remaining &= !bit(e);
                continue;
            }
            let e = remaining.trailing_zeros() as usize;
            let f = (m.rows[e] & remaining).trailing_zeros() as usize;
            for i in bits(remaining & !bit(e) & !bit(f)) {
                match (m.get(i, e), m.get(i, f)) {
                    (true, false) => slide(&mut m, i, f),
                    (false, true) => slide(&mut m, i, e),
                    (true, true) => {
                        slide(&mut m, i, f);
                        slide(&mut m, i, e);
                    }
                    (false, false) => {}
                }
            }
            pairs.push((e, f));
            remaining &= !(bit(e) | bit(f));
        }
        zeros.sort_unstable();
        pairs.sort_unstable_by_key(|&(e, f)| e.min(f));
        ones.sort_unstable();
        let order: Vec<usize> = zeros
            .iter()
            .copied()
            .chain(pairs.iter().flat_map(|&(e, f)| [e, f]))
            .chain(ones.iter().copied())
            .collect();
        BlockNormalization {
            matrix: m.permuted(&order),
            slides,
            order,
        }
    }

    /// Absorbs every interlaced pair into `[1]` blocks with the three-slide
    /// trick `(a,c), (c,b), (b,a)`, where `c` is the first `[1]` block.
    pub fn eliminate_pairs(&self) -> Result<(SymMatrix, SlideSequence)> {
        let blocks = self.blocks()?;
        let c = blocks
            .iter()
            .find_map(|b| match b {
                Block::One(c) => Some(*c),
                _ => None,
            })
            .ok_or(Error::NoOddBlock)?;
        let mut m = self.clone();
        let mut slides = SlideSequence::new();
        for b in &blocks {
            if let Block::Pair(a, b) = *b {
                for (x, y) in [(a, c), (c, b), (b, a)] {
                    m = m.slide_indices(x, y);
                    slides.push(m.labels[x].clone(), m.labels[y].clone())?;
                }
            }
        }
        Ok((m, slides))
    }

    /// The only symmetric matrix whose 1x1 and 2x2 principal minors match
    /// the singletons and pairs of `d`.
    pub fn candidate(d: &SetSystem) -> Result<Self> {
        if !d.contains_mask(0) {
            return Err(Error::EmptySetNotFeasible);
        }
        let n = d.len();
        let diag: Vec<bool> = (0..n).map(|e| d.contains_mask(bit(e))).collect();
        let mut rows = vec![0u64; n];
        for e in 0..n {
            if diag[e] {
                rows[e] |= bit(e);
            }
            for f in e + 1..n {
                // det [[d_e, x], [x, d_f]] = d_e d_f + x
                if d.contains_mask(bit(e) | bit(f)) ^ (diag[e] && diag[f]) {
                    rows[e] |= bit(f);
                    rows[f] |= bit(e);
                }
            }
        }
        Ok(Self {
            labels: d.ground().to_vec(),
            rows,
        })
    }
}

/// Output of [`SymMatrix::normalize_blocks`]: replaying `slides` and then
/// reordering by `order` turns the input into `matrix`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockNormalization {
    pub matrix: SymMatrix,
    pub slides: SlideSequence,
    pub order: Vec<usize>,
}

/// A twist `d * twist` equal to `D(matrix)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub twist: Mask,
    pub matrix: SymMatrix,
}

/// Finds a GF(2) representation of a delta-matroid, if one exists.
///
/// Twists by the first feasible set in emission order so that the empty set
/// becomes feasible; any representable twist with that property is itself
/// `D(N)` for some `N`, and `N` is forced by the small minors.
pub fn binary_representation(d: &SetSystem) -> Result<Option<Representation>> {
    if !d.is_delta_matroid() {
        return Err(Error::NotADeltaMatroid);
    }
    let f0 = d.sorted_masks()[0];
    let twisted = d.twist_mask(f0);
    let matrix = SymMatrix::candidate(&twisted)?;
    if matrix.delta_matroid().feasible_masks() == twisted.feasible_masks() {
        Ok(Some(Representation { twist: f0, matrix }))
    } else {
        Ok(None)
    }
}

pub fn is_binary(d: &SetSystem) -> Result<bool> {
    Ok(binary_representation(d)?.is_some())
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::formats::serialize_matrix(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(labels: &[&str], entries: &[&[u8]]) -> SymMatrix {
        SymMatrix::from_bits(labels.iter().copied(), entries).unwrap()
    }

    /// Cofactor expansion along the first row; independent of elimination.
    fn det_cofactor(a: &[Vec<u8>]) -> u8 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        let mut acc = 0;
        for c in 0..n {
            if a[0][c] == 0 {
                continue;
            }
            let minor: Vec<Vec<u8>> = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect())
                .collect();
            acc ^= det_cofactor(&minor);
        }
        acc
    }

    #[test]
    fn det_examples() {
        let anti = m(&["e", "f"], &[&[0, 1], &[1, 0]]);
        assert!(anti.det(&["e", "f"]).unwrap());
        let ones = m(&["e", "f"], &[&[1, 1], &[1, 1]]);
        assert!(!ones.det(&["e", "f"]).unwrap());
        assert!(ones.det::<&str>(&[]).unwrap());
        assert!(ones.det(&["z"]).is_err());
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        for n in 0..=4usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
            for code in 0u32..1 << pairs.len() {
                let mut a = vec![vec![0u8; n]; n];
                for (t, &(i, j)) in pairs.iter().enumerate() {
                    let v = ((code >> t) & 1) as u8;
                    a[i][j] = v;
                    a[j][i] = v;
                }
                let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
                let refs: Vec<&[u8]> = a.iter().map(|r| r.as_slice()).collect();
                let mat = SymMatrix::from_bits(labels, &refs).unwrap();
                for sub in 0u64..1 << n {
                    let idx: Vec<usize> = bits(sub).collect();
                    let minor: Vec<Vec<u8>> =
                        idx.iter().map(|&r| idx.iter().map(|&c| a[r][c]).collect()).collect();
                    assert_eq!(mat.det_mask(sub), det_cofactor(&minor) == 1);
                }
            }
        }
    }

    #[test]
    fn delta_matroid_examples() {
        assert_eq!(
            m(&["e"], &[&[1]]).delta_matroid(),
            SetSystem::from_sets(&["e"], &[&[], &["e"]]).unwrap()
        );
        assert_eq!(
            m(&["e", "f"], &[&[0, 1], &[1, 0]]).delta_matroid(),
            SetSystem::from_sets(&["e", "f"], &[&[], &["e", "f"]]).unwrap()
        );
        assert_eq!(
            m(&["e"], &[&[0]]).delta_matroid(),
            SetSystem::from_sets(&["e"], &[&[]]).unwrap()
        );
    }

    #[test]
    fn matrix_slide_examples() {
        let d = m(&["a", "b"], &[&[0, 0], &[0, 1]]);
        let s = d.handle_slide("a", "b").unwrap();
        assert_eq!(s, m(&["a", "b"], &[&[1, 1], &[1, 1]]));
        assert_eq!(s.handle_slide("a", "b").unwrap(), d);
        let blk = m(&["a", "b", "c"], &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let seq = SlideSequence::from_pairs([("a", "c"), ("c", "b"), ("b", "a")]).unwrap();
        assert_eq!(blk.apply_slides(&seq).unwrap(), SymMatrix::identity(["a", "b", "c"]).unwrap());
        assert!(d.handle_slide("a", "a").is_err());
    }

    #[test]
    fn row_first_order_agrees() {
        let mat = m(&["a", "b", "c"], &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let (a, b) = (0, 1);
        let mut rows = mat.rows.clone();
        rows[a] ^= rows[b];
        for r in rows.iter_mut() {
            if *r & bit(b) != 0 {
                *r ^= bit(a);
            }
        }
        assert_eq!(rows, mat.slide_indices(a, b).rows);
    }

    #[test]
    fn normalize_fixed_point() {
        let c = SymMatrix::canonical(2, 1, 1, &["p", "q", "r", "s", "t"]).unwrap();
        let out = c.normalize_blocks();
        assert_eq!(out.matrix, c);
        assert!(out.slides.is_empty());
        assert_eq!(out.order, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn normalize_diagonal_branch() {
        let ones = m(&["e", "f"], &[&[1, 1], &[1, 1]]);
        let out = ones.normalize_blocks();
        assert_eq!(out.slides, SlideSequence::from_pairs([("f", "e")]).unwrap());
        assert_eq!(out.order, vec![1, 0]);
        assert_eq!(out.matrix, m(&["f", "e"], &[&[0, 0], &[0, 1]]));
    }

    #[test]
    fn normalize_both_neighbours_branch() {
        let jmi = m(&["1", "2", "3"], &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        let out = jmi.normalize_blocks();
        assert_eq!(out.slides, SlideSequence::from_pairs([("3", "2"), ("3", "1")]).unwrap());
        assert_eq!(out.matrix, m(&["3", "1", "2"], &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0]]));
        assert_eq!(out.matrix.block_signature().unwrap(), CanonicalSignature::new(1, 1, 0, 0));
    }

    #[test]
    fn signatures_of_blocks() {
        let a = m(&["a", "b", "c"], &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(a.block_signature().unwrap(), CanonicalSignature::new(1, 1, 0, 0));
        let id = SymMatrix::identity(["a", "b", "c"]).unwrap();
        assert_eq!(id.block_signature().unwrap(), CanonicalSignature::new(0, 0, 3, 0));
        let z = SymMatrix::zero(["a", "b"]).unwrap();
        assert_eq!(z.block_signature().unwrap(), CanonicalSignature::new(2, 0, 0, 0));
        let full = m(&["a", "b", "c"], &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(full.block_signature(), Err(Error::NotBlockDiagonal(0)));
    }

    #[test]
    fn eliminate_pairs_cases() {
        let blk = SymMatrix::canonical(0, 1, 1, &["a", "b", "c"]).unwrap();
        let (out, seq) = blk.eliminate_pairs().unwrap();
        assert_eq!(out, SymMatrix::identity(["a", "b", "c"]).unwrap());
        assert_eq!(seq.len(), 3);
        let single = SymMatrix::identity(["a"]).unwrap();
        let (out, seq) = single.eliminate_pairs().unwrap();
        assert_eq!(out, single);
        assert!(seq.is_empty());
        let two = SymMatrix::canonical(0, 2, 1, &["a", "b", "c", "d", "e"]).unwrap();
        let (out, seq) = two.eliminate_pairs().unwrap();
        assert_eq!(out, SymMatrix::identity(["a", "b", "c", "d", "e"]).unwrap());
        assert_eq!(seq.len(), 6);
        let even = SymMatrix::canonical(1, 1, 0, &["a", "b", "c"]).unwrap();
        assert_eq!(even.eliminate_pairs(), Err(Error::NoOddBlock));
    }

    #[test]
    fn candidate_examples() {
        let pair = SetSystem::from_sets(&["e", "f"], &[&[], &["e", "f"]]).unwrap();
        assert_eq!(SymMatrix::candidate(&pair).unwrap(), m(&["e", "f"], &[&[0, 1], &[1, 0]]));
        let ex3 = SetSystem::from_sets(
            &["1", "2", "3"],
            &[&["1", "2", "3"], &["1", "2"], &["1", "3"], &["2", "3"], &[]],
        )
        .unwrap();
        assert_eq!(
            SymMatrix::candidate(&ex3).unwrap(),
            m(&["1", "2", "3"], &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])
        );
        let odd = SetSystem::from_sets(&["e"], &[&[], &["e"]]).unwrap();
        assert_eq!(SymMatrix::candidate(&odd).unwrap(), m(&["e"], &[&[1]]));
        let coloop = SetSystem::from_sets(&["e"], &[&["e"]]).unwrap();
        assert_eq!(SymMatrix::candidate(&coloop), Err(Error::EmptySetNotFeasible));
    }

    #[test]
    fn binary_examples() {
        let ex3 = SetSystem::from_sets(
            &["1", "2", "3"],
            &[&["1", "2", "3"], &["1", "2"], &["1", "3"], &["2", "3"], &[]],
        )
        .unwrap();
        assert!(!is_binary(&ex3).unwrap());
        for (i, j, k, l) in [(0, 0, 0, 1), (1, 1, 1, 1), (2, 0, 0, 0), (0, 2, 1, 2)] {
            let labels: Vec<String> = (0..i + 2 * j + k + l).map(|t| format!("e{t}")).collect();
            let d = SetSystem::build_canonical(i, j, k, l, &labels).unwrap();
            assert!(is_binary(&d).unwrap(), "D_{{{i},{j},{k},{l}}}");
        }
        let bad = SetSystem::from_sets(&["1", "2", "3"], &[&["1", "2", "3"], &["1", "2"], &["2", "3"], &[]]).unwrap();
        assert_eq!(is_binary(&bad), Err(Error::NotADeltaMatroid));
    }

    #[test]
    fn odd_iff_diagonal_one() {
        for code in 0u64..64 {
            let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
            let mut rows = vec![0u64; 3];
            for (t, &(i, j)) in pairs.iter().enumerate() {
                if (code >> t) & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
            }
            let mat = SymMatrix::new(["a", "b", "c"], rows).unwrap();
            let odd = mat.delta_matroid().parity().unwrap() == crate::Parity::Odd;
            assert_eq!(odd, (0..3).any(|i| mat.get(i, i)));
        }
    }
}
