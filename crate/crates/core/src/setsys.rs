//! Set systems, delta-matroids and the handle slide.
//!
//! A [`SetSystem`] is a ground set of labelled elements together with a
//! family of feasible subsets. Subsets are stored as `u64` bit masks, bit `i`
//! standing for the `i`-th element of the ground declaration, so ground sets
//! hold at most [`MAX_GROUND`] elements.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A subset of the ground set, indexed by ground position.
pub type Mask = u64;

pub const MAX_GROUND: usize = 64;

#[inline]
pub(crate) fn bit(i: usize) -> Mask {
    1u64 << i
}

#[inline]
pub(crate) fn full_mask(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(t)
        }
    })
}

/// Orders subsets by cardinality, then lexicographically by element order.
pub fn canonical_cmp(a: Mask, b: Mask) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let d = a ^ b;
        if d == 0 {
            Ordering::Equal
        } else if a & (d & d.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn check_labels<S: AsRef<str>>(labels: &[S]) -> Result<()> {
    if labels.len() > MAX_GROUND {
        return Err(Error::TooLarge(format!(
            "{} elements (at most {MAX_GROUND} supported)",
            labels.len()
        )));
    }
    let mut seen = BTreeSet::new();
    for l in labels {
        let l = l.as_ref();
        if !is_valid_label(l) {
            return Err(Error::InvalidElements(format!("`{l}` is not a valid label")));
        }
        if !seen.insert(l) {
            return Err(Error::InvalidElements(format!("`{l}` listed twice")));
        }
    }
    Ok(())
}

/// Even or odd delta-matroid: all feasible sets share a parity, or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

/// Ordered list of `(a, b)` pairs, each step sliding `a` over `b`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SlideSequence {
    steps: Vec<(String, String)>,
}

impl SlideSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<A: Into<String>, B: Into<String>>(
        pairs: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self> {
        let mut s = Self::new();
        for (a, b) in pairs {
            s.push(a, b)?;
        }
        Ok(s)
    }

    pub fn push(&mut self, a: impl Into<String>, b: impl Into<String>) -> Result<()> {
        let (a, b) = (a.into(), b.into());
        if a == b {
            return Err(Error::InvalidElements(format!("cannot slide `{a}` over itself")));
        }
        self.steps.push((a, b));
        Ok(())
    }

    pub fn extend(&mut self, other: &SlideSequence) {
        self.steps.extend(other.steps.iter().cloned());
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[(String, String)] {
        &self.steps
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.steps.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }
}

/// A finite ground set with a family of feasible subsets.
///
/// Equality is label based: two systems over the same labels are equal when
/// they have the same feasible sets, whatever order their grounds were
/// declared in.
#[derive(Debug, Clone)]
pub struct SetSystem {
    ground: Vec<String>,
    feasibles: BTreeSet<Mask>,
}

impl SetSystem {
    pub fn new<S: Into<String>>(
        ground: impl IntoIterator<Item = S>,
        feasibles: impl IntoIterator<Item = Mask>,
    ) -> Result<Self> {
        let ground: Vec<String> = ground.into_iter().map(Into::into).collect();
        check_labels(&ground)?;
        let full = full_mask(ground.len());
        let feasibles: BTreeSet<Mask> = feasibles.into_iter().collect();
        if let Some(bad) = feasibles.iter().find(|&&m| m & !full != 0) {
            return Err(Error::InvalidElements(format!(
                "feasible mask {bad:#x} exceeds a ground set of {} elements",
                ground.len()
            )));
        }
        Ok(Self { ground, feasibles })
    }

    /// Builds a system from label lists; repeated sets collapse.
    pub fn from_sets(ground: &[&str], sets: &[&[&str]]) -> Result<Self> {
        let mut sys = Self::new(ground.iter().copied(), [])?;
        for s in sets {
            let m = sys.mask_of(s)?;
            sys.feasibles.insert(m);
        }
        Ok(sys)
    }

    pub(crate) fn from_parts(ground: Vec<String>, feasibles: BTreeSet<Mask>) -> Self {
        debug_assert!(ground.len() <= MAX_GROUND);
        Self { ground, feasibles }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn feasible_masks(&self) -> &BTreeSet<Mask> {
        &self.feasibles
    }

    pub fn family_size(&self) -> usize {
        self.feasibles.len()
    }

    pub fn has_empty_family(&self) -> bool {
        self.feasibles.is_empty()
    }

    pub fn contains_mask(&self, m: Mask) -> bool {
        self.feasibles.contains(&m)
    }

    pub fn is_feasible(&self, set: &[&str]) -> Result<bool> {
        Ok(self.contains_mask(self.mask_of(set)?))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.ground.iter().position(|g| g == label)
    }

    pub(crate) fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::InvalidElements(format!("`{label}` is not in the ground set")))
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        labels
            .iter()
            .try_fold(0, |m, l| Ok(m | bit(self.require_index(l.as_ref())?)))
    }

    pub fn labels_of(&self, m: Mask) -> Vec<&str> {
        bits(m).map(|i| self.ground[i].as_str()).collect()
    }

    /// Feasible masks in emission order: by cardinality, then lexicographic.
    pub fn sorted_masks(&self) -> Vec<Mask> {
        let mut v: Vec<Mask> = self.feasibles.iter().copied().collect();
        v.sort_by(|&a, &b| canonical_cmp(a, b));
        v
    }

    pub fn feasible_sets(&self) -> Vec<Vec<&str>> {
        self.sorted_masks().into_iter().map(|m| self.labels_of(m)).collect()
    }

    /// The same system with its ground declared in `order`.
    pub fn reordered<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        if order.len() != self.ground.len() {
            return Err(Error::InvalidArity {
                expected: self.ground.len(),
                actual: order.len(),
            });
        }
        let idx: Vec<usize> = order
            .iter()
            .map(|l| self.require_index(l.as_ref()))
            .collect::<Result<_>>()?;
        if idx.iter().unique().count() != idx.len() {
            return Err(Error::InvalidElements("repeated label in reordering".into()));
        }
        // new position p holds old element idx[p]
        let feasibles = self
            .feasibles
            .iter()
            .map(|&m| {
                idx.iter()
                    .enumerate()
                    .filter(|(_, &old)| m & bit(old) != 0)
                    .fold(0, |acc, (p, _)| acc | bit(p))
            })
            .collect();
        Ok(Self::from_parts(
            order.iter().map(|l| l.as_ref().to_string()).collect(),
            feasibles,
        ))
    }

    /// Symmetric Exchange Axiom, by brute force.
    pub fn is_delta_matroid(&self) -> bool {
        if self.feasibles.is_empty() {
            return false;
        }
        for &x in &self.feasibles {
            for &y in &self.feasibles {
                let d = x ^ y;
                for u in bits(d) {
                    // {u, v} is a set, so v = u toggles u alone
                    if !bits(d).any(|v| self.feasibles.contains(&(x ^ (bit(u) | bit(v))))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn parity(&self) -> Result<Parity> {
        let mut it = self.feasibles.iter();
        let first = it.next().ok_or(Error::EmptyFamily)?.count_ones() % 2;
        if it.all(|m| m.count_ones() % 2 == first) {
            Ok(Parity::Even)
        } else {
            Ok(Parity::Odd)
        }
    }

    pub fn max_feasible_size(&self) -> Result<usize> {
        self.feasibles
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .ok_or(Error::EmptyFamily)
    }

    pub fn min_feasible_size(&self) -> Result<usize> {
        self.feasibles
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .ok_or(Error::EmptyFamily)
    }

    /// Slides `a` over `b`: `F △ {X ∪ a : X ∪ b ∈ F, X ⊆ E − {a, b}}`.
    pub fn handle_slide(&self, a: &str, b: &str) -> Result<Self> {
        let (ia, ib) = (self.require_index(a)?, self.require_index(b)?);
        if ia == ib {
            return Err(Error::InvalidElements(format!("cannot slide `{a}` over itself")));
        }
        Ok(self.slide_indices(ia, ib))
    }

    pub fn slide_indices(&self, a: usize, b: usize) -> Self {
        Self::from_parts(self.ground.clone(), slide_family(&self.feasibles, a, b))
    }

    pub fn apply_sequence(&self, seq: &SlideSequence) -> Result<Self> {
        seq.iter()
            .try_fold(self.clone(), |d, (a, b)| d.handle_slide(a, b))
    }

    pub fn twist<S: AsRef<str>>(&self, by: &[S]) -> Result<Self> {
        Ok(self.twist_mask(self.mask_of(by)?))
    }

    pub fn twist_mask(&self, a: Mask) -> Self {
        Self::from_parts(
            self.ground.clone(),
            self.feasibles.iter().map(|&x| x ^ a).collect(),
        )
    }

    pub fn direct_sum(&self, other: &SetSystem) -> Result<Self> {
        if let Some(dup) = other.ground.iter().find(|g| self.ground.contains(g)) {
            return Err(Error::GroundOverlap(dup.clone()));
        }
        let n = self.ground.len();
        if n + other.ground.len() > MAX_GROUND {
            return Err(Error::TooLarge(format!(
                "direct sum has {} elements",
                n + other.ground.len()
            )));
        }
        let ground = self.ground.iter().chain(&other.ground).cloned().collect();
        let feasibles = self
            .feasibles
            .iter()
            .cartesian_product(other.feasibles.iter())
            .map(|(&f, &g)| f | (g << n))
            .collect();
        Ok(Self::from_parts(ground, feasibles))
    }

    /// `D_{i,j,k,l}`: `i` copies of `({e},{∅})`, `j` of `({e,f},{∅,{e,f}})`,
    /// `k` of `({e},{∅,{e}})` and `l` of `({e},{{e}})`, labels consumed in
    /// that order.
    pub fn build_canonical<S: AsRef<str>>(
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        labels: &[S],
    ) -> Result<Self> {
        let expected = i + 2 * j + k + l;
        if labels.len() != expected {
            return Err(Error::InvalidArity {
                expected,
                actual: labels.len(),
            });
        }
        check_labels(labels)?;
        let mut fam: BTreeSet<Mask> = [0].into();
        let mut pos = i;
        let mut extend = |choices: &[Mask]| {
            fam = fam
                .iter()
                .cartesian_product(choices)
                .map(|(&f, &c)| f | c)
                .collect();
        };
        for _ in 0..j {
            extend(&[0, bit(pos) | bit(pos + 1)]);
            pos += 2;
        }
        for _ in 0..k {
            extend(&[0, bit(pos)]);
            pos += 1;
        }
        for _ in 0..l {
            extend(&[bit(pos)]);
            pos += 1;
        }
        Ok(Self::from_parts(
            labels.iter().map(|s| s.as_ref().to_string()).collect(),
            fam,
        ))
    }

    pub fn is_loop(&self, e: &str) -> Result<bool> {
        let m = bit(self.require_index(e)?);
        Ok(self.feasibles.iter().all(|f| f & m == 0))
    }

    pub fn is_coloop(&self, e: &str) -> Result<bool> {
        let m = bit(self.require_index(e)?);
        Ok(self.feasibles.iter().all(|f| f & m != 0))
    }

    pub fn has_coloop(&self) -> bool {
        let all = self.feasibles.iter().fold(full_mask(self.len()), |acc, f| acc & f);
        all != 0
    }

    /// Deletion: keeps the feasible sets avoiding `e`.
    pub fn delete(&self, e: &str) -> Result<Self> {
        let idx = self.require_index(e)?;
        if self.is_coloop(e)? {
            return Err(Error::CoLoopDeletion(e.to_string()));
        }
        let low = bit(idx) - 1;
        let feasibles = self
            .feasibles
            .iter()
            .filter(|&&f| f & bit(idx) == 0)
            .map(|&f| (f & low) | ((f >> (idx + 1)) << idx))
            .collect();
        let mut ground = self.ground.clone();
        ground.remove(idx);
        Ok(Self::from_parts(ground, feasibles))
    }

    /// Number of feasible sets of each cardinality.
    pub fn size_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.len() + 1];
        for f in &self.feasibles {
            h[f.count_ones() as usize] += 1;
        }
        h
    }

    /// Brute force over all ground bijections; meant for small grounds.
    pub fn is_isomorphic(&self, other: &SetSystem) -> bool {
        let n = self.len();
        if n != other.len()
            || self.feasibles.len() != other.feasibles.len()
            || self.size_histogram() != other.size_histogram()
        {
            return false;
        }
        // elements may only map to elements lying in equally many feasible sets
        let degree = |s: &SetSystem, i: usize| s.feasibles.iter().filter(|f| *f & bit(i) != 0).count();
        let da: Vec<usize> = (0..n).map(|i| degree(self, i)).collect();
        let db: Vec<usize> = (0..n).map(|i| degree(other, i)).collect();
        (0..n).permutations(n).any(|perm| {
            (0..n).all(|i| da[i] == db[perm[i]])
                && self.feasibles.iter().all(|&f| {
                    let img = bits(f).fold(0, |acc, i| acc | bit(perm[i]));
                    other.feasibles.contains(&img)
                })
        })
    }
}

pub(crate) fn slide_family(fam: &BTreeSet<Mask>, a: usize, b: usize) -> BTreeSet<Mask> {
    let (ma, mb) = (bit(a), bit(b));
    let mut out = fam.clone();
    for &f in fam {
        if f & mb != 0 && f & ma == 0 {
            let g = (f & !mb) | ma;
            if !out.remove(&g) {
                out.insert(g);
            }
        }
    }
    out
}

impl PartialEq for SetSystem {
    fn eq(&self, other: &Self) -> bool {
        if self.ground == other.ground {
            return self.feasibles == other.feasibles;
        }
        match other.reordered(&self.ground) {
            Ok(o) => o.feasibles == self.feasibles,
            Err(_) => false,
        }
    }
}

impl Eq for SetSystem {}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::formats::serialize_set_system(self))
    }
}
