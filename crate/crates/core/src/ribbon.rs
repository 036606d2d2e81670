//! Bouquets: one-vertex ribbon graphs given by a cyclic rotation of edge
//! ends and a twist bit per edge.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gf2::{CanonicalSignature, SymMatrix};
use crate::setsys::{bit, bits, check_labels, full_mask, Mask, SetSystem};

/// Which neighbour of an edge end to slide over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The end at the following rotation position.
    Next,
    /// The end at the preceding rotation position.
    Prev,
}

#[derive(Debug, Clone)]
pub struct Bouquet {
    edges: Vec<String>,
    rotation: Vec<usize>,
    twisted: Mask,
}

impl Bouquet {
    /// `rotation` lists edge indices; every edge must occur exactly twice.
    pub fn new<S: Into<String>>(
        edges: impl IntoIterator<Item = S>,
        rotation: Vec<usize>,
        twisted: Mask,
    ) -> Result<Self> {
        let edges: Vec<String> = edges.into_iter().map(Into::into).collect();
        check_labels(&edges)?;
        let n = edges.len();
        let mut count = vec![0usize; n];
        for &r in &rotation {
            if r >= n {
                return Err(Error::InvalidElements(format!("edge index {r} out of range")));
            }
            count[r] += 1;
        }
        if let Some(e) = count.iter().position(|&c| c != 2) {
            return Err(Error::InvalidElements(format!(
                "edge `{}` occurs {} times in the rotation",
                edges[e], count[e]
            )));
        }
        if twisted & !full_mask(n) != 0 {
            return Err(Error::InvalidElements("twist mask exceeds the edge set".into()));
        }
        Ok(Self {
            edges,
            rotation,
            twisted,
        })
    }

    pub fn from_word(edges: &[&str], word: &[&str], twisted: &[&str]) -> Result<Self> {
        let idx = |l: &str| {
            edges
                .iter()
                .position(|e| *e == l)
                .ok_or_else(|| Error::InvalidElements(format!("`{l}` is not an edge")))
        };
        let rotation = word.iter().map(|w| idx(w)).collect::<Result<_>>()?;
        let tw = twisted.iter().try_fold(0, |m, t| Ok::<_, Error>(m | bit(idx(t)?)))?;
        Self::new(edges.iter().copied(), rotation, tw)
    }

    /// `B_{i,j,k}`: `i` separate orientable loops, `j` interlaced orientable
    /// pairs, then `k` separate non-orientable loops.
    pub fn build<S: AsRef<str>>(i: usize, j: usize, k: usize, labels: &[S]) -> Result<Self> {
        let n = i + 2 * j + k;
        if labels.len() != n {
            return Err(Error::InvalidArity {
                expected: n,
                actual: labels.len(),
            });
        }
        let mut rotation = Vec::with_capacity(2 * n);
        for e in 0..i {
            rotation.extend([e, e]);
        }
        for p in 0..j {
            let e = i + 2 * p;
            rotation.extend([e, e + 1, e, e + 1]);
        }
        let mut twisted = 0;
        for e in i + 2 * j..n {
            rotation.extend([e, e]);
            twisted |= bit(e);
        }
        Self::new(labels.iter().map(|s| s.as_ref().to_string()), rotation, twisted)
    }

    pub fn edges(&self) -> &[String] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn rotation(&self) -> &[usize] {
        &self.rotation
    }

    pub fn twisted_mask(&self) -> Mask {
        self.twisted
    }

    pub fn is_twisted(&self, e: usize) -> bool {
        self.twisted & bit(e) != 0
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e == label)
    }

    fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::InvalidElements(format!("`{label}` is not an edge")))
    }

    /// Rotation positions of the two ends of each edge, in increasing order.
    fn end_positions(&self) -> Vec<(usize, usize)> {
        let mut first = vec![usize::MAX; self.len()];
        let mut ends = vec![(0, 0); self.len()];
        for (p, &e) in self.rotation.iter().enumerate() {
            if first[e] == usize::MAX {
                first[e] = p;
            } else {
                ends[e] = (first[e], p);
            }
        }
        ends
    }

    fn other_end(&self, p: usize) -> usize {
        let e = self.rotation[p];
        (0..self.rotation.len())
            .find(|&q| q != p && self.rotation[q] == e)
            .expect("every edge has two ends")
    }

    pub fn boundary_components<S: AsRef<str>>(&self, subset: &[S]) -> Result<usize> {
        let m = subset
            .iter()
            .try_fold(0, |m, l| Ok::<_, Error>(m | bit(self.require_index(l.as_ref())?)))?;
        Ok(self.boundary_components_mask(m))
    }

    /// Boundary circles of the spanning ribbon subgraph on `subset`.
    ///
    /// Every kept end has a corner on each side. The vertex boundary joins
    /// the trailing corner of one end to the leading corner of the next; the
    /// two sides of a ribbon join its ends' corners crosswise when untwisted
    /// and straight across when twisted. Each corner then has degree two and
    /// the circles are the cycles.
    pub fn boundary_components_mask(&self, subset: Mask) -> usize {
        let kept: Vec<usize> = self
            .rotation
            .iter()
            .copied()
            .filter(|&e| subset & bit(e) != 0)
            .collect();
        let m = kept.len();
        if m == 0 {
            return 1;
        }
        // corner 2t precedes end t, corner 2t + 1 follows it
        let mut arc = vec![0usize; 2 * m];
        for t in 0..m {
            let next = (t + 1) % m;
            arc[2 * t + 1] = 2 * next;
            arc[2 * next] = 2 * t + 1;
        }
        let mut ribbon = vec![0usize; 2 * m];
        let mut seen_at = vec![usize::MAX; self.len()];
        for (t, &e) in kept.iter().enumerate() {
            let s = seen_at[e];
            if s == usize::MAX {
                seen_at[e] = t;
                continue;
            }
            let pairs = if self.is_twisted(e) {
                [(2 * s + 1, 2 * t + 1), (2 * s, 2 * t)]
            } else {
                [(2 * s + 1, 2 * t), (2 * s, 2 * t + 1)]
            };
            for (x, y) in pairs {
                ribbon[x] = y;
                ribbon[y] = x;
            }
        }
        let mut visited = vec![false; 2 * m];
        let mut circles = 0;
        for start in 0..2 * m {
            if visited[start] {
                continue;
            }
            circles += 1;
            let mut c = start;
            loop {
                visited[c] = true;
                let d = arc[c];
                visited[d] = true;
                c = ribbon[d];
                if c == start {
                    break;
                }
            }
        }
        circles
    }

    /// Edge sets of the spanning quasi-trees.
    pub fn delta_matroid(&self) -> SetSystem {
        let n = self.len();
        assert!(n < 32, "bouquet with {n} edges is too large to enumerate");
        let fam = (0..1u64 << n)
            .filter(|&x| self.boundary_components_mask(x) == 1)
            .collect();
        SetSystem::from_parts(self.edges.clone(), fam)
    }

    /// Diagonal: twist bits. Off-diagonal: interlacement.
    pub fn interlacement_matrix(&self) -> SymMatrix {
        let n = self.len();
        let ends = self.end_positions();
        let mut rows = vec![0u64; n];
        for e in 0..n {
            if self.is_twisted(e) {
                rows[e] |= bit(e);
            }
            let (lo, hi) = ends[e];
            for f in e + 1..n {
                let (p, q) = ends[f];
                let inside = |x: usize| lo < x && x < hi;
                if inside(p) != inside(q) {
                    rows[e] |= bit(f);
                    rows[f] |= bit(e);
                }
            }
        }
        SymMatrix::new(self.edges.clone(), rows).expect("interlacement is symmetric")
    }

    pub fn is_orientable(&self) -> bool {
        self.twisted == 0
    }

    /// Slides the end at rotation position `end` over the adjacent edge `b`.
    ///
    /// When both neighbours of `end` are ends of `b`, the following one is
    /// used.
    pub fn handle_slide(&self, end: usize, b: &str) -> Result<Self> {
        let ib = self.require_index(b)?;
        let len = self.rotation.len();
        if end >= len {
            return Err(Error::InvalidElements(format!("no edge end at position {end}")));
        }
        if self.rotation[end] == ib {
            return Err(Error::InvalidElements(format!("cannot slide `{b}` over itself")));
        }
        if self.rotation[(end + 1) % len] == ib {
            self.slide_toward(end, Side::Next)
        } else if self.rotation[(end + len - 1) % len] == ib {
            self.slide_toward(end, Side::Prev)
        } else {
            Err(Error::NonAdjacentEnds {
                end,
                b: b.to_string(),
            })
        }
    }

    /// Slides the end at `end` over the edge whose end neighbours it on
    /// `side`.
    ///
    /// The end travels along the side of ribbon `b` it touches and is put
    /// back beside the far end of `b`: on the far side of it when `b` is
    /// untwisted, on the near side when the half-twist swaps the ribbon's
    /// sides. Its edge picks up the twist of `b`.
    pub fn slide_toward(&self, end: usize, side: Side) -> Result<Self> {
        let len = self.rotation.len();
        if end >= len {
            return Err(Error::InvalidElements(format!("no edge end at position {end}")));
        }
        let a = self.rotation[end];
        let nb = match side {
            Side::Next => (end + 1) % len,
            Side::Prev => (end + len - 1) % len,
        };
        let b = self.rotation[nb];
        if a == b {
            return Err(Error::InvalidElements(format!(
                "both ends of `{}` are adjacent; nothing to slide over",
                self.edges[a]
            )));
        }
        let q = self.other_end(nb);
        let b_twisted = self.is_twisted(b);
        // with b on the Next side the end rides b's leading edge, which an
        // untwisted ribbon carries to the trailing side of the far end
        let after = matches!((side, b_twisted), (Side::Next, false) | (Side::Prev, true));
        let mut rotation = self.rotation.clone();
        rotation.remove(end);
        let q = if q > end { q - 1 } else { q };
        rotation.insert(if after { q + 1 } else { q }, a);
        let twisted = if b_twisted { self.twisted ^ bit(a) } else { self.twisted };
        Ok(Self {
            edges: self.edges.clone(),
            rotation,
            twisted,
        })
    }

    /// Every `(end, side)` whose neighbour belongs to a different edge.
    pub fn legal_slides(&self) -> Vec<(usize, Side)> {
        let len = self.rotation.len();
        let mut out = Vec::new();
        for p in 0..len {
            let a = self.rotation[p];
            if self.rotation[(p + 1) % len] != a {
                out.push((p, Side::Next));
            }
            if self.rotation[(p + len - 1) % len] != a {
                out.push((p, Side::Prev));
            }
        }
        out
    }

    /// Edge sliding at `end` towards `side`, and the edge it slides over.
    pub fn slide_pair(&self, end: usize, side: Side) -> (usize, usize) {
        let len = self.rotation.len();
        let nb = match side {
            Side::Next => (end + 1) % len,
            Side::Prev => (end + len - 1) % len,
        };
        (self.rotation[end], self.rotation[nb])
    }

    /// Terminal form `(i, j, k, 0)` from the boundary count and orientability.
    pub fn classify(&self) -> CanonicalSignature {
        let n = self.len();
        let i = self.boundary_components_mask(full_mask(n)) - 1;
        if self.is_orientable() {
            CanonicalSignature::new(i, (n - i) / 2, 0, 0)
        } else {
            CanonicalSignature::new(i, 0, n - i, 0)
        }
    }

    /// The rotation started at its lexicographically least position.
    pub fn anchored_rotation(&self) -> Vec<usize> {
        let len = self.rotation.len();
        (0..len.max(1))
            .map(|s| {
                self.rotation[s.min(len)..]
                    .iter()
                    .chain(&self.rotation[..s.min(len)])
                    .copied()
                    .collect::<Vec<_>>()
            })
            .min()
            .unwrap_or_default()
    }

    /// Representative up to cyclic rotation and edge relabelling: edges are
    /// renumbered by first occurrence and the least `(word, twists)` over all
    /// starting points is kept. The `k`-th edge inherits the `k`-th label.
    pub fn canonical_form(&self) -> Self {
        let len = self.rotation.len();
        let n = self.len();
        let mut best: Option<(Vec<usize>, Mask)> = None;
        for s in 0..len {
            let mut map = vec![usize::MAX; n];
            let mut next = 0;
            let mut word = Vec::with_capacity(len);
            for t in 0..len {
                let e = self.rotation[(s + t) % len];
                if map[e] == usize::MAX {
                    map[e] = next;
                    next += 1;
                }
                word.push(map[e]);
            }
            let tw = bits(self.twisted).fold(0, |m, e| m | bit(map[e]));
            let cand = (word, tw);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        let (rotation, twisted) = best.unwrap_or_default();
        Self {
            edges: self.edges.clone(),
            rotation,
            twisted,
        }
    }

    /// All bouquets reachable by ribbon handle slides, as canonical forms
    /// in breadth-first order.
    pub fn slide_orbit(&self, max_edges: usize) -> Result<Vec<Bouquet>> {
        if self.len() > max_edges {
            return Err(Error::TooLarge(format!(
                "{} edges (orbit limit {max_edges})",
                self.len()
            )));
        }
        let start = self.canonical_form();
        let mut seen: HashSet<(Vec<usize>, Mask)> = HashSet::new();
        seen.insert((start.rotation.clone(), start.twisted));
        let mut queue = VecDeque::from([start]);
        let mut out = Vec::new();
        while let Some(b) = queue.pop_front() {
            for (p, side) in b.legal_slides() {
                let next = b.slide_toward(p, side)?.canonical_form();
                if seen.insert((next.rotation.clone(), next.twisted)) {
                    queue.push_back(next);
                }
            }
            out.push(b);
        }
        Ok(out)
    }
}

/// Delta-matroid of a disjoint union of bouquets: the direct sum.
pub fn delta_matroid_of_union(parts: &[Bouquet]) -> Result<SetSystem> {
    parts.iter().try_fold(
        SetSystem::new(Vec::<String>::new(), [0])?,
        |acc, b| acc.direct_sum(&b.delta_matroid()),
    )
}

impl PartialEq for Bouquet {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges
            && self.twisted == other.twisted
            && self.anchored_rotation() == other.anchored_rotation()
    }
}

impl Eq for Bouquet {}

impl Hash for Bouquet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.edges.hash(state);
        self.twisted.hash(state);
        self.anchored_rotation().hash(state);
    }
}

impl fmt::Display for Bouquet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::formats::serialize_bouquet(self))
    }
}
