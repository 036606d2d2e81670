//! Canonical forms of binary delta-matroids under handle slides.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::gf2::{is_binary, CanonicalSignature, SymMatrix};
use crate::setsys::{Mask, Parity, SetSystem, SlideSequence};

/// Default cap on visited states for orbit searches.
pub const DEFAULT_ORBIT_LIMIT: usize = 1_000_000;

/// Certificate that a sequence of slides takes the input to its canonical
/// form.
///
/// `relabeling` lists the ground in canonical block order; reordering
/// `apply_sequence(input, slides)` by it yields `terminal`, which is
/// `build_canonical(signature, relabeling)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub signature: CanonicalSignature,
    pub slides: SlideSequence,
    pub relabeling: Vec<String>,
    pub terminal: SetSystem,
}

fn represented_matrix(d: &SetSystem) -> Result<SymMatrix> {
    if !d.is_delta_matroid() {
        return Err(Error::NotADeltaMatroid);
    }
    let m = SymMatrix::candidate(d)?;
    if m.delta_matroid().feasible_masks() != d.feasible_masks() {
        return Err(Error::NotBinary);
    }
    Ok(m)
}

/// Takes a binary delta-matroid with the empty set feasible to `D_{i,j,0}`
/// (even) or `D_{i,0,k}` with `k >= 1` (odd).
///
/// The work happens on the representing matrix; since slides commute with
/// taking `D(M)`, the matrix slide sequence applies verbatim to `d`.
pub fn normalize(d: &SetSystem) -> Result<ClassificationResult> {
    let m = represented_matrix(d)?;
    let blocks = m.normalize_blocks();
    let mut slides = blocks.slides;
    let mut mat = blocks.matrix;
    let sig = mat.block_signature()?;
    if sig.k > 0 && sig.j > 0 {
        let (out, more) = mat.eliminate_pairs()?;
        slides.extend(&more);
        mat = out;
    }
    let signature = mat.block_signature()?;
    let relabeling = mat.labels().to_vec();
    let terminal = signature.build(&relabeling)?;
    Ok(ClassificationResult {
        signature,
        slides,
        relabeling,
        terminal,
    })
}

/// [`normalize`], then replays the slides on the set system itself and
/// checks both routes land on the same terminal form.
pub fn normalize_checked(d: &SetSystem) -> Result<ClassificationResult> {
    let res = normalize(d)?;
    let via_sets = d.apply_sequence(&res.slides)?.reordered(&res.relabeling)?;
    if via_sets.feasible_masks() != res.terminal.feasible_masks() {
        return Err(Error::LiftMismatch(format!(
            "slides on the set system give\n{via_sets}but the matrix route gives\n{}",
            res.terminal
        )));
    }
    let via_matrix = SymMatrix::candidate(d)?
        .apply_slides(&res.slides)?
        .delta_matroid();
    if via_matrix != res.terminal {
        return Err(Error::LiftMismatch("matrix replay disagrees with terminal form".into()));
    }
    let parity_odd = d.parity()? == Parity::Odd;
    if parity_odd != (res.signature.k > 0) {
        return Err(Error::LiftMismatch("terminal parity differs from input parity".into()));
    }
    Ok(res)
}

/// Every `D_{p,q,r}` reachable by slides.
pub fn reachable_signatures(d: &SetSystem) -> Result<Vec<CanonicalSignature>> {
    let res = normalize(d)?;
    let sig = res.signature;
    if sig.k == 0 {
        return Ok(vec![sig]);
    }
    let free = d.len() - sig.i;
    Ok((0..=(free - 1) / 2)
        .map(|l| CanonicalSignature::new(sig.i, l, free - 2 * l, 0))
        .collect())
}

/// Breadth-first closure of `d` under all handle slides, deduplicated by
/// exact equality. Members are returned in discovery order.
pub fn slide_orbit(d: &SetSystem, limit: usize) -> Result<Vec<SetSystem>> {
    let n = d.len();
    let mut seen: HashSet<BTreeSet<Mask>> = HashSet::new();
    seen.insert(d.feasible_masks().clone());
    let mut queue = VecDeque::from([d.clone()]);
    let mut out = Vec::new();
    while let Some(cur) = queue.pop_front() {
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let next = cur.slide_indices(a, b);
                if !seen.contains(next.feasible_masks()) {
                    if seen.len() >= limit {
                        return Err(Error::LimitExceeded(limit));
                    }
                    seen.insert(next.feasible_masks().clone());
                    queue.push_back(next);
                }
            }
        }
        out.push(cur);
    }
    Ok(out)
}

/// The signature of the canonical form `d` is isomorphic to, if any.
/// With `with_coloops` false only `l = 0` forms are considered.
pub fn match_canonical(d: &SetSystem, with_coloops: bool) -> Option<CanonicalSignature> {
    let n = d.len();
    let (min, max) = (d.min_feasible_size().ok()?, d.max_feasible_size().ok()?);
    let size = d.family_size();
    let labels: Vec<String> = (0..n).map(|t| format!("c{t}")).collect();
    for l in 0..=if with_coloops { n } else { 0 } {
        for j in 0..=(n - l) / 2 {
            for k in 0..=n - l - 2 * j {
                let i = n - l - 2 * j - k;
                // D_{i,j,k,l} has 2^(j+k) feasible sets of sizes l..=l+2j+k
                if min != l || max != l + 2 * j + k || (j + k >= 63) || size != 1usize << (j + k) {
                    continue;
                }
                let c = SetSystem::build_canonical(i, j, k, l, &labels).ok()?;
                if c.is_isomorphic(d) {
                    return Some(CanonicalSignature::new(i, j, k, l));
                }
            }
        }
    }
    None
}

/// Outcome of searching a slide orbit for the forms `D_{i,j,k,l}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub found: bool,
    /// Least attained signature, if any.
    pub signature: Option<CanonicalSignature>,
    pub attained: BTreeSet<CanonicalSignature>,
    /// Every attained signature has `i = |E| - max`, `l = min`,
    /// `2j + k = max - min` and `k = 0` exactly when `d` is even.
    pub bookkeeping_ok: bool,
    /// Every `j` allowed by parity and width occurs among the attained forms.
    pub spectrum_complete: bool,
    pub orbit_size: usize,
}

/// Searches the slide orbit of a binary delta-matroid for `D_{i,j,k,l}`.
///
/// A negative answer only reports what the search saw within `limit`.
pub fn check_conjecture_instance(d: &SetSystem, limit: usize) -> Result<ConjectureReport> {
    if !d.is_delta_matroid() {
        return Err(Error::NotADeltaMatroid);
    }
    if !is_binary(d)? {
        return Err(Error::NotBinary);
    }
    let n = d.len();
    let (min, max) = (d.min_feasible_size()?, d.max_feasible_size()?);
    let even = d.parity()? == Parity::Even;
    let orbit = slide_orbit(d, limit)?;
    let attained: BTreeSet<CanonicalSignature> =
        orbit.iter().filter_map(|m| match_canonical(m, true)).collect();
    let bookkeeping_ok = attained.iter().all(|s| {
        s.i == n - max && s.l == min && 2 * s.j + s.k == max - min && (s.k == 0) == even
    });
    let width = max - min;
    let spectrum_complete = if even {
        attained.iter().any(|s| s.j == width / 2)
    } else {
        (0..=width.saturating_sub(1) / 2).all(|j| attained.iter().any(|s| s.j == j))
    };
    Ok(ConjectureReport {
        found: !attained.is_empty(),
        signature: attained.iter().next().copied(),
        attained,
        bookkeeping_ok,
        spectrum_complete,
        orbit_size: orbit.len(),
    })
}
