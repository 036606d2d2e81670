//! Exhaustive small-case sweeps checking the structural theorems.
//!
//! Each sweep enumerates every object of a given size and returns a
//! [`SweepReport`] with the number of instances covered and any
//! counterexamples found. Sweeps run in parallel on the rayon pool; reports
//! are assembled in enumeration order, so output is deterministic.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::classify::{
    check_conjecture_instance, match_canonical, normalize_checked, reachable_signatures, slide_orbit,
    DEFAULT_ORBIT_LIMIT,
};
use crate::gf2::{is_binary, SymMatrix};
use crate::ribbon::Bouquet;
use crate::setsys::{bit, Parity, SetSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    /// What was swept, e.g. `1024 matrices × 12 pairs`.
    pub summary: String,
    pub instances: usize,
    pub violations: Vec<String>,
}

impl SweepReport {
    fn new(name: &str, summary: String, instances: usize, violations: Vec<String>) -> Self {
        Self {
            name: name.to_string(),
            summary,
            instances,
            violations,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "checked {}: OK", self.summary)
        } else {
            write!(f, "checked {}: FAILED ({} violations)", self.summary, self.violations.len())?;
            for v in self.violations.iter().take(5) {
                write!(f, "\n  {v}")?;
            }
            Ok(())
        }
    }
}

/// Labels `1..=n`.
pub fn numeric_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// All `2^(n(n+1)/2)` symmetric GF(2) matrices on labels `1..=n`.
pub fn all_symmetric_matrices(n: usize) -> Vec<SymMatrix> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let labels = numeric_labels(n);
    (0u64..1 << cells.len())
        .map(|code| {
            let mut rows = vec![0u64; n];
            for (t, &(i, j)) in cells.iter().enumerate() {
                if (code >> t) & 1 == 1 {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
            }
            SymMatrix::new(labels.clone(), rows).expect("symmetric by construction")
        })
        .collect()
}

/// Every binary delta-matroid on `1..=n`: all twists of all `D(M)`.
pub fn all_binary_delta_matroids(n: usize) -> Vec<SetSystem> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in all_symmetric_matrices(n) {
        let d = m.delta_matroid();
        for a in 0..1u64 << n {
            let t = d.twist_mask(a);
            if seen.insert(t.feasible_masks().clone()) {
                out.push(t);
            }
        }
    }
    out
}

fn ordered_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
}

/// Every bouquet with `n` edges labelled `1..=n`, up to cyclic rotation,
/// with every twist assignment.
pub fn all_bouquets(n: usize) -> Vec<Bouquet> {
    fn fill(word: &mut Vec<usize>, left: &mut [u8], out: &mut Vec<Vec<usize>>) {
        if left.iter().all(|&c| c == 0) {
            out.push(word.clone());
            return;
        }
        for e in 0..left.len() {
            if left[e] > 0 {
                left[e] -= 1;
                word.push(e);
                fill(word, left, out);
                word.pop();
                left[e] += 1;
            }
        }
    }
    let mut words = Vec::new();
    fill(&mut Vec::new(), &mut vec![2u8; n], &mut words);
    let labels = numeric_labels(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in words {
        let plain = Bouquet::new(labels.clone(), w, 0).expect("double occurrence word");
        if !seen.insert(plain.anchored_rotation()) {
            continue;
        }
        for tw in 0..1u64 << n {
            out.push(Bouquet::new(labels.clone(), plain.rotation().to_vec(), tw).expect("valid"));
        }
    }
    out
}

/// The worked example: slide 1 over 2 leaves the class of delta-matroids.
pub fn verify_slide_escape() -> SweepReport {
    let d = SetSystem::from_sets(
        &["1", "2", "3"],
        &[&["1", "2", "3"], &["1", "2"], &["1", "3"], &["2", "3"], &[]],
    )
    .expect("valid");
    let want = SetSystem::from_sets(&["1", "2", "3"], &[&["1", "2", "3"], &["1", "2"], &["2", "3"], &[]])
        .expect("valid");
    let got = d.handle_slide("1", "2").expect("valid slide");
    let mut v = Vec::new();
    if got != want {
        v.push(format!("slide gave\n{got}"));
    }
    if !d.is_delta_matroid() {
        v.push("input is not a delta-matroid".into());
    }
    if got.is_delta_matroid() {
        v.push("slid system is still a delta-matroid".into());
    }
    SweepReport::new("escape", "1 set system × 1 slide".into(), 1, v)
}

/// `D(M_ab) = D(M)_ab` for every symmetric matrix of size `n` and every
/// ordered pair.
pub fn verify_con2_n(n: usize) -> SweepReport {
    let mats = all_symmetric_matrices(n);
    let violations: Vec<String> = mats
        .par_iter()
        .flat_map_iter(|m| {
            let d = m.delta_matroid();
            ordered_pairs(n)
                .filter(move |&(a, b)| m.slide_indices(a, b).delta_matroid() != d.slide_indices(a, b))
                .map(move |(a, b)| format!("slide {} over {} on\n{m}", a + 1, b + 1))
                .collect::<Vec<_>>()
        })
        .collect();
    let pairs = n * n.saturating_sub(1);
    SweepReport::new(
        "con2",
        format!("{} matrices × {pairs} pairs", mats.len()),
        mats.len(),
        violations,
    )
}

pub fn verify_con2(max_n: usize) -> Vec<SweepReport> {
    (1..=max_n).map(verify_con2_n).collect()
}

/// The three minor identities behind the matrix/set-system agreement:
/// for `a ∉ Y` and for `a, b ∈ Y` the minor is unchanged by sliding `a`
/// over `b`; for `a ∈ Y, b ∉ Y` it picks up `det M[Y △ {a, b}]`.
pub fn verify_det_identities(max_n: usize) -> SweepReport {
    let mut total = 0;
    let mut violations = Vec::new();
    for n in 1..=max_n {
        let mats = all_symmetric_matrices(n);
        total += mats.len();
        let v: Vec<String> = mats
            .par_iter()
            .flat_map_iter(|m| {
                let mut bad = Vec::new();
                for (a, b) in ordered_pairs(n) {
                    let s = m.slide_indices(a, b);
                    for y in 0..1u64 << n {
                        let (ha, hb) = (y & bit(a) != 0, y & bit(b) != 0);
                        let want = if ha && !hb {
                            m.det_mask(y) ^ m.det_mask(y ^ bit(a) ^ bit(b))
                        } else {
                            m.det_mask(y)
                        };
                        if s.det_mask(y) != want {
                            bad.push(format!("pair ({a},{b}) subset {y:#b} on\n{m}"));
                        }
                    }
                }
                bad
            })
            .collect();
        violations.extend(v);
    }
    SweepReport::new(
        "det-identities",
        format!("{total} matrices × all pairs × all minors"),
        total,
        violations,
    )
}

/// Ribbon slides against set-system slides and matrix slides, for every
/// bouquet with at most `max_edges` edges and every legal slide.
pub fn verify_ths(max_edges: usize) -> SweepReport {
    let bouquets: Vec<Bouquet> = (1..=max_edges).flat_map(all_bouquets).collect();
    let results: Vec<(usize, Vec<String>)> = bouquets
        .par_iter()
        .map(|b| {
            let d = b.delta_matroid();
            let m = b.interlacement_matrix();
            let mut bad = Vec::new();
            let slides = b.legal_slides();
            for &(p, side) in &slides {
                let (a, over) = b.slide_pair(p, side);
                let s = b.slide_toward(p, side).expect("legal slide");
                if s.delta_matroid() != d.slide_indices(a, over) {
                    bad.push(format!("D mismatch sliding end {p} ({side:?}) on\n{b}"));
                }
                if s.interlacement_matrix() != m.slide_indices(a, over) {
                    bad.push(format!("interlacement mismatch sliding end {p} ({side:?}) on\n{b}"));
                }
            }
            (slides.len(), bad)
        })
        .collect();
    let slides: usize = results.iter().map(|r| r.0).sum();
    let violations = results.into_iter().flat_map(|r| r.1).collect();
    SweepReport::new(
        "ths",
        format!("{} bouquets × {slides} slides", bouquets.len()),
        bouquets.len(),
        violations,
    )
}

fn check_normal_form(d: &SetSystem) -> (usize, Vec<String>) {
    let mut bad = Vec::new();
    let res = match normalize_checked(d) {
        Ok(r) => r,
        Err(e) => return (0, vec![format!("normalize failed ({e}) on\n{d}")]),
    };
    let sig = res.signature;
    let even = d.parity().expect("non-empty") == Parity::Even;
    if (sig.k == 0) != even || (!even && sig.j != 0) {
        bad.push(format!("terminal form {sig} has the wrong shape for\n{d}"));
    }
    if sig.i != d.len() - d.max_feasible_size().expect("non-empty") {
        bad.push(format!("i = {} disagrees with the largest feasible set of\n{d}", sig.i));
    }
    let orbit = match slide_orbit(d, DEFAULT_ORBIT_LIMIT) {
        Ok(o) => o,
        Err(e) => return (0, vec![format!("orbit failed ({e}) on\n{d}")]),
    };
    let found: BTreeSet<_> = orbit.iter().filter_map(|m| match_canonical(m, false)).collect();
    if found.iter().any(|s| s.i != sig.i) {
        bad.push(format!("orbit reaches forms {found:?} with i ≠ {}", sig.i));
    }
    let expected: BTreeSet<_> = reachable_signatures(d).expect("normalized").into_iter().collect();
    if found != expected {
        bad.push(format!("orbit reaches {found:?}, expected {expected:?} for\n{d}"));
    }
    (orbit.len(), bad)
}

/// Normal form, uniqueness of `i` and the reachable spectrum for every
/// binary delta-matroid with the empty set feasible on up to `max_n`
/// elements.
pub fn verify_thm1(max_n: usize) -> SweepReport {
    let systems: Vec<SetSystem> = (1..=max_n)
        .flat_map(|n| all_symmetric_matrices(n).into_iter().map(|m| m.delta_matroid()))
        .collect();
    let results: Vec<(usize, Vec<String>)> = systems.par_iter().map(check_normal_form).collect();
    let states: usize = results.iter().map(|r| r.0).sum();
    let violations = results.into_iter().flat_map(|r| r.1).collect();
    SweepReport::new(
        "thm1",
        format!("{} delta-matroids ({states} orbit states)", systems.len()),
        systems.len(),
        violations,
    )
}

/// Closure of binary delta-matroids under slides, and of binary matroids
/// (equicardinal families) in particular.
pub fn verify_closure(max_n: usize) -> SweepReport {
    let systems: Vec<SetSystem> = (1..=max_n).flat_map(all_binary_delta_matroids).collect();
    let results: Vec<(usize, Vec<String>)> = systems
        .par_iter()
        .map(|d| {
            let n = d.len();
            let matroid = d.min_feasible_size() == d.max_feasible_size();
            let mut bad = Vec::new();
            let mut pairs = 0;
            for (a, b) in ordered_pairs(n) {
                pairs += 1;
                let s = d.slide_indices(a, b);
                match is_binary(&s) {
                    Ok(true) => {}
                    Ok(false) => bad.push(format!("slide ({a},{b}) is not binary from\n{d}")),
                    Err(e) => bad.push(format!("slide ({a},{b}) gave {e} from\n{d}")),
                }
                if matroid && s.min_feasible_size() != s.max_feasible_size() {
                    bad.push(format!("slide ({a},{b}) breaks equicardinality of\n{d}"));
                }
            }
            (pairs, bad)
        })
        .collect();
    let pairs: usize = results.iter().map(|r| r.0).sum();
    let violations = results.into_iter().flat_map(|r| r.1).collect();
    SweepReport::new(
        "closure",
        format!("{} binary delta-matroids × {pairs} slides", systems.len()),
        systems.len(),
        violations,
    )
}

pub fn uniform_u24() -> SetSystem {
    SetSystem::new(numeric_labels(4), (0u64..16).filter(|m| m.count_ones() == 2)).expect("valid")
}

/// No set system in the slide orbit of `U_{2,4}` has a coloop.
pub fn verify_u24() -> SweepReport {
    let u = uniform_u24();
    match slide_orbit(&u, DEFAULT_ORBIT_LIMIT) {
        Ok(orbit) => {
            let violations = orbit
                .iter()
                .filter(|d| d.has_coloop())
                .map(|d| format!("coloop in\n{d}"))
                .collect();
            SweepReport::new(
                "u24",
                format!("{} orbit members of U_{{2,4}}", orbit.len()),
                orbit.len(),
                violations,
            )
        }
        Err(e) => SweepReport::new("u24", "U_{2,4} orbit".into(), 0, vec![e.to_string()]),
    }
}

/// Interlacement matrix, bouquet classification and the delta-matroid
/// normal form all agree; and `D(B_{i,j,k}) = D_{i,j,k}`.
pub fn verify_triangle(max_edges: usize, max_example: usize) -> SweepReport {
    let bouquets: Vec<Bouquet> = (1..=max_edges).flat_map(all_bouquets).collect();
    let mut violations: Vec<String> = bouquets
        .par_iter()
        .flat_map_iter(|b| {
            let mut bad = Vec::new();
            let d = b.delta_matroid();
            if b.interlacement_matrix().delta_matroid() != d {
                bad.push(format!("interlacement matrix misrepresents\n{b}"));
            }
            match crate::classify::normalize(&d) {
                Ok(res) if res.signature == b.classify() => {}
                Ok(res) => bad.push(format!("classify {} vs normalize {} on\n{b}", b.classify(), res.signature)),
                Err(e) => bad.push(format!("normalize failed ({e}) on\n{b}")),
            }
            if b.classify().i != b.len() - d.max_feasible_size().expect("non-empty") {
                bad.push(format!("hole count disagrees with largest quasi-tree on\n{b}"));
            }
            bad
        })
        .collect();
    let mut forms = 0;
    for n in 0..=max_example {
        for j in 0..=n / 2 {
            for k in 0..=n - 2 * j {
                let i = n - 2 * j - k;
                forms += 1;
                let labels = numeric_labels(n);
                let b = Bouquet::build(i, j, k, &labels).expect("arity");
                let want = SetSystem::build_canonical(i, j, k, 0, &labels).expect("arity");
                if b.delta_matroid() != want {
                    violations.push(format!("D(B_{{{i},{j},{k}}}) ≠ D_{{{i},{j},{k}}}"));
                }
            }
        }
    }
    SweepReport::new(
        "triangle",
        format!("{} bouquets, {forms} canonical forms", bouquets.len()),
        bouquets.len() + forms,
        violations,
    )
}

/// Searches slide orbits of every binary delta-matroid on up to `max_n`
/// elements for the extended forms `D_{i,j,k,l}`. Misses are findings of
/// the bounded search, not counterexamples.
pub fn explore_conjecture(max_n: usize, limit: usize) -> SweepReport {
    let systems: Vec<SetSystem> = (1..=max_n).flat_map(all_binary_delta_matroids).collect();
    let results: Vec<(bool, Option<String>)> = systems
        .par_iter()
        .map(|d| match check_conjecture_instance(d, limit) {
            Ok(r) if r.found && r.bookkeeping_ok => (r.spectrum_complete, None),
            Ok(r) => (
                r.spectrum_complete,
                Some(format!("no form with matching bookkeeping (attained {:?}) for\n{d}", r.attained)),
            ),
            Err(e) => (false, Some(format!("search failed ({e}) for\n{d}"))),
        })
        .collect();
    let spectrum = results.iter().filter(|r| r.0).count();
    let violations: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    SweepReport::new(
        "conjecture",
        format!(
            "{} binary delta-matroids, {} reach D_{{i,j,k,l}}, {spectrum} with the full j-spectrum",
            systems.len(),
            systems.len() - violations.len()
        ),
        systems.len(),
        violations,
    )
}
