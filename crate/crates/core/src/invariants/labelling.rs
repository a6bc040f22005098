//! Consistent labellings, their signs and weights, and web invariants `[W, O]`.
//!
//! A consistent labelling is determined by three edge sets `E_1, E_2, E_3`,
//! each covering every interior vertex exactly once, together with a bijection
//! from `{4, …, ν}` to the boundary edges none of them uses.

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use super::orientation::{orientation_violations, PerfectOrientation};
use super::poly::{inversions, Monomial, Polynomial};
use super::specht::permutations;
use crate::error::{Error, Result};
use crate::plabic::{Color, PlabicGraph};

/// `ν = n − 3d + 3` with `d = #black − #white`.
pub fn nu(g: &PlabicGraph) -> Result<usize> {
    let d = g.count_color(Color::Black) as isize - g.count_color(Color::White) as isize;
    let nu = g.n() as isize - 3 * d + 3;
    if d < 1 || nu < 3 {
        return Err(Error::InvalidGraph(format!("black minus white count {d} does not fit n = {}", g.n())));
    }
    Ok(nu as usize)
}

/// A labelling of edges by subsets of `{1, …, ν}`; bit `i − 1` of `labels[e]` is label `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConsistentLabelling {
    labels: Vec<u16>,
}

impl ConsistentLabelling {
    /// Validate the three defining conditions.
    pub fn new(g: &PlabicGraph, labels: Vec<u16>) -> Result<Self> {
        let l = ConsistentLabelling { labels };
        let problems = labelling_violations(g, &l);
        if problems.is_empty() {
            Ok(l)
        } else {
            Err(Error::InvalidLabelling(problems.join("; ")))
        }
    }

    /// Build from explicit label lists per edge.
    pub fn from_sets(g: &PlabicGraph, sets: &[Vec<u8>]) -> Result<Self> {
        let labels = sets.iter().map(|s| s.iter().fold(0u16, |acc, &i| acc | (1 << (i - 1)))).collect();
        Self::new(g, labels)
    }

    pub fn label(&self, e: usize) -> u16 {
        self.labels[e]
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    /// Sorted elements of `ℓ(e)`.
    pub fn label_set(&self, e: usize) -> Vec<u8> {
        (1..=16u8).filter(|&i| self.labels[e] & (1 << (i - 1)) != 0).collect()
    }

    /// `E_i`: edges whose label contains `i`.
    pub fn color_class(&self, i: u8) -> Vec<bool> {
        self.labels.iter().map(|&l| l & (1 << (i - 1)) != 0).collect()
    }

    /// The boundary word `bd(ℓ)`.
    pub fn boundary_word(&self, g: &PlabicGraph) -> Vec<u8> {
        (1..=g.n()).map(|k| self.labels[g.boundary_edge(k)].trailing_zeros() as u8 + 1).collect()
    }

    pub fn monomial(&self, g: &PlabicGraph) -> Monomial {
        Monomial::from_word(&self.boundary_word(g)).expect("labels fit a monomial")
    }

    /// Number of edges with a label of size two.
    pub fn size_two_count(&self) -> usize {
        self.labels.iter().filter(|l| l.count_ones() == 2).count()
    }

    /// `(−1/2)^{#labels of size two}`.
    pub fn weight(&self) -> BigRational {
        half_power(self.size_two_count())
    }
}

fn half_power(k: usize) -> BigRational {
    let mut w = BigRational::one();
    for _ in 0..k {
        w *= BigRational::new((-1).into(), 2.into());
    }
    w
}

/// Every way `ℓ` fails to be a consistent labelling of `G`.
pub fn labelling_violations(g: &PlabicGraph, l: &ConsistentLabelling) -> Vec<String> {
    let mut out = Vec::new();
    if l.labels.len() != g.num_edges() {
        return vec![format!("{} labels for {} edges", l.labels.len(), g.num_edges())];
    }
    let nu = match nu(g) {
        Ok(nu) => nu,
        Err(e) => return vec![e.to_string()],
    };
    let full = (1u32 << nu) - 1;
    for v in g.interior_vertices() {
        let mut union = 0u16;
        for &e in g.rotation(v) {
            if union & l.labels[e] != 0 {
                out.push(format!("labels at vertex {v} are not disjoint"));
            }
            union |= l.labels[e];
        }
        if g.is_white(v) && union != 0b111 {
            out.push(format!("labels at white vertex {v} do not form {{1,2,3}}"));
        }
        if g.is_black(v) && union & 0b111 != 0b111 {
            out.push(format!("labels at black vertex {v} do not contain {{1,2,3}}"));
        }
    }
    let mut big = 0u32;
    for k in 1..=g.n() {
        let label = l.labels[g.boundary_edge(k)];
        if label.count_ones() != 1 {
            out.push(format!("boundary edge {k} has a label of size {}", label.count_ones()));
        } else if label as u32 & !full != 0 {
            out.push(format!("boundary edge {k} has a label above ν = {nu}"));
        } else if label > 0b100 {
            if big & label as u32 != 0 {
                out.push(format!("boundary label {} repeats", label.trailing_zeros() + 1));
            }
            big |= label as u32;
        }
    }
    if big != full & !0b111 {
        out.push("each of 4..ν must appear once on the boundary".into());
    }
    for e in 0..g.num_edges() {
        if !g.is_boundary_edge(e) && l.labels[e] & !0b111 != 0 {
            out.push(format!("interior edge {e} carries a label above 3"));
        }
    }
    out
}

/// Origins and cycle data of `E Δ I(O)` for one color class `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceData {
    /// `(boundary label, sink position)` for each boundary vertex covered by `E`, in boundary order.
    pub origins: Vec<(usize, usize)>,
    /// Number of cycles whose length is 2 modulo 4.
    pub cycles_two_mod_four: usize,
}

impl DifferenceData {
    pub fn origin_inversions(&self) -> usize {
        let positions: Vec<usize> = self.origins.iter().map(|&(_, p)| p).collect();
        inversions(&positions)
    }
}

/// Trace `E Δ I(O)` into paths from covered boundary vertices to sinks and cycles.
pub fn difference_data(g: &PlabicGraph, class: &[bool], o: &PerfectOrientation) -> Result<DifferenceData> {
    let m = g.num_edges();
    let diff: Vec<bool> = (0..m).map(|e| class[e] != o.is_independent(e)).collect();
    let mut seen = vec![false; m];
    let next_edge = |v: usize, seen: &[bool]| g.rotation(v).iter().copied().find(|&e| diff[e] && !seen[e]);
    let mut origins = Vec::new();
    for k in 1..=g.n() {
        let e0 = g.boundary_edge(k);
        if !class[e0] {
            continue;
        }
        seen[e0] = true;
        let mut v = g.other_end(e0, k - 1);
        while let Some(e) = next_edge(v, &seen) {
            seen[e] = true;
            v = g.other_end(e, v);
        }
        let position = o
            .sink_position(v)
            .ok_or_else(|| Error::InvalidLabelling(format!("path from boundary {k} ends at non-sink {v}")))?;
        origins.push((k, position));
    }
    let mut cycles = 0;
    for e in 0..m {
        if diff[e] && !seen[e] {
            let start = g.edge(e)[0];
            let mut v = start;
            let mut length = 0;
            while let Some(f) = next_edge(v, &seen) {
                seen[f] = true;
                length += 1;
                v = g.other_end(f, v);
            }
            if v != start {
                return Err(Error::InvalidLabelling(
                    "symmetric difference has an open path without a boundary end".into(),
                ));
            }
            if length % 4 == 2 {
                cycles += 1;
            }
        }
    }
    Ok(DifferenceData { origins, cycles_two_mod_four: cycles })
}

fn check_orientation(g: &PlabicGraph, o: &PerfectOrientation) -> Result<()> {
    let problems = orientation_violations(g, o);
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidOrientation(problems.join("; ")))
    }
}

fn even_independent(l: &ConsistentLabelling, o: &PerfectOrientation) -> usize {
    (0..l.labels.len()).filter(|&e| o.is_independent(e) && l.labels[e].count_ones().is_multiple_of(2)).count()
}

/// `sign(ℓ, O)` through origin inversions and `inv(bd(ℓ))`, and `wt(ℓ)`.
pub fn labelling_sign_weight(
    g: &PlabicGraph,
    l: &ConsistentLabelling,
    o: &PerfectOrientation,
) -> Result<(i32, BigRational)> {
    let problems = labelling_violations(g, l);
    if !problems.is_empty() {
        return Err(Error::InvalidLabelling(problems.join("; ")));
    }
    check_orientation(g, o)?;
    let mut exponent = inversions(&l.boundary_word(g)) + even_independent(l, o);
    for i in 1..=3 {
        let data = difference_data(g, &l.color_class(i), o)?;
        exponent += data.cycles_two_mod_four + data.origin_inversions();
    }
    Ok((if exponent.is_multiple_of(2) { 1 } else { -1 }, l.weight()))
}

/// The decorated boundary word: each letter `i ≤ 3` carries the sink position of its origin.
pub fn decorated_boundary_word(
    g: &PlabicGraph,
    l: &ConsistentLabelling,
    o: &PerfectOrientation,
) -> Result<Vec<(u8, Option<usize>)>> {
    let word = l.boundary_word(g);
    let mut out: Vec<(u8, Option<usize>)> = word.iter().map(|&w| (w, None)).collect();
    for i in 1..=3 {
        for (k, p) in difference_data(g, &l.color_class(i), o)?.origins {
            out[k - 1].1 = Some(p);
        }
    }
    Ok(out)
}

/// `sign(ℓ, O)` through the sign of the decorated boundary word, ordered
/// `1_1 < … < 1_d < 2_1 < … < 3_d < 4 < … < ν`.
pub fn labelling_sign_decorated(g: &PlabicGraph, l: &ConsistentLabelling, o: &PerfectOrientation) -> Result<i32> {
    let problems = labelling_violations(g, l);
    if !problems.is_empty() {
        return Err(Error::InvalidLabelling(problems.join("; ")));
    }
    check_orientation(g, o)?;
    let decorated = decorated_boundary_word(g, l, o)?;
    let mut exponent = inversions(&decorated) + even_independent(l, o);
    for i in 1..=3 {
        exponent += difference_data(g, &l.color_class(i), o)?.cycles_two_mod_four;
    }
    Ok(if exponent.is_multiple_of(2) { 1 } else { -1 })
}

/// Edge sets covering every interior vertex exactly once, as bit masks.
pub fn interior_matchings(g: &PlabicGraph) -> Result<Vec<u128>> {
    if g.num_edges() > 128 {
        return Err(Error::InvalidGraph("labelling enumeration supports at most 128 edges".into()));
    }
    let mut covered = vec![false; g.num_vertices()];
    let mut out = Vec::new();
    fn rec(g: &PlabicGraph, covered: &mut Vec<bool>, mask: u128, out: &mut Vec<u128>) {
        let Some(v) = g.interior_vertices().find(|&v| !covered[v]) else {
            out.push(mask);
            return;
        };
        covered[v] = true;
        for &e in g.rotation(v) {
            if mask & (1 << e) != 0 {
                continue;
            }
            let u = g.other_end(e, v);
            if u == v || covered[u] {
                continue;
            }
            covered[u] = true;
            rec(g, covered, mask | (1 << e), out);
            covered[u] = false;
        }
        covered[v] = false;
    }
    rec(g, &mut covered, 0, &mut out);
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

struct Prepared {
    mask: u128,
    boundary: u128,
    sign: i32,
}

struct Setup {
    matchings: Vec<Prepared>,
    boundary_mask: u128,
    independent: u128,
    nu: usize,
}

fn prepare(g: &PlabicGraph, o: &PerfectOrientation) -> Result<Setup> {
    check_orientation(g, o)?;
    let nu = nu(g)?;
    let boundary_mask: u128 = (1..=g.n()).fold(0, |acc, k| acc | (1 << g.boundary_edge(k)));
    let independent: u128 = o.independent_edges().iter().fold(0, |acc, &e| acc | (1 << e));
    let mut matchings = Vec::new();
    for mask in interior_matchings(g)? {
        let class: Vec<bool> = (0..g.num_edges()).map(|e| mask & (1 << e) != 0).collect();
        let data = difference_data(g, &class, o)?;
        let exponent = data.cycles_two_mod_four + data.origin_inversions();
        matchings.push(Prepared { mask, boundary: mask & boundary_mask, sign: if exponent % 2 == 0 { 1 } else { -1 } });
    }
    Ok(Setup { matchings, boundary_mask, independent, nu })
}

/// Visit every consistent labelling as `(E_1, E_2, E_3, boundary word, sign)` in
/// a deterministic order, in parallel over `E_1`; `f` folds into per-thread accumulators.
fn fold_labellings<A: Send>(
    g: &PlabicGraph,
    setup: &Setup,
    init: impl Fn() -> A + Sync + Send,
    f: impl Fn(&mut A, [u128; 3], &[u8], i32) + Sync + Send,
) -> Vec<A> {
    let n = g.n();
    let big_labels: Vec<u8> = (4..=setup.nu as u8).collect();
    let orders = permutations(big_labels.len());
    setup
        .matchings
        .par_iter()
        .map(|m1| {
            let mut acc = init();
            for m2 in &setup.matchings {
                if m1.boundary & m2.boundary != 0 {
                    continue;
                }
                for m3 in &setup.matchings {
                    if (m1.boundary | m2.boundary) & m3.boundary != 0 {
                        continue;
                    }
                    let masks = [m1.mask, m2.mask, m3.mask];
                    let odd = m1.mask ^ m2.mask ^ m3.mask;
                    let even_in_i = (setup.independent & !odd).count_ones();
                    let base = m1.sign * m2.sign * m3.sign * if even_in_i.is_multiple_of(2) { 1 } else { -1 };
                    let mut word = vec![0u8; n];
                    let mut free = Vec::new();
                    for k in 1..=n {
                        let e = g.boundary_edge(k);
                        word[k - 1] = match masks.iter().position(|m| m & (1 << e) != 0) {
                            Some(i) => i as u8 + 1,
                            None => {
                                free.push(k - 1);
                                0
                            }
                        };
                    }
                    debug_assert_eq!(
                        setup.boundary_mask & !(m1.boundary | m2.boundary | m3.boundary) != 0,
                        !free.is_empty()
                    );
                    for order in &orders {
                        for (slot, &label) in free.iter().zip(order.iter()) {
                            word[*slot] = big_labels[label];
                        }
                        let sign = base * if inversions(&word).is_multiple_of(2) { 1 } else { -1 };
                        f(&mut acc, masks, &word, sign);
                    }
                }
            }
            acc
        })
        .collect()
}

fn labels_from(g: &PlabicGraph, masks: [u128; 3], word: &[u8]) -> Vec<u16> {
    let mut labels = vec![0u16; g.num_edges()];
    for (i, m) in masks.iter().enumerate() {
        for (e, label) in labels.iter_mut().enumerate() {
            if m & (1 << e) != 0 {
                *label |= 1 << i;
            }
        }
    }
    for k in 1..=g.n() {
        let e = g.boundary_edge(k);
        if labels[e] == 0 {
            labels[e] = 1 << (word[k - 1] - 1);
        }
    }
    labels
}

/// Every consistent labelling of `G`. Perfect orientability is required only
/// to fix the enumeration's validity checks; the set does not depend on `O`.
pub fn enumerate_consistent_labellings(g: &PlabicGraph) -> Result<Vec<ConsistentLabelling>> {
    let o = match super::orientation::find_perfect_orientation(g) {
        Ok(o) => o,
        Err(Error::NotOrientable) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let setup = prepare(g, &o)?;
    let parts = fold_labellings(g, &setup, Vec::new, |acc: &mut Vec<ConsistentLabelling>, masks, word, _| {
        acc.push(ConsistentLabelling { labels: labels_from(g, masks, word) });
    });
    Ok(parts.into_iter().flatten().collect())
}

/// Every consistent labelling with its sign for `O` and its weight.
pub fn signed_labellings(
    g: &PlabicGraph,
    o: &PerfectOrientation,
) -> Result<Vec<(ConsistentLabelling, i32, BigRational)>> {
    let setup = prepare(g, o)?;
    let parts = fold_labellings(
        g,
        &setup,
        Vec::new,
        |acc: &mut Vec<(ConsistentLabelling, i32, BigRational)>, masks, word, sign| {
            let l = ConsistentLabelling { labels: labels_from(g, masks, word) };
            let w = l.weight();
            acc.push((l, sign, w));
        },
    );
    Ok(parts.into_iter().flatten().collect())
}

/// `[W, O] = Σ_ℓ sign(ℓ, O) wt(ℓ) x_{bd(ℓ)}`.
pub fn web_invariant(g: &PlabicGraph, o: &PerfectOrientation) -> Result<Polynomial> {
    let setup = prepare(g, o)?;
    let n = g.n();
    // Accumulate integer multiples of 2^-k per monomial, then convert.
    let parts =
        fold_labellings(g, &setup, std::collections::HashMap::<(Monomial, u32), i64>::new, |acc, masks, word, sign| {
            let [a, b, c] = masks;
            let at_least_two = (a & b) | (a & c) | (b & c);
            let size_two = (at_least_two & !(a & b & c)).count_ones();
            let sign = if size_two % 2 == 0 { sign } else { -sign };
            let m = Monomial::from_word(word).expect("word fits");
            *acc.entry((m, size_two)).or_insert(0) += sign as i64;
        });
    let mut p = Polynomial::zero(n);
    let mut merged: std::collections::BTreeMap<(Monomial, u32), i64> = std::collections::BTreeMap::new();
    for part in parts {
        for (key, c) in part {
            *merged.entry(key).or_insert(0) += c;
        }
    }
    for ((m, k), c) in merged {
        if c != 0 {
            p.add_term(m, BigRational::new(c.into(), num_bigint::BigInt::from(2).pow(k)));
        }
    }
    Ok(p)
}

/// `Σ sign · weight · x_bd` over explicitly listed labellings; a slow
/// counterpart of [`web_invariant`] for cross-checks.
pub fn invariant_from_labellings(g: &PlabicGraph, labelled: &[(ConsistentLabelling, i32, BigRational)]) -> Polynomial {
    let mut p = Polynomial::zero(g.n());
    for (l, s, w) in labelled {
        p.add_term(l.monomial(g), w * BigRational::from_integer((*s).into()));
    }
    p
}
