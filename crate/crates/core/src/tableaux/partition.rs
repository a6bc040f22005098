use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::rect::{enumerate_rect, RectTableau};
use super::shape::FlamingoShape;
use crate::error::{Error, Result};

/// A set partition of `[n]`. Blocks are kept sorted by minimum, elements ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut blocks: Vec<Vec<usize>> = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} out of range or repeated")));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = (1..=n).find(|&x| !seen[x]) {
            return Err(Error::InvalidPartition(format!("element {x} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok())
    }

    /// The blocks in canonical order (by minimum).
    pub fn ordered(&self) -> OrderedSetPartition {
        OrderedSetPartition { n: self.n, blocks: self.blocks.clone() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PartitionJson { n: self.n, blocks: self.blocks.clone() }).expect("partition serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: PartitionJson = serde_json::from_value(value.clone())?;
        Self::new(raw.n, raw.blocks)
    }
}

impl std::fmt::Display for SetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A set partition together with a total order on its blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let unordered = SetPartition::new(n, blocks.clone())?;
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(OrderedSetPartition { n: unordered.n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn unordered(&self) -> SetPartition {
        SetPartition::new(self.n, self.blocks.clone()).expect("blocks already validated")
    }

    /// Apply `σ` (one-line notation, 1-based) elementwise, keeping the block order.
    pub fn permuted(&self, sigma: &[usize]) -> OrderedSetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut image: Vec<usize> = b.iter().map(|&x| sigma[x - 1]).collect();
                image.sort_unstable();
                image
            })
            .collect();
        OrderedSetPartition { n: self.n, blocks }
    }
}

/// Whether the arcs `(p, q)` and `(s, t)` cross when drawn on one side of a line.
pub fn arcs_cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let (p, q) = (a.0.min(a.1), a.0.max(a.1));
    let (s, t) = (b.0.min(b.1), b.0.max(b.1));
    (p < s && s < q && q < t) || (s < p && p < t && t < q)
}

/// Whether two disjoint blocks of size at least `r` are `r`-weakly noncrossing.
pub fn is_r_weakly_noncrossing(a: &[usize], b: &[usize], r: usize) -> Result<bool> {
    if r < 2 {
        return Err(Error::InvalidPartition(format!("r must be at least 2, got {r}")));
    }
    if a.len() < r || b.len() < r {
        return Err(Error::InvalidPartition(format!("blocks must have at least {r} elements")));
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a.iter().any(|x| b.binary_search(x).is_ok()) {
        return Err(Error::InvalidPartition("blocks overlap".into()));
    }
    for i in 0..r - 2 {
        if arcs_cross((a[i], a[i + 1]), (b[i], b[i + 1])) {
            return Ok(false);
        }
    }
    for &x in &a[r - 1..] {
        for &y in &b[r - 1..] {
            if arcs_cross((a[r - 2], x), (b[r - 2], y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `π` belongs to `WNC(n, d, r)` for the given shape.
pub fn is_wnc(pi: &SetPartition, shape: &FlamingoShape) -> bool {
    if pi.n != shape.n || pi.blocks.len() != shape.d || pi.blocks.iter().any(|b| b.len() < shape.r) {
        return false;
    }
    for i in 0..pi.blocks.len() {
        for j in i + 1..pi.blocks.len() {
            if !is_r_weakly_noncrossing(&pi.blocks[i], &pi.blocks[j], shape.r).unwrap_or(false) {
                return false;
            }
        }
    }
    true
}

/// The partition read off a tableau in `T(n, d, r)` by matching consecutive rows.
pub fn rect_to_wnc(t: &RectTableau) -> SetPartition {
    let shape = t.shape();
    let rows = t.rows();
    let n = shape.n;
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut last_step_arcs = Vec::new();
    for i in 0..shape.r - 1 {
        let arcs = catalan_matching(&rows[i], &rows[i + 1]);
        for &(a, b) in &arcs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        if i == shape.r - 2 {
            last_step_arcs = arcs;
        }
    }
    for m in t.missing() {
        let (a, _) = last_step_arcs
            .iter()
            .filter(|&&(a, b)| a < m && m < b)
            .min_by_key(|&&(a, b)| b - a)
            .copied()
            .expect("every missing element lies under an arc");
        let (ra, rm) = (find(&mut parent, a), find(&mut parent, m));
        parent[rm] = ra;
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 1..=n {
        let root = find(&mut parent, x);
        blocks.entry(root).or_default().push(x);
    }
    SetPartition::new(n, blocks.into_values().collect()).expect("components partition [n]")
}

/// The noncrossing matching of left endpoints `lefts` with right endpoints `rights`.
fn catalan_matching(lefts: &[usize], rights: &[usize]) -> Vec<(usize, usize)> {
    let mut points: Vec<(usize, bool)> = lefts.iter().map(|&x| (x, true)).collect();
    points.extend(rights.iter().map(|&x| (x, false)));
    points.sort_unstable();
    let mut stack = Vec::new();
    let mut arcs = Vec::new();
    for (x, is_left) in points {
        if is_left {
            stack.push(x);
        } else {
            let a = stack.pop().expect("rows satisfy the ballot condition");
            arcs.push((a, x));
        }
    }
    arcs
}

/// The tableau whose rows are the `i`-th smallest elements of the blocks (`i < r`)
/// and the block maxima.
pub fn wnc_to_rect(pi: &SetPartition, r: usize) -> Result<RectTableau> {
    let shape = FlamingoShape::new(pi.n, pi.blocks.len(), r)?;
    if !is_wnc(pi, &shape) {
        return Err(Error::InvalidPartition(format!("{pi} is not {r}-weakly noncrossing")));
    }
    RectTableau::new(shape, wnc_key_sets(pi, r).into_iter().map(|s| s.into_iter().collect()).collect())
}

/// For `i = 1..r-1` the set of `i`-th smallest block elements, then the set of block maxima.
pub fn wnc_key_sets(pi: &SetPartition, r: usize) -> Vec<BTreeSet<usize>> {
    let mut sets: Vec<BTreeSet<usize>> =
        (0..r - 1).map(|i| pi.blocks.iter().filter_map(|b| b.get(i).copied()).collect()).collect();
    sets.push(pi.blocks.iter().map(|b| *b.last().expect("blocks are nonempty")).collect());
    sets
}

/// `WNC(n, d, r)`, generated through `T(n, d, r)` and sorted.
pub fn enumerate_wnc(shape: &FlamingoShape) -> Vec<SetPartition> {
    let mut out: Vec<SetPartition> = enumerate_rect(shape).iter().map(rect_to_wnc).collect();
    out.sort();
    out
}

/// `WNC(n, d, r)` by filtering every set partition of `[n]`; slow, used as an oracle.
pub fn enumerate_wnc_filtered(shape: &FlamingoShape) -> Vec<SetPartition> {
    let mut out: Vec<SetPartition> = all_set_partitions(shape.n).into_iter().filter(|p| is_wnc(p, shape)).collect();
    out.sort();
    out
}

/// Every set partition of `[n]`, via restricted growth strings.
pub fn all_set_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(k: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        let n = rgs.len();
        if k == n {
            let mut blocks = vec![Vec::new(); max + 1];
            for (x, &b) in rgs.iter().enumerate() {
                blocks[b].push(x + 1);
            }
            out.push(SetPartition { n, blocks });
            return;
        }
        for b in 0..=max + 1 {
            rgs[k] = b;
            rec(k + 1, max.max(b), rgs, out);
        }
    }
    if n == 0 {
        return vec![SetPartition { n: 0, blocks: vec![] }];
    }
    rec(1, 0, &mut rgs, &mut out);
    out
}
