//! Skein relations on web invariants.
//!
//! A [`FormalWebSum`] is a rational combination of `[G, O]` with every graph
//! stored in canonical form under its canonical orientation (the first one
//! found by the orientation search); other orientations are folded in through
//! `sign(O, O')`. The crossing rule turns `s_i · [W, O]` into such a sum and
//! [`reduce_to_basis`] rewrites it until only augmented webs remain.

mod crossing;
mod rules;

use std::cmp::Reverse;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

pub use crossing::{apply_transposition, crossing_terms, CrossingTerms};
pub use rules::{apply_rule, find_features, white_count, Feature, RuleApplication};

use crate::error::{Error, Result};
use crate::invariants::{
    find_perfect_orientation, is_admissible, orientation_sign, web_invariant, PerfectOrientation, Polynomial,
};
use crate::plabic::{canonical_encoding, canonicalize, PlabicGraph};
use crate::webs::{enumerate_aw, is_augmented_web};

/// One term of a [`FormalWebSum`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebTerm {
    pub graph: PlabicGraph,
    pub orientation: PerfectOrientation,
    pub coefficient: BigRational,
}

/// A finite rational combination of web invariants on `n` boundary vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalWebSum {
    n: usize,
    terms: BTreeMap<Vec<u8>, WebTerm>,
}

/// Canonical graph, canonical orientation and `sign(O, O_canonical)`.
fn normalize(g: &PlabicGraph, o: &PerfectOrientation) -> Result<(Vec<u8>, PlabicGraph, PerfectOrientation, i32)> {
    let (cg, relabel) = canonicalize(g)?;
    let moved = o.relabelled(&cg, &relabel)?;
    if !is_admissible(&cg, &moved) {
        return Err(Error::Skein("orientation has a directed cycle around a short face".into()));
    }
    let canonical = find_perfect_orientation(&cg)?;
    let sign = orientation_sign(&cg, &moved, &canonical)?;
    Ok((canonical_encoding(&cg)?, cg, canonical, sign))
}

impl FormalWebSum {
    pub fn new(n: usize) -> Self {
        FormalWebSum { n, terms: BTreeMap::new() }
    }

    /// The single term `[G, O]`.
    pub fn single(g: &PlabicGraph, o: &PerfectOrientation) -> Result<Self> {
        let mut s = FormalWebSum::new(g.n());
        s.add(g, o, &BigRational::one())?;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical-encoding order.
    pub fn terms(&self) -> impl Iterator<Item = &WebTerm> {
        self.terms.values()
    }

    /// Add `c · [G, O]`.
    pub fn add(&mut self, g: &PlabicGraph, o: &PerfectOrientation, c: &BigRational) -> Result<()> {
        if g.n() != self.n {
            return Err(Error::Skein(format!("graph on {} boundary vertices added to a sum on {}", g.n(), self.n)));
        }
        if c.is_zero() {
            return Ok(());
        }
        let (key, cg, canonical, sign) = normalize(g, o)?;
        let value = c * BigRational::from_integer(sign.into());
        self.add_canonical(key, cg, canonical, value);
        Ok(())
    }

    fn add_canonical(&mut self, key: Vec<u8>, graph: PlabicGraph, orientation: PerfectOrientation, c: BigRational) {
        match self.terms.get_mut(&key) {
            Some(t) => {
                t.coefficient += c;
                if t.coefficient.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, WebTerm { graph, orientation, coefficient: c });
            }
        }
    }

    /// `self += c · other`.
    pub fn add_sum(&mut self, other: &FormalWebSum, c: &BigRational) {
        assert_eq!(self.n, other.n, "sums on different boundaries");
        for (key, t) in &other.terms {
            self.add_canonical(key.clone(), t.graph.clone(), t.orientation.clone(), &t.coefficient * c);
        }
    }

    pub fn scaled(&self, c: &BigRational) -> FormalWebSum {
        let mut out = FormalWebSum::new(self.n);
        out.add_sum(self, c);
        out
    }

    /// Coefficient of the graph isomorphic to `G` (under its canonical orientation).
    pub fn coefficient(&self, g: &PlabicGraph) -> Result<BigRational> {
        let key = canonical_encoding(g)?;
        Ok(self.terms.get(&key).map(|t| t.coefficient.clone()).unwrap_or_else(BigRational::zero))
    }

    /// `Σ c [G, O]` as a polynomial.
    pub fn invariant(&self) -> Result<Polynomial> {
        let parts: Vec<Polynomial> = self
            .terms
            .values()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|t| web_invariant(&t.graph, &t.orientation).map(|p| p.scaled(&t.coefficient)))
            .collect::<Result<_>>()?;
        let mut out = Polynomial::zero(self.n);
        for p in &parts {
            out.add_scaled(p, &BigRational::one());
        }
        Ok(out)
    }

    /// A list of `{coefficient, web, orientation}` records.
    pub fn to_json(&self) -> Value {
        let list: Vec<Value> = self
            .terms
            .values()
            .map(|t| {
                json!({
                    "coefficient": t.coefficient.to_string(),
                    "web": t.graph.to_json(),
                    "orientation": t.orientation.to_json(),
                })
            })
            .collect();
        Value::Array(list)
    }

    pub fn from_json(n: usize, value: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("formal web sum: {msg}"));
        let list = value.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut out = FormalWebSum::new(n);
        for rec in list {
            let c: BigRational = rec["coefficient"]
                .as_str()
                .ok_or_else(|| bad("coefficient must be a string"))?
                .parse()
                .map_err(|_| bad("unparsable coefficient"))?;
            let g = PlabicGraph::from_json(&rec["web"])?;
            let o = match rec.get("orientation") {
                Some(ov) => PerfectOrientation::from_json(&g, ov)?,
                None => find_perfect_orientation(&g)?,
            };
            out.add(&g, &o, &c)?;
        }
        Ok(out)
    }
}

/// Rewrite the smallest feature of `G` that some rule accepts.
pub fn reduce_step(g: &PlabicGraph, o: &PerfectOrientation) -> Result<FormalWebSum> {
    let features = find_features(g);
    if features.is_empty() {
        return Err(Error::NoReducibleFeature);
    }
    for f in &features {
        if let Some(app) = apply_rule(g, f)? {
            let sign = orientation_sign(g, o, &app.lhs)?;
            let mut out = FormalWebSum::new(g.n());
            for (c, h, oh) in &app.terms {
                let c = c * BigRational::from_integer(sign.into());
                out.add(h, oh, &c)?;
            }
            return Ok(out);
        }
    }
    Err(Error::Skein(format!("no rule accepts any of the {} features present", features.len())))
}

/// Rewrite every term that is not an augmented web until none is left. The
/// result is supported on augmented webs under their canonical orientations.
pub fn reduce_to_basis(sum: &FormalWebSum) -> Result<FormalWebSum> {
    let mut done = FormalWebSum::new(sum.n);
    let mut pending: BTreeMap<(Reverse<usize>, Vec<u8>), WebTerm> = BTreeMap::new();
    let route = |key: Vec<u8>,
                 t: WebTerm,
                 done: &mut FormalWebSum,
                 pending: &mut BTreeMap<(Reverse<usize>, Vec<u8>), WebTerm>| {
        if is_augmented_web(&t.graph) {
            done.add_canonical(key, t.graph, t.orientation, t.coefficient);
        } else {
            let k = (Reverse(white_count(&t.graph)), key);
            match pending.get_mut(&k) {
                Some(p) => p.coefficient += t.coefficient,
                None => {
                    pending.insert(k, t);
                }
            }
        }
    };
    for (key, t) in &sum.terms {
        route(key.clone(), t.clone(), &mut done, &mut pending);
    }
    while let Some(((Reverse(whites), _), t)) = pending.pop_first() {
        if t.coefficient.is_zero() {
            continue;
        }
        let step = reduce_step(&t.graph, &t.orientation)?;
        for (key, r) in step.terms {
            if white_count(&r.graph) >= whites {
                return Err(Error::Skein("a rewrite did not lower the number of white vertices".into()));
            }
            let coefficient = r.coefficient * &t.coefficient;
            route(key, WebTerm { coefficient, ..r }, &mut done, &mut pending);
        }
    }
    Ok(done)
}

/// The matrix of `s_i` on the augmented web basis of `(n, d)`, in
/// `enumerate_aw` order: column `j` expands `s_i · [W_j, O_{W_j}]`.
pub fn sn_matrix(i: usize, n: usize, d: usize) -> Result<Vec<Vec<BigRational>>> {
    let basis = enumerate_aw(n, d)?;
    let index: BTreeMap<Vec<u8>, usize> = basis.iter().enumerate().map(|(k, w)| (w.encoding(), k)).collect();
    let columns: Vec<Vec<BigRational>> = basis
        .par_iter()
        .map(|w| -> Result<Vec<BigRational>> {
            let o = find_perfect_orientation(w.graph())?;
            let reduced = reduce_to_basis(&apply_transposition(i, w.graph(), &o)?)?;
            let mut col = vec![BigRational::zero(); basis.len()];
            for (key, t) in &reduced.terms {
                let k = index.get(key).ok_or_else(|| Error::Skein("reduction left a web outside AW(n, d)".into()))?;
                col[*k] = t.coefficient.clone();
            }
            Ok(col)
        })
        .collect::<Result<_>>()?;
    let size = basis.len();
    Ok((0..size).map(|r| (0..size).map(|c| columns[c][r].clone()).collect()).collect())
}
