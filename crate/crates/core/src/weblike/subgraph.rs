//! 3-weblike subgraphs: edge multiplicities summing to 3 around every interior vertex.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::invariants::ConsistentLabelling;
use crate::plabic::PlabicGraph;

/// An assignment of multiplicities in `{0, 1, 2, 3}` to the edges of `host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeblikeSubgraph {
    host: PlabicGraph,
    multiplicity: Vec<u8>,
}

impl WeblikeSubgraph {
    pub fn new(host: &PlabicGraph, multiplicity: Vec<u8>) -> Result<Self> {
        if multiplicity.len() != host.num_edges() {
            return Err(Error::InvalidGraph(format!(
                "{} multiplicities for {} edges",
                multiplicity.len(),
                host.num_edges()
            )));
        }
        if let Some(e) = multiplicity.iter().position(|&m| m > 3) {
            return Err(Error::InvalidGraph(format!("edge {e} has multiplicity above 3")));
        }
        for v in host.interior_vertices() {
            let total: u32 = host.rotation(v).iter().map(|&e| multiplicity[e] as u32).sum();
            if total != 3 {
                return Err(Error::InvalidGraph(format!("multiplicities around vertex {v} sum to {total}")));
            }
        }
        Ok(WeblikeSubgraph { host: host.clone(), multiplicity })
    }

    /// The subgraph `|ℓ(e) ∩ {1, 2, 3}|` of a consistent labelling.
    pub fn from_labelling(host: &PlabicGraph, l: &ConsistentLabelling) -> Result<Self> {
        Self::new(host, l.labels().iter().map(|&x| (x & 0b111).count_ones() as u8).collect())
    }

    pub fn host(&self) -> &PlabicGraph {
        &self.host
    }

    pub fn multiplicity(&self) -> &[u8] {
        &self.multiplicity
    }

    /// `d(W′)`: the number of edges of multiplicity 2.
    pub fn d(&self) -> usize {
        self.multiplicity.iter().filter(|&&m| m == 2).count()
    }

    pub fn to_json(&self) -> Value {
        json!({ "multiplicity": self.multiplicity, "d": self.d() })
    }
}

/// Every weblike subgraph of `g`, in lexicographic order of multiplicity vectors.
pub fn enumerate_weblike(g: &PlabicGraph) -> Vec<WeblikeSubgraph> {
    let mut out = Vec::new();
    for_each_weblike(g, |m| out.push(WeblikeSubgraph { host: g.clone(), multiplicity: m.to_vec() }));
    out
}

/// Visit the multiplicity vector of every weblike subgraph of `g`, in lexicographic order.
pub fn for_each_weblike(g: &PlabicGraph, mut visit: impl FnMut(&[u8])) {
    // The last edge (in index order) at each interior vertex closes its sum.
    let mut last = vec![None; g.num_vertices()];
    for v in g.interior_vertices() {
        last[v] = g.rotation(v).iter().copied().max();
    }
    let ends: Vec<Vec<usize>> =
        (0..g.num_edges()).map(|e| g.edge(e).into_iter().filter(|&v| !g.is_boundary(v)).collect()).collect();
    let mut load = vec![0u8; g.num_vertices()];
    let mut current = vec![0u8; g.num_edges()];
    fn rec(
        e: usize,
        ends: &[Vec<usize>],
        last: &[Option<usize>],
        load: &mut [u8],
        current: &mut [u8],
        visit: &mut dyn FnMut(&[u8]),
    ) {
        if e == current.len() {
            visit(current);
            return;
        }
        for k in 0..=3u8 {
            let fits = ends[e].iter().all(|&v| {
                let total = load[v] + k;
                total <= 3 && (last[v] != Some(e) || total == 3)
            });
            if !fits {
                continue;
            }
            for &v in &ends[e] {
                load[v] += k;
            }
            current[e] = k;
            rec(e + 1, ends, last, load, current, visit);
            for &v in &ends[e] {
                load[v] -= k;
            }
        }
        current[e] = 0;
    }
    rec(0, &ends, &last, &mut load, &mut current, &mut visit);
}
