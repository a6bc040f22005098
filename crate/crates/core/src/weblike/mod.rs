//! Web invariants as sums of classical `SL3` web invariants.
//!
//! Grouping the consistent labellings of `W` by the multiplicities
//! `|ℓ(e) ∩ {1, 2, 3}|` they induce splits `[W, O]` into one piece per 3-weblike
//! subgraph `W′`, and each piece is `ε · (1/2)^{d(W′)}` times the `SL3`
//! invariant of the clasped web obtained by contracting `W′`. The sign `ε` is
//! read off one monomial and the whole piece is then checked against it.

mod sl3;
mod subgraph;

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

pub use sl3::{contract_to_sl3, sl3_invariant, ClaspedSl3Web, End};
pub use subgraph::{enumerate_weblike, for_each_weblike, WeblikeSubgraph};

use crate::error::{Error, Result};
use crate::invariants::{signed_labellings, web_invariant, PerfectOrientation, Polynomial};
use crate::plabic::PlabicGraph;

/// The labellings of `W` that induce one weblike subgraph.
#[derive(Clone, Debug)]
pub struct WeblikeGroup {
    pub subgraph: WeblikeSubgraph,
    pub web: ClaspedSl3Web,
    /// `Σ sign(ℓ, O) wt(ℓ) x_{bd(ℓ)}` over the group.
    pub sum: Polynomial,
    /// `[web]_{SL3}`; not computed for an empty group.
    pub sl3: Option<Polynomial>,
    /// `None` for a group without labellings.
    pub epsilon: Option<i32>,
    /// `ε (1/2)^{d}`, or 0 for an empty group.
    pub coefficient: BigRational,
}

impl WeblikeGroup {
    pub fn to_json(&self) -> Value {
        json!({
            "multiplicity": self.subgraph.multiplicity(),
            "d": self.subgraph.d(),
            "epsilon": self.epsilon,
            "coefficient": self.coefficient.to_string(),
            "web": self.web.to_json(),
        })
    }
}

fn half_power(k: usize) -> BigRational {
    BigRational::new(1.into(), num_bigint::BigInt::from(2).pow(k as u32))
}

fn group(subgraph: WeblikeSubgraph, sum: Polynomial, empty: bool) -> Result<WeblikeGroup> {
    let web = contract_to_sl3(&subgraph)?;
    if empty {
        return Ok(WeblikeGroup { subgraph, web, sum, sl3: None, epsilon: None, coefficient: BigRational::zero() });
    }
    let sl3 = sl3_invariant(&web)?;
    let scale = half_power(subgraph.d());
    let (epsilon, coefficient) = {
        let (&m, c) =
            sum.terms().next().ok_or_else(|| Error::Verification("nonempty weblike group sums to zero".into()))?;
        let base = sl3.coefficient(m);
        if base.is_zero() {
            return Err(Error::Verification(format!(
                "group {:?} has a monomial its SL3 invariant lacks",
                subgraph.multiplicity()
            )));
        }
        let ratio = c / base;
        if ratio.abs() != scale {
            return Err(Error::Verification(format!(
                "group {:?}: ratio {ratio} is not ±(1/2)^{}",
                subgraph.multiplicity(),
                subgraph.d()
            )));
        }
        let epsilon = if ratio.is_positive() { 1 } else { -1 };
        if sl3.scaled(&ratio) != sum {
            return Err(Error::Verification(format!(
                "group {:?} is not proportional to its SL3 invariant",
                subgraph.multiplicity()
            )));
        }
        (Some(epsilon), ratio)
    };
    Ok(WeblikeGroup { subgraph, web, sum, sl3: Some(sl3), epsilon, coefficient })
}

/// The groups of every weblike subgraph of `W`, those without labellings
/// included, in lexicographic order of multiplicity vectors. Fails when a group
/// is not `±(1/2)^{d}` times its `SL3` invariant or the groups do not add up to `[W, O]`.
pub fn decompose_invariant(g: &PlabicGraph, o: &PerfectOrientation) -> Result<Vec<WeblikeGroup>> {
    let mut sums: BTreeMap<Vec<u8>, Polynomial> = BTreeMap::new();
    for (l, s, w) in signed_labellings(g, o)? {
        let sub = WeblikeSubgraph::from_labelling(g, &l)?;
        let c = w * BigRational::from_integer(s.into());
        sums.entry(sub.multiplicity().to_vec()).or_insert_with(|| Polynomial::zero(g.n())).add_term(l.monomial(g), c);
    }
    let all = enumerate_weblike(g);
    let groups: Vec<WeblikeGroup> = all
        .into_par_iter()
        .map(|sub| match sums.get(sub.multiplicity()) {
            Some(sum) => group(sub, sum.clone(), false),
            None => group(sub, Polynomial::zero(g.n()), true),
        })
        .collect::<Result<_>>()?;
    let found = groups.iter().filter(|gr| gr.epsilon.is_some()).count();
    if found != sums.len() {
        return Err(Error::Verification("a labelling induced a multiplicity vector that is not weblike".into()));
    }
    if reassemble(g.n(), &groups) != web_invariant(g, o)? {
        return Err(Error::Verification("weblike groups do not add up to the web invariant".into()));
    }
    Ok(groups)
}

/// `Σ coefficient · [web]_{SL3}` over `groups`.
pub fn reassemble(n: usize, groups: &[WeblikeGroup]) -> Polynomial {
    let mut out = Polynomial::zero(n);
    for gr in groups {
        if let Some(sl3) = &gr.sl3 {
            out.add_scaled(sl3, &gr.coefficient);
        }
    }
    out
}

/// The nonempty groups only.
pub fn nonempty(groups: &[WeblikeGroup]) -> impl Iterator<Item = &WeblikeGroup> {
    groups.iter().filter(|gr| gr.epsilon.is_some())
}
