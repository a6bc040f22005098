//! The verification suites behind `flamingo verify`.
//!
//! Each suite runs the checks of one or more acceptance criteria at a single
//! `(n, d)`. A check marked non-gating is reported but does not change the exit
//! status; these are the clauses known not to hold as literally stated.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use clap::ValueEnum;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Result;
use crate::invariants::*;
use crate::plabic::{canonical_encoding, reflect, rotate, PlabicGraph};
use crate::sieving::{csp_report, rotation_sign_check};
use crate::skein::{apply_rule, apply_transposition, crossing_terms, find_features, reduce_to_basis, sn_matrix};
use crate::tableaux::*;
use crate::weblike::{decompose_invariant, nonempty};
use crate::webs::{is_augmented_web, phi, phi_inverse, AugmentedWeb};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bijections,
    Skein,
    Basis,
    Csp,
    Signs,
    Sl3,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijections => "bijections",
            Suite::Skein => "skein",
            Suite::Basis => "basis",
            Suite::Csp => "csp",
            Suite::Signs => "signs",
            Suite::Sl3 => "sl3",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// Acceptance criterion number.
    pub criterion: u8,
    pub name: String,
    pub pass: bool,
    pub gating: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub d: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass || !c.gating)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "n": self.n,
            "d": self.d,
            "checks": self.checks.iter().map(|c| json!({
                "criterion": c.criterion,
                "name": c.name,
                "pass": c.pass,
                "gating": c.gating,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "pass": self.passed(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} at (n, d) = ({}, {})\n", self.suite.name(), self.n, self.d);
        for c in &self.checks {
            let status = match (c.pass, c.gating) {
                (true, _) => "pass",
                (false, true) => "FAIL",
                (false, false) => "fail (non-gating)",
            };
            out.push_str(&format!("  [{:>2}] {:<40} {:<18} {}\n", c.criterion, c.name, status, c.detail));
        }
        out.push_str(if self.passed() { "result: pass\n" } else { "result: FAIL\n" });
        out
    }
}

fn check(criterion: u8, name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check { criterion, name: name.into(), pass, gating: true, detail: detail.into() }
}

fn note(criterion: u8, name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check { gating: false, ..check(criterion, name, pass, detail) }
}

/// Run `suite` at `(n, d)` on the given enumeration of `AW(n, d)`.
pub fn run_suite(suite: Suite, n: usize, d: usize, webs: &[AugmentedWeb]) -> Result<SuiteReport> {
    let shape = FlamingoShape::sl3(n, d)?;
    let checks = match suite {
        Suite::Bijections => bijections(&shape, webs)?,
        Suite::Skein => skein(n, d, webs)?,
        Suite::Basis => basis(&shape, webs)?,
        Suite::Csp => vec![csp(n, d, webs)?],
        Suite::Signs => signs(n, d, webs)?,
        Suite::Sl3 => sl3(n, d, webs)?,
    };
    Ok(SuiteReport { suite, n, d, checks })
}

fn shapes_at(n: usize, d: usize) -> Result<Vec<FlamingoShape>> {
    (2..=4).filter(|r| r * d <= n).map(|r| FlamingoShape::new(n, d, r)).collect()
}

fn bijections(shape: &FlamingoShape, webs: &[AugmentedWeb]) -> Result<Vec<Check>> {
    let (n, d) = (shape.n, shape.d);
    let mut counts = Vec::new();
    let mut counts_ok = true;
    let mut trips_ok = true;
    let mut trips = 0usize;
    for s in shapes_at(n, d)? {
        let wnc = enumerate_wnc_filtered(&s);
        let rect = enumerate_rect(&s);
        let syt = enumerate_syt(&s);
        let expected: usize = count_syt(&s).try_into().unwrap_or(usize::MAX);
        counts_ok &= wnc.len() == expected && rect.len() == expected && syt.len() == expected;
        counts.push(format!("r={}: {} = {} = {}", s.r, wnc.len(), rect.len(), expected));
        for t in &syt {
            trips_ok &= rect_to_syt(&syt_to_rect(t)) == *t;
        }
        for t in &rect {
            trips_ok &= syt_to_rect(&rect_to_syt(t)) == *t;
            trips_ok &= wnc_to_rect(&rect_to_wnc(t), s.r).ok().as_ref() == Some(t);
        }
        for pi in &wnc {
            trips_ok &= wnc_to_rect(pi, s.r).map(|t| rect_to_wnc(&t) == *pi).unwrap_or(false);
        }
        trips += syt.len() + rect.len() + wnc.len();
    }
    let mut phi_ok = true;
    for pi in enumerate_wnc(shape) {
        phi_ok &= phi(&pi).and_then(|w| phi_inverse(&w)).map(|p| p == pi).unwrap_or(false);
    }
    for w in webs {
        phi_ok &= phi_inverse(w).and_then(|p| phi(&p)).map(|v| v == *w).unwrap_or(false);
    }
    Ok(vec![
        check(1, "|WNC| = |T| = count_syt", counts_ok, counts.join(", ")),
        check(2, "f/g and rect/WNC round trips", trips_ok, format!("{trips} elements")),
        check(2, "phi / phi^-1 round trips", phi_ok, format!("{} webs", webs.len())),
    ])
}

/// Every perfect orientation of `G` under every sink order.
pub(crate) fn all_ordered(g: &PlabicGraph) -> Vec<PerfectOrientation> {
    let mut out = Vec::new();
    for o in enumerate_perfect_orientations(g) {
        for p in permutations(o.sinks().len()) {
            out.push(o.reordered(p.iter().map(|&k| o.sinks()[k]).collect()).expect("a permutation of the sinks"));
        }
    }
    out
}

fn sign_rat(s: i32) -> BigRational {
    BigRational::from_integer(s.into())
}

fn long_cycle(n: usize) -> Vec<usize> {
    (1..=n).map(|j| j % n + 1).collect()
}

fn signs(n: usize, d: usize, webs: &[AugmentedWeb]) -> Result<Vec<Check>> {
    // Multiplicativity against a fixed base is equivalent to it over all triples.
    let per_web: Vec<(bool, bool, usize)> = webs
        .par_iter()
        .map(|w| -> Result<(bool, bool, usize)> {
            let g = w.graph();
            let all = all_ordered(g);
            let base = &all[0];
            let to_base: Vec<i32> = all.iter().map(|o| orientation_sign(g, base, o)).collect::<Result<_>>()?;
            let mut mult = true;
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    mult &= orientation_sign(g, a, b)? == to_base[i] * to_base[j];
                }
            }
            let reference: HashMap<ConsistentLabelling, i32> =
                signed_labellings(g, base)?.into_iter().map(|(l, s, _)| (l, s)).collect();
            let mut cov = true;
            for (k, o) in all.iter().enumerate() {
                for (l, t, _) in signed_labellings(g, o)? {
                    cov &= reference.get(&l) == Some(&(to_base[k] * t));
                }
            }
            Ok((mult, cov, all.len()))
        })
        .collect::<Result<_>>()?;
    let orientations: usize = per_web.iter().map(|x| x.2).sum();
    let ordered = format!("{} webs, {orientations} ordered orientations", webs.len());

    let w0: Vec<usize> = (1..=n).rev().collect();
    let stated = sign_rat(if n % 2 == 1 { 1 } else { -1 });
    let w0_sign = sign_rat(permutation_sign(&w0));
    let equivariance: Vec<(bool, bool, bool)> = webs
        .par_iter()
        .map(|w| -> Result<(bool, bool, bool)> {
            let g = w.graph();
            let (o, p) = canonical_invariant(g)?;
            // Rotation and reflection keep edge and vertex ids, so `o` transfers unchanged.
            let rot = p.permute(&long_cycle(n))? == web_invariant(&rotate(g), &o)?.scaled(&stated);
            let reflected = p.permute(&w0)?;
            let refl = web_invariant(&reflect(g), &o)?;
            Ok((rot, reflected == refl.scaled(&w0_sign), reflected == refl.scaled(&stated)))
        })
        .collect::<Result<_>>()?;
    let rot = rotation_sign_check(n, d)?;
    Ok(vec![
        check(5, "orientation_sign multiplicative", per_web.iter().all(|x| x.0), ordered.clone()),
        check(5, "sign(l, O) covariant", per_web.iter().all(|x| x.1), ordered),
        check(8, "c[W,O] = (-1)^(n-1)[rot W, rot O]", equivariance.iter().all(|x| x.0), format!("{} webs", webs.len())),
        check(
            8,
            "w0[W,O] = sign(w0)[refl W, refl O]",
            equivariance.iter().all(|x| x.1),
            format!("{} webs", webs.len()),
        ),
        note(
            8,
            "w0[W,O] = (-1)^(n-1)[refl W, refl O]",
            equivariance.iter().all(|x| x.2),
            format!("sign(w0) = {}, (-1)^(n-1) = {}", w0_sign, stated),
        ),
        check(11, "rotation signs", rot.passed(), format!("{} rotation-fixed (web, i) pairs", rot.rows.len())),
    ])
}

fn sink_partition(g: &PlabicGraph, o: &PerfectOrientation) -> Result<OrderedSetPartition> {
    let blocks = o
        .sinks()
        .iter()
        .map(|&v| g.neighbors(v).into_iter().filter(|&u| g.is_boundary(u)).map(|u| u + 1).collect())
        .collect();
    OrderedSetPartition::new(g.n(), blocks)
}

fn basis(shape: &FlamingoShape, webs: &[AugmentedWeb]) -> Result<Vec<Check>> {
    let n = shape.n;
    let polys: Vec<Polynomial> =
        webs.par_iter().map(|w| canonical_invariant(w.graph()).map(|x| x.1)).collect::<Result<_>>()?;
    let expected: usize = count_syt(shape).try_into().unwrap_or(usize::MAX);
    let r = rank(&polys);
    let leading: BTreeSet<Monomial> = polys.iter().map(|p| p.leading_term(3)).collect::<Result<_>>()?;

    let span = SpanBasis::new(&polys);
    let conjugate = {
        let mut c = shape.conjugate();
        c.sort_unstable();
        c
    };
    let generators: Vec<SetPartition> = all_set_partitions(n)
        .into_iter()
        .filter(|p| {
            let mut s: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
            s.sort_unstable();
            s == conjugate
        })
        .collect();
    let expands = match &span {
        Ok(span) => generators
            .par_iter()
            .map(|pi| -> Result<bool> {
                let p = specht_generator(pi, shape)?;
                let c = span.expand(&p)?;
                let mut rebuilt = Polynomial::zero(n);
                for (x, b) in c.iter().zip(&polys) {
                    rebuilt.add_scaled(b, x);
                }
                Ok(rebuilt == p)
            })
            .collect::<Result<Vec<bool>>>()
            .map(|v| v.iter().all(|&b| b))
            .unwrap_or(false),
        Err(_) => false,
    };

    let mut white_free = 0;
    let mut jelly_ok = true;
    for w in webs {
        let g = w.graph();
        if g.count_color(crate::plabic::Color::White) > 0 {
            continue;
        }
        white_free += 1;
        for o in all_ordered(g) {
            jelly_ok &= web_invariant(g, &o)? == jellyfish_invariant(&sink_partition(g, &o)?, 3)?;
        }
    }
    Ok(vec![
        check(4, "white-free [W,O] = [pi]_3", jelly_ok, format!("{white_free} white-free webs, all orientations")),
        check(7, "rank = count_syt", r == expected && polys.len() == expected, format!("rank {r} = {expected}")),
        note(
            7,
            "pairwise-distinct leading terms",
            leading.len() == polys.len(),
            format!("{} distinct among {}", leading.len(), polys.len()),
        ),
        check(7, "Specht generators expand", expands, format!("{} generators", generators.len())),
    ])
}

type Matrix = Vec<Vec<BigRational>>;

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|r| (0..n).map(|c| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[r][k] * &b[k][c])).collect())
        .collect()
}

fn skein(n: usize, d: usize, webs: &[AugmentedWeb]) -> Result<Vec<Check>> {
    let transposition = |i: usize| {
        let mut s: Vec<usize> = (1..=n).collect();
        s.swap(i - 1, i);
        s
    };
    let jobs: Vec<(usize, usize)> = (0..webs.len()).flat_map(|k| (1..n).map(move |i| (k, i))).collect();
    let results: Vec<(bool, BTreeMap<&'static str, (usize, bool)>)> = jobs
        .par_iter()
        .map(|&(k, i)| -> Result<_> {
            let g = webs[k].graph();
            let (o, p) = canonical_invariant(g)?;
            let reduced = reduce_to_basis(&apply_transposition(i, g, &o)?)?;
            let ok = reduced.terms().all(|t| is_augmented_web(&t.graph))
                && reduced.invariant()? == p.permute(&transposition(i))?;
            let mut rules: BTreeMap<&'static str, (usize, bool)> = BTreeMap::new();
            // Every rule applicable to a graph met while reducing, not only the one used.
            let mut queue: Vec<PlabicGraph> = match crossing_terms(i, g, &o)? {
                Some(t) => vec![t.inserted.0, t.to_x.0, t.to_y.0],
                None => Vec::new(),
            };
            let mut seen = BTreeSet::new();
            while let Some(h) = queue.pop() {
                if is_augmented_web(&h) || !seen.insert(canonical_encoding(&h)?) {
                    continue;
                }
                for f in find_features(&h) {
                    let Some(app) = apply_rule(&h, &f)? else { continue };
                    let mut rhs = Polynomial::zero(n);
                    for (c, x, ox) in &app.terms {
                        rhs.add_scaled(&web_invariant(x, ox)?, c);
                        queue.push(x.clone());
                    }
                    let entry = rules.entry(f.name()).or_insert((0, true));
                    entry.0 += 1;
                    entry.1 &= web_invariant(&h, &app.lhs)? == rhs;
                }
            }
            Ok((ok, rules))
        })
        .collect::<Result<_>>()?;
    let mut rules: BTreeMap<&str, (usize, bool)> = BTreeMap::new();
    for (_, r) in &results {
        for (name, (count, ok)) in r {
            let e = rules.entry(name).or_insert((0, true));
            e.0 += count;
            e.1 &= ok;
        }
    }
    let rule_detail: Vec<String> = rules.iter().map(|(name, (c, _))| format!("{name} {c}")).collect();

    let m: Vec<Matrix> = (1..n).map(|i| sn_matrix(i, n, d)).collect::<Result<_>>()?;
    let size = webs.len();
    let one: Matrix = (0..size)
        .map(|r| (0..size).map(|c| if r == c { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let mut coxeter = true;
    for i in 0..m.len() {
        coxeter &= mul(&m[i], &m[i]) == one;
        if i + 1 < m.len() {
            coxeter &= mul(&mul(&m[i], &m[i + 1]), &m[i]) == mul(&mul(&m[i + 1], &m[i]), &m[i + 1]);
        }
        for j in i + 2..m.len() {
            coxeter &= mul(&m[i], &m[j]) == mul(&m[j], &m[i]);
        }
    }
    Ok(vec![
        check(6, "local rules preserve [G,O]", rules.values().all(|x| x.1), rule_detail.join(", ")),
        check(
            6,
            "reduce_to_basis(s_i [W,O]) = s_i . [W,O]",
            results.iter().all(|x| x.0),
            format!("{} (web, i) pairs", jobs.len()),
        ),
        check(13, "Coxeter relations", coxeter, format!("{} generators on {size} webs", m.len())),
    ])
}

fn csp(n: usize, d: usize, webs: &[AugmentedWeb]) -> Result<Check> {
    let r = csp_report(n, d, webs)?;
    let mode = if r.strict() { "strict" } else { "absolute values" };
    Ok(check(
        10,
        "cyclic sieving",
        r.passed(),
        format!("{} webs, fixed points {:?}, {mode}", r.total, r.fixed_vector()),
    ))
}

/// A product of random elementary integer shears, so a unimodular matrix.
fn random_unimodular(rng: &mut ChaCha8Rng) -> [[BigRational; 3]; 3] {
    let mut x = [[0i64; 3]; 3];
    for (i, row) in x.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..6 {
        let i = rng.gen_range(0..3);
        let j = (i + rng.gen_range(1..3)) % 3;
        let t = rng.gen_range(-2i64..=2);
        // Row i += t * row j.
        for c in 0..3 {
            x[i][c] += t * x[j][c];
        }
    }
    std::array::from_fn(|a| std::array::from_fn(|b| BigRational::from_integer(x[a][b].into())))
}

fn sl3(n: usize, d: usize, webs: &[AugmentedWeb]) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64((100 * n + d) as u64);
    let matrices: Vec<[[BigRational; 3]; 3]> = (0..20).map(|_| random_unimodular(&mut rng)).collect();
    let invariant: Vec<bool> = webs
        .par_iter()
        .map(|w| -> Result<bool> {
            let (_, p) = canonical_invariant(w.graph())?;
            for x in &matrices {
                if p.apply_sl3(x)? != p {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect::<Result<_>>()?;
    let stride = webs.len().div_ceil(60).max(1);
    let sample: Vec<&AugmentedWeb> = webs.iter().step_by(stride).collect();
    let decomposed: Vec<bool> = sample
        .par_iter()
        .map(|w| {
            let g = w.graph();
            let Ok((o, _)) = canonical_invariant(g) else { return false };
            match decompose_invariant(g, &o) {
                Ok(groups) => nonempty(&groups).all(|gr| gr.epsilon.is_some() && gr.sl3.is_some()),
                Err(_) => false,
            }
        })
        .collect();
    Ok(vec![
        check(
            9,
            "SL3 invariance",
            invariant.iter().all(|&b| b),
            format!("{} webs x {} unimodular matrices", webs.len(), matrices.len()),
        ),
        check(
            12,
            "weblike decomposition",
            decomposed.iter().all(|&b| b),
            format!("{} of {} webs", sample.len(), webs.len()),
        ),
    ])
}
