//! Exact linear algebra on polynomials: rank and expansion in a basis with
//! distinct leading terms.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{Monomial, Polynomial};
use crate::error::{Error, Result};

/// Rank over the rationals, by elimination on the largest monomial in word order.
pub fn rank(polys: &[Polynomial]) -> usize {
    let mut pivots: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    for p in polys {
        let mut p = p.clone();
        loop {
            let Some(m) = p.monomials().next_back() else {
                break;
            };
            match pivots.get(&m) {
                Some(row) => {
                    let c = -p.coefficient(m) / row.coefficient(m);
                    p.add_scaled(row, &c);
                }
                None => {
                    pivots.insert(m, p);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// A list of polynomials with pairwise distinct leading terms for the order
/// with reversed row `r`, ready for triangular expansion.
pub struct LeadingBasis {
    r: usize,
    elements: Vec<Polynomial>,
    by_leading: HashMap<Monomial, usize>,
}

impl LeadingBasis {
    pub fn new(elements: Vec<Polynomial>, r: usize) -> Result<Self> {
        let mut by_leading = HashMap::new();
        for (k, b) in elements.iter().enumerate() {
            let lt = b.leading_term(r)?;
            if by_leading.insert(lt, k).is_some() {
                return Err(Error::Verification(format!("basis elements share the leading term {:?}", lt.word(b.n()))));
            }
        }
        Ok(LeadingBasis { r, elements, by_leading })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_terms(&self) -> Vec<Monomial> {
        let mut lts: Vec<(usize, Monomial)> = self.by_leading.iter().map(|(m, &k)| (k, *m)).collect();
        lts.sort_unstable();
        lts.into_iter().map(|(_, m)| m).collect()
    }

    /// Coefficients `c` with `p = Σ c_k b_k`, or [`Error::NotInSpan`].
    pub fn expand(&self, p: &Polynomial) -> Result<Vec<BigRational>> {
        let mut coefficients = vec![BigRational::zero(); self.elements.len()];
        let mut rest = p.clone();
        while !rest.is_zero() {
            let lt = rest.leading_term(self.r)?;
            let k = *self.by_leading.get(&lt).ok_or(Error::NotInSpan)?;
            let b = &self.elements[k];
            let c = rest.coefficient(lt) / b.coefficient(lt);
            rest.add_scaled(b, &-c.clone());
            coefficients[k] += c;
        }
        Ok(coefficients)
    }
}

/// Expand `p` in `basis` (which must have distinct leading terms for row `r`).
pub fn expand_in_basis(p: &Polynomial, basis: &[Polynomial], r: usize) -> Result<Vec<BigRational>> {
    LeadingBasis::new(basis.to_vec(), r)?.expand(p)
}

/// An echelon form of a list of polynomials that remembers how each pivot row
/// combines the originals, for expansion when leading terms collide.
pub struct SpanBasis {
    len: usize,
    pivots: BTreeMap<Monomial, (Polynomial, Vec<BigRational>)>,
}

impl SpanBasis {
    /// Fails when the elements are linearly dependent.
    pub fn new(elements: &[Polynomial]) -> Result<Self> {
        let len = elements.len();
        let mut basis = SpanBasis { len, pivots: BTreeMap::new() };
        for (k, b) in elements.iter().enumerate() {
            let mut combo = vec![BigRational::zero(); len];
            combo[k] = BigRational::from_integer(1.into());
            let (rest, combo) = basis.reduce(b.clone(), combo);
            let Some(m) = rest.monomials().next_back() else {
                return Err(Error::Verification(format!("element {k} is a combination of the earlier ones")));
            };
            basis.pivots.insert(m, (rest, combo));
        }
        Ok(basis)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Reduce until the largest monomial has no pivot; `combo` tracks the subtracted multiples.
    fn reduce(&self, mut p: Polynomial, mut combo: Vec<BigRational>) -> (Polynomial, Vec<BigRational>) {
        let mut floor: Option<Monomial> = None;
        loop {
            let next = match floor {
                None => p.monomials().next_back(),
                Some(f) => p.monomials().rev().find(|&m| m < f),
            };
            let Some(m) = next else { return (p, combo) };
            match self.pivots.get(&m) {
                Some((row, row_combo)) => {
                    let c = p.coefficient(m) / row.coefficient(m);
                    p.add_scaled(row, &-c.clone());
                    for (x, y) in combo.iter_mut().zip(row_combo) {
                        *x -= &c * y;
                    }
                }
                None => floor = Some(m),
            }
        }
    }

    /// Coefficients `c` with `p = Σ c_k b_k`, or [`Error::NotInSpan`].
    pub fn expand(&self, p: &Polynomial) -> Result<Vec<BigRational>> {
        let (rest, combo) = self.reduce(p.clone(), vec![BigRational::zero(); self.len]);
        if !rest.is_zero() {
            return Err(Error::NotInSpan);
        }
        Ok(combo.into_iter().map(|c| -c).collect())
    }
}
