//! Marker registries and the multivariate coefficient ring.
//!
//! A [`MarkerPoly`] is a polynomial with integer coefficients in a fixed,
//! ordered set of marker variables (for instance `u` and `v`). Every exponent
//! vector stored in a polynomial has exactly one entry per registered marker.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An ordered registry of marker names shared by all series in a computation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MarkerSet(Arc<[String]>);

impl MarkerSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        MarkerSet(names.into())
    }

    /// The empty registry: coefficients are plain integers.
    pub fn empty() -> Self {
        MarkerSet(Arc::from(Vec::<String>::new()))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for MarkerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector, one entry per registered marker.
pub type Monomial = Vec<u32>;

/// Polynomial in the registered markers with arbitrary-precision integer
/// coefficients. No stored term has a zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MarkerPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MarkerPoly {
    pub fn zero() -> Self {
        MarkerPoly::default()
    }

    pub fn constant(c: impl Into<BigInt>, arity: usize) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(1, arity)
    }

    pub fn monomial(exponents: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        MarkerPoly { terms }
    }

    /// The single marker `name` (coefficient 1, exponent 1) in `markers`.
    pub fn marker(markers: &MarkerSet, name: &str) -> Result<Self> {
        let idx = markers
            .index_of(name)
            .ok_or_else(|| Error::UnknownMarker(name.to_string()))?;
        let mut e = vec![0; markers.arity()];
        e[idx] = 1;
        Ok(Self::monomial(e, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// The integer value when the polynomial is a constant, `None` otherwise.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// True when every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, e: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MarkerPoly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &MarkerPoly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), -c);
        }
    }

    /// `self += a * b`.
    pub fn add_product(&mut self, a: &MarkerPoly, b: &MarkerPoly) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                self.add_term(e, ca * cb);
            }
        }
    }

    pub fn mul(&self, other: &MarkerPoly) -> MarkerPoly {
        let mut out = MarkerPoly::zero();
        out.add_product(self, other);
        out
    }

    pub fn neg(&self) -> MarkerPoly {
        MarkerPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> MarkerPoly {
        if k.is_zero() {
            return MarkerPoly::zero();
        }
        MarkerPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Substitute integer values for every marker.
    pub fn evaluate(&self, values: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(e) {
                t *= num_traits::pow(v.clone(), k as usize);
            }
            total += t;
        }
        total
    }

    /// Render with marker names, e.g. `u^2*v + 3`.
    pub fn display<'a>(&'a self, markers: &'a MarkerSet) -> MarkerPolyDisplay<'a> {
        MarkerPolyDisplay {
            poly: self,
            markers,
        }
    }
}

pub struct MarkerPolyDisplay<'a> {
    poly: &'a MarkerPoly,
    markers: &'a MarkerSet,
}

impl fmt::Display for MarkerPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest total degree first
        let mut terms: Vec<_> = self.poly.terms.iter().rev().collect();
        terms.sort_by_key(|(e, _)| std::cmp::Reverse(e.iter().sum::<u32>()));
        for (e, c) in terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .zip(self.markers.names())
                .filter(|(k, _)| **k > 0)
                .map(|(&k, n)| {
                    if k == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{k}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = MarkerPoly::monomial(vec![1, 0], 3);
        p.add_assign(&MarkerPoly::monomial(vec![1, 0], -3));
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn product_and_evaluation() {
        let uv = MarkerSet::new(["u", "v"]);
        let u = MarkerPoly::marker(&uv, "u").unwrap();
        let v = MarkerPoly::marker(&uv, "v").unwrap();
        let mut s = u.clone();
        s.add_assign(&v);
        let sq = s.mul(&s);
        assert_eq!(sq.coefficient(&[1, 1]), BigInt::from(2));
        assert_eq!(
            sq.evaluate(&[BigInt::from(2), BigInt::from(3)]),
            BigInt::from(25)
        );
        assert_eq!(format!("{}", sq.display(&uv)), "u^2 + 2*u*v + v^2");
    }

    #[test]
    fn unknown_marker_is_rejected() {
        let uv = MarkerSet::new(["u", "v"]);
        assert_eq!(
            MarkerPoly::marker(&uv, "w"),
            Err(Error::UnknownMarker("w".into()))
        );
    }
}
