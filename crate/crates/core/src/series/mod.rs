//! Truncated power series in `q` over the marker-polynomial ring.
//!
//! A [`QSeries`] stores the coefficients of `q^0 ..= q^trunc` densely. Every
//! coefficient up to `trunc` is exact and nothing beyond it is known, so binary
//! operations return a series truncated at the smaller of the two orders.

mod marker;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};

pub use marker::{MarkerPoly, MarkerPolyDisplay, MarkerSet, Monomial};

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    markers: MarkerSet,
    coeffs: Vec<MarkerPoly>,
}

impl QSeries {
    pub fn zero(markers: &MarkerSet, trunc: usize) -> Self {
        QSeries {
            markers: markers.clone(),
            coeffs: vec![MarkerPoly::zero(); trunc + 1],
        }
    }

    pub fn one(markers: &MarkerSet, trunc: usize) -> Self {
        Self::monomial(markers, 0, MarkerPoly::one(markers.arity()), trunc)
    }

    /// `coeff * q^exponent`, or zero when the exponent lies past `trunc`.
    pub fn monomial(markers: &MarkerSet, exponent: usize, coeff: MarkerPoly, trunc: usize) -> Self {
        let mut s = Self::zero(markers, trunc);
        if exponent <= trunc {
            s.coeffs[exponent] = coeff;
        }
        s
    }

    /// Integer-coefficient series over the empty registry. Entries past
    /// `trunc` are ignored; missing entries are zero.
    pub fn from_integers<T: Into<BigInt> + Clone>(coeffs: &[T], trunc: usize) -> Self {
        let mut s = Self::zero(&MarkerSet::empty(), trunc);
        for (i, c) in coeffs.iter().enumerate().take(trunc + 1) {
            s.coeffs[i] = MarkerPoly::constant(c.clone(), 0);
        }
        s
    }

    pub fn from_polys(markers: &MarkerSet, coeffs: Vec<MarkerPoly>, trunc: usize) -> Self {
        let mut s = Self::zero(markers, trunc);
        for (i, c) in coeffs.into_iter().enumerate().take(trunc + 1) {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn markers(&self) -> &MarkerSet {
        &self.markers
    }

    pub fn coefficients(&self) -> &[MarkerPoly] {
        &self.coeffs
    }

    /// Exact coefficient of `q^n`.
    pub fn coefficient(&self, n: usize) -> Result<&MarkerPoly> {
        self.coeffs.get(n).ok_or(Error::TruncationExceeded {
            requested: n,
            trunc: self.trunc(),
        })
    }

    /// Integer coefficients, when every coefficient is a marker-free constant.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(MarkerPoly::as_integer).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MarkerPoly::is_zero)
    }

    fn assert_compatible(&self, other: &QSeries) {
        assert!(
            self.markers == other.markers,
            "{}",
            Error::MarkerMismatch {
                left: self.markers.names().to_vec(),
                right: other.markers.names().to_vec(),
            }
        );
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        self.assert_compatible(other);
        let t = self.trunc().min(other.trunc());
        let mut out = self.truncate(t);
        for (c, o) in out.coeffs.iter_mut().zip(&other.coeffs) {
            c.add_assign(o);
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.assert_compatible(other);
        let t = self.trunc().min(other.trunc());
        let mut out = self.truncate(t);
        for (c, o) in out.coeffs.iter_mut().zip(&other.coeffs) {
            c.sub_assign(o);
        }
        out
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            markers: self.markers.clone(),
            coeffs: self.coeffs.iter().map(MarkerPoly::neg).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        self.assert_compatible(other);
        let t = self.trunc().min(other.trunc());
        let mut out = QSeries::zero(&self.markers, t);
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(t - i + 1) {
                if !b.is_zero() {
                    out.coeffs[i + j].add_product(a, b);
                }
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be exactly 1.
    pub fn inverse(&self) -> Result<QSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let t = self.trunc();
        let mut out = QSeries::zero(&self.markers, t);
        out.coeffs[0] = MarkerPoly::one(self.markers.arity());
        for n in 1..=t {
            let mut acc = MarkerPoly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out.coeffs[n - k].is_zero() {
                    acc.add_product(&self.coeffs[k], &out.coeffs[n - k]);
                }
            }
            out.coeffs[n] = acc.neg();
        }
        Ok(out)
    }

    /// Drop coefficients past `trunc`. Panics if `trunc` exceeds the current order.
    pub fn truncate(&self, trunc: usize) -> QSeries {
        assert!(trunc <= self.trunc(), "cannot raise truncation order");
        QSeries {
            markers: self.markers.clone(),
            coeffs: self.coeffs[..=trunc].to_vec(),
        }
    }

    /// Re-truncate a series that is known to be a polynomial of degree at most
    /// its current order. Raising the order pads with zeros, which is only
    /// sound under that precondition.
    pub fn pad_polynomial(&self, trunc: usize) -> QSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(trunc + 1, MarkerPoly::zero());
        QSeries {
            markers: self.markers.clone(),
            coeffs,
        }
    }

    /// Multiply by `q^k`. The order is unchanged: the top `k` coefficients fall off.
    pub fn shift(&self, k: usize) -> QSeries {
        let t = self.trunc();
        let mut out = QSeries::zero(&self.markers, t);
        for i in k..=t {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    pub fn scale(&self, c: &MarkerPoly) -> QSeries {
        QSeries {
            markers: self.markers.clone(),
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Multiply in place by `(1 + sign * x q^a)`, with `a >= 0`.
    pub fn mul_binomial_factor(&mut self, negate: bool, x: &MarkerPoly, a: usize) {
        let t = self.trunc();
        let x = if negate { x.neg() } else { x.clone() };
        if a == 0 {
            let one_plus_x = {
                let mut p = MarkerPoly::one(self.markers.arity());
                p.add_assign(&x);
                p
            };
            for c in &mut self.coeffs {
                *c = c.mul(&one_plus_x);
            }
            return;
        }
        for i in (a..=t).rev() {
            if !self.coeffs[i - a].is_zero() {
                let (lo, hi) = self.coeffs.split_at_mut(i);
                hi[0].add_product(&lo[i - a], &x);
            }
        }
    }

    /// Multiply in place by `1 / (1 - q^m)`, with `m >= 1`.
    pub fn div_one_minus_q_power(&mut self, m: usize) {
        assert!(m >= 1);
        for i in m..=self.trunc() {
            if !self.coeffs[i - m].is_zero() {
                let (lo, hi) = self.coeffs.split_at_mut(i);
                hi[0].add_assign(&lo[i - m]);
            }
        }
    }

    /// Substitute integer values for markers; every registered marker must
    /// be assigned. The result is over the empty registry.
    pub fn specialize_markers(&self, assignment: &[(&str, i64)]) -> Result<QSeries> {
        let mut values = vec![None; self.markers.arity()];
        for (name, v) in assignment {
            let idx = self
                .markers
                .index_of(name)
                .ok_or_else(|| Error::UnknownMarker(name.to_string()))?;
            values[idx] = Some(BigInt::from(*v));
        }
        let values: Vec<BigInt> = values
            .into_iter()
            .zip(self.markers.names())
            .map(|(v, n)| v.ok_or_else(|| Error::UnknownMarker(format!("{n} (unassigned)"))))
            .collect::<Result<_>>()?;
        let empty = MarkerSet::empty();
        Ok(QSeries {
            markers: empty,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| MarkerPoly::constant(c.evaluate(&values), 0))
                .collect(),
        })
    }

    /// The series in `q` multiplying the marker monomial `exponents`,
    /// over the empty registry.
    pub fn marker_coefficient(&self, exponents: &[u32]) -> QSeries {
        QSeries {
            markers: MarkerSet::empty(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| MarkerPoly::constant(c.coefficient(exponents), 0))
                .collect(),
        }
    }

    /// Substitute `q -> sign * q^step`. Known coefficients of the result run
    /// to `step * trunc + step - 1`.
    pub fn substitute_power(&self, negate: bool, step: usize) -> QSeries {
        assert!(step >= 1);
        let t = self.trunc();
        let new_t = step * t + step - 1;
        let mut out = QSeries::zero(&self.markers, new_t);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * step] = if negate && i % 2 == 1 {
                c.neg()
            } else {
                c.clone()
            };
        }
        out
    }

    /// Lowest exponent at which the two series differ, compared up to the
    /// smaller order.
    pub fn first_mismatch(&self, other: &QSeries) -> Option<usize> {
        let t = self.trunc().min(other.trunc());
        (0..=t).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    /// True when every coefficient of every marker monomial is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(MarkerPoly::is_nonnegative)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = if c.len() == 1 {
                let s = c.display(&self.markers).to_string();
                match (s.as_str(), i) {
                    (_, 0) => s,
                    ("1", _) => String::new(),
                    ("-1", _) => "-".to_string(),
                    _ => format!("{s}*"),
                }
            } else {
                format!("({})*", c.display(&self.markers))
            };
            let q = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            let term = format!("{body}{q}");
            if first {
                write!(f, "{term}")?;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {term}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc() + 1)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{:?}]({self})", self.markers)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                QSeries::$m(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::neg(self)
    }
}

/// Sum of a non-empty iterator of series (zero at `trunc` when empty).
pub fn sum_series<'a, I>(markers: &MarkerSet, trunc: usize, items: I) -> QSeries
where
    I: IntoIterator<Item = &'a QSeries>,
{
    items
        .into_iter()
        .fold(QSeries::zero(markers, trunc), |acc, s| acc.add(s))
}

/// Integer coefficient helper used throughout tests and reports.
pub fn integer_coefficients(s: &QSeries) -> Vec<BigInt> {
    s.to_integers()
        .expect("series carries marker-dependent coefficients")
}

/// Non-negative integer check for counting series.
pub fn is_counting_series(s: &QSeries) -> bool {
    s.to_integers()
        .map(|v| v.iter().all(|c| !c.is_negative()))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64], t: usize) -> QSeries {
        QSeries::from_integers(v, t)
    }

    #[test]
    fn add_identity_and_min_truncation() {
        let s = ints(&[1, 2, 3], 4);
        let z = QSeries::zero(&MarkerSet::empty(), 4);
        assert_eq!(z.add(&s), s);
        let a = ints(&[1, 1], 5);
        let b = ints(&[0, 1, 1], 3);
        assert_eq!(a.add(&b), ints(&[1, 2, 1], 3));
    }

    #[test]
    fn euler_terms_sum_to_partition_counts() {
        // q^n / (q;q)_n for n = 0, 1, 2 at order 2
        let t = 2;
        let e = MarkerSet::empty();
        let mut term1 = QSeries::monomial(&e, 1, MarkerPoly::one(0), t);
        term1.div_one_minus_q_power(1);
        let mut term2 = QSeries::monomial(&e, 2, MarkerPoly::one(0), t);
        term2.div_one_minus_q_power(1);
        term2.div_one_minus_q_power(2);
        let s = QSeries::one(&e, t).add(&term1).add(&term2);
        assert_eq!(s, ints(&[1, 1, 2], 2));
    }

    #[test]
    fn mul_identity_and_geometric() {
        let s = ints(&[3, -1, 4, 1, 5], 4);
        assert_eq!(QSeries::one(&MarkerSet::empty(), 4).mul(&s), s);
        for t in [0, 1, 7, 20] {
            let one_minus_q = ints(&[1, -1], t);
            let geo = ints(&vec![1; t + 1], t);
            assert_eq!(one_minus_q.mul(&geo), QSeries::one(&MarkerSet::empty(), t));
        }
    }

    #[test]
    fn marker_product_expansion() {
        let uv = MarkerSet::new(["u", "v"]);
        let u = MarkerPoly::marker(&uv, "u").unwrap();
        let v = MarkerPoly::marker(&uv, "v").unwrap();
        let mut s = QSeries::one(&uv, 6);
        s.mul_binomial_factor(false, &u, 1);
        s.mul_binomial_factor(false, &v, 2);
        let expected = QSeries::from_polys(
            &uv,
            vec![MarkerPoly::one(2), u.clone(), v.clone(), u.mul(&v)],
            6,
        );
        assert_eq!(s, expected);
        let a = QSeries::one(&uv, 6).add(&QSeries::monomial(&uv, 1, u.clone(), 6));
        let b = QSeries::one(&uv, 6).add(&QSeries::monomial(&uv, 2, v.clone(), 6));
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn inverse_cases() {
        let e = MarkerSet::empty();
        assert_eq!(QSeries::one(&e, 5).inverse().unwrap(), QSeries::one(&e, 5));
        assert_eq!(ints(&[1, -1], 6).inverse().unwrap(), ints(&[1; 7], 6));
        // (q;q)_3 = (1-q)(1-q^2)(1-q^3)
        let mut p = QSeries::one(&e, 5);
        for a in 1..=3 {
            p.mul_binomial_factor(true, &MarkerPoly::one(0), a);
        }
        assert_eq!(p.inverse().unwrap(), ints(&[1, 1, 2, 3, 4, 5], 5));
        assert_eq!(ints(&[2, 1], 3).inverse(), Err(Error::NonUnitConstantTerm));
        assert_eq!(ints(&[0, 1], 3).inverse(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn coefficient_bounds() {
        let s = QSeries::one(&MarkerSet::empty(), 3);
        assert!(s.coefficient(0).unwrap().is_one());
        assert_eq!(
            s.coefficient(4),
            Err(Error::TruncationExceeded {
                requested: 4,
                trunc: 3
            })
        );
    }

    #[test]
    fn specialization() {
        let uv = MarkerSet::new(["u", "v"]);
        let u = MarkerPoly::marker(&uv, "u").unwrap();
        let v = MarkerPoly::marker(&uv, "v").unwrap();
        let s = QSeries::from_polys(
            &uv,
            vec![MarkerPoly::zero(), u.clone(), v.clone(), u.mul(&v)],
            3,
        );
        assert_eq!(
            s.specialize_markers(&[("u", 1), ("v", 0)]).unwrap(),
            ints(&[0, 1], 3)
        );
        let one_plus_uq = QSeries::one(&uv, 2).add(&QSeries::monomial(&uv, 1, u, 2));
        assert_eq!(
            one_plus_uq
                .specialize_markers(&[("u", 1), ("v", 7)])
                .unwrap(),
            ints(&[1, 1], 2)
        );
        assert!(s.specialize_markers(&[("u", 1)]).is_err());
    }

    #[test]
    fn substitution_q_to_minus_q_squared() {
        let s = ints(&[1, 1, 1], 2);
        let t = s.substitute_power(true, 2);
        assert_eq!(t.trunc(), 5);
        assert_eq!(t, ints(&[1, 0, -1, 0, 1, 0], 5));
    }

    #[test]
    fn display_format() {
        let s = ints(&[1, -1, 0, 2], 3);
        assert_eq!(s.to_string(), "1 - q + 2*q^3 + O(q^4)");
    }
}
