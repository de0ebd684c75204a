//! Constructors for the standard q-objects: q-Pochhammer symbols, Gaussian
//! binomials, congruence-restricted products and theta sums.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{MarkerPoly, MarkerSet, QSeries};

/// Whether each factor is `(1 - x q^e)` or `(1 + x q^e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorSign {
    Minus,
    Plus,
}

/// Describes `(±x q^offset; q^step)`, with `x` an optional marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochSpec {
    pub sign: FactorSign,
    pub marker: Option<String>,
    pub offset: i64,
    pub step: u64,
}

impl PochSpec {
    /// `(q^offset; q^step)`
    pub fn minus(offset: i64, step: u64) -> Self {
        PochSpec {
            sign: FactorSign::Minus,
            marker: None,
            offset,
            step,
        }
    }

    /// `(-q^offset; q^step)`
    pub fn plus(offset: i64, step: u64) -> Self {
        PochSpec {
            sign: FactorSign::Plus,
            ..Self::minus(offset, step)
        }
    }

    pub fn with_marker(mut self, name: &str) -> Self {
        self.marker = Some(name.to_string());
        self
    }

    fn factor_coefficient(&self, markers: &MarkerSet) -> Result<MarkerPoly> {
        match &self.marker {
            None => Ok(MarkerPoly::one(markers.arity())),
            Some(name) => MarkerPoly::marker(markers, name),
        }
    }

    fn check_step(&self) -> Result<()> {
        if self.step == 0 {
            return Err(Error::InvalidSpec("q-Pochhammer step must be >= 1".into()));
        }
        Ok(())
    }
}

/// The `n`-factor product `(±x q^a; q^m)_n`.
pub fn poch_finite(spec: &PochSpec, n: u64, markers: &MarkerSet, trunc: usize) -> Result<QSeries> {
    spec.check_step()?;
    let x = spec.factor_coefficient(markers)?;
    let mut out = QSeries::one(markers, trunc);
    for i in 0..n {
        let e = spec.offset + (i * spec.step) as i64;
        if e < 0 {
            return Err(Error::NegativeExponent { exponent: e });
        }
        let e = e as usize;
        if e > trunc && e > 0 {
            // remaining factors are 1 + O(q^(trunc+1))
            break;
        }
        out.mul_binomial_factor(spec.sign == FactorSign::Minus, &x, e);
    }
    Ok(out)
}

/// The infinite product `(±x q^a; q^m)_∞`, exact to `trunc`.
pub fn poch_infinite(spec: &PochSpec, markers: &MarkerSet, trunc: usize) -> Result<QSeries> {
    spec.check_step()?;
    if spec.offset < 1 {
        return Err(Error::DivergentProduct {
            offset: spec.offset,
        });
    }
    let x = spec.factor_coefficient(markers)?;
    let mut out = QSeries::one(markers, trunc);
    let mut e = spec.offset as usize;
    while e <= trunc {
        out.mul_binomial_factor(spec.sign == FactorSign::Minus, &x, e);
        e += spec.step as usize;
    }
    Ok(out)
}

/// `(q^step; q^step)_n` over the empty registry.
pub fn qq(step: u64, n: u64, trunc: usize) -> QSeries {
    poch_finite(
        &PochSpec::minus(step as i64, step),
        n,
        &MarkerSet::empty(),
        trunc,
    )
    .expect("positive offsets are always valid")
}

/// `1 / (q^step; q^step)_n` over the given registry.
pub fn inv_qq(step: u64, n: u64, markers: &MarkerSet, trunc: usize) -> QSeries {
    let mut out = QSeries::one(markers, trunc);
    for i in 1..=n {
        let e = (i * step) as usize;
        if e > trunc {
            break;
        }
        out.div_one_minus_q_power(e);
    }
    out
}

/// Coefficients of the Gaussian polynomial `[a, b]` in base `q^step`,
/// zero-extended when `b < 0` or `b > a`.
///
/// Built row by row from `[A,B] = [A-1,B-1] + q^(step*B) [A-1,B]`, so no
/// polynomial division is needed.
pub fn gaussian_coefficients(a: i64, b: i64, step: u64) -> Vec<BigInt> {
    if b < 0 || a < 0 || b > a {
        return Vec::new();
    }
    let (a, b) = (a as usize, b as usize);
    // only B' <= b and A' - B' <= a - b entries are ever needed
    let b = b.min(a - b);
    let step = step as usize;
    // row[k] holds [A, k] for the current A
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for big_a in 1..=a {
        let top = big_a.min(b);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(top + 1);
        for k in 0..=top {
            if k == 0 || k == big_a {
                next.push(vec![BigInt::one()]);
                continue;
            }
            let left = &row[k - 1];
            let shift = step * k;
            let right = row.get(k);
            let deg = step * k * (big_a - k);
            let mut poly = vec![BigInt::zero(); deg + 1];
            for (i, c) in left.iter().enumerate() {
                poly[i] += c;
            }
            if let Some(right) = right {
                for (i, c) in right.iter().enumerate() {
                    poly[i + shift] += c;
                }
            }
            next.push(poly);
        }
        row = next;
    }
    row.pop().unwrap_or_default()
}

/// Gaussian binomial `[a, b]` in base `q^step` as a series exact to `trunc`.
pub fn gaussian_binomial(a: i64, b: i64, step: u64, trunc: usize) -> QSeries {
    QSeries::from_integers(&gaussian_coefficients(a, b, step), trunc)
}

/// Whether the residues describe the parts that are allowed or the parts that
/// are excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceMode {
    Allowed,
    Excluded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceProductSpec {
    pub modulus: u64,
    pub residues: BTreeSet<u64>,
    pub mode: CongruenceMode,
}

impl CongruenceProductSpec {
    pub fn new(modulus: u64, residues: &[i64], mode: CongruenceMode) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidSpec("modulus must be positive".into()));
        }
        let residues = residues
            .iter()
            .map(|r| r.rem_euclid(modulus as i64) as u64)
            .collect();
        Ok(CongruenceProductSpec {
            modulus,
            residues,
            mode,
        })
    }

    pub fn allows(&self, part: u64) -> bool {
        let inside = self.residues.contains(&(part % self.modulus));
        match self.mode {
            CongruenceMode::Allowed => inside,
            CongruenceMode::Excluded => !inside,
        }
    }
}

/// `Π 1/(1 - q^n)` over the admissible `n <= trunc`.
pub fn congruence_product(spec: &CongruenceProductSpec, trunc: usize) -> QSeries {
    let mut out = QSeries::one(&MarkerSet::empty(), trunc);
    for n in 1..=trunc {
        if spec.allows(n as u64) {
            out.div_one_minus_q_power(n);
        }
    }
    out
}

/// `Σ_{n ∈ Z} (±1)^n q^(a n² + b n)`. Requires `|b| <= a` so that no
/// exponent is negative.
pub fn theta_sum(a: i64, b: i64, trunc: usize, alternating: bool) -> Result<QSeries> {
    if a < 1 {
        return Err(Error::InvalidSpec("theta sum needs a >= 1".into()));
    }
    if b.abs() > a {
        return Err(Error::NegativeExponent {
            exponent: a - b.abs(),
        });
    }
    let mut coeffs = vec![BigInt::zero(); trunc + 1];
    for dir in [1i64, -1] {
        let start = if dir == 1 { 0 } else { -1 };
        let mut n = start;
        loop {
            let e = a * n * n + b * n;
            if e as usize > trunc && n != start {
                break;
            }
            if (e as usize) <= trunc {
                let sign = if alternating && n.rem_euclid(2) == 1 {
                    -1
                } else {
                    1
                };
                coeffs[e as usize] += sign;
            }
            n += dir;
        }
    }
    Ok(QSeries::from_integers(&coeffs, trunc))
}
