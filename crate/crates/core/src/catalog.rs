//! A registry of series = product identities. Every entry builds its sum side
//! (`lhs`) and product side (`rhs`) independently, and most carry one or more
//! combinatorial oracles: brute-force enumerations whose counting series must
//! agree with both sides.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::closed_forms::schur_entry;
use crate::error::{Error, Result};
use crate::ncopies::{
    enumerate_even_subscript, enumerate_ncopies, enumerate_ncopies_over, ncopies_gf,
};
use crate::partition::{
    counting_series, enumerate_overpartitions, enumerate_partitions, weighted_counting_series,
    Partition,
};
use crate::qfactory::{
    congruence_product, gaussian_binomial, inv_qq, poch_finite, poch_infinite, CongruenceMode,
    CongruenceProductSpec, PochSpec,
};
use crate::series::{MarkerPoly, MarkerSet, QSeries};
use crate::sip::{enumerate_class, SipClassSpec};

/// A counting series produced by enumeration, exact to `total_max`.
#[derive(Clone, Copy)]
pub struct Oracle {
    pub name: &'static str,
    pub series: fn(u64) -> QSeries,
}

/// One registered identity.
#[derive(Clone)]
pub struct IdentityEntry {
    pub id: &'static str,
    /// Where the identity comes from, in words.
    pub source: &'static str,
    pub lhs: fn(usize) -> QSeries,
    pub rhs: fn(usize) -> QSeries,
    pub oracles: Vec<Oracle>,
}

impl std::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityEntry")
            .field("id", &self.id)
            .field("source", &self.source)
            .field(
                "oracles",
                &self.oracles.iter().map(|o| o.name).collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub id: String,
    pub pass: bool,
    pub trunc: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub oracle: String,
    pub lhs_mismatch: Option<usize>,
    pub rhs_mismatch: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub id: String,
    pub total_max: u64,
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.lhs_mismatch.is_none() && c.rhs_mismatch.is_none())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TelescopeRow {
    pub n: u64,
    /// Partial sum through term `n` equals the closed quotient.
    pub partial_sum: bool,
    /// Consecutive quotients differ by exactly term `n`.
    pub step: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TelescopeReport {
    pub trunc: usize,
    pub rows: Vec<TelescopeRow>,
}

impl TelescopeReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.partial_sum && r.step)
    }
}

/// Every registered identity, in a fixed order.
pub fn registry() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry {
            id: "euler-any",
            source: "Euler: partitions into unrestricted parts",
            lhs: euler_any_sum,
            rhs: euler_any_product,
            oracles: vec![Oracle { name: "all partitions", series: all_partitions }],
        },
        IdentityEntry {
            id: "euler-distinct",
            source: "Euler: partitions into distinct parts",
            lhs: euler_distinct_sum,
            rhs: euler_distinct_product,
            oracles: vec![Oracle { name: "distinct parts", series: distinct_partitions }],
        },
        IdentityEntry {
            id: "rogers-ramanujan",
            source: "first Rogers-Ramanujan identity",
            lhs: rogers_ramanujan_sum,
            rhs: rogers_ramanujan_product,
            oracles: vec![
                Oracle { name: "parts differ by at least 2", series: rr_class },
                Oracle { name: "parts = 1, 4 (mod 5)", series: rr_parts },
            ],
        },
        IdentityEntry {
            id: "gollnitz-gordon-1",
            source: "first Göllnitz-Gordon identity",
            lhs: gollnitz_gordon_sum,
            rhs: gollnitz_gordon_product,
            oracles: vec![
                Oracle { name: "difference 2, and 4 between even parts", series: gg_class },
                Oracle { name: "parts = 1, 4, 7 (mod 8)", series: gg_parts },
            ],
        },
        IdentityEntry {
            id: "schur-refined",
            source: "Schur's 1926 theorem with parts counted by residue class mod 3",
            lhs: schur_sum,
            rhs: schur_product,
            oracles: vec![
                Oracle { name: "Schur difference conditions (u, v weights)", series: schur_class },
                Oracle { name: "distinct non-multiples of 3 (u, v weights)", series: schur_parts },
            ],
        },
        IdentityEntry {
            id: "glasgow-mod8",
            source: "Göllnitz's mod 8 theorem from the Glasgow Mathematical Journal (1967)",
            lhs: glasgow_sum,
            rhs: glasgow_product,
            oracles: vec![
                Oracle { name: "B(n): parts >= 2, odd parts 3 above smaller parts", series: glasgow_class },
                Oracle { name: "A(n): parts = 0, 2, 3, 4, 7 (mod 8)", series: glasgow_parts },
            ],
        },
        IdentityEntry {
            id: "slater-46",
            source: "Slater's list, identity (46)",
            lhs: slater46_sum,
            rhs: slater46_product,
            oracles: vec![
                Oracle { name: "n copies of n, weighted differences >= 1", series: ncopies_r1 },
                Oracle { name: "parts not = 0, 4, 6 (mod 10)", series: mod10_parts },
            ],
        },
        IdentityEntry {
            id: "slater-61",
            source: "Slater's list, identity (61)",
            lhs: slater61_sum,
            rhs: slater61_product,
            oracles: vec![
                Oracle { name: "n copies of n, weighted differences >= 0", series: ncopies_r0 },
                Oracle { name: "parts not = 0, 6, 8 (mod 14)", series: mod14_parts },
            ],
        },
        IdentityEntry {
            id: "slater-81",
            source: "Slater's list, identity (81)",
            lhs: slater81_sum,
            rhs: slater81_product,
            oracles: vec![
                Oracle { name: "n copies of n, weighted differences >= -1", series: ncopies_rm1 },
                Oracle { name: "C(n): parts not = 6, 8 (mod 14), distinct multiples of 7, two-coloured 3, 11", series: c_parts },
            ],
        },
        IdentityEntry {
            id: "slater-6-corrected",
            source: "Slater's list, identity (6) as corrected",
            lhs: slater6_sum,
            rhs: slater6_product,
            oracles: vec![
                Oracle { name: "L(m): n-copies overpartitions", series: l_over },
                Oracle { name: "J(m): overpartitions into non-multiples of 3", series: j_over },
            ],
        },
        IdentityEntry {
            id: "slater-86",
            source: "Slater's list, identity (86)",
            lhs: slater86_sum,
            rhs: slater86_product,
            oracles: vec![
                Oracle { name: "H(n): even subscripts", series: h_even },
                Oracle { name: "G(n): parts = 2, 3, 4, 5 (mod 16) up to sign", series: g_parts },
            ],
        },
        IdentityEntry {
            id: "mod7-sum",
            source: "mod 7 generalisation of Rogers-Ramanujan",
            lhs: mod7_sum,
            rhs: mod7_product,
            oracles: vec![],
        },
    ]
}

pub fn lookup(id: &str) -> Result<IdentityEntry> {
    registry()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Compare both sides coefficientwise through `q^trunc`.
pub fn verify(id: &str, trunc: usize) -> Result<VerifyReport> {
    let entry = lookup(id)?;
    Ok(verify_entry(&entry, trunc))
}

pub fn verify_entry(entry: &IdentityEntry, trunc: usize) -> VerifyReport {
    let mismatch = (entry.lhs)(trunc).first_mismatch(&(entry.rhs)(trunc));
    VerifyReport {
        id: entry.id.to_string(),
        pass: mismatch.is_none(),
        trunc,
        first_mismatch: mismatch,
    }
}

/// Every oracle of `id` against both sides for all totals up to `total_max`.
pub fn oracle_concordance(id: &str, total_max: u64) -> Result<OracleReport> {
    let entry = lookup(id)?;
    if entry.oracles.is_empty() {
        return Err(Error::NoOracle(id.to_string()));
    }
    let t = total_max as usize;
    let lhs = (entry.lhs)(t);
    let rhs = (entry.rhs)(t);
    let checks = entry
        .oracles
        .iter()
        .map(|o| {
            let s = (o.series)(total_max);
            OracleCheck {
                oracle: o.name.to_string(),
                lhs_mismatch: s.first_mismatch(&lhs),
                rhs_mismatch: s.first_mismatch(&rhs),
            }
        })
        .collect();
    Ok(OracleReport {
        id: id.to_string(),
        total_max,
        checks,
    })
}

/// The `n`-th summand of the mod 8 sum, `(-q³;q⁴)_(n-1) q^(2n) (1+q^(2n-1)) / (q²;q²)_n`.
/// For `n = 1` this is `(q² + q³)/(1 - q²)`.
pub fn glasgow_term(n: u64, trunc: usize) -> QSeries {
    assert!(n >= 1);
    let e = plain();
    let mut t = minus_poch(3, 4, n - 1, trunc).mul(&q_pow(2 * n as usize, trunc));
    t.mul_binomial_factor(false, &MarkerPoly::one(0), 2 * n as usize - 1);
    t.mul(&inv_qq(2, n, &e, trunc))
}

/// For each `N <= n_max`, checks `1 + Σ_(n=1..N) glasgow_term(n) = (-q³;q⁴)_N / (q²;q²)_N`
/// and that consecutive right-hand sides differ by `glasgow_term(N)`.
pub fn telescope_check(n_max: u64, trunc: usize) -> TelescopeReport {
    let e = plain();
    let closed = |n: u64| minus_poch(3, 4, n, trunc).mul(&inv_qq(2, n, &e, trunc));
    let mut partial = QSeries::one(&e, trunc);
    let mut prev = closed(0);
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let term = glasgow_term(n, trunc);
        partial = partial.add(&term);
        let cur = closed(n);
        rows.push(TelescopeRow {
            n,
            partial_sum: partial == cur,
            step: cur.sub(&prev) == term,
        });
        prev = cur;
    }
    TelescopeReport { trunc, rows }
}

/// `(-q;q²)_∞ Σ_j q^(2j²) / (-q;-q)_(2j)`, an intermediate form of the
/// Göllnitz-Gordon generating function.
pub fn gollnitz_pivot(trunc: usize) -> QSeries {
    let e = plain();
    // Σ_j q^(2j²)/(q;q)_(2j), then q -> -q; the numerators have even exponents
    let mut f = QSeries::zero(&e, trunc);
    let mut j = 0u64;
    while (2 * j * j) as usize <= trunc {
        f = f.add(&q_pow((2 * j * j) as usize, trunc).mul(&inv_qq(1, 2 * j, &e, trunc)));
        j += 1;
    }
    let f = f.substitute_power(true, 1);
    plus_poch_inf(1, 2, trunc).mul(&f)
}

/// Mismatches of [`gollnitz_pivot`] against the sum and product sides of
/// the first Göllnitz-Gordon identity.
pub fn pivot_check(trunc: usize) -> (Option<usize>, Option<usize>) {
    let p = gollnitz_pivot(trunc);
    (
        p.first_mismatch(&gollnitz_gordon_sum(trunc)),
        p.first_mismatch(&gollnitz_gordon_product(trunc)),
    )
}

fn plain() -> MarkerSet {
    MarkerSet::empty()
}

fn q_pow(e: usize, trunc: usize) -> QSeries {
    QSeries::monomial(&plain(), e, MarkerPoly::one(0), trunc)
}

/// `(-q^a; q^step)_n`.
fn minus_poch(a: i64, step: u64, n: u64, trunc: usize) -> QSeries {
    poch_finite(&PochSpec::plus(a, step), n, &plain(), trunc).expect("non-negative offset")
}

fn plus_poch_inf(a: i64, step: u64, trunc: usize) -> QSeries {
    poch_infinite(&PochSpec::plus(a, step), &plain(), trunc).expect("positive offset")
}

fn product_of(modulus: u64, residues: &[i64], mode: CongruenceMode, trunc: usize) -> QSeries {
    let spec = CongruenceProductSpec::new(modulus, residues, mode).expect("positive modulus");
    congruence_product(&spec, trunc)
}

/// `Σ_n term(n)` over `n = 0, 1, ...` while `lowest(n) <= trunc`, where
/// `lowest(n)` bounds the smallest exponent of the `n`-th term from below.
fn series_sum(trunc: usize, lowest: impl Fn(u64) -> u64, term: impl Fn(u64) -> QSeries) -> QSeries {
    let mut acc = QSeries::zero(&plain(), trunc);
    let mut n = 0u64;
    while lowest(n) as usize <= trunc {
        acc = acc.add(&term(n));
        n += 1;
    }
    acc
}

fn euler_any_sum(t: usize) -> QSeries {
    series_sum(
        t,
        |n| n,
        |n| q_pow(n as usize, t).mul(&inv_qq(1, n, &plain(), t)),
    )
}

fn euler_any_product(t: usize) -> QSeries {
    inv_qq(1, t as u64, &plain(), t)
}

fn euler_distinct_sum(t: usize) -> QSeries {
    let tri = |n: u64| n * (n + 1) / 2;
    series_sum(t, tri, |n| {
        q_pow(tri(n) as usize, t).mul(&inv_qq(1, n, &plain(), t))
    })
}

fn euler_distinct_product(t: usize) -> QSeries {
    plus_poch_inf(1, 1, t)
}

fn rogers_ramanujan_sum(t: usize) -> QSeries {
    series_sum(
        t,
        |n| n * n,
        |n| q_pow((n * n) as usize, t).mul(&inv_qq(1, n, &plain(), t)),
    )
}

fn rogers_ramanujan_product(t: usize) -> QSeries {
    product_of(5, &[1, 4], CongruenceMode::Allowed, t)
}

fn gollnitz_gordon_sum(t: usize) -> QSeries {
    series_sum(
        t,
        |n| n * n,
        |n| {
            minus_poch(1, 2, n, t)
                .mul(&q_pow((n * n) as usize, t))
                .mul(&inv_qq(2, n, &plain(), t))
        },
    )
}

fn gollnitz_gordon_product(t: usize) -> QSeries {
    product_of(8, &[1, 4, 7], CongruenceMode::Allowed, t)
}

/// `1 + Σ_n (Σ_h b(n, h)) / (q³;q³)_n` with the Schur basis generating
/// functions taken from their closed forms.
fn schur_sum(t: usize) -> QSeries {
    let uv = SipClassSpec::schur_refined().markers().clone();
    let mut acc = QSeries::one(&uv, t);
    let mut n = 1usize;
    // the smallest n-part basis element is 1 + 4 + ... + (3n-2)
    while n * (3 * n - 1) / 2 <= t {
        let mut row = QSeries::zero(&uv, t);
        for h in 1..=t as u64 {
            row = row.add(&schur_entry(n, h, t));
        }
        acc = acc.add(&row.mul(&inv_qq(3, n as u64, &uv, t)));
        n += 1;
    }
    acc
}

/// `(-uq;q³)_∞ (-vq²;q³)_∞`.
fn schur_product(t: usize) -> QSeries {
    let uv = SipClassSpec::schur_refined().markers().clone();
    let a = poch_infinite(&PochSpec::plus(1, 3).with_marker("u"), &uv, t).expect("u is registered");
    let b = poch_infinite(&PochSpec::plus(2, 3).with_marker("v"), &uv, t).expect("v is registered");
    a.mul(&b)
}

fn glasgow_sum(t: usize) -> QSeries {
    let mut acc = QSeries::one(&plain(), t);
    let mut n = 1u64;
    while (2 * n) as usize <= t {
        acc = acc.add(&glasgow_term(n, t));
        n += 1;
    }
    acc
}

fn glasgow_product(t: usize) -> QSeries {
    product_of(8, &[1, 5, 6], CongruenceMode::Excluded, t)
}

fn slater46_sum(t: usize) -> QSeries {
    ncopies_gf(1, t)
}

fn slater46_product(t: usize) -> QSeries {
    product_of(10, &[0, 4, -4], CongruenceMode::Excluded, t)
}

fn slater61_sum(t: usize) -> QSeries {
    ncopies_gf(0, t)
}

fn slater61_product(t: usize) -> QSeries {
    product_of(14, &[0, 6, -6], CongruenceMode::Excluded, t)
}

fn slater81_sum(t: usize) -> QSeries {
    ncopies_gf(-1, t)
}

/// `(-q⁷;q⁷)_∞ / ((q³;q¹⁴)_∞ (q¹¹;q¹⁴)_∞) · Π_(n = ±1, ..., ±5 mod 14) 1/(1-q^n)`.
///
/// The residues `±1` and `±5` are needed: the sum side has a `q¹` term
/// (from the single partition `1_1`), and factoring it as a product
/// `Π (1-q^n)^(-a_n)` gives `a_n = 1` on `±1, ±2, ±4, ±5`, `a_n = 2` on `±3`,
/// `a_n = 1` on `7` and `a_n = 0` on `0, ±6 (mod 14)`.
fn slater81_product(t: usize) -> QSeries {
    let twice = product_of(14, &[3, -3], CongruenceMode::Allowed, t);
    let once = product_of(
        14,
        &[1, -1, 2, -2, 3, -3, 4, -4, 5, -5],
        CongruenceMode::Allowed,
        t,
    );
    plus_poch_inf(7, 7, t).mul(&twice).mul(&once)
}

fn slater6_sum(t: usize) -> QSeries {
    series_sum(
        t,
        |n| n * n,
        |n| {
            minus_poch(0, 1, n, t)
                .mul(&q_pow((n * n) as usize, t))
                .mul(&inv_qq(1, n, &plain(), t))
                .mul(&odd_qq_inverse(n, t))
        },
    )
}

/// `Π_(3 ∤ n) (1 + q^n) / (1 - q^n)`.
fn slater6_product(t: usize) -> QSeries {
    let mut out = product_of(3, &[0], CongruenceMode::Excluded, t);
    for n in 1..=t {
        if n % 3 != 0 {
            out.mul_binomial_factor(false, &MarkerPoly::one(0), n);
        }
    }
    out
}

fn slater86_sum(t: usize) -> QSeries {
    series_sum(
        t,
        |n| 2 * n * n,
        |n| q_pow((2 * n * n) as usize, t).mul(&inv_qq(1, 2 * n, &plain(), t)),
    )
}

fn slater86_product(t: usize) -> QSeries {
    product_of(
        16,
        &[2, -2, 3, -3, 4, -4, 5, -5],
        CongruenceMode::Allowed,
        t,
    )
}

/// `Σ_N q^(N²)/(q;q)_N Σ_(m=0..N) [N, m] q^(m²)`.
fn mod7_sum(t: usize) -> QSeries {
    series_sum(
        t,
        |n| n * n,
        |n| {
            let mut inner = QSeries::zero(&plain(), t);
            for m in 0..=n {
                let g = gaussian_binomial(n as i64, m as i64, 1, t);
                inner = inner.add(&g.shift((m * m) as usize));
            }
            inner
                .shift((n * n) as usize)
                .mul(&inv_qq(1, n, &plain(), t))
        },
    )
}

fn mod7_product(t: usize) -> QSeries {
    product_of(7, &[0, 3, -3], CongruenceMode::Excluded, t)
}

/// `1 / (q;q²)_n`.
fn odd_qq_inverse(n: u64, t: usize) -> QSeries {
    let mut out = QSeries::one(&plain(), t);
    for i in 1..=n {
        let e = (2 * i - 1) as usize;
        if e > t {
            break;
        }
        out.div_one_minus_q_power(e);
    }
    out
}

fn parts_where(total_max: u64, allowed: impl Fn(u64) -> bool) -> QSeries {
    counting_series(
        enumerate_partitions(total_max, |p| p.parts().iter().all(|&x| allowed(x))),
        total_max as usize,
    )
}

fn class_series(spec: &SipClassSpec, total_max: u64) -> QSeries {
    counting_series(enumerate_class(spec, total_max), total_max as usize)
}

fn all_partitions(m: u64) -> QSeries {
    parts_where(m, |_| true)
}

fn distinct_partitions(m: u64) -> QSeries {
    counting_series(
        enumerate_partitions(m, |p| p.parts().windows(2).all(|w| w[0] < w[1])),
        m as usize,
    )
}

fn rr_class(m: u64) -> QSeries {
    class_series(&SipClassSpec::rogers_ramanujan(), m)
}

fn rr_parts(m: u64) -> QSeries {
    parts_where(m, |x| matches!(x % 5, 1 | 4))
}

fn gg_class(m: u64) -> QSeries {
    class_series(&SipClassSpec::gollnitz_gordon(), m)
}

fn gg_parts(m: u64) -> QSeries {
    parts_where(m, |x| matches!(x % 8, 1 | 4 | 7))
}

fn schur_class(m: u64) -> QSeries {
    let spec = SipClassSpec::schur_refined();
    weighted_counting_series(
        enumerate_class(&spec, m),
        spec.markers(),
        |p: &Partition| spec.partition_weight(p.parts()),
        m as usize,
    )
}

/// Distinct parts prime to 3, weighted `u` per part `1 (mod 3)` and `v` per
/// part `2 (mod 3)`.
fn schur_parts(m: u64) -> QSeries {
    let uv = SipClassSpec::schur_refined().markers().clone();
    weighted_counting_series(
        enumerate_partitions(m, |p| {
            p.parts().windows(2).all(|w| w[0] < w[1]) && p.parts().iter().all(|x| x % 3 != 0)
        }),
        &uv,
        |p: &Partition| {
            let ones = p.parts().iter().filter(|&&x| x % 3 == 1).count() as u32;
            let twos = p.len() as u32 - ones;
            MarkerPoly::monomial(vec![ones, twos], 1)
        },
        m as usize,
    )
}

fn glasgow_class(m: u64) -> QSeries {
    class_series(&SipClassSpec::glasgow(), m)
}

fn glasgow_parts(m: u64) -> QSeries {
    parts_where(m, |x| matches!(x % 8, 0 | 2 | 3 | 4 | 7))
}

fn ncopies_r1(m: u64) -> QSeries {
    counting_series(enumerate_ncopies(m, Some(1), |_| true), m as usize)
}

fn ncopies_r0(m: u64) -> QSeries {
    counting_series(enumerate_ncopies(m, Some(0), |_| true), m as usize)
}

fn ncopies_rm1(m: u64) -> QSeries {
    counting_series(enumerate_ncopies(m, Some(-1), |_| true), m as usize)
}

fn mod10_parts(m: u64) -> QSeries {
    parts_where(m, |x| !matches!(x % 10, 0 | 4 | 6))
}

fn mod14_parts(m: u64) -> QSeries {
    parts_where(m, |x| !matches!(x % 14, 0 | 6 | 8))
}

/// Multiples of 7 at most once, other parts `±1, ..., ±5 (mod 14)`, and
/// parts `±3 (mod 14)` in two colours: a part size used `k` times admits
/// `k + 1` colourings.
fn c_parts(m: u64) -> QSeries {
    let mut counts = vec![BigInt::from(0); m as usize + 1];
    let admissible = |p: &Partition| {
        p.parts().iter().all(|&x| !matches!(x % 14, 6 | 8))
            && p.parts().windows(2).all(|w| w[0] != w[1] || w[0] % 7 != 0)
    };
    for p in enumerate_partitions(m, admissible) {
        let mut colourings = BigInt::from(1);
        let mut i = 0;
        let parts = p.parts();
        while i < parts.len() {
            let mut j = i;
            while j < parts.len() && parts[j] == parts[i] {
                j += 1;
            }
            if matches!(parts[i] % 14, 3 | 11) {
                colourings *= (j - i + 1) as u64;
            }
            i = j;
        }
        counts[parts.iter().sum::<u64>() as usize] += colourings;
    }
    QSeries::from_integers(&counts, m as usize)
}

fn l_over(m: u64) -> QSeries {
    counting_series(enumerate_ncopies_over(m), m as usize)
}

fn j_over(m: u64) -> QSeries {
    counting_series(
        enumerate_overpartitions(m, |o| o.parts().iter().all(|x| x % 3 != 0)),
        m as usize,
    )
}

fn h_even(m: u64) -> QSeries {
    counting_series(enumerate_even_subscript(m), m as usize)
}

fn g_parts(m: u64) -> QSeries {
    parts_where(m, |x| matches!(x % 16, 2 | 3 | 4 | 5 | 11 | 12 | 13 | 14))
}
