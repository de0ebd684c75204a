use num_bigint::BigInt;

use super::{poly_mul, unit, Accumulator};
use crate::qfactory::{gaussian_coefficients, inv_qq};
use crate::series::{MarkerPoly, MarkerSet, QSeries};
use crate::sip::SipClassSpec;

/// Which residue class of the largest part: `3n+3h-1`, `3n+3h-2` or `3n+3h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchurBranch {
    MinusOne,
    MinusTwo,
    Zero,
}

fn markers() -> MarkerSet {
    SipClassSpec::schur_refined().markers().clone()
}

fn binom3(a: i64, b: i64) -> Vec<BigInt> {
    gaussian_coefficients(a, b, 3)
}

/// Product of three base-`q³` binomials, empty when any factor vanishes.
fn triple(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Vec<BigInt> {
    poly_mul(
        &poly_mul(&binom3(x.0, x.1), &binom3(y.0, y.1)),
        &binom3(z.0, z.1),
    )
}

fn half(x: i64) -> i64 {
    debug_assert!(x % 2 == 0);
    x / 2
}

/// `(1 + uq) · s`.
fn one_plus_uq(s: QSeries) -> QSeries {
    let uq = QSeries::monomial(
        s.markers(),
        1,
        MarkerPoly::monomial(vec![1, 0], 1),
        s.trunc(),
    );
    s.add(&s.mul(&uq))
}

/// `S_1(n, h) = b(n, 3n+3h-1)`.
fn s1(n: i64, h: i64, trunc: usize) -> QSeries {
    let mut acc = Accumulator::new(&markers(), trunc);
    for j in 0..=(n - h) {
        for i in 0..=h {
            let c = triple((n - j - 1, h), (j + h - i, h), (h, i));
            let e = half(n * (3 * n + 1)) + half(h * (3 * h + 5)) + half(i * (3 * i + 1)) - j;
            acc.add(&[(j + h - i) as u32, (n - j) as u32], e, &c);
        }
    }
    acc.finish()
}

/// `S_2(n, h) = b(n, 3n+3h-2)`.
fn s2(n: i64, h: i64, trunc: usize) -> QSeries {
    let mut acc = Accumulator::new(&markers(), trunc);
    if h == 0 {
        acc.add(&[n as u32, 0], half(n * (3 * n - 1)), &unit());
        return acc.finish();
    }
    for j in 0..=(n - h) {
        for i in 0..=h {
            let c = triple((n - j - 1, h - 1), (j + h - i, h), (h - 1, i - 1));
            let e = half(n * (3 * n + 1)) + half(h * (3 * h + 5)) + half(i * (3 * i - 5)) - j;
            acc.add(&[(j + h - i) as u32, (n - j) as u32], e, &c);
        }
    }
    one_plus_uq(acc.finish())
}

/// Schur's `b(n, 3n+3h+δ)` for the branch `δ ∈ {-1, -2, 0}`, as a
/// polynomial in `q` with `u`, `v` markers.
pub fn schur_closed(n: usize, h: u64, branch: SchurBranch, trunc: usize) -> QSeries {
    assert!(n >= 1);
    let (n, h) = (n as i64, h as i64);
    match branch {
        SchurBranch::MinusOne => s1(n, h, trunc),
        SchurBranch::MinusTwo => s2(n, h, trunc),
        SchurBranch::Zero => {
            let s = s1(n, h, trunc);
            let uq = QSeries::monomial(s.markers(), 1, MarkerPoly::monomial(vec![1, 0], 1), trunc);
            s.mul(&uq)
        }
    }
}

/// Schur's `b(n, h)` for any largest part `h`.
pub fn schur_entry(n: usize, h: u64, trunc: usize) -> QSeries {
    let (branch, top) = match h % 3 {
        2 => (SchurBranch::MinusOne, h + 1),
        1 => (SchurBranch::MinusTwo, h + 2),
        _ => (SchurBranch::Zero, h),
    };
    let base = 3 * n as u64;
    if h == 0 || top < base {
        return QSeries::zero(&markers(), trunc);
    }
    schur_closed(n, (top - base) / 3, branch, trunc)
}

/// `(1+uq) S_1(n,h) + S_2(n,h+1)` as the single double sum
/// `Σ_j Σ_(i=-1..h) v^(n-j) u^(j+h-i) q^(n(3n+1)/2 + h(3h+5)/2 + i(3i+1)/2 - j)
///  [n-1-j, h] [j+h-i, j] [j+1, i+1]`, for `h >= -1`.
///
/// On the `h = -1` row the factor `[n-1-j, -1]` survives only at `j = n`,
/// where it is read as `[-1, -1] = 1`.
pub fn combined_row_formula(n: usize, h: i64, trunc: usize) -> QSeries {
    assert!(n >= 1 && h >= -1);
    let n = n as i64;
    let mut acc = Accumulator::new(&markers(), trunc);
    for j in 0..=(n - h) {
        if j > n {
            continue;
        }
        for i in -1..=h {
            let first = if n - 1 - j == -1 && h == -1 {
                unit()
            } else {
                binom3(n - 1 - j, h)
            };
            let c = poly_mul(
                &poly_mul(&first, &binom3(j + h - i, j)),
                &binom3(j + 1, i + 1),
            );
            let e = half(n * (3 * n + 1)) + half(h * (3 * h + 5)) + half(i * (3 * i + 1)) - j;
            acc.add(&[(j + h - i) as u32, (n - j) as u32], e, &c);
        }
    }
    acc.finish()
}

/// The coefficient of `u^r v^s` in `1 + Σ_n Σ_(h >= -1) combined_row_formula(n, h) / (q³;q³)_n`
/// against `q^(r(3r-1)/2 + s(3s+1)/2) / ((q³;q³)_r (q³;q³)_s)`, to order `trunc`.
pub fn schur_coefficient_check(r: u32, s: u32, trunc: usize) -> bool {
    let uv = markers();
    let mut total = QSeries::one(&uv, trunc);
    let mut n = 1usize;
    // every n-part basis element has total at least n(3n-1)/2
    while n * (3 * n - 1) / 2 <= trunc {
        let mut row = QSeries::zero(&uv, trunc);
        for h in -1..=(n as i64) {
            row = row.add(&combined_row_formula(n, h, trunc));
        }
        total = total.add(&row.mul(&inv_qq(3, n as u64, &uv, trunc)));
        n += 1;
    }
    let lhs = total.marker_coefficient(&[r, s]);
    let (ri, si) = (r as usize, s as usize);
    let e = MarkerSet::empty();
    let rhs = QSeries::monomial(
        &e,
        (3 * ri * ri - ri) / 2 + si * (3 * si + 1) / 2,
        MarkerPoly::one(0),
        trunc,
    )
    .mul(&inv_qq(3, r as u64, &e, trunc))
    .mul(&inv_qq(3, s as u64, &e, trunc));
    lhs == rhs
}
