use crate::closed_forms::Accumulator;
use crate::qfactory::{gaussian_coefficients, inv_qq};
use crate::series::{MarkerPoly, MarkerSet, QSeries};

/// `g_r(n, m, j)`: generating function of the exact-`r` chains with `n`
/// parts, smallest part of the form `i_i` and largest part `m_j`.
#[derive(Clone, Debug)]
pub struct GrTable {
    r: i64,
    max_n: usize,
    max_m: u64,
    trunc: usize,
    // entries[n - 1][m][j]; index 0 in the last two coordinates is unused
    entries: Vec<Vec<Vec<QSeries>>>,
}

impl GrTable {
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn max_m(&self) -> u64 {
        self.max_m
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Zero outside the tabulated range or when `j` is not in `1..=m`.
    pub fn get(&self, n: usize, m: i64, j: i64) -> QSeries {
        self.entry(n, m, j)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(&MarkerSet::empty(), self.trunc))
    }

    fn entry(&self, n: usize, m: i64, j: i64) -> Option<&QSeries> {
        if n == 0 || n > self.max_n || m < 1 || m as u64 > self.max_m || j < 1 || j > m {
            return None;
        }
        Some(&self.entries[n - 1][m as usize][j as usize])
    }

    /// `Σ_(m, j) g_r(n, m, j)`.
    pub fn part_count_sum(&self, n: usize) -> QSeries {
        let mut acc = QSeries::zero(&MarkerSet::empty(), self.trunc);
        if n == 0 || n > self.max_n {
            return acc;
        }
        for row in &self.entries[n - 1] {
            for s in row {
                acc = acc.add(s);
            }
        }
        acc
    }
}

/// Tabulate `g_r(n, m, j)` for `n <= max_n`, `m <= max_m` from
/// `g_r(1, m, m) = q^m` and `g_r(n, m, j) = q^m Σ_(i=1..m) g_r(n-1, m-j-i-r, i)`.
pub fn gr_table(r: i64, max_n: usize, max_m: u64, trunc: usize) -> GrTable {
    assert!(r >= -1 && max_n >= 1);
    let e = MarkerSet::empty();
    let zero = QSeries::zero(&e, trunc);
    let blank = |_: usize| -> Vec<Vec<QSeries>> {
        (0..=max_m)
            .map(|m| vec![zero.clone(); m as usize + 1])
            .collect()
    };
    let mut table = GrTable {
        r,
        max_n,
        max_m,
        trunc,
        entries: Vec::with_capacity(max_n),
    };
    let mut first = blank(1);
    for m in 1..=max_m {
        first[m as usize][m as usize] =
            QSeries::monomial(&e, m as usize, MarkerPoly::one(0), trunc);
    }
    table.entries.push(first);
    for n in 2..=max_n {
        let mut layer = blank(n);
        for m in 1..=max_m as i64 {
            for j in 1..=m {
                let mut acc = zero.clone();
                for i in 1..=m {
                    if let Some(s) = table.entry(n - 1, m - j - i - r, i) {
                        acc = acc.add(s);
                    }
                }
                if !acc.is_zero() {
                    layer[m as usize][j as usize] = acc.shift(m as usize);
                }
            }
        }
        table.entries.push(layer);
    }
    table
}

/// `g_r(n, m, j)` from the closed forms, dispatched on the parities of `r`,
/// `n`, `m` and `j`. Outside the four parity patterns (and the one-part base
/// case) the value is zero.
///
/// With `r = 2R-1` or `r = 2R`, and `n` parts written as `2N` or `2N-1`:
///
/// * `g_(2R-1)(2N, 2M, 2J-1) = q^(3M-J+(4R+2)N²-(8R+2)N+3R+1) [M-(2R-1)N-J+R-1, 2N-2]_2`
/// * `g_(2R-1)(2N, 2M-1, 2J) = q^(3M-J+(4R+2)N²-(8R+2)N+3R-1) [M-(2R-1)N-J+R-2, 2N-2]_2`
/// * `g_(2R-1)(2N-1, 2M, 2J) = q g_(2R-1)(2N-1, 2M-1, 2J-1)
///   = q^(3M-J+(4R+2)N²-(12R+4)N+8R+2) [M-(2R-1)N-J+2R-2, 2N-3]_2`
/// * `g_(2R)(2N, 2M, 2J) = q g_(2R)(2N, 2M-1, 2J-1)
///   = q^(3M-J+(4R+4)N²-(8R+6)N+3R+2) [M-2RN-J+R-1, 2N-2]_2`
/// * `g_(2R)(2N-1, 2M, 2J) = q g_(2R)(2N-1, 2M-1, 2J-1)
///   = q^(3M-J+(4R+4)N²-(12R+10)N+8R+6) [M-2RN-J+2R-1, 2N-3]_2`
pub fn gr_closed(r: i64, n: usize, m: i64, j: i64, trunc: usize) -> QSeries {
    assert!(r >= -1 && n >= 1);
    let e = MarkerSet::empty();
    if m < 1 || j < 1 || j > m {
        return QSeries::zero(&e, trunc);
    }
    if n == 1 {
        return if m == j {
            QSeries::monomial(&e, m as usize, MarkerPoly::one(0), trunc)
        } else {
            QSeries::zero(&e, trunc)
        };
    }
    let n_even = n.is_multiple_of(2);
    let big_n = (n as i64 + 1) / 2;
    let r_odd = r.rem_euclid(2) == 1;
    let big_r = if r_odd { (r + 1) / 2 } else { r / 2 };
    // (M, J, extra shift, lowered top) relative to the even-largest-value form
    let (big_m, big_j, drop, lower) = match (r_odd && n_even, m % 2 == 0, j % 2 == 0) {
        (true, true, false) => (m / 2, (j + 1) / 2, 0, 0),
        (true, false, true) => ((m + 1) / 2, j / 2, 2, 1),
        (false, true, true) => (m / 2, j / 2, 0, 0),
        (false, false, false) => ((m + 1) / 2, (j + 1) / 2, 1, 0),
        _ => return QSeries::zero(&e, trunc),
    };
    let (mm, jj, nn, rr) = (big_m, big_j, big_n, big_r);
    let (exp, top, bottom) = match (r_odd, n_even) {
        (true, true) => (
            3 * mm - jj + (4 * rr + 2) * nn * nn - (8 * rr + 2) * nn + 3 * rr + 1,
            mm - (2 * rr - 1) * nn - jj + rr - 1,
            2 * nn - 2,
        ),
        (true, false) => (
            3 * mm - jj + (4 * rr + 2) * nn * nn - (12 * rr + 4) * nn + 8 * rr + 2,
            mm - (2 * rr - 1) * nn - jj + 2 * rr - 2,
            2 * nn - 3,
        ),
        (false, true) => (
            3 * mm - jj + (4 * rr + 4) * nn * nn - (8 * rr + 6) * nn + 3 * rr + 2,
            mm - 2 * rr * nn - jj + rr - 1,
            2 * nn - 2,
        ),
        (false, false) => (
            3 * mm - jj + (4 * rr + 4) * nn * nn - (12 * rr + 10) * nn + 8 * rr + 6,
            mm - 2 * rr * nn - jj + 2 * rr - 1,
            2 * nn - 3,
        ),
    };
    let mut acc = Accumulator::new(&e, trunc);
    acc.add(
        &[],
        exp - drop,
        &gaussian_coefficients(top - lower, bottom, 2),
    );
    acc.finish()
}

/// `β_r(m) = q^(m² + r·C(m,2)) / (q; q²)_m`.
pub fn beta_r(m: u64, r: i64, trunc: usize) -> QSeries {
    assert!(r >= -1);
    let e = MarkerSet::empty();
    let m_i = m as i64;
    let exp = m_i * m_i + r * m_i * (m_i - 1) / 2;
    let mut out = QSeries::monomial(&e, exp as usize, MarkerPoly::one(0), trunc);
    for i in 1..=m {
        let p = (2 * i - 1) as usize;
        if p > trunc {
            break;
        }
        out.div_one_minus_q_power(p);
    }
    out
}

/// `Σ_m β_r(m) / (q;q)_m`: all n-copies partitions with successive
/// weighted differences at least `r`.
pub fn ncopies_gf(r: i64, trunc: usize) -> QSeries {
    let e = MarkerSet::empty();
    let mut total = QSeries::zero(&e, trunc);
    let mut m = 0u64;
    loop {
        let mi = m as i64;
        if mi * mi + r * mi * (mi - 1) / 2 > trunc as i64 {
            break;
        }
        total = total.add(&beta_r(m, r, trunc).mul(&inv_qq(1, m, &e, trunc)));
        m += 1;
    }
    total
}
