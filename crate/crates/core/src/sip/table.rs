use super::{max_basis_largest, min_basis_total, SipClassSpec};
use crate::error::{Error, Result};
use crate::qfactory::inv_qq;
use crate::series::{MarkerSet, QSeries};

/// `b(n, h)`: generating function of the basis elements with `n` parts and
/// largest part `h`, weighted by the class's marker weights.
///
/// Every entry is an exact polynomial of degree at most `n * h`, stored at
/// order `max_n * max_h`.
#[derive(Clone, Debug)]
pub struct BasisTable {
    max_n: usize,
    max_h: u64,
    markers: MarkerSet,
    // rows[n - 1][h]
    rows: Vec<Vec<QSeries>>,
}

impl BasisTable {
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn max_h(&self) -> u64 {
        self.max_h
    }

    pub fn trunc(&self) -> usize {
        self.rows[0][0].trunc()
    }

    /// `b(n, h)`; zero outside `1 <= n <= max_n`, `h <= max_h`.
    pub fn get(&self, n: usize, h: u64) -> QSeries {
        if n == 0 || n > self.max_n || h > self.max_h {
            return QSeries::zero(&self.markers, self.trunc());
        }
        self.rows[n - 1][h as usize].clone()
    }

    pub fn entry(&self, n: usize, h: u64) -> Option<&QSeries> {
        if n == 0 || n > self.max_n || h > self.max_h {
            return None;
        }
        Some(&self.rows[n - 1][h as usize])
    }

    /// `b(n) = Σ_h b(n, h)` over the tabulated largest parts.
    pub fn row_sum(&self, n: usize) -> QSeries {
        let mut acc = QSeries::zero(&self.markers, self.trunc());
        if n >= 1 && n <= self.max_n {
            for s in &self.rows[n - 1] {
                acc = acc.add(s);
            }
        }
        acc
    }
}

/// Tabulate `b(n, h)` for `n <= max_n`, `h <= max_h` via
/// `b(n, h) = w(h) q^h Σ b(n-1, g)` over `h - g ∈ [d_r, d_r + k)`, where `r`
/// is the residue of `h`, seeded by `b(1, c_r) = w(c_r) q^(c_r)`.
pub fn basis_table(spec: &SipClassSpec, max_n: usize, max_h: u64) -> BasisTable {
    assert!(max_n >= 1);
    let trunc = max_n * max_h as usize;
    let markers = spec.markers().clone();
    let k = spec.k();
    let mut rows: Vec<Vec<QSeries>> = Vec::with_capacity(max_n);
    let first: Vec<QSeries> = (0..=max_h)
        .map(|h| {
            if h >= 1 && spec.threshold_for(h) == h {
                QSeries::monomial(&markers, h as usize, spec.weight_for(h).clone(), trunc)
            } else {
                QSeries::zero(&markers, trunc)
            }
        })
        .collect();
    rows.push(first);
    for _n in 2..=max_n {
        let prev = rows.last().unwrap();
        let row: Vec<QSeries> = (0..=max_h)
            .map(|h| {
                let mut acc = QSeries::zero(&markers, trunc);
                if h == 0 {
                    return acc;
                }
                let d = spec.gap_for(h);
                // g = h - d - t for t in 0..k, with g >= 1
                for t in 0..k {
                    let Some(g) = h.checked_sub(d + t) else { break };
                    if g >= 1 {
                        acc = acc.add(&prev[g as usize]);
                    }
                }
                if acc.is_zero() {
                    return acc;
                }
                acc.shift(h as usize).scale(spec.weight_for(h))
            })
            .collect();
        rows.push(row);
    }
    BasisTable {
        max_n,
        max_h,
        markers,
        rows,
    }
}

/// Number of parts past which every basis element has total above `trunc`.
fn depth_for(spec: &SipClassSpec, trunc: usize) -> usize {
    let mut n = 0;
    while min_basis_total(spec, n + 1) <= trunc as u64 {
        n += 1;
    }
    n
}

/// `Σ_n b(n) / (q^k; q^k)_n` to order `trunc`.
pub fn assemble_gf(spec: &SipClassSpec, table: &BasisTable, trunc: usize) -> Result<QSeries> {
    let needed_n = depth_for(spec, trunc);
    let needed_h = (trunc as u64).min(max_basis_largest(spec, needed_n.max(1)));
    if needed_n > 0 && (table.max_n() < needed_n || table.max_h() < needed_h) {
        return Err(Error::InsufficientTableDepth {
            needed_n,
            needed_h,
            max_n: table.max_n(),
            max_h: table.max_h(),
        });
    }
    let markers = spec.markers();
    let mut total = QSeries::one(markers, trunc);
    for n in 1..=needed_n {
        let b = table.row_sum(n);
        let b = if b.trunc() >= trunc {
            b.truncate(trunc)
        } else {
            b.pad_polynomial(trunc)
        };
        let term = b.mul(&inv_qq(spec.k(), n as u64, markers, trunc));
        total = total.add(&term);
    }
    Ok(total)
}

/// Build a sufficiently deep table and assemble the class generating function.
pub fn class_generating_function(spec: &SipClassSpec, trunc: usize) -> QSeries {
    let n = depth_for(spec, trunc).max(1);
    let h = (trunc as u64).min(max_basis_largest(spec, n)).max(1);
    let table = basis_table(spec, n, h);
    assemble_gf(spec, &table, trunc).expect("table depth chosen from the same bounds")
}
