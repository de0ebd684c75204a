use super::{neg_poch4, Accumulator};
use crate::qfactory::gaussian_coefficients;
use crate::series::{MarkerPoly, MarkerSet, QSeries};

/// Residue class of the largest part for `n >= 2`: `4h+1`, `4h`, `4h-1`
/// or `4h-2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlasgowBranch {
    PlusOne,
    Zero,
    MinusOne,
    MinusTwo,
}

impl GlasgowBranch {
    pub const ALL: [GlasgowBranch; 4] = [Self::PlusOne, Self::Zero, Self::MinusOne, Self::MinusTwo];

    fn offset(self) -> i64 {
        match self {
            Self::PlusOne => 1,
            Self::Zero => 0,
            Self::MinusOne => -1,
            Self::MinusTwo => -2,
        }
    }
}

/// Glasgow `b(n, 4h + δ)` for `n >= 2`:
///
/// | largest part | value |
/// |---|---|
/// | `4h+1` | `q^(2n+2h²+h) [n-2, h-1]_4` |
/// | `4h`   | `q^(4n+2h²+h-4) [n-2, h-1]_4` |
/// | `4h-1` | `q^(4n+2h²-3h) [n-2, h-2]_4` |
/// | `4h-2` | `q^(2n-3+2h²+h) [n-2, h-1]_4` |
pub fn glasgow_closed(n: usize, h: u64, branch: GlasgowBranch, trunc: usize) -> QSeries {
    assert!(n >= 2, "the closed forms start at two parts");
    let (n, h) = (n as i64, h as i64);
    let (e, bottom) = match branch {
        GlasgowBranch::PlusOne => (2 * n + 2 * h * h + h, h - 1),
        GlasgowBranch::Zero => (4 * n + 2 * h * h + h - 4, h - 1),
        GlasgowBranch::MinusOne => (4 * n + 2 * h * h - 3 * h, h - 2),
        GlasgowBranch::MinusTwo => (2 * n - 3 + 2 * h * h + h, h - 1),
    };
    let mut acc = Accumulator::new(&MarkerSet::empty(), trunc);
    acc.add(&[], e, &gaussian_coefficients(n - 2, bottom, 4));
    acc.finish()
}

/// Glasgow `b(n, h)` for any `n >= 1` and largest part `h`.
pub fn glasgow_entry(n: usize, h: u64, trunc: usize) -> QSeries {
    let e = MarkerSet::empty();
    if n == 1 {
        return match h {
            2 | 3 => QSeries::monomial(&e, h as usize, MarkerPoly::one(0), trunc),
            _ => QSeries::zero(&e, trunc),
        };
    }
    if h == 0 {
        return QSeries::zero(&e, trunc);
    }
    let branch = match h % 4 {
        1 => GlasgowBranch::PlusOne,
        0 => GlasgowBranch::Zero,
        3 => GlasgowBranch::MinusOne,
        _ => GlasgowBranch::MinusTwo,
    };
    let index = (h as i64 - branch.offset()) / 4;
    glasgow_closed(n, index as u64, branch, trunc)
}

/// The four row sums `Σ_h b(n, 4h+δ)` for `n >= 2`, in the order of
/// [`GlasgowBranch::ALL`]: `q^(2n+3)`, `q^(4n-1)`, `q^(4n+2)` and `q^(2n)`,
/// each times `(-q^7; q^4)_(n-2)`.
pub fn glasgow_row_sums(n: usize, trunc: usize) -> [QSeries; 4] {
    assert!(n >= 2);
    let tail = neg_poch4(7, n as u64 - 2, trunc);
    let e = MarkerSet::empty();
    let lead = |k: usize| QSeries::monomial(&e, k, MarkerPoly::one(0), trunc).mul(&tail);
    [
        lead(2 * n + 3),
        lead(4 * n - 1),
        lead(4 * n + 2),
        lead(2 * n),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sip::{basis_table, SipClassSpec};

    fn q(e: usize, t: usize) -> QSeries {
        QSeries::monomial(&MarkerSet::empty(), e, MarkerPoly::one(0), t)
    }

    #[test]
    fn two_part_values() {
        let t = 30;
        let expected = [(2, 4), (4, 7), (5, 7), (7, 10)];
        for h in 0..=20u64 {
            let want = expected
                .iter()
                .find(|(k, _)| *k == h)
                .map(|&(_, e)| q(e, t))
                .unwrap_or_else(|| QSeries::zero(&MarkerSet::empty(), t));
            assert_eq!(glasgow_entry(2, h, t), want, "h={h}");
        }
    }

    #[test]
    fn row_sums_match_closed_forms_and_table() {
        let max_n = 8;
        let table = basis_table(&SipClassSpec::glasgow(), max_n, 60);
        let t = table.trunc();
        for n in 2..=max_n {
            let sums = glasgow_row_sums(n, t);
            for (branch, sum) in GlasgowBranch::ALL.iter().zip(&sums) {
                let mut direct = QSeries::zero(&MarkerSet::empty(), t);
                for h in 0..=16 {
                    direct = direct.add(&glasgow_closed(n, h, *branch, t));
                }
                assert_eq!(&direct, sum, "n={n} {branch:?}");
            }
            let total = sums
                .iter()
                .fold(QSeries::zero(&MarkerSet::empty(), t), |a, s| a.add(s));
            assert_eq!(total, table.row_sum(n), "n={n}");
        }
    }

    #[test]
    fn row_sum_grouping() {
        // q^(2n)(1+q³)(1+q^(2n-1))(-q^7;q^4)_(n-2) = q^(2n)(1+q^(2n-1))(-q^3;q^4)_(n-1)
        let t = 80;
        for n in 2..=8usize {
            let sums = glasgow_row_sums(n, t);
            let total = sums
                .iter()
                .fold(QSeries::zero(&MarkerSet::empty(), t), |a, s| a.add(s));
            let one = q(0, t);
            let grouped =
                q(2 * n, t)
                    .mul(&one.add(&q(2 * n - 1, t)))
                    .mul(&neg_poch4(3, n as u64 - 1, t));
            assert_eq!(total, grouped, "n={n}");
        }
    }
}
