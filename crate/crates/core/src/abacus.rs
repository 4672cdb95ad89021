//! Two-row abacus of a charged bipartition and its e-period decomposition.
//!
//! Row `j` carries a bead at each β-number `(λʲ)ᵗ_i + s_j − i + 1`, `i ≥ 1`.
//! Row 1 (drawn at the bottom) belongs to `λ¹`, row 2 (top) to `λ²`.
//!
//! An e-period is a run of `e` beads in consecutive columns, starting in the
//! rightmost column holding a bead and moving left, whose rows never go back
//! up from 1 to 2, and where every row-2 bead sits over a row-1 space. The
//! abacus is totally e-periodic when periods can be peeled off forever.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::FockParams;
use crate::partitions::{Bipartition, Component, Partition};

/// One row of beads. All columns `≤ full_below` are beads; `extra` holds the
/// remaining beads, all `≥ full_below + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BeadRow {
    full_below: i64,
    #[serde(rename = "beads")]
    extra: BTreeSet<i64>,
}

impl BeadRow {
    /// Beads at the β-numbers of a partition `p` (already transposed) with
    /// charge `charge`.
    pub fn from_beta_numbers(p: &Partition, charge: i64) -> Self {
        let extra = p
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &part)| part as i64 + charge - i as i64)
            .collect();
        let mut row = BeadRow {
            full_below: charge - p.rows() as i64,
            extra,
        };
        row.normalize();
        row
    }

    pub fn vacuum(charge: i64) -> Self {
        BeadRow {
            full_below: charge,
            extra: BTreeSet::new(),
        }
    }

    fn normalize(&mut self) {
        while self.extra.remove(&(self.full_below + 1)) {
            self.full_below += 1;
        }
    }

    pub fn full_below(&self) -> i64 {
        self.full_below
    }

    /// Beads with a space somewhere to their left.
    pub fn exceptional(&self) -> &BTreeSet<i64> {
        &self.extra
    }

    pub fn has_bead(&self, column: i64) -> bool {
        column <= self.full_below || self.extra.contains(&column)
    }

    pub fn rightmost(&self) -> i64 {
        self.extra.last().copied().unwrap_or(self.full_below)
    }

    /// Charge of the row: the `t` with the same number of beads as the
    /// vacuum row filled up to column `t`.
    pub fn charge(&self) -> i64 {
        self.full_below + self.extra.len() as i64
    }

    pub fn is_vacuum(&self) -> bool {
        self.extra.is_empty()
    }

    fn remove(&mut self, column: i64) {
        if column <= self.full_below {
            self.extra.extend(column + 1..=self.full_below);
            self.full_below = column - 1;
        } else {
            let removed = self.extra.remove(&column);
            debug_assert!(removed, "no bead at column {column}");
        }
        self.normalize();
    }

    /// Recovers the partition whose transpose has these β-numbers.
    pub fn partition(&self) -> Partition {
        let charge = self.charge();
        let transposed: Vec<usize> = self
            .extra
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &b)| (b - charge + i as i64) as usize)
            .collect();
        Partition::new(transposed)
            .expect("β-numbers decode to a partition")
            .transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Abacus {
    row1: BeadRow,
    row2: BeadRow,
}

impl Abacus {
    pub fn build(bp: &Bipartition, fp: &FockParams) -> Self {
        Abacus {
            row1: BeadRow::from_beta_numbers(&bp.first.transpose(), fp.charge(Component::First)),
            row2: BeadRow::from_beta_numbers(&bp.second.transpose(), fp.charge(Component::Second)),
        }
    }

    pub fn vacuum(t1: i64, t2: i64) -> Self {
        Abacus {
            row1: BeadRow::vacuum(t1),
            row2: BeadRow::vacuum(t2),
        }
    }

    pub fn row(&self, c: Component) -> &BeadRow {
        match c {
            Component::First => &self.row1,
            Component::Second => &self.row2,
        }
    }

    fn row_mut(&mut self, c: Component) -> &mut BeadRow {
        match c {
            Component::First => &mut self.row1,
            Component::Second => &mut self.row2,
        }
    }

    pub fn has_bead(&self, c: Component, column: i64) -> bool {
        self.row(c).has_bead(column)
    }

    pub fn rightmost_bead_column(&self) -> i64 {
        self.row1.rightmost().max(self.row2.rightmost())
    }

    pub fn charges(&self) -> (i64, i64) {
        (self.row1.charge(), self.row2.charge())
    }

    /// True when both rows are full initial segments.
    pub fn is_vacuum(&self) -> bool {
        self.row1.is_vacuum() && self.row2.is_vacuum()
    }

    /// Reads the bipartition back off the beads, with the row charges.
    pub fn bipartition(&self) -> (Bipartition, (i64, i64)) {
        (
            Bipartition::new(self.row1.partition(), self.row2.partition()),
            self.charges(),
        )
    }

    pub fn without_period(&self, period: &EPeriod) -> Abacus {
        let mut next = self.clone();
        for bead in &period.beads {
            next.row_mut(bead.row).remove(bead.column);
        }
        next
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PeriodBead {
    pub row: Component,
    pub column: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EPeriod {
    pub beads: Vec<PeriodBead>,
}

impl EPeriod {
    /// Number of leading row-2 beads.
    pub fn top_count(&self) -> usize {
        self.beads.iter().take_while(|b| b.row == Component::Second).count()
    }

    fn lowest_in(&self, row: Component) -> Option<i64> {
        self.beads.iter().filter(|b| b.row == row).map(|b| b.column).min()
    }
}

/// The e-period of `ab`, if any.
///
/// Walking left from the rightmost bead, a row-2 bead is usable only while
/// the previous bead was in row 2 and the row-1 cell below it is a space.
/// When it is usable the row-1 cell is empty, so there is never a choice and
/// the period is unique.
pub fn first_e_period(ab: &Abacus, e: i64) -> Option<EPeriod> {
    let start = ab.rightmost_bead_column();
    let mut beads = Vec::with_capacity(e as usize);
    let mut row = Component::Second;
    for column in (start - e + 1..=start).rev() {
        let top_ok = row == Component::Second
            && ab.has_bead(Component::Second, column)
            && !ab.has_bead(Component::First, column);
        if !top_ok {
            if !ab.has_bead(Component::First, column) {
                return None;
            }
            row = Component::First;
        }
        beads.push(PeriodBead { row, column });
    }
    Some(EPeriod { beads })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodDecomposition {
    pub periods: Vec<EPeriod>,
    pub totally_periodic: bool,
    /// Row charges of the residual vacuum abacus once reached.
    pub residual_charge: Option<(i64, i64)>,
}

/// Upper bound on the number of periods removed before the residual abacus
/// is a vacuum or has no period.
pub fn stabilization_bound(bp: &Bipartition, fp: &FockParams) -> usize {
    bp.size() + (fp.e() * (fp.s().abs() + fp.e())) as usize
}

/// Peels off e-periods until none exists or the residual is a vacuum
/// abacus. Vacuum abaci are totally periodic, so reaching one settles the
/// question.
pub fn period_decomposition(bp: &Bipartition, fp: &FockParams) -> PeriodDecomposition {
    let mut ab = Abacus::build(bp, fp);
    let mut periods = Vec::new();
    // generous hard stop; the tested bound is `stabilization_bound`
    let cap = 4 * stabilization_bound(bp, fp) + 64;
    loop {
        if ab.is_vacuum() {
            return PeriodDecomposition {
                periods,
                totally_periodic: true,
                residual_charge: Some(ab.charges()),
            };
        }
        assert!(
            periods.len() < cap,
            "period extraction did not stabilize for {bp} at {fp:?}"
        );
        match first_e_period(&ab, fp.e()) {
            Some(period) => {
                ab = ab.without_period(&period);
                periods.push(period);
            }
            None => {
                return PeriodDecomposition {
                    periods,
                    totally_periodic: false,
                    residual_charge: None,
                }
            }
        }
    }
}

pub fn is_totally_e_periodic(bp: &Bipartition, fp: &FockParams) -> bool {
    period_decomposition(bp, fp).totally_periodic
}

/// The pair-of-spaces pattern for a first period split as `a` row-2 beads
/// followed by `e − a` row-1 beads: the cell left of the lowest row-1 period
/// bead is a row-1 space and the cell left of the lowest row-2 period bead is
/// a row-2 space.
pub fn detect_violating_pair(ab: &Abacus, per1: &EPeriod) -> Result<bool> {
    let (Some(top), Some(bottom)) = (per1.lowest_in(Component::Second), per1.lowest_in(Component::First)) else {
        return Err(Error::UnsplitPeriod);
    };
    Ok(!ab.has_bead(Component::Second, top - 1) && !ab.has_bead(Component::First, bottom - 1))
}

/// Beads with a space to their left, counted over both rows; one per nonzero
/// column of the bipartition.
pub fn nonzero_columns_from_abacus(ab: &Abacus) -> usize {
    ab.row1.exceptional().len() + ab.row2.exceptional().len()
}

/// Columns that any rendering window must include.
pub fn required_window(ab: &Abacus) -> (i64, i64) {
    let lo = ab.row1.full_below().min(ab.row2.full_below()) + 1;
    let hi = ab.rightmost_bead_column();
    (lo, hi)
}

/// Two lines of beads (`●`) and spaces (`○`), row 2 on top, followed by a
/// ruler with `|` under column 0.
pub fn render_abacus(ab: &Abacus, lo: i64, hi: i64) -> Result<String> {
    let (need_lo, need_hi) = required_window(ab);
    if lo > need_lo || hi < need_hi || lo > hi {
        return Err(Error::WindowTooSmall {
            lo,
            hi,
            need_lo,
            need_hi,
        });
    }
    let mut out = String::new();
    for row in [Component::Second, Component::First] {
        let line: String = (lo..=hi).map(|c| if ab.has_bead(row, c) { '●' } else { '○' }).collect();
        writeln!(out, "{line}").unwrap();
    }
    let ruler: String = (lo..=hi).map(|c| if c == 0 { '|' } else { '·' }).collect();
    writeln!(out, "{ruler}  columns {lo}..{hi}").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_bipartitions_up_to;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn fp(e: i64, s: i64) -> FockParams {
        FockParams::new(e, s).unwrap()
    }

    fn beads(row: &BeadRow, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).rev().filter(|&c| row.has_bead(c)).collect()
    }

    fn period(spec: &[(u8, i64)]) -> EPeriod {
        EPeriod {
            beads: spec
                .iter()
                .map(|&(r, column)| PeriodBead {
                    row: Component::try_from(r).unwrap(),
                    column,
                })
                .collect(),
        }
    }

    /// Every assignment of rows to the `e` columns ending at the rightmost
    /// bead that satisfies the period conditions.
    fn all_periods(ab: &Abacus, e: i64) -> Vec<EPeriod> {
        let start = ab.rightmost_bead_column();
        let mut out = Vec::new();
        for mask in 0u32..(1 << e) {
            let rows: Vec<Component> = (0..e)
                .map(|m| {
                    if mask >> m & 1 == 1 {
                        Component::Second
                    } else {
                        Component::First
                    }
                })
                .collect();
            let monotone = rows.windows(2).all(|w| w[0] >= w[1]);
            let ok = monotone
                && rows.iter().enumerate().all(|(m, &r)| {
                    let c = start - m as i64;
                    ab.has_bead(r, c) && (r == Component::First || !ab.has_bead(Component::First, c))
                });
            if ok {
                out.push(EPeriod {
                    beads: rows
                        .iter()
                        .enumerate()
                        .map(|(m, &row)| PeriodBead {
                            row,
                            column: start - m as i64,
                        })
                        .collect(),
                });
            }
        }
        out
    }

    #[test]
    fn build_examples() {
        let ab = Abacus::build(&bp("|"), &fp(2, 0));
        assert_eq!(beads(&ab.row1, -3, 3), [0, -1, -2, -3]);
        assert_eq!(beads(&ab.row2, -3, 3), [0, -1, -2, -3]);

        let ab = Abacus::build(&bp("2,2|"), &fp(2, 2));
        assert_eq!(beads(&ab.row1, -4, 4), [2, 1, -2, -3, -4]);
        assert_eq!(beads(&ab.row2, -4, 4), [2, 1, 0, -1, -2, -3, -4]);

        let ab = Abacus::build(&bp("1|1"), &fp(2, 0));
        assert_eq!(beads(&ab.row1, -3, 3), [1, -1, -2, -3]);
        assert_eq!(beads(&ab.row2, -3, 3), [1, -1, -2, -3]);
    }

    #[test]
    fn first_period_examples() {
        let ab = Abacus::build(&bp("2,2|"), &fp(2, 2));
        assert_eq!(first_e_period(&ab, 2), Some(period(&[(1, 2), (1, 1)])));

        let ab = Abacus::build(&bp("1|1"), &fp(2, 0));
        assert_eq!(first_e_period(&ab, 2), None);

        let ab = Abacus::build(&bp("|"), &fp(2, 3));
        assert_eq!(first_e_period(&ab, 2), Some(period(&[(2, 3), (2, 2)])));
    }

    #[test]
    fn decomposition_examples() {
        assert!(is_totally_e_periodic(&bp("|"), &fp(2, 1)));
        assert!(!is_totally_e_periodic(&bp("1|1"), &fp(2, 0)));

        // one period reaches the vacuum with row charges (-2, 2); the
        // vacuum then keeps going: row2 {2,1}, row2 {0,-1}, ...
        let d = period_decomposition(&bp("2,2|"), &fp(2, 2));
        assert!(d.totally_periodic);
        assert_eq!(d.periods, [period(&[(1, 2), (1, 1)])]);
        assert_eq!(d.residual_charge, Some((-2, 2)));
        let mut ab = Abacus::vacuum(-2, 2);
        let mut tail = Vec::new();
        for _ in 0..4 {
            let per = first_e_period(&ab, 2).unwrap();
            ab = ab.without_period(&per);
            tail.push(per);
        }
        assert_eq!(
            tail,
            [
                period(&[(2, 2), (2, 1)]),
                period(&[(2, 0), (2, -1)]),
                period(&[(1, -2), (1, -3)]),
                period(&[(2, -2), (2, -3)]),
            ]
        );
    }

    #[test]
    fn violating_pair_examples() {
        let ab = Abacus::build(&bp("1|1"), &fp(2, 1));
        let per = first_e_period(&ab, 2).unwrap();
        assert_eq!(per, period(&[(2, 2), (1, 1)]));
        assert_eq!(detect_violating_pair(&ab, &per), Ok(true));

        let ab = Abacus::build(&bp("|"), &fp(2, 1));
        let per = first_e_period(&ab, 2).unwrap();
        assert_eq!(per, period(&[(2, 1), (1, 0)]));
        assert_eq!(detect_violating_pair(&ab, &per), Ok(false));

        let ab = Abacus::build(&bp("2,2|"), &fp(2, 2));
        let per = first_e_period(&ab, 2).unwrap();
        assert_eq!(detect_violating_pair(&ab, &per), Err(Error::UnsplitPeriod));
    }

    #[test]
    fn nonzero_column_examples() {
        assert_eq!(nonzero_columns_from_abacus(&Abacus::build(&bp("|"), &fp(3, 4))), 0);
        assert_eq!(nonzero_columns_from_abacus(&Abacus::build(&bp("2,2|"), &fp(2, 2))), 2);
        assert_eq!(nonzero_columns_from_abacus(&Abacus::build(&bp("1|1"), &fp(2, 0))), 2);
    }

    #[test]
    fn render_examples() {
        let lines = |b: &str, s: i64, lo: i64, hi: i64| -> Vec<String> {
            let ab = Abacus::build(&bp(b), &fp(2, s));
            render_abacus(&ab, lo, hi)
                .unwrap()
                .lines()
                .take(2)
                .map(str::to_owned)
                .collect()
        };
        assert_eq!(lines("|", 0, -2, 2), ["●●●○○", "●●●○○"]);
        assert_eq!(lines("1|1", 0, -2, 2), ["●●○●○", "●●○●○"]);
        assert_eq!(lines("2,2|", 2, -3, 3), ["●●●●●●○", "●●○○●●○"]);

        let ab = Abacus::build(&bp("2,2|"), &fp(2, 2));
        assert!(render_abacus(&ab, -1, 3).is_ok());
        assert!(matches!(render_abacus(&ab, 0, 3), Err(Error::WindowTooSmall { .. })));
        assert!(matches!(render_abacus(&ab, -3, 1), Err(Error::WindowTooSmall { .. })));
    }

    #[test]
    fn read_off_round_trip() {
        for b in enumerate_bipartitions_up_to(10) {
            for s in -5..=5 {
                let ab = Abacus::build(&b, &fp(2, s));
                assert_eq!(ab.bipartition(), (b.clone(), (0, s)));
                assert_eq!(nonzero_columns_from_abacus(&ab), b.total_columns());
            }
        }
    }

    #[test]
    fn periods_are_unique_and_disjoint() {
        for b in enumerate_bipartitions_up_to(7) {
            for e in 2..=4 {
                for s in -4..=4 {
                    let f = fp(e, s);
                    let mut ab = Abacus::build(&b, &f);
                    let mut used = BTreeSet::new();
                    while !ab.is_vacuum() {
                        let all = all_periods(&ab, e);
                        let greedy = first_e_period(&ab, e);
                        assert!(all.len() <= 1, "{b} e={e} s={s}: {all:?}");
                        assert_eq!(greedy, all.into_iter().next());
                        let Some(per) = greedy else { break };
                        for bead in &per.beads {
                            // columns shift as beads are removed, so track
                            // (row, column) pairs which never repeat
                            assert!(used.insert((bead.row, bead.column)), "{b} e={e} s={s}");
                        }
                        ab = ab.without_period(&per);
                    }
                }
            }
        }
    }

    #[test]
    fn vacuum_is_totally_periodic() {
        for e in 2..=6 {
            for s in -6..=6 {
                let d = period_decomposition(&Bipartition::empty(), &fp(e, s));
                assert!(d.totally_periodic);
                // a vacuum abacus is its own residual; check it also keeps
                // yielding periods that leave a vacuum behind
                let mut ab = Abacus::build(&Bipartition::empty(), &fp(e, s));
                for _ in 0..3 * e {
                    let per = first_e_period(&ab, e).expect("vacuum has a period");
                    ab = ab.without_period(&per);
                    assert!(ab.is_vacuum());
                }
            }
        }
    }

    #[test]
    fn stabilizes_within_bound() {
        for b in enumerate_bipartitions_up_to(8) {
            for e in 2..=4 {
                for s in -5..=5 {
                    let f = fp(e, s);
                    let d = period_decomposition(&b, &f);
                    assert!(d.periods.len() <= stabilization_bound(&b, &f), "{b} e={e} s={s}");
                }
            }
        }
    }
}
