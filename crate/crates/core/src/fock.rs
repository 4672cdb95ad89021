//! Charged bipartitions: box contents, the c-function and the dictionary to
//! Cherednik parameters.
//!
//! The charge is always normalized to `(0, s)`. A box in row `x`, column `y`
//! of component `j` has charged content `s_j + y - x`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Component, Partition};
use crate::rational::ExactRational;

/// Rank `e ≥ 2` and normalized charge `(0, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FockParams {
    e: i64,
    s: i64,
}

impl FockParams {
    pub fn new(e: i64, s: i64) -> Result<Self> {
        if e < 2 {
            return Err(Error::RankTooSmall(e));
        }
        Ok(FockParams { e, s })
    }

    /// Normalizes an arbitrary charge `(s1, s2)` to `(0, s2 - s1)`.
    pub fn with_charge(e: i64, s1: i64, s2: i64) -> Result<Self> {
        Self::new(e, s2 - s1)
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn charge(&self, c: Component) -> i64 {
        match c {
            Component::First => 0,
            Component::Second => self.s,
        }
    }

    pub fn content(&self, c: Component, row: usize, col: usize) -> i64 {
        self.charge(c) + col as i64 - row as i64
    }

    pub fn residue(&self, content: i64) -> i64 {
        content.rem_euclid(self.e)
    }

    pub fn with_s(&self, s: i64) -> FockParams {
        FockParams { e: self.e, s }
    }
}

/// Cherednik parameters `(c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CherednikParams {
    pub c: ExactRational,
    pub d: ExactRational,
}

/// Sum of charged contents over all boxes of `bp`.
pub fn content_sum(bp: &Bipartition, fp: &FockParams) -> i64 {
    Component::BOTH
        .iter()
        .map(|&c| {
            let part = bp.component(c);
            part.content_sum() + fp.charge(c) * part.size() as i64
        })
        .sum()
}

/// `c_λ = |λ¹| + (s/e)(|λ²| − |λ¹|) − (2/e) Σ ct(b)`.
pub fn c_function(bp: &Bipartition, fp: &FockParams) -> ExactRational {
    let n1 = bp.first.size() as i64;
    let n2 = bp.second.size() as i64;
    let e = fp.e();
    ExactRational::integer(n1) + ExactRational::new(fp.s() * (n2 - n1), e)
        - ExactRational::new(2 * content_sum(bp, fp), e)
}

/// `c = 1/e`, `d = −1/2 + s/e`.
pub fn fock_to_cherednik(fp: &FockParams) -> CherednikParams {
    CherednikParams {
        c: ExactRational::new(1, fp.e()),
        d: ExactRational::new(-1, 2) + ExactRational::new(fp.s(), fp.e()),
    }
}

/// Exchanging the components sends the charge `s` to `e − s`.
pub fn swap_components(bp: &Bipartition, fp: &FockParams) -> (Bipartition, FockParams) {
    (bp.swapped(), fp.with_s(fp.e() - fp.s()))
}

/// Root of `s ↦ c_λ(e, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroCharge {
    pub root: ExactRational,
    /// `Some(s)` when the root is an integer, i.e. an actual charge.
    pub integral: Option<i64>,
}

/// Solves `c_λ = 0` for the charge `s` at fixed rank.
///
/// `c_λ` is affine in `s` (the second component's contents carry `s`), so the
/// slope is read off from two evaluations and the root is exact.
pub fn solve_charge_for_zero_c(bp: &Bipartition, e: i64) -> Result<ZeroCharge> {
    if bp.is_empty() {
        return Err(Error::EmptyBipartition);
    }
    let at0 = c_function(bp, &FockParams::new(e, 0)?);
    let at1 = c_function(bp, &FockParams::new(e, 1)?);
    let slope = at1 - at0;
    debug_assert_eq!(slope, ExactRational::new(-(bp.size() as i64), e));
    let root = -at0 / slope;
    Ok(ZeroCharge {
        root,
        integral: root.to_integer(),
    })
}

/// `(2/n) Σ ct(b)` for a single nonempty partition at charge 0: twice the
/// mean content of its boxes.
pub fn twice_mean_content(p: &Partition) -> Option<ExactRational> {
    (!p.is_empty()).then(|| ExactRational::new(2 * p.content_sum(), p.size() as i64))
}

/// Content (at charge 0) of the removable box of largest content, which is
/// the end of the first row.
pub fn largest_removable_content(p: &Partition) -> Option<i64> {
    p.removable_cells().into_iter().map(|(x, y)| y as i64 - x as i64).max()
}
