//! Which simples `L(λ)` are both unitary and finite-dimensional.
//!
//! [`classify_theorem`] is the closed-form answer: a single nonempty
//! rectangular component at one specific charge. The rest of the module is
//! the machinery used to cross-check it: the unitarity case inequalities for
//! bipartitions with two nonempty components, the finite-dimensionality
//! obstructions read off the abacus, and the grid harness [`verify_range`].

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::abacus::{
    detect_violating_pair, first_e_period, is_totally_e_periodic, nonzero_columns_from_abacus, Abacus,
};
use crate::crystal::is_source_vertex;
use crate::error::{Error, Result};
use crate::fock::{c_function, swap_components, twice_mean_content, FockParams};
use crate::partitions::{enumerate_bipartitions, Bipartition, Component, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    RectangleMatch,
    NotRectangle,
    BothComponentsNonempty,
    WrongCharge,
}

/// The rectangle `r × q` found in the nonempty component and the charge at
/// which it is unitary and finite-dimensional.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub component: Component,
    pub r: usize,
    pub q: usize,
    pub required_s: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub unitary_fd: bool,
    #[serde(flatten)]
    pub witness: Option<Witness>,
    pub reason: Reason,
}

/// Charge at which the rectangle `r × q` in `component` is unitary and
/// finite-dimensional: `r − q = s − e` for `(λ, ∅)`, and `s = q − r` for
/// `(∅, λ)` by exchanging components (`s ↦ e − s`).
pub fn required_charge(component: Component, r: usize, q: usize, e: i64) -> i64 {
    let (r, q) = (r as i64, q as i64);
    match component {
        Component::First => e - q + r,
        Component::Second => q - r,
    }
}

pub fn classify_theorem(bp: &Bipartition, fp: &FockParams) -> Result<ClassificationResult> {
    if bp.is_empty() {
        return Err(Error::EmptyBipartition);
    }
    let Some((component, part)) = bp.sole_component() else {
        return Ok(ClassificationResult {
            unitary_fd: false,
            witness: None,
            reason: Reason::BothComponentsNonempty,
        });
    };
    let Some((r, q)) = part.rectangle_dims() else {
        return Ok(ClassificationResult {
            unitary_fd: false,
            witness: None,
            reason: Reason::NotRectangle,
        });
    };
    let required_s = required_charge(component, r, q, fp.e());
    let unitary_fd = fp.s() == required_s;
    Ok(ClassificationResult {
        unitary_fd,
        witness: Some(Witness {
            component,
            r,
            q,
            required_s,
        }),
        reason: if unitary_fd {
            Reason::RectangleMatch
        } else {
            Reason::WrongCharge
        },
    })
}

/// Unitarity cases for two nonempty components, in Fock coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GriffethCase {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl GriffethCase {
    pub const ALL: [GriffethCase; 7] = [
        GriffethCase::A,
        GriffethCase::B,
        GriffethCase::C,
        GriffethCase::D,
        GriffethCase::E,
        GriffethCase::F,
        GriffethCase::G,
    ];

    pub fn tag(self) -> char {
        match self {
            GriffethCase::A => 'a',
            GriffethCase::B => 'b',
            GriffethCase::C => 'c',
            GriffethCase::D => 'd',
            GriffethCase::E => 'e',
            GriffethCase::F => 'f',
            GriffethCase::G => 'g',
        }
    }

    /// Cases (d) and (e) are (b) and (c) for the transposed bipartition at
    /// the negated charge.
    pub fn reduction(self) -> Option<GriffethCase> {
        match self {
            GriffethCase::D => Some(GriffethCase::B),
            GriffethCase::E => Some(GriffethCase::C),
            _ => None,
        }
    }
}

impl std::str::FromStr for GriffethCase {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        GriffethCase::ALL
            .into_iter()
            .find(|c| s.len() == 1 && s.starts_with(c.tag()))
            .ok_or_else(|| format!("unknown case {s:?}, expected one of a..g"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub text: String,
    pub left: i64,
    pub right: i64,
    pub holds: bool,
}

impl Inequality {
    fn le(text: &str, left: i64, right: i64) -> Self {
        Inequality {
            text: text.to_string(),
            left,
            right,
            holds: left <= right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub case: GriffethCase,
    pub satisfied: bool,
    /// `ℓ = e − s` and `m = s` at the charge the inequalities were evaluated.
    pub ell: i64,
    pub m: i64,
    /// The `(λᵗ, −s)` input for cases reduced to (b) or (c).
    pub reduced_to: Option<(Bipartition, i64)>,
    pub trace: Vec<Inequality>,
}

struct Shape {
    cols1: i64,
    cols2: i64,
    rows1: i64,
    rows2: i64,
    mult1: i64,
    mult2: i64,
}

impl Shape {
    fn of(bp: &Bipartition) -> Self {
        let n = |v: usize| v as i64;
        Shape {
            cols1: n(bp.first.columns()),
            cols2: n(bp.second.columns()),
            rows1: n(bp.first.rows()),
            rows2: n(bp.second.rows()),
            mult1: n(bp.first.largest_part_multiplicity()),
            mult2: n(bp.second.largest_part_multiplicity()),
        }
    }
}

fn case_inequalities(case: GriffethCase, sh: &Shape, e: i64, s: i64) -> Vec<Inequality> {
    let le = Inequality::le;
    match case {
        GriffethCase::A => vec![
            le("-s <= cols(λ1)+rows(λ2)-1", -s, sh.cols1 + sh.rows2 - 1),
            le("cols(λ1)+rows(λ2)-1 <= e-s", sh.cols1 + sh.rows2 - 1, e - s),
            le("s-e <= cols(λ2)+rows(λ1)-1", s - e, sh.cols2 + sh.rows1 - 1),
            le("cols(λ2)+rows(λ1)-1 <= s", sh.cols2 + sh.rows1 - 1, s),
        ],
        GriffethCase::B => vec![
            le(
                "cols(λ1)-mult(λ1)+rows(λ2) <= e-s",
                sh.cols1 - sh.mult1 + sh.rows2,
                e - s,
            ),
            le("cols(λ2)+rows(λ1)-1 <= s", sh.cols2 + sh.rows1 - 1, s),
        ],
        GriffethCase::C => vec![
            le("cols(λ2)-mult(λ2)+rows(λ1) <= s", sh.cols2 - sh.mult2 + sh.rows1, s),
            le("cols(λ1)+rows(λ2)-1 <= e-s", sh.cols1 + sh.rows2 - 1, e - s),
        ],
        GriffethCase::F => vec![
            le(
                "cols(λ1)-mult(λ1)+rows(λ2) <= e-s",
                sh.cols1 - sh.mult1 + sh.rows2,
                e - s,
            ),
            le("cols(λ2)-mult(λ2)+rows(λ1) <= s", sh.cols2 - sh.mult2 + sh.rows1, s),
        ],
        GriffethCase::D | GriffethCase::E | GriffethCase::G => Vec::new(),
    }
}

/// Evaluates the Fock-coordinate inequalities of one unitarity case.
/// Requires both components nonempty.
pub fn check_griffeth_case(case: GriffethCase, bp: &Bipartition, fp: &FockParams) -> Result<CaseReport> {
    if !bp.both_nonempty() {
        return Err(Error::EmptyComponent);
    }
    let (target, s, reduced_to) = match case.reduction() {
        Some(_) => {
            let t = bp.transpose();
            (t.clone(), -fp.s(), Some((t, -fp.s())))
        }
        None => (bp.clone(), fp.s(), None),
    };
    let evaluated = case.reduction().unwrap_or(case);
    let e = fp.e();
    let trace = case_inequalities(evaluated, &Shape::of(&target), e, s);
    // (g) never occurs for parameters coming from a Fock space
    let satisfied = evaluated != GriffethCase::G && trace.iter().all(|t| t.holds);
    Ok(CaseReport {
        case,
        satisfied,
        ell: e - s,
        m: s,
        reduced_to,
        trace,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FdObstruction {
    /// The abacus is not totally e-periodic, so `λ` is not an ŝl_e source.
    NotSlESource,
    /// Both components nonempty with fewer than `e` columns while totally
    /// periodic; cannot happen, reported as an inconsistency.
    TooFewColumns,
    /// Exactly `e` columns and the pair-of-spaces pattern in the first period.
    ViolatingPair,
    NoneFound,
}

/// First certified obstruction to finite-dimensionality of `L(λ)`.
pub fn fd_obstruction(bp: &Bipartition, fp: &FockParams) -> FdObstruction {
    if !is_totally_e_periodic(bp, fp) {
        return FdObstruction::NotSlESource;
    }
    if bp.both_nonempty() {
        let e = fp.e() as usize;
        let ab = Abacus::build(bp, fp);
        let columns = nonzero_columns_from_abacus(&ab);
        if columns < e {
            return FdObstruction::TooFewColumns;
        }
        if columns == e {
            let per = first_e_period(&ab, fp.e()).expect("totally periodic abacus has a period");
            if detect_violating_pair(&ab, &per) == Ok(true) {
                return FdObstruction::ViolatingPair;
            }
        }
    }
    FdObstruction::NoneFound
}

/// Rectangle `r × q` in the first component: checks the c-function root,
/// the mean content, total periodicity and the classifier at `s = e − q + r`,
/// and that no other charge in `[−2e, 2e]` gives `c_λ = 0` or a positive
/// verdict. Returns a description of each failure.
pub fn check_rectangle(r: usize, q: usize, e: i64) -> Vec<String> {
    let mut failures = Vec::new();
    let lambda = Partition::rectangle(r, q);
    let bp = Bipartition::new(lambda.clone(), Partition::empty());
    let s_star = e - q as i64 + r as i64;
    let fp = FockParams::new(e, s_star).expect("e >= 2");

    let c = c_function(&bp, &fp);
    if !c.is_zero() {
        failures.push(format!("c = {c} at s = {s_star}"));
    }
    let mean = twice_mean_content(&lambda).expect("nonempty");
    if mean.to_integer() != Some(q as i64 - r as i64) {
        failures.push(format!("(2/n)Σct = {mean}, expected {}", q as i64 - r as i64));
    }
    if !is_totally_e_periodic(&bp, &fp) {
        failures.push(format!("not totally {e}-periodic at s = {s_star}"));
    }
    match classify_theorem(&bp, &fp) {
        Ok(res) if res.unitary_fd => {}
        other => failures.push(format!("classifier at s = {s_star}: {other:?}")),
    }
    for s in -2 * e..=2 * e {
        if s == s_star {
            continue;
        }
        let fp = FockParams::new(e, s).expect("e >= 2");
        if c_function(&bp, &fp).is_zero() {
            failures.push(format!("c = 0 at s = {s}"));
        }
        if classify_theorem(&bp, &fp).map(|r| r.unitary_fd).unwrap_or(true) {
            failures.push(format!("classifier positive at s = {s}"));
        }
    }
    failures
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub bipartition: Bipartition,
    pub e: i64,
    pub s: i64,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    /// Grid points where the property's hypothesis holds.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl PropertyTally {
    fn merge(&mut self, other: PropertyTally) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}

pub const PROPERTIES: [&str; 7] = [
    "P1-case-implies-columns",
    "P2-periodic-implies-columns",
    "P3-exactly-e-violating-pair",
    "P4-no-both-nonempty-winners",
    "P5-rectangle-suite",
    "P6-swap-coherence",
    "P7-source-equals-periodic",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    pub n_max: usize,
    pub ranks: Vec<i64>,
    /// Inclusive charge range per rank.
    pub charges: BTreeMap<i64, (i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub grid: GridSpec,
    pub assumptions: Vec<String>,
    pub properties: BTreeMap<String, PropertyTally>,
    /// Grid points where the classifier answers yes.
    pub unitary_fd_hits: usize,
    pub passed: bool,
}

impl VerifyReport {
    pub fn violation_count(&self) -> usize {
        self.properties.values().map(|t| t.violations.len()).sum()
    }
}

#[derive(Default)]
struct Tallies {
    props: BTreeMap<&'static str, PropertyTally>,
    hits: usize,
}

impl Tallies {
    fn check(&mut self, prop: &'static str, ok: bool, ctx: (&Bipartition, i64, i64), detail: impl FnOnce() -> String) {
        let t = self.props.entry(prop).or_default();
        t.checked += 1;
        if !ok {
            t.violations.push(Violation {
                bipartition: ctx.0.clone(),
                e: ctx.1,
                s: ctx.2,
                detail: detail(),
            });
        }
    }

    fn merge(&mut self, other: Tallies) {
        for (k, v) in other.props {
            self.props.entry(k).or_default().merge(v);
        }
        self.hits += other.hits;
    }
}

fn satisfied_cases(bp: &Bipartition, fp: &FockParams) -> Vec<CaseReport> {
    GriffethCase::ALL
        .iter()
        .map(|&c| check_griffeth_case(c, bp, fp).expect("both components nonempty"))
        .filter(|r| r.satisfied)
        .collect()
}

fn check_point(bp: &Bipartition, fp: &FockParams) -> Tallies {
    let mut t = Tallies::default();
    let (e, s) = (fp.e(), fp.s());
    let ctx = (bp, e, s);
    let periodic = is_totally_e_periodic(bp, fp);

    if bp.both_nonempty() {
        let columns = bp.total_columns() as i64;
        let cases = satisfied_cases(bp, fp);

        let bounded: Vec<char> = cases
            .iter()
            .filter(|r| {
                matches!(
                    r.case,
                    GriffethCase::A | GriffethCase::B | GriffethCase::C | GriffethCase::F
                )
            })
            .map(|r| r.case.tag())
            .collect();
        if !bounded.is_empty() {
            t.check(PROPERTIES[0], columns <= e, ctx, || {
                format!("cases {bounded:?} satisfied with {columns} columns")
            });
        }

        if periodic {
            t.check(PROPERTIES[1], columns >= e, ctx, || {
                format!("totally periodic with {columns} columns")
            });
        }

        if periodic && columns == e {
            let ab = Abacus::build(bp, fp);
            let per = first_e_period(&ab, e).expect("periodic");
            let pair = detect_violating_pair(&ab, &per);
            t.check(PROPERTIES[2], pair == Ok(true), ctx, || {
                format!("exactly {e} columns, periodic, pair check {pair:?}")
            });
        }

        // Cases reduced to (b)/(c) are certified on the reduced input.
        if !cases.is_empty() {
            let unobstructed: Vec<char> = cases
                .iter()
                .filter(|r| {
                    let obstruction = match &r.reduced_to {
                        Some((t, s2)) => fd_obstruction(t, &fp.with_s(*s2)),
                        None => fd_obstruction(bp, fp),
                    };
                    obstruction == FdObstruction::NoneFound
                })
                .map(|r| r.case.tag())
                .collect();
            t.check(PROPERTIES[3], unobstructed.is_empty(), ctx, || {
                format!("cases {unobstructed:?} satisfied with no finite-dimensionality obstruction")
            });
        }
    }

    let verdict = classify_theorem(bp, fp).expect("nonempty");
    if verdict.unitary_fd {
        t.hits += 1;
    }
    let (sbp, sfp) = swap_components(bp, fp);
    let swapped = classify_theorem(&sbp, &sfp).expect("nonempty");
    t.check(
        PROPERTIES[5],
        (verdict.unitary_fd, verdict.reason) == (swapped.unitary_fd, swapped.reason),
        ctx,
        || format!("{verdict:?} vs swapped {swapped:?}"),
    );

    let source = is_source_vertex(bp, fp);
    t.check(PROPERTIES[6], source == periodic, ctx, || {
        format!("source vertex: {source}, totally periodic: {periodic}")
    });
    t
}

/// Runs P1–P7 over every bipartition of size `1..=n_max`, every rank in
/// `ranks` and every charge in `charges` (default `[−2e, 2e]` per rank).
pub fn verify_range(n_max: usize, ranks: &[i64], charges: Option<(i64, i64)>) -> Result<VerifyReport> {
    if n_max == 0 || ranks.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut grid = GridSpec {
        n_max,
        ranks: ranks.to_vec(),
        charges: BTreeMap::new(),
    };
    let mut points = Vec::new();
    for &e in ranks {
        FockParams::new(e, 0)?;
        let (lo, hi) = charges.unwrap_or((-2 * e, 2 * e));
        if lo > hi {
            return Err(Error::EmptyGrid);
        }
        grid.charges.insert(e, (lo, hi));
        for s in lo..=hi {
            points.push(FockParams::new(e, s)?);
        }
    }
    let bps: Vec<Bipartition> = (1..=n_max).flat_map(enumerate_bipartitions).collect();

    let per_point: Vec<Tallies> = points
        .par_iter()
        .flat_map_iter(|fp| bps.iter().map(move |bp| (bp, fp)))
        .map(|(bp, fp)| check_point(bp, fp))
        .collect();
    let mut total = Tallies::default();
    for t in per_point {
        total.merge(t);
    }

    for &e in ranks {
        for r in 1..=n_max {
            for q in 1..=n_max / r {
                let rect = Bipartition::new(Partition::rectangle(r, q), Partition::empty());
                let failures = check_rectangle(r, q, e);
                let s_star = required_charge(Component::First, r, q, e);
                let ctx = (&rect, e, s_star);
                let ok = failures.is_empty();
                total.check(PROPERTIES[4], ok, ctx, || failures.join("; "));
            }
        }
    }

    let mut properties: BTreeMap<String, PropertyTally> = PROPERTIES
        .iter()
        .map(|p| (p.to_string(), PropertyTally::default()))
        .collect();
    for (k, v) in total.props {
        properties.get_mut(k).expect("known property").merge(v);
    }
    let passed = properties.values().all(|t| t.violations.is_empty());
    Ok(VerifyReport {
        grid,
        assumptions: vec![
            "charge is normalized to (0, s)".into(),
            "cases (d) and (e) are cases (b) and (c) for the transposed bipartition at charge (0, -s)".into(),
            "#{rows of λ of size λ_1} is the multiplicity of the largest part".into(),
        ],
        properties,
        unitary_fd_hits: total.hits,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn fp(e: i64, s: i64) -> FockParams {
        FockParams::new(e, s).unwrap()
    }

    #[test]
    fn theorem_examples() {
        let res = classify_theorem(&bp("2,2|"), &fp(2, 2)).unwrap();
        assert!(res.unitary_fd);
        assert_eq!(
            res.witness,
            Some(Witness {
                component: Component::First,
                r: 2,
                q: 2,
                required_s: 2
            })
        );
        for e in 2..=5 {
            for s in -10..=10 {
                let res = classify_theorem(&bp("2,1|"), &fp(e, s)).unwrap();
                assert_eq!((res.unitary_fd, res.reason), (false, Reason::NotRectangle));
                let res = classify_theorem(&bp("1|1"), &fp(e, s)).unwrap();
                assert_eq!((res.unitary_fd, res.reason), (false, Reason::BothComponentsNonempty));
            }
        }
        let res = classify_theorem(&bp("|2,2"), &fp(2, 0)).unwrap();
        assert!(res.unitary_fd);
        assert_eq!(res.witness.unwrap().component, Component::Second);
        let res = classify_theorem(&bp("2,2|"), &fp(2, 3)).unwrap();
        assert_eq!((res.unitary_fd, res.reason), (false, Reason::WrongCharge));
        assert_eq!(classify_theorem(&bp("|"), &fp(2, 0)), Err(Error::EmptyBipartition));
    }

    #[test]
    fn json_shape() {
        let res = classify_theorem(&bp("2,2|"), &fp(2, 2)).unwrap();
        let v = serde_json::to_value(res).unwrap();
        assert_eq!(v["unitary_fd"], true);
        assert_eq!(v["r"], 2);
        assert_eq!(v["q"], 2);
        assert_eq!(v["component"], 1);
        assert_eq!(v["reason"], "rectangle-match");
    }

    #[test]
    fn case_examples() {
        let rep = check_griffeth_case(GriffethCase::A, &bp("1|1"), &fp(2, 1)).unwrap();
        assert!(rep.satisfied);
        let sides: Vec<(i64, i64)> = rep.trace.iter().map(|t| (t.left, t.right)).collect();
        assert_eq!(sides, [(-1, 1), (1, 1), (-1, 1), (1, 1)]);

        let rep = check_griffeth_case(GriffethCase::A, &bp("2,2|1"), &fp(2, 0)).unwrap();
        assert!(!rep.satisfied);
        assert!(rep.trace[0].holds && rep.trace[1].holds && rep.trace[2].holds);
        assert_eq!(
            (rep.trace[3].left, rep.trace[3].right, rep.trace[3].holds),
            (2, 0, false)
        );

        for b in ["1|1", "3,1|2", "1,1|1,1,1"] {
            for s in -4..=4 {
                let rep = check_griffeth_case(GriffethCase::G, &bp(b), &fp(3, s)).unwrap();
                assert!(!rep.satisfied);
            }
        }
        assert_eq!(
            check_griffeth_case(GriffethCase::B, &bp("1|"), &fp(2, 0)),
            Err(Error::EmptyComponent)
        );
    }

    #[test]
    fn reduced_cases() {
        // (d) at ((2),(1,1)), s = 1 is (b) at ((1,1),(2)), s = -1
        let d = check_griffeth_case(GriffethCase::D, &bp("2|1,1"), &fp(3, 1)).unwrap();
        let b = check_griffeth_case(GriffethCase::B, &bp("1,1|2"), &fp(3, -1)).unwrap();
        assert_eq!(d.reduced_to, Some((bp("1,1|2"), -1)));
        assert_eq!(d.trace, b.trace);
        assert_eq!(d.satisfied, b.satisfied);
        assert_eq!((d.ell, d.m), (4, -1));
    }

    #[test]
    fn obstruction_examples() {
        assert_eq!(fd_obstruction(&bp("1|1"), &fp(2, 0)), FdObstruction::NotSlESource);
        assert_eq!(fd_obstruction(&bp("1|1"), &fp(2, 1)), FdObstruction::ViolatingPair);
        assert_eq!(fd_obstruction(&bp("2,2|"), &fp(2, 2)), FdObstruction::NoneFound);
    }

    #[test]
    fn rectangles_small() {
        for e in 2..=4 {
            for r in 1..=3 {
                for q in 1..=3 {
                    assert_eq!(check_rectangle(r, q, e), Vec::<String>::new());
                }
            }
        }
    }

    #[test]
    fn verify_examples() {
        let rep = verify_range(2, &[2], Some((0, 2))).unwrap();
        assert!(rep.passed, "{rep:#?}");
        assert!(rep.unitary_fd_hits >= 1);
        assert!(classify_theorem(&bp("2|"), &fp(2, 1)).unwrap().unitary_fd);

        assert_eq!(verify_range(0, &[2], None), Err(Error::EmptyGrid));
        assert_eq!(verify_range(3, &[], None), Err(Error::EmptyGrid));
        assert_eq!(verify_range(3, &[2], Some((1, 0))), Err(Error::EmptyGrid));
        assert_eq!(verify_range(3, &[1], None), Err(Error::RankTooSmall(1)));
    }

    #[test]
    fn verify_moderate_grid() {
        let rep = verify_range(6, &[2, 3], Some((-4, 4))).unwrap();
        assert_eq!(rep.violation_count(), 0, "{:#?}", rep.properties);
        assert!(rep.properties.values().all(|t| t.checked > 0));
    }
}
