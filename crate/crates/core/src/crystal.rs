//! The level-2 ŝl_e crystal on charged bipartitions.
//!
//! For a residue `i`, the addable and removable `i`-boxes of both components
//! are arranged in a word, adjacent removable/addable pairs cancel, and the
//! Kashiwara operators act on the surviving letters at the boundary. The word
//! order and the cancelling pair are given by a [`CrystalConvention`]; the
//! library uses [`CrystalConvention::CALIBRATED`]: boxes are read in the
//! transposed diagram (content `s_j + x − y`, matching the transposes in the
//! abacus), sorted by increasing content with component 2 first on ties, and
//! removable-then-addable pairs cancel. Up to reading the word backwards it is
//! the only convention whose source vertices are exactly the totally
//! e-periodic abaci.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::abacus::is_totally_e_periodic;
use crate::error::{Error, Result};
use crate::fock::FockParams;
use crate::partitions::{enumerate_bipartitions_up_to, Bipartition, Component};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BoxRef {
    pub component: Component,
    pub row: usize,
    pub column: usize,
    /// Charged content `s_j + y − x`.
    pub content: i64,
    /// Content under the convention's reading; orders the word and fixes
    /// the residue.
    pub reading: i64,
    pub residue: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoxKind {
    Addable,
    Removable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ContentOrder {
    Increasing,
    Decreasing,
}

/// How a box `(x, y)` of component `j` is read: `Direct` gives the charged
/// content `s_j + y − x`, `Transposed` reads the box in the transposed
/// diagram, `s_j + x − y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ContentReading {
    Direct,
    Transposed,
}

/// Which component comes first among boxes of equal content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TieBreak {
    FirstComponent,
    SecondComponent,
}

/// The adjacent pair `(earlier, later)` that cancels in the box word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Bracketing {
    RemovableAddable,
    AddableRemovable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CrystalConvention {
    pub reading: ContentReading,
    pub order: ContentOrder,
    pub tie_break: TieBreak,
    pub bracketing: Bracketing,
}

impl CrystalConvention {
    /// Fixed by requiring source vertices to coincide with totally
    /// e-periodic abaci; see `calibration_selects_a_single_convention`.
    pub const CALIBRATED: CrystalConvention = CrystalConvention {
        reading: ContentReading::Transposed,
        order: ContentOrder::Increasing,
        tie_break: TieBreak::SecondComponent,
        bracketing: Bracketing::RemovableAddable,
    };

    /// The same crystal with the word read backwards.
    pub fn mirrored(&self) -> CrystalConvention {
        CrystalConvention {
            reading: self.reading,
            order: match self.order {
                ContentOrder::Increasing => ContentOrder::Decreasing,
                ContentOrder::Decreasing => ContentOrder::Increasing,
            },
            tie_break: match self.tie_break {
                TieBreak::FirstComponent => TieBreak::SecondComponent,
                TieBreak::SecondComponent => TieBreak::FirstComponent,
            },
            bracketing: match self.bracketing {
                Bracketing::RemovableAddable => Bracketing::AddableRemovable,
                Bracketing::AddableRemovable => Bracketing::RemovableAddable,
            },
        }
    }

    pub fn all() -> Vec<CrystalConvention> {
        let mut out = Vec::with_capacity(16);
        for reading in [ContentReading::Direct, ContentReading::Transposed] {
            for order in [ContentOrder::Increasing, ContentOrder::Decreasing] {
                for tie_break in [TieBreak::FirstComponent, TieBreak::SecondComponent] {
                    for bracketing in [Bracketing::RemovableAddable, Bracketing::AddableRemovable] {
                        out.push(CrystalConvention {
                            reading,
                            order,
                            tie_break,
                            bracketing,
                        });
                    }
                }
            }
        }
        out
    }

    fn sort_key(&self, b: &BoxRef) -> (i64, u8) {
        let content = match self.order {
            ContentOrder::Increasing => b.reading,
            ContentOrder::Decreasing => -b.reading,
        };
        let tie = match (self.tie_break, b.component) {
            (TieBreak::FirstComponent, Component::First) | (TieBreak::SecondComponent, Component::Second) => 0,
            _ => 1,
        };
        (content, tie)
    }
}

fn check_residue(fp: &FockParams, i: i64) -> Result<()> {
    if (0..fp.e()).contains(&i) {
        Ok(())
    } else {
        Err(Error::ResidueOutOfRange { residue: i, e: fp.e() })
    }
}

/// Addable and removable boxes of residue `i` in word order.
pub fn ordered_boxes_with(
    bp: &Bipartition,
    fp: &FockParams,
    i: i64,
    conv: &CrystalConvention,
) -> Result<Vec<(BoxRef, BoxKind)>> {
    check_residue(fp, i)?;
    let mut word = Vec::new();
    for c in Component::BOTH {
        let part = bp.component(c);
        let cells = part
            .addable_cells()
            .into_iter()
            .map(|cell| (cell, BoxKind::Addable))
            .chain(
                part.removable_cells()
                    .into_iter()
                    .map(|cell| (cell, BoxKind::Removable)),
            );
        for ((row, column), kind) in cells {
            let content = fp.content(c, row, column);
            let reading = match conv.reading {
                ContentReading::Direct => content,
                ContentReading::Transposed => fp.content(c, column, row),
            };
            let residue = fp.residue(reading);
            if residue == i {
                let b = BoxRef {
                    component: c,
                    row,
                    column,
                    content,
                    reading,
                    residue,
                };
                word.push((b, kind));
            }
        }
    }
    word.sort_by_key(|(b, _)| conv.sort_key(b));
    Ok(word)
}

pub fn ordered_boxes(bp: &Bipartition, fp: &FockParams, i: i64) -> Result<Vec<(BoxRef, BoxKind)>> {
    ordered_boxes_with(bp, fp, i, &CrystalConvention::CALIBRATED)
}

/// Good addable and good removable boxes of the reduced word.
fn good_boxes(word: &[(BoxRef, BoxKind)], conv: &CrystalConvention) -> (Option<BoxRef>, Option<BoxRef>) {
    let opener = match conv.bracketing {
        Bracketing::RemovableAddable => BoxKind::Removable,
        Bracketing::AddableRemovable => BoxKind::Addable,
    };
    let mut open: Vec<usize> = Vec::new();
    let mut unmatched_closers: Vec<usize> = Vec::new();
    for (idx, (_, kind)) in word.iter().enumerate() {
        if *kind == opener {
            open.push(idx);
        } else if open.pop().is_none() {
            unmatched_closers.push(idx);
        }
    }
    // reduced word is closers^a openers^b
    let pick = |idx: Option<&usize>| idx.map(|&k| word[k].0);
    match conv.bracketing {
        // A…A R…R: f takes the last A, e the first R
        Bracketing::RemovableAddable => (pick(unmatched_closers.last()), pick(open.first())),
        // R…R A…A: f takes the first A, e the last R
        Bracketing::AddableRemovable => (pick(open.first()), pick(unmatched_closers.last())),
    }
}

pub fn apply_f_with(
    bp: &Bipartition,
    fp: &FockParams,
    i: i64,
    conv: &CrystalConvention,
) -> Result<Option<Bipartition>> {
    let word = ordered_boxes_with(bp, fp, i, conv)?;
    Ok(good_boxes(&word, conv).0.map(|b| {
        let p = bp.component(b.component).with_cell_added(b.row, b.column);
        bp.with_component(b.component, p)
    }))
}

pub fn apply_e_with(
    bp: &Bipartition,
    fp: &FockParams,
    i: i64,
    conv: &CrystalConvention,
) -> Result<Option<Bipartition>> {
    let word = ordered_boxes_with(bp, fp, i, conv)?;
    Ok(good_boxes(&word, conv).1.map(|b| {
        let p = bp.component(b.component).with_cell_removed(b.row, b.column);
        bp.with_component(b.component, p)
    }))
}

pub fn apply_f(bp: &Bipartition, fp: &FockParams, i: i64) -> Result<Option<Bipartition>> {
    apply_f_with(bp, fp, i, &CrystalConvention::CALIBRATED)
}

pub fn apply_e(bp: &Bipartition, fp: &FockParams, i: i64) -> Result<Option<Bipartition>> {
    apply_e_with(bp, fp, i, &CrystalConvention::CALIBRATED)
}

pub fn is_source_vertex_with(bp: &Bipartition, fp: &FockParams, conv: &CrystalConvention) -> bool {
    (0..fp.e()).all(|i| apply_e_with(bp, fp, i, conv).expect("residue in range").is_none())
}

/// No incoming arrow: `e_i` kills `bp` for every residue.
pub fn is_source_vertex(bp: &Bipartition, fp: &FockParams) -> bool {
    is_source_vertex_with(bp, fp, &CrystalConvention::CALIBRATED)
}

/// First `(bipartition, e, s)` where source vertices and totally e-periodic
/// abaci disagree under `conv`.
pub fn periodicity_mismatch(
    conv: &CrystalConvention,
    n_max: usize,
    ranks: &[i64],
    charges: std::ops::RangeInclusive<i64>,
) -> Option<(Bipartition, i64, i64)> {
    let bps = enumerate_bipartitions_up_to(n_max);
    for &e in ranks {
        for s in charges.clone() {
            let fp = FockParams::new(e, s).ok()?;
            let bad = bps
                .par_iter()
                .find_first(|b| is_source_vertex_with(b, &fp, conv) != is_totally_e_periodic(b, &fp));
            if let Some(b) = bad {
                return Some((b.clone(), e, s));
            }
        }
    }
    None
}

/// All conventions whose source vertices match total e-periodicity on the grid.
pub fn calibrate(n_max: usize, ranks: &[i64], charges: std::ops::RangeInclusive<i64>) -> Vec<CrystalConvention> {
    CrystalConvention::all()
        .into_iter()
        .filter(|conv| periodicity_mismatch(conv, n_max, ranks, charges.clone()).is_none())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrystalEdge {
    pub source: usize,
    pub target: usize,
    pub residue: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    pub n_max: usize,
    pub params: FockParams,
    pub nodes: Vec<Bipartition>,
    pub edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    pub fn sources(&self) -> Vec<usize> {
        let mut has_incoming = vec![false; self.nodes.len()];
        for edge in &self.edges {
            has_incoming[edge.target] = true;
        }
        (0..self.nodes.len()).filter(|&k| !has_incoming[k]).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "digraph crystal {{\n  // e = {}, s = {}, n_max = {}",
            self.params.e(),
            self.params.s(),
            self.n_max
        )
        .unwrap();
        for (k, node) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{k} [label=\"{node}\"];").unwrap();
        }
        for edge in &self.edges {
            writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                edge.source, edge.target, edge.residue
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// The crystal restricted to bipartitions of size at most `n_max`.
pub fn build_crystal_graph(n_max: usize, fp: &FockParams) -> CrystalGraph {
    let nodes = enumerate_bipartitions_up_to(n_max);
    let index: HashMap<&Bipartition, usize> = nodes.iter().enumerate().map(|(k, b)| (b, k)).collect();
    let edges = nodes
        .par_iter()
        .enumerate()
        .flat_map_iter(|(source, b)| {
            let index = &index;
            (0..fp.e()).filter_map(move |residue| {
                let target = apply_f(b, fp, residue).expect("residue in range")?;
                let &target = index.get(&target)?;
                Some(CrystalEdge {
                    source,
                    target,
                    residue,
                })
            })
        })
        .collect();
    CrystalGraph {
        n_max,
        params: *fp,
        nodes,
        edges,
    }
}
