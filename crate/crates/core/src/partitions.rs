//! Partitions and bipartitions.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive parts, with the
//! empty sequence standing for the empty partition. A [`Bipartition`] is an
//! ordered pair of partitions; these label the simple modules in category O.
//!
//! Text syntax: parts are comma separated (`"3,1"`), the empty partition is
//! the empty string, and a bipartition joins its two components with `|`
//! (`"2,2|"` is `((2,2), ∅)`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::PartitionSyntax(
                join_parts(&parts),
                "parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::PartitionSyntax(
                join_parts(&parts),
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The `rows × columns` rectangle, i.e. `rows` parts all equal to `columns`.
    pub fn rectangle(rows: usize, columns: usize) -> Self {
        if rows == 0 || columns == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![columns; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn columns(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `x` (1-based); zero past the last row.
    pub fn row_len(&self, x: usize) -> usize {
        if x == 0 {
            return 0;
        }
        self.parts.get(x - 1).copied().unwrap_or(0)
    }

    /// Number of rows whose length equals the first row.
    pub fn largest_part_multiplicity(&self) -> usize {
        match self.parts.first() {
            Some(&top) => self.parts.iter().take_while(|&&p| p == top).count(),
            None => 0,
        }
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.columns();
        let parts = (1..=cols)
            .map(|y| self.parts.iter().take_while(|&&p| p >= y).count())
            .collect();
        Partition { parts }
    }

    /// `(rows, columns)` when every part is equal. The empty partition is not
    /// treated as a rectangle.
    pub fn rectangle_dims(&self) -> Option<(usize, usize)> {
        let q = *self.parts.first()?;
        if self.parts.iter().all(|&p| p == q) {
            Some((self.parts.len(), q))
        } else {
            None
        }
    }

    /// Cells `(row, column)` of the Young diagram, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |y| (i + 1, y)))
    }

    /// Sum of `column - row` over all cells.
    pub fn content_sum(&self) -> i64 {
        self.cells().map(|(x, y)| y as i64 - x as i64).sum()
    }

    /// Cells that can be added keeping the shape a partition.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 1..=self.rows() + 1 {
            let len = self.row_len(x);
            if x == 1 || self.row_len(x - 1) > len {
                out.push((x, len + 1));
            }
        }
        out
    }

    /// Cells whose removal leaves a partition.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        (1..=self.rows())
            .filter(|&x| self.row_len(x) > self.row_len(x + 1))
            .map(|x| (x, self.row_len(x)))
            .collect()
    }

    pub fn with_cell_added(&self, x: usize, y: usize) -> Partition {
        let mut parts = self.parts.clone();
        if x > parts.len() {
            parts.push(1);
        } else {
            parts[x - 1] += 1;
        }
        debug_assert_eq!(parts[x - 1], y);
        Partition { parts }
    }

    pub fn with_cell_removed(&self, x: usize, y: usize) -> Partition {
        let mut parts = self.parts.clone();
        debug_assert_eq!(parts[x - 1], y);
        parts[x - 1] -= 1;
        if parts[x - 1] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    /// All partitions of `n` in descending lexicographic order, so `(n)`
    /// comes first and `(1^n)` last.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

fn join_parts(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_parts(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                // Reject signs, whitespace and leading zeros so printing is
                // the exact inverse of parsing.
                let canonical = !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit()) && !tok.starts_with('0');
                if !canonical {
                    return Err(Error::PartitionSyntax(s.to_string(), format!("bad part {tok:?}")));
                }
                tok.parse::<usize>()
                    .map_err(|e| Error::PartitionSyntax(s.to_string(), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| match e {
            Error::PartitionSyntax(_, why) => Error::PartitionSyntax(s.to_string(), why),
            other => other,
        })
    }
}

/// Component index of a bipartition: 1 for `λ¹`, 2 for `λ²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Component {
    First,
    Second,
}

impl Component {
    pub fn index(self) -> u8 {
        match self {
            Component::First => 1,
            Component::Second => 2,
        }
    }

    pub fn other(self) -> Component {
        match self {
            Component::First => Component::Second,
            Component::Second => Component::First,
        }
    }

    pub const BOTH: [Component; 2] = [Component::First, Component::Second];
}

impl From<Component> for u8 {
    fn from(c: Component) -> u8 {
        c.index()
    }
}

impl TryFrom<u8> for Component {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Component::First),
            2 => Ok(Component::Second),
            _ => Err(format!("component must be 1 or 2, got {v}")),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn component(&self, c: Component) -> &Partition {
        match c {
            Component::First => &self.first,
            Component::Second => &self.second,
        }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty() && self.second.is_empty()
    }

    pub fn both_nonempty(&self) -> bool {
        !self.first.is_empty() && !self.second.is_empty()
    }

    /// The single nonempty component, if exactly one component is nonempty.
    pub fn sole_component(&self) -> Option<(Component, &Partition)> {
        match (self.first.is_empty(), self.second.is_empty()) {
            (false, true) => Some((Component::First, &self.first)),
            (true, false) => Some((Component::Second, &self.second)),
            _ => None,
        }
    }

    pub fn total_columns(&self) -> usize {
        self.first.columns() + self.second.columns()
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.second.clone(), self.first.clone())
    }

    /// Componentwise transpose `((λ¹)ᵗ, (λ²)ᵗ)`.
    pub fn transpose(&self) -> Bipartition {
        Bipartition::new(self.first.transpose(), self.second.transpose())
    }

    pub fn with_component(&self, c: Component, p: Partition) -> Bipartition {
        match c {
            Component::First => Bipartition::new(p, self.second.clone()),
            Component::Second => Bipartition::new(self.first.clone(), p),
        }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::BipartitionSyntax(s.to_string()))?;
        if b.contains('|') {
            return Err(Error::BipartitionSyntax(s.to_string()));
        }
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Bipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All bipartitions of `n`, ordered by `|λ¹|` from `n` down to 0, then by
/// `λ¹` and `λ²` in descending lexicographic order.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let seconds = Partition::all_of(n - k);
        for first in Partition::all_of(k) {
            for second in &seconds {
                out.push(Bipartition::new(first.clone(), second.clone()));
            }
        }
    }
    out
}

/// All bipartitions of every size `0..=n_max`, smallest sizes first.
pub fn enumerate_bipartitions_up_to(n_max: usize) -> Vec<Bipartition> {
    (0..=n_max).flat_map(enumerate_bipartitions).collect()
}
