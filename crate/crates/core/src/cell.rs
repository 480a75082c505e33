use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A matrix position, 1-indexed from the top-left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `self` lies strictly above and strictly left of `other`, so the two
    /// can sit on a common diagonal.
    #[inline]
    pub fn precedes(&self, other: &Cell) -> bool {
        self.row < other.row && self.col < other.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.row, self.col].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [row, col] = <[usize; 2]>::deserialize(d)?;
        Ok(Cell { row, col })
    }
}

/// Variable order on entries: `a > b` when `a` is in an earlier row, or the
/// same row and an earlier column.
pub fn lex_compare(a: Cell, b: Cell) -> Ordering {
    b.row.cmp(&a.row).then(b.col.cmp(&a.col))
}

/// Scraping order: `a ≻ b` when `a` is in an earlier column, or the same
/// column and a lower row.
pub fn succ_compare(a: Cell, b: Cell) -> Ordering {
    b.col.cmp(&a.col).then(a.row.cmp(&b.row))
}

/// A finite set of cells, iterated in (row, col) order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellSet(BTreeSet<Cell>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(BTreeSet::new())
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        pairs.iter().map(|&p| Cell::from(p)).collect()
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &CellSet) -> CellSet {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn intersection(&self, other: &CellSet) -> CellSet {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn to_vec(&self) -> Vec<Cell> {
        self.0.iter().copied().collect()
    }

    pub fn into_inner(self) -> BTreeSet<Cell> {
        self.0
    }
}

impl Deref for CellSet {
    type Target = BTreeSet<Cell>;
    fn deref(&self) -> &Self::Target {
        &self.0
    }
}

impl DerefMut for CellSet {
    fn deref_mut(&mut self) -> &mut Self::Target {
        &mut self.0
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

impl<'a> FromIterator<&'a Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = &'a Cell>>(iter: I) -> Self {
        CellSet(iter.into_iter().copied().collect())
    }
}

impl Extend<Cell> for CellSet {
    fn extend<I: IntoIterator<Item = Cell>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl IntoIterator for CellSet {
    type Item = Cell;
    type IntoIter = std::collections::btree_set::IntoIter<Cell>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for CellSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for CellSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(CellSet(Vec::<Cell>::deserialize(d)?.into_iter().collect()))
    }
}
