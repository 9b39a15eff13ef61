//! Shifted skew shapes: construction, canonical representation,
//! classification (ribbon / near-ribbon / frayed ribbon), turn counting,
//! derived shapes, and enumeration.
//!
//! A shape is stored as a nested pair of strict partitions `outer/inner`.
//! Row `i` (1-indexed from the top) occupies columns
//! `i + inner_i ..= i + outer_i - 1`, so every cell satisfies `col >= row`
//! and a cell with `col == row` sits on the staircase.
//!
//! Canonical representation: leading rows fully cancelled by the inner
//! partition are dropped (equivalently, the cell set is translated
//! diagonally up-left as far as rows allow), and empty rows wedged between
//! nonempty ones are encoded with the largest admissible part value so that
//! equal cell sets always produce equal `(outer, inner)` pairs.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::StrictPartition;

/// A cell of a shifted diagram, 1-indexed, with `col >= row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }

    /// Whether the cell is in the leftmost possible position of its row.
    pub fn on_staircase(&self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Row occupancy of a shape: `None` for an empty row, else the inclusive
/// column interval. Index 0 holds row 1.
pub type RowIntervals = Vec<Option<(u32, u32)>>;

/// Coarse classification of a shape's cell set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    /// Connected, no 2x2 block, and the cell set is an ordinary skew shape.
    Ribbon,
    /// Connected non-ribbon that becomes a ribbon after deleting one cell,
    /// with at most one staircase cell.
    NearRibbonOrdinary,
    /// Near-ribbon with two staircase cells (not an ordinary skew shape).
    FrayedRibbon,
    Other,
}

impl ShapeKind {
    pub fn is_near_ribbon(&self) -> bool {
        matches!(
            self,
            ShapeKind::NearRibbonOrdinary | ShapeKind::FrayedRibbon
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            ShapeKind::Ribbon => "ribbon",
            ShapeKind::NearRibbonOrdinary => "near_ribbon_ordinary",
            ShapeKind::FrayedRibbon => "frayed_ribbon",
            ShapeKind::Other => "other",
        }
    }
}

/// Classification result for a nonempty shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeClass {
    pub kind: ShapeKind,
    pub connected: bool,
    pub staircase_count: u32,
}

/// Turns of a frayed ribbon: L-shaped 3-cell corners avoiding the two
/// staircase cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurnReport {
    /// Corners `(i,j)` whose L is `{(i-1,j), (i,j), (i,j-1)}`.
    pub outer_corners: Vec<Cell>,
    /// Corners `(i,j)` whose L is `{(i,j), (i,j+1), (i+1,j)}`.
    pub inner_corners: Vec<Cell>,
}

impl TurnReport {
    pub fn outer_turns(&self) -> u32 {
        self.outer_corners.len() as u32
    }

    pub fn inner_turns(&self) -> u32 {
        self.inner_corners.len() as u32
    }

    pub fn total(&self) -> u32 {
        self.outer_turns() + self.inner_turns()
    }
}

/// Orientation of a frayed-ribbon code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// The ribbon leaves the fray along a row of length >= 2, then climbs.
    RightThenUp,
    /// Antipodal image of the `RightThenUp` decode of the same row list.
    UpThenRight,
}

/// Compact parametrization of a frayed ribbon: the widths of the ribbon rows
/// listed bottom row first. The decoded shape has one extra fray cell on the
/// staircase below the bottom ribbon row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrayedRibbonCode {
    pub orientation: Orientation,
    /// Row widths, bottom ribbon row first; `rows[0] >= 2`.
    pub rows: Vec<u32>,
}

impl FrayedRibbonCode {
    pub fn new(orientation: Orientation, rows: Vec<u32>) -> Result<Self> {
        if rows.is_empty() || rows[0] < 2 {
            return Err(Error::ShortCodeRow);
        }
        if rows.contains(&0) {
            return Err(Error::ShortCodeRow);
        }
        Ok(FrayedRibbonCode { orientation, rows })
    }

    /// Size of the decoded shape: the fray cell plus all ribbon rows.
    pub fn size(&self) -> u32 {
        1 + self.rows.iter().sum::<u32>()
    }

    /// Builds the shape this code describes.
    pub fn decode(&self) -> Result<ShiftedSkewShape> {
        if self.rows.is_empty() || self.rows[0] < 2 || self.rows.contains(&0) {
            return Err(Error::ShortCodeRow);
        }
        let r = self.rows.len() as u32;
        let mut rows: RowIntervals = alloc::vec![None; (r + 1) as usize];
        rows[r as usize] = Some((r + 1, r + 1));
        let mut lo = r;
        let mut hi = r + self.rows[0] - 1;
        rows[(r - 1) as usize] = Some((lo, hi));
        for j in 1..self.rows.len() {
            let i = r - j as u32;
            lo = hi;
            hi = lo + self.rows[j] - 1;
            rows[(i - 1) as usize] = Some((lo, hi));
        }
        let shape = ShiftedSkewShape::from_row_intervals(&rows)?;
        let shape = match self.orientation {
            Orientation::RightThenUp => shape,
            Orientation::UpThenRight => shape.antipodal(),
        };
        debug_assert_eq!(
            shape.classify().map(|c| c.kind),
            Ok(ShapeKind::FrayedRibbon)
        );
        Ok(shape)
    }
}

/// Parameters of a two-turn frayed ribbon in the orientation whose
/// second-to-bottom row has length at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoTurnParams {
    pub top_width: u32,
    pub column_height: u32,
    pub bottom_width: u32,
}

/// A shifted skew shape in canonical representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedSkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl ShiftedSkewShape {
    /// Builds a shape from nested strict partitions and canonicalizes it.
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotNested);
        }
        let mut rows: RowIntervals = Vec::with_capacity(outer.len());
        for i in 1..=outer.len() as u32 {
            let lam = outer.part(i as usize);
            let mu = inner.part(i as usize);
            if lam == mu {
                rows.push(None);
            } else {
                rows.push(Some((i + mu, i + lam - 1)));
            }
        }
        Self::from_row_intervals(&rows)
    }

    pub fn empty() -> Self {
        ShiftedSkewShape {
            outer: StrictPartition::empty(),
            inner: StrictPartition::empty(),
        }
    }

    /// The shifted diagram of a straight strict partition.
    pub fn straight(outer: StrictPartition) -> Self {
        ShiftedSkewShape {
            outer,
            inner: StrictPartition::empty(),
        }
    }

    /// Parses `"6 5 2 1/5 1"`, `"3 1"`, or `"3 1/"`; parts separated by
    /// spaces or commas.
    pub fn parse(text: &str) -> Result<Self> {
        let mut split = text.splitn(2, '/');
        let outer_text = split.next().unwrap_or("");
        if outer_text.trim().is_empty() {
            return Err(Error::Parse(String::from("missing outer partition")));
        }
        let outer = StrictPartition::parse(outer_text)?;
        let inner = match split.next() {
            Some(t) if !t.trim().is_empty() => StrictPartition::parse(t)?,
            _ => StrictPartition::empty(),
        };
        Self::new(outer, inner)
    }

    /// Canonicalizes a row-interval description of a cell set.
    ///
    /// Leading and trailing empty rows are dropped (a leading drop is the
    /// diagonal translation `(row,col) -> (row-1,col-1)` of the cell set),
    /// and interior empty rows are checked for realizability and encoded
    /// with maximal part values.
    pub fn from_row_intervals(rows: &[Option<(u32, u32)>]) -> Result<Self> {
        for (idx, entry) in rows.iter().enumerate() {
            if let Some((a, b)) = entry {
                if *a < idx as u32 + 1 || b < a {
                    return Err(Error::NotRealizable);
                }
            }
        }
        let first = rows.iter().position(|r| r.is_some());
        let Some(first) = first else {
            return Ok(Self::empty());
        };
        let last = rows.iter().rposition(|r| r.is_some()).unwrap();
        let shift = first as u32;
        let trimmed: Vec<Option<(u32, u32)>> = rows[first..=last]
            .iter()
            .map(|r| r.map(|(a, b)| (a - shift, b - shift)))
            .collect();

        let len = trimmed.len();
        let mut lam = alloc::vec![0u32; len];
        let mut mu = alloc::vec![0u32; len];
        // Previous nonempty row: (index 1-based, lambda, mu).
        let mut prev: Option<(usize, u32, u32)> = None;
        for (idx, entry) in trimmed.iter().enumerate() {
            let i = idx + 1;
            let Some((a, b)) = *entry else { continue };
            if a < i as u32 || b < a {
                return Err(Error::NotRealizable);
            }
            let l = b - i as u32 + 1;
            let m = a - i as u32;
            match prev {
                None => debug_assert_eq!(i, 1),
                Some((p, pl, pm)) => {
                    let gap = (i - p - 1) as u32;
                    if gap == 0 {
                        if pl <= l || (m > 0 && pm <= m) {
                            return Err(Error::NotRealizable);
                        }
                    } else {
                        // Empty rows between p and i need `gap` distinct part
                        // values v with lambda_p > v > lambda_i and
                        // mu_p > v > mu_i; take them maximal from mu_p - 1 down.
                        if pm < l + gap + 1 {
                            return Err(Error::NotRealizable);
                        }
                        for t in 1..=gap {
                            let v = pm - t;
                            lam[p - 1 + t as usize] = v;
                            mu[p - 1 + t as usize] = v;
                        }
                    }
                }
            }
            lam[idx] = l;
            mu[idx] = m;
            prev = Some((i, l, m));
        }
        let mu_len = mu.iter().rposition(|&m| m > 0).map_or(0, |p| p + 1);
        mu.truncate(mu_len);
        let outer = StrictPartition::new(lam)?;
        let inner = StrictPartition::new(mu)?;
        debug_assert!(outer.contains(&inner));
        Ok(ShiftedSkewShape { outer, inner })
    }

    /// Rebuilds a shape from an explicit cell set. Fails when the set is not
    /// realizable (rows must be contiguous intervals with valid nesting).
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        let Some(max_row) = set.iter().map(|c| c.row).max() else {
            return Ok(Self::empty());
        };
        let mut rows: RowIntervals = alloc::vec![None; max_row as usize];
        for c in &set {
            if c.row == 0 || c.col == 0 {
                return Err(Error::NotRealizable);
            }
            let slot = &mut rows[(c.row - 1) as usize];
            *slot = match *slot {
                None => Some((c.col, c.col)),
                Some((a, b)) => Some((a.min(c.col), b.max(c.col))),
            };
        }
        // Interval coverage must be exact (no holes inside a row).
        let covered: usize = rows
            .iter()
            .flatten()
            .map(|&(a, b)| (b - a + 1) as usize)
            .sum();
        if covered != set.len() {
            return Err(Error::NotRealizable);
        }
        Self::from_row_intervals(&rows)
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn is_empty(&self) -> bool {
        self.outer.size() == self.inner.size()
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Column intervals per row, index 0 = row 1.
    pub fn row_intervals(&self) -> RowIntervals {
        let mut rows = Vec::with_capacity(self.outer.len());
        for i in 1..=self.outer.len() as u32 {
            let lam = self.outer.part(i as usize);
            let mu = self.inner.part(i as usize);
            if lam == mu {
                rows.push(None);
            } else {
                rows.push(Some((i + mu, i + lam - 1)));
            }
        }
        rows
    }

    /// All cells in row-major order (top row first, left to right).
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (idx, entry) in self.row_intervals().iter().enumerate() {
            if let Some((a, b)) = *entry {
                for col in a..=b {
                    out.push(Cell::new(idx as u32 + 1, col));
                }
            }
        }
        out
    }

    pub fn contains_cell(&self, row: u32, col: u32) -> bool {
        if row == 0 || row > self.outer.len() as u32 {
            return false;
        }
        let lam = self.outer.part(row as usize);
        let mu = self.inner.part(row as usize);
        lam > mu && col >= row + mu && col < row + lam
    }

    pub fn max_col(&self) -> u32 {
        self.row_intervals()
            .iter()
            .flatten()
            .map(|&(_, b)| b)
            .max()
            .unwrap_or(0)
    }

    /// Cells with `col == row`, sorted by row.
    pub fn staircase_cells(&self) -> Vec<Cell> {
        self.row_intervals()
            .iter()
            .enumerate()
            .filter_map(|(idx, entry)| {
                let (a, _) = (*entry)?;
                let row = idx as u32 + 1;
                (a == row).then_some(Cell::new(row, row))
            })
            .collect()
    }

    /// Edge-adjacency connectivity (corner contact does not connect).
    pub fn is_connected(&self) -> bool {
        let rows = self.row_intervals();
        let mut iter = rows.iter();
        let Some(first) = iter.find(|r| r.is_some()) else {
            return true;
        };
        let mut prev = first.unwrap();
        for entry in iter {
            match entry {
                None => return false,
                Some((a, b)) => {
                    let (pa, pb) = prev;
                    if *a > pb || pa > *b {
                        return false;
                    }
                    prev = (*a, *b);
                }
            }
        }
        true
    }

    /// Classifies a nonempty shape.
    pub fn classify(&self) -> Result<ShapeClass> {
        if self.is_empty() {
            return Err(Error::EmptyShape);
        }
        let cells: BTreeSet<Cell> = self.cells().into_iter().collect();
        let connected = self.is_connected();
        let staircase_count = self.staircase_cells().len() as u32;
        let kind = if is_ribbon_cell_set(&cells) {
            ShapeKind::Ribbon
        } else if connected && is_near_ribbon_cells(&cells) {
            if staircase_count >= 2 {
                ShapeKind::FrayedRibbon
            } else {
                ShapeKind::NearRibbonOrdinary
            }
        } else {
            ShapeKind::Other
        };
        Ok(ShapeClass {
            kind,
            connected,
            staircase_count,
        })
    }

    /// Reflection across the northeast-southwest diagonal; an involution on
    /// canonical shapes, and it preserves the Schur Q-function.
    pub fn antipodal(&self) -> ShiftedSkewShape {
        if self.is_empty() {
            return Self::empty();
        }
        let n = self.max_col();
        let cells = self
            .cells()
            .into_iter()
            .map(|c| Cell::new(n + 1 - c.col, n + 1 - c.row));
        Self::from_cells(cells).expect("antipodal image of a valid shape is valid")
    }

    /// Scans for the two L-shaped turn patterns, excluding any L that
    /// contains one of the two staircase cells of the frayed pair.
    pub fn count_turns(&self) -> Result<TurnReport> {
        let class = self.classify()?;
        if class.kind != ShapeKind::FrayedRibbon {
            return Err(Error::NotFrayedRibbon);
        }
        let stair: Vec<Cell> = self.staircase_cells();
        debug_assert_eq!(stair.len(), 2);
        let banned = |c: &Cell| stair.contains(c);
        let mut outer_corners = Vec::new();
        let mut inner_corners = Vec::new();
        for c in self.cells() {
            let (i, j) = (c.row, c.col);
            if i > 1 && self.contains_cell(i - 1, j) && self.contains_cell(i, j - 1) {
                let l = [c, Cell::new(i - 1, j), Cell::new(i, j - 1)];
                if !l.iter().any(banned) {
                    outer_corners.push(c);
                }
            }
            if self.contains_cell(i, j + 1) && self.contains_cell(i + 1, j) {
                let l = [c, Cell::new(i, j + 1), Cell::new(i + 1, j)];
                if !l.iter().any(banned) {
                    inner_corners.push(c);
                }
            }
        }
        Ok(TurnReport {
            outer_corners,
            inner_corners,
        })
    }

    /// Reads off the row-width code of a frayed ribbon. The result always
    /// uses the `RightThenUp` orientation (every frayed ribbon admits one).
    pub fn frayed_code(&self) -> Result<FrayedRibbonCode> {
        if let Some(rows) = self.rtu_row_widths() {
            return FrayedRibbonCode::new(Orientation::RightThenUp, rows);
        }
        // Defensive fallback; not reachable for genuine frayed ribbons.
        if let Some(rows) = self.antipodal().rtu_row_widths() {
            return FrayedRibbonCode::new(Orientation::UpThenRight, rows);
        }
        Err(Error::NotFrayedRibbon)
    }

    /// Row widths bottom-ribbon-row-first when this shape matches the
    /// right-then-up frayed pattern: a single staircase fray cell in the
    /// bottom row, the row above starting on the staircase, and every higher
    /// row starting atop the right end of the row below.
    fn rtu_row_widths(&self) -> Option<Vec<u32>> {
        if self.classify().ok()?.kind != ShapeKind::FrayedRibbon {
            return None;
        }
        let rows = self.row_intervals();
        let nrows = rows.len() as u32;
        let stair = self.staircase_cells();
        let [s0, s1] = stair.as_slice() else {
            return None;
        };
        if s1.row != s0.row + 1 || s1.row != nrows {
            return None;
        }
        let r = s0.row;
        let (fa, fb) = rows[(r as usize + 1) - 1]?;
        if (fa, fb) != (r + 1, r + 1) {
            return None;
        }
        let (lo, mut hi) = rows[(r as usize) - 1]?;
        if lo != r || hi - lo + 1 < 2 {
            return None;
        }
        let mut widths = alloc::vec![hi - lo + 1];
        for i in (1..r).rev() {
            let (a, b) = rows[(i as usize) - 1]?;
            if a != hi {
                return None;
            }
            widths.push(b - a + 1);
            hi = b;
        }
        Some(widths)
    }

    /// Column height of a one-turn frayed ribbon: the number of cells in the
    /// long column strictly above the corner of the outer turn, measured in
    /// the orientation whose second-to-bottom row has length at least 3.
    pub fn one_turn_column_height(&self) -> Result<u32> {
        let turns = self.count_turns()?;
        if turns.total() != 1 {
            return Err(Error::TurnCount {
                expected: 1,
                found: turns.total(),
            });
        }
        let code = self.normalized_code()?;
        let rows = &code.rows;
        if rows[0] >= 3 && rows[1..].iter().all(|&w| w == 1) {
            Ok(rows.len() as u32 - 1)
        } else {
            Err(Error::NotFrayedRibbon)
        }
    }

    /// Parameters of a two-turn frayed ribbon, normalized so the
    /// second-to-bottom row has length at least 3.
    pub fn two_turn_params(&self) -> Result<TwoTurnParams> {
        let turns = self.count_turns()?;
        if turns.total() != 2 {
            return Err(Error::TurnCount {
                expected: 2,
                found: turns.total(),
            });
        }
        let code = self.normalized_code()?;
        let rows = &code.rows;
        let len = rows.len();
        if len >= 2
            && rows[0] >= 3
            && *rows.last().unwrap() >= 2
            && rows[1..len - 1].iter().all(|&w| w == 1)
        {
            let params = TwoTurnParams {
                top_width: *rows.last().unwrap(),
                column_height: len as u32 - 2,
                bottom_width: rows[0],
            };
            debug_assert_eq!(
                params.top_width + params.column_height + params.bottom_width + 1,
                self.size()
            );
            Ok(params)
        } else {
            Err(Error::NotFrayedRibbon)
        }
    }

    /// Right-then-up code of this shape or of its antipodal image, whichever
    /// has a second-to-bottom row of length at least 3.
    fn normalized_code(&self) -> Result<FrayedRibbonCode> {
        let code = self.frayed_code()?;
        if code.rows[0] >= 3 {
            return Ok(code);
        }
        self.antipodal().frayed_code()
    }

    /// Moves the topmost `k` rows one unit to the right.
    pub fn shift_top_rows(&self, k: u32) -> Result<ShiftedSkewShape> {
        let mut rows = self.row_intervals();
        for entry in rows.iter_mut().take(k as usize) {
            if let Some((a, b)) = entry {
                *entry = Some((*a + 1, *b + 1));
            }
        }
        Self::from_row_intervals(&rows)
    }

    /// Appends a detached row of length `r` to the upper right: the current
    /// cells move one step down-right along the diagonal and a new top row is
    /// placed so that it shares no row and no column with the rest, with one
    /// empty column in between.
    pub fn append_detached_row(&self, r: u32) -> Result<ShiftedSkewShape> {
        debug_assert!(r >= 1);
        if self.is_empty() {
            return Self::from_row_intervals(&[Some((1, r))]);
        }
        let shifted: Vec<Option<(u32, u32)>> = self
            .row_intervals()
            .iter()
            .map(|e| e.map(|(a, b)| (a + 1, b + 1)))
            .collect();
        let start = self.max_col() + 3;
        let mut rows: RowIntervals = Vec::with_capacity(shifted.len() + 1);
        rows.push(Some((start, start + r - 1)));
        rows.extend(shifted);
        let out = Self::from_row_intervals(&rows)?;
        debug_assert_eq!(out.size(), self.size() + r);
        Ok(out)
    }

    /// ASCII grid of the shape, `#` for cells, staircase-aligned.
    pub fn ascii(&self) -> String {
        let mut s = String::new();
        for entry in self.row_intervals() {
            match entry {
                None => s.push('\n'),
                Some((a, b)) => {
                    for _ in 1..a {
                        s.push(' ');
                    }
                    for _ in a..=b {
                        s.push('#');
                    }
                    s.push('\n');
                }
            }
        }
        s
    }
}

impl fmt::Display for ShiftedSkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.outer.is_empty() {
            return write!(f, "/");
        }
        write!(f, "{}", self.outer)?;
        if !self.inner.is_empty() {
            write!(f, "/{}", self.inner)?;
        }
        Ok(())
    }
}

/// Ribbon test on a bare cell set: rows are contiguous intervals on
/// consecutive row indices, and each upper row starts exactly above the right
/// end of the row below (so consecutive rows overlap in one column and the
/// underlying diagram is an ordinary skew shape without 2x2 blocks).
pub(crate) fn is_ribbon_cell_set(cells: &BTreeSet<Cell>) -> bool {
    let Some(first) = cells.first() else {
        return false;
    };
    let min_row = first.row;
    let max_row = cells.iter().map(|c| c.row).max().unwrap();
    let mut intervals = Vec::new();
    for row in min_row..=max_row {
        let cols: Vec<u32> = cells
            .iter()
            .filter(|c| c.row == row)
            .map(|c| c.col)
            .collect();
        if cols.is_empty() {
            return false;
        }
        let (a, b) = (cols[0], *cols.last().unwrap());
        if (b - a + 1) as usize != cols.len() {
            return false;
        }
        intervals.push((a, b));
    }
    intervals.windows(2).all(|w| w[0].0 == w[1].1)
}

/// Whether removing a single cell leaves a ribbon.
fn is_near_ribbon_cells(cells: &BTreeSet<Cell>) -> bool {
    if is_ribbon_cell_set(cells) {
        return false;
    }
    cells.iter().any(|c| {
        let mut rest = cells.clone();
        rest.remove(c);
        is_ribbon_cell_set(&rest)
    })
}

/// All frayed ribbons of size `n` (both orientations decoded, deduplicated).
/// Sizes below 4 yield an empty list.
///
/// With `one_per_antipodal_pair`, only the lexicographically smaller shape of
/// each antipodal pair is kept (self-antipodal shapes are kept).
pub fn enumerate_frayed_ribbons(n: u32, one_per_antipodal_pair: bool) -> Vec<ShiftedSkewShape> {
    if n < 4 {
        return Vec::new();
    }
    let mut set: BTreeSet<ShiftedSkewShape> = BTreeSet::new();
    let mut comp: Vec<u32> = Vec::new();
    compositions_first_at_least_two(n - 1, &mut comp, &mut |alpha| {
        for orientation in [Orientation::RightThenUp, Orientation::UpThenRight] {
            let code = FrayedRibbonCode {
                orientation,
                rows: alpha.to_vec(),
            };
            set.insert(code.decode().expect("codes of valid compositions decode"));
        }
    });
    if one_per_antipodal_pair {
        set.into_iter().filter(|s| *s <= s.antipodal()).collect()
    } else {
        set.into_iter().collect()
    }
}

fn compositions_first_at_least_two(total: u32, acc: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    fn rest(remaining: u32, acc: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if remaining == 0 {
            f(acc);
            return;
        }
        for part in 1..=remaining {
            acc.push(part);
            rest(remaining - part, acc, f);
            acc.pop();
        }
    }
    for first in 2..=total {
        acc.push(first);
        rest(total - first, acc, f);
        acc.pop();
    }
}

/// All canonical shapes of size `n` within the enumeration window
/// (rows `1..=n`, columns `1..=2n`), restricted to minimal-translate
/// representatives: a shape whose every cell can slide one column left while
/// remaining realizable is dropped, since the slide changes neither the cell
/// adjacencies nor the Schur Q-function.
///
/// With `connected_only`, empty interior rows are never produced and
/// consecutive rows must share a column.
pub fn enumerate_shifted_skew_shapes(n: u32, connected_only: bool) -> Vec<ShiftedSkewShape> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let max_col = 2 * n;
    let mut rows: RowIntervals = Vec::new();
    // Row 1 is nonempty in canonical form.
    for a in 1..=max_col {
        for b in a..=(a + n - 1).min(max_col) {
            rows.push(Some((a, b)));
            extend_rows(n, n - (b - a + 1), connected_only, &mut rows, &mut out);
            rows.pop();
        }
    }
    out.sort();
    out
}

fn extend_rows(
    n: u32,
    budget: u32,
    connected_only: bool,
    rows: &mut RowIntervals,
    out: &mut Vec<ShiftedSkewShape>,
) {
    if budget == 0 {
        if !slide_left_realizable(rows) {
            let shape = ShiftedSkewShape::from_row_intervals(rows)
                .expect("generated intervals are realizable");
            out.push(shape);
        }
        return;
    }
    let max_col = 2 * n;
    let (p, (pa, pb)) = rows
        .iter()
        .enumerate()
        .rev()
        .find_map(|(i, e)| e.map(|iv| (i as u32 + 1, iv)))
        .expect("at least one nonempty row");
    let (pl, pm) = (pb - p + 1, pa - p);
    let gap_limit = if connected_only { 0 } else { n };
    for gap in 0..=gap_limit {
        let q = p + 1 + gap;
        if q > n {
            break;
        }
        for a in q..=max_col {
            let bmax = (a + budget - 1).min(max_col);
            for b in a..=bmax {
                let l = b - q + 1;
                let m = a - q;
                let ok = if gap == 0 {
                    pl > l && (m == 0 || pm > m) && (!connected_only || (pa <= b && a <= pb))
                } else {
                    pm > l + gap
                };
                if !ok {
                    continue;
                }
                for _ in 0..gap {
                    rows.push(None);
                }
                rows.push(Some((a, b)));
                extend_rows(n, budget - (b - a + 1), connected_only, rows, out);
                rows.pop();
                for _ in 0..gap {
                    rows.pop();
                }
            }
        }
    }
}

/// Whether translating every cell one column left yields a realizable shape.
fn slide_left_realizable(rows: &[Option<(u32, u32)>]) -> bool {
    let slid: RowIntervals = rows
        .iter()
        .map(|e| e.map(|(a, b)| (a.saturating_sub(1), b - 1)))
        .collect();
    if slid.iter().flatten().any(|&(a, _)| a == 0) {
        return false;
    }
    ShiftedSkewShape::from_row_intervals(&slid).is_ok()
}
