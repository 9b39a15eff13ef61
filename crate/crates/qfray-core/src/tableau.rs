//! Shifted tableaux over the doubled alphabet `1' < 1 < 2' < 2 < ...`:
//! semistandardness, canonical form, reading words, contents, greedy
//! fillings, and backtracking enumeration of fillings.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::shape::{is_ribbon_cell_set, Cell, ShiftedSkewShape};
use crate::walk::{prefix_can_return, step, StepRole, WalkState};

/// A letter `i` or `i'` of the doubled alphabet, ordered
/// `1' < 1 < 2' < 2 < 3' < 3 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    value: u32,
    primed: bool,
}

impl Letter {
    pub fn new(value: u32, primed: bool) -> Self {
        debug_assert!(value >= 1);
        Letter { value, primed }
    }

    pub fn unprimed(value: u32) -> Self {
        Self::new(value, false)
    }

    pub fn primed(value: u32) -> Self {
        Self::new(value, true)
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_primed(&self) -> bool {
        self.primed
    }

    /// Position in the total order, starting at 1 for `1'`.
    pub fn ord(&self) -> u32 {
        2 * self.value - u32::from(self.primed)
    }

    /// Inverse of [`Letter::ord`].
    pub fn from_ord(ord: u32) -> Self {
        debug_assert!(ord >= 1);
        Letter {
            value: ord.div_ceil(2),
            primed: ord % 2 == 1,
        }
    }

    /// Parses `"3"` or `"3'"`.
    pub fn parse(tok: &str) -> Result<Self> {
        let (digits, primed) = match tok.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (tok, false),
        };
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad letter {tok:?}")))?;
        if value == 0 {
            return Err(Error::Parse(alloc::format!("bad letter {tok:?}")));
        }
        Ok(Letter { value, primed })
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.ord().cmp(&other.ord())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

/// Parses a word of letters separated by whitespace or commas.
pub fn parse_word(text: &str) -> Result<Vec<Letter>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(Letter::parse)
        .collect()
}

/// Joins a word with single spaces.
pub fn word_text(word: &[Letter]) -> String {
    let mut s = String::new();
    for (i, l) in word.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&alloc::format!("{l}"));
    }
    s
}

/// Letter multiplicities `(m_1, m_2, ...)` with trailing zeros trimmed;
/// `m_i` counts both `i` and `i'`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ContentVector {
    counts: Vec<u32>,
}

impl ContentVector {
    pub fn new(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        ContentVector { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Count of `i*` entries, 1-indexed.
    pub fn count(&self, value: u32) -> u32 {
        self.counts.get(value as usize - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }
}

impl From<&crate::partition::StrictPartition> for ContentVector {
    fn from(p: &crate::partition::StrictPartition) -> Self {
        ContentVector::new(p.parts().to_vec())
    }
}

impl fmt::Display for ContentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An assignment of letters to every cell of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedTableau {
    shape: ShiftedSkewShape,
    entries: BTreeMap<Cell, Letter>,
}

impl ShiftedTableau {
    /// Builds a tableau; the entry map must cover exactly the shape's cells.
    pub fn new(shape: ShiftedSkewShape, entries: BTreeMap<Cell, Letter>) -> Result<Self> {
        let cells = shape.cells();
        if entries.len() != cells.len() || cells.iter().any(|c| !entries.contains_key(c)) {
            return Err(Error::ContentMismatch);
        }
        Ok(ShiftedTableau { shape, entries })
    }

    /// Builds a tableau from letters listed in reading order (rows bottom to
    /// top, left to right).
    pub fn from_reading_letters(shape: &ShiftedSkewShape, letters: &[Letter]) -> Result<Self> {
        let cells = reading_cells(shape);
        if cells.len() != letters.len() {
            return Err(Error::ContentMismatch);
        }
        let entries = cells.into_iter().zip(letters.iter().copied()).collect();
        Ok(ShiftedTableau {
            shape: shape.clone(),
            entries,
        })
    }

    pub fn shape(&self) -> &ShiftedSkewShape {
        &self.shape
    }

    pub fn get(&self, cell: Cell) -> Option<Letter> {
        self.entries.get(&cell).copied()
    }

    /// Rows concatenated from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<Letter> {
        reading_cells(&self.shape)
            .into_iter()
            .map(|c| self.entries[&c])
            .collect()
    }

    /// Rows and columns weakly increase, primed letters repeat only in
    /// columns, unprimed letters repeat only in rows.
    pub fn is_semistandard(&self) -> bool {
        for (&cell, &letter) in &self.entries {
            if let Some(&right) = self.entries.get(&Cell::new(cell.row, cell.col + 1)) {
                if letter > right || (letter == right && letter.is_primed()) {
                    return false;
                }
            }
            if let Some(&down) = self.entries.get(&Cell::new(cell.row + 1, cell.col)) {
                if letter > down || (letter == down && !letter.is_primed()) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the first `i*` in reading order is unprimed for every `i`.
    pub fn is_canonical(&self) -> bool {
        let mut seen = BTreeSet::new();
        for letter in self.reading_word() {
            if seen.insert(letter.value()) && letter.is_primed() {
                return false;
            }
        }
        true
    }

    pub fn content(&self) -> ContentVector {
        let max = self.entries.values().map(|l| l.value()).max().unwrap_or(0);
        let mut counts = alloc::vec![0u32; max as usize];
        for letter in self.entries.values() {
            counts[letter.value() as usize - 1] += 1;
        }
        ContentVector::new(counts)
    }

    /// One line per row, letter tokens left-padded to their shifted column
    /// positions.
    pub fn ascii(&self) -> String {
        let width = self
            .entries
            .values()
            .map(|l| alloc::format!("{l}").len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (idx, entry) in self.shape.row_intervals().iter().enumerate() {
            if let Some((a, b)) = *entry {
                let mut line = String::new();
                for _ in 1..a {
                    for _ in 0..=width {
                        line.push(' ');
                    }
                }
                for col in a..=b {
                    let tok = alloc::format!("{}", self.entries[&Cell::new(idx as u32 + 1, col)]);
                    line.push_str(&tok);
                    for _ in tok.len()..=width {
                        line.push(' ');
                    }
                }
                out.push_str(line.trim_end());
            }
            out.push('\n');
        }
        out
    }
}

/// Cells in reading order: rows bottom to top, left to right within a row.
pub fn reading_cells(shape: &ShiftedSkewShape) -> Vec<Cell> {
    let intervals = shape.row_intervals();
    let mut out = Vec::with_capacity(shape.size() as usize);
    for (idx, entry) in intervals.iter().enumerate().rev() {
        if let Some((a, b)) = *entry {
            for col in a..=b {
                out.push(Cell::new(idx as u32 + 1, col));
            }
        }
    }
    out
}

/// Result of the layered greedy filling of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyResult {
    filling: BTreeMap<Cell, u32>,
    ribbon_count: u32,
    content: ContentVector,
}

impl GreedyResult {
    /// Unprimed letter value assigned to each cell.
    pub fn filling(&self) -> &BTreeMap<Cell, u32> {
        &self.filling
    }

    /// Number of maximal edge-connected uniformly-labeled ribbons.
    pub fn ribbon_count(&self) -> u32 {
        self.ribbon_count
    }

    pub fn content(&self) -> &ContentVector {
        &self.content
    }

    /// Coefficient `2^r` of the greedy monomial.
    pub fn coefficient(&self) -> Result<i64> {
        1i64.checked_shl(self.ribbon_count).ok_or(Error::Overflow)
    }

    /// Text form `2^r * x1^m1 x2^m2 ...`.
    pub fn monomial_text(&self) -> String {
        let mut s = alloc::format!("2^{}", self.ribbon_count);
        for (i, m) in self.content.counts().iter().enumerate() {
            if *m > 0 {
                s.push_str(&alloc::format!(" * x{}^{}", i + 1, m));
            }
        }
        s
    }
}

/// Computes the greedy filling: layer 1 consists of the top row together
/// with every cell sharing an edge or corner with a cell of the removed
/// inner diagram; each next layer consists of the cells sharing an edge or
/// corner with the previous layer. Each layer decomposes into ribbons.
pub fn greedy_filling(shape: &ShiftedSkewShape) -> Result<GreedyResult> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    let cells: Vec<Cell> = shape.cells();
    let cell_set: BTreeSet<Cell> = cells.iter().copied().collect();

    let mut inner_cells: BTreeSet<Cell> = BTreeSet::new();
    for i in 1..=shape.inner().len() as u32 {
        let m = shape.inner().part(i as usize);
        for col in i..i + m {
            inner_cells.insert(Cell::new(i, col));
        }
    }

    let touches = |c: &Cell, set: &BTreeSet<Cell>| -> bool {
        let (r, col) = (c.row, c.col);
        for dr in -1i64..=1 {
            for dc in -1i64..=1 {
                if dr == 0 && dc == 0 {
                    continue;
                }
                let (nr, nc) = (r as i64 + dr, col as i64 + dc);
                if nr >= 1 && nc >= 1 && set.contains(&Cell::new(nr as u32, nc as u32)) {
                    return true;
                }
            }
        }
        false
    };

    let top_row = cells.first().map(|c| c.row).unwrap();
    let mut assigned: BTreeMap<Cell, u32> = BTreeMap::new();
    let mut frontier: BTreeSet<Cell> = cells
        .iter()
        .filter(|c| c.row == top_row || touches(c, &inner_cells))
        .copied()
        .collect();

    let mut layer = 1u32;
    let mut counts: Vec<u32> = Vec::new();
    let mut ribbon_count = 0u32;
    while !frontier.is_empty() {
        for &c in &frontier {
            assigned.insert(c, layer);
        }
        counts.push(frontier.len() as u32);
        for comp in edge_components(&frontier) {
            if !is_ribbon_cell_set(&comp) {
                return Err(Error::BadParams(String::from(
                    "greedy layer component is not a ribbon",
                )));
            }
            ribbon_count += 1;
        }
        frontier = cell_set
            .iter()
            .filter(|c| !assigned.contains_key(c) && touches(c, &frontier))
            .copied()
            .collect();
        layer += 1;
    }
    debug_assert_eq!(assigned.len(), cells.len(), "greedy layers cover the shape");

    Ok(GreedyResult {
        filling: assigned,
        ribbon_count,
        content: ContentVector::new(counts),
    })
}

/// Maximal edge-connected components of a cell set.
fn edge_components(cells: &BTreeSet<Cell>) -> Vec<BTreeSet<Cell>> {
    let mut remaining = cells.clone();
    let mut out = Vec::new();
    while let Some(&seed) = remaining.iter().next() {
        let mut comp = BTreeSet::new();
        let mut stack = alloc::vec![seed];
        remaining.remove(&seed);
        while let Some(c) = stack.pop() {
            comp.insert(c);
            let mut push = |r: i64, col: i64| {
                if r >= 1 && col >= 1 {
                    let n = Cell::new(r as u32, col as u32);
                    if remaining.remove(&n) {
                        stack.push(n);
                    }
                }
            };
            push(c.row as i64 - 1, c.col as i64);
            push(c.row as i64 + 1, c.col as i64);
            push(c.row as i64, c.col as i64 - 1);
            push(c.row as i64, c.col as i64 + 1);
        }
        out.push(comp);
    }
    out
}

/// Options for the backtracking filling search shared by the public
/// enumerators and the Littlewood-Richardson counter.
#[derive(Debug, Clone)]
pub(crate) struct BacktrackOpts {
    /// Letters take values `1..=max_value`.
    pub max_value: u32,
    /// Fixed content (index `v-1` is the quota of value `v`); `None` leaves
    /// the multiplicities free.
    pub quota: Option<Vec<u32>>,
    /// Keep only canonical-form fillings.
    pub canonical: bool,
    /// Keep only fillings whose reading word is ballot.
    pub ballot: bool,
    /// Abandon prefixes whose walks are too high to return (ballot only).
    pub prune_walks: bool,
    /// Restrict the top row to value 1 (sound for ballot counting only).
    pub prune_top_row: bool,
}

impl BacktrackOpts {
    pub fn free(max_value: u32) -> Self {
        BacktrackOpts {
            max_value,
            quota: None,
            canonical: false,
            ballot: false,
            prune_walks: false,
            prune_top_row: false,
        }
    }
}

struct GridCell {
    left: Option<usize>,
    below: Option<usize>,
    top_row: bool,
}

fn reading_grid(shape: &ShiftedSkewShape) -> Vec<GridCell> {
    let cells = reading_cells(shape);
    let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let top_row = shape.cells().first().map(|c| c.row).unwrap_or(1);
    cells
        .iter()
        .map(|c| GridCell {
            left: index.get(&Cell::new(c.row, c.col.wrapping_sub(1))).copied(),
            below: index.get(&Cell::new(c.row + 1, c.col)).copied(),
            top_row: c.row == top_row,
        })
        .collect()
}

/// Runs the backtracking search over semistandard fillings in reading order,
/// calling `visit` with the letters (reading order) and per-value counts of
/// each surviving filling. Deterministic: letters are tried in increasing
/// alphabet order at every cell.
pub(crate) fn backtrack(
    shape: &ShiftedSkewShape,
    opts: &BacktrackOpts,
    visit: &mut dyn FnMut(&[Letter], &[u32]),
) {
    let grid = reading_grid(shape);
    let n = grid.len();
    if let Some(q) = &opts.quota {
        debug_assert_eq!(q.len(), opts.max_value as usize);
        if q.iter().map(|&x| x as u64).sum::<u64>() != n as u64 {
            return;
        }
    }
    let levels = opts.max_value.saturating_sub(1) as usize;
    let mut st = SearchState {
        letters: Vec::with_capacity(n),
        used: alloc::vec![0u32; opts.max_value as usize],
        walks: alloc::vec![WalkState::origin(); levels],
    };
    place(0, &grid, opts, &mut st, visit);
}

struct SearchState {
    letters: Vec<Letter>,
    used: Vec<u32>,
    walks: Vec<WalkState>,
}

fn place(
    t: usize,
    grid: &[GridCell],
    opts: &BacktrackOpts,
    st: &mut SearchState,
    visit: &mut dyn FnMut(&[Letter], &[u32]),
) {
    if t == grid.len() {
        if !opts.ballot || st.walks.iter().all(|w| w.y == 0) {
            visit(&st.letters, &st.used);
        }
        return;
    }
    let info = &grid[t];
    let mut min_ord = 1;
    if let Some(i) = info.left {
        let l = st.letters[i];
        min_ord = l.ord() + u32::from(l.is_primed());
    }
    let mut max_ord = 2 * opts.max_value;
    if let Some(i) = info.below {
        let b = st.letters[i];
        max_ord = max_ord.min(b.ord() - u32::from(!b.is_primed()));
    }
    if opts.prune_top_row && opts.ballot && info.top_row {
        max_ord = max_ord.min(2);
    }
    for ord in min_ord..=max_ord {
        let letter = Letter::from_ord(ord);
        let v = letter.value() as usize;
        if let Some(q) = &opts.quota {
            if st.used[v - 1] >= q[v - 1] {
                continue;
            }
        }
        if opts.canonical && letter.is_primed() && st.used[v - 1] == 0 {
            continue;
        }

        let mut undo: [(usize, WalkState); 2] = [(usize::MAX, WalkState::origin()); 2];
        if opts.ballot {
            // Value v moves level v-1 (as the high letter) and level v
            // (as the low letter).
            if v >= 2 {
                let idx = v - 2;
                undo[0] = (idx, st.walks[idx]);
                let role = if letter.is_primed() {
                    StepRole::HighPrimed
                } else {
                    StepRole::HighUnprimed
                };
                st.walks[idx] = step(st.walks[idx], role).1;
            }
            if v <= st.walks.len() {
                let idx = v - 1;
                undo[1] = (idx, st.walks[idx]);
                let role = if letter.is_primed() {
                    StepRole::LowPrimed
                } else {
                    StepRole::LowUnprimed
                };
                st.walks[idx] = step(st.walks[idx], role).1;
            }
        }
        st.used[v - 1] += 1;
        st.letters.push(letter);

        let mut viable = true;
        if opts.ballot && opts.prune_walks {
            if let Some(q) = &opts.quota {
                for lvl_idx in [v.checked_sub(2), (v <= st.walks.len()).then(|| v - 1)]
                    .into_iter()
                    .flatten()
                {
                    let lvl = lvl_idx + 1;
                    let rem = (q[lvl - 1] - st.used[lvl - 1])
                        + q.get(lvl).map_or(0, |&x| x - st.used[lvl]);
                    if !prefix_can_return(st.walks[lvl_idx], rem) {
                        viable = false;
                        break;
                    }
                }
            } else {
                let rem = (grid.len() - t - 1) as u32;
                if !st.walks.iter().all(|w| prefix_can_return(*w, rem)) {
                    viable = false;
                }
            }
        }
        if viable {
            place(t + 1, grid, opts, st, visit);
        }

        st.letters.pop();
        st.used[v - 1] -= 1;
        if opts.ballot {
            for (idx, old) in undo {
                if idx != usize::MAX {
                    st.walks[idx] = old;
                }
            }
        }
    }
}

/// Streams every semistandard filling of `shape` with the given content
/// (canonical-form-filtered when requested) in deterministic order.
pub fn for_each_filling(
    shape: &ShiftedSkewShape,
    content: &ContentVector,
    require_canonical: bool,
    mut f: impl FnMut(&ShiftedTableau),
) -> Result<()> {
    if content.total() != shape.size() {
        return Err(Error::ContentMismatch);
    }
    let max_value = content.len().max(1) as u32;
    let quota: Vec<u32> = (1..=max_value).map(|v| content.count(v)).collect();
    let opts = BacktrackOpts {
        max_value,
        quota: Some(quota),
        canonical: require_canonical,
        ballot: false,
        prune_walks: false,
        prune_top_row: false,
    };
    backtrack(shape, &opts, &mut |letters, _| {
        let tab = ShiftedTableau::from_reading_letters(shape, letters)
            .expect("search emits complete fillings");
        f(&tab);
    });
    Ok(())
}

/// Collects [`for_each_filling`] into a vector.
pub fn enumerate_fillings(
    shape: &ShiftedSkewShape,
    content: &ContentVector,
    require_canonical: bool,
) -> Result<Vec<ShiftedTableau>> {
    let mut out = Vec::new();
    for_each_filling(shape, content, require_canonical, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Streams every semistandard filling with letter values at most
/// `max_value`, any content.
pub fn for_each_shssyt(
    shape: &ShiftedSkewShape,
    max_value: u32,
    mut f: impl FnMut(&ShiftedTableau),
) {
    debug_assert!(max_value >= 1);
    let opts = BacktrackOpts::free(max_value);
    backtrack(shape, &opts, &mut |letters, _| {
        let tab = ShiftedTableau::from_reading_letters(shape, letters)
            .expect("search emits complete fillings");
        f(&tab);
    });
}

/// Collects [`for_each_shssyt`] into a vector.
pub fn enumerate_shssyt(shape: &ShiftedSkewShape, max_value: u32) -> Vec<ShiftedTableau> {
    let mut out = Vec::new();
    for_each_shssyt(shape, max_value, |t| out.push(t.clone()));
    out
}
