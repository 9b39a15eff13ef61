//! First-quadrant lattice walks of words in the doubled alphabet and the
//! ballotness test behind the shifted Littlewood-Richardson rule.
//!
//! For a level `i`, the walk reads the subword of `i*` and `(i+1)*` letters
//! left to right, starting at the origin. A primed low letter steps east and
//! an unprimed high letter steps north unconditionally; an unprimed low
//! letter steps east on an axis and south otherwise, and a primed high
//! letter steps north on an axis and west otherwise. A word is ballot when
//! every level's walk ends back on the x-axis.

use alloc::vec::Vec;

use crate::tableau::Letter;

/// Position of a walk, always in the closed first quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WalkState {
    pub x: u32,
    pub y: u32,
}

impl WalkState {
    pub fn origin() -> Self {
        WalkState { x: 0, y: 0 }
    }

    /// On either axis, origin included.
    pub fn on_axis(&self) -> bool {
        self.x == 0 || self.y == 0
    }
}

impl core::fmt::Display for WalkState {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Unit step of a walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    E,
    W,
    N,
    S,
}

impl core::fmt::Display for Direction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let c = match self {
            Direction::E => 'E',
            Direction::W => 'W',
            Direction::N => 'N',
            Direction::S => 'S',
        };
        write!(f, "{c}")
    }
}

/// Role of a letter inside an `i/(i+1)`-walk: value `i` is low, `i+1` high.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepRole {
    LowUnprimed,
    LowPrimed,
    HighUnprimed,
    HighPrimed,
}

/// One letter of the walk together with the step it produced and the state
/// after the step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTrace {
    pub steps: Vec<(Letter, Direction, WalkState)>,
}

impl WalkTrace {
    pub fn end(&self) -> WalkState {
        self.steps.last().map_or(WalkState::origin(), |s| s.2)
    }
}

/// Advances a walk by one letter. The rule is total and never leaves the
/// first quadrant.
pub fn step(state: WalkState, role: StepRole) -> (Direction, WalkState) {
    let dir = match role {
        StepRole::LowPrimed => Direction::E,
        StepRole::HighUnprimed => Direction::N,
        StepRole::LowUnprimed => {
            if state.on_axis() {
                Direction::E
            } else {
                Direction::S
            }
        }
        StepRole::HighPrimed => {
            if state.on_axis() {
                Direction::N
            } else {
                Direction::W
            }
        }
    };
    let next = match dir {
        Direction::E => WalkState {
            x: state.x + 1,
            y: state.y,
        },
        Direction::W => WalkState {
            x: state.x - 1,
            y: state.y,
        },
        Direction::N => WalkState {
            x: state.x,
            y: state.y + 1,
        },
        Direction::S => WalkState {
            x: state.x,
            y: state.y - 1,
        },
    };
    (dir, next)
}

/// The `level/(level+1)` subword: letters of value `level` (low role) or
/// `level+1` (high role), order preserved.
pub fn subword(word: &[Letter], level: u32) -> Vec<(Letter, StepRole)> {
    word.iter()
        .filter_map(|&l| {
            let role = if l.value() == level {
                if l.is_primed() {
                    StepRole::LowPrimed
                } else {
                    StepRole::LowUnprimed
                }
            } else if l.value() == level + 1 {
                if l.is_primed() {
                    StepRole::HighPrimed
                } else {
                    StepRole::HighUnprimed
                }
            } else {
                return None;
            };
            Some((l, role))
        })
        .collect()
}

/// Full trace of the `level/(level+1)`-walk of a word.
pub fn walk(word: &[Letter], level: u32) -> WalkTrace {
    let mut state = WalkState::origin();
    let steps = subword(word, level)
        .into_iter()
        .map(|(letter, role)| {
            let (dir, next) = step(state, role);
            state = next;
            (letter, dir, state)
        })
        .collect();
    WalkTrace { steps }
}

/// Whether every level's walk ends on the x-axis.
///
/// Levels at and above the maximum value present are trivially ballot: their
/// subwords contain only low letters, which never leave the axis.
pub fn is_ballot(word: &[Letter]) -> bool {
    let max = word.iter().map(|l| l.value()).max().unwrap_or(0);
    (1..max).all(|level| walk(word, level).end().y == 0)
}

/// Conservative search prune: a walk at height `y` cannot return to the
/// x-axis with fewer than `y` further steps. Never rejects an extendable
/// prefix.
pub fn prefix_can_return(state: WalkState, remaining_letters: u32) -> bool {
    state.y <= remaining_letters
}
