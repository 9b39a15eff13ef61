//! Explicit coefficient formulas for frayed ribbons with few turns.
//!
//! Each function here evaluates a closed form in O(1) and exists to be
//! cross-checked exhaustively against the generic ballot-tableau counter.
//! The formulas return errors (never silently 0) when the target partition
//! is not strict, so callers cannot query nonexistent basis elements.
//!
//! Parameter conventions for two-turn shapes: `top_width` and `bottom_width`
//! are the lengths of the two long rows, `column_height` counts the cells
//! strictly between them, the size is `top_width + column_height +
//! bottom_width + 1`, and the orientation is normalized so that
//! `bottom_width >= 3` and `top_width >= 2`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::expansion::QExpansion;
use crate::partition::StrictPartition;

fn strict(parts: Vec<u32>) -> Result<StrictPartition> {
    StrictPartition::new(parts.clone()).map_err(|_| Error::NonStrictTarget(format!("{parts:?}")))
}

/// Coefficient of the two-row basis element `(n-2, 2)` in the expansion of
/// any frayed ribbon of size `n` with `turns` turns: always `2 * turns`.
pub fn coeff_n22(n: u32, turns: u32) -> Result<i64> {
    if n < 4 {
        return Err(Error::BadParams(format!("size {n} below the frayed range")));
    }
    strict(vec![n - 2, 2])?;
    Ok(2 * turns as i64)
}

/// Full expansion of a one-turn frayed ribbon of size `n` and column height
/// `h` (the `h = 0` case degenerates to the straight two-row hook shape):
/// one copy of `(n-1, 1)`, two copies of `(n-i, i)` for `i` up to
/// `min(h+1, n-h-2)`, and one copy of `(n-i-1, i, 1)` for `i` up to
/// `min(h, n-h-2)`.
pub fn one_turn_expansion(n: u32, h: u32) -> Result<QExpansion> {
    // A one-turn shape has a long row of n-1-h >= 3 cells.
    if n < 4 || h + 4 > n {
        return Err(Error::BadParams(format!(
            "no one-turn shape of size {n} and height {h}"
        )));
    }
    let m1 = (h + 1).min(n - h - 2);
    let m2 = h.min(n - h - 2);
    let mut out = QExpansion::zero(n);
    out.add_term(strict(vec![n - 1, 1])?, 1)?;
    for i in 2..=m1 {
        out.add_term(strict(vec![n - i, i])?, 2)?;
    }
    for i in 2..=m2 {
        out.add_term(strict(vec![n - i - 1, i, 1])?, 1)?;
    }
    Ok(out)
}

fn check_two_turn_params(n: u32, top_width: u32, bottom_width: u32, height: u32) -> Result<()> {
    if top_width < 2 || bottom_width < 3 {
        return Err(Error::BadParams(format!(
            "two-turn widths must satisfy top >= 2 and bottom >= 3, got {top_width}, {bottom_width}"
        )));
    }
    if top_width + height + bottom_width + 1 != n {
        return Err(Error::BadParams(format!(
            "{top_width} + {height} + {bottom_width} + 1 != {n}"
        )));
    }
    Ok(())
}

/// Height-0 two-turn shapes: coefficient of `(n-k, k)`.
pub fn h0_two_row_coeff(n: u32, top_width: u32, bottom_width: u32, k: u32) -> Result<i64> {
    check_two_turn_params(n, top_width, bottom_width, 0)?;
    if k < 2 {
        return Err(Error::BadParams(format!("k must be at least 2, got {k}")));
    }
    let first = n
        .checked_sub(k)
        .ok_or_else(|| Error::NonStrictTarget(format!("({n}-{k}, {k})")))?;
    strict(vec![first, k])?;
    let m = (top_width + 1).min(bottom_width);
    Ok(if k < m {
        4
    } else if k == m {
        2
    } else {
        0
    })
}

/// Height-0 two-turn shapes: coefficient of the hook `(n-k-1, k, 1)`.
pub fn h0_hook_coeff(n: u32, top_width: u32, bottom_width: u32, k: u32) -> Result<i64> {
    check_two_turn_params(n, top_width, bottom_width, 0)?;
    if k < 2 {
        return Err(Error::BadParams(format!("k must be at least 2, got {k}")));
    }
    let first = n
        .checked_sub(k + 1)
        .ok_or_else(|| Error::NonStrictTarget(format!("({n}-{k}-1, {k}, 1)")))?;
    strict(vec![first, k, 1])?;
    let m = top_width.min(bottom_width);
    Ok(if k < m {
        2
    } else if k == m {
        1
    } else {
        0
    })
}

/// Height-1 two-turn shapes: coefficient of `(n-k, k)`.
pub fn h1_two_row_coeff(n: u32, top_width: u32, bottom_width: u32, k: u32) -> Result<i64> {
    check_two_turn_params(n, top_width, bottom_width, 1)?;
    if k < 3 {
        return Err(Error::BadParams(format!("k must be at least 3, got {k}")));
    }
    let first = n
        .checked_sub(k)
        .ok_or_else(|| Error::NonStrictTarget(format!("({n}-{k}, {k})")))?;
    strict(vec![first, k])?;
    let m = top_width.min(bottom_width - 1);
    Ok(if k <= m {
        8
    } else if k == m + 1 {
        if top_width == bottom_width - 1 {
            4
        } else {
            6
        }
    } else if k == m + 2 {
        2
    } else {
        0
    })
}

/// Height-1 two-turn shapes: coefficient of `(n-k-2, k, 2)`.
pub fn h1_k2_coeff(n: u32, top_width: u32, bottom_width: u32, k: u32) -> Result<i64> {
    check_two_turn_params(n, top_width, bottom_width, 1)?;
    if k < 3 {
        return Err(Error::BadParams(format!("k must be at least 3, got {k}")));
    }
    let first = n
        .checked_sub(k + 2)
        .ok_or_else(|| Error::NonStrictTarget(format!("({n}-{k}-2, {k}, 2)")))?;
    strict(vec![first, k, 2])?;
    let m = top_width.min(bottom_width);
    Ok(if k < m {
        4
    } else if k == m {
        2
    } else {
        0
    })
}
