//! Brute-force reference implementations used to check the solver and the
//! corner enumeration.
//!
//! Nothing here uses corner logic or stability shortcuts; the only shared
//! code is the pairwise overlap test from [`crate::geometry`].

use crate::error::{PackError, Result};
use crate::geometry::{overlap_area, Instance, Layout, Packing, PlacedRect, Placement, RectDims};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Maximum number of candidate placements examined.
    pub max_states: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_states: 100_000_000,
        }
    }
}

/// Finds some feasible packing by trying every integral position and
/// orientation for each rectangle in input order (rows bottom to top, left
/// to right within a row). Returns `Ok(None)` only after the whole space has
/// been exhausted.
pub fn oracle_feasible(inst: &Instance, lim: OracleLimits) -> Result<Option<Packing>> {
    let mut search = Brute {
        inst,
        placed: Vec::with_capacity(inst.len()),
        states: 0,
        limit: lim.max_states.max(1),
    };
    if search.place(0)? {
        let placements = search.placed.iter().map(|r| r.placement).collect();
        Ok(Some(Packing::new(inst.clone(), placements)?))
    } else {
        Ok(None)
    }
}

struct Brute<'a> {
    inst: &'a Instance,
    placed: Vec<PlacedRect>,
    states: u64,
    limit: u64,
}

impl Brute<'_> {
    fn place(&mut self, i: usize) -> Result<bool> {
        if i == self.inst.len() {
            return Ok(true);
        }
        let c = self.inst.container();
        let dims = self.inst.rects()[i];
        for rotated in [false, true] {
            if rotated && dims.is_square() {
                continue;
            }
            let (w, h) = dims.oriented(rotated);
            if w > c.width() || h > c.height() {
                continue;
            }
            for y in 0..=c.height() - h {
                for x in 0..=c.width() - w {
                    self.states += 1;
                    if self.states > self.limit {
                        return Err(PackError::OracleCapacity { limit: self.limit });
                    }
                    let r = PlacedRect::new(dims, Placement::new(x, y, rotated));
                    if self.placed.iter().any(|q| overlap_area(q, &r) > 0) {
                        continue;
                    }
                    self.placed.push(r);
                    if self.place(i + 1)? {
                        return Ok(true);
                    }
                    self.placed.pop();
                }
            }
        }
        Ok(false)
    }
}

/// Every `(x, y, rotated)` where `shape` fits, overlaps nothing and cannot
/// move one unit down or one unit left. Squares are reported unrotated only.
///
/// Scans the whole container, so it is meant for small test layouts.
pub fn oracle_corners<L: Layout + ?Sized>(p: &L, shape: RectDims) -> Vec<(u32, u32, bool)> {
    let c = p.container();
    let placed: Vec<PlacedRect> = p.placed().into_iter().map(|(_, r)| r).collect();
    let free = |r: &PlacedRect| placed.iter().all(|q| overlap_area(q, r) == 0);

    let mut out = Vec::new();
    for rotated in [false, true] {
        if rotated && shape.is_square() {
            continue;
        }
        let (w, h) = shape.oriented(rotated);
        if w > c.width() || h > c.height() {
            continue;
        }
        for y in 0..=c.height() - h {
            for x in 0..=c.width() - w {
                let r = PlacedRect::new(shape, Placement::new(x, y, rotated));
                if !free(&r) {
                    continue;
                }
                let down_blocked =
                    y == 0 || !free(&PlacedRect::new(shape, Placement::new(x, y - 1, rotated)));
                let left_blocked =
                    x == 0 || !free(&PlacedRect::new(shape, Placement::new(x - 1, y, rotated)));
                if down_blocked && left_blocked {
                    out.push((x, y, rotated));
                }
            }
        }
    }
    out.sort_by_key(|&(x, y, rotated)| (y, x, rotated));
    out
}
