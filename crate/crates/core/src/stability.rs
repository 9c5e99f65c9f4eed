//! Bottom-left stability and compaction.
//!
//! A placed rectangle is bottom-left stable when it cannot translate down or
//! left by any positive distance without leaving the container or
//! overlapping another rectangle. [`compact`] turns any feasible packing into
//! a stable one by sliding rectangles until nothing moves.

use crate::error::{PackError, Result};
use crate::geometry::{is_feasible, l_value, total_overlap, Layout, Packing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlideDirection {
    Down,
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompactionStep {
    pub index: usize,
    pub direction: SlideDirection,
    pub distance: u32,
}

/// Every move made by [`compact`], in order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CompactionTrace {
    pub steps: Vec<CompactionStep>,
    pub initial_l: u64,
    pub final_l: u64,
}

impl CompactionTrace {
    pub fn total_distance(&self) -> u64 {
        self.steps.iter().map(|s| u64::from(s.distance)).sum()
    }

    /// Applies the recorded moves to `p`.
    pub fn replay(&self, p: &Packing) -> Packing {
        let mut out = p.clone();
        for step in &self.steps {
            let pl = &mut out.placements_mut()[step.index];
            match step.direction {
                SlideDirection::Down => pl.y -= step.distance,
                SlideDirection::Left => pl.x -= step.distance,
            }
        }
        out
    }
}

/// Largest `d` such that moving rectangle `index` down by `d` keeps the
/// layout feasible. The layout must already be feasible.
///
/// # Panics
///
/// If `index` is not placed.
pub fn max_down_slide<L: Layout + ?Sized>(index: usize, p: &L) -> u32 {
    let me = p.rect(index);
    let floor = p
        .placed()
        .iter()
        .filter(|&&(j, ref r)| j != index && r.x_overlap(&me) > 0 && r.top() <= u64::from(me.y()))
        .map(|(_, r)| r.top())
        .max()
        .unwrap_or(0);
    (u64::from(me.y()) - floor) as u32
}

/// Largest `d` such that moving rectangle `index` left by `d` keeps the
/// layout feasible.
///
/// # Panics
///
/// If `index` is not placed.
pub fn max_left_slide<L: Layout + ?Sized>(index: usize, p: &L) -> u32 {
    let me = p.rect(index);
    let wall = p
        .placed()
        .iter()
        .filter(|&&(j, ref r)| {
            j != index && r.y_overlap(&me) > 0 && r.right() <= u64::from(me.x())
        })
        .map(|(_, r)| r.right())
        .max()
        .unwrap_or(0);
    (u64::from(me.x()) - wall) as u32
}

pub fn is_bottom_left_stable_rect<L: Layout + ?Sized>(index: usize, p: &L) -> bool {
    max_down_slide(index, p) == 0 && max_left_slide(index, p) == 0
}

/// True when every placed rectangle is bottom-left stable.
pub fn is_bottom_left_stable<L: Layout + ?Sized>(p: &L) -> bool {
    p.placed()
        .iter()
        .all(|&(i, _)| is_bottom_left_stable_rect(i, p))
}

/// Slides rectangles down and left until none can move.
///
/// Each round first drops every rectangle as far as it goes, lowest first,
/// then pushes every rectangle left as far as it goes, leftmost first.
/// Rounds repeat until one makes no move. Orientations never change and no
/// coordinate ever increases, so `L` strictly decreases with each step and
/// the loop terminates.
///
/// The result is a stable packing but not a canonical one: a different
/// sweep order can settle into a different fixpoint.
pub fn compact(p: &Packing) -> Result<(Packing, CompactionTrace)> {
    if !is_feasible(p) {
        return Err(PackError::Infeasible {
            overlap: total_overlap(p),
        });
    }
    let initial_l = l_value(p);
    let mut out = p.clone();
    let mut steps = Vec::new();
    let mut order: Vec<usize> = (0..out.len()).collect();

    loop {
        let before = steps.len();

        order.sort_by_key(|&i| {
            let pl = out.placements()[i];
            (pl.y, pl.x, i)
        });
        for &i in &order {
            let d = max_down_slide(i, &out);
            if d > 0 {
                out.placements_mut()[i].y -= d;
                steps.push(CompactionStep {
                    index: i,
                    direction: SlideDirection::Down,
                    distance: d,
                });
            }
        }

        order.sort_by_key(|&i| {
            let pl = out.placements()[i];
            (pl.x, pl.y, i)
        });
        for &i in &order {
            let d = max_left_slide(i, &out);
            if d > 0 {
                out.placements_mut()[i].x -= d;
                steps.push(CompactionStep {
                    index: i,
                    direction: SlideDirection::Left,
                    distance: d,
                });
            }
        }

        if steps.len() == before {
            break;
        }
    }

    let trace = CompactionTrace {
        steps,
        initial_l,
        final_l: l_value(&out),
    };
    debug_assert_eq!(trace.final_l + trace.total_distance(), trace.initial_l);
    Ok((out, trace))
}
