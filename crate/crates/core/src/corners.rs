//! Bottom-left corners and corner-occupying actions.
//!
//! Whether a spot is a bottom-left corner depends on the shape placed there,
//! so corners are always enumerated for a concrete [`RectDims`].

use std::collections::BTreeSet;

use crate::error::{PackError, Result};
use crate::geometry::{overlap_area, Layout, PartialPacking, PlacedRect, Placement, RectDims};

/// What stops a rectangle sitting at a corner from sliding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Support {
    Border,
    Rect(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Corner {
    pub x: u32,
    pub y: u32,
    pub rotated: bool,
    pub left_support: Support,
    pub bottom_support: Support,
}

impl Corner {
    pub fn placement(&self) -> Placement {
        Placement::new(self.x, self.y, self.rotated)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CornerAction {
    pub rect_index: usize,
    pub corner: Corner,
}

/// All positions where `shape` fits inside the container without overlap
/// and cannot slide down or left. Sorted by `(y, x, rotated)`.
///
/// A stable position has its left edge on the border or on some placed
/// rectangle's right edge, and likewise for its bottom edge, so only those
/// coordinates are tried.
pub fn enumerate_corners<L: Layout + ?Sized>(p: &L, shape: RectDims) -> Vec<Corner> {
    let container = p.container();
    let placed = p.placed();

    let mut xs: Vec<u64> = placed.iter().map(|(_, r)| r.right()).collect();
    xs.push(0);
    xs.sort_unstable();
    xs.dedup();
    let mut ys: Vec<u64> = placed.iter().map(|(_, r)| r.top()).collect();
    ys.push(0);
    ys.sort_unstable();
    ys.dedup();

    let mut corners = Vec::new();
    for &rotated in shape.orientations() {
        let (w, h) = shape.oriented(rotated);
        let max_x = u64::from(container.width()).checked_sub(u64::from(w));
        let max_y = u64::from(container.height()).checked_sub(u64::from(h));
        let (Some(max_x), Some(max_y)) = (max_x, max_y) else {
            continue;
        };
        for &y in ys.iter().take_while(|&&y| y <= max_y) {
            for &x in xs.iter().take_while(|&&x| x <= max_x) {
                let candidate =
                    PlacedRect::new(shape, Placement::new(x as u32, y as u32, rotated));
                if let Some(corner) = classify(&candidate, &placed) {
                    corners.push(corner);
                }
            }
        }
    }
    corners.sort_by_key(|c| (c.y, c.x, c.rotated));
    corners
}

/// Returns the corner at `candidate`'s position if it is overlap-free and
/// blocked both below and to the left.
fn classify(candidate: &PlacedRect, placed: &[(usize, PlacedRect)]) -> Option<Corner> {
    let mut left = (candidate.x() == 0).then_some(Support::Border);
    let mut bottom = (candidate.y() == 0).then_some(Support::Border);
    for &(j, ref r) in placed {
        if overlap_area(candidate, r) > 0 {
            return None;
        }
        if left.is_none() && r.right() == u64::from(candidate.x()) && r.y_overlap(candidate) > 0 {
            left = Some(Support::Rect(j));
        }
        if bottom.is_none() && r.top() == u64::from(candidate.y()) && r.x_overlap(candidate) > 0
        {
            bottom = Some(Support::Rect(j));
        }
    }
    Some(Corner {
        x: candidate.x(),
        y: candidate.y(),
        rotated: candidate.placement.rotated,
        left_support: left?,
        bottom_support: bottom?,
    })
}

/// Places a rectangle onto one of its bottom-left corners.
///
/// The corner must be one [`enumerate_corners`] would currently return for
/// the rectangle. For squares either orientation flag is accepted since both
/// describe the same footprint.
pub fn apply_action(p: &PartialPacking, action: &CornerAction) -> Result<PartialPacking> {
    let index = action.rect_index;
    let len = p.capacity();
    if index >= len {
        return Err(PackError::IndexOutOfRange { index, len });
    }
    if p.is_placed(index) {
        return Err(PackError::AlreadyPlaced { index });
    }
    let shape = p.instance().rects()[index];
    let c = &action.corner;
    let footprint = shape.oriented(c.rotated);
    let valid = enumerate_corners(p, shape)
        .iter()
        .any(|e| e.x == c.x && e.y == c.y && shape.oriented(e.rotated) == footprint);
    if !valid {
        return Err(PackError::StaleCorner {
            index,
            x: c.x,
            y: c.y,
            rotated: c.rotated,
        });
    }
    let mut next = p.clone();
    next.set(index, Some(c.placement()));
    Ok(next)
}

/// Rectangles that touch `index` along a boundary segment of positive
/// length from below or from the left, i.e. the rectangles forming the
/// corner it sits in.
///
/// # Panics
///
/// If `index` is not placed.
pub fn supporting_rects<L: Layout + ?Sized>(p: &L, index: usize) -> BTreeSet<usize> {
    let me = p.rect(index);
    p.placed()
        .into_iter()
        .filter(|&(j, ref r)| {
            j != index
                && ((r.top() == u64::from(me.y()) && r.x_overlap(&me) > 0)
                    || (r.right() == u64::from(me.x()) && r.y_overlap(&me) > 0))
        })
        .map(|(j, _)| j)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{is_feasible, Instance};
    use crate::stability::is_bottom_left_stable_rect;

    fn prefix(w: u32, h: u32, rects: &[(u32, u32, Option<(u32, u32)>)]) -> PartialPacking {
        let dims: Vec<_> = rects.iter().map(|&(rw, rh, _)| (rw, rh)).collect();
        let inst = Instance::from_dims(w, h, &dims).unwrap();
        let placements = rects
            .iter()
            .map(|&(_, _, at)| at.map(|(x, y)| Placement::at(x, y)))
            .collect();
        PartialPacking::new(inst, placements).unwrap()
    }

    fn positions(corners: &[Corner]) -> Vec<(u32, u32, bool)> {
        corners.iter().map(|c| (c.x, c.y, c.rotated)).collect()
    }

    #[test]
    fn empty_container_has_origin_corner_only() {
        let p = prefix(4, 4, &[]);
        let shape = RectDims::new(2, 3).unwrap();
        let corners = enumerate_corners(&p, shape);
        assert_eq!(positions(&corners), vec![(0, 0, false), (0, 0, true)]);
        assert!(corners
            .iter()
            .all(|c| c.left_support == Support::Border && c.bottom_support == Support::Border));
    }

    #[test]
    fn corners_beside_a_square() {
        let p = prefix(4, 4, &[(2, 2, Some((0, 0)))]);
        let corners = enumerate_corners(&p, RectDims::new(2, 2).unwrap());
        assert_eq!(positions(&corners), vec![(2, 0, false), (0, 2, false)]);
        assert_eq!(corners[0].left_support, Support::Rect(0));
        assert_eq!(corners[0].bottom_support, Support::Border);
        assert_eq!(corners[1].bottom_support, Support::Rect(0));
    }

    #[test]
    fn shape_too_big_has_no_corner() {
        let p = prefix(4, 4, &[(4, 4, Some((0, 0)))]);
        assert!(enumerate_corners(&p, RectDims::new(1, 1).unwrap()).is_empty());
        let p = prefix(2, 5, &[]);
        assert_eq!(
            positions(&enumerate_corners(&p, RectDims::new(4, 1).unwrap())),
            vec![(0, 0, true)]
        );
    }

    /// A floor piece, a tower on its left end and a block beside it leave
    /// several distinct bottom-left corners for a unit square.
    #[test]
    fn step_layout_corners() {
        let p = prefix(
            8,
            8,
            &[
                (4, 2, Some((0, 0))),
                (2, 3, Some((0, 2))),
                (3, 4, Some((4, 0))),
                (2, 1, Some((2, 2))),
            ],
        );
        let corners = enumerate_corners(&p, RectDims::new(1, 1).unwrap());
        assert_eq!(
            positions(&corners),
            vec![(7, 0, false), (2, 3, false), (0, 5, false)]
        );
        assert_eq!(corners[1].left_support, Support::Rect(1));
        assert_eq!(corners[1].bottom_support, Support::Rect(3));
    }

    #[test]
    fn apply_action_places_and_rejects_reuse() {
        let p = prefix(4, 4, &[(2, 2, None), (2, 2, None)]);
        let first = enumerate_corners(&p, RectDims::new(2, 2).unwrap())[0];
        let action = CornerAction {
            rect_index: 0,
            corner: first,
        };
        let next = apply_action(&p, &action).unwrap();
        assert_eq!(next.placements()[0], Some(Placement::at(0, 0)));
        assert_eq!(
            apply_action(&next, &action),
            Err(PackError::AlreadyPlaced { index: 0 })
        );

        let corner = enumerate_corners(&next, RectDims::new(2, 2).unwrap())[0];
        let done = apply_action(
            &next,
            &CornerAction {
                rect_index: 1,
                corner,
            },
        )
        .unwrap();
        assert!(is_feasible(&done));
        assert!(is_bottom_left_stable_rect(0, &done));
        assert!(is_bottom_left_stable_rect(1, &done));
    }

    #[test]
    fn apply_action_rejects_stale_corner() {
        let p = prefix(4, 4, &[(2, 2, Some((0, 0))), (2, 2, None)]);
        let stale = Corner {
            x: 0,
            y: 0,
            rotated: false,
            left_support: Support::Border,
            bottom_support: Support::Border,
        };
        assert!(matches!(
            apply_action(
                &p,
                &CornerAction {
                    rect_index: 1,
                    corner: stale
                }
            ),
            Err(PackError::StaleCorner { index: 1, .. })
        ));
    }

    #[test]
    fn supporting_rects_examples() {
        let p = prefix(4, 4, &[(1, 1, Some((0, 0)))]);
        assert!(supporting_rects(&p, 0).is_empty());
        let p = prefix(4, 4, &[(2, 2, Some((0, 0))), (2, 2, Some((2, 0)))]);
        assert_eq!(supporting_rects(&p, 1), BTreeSet::from([0]));
        let p = prefix(
            6,
            6,
            &[(2, 3, Some((0, 0))), (2, 2, Some((2, 0))), (1, 1, Some((4, 4)))],
        );
        assert_eq!(supporting_rects(&p, 1), BTreeSet::from([0]));
    }
}
