//! Escape search and placement-order construction.
//!
//! In any feasible packing, with the container borders removed, some
//! rectangle has nothing over it and nothing on its right. Repeatedly taking
//! such a rectangle out empties the container; reversing that removal order
//! gives a sequence in which every rectangle lands on a bottom-left corner
//! formed only by the ones placed before it.

use crate::corners::{apply_action, enumerate_corners, Corner, CornerAction};
use crate::error::{PackError, Result};
use crate::geometry::{
    free_directions, is_feasible, is_over, is_right_of, total_overlap, Layout, Packing,
    PartialPacking, PlacedRect,
};
use crate::stability::is_bottom_left_stable_rect;

/// The rectangles visited by [`find_escaper`], ending at the escaper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapeChain {
    pub visited: Vec<usize>,
}

impl EscapeChain {
    pub fn escaper(&self) -> usize {
        *self.visited.last().expect("chain is never empty")
    }
}

/// Ranking key: top-right corner point compared lexicographically by
/// `(x, y)`, ties broken by index.
fn rank_key(i: usize, r: &PlacedRect) -> (u64, u64, usize) {
    (r.right(), r.top(), i)
}

/// Finds a rectangle that can move both up and right freely.
///
/// Starts from the rectangle whose top-right corner is lexicographically
/// greatest and, while anything is over the current rectangle, steps to the
/// greatest-ranked rectangle among those over it. Every step strictly
/// increases `y`, so the walk ends after at most `n` rectangles.
///
/// Borders are ignored. The layout must be feasible.
pub fn find_escaper<L: Layout + ?Sized>(p: &L) -> Result<EscapeChain> {
    let placed = p.placed();
    let &(start, _) = placed
        .iter()
        .max_by_key(|(i, r)| rank_key(*i, r))
        .ok_or(PackError::EmptyLayout)?;

    let mut visited = vec![start];
    let mut current = start;
    loop {
        let me = p.rect(current);
        let next = placed
            .iter()
            .filter(|(j, r)| *j != current && is_over(r, &me))
            .max_by_key(|(j, r)| rank_key(*j, r));
        match next {
            Some(&(j, _)) => {
                if visited.len() >= placed.len() {
                    return Err(PackError::Contradiction(format!(
                        "escape chain {visited:?} longer than the layout"
                    )));
                }
                visited.push(j);
                current = j;
            }
            None => break,
        }
    }

    let free = free_directions(current, p);
    if !free.both() {
        return Err(PackError::Contradiction(format!(
            "escape chain {visited:?} ended at rectangle {} which is blocked ({free:?})",
            current + 1
        )));
    }
    Ok(EscapeChain { visited })
}

/// Order in which rectangles can be taken out, each one free to move up
/// and right among those still present.
pub fn extraction_order(p: &Packing) -> Result<Vec<usize>> {
    let mut remaining = p.to_partial();
    let mut order = Vec::with_capacity(p.len());
    while remaining.placed_count() > 0 {
        let escaper = find_escaper(&remaining)?.escaper();
        remaining.set(escaper, None);
        order.push(escaper);
    }

    // A later-extracted rectangle is never over or on the right of an
    // earlier one.
    for (k, &earlier) in order.iter().enumerate() {
        let a = p.rect(earlier);
        for &later in &order[k + 1..] {
            let b = p.rect(later);
            if is_over(&b, &a) || is_right_of(&b, &a) {
                return Err(PackError::Contradiction(format!(
                    "rectangle {} extracted after rectangle {} yet blocks it",
                    later + 1,
                    earlier + 1
                )));
            }
        }
    }
    Ok(order)
}

/// A corner-occupying sequence that rebuilds a packing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacementOrder {
    pub order: Vec<usize>,
    pub actions: Vec<CornerAction>,
}

impl PlacementOrder {
    /// Executes the actions from an empty container, validating each one.
    pub fn replay(&self, instance: &crate::geometry::Instance) -> Result<PartialPacking> {
        self.actions
            .iter()
            .try_fold(PartialPacking::empty(instance.clone()), |prefix, a| {
                apply_action(&prefix, a)
            })
    }
}

/// Builds a placement order for a feasible, bottom-left stable packing.
///
/// The order is the reverse of [`extraction_order`]. Each step is checked
/// to be a corner of the prefix built so far, and the newly placed rectangle
/// must have no earlier rectangle over it or on its right. Unstable input is
/// rejected with [`PackError::NotStable`]; run [`crate::stability::compact`]
/// first.
pub fn placement_order(p: &Packing) -> Result<PlacementOrder> {
    if !is_feasible(p) {
        return Err(PackError::Infeasible {
            overlap: total_overlap(p),
        });
    }
    if let Some(index) = (0..p.len()).find(|&i| !is_bottom_left_stable_rect(i, p)) {
        return Err(PackError::NotStable { index });
    }

    let mut order = extraction_order(p)?;
    order.reverse();

    let mut prefix = PartialPacking::empty(p.instance().clone());
    let mut actions = Vec::with_capacity(order.len());
    for &i in &order {
        let target = p.rect(i);
        let corner = find_corner(&prefix, &target).ok_or_else(|| {
            PackError::Contradiction(format!(
                "rectangle {} at ({}, {}) is not on a corner of its prefix",
                i + 1,
                target.x(),
                target.y()
            ))
        })?;
        if let Some((j, _)) = prefix
            .placed()
            .into_iter()
            .find(|(_, r)| is_over(r, &target) || is_right_of(r, &target))
        {
            return Err(PackError::Contradiction(format!(
                "rectangle {} placed after rectangle {} which blocks it",
                i + 1,
                j + 1
            )));
        }
        let action = CornerAction {
            rect_index: i,
            corner,
        };
        prefix = apply_action(&prefix, &action)?;
        actions.push(action);
    }

    if prefix.to_packing().as_ref() != Some(p) {
        return Err(PackError::Contradiction(
            "replayed placement order differs from the source packing".into(),
        ));
    }
    Ok(PlacementOrder { order, actions })
}

/// The corner of `prefix` matching `target`'s footprint, carrying the
/// target's own orientation flag.
fn find_corner(prefix: &PartialPacking, target: &PlacedRect) -> Option<Corner> {
    let footprint = (target.width(), target.height());
    enumerate_corners(prefix, target.dims)
        .into_iter()
        .find(|c| {
            c.x == target.x() && c.y == target.y() && target.dims.oriented(c.rotated) == footprint
        })
        .map(|c| Corner {
            rotated: target.placement.rotated,
            ..c
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Instance, Placement};
    use crate::stability::compact;

    fn packing(w: u32, h: u32, rects: &[(u32, u32, u32, u32)]) -> Packing {
        let dims: Vec<_> = rects.iter().map(|&(rw, rh, _, _)| (rw, rh)).collect();
        let inst = Instance::from_dims(w, h, &dims).unwrap();
        let placements = rects.iter().map(|&(_, _, x, y)| Placement::at(x, y)).collect();
        Packing::new(inst, placements).unwrap()
    }

    #[test]
    fn single_rect_escapes() {
        let p = packing(4, 4, &[(1, 1, 2, 1)]);
        let chain = find_escaper(&p).unwrap();
        assert_eq!(chain.visited, vec![0]);
    }

    #[test]
    fn stack_top_escapes_first() {
        let p = packing(4, 4, &[(2, 2, 0, 0), (2, 2, 0, 2)]);
        assert_eq!(find_escaper(&p).unwrap().escaper(), 1);
        assert_eq!(extraction_order(&p).unwrap(), vec![1, 0]);
    }

    #[test]
    fn empty_layout_has_no_escaper() {
        let p = packing(4, 4, &[]);
        assert_eq!(find_escaper(&p), Err(PackError::EmptyLayout));
        assert!(extraction_order(&p).unwrap().is_empty());
        assert!(placement_order(&p).unwrap().order.is_empty());
    }

    /// Twelve rectangles in a 10×10 container. The tall column on the right
    /// has the greatest top-right corner; three rectangles sit over it and the
    /// chain climbs to the highest-ranked of them, then to the one piece
    /// resting on that.
    #[test]
    fn twelve_rect_chain() {
        let p = packing(
            10,
            10,
            &[
                (3, 2, 0, 0), // 0
                (2, 3, 3, 0), // 1
                (3, 1, 0, 2), // 2
                (2, 2, 5, 0), // 3
                (3, 4, 7, 0), // 4: top-right (10,4), the start
                (2, 2, 0, 3), // 5
                (2, 1, 3, 3), // 6
                (2, 2, 5, 2), // 7
                (1, 3, 7, 4), // 8: over 4, top-right (8,7)
                (1, 2, 8, 4), // 9: over 4, top-right (9,6)
                (4, 2, 5, 7), // 10: over 4, top-right (9,9)
                (2, 1, 5, 9), // 11: over 10 only
            ],
        );
        assert!(is_feasible(&p));
        let chain = find_escaper(&p).unwrap();
        assert_eq!(chain.visited, vec![4, 10, 11]);
        let ys: Vec<_> = chain.visited.iter().map(|&i| p.rect(i).y()).collect();
        assert!(ys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn placement_order_single_rect() {
        let p = packing(4, 4, &[(2, 3, 0, 0)]);
        let po = placement_order(&p).unwrap();
        assert_eq!(po.order, vec![0]);
        assert_eq!(po.actions[0].corner.placement(), Placement::at(0, 0));
    }

    #[test]
    fn placement_order_row() {
        let p = packing(4, 4, &[(2, 2, 0, 0), (2, 2, 2, 0)]);
        let po = placement_order(&p).unwrap();
        assert_eq!(po.order, vec![0, 1]);
        assert_eq!(
            po.actions[1].corner.left_support,
            crate::corners::Support::Rect(0)
        );
        assert_eq!(po.replay(p.instance()).unwrap().to_packing().unwrap(), p);
    }

    #[test]
    fn placement_order_requires_stability() {
        let p = packing(4, 4, &[(1, 1, 1, 1)]);
        assert_eq!(placement_order(&p), Err(PackError::NotStable { index: 0 }));
        let (c, _) = compact(&p).unwrap();
        assert!(placement_order(&c).is_ok());
    }

    #[test]
    fn rotated_square_replays_exactly() {
        let inst = Instance::from_dims(4, 4, &[(2, 2), (3, 1)]).unwrap();
        let p = Packing::new(
            inst,
            vec![Placement::new(0, 0, true), Placement::new(2, 0, true)],
        )
        .unwrap();
        let po = placement_order(&p).unwrap();
        assert_eq!(po.replay(p.instance()).unwrap().to_packing().unwrap(), p);
    }
}
