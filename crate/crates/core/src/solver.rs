//! Exact feasibility search over corner-occupying actions.
//!
//! Every move places one unplaced rectangle onto a bottom-left corner of the
//! current partial packing. If any feasible packing exists, compacting it and
//! decomposing it yields such a move sequence, so exhausting the tree proves
//! infeasibility.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use crate::corners::enumerate_corners;
use crate::geometry::{
    is_feasible, is_over, is_right_of, Instance, Layout, Packing, PartialPacking, PlacedRect,
    RectDims,
};
use crate::stability::is_bottom_left_stable;

/// Order in which unplaced rectangles are tried at each node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RectOrder {
    Input,
    #[default]
    AreaDescending,
    PerimeterDescending,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Only accept a placement if no placed rectangle is over the new one or
    /// on its right.
    pub enhanced_pruning: bool,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub rect_order: RectOrder,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            enhanced_pruning: true,
            node_limit: None,
            time_limit: None,
            rect_order: RectOrder::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveStatus {
    Feasible,
    Infeasible,
    /// A node or time limit fired before the search finished.
    Unknown,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveStatus::Feasible => "feasible",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub packing: Option<Packing>,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    AreaExceeded { total: u64, capacity: u64 },
    DoesNotFit { index: usize },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::AreaExceeded { total, capacity } => write!(
                f,
                "total rectangle area {total} exceeds container area {capacity}"
            ),
            RejectReason::DoesNotFit { index } => write!(
                f,
                "rectangle {} fits the container in neither orientation",
                index + 1
            ),
        }
    }
}

/// Cheap necessary conditions. `None` means nothing was proven.
pub fn quick_reject(inst: &Instance) -> Option<RejectReason> {
    let c = inst.container();
    let (short, long) = (c.width().min(c.height()), c.width().max(c.height()));
    if let Some(index) = inst.rects().iter().position(|r| {
        r.width().min(r.height()) > short || r.width().max(r.height()) > long
    }) {
        return Some(RejectReason::DoesNotFit { index });
    }
    let total = inst.total_area();
    if total > c.area() {
        return Some(RejectReason::AreaExceeded {
            total,
            capacity: c.area(),
        });
    }
    None
}

/// Re-checks a result: a feasible answer must be a feasible, bottom-left
/// stable packing of `inst`. Other statuses carry nothing to check.
pub fn certify(inst: &Instance, r: &SolveResult) -> bool {
    match r.status {
        SolveStatus::Feasible => r.packing.as_ref().is_some_and(|p| {
            p.instance() == inst && is_feasible(p) && is_bottom_left_stable(p)
        }),
        SolveStatus::Infeasible | SolveStatus::Unknown => r.packing.is_none(),
    }
}

/// Decides whether `inst` has a feasible packing.
///
/// Depth-first over (rectangle, corner) pairs: rectangles in `rect_order`
/// with only the first of several identical shapes branching, corners in
/// `(y, x, rotated)` order. The search is deterministic, including its node
/// count.
pub fn solve(inst: &Instance, cfg: &SolverConfig) -> SolveResult {
    let start = Instant::now();
    if quick_reject(inst).is_some() {
        return SolveResult {
            status: SolveStatus::Infeasible,
            packing: None,
            stats: SolveStats {
                elapsed: start.elapsed(),
                ..SolveStats::default()
            },
        };
    }

    let mut search = Search {
        cfg,
        order: branch_order(inst, cfg.rect_order),
        prefix: PartialPacking::empty(inst.clone()),
        stats: SolveStats::default(),
        start,
        aborted: false,
    };
    let found = search.dfs(0);
    search.stats.elapsed = start.elapsed();

    let (status, packing) = if found {
        (SolveStatus::Feasible, search.prefix.to_packing())
    } else if search.aborted {
        (SolveStatus::Unknown, None)
    } else {
        (SolveStatus::Infeasible, None)
    };
    SolveResult {
        status,
        packing,
        stats: search.stats,
    }
}

fn branch_order(inst: &Instance, policy: RectOrder) -> Vec<usize> {
    let rects = inst.rects();
    let mut order: Vec<usize> = (0..rects.len()).collect();
    match policy {
        RectOrder::Input => {}
        RectOrder::AreaDescending => {
            order.sort_by_key(|&i| (std::cmp::Reverse(rects[i].area()), i))
        }
        RectOrder::PerimeterDescending => {
            order.sort_by_key(|&i| (std::cmp::Reverse(rects[i].perimeter()), i))
        }
    }
    order
}

struct Search<'a> {
    cfg: &'a SolverConfig,
    order: Vec<usize>,
    prefix: PartialPacking,
    stats: SolveStats,
    start: Instant,
    aborted: bool,
}

impl Search<'_> {
    fn limit_hit(&self) -> bool {
        if let Some(limit) = self.cfg.node_limit {
            if self.stats.nodes >= limit {
                return true;
            }
        }
        if let Some(limit) = self.cfg.time_limit {
            if self.stats.nodes % 256 == 0 && self.start.elapsed() >= limit {
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        if self.limit_hit() {
            self.aborted = true;
            return false;
        }
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);

        let placed = self.prefix.placed();
        let mut tried: HashSet<RectDims> = HashSet::new();
        for k in 0..self.order.len() {
            let i = self.order[k];
            if self.prefix.is_placed(i) {
                continue;
            }
            let shape = self.prefix.instance().rects()[i];
            // Identical unplaced rectangles are interchangeable.
            if !tried.insert(shape) {
                continue;
            }
            for corner in enumerate_corners(&self.prefix, shape) {
                let candidate = PlacedRect::new(shape, corner.placement());
                if self.cfg.enhanced_pruning && is_blocked(&candidate, &placed) {
                    continue;
                }
                self.prefix.set(i, Some(corner.placement()));
                if self.dfs(depth + 1) {
                    return true;
                }
                self.prefix.set(i, None);
                if self.aborted {
                    return false;
                }
            }
        }
        false
    }
}

fn is_blocked(candidate: &PlacedRect, placed: &[(usize, PlacedRect)]) -> bool {
    placed
        .iter()
        .any(|(_, r)| is_over(r, candidate) || is_right_of(r, candidate))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(w: u32, h: u32, rects: &[(u32, u32)]) -> Instance {
        Instance::from_dims(w, h, rects).unwrap()
    }

    #[test]
    fn perfect_split_is_feasible() {
        let i = inst(4, 4, &[(2, 4), (2, 4)]);
        let r = solve(&i, &SolverConfig::default());
        assert_eq!(r.status, SolveStatus::Feasible);
        assert!(certify(&i, &r));
    }

    #[test]
    fn two_squares_in_three_by_three_is_infeasible() {
        let i = inst(3, 3, &[(2, 2), (2, 2)]);
        assert_eq!(quick_reject(&i), None);
        for enhanced_pruning in [true, false] {
            let cfg = SolverConfig {
                enhanced_pruning,
                ..SolverConfig::default()
            };
            let r = solve(&i, &cfg);
            assert_eq!(r.status, SolveStatus::Infeasible);
            assert!(r.packing.is_none());
        }
    }

    #[test]
    fn dominoes_in_two_by_two() {
        let i = inst(2, 2, &[(2, 1), (2, 1)]);
        let r = solve(&i, &SolverConfig::default());
        assert_eq!(r.status, SolveStatus::Feasible);
        assert!(certify(&i, &r));
    }

    #[test]
    fn rotation_is_required() {
        let i = inst(2, 3, &[(3, 1), (3, 1)]);
        let r = solve(&i, &SolverConfig::default());
        assert_eq!(r.status, SolveStatus::Feasible);
        let p = r.packing.unwrap();
        assert!(p.placements().iter().all(|pl| pl.rotated));
    }

    #[test]
    fn quick_reject_examples() {
        let area = inst(4, 4, &[(4, 4), (1, 1)]);
        assert_eq!(
            quick_reject(&area),
            Some(RejectReason::AreaExceeded {
                total: 17,
                capacity: 16
            })
        );
        assert_eq!(
            quick_reject(&inst(4, 4, &[(5, 1)])),
            Some(RejectReason::DoesNotFit { index: 0 })
        );
        assert_eq!(quick_reject(&inst(2, 5, &[(4, 1)])), None);
    }

    #[test]
    fn node_limit_gives_unknown() {
        let i = inst(7, 7, &[(2, 3); 8]);
        let cfg = SolverConfig {
            node_limit: Some(3),
            ..SolverConfig::default()
        };
        let r = solve(&i, &cfg);
        assert_eq!(r.status, SolveStatus::Unknown);
        assert!(r.stats.nodes <= 3);
        assert!(certify(&i, &r));
    }

    #[test]
    fn empty_instance_is_feasible() {
        let i = inst(3, 3, &[]);
        let r = solve(&i, &SolverConfig::default());
        assert_eq!(r.status, SolveStatus::Feasible);
        assert_eq!(r.packing.unwrap().len(), 0);
    }

    #[test]
    fn certify_catches_tampering() {
        let i = inst(4, 4, &[(2, 2), (2, 2)]);
        let mut r = solve(&i, &SolverConfig::default());
        assert!(certify(&i, &r));
        let p = r.packing.take().unwrap();
        let mut placements = p.placements().to_vec();
        placements[1] = placements[0];
        r.packing = Some(Packing::new(i.clone(), placements).unwrap());
        assert!(!certify(&i, &r));
    }

    #[test]
    fn repeated_runs_match() {
        let i = inst(6, 5, &[(3, 2), (2, 2), (1, 3), (3, 3), (2, 1)]);
        for order in [
            RectOrder::Input,
            RectOrder::AreaDescending,
            RectOrder::PerimeterDescending,
        ] {
            let cfg = SolverConfig {
                rect_order: order,
                ..SolverConfig::default()
            };
            let a = solve(&i, &cfg);
            let b = solve(&i, &cfg);
            assert_eq!(a.status, b.status);
            assert_eq!(a.packing, b.packing);
            assert_eq!(a.stats.nodes, b.stats.nodes);
            assert_eq!(a.stats.max_depth, b.stats.max_depth);
        }
    }
}
