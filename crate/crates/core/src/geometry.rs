//! Integral rectangle geometry.
//!
//! Every placed rectangle occupies the half-open box `[x, x+w) × [y, y+h)`
//! on the integer grid, so rectangles that only share an edge or a corner
//! have zero overlap area. All arithmetic is exact; intermediate sums are
//! carried in `u64` so that coordinates near `u32::MAX` cannot overflow.

use crate::error::{PackError, Result};

/// Width and height of an unplaced rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectDims {
    width: u32,
    height: u32,
}

impl RectDims {
    pub fn new(width: u32, height: u32) -> Result<Self> {
        check_positive("width", width)?;
        check_positive("height", height)?;
        Ok(Self { width, height })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn area(&self) -> u64 {
        u64::from(self.width) * u64::from(self.height)
    }

    pub fn perimeter(&self) -> u64 {
        2 * (u64::from(self.width) + u64::from(self.height))
    }

    pub fn is_square(&self) -> bool {
        self.width == self.height
    }

    /// Effective `(width, height)` in the given orientation.
    pub fn oriented(&self, rotated: bool) -> (u32, u32) {
        if rotated {
            (self.height, self.width)
        } else {
            (self.width, self.height)
        }
    }

    /// Orientations worth trying: a square has only one distinct placement.
    pub fn orientations(&self) -> &'static [bool] {
        if self.is_square() {
            &[false]
        } else {
            &[false, true]
        }
    }
}

/// The container every rectangle must fit inside, anchored at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Container {
    width: u32,
    height: u32,
}

impl Container {
    pub fn new(width: u32, height: u32) -> Result<Self> {
        check_positive("width", width)?;
        check_positive("height", height)?;
        Ok(Self { width, height })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn area(&self) -> u64 {
        u64::from(self.width) * u64::from(self.height)
    }

    pub fn contains(&self, r: &PlacedRect) -> bool {
        r.right() <= u64::from(self.width) && r.top() <= u64::from(self.height)
    }
}

fn check_positive(field: &'static str, value: u32) -> Result<()> {
    if value == 0 {
        Err(PackError::InvalidDimension { field, value })
    } else {
        Ok(())
    }
}

/// Bottom-left corner point and orientation of one rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Placement {
    pub x: u32,
    pub y: u32,
    /// Vertically placed: the effective width is the rectangle's height.
    pub rotated: bool,
}

impl Placement {
    pub fn new(x: u32, y: u32, rotated: bool) -> Self {
        Self { x, y, rotated }
    }

    pub fn at(x: u32, y: u32) -> Self {
        Self::new(x, y, false)
    }
}

/// A rectangle together with its placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlacedRect {
    pub dims: RectDims,
    pub placement: Placement,
}

impl PlacedRect {
    pub fn new(dims: RectDims, placement: Placement) -> Self {
        Self { dims, placement }
    }

    pub fn x(&self) -> u32 {
        self.placement.x
    }

    pub fn y(&self) -> u32 {
        self.placement.y
    }

    pub fn width(&self) -> u32 {
        self.dims.oriented(self.placement.rotated).0
    }

    pub fn height(&self) -> u32 {
        self.dims.oriented(self.placement.rotated).1
    }

    /// Exclusive right edge.
    pub fn right(&self) -> u64 {
        u64::from(self.x()) + u64::from(self.width())
    }

    /// Exclusive top edge.
    pub fn top(&self) -> u64 {
        u64::from(self.y()) + u64::from(self.height())
    }

    pub fn area(&self) -> u64 {
        self.dims.area()
    }

    fn x_span(&self) -> (u64, u64) {
        (u64::from(self.x()), self.right())
    }

    fn y_span(&self) -> (u64, u64) {
        (u64::from(self.y()), self.top())
    }

    /// Length of the common part of the two x-intervals.
    pub fn x_overlap(&self, other: &PlacedRect) -> u64 {
        span_overlap(self.x_span(), other.x_span())
    }

    /// Length of the common part of the two y-intervals.
    pub fn y_overlap(&self, other: &PlacedRect) -> u64 {
        span_overlap(self.y_span(), other.y_span())
    }
}

/// Length of `[a0, a1) ∩ [b0, b1)`.
pub fn span_overlap((a0, a1): (u64, u64), (b0, b1): (u64, u64)) -> u64 {
    a1.min(b1).saturating_sub(a0.max(b0))
}

/// A packing problem: the container and the rectangles to place.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    container: Container,
    rects: Vec<RectDims>,
}

impl Instance {
    pub fn new(container: Container, rects: Vec<RectDims>) -> Self {
        Self { container, rects }
    }

    /// Builds an instance from raw `(width, height)` pairs, validating each.
    pub fn from_dims(width: u32, height: u32, rects: &[(u32, u32)]) -> Result<Self> {
        let container = Container::new(width, height)?;
        let rects = rects
            .iter()
            .map(|&(w, h)| RectDims::new(w, h))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(container, rects))
    }

    pub fn container(&self) -> Container {
        self.container
    }

    pub fn rects(&self) -> &[RectDims] {
        &self.rects
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn total_area(&self) -> u64 {
        self.rects.iter().map(RectDims::area).sum()
    }
}

/// Read access shared by complete and partial packings.
///
/// Indices are positions in the instance's rectangle list; a layout may
/// leave some of them unplaced.
pub trait Layout {
    fn container(&self) -> Container;

    /// Number of rectangles in the underlying instance, placed or not.
    fn capacity(&self) -> usize;

    fn get(&self, index: usize) -> Option<PlacedRect>;

    fn placed(&self) -> Vec<(usize, PlacedRect)> {
        (0..self.capacity())
            .filter_map(|i| self.get(i).map(|r| (i, r)))
            .collect()
    }

    /// # Panics
    ///
    /// If `index` is not placed.
    fn rect(&self, index: usize) -> PlacedRect {
        self.get(index)
            .unwrap_or_else(|| panic!("rectangle {index} is not placed"))
    }
}

/// A complete assignment of placements to an instance's rectangles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Packing {
    instance: Instance,
    placements: Vec<Placement>,
}

impl Packing {
    pub fn new(instance: Instance, placements: Vec<Placement>) -> Result<Self> {
        if placements.len() != instance.len() {
            return Err(PackError::LengthMismatch {
                expected: instance.len(),
                found: placements.len(),
            });
        }
        Ok(Self {
            instance,
            placements,
        })
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn rects(&self) -> impl Iterator<Item = PlacedRect> + '_ {
        self.instance
            .rects
            .iter()
            .zip(&self.placements)
            .map(|(&d, &p)| PlacedRect::new(d, p))
    }

    pub(crate) fn placements_mut(&mut self) -> &mut [Placement] {
        &mut self.placements
    }

    pub fn to_partial(&self) -> PartialPacking {
        PartialPacking {
            instance: self.instance.clone(),
            placements: self.placements.iter().copied().map(Some).collect(),
        }
    }
}

impl Layout for Packing {
    fn container(&self) -> Container {
        self.instance.container
    }

    fn capacity(&self) -> usize {
        self.placements.len()
    }

    fn get(&self, index: usize) -> Option<PlacedRect> {
        let dims = *self.instance.rects.get(index)?;
        Some(PlacedRect::new(dims, self.placements[index]))
    }
}

/// A packing in which only a subset of the rectangles has been placed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialPacking {
    instance: Instance,
    placements: Vec<Option<Placement>>,
}

impl PartialPacking {
    pub fn empty(instance: Instance) -> Self {
        let placements = vec![None; instance.len()];
        Self {
            instance,
            placements,
        }
    }

    pub fn new(instance: Instance, placements: Vec<Option<Placement>>) -> Result<Self> {
        if placements.len() != instance.len() {
            return Err(PackError::LengthMismatch {
                expected: instance.len(),
                found: placements.len(),
            });
        }
        Ok(Self {
            instance,
            placements,
        })
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn placements(&self) -> &[Option<Placement>] {
        &self.placements
    }

    pub fn is_placed(&self, index: usize) -> bool {
        matches!(self.placements.get(index), Some(Some(_)))
    }

    pub fn placed_count(&self) -> usize {
        self.placements.iter().filter(|p| p.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.placements.iter().all(Option::is_some)
    }

    pub(crate) fn set(&mut self, index: usize, placement: Option<Placement>) {
        self.placements[index] = placement;
    }

    /// Converts to a full packing if every rectangle is placed.
    pub fn to_packing(&self) -> Option<Packing> {
        let placements = self.placements.iter().copied().collect::<Option<Vec<_>>>()?;
        Some(Packing {
            instance: self.instance.clone(),
            placements,
        })
    }
}

impl Layout for PartialPacking {
    fn container(&self) -> Container {
        self.instance.container
    }

    fn capacity(&self) -> usize {
        self.placements.len()
    }

    fn get(&self, index: usize) -> Option<PlacedRect> {
        let placement = (*self.placements.get(index)?)?;
        Some(PlacedRect::new(self.instance.rects[index], placement))
    }
}

/// Area shared by two placed rectangles.
pub fn overlap_area(a: &PlacedRect, b: &PlacedRect) -> u64 {
    a.x_overlap(b) * a.y_overlap(b)
}

/// Area of `r` lying outside `[0, W) × [0, H)`.
pub fn outside_area(r: &PlacedRect, c: &Container) -> u64 {
    let inside = span_overlap(r.x_span(), (0, u64::from(c.width())))
        * span_overlap(r.y_span(), (0, u64::from(c.height())));
    r.area() - inside
}

/// Sum of all pairwise overlaps plus the area protruding from the
/// container. Zero exactly when the layout is feasible.
pub fn total_overlap<L: Layout + ?Sized>(p: &L) -> u64 {
    let container = p.container();
    let rects = p.placed();
    let mut total = 0;
    for (k, (_, a)) in rects.iter().enumerate() {
        total += outside_area(a, &container);
        for (_, b) in &rects[k + 1..] {
            total += overlap_area(a, b);
        }
    }
    total
}

pub fn is_feasible<L: Layout + ?Sized>(p: &L) -> bool {
    let container = p.container();
    let rects = p.placed();
    rects.iter().enumerate().all(|(k, (_, a))| {
        container.contains(a) && rects[k + 1..].iter().all(|(_, b)| overlap_area(a, b) == 0)
    })
}

/// Whether `j` is over `i`: moving `i` upwards by some positive distance
/// would make the two overlap.
///
/// The pair is expected not to overlap already; for such pairs the relation
/// holds exactly when the x-intervals share positive length and `j` starts at
/// or above the top of `i`. Overlapping pairs trip a debug assertion.
pub fn is_over(j: &PlacedRect, i: &PlacedRect) -> bool {
    debug_assert_eq!(overlap_area(j, i), 0, "relation queried on overlapping rectangles");
    j.x_overlap(i) > 0 && u64::from(j.y()) >= i.top()
}

/// Whether `j` is on the right of `i`. Mirror of [`is_over`] along x.
pub fn is_right_of(j: &PlacedRect, i: &PlacedRect) -> bool {
    debug_assert_eq!(overlap_area(j, i), 0, "relation queried on overlapping rectangles");
    j.y_overlap(i) > 0 && u64::from(j.x()) >= i.right()
}

/// Directions in which a rectangle can translate arbitrarily far without
/// meeting another rectangle. Container borders are not considered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FreeDirections {
    pub up: bool,
    pub right: bool,
}

impl FreeDirections {
    pub fn both(&self) -> bool {
        self.up && self.right
    }
}

/// # Panics
///
/// If `index` is not placed in `p`.
pub fn free_directions<L: Layout + ?Sized>(index: usize, p: &L) -> FreeDirections {
    let me = p.rect(index);
    let mut free = FreeDirections {
        up: true,
        right: true,
    };
    for (j, other) in p.placed() {
        if j == index {
            continue;
        }
        if is_over(&other, &me) {
            free.up = false;
        }
        if is_right_of(&other, &me) {
            free.right = false;
        }
    }
    free
}

/// `L = Σ (x_i + y_i)` over every placed rectangle.
pub fn l_value<L: Layout + ?Sized>(p: &L) -> u64 {
    p.placed()
        .iter()
        .map(|(_, r)| u64::from(r.x()) + u64::from(r.y()))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(w: u32, h: u32, x: u32, y: u32) -> PlacedRect {
        PlacedRect::new(RectDims::new(w, h).unwrap(), Placement::at(x, y))
    }

    fn packing(w: u32, h: u32, rects: &[(u32, u32, u32, u32)]) -> Packing {
        let dims: Vec<_> = rects.iter().map(|&(rw, rh, _, _)| (rw, rh)).collect();
        let inst = Instance::from_dims(w, h, &dims).unwrap();
        let placements = rects.iter().map(|&(_, _, x, y)| Placement::at(x, y)).collect();
        Packing::new(inst, placements).unwrap()
    }

    #[test]
    fn zero_dimensions_are_rejected() {
        assert!(matches!(
            RectDims::new(0, 3),
            Err(PackError::InvalidDimension { field: "width", .. })
        ));
        assert!(Container::new(4, 0).is_err());
        assert!(Instance::from_dims(4, 4, &[(1, 0)]).is_err());
    }

    #[test]
    fn overlap_area_examples() {
        assert_eq!(overlap_area(&rect(1, 1, 0, 0), &rect(1, 1, 0, 0)), 1);
        assert_eq!(overlap_area(&rect(2, 2, 0, 0), &rect(2, 2, 2, 0)), 0);
        assert_eq!(overlap_area(&rect(3, 2, 0, 0), &rect(2, 2, 2, 1)), 1);
    }

    #[test]
    fn rotation_swaps_extent() {
        let r = PlacedRect::new(RectDims::new(3, 1).unwrap(), Placement::new(0, 0, true));
        assert_eq!((r.width(), r.height()), (1, 3));
        assert_eq!(overlap_area(&r, &rect(1, 1, 0, 2)), 1);
    }

    #[test]
    fn outside_area_examples() {
        let c = Container::new(4, 4).unwrap();
        assert_eq!(outside_area(&rect(2, 2, 0, 0), &c), 0);
        assert_eq!(outside_area(&rect(2, 2, 3, 0), &c), 2);
        assert_eq!(outside_area(&rect(1, 1, 5, 5), &c), 1);
    }

    #[test]
    fn total_overlap_examples() {
        assert_eq!(total_overlap(&packing(4, 4, &[])), 0);
        assert_eq!(total_overlap(&packing(4, 4, &[(2, 2, 0, 0), (2, 2, 1, 1)])), 1);
    }

    #[test]
    fn feasibility_examples() {
        assert!(is_feasible(&packing(4, 4, &[(2, 4, 0, 0), (2, 4, 2, 0)])));
        assert!(!is_feasible(&packing(4, 4, &[(2, 2, 0, 0), (2, 2, 1, 1)])));
        assert!(!is_feasible(&packing(4, 4, &[(1, 1, 4, 0)])));
    }

    #[test]
    fn over_examples() {
        assert!(is_over(&rect(2, 1, 1, 2), &rect(2, 1, 0, 0)));
        assert!(!is_over(&rect(1, 1, 3, 2), &rect(2, 1, 0, 0)));
        assert!(!is_over(&rect(2, 1, 0, 0), &rect(2, 1, 0, 2)));
    }

    #[test]
    fn right_of_examples() {
        assert!(is_right_of(&rect(1, 2, 2, 1), &rect(1, 2, 0, 0)));
        assert!(!is_right_of(&rect(1, 1, 2, 3), &rect(1, 2, 0, 0)));
        assert!(!is_right_of(&rect(1, 2, 0, 0), &rect(1, 2, 2, 0)));
    }

    #[test]
    fn free_directions_examples() {
        let single = packing(4, 4, &[(1, 1, 2, 2)]);
        assert_eq!(
            free_directions(0, &single),
            FreeDirections {
                up: true,
                right: true
            }
        );
        let stack = packing(4, 4, &[(2, 2, 0, 0), (2, 2, 0, 2)]);
        assert_eq!(
            free_directions(0, &stack),
            FreeDirections {
                up: false,
                right: true
            }
        );
        assert!(free_directions(1, &stack).both());
    }

    #[test]
    fn l_value_examples() {
        assert_eq!(l_value(&packing(4, 4, &[(1, 1, 0, 0), (1, 1, 0, 0)])), 0);
        assert_eq!(l_value(&packing(6, 6, &[(1, 1, 0, 0), (1, 1, 2, 3)])), 5);
    }

    #[test]
    fn partial_packing_skips_unplaced() {
        let inst = Instance::from_dims(4, 4, &[(2, 2), (2, 2)]).unwrap();
        let mut p = PartialPacking::empty(inst);
        assert!(p.placed().is_empty());
        p.set(1, Some(Placement::at(1, 1)));
        assert_eq!(p.placed_count(), 1);
        assert!(p.to_packing().is_none());
        assert!(is_feasible(&p));
    }
}
