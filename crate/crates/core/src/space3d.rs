//! Boxes in three dimensions and the configuration in which no box can
//! escape.
//!
//! Axes: width along x, depth along y, height along z. Each placed box
//! occupies `[x, x+w) × [y, y+d) × [z, z+h)`.

use std::fmt;

use crate::error::{PackError, Result};
use crate::geometry::span_overlap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxDims {
    width: u32,
    depth: u32,
    height: u32,
}

impl BoxDims {
    pub fn new(width: u32, depth: u32, height: u32) -> Result<Self> {
        for (field, value) in [("width", width), ("depth", depth), ("height", height)] {
            if value == 0 {
                return Err(PackError::InvalidDimension { field, value });
            }
        }
        Ok(Self {
            width,
            depth,
            height,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn height(&self) -> u32 {
        self.height
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Container3 {
    pub dims: BoxDims,
}

impl Container3 {
    pub fn new(width: u32, depth: u32, height: u32) -> Result<Self> {
        Ok(Self {
            dims: BoxDims::new(width, depth, height)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlacedBox3 {
    pub dims: BoxDims,
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl PlacedBox3 {
    pub fn new(dims: BoxDims, x: u32, y: u32, z: u32) -> Self {
        Self { dims, x, y, z }
    }

    fn span(&self, axis: Axis3) -> (u64, u64) {
        let (start, len) = match axis {
            Axis3::X => (self.x, self.dims.width),
            Axis3::Y => (self.y, self.dims.depth),
            Axis3::Z => (self.z, self.dims.height),
        };
        (u64::from(start), u64::from(start) + u64::from(len))
    }

    fn overlap(&self, other: &PlacedBox3, axis: Axis3) -> u64 {
        span_overlap(self.span(axis), other.span(axis))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Packing3 {
    pub container: Container3,
    pub boxes: Vec<PlacedBox3>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis3 {
    X,
    Y,
    Z,
}

impl Axis3 {
    pub const ALL: [Axis3; 3] = [Axis3::X, Axis3::Y, Axis3::Z];

    fn others(self) -> [Axis3; 2] {
        match self {
            Axis3::X => [Axis3::Y, Axis3::Z],
            Axis3::Y => [Axis3::X, Axis3::Z],
            Axis3::Z => [Axis3::X, Axis3::Y],
        }
    }
}

/// Which positive directions are blocked for a box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blocked3 {
    pub x: bool,
    pub y: bool,
    pub z: bool,
}

impl Blocked3 {
    pub fn is_empty(&self) -> bool {
        !(self.x || self.y || self.z)
    }

    fn set(&mut self, axis: Axis3) {
        match axis {
            Axis3::X => self.x = true,
            Axis3::Y => self.y = true,
            Axis3::Z => self.z = true,
        }
    }
}

impl fmt::Display for Blocked3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [(self.x, "+x"), (self.y, "+y"), (self.z, "+z")]
            .into_iter()
            .filter_map(|(on, name)| on.then_some(name))
            .collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

pub fn overlap_volume(a: &PlacedBox3, b: &PlacedBox3) -> u64 {
    Axis3::ALL.iter().map(|&axis| a.overlap(b, axis)).product()
}

pub fn is_feasible3(p: &Packing3) -> bool {
    let c = &p.container.dims;
    let inside = |b: &PlacedBox3| {
        b.span(Axis3::X).1 <= u64::from(c.width)
            && b.span(Axis3::Y).1 <= u64::from(c.depth)
            && b.span(Axis3::Z).1 <= u64::from(c.height)
    };
    p.boxes.iter().enumerate().all(|(k, a)| {
        inside(a) && p.boxes[k + 1..].iter().all(|b| overlap_volume(a, b) == 0)
    })
}

/// Whether `j` blocks `i` from moving along the positive `axis`: the other
/// two intervals overlap with positive length and `j` starts at or beyond
/// `i`'s far face.
pub fn blocks(j: &PlacedBox3, i: &PlacedBox3, axis: Axis3) -> bool {
    axis.others().iter().all(|&o| j.overlap(i, o) > 0) && j.span(axis).0 >= i.span(axis).1
}

/// Borders are ignored.
///
/// # Panics
///
/// If `index` is out of range.
pub fn blocked_directions3(index: usize, p: &Packing3) -> Blocked3 {
    let me = &p.boxes[index];
    let mut out = Blocked3::default();
    for (j, other) in p.boxes.iter().enumerate() {
        if j == index {
            continue;
        }
        for axis in Axis3::ALL {
            if blocks(other, me, axis) {
                out.set(axis);
            }
        }
    }
    out
}

/// Every `(blocker, axis)` pair stopping box `index`.
pub fn blockers3(index: usize, p: &Packing3) -> Vec<(usize, Axis3)> {
    let me = &p.boxes[index];
    let mut out = Vec::new();
    for (j, other) in p.boxes.iter().enumerate() {
        if j == index {
            continue;
        }
        for axis in Axis3::ALL {
            if blocks(other, me, axis) {
                out.push((j, axis));
            }
        }
    }
    out
}

/// A box free to move in all three positive directions, if there is one.
pub fn find_escaper3(p: &Packing3) -> Option<usize> {
    (0..p.boxes.len()).find(|&i| blocked_directions3(i, p).is_empty())
}

/// Four boxes in a 3×2×3 container where every box is blocked in at least
/// one positive direction.
pub fn table1_packing() -> Packing3 {
    // (x, y, z, width, depth, height)
    const ROWS: [(u32, u32, u32, u32, u32, u32); 4] = [
        (2, 0, 0, 1, 2, 1),
        (0, 1, 1, 3, 1, 1),
        (0, 0, 2, 1, 2, 1),
        (1, 0, 0, 1, 1, 3),
    ];
    let boxes = ROWS
        .iter()
        .map(|&(x, y, z, w, d, h)| {
            PlacedBox3::new(BoxDims::new(w, d, h).expect("positive"), x, y, z)
        })
        .collect();
    Packing3 {
        container: Container3::new(3, 2, 3).expect("positive"),
        boxes,
    }
}
