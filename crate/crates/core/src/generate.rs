//! Random instances that are feasible by construction.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::corners::enumerate_corners;
use crate::error::{PackError, Result};
use crate::geometry::{Container, Instance, Packing, Placement, RectDims};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenMode {
    /// Recursive straight cuts of the container.
    Guillotine,
    /// Rectangles dropped one at a time onto random bottom-left corners.
    CornerWalk,
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    x: u32,
    y: u32,
    w: u32,
    h: u32,
}

pub fn generate<R: Rng + ?Sized>(
    mode: GenMode,
    container: Container,
    count: usize,
    rng: &mut R,
) -> Result<(Instance, Packing)> {
    match mode {
        GenMode::Guillotine => guillotine(container, count, rng),
        GenMode::CornerWalk => corner_walk(container, count, rng),
    }
}

fn impossible(container: Container, count: usize) -> PackError {
    PackError::ImpossibleParameters {
        width: container.width(),
        height: container.height(),
        count,
    }
}

fn cut_cells<R: Rng + ?Sized>(container: Container, count: usize, rng: &mut R) -> Result<Vec<Cell>> {
    if count as u64 > container.area() {
        return Err(impossible(container, count));
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let mut cells = vec![Cell {
        x: 0,
        y: 0,
        w: container.width(),
        h: container.height(),
    }];
    while cells.len() < count {
        let splittable: Vec<usize> = (0..cells.len())
            .filter(|&k| cells[k].w > 1 || cells[k].h > 1)
            .collect();
        // Larger cells are cut more often so the pieces stay comparable.
        let k = *splittable
            .choose_weighted(rng, |&k| u64::from(cells[k].w) * u64::from(cells[k].h))
            .map_err(|_| impossible(container, count))?;
        let c = cells[k];
        let vertical = match (c.w > 1, c.h > 1) {
            (true, true) => rng.gen_ratio(c.w, c.w + c.h),
            (vertical, _) => vertical,
        };
        let (a, b) = if vertical {
            let cut = rng.gen_range(1..c.w);
            (
                Cell { w: cut, ..c },
                Cell {
                    x: c.x + cut,
                    w: c.w - cut,
                    ..c
                },
            )
        } else {
            let cut = rng.gen_range(1..c.h);
            (
                Cell { h: cut, ..c },
                Cell {
                    y: c.y + cut,
                    h: c.h - cut,
                    ..c
                },
            )
        };
        cells[k] = a;
        cells.push(b);
    }
    cells.shuffle(rng);
    Ok(cells)
}

fn assemble<R: Rng + ?Sized>(
    container: Container,
    pieces: impl IntoIterator<Item = Cell>,
    rng: &mut R,
) -> Result<(Instance, Packing)> {
    let mut dims = Vec::new();
    let mut placements = Vec::new();
    for c in pieces {
        let rotated = c.w != c.h && rng.gen_bool(0.5);
        let d = if rotated {
            RectDims::new(c.h, c.w)?
        } else {
            RectDims::new(c.w, c.h)?
        };
        dims.push(d);
        placements.push(Placement::new(c.x, c.y, rotated));
    }
    let inst = Instance::new(container, dims);
    let packing = Packing::new(inst.clone(), placements)?;
    Ok((inst, packing))
}

/// Cuts the container into exactly `count` pieces. The pieces tile the
/// container, and each is rotated at random in the instance listing.
pub fn guillotine<R: Rng + ?Sized>(
    container: Container,
    count: usize,
    rng: &mut R,
) -> Result<(Instance, Packing)> {
    let cells = cut_cells(container, count, rng)?;
    assemble(container, cells, rng)
}

/// Like [`guillotine`], but each piece is shrunk and shifted inside its
/// cell, leaving gaps. The packing is feasible and usually not stable.
pub fn loose_guillotine<R: Rng + ?Sized>(
    container: Container,
    count: usize,
    rng: &mut R,
) -> Result<(Instance, Packing)> {
    let cells = cut_cells(container, count, rng)?;
    let shrunk: Vec<Cell> = cells
        .into_iter()
        .map(|c| {
            let w = rng.gen_range(1..=c.w);
            let h = rng.gen_range(1..=c.h);
            Cell {
                x: c.x + rng.gen_range(0..=c.w - w),
                y: c.y + rng.gen_range(0..=c.h - h),
                w,
                h,
            }
        })
        .collect();
    assemble(container, shrunk, rng)
}

/// Places `count` random shapes one after another, each on a random
/// bottom-left corner of the layout so far. Shapes that no longer fit are
/// redrawn, falling back to a unit square.
pub fn corner_walk<R: Rng + ?Sized>(
    container: Container,
    count: usize,
    rng: &mut R,
) -> Result<(Instance, Packing)> {
    const ATTEMPTS: usize = 16;
    let max_w = (container.width() / 2).max(1);
    let max_h = (container.height() / 2).max(1);

    let mut dims: Vec<RectDims> = Vec::with_capacity(count);
    let mut placements: Vec<Placement> = Vec::with_capacity(count);
    for _ in 0..count {
        let layout = Packing::new(Instance::new(container, dims.clone()), placements.clone())?;
        let mut chosen = None;
        for attempt in 0..=ATTEMPTS {
            let shape = if attempt == ATTEMPTS {
                RectDims::new(1, 1)?
            } else {
                RectDims::new(rng.gen_range(1..=max_w), rng.gen_range(1..=max_h))?
            };
            let corners = enumerate_corners(&layout, shape);
            if let Some(c) = corners.choose(rng) {
                chosen = Some((shape, c.placement()));
                break;
            }
        }
        let (shape, placement) = chosen.ok_or_else(|| impossible(container, count))?;
        dims.push(shape);
        placements.push(placement);
    }
    let inst = Instance::new(container, dims);
    let packing = Packing::new(inst.clone(), placements)?;
    Ok((inst, packing))
}
