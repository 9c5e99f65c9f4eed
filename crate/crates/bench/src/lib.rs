//! Fixed instances for the benchmarks.

use cornerpack::generate::{guillotine, loose_guillotine};
use cornerpack::{Container, Instance, Packing, PartialPacking};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A guillotine tiling of a `side`×`side` square into `n` pieces. Always
/// feasible, and tight, so the solver has no slack to exploit.
pub fn tiling(side: u32, n: usize, seed: u64) -> Instance {
    let c = Container::new(side, side).expect("positive side");
    guillotine(c, n, &mut rng(seed)).expect("n fits").0
}

/// `k² + 1` squares of side 2 in a `(2k+1)`-square box. The area fits but
/// only `k²` squares do, so the search must exhaust every branch.
pub fn crowded_squares(k: u32) -> Instance {
    let rects = vec![(2, 2); (k * k + 1) as usize];
    Instance::from_dims(2 * k + 1, 2 * k + 1, &rects).expect("positive sides")
}

/// A feasible packing with gaps, for compaction.
pub fn loose(side: u32, n: usize, seed: u64) -> Packing {
    let c = Container::new(side, side).expect("positive side");
    loose_guillotine(c, n, &mut rng(seed)).expect("n fits").1
}

/// The stable packing of [`tiling`] with every other rectangle removed.
pub fn half_prefix(side: u32, n: usize, seed: u64) -> PartialPacking {
    let c = Container::new(side, side).expect("positive side");
    let (inst, p) = guillotine(c, n, &mut rng(seed)).expect("n fits");
    let placements = p
        .placements()
        .iter()
        .enumerate()
        .map(|(i, &pl)| (i % 2 == 0).then_some(pl))
        .collect();
    PartialPacking::new(inst, placements).expect("same length")
}
