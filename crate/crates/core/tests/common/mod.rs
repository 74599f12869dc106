#![allow(dead_code)]

use focal_core::classify::OverallLabel;
use focal_core::examples::{gen_cone, gen_direct_sum, gen_hypersurface, gen_torsal, gen_valid, random_frame, torse_system};
use focal_core::MatrixSystem;
use proptest::prelude::*;

/// A generated system together with the label its generator promises.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub system: MatrixSystem,
    pub label: Option<OverallLabel>,
}

fn fixture(kind: u8, l: usize, r: usize, extra: usize, seed: u64) -> Fixture {
    let (system, label) = match kind {
        0 => (gen_torsal(l, r, 2 + extra, seed).unwrap(), Some(OverallLabel::Torsal)),
        1 => (gen_cone(l, r, 3 + extra, seed).unwrap(), Some(OverallLabel::Cone)),
        2 => (gen_hypersurface(l + 1, r, seed).unwrap(), Some(OverallLabel::Hypersurface)),
        3 => {
            let parts = [torse_system(l + 1, 1).unwrap(), gen_hypersurface(l + 1, r, seed).unwrap()];
            let sum = gen_direct_sum(&parts).unwrap();
            let frame = random_frame(sum.l(), sum.r(), sum.codim(), seed);
            (frame.apply(&sum).unwrap(), Some(OverallLabel::Reducible))
        }
        _ => (gen_valid(l, r, 1 + extra, seed).unwrap(), None),
    };
    Fixture { system, label }
}

/// Valid systems from every generator, with small shapes.
pub fn fixtures() -> impl Strategy<Value = Fixture> {
    (0u8..5, 1usize..=2, 2usize..=3, 0usize..=1, 0u64..1000)
        .prop_map(|(kind, l, r, extra, seed)| fixture(kind, l, r, extra, seed))
}

/// Generators with a known label only.
pub fn labelled() -> impl Strategy<Value = Fixture> {
    (0u8..4, 1usize..=2, 2usize..=3, 0usize..=1, 0u64..1000)
        .prop_map(|(kind, l, r, extra, seed)| fixture(kind, l, r, extra, seed))
}
