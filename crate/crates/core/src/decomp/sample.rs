//! Reproducible random elements of a connected crystal component.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crystal::{Crystal, Op};

/// Applies up to `steps` uniformly chosen defined operators to `start`.
pub fn random_walk<C: Crystal, R: Rng>(c: &C, start: &C::Elt, steps: usize, rng: &mut R) -> C::Elt {
    let ops = Op::all(c.rank());
    let mut cur = start.clone();
    for _ in 0..steps {
        let moves: Vec<C::Elt> = ops.iter().filter_map(|op| op.apply(c, &cur)).collect();
        match moves.choose(rng) {
            Some(next) => cur = next.clone(),
            None => break,
        }
    }
    cur
}

/// `count` random-walk samples of lengths `0..=max_steps`, determined by `seed`.
pub fn sample_component<C: Crystal>(c: &C, start: &C::Elt, count: usize, max_steps: usize, seed: u64) -> Vec<C::Elt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let steps = rng.gen_range(0..=max_steps);
            random_walk(c, start, steps, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;
    use crate::root_system::WeightVec;
    use crate::sils::SilsCrystal;

    #[test]
    fn samples_are_reproducible_and_valid() {
        let ctx = Context::from_label("A2").unwrap();
        let c = SilsCrystal::new(&ctx, WeightVec::from_slice(&[1, 1])).unwrap();
        let a = sample_component(&c, &c.highest(), 10, 8, 7);
        let b = sample_component(&c, &c.highest(), 10, 8, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|p| c.is_valid(p)));
        assert!(a.iter().any(|p| *p != c.highest()));
    }
}
