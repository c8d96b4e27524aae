//! Values recomputed here from closed formulas that do not touch the library internals.

use std::collections::BTreeMap;

use qlskit::qls::{GradedCharacter, QlsCrystal, DEFAULT_CAP};
use qlskit::root_system::WeightVec;
use qlskit::weyl::WeylElt;
use qlskit::Context;

/// Coefficients of the Gaussian binomial `[m choose k]_t` as a polynomial in `t`.
fn gaussian_binomial(m: usize, k: usize) -> Vec<i64> {
    if k == 0 || k == m {
        return vec![1];
    }
    // [m, k] = [m-1, k-1] + t^k [m-1, k]
    let a = gaussian_binomial(m - 1, k - 1);
    let b = gaussian_binomial(m - 1, k);
    let mut out = vec![0; (a.len()).max(b.len() + k)];
    for (j, c) in a.iter().enumerate() {
        out[j] += c;
    }
    for (j, c) in b.iter().enumerate() {
        out[j + k] += c;
    }
    out
}

#[test]
fn a1_graded_characters_are_gaussian_binomials() {
    let ctx = Context::from_label("A1").unwrap();
    for m in 1..=6usize {
        let c = QlsCrystal::new(&ctx, WeightVec::from_slice(&[m as i64])).unwrap();
        let mut expect = GradedCharacter::default();
        for k in 0..=m {
            for (j, coeff) in gaussian_binomial(m, k).into_iter().enumerate() {
                if coeff != 0 {
                    expect.add_term(WeightVec::from_slice(&[m as i64 - 2 * k as i64]), -(j as i64), coeff);
                }
            }
        }
        assert_eq!(c.gch(WeylElt::IDENTITY, DEFAULT_CAP).unwrap(), expect, "m={m}");
    }
}

#[test]
fn group_orders_and_root_counts() {
    for (label, order, roots) in [("A1", 2, 1), ("A2", 6, 3), ("A3", 24, 6), ("B2", 8, 4), ("C2", 8, 4), ("G2", 12, 6)] {
        let ctx = Context::from_label(label).unwrap();
        assert_eq!(ctx.group().order(), order, "{label}");
        assert_eq!(ctx.datum().positive_roots().len(), roots, "{label}");
    }
}

/// Weights of the orbit of a minuscule weight, with simple reflections
/// written out from the Cartan matrix.
fn minuscule_character(cartan: &[[i64; 2]; 2], lambda: [i64; 2]) -> Vec<[i64; 2]> {
    let mut seen = vec![lambda];
    let mut k = 0;
    while k < seen.len() {
        let mu = seen[k];
        for i in 0..2 {
            let next = [mu[0] - mu[i] * cartan[0][i], mu[1] - mu[i] * cartan[1][i]];
            if !seen.contains(&next) {
                seen.push(next);
            }
        }
        k += 1;
    }
    seen
}

#[test]
fn a2_character_at_q_one_is_a_product_of_minuscule_characters() {
    let cartan = [[2, -1], [-1, 2]];
    let ctx = Context::from_label("A2").unwrap();
    for (a, b) in [(1, 1), (2, 0), (2, 1), (1, 2)] {
        let mut factors = Vec::new();
        factors.extend(std::iter::repeat_n(minuscule_character(&cartan, [1, 0]), a));
        factors.extend(std::iter::repeat_n(minuscule_character(&cartan, [0, 1]), b));
        let mut expect: BTreeMap<WeightVec, i64> = BTreeMap::from([(WeightVec::from_slice(&[0, 0]), 1)]);
        for f in &factors {
            let mut next = BTreeMap::new();
            for (mu, m) in &expect {
                for nu in f {
                    *next.entry(mu + &WeightVec::from_slice(nu)).or_insert(0) += m;
                }
            }
            expect = next;
        }
        let c = QlsCrystal::new(&ctx, WeightVec::from_slice(&[a as i64, b as i64])).unwrap();
        assert_eq!(c.gch(WeylElt::IDENTITY, DEFAULT_CAP).unwrap().at_q_one(), expect, "({a},{b})");
    }
}
