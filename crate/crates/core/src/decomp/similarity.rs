//! Similarity maps: `Σ_N` into the `N`-th tensor power and `Σ'_N` into paths
//! of shape `Nλ`.

use num_integer::Integer;
use num_traits::Zero;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::qls::QlsPath;
use crate::root_system::{Rat, WeightVec};
use crate::sils::SilsPath;

/// The least `N` with `N σ ∈ Z` for every turning point of `λ`: the lcm of
/// the positive values `<λ, β^vee>`.
pub fn n_lambda(ctx: &Context, lambda: &WeightVec) -> i64 {
    let datum = ctx.datum();
    datum
        .positive_coroots()
        .iter()
        .map(|c| datum.pair_weight(lambda, c))
        .filter(|&b| b > 0)
        .fold(1, |acc, b| acc.lcm(&b))
}

pub fn check_multiple(ctx: &Context, lambda: &WeightVec, n: i64) -> Result<()> {
    let n_lambda = n_lambda(ctx, lambda);
    if n <= 0 || n % n_lambda != 0 {
        return Err(Error::NotMultiple { n, n_lambda });
    }
    Ok(())
}

/// Multiplicities `N (σ_u - σ_{u-1})` of the segments.
fn repeats(times: &[Rat], n: i64) -> Result<Vec<usize>> {
    times
        .windows(2)
        .map(|w| {
            let k = (w[1] - w[0]) * Rat::from(n);
            if k.is_integer() && k > Rat::zero() {
                Ok(k.to_integer() as usize)
            } else {
                Err(Error::InvalidPath(format!("segment of length {} is not a multiple of 1/{n}", w[1] - w[0])))
            }
        })
        .collect()
}

fn spread<D: Clone, P>(dirs: &[D], times: &[Rat], n: i64, straight: impl Fn(&D) -> P) -> Result<Vec<P>> {
    let mut out = Vec::with_capacity(n as usize);
    for (d, k) in dirs.iter().zip(repeats(times, n)?) {
        for _ in 0..k {
            out.push(straight(d));
        }
    }
    Ok(out)
}

/// `Σ_N(η) = (η^{v_1})^{⊗N(σ_1 - σ_0)} ⊗ .. ⊗ (η^{v_s})^{⊗N(σ_s - σ_{s-1})}`.
pub fn sigma_qls(eta: &QlsPath, n: i64) -> Result<Vec<QlsPath>> {
    spread(&eta.dirs, &eta.times, n, |&v| QlsPath::straight(v))
}

/// `Σ_N(π)` for a semi-infinite LS path.
pub fn sigma_sls(pi: &SilsPath, n: i64) -> Result<Vec<SilsPath>> {
    spread(&pi.dirs, &pi.times, n, |x| SilsPath::straight(x.clone()))
}

/// `Σ'_N`: the same directions and times, read as a path of shape `Nλ`.
pub fn sigma_prime_qls(eta: &QlsPath) -> QlsPath {
    eta.clone()
}

pub fn sigma_prime_sls(pi: &SilsPath) -> SilsPath {
    pi.clone()
}

/// `N λ`.
pub fn scale(lambda: &WeightVec, n: i64) -> WeightVec {
    n * lambda
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_multiples() {
        let a1 = Context::from_label("A1").unwrap();
        assert_eq!(n_lambda(&a1, &WeightVec::from_slice(&[2])), 2);
        let a2 = Context::from_label("A2").unwrap();
        assert_eq!(n_lambda(&a2, &WeightVec::from_slice(&[1, 1])), 2);
        assert_eq!(n_lambda(&a2, &WeightVec::from_slice(&[1, 0])), 1);
        let g2 = Context::from_label("G2").unwrap();
        // with α1 short, <ϖ1, β^vee> takes the values 1, 2 and <ϖ2, β^vee> the values 1, 2, 3
        assert_eq!(n_lambda(&g2, &WeightVec::from_slice(&[1, 0])), 2);
        assert_eq!(n_lambda(&g2, &WeightVec::from_slice(&[0, 1])), 6);
        assert!(matches!(check_multiple(&a2, &WeightVec::from_slice(&[1, 1]), 3), Err(Error::NotMultiple { n: 3, n_lambda: 2 })));
        assert!(check_multiple(&a2, &WeightVec::from_slice(&[1, 1]), 4).is_ok());
    }

    #[test]
    fn spreading_segments() {
        let a1 = Context::from_label("A1").unwrap();
        let g = a1.group();
        let (e, s1) = (g.identity(), g.simple(1));
        let eta = QlsPath::new(vec![e, s1], vec![Rat::from(0), Rat::new(1, 2), Rat::from(1)]);
        assert_eq!(sigma_qls(&eta, 2).unwrap(), vec![QlsPath::straight(e), QlsPath::straight(s1)]);
        assert_eq!(sigma_qls(&eta, 4).unwrap().len(), 4);
        assert!(sigma_qls(&eta, 3).is_err());
    }
}
