//! Root operators on piecewise-linear paths.
//!
//! A path is a list of directions `d_1, .., d_s` with breakpoints
//! `0 = t_0 < t_1 < .. < t_s = 1`. Only the slope of `H(t) = <path(t), alpha_i^vee>`
//! on each segment and a way to reflect one direction are needed, so the same
//! code drives both quantum LS paths and semi-infinite LS paths.

use num_traits::{One, Zero};

use crate::root_system::Rat;

/// Values of `H` at every breakpoint.
fn breakpoint_heights(times: &[Rat], slopes: &[i64]) -> Vec<Rat> {
    let mut h = Vec::with_capacity(times.len());
    h.push(Rat::zero());
    for (u, &slope) in slopes.iter().enumerate() {
        let prev = h[u];
        h.push(prev + (times[u + 1] - times[u]) * Rat::from(slope));
    }
    h
}

fn integral(x: Rat) -> i64 {
    assert!(x.is_integer(), "local minimum {x} of a root-operator height function is not an integer");
    x.to_integer()
}

/// `(epsilon_i, phi_i) = (-m, H(1) - m)` where `m` is the minimum of `H`.
pub fn string_lengths(times: &[Rat], slopes: &[i64]) -> (i64, i64) {
    let h = breakpoint_heights(times, slopes);
    let m = integral(*h.iter().min().expect("nonempty path"));
    let end = integral(*h.last().expect("nonempty path"));
    (-m, end - m)
}

/// Drops zero-length segments and merges equal adjacent directions.
pub fn normalize<D: Clone + PartialEq>(dirs: Vec<D>, times: Vec<Rat>) -> (Vec<D>, Vec<Rat>) {
    let mut out_dirs: Vec<D> = Vec::with_capacity(dirs.len());
    let mut out_times: Vec<Rat> = vec![times[0]];
    for (u, d) in dirs.into_iter().enumerate() {
        let end = times[u + 1];
        if end == *out_times.last().expect("start time") {
            continue;
        }
        if out_dirs.last() == Some(&d) {
            *out_times.last_mut().expect("start time") = end;
        } else {
            out_dirs.push(d);
            out_times.push(end);
        }
    }
    (out_dirs, out_times)
}

/// The raising operator, or `None` when `epsilon_i = 0`.
pub fn raise<D: Clone + PartialEq>(
    dirs: &[D],
    times: &[Rat],
    slopes: &[i64],
    reflect: impl Fn(&D) -> D,
) -> Option<(Vec<D>, Vec<Rat>)> {
    let h = breakpoint_heights(times, slopes);
    let m = *h.iter().min().expect("nonempty path");
    integral(m);
    if m.is_zero() {
        return None;
    }
    // t1 = sigma_q is the first time H reaches its minimum
    let q = h.iter().position(|&x| x == m).expect("minimum attained");
    let level = m + Rat::one();
    // t0 is the last time before t1 where H equals m + 1; it lies on segment p
    let p = (1..=q).rev().find(|&u| h[u - 1] >= level).expect("height m + 1 crossed before the minimum");
    let t0 = times[p - 1] + (level - h[p - 1]) / Rat::from(slopes[p - 1]);

    let mut new_dirs: Vec<D> = dirs[..p].to_vec();
    new_dirs.extend(dirs[p - 1..q].iter().map(&reflect));
    new_dirs.extend_from_slice(&dirs[q..]);
    let mut new_times: Vec<Rat> = times[..p].to_vec();
    new_times.push(t0);
    new_times.extend_from_slice(&times[p..]);
    Some(normalize(new_dirs, new_times))
}

/// The lowering operator, or `None` when `phi_i = 0`.
pub fn lower<D: Clone + PartialEq>(
    dirs: &[D],
    times: &[Rat],
    slopes: &[i64],
    reflect: impl Fn(&D) -> D,
) -> Option<(Vec<D>, Vec<Rat>)> {
    let h = breakpoint_heights(times, slopes);
    let m = *h.iter().min().expect("nonempty path");
    integral(m);
    let s = dirs.len();
    if h[s] == m {
        return None;
    }
    // t0 = sigma_p is the last time H equals its minimum
    let p = h.iter().rposition(|&x| x == m).expect("minimum attained");
    let level = m + Rat::one();
    // t1 is the first time after t0 where H equals m + 1; it lies on segment q + 1
    let q1 = (p + 1..=s).find(|&u| h[u] >= level).expect("height m + 1 reached after the minimum");
    let t1 = times[q1 - 1] + (level - h[q1 - 1]) / Rat::from(slopes[q1 - 1]);

    let mut new_dirs: Vec<D> = dirs[..p].to_vec();
    new_dirs.extend(dirs[p..q1].iter().map(&reflect));
    new_dirs.extend_from_slice(&dirs[q1 - 1..]);
    let mut new_times: Vec<Rat> = times[..q1].to_vec();
    new_times.push(t1);
    new_times.extend_from_slice(&times[q1..]);
    Some(normalize(new_dirs, new_times))
}

/// `sum_u (t_u - t_{u-1}) value(d_u)` for a linear functional on directions.
pub fn weighted_sum(times: &[Rat], values: impl IntoIterator<Item = Rat>) -> Rat {
    values
        .into_iter()
        .enumerate()
        .map(|(u, v)| (times[u + 1] - times[u]) * v)
        .fold(Rat::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rat {
        Rat::new(a, b)
    }

    // Rank one model: a direction is a sign, the slope is 2 * sign for shape
    // 2 varpi_1, and reflection flips the sign.
    fn slopes(dirs: &[i64]) -> Vec<i64> {
        dirs.iter().map(|d| 2 * d).collect()
    }

    fn slopes4(dirs: &[i64]) -> Vec<i64> {
        dirs.iter().map(|d| 4 * d).collect()
    }

    #[test]
    fn lower_straight_line() {
        assert!(lower(&[-1], &[r(0, 1), r(1, 1)], &slopes(&[-1]), |x| -x).is_none());
        let (d, t) = lower(&[1], &[r(0, 1), r(1, 1)], &slopes(&[1]), |x| -x).unwrap();
        assert_eq!(d, vec![-1, 1]);
        assert_eq!(t, vec![r(0, 1), r(1, 2), r(1, 1)]);
        let (d2, t2) = lower(&d, &t, &slopes(&d), |x| -x).unwrap();
        assert_eq!((d2, t2), (vec![-1], vec![r(0, 1), r(1, 1)]));
    }

    #[test]
    fn raise_inverts_lower() {
        let paths: Vec<(Vec<i64>, Vec<Rat>)> = vec![
            (vec![1], vec![r(0, 1), r(1, 1)]),
            (vec![-1, 1], vec![r(0, 1), r(1, 2), r(1, 1)]),
            (vec![1, -1], vec![r(0, 1), r(1, 2), r(1, 1)]),
            (vec![1, -1, 1], vec![r(0, 1), r(1, 4), r(3, 4), r(1, 1)]),
        ];
        for (d, t) in paths {
            let (eps, phi) = string_lengths(&t, &slopes4(&d));
            let mut cur = (d.clone(), t.clone());
            for k in 0..phi {
                let next = lower(&cur.0, &cur.1, &slopes4(&cur.0), |x| -x).unwrap();
                let back = raise(&next.0, &next.1, &slopes4(&next.0), |x| -x).unwrap();
                assert_eq!(back, cur);
                assert_eq!(string_lengths(&next.1, &slopes4(&next.0)), (eps + k + 1, phi - k - 1));
                cur = next;
            }
            assert!(lower(&cur.0, &cur.1, &slopes4(&cur.0), |x| -x).is_none());
        }
    }

    #[test]
    fn normalization() {
        let (d, t) = normalize(vec![1, 1, 2, 3], vec![r(0, 1), r(1, 3), r(1, 2), r(1, 2), r(1, 1)]);
        assert_eq!(d, vec![1, 3]);
        assert_eq!(t, vec![r(0, 1), r(1, 2), r(1, 1)]);
        let (d, t) = normalize(vec![1, 1, 2, 2, 1], vec![r(0, 1), r(1, 3), r(1, 2), r(2, 3), r(3, 4), r(1, 1)]);
        assert_eq!(d, vec![1, 2, 1]);
        assert_eq!(t, vec![r(0, 1), r(1, 2), r(3, 4), r(1, 1)]);
    }
}
