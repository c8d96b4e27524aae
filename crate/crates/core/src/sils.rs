//! Semi-infinite LS paths: the parabolic affine quotient `(W^J)_af`, the
//! projection `Π^J`, local edges of the semi-infinite Bruhat graph, root
//! operators, translations `T_xi`, the `W_af`-action, `cl`, and the lift of a
//! quantum LS path.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::context::Context;
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::lspath;
use crate::qls::{render_path, QlsPath};
use crate::root_system::{CorootVec, NodeSet, Rat, RootVec, WeightVec};
use crate::weyl::{is_positive_affine_root, AffWeylElt, AffineWeight, WeylElt, WeylGroup};

/// Closed-form membership test for `(W^J)_af`: every `alpha` in `Δ_J^+` has
/// either `<alpha, xi> = 0` and `w alpha > 0`, or `<alpha, xi> = -1` and `w alpha < 0`.
pub fn is_member(group: &WeylGroup, x: &AffWeylElt, j: NodeSet) -> bool {
    let datum = group.datum();
    datum.positive_roots().iter().filter(|a| a.supported_in(j)).all(|a| {
        let k = datum.pair(a, &x.xi);
        let neg = group.sends_negative(x.w, a);
        (k == 0 && !neg) || (k == -1 && neg)
    })
}

/// The defining condition `x beta > 0` for `beta` in `(Δ_J)_af^+`, checked
/// for `beta = ±alpha + n delta` with `n <= n_max`.
pub fn is_member_truncated(group: &WeylGroup, x: &AffWeylElt, j: NodeSet, n_max: i64) -> bool {
    let datum = group.datum();
    for a in datum.positive_roots().iter().filter(|a| a.supported_in(j)) {
        for n in 0..=n_max {
            for root in [a.clone(), -a] {
                if n == 0 && !root.is_positive() {
                    continue;
                }
                let (b, m) = group.aff_act_root(x, &root, n);
                if !is_positive_affine_root(&b, m) {
                    return false;
                }
            }
        }
    }
    true
}

/// Inverse of a small square rational matrix by Gauss-Jordan elimination.
fn invert(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let k = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v = row.clone();
            v.extend((0..k).map(|c| if c == r { Rat::one() } else { Rat::zero() }));
            v
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !a[r][col].is_zero()).expect("invertible Cartan block");
        a.swap(col, pivot);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col];
                let pivot_row = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(pivot_row) {
                    *v -= factor * pv;
                }
            }
        }
    }
    a.into_iter().map(|row| row[k..].to_vec()).collect()
}

/// `Π^J(t_xi) = u t_{xi + xi_1}` with `u` in `W_J` and `xi_1` in `Q^vee_J`.
///
/// The result lies in `(W^J)_af`, so `<alpha_k, xi + xi_1>` is `0` or `-1`
/// for every `k` in `J`. Each such sign pattern determines `xi_1` by a linear
/// solve with the Cartan block of `J`; the pattern must then extend to all of
/// `Δ_J^+` and match the inversion set of some `u` in `W_J`. Exactly one
/// candidate must survive.
pub fn solve_proj_translation(group: &WeylGroup, j: NodeSet, xi: &CorootVec) -> Result<AffWeylElt> {
    let datum = group.datum();
    let nodes: Vec<usize> = j.nodes().collect();
    let k = nodes.len();
    if k == 0 {
        return Ok(AffWeylElt::translation(xi.clone()));
    }
    // M[a][b] = <alpha_a, alpha_b^vee>
    let m: Vec<Vec<Rat>> = nodes
        .iter()
        .map(|&a| nodes.iter().map(|&b| Rat::from(datum.cartan_entry(b, a))).collect())
        .collect();
    let inv = invert(&m);
    let base: Vec<i64> = nodes.iter().map(|&a| datum.pair(&datum.simple_root(a), xi)).collect();
    let roots_j = datum.positive_roots_in(j);
    let sub = group.parabolic_subgroup(j);

    let mut found: Vec<AffWeylElt> = Vec::new();
    for pattern in 0u32..(1 << k) {
        let rhs: Vec<Rat> = (0..k).map(|a| Rat::from(-i64::from(pattern >> a & 1 == 1) - base[a])).collect();
        let coeffs: Vec<Rat> = (0..k).map(|a| (0..k).map(|b| inv[a][b] * rhs[b]).sum()).collect();
        if coeffs.iter().any(|c| !c.is_integer()) {
            continue;
        }
        let mut zeta = xi.clone();
        for (&node, c) in nodes.iter().zip(&coeffs) {
            zeta.0[node - 1] += c.to_integer();
        }
        let pairings: Vec<i64> = roots_j.iter().map(|a| datum.pair(a, &zeta)).collect();
        if pairings.iter().any(|&p| p != 0 && p != -1) {
            continue;
        }
        for &u in &sub {
            let matches = roots_j.iter().zip(&pairings).all(|(a, &p)| group.sends_negative(u, a) == (p == -1));
            if matches {
                found.push(AffWeylElt::new(u, zeta.clone()));
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one candidate")),
        0 => Err(Error::SearchExhausted(format!("no factorization of t{xi} for J = {j}"))),
        _ => Err(Error::UniquenessViolation(format!("{} factorizations of t{xi} for J = {j}", found.len()))),
    }
}

/// A semi-infinite LS path `(x_1, .., x_s; sigma_0, .., sigma_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SilsPath {
    pub dirs: Vec<AffWeylElt>,
    pub times: Vec<Rat>,
}

impl SilsPath {
    pub fn straight(x: AffWeylElt) -> SilsPath {
        SilsPath { dirs: vec![x], times: vec![Rat::zero(), Rat::one()] }
    }

    pub fn initial(&self) -> &AffWeylElt {
        &self.dirs[0]
    }

    pub fn final_dir(&self) -> &AffWeylElt {
        self.dirs.last().expect("nonempty path")
    }
}

/// An edge `x -> s_beta x` of the semi-infinite Bruhat graph, with
/// `beta = alpha + n delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiEdge {
    pub alpha: RootVec,
    pub n: i64,
    pub target: AffWeylElt,
}

/// The crystal `SLS(lambda)` (generated lazily; only finitely many elements
/// are ever materialized).
pub struct SilsCrystal<'a> {
    ctx: &'a Context,
    lambda: WeightVec,
    j: NodeSet,
}

impl<'a> SilsCrystal<'a> {
    pub fn new(ctx: &'a Context, lambda: WeightVec) -> Result<SilsCrystal<'a>> {
        ctx.check_dominant(&lambda)?;
        let j = ctx.stabilizer_nodes(&lambda);
        Ok(SilsCrystal { ctx, lambda, j })
    }

    pub fn context(&self) -> &'a Context {
        self.ctx
    }

    pub fn lambda(&self) -> &WeightVec {
        &self.lambda
    }

    pub fn parabolic(&self) -> NodeSet {
        self.j
    }

    /// `pi_lambda = (e; 0, 1)`.
    pub fn highest(&self) -> SilsPath {
        SilsPath::straight(self.ctx.group().aff_identity())
    }

    /// `pi_lambda^x = (Π^J(x); 0, 1)`.
    pub fn straight(&self, x: &AffWeylElt) -> Result<SilsPath> {
        Ok(SilsPath::straight(self.ctx.proj(x, self.j)?))
    }

    pub fn is_member(&self, x: &AffWeylElt) -> bool {
        is_member(self.ctx.group(), x, self.j)
    }

    /// Edges of `SiB(W^J)_af` leaving `x`; with `sigma` given, only those in
    /// `SiB_sigma(lambda)`.
    pub fn si_neighbors_up(&self, x: &AffWeylElt, sigma: Option<Rat>) -> Vec<SiEdge> {
        let g = self.ctx.group();
        let datum = self.ctx.datum();
        let xl = g.act_weight(x.w, &self.lambda);
        let target_len = g.semi_infinite_length(x) + 1;
        let mut out = Vec::new();
        for pos in datum.positive_roots() {
            let coroot = datum.dual_root(pos).expect("root");
            for (alpha, n) in [(pos.clone(), 0), (-pos, 1)] {
                if let Some(s) = sigma {
                    let c = if n == 0 { datum.pair_weight(&xl, &coroot) } else { -datum.pair_weight(&xl, &coroot) };
                    if !(s * Rat::from(c)).is_integer() {
                        continue;
                    }
                }
                let refl = g.aff_reflection(&alpha, n).expect("root");
                let y = g.aff_mul(&refl, x);
                if g.semi_infinite_length(&y) == target_len && self.is_member(&y) {
                    out.push(SiEdge { alpha, n, target: y });
                }
            }
        }
        out
    }

    /// True when some path of length `ℓ(to) - ℓ(from)` in `SiB_sigma(lambda)`
    /// joins `from` to `to`.
    pub fn si_path_exists(&self, from: &AffWeylElt, to: &AffWeylElt, sigma: Rat) -> bool {
        let g = self.ctx.group();
        let gap = g.semi_infinite_length(to) - g.semi_infinite_length(from);
        if gap <= 0 {
            return false;
        }
        let mut layer: HashSet<AffWeylElt> = HashSet::from([from.clone()]);
        for _ in 0..gap {
            let mut next = HashSet::new();
            for x in &layer {
                for e in self.si_neighbors_up(x, Some(sigma)) {
                    next.insert(e.target);
                }
            }
            if next.is_empty() {
                return false;
            }
            layer = next;
        }
        layer.contains(to)
    }

    pub fn is_valid(&self, pi: &SilsPath) -> bool {
        let s = pi.dirs.len();
        if s == 0 || pi.times.len() != s + 1 {
            return false;
        }
        if !pi.times[0].is_zero() || !pi.times[s].is_one() || pi.times.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if pi.dirs.iter().any(|x| !self.is_member(x)) {
            return false;
        }
        (1..s).all(|u| self.si_path_exists(&pi.dirs[u], &pi.dirs[u - 1], pi.times[u]))
    }

    fn slope(&self, i: usize, x: &AffWeylElt) -> i64 {
        let vl = self.ctx.group().act_weight(x.w, &self.lambda);
        if i == 0 {
            -self.ctx.datum().pair_weight(&vl, self.ctx.datum().theta_coroot())
        } else {
            vl.at(i)
        }
    }

    fn slopes(&self, i: usize, pi: &SilsPath) -> Vec<i64> {
        pi.dirs.iter().map(|x| self.slope(i, x)).collect()
    }

    fn reflect(&self, i: usize) -> impl Fn(&AffWeylElt) -> AffWeylElt + '_ {
        move |x| {
            let y = self.ctx.group().aff_lmul_simple(i, x);
            debug_assert!(self.is_member(&y));
            y
        }
    }

    /// `wt(pi) = sum (sigma_u - sigma_{u-1}) x_u lambda`.
    pub fn wt(&self, pi: &SilsPath) -> AffineWeight {
        let g = self.ctx.group();
        let datum = self.ctx.datum();
        let n = self.ctx.rank();
        let images: Vec<WeightVec> = pi.dirs.iter().map(|x| g.act_weight(x.w, &self.lambda)).collect();
        let finite = WeightVec(
            (0..n)
                .map(|k| {
                    let r = lspath::weighted_sum(&pi.times, images.iter().map(|x| Rat::from(x.0[k])));
                    assert!(r.is_integer(), "weight of a semi-infinite LS path is not integral");
                    r.to_integer()
                })
                .collect(),
        );
        let delta = lspath::weighted_sum(&pi.times, pi.dirs.iter().map(|x| Rat::from(-datum.pair_weight(&self.lambda, &x.xi))));
        assert!(delta.is_integer(), "delta coefficient of a semi-infinite LS path is not integral");
        AffineWeight { finite, delta: delta.to_integer() }
    }

    /// `pi · T_xi`: every direction is multiplied on the right by `Π^J(t_xi)`.
    pub fn translate(&self, pi: &SilsPath, xi: &CorootVec) -> Result<SilsPath> {
        let t = self.ctx.proj_translation(self.j, xi)?;
        let g = self.ctx.group();
        Ok(SilsPath { dirs: pi.dirs.iter().map(|x| g.aff_mul(x, &t)).collect(), times: pi.times.clone() })
    }

    /// `s_i · pi`: `f_i^n pi` if `n = <wt pi, alpha_i^vee> >= 0`, else `e_i^{-n} pi`.
    pub fn simple_act(&self, i: usize, pi: &SilsPath) -> SilsPath {
        let n = self.weight_pairing(i, pi);
        self.apply_n(i, n < 0, n.unsigned_abs() as usize, pi).expect("i-string long enough")
    }

    /// `x · pi`, along a reduced word of `x`.
    pub fn weyl_act(&self, x: &AffWeylElt, pi: &SilsPath) -> SilsPath {
        let word = self.ctx.group().aff_reduced_word(x);
        word.iter().rev().fold(pi.clone(), |acc, &i| self.simple_act(i, &acc))
    }

    /// `cl(x) = ⌊w⌋^J` for `x = w t_xi`.
    pub fn cl_dir(&self, x: &AffWeylElt) -> WeylElt {
        self.ctx.group().min_coset_rep(x.w, self.j)
    }

    /// `cl(pi)`: directions replaced by their classical parts, equal
    /// neighbours merged.
    pub fn cl(&self, pi: &SilsPath) -> QlsPath {
        let dirs: Vec<WeylElt> = pi.dirs.iter().map(|x| self.cl_dir(x)).collect();
        let (dirs, times) = lspath::normalize(dirs, pi.times.clone());
        QlsPath::new(dirs, times)
    }

    /// Translation part of the final direction; `pi · T_{-zeta}` has final
    /// direction in `W^J`.
    pub fn final_translation(&self, pi: &SilsPath) -> CorootVec {
        pi.final_dir().xi.clone()
    }

    /// `pi_eta`, the lift with final direction `(kappa(eta), 0)`:
    /// directions `v_u Π^J(t_{xi_u})` with `xi_s = 0` and
    /// `xi_u = xi_{u+1} + wt^J(v_{u+1} => v_u)`.
    pub fn lift(&self, eta: &QlsPath) -> Result<SilsPath> {
        let graph = self.ctx.qbg(self.j);
        let s = eta.dirs.len();
        let mut xis: Vec<CorootVec> = vec![CorootVec::zero(self.ctx.rank()); s];
        for u in (0..s.saturating_sub(1)).rev() {
            xis[u] = &xis[u + 1] + &graph.wt(eta.dirs[u + 1], eta.dirs[u]);
        }
        let dirs = eta
            .dirs
            .iter()
            .zip(&xis)
            .map(|(&v, xi)| self.ctx.proj(&AffWeylElt::new(v, xi.clone()), self.j))
            .collect::<Result<Vec<_>>>()?;
        Ok(SilsPath { dirs, times: eta.times.clone() })
    }

    /// The delta-coefficient of `wt(pi_eta · T_{wt^J(⌊w⌋ => kappa(eta))})`.
    pub fn deg_via_lift(&self, eta: &QlsPath, w: WeylElt) -> Result<i64> {
        let graph = self.ctx.qbg(self.j);
        let floor = self.ctx.group().min_coset_rep(w, self.j);
        let shift = graph.wt(floor, eta.final_dir());
        let pi = self.translate(&self.lift(eta)?, &shift)?;
        Ok(self.wt(&pi).delta)
    }

    pub fn render(&self, pi: &SilsPath) -> String {
        let g = self.ctx.group();
        render_path(&pi.dirs, &pi.times, |x| g.render_aff(x))
    }
}

impl Crystal for SilsCrystal<'_> {
    type Elt = SilsPath;

    fn rank(&self) -> usize {
        self.ctx.rank()
    }

    fn e(&self, i: usize, b: &SilsPath) -> Option<SilsPath> {
        lspath::raise(&b.dirs, &b.times, &self.slopes(i, b), self.reflect(i)).map(|(dirs, times)| SilsPath { dirs, times })
    }

    fn f(&self, i: usize, b: &SilsPath) -> Option<SilsPath> {
        lspath::lower(&b.dirs, &b.times, &self.slopes(i, b), self.reflect(i)).map(|(dirs, times)| SilsPath { dirs, times })
    }

    fn epsilon(&self, i: usize, b: &SilsPath) -> i64 {
        lspath::string_lengths(&b.times, &self.slopes(i, b)).0
    }

    fn phi(&self, i: usize, b: &SilsPath) -> i64 {
        lspath::string_lengths(&b.times, &self.slopes(i, b)).1
    }
}
