//! Exhaustive verification of the decomposition identities.
//!
//! Every verifier enumerates its cases up front, evaluates them in parallel
//! on the current rayon pool and folds the outcomes into a sorted
//! [`Report`].

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use rayon::prelude::*;

use crate::context::Context;
use crate::crystal::{component, Crystal, Op};
use crate::decomp::chain::{iota_zeta, lift_chain};
use crate::decomp::sample::sample_component;
use crate::decomp::similarity::{check_multiple, scale, sigma_prime_qls, sigma_prime_sls, sigma_qls, sigma_sls};
use crate::decomp::theta::ThetaMap;
use crate::decomp::xi::{XiMap, XiStrategy, DEFAULT_DEPTH};
use crate::error::{Error, Result};
use crate::qls::{GradedCharacter, QlsCrystal, QlsPath, DEFAULT_CAP};
use crate::report::{Outcome, Report};
use crate::root_system::{CorootVec, NodeSet, Rat, WeightVec};
use crate::sils::{SilsCrystal, SilsPath};
use crate::weyl::{AffWeylElt, WeylElt};

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub strategy: XiStrategy,
    pub cap: usize,
}

impl Default for Options {
    fn default() -> Options {
        Options { strategy: XiStrategy::LiftedWord, cap: DEFAULT_CAP }
    }
}

impl Options {
    pub fn search(depth: usize) -> Options {
        Options { strategy: XiStrategy::Search { depth }, ..Options::default() }
    }
}

/// Label for a list of Weyl group elements: `all` for the whole group.
pub fn render_ws(ctx: &Context, ws: &[WeylElt]) -> String {
    if ws.len() == ctx.group().order() {
        "all".to_string()
    } else {
        ws.iter().map(|&w| ctx.group().render(w)).collect::<Vec<_>>().join(",")
    }
}

fn collect(outcomes: Vec<Result<Outcome>>) -> Result<Vec<Outcome>> {
    outcomes.into_iter().collect()
}

fn pairs<T: Clone + Send + Sync>(ws: &[WeylElt], items: &[T]) -> Vec<(WeylElt, T)> {
    ws.iter().flat_map(|&w| items.iter().map(move |x| (w, x.clone()))).collect()
}

/// For every `η` in `QLS(λ + μ)` and every `w`:
/// `Ξ(π_η · T_{wt(w => κ(η))}) = π_{η_1} · T_{wt(ι(η_2, w) => κ(η_1)) + ζ(η_2, w)} ⊗ π_{η_2} · T_{wt(w => κ(η_2))}`.
///
/// Each case also checks `(cl ⊗ cl) ∘ Ξ = Θ ∘ cl` on the left-hand side.
pub fn verify_main_theorem(ctx: &Context, lambda: &WeightVec, mu: &WeightVec, ws: &[WeylElt], opts: Options) -> Result<Report> {
    let xi = XiMap::new(ctx, &[lambda.clone(), mu.clone()], opts.cap)?;
    let theta = xi.theta();
    let (whole, sl, sm) = (xi.whole(), &xi.factors()[0], &xi.factors()[1]);
    let full = ctx.full_qbg();
    let g = ctx.group();
    let cases = pairs(ws, theta.domain());
    let outcomes = cases
        .par_iter()
        .map(|(w, eta)| -> Result<Outcome> {
            let mut o = Outcome::default();
            let label = format!("w={} eta={}", g.render(*w), theta.whole().render(eta));
            let pi = whole.translate(&whole.lift(eta)?, &full.wt(*w, eta.final_dir()))?;
            let lhs = xi.apply_with(&pi, opts.strategy).map_err(|e| match e {
                Error::DepthExceeded { depth, .. } => Error::DepthExceeded { depth, target: label.clone() },
                other => other,
            })?;
            let parts = theta.apply(eta)?;
            let iz = iota_zeta(ctx, mu, &parts[1], *w)?;
            let shift1 = &full.wt(iz.iota, parts[0].final_dir()) + &iz.zeta;
            let first = sl.translate(&sl.lift(&parts[0])?, &shift1)?;
            let second = sm.translate(&sm.lift(&parts[1])?, &full.wt(*w, parts[1].final_dir()))?;
            o.check(label.clone(), &lhs, &vec![first, second], |t| xi.render_tensor(t));
            let cl = xi.cl_tensor(&lhs);
            if cl != parts {
                o.fail(format!("{label} (cl square)"), theta.render_tensor(&cl), theta.render_tensor(&parts));
            }
            Ok(o)
        })
        .collect();
    Ok(Report::new("theorem", ctx.datum().cartan_type())
        .with_lambda(lambda)
        .with_mu(mu)
        .with_w(render_ws(ctx, ws))
        .absorb(collect(outcomes)?))
}

/// `deg_{w(λ+μ)}(η) = deg_{ι(η_2, w)λ}(η_1) + deg_{wμ}(η_2) - <λ, ζ(η_2, w)>` for every `η` and `w`.
pub fn verify_degree(ctx: &Context, lambda: &WeightVec, mu: &WeightVec, ws: &[WeylElt], opts: Options) -> Result<Report> {
    let theta = ThetaMap::new(ctx, &[lambda.clone(), mu.clone()], opts.cap)?;
    let (ql, qm) = (&theta.factors()[0], &theta.factors()[1]);
    let g = ctx.group();
    let datum = ctx.datum();
    let cases = pairs(ws, theta.domain());
    let outcomes = cases
        .par_iter()
        .map(|(w, eta)| -> Result<Outcome> {
            let mut o = Outcome::default();
            let parts = theta.apply(eta)?;
            let iz = iota_zeta(ctx, mu, &parts[1], *w)?;
            let lhs = theta.whole().deg_at(eta, *w);
            let rhs = ql.deg_at(&parts[0], iz.iota) + qm.deg_at(&parts[1], *w) - Rat::from(datum.pair_weight(lambda, &iz.zeta));
            o.check(format!("w={} eta={}", g.render(*w), theta.whole().render(eta)), &lhs, &rhs, |r| r.to_string());
            Ok(o)
        })
        .collect();
    Ok(Report::new("degree", datum.cartan_type()).with_lambda(lambda).with_mu(mu).with_w(render_ws(ctx, ws)).absorb(collect(outcomes)?))
}

/// `gch_{w(λ+μ)} QLS(λ+μ) = Σ_{η ∈ QLS(μ)} e^{wt η} q^{deg_{wμ}(η) - <λ, ζ(η, w)>} gch_{ι(η, w)λ} QLS(λ)`.
pub fn verify_corollary(ctx: &Context, lambda: &WeightVec, mu: &WeightVec, ws: &[WeylElt], opts: Options) -> Result<Report> {
    let whole = QlsCrystal::new(ctx, lambda + mu)?;
    let ql = QlsCrystal::new(ctx, lambda.clone())?;
    let qm = QlsCrystal::new(ctx, mu.clone())?;
    let paths_mu = qm.enumerate(opts.cap)?;
    let datum = ctx.datum();
    let g = ctx.group();
    let outcomes = ws
        .par_iter()
        .map(|&w| -> Result<Outcome> {
            let mut o = Outcome::default();
            let lhs = whole.gch(w, opts.cap)?;
            let mut rhs = GradedCharacter::default();
            let mut cache: HashMap<WeylElt, GradedCharacter> = HashMap::new();
            for eta in &paths_mu {
                let iz = iota_zeta(ctx, mu, eta, w)?;
                let q = qm.deg_at(eta, w) - Rat::from(datum.pair_weight(lambda, &iz.zeta));
                if !q.is_integer() {
                    return Err(Error::InvalidPath(format!("q-exponent {q} is not an integer")));
                }
                let key = ql.floor(iz.iota);
                let base = match cache.entry(key) {
                    Entry::Occupied(e) => e.into_mut(),
                    Entry::Vacant(e) => e.insert(ql.gch(key, opts.cap)?),
                };
                rhs.add(&base.times_monomial(&qm.wt(eta), q.to_integer()));
            }
            o.check(format!("w={}", g.render(w)), &lhs, &rhs, |c| c.to_string());
            Ok(o)
        })
        .collect();
    Ok(Report::new("corollary", datum.cartan_type()).with_lambda(lambda).with_mu(mu).with_w(render_ws(ctx, ws)).absorb(collect(outcomes)?))
}

/// `deg_{wλ}(η)` from the quantum Bruhat graph formula against the
/// δ-coefficient of `wt(π_η · T_{wt^J(⌊w⌋ => κ(η))})`, for every `η` and `w`.
pub fn verify_degree_consistency(ctx: &Context, lambda: &WeightVec, ws: &[WeylElt], opts: Options) -> Result<Report> {
    let q = QlsCrystal::new(ctx, lambda.clone())?;
    let s = SilsCrystal::new(ctx, lambda.clone())?;
    let paths = q.enumerate(opts.cap)?;
    let g = ctx.group();
    let cases = pairs(ws, &paths);
    let outcomes = cases
        .par_iter()
        .map(|(w, eta)| -> Result<Outcome> {
            let mut o = Outcome::default();
            let lhs = q.deg_at(eta, *w);
            let rhs = Rat::from(s.deg_via_lift(eta, *w)?);
            o.check(format!("w={} eta={}", g.render(*w), q.render(eta)), &lhs, &rhs, |r| r.to_string());
            Ok(o)
        })
        .collect();
    Ok(Report::new("degree-consistency", ctx.datum().cartan_type())
        .with_lambda(lambda)
        .with_w(render_ws(ctx, ws))
        .absorb(collect(outcomes)?))
}

/// `Ξ_{λ_1, .., λ_n}` evaluated as a chain of two-fold maps:
/// `Ξ_{λ', λ_n}` followed by `Ξ_{λ_1, .., λ_{n-1}} ⊗ id`.
pub struct IteratedXi<'a> {
    /// `steps[k]` splits off factor `k + 1` from the sum of the first `k + 1` shapes.
    steps: Vec<XiMap<'a>>,
}

impl<'a> IteratedXi<'a> {
    pub fn new(ctx: &'a Context, shapes: &[WeightVec], cap: usize) -> Result<IteratedXi<'a>> {
        let mut steps = Vec::new();
        let mut prefix = shapes[0].clone();
        for l in &shapes[1..] {
            steps.push(XiMap::new(ctx, &[prefix.clone(), l.clone()], cap)?);
            prefix = &prefix + l;
        }
        Ok(IteratedXi { steps })
    }

    pub fn apply(&self, pi: &SilsPath, strategy: XiStrategy) -> Result<Vec<SilsPath>> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = pi.clone();
        for step in self.steps.iter().rev() {
            let mut parts = step.apply_with(&cur, strategy)?;
            out.push(parts.pop().expect("two factors"));
            cur = parts.pop().expect("two factors");
        }
        out.push(cur);
        out.reverse();
        Ok(out)
    }
}

/// For every choice of `v_k ∈ W^{J_k}` and every `w`, with
/// `η = Θ^{-1}(η^{v_1} ⊗ .. ⊗ η^{v_n})`:
/// `Ξ(π_η · T_{wt(w => κ(η))}) = (π^{v_1} · T_{ξ_1}) ⊗ .. ⊗ (π^{v_n} · T_{ξ_n})`,
/// where `ξ_k` accumulates the lift chain of the cosets `v_k W_{J_k}`.
/// The left-hand side is computed both directly and through two-fold maps.
pub fn verify_straight_tensor(ctx: &Context, shapes: &[WeightVec], ws: &[WeylElt], opts: Options) -> Result<Report> {
    let xi = XiMap::new(ctx, shapes, opts.cap)?;
    let iterated = IteratedXi::new(ctx, shapes, opts.cap)?;
    let g = ctx.group();
    let full = ctx.full_qbg();
    let js: Vec<NodeSet> = shapes.iter().map(|l| ctx.stabilizer_nodes(l)).collect();
    let mut tuples: Vec<Vec<WeylElt>> = vec![Vec::new()];
    for &j in &js {
        tuples = tuples.into_iter().flat_map(|t| g.min_coset_reps(j).into_iter().map(move |v| [t.clone(), vec![v]].concat())).collect();
    }
    let cases = pairs(ws, &tuples);
    let outcomes = cases
        .par_iter()
        .map(|(w, vs)| -> Result<Outcome> {
            let mut o = Outcome::default();
            let label = format!("w={} v=({})", g.render(*w), vs.iter().map(|&v| g.render(v)).collect::<Vec<_>>().join(","));
            let straights: Vec<QlsPath> = vs.iter().map(|&v| QlsPath::straight(v)).collect();
            let eta = xi.theta().inverse(&straights)?;
            let whole = xi.whole();
            let pi = whole.translate(&whole.lift(&eta)?, &full.wt(*w, eta.final_dir()))?;
            let cosets: Vec<(WeylElt, NodeSet)> = vs.iter().copied().zip(js.iter().copied()).collect();
            let (_, xis) = lift_chain(ctx, &cosets, *w)?;
            let rhs = xi
                .factors()
                .iter()
                .zip(vs)
                .zip(&xis)
                .map(|((c, &v), t)| c.translate(&SilsPath::straight(AffWeylElt::finite(v, ctx.rank())), t))
                .collect::<Result<Vec<_>>>()?;
            let direct = xi.apply_with(&pi, opts.strategy)?;
            o.check(label.clone(), &direct, &rhs, |t| xi.render_tensor(t));
            let composed = iterated.apply(&pi, opts.strategy)?;
            o.check(format!("{label} (two-fold chain)"), &composed, &rhs, |t| xi.render_tensor(t));
            Ok(o)
        })
        .collect();
    let label = shapes.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("+");
    Ok(Report::new("straight-tensor", ctx.datum().cartan_type()).with_lambda(label).with_w(render_ws(ctx, ws)).absorb(collect(outcomes)?))
}

/// `⌊κ(η)⌋^{J_n} = κ(η_n)` for every `η`, where `η_n` is the last factor of `Θ(η)`.
pub fn verify_final_factor(ctx: &Context, shapes: &[WeightVec], opts: Options) -> Result<Report> {
    let theta = ThetaMap::new(ctx, shapes, opts.cap)?;
    let last = theta.factors().last().expect("nonempty");
    let mut o = Outcome::default();
    for eta in theta.domain() {
        let parts = theta.apply(eta)?;
        let lhs = last.floor(eta.final_dir());
        let rhs = parts.last().expect("nonempty").final_dir();
        o.check(theta.whole().render(eta), &lhs, &rhs, |&v| ctx.group().render(v));
    }
    let label = shapes.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("+");
    Ok(Report::new("final-factor", ctx.datum().cartan_type()).with_lambda(label).absorb([o]))
}

/// Crystal axioms, closure, connectivity and the final-direction lemmas on
/// all of `QLS(λ)`, plus the recursion for `π_η` along `f_i`.
pub fn verify_qls_crystal(ctx: &Context, lambda: &WeightVec, opts: Options) -> Result<Report> {
    let q = QlsCrystal::new(ctx, lambda.clone())?;
    let s = SilsCrystal::new(ctx, lambda.clone())?;
    let g = ctx.group();
    let datum = ctx.datum();
    let all = q.enumerate(opts.cap)?;
    let mut head = Outcome::default();
    let comp = component(&q, &q.highest(), opts.cap).ok_or(Error::EnumerationCap { cap: opts.cap })?;
    head.check("connected", &comp.len(), &all.len(), |n| n.to_string());

    let outcomes = all
        .par_iter()
        .map(|eta| -> Result<Outcome> {
            let mut o = Outcome::default();
            let name = q.render(eta);
            let wt = q.wt(eta);
            let kappa = eta.final_dir();
            let pi_eta = s.lift(eta)?;
            for i in 0..=q.rank() {
                let label = format!("{name} i={i}");
                let pairing = if i == 0 { -datum.pair_weight(&wt, datum.theta_coroot()) } else { wt.at(i) };
                let (eps, phi) = (q.epsilon(i, eta), q.phi(i, eta));
                o.check(format!("{label} weight pairing"), &pairing, &(phi - eps), |x| x.to_string());
                if let Some(f) = q.f(i, eta) {
                    o.assert(format!("{label} f closure"), q.is_valid(&f), || q.render(&f));
                    o.check(format!("{label} e f"), &q.e(i, &f), &Some(eta.clone()), |x| x.as_ref().map_or("0".into(), |p| q.render(p)));
                    o.check(format!("{label} eps f"), &q.epsilon(i, &f), &(eps + 1), |x| x.to_string());
                    o.check(format!("{label} phi f"), &q.phi(i, &f), &(phi - 1), |x| x.to_string());
                }
                if let Some(e) = q.e(i, eta) {
                    o.assert(format!("{label} e closure"), q.is_valid(&e), || q.render(&e));
                    o.check(format!("{label} f e"), &q.f(i, &e), &Some(eta.clone()), |x| x.as_ref().map_or("0".into(), |p| q.render(p)));
                }
                let (top, steps) = q.f_max(i, eta);
                o.check(format!("{label} phi counts f"), &(steps as i64), &phi, |x| x.to_string());

                // final directions along the i-string
                let mut cur = eta.clone();
                let mut cur_pi = pi_eta.clone();
                for m in 0..steps {
                    o.check(format!("{label} kappa f^{m}"), &cur.final_dir(), &kappa, |&v| g.render(v));
                    o.check(format!("{label} lift f^{m}"), &s.lift(&cur)?, &cur_pi, |p| s.render(p));
                    cur = q.f(i, &cur).expect("within the string");
                    cur_pi = s.f(i, &cur_pi).ok_or_else(|| Error::InvalidPath(format!("f_{i} undefined on a lift")))?;
                }
                let kl = g.act_weight(kappa, lambda);
                let kpair = if i == 0 { -datum.pair_weight(&kl, datum.theta_coroot()) } else { kl.at(i) };
                let expect = if kpair > 0 { q.floor(g.lmul_tilde(i, kappa)) } else { kappa };
                o.check(format!("{label} kappa f^max"), &top.final_dir(), &expect, |&v| g.render(v));
                if kpair > 0 {
                    o.assert(format!("{label} kappa moves"), expect != kappa, || g.render(expect));
                }
                let expect_pi = if i == 0 && kpair > 0 {
                    let a0 = -datum.theta_coroot();
                    let shift = g.act_coroot(g.inverse(kappa), &a0);
                    s.translate(&cur_pi, &-&shift)?
                } else {
                    cur_pi
                };
                o.check(format!("{label} lift f^max"), &s.lift(&top)?, &expect_pi, |p| s.render(p));
            }
            Ok(o)
        })
        .collect();
    Ok(Report::new("qls-crystal", datum.cartan_type()).with_lambda(lambda).absorb(std::iter::once(head).chain(collect(outcomes)?)))
}

/// Random elements of `SLS_0(λ)`: crystal axioms, closure, compatibility
/// with `cl`, `T_xi`-equivariance, the final-direction lemma and the simple
/// reflection criterion on every direction.
pub fn verify_sls_samples(ctx: &Context, lambda: &WeightVec, count: usize, seed: u64) -> Result<Report> {
    let s = SilsCrystal::new(ctx, lambda.clone())?;
    let q = QlsCrystal::new(ctx, lambda.clone())?;
    let g = ctx.group();
    let datum = ctx.datum();
    let n = ctx.rank();
    let samples = sample_component(&s, &s.highest(), count, 16, seed);
    let translations: Vec<CorootVec> =
        (0..count).map(|k| CorootVec::from_slice(&(0..n).map(|c| ((k * 7 + c * 3) % 5) as i64 - 2).collect::<Vec<_>>())).collect();
    let pairing = |x: &AffWeylElt, i: usize| -> i64 {
        let xl = g.act_weight(x.w, lambda);
        if i == 0 {
            -datum.pair_weight(&xl, datum.theta_coroot())
        } else {
            xl.at(i)
        }
    };
    let outcomes = samples
        .par_iter()
        .zip(translations.par_iter())
        .enumerate()
        .map(|(k, (pi, xi))| -> Result<Outcome> {
            let mut o = Outcome::default();
            let name = format!("#{k} {}", s.render(pi));
            let show = |p: &Option<SilsPath>| p.as_ref().map_or("0".into(), |p| s.render(p));
            let show_q = |p: &Option<QlsPath>| p.as_ref().map_or("0".into(), |p| q.render(p));
            o.assert(format!("{name} valid"), s.is_valid(pi), String::new);
            let cl = s.cl(pi);
            let moved = s.translate(pi, xi)?;
            let wt = s.wt(pi);
            let mut shifted = wt.clone();
            shifted.delta -= datum.pair_weight(lambda, xi);
            o.check(format!("{name} wt T"), &s.wt(&moved), &shifted, |w| format!("{w}"));
            for i in 0..=n {
                let label = format!("{name} i={i}");
                for op in [Op::E(i), Op::F(i)] {
                    let image = op.apply(&s, pi);
                    if let Some(p) = &image {
                        o.assert(format!("{label} {op:?} closure"), s.is_valid(p), || s.render(p));
                        o.check(format!("{label} {op:?} inverse"), &op.inverse().apply(&s, p), &Some(pi.clone()), show);
                    }
                    o.check(format!("{label} {op:?} cl"), &image.as_ref().map(|p| s.cl(p)), &op.apply(&q, &cl), show_q);
                    let lhs = op.apply(&s, &moved);
                    let rhs = image.as_ref().map(|p| s.translate(p, xi)).transpose()?;
                    o.check(format!("{label} {op:?} T"), &lhs, &rhs, show);
                }
                let strings = (s.epsilon(i, pi), s.phi(i, pi));
                o.check(format!("{label} strings cl"), &strings, &(q.epsilon(i, &cl), q.phi(i, &cl)), |x| format!("{x:?}"));
                o.check(format!("{label} strings T"), &(s.epsilon(i, &moved), s.phi(i, &moved)), &strings, |x| format!("{x:?}"));

                let kappa = pi.final_dir().clone();
                let (top, steps) = s.f_max(i, pi);
                let mut cur = pi.clone();
                for m in 0..steps {
                    o.check(format!("{label} kappa f^{m}"), cur.final_dir(), &kappa, |x| g.render_aff(x));
                    cur = s.f(i, &cur).expect("within the string");
                }
                let expect = if pairing(&kappa, i) > 0 { g.aff_lmul_simple(i, &kappa) } else { kappa.clone() };
                o.check(format!("{label} kappa f^max"), top.final_dir(), &expect, |x| g.render_aff(x));

                for x in &pi.dirs {
                    let y = g.aff_lmul_simple(i, x);
                    let p = pairing(x, i);
                    o.check(format!("{label} s_i x membership at {}", g.render_aff(x)), &s.is_member(&y), &(p != 0), |b| b.to_string());
                    if p != 0 {
                        let gap = g.semi_infinite_length(&y) - g.semi_infinite_length(x);
                        o.check(format!("{label} s_i x length at {}", g.render_aff(x)), &gap, &p.signum(), |d| d.to_string());
                    }
                }
            }
            Ok(o)
        })
        .collect();
    Ok(Report::new("sls-samples", datum.cartan_type()).with_lambda(lambda).absorb(collect(outcomes)?))
}

/// The similarity diagrams for `λ + μ` and `N`:
/// `Σ_N = Θ^{(N)} ∘ Σ'_N` on `QLS(λ+μ)`, `Σ_N = Ξ^{(N)} ∘ Σ'_N` on samples of
/// `SLS_0(λ+μ)`, the squares `(Σ_N ⊗ Σ_N) ∘ Θ_{λμ} = Θ_{λμ}^{(N)} ∘ Σ'_N` and
/// `(Σ_N ⊗ Σ_N) ∘ Ξ_{λμ} = Ξ_{λμ}^{(N)} ∘ Σ'_N`, and the intertwining
/// relations `Σ(f_i b) = f_i^N Σ(b)` for both maps.
pub fn verify_similarity(ctx: &Context, lambda: &WeightVec, mu: &WeightVec, n: i64, samples: usize, seed: u64, opts: Options) -> Result<Report> {
    let sum = lambda + mu;
    for l in [lambda, mu, &sum] {
        check_multiple(ctx, l, n)?;
    }
    let copies = |l: &WeightVec| vec![l.clone(); n as usize];
    let split_big: Vec<WeightVec> = [copies(lambda), copies(mu)].concat();

    let theta_pow = ThetaMap::new(ctx, &copies(&sum), opts.cap)?;
    let theta_lm = ThetaMap::new(ctx, &[lambda.clone(), mu.clone()], opts.cap)?;
    let theta_big = ThetaMap::new(ctx, &split_big, opts.cap)?;
    let q = theta_lm.whole();
    let q_big = QlsCrystal::new(ctx, scale(&sum, n))?;
    let q_pow = theta_pow.tensor();

    let mut o = Outcome::default();
    let show_q = |t: &Vec<QlsPath>| theta_pow.render_tensor(t);
    for eta in theta_lm.domain() {
        let name = q.render(eta);
        let prime = sigma_prime_qls(eta);
        o.assert(format!("{name} Σ' valid"), q_big.is_valid(&prime), String::new);
        let sig = sigma_qls(eta, n)?;
        o.check(format!("{name} Σ = Θ^(N) Σ'"), &sig, &theta_pow.apply(&prime)?, show_q);
        let parts = theta_lm.apply(eta)?;
        let lhs = [sigma_qls(&parts[0], n)?, sigma_qls(&parts[1], n)?].concat();
        o.check(format!("{name} (Σ ⊗ Σ) Θ = Θ^(N) Σ'"), &lhs, &theta_big.apply(&prime)?, |t| theta_big.render_tensor(t));
        o.check(format!("{name} wt Σ'"), &q_big.wt(&prime), &scale(&q.wt(eta), n), |w| w.to_string());
        for i in 0..=ctx.rank() {
            o.check(format!("{name} i={i} strings Σ"), &(q_pow.epsilon(i, &sig), q_pow.phi(i, &sig)), &(n * q.epsilon(i, eta), n * q.phi(i, eta)), |x| format!("{x:?}"));
            if let Some(f) = q.f(i, eta) {
                let lhs = Some(sigma_qls(&f, n)?);
                let rhs = q_pow.apply_n(i, false, n as usize, &sig);
                o.check(format!("{name} i={i} Σ f"), &lhs, &rhs, |t| t.as_ref().map_or("0".into(), show_q));
                o.check(format!("{name} i={i} Σ' f"), &Some(sigma_prime_qls(&f)), &q_big.apply_n(i, false, n as usize, &prime), |t| {
                    t.as_ref().map_or("0".into(), |p| q_big.render(p))
                });
            }
        }
    }

    let xi_pow = XiMap::new(ctx, &copies(&sum), opts.cap)?;
    let xi_lm = XiMap::new(ctx, &[lambda.clone(), mu.clone()], opts.cap)?;
    let xi_big = XiMap::new(ctx, &split_big, opts.cap)?;
    let s = xi_lm.whole();
    let s_big = SilsCrystal::new(ctx, scale(&sum, n))?;
    let s_pow = xi_pow.tensor();
    let pis = sample_component(s, &s.highest(), samples, 16, seed);
    let sls_outcomes = pis
        .par_iter()
        .enumerate()
        .map(|(k, pi)| -> Result<Outcome> {
            let mut o = Outcome::default();
            let name = format!("#{k} {}", s.render(pi));
            let prime = sigma_prime_sls(pi);
            let sig = sigma_sls(pi, n)?;
            o.check(format!("{name} Σ = Ξ^(N) Σ'"), &sig, &xi_pow.apply_with(&prime, opts.strategy)?, |t| xi_pow.render_tensor(t));
            let parts = xi_lm.apply_with(pi, opts.strategy)?;
            let lhs = [sigma_sls(&parts[0], n)?, sigma_sls(&parts[1], n)?].concat();
            o.check(format!("{name} (Σ ⊗ Σ) Ξ = Ξ^(N) Σ'"), &lhs, &xi_big.apply_with(&prime, opts.strategy)?, |t| xi_big.render_tensor(t));
            let mut scaled = s.wt(pi);
            scaled.finite = scale(&scaled.finite, n);
            scaled.delta *= n;
            o.check(format!("{name} wt Σ'"), &s_big.wt(&prime), &scaled, |w| w.to_string());
            for i in 0..=ctx.rank() {
                if let Some(f) = s.f(i, pi) {
                    let rhs = s_pow.apply_n(i, false, n as usize, &sig);
                    o.check(format!("{name} i={i} Σ f"), &Some(sigma_sls(&f, n)?), &rhs, |t| t.as_ref().map_or("0".into(), |t| xi_pow.render_tensor(t)));
                    o.check(format!("{name} i={i} Σ' f"), &Some(sigma_prime_sls(&f)), &s_big.apply_n(i, false, n as usize, &prime), |t| {
                        t.as_ref().map_or("0".into(), |p| s_big.render(p))
                    });
                }
            }
            Ok(o)
        })
        .collect();
    Ok(Report::new("diagrams", ctx.datum().cartan_type())
        .with_lambda(lambda)
        .with_mu(mu)
        .absorb(std::iter::once(o).chain(collect(sls_outcomes)?)))
}

/// The associativity square `(id ⊗ Θ_{μν}) ∘ Θ_{λ, μ+ν} = (Θ_{λμ} ⊗ id) ∘ Θ_{λ+μ, ν}`.
pub fn verify_associativity(ctx: &Context, lambda: &WeightVec, mu: &WeightVec, nu: &WeightVec, opts: Options) -> Result<Report> {
    let left = ThetaMap::new(ctx, &[lambda.clone(), mu + nu], opts.cap)?;
    let right = ThetaMap::new(ctx, &[lambda + mu, nu.clone()], opts.cap)?;
    let inner_mn = ThetaMap::new(ctx, &[mu.clone(), nu.clone()], opts.cap)?;
    let inner_lm = ThetaMap::new(ctx, &[lambda.clone(), mu.clone()], opts.cap)?;
    let mut o = Outcome::default();
    for eta in left.domain() {
        let a = left.apply(eta)?;
        let lhs = [vec![a[0].clone()], inner_mn.apply(&a[1])?].concat();
        let b = right.apply(eta)?;
        let rhs = [inner_lm.apply(&b[0])?, vec![b[1].clone()]].concat();
        o.check(left.whole().render(eta), &lhs, &rhs, |t| format!("{t:?}"));
    }
    Ok(Report::new("associativity", ctx.datum().cartan_type()).with_lambda(format!("{lambda}+{mu}+{nu}")).absorb([o]))
}

/// Word search against the lifted-word evaluation of `Ξ` on samples.
pub fn verify_xi_strategies(ctx: &Context, lambda: &WeightVec, mu: &WeightVec, samples: usize, seed: u64, opts: Options) -> Result<Report> {
    let xi = XiMap::new(ctx, &[lambda.clone(), mu.clone()], opts.cap)?;
    let depth = match opts.strategy {
        XiStrategy::Search { depth } => depth,
        XiStrategy::LiftedWord => DEFAULT_DEPTH,
    };
    let pis = sample_component(xi.whole(), &xi.whole().highest(), samples, 8, seed);
    let mut o = Outcome::default();
    for (k, pi) in pis.iter().enumerate() {
        let a = xi.apply(pi)?;
        let b = xi.apply_search(pi, depth)?;
        o.check(format!("#{k} {}", xi.whole().render(pi)), &a, &b, |t| xi.render_tensor(t));
    }
    Ok(Report::new("xi-strategies", ctx.datum().cartan_type()).with_lambda(lambda).with_mu(mu).absorb([o]))
}
