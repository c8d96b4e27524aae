//! Deodhar-lift chains: the initial direction `ι(η, w)` and the accumulated
//! weight `ζ(η, w)`.

use serde::Serialize;

use crate::context::Context;
use crate::error::Result;
use crate::qls::QlsPath;
use crate::root_system::{CorootVec, NodeSet, WeightVec};
use crate::weyl::WeylElt;

/// `ι(η, w)` and `ζ(η, w)`, with the full chains they come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IotaZeta {
    pub iota: WeylElt,
    pub zeta: CorootVec,
    /// `ṽ_1, .., ṽ_{s+1}` with `ṽ_{s+1} = w`.
    pub v_chain: Vec<WeylElt>,
    /// `ξ̃_1, .., ξ̃_s`.
    pub xi_chain: Vec<CorootVec>,
}

/// Lifts a sequence of cosets `v_u W_{J_u}` from the right, starting at `w`:
/// `ṽ_{s+1} = w`, `ṽ_u = min(v_u W_{J_u}, <=_{ṽ_{u+1}})`, and accumulates
/// `ξ̃_s = wt(ṽ_{s+1} => ṽ_s)`, `ξ̃_u = ξ̃_{u+1} + wt(ṽ_{u+1} => ṽ_u)` in the
/// full quantum Bruhat graph.
pub fn lift_chain(ctx: &Context, cosets: &[(WeylElt, NodeSet)], w: WeylElt) -> Result<(Vec<WeylElt>, Vec<CorootVec>)> {
    let s = cosets.len();
    let full = ctx.full_qbg();
    let mut v = vec![w; s + 1];
    let mut xi = vec![CorootVec::zero(ctx.rank()); s];
    let mut acc = CorootVec::zero(ctx.rank());
    for u in (0..s).rev() {
        let (rep, j) = cosets[u];
        v[u] = ctx.deodhar_lift(rep, j, v[u + 1])?;
        acc = &acc + &full.wt(v[u + 1], v[u]);
        xi[u] = acc.clone();
    }
    Ok((v, xi))
}

/// `ι(η, w)` and `ζ(η, w)` for `η` in `QLS(mu)`.
///
/// Checks the congruence `ξ̃_u ≡ ξ_u + wt^J(⌊w⌋ => κ(η))` modulo `Q^vee_J`,
/// where `ξ_u` are the translations of the lift `π_η`.
pub fn iota_zeta(ctx: &Context, mu: &WeightVec, eta: &QlsPath, w: WeylElt) -> Result<IotaZeta> {
    let j = ctx.stabilizer_nodes(mu);
    let cosets: Vec<(WeylElt, NodeSet)> = eta.dirs.iter().map(|&v| (v, j)).collect();
    let (v_chain, xi_chain) = lift_chain(ctx, &cosets, w)?;

    let graph = ctx.qbg(j);
    let s = eta.dirs.len();
    let floor = ctx.group().min_coset_rep(w, j);
    let mut expected = graph.wt(floor, eta.final_dir());
    for u in (0..s).rev() {
        if u + 1 < s {
            expected = &expected + &graph.wt(eta.dirs[u + 1], eta.dirs[u]);
        }
        assert_eq!(
            xi_chain[u].project_away(j),
            expected.project_away(j),
            "lift chain weight is not congruent to the path weight at segment {}",
            u + 1
        );
    }
    Ok(IotaZeta { iota: v_chain[0], zeta: xi_chain[0].clone(), v_chain, xi_chain })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_examples() {
        let ctx = Context::from_label("A1").unwrap();
        let g = ctx.group();
        let mu = WeightVec::from_slice(&[1]);
        let (e, s1) = (g.identity(), g.simple(1));
        let iz = iota_zeta(&ctx, &mu, &QlsPath::straight(s1), e).unwrap();
        assert_eq!((iz.iota, iz.zeta.clone()), (s1, CorootVec::zero(1)));
        let iz = iota_zeta(&ctx, &mu, &QlsPath::straight(e), s1).unwrap();
        assert_eq!((iz.iota, iz.zeta.clone()), (e, CorootVec::from_slice(&[1])));
        assert_eq!(iz.v_chain, vec![e, s1]);
    }

    #[test]
    fn single_segment_is_a_lift() {
        let ctx = Context::from_label("B2").unwrap();
        let g = ctx.group();
        let mu = WeightVec::from_slice(&[0, 1]);
        let j = ctx.stabilizer_nodes(&mu);
        for v in g.min_coset_reps(j) {
            for w in g.elements() {
                let iz = iota_zeta(&ctx, &mu, &QlsPath::straight(v), w).unwrap();
                let lift = ctx.deodhar_lift(v, j, w).unwrap();
                assert_eq!(iz.iota, lift);
                assert_eq!(iz.zeta, ctx.full_qbg().wt(w, lift));
            }
        }
    }
}
