//! The embedding `Ξ: SLS_0(λ_1 + .. + λ_n) ≅ (SLS(λ_1) ⊗ .. ⊗ SLS(λ_n))_0`.
//!
//! Two ways of evaluating `Ξ(π)` are provided. Both first normalize `π` by
//! `T_{-ζ*}`, where `ζ*` is the translation part of its final direction, and
//! use `Ξ(π · T_ξ) = Ξ(π) · T_ξ` to undo the normalization at the end.
//!
//! * Lifted word: the quantum LS path `cl(π)` is reached from `η_λ` by an
//!   operator word `X` recorded while tabulating `Θ`. Applying `X` to `π_λ`
//!   gives an element `π'` of `SLS_0(λ)` with the same image under `cl`, so
//!   `π' = π · T_ξ` for some `ξ`, read off from the final directions. Then
//!   `Ξ(π) = X(π_{λ_1} ⊗ .. ⊗ π_{λ_n}) · T_{-ξ}`.
//! * Search: a bidirectional breadth-first search over root operators in
//!   `SLS(λ)` for a word joining `π_λ` to the normalized path, bounded by a
//!   total depth.

use std::collections::HashMap;

use crate::context::Context;
use crate::crystal::{Crystal, Op, Tensor};
use crate::decomp::theta::{sum_weights, ThetaMap};
use crate::error::{Error, Result};
use crate::qls::QlsPath;
use crate::root_system::{CorootVec, WeightVec};
use crate::sils::{SilsCrystal, SilsPath};

/// Default bound on the operator word length explored by [`XiMap::apply_search`].
pub const DEFAULT_DEPTH: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiStrategy {
    LiftedWord,
    Search { depth: usize },
}

pub struct XiMap<'a> {
    theta: ThetaMap<'a>,
    whole: SilsCrystal<'a>,
    factors: Vec<SilsCrystal<'a>>,
}

impl<'a> XiMap<'a> {
    pub fn new(ctx: &'a Context, shapes: &[WeightVec], cap: usize) -> Result<XiMap<'a>> {
        let theta = ThetaMap::new(ctx, shapes, cap)?;
        let whole = SilsCrystal::new(ctx, sum_weights(ctx, shapes))?;
        let factors = shapes.iter().map(|l| SilsCrystal::new(ctx, l.clone())).collect::<Result<Vec<_>>>()?;
        Ok(XiMap { theta, whole, factors })
    }

    pub fn theta(&self) -> &ThetaMap<'a> {
        &self.theta
    }

    pub fn whole(&self) -> &SilsCrystal<'a> {
        &self.whole
    }

    pub fn factors(&self) -> &[SilsCrystal<'a>] {
        &self.factors
    }

    pub fn tensor(&self) -> Tensor<'_, SilsCrystal<'a>> {
        Tensor::new(self.factors.iter().collect())
    }

    /// `π_{λ_1} ⊗ .. ⊗ π_{λ_n}`.
    pub fn highest_image(&self) -> Vec<SilsPath> {
        self.factors.iter().map(|c| c.highest()).collect()
    }

    /// `(π_1 ⊗ .. ⊗ π_n) · T_xi`, factorwise.
    pub fn translate_tensor(&self, parts: &[SilsPath], xi: &CorootVec) -> Result<Vec<SilsPath>> {
        parts.iter().zip(&self.factors).map(|(p, c)| c.translate(p, xi)).collect()
    }

    /// `cl ⊗ .. ⊗ cl`.
    pub fn cl_tensor(&self, parts: &[SilsPath]) -> Vec<QlsPath> {
        parts.iter().zip(&self.factors).map(|(p, c)| c.cl(p)).collect()
    }

    pub fn render_tensor(&self, parts: &[SilsPath]) -> String {
        parts.iter().zip(&self.factors).map(|(p, c)| c.render(p)).collect::<Vec<_>>().join(" ⊗ ")
    }

    pub fn apply_with(&self, pi: &SilsPath, strategy: XiStrategy) -> Result<Vec<SilsPath>> {
        match strategy {
            XiStrategy::LiftedWord => self.apply(pi),
            XiStrategy::Search { depth } => self.apply_search(pi, depth),
        }
    }

    /// `π · T_{-ζ*}` together with `ζ*`.
    fn normalize(&self, pi: &SilsPath) -> Result<(SilsPath, CorootVec)> {
        let zeta = self.whole.final_translation(pi);
        Ok((self.whole.translate(pi, &-&zeta)?, zeta))
    }

    /// `Ξ(π)` by the lifted-word method.
    pub fn apply(&self, pi: &SilsPath) -> Result<Vec<SilsPath>> {
        let (pi0, zeta_star) = self.normalize(pi)?;
        let word = self.theta.word(&self.whole.cl(&pi0))?;
        let lifted = self
            .whole
            .apply_word(word, &self.whole.highest())
            .ok_or_else(|| Error::IsomorphismMismatch("operator word from the quantum LS crystal fails to lift".into()))?;
        let zeta_lift = self.whole.final_translation(&lifted);
        if self.whole.translate(&lifted, &-&zeta_lift)? != pi0 {
            return Err(Error::IsomorphismMismatch(format!(
                "{} is not in the connected component of the straight line",
                self.whole.render(pi)
            )));
        }
        let image = self
            .tensor()
            .apply_word(word, &self.highest_image())
            .ok_or_else(|| Error::IsomorphismMismatch("operator word fails on the tensor product".into()))?;
        self.translate_tensor(&image, &(&zeta_star - &zeta_lift))
    }

    /// `Ξ(π)` via a bidirectional search for an operator word, exploring
    /// words of total length at most `depth`.
    pub fn apply_search(&self, pi: &SilsPath, depth: usize) -> Result<Vec<SilsPath>> {
        let (pi0, zeta_star) = self.normalize(pi)?;
        let word = bidirectional_word(&self.whole, &self.whole.highest(), &pi0, depth)
            .ok_or_else(|| Error::DepthExceeded { depth, target: self.whole.render(&pi0) })?;
        let image = self
            .tensor()
            .apply_word(&word, &self.highest_image())
            .ok_or_else(|| Error::IsomorphismMismatch("operator word fails on the tensor product".into()))?;
        self.translate_tensor(&image, &zeta_star)
    }
}

/// A word `X` (acting right to left) with `X start = target`, of length at
/// most `depth`, found by growing breadth-first balls around both ends.
pub fn bidirectional_word<C: Crystal>(c: &C, start: &C::Elt, target: &C::Elt, depth: usize) -> Option<Vec<Op>> {
    // words reaching each element from its own end
    let mut fwd: HashMap<C::Elt, Vec<Op>> = HashMap::from([(start.clone(), Vec::new())]);
    let mut bwd: HashMap<C::Elt, Vec<Op>> = HashMap::from([(target.clone(), Vec::new())]);
    let mut fwd_frontier = vec![start.clone()];
    let mut bwd_frontier = vec![target.clone()];
    let (mut fwd_depth, mut bwd_depth) = (0usize, 0usize);
    let join = |a: &[Op], b: &[Op]| -> Vec<Op> {
        // m = a start = b target, so target = b^{-1} a start
        let mut w: Vec<Op> = b.iter().rev().map(|op| op.inverse()).collect();
        w.extend_from_slice(a);
        w
    };
    if start == target {
        return Some(Vec::new());
    }
    while fwd_depth + bwd_depth < depth {
        let grow_fwd = fwd_frontier.len() <= bwd_frontier.len();
        let (frontier, seen, other) =
            if grow_fwd { (&mut fwd_frontier, &mut fwd, &bwd) } else { (&mut bwd_frontier, &mut bwd, &fwd) };
        let mut next = Vec::new();
        for x in frontier.iter() {
            let word = seen[x].clone();
            for op in Op::all(c.rank()) {
                if let Some(y) = op.apply(c, x) {
                    if seen.contains_key(&y) {
                        continue;
                    }
                    let mut w = vec![op];
                    w.extend_from_slice(&word);
                    if let Some(ow) = other.get(&y) {
                        return Some(if grow_fwd { join(&w, ow) } else { join(ow, &w) });
                    }
                    seen.insert(y.clone(), w);
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        *frontier = next;
        if grow_fwd {
            fwd_depth += 1;
        } else {
            bwd_depth += 1;
        }
    }
    None
}
