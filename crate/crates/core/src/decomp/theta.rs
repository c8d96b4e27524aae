//! The crystal isomorphism `Θ: QLS(λ_1 + .. + λ_n) ≅ QLS(λ_1) ⊗ .. ⊗ QLS(λ_n)`.

use crate::context::Context;
use crate::crystal::{synchronized_bfs, Crystal, Op, SyncMap, Tensor};
use crate::error::{Error, Result};
use crate::qls::{QlsCrystal, QlsPath};
use crate::root_system::WeightVec;

/// `Θ` for a fixed decomposition, tabulated on all of `QLS(λ)`.
///
/// The table is built by a synchronized breadth-first search from
/// `(η_λ, η_{λ_1} ⊗ .. ⊗ η_{λ_n})`; the build checks that the map is total
/// and bijective.
pub struct ThetaMap<'a> {
    whole: QlsCrystal<'a>,
    factors: Vec<QlsCrystal<'a>>,
    map: SyncMap<QlsPath, Vec<QlsPath>>,
}

/// `λ_1 + .. + λ_n`.
pub fn sum_weights(ctx: &Context, shapes: &[WeightVec]) -> WeightVec {
    shapes.iter().fold(WeightVec::zero(ctx.rank()), |acc, l| &acc + l)
}

impl<'a> ThetaMap<'a> {
    pub fn new(ctx: &'a Context, shapes: &[WeightVec], cap: usize) -> Result<ThetaMap<'a>> {
        if shapes.is_empty() {
            return Err(Error::Parse("empty decomposition".into()));
        }
        let whole = QlsCrystal::new(ctx, sum_weights(ctx, shapes))?;
        let factors = shapes.iter().map(|l| QlsCrystal::new(ctx, l.clone())).collect::<Result<Vec<_>>>()?;
        let map = {
            let tensor = Tensor::new(factors.iter().collect());
            let seed: Vec<QlsPath> = factors.iter().map(|c| c.highest()).collect();
            synchronized_bfs(&whole, &whole.highest(), &tensor, &seed).map_err(Error::IsomorphismMismatch)?
        };
        let size = whole.enumerate(cap)?.len();
        let mut product = 1usize;
        for c in &factors {
            product = product.saturating_mul(c.enumerate(cap)?.len());
        }
        if map.order.len() != size || product != size {
            return Err(Error::IsomorphismMismatch(format!(
                "component of size {} in a crystal of size {size}, tensor product of size {product}",
                map.order.len()
            )));
        }
        Ok(ThetaMap { whole, factors, map })
    }

    pub fn whole(&self) -> &QlsCrystal<'a> {
        &self.whole
    }

    pub fn factors(&self) -> &[QlsCrystal<'a>] {
        &self.factors
    }

    pub fn tensor(&self) -> Tensor<'_, QlsCrystal<'a>> {
        Tensor::new(self.factors.iter().collect())
    }

    /// Every element of `QLS(λ)`, in discovery order.
    pub fn domain(&self) -> &[QlsPath] {
        &self.map.order
    }

    pub fn apply(&self, eta: &QlsPath) -> Result<Vec<QlsPath>> {
        self.map
            .forward
            .get(eta)
            .map(|(image, _)| image.clone())
            .ok_or_else(|| Error::IsomorphismMismatch(format!("{} is not in the domain", self.whole.render(eta))))
    }

    pub fn inverse(&self, parts: &[QlsPath]) -> Result<QlsPath> {
        self.map
            .backward
            .get(parts)
            .cloned()
            .ok_or_else(|| Error::IsomorphismMismatch(format!("{} is not in the image", self.render_tensor(parts))))
    }

    /// A shortest operator word `X` with `X η_λ = eta`.
    pub fn word(&self, eta: &QlsPath) -> Result<&[Op]> {
        self.map
            .forward
            .get(eta)
            .map(|(_, word)| word.as_slice())
            .ok_or_else(|| Error::IsomorphismMismatch(format!("{} is not in the domain", self.whole.render(eta))))
    }

    pub fn render_tensor(&self, parts: &[QlsPath]) -> String {
        parts.iter().zip(&self.factors).map(|(p, c)| c.render(p)).collect::<Vec<_>>().join(" ⊗ ")
    }

    /// Checks that arrows, weights and string lengths are preserved at every
    /// element; returns a description of the first violation.
    pub fn check_morphism(&self) -> std::result::Result<(), String> {
        let tensor = self.tensor();
        for eta in self.domain() {
            let image = &self.map.forward[eta].0;
            let wt: WeightVec = image.iter().zip(&self.factors).fold(WeightVec::zero(self.whole.rank()), |acc, (p, c)| &acc + &c.wt(p));
            if wt != self.whole.wt(eta) {
                return Err(format!("weight not preserved at {}", self.whole.render(eta)));
            }
            for i in 0..=self.whole.rank() {
                if self.whole.epsilon(i, eta) != tensor.epsilon(i, image) || self.whole.phi(i, eta) != tensor.phi(i, image) {
                    return Err(format!("string lengths at node {i} not preserved at {}", self.whole.render(eta)));
                }
                for op in [Op::E(i), Op::F(i)] {
                    let lhs = op.apply(&self.whole, eta).map(|x| self.map.forward[&x].0.clone());
                    let rhs = op.apply(&tensor, image);
                    if lhs != rhs {
                        return Err(format!("{op:?} does not commute at {}", self.whole.render(eta)));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qls::DEFAULT_CAP;
    use crate::root_system::Rat;

    fn w(c: &[i64]) -> WeightVec {
        WeightVec::from_slice(c)
    }

    #[test]
    fn a1_two_fundamentals() {
        let ctx = Context::from_label("A1").unwrap();
        let theta = ThetaMap::new(&ctx, &[w(&[1]), w(&[1])], DEFAULT_CAP).unwrap();
        assert_eq!(theta.domain().len(), 4);
        let s1 = ctx.group().simple(1);
        let e = ctx.group().identity();
        let half = vec![Rat::from(0), Rat::new(1, 2), Rat::from(1)];
        let se = QlsPath::new(vec![s1, e], half.clone());
        let es = QlsPath::new(vec![e, s1], half);
        assert_eq!(theta.apply(&se).unwrap(), vec![QlsPath::straight(s1), QlsPath::straight(e)]);
        assert_eq!(theta.apply(&es).unwrap(), vec![QlsPath::straight(e), QlsPath::straight(s1)]);
        assert_eq!(theta.inverse(&[QlsPath::straight(e), QlsPath::straight(s1)]).unwrap(), es);
        theta.check_morphism().unwrap();
    }

    #[test]
    fn tensor_rule_examples() {
        let ctx = Context::from_label("A1").unwrap();
        let theta = ThetaMap::new(&ctx, &[w(&[1]), w(&[1])], DEFAULT_CAP).unwrap();
        let t = theta.tensor();
        let (e, s1) = (QlsPath::straight(ctx.group().identity()), QlsPath::straight(ctx.group().simple(1)));
        assert_eq!(t.f(1, &vec![e.clone(), e.clone()]), Some(vec![s1.clone(), e.clone()]));
        assert_eq!(t.f(1, &vec![s1.clone(), e.clone()]), Some(vec![s1.clone(), s1.clone()]));
        assert_eq!(t.f(0, &vec![s1.clone(), s1.clone()]), Some(vec![e, s1]));
    }

    #[test]
    fn longest_element_goes_to_tensor_of_longest() {
        let ctx = Context::from_label("A2").unwrap();
        let (l, m) = (w(&[1, 0]), w(&[0, 1]));
        let theta = ThetaMap::new(&ctx, &[l, m], DEFAULT_CAP).unwrap();
        assert_eq!(theta.domain().len(), 9);
        let lng = ctx.group().longest();
        let whole = theta.whole();
        let image = theta.apply(&whole.straight(lng)).unwrap();
        assert_eq!(image, vec![theta.factors()[0].straight(lng), theta.factors()[1].straight(lng)]);
        theta.check_morphism().unwrap();
    }
}
