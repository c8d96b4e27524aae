//! Abstract crystals and the tensor product rule.
//!
//! Nodes are `0..=rank`, with `0` the affine node. The tensor rule is
//! `f_i(b1 ⊗ b2) = f_i b1 ⊗ b2` if `phi_i(b1) > eps_i(b2)` and `b1 ⊗ f_i b2`
//! otherwise; `e_i` acts on the first factor iff `phi_i(b1) >= eps_i(b2)`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

pub trait Crystal {
    type Elt: Clone + Eq + Hash + Ord + Debug;

    /// Number of finite nodes; operators are indexed by `0..=rank()`.
    fn rank(&self) -> usize;
    fn e(&self, i: usize, b: &Self::Elt) -> Option<Self::Elt>;
    fn f(&self, i: usize, b: &Self::Elt) -> Option<Self::Elt>;
    fn epsilon(&self, i: usize, b: &Self::Elt) -> i64;
    fn phi(&self, i: usize, b: &Self::Elt) -> i64;

    /// `<wt b, alpha_i^vee>`.
    fn weight_pairing(&self, i: usize, b: &Self::Elt) -> i64 {
        self.phi(i, b) - self.epsilon(i, b)
    }

    /// Applies `f_i` (or `e_i` when `raise` is set) `k` times.
    fn apply_n(&self, i: usize, raise: bool, k: usize, b: &Self::Elt) -> Option<Self::Elt> {
        let mut cur = b.clone();
        for _ in 0..k {
            cur = if raise { self.e(i, &cur)? } else { self.f(i, &cur)? };
        }
        Some(cur)
    }

    /// `f_i^max b`, together with the number of steps taken.
    fn f_max(&self, i: usize, b: &Self::Elt) -> (Self::Elt, usize) {
        let mut cur = b.clone();
        let mut k = 0;
        while let Some(next) = self.f(i, &cur) {
            cur = next;
            k += 1;
        }
        (cur, k)
    }

    /// Applies an operator word; letters act right to left, as in `f_{i1} f_{i2} b`.
    fn apply_word(&self, word: &[Op], b: &Self::Elt) -> Option<Self::Elt> {
        let mut cur = b.clone();
        for op in word.iter().rev() {
            cur = match *op {
                Op::E(i) => self.e(i, &cur)?,
                Op::F(i) => self.f(i, &cur)?,
            };
        }
        Some(cur)
    }
}

/// A root operator letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    E(usize),
    F(usize),
}

impl Op {
    pub fn inverse(self) -> Op {
        match self {
            Op::E(i) => Op::F(i),
            Op::F(i) => Op::E(i),
        }
    }

    pub fn apply<C: Crystal>(self, c: &C, b: &C::Elt) -> Option<C::Elt> {
        match self {
            Op::E(i) => c.e(i, b),
            Op::F(i) => c.f(i, b),
        }
    }

    /// All letters for nodes `0..=rank`, lowering operators first.
    pub fn all(rank: usize) -> Vec<Op> {
        (0..=rank).map(Op::F).chain((0..=rank).map(Op::E)).collect()
    }
}

/// Tensor product of crystals sharing an element type.
pub struct Tensor<'a, C: Crystal> {
    pub factors: Vec<&'a C>,
}

impl<'a, C: Crystal> Tensor<'a, C> {
    pub fn new(factors: Vec<&'a C>) -> Self {
        assert!(!factors.is_empty());
        Tensor { factors }
    }

    /// `phi_i` of every prefix `b_1 ⊗ .. ⊗ b_k`.
    fn prefix_phi(&self, i: usize, b: &[C::Elt]) -> Vec<i64> {
        let mut out = Vec::with_capacity(b.len());
        for (k, (c, x)) in self.factors.iter().zip(b).enumerate() {
            let phi = c.phi(i, x);
            out.push(if k == 0 { phi } else { phi.max(out[k - 1] + c.weight_pairing(i, x)) });
        }
        out
    }

    fn acting_factor(&self, i: usize, b: &[C::Elt], raise: bool) -> usize {
        let pre = self.prefix_phi(i, b);
        let mut k = b.len() - 1;
        while k > 0 {
            let eps = self.factors[k].epsilon(i, &b[k]);
            let left = if raise { pre[k - 1] >= eps } else { pre[k - 1] > eps };
            if left {
                k -= 1;
            } else {
                break;
            }
        }
        k
    }
}

impl<C: Crystal> Crystal for Tensor<'_, C> {
    type Elt = Vec<C::Elt>;

    fn rank(&self) -> usize {
        self.factors[0].rank()
    }

    fn e(&self, i: usize, b: &Self::Elt) -> Option<Self::Elt> {
        let k = self.acting_factor(i, b, true);
        let mut out = b.clone();
        out[k] = self.factors[k].e(i, &b[k])?;
        Some(out)
    }

    fn f(&self, i: usize, b: &Self::Elt) -> Option<Self::Elt> {
        let k = self.acting_factor(i, b, false);
        let mut out = b.clone();
        out[k] = self.factors[k].f(i, &b[k])?;
        Some(out)
    }

    fn phi(&self, i: usize, b: &Self::Elt) -> i64 {
        *self.prefix_phi(i, b).last().expect("nonempty tensor")
    }

    fn epsilon(&self, i: usize, b: &Self::Elt) -> i64 {
        self.phi(i, b) - self.weight_pairing(i, b)
    }

    fn weight_pairing(&self, i: usize, b: &Self::Elt) -> i64 {
        self.factors.iter().zip(b).map(|(c, x)| c.weight_pairing(i, x)).sum()
    }
}

/// The connected component containing `seed`, in breadth-first order.
/// Only meaningful for finite crystals; `limit` bounds the exploration.
pub fn component<C: Crystal>(c: &C, seed: &C::Elt, limit: usize) -> Option<Vec<C::Elt>> {
    let mut seen: BTreeSet<C::Elt> = BTreeSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(b) = queue.pop_front() {
        for op in Op::all(c.rank()) {
            if let Some(next) = op.apply(c, &b) {
                if seen.insert(next.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    queue.push_back(next);
                }
            }
        }
        order.push(b);
    }
    Some(order)
}

/// Synchronized breadth-first search from `(seed_a, seed_b)`, recording for
/// every element of the component of `seed_a` a shortest operator word and
/// its image. Fails with a description of the first disagreement when the
/// two components are not isomorphic via the seeds.
pub fn synchronized_bfs<A: Crystal, B: Crystal>(
    a: &A,
    seed_a: &A::Elt,
    b: &B,
    seed_b: &B::Elt,
) -> Result<SyncMap<A::Elt, B::Elt>, String> {
    let mut forward: HashMap<A::Elt, (B::Elt, Vec<Op>)> = HashMap::new();
    let mut backward: HashMap<B::Elt, A::Elt> = HashMap::new();
    let mut order = vec![seed_a.clone()];
    forward.insert(seed_a.clone(), (seed_b.clone(), Vec::new()));
    backward.insert(seed_b.clone(), seed_a.clone());
    let mut head = 0;
    while head < order.len() {
        let x = order[head].clone();
        head += 1;
        let (y, word) = forward[&x].clone();
        for i in 0..=a.rank() {
            let (ex, ey) = (a.epsilon(i, &x), b.epsilon(i, &y));
            let (px, py) = (a.phi(i, &x), b.phi(i, &y));
            if (ex, px) != (ey, py) {
                return Err(format!("string lengths differ at node {i} after word {word:?}: ({ex}, {px}) vs ({ey}, {py})"));
            }
        }
        for op in Op::all(a.rank()) {
            let nx = op.apply(a, &x);
            let ny = match op {
                Op::E(i) => b.e(i, &y),
                Op::F(i) => b.f(i, &y),
            };
            match (nx, ny) {
                (None, None) => {}
                (Some(nx), Some(ny)) => {
                    if let Some((image, _)) = forward.get(&nx) {
                        if *image != ny {
                            return Err(format!("arrow {op:?} from {x:?} leads to inconsistent images"));
                        }
                        continue;
                    }
                    if let Some(pre) = backward.get(&ny) {
                        return Err(format!("{ny:?} is the image of both {pre:?} and {nx:?}"));
                    }
                    let mut w = vec![op];
                    w.extend_from_slice(&word);
                    forward.insert(nx.clone(), (ny.clone(), w));
                    backward.insert(ny, nx.clone());
                    order.push(nx);
                }
                _ => return Err(format!("operator {op:?} is defined on only one side at {x:?}")),
            }
        }
    }
    Ok(SyncMap { forward, backward, order })
}

/// Result of [`synchronized_bfs`].
#[derive(Clone, Debug)]
pub struct SyncMap<X: Eq + Hash, Y: Eq + Hash> {
    /// Image and a shortest operator word (acting right to left) from the seed.
    pub forward: HashMap<X, (Y, Vec<Op>)>,
    pub backward: HashMap<Y, X>,
    /// Elements of the source component in discovery order.
    pub order: Vec<X>,
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The crystal of the vector representation of sl_2 at level zero:
    /// elements are `+` (true) and `-` (false).
    struct Spin;

    impl Crystal for Spin {
        type Elt = bool;
        fn rank(&self) -> usize {
            1
        }
        fn e(&self, i: usize, b: &bool) -> Option<bool> {
            // f_1 sends + to -, f_0 sends - to +
            match (i, *b) {
                (1, false) => Some(true),
                (0, true) => Some(false),
                _ => None,
            }
        }
        fn f(&self, i: usize, b: &bool) -> Option<bool> {
            match (i, *b) {
                (1, true) => Some(false),
                (0, false) => Some(true),
                _ => None,
            }
        }
        fn epsilon(&self, i: usize, b: &bool) -> i64 {
            i64::from(self.e(i, b).is_some())
        }
        fn phi(&self, i: usize, b: &bool) -> i64 {
            i64::from(self.f(i, b).is_some())
        }
    }

    #[test]
    fn tensor_rule_examples() {
        let t = Tensor::new(vec![&Spin, &Spin]);
        assert_eq!(t.f(1, &vec![true, true]), Some(vec![false, true]));
        assert_eq!(t.f(1, &vec![false, true]), Some(vec![false, false]));
        assert_eq!(t.f(0, &vec![false, false]), Some(vec![true, false]));
        assert_eq!(t.phi(1, &vec![true, true]), 2);
        assert_eq!(component(&t, &vec![true, true], 10).unwrap().len(), 4);
    }

    #[test]
    fn tensor_axioms() {
        let t = Tensor::new(vec![&Spin, &Spin, &Spin]);
        let all = component(&t, &vec![true, true, true], 100).unwrap();
        assert_eq!(all.len(), 8);
        for b in &all {
            for i in 0..=1 {
                if let Some(fb) = t.f(i, b) {
                    assert_eq!(t.e(i, &fb).as_ref(), Some(b));
                    assert_eq!(t.epsilon(i, &fb), t.epsilon(i, b) + 1);
                    assert_eq!(t.phi(i, &fb), t.phi(i, b) - 1);
                }
                // string lengths count applications
                let mut k = 0;
                let mut cur = b.clone();
                while let Some(n) = t.f(i, &cur) {
                    cur = n;
                    k += 1;
                }
                assert_eq!(k, t.phi(i, b));
            }
        }
    }

    #[test]
    fn synchronized_bfs_detects_isomorphism() {
        let t = Tensor::new(vec![&Spin]);
        let map = synchronized_bfs(&Spin, &true, &t, &vec![true]).unwrap();
        assert_eq!(map.order.len(), 2);
        assert_eq!(map.forward[&false].0, vec![false]);
        assert_eq!(map.forward[&false].1, vec![Op::F(1)]);
        assert!(synchronized_bfs(&Spin, &true, &t, &vec![false]).is_err());
    }
}
