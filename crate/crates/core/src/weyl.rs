//! The finite Weyl group `W` and the affine Weyl group `W ⋉ Q^vee`.
//!
//! Every element of `W` is materialized once, in the order (length, shortlex
//! reduced word), and referred to by its index ([`WeylElt`]). The canonical
//! form of an element is its action matrix on the root lattice; words are
//! kept for display only.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{CorootVec, NodeSet, RootDatum, RootVec, WeightVec};

/// Refuse to materialize groups larger than this.
pub const MAX_GROUP_ORDER: usize = 200_000;

/// Index of an element of the finite Weyl group in its canonical enumeration.
/// The derived ordering is the enumeration order (length, then shortlex word).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylElt(pub u32);

impl WeylElt {
    pub const IDENTITY: WeylElt = WeylElt(0);

    fn idx(self) -> usize {
        self.0 as usize
    }
}

/// An element `w t_xi` of the affine Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffWeylElt {
    pub w: WeylElt,
    pub xi: CorootVec,
}

impl AffWeylElt {
    pub fn new(w: WeylElt, xi: CorootVec) -> AffWeylElt {
        AffWeylElt { w, xi }
    }

    pub fn finite(w: WeylElt, rank: usize) -> AffWeylElt {
        AffWeylElt { w, xi: CorootVec::zero(rank) }
    }

    pub fn translation(xi: CorootVec) -> AffWeylElt {
        AffWeylElt { w: WeylElt::IDENTITY, xi }
    }
}

/// A level-zero affine weight `finite + delta * δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineWeight {
    pub finite: WeightVec,
    pub delta: i64,
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}δ", self.finite, self.delta)
    }
}

#[derive(Clone, Debug)]
struct ElemData {
    /// Column-major root action: entry `k * n + i` is the `alpha_i`
    /// coordinate of `w alpha_k`.
    roots: Vec<i64>,
    coroots: Vec<i64>,
    weights: Vec<i64>,
    word: Vec<u8>,
    inverse: WeylElt,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: RootDatum,
    elems: Vec<ElemData>,
    index: HashMap<Vec<i64>, WeylElt>,
    lmul: Vec<Vec<WeylElt>>,
    rmul: Vec<Vec<WeylElt>>,
    s_theta: WeylElt,
    longest: WeylElt,
}

impl WeylGroup {
    pub fn new(datum: RootDatum) -> Result<WeylGroup> {
        let n = datum.rank();
        let identity: Vec<i64> = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
        let cartan = datum.cartan_matrix().to_vec();

        // w s_i: column k of the result is w(alpha_k - a_{ik} alpha_i).
        let right_mult = |m: &[i64], i: usize| -> Vec<i64> {
            let mut out = m.to_vec();
            for k in 0..n {
                let a = cartan[i][k];
                if a != 0 {
                    for r in 0..n {
                        out[k * n + r] -= a * m[i * n + r];
                    }
                }
            }
            out
        };

        let mut mats: Vec<Vec<i64>> = vec![identity.clone()];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut index: HashMap<Vec<i64>, WeylElt> = HashMap::new();
        index.insert(identity, WeylElt(0));
        let mut layer: Vec<usize> = vec![0];
        while !layer.is_empty() {
            let mut next: HashMap<Vec<i64>, Vec<u8>> = HashMap::new();
            for &u in &layer {
                for i in 0..n {
                    // u s_i is longer iff u alpha_i is positive
                    let col = &mats[u][i * n..(i + 1) * n];
                    if col.iter().any(|&c| c < 0) {
                        continue;
                    }
                    let m = right_mult(&mats[u], i);
                    let mut word = words[u].clone();
                    word.push(i as u8 + 1);
                    next.entry(m)
                        .and_modify(|w| {
                            if word < *w {
                                *w = word.clone();
                            }
                        })
                        .or_insert(word);
                }
            }
            let mut fresh: Vec<(Vec<u8>, Vec<i64>)> = next.into_iter().map(|(m, w)| (w, m)).collect();
            fresh.sort();
            layer.clear();
            for (w, m) in fresh {
                if mats.len() >= MAX_GROUP_ORDER {
                    return Err(Error::UnsupportedType(format!(
                        "{}: Weyl group larger than {MAX_GROUP_ORDER}",
                        datum.cartan_type()
                    )));
                }
                let id = WeylElt(mats.len() as u32);
                index.insert(m.clone(), id);
                layer.push(mats.len());
                mats.push(m);
                words.push(w);
            }
        }

        let sym = datum.symmetrizers().to_vec();
        let order = mats.len();
        let rmul: Vec<Vec<WeylElt>> = (0..n)
            .map(|i| (0..order).map(|k| index[&right_mult(&mats[k], i)]).collect())
            .collect();
        let inverses: Vec<WeylElt> = words
            .iter()
            .map(|word| word.iter().rev().fold(WeylElt(0), |w, &i| rmul[i as usize - 1][w.idx()]))
            .collect();
        // s_i w = (w^-1 s_i)^-1
        let lmul: Vec<Vec<WeylElt>> = (0..n)
            .map(|i| (0..order).map(|k| inverses[rmul[i][inverses[k].idx()].idx()]).collect())
            .collect();
        // coroot action: w alpha_k^vee = (w alpha_k)^vee, rescaled by symmetrizers
        let coroot_mats: Vec<Vec<i64>> = mats
            .iter()
            .map(|m| {
                let mut c = m.clone();
                for k in 0..n {
                    for i in 0..n {
                        c[k * n + i] = m[k * n + i] * sym[i] / sym[k];
                    }
                }
                c
            })
            .collect();
        // weight action: <w varpi_j, alpha_i^vee> = <varpi_j, w^-1 alpha_i^vee>
        let weight_mats: Vec<Vec<i64>> = inverses
            .iter()
            .map(|inv| {
                let c = &coroot_mats[inv.idx()];
                let mut wts = vec![0i64; n * n];
                for j in 0..n {
                    for i in 0..n {
                        wts[j * n + i] = c[i * n + j];
                    }
                }
                wts
            })
            .collect();
        let elems: Vec<ElemData> = mats
            .into_iter()
            .zip(coroot_mats)
            .zip(weight_mats)
            .zip(words)
            .zip(inverses)
            .map(|((((roots, coroots), weights), word), inverse)| ElemData { roots, coroots, weights, word, inverse })
            .collect();

        let mut group = WeylGroup {
            datum,
            elems,
            index,
            lmul,
            rmul,
            s_theta: WeylElt(0),
            longest: WeylElt((order - 1) as u32),
        };
        let theta = group.datum.theta().clone();
        group.s_theta = group.reflection(&theta)?;
        Ok(group)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = WeylElt> + '_ {
        (0..self.elems.len() as u32).map(WeylElt)
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt::IDENTITY
    }

    pub fn simple(&self, i: usize) -> WeylElt {
        self.rmul[i - 1][0]
    }

    pub fn s_theta(&self) -> WeylElt {
        self.s_theta
    }

    /// `s~_i`: the simple reflection for `i` in `1..=rank`, `s_theta` for `i = 0`.
    pub fn tilde_simple(&self, i: usize) -> WeylElt {
        if i == 0 {
            self.s_theta
        } else {
            self.simple(i)
        }
    }

    /// `alpha~_i`: `alpha_i` for finite nodes and `-theta` for the affine node.
    pub fn tilde_root(&self, i: usize) -> RootVec {
        if i == 0 {
            -self.datum.theta()
        } else {
            self.datum.simple_root(i)
        }
    }

    pub fn longest(&self) -> WeylElt {
        self.longest
    }

    pub fn length(&self, w: WeylElt) -> usize {
        self.elems[w.idx()].word.len()
    }

    /// Shortlex-minimal reduced word, as 1-based node labels.
    pub fn word(&self, w: WeylElt) -> &[u8] {
        &self.elems[w.idx()].word
    }

    pub fn inverse(&self, w: WeylElt) -> WeylElt {
        self.elems[w.idx()].inverse
    }

    pub fn mul(&self, a: WeylElt, b: WeylElt) -> WeylElt {
        let mut out = b;
        for &i in self.word(a).iter().rev() {
            out = self.lmul[i as usize - 1][out.idx()];
        }
        out
    }

    /// `s_i w`.
    pub fn lmul_simple(&self, i: usize, w: WeylElt) -> WeylElt {
        self.lmul[i - 1][w.idx()]
    }

    /// `w s_i`.
    pub fn rmul_simple(&self, w: WeylElt, i: usize) -> WeylElt {
        self.rmul[i - 1][w.idx()]
    }

    /// `s~_i w`, with `s~_0 = s_theta`.
    pub fn lmul_tilde(&self, i: usize, w: WeylElt) -> WeylElt {
        if i == 0 {
            self.mul(self.s_theta, w)
        } else {
            self.lmul_simple(i, w)
        }
    }

    /// `w alpha_k` for a simple root.
    pub fn image_of_simple(&self, w: WeylElt, k: usize) -> RootVec {
        let n = self.rank();
        RootVec::from_slice(&self.elems[w.idx()].roots[(k - 1) * n..k * n])
    }

    pub fn act_root(&self, w: WeylElt, beta: &RootVec) -> RootVec {
        let n = self.rank();
        let m = &self.elems[w.idx()].roots;
        let mut out = RootVec::zero(n);
        for k in 0..n {
            let c = beta.0[k];
            if c != 0 {
                for i in 0..n {
                    out.0[i] += c * m[k * n + i];
                }
            }
        }
        out
    }

    pub fn act_coroot(&self, w: WeylElt, xi: &CorootVec) -> CorootVec {
        let n = self.rank();
        let m = &self.elems[w.idx()].coroots;
        let mut out = CorootVec::zero(n);
        for k in 0..n {
            let c = xi.0[k];
            if c != 0 {
                for i in 0..n {
                    out.0[i] += c * m[k * n + i];
                }
            }
        }
        out
    }

    pub fn act_weight(&self, w: WeylElt, lambda: &WeightVec) -> WeightVec {
        let n = self.rank();
        let m = &self.elems[w.idx()].weights;
        let mut out = WeightVec::zero(n);
        for j in 0..n {
            let c = lambda.0[j];
            if c != 0 {
                for i in 0..n {
                    out.0[i] += c * m[j * n + i];
                }
            }
        }
        out
    }

    /// True when `w beta` is a negative root (for `beta` positive).
    pub fn sends_negative(&self, w: WeylElt, beta: &RootVec) -> bool {
        self.act_root(w, beta).is_negative()
    }

    /// Length computed as the number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: WeylElt) -> usize {
        self.datum.positive_roots().iter().filter(|b| self.sends_negative(w, b)).count()
    }

    /// The reflection `s_beta` for a (finite) root.
    pub fn reflection(&self, beta: &RootVec) -> Result<WeylElt> {
        let coroot = self.datum.dual_root(beta)?;
        let n = self.rank();
        let mut m = vec![0i64; n * n];
        for k in 1..=n {
            let c = self.datum.pair(&self.datum.simple_root(k), &coroot);
            for i in 0..n {
                m[(k - 1) * n + i] = i64::from(k - 1 == i) - c * beta.0[i];
            }
        }
        self.index
            .get(&m)
            .copied()
            .ok_or_else(|| Error::NotARoot(beta.to_string()))
    }

    /// `⌊w⌋^J`, the minimal-length representative of `w W_J`.
    pub fn min_coset_rep(&self, w: WeylElt, j: NodeSet) -> WeylElt {
        let mut w = w;
        'outer: loop {
            for k in j.nodes() {
                if self.image_of_simple(w, k).is_negative() {
                    w = self.rmul_simple(w, k);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    pub fn is_min_coset_rep(&self, w: WeylElt, j: NodeSet) -> bool {
        j.nodes().all(|k| self.image_of_simple(w, k).is_positive())
    }

    /// Elements of the parabolic subgroup `W_J`.
    pub fn parabolic_subgroup(&self, j: NodeSet) -> Vec<WeylElt> {
        let mut seen = vec![false; self.order()];
        let mut out = vec![WeylElt::IDENTITY];
        seen[0] = true;
        let mut k = 0;
        while k < out.len() {
            let u = out[k];
            for i in j.nodes() {
                let v = self.rmul_simple(u, i);
                if !seen[v.idx()] {
                    seen[v.idx()] = true;
                    out.push(v);
                }
            }
            k += 1;
        }
        out.sort();
        out
    }

    /// The coset `w W_J`, in canonical order.
    pub fn coset(&self, w: WeylElt, j: NodeSet) -> Vec<WeylElt> {
        let mut out: Vec<WeylElt> = self.parabolic_subgroup(j).into_iter().map(|u| self.mul(w, u)).collect();
        out.sort();
        out
    }

    /// Minimal coset representatives `W^J`, in canonical order.
    pub fn min_coset_reps(&self, j: NodeSet) -> Vec<WeylElt> {
        self.elements().filter(|&w| self.is_min_coset_rep(w, j)).collect()
    }

    /// Parses `e`, `s1 s2 s1`, `s1s2s1`, `1,2,1` or `1 2 1`.
    pub fn parse_word(&self, s: &str) -> Result<WeylElt> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(WeylElt::IDENTITY);
        }
        let mut w = WeylElt::IDENTITY;
        for token in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            for piece in token.split('s').filter(|p| !p.is_empty()) {
                let i: usize = piece.parse().map_err(|_| Error::Parse(format!("bad reduced word {s:?}")))?;
                if i == 0 || i > self.rank() {
                    return Err(Error::Parse(format!("node {i} out of range in {s:?}")));
                }
                w = self.rmul_simple(w, i);
            }
        }
        Ok(w)
    }

    /// Renders `e` or a reduced word such as `s1 s2 s1`.
    pub fn render(&self, w: WeylElt) -> String {
        let word = self.word(w);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
        }
    }

    // ---- affine Weyl group ----

    pub fn aff_identity(&self) -> AffWeylElt {
        AffWeylElt::finite(WeylElt::IDENTITY, self.rank())
    }

    /// `(w t_xi)(w' t_zeta) = ww' t_{w'^{-1} xi + zeta}`.
    pub fn aff_mul(&self, x: &AffWeylElt, y: &AffWeylElt) -> AffWeylElt {
        let w = self.mul(x.w, y.w);
        let xi = &self.act_coroot(self.inverse(y.w), &x.xi) + &y.xi;
        AffWeylElt { w, xi }
    }

    pub fn aff_inverse(&self, x: &AffWeylElt) -> AffWeylElt {
        AffWeylElt { w: self.inverse(x.w), xi: -self.act_coroot(x.w, &x.xi) }
    }

    /// `x t_zeta`.
    pub fn aff_translate(&self, x: &AffWeylElt, zeta: &CorootVec) -> AffWeylElt {
        AffWeylElt { w: x.w, xi: &x.xi + zeta }
    }

    /// Affine simple reflection: `(s_i, 0)` for finite `i`, `(s_theta, -theta^vee)` for `i = 0`.
    pub fn aff_simple(&self, i: usize) -> AffWeylElt {
        if i == 0 {
            AffWeylElt { w: self.s_theta, xi: -self.datum.theta_coroot() }
        } else {
            AffWeylElt::finite(self.simple(i), self.rank())
        }
    }

    /// `s_i x` for an affine node `i`.
    pub fn aff_lmul_simple(&self, i: usize, x: &AffWeylElt) -> AffWeylElt {
        if i == 0 {
            self.aff_mul(&self.aff_simple(0), x)
        } else {
            AffWeylElt { w: self.lmul_simple(i, x.w), xi: x.xi.clone() }
        }
    }

    /// Reflection in the affine real root `alpha + n delta`: `s_alpha t_{n alpha^vee}`.
    pub fn aff_reflection(&self, alpha: &RootVec, n: i64) -> Result<AffWeylElt> {
        let w = self.reflection(alpha)?;
        let coroot = self.datum.dual_root(alpha)?;
        Ok(AffWeylElt { w, xi: n * &coroot })
    }

    /// `w t_xi` applied to a level-zero weight: `w mu - <mu, xi> delta`.
    pub fn aff_act_weight(&self, x: &AffWeylElt, mu: &AffineWeight) -> AffineWeight {
        AffineWeight {
            finite: self.act_weight(x.w, &mu.finite),
            delta: mu.delta - self.datum.pair_weight(&mu.finite, &x.xi),
        }
    }

    /// `w t_xi` applied to the affine root `alpha + n delta`.
    pub fn aff_act_root(&self, x: &AffWeylElt, alpha: &RootVec, n: i64) -> (RootVec, i64) {
        (self.act_root(x.w, alpha), n - self.datum.pair(alpha, &x.xi))
    }

    /// `ℓ(w) + 2 <rho, xi>`.
    pub fn semi_infinite_length(&self, x: &AffWeylElt) -> i64 {
        self.length(x.w) as i64 + 2 * x.xi.0.iter().sum::<i64>()
    }

    /// `x^{-1} alpha_i` is a negative affine root, i.e. `ℓ(s_i x) < ℓ(x)`.
    pub fn aff_is_left_descent(&self, x: &AffWeylElt, i: usize) -> bool {
        let (alpha, n) = if i == 0 { (-self.datum.theta(), 1) } else { (self.datum.simple_root(i), 0) };
        let (beta, m) = self.aff_act_root(&self.aff_inverse(x), &alpha, n);
        !is_positive_affine_root(&beta, m)
    }

    /// A reduced word `i_1 .. i_k` (affine nodes) with `x = s_{i_1} .. s_{i_k}`.
    pub fn aff_reduced_word(&self, x: &AffWeylElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = x.clone();
        while cur != self.aff_identity() {
            let i = (0..=self.rank())
                .find(|&i| self.aff_is_left_descent(&cur, i))
                .expect("a nontrivial element has a left descent");
            word.push(i);
            cur = self.aff_lmul_simple(i, &cur);
        }
        word
    }

    /// Affine length `sum_{alpha > 0} |<alpha, xi> + [w alpha < 0]|`.
    pub fn aff_length(&self, x: &AffWeylElt) -> usize {
        self.datum
            .positive_roots()
            .iter()
            .map(|a| {
                let k = self.datum.pair(a, &x.xi) + i64::from(self.sends_negative(x.w, a));
                k.unsigned_abs() as usize
            })
            .sum()
    }

    /// Renders `w · t[xi]`.
    pub fn render_aff(&self, x: &AffWeylElt) -> String {
        format!("{} · t{}", self.render(x.w), x.xi)
    }
}

/// True when the affine real root `alpha + n delta` is positive.
pub fn is_positive_affine_root(alpha: &RootVec, n: i64) -> bool {
    n > 0 || (n == 0 && alpha.is_positive())
}
