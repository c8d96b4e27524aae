//! Finite-type Cartan data: simple roots and coroots, the positive roots, the
//! highest root and the pairings between roots, coroots and weights.
//!
//! Roots live in simple-root coordinates ([`RootVec`]), coroots in
//! simple-coroot coordinates ([`CorootVec`]) and weights in
//! fundamental-weight coordinates ([`WeightVec`]). All conversions go through
//! the Cartan matrix and the symmetrizers, so arithmetic stays exact.
//!
//! Node labels follow Bourbaki and are 1-based: finite nodes are `1..=rank`
//! and `0` is reserved for the affine node.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Rat = Ratio<i64>;
pub type Coords = SmallVec<[i64; 4]>;

macro_rules! lattice_vec {
    ($name:ident) => {
        #[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Coords);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                $name(smallvec::smallvec![0; rank])
            }

            /// Basis vector for the 1-based node `i`.
            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = Self::zero(rank);
                v.0[i - 1] = 1;
                v
            }

            pub fn from_slice(c: &[i64]) -> Self {
                $name(c.iter().copied().collect())
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            /// Coordinate at the 1-based node `i`.
            pub fn at(&self, i: usize) -> i64 {
                self.0[i - 1]
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl AddAssign<&$name> for $name {
            fn add_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a += b;
                }
            }
        }

        impl SubAssign<&$name> for $name {
            fn sub_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a -= b;
                }
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, rhs: &$name) -> $name {
                $name(rhs.0.iter().map(|a| self * a).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (k, c) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    };
}

lattice_vec!(RootVec);
lattice_vec!(CorootVec);
lattice_vec!(WeightVec);

impl RootVec {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// True when the support of the vector lies in `j`.
    pub fn supported_in(&self, j: NodeSet) -> bool {
        self.0.iter().enumerate().all(|(k, &c)| c == 0 || j.contains(k + 1))
    }
}

impl CorootVec {
    /// `self >= other` in the dominance order on the coroot lattice.
    pub fn dominates(&self, other: &CorootVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// The projection `[.]^J` onto the span of the coroots outside `j`:
    /// coordinates at nodes of `j` are zeroed.
    pub fn project_away(&self, j: NodeSet) -> CorootVec {
        CorootVec(
            self.0
                .iter()
                .enumerate()
                .map(|(k, &c)| if j.contains(k + 1) { 0 } else { c })
                .collect(),
        )
    }

    /// True when the vector lies in the sublattice spanned by the coroots of `j`.
    pub fn in_span_of(&self, j: NodeSet) -> bool {
        self.0.iter().enumerate().all(|(k, &c)| c == 0 || j.contains(k + 1))
    }
}

impl WeightVec {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

/// A set of finite nodes, stored as a bitmask (bit `i - 1` for node `i`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodeSet(pub u32);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn full(rank: usize) -> NodeSet {
        NodeSet((1u32 << rank) - 1)
    }

    pub fn from_nodes(nodes: impl IntoIterator<Item = usize>) -> NodeSet {
        NodeSet(nodes.into_iter().fold(0, |m, i| m | (1 << (i - 1))))
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn nodes(self) -> impl Iterator<Item = usize> {
        (1..=32).filter(move |&i| self.contains(i))
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Every subset of `{1, .., rank}`, in increasing bitmask order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = NodeSet> {
        (0..(1u32 << rank)).map(NodeSet)
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nodes().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<CartanType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok && rank <= 16 {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family:?}{rank}")))
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => return Err(Error::UnsupportedType(other.to_string())),
        })
    }
}

impl FromStr for CartanType {
    type Err = Error;
    /// Parses labels such as `A2`, `b2` or `G2`.
    fn from_str(s: &str) -> Result<CartanType> {
        let s = s.trim();
        if s.len() < 2 {
            return Err(Error::UnsupportedType(s.to_string()));
        }
        let family: Family = s[..1].parse()?;
        let rank: usize = s[1..]
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// Cartan data of a finite root system.
///
/// `cartan[i][j] = <alpha_j, alpha_i^vee>` (0-based indices), so that
/// `<alpha_i, alpha_j^vee> = a_{ji}` as usual, and
/// `sym[i] * cartan[i][j] == sym[j] * cartan[j][i]`.
#[derive(Clone, Debug)]
pub struct RootDatum {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    pos_roots: Vec<RootVec>,
    pos_coroots: Vec<CorootVec>,
    root_index: HashMap<RootVec, usize>,
    theta: RootVec,
}

/// Symmetrized bilinear form on the simple roots, scaled so short roots have
/// squared length 2.
fn gram_matrix(ct: CartanType) -> Vec<Vec<i64>> {
    let n = ct.rank;
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match ct.family {
        Family::A => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 1..n {
                g[i - 1][i - 1] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 1..n {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 1..n {
                g[i - 1][i - 1] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 1..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 1, n, -2);
        }
        Family::D => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            for i in 1..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n, -1);
        }
        Family::E => {
            for i in 1..=n {
                g[i - 1][i - 1] = 2;
            }
            link(&mut g, 1, 3, -1);
            link(&mut g, 2, 4, -1);
            for i in 3..n {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -2);
            link(&mut g, 3, 4, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 1, 2, -3);
        }
    }
    g
}

impl RootDatum {
    /// Builds the Cartan data of a finite type; the positive roots are
    /// generated by closing the simple roots under simple reflections.
    pub fn build(cartan_type: CartanType) -> Result<RootDatum> {
        let n = cartan_type.rank;
        let gram = gram_matrix(cartan_type);
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let sym: Vec<i64> = (0..n).map(|i| gram[i][i] / 2).collect();

        let mut datum = RootDatum {
            cartan_type,
            cartan,
            sym,
            pos_roots: Vec::new(),
            pos_coroots: Vec::new(),
            root_index: HashMap::new(),
            theta: RootVec::zero(n),
        };

        let mut seen: BTreeSet<RootVec> = (1..=n).map(|i| RootVec::unit(n, i)).collect();
        let mut frontier: Vec<RootVec> = seen.iter().cloned().collect();
        while let Some(beta) = frontier.pop() {
            for i in 1..=n {
                let image = datum.reflect_root_simple(i, &beta);
                if seen.insert(image.clone()) {
                    frontier.push(image);
                }
            }
        }
        let mut pos: Vec<RootVec> = seen.into_iter().filter(RootVec::is_positive).collect();
        pos.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        datum.pos_coroots = pos.iter().map(|b| datum.coroot_of(b)).collect();
        datum.root_index = pos.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        datum.theta = pos.last().cloned().expect("nonempty root system");
        datum.pos_roots = pos;
        Ok(datum)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    /// `a_{ij} = <alpha_j, alpha_i^vee>` for 1-based nodes.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.sym
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.pos_roots
    }

    pub fn positive_coroots(&self) -> &[CorootVec] {
        &self.pos_coroots
    }

    /// Index of a positive root in [`RootDatum::positive_roots`].
    pub fn positive_root_index(&self, beta: &RootVec) -> Option<usize> {
        self.root_index.get(beta).copied()
    }

    pub fn is_root(&self, beta: &RootVec) -> bool {
        self.root_index.contains_key(beta) || self.root_index.contains_key(&-beta)
    }

    pub fn theta(&self) -> &RootVec {
        &self.theta
    }

    pub fn theta_coroot(&self) -> &CorootVec {
        self.pos_coroots.last().expect("nonempty root system")
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        RootVec::unit(self.rank(), i)
    }

    pub fn simple_coroot(&self, i: usize) -> CorootVec {
        CorootVec::unit(self.rank(), i)
    }

    pub fn fundamental_weight(&self, i: usize) -> WeightVec {
        WeightVec::unit(self.rank(), i)
    }

    /// `<beta, xi>` for a root-lattice vector and a coroot-lattice vector.
    pub fn pair(&self, beta: &RootVec, xi: &CorootVec) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if beta.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += beta.0[i] * xi.0[j] * self.cartan[j][i];
            }
        }
        s
    }

    /// `<lambda, xi>` for a weight and a coroot-lattice vector.
    pub fn pair_weight(&self, lambda: &WeightVec, xi: &CorootVec) -> i64 {
        lambda.0.iter().zip(&xi.0).map(|(a, b)| a * b).sum()
    }

    /// Expresses a root-lattice vector in fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &RootVec) -> WeightVec {
        let n = self.rank();
        WeightVec((0..n).map(|j| (0..n).map(|i| beta.0[i] * self.cartan[j][i]).sum()).collect())
    }

    /// `s_i beta` for a simple reflection (1-based node).
    pub fn reflect_root_simple(&self, i: usize, beta: &RootVec) -> RootVec {
        let c = self.pair(beta, &self.simple_coroot(i));
        let mut out = beta.clone();
        out.0[i - 1] -= c;
        out
    }

    /// Squared length of a root-lattice vector, scaled so short roots have
    /// length 2 (i.e. `(alpha_i, alpha_i) = 2 d_i`).
    pub fn norm2(&self, beta: &RootVec) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += beta.0[i] * beta.0[j] * self.sym[i] * self.cartan[i][j];
            }
        }
        s
    }

    fn coroot_of(&self, beta: &RootVec) -> CorootVec {
        let d_beta = self.norm2(beta) / 2;
        CorootVec(
            beta.0
                .iter()
                .zip(&self.sym)
                .map(|(c, d)| {
                    debug_assert_eq!((c * d) % d_beta, 0);
                    c * d / d_beta
                })
                .collect(),
        )
    }

    /// The dual root `beta^vee = 2 beta / (beta, beta)` in coroot coordinates.
    pub fn dual_root(&self, beta: &RootVec) -> Result<CorootVec> {
        if let Some(&k) = self.root_index.get(beta) {
            Ok(self.pos_coroots[k].clone())
        } else if let Some(&k) = self.root_index.get(&-beta) {
            Ok(-&self.pos_coroots[k])
        } else {
            Err(Error::NotARoot(beta.to_string()))
        }
    }

    /// Positive roots supported in `j`.
    pub fn positive_roots_in(&self, j: NodeSet) -> Vec<RootVec> {
        self.pos_roots.iter().filter(|b| b.supported_in(j)).cloned().collect()
    }

    /// `rho_J`, half the sum of the positive roots supported in `j`, in
    /// simple-root coordinates.
    pub fn rho_of(&self, j: NodeSet) -> RatRootVec {
        let mut sum = RootVec::zero(self.rank());
        for beta in self.pos_roots.iter().filter(|b| b.supported_in(j)) {
            sum += beta;
        }
        RatRootVec(sum.0.iter().map(|&c| Rat::new(c, 2)).collect())
    }

    /// `2 <rho - rho_J, beta^vee>`, always an integer.
    pub fn two_rho_minus_rho_j(&self, j: NodeSet, coroot: &CorootVec) -> i64 {
        let two_rho: i64 = coroot.0.iter().sum::<i64>() * 2;
        let two_rho_j: i64 = self
            .pos_roots
            .iter()
            .filter(|b| b.supported_in(j))
            .map(|b| self.pair(b, coroot))
            .sum();
        two_rho - two_rho_j
    }

    /// Structured-text dump used by the `roots` command.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("type: {}\n", self.cartan_type));
        out.push_str("cartan:\n");
        for row in &self.cartan {
            let r: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
            out.push_str(&format!("  {}\n", r.join("")));
        }
        out.push_str(&format!("symmetrizers: {:?}\n", self.sym));
        out.push_str(&format!("positive_roots: {}\n", self.pos_roots.len()));
        for (b, c) in self.pos_roots.iter().zip(&self.pos_coroots) {
            out.push_str(&format!("  {b} height={} coroot={c}\n", b.height()));
        }
        out.push_str(&format!("theta: {}\n", self.theta));
        out.push_str(&format!("theta_coroot: {}\n", self.theta_coroot()));
        out
    }
}

/// A root-lattice vector with rational coordinates (used for `rho` and `rho_J`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatRootVec(pub Vec<Rat>);

impl RatRootVec {
    pub fn pair(&self, datum: &RootDatum, xi: &CorootVec) -> Rat {
        let n = datum.rank();
        let mut s = Rat::zero();
        for i in 0..n {
            for j in 0..n {
                s += self.0[i] * Rat::from(xi.0[j] * datum.cartan[j][i]);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RootDatum {
        RootDatum::build(s.parse().unwrap()).unwrap()
    }

    /// Independent reflection-closure oracle: generate the roots as the orbit
    /// of the simple roots under the Weyl group, with the Cartan integers
    /// taken straight from the Gram matrix.
    fn orbit_oracle(ct: CartanType) -> Vec<RootVec> {
        let g = gram_matrix(ct);
        let n = ct.rank;
        let refl = |i: usize, v: &RootVec| -> RootVec {
            let num: i64 = (0..n).map(|k| v.0[k] * g[k][i]).sum();
            let mut out = v.clone();
            out.0[i] -= 2 * num / g[i][i];
            out
        };
        let mut set: BTreeSet<RootVec> = BTreeSet::new();
        let mut stack: Vec<RootVec> = (1..=n).map(|i| RootVec::unit(n, i)).collect();
        while let Some(v) = stack.pop() {
            if set.insert(v.clone()) {
                for i in 0..n {
                    stack.push(refl(i, &v));
                }
            }
        }
        set.into_iter().filter(RootVec::is_positive).collect()
    }

    #[test]
    fn positive_root_counts() {
        for (t, count) in [("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("C2", 4), ("G2", 6), ("B3", 9), ("D4", 12), ("F4", 24), ("E6", 36)] {
            let d = datum(t);
            assert_eq!(d.positive_roots().len(), count, "{t}");
            let mut oracle = orbit_oracle(d.cartan_type());
            let mut got = d.positive_roots().to_vec();
            oracle.sort();
            got.sort();
            assert_eq!(got, oracle, "{t}");
        }
    }

    #[test]
    fn cartan_invariants() {
        for t in ["A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3", "D4", "F4", "E6"] {
            let d = datum(t);
            let n = d.rank();
            for i in 1..=n {
                assert_eq!(d.cartan_entry(i, i), 2);
                for j in 1..=n {
                    if i != j {
                        assert!(d.cartan_entry(i, j) <= 0);
                    }
                    assert_eq!(d.sym[i - 1] * d.cartan_entry(i, j), d.sym[j - 1] * d.cartan_entry(j, i));
                }
            }
        }
    }

    #[test]
    fn highest_roots() {
        let a1 = datum("A1");
        assert_eq!(a1.theta(), &RootVec::from_slice(&[1]));
        let a2 = datum("A2");
        assert_eq!(a2.theta(), &RootVec::from_slice(&[1, 1]));
        let g2 = datum("G2");
        assert_eq!(g2.theta(), &RootVec::from_slice(&[3, 2]));
        // alpha_1 is short in G2
        assert!(g2.norm2(&g2.simple_root(1)) < g2.norm2(&g2.simple_root(2)));
        let b2 = datum("B2");
        assert_eq!(b2.theta(), &RootVec::from_slice(&[1, 2]));
        for t in ["A2", "A3", "B2", "C2", "G2", "B3", "F4"] {
            let d = datum(t);
            let theta = d.theta().clone();
            let max_height = d.positive_roots().iter().map(RootVec::height).max().unwrap();
            assert_eq!(theta.height(), max_height);
            let dominant: Vec<_> = d
                .positive_roots()
                .iter()
                .filter(|b| (1..=d.rank()).all(|i| d.pair(b, &d.simple_coroot(i)) >= 0))
                .collect();
            // the highest root is the unique dominant long root
            assert!(dominant.contains(&&theta));
            for i in 1..=d.rank() {
                assert!((0..=2).contains(&d.pair(&theta, &d.simple_coroot(i))));
            }
            assert_eq!(d.pair(&theta, d.theta_coroot()), 2);
        }
    }

    #[test]
    fn pairing_examples() {
        let a1 = datum("A1");
        assert_eq!(a1.pair_weight(&a1.fundamental_weight(1), &a1.simple_coroot(1)), 1);
        let a2 = datum("A2");
        assert_eq!(a2.pair(&a2.simple_root(1), &a2.simple_coroot(2)), -1);
        let rho = WeightVec::from_slice(&[1, 1]);
        assert_eq!(a2.pair_weight(&rho, a2.theta_coroot()), 2);
        // <alpha_i, alpha_j^vee> = a_{ji}
        let b2 = datum("B2");
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(b2.pair(&b2.simple_root(i), &b2.simple_coroot(j)), b2.cartan_entry(j, i));
            }
        }
    }

    #[test]
    fn dual_roots() {
        let a2 = datum("A2");
        assert_eq!(a2.dual_root(&a2.simple_root(1)).unwrap(), a2.simple_coroot(1));
        assert_eq!(a2.dual_root(a2.theta()).unwrap(), CorootVec::from_slice(&[1, 1]));
        let b2 = datum("B2");
        assert_eq!(b2.dual_root(b2.theta()).unwrap(), CorootVec::from_slice(&[1, 1]));
        assert!(matches!(b2.dual_root(&RootVec::from_slice(&[2, 1])), Err(Error::NotARoot(_))));
        // brute force: <beta, beta^vee> = 2 and the reflection formula is integral
        for t in ["B2", "C2", "G2", "F4"] {
            let d = datum(t);
            for b in d.positive_roots() {
                let c = d.dual_root(b).unwrap();
                assert_eq!(d.pair(b, &c), 2);
                for g in d.positive_roots() {
                    // <gamma, beta^vee> = 2 (gamma, beta) / (beta, beta)
                    let n = d.rank();
                    let mut ip = 0;
                    for i in 0..n {
                        for j in 0..n {
                            ip += g.0[i] * b.0[j] * d.sym[i] * d.cartan[i][j];
                        }
                    }
                    assert_eq!(d.pair(g, &c) * d.norm2(b), 2 * ip);
                }
            }
        }
    }

    #[test]
    fn rho_examples() {
        let a2 = datum("A2");
        let zero = a2.rho_of(NodeSet::EMPTY);
        assert!(zero.0.iter().all(|c| c.is_zero()));
        let rho = a2.rho_of(NodeSet::full(2));
        for i in 1..=2 {
            assert_eq!(rho.pair(&a2, &a2.simple_coroot(i)), Rat::from(1));
        }
        let rho2 = a2.rho_of(NodeSet::from_nodes([2]));
        assert_eq!(rho2.0, vec![Rat::from(0), Rat::new(1, 2)]);
        for t in ["B2", "G2", "C3", "F4"] {
            let d = datum(t);
            let rho = d.rho_of(NodeSet::full(d.rank()));
            for i in 1..=d.rank() {
                assert_eq!(rho.pair(&d, &d.simple_coroot(i)), Rat::from(1));
            }
        }
    }

    #[test]
    fn reflections_permute_other_positive_roots() {
        for t in ["A2", "A3", "B2", "C2", "G2", "B3"] {
            let d = datum(t);
            for i in 1..=d.rank() {
                let alpha = d.simple_root(i);
                let mut others: Vec<_> = d.positive_roots().iter().filter(|b| **b != alpha).cloned().collect();
                let mut images: Vec<_> = others.iter().map(|b| d.reflect_root_simple(i, b)).collect();
                others.sort();
                images.sort();
                assert_eq!(others, images);
            }
        }
    }

    #[test]
    fn dominant_weights_pair_nonnegatively() {
        let d = datum("B2");
        for a in 0..3 {
            for b in 0..3 {
                let lambda = WeightVec::from_slice(&[a, b]);
                for c in d.positive_coroots() {
                    assert!(d.pair_weight(&lambda, c) >= 0);
                }
            }
        }
    }

    #[test]
    fn parse_types() {
        assert!("A0".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
        assert!("G3".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert_eq!("g2".parse::<CartanType>().unwrap().to_string(), "G2");
    }

    #[test]
    fn node_sets() {
        let j = NodeSet::from_nodes([2, 3]);
        assert!(j.contains(2) && j.contains(3) && !j.contains(1));
        assert_eq!(j.to_string(), "{2,3}");
        assert_eq!(NodeSet::all_subsets(3).count(), 8);
        let xi = CorootVec::from_slice(&[1, 2, 3]);
        assert_eq!(xi.project_away(j), CorootVec::from_slice(&[1, 0, 0]));
    }
}
