//! Quantum LS paths of a dominant shape `lambda`: validity, enumeration,
//! root operators, degree functions and graded characters.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::context::Context;
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::lspath;
use crate::qbg::QbgGraph;
use crate::root_system::{NodeSet, Rat, WeightVec};
use crate::weyl::WeylElt;

/// Default bound on the size of an enumerated path set.
pub const DEFAULT_CAP: usize = 200_000;

/// A quantum LS path `(v_1, .., v_s; sigma_0, .., sigma_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QlsPath {
    pub dirs: Vec<WeylElt>,
    pub times: Vec<Rat>,
}

impl QlsPath {
    /// The straight-line path `(v; 0, 1)`.
    pub fn straight(v: WeylElt) -> QlsPath {
        QlsPath { dirs: vec![v], times: vec![Rat::zero(), Rat::one()] }
    }

    pub fn new(dirs: Vec<WeylElt>, times: Vec<Rat>) -> QlsPath {
        QlsPath { dirs, times }
    }

    /// Initial direction `iota`.
    pub fn initial(&self) -> WeylElt {
        self.dirs[0]
    }

    /// Final direction `kappa`.
    pub fn final_dir(&self) -> WeylElt {
        *self.dirs.last().expect("nonempty path")
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    /// Sort key: number of segments, then times, then directions.
    fn key(&self) -> (usize, &[Rat], &[WeylElt]) {
        (self.dirs.len(), &self.times, &self.dirs)
    }
}

pub fn render_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a path as `(s1, e; 0, 1/2, 1)`, given a direction renderer.
pub fn render_path<D>(dirs: &[D], times: &[Rat], mut dir: impl FnMut(&D) -> String) -> String {
    let d: Vec<String> = dirs.iter().map(&mut dir).collect();
    let t: Vec<String> = times.iter().map(render_rat).collect();
    format!("({}; {})", d.join(", "), t.join(", "))
}

/// Parses `a/b` or an integer.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b == 0 {
                return Err(bad());
            }
            Ok(Rat::new(a, b))
        }
        None => Ok(Rat::from(s.parse::<i64>().map_err(|_| bad())?)),
    }
}

/// The crystal `QLS(lambda)`.
pub struct QlsCrystal<'a> {
    ctx: &'a Context,
    lambda: WeightVec,
    j: NodeSet,
    graph: Arc<QbgGraph>,
    /// `<lambda, beta^vee>` for every positive root.
    lambda_pairings: Vec<i64>,
    turning: Vec<Rat>,
}

impl<'a> QlsCrystal<'a> {
    pub fn new(ctx: &'a Context, lambda: WeightVec) -> Result<QlsCrystal<'a>> {
        ctx.check_dominant(&lambda)?;
        let j = ctx.stabilizer_nodes(&lambda);
        let datum = ctx.datum();
        let lambda_pairings: Vec<i64> = datum.positive_coroots().iter().map(|c| datum.pair_weight(&lambda, c)).collect();
        let mut turning: Vec<Rat> = Vec::new();
        for &b in lambda_pairings.iter().filter(|&&b| b > 0) {
            for a in 1..b {
                turning.push(Rat::new(a, b));
            }
        }
        turning.sort();
        turning.dedup();
        Ok(QlsCrystal { ctx, lambda, j, graph: ctx.qbg(j), lambda_pairings, turning })
    }

    pub fn context(&self) -> &'a Context {
        self.ctx
    }

    pub fn lambda(&self) -> &WeightVec {
        &self.lambda
    }

    /// `J_lambda`.
    pub fn parabolic(&self) -> NodeSet {
        self.j
    }

    pub fn graph(&self) -> &QbgGraph {
        &self.graph
    }

    /// `turn(lambda)`, the admissible interior breakpoints.
    pub fn turning_points(&self) -> &[Rat] {
        &self.turning
    }

    /// `eta_lambda = (e; 0, 1)`.
    pub fn highest(&self) -> QlsPath {
        QlsPath::straight(WeylElt::IDENTITY)
    }

    /// `(⌊w⌋; 0, 1)`.
    pub fn straight(&self, w: WeylElt) -> QlsPath {
        QlsPath::straight(self.floor(w))
    }

    /// `⌊w⌋^{J_lambda}`.
    pub fn floor(&self, w: WeylElt) -> WeylElt {
        self.ctx.group().min_coset_rep(w, self.j)
    }

    fn admissible(&self, sigma: Rat, root: usize) -> bool {
        (sigma * Rat::from(self.lambda_pairings[root])).is_integer()
    }

    /// Vertices reachable from `v` by a path of positive length in `QB_sigma(lambda)`.
    fn reachable(&self, sigma: Rat, v: WeylElt) -> HashSet<WeylElt> {
        let mut seen: HashSet<WeylElt> = HashSet::new();
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for e in self.graph.out_edges(u) {
                if self.admissible(sigma, e.root) && seen.insert(e.target) {
                    queue.push_back(e.target);
                }
            }
        }
        seen
    }

    /// Checks every defining condition of a quantum LS path of shape `lambda`.
    pub fn is_valid(&self, eta: &QlsPath) -> bool {
        let s = eta.dirs.len();
        if s == 0 || eta.times.len() != s + 1 {
            return false;
        }
        if !eta.times[0].is_zero() || !eta.times[s].is_one() || eta.times.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if eta.dirs.iter().any(|&v| !self.graph.contains(v)) || eta.dirs.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        (1..s).all(|u| self.reachable(eta.times[u], eta.dirs[u]).contains(&eta.dirs[u - 1]))
    }

    /// Every path of shape `lambda`, sorted by (segments, times, directions).
    pub fn enumerate(&self, cap: usize) -> Result<Vec<QlsPath>> {
        let verts = self.graph.vertices().to_vec();
        // reach[k][v] for the k-th turning point
        let reach: Vec<HashMap<WeylElt, Vec<WeylElt>>> = self
            .turning
            .iter()
            .map(|&sigma| {
                verts
                    .iter()
                    .map(|&v| {
                        let mut r: Vec<WeylElt> = self.reachable(sigma, v).into_iter().filter(|&x| x != v).collect();
                        r.sort();
                        (v, r)
                    })
                    .collect()
            })
            .collect();

        struct Search<'r> {
            turning: &'r [Rat],
            reach: &'r [HashMap<WeylElt, Vec<WeylElt>>],
            cap: usize,
            out: Vec<QlsPath>,
        }
        impl Search<'_> {
            // dirs and times are stored back to front
            fn go(&mut self, dirs: &mut Vec<WeylElt>, times: &mut Vec<Rat>, bound: usize) -> Result<()> {
                let d: Vec<WeylElt> = dirs.iter().rev().copied().collect();
                let mut t: Vec<Rat> = vec![Rat::zero()];
                t.extend(times.iter().rev().copied());
                self.out.push(QlsPath { dirs: d, times: t });
                if self.out.len() > self.cap {
                    return Err(Error::EnumerationCap { cap: self.cap });
                }
                let cur = *dirs.last().expect("nonempty");
                for k in (0..bound).rev() {
                    for &next in &self.reach[k][&cur] {
                        dirs.push(next);
                        times.push(self.turning[k]);
                        self.go(dirs, times, k)?;
                        dirs.pop();
                        times.pop();
                    }
                }
                Ok(())
            }
        }

        let mut search = Search { turning: &self.turning, reach: &reach, cap, out: Vec::new() };
        for &v in &verts {
            search.go(&mut vec![v], &mut vec![Rat::one()], self.turning.len())?;
        }
        let mut out = search.out;
        out.sort_by(|a, b| a.key().cmp(&b.key()));
        Ok(out)
    }

    /// `⟨v lambda, alpha_i^vee⟩`, with `alpha_0^vee = -theta^vee`.
    fn slope(&self, i: usize, v: WeylElt) -> i64 {
        let g = self.ctx.group();
        let vl = g.act_weight(v, &self.lambda);
        if i == 0 {
            -self.ctx.datum().pair_weight(&vl, self.ctx.datum().theta_coroot())
        } else {
            vl.at(i)
        }
    }

    fn slopes(&self, i: usize, eta: &QlsPath) -> Vec<i64> {
        eta.dirs.iter().map(|&v| self.slope(i, v)).collect()
    }

    fn reflect(&self, i: usize) -> impl Fn(&WeylElt) -> WeylElt + '_ {
        move |&v| self.floor(self.ctx.group().lmul_tilde(i, v))
    }

    /// `wt(eta) = sum (sigma_u - sigma_{u-1}) v_u lambda`.
    pub fn wt(&self, eta: &QlsPath) -> WeightVec {
        let g = self.ctx.group();
        let images: Vec<WeightVec> = eta.dirs.iter().map(|&v| g.act_weight(v, &self.lambda)).collect();
        let n = self.ctx.rank();
        WeightVec(
            (0..n)
                .map(|k| {
                    let r = lspath::weighted_sum(&eta.times, images.iter().map(|x| Rat::from(x.0[k])));
                    assert!(r.is_integer(), "weight of a quantum LS path is not integral");
                    r.to_integer()
                })
                .collect(),
        )
    }

    /// `deg_{w lambda}(eta) = -sum_u sigma_u <lambda, wt^J(v_{u+1} => v_u)>` with
    /// `v_{s+1} = ⌊w⌋`.
    pub fn deg_at(&self, eta: &QlsPath, w: WeylElt) -> Rat {
        let datum = self.ctx.datum();
        let s = eta.dirs.len();
        let mut total = Rat::zero();
        for u in 1..=s {
            let next = if u == s { self.floor(w) } else { eta.dirs[u] };
            let wt = self.graph.wt(next, eta.dirs[u - 1]);
            total -= eta.times[u] * Rat::from(datum.pair_weight(&self.lambda, &wt));
        }
        assert!(total <= Rat::zero(), "degree {total} is positive");
        total
    }

    /// `gch_{w lambda} QLS(lambda)`.
    pub fn gch(&self, w: WeylElt, cap: usize) -> Result<GradedCharacter> {
        let mut ch = GradedCharacter::default();
        for eta in self.enumerate(cap)? {
            let deg = self.deg_at(&eta, w);
            if !deg.is_integer() {
                return Err(Error::InvalidPath(format!("degree {deg} is not an integer")));
            }
            ch.add_term(self.wt(&eta), deg.to_integer(), 1);
        }
        Ok(ch)
    }

    pub fn render(&self, eta: &QlsPath) -> String {
        let g = self.ctx.group();
        render_path(&eta.dirs, &eta.times, |&v| g.render(v))
    }

    /// Parses `(s1, e; 0, 1/2, 1)`; directions are replaced by their minimal
    /// coset representatives.
    pub fn parse(&self, s: &str) -> Result<QlsPath> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (d, t) = body.split_once(';').ok_or_else(|| Error::Parse(format!("missing ';' in {s:?}")))?;
        let dirs = d
            .split(',')
            .map(|w| self.ctx.group().parse_word(w).map(|w| self.floor(w)))
            .collect::<Result<Vec<_>>>()?;
        let times = t.split(',').map(parse_rat).collect::<Result<Vec<_>>>()?;
        let eta = QlsPath { dirs, times };
        if !self.is_valid(&eta) {
            return Err(Error::InvalidPath(s.to_string()));
        }
        Ok(eta)
    }
}

impl Crystal for QlsCrystal<'_> {
    type Elt = QlsPath;

    fn rank(&self) -> usize {
        self.ctx.rank()
    }

    fn e(&self, i: usize, b: &QlsPath) -> Option<QlsPath> {
        lspath::raise(&b.dirs, &b.times, &self.slopes(i, b), self.reflect(i)).map(|(d, t)| QlsPath::new(d, t))
    }

    fn f(&self, i: usize, b: &QlsPath) -> Option<QlsPath> {
        lspath::lower(&b.dirs, &b.times, &self.slopes(i, b), self.reflect(i)).map(|(d, t)| QlsPath::new(d, t))
    }

    fn epsilon(&self, i: usize, b: &QlsPath) -> i64 {
        lspath::string_lengths(&b.times, &self.slopes(i, b)).0
    }

    fn phi(&self, i: usize, b: &QlsPath) -> i64 {
        lspath::string_lengths(&b.times, &self.slopes(i, b)).1
    }
}

/// A finite sum of terms `coeff * q^k * e^weight`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedCharacter {
    terms: BTreeMap<(WeightVec, i64), i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTerm {
    pub weight: Vec<i64>,
    pub q: i64,
    pub coeff: i64,
}

impl GradedCharacter {
    pub fn add_term(&mut self, weight: WeightVec, q: i64, coeff: i64) {
        let entry = self.terms.entry((weight, q)).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&mut self, other: &GradedCharacter) {
        for ((w, q), c) in &other.terms {
            self.add_term(w.clone(), *q, *c);
        }
    }

    /// `q^k e^weight * self`.
    pub fn times_monomial(&self, weight: &WeightVec, q: i64) -> GradedCharacter {
        GradedCharacter { terms: self.terms.iter().map(|((w, k), c)| ((w + weight, k + q), *c)).collect() }
    }

    pub fn terms(&self) -> Vec<CharacterTerm> {
        self.terms
            .iter()
            .map(|((w, q), c)| CharacterTerm { weight: w.0.to_vec(), q: *q, coeff: *c })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Specialization at `q = 1`.
    pub fn at_q_one(&self) -> BTreeMap<WeightVec, i64> {
        let mut out: BTreeMap<WeightVec, i64> = BTreeMap::new();
        for ((w, _), c) in &self.terms {
            *out.entry(w.clone()).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

impl fmt::Display for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((w, q), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *c != 1 {
                write!(f, "{c}·")?;
            }
            if *q != 0 {
                write!(f, "q^{q:+}·")?;
            }
            write!(f, "e^{w}")?;
        }
        Ok(())
    }
}
