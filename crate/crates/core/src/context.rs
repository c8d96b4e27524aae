//! Shared state for one root system: the Weyl group and lazily built
//! quantum Bruhat graphs.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::Result;
use crate::qbg::{self, QbgGraph};
use crate::root_system::{CartanType, CorootVec, NodeSet, RootDatum, WeightVec};
use crate::sils;
use crate::weyl::{AffWeylElt, WeylElt, WeylGroup};
use crate::Error;

/// Root datum, Weyl group and a cache of quantum Bruhat graphs.
///
/// All caches are behind read-mostly locks, so a context can be shared
/// between worker threads.
#[derive(Debug)]
pub struct Context {
    group: WeylGroup,
    graphs: RwLock<HashMap<NodeSet, Arc<QbgGraph>>>,
    projections: RwLock<HashMap<(NodeSet, CorootVec), AffWeylElt>>,
}

impl Context {
    pub fn new(cartan_type: CartanType) -> Result<Context> {
        let datum = RootDatum::build(cartan_type)?;
        Ok(Context { group: WeylGroup::new(datum)?, graphs: RwLock::new(HashMap::new()), projections: RwLock::new(HashMap::new()) })
    }

    /// Parses a type label such as `A2`.
    pub fn from_label(label: &str) -> Result<Context> {
        Context::new(label.parse()?)
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn datum(&self) -> &RootDatum {
        self.group.datum()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// The parabolic quantum Bruhat graph for `j`, built on first use.
    pub fn qbg(&self, j: NodeSet) -> Arc<QbgGraph> {
        if let Some(g) = self.graphs.read().expect("qbg cache").get(&j) {
            return Arc::clone(g);
        }
        let g = Arc::new(QbgGraph::build(&self.group, j).expect("quantum Bruhat graph"));
        Arc::clone(self.graphs.write().expect("qbg cache").entry(j).or_insert(g))
    }

    pub fn full_qbg(&self) -> Arc<QbgGraph> {
        self.qbg(NodeSet::EMPTY)
    }

    /// `min(v W_J, <=_w)`.
    pub fn deodhar_lift(&self, v: WeylElt, j: NodeSet, w: WeylElt) -> Result<WeylElt> {
        qbg::deodhar_lift(&self.group, &self.full_qbg(), v, j, w)
    }

    /// `Π^J(t_xi)`, memoized.
    pub fn proj_translation(&self, j: NodeSet, xi: &CorootVec) -> Result<AffWeylElt> {
        let key = (j, xi.clone());
        if let Some(x) = self.projections.read().expect("projection cache").get(&key) {
            return Ok(x.clone());
        }
        let x = sils::solve_proj_translation(&self.group, j, xi)?;
        self.projections.write().expect("projection cache").insert(key, x.clone());
        Ok(x)
    }

    /// `Π^J(w t_xi) = ⌊w⌋ Π^J(t_xi)`.
    pub fn proj(&self, x: &AffWeylElt, j: NodeSet) -> Result<AffWeylElt> {
        let t = self.proj_translation(j, &x.xi)?;
        let floor = self.group.min_coset_rep(x.w, j);
        Ok(AffWeylElt { w: self.group.mul(floor, t.w), xi: t.xi })
    }

    /// `J_lambda = { i : <lambda, alpha_i^vee> = 0 }`.
    pub fn stabilizer_nodes(&self, lambda: &WeightVec) -> NodeSet {
        NodeSet::from_nodes((1..=self.rank()).filter(|&i| lambda.at(i) == 0))
    }

    /// Checks that `lambda` has the right number of coordinates and is dominant.
    pub fn check_dominant(&self, lambda: &WeightVec) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: lambda.rank() });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(())
    }
}
