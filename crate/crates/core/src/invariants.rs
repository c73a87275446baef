use std::collections::HashMap;

use bei_algebra::{minimal_free_resolution, AlgebraError, BettiTable, Field, Ideal, Ring};
use bei_graph::{canonical_form, CanonicalForm, Graph, MAX_CANONICAL_N};

use crate::ideals::binomial_edge_ideal_in;
use crate::CoreError;

/// Computes Betti tables of binomial edge ideals in a fixed characteristic,
/// memoised by isomorphism class.
///
/// Isolated vertices are dropped first: they only add free variables.
pub struct Engine {
    p: u32,
    rings: HashMap<usize, Ring>,
    labeled: HashMap<Graph, Result<BettiTable, AlgebraError>>,
    classes: HashMap<CanonicalForm, Result<BettiTable, AlgebraError>>,
}

impl Engine {
    pub fn new(p: u32) -> Result<Engine, CoreError> {
        Field::new(p)?;
        Ok(Engine {
            p,
            rings: HashMap::new(),
            labeled: HashMap::new(),
            classes: HashMap::new(),
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn ring(&mut self, n: usize) -> Result<Ring, CoreError> {
        if let Some(r) = self.rings.get(&n) {
            return Ok(r.clone());
        }
        let r = Ring::binomial(n, self.p)?;
        self.rings.insert(n, r.clone());
        Ok(r)
    }

    pub fn edge_ideal(&mut self, g: &Graph) -> Result<Ideal, CoreError> {
        let r = self.ring(g.n())?;
        binomial_edge_ideal_in(&r, g)
    }

    /// Graded Betti numbers of `S/J_G`.
    pub fn betti(&mut self, g: &Graph) -> Result<BettiTable, CoreError> {
        let core = g.vertices().difference(g.isolated_vertices());
        let (h, _) = g.induced_subgraph(core);
        if let Some(t) = self.labeled.get(&h) {
            return Ok(t.clone()?);
        }
        let t = if h.n() <= MAX_CANONICAL_N {
            let (form, _) = canonical_form(&h)?;
            match self.classes.get(&form) {
                Some(t) => t.clone(),
                None => {
                    let t = self.compute(&form.to_graph())?;
                    self.classes.insert(form, t.clone());
                    t
                }
            }
        } else {
            self.compute(&h)?
        };
        self.labeled.insert(h, t.clone());
        Ok(t?)
    }

    fn compute(&mut self, g: &Graph) -> Result<Result<BettiTable, AlgebraError>, CoreError> {
        let j = self.edge_ideal(g)?;
        Ok(minimal_free_resolution(&j))
    }

    /// `β_{i,j}(J_G)`.
    pub fn ideal_betti(&mut self, g: &Graph) -> Result<BettiTable, CoreError> {
        Ok(self.betti(g)?.ideal_view())
    }

    /// `reg(J_G)`, with `reg((0)) = 0`.
    pub fn reg_ideal(&mut self, g: &Graph) -> Result<i64, CoreError> {
        Ok(self
            .betti(g)?
            .reg_ideal()
            .expect("J_G is never the unit ideal"))
    }

    pub fn reg_quotient(&mut self, g: &Graph) -> Result<i64, CoreError> {
        Ok(self
            .betti(g)?
            .reg_quotient()
            .expect("J_G is never the unit ideal"))
    }

    pub fn pd_quotient(&mut self, g: &Graph) -> Result<usize, CoreError> {
        Ok(self
            .betti(g)?
            .pd_quotient()
            .expect("J_G is never the unit ideal"))
    }

    /// Number of distinct tables computed so far.
    pub fn computed(&self) -> usize {
        self.classes.len()
    }
}
