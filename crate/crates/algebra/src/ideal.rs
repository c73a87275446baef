use std::fmt;
use std::sync::OnceLock;

use crate::groebner::{buchberger, groebner_basis};
use crate::monomial::{lane_mask, Monomial};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::text::{format_list, parse_list};
use crate::AlgebraError;

/// Largest variable count for the brute-force dimension search.
pub const MAX_DIM_VARS: usize = 24;

/// An ideal given by generators, with its reduced degrevlex Groebner basis
/// computed on first use and then frozen.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Result<Vec<Polynomial>, AlgebraError>>,
}

impl Ideal {
    /// Zero generators are dropped; the rest are made monic, sorted in
    /// degrevlex and deduplicated.
    pub fn new(
        ring: &Ring,
        gens: impl IntoIterator<Item = Polynomial>,
    ) -> Result<Ideal, AlgebraError> {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(AlgebraError::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            let g = g.with_order(MonomialOrder::DegRevLex).monic();
            if !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![],
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, [Polynomial::one(ring)]).expect("same ring")
    }

    /// Comma-separated generators, e.g. `(x1*y2 - x2*y1, x1)`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Ideal, AlgebraError> {
        Ideal::new(ring, parse_list(ring, text)?)
    }

    /// The ideal generated by variables at the given slots.
    pub fn variables(ring: &Ring, slots: impl IntoIterator<Item = usize>) -> Ideal {
        Ideal::new(ring, slots.into_iter().map(|k| Polynomial::var(ring, k))).expect("same ring")
    }

    fn with_gb(ring: &Ring, gb: Vec<Polynomial>) -> Ideal {
        let cell = OnceLock::new();
        let _ = cell.set(Ok(gb.clone()));
        Ideal {
            ring: ring.clone(),
            gens: gb,
            gb: cell,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// Reduced Groebner basis under degrevlex, sorted by descending lead.
    pub fn gb(&self) -> Result<&[Polynomial], AlgebraError> {
        self.gb
            .get_or_init(|| groebner_basis(&self.gens, MonomialOrder::DegRevLex))
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn groebner(&self, order: MonomialOrder) -> Result<Vec<Polynomial>, AlgebraError> {
        match order {
            MonomialOrder::DegRevLex => Ok(self.gb()?.to_vec()),
            _ => groebner_basis(&self.gens, order),
        }
    }

    pub fn is_unit(&self) -> Result<bool, AlgebraError> {
        Ok(self.gb()?.first().is_some_and(Polynomial::is_constant))
    }

    /// Lead monomials of the degrevlex basis.
    pub fn lead_monomials(&self) -> Result<Vec<Monomial>, AlgebraError> {
        Ok(self
            .gb()?
            .iter()
            .filter_map(Polynomial::lead_monomial)
            .collect())
    }

    pub fn initial_ideal(&self) -> Result<Ideal, AlgebraError> {
        Ideal::new(
            &self.ring,
            self.lead_monomials()?
                .into_iter()
                .map(|m| Polynomial::monomial(&self.ring, m, 1)),
        )
    }

    fn check_ring(&self, ring: &Ring) -> Result<(), AlgebraError> {
        if &self.ring != ring {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, AlgebraError> {
        self.check_ring(f.ring())?;
        Ok(f.with_order(MonomialOrder::DegRevLex)
            .normal_form(self.gb()?)?
            .is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, AlgebraError> {
        self.check_ring(&other.ring)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool, AlgebraError> {
        self.check_ring(&other.ring)?;
        Ok(self.gb()? == other.gb()?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, AlgebraError> {
        self.check_ring(&other.ring)?;
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, AlgebraError> {
        self.check_ring(&other.ring)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating a tag variable `t` from `t*I + (1 - t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, AlgebraError> {
        self.check_ring(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let ext = self.ring.with_extra_var("t")?;
        let order = MonomialOrder::elimination([n], false);
        let t = Monomial::var(n);
        let f = ext.field();
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.rehome(&ext, order).mul_monomial(t).into_terms());
        }
        for g in &other.gens {
            let g = g.rehome(&ext, order);
            let tg = g.mul_monomial(t).scale(f.neg(1));
            gens.push(g.try_add(&tg)?.into_terms());
        }
        let gb = buchberger(gens, f, order, ext.budget())?;
        let kept = gb
            .into_iter()
            .filter(|p| p.iter().all(|(m, _)| m.exponent(n) == 0))
            .map(|p| Polynomial::from_sorted(&self.ring, MonomialOrder::DegRevLex, p))
            .collect();
        // the t-free part of a reduced elimination basis is the reduced degrevlex basis
        Ok(Ideal::with_gb(&self.ring, kept))
    }

    /// `(I : f)`, computed as `(I ∩ (f)) / f`.
    pub fn quotient(&self, f: &Polynomial) -> Result<Ideal, AlgebraError> {
        self.check_ring(f.ring())?;
        if f.is_zero() {
            return Err(AlgebraError::InvalidArgument(
                "quotient by the zero polynomial".into(),
            ));
        }
        let principal = Ideal::new(&self.ring, [f.clone()])?;
        let both = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(both.gens.len());
        for g in &both.gens {
            match g.exact_div(f)? {
                Some(q) => gens.push(q),
                None => {
                    return Err(AlgebraError::InvariantViolation(format!(
                        "intersection generator {g} is not divisible by {f}"
                    )))
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ K[variables outside slots]`, via an elimination order.
    pub fn eliminate(&self, slots: &[usize]) -> Result<Ideal, AlgebraError> {
        if let Some(&k) = slots.iter().find(|&&k| k >= self.ring.nvars()) {
            return Err(AlgebraError::InvalidArgument(format!(
                "slot {k} outside the ring"
            )));
        }
        self.eliminate_with(slots, false)
    }

    /// As [`Ideal::eliminate`], choosing lex or degrevlex inside the blocks.
    pub fn eliminate_with(&self, slots: &[usize], lex_within: bool) -> Result<Ideal, AlgebraError> {
        if slots.is_empty() {
            return Ok(Ideal::with_gb(&self.ring, self.gb()?.to_vec()));
        }
        let mask = lane_mask(slots.iter().copied());
        let order = MonomialOrder::Elimination {
            block: mask,
            lex_within,
        };
        let gb = groebner_basis(&self.gens, order)?;
        let kept = gb
            .into_iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.restrict(mask).is_one()))
            .map(|p| p.with_order(MonomialOrder::DegRevLex));
        Ideal::new(&self.ring, kept)
    }

    /// Krull dimension of `S/I`: the largest set of variables containing the
    /// support of no lead monomial. The unit ideal gives `-1`.
    pub fn krull_dim(&self) -> Result<i64, AlgebraError> {
        let n = self.ring.nvars();
        if n > MAX_DIM_VARS {
            return Err(AlgebraError::TooManyVariables {
                nvars: n,
                max: MAX_DIM_VARS,
            });
        }
        let supports: Vec<u32> = self.lead_monomials()?.iter().map(|m| m.support()).collect();
        if supports.contains(&0) {
            return Ok(-1);
        }
        let mut best = 0;
        for set in 0u32..(1 << n) {
            let size = set.count_ones();
            if size > best && supports.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        Ok(best as i64)
    }

    /// `nvars - dim(S/I)`.
    pub fn height(&self) -> Result<i64, AlgebraError> {
        Ok(self.ring.nvars() as i64 - self.krull_dim()?)
    }

    pub fn plus_variables(
        &self,
        slots: impl IntoIterator<Item = usize>,
    ) -> Result<Ideal, AlgebraError> {
        self.sum(&Ideal::variables(&self.ring, slots))
    }

    /// `I + (x_i, y_i : i in vertices)` in a binomial ring.
    pub fn plus_vertex_variables(
        &self,
        vertices: impl IntoIterator<Item = usize>,
    ) -> Result<Ideal, AlgebraError> {
        let Some(n) = self.ring.vertex_count() else {
            return Err(AlgebraError::InvalidArgument(
                "vertex variables need a binomial ring".into(),
            ));
        };
        let mut slots = Vec::new();
        for v in vertices {
            if !(1..=n).contains(&v) {
                return Err(AlgebraError::InvalidArgument(format!(
                    "vertex {v} not in 1..={n}"
                )));
            }
            slots.extend([self.ring.x(v), self.ring.y(v)]);
        }
        self.plus_variables(slots)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.gens))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::binomial(3, 32003).unwrap()
    }

    fn ideal(s: &str) -> Ideal {
        Ideal::parse(&ring(), s).unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        Polynomial::parse(&ring(), s).unwrap()
    }

    #[test]
    fn membership_and_equality() {
        let p3 = ideal("x1*y2 - x2*y1, x2*y3 - x3*y2");
        assert!(p3.contains(&poly("x1*y2 - x2*y1")).unwrap());
        assert!(!p3.contains(&poly("x1*y3 - x3*y1")).unwrap());
        let k3 = ideal("x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2");
        let shuffled = ideal("x2*y3 - x3*y2, x1*y2 - x2*y1, 5*x1*y3 - 5*x3*y1");
        assert!(k3.equals(&shuffled).unwrap());
        assert!(!k3.equals(&p3).unwrap());
        assert!(k3.contains_ideal(&p3).unwrap());
    }

    #[test]
    fn intersections() {
        let x1 = ideal("x1");
        let y1 = ideal("y1");
        assert!(x1.intersect(&y1).unwrap().equals(&ideal("x1*y1")).unwrap());
        let k3 = ideal("x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2");
        assert!(k3.intersect(&k3).unwrap().equals(&k3).unwrap());
        assert!(x1.intersect(&Ideal::zero(&ring())).unwrap().is_zero());
    }

    #[test]
    fn quotients() {
        let i = ideal("x1*y1");
        assert!(i
            .quotient(&poly("x1"))
            .unwrap()
            .equals(&ideal("y1"))
            .unwrap());
        assert!(i.quotient(&poly("1")).unwrap().equals(&i).unwrap());
        assert!(i.quotient(&poly("x1*y1")).unwrap().is_unit().unwrap());
        assert!(i.quotient(&Polynomial::zero(&ring())).is_err());
    }

    #[test]
    fn elimination() {
        let r = Ring::custom(["x1", "y1", "t"], 32003).unwrap();
        let i = Ideal::parse(&r, "t*x1, y1 - t*y1").unwrap();
        let e = i.eliminate(&[2]).unwrap();
        assert!(e.equals(&Ideal::parse(&r, "x1*y1").unwrap()).unwrap());
        let lex = i.eliminate_with(&[2], true).unwrap();
        assert!(e.equals(&lex).unwrap());
        assert!(i.eliminate(&[]).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn dimensions() {
        assert_eq!(Ideal::zero(&ring()).krull_dim().unwrap(), 6);
        assert_eq!(ideal("x1, x2, x3, y1, y2, y3").krull_dim().unwrap(), 0);
        assert_eq!(
            ideal("x1*y2 - x2*y1, x2*y3 - x3*y2").krull_dim().unwrap(),
            4
        );
        assert_eq!(Ideal::unit(&ring()).krull_dim().unwrap(), -1);
        assert_eq!(ideal("x1, y1").height().unwrap(), 2);
    }

    #[test]
    fn vertex_variables() {
        let z = Ideal::zero(&ring());
        assert!(z.plus_vertex_variables([]).unwrap().is_zero());
        assert!(z
            .plus_vertex_variables([1])
            .unwrap()
            .equals(&ideal("x1, y1"))
            .unwrap());
        assert!(z.plus_vertex_variables([4]).is_err());
    }
}
