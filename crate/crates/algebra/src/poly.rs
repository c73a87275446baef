use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;
use crate::monomial::{Monomial, MAX_EXPONENT};
use crate::order::MonomialOrder;
use crate::ring::{Budget, Ring};
use crate::AlgebraError;

/// A monomial with a nonzero coefficient.
pub type Term = (Monomial, u32);

/// Sorts descending, merges equal monomials and drops zeros.
pub(crate) fn normalize(mut terms: Vec<Term>, f: Field, ord: MonomialOrder) -> Vec<Term> {
    terms.sort_by(|a, b| ord.cmp(b.0, a.0));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = f.add(last.1, c),
            _ => out.push((m, c)),
        }
        if out.last().is_some_and(|t| t.1 == 0) {
            out.pop();
        }
    }
    out
}

fn exponent_overflow() -> AlgebraError {
    AlgebraError::Budget {
        what: "monomial exponent",
        limit: MAX_EXPONENT as usize,
    }
}

/// `a + c * m * b` for descending term lists; a budget error if an exponent
/// leaves the packed range.
pub(crate) fn try_add_scaled(
    a: &[Term],
    c: u32,
    m: Monomial,
    b: &[Term],
    f: Field,
    ord: MonomialOrder,
) -> Result<Vec<Term>, AlgebraError> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.checked_mul(m).ok_or_else(exponent_overflow)?;
        match ord.cmp(a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, f.mul(c, b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = f.add(a[i].1, f.mul(c, b[j].1));
                if s != 0 {
                    out.push((bm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for &(bm, bc) in &b[j..] {
        out.push((
            bm.checked_mul(m).ok_or_else(exponent_overflow)?,
            f.mul(c, bc),
        ));
    }
    Ok(out)
}

/// Like [`try_add_scaled`], panicking on exponent overflow.
pub(crate) fn add_scaled(
    a: &[Term],
    c: u32,
    m: Monomial,
    b: &[Term],
    f: Field,
    ord: MonomialOrder,
) -> Vec<Term> {
    try_add_scaled(a, c, m, b, f, ord).expect("monomial exponent overflow")
}

pub(crate) fn make_monic(terms: &mut [Term], f: Field) {
    if let Some(&(_, lc)) = terms.first() {
        if lc != 1 {
            let inv = f.inv(lc);
            for t in terms.iter_mut() {
                t.1 = f.mul(t.1, inv);
            }
        }
    }
}

pub(crate) fn mul_terms(
    a: &[Term],
    b: &[Term],
    f: Field,
    ord: MonomialOrder,
) -> Result<Vec<Term>, AlgebraError> {
    let mut acc: Vec<Term> = Vec::new();
    for &(m, c) in b {
        acc = try_add_scaled(&acc, c, m, a, f, ord)?;
    }
    Ok(acc)
}

/// Remainder of `p` modulo `basis` (leads must be monic). The highest
/// reducible term is reduced first, trying divisors in list order. With
/// `full == false` only the leading term is reduced.
pub(crate) fn reduce(
    mut p: Vec<Term>,
    basis: &[&[Term]],
    f: Field,
    ord: MonomialOrder,
    full: bool,
    budget: &Budget,
) -> Result<Vec<Term>, AlgebraError> {
    let mut rem = Vec::new();
    let mut start = 0;
    let mut steps = 0usize;
    while start < p.len() {
        let (m, c) = p[start];
        let divisor = basis
            .iter()
            .find(|g| g.first().is_some_and(|(lm, _)| lm.divides(m)));
        match divisor {
            Some(g) => {
                let q = m.div(g[0].0);
                let lc = f.mul(c, f.inv(g[0].1));
                p = try_add_scaled(&p[start + 1..], f.neg(lc), q, &g[1..], f, ord)?;
                start = 0;
                steps += 1;
                if p.len() > budget.max_terms {
                    return Err(AlgebraError::Budget {
                        what: "polynomial length",
                        limit: budget.max_terms,
                    });
                }
                if steps > budget.max_steps {
                    return Err(AlgebraError::Budget {
                        what: "reduction steps",
                        limit: budget.max_steps,
                    });
                }
            }
            None if full => {
                rem.push((m, c));
                start += 1;
            }
            None => {
                rem.extend_from_slice(&p[start..]);
                return Ok(rem);
            }
        }
    }
    Ok(rem)
}

/// An element of a [`Ring`], with terms strictly descending under its order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::DegRevLex,
            terms: vec![],
        }
    }

    pub fn constant(ring: &Ring, c: i64) -> Polynomial {
        Polynomial::from_terms(
            ring,
            MonomialOrder::DegRevLex,
            vec![(Monomial::ONE, ring.field().from_i64(c))],
        )
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, 1)
    }

    pub fn var(ring: &Ring, slot: usize) -> Polynomial {
        assert!(slot < ring.nvars(), "slot {slot} outside the ring");
        Polynomial::from_terms(
            ring,
            MonomialOrder::DegRevLex,
            vec![(Monomial::var(slot), 1)],
        )
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: i64) -> Polynomial {
        Polynomial::from_terms(
            ring,
            MonomialOrder::DegRevLex,
            vec![(m, ring.field().from_i64(c))],
        )
    }

    /// Terms in any order, duplicates allowed; coefficients already reduced mod p.
    pub fn from_terms(ring: &Ring, order: MonomialOrder, terms: Vec<Term>) -> Polynomial {
        let f = ring.field();
        let terms = normalize(
            terms
                .into_iter()
                .map(|(m, c)| (m, c % f.characteristic()))
                .collect(),
            f,
            order,
        );
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    /// Terms already sorted, merged and nonzero.
    pub(crate) fn from_sorted(ring: &Ring, order: MonomialOrder, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(w[0].0, w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            order,
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn lead_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Homogeneous for the ring's fine grading (see [`Ring::fine_key`]).
    pub fn is_fine_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| self.ring.fine_key(w[0].0) == self.ring.fine_key(w[1].0))
    }

    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        Polynomial {
            ring: self.ring.clone(),
            order,
            terms,
        }
    }

    pub fn monic(&self) -> Polynomial {
        let mut p = self.clone();
        make_monic(&mut p.terms, self.ring.field());
        p
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return Polynomial {
                terms: vec![],
                ..self.clone()
            };
        }
        let terms = self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect();
        Polynomial {
            terms,
            ..self.clone()
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|&(t, c)| (t.mul(m), c)).collect();
        Polynomial {
            terms,
            ..self.clone()
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_same(other)?;
        let o = other.with_order(self.order);
        let terms = add_scaled(
            &self.terms,
            1,
            Monomial::ONE,
            &o.terms,
            self.ring.field(),
            self.order,
        );
        Ok(Polynomial {
            terms,
            ..self.clone()
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_same(other)?;
        let f = self.ring.field();
        let o = other.with_order(self.order);
        let terms = add_scaled(
            &self.terms,
            f.neg(1),
            Monomial::ONE,
            &o.terms,
            f,
            self.order,
        );
        Ok(Polynomial {
            terms,
            ..self.clone()
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_same(other)?;
        let o = other.with_order(self.order);
        let terms = mul_terms(&self.terms, &o.terms, self.ring.field(), self.order)?;
        Ok(Polynomial {
            terms,
            ..self.clone()
        })
    }

    /// Remainder under multivariate division by `basis` in this polynomial's
    /// order: the highest reducible term is reduced first, divisors are tried
    /// in list order. An empty basis returns `self`.
    pub fn normal_form(&self, basis: &[Polynomial]) -> Result<Polynomial, AlgebraError> {
        let f = self.ring.field();
        let mut owned = Vec::with_capacity(basis.len());
        for g in basis {
            self.check_same(g)?;
            if !g.is_zero() {
                owned.push(g.with_order(self.order).monic().terms);
            }
        }
        let refs: Vec<&[Term]> = owned.iter().map(Vec::as_slice).collect();
        let rem = reduce(
            self.terms.clone(),
            &refs,
            f,
            self.order,
            true,
            &self.ring.budget(),
        )?;
        Ok(Polynomial {
            terms: rem,
            ..self.clone()
        })
    }

    /// `self / d` if `d` divides `self` exactly, else `None`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Option<Polynomial>, AlgebraError> {
        self.check_same(d)?;
        let f = self.ring.field();
        let d = d.with_order(self.order);
        let Some(&(dm, dc)) = d.terms.first() else {
            return Err(AlgebraError::InvalidArgument(
                "division by zero polynomial".into(),
            ));
        };
        let dinv = f.inv(dc);
        let mut rest = self.terms.clone();
        let mut quot = Vec::new();
        while let Some(&(m, c)) = rest.first() {
            let Some(q) = m.checked_div(dm) else {
                return Ok(None);
            };
            let qc = f.mul(c, dinv);
            quot.push((q, qc));
            rest = try_add_scaled(&rest[1..], f.neg(qc), q, &d.terms[1..], f, self.order)?;
        }
        Ok(Some(Polynomial {
            terms: quot,
            ..self.clone()
        }))
    }

    /// Largest exponent of any variable in any term.
    pub fn max_exponent(&self) -> u32 {
        self.terms
            .iter()
            .flat_map(|t| (0..self.ring.nvars()).map(move |k| t.0.exponent(k)))
            .max()
            .unwrap_or(0)
    }

    /// Bit `k` set iff variable slot `k` occurs.
    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |acc, t| acc | t.0.support())
    }

    /// Moves into `ring`, which must have at least the variables used here.
    pub(crate) fn rehome(&self, ring: &Ring, order: MonomialOrder) -> Polynomial {
        Polynomial::from_terms(ring, order, self.terms.clone())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_terms(&self.ring, &self.terms))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the rings differ.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$inner(rhs).expect("polynomials from different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = self.ring.field();
        self.scale(f.neg(1))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
