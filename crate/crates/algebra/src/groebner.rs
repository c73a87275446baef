//! Buchberger's algorithm with the Gebauer–Möller installation of the chain
//! and product criteria, normal selection strategy.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{make_monic, reduce, try_add_scaled, Polynomial, Term};
use crate::ring::{Budget, Ring};
use crate::AlgebraError;

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State {
    f: Field,
    ord: MonomialOrder,
    budget: Budget,
    polys: Vec<Vec<Term>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

fn lead(p: &[Term]) -> Monomial {
    p[0].0
}

fn s_poly(a: &[Term], b: &[Term], f: Field, ord: MonomialOrder) -> Result<Vec<Term>, AlgebraError> {
    let l = lead(a).lcm(lead(b));
    let ma = l.div(lead(a));
    let mb = l.div(lead(b));
    // both leads monic; the lcm terms cancel
    let left = try_add_scaled(&[], 1, ma, &a[1..], f, ord)?;
    try_add_scaled(&left, f.neg(1), mb, &b[1..], f, ord)
}

impl State {
    fn active_refs(&self) -> Vec<&[Term]> {
        self.active
            .iter()
            .map(|&k| self.polys[k].as_slice())
            .collect()
    }

    fn insert(&mut self, h: Vec<Term>) {
        let hi = self.polys.len();
        let lh = lead(&h);
        self.polys.push(h);

        let cands: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: hi,
                lcm: lead(&self.polys[g]).lcm(lh),
            })
            .collect();
        // chain criterion among the new pairs
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            let ga = lead(&self.polys[cands[a].i]);
            if ga.is_coprime(lh) {
                continue;
            }
            // pairs still in C (later ones) or already accepted into D (earlier survivors)
            let dominated = cands
                .iter()
                .enumerate()
                .any(|(b, pb)| b != a && (b > a || keep[b]) && pb.lcm.divides(cands[a].lcm));
            if dominated {
                keep[a] = false;
            }
        }
        let new_pairs: Vec<Pair> = cands
            .into_iter()
            .zip(keep)
            .filter(|(p, k)| *k && !lead(&self.polys[p.i]).is_coprime(lh))
            .map(|(p, _)| p)
            .collect();
        // prune old pairs whose lcm is divisible by the new lead
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(p.lcm)
                && lead(&polys[p.i]).lcm(lh) != p.lcm
                && lead(&polys[p.j]).lcm(lh) != p.lcm)
        });
        self.pairs.extend(new_pairs);
        self.active.retain(|&g| !lh.divides(lead(&polys[g])));
        self.active.push(hi);
    }

    fn select(&mut self) -> Option<Pair> {
        let best = (0..self.pairs.len()).min_by_key(|&k| {
            let p = self.pairs[k];
            (p.lcm.degree(), p.i, p.j)
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Groebner basis of the term lists (any order, any scaling), sorted
/// by descending lead monomial. Each element is monic.
pub(crate) fn buchberger(
    gens: Vec<Vec<Term>>,
    f: Field,
    ord: MonomialOrder,
    budget: Budget,
) -> Result<Vec<Vec<Term>>, AlgebraError> {
    let mut st = State {
        f,
        ord,
        budget,
        polys: vec![],
        active: vec![],
        pairs: vec![],
    };
    let mut gens: Vec<Vec<Term>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_by(|a, b| ord.cmp(lead(a), lead(b)).then(a.len().cmp(&b.len())));
    for g in gens {
        let mut h = reduce(g, &st.active_refs(), f, ord, true, &budget)?;
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h, f);
        if lead(&h).is_one() {
            return Ok(vec![h]);
        }
        st.insert(h);
    }
    let mut processed = 0usize;
    while let Some(pair) = st.select() {
        processed += 1;
        if processed > st.budget.max_pairs {
            return Err(AlgebraError::Budget {
                what: "S-pairs",
                limit: st.budget.max_pairs,
            });
        }
        if pair.lcm.degree() > st.budget.max_degree {
            return Err(AlgebraError::Budget {
                what: "S-pair degree",
                limit: st.budget.max_degree as usize,
            });
        }
        let s = s_poly(&st.polys[pair.i], &st.polys[pair.j], st.f, st.ord)?;
        let mut h = reduce(s, &st.active_refs(), st.f, st.ord, true, &st.budget)?;
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h, st.f);
        if lead(&h).is_one() {
            return Ok(vec![h]);
        }
        st.insert(h);
    }
    // interreduce: leads are already minimal, so only tails change
    let basis: Vec<Vec<Term>> = st.active.iter().map(|&k| st.polys[k].clone()).collect();
    let mut out = Vec::with_capacity(basis.len());
    for (idx, g) in basis.iter().enumerate() {
        let others: Vec<&[Term]> = basis
            .iter()
            .enumerate()
            .filter(|&(o, _)| o != idx)
            .map(|(_, p)| p.as_slice())
            .collect();
        let mut tail = reduce(g[1..].to_vec(), &others, st.f, st.ord, true, &st.budget)?;
        let mut h = vec![g[0]];
        h.append(&mut tail);
        out.push(h);
    }
    out.sort_by(|a, b| ord.cmp(lead(b), lead(a)));
    Ok(out)
}

fn common_ring(polys: &[Polynomial]) -> Result<Option<Ring>, AlgebraError> {
    let Some(first) = polys.first() else {
        return Ok(None);
    };
    if polys.iter().any(|p| p.ring() != first.ring()) {
        return Err(AlgebraError::RingMismatch);
    }
    Ok(Some(first.ring().clone()))
}

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
/// The empty list and the zero ideal give an empty basis.
pub fn groebner_basis(
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<Vec<Polynomial>, AlgebraError> {
    let Some(ring) = common_ring(gens)? else {
        return Ok(vec![]);
    };
    let terms = gens
        .iter()
        .map(|g| g.with_order(order).into_terms())
        .collect();
    let gb = buchberger(terms, ring.field(), order, ring.budget())?;
    Ok(gb
        .into_iter()
        .map(|t| Polynomial::from_sorted(&ring, order, t))
        .collect())
}

/// `S(f, g)` with both leads normalized to 1, in the order of `f`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, AlgebraError> {
    if f.ring() != g.ring() {
        return Err(AlgebraError::RingMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.ring()).with_order(f.order()));
    }
    let a = f.monic();
    let b = g.with_order(f.order()).monic();
    let s = s_poly(a.terms(), b.terms(), f.ring().field(), f.order())?;
    Ok(Polynomial::from_sorted(f.ring(), f.order(), s))
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> Result<bool, AlgebraError> {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            if !s_polynomial(f, g)?.normal_form(basis)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_list;

    #[test]
    fn principal_and_unit() {
        let r = Ring::binomial(2, 32003).unwrap();
        let gb = groebner_basis(&parse_list(&r, "x1").unwrap(), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb, parse_list(&r, "x1").unwrap());
        let gb = groebner_basis(
            &parse_list(&r, "x1 + 1, x1").unwrap(),
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        assert_eq!(gb, parse_list(&r, "1").unwrap());
        assert!(groebner_basis(&[], MonomialOrder::Lex).unwrap().is_empty());
    }

    #[test]
    fn complete_graph_minors_are_a_lex_basis() {
        let r = Ring::binomial(3, 32003).unwrap();
        let gens: Vec<Polynomial> = parse_list(&r, "x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2")
            .unwrap()
            .into_iter()
            .map(|p| p.with_order(MonomialOrder::Lex))
            .collect();
        assert!(is_groebner_basis(&gens).unwrap());
        let gb = groebner_basis(&gens, MonomialOrder::Lex).unwrap();
        assert_eq!(gb.len(), 3);
    }

    #[test]
    fn path_generators_have_coprime_leads() {
        let r = Ring::binomial(3, 32003).unwrap();
        for ord in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let gens: Vec<Polynomial> = parse_list(&r, "x1*y2 - x2*y1, x2*y3 - x3*y2")
                .unwrap()
                .into_iter()
                .map(|p| p.with_order(ord))
                .collect();
            assert_eq!(groebner_basis(&gens, ord).unwrap().len(), 2);
        }
    }

    #[test]
    fn claw_needs_cubics_under_lex() {
        let r = Ring::binomial(4, 32003).unwrap();
        let gens: Vec<Polynomial> = parse_list(&r, "x1*y2 - x2*y1, x1*y3 - x3*y1, x1*y4 - x4*y1")
            .unwrap()
            .into_iter()
            .map(|p| p.with_order(MonomialOrder::Lex))
            .collect();
        let gb = groebner_basis(&gens, MonomialOrder::Lex).unwrap();
        assert!(gb.len() > 3);
        let cubic = Polynomial::parse(&r, "x2*y1*y3 - x3*y1*y2")
            .unwrap()
            .with_order(MonomialOrder::Lex);
        assert!(gb.contains(&cubic));
        assert!(is_groebner_basis(&gb).unwrap());
    }

    #[test]
    fn budget_is_a_hard_error() {
        let r = Ring::binomial(3, 32003).unwrap().with_budget(Budget {
            max_pairs: 0,
            ..Budget::default()
        });
        let gens = parse_list(&r, "x1*y2 - x2*y1, x2*y3 - x3*y2, x1*y3 - x3*y1").unwrap();
        assert!(matches!(
            groebner_basis(&gens, MonomialOrder::Lex),
            Err(AlgebraError::Budget {
                what: "S-pairs",
                ..
            })
        ));
    }
}
