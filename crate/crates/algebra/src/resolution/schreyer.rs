//! Schreyer resolutions and their minimalization.
//!
//! An element of the free module `F_L` is a list of terms `(T, k, c)` standing
//! for `c * (T / M_k) * e_k`, where `M_k` is the lead monomial of the `k`-th
//! element one level down (its "total" monomial). Storing `T` instead of the
//! coefficient monomial makes the induced Schreyer order a plain comparison of
//! `T` followed by the rank of `k`, and makes every term of a homogeneous
//! element carry the element's degree.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::field::Field;
use crate::linalg::rank_sparse;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::resolution::betti::BettiTable;
use crate::ring::{Budget, Ring};
use crate::{AlgebraError, Ideal};

pub(crate) type VTerm = (Monomial, u32, u32);

#[derive(Clone, Copy)]
struct Ctx<'a> {
    f: Field,
    ord: MonomialOrder,
    /// Ranks of the basis vectors of the module the vectors live in.
    rank: &'a [u32],
}

impl Ctx<'_> {
    #[inline]
    fn cmp(&self, a: (Monomial, u32), b: (Monomial, u32)) -> Ordering {
        self.ord
            .cmp(a.0, b.0)
            .then_with(|| self.rank[a.1 as usize].cmp(&self.rank[b.1 as usize]))
    }

    /// `a + c * q * b`.
    fn add_scaled(&self, a: &[VTerm], c: u32, q: Monomial, b: &[VTerm]) -> Vec<VTerm> {
        let f = self.f;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let bt = (b[j].0.mul(q), b[j].1);
            match self.cmp((a[i].0, a[i].1), bt) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bt.0, bt.1, f.mul(c, b[j].2)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(a[i].2, f.mul(c, b[j].2));
                    if s != 0 {
                        out.push((bt.0, bt.1, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(t, k, bc)| (t.mul(q), k, f.mul(c, bc))));
        out
    }

    fn sort(&self, v: &mut [VTerm]) {
        v.sort_by(|a, b| self.cmp((b.0, b.1), (a.0, a.1)));
    }
}

/// One level of a Schreyer frame: elements living in the previous level's
/// free module, each with lead coefficient 1.
struct Level {
    elems: Vec<Vec<VTerm>>,
    /// Total monomial of each element's lead term.
    lead: Vec<Monomial>,
    /// Position of each basis vector in the induced order on this level.
    rank: Vec<u32>,
}

fn ranks(elems: &[Vec<VTerm>], prev_rank: &[u32]) -> Vec<u32> {
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    idx.sort_by_key(|&k| (prev_rank[elems[k][0].1 as usize], k));
    let mut rank = vec![0; elems.len()];
    for (pos, &k) in idx.iter().enumerate() {
        rank[k] = pos as u32;
    }
    rank
}

/// Orders elements by lead component, then by ascending exponent of `var`.
/// With this ordering the leads one level up avoid `var`, so the frame has
/// length at most the number of variables.
fn arrange(mut elems: Vec<Vec<VTerm>>, var: usize) -> Vec<Vec<VTerm>> {
    elems.sort_by_key(|v| (v[0].1, v[0].0.exponent(var)));
    elems
}

fn level(elems: Vec<Vec<VTerm>>, prev_rank: &[u32], var: usize) -> Level {
    let elems = arrange(elems, var);
    let rank = ranks(&elems, prev_rank);
    let lead = elems.iter().map(|v| v[0].0).collect();
    Level { elems, lead, rank }
}

/// Schreyer syzygies of a level that is a Groebner basis of the module it
/// generates, one per minimal generator of each `(M_j : M_i)`, `j < i`.
fn next_level(
    cur: &Level,
    prev_rank: &[u32],
    f: Field,
    ord: MonomialOrder,
    budget: Budget,
    pairs_done: &mut usize,
) -> Result<Vec<Vec<VTerm>>, AlgebraError> {
    let ctx = Ctx {
        f,
        ord,
        rank: prev_rank,
    };
    let mut by_comp: HashMap<u32, Vec<usize>> = HashMap::new();
    for (k, v) in cur.elems.iter().enumerate() {
        by_comp.entry(v[0].1).or_default().push(k);
    }
    let mut out = Vec::new();
    for i in 0..cur.elems.len() {
        let comp = cur.elems[i][0].1;
        let mi = cur.lead[i];
        let mut quotients: Vec<(Monomial, usize)> = by_comp[&comp]
            .iter()
            .take_while(|&&j| j < i)
            .map(|&j| (mi.lcm(cur.lead[j]).div(mi), j))
            .collect();
        quotients.sort_by_key(|&(q, j)| (q.degree(), j));
        let mut minimal: Vec<(Monomial, usize)> = Vec::new();
        for (q, j) in quotients {
            if !minimal.iter().any(|(m, _)| m.divides(q)) {
                minimal.push((q, j));
            }
        }
        for (qi, j) in minimal {
            *pairs_done += 1;
            if *pairs_done > budget.max_pairs {
                return Err(AlgebraError::Budget {
                    what: "syzygy pairs",
                    limit: budget.max_pairs,
                });
            }
            let l = mi.mul(qi);
            if l.degree() > budget.max_degree {
                return Err(AlgebraError::Budget {
                    what: "syzygy degree",
                    limit: budget.max_degree as usize,
                });
            }
            let qj = l.div(cur.lead[j]);
            // the leads cancel, so only the tails enter the S-vector
            let mut s = ctx.add_scaled(
                &scale(&cur.elems[i][1..], qi),
                f.neg(1),
                qj,
                &cur.elems[j][1..],
            );
            let mut syz: Vec<VTerm> = vec![(l, i as u32, 1), (l, j as u32, f.neg(1))];
            while let Some(&(t, k, c)) = s.first() {
                let reducer = by_comp
                    .get(&k)
                    .and_then(|cands| cands.iter().copied().find(|&r| cur.lead[r].divides(t)))
                    .ok_or_else(|| {
                        AlgebraError::InvariantViolation(
                            "Schreyer S-vector does not reduce to zero".into(),
                        )
                    })?;
                let q = t.div(cur.lead[reducer]);
                s = ctx.add_scaled(&s[1..], f.neg(c), q, &cur.elems[reducer][1..]);
                syz.push((t, reducer as u32, f.neg(c)));
                if s.len() > budget.max_terms || syz.len() > budget.max_terms {
                    return Err(AlgebraError::Budget {
                        what: "module vector length",
                        limit: budget.max_terms,
                    });
                }
            }
            out.push(syz);
        }
        if out.len() > budget.max_basis {
            return Err(AlgebraError::Budget {
                what: "resolution level size",
                limit: budget.max_basis,
            });
        }
    }
    let next_ctx = Ctx {
        f,
        ord,
        rank: &cur.rank,
    };
    for v in out.iter_mut() {
        next_ctx.sort(v);
        debug_assert!(v
            .windows(2)
            .all(|w| next_ctx.cmp((w[0].0, w[0].1), (w[1].0, w[1].1)) == Ordering::Greater));
    }
    Ok(out)
}

fn scale(v: &[VTerm], q: Monomial) -> Vec<VTerm> {
    v.iter().map(|&(t, k, c)| (t.mul(q), k, c)).collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Grading {
    Fine,
    Total,
}

pub(crate) fn choose_grading(ideal: &Ideal) -> Result<Grading, AlgebraError> {
    if !ideal.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous);
    }
    Ok(
        if ideal
            .generators()
            .iter()
            .all(Polynomial::is_fine_homogeneous)
        {
            Grading::Fine
        } else {
            Grading::Total
        },
    )
}

pub(crate) fn grading_key(ring: &Ring, grading: Grading, m: Monomial) -> (u32, u128) {
    match grading {
        Grading::Fine => (m.degree(), ring.fine_key(m)),
        Grading::Total => (m.degree(), 0),
    }
}

/// Graded Betti numbers of `S/I` from a Schreyer resolution computed in degrevlex.
pub fn minimal_free_resolution(ideal: &Ideal) -> Result<BettiTable, AlgebraError> {
    minimal_free_resolution_with_order(ideal, MonomialOrder::DegRevLex)
}

/// As [`minimal_free_resolution`], building the frame from a Groebner basis
/// in `order`. The result does not depend on the order.
pub fn minimal_free_resolution_with_order(
    ideal: &Ideal,
    order: MonomialOrder,
) -> Result<BettiTable, AlgebraError> {
    let ring = ideal.ring();
    let grading = choose_grading(ideal)?;
    if ideal.is_zero() {
        return Ok(BettiTable::of_ring());
    }
    let f = ring.field();
    let budget = ring.budget();
    let nvars = ring.nvars();
    let gb = ideal.groebner(order)?;

    let base = Level {
        elems: vec![],
        lead: vec![Monomial::ONE],
        rank: vec![0],
    };
    let first: Vec<Vec<VTerm>> = gb
        .iter()
        .map(|g| g.terms().iter().map(|&(m, c)| (m, 0, c)).collect())
        .collect();
    let mut levels = vec![base];
    let l1 = level(first, &levels[0].rank, 0);
    levels.push(l1);
    let mut pairs_done = 0;
    loop {
        let depth = levels.len() - 1;
        let cur = &levels[depth];
        let next = next_level(
            cur,
            &levels[depth - 1].rank,
            f,
            order,
            budget,
            &mut pairs_done,
        )?;
        if next.is_empty() {
            break;
        }
        if depth + 1 > nvars {
            return Err(AlgebraError::InvariantViolation(format!(
                "Schreyer frame longer than the number of variables ({nvars})"
            )));
        }
        let lvl = level(next, &cur.rank, depth);
        levels.push(lvl);
    }
    Ok(minimal_betti(ring, grading, &levels))
}

/// `β_{i,κ} = #F_i(κ) - rank d_i^0(κ) - rank d_{i+1}^0(κ)`, where `d^0` keeps
/// the constant entries of the differentials.
fn minimal_betti(ring: &Ring, grading: Grading, levels: &[Level]) -> BettiTable {
    let f = ring.field();
    let key = |m: Monomial| grading_key(ring, grading, m);
    // ranks[L][κ] = rank of the constant part of d_L in degree κ
    let mut const_rank: Vec<BTreeMap<(u32, u128), usize>> = vec![BTreeMap::new(); levels.len() + 1];
    for l in 1..levels.len() {
        let prev_lead = &levels[l - 1].lead;
        let mut blocks: BTreeMap<(u32, u128), Vec<(u32, usize, u32)>> = BTreeMap::new();
        for (col, v) in levels[l].elems.iter().enumerate() {
            for &(t, k, c) in v {
                if t == prev_lead[k as usize] {
                    blocks.entry(key(t)).or_default().push((k, col, c));
                }
            }
        }
        for (kappa, entries) in blocks {
            let mut rows: Vec<u32> = entries.iter().map(|e| e.0).collect();
            rows.sort();
            rows.dedup();
            let mut cols: Vec<usize> = entries.iter().map(|e| e.1).collect();
            cols.sort();
            cols.dedup();
            let triples: Vec<(usize, usize, u32)> = entries
                .iter()
                .map(|&(r, c, v)| {
                    (
                        rows.binary_search(&r).expect("row"),
                        cols.binary_search(&c).expect("col"),
                        v,
                    )
                })
                .collect();
            const_rank[l].insert(kappa, rank_sparse(rows.len(), cols.len(), &triples, f));
        }
    }
    let mut table = BettiTable::new();
    for (l, lvl) in levels.iter().enumerate() {
        let mut counts: BTreeMap<(u32, u128), usize> = BTreeMap::new();
        for &m in &lvl.lead {
            *counts.entry(key(m)).or_default() += 1;
        }
        for (kappa, count) in counts {
            let r_in = const_rank[l].get(&kappa).copied().unwrap_or(0);
            let r_out = const_rank[l + 1].get(&kappa).copied().unwrap_or(0);
            let b = count - r_in - r_out;
            table.add(l, kappa.0 as usize, b as u64);
        }
    }
    table
}

/// A graded free presentation: the columns are elements of `⊕ S(-d_k)`.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    ring: Ring,
    degrees: Vec<i64>,
    columns: Vec<Vec<Polynomial>>,
}

impl GradedPresentation {
    /// Every column must have one entry per target generator and be homogeneous
    /// of a single degree once target degrees are added.
    pub fn new(
        ring: &Ring,
        degrees: Vec<i64>,
        columns: Vec<Vec<Polynomial>>,
    ) -> Result<Self, AlgebraError> {
        for col in &columns {
            if col.len() != degrees.len() {
                return Err(AlgebraError::InvalidArgument(format!(
                    "column has {} entries, target has {} generators",
                    col.len(),
                    degrees.len()
                )));
            }
            let mut deg = None;
            for (p, &d) in col.iter().zip(&degrees) {
                if p.ring() != ring {
                    return Err(AlgebraError::RingMismatch);
                }
                for &(m, _) in p.terms() {
                    let e = m.degree() as i64 + d;
                    if *deg.get_or_insert(e) != e {
                        return Err(AlgebraError::NotHomogeneous);
                    }
                }
            }
        }
        Ok(GradedPresentation {
            ring: ring.clone(),
            degrees,
            columns,
        })
    }

    /// Generators of an ideal as a map `S^r -> S`.
    pub fn from_generators(ring: &Ring, gens: &[Polynomial]) -> Result<Self, AlgebraError> {
        GradedPresentation::new(
            ring,
            vec![0],
            gens.iter().map(|g| vec![g.clone()]).collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn target_degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.columns
    }

    /// Degree of each column; zero columns get degree 0.
    pub fn column_degrees(&self) -> Vec<i64> {
        self.columns
            .iter()
            .map(|col| {
                col.iter()
                    .zip(&self.degrees)
                    .find_map(|(p, &d)| p.degree().map(|e| e as i64 + d))
                    .unwrap_or(0)
            })
            .collect()
    }
}

/// A module element with the representation that produced it.
struct Tracked {
    v: Vec<VTerm>,
    lift: Vec<VTerm>,
}

/// Generators of the module of relations among the columns, as a presentation
/// whose target is the column module. Computed from a Groebner basis of the
/// columns with tracked representations under a position-last order.
pub fn syzygies(p: &GradedPresentation) -> Result<GradedPresentation, AlgebraError> {
    let ring = &p.ring;
    let f = ring.field();
    let ord = MonomialOrder::DegRevLex;
    let budget = ring.budget();
    let target_rank: Vec<u32> = (0..p.degrees.len() as u32).collect();
    let lift_rank: Vec<u32> = (0..p.columns.len() as u32).collect();
    let tctx = Ctx {
        f,
        ord,
        rank: &target_rank,
    };
    let lctx = Ctx {
        f,
        ord,
        rank: &lift_rank,
    };

    let mut syz: Vec<Vec<VTerm>> = Vec::new();
    let mut basis: Vec<Tracked> = Vec::new();
    for (ci, col) in p.columns.iter().enumerate() {
        let mut v: Vec<VTerm> = col
            .iter()
            .enumerate()
            .flat_map(|(k, q)| q.terms().iter().map(move |&(m, c)| (m, k as u32, c)))
            .collect();
        tctx.sort(&mut v);
        let lift = vec![(Monomial::ONE, ci as u32, 1)];
        if v.is_empty() {
            syz.push(lift);
            continue;
        }
        basis.push(Tracked { v, lift });
    }
    let normalize = |t: &mut Tracked| {
        let inv = f.inv(t.v[0].2);
        for x in t.v.iter_mut().chain(t.lift.iter_mut()) {
            x.2 = f.mul(x.2, inv);
        }
    };
    basis.iter_mut().for_each(normalize);

    // reduce the S-vector of (i, j) against the basis, tracking its representation
    let reduce_pair = |basis: &[Tracked], i: usize, j: usize| -> Result<Tracked, AlgebraError> {
        let (a, b) = (&basis[i], &basis[j]);
        let l = a.v[0].0.lcm(b.v[0].0);
        if l.degree() > budget.max_degree {
            return Err(AlgebraError::Budget {
                what: "S-pair degree",
                limit: budget.max_degree as usize,
            });
        }
        let (qa, qb) = (l.div(a.v[0].0), l.div(b.v[0].0));
        let mut s = tctx.add_scaled(&scale(&a.v, qa), f.neg(1), qb, &b.v);
        let mut lift = lctx.add_scaled(&scale(&a.lift, qa), f.neg(1), qb, &b.lift);
        let mut rem: Vec<VTerm> = Vec::new();
        while let Some(&(t, k, c)) = s.first() {
            match basis.iter().find(|g| g.v[0].1 == k && g.v[0].0.divides(t)) {
                Some(g) => {
                    let q = t.div(g.v[0].0);
                    s = tctx.add_scaled(&s[1..], f.neg(c), q, &g.v[1..]);
                    lift = lctx.add_scaled(&lift, f.neg(c), q, &g.lift);
                }
                None => {
                    rem.push((t, k, c));
                    s.remove(0);
                }
            }
            if s.len() > budget.max_terms || lift.len() > budget.max_terms {
                return Err(AlgebraError::Budget {
                    what: "module vector length",
                    limit: budget.max_terms,
                });
            }
        }
        Ok(Tracked { v: rem, lift })
    };

    let mut queue: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            if basis[i].v[0].1 == basis[j].v[0].1 {
                queue.push((j, i));
            }
        }
    }
    let mut processed = 0;
    while let Some((j, i)) = queue.pop() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(AlgebraError::Budget {
                what: "S-pairs",
                limit: budget.max_pairs,
            });
        }
        let mut h = reduce_pair(&basis, i, j)?;
        if h.v.is_empty() {
            continue;
        }
        normalize(&mut h);
        let n = basis.len();
        for k in 0..n {
            if basis[k].v[0].1 == h.v[0].1 {
                queue.push((k, n));
            }
        }
        basis.push(h);
    }
    // every pair of the finished basis reduces to zero; the tracked
    // representations of those reductions generate the relations
    for i in 0..basis.len() {
        for j in 0..i {
            if basis[i].v[0].1 == basis[j].v[0].1 {
                let h = reduce_pair(&basis, i, j)?;
                if !h.v.is_empty() {
                    return Err(AlgebraError::InvariantViolation(
                        "module basis is not a Groebner basis".into(),
                    ));
                }
                if !h.lift.is_empty() {
                    syz.push(h.lift);
                }
            }
        }
    }
    let ncols = p.columns.len();
    let mut columns: Vec<Vec<Polynomial>> = Vec::new();
    for v in syz {
        let mut col: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); ncols];
        for (m, k, c) in v {
            col[k as usize].push((m, c));
        }
        let col: Vec<Polynomial> = col
            .into_iter()
            .map(|t| Polynomial::from_terms(ring, ord, t))
            .collect();
        if !columns.contains(&col) {
            columns.push(col);
        }
    }
    GradedPresentation::new(ring, p.column_degrees(), columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::binomial(3, 32003).unwrap()
    }

    fn table(entries: &[(usize, usize, u64)]) -> BettiTable {
        let mut t = BettiTable::new();
        for &(i, j, v) in entries {
            t.set(i, j, v);
        }
        t
    }

    #[test]
    fn small_tables() {
        let r = ring();
        let principal = Ideal::parse(&r, "x1*y2 - x2*y1").unwrap();
        assert_eq!(
            minimal_free_resolution(&principal).unwrap(),
            table(&[(0, 0, 1), (1, 2, 1)])
        );
        let p3 = Ideal::parse(&r, "x1*y2 - x2*y1, x2*y3 - x3*y2").unwrap();
        assert_eq!(
            minimal_free_resolution(&p3).unwrap(),
            table(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)])
        );
        let k3 = Ideal::parse(&r, "x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2").unwrap();
        assert_eq!(
            minimal_free_resolution(&k3).unwrap(),
            table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)])
        );
        assert_eq!(
            minimal_free_resolution(&Ideal::zero(&r)).unwrap(),
            BettiTable::of_ring()
        );
        assert!(minimal_free_resolution(&Ideal::unit(&r))
            .unwrap()
            .is_empty());
        assert!(minimal_free_resolution(&Ideal::parse(&r, "x1 + y1^2").unwrap()).is_err());
    }

    #[test]
    fn order_independent() {
        let r = Ring::binomial(4, 32003).unwrap();
        let claw = Ideal::parse(&r, "x1*y2 - x2*y1, x1*y3 - x3*y1, x1*y4 - x4*y1").unwrap();
        let a = minimal_free_resolution(&claw).unwrap();
        let b = minimal_free_resolution_with_order(&claw, MonomialOrder::Lex).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn presentation_syzygies() {
        let r = ring();
        let one = GradedPresentation::from_generators(
            &r,
            &[Polynomial::parse(&r, "x1*y2 - x2*y1").unwrap()],
        )
        .unwrap();
        assert!(syzygies(&one).unwrap().columns().is_empty());

        let coprime = GradedPresentation::from_generators(
            &r,
            &[
                Polynomial::parse(&r, "x1").unwrap(),
                Polynomial::parse(&r, "y1").unwrap(),
            ],
        )
        .unwrap();
        let s = syzygies(&coprime).unwrap();
        assert_eq!(s.columns().len(), 1);
        assert_eq!(s.column_degrees(), vec![2]);

        let p3 = GradedPresentation::from_generators(
            &r,
            &[
                Polynomial::parse(&r, "x1*y2 - x2*y1").unwrap(),
                Polynomial::parse(&r, "x2*y3 - x3*y2").unwrap(),
            ],
        )
        .unwrap();
        let s = syzygies(&p3).unwrap();
        assert_eq!(s.columns().len(), 1);
        assert_eq!(s.column_degrees(), vec![4]);
        // the relation really is one
        let col = &s.columns()[0];
        let gens = p3.columns();
        let sum = &(&col[0] * &gens[0][0]) + &(&col[1] * &gens[1][0]);
        assert!(sum.is_zero());
    }
}
