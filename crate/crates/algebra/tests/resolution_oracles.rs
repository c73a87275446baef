//! Minimal free resolutions against Koszul homology, K-polynomials of
//! initial ideals, and linear algebra on syzygy modules.

use std::collections::BTreeMap;

use bei_algebra::*;
use proptest::prelude::*;

const P: u32 = 101;
const NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn ring() -> Ring {
    Ring::custom(NAMES, P).unwrap()
}

fn arb_monomial(deg: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0usize..4, deg as usize).prop_map(|slots| {
        let mut e = [0u32; 4];
        for s in slots {
            e[s] += 1;
        }
        Monomial::from_exponents(&e).unwrap()
    })
}

fn arb_homogeneous() -> impl Strategy<Value = Polynomial> {
    (2u32..=3).prop_flat_map(|deg| {
        proptest::collection::vec((arb_monomial(deg), 1u32..P), 1..4)
            .prop_map(|terms| Polynomial::from_terms(&ring(), MonomialOrder::DegRevLex, terms))
    })
}

fn arb_ideal() -> impl Strategy<Value = Ideal> {
    proptest::collection::vec(arb_homogeneous(), 1..4).prop_map(|g| Ideal::new(&ring(), g).unwrap())
}

fn arb_monomial_ideal() -> impl Strategy<Value = Ideal> {
    proptest::collection::vec((1u32..=3).prop_flat_map(arb_monomial), 1..5).prop_map(|ms| {
        let r = ring();
        Ideal::new(&r, ms.into_iter().map(|m| Polynomial::monomial(&r, m, 1))).unwrap()
    })
}

/// Numerator of the Hilbert series of `S/(gens)` for monomials `gens`, by
/// `K(S/(J + (m))) = K(S/J) - t^deg(m) K(S/(J : m))`.
fn k_polynomial(gens: &[Monomial]) -> BTreeMap<usize, i64> {
    fn rec(gens: &[Monomial]) -> BTreeMap<usize, i64> {
        let mut minimal: Vec<Monomial> = Vec::new();
        for &m in gens {
            if !minimal.iter().any(|g| g.divides(m)) {
                minimal.retain(|g| !m.divides(*g));
                minimal.push(m);
            }
        }
        let Some((&last, rest)) = minimal.split_last() else {
            return BTreeMap::from([(0, 1)]);
        };
        if last.is_one() {
            return BTreeMap::new();
        }
        let mut out = rec(rest);
        let colon: Vec<Monomial> = rest.iter().map(|&g| g.div(g.gcd(last))).collect();
        for (k, v) in rec(&colon) {
            *out.entry(k + last.degree() as usize).or_insert(0) -= v;
        }
        out.retain(|_, v| *v != 0);
        out
    }
    rec(gens)
}

/// Monomials of degree `d` in four variables.
fn monomials_of_degree(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                out.push(Monomial::from_exponents(&[a, b, c, d - a - b - c]).unwrap());
            }
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn regular_sequences_give_koszul_tables() {
    let r = ring();
    let i = Ideal::parse(&r, "a^2, b^3, c*d").unwrap();
    let t = minimal_free_resolution(&i).unwrap();
    let expected: BTreeMap<(usize, usize), u64> = [
        ((0, 0), 1),
        ((1, 2), 2),
        ((1, 3), 1),
        ((2, 4), 1),
        ((2, 5), 2),
        ((3, 7), 1),
    ]
    .into();
    assert_eq!(t.iter().collect::<BTreeMap<_, _>>(), expected);

    let max = Ideal::variables(&r, [0, 1, 2, 3]);
    let t = minimal_free_resolution(&max).unwrap();
    for k in 0..=4 {
        assert_eq!(t.get(k, k), binomial(4, k as u64));
    }
    assert_eq!(t.pd_quotient(), Some(4));
    assert_eq!(t.reg_ideal(), Some(1));
}

#[test]
fn twisted_cubic() {
    let r = ring();
    let i = Ideal::parse(&r, "a*c - b^2, a*d - b*c, b*d - c^2").unwrap();
    let t = minimal_free_resolution(&i).unwrap();
    assert_eq!(
        (t.get(0, 0), t.get(1, 2), t.get(2, 3), t.total(3)),
        (1, 3, 2, 0)
    );
    assert_eq!(t, koszul_betti_oracle(&i).unwrap());
    assert_eq!(regularity_ideal(&i).unwrap(), Some(2));
}

#[test]
fn zero_and_unit_ideals() {
    let r = ring();
    assert_eq!(
        minimal_free_resolution(&Ideal::zero(&r)).unwrap(),
        BettiTable::of_ring()
    );
    assert!(minimal_free_resolution(&Ideal::unit(&r))
        .unwrap()
        .is_empty());
    assert_eq!(regularity_ideal(&Ideal::zero(&r)).unwrap(), Some(0));
    assert_eq!(regularity_quotient(&Ideal::unit(&r)).unwrap(), None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schreyer_matches_koszul_homology(i in arb_ideal()) {
        prop_assert_eq!(minimal_free_resolution(&i).unwrap(), koszul_betti_oracle(&i).unwrap());
    }

    #[test]
    fn monomial_ideals_match_koszul_homology(i in arb_monomial_ideal()) {
        prop_assert_eq!(minimal_free_resolution(&i).unwrap(), koszul_betti_oracle(&i).unwrap());
    }

    #[test]
    fn hilbert_numerator_matches_initial_ideal(i in arb_ideal()) {
        let t = minimal_free_resolution(&i).unwrap();
        prop_assert_eq!(t.hilbert_numerator(), k_polynomial(&i.lead_monomials().unwrap()));
    }

    #[test]
    fn tables_do_not_depend_on_the_order(i in arb_ideal()) {
        let base = minimal_free_resolution(&i).unwrap();
        prop_assert_eq!(&minimal_free_resolution_with_order(&i, MonomialOrder::Lex).unwrap(), &base);
        let elim = MonomialOrder::elimination([1, 2], true);
        prop_assert_eq!(&minimal_free_resolution_with_order(&i, elim).unwrap(), &base);
    }

    #[test]
    fn shape_invariants(i in arb_ideal()) {
        let t = minimal_free_resolution(&i).unwrap();
        if i.is_unit().unwrap() {
            prop_assert!(t.is_empty());
            return Ok(());
        }
        prop_assert_eq!(t.get(0, 0), 1);
        prop_assert!(t.pd_quotient().unwrap() <= 4);
        prop_assert_eq!(t.reg_ideal(), t.reg_quotient().map(|r| r + 1));
        prop_assert_eq!(t.pd_ideal(), t.pd_quotient().map(|p| p - 1));
        // the alternating sum of Betti numbers is the Hilbert numerator at t = 1
        let euler: i64 = t.hilbert_numerator().values().sum();
        prop_assert_eq!(euler, 0);
        // minimal generators are at most the given ones, and the ideal view shifts rows
        prop_assert!(t.total(1) as usize <= i.generators().len());
        prop_assert_eq!(betti_of_ideal(&t).total(0), t.total(1));
        // Betti numbers only grow under passage to the initial ideal
        prop_assert!(t.le_entrywise(&minimal_free_resolution(&i.initial_ideal().unwrap()).unwrap()));
    }

    #[test]
    fn syzygies_span_all_relations(i in arb_ideal()) {
        let r = ring();
        let gens = i.generators().to_vec();
        let pres = GradedPresentation::from_generators(&r, &gens).unwrap();
        let syz = syzygies(&pres).unwrap();
        let degs = pres.column_degrees();
        prop_assert_eq!(syz.target_degrees(), &degs[..]);
        // every output column is a relation
        for col in syz.columns() {
            let mut sum = Polynomial::zero(&r);
            for (c, g) in col.iter().zip(&gens) {
                sum = &sum + &(c * g);
            }
            prop_assert!(sum.is_zero());
        }
        // and in each degree they span the whole kernel of S^r -> S
        let leads = i.lead_monomials().unwrap();
        let syz_degs = syz.column_degrees();
        for d in 2..=6i64 {
            let standard = monomials_of_degree(d as u32).into_iter().filter(|m| !leads.iter().any(|l| l.divides(*m))).count();
            let image = if gens.is_empty() { 0 } else { monomials_of_degree(d as u32).len() - standard };
            let source: usize = degs.iter().filter(|&&e| e <= d).map(|&e| monomials_of_degree((d - e) as u32).len()).sum();
            let kernel = source - image;

            // coordinates: (generator k, monomial of degree d - deg k)
            let mut index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
            let mut entries = Vec::new();
            let mut rows = 0;
            for (col, &e) in syz.columns().iter().zip(&syz_degs) {
                if e > d || col.iter().all(Polynomial::is_zero) {
                    continue;
                }
                for m in monomials_of_degree((d - e) as u32) {
                    for (k, c) in col.iter().enumerate() {
                        for &(t, v) in c.mul_monomial(m).terms() {
                            let next = index.len();
                            let idx = *index.entry((k, t)).or_insert(next);
                            entries.push((rows, idx, v));
                        }
                    }
                    rows += 1;
                }
            }
            let span = rank_sparse(rows, index.len(), &entries, Field::new(P).unwrap());
            prop_assert_eq!(span, kernel, "degree {}", d);
        }
    }
}
