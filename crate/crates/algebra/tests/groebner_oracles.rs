//! Groebner bases and ideal operations against naive oracles.

use bei_algebra::*;
use proptest::prelude::*;

const P: u32 = 101;

fn ring() -> Ring {
    let budget = Budget {
        max_pairs: 4000,
        max_degree: 24,
        max_terms: 5000,
        max_steps: 20_000,
        ..Budget::default()
    };
    Ring::custom(["a", "b", "c", "d"], P)
        .unwrap()
        .with_budget(budget)
}

/// Unwraps, discarding the case on a budget error.
macro_rules! within_budget {
    ($e:expr) => {
        match $e {
            Err(e) if e.is_resource() => return Err(TestCaseError::reject(format!("{e}"))),
            other => other.unwrap(),
        }
    };
}

/// Buchberger without any pair pruning: add every nonzero S-remainder until
/// a full pass adds nothing, then minimalize and interreduce.
fn naive_gb(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let mut g: Vec<Polynomial> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.with_order(order).monic())
        .collect();
    loop {
        let mut added = false;
        let snapshot = g.clone();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                let r = s_polynomial(&snapshot[i], &snapshot[j])
                    .unwrap()
                    .normal_form(&g)
                    .unwrap();
                if !r.is_zero() {
                    g.push(r.monic());
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    // minimal: drop elements whose lead is divisible by another lead
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let lp = p.lead_monomial().unwrap();
        let redundant = g.iter().enumerate().any(|(j, q)| {
            let lq = q.lead_monomial().unwrap();
            j != i && lq.divides(lp) && (lq != lp || j < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            minimal[i].normal_form(&others).unwrap().monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));
    reduced
}

fn arb_poly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(
        (proptest::collection::vec(0..=max_exp, 4), 1u32..P),
        1..=max_terms,
    )
    .prop_map(|terms| {
        let r = ring();
        let terms = terms
            .into_iter()
            .map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), c))
            .collect();
        Polynomial::from_terms(&r, MonomialOrder::DegRevLex, terms)
    })
}

/// Random homogeneous polynomial of the given degree.
fn arb_homogeneous(deg: u32) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((0usize..4, 0usize..4, 0usize..4, 1u32..P), 1..4).prop_map(
        move |raw| {
            let r = ring();
            let terms = raw
                .into_iter()
                .map(|(a, b, c, coef)| {
                    let mut e = [0u32; 4];
                    e[a] += 1;
                    e[b] += 1;
                    if deg == 3 {
                        e[c] += 1;
                    }
                    (Monomial::from_exponents(&e).unwrap(), coef)
                })
                .collect();
            Polynomial::from_terms(&r, MonomialOrder::DegRevLex, terms)
        },
    )
}

fn arb_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    proptest::collection::vec(arb_poly(3, 1), 1..4)
}

fn arb_homogeneous_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    proptest::collection::vec(prop_oneof![arb_homogeneous(2), arb_homogeneous(3)], 1..4)
}

fn orders() -> [MonomialOrder; 3] {
    [
        MonomialOrder::DegRevLex,
        MonomialOrder::Lex,
        MonomialOrder::elimination([0], false),
    ]
}

#[test]
fn known_bases() {
    let r = ring();
    let gens = parse_list(&r, "a*b - c^2, b^2 - a*d").unwrap();
    for ord in orders() {
        assert_eq!(groebner_basis(&gens, ord).unwrap(), naive_gb(&gens, ord));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_naive_buchberger(gens in arb_ideal()) {
        for ord in orders() {
            let fast = within_budget!(groebner_basis(&gens, ord));
            prop_assert_eq!(&fast, &naive_gb(&gens, ord));
            prop_assert!(is_groebner_basis(&fast).unwrap());
        }
    }

    #[test]
    fn basis_ignores_generator_order_and_scaling(gens in arb_ideal(), k in 1u32..P) {
        let mut shuffled: Vec<Polynomial> = gens.iter().rev().map(|g| g.scale(k)).collect();
        shuffled.push(&gens[0] + &gens[gens.len() - 1]);
        let a = Ideal::new(&ring(), gens).unwrap();
        let b = Ideal::new(&ring(), shuffled.clone()).unwrap();
        // b may be larger only by the sum, which lies in a
        prop_assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn membership_matches_normal_form(gens in arb_ideal(), f in arb_poly(3, 2), g in arb_poly(2, 1)) {
        let ideal = Ideal::new(&ring(), gens.clone()).unwrap();
        let combo = &(&f * &gens[0]) + &(&g * &gens[gens.len() - 1]);
        prop_assert!(ideal.contains(&combo).unwrap());
        let gb = ideal.gb().unwrap();
        let nf = f.normal_form(gb).unwrap();
        prop_assert_eq!(nf.normal_form(gb).unwrap(), nf.clone());
        prop_assert_eq!(ideal.contains(&f).unwrap(), nf.is_zero());
        // f - NF(f) always lies in the ideal
        prop_assert!(ideal.contains(&(&f - &nf)).unwrap());
    }

    #[test]
    fn homogeneous_input_gives_homogeneous_basis(a in arb_homogeneous(2), b in arb_homogeneous(3), c in arb_homogeneous(2)) {
        for ord in orders() {
            for g in groebner_basis(&[a.clone(), b.clone(), c.clone()], ord).unwrap() {
                prop_assert!(g.is_homogeneous());
            }
        }
    }

    #[test]
    fn intersection_laws(i in arb_homogeneous_ideal(), j in arb_homogeneous_ideal(), k in arb_homogeneous_ideal()) {
        let r = ring();
        let (i, j, k) = (Ideal::new(&r, i).unwrap(), Ideal::new(&r, j).unwrap(), Ideal::new(&r, k).unwrap());
        let ij = i.intersect(&j).unwrap();
        prop_assert!(ij.equals(&j.intersect(&i).unwrap()).unwrap());
        prop_assert!(i.contains_ideal(&ij).unwrap() && j.contains_ideal(&ij).unwrap());
        prop_assert!(ij.contains_ideal(&i.product(&j).unwrap()).unwrap());
        let left = ij.intersect(&k).unwrap();
        let right = i.intersect(&j.intersect(&k).unwrap()).unwrap();
        prop_assert!(left.equals(&right).unwrap());
        prop_assert!(i.intersect(&i).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn quotient_times_element_lies_in_ideal(i in arb_ideal(), f in arb_poly(2, 1)) {
        let ideal = Ideal::new(&ring(), i).unwrap();
        let q = ideal.quotient(&f).unwrap();
        for g in q.generators() {
            prop_assert!(ideal.contains(&(g * &f)).unwrap());
        }
        prop_assert!(q.contains_ideal(&ideal).unwrap());
    }

    #[test]
    fn elimination_ignores_order_inside_blocks(i in arb_ideal()) {
        let ideal = Ideal::new(&ring(), i).unwrap();
        let a = within_budget!(ideal.eliminate_with(&[0, 1], false));
        let b = within_budget!(ideal.eliminate_with(&[0, 1], true));
        prop_assert!(a.equals(&b).unwrap());
        for g in a.generators() {
            prop_assert_eq!(g.support() & 0b11, 0);
            prop_assert!(ideal.contains(g).unwrap());
        }
    }

    #[test]
    fn dimension_bounds(i in arb_ideal()) {
        let ideal = Ideal::new(&ring(), i).unwrap();
        let d = ideal.krull_dim().unwrap();
        prop_assert!((-1..=3).contains(&d));
        // adding a variable drops the dimension by at most one
        let bigger = ideal.plus_variables([3]).unwrap();
        let d2 = bigger.krull_dim().unwrap();
        prop_assert!(d2 <= d && (d2 >= d - 1 || d2 == -1));
    }
}
