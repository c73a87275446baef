use std::cmp::Ordering;

use crate::monomial::{lane_mask, Monomial};

/// Monomial orders on packed monomials. Slot 0 is the largest variable, so
/// in a binomial ring `x_1 > ... > x_n > y_1 > ... > y_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    /// Compares the `block` part first, then the rest; both parts with
    /// degrevlex, or with lex when `lex_within` is set. Any monomial involving
    /// a block variable beats every monomial free of them.
    Elimination {
        block: u128,
        lex_within: bool,
    },
}

#[inline]
fn degrevlex(a: Monomial, b: Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.packed().cmp(&a.packed()))
}

#[inline]
fn lex(a: Monomial, b: Monomial) -> Ordering {
    let d = a.packed() ^ b.packed();
    if d == 0 {
        return Ordering::Equal;
    }
    let shift = d.trailing_zeros() / 8 * 8;
    ((a.packed() >> shift) & 0xFF).cmp(&((b.packed() >> shift) & 0xFF))
}

impl MonomialOrder {
    pub fn elimination(slots: impl IntoIterator<Item = usize>, lex_within: bool) -> MonomialOrder {
        MonomialOrder::Elimination {
            block: lane_mask(slots),
            lex_within,
        }
    }

    #[inline]
    pub fn cmp(self, a: Monomial, b: Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Elimination { block, lex_within } => {
                let inner = if lex_within { lex } else { degrevlex };
                inner(a.restrict(block), b.restrict(block))
                    .then_with(|| inner(a.restrict(!block), b.restrict(!block)))
            }
        }
    }

    /// Whether every monomial involving a slot of `mask` is larger than every
    /// monomial free of them.
    pub fn eliminates(self, mask: u128) -> bool {
        match self {
            MonomialOrder::Elimination { block, .. } => mask & !block == 0,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn known_comparisons() {
        // x1*y2 vs x2*y1 in slots (x1, x2, y1, y2)
        let x1y2 = mono(&[1, 0, 0, 1]);
        let x2y1 = mono(&[0, 1, 1, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(x1y2, x2y1), Ordering::Greater);
        // degrevlex: the monomial with the smaller last variable exponent wins
        assert_eq!(MonomialOrder::DegRevLex.cmp(x1y2, x2y1), Ordering::Less);
        assert_eq!(
            MonomialOrder::DegRevLex.cmp(mono(&[0, 0, 0, 2]), mono(&[1])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::Lex.cmp(mono(&[0, 0, 0, 2]), mono(&[1])),
            Ordering::Less
        );
        let elim = MonomialOrder::elimination([3], false);
        assert_eq!(
            elim.cmp(mono(&[0, 0, 0, 1]), mono(&[5, 5, 5])),
            Ordering::Greater
        );
    }

    fn arb() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, 6).prop_map(|e| mono(&e))
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::DegRevLex,
            MonomialOrder::Lex,
            MonomialOrder::elimination([5], false),
            MonomialOrder::elimination([0, 4], true),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_total_and_well_founded(a in arb(), b in arb(), c in arb()) {
            for o in orders() {
                prop_assert_eq!(o.cmp(a, b) == Ordering::Equal, a == b);
                prop_assert_eq!(o.cmp(a, b), o.cmp(a.mul(c), b.mul(c)));
                prop_assert_ne!(o.cmp(a.mul(c), a), Ordering::Less);
                if o.cmp(a, b) == Ordering::Less && o.cmp(b, c) == Ordering::Less {
                    prop_assert_eq!(o.cmp(a, c), Ordering::Less);
                }
            }
        }
    }
}
