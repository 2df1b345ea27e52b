//! Monomial orders: lex, grevlex, and block elimination orders.
//!
//! A block order compares the eliminated variables first (by grevlex), so
//! any basis element whose leading term avoids them lies entirely in the
//! subring without them; that is what elimination and intersection use.

use crate::monomial::{cmp_grevlex, cmp_grevlex_masked, Monomial};
use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

/// A set of variable indices, as a bitmask (rings stay below 64 variables).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VarSet(pub u64);

impl VarSet {
    pub fn empty() -> Self {
        VarSet(0)
    }

    pub fn single(v: usize) -> Self {
        VarSet(1 << v)
    }

    pub fn from_vars(vars: &[usize]) -> Self {
        let mut m = 0u64;
        for &v in vars {
            m |= 1 << v;
        }
        VarSet(m)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut m = self.0;
        core::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }
}

/// A total order on monomials of a fixed ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonomialOrder {
    /// Pure lexicographic, variable 0 heaviest.
    Lex,
    /// Graded reverse lexicographic; the default everywhere an order is not
    /// forced by elimination.
    Grevlex,
    /// Eliminates the variables in `head`: grevlex on `head` first, then
    /// grevlex on the remaining variables.
    Block { head: VarSet },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => crate::monomial::cmp_lex(a, b),
            MonomialOrder::Grevlex => cmp_grevlex(a, b),
            MonomialOrder::Block { head } => cmp_grevlex_masked(a, b, head.0)
                .then_with(|| cmp_grevlex_masked(a, b, !head.0)),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => String::from("lex"),
            MonomialOrder::Grevlex => String::from("grevlex"),
            MonomialOrder::Block { head } => format!("block(0x{:x})", head.0),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn block_order_eliminates_head() {
        // head = {2}; monomials containing variable 2 dominate all others.
        let ord = MonomialOrder::Block {
            head: VarSet::single(2),
        };
        assert_eq!(
            ord.compare(&m(&[0, 0, 1]), &m(&[9, 9, 0])),
            Ordering::Greater
        );
        assert_eq!(
            ord.compare(&m(&[2, 1, 0]), &m(&[1, 2, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn varset_iteration() {
        let s = VarSet::from_vars(&[0, 3, 5]);
        assert_eq!(s.iter().collect::<alloc::vec::Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(1));
    }

    fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..5, n).prop_map(|e| Monomial::from_exps(&e))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::Grevlex),
            (1u64..31).prop_map(|mask| MonomialOrder::Block {
                head: VarSet(mask)
            }),
        ]
    }

    proptest! {
        // A monomial order is total, respects multiplication, and has 1 as
        // its least element.
        #[test]
        fn order_axioms(ord in arb_order(),
                        a in arb_monomial(5),
                        b in arb_monomial(5),
                        c in arb_monomial(5)) {
            prop_assert_eq!(ord.compare(&a, &b), ord.compare(&b, &a).reverse());
            prop_assert_eq!(
                ord.compare(&a.mul(&c), &b.mul(&c)),
                ord.compare(&a, &b)
            );
            let one = Monomial::one(5);
            if !a.is_one() {
                prop_assert_eq!(ord.compare(&a, &one), Ordering::Greater);
            }
        }

        #[test]
        fn order_is_transitive(ord in arb_order(),
                               a in arb_monomial(4),
                               b in arb_monomial(4),
                               c in arb_monomial(4)) {
            if ord.compare(&a, &b) != Ordering::Greater
                && ord.compare(&b, &c) != Ordering::Greater {
                prop_assert_ne!(ord.compare(&a, &c), Ordering::Greater);
            }
        }
    }
}
