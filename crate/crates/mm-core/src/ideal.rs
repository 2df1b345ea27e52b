//! Ideals: a generator list plus cached reduced Groebner bases.
//!
//! The cache is keyed by monomial order. Under the `std` feature it sits
//! behind an `RwLock`, so shared ideals can be queried from several threads;
//! without `std` a `RefCell` serves the single-threaded case.

use crate::error::CoreError;
use crate::groebner::{buchberger, Budget, Gb};
use crate::order::MonomialOrder;
use crate::poly::Poly;
use crate::ring::{same_ring, Ring};
use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

#[cfg(feature = "std")]
use std::sync::RwLock;

#[cfg(not(feature = "std"))]
use core::cell::RefCell;

#[cfg(feature = "std")]
#[derive(Default)]
struct Cache(RwLock<BTreeMap<MonomialOrder, Arc<Gb>>>);

#[cfg(feature = "std")]
impl Cache {
    fn get(&self, k: &MonomialOrder) -> Option<Arc<Gb>> {
        self.0.read().unwrap().get(k).cloned()
    }
    fn put(&self, k: MonomialOrder, v: Arc<Gb>) {
        self.0.write().unwrap().insert(k, v);
    }
}

#[cfg(not(feature = "std"))]
#[derive(Default)]
struct Cache(RefCell<BTreeMap<MonomialOrder, Arc<Gb>>>);

#[cfg(not(feature = "std"))]
impl Cache {
    fn get(&self, k: &MonomialOrder) -> Option<Arc<Gb>> {
        self.0.borrow().get(k).cloned()
    }
    fn put(&self, k: MonomialOrder, v: Arc<Gb>) {
        self.0.borrow_mut().insert(k, v);
    }
}

/// An ideal of a polynomial ring, presented by generators.
///
/// Cloning is cheap and clones share the basis cache. The generator list
/// keeps its construction order: catalog families are indexed lists, and
/// representation certificates align coefficients with generators.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Arc<Vec<Poly>>,
    cache: Arc<Cache>,
}

impl Ideal {
    /// Builds an ideal from generators, dropping zeros.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Poly>) -> Ideal {
        for g in &gens {
            assert!(same_ring(g.ring(), ring), "generator from a different ring");
        }
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring: ring.clone(),
            gens: Arc::new(gens),
            cache: Arc::new(Cache::default()),
        }
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    /// The reduced Groebner basis under `order`, computed once and cached.
    pub fn groebner(&self, order: MonomialOrder, budget: Budget) -> Result<Arc<Gb>, CoreError> {
        if let Some(gb) = self.cache.get(&order) {
            return Ok(gb);
        }
        let gb = Arc::new(buchberger(&self.ring, &self.gens, order, budget)?);
        self.cache.put(order, gb.clone());
        Ok(gb)
    }

    /// Same ideal presented by its reduced grevlex basis; useful to keep
    /// generator lists short across chained operations.
    pub fn simplified(&self, budget: Budget) -> Result<Ideal, CoreError> {
        let gb = self.groebner(MonomialOrder::Grevlex, budget)?;
        let out = Ideal::new(&self.ring, gb.polys().to_vec());
        out.cache.put(MonomialOrder::Grevlex, gb);
        Ok(out)
    }
}

impl core::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Ideal({} gens)", self.gens.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_poly;

    #[test]
    fn cache_shares_across_clones() {
        let r = Ring::new(Field::new(13, 2).unwrap(), &["x", "y"]);
        let i = Ideal::new(
            &r,
            alloc::vec![
                parse_poly(&r, "x^2 - y").unwrap(),
                parse_poly(&r, "y^2 - x").unwrap()
            ],
        );
        let j = i.clone();
        let a = i.groebner(MonomialOrder::Lex, Budget::DEFAULT).unwrap();
        let b = j.groebner(MonomialOrder::Lex, Budget::DEFAULT).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn zero_generators_are_dropped() {
        let r = Ring::new(Field::new(13, 2).unwrap(), &["x", "y"]);
        let z = parse_poly(&r, "x - x").unwrap();
        let i = Ideal::new(&r, alloc::vec![z, parse_poly(&r, "y").unwrap()]);
        assert_eq!(i.num_gens(), 1);
    }

    #[test]
    fn simplified_uses_reduced_basis() {
        let r = Ring::new(Field::new(13, 2).unwrap(), &["x", "y"]);
        let i = Ideal::new(
            &r,
            alloc::vec![
                parse_poly(&r, "x + y").unwrap(),
                parse_poly(&r, "2*x + 2*y").unwrap(),
                parse_poly(&r, "3*x + 3*y").unwrap()
            ],
        );
        let s = i.simplified(Budget::DEFAULT).unwrap();
        assert_eq!(s.num_gens(), 1);
    }
}
