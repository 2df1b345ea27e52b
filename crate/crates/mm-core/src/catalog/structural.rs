//! A conservative structural primality test. It strips variables that some
//! generator pins to a polynomial in the remaining ones, then accepts only
//! two residual shapes it can certify: the empty presentation and a single
//! balanced bilinear binomial. Everything else is reported as Unknown, so a
//! Prime answer is always trustworthy.

use alloc::vec::Vec;

use crate::error::CoreError;
use crate::ideal::Ideal;
use crate::poly::Poly;

/// Outcome of the structural test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primality {
    /// The simplified presentation certifies a prime ideal.
    Prime,
    /// The test cannot tell; the ideal may still be prime.
    Unknown,
}

/// Finds a generator of the form c*v + h with v absent from h, and returns
/// the generator index, the variable, and the substitution -h/c.
fn find_substitution(gens: &[Poly]) -> Option<(usize, usize, Poly)> {
    for (gi, g) in gens.iter().enumerate() {
        let ring = g.ring();
        let field = ring.field();
        for (m, c) in g.terms() {
            if m.deg() != 1 {
                continue;
            }
            let v = m.exps().iter().position(|&e| e == 1).expect("degree-one monomial");
            let h = g - &Poly::var(ring, v).scale(*c);
            if h.involves_var(v) {
                continue;
            }
            let neg_inv = field.modulus() - field.inv(*c);
            return Some((gi, v, h.scale(neg_inv)));
        }
    }
    None
}

/// True for a two-term generator a*v1*v2 - b*v3*v4 on four pairwise
/// distinct variables, which generates a prime ideal on its own.
fn is_balanced_bilinear(g: &Poly) -> bool {
    if g.num_terms() != 2 {
        return false;
    }
    let m1 = &g.terms()[0].0;
    let m2 = &g.terms()[1].0;
    m1.deg() == 2
        && m2.deg() == 2
        && m1.exps().iter().all(|&e| e <= 1)
        && m2.exps().iter().all(|&e| e <= 1)
        && m1.support() & m2.support() == 0
}

/// Simplifies the presentation by substitution and classifies the residue.
/// Returns an error if the simplification exposes the unit ideal.
pub fn is_prime_structural(ideal: &Ideal) -> Result<Primality, CoreError> {
    let mut gens: Vec<Poly> = ideal.generators().to_vec();
    loop {
        let mut cleaned: Vec<Poly> = Vec::with_capacity(gens.len());
        for g in gens.drain(..) {
            if g.is_zero() || cleaned.contains(&g) {
                continue;
            }
            if g.is_constant() {
                return Err(CoreError::UnitIdeal);
            }
            cleaned.push(g);
        }
        gens = cleaned;
        let Some((gi, v, sub)) = find_substitution(&gens) else {
            break;
        };
        let mut next = Vec::with_capacity(gens.len() - 1);
        for (j, g) in gens.iter().enumerate() {
            if j != gi {
                next.push(g.substitute(v, &sub));
            }
        }
        gens = next;
    }
    if gens.is_empty() || (gens.len() == 1 && is_balanced_bilinear(&gens[0])) {
        return Ok(Primality::Prime);
    }
    Ok(Primality::Unknown)
}

#[cfg(test)]
mod tests {
    use super::super::{Catalog, MMParams};
    use super::{is_prime_structural, Primality};
    use crate::error::CoreError;
    use crate::field::Field;
    use alloc::vec;

    fn catalog(n: u32, d: u32) -> Catalog {
        let order = match (n, d) {
            (2, 2) => 2,
            (3, 2) => 4,
            _ => panic!("unexpected test size"),
        };
        let params = MMParams::new(n, d, Field::new(13, order).unwrap()).unwrap();
        Catalog::new(params).unwrap()
    }

    #[test]
    fn coordinate_ideal_is_prime() {
        let cat = catalog(2, 2);
        let p0 = cat.minimal_p0().unwrap();
        assert_eq!(is_prime_structural(&p0.ideal).unwrap(), Primality::Prime);
        assert_eq!(is_prime_structural(&cat.zero_ideal()).unwrap(), Primality::Prime);
    }

    #[test]
    fn bilinear_residue_is_prime() {
        let cat = catalog(2, 2);
        let q1 = cat.q1_prime(0b0011).unwrap();
        assert_eq!(is_prime_structural(&q1.ideal).unwrap(), Primality::Prime);
        let q9 = cat.q9_prime(0).unwrap();
        assert_eq!(is_prime_structural(&q9.ideal).unwrap(), Primality::Prime);
    }

    #[test]
    fn root_arithmetic_clears_level_primes() {
        let cat = catalog(2, 2);
        let p1 = cat.minimal_p_level(1, 12, 12).unwrap();
        assert_eq!(is_prime_structural(&p1.ideal).unwrap(), Primality::Prime);
        let cat3 = catalog(3, 2);
        let p2 = cat3.minimal_p_level(2, 1, 12).unwrap();
        assert_eq!(is_prime_structural(&p2.ideal).unwrap(), Primality::Prime);
    }

    #[test]
    fn tower_binomial_stays_unknown() {
        let cat = catalog(2, 2);
        let q6 = cat.q6_prime(0).unwrap();
        assert_eq!(is_prime_structural(&q6.ideal).unwrap(), Primality::Unknown);
    }

    #[test]
    fn corner_primes_certify() {
        let cat = catalog(2, 2);
        let q23s = cat.q23_special_prime(1, 12).unwrap();
        assert_eq!(is_prime_structural(&q23s.ideal).unwrap(), Primality::Prime);
        let q24 = cat.q24_prime().unwrap();
        assert_eq!(is_prime_structural(&q24.ideal).unwrap(), Primality::Prime);
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let cat = catalog(2, 2);
        let unit = cat.ideal(vec![cat.scalar(1)]);
        assert!(matches!(is_prime_structural(&unit), Err(CoreError::UnitIdeal)));
        let hidden = cat.ideal(vec![
            &cat.scalar(1) - &cat.b(1, 1),
            &cat.scalar(2) - &cat.b(1, 1),
        ]);
        assert!(matches!(is_prime_structural(&hidden), Err(CoreError::UnitIdeal)));
    }
}
