//! Catalog of the named ideals attached to the Mayr-Meyer family: the
//! defining ideal J(n,d), the companion ideal K(n,d), the auxiliary
//! building-block ideals, the minimal-prime table with primary components,
//! and the embedded-prime families Q1 through Q24 with claimed heights.

mod candidates;
mod colon_s;
mod embedded;
mod gens;
mod primes;
mod structural;

pub use candidates::{closed_form_count, proved_count, CandidateSummary};
pub use structural::{is_prime_structural, Primality};

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::CoreError;
use crate::field::Field;
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::ring::Ring;

/// Size parameters for the Mayr-Meyer construction: `n` levels and degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MMParams {
    /// Number of levels; at least 2.
    pub n: u32,
    /// Degree parameter; at least 2.
    pub d: u32,
    /// Coefficient field; its modulus must admit all roots of unity of order
    /// `d^(2^(n-2))` that the deeper catalog families quantify over.
    pub field: Field,
}

impl MMParams {
    /// Validates `n >= 2`, `d >= 2`, and that `field` contains the required
    /// roots of unity of order [`MMParams::root_order`].
    pub fn new(n: u32, d: u32, field: Field) -> Result<Self, CoreError> {
        if n < 2 {
            return Err(CoreError::BadParams(format!("n must be at least 2, got {n}")));
        }
        if d < 2 {
            return Err(CoreError::BadParams(format!("d must be at least 2, got {d}")));
        }
        let params = MMParams { n, d, field };
        let order = params.root_order()?;
        if (field.modulus() - 1) % order != 0 {
            return Err(CoreError::NoRoots { p: field.modulus(), order });
        }
        Ok(params)
    }

    /// Like [`MMParams::new`] but picks the field automatically: the smallest
    /// prime above 2^15 that is 1 modulo the required root order.
    pub fn with_default_field(n: u32, d: u32) -> Result<Self, CoreError> {
        if n < 2 || d < 2 {
            return Err(CoreError::BadParams(format!(
                "parameters must satisfy n >= 2 and d >= 2, got n={n}, d={d}"
            )));
        }
        let probe = MMParams { n, d, field: Field::new(3, 2)? };
        let order = probe.root_order()?;
        let p = crate::field::choose_prime(order);
        MMParams::new(n, d, Field::new(p, order)?)
    }

    /// The largest root-of-unity order any catalog family needs: `d^(2^(n-2))`.
    pub fn root_order(&self) -> Result<u64, CoreError> {
        let exp = 1u32
            .checked_shl(self.n - 2)
            .ok_or_else(|| CoreError::TooLarge(format!("2^({} - 2) overflows", self.n)))?;
        (self.d as u64)
            .checked_pow(exp)
            .filter(|&o| o <= u32::MAX as u64)
            .ok_or_else(|| CoreError::TooLarge(format!("{}^{} exceeds the supported root order", self.d, exp)))
    }

    /// Number of ring variables, `8n + 2`.
    pub fn nvars(&self) -> usize {
        8 * self.n as usize + 2
    }
}

/// How a catalog entry relates to J(n,d).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// A minimal prime over J(n,d).
    MinimalPrime,
    /// An embedded prime with a mechanical associatedness certificate.
    EmbeddedProved,
    /// A candidate embedded prime; listed but not certified.
    EmbeddedCandidate,
    /// A primary component or an intersection of components, not itself prime.
    Component,
}

impl Role {
    /// Stable lower-case label used in reports and exports.
    pub fn label(&self) -> &'static str {
        match self {
            Role::MinimalPrime => "minimal-prime",
            Role::EmbeddedProved => "embedded-proved",
            Role::EmbeddedCandidate => "embedded-candidate",
            Role::Component => "component",
        }
    }
}

/// One named ideal of the catalog together with its indexing data.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Canonical identifier, e.g. `Q5[r=0,L={1,2}]`.
    pub id: String,
    /// Family name, e.g. `Q5` or `P-4`.
    pub family: &'static str,
    /// Level index where the family has one.
    pub r: Option<u32>,
    /// Second level index for doubly indexed families.
    pub t: Option<u32>,
    /// Subset of {1,2,3,4} as a bitmask (bit i-1 for i), where indexed.
    pub lambda: Option<u8>,
    /// Root-of-unity parameters as field elements, where indexed.
    pub alpha: Option<u64>,
    /// Second root parameter.
    pub beta: Option<u64>,
    /// Third root parameter.
    pub gamma: Option<u64>,
    /// Relation of this entry to J(n,d).
    pub role: Role,
    /// Height asserted by the catalog; checked against the computed height.
    pub claimed_height: u32,
    /// The ideal itself.
    pub ideal: Ideal,
    /// Primary component attached to a prime entry, when the catalog lists one
    /// distinct from the prime itself.
    pub component: Option<Ideal>,
    /// Multiplier used by the associatedness certificate, when one is attached.
    pub witness: Option<Poly>,
}

/// Builder for every catalog ideal at fixed parameters.
pub struct Catalog {
    params: MMParams,
    ring: Arc<Ring>,
}

impl Catalog {
    /// Builds the 8n+2-variable ring and validates the parameters.
    pub fn new(params: MMParams) -> Result<Self, CoreError> {
        let ring = Ring::mayr_meyer(params.n, params.field)?;
        Ok(Catalog { params, ring })
    }

    /// The parameters this catalog was built for.
    pub fn params(&self) -> MMParams {
        self.params
    }

    /// The ambient polynomial ring.
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub(crate) fn n(&self) -> u32 {
        self.params.n
    }

    pub(crate) fn d(&self) -> u32 {
        self.params.d
    }

    /// The variable `s` as a polynomial.
    pub fn s(&self) -> Poly {
        Poly::var(&self.ring, self.ring.var_s())
    }

    /// The variable `f` as a polynomial.
    pub fn f(&self) -> Poly {
        Poly::var(&self.ring, self.ring.var_f())
    }

    /// The variable `c_{ri}` as a polynomial; `r` in `0..n`, `i` in `1..=4`.
    pub fn c(&self, r: u32, i: u32) -> Poly {
        Poly::var(&self.ring, self.ring.var_c(r, i))
    }

    /// The variable `b_{ri}` as a polynomial; `r` in `0..n`, `i` in `1..=4`.
    pub fn b(&self, r: u32, i: u32) -> Poly {
        Poly::var(&self.ring, self.ring.var_b(r, i))
    }

    /// The constant polynomial `value`.
    pub fn scalar(&self, value: i64) -> Poly {
        Poly::constant(&self.ring, self.params.field.from_i64(value))
    }

    /// An ideal over this catalog's ring from a generator list.
    pub fn ideal(&self, gens: Vec<Poly>) -> Ideal {
        Ideal::new(&self.ring, gens)
    }

    /// The zero ideal.
    pub fn zero_ideal(&self) -> Ideal {
        Ideal::zero(&self.ring)
    }

    /// All roots of unity of exact-dividing order `m` in the coefficient
    /// field, ascending. `m` must divide the field's promised root order.
    pub fn roots(&self, m: u64) -> Result<Vec<u64>, CoreError> {
        crate::field::enumerate_roots_of_unity(self.params.field.modulus(), m)
    }

    /// `d^(2^r)` as a root order, guarded against overflow.
    pub fn tower_order(&self, r: u32) -> Result<u64, CoreError> {
        let exp = 1u32
            .checked_shl(r)
            .ok_or_else(|| CoreError::TooLarge(format!("2^{r} overflows")))?;
        (self.d() as u64)
            .checked_pow(exp)
            .filter(|&o| o <= u32::MAX as u64)
            .ok_or_else(|| CoreError::TooLarge(format!("{}^{exp} exceeds the supported root order", self.d())))
    }
}

/// Iterates the 16 subsets of {1,2,3,4} as bitmasks, empty set first.
pub fn subsets() -> impl Iterator<Item = u8> {
    0u8..16
}

/// The members of a subset mask, ascending.
pub fn subset_members(mask: u8) -> Vec<u32> {
    (1u32..=4).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

/// The complement members of a subset mask, ascending.
pub fn subset_complement(mask: u8) -> Vec<u32> {
    (1u32..=4).filter(|i| mask & (1 << (i - 1)) == 0).collect()
}

/// Prints a subset mask as `{1,3}`; the empty set prints as `{}`.
pub fn subset_label(mask: u8) -> String {
    let mut out = String::from("{");
    let mut first = true;
    for i in subset_members(mask) {
        if !first {
            out.push(',');
        }
        out.push_str(&format!("{i}"));
        first = false;
    }
    out.push('}');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field13(order: u64) -> Field {
        Field::new(13, order).unwrap()
    }

    #[test]
    fn params_validate_bounds() {
        assert!(MMParams::new(1, 2, field13(2)).is_err());
        assert!(MMParams::new(2, 1, field13(2)).is_err());
        assert!(MMParams::new(2, 2, field13(2)).is_ok());
    }

    #[test]
    fn root_order_is_tower_of_d() {
        let p22 = MMParams::new(2, 2, field13(2)).unwrap();
        assert_eq!(p22.root_order().unwrap(), 2);
        let p32 = MMParams::new(3, 2, field13(4)).unwrap();
        assert_eq!(p32.root_order().unwrap(), 4);
        let p23 = MMParams::new(2, 3, field13(3)).unwrap();
        assert_eq!(p23.root_order().unwrap(), 3);
    }

    #[test]
    fn params_reject_field_without_roots() {
        // 4 does not divide 7 - 1 = 6, so (3,2) cannot live over F_7.
        let f = Field::new(7, 2).unwrap();
        assert!(matches!(
            MMParams::new(3, 2, f),
            Err(CoreError::NoRoots { p: 7, order: 4 })
        ));
    }

    #[test]
    fn default_field_is_large_and_compatible() {
        let p = MMParams::with_default_field(3, 2).unwrap();
        assert!(p.field.modulus() > (1 << 15));
        assert_eq!((p.field.modulus() - 1) % 4, 0);
    }

    #[test]
    fn nvars_matches_level_count() {
        assert_eq!(MMParams::new(2, 2, field13(2)).unwrap().nvars(), 18);
        assert_eq!(MMParams::new(3, 2, field13(4)).unwrap().nvars(), 26);
    }

    #[test]
    fn subset_helpers_enumerate_sixteen() {
        assert_eq!(subsets().count(), 16);
        assert_eq!(subsets().filter(|m| *m != 0).count(), 15);
        assert_eq!(subset_members(0b0101), alloc::vec![1, 3]);
        assert_eq!(subset_complement(0b0101), alloc::vec![2, 4]);
        assert_eq!(subset_label(0b0101), "{1,3}");
        assert_eq!(subset_label(0), "{}");
    }

    #[test]
    fn catalog_exposes_variables() {
        let params = MMParams::new(2, 2, field13(2)).unwrap();
        let cat = Catalog::new(params).unwrap();
        assert_eq!(format!("{}", cat.s()), "s");
        assert_eq!(format!("{}", cat.c(0, 2)), "c02");
        assert_eq!(format!("{}", cat.b(1, 4)), "b14");
        assert_eq!(format!("{}", cat.scalar(-1)), "-1");
    }
}
