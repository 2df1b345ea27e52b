//! The minimal primes of J(n,d) together with the primary components the
//! decomposition identities use for them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::CoreError;
use crate::ideal::Ideal;

use super::{subset_complement, subset_label, subset_members, subsets, Catalog, CatalogEntry, Role};

impl Catalog {
    /// All minimal primes of J(n,d): P_0, the level primes P_{r,a,b} for
    /// r = 1..n with a^d = b^d = 1, and P_{-1} through P_{-4,L}.
    pub fn minimal_primes(&self) -> Result<Vec<CatalogEntry>, CoreError> {
        let n = self.n();
        let mut out = Vec::new();
        out.push(self.minimal_p0()?);
        let roots = self.roots(self.d() as u64)?;
        for r in 1..=n {
            for &a in &roots {
                for &b in &roots {
                    out.push(self.minimal_p_level(r, a, b)?);
                }
            }
        }
        out.push(self.minimal_p_neg1());
        out.push(self.minimal_p_neg2());
        out.push(self.minimal_p_neg3());
        for mask in subsets() {
            out.push(self.minimal_p_neg4(mask));
        }
        Ok(out)
    }

    /// P_0 = C_0, height 4; it is its own primary component.
    pub fn minimal_p0(&self) -> Result<CatalogEntry, CoreError> {
        Ok(CatalogEntry {
            id: String::from("P0"),
            family: "P0",
            r: None,
            t: None,
            lambda: None,
            alpha: None,
            beta: None,
            gamma: None,
            role: Role::MinimalPrime,
            claimed_height: 4,
            ideal: self.aux_c(0)?,
            component: None,
            witness: None,
        })
    }

    /// P_{r,a,b} = p_r + (b01 - a*b02, b02 - b*b03), plus (b_{1i} - b) for
    /// r >= 2; heights 11 (r = 1), 7r+4 (1 < r < n), 7n (r = n).
    pub fn minimal_p_level(&self, r: u32, a: u64, b: u64) -> Result<CatalogEntry, CoreError> {
        let n = self.n();
        if r < 1 || r > n {
            return Err(CoreError::BadParams(format!("P_{r},a,b needs 1 <= r <= n = {n}")));
        }
        let mut gens = self.aux_p(r)?.generators().to_vec();
        gens.push(&self.b(0, 1) - &(&self.scalar(a as i64) * &self.b(0, 2)));
        gens.push(&self.b(0, 2) - &(&self.scalar(b as i64) * &self.b(0, 3)));
        if r >= 2 {
            for i in 1..=4 {
                gens.push(&self.b(1, i) - &self.scalar(b as i64));
            }
        }
        let claimed_height = if r == 1 {
            11
        } else if r < n {
            7 * r + 4
        } else {
            7 * n
        };
        Ok(CatalogEntry {
            id: format!("P{r}[a={a},b={b}]"),
            family: "Pr",
            r: Some(r),
            t: None,
            lambda: None,
            alpha: Some(a),
            beta: Some(b),
            gamma: None,
            role: Role::MinimalPrime,
            claimed_height,
            ideal: self.ideal(gens),
            component: None,
            witness: None,
        })
    }

    /// P_{-1} = (s, f), height 2.
    pub fn minimal_p_neg1(&self) -> CatalogEntry {
        CatalogEntry {
            id: String::from("P-1"),
            family: "P-1",
            r: None,
            t: None,
            lambda: None,
            alpha: None,
            beta: None,
            gamma: None,
            role: Role::MinimalPrime,
            claimed_height: 2,
            ideal: self.ideal(vec![self.s(), self.f()]),
            component: None,
            witness: None,
        }
    }

    /// P_{-2} = (s, c01, c02, c04, b03, b04), height 6, with primary
    /// component p_{-2} = (s, c01, c02, c04, b03^d, b04).
    pub fn minimal_p_neg2(&self) -> CatalogEntry {
        CatalogEntry {
            id: String::from("P-2"),
            family: "P-2",
            r: None,
            t: None,
            lambda: None,
            alpha: None,
            beta: None,
            gamma: None,
            role: Role::MinimalPrime,
            claimed_height: 6,
            ideal: self.ideal(vec![
                self.s(),
                self.c(0, 1),
                self.c(0, 2),
                self.c(0, 4),
                self.b(0, 3),
                self.b(0, 4),
            ]),
            component: Some(self.p_neg2_component()),
            witness: None,
        }
    }

    /// p_{-2} = (s, c01, c02, c04, b03^d, b04).
    pub fn p_neg2_component(&self) -> Ideal {
        self.ideal(vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 2),
            self.c(0, 4),
            self.b(0, 3).pow(self.d()),
            self.b(0, 4),
        ])
    }

    /// P_{-3} = (s, c01, c04, b02, b03, c02 b01 - c03 b04), height 6; it is
    /// its own primary component.
    pub fn minimal_p_neg3(&self) -> CatalogEntry {
        CatalogEntry {
            id: String::from("P-3"),
            family: "P-3",
            r: None,
            t: None,
            lambda: None,
            alpha: None,
            beta: None,
            gamma: None,
            role: Role::MinimalPrime,
            claimed_height: 6,
            ideal: self.p_neg3_ideal(),
            component: None,
            witness: None,
        }
    }

    /// The ideal of P_{-3}.
    pub fn p_neg3_ideal(&self) -> Ideal {
        self.ideal(vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 4),
            self.b(0, 2),
            self.b(0, 3),
            &(&self.c(0, 2) * &self.b(0, 1)) - &(&self.c(0, 3) * &self.b(0, 4)),
        ])
    }

    /// P_{-4,L} = (s, c01, c03, c04, b01, b02) + (c_{1i} | i not in L)
    /// + (b_{1j} | j in L), height 10, with primary component p_{-4,L}.
    pub fn minimal_p_neg4(&self, mask: u8) -> CatalogEntry {
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 3),
            self.c(0, 4),
            self.b(0, 1),
            self.b(0, 2),
        ];
        for i in subset_complement(mask) {
            gens.push(self.c(1, i));
        }
        for j in subset_members(mask) {
            gens.push(self.b(1, j));
        }
        CatalogEntry {
            id: format!("P-4[L={}]", subset_label(mask)),
            family: "P-4",
            r: None,
            t: None,
            lambda: Some(mask),
            alpha: None,
            beta: None,
            gamma: None,
            role: Role::MinimalPrime,
            claimed_height: 10,
            ideal: self.ideal(gens),
            component: Some(self.p_neg4_component(mask)),
            witness: None,
        }
    }

    /// p_{-4,L} = (s, c01, c03, c04, b01, b02^d) + (c_{1i} | i not in L)
    /// + (b_{1j}^d, b02 - b_{1j} b03, b_{1j} - b_{1j'} | j, j' in L).
    pub fn p_neg4_component(&self, mask: u8) -> Ideal {
        let d = self.d();
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 3),
            self.c(0, 4),
            self.b(0, 1),
            self.b(0, 2).pow(d),
        ];
        for i in subset_complement(mask) {
            gens.push(self.c(1, i));
        }
        let members = subset_members(mask);
        for &j in &members {
            gens.push(self.b(1, j).pow(d));
            gens.push(&self.b(0, 2) - &(&self.b(1, j) * &self.b(0, 3)));
        }
        for (pos, &j) in members.iter().enumerate() {
            for &j2 in &members[pos + 1..] {
                gens.push(&self.b(1, j) - &self.b(1, j2));
            }
        }
        self.ideal(gens)
    }

    /// p_{-4} = (s, c01, c03, c04, b01, b02^d) + (c_{1i}(b02 - b_{1i} b03),
    /// c_{1i} b_{1i}^d, c_{1i} c_{1j}(b_{1i} - b_{1j})): the intersection of
    /// all the p_{-4,L}.
    pub fn p_neg4_intersection(&self) -> Ideal {
        let d = self.d();
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 3),
            self.c(0, 4),
            self.b(0, 1),
            self.b(0, 2).pow(d),
        ];
        for i in 1..=4 {
            gens.push(&self.c(1, i) * &(&self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3))));
        }
        for i in 1..=4 {
            gens.push(&self.c(1, i) * &self.b(1, i).pow(d));
        }
        for i in 1..=4u32 {
            for j in (i + 1)..=4 {
                gens.push(&(&self.c(1, i) * &self.c(1, j)) * &(&self.b(1, i) - &self.b(1, j)));
            }
        }
        self.ideal(gens)
    }
}
