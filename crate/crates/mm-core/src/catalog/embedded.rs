//! The embedded-prime families Q1 through Q24: prime builders with claimed
//! heights, the primary components and component intersections used by the
//! decomposition identities, and the multiplier elements whose colons
//! certify associatedness.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::CoreError;
use crate::ideal::Ideal;
use crate::poly::Poly;

use super::{subset_complement, subset_label, subset_members, Catalog, CatalogEntry, Role};

/// Pushes a generator unless it is zero or already present.
fn push_unique(gens: &mut Vec<Poly>, p: Poly) {
    if !p.is_zero() && !gens.contains(&p) {
        gens.push(p);
    }
}

impl Catalog {
    fn entry(
        &self,
        id: String,
        family: &'static str,
        role: Role,
        claimed_height: u32,
        ideal: Ideal,
    ) -> CatalogEntry {
        CatalogEntry {
            id,
            family,
            r: None,
            t: None,
            lambda: None,
            alpha: None,
            beta: None,
            gamma: None,
            role,
            claimed_height,
            ideal,
            component: None,
            witness: None,
        }
    }

    fn check_mask(&self, mask: u8, family: &str) -> Result<(), CoreError> {
        if mask >= 16 {
            return Err(CoreError::BadParams(format!("{family}: subset mask {mask} out of range")));
        }
        Ok(())
    }

    fn check_nonempty_mask(&self, mask: u8, family: &str) -> Result<(), CoreError> {
        self.check_mask(mask, family)?;
        if mask == 0 {
            return Err(CoreError::BadParams(format!("{family}: subset must be nonempty")));
        }
        Ok(())
    }

    fn check_root(&self, a: u64, order: u64, family: &str) -> Result<(), CoreError> {
        if !self.roots(order)?.contains(&a) {
            return Err(CoreError::BadParams(format!(
                "{family}: {a} is not a root of unity of order dividing {order}"
            )));
        }
        Ok(())
    }

    fn small_exponent(&self, e: u64, what: &str) -> Result<u32, CoreError> {
        if e > u16::MAX as u64 {
            return Err(CoreError::TooLarge(format!("{what}: exponent {e} too large")));
        }
        Ok(e as u32)
    }

    /// Q1[L]: height 9 for nonempty L, 10 for L = {}; all sixteen carry
    /// an associatedness certificate and a listed primary component.
    pub fn q1_prime(&self, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_mask(mask, "Q1")?;
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 4),
            self.b(0, 2),
            self.b(0, 3),
            &(&self.c(0, 2) * &self.b(0, 1)) - &(&self.c(0, 3) * &self.b(0, 4)),
        ];
        for i in subset_complement(mask) {
            gens.push(self.c(1, i));
        }
        let members = subset_members(mask);
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                gens.push(&self.b(1, i) - &self.b(1, j));
            }
        }
        let mut entry = self.entry(
            format!("Q1[L={}]", subset_label(mask)),
            "Q1",
            Role::EmbeddedProved,
            if mask == 0 { 10 } else { 9 },
            self.ideal(gens),
        );
        entry.lambda = Some(mask);
        entry.component = Some(self.q1_component(mask));
        entry.witness = Some(self.q1_witness(mask));
        Ok(entry)
    }

    /// The Q1[L]-primary component attached to J(n,d).
    pub fn q1_component(&self, mask: u8) -> Ideal {
        let d = self.d();
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 4),
            self.b(0, 2).pow(d),
            self.b(0, 3).pow(d),
            &(&self.c(0, 2) * &self.b(0, 1)) - &(&self.c(0, 3) * &self.b(0, 4)),
        ];
        for i in subset_complement(mask) {
            gens.push(self.c(1, i));
        }
        let members = subset_members(mask);
        for &i in &members {
            gens.push(&self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3)));
        }
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                gens.push(&self.b(1, i) - &self.b(1, j));
            }
        }
        self.ideal(gens)
    }

    /// The intersection of all sixteen Q1 components, in closed form.
    pub fn q1_union(&self) -> Ideal {
        let d = self.d();
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 4),
            self.b(0, 2).pow(d),
            self.b(0, 3).pow(d),
            &(&self.c(0, 2) * &self.b(0, 1)) - &(&self.c(0, 3) * &self.b(0, 4)),
        ];
        for i in 1..=4 {
            let diff = &self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3));
            gens.push(&self.c(1, i) * &diff);
        }
        for i in 1..=4u32 {
            for j in i + 1..=4 {
                let diff = &self.b(1, i) - &self.b(1, j);
                gens.push(&(&self.c(1, i) * &self.c(1, j)) * &diff);
            }
        }
        self.ideal(gens)
    }

    /// Multiplier whose colon from the saturated ideal isolates the Q1[L]
    /// component cluster: nonempty L keeps exactly Q1[L], empty L keeps
    /// Q1[{}] together with the four singleton components.
    pub fn q1_witness(&self, mask: u8) -> Poly {
        let mut w = self.scalar(1);
        if mask == 0 {
            for i in 1..=4u32 {
                for j in i + 1..=4 {
                    w = &w * &(&self.b(1, i) - &self.b(1, j));
                }
            }
            return w;
        }
        let members = subset_members(mask);
        for &i in &members {
            w = &w * &self.c(1, i);
        }
        for &i in &members {
            for j in subset_complement(mask) {
                w = &w * &(&self.b(1, i) - &self.b(1, j));
            }
        }
        w
    }

    /// Element separating the empty-set Q1 component from the four singleton
    /// components: it lies in the latter and in P-3 but not in the former.
    pub fn q1_separator(&self) -> Poly {
        let d = self.d();
        let mut w = &self.b(0, 2).pow(d - 1) * &self.b(0, 3);
        for i in 1..=4 {
            w = &w * &self.b(1, i);
        }
        w
    }

    /// Q2[L,a] for nonempty L and a^d = 1: height 12, certified associated.
    pub fn q2_prime(&self, mask: u8, a: u64) -> Result<CatalogEntry, CoreError> {
        self.check_nonempty_mask(mask, "Q2")?;
        self.check_root(a, self.d() as u64, "Q2")?;
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            &self.c(0, 3) - &self.c(0, 2),
            self.c(0, 4),
            self.b(0, 1),
            self.b(0, 2),
            self.b(0, 3),
            self.b(0, 4),
        ];
        for i in subset_complement(mask) {
            gens.push(self.c(1, i));
        }
        for i in subset_members(mask) {
            gens.push(&self.b(1, i) - &self.scalar(a as i64));
        }
        let mut entry = self.entry(
            format!("Q2[L={},a={a}]", subset_label(mask)),
            "Q2",
            Role::EmbeddedProved,
            12,
            self.ideal(gens),
        );
        entry.lambda = Some(mask);
        entry.alpha = Some(a);
        entry.witness = Some(self.q2_witness(mask));
        Ok(entry)
    }

    /// Multiplier whose saturation isolates the Q2[L,*] components; for the
    /// empty set the saturation collapses to p_1, showing redundancy there.
    pub fn q2_witness(&self, mask: u8) -> Poly {
        let d = self.d();
        let mut w = self.c(0, 2);
        for i in subset_members(mask) {
            w = &w * &self.c(1, i);
        }
        for j in subset_complement(mask) {
            w = &w * &(&self.scalar(1) - &self.b(1, j).pow(d));
        }
        w
    }

    /// Q3[L] for nonempty L: height 12, certified associated.
    pub fn q3_prime(&self, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_nonempty_mask(mask, "Q3")?;
        let mut gens: Vec<Poly> = (1..=4).map(|i| self.c(0, i)).collect();
        gens.push(self.s());
        for i in 1..=4 {
            gens.push(self.b(0, i));
        }
        for i in subset_complement(mask) {
            gens.push(self.c(1, i));
        }
        let members = subset_members(mask);
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                gens.push(&self.b(1, i) - &self.b(1, j));
            }
        }
        let mut entry = self.entry(
            format!("Q3[L={}]", subset_label(mask)),
            "Q3",
            Role::EmbeddedProved,
            12,
            self.ideal(gens),
        );
        entry.lambda = Some(mask);
        entry.witness = Some(self.q3_witness(mask));
        Ok(entry)
    }

    /// Multiplier whose saturation isolates the Q3[L] component for
    /// nonempty L.
    pub fn q3_witness(&self, mask: u8) -> Poly {
        let d = self.d();
        let mut w = self.scalar(1);
        let members = subset_members(mask);
        let outside = subset_complement(mask);
        for &i in &members {
            w = &w * &self.c(1, i);
        }
        for (k, &j) in outside.iter().enumerate() {
            for &j2 in &outside[k + 1..] {
                w = &w * &(&self.b(1, j) - &self.b(1, j2));
            }
        }
        for &i in &members {
            for &j in &outside {
                w = &w * &(&self.b(1, i) - &self.b(1, j));
            }
        }
        for j in 1..=4 {
            w = &w * &(&self.scalar(1) - &self.b(1, j).pow(d));
        }
        w
    }

    /// Q4[a,b] at n = 2 for a^d = b^d = 1: height 16. Mixed pairs carry an
    /// associatedness certificate; equal pairs contain p_2, the colon chain
    /// yields no witness for them, and they stay candidate-only.
    pub fn q42_prime(&self, a: u64, b: u64) -> Result<CatalogEntry, CoreError> {
        if self.n() != 2 {
            return Err(CoreError::BadParams(format!(
                "Q4[a,b] is the two-level form; n = {} has Q4[r,a,b,g]",
                self.n()
            )));
        }
        let d = self.d() as u64;
        self.check_root(a, d, "Q4")?;
        self.check_root(b, d, "Q4")?;
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 4),
            &self.c(0, 2) - &self.c(0, 3),
            self.b(0, 1),
            self.b(0, 2),
            self.b(0, 3),
            self.b(0, 4),
            &self.b(1, 1) - &self.scalar(a as i64),
            &self.b(1, 4) - &self.scalar(a as i64),
            &self.b(1, 2) - &self.scalar(b as i64),
            &self.b(1, 3) - &self.scalar(b as i64),
        ];
        gens.extend(self.aux_c(1)?.generators().iter().cloned());
        let role = if a == b {
            Role::EmbeddedCandidate
        } else {
            Role::EmbeddedProved
        };
        let mut entry = self.entry(format!("Q4[a={a},b={b}]"), "Q4", role, 16, self.ideal(gens));
        entry.alpha = Some(a);
        entry.beta = Some(b);
        Ok(entry)
    }

    /// Q4[r,a,b,g] at n > 2 for roots of unity with at least two distinct
    /// values among a, b, g: height 7r+2, plus 4 when r < n.
    pub fn q4_prime(&self, r: u32, a: u64, b: u64, g: u64) -> Result<CatalogEntry, CoreError> {
        if a == b && b == g {
            return Err(CoreError::BadParams(format!(
                "Q4[r,a,b,g] needs two distinct root values; got a = b = g = {a}"
            )));
        }
        let ideal = self.q4_level_ideal(r, a, b, g)?;
        let mut entry = self.entry(
            format!("Q4[r={r},a={a},b={b},g={g}]"),
            "Q4",
            Role::EmbeddedProved,
            7 * r + 2 + if r < self.n() { 4 } else { 0 },
            ideal,
        );
        entry.r = Some(r);
        entry.alpha = Some(a);
        entry.beta = Some(b);
        entry.gamma = Some(g);
        Ok(entry)
    }

    /// The Q4[r,a,b,g] generator list without the distinctness condition;
    /// with a = b = g it contains p_r and is redundant.
    pub fn q4_level_ideal(&self, r: u32, a: u64, b: u64, g: u64) -> Result<Ideal, CoreError> {
        let n = self.n();
        if n <= 2 {
            return Err(CoreError::BadParams(format!("Q4[r,a,b,g] needs n > 2; n = {n}")));
        }
        if r < 2 || r > n {
            return Err(CoreError::BadParams(format!("Q4 level {r} not in 2..={n}")));
        }
        let d = self.d() as u64;
        self.check_root(a, d, "Q4")?;
        self.check_root(b, d, "Q4")?;
        self.check_root(g, d, "Q4")?;
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 4),
            &self.c(0, 2) - &self.c(0, 3),
            self.b(0, 1),
            self.b(0, 2),
            self.b(0, 3),
            self.b(0, 4),
        ];
        if r > 2 {
            for i in 1..=4 {
                gens.push(&self.b(1, 2) - &(&self.b(2, i) * &self.b(1, 3)));
            }
            for i in 1..=4u32 {
                for j in i + 1..=4 {
                    gens.push(&self.b(2, i) - &self.b(2, j));
                }
            }
        }
        gens.push(&self.b(1, 1) - &self.scalar(a as i64));
        gens.push(&self.b(1, 4) - &self.scalar(a as i64));
        gens.push(&self.b(1, 2) - &self.scalar(b as i64));
        gens.push(&self.b(1, 3) - &self.scalar(g as i64));
        gens.extend(self.aux_c(1)?.generators().iter().cloned());
        for k in 2..r {
            gens.extend(self.aux_d(k)?.generators().iter().cloned());
        }
        gens.extend(self.aux_c(r)?.generators().iter().cloned());
        if r >= 4 {
            gens.extend(self.aux_b_range(3, r - 1)?.generators().iter().cloned());
        }
        Ok(self.ideal(gens))
    }

    /// The multiplier x with J : x = j_hat: f^3 at n = 2, and
    /// f^3 c21 b13 (b21 - b22) at n > 2.
    pub fn x_multiplier(&self) -> Poly {
        let f3 = self.f().pow(3);
        if self.n() == 2 {
            return f3;
        }
        let head = &(&f3 * &self.c(2, 1)) * &self.b(1, 3);
        &head * &(&self.b(2, 1) - &self.b(2, 2))
    }

    /// Closed form of J : x, the hub of the first decomposition chain.
    pub fn j_hat(&self) -> Ideal {
        let d = self.d();
        let c02 = self.c(0, 2);
        let b02d = self.b(0, 2).pow(d);
        let b02dd = self.b(0, 2).pow(2 * d);
        let mut gens = vec![
            &self.c(0, 1) - &(&c02 * &b02d),
            &self.c(0, 4) - &(&self.c(0, 3) * &self.b(0, 3).pow(d)),
            &self.s() * &(&c02 - &self.c(0, 3)),
        ];
        let quad = [
            &b02d - &self.b(0, 1).pow(d),
            &c02 - &self.c(0, 3),
            &self.b(0, 1) - &self.b(0, 4),
            &self.b(0, 3).pow(d) - &self.b(0, 1).pow(d),
        ];
        for u in &quad {
            gens.push(&(&c02 * &b02d) * u);
        }
        gens.push(&(&c02 * &self.b(0, 1)) - &(&self.c(0, 3) * &self.b(0, 4)));
        gens.push(&c02 * &(&self.s() - &(&self.f() * &b02d)));
        for i in 1..=4 {
            let diff = &self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3));
            gens.push(&(&c02 * &self.c(1, i)) * &diff);
        }
        gens.push(&(&c02 * &b02d) - &(&self.c(0, 3) * &self.b(0, 3).pow(d)));
        for u in self.level_one_ties() {
            gens.push(&(&c02 * &b02dd) * &u);
        }
        self.ideal(gens)
    }

    /// The six level-one tie generators shared by the chain ideals: three
    /// c-differences, two c11-weighted b-differences, and c11 itself when
    /// n >= 3.
    fn level_one_ties(&self) -> Vec<Poly> {
        let mut out = vec![
            &self.c(1, 1) - &self.c(1, 2),
            &self.c(1, 4) - &self.c(1, 3),
            &self.c(1, 3) - &self.c(1, 2),
            &self.c(1, 1) * &(&self.b(1, 1) - &self.b(1, 4)),
            &self.c(1, 1) * &(&self.b(1, 2) - &self.b(1, 3)),
        ];
        if self.n() >= 3 {
            out.push(self.c(1, 1));
        }
        out
    }

    /// Closed form of (J : x) + (c02); equals the intersection of P0 and P-2.
    pub fn c02_residue(&self) -> Ideal {
        self.ideal(vec![
            self.c(0, 1),
            self.c(0, 2),
            self.c(0, 4),
            &self.c(0, 3) * &self.b(0, 3).pow(self.d()),
            &self.s() * &self.c(0, 3),
            &self.c(0, 3) * &self.b(0, 4),
        ])
    }

    /// Closed form of (J : x) : c02.
    pub fn j_hat_colon_c02(&self) -> Ideal {
        let d = self.d();
        let c02 = self.c(0, 2);
        let b02d = self.b(0, 2).pow(d);
        let mut gens = vec![
            &self.c(0, 1) - &(&c02 * &b02d),
            &self.c(0, 4) - &(&c02 * &b02d),
            &self.s() - &(&self.f() * &b02d),
        ];
        let quad = [
            &b02d - &self.b(0, 1).pow(d),
            &c02 - &self.c(0, 3),
            &self.b(0, 1) - &self.b(0, 4),
            &self.b(0, 3).pow(d) - &self.b(0, 1).pow(d),
        ];
        for u in &quad {
            gens.push(&b02d * u);
        }
        for i in 1..=4 {
            let diff = &self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3));
            gens.push(&self.c(1, i) * &diff);
        }
        for u in self.level_one_ties() {
            gens.push(&self.b(0, 2).pow(2 * d) * &u);
        }
        gens.push(&(&c02 * &b02d) - &(&self.c(0, 3) * &self.b(0, 3).pow(d)));
        gens.push(&(&c02 * &self.b(0, 1)) - &(&self.c(0, 3) * &self.b(0, 4)));
        gens.push(&(&self.b(0, 1) * &self.b(0, 3).pow(d)) - &(&self.b(0, 4) * &b02d));
        self.ideal(gens)
    }

    /// Closed form of ((J : x) : c02) + (b02^d); equals the intersection of
    /// the P-4 component intersection, P-3, and the Q1 component union.
    pub fn j_hat_colon_c02_plus_b02d(&self) -> Ideal {
        let d = self.d();
        let mut gens = vec![self.c(0, 1), self.c(0, 4), self.s(), self.b(0, 2).pow(d)];
        for i in 1..=4 {
            let diff = &self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3));
            gens.push(&self.c(1, i) * &diff);
        }
        gens.push(&self.c(0, 3) * &self.b(0, 3).pow(d));
        gens.push(&(&self.c(0, 2) * &self.b(0, 1)) - &(&self.c(0, 3) * &self.b(0, 4)));
        gens.push(&self.b(0, 1) * &self.b(0, 3).pow(d));
        self.ideal(gens)
    }

    /// Closed form of (J : x) : c02 b02^d.
    pub fn j_hat_colon_c02_b02d(&self) -> Ideal {
        let d = self.d();
        let c02 = self.c(0, 2);
        let b02d = self.b(0, 2).pow(d);
        let mut gens = vec![
            &self.c(0, 1) - &(&c02 * &b02d),
            &self.c(0, 4) - &(&c02 * &b02d),
            &self.s() - &(&self.f() * &b02d),
            &c02 - &self.c(0, 3),
            &b02d - &self.b(0, 1).pow(d),
            &self.b(0, 1) - &self.b(0, 4),
            &self.b(0, 3).pow(d) - &self.b(0, 1).pow(d),
        ];
        for u in self.level_one_ties() {
            gens.push(&b02d * &u);
        }
        self.push_binding_products(&mut gens);
        self.push_unit_products(&mut gens, Some(&self.b(0, 1)));
        self.push_unit_products(&mut gens, Some(&self.c(0, 2)));
        self.ideal(gens)
    }

    /// The two product rows tying level one to level zero: c1i against the
    /// b02/b03 binding, and c1i c1j against the b-differences.
    fn push_binding_products(&self, gens: &mut Vec<Poly>) {
        for i in 1..=4 {
            let diff = &self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3));
            gens.push(&self.c(1, i) * &diff);
        }
        for i in 1..=4u32 {
            for j in i + 1..=4 {
                let diff = &self.b(1, i) - &self.b(1, j);
                gens.push(&(&self.c(1, i) * &self.c(1, j)) * &diff);
            }
        }
    }

    /// The root-of-unity products c1i (1 - b1i^d), each times an optional
    /// extra weight.
    fn push_unit_products(&self, gens: &mut Vec<Poly>, weight: Option<&Poly>) {
        let d = self.d();
        for i in 1..=4 {
            let unit = &self.scalar(1) - &self.b(1, i).pow(d);
            let base = &self.c(1, i) * &unit;
            match weight {
                Some(w) => gens.push(w * &base),
                None => gens.push(base),
            }
        }
    }

    /// Closed form of ((J : x) : c02 b02^d) + (b02^d); decomposes through
    /// the Q2 and Q3 component unions.
    pub fn j_hat_double_prime(&self) -> Ideal {
        let d = self.d();
        let mut gens = vec![
            self.c(0, 1),
            self.c(0, 4),
            &self.c(0, 2) - &self.c(0, 3),
            self.s(),
        ];
        for i in 1..=4 {
            gens.push(self.b(0, i).pow(d));
        }
        gens.push(&self.b(0, 1) - &self.b(0, 4));
        self.push_binding_products(&mut gens);
        self.push_unit_products(&mut gens, Some(&self.b(0, 1)));
        self.push_unit_products(&mut gens, Some(&self.c(0, 2)));
        self.ideal(gens)
    }

    /// The intersection of the Q2 components, in closed form.
    pub fn q2_union(&self) -> Ideal {
        let d = self.d();
        let mut gens = vec![
            self.c(0, 1),
            self.c(0, 4),
            &self.c(0, 2) - &self.c(0, 3),
            self.s(),
        ];
        for i in 1..=4 {
            gens.push(self.b(0, i).pow(d));
        }
        gens.push(&self.b(0, 1) - &self.b(0, 4));
        self.push_binding_products(&mut gens);
        self.push_unit_products(&mut gens, None);
        self.ideal(gens)
    }

    /// First factor in the two-step peeling of j_hat_double_prime.
    pub fn j_hat_double_prime_row(&self) -> Ideal {
        let d = self.d();
        let mut gens: Vec<Poly> = (1..=4).map(|i| self.c(0, i)).collect();
        gens.push(self.s());
        for i in 1..=4 {
            gens.push(self.b(0, i).pow(d));
        }
        gens.push(&self.b(0, 1) - &self.b(0, 4));
        self.push_binding_products(&mut gens);
        self.push_unit_products(&mut gens, Some(&self.b(0, 1)));
        self.ideal(gens)
    }

    /// Same row with the b01 weight dropped from the unit-root products;
    /// contains the Q2 component union, which makes the row redundant.
    pub fn j_hat_double_prime_row_reduced(&self) -> Ideal {
        let d = self.d();
        let mut gens: Vec<Poly> = (1..=4).map(|i| self.c(0, i)).collect();
        gens.push(self.s());
        for i in 1..=4 {
            gens.push(self.b(0, i).pow(d));
        }
        gens.push(&self.b(0, 1) - &self.b(0, 4));
        self.push_binding_products(&mut gens);
        self.push_unit_products(&mut gens, None);
        self.ideal(gens)
    }

    /// The intersection of the Q3 components, in closed form.
    pub fn q3_union(&self) -> Ideal {
        let d = self.d();
        let mut gens: Vec<Poly> = (1..=4).map(|i| self.c(0, i)).collect();
        gens.push(self.s());
        for i in 1..=4 {
            gens.push(self.b(0, i).pow(d));
        }
        gens.push(self.b(0, 1));
        gens.push(self.b(0, 4));
        self.push_binding_products(&mut gens);
        self.ideal(gens)
    }

    /// Closed form of (J : x) : c02 b02^{2d}; meets p_1, p_2 when n = 2,
    /// and the Q4 component.
    pub fn j_hat_prime(&self) -> Ideal {
        let d = self.d();
        let c02 = self.c(0, 2);
        let b02d = self.b(0, 2).pow(d);
        let mut gens = vec![
            &self.c(0, 1) - &(&c02 * &b02d),
            &self.c(0, 4) - &(&c02 * &b02d),
            &self.s() - &(&self.f() * &b02d),
            &c02 - &self.c(0, 3),
            &b02d - &self.b(0, 1).pow(d),
            &self.b(0, 1) - &self.b(0, 4),
            &self.b(0, 3).pow(d) - &self.b(0, 1).pow(d),
        ];
        gens.extend(self.level_one_ties());
        let c11 = self.c(1, 1);
        for i in 1..=4 {
            let diff = &self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3));
            gens.push(&c11 * &diff);
        }
        for i in 1..=4u32 {
            for j in i + 1..=4 {
                let diff = &self.b(1, i) - &self.b(1, j);
                gens.push(&c11.pow(2) * &diff);
            }
        }
        for i in 1..=4 {
            gens.push(&c11 * &(&self.scalar(1) - &self.b(1, i).pow(d)));
        }
        self.ideal(gens)
    }

    /// The Q4 primary component at n = 2; the unit ideal once n >= 3.
    pub fn q42_component(&self) -> Ideal {
        let d = self.d();
        let mut gens = vec![
            self.c(0, 1),
            self.c(0, 4),
            self.s(),
            &self.c(0, 2) - &self.c(0, 3),
            self.b(0, 1).pow(d),
            &self.b(0, 1) - &self.b(0, 4),
            self.b(0, 2),
            self.b(0, 3),
            &self.b(1, 1) - &self.b(1, 4),
            &self.b(1, 2) - &self.b(1, 3),
        ];
        if self.n() >= 3 {
            gens.push(self.scalar(1));
        }
        gens.push(self.c(1, 1).pow(2));
        for i in 1..=4 {
            gens.push(&self.scalar(1) - &self.b(1, i).pow(d));
        }
        gens.extend(self.aux_d(1).expect("D_1 exists").generators().iter().cloned());
        self.ideal(gens)
    }

    /// The level-r multiplier x_r with J : x_r in closed form at n > 2.
    pub fn x_multiplier_level(&self, r: u32) -> Result<Poly, CoreError> {
        let n = self.n();
        if n <= 2 || r < 2 || r > n {
            return Err(CoreError::BadParams(format!(
                "x multiplier level {r} needs n > 2 and 2 <= r <= n"
            )));
        }
        let d = self.d();
        let mut w = &self.f().pow(3) * &self.b(1, 3).pow(2 * d + 1);
        for k in 2..r {
            w = &w * &self.c(k, 1);
            w = &w * &self.b(k, 3);
        }
        if r < n {
            w = &w * &(&self.scalar(1) - &self.b(r, 1));
        }
        Ok(w)
    }

    /// The multiplier c02 c13 b03^{2d} that peels J : x_r down to the
    /// level-r prime and its Q4 cluster.
    pub fn level_multiplier(&self) -> Poly {
        &(&self.c(0, 2) * &self.c(1, 3)) * &self.b(0, 3).pow(2 * self.d())
    }

    /// Closed form of J : x_r at n > 2.
    pub fn j_hat_level(&self, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if n <= 2 || r < 2 || r > n {
            return Err(CoreError::BadParams(format!(
                "level ideal {r} needs n > 2 and 2 <= r <= n"
            )));
        }
        let d = self.d();
        let c02 = self.c(0, 2);
        let c13 = self.c(1, 3);
        let b02d = self.b(0, 2).pow(d);
        let b03d = self.b(0, 3).pow(d);
        let deep = self.level_multiplier();
        let mut gens = vec![
            &self.c(0, 1) - &(&c02 * &b02d),
            &self.c(0, 1) - &self.c(0, 4),
            &self.s() * &(&c02 - &self.c(0, 3)),
            &(&c02 * &self.b(0, 1)) - &(&self.c(0, 3) * &self.b(0, 4)),
            &c02 * &(&self.s() - &(&self.f() * &b02d)),
            &(&c02 * &b02d) - &(&self.c(0, 3) * &b03d),
        ];
        let quad = [
            &b02d - &self.b(0, 1).pow(d),
            &c02 - &self.c(0, 3),
            &self.b(0, 1) - &self.b(0, 4),
            &self.b(0, 3).pow(d) - &self.b(0, 1).pow(d),
        ];
        for u in &quad {
            push_unique(&mut gens, &(&c02 * &b02d) * u);
            push_unique(&mut gens, &(&(&c02 * &c13) * &b03d) * u);
        }
        for i in 1..=4 {
            let diff = &self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3));
            push_unique(&mut gens, &(&c02 * &self.c(1, i)) * &diff);
        }
        for i in 1..=4 {
            let tie = &(&self.c(1, i) * &self.b(1, i).pow(d)) - &(&c13 * &self.b(1, 3).pow(d));
            push_unique(&mut gens, &(&c02 * &self.b(0, 2).pow(2 * d)) * &tie);
        }
        for u in self.aux_d(1)?.generators() {
            push_unique(&mut gens, &deep * u);
        }
        push_unique(&mut gens, &deep * &(&self.b(1, 1) - &self.b(1, 4)));
        for i in 1..=4 {
            let unit = &self.scalar(1) - &self.b(1, i).pow(d);
            push_unique(&mut gens, &deep * &unit);
        }
        if r > 2 {
            for i in 1..=4 {
                let unit = &self.scalar(1) - &self.b(2, i);
                push_unique(&mut gens, &(&deep * &self.c(1, 1)) * &unit);
                push_unique(&mut gens, &(&deep * &self.b(0, 2)) * &unit);
                push_unique(&mut gens, &(&deep * &self.b(0, 3)) * &unit);
            }
            for i in 1..=4 {
                let tie = &self.b(1, 2) - &(&self.b(2, i) * &self.b(1, 3));
                push_unique(&mut gens, &deep * &tie);
            }
            for i in 1..=4u32 {
                for j in i + 1..=4 {
                    push_unique(&mut gens, &deep * &(&self.b(2, i) - &self.b(2, j)));
                }
            }
        }
        for k in 2..=r.saturating_sub(2) {
            for u in self.aux_d(k)?.generators() {
                push_unique(&mut gens, &deep * u);
            }
            for i in 1..=4 {
                let unit = &self.scalar(1) - &self.b(k + 1, i);
                push_unique(&mut gens, &deep * &unit);
            }
        }
        for u in self.aux_d(r - 1)?.generators() {
            push_unique(&mut gens, &deep * u);
        }
        for u in self.aux_c(r)?.generators() {
            push_unique(&mut gens, &deep * u);
        }
        Ok(self.ideal(gens))
    }

    /// Closed form of (J : x_r) : c02 c13 b03^{2d}; the product of the
    /// level-r prime with the Q4[r,*] component cluster.
    pub fn s_level_display(&self, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if n <= 2 || r < 2 || r > n {
            return Err(CoreError::BadParams(format!(
                "level colon {r} needs n > 2 and 2 <= r <= n"
            )));
        }
        let d = self.d();
        let c02 = self.c(0, 2);
        let b02d = self.b(0, 2).pow(d);
        let mut gens = vec![
            &self.c(0, 1) - &(&c02 * &b02d),
            &self.c(0, 1) - &self.c(0, 4),
            &self.s() - &(&self.f() * &b02d),
            &c02 - &self.c(0, 3),
            &self.b(0, 1) - &self.b(0, 4),
            &self.b(0, 2) - &(&self.b(1, 3) * &self.b(0, 3)),
        ];
        for u in self.aux_d(1)?.generators() {
            push_unique(&mut gens, u.clone());
        }
        push_unique(&mut gens, &self.b(1, 1) - &self.b(1, 4));
        for i in 1..=4 {
            push_unique(&mut gens, &self.scalar(1) - &self.b(1, i).pow(d));
        }
        if r > 2 {
            for i in 1..=4 {
                let unit = &self.scalar(1) - &self.b(2, i);
                push_unique(&mut gens, &self.c(1, 1) * &unit);
                push_unique(&mut gens, &self.b(0, 2) * &unit);
                push_unique(&mut gens, &self.b(0, 3) * &unit);
            }
            for i in 1..=4 {
                push_unique(&mut gens, &self.b(1, 2) - &(&self.b(2, i) * &self.b(1, 3)));
            }
            for i in 1..=4u32 {
                for j in i + 1..=4 {
                    push_unique(&mut gens, &self.b(2, i) - &self.b(2, j));
                }
            }
        }
        for k in 2..=r.saturating_sub(2) {
            for u in self.aux_d(k)?.generators() {
                push_unique(&mut gens, u.clone());
            }
            for i in 1..=4 {
                push_unique(&mut gens, &self.scalar(1) - &self.b(k + 1, i));
            }
        }
        for u in self.aux_d(r - 1)?.generators() {
            push_unique(&mut gens, u.clone());
        }
        for u in self.aux_c(r)?.generators() {
            push_unique(&mut gens, u.clone());
        }
        for i in 1..=4 {
            let diff = &self.b(1, i) - &self.b(1, 3);
            push_unique(&mut gens, &self.b(0, 3) * &diff);
            push_unique(&mut gens, &self.c(1, i) * &diff);
        }
        push_unique(&mut gens, &self.b(0, 3).pow(d) - &self.b(0, 1).pow(d));
        Ok(self.ideal(gens))
    }

    /// First factor of the level-r colon: a presentation that equals p_r.
    pub fn s_level_first(&self, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if n <= 2 || r < 2 || r > n {
            return Err(CoreError::BadParams(format!(
                "level factor {r} needs n > 2 and 2 <= r <= n"
            )));
        }
        let d = self.d();
        let c02 = self.c(0, 2);
        let b02d = self.b(0, 2).pow(d);
        let mut gens = vec![
            &self.c(0, 1) - &(&c02 * &b02d),
            &self.c(0, 1) - &self.c(0, 4),
            &self.s() - &(&self.f() * &b02d),
            &c02 - &self.c(0, 3),
            &self.b(0, 1) - &self.b(0, 4),
            &self.b(0, 2) - &(&self.b(1, 3) * &self.b(0, 3)),
        ];
        for u in self.aux_d(1)?.generators() {
            push_unique(&mut gens, u.clone());
        }
        for i in 1..=4 {
            push_unique(&mut gens, &self.scalar(1) - &self.b(1, i).pow(d));
        }
        if r > 2 {
            for i in 1..=4 {
                push_unique(&mut gens, &self.scalar(1) - &self.b(2, i));
            }
        }
        for i in 1..=4 {
            push_unique(&mut gens, &self.b(1, 3) - &self.b(1, i));
        }
        push_unique(&mut gens, &self.b(0, 3).pow(d) - &self.b(0, 1).pow(d));
        for k in 2..=r.saturating_sub(2) {
            for u in self.aux_d(k)?.generators() {
                push_unique(&mut gens, u.clone());
            }
            for i in 1..=4 {
                push_unique(&mut gens, &self.scalar(1) - &self.b(k + 1, i));
            }
        }
        for u in self.aux_d(r - 1)?.generators() {
            push_unique(&mut gens, u.clone());
        }
        for u in self.aux_c(r)?.generators() {
            push_unique(&mut gens, u.clone());
        }
        Ok(self.ideal(gens))
    }

    /// Second factor of the level-r colon: the intersection of all
    /// Q4[r,a,b,g] components over root triples.
    pub fn s_level_second(&self, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if n <= 2 || r < 2 || r > n {
            return Err(CoreError::BadParams(format!(
                "level factor {r} needs n > 2 and 2 <= r <= n"
            )));
        }
        let d = self.d();
        let mut gens = vec![
            self.s(),
            self.c(0, 1),
            self.c(0, 4),
            &self.c(0, 2) - &self.c(0, 3),
            &self.b(0, 1) - &self.b(0, 4),
            self.b(0, 2),
            self.b(0, 3),
            self.b(0, 1).pow(d),
        ];
        gens.extend(self.aux_c(1)?.generators().iter().cloned());
        push_unique(&mut gens, &self.b(1, 1) - &self.b(1, 4));
        for i in 1..=4 {
            push_unique(&mut gens, &self.scalar(1) - &self.b(1, i).pow(d));
        }
        if r > 2 {
            for i in 1..=4 {
                push_unique(&mut gens, &self.b(1, 2) - &(&self.b(2, i) * &self.b(1, 3)));
            }
            for i in 1..=4u32 {
                for j in i + 1..=4 {
                    push_unique(&mut gens, &self.b(2, i) - &self.b(2, j));
                }
            }
        }
        for k in 2..=r.saturating_sub(2) {
            for u in self.aux_d(k)?.generators() {
                push_unique(&mut gens, u.clone());
            }
            for i in 1..=4 {
                push_unique(&mut gens, &self.scalar(1) - &self.b(k + 1, i));
            }
        }
        for u in self.aux_d(r - 1)?.generators() {
            push_unique(&mut gens, u.clone());
        }
        for u in self.aux_c(r)?.generators() {
            push_unique(&mut gens, u.clone());
        }
        Ok(self.ideal(gens))
    }

    /// Q5[r,L] for r <= n-2 and nonempty L: height 8r+12.
    pub fn q5_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_nonempty_mask(mask, "Q5")?;
        let n = self.n();
        if r + 2 > n {
            return Err(CoreError::BadParams(format!("Q5 level {r} needs r <= n-2 = {}", n - 2)));
        }
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.push(self.b(r, 1));
        gens.push(self.b(r, 4));
        for i in subset_complement(mask) {
            gens.push(self.c(r + 1, i));
        }
        let members = subset_members(mask);
        for &i in &members {
            gens.push(&self.b(r, 2) - &(&self.b(r + 1, i) * &self.b(r, 3)));
        }
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                gens.push(&self.b(r + 1, i) - &self.b(r + 1, j));
            }
        }
        let mut entry = self.entry(
            format!("Q5[r={r},L={}]", subset_label(mask)),
            "Q5",
            Role::EmbeddedCandidate,
            8 * r + 12,
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    /// Q6[r] for r <= n-2: height 8r+11; its head generator mixes the
    /// level-r tower exponent.
    pub fn q6_prime(&self, r: u32) -> Result<CatalogEntry, CoreError> {
        let n = self.n();
        if r + 2 > n {
            return Err(CoreError::BadParams(format!("Q6 level {r} needs r <= n-2 = {}", n - 2)));
        }
        let e = self.small_exponent(self.tower_order(r)?, "Q6")?;
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend(self.aux_c(r + 1)?.generators().iter().cloned());
        gens.push(
            &(&self.b(r, 1) * &self.b(r, 3).pow(e)) - &(&self.b(r, 4) * &self.b(r, 2).pow(e)),
        );
        let mut entry = self.entry(
            format!("Q6[r={r}]"),
            "Q6",
            Role::EmbeddedCandidate,
            8 * r + 11,
            self.ideal(gens),
        );
        entry.r = Some(r);
        Ok(entry)
    }

    /// Q7[r] for r <= n-2: height 8r+13.
    pub fn q7_prime(&self, r: u32) -> Result<CatalogEntry, CoreError> {
        let n = self.n();
        if r + 2 > n {
            return Err(CoreError::BadParams(format!("Q7 level {r} needs r <= n-2 = {}", n - 2)));
        }
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend([
            self.c(r + 1, 1),
            self.c(r + 1, 2),
            self.c(r + 1, 4),
            self.b(r, 1),
            self.b(r, 2),
            self.b(r + 1, 3),
            self.b(r + 1, 4),
        ]);
        let mut entry = self.entry(
            format!("Q7[r={r}]"),
            "Q7",
            Role::EmbeddedCandidate,
            8 * r + 13,
            self.ideal(gens),
        );
        entry.r = Some(r);
        Ok(entry)
    }

    fn q8_base(&self, r: u32) -> Result<Vec<Poly>, CoreError> {
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend([
            self.c(r + 1, 1),
            self.c(r + 1, 4),
            self.b(r, 1),
            self.b(r, 2),
            self.b(r + 1, 2),
            self.b(r + 1, 3),
            &(&self.c(r + 1, 2) * &self.b(r + 1, 1)) - &(&self.c(r + 1, 3) * &self.b(r + 1, 4)),
        ]);
        Ok(gens)
    }

    /// Q8[r,L] for r <= n-3: height 8r+17.
    pub fn q8_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_mask(mask, "Q8")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q8 level {r} needs r <= n-3")));
        }
        let mut gens = self.q8_base(r)?;
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        for i in subset_members(mask) {
            gens.push(&self.scalar(1) - &self.b(r + 2, i));
        }
        let mut entry = self.entry(
            format!("Q8[r={r},L={}]", subset_label(mask)),
            "Q8",
            Role::EmbeddedCandidate,
            8 * r + 17,
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    /// Q9[r] for r <= n-2: the Q8 base alone, height 8r+13.
    pub fn q9_prime(&self, r: u32) -> Result<CatalogEntry, CoreError> {
        let n = self.n();
        if r + 2 > n {
            return Err(CoreError::BadParams(format!("Q9 level {r} needs r <= n-2 = {}", n - 2)));
        }
        let gens = self.q8_base(r)?;
        let mut entry = self.entry(
            format!("Q9[r={r}]"),
            "Q9",
            Role::EmbeddedCandidate,
            8 * r + 13,
            self.ideal(gens),
        );
        entry.r = Some(r);
        Ok(entry)
    }

    fn q10_base(&self, r: u32) -> Result<Vec<Poly>, CoreError> {
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend([
            self.c(r + 1, 1),
            self.c(r + 1, 3),
            self.c(r + 1, 4),
            self.b(r, 1),
            self.b(r, 2),
            self.b(r + 1, 1),
            self.b(r + 1, 2),
        ]);
        Ok(gens)
    }

    /// Q10[r,L] for r <= n-3: height 8r+17.
    pub fn q10_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_mask(mask, "Q10")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q10 level {r} needs r <= n-3")));
        }
        let mut gens = self.q10_base(r)?;
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        for i in subset_members(mask) {
            gens.push(self.b(r + 2, i));
        }
        let mut entry = self.entry(
            format!("Q10[r={r},L={}]", subset_label(mask)),
            "Q10",
            Role::EmbeddedCandidate,
            8 * r + 17,
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    /// Q11[r,L] for r <= n-3 and nonempty L: height 8r+17.
    pub fn q11_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_nonempty_mask(mask, "Q11")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q11 level {r} needs r <= n-3")));
        }
        let mut gens = self.q10_base(r)?;
        gens.push(self.b(r + 1, 3));
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        let members = subset_members(mask);
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                gens.push(&self.b(r + 2, i) - &self.b(r + 2, j));
            }
        }
        let mut entry = self.entry(
            format!("Q11[r={r},L={}]", subset_label(mask)),
            "Q11",
            Role::EmbeddedCandidate,
            8 * r + 17,
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    /// Q12[r,L,a] for r <= n-3 and a in the level-r root group: height 8r+19.
    pub fn q12_prime(&self, r: u32, mask: u8, a: u64) -> Result<CatalogEntry, CoreError> {
        self.check_mask(mask, "Q12")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q12 level {r} needs r <= n-3")));
        }
        self.check_root(a, self.tower_order(r)?, "Q12")?;
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend(self.aux_c(1)?.generators().iter().cloned());
        gens.extend([self.b(0, 1), self.b(0, 2), self.b(0, 3), self.b(1, 2), self.b(1, 3)]);
        for i in subset_complement(mask) {
            gens.push(self.c(2, i));
        }
        for i in subset_members(mask) {
            gens.push(&self.b(2, i) - &self.scalar(a as i64));
        }
        let mut entry = self.entry(
            format!("Q12[r={r},L={},a={a}]", subset_label(mask)),
            "Q12",
            Role::EmbeddedCandidate,
            8 * r + 19,
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        entry.alpha = Some(a);
        Ok(entry)
    }

    fn q13_base(&self, r: u32) -> Result<Vec<Poly>, CoreError> {
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend(self.aux_c(r + 1)?.generators().iter().cloned());
        gens.extend([
            self.b(r, 1),
            self.b(r, 2),
            self.b(r, 3),
            self.b(r + 1, 2),
            self.b(r + 1, 3),
        ]);
        Ok(gens)
    }

    /// Q13[r,L] for r <= n-3 and nonempty L: height 8r+18.
    pub fn q13_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_nonempty_mask(mask, "Q13")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q13 level {r} needs r <= n-3")));
        }
        let mut gens = self.q13_base(r)?;
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        let members = subset_members(mask);
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                gens.push(&self.b(r + 2, i) - &self.b(r + 2, j));
            }
        }
        let mut entry = self.entry(
            format!("Q13[r={r},L={}]", subset_label(mask)),
            "Q13",
            Role::EmbeddedCandidate,
            8 * r + 18,
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    /// Q14[r,L] for r <= n-3: height 8r+19, one more for the empty set.
    pub fn q14_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_mask(mask, "Q14")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q14 level {r} needs r <= n-3")));
        }
        let mut gens = self.q13_base(r)?;
        gens.push(self.b(r, 4));
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        let members = subset_members(mask);
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                gens.push(&self.b(r + 2, i) - &self.b(r + 2, j));
            }
        }
        let mut entry = self.entry(
            format!("Q14[r={r},L={}]", subset_label(mask)),
            "Q14",
            Role::EmbeddedCandidate,
            8 * r + 19 + if mask == 0 { 1 } else { 0 },
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    /// Q15[r,L] for r <= n-3: height 8r+19.
    pub fn q15_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_mask(mask, "Q15")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q15 level {r} needs r <= n-3")));
        }
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend([
            self.c(r + 1, 1),
            &self.c(r + 1, 3) - &self.c(r + 1, 2),
            self.c(r + 1, 4),
            self.b(r, 1),
            self.b(r, 2),
            self.b(r + 1, 1),
            self.b(r + 1, 2),
            self.b(r + 1, 3),
            self.b(r + 1, 4),
        ]);
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        for i in subset_members(mask) {
            gens.push(&self.scalar(1) - &self.b(r + 2, i));
        }
        let mut entry = self.entry(
            format!("Q15[r={r},L={}]", subset_label(mask)),
            "Q15",
            Role::EmbeddedCandidate,
            8 * r + 19,
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    fn q16_base(&self, r: u32) -> Result<Vec<Poly>, CoreError> {
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend(self.aux_c(r + 1)?.generators().iter().cloned());
        gens.extend([self.b(r, 1), self.b(r, 2)]);
        for i in 1..=4 {
            gens.push(self.b(r + 1, i));
        }
        Ok(gens)
    }

    /// Q16[r,L] for r <= n-3: height 8r+20.
    pub fn q16_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_mask(mask, "Q16")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q16 level {r} needs r <= n-3")));
        }
        let mut gens = self.q16_base(r)?;
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        for i in subset_members(mask) {
            gens.push(&self.scalar(1) - &self.b(r + 2, i));
        }
        let mut entry = self.entry(
            format!("Q16[r={r},L={}]", subset_label(mask)),
            "Q16",
            Role::EmbeddedCandidate,
            8 * r + 20,
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    /// Q17[r,L] for r <= n-3: height 8r+19, one more for the empty set.
    pub fn q17_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_mask(mask, "Q17")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q17 level {r} needs r <= n-3")));
        }
        let mut gens = self.q16_base(r)?;
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        let members = subset_members(mask);
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                gens.push(&self.b(r + 2, i) - &self.b(r + 2, j));
            }
        }
        let mut entry = self.entry(
            format!("Q17[r={r},L={}]", subset_label(mask)),
            "Q17",
            Role::EmbeddedCandidate,
            8 * r + 19 + if mask == 0 { 1 } else { 0 },
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    fn q18_base(&self, r: u32) -> Result<Vec<Poly>, CoreError> {
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend(self.aux_c(r + 1)?.generators().iter().cloned());
        gens.extend([self.b(r, 1), self.b(r, 2), self.b(r, 3)]);
        for i in 1..=4 {
            gens.push(self.b(r + 1, i));
        }
        Ok(gens)
    }

    /// Q18[r,L] for r <= n-3: height 8r+20, one more for the empty set.
    pub fn q18_prime(&self, r: u32, mask: u8) -> Result<CatalogEntry, CoreError> {
        self.check_mask(mask, "Q18")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q18 level {r} needs r <= n-3")));
        }
        let mut gens = self.q18_base(r)?;
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        let members = subset_members(mask);
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                gens.push(&self.b(r + 2, i) - &self.b(r + 2, j));
            }
        }
        let mut entry = self.entry(
            format!("Q18[r={r},L={}]", subset_label(mask)),
            "Q18",
            Role::EmbeddedCandidate,
            8 * r + 20 + if mask == 0 { 1 } else { 0 },
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        Ok(entry)
    }

    fn q19_like(
        &self,
        family: &'static str,
        r: u32,
        mask: u8,
        a: u64,
        claimed_height: u32,
    ) -> Result<CatalogEntry, CoreError> {
        let mut gens = self.q18_base(r)?;
        for i in subset_complement(mask) {
            gens.push(self.c(r + 2, i));
        }
        for i in subset_members(mask) {
            gens.push(&self.b(r + 2, i) - &self.scalar(a as i64));
        }
        let mut entry = self.entry(
            format!("{family}[r={r},L={},a={a}]", subset_label(mask)),
            family,
            Role::EmbeddedCandidate,
            claimed_height,
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.lambda = Some(mask);
        entry.alpha = Some(a);
        Ok(entry)
    }

    /// Q19[r,L,a] for r <= n-3, nonempty L, and a of exact next-tower order:
    /// height 8r+21.
    pub fn q19_prime(&self, r: u32, mask: u8, a: u64) -> Result<CatalogEntry, CoreError> {
        self.check_nonempty_mask(mask, "Q19")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q19 level {r} needs r <= n-3")));
        }
        self.check_root(a, self.tower_order(r + 1)?, "Q19")?;
        if self.roots(self.tower_order(r)?)?.contains(&a) {
            return Err(CoreError::BadParams(format!(
                "Q19: {a} must not already be a level-{r} root"
            )));
        }
        self.q19_like("Q19", r, mask, a, 8 * r + 21)
    }

    /// Q20[r,L,a] for r <= n-3, nonempty L, and a in the level-r root group:
    /// height 8r+21.
    pub fn q20_prime(&self, r: u32, mask: u8, a: u64) -> Result<CatalogEntry, CoreError> {
        self.check_nonempty_mask(mask, "Q20")?;
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q20 level {r} needs r <= n-3")));
        }
        self.check_root(a, self.tower_order(r)?, "Q20")?;
        self.q19_like("Q20", r, mask, a, 8 * r + 21)
    }

    fn check_level_pair(&self, family: &str, r: u32, t: u32) -> Result<(), CoreError> {
        let n = self.n();
        if r + 2 > n {
            return Err(CoreError::BadParams(format!(
                "{family} level {r} needs r <= n-2 = {}",
                n - 2
            )));
        }
        if t < r + 2 || t > n {
            return Err(CoreError::BadParams(format!(
                "{family} second level {t} not in {}..={n}",
                r + 2
            )));
        }
        Ok(())
    }

    /// Q21[r,t] for r <= n-2 and r+2 <= t <= n: height 7t+r, plus 4 when
    /// t < n.
    pub fn q21_prime(&self, r: u32, t: u32) -> Result<CatalogEntry, CoreError> {
        self.check_level_pair("Q21", r, t)?;
        let n = self.n();
        let d = self.d();
        let mut gens = self.aux_t(r)?.generators().to_vec();
        for k in r + 2..t {
            gens.extend(self.aux_d(k)?.generators().iter().cloned());
        }
        gens.extend(self.aux_c(t)?.generators().iter().cloned());
        gens.extend(self.aux_b_range(2, t - 1)?.generators().iter().cloned());
        gens.push(
            &self.c(r + 1, 1) - &(&self.b(r + 1, 2).pow(d * d) * &self.c(r + 1, 2)),
        );
        gens.push(&self.c(r + 1, 4) - &self.c(r + 1, 1));
        gens.push(&self.c(r + 1, 3) - &self.c(r + 1, 2));
        gens.push(&self.b(r, 2) - &(&self.b(r + 1, 2) * &self.b(r, 3)));
        for i in [1, 3, 4] {
            gens.push(&self.b(r + 1, 2) - &self.b(r + 1, i));
        }
        gens.push(&self.b(r, 1) - &(&self.b(r + 1, 2).pow(d) * &self.b(r, 4)));
        let mut entry = self.entry(
            format!("Q21[r={r},t={t}]"),
            "Q21",
            Role::EmbeddedCandidate,
            7 * t + r + if t < n { 4 } else { 0 },
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.t = Some(t);
        Ok(entry)
    }

    /// Q22[r,t] for r <= n-2 and r+2 <= t <= n: height 7t+r+1, plus 4 when
    /// t < n.
    pub fn q22_prime(&self, r: u32, t: u32) -> Result<CatalogEntry, CoreError> {
        self.check_level_pair("Q22", r, t)?;
        let n = self.n();
        let d = self.d();
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend(self.aux_c(r + 1)?.generators().iter().cloned());
        for k in r + 2..t {
            gens.extend(self.aux_d(k)?.generators().iter().cloned());
        }
        gens.extend(self.aux_c(t)?.generators().iter().cloned());
        gens.extend(self.aux_b_range(2, t - 1)?.generators().iter().cloned());
        gens.push(&self.b(r, 2) - &(&self.b(r + 1, 2) * &self.b(r, 3)));
        for i in [1, 3, 4] {
            gens.push(&self.b(r + 1, 2) - &self.b(r + 1, i));
        }
        gens.push(&self.b(r, 1) - &(&self.b(r + 1, 2).pow(d) * &self.b(r, 4)));
        let mut entry = self.entry(
            format!("Q22[r={r},t={t}]"),
            "Q22",
            Role::EmbeddedCandidate,
            7 * t + r + 1 + if t < n { 4 } else { 0 },
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.t = Some(t);
        Ok(entry)
    }

    /// Q23[r,t,a,b] for r <= n-3, r+2 <= t <= n, and level-r roots a, b:
    /// height 7t+r+2, plus 4 when t < n.
    pub fn q23_prime(&self, r: u32, t: u32, a: u64, b: u64) -> Result<CatalogEntry, CoreError> {
        let n = self.n();
        if r + 3 > n {
            return Err(CoreError::BadParams(format!("Q23 level {r} needs r <= n-3")));
        }
        self.check_level_pair("Q23", r, t)?;
        let order = self.tower_order(r)?;
        self.check_root(a, order, "Q23")?;
        self.check_root(b, order, "Q23")?;
        let d = self.d();
        let mut gens = self.aux_t(r)?.generators().to_vec();
        gens.extend(self.aux_c(r + 1)?.generators().iter().cloned());
        for k in r + 2..t {
            gens.extend(self.aux_d(k)?.generators().iter().cloned());
        }
        gens.extend(self.aux_c(t)?.generators().iter().cloned());
        gens.extend(self.aux_b_range(3, t - 1)?.generators().iter().cloned());
        gens.push(&self.b(r, 1) - &(&self.b(r + 1, 2).pow(d) * &self.b(r, 4)));
        gens.push(self.b(r, 2));
        gens.push(self.b(r, 3));
        gens.push(&self.b(r + 1, 2) - &(&self.scalar(a as i64) * &self.b(r + 1, 3)));
        gens.push(&self.b(r + 1, 1) - &(&self.scalar(b as i64) * &self.b(r + 1, 3)));
        gens.push(&self.b(r + 1, 1) - &self.b(r + 1, 4));
        for i in 1..=4 {
            gens.push(&self.b(r + 2, i) - &self.scalar(a as i64));
        }
        let mut entry = self.entry(
            format!("Q23[r={r},t={t},a={a},b={b}]"),
            "Q23",
            Role::EmbeddedCandidate,
            7 * t + r + 2 + if t < n { 4 } else { 0 },
            self.ideal(gens),
        );
        entry.r = Some(r);
        entry.t = Some(t);
        entry.alpha = Some(a);
        entry.beta = Some(b);
        Ok(entry)
    }

    /// The top-corner Q23 variant at (r, t) = (n-2, n) with roots from the
    /// full tower group: height 8n.
    pub fn q23_special_prime(&self, a: u64, b: u64) -> Result<CatalogEntry, CoreError> {
        let n = self.n();
        let order = self.tower_order(n - 2)?;
        self.check_root(a, order, "Q23s")?;
        self.check_root(b, order, "Q23s")?;
        let e = self.small_exponent(order, "Q23s")?;
        let mut gens = self.aux_t(n - 2)?.generators().to_vec();
        gens.extend(self.aux_c(n - 1)?.generators().iter().cloned());
        gens.push(
            &self.b(n - 2, 1) - &(&self.b(n - 1, 2).pow(e) * &self.b(n - 2, 4)),
        );
        gens.push(self.b(n - 2, 2));
        gens.push(self.b(n - 2, 3));
        gens.push(&self.b(n - 1, 1) - &self.b(n - 1, 4));
        gens.push(&self.b(n - 1, 2) - &(&self.scalar(a as i64) * &self.b(n - 1, 3)));
        gens.push(&self.b(n - 1, 1) - &(&self.scalar(b as i64) * &self.b(n - 1, 3)));
        let mut entry = self.entry(
            format!("Q23s[a={a},b={b}]"),
            "Q23s",
            Role::EmbeddedCandidate,
            8 * n,
            self.ideal(gens),
        );
        entry.r = Some(n - 2);
        entry.t = Some(n);
        entry.alpha = Some(a);
        entry.beta = Some(b);
        Ok(entry)
    }

    /// Q24: the lone corner prime at height 8n.
    pub fn q24_prime(&self) -> Result<CatalogEntry, CoreError> {
        let n = self.n();
        let mut gens = self.aux_t(n - 1)?.generators().to_vec();
        gens.push(&self.b(n - 1, 1) - &self.b(n - 1, 4));
        gens.push(&self.b(n - 1, 2) - &self.b(n - 1, 3));
        let mut entry = self.entry(
            String::from("Q24"),
            "Q24",
            Role::EmbeddedCandidate,
            8 * n,
            self.ideal(gens),
        );
        entry.r = Some(n - 1);
        Ok(entry)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Catalog, MMParams};
    use crate::field::Field;
    use crate::parse::parse_poly;

    fn catalog(n: u32, d: u32) -> Catalog {
        let order = match (n, d) {
            (2, 2) => 2,
            (2, 3) => 3,
            (3, 2) => 4,
            _ => panic!("unexpected test size"),
        };
        let params = MMParams::new(n, d, Field::new(13, order).unwrap()).unwrap();
        Catalog::new(params).unwrap()
    }

    #[test]
    fn q1_family_shapes() {
        let cat = catalog(2, 2);
        let empty = cat.q1_prime(0).unwrap();
        assert_eq!(empty.ideal.num_gens(), 10);
        assert_eq!(empty.claimed_height, 10);
        let pair = cat.q1_prime(0b0101).unwrap();
        assert_eq!(pair.id, "Q1[L={1,3}]");
        assert_eq!(pair.claimed_height, 9);
        assert_eq!(pair.ideal.num_gens(), 9);
        let ring = cat.ring();
        let diff = parse_poly(ring, "b11 - b13").unwrap();
        assert!(pair.ideal.generators().contains(&diff));
        assert_eq!(cat.q1_union().num_gens(), 16);
        assert_eq!(cat.q1_component(0).num_gens(), 10);
        assert_eq!(cat.q1_component(15).num_gens(), 16);
        let w = cat.q1_witness(0b0001);
        let expect =
            parse_poly(ring, "c11*(b11 - b12)*(b11 - b13)*(b11 - b14)").unwrap();
        assert_eq!(w, expect);
        let sep = cat.q1_separator();
        assert_eq!(sep, parse_poly(ring, "b02*b03*b11*b12*b13*b14").unwrap());
    }

    #[test]
    fn q2_q3_shapes() {
        let cat = catalog(2, 2);
        let q2 = cat.q2_prime(0b0001, 12).unwrap();
        assert_eq!(q2.id, "Q2[L={1},a=12]");
        assert_eq!(q2.ideal.num_gens(), 12);
        assert_eq!(q2.claimed_height, 12);
        assert!(cat.q2_prime(0, 1).is_err());
        assert!(cat.q2_prime(1, 2).is_err());
        let w = cat.q2_witness(0b0001);
        let expect = parse_poly(
            cat.ring(),
            "c02*c11*(1 - b12^2)*(1 - b13^2)*(1 - b14^2)",
        )
        .unwrap();
        assert_eq!(w, expect);
        let q3 = cat.q3_prime(0b1111).unwrap();
        assert_eq!(q3.ideal.num_gens(), 9 + 6);
        assert_eq!(q3.claimed_height, 12);
        assert!(cat.q3_prime(0).is_err());
    }

    #[test]
    fn q4_two_level_and_general() {
        let cat = catalog(2, 2);
        let q = cat.q42_prime(1, 12).unwrap();
        assert_eq!(q.ideal.num_gens(), 16);
        assert_eq!(q.claimed_height, 16);
        assert!(cat.q42_prime(2, 1).is_err());
        assert!(cat.q4_prime(2, 1, 1, 12).is_err());

        let cat3 = catalog(3, 2);
        assert!(cat3.q42_prime(1, 1).is_err());
        let q2 = cat3.q4_prime(2, 1, 1, 12).unwrap();
        assert_eq!(q2.claimed_height, 20);
        assert_eq!(q2.ideal.num_gens(), 20);
        let q3 = cat3.q4_prime(3, 1, 12, 12).unwrap();
        assert_eq!(q3.claimed_height, 23);
        assert_eq!(q3.ideal.num_gens(), 29);
        assert!(cat3.q4_prime(3, 1, 1, 1).is_err());
        assert!(cat3.q4_level_ideal(3, 1, 1, 1).is_ok());
    }

    #[test]
    fn chain_ideal_shapes() {
        let cat = catalog(2, 2);
        assert_eq!(cat.j_hat().num_gens(), 19);
        assert_eq!(cat.x_multiplier(), parse_poly(cat.ring(), "f^3").unwrap());
        assert_eq!(cat.c02_residue().num_gens(), 6);
        assert_eq!(cat.j_hat_colon_c02().num_gens(), 19);
        assert_eq!(cat.j_hat_colon_c02_plus_b02d().num_gens(), 11);
        assert_eq!(cat.j_hat_colon_c02_b02d().num_gens(), 30);
        assert_eq!(cat.j_hat_double_prime().num_gens(), 27);
        assert_eq!(cat.q2_union().num_gens(), 23);
        assert_eq!(cat.j_hat_double_prime_row().num_gens(), 24);
        assert_eq!(cat.j_hat_double_prime_row_reduced().num_gens(), 24);
        assert_eq!(cat.q3_union().num_gens(), 21);
        assert_eq!(cat.j_hat_prime().num_gens(), 26);
        assert_eq!(cat.q42_component().num_gens(), 18);

        let cat3 = catalog(3, 2);
        assert_eq!(cat3.j_hat().num_gens(), 20);
        assert_eq!(
            cat3.x_multiplier(),
            parse_poly(cat3.ring(), "f^3*c21*b13*(b21 - b22)").unwrap()
        );
    }

    #[test]
    fn level_ideal_shapes() {
        let cat = catalog(3, 2);
        assert_eq!(cat.j_hat_level(2).unwrap().num_gens(), 33);
        assert_eq!(cat.j_hat_level(3).unwrap().num_gens(), 54);
        assert!(cat.j_hat_level(1).is_err());
        assert_eq!(
            cat.x_multiplier_level(2).unwrap(),
            parse_poly(cat.ring(), "f^3*b13^5*(1 - b21)").unwrap()
        );
        assert_eq!(
            cat.x_multiplier_level(3).unwrap(),
            parse_poly(cat.ring(), "f^3*c21*b13^5*b23").unwrap()
        );
        assert_eq!(
            cat.level_multiplier(),
            parse_poly(cat.ring(), "c02*c13*b03^4").unwrap()
        );
        assert_eq!(cat.s_level_display(2).unwrap().num_gens(), 25);
        assert_eq!(cat.s_level_second(2).unwrap().num_gens(), 24);
        assert!(cat.s_level_first(2).is_ok());
        let two = catalog(2, 2);
        assert!(two.j_hat_level(2).is_err());
        assert!(two.x_multiplier_level(2).is_err());
    }

    #[test]
    fn tail_family_shapes() {
        let cat = catalog(2, 2);
        let q5 = cat.q5_prime(0, 0b0011).unwrap();
        assert_eq!(q5.id, "Q5[r=0,L={1,2}]");
        assert_eq!(q5.claimed_height, 12);
        assert!(cat.q5_prime(1, 1).is_err());
        assert!(cat.q5_prime(0, 0).is_err());
        assert_eq!(cat.q6_prime(0).unwrap().claimed_height, 11);
        assert_eq!(cat.q7_prime(0).unwrap().claimed_height, 13);
        assert_eq!(cat.q9_prime(0).unwrap().claimed_height, 13);
        assert!(cat.q8_prime(0, 0).is_err());
        assert!(cat.q10_prime(0, 0).is_err());
        let q21 = cat.q21_prime(0, 2).unwrap();
        assert_eq!(q21.claimed_height, 14);
        assert_eq!(q21.ideal.num_gens(), 14);
        let q22 = cat.q22_prime(0, 2).unwrap();
        assert_eq!(q22.claimed_height, 15);
        assert_eq!(q22.ideal.num_gens(), 15);
        assert!(cat.q21_prime(0, 3).is_err());
        let q23s = cat.q23_special_prime(1, 12).unwrap();
        assert_eq!(q23s.claimed_height, 16);
        assert_eq!(q23s.ideal.num_gens(), 16);
        assert!(cat.q23_prime(0, 2, 1, 1).is_err());
        let q24 = cat.q24_prime().unwrap();
        assert_eq!(q24.claimed_height, 16);
        assert_eq!(q24.ideal.num_gens(), 16);
    }

    #[test]
    fn deeper_families_need_three_levels() {
        let cat = catalog(3, 2);
        assert_eq!(cat.q8_prime(0, 15).unwrap().claimed_height, 17);
        assert_eq!(cat.q10_prime(0, 0).unwrap().claimed_height, 17);
        assert_eq!(cat.q11_prime(0, 1).unwrap().claimed_height, 17);
        assert_eq!(cat.q12_prime(0, 0, 12).unwrap().claimed_height, 19);
        assert_eq!(cat.q13_prime(0, 3).unwrap().claimed_height, 18);
        assert_eq!(cat.q14_prime(0, 0).unwrap().claimed_height, 20);
        assert_eq!(cat.q15_prime(0, 15).unwrap().claimed_height, 19);
        assert_eq!(cat.q16_prime(0, 15).unwrap().claimed_height, 20);
        assert_eq!(cat.q17_prime(0, 0).unwrap().claimed_height, 20);
        assert_eq!(cat.q18_prime(0, 15).unwrap().claimed_height, 20);
        let q19 = cat.q19_prime(0, 1, 5).unwrap();
        assert_eq!(q19.claimed_height, 21);
        assert!(cat.q19_prime(0, 1, 1).is_err());
        assert!(cat.q19_prime(0, 1, 2).is_err());
        assert_eq!(cat.q20_prime(0, 1, 12).unwrap().claimed_height, 21);
        assert!(cat.q20_prime(0, 1, 5).is_err());
        let q23 = cat.q23_prime(0, 3, 1, 12).unwrap();
        assert_eq!(q23.claimed_height, 23);
        let q23t = cat.q23_prime(0, 2, 12, 12).unwrap();
        assert_eq!(q23t.claimed_height, 20);
        assert_eq!(cat.q23_special_prime(5, 8).unwrap().claimed_height, 24);
        assert_eq!(cat.q24_prime().unwrap().claimed_height, 24);
        assert!(cat.q21_prime(1, 3).is_ok());
        assert!(cat.q21_prime(2, 4).is_err());
    }
}
