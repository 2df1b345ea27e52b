//! Generator lists for J(n,d), K(n,d), and the auxiliary building-block
//! ideals (E, F, C_r, D_r, B_r, p_r, T_r, and the J_2 family) that the
//! decomposition identities are phrased in.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::CoreError;
use crate::ideal::Ideal;
use crate::poly::Poly;

use super::Catalog;

impl Catalog {
    /// `s * c01 * c11 * ... * c_{last,1}`; just `s` when `last` is negative.
    fn prefix(&self, last: i64) -> Poly {
        let mut p = self.s();
        let mut k = 0i64;
        while k <= last {
            p = &p * &self.c(k as u32, 1);
            k += 1;
        }
        p
    }

    /// `b01^d * c11 * ... * c_{last,1}`; just `b01^d` when `last` is zero or less.
    fn k_prefix(&self, last: i64) -> Poly {
        let mut p = self.b(0, 1).pow(self.d());
        let mut k = 1i64;
        while k <= last {
            p = &p * &self.c(k as u32, 1);
            k += 1;
        }
        p
    }

    /// The defining ideal J(n,d); 8n+1 generators in a fixed order.
    pub fn ideal_j(&self) -> Ideal {
        self.ideal(self.j_generators())
    }

    /// The generators of J(n,d) in catalog order.
    pub fn j_generators(&self) -> Vec<Poly> {
        let d = self.d();
        let mut gens = Vec::new();
        for i in 1..=4 {
            let body = &self.s() - &(&self.f() * &self.b(0, i).pow(d));
            gens.push(&self.c(0, i) * &body);
        }
        gens.push(&(&self.f() * &self.c(0, 1)) - &(&self.s() * &self.c(0, 2)));
        gens.push(&(&self.f() * &self.c(0, 4)) - &(&self.s() * &self.c(0, 3)));
        gens.push(&self.s() * &(&self.c(0, 3) - &self.c(0, 2)));
        gens.push(&self.f() * &(&(&self.c(0, 2) * &self.b(0, 1)) - &(&self.c(0, 3) * &self.b(0, 4))));
        for i in 1..=4 {
            let body = &self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3));
            gens.push(&(&(&self.f() * &self.c(0, 2)) * &self.c(1, i)) * &body);
        }
        gens.extend(self.j_upper_generators(true));
        gens
    }

    /// The level-2-and-up generators of J(n,d) (those divisible by `s`),
    /// either as written or with the `s` factor removed.
    fn j_upper_generators(&self, include_s: bool) -> Vec<Poly> {
        let n = self.n();
        let pre = |last: i64| -> Poly {
            if include_s {
                self.prefix(last)
            } else {
                let with_s = self.prefix(last);
                with_s.exact_div(&self.s()).expect("prefix is divisible by s")
            }
        };
        let mut gens = Vec::new();
        for r in 2..=n {
            let rm2 = r - 2;
            let rm1 = r - 1;
            gens.push(
                &pre(r as i64 - 3)
                    * &(&(&self.c(rm2, 4) * &self.c(rm1, 1)) - &(&self.c(rm2, 1) * &self.c(rm1, 2))),
            );
            gens.push(
                &pre(r as i64 - 3)
                    * &(&(&self.c(rm2, 4) * &self.c(rm1, 4)) - &(&self.c(rm2, 1) * &self.c(rm1, 3))),
            );
            gens.push(&pre(r as i64 - 2) * &(&self.c(rm1, 3) - &self.c(rm1, 2)));
            gens.push(
                &(&pre(r as i64 - 3) * &self.c(rm2, 4))
                    * &(&(&self.c(rm1, 2) * &self.b(rm1, 1)) - &(&self.c(rm1, 3) * &self.b(rm1, 4))),
            );
            if r < n {
                for i in 1..=4 {
                    let head = &(&pre(r as i64 - 3) * &self.c(rm2, 4)) * &self.c(rm1, 2);
                    let body = &self.b(rm1, 2) - &(&self.b(r, i) * &self.b(rm1, 3));
                    gens.push(&(&head * &self.c(r, i)) * &body);
                }
            }
        }
        let head = &(&pre(n as i64 - 3) * &self.c(n - 2, 4)) * &self.c(n - 1, 2);
        gens.push(&head * &(&self.b(n - 1, 2) - &self.b(n - 1, 3)));
        gens
    }

    /// The companion ideal K(n,d); its generators avoid `s`, `f`, and the
    /// level-0 `c` variables entirely.
    pub fn ideal_k(&self) -> Ideal {
        self.ideal(self.k_generators())
    }

    /// The generators of K(n,d) in catalog order.
    pub fn k_generators(&self) -> Vec<Poly> {
        let n = self.n();
        let d = self.d();
        let mut gens = Vec::new();
        gens.push(
            &(&self.b(0, 1) * &self.b(0, 3).pow(d)) - &(&self.b(0, 4) * &self.b(0, 2).pow(d)),
        );
        for i in 1..=4 {
            gens.push(&self.c(1, i) * &(&self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3))));
        }
        for i in 1..=4 {
            gens.push(&self.c(1, i) * &(&self.b(0, 1) - &(&self.b(1, i).pow(d) * &self.b(0, 4))));
        }
        for i in 1..=4 {
            for j in (i + 1)..=4 {
                gens.push(&(&self.c(1, i) * &self.c(1, j)) * &(&self.b(1, i) - &self.b(1, j)));
            }
        }
        let b01d = self.b(0, 1).pow(d);
        let b04d = self.b(0, 4).pow(d);
        gens.push(&(&b04d * &self.c(1, 1)) - &(&b01d * &self.c(1, 2)));
        gens.push(&(&b04d * &self.c(1, 4)) - &(&b01d * &self.c(1, 3)));
        gens.push(&b01d * &(&self.c(1, 2) - &self.c(1, 3)));
        gens.push(&b04d * &(&(&self.c(1, 2) * &self.b(1, 1)) - &(&self.c(1, 3) * &self.b(1, 4))));
        if n == 2 {
            gens.push(&(&b04d * &self.c(1, 2)) * &(&self.b(1, 2) - &self.b(1, 3)));
        } else {
            for i in 1..=4 {
                let body = &self.b(1, 2) - &(&self.b(2, i) * &self.b(1, 3));
                gens.push(&(&(&b04d * &self.c(1, 2)) * &self.c(2, i)) * &body);
            }
        }
        for r in 3..=n {
            let rm2 = r - 2;
            let rm1 = r - 1;
            gens.push(
                &self.k_prefix(r as i64 - 3)
                    * &(&(&self.c(rm2, 4) * &self.c(rm1, 1)) - &(&self.c(rm2, 1) * &self.c(rm1, 2))),
            );
            gens.push(
                &self.k_prefix(r as i64 - 3)
                    * &(&(&self.c(rm2, 4) * &self.c(rm1, 4)) - &(&self.c(rm2, 1) * &self.c(rm1, 3))),
            );
            gens.push(&self.k_prefix(r as i64 - 2) * &(&self.c(rm1, 3) - &self.c(rm1, 2)));
            gens.push(
                &(&self.k_prefix(r as i64 - 3) * &self.c(rm2, 4))
                    * &(&(&self.c(rm1, 2) * &self.b(rm1, 1)) - &(&self.c(rm1, 3) * &self.b(rm1, 4))),
            );
            if r < n {
                for i in 1..=4 {
                    let head = &(&self.k_prefix(r as i64 - 3) * &self.c(rm2, 4)) * &self.c(rm1, 2);
                    let body = &self.b(rm1, 2) - &(&self.b(r, i) * &self.b(rm1, 3));
                    gens.push(&(&head * &self.c(r, i)) * &body);
                }
            }
        }
        if n >= 3 {
            let head = &(&self.k_prefix(n as i64 - 3) * &self.c(n - 2, 4)) * &self.c(n - 1, 2);
            gens.push(&head * &(&self.b(n - 1, 2) - &self.b(n - 1, 3)));
        }
        gens
    }

    /// E = (s - f b01^d, b01 - b04, b02^d - b03^d, b01^d - b02^d).
    pub fn aux_e(&self) -> Ideal {
        let d = self.d();
        self.ideal(vec![
            &self.s() - &(&self.f() * &self.b(0, 1).pow(d)),
            &self.b(0, 1) - &self.b(0, 4),
            &self.b(0, 2).pow(d) - &self.b(0, 3).pow(d),
            &self.b(0, 1).pow(d) - &self.b(0, 2).pow(d),
        ])
    }

    /// F = (b02 - b11 b03, b14 - b11, b13 - b11, b12 - b11, b12^d - 1).
    pub fn aux_f(&self) -> Ideal {
        let d = self.d();
        self.ideal(vec![
            &self.b(0, 2) - &(&self.b(1, 1) * &self.b(0, 3)),
            &self.b(1, 4) - &self.b(1, 1),
            &self.b(1, 3) - &self.b(1, 1),
            &self.b(1, 2) - &self.b(1, 1),
            &self.b(1, 2).pow(d) - &self.scalar(1),
        ])
    }

    /// C_r = (c_{r1}, c_{r2}, c_{r3}, c_{r4}) for r < n; C_n is the zero ideal.
    pub fn aux_c(&self, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if r > n {
            return Err(CoreError::BadParams(alloc::format!("C_{r} needs r <= n = {n}")));
        }
        if r == n {
            return Ok(self.zero_ideal());
        }
        Ok(self.ideal((1..=4).map(|i| self.c(r, i)).collect()))
    }

    /// D_0 = (c04 - c01, c03 - c02, c01 - c02 b01^d); D_r for 0 < r < n ties
    /// the four c_{ri} together; D_n is the zero ideal.
    pub fn aux_d(&self, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if r > n {
            return Err(CoreError::BadParams(alloc::format!("D_{r} needs r <= n = {n}")));
        }
        if r == n {
            return Ok(self.zero_ideal());
        }
        if r == 0 {
            return Ok(self.ideal(vec![
                &self.c(0, 4) - &self.c(0, 1),
                &self.c(0, 3) - &self.c(0, 2),
                &self.c(0, 1) - &(&self.c(0, 2) * &self.b(0, 1).pow(self.d())),
            ]));
        }
        Ok(self.ideal(vec![
            &self.c(r, 4) - &self.c(r, 1),
            &self.c(r, 3) - &self.c(r, 2),
            &self.c(r, 2) - &self.c(r, 1),
        ]))
    }

    /// B_r = (1 - b_{ki} | 2 <= k <= r, i = 1..4); zero for r <= 1.
    pub fn aux_b_ideal(&self, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if r > n - 1 {
            return Err(CoreError::BadParams(alloc::format!("B_{r} needs r <= n-1 = {}", n - 1)));
        }
        self.aux_b_range(2, r)
    }

    /// B_{k,r} = (1 - b_{ti} | k <= t <= r, i = 1..4); zero when k > r.
    pub fn aux_b_range(&self, k: u32, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if r > n - 1 {
            return Err(CoreError::BadParams(alloc::format!(
                "B_{{{k},{r}}} needs r <= n-1 = {}",
                n - 1
            )));
        }
        let mut gens = Vec::new();
        let mut t = k;
        while t <= r {
            for i in 1..=4 {
                gens.push(&self.scalar(1) - &self.b(t, i));
            }
            t += 1;
        }
        Ok(self.ideal(gens))
    }

    /// p_1 = C_1 + E + D_0; p_r = C_r + E + F + B_{r-1} + D_0 + ... + D_{r-1}.
    pub fn aux_p(&self, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if r < 1 || r > n {
            return Err(CoreError::BadParams(alloc::format!("p_{r} needs 1 <= r <= n = {n}")));
        }
        let mut gens = self.aux_c(r)?.generators().to_vec();
        gens.extend(self.aux_e().generators().iter().cloned());
        if r >= 2 {
            gens.extend(self.aux_f().generators().iter().cloned());
            gens.extend(self.aux_b_ideal(r - 1)?.generators().iter().cloned());
        }
        for k in 0..r {
            gens.extend(self.aux_d(k)?.generators().iter().cloned());
        }
        Ok(self.ideal(gens))
    }

    /// T_r = (s, f) + C_0 + ... + C_r + (b_{ti} | t < r, i = 1..4).
    pub fn aux_t(&self, r: u32) -> Result<Ideal, CoreError> {
        let n = self.n();
        if r > n {
            return Err(CoreError::BadParams(alloc::format!("T_{r} needs r <= n = {n}")));
        }
        let mut gens = vec![self.s(), self.f()];
        for k in 0..=r {
            gens.extend(self.aux_c(k)?.generators().iter().cloned());
        }
        for t in 0..r {
            for i in 1..=4 {
                gens.push(self.b(t, i));
            }
        }
        Ok(self.ideal(gens))
    }

    /// J_2: the level-2-and-up generators of J with their `s` factor removed.
    pub fn j2(&self) -> Ideal {
        self.ideal(self.j_upper_generators(false))
    }

    /// J_2 after the substitutions c01 -> c02 b01^d, c03 -> c02,
    /// c04 -> c02 b04^d; every generator becomes a multiple of c02.
    pub fn j2_prime(&self) -> Ideal {
        let d = self.d();
        let c01 = self.ring().var_c(0, 1);
        let c03 = self.ring().var_c(0, 3);
        let c04 = self.ring().var_c(0, 4);
        let img01 = &self.c(0, 2) * &self.b(0, 1).pow(d);
        let img03 = self.c(0, 2);
        let img04 = &self.c(0, 2) * &self.b(0, 4).pow(d);
        let gens = self
            .j_upper_generators(false)
            .into_iter()
            .map(|g| g.substitute(c01, &img01).substitute(c03, &img03).substitute(c04, &img04))
            .collect();
        self.ideal(gens)
    }

    /// J_2 with every generator divided by its guaranteed c02 factor after
    /// the [`Catalog::j2_prime`] substitutions.
    pub fn j2_prime_over_c02(&self) -> Ideal {
        let c02 = self.c(0, 2);
        let gens = self
            .j2_prime()
            .generators()
            .iter()
            .map(|g| g.exact_div(&c02).expect("each rewritten generator is divisible by c02"))
            .collect();
        self.ideal(gens)
    }

    /// J_2 evaluated at s = c01 = c04 = 1 (the `s`-free shadow of the
    /// level-2-and-up generators).
    pub fn j2_double_prime(&self) -> Ideal {
        let one = self.scalar(1);
        let c01 = self.ring().var_c(0, 1);
        let c04 = self.ring().var_c(0, 4);
        let gens = self
            .j_upper_generators(false)
            .into_iter()
            .map(|g| g.substitute(c01, &one).substitute(c04, &one))
            .filter(|g| !g.is_zero())
            .collect();
        self.ideal(gens)
    }

    /// The c11-free core of [`Catalog::j2_double_prime`]: summing over levels
    /// r = 1..n-1 the ideal D_{r+1} + (b_{r1} - b_{r4}) +
    /// (c_{r+1,1}(b_{r2} - b_{r+1,i} b_{r3}) | i), scaled by c21...c_{r1},
    /// under the boundary conventions c_{n,i} = b_{n,i} = 1 and D_n = 0.
    pub fn j2_triple_prime(&self) -> Ideal {
        let n = self.n();
        let one = self.scalar(1);
        let c_at = |r: u32, i: u32| if r >= n { one.clone() } else { self.c(r, i) };
        let b_at = |r: u32, i: u32| if r >= n { one.clone() } else { self.b(r, i) };
        let mut gens: Vec<Poly> = Vec::new();
        let push = |p: Poly, gens: &mut Vec<Poly>| {
            if !p.is_zero() && !gens.contains(&p) {
                gens.push(p);
            }
        };
        for r in 1..n {
            let mut scale = one.clone();
            for k in 2..=r {
                scale = &scale * &self.c(k, 1);
            }
            if r + 1 < n {
                for g in self.aux_d(r + 1).expect("r+1 <= n").generators() {
                    push(&scale * g, &mut gens);
                }
            }
            push(&scale * &(&self.b(r, 1) - &self.b(r, 4)), &mut gens);
            for i in 1..=4 {
                let body = &self.b(r, 2) - &(&b_at(r + 1, i) * &self.b(r, 3));
                push(&(&scale * &c_at(r + 1, 1)) * &body, &mut gens);
            }
        }
        self.ideal(gens)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Catalog, MMParams};
    use crate::field::Field;
    use crate::parse::parse_poly;
    use crate::poly::Poly;

    fn catalog(n: u32, d: u32) -> Catalog {
        Catalog::new(MMParams::with_default_field(n, d).unwrap()).unwrap()
    }

    fn p(cat: &Catalog, text: &str) -> Poly {
        parse_poly(cat.ring(), text).unwrap()
    }

    #[test]
    fn j_generator_counts() {
        assert_eq!(catalog(2, 2).j_generators().len(), 17);
        assert_eq!(catalog(2, 3).j_generators().len(), 17);
        assert_eq!(catalog(3, 2).j_generators().len(), 25);
        assert_eq!(catalog(4, 2).j_generators().len(), 33);
    }

    #[test]
    fn k_generator_counts() {
        assert_eq!(catalog(2, 2).k_generators().len(), 20);
        assert_eq!(catalog(2, 3).k_generators().len(), 20);
        assert_eq!(catalog(3, 2).k_generators().len(), 28);
        assert_eq!(catalog(4, 2).k_generators().len(), 36);
    }

    #[test]
    fn j_generators_verbatim_at_2_2() {
        let cat = catalog(2, 2);
        let h = cat.j_generators();
        assert_eq!(h[0], p(&cat, "c01*(s - f*b01^2)"));
        assert_eq!(h[3], p(&cat, "c04*(s - f*b04^2)"));
        assert_eq!(h[4], p(&cat, "f*c01 - s*c02"));
        assert_eq!(h[5], p(&cat, "f*c04 - s*c03"));
        assert_eq!(h[6], p(&cat, "s*(c03 - c02)"));
        assert_eq!(h[7], p(&cat, "f*(c02*b01 - c03*b04)"));
        assert_eq!(h[8], p(&cat, "f*c02*c11*(b02 - b11*b03)"));
        assert_eq!(h[12], p(&cat, "s*(c04*c11 - c01*c12)"));
        assert_eq!(h[13], p(&cat, "s*(c04*c14 - c01*c13)"));
        assert_eq!(h[14], p(&cat, "s*c01*(c13 - c12)"));
        assert_eq!(h[15], p(&cat, "s*c04*(c12*b11 - c13*b14)"));
        assert_eq!(h[16], p(&cat, "s*c04*c12*(b12 - b13)"));
    }

    #[test]
    fn j_level_three_generators_use_prefix_products() {
        let cat = catalog(3, 2);
        let h = cat.j_generators();
        // Levels: 4 + 8 at levels 0 and 1, then level 2 rows 12..19, level 3 rows 20..24.
        assert_eq!(h[12], p(&cat, "s*(c04*c11 - c01*c12)"));
        assert_eq!(h[16], p(&cat, "s*c04*c12*c21*(b12 - b21*b13)"));
        assert_eq!(h[20], p(&cat, "s*c01*(c14*c21 - c11*c22)"));
        assert_eq!(h[22], p(&cat, "s*c01*c11*(c23 - c22)"));
        assert_eq!(h[23], p(&cat, "s*c01*c14*(c22*b21 - c23*b24)"));
        assert_eq!(h[24], p(&cat, "s*c01*c14*c22*(b22 - b23)"));
    }

    #[test]
    fn k_generators_verbatim_at_2_2() {
        let cat = catalog(2, 2);
        let g = cat.k_generators();
        assert_eq!(g[0], p(&cat, "b01*b03^2 - b04*b02^2"));
        assert_eq!(g[1], p(&cat, "c11*(b02 - b11*b03)"));
        assert_eq!(g[5], p(&cat, "c11*(b01 - b11^2*b04)"));
        assert_eq!(g[9], p(&cat, "c11*c12*(b11 - b12)"));
        assert_eq!(g[11], p(&cat, "c11*c14*(b11 - b14)"));
        assert_eq!(g[14], p(&cat, "c13*c14*(b13 - b14)"));
        assert_eq!(g[15], p(&cat, "b04^2*c11 - b01^2*c12"));
        assert_eq!(g[16], p(&cat, "b04^2*c14 - b01^2*c13"));
        assert_eq!(g[17], p(&cat, "b01^2*(c12 - c13)"));
        assert_eq!(g[18], p(&cat, "b04^2*(c12*b11 - c13*b14)"));
        assert_eq!(g[19], p(&cat, "b04^2*c12*(b12 - b13)"));
    }

    #[test]
    fn k_generators_verbatim_at_3_2() {
        let cat = catalog(3, 2);
        let g = cat.k_generators();
        assert_eq!(g[19], p(&cat, "b04^2*c12*c21*(b12 - b21*b13)"));
        assert_eq!(g[22], p(&cat, "b04^2*c12*c24*(b12 - b24*b13)"));
        assert_eq!(g[23], p(&cat, "b01^2*(c14*c21 - c11*c22)"));
        assert_eq!(g[24], p(&cat, "b01^2*(c14*c24 - c11*c23)"));
        assert_eq!(g[25], p(&cat, "b01^2*c11*(c23 - c22)"));
        assert_eq!(g[26], p(&cat, "b01^2*c14*(c22*b21 - c23*b24)"));
        assert_eq!(g[27], p(&cat, "b01^2*c14*c22*(b22 - b23)"));
    }

    #[test]
    fn k_generators_avoid_s_f_and_level_zero_c() {
        for (n, d) in [(2u32, 2u32), (2, 3), (3, 2)] {
            let cat = catalog(n, d);
            let forbidden: alloc::vec::Vec<usize> = [
                cat.ring().var_s(),
                cat.ring().var_f(),
                cat.ring().var_c(0, 1),
                cat.ring().var_c(0, 2),
                cat.ring().var_c(0, 3),
                cat.ring().var_c(0, 4),
            ]
            .to_vec();
            for g in cat.k_generators() {
                for v in &forbidden {
                    assert!(
                        !g.involves_var(*v),
                        "K generator {g} uses forbidden variable index {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn aux_ideals_verbatim_at_2_2() {
        let cat = catalog(2, 2);
        let e = cat.aux_e();
        assert_eq!(e.generators().len(), 4);
        assert_eq!(e.generators()[0], p(&cat, "s - f*b01^2"));
        assert_eq!(e.generators()[2], p(&cat, "b02^2 - b03^2"));
        let f = cat.aux_f();
        assert_eq!(f.generators().len(), 5);
        assert_eq!(f.generators()[0], p(&cat, "b02 - b11*b03"));
        assert_eq!(f.generators()[4], p(&cat, "b12^2 - 1"));
        let d0 = cat.aux_d(0).unwrap();
        assert_eq!(d0.generators()[2], p(&cat, "c01 - c02*b01^2"));
        let d1 = cat.aux_d(1).unwrap();
        assert_eq!(d1.generators()[0], p(&cat, "c14 - c11"));
        assert!(cat.aux_d(2).unwrap().generators().is_empty());
        assert!(cat.aux_c(2).unwrap().generators().is_empty());
        assert!(cat.aux_b_ideal(1).unwrap().generators().is_empty());
    }

    #[test]
    fn aux_p_and_t_counts() {
        let cat = catalog(2, 2);
        assert_eq!(cat.aux_p(1).unwrap().generators().len(), 11);
        // p_2 at n=2: C_2 empty + E + F + B_1 empty + D_0 + D_1.
        assert_eq!(cat.aux_p(2).unwrap().generators().len(), 15);
        assert_eq!(cat.aux_t(0).unwrap().generators().len(), 6);
        assert_eq!(cat.aux_t(1).unwrap().generators().len(), 14);
        let cat3 = catalog(3, 2);
        assert_eq!(cat3.aux_b_ideal(2).unwrap().generators().len(), 4);
        assert_eq!(cat3.aux_b_range(2, 2).unwrap().generators().len(), 4);
        assert_eq!(cat3.aux_b_range(3, 2).unwrap().generators().len(), 0);
        // p_3 at n = 3: C_3 empty, E (4), F (5), B_2 (4), D_0 + D_1 + D_2 (9).
        assert_eq!(cat3.aux_p(3).unwrap().generators().len(), 22);
    }

    #[test]
    fn j2_family_shapes() {
        let cat = catalog(2, 2);
        let j2 = cat.j2();
        assert_eq!(j2.generators().len(), 5);
        assert_eq!(j2.generators()[0], p(&cat, "c04*c11 - c01*c12"));
        let over = cat.j2_prime_over_c02();
        let k = cat.k_generators();
        let expect = [&k[15], &k[16], &k[17], &k[18], &k[19]];
        assert_eq!(over.generators().len(), 5);
        for (got, want) in over.generators().iter().zip(expect) {
            assert!(
                got == want || *got == want.neg_ref(),
                "expected {want} up to sign, got {got}"
            );
        }
        let dpp = cat.j2_double_prime();
        assert_eq!(dpp.generators().len(), 5);
        assert_eq!(dpp.generators()[0], p(&cat, "c11 - c12"));
        let tpp = cat.j2_triple_prime();
        assert_eq!(tpp.generators().len(), 2);
        assert_eq!(tpp.generators()[0], p(&cat, "b11 - b14"));
        assert_eq!(tpp.generators()[1], p(&cat, "b12 - b13"));
    }

    #[test]
    fn j2_triple_prime_at_3_2() {
        let cat = catalog(3, 2);
        let tpp = cat.j2_triple_prime();
        // r=1 block: D_2 (3 gens), b11-b14, c21*(b12 - b2i*b13) for i=1..4;
        // r=2 block scaled by c21: b21-b24, b22 - b23 (merged duplicates).
        assert_eq!(tpp.generators()[0], p(&cat, "c24 - c21"));
        assert!(tpp.generators().contains(&p(&cat, "b11 - b14")));
        assert!(tpp.generators().contains(&p(&cat, "c21*(b12 - b21*b13)")));
        assert!(tpp.generators().contains(&p(&cat, "c21*(b21 - b24)")));
        assert!(tpp.generators().contains(&p(&cat, "c21*(b22 - b23)")));
        assert_eq!(tpp.generators().len(), 10);
    }
}
