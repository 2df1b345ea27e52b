//! Krull dimension of R/I via leading-term ideals.
//!
//! The dimension of R/I equals the largest number of variables that are
//! algebraically independent modulo the leading-term ideal of any Groebner
//! basis of I: a variable set S is independent exactly when no leading
//! monomial has all its support inside S. The complement search is a small
//! branch-and-bound over the minimal supports.

use crate::error::CoreError;
use crate::ideal::Ideal;
use crate::ops::Ctx;
use crate::order::MonomialOrder;
use alloc::vec::Vec;

/// Krull dimension of R/I; -1 for the unit ideal, the variable count for
/// the zero ideal. Supported for rings with at most 64 variables.
pub fn dimension(cx: &Ctx, i: &Ideal) -> Result<i64, CoreError> {
    let gb = i.groebner(MonomialOrder::Grevlex, cx.budget)?;
    if gb.is_unit() {
        return Ok(-1);
    }
    let n = i.ring().num_vars();
    let mut supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support())
        .collect();
    supports.sort_unstable();
    supports.dedup();
    // Only minimal supports constrain independence.
    let minimal: Vec<u64> = supports
        .iter()
        .copied()
        .filter(|&s| {
            !supports
                .iter()
                .any(|&t| t != s && t & s == t)
        })
        .collect();
    // S independent <=> no support is a subset of S. Find the minimum
    // hitting set H of the supports; the answer is n - |H|.
    let mut best = u32::MAX;
    hit(&minimal, 0, 0, &mut best);
    let smallest_hitting = if minimal.is_empty() { 0 } else { best };
    Ok(n as i64 - smallest_hitting as i64)
}

fn hit(supports: &[u64], chosen: u64, count: u32, best: &mut u32) {
    if count >= *best {
        return;
    }
    // First support not yet hit; branch on each of its variables.
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => *best = count,
        Some(&s) => {
            let mut m = s;
            while m != 0 {
                let v = m.trailing_zeros();
                m &= m - 1;
                hit(supports, chosen | (1 << v), count + 1, best);
            }
        }
    }
}

/// Height (codimension) of a proper ideal: num_vars - dim(R/I). For the
/// primes in the catalog this is the height in the usual sense.
pub fn height(cx: &Ctx, i: &Ideal) -> Result<u32, CoreError> {
    let d = dimension(cx, i)?;
    if d < 0 {
        return Err(CoreError::UnitIdeal);
    }
    Ok(i.ring().num_vars() as u32 - d as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::parse_poly;
    use crate::poly::Poly;
    use crate::ring::Ring;

    #[test]
    fn zero_and_unit_ideals() {
        let cx = Ctx::default();
        let f = Field::new(13, 2).unwrap();
        let r = Ring::mayr_meyer(2, f).unwrap();
        let zero = Ideal::zero(&r);
        assert_eq!(dimension(&cx, &zero).unwrap(), 18);
        let unit = Ideal::new(&r, alloc::vec![Poly::one(&r)]);
        assert_eq!(dimension(&cx, &unit).unwrap(), -1);
        assert_eq!(height(&cx, &unit), Err(CoreError::UnitIdeal));
    }

    #[test]
    fn variable_ideals_have_their_count_as_height() {
        let cx = Ctx::default();
        let f = Field::new(13, 2).unwrap();
        let r = Ring::mayr_meyer(2, f).unwrap();
        let p0 = Ideal::new(
            &r,
            ["c01", "c02", "c03", "c04"]
                .iter()
                .map(|v| parse_poly(&r, v).unwrap())
                .collect(),
        );
        assert_eq!(height(&cx, &p0).unwrap(), 4);
        let sf = Ideal::new(
            &r,
            ["s", "f"].iter().map(|v| parse_poly(&r, v).unwrap()).collect(),
        );
        assert_eq!(height(&cx, &sf).unwrap(), 2);
        assert_eq!(dimension(&cx, &sf).unwrap(), 16);
    }

    #[test]
    fn hypersurfaces_have_height_one() {
        let cx = Ctx::default();
        let f = Field::new(13, 2).unwrap();
        let r = Ring::new(f, &["x", "y", "z"]);
        let i = Ideal::new(&r, alloc::vec![parse_poly(&r, "x*y - z^2").unwrap()]);
        assert_eq!(height(&cx, &i).unwrap(), 1);
    }

    #[test]
    fn dimension_needs_minimal_supports_only() {
        let cx = Ctx::default();
        let f = Field::new(13, 2).unwrap();
        let r = Ring::new(f, &["x", "y", "z", "w"]);
        // (xy, yz, zw) has minimum vertex cover {y, z}.
        let i = Ideal::new(
            &r,
            ["x*y", "y*z", "z*w"]
                .iter()
                .map(|s| parse_poly(&r, s).unwrap())
                .collect(),
        );
        assert_eq!(dimension(&cx, &i).unwrap(), 2);
    }
}
