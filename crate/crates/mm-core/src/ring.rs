//! Polynomial rings: a coefficient field plus a named-variable table.
//!
//! The Mayr-Meyer ring on level count `n` has the 8n + 2 variables
//! `s, f, c01..c04, b01..b04, c11..c14, b11..b14, ...` in that order.
//! Levels 10 and above use an underscore separator (`b10_2`).

use crate::error::CoreError;
use crate::field::Field;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

/// An ordered list of variable names with reverse lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new(names: Vec<String>) -> Self {
        VarTable { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A polynomial ring over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: Field,
    table: VarTable,
    /// Mayr-Meyer level count when this ring was built by `mayr_meyer`.
    levels: Option<u32>,
}

impl Ring {
    /// A ring with arbitrary variable names.
    pub fn new(field: Field, names: &[&str]) -> Arc<Ring> {
        Arc::new(Ring {
            field,
            table: VarTable::new(names.iter().map(|s| s.to_string()).collect()),
            levels: None,
        })
    }

    /// The Mayr-Meyer ring k[s, f, c_ri, b_ri | r = 0..n-1, i = 1..4].
    ///
    /// Requires n >= 2; the families J(n,d) and K(n,d) are not defined below
    /// two levels.
    pub fn mayr_meyer(n: u32, field: Field) -> Result<Arc<Ring>, CoreError> {
        if n < 2 {
            return Err(CoreError::BadParams(format!(
                "level count must be at least 2, got {n}"
            )));
        }
        let mut names = Vec::with_capacity(2 + 8 * n as usize);
        names.push("s".to_string());
        names.push("f".to_string());
        for r in 0..n {
            for i in 1..=4u32 {
                names.push(var_name('c', r, i));
            }
            for i in 1..=4u32 {
                names.push(var_name('b', r, i));
            }
        }
        Ok(Arc::new(Ring {
            field,
            table: VarTable::new(names),
            levels: Some(n),
        }))
    }

    /// The same ring with extra variables appended at the end.
    pub fn extended(self: &Arc<Self>, extra: &[&str]) -> Arc<Ring> {
        let mut names = self.table.names.clone();
        names.extend(extra.iter().map(|s| s.to_string()));
        Arc::new(Ring {
            field: self.field,
            table: VarTable::new(names),
            levels: None,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn table(&self) -> &VarTable {
        &self.table
    }

    pub fn num_vars(&self) -> usize {
        self.table.len()
    }

    /// Level count for Mayr-Meyer rings, if this ring is one.
    pub fn levels(&self) -> Option<u32> {
        self.levels
    }

    pub fn var_s(&self) -> usize {
        0
    }

    pub fn var_f(&self) -> usize {
        1
    }

    /// Index of c_{ri}; r counts from 0, i from 1 to 4.
    pub fn var_c(&self, r: u32, i: u32) -> usize {
        debug_assert!((1..=4).contains(&i));
        2 + 8 * r as usize + (i as usize - 1)
    }

    /// Index of b_{ri}; r counts from 0, i from 1 to 4.
    pub fn var_b(&self, r: u32, i: u32) -> usize {
        debug_assert!((1..=4).contains(&i));
        2 + 8 * r as usize + 4 + (i as usize - 1)
    }
}

/// Two rings are compatible when they agree on field and variables.
pub fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn var_name(kind: char, r: u32, i: u32) -> String {
    if r < 10 {
        format!("{kind}{r}{i}")
    } else {
        format!("{kind}{r}_{i}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mayr_meyer_ring_layout() {
        let f = Field::new(13, 2).unwrap();
        let r = Ring::mayr_meyer(2, f).unwrap();
        assert_eq!(r.num_vars(), 18);
        assert_eq!(r.table().name(0), "s");
        assert_eq!(r.table().name(1), "f");
        assert_eq!(r.table().name(r.var_c(0, 1)), "c01");
        assert_eq!(r.table().name(r.var_b(0, 4)), "b04");
        assert_eq!(r.table().name(r.var_c(1, 3)), "c13");
        assert_eq!(r.table().name(r.var_b(1, 1)), "b11");
        assert_eq!(r.table().index_of("b14"), Some(17));
    }

    #[test]
    fn single_level_ring_is_rejected() {
        let f = Field::new(13, 2).unwrap();
        assert!(Ring::mayr_meyer(1, f).is_err());
        assert!(Ring::mayr_meyer(0, f).is_err());
    }

    #[test]
    fn deep_levels_use_underscore_names() {
        let f = Field::new(13, 2).unwrap();
        let r = Ring::mayr_meyer(11, f).unwrap();
        assert_eq!(r.num_vars(), 2 + 8 * 11);
        assert_eq!(r.table().name(r.var_b(10, 2)), "b10_2");
        assert_eq!(r.table().index_of("b10_2"), Some(r.var_b(10, 2)));
    }

    #[test]
    fn extension_appends_variables() {
        let f = Field::new(13, 2).unwrap();
        let r = Ring::mayr_meyer(2, f).unwrap();
        let e = r.extended(&["@t"]);
        assert_eq!(e.num_vars(), 19);
        assert_eq!(e.table().name(18), "@t");
        assert!(!same_ring(&r, &e));
        assert!(same_ring(&r, &r.clone()));
    }
}
