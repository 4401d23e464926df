use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Complement of coordinate hyperplanes in P^m: the coordinates that may
/// appear in denominators. `{i}` is the standard chart U_i, `{i,j}` is U_ij.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chart {
    m: usize,
    allowed: u32,
}

impl Chart {
    pub fn new(m: usize, allowed: &[usize]) -> Result<Chart> {
        let mut mask = 0u32;
        for &i in allowed {
            if i > m {
                return Err(Error::InvalidInput(format!("index {i} out of range for P^{m}")));
            }
            mask |= 1 << i;
        }
        Chart::from_mask(m, mask)
    }

    pub fn from_mask(m: usize, allowed: u32) -> Result<Chart> {
        if m == 0 || m > 30 {
            return Err(Error::InvalidInput(format!("unsupported ambient dimension {m}")));
        }
        if allowed == 0 || allowed >> (m + 1) != 0 {
            return Err(Error::InvalidInput(format!("bad allowed set {allowed:#b} for P^{m}")));
        }
        Ok(Chart { m, allowed })
    }

    /// The chart U_S for a set of indices S; panics on bad input.
    pub fn on(m: usize, allowed: &[usize]) -> Chart {
        Chart::new(m, allowed).expect("valid chart")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nvars(&self) -> usize {
        self.m + 1
    }

    pub fn mask(&self) -> u32 {
        self.allowed
    }

    pub fn allows(&self, q: usize) -> bool {
        q <= self.m && self.allowed & (1 << q) != 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..=self.m).filter(|&q| self.allows(q)).collect()
    }

    /// Smallest allowed index; the pivot of the vector field normal form.
    pub fn pivot(&self) -> usize {
        self.allowed.trailing_zeros() as usize
    }

    pub fn union(&self, other: &Chart) -> Result<Chart> {
        if self.m != other.m {
            return Err(Error::AmbientMismatch { left: self.m, right: other.m });
        }
        Ok(Chart { m: self.m, allowed: self.allowed | other.allowed })
    }

    pub fn contains(&self, other: &Chart) -> bool {
        self.m == other.m && other.allowed & !self.allowed == 0
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "U_{{{}}}", s.join(","))
    }
}
