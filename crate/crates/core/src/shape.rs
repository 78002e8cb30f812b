use std::fmt;

use crate::error::{Error, Result};

/// Parameters `(b, s, k)` of a forest of `k + 1` rooted `b`-uniform hypertrees
/// with `s` hyperedges. The vertex count is derived: `n = s(b−1) + k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForestShape {
    b: u32,
    s: u32,
    k: u32,
    n: u32,
}

impl ForestShape {
    pub fn new(b: u32, s: u32, k: u32) -> Result<Self> {
        if b < 2 {
            return Err(Error::range(format!("uniformity b={b} must be at least 2")));
        }
        let n = u64::from(s) * u64::from(b - 1) + u64::from(k) + 1;
        let n = u32::try_from(n)
            .map_err(|_| Error::range(format!("vertex count {n} does not fit in 32 bits")))?;
        Ok(ForestShape { b, s, k, n })
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of roots, `k + 1`.
    pub fn root_count(&self) -> u32 {
        self.k + 1
    }

    /// Length of the linking sequence `N`, `max(s − 1, 0)`.
    pub fn link_count(&self) -> u32 {
        self.s.saturating_sub(1)
    }
}

impl fmt::Display for ForestShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b={}, s={}, k={}, n={})", self.b, self.s, self.k, self.n)
    }
}
