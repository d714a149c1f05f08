use std::fmt;

use crate::braid::BraidModel;
use crate::dihedral::DihedralModel;
use crate::error::Result;

/// One of the two supported group families with its parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupContext {
    /// `A_n`: the braid group on `n + 1` strands.
    Braid(BraidModel),
    /// `I₂(m)`.
    Dihedral(DihedralModel),
}

impl GroupContext {
    /// `A_n` with `n ≥ 2`.
    pub fn braid(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(crate::Error::InvalidParameter(format!(
                "A_n needs n ≥ 2, got {n}"
            )));
        }
        Ok(GroupContext::Braid(BraidModel::new(n)?))
    }

    pub fn dihedral(m: usize) -> Result<Self> {
        Ok(GroupContext::Dihedral(DihedralModel::new(m)?))
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupContext::Braid(b) => write!(f, "A{}", b.generators()),
            GroupContext::Dihedral(d) => write!(f, "I2({})", d.m()),
        }
    }
}
