use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Which of the two type-AIII Satake diagrams the algebra is attached to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantKind {
    /// Diagram I: `n = 2r`, no fixed node.
    Jmath,
    /// Diagram II: `n = 2r + 1`, node `r + 1` fixed by the involution.
    Imath,
}

impl VariantKind {
    pub fn name(self) -> &'static str {
        match self {
            VariantKind::Jmath => "jmath",
            VariantKind::Imath => "imath",
        }
    }
}

impl std::str::FromStr for VariantKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "jmath" | "j" | "I" => Ok(VariantKind::Jmath),
            "imath" | "i" | "II" => Ok(VariantKind::Imath),
            other => Err(format!(
                "unknown variant '{other}' (expected jmath or imath)"
            )),
        }
    }
}

/// A Satake variant together with its rank `r >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Variant {
    kind: VariantKind,
    rank: u32,
}

impl Variant {
    pub fn new(kind: VariantKind, rank: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank);
        }
        Ok(Variant { kind, rank })
    }

    pub fn jmath(rank: u32) -> Result<Self> {
        Self::new(VariantKind::Jmath, rank)
    }

    pub fn imath(rank: u32) -> Result<Self> {
        Self::new(VariantKind::Imath, rank)
    }

    pub fn kind(&self) -> VariantKind {
        self.kind
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn is_jmath(&self) -> bool {
        self.kind == VariantKind::Jmath
    }

    /// Number of Dynkin nodes `n`.
    pub fn n(&self) -> u32 {
        match self.kind {
            VariantKind::Jmath => 2 * self.rank,
            VariantKind::Imath => 2 * self.rank + 1,
        }
    }

    /// Number of Weyl indices, `r + 1`.
    pub fn weyl_len(&self) -> u32 {
        self.rank + 1
    }

    /// The diagram involution `i -> n + 1 - i`.
    pub fn rho(&self, i: u32) -> u32 {
        self.n() + 1 - i
    }

    /// Size of the braid index set `{1, .., floor((n+1)/2)}`.
    pub fn braid_len(&self) -> u32 {
        self.n().div_ceil(2)
    }

    pub fn braid_indices(&self) -> impl Iterator<Item = u32> {
        1..=self.braid_len()
    }

    pub fn check_weyl_index(&self, i: u32) -> Result<()> {
        check_range(i, self.weyl_len())
    }

    pub fn check_node(&self, i: u32) -> Result<()> {
        check_range(i, self.n())
    }

    pub fn check_braid_index(&self, i: u32) -> Result<()> {
        check_range(i, self.braid_len())
    }

    /// Weight of index `i`: 2 at the distinguished index `r + 1` of diagram I,
    /// 1 everywhere else.
    pub fn kappa(&self, i: u32) -> Result<u32> {
        self.check_weyl_index(i)?;
        Ok(self.kappa_of(i))
    }

    pub(crate) fn kappa_of(&self, i: u32) -> u32 {
        if self.kind == VariantKind::Jmath && i == self.rank + 1 {
            2
        } else {
            1
        }
    }

    /// Nodes `i` carrying a `K_i` generator (those not fixed by the involution).
    pub fn has_k(&self, i: u32) -> bool {
        (1..=self.n()).contains(&i) && self.rho(i) != i
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r={}", self.kind.name(), self.rank)
    }
}

fn check_range(i: u32, max: u32) -> Result<()> {
    if (1..=max).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, max })
    }
}

/// Type `A` Cartan pairing `i . j` on nodes `1..=n`.
pub fn cartan(v: &Variant, i: u32, j: u32) -> Result<i32> {
    v.check_node(i)?;
    v.check_node(j)?;
    Ok(cartan_of(i, j))
}

pub(crate) fn cartan_of(i: u32, j: u32) -> i32 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// A sign `e` in `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(format!("invalid sign '{other}' (expected +1 or -1)")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_examples() {
        assert_eq!(Variant::jmath(2).unwrap().kappa(3).unwrap(), 2);
        assert_eq!(Variant::jmath(2).unwrap().kappa(2).unwrap(), 1);
        assert_eq!(Variant::imath(2).unwrap().kappa(3).unwrap(), 1);
        assert!(Variant::imath(2).unwrap().kappa(4).is_err());
        assert!(Variant::imath(2).unwrap().kappa(0).is_err());
    }

    #[test]
    fn rank_zero_rejected() {
        assert_eq!(Variant::jmath(0), Err(Error::InvalidRank));
    }

    #[test]
    fn derived_data() {
        let j = Variant::jmath(3).unwrap();
        assert_eq!((j.n(), j.braid_len(), j.rho(3)), (6, 3, 4));
        let i = Variant::imath(3).unwrap();
        assert_eq!((i.n(), i.braid_len(), i.rho(4)), (7, 4, 4));
        assert!(!i.has_k(4));
        assert!(j.has_k(4));
    }

    #[test]
    fn cartan_examples() {
        let v = Variant::jmath(2).unwrap();
        assert_eq!(cartan(&v, 3, 3).unwrap(), 2);
        assert_eq!(cartan(&v, 3, 4).unwrap(), -1);
        assert_eq!(cartan(&v, 1, 4).unwrap(), 0);
        assert!(cartan(&v, 1, 5).is_err());
    }
}
