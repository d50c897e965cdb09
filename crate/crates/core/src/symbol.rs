//! Quadratic characters and formal supercuspidal symbols.
//!
//! A supercuspidal representation of a general linear group enters the
//! classification only through a handful of arithmetic attributes: its
//! dimension, whether it is self-dual and of which type, its central
//! character and its torsion number.  `ScuspSymbol` records exactly those
//! attributes under an opaque label.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An element of an elementary abelian 2-group of characters, written as the
/// set of generator labels it involves.  The empty set is the trivial
/// character, the product is the symmetric difference, and every element is
/// its own inverse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct QuadChar {
    generators: BTreeSet<String>,
}

impl QuadChar {
    pub fn trivial() -> Self {
        QuadChar::default()
    }

    pub fn from_generators<I, S>(gens: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        QuadChar { generators: gens.into_iter().map(Into::into).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> impl Iterator<Item = &str> {
        self.generators.iter().map(String::as_str)
    }

    /// Product in the 2-group: symmetric difference of generator sets.
    pub fn product(&self, other: &QuadChar) -> QuadChar {
        let generators = self
            .generators
            .symmetric_difference(&other.generators)
            .cloned()
            .collect();
        QuadChar { generators }
    }
}

impl fmt::Display for QuadChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            write!(f, "1")
        } else {
            let parts: Vec<&str> = self.generators.iter().map(String::as_str).collect();
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Type of a self-dual representation, read off from which square L-function
/// carries the pole at the origin.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SelfDualType {
    Orthogonal,
    Symplectic,
}

impl SelfDualType {
    pub fn opposite(self) -> SelfDualType {
        match self {
            SelfDualType::Orthogonal => SelfDualType::Symplectic,
            SelfDualType::Symplectic => SelfDualType::Orthogonal,
        }
    }
}

impl fmt::Display for SelfDualType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelfDualType::Orthogonal => write!(f, "orthogonal"),
            SelfDualType::Symplectic => write!(f, "symplectic"),
        }
    }
}

/// A formal unitary supercuspidal symbol for `GL(dim)`.
///
/// `sd_type` is declared data, not computed: a formal symbol cannot know
/// where its square L-functions have poles, so the type carried by the flag
/// is what the L-factor engine reads back.  `torsion` is the largest `r`
/// with `rho = rho |.|^{2 pi i/(r log q)}`; it controls the shape of the
/// self-pairing L-factor and defaults to 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ScuspSymbol {
    label: String,
    dim: u32,
    sd_type: Option<SelfDualType>,
    central_char: QuadChar,
    torsion: u32,
}

impl ScuspSymbol {
    pub fn new(
        label: impl Into<String>,
        dim: u32,
        sd_type: Option<SelfDualType>,
        central_char: QuadChar,
        torsion: u32,
    ) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::InvalidSymbol(label, "empty label".into()));
        }
        if dim == 0 {
            return Err(Error::InvalidSymbol(label, "dimension must be positive".into()));
        }
        if torsion == 0 {
            return Err(Error::InvalidSymbol(label, "torsion must be positive".into()));
        }
        if sd_type == Some(SelfDualType::Symplectic) && dim % 2 != 0 {
            return Err(Error::InvalidSymbol(
                label,
                "symplectic type forces even dimension".into(),
            ));
        }
        if dim == 1 && sd_type == Some(SelfDualType::Symplectic) {
            return Err(Error::InvalidSymbol(
                label,
                "a self-dual character is orthogonal".into(),
            ));
        }
        Ok(ScuspSymbol { label, dim, sd_type, central_char, torsion })
    }

    /// Convenience constructor for a self-dual character (dimension 1); the
    /// central character is the character itself.
    pub fn character(label: impl Into<String>, central_char: QuadChar) -> Self {
        ScuspSymbol::new(label, 1, Some(SelfDualType::Orthogonal), central_char, 1)
            .expect("characters are always valid")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_self_dual(&self) -> bool {
        self.sd_type.is_some()
    }

    pub fn sd_type(&self) -> Option<SelfDualType> {
        self.sd_type
    }

    pub fn central_char(&self) -> &QuadChar {
        &self.central_char
    }

    pub fn torsion(&self) -> u32 {
        self.torsion
    }
}

impl fmt::Display for ScuspSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadchar_product_laws() {
        let a = QuadChar::from_generators(["x"]);
        let b = QuadChar::from_generators(["y"]);
        assert_eq!(a.product(&a), QuadChar::trivial());
        assert_eq!(a.product(&b), b.product(&a));
        let ab = a.product(&b);
        assert_eq!(ab.product(&b), a);
        assert_eq!(QuadChar::trivial().to_string(), "1");
        assert_eq!(ab.to_string(), "x*y");
    }

    #[test]
    fn symbol_invariants() {
        assert!(ScuspSymbol::new("rho", 3, Some(SelfDualType::Symplectic), QuadChar::trivial(), 1)
            .is_err());
        assert!(ScuspSymbol::new("chi", 1, Some(SelfDualType::Symplectic), QuadChar::trivial(), 1)
            .is_err());
        assert!(ScuspSymbol::new("", 1, None, QuadChar::trivial(), 1).is_err());
        assert!(ScuspSymbol::new("tau", 3, None, QuadChar::trivial(), 0).is_err());
        let rho = ScuspSymbol::new(
            "rho2",
            2,
            Some(SelfDualType::Symplectic),
            QuadChar::trivial(),
            1,
        )
        .unwrap();
        assert!(rho.is_self_dual());
        assert_eq!(rho.dim(), 2);
    }
}
