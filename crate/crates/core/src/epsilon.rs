//! Signs, epsilon-characters and component groups.
//!
//! For a discrete parameter with `r` distinct blocks the component group of
//! the full-orthogonal centralizer is `Z_2^r / <(-1,...,-1)>`; its characters
//! are the sign functions on the blocks with product `+1`.  For even
//! orthogonal groups the subgroup cut out by the determinant has index 1 or
//! 2, and characters are taken modulo the distinguished character `eps_0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::param::{GroupKind, JordanBlock, Parameter};

/// A sign, `+1` or `-1`, with multiplicative structure.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::Document(format!("sign must be 1 or -1, got {v}"))),
        }
    }

    pub fn as_i8(self) -> i8 {
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

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Level at which an epsilon-character is read: as a character of the full
/// component group, or modulo `eps_0`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EpsilonLevel {
    Sigma0,
    Bar,
}

/// A `{+1,-1}`-valued function on the distinct Jordan blocks of a parameter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EpsilonChar {
    values: BTreeMap<JordanBlock, Sign>,
}

impl EpsilonChar {
    pub fn new(values: BTreeMap<JordanBlock, Sign>) -> Self {
        EpsilonChar { values }
    }

    pub fn empty() -> Self {
        EpsilonChar { values: BTreeMap::new() }
    }

    pub fn get(&self, block: &JordanBlock) -> Option<Sign> {
        self.values.get(block).copied()
    }

    pub fn values(&self) -> impl Iterator<Item = (&JordanBlock, Sign)> {
        self.values.iter().map(|(b, s)| (b, *s))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn set(&mut self, block: JordanBlock, sign: Sign) {
        self.values.insert(block, sign);
    }

    pub fn remove(&mut self, block: &JordanBlock) -> Option<Sign> {
        self.values.remove(block)
    }

    pub fn product(&self) -> Sign {
        self.values
            .values()
            .fold(Sign::Plus, |acc, s| acc * *s)
    }

    /// Pointwise product of two characters on the same block set.
    pub fn pointwise(&self, other: &EpsilonChar) -> Result<EpsilonChar> {
        if self.values.len() != other.values.len()
            || !self.values.keys().eq(other.values.keys())
        {
            return Err(Error::BlockSetMismatch);
        }
        let values = self
            .values
            .iter()
            .map(|(b, s)| (b.clone(), *s * other.values[b]))
            .collect();
        Ok(EpsilonChar { values })
    }

    /// Checks that the character is a valid character of the component group
    /// of `phi`: it must be defined exactly on the distinct blocks, with
    /// product `+1` over all blocks when `phi` is discrete, and product `+1`
    /// over the non-doubled blocks for a tempered boundary parameter.
    pub fn validate_for(&self, phi: &Parameter) -> Result<()> {
        let blocks: Vec<&JordanBlock> = phi.distinct_blocks().collect();
        if self.values.len() != blocks.len()
            || !blocks.iter().all(|b| self.values.contains_key(b))
        {
            return Err(Error::InvalidEpsilon(format!(
                "character is not defined exactly on the blocks of {phi}"
            )));
        }
        let product = if let Some(doubled) = phi.doubled_block() {
            self.values
                .iter()
                .filter(|(b, _)| *b != doubled)
                .fold(Sign::Plus, |acc, (_, s)| acc * *s)
        } else {
            self.product()
        };
        if product != Sign::Plus {
            return Err(Error::InvalidEpsilon(format!(
                "sign product over {phi} is -1"
            )));
        }
        Ok(())
    }

    /// Canonical representative of the coset `{eps, eps*eps_0}`: the one
    /// assigning `+1` to the first odd-dimensional block in canonical order.
    /// When `eps_0` is trivial the coset is a singleton and `self` is
    /// returned unchanged.
    pub fn bar_representative(&self, phi: &Parameter) -> EpsilonChar {
        let eps0 = eps0(phi);
        let anchor = phi.distinct_blocks().find(|b| b.dim() % 2 == 1);
        match anchor {
            Some(b) if !eps0_is_trivial(phi) => {
                if self.get(b) == Some(Sign::Minus) {
                    self.pointwise(&eps0).expect("same block set")
                } else {
                    self.clone()
                }
            }
            _ => self.clone(),
        }
    }
}

impl fmt::Display for EpsilonChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (b, s)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}:{s}")?;
        }
        write!(f, ")")
    }
}

/// The distinguished character `eps_0`: `-1` exactly on the odd-dimensional
/// blocks for an even orthogonal group, trivial for the other kinds.
pub fn eps0(phi: &Parameter) -> EpsilonChar {
    let even_orth = phi.group().kind() == GroupKind::SOeven;
    let values = phi
        .distinct_blocks()
        .map(|b| {
            let s = if even_orth && b.dim() % 2 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            };
            (b.clone(), s)
        })
        .collect();
    EpsilonChar { values }
}

fn eps0_is_trivial(phi: &Parameter) -> bool {
    phi.group().kind() != GroupKind::SOeven
        || phi.distinct_blocks().all(|b| b.dim() % 2 == 0)
}

/// Size and index data of the component groups of a discrete parameter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ComponentGroupInfo {
    /// Number of distinct blocks `r`; the full component group is
    /// `Z_2^r / <-1>`.
    pub rank_sigma0: usize,
    /// Index of the determinant-one subgroup: 2 exactly when the group is
    /// even orthogonal and some block has odd dimension.
    pub sigma_index: u8,
    /// Whether `eps_0` is the trivial character.
    pub eps0_trivial: bool,
}

/// Component group data of a discrete parameter.
pub fn component_group(phi: &Parameter) -> Result<ComponentGroupInfo> {
    phi.ensure_discrete()?;
    let r = phi.num_distinct_blocks();
    let some_odd = phi.distinct_blocks().any(|b| b.dim() % 2 == 1);
    let even_orth = phi.group().kind() == GroupKind::SOeven;
    Ok(ComponentGroupInfo {
        rank_sigma0: r,
        sigma_index: if even_orth && some_odd { 2 } else { 1 },
        eps0_trivial: !(even_orth && some_odd),
    })
}

/// All epsilon-characters of a discrete parameter at the requested level, in
/// a deterministic order.
///
/// At the `Sigma0` level these are the `2^(r-1)` sign functions with product
/// `+1`; at the `Bar` level one canonical representative per
/// `<eps_0>`-coset.
pub fn epsilon_characters(phi: &Parameter, level: EpsilonLevel) -> Result<Vec<EpsilonChar>> {
    phi.ensure_discrete()?;
    let blocks: Vec<JordanBlock> = phi.distinct_blocks().cloned().collect();
    let r = blocks.len();
    let mut out = Vec::new();
    if r == 0 {
        out.push(EpsilonChar::empty());
        return Ok(out);
    }
    for mask in 0u64..(1 << (r - 1)) {
        let mut values = BTreeMap::new();
        let mut product = Sign::Plus;
        for (i, b) in blocks.iter().take(r - 1).enumerate() {
            let s = if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus };
            product = product * s;
            values.insert(b.clone(), s);
        }
        values.insert(blocks[r - 1].clone(), product);
        out.push(EpsilonChar { values });
    }
    out.sort();
    if level == EpsilonLevel::Bar && !eps0_is_trivial(phi) {
        let mut reps: Vec<EpsilonChar> =
            out.iter().map(|e| e.bar_representative(phi)).collect();
        reps.sort();
        reps.dedup();
        out = reps;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::GroupType;
    use crate::symbol::{QuadChar, ScuspSymbol, SelfDualType};

    fn chi() -> ScuspSymbol {
        ScuspSymbol::character("chi", QuadChar::trivial())
    }

    fn chip() -> ScuspSymbol {
        ScuspSymbol::character("chip", QuadChar::from_generators(["e"]))
    }

    fn rho2() -> ScuspSymbol {
        ScuspSymbol::new("rho2", 2, Some(SelfDualType::Symplectic), QuadChar::trivial(), 1)
            .unwrap()
    }

    fn block(rho: ScuspSymbol, a: u32) -> JordanBlock {
        JordanBlock::new(rho, a).unwrap()
    }

    #[test]
    fn component_group_single_block() {
        // Sp(2), phi = {(chi,3)}: r=1, index 1, eps_0 trivial.
        let phi = Parameter::new(GroupType::sp(1), vec![(block(chi(), 3), 1)]).unwrap();
        let info = component_group(&phi).unwrap();
        assert_eq!(info.rank_sigma0, 1);
        assert_eq!(info.sigma_index, 1);
        assert!(info.eps0_trivial);
    }

    #[test]
    fn component_group_so_even_odd_dims() {
        // SO(6,eta), phi = {(chi,1),(chip,5)}: r=2, index 2, eps_0 = (-1,-1).
        let eta = QuadChar::from_generators(["e"]);
        let phi = Parameter::new(
            GroupType::so_even(3, eta),
            vec![(block(chi(), 1), 1), (block(chip(), 5), 1)],
        )
        .unwrap();
        let info = component_group(&phi).unwrap();
        assert_eq!(info.rank_sigma0, 2);
        assert_eq!(info.sigma_index, 2);
        assert!(!info.eps0_trivial);
        let e0 = eps0(&phi);
        assert!(e0.values().all(|(_, s)| s == Sign::Minus));
        assert_eq!(e0.product(), Sign::Plus);
    }

    #[test]
    fn component_group_so_even_even_dims() {
        // SO(4,triv), phi = {(rho2,2)}: r=1, index 1, eps_0 trivial.
        let phi = Parameter::new(
            GroupType::so_even(2, QuadChar::trivial()),
            vec![(block(rho2(), 2), 1)],
        )
        .unwrap();
        let info = component_group(&phi).unwrap();
        assert_eq!(info.rank_sigma0, 1);
        assert_eq!(info.sigma_index, 1);
        assert!(info.eps0_trivial);
    }

    #[test]
    fn component_group_rejects_multiplicity() {
        let phi = Parameter::new(
            GroupType::sp(2),
            vec![(block(chi(), 1), 2), (block(chi(), 3), 1)],
        )
        .unwrap();
        assert!(matches!(component_group(&phi), Err(Error::NonDiscreteParameter(_))));
    }

    #[test]
    fn character_counts() {
        // r = 1: the single character is identically +1.
        let phi = Parameter::new(GroupType::sp(1), vec![(block(chi(), 3), 1)]).unwrap();
        let cs = epsilon_characters(&phi, EpsilonLevel::Sigma0).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].product(), Sign::Plus);

        // r = 3: 2^{3-1} = 4 characters at the Sigma0 level.
        let phi = Parameter::new(
            GroupType::sp(3),
            vec![
                (block(chi(), 5), 1),
                (block(chi(), 1), 1),
                (block(chip(), 1), 1),
            ],
        )
        .unwrap();
        let cs = epsilon_characters(&phi, EpsilonLevel::Sigma0).unwrap();
        assert_eq!(cs.len(), 4);
        assert!(cs.iter().all(|e| e.product() == Sign::Plus));
    }

    #[test]
    fn bar_level_cosets() {
        // SO(6,eta) with eps_0 = (-1,-1): the two Sigma0 characters (+,+) and
        // (-,-) collapse to a single bar coset.
        let eta = QuadChar::from_generators(["e"]);
        let phi = Parameter::new(
            GroupType::so_even(3, eta),
            vec![(block(chi(), 1), 1), (block(chip(), 5), 1)],
        )
        .unwrap();
        let sigma0 = epsilon_characters(&phi, EpsilonLevel::Sigma0).unwrap();
        assert_eq!(sigma0.len(), 2);
        let bar = epsilon_characters(&phi, EpsilonLevel::Bar).unwrap();
        assert_eq!(bar.len(), 1);
        // canonical representative assigns +1 to the first odd block
        let first_odd = phi.distinct_blocks().find(|b| b.dim() % 2 == 1).unwrap().clone();
        assert_eq!(bar[0].get(&first_odd), Some(Sign::Plus));
    }

    #[test]
    fn validate_doubled_product() {
        // 2(chi,1) (+) (chi,3): product over non-doubled blocks must be +1.
        let phi = Parameter::new(
            GroupType::sp(2),
            vec![(block(chi(), 1), 2), (block(chi(), 3), 1)],
        )
        .unwrap();
        let mut eps = EpsilonChar::empty();
        eps.set(block(chi(), 1), Sign::Minus);
        eps.set(block(chi(), 3), Sign::Plus);
        assert!(eps.validate_for(&phi).is_ok());
        let mut eps = EpsilonChar::empty();
        eps.set(block(chi(), 1), Sign::Plus);
        eps.set(block(chi(), 3), Sign::Minus);
        assert!(eps.validate_for(&phi).is_err());
    }
}
