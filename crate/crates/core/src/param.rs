//! Group types, Jordan blocks and parameters.

use std::fmt;

use crate::error::{Error, Result};
use crate::symbol::{QuadChar, ScuspSymbol, SelfDualType};

/// Which family of quasisplit classical groups we are working with.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupKind {
    /// `Sp(2n)`, dual group `SO(2n+1, C)`.
    Sp,
    /// `SO(2n+1)`, dual group `Sp(2n, C)`.
    SOodd,
    /// `SO(2n, eta)`, dual group `SO(2n, C)` (extended by the outer form).
    SOeven,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Sp => write!(f, "Sp"),
            GroupKind::SOodd => write!(f, "SOodd"),
            GroupKind::SOeven => write!(f, "SOeven"),
        }
    }
}

/// A quasisplit symplectic or special orthogonal group of rank `n` over the
/// algebraic closure.  `eta` is the discriminant character of the even
/// orthogonal form; it must be trivial for the other kinds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupType {
    kind: GroupKind,
    n: u32,
    eta: QuadChar,
}

impl GroupType {
    pub fn new(kind: GroupKind, n: u32, eta: QuadChar) -> Result<Self> {
        if kind != GroupKind::SOeven && !eta.is_trivial() {
            return Err(Error::InvalidGroup(format!(
                "eta is only meaningful for SOeven, got eta={eta} on {kind}"
            )));
        }
        Ok(GroupType { kind, n, eta })
    }

    pub fn sp(n: u32) -> Self {
        GroupType { kind: GroupKind::Sp, n, eta: QuadChar::trivial() }
    }

    pub fn so_odd(n: u32) -> Self {
        GroupType { kind: GroupKind::SOodd, n, eta: QuadChar::trivial() }
    }

    pub fn so_even(n: u32, eta: QuadChar) -> Self {
        GroupType { kind: GroupKind::SOeven, n, eta }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn eta(&self) -> &QuadChar {
        &self.eta
    }

    /// Dimension `N` of the standard representation of the dual group.
    pub fn capital_n(&self) -> u64 {
        match self.kind {
            GroupKind::Sp => 2 * self.n as u64 + 1,
            GroupKind::SOodd | GroupKind::SOeven => 2 * self.n as u64,
        }
    }

    /// Type of the dual group's standard form: orthogonal for `Sp` and
    /// `SOeven`, symplectic for `SOodd`.
    pub fn dual_type(&self) -> SelfDualType {
        match self.kind {
            GroupKind::Sp | GroupKind::SOeven => SelfDualType::Orthogonal,
            GroupKind::SOodd => SelfDualType::Symplectic,
        }
    }

    /// The outer automorphism `theta_0` is nontrivial exactly for `SOeven`.
    pub fn has_outer_automorphism(&self) -> bool {
        self.kind == GroupKind::SOeven
    }

    /// The group of the same kind with rank lowered by `d` (the Levi factor
    /// complementary to one `GL(d)` block).
    pub fn lower_rank(&self, d: u32) -> Result<GroupType> {
        if self.n < d {
            return Err(Error::InvalidGroup(format!(
                "cannot lower rank of {self} by {d}"
            )));
        }
        Ok(GroupType { kind: self.kind, n: self.n - d, eta: self.eta.clone() })
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Sp => write!(f, "Sp({})", 2 * self.n),
            GroupKind::SOodd => write!(f, "SO({})", 2 * self.n + 1),
            GroupKind::SOeven => write!(f, "SO({},{})", 2 * self.n, self.eta),
        }
    }
}

/// A Jordan block `(rho, a)`: the irreducible summand `rho (x) [a]` of a
/// parameter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct JordanBlock {
    pub rho: ScuspSymbol,
    pub a: u32,
}

impl JordanBlock {
    pub fn new(rho: ScuspSymbol, a: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameter("Jordan block size must be positive".into()));
        }
        Ok(JordanBlock { rho, a })
    }

    pub fn dim(&self) -> u64 {
        self.a as u64 * self.rho.dim() as u64
    }

    /// Central character of the block: the character of `rho` for odd `a`,
    /// trivial for even `a` (the determinant of `rho (x) [a]`).
    pub fn central_char(&self) -> QuadChar {
        if self.a % 2 == 1 {
            self.rho.central_char().clone()
        } else {
            QuadChar::trivial()
        }
    }
}

impl fmt::Display for JordanBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rho.label(), self.a)
    }
}

/// Type of the pair `(rho, a)`: orthogonal when `rho` is orthogonal and `a`
/// odd or `rho` symplectic and `a` even, symplectic otherwise.
///
/// Errors with `NotSelfDual` when `rho` carries no self-duality type.
pub fn block_type(block: &JordanBlock) -> Result<SelfDualType> {
    let t = block
        .rho
        .sd_type()
        .ok_or_else(|| Error::NotSelfDual(block.rho.label().to_string()))?;
    let flip = block.a % 2 == 0;
    Ok(if flip { t.opposite() } else { t })
}

/// A block of a parameter together with its multiplicity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BlockEntry {
    pub block: JordanBlock,
    pub mult: u32,
}

/// A formal parameter: a group plus a multiset of Jordan blocks whose total
/// dimension is `N`.
///
/// Multiplicities bigger than one are allowed only so that the tempered
/// boundary parameters `2 phi_1 (+) phi_2 (+) ...` produced by a Jacquet step
/// can be written down; the discreteness predicate gates every
/// classification entry point.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Parameter {
    group: GroupType,
    blocks: Vec<BlockEntry>,
}

impl Parameter {
    pub fn new(group: GroupType, blocks: Vec<(JordanBlock, u32)>) -> Result<Self> {
        let mut entries: Vec<BlockEntry> = Vec::with_capacity(blocks.len());
        for (block, mult) in blocks {
            if mult == 0 {
                return Err(Error::InvalidParameter(format!(
                    "block {block} has multiplicity 0"
                )));
            }
            entries.push(BlockEntry { block, mult });
        }
        entries.sort_by(|x, y| x.block.cmp(&y.block));
        for w in entries.windows(2) {
            if w[0].block == w[1].block {
                return Err(Error::InvalidParameter(format!(
                    "block {} listed twice; merge multiplicities",
                    w[0].block
                )));
            }
        }
        let param = Parameter { group, blocks: entries };
        let total: u64 = param.blocks.iter().map(|e| e.mult as u64 * e.block.dim()).sum();
        if total != param.group.capital_n() {
            return Err(Error::InvalidParameter(format!(
                "blocks of total dimension {total} do not fill N={} of {}",
                param.group.capital_n(),
                param.group
            )));
        }
        if param.group.kind() == GroupKind::SOeven {
            let mut det = QuadChar::trivial();
            for e in &param.blocks {
                if e.mult % 2 == 1 {
                    det = det.product(&e.block.central_char());
                }
            }
            if &det != param.group.eta() {
                return Err(Error::InvalidParameter(format!(
                    "determinant {det} of the blocks does not match the form discriminant {} of {}",
                    param.group.eta(),
                    param.group
                )));
            }
        }
        Ok(param)
    }

    /// Test-only escape hatch used by the verifier to build corrupted data.
    pub(crate) fn new_unchecked(group: GroupType, blocks: Vec<(JordanBlock, u32)>) -> Self {
        let mut entries: Vec<BlockEntry> =
            blocks.into_iter().map(|(block, mult)| BlockEntry { block, mult }).collect();
        entries.sort_by(|x, y| x.block.cmp(&y.block));
        Parameter { group, blocks: entries }
    }

    pub fn group(&self) -> &GroupType {
        &self.group
    }

    /// Blocks in canonical order (sorted by symbol label, then `a`).
    pub fn blocks(&self) -> &[BlockEntry] {
        &self.blocks
    }

    pub fn distinct_blocks(&self) -> impl Iterator<Item = &JordanBlock> {
        self.blocks.iter().map(|e| &e.block)
    }

    pub fn num_distinct_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn multiplicity(&self, block: &JordanBlock) -> u32 {
        self.blocks
            .iter()
            .find(|e| &e.block == block)
            .map(|e| e.mult)
            .unwrap_or(0)
    }

    pub fn contains(&self, rho: &ScuspSymbol, a: u32) -> bool {
        self.blocks.iter().any(|e| e.block.a == a && &e.block.rho == rho)
    }

    /// The sizes in `Jord_rho`, ascending, multiplicity forgotten.
    pub fn jord_rho(&self, rho: &ScuspSymbol) -> Vec<u32> {
        self.blocks
            .iter()
            .filter(|e| &e.block.rho == rho)
            .map(|e| e.block.a)
            .collect()
    }

    /// Total dimension, recomputed from the blocks.
    pub fn dimension(&self) -> u64 {
        self.blocks.iter().map(|e| e.mult as u64 * e.block.dim()).sum()
    }

    /// Discreteness: multiplicity free, all blocks self-dual, and every block
    /// of the same type as the dual group.
    pub fn is_discrete(&self) -> bool {
        self.blocks.iter().all(|e| {
            e.mult == 1
                && matches!(block_type(&e.block), Ok(t) if t == self.group.dual_type())
        })
    }

    pub fn ensure_discrete(&self) -> Result<()> {
        if self.is_discrete() {
            Ok(())
        } else {
            Err(Error::NonDiscreteParameter(self.to_string()))
        }
    }

    /// The unique block of multiplicity two in a tempered boundary parameter
    /// `2 phi_1 (+) phi_2 (+) ...`, if the parameter has that shape.
    pub fn doubled_block(&self) -> Option<&JordanBlock> {
        let mut doubled = None;
        for e in &self.blocks {
            match e.mult {
                1 => {}
                2 => {
                    if doubled.is_some() {
                        return None;
                    }
                    doubled = Some(&e.block);
                }
                _ => return None,
            }
        }
        doubled
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.group)?;
        for (i, e) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if e.mult > 1 {
                write!(f, "{}x{}", e.mult, e.block)?;
            } else {
                write!(f, "{}", e.block)?;
            }
        }
        write!(f, "]")
    }
}
