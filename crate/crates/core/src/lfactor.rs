//! Formal local L-factors: Rankin-Selberg, symmetric and skew-symmetric
//! squares, pole queries, and the reducibility-point computation.
//!
//! An `LFactor` is a finite product of factors `(1 - q^{-r(s+t)})^{-mult}`;
//! only the real pole locations matter to the classification, so families of
//! poles on the imaginary axis are collapsed into the torsion integer `r`
//! carried by each symbol.  Epsilon-factors and nonvanishing holomorphic
//! units are not represented.

use std::collections::BTreeMap;
use std::fmt;

use crate::epsilon::component_group;
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::param::Parameter;
use crate::symbol::{ScuspSymbol, SelfDualType};

/// A finite product of factors `(1 - q^{-r(s+t)})^{-mult}`, the empty
/// product denoting the constant function 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LFactor {
    factors: BTreeMap<(u32, HalfInt), u32>,
}

impl LFactor {
    pub fn one() -> Self {
        LFactor::default()
    }

    pub fn single(r: u32, t: HalfInt) -> Self {
        let mut factors = BTreeMap::new();
        factors.insert((r, t), 1);
        LFactor { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplication: multiset union with addition of multiplicities.
    pub fn mul(&self, other: &LFactor) -> LFactor {
        let mut factors = self.factors.clone();
        for (&k, &m) in &other.factors {
            *factors.entry(k).or_insert(0) += m;
        }
        LFactor { factors }
    }

    pub fn mul_assign(&mut self, other: &LFactor) {
        for (&k, &m) in &other.factors {
            *self.factors.entry(k).or_insert(0) += m;
        }
    }

    /// Factors `(r, t, mult)` sorted by `(r, t)`.
    pub fn factors(&self) -> impl Iterator<Item = (u32, HalfInt, u32)> + '_ {
        self.factors.iter().map(|(&(r, t), &m)| (r, t, m))
    }

    /// Order of the pole at the real point `s0`: the sum of multiplicities
    /// over factors with `t = -s0`.
    pub fn pole_order_at(&self, s0: HalfInt) -> u32 {
        self.factors
            .iter()
            .filter(|(&(_, t), _)| t == -s0)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn has_pole_at(&self, s0: HalfInt) -> bool {
        self.pole_order_at(s0) > 0
    }

    /// All real pole locations, ascending, without multiplicity.
    pub fn poles(&self) -> Vec<HalfInt> {
        let mut out: Vec<HalfInt> = self.factors.keys().map(|&(_, t)| -t).collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for LFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (&(r, t), &m) in &self.factors {
            let inner = if t == HalfInt::ZERO {
                if r == 1 { "s".to_string() } else { format!("{r}s") }
            } else {
                let sign = if t > HalfInt::ZERO { "+" } else { "-" };
                let body = format!("(s{sign}{})", t.abs());
                if r == 1 { body } else { format!("{r}{body}") }
            };
            write!(f, "(1-q^{{-{inner}}})^{{-{m}}}")?;
        }
        Ok(())
    }
}

/// A formal representation of a general linear group, as far as its
/// L-factors are concerned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GlRep {
    /// `rho |.|^shift` for a unitary supercuspidal symbol.
    Cuspidal { rho: ScuspSymbol, shift: HalfInt },
    /// `St(rho, a) |.|^shift`.
    Steinberg { rho: ScuspSymbol, a: u32, shift: HalfInt },
    /// A product of discrete-series constituents, each at shift 0.
    Tempered(Vec<GlRep>),
    /// Langlands quotient data: tempered pieces with strictly decreasing
    /// real shifts.
    Langlands(Vec<(GlRep, HalfInt)>),
}

impl GlRep {
    pub fn cuspidal(rho: ScuspSymbol) -> GlRep {
        GlRep::Cuspidal { rho, shift: HalfInt::ZERO }
    }

    pub fn steinberg(rho: ScuspSymbol, a: u32) -> GlRep {
        GlRep::Steinberg { rho, a, shift: HalfInt::ZERO }
    }

    /// Flattens into discrete factors `(rho, a, shift)`; every Appendix-A
    /// formula below is multiplicative over this list.
    fn discrete_factors(&self, extra: HalfInt, out: &mut Vec<(ScuspSymbol, u32, HalfInt)>) {
        match self {
            GlRep::Cuspidal { rho, shift } => out.push((rho.clone(), 1, *shift + extra)),
            GlRep::Steinberg { rho, a, shift } => out.push((rho.clone(), *a, *shift + extra)),
            GlRep::Tempered(parts) => {
                for p in parts {
                    p.discrete_factors(extra, out);
                }
            }
            GlRep::Langlands(parts) => {
                for (p, u) in parts {
                    p.discrete_factors(extra + *u, out);
                }
            }
        }
    }

    fn factors(&self) -> Vec<(ScuspSymbol, u32, HalfInt)> {
        let mut out = Vec::new();
        self.discrete_factors(HalfInt::ZERO, &mut out);
        out
    }
}

/// Rankin-Selberg factor of two discrete pieces:
/// `prod_{i=1}^{min(a,b)} L(s + t + (a+b)/2 - i, rho x rho')`, nontrivial
/// only when the symbols agree and are self-dual.
fn rs_discrete(
    (rho1, a1, t1): &(ScuspSymbol, u32, HalfInt),
    (rho2, a2, t2): &(ScuspSymbol, u32, HalfInt),
) -> LFactor {
    if rho1.label() != rho2.label() || !rho1.is_self_dual() {
        return LFactor::one();
    }
    let r = rho1.torsion();
    let mut out = LFactor::one();
    let steps = (*a1).min(*a2);
    let halfsum = HalfInt::half_of(*a1 as i64 + *a2 as i64);
    for i in 1..=steps {
        let t = *t1 + *t2 + halfsum - HalfInt::from_int(i as i64);
        out.mul_assign(&LFactor::single(r, t));
    }
    out
}

/// Rankin-Selberg L-factor `L(s, pi x sigma)`.
pub fn rs(pi: &GlRep, sigma: &GlRep) -> LFactor {
    let mut out = LFactor::one();
    for f in &pi.factors() {
        for g in &sigma.factors() {
            out.mul_assign(&rs_discrete(f, g));
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SquareKind {
    Sym,
    Wedge,
}

impl SquareKind {
    fn other(self) -> SquareKind {
        match self {
            SquareKind::Sym => SquareKind::Wedge,
            SquareKind::Wedge => SquareKind::Sym,
        }
    }
}

/// Cuspidal base case, reading the declared self-duality type: the wedge
/// square carries the factor for symplectic symbols, the symmetric square
/// for orthogonal ones.
fn square_cuspidal(rho: &ScuspSymbol, shift: HalfInt, kind: SquareKind) -> LFactor {
    let hit = match (rho.sd_type(), kind) {
        (Some(SelfDualType::Symplectic), SquareKind::Wedge) => true,
        (Some(SelfDualType::Orthogonal), SquareKind::Sym) => true,
        _ => false,
    };
    if hit {
        LFactor::single(rho.torsion(), shift * 2)
    } else {
        LFactor::one()
    }
}

/// Discrete case of the square L-factors, by the mutual recursion over the
/// cuspidal exponents `rho |.|^{(a+1)/2 - i}`.
fn square_steinberg(rho: &ScuspSymbol, a: u32, shift: HalfInt, kind: SquareKind) -> LFactor {
    let mut out = LFactor::one();
    let exp_i = |i: u32| HalfInt::half_of(a as i64 + 1) - HalfInt::from_int(i as i64) + shift;
    let (same_count, other_count) = if a % 2 == 0 {
        (a / 2, a / 2)
    } else {
        ((a + 1) / 2, (a - 1) / 2)
    };
    for i in 1..=same_count {
        out.mul_assign(&square_cuspidal(rho, exp_i(i), kind));
    }
    for i in 1..=other_count {
        out.mul_assign(&square_cuspidal(rho, exp_i(i) - HalfInt::HALF, kind.other()));
    }
    out
}

fn square(pi: &GlRep, kind: SquareKind) -> LFactor {
    let factors = pi.factors();
    let mut out = LFactor::one();
    for (i, (rho, a, t)) in factors.iter().enumerate() {
        out.mul_assign(&square_steinberg(rho, *a, *t, kind));
        for g in factors.iter().skip(i + 1) {
            out.mul_assign(&rs_discrete(&(rho.clone(), *a, *t), g));
        }
    }
    out
}

/// Symmetric square L-factor `L(s, pi, S^2)`.
pub fn sym2(pi: &GlRep) -> LFactor {
    square(pi, SquareKind::Sym)
}

/// Skew-symmetric square L-factor `L(s, pi, W^2)`.
pub fn wedge2(pi: &GlRep) -> LFactor {
    square(pi, SquareKind::Wedge)
}

/// Checks `L(s, pi x pi) = L(s, pi, S^2) L(s, pi, W^2)` as multisets of
/// factors.
pub fn factorization_identity_check(pi: &GlRep) -> bool {
    rs(pi, pi) == sym2(pi).mul(&wedge2(pi))
}

/// The tempered representation attached to a parameter, as a formal product
/// of Steinberg pieces (with multiplicity).
pub fn parameter_glrep(phi: &Parameter) -> GlRep {
    let mut parts = Vec::new();
    for e in phi.blocks() {
        for _ in 0..e.mult {
            parts.push(GlRep::steinberg(e.block.rho.clone(), e.block.a));
        }
    }
    GlRep::Tempered(parts)
}

/// `L(s, rho x pi_phi)`: it has a pole at `-(a-1)/2` exactly when `rho` is
/// self-dual and `(rho, a)` is a block of `phi`.
pub fn rho_cross_parameter(rho: &ScuspSymbol, phi: &Parameter) -> LFactor {
    rs(&GlRep::cuspidal(rho.clone()), &parameter_glrep(phi))
}

/// Result of the reducibility-point computation: `rho|.|^(+-exponent) x pi`
/// reduces exactly at the stated exponent, where `exponent = (a_rho+1)/2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducibilityPoint {
    /// `max Jord_rho(phi)`, or 0 when the set is empty and `rho` is
    /// self-dual of type opposite to the dual group, or -1 otherwise.
    pub a_rho: i64,
    /// `(a_rho + 1)/2`.
    pub exponent: HalfInt,
    /// Set when the `-1` case is only guaranteed under the side condition
    /// "`d_rho` even or the representation is outer-invariant", and that
    /// condition is not known to hold (plain even orthogonal group,
    /// `d_rho` odd, determinant-one component group).
    pub proviso: bool,
}

/// The reducibility point of `rho |.|^s x pi` for a supercuspidal member of
/// the packet of `phi`.  With `full_orthogonal` set, the answer is
/// unconditional; otherwise the `-1` case carries a proviso flag.
pub fn reducibility_point(
    phi: &Parameter,
    rho: &ScuspSymbol,
    full_orthogonal: bool,
) -> Result<ReducibilityPoint> {
    phi.ensure_discrete()?;
    let jord = phi.jord_rho(rho);
    if let Some(&a) = jord.last() {
        return Ok(ReducibilityPoint {
            a_rho: a as i64,
            exponent: HalfInt::half_of(a as i64 + 1),
            proviso: false,
        });
    }
    let opposite = rho
        .sd_type()
        .map(|t| t == phi.group().dual_type().opposite())
        .unwrap_or(false);
    if opposite {
        return Ok(ReducibilityPoint {
            a_rho: 0,
            exponent: HalfInt::HALF,
            proviso: false,
        });
    }
    let proviso = if full_orthogonal {
        false
    } else {
        let info = component_group(phi)?;
        phi.group().has_outer_automorphism() && rho.dim() % 2 == 1 && info.sigma_index == 1
    };
    Ok(ReducibilityPoint { a_rho: -1, exponent: HalfInt::ZERO, proviso })
}
