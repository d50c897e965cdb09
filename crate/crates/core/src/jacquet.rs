//! The symbolic Jacquet-functor rewrite system.
//!
//! `Jac_x` removes a leading exponent from a segment, `Jac^op_x` a trailing
//! one against the dual symbol, and both expand over products by the Leibniz
//! rule.  On a classical-group symbol `tau x| pi` the expansion has three
//! terms, and on a packet symbol the functor acts blockwise: it replaces
//! `(rho, 2x+1)` by `(rho, 2x-1)` and transports the epsilon-character,
//! vanishing unless the block is present and the sign conditions hold.

use std::collections::BTreeMap;
use std::fmt;

use crate::epsilon::{EpsilonChar, EpsilonLevel, Sign};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::param::{JordanBlock, Parameter};
use crate::segment::Segment;
use crate::symbol::ScuspSymbol;

/// A symbolic representation object: zero, a packet member `pi(phi, eps)`,
/// or a parabolically induced symbol `tau_1 x ... x tau_k x| inner`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RepSymbol {
    Zero,
    Packet {
        phi: Parameter,
        eps: EpsilonChar,
        level: EpsilonLevel,
    },
    Induced {
        gl: Vec<Segment>,
        inner: Box<RepSymbol>,
    },
}

impl RepSymbol {
    /// Builds a packet symbol after validating the character.  The parameter
    /// must be discrete or a tempered boundary parameter with exactly one
    /// doubled block.
    pub fn packet(phi: Parameter, eps: EpsilonChar, level: EpsilonLevel) -> Result<RepSymbol> {
        if !phi.is_discrete() && phi.doubled_block().is_none() {
            return Err(Error::InvalidRepSymbol(format!(
                "{phi} is neither discrete nor a tempered boundary parameter"
            )));
        }
        eps.validate_for(&phi)?;
        let eps = match level {
            EpsilonLevel::Bar => eps.bar_representative(&phi),
            EpsilonLevel::Sigma0 => eps,
        };
        Ok(RepSymbol::Packet { phi, eps, level })
    }

    /// Builds an induced symbol, flattening nested inductions and collapsing
    /// the degenerate cases (`zero` inner, empty GL part).
    pub fn induced(gl: Vec<Segment>, inner: RepSymbol) -> RepSymbol {
        match inner {
            RepSymbol::Zero => RepSymbol::Zero,
            RepSymbol::Induced { gl: inner_gl, inner } => {
                let mut all = gl;
                all.extend(inner_gl);
                if all.is_empty() {
                    *inner
                } else {
                    RepSymbol::Induced { gl: all, inner }
                }
            }
            other => {
                if gl.is_empty() {
                    other
                } else {
                    RepSymbol::Induced { gl, inner: Box::new(other) }
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, RepSymbol::Zero)
    }
}

impl fmt::Display for RepSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepSymbol::Zero => write!(f, "0"),
            RepSymbol::Packet { phi, eps, level } => {
                let tag = match level {
                    EpsilonLevel::Sigma0 => "pkt",
                    EpsilonLevel::Bar => "barpkt",
                };
                write!(f, "{tag}[{}; ", phi.group())?;
                for (i, e) in phi.blocks().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    if e.mult > 1 {
                        write!(f, "{}x", e.mult)?;
                    }
                    let s = eps.get(&e.block).map(|s| s.to_string()).unwrap_or_default();
                    write!(f, "{}{}", e.block, s)?;
                }
                write!(f, "]")
            }
            RepSymbol::Induced { gl, inner } => {
                for (i, seg) in gl.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{seg}")?;
                }
                write!(f, " |x {inner}")
            }
        }
    }
}

/// A formal integer combination of symbols; zero coefficients are pruned.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VirtualSum {
    terms: BTreeMap<RepSymbol, i64>,
}

impl VirtualSum {
    pub fn zero() -> Self {
        VirtualSum::default()
    }

    pub fn of(sym: RepSymbol) -> Self {
        let mut s = VirtualSum::zero();
        s.add_term(sym, 1);
        s
    }

    pub fn add_term(&mut self, sym: RepSymbol, coeff: i64) {
        if coeff == 0 || sym.is_zero() {
            return;
        }
        match self.terms.entry(sym) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &VirtualSum) {
        for (sym, &c) in &other.terms {
            self.add_term(sym.clone(), c);
        }
    }

    pub fn scaled(&self, k: i64) -> VirtualSum {
        let mut out = VirtualSum::zero();
        for (sym, &c) in &self.terms {
            out.add_term(sym.clone(), c * k);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RepSymbol, i64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for VirtualSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (sym, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

/// A formal integer combination of GL symbols (ordered products of
/// segments); the empty product is the unit.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GlSum {
    terms: BTreeMap<Vec<Segment>, i64>,
}

impl GlSum {
    pub fn zero() -> Self {
        GlSum::default()
    }

    pub fn of(product: Vec<Segment>) -> Self {
        let mut s = GlSum::zero();
        s.add_term(product, 1);
        s
    }

    pub fn add_term(&mut self, product: Vec<Segment>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(product) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Segment>, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }
}

impl fmt::Display for GlSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            if p.is_empty() {
                write!(f, "1")?;
            }
            for (j, seg) in p.iter().enumerate() {
                if j > 0 {
                    write!(f, "*")?;
                }
                write!(f, "{seg}")?;
            }
        }
        Ok(())
    }
}

fn product_without(product: &[Segment], i: usize, replacement: Option<Segment>) -> Vec<Segment> {
    let mut out = Vec::with_capacity(product.len());
    for (j, seg) in product.iter().enumerate() {
        if j == i {
            if let Some(r) = &replacement {
                out.push(r.clone());
            }
        } else {
            out.push(seg.clone());
        }
    }
    out
}

/// `Jac_x` on a product of segments: each factor whose leading exponent is
/// `x` and whose symbol matches `rho` loses that exponent; the terms are
/// summed by the Leibniz rule.
pub fn jac_gl(x: HalfInt, rho: &ScuspSymbol, product: &[Segment]) -> GlSum {
    let mut out = GlSum::zero();
    for (i, seg) in product.iter().enumerate() {
        if seg.from() == x && seg.rho().label() == rho.label() {
            out.add_term(product_without(product, i, seg.drop_leading()), 1);
        }
    }
    out
}

/// `Jac^op_x` on a product of segments: trailing-exponent removal against
/// the dual of `rho` (which exists as a symbol only when `rho` is
/// self-dual).
pub fn jac_op_gl(x: HalfInt, rho: &ScuspSymbol, product: &[Segment]) -> GlSum {
    let mut out = GlSum::zero();
    if !rho.is_self_dual() {
        return out;
    }
    for (i, seg) in product.iter().enumerate() {
        if seg.to() == x && seg.rho().label() == rho.label() {
            out.add_term(product_without(product, i, seg.drop_trailing()), 1);
        }
    }
    out
}

/// `Jac^theta_x = Jac_x . Jac^op_{-x}` on a self-dual GL symbol.
pub fn jac_theta(x: HalfInt, rho: &ScuspSymbol, product: &[Segment]) -> GlSum {
    let mut out = GlSum::zero();
    for (p, c) in jac_op_gl(-x, rho, product).terms() {
        for (q, d) in jac_gl(x, rho, p).terms() {
            out.add_term(q.clone(), c * d);
        }
    }
    out
}

/// The blockwise Jacquet step on a packet symbol.
///
/// Returns zero when `(rho, 2x+1)` is not a block of the parameter, or when
/// the sign conditions of the three cases fail; otherwise the packet of the
/// rewritten parameter with the transported character.  The doubled-block
/// output (case of `(rho, 2x-1)` already present) is a tempered boundary
/// packet, on which no further blockwise steps are defined.
pub fn jac_packet(x: HalfInt, rho: &ScuspSymbol, sym: &RepSymbol) -> Result<RepSymbol> {
    let (phi, eps, level) = match sym {
        RepSymbol::Packet { phi, eps, level } => (phi, eps, *level),
        _ => {
            return Err(Error::InvalidRepSymbol(
                "jac_packet expects a packet symbol".into(),
            ))
        }
    };
    if !x.is_positive() {
        return Err(Error::NonPositiveX);
    }
    phi.ensure_discrete()?;
    jac_packet_inner(x, rho, phi, eps, level)
}

fn jac_packet_inner(
    x: HalfInt,
    rho: &ScuspSymbol,
    phi: &Parameter,
    eps: &EpsilonChar,
    level: EpsilonLevel,
) -> Result<RepSymbol> {
    // 2x+1 is always an integer for half-integer x
    let a = x.doubled() + 1;
    if a <= 0 {
        return Ok(RepSymbol::Zero);
    }
    let a = a as u32;
    if !phi.contains(rho, a) {
        return Ok(RepSymbol::Zero); // vanishing rule
    }
    let removed = JordanBlock::new(rho.clone(), a)?;
    let lower = a - 2; // zero when x = 1/2, in which case the block is dropped
    let group = phi.group().lower_rank(rho.dim())?;

    let mut blocks: Vec<(JordanBlock, u32)> = Vec::new();
    for e in phi.blocks() {
        if e.block != removed {
            blocks.push((e.block.clone(), e.mult));
        }
    }
    let mut eps_out = EpsilonChar::empty();
    for (b, s) in eps.values() {
        if b != &removed {
            eps_out.set(b.clone(), s);
        }
    }
    let sign_removed = eps
        .get(&removed)
        .ok_or_else(|| Error::InvalidEpsilon(format!("no sign on block {removed}")))?;

    if lower == 0 {
        // x = 1/2: the step requires eps(rho, 2) = +1
        if sign_removed != Sign::Plus {
            return Ok(RepSymbol::Zero);
        }
    } else if phi.contains(rho, lower) {
        // doubled case: requires equal signs on the two blocks; forgetting
        // multiplicity keeps the common sign
        let lower_block = JordanBlock::new(rho.clone(), lower)?;
        let sign_lower = eps.get(&lower_block).expect("block present");
        if sign_removed * sign_lower != Sign::Plus {
            return Ok(RepSymbol::Zero);
        }
        for entry in blocks.iter_mut() {
            if entry.0 == lower_block {
                entry.1 += 1;
            }
        }
    } else {
        let lower_block = JordanBlock::new(rho.clone(), lower)?;
        blocks.push((lower_block.clone(), 1));
        eps_out.set(lower_block, sign_removed);
    }
    let phi_minus = Parameter::new(group, blocks)?;
    RepSymbol::packet(phi_minus, eps_out, level)
}

/// Jacquet step on a packet inside an induced symbol: vanishing applies for
/// nonpositive `x`, and a tempered boundary packet only admits the vanishing
/// outcome (anything finer is not determined by the block calculus).
fn bar_jac_packet_term(
    x: HalfInt,
    rho: &ScuspSymbol,
    phi: &Parameter,
    eps: &EpsilonChar,
    level: EpsilonLevel,
) -> Result<RepSymbol> {
    if !x.is_positive() {
        return Ok(RepSymbol::Zero);
    }
    if phi.is_discrete() {
        return jac_packet_inner(x, rho, phi, eps, level);
    }
    let a = x.doubled() + 1;
    if a <= 0 || !phi.contains(rho, a as u32) {
        return Ok(RepSymbol::Zero);
    }
    Err(Error::NotComputable(format!(
        "Jac_{x} on the tempered boundary packet {phi} is finer than the block data"
    )))
}

/// The full Jacquet step `barJac_x` on any symbol: for an induced symbol the
/// three-term expansion (leading GL removal, trailing dual removal, inner
/// step), for a packet the blockwise step, and zero on zero.
pub fn jac_symbol(x: HalfInt, rho: &ScuspSymbol, sym: &RepSymbol) -> Result<VirtualSum> {
    match sym {
        RepSymbol::Zero => Ok(VirtualSum::zero()),
        RepSymbol::Packet { phi, eps, level } => {
            let t = bar_jac_packet_term(x, rho, phi, eps, *level)?;
            Ok(VirtualSum::of(t))
        }
        RepSymbol::Induced { gl, inner } => {
            let mut out = VirtualSum::zero();
            for (p, c) in jac_gl(x, rho, gl).terms() {
                out.add_term(RepSymbol::induced(p.clone(), (**inner).clone()), c);
            }
            for (p, c) in jac_op_gl(-x, rho, gl).terms() {
                out.add_term(RepSymbol::induced(p.clone(), (**inner).clone()), c);
            }
            let inner_sum = jac_symbol(x, rho, inner)?;
            for (t, c) in inner_sum.terms() {
                out.add_term(RepSymbol::induced(gl.clone(), t.clone()), c);
            }
            Ok(out)
        }
    }
}

/// Multi-step Jacquet functor `Jac_{x_1,...,x_s} = Jac_{x_s} . ... . Jac_{x_1}`,
/// evaluated left-to-right with memoization keyed on `(x, symbol)`.
pub fn jac_multi(xs: &[HalfInt], rho: &ScuspSymbol, sym: &RepSymbol) -> Result<VirtualSum> {
    let mut memo: BTreeMap<(HalfInt, RepSymbol), VirtualSum> = BTreeMap::new();
    let mut current = VirtualSum::of(sym.clone());
    for &x in xs {
        let mut next = VirtualSum::zero();
        for (t, c) in current.terms() {
            let key = (x, t.clone());
            let step = match memo.get(&key) {
                Some(v) => v.clone(),
                None => {
                    let v = jac_symbol(x, rho, t)?;
                    memo.insert(key, v.clone());
                    v
                }
            };
            next.add(&step.scaled(c));
        }
        current = next;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::GroupType;
    use crate::symbol::QuadChar;

    fn chi() -> ScuspSymbol {
        ScuspSymbol::character("chi", QuadChar::trivial())
    }

    fn chip() -> ScuspSymbol {
        ScuspSymbol::character("chip", QuadChar::from_generators(["e"]))
    }

    fn seg(from: i64, to: i64) -> Segment {
        Segment::new(chi(), HalfInt::from_int(from), HalfInt::from_int(to)).unwrap()
    }

    fn block(rho: ScuspSymbol, a: u32) -> JordanBlock {
        JordanBlock::new(rho, a).unwrap()
    }

    fn packet(phi: Parameter, signs: &[(&JordanBlock, Sign)]) -> RepSymbol {
        let mut eps = EpsilonChar::empty();
        for (b, s) in signs {
            eps.set((*b).clone(), *s);
        }
        RepSymbol::packet(phi, eps, EpsilonLevel::Sigma0).unwrap()
    }

    #[test]
    fn gl_segment_rules() {
        // Jac_3 <chi;3,2,1> = <chi;2,1>
        let s = seg(3, 1);
        let got = jac_gl(HalfInt::from_int(3), &chi(), &[s.clone()]);
        assert_eq!(got, GlSum::of(vec![seg(2, 1)]));
        // Jac_2 <chi;3,2,1> = 0
        assert!(jac_gl(HalfInt::from_int(2), &chi(), &[s.clone()]).is_zero());
        // wrong symbol: 0
        assert!(jac_gl(HalfInt::from_int(3), &chip(), &[s.clone()]).is_zero());
        // Jac^op_1 <chi;3,2,1> = <chi;3,2>
        let got = jac_op_gl(HalfInt::ONE, &chi(), &[s.clone()]);
        assert_eq!(got, GlSum::of(vec![seg(3, 2)]));
        // Jac^op_3 <chi;3,2,1> = 0
        assert!(jac_op_gl(HalfInt::from_int(3), &chi(), &[s]).is_zero());
        // Jac^op_0 <chi;0> consumes the whole segment, leaving the unit
        let got = jac_op_gl(HalfInt::ZERO, &chi(), &[seg(0, 0)]);
        assert_eq!(got, GlSum::of(vec![]));
    }

    #[test]
    fn gl_product_rule() {
        // Jac_1 (<chi;1> x <chi;1>) = 2 <chi;1>
        let p = vec![seg(1, 1), seg(1, 1)];
        let got = jac_gl(HalfInt::ONE, &chi(), &p);
        let mut want = GlSum::zero();
        want.add_term(vec![seg(1, 1)], 2);
        assert_eq!(got, want);
    }

    #[test]
    fn theta_rules() {
        // Jac^theta_2 St(chi,5) = St(chi,3)
        let st5 = Segment::steinberg(chi(), 5).unwrap();
        let got = jac_theta(HalfInt::from_int(2), &chi(), &[st5]);
        assert_eq!(got, GlSum::of(vec![Segment::steinberg(chi(), 3).unwrap()]));
        // leading exponent of St(chi,3) is 1, so Jac^theta_2 kills it
        let st3 = Segment::steinberg(chi(), 3).unwrap();
        assert!(jac_theta(HalfInt::from_int(2), &chi(), &[st3]).is_zero());
        // Jac^theta_{1/2} St(chi,2) is the unit
        let st2 = Segment::steinberg(chi(), 2).unwrap();
        let got = jac_theta(HalfInt::HALF, &chi(), &[st2]);
        assert_eq!(got, GlSum::of(vec![]));
    }

    #[test]
    fn theta_on_parameter_products_matches_block_rewrite() {
        // phi = {(chi,5),(chip,1)}: Jac^theta_2 of the product of Steinbergs
        // is the product for {(chi,3),(chip,1)}
        let prod = vec![
            Segment::steinberg(chi(), 5).unwrap(),
            Segment::steinberg(chip(), 1).unwrap(),
        ];
        let got = jac_theta(HalfInt::from_int(2), &chi(), &prod);
        let want = vec![
            Segment::steinberg(chi(), 3).unwrap(),
            Segment::steinberg(chip(), 1).unwrap(),
        ];
        assert_eq!(got, GlSum::of(want));
    }

    #[test]
    fn packet_case_one() {
        // Sp(6), phi = {(chi,5),(chi,1),(chip,1)}, x=2: (chi,3) absent, so
        // the block moves down and keeps its sign.
        let b5 = block(chi(), 5);
        let b1 = block(chi(), 1);
        let c1 = block(chip(), 1);
        let phi = Parameter::new(
            GroupType::sp(3),
            vec![(b5.clone(), 1), (b1.clone(), 1), (c1.clone(), 1)],
        )
        .unwrap();
        let sym = packet(phi, &[(&b5, Sign::Plus), (&b1, Sign::Minus), (&c1, Sign::Minus)]);
        let got = jac_packet(HalfInt::from_int(2), &chi(), &sym).unwrap();
        match &got {
            RepSymbol::Packet { phi, eps, .. } => {
                assert_eq!(phi.group(), &GroupType::sp(2));
                assert!(phi.contains(&chi(), 3));
                assert!(!phi.contains(&chi(), 5));
                assert_eq!(eps.get(&block(chi(), 3)), Some(Sign::Plus));
                assert_eq!(eps.get(&b1), Some(Sign::Minus));
            }
            other => panic!("expected packet, got {other}"),
        }
        // vanishing: x=1 asks for (chi,3) which is absent
        let got = jac_packet(HalfInt::ONE, &chi(), &sym).unwrap();
        assert!(got.is_zero());
        // vanishing for a symbol with no matching blocks at all
        let got = jac_packet(HalfInt::from_int(2), &chip(), &sym).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn packet_case_three_sign_gate() {
        // phi contains (chi,2) and x = 1/2: the step needs eps(chi,2) = +1.
        let b2 = block(chi(), 2);
        let c2 = block(chip(), 2);
        let phi = Parameter::new(
            GroupType::so_odd(2),
            vec![(b2.clone(), 1), (c2.clone(), 1)],
        )
        .unwrap();
        let sym = packet(phi.clone(), &[(&b2, Sign::Minus), (&c2, Sign::Minus)]);
        let got = jac_packet(HalfInt::HALF, &chi(), &sym).unwrap();
        assert!(got.is_zero());
        let sym = packet(phi, &[(&b2, Sign::Plus), (&c2, Sign::Plus)]);
        let got = jac_packet(HalfInt::HALF, &chi(), &sym).unwrap();
        match &got {
            RepSymbol::Packet { phi, .. } => {
                assert!(!phi.contains(&chi(), 2));
                assert_eq!(phi.group(), &GroupType::so_odd(1));
            }
            other => panic!("expected packet, got {other}"),
        }
    }

    #[test]
    fn packet_case_two_doubles_block() {
        // SO(4,triv), phi = {(chi,3),(chi,1)} with equal signs: x=1 doubles
        // (chi,1) and the result is a tempered boundary packet.
        let b3 = block(chi(), 3);
        let b1 = block(chi(), 1);
        let phi = Parameter::new(
            GroupType::so_even(2, QuadChar::trivial()),
            vec![(b3.clone(), 1), (b1.clone(), 1)],
        )
        .unwrap();
        let sym = packet(phi.clone(), &[(&b3, Sign::Minus), (&b1, Sign::Minus)]);
        let got = jac_packet(HalfInt::ONE, &chi(), &sym).unwrap();
        match &got {
            RepSymbol::Packet { phi, .. } => {
                assert_eq!(phi.multiplicity(&b1), 2);
                assert!(phi.doubled_block().is_some());
            }
            other => panic!("expected packet, got {other}"),
        }
        // on the doubled packet, vanishing still applies ...
        assert!(jac_symbol(HalfInt::ONE, &chi(), &got).unwrap().is_zero());
        assert!(jac_symbol(-HalfInt::ONE, &chi(), &got).unwrap().is_zero());
        // opposite signs: zero
        let sym = packet(phi, &[(&b3, Sign::Plus), (&b1, Sign::Minus)]);
        let got = jac_packet(HalfInt::ONE, &chi(), &sym).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn doubled_packet_nonvanishing_step_is_not_computable() {
        // SO(8,triv), phi = {(chi,5),(chi,3)} with equal signs: x=2 doubles
        // (chi,3); a further step asking for the doubled block is finer than
        // the block data and must be reported as such.
        let b5 = block(chi(), 5);
        let b3 = block(chi(), 3);
        let phi = Parameter::new(
            GroupType::so_even(4, QuadChar::trivial()),
            vec![(b5.clone(), 1), (b3.clone(), 1)],
        )
        .unwrap();
        let sym = packet(phi, &[(&b5, Sign::Plus), (&b3, Sign::Plus)]);
        let doubled = jac_packet(HalfInt::from_int(2), &chi(), &sym).unwrap();
        match &doubled {
            RepSymbol::Packet { phi, .. } => assert_eq!(phi.multiplicity(&b3), 2),
            other => panic!("expected packet, got {other}"),
        }
        assert!(matches!(
            jac_symbol(HalfInt::ONE, &chi(), &doubled),
            Err(Error::NotComputable(_))
        ));
        // ... while vanishing steps still evaluate to zero
        assert!(jac_symbol(HalfInt::from_int(3), &chi(), &doubled).unwrap().is_zero());
    }

    #[test]
    fn packet_rejects_bad_input() {
        let b3 = block(chi(), 3);
        let phi = Parameter::new(GroupType::sp(1), vec![(b3.clone(), 1)]).unwrap();
        let sym = packet(phi, &[(&b3, Sign::Plus)]);
        assert!(matches!(
            jac_packet(HalfInt::ZERO, &chi(), &sym),
            Err(Error::NonPositiveX)
        ));
        assert!(matches!(
            jac_packet(-HalfInt::ONE, &chi(), &sym),
            Err(Error::NonPositiveX)
        ));
    }

    #[test]
    fn induced_three_terms() {
        // Jac_2 (<chi;2> x| pkt) with (chi,5) not a block: only the GL term
        // survives and the segment is consumed.
        let b3 = block(chi(), 3);
        let phi = Parameter::new(GroupType::sp(1), vec![(b3.clone(), 1)]).unwrap();
        let inner = packet(phi, &[(&b3, Sign::Plus)]);
        let sym = RepSymbol::induced(vec![seg(2, 2)], inner.clone());
        let got = jac_symbol(HalfInt::from_int(2), &chi(), &sym).unwrap();
        assert_eq!(got, VirtualSum::of(inner.clone()));
        // an exponent matching nothing gives zero
        let sym = RepSymbol::induced(vec![seg(2, 2)], inner);
        let got = jac_symbol(HalfInt::from_int(5), &chi(), &sym).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn induced_inner_step() {
        // Jac_1 (<chi;2> x| pkt{(chi,3)}): the GL part does not start at 1
        // and -1 is not a trailing exponent, but the packet moves.
        let b3 = block(chi(), 3);
        let phi = Parameter::new(GroupType::sp(1), vec![(b3.clone(), 1)]).unwrap();
        let inner = packet(phi, &[(&b3, Sign::Plus)]);
        let sym = RepSymbol::induced(vec![seg(2, 2)], inner);
        let got = jac_symbol(HalfInt::ONE, &chi(), &sym).unwrap();
        assert_eq!(got.num_terms(), 1);
        let (t, c) = got.terms().next().unwrap();
        assert_eq!(c, 1);
        match t {
            RepSymbol::Induced { gl, inner } => {
                assert_eq!(gl, &vec![seg(2, 2)]);
                match &**inner {
                    RepSymbol::Packet { phi, .. } => assert!(phi.contains(&chi(), 1)),
                    other => panic!("unexpected inner {other}"),
                }
            }
            other => panic!("unexpected term {other}"),
        }
    }

    #[test]
    fn multi_step_commutes_away_from_adjacent_exponents() {
        // Jac_{x,y} = Jac_{y,x} when |x-y| != 1, spot-checked here; the
        // acceptance suite sweeps randomized symbols.
        let b5 = block(chi(), 5);
        let b1 = block(chi(), 1);
        let c1 = block(chip(), 1);
        let phi = Parameter::new(
            GroupType::sp(3),
            vec![(b5.clone(), 1), (b1.clone(), 1), (c1.clone(), 1)],
        )
        .unwrap();
        let inner = packet(phi, &[(&b5, Sign::Plus), (&b1, Sign::Plus), (&c1, Sign::Plus)]);
        let sym = RepSymbol::induced(vec![seg(2, 0), seg(4, 3)], inner);
        let x = HalfInt::from_int(2);
        let y = HalfInt::from_int(4);
        let a = jac_multi(&[x, y], &chi(), &sym).unwrap();
        let b = jac_multi(&[y, x], &chi(), &sym).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }

    #[test]
    fn lemma_unique_low_exponent_constituent() {
        // among the multisegment constituents of chi|^2 x chi|^1 x chi|^0,
        // only the full segment has Jac_x = 0 for every x != 2
        let full = seg(2, 0);
        let partitions: Vec<Vec<Segment>> = vec![
            vec![seg(2, 0)],
            vec![seg(2, 1), seg(0, 0)],
            vec![seg(2, 2), seg(1, 0)],
            vec![seg(2, 2), seg(1, 1), seg(0, 0)],
        ];
        for p in &partitions {
            let only_top = [0i64, 1, 2].iter().all(|&v| {
                let x = HalfInt::from_int(v);
                x == full.from() || jac_gl(x, &chi(), p).is_zero()
            });
            assert_eq!(only_top, p == &vec![full.clone()]);
        }
    }

    /// The even orthogonal Jacquet expansion is stated by case tables keyed
    /// on the inner rank and the parity of `d_rho`, with some terms twisted
    /// by the outer automorphism.  Erasing the twists (which is what passing
    /// to outer-conjugation classes does) must reproduce the unified
    /// three-term expansion, with the inner term doubled exactly when the
    /// inner rank equals `d_rho`.
    #[test]
    fn so_even_case_tables_collapse_to_unified_formula() {
        #[derive(PartialEq, Eq, Debug, Clone, Copy, PartialOrd, Ord)]
        enum Shape {
            GlLeading,
            GlTrailing,
            Inner,
        }
        // stated tables for the plain functor on tau x| pi, pi of rank n > 0:
        // a GL-leading term, a GL-trailing term (inner twisted when d_rho is
        // odd), the plain inner term, and for n = d_rho the twisted inner
        // copy
        let stated = |n: u32, d_rho: u32, d_rho_odd: bool| -> Vec<(Shape, bool)> {
            let mut t = vec![
                (Shape::GlLeading, false),
                (Shape::GlTrailing, d_rho_odd),
                (Shape::Inner, false),
            ];
            if n == d_rho {
                t.push((Shape::Inner, true));
            }
            t
        };
        let erase = |terms: Vec<(Shape, bool)>| -> Vec<Shape> {
            let mut out: Vec<Shape> = terms.into_iter().map(|(s, _)| s).collect();
            out.sort();
            out
        };
        // unified formula at class level: GL-leading + GL-trailing + inner
        // bar step, where the bar step doubles exactly when n = d_rho
        let unified = |n: u32, d_rho: u32| -> Vec<Shape> {
            let mut t = vec![Shape::GlLeading, Shape::GlTrailing, Shape::Inner];
            if n == d_rho {
                t.push(Shape::Inner);
            }
            t.sort();
            t
        };
        for n in 1u32..=4 {
            for d_rho in 1u32..=3 {
                let d_rho_odd = d_rho % 2 == 1;
                assert_eq!(
                    erase(stated(n, d_rho, d_rho_odd)),
                    unified(n, d_rho),
                    "n={n} d_rho={d_rho}"
                );
            }
        }
    }
}
