//! Segment and generalized-segment calculus with the linking predicates.
//!
//! A segment is a finite arithmetic progression of half-integers with step
//! `+1` or `-1`; a generalized segment is a matrix of exponents whose rows
//! are monotone one way and whose columns are monotone the other way.  The
//! reducibility of products of the corresponding induced representations is
//! controlled by linking.

use std::fmt;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::symbol::ScuspSymbol;

/// `<rho; from, ..., to>`: the arithmetic progression from `from` to `to`
/// with step `-1` when `from >= to` (Steinberg) and `+1` otherwise (Speh).
/// Nonempty by construction; operations that may empty a segment return
/// `Option<Segment>`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Segment {
    rho: ScuspSymbol,
    from: HalfInt,
    to: HalfInt,
}

impl Segment {
    pub fn new(rho: ScuspSymbol, from: HalfInt, to: HalfInt) -> Result<Self> {
        if !from.same_lattice(to) {
            return Err(Error::InvalidSegment(format!(
                "endpoints {from} and {to} do not differ by an integer"
            )));
        }
        Ok(Segment { rho, from, to })
    }

    /// The Steinberg segment `<(a-1)/2, ..., -(a-1)/2>`.
    pub fn steinberg(rho: ScuspSymbol, a: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidSegment("Steinberg size must be positive".into()));
        }
        let top = HalfInt::half_of(a as i64 - 1);
        Segment::new(rho, top, -top)
    }

    pub fn point(rho: ScuspSymbol, x: HalfInt) -> Self {
        Segment { rho, from: x, to: x }
    }

    pub fn rho(&self) -> &ScuspSymbol {
        &self.rho
    }

    pub fn from(&self) -> HalfInt {
        self.from
    }

    pub fn to(&self) -> HalfInt {
        self.to
    }

    /// `-1` for decreasing (Steinberg) segments, `+1` for increasing ones; a
    /// single point counts as decreasing.
    pub fn step(&self) -> i64 {
        if self.from >= self.to {
            -1
        } else {
            1
        }
    }

    pub fn len(&self) -> u64 {
        ((self.from - self.to).abs().doubled() / 2) as u64 + 1
    }

    pub fn dim(&self) -> u64 {
        self.len() * self.rho.dim() as u64
    }

    pub fn lo(&self) -> HalfInt {
        self.from.min(self.to)
    }

    pub fn hi(&self) -> HalfInt {
        self.from.max(self.to)
    }

    pub fn values(&self) -> Vec<HalfInt> {
        let step = HalfInt::from_int(self.step());
        let mut out = Vec::with_capacity(self.len() as usize);
        let mut x = self.from;
        loop {
            out.push(x);
            if x == self.to {
                break;
            }
            x += step;
        }
        out
    }

    pub fn shift(&self, s: HalfInt) -> Segment {
        Segment { rho: self.rho.clone(), from: self.from + s, to: self.to + s }
    }

    /// Drops the leading exponent; `None` when the segment had length one.
    pub fn drop_leading(&self) -> Option<Segment> {
        if self.from == self.to {
            None
        } else {
            let step = HalfInt::from_int(self.step());
            Some(Segment { rho: self.rho.clone(), from: self.from + step, to: self.to })
        }
    }

    /// Drops the trailing exponent; `None` when the segment had length one.
    pub fn drop_trailing(&self) -> Option<Segment> {
        if self.from == self.to {
            None
        } else {
            let step = HalfInt::from_int(self.step());
            Some(Segment { rho: self.rho.clone(), from: self.from, to: self.to - step })
        }
    }

    fn contains_set(&self, other: &Segment) -> bool {
        self.lo().same_lattice(other.lo()) && self.lo() <= other.lo() && other.hi() <= self.hi()
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.from == self.to {
            write!(f, "<{}:{}>", self.rho.label(), self.from)
        } else {
            write!(f, "<{}:{}..{}>", self.rho.label(), self.from, self.to)
        }
    }
}

/// Linking of two segments of compatible monotonicity: true when neither
/// underlying set contains the other and the union is again an arithmetic
/// progression of step one.  Purely numeric; the symbols are ignored.
pub fn is_linked(s1: &Segment, s2: &Segment) -> Result<bool> {
    let d1 = s1.from - s1.to;
    let d2 = s2.from - s2.to;
    if (d1.doubled() > 0 && d2.doubled() < 0) || (d1.doubled() < 0 && d2.doubled() > 0) {
        return Err(Error::MixedMonotonicity);
    }
    Ok(linked_as_sets(s1, s2))
}

fn linked_as_sets(s1: &Segment, s2: &Segment) -> bool {
    if !s1.lo().same_lattice(s2.lo()) {
        return false;
    }
    if s1.contains_set(s2) || s2.contains_set(s1) {
        return false;
    }
    // union is an interval iff the two intervals overlap or are adjacent
    s1.lo().max(s2.lo()) <= s1.hi().min(s2.hi()) + HalfInt::ONE
}

/// Zelevinsky's criterion: the product of the two segment representations is
/// reducible iff the symbols agree and the segments are linked.
pub fn product_reducible(s1: &Segment, s2: &Segment) -> Result<bool> {
    Ok(s1.rho.label() == s2.rho.label() && is_linked(s1, s2)?)
}

/// Orientation of a generalized segment: whether rows decrease (and columns
/// increase) or the other way around.  Degenerate matrices whose rows and
/// columns all have length one have no orientation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonotoneKind {
    RowsDecreasing,
    RowsIncreasing,
}

/// `<rho; {x_ij}>`: an `m x n` grid of exponents with monotone rows and
/// columns of opposite kinds, labeling a Speh-of-Steinberg representation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenSegment {
    rho: ScuspSymbol,
    rows: Vec<Vec<HalfInt>>,
}

impl GenSegment {
    pub fn new(rho: ScuspSymbol, rows: Vec<Vec<HalfInt>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::InvalidSegment("generalized segment must be nonempty".into()));
        }
        let n = rows[0].len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSegment("rows must have equal length".into()));
        }
        let mut row_dir: Option<i64> = None;
        let mut col_dir: Option<i64> = None;
        for r in &rows {
            for w in r.windows(2) {
                let d = (w[1] - w[0]).doubled();
                if d.abs() != 2 {
                    return Err(Error::InvalidSegment(
                        "adjacent row entries must differ by 1".into(),
                    ));
                }
                match row_dir {
                    None => row_dir = Some(d),
                    Some(e) if e != d => {
                        return Err(Error::InvalidSegment("rows are not all monotone the same way".into()))
                    }
                    _ => {}
                }
            }
        }
        for j in 0..n {
            for i in 1..rows.len() {
                let d = (rows[i][j] - rows[i - 1][j]).doubled();
                if d.abs() != 2 {
                    return Err(Error::InvalidSegment(
                        "adjacent column entries must differ by 1".into(),
                    ));
                }
                match col_dir {
                    None => col_dir = Some(d),
                    Some(e) if e != d => {
                        return Err(Error::InvalidSegment("columns are not all monotone the same way".into()))
                    }
                    _ => {}
                }
            }
        }
        if let (Some(r), Some(c)) = (row_dir, col_dir) {
            if r == c {
                return Err(Error::InvalidSegment(
                    "rows and columns must be monotone in opposite directions".into(),
                ));
            }
        }
        Ok(GenSegment { rho, rows })
    }

    pub fn from_segment(seg: &Segment) -> GenSegment {
        GenSegment { rho: seg.rho.clone(), rows: vec![seg.values()] }
    }

    pub fn rho(&self) -> &ScuspSymbol {
        &self.rho
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<HalfInt>] {
        &self.rows
    }

    pub fn kind(&self) -> Option<MonotoneKind> {
        let m = self.num_rows();
        let n = self.num_cols();
        if n >= 2 {
            return if self.rows[0][1] < self.rows[0][0] {
                Some(MonotoneKind::RowsDecreasing)
            } else {
                Some(MonotoneKind::RowsIncreasing)
            };
        }
        if m >= 2 {
            // single column: the column direction determines the row kind
            return if self.rows[1][0] > self.rows[0][0] {
                Some(MonotoneKind::RowsDecreasing)
            } else {
                Some(MonotoneKind::RowsIncreasing)
            };
        }
        None
    }

    pub fn transpose(&self) -> GenSegment {
        let m = self.num_rows();
        let n = self.num_cols();
        let mut rows = vec![vec![HalfInt::ZERO; m]; n];
        for i in 0..m {
            for j in 0..n {
                rows[j][i] = self.rows[i][j];
            }
        }
        GenSegment { rho: self.rho.clone(), rows }
    }

    pub fn shift(&self, s: HalfInt) -> GenSegment {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| *x + s).collect())
            .collect();
        GenSegment { rho: self.rho.clone(), rows }
    }

    /// The diagonal segment `[x_{m1}, x_{1n}]` running between the two
    /// extreme corners; as a set it is the full range of the entries.
    fn diagonal(&self) -> Segment {
        let m = self.num_rows();
        let n = self.num_cols();
        Segment {
            rho: self.rho.clone(),
            from: self.rows[m - 1][0],
            to: self.rows[0][n - 1],
        }
    }

    /// The four sides of the rectangle: top row, bottom row, left column,
    /// right column, each as a segment.
    fn sides(&self) -> [Segment; 4] {
        let m = self.num_rows();
        let n = self.num_cols();
        let seg = |from: HalfInt, to: HalfInt| Segment { rho: self.rho.clone(), from, to };
        [
            seg(self.rows[0][0], self.rows[0][n - 1]),
            seg(self.rows[m - 1][0], self.rows[m - 1][n - 1]),
            seg(self.rows[0][0], self.rows[m - 1][0]),
            seg(self.rows[0][n - 1], self.rows[m - 1][n - 1]),
        ]
    }
}

impl fmt::Display for GenSegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}:[", self.rho.label())?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]>")
    }
}

/// Linking of generalized segments.  Arguments of different monotone kinds
/// are compared after transposing the second one; then the two diagonal
/// segments must be linked and no side of one rectangle may be contained in
/// or contain the corresponding side of the other.
pub fn gen_is_linked(g1: &GenSegment, g2: &GenSegment) -> bool {
    let g2t;
    let g2 = match (g1.kind(), g2.kind()) {
        (Some(k1), Some(k2)) if k1 != k2 => {
            g2t = g2.transpose();
            &g2t
        }
        _ => g2,
    };
    if !linked_as_sets(&g1.diagonal(), &g2.diagonal()) {
        return false;
    }
    let s1 = g1.sides();
    let s2 = g2.sides();
    s1.iter()
        .zip(s2.iter())
        .all(|(a, b)| !a.contains_set(b) && !b.contains_set(a))
}

/// The criterion of the generalized irreducibility theorem: the product of
/// the two representations is guaranteed irreducible when this returns
/// `true` (distinct symbols or unlinked grids).  The converse is exact only
/// in the regimes covered by the Speh-pair corollary.
pub fn gen_product_irreducible(g1: &GenSegment, g2: &GenSegment) -> bool {
    !(g1.rho.label() == g2.rho.label() && gen_is_linked(g1, g2))
}

/// The `b x a` exponent grid of `Sp(St(rho,a), b)`: row `i` (1-based) runs
/// from `(a-b)/2 + (i-1)` down to `1-(a+b)/2 + (i-1)`.
pub fn speh_matrix(rho: &ScuspSymbol, a: u32, b: u32) -> Result<GenSegment> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidSegment("Speh grid sizes must be positive".into()));
    }
    let a = a as i64;
    let b = b as i64;
    let mut rows = Vec::with_capacity(b as usize);
    for i in 0..b {
        let start = HalfInt::half_of(a - b) + HalfInt::from_int(i);
        let row: Vec<HalfInt> = (0..a).map(|j| start - HalfInt::from_int(j)).collect();
        rows.push(row);
    }
    GenSegment::new(rho.clone(), rows)
}

/// Reducibility test for `Sp(St(rho,a),b)|.|^s x Sp(St(rho',a'),b')`: true
/// iff the symbols agree, `(a+b+a'+b')/2 + s` is an integer, and
/// `|(a-a')/2| + |(b-b')/2| < |s| <= (a+a'+b+b')/2 - 1`.
pub fn speh_pair_reducible(
    rho: &ScuspSymbol,
    a: u32,
    b: u32,
    rho2: &ScuspSymbol,
    a2: u32,
    b2: u32,
    s: HalfInt,
) -> bool {
    if rho.label() != rho2.label() {
        return false;
    }
    let total = HalfInt::half_of((a + b + a2 + b2) as i64);
    if !(total + s).is_integer() {
        return false;
    }
    let lower = HalfInt::half_of(a as i64 - a2 as i64).abs()
        + HalfInt::half_of(b as i64 - b2 as i64).abs();
    let upper = total - HalfInt::ONE;
    lower < s.abs() && s.abs() <= upper
}
