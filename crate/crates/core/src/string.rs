//! String modules and the hook calculus.
//!
//! A string module is stored by its position on the universal cover: a start
//! position `a` in `[0, n)` and a length `k >= 1`.  Its basis sits at the
//! lifted positions `a+1 ..= a+k`, and the letter between positions `m` and
//! `m+1` is the arrow with index `m mod n`, read forwards when the sign at `m`
//! is `+`.  The flanking positions `a` and `b = a+k` decide everything else.
//!
//! A module value does not carry its quiver; every operation takes the quiver
//! it is interpreted over.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{Boundary, Quiver, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringError {
    #[error("vertex {vertex} out of range for a quiver with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the triple ({i},{i};0) describes an empty string")]
    EmptyString { i: usize },
    #[error("lift interval [{start}, {end}] is empty")]
    EmptyLift { start: i64, end: i64 },
    #[error("lift interval [{start}, {end}] does not match the triple ({i},{j};{l})")]
    LiftMismatch { start: i64, end: i64, i: usize, j: usize, l: u32 },
    #[error("module {0} is not regular")]
    NotRegular(StringModule),
    #[error("module {0} is neither projective nor injective")]
    NotProjectiveOrInjective(StringModule),
    #[error("module {0} is not projective")]
    NotProjective(StringModule),
    #[error("module {0} is not injective")]
    NotInjective(StringModule),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StringClass {
    Preprojective,
    Preinjective,
    LeftRegular,
    RightRegular,
}

impl StringClass {
    pub fn is_regular(self) -> bool {
        matches!(self, StringClass::LeftRegular | StringClass::RightRegular)
    }

    pub fn dual(self) -> StringClass {
        match self {
            StringClass::Preprojective => StringClass::Preinjective,
            StringClass::Preinjective => StringClass::Preprojective,
            StringClass::LeftRegular => StringClass::RightRegular,
            StringClass::RightRegular => StringClass::LeftRegular,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StringClass::Preprojective => "preprojective",
            StringClass::Preinjective => "preinjective",
            StringClass::LeftRegular => "left-regular",
            StringClass::RightRegular => "right-regular",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HookOp {
    AddHook,
    AddCohook,
    DeleteHook,
    DeleteCohook,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Start,
    End,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NakayamaDirection {
    /// Projective to injective.
    Forward,
    /// Injective to projective.
    Backward,
}

/// A letter of a walk: the arrow with the given index, traversed forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub arrow: usize,
    pub direct: bool,
}

/// Dimension vector indexed by vertex.
pub type DimVector = Vec<u32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringModule {
    start: i64,
    len: i64,
}

impl fmt::Display for StringModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.start, self.end())
    }
}

impl StringModule {
    /// Module from its triple `(i, j; l)`: length `l*n + ((j - i) mod n)`.
    pub fn from_triple(q: &Quiver, i: usize, j: usize, l: u32) -> Result<StringModule, StringError> {
        let n = q.n();
        for v in [i, j] {
            if v >= n {
                return Err(StringError::VertexOutOfRange { vertex: v, n });
            }
        }
        let len = l as i64 * n as i64 + (j as i64 - i as i64).rem_euclid(n as i64);
        if len == 0 {
            return Err(StringError::EmptyString { i });
        }
        Ok(StringModule { start: i as i64, len })
    }

    /// Module occupying the cover positions `start+1 ..= end`.  Translates are identified.
    pub fn from_lift(q: &Quiver, start: i64, end: i64) -> Result<StringModule, StringError> {
        if end <= start {
            return Err(StringError::EmptyLift { start, end });
        }
        Ok(StringModule {
            start: q.residue(start) as i64,
            len: end - start,
        })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.len
    }

    /// Total dimension.
    pub fn len(&self) -> i64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn lift(&self) -> (i64, i64) {
        (self.start, self.end())
    }

    pub fn triple(&self, q: &Quiver) -> (usize, usize, u32) {
        let n = q.n() as i64;
        let i = self.start;
        let j = self.end().rem_euclid(n);
        let l = (self.len - (j - i).rem_euclid(n)) / n;
        (i as usize, j as usize, l as u32)
    }

    pub fn label(&self, q: &Quiver) -> String {
        let (i, j, l) = self.triple(q);
        format!("({i},{j};{l})")
    }

    pub fn walk_vertices(&self, q: &Quiver) -> Vec<usize> {
        (self.start + 1..=self.end()).map(|m| q.residue(m)).collect()
    }

    pub fn walk_letters(&self, q: &Quiver) -> Vec<Letter> {
        (self.start + 1..self.end())
            .map(|m| Letter {
                arrow: q.residue(m),
                direct: q.lifted_sign(m) == Sign::Plus,
            })
            .collect()
    }

    pub fn classify(&self, q: &Quiver) -> StringClass {
        match (q.lifted_sign(self.start), q.lifted_sign(self.end())) {
            (Sign::Plus, Sign::Minus) => StringClass::Preprojective,
            (Sign::Minus, Sign::Plus) => StringClass::Preinjective,
            (Sign::Plus, Sign::Plus) => StringClass::LeftRegular,
            (Sign::Minus, Sign::Minus) => StringClass::RightRegular,
        }
    }

    pub fn dimension_vector(&self, q: &Quiver) -> DimVector {
        let mut d = vec![0u32; q.n()];
        for m in self.start + 1..=self.end() {
            d[q.residue(m)] += 1;
        }
        d
    }

    /// Bridging strings are always exceptional; regular ones exactly when shorter than `n`.
    pub fn is_exceptional(&self, q: &Quiver) -> bool {
        !self.classify(q).is_regular() || self.len < q.n() as i64
    }

    /// Boundary of the tube a regular module lives in.
    pub fn tube_boundary(&self, q: &Quiver) -> Option<Boundary> {
        match self.classify(q) {
            StringClass::LeftRegular => Some(Boundary::Outer),
            StringClass::RightRegular => Some(Boundary::Inner),
            _ => None,
        }
    }

    /// Quasi-length: marked points of the tube boundary met in `(a, b]`.
    pub fn quasi_length(&self, q: &Quiver) -> Result<u32, StringError> {
        let b = self.tube_boundary(q).ok_or(StringError::NotRegular(*self))?;
        let s = b.sign();
        Ok((self.start + 1..=self.end()).filter(|&m| q.lifted_sign(m) == s).count() as u32)
    }

    fn with_lift(q: &Quiver, a: i64, b: i64) -> Option<StringModule> {
        StringModule::from_lift(q, a, b).ok()
    }

    pub fn hook_op(&self, q: &Quiver, op: HookOp, side: Side) -> Option<StringModule> {
        let (a, b) = self.lift();
        match (op, side) {
            (HookOp::AddHook, Side::End) => {
                (q.lifted_sign(b) == Sign::Minus).then(|| (a, q.next_with(b, Sign::Minus)))
            }
            (HookOp::AddCohook, Side::End) => {
                (q.lifted_sign(b) == Sign::Plus).then(|| (a, q.next_with(b, Sign::Plus)))
            }
            (HookOp::DeleteHook, Side::End) => {
                let m = q.prev_with(b, Sign::Minus);
                (m > a).then_some((a, m))
            }
            (HookOp::DeleteCohook, Side::End) => {
                let m = q.prev_with(b, Sign::Plus);
                (m > a).then_some((a, m))
            }
            (HookOp::AddHook, Side::Start) => {
                (q.lifted_sign(a) == Sign::Plus).then(|| (q.prev_with(a, Sign::Plus), b))
            }
            (HookOp::AddCohook, Side::Start) => {
                (q.lifted_sign(a) == Sign::Minus).then(|| (q.prev_with(a, Sign::Minus), b))
            }
            (HookOp::DeleteHook, Side::Start) => {
                let m = q.next_with(a, Sign::Plus);
                (m < b).then_some((m, b))
            }
            (HookOp::DeleteCohook, Side::Start) => {
                let m = q.next_with(a, Sign::Minus);
                (m < b).then_some((m, b))
            }
        }
        .and_then(|(a, b)| StringModule::with_lift(q, a, b))
    }

    /// Auslander-Reiten translate; `None` exactly for projectives.
    pub fn tau(&self, q: &Quiver) -> Option<StringModule> {
        let (mut a, mut b) = self.lift();
        let end_added = q.lifted_sign(b) == Sign::Plus;
        let start_added = q.lifted_sign(a) == Sign::Minus;
        if end_added {
            b = q.next_with(b, Sign::Plus);
        }
        if start_added {
            a = q.prev_with(a, Sign::Minus);
        }
        if !end_added {
            b = q.prev_with(b, Sign::Minus);
            if b <= a {
                return None;
            }
        }
        if !start_added {
            a = q.next_with(a, Sign::Plus);
            if a >= b {
                return None;
            }
        }
        StringModule::with_lift(q, a, b)
    }

    /// Inverse translate; `None` exactly for injectives.
    pub fn tau_inv(&self, q: &Quiver) -> Option<StringModule> {
        let (mut a, mut b) = self.lift();
        let end_added = q.lifted_sign(b) == Sign::Minus;
        let start_added = q.lifted_sign(a) == Sign::Plus;
        if end_added {
            b = q.next_with(b, Sign::Minus);
        }
        if start_added {
            a = q.prev_with(a, Sign::Plus);
        }
        if !end_added {
            b = q.prev_with(b, Sign::Plus);
            if b <= a {
                return None;
            }
        }
        if !start_added {
            a = q.next_with(a, Sign::Minus);
            if a >= b {
                return None;
            }
        }
        StringModule::with_lift(q, a, b)
    }

    /// Walk of the shape `<-* ->*` between a `+` start flank and a `-` end flank.
    pub fn is_projective(&self, q: &Quiver) -> bool {
        let (a, b) = self.lift();
        q.lifted_sign(a) == Sign::Plus
            && q.lifted_sign(b) == Sign::Minus
            && q.next_with(a, Sign::Plus) > q.prev_with(b, Sign::Minus)
    }

    /// Walk of the shape `->* <-*` between a `-` start flank and a `+` end flank.
    pub fn is_injective(&self, q: &Quiver) -> bool {
        let (a, b) = self.lift();
        q.lifted_sign(a) == Sign::Minus
            && q.lifted_sign(b) == Sign::Plus
            && q.next_with(a, Sign::Minus) > q.prev_with(b, Sign::Plus)
    }

    /// Indecomposable projective at `v`.
    pub fn projective(q: &Quiver, v: usize) -> Result<StringModule, StringError> {
        check_vertex(q, v)?;
        let t = v as i64;
        let a = q.prev_with(t, Sign::Plus);
        let b = q.next_with(t - 1, Sign::Minus);
        StringModule::from_lift(q, a, b)
    }

    /// Indecomposable injective at `v`.
    pub fn injective(q: &Quiver, v: usize) -> Result<StringModule, StringError> {
        check_vertex(q, v)?;
        let t = v as i64;
        let a = q.prev_with(t, Sign::Minus);
        let b = q.next_with(t - 1, Sign::Plus);
        StringModule::from_lift(q, a, b)
    }

    /// Simple module at `v`.
    pub fn simple(q: &Quiver, v: usize) -> Result<StringModule, StringError> {
        check_vertex(q, v)?;
        StringModule::from_lift(q, v as i64 - 1, v as i64)
    }

    /// Top vertex of a projective.
    pub fn top(&self, q: &Quiver) -> Result<usize, StringError> {
        if !self.is_projective(q) {
            return Err(StringError::NotProjective(*self));
        }
        let t = q.prev_with(self.end(), Sign::Minus).max(self.start) + 1;
        Ok(q.residue(t))
    }

    /// Socle vertex of an injective.
    pub fn socle(&self, q: &Quiver) -> Result<usize, StringError> {
        if !self.is_injective(q) {
            return Err(StringError::NotInjective(*self));
        }
        let t = q.prev_with(self.end(), Sign::Plus).max(self.start) + 1;
        Ok(q.residue(t))
    }

    pub fn nakayama(&self, q: &Quiver, dir: NakayamaDirection) -> Result<StringModule, StringError> {
        match dir {
            NakayamaDirection::Forward => StringModule::injective(q, self.top(q)?),
            NakayamaDirection::Backward => StringModule::projective(q, self.socle(q)?),
        }
    }

    /// Nakayama functor in whichever direction applies.
    pub fn nakayama_any(&self, q: &Quiver) -> Result<StringModule, StringError> {
        if self.is_projective(q) {
            self.nakayama(q, NakayamaDirection::Forward)
        } else if self.is_injective(q) {
            self.nakayama(q, NakayamaDirection::Backward)
        } else {
            Err(StringError::NotProjectiveOrInjective(*self))
        }
    }

    /// Vector space dual, a module over the opposite quiver with the same support.
    pub fn dual(&self) -> StringModule {
        *self
    }

    /// All strings over `q` of length at most `max_len`, ordered by start then length.
    pub fn all_up_to(q: &Quiver, max_len: i64) -> Vec<StringModule> {
        (0..q.n() as i64)
            .flat_map(|a| (1..=max_len).map(move |len| StringModule { start: a, len }))
            .collect()
    }
}

fn check_vertex(q: &Quiver, v: usize) -> Result<(), StringError> {
    if v >= q.n() {
        Err(StringError::VertexOutOfRange { vertex: v, n: q.n() })
    } else {
        Ok(())
    }
}
