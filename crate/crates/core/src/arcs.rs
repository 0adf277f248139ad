//! Arcs in the annulus, their strands on the universal cover, and the pairwise
//! crossing / clockwise / cycle relations.
//!
//! The cover is drawn as a horizontal strip: outer marked points on the top
//! line, inner marked points on the bottom line, both at their integer
//! positions.  A strand `[a, b]` joins position `a` to position `b`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homext::{connections, dim_hom, is_exceptional_pair};
use crate::quiver::{Boundary, Quiver, Sign};
use crate::string::{StringClass, StringError, StringModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    #[error("module {0} is not exceptional")]
    NotExceptional(String),
    #[error("a module cannot be compared with itself: {0}")]
    SameModule(String),
    #[error("diagram has {found} arcs but the quiver has {expected} vertices")]
    WrongCount { expected: usize, found: usize },
    #[error("duplicate arc {0}")]
    Duplicate(String),
    #[error("arc a({i},{j})[{lambda}] is a loop")]
    Loop { i: usize, j: usize, lambda: i64 },
    #[error("arc a({i},{j})[{lambda}] has a winding number of the wrong sign for its kind")]
    BadWinding { i: usize, j: usize, lambda: i64 },
    #[error(transparent)]
    String(#[from] StringError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArcKind {
    BridgingFromOuter,
    BridgingFromInner,
    ExteriorOuter,
    ExteriorInner,
}

impl ArcKind {
    pub fn is_bridging(self) -> bool {
        matches!(self, ArcKind::BridgingFromOuter | ArcKind::BridgingFromInner)
    }
}

/// `a(i, j)[lambda]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub i: usize,
    pub j: usize,
    pub lambda: i64,
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})[{}]", self.i, self.j, self.lambda)
    }
}

impl Arc {
    pub fn kind(&self, q: &Quiver) -> ArcKind {
        match (q.sign(self.i), q.sign(self.j)) {
            (Sign::Plus, Sign::Minus) => ArcKind::BridgingFromOuter,
            (Sign::Minus, Sign::Plus) => ArcKind::BridgingFromInner,
            (Sign::Plus, Sign::Plus) => ArcKind::ExteriorOuter,
            (Sign::Minus, Sign::Minus) => ArcKind::ExteriorInner,
        }
    }
}

pub fn arc_of(q: &Quiver, m: &StringModule) -> Arc {
    let (i, j, l) = m.triple(q);
    let lambda = match m.classify(q) {
        StringClass::Preinjective => -(l as i64),
        _ => l as i64,
    };
    Arc { i, j, lambda }
}

pub fn module_of(q: &Quiver, arc: &Arc) -> Result<StringModule, ArcError> {
    let bad = || ArcError::BadWinding { i: arc.i, j: arc.j, lambda: arc.lambda };
    let l = match arc.kind(q) {
        ArcKind::BridgingFromInner => {
            if arc.lambda > 0 {
                return Err(bad());
            }
            -arc.lambda
        }
        _ => {
            if arc.lambda < 0 {
                return Err(bad());
            }
            arc.lambda
        }
    };
    if arc.i == arc.j && l == 0 {
        return Err(ArcError::Loop { i: arc.i, j: arc.j, lambda: arc.lambda });
    }
    let l = u32::try_from(l).map_err(|_| bad())?;
    Ok(StringModule::from_triple(q, arc.i, arc.j, l)?)
}

/// A strand: the lift interval `[start, end]` in its fundamental placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strand {
    pub start: i64,
    pub end: i64,
}

impl Strand {
    pub fn shifted(self, by: i64) -> Strand {
        Strand { start: self.start + by, end: self.end + by }
    }

    pub fn len(&self) -> i64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }
}

/// Preprojectives and left-regulars start at `i`; the others end at `j`.
pub fn strand_of(q: &Quiver, m: &StringModule) -> Strand {
    let (i, j, _) = m.triple(q);
    match m.classify(q) {
        StringClass::Preprojective | StringClass::LeftRegular => Strand {
            start: i as i64,
            end: i as i64 + m.len(),
        },
        StringClass::Preinjective | StringClass::RightRegular => Strand {
            start: j as i64 - m.len(),
            end: j as i64,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairRelation {
    Cross,
    Cw,
    Ccw,
    Disjoint,
    TwoCycle,
}

impl PairRelation {
    pub fn mirror(self) -> PairRelation {
        match self {
            PairRelation::Cw => PairRelation::Ccw,
            PairRelation::Ccw => PairRelation::Cw,
            other => other,
        }
    }

    pub fn is_compatible(self) -> bool {
        matches!(self, PairRelation::Cw | PairRelation::Ccw | PairRelation::Disjoint)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PairRelation::Cross => "cross",
            PairRelation::Cw => "cw",
            PairRelation::Ccw => "ccw",
            PairRelation::Disjoint => "disjoint",
            PairRelation::TwoCycle => "two-cycle",
        }
    }
}

/// Which strand is higher at a contact position, if forced.
fn order_at(q: &Quiver, x: &Strand, y: &Strand, pos: i64) -> Option<bool> {
    let x_end = pos == x.start || pos == x.end;
    let y_end = pos == y.start || pos == y.end;
    let endpoint_above = q.lifted_sign(pos) == Sign::Plus;
    match (x_end, y_end) {
        (true, false) => Some(endpoint_above),
        (false, true) => Some(!endpoint_above),
        _ => None,
    }
}

/// Nontrivial crossing of two monotone strands.
pub fn strands_cross(q: &Quiver, x: &Strand, y: &Strand) -> bool {
    let lo = x.start.max(y.start);
    let hi = x.end.min(y.end);
    if lo >= hi {
        return false;
    }
    let shared = [x.start, x.end].iter().any(|p| *p == y.start || *p == y.end);
    if shared {
        return false;
    }
    match (order_at(q, x, y, lo), order_at(q, x, y, hi)) {
        (Some(l), Some(r)) => l != r,
        _ => false,
    }
}

/// Position of a marked point along the boundary of the strip, read clockwise:
/// the top line left to right, then the bottom line right to left.
pub fn boundary_key(q: &Quiver, pos: i64) -> (u8, i64) {
    match q.boundary_at(pos) {
        Boundary::Outer => (0, pos),
        Boundary::Inner => (1, -pos),
    }
}

/// Rank of the germ ending at `other` among germs leaving `at`, clockwise.
fn germ_rank(q: &Quiver, at: i64, other: i64) -> (bool, (u8, i64)) {
    let k = boundary_key(q, other);
    (k < boundary_key(q, at), k)
}

/// At a shared endpoint: `Some(true)` if `x` is clockwise of `y` there.
fn clockwise_at(q: &Quiver, x: &Strand, y: &Strand, at: i64) -> Option<bool> {
    let other = |s: &Strand| if s.start == at { s.end } else { s.start };
    let (ox, oy) = (other(x), other(y));
    if ox == oy {
        return None;
    }
    Some(germ_rank(q, at, ox) > germ_rank(q, at, oy))
}

fn check_exceptional(q: &Quiver, m: &StringModule) -> Result<(), ArcError> {
    if m.is_exceptional(q) {
        Ok(())
    } else {
        Err(ArcError::NotExceptional(m.label(q)))
    }
}

/// Geometric relation between the arcs of `u` and `v`.
pub fn pair_relation(q: &Quiver, u: &StringModule, v: &StringModule) -> Result<PairRelation, ArcError> {
    check_exceptional(q, u)?;
    check_exceptional(q, v)?;
    if u == v {
        return Err(ArcError::SameModule(u.label(q)));
    }
    let x = strand_of(q, u);
    let y0 = strand_of(q, v);
    let n = q.n() as i64;
    let window = (u.len() + v.len() + n - 1) / n + 1;
    let (mut cw, mut ccw) = (false, false);
    for z in -window..=window {
        let y = y0.shifted(z * n);
        if y.end < x.start || x.end < y.start {
            continue;
        }
        if strands_cross(q, &x, &y) {
            return Ok(PairRelation::Cross);
        }
        for p in [x.start, x.end] {
            if p == y.start || p == y.end {
                match clockwise_at(q, &x, &y, p) {
                    Some(true) => cw = true,
                    Some(false) => ccw = true,
                    None => {}
                }
            }
        }
    }
    Ok(match (cw, ccw) {
        (true, true) => PairRelation::TwoCycle,
        (true, false) => PairRelation::Cw,
        (false, true) => PairRelation::Ccw,
        (false, false) => PairRelation::Disjoint,
    })
}

/// The same relation read off Hom and Ext.
pub fn relation_algebraic(q: &Quiver, u: &StringModule, v: &StringModule) -> Result<PairRelation, ArcError> {
    check_exceptional(q, u)?;
    check_exceptional(q, v)?;
    if u == v {
        return Err(ArcError::SameModule(u.label(q)));
    }
    let uv = is_exceptional_pair(q, u, v);
    let vu = is_exceptional_pair(q, v, u);
    Ok(match (uv, vu) {
        (true, true) => PairRelation::Disjoint,
        (true, false) => PairRelation::Cw,
        (false, true) => PairRelation::Ccw,
        (false, false) => {
            let joinable = !connections(q, u, v).is_empty() && !connections(q, v, u).is_empty();
            if joinable && dim_hom(q, u, v) == 0 && dim_hom(q, v, u) == 0 {
                PairRelation::TwoCycle
            } else {
                PairRelation::Cross
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    pub quiver: Quiver,
    pub modules: Vec<StringModule>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub first: StringModule,
    pub second: StringModule,
    pub relation: PairRelation,
}

fn class_rank(c: StringClass) -> u8 {
    match c {
        StringClass::Preinjective => 0,
        StringClass::RightRegular => 1,
        StringClass::LeftRegular => 2,
        StringClass::Preprojective => 3,
    }
}

impl ArcDiagram {
    pub fn new(quiver: Quiver, modules: Vec<StringModule>) -> ArcDiagram {
        ArcDiagram { quiver, modules }
    }

    pub fn from_arcs(quiver: Quiver, arcs: &[Arc]) -> Result<ArcDiagram, ArcError> {
        let modules = arcs
            .iter()
            .map(|a| module_of(&quiver, a))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ArcDiagram { quiver, modules })
    }

    pub fn arcs(&self) -> Vec<Arc> {
        self.modules.iter().map(|m| arc_of(&self.quiver, m)).collect()
    }

    /// Same diagram with its modules in ascending storage order.
    pub fn sorted(&self) -> ArcDiagram {
        let mut modules = self.modules.clone();
        modules.sort();
        ArcDiagram { quiver: self.quiver.clone(), modules }
    }

    fn check_shape(&self) -> Result<(), ArcError> {
        let n = self.quiver.n();
        if self.modules.len() != n {
            return Err(ArcError::WrongCount { expected: n, found: self.modules.len() });
        }
        let mut seen = BTreeSet::new();
        for m in &self.modules {
            if !seen.insert(*m) {
                return Err(ArcError::Duplicate(m.label(&self.quiver)));
            }
        }
        Ok(())
    }

    fn sort_key(&self, m: &StringModule) -> (u8, Arc) {
        (class_rank(m.classify(&self.quiver)), arc_of(&self.quiver, m))
    }

    /// Offending pairs: non-exceptional members are reported against themselves as crossings.
    pub fn violations(&self) -> Vec<Violation> {
        let q = &self.quiver;
        let mut out = Vec::new();
        for m in &self.modules {
            if !m.is_exceptional(q) {
                out.push(Violation { first: *m, second: *m, relation: PairRelation::Cross });
            }
        }
        for (a, u) in self.modules.iter().enumerate() {
            for v in &self.modules[a + 1..] {
                if u == v {
                    continue;
                }
                if let Ok(rel) = pair_relation(q, u, v) {
                    if !rel.is_compatible() {
                        out.push(Violation { first: *u, second: *v, relation: rel });
                    }
                }
            }
        }
        out
    }

    /// Topological order of the precedence digraph, or `None` if it is blocked.
    fn precedence_order(&self) -> Option<Vec<StringModule>> {
        let q = &self.quiver;
        let k = self.modules.len();
        let mut succ = vec![Vec::new(); k];
        let mut indeg = vec![0usize; k];
        for a in 0..k {
            if !self.modules[a].is_exceptional(q) {
                return None;
            }
            for b in a + 1..k {
                let rel = pair_relation(q, &self.modules[a], &self.modules[b]).ok()?;
                let (from, to) = match rel {
                    PairRelation::Cw => (a, b),
                    PairRelation::Ccw => (b, a),
                    PairRelation::Disjoint => continue,
                    PairRelation::Cross | PairRelation::TwoCycle => return None,
                };
                succ[from].push(to);
                indeg[to] += 1;
            }
        }
        let mut ready: BTreeSet<((u8, Arc), usize)> = (0..k)
            .filter(|&a| indeg[a] == 0)
            .map(|a| (self.sort_key(&self.modules[a]), a))
            .collect();
        let mut order = Vec::with_capacity(k);
        while let Some(entry) = ready.pop_first() {
            let a = entry.1;
            order.push(self.modules[a]);
            for &b in &succ[a] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.insert((self.sort_key(&self.modules[b]), b));
                }
            }
        }
        (order.len() == k).then_some(order)
    }

    pub fn is_exceptional(&self) -> Result<bool, ArcError> {
        self.check_shape()?;
        Ok(self.precedence_order().is_some())
    }

    /// A complete exceptional sequence ordering the diagram's modules.
    pub fn order(&self) -> Option<Vec<StringModule>> {
        self.check_shape().ok()?;
        self.precedence_order()
    }
}

/// Sequence check straight from Hom/Ext: every earlier/later pair is exceptional.
pub fn is_exceptional_sequence(q: &Quiver, seq: &[StringModule]) -> bool {
    seq.iter().all(|m| m.is_exceptional(q))
        && seq.iter().enumerate().all(|(a, u)| {
            seq[a + 1..].iter().all(|v| is_exceptional_pair(q, u, v))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quiver {
        s.parse().unwrap()
    }

    fn t(quiver: &Quiver, i: usize, j: usize, l: u32) -> StringModule {
        StringModule::from_triple(quiver, i, j, l).unwrap()
    }

    #[test]
    fn arc_bijection() {
        let quiver = q("-++");
        for m in StringModule::all_up_to(&quiver, 12) {
            if m.is_exceptional(&quiver) {
                assert_eq!(module_of(&quiver, &arc_of(&quiver, &m)).unwrap(), m);
            }
        }
        let a = arc_of(&quiver, &t(&quiver, 1, 2, 0));
        assert_eq!(a, Arc { i: 1, j: 2, lambda: 0 });
        assert_eq!(a.kind(&quiver), ArcKind::ExteriorOuter);
        assert_eq!(arc_of(&quiver, &t(&quiver, 0, 1, 2)).lambda, -2);
        assert!(module_of(&quiver, &Arc { i: 0, j: 1, lambda: 1 }).is_err());
        assert!(module_of(&quiver, &Arc { i: 1, j: 1, lambda: 0 }).is_err());
    }

    #[test]
    fn worked_example_strands() {
        let quiver = q("-+-++");
        assert_eq!(strand_of(&quiver, &t(&quiver, 1, 3, 0)), Strand { start: 1, end: 3 });
        assert_eq!(strand_of(&quiver, &t(&quiver, 1, 2, 1)), Strand { start: 1, end: 7 });
    }

    #[test]
    fn simples_relation() {
        let quiver = q("-++");
        let s1 = StringModule::simple(&quiver, 1).unwrap();
        let s2 = StringModule::simple(&quiver, 2).unwrap();
        assert_eq!(pair_relation(&quiver, &s1, &s2).unwrap(), PairRelation::Cw);
        assert_eq!(relation_algebraic(&quiver, &s1, &s2).unwrap(), PairRelation::Cw);
        assert!(relation_algebraic(&quiver, &s1, &s1).is_err());
    }

    #[test]
    fn same_endpoints_different_winding_cross() {
        let quiver = q("-++");
        let u = t(&quiver, 1, 0, 0);
        let v = t(&quiver, 1, 0, 2);
        assert_eq!(pair_relation(&quiver, &u, &v).unwrap(), PairRelation::Cross);
        assert_eq!(relation_algebraic(&quiver, &u, &v).unwrap(), PairRelation::Cross);
    }

    #[test]
    fn worked_example_diagram() {
        let quiver = q("-+-++");
        let mods = vec![
            t(&quiver, 1, 3, 0),
            t(&quiver, 1, 4, 0),
            t(&quiver, 1, 0, 0),
            t(&quiver, 2, 0, 0),
            t(&quiver, 1, 2, 1),
        ];
        let d = ArcDiagram::new(quiver.clone(), mods.clone());
        assert!(d.is_exceptional().unwrap());
        let order = d.order().unwrap();
        assert!(is_exceptional_sequence(&quiver, &order));
        let mut dup = mods.clone();
        dup[1] = dup[0];
        assert!(matches!(
            ArcDiagram::new(quiver.clone(), dup).is_exceptional(),
            Err(ArcError::Duplicate(_))
        ));
        assert!(matches!(
            ArcDiagram::new(quiver, mods[..4].to_vec()).is_exceptional(),
            Err(ArcError::WrongCount { .. })
        ));
    }

    #[test]
    fn boundary_walk_is_clockwise() {
        let quiver = q("-++");
        let key = |p| boundary_key(&quiver, p);
        assert!(key(1) < key(2));
        assert!(key(3) < key(0));
        assert!(key(5) < key(0));
        assert!(key(0) < key(-3));
    }
}
