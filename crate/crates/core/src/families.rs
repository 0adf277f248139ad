//! Dehn twists, elementary boundary twists, small diagrams and families.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arcs::{arc_of, relation_algebraic, ArcDiagram, ArcError, PairRelation};
use crate::exec::Execution;
use crate::quiver::{Boundary, Quiver, Sign};
use crate::string::{StringClass, StringModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("collection is not exceptional")]
    NotExceptional,
    #[error("module {0} is projective, so its translate is not a module")]
    Projective(String),
    #[error("shift {shift} is not allowed for {module}")]
    BadShift { module: String, shift: i8 },
    #[error("module {0} is regular and does not lie in the transjective component")]
    Regular(String),
    #[error("twisting did not reach a small diagram")]
    NotReducible,
    #[error(transparent)]
    Arc(#[from] ArcError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwistDirection {
    Cw,
    Ccw,
}

impl TwistDirection {
    pub fn inverse(self) -> TwistDirection {
        match self {
            TwistDirection::Cw => TwistDirection::Ccw,
            TwistDirection::Ccw => TwistDirection::Cw,
        }
    }
}

fn move_endpoints(q: &Quiver, m: &StringModule, on: Boundary, step: impl Fn(i64) -> i64) -> StringModule {
    let (a, b) = m.lift();
    let mv = |p: i64| if q.boundary_at(p) == on { step(p) } else { p };
    let (a2, b2) = (mv(a), mv(b));
    StringModule::from_lift(q, a2.min(b2), a2.max(b2)).expect("endpoints stay distinct")
}

/// Full turn of the inner boundary, acting on a single arc.
pub fn dehn_twist_module(q: &Quiver, m: &StringModule, dir: TwistDirection) -> StringModule {
    let shift = match dir {
        TwistDirection::Cw => q.n() as i64,
        TwistDirection::Ccw => -(q.n() as i64),
    };
    move_endpoints(q, m, Boundary::Inner, |p| p + shift)
}

pub fn dehn_twist(d: &ArcDiagram, dir: TwistDirection) -> ArcDiagram {
    ArcDiagram::new(
        d.quiver.clone(),
        d.modules.iter().map(|m| dehn_twist_module(&d.quiver, m, dir)).collect(),
    )
}

/// `z` clockwise Dehn twists (counterclockwise for negative `z`).
pub fn dehn_twist_times(d: &ArcDiagram, z: i64) -> ArcDiagram {
    let dir = if z >= 0 { TwistDirection::Cw } else { TwistDirection::Ccw };
    let mut out = d.clone();
    for _ in 0..z.unsigned_abs() {
        out = dehn_twist(&out, dir);
    }
    out
}

/// Moves the endpoints on `boundary` to the neighbouring marked point of that boundary.
pub fn elementary_twist(q: &Quiver, m: &StringModule, boundary: Boundary, dir: TwistDirection) -> StringModule {
    let s: Sign = boundary.sign();
    match dir {
        TwistDirection::Cw => move_endpoints(q, m, boundary, |p| q.next_with(p, s)),
        TwistDirection::Ccw => move_endpoints(q, m, boundary, |p| q.prev_with(p, s)),
    }
}

/// Outer clockwise twist followed by inner counterclockwise twist.
pub fn tau_twist(q: &Quiver, m: &StringModule) -> StringModule {
    let outer = elementary_twist(q, m, Boundary::Outer, TwistDirection::Cw);
    elementary_twist(q, &outer, Boundary::Inner, TwistDirection::Ccw)
}

pub fn tau_collection(q: &Quiver, members: &[StringModule]) -> Result<Vec<StringModule>, FamilyError> {
    members
        .iter()
        .map(|m| {
            if m.is_projective(q) {
                Err(FamilyError::Projective(m.label(q)))
            } else {
                Ok(tau_twist(q, m))
            }
        })
        .collect()
}

/// An object of the transjective component: a preprojective, or a shifted preinjective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransjectiveObject {
    pub module: StringModule,
    pub shift: i8,
}

impl TransjectiveObject {
    pub fn new(q: &Quiver, module: StringModule, shift: i8) -> Result<TransjectiveObject, FamilyError> {
        let class = module.classify(q);
        if class.is_regular() {
            return Err(FamilyError::Regular(module.label(q)));
        }
        let expected = if class == StringClass::Preinjective { -1 } else { 0 };
        if shift != expected {
            return Err(FamilyError::BadShift { module: module.label(q), shift });
        }
        Ok(TransjectiveObject { module, shift })
    }

    /// Places a bridging module in the component with the shift its class forces.
    pub fn of(q: &Quiver, module: StringModule) -> Result<TransjectiveObject, FamilyError> {
        let shift = if module.classify(q) == StringClass::Preinjective { -1 } else { 0 };
        TransjectiveObject::new(q, module, shift)
    }
}

pub fn tau_transjective(q: &Quiver, t: &TransjectiveObject) -> TransjectiveObject {
    TransjectiveObject::of(q, tau_twist(q, &t.module)).expect("twists keep bridging arcs bridging")
}

/// `z` inner clockwise elementary twists, rolling projectives over to shifted injectives.
pub fn coray_shift(q: &Quiver, t: &TransjectiveObject, z: i64) -> TransjectiveObject {
    let dir = if z >= 0 { TwistDirection::Cw } else { TwistDirection::Ccw };
    let mut m = t.module;
    for _ in 0..z.unsigned_abs() {
        m = elementary_twist(q, &m, Boundary::Inner, dir);
    }
    TransjectiveObject::of(q, m).expect("twists keep bridging arcs bridging")
}

/// Position of a bridging arc in the twist orbit: clockwise twists raise it by one.
pub fn winding_level(q: &Quiver, m: &StringModule) -> Option<i64> {
    let (_, _, l) = m.triple(q);
    match m.classify(q) {
        StringClass::Preprojective => Some(l as i64),
        StringClass::Preinjective => Some(-(l as i64) - 1),
        _ => None,
    }
}

pub fn is_small(d: &ArcDiagram) -> bool {
    d.arcs().iter().all(|a| a.lambda == 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub canonical: ArcDiagram,
    pub z: i64,
}

/// Small representative of the twist orbit together with the twist count reaching `d`.
pub fn canonical_small(d: &ArcDiagram) -> Result<Family, FamilyError> {
    if !d.is_exceptional()? {
        return Err(FamilyError::NotExceptional);
    }
    canonical_small_unchecked(d)
}

fn canonical_small_unchecked(d: &ArcDiagram) -> Result<Family, FamilyError> {
    let z = d
        .modules
        .iter()
        .filter_map(|m| winding_level(&d.quiver, m))
        .max()
        .unwrap_or(0);
    let canonical = dehn_twist_times(d, -z).sorted();
    if !is_small(&canonical) {
        return Err(FamilyError::NotReducible);
    }
    Ok(Family { canonical, z })
}

/// Twist offset from `a` to `b` when both lie in one family.
pub fn same_family(a: &ArcDiagram, b: &ArcDiagram) -> Result<Option<i64>, FamilyError> {
    let fa = canonical_small(a)?;
    let fb = canonical_small(b)?;
    Ok((fa.canonical == fb.canonical).then_some(fb.z - fa.z))
}

fn candidate_key(q: &Quiver, m: &StringModule) -> (crate::arcs::ArcKind, usize, usize, i64) {
    let a = arc_of(q, m);
    (a.kind(q), a.i, a.j, a.lambda)
}

fn acyclic(rel: &[Vec<PairRelation>], chosen: &[usize]) -> bool {
    let k = chosen.len();
    let mut indeg = vec![0usize; k];
    for a in 0..k {
        for b in 0..k {
            if a != b && rel[chosen[a]][chosen[b]] == PairRelation::Cw {
                indeg[b] += 1;
            }
        }
    }
    let mut stack: Vec<usize> = (0..k).filter(|&a| indeg[a] == 0).collect();
    let mut seen = 0;
    while let Some(a) = stack.pop() {
        seen += 1;
        for b in 0..k {
            if a != b && rel[chosen[a]][chosen[b]] == PairRelation::Cw {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    stack.push(b);
                }
            }
        }
    }
    seen == k
}

fn extend(
    rel: &[Vec<PairRelation>],
    target: usize,
    chosen: &mut Vec<usize>,
    next: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == target {
        if acyclic(rel, chosen) {
            out.push(chosen.clone());
        }
        return;
    }
    let m = rel.len();
    for c in next..m {
        if m - c < target - chosen.len() {
            break;
        }
        if chosen.iter().all(|&a| rel[a][c].is_compatible()) {
            chosen.push(c);
            extend(rel, target, chosen, c + 1, out);
            chosen.pop();
        }
    }
}

/// All complete exceptional diagrams drawn from `candidates`.
pub fn enumerate_from(q: &Quiver, mut candidates: Vec<StringModule>, exec: Execution) -> Vec<ArcDiagram> {
    candidates.sort_by_key(|m| candidate_key(q, m));
    candidates.dedup();
    let m = candidates.len();
    let rows: Vec<usize> = (0..m).collect();
    let rel: Vec<Vec<PairRelation>> = exec.map(&rows, |&a| {
        (0..m)
            .map(|b| {
                if a == b {
                    PairRelation::Disjoint
                } else {
                    relation_algebraic(q, &candidates[a], &candidates[b]).expect("candidates are exceptional")
                }
            })
            .collect()
    });
    let target = q.n();
    let found: Vec<Vec<Vec<usize>>> = exec.map(&rows, |&first| {
        let mut out = Vec::new();
        let mut chosen = vec![first];
        extend(&rel, target, &mut chosen, first + 1, &mut out);
        out
    });
    found
        .into_iter()
        .flatten()
        .map(|idx| ArcDiagram::new(q.clone(), idx.iter().map(|&a| candidates[a]).collect()))
        .collect()
}

/// Exceptional modules whose arcs have winding at most `lambda_max` in absolute value.
pub fn exceptional_candidates(q: &Quiver, lambda_max: u32) -> Vec<StringModule> {
    let n = q.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..=lambda_max {
                if let Ok(m) = StringModule::from_triple(q, i, j, l) {
                    if m.is_exceptional(q) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

pub fn enumerate_small_diagrams(q: &Quiver, exec: Execution) -> Vec<ArcDiagram> {
    enumerate_from(q, exceptional_candidates(q, 0), exec)
}

pub fn enumerate_collections(q: &Quiver, lambda_max: u32, exec: Execution) -> Vec<ArcDiagram> {
    enumerate_from(q, exceptional_candidates(q, lambda_max), exec)
}

/// Number of twist orbits meeting the given small diagrams.
pub fn count_orbits(small: &[ArcDiagram]) -> usize {
    let keys: HashSet<Vec<StringModule>> = small.iter().map(|d| d.sorted().modules).collect();
    let linked = small
        .iter()
        .filter(|d| {
            let t = dehn_twist(d, TwistDirection::Cw).sorted();
            t.modules != d.sorted().modules && keys.contains(&t.modules)
        })
        .count();
    keys.len() - linked
}

pub fn count_families(q: &Quiver, exec: Execution) -> usize {
    count_orbits(&enumerate_small_diagrams(q, exec))
}

/// Canonical small diagrams, one per family, in sorted order.
pub fn family_representatives(q: &Quiver, exec: Execution) -> Result<Vec<ArcDiagram>, FamilyError> {
    let small = enumerate_small_diagrams(q, exec);
    let mut reps = BTreeSet::new();
    for d in &small {
        reps.insert(canonical_small_unchecked(d)?.canonical.modules);
    }
    Ok(reps.into_iter().map(|m| ArcDiagram::new(q.clone(), m)).collect())
}
