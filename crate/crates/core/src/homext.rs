//! Hom and Ext between string modules via graph maps and connections.

use serde::Serialize;

use crate::quiver::{Quiver, Sign};
use crate::string::{Letter, StringModule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Quotient,
    Submodule,
}

/// A substring `[x, y]` (cover positions of the parent module) with its kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factorization {
    pub kind: FactorKind,
    pub x: i64,
    pub y: i64,
}

impl Factorization {
    pub fn len(&self) -> i64 {
        self.y - self.x + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn vertices(&self, q: &Quiver) -> Vec<usize> {
        (self.x..=self.y).map(|m| q.residue(m)).collect()
    }

    fn letters(&self, q: &Quiver) -> Vec<Letter> {
        (self.x..self.y)
            .map(|m| Letter {
                arrow: q.residue(m),
                direct: q.lifted_sign(m) == Sign::Plus,
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchOrientation {
    Direct,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphMap {
    pub source: Factorization,
    pub target: Factorization,
    pub orientation: MatchOrientation,
    pub two_sided: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConnectionShape {
    /// `C1`'s end is joined by the connecting arrow to `C2`'s start.
    EndToStart,
    /// `C2`'s end is joined by the connecting arrow to `C1`'s start.
    StartFromEnd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Connection {
    pub arrow: usize,
    pub shape: ConnectionShape,
}

fn is_quotient(q: &Quiver, m: &StringModule, x: i64, y: i64) -> bool {
    (x == m.start() + 1 || q.lifted_sign(x - 1) == Sign::Minus)
        && (y == m.end() || q.lifted_sign(y) == Sign::Plus)
}

fn is_submodule(q: &Quiver, m: &StringModule, x: i64, y: i64) -> bool {
    (x == m.start() + 1 || q.lifted_sign(x - 1) == Sign::Plus)
        && (y == m.end() || q.lifted_sign(y) == Sign::Minus)
}

/// Every factorization of the given kind, ordered by `(x, y)`.
pub fn factorizations(q: &Quiver, m: &StringModule, kind: FactorKind) -> Vec<Factorization> {
    let (a, b) = m.lift();
    let test = match kind {
        FactorKind::Quotient => is_quotient,
        FactorKind::Submodule => is_submodule,
    };
    let mut out = Vec::new();
    for x in a + 1..=b {
        for y in x..=b {
            if test(q, m, x, y) {
                out.push(Factorization { kind, x, y });
            }
        }
    }
    out
}

fn reversed(vertices: &[usize], letters: &[Letter]) -> (Vec<usize>, Vec<Letter>) {
    let v = vertices.iter().rev().copied().collect();
    let l = letters
        .iter()
        .rev()
        .map(|l| Letter { arrow: l.arrow, direct: !l.direct })
        .collect();
    (v, l)
}

/// Graph maps `M -> N`: quotient factorizations of `M` matched with submodule factorizations of `N`.
pub fn graph_maps(q: &Quiver, m: &StringModule, n: &StringModule) -> Vec<GraphMap> {
    let quotients = factorizations(q, m, FactorKind::Quotient);
    let subs = factorizations(q, n, FactorKind::Submodule);
    let sub_walks: Vec<_> = subs.iter().map(|s| (s.vertices(q), s.letters(q))).collect();
    let mut out = Vec::new();
    for e1 in &quotients {
        let v1 = e1.vertices(q);
        let l1 = e1.letters(q);
        let (rv1, rl1) = reversed(&v1, &l1);
        for (e2, (v2, l2)) in subs.iter().zip(&sub_walks) {
            if e1.len() != e2.len() {
                continue;
            }
            let orientation = if v1 == *v2 && l1 == *l2 {
                MatchOrientation::Direct
            } else if rv1 == *v2 && rl1 == *l2 {
                MatchOrientation::Inverse
            } else {
                continue;
            };
            let (f1, d1) = (e1.x > m.start() + 1, e1.y < m.end());
            let (f2, d2) = (e2.x > n.start() + 1, e2.y < n.end());
            out.push(GraphMap {
                source: *e1,
                target: *e2,
                orientation,
                two_sided: (d1 || d2) && (f1 || f2),
            });
        }
    }
    out
}

pub fn dim_hom(q: &Quiver, m: &StringModule, n: &StringModule) -> usize {
    graph_maps(q, m, n).len()
}

/// Ways of joining `M` and `N` by one arrow into a longer string, one per arrow.
pub fn connections(q: &Quiver, m: &StringModule, n: &StringModule) -> Vec<Connection> {
    let mut out = Vec::new();
    let len = q.n() as i64;
    if q.lifted_sign(m.end()) == Sign::Plus && (n.start() - m.end()).rem_euclid(len) == 0 {
        out.push(Connection {
            arrow: q.residue(m.end()),
            shape: ConnectionShape::EndToStart,
        });
    }
    if q.lifted_sign(n.end()) == Sign::Minus && (m.start() - n.end()).rem_euclid(len) == 0 {
        let arrow = q.residue(n.end());
        if !out.iter().any(|c| c.arrow == arrow) {
            out.push(Connection {
                arrow,
                shape: ConnectionShape::StartFromEnd,
            });
        }
    }
    out
}

/// The string obtained by gluing `M` and `N` along a connection.
pub fn connected_string(q: &Quiver, m: &StringModule, n: &StringModule, c: &Connection) -> StringModule {
    let (first, second) = match c.shape {
        ConnectionShape::EndToStart => (m, n),
        ConnectionShape::StartFromEnd => (n, m),
    };
    StringModule::from_lift(q, first.start(), first.end() + second.len())
        .expect("gluing two nonempty strings")
}

pub fn dim_ext(q: &Quiver, m: &StringModule, n: &StringModule) -> usize {
    connections(q, m, n).len() + graph_maps(q, n, m).iter().filter(|g| g.two_sided).count()
}

/// `(U, V)` is an exceptional pair: `Hom(V, U) = 0` and `Ext(V, U) = 0`.
pub fn is_exceptional_pair(q: &Quiver, u: &StringModule, v: &StringModule) -> bool {
    dim_hom(q, v, u) == 0 && dim_ext(q, v, u) == 0
}

/// `<d1, d2> = sum_v d1(v) d2(v) - sum_{s->t} d1(s) d2(t)`.
pub fn euler_form(q: &Quiver, d1: &[u32], d2: &[u32]) -> i64 {
    let mut total: i64 = d1.iter().zip(d2).map(|(a, b)| (*a as i64) * (*b as i64)).sum();
    for arrow in q.arrows() {
        total -= d1[arrow.source] as i64 * d2[arrow.target] as i64;
    }
    total
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
    fn submodules_of_projective() {
        let quiver = q("-++");
        let p1 = t(&quiver, 2, 0, 1);
        let point_subs: Vec<_> = factorizations(&quiver, &p1, FactorKind::Submodule)
            .into_iter()
            .filter(|f| f.len() == 1 && quiver.residue(f.x) == 0)
            .collect();
        assert_eq!(point_subs.len(), 2);
    }

    #[test]
    fn hom_examples() {
        let quiver = q("-++");
        let s0 = t(&quiver, 2, 0, 0);
        let p1 = t(&quiver, 2, 0, 1);
        assert_eq!(graph_maps(&quiver, &s0, &p1).len(), 2);
        assert!(graph_maps(&quiver, &t(&quiver, 0, 1, 0), &t(&quiver, 1, 2, 0)).is_empty());
        for m in StringModule::all_up_to(&quiver, 7) {
            assert!(dim_hom(&quiver, &m, &m) >= 1);
        }
    }

    #[test]
    fn ext_examples() {
        let quiver = q("-++");
        let s1 = t(&quiver, 0, 1, 0);
        let s2 = t(&quiver, 1, 2, 0);
        let c = connections(&quiver, &s1, &s2);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].arrow, 1);
        assert_eq!(connected_string(&quiver, &s1, &s2, &c[0]), t(&quiver, 0, 2, 0));
        assert!(connections(&quiver, &t(&quiver, 2, 0, 0), &s1).is_empty());
        assert_eq!(dim_ext(&quiver, &s1, &s2), 1);
    }

    #[test]
    fn kronecker_simples() {
        let k = q("-+");
        let s0 = StringModule::simple(&k, 0).unwrap();
        let s1 = StringModule::simple(&k, 1).unwrap();
        assert_eq!(dim_ext(&k, &s1, &s0), 2);
        assert_eq!(dim_ext(&k, &s0, &s1), 0);
        assert!(is_exceptional_pair(&k, &s1, &s0));
        assert!(!is_exceptional_pair(&k, &s0, &s1));
    }

    #[test]
    fn euler_of_simples() {
        let quiver = q("-++");
        let e = |v: usize| {
            let mut d = vec![0; 3];
            d[v] = 1;
            d
        };
        assert_eq!(euler_form(&quiver, &e(1), &e(0)), -1);
        assert_eq!(euler_form(&quiver, &e(0), &e(1)), 0);
        assert_eq!(euler_form(&quiver, &e(2), &e(2)), 1);
    }
}
