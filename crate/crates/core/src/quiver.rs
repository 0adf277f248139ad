//! Orientations of the cyclic quiver with `n` vertices.
//!
//! Vertex `v` and `v + 1 (mod n)` are joined by the arrow with index `v`.
//! A `+` at `v` means the arrow points `v -> v+1`, a `-` means `v+1 -> v`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("a quiver needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("declared {declared} vertices but the orientation has {given} signs")]
    LengthMismatch { declared: usize, given: usize },
    #[error("orientation must contain both signs (cyclically oriented quivers are excluded)")]
    NotAcyclic,
    #[error("vertex {vertex} out of range for a quiver with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid orientation character {0:?}")]
    BadSign(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Result<Sign, QuiverError> {
        match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            other => Err(QuiverError::BadSign(other)),
        }
    }
}

/// Which boundary component of the annulus a marked point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Inner,
    Outer,
}

impl Boundary {
    /// The sign carried by vertices whose marked point sits on this boundary.
    pub fn sign(self) -> Sign {
        match self {
            Boundary::Outer => Sign::Plus,
            Boundary::Inner => Sign::Minus,
        }
    }

    pub fn of_sign(s: Sign) -> Boundary {
        match s {
            Sign::Plus => Boundary::Outer,
            Sign::Minus => Boundary::Inner,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    pub index: usize,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuiverRepr", into = "QuiverRepr")]
pub struct Quiver {
    epsilon: Vec<Sign>,
}

#[derive(Serialize, Deserialize)]
struct QuiverRepr {
    n: usize,
    epsilon: Vec<Sign>,
}

impl TryFrom<QuiverRepr> for Quiver {
    type Error = QuiverError;
    fn try_from(r: QuiverRepr) -> Result<Self, Self::Error> {
        Quiver::with_size(r.n, r.epsilon)
    }
}

impl From<Quiver> for QuiverRepr {
    fn from(q: Quiver) -> Self {
        QuiverRepr {
            n: q.n(),
            epsilon: q.epsilon,
        }
    }
}

impl Quiver {
    pub fn new(epsilon: Vec<Sign>) -> Result<Quiver, QuiverError> {
        if epsilon.len() < 2 {
            return Err(QuiverError::TooSmall(epsilon.len()));
        }
        if !epsilon.contains(&Sign::Plus) || !epsilon.contains(&Sign::Minus) {
            return Err(QuiverError::NotAcyclic);
        }
        Ok(Quiver { epsilon })
    }

    pub fn with_size(n: usize, epsilon: Vec<Sign>) -> Result<Quiver, QuiverError> {
        if n < 2 {
            return Err(QuiverError::TooSmall(n));
        }
        if epsilon.len() != n {
            return Err(QuiverError::LengthMismatch {
                declared: n,
                given: epsilon.len(),
            });
        }
        Quiver::new(epsilon)
    }

    pub fn n(&self) -> usize {
        self.epsilon.len()
    }

    pub fn epsilon(&self) -> &[Sign] {
        &self.epsilon
    }

    pub fn sign(&self, v: usize) -> Sign {
        self.epsilon[v % self.n()]
    }

    /// Sign at a position of the universal cover (positions are integers, period `n`).
    #[inline]
    pub fn lifted_sign(&self, pos: i64) -> Sign {
        self.epsilon[self.residue(pos)]
    }

    #[inline]
    pub fn residue(&self, pos: i64) -> usize {
        pos.rem_euclid(self.n() as i64) as usize
    }

    pub fn boundary_of_vertex(&self, v: usize) -> Result<Boundary, QuiverError> {
        if v >= self.n() {
            return Err(QuiverError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(Boundary::of_sign(self.epsilon[v]))
    }

    #[inline]
    pub fn boundary_at(&self, pos: i64) -> Boundary {
        Boundary::of_sign(self.lifted_sign(pos))
    }

    pub fn arrow(&self, index: usize) -> Arrow {
        let n = self.n();
        let (a, b) = (index % n, (index + 1) % n);
        match self.epsilon[index % n] {
            Sign::Plus => Arrow { index, source: a, target: b },
            Sign::Minus => Arrow { index, source: b, target: a },
        }
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        (0..self.n()).map(|i| self.arrow(i)).collect()
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            epsilon: self.epsilon.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Number of marked points on the outer boundary.
    pub fn outer_count(&self) -> usize {
        self.epsilon.iter().filter(|&&s| s == Sign::Plus).count()
    }

    /// Number of marked points on the inner boundary.
    pub fn inner_count(&self) -> usize {
        self.epsilon.iter().filter(|&&s| s == Sign::Minus).count()
    }

    pub fn count_on(&self, b: Boundary) -> usize {
        match b {
            Boundary::Outer => self.outer_count(),
            Boundary::Inner => self.inner_count(),
        }
    }

    /// Smallest position strictly greater than `pos` carrying sign `s`.
    #[inline]
    pub fn next_with(&self, pos: i64, s: Sign) -> i64 {
        let mut m = pos + 1;
        while self.lifted_sign(m) != s {
            m += 1;
        }
        m
    }

    /// Largest position strictly smaller than `pos` carrying sign `s`.
    #[inline]
    pub fn prev_with(&self, pos: i64, s: Sign) -> i64 {
        let mut m = pos - 1;
        while self.lifted_sign(m) != s {
            m -= 1;
        }
        m
    }

    /// Every orientation with `n` vertices that has both signs, in lexicographic order.
    pub fn all(n: usize) -> Vec<Quiver> {
        assert!((2..63).contains(&n));
        (0u64..(1u64 << n))
            .filter_map(|bits| {
                let eps = (0..n)
                    .map(|v| if bits >> (n - 1 - v) & 1 == 1 { Sign::Minus } else { Sign::Plus })
                    .collect();
                Quiver::new(eps).ok()
            })
            .collect()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.epsilon {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Quiver {
    type Err = QuiverError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let eps = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(Sign::from_char)
            .collect::<Result<Vec<_>, _>>()?;
        Quiver::new(eps)
    }
}
