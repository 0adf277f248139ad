#![allow(dead_code)]

use atilde_core::arcs::{boundary_key, Strand};
use atilde_core::{Quiver, StringModule};
use std::io::Write;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn quiver(s: &str) -> Quiver {
    s.parse().unwrap()
}

pub fn triple(q: &Quiver, i: usize, j: usize, l: u32) -> StringModule {
    StringModule::from_triple(q, i, j, l).unwrap()
}

/// Every proper orientation with `2 <= n <= max_n`.
pub fn orientations(max_n: usize) -> Vec<Quiver> {
    (2..=max_n).flat_map(Quiver::all).collect()
}

/// All strings of length at most `4n`.
pub fn strings(q: &Quiver) -> Vec<StringModule> {
    StringModule::all_up_to(q, 4 * q.n() as i64)
}

/// Exceptional strings of length at most `4n` whose arcs wind at most three times.
pub fn exceptional_corpus(q: &Quiver) -> Vec<StringModule> {
    strings(q)
        .into_iter()
        .filter(|m| m.is_exceptional(q) && m.triple(q).2 <= 3)
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_quiver(rng: &mut ChaCha8Rng, n: usize) -> Quiver {
    let all = Quiver::all(n);
    all[rng.gen_range(0..all.len())].clone()
}

pub fn random_exceptional(rng: &mut ChaCha8Rng, q: &Quiver) -> StringModule {
    let corpus = exceptional_corpus(q);
    corpus[rng.gen_range(0..corpus.len())]
}

/// Crossing read off the clockwise boundary order: four distinct endpoints, interleaved.
pub fn interleaved(q: &Quiver, x: &Strand, y: &Strand) -> bool {
    let ends = [x.start, x.end, y.start, y.end];
    for a in 0..4 {
        for b in a + 1..4 {
            if ends[a] == ends[b] {
                return false;
            }
        }
    }
    let (lo, hi) = {
        let (p, r) = (boundary_key(q, x.start), boundary_key(q, x.end));
        if p < r { (p, r) } else { (r, p) }
    };
    let inside = |pos: i64| {
        let k = boundary_key(q, pos);
        lo < k && k < hi
    };
    inside(y.start) != inside(y.end)
}

/// Collects mismatches and prints one acceptance line.
pub struct Tally {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn new(name: &'static str) -> Tally {
        Tally { name, checked: 0, failures: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn finish(self, extra: &str) {
        let status = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        // written to the raw handle so the line survives test output capture
        let mut err = std::io::stderr().lock();
        let _ = writeln!(
            err,
            "[{status}] {}: {} checked, {} mismatches{}{}",
            self.name,
            self.checked,
            self.failures.len(),
            if extra.is_empty() { "" } else { "; " },
            extra
        );
        for f in self.failures.iter().take(8) {
            let _ = writeln!(err, "       {f}");
        }
        assert!(self.failures.is_empty(), "{} failed with {} mismatches", self.name, self.failures.len());
    }
}
