//! Level-by-level comparison of the two independently constructed rings:
//! the cokernel of the twisted Mayer-Vietoris map at twist `m = k + 2`,
//! with basis the residual classes `[X0], ..., [X(k)]`, against the level-k
//! fusion ring on labels `0 ..= k`. A level passes when the map is
//! injective, the odd-degree part vanishes, the ranks agree, and every
//! structure constant matches under the identification `[X(a)] <-> a`.

use crate::fusion::FusionRing;
use crate::twisted_k::{MvMap, Twist};
use alloc::vec::Vec;
use core::fmt;

/// One disagreeing structure constant: the product `a * b` has coefficient
/// `twisted` on basis element `c` on the K-theory side and `fusion` on the
/// fusion side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub twisted: i64,
    pub fusion: i64,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N[{},{}]^{}: twisted K gives {}, fusion gives {}",
            self.a, self.b, self.c, self.twisted, self.fusion
        )
    }
}

/// Outcome of checking one level. `verdict` is true only when every other
/// field reports agreement; the report never panics into existence, so a
/// failing level shows up as data rather than a crash.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub k: u32,
    pub m: u32,
    pub map_injective: bool,
    pub k1_vanishes: bool,
    pub rank_match: bool,
    pub mismatches: Vec<Mismatch>,
    pub verdict: bool,
}

impl TheoremReport {
    pub fn status_word(&self) -> &'static str {
        if self.verdict {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} m={} rank {} of {}: {}",
            self.k,
            self.m,
            if self.rank_match { "match" } else { "MISMATCH" },
            self.k as usize + 1,
            self.status_word()
        )
    }
}

/// Verifies the isomorphism at a single level `k >= 0` (twist `m = k + 2`).
pub fn verify_level(k: u32) -> TheoremReport {
    let m = k + 2;
    let mv = MvMap::new(Twist::new(m));
    let map_injective = mv.certify_injective().is_ok();
    let quotient = mv.cokernel();
    let fusion = FusionRing::new(k);

    let k1_vanishes = quotient.k1_rank() == 0;
    let rank_match = quotient.rank() == fusion.rank();

    let mut mismatches = Vec::new();
    if rank_match {
        let r = fusion.rank() as u32;
        for a in 0..r {
            for b in a..r {
                for c in 0..r {
                    let twisted = quotient.structure_constant(a as usize, b as usize, c as usize);
                    let expected = fusion.coeff(a, b, c);
                    if twisted != expected {
                        mismatches.push(Mismatch {
                            a,
                            b,
                            c,
                            twisted,
                            fusion: expected,
                        });
                    }
                }
            }
        }
    }

    let verdict = map_injective && k1_vanishes && rank_match && mismatches.is_empty();
    TheoremReport {
        k,
        m,
        map_injective,
        k1_vanishes,
        rank_match,
        mismatches,
        verdict,
    }
}

/// Verifies all levels `0 ..= max_level` and returns one report per level.
pub fn verify_range(max_level: u32) -> Vec<TheoremReport> {
    (0..=max_level).map(verify_level).collect()
}
