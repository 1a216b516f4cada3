//! Holomorphic induction (Borel-Weil) from the torus character ring to the
//! representation ring of SU(2).
//!
//! A torus weight determines a line bundle over the flag variety CP^1; the
//! induced virtual representation is the alternating sum of its sheaf
//! cohomology. On characters this collapses to a closed three-case rule,
//! which is the implementation here. The divided-difference form
//! `(a^(n+1) - a^(-n-1)) / (a - a^-1)` is kept out of the engine and used
//! only as an independent test oracle.

use crate::laurent::LaurentPoly;
use crate::rep_ring::RepRingElem;

/// Induction of the single weight `a^n`:
///
/// * `n >= 0`  maps to `X<n>`,
/// * `n == -1` maps to `0`,
/// * `n <= -2` maps to `-X<-n-2>`.
pub fn induce_monomial(n: i64) -> RepRingElem {
    if n >= 0 {
        let w = u32::try_from(n).expect("weight exceeds u32 range");
        RepRingElem::irreducible(w)
    } else if n == -1 {
        RepRingElem::zero()
    } else {
        let w = u32::try_from(-(n + 2)).expect("weight exceeds u32 range");
        -&RepRingElem::irreducible(w)
    }
}

/// Linear extension of [`induce_monomial`] to all of `Z[a, a^-1]`.
pub fn induce(p: &LaurentPoly) -> RepRingElem {
    p.terms()
        .map(|(e, c)| &induce_monomial(e) * c)
        .fold(RepRingElem::zero(), |acc, x| &acc + &x)
}
