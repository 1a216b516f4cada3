//! Mayer-Vietoris computation of the twisted equivariant K-theory of SU(2)
//! acting on itself by conjugation.
//!
//! Covering the group by the invariant open sets missing -1 and +1, the
//! connecting pushforward of the Mayer-Vietoris sequence is holomorphic
//! induction twisted by `a^m` on one side. This module assembles that map
//! from [`crate::induction`], certifies injectivity (vanishing of the odd
//! K-group) by a nonzero determinant over the integral domain `R(SU2)`, and
//! presents the cokernel (the even K-group) as a quotient ring with explicit
//! integer structure constants.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::induction::induce;
use crate::laurent::LaurentPoly;
use crate::rep_ring::RepRingElem;

/// Degree in which the dual K-cohomology is nonzero: the dimension of SU(2).
/// Pure metadata; the computation itself is the degree-zero homology sequence.
pub const COHOMOLOGICAL_DEGREE: u32 = 3;

/// A twisting class: `m` times the generator of the rank-one third
/// equivariant cohomology group of the conjugation action. The associated
/// level is `k = m - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Twist {
    m: u32,
}

impl Twist {
    /// Panics if `m == 0`; the twisting multiple must be at least 1.
    pub fn new(m: u32) -> Self {
        assert!(m >= 1, "twist multiple must be >= 1");
        Self { m }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// The level `k = m - 2` (meaningful for `m >= 2`, hence may be -1).
    pub fn level(&self) -> i64 {
        i64::from(self.m) - 2
    }
}

/// The Mayer-Vietoris pushforward as a 2x2 matrix over `R(SU2)`.
///
/// Rows are indexed by the module generators `1` and `a^-1` of the torus
/// character ring; columns by the two cover components. Row `i` holds the
/// image `(ind(rho), ind(a^m * rho))` of generator `rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvMap {
    twist: Twist,
    entries: [[RepRingElem; 2]; 2],
}

/// Error from [`MvMap::certify_injective`]: the determinant vanished, so
/// injectivity (and with it vanishing of the odd K-group) cannot be
/// certified. Unreachable for maps built by [`MvMap::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularMapError {
    pub m: u32,
}

impl fmt::Display for SingularMapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Mayer-Vietoris pushforward at twist m = {} has zero determinant",
            self.m
        )
    }
}

impl core::error::Error for SingularMapError {}

impl MvMap {
    /// Computes the images of the generators `1` and `a^-1` under
    /// `rho -> (ind(rho), ind(a^m * rho))`. Every entry goes through the
    /// induction engine; nothing is filled in from the known closed form.
    pub fn new(twist: Twist) -> Self {
        let m = i64::from(twist.m);
        let generators = [LaurentPoly::one(), LaurentPoly::monomial(-1)];
        let twisting = LaurentPoly::monomial(m);
        let entries = generators.map(|rho| [induce(&rho), induce(&(&twisting * &rho))]);
        Self { twist, entries }
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn m(&self) -> u32 {
        self.twist.m
    }

    /// Entry in row `i` (generator index) and column `j` (cover component).
    pub fn entry(&self, i: usize, j: usize) -> &RepRingElem {
        &self.entries[i][j]
    }

    /// Determinant over `R(SU2)`, with the row order fixed above: works out
    /// to `+X<m-1>` (and `X0` at `m = 1`).
    pub fn determinant(&self) -> RepRingElem {
        let ad = self.entry(0, 0) * self.entry(1, 1);
        let bc = self.entry(0, 1) * self.entry(1, 0);
        &ad - &bc
    }

    /// Certifies injectivity of the pushforward: a square matrix over an
    /// integral domain is injective iff its determinant is nonzero. Returns
    /// the determinant as the certificate.
    pub fn certify_injective(&self) -> Result<RepRingElem, SingularMapError> {
        let det = self.determinant();
        if det.is_zero() {
            Err(SingularMapError { m: self.twist.m })
        } else {
            Ok(det)
        }
    }

    /// Presents the cokernel as a quotient of `R(SU2)` by eliminating the
    /// unit pivot, then tabulates the structure constants of the quotient
    /// ring on the residue classes `[X0] .. [X<m-2>]`.
    pub fn cokernel(&self) -> QuotientPresentation {
        let unit = RepRingElem::one();
        let neg_unit = -&unit;
        let pivot = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .find_map(|(i, j)| {
                let e = self.entry(i, j);
                if *e == unit {
                    Some((i, j, 1))
                } else if *e == neg_unit {
                    Some((i, j, -1))
                } else {
                    None
                }
            });
        let (i, j, sign) = pivot.expect("pushforward matrix has no unit entry");

        // Row and column elimination against the unit pivot leaves a 1x1
        // presentation: the Schur complement generates the relation ideal.
        let complement = self.entry(1 - i, 1 - j);
        let correction = &(self.entry(1 - i, j) * self.entry(i, 1 - j)) * i64::from(sign);
        let schur = complement - &correction;
        let relation = match schur.coeffs().last() {
            Some((_, c)) if c < 0 => -&schur,
            _ => schur,
        };

        let expected = RepRingElem::irreducible(self.twist.m - 1);
        assert!(
            relation == expected,
            "cokernel relation differs from X<m-1> at m = {}",
            self.twist.m
        );

        let k1_rank = u32::from(self.determinant().is_zero());
        QuotientPresentation::build(self.twist.m, relation, k1_rank)
    }
}

/// The even twisted K-group presented as `R(SU2) / <X<m-1>>`: a free abelian
/// group on the residue classes of `X0 .. X<m-2>` together with the rank-3
/// structure-constant tensor of its ring structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    m: u32,
    relation: RepRingElem,
    basis: Vec<u32>,
    structure_constants: Vec<i64>,
    k1_rank: u32,
}

impl QuotientPresentation {
    fn build(m: u32, relation: RepRingElem, k1_rank: u32) -> Self {
        let rank = relation
            .max_weight()
            .expect("relation is a nonzero character") as usize;
        let basis = (0..rank as u32).collect();
        let mut out = Self {
            m,
            relation,
            basis,
            structure_constants: Vec::new(),
            k1_rank,
        };
        let mut tensor = vec![0i64; rank * rank * rank];
        for a in 0..rank {
            for b in a..rank {
                let products = out.quotient_mul(a, b);
                for (c, &value) in products.iter().enumerate() {
                    tensor[(a * rank + b) * rank + c] = value;
                    tensor[(b * rank + a) * rank + c] = value;
                }
            }
        }
        out.structure_constants = tensor;
        out
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn level(&self) -> i64 {
        i64::from(self.m) - 2
    }

    /// The free rank of the quotient: `m - 1`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The generator of the relation ideal, `X<m-1>`.
    pub fn relation(&self) -> &RepRingElem {
        &self.relation
    }

    /// Residue-class labels `0 ..= m-2` (highest weights of the basis).
    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn k1_rank(&self) -> u32 {
        self.k1_rank
    }

    pub fn degree(&self) -> u32 {
        COHOMOLOGICAL_DEGREE
    }

    /// The coefficient of `[X<c>]` in `[X<a>] * [X<b>]`.
    pub fn structure_constant(&self, a: usize, b: usize, c: usize) -> i64 {
        let r = self.rank();
        assert!(a < r && b < r && c < r, "basis index out of range");
        self.structure_constants[(a * r + b) * r + c]
    }

    /// Multiplies two residue classes: computes `X<a> * X<b>` in `R(SU2)`
    /// and rewrites it into the residue basis with [`Self::reduce`].
    ///
    /// Panics if `a` or `b` is not a basis index.
    pub fn quotient_mul(&self, a: usize, b: usize) -> Vec<i64> {
        let r = self.rank();
        assert!(a < r && b < r, "basis index out of range");
        let product = &RepRingElem::irreducible(a as u32) * &RepRingElem::irreducible(b as u32);
        self.reduce(&product)
    }

    /// Rewrites an arbitrary element of `R(SU2)` into the residue basis,
    /// using the reflection rule that the three-term recursion
    /// `X<n> = X1 * X<n-1> - X<n-2>` forces once `X<m-1>` is set to zero:
    ///
    /// * `X<m-1>`          drops,
    /// * `X<m-1+j>`        rewrites to `-X<m-1-j>`,
    /// * `X<-1>`           drops and `X<-n-2>` rewrites to `-X<n>`
    ///
    /// iterated until every weight lies in `0 ..= m-2`.
    pub fn reduce(&self, x: &RepRingElem) -> Vec<i64> {
        let r = self.rank();
        let mut out = vec![0i64; r];
        for (n, c) in x.coeffs() {
            if let Some((w, sign)) = reduce_weight(i64::from(n), i64::from(self.m)) {
                let slot = &mut out[w];
                *slot = slot
                    .checked_add(sign * c)
                    .expect("structure constant overflow");
            }
        }
        out
    }
}

/// Normalizes a single character label into the residue window `0 ..= m-2`,
/// returning `None` when the class vanishes and otherwise the landing index
/// with its sign.
fn reduce_weight(mut n: i64, m: i64) -> Option<(usize, i64)> {
    let wall = m - 1;
    let mut sign = 1i64;
    loop {
        if n < 0 {
            if n == -1 {
                return None;
            }
            sign = -sign;
            n = -n - 2;
        } else if n >= wall {
            if n == wall {
                return None;
            }
            sign = -sign;
            n = 2 * wall - n;
        } else {
            return Some((n as usize, sign));
        }
    }
}
