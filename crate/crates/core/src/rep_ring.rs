//! The representation ring of SU(2) in the basis of irreducible characters.
//!
//! `X<n>` denotes the character of the irreducible representation of highest
//! weight `n` (dimension `n + 1`), i.e. the n-th symmetric power of the
//! defining two-dimensional representation. Restriction to the maximal torus
//! lands in [`LaurentPoly`], and [`RepRingElem::decompose`] inverts it on
//! Weyl-symmetric polynomials.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::laurent::LaurentPoly;

/// Widest exponent window worked on as a dense vector; beyond it the
/// sparse fallbacks keep memory proportional to the number of terms.
const DENSE_WINDOW_LIMIT: i64 = 1 << 20;

fn coeff_add(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("multiplicity overflow in representation ring arithmetic")
}

fn coeff_sub(a: i64, b: i64) -> i64 {
    a.checked_sub(b)
        .expect("multiplicity overflow in representation ring arithmetic")
}

/// The restriction of the weight-`n` irreducible character to the maximal
/// torus: `a^n + a^(n-2) + ... + a^-n` (n + 1 terms).
pub fn char_of_irrep(n: u32) -> LaurentPoly {
    let n = i64::from(n);
    LaurentPoly::from_terms((0..=n).map(|j| (n - 2 * j, 1)))
}

/// A virtual representation of SU(2): an integer combination of irreducible
/// characters, keyed by highest weight.
///
/// Canonical form stores no zero multiplicity, so structural equality is
/// equality in the ring. `X0` is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepRingElem {
    coeffs: BTreeMap<u32, i64>,
}

/// Rejection diagnostic from [`RepRingElem::decompose`]: the input was not
/// fixed by the Weyl involution, witnessed at the named exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposeError {
    pub exponent: i64,
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not Weyl-symmetric: coefficients of a^{} and a^{} differ",
            self.exponent, -self.exponent
        )
    }
}

impl core::error::Error for DecomposeError {}

impl RepRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `X0` (trivial representation).
    pub fn one() -> Self {
        Self::irreducible(0)
    }

    /// The irreducible character `X<n>` with multiplicity one.
    pub fn irreducible(n: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(n, 1);
        Self { coeffs }
    }

    /// Builds an element from `(weight, multiplicity)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_coeffs<I: IntoIterator<Item = (u32, i64)>>(coeffs: I) -> Self {
        let mut map = BTreeMap::new();
        for (n, c) in coeffs {
            let entry = map.entry(n).or_insert(0);
            *entry = coeff_add(*entry, c);
        }
        map.retain(|_, c| *c != 0);
        Self { coeffs: map }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The multiplicity of `X<n>` (zero if absent).
    pub fn coeff(&self, n: u32) -> i64 {
        self.coeffs.get(&n).copied().unwrap_or(0)
    }

    /// Nonzero `(weight, multiplicity)` pairs, ascending weight.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&n, &c)| (n, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Restriction to the maximal torus: the linear extension of
    /// [`char_of_irrep`]. Always Weyl-symmetric.
    pub fn restrict(&self) -> LaurentPoly {
        let Some(max) = self.max_weight() else {
            return LaurentPoly::zero();
        };
        if i64::from(max) <= DENSE_WINDOW_LIMIT / 2 {
            // Accumulate every character into one window indexed by
            // exponent + max.
            let max = max as usize;
            let mut window = vec![0i64; 2 * max + 1];
            for (n, c) in self.coeffs() {
                let base = max - n as usize;
                for slot in window[base..=base + 2 * n as usize].iter_mut().step_by(2) {
                    *slot = coeff_add(*slot, c);
                }
            }
            LaurentPoly::from_terms(
                window
                    .into_iter()
                    .enumerate()
                    .map(|(i, c)| (i as i64 - max as i64, c)),
            )
        } else {
            self.coeffs()
                .map(|(n, c)| &char_of_irrep(n) * c)
                .fold(LaurentPoly::zero(), |acc, p| &acc + &p)
        }
    }

    /// Inverts [`RepRingElem::restrict`]: writes a Weyl-symmetric Laurent
    /// polynomial as an integer combination of irreducible characters by
    /// peeling off the leading weight.
    ///
    /// Non-symmetric input is rejected; such a polynomial cannot be a
    /// character and reaching here with one signals an upstream bug.
    pub fn decompose(p: &LaurentPoly) -> Result<Self, DecomposeError> {
        if let Some(exponent) = p.weyl_asymmetry() {
            return Err(DecomposeError { exponent });
        }
        let Some(max) = p.max_exp() else {
            return Ok(Self::zero());
        };
        debug_assert!(max >= 0, "symmetric nonzero polynomial has leading exp >= 0");
        let mut coeffs = BTreeMap::new();
        if max <= DENSE_WINDOW_LIMIT / 2 {
            let max = max as usize;
            let mut window = vec![0i64; 2 * max + 1];
            for (e, c) in p.terms() {
                window[(e + max as i64) as usize] = c;
            }
            // Peel from the top; each subtraction is symmetric, so once the
            // nonnegative side is cleared the whole window is.
            for e in (0..=max).rev() {
                let c = window[max + e];
                if c == 0 {
                    continue;
                }
                coeffs.insert(e as u32, c);
                for slot in window[max - e..=max + e].iter_mut().step_by(2) {
                    *slot = coeff_sub(*slot, c);
                }
            }
            debug_assert!(window.iter().all(|&c| c == 0));
        } else {
            let mut rest = p.clone();
            while let Some(e) = rest.max_exp() {
                let c = rest.coeff(e);
                coeffs.insert(e as u32, c);
                rest = &rest - &(&char_of_irrep(e as u32) * c);
            }
        }
        Ok(Self { coeffs })
    }

    fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (n, c)) in self.coeffs().enumerate() {
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                out.push_str(&alloc::format!("{mag}*"));
            }
            out.push_str(&alloc::format!("X{n}"));
        }
        out
    }
}

impl Add for &RepRingElem {
    type Output = RepRingElem;

    fn add(self, rhs: &RepRingElem) -> RepRingElem {
        RepRingElem::from_coeffs(self.coeffs().chain(rhs.coeffs()))
    }
}

impl Sub for &RepRingElem {
    type Output = RepRingElem;

    fn sub(self, rhs: &RepRingElem) -> RepRingElem {
        RepRingElem::from_coeffs(
            self.coeffs().chain(
                rhs.coeffs()
                    .map(|(n, c)| (n, c.checked_neg().expect("multiplicity overflow"))),
            ),
        )
    }
}

impl Neg for &RepRingElem {
    type Output = RepRingElem;

    fn neg(self) -> RepRingElem {
        RepRingElem {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&n, &c)| (n, c.checked_neg().expect("multiplicity overflow")))
                .collect(),
        }
    }
}

impl Mul for &RepRingElem {
    type Output = RepRingElem;

    /// The tensor-product ring structure, computed through the torus:
    /// restrict both factors, multiply in `Z[a, a^-1]`, decompose back.
    fn mul(self, rhs: &RepRingElem) -> RepRingElem {
        let product = &self.restrict() * &rhs.restrict();
        RepRingElem::decompose(&product)
            .expect("product of Weyl-symmetric characters is Weyl-symmetric")
    }
}

impl Mul<i64> for &RepRingElem {
    type Output = RepRingElem;

    fn mul(self, scalar: i64) -> RepRingElem {
        RepRingElem::from_coeffs(self.coeffs().map(|(n, c)| {
            (
                n,
                c.checked_mul(scalar).expect("multiplicity overflow"),
            )
        }))
    }
}

impl Add for RepRingElem {
    type Output = RepRingElem;

    fn add(self, rhs: RepRingElem) -> RepRingElem {
        &self + &rhs
    }
}

impl Sub for RepRingElem {
    type Output = RepRingElem;

    fn sub(self, rhs: RepRingElem) -> RepRingElem {
        &self - &rhs
    }
}

impl Neg for RepRingElem {
    type Output = RepRingElem;

    fn neg(self) -> RepRingElem {
        -&self
    }
}

impl Mul for RepRingElem {
    type Output = RepRingElem;

    fn mul(self, rhs: RepRingElem) -> RepRingElem {
        &self * &rhs
    }
}

impl fmt::Display for RepRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::alpha;

    fn chi(n: u32) -> RepRingElem {
        RepRingElem::irreducible(n)
    }

    #[test]
    fn character_of_trivial_rep() {
        assert_eq!(char_of_irrep(0), LaurentPoly::one());
    }

    #[test]
    fn character_of_defining_rep() {
        assert_eq!(char_of_irrep(1), &alpha(1) + &alpha(-1));
    }

    #[test]
    fn character_of_weight_two() {
        let expected = LaurentPoly::from_terms([(-2, 1), (0, 1), (2, 1)]);
        assert_eq!(char_of_irrep(2), expected);
    }

    #[test]
    fn restrict_unit() {
        assert_eq!(chi(0).restrict(), LaurentPoly::one());
    }

    #[test]
    fn restrict_is_linear() {
        let x = &chi(1) + &(&chi(0) * 2);
        let expected = LaurentPoly::from_terms([(-1, 1), (0, 2), (1, 1)]);
        assert_eq!(x.restrict(), expected);
    }

    #[test]
    fn restrict_respects_signs() {
        let x = -&chi(2);
        let expected = LaurentPoly::from_terms([(-2, -1), (0, -1), (2, -1)]);
        assert_eq!(x.restrict(), expected);
    }

    #[test]
    fn decompose_single_irreducible() {
        let p = &alpha(1) + &alpha(-1);
        assert_eq!(RepRingElem::decompose(&p).unwrap(), chi(1));
    }

    #[test]
    fn decompose_mixed() {
        let p = LaurentPoly::from_terms([(-2, 1), (0, 2), (2, 1)]);
        let expected = &chi(2) + &chi(0);
        assert_eq!(RepRingElem::decompose(&p).unwrap(), expected);
    }

    #[test]
    fn decompose_zero() {
        assert_eq!(
            RepRingElem::decompose(&LaurentPoly::zero()).unwrap(),
            RepRingElem::zero()
        );
    }

    #[test]
    fn decompose_rejects_asymmetric_input() {
        let err = RepRingElem::decompose(&alpha(3)).unwrap_err();
        assert_eq!(err.exponent, 3);
        let msg = alloc::format!("{err}");
        assert!(msg.contains("a^3"));
    }

    #[test]
    fn mul_defining_squared() {
        assert_eq!(&chi(1) * &chi(1), &chi(0) + &chi(2));
    }

    #[test]
    fn mul_by_unit() {
        let x = &(&chi(3) * 2) - &chi(5);
        assert_eq!(&chi(0) * &x, x);
    }

    #[test]
    fn mul_clebsch_gordan_example() {
        let expected = &(&chi(1) + &chi(3)) + &chi(5);
        assert_eq!(&chi(2) * &chi(3), expected);
    }

    #[test]
    fn display_matches_cli_format() {
        assert_eq!(alloc::format!("{}", chi(1)), "X1");
        assert_eq!(alloc::format!("{}", -&chi(1)), "-X1");
        assert_eq!(alloc::format!("{}", RepRingElem::zero()), "0");
        let x = &(&chi(0) * 2) - &(&chi(2) * 3);
        assert_eq!(alloc::format!("{x}"), "2*X0 - 3*X2");
    }
}
