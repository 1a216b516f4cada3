//! Exact integer Laurent polynomials in one variable: the character ring
//! `Z[a, a^-1]` of the diagonal maximal torus, with the Weyl involution
//! `a -> a^-1`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// Largest exponent window for which multiplication accumulates into a
/// dense scratch buffer instead of a map.
const DENSE_MUL_LIMIT: i64 = 1 << 20;

fn coeff_add(a: i64, b: i64) -> i64 {
    a.checked_add(b)
        .expect("coefficient overflow in Laurent arithmetic")
}

fn coeff_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .expect("coefficient overflow in Laurent arithmetic")
}

/// A Laurent polynomial with exact `i64` coefficients, stored sparsely as
/// an exponent-to-coefficient map.
///
/// The representation is canonical: no zero coefficient is ever stored, so
/// structural equality is ring equality. Coefficient arithmetic is checked
/// and panics on overflow rather than wrapping.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// The monomial `a^exponent`.
    pub fn monomial(exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(exponent, 1);
        Self { terms }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_terms([(0, c)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert(0);
            *entry = coeff_add(*entry, c);
        }
        map.retain(|_, c| *c != 0);
        Self { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `a^exponent` (zero if absent).
    pub fn coeff(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs, ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The Weyl involution `a^e -> a^-e` applied termwise. A ring
    /// homomorphism and an involution.
    pub fn weyl_involution(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Returns an exponent `e` with `coeff(e) != coeff(-e)`, if one exists.
    /// `None` means the polynomial is fixed by the Weyl involution.
    pub fn weyl_asymmetry(&self) -> Option<i64> {
        self.terms()
            .find(|&(e, c)| self.coeff(-e) != c)
            .map(|(e, _)| e)
    }

    pub fn is_weyl_symmetric(&self) -> bool {
        self.weyl_asymmetry().is_none()
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (lmin, lmax) = (self.min_exp().unwrap(), self.max_exp().unwrap());
        let (rmin, rmax) = (rhs.min_exp().unwrap(), rhs.max_exp().unwrap());
        let base = lmin
            .checked_add(rmin)
            .expect("exponent overflow in Laurent multiplication");
        let top = lmax
            .checked_add(rmax)
            .expect("exponent overflow in Laurent multiplication");
        let width = top - base + 1;

        if width <= DENSE_MUL_LIMIT {
            // Convolve into a dense window; the stored form stays sparse.
            let mut buf = alloc::vec![0i64; width as usize];
            for (le, lc) in self.terms() {
                for (re, rc) in rhs.terms() {
                    let slot = &mut buf[(le + re - base) as usize];
                    *slot = coeff_add(*slot, coeff_mul(lc, rc));
                }
            }
            Self::from_terms(
                buf.into_iter()
                    .enumerate()
                    .map(|(i, c)| (base + i as i64, c)),
            )
        } else {
            let mut map: BTreeMap<i64, i64> = BTreeMap::new();
            for (le, lc) in self.terms() {
                for (re, rc) in rhs.terms() {
                    let entry = map.entry(le + re).or_insert(0);
                    *entry = coeff_add(*entry, coeff_mul(lc, rc));
                }
            }
            map.retain(|_, c| *c != 0);
            Self { terms: map }
        }
    }

    fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
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
            match e {
                0 => out.push_str(&alloc::format!("{mag}")),
                1 => {
                    if mag != 1 {
                        out.push_str(&alloc::format!("{mag}*"));
                    }
                    out.push('a');
                }
                _ => {
                    if mag != 1 {
                        out.push_str(&alloc::format!("{mag}*"));
                    }
                    out.push_str(&alloc::format!("a^{e}"));
                }
            }
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().chain(rhs.terms()))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms().chain(
                rhs.terms()
                    .map(|(e, c)| (e, c.checked_neg().expect("coefficient overflow"))),
            ),
        )
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e, c.checked_neg().expect("coefficient overflow")))
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs)
    }
}

impl Mul<i64> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, scalar: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, coeff_mul(c, scalar))))
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Convenience alias for `a^e` used throughout the tests.
pub fn alpha(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(e)
}
