//! The level-k Verlinde ring of SU(2), built independently of the K-theory
//! side: the free abelian group on the level-k positive-energy labels
//! `0 ..= k` with the truncated tensor-product fusion rule, plus the modular
//! S-matrix as a floating-point oracle for falsifying the combinatorial rule.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

/// Default tolerance for integrality and unitarity checks on the oracle.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// The fusion coefficient `N_{ab}^c` at level `k`: 1 iff `a + b + c` is even
/// and `|a - b| <= c <= min(a + b, 2k - a - b)`, else 0.
///
/// Panics if any label exceeds `k`.
pub fn fusion_coeff(k: u32, a: u32, b: u32, c: u32) -> i64 {
    assert!(
        a <= k && b <= k && c <= k,
        "fusion label out of range 0..={k}"
    );
    let (a, b, c, k) = (i64::from(a), i64::from(b), i64::from(c), i64::from(k));
    let even = (a + b + c) % 2 == 0;
    let admissible = (a - b).abs() <= c && c <= (a + b).min(2 * k - a - b);
    i64::from(even && admissible)
}

/// The level-k fusion ring on labels `0 ..= k`, with the full rank-3 tensor
/// `N_{ab}^c` tabulated and its defining invariants checked at construction:
/// label 0 is the unit, every entry is 0 or 1, and the tensor is invariant
/// under all permutations of `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    k: u32,
    tensor: Vec<i64>,
}

impl FusionRing {
    pub fn new(k: u32) -> Self {
        let r = k as usize + 1;
        let mut tensor = vec![0i64; r * r * r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    tensor[(a * r + b) * r + c] =
                        fusion_coeff(k, a as u32, b as u32, c as u32);
                }
            }
        }
        let ring = Self { k, tensor };
        ring.check_invariants();
        ring
    }

    fn check_invariants(&self) {
        let r = self.rank();
        for b in 0..r {
            for c in 0..r {
                assert_eq!(
                    self.coeff(0, b as u32, c as u32),
                    i64::from(b == c),
                    "label 0 is not the unit"
                );
            }
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    let n = self.coeff(a as u32, b as u32, c as u32);
                    assert!(n == 0 || n == 1, "fusion coefficient outside {{0, 1}}");
                    for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                        assert_eq!(
                            n,
                            self.coeff(x as u32, y as u32, z as u32),
                            "fusion tensor is not symmetric"
                        );
                    }
                }
            }
        }
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    /// Number of labels, `k + 1`.
    pub fn rank(&self) -> usize {
        self.k as usize + 1
    }

    pub fn coeff(&self, a: u32, b: u32, c: u32) -> i64 {
        let r = self.rank();
        let (a, b, c) = (a as usize, b as usize, c as usize);
        assert!(a < r && b < r && c < r, "fusion label out of range");
        self.tensor[(a * r + b) * r + c]
    }

    /// The fusion product of labels `a` and `b` as a multiplicity vector
    /// over all labels.
    pub fn product(&self, a: u32, b: u32) -> Vec<i64> {
        (0..self.rank() as u32).map(|c| self.coeff(a, b, c)).collect()
    }
}

/// Numerical integrality failure from [`SMatrix::verlinde_coeff_integer`]:
/// the diagonalized sum did not land within tolerance of a nonnegative
/// integer, i.e. the oracle disagrees with an integral fusion ring.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityError {
    pub value: f64,
    pub tolerance: f64,
}

impl fmt::Display for IntegralityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Verlinde sum {} is not within {} of a nonnegative integer",
            self.value, self.tolerance
        )
    }
}

impl core::error::Error for IntegralityError {}

/// The modular S-matrix of level-k SU(2):
/// `S_{ab} = sqrt(2/(k+2)) * sin(pi (a+1)(b+1) / (k+2))`.
///
/// Symmetric by construction, orthogonal within tolerance, first row
/// strictly positive; all three are checked when the matrix is built. Used
/// only as an independent numerical route to the fusion coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct SMatrix {
    k: u32,
    entries: Vec<f64>,
    tolerance: f64,
}

impl SMatrix {
    pub fn new(k: u32) -> Self {
        Self::with_tolerance(k, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(k: u32, tolerance: f64) -> Self {
        assert!(tolerance > 0.0, "tolerance must be positive");
        let r = k as usize + 1;
        let denom = f64::from(k) + 2.0;
        let norm = libm::sqrt(2.0 / denom);
        let mut entries = vec![0.0; r * r];
        for a in 0..r {
            // Fill both triangles from one evaluation so symmetry is exact.
            for b in a..r {
                let angle = PI * ((a + 1) * (b + 1)) as f64 / denom;
                let value = norm * libm::sin(angle);
                entries[a * r + b] = value;
                entries[b * r + a] = value;
            }
        }
        let s = Self {
            k,
            entries,
            tolerance,
        };
        for b in 0..r {
            assert!(s.entry(0, b as u32) > 0.0, "first row must be positive");
        }
        // Sanity bound independent of the integrality tolerance: rounding
        // error in the row sums grows like rank * 1e-16, far below this.
        let residual = s.orthogonality_residual();
        assert!(
            residual <= DEFAULT_TOLERANCE,
            "S-matrix orthogonality residual exceeds sanity bound"
        );
        s
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    pub fn rank(&self) -> usize {
        self.k as usize + 1
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn entry(&self, a: u32, b: u32) -> f64 {
        let r = self.rank();
        let (a, b) = (a as usize, b as usize);
        assert!(a < r && b < r, "S-matrix index out of range");
        self.entries[a * r + b]
    }

    /// Max-norm of `S * S^T - I`.
    pub fn orthogonality_residual(&self) -> f64 {
        let r = self.rank();
        let mut worst = 0.0f64;
        for i in 0..r {
            for j in 0..r {
                let dot: f64 = (0..r)
                    .map(|l| self.entries[i * r + l] * self.entries[j * r + l])
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                let dev = libm::fabs(dot - target);
                if dev > worst {
                    worst = dev;
                }
            }
        }
        worst
    }

    /// The diagonalized fusion sum `sum_l S_{al} S_{bl} S_{cl} / S_{0l}`.
    /// The first S-matrix row is strictly positive, so every term is
    /// well-defined.
    pub fn verlinde_coeff(&self, a: u32, b: u32, c: u32) -> f64 {
        let r = self.rank() as u32;
        assert!(a < r && b < r && c < r, "fusion label out of range");
        (0..r)
            .map(|l| self.entry(a, l) * self.entry(b, l) * self.entry(c, l) / self.entry(0, l))
            .sum()
    }

    /// Rounds [`Self::verlinde_coeff`] to the nearest integer, failing if
    /// the sum is farther than the tolerance from a nonnegative integer.
    pub fn verlinde_coeff_integer(&self, a: u32, b: u32, c: u32) -> Result<i64, IntegralityError> {
        let value = self.verlinde_coeff(a, b, c);
        let rounded = libm::round(value);
        if libm::fabs(value - rounded) > self.tolerance || rounded < 0.0 {
            Err(IntegralityError {
                value,
                tolerance: self.tolerance,
            })
        } else {
            Ok(rounded as i64)
        }
    }
}
