//! Level-zero equivariant K-theory of a finite abelian group acting on
//! itself by conjugation. The action is trivial, so an equivariant bundle
//! assigns a representation to each group element and the Grothendieck ring
//! is the integral group ring of `G x Ghat`: pushforward along
//! multiplication convolves supports and tensors fibers, which on basis
//! pairs `(g, phi)` is the group law `(g1 g2, phi1 phi2)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A finite abelian group presented as a product of cyclic groups of the
/// given orders. Elements and characters are both integer tuples reduced
/// componentwise modulo the orders; the character tuple `phi` pairs with the
/// element tuple `g` by `sum phi_i g_i / n_i (mod 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
}

impl FiniteAbelianGroup {
    /// Panics unless `orders` is nonempty with every entry at least 2.
    pub fn new(orders: &[u32]) -> Self {
        assert!(!orders.is_empty(), "group needs at least one cyclic factor");
        assert!(
            orders.iter().all(|&n| n >= 2),
            "cyclic factor orders must be >= 2"
        );
        Self {
            orders: orders.to_vec(),
        }
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn num_factors(&self) -> usize {
        self.orders.len()
    }

    /// `|G|`, the product of the cyclic orders.
    pub fn order(&self) -> usize {
        self.orders
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n as usize))
            .expect("group order overflow")
    }

    pub fn identity(&self) -> Vec<u32> {
        self.orders.iter().map(|_| 0).collect()
    }

    /// Componentwise sum modulo the orders (the group law, and equally the
    /// character-group law).
    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.num_factors(), "tuple length mismatch");
        assert_eq!(y.len(), self.num_factors(), "tuple length mismatch");
        self.orders
            .iter()
            .zip(x.iter().zip(y))
            .map(|(&n, (&a, &b))| (a % n + b % n) % n)
            .collect()
    }

    /// Mixed-radix decoding: the `index`-th element in lexicographic order,
    /// the last factor varying fastest. Inverse of [`Self::index_of`].
    pub fn element(&self, index: usize) -> Vec<u32> {
        assert!(index < self.order(), "element index out of range");
        let mut rest = index;
        let mut digits = vec![0u32; self.num_factors()];
        for (slot, &n) in digits.iter_mut().zip(&self.orders).rev() {
            *slot = (rest % n as usize) as u32;
            rest /= n as usize;
        }
        digits
    }

    pub fn index_of(&self, element: &[u32]) -> usize {
        assert_eq!(element.len(), self.num_factors(), "tuple length mismatch");
        self.orders
            .iter()
            .zip(element)
            .fold(0usize, |acc, (&n, &d)| {
                acc * n as usize + (d % n) as usize
            })
    }

    /// All `|G|` element tuples in index order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    /// The pairing exponent `sum phi_i g_i / n_i (mod 1)` as a reduced
    /// fraction `(numerator, denominator)` with `0 <= num < den`. Reducing
    /// any component of either tuple modulo its order leaves the value
    /// unchanged, which is what makes the pairing well defined.
    pub fn character_pairing(&self, phi: &[u32], g: &[u32]) -> (u64, u64) {
        assert_eq!(phi.len(), self.num_factors(), "tuple length mismatch");
        assert_eq!(g.len(), self.num_factors(), "tuple length mismatch");
        let (mut num, mut den) = (0u128, 1u128);
        for ((&p, &x), &n) in phi.iter().zip(g).zip(&self.orders) {
            let n = n as u128;
            let term = (p as u128 % n) * (x as u128 % n) % n;
            // num/den + term/n, reduced mod 1.
            num = num * n + term * den;
            den *= n;
            num %= den;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        (num as u64, den as u64)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.orders.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{n}")?;
        }
        Ok(())
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// The Grothendieck ring of `G`-equivariant vector bundles over `G` for
/// finite abelian `G`: free abelian of rank `|G|^2` on the pairs
/// `(g, phi)`, with product `(g1, phi1)(g2, phi2) = (g1 g2, phi1 phi2)`.
///
/// Basis pair `(g, phi)` sits at index `index_of(g) * |G| + index_of(phi)`;
/// since every basis product is again a basis element, the structure tensor
/// is stored as the rank^2 table of product indices (entry `(a, b, c)` of
/// the tensor is 1 iff `c` is the tabulated product of `a` and `b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KggRing {
    group: FiniteAbelianGroup,
    product: Vec<usize>,
}

/// Builds the ring and tabulates all `|G|^4` basis products. The group law
/// is evaluated once per pair of group elements; the basis products are
/// index arithmetic over that table.
pub fn kgg_ring(group: FiniteAbelianGroup) -> KggRing {
    let n = group.order();
    let elements: Vec<Vec<u32>> = group.elements().collect();
    let mut law = vec![0usize; n * n];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            law[i * n + j] = group.index_of(&group.add(x, y));
        }
    }
    let rank = n * n;
    let mut product = vec![0usize; rank * rank];
    for a in 0..rank {
        let (ga, pa) = (a / n, a % n);
        for b in 0..rank {
            let (gb, pb) = (b / n, b % n);
            product[a * rank + b] = law[ga * n + gb] * n + law[pa * n + pb];
        }
    }
    let ring = KggRing { group, product };
    assert_eq!(ring.product_index(ring.unit_index(), 0), 0, "broken unit");
    ring
}

impl KggRing {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// `|G|^2`.
    pub fn rank(&self) -> usize {
        self.group.order() * self.group.order()
    }

    /// The index of the unit `(identity, trivial character)`.
    pub fn unit_index(&self) -> usize {
        0
    }

    /// The `(g, phi)` tuples of basis element `index`.
    pub fn basis_pair(&self, index: usize) -> (Vec<u32>, Vec<u32>) {
        assert!(index < self.rank(), "basis index out of range");
        let n = self.group.order();
        (self.group.element(index / n), self.group.element(index % n))
    }

    pub fn pair_index(&self, g: &[u32], phi: &[u32]) -> usize {
        let n = self.group.order();
        self.group.index_of(g) * n + self.group.index_of(phi)
    }

    /// The basis index of the product of basis elements `a` and `b`.
    pub fn product_index(&self, a: usize, b: usize) -> usize {
        let r = self.rank();
        assert!(a < r && b < r, "basis index out of range");
        self.product[a * r + b]
    }

    /// Entry of the structure tensor: 1 iff `c` is the product of `a` and
    /// `b`, else 0.
    pub fn structure_constant(&self, a: usize, b: usize, c: usize) -> i64 {
        assert!(c < self.rank(), "basis index out of range");
        i64::from(self.product_index(a, b) == c)
    }
}
