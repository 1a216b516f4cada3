//! Acceptance gate. Each test checks one shipped guarantee end to end and
//! prints a single `PASS n: ...` line naming the pinned tolerance or time
//! budget it ran under (visible with `cargo test --test acceptance --
//! --nocapture`).

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use verlinde_core::fusion::{fusion_coeff, FusionRing, SMatrix};
use verlinde_core::induction::{induce, induce_monomial};
use verlinde_core::laurent::LaurentPoly;
use verlinde_core::rep_ring::RepRingElem;
use verlinde_core::twisted_k::{MvMap, Twist};
use verlinde_core::finite_sector::{kgg_ring, FiniteAbelianGroup};

const FLOAT_TOLERANCE: f64 = 1e-9;
const RANDOM_CASES: usize = 1000;

/// Twist range reproduced exactly: K1 = 0, K0 = R(SU2)/<X(m-1)> of free
/// rank m-1, and the generator images 1 -> (X0, X(m)), a^-1 -> (0, X(m-1))
/// all recomputed through the induction engine. Budget: 5 s.
#[test]
fn a1_twisted_k_reproduction_for_every_twist() {
    let budget = Duration::from_secs(5);
    let started = Instant::now();
    for m in 2..=66u32 {
        let mv = MvMap::new(Twist::new(m));
        assert_eq!(mv.entry(0, 0), &RepRingElem::irreducible(0), "m = {m}");
        assert_eq!(mv.entry(0, 1), &RepRingElem::irreducible(m), "m = {m}");
        assert_eq!(mv.entry(1, 0), &RepRingElem::zero(), "m = {m}");
        assert_eq!(mv.entry(1, 1), &RepRingElem::irreducible(m - 1), "m = {m}");
        mv.certify_injective().expect("injective pushforward");
        let q = mv.cokernel();
        assert_eq!(q.k1_rank(), 0, "m = {m}");
        assert_eq!(q.rank(), (m - 1) as usize, "m = {m}");
        assert_eq!(q.relation(), &RepRingElem::irreducible(m - 1), "m = {m}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < budget, "took {elapsed:?}, budget {budget:?}");
    println!(
        "PASS 1: twisted K-theory exact for m in 2..=66 (K1 = 0, rank m-1, \
         generator images recomputed) in {elapsed:?} < 5s"
    );
}

/// The shipped binary confirms the ring isomorphism for every level up to
/// 64: one PASS line per level, exit status 0. Budget: 30 s.
#[test]
fn a2_verify_binary_through_level_64() {
    let budget = Duration::from_secs(30);
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(["verify", "--max-level", "64"])
        .output()
        .expect("binary runs");
    let elapsed = started.elapsed();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).expect("utf-8");
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 65, "one line per level 0..=64");
    for (k, line) in lines.iter().enumerate() {
        assert!(line.starts_with(&format!("k={k} ")), "line {k}: {line}");
        assert!(line.ends_with("PASS"), "line {k}: {line}");
    }
    assert!(elapsed < budget, "took {elapsed:?}, budget {budget:?}");
    println!("PASS 2: `verify --max-level 64` all levels PASS, exit 0, in {elapsed:?} < 30s");
}

/// The three defining values of holomorphic induction, exact.
#[test]
fn a3_induction_unit_examples() {
    assert_eq!(induce(&LaurentPoly::monomial(1)), RepRingElem::irreducible(1));
    assert_eq!(induce(&LaurentPoly::one()), RepRingElem::irreducible(0));
    assert_eq!(induce(&LaurentPoly::monomial(-1)), RepRingElem::zero());
    println!("PASS 3: ind(a) = X1, ind(1) = X0, ind(a^-1) = 0, exact");
}

/// Numeric Verlinde sums agree with the combinatorial rule for every triple
/// at every level k <= 20, within 1e-9 of an integer; the S-matrix stays
/// orthogonal within 1e-9.
#[test]
fn a4_verlinde_oracle_equivalence() {
    let mut triples = 0usize;
    for k in 0..=20u32 {
        let s = SMatrix::with_tolerance(k, FLOAT_TOLERANCE);
        assert!(
            s.orthogonality_residual() <= FLOAT_TOLERANCE,
            "orthogonality at k = {k}"
        );
        let ring = FusionRing::new(k);
        for a in 0..=k {
            for b in 0..=k {
                for c in 0..=k {
                    let numeric = s
                        .verlinde_coeff_integer(a, b, c)
                        .expect("within 1e-9 of an integer");
                    assert_eq!(numeric, ring.coeff(a, b, c), "k={k} ({a},{b},{c})");
                    triples += 1;
                }
            }
        }
    }
    println!(
        "PASS 4: Verlinde formula rounds to the fusion rule on {triples} triples \
         (k <= 20), S-matrix residual <= 1e-9"
    );
}

fn random_laurent(
    rng: &mut ChaCha20Rng,
    max_terms: usize,
    max_exp: i64,
    max_coeff: i64,
) -> LaurentPoly {
    let n = rng.gen_range(0..=max_terms);
    let terms: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            (
                rng.gen_range(-max_exp..=max_exp),
                rng.gen_range(-max_coeff..=max_coeff),
            )
        })
        .collect();
    LaurentPoly::from_terms(terms)
}

fn random_rep(rng: &mut ChaCha20Rng, max_weight: u32, max_coeff: i64) -> RepRingElem {
    let n = rng.gen_range(0..=5usize);
    let coeffs: Vec<(u32, i64)> = (0..n)
        .map(|_| {
            (
                rng.gen_range(0..=max_weight),
                rng.gen_range(-max_coeff..=max_coeff),
            )
        })
        .collect();
    RepRingElem::from_coeffs(coeffs)
}

/// Six randomized suites of 1000 cases each, deterministic seeds.
#[test]
fn a5_randomized_property_suites() {
    // Laurent ring axioms.
    let rng = &mut ChaCha20Rng::seed_from_u64(0xA001);
    for _ in 0..RANDOM_CASES {
        let p = random_laurent(rng, 8, 20, 100);
        let q = random_laurent(rng, 8, 20, 100);
        let r = random_laurent(rng, 8, 20, 100);
        assert_eq!(&p + &q, &q + &p);
        assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        assert_eq!(&p * &q, &q * &p);
        assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        assert_eq!(&p * &LaurentPoly::one(), p.clone());
        assert!((&p - &p).is_zero());
    }

    // Character multiplicativity under restriction.
    let rng = &mut ChaCha20Rng::seed_from_u64(0xA002);
    for _ in 0..RANDOM_CASES {
        let x = random_rep(rng, 10, 6);
        let y = random_rep(rng, 10, 6);
        assert_eq!((&x * &y).restrict(), &x.restrict() * &y.restrict());
    }

    // decompose inverts restrict.
    let rng = &mut ChaCha20Rng::seed_from_u64(0xA003);
    for _ in 0..RANDOM_CASES {
        let x = random_rep(rng, 12, 9);
        assert_eq!(
            RepRingElem::decompose(&x.restrict()).expect("symmetric"),
            x
        );
    }

    // Frobenius module property of induction.
    let rng = &mut ChaCha20Rng::seed_from_u64(0xA004);
    for _ in 0..RANDOM_CASES {
        let x = random_rep(rng, 8, 4);
        let p = random_laurent(rng, 5, 10, 9);
        assert_eq!(induce(&(&x.restrict() * &p)), &x * &induce(&p));
    }

    // Weyl antisymmetry of induction across the -1 center of symmetry.
    let rng = &mut ChaCha20Rng::seed_from_u64(0xA005);
    for _ in 0..RANDOM_CASES {
        let n = rng.gen_range(-40..=40i64);
        let sum = &induce_monomial(n) + &induce_monomial(-n - 2);
        assert!(sum.is_zero(), "n = {n}");
    }

    // Fusion S3 symmetry and associativity.
    let rng = &mut ChaCha20Rng::seed_from_u64(0xA006);
    for _ in 0..RANDOM_CASES {
        let k = rng.gen_range(0..=20u32);
        let a = rng.gen_range(0..=k);
        let b = rng.gen_range(0..=k);
        let c = rng.gen_range(0..=k);
        let d = rng.gen_range(0..=k);
        let n = fusion_coeff(k, a, b, c);
        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            assert_eq!(n, fusion_coeff(k, x, y, z));
        }
        let left: i64 = (0..=k)
            .map(|e| fusion_coeff(k, a, b, e) * fusion_coeff(k, e, c, d))
            .sum();
        let right: i64 = (0..=k)
            .map(|e| fusion_coeff(k, b, c, e) * fusion_coeff(k, a, e, d))
            .sum();
        assert_eq!(left, right, "k={k} ({a},{b},{c},{d})");
    }

    println!("PASS 5: 6 randomized suites x {RANDOM_CASES} cases, seeded, all laws hold");
}

/// Characters written as integer polynomials in sigma = X1, trimmed, with
/// the three-term recursion X(n+1) = sigma*X(n) - X(n-1). Index = power of
/// sigma; every entry is monic in its top power.
fn chi_sigma_table(up_to: usize) -> Vec<Vec<i64>> {
    let mut table = vec![vec![1], vec![0, 1]];
    for n in 1..up_to {
        let mut next = vec![0i64; n + 2];
        next[1..].copy_from_slice(&table[n]);
        for (slot, &c) in next.iter_mut().zip(&table[n - 1]) {
            *slot -= c;
        }
        table.push(next);
    }
    table.truncate(up_to + 1);
    table
}

fn rep_to_sigma(x: &RepRingElem, table: &[Vec<i64>]) -> Vec<i64> {
    let mut out = Vec::new();
    for (n, c) in x.coeffs() {
        let p = &table[n as usize];
        if out.len() < p.len() {
            out.resize(p.len(), 0);
        }
        for (slot, &d) in out.iter_mut().zip(p) {
            *slot += c * d;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Remainder of polynomial division by a monic divisor, exact over Z.
fn rem_monic(num: &[i64], div: &[i64]) -> Vec<i64> {
    assert_eq!(div.last(), Some(&1), "divisor must be monic");
    let d = div.len() - 1;
    let mut rem = num.to_vec();
    while rem.len() > d {
        let lead = *rem.last().expect("nonempty");
        let shift = rem.len() - 1 - d;
        if lead != 0 {
            for (i, &c) in div.iter().enumerate() {
                rem[shift + i] -= lead * c;
            }
        }
        rem.pop();
        while rem.last() == Some(&0) {
            rem.pop();
        }
    }
    rem
}

/// The rewriting engine and an independent sigma-basis polynomial-division
/// reduction agree on every product of basis classes for every m <= 16.
#[test]
fn a6_two_oracle_cokernel_agreement() {
    let table = chi_sigma_table(2 * 16);
    let mut products = 0usize;
    for m in 1..=16u32 {
        let q = MvMap::new(Twist::new(m)).cokernel();
        let divisor = &table[(m - 1) as usize];
        if q.rank() == 0 {
            // Zero ring: everything must reduce to nothing on both paths.
            for j in 0..=5u32 {
                let x = RepRingElem::irreducible(j);
                assert!(q.reduce(&x).iter().all(|&c| c == 0));
                assert!(rem_monic(&rep_to_sigma(&x, &table), divisor).is_empty());
            }
            continue;
        }
        for a in 0..q.rank() {
            for b in 0..q.rank() {
                let engine = q.quotient_mul(a, b);
                let engine_sigma = rep_to_sigma(
                    &RepRingElem::from_coeffs(
                        engine.iter().enumerate().map(|(c, &v)| (c as u32, v)),
                    ),
                    &table,
                );
                let product = &RepRingElem::irreducible(a as u32)
                    * &RepRingElem::irreducible(b as u32);
                let oracle = rem_monic(&rep_to_sigma(&product, &table), divisor);
                assert_eq!(engine_sigma, oracle, "m={m} ({a},{b})");
                products += 1;
            }
        }
    }
    println!(
        "PASS 6: rewriting reduction = sigma-basis division on {products} products (m <= 16), exact"
    );
}

/// Multiset factorizations of n into parts >= min, nondecreasing: one list
/// of cyclic orders per abelian group of order n.
fn factorizations(n: u32, min: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for d in min..=n {
        if n.is_multiple_of(d) {
            for rest in factorizations(n / d, d) {
                let mut orders = vec![d];
                orders.extend(rest);
                out.push(orders);
            }
        }
    }
    out
}

/// Every abelian group of order <= 24: the tabulated basis products equal
/// the group law of G x Ghat on all pairs, with the unit at the unit pair.
/// Budget: 1 s.
#[test]
fn a7_finite_sector_group_ring_isomorphism() {
    let budget = Duration::from_secs(1);
    let started = Instant::now();
    let mut groups = 0usize;
    for n in 2..=24u32 {
        for orders in factorizations(n, 2) {
            let group = FiniteAbelianGroup::new(&orders);
            let ring = kgg_ring(group.clone());
            assert_eq!(ring.rank(), (n * n) as usize, "{group}");
            let order = group.order();
            // The group law of G, tabulated once so the pair loop below is
            // pure index arithmetic.
            let law: Vec<usize> = (0..order)
                .flat_map(|i| (0..order).map(move |j| (i, j)))
                .map(|(i, j)| group.index_of(&group.add(&group.element(i), &group.element(j))))
                .collect();
            let pairs: Vec<(usize, usize)> = (0..ring.rank())
                .map(|idx| {
                    let (g, p) = ring.basis_pair(idx);
                    (group.index_of(&g), group.index_of(&p))
                })
                .collect();
            let e = ring.unit_index();
            for (a, &(ga, pa)) in pairs.iter().enumerate() {
                assert_eq!(ring.product_index(e, a), a, "{group}");
                for (b, &(gb, pb)) in pairs.iter().enumerate() {
                    let expected = law[ga * order + gb] * order + law[pa * order + pb];
                    assert_eq!(ring.product_index(a, b), expected, "{group} ({a},{b})");
                }
            }
            groups += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < budget, "took {elapsed:?}, budget {budget:?}");
    println!(
        "PASS 7: {groups} abelian groups with |G| <= 24, product table = group law of G x Ghat, in {elapsed:?} < 1s"
    );
}

/// Degenerate edges: twist 1 gives the zero ring without error, level 0
/// gives the rank-1 trivial fusion ring.
#[test]
fn a8_degenerate_cases() {
    let q = MvMap::new(Twist::new(1)).cokernel();
    assert_eq!(q.rank(), 0);
    assert_eq!(q.k1_rank(), 0);
    assert!(q.basis().is_empty());

    let out = Command::new(env!("CARGO_BIN_EXE_verlinde"))
        .args(["twisted-k", "--twist", "1"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "twist 1 must not error");

    let ring = FusionRing::new(0);
    assert_eq!(ring.rank(), 1);
    assert_eq!(ring.coeff(0, 0, 0), 1);
    let s = SMatrix::new(0);
    assert!((s.entry(0, 0) - 1.0).abs() <= FLOAT_TOLERANCE);

    println!("PASS 8: m = 1 is the zero ring without error; k = 0 is the rank-1 trivial ring");
}
