//! The `T(4,4,4)` lattice tower and its flip isometries.
//!
//! The ambient space is the 10-dimensional rational span of the vertices of
//! the `T(4,4,4)` tree: a center `c` and three arms of length three. The
//! fixed coordinate order is
//!
//! ```text
//! [c, in1, mid1, out1, in2, mid2, out2, in3, mid3, out3]
//! ```
//!
//! with bilinear form `B`: `-2` on the diagonal, `+1` for each tree edge
//! (`c`–`in_i`, `in_i`–`mid_i`, `mid_i`–`out_i`).
//!
//! The tower consists of four lattices:
//!
//! * `Q` — the span of the vertex vectors, form `B`, discriminant `-16`;
//! * `Q(2)` — the same group with the form `2B`;
//! * `Q'` — the overlattice of `Q(2)` generated by the halves of the
//!   *hollow* vertices (`in_i`, `out_i`), form `2B`, discriminant `-4`;
//! * `Q''` — the overlattice of `Q` (form `B`) generated by the halved
//!   Kodaira–Néron cycles `e_i/2` of the three `E~7` subtrees; it is
//!   unimodular.
//!
//! Distinguished vectors: the tricanonical class `C` (multiplicity 2 at the
//! center, 1 at `in_i` and `mid_i`, 0 at `out_i`), the `E~6`-subtree cycle
//! `e`, the half-fibres `f_1, f_2, f_3` with `f_i^2 = -2`, `f_i . f_j = 1`,
//! `f_1 + f_2 + f_3 = e`, the end vectors `v_1 = out2`, `v_2 = out3`,
//! `v_3 = out1` (arm `i` is the arm whose end vector has multiplicity 1 in
//! `f_i`), and the `E~7`-subtree cycles `e_1, e_2, e_3` with
//! `e_i = 2 v_i + 2 (f_j + f_k)`.
//!
//! The flip isometry `sigma_i` is the unique isometry of `Q''` fixing the
//! standard configuration except at `v_i`, which it sends to `e_i - v_i`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt::Write as _;

use crate::error::Error;
use crate::linalg::{self, Q};

/// Dimension of the ambient space.
pub const DIM: usize = 10;

/// Ambient coordinate indices.
pub const C: usize = 0;
/// `(in_i, mid_i, out_i)` for arms 1, 2, 3.
pub const ARMS: [[usize; 3]; 3] = [[1, 2, 3], [4, 5, 6], [7, 8, 9]];
/// Hollow vertices (odd distance to the center).
pub const HOLLOW: [usize; 6] = [1, 3, 4, 6, 7, 9];
/// Filled vertices (even distance to the center).
pub const FILLED: [usize; 4] = [0, 2, 5, 8];

/// Tree edges of `T(4,4,4)`.
pub const EDGES: [(usize, usize); 9] =
    [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7), (7, 8), (8, 9)];

/// The base bilinear form `B` as an integer matrix.
pub fn base_form() -> Vec<Vec<i64>> {
    let mut b = vec![vec![0i64; DIM]; DIM];
    for (i, row) in b.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (x, y) in EDGES {
        b[x][y] = 1;
        b[y][x] = 1;
    }
    b
}

/// Pairing of two rational vectors under the base form `B`.
pub fn pairing(x: &[Q], y: &[Q]) -> Q {
    let b = base_form();
    let mut s = Q::zero();
    for i in 0..DIM {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..DIM {
            if b[i][j] != 0 {
                s += &x[i] * linalg::q(b[i][j]) * &y[j];
            }
        }
    }
    s
}

fn qv(ints: [i64; DIM]) -> Vec<Q> {
    ints.iter().map(|&x| linalg::q(x)).collect()
}

fn halves(numerators: [i64; DIM]) -> Vec<Q> {
    numerators.iter().map(|&x| linalg::qr(x, 2)).collect()
}

/// A lattice inside the ambient space: a row basis plus a form scale
/// (`scale = 1` means the form `B`, `scale = 2` the form `2B`).
#[derive(Debug, Clone)]
pub struct Lattice {
    pub name: String,
    pub basis: Vec<Vec<Q>>,
    pub scale: i64,
}

impl Lattice {
    /// Gram matrix of the basis under `scale * B`.
    pub fn gram(&self) -> Vec<Vec<Q>> {
        let n = self.basis.len();
        let mut g = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                g[i][j] = pairing(&self.basis[i], &self.basis[j]) * linalg::q(self.scale);
            }
        }
        g
    }

    /// Gram matrix with integer entries (errors if any entry is
    /// fractional).
    pub fn gram_int(&self) -> Result<Vec<Vec<num_bigint::BigInt>>, Error> {
        self.gram()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        if x.is_integer() {
                            Ok(x.to_integer())
                        } else {
                            Err(Error::VerificationFailed(format!(
                                "lattice {} has a fractional Gram entry",
                                self.name
                            )))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Discriminant: determinant of the Gram matrix.
    pub fn discriminant(&self) -> Q {
        linalg::det(&self.gram())
    }

    /// Whether the ambient vector lies in the lattice.
    pub fn contains(&self, x: &[Q]) -> bool {
        match linalg::coords_in_basis(&self.basis, x) {
            Some(coords) => coords.iter().all(|c| c.is_integer()),
            None => false,
        }
    }
}

/// The named vectors of the tower.
#[derive(Debug, Clone)]
pub struct NamedVectors {
    /// Tricanonical class `C`.
    pub c444: Vec<Q>,
    /// Half-fibres `f_1, f_2, f_3`.
    pub f: [Vec<Q>; 3],
    /// `E~6`-subtree Kodaira–Néron cycle `e = f_1 + f_2 + f_3`.
    pub e: Vec<Q>,
    /// End vectors `v_1 = out2, v_2 = out3, v_3 = out1`.
    pub v: [Vec<Q>; 3],
    /// `E~7`-subtree Kodaira–Néron cycles `e_i = 2 v_i + 2 (f_j + f_k)`.
    pub e_arm: [Vec<Q>; 3],
}

/// A `T(4,4,4)` configuration: ten vectors indexed by the tree vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TConfiguration {
    pub vecs: Vec<Vec<Q>>,
}

impl TConfiguration {
    /// Pairing pattern check: the ten vectors form a `T(4,4,4)` tree with
    /// squares `-2`.
    pub fn is_valid(&self) -> bool {
        if self.vecs.len() != DIM {
            return false;
        }
        let b = base_form();
        for i in 0..DIM {
            for j in 0..DIM {
                if pairing(&self.vecs[i], &self.vecs[j]) != linalg::q(b[i][j]) {
                    return false;
                }
            }
        }
        true
    }

    /// The vector at arm `arm` (1-based), position `pos` (0 = in, 1 = mid,
    /// 2 = out).
    pub fn arm_vec(&self, arm: usize, pos: usize) -> &Vec<Q> {
        &self.vecs[ARMS[arm - 1][pos]]
    }

    /// The end (out) vector of the 1-based arm.
    pub fn end_vec(&self, arm: usize) -> &Vec<Q> {
        self.arm_vec(arm, 2)
    }
}

/// The whole tower.
#[derive(Debug, Clone)]
pub struct Tower {
    pub q: Lattice,
    pub q2: Lattice,
    pub q_prime: Lattice,
    pub q_double_prime: Lattice,
    pub named: NamedVectors,
    /// The standard configuration: the unit vectors themselves.
    pub standard: TConfiguration,
}

/// Builds the tower and all named vectors.
pub fn build_tower() -> Tower {
    let unit = |i: usize| {
        let mut v = vec![Q::zero(); DIM];
        v[i] = Q::one();
        v
    };
    let q = Lattice { name: "Q".into(), basis: (0..DIM).map(unit).collect(), scale: 1 };
    let q2 = Lattice { name: "Q(2)".into(), basis: (0..DIM).map(unit).collect(), scale: 2 };
    // Q': halve the hollow vertices.
    let q_prime = Lattice {
        name: "Q'".into(),
        basis: (0..DIM)
            .map(|i| {
                let mut v = unit(i);
                if HOLLOW.contains(&i) {
                    v[i] = linalg::qr(1, 2);
                }
                v
            })
            .collect(),
        scale: 2,
    };
    let f1 = halves([2, 1, 0, -1, 2, 2, 2, 1, 0, -1]);
    let f2 = halves([2, 1, 0, -1, 1, 0, -1, 2, 2, 2]);
    let f3 = halves([2, 2, 2, 2, 1, 0, -1, 1, 0, -1]);
    let e: Vec<Q> = (0..DIM).map(|i| &f1[i] + &f2[i] + &f3[i]).collect();
    let v1 = unit(6); // out2
    let v2 = unit(9); // out3
    let v3 = unit(3); // out1
    let e_arm = [
        qv([4, 3, 2, 1, 2, 0, 0, 3, 2, 1]),
        qv([4, 3, 2, 1, 3, 2, 1, 2, 0, 0]),
        qv([4, 2, 0, 0, 3, 2, 1, 3, 2, 1]),
    ];
    // Q'' = Q + Z e1/2 + Z e2/2 (e3/2 is then automatic since
    // e1 + e2 + e3 = 2e + 2(v1+v2+v3) + ... lands in the span).
    let mut gens: Vec<Vec<num_bigint::BigInt>> = Vec::new();
    for i in 0..DIM {
        let mut row = vec![num_bigint::BigInt::zero(); DIM];
        row[i] = num_bigint::BigInt::from(2);
        gens.push(row);
    }
    for ei in &e_arm[..2] {
        // e_i/2 doubled = e_i.
        gens.push(ei.iter().map(|x| x.to_integer()).collect());
    }
    let hnf = linalg::hnf_row_basis(&gens);
    let q_double_prime = Lattice {
        name: "Q''".into(),
        basis: hnf
            .into_iter()
            .map(|row| row.into_iter().map(|x| Q::new(x, 2.into())).collect())
            .collect(),
        scale: 1,
    };
    let named = NamedVectors {
        c444: qv([2, 1, 1, 0, 1, 1, 0, 1, 1, 0]),
        f: [f1, f2, f3],
        e,
        v: [v1, v2, v3],
        e_arm,
    };
    let standard = TConfiguration { vecs: (0..DIM).map(unit).collect() };
    Tower { q, q2, q_prime, q_double_prime, named, standard }
}

/// The `sigma_i` flip isometry (1-based arm index) as an ambient matrix
/// acting on column coordinate vectors.
pub fn sigma(tower: &Tower, i: usize) -> Vec<Vec<Q>> {
    assert!((1..=3).contains(&i));
    let vi_index = [6usize, 9, 3][i - 1];
    let mut m = linalg::identity(DIM);
    // The column of v_i becomes e_i - v_i.
    let target: Vec<Q> = tower.named.e_arm[i - 1]
        .iter()
        .zip(&tower.named.v[i - 1])
        .map(|(a, b)| a - b)
        .collect();
    for (r, row) in m.iter_mut().enumerate() {
        row[vi_index] = target[r].clone();
    }
    m
}

/// Applies a word of flips to an ambient vector: `apply_word([i1, ..., im],
/// x) = sigma_{i1}(sigma_{i2}(... sigma_{im}(x)))` — later flips in the
/// word act first, matching the iterated-flips composition rule.
pub fn apply_word(tower: &Tower, word: &[usize], x: &[Q]) -> Vec<Q> {
    let mut v = x.to_vec();
    for &i in word.iter().rev() {
        v = linalg::mat_vec(&sigma(tower, i), &v);
    }
    v
}

/// The matrix of a word (same composition order as [`apply_word`]).
pub fn word_matrix(tower: &Tower, word: &[usize]) -> Vec<Vec<Q>> {
    let mut m = linalg::identity(DIM);
    for &i in word {
        m = linalg::mat_mul(&m, &sigma(tower, i));
    }
    m
}

/// Applies a matrix to every vector of a configuration.
pub fn apply_to_config(m: &[Vec<Q>], t: &TConfiguration) -> TConfiguration {
    TConfiguration { vecs: t.vecs.iter().map(|v| linalg::mat_vec(m, v)).collect() }
}

/// The Kodaira–Néron cycle of the `E~7` subtree of a configuration that
/// avoids the end vector of the given 1-based arm: multiplicity 4 at the
/// center, (3, 2, 1) along the two full arms, 2 at the inner vertex of
/// the truncated arm.
pub fn e7_cycle(t: &TConfiguration, arm: usize) -> Vec<Q> {
    let mut acc = vec![Q::zero(); DIM];
    let mut add = |v: &Vec<Q>, mult: i64| {
        for (a, b) in acc.iter_mut().zip(v) {
            *a += linalg::q(mult) * b;
        }
    };
    // The end vector v_arm sits on ambient arm [2, 3, 1][arm - 1].
    let truncated = [2usize, 3, 1][arm - 1];
    add(&t.vecs[C], 4);
    for a in 1..=3 {
        if a == truncated {
            add(t.arm_vec(a, 0), 2);
        } else {
            add(t.arm_vec(a, 0), 3);
            add(t.arm_vec(a, 1), 2);
            add(t.arm_vec(a, 2), 1);
        }
    }
    acc
}

/// The Kodaira–Néron cycle of the `E~6` subtree (center and the inner
/// two vertices of each arm) of a configuration.
pub fn e6_cycle(t: &TConfiguration) -> Vec<Q> {
    let mut acc = vec![Q::zero(); DIM];
    let mut add = |v: &Vec<Q>, mult: i64| {
        for (a, b) in acc.iter_mut().zip(v) {
            *a += linalg::q(mult) * b;
        }
    };
    add(&t.vecs[C], 3);
    for a in 1..=3 {
        add(t.arm_vec(a, 0), 2);
        add(t.arm_vec(a, 1), 1);
    }
    acc
}

/// The half-fibre `f_i` of a configuration: the `f_i` multiplicity pattern
/// evaluated on the configuration's vectors.
pub fn config_f(t: &TConfiguration, i: usize) -> Vec<Q> {
    // f_i multiplicities in the vertex basis (halves).
    let pattern: [i64; DIM] = match i {
        1 => [2, 1, 0, -1, 2, 2, 2, 1, 0, -1],
        2 => [2, 1, 0, -1, 1, 0, -1, 2, 2, 2],
        3 => [2, 2, 2, 2, 1, 0, -1, 1, 0, -1],
        _ => panic!("arm index must be 1..=3"),
    };
    let mut acc = vec![Q::zero(); DIM];
    for (k, &num) in pattern.iter().enumerate() {
        for (a, b) in acc.iter_mut().zip(&t.vecs[k]) {
            *a += linalg::qr(num, 2) * b;
        }
    }
    acc
}

/// Flips a configuration in the given 1-based arm: the end vector `v` is
/// replaced by `e' - v`, where `e'` is the Kodaira–Néron cycle of the
/// `E~7` subtree of the configuration avoiding `v`. The result is again a
/// `T(4,4,4)` configuration.
pub fn flip(t: &TConfiguration, arm: usize) -> TConfiguration {
    assert!((1..=3).contains(&arm));
    let ep = e7_cycle(t, arm);
    let idx = ARMS[[2usize, 3, 1][arm - 1] - 1][2];
    let mut vecs = t.vecs.clone();
    vecs[idx] = ep.iter().zip(&t.vecs[idx]).map(|(a, b)| a - b).collect();
    let out = TConfiguration { vecs };
    debug_assert!(out.is_valid());
    out
}

/// Whether a configuration is realisable: every vertex at odd distance to
/// the center (the `in` and `out` vectors) must be divisible by 2 in `Q'`.
pub fn is_realisable(tower: &Tower, t: &TConfiguration) -> bool {
    HOLLOW.iter().all(|&i| {
        let half: Vec<Q> = t.vecs[i].iter().map(|x| x / linalg::q(2)).collect();
        tower.q_prime.contains(&half)
    })
}

/// Whether a configuration is 1-realisable, and in which arm: arm `i`
/// qualifies when the pair `{e' + f'_i, e' - f'_i}` computed from the
/// configuration equals the extraneous pair `{e + f_1, e - f_1}` of the
/// Mordell–Weil rank 1 surface.
pub fn one_realisable_arm(tower: &Tower, t: &TConfiguration) -> Option<usize> {
    let e_std = &tower.named.e;
    let f1_std = &tower.named.f[0];
    let plus: Vec<Q> = e_std.iter().zip(f1_std).map(|(a, b)| a + b).collect();
    let minus: Vec<Q> = e_std.iter().zip(f1_std).map(|(a, b)| a - b).collect();
    let ep = e6_cycle(t);
    for i in 1..=3 {
        let fi = config_f(t, i);
        let p: Vec<Q> = ep.iter().zip(&fi).map(|(a, b)| a + b).collect();
        let m: Vec<Q> = ep.iter().zip(&fi).map(|(a, b)| a - b).collect();
        if (p == plus && m == minus) || (p == minus && m == plus) {
            return Some(i);
        }
    }
    None
}

/// Whether `x` is a 1-realisable vector for the given 1-based arm: it
/// pairs 0 with the standard `T(3,3,3)` except the end of arm `i` (pairing
/// 1), and pairs 0 with one of `e ± f_1` and 2 with the other.
pub fn is_one_realisable_vector(tower: &Tower, x: &[Q], arm: usize) -> bool {
    let t333: Vec<usize> = vec![C, 1, 2, 4, 5, 7, 8];
    let end = ARMS[arm - 1][1]; // end of the T333 arm = mid vertex
    for &v in &t333 {
        let expected = if v == end { Q::one() } else { Q::zero() };
        if pairing(x, &tower.standard.vecs[v]) != expected {
            return false;
        }
    }
    let e = &tower.named.e;
    let f1 = &tower.named.f[0];
    let plus: Vec<Q> = e.iter().zip(f1).map(|(a, b)| a + b).collect();
    let minus: Vec<Q> = e.iter().zip(f1).map(|(a, b)| a - b).collect();
    let pp = pairing(x, &plus);
    let pm = pairing(x, &minus);
    (pp.is_zero() && pm == linalg::q(2)) || (pm.is_zero() && pp == linalg::q(2))
}

/// Whether `x` is a 2-realisable vector: it pairs 2 with exactly one of
/// `e - f_1, e - f_2, e - f_3` and 0 with the other two.
pub fn is_two_realisable_vector(tower: &Tower, x: &[Q]) -> bool {
    let mut twos = 0;
    for i in 0..3 {
        let target: Vec<Q> = tower
            .named
            .e
            .iter()
            .zip(&tower.named.f[i])
            .map(|(a, b)| a - b)
            .collect();
        let p = pairing(x, &target);
        if p == linalg::q(2) {
            twos += 1;
        } else if !p.is_zero() {
            return false;
        }
    }
    twos == 1
}

/// The candidate extraneous vectors: all `x = (a f_1 + b f_2 + c f_3)/2`
/// with small coefficients that lie in `Q''`, have square `-2`, and pair
/// 0 or 2 with every end vector. Returns exactly the six vectors
/// `e ± f_i`.
pub fn candidate_vectors(tower: &Tower) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for a in -8..=8i64 {
        for b in -8..=8i64 {
            for c in -8..=8i64 {
                let x: Vec<Q> = (0..DIM)
                    .map(|k| {
                        (linalg::q(a) * &tower.named.f[0][k]
                            + linalg::q(b) * &tower.named.f[1][k]
                            + linalg::q(c) * &tower.named.f[2][k])
                            / linalg::q(2)
                    })
                    .collect();
                if !tower.q_double_prime.contains(&x) {
                    continue;
                }
                if pairing(&x, &x) != linalg::q(-2) {
                    continue;
                }
                let ok = (0..3).all(|i| {
                    let p = pairing(&x, &tower.named.v[i]);
                    p.is_zero() || p == linalg::q(2)
                });
                if ok {
                    out.push(x);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// One check of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub note: String,
}

/// Report of the lattice-tower verification.
#[derive(Debug, Clone, Serialize)]
pub struct MaximalityReport {
    pub checks: Vec<Check>,
}

impl MaximalityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Verifies the arithmetic of the tower:
///
/// * the discriminants `disc Q = -16`, `disc Q(2) = -16 * 2^10`,
///   `disc Q' = -4`, `|disc Q''| = 1`;
/// * the index of `Q'` in its dual is 4 (elementary divisors
///   `1^8, 2, 2`);
/// * `Q'` splits as `Z(-1)^8 ⊥ H(2)` (the hyperbolic witness vectors
///   `u, v` built from `c' = c + (in1+in2+in3)/2` and
///   `m''_i = mid_i + in_i/2 + out_i/2 + c'`);
/// * every vector of `Q'` satisfies the parity `x^2 + C.x` even, while
///   the three cosets of the dual modulo `Q'` have parity values
///   `1, 1, 3` — so `Q'` is maximal among integral lattices with that
///   parity;
/// * `Q''` is unimodular and contains `Q` with index 4;
/// * the half-fibres: `f_i^2 = -2`, `f_i . f_j = 1`, `f_1 + f_2 + f_3 =
///   e`, `f_i` orthogonal to the standard `T(3,3,3)`, and their classes
///   mod `2 Q'` independent;
/// * `e_i = 2 v_i + 2 (f_j + f_k)` and `e_i - v_i` has square `-2`.
pub fn verify_maximality(tower: &Tower) -> MaximalityReport {
    let mut checks = Vec::new();
    let mut add = |name: &str, passed: bool, note: String| {
        checks.push(Check { name: name.into(), passed, note });
    };
    let two = linalg::q(2);

    let dq = tower.q.discriminant();
    add("disc-Q", dq == linalg::q(-16), format!("{dq}"));
    let dq2 = tower.q2.discriminant();
    add("disc-Q2", dq2 == linalg::q(-16 * 1024), format!("{dq2}"));
    let dqp = tower.q_prime.discriminant();
    add("disc-Q-prime", dqp == linalg::q(-4), format!("{dqp}"));
    let dqpp = tower.q_double_prime.discriminant();
    add("disc-Q-double-prime", dqpp.abs() == Q::one(), format!("{dqpp}"));

    // Dual quotient of Q': elementary divisors 1^8, 2, 2.
    match tower.q_prime.gram_int() {
        Ok(g) => {
            let div = linalg::elementary_divisors(&g);
            let expected: Vec<num_bigint::BigInt> = (0..10)
                .map(|i| num_bigint::BigInt::from(if i < 8 { 1 } else { 2 }))
                .collect();
            add("dual-quotient-order-4", div == expected, format!("{div:?}"));
        }
        Err(e) => add("dual-quotient-order-4", false, e.to_string()),
    }

    // Hyperbolic splitting witnesses.
    {
        let mut c_prime = vec![Q::zero(); DIM];
        c_prime[C] = Q::one();
        for a in 0..3 {
            c_prime[ARMS[a][0]] = linalg::qr(1, 2);
        }
        let m_double: Vec<Vec<Q>> = (0..3)
            .map(|a| {
                let mut v = c_prime.clone();
                v[ARMS[a][1]] += Q::one();
                v[ARMS[a][0]] += linalg::qr(1, 2);
                v[ARMS[a][2]] += linalg::qr(1, 2);
                v
            })
            .collect();
        let sp = |x: &[Q], y: &[Q]| pairing(x, y) * &two;
        let mut ok = sp(&c_prime, &c_prime) == linalg::q(-1);
        for i in 0..3 {
            ok &= sp(&m_double[i], &m_double[i]) == linalg::q(-1);
            for j in 0..3 {
                if i != j {
                    ok &= sp(&m_double[i], &m_double[j]) == Q::one();
                }
            }
            ok &= tower.q_prime.contains(&m_double[i]);
        }
        ok &= tower.q_prime.contains(&c_prime);
        let u: Vec<Q> = m_double[1].iter().zip(&m_double[0]).map(|(a, b)| a + b).collect();
        let v: Vec<Q> = m_double[2].iter().zip(&m_double[0]).map(|(a, b)| a + b).collect();
        ok &= sp(&u, &u).is_zero() && sp(&v, &v).is_zero() && sp(&u, &v) == two;
        add("hyperbolic-splitting", ok, String::new());

        // Parity of the proper overlattice generators u/2, v/2, (u+v)/2:
        // values 1, 1, 3 — all odd, so no integral overlattice keeps the
        // even parity.
        let parity = |x: &[Q]| -> Q {
            sp(x, x) + pairing(x, &tower.named.c444) * &two
        };
        let half = |x: &[Q]| -> Vec<Q> { x.iter().map(|t| t / &two).collect() };
        let upv: Vec<Q> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let vals = [parity(&half(&u)), parity(&half(&v)), parity(&half(&upv))];
        add(
            "overlattice-parities",
            vals == [Q::one(), Q::one(), linalg::q(3)],
            format!("{vals:?}"),
        );
    }

    // Parity holds on Q' itself: x^2 + C.x even for every basis vector
    // (and hence, since the parity function is a quadratic form mod 2,
    // for the whole lattice).
    {
        let sp = |x: &[Q], y: &[Q]| pairing(x, y) * &two;
        let ok = tower.q_prime.basis.iter().all(|b| {
            let val = sp(b, b) + sp(b, &tower.named.c444);
            val.is_integer() && (val.to_integer() % 2) == num_bigint::BigInt::zero()
        });
        add("q-prime-parity", ok, String::new());
    }

    // Q'' contains Q with index 4 and is unimodular.
    {
        let contains_q = (0..DIM).all(|i| tower.q_double_prime.contains(&tower.standard.vecs[i]));
        let halves_in = tower.q_double_prime.contains(
            &tower.named.e_arm[0].iter().map(|x| x / &two).collect::<Vec<Q>>(),
        );
        // Index: |disc Q| / |disc Q''| = 16 = 4^2.
        add(
            "q-double-prime-extends-q",
            contains_q && halves_in,
            String::new(),
        );
    }

    // Half-fibres.
    {
        let f = &tower.named.f;
        let mut ok = true;
        for i in 0..3 {
            ok &= pairing(&f[i], &f[i]) == linalg::q(-2);
            for j in 0..3 {
                if i != j {
                    ok &= pairing(&f[i], &f[j]) == Q::one();
                }
            }
            // Orthogonal to the standard T333.
            for &v in &[C, 1, 2, 4, 5, 7, 8] {
                ok &= pairing(&f[i], &tower.standard.vecs[v]).is_zero();
            }
            // f_i is in Q' and pairs 1 with its end vector v_i.
            ok &= tower.q_prime.contains(&f[i]);
            ok &= pairing(&f[i], &tower.named.v[i]).abs() == Q::one();
        }
        let sum: Vec<Q> = (0..DIM).map(|k| &f[0][k] + &f[1][k] + &f[2][k]).collect();
        ok &= sum == tower.named.e;
        add("half-fibres", ok, String::new());

        // Classes of f_i mod 2Q' independent: no nonzero {0,1}-combination
        // is divisible by 2 in Q'.
        let mut indep = true;
        for mask in 1..8 {
            let mut x = vec![Q::zero(); DIM];
            for (i, fi) in f.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    for (a, b) in x.iter_mut().zip(fi) {
                        *a += b;
                    }
                }
            }
            let half: Vec<Q> = x.iter().map(|t| t / &two).collect();
            if tower.q_prime.contains(&half) {
                indep = false;
            }
        }
        add("half-fibre-classes-independent", indep, String::new());
    }

    // E~7 cycles.
    {
        let mut ok = true;
        for i in 0..3 {
            let expected: Vec<Q> = (0..DIM)
                .map(|k| {
                    linalg::q(2) * &tower.named.v[i][k]
                        + linalg::q(2)
                            * (&tower.named.f[(i + 1) % 3][k] + &tower.named.f[(i + 2) % 3][k])
                })
                .collect();
            ok &= tower.named.e_arm[i] == expected;
            let diff: Vec<Q> = tower.named.e_arm[i]
                .iter()
                .zip(&tower.named.v[i])
                .map(|(a, b)| a - b)
                .collect();
            ok &= pairing(&diff, &diff) == linalg::q(-2);
            ok &= e7_cycle(&tower.standard, i + 1) == tower.named.e_arm[i];
        }
        ok &= e6_cycle(&tower.standard) == tower.named.e;
        add("e7-cycles", ok, String::new());
    }

    MaximalityReport { checks }
}

/// One verified cell of the flip table.
#[derive(Debug, Clone, Serialize)]
pub struct FlipTableCell {
    pub word: String,
    pub vector: String,
    pub passed: bool,
}

/// Verifies the closed-form flip table: with `t = sigma_3 sigma_1
/// sigma_2`, the action of the words `t^m`, `t^m sigma_3`, and
/// `t^m sigma_3 sigma_1` on the end vectors `v_1, v_2, v_3` is, modulo
/// `Z e`, a translation by an explicit combination of `f_2` and `f_3`:
///
/// ```text
/// g               g(v1) - v1        g(v2) - v2        g(v3) - v3
/// t^2n            2n d              2n d              2n d
/// t^2n+1          2n d + 2 f2       2n d - 2 f3       2n d - 2 f3
/// t^2n  s3        2n d              2n d              2n d - 2 f3
/// t^2n+1 s3       2n d + 2 f2       2n d - 2 f3       2(n+1) d
/// t^2n  s3 s1     2n d + 2 f2       2n d              2n d - 2 f3
/// t^2n+1 s3 s1    2(n+1) d          2n d - 2 f3       2(n+1) d
/// ```
///
/// where `d = f2 - f3`. Every cell is checked exactly for
/// `n in 0..=max_n` (18 cells per `n`).
pub fn verify_flip_table(tower: &Tower, max_n: i64) -> Vec<FlipTableCell> {
    let f2 = &tower.named.f[1];
    let f3 = &tower.named.f[2];
    let e = &tower.named.e;
    let d: Vec<Q> = (0..DIM).map(|k| &f2[k] - &f3[k]).collect();
    let comb = |dn: i64, f2c: i64, f3c: i64| -> Vec<Q> {
        (0..DIM)
            .map(|k| {
                linalg::q(dn) * &d[k] + linalg::q(f2c) * &f2[k] + linalg::q(f3c) * &f3[k]
            })
            .collect()
    };
    let mut cells = Vec::new();
    for n in 0..=max_n {
        // (suffix word after t^m, exponent m, expected translations).
        let rows: Vec<(Vec<usize>, i64, [Vec<Q>; 3])> = vec![
            (vec![], 2 * n, [comb(2 * n, 0, 0), comb(2 * n, 0, 0), comb(2 * n, 0, 0)]),
            (
                vec![],
                2 * n + 1,
                [comb(2 * n, 2, 0), comb(2 * n, 0, -2), comb(2 * n, 0, -2)],
            ),
            (
                vec![3],
                2 * n,
                [comb(2 * n, 0, 0), comb(2 * n, 0, 0), comb(2 * n, 0, -2)],
            ),
            (
                vec![3],
                2 * n + 1,
                [comb(2 * n, 2, 0), comb(2 * n, 0, -2), comb(2 * (n + 1), 0, 0)],
            ),
            (
                vec![3, 1],
                2 * n,
                [comb(2 * n, 2, 0), comb(2 * n, 0, 0), comb(2 * n, 0, -2)],
            ),
            (
                vec![3, 1],
                2 * n + 1,
                [comb(2 * (n + 1), 0, 0), comb(2 * n, 0, -2), comb(2 * (n + 1), 0, 0)],
            ),
        ];
        for (suffix, m, expected) in rows {
            let mut word: Vec<usize> = Vec::new();
            for _ in 0..m {
                word.extend_from_slice(&[3, 1, 2]);
            }
            word.extend_from_slice(&suffix);
            let g = word_matrix(tower, &word);
            for i in 0..3 {
                let gv = linalg::mat_vec(&g, &tower.named.v[i]);
                let diff: Vec<Q> = (0..DIM)
                    .map(|k| &gv[k] - &tower.named.v[i][k] - &expected[i][k])
                    .collect();
                // diff must be an integral multiple of e.
                let passed = is_integer_multiple_of(&diff, e);
                cells.push(FlipTableCell {
                    word: format!(
                        "t^{m}{}",
                        suffix
                            .iter()
                            .map(|a| format!(" s{a}"))
                            .collect::<String>()
                    ),
                    vector: format!("v{}", i + 1),
                    passed,
                });
            }
        }
    }
    cells
}

fn is_integer_multiple_of(x: &[Q], e: &[Q]) -> bool {
    // Find the candidate multiplier from any nonzero coordinate of e.
    let pivot = match (0..DIM).find(|&k| !e[k].is_zero()) {
        Some(p) => p,
        None => return x.iter().all(|c| c.is_zero()),
    };
    let lambda = &x[pivot] / &e[pivot];
    if !lambda.is_integer() {
        return false;
    }
    (0..DIM).all(|k| x[k] == &lambda * &e[k])
}

/// Report of the torsor check on extensions of the standard `T(3,3,3)`.
#[derive(Debug, Clone, Serialize)]
pub struct TorsorReport {
    pub samples: usize,
    pub failures: Vec<String>,
}

/// Extensions of the standard `T(3,3,3)` to a `T(3,3,4)` form a torsor
/// under `T(3,3,3)-perp / Z e`: acting on the extension `v_1` by the class
/// of `F = a f_1 + b f_2` gives `v_1 + f - (f^2/2) e` where `f = F + t e`
/// is the representative orthogonal to `v_1`. The result always has
/// square `-2` and the right pairings, and is divisible by 2 in `Q'`
/// (realisable) exactly when the class `F` is divisible by 2, i.e. when
/// `a` and `b` are both even.
pub fn t333_extension_torsor_check(tower: &Tower, range: i64) -> TorsorReport {
    let mut failures = Vec::new();
    let mut samples = 0usize;
    let e = &tower.named.e;
    let v1 = &tower.named.v[0];
    for a in -range..=range {
        for b in -range..=range {
            samples += 1;
            let big_f: Vec<Q> = (0..DIM)
                .map(|k| linalg::q(a) * &tower.named.f[0][k] + linalg::q(b) * &tower.named.f[1][k])
                .collect();
            let t = -pairing(v1, &big_f);
            let f: Vec<Q> = (0..DIM).map(|k| &big_f[k] + &t * &e[k]).collect();
            if !pairing(v1, &f).is_zero() {
                failures.push(format!("(a={a}, b={b}): f not orthogonal to v1"));
                continue;
            }
            let fsq_half = pairing(&f, &f) / linalg::q(2);
            if !fsq_half.is_integer() {
                failures.push(format!("(a={a}, b={b}): f^2 odd"));
                continue;
            }
            let x: Vec<Q> = (0..DIM).map(|k| &v1[k] + &f[k] - &fsq_half * &e[k]).collect();
            // x extends T333 at the same arm as v1.
            if pairing(&x, &x) != linalg::q(-2) {
                failures.push(format!("(a={a}, b={b}): x^2 != -2"));
                continue;
            }
            for &w in &[C, 1, 2, 4, 5, 7, 8] {
                let expect = pairing(v1, &tower.standard.vecs[w]);
                if pairing(&x, &tower.standard.vecs[w]) != expect {
                    failures.push(format!("(a={a}, b={b}): wrong T333 pairing"));
                }
            }
            // Realisable iff a and b are both even.
            let half: Vec<Q> = x.iter().map(|t| t / linalg::q(2)).collect();
            let realisable = tower.q_prime.contains(&half);
            let expected = a % 2 == 0 && b % 2 == 0;
            if realisable != expected {
                failures.push(format!(
                    "(a={a}, b={b}): realisable={realisable}, expected {expected}"
                ));
            }
        }
    }
    TorsorReport { samples, failures }
}

/// Renders an ambient vector in the arm-by-arm layout
/// `(c; in1,mid1,out1; in2,mid2,out2; in3,mid3,out3)`.
pub fn render_vector(x: &[Q]) -> String {
    let mut s = String::new();
    let _ = write!(s, "({}", x[0]);
    for arm in ARMS {
        let _ = write!(s, "; {},{},{}", x[arm[0]], x[arm[1]], x[arm[2]]);
    }
    s.push(')');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_invariants() {
        let tower = build_tower();
        let report = verify_maximality(&tower);
        assert!(
            report.all_passed(),
            "{:?}",
            report.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
        );
    }

    #[test]
    fn sigma_is_an_isometry_and_involution() {
        let tower = build_tower();
        let b: Vec<Vec<Q>> = base_form()
            .iter()
            .map(|row| row.iter().map(|&x| linalg::q(x)).collect())
            .collect();
        for i in 1..=3 {
            let m = sigma(&tower, i);
            // m^T B m = B
            let mt: Vec<Vec<Q>> = (0..DIM)
                .map(|r| (0..DIM).map(|c| m[c][r].clone()).collect())
                .collect();
            let prod = linalg::mat_mul(&linalg::mat_mul(&mt, &b), &m);
            assert_eq!(prod, b, "sigma_{i} not an isometry");
            let sq = linalg::mat_mul(&m, &m);
            assert_eq!(sq, linalg::identity(DIM), "sigma_{i} not an involution");
            // sigma_i preserves Q'' (it maps the basis into the lattice).
            for bvec in &tower.q_double_prime.basis {
                let img = linalg::mat_vec(&m, bvec);
                assert!(tower.q_double_prime.contains(&img));
            }
        }
    }

    #[test]
    fn sigma_action_on_half_fibres() {
        // sigma_i(f_i) = 2e - f_i, sigma_i(f_j) = -f_k.
        let tower = build_tower();
        for i in 0..3 {
            let m = sigma(&tower, i + 1);
            let fi = linalg::mat_vec(&m, &tower.named.f[i]);
            let expected: Vec<Q> = (0..DIM)
                .map(|k| linalg::q(2) * &tower.named.e[k] - &tower.named.f[i][k])
                .collect();
            assert_eq!(fi, expected);
            let j = (i + 1) % 3;
            let k = (i + 2) % 3;
            let fj = linalg::mat_vec(&m, &tower.named.f[j]);
            let neg_fk: Vec<Q> = tower.named.f[k].iter().map(|x| -x.clone()).collect();
            assert_eq!(fj, neg_fk);
        }
    }

    #[test]
    fn flip_agrees_with_sigma() {
        let tower = build_tower();
        for i in 1..=3 {
            let flipped = flip(&tower.standard, i);
            let via_sigma = apply_to_config(&sigma(&tower, i), &tower.standard);
            assert_eq!(flipped, via_sigma);
        }
    }

    #[test]
    fn standard_configuration_is_realisable_and_valid() {
        let tower = build_tower();
        assert!(tower.standard.is_valid());
        assert!(is_realisable(&tower, &tower.standard));
        assert_eq!(one_realisable_arm(&tower, &tower.standard), Some(1));
    }

    #[test]
    fn candidate_vectors_are_the_six_expected() {
        let tower = build_tower();
        let cands = candidate_vectors(&tower);
        assert_eq!(cands.len(), 6);
        for i in 0..3 {
            for sign in [1i64, -1] {
                let v: Vec<Q> = (0..DIM)
                    .map(|k| &tower.named.e[k] + linalg::q(sign) * &tower.named.f[i][k])
                    .collect();
                assert!(cands.contains(&v), "missing e {} f_{}", if sign > 0 { "+" } else { "-" }, i + 1);
            }
        }
    }

    #[test]
    fn v1_is_two_realisable() {
        let tower = build_tower();
        assert!(is_two_realisable_vector(&tower, &tower.named.v[0]));
        assert!(is_one_realisable_vector(&tower, &tower.named.v[0], 2));
    }

    #[test]
    fn torsor_check_passes() {
        let tower = build_tower();
        let report = t333_extension_torsor_check(&tower, 5);
        assert!(report.samples >= 100);
        assert!(report.failures.is_empty(), "{:?}", report.failures);
    }
}
