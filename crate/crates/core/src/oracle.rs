//! Classical evaluation at `q = 1`.
//!
//! At `q = 1` the algebra becomes commutative and every generator is a trace
//! function on `SL(2)^n`: `t_i ↦ −tr(x_i)`, `s_ij ↦ −tr(x̌_i x̌_j)`,
//! `s_ijk ↦ −tr(x̌_i x̌_j x̌_k)` with `x̌ = x − ½tr(x)·e`. Elements are
//! evaluated exactly on random integral unimodular matrices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use smallvec::SmallVec;

use crate::algebra::{Element, Gen, Label};
use crate::qring::RingElem;

pub type Q = BigRational;

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn half() -> Q {
    Q::new(BigInt::one(), BigInt::from(2))
}

/// 2×2 matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[Q; 2]; 2]);

impl Mat2 {
    pub fn from_ints(m: [[i64; 2]; 2]) -> Self {
        Mat2([[q(m[0][0]), q(m[0][1])], [q(m[1][0]), q(m[1][1])]])
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0], [0, 1]])
    }

    pub fn zero() -> Self {
        Self::from_ints([[0, 0], [0, 0]])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &self.0[i][j] + &o.0[i][j];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        self.add(&o.scale(&q(-1)))
    }

    pub fn scale(&self, k: &Q) -> Mat2 {
        let e = |i: usize, j: usize| &self.0[i][j] * k;
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn trace(&self) -> Q {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> Q {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }

    /// Traceless part `x − ½tr(x)·e`.
    pub fn check(&self) -> Mat2 {
        self.sub(&Mat2::identity().scale(&(self.trace() * half())))
    }

    pub fn product<'a>(ms: impl IntoIterator<Item = &'a Mat2>) -> Mat2 {
        ms.into_iter().fold(Mat2::identity(), |acc, m| acc.mul(m))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// Product of `complexity` alternating elementary matrices with off-diagonal
/// entries in `[-5, 5]`; determinant 1 by construction.
pub fn random_sl2(rng: &mut impl Rng, complexity: usize) -> Mat2 {
    assert!(complexity >= 1, "complexity must be positive");
    let mut m = Mat2::identity();
    for i in 0..complexity {
        let b: i64 = rng.gen_range(-5..=5);
        let e = if i % 2 == 0 { [[1, b], [0, 1]] } else { [[1, 0], [b, 1]] };
        m = m.mul(&Mat2::from_ints(e));
    }
    m
}

/// Deterministic per-trial seed derived from a master seed.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub const DEFAULT_COMPLEXITY: usize = 4;

/// `n` matrices in generic position, reproducible from `seed`.
#[derive(Clone, Debug)]
pub struct MatrixTuple {
    pub matrices: Vec<Mat2>,
    pub seed: u64,
    checks: Vec<Mat2>,
    values: HashMap<Gen, Q>,
}

impl MatrixTuple {
    /// Samples until no `tr(x_i) = ±2` and no `tr(x̌_i x̌_j) = 0`.
    pub fn sample(n: usize, seed: u64, complexity: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let ms: Vec<Mat2> = (0..n).map(|_| random_sl2(&mut rng, complexity)).collect();
            let two = q(2);
            if ms.iter().any(|m| m.trace().abs() == two) {
                continue;
            }
            let checks: Vec<Mat2> = ms.iter().map(Mat2::check).collect();
            let degenerate = (0..n).any(|i| (i + 1..n).any(|j| checks[i].mul(&checks[j]).trace().is_zero()));
            if degenerate {
                continue;
            }
            return Self::from_matrices(ms, seed);
        }
    }

    pub fn from_matrices(matrices: Vec<Mat2>, seed: u64) -> Self {
        let checks: Vec<Mat2> = matrices.iter().map(Mat2::check).collect();
        let mut t = MatrixTuple { matrices, seed, checks, values: HashMap::new() };
        let n = t.matrices.len() as Label;
        for a in 1..=n {
            let g = Gen::T(a);
            let v = t.eval_gen_uncached(&g);
            t.values.insert(g, v);
            for b in a + 1..=n {
                let g = Gen::S2(a, b);
                let v = t.eval_gen_uncached(&g);
                t.values.insert(g, v);
                for c in b + 1..=n {
                    let g = Gen::S3(a, b, c);
                    let v = t.eval_gen_uncached(&g);
                    t.values.insert(g, v);
                }
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.matrices.len()
    }

    /// Traceless part of `x_i` (1-based).
    pub fn checked(&self, i: Label) -> &Mat2 {
        &self.checks[i as usize - 1]
    }

    fn eval_gen_uncached(&self, g: &Gen) -> Q {
        let tr = match *g {
            Gen::T(a) => self.matrices[a as usize - 1].trace(),
            _ => Mat2::product(g.labels().iter().map(|&l| self.checked(l))).trace(),
        };
        -tr
    }

    /// Classical value of a generator; `None` when a label exceeds the tuple size.
    pub fn eval_gen(&self, g: &Gen) -> Option<&Q> {
        self.values.get(g)
    }

    /// `−tr(x̌_{i_1} ⋯ x̌_{i_r})` for any label sequence, repeats allowed.
    pub fn r(&self, labels: &[Label]) -> Q {
        -Mat2::product(labels.iter().map(|&l| self.checked(l))).trace()
    }
}

/// Value of `e` with `q^{1/2} = sign`.
pub fn eval_element(e: &Element, tup: &MatrixTuple, sign: i32) -> Q {
    let mut total = Q::zero();
    for (w, c) in e.terms() {
        let mut v = c.spec_at(sign);
        for g in w.gens() {
            match tup.eval_gen(g) {
                Some(x) => v *= x,
                None => panic!("generator {g} outside a tuple of size {}", tup.n()),
            }
        }
        total += v;
    }
    total
}

pub fn eval_element_q1(e: &Element, tup: &MatrixTuple) -> Q {
    eval_element(e, tup, 1)
}

/// Seeded generic tuples for `trials` trials.
pub fn sample_tuples(n: usize, trials: usize, seed: u64) -> Vec<MatrixTuple> {
    (0..trials)
        .into_par_iter()
        .map(|i| MatrixTuple::sample(n, derive_seed(seed, i as u64), DEFAULT_COMPLEXITY))
        .collect()
}

/// A nonzero residual found by the oracle.
#[derive(Clone, Debug, Serialize)]
pub struct Residual {
    pub key: String,
    pub trial: usize,
    pub sign: i32,
    pub value: String,
}

/// Evaluates every keyed element on all tuples at both signs of `q^{1/2}`.
/// Returns the first nonzero residual per element.
pub fn find_residuals(items: &[(String, Element)], tuples: &[MatrixTuple]) -> Vec<Residual> {
    items
        .par_iter()
        .filter_map(|(key, e)| {
            for (trial, tup) in tuples.iter().enumerate() {
                for sign in [1, -1] {
                    let v = eval_element(e, tup, sign);
                    if !v.is_zero() {
                        return Some(Residual { key: key.clone(), trial, sign, value: v.to_string() });
                    }
                }
            }
            None
        })
        .collect()
}

/// Outcome of one identity family over all trials.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub name: &'static str,
    pub trials: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

impl IdentityResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type Check = fn(&MatrixTuple, &mut ChaCha8Rng) -> Option<String>;

fn zero_or(v: Q, what: &str) -> Option<String> {
    if v.is_zero() {
        None
    } else {
        Some(format!("{what} residual {v}"))
    }
}

fn zero_mat_or(m: Mat2, what: &str) -> Option<String> {
    if m.is_zero() {
        None
    } else {
        Some(format!("{what} residual {m}"))
    }
}

fn distinct_labels(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<Label> {
    let mut pool: Vec<Label> = (1..=n as Label).collect();
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let i = rng.gen_range(0..pool.len());
        out.push(pool.swap_remove(i));
    }
    out
}

fn check_ab(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    let (a, b) = (&t.matrices[0], &t.matrices[1]);
    let lhs = a.mul(b).add(&b.mul(a));
    let rhs = a
        .scale(&b.trace())
        .add(&b.scale(&a.trace()))
        .add(&Mat2::identity().scale(&(a.mul(b).trace() - a.trace() * b.trace())));
    zero_mat_or(lhs.sub(&rhs), "ab+ba")
}

fn check_triple_product(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    let (u1, u2, u3) = (t.checked(1), t.checked(2), t.checked(3));
    let tr = |a: &Mat2, b: &Mat2| a.mul(b).trace();
    let lhs = u1.mul(u2).mul(u3).scale(&q(2));
    let rhs = u1
        .scale(&tr(u2, u3))
        .sub(&u2.scale(&tr(u1, u3)))
        .add(&u3.scale(&tr(u1, u2)))
        .add(&Mat2::identity().scale(&u1.mul(u2).mul(u3).trace()));
    zero_mat_or(lhs.sub(&rhs), "2u1u2u3")
}

fn check_skew(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    zero_or(t.r(&[1, 2, 3]) + t.r(&[2, 1, 3]), "skew")
}

fn check_fundamental(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    let v = |i: Label| t.checked(i);
    let lhs = v(4)
        .scale(&t.r(&[1, 2, 3]))
        .sub(&v(2).mul(v(4)).scale(&t.r(&[1, 3])))
        .add(&v(3).mul(v(4)).scale(&t.r(&[1, 2])));
    let rhs = v(1)
        .scale(&t.r(&[2, 3, 4]))
        .add(&v(1).mul(v(2)).scale(&t.r(&[3, 4])))
        .sub(&v(1).mul(v(3)).scale(&t.r(&[2, 4])));
    zero_mat_or(lhs.sub(&rhs), "fundamental")
}

fn check_four_trace(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    let r = |l: &[Label]| t.r(l);
    let v = q(2) * r(&[1, 2, 3, 4]) - (r(&[1, 3]) * r(&[2, 4]) - r(&[1, 2]) * r(&[3, 4]) - r(&[1, 4]) * r(&[2, 3]));
    zero_or(v, "four-trace")
}

/// Right-hand side shared by the three six-trace identities, after relabeling.
fn six_trace(t: &MatrixTuple, p: [Label; 6], which: u8) -> Q {
    let r = |l: &[Label]| t.r(&l.iter().map(|&i| p[i as usize - 1]).collect::<Vec<_>>());
    match which {
        1 => {
            q(2) * (r(&[1, 5, 6]) * r(&[2, 3, 4]) - r(&[1, 2, 3]) * r(&[4, 5, 6]))
                - (r(&[1, 6]) * (r(&[2, 5]) * r(&[3, 4]) - r(&[2, 4]) * r(&[3, 5]))
                    + r(&[2, 6]) * (r(&[1, 3]) * r(&[4, 5]) - r(&[1, 5]) * r(&[3, 4]))
                    + r(&[3, 6]) * (r(&[1, 5]) * r(&[2, 4]) - r(&[1, 2]) * r(&[4, 5]))
                    + r(&[4, 6]) * (r(&[1, 2]) * r(&[3, 5]) - r(&[1, 3]) * r(&[2, 5])))
        }
        2 => {
            q(2) * (r(&[2, 5, 6]) * r(&[1, 3, 4]) + r(&[1, 2, 3]) * r(&[4, 5, 6]))
                - (r(&[2, 6]) * (r(&[1, 5]) * r(&[3, 4]) - r(&[1, 4]) * r(&[3, 5]))
                    + r(&[1, 6]) * (r(&[2, 3]) * r(&[4, 5]) - r(&[2, 5]) * r(&[3, 4]))
                    + r(&[3, 6]) * (r(&[2, 5]) * r(&[1, 4]) - r(&[1, 2]) * r(&[4, 5]))
                    + r(&[4, 6]) * (r(&[1, 2]) * r(&[3, 5]) - r(&[2, 3]) * r(&[1, 5])))
        }
        _ => {
            q(2) * (r(&[1, 3, 4]) * r(&[2, 5, 6]) - r(&[1, 5, 6]) * r(&[2, 3, 4]))
                - (r(&[1, 6]) * (r(&[4, 5]) * r(&[2, 3]) - r(&[2, 4]) * r(&[3, 5]))
                    + r(&[4, 6]) * (r(&[1, 3]) * r(&[2, 5]) - r(&[1, 5]) * r(&[2, 3]))
                    + r(&[3, 6]) * (r(&[1, 5]) * r(&[2, 4]) - r(&[1, 4]) * r(&[2, 5]))
                    + r(&[2, 6]) * (r(&[1, 4]) * r(&[3, 5]) - r(&[1, 3]) * r(&[4, 5])))
        }
    }
}

fn check_six_trace_1(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    zero_or(six_trace(t, [1, 2, 3, 4, 5, 6], 1), "six-trace-1")
}

fn check_six_trace_2(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    zero_or(six_trace(t, [1, 2, 3, 4, 5, 6], 2), "six-trace-2")
}

fn check_six_trace_3(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    zero_or(six_trace(t, [1, 2, 3, 4, 5, 6], 3), "six-trace-3")
}

/// Classical value of `s_ab` with repeats allowed (`s_ii = 2 − ½t_i²`).
fn s_pair(t: &MatrixTuple, a: Label, b: Label) -> Q {
    t.r(&[a, b])
}

fn check_type_one(t: &MatrixTuple, rng: &mut ChaCha8Rng) -> Option<String> {
    let n = t.n();
    let mut a = distinct_labels(rng, n, 3);
    let mut b = distinct_labels(rng, n, 3);
    a.sort_unstable();
    b.sort_unstable();
    let m: Vec<Vec<Q>> = a.iter().map(|&x| b.iter().map(|&y| s_pair(t, x, y)).collect()).collect();
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    zero_or(q(2) * t.r(&a) * t.r(&b) - det, &format!("type I a={a:?} b={b:?}"))
}

fn check_type_two(t: &MatrixTuple, rng: &mut ChaCha8Rng) -> Option<String> {
    let n = t.n();
    let mut a = distinct_labels(rng, n, 4);
    a.sort_unstable();
    let c: Label = rng.gen_range(1..=n as Label);
    let v = s_pair(t, a[0], c) * t.r(&[a[1], a[2], a[3]]) - s_pair(t, a[1], c) * t.r(&[a[0], a[2], a[3]])
        + s_pair(t, a[2], c) * t.r(&[a[0], a[1], a[3]])
        - s_pair(t, a[3], c) * t.r(&[a[0], a[1], a[2]]);
    zero_or(v, &format!("type II a={a:?} c={c}"))
}

fn check_sii(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    let t1 = t.matrices[0].trace();
    zero_or(t.r(&[1, 1]) - (q(2) - half() * &t1 * &t1), "s_ii")
}

fn check_pair_expansion(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    let t12 = -t.matrices[0].mul(&t.matrices[1]).trace();
    let v = t.r(&[1, 2]) - (t12 + half() * t.matrices[0].trace() * t.matrices[1].trace());
    zero_or(v, "pair expansion")
}

fn check_four_point_macro(t: &MatrixTuple, _: &mut ChaCha8Rng) -> Option<String> {
    let e = crate::algebra::s4_macro(1, 2, 3, 4).unwrap();
    zero_or(eval_element_q1(&e, t) - t.r(&[1, 2, 3, 4]), "four-point macro")
}

const IDENTITIES: &[(&str, Check)] = &[
    ("ab-anticommutator", check_ab),
    ("traceless-triple-product", check_triple_product),
    ("skew-trace", check_skew),
    ("fundamental", check_fundamental),
    ("four-element-trace", check_four_trace),
    ("six-trace-1", check_six_trace_1),
    ("six-trace-2", check_six_trace_2),
    ("six-trace-3", check_six_trace_3),
    ("classical-type-one", check_type_one),
    ("classical-type-two", check_type_two),
    ("classical-sii", check_sii),
    ("pair-expansion", check_pair_expansion),
    ("four-point-macro", check_four_point_macro),
];

/// Names of the identities checked by [`check_matrix_identities`].
pub fn identity_names() -> Vec<&'static str> {
    IDENTITIES.iter().map(|(n, _)| *n).collect()
}

/// Checks every matrix/trace identity exactly on `trials` six-matrix tuples.
pub fn check_matrix_identities(trials: usize, seed: u64) -> Vec<IdentityResult> {
    let tuples = sample_tuples(6, trials, seed);
    IDENTITIES
        .par_iter()
        .enumerate()
        .map(|(k, (name, check))| {
            let mut failures = 0;
            let mut witness = None;
            for (i, t) in tuples.iter().enumerate() {
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed ^ (k as u64) << 32, i as u64));
                if let Some(w) = check(t, &mut rng) {
                    failures += 1;
                    witness.get_or_insert(format!("trial {i}: {w}"));
                }
            }
            IdentityResult { name, trials, failures, witness }
        })
        .collect()
}

/// Commutative monomial: sorted multiset of generators.
pub type Monomial = SmallVec<[Gen; 8]>;

/// Commutative polynomial over `Q` in the generators (the `q = 1` world).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommPoly(pub BTreeMap<Monomial, Q>);

impl CommPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(), c);
        p
    }

    pub fn gen(g: Gen) -> Self {
        let mut p = Self::zero();
        p.add_term(SmallVec::from_slice(&[g]), Q::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(m).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &CommPoly) -> CommPoly {
        let mut p = self.clone();
        for (m, c) in &o.0 {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, k: &Q) -> CommPoly {
        let mut p = CommPoly::zero();
        for (m, c) in &self.0 {
            p.add_term(m.clone(), c * k);
        }
        p
    }

    pub fn sub(&self, o: &CommPoly) -> CommPoly {
        self.add(&o.scale(&q(-1)))
    }

    pub fn mul(&self, o: &CommPoly) -> CommPoly {
        let mut p = CommPoly::zero();
        for (ma, ca) in &self.0 {
            for (mb, cb) in &o.0 {
                let mut m: Monomial = ma.iter().chain(mb.iter()).copied().collect();
                m.sort_unstable();
                p.add_term(m, ca * cb);
            }
        }
        p
    }

    pub fn eval(&self, tup: &MatrixTuple) -> Q {
        self.0
            .iter()
            .map(|(m, c)| m.iter().fold(c.clone(), |acc, g| acc * tup.eval_gen(g).expect("label in range")))
            .sum()
    }

    /// Label occurrence counts of the largest-degree monomials, per label.
    pub fn multidegree(&self, n: usize) -> Vec<u32> {
        let mut md = vec![0u32; n];
        for m in self.0.keys() {
            let mut cur = vec![0u32; n];
            for g in m {
                for l in g.labels() {
                    cur[l as usize - 1] += 1;
                }
            }
            for (a, b) in md.iter_mut().zip(cur) {
                *a = (*a).max(b);
            }
        }
        md
    }
}

/// Symbolic specialization `q^{1/2} = sign` into the commutative ring.
pub fn specialize(e: &Element, sign: i32) -> CommPoly {
    let mut p = CommPoly::zero();
    for (w, c) in e.terms() {
        let mut m: Monomial = w.gens().iter().copied().collect();
        m.sort_unstable();
        p.add_term(m, c.spec_at(sign));
    }
    p
}

/// Classical `s_ab` as a polynomial; equal labels give `2 − ½t_a²`.
pub fn classical_pair(a: Label, b: Label) -> CommPoly {
    if a == b {
        let mut p = CommPoly::constant(q(2));
        p.add_term(SmallVec::from_slice(&[Gen::T(a), Gen::T(a)]), -half());
        p
    } else {
        CommPoly::gen(Gen::S2(a.min(b), a.max(b)))
    }
}

fn triple(a: [Label; 3]) -> CommPoly {
    CommPoly::gen(Gen::make(&a.map(u32::from), Label::MAX as u32).expect("distinct labels"))
}

/// `2 s_a s_b − det[s_{a_i b_j}]` for increasing triples `a`, `b`.
pub fn classical_type_one(a: [Label; 3], b: [Label; 3]) -> CommPoly {
    let m = |i: usize, j: usize| classical_pair(a[i], b[j]);
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| m(r1, c1).mul(&m(r2, c2)).sub(&m(r1, c2).mul(&m(r2, c1)));
    let det = m(0, 0)
        .mul(&minor(1, 2, 1, 2))
        .sub(&m(0, 1).mul(&minor(1, 2, 0, 2)))
        .add(&m(0, 2).mul(&minor(1, 2, 0, 1)));
    triple(a).mul(&triple(b)).scale(&q(2)).sub(&det)
}

/// `Σ_k (−1)^k s_{a_k c} s_{a∖a_k}` for increasing `a` and any `c`.
pub fn classical_type_two(a: [Label; 4], c: Label) -> CommPoly {
    let mut p = CommPoly::zero();
    for k in 0..4 {
        let rest: Vec<Label> = (0..4).filter(|&j| j != k).map(|j| a[j]).collect();
        let term = classical_pair(a[k], c).mul(&triple([rest[0], rest[1], rest[2]]));
        p = if k % 2 == 0 { p.add(&term) } else { p.sub(&term) };
    }
    p
}

/// Every classical type I and type II relation on `labels` whose label
/// counts fit inside `bound` (indexed by label − 1).
pub fn classical_relations(labels: &[Label], bound: &[u32]) -> Vec<(String, CommPoly)> {
    let fits = |p: &CommPoly| p.multidegree(bound.len()).iter().zip(bound).all(|(c, b)| c <= b);
    let triples = combos(labels, 3);
    let mut out = Vec::new();
    for (i, a) in triples.iter().enumerate() {
        for b in &triples[i..] {
            let p = classical_type_one([a[0], a[1], a[2]], [b[0], b[1], b[2]]);
            if fits(&p) {
                out.push((format!("typeI{a:?}{b:?}"), p));
            }
        }
    }
    for a in combos(labels, 4) {
        for &c in labels {
            let p = classical_type_two([a[0], a[1], a[2], a[3]], c);
            if fits(&p) {
                out.push((format!("typeII{a:?}c{c}"), p));
            }
        }
    }
    out
}

fn combos(labels: &[Label], k: usize) -> Vec<Vec<Label>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..labels.len() {
        for mut rest in combos(&labels[i + 1..], k - 1) {
            rest.insert(0, labels[i]);
            out.push(rest);
        }
    }
    out
}

/// Solves `target = Σ λ_k basis_k` over `Q`; returns the coefficients when
/// `target` lies in the span.
pub fn solve_in_span(target: &CommPoly, basis: &[CommPoly]) -> Option<Vec<Q>> {
    // Column-oriented elimination: rows are monomials, columns are basis
    // vectors plus the target.
    let mut monos: Vec<&Monomial> = target.0.keys().chain(basis.iter().flat_map(|b| b.0.keys())).collect();
    monos.sort();
    monos.dedup();
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let cols = basis.len();
    let mut rows: Vec<Vec<Q>> = vec![vec![Q::zero(); cols + 1]; monos.len()];
    for (j, b) in basis.iter().enumerate() {
        for (m, c) in &b.0 {
            rows[index[m]][j] = c.clone();
        }
    }
    for (m, c) in &target.0 {
        rows[index[m]][cols] = c.clone();
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut lambda = vec![Q::zero(); cols];
    for (i, &col) in pivots.iter().enumerate() {
        lambda[col] = rows[i][cols].clone();
    }
    Some(lambda)
}

/// `(value at q^{1/2}=1, value at q^{1/2}=−1)` of a ring element.
pub fn spec_pair(c: &RingElem) -> (Q, Q) {
    (c.spec_at(1), c.spec_at(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn tuple_with_first(m: [[i64; 2]; 2], n: usize) -> MatrixTuple {
        let mut ms = vec![Mat2::from_ints(m)];
        let extra = MatrixTuple::sample(n, 11, DEFAULT_COMPLEXITY);
        ms.extend(extra.matrices.into_iter().skip(1));
        MatrixTuple::from_matrices(ms, 0)
    }

    #[test]
    fn random_matrices_are_unimodular_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            assert_eq!(random_sl2(&mut rng, 5).det(), q(1));
        }
        let a = MatrixTuple::sample(4, 99, 4);
        let b = MatrixTuple::sample(4, 99, 4);
        assert_eq!(a.matrices, b.matrices);
    }

    #[test]
    #[should_panic]
    fn zero_complexity_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        random_sl2(&mut rng, 0);
    }

    #[test]
    fn generator_values() {
        let t = tuple_with_first([[2, 1], [1, 1]], 3);
        assert_eq!(t.eval_gen(&Gen::T(1)), Some(&q(-3)));
        assert_eq!(t.r(&[1, 1]), Q::new(BigInt::from(-5), BigInt::from(2)));
        assert_eq!(t.r(&[1, 2]), t.r(&[2, 1]));
        assert_eq!(t.eval_gen(&Gen::S2(1, 2)), Some(&t.r(&[1, 2])));
        assert_eq!(t.eval_gen(&Gen::T(4)), None);
    }

    #[test]
    fn simple_relations_vanish() {
        let t = MatrixTuple::sample(4, 5, 4);
        let e = parse("t2 s13 - s13 t2", 4).unwrap();
        assert!(eval_element_q1(&e, &t).is_zero());
        let e = parse("s24 s13 - s13 s24 - (q^2 - q^-2)(s14 s23 - s12 s34)", 4).unwrap();
        assert!(eval_element_q1(&e, &t).is_zero());
        let bad = parse("s24 s13 - s13 s24 - (q^2 - q^-2)(s14 s23 - s12 s34) + s12 s34", 4).unwrap();
        assert!(!eval_element_q1(&bad, &t).is_zero());
        let m = parse("q^{1/2} s12 s23", 4).unwrap();
        assert_eq!(eval_element_q1(&m.mirror(), &t), eval_element_q1(&m, &t));
    }

    #[test]
    fn matrix_identities_hold() {
        for r in check_matrix_identities(10, 1) {
            assert!(r.passed(), "{} failed: {:?}", r.name, r.witness);
        }
    }

    #[test]
    fn classical_relations_vanish_numerically() {
        let t = MatrixTuple::sample(6, 2, 4);
        let rels = classical_relations(&[1, 2, 3, 4, 5, 6], &[2; 6]);
        assert!(!rels.is_empty());
        for (name, p) in rels {
            assert!(p.eval(&t).is_zero(), "{name}");
        }
    }

    #[test]
    fn span_solver() {
        let a = CommPoly::gen(Gen::T(1));
        let b = CommPoly::gen(Gen::T(2));
        let target = a.scale(&q(3)).sub(&b);
        let l = solve_in_span(&target, &[a.clone(), b.clone(), a.add(&b)]).unwrap();
        let recon = a.scale(&l[0]).add(&b.scale(&l[1])).add(&a.add(&b).scale(&l[2]));
        assert_eq!(recon, target);
        assert!(solve_in_span(&CommPoly::gen(Gen::T(3)), &[a, b]).is_none());
    }
}
