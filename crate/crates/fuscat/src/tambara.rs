//! Tambara-Yamagami fusion rings over elementary abelian 2-groups E_n,
//! their nondegenerate symmetric bicharacters, braiding data (q, alpha, tau),
//! the Ising catalog, and equivalence classification under Aut(E_n).
//!
//! Group elements of E_n are bitmasks 0..2^n; generator g_j is bit j-1.

use serde::Serialize;

use crate::cyclo::{zeta, Cyc};
use crate::fusion::{e_group_label, FusionRing, Subring};
use crate::modular::Premodular;
use crate::Error;

/// Symmetric nondegenerate bicharacter on E_n with values +-1.
/// `k` records the diagonal convention: chi^0 has chi(g_j, g_j) = 1 on
/// generators (n even only), chi^1 has chi(g_j, g_j) = -1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bicharacter {
    pub n: usize,
    pub k: u8,
    /// F_2 Gram matrix rows: bilin[i] is a bitmask, chi(g_i, g_j) = (-1)^bit.
    bilin: Vec<usize>,
}

impl Bicharacter {
    pub fn sign(&self, g: usize, h: usize) -> i8 {
        let mut parity = 0u32;
        for (i, row) in self.bilin.iter().enumerate() {
            if g >> i & 1 == 1 {
                parity ^= (row & h).count_ones() & 1;
            }
        }
        if parity & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn value(&self, g: usize, h: usize) -> Cyc {
        Cyc::from_int(self.sign(g, h) as i64)
    }

    pub fn size(&self) -> usize {
        1 << self.n
    }
}

/// The standard form chi_n^k. chi^1 is the identity Gram matrix; chi^0 is a
/// sum of hyperbolic planes and requires n even.
pub fn bicharacter(n: usize, k: u8) -> Result<Bicharacter, Error> {
    if n == 0 || n > 16 {
        return Err(Error::Invalid("rank n out of range".into()));
    }
    match k {
        1 => Ok(Bicharacter { n, k, bilin: (0..n).map(|j| 1usize << j).collect() }),
        0 => {
            if n % 2 != 0 {
                return Err(Error::Invalid(
                    "chi^0 requires even rank (no nondegenerate alternating form otherwise)".into(),
                ));
            }
            let bilin = (0..n).map(|j| 1usize << (j ^ 1)).collect();
            Ok(Bicharacter { n, k, bilin })
        }
        _ => Err(Error::Invalid("k must be 0 or 1".into())),
    }
}

/// All 2^n quadratic forms with polarization chi: q(g)q(h)q(g+h)^{-1} = chi(g,h),
/// q(0) = 1. Forms are returned as full value vectors over bitmasks, ordered
/// by the basis sign choices. Every returned form is re-verified against the
/// polarization identity on all pairs.
pub fn quadratic_forms(chi: &Bicharacter) -> Vec<Vec<Cyc>> {
    let n = chi.n;
    let size = chi.size();
    let mut out = Vec::with_capacity(1 << n);
    for signs in 0..(1u32 << n) {
        let mut q = vec![Cyc::zero(); size];
        q[0] = Cyc::one();
        for j in 0..n {
            let base = if chi.sign(1 << j, 1 << j) == 1 { Cyc::one() } else { Cyc::i() };
            let v = if signs >> j & 1 == 1 { base.neg() } else { base };
            q[1 << j] = v;
        }
        // Extend multiplicatively: q(g + g_j) = q(g) q(g_j) chi(g, g_j).
        for g in 1..size {
            if g.count_ones() <= 1 {
                continue;
            }
            let j = g.trailing_zeros() as usize;
            let rest = g & (g - 1);
            q[g] = q[rest].mul(&q[1 << j]).mul(&chi.value(rest, 1 << j));
        }
        debug_assert!(polarizes(&q, chi));
        out.push(q);
    }
    out
}

pub fn polarizes(q: &[Cyc], chi: &Bicharacter) -> bool {
    if !q[0].is_one() {
        return false;
    }
    let size = chi.size();
    for g in 0..size {
        for h in 0..size {
            let lhs = q[g].mul(&q[h]);
            let rhs = q[g ^ h].mul(&chi.value(g, h));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The Tambara-Yamagami fusion ring on E_n: invertibles in bitmask order,
/// then the noninvertible object x with x (.) x = sum of all invertibles.
pub fn ty_ring(n: usize) -> Result<FusionRing, Error> {
    if n == 0 || n > 16 {
        return Err(Error::Invalid("rank n out of range".into()));
    }
    let size = 1usize << n;
    let x = size;
    let mut labels: Vec<String> = (0..size).map(e_group_label).collect();
    labels.push("x".into());
    let dual: Vec<usize> = (0..=size).collect();
    let mut entries = Vec::new();
    for g in 0..size {
        for h in 0..size {
            entries.push((g, h, g ^ h, 1));
        }
        entries.push((g, x, x, 1));
        entries.push((x, g, x, 1));
        entries.push((x, x, g, 1));
    }
    let mut fpdim = vec![Cyc::one(); size];
    fpdim.push(Cyc::sqrt_of_int(1 << n)?);
    FusionRing::with_fpdim(labels, 0, dual, &entries, fpdim)
}

/// Braiding data on the Tambara-Yamagami ring over E_n: the bicharacter,
/// the extension scalar tau = +-1/sqrt(2^n), a compatible quadratic form q,
/// and alpha with alpha^2 = tau * sum_g q(g).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidingData {
    pub chi: Bicharacter,
    pub tau: Cyc,
    pub q: Vec<Cyc>,
    pub alpha: Cyc,
}

pub fn tau_value(n: usize, sign: i64) -> Cyc {
    let root = Cyc::sqrt_of_int(1u64 << n).expect("positive");
    let inv = root.inverse().expect("nonzero");
    if sign >= 0 {
        inv
    } else {
        inv.neg()
    }
}

/// The distinguished square root of an 8th root of unity: the one lying in
/// the closed right half plane (positive imaginary axis included). The two
/// sign choices in `make_braiding` then yield alpha and -alpha.
fn principal_sqrt(a2: &Cyc) -> Result<Cyc, Error> {
    let (d, kk) = a2
        .as_root_power()
        .ok_or_else(|| Error::Invalid("alpha^2 is not a root of unity".into()))?;
    if 8 % d != 0 {
        return Err(Error::Invalid(format!("alpha^2 has order {d}, not dividing 8")));
    }
    let e16 = kk * (16 / d); // a2 = zeta_16^e16, e16 even
    let m = e16 / 2;
    for cand in [m % 16, (m + 8) % 16] {
        // Principal sector: exponents -3..=4 mod 16.
        if cand <= 4 || cand >= 13 {
            return Ok(zeta(16, cand as i64));
        }
    }
    unreachable!("one of the two square roots lies in the principal sector")
}

impl BraidingData {
    /// Assemble and verify braiding data from exact parts.
    pub fn assemble(chi: Bicharacter, tau: Cyc, q: Vec<Cyc>, alpha: Cyc) -> Result<BraidingData, Error> {
        let size = chi.size();
        if q.len() != size {
            return Err(Error::Invalid("q vector has wrong length".into()));
        }
        if !polarizes(&q, &chi) {
            return Err(Error::Invalid("q does not polarize chi".into()));
        }
        if tau.mul(&tau) != Cyc::from_ratio(1, 1 << chi.n) {
            return Err(Error::Invalid("tau^2 != 1/|E_n|".into()));
        }
        let mut total = Cyc::zero();
        for v in &q {
            total = total.add(v);
        }
        if alpha.mul(&alpha) != tau.mul(&total) {
            return Err(Error::Invalid("alpha^2 != tau * sum q(g)".into()));
        }
        Ok(BraidingData { chi, tau, q, alpha })
    }

    pub fn n(&self) -> usize {
        self.chi.n
    }

    /// Sign of tau as +-1.
    pub fn tau_sign(&self) -> i64 {
        let root = Cyc::sqrt_of_int(1u64 << self.chi.n).expect("positive");
        let s = self.tau.mul(&root);
        if s.is_one() {
            1
        } else {
            -1
        }
    }

    /// Twist of the noninvertible object: the conjugate of alpha, with an
    /// extra sign(tau) in the chi^1 family. The sign factor is pinned by
    /// multiplicativity of twists across Deligne products of Ising factors
    /// and by triviality on the Tannakian chi^0 rows.
    pub fn theta_x(&self) -> Cyc {
        let base = self.alpha.conj();
        if self.chi.k == 1 && self.tau_sign() < 0 {
            base.neg()
        } else {
            base
        }
    }

    /// Twist of an invertible: q(g)^2 = chi(g,g).
    pub fn theta_g(&self, g: usize) -> Cyc {
        self.q[g].mul(&self.q[g])
    }

    /// Sign delta_j = q(g_j) / sqrt(chi(g_j,g_j)) with sqrt(-1) = i.
    pub fn delta(&self, j: usize) -> i64 {
        let qj = &self.q[1 << j];
        let base = if self.chi.sign(1 << j, 1 << j) == 1 { Cyc::one() } else { Cyc::i() };
        if *qj == base {
            1
        } else {
            -1
        }
    }

    /// Sign epsilon: +1 when alpha is the principal square root.
    pub fn epsilon(&self) -> i64 {
        let a2 = self.alpha.mul(&self.alpha);
        if self.alpha == principal_sqrt(&a2).expect("valid data") {
            1
        } else {
            -1
        }
    }

    /// All q(g)^2 trivial and theta_x = +-1: the braiding is symmetric.
    pub fn is_symmetric(&self) -> bool {
        let all_q2 = (0..self.chi.size()).all(|g| self.theta_g(g).is_one());
        let tx = self.theta_x();
        all_q2 && (tx.is_one() || tx == Cyc::from_int(-1))
    }

    /// Premodular data on the TY ring: theta_g = q(g)^2, theta_x as above,
    /// S derived from the balancing equation.
    pub fn to_premodular(&self) -> Premodular {
        let ring = ty_ring(self.chi.n).expect("valid n");
        let size = self.chi.size();
        let mut theta: Vec<Cyc> = (0..size).map(|g| self.theta_g(g)).collect();
        theta.push(self.theta_x());
        Premodular::new(ring, theta).expect("consistent TY data")
    }

    /// Subring of the TY ring centralizing everything: invertibles with
    /// q(g)^2 = 1, plus x when the braiding is symmetric.
    pub fn symmetric_center(&self) -> Subring {
        let size = self.chi.size();
        let mut indices: Vec<usize> = (0..size).filter(|&g| self.theta_g(g).is_one()).collect();
        if self.is_symmetric() {
            indices.push(size);
        }
        Subring { indices }
    }

    /// Stabilizer of q inside the chi-preserving automorphisms of E_n.
    pub fn braided_autos(&self) -> Vec<Vec<usize>> {
        gl_matrices(self.chi.n)
            .into_iter()
            .filter(|m| {
                let size = self.chi.size();
                (0..size).all(|g| self.q[apply_matrix(m, g)] == self.q[g])
            })
            .collect()
    }
}

/// Construct braiding data from the standard parameters: tau sign, a
/// quadratic form (full vector or basis values), and the alpha sign choice.
pub fn make_braiding(
    n: usize,
    k: u8,
    tau_sign: i64,
    q_in: &[Cyc],
    alpha_sign: i64,
) -> Result<BraidingData, Error> {
    let chi = bicharacter(n, k)?;
    let size = chi.size();
    let q: Vec<Cyc> = if q_in.len() == size {
        q_in.to_vec()
    } else if q_in.len() == n {
        let mut q = vec![Cyc::zero(); size];
        q[0] = Cyc::one();
        for j in 0..n {
            q[1 << j] = q_in[j].clone();
        }
        for g in 1..size {
            if g.count_ones() <= 1 {
                continue;
            }
            let j = g.trailing_zeros() as usize;
            let rest = g & (g - 1);
            q[g] = q[rest].mul(&q[1 << j]).mul(&chi.value(rest, 1 << j));
        }
        q
    } else {
        return Err(Error::Invalid("q must have n basis values or 2^n values".into()));
    };
    let tau = tau_value(n, tau_sign);
    let mut total = Cyc::zero();
    for v in &q {
        total = total.add(v);
    }
    let a2 = tau.mul(&total);
    let principal = principal_sqrt(&a2)?;
    let alpha = if alpha_sign >= 0 { principal } else { principal.neg() };
    BraidingData::assemble(chi, tau, q, alpha)
}

/// Witnesses in Aut(E_n) = GL(n, 2); a matrix is the list of basis-vector
/// images as bitmasks.
pub fn apply_matrix(cols: &[usize], g: usize) -> usize {
    let mut out = 0;
    for (j, &c) in cols.iter().enumerate() {
        if g >> j & 1 == 1 {
            out ^= c;
        }
    }
    out
}

pub fn compose_matrices(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a o b)(e_j) = a(b(e_j)).
    b.iter().map(|&img| apply_matrix(a, img)).collect()
}

pub fn gl_matrices(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cols = Vec::with_capacity(n);
    extend_gl(n, &mut cols, &mut out);
    out
}

fn extend_gl(n: usize, cols: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cols.len() == n {
        out.push(cols.clone());
        return;
    }
    for cand in 1..(1usize << n) {
        if in_span(cols, cand) {
            continue;
        }
        cols.push(cand);
        extend_gl(n, cols, out);
        cols.pop();
    }
}

fn in_span(cols: &[usize], v: usize) -> bool {
    let mut basis: Vec<usize> = Vec::new();
    for &c in cols {
        let mut c = c;
        for &b in &basis {
            c = c.min(c ^ b);
        }
        if c != 0 {
            basis.push(c);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    let mut v = v;
    for &b in &basis {
        v = v.min(v ^ b);
    }
    v == 0
}

/// Equivalence of braidings on the same C(chi, tau): exact match of tau and
/// alpha plus an automorphism transporting q. Returns the witness matrix.
pub fn braiding_equivalent(a: &BraidingData, b: &BraidingData) -> Option<Vec<usize>> {
    if a.chi != b.chi || a.tau != b.tau || a.alpha != b.alpha {
        return None;
    }
    let mut am: Vec<_> = a.q.iter().map(Cyc::lex_key).collect();
    let mut bm: Vec<_> = b.q.iter().map(Cyc::lex_key).collect();
    am.sort();
    bm.sort();
    if am != bm {
        return None;
    }
    let size = a.chi.size();
    gl_matrices(a.chi.n)
        .into_iter()
        .find(|m| (0..size).all(|g| b.q[apply_matrix(m, g)] == a.q[g]))
}

/// All braidings on C(chi_n^k, tau) over both tau signs, in a stable order.
pub fn enumerate_braidings(n: usize, k: u8) -> Result<Vec<BraidingData>, Error> {
    let chi = bicharacter(n, k)?;
    let forms = quadratic_forms(&chi);
    let mut out = Vec::new();
    for tau_sign in [1i64, -1] {
        for q in &forms {
            for alpha_sign in [1i64, -1] {
                out.push(make_braiding(n, k, tau_sign, q, alpha_sign)?);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct BraidingClass {
    pub representative: BraidingData,
    /// Indices into the `enumerate_braidings` listing.
    pub members: Vec<usize>,
    pub symmetric: bool,
}

/// Group all braidings into Aut(E_n)-equivalence classes.
pub fn enumerate_braiding_classes(n: usize, k: u8) -> Result<Vec<BraidingClass>, Error> {
    let all = enumerate_braidings(n, k)?;
    let mut class_of = vec![usize::MAX; all.len()];
    let mut classes: Vec<BraidingClass> = Vec::new();
    for (i, b) in all.iter().enumerate() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[i] = id;
        let mut members = vec![i];
        for (j, c) in all.iter().enumerate().skip(i + 1) {
            if class_of[j] == usize::MAX && braiding_equivalent(b, c).is_some() {
                class_of[j] = id;
                members.push(j);
            }
        }
        classes.push(BraidingClass { representative: b.clone(), members, symmetric: b.is_symmetric() });
    }
    Ok(classes)
}

/// One row of the Ising catalog, indexed by the primitive 16th root alpha.
#[derive(Debug, Clone, Serialize)]
pub struct IsingEntry {
    /// Odd exponent j with alpha = zeta_16^j.
    pub j: u64,
    pub data: BraidingData,
}

/// The 8 Ising braidings, ordered by the exponent of alpha.
pub fn ising_catalog() -> Vec<IsingEntry> {
    let mut entries = Vec::new();
    for tau_sign in [1i64, -1] {
        for qv in [Cyc::i(), Cyc::i().neg()] {
            for alpha_sign in [1i64, -1] {
                let data = make_braiding(1, 1, tau_sign, std::slice::from_ref(&qv), alpha_sign).expect("valid");
                let (ord, j) = data.alpha.as_root_power().expect("root of unity");
                assert_eq!(ord, 16, "Ising alpha is a primitive 16th root");
                entries.push(IsingEntry { j, data });
            }
        }
    }
    entries.sort_by_key(|e| e.j);
    entries
}

/// Catalog lookup by odd index 1..15.
pub fn ising(j: u64) -> Result<BraidingData, Error> {
    if j % 2 == 0 || j > 15 {
        return Err(Error::Invalid(format!("Ising index must be odd in 1..15, got {j}")));
    }
    Ok(ising_catalog().into_iter().find(|e| e.j == j).expect("all odd j occur").data)
}

/// A labeled row of the conventional E_2 classification tables.
pub struct LabeledBraiding {
    pub label: String,
    pub data: BraidingData,
}

fn row(label: &str, n: usize, k: u8, tau_sign: i64, deltas: &[i64], eps: i64) -> LabeledBraiding {
    let base = if k == 1 { Cyc::i() } else { Cyc::one() };
    let q: Vec<Cyc> = deltas
        .iter()
        .map(|&d| if d >= 0 { base.clone() } else { base.neg() })
        .collect();
    let data = make_braiding(n, k, tau_sign, &q, eps).expect("reference row data");
    debug_assert_eq!(data.epsilon(), eps);
    LabeledBraiding { label: label.into(), data }
}

/// The four symmetric chi_2^0 braidings.
pub fn chi20_symmetric_rows() -> Vec<LabeledBraiding> {
    vec![
        row("Rep(D4,e)", 2, 0, 1, &[1, 1], 1),
        row("Rep(D4,z)", 2, 0, 1, &[1, 1], -1),
        row("Rep(Q8,e)", 2, 0, -1, &[-1, -1], 1),
        row("Rep(Q8,z)", 2, 0, -1, &[-1, -1], -1),
    ]
}

/// The four nonsymmetric chi_2^0 braidings.
pub fn chi20_nonsymmetric_rows() -> Vec<LabeledBraiding> {
    vec![
        row("K", 2, 0, 1, &[-1, -1], 1),
        row("K^rev", 2, 0, 1, &[-1, -1], -1),
        row("Z(VecQ8^g)_ad", 2, 0, -1, &[1, 1], 1),
        row("Z(VecQ8^g)_ad^rev", 2, 0, -1, &[1, 1], -1),
    ]
}

/// The twelve chi_2^1 braidings, labeled by their Ising-product realization.
pub fn chi21_rows() -> Vec<LabeledBraiding> {
    vec![
        row("(I1xI1)_Q", 2, 1, 1, &[1, 1], 1),
        row("(I5xI5)_Q", 2, 1, 1, &[1, 1], -1),
        row("(I1xI15)_Q", 2, 1, 1, &[1, -1], 1),
        row("(I1xI7)_Q", 2, 1, 1, &[1, -1], -1),
        row("(I7xI7)_Q", 2, 1, 1, &[-1, -1], 1),
        row("(I3xI3)_Q", 2, 1, 1, &[-1, -1], -1),
        row("(I1xI13)_Q", 2, 1, -1, &[1, 1], 1),
        row("(I1xI5)_Q", 2, 1, -1, &[1, 1], -1),
        row("(I1xI3)_Q", 2, 1, -1, &[1, -1], 1),
        row("(I1xI11)_Q", 2, 1, -1, &[1, -1], -1),
        row("(I3xI15)_Q", 2, 1, -1, &[-1, -1], 1),
        row("(I3xI7)_Q", 2, 1, -1, &[-1, -1], -1),
    ]
}

/// Coverage note for the E_2 classification report: the enumeration yields
/// 8 + 12 = 20 classes in total; a sometimes-quoted total of 16 undercounts
/// the chi^1 family, which has 6 classes per tau sign.
pub const E2_CLASS_COUNT_NOTE: &str =
    "computed E_2 totals: 8 classes over chi_2^0 (4 symmetric + 4 nonsymmetric) and 12 over \
     chi_2^1, i.e. 20 in total; a quoted total of 16 undercounts the chi_2^1 family";
