//! Fusion rings: nonnegative-integer structure constants with unit and
//! duality, exact Frobenius-Perron dimensions, universal gradings, and
//! subring machinery.
//!
//! Only commutative rings are supported; everything in scope underlies a
//! braided category. Dimensions are recognized exactly in the lattice
//! a + b*sqrt2, which covers the whole weakly-integral corpus here.

use std::collections::{HashMap, HashSet};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::{self, AbelianGroup};
use crate::cyclo::{rat, Cyc};
use crate::Error;

/// Sparse fusion ring. `rows[x][y]` lists the simple constituents of
/// x tensor y as sorted `(z, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    rows: Vec<Vec<Vec<(usize, u64)>>>,
    fpdim: Vec<Cyc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl AxiomCheck {
    fn pass() -> AxiomCheck {
        AxiomCheck { passed: true, counterexample: None }
    }
    fn fail(msg: String) -> AxiomCheck {
        AxiomCheck { passed: false, counterexample: Some(msg) }
    }
}

/// Per-axiom validation report with first counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingValidation {
    pub unit: AxiomCheck,
    pub duality: AxiomCheck,
    pub associativity: AxiomCheck,
    pub commutativity: AxiomCheck,
    pub fpdim_hom: AxiomCheck,
}

impl RingValidation {
    pub fn all_passed(&self) -> bool {
        self.unit.passed
            && self.duality.passed
            && self.associativity.passed
            && self.commutativity.passed
            && self.fpdim_hom.passed
    }
}

/// A subset of object indices closed under tensor support and duality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subring {
    pub indices: Vec<usize>,
}

impl Subring {
    pub fn rank(&self) -> usize {
        self.indices.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.indices.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.indices.binary_search(&x).is_ok()
    }

    pub fn fpdim(&self, ring: &FusionRing) -> Cyc {
        let mut acc = Cyc::zero();
        for &i in &self.indices {
            acc = acc.add(&ring.fpdim(i).mul(ring.fpdim(i)));
        }
        acc
    }

    pub fn intersect(&self, other: &Subring) -> Subring {
        let set: HashSet<usize> = other.indices.iter().copied().collect();
        Subring { indices: self.indices.iter().copied().filter(|i| set.contains(i)).collect() }
    }
}

/// Universal grading: quotient of the ring by its adjoint subring.
#[derive(Debug, Clone, Serialize)]
pub struct Grading {
    pub group: AbelianGroup,
    /// Raw component id per object; coordinates are `group.coords[id]`.
    pub component_index: Vec<usize>,
    /// Object indices per component id.
    pub components: Vec<Vec<usize>>,
}

impl Grading {
    pub fn component_of(&self, x: usize) -> &[u64] {
        &self.group.coords[self.component_index[x]]
    }
}

impl FusionRing {
    /// Build a ring from sparse tensor entries, computing exact FP-dimensions.
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        entries: &[(usize, usize, usize, u64)],
    ) -> Result<FusionRing, Error> {
        let ring = Self::assemble(labels, unit, dual, entries)?;
        let dims = ring.perron_dims()?;
        Ok(FusionRing { fpdim: dims, ..ring })
    }

    /// Build with dimensions supplied (they are verified exactly).
    pub fn with_fpdim(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        entries: &[(usize, usize, usize, u64)],
        fpdim: Vec<Cyc>,
    ) -> Result<FusionRing, Error> {
        let mut ring = Self::assemble(labels, unit, dual, entries)?;
        if fpdim.len() != ring.rank() {
            return Err(Error::Invalid("fpdim length mismatch".into()));
        }
        ring.fpdim = fpdim;
        if let Some(cx) = ring.check_fpdim_hom() {
            return Err(Error::DimRecognition(cx));
        }
        Ok(ring)
    }

    fn assemble(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        entries: &[(usize, usize, usize, u64)],
    ) -> Result<FusionRing, Error> {
        let r = labels.len();
        if r == 0 || unit >= r || dual.len() != r {
            return Err(Error::Invalid("bad ring shape".into()));
        }
        if dual.iter().any(|&d| d >= r) {
            return Err(Error::Invalid("dual index out of range".into()));
        }
        if (0..r).any(|x| dual[dual[x]] != x) {
            return Err(Error::Invalid("dual is not an involution".into()));
        }
        let mut rows = vec![vec![Vec::new(); r]; r];
        for &(x, y, z, n) in entries {
            if x >= r || y >= r || z >= r {
                return Err(Error::Invalid("tensor index out of range".into()));
            }
            if n == 0 {
                continue;
            }
            rows[x][y].push((z, n));
        }
        for row in rows.iter_mut().flatten() {
            row.sort_unstable();
            for w in row.windows(2) {
                if w[0].0 == w[1].0 {
                    return Err(Error::Invalid("duplicate tensor entry".into()));
                }
            }
        }
        Ok(FusionRing { labels, unit, dual, rows, fpdim: Vec::new() })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual(&self, x: usize) -> usize {
        self.dual[x]
    }

    pub fn n(&self, x: usize, y: usize, z: usize) -> u64 {
        match self.rows[x][y].binary_search_by_key(&z, |e| e.0) {
            Ok(i) => self.rows[x][y][i].1,
            Err(_) => 0,
        }
    }

    pub fn support(&self, x: usize, y: usize) -> &[(usize, u64)] {
        &self.rows[x][y]
    }

    pub fn fpdim(&self, x: usize) -> &Cyc {
        &self.fpdim[x]
    }

    pub fn fpdims(&self) -> &[Cyc] {
        &self.fpdim
    }

    /// FPdim of the whole ring: sum of squared object dimensions.
    pub fn global_fpdim(&self) -> Cyc {
        let mut acc = Cyc::zero();
        for d in &self.fpdim {
            acc = acc.add(&d.mul(d));
        }
        acc
    }

    pub fn is_invertible(&self, x: usize) -> bool {
        self.fpdim[x].is_one()
    }

    /// Perron root of each fusion matrix, recognized exactly as a + b*sqrt2
    /// and then verified as a ring homomorphism. Recognition failure is a
    /// reported error.
    pub fn perron_dims(&self) -> Result<Vec<Cyc>, Error> {
        let r = self.rank();
        let sqrt2 = std::f64::consts::SQRT_2;
        let mut dims = Vec::with_capacity(r);
        for x in 0..r {
            let lambda = self.perron_root(x);
            let mut found = None;
            let amax = lambda.ceil() as i64 + 1;
            for a in 0..=amax {
                let rem = lambda - a as f64;
                let b = (rem / sqrt2).round();
                if b < 0.0 {
                    continue;
                }
                let err = (lambda - (a as f64 + b * sqrt2)).abs();
                if err < 1e-6 {
                    found = Some((a, b as i64));
                    break;
                }
            }
            let Some((a, b)) = found else {
                return Err(Error::DimRecognition(format!(
                    "object {} has Perron root {} outside Z + Z*sqrt2",
                    self.labels[x], lambda
                )));
            };
            let mut d = Cyc::from_int(a);
            if b != 0 {
                d = d.add(&Cyc::sqrt2().mul(&Cyc::from_int(b)));
            }
            dims.push(d);
        }
        let probe = FusionRing { fpdim: dims.clone(), ..self.clone() };
        if let Some(cx) = probe.check_fpdim_hom() {
            return Err(Error::DimRecognition(cx));
        }
        Ok(dims)
    }

    fn perron_root(&self, x: usize) -> f64 {
        let r = self.rank();
        let mut v = vec![1.0f64; r];
        let mut lambda = 0.0;
        for _ in 0..400 {
            // Apply N_x + I; the shift makes the iteration aperiodic.
            let mut w = v.clone();
            for y in 0..r {
                for &(z, m) in &self.rows[x][y] {
                    w[z] += m as f64 * v[y];
                }
            }
            let norm = w.iter().map(|t| t * t).sum::<f64>().sqrt();
            for t in w.iter_mut() {
                *t /= norm;
            }
            let mut aw = w.clone();
            for y in 0..r {
                for &(z, m) in &self.rows[x][y] {
                    aw[z] += m as f64 * w[y];
                }
            }
            let rq: f64 = w.iter().zip(aw.iter()).map(|(a, b)| a * b).sum();
            if (rq - 1.0 - lambda).abs() < 1e-13 {
                lambda = rq - 1.0;
                break;
            }
            lambda = rq - 1.0;
            v = w;
        }
        lambda
    }

    /// None if the homomorphism property holds, else a counterexample string.
    fn check_fpdim_hom(&self) -> Option<String> {
        if !self.fpdim[self.unit].is_one() {
            return Some(format!("d(unit) = {} != 1", self.fpdim[self.unit]));
        }
        for (x, d) in self.fpdim.iter().enumerate() {
            let (re, im) = d.approx();
            if im.abs() > 1e-9 || re < 1.0 - 1e-9 {
                return Some(format!("d({}) = {} is not a real >= 1", self.labels[x], d));
            }
            if *d != self.fpdim[self.dual[x]] {
                return Some(format!("d({}) != d(dual)", self.labels[x]));
            }
        }
        let r = self.rank();
        for x in 0..r {
            for y in 0..r {
                let mut rhs = Cyc::zero();
                for &(z, m) in &self.rows[x][y] {
                    rhs = rhs.add(&self.fpdim[z].mul(&Cyc::from_int(m as i64)));
                }
                let lhs = self.fpdim[x].mul(&self.fpdim[y]);
                if lhs != rhs {
                    return Some(format!(
                        "d({}) d({}) is not the dimension of their product",
                        self.labels[x], self.labels[y]
                    ));
                }
            }
        }
        None
    }

    /// Per-axiom validation with first counterexamples. Report-valued.
    pub fn validate(&self) -> RingValidation {
        let r = self.rank();
        let mut unit = AxiomCheck::pass();
        'unit: for y in 0..r {
            for z in 0..r {
                let expect = u64::from(y == z);
                if self.n(self.unit, y, z) != expect || self.n(y, self.unit, z) != expect {
                    unit = AxiomCheck::fail(format!("N(1,{y},{z}) violates the unit axiom"));
                    break 'unit;
                }
            }
        }
        let mut duality = AxiomCheck::pass();
        'dual: for x in 0..r {
            for y in 0..r {
                let expect = u64::from(y == self.dual[x]);
                if self.n(x, y, self.unit) != expect {
                    duality = AxiomCheck::fail(format!(
                        "N({x},{y},1) = {} but dual({x}) = {}",
                        self.n(x, y, self.unit),
                        self.dual[x]
                    ));
                    break 'dual;
                }
            }
        }
        let mut commutativity = AxiomCheck::pass();
        'comm: for x in 0..r {
            for y in 0..x {
                if self.rows[x][y] != self.rows[y][x] {
                    commutativity = AxiomCheck::fail(format!("N({x},{y},.) != N({y},{x},.)"));
                    break 'comm;
                }
            }
        }
        let associativity = self.check_associativity();
        let fpdim_hom = match self.check_fpdim_hom() {
            None => AxiomCheck::pass(),
            Some(cx) => AxiomCheck::fail(cx),
        };
        RingValidation { unit, duality, associativity, commutativity, fpdim_hom }
    }

    fn check_associativity(&self) -> AxiomCheck {
        let r = self.rank();
        // Objects that act as permutations admit a fast translated-row check.
        let perm_like: Vec<bool> = (0..r)
            .map(|y| {
                (0..r).all(|x| {
                    self.rows[x][y].len() == 1
                        && self.rows[x][y][0].1 == 1
                        && self.rows[y][x].len() == 1
                        && self.rows[y][x][0].1 == 1
                })
            })
            .collect();
        for x in 0..r {
            for y in 0..r {
                if perm_like[y] {
                    let xy = self.rows[x][y][0].0;
                    for z in 0..r {
                        let yz = self.rows[y][z][0].0;
                        if self.rows[xy][z] != self.rows[x][yz] {
                            return AxiomCheck::fail(format!("associativity fails at ({x},{y},{z})"));
                        }
                    }
                    continue;
                }
                let mut lhs: HashMap<(usize, usize), u64> = HashMap::new();
                for &(w, m1) in &self.rows[x][y] {
                    for z in 0..r {
                        for &(v, m2) in &self.rows[w][z] {
                            *lhs.entry((z, v)).or_insert(0) += m1 * m2;
                        }
                    }
                }
                let mut rhs: HashMap<(usize, usize), u64> = HashMap::new();
                for z in 0..r {
                    for &(w, m1) in &self.rows[y][z] {
                        for &(v, m2) in &self.rows[x][w] {
                            *rhs.entry((z, v)).or_insert(0) += m1 * m2;
                        }
                    }
                }
                if lhs != rhs {
                    let bad = lhs
                        .iter()
                        .find(|(k, v)| rhs.get(k) != Some(v))
                        .map(|(k, _)| *k)
                        .or_else(|| rhs.keys().find(|k| !lhs.contains_key(k)).copied())
                        .unwrap_or((0, 0));
                    return AxiomCheck::fail(format!(
                        "associativity fails at x={x}, y={y}, z={}, v={}",
                        bad.0, bad.1
                    ));
                }
            }
        }
        AxiomCheck::pass()
    }

    /// Smallest subset containing the seeds and the unit, closed under
    /// fusion support and duals. Fixed-point iteration on a finite rank.
    pub fn subring_generated(&self, seeds: &[usize]) -> Subring {
        let mut in_set = vec![false; self.rank()];
        in_set[self.unit] = true;
        for &s in seeds {
            in_set[s] = true;
        }
        loop {
            let members: Vec<usize> = (0..self.rank()).filter(|&i| in_set[i]).collect();
            let mut changed = false;
            for &x in &members {
                if !in_set[self.dual[x]] {
                    in_set[self.dual[x]] = true;
                    changed = true;
                }
                for &y in &members {
                    for &(z, _) in &self.rows[x][y] {
                        if !in_set[z] {
                            in_set[z] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Subring { indices: (0..self.rank()).filter(|&i| in_set[i]).collect() }
    }

    pub fn is_closed(&self, indices: &[usize]) -> bool {
        let set: HashSet<usize> = indices.iter().copied().collect();
        if !set.contains(&self.unit) {
            return false;
        }
        for &x in indices {
            if !set.contains(&self.dual[x]) {
                return false;
            }
            for &y in indices {
                if self.rows[x][y].iter().any(|&(z, _)| !set.contains(&z)) {
                    return false;
                }
            }
        }
        true
    }

    /// The adjoint subring: generated by all x (.) dual(x).
    pub fn adjoint_subring(&self) -> Subring {
        let mut seeds = Vec::new();
        for x in 0..self.rank() {
            for &(z, _) in &self.rows[x][self.dual[x]] {
                seeds.push(z);
            }
        }
        self.subring_generated(&seeds)
    }

    /// Universal grading by the quotient of the adjoint action. Faithfulness
    /// and equal component FPdim^2 are verified exactly.
    pub fn universal_grading(&self) -> Result<Grading, Error> {
        let r = self.rank();
        let adj = self.adjoint_subring();
        let mut comp = vec![usize::MAX; r];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for x in 0..r {
            if comp[x] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut orbit = vec![x];
            comp[x] = id;
            let mut queue = vec![x];
            while let Some(y) = queue.pop() {
                for &a in &adj.indices {
                    for &(z, _) in &self.rows[a][y] {
                        if comp[z] == usize::MAX {
                            comp[z] = id;
                            orbit.push(z);
                            queue.push(z);
                        }
                    }
                }
            }
            orbit.sort_unstable();
            components.push(orbit);
        }
        let ncomp = components.len();
        let mut table = vec![vec![usize::MAX; ncomp]; ncomp];
        for x in 0..r {
            for y in 0..r {
                for &(z, _) in &self.rows[x][y] {
                    let (a, b, c) = (comp[x], comp[y], comp[z]);
                    if table[a][b] == usize::MAX {
                        table[a][b] = c;
                    } else if table[a][b] != c {
                        return Err(Error::Invalid(format!(
                            "grading is not single-valued at components ({a},{b})"
                        )));
                    }
                }
            }
        }
        let e = comp[self.unit];
        let group = abelian::decompose(ncomp, e, &|a, b| table[a][b]);
        let dim0 = component_fpdim(self, &components[0]);
        for c in components.iter().skip(1) {
            if component_fpdim(self, c) != dim0 {
                return Err(Error::Invalid("graded components of unequal FPdim^2".into()));
            }
        }
        Ok(Grading { group, component_index: comp, components })
    }

    pub fn pointed_subring(&self) -> Subring {
        Subring { indices: (0..self.rank()).filter(|&x| self.fpdim[x].is_one()).collect() }
    }

    pub fn rational_subring(&self) -> Subring {
        Subring { indices: (0..self.rank()).filter(|&x| self.fpdim[x].is_rational()).collect() }
    }

    pub fn distinguished_subrings(&self) -> Distinguished {
        Distinguished {
            pointed: self.pointed_subring(),
            adjoint: self.adjoint_subring(),
            rational: self.rational_subring(),
        }
    }

    /// Group structure on the invertible objects, with the participating
    /// object indices.
    pub fn invertibles_group(&self) -> Result<(AbelianGroup, Vec<usize>), Error> {
        let inv: Vec<usize> = (0..self.rank()).filter(|&x| self.fpdim[x].is_one()).collect();
        let pos: HashMap<usize, usize> = inv.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut table = vec![vec![0usize; inv.len()]; inv.len()];
        for (i, &x) in inv.iter().enumerate() {
            for (j, &y) in inv.iter().enumerate() {
                let row = &self.rows[x][y];
                if row.len() != 1 || row[0].1 != 1 {
                    return Err(Error::Invalid("invertibles do not close into a group".into()));
                }
                let z = row[0].0;
                let Some(&k) = pos.get(&z) else {
                    return Err(Error::Invalid("invertible product left the pointed part".into()));
                };
                table[i][j] = k;
            }
        }
        let e = pos[&self.unit];
        let group = abelian::decompose(inv.len(), e, &|a, b| table[a][b]);
        Ok((group, inv))
    }

    /// New ring on a closed index subset, inheriting labels and dimensions.
    pub fn restrict(&self, sub: &Subring) -> Result<FusionRing, Error> {
        if !self.is_closed(&sub.indices) {
            return Err(Error::Invalid("subset is not a subring".into()));
        }
        let back: HashMap<usize, usize> =
            sub.indices.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let labels = sub.indices.iter().map(|&x| self.labels[x].clone()).collect();
        let dual = sub.indices.iter().map(|&x| back[&self.dual[x]]).collect();
        let mut entries = Vec::new();
        for (i, &x) in sub.indices.iter().enumerate() {
            for (j, &y) in sub.indices.iter().enumerate() {
                for &(z, m) in &self.rows[x][y] {
                    entries.push((i, j, back[&z], m));
                }
            }
        }
        let fpdim = sub.indices.iter().map(|&x| self.fpdim[x].clone()).collect();
        FusionRing::with_fpdim(labels, back[&self.unit], dual, &entries, fpdim)
    }

    pub fn sparse_entries(&self) -> Vec<(usize, usize, usize, u64)> {
        let mut out = Vec::new();
        for x in 0..self.rank() {
            for y in 0..self.rank() {
                for &(z, m) in &self.rows[x][y] {
                    out.push((x, y, z, m));
                }
            }
        }
        out
    }
}

fn component_fpdim(ring: &FusionRing, objects: &[usize]) -> Cyc {
    let mut acc = Cyc::zero();
    for &x in objects {
        acc = acc.add(&ring.fpdim(x).mul(ring.fpdim(x)));
    }
    acc
}

#[derive(Debug, Clone, Serialize)]
pub struct Distinguished {
    pub pointed: Subring,
    pub adjoint: Subring,
    pub rational: Subring,
}

/// The trivial rank-1 ring.
pub fn trivial_ring() -> FusionRing {
    FusionRing::with_fpdim(vec!["e".into()], 0, vec![0], &[(0, 0, 0, 1)], vec![Cyc::one()])
        .expect("trivial ring")
}

/// Pointed ring on an elementary abelian 2-group of rank n (bitmask order).
pub fn pointed_e_ring(n: usize) -> FusionRing {
    let size = 1usize << n;
    let labels = (0..size).map(e_group_label).collect();
    let dual: Vec<usize> = (0..size).collect();
    let mut entries = Vec::new();
    for x in 0..size {
        for y in 0..size {
            entries.push((x, y, x ^ y, 1));
        }
    }
    let fpdim = vec![Cyc::one(); size];
    FusionRing::with_fpdim(labels, 0, dual, &entries, fpdim).expect("pointed ring")
}

/// Label for an element of E_n as a sum of generators, e.g. "g1+g2".
pub fn e_group_label(g: usize) -> String {
    if g == 0 {
        return "e".into();
    }
    let mut parts = Vec::new();
    let mut bit = 0;
    let mut m = g;
    while m > 0 {
        if m & 1 == 1 {
            parts.push(format!("g{}", bit + 1));
        }
        m >>= 1;
        bit += 1;
    }
    parts.join("+")
}

// JSON form per the external interface:
// {"labels": [...], "unit": i, "dual": [...], "N": [[x,y,z,n], ...], "fpdim": [...]}
#[derive(Serialize, Deserialize)]
struct RingJson {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    #[serde(rename = "N")]
    n: Vec<(usize, usize, usize, u64)>,
    fpdim: Vec<Cyc>,
}

impl Serialize for FusionRing {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RingJson {
            labels: self.labels.clone(),
            unit: self.unit,
            dual: self.dual.clone(),
            n: self.sparse_entries(),
            fpdim: self.fpdim.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FusionRing {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RingJson::deserialize(deserializer)?;
        FusionRing::with_fpdim(raw.labels, raw.unit, raw.dual, &raw.n, raw.fpdim)
            .map_err(D::Error::custom)
    }
}

/// The value of a rational Cyc as an i64, when it is one.
pub fn as_integer(c: &Cyc) -> Option<i64> {
    use num_traits::{One, ToPrimitive};
    let r = c.rational_value()?;
    if r.denom().is_one() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn rat_cyc(num: i64, den: i64) -> Cyc {
    Cyc::from_rat(rat(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tambara;

    #[test]
    fn pointed_ring_validates() {
        let r = pointed_e_ring(2);
        assert_eq!(r.rank(), 4);
        let v = r.validate();
        assert!(v.all_passed(), "{v:?}");
        assert!(r.fpdims().iter().all(|d| d.is_one()));
        let g = r.universal_grading().unwrap();
        assert_eq!(g.group.factors, vec![2, 2]);
        assert_eq!(g.components.len(), 4);
    }

    #[test]
    fn broken_duality_is_flagged() {
        // x marked self-dual but N(x,x,1) = 0.
        let labels = vec!["e".to_string(), "x".to_string()];
        let entries = vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)];
        let mut ring = FusionRing::assemble(labels, 0, vec![0, 1], &entries).unwrap();
        ring.fpdim = vec![Cyc::one(), Cyc::one()];
        let v = ring.validate();
        assert!(!v.duality.passed);
        assert!(v.duality.counterexample.is_some());
    }

    #[test]
    fn ty_ring_passes_and_grades() {
        let r = tambara::ty_ring(2).unwrap();
        let v = r.validate();
        assert!(v.all_passed(), "{v:?}");
        assert_eq!(r.fpdim(4), &Cyc::from_int(2));
        let g = r.universal_grading().unwrap();
        assert_eq!(g.group.factors, vec![2]);
        assert_eq!(g.components.len(), 2);
        let whole = r.subring_generated(&[4]);
        assert_eq!(whole.rank(), 5);
        let triv = r.subring_generated(&[0]);
        assert!(triv.is_trivial());
        let d = r.distinguished_subrings();
        assert_eq!(d.pointed.indices, vec![0, 1, 2, 3]);
        assert_eq!(d.adjoint.indices, vec![0, 1, 2, 3]);
        let (grp, objs) = r.invertibles_group().unwrap();
        assert_eq!(grp.factors, vec![2, 2]);
        assert_eq!(objs.len(), 4);
    }

    #[test]
    fn ty3_dims_are_2sqrt2() {
        let r = tambara::ty_ring(3).unwrap();
        assert_eq!(r.rank(), 9);
        let want = Cyc::sqrt2().mul(&Cyc::from_int(2));
        assert_eq!(r.fpdim(8), &want);
        let (grp, _) = r.invertibles_group().unwrap();
        assert_eq!(grp.factors, vec![2, 2, 2]);
        // FPdim(R) = |grading group| * FPdim(adjoint).
        let g = r.universal_grading().unwrap();
        let adj = r.adjoint_subring();
        let lhs = r.global_fpdim();
        let rhs = adj.fpdim(&r).mul(&Cyc::from_int(g.group.order() as i64));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn perron_recognition_recomputes_dims() {
        // Numeric Perron roots recognized exactly in Z + Z sqrt2, then
        // verified as a homomorphism.
        let ty3 = tambara::ty_ring(3).unwrap();
        assert_eq!(ty3.perron_dims().unwrap(), ty3.fpdims().to_vec());
        let es31 = crate::extraspecial::extraspecial_ring(3, 1).unwrap();
        assert_eq!(es31.perron_dims().unwrap(), es31.fpdims().to_vec());
        let pointed = pointed_e_ring(3);
        assert!(pointed.perron_dims().unwrap().iter().all(|d| d.is_one()));
    }

    #[test]
    fn restriction_keeps_data() {
        let r = tambara::ty_ring(2).unwrap();
        let sub = r.subring_generated(&[1]);
        let small = r.restrict(&sub).unwrap();
        assert_eq!(small.rank(), 2);
        assert!(small.validate().all_passed());
    }

    #[test]
    fn json_round_trip() {
        let r = tambara::ty_ring(1).unwrap();
        let js = serde_json::to_string(&r).unwrap();
        let back: FusionRing = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
    }
}
