//! Structure of finite abelian groups given by a raw multiplication table:
//! invariant-factor decomposition with explicit coordinates per element.

use serde::Serialize;

/// A finite abelian group presented as a product of cyclic factors
/// Z/d1 x Z/d2 x ... with d1 | d2 | ... (invariant factors), together with
/// coordinates for each element of the original table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub factors: Vec<u64>,
    /// coords[element] = one coordinate per factor.
    pub coords: Vec<Vec<u64>>,
}

impl AbelianGroup {
    pub fn order(&self) -> u64 {
        self.factors.iter().product::<u64>().max(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Display like "Z/2 x Z/4" or "1" for the trivial group.
    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            "1".into()
        } else {
            self.factors.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" x ")
        }
    }

    pub fn is_elementary_abelian(&self, p: u64) -> bool {
        self.factors.iter().all(|&d| d == p)
    }
}

/// Decompose the abelian group with elements 0..n, identity `e`, and
/// multiplication `mul` into invariant factors with coordinates.
pub fn decompose(n: usize, e: usize, mul: &dyn Fn(usize, usize) -> usize) -> AbelianGroup {
    assert!(n >= 1);
    if n == 1 {
        return AbelianGroup { factors: vec![], coords: vec![vec![]] };
    }
    // Greedy basis: repeatedly adjoin an element of maximal order in the
    // quotient by the span so far, adjusted to have a power landing at the
    // identity rather than inside the span. Groups here are tiny.
    let mut basis: Vec<usize> = Vec::new();
    let mut basis_orders: Vec<u64> = Vec::new();
    // span: element -> coordinates over current basis.
    let mut span: std::collections::HashMap<usize, Vec<u64>> = std::collections::HashMap::new();
    span.insert(e, vec![]);

    while span.len() < n {
        // Candidate with maximal order in G / span.
        let mut best: Option<(usize, u64)> = None;
        for g in 0..n {
            if span.contains_key(&g) {
                continue;
            }
            // Order of g modulo the span.
            let mut k = 1u64;
            let mut x = g;
            while !span.contains_key(&x) {
                x = mul(x, g);
                k += 1;
            }
            if best.as_ref().is_none_or(|&(_, bk)| k > bk) {
                best = Some((g, k));
            }
        }
        let (mut g, k) = best.expect("nonempty complement");
        // x = g^k lies in span; for abelian p-group theory to give a direct
        // factor we need g^k = e after adjusting by span elements. Since the
        // ambient group is abelian and k is the order mod span, g^k has a
        // k-th root in the span whenever orders allow; search directly.
        let gk = {
            let mut x = g;
            for _ in 1..k {
                x = mul(x, g);
            }
            x
        };
        if gk != e {
            // Find s in span with (g*s)^k = e and g*s still of order k mod span.
            let mut fixed = false;
            let span_elems: Vec<usize> = span.keys().copied().collect();
            for &s in &span_elems {
                let cand = mul(g, s);
                let mut x = cand;
                let mut ord = 1u64;
                while x != e && ord <= (n as u64) {
                    x = mul(x, cand);
                    ord += 1;
                }
                if x == e && ord == k {
                    g = cand;
                    fixed = true;
                    break;
                }
            }
            assert!(fixed, "maximal-order candidate must admit a span correction");
        }
        // Adjoin g as a new basis element of order k.
        basis.push(g);
        basis_orders.push(k);
        let old: Vec<(usize, Vec<u64>)> = span.iter().map(|(a, c)| (*a, c.clone())).collect();
        for (elem, coord) in old {
            let mut x = elem;
            for j in 1..k {
                x = mul(x, g);
                let mut c = coord.clone();
                c.push(j);
                span.insert(x, c);
            }
        }
        for c in span.values_mut() {
            if c.len() < basis.len() {
                c.push(0);
            }
        }
    }

    // Merge cyclic factors into invariant-factor form: sort prime-power
    // components and recombine largest-with-largest.
    let mut primaries: Vec<(u64, usize)> = Vec::new(); // (p^a, basis index)
    let mut basis_primary: Vec<Vec<(u64, u64)>> = Vec::new(); // per basis: (p^a, crt multiplier exponent)
    for (bi, &ord) in basis_orders.iter().enumerate() {
        let mut m = ord;
        let mut parts = Vec::new();
        let mut p = 2u64;
        while p * p <= m {
            if m % p == 0 {
                let mut pa = 1u64;
                while m % p == 0 {
                    m /= p;
                    pa *= p;
                }
                parts.push(pa);
            }
            p += 1;
        }
        if m > 1 {
            parts.push(m);
        }
        for &pa in &parts {
            primaries.push((pa, bi));
        }
        basis_primary.push(parts.iter().map(|&pa| (pa, ord / pa)).collect());
    }
    // Group primaries by prime, sort descending, then zip ranks across primes.
    use std::collections::BTreeMap;
    let mut by_prime: BTreeMap<u64, Vec<(u64, usize)>> = BTreeMap::new();
    for (pa, bi) in primaries {
        let p = smallest_prime(pa);
        by_prime.entry(p).or_default().push((pa, bi));
    }
    for v in by_prime.values_mut() {
        v.sort_by(|a, b| b.0.cmp(&a.0));
    }
    let depth = by_prime.values().map(|v| v.len()).max().unwrap_or(0);
    let mut factors = Vec::new();
    let mut factor_parts: Vec<Vec<(u64, usize)>> = Vec::new();
    for rank in 0..depth {
        let mut d = 1u64;
        let mut parts = Vec::new();
        for v in by_prime.values() {
            if let Some(&(pa, bi)) = v.get(rank) {
                d *= pa;
                parts.push((pa, bi));
            }
        }
        factors.push(d);
        factor_parts.push(parts);
    }
    factors.reverse();
    factor_parts.reverse();

    // Coordinates: element coordinate in factor = CRT-combine of its
    // coordinates in the constituent primary cyclics.
    let coords: Vec<Vec<u64>> = (0..n)
        .map(|elem| {
            let base_coord = &span[&elem];
            factor_parts
                .iter()
                .zip(factors.iter())
                .map(|(parts, &d)| {
                    // Within factor Z/d = prod Z/p^a: coordinate via CRT.
                    let mut residues = Vec::new();
                    for &(pa, bi) in parts {
                        // Coordinate of elem along basis bi, projected to its p^a part.
                        let c = base_coord[bi];
                        let ord = basis_orders[bi];
                        let cof = ord / pa;
                        // g_bi^c ; primary component exponent = c * cof^{-1}-ish:
                        // the p^a-primary part of Z/ord is generated by g^(ord/pa),
                        // and c mod pa after multiplying by the right unit. Use
                        // direct projection: exponent of primary generator is
                        // (c * inv(cof) mod pa) where cof invertible mod pa.
                        let inv = mod_inverse(cof % pa, pa);
                        residues.push(((c % pa) * inv) % pa);
                    }
                    // CRT combine residues into Z/d.
                    let mut x = 0u64;
                    let mut modulus = 1u64;
                    for (&(pa, _), &r) in parts.iter().zip(residues.iter()) {
                        // Solve x = r mod pa, keeping x mod modulus.
                        while x % pa != r {
                            x += modulus;
                        }
                        modulus *= pa;
                    }
                    debug_assert_eq!(modulus, d);
                    x
                })
                .collect()
        })
        .collect();

    AbelianGroup { factors, coords }
}

fn smallest_prime(mut n: u64) -> u64 {
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 1;
    }
    n = n.max(2);
    n
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // m is a prime power here and gcd(a, m) = 1; brute force is fine.
    if m == 1 {
        return 0;
    }
    (1..m).find(|&x| (a * x) % m == 1).expect("unit mod m")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups() {
        let g = decompose(6, 0, &|a, b| (a + b) % 6);
        assert_eq!(g.factors, vec![6]);
        assert_eq!(g.order(), 6);
        // coords must be a group isomorphism onto Z/6.
        for a in 0..6 {
            for b in 0..6 {
                let c = (a + b) % 6;
                assert_eq!((g.coords[a][0] + g.coords[b][0]) % 6, g.coords[c][0]);
            }
        }
    }

    #[test]
    fn klein_four() {
        let g = decompose(4, 0, &|a, b| a ^ b);
        assert_eq!(g.factors, vec![2, 2]);
        assert!(g.is_elementary_abelian(2));
    }

    #[test]
    fn z2_x_z4() {
        // Elements (a, b) in Z/2 x Z/4 encoded as a*4 + b.
        let mul = |x: usize, y: usize| {
            let (a1, b1) = (x / 4, x % 4);
            let (a2, b2) = (y / 4, y % 4);
            ((a1 + a2) % 2) * 4 + (b1 + b2) % 4
        };
        let g = decompose(8, 0, &mul);
        assert_eq!(g.factors, vec![2, 4]);
        for x in 0..8 {
            for y in 0..8 {
                let z = mul(x, y);
                for f in 0..2 {
                    assert_eq!(
                        (g.coords[x][f] + g.coords[y][f]) % g.factors[f],
                        g.coords[z][f]
                    );
                }
            }
        }
    }

    #[test]
    fn trivial_group() {
        let g = decompose(1, 0, &|_, _| 0);
        assert!(g.is_trivial());
        assert_eq!(g.name(), "1");
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn elementary_abelian_27() {
        let mul = |x: usize, y: usize| {
            let mut out = 0;
            let mut m = 1;
            for _ in 0..3 {
                let a = (x / m) % 3;
                let b = (y / m) % 3;
                out += ((a + b) % 3) * m;
                m *= 3;
            }
            out
        };
        let g = decompose(27, 0, &mul);
        assert_eq!(g.factors, vec![3, 3, 3]);
    }
}
