//! Brute-force oracles shared by the integration tests. None of these go
//! through the crate's Murnaghan–Nakayama or series code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use confchar_core::symfunc::Partition;
use confchar_core::Rational;
use num_traits::{One, Zero};

type Monomial = Vec<u32>;
type Poly = BTreeMap<Monomial, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            *out.entry(m).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

/// Cycle type of a permutation of `0..n`.
pub fn cycle_type(p: &[usize]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// Irreducible character `χ^μ(λ)` by the Frobenius formula: the coefficient
/// of `x^{μ+δ}` in `a_δ(x) · p_λ(x)` with `ℓ(μ)` variables.
pub fn frobenius_character(mu: &Partition, lambda: &Partition) -> i64 {
    assert_eq!(mu.weight(), lambda.weight());
    if mu.is_empty() {
        return 1;
    }
    let r = mu.len();
    let mut vandermonde = Poly::new();
    for (perm, sign) in permutations(r) {
        let m: Monomial = (0..r).map(|i| (r - 1 - perm[i]) as u32).collect();
        *vandermonde.entry(m).or_insert(0) += sign;
    }
    let mut product = vandermonde;
    for &part in lambda.parts() {
        let mut power_sum = Poly::new();
        for i in 0..r {
            let mut m = vec![0u32; r];
            m[i] = part;
            power_sum.insert(m, 1);
        }
        product = poly_mul(&product, &power_sum);
    }
    let target: Monomial = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (r - 1 - i) as u32)
        .collect();
    product.get(&target).copied().unwrap_or(0)
}

/// `z_λ = n! / |class of cycle type λ|`, counting permutations of `S_n`.
pub fn centralizer_orders(n: usize) -> BTreeMap<Partition, Rational> {
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    let perms = permutations(n);
    let total = perms.len() as i64;
    for (p, _) in &perms {
        *counts.entry(cycle_type(p)).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|(l, c)| (l, Rational::new(total.into(), c.into())))
        .collect()
}

/// Solves `A x = b` over the rationals by Gauss–Jordan elimination.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Rational::one() / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
                let delta = &factor * &b[col];
                b[r] -= delta;
            }
        }
    }
    Some(b)
}
